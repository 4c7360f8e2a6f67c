//! Finite abelian groups as products of cyclic factors.
//!
//! Elements are residue vectors; internally the operation is written
//! additively, while user-facing names are multiplicative (`e`, `a`,
//! `b`, `ab`, `a2b3`, ...). Enumeration is lexicographic on residue
//! vectors with the identity first, so element indices are stable and
//! can be used as table keys throughout the crate.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

pub const ENUMERATION_BOUND: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    pub orders: Vec<u32>,
}

/// An element as a residue vector, `residues[i] in [0, orders[i])`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub residues: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    pub parent: GroupSpec,
    /// Sorted element indices; always contains the identity (index 0).
    pub members: Vec<usize>,
}

pub fn make_group(orders: &[u32]) -> Result<GroupSpec> {
    if orders.iter().any(|&o| o < 2) {
        return Err(Error::InvalidGroup(format!(
            "cyclic factor orders must be >= 2, got {orders:?}"
        )));
    }
    Ok(GroupSpec {
        orders: orders.to_vec(),
    })
}

impl GroupSpec {
    pub fn trivial() -> Self {
        GroupSpec { orders: vec![] }
    }

    pub fn order(&self) -> usize {
        self.orders.iter().map(|&o| o as usize).product()
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Residue vector of the element with the given index.
    pub fn element(&self, mut idx: usize) -> GroupElement {
        let mut residues = vec![0u32; self.orders.len()];
        for i in (0..self.orders.len()).rev() {
            let o = self.orders[i] as usize;
            residues[i] = (idx % o) as u32;
            idx /= o;
        }
        GroupElement { residues }
    }

    pub fn index_of(&self, e: &GroupElement) -> usize {
        assert_eq!(e.residues.len(), self.orders.len());
        let mut idx = 0usize;
        for (r, &o) in e.residues.iter().zip(&self.orders) {
            debug_assert!(*r < o);
            idx = idx * o as usize + *r as usize;
        }
        idx
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.order()
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        let a = self.element(x);
        let b = self.element(y);
        let residues = a
            .residues
            .iter()
            .zip(&b.residues)
            .zip(&self.orders)
            .map(|((&p, &q), &o)| (p + q) % o)
            .collect();
        self.index_of(&GroupElement { residues })
    }

    pub fn neg(&self, x: usize) -> usize {
        let a = self.element(x);
        let residues = a
            .residues
            .iter()
            .zip(&self.orders)
            .map(|(&p, &o)| if p == 0 { 0 } else { o - p })
            .collect();
        self.index_of(&GroupElement { residues })
    }

    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg(y))
    }

    /// n-fold sum of x with itself (n >= 0).
    pub fn mul_int(&self, x: usize, n: u32) -> usize {
        let a = self.element(x);
        let residues = a
            .residues
            .iter()
            .zip(&self.orders)
            .map(|(&p, &o)| ((p as u64 * n as u64) % o as u64) as u32)
            .collect();
        self.index_of(&GroupElement { residues })
    }

    pub fn element_order(&self, x: usize) -> u32 {
        let e = self.element(x);
        e.residues
            .iter()
            .zip(&self.orders)
            .map(|(&r, &o)| o / num::integer::gcd(r, o).max(1))
            .fold(1u32, num::integer::lcm)
    }

    pub fn exponent(&self) -> u32 {
        self.orders.iter().copied().fold(1u32, num::integer::lcm)
    }

    pub fn is_exponent_two(&self) -> bool {
        self.exponent() <= 2
    }

    /// Index of the i-th canonical generator (1 in slot i, 0 elsewhere).
    pub fn generator(&self, i: usize) -> usize {
        let mut residues = vec![0u32; self.orders.len()];
        residues[i] = 1;
        self.index_of(&GroupElement { residues })
    }

    /// Multiplicative name: identity is `e`; factors use letters a, b, c, ...
    /// with a power suffix when the exponent exceeds 1.
    pub fn name(&self, idx: usize) -> String {
        let e = self.element(idx);
        if e.residues.iter().all(|&r| r == 0) {
            return "e".to_string();
        }
        let mut s = String::new();
        for (i, &r) in e.residues.iter().enumerate() {
            if r == 0 {
                continue;
            }
            let letter = (b'a' + (i as u8 % 26)) as char;
            s.push(letter);
            if r > 1 {
                s.push_str(&r.to_string());
            }
        }
        s
    }

    /// Product of two group specs (direct product).
    pub fn product(&self, other: &GroupSpec) -> GroupSpec {
        let mut orders = self.orders.clone();
        orders.extend_from_slice(&other.orders);
        GroupSpec { orders }
    }

    /// Pair embedding for a direct product: (x, y) -> index in product.
    pub fn product_index(&self, other: &GroupSpec, x: usize, y: usize) -> usize {
        x * other.order() + y
    }

    /// Parse "Z2^2", "Z4", "Z2xZ4", "Z2^3xZ4", case-insensitive.
    pub fn parse(s: &str) -> Result<GroupSpec> {
        let mut orders = Vec::new();
        for part in s.split(['x', 'X']) {
            let part = part.trim();
            let rest = part
                .strip_prefix('Z')
                .or_else(|| part.strip_prefix('z'))
                .ok_or_else(|| Error::Parse(format!("bad group factor {part:?} in {s:?}")))?;
            let (base, pow) = match rest.split_once('^') {
                Some((b, p)) => (
                    b.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad order in {part:?}")))?,
                    p.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad power in {part:?}")))?,
                ),
                None => (
                    rest.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad order in {part:?}")))?,
                    1,
                ),
            };
            for _ in 0..pow {
                orders.push(base);
            }
        }
        make_group(&orders)
    }

    /// Canonical string form, e.g. "Z2^2", "Z2xZ4".
    pub fn display_name(&self) -> String {
        if self.orders.is_empty() {
            return "Z1".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.orders.len() {
            let o = self.orders[i];
            let mut j = i;
            while j < self.orders.len() && self.orders[j] == o {
                j += 1;
            }
            let count = j - i;
            if count == 1 {
                parts.push(format!("Z{o}"));
            } else {
                parts.push(format!("Z{o}^{count}"));
            }
            i = j;
        }
        parts.join("x")
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_name())
    }
}

impl Subgroup {
    pub fn new(parent: &GroupSpec, mut members: Vec<usize>) -> Result<Subgroup> {
        members.sort_unstable();
        members.dedup();
        let sg = Subgroup {
            parent: parent.clone(),
            members,
        };
        sg.verify()?;
        Ok(sg)
    }

    fn verify(&self) -> Result<()> {
        if !self.members.contains(&0) {
            return Err(Error::InvalidGroup("subgroup missing identity".into()));
        }
        for &x in &self.members {
            for &y in &self.members {
                if self.members.binary_search(&self.parent.add(x, y)).is_err() {
                    return Err(Error::InvalidGroup("subgroup not closed".into()));
                }
            }
        }
        if self.parent.order() % self.members.len() != 0 {
            return Err(Error::InvalidGroup("Lagrange violation".into()));
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// Canonical representative (smallest index) of the coset of x.
    pub fn coset_rep(&self, x: usize) -> usize {
        self.members
            .iter()
            .map(|&m| self.parent.add(x, m))
            .min()
            .unwrap()
    }
}

/// All subgroups of index 1 or 2, via kernels of characters into {+-1}.
/// An index-2 subgroup is the kernel of a nontrivial homomorphism to Z2;
/// such homomorphisms send each cyclic generator of even order to a sign.
pub fn index_le2_subgroups(g: &GroupSpec) -> Result<Vec<Subgroup>> {
    if g.order() > ENUMERATION_BOUND {
        return Err(Error::SizeBound(format!(
            "group order {} exceeds enumeration bound {}",
            g.order(),
            ENUMERATION_BOUND
        )));
    }
    let mut out = vec![Subgroup::new(g, g.elements().collect())?];
    let even_slots: Vec<usize> = (0..g.orders.len())
        .filter(|&i| g.orders[i] % 2 == 0)
        .collect();
    for mask in 1u64..(1u64 << even_slots.len()) {
        let members: Vec<usize> = g
            .elements()
            .filter(|&x| {
                let e = g.element(x);
                let mut acc = 0u32;
                for (bit, &slot) in even_slots.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        acc += e.residues[slot];
                    }
                }
                acc % 2 == 0
            })
            .collect();
        out.push(Subgroup::new(g, members)?);
    }
    // Canonical order: by decreasing size, then member lists.
    out.sort_by(|a, b| b.members.len().cmp(&a.members.len()).then(a.members.cmp(&b.members)));
    out.dedup_by(|a, b| a.members == b.members);
    Ok(out)
}

/// The two-torsion subgroup {t : 2t = 0}.
pub fn two_torsion(g: &GroupSpec) -> Subgroup {
    let members: Vec<usize> = g.elements().filter(|&x| g.mul_int(x, 2) == 0).collect();
    Subgroup::new(g, members).expect("two-torsion is always a subgroup")
}

/// Enumerate all automorphisms of a small abelian group by choosing
/// generator images of compatible order and keeping the bijective maps.
/// Returns each automorphism as a full index-to-index table.
pub fn automorphisms(g: &GroupSpec) -> Result<Vec<Vec<usize>>> {
    if g.order() > 64 {
        return Err(Error::SizeBound(format!(
            "automorphism enumeration capped at order 64, got {}",
            g.order()
        )));
    }
    let n = g.order();
    let rank = g.rank();
    let mut out = Vec::new();
    let mut images = vec![0usize; rank];
    fn rec(
        g: &GroupSpec,
        slot: usize,
        images: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        n: usize,
    ) {
        if slot == g.rank() {
            // Build the full map and check bijectivity.
            let mut table = vec![0usize; n];
            let mut seen = vec![false; n];
            let mut ok = true;
            for x in 0..n {
                let e = g.element(x);
                let mut acc = 0usize;
                for (i, &r) in e.residues.iter().enumerate() {
                    acc = g.add(acc, g.mul_int(images[i], r));
                }
                table[x] = acc;
                if seen[acc] {
                    ok = false;
                    break;
                }
                seen[acc] = true;
            }
            if ok {
                out.push(table);
            }
            return;
        }
        let want = g.orders[slot];
        for cand in 0..n {
            // The image order must divide the generator order; equality is
            // necessary for the map to be bijective on that factor's span,
            // and the final bijectivity check catches the rest.
            if g.element_order(cand) == want {
                images[slot] = cand;
                rec(g, slot + 1, images, out, n);
            }
        }
    }
    rec(g, 0, &mut images, &mut out, n);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_rejects_small_orders() {
        assert!(make_group(&[1]).is_err());
        assert!(make_group(&[2, 1]).is_err());
    }

    #[test]
    fn z2xz2_elements() {
        let g = make_group(&[2, 2]).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.name(0), "e");
        assert_eq!(g.name(g.index_of(&GroupElement { residues: vec![1, 0] })), "a");
        assert_eq!(g.name(g.index_of(&GroupElement { residues: vec![0, 1] })), "b");
        assert_eq!(g.name(g.index_of(&GroupElement { residues: vec![1, 1] })), "ab");
    }

    #[test]
    fn z4_structure() {
        let g = make_group(&[4]).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.element_order(1), 4);
        assert_eq!(g.element_order(2), 2);
        assert_eq!(g.add(3, 2), 1);
        assert_eq!(g.name(2), "a2");
    }

    #[test]
    fn group_laws_exhaustive_small() {
        for orders in [vec![2u32], vec![4], vec![2, 2], vec![2, 4], vec![2, 2, 2]] {
            let g = make_group(&orders).unwrap();
            for x in g.elements() {
                assert_eq!(g.add(0, x), x);
                assert_eq!(g.add(x, g.neg(x)), 0);
                for y in g.elements() {
                    assert_eq!(g.add(x, y), g.add(y, x));
                    for z in g.elements() {
                        assert_eq!(g.add(g.add(x, y), z), g.add(x, g.add(y, z)));
                    }
                }
            }
        }
    }

    #[test]
    fn subgroups_of_z2xz2() {
        let g = make_group(&[2, 2]).unwrap();
        let subs = index_le2_subgroups(&g).unwrap();
        assert_eq!(subs.len(), 4);
        assert_eq!(subs[0].index(), 1);
        assert!(subs[1..].iter().all(|s| s.index() == 2 && s.order() == 2));
    }

    #[test]
    fn subgroups_of_z4() {
        let g = make_group(&[4]).unwrap();
        let subs = index_le2_subgroups(&g).unwrap();
        assert_eq!(subs.len(), 2);
        assert_eq!(subs[1].members, vec![0, 2]);
    }

    #[test]
    fn subgroups_of_z2() {
        let g = make_group(&[2]).unwrap();
        let subs = index_le2_subgroups(&g).unwrap();
        assert_eq!(subs.len(), 2);
    }

    #[test]
    fn subgroup_count_of_elementary_groups() {
        // index-<=2 subgroups of Z2^n: 1 + (2^n - 1)
        for n in 1..=4usize {
            let g = make_group(&vec![2; n]).unwrap();
            let subs = index_le2_subgroups(&g).unwrap();
            assert_eq!(subs.len(), 1 + ((1 << n) - 1));
        }
    }

    #[test]
    fn two_torsion_sizes() {
        let g = make_group(&[2, 2]).unwrap();
        assert_eq!(two_torsion(&g).order(), 4);
        let g = make_group(&[4]).unwrap();
        assert_eq!(two_torsion(&g).members, vec![0, 2]);
        let g = make_group(&[2, 4]).unwrap();
        let t2 = two_torsion(&g);
        assert_eq!(t2.order(), 4);
        // {(0,0),(1,0),(0,2),(1,2)}
        assert!(t2.contains(g.index_of(&GroupElement { residues: vec![0, 2] })));
        assert!(t2.contains(g.index_of(&GroupElement { residues: vec![1, 2] })));
    }

    #[test]
    fn two_torsion_order_counts_even_factors() {
        for orders in [vec![2u32, 3], vec![4, 6], vec![2, 2, 5]] {
            let g = make_group(&orders).unwrap();
            let evens = orders.iter().filter(|&&o| o % 2 == 0).count() as u32;
            assert_eq!(two_torsion(&g).order(), 1usize << evens);
        }
    }

    #[test]
    fn automorphism_counts() {
        // |GL(2,2)| = 6
        let g = make_group(&[2, 2]).unwrap();
        assert_eq!(automorphisms(&g).unwrap().len(), 6);
        // Aut(Z4) = {1, 3}
        let g = make_group(&[4]).unwrap();
        assert_eq!(automorphisms(&g).unwrap().len(), 2);
    }

    #[test]
    fn parse_round_trip() {
        for s in ["Z2^2", "Z4", "Z2xZ4", "Z2^3"] {
            let g = GroupSpec::parse(s).unwrap();
            assert_eq!(g.display_name(), s);
        }
    }
}
