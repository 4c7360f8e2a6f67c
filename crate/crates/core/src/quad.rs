//! Quadratic forms mu : T -> {+-1} on finite abelian 2-groups, their
//! polarizations, radicals, Arf invariants, and equivalence.

use crate::group::{self, GroupSpec, Subgroup};
use crate::{Error, Result};
use std::fmt;

/// A {+-1}-valued function on a group of exponent <= 2 with mu(e) = +1,
/// stored as signs indexed by element index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticForm {
    pub group: GroupSpec,
    pub values: Vec<i8>,
}

/// An alternating bicharacter beta : T x T -> {+-1}, as a sign table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bicharacter {
    pub group: GroupSpec,
    pub values: Vec<Vec<i8>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArfValue {
    Plus,
    Zero,
    Minus,
}

impl ArfValue {
    pub fn as_i8(self) -> i8 {
        match self {
            ArfValue::Plus => 1,
            ArfValue::Zero => 0,
            ArfValue::Minus => -1,
        }
    }

    pub fn from_i8(v: i8) -> ArfValue {
        match v.signum() {
            1 => ArfValue::Plus,
            -1 => ArfValue::Minus,
            _ => ArfValue::Zero,
        }
    }
}

impl fmt::Display for ArfValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ArfValue::Plus => "+1",
            ArfValue::Zero => "0",
            ArfValue::Minus => "-1",
        };
        write!(f, "{s}")
    }
}

/// Shape of the radical of an alternating bicharacter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadicalType {
    /// Trivial radical {e}.
    TypeI,
    /// Radical of order 2; its nontrivial element is f_beta.
    TypeII,
    /// Radical of order > 2.
    Other,
}

#[derive(Debug, Clone)]
pub struct RadicalData {
    pub radical: Subgroup,
    pub kind: RadicalType,
    /// For type II: the nontrivial element of the radical.
    pub f_beta: Option<usize>,
}

impl QuadraticForm {
    pub fn new(group: &GroupSpec, values: Vec<i8>) -> Result<QuadraticForm> {
        if !group.is_exponent_two() {
            return Err(Error::UnsupportedExponent(format!(
                "quadratic forms require exponent <= 2, group is {group}"
            )));
        }
        if values.len() != group.order() {
            return Err(Error::NotAQuadraticForm(format!(
                "expected {} values, got {}",
                group.order(),
                values.len()
            )));
        }
        if values.iter().any(|&v| v != 1 && v != -1) {
            return Err(Error::NotAQuadraticForm("values must be +-1".into()));
        }
        if values[0] != 1 {
            return Err(Error::NotAQuadraticForm("mu(e) must be +1".into()));
        }
        Ok(QuadraticForm {
            group: group.clone(),
            values,
        })
    }

    pub fn value(&self, t: usize) -> i8 {
        self.values[t]
    }

    /// The polarization beta(u, v) = mu(uv) mu(u) mu(v). Errors if the
    /// result is not biadditive, i.e. mu was not a quadratic form.
    pub fn polarization(&self) -> Result<Bicharacter> {
        let g = &self.group;
        let n = g.order();
        let mut values = vec![vec![1i8; n]; n];
        for u in 0..n {
            for v in 0..n {
                values[u][v] = self.values[g.add(u, v)] * self.values[u] * self.values[v];
            }
        }
        let beta = Bicharacter {
            group: g.clone(),
            values,
        };
        // Biadditivity in the first slot (symmetry gives the second).
        for u in 0..n {
            for v in 0..n {
                for w in 0..n {
                    if beta.values[g.add(u, v)][w] != beta.values[u][w] * beta.values[v][w] {
                        return Err(Error::NotAQuadraticForm(
                            "polarization is not biadditive".into(),
                        ));
                    }
                }
            }
        }
        Ok(beta)
    }

    /// Radical of the polarization together with its type data.
    pub fn radical(&self) -> Result<RadicalData> {
        let beta = self.polarization()?;
        let g = &self.group;
        let members: Vec<usize> = g
            .elements()
            .filter(|&r| g.elements().all(|u| beta.values[r][u] == 1))
            .collect();
        let radical = Subgroup::new(g, members)?;
        let (kind, f_beta) = match radical.order() {
            1 => (RadicalType::TypeI, None),
            2 => (RadicalType::TypeII, Some(radical.members[1])),
            _ => (RadicalType::Other, None),
        };
        Ok(RadicalData {
            radical,
            kind,
            f_beta,
        })
    }

    /// A form is regular when its polarization is of type I, or of type
    /// II with mu(f_beta) = -1.
    pub fn is_regular(&self) -> Result<bool> {
        let rd = self.radical()?;
        Ok(match rd.kind {
            RadicalType::TypeI => true,
            RadicalType::TypeII => self.values[rd.f_beta.unwrap()] == -1,
            RadicalType::Other => false,
        })
    }

    /// Arf invariant: the sign of #mu^{-1}(+1) - #mu^{-1}(-1).
    pub fn arf(&self) -> ArfValue {
        let sum: i64 = self.values.iter().map(|&v| v as i64).sum();
        ArfValue::from_i8(sum.signum() as i8)
    }

    /// Count of (+1)-values and (-1)-values.
    pub fn value_counts(&self) -> (usize, usize) {
        let plus = self.values.iter().filter(|&&v| v == 1).count();
        (plus, self.values.len() - plus)
    }

    /// Orthogonal sum on the direct product group.
    pub fn orthogonal_sum(&self, other: &QuadraticForm) -> Result<QuadraticForm> {
        let g = self.group.product(&other.group);
        let mut values = Vec::with_capacity(g.order());
        for x in 0..self.group.order() {
            for y in 0..other.group.order() {
                values.push(self.values[x] * other.values[y]);
            }
        }
        QuadraticForm::new(&g, values)
    }
}

impl Bicharacter {
    pub fn value(&self, u: usize, v: usize) -> i8 {
        self.values[u][v]
    }

    /// Is the bicharacter nondegenerate (trivial radical)?
    pub fn is_nondegenerate(&self) -> bool {
        let g = &self.group;
        g.elements()
            .filter(|&r| g.elements().all(|u| self.values[r][u] == 1))
            .count()
            == 1
    }
}

/// All 2^n quadratic forms on an elementary abelian 2-group of rank n
/// sharing the polarization of `base`: they are base times the sign
/// characters. Deterministic order (character masks ascending).
pub fn forms_with_same_polarization(base: &QuadraticForm) -> Result<Vec<QuadraticForm>> {
    let g = &base.group;
    let rank = g.rank();
    if g.order() > 1 << 12 {
        return Err(Error::SizeBound("form enumeration capped at order 4096".into()));
    }
    let mut out = Vec::with_capacity(1 << rank);
    for mask in 0u64..(1u64 << rank) {
        let values: Vec<i8> = g
            .elements()
            .map(|x| {
                let e = g.element(x);
                let mut sign = base.values[x];
                for (i, &r) in e.residues.iter().enumerate() {
                    if mask >> i & 1 == 1 && r % 2 == 1 {
                        sign = -sign;
                    }
                }
                sign
            })
            .collect();
        out.push(QuadraticForm::new(g, values)?);
    }
    Ok(out)
}

/// Enumerate every map mu : T -> {+-1} with mu(e)=+1 that polarizes to a
/// bicharacter (i.e. every quadratic form) on a small exponent-2 group.
pub fn enumerate_forms(g: &GroupSpec) -> Result<Vec<QuadraticForm>> {
    if !g.is_exponent_two() {
        return Err(Error::UnsupportedExponent(
            "form enumeration requires exponent <= 2".into(),
        ));
    }
    let n = g.order();
    if n > 64 {
        return Err(Error::SizeBound("exhaustive enumeration capped at order 64".into()));
    }
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << (n - 1)) {
        let mut values = vec![1i8; n];
        for x in 1..n {
            if mask >> (x - 1) & 1 == 1 {
                values[x] = -1;
            }
        }
        let q = QuadraticForm {
            group: g.clone(),
            values,
        };
        if q.polarization().is_ok() {
            out.push(q);
        }
    }
    Ok(out)
}

/// Result of an equivalence test: an automorphism table carrying one
/// form to the other, if one exists.
#[derive(Debug, Clone)]
pub struct EquivalenceWitness {
    pub table: Vec<usize>,
}

/// Are two quadratic forms on the same group equivalent under the
/// automorphism group? Fast path: equal value-counts are necessary (and
/// the Arf invariant with radical data is a complete invariant), but the
/// search below is the ground truth and returns a witness.
pub fn equivalent(a: &QuadraticForm, b: &QuadraticForm) -> Result<Option<EquivalenceWitness>> {
    if a.group != b.group {
        return Err(Error::PreconditionViolated(
            "equivalence requires a common group".into(),
        ));
    }
    if a.value_counts() != b.value_counts() {
        return Ok(None);
    }
    for table in group::automorphisms(&a.group)? {
        if a.group.elements().all(|x| b.values[table[x]] == a.values[x]) {
            return Ok(Some(EquivalenceWitness { table }));
        }
    }
    Ok(None)
}

/// The agreement subgroup {t : mu(t) = nu(t)} of two distinct forms with
/// the same polarization; it always has index 2.
pub fn agreement_subgroup(mu: &QuadraticForm, nu: &QuadraticForm) -> Result<Subgroup> {
    if mu.group != nu.group {
        return Err(Error::PreconditionViolated(
            "agreement requires a common group".into(),
        ));
    }
    if mu.values == nu.values {
        return Err(Error::IdenticalForms(
            "agreement subgroup needs distinct forms".into(),
        ));
    }
    if mu.polarization()?.values != nu.polarization()?.values {
        return Err(Error::SamePolarizationRequired(
            "forms have different polarizations".into(),
        ));
    }
    let members: Vec<usize> = mu
        .group
        .elements()
        .filter(|&t| mu.values[t] == nu.values[t])
        .collect();
    let sg = Subgroup::new(&mu.group, members)?;
    debug_assert_eq!(sg.index(), 2);
    Ok(sg)
}

/// The beta-orthogonal complement of a subgroup: {t : beta(t, s) = 1 for
/// all s in S}.
pub fn perp(beta: &Bicharacter, s: &Subgroup) -> Result<Subgroup> {
    if beta.group != s.parent {
        return Err(Error::PreconditionViolated("perp requires a common group".into()));
    }
    let members: Vec<usize> = beta
        .group
        .elements()
        .filter(|&t| s.members.iter().all(|&m| beta.values[t][m] == 1))
        .collect();
    Subgroup::new(&beta.group, members)
}
