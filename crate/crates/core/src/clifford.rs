//! Clifford algebras Cl_{p,q} as twisted group algebras of Z2^N, their
//! quadratic forms, and the Arf invariant computed along independent
//! routes: direct counting, an exact Gaussian-integer closed form, and
//! the residue of p - q + 1 mod 8.

use crate::assoc::{tensor_class, AlgebraClass, SimpleClass};
use crate::group::{make_group, GroupSpec};
use crate::quad::{ArfValue, QuadraticForm};
use crate::twisted::{self, TwistedAlgebra};
use crate::{Error, Result};

pub const CLIFFORD_BUILD_BOUND: u32 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CliffordSignature {
    pub p: u32,
    pub q: u32,
}

impl CliffordSignature {
    pub fn new(p: u32, q: u32) -> CliffordSignature {
        CliffordSignature { p, q }
    }

    pub fn n(&self) -> u32 {
        self.p + self.q
    }
}

/// The group Z2^N underlying Cl_{p,q}; residue slot i corresponds to the
/// generator e_{i+1}, the first p of which square to +1.
pub fn clifford_group(sig: CliffordSignature) -> Result<GroupSpec> {
    if sig.n() == 0 {
        return make_group(&[]);
    }
    make_group(&vec![2u32; sig.n() as usize])
}

/// The quadratic form of Cl_{p,q}: for a subset I of the generators with
/// r = |I| elements, mu(v_I) = (-1)^(r choose 2) * (-1)^(#negative in I).
pub fn mu_pq(sig: CliffordSignature) -> Result<QuadraticForm> {
    let g = clifford_group(sig)?;
    let p = sig.p as usize;
    let values: Vec<i8> = g
        .elements()
        .map(|x| {
            let e = g.element(x);
            let r = e.residues.iter().filter(|&&b| b == 1).count();
            let neg = e
                .residues
                .iter()
                .enumerate()
                .filter(|(i, &b)| b == 1 && *i >= p)
                .count();
            let exp = r * (r.saturating_sub(1)) / 2 + neg;
            if exp % 2 == 0 {
                1
            } else {
                -1
            }
        })
        .collect();
    QuadraticForm::new(&g, values)
}

/// Build Cl_{p,q} as a twisted group algebra (N <= 10). The generator
/// relations e_i^2 = +-1 and e_i e_j = -e_j e_i for i != j are implied
/// by mu_pq and verified by the twisted-algebra postconditions.
pub fn clifford_build(sig: CliffordSignature) -> Result<TwistedAlgebra> {
    if sig.n() > CLIFFORD_BUILD_BOUND {
        return Err(Error::SizeBound(format!(
            "Clifford build capped at p + q <= {CLIFFORD_BUILD_BOUND}"
        )));
    }
    twisted::build_twisted(&mu_pq(sig)?)
}

/// Exact Gaussian integer a + b i with i128 parts; enough head-room for
/// (1+i)^p (1-i)^q with p + q <= 128.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GaussInt {
    pub re: i128,
    pub im: i128,
}

impl GaussInt {
    pub fn one() -> GaussInt {
        GaussInt { re: 1, im: 0 }
    }

    pub fn mul(self, o: GaussInt) -> GaussInt {
        GaussInt {
            re: self.re * o.re - self.im * o.im,
            im: self.re * o.im + self.im * o.re,
        }
    }

    pub fn pow(self, mut e: u32) -> GaussInt {
        let mut acc = GaussInt::one();
        let mut base = self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }
}

/// The value sum S(p, q) = sum_t mu_pq(t) over the whole group, in
/// closed form: S = Re(z) + Im(z) with z = (1+i)^p (1-i)^q.
pub fn value_sum_closed_form(sig: CliffordSignature) -> i128 {
    if sig.n() > 120 {
        panic!("value sum closed form capped at p + q <= 120");
    }
    let z = GaussInt { re: 1, im: 1 }
        .pow(sig.p)
        .mul(GaussInt { re: 1, im: -1 }.pow(sig.q));
    z.re + z.im
}

/// Arf invariant of mu_pq by two independent closed routes that must
/// agree: the sign of the exact Gaussian-integer value sum, and the
/// residue of p - q + 1 mod 8 (+1 for residues 1..3, 0 for 0 and 4,
/// -1 for 5..7).
pub fn arf_closed_form(sig: CliffordSignature) -> Result<ArfValue> {
    let s = value_sum_closed_form(sig);
    let by_sum = ArfValue::from_i8(s.signum() as i8);
    let r = (sig.p as i64 - sig.q as i64 + 1).rem_euclid(8);
    let by_residue = match r {
        1..=3 => ArfValue::Plus,
        0 | 4 => ArfValue::Zero,
        _ => ArfValue::Minus,
    };
    if by_sum != by_residue {
        return Err(Error::InternalDisagreement(format!(
            "Arf routes disagree for Cl_{{{},{}}}: sum {by_sum}, residue {by_residue}",
            sig.p, sig.q
        )));
    }
    Ok(by_sum)
}

/// Arf by literally counting mu-values over the group (N <= 20).
pub fn arf_via_counting(sig: CliffordSignature) -> Result<ArfValue> {
    if sig.n() > 20 {
        return Err(Error::SizeBound("counting route capped at p + q <= 20".into()));
    }
    Ok(mu_pq(sig)?.arf())
}

/// Isomorphism class of Cl_{p,q} via the rank/Arf classification of its
/// twisted group algebra.
pub fn identify_clifford(sig: CliffordSignature) -> Result<AlgebraClass> {
    twisted::classify_by_arf(&mu_pq(sig)?)
}

/// Tensor a class with a simple factor, factorwise on products.
pub fn tensor_with(class: AlgebraClass, f: SimpleClass) -> AlgebraClass {
    match class {
        AlgebraClass::MatR(n) => simple_to_class(tensor_class(SimpleClass::MatR(n), f)),
        AlgebraClass::MatC(n) => simple_to_class(tensor_class(SimpleClass::MatC(n), f)),
        AlgebraClass::MatH(n) => simple_to_class(tensor_class(SimpleClass::MatH(n), f)),
        AlgebraClass::Product(a, b) => {
            AlgebraClass::Product(tensor_class(a, f), tensor_class(b, f))
        }
    }
}

fn simple_to_class(s: SimpleClass) -> AlgebraClass {
    match s {
        SimpleClass::MatR(n) => AlgebraClass::MatR(n),
        SimpleClass::MatC(n) => AlgebraClass::MatC(n),
        SimpleClass::MatH(n) => AlgebraClass::MatH(n),
    }
}

/// Check the three periodicity rules at the level of isomorphism
/// classes for the given signature:
///   Cl_{p+1,q+1} = Cl_{p,q} (x) M2(R)
///   Cl_{p+2,q}   = Cl_{q,p} (x) M2(R)
///   Cl_{p,q+2}   = Cl_{q,p} (x) H
pub fn periodicity_check(sig: CliffordSignature) -> Result<()> {
    let base = identify_clifford(sig)?;
    let swapped = identify_clifford(CliffordSignature::new(sig.q, sig.p))?;
    let m2r = SimpleClass::MatR(2);
    let h = SimpleClass::MatH(1);
    let checks = [
        (
            identify_clifford(CliffordSignature::new(sig.p + 1, sig.q + 1))?,
            tensor_with(base, m2r),
            "Cl_{p+1,q+1}",
        ),
        (
            identify_clifford(CliffordSignature::new(sig.p + 2, sig.q))?,
            tensor_with(swapped, m2r),
            "Cl_{p+2,q}",
        ),
        (
            identify_clifford(CliffordSignature::new(sig.p, sig.q + 2))?,
            tensor_with(swapped, h),
            "Cl_{p,q+2}",
        ),
    ];
    for (lhs, rhs, label) in checks {
        if lhs != rhs {
            return Err(Error::InternalDisagreement(format!(
                "{label} fails at (p,q) = ({},{}): {lhs} vs {rhs}",
                sig.p, sig.q
            )));
        }
    }
    Ok(())
}

/// Sums of binomial coefficients by residue of the lower index mod 4:
/// out[k] = sum of C(N, j) over j = k mod 4, both by direct u128
/// accumulation and by the closed forms
///   S0 + S2 = S1 + S3 = 2^(N-1),
///   S0 - S2 = Re((1+i)^N),  S1 - S3 = Im((1+i)^N),
/// cross-checked against each other (1 <= N <= 64).
pub fn binomial_sums(n: u32) -> Result<[u128; 4]> {
    if n == 0 || n > 64 {
        return Err(Error::SizeBound("binomial sums need 1 <= N <= 64".into()));
    }
    let mut direct = [0u128; 4];
    let mut c: u128 = 1;
    for j in 0..=n {
        direct[(j % 4) as usize] += c;
        if j < n {
            c = c * (n - j) as u128 / (j + 1) as u128;
        }
    }
    let z = GaussInt { re: 1, im: 1 }.pow(n);
    let half = 1i128 << (n - 1);
    let closed = [
        (half + z.re) / 2,
        (half + z.im) / 2,
        (half - z.re) / 2,
        (half - z.im) / 2,
    ];
    for k in 0..4 {
        if closed[k] < 0 || direct[k] != closed[k] as u128 {
            return Err(Error::InternalDisagreement(format!(
                "binomial sum S{k} mismatch at N = {n}: direct {} vs closed {}",
                direct[k], closed[k]
            )));
        }
    }
    Ok(direct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assoc::AlgebraClass::*;

    #[test]
    fn small_clifford_classes() {
        // Classical table.
        let cases = [
            ((0, 0), MatR(1)),
            ((1, 0), Product(SimpleClass::MatR(1), SimpleClass::MatR(1))),
            ((0, 1), MatC(1)),
            ((2, 0), MatR(2)),
            ((1, 1), MatR(2)),
            ((0, 2), MatH(1)),
            ((3, 0), MatC(2)),
            ((0, 3), Product(SimpleClass::MatH(1), SimpleClass::MatH(1))),
            ((3, 1), MatH(2)),
            ((1, 3), MatR(4)),
            ((4, 0), MatH(2)),
            ((0, 4), MatH(2)),
            ((5, 0), Product(SimpleClass::MatH(2), SimpleClass::MatH(2))),
            ((8, 0), MatR(16)),
        ];
        for ((p, q), expect) in cases {
            let got = identify_clifford(CliffordSignature::new(p, q)).unwrap();
            assert_eq!(got, expect, "Cl_{{{p},{q}}}");
        }
    }

    #[test]
    fn arf_routes_agree_up_to_ten() {
        for p in 0..=10u32 {
            for q in 0..=(10 - p) {
                let sig = CliffordSignature::new(p, q);
                let closed = arf_closed_form(sig).unwrap();
                let counted = arf_via_counting(sig).unwrap();
                assert_eq!(closed, counted, "Cl_{{{p},{q}}}");
            }
        }
    }

    #[test]
    fn structural_route_agrees_small() {
        // Independent oracle: realified structure identification.
        for p in 0..=4u32 {
            for q in 0..=(4 - p) {
                let sig = CliffordSignature::new(p, q);
                let alg = clifford_build(sig).unwrap();
                assert_eq!(
                    alg.structural_identify().unwrap(),
                    identify_clifford(sig).unwrap(),
                    "Cl_{{{p},{q}}}"
                );
            }
        }
    }

    #[test]
    fn generator_relations() {
        let alg = clifford_build(CliffordSignature::new(1, 2)).unwrap();
        let g = &alg.group;
        // e_1^2 = +1, e_2^2 = e_3^2 = -1, anticommute pairwise.
        let gens: Vec<usize> = (0..3).map(|i| g.generator(i)).collect();
        assert_eq!(alg.sigma(gens[0], gens[0]), &crate::scalar::Scalar::one());
        assert_eq!(alg.sigma(gens[1], gens[1]), &crate::scalar::Scalar::from_int(-1));
        assert_eq!(alg.sigma(gens[2], gens[2]), &crate::scalar::Scalar::from_int(-1));
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    assert_eq!(
                        alg.commutation(gens[i], gens[j]),
                        crate::scalar::Scalar::from_int(-1)
                    );
                }
            }
        }
    }

    #[test]
    fn periodicity_grid() {
        for p in 0..=4u32 {
            for q in 0..=4 {
                periodicity_check(CliffordSignature::new(p, q)).unwrap();
            }
        }
    }

    #[test]
    fn binomial_sums_small_and_large() {
        assert_eq!(binomial_sums(4).unwrap(), [2, 4, 6, 4]);
        // N = 64 exercises the widest closed form; total must be 2^64.
        let s = binomial_sums(64).unwrap();
        assert_eq!(s.iter().sum::<u128>(), 1u128 << 64);
        assert!(binomial_sums(0).is_err());
        assert!(binomial_sums(65).is_err());
    }

    #[test]
    fn definite_value_sums_via_binomials() {
        // For Cl_{N,0}: mu(v_I) = (-1)^(r choose 2), positive for
        // r = 0, 1 mod 4; so S = S0 + S1 - S2 - S3. For Cl_{0,N} the sign
        // is positive for r = 0, 3 mod 4; S = S0 - S1 - S2 + S3.
        for n in 1..=10u32 {
            let s = binomial_sums(n).unwrap().map(|x| x as i128);
            let plus = value_sum_closed_form(CliffordSignature::new(n, 0));
            assert_eq!(plus, s[0] + s[1] - s[2] - s[3]);
            let minus = value_sum_closed_form(CliffordSignature::new(0, n));
            assert_eq!(minus, s[0] - s[1] - s[2] + s[3]);
        }
    }

    #[test]
    fn build_bound_enforced() {
        assert!(clifford_build(CliffordSignature::new(6, 5)).is_err());
    }
}
