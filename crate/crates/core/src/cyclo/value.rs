//! Exact elements of cyclotomic fields: rational linear combinations of
//! n-th roots of unity with a complete zero test.
//!
//! The canonical form of a value is its residue modulo Phi_n(x), so two
//! values are equal exactly when their canonical coefficient vectors agree.
//! This gives a decision procedure for equality in Q(zeta_n) without any
//! numeric approximation.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::cyclotomic_poly;

/// sum_k c_k zeta_n^k with rational c_k, held in canonical residue form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloValue {
    root_order: u32,
    /// exponent -> coefficient, reduced mod Phi_n; empty means zero.
    terms: BTreeMap<u32, BigRational>,
}

impl CycloValue {
    pub fn zero() -> Self {
        CycloValue {
            root_order: 1,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_rational(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(0, c);
        }
        CycloValue {
            root_order: 1,
            terms,
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// c * zeta_n^k.
    pub fn root_term(c: BigRational, n: u32, k: u32) -> Self {
        assert!(n >= 1, "root order must be positive");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k % n, c);
        }
        CycloValue {
            root_order: n,
            terms,
        }
        .canonicalize()
    }

    pub fn root_order(&self) -> u32 {
        self.root_order
    }

    pub fn terms(&self) -> &BTreeMap<u32, BigRational> {
        &self.terms
    }

    /// Reduce modulo Phi_n(x). Idempotent; every constructor and operation
    /// already returns canonical values, so calling this again is a no-op.
    pub fn canonicalize(&self) -> Self {
        let n = self.root_order;
        let phi = cyclotomic_poly(n).expect("n >= 1");
        let deg = phi.degree();
        // dense rational coefficient vector of degree < n
        let mut coeffs = vec![BigRational::zero(); n as usize];
        for (&k, c) in &self.terms {
            coeffs[(k % n) as usize] += c;
        }
        // long division by the monic integer polynomial Phi_n
        for i in (deg..coeffs.len()).rev() {
            if coeffs[i].is_zero() {
                continue;
            }
            let factor = coeffs[i].clone();
            for (j, pc) in phi.coeffs().iter().enumerate() {
                let delta = &factor * BigRational::from_integer(pc.clone());
                coeffs[i - deg + j] -= delta;
            }
        }
        let terms: BTreeMap<u32, BigRational> = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as u32, c))
            .collect();
        CycloValue {
            root_order: n,
            terms,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True iff the value equals the given rational number.
    pub fn equals_rational(&self, r: &BigRational) -> bool {
        self.sub(&CycloValue::from_rational(r.clone())).is_zero()
    }

    /// If the canonical form is a constant, return it.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&0) {
                return Some(c.clone());
            }
        }
        None
    }

    fn lift_to(&self, order: u32) -> Self {
        debug_assert!(order.is_multiple_of(self.root_order));
        let scale = order / self.root_order;
        let terms = self
            .terms
            .iter()
            .map(|(&k, c)| (k * scale, c.clone()))
            .collect();
        CycloValue {
            root_order: order,
            terms,
        }
    }

    fn common_order(&self, other: &Self) -> (Self, Self) {
        if self.root_order == other.root_order {
            return (self.clone(), other.clone());
        }
        let l = num_integer::lcm(self.root_order, other.root_order);
        (self.lift_to(l), other.lift_to(l))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = self.common_order(other);
        let mut terms = a.terms;
        for (k, c) in b.terms {
            let entry = terms.entry(k).or_insert_with(BigRational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(&k);
            }
        }
        CycloValue {
            root_order: a.root_order,
            terms,
        }
        .canonicalize()
    }

    pub fn neg(&self) -> Self {
        CycloValue {
            root_order: self.root_order,
            terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.common_order(other);
        let n = a.root_order;
        let mut terms: BTreeMap<u32, BigRational> = BTreeMap::new();
        for (&i, c) in &a.terms {
            for (&j, d) in &b.terms {
                let k = (i + j) % n;
                let entry = terms.entry(k).or_insert_with(BigRational::zero);
                *entry += c * d;
            }
        }
        CycloValue {
            root_order: n,
            terms,
        }
        .canonicalize()
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return CycloValue {
                root_order: self.root_order,
                terms: BTreeMap::new(),
            };
        }
        CycloValue {
            root_order: self.root_order,
            terms: self.terms.iter().map(|(&k, c)| (k, c * r)).collect(),
        }
    }

    /// Complex conjugate: negate every root exponent.
    pub fn conj(&self) -> Self {
        let n = self.root_order;
        let terms = self
            .terms
            .iter()
            .map(|(&k, c)| (if k == 0 { 0 } else { n - k }, c.clone()))
            .collect();
        CycloValue {
            root_order: n,
            terms,
        }
        .canonicalize()
    }

    /// |v|^2 = v * conj(v); real, hence rational when v is an algebraic
    /// number whose square modulus is rational (always checked by callers
    /// through the exact engine rather than assumed).
    pub fn norm_squared(&self) -> Self {
        self.mul(&self.conj())
    }

    /// Numeric magnitude for sanity cross-checks only; never used to decide
    /// anything.
    pub fn approx_abs(&self) -> f64 {
        use std::f64::consts::TAU;
        let n = self.root_order as f64;
        let mut re = 0.0f64;
        let mut im = 0.0f64;
        for (&k, c) in &self.terms {
            let c = rational_to_f64(c);
            let angle = TAU * (k as f64) / n;
            re += c * angle.cos();
            im += c * angle.sin();
        }
        (re * re + im * im).sqrt()
    }

    /// Render like `3`, `-1/2`, or `1*z(5)^1+1*z(5)^4`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        if let Some(r) = self.as_rational() {
            return render_rational(&r);
        }
        let mut out = String::new();
        for (&k, c) in &self.terms {
            let cs = render_rational(c);
            if !out.is_empty() && !cs.starts_with('-') {
                out.push('+');
            }
            out.push_str(&cs);
            if k > 0 {
                out.push_str(&format!("*z({})^{}", self.root_order, k));
            }
        }
        out
    }
}

fn render_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::big;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(big(n), big(d))
    }

    fn zeta(n: u32, k: u32) -> CycloValue {
        CycloValue::root_term(BigRational::one(), n, k)
    }

    #[test]
    fn vanishing_sum_of_cube_roots() {
        let v = CycloValue::from_integer(1)
            .add(&zeta(3, 1))
            .add(&zeta(3, 2));
        assert!(v.is_zero());
    }

    #[test]
    fn zeta4_squared_is_minus_one() {
        let v = zeta(4, 2).add(&CycloValue::from_integer(1));
        assert!(v.is_zero());
    }

    #[test]
    fn golden_ratio_sum_is_irrational() {
        let v = zeta(5, 1).add(&zeta(5, 4));
        assert!(!v.is_zero());
        assert!(!v.equals_rational(&rat(-1, 1)));
        // but 1 + zeta5 + ... + zeta5^4 = 0
        let full = (0..5).fold(CycloValue::zero(), |acc, k| acc.add(&zeta(5, k)));
        assert!(full.is_zero());
    }

    #[test]
    fn canonicalize_is_idempotent() {
        let v = zeta(12, 7).add(&zeta(12, 11)).scale(&rat(3, 2));
        assert_eq!(v, v.canonicalize());
        assert_eq!(v.canonicalize(), v.canonicalize().canonicalize());
    }

    #[test]
    fn mixed_root_orders_combine() {
        // zeta_2 + 1 = 0 even when entered at different orders
        let v = zeta(2, 1).add(&CycloValue::from_integer(1));
        assert!(v.is_zero());
        // zeta_6^3 = -1
        let w = zeta(6, 3).add(&zeta(2, 0));
        assert!(w.is_zero());
    }

    #[test]
    fn conjugation_and_norm() {
        let alpha = zeta(7, 1).add(&zeta(7, 2)).add(&zeta(7, 4));
        let n2 = alpha.norm_squared();
        assert!(n2.equals_rational(&rat(2, 1)));
        // alpha + conj(alpha) = -1
        assert!(alpha.add(&alpha.conj()).equals_rational(&rat(-1, 1)));
    }

    #[test]
    fn sqrt2_two_renderings_agree() {
        // zeta8 + zeta8^7 and -(zeta8^3 + zeta8^5) are both sqrt(2)
        let a = zeta(8, 1).add(&zeta(8, 7));
        let b = zeta(8, 3).add(&zeta(8, 5)).neg();
        assert_eq!(a, b);
        assert!(a.norm_squared().equals_rational(&rat(2, 1)));
    }

    #[test]
    fn exact_zero_agrees_with_float_on_random_values() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..500 {
            let n = rng.gen_range(1..24u32);
            let mut v = CycloValue::zero();
            for _ in 0..rng.gen_range(0..5) {
                let k = rng.gen_range(0..n);
                let c = rat(rng.gen_range(-4..5), rng.gen_range(1..4));
                v = v.add(&CycloValue::root_term(c, n, k));
            }
            // half the time force an exact zero by subtracting v from itself
            let forced_zero = rng.gen_bool(0.5);
            let probe = if forced_zero { v.sub(&v) } else { v };
            let numeric = probe.approx_abs();
            if probe.is_zero() {
                assert!(numeric < 1e-9);
            } else {
                assert!(numeric > 1e-9, "exact nonzero but tiny float: {:?}", probe);
            }
        }
    }

    #[test]
    fn render_formats() {
        assert_eq!(CycloValue::from_integer(-3).render(), "-3");
        assert_eq!(CycloValue::from_rational(rat(1, 2)).render(), "1/2");
        // zeta5 + zeta5^4 reduces mod Phi_5 to -1 - zeta5^2 - zeta5^3
        let v = zeta(5, 1).add(&zeta(5, 4));
        assert_eq!(v.render(), "-1-1*z(5)^2-1*z(5)^3");
    }
}
