//! Exact cyclotomic-polynomial and order-polynomial arithmetic.
//!
//! `IntPolynomial` is a dense univariate polynomial over arbitrary-precision
//! integers. Cyclotomic polynomials Phi_n are computed by recursive exact
//! division of x^n - 1 by Phi_d over the proper divisors d of n, and memoized
//! behind a lock so concurrent callers share the table.

mod order_poly;
mod value;
mod zsigmondy;

pub use order_poly::{OrderPolyError, OrderPolynomial};
pub use value::CycloValue;
pub use zsigmondy::{zsigmondy_ppd, ZsigmondyOutcome};

use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::divisors;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("division is not exact (remainder {0})")]
    NonExactDivision(String),
    #[error("index must be positive")]
    ZeroIndex,
}

/// Dense polynomial over BigInt, coefficients in ascending degree order.
///
/// Canonical form: the coefficient vector is empty for the zero polynomial
/// and otherwise has a nonzero leading entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// x^n - 1.
    pub fn xn_minus_one(n: u32) -> Self {
        let mut coeffs = vec![BigInt::zero(); n as usize + 1];
        coeffs[0] = -BigInt::one();
        coeffs[n as usize] = BigInt::one();
        IntPolynomial { coeffs }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports degree 0 by convention of callers
    /// that only use it on nonzero inputs.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    /// Exact division; errors when the divisor does not divide exactly.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, PolyError> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if self.coeffs.len() < divisor.coeffs.len() {
            return Err(PolyError::NonExactDivision(format!("{:?}", self.coeffs)));
        }
        let mut rem = self.coeffs.clone();
        let dlen = divisor.coeffs.len();
        let lead = divisor.coeffs.last().unwrap();
        let qlen = rem.len() - dlen + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = rem[k + dlen - 1].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = num_integer::Integer::div_rem(&top, lead);
            if !r.is_zero() {
                return Err(PolyError::NonExactDivision(top.to_string()));
            }
            quot[k] = q.clone();
            for (i, d) in divisor.coeffs.iter().enumerate() {
                let prod = d * &q;
                rem[k + i] -= prod;
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(PolyError::NonExactDivision(format!(
                "remainder degree {}",
                rem.iter().rposition(|c| !c.is_zero()).unwrap()
            )));
        }
        Ok(Self::from_coeffs(quot))
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Render as a human-readable polynomial in x, highest degree first.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let term = match i {
                0 => mag.to_string(),
                1 => {
                    if mag.is_one() {
                        "x".to_string()
                    } else {
                        format!("{}*x", mag)
                    }
                }
                _ => {
                    if mag.is_one() {
                        format!("x^{}", i)
                    } else {
                        format!("{}*x^{}", mag, i)
                    }
                }
            };
            if parts.is_empty() {
                if c.is_negative() {
                    parts.push(format!("-{}", term));
                } else {
                    parts.push(term);
                }
            } else if c.is_negative() {
                parts.push(format!("- {}", term));
            } else {
                parts.push(format!("+ {}", term));
            }
        }
        parts.join(" ")
    }
}

/// The n-th cyclotomic polynomial Phi_n(x).
///
/// Computed as (x^n - 1) / prod_{d | n, d < n} Phi_d(x) by exact division,
/// with memoization. Rejects n = 0.
pub fn cyclotomic_poly(n: u32) -> Result<IntPolynomial, PolyError> {
    if n == 0 {
        return Err(PolyError::ZeroIndex);
    }
    static CACHE: OnceLock<Mutex<BTreeMap<u32, IntPolynomial>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return Ok(p.clone());
    }
    let result = if n == 1 {
        IntPolynomial::from_i64(&[-1, 1])
    } else {
        let mut acc = IntPolynomial::xn_minus_one(n);
        for d in divisors(n as u64) {
            let d = d as u32;
            if d == n {
                continue;
            }
            let phi_d = cyclotomic_poly(d)?;
            acc = acc.exact_div(&phi_d)?;
        }
        acc
    };
    cache.lock().unwrap().insert(n, result.clone());
    Ok(result)
}

/// Cyclotomic indices of x^m - 1, i.e. the divisors of m, each with
/// exponent 1.
pub fn cyclo_factor_exponents(m: u32) -> Result<BTreeMap<u32, i64>, PolyError> {
    if m == 0 {
        return Err(PolyError::ZeroIndex);
    }
    Ok(divisors(m as u64).into_iter().map(|d| (d as u32, 1)).collect())
}

/// Cyclotomic indices of x^m + 1 = (x^{2m} - 1)/(x^m - 1): the divisors of
/// 2m that do not divide m.
pub fn cyclo_factor_exponents_plus(m: u32) -> Result<BTreeMap<u32, i64>, PolyError> {
    if m == 0 {
        return Err(PolyError::ZeroIndex);
    }
    let minus: Vec<u64> = divisors(m as u64);
    Ok(divisors(2 * m as u64)
        .into_iter()
        .filter(|d| !minus.contains(d))
        .map(|d| (d as u32, 1))
        .collect())
}

/// Euler's totient, used to cross-check cyclotomic degrees.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::big;

    #[test]
    fn phi_1_is_x_minus_1() {
        assert_eq!(cyclotomic_poly(1).unwrap(), IntPolynomial::from_i64(&[-1, 1]));
    }

    #[test]
    fn phi_6_standard_identity() {
        assert_eq!(
            cyclotomic_poly(6).unwrap(),
            IntPolynomial::from_i64(&[1, -1, 1])
        );
    }

    #[test]
    fn phi_12_by_independent_division_oracle() {
        // Oracle: divide x^12 - 1 by the product of Phi_d over proper
        // divisors, each built from its own x^d - 1 recursion bottom-up
        // without going through the memoized entry point.
        fn oracle(n: u32) -> IntPolynomial {
            if n == 1 {
                return IntPolynomial::from_i64(&[-1, 1]);
            }
            let mut acc = IntPolynomial::xn_minus_one(n);
            for d in divisors(n as u64) {
                if (d as u32) == n {
                    continue;
                }
                acc = acc.exact_div(&oracle(d as u32)).unwrap();
            }
            acc
        }
        let expected = oracle(12);
        assert_eq!(expected, IntPolynomial::from_i64(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_poly(12).unwrap(), expected);
    }

    #[test]
    fn phi_rejects_zero() {
        assert_eq!(cyclotomic_poly(0).unwrap_err(), PolyError::ZeroIndex);
    }

    #[test]
    fn phi_degree_is_totient_and_monic() {
        for n in 1..=60u32 {
            let p = cyclotomic_poly(n).unwrap();
            assert_eq!(p.degree() as u32, euler_phi(n), "degree of Phi_{}", n);
            assert!(p.is_monic(), "Phi_{} monic", n);
        }
    }

    #[test]
    fn product_over_divisors_is_xn_minus_one_up_to_200() {
        for n in 1..=200u32 {
            let mut prod = IntPolynomial::one();
            for d in divisors(n as u64) {
                prod = prod.mul(&cyclotomic_poly(d as u32).unwrap());
            }
            assert_eq!(prod, IntPolynomial::xn_minus_one(n), "n = {}", n);
        }
    }

    #[test]
    fn factor_exponent_maps() {
        let m6: Vec<u32> = cyclo_factor_exponents(6).unwrap().into_keys().collect();
        assert_eq!(m6, vec![1, 2, 3, 6]);
        let p3: Vec<u32> = cyclo_factor_exponents_plus(3).unwrap().into_keys().collect();
        assert_eq!(p3, vec![2, 6]);
        let m1: Vec<u32> = cyclo_factor_exponents(1).unwrap().into_keys().collect();
        assert_eq!(m1, vec![1]);
        assert!(cyclo_factor_exponents(0).is_err());
    }

    #[test]
    fn eval_phi6_at_2() {
        assert_eq!(cyclotomic_poly(6).unwrap().eval(&big(2)), big(3));
    }

    #[test]
    fn exact_div_detects_nonexact() {
        let phi1 = cyclotomic_poly(1).unwrap();
        let phi2 = cyclotomic_poly(2).unwrap();
        assert!(phi1.exact_div(&phi2).is_err());
    }

    #[test]
    fn render_reads_naturally() {
        assert_eq!(cyclotomic_poly(6).unwrap().render(), "x^2 - x + 1");
        assert_eq!(cyclotomic_poly(12).unwrap().render(), "x^4 - x^2 + 1");
    }
}
