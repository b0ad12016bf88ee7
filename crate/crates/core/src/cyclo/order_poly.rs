//! Order polynomials: scalar * q^a * prod_i Phi_i(q)^{e_i}.
//!
//! This is the universal currency for orders of groups of Lie type and
//! their subgroups: the q power carries the part divisible by the defining
//! characteristic, the cyclotomic part everything else. Taking the p'-part
//! in defining characteristic is therefore just "set the q exponent to 0".

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::{cyclo_factor_exponents, cyclo_factor_exponents_plus, cyclotomic_poly};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrderPolyError {
    #[error("quotient is not an order polynomial: exponent of Phi_{0} would be {1}")]
    NonExactQuotient(u32, i64),
    #[error("quotient is not an order polynomial: q exponent would be {0}")]
    NegativeQExponent(i64),
    #[error("cannot parse order polynomial token `{0}`")]
    Parse(String),
}

/// scalar * q^{q_exponent} * prod Phi_i(q)^{e_i} with all e_i >= 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderPolynomial {
    scalar: BigRational,
    q_exponent: u64,
    cyclo_exponents: BTreeMap<u32, u64>,
}

impl OrderPolynomial {
    pub fn one() -> Self {
        OrderPolynomial {
            scalar: BigRational::one(),
            q_exponent: 0,
            cyclo_exponents: BTreeMap::new(),
        }
    }

    pub fn from_parts(
        scalar: BigRational,
        q_exponent: u64,
        cyclo_exponents: BTreeMap<u32, u64>,
    ) -> Self {
        assert!(scalar.is_positive(), "order polynomials are positive");
        let cyclo_exponents = cyclo_exponents.into_iter().filter(|&(_, e)| e > 0).collect();
        OrderPolynomial {
            scalar,
            q_exponent,
            cyclo_exponents,
        }
    }

    pub fn scalar_int(n: i64) -> Self {
        Self::from_parts(
            BigRational::from_integer(BigInt::from(n)),
            0,
            BTreeMap::new(),
        )
    }

    /// q^e as an order polynomial.
    pub fn q_power(e: u64) -> Self {
        Self::from_parts(BigRational::one(), e, BTreeMap::new())
    }

    /// Phi_i(q)^e as an order polynomial.
    pub fn cyclotomic(i: u32, e: u64) -> Self {
        assert!(i >= 1);
        let mut m = BTreeMap::new();
        if e > 0 {
            m.insert(i, e);
        }
        Self::from_parts(BigRational::one(), 0, m)
    }

    /// q^m - 1 expanded into cyclotomic factors.
    pub fn qm_minus_one(m: u32) -> Self {
        let map = cyclo_factor_exponents(m)
            .expect("m >= 1")
            .into_iter()
            .map(|(i, e)| (i, e as u64))
            .collect();
        Self::from_parts(BigRational::one(), 0, map)
    }

    /// q^m + 1 expanded into cyclotomic factors.
    pub fn qm_plus_one(m: u32) -> Self {
        let map = cyclo_factor_exponents_plus(m)
            .expect("m >= 1")
            .into_iter()
            .map(|(i, e)| (i, e as u64))
            .collect();
        Self::from_parts(BigRational::one(), 0, map)
    }

    pub fn scalar(&self) -> &BigRational {
        &self.scalar
    }

    pub fn q_exponent(&self) -> u64 {
        self.q_exponent
    }

    pub fn cyclo_exponents(&self) -> &BTreeMap<u32, u64> {
        &self.cyclo_exponents
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut map = self.cyclo_exponents.clone();
        for (&i, &e) in &other.cyclo_exponents {
            *map.entry(i).or_insert(0) += e;
        }
        OrderPolynomial {
            scalar: &self.scalar * &other.scalar,
            q_exponent: self.q_exponent + other.q_exponent,
            cyclo_exponents: map,
        }
    }

    /// Exact quotient; exponents may only be negative transiently while the
    /// difference is formed, and any negative exponent in the result is an
    /// error.
    pub fn div(&self, other: &Self) -> Result<Self, OrderPolyError> {
        let mut map: BTreeMap<u32, i64> = self
            .cyclo_exponents
            .iter()
            .map(|(&i, &e)| (i, e as i64))
            .collect();
        for (&i, &e) in &other.cyclo_exponents {
            *map.entry(i).or_insert(0) -= e as i64;
        }
        for (&i, &e) in &map {
            if e < 0 {
                return Err(OrderPolyError::NonExactQuotient(i, e));
            }
        }
        let qe = self.q_exponent as i64 - other.q_exponent as i64;
        if qe < 0 {
            return Err(OrderPolyError::NegativeQExponent(qe));
        }
        Ok(OrderPolynomial {
            scalar: &self.scalar / &other.scalar,
            q_exponent: qe as u64,
            cyclo_exponents: map
                .into_iter()
                .filter(|&(_, e)| e > 0)
                .map(|(i, e)| (i, e as u64))
                .collect(),
        })
    }

    /// The p'-part: drop the q power.
    pub fn p_prime_part(&self) -> Self {
        OrderPolynomial {
            scalar: self.scalar.clone(),
            q_exponent: 0,
            cyclo_exponents: self.cyclo_exponents.clone(),
        }
    }

    /// Exact rational value at an integer q >= 2.
    pub fn eval(&self, q: &BigInt) -> BigRational {
        assert!(*q >= BigInt::from(2), "evaluate at q >= 2");
        let mut acc = self.scalar.clone();
        acc *= BigRational::from_integer(q.pow(self.q_exponent as u32));
        for (&i, &e) in &self.cyclo_exponents {
            let v = cyclotomic_poly(i).expect("i >= 1").eval(q);
            acc *= BigRational::from_integer(v.pow(e as u32));
        }
        acc
    }

    /// Exact integer value at q; panics if the value is not integral, which
    /// cannot happen for genuine group orders.
    pub fn eval_int(&self, q: &BigInt) -> BigInt {
        let v = self.eval(q);
        assert!(v.is_integer(), "order polynomial value is not integral");
        v.to_integer()
    }

    /// Canonical text rendering, e.g. `1/2 * q^35 * Phi1^3 * Phi3^2 * Phi5`.
    ///
    /// The scalar prints as a reduced fraction (plain integer when the
    /// denominator is one) and is omitted when it is 1 and other factors
    /// exist; `q^a` is omitted when a = 0; `^e` is omitted when e = 1.
    pub fn render(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        let scalar_str = if self.scalar.denom().is_one() {
            self.scalar.numer().to_string()
        } else {
            format!("{}/{}", self.scalar.numer(), self.scalar.denom())
        };
        if !self.scalar.is_one() {
            parts.push(scalar_str.clone());
        }
        if self.q_exponent > 0 {
            parts.push(format!("q^{}", self.q_exponent));
        }
        for (&i, &e) in &self.cyclo_exponents {
            if e == 1 {
                parts.push(format!("Phi{}", i));
            } else {
                parts.push(format!("Phi{}^{}", i, e));
            }
        }
        if parts.is_empty() {
            return scalar_str;
        }
        parts.join(" * ")
    }

    /// Parse the canonical rendering back. Accepts any `*`-joined sequence
    /// of scalar, `q^a` (or bare `q`), and `PhiN^E` (or bare `PhiN`) tokens.
    pub fn parse(text: &str) -> Result<Self, OrderPolyError> {
        let mut out = OrderPolynomial::one();
        for raw in text.split('*') {
            let tok = raw.trim();
            if tok.is_empty() {
                return Err(OrderPolyError::Parse(text.to_string()));
            }
            if let Some(rest) = tok.strip_prefix("Phi") {
                let (idx, exp) = match rest.split_once('^') {
                    Some((i, e)) => (i, e),
                    None => (rest, "1"),
                };
                let i: u32 = idx.parse().map_err(|_| OrderPolyError::Parse(tok.into()))?;
                let e: u64 = exp.parse().map_err(|_| OrderPolyError::Parse(tok.into()))?;
                if i == 0 {
                    return Err(OrderPolyError::Parse(tok.into()));
                }
                out = out.mul(&OrderPolynomial::cyclotomic(i, e));
            } else if tok == "q" {
                out = out.mul(&OrderPolynomial::q_power(1));
            } else if let Some(rest) = tok.strip_prefix("q^") {
                let e: u64 = rest.parse().map_err(|_| OrderPolyError::Parse(tok.into()))?;
                out = out.mul(&OrderPolynomial::q_power(e));
            } else {
                let scalar = match tok.split_once('/') {
                    Some((n, d)) => {
                        let n: BigInt = n.trim().parse().map_err(|_| OrderPolyError::Parse(tok.into()))?;
                        let d: BigInt = d.trim().parse().map_err(|_| OrderPolyError::Parse(tok.into()))?;
                        if d.is_zero() {
                            return Err(OrderPolyError::Parse(tok.into()));
                        }
                        BigRational::new(n, d)
                    }
                    None => {
                        let n: BigInt = tok.parse().map_err(|_| OrderPolyError::Parse(tok.into()))?;
                        BigRational::from_integer(n)
                    }
                };
                if !scalar.is_positive() {
                    return Err(OrderPolyError::Parse(tok.into()));
                }
                out = out.mul(&OrderPolynomial::from_parts(scalar, 0, BTreeMap::new()));
            }
        }
        Ok(out)
    }
}

impl fmt::Display for OrderPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}
