//! Orders and standard data for simple groups of Lie type and alternating
//! groups: universal/simple order formulas, p-part bounds for alternating
//! groups, the Mueller/James lower bound for symmetric-group modules, and
//! table-backed minimal-degree data (cross-characteristic projective lower
//! bounds and minimal permutation degrees).

mod data;

pub use data::{sporadic_order, supported_lie_families, DataError, DataTables, SporadicRow};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

use crate::arith::{big, factorial, factorial_valuation, gcd_u64, prime_power};
use crate::cyclo::OrderPolynomial;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),
    #[error("invalid group specification: {0}")]
    InvalidSpec(String),
}

/// Family tag of a (possibly twisted) group of Lie type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    TwistedA,
    B,
    C,
    D,
    TwistedD,
    G2,
    F4,
    E6,
    TwistedE6,
    E7,
    E8,
    TwistedB2,
    TwistedG2,
    TrialityD4,
    TwistedF4,
}

impl Family {
    pub fn code(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::TwistedA => "2A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::TwistedD => "2D",
            Family::G2 => "G2",
            Family::F4 => "F4",
            Family::E6 => "E6",
            Family::TwistedE6 => "2E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::TwistedB2 => "2B2",
            Family::TwistedG2 => "2G2",
            Family::TrialityD4 => "3D4",
            Family::TwistedF4 => "2F4",
        }
    }

    pub fn from_code(code: &str) -> Option<Family> {
        Some(match code {
            "A" => Family::A,
            "2A" => Family::TwistedA,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "2D" => Family::TwistedD,
            "G2" => Family::G2,
            "F4" => Family::F4,
            "E6" => Family::E6,
            "2E6" => Family::TwistedE6,
            "E7" => Family::E7,
            "E8" => Family::E8,
            "2B2" => Family::TwistedB2,
            "2G2" => Family::TwistedG2,
            "3D4" => Family::TrialityD4,
            "2F4" => Family::TwistedF4,
            _ => return None,
        })
    }

    /// Fixed rank for the exceptional families, None for the classical ones.
    pub fn fixed_rank(self) -> Option<u32> {
        Some(match self {
            Family::G2 | Family::TwistedG2 => 2,
            Family::TwistedB2 => 2,
            Family::F4 | Family::TwistedF4 => 4,
            Family::TrialityD4 => 4,
            Family::E6 | Family::TwistedE6 => 6,
            Family::E7 => 7,
            Family::E8 => 8,
            _ => return None,
        })
    }
}

/// A pair (family, rank) naming a series, e.g. twisted A of rank 3 over q
/// is PSU_4(q).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LieFamily {
    pub family: Family,
    pub rank: u32,
}

impl LieFamily {
    pub fn new(family: Family, rank: u32) -> Result<Self, GroupError> {
        if let Some(fixed) = family.fixed_rank() {
            if rank != fixed {
                return Err(GroupError::InvalidSpec(format!(
                    "{} has fixed rank {}",
                    family.code(),
                    fixed
                )));
            }
        }
        let min = match family {
            Family::A => 1,
            Family::TwistedA => 2,
            Family::B => 3, // rank 2 coincides with C2; enter it as C
            Family::C => 2,
            Family::D | Family::TwistedD => 4,
            _ => family.fixed_rank().unwrap(),
        };
        if rank < min {
            return Err(GroupError::InvalidSpec(format!(
                "rank {} below minimum {} for family {}",
                rank,
                min,
                family.code()
            )));
        }
        Ok(LieFamily { family, rank })
    }

    pub fn name(&self) -> String {
        format!("{}_{}", self.family.code(), self.rank)
    }
}

/// A concrete group: a Lie family over a prime power, or an alternating
/// group of degree n >= 5. Construction enforces simplicity of the
/// associated simple group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Lie { family: LieFamily, q: u64 },
    Alternating { n: u64 },
}

impl GroupSpec {
    pub fn lie(family: Family, rank: u32, q: u64) -> Result<Self, GroupError> {
        let fam = LieFamily::new(family, rank)?;
        let (p, a) = prime_power(q)
            .ok_or_else(|| GroupError::InvalidSpec(format!("q = {} is not a prime power", q)))?;
        // simplicity conditions
        let bad = match family {
            Family::A if rank == 1 => q < 4, // PSL2(2), PSL2(3) are solvable
            Family::TwistedA if rank == 2 => q < 3, // PSU3(2) is solvable
            Family::C if rank == 2 => q < 3, // Sp4(2) is not simple
            Family::G2 => q < 3,             // G2(2) is not simple
            Family::TwistedB2 => p != 2 || a % 2 == 0 || q < 8,
            Family::TwistedG2 => p != 3 || a % 2 == 0 || q < 27,
            Family::TwistedF4 => p != 2 || a % 2 == 0 || q < 8,
            _ => false,
        };
        if bad {
            return Err(GroupError::InvalidSpec(format!(
                "{}({}) is not a simple group",
                fam.name(),
                q
            )));
        }
        Ok(GroupSpec::Lie { family: fam, q })
    }

    pub fn alternating(n: u64) -> Result<Self, GroupError> {
        if n < 5 {
            return Err(GroupError::InvalidSpec(format!(
                "alternating group of degree {} is not simple",
                n
            )));
        }
        if n > 10_000 {
            return Err(GroupError::InvalidSpec(
                "alternating degrees beyond 10^4 are outside desk scale; \
                 use the p-part bound operations instead"
                    .to_string(),
            ));
        }
        Ok(GroupSpec::Alternating { n })
    }

    pub fn name(&self) -> String {
        match self {
            GroupSpec::Lie { family, q } => format!("{}({})", family.name(), q),
            GroupSpec::Alternating { n } => format!("Alt({})", n),
        }
    }

    /// Defining characteristic for Lie type, None for alternating.
    pub fn characteristic(&self) -> Option<u64> {
        match self {
            GroupSpec::Lie { q, .. } => Some(prime_power(*q).unwrap().0),
            GroupSpec::Alternating { .. } => None,
        }
    }

    /// Order polynomial of the universal (simply connected) version, for
    /// Lie type only.
    pub fn order_polynomial(&self) -> Option<OrderPolynomial> {
        match self {
            GroupSpec::Lie { family, .. } => Some(universal_order_polynomial(family)),
            GroupSpec::Alternating { .. } => None,
        }
    }

    /// |universal version| as an exact integer.
    pub fn universal_order(&self) -> BigInt {
        match self {
            GroupSpec::Lie { family, q } => {
                universal_order_polynomial(family).eval_int(&big(*q as i64))
            }
            GroupSpec::Alternating { n } => factorial(*n) / 2,
        }
    }

    /// Center size of the universal version (the kernel of universal ->
    /// simple).
    pub fn center_order(&self) -> BigInt {
        match self {
            GroupSpec::Lie { family, q } => big(center_size(family, *q) as i64),
            GroupSpec::Alternating { n } => {
                // Alt(n) is already simple for n >= 5
                let _ = n;
                BigInt::one()
            }
        }
    }

    /// Order of the simple quotient.
    pub fn simple_order(&self) -> BigInt {
        self.universal_order() / self.center_order()
    }

    /// |simple group|_p for the defining characteristic: exactly q^N with N
    /// the number of positive roots backing the order polynomial.
    pub fn defining_p_part(&self) -> Option<BigInt> {
        match self {
            GroupSpec::Lie { family, q } => {
                let e = universal_order_polynomial(family).q_exponent();
                Some(big(*q as i64).pow(e as u32))
            }
            GroupSpec::Alternating { .. } => None,
        }
    }
}

/// Order polynomial of the simply connected group of the given family, as
/// scalar-1 products of q powers and cyclotomic factors.
pub fn universal_order_polynomial(fam: &LieFamily) -> OrderPolynomial {
    let n = fam.rank;
    let minus = OrderPolynomial::qm_minus_one;
    let plus = OrderPolynomial::qm_plus_one;
    let prod =
        |parts: Vec<OrderPolynomial>| parts.into_iter().fold(OrderPolynomial::one(), |a, b| a.mul(&b));
    match fam.family {
        // |SL_{n+1}(q)| = q^{n(n+1)/2} prod_{i=2}^{n+1} (q^i - 1)
        Family::A => {
            let mut parts = vec![OrderPolynomial::q_power((n as u64) * (n as u64 + 1) / 2)];
            for i in 2..=n + 1 {
                parts.push(minus(i));
            }
            prod(parts)
        }
        // |SU_{n+1}(q)| = q^{n(n+1)/2} prod_{i=2}^{n+1} (q^i - (-1)^i)
        Family::TwistedA => {
            let mut parts = vec![OrderPolynomial::q_power((n as u64) * (n as u64 + 1) / 2)];
            for i in 2..=n + 1 {
                parts.push(if i % 2 == 0 { minus(i) } else { plus(i) });
            }
            prod(parts)
        }
        // |Spin_{2n+1}(q)| = |Sp_{2n}(q)| = q^{n^2} prod_{i=1}^n (q^{2i} - 1)
        Family::B | Family::C => {
            let mut parts = vec![OrderPolynomial::q_power((n as u64) * (n as u64))];
            for i in 1..=n {
                parts.push(minus(2 * i));
            }
            prod(parts)
        }
        // |Spin_{2n}^+(q)| = q^{n(n-1)} (q^n - 1) prod_{i=1}^{n-1} (q^{2i} - 1)
        Family::D => {
            let mut parts = vec![
                OrderPolynomial::q_power((n as u64) * (n as u64 - 1)),
                minus(n),
            ];
            for i in 1..n {
                parts.push(minus(2 * i));
            }
            prod(parts)
        }
        // |Spin_{2n}^-(q)| = q^{n(n-1)} (q^n + 1) prod_{i=1}^{n-1} (q^{2i} - 1)
        Family::TwistedD => {
            let mut parts = vec![
                OrderPolynomial::q_power((n as u64) * (n as u64 - 1)),
                plus(n),
            ];
            for i in 1..n {
                parts.push(minus(2 * i));
            }
            prod(parts)
        }
        Family::G2 => prod(vec![OrderPolynomial::q_power(6), minus(6), minus(2)]),
        Family::F4 => prod(vec![
            OrderPolynomial::q_power(24),
            minus(12),
            minus(8),
            minus(6),
            minus(2),
        ]),
        Family::E6 => {
            let mut parts = vec![OrderPolynomial::q_power(36)];
            for d in [2u32, 5, 6, 8, 9, 12] {
                parts.push(minus(d));
            }
            prod(parts)
        }
        Family::TwistedE6 => prod(vec![
            OrderPolynomial::q_power(36),
            minus(2),
            plus(5),
            minus(6),
            minus(8),
            plus(9),
            minus(12),
        ]),
        Family::E7 => {
            let mut parts = vec![OrderPolynomial::q_power(63)];
            for d in [2u32, 6, 8, 10, 12, 14, 18] {
                parts.push(minus(d));
            }
            prod(parts)
        }
        Family::E8 => {
            let mut parts = vec![OrderPolynomial::q_power(120)];
            for d in [2u32, 8, 12, 14, 18, 20, 24, 30] {
                parts.push(minus(d));
            }
            prod(parts)
        }
        // |2B2(q)| = q^2 (q^2 + 1)(q - 1)
        Family::TwistedB2 => prod(vec![OrderPolynomial::q_power(2), plus(2), minus(1)]),
        // |2G2(q)| = q^3 (q^3 + 1)(q - 1)
        Family::TwistedG2 => prod(vec![OrderPolynomial::q_power(3), plus(3), minus(1)]),
        // |3D4(q)| = q^12 (q^8 + q^4 + 1)(q^6 - 1)(q^2 - 1); the first factor
        // is (q^12 - 1)/(q^4 - 1) = Phi3 Phi6 Phi12
        Family::TrialityD4 => prod(vec![
            OrderPolynomial::q_power(12),
            OrderPolynomial::cyclotomic(3, 1),
            OrderPolynomial::cyclotomic(6, 1),
            OrderPolynomial::cyclotomic(12, 1),
            minus(6),
            minus(2),
        ]),
        // |2F4(q)| = q^12 (q^6 + 1)(q^4 - 1)(q^3 + 1)(q - 1)
        Family::TwistedF4 => prod(vec![
            OrderPolynomial::q_power(12),
            plus(6),
            minus(4),
            plus(3),
            minus(1),
        ]),
    }
}

/// Size of the center of the universal version over the field with q
/// elements.
pub fn center_size(fam: &LieFamily, q: u64) -> u64 {
    let n = fam.rank as u64;
    match fam.family {
        Family::A => gcd_u64(n + 1, q - 1),
        Family::TwistedA => gcd_u64(n + 1, q + 1),
        Family::B | Family::C => gcd_u64(2, q - 1),
        Family::D => {
            // gcd(4, q^n - 1)
            let qn_mod4 = pow_mod_small(q, n as u32, 4);
            gcd_u64(4, (qn_mod4 + 3) % 4)
        }
        Family::TwistedD => {
            let qn_mod4 = pow_mod_small(q, n as u32, 4);
            gcd_u64(4, (qn_mod4 + 1) % 4)
        }
        Family::E6 => gcd_u64(3, q - 1),
        Family::TwistedE6 => gcd_u64(3, q + 1),
        Family::E7 => gcd_u64(2, q - 1),
        Family::E8
        | Family::F4
        | Family::G2
        | Family::TwistedB2
        | Family::TwistedG2
        | Family::TrialityD4
        | Family::TwistedF4 => 1,
    }
}

fn pow_mod_small(q: u64, n: u32, m: u64) -> u64 {
    let mut acc = 1u64;
    for _ in 0..n {
        acc = acc * (q % m) % m;
    }
    acc
}

/// Upper bound p^floor((n-1)/(p-1)) for odd p, 2^(n-2) for p = 2, on the
/// p-part of the alternating group of degree n.
pub fn alternating_ppart_bound(n: u64, p: u64) -> BigInt {
    assert!(n >= 5);
    assert!(p >= 2);
    if p == 2 {
        big(2).pow((n - 2) as u32)
    } else {
        big(p as i64).pow(((n - 1) / (p - 1)) as u32)
    }
}

/// Exponent of the bound above, for exact same-base comparisons.
pub fn alternating_ppart_bound_exponent(n: u64, p: u64) -> u64 {
    if p == 2 {
        n - 2
    } else {
        (n - 1) / (p - 1)
    }
}

/// Exact |Alt(n)|_p by Legendre's formula.
pub fn exact_alternating_ppart(n: u64, p: u64) -> BigInt {
    big(p as i64).pow(exact_alternating_ppart_exponent(n, p) as u32)
}

pub fn exact_alternating_ppart_exponent(n: u64, p: u64) -> u64 {
    assert!(n >= 5);
    let e = factorial_valuation(n, p);
    if p == 2 {
        e - 1
    } else {
        e
    }
}

/// Lower bound on module dimensions for alternating groups of degree
/// n >= 11 whose labelling partition has first part at most n - 4:
/// min of a quartic in n over 24 and an exponential branch by parity.
pub fn muller_james_bound(n: u64) -> Result<BigInt, GroupError> {
    if n < 11 {
        return Err(GroupError::InvalidSpec(format!(
            "bound requires degree >= 11, got {}",
            n
        )));
    }
    let nb = big(n as i64);
    let quartic = (nb.pow(4) - big(14) * nb.pow(3) + big(47) * nb.pow(2) - big(34) * &nb)
        / big(24);
    let exponential = if n % 2 == 1 {
        big(55) * big(2).pow(((n - 11) / 2) as u32)
    } else {
        big(89) * big(2).pow(((n - 12) / 2) as u32)
    };
    Ok(quartic.min(exponential))
}

/// q^d with d the dimension of the natural module, classical families only.
/// For the unitary series the natural module is counted over the quadratic
/// extension: twisted A of rank n acts on a space of size q^{2(n+1)}.
pub fn natural_module_size(spec: &GroupSpec) -> Result<BigInt, GroupError> {
    let (fam, q) = match spec {
        GroupSpec::Lie { family, q } => (family, *q),
        GroupSpec::Alternating { .. } => {
            return Err(GroupError::UnsupportedFamily(
                "natural modules are defined for classical groups only".into(),
            ))
        }
    };
    let qb = big(q as i64);
    let n = fam.rank;
    match fam.family {
        Family::A => Ok(qb.pow(n + 1)),
        Family::TwistedA => Ok(qb.pow(2 * (n + 1))),
        Family::C => Ok(qb.pow(2 * n)),
        Family::B => {
            if q % 2 == 0 {
                Err(GroupError::UnsupportedFamily(
                    "odd-dimensional orthogonal groups in characteristic 2 \
                     coincide with the symplectic groups; use family C"
                        .into(),
                ))
            } else {
                Ok(qb.pow(2 * n + 1))
            }
        }
        Family::D | Family::TwistedD => Ok(qb.pow(2 * n)),
        _ => Err(GroupError::UnsupportedFamily(format!(
            "{} is not classical",
            fam.name()
        ))),
    }
}

/// Convenience: evaluate |GL_n(q)| (plus) or |GU_n(q)| (minus) exactly.
pub fn gl_order_polynomial(n: u32, twisted: bool) -> OrderPolynomial {
    let mut parts = vec![OrderPolynomial::q_power((n as u64) * (n as u64 - 1) / 2)];
    for i in 1..=n {
        let factor = if twisted && i % 2 == 1 {
            OrderPolynomial::qm_plus_one(i)
        } else {
            OrderPolynomial::qm_minus_one(i)
        };
        parts.push(factor);
    }
    parts
        .into_iter()
        .fold(OrderPolynomial::one(), |a, b| a.mul(&b))
}

/// Rational 1/c as an order polynomial scalar, used to pass from universal
/// to simple orders symbolically.
pub fn center_reciprocal(fam: &LieFamily, q: u64) -> OrderPolynomial {
    OrderPolynomial::from_parts(
        BigRational::new(BigInt::one(), big(center_size(fam, q) as i64)),
        0,
        Default::default(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn lie(f: Family, r: u32, q: u64) -> GroupSpec {
        GroupSpec::lie(f, r, q).unwrap()
    }

    #[test]
    fn orders_of_small_groups() {
        // PSL2(5) has order 60
        assert_eq!(lie(Family::A, 1, 5).simple_order(), big(60));
        assert_eq!(lie(Family::A, 1, 5).universal_order(), big(120));
        // Sp6(2) has order 1451520 and trivial center
        assert_eq!(lie(Family::C, 3, 2).universal_order(), big(1451520));
        assert_eq!(lie(Family::C, 3, 2).simple_order(), big(1451520));
        // PSL3(3)
        assert_eq!(lie(Family::A, 2, 3).simple_order(), big(5616));
        // PSU4(2) = PSp4(3): same order from both sides
        assert_eq!(
            lie(Family::TwistedA, 3, 2).simple_order(),
            lie(Family::C, 2, 3).simple_order()
        );
        assert_eq!(lie(Family::C, 2, 3).simple_order(), big(25920));
        // Sz(8)
        assert_eq!(lie(Family::TwistedB2, 2, 8).simple_order(), big(29120));
        // alternating
        assert_eq!(GroupSpec::alternating(5).unwrap().simple_order(), big(60));
        assert_eq!(
            GroupSpec::alternating(12).unwrap().simple_order(),
            factorial(12) / 2
        );
    }

    #[test]
    fn e7_degree_set() {
        let poly = universal_order_polynomial(&LieFamily::new(Family::E7, 7).unwrap());
        assert_eq!(poly.q_exponent(), 63);
        // evaluates consistently with the explicit product at q = 2
        let q = big(2);
        let mut expect = q.pow(63);
        for d in [2u32, 6, 8, 10, 12, 14, 18] {
            expect *= q.pow(d) - 1;
        }
        assert_eq!(poly.eval_int(&q), expect);
    }

    #[test]
    fn rejects_nonsimple_specs() {
        assert!(GroupSpec::lie(Family::A, 1, 2).is_err());
        assert!(GroupSpec::lie(Family::A, 1, 3).is_err());
        assert!(GroupSpec::lie(Family::C, 2, 2).is_err());
        assert!(GroupSpec::lie(Family::TwistedA, 2, 2).is_err());
        assert!(GroupSpec::lie(Family::G2, 2, 2).is_err());
        assert!(GroupSpec::lie(Family::TwistedB2, 2, 4).is_err()); // even exponent
        assert!(GroupSpec::lie(Family::TwistedB2, 2, 2).is_err());
        assert!(GroupSpec::lie(Family::TwistedG2, 2, 3).is_err());
        assert!(GroupSpec::lie(Family::A, 1, 6).is_err()); // not a prime power
        assert!(GroupSpec::lie(Family::B, 2, 3).is_err()); // enter as C2
        assert!(GroupSpec::alternating(4).is_err());
    }

    #[test]
    fn center_divides_universal_order_small_sweep() {
        // every supported family with rank <= 4
        let families = [
            (Family::A, 1u32),
            (Family::A, 2),
            (Family::A, 3),
            (Family::A, 4),
            (Family::TwistedA, 2),
            (Family::TwistedA, 3),
            (Family::TwistedA, 4),
            (Family::B, 3),
            (Family::B, 4),
            (Family::C, 2),
            (Family::C, 3),
            (Family::C, 4),
            (Family::D, 4),
            (Family::TwistedD, 4),
            (Family::G2, 2),
            (Family::F4, 4),
            (Family::TrialityD4, 4),
            (Family::TwistedB2, 2),
            (Family::TwistedG2, 2),
            (Family::TwistedF4, 4),
        ];
        for (f, r) in families {
            for q in [2u64, 3, 4, 5, 7, 8, 9] {
                let spec = match GroupSpec::lie(f, r, q) {
                    Ok(s) => s,
                    Err(_) => continue,
                };
                let u = spec.universal_order();
                let c = spec.center_order();
                assert!((&u % &c).is_zero(), "{}: center size divides", spec.name());
                assert_eq!(&u / &c, spec.simple_order());
            }
        }
    }

    #[test]
    fn alternating_ppart_bounds_and_exact() {
        assert_eq!(alternating_ppart_bound(12, 3), big(3).pow(5));
        assert_eq!(alternating_ppart_bound(12, 2), big(2).pow(10));
        assert_eq!(exact_alternating_ppart(12, 3), big(3).pow(5));
        // exact <= bound over the full desk-scale sweep
        for n in 5..=300u64 {
            for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
                if p > n {
                    continue;
                }
                assert!(
                    exact_alternating_ppart_exponent(n, p)
                        <= alternating_ppart_bound_exponent(n, p),
                    "n={} p={}",
                    n,
                    p
                );
            }
        }
        // and the exact value really is the p-part of n!/2
        for n in 5..=40u64 {
            let order = factorial(n) / 2;
            for p in [2u64, 3, 5, 7] {
                assert_eq!(
                    crate::arith::p_part(&order, &big(p as i64)).unwrap(),
                    exact_alternating_ppart(n, p),
                    "n={} p={}",
                    n,
                    p
                );
            }
        }
    }

    #[test]
    fn muller_james_values() {
        assert_eq!(muller_james_bound(11).unwrap(), big(55));
        assert_eq!(muller_james_bound(12).unwrap(), big(89));
        assert_eq!(muller_james_bound(20).unwrap(), big(1424));
        assert!(muller_james_bound(10).is_err());
    }

    #[test]
    fn natural_module_sizes() {
        assert_eq!(
            natural_module_size(&lie(Family::C, 2, 3)).unwrap(),
            big(81)
        );
        assert_eq!(
            natural_module_size(&lie(Family::A, 3, 2)).unwrap(),
            big(16)
        );
        assert_eq!(
            natural_module_size(&lie(Family::B, 3, 3)).unwrap(),
            big(3).pow(7)
        );
        assert!(natural_module_size(&lie(Family::G2, 2, 3)).is_err());
    }

    #[test]
    fn gl_gu_orders() {
        // |GL2(3)| = 48, |GU2(3)| = 96... |GU_2(q)| = q(q-1)(q+1)^2? No:
        // q^{1}(q^2-1)(q+1) at q=3: 3*8*4 = 96
        assert_eq!(gl_order_polynomial(2, false).eval_int(&big(3)), big(48));
        assert_eq!(gl_order_polynomial(2, true).eval_int(&big(3)), big(96));
        assert_eq!(gl_order_polynomial(3, false).eval_int(&big(2)), big(168));
        // |GU3(3)| = 3^3 (3+1)(3^2-1)(3^3+1) = 27*4*8*28
        assert_eq!(
            gl_order_polynomial(3, true).eval_int(&big(3)),
            big(27 * 4 * 8 * 28)
        );
    }

    #[test]
    fn defining_p_part_is_q_power() {
        assert_eq!(lie(Family::C, 2, 3).defining_p_part().unwrap(), big(81));
        assert_eq!(lie(Family::A, 2, 3).defining_p_part().unwrap(), big(27));
    }
}
