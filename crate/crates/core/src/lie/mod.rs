//! Lie-type degree computations: semisimple character degrees via exact
//! order-polynomial division, the odd-dimensional spin quantity D, Weil
//! degrees, and the exhaustive symplectic centralizer enumeration behind
//! the no-solution check for the p'-order equation.

mod centralizers;

pub use centralizers::{
    enumerate_symplectic_centralizers, verify_eq1_no_solution, CentralizerDescriptor,
    CentralizerKind, GlFactor, Sign,
};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use thiserror::Error;

use crate::arith::big;
use crate::cyclo::{OrderPolyError, OrderPolynomial};
use crate::groups::{self, DataTables, Family, GroupSpec};
use crate::report::{Verdict, VerificationReport};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LieError {
    #[error("order polynomial division failed: {0}")]
    Order(#[from] OrderPolyError),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Group(#[from] groups::GroupError),
    #[error("data table: {0}")]
    Data(#[from] groups::DataError),
}

/// Ambient dual-group order, centralizer order, and the degree multiplier
/// contributed by the unipotent part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemisimpleDatum {
    pub ambient_order: OrderPolynomial,
    pub centralizer_order: OrderPolynomial,
    pub unipotent_degree: u64,
}

impl SemisimpleDatum {
    pub fn new(
        ambient_order: OrderPolynomial,
        centralizer_order: OrderPolynomial,
        unipotent_degree: u64,
    ) -> Self {
        SemisimpleDatum {
            ambient_order,
            centralizer_order,
            unipotent_degree,
        }
    }
}

/// Degree of a character attached to the datum:
/// unipotent degree times the p'-part of the index of the centralizer.
pub fn semisimple_degree(d: &SemisimpleDatum) -> Result<OrderPolynomial, LieError> {
    let index = d.ambient_order.div(&d.centralizer_order)?;
    let scaled = index
        .p_prime_part()
        .mul(&OrderPolynomial::scalar_int(d.unipotent_degree as i64));
    Ok(scaled)
}

/// Named semisimple data for the involution / order-3 classes in the
/// adjoint exceptional groups whose centralizer orders are part of the
/// shipped data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SemisimplePreset {
    /// E7 adjoint, involution outside the simple group, q = 1 mod 4:
    /// centralizer of twisted A7 type, order 2 q^28 Phi1^4 Phi2^7 Phi3
    /// Phi4^2 Phi6^2 Phi8 Phi10 Phi14.
    E7Plus,
    /// E7 adjoint, q = 3 mod 4: centralizer of untwisted A7 type.
    E7Minus,
    /// E6 adjoint, order-3 class with centralizer of type A2(q^3).3.
    E6,
    /// Twisted E6 adjoint, order-3 class with centralizer 2A2(q^3).3.
    TwistedE6,
}

impl SemisimplePreset {
    pub fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "e7-plus" => SemisimplePreset::E7Plus,
            "e7-minus" => SemisimplePreset::E7Minus,
            "e6" => SemisimplePreset::E6,
            "2e6" => SemisimplePreset::TwistedE6,
            _ => return None,
        })
    }

    pub fn datum(self) -> SemisimpleDatum {
        let minus = OrderPolynomial::qm_minus_one;
        let plus = OrderPolynomial::qm_plus_one;
        let two = OrderPolynomial::scalar_int(2);
        let three = OrderPolynomial::scalar_int(3);
        match self {
            SemisimplePreset::E7Plus => {
                let ambient = groups::universal_order_polynomial(
                    &groups::LieFamily::new(Family::E7, 7).unwrap(),
                );
                // 2 |SU8(q)| = 2 q^28 prod_{i=2}^{8} (q^i - (-1)^i)
                let mut c = two.mul(&OrderPolynomial::q_power(28));
                for i in 2..=8u32 {
                    c = c.mul(&if i % 2 == 0 { minus(i) } else { plus(i) });
                }
                SemisimpleDatum::new(ambient, c, 1)
            }
            SemisimplePreset::E7Minus => {
                let ambient = groups::universal_order_polynomial(
                    &groups::LieFamily::new(Family::E7, 7).unwrap(),
                );
                // 2 |SL8(q)| = 2 q^28 prod_{i=2}^{8} (q^i - 1)
                let mut c = two.mul(&OrderPolynomial::q_power(28));
                for i in 2..=8u32 {
                    c = c.mul(&minus(i));
                }
                SemisimpleDatum::new(ambient, c, 1)
            }
            SemisimplePreset::E6 => {
                let ambient = groups::universal_order_polynomial(
                    &groups::LieFamily::new(Family::E6, 6).unwrap(),
                );
                // 3 |SL3(q^3)| = 3 q^9 (q^6 - 1)(q^9 - 1)
                let c = three
                    .mul(&OrderPolynomial::q_power(9))
                    .mul(&minus(6))
                    .mul(&minus(9));
                SemisimpleDatum::new(ambient, c, 1)
            }
            SemisimplePreset::TwistedE6 => {
                let ambient = groups::universal_order_polynomial(
                    &groups::LieFamily::new(Family::TwistedE6, 6).unwrap(),
                );
                // 3 |SU3(q^3)| = 3 q^9 (q^6 - 1)(q^9 + 1)
                let c = three
                    .mul(&OrderPolynomial::q_power(9))
                    .mul(&minus(6))
                    .mul(&plus(9));
                SemisimpleDatum::new(ambient, c, 1)
            }
        }
    }
}

/// The expected degree of the E7 semisimple character for the plus class:
/// 1/2 Phi1^3 Phi3^2 Phi5 Phi6 Phi7 Phi9 Phi12 Phi18.
pub fn e7_expected_degree() -> OrderPolynomial {
    OrderPolynomial::parse("1/2 * Phi1^3 * Phi3^2 * Phi5 * Phi6 * Phi7 * Phi9 * Phi12 * Phi18")
        .unwrap()
}

/// D = prod_{i=1}^{n} (q^{2i} - 1) / prod_{i=1}^{n} (q^i - eps^i), the
/// doubled p'-index of the involution centralizer in the projective
/// conformal symplectic group. The quotient is exactly
/// prod_{i=1}^{n} (q^i + eps^i).
pub fn spin_d(n: u32, q: u64, eps: i8) -> Result<BigInt, LieError> {
    if n < 3 {
        return Err(LieError::InvalidParams(format!("n = {} below 3", n)));
    }
    if q.is_multiple_of(2) {
        return Err(LieError::InvalidParams(format!("q = {} must be odd", q)));
    }
    if eps != 1 && eps != -1 {
        return Err(LieError::InvalidParams("eps must be +1 or -1".into()));
    }
    let qb = big(q as i64);
    let mut acc = BigInt::from(1);
    for i in 1..=n {
        let sign = if eps == 1 || i % 2 == 0 { 1 } else { -1 };
        acc *= qb.pow(i) + big(sign);
    }
    Ok(acc)
}

/// D/2 (the semisimple degree) and D/4 when integral.
pub fn spin_d_parts(n: u32, q: u64, eps: i8) -> Result<(BigInt, BigInt, Option<BigInt>), LieError> {
    let d = spin_d(n, q, eps)?;
    let (half, rem) = d.div_rem(&big(2));
    debug_assert!(rem.is_zero(), "D is always even for odd q");
    let (quarter, rem4) = d.div_rem(&big(4));
    Ok((d, half, if rem4.is_zero() { Some(quarter) } else { None }))
}

/// Symbolic form of D as an order polynomial (all exponents nonnegative).
pub fn spin_d_symbolic(n: u32, eps: i8) -> Result<OrderPolynomial, LieError> {
    if n < 3 {
        return Err(LieError::InvalidParams(format!("n = {} below 3", n)));
    }
    let mut acc = OrderPolynomial::one();
    for i in 1..=n {
        let factor = if eps == 1 || i % 2 == 0 {
            OrderPolynomial::qm_plus_one(i)
        } else {
            OrderPolynomial::qm_minus_one(i)
        };
        acc = acc.mul(&factor);
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeilFamily {
    Sp,
    Sl,
    Su,
}

impl WeilFamily {
    pub fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "sp" | "Sp" => WeilFamily::Sp,
            "sl" | "SL" | "Sl" => WeilFamily::Sl,
            "su" | "SU" | "Su" => WeilFamily::Su,
            _ => return None,
        })
    }
}

/// Degrees of the distinguished small characters: (q^n +- 1)/2 for the
/// symplectic groups over odd q, (q^n - eps^n)/(q - eps) for the linear
/// (eps = +1) and unitary (eps = -1) groups.
pub fn weil_degrees(family: WeilFamily, n: u32, q: u64) -> Result<Vec<BigInt>, LieError> {
    if n < 2 {
        return Err(LieError::InvalidParams(format!("n = {} below 2", n)));
    }
    let qb = big(q as i64);
    match family {
        WeilFamily::Sp => {
            if q.is_multiple_of(2) {
                return Err(LieError::InvalidParams(
                    "symplectic Weil degrees require odd q".into(),
                ));
            }
            let qn = qb.pow(n);
            Ok(vec![(&qn - 1) / 2, (&qn + 1) / 2])
        }
        WeilFamily::Sl => {
            let qn = qb.pow(n);
            Ok(vec![(qn - 1) / (&qb - 1)])
        }
        WeilFamily::Su => {
            let qn = qb.pow(n);
            let eps_n = if n.is_multiple_of(2) { 1 } else { -1 };
            Ok(vec![(qn - big(eps_n)) / (&qb + 1)])
        }
    }
}

/// Check that each Weil degree divided by each admissible central prime
/// falls strictly below the transcribed minimal projective degree of the
/// simple quotient (non-integral ratios pass outright; a ratio of 1 is a
/// degree of every group and refutes).
pub fn check_weil_below_min_degree(
    tables: &DataTables,
    family: WeilFamily,
    n: u32,
    q: u64,
) -> Result<VerificationReport, LieError> {
    let degrees = weil_degrees(family, n, q)?;
    let (spec, center_primes, claim_family) = match family {
        WeilFamily::Sp => {
            let spec = GroupSpec::lie(Family::C, n, q)?;
            (spec, vec![big(2)], "Sp")
        }
        WeilFamily::Sl => {
            let spec = GroupSpec::lie(Family::A, n - 1, q)?;
            let center = crate::arith::gcd_u64(n as u64, q - 1);
            (spec, prime_divisors_u64(center), "SL")
        }
        WeilFamily::Su => {
            let spec = GroupSpec::lie(Family::TwistedA, n - 1, q)?;
            let center = crate::arith::gcd_u64(n as u64, q + 1);
            (spec, prime_divisors_u64(center), "SU")
        }
    };
    let bound = tables.lsz_min_degree(&spec)?;
    let mut report = VerificationReport::new("weil-min-degree", Verdict::Verified)
        .with_param("family", claim_family)
        .with_param("n", n)
        .with_param("q", q)
        .with_param("simple-group", spec.name())
        .with_param("min-degree-bound", &bound);
    if center_primes.is_empty() {
        return Ok(VerificationReport::new("weil-min-degree", Verdict::Inapplicable)
            .with_param("family", claim_family)
            .with_param("n", n)
            .with_param("q", q)
            .with_narrative(
                "the relevant center is trivial; there is no quasisimple cover to check",
            ));
    }
    let mut lines = Vec::new();
    for w in &degrees {
        for r in &center_primes {
            let (ratio, rem) = w.div_rem(r);
            if !rem.is_zero() {
                lines.push(format!("degree {} / {} is non-integral: passes", w, r));
                continue;
            }
            if ratio == big(1) {
                return Ok(report
                    .with_narrative(format!(
                        "degree {} / {} = 1 is a character degree of every group",
                        w, r
                    ))
                    .with_witness("degree", w)
                    .with_verdict(Verdict::Refuted));
            }
            if ratio < bound {
                lines.push(format!(
                    "degree {} / {} = {} < bound {}",
                    w, r, ratio, bound
                ));
            } else {
                return Ok(report
                    .with_narrative(format!(
                        "degree {} / {} = {} is not below the bound {}",
                        w, r, ratio, bound
                    ))
                    .with_witness("degree", w)
                    .with_verdict(Verdict::Refuted));
            }
        }
    }
    report = report.with_narrative(lines.join("\n"));
    Ok(report)
}

fn prime_divisors_u64(n: u64) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            out.push(big(p as i64));
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        out.push(big(m as i64));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn e7_identity_symbolic() {
        let datum = SemisimplePreset::E7Plus.datum();
        let degree = semisimple_degree(&datum).unwrap();
        assert_eq!(degree, e7_expected_degree());
        assert_eq!(
            degree.render(),
            "1/2 * Phi1^3 * Phi3^2 * Phi5 * Phi6 * Phi7 * Phi9 * Phi12 * Phi18"
        );
        // doubling gives integral coefficients
        let doubled = degree.mul(&OrderPolynomial::scalar_int(2));
        assert!(doubled.scalar().is_one());
    }

    #[test]
    fn e7_minus_class_is_the_ennola_dual() {
        let degree = semisimple_degree(&SemisimplePreset::E7Minus.datum()).unwrap();
        assert_eq!(
            degree.render(),
            "1/2 * Phi2^3 * Phi3 * Phi6^2 * Phi9 * Phi10 * Phi12 * Phi14 * Phi18"
        );
    }

    #[test]
    fn e7_degree_matches_direct_integer_route() {
        // evaluating the symbolic degree at q = 5 equals the p'-index
        // computed directly from big integer orders
        let datum = SemisimplePreset::E7Plus.datum();
        let degree = semisimple_degree(&datum).unwrap();
        let q = big(5);
        let ambient = datum.ambient_order.eval_int(&q);
        let centralizer = datum.centralizer_order.eval_int(&q);
        let index = &ambient / &centralizer;
        let p_prime_index = crate::arith::p_prime_part(&index, &q).unwrap();
        assert_eq!(degree.eval_int(&q), p_prime_index);
    }

    #[test]
    fn e6_presets_divide_exactly() {
        // the order-3 classes exist when 3 divides q - 1 (untwisted) or
        // q + 1 (twisted); coherence is checked at such q only
        let cases = [
            (SemisimplePreset::E6, vec![4u64, 7, 13]),
            (SemisimplePreset::TwistedE6, vec![2u64, 5, 8, 11]),
        ];
        for (preset, qs) in cases {
            let degree = semisimple_degree(&preset.datum()).unwrap();
            for q in qs {
                let qb = big(q as i64);
                let d = preset.datum();
                let index = d.ambient_order.eval_int(&qb) / d.centralizer_order.eval_int(&qb);
                let expect = crate::arith::p_prime_part(
                    &index,
                    &big(crate::arith::prime_power(q).unwrap().0 as i64),
                )
                .unwrap();
                let value = degree.eval(&qb);
                assert!(value.is_integer(), "q = {}", q);
                assert_eq!(value.to_integer(), expect, "q = {}", q);
            }
        }
    }

    #[test]
    fn centralizer_equals_ambient_gives_unipotent_degree() {
        let amb = groups::universal_order_polynomial(
            &groups::LieFamily::new(Family::E7, 7).unwrap(),
        );
        let d = SemisimpleDatum::new(amb.clone(), amb, 2);
        assert_eq!(
            semisimple_degree(&d).unwrap(),
            OrderPolynomial::scalar_int(2)
        );
    }

    #[test]
    fn spin_d_examples() {
        assert_eq!(spin_d(3, 5, 1).unwrap(), big(19656));
        assert_eq!(spin_d(3, 3, -1).unwrap(), big(520));
        let (d, half, quarter) = spin_d_parts(3, 5, 1).unwrap();
        assert_eq!(d, big(19656));
        assert_eq!(half, big(9828));
        assert_eq!(quarter, Some(big(4914)));
        assert!(spin_d(2, 3, 1).is_err());
        assert!(spin_d(3, 4, 1).is_err());
    }

    #[test]
    fn spin_d_defining_identity() {
        // D * prod (q^i - eps^i) = prod (q^{2i} - 1) exactly
        for n in 3..=8u32 {
            for q in [3u64, 5, 7] {
                for eps in [1i8, -1] {
                    let d = spin_d(n, q, eps).unwrap();
                    let qb = big(q as i64);
                    let mut lhs = d;
                    let mut rhs = BigInt::one();
                    for i in 1..=n {
                        let sign = if eps == 1 || i % 2 == 0 { 1 } else { -1 };
                        lhs *= qb.pow(i) - big(sign);
                        rhs *= qb.pow(2 * i) - 1;
                    }
                    assert_eq!(lhs, rhs, "n={} q={} eps={}", n, q, eps);
                }
            }
        }
    }

    #[test]
    fn spin_d_symbolic_coherence() {
        for n in 3..=8u32 {
            for eps in [1i8, -1] {
                let sym = spin_d_symbolic(n, eps).unwrap();
                for q in [3u64, 5, 7, 9] {
                    assert_eq!(
                        sym.eval_int(&big(q as i64)),
                        spin_d(n, q, eps).unwrap(),
                        "n={} q={} eps={}",
                        n,
                        q,
                        eps
                    );
                }
            }
        }
    }

    #[test]
    fn weil_degree_examples() {
        assert_eq!(
            weil_degrees(WeilFamily::Sp, 3, 3).unwrap(),
            vec![big(13), big(14)]
        );
        assert_eq!(weil_degrees(WeilFamily::Su, 4, 3).unwrap(), vec![big(20)]);
        assert_eq!(weil_degrees(WeilFamily::Sl, 3, 2).unwrap(), vec![big(7)]);
        assert!(weil_degrees(WeilFamily::Sp, 3, 4).is_err());
    }

    #[test]
    fn weil_below_min_degree_examples() {
        let tables = DataTables::load_builtin().unwrap();
        let r = check_weil_below_min_degree(&tables, WeilFamily::Sp, 3, 3).unwrap();
        assert_eq!(r.verdict, Verdict::Verified);
        assert!(r.narrative.contains("14 / 2 = 7 < bound 13"));
        let r = check_weil_below_min_degree(&tables, WeilFamily::Sp, 2, 5).unwrap();
        assert_eq!(r.verdict, Verdict::Verified);
        assert!(r.narrative.contains("13 / 2 is non-integral"));
        assert!(r.narrative.contains("12 / 2 = 6 < bound 12"));
        let r = check_weil_below_min_degree(&tables, WeilFamily::Su, 4, 3).unwrap();
        assert_eq!(r.verdict, Verdict::Verified);
        assert!(r.narrative.contains("20 / 2 = 10 < bound 20"));
        // trivial center: inapplicable
        let r = check_weil_below_min_degree(&tables, WeilFamily::Sl, 3, 2).unwrap();
        assert_eq!(r.verdict, Verdict::Inapplicable);
    }
}
