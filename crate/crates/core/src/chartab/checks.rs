//! Table-level checkers: quasisimple-cover witnesses, codegree-subset
//! comparisons, and the projective degree bound for characters over a
//! central subgroup.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{render_set, CharacterTable, TableError};
use crate::arith::{is_prime, p_part};
use crate::cyclo::CycloValue;
use crate::report::{Verdict, VerificationReport};

/// Search a quasisimple table for a faithful character whose degree divided
/// by the central prime is not a degree of the central quotient.
///
/// Quotient degrees are read off from the characters whose kernel contains
/// every singleton class; the quotient table itself is never materialized.
/// Inapplicable unless the center has prime order.
pub fn verify_thm_e_instance(t: &CharacterTable) -> Result<VerificationReport, TableError> {
    let report = VerificationReport::new("thm-e", Verdict::Inapplicable)
        .with_param("table", &t.name)
        .with_param("order", &t.order);
    let center = t.center_classes();
    let z: BigInt = center.iter().map(|&i| t.classes[i].size.clone()).sum();
    if !is_prime(&z) {
        return Ok(report.with_narrative(format!(
            "center has order {}, which is not prime",
            z
        )));
    }
    // degrees of the central quotient: characters with the center in the kernel
    let mut quotient_degrees = std::collections::BTreeSet::new();
    for (i, ch) in t.characters.iter().enumerate() {
        let deg_val = CycloValue::from_rational(BigRational::from_integer(ch.degree.clone()));
        let center_in_kernel = center.iter().all(|&c| t.characters[i].values[c] == deg_val);
        if center_in_kernel {
            quotient_degrees.insert(ch.degree.clone());
        }
    }
    for (i, ch) in t.characters.iter().enumerate() {
        if !t.kernel_order(i).is_one() {
            continue; // not faithful
        }
        let (ratio, rem) = ch.degree.div_rem(&z);
        let outside = !rem.is_zero() || !quotient_degrees.contains(&ratio);
        if outside {
            let ratio_text = if rem.is_zero() {
                ratio.to_string()
            } else {
                format!("{}/{} (non-integral)", ch.degree, z)
            };
            return Ok(VerificationReport::new("thm-e", Verdict::Verified)
                .with_param("table", &t.name)
                .with_param("order", &t.order)
                .with_param("center", &z)
                .with_witness("character", &ch.label)
                .with_witness("degree", &ch.degree)
                .with_narrative(format!(
                    "faithful character {} of degree {} has {} not among the \
                     quotient degrees {}",
                    ch.label,
                    ch.degree,
                    ratio_text,
                    render_set(&quotient_degrees),
                )));
        }
    }
    Ok(VerificationReport::new("thm-e", Verdict::Refuted)
        .with_param("table", &t.name)
        .with_param("order", &t.order)
        .with_param("center", &z)
        .with_witness("quotient-degrees", render_set(&quotient_degrees))
        .with_narrative(
            "every faithful character degree divided by the central prime \
             is a quotient character degree on this table",
        ))
}

/// Subset verdict cod(g) <= cod(h) with all violating codegrees listed.
pub fn codegree_subset(
    g: &CharacterTable,
    h: &CharacterTable,
) -> Result<VerificationReport, TableError> {
    let cg = g.codegrees()?;
    let ch = h.codegrees()?;
    let violations: Vec<BigInt> = cg.difference(&ch).cloned().collect();
    let report = VerificationReport::new("codegree-subset", if violations.is_empty() {
        Verdict::Verified
    } else {
        Verdict::Refuted
    })
    .with_param("g", &g.name)
    .with_param("h", &h.name);
    if violations.is_empty() {
        Ok(report.with_narrative(format!(
            "cod({}) = {} is contained in cod({}) = {}",
            g.name,
            render_set(&cg),
            h.name,
            render_set(&ch)
        )))
    } else {
        let witness_set: super::CodegreeSet = violations.iter().cloned().collect();
        Ok(report
            .with_witness("violating-codegrees", render_set(&witness_set))
            .with_narrative(format!(
                "cod({}) = {} is not contained in cod({}) = {}",
                g.name,
                render_set(&cg),
                h.name,
                render_set(&ch)
            )))
    }
}

/// How the linear character of the designated central subgroup is given.
#[derive(Debug, Clone)]
pub enum ThetaSpec {
    /// theta(z) := value(reference character, z) / degree(reference), read
    /// off a character of the table.
    FromCharacter(usize),
    /// The trivial character of the central subgroup.
    Trivial,
}

/// Verify, for each prime p dividing |G/N|, that the minimum p-part among
/// degrees of characters lying over theta satisfies
/// (min chi(1)_p)^2 <= |G/N|_p.
///
/// N must be a union of singleton classes whose total size divides |G|;
/// "lying over theta" means value(chi, z) = chi(1) * theta(z) on every
/// designated class.
pub fn check_projective_bound(
    t: &CharacterTable,
    central_class_indices: &[usize],
    theta: &ThetaSpec,
) -> Result<VerificationReport, TableError> {
    let base = VerificationReport::new("lem-proj", Verdict::Inapplicable)
        .with_param("table", &t.name);
    // the designated classes must be singletons forming a subgroup-sized union
    let mut n_order = BigInt::zero();
    for &i in central_class_indices {
        if i >= t.classes.len() {
            return Ok(base.with_narrative(format!("class index {} out of range", i)));
        }
        if !t.classes[i].size.is_one() {
            return Ok(base.with_narrative(format!(
                "class {} has size {}, not central",
                t.classes[i].label, t.classes[i].size
            )));
        }
        n_order += &t.classes[i].size;
    }
    if n_order.is_zero() || !(&t.order % &n_order).is_zero() {
        return Ok(base.with_narrative(format!(
            "designated classes have total size {}, which does not divide {}",
            n_order, t.order
        )));
    }
    let quotient_order = &t.order / &n_order;

    // theta's values on the designated classes
    let theta_values: Vec<CycloValue> = match theta {
        ThetaSpec::Trivial => central_class_indices
            .iter()
            .map(|_| CycloValue::from_integer(1))
            .collect(),
        ThetaSpec::FromCharacter(idx) => {
            if *idx >= t.characters.len() {
                return Ok(base.with_narrative(format!("character index {} out of range", idx)));
            }
            let ch = &t.characters[*idx];
            let inv_deg = BigRational::new(BigInt::one(), ch.degree.clone());
            central_class_indices
                .iter()
                .map(|&c| ch.values[c].scale(&inv_deg))
                .collect()
        }
    };

    // characters lying over theta: value proportional to degree * theta
    let mut over: Vec<usize> = Vec::new();
    for (i, ch) in t.characters.iter().enumerate() {
        let deg = BigRational::from_integer(ch.degree.clone());
        let lies_over = central_class_indices.iter().zip(&theta_values).all(
            |(&c, tv)| ch.values[c] == tv.scale(&deg),
        );
        if lies_over {
            over.push(i);
        }
    }
    if over.is_empty() {
        return Ok(base.with_narrative(
            "no character lies over the designated linear character",
        ));
    }

    // for each prime p | |G/N|: (min chi(1)_p)^2 <= |G/N|_p, exactly
    let mut narrative_lines = Vec::new();
    let mut primes = Vec::new();
    let mut m = quotient_order.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= m {
        if (&m % &p).is_zero() {
            primes.push(p.clone());
            while (&m % &p).is_zero() {
                m /= &p;
            }
        }
        p += 1;
    }
    if m > BigInt::one() {
        primes.push(m);
    }
    for p in &primes {
        let bound = p_part(&quotient_order, p).expect("prime by construction");
        let min_part = over
            .iter()
            .map(|&i| p_part(&t.characters[i].degree, p).unwrap())
            .min()
            .unwrap();
        let holds = &min_part * &min_part <= bound;
        narrative_lines.push(format!(
            "p = {}: min degree p-part {} squared {} |G/N|_p = {}",
            p,
            min_part,
            if holds { "<=" } else { ">" },
            bound
        ));
        if !holds {
            return Ok(VerificationReport::new("lem-proj", Verdict::Refuted)
                .with_param("table", &t.name)
                .with_param("p", p)
                .with_witness("min-degree-p-part", &min_part)
                .with_witness("quotient-p-part", &bound)
                .with_narrative(narrative_lines.join("\n")));
        }
    }
    Ok(VerificationReport::new("lem-proj", Verdict::Verified)
        .with_param("table", &t.name)
        .with_param("central-order", &n_order)
        .with_narrative(narrative_lines.join("\n")))
}
