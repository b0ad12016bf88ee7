//! Character tables and the codegree engine.
//!
//! Tables carry exact class sizes and exact cyclotomic character values.
//! Kernels are detected by exact equality value = degree, centers by class
//! size 1, and codegrees by exact division; a division that fails to be
//! exact signals a corrupted table rather than being rounded.

mod checks;
mod parse;

pub use checks::{check_projective_bound, codegree_subset, verify_thm_e_instance, ThetaSpec};
pub use parse::parse_table;

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::cyclo::CycloValue;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableError {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invariant `{name}` violated: {detail}")]
    InvariantViolation { name: String, detail: String },
    #[error("character {character} has non-integral codegree: {detail}")]
    NonIntegralCodegree { character: String, detail: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub label: String,
    pub size: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    pub label: String,
    pub degree: BigInt,
    pub values: Vec<CycloValue>,
    /// Caller-designated faithfulness flag from the extended fixture
    /// format; None when the fixture does not carry flags.
    pub faithful_flag: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    pub name: String,
    pub order: BigInt,
    pub classes: Vec<ConjugacyClass>,
    pub characters: Vec<Character>,
}

/// Set of codegrees; contains 1 exactly once, from the trivial character.
pub type CodegreeSet = BTreeSet<BigInt>;

/// Multiset of codegrees with multiplicities.
pub type PseudoAlgebra = BTreeMap<BigInt, usize>;

impl CharacterTable {
    /// Check every structural invariant; used at parse time and available
    /// to callers that construct tables directly.
    pub fn validate(&self) -> Result<(), TableError> {
        let fail = |name: &str, detail: String| {
            Err(TableError::InvariantViolation {
                name: name.to_string(),
                detail,
            })
        };
        if self.classes.is_empty() {
            return fail("nonempty", "table has no classes".into());
        }
        if self.characters.len() != self.classes.len() {
            return fail(
                "square",
                format!(
                    "{} characters vs {} classes",
                    self.characters.len(),
                    self.classes.len()
                ),
            );
        }
        let size_sum: BigInt = self.classes.iter().map(|c| c.size.clone()).sum();
        if size_sum != self.order {
            return fail(
                "class-size-sum",
                format!("sizes sum to {}, order is {}", size_sum, self.order),
            );
        }
        if !self.classes[0].size.is_one() {
            return fail(
                "identity-first",
                format!("first class has size {}", self.classes[0].size),
            );
        }
        let degree_square_sum: BigInt = self
            .characters
            .iter()
            .map(|ch| &ch.degree * &ch.degree)
            .sum();
        if degree_square_sum != self.order {
            return fail(
                "degree-square-sum",
                format!(
                    "degrees square-sum to {}, order is {}",
                    degree_square_sum, self.order
                ),
            );
        }
        for ch in &self.characters {
            if ch.values.len() != self.classes.len() {
                return fail(
                    "value-count",
                    format!("character {} has {} values", ch.label, ch.values.len()),
                );
            }
            if ch.degree <= BigInt::zero() {
                return fail("positive-degree", format!("character {}", ch.label));
            }
            let deg = CycloValue::from_rational(num_rational::BigRational::from_integer(
                ch.degree.clone(),
            ));
            if ch.values[0] != deg {
                return fail(
                    "identity-value",
                    format!(
                        "character {} has value {} at the identity, degree {}",
                        ch.label,
                        ch.values[0].render(),
                        ch.degree
                    ),
                );
            }
        }
        Ok(())
    }

    pub fn class_index(&self, label: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.label == label)
    }

    pub fn character_index(&self, label: &str) -> Option<usize> {
        self.characters.iter().position(|c| c.label == label)
    }

    /// Order of the kernel of the i-th character: total size of the classes
    /// where the value equals the degree exactly.
    pub fn kernel_order(&self, i: usize) -> BigInt {
        let ch = &self.characters[i];
        let deg = CycloValue::from_rational(num_rational::BigRational::from_integer(
            ch.degree.clone(),
        ));
        let mut total = BigInt::zero();
        for (c, v) in self.classes.iter().zip(&ch.values) {
            if *v == deg {
                total += &c.size;
            }
        }
        total
    }

    /// cod(chi) = |G : ker chi| / chi(1), with exact divisibility enforced.
    pub fn codegree(&self, i: usize) -> Result<BigInt, TableError> {
        let ch = &self.characters[i];
        let ker = self.kernel_order(i);
        let (index, rem) = self.order.div_rem(&ker);
        if !rem.is_zero() {
            return Err(TableError::NonIntegralCodegree {
                character: ch.label.clone(),
                detail: format!("kernel order {} does not divide group order", ker),
            });
        }
        let (cod, rem) = index.div_rem(&ch.degree);
        if !rem.is_zero() {
            return Err(TableError::NonIntegralCodegree {
                character: ch.label.clone(),
                detail: format!("degree {} does not divide |G:ker| = {}", ch.degree, index),
            });
        }
        Ok(cod)
    }

    pub fn codegrees(&self) -> Result<CodegreeSet, TableError> {
        let mut out = BTreeSet::new();
        for i in 0..self.characters.len() {
            out.insert(self.codegree(i)?);
        }
        Ok(out)
    }

    /// The group pseudo-algebra: codegrees with multiplicity.
    pub fn pseudo_algebra(&self) -> Result<PseudoAlgebra, TableError> {
        let mut out = BTreeMap::new();
        for i in 0..self.characters.len() {
            *out.entry(self.codegree(i)?).or_insert(0) += 1;
        }
        Ok(out)
    }

    /// Set of character degrees cd(G).
    pub fn degrees(&self) -> BTreeSet<BigInt> {
        self.characters.iter().map(|c| c.degree.clone()).collect()
    }

    /// Indices of the singleton classes; their union is the center.
    pub fn center_classes(&self) -> Vec<usize> {
        self.classes
            .iter()
            .enumerate()
            .filter(|(_, c)| c.size.is_one())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn center_order(&self) -> BigInt {
        self.center_classes()
            .iter()
            .map(|&i| self.classes[i].size.clone())
            .sum()
    }

    /// First-orthogonality of a character with itself:
    /// sum over classes of size * value * conj(value) equals |G| exactly.
    pub fn norm_is_group_order(&self, i: usize) -> bool {
        let ch = &self.characters[i];
        let mut acc = CycloValue::zero();
        for (c, v) in self.classes.iter().zip(&ch.values) {
            let term = v
                .norm_squared()
                .scale(&num_rational::BigRational::from_integer(c.size.clone()));
            acc = acc.add(&term);
        }
        acc.equals_rational(&num_rational::BigRational::from_integer(self.order.clone()))
    }

    /// True when the fixture carries faithfulness flags on every character.
    pub fn has_faithful_flags(&self) -> bool {
        !self.characters.is_empty()
            && self.characters.iter().all(|c| c.faithful_flag.is_some())
    }
}

/// Render a codegree set like `{1,12,15,20}`.
pub fn render_set(set: &CodegreeSet) -> String {
    let items: Vec<String> = set.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

/// Render a pseudo-algebra with repeats, `{1,12,15,20,20,20,30,60,60}`.
pub fn render_multiset(ms: &PseudoAlgebra) -> String {
    let mut items = Vec::new();
    for (v, &m) in ms {
        for _ in 0..m {
            items.push(v.to_string());
        }
    }
    format!("{{{}}}", items.join(","))
}
