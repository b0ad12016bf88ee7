//! Parser for the character-table interchange format.
//!
//! ```text
//! CHARTAB 1
//! group <name> order <decimal>
//! class <label> <size>                       # identity first
//! char <label> <degree> [faithful|unfaithful] : v v v ...
//! ```
//!
//! Values are whitespace separated; each value token is a decimal integer,
//! a fraction `a/b`, or a sum of terms `c*z(n)^k` joined by `+`/`-`,
//! meaning c * zeta_n^k. `#` starts a comment. All structural invariants
//! are checked before the table is returned.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{Character, CharacterTable, ConjugacyClass, TableError};
use crate::cyclo::CycloValue;

pub fn parse_table(document: &str) -> Result<CharacterTable, TableError> {
    let mut name: Option<String> = None;
    let mut order: Option<BigInt> = None;
    let mut classes: Vec<ConjugacyClass> = Vec::new();
    let mut characters: Vec<Character> = Vec::new();
    let mut header_seen = false;

    let err = |line: usize, msg: String| TableError::Parse { line, msg };

    for (idx, raw) in document.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        let mut fields = content.split_whitespace();
        let keyword = fields.next().unwrap();
        if !header_seen {
            if keyword != "CHARTAB" || fields.next() != Some("1") {
                return Err(err(line, "expected header `CHARTAB 1`".into()));
            }
            header_seen = true;
            continue;
        }
        match keyword {
            "group" => {
                let n = fields
                    .next()
                    .ok_or_else(|| err(line, "missing group name".into()))?;
                if fields.next() != Some("order") {
                    return Err(err(line, "expected `order` after group name".into()));
                }
                let o = fields
                    .next()
                    .ok_or_else(|| err(line, "missing order".into()))?;
                order = Some(
                    o.parse()
                        .map_err(|_| err(line, format!("bad order `{}`", o)))?,
                );
                name = Some(n.to_string());
            }
            "class" => {
                let label = fields
                    .next()
                    .ok_or_else(|| err(line, "missing class label".into()))?;
                let size = fields
                    .next()
                    .ok_or_else(|| err(line, "missing class size".into()))?;
                let size: BigInt = size
                    .parse()
                    .map_err(|_| err(line, format!("bad class size `{}`", size)))?;
                if size <= BigInt::zero() {
                    return Err(err(line, "class size must be positive".into()));
                }
                if fields.next().is_some() {
                    return Err(err(line, "trailing fields after class size".into()));
                }
                classes.push(ConjugacyClass {
                    label: label.to_string(),
                    size,
                });
            }
            "char" => {
                let rest = content["char".len()..].trim();
                let (head, tail) = rest
                    .split_once(':')
                    .ok_or_else(|| err(line, "missing `:` in char line".into()))?;
                let head_fields: Vec<&str> = head.split_whitespace().collect();
                let (label, degree_str, flag) = match head_fields.as_slice() {
                    [label, degree] => (*label, *degree, None),
                    [label, degree, flag] => {
                        let f = match *flag {
                            "faithful" => true,
                            "unfaithful" => false,
                            other => {
                                return Err(err(
                                    line,
                                    format!("unknown character flag `{}`", other),
                                ))
                            }
                        };
                        (*label, *degree, Some(f))
                    }
                    _ => return Err(err(line, "expected `char <label> <degree> [flag] :`".into())),
                };
                let degree: BigInt = degree_str
                    .parse()
                    .map_err(|_| err(line, format!("bad degree `{}`", degree_str)))?;
                let mut values = Vec::new();
                for token in tail.split_whitespace() {
                    values.push(
                        parse_value(token)
                            .map_err(|msg| err(line, format!("value `{}`: {}", token, msg)))?,
                    );
                }
                characters.push(Character {
                    label: label.to_string(),
                    degree,
                    values,
                    faithful_flag: flag,
                });
            }
            other => return Err(err(line, format!("unknown directive `{}`", other))),
        }
    }

    if !header_seen {
        return Err(err(0, "empty document".into()));
    }
    let table = CharacterTable {
        name: name.ok_or_else(|| err(0, "missing `group` line".into()))?,
        order: order.unwrap(),
        classes,
        characters,
    };
    table.validate()?;
    Ok(table)
}

/// One value token: integer, fraction, or signed sum of `c*z(n)^k` terms.
fn parse_value(token: &str) -> Result<CycloValue, String> {
    let mut acc = CycloValue::zero();
    let mut term = String::new();
    let chars = token.chars();
    let mut first = true;
    let mut sign = 1i64;
    // split on top-level +/-; a leading sign binds to the first term
    for c in chars {
        match c {
            '+' | '-' if !first || !term.is_empty() => {
                acc = acc.add(&parse_term(&term, sign)?);
                term.clear();
                sign = if c == '-' { -1 } else { 1 };
            }
            '-' => {
                sign = -1;
                first = false;
            }
            '+' => {
                first = false;
            }
            _ => {
                term.push(c);
                first = false;
            }
        }
    }
    if term.is_empty() {
        return Err("empty term".to_string());
    }
    acc = acc.add(&parse_term(&term, sign)?);
    Ok(acc)
}

/// `c*z(n)^k`, `z(n)^k`, `z(n)`, or a bare rational; sign applied to c.
fn parse_term(term: &str, sign: i64) -> Result<CycloValue, String> {
    let (coef_str, root_str) = match term.split_once('*') {
        Some((c, r)) => (Some(c), Some(r)),
        None => {
            if term.starts_with('z') {
                (None, Some(term))
            } else {
                (Some(term), None)
            }
        }
    };
    let mut coef = match coef_str {
        None => BigRational::from_integer(BigInt::from(1)),
        Some(c) => parse_rational(c)?,
    };
    coef *= BigRational::from_integer(BigInt::from(sign));
    match root_str {
        None => Ok(CycloValue::from_rational(coef)),
        Some(r) => {
            let inner = r
                .strip_prefix("z(")
                .ok_or_else(|| format!("expected z(n) in `{}`", r))?;
            let (n_str, rest) = inner
                .split_once(')')
                .ok_or_else(|| format!("missing `)` in `{}`", r))?;
            let n: u32 = n_str
                .parse()
                .map_err(|_| format!("bad root order `{}`", n_str))?;
            if n == 0 {
                return Err("root order must be positive".to_string());
            }
            let k: u32 = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')
                    .ok_or_else(|| format!("expected ^ in `{}`", r))?
                    .parse()
                    .map_err(|_| format!("bad exponent in `{}`", r))?
            };
            Ok(CycloValue::root_term(coef, n, k))
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| format!("bad numerator `{}`", n))?;
            let d: BigInt = d.parse().map_err(|_| format!("bad denominator `{}`", d))?;
            if d.is_zero() {
                return Err("zero denominator".to_string());
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| format!("bad integer `{}`", s))?;
            Ok(BigRational::from_integer(n))
        }
    }
}
