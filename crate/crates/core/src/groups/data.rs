//! Line-oriented data files for transcribed minimal-degree tables.
//!
//! Row format (whitespace separated, `#` comments):
//!
//! ```text
//! family rank-spec q-spec expression-or-value source-tag
//! ```
//!
//! `rank-spec` is an integer, `lo..hi`, or `*`; `q-spec` is `*`, `q=K`,
//! `q>=K`, `q<=K`, `odd`, or `even`. Expressions may use `q`, `n` (the
//! rank), integer literals, `+ - * / ^`, parentheses, `gcd(a,b)` and
//! `isqrt(a)`; division and isqrt must be exact. The most specific matching
//! row wins: an exact `q=K` beats a constrained row beats `*`. Malformed
//! rows abort the load with their line number.
//!
//! Sporadic rows are simpler: `group p d source`.

use std::path::Path;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use super::{Family, GroupSpec};
use crate::arith::{big, sqrt_exact};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DataError {
    #[error("{file}:{line}: {msg}")]
    Malformed {
        file: String,
        line: usize,
        msg: String,
    },
    #[error("no data row matches {0}")]
    NoRow(String),
    #[error("ambiguous data rows for {0}")]
    Ambiguous(String),
    #[error("io error reading {0}: {1}")]
    Io(String, String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum RankSpec {
    Any,
    Exact(u32),
    Range(u32, u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum QSpec {
    Any,
    Exact(u64),
    AtLeast(u64),
    AtMost(u64),
    Odd,
    Even,
}

impl QSpec {
    fn matches(&self, q: u64) -> bool {
        match self {
            QSpec::Any => true,
            QSpec::Exact(k) => q == *k,
            QSpec::AtLeast(k) => q >= *k,
            QSpec::AtMost(k) => q <= *k,
            QSpec::Odd => q % 2 == 1,
            QSpec::Even => q.is_multiple_of(2),
        }
    }

    /// Rows with an exact q beat constrained rows beat wildcard rows.
    fn specificity(&self) -> u8 {
        match self {
            QSpec::Exact(_) => 2,
            QSpec::Any => 0,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone)]
struct Row {
    family: Family,
    rank: RankSpec,
    q: QSpec,
    expr: Expr,
    #[allow(dead_code)]
    source: String,
}

/// Table of rows for one kind of datum (projective lower bounds or minimal
/// permutation degrees).
#[derive(Debug, Clone, Default)]
pub struct FormulaTable {
    rows: Vec<Row>,
}

impl FormulaTable {
    fn parse(file: &str, text: &str) -> Result<Self, DataError> {
        let mut rows = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap().trim();
            if content.is_empty() {
                continue;
            }
            let fields: Vec<&str> = content.split_whitespace().collect();
            if fields.len() != 5 {
                return Err(DataError::Malformed {
                    file: file.to_string(),
                    line,
                    msg: format!("expected 5 fields, found {}", fields.len()),
                });
            }
            let family = Family::from_code(fields[0]).ok_or_else(|| DataError::Malformed {
                file: file.to_string(),
                line,
                msg: format!("unknown family `{}`", fields[0]),
            })?;
            let rank = parse_rank_spec(fields[1]).ok_or_else(|| DataError::Malformed {
                file: file.to_string(),
                line,
                msg: format!("bad rank spec `{}`", fields[1]),
            })?;
            let q = parse_q_spec(fields[2]).ok_or_else(|| DataError::Malformed {
                file: file.to_string(),
                line,
                msg: format!("bad q spec `{}`", fields[2]),
            })?;
            let expr = Expr::parse(fields[3]).map_err(|e| DataError::Malformed {
                file: file.to_string(),
                line,
                msg: format!("bad expression `{}`: {}", fields[3], e),
            })?;
            rows.push(Row {
                family,
                rank,
                q,
                expr,
                source: fields[4].to_string(),
            });
        }
        Ok(FormulaTable { rows })
    }

    /// Evaluate the best-matching row at (family, rank, q).
    pub fn lookup(&self, spec: &GroupSpec) -> Result<BigInt, DataError> {
        let (fam, q) = match spec {
            GroupSpec::Lie { family, q } => (family, *q),
            GroupSpec::Alternating { .. } => return Err(DataError::NoRow(spec.name())),
        };
        let mut best: Option<(&Row, u8)> = None;
        let mut ambiguous = false;
        for row in &self.rows {
            if row.family != fam.family {
                continue;
            }
            let rank_ok = match row.rank {
                RankSpec::Any => true,
                RankSpec::Exact(r) => r == fam.rank,
                RankSpec::Range(lo, hi) => (lo..=hi).contains(&fam.rank),
            };
            if !rank_ok || !row.q.matches(q) {
                continue;
            }
            let s = row.q.specificity();
            match best {
                None => best = Some((row, s)),
                Some((_, bs)) if s > bs => {
                    best = Some((row, s));
                    ambiguous = false;
                }
                Some((_, bs)) if s == bs => ambiguous = true,
                _ => {}
            }
        }
        if ambiguous {
            return Err(DataError::Ambiguous(spec.name()));
        }
        let (row, _) = best.ok_or_else(|| DataError::NoRow(spec.name()))?;
        row.expr
            .eval(&big(q as i64), &big(fam.rank as i64))
            .map_err(|e| DataError::NoRow(format!("{}: {}", spec.name(), e)))
    }
}

fn parse_rank_spec(s: &str) -> Option<RankSpec> {
    if s == "*" {
        return Some(RankSpec::Any);
    }
    if let Some((lo, hi)) = s.split_once("..") {
        return Some(RankSpec::Range(lo.parse().ok()?, hi.parse().ok()?));
    }
    s.parse().ok().map(RankSpec::Exact)
}

fn parse_q_spec(s: &str) -> Option<QSpec> {
    match s {
        "*" => Some(QSpec::Any),
        "odd" => Some(QSpec::Odd),
        "even" => Some(QSpec::Even),
        _ => {
            if let Some(v) = s.strip_prefix("q>=") {
                Some(QSpec::AtLeast(v.parse().ok()?))
            } else if let Some(v) = s.strip_prefix("q<=") {
                Some(QSpec::AtMost(v.parse().ok()?))
            } else if let Some(v) = s.strip_prefix("q=") {
                Some(QSpec::Exact(v.parse().ok()?))
            } else {
                None
            }
        }
    }
}

/// One sporadic minimal-Brauer-degree row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SporadicRow {
    pub group: String,
    pub p: u64,
    pub min_degree: u64,
    pub source: String,
}

fn parse_sporadic(file: &str, text: &str) -> Result<Vec<SporadicRow>, DataError> {
    let mut rows = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(DataError::Malformed {
                file: file.to_string(),
                line,
                msg: format!("expected 4 fields, found {}", fields.len()),
            });
        }
        let p = fields[1].parse().map_err(|_| DataError::Malformed {
            file: file.to_string(),
            line,
            msg: format!("bad prime `{}`", fields[1]),
        })?;
        let d = fields[2].parse().map_err(|_| DataError::Malformed {
            file: file.to_string(),
            line,
            msg: format!("bad degree `{}`", fields[2]),
        })?;
        rows.push(SporadicRow {
            group: fields[0].to_string(),
            p,
            min_degree: d,
            source: fields[3].to_string(),
        });
    }
    Ok(rows)
}

/// Sporadic group orders needed for the spot checks; a small literal table.
pub fn sporadic_order(name: &str) -> Option<BigInt> {
    let v: i64 = match name {
        "M11" => 7_920,
        "M12" => 95_040,
        "M22" => 443_520,
        "M23" => 10_200_960,
        "M24" => 244_823_040,
        "J1" => 175_560,
        "J2" => 604_800,
        _ => return None,
    };
    Some(big(v))
}

/// All loaded tables. Built-in copies are compiled in; the environment
/// variable CODEG_DATA_DIR switches to external files at the same names.
#[derive(Debug, Clone)]
pub struct DataTables {
    pub projective_bounds: FormulaTable,
    pub min_perm_degrees: FormulaTable,
    pub sporadic_brauer: Vec<SporadicRow>,
}

const LSZ_BUILTIN: &str = include_str!("../../data/lsz.dat");
const MINPERM_BUILTIN: &str = include_str!("../../data/minperm.dat");
const SPORADIC_BUILTIN: &str = include_str!("../../data/sporadic.dat");

impl DataTables {
    /// Parse the built-in tables, or the directory named by CODEG_DATA_DIR
    /// when that is set.
    pub fn load() -> Result<Self, DataError> {
        if let Ok(dir) = std::env::var("CODEG_DATA_DIR") {
            return Self::load_from_dir(Path::new(&dir));
        }
        Self::load_builtin()
    }

    pub fn load_builtin() -> Result<Self, DataError> {
        Ok(DataTables {
            projective_bounds: FormulaTable::parse("lsz.dat", LSZ_BUILTIN)?,
            min_perm_degrees: FormulaTable::parse("minperm.dat", MINPERM_BUILTIN)?,
            sporadic_brauer: parse_sporadic("sporadic.dat", SPORADIC_BUILTIN)?,
        })
    }

    pub fn load_from_dir(dir: &Path) -> Result<Self, DataError> {
        let read = |name: &str| -> Result<String, DataError> {
            std::fs::read_to_string(dir.join(name))
                .map_err(|e| DataError::Io(dir.join(name).display().to_string(), e.to_string()))
        };
        Ok(DataTables {
            projective_bounds: FormulaTable::parse("lsz.dat", &read("lsz.dat")?)?,
            min_perm_degrees: FormulaTable::parse("minperm.dat", &read("minperm.dat")?)?,
            sporadic_brauer: parse_sporadic("sporadic.dat", &read("sporadic.dat")?)?,
        })
    }

    /// Lower bound for the smallest nontrivial cross-characteristic
    /// projective representation degree.
    pub fn lsz_min_degree(&self, spec: &GroupSpec) -> Result<BigInt, DataError> {
        self.projective_bounds.lookup(spec)
    }

    /// Minimal faithful permutation degree.
    pub fn min_perm_degree(&self, spec: &GroupSpec) -> Result<BigInt, DataError> {
        self.min_perm_degrees.lookup(spec)
    }

    pub fn sporadic_row(&self, group: &str, p: u64) -> Option<&SporadicRow> {
        self.sporadic_brauer
            .iter()
            .find(|r| r.group == group && r.p == p)
    }
}

// ---- tiny exact expression language ----

#[derive(Debug, Clone, PartialEq, Eq)]
enum Expr {
    Num(BigInt),
    Q,
    N,
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Gcd(Box<Expr>, Box<Expr>),
    Isqrt(Box<Expr>),
}

impl Expr {
    fn parse(text: &str) -> Result<Expr, String> {
        let tokens = tokenize(text)?;
        let mut p = Parser { tokens, pos: 0 };
        let e = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(format!("trailing input at token {}", p.pos));
        }
        Ok(e)
    }

    fn eval(&self, q: &BigInt, n: &BigInt) -> Result<BigInt, String> {
        Ok(match self {
            Expr::Num(v) => v.clone(),
            Expr::Q => q.clone(),
            Expr::N => n.clone(),
            Expr::Add(a, b) => a.eval(q, n)? + b.eval(q, n)?,
            Expr::Sub(a, b) => a.eval(q, n)? - b.eval(q, n)?,
            Expr::Mul(a, b) => a.eval(q, n)? * b.eval(q, n)?,
            Expr::Div(a, b) => {
                let a = a.eval(q, n)?;
                let b = b.eval(q, n)?;
                if b.is_zero() {
                    return Err("division by zero".to_string());
                }
                let (quot, rem) = a.div_rem(&b);
                if !rem.is_zero() {
                    return Err(format!("inexact division {} / {}", a, b));
                }
                quot
            }
            Expr::Pow(a, b) => {
                let a = a.eval(q, n)?;
                let b = b.eval(q, n)?;
                let e: u32 = b
                    .try_into()
                    .map_err(|_| "exponent out of range".to_string())?;
                a.pow(e)
            }
            Expr::Neg(a) => -a.eval(q, n)?,
            Expr::Gcd(a, b) => a.eval(q, n)?.gcd(&b.eval(q, n)?),
            Expr::Isqrt(a) => {
                let a = a.eval(q, n)?;
                if a.is_negative() {
                    return Err("isqrt of negative".to_string());
                }
                let (r, exact) = sqrt_exact(&a);
                if !exact {
                    return Err(format!("{} is not a perfect square", a));
                }
                r
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
}

fn tokenize(text: &str) -> Result<Vec<Tok>, String> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1;
            }
            ',' => {
                out.push(Tok::Comma);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Tok::Num(s.parse().unwrap()));
            }
            'a'..='z' | 'A'..='Z' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                out.push(Tok::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(format!("unexpected character `{}`", other)),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok) -> Result<(), String> {
        if self.bump() == Some(t.clone()) {
            Ok(())
        } else {
            Err(format!("expected {:?}", t))
        }
    }

    fn expr(&mut self) -> Result<Expr, String> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, String> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = Expr::Mul(Box::new(acc), Box::new(self.power()?));
                }
                Some(Tok::Slash) => {
                    self.bump();
                    acc = Expr::Div(Box::new(acc), Box::new(self.power()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Expr, String> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            // right-associative
            let exp = self.power()?;
            return Ok(Expr::Pow(Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, String> {
        match self.bump() {
            Some(Tok::Num(v)) => Ok(Expr::Num(v)),
            Some(Tok::Minus) => Ok(Expr::Neg(Box::new(self.atom()?))),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => match name.as_str() {
                "q" => Ok(Expr::Q),
                "n" => Ok(Expr::N),
                "gcd" => {
                    self.expect(Tok::LParen)?;
                    let a = self.expr()?;
                    self.expect(Tok::Comma)?;
                    let b = self.expr()?;
                    self.expect(Tok::RParen)?;
                    Ok(Expr::Gcd(Box::new(a), Box::new(b)))
                }
                "isqrt" => {
                    self.expect(Tok::LParen)?;
                    let a = self.expr()?;
                    self.expect(Tok::RParen)?;
                    Ok(Expr::Isqrt(Box::new(a)))
                }
                other => Err(format!("unknown identifier `{}`", other)),
            },
            other => Err(format!("unexpected token {:?}", other)),
        }
    }
}

/// Used by tests and the table-totality check: every family named in the
/// supported scope, with a representative rank.
pub fn supported_lie_families() -> Vec<(Family, u32)> {
    vec![
        (Family::TwistedB2, 2),
        (Family::TwistedG2, 2),
        (Family::TwistedF4, 4),
        (Family::G2, 2),
        (Family::TrialityD4, 4),
        (Family::F4, 4),
        (Family::TwistedE6, 6),
        (Family::A, 1),
        (Family::A, 2),
        (Family::A, 3),
        (Family::TwistedA, 2),
        (Family::TwistedA, 3),
        (Family::TwistedA, 4),
        (Family::TwistedA, 5),
        (Family::TwistedA, 6),
        (Family::C, 2),
        (Family::C, 3),
        (Family::B, 3),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::GroupSpec;

    fn tables() -> DataTables {
        DataTables::load_builtin().unwrap()
    }

    fn lie(f: Family, r: u32, q: u64) -> GroupSpec {
        GroupSpec::lie(f, r, q).unwrap()
    }

    #[test]
    fn expression_language() {
        let e = Expr::parse("(q^(n+1)-q)/(q-1)").unwrap();
        assert_eq!(e.eval(&big(3), &big(2)).unwrap(), big(12));
        let e = Expr::parse("gcd(2,q-1)").unwrap();
        assert_eq!(e.eval(&big(9), &big(1)).unwrap(), big(2));
        let e = Expr::parse("isqrt(q/2)").unwrap();
        assert_eq!(e.eval(&big(8), &big(2)).unwrap(), big(2));
        assert!(Expr::parse("q$").is_err());
        // inexact division is an evaluation error
        let e = Expr::parse("q/2").unwrap();
        assert!(e.eval(&big(3), &big(1)).is_err());
    }

    #[test]
    fn lsz_examples() {
        // PSL2(13) -> 6
        assert_eq!(tables().lsz_min_degree(&lie(Family::A, 1, 13)).unwrap(), big(6));
        // PSp_{2n}(q) odd q -> (q^n - 1)/2
        assert_eq!(tables().lsz_min_degree(&lie(Family::C, 3, 3)).unwrap(), big(13));
        assert_eq!(tables().lsz_min_degree(&lie(Family::C, 2, 5)).unwrap(), big(12));
        // PSU3(3) -> 6
        assert_eq!(
            tables().lsz_min_degree(&lie(Family::TwistedA, 2, 3)).unwrap(),
            big(6)
        );
        // PSU4(3) -> 20 (the transcribed generic bound)
        assert_eq!(
            tables().lsz_min_degree(&lie(Family::TwistedA, 3, 3)).unwrap(),
            big(20)
        );
        // exceptions
        assert_eq!(tables().lsz_min_degree(&lie(Family::A, 1, 4)).unwrap(), big(2));
        assert_eq!(tables().lsz_min_degree(&lie(Family::A, 1, 9)).unwrap(), big(3));
        // Sz(8) -> 14
        assert_eq!(
            tables().lsz_min_degree(&lie(Family::TwistedB2, 2, 8)).unwrap(),
            big(14)
        );
        // Sp6(2) cross-characteristic bound is 7
        assert_eq!(tables().lsz_min_degree(&lie(Family::C, 3, 2)).unwrap(), big(7));
    }

    #[test]
    fn min_perm_examples() {
        assert_eq!(tables().min_perm_degree(&lie(Family::A, 2, 3)).unwrap(), big(13));
        assert_eq!(tables().min_perm_degree(&lie(Family::A, 1, 7)).unwrap(), big(7));
        assert_eq!(tables().min_perm_degree(&lie(Family::C, 2, 3)).unwrap(), big(27));
        assert_eq!(tables().min_perm_degree(&lie(Family::A, 1, 9)).unwrap(), big(6));
        assert_eq!(tables().min_perm_degree(&lie(Family::A, 3, 2)).unwrap(), big(8));
        assert_eq!(tables().min_perm_degree(&lie(Family::C, 3, 2)).unwrap(), big(28));
        assert_eq!(
            tables().min_perm_degree(&lie(Family::TrialityD4, 4, 2)).unwrap(),
            big(819)
        );
        assert_eq!(tables().min_perm_degree(&lie(Family::D, 4, 2)).unwrap(), big(120));
        assert_eq!(tables().min_perm_degree(&lie(Family::D, 4, 3)).unwrap(), big(1080));
        assert_eq!(
            tables().min_perm_degree(&lie(Family::TwistedD, 4, 2)).unwrap(),
            big(119)
        );
        assert_eq!(tables().min_perm_degree(&lie(Family::G2, 2, 3)).unwrap(), big(351));
        assert_eq!(tables().min_perm_degree(&lie(Family::G2, 2, 4)).unwrap(), big(416));
        assert_eq!(tables().min_perm_degree(&lie(Family::B, 3, 3)).unwrap(), big(351));
        assert_eq!(
            tables().min_perm_degree(&lie(Family::TwistedB2, 2, 8)).unwrap(),
            big(65)
        );
        assert_eq!(
            tables().min_perm_degree(&lie(Family::TwistedA, 2, 5)).unwrap(),
            big(50)
        );
        assert_eq!(
            tables().min_perm_degree(&lie(Family::TwistedA, 4, 2)).unwrap(),
            big(165)
        );
    }

    #[test]
    fn tables_are_total_over_supported_families() {
        let t = tables();
        for (f, r) in supported_lie_families() {
            // find a valid q for the family
            for q in [2u64, 3, 4, 5, 7, 8, 9, 13, 27] {
                let spec = match GroupSpec::lie(f, r, q) {
                    Ok(s) => s,
                    Err(_) => continue,
                };
                if f == Family::B && q % 2 == 0 {
                    continue; // enter even-q odd-dimensional groups as C
                }
                t.lsz_min_degree(&spec)
                    .unwrap_or_else(|e| panic!("lsz missing for {}: {}", spec.name(), e));
                t.min_perm_degree(&spec)
                    .unwrap_or_else(|e| panic!("minperm missing for {}: {}", spec.name(), e));
            }
        }
    }

    #[test]
    fn rejects_unsupported_loudly() {
        let t = tables();
        let e8 = lie(Family::E8, 8, 2);
        assert!(matches!(t.lsz_min_degree(&e8), Err(DataError::NoRow(_))));
        assert!(matches!(t.min_perm_degree(&e8), Err(DataError::NoRow(_))));
        let alt = GroupSpec::alternating(7).unwrap();
        assert!(matches!(t.lsz_min_degree(&alt), Err(DataError::NoRow(_))));
    }

    #[test]
    fn min_perm_at_most_group_order() {
        let t = tables();
        for (f, r) in supported_lie_families() {
            for q in [2u64, 3, 4, 5, 7, 8, 9] {
                let spec = match GroupSpec::lie(f, r, q) {
                    Ok(s) => s,
                    Err(_) => continue,
                };
                if f == Family::B && q % 2 == 0 {
                    continue;
                }
                let d = t.min_perm_degree(&spec).unwrap();
                assert!(d <= spec.simple_order(), "{}", spec.name());
            }
        }
    }

    #[test]
    fn malformed_rows_abort_with_line() {
        let bad = "A 1 * (q-1)/gcd(2,q-1) src\nA 1 oops\n";
        let err = FormulaTable::parse("test.dat", bad).unwrap_err();
        assert_eq!(
            err,
            DataError::Malformed {
                file: "test.dat".into(),
                line: 2,
                msg: "expected 5 fields, found 3".into()
            }
        );
    }

    #[test]
    fn sporadic_rows_load() {
        let t = tables();
        let row = t.sporadic_row("M11", 2).unwrap();
        assert_eq!(row.min_degree, 10);
        assert!(t.sporadic_row("M11", 23).is_none());
        assert_eq!(sporadic_order("M11").unwrap(), big(7920));
        assert_eq!(sporadic_order("M24").unwrap(), big(244823040));
        assert!(sporadic_order("Monster").is_none());
    }
}
