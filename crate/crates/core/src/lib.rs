//! Exact-arithmetic toolkit for character codegrees of simple and
//! quasisimple groups.
//!
//! Everything here is exact: arbitrary-precision integers and rationals,
//! cyclotomic polynomials, order polynomials (scalar · q^a · ∏ Φ_i(q)^e_i),
//! cyclotomic field elements with a decidable zero test, character tables
//! with exact values, and the verification checkers built on top of them.
//! No verdict is ever produced by floating-point comparison.

pub mod arith;
pub mod chartab;
pub mod conjecture;
pub mod cyclo;
pub mod groups;
pub mod lie;
pub mod report;

pub use arith::{p_part, p_prime_part};
pub use cyclo::{cyclotomic_poly, CycloValue, IntPolynomial, OrderPolynomial};
pub use report::{Verdict, VerificationReport};
