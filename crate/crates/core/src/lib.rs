//! Skew cyclic codes over R16 = F16 + uF16 + vF16 + uvF16 and the reversible
//! DNA 8-mer codes they induce.
//!
//! The layers, bottom up:
//!
//! * [`gf16`]: the field F16 = F2[α]/(α⁴+α+1).
//! * [`r16`]: the ring R16, its Gray/CRT map and the order-2 automorphism θ.
//! * [`skewpoly`]: the skew polynomial ring R16[x; θ] with `x·a = θ(a)·x`.
//! * [`code`]: skew cyclic codes `C = (g)` for monic right divisors `g` of
//!   xⁿ − 1, their component codes, minimum distance and generator search.
//! * [`dna`]: the F16 → DNA-pair table, the 8-mer map and the reversibility
//!   verifier, plus the codebook file format.
//! * [`cli`]: the command-line front end used by the `skewdna` binary.
//!
//! ```
//! use skewdna::{R16Elem, SkewPoly, SkewCyclicCode};
//! use skewdna::dna::{verify_reversible, VerifyMode};
//!
//! let g: SkewPoly = "1000,B220,D330,1000".parse().unwrap();
//! let code = SkewCyclicCode::new(g, 6).unwrap();
//! assert_eq!(code.params(1 << 24).unwrap(), (6, 3, 4));
//! assert!(verify_reversible(&code, VerifyMode::ExhaustiveBasis).pass);
//! # let _ = R16Elem::ONE;
//! ```

pub mod cli;
pub mod code;
pub mod dna;
pub mod gf16;
pub mod r16;
pub mod report;
pub mod skewpoly;
pub mod table;

pub use code::{ComponentCode, SkewCyclicCode};
pub use gf16::Gf16;
pub use r16::{GrayVector, R16Elem};
pub use skewpoly::SkewPoly;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("divisor must be monic")]
    NotMonic,
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("generator degree must be positive and less than n = {n} (got {degree})")]
    DegreeOutOfRange { degree: usize, n: usize },
    #[error("length n = {0} is odd; skew cyclic codes of odd length are ordinary cyclic codes (pass --allow-odd to proceed anyway)")]
    OddLength(usize),
    #[error("generator does not right-divide x^{n} - 1")]
    NotRightDivisor { n: usize },
    #[error("message degree {degree} must be less than k = {k}")]
    MessageTooLong { degree: usize, k: usize },
    #[error("codeword has length {got}, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("too large to enumerate: {needed} candidates exceed the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("{class} generators need {expected} degree, got {degree}")]
    ClassParity {
        class: &'static str,
        expected: &'static str,
        degree: usize,
    },
    #[error("codebook format error: {0}")]
    Format(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
