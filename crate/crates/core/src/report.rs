//! Machine-readable summaries of a code.

use std::fmt;

use serde::Serialize;

use crate::code::SkewCyclicCode;
use crate::dna::{verify_reversible, ReversibilityReport, VerifyMode};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassFlags {
    pub palindromic: bool,
    pub theta_palindromic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeReport {
    pub n: usize,
    pub k: usize,
    pub degree: usize,
    pub generator: String,
    pub class: ClassFlags,
    /// Minimum distance over the n R16 symbols.
    pub d_r16: usize,
    /// Minimum distance of the Gray image over 4n F16 symbols.
    pub d_gray_f16: usize,
    pub component_dimensions: [usize; 4],
    pub reversibility: ReversibilityReport,
}

impl CodeReport {
    /// Parameters, class flags and a reversibility check (spanning set plus
    /// `samples` seeded random codewords).
    pub fn analyze(
        code: &SkewCyclicCode,
        budget: u64,
        samples: usize,
        seed: u64,
    ) -> Result<CodeReport> {
        let g = code.generator();
        let mode = if samples == 0 {
            VerifyMode::ExhaustiveBasis
        } else {
            VerifyMode::BasisAndRandom { samples, seed }
        };
        Ok(CodeReport {
            n: code.n(),
            k: code.k(),
            degree: code.degree(),
            generator: g.to_string(),
            class: ClassFlags {
                palindromic: g.is_palindromic(),
                theta_palindromic: g.is_theta_palindromic(),
            },
            d_r16: code.min_distance(budget)?,
            d_gray_f16: code.gray_min_distance(budget)?,
            component_dimensions: code.component_dimensions(),
            reversibility: verify_reversible(code, mode),
        })
    }

    /// Recomputes the divisor property, class flags and reversibility
    /// verdict from the generator string and checks they agree with `self`.
    pub fn revalidate(&self) -> Result<bool> {
        let g: crate::SkewPoly = self.generator.parse()?;
        let divides = g.right_divides_xn_minus_1(self.n)?;
        let code = SkewCyclicCode::new_allow_odd(g.clone(), self.n)?;
        let fresh = verify_reversible(&code, VerifyMode::ExhaustiveBasis);
        Ok(divides
            && self.class.palindromic == g.is_palindromic()
            && self.class.theta_palindromic == g.is_theta_palindromic()
            && fresh.pass == self.reversibility.pass)
    }

    pub fn reversible_label(&self) -> &'static str {
        if self.reversibility.pass {
            "pass"
        } else {
            "fail"
        }
    }
}

impl fmt::Display for CodeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "generator        {}", self.generator)?;
        writeln!(
            f,
            "[n, k, d]        [{}, {}, {}]",
            self.n, self.k, self.d_r16
        )?;
        writeln!(f, "degree           {}", self.degree)?;
        writeln!(f, "d (Gray, F16)    {}", self.d_gray_f16)?;
        writeln!(f, "components dim   {:?}", self.component_dimensions)?;
        writeln!(
            f,
            "palindromic      {}\ntheta-palindromic {}",
            self.class.palindromic, self.class.theta_palindromic
        )?;
        write!(
            f,
            "reversible       {} ({} spanning, {} random)",
            self.reversible_label(),
            self.reversibility.checked,
            self.reversibility.samples
        )?;
        if let Some(w) = &self.reversibility.witness {
            let words: Vec<String> = w.iter().map(|x| x.to_hex()).collect();
            write!(f, "\nwitness          {}", words.join(","))?;
        }
        Ok(())
    }
}
