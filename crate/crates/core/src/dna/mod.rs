//! DNA images of R16 codewords and the reversibility verifier.
//!
//! `tau` sends a field element to a DNA double base so that x and x⁴ land on
//! reversed pairs. An R16 symbol becomes an 8-mer by applying `tau` to its
//! four Gray coordinates. Because the Gray image of θ(x) is the Frobenius of
//! the reversed Gray image of x, reversing a DNA codeword letter by letter
//! is the same as [`rho`]: reverse the coordinates and apply θ to each.

mod codebook;

pub use codebook::{Codebook, CodebookEntry};

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::code::SkewCyclicCode;
use crate::gf16::{Gf16, FROB};
use crate::r16::R16Elem;
use crate::skewpoly::SkewPoly;
use crate::table::TABLE;
use crate::{Error, Result};

const fn build_pairs() -> [[u8; 2]; 16] {
    let mut pairs = [[0u8; 2]; 16];
    let mut r = 0;
    while r < 16 {
        pairs[TABLE[r].additive as usize] = TABLE[r].pair;
        r += 1;
    }
    pairs
}

const PAIRS: [[u8; 2]; 16] = build_pairs();

const fn pair_reversal_holds() -> bool {
    let mut x = 0;
    while x < 16 {
        let p = PAIRS[x];
        let q = PAIRS[FROB[x] as usize];
        if p[0] != q[1] || p[1] != q[0] {
            return false;
        }
        x += 1;
    }
    true
}

const _: () = assert!(
    pair_reversal_holds(),
    "correspondence table breaks tau(x^4) = reverse(tau(x))"
);

/// A DNA double base.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct DnaPair(pub [u8; 2]);

/// A DNA 8-mer, the image of one R16 symbol.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dna8(pub [u8; 8]);

impl DnaPair {
    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("ASCII")
    }

    pub fn reversed(self) -> DnaPair {
        DnaPair([self.0[1], self.0[0]])
    }
}

impl Dna8 {
    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("ASCII")
    }
}

impl fmt::Display for DnaPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for DnaPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DnaPair({})", self.as_str())
    }
}

impl fmt::Display for Dna8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for Dna8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dna8({})", self.as_str())
    }
}

fn check_alphabet(s: &str) -> Result<()> {
    match s.chars().find(|c| !matches!(c, 'A' | 'C' | 'G' | 'T')) {
        Some(c) => Err(Error::Parse(format!("invalid DNA letter {c:?} in {s:?}"))),
        None => Ok(()),
    }
}

pub fn tau(x: Gf16) -> DnaPair {
    DnaPair(PAIRS[x.bits() as usize])
}

pub fn tau_inv(pair: &str) -> Result<Gf16> {
    check_alphabet(pair)?;
    let bytes = pair.as_bytes();
    if bytes.len() != 2 {
        return Err(Error::Parse(format!("expected a DNA pair, got {pair:?}")));
    }
    let bits = PAIRS
        .iter()
        .position(|p| p == bytes)
        .expect("all 16 pairs occur in the table");
    Ok(Gf16::new(bits as u8))
}

/// τ over the four Gray coordinates.
pub fn phi_dna(x: R16Elem) -> Dna8 {
    let mut out = [0u8; 8];
    for (i, g) in x.gray().0.into_iter().enumerate() {
        out[2 * i..2 * i + 2].copy_from_slice(&tau(g).0);
    }
    Dna8(out)
}

/// Inverse of [`phi_dna`].
pub fn phi_dna_inv(s: &str) -> Result<R16Elem> {
    if s.len() != 8 {
        return Err(Error::Parse(format!("expected a DNA 8-mer, got {s:?}")));
    }
    check_alphabet(s)?;
    let mut g = [Gf16::ZERO; 4];
    for (i, gi) in g.iter_mut().enumerate() {
        *gi = tau_inv(&s[2 * i..2 * i + 2])?;
    }
    Ok(crate::r16::GrayVector(g).to_r16())
}

pub fn codeword_to_dna(c: &[R16Elem]) -> String {
    c.iter().map(|&x| phi_dna(x).to_string()).collect()
}

pub fn dna_to_codeword(s: &str) -> Result<Vec<R16Elem>> {
    if !s.len().is_multiple_of(8) {
        return Err(Error::Parse(format!(
            "DNA length {} is not a multiple of 8",
            s.len()
        )));
    }
    check_alphabet(s)?;
    (0..s.len() / 8)
        .map(|i| phi_dna_inv(&s[8 * i..8 * i + 8]))
        .collect()
}

/// Letterwise reversal.
pub fn dna_reverse(s: &str) -> String {
    s.chars().rev().collect()
}

/// (θ(c_{n−1}), …, θ(c₁), θ(c₀)), the codeword whose DNA image is the
/// reverse of the DNA image of `c`.
pub fn rho(c: &[R16Elem]) -> Vec<R16Elem> {
    c.iter().rev().map(|x| x.theta()).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    /// Checks the 4k spanning codewords; complete, since ρ is additive and
    /// ρ(r·c) = θ(r)·ρ(c).
    ExhaustiveBasis,
    /// Checks `samples` random codewords only.
    Random { samples: usize, seed: u64 },
    /// Spanning codewords first, then random samples.
    BasisAndRandom { samples: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReversibilityReport {
    /// Number of spanning codewords checked.
    pub checked: usize,
    /// Number of random codewords checked.
    pub samples: usize,
    pub pass: bool,
    /// First codeword c whose ρ(c) is not in the code.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<R16Elem>>,
}

/// Checks that ρ(c) ∈ C for the codewords selected by `mode`, i.e. that the
/// DNA image of the code is closed under letterwise reversal.
pub fn verify_reversible(code: &SkewCyclicCode, mode: VerifyMode) -> ReversibilityReport {
    let mut report = ReversibilityReport {
        checked: 0,
        samples: 0,
        pass: true,
        witness: None,
    };
    let check = |c: Vec<R16Elem>, report: &mut ReversibilityReport| {
        if !code.contains(&rho(&c)) {
            report.pass = false;
            report.witness = Some(c);
        }
    };

    if matches!(
        mode,
        VerifyMode::ExhaustiveBasis | VerifyMode::BasisAndRandom { .. }
    ) {
        for c in code.spanning_codewords() {
            report.checked += 1;
            check(c, &mut report);
            if !report.pass {
                return report;
            }
        }
    }
    if let VerifyMode::Random { samples, seed } | VerifyMode::BasisAndRandom { samples, seed } =
        mode
    {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let c = random_codeword(code, &mut rng);
            report.samples += 1;
            check(c, &mut report);
            if !report.pass {
                return report;
            }
        }
    }
    report
}

/// Encodes a uniformly random message of degree < k.
pub fn random_codeword<R: Rng>(code: &SkewCyclicCode, rng: &mut R) -> Vec<R16Elem> {
    let f = SkewPoly::from_coeffs(
        (0..code.k())
            .map(|_| R16Elem::from_u16(rng.gen()))
            .collect(),
    );
    code.encode(&f).expect("message degree below k")
}
