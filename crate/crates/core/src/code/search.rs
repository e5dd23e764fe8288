//! Search for palindromic and θ-palindromic monic right divisors of xⁿ − 1.
//!
//! Only the free coefficients left by the palindrome constraint and
//! monicity are enumerated. Candidates are tested in CRT coordinates, where
//! a ring element is four packed nibbles and θ is "reverse the nibbles, then
//! raise each to the fourth power".

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use std::ops::BitXorAssign;

use crate::gf16::{Gf16, FROB, MUL};
use crate::r16::{GrayVector, R16Elem};
use crate::skewpoly::SkewPoly;
use crate::{Error, Result};

use super::DEFAULT_BUDGET;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorClass {
    /// aᵢ = a_{t−i}; paired with even degree.
    Palindromic,
    /// aᵢ = θ(a_{t−i}); paired with odd degree.
    ThetaPalindromic,
}

impl GeneratorClass {
    pub fn name(self) -> &'static str {
        match self {
            GeneratorClass::Palindromic => "palindromic",
            GeneratorClass::ThetaPalindromic => "theta-palindromic",
        }
    }

    pub fn holds_for(self, g: &SkewPoly) -> bool {
        match self {
            GeneratorClass::Palindromic => g.is_palindromic(),
            GeneratorClass::ThetaPalindromic => g.is_theta_palindromic(),
        }
    }

    /// Number of free R16 coefficients of a monic degree-`degree` member.
    pub fn free_coefficients(self, degree: usize) -> Result<usize> {
        match self {
            GeneratorClass::Palindromic if degree.is_multiple_of(2) => Ok(degree / 2),
            GeneratorClass::ThetaPalindromic if degree % 2 == 1 => Ok((degree - 1) / 2),
            GeneratorClass::Palindromic => Err(Error::ClassParity {
                class: self.name(),
                expected: "even",
                degree,
            }),
            GeneratorClass::ThetaPalindromic => Err(Error::ClassParity {
                class: self.name(),
                expected: "odd",
                degree,
            }),
        }
    }

    /// Assembles the monic candidate of this class from its free coefficients.
    pub fn candidate(self, degree: usize, free: &[R16Elem]) -> SkewPoly {
        let mut coeffs = vec![R16Elem::ZERO; degree + 1];
        coeffs[degree] = R16Elem::ONE;
        coeffs[0] = R16Elem::ONE;
        for (i, &f) in free.iter().enumerate() {
            coeffs[i + 1] = f;
            coeffs[degree - 1 - i] = match self {
                GeneratorClass::Palindromic => f,
                GeneratorClass::ThetaPalindromic => f.theta(),
            };
        }
        SkewPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for GeneratorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GeneratorClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<GeneratorClass> {
        match s {
            "palindromic" => Ok(GeneratorClass::Palindromic),
            "theta-palindromic" | "theta_palindromic" => Ok(GeneratorClass::ThetaPalindromic),
            _ => Err(Error::Parse(format!("unknown generator class {s:?}"))),
        }
    }
}

/// How the exhaustive search visits the candidate space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SearchStrategy {
    /// Splits R16[x; θ] along the central θ-invariant idempotents 1+u+v and
    /// u+v into two factors (CRT components {1,4} and {2,3}). A candidate
    /// right-divides xⁿ − 1 iff both halves do, so each half is searched over
    /// 256^f values and the hits are combined. Every one of the 65536^f
    /// candidates is still decided exactly.
    #[default]
    Split,
    /// Tests each of the 65536^f candidates directly.
    Direct,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    /// Largest number of candidate tests an exhaustive search may spend;
    /// also the number of distinct candidates drawn when sampling.
    pub budget: u64,
    pub seed: u64,
    /// Free-coefficient vectors tried before any random draws when sampling.
    pub preferred: Vec<Vec<R16Elem>>,
    pub strategy: SearchStrategy,
}

impl Default for SearchOptions {
    fn default() -> SearchOptions {
        SearchOptions {
            budget: DEFAULT_BUDGET,
            seed: 0,
            preferred: Vec::new(),
            strategy: SearchStrategy::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Right divisors found, sorted by hex encoding.
    pub generators: Vec<SkewPoly>,
    pub exhaustive: bool,
    /// Kernel evaluations actually performed.
    pub candidates_tested: u64,
    /// Number of candidates of this degree and class, 65536^f.
    pub space_size: u128,
}

/// Finds monic generators of the given degree and class that right-divide
/// xⁿ − 1. Exhaustive when the strategy's work fits in the budget, otherwise
/// a seeded uniform sample of `budget` distinct candidates.
pub fn search_divisors(
    n: usize,
    degree: usize,
    class: GeneratorClass,
    opts: &SearchOptions,
) -> Result<SearchOutcome> {
    if n % 2 == 1 {
        return Err(Error::OddLength(n));
    }
    if degree == 0 || degree >= n {
        return Err(Error::DegreeOutOfRange { degree, n });
    }
    let free = class.free_coefficients(degree)?;
    let space_size = 1u128.checked_shl(16 * free as u32).unwrap_or(u128::MAX);
    let half_size = 1u128.checked_shl(8 * free as u32).unwrap_or(u128::MAX);
    let kernel = Kernel { n, degree, class };

    let budget = opts.budget as u128;
    let (mut hits, exhaustive, tested) = match opts.strategy {
        SearchStrategy::Split if half_size.saturating_mul(2) <= budget => (
            kernel.split(free, half_size as u64),
            true,
            2 * half_size as u64,
        ),
        SearchStrategy::Direct if space_size <= budget => (
            kernel.direct(free, space_size as u64),
            true,
            space_size as u64,
        ),
        _ => (kernel.sampled(free, space_size, opts), false, opts.budget),
    };
    hits.sort_unstable();
    hits.dedup();
    let generators = hits
        .into_iter()
        .map(|idx| class.candidate(degree, &decode(idx, free)))
        .collect();
    Ok(SearchOutcome {
        generators,
        exhaustive,
        candidates_tested: tested,
        space_size,
    })
}

// Candidate index: free coefficient j sits in bits 16(f−1−j).., the first
// free coefficient most significant, so index order matches hex order.
fn decode(idx: u128, free: usize) -> Vec<R16Elem> {
    (0..free)
        .map(|j| R16Elem::from_u16((idx >> (16 * (free - 1 - j))) as u16))
        .collect()
}

fn encode_index(free: &[R16Elem]) -> u128 {
    free.iter()
        .fold(0u128, |acc, f| acc << 16 | f.to_u16() as u128)
}

/// A ring element (or a factor of one) in packed CRT coordinates.
trait Lane: Copy + Eq + Default + BitXorAssign + Send {
    const ONE: Self;
    fn mul(self, rhs: Self, table: &[u8]) -> Self;
    fn theta(self) -> Self;
}

/// All four components; nibble i from the top is Gray component i+1.
impl Lane for u16 {
    const ONE: u16 = 0x1111;

    #[inline(always)]
    fn mul(self, rhs: u16, t: &[u8]) -> u16 {
        let hi = t[((self >> 8) << 8 | (rhs >> 8)) as usize] as u16;
        let lo = t[((self & 0xFF) << 8 | (rhs & 0xFF)) as usize] as u16;
        hi << 8 | lo
    }

    #[inline(always)]
    fn theta(self) -> u16 {
        let f = |s: u16| FROB[(self >> s & 0xF) as usize] as u16;
        f(0) << 12 | f(4) << 8 | f(8) << 4 | f(12)
    }
}

/// One factor of the split: the component pair {1,4} or {2,3}, lower
/// component in the high nibble. θ swaps the two and applies x ↦ x⁴.
impl Lane for u8 {
    const ONE: u8 = 0x11;

    #[inline(always)]
    fn mul(self, rhs: u8, t: &[u8]) -> u8 {
        t[(self as usize) << 8 | rhs as usize]
    }

    #[inline(always)]
    fn theta(self) -> u8 {
        FROB[(self & 0xF) as usize] << 4 | FROB[(self >> 4) as usize]
    }
}

fn pack(x: R16Elem) -> u16 {
    let g = x.gray().0;
    (g[0].bits() as u16) << 12
        | (g[1].bits() as u16) << 8
        | (g[2].bits() as u16) << 4
        | g[3].bits() as u16
}

fn unpack(w: u16) -> R16Elem {
    GrayVector([12, 8, 4, 0].map(|s| Gf16::new((w >> s & 0xF) as u8))).to_r16()
}

// Product of two packed nibble pairs, indexed by (x_byte << 8 | y_byte).
fn mul_pairs() -> &'static [u8] {
    static TABLE: OnceLock<Vec<u8>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = vec![0u8; 1 << 16];
        for x in 0..256usize {
            for y in 0..256usize {
                let hi = MUL[x >> 4][y >> 4];
                let lo = MUL[x & 0xF][y & 0xF];
                t[x << 8 | y] = hi << 4 | lo;
            }
        }
        t
    })
}

struct Kernel {
    n: usize,
    degree: usize,
    class: GeneratorClass,
}

struct Scratch<L> {
    g: Vec<L>,
    g_theta: Vec<L>,
    rem: Vec<L>,
}

impl<L: Lane> Scratch<L> {
    fn new(n: usize, degree: usize) -> Scratch<L> {
        Scratch {
            g: vec![L::default(); degree + 1],
            g_theta: vec![L::default(); degree + 1],
            rem: vec![L::default(); n + 1],
        }
    }
}

impl Kernel {
    /// Whether the candidate with free coefficients `free(i)` right-divides
    /// xⁿ − 1, computed in lane arithmetic.
    fn test<L: Lane>(
        &self,
        table: &[u8],
        s: &mut Scratch<L>,
        nfree: usize,
        free: impl Fn(usize) -> L,
    ) -> bool {
        let t = self.degree;
        s.g.fill(L::default());
        s.g[0] = L::ONE;
        s.g[t] = L::ONE;
        for i in 0..nfree {
            let f = free(i);
            s.g[i + 1] = f;
            s.g[t - 1 - i] = match self.class {
                GeneratorClass::Palindromic => f,
                GeneratorClass::ThetaPalindromic => f.theta(),
            };
        }
        for j in 0..=t {
            s.g_theta[j] = s.g[j].theta();
        }
        remainder_vanishes(table, self.n, &s.g, &s.g_theta, &mut s.rem)
    }

    fn direct(&self, free: usize, space: u64) -> Vec<u128> {
        let table = mul_pairs();
        self.scan::<u16>(space, |idx, s| {
            self.test(table, s, free, |i| {
                pack(R16Elem::from_u16((idx >> (16 * (free - 1 - i))) as u16))
            })
        })
        .into_iter()
        .map(u128::from)
        .collect()
    }

    fn split(&self, free: usize, half: u64) -> Vec<u128> {
        let table = mul_pairs();
        let byte = |idx: u64, i: usize| (idx >> (8 * (free - 1 - i))) as u8;
        // The two halves use identical lane arithmetic, so one scan serves both.
        let hits = self.scan::<u8>(half, |idx, s| self.test(table, s, free, |i| byte(idx, i)));
        let mut out = Vec::with_capacity(hits.len() * hits.len());
        for &a in &hits {
            for &b in &hits {
                let idx = (0..free).fold(0u128, |acc, i| {
                    let (pa, pb) = (byte(a, i) as u16, byte(b, i) as u16);
                    let w = (pa >> 4) << 12 | (pb >> 4) << 8 | (pb & 0xF) << 4 | (pa & 0xF);
                    acc << 16 | unpack(w).to_u16() as u128
                });
                out.push(idx);
            }
        }
        out
    }

    fn scan<L: Lane>(
        &self,
        space: u64,
        hit: impl Fn(u64, &mut Scratch<L>) -> bool + Sync,
    ) -> Vec<u64> {
        (0..space)
            .into_par_iter()
            .fold(
                || (Scratch::<L>::new(self.n, self.degree), Vec::new()),
                |(mut s, mut hits), idx| {
                    if hit(idx, &mut s) {
                        hits.push(idx);
                    }
                    (s, hits)
                },
            )
            .map(|(_, hits)| hits)
            .reduce(Vec::new, |mut a, mut b| {
                a.append(&mut b);
                a
            })
    }

    fn sampled(&self, free: usize, space: u128, opts: &SearchOptions) -> Vec<u128> {
        let table = mul_pairs();
        let mut scratch = Scratch::<u16>::new(self.n, self.degree);
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let mut seen: HashSet<u128> = HashSet::new();
        let mut hits = Vec::new();
        let preferred = opts
            .preferred
            .iter()
            .filter(|p| p.len() == free)
            .map(|p| encode_index(p));
        let random = std::iter::repeat_with(|| rng.gen_range(0..space));
        for idx in preferred.chain(random) {
            if seen.len() as u64 >= opts.budget {
                break;
            }
            if !seen.insert(idx) {
                continue;
            }
            let ok = self.test(table, &mut scratch, free, |i| {
                pack(R16Elem::from_u16((idx >> (16 * (free - 1 - i))) as u16))
            });
            if ok {
                hits.push(idx);
            }
        }
        hits
    }
}

// Right division of xⁿ − 1 by a monic g given in lane form.
fn remainder_vanishes<L: Lane>(
    table: &[u8],
    n: usize,
    g: &[L],
    g_theta: &[L],
    rem: &mut [L],
) -> bool {
    let t = g.len() - 1;
    rem.fill(L::default());
    rem[0] = L::ONE;
    rem[n] ^= L::ONE;
    for m in (t..=n).rev() {
        let c = rem[m];
        if c == L::default() {
            continue;
        }
        let s = m - t;
        let tw = if s.is_multiple_of(2) { g } else { g_theta };
        for j in 0..t {
            rem[s + j] ^= c.mul(tw[j], table);
        }
        rem[m] = L::default();
    }
    rem[..t].iter().all(|&r| r == L::default())
}
