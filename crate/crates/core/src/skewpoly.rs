//! The skew polynomial ring R16[x; θ].
//!
//! Addition is coefficientwise; multiplication follows `x·a = θ(a)·x`, so
//! `(a xⁱ)(b xʲ) = a θⁱ(b) xⁱ⁺ʲ`. θ has order 2, so θⁱ depends only on the
//! parity of i.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use crate::r16::R16Elem;
use crate::{Error, Result};

/// Dense polynomial, lowest degree first, with no trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct SkewPoly {
    coeffs: Vec<R16Elem>,
}

impl SkewPoly {
    pub fn zero() -> SkewPoly {
        SkewPoly { coeffs: Vec::new() }
    }

    pub fn one() -> SkewPoly {
        SkewPoly::constant(R16Elem::ONE)
    }

    pub fn x() -> SkewPoly {
        SkewPoly::monomial(R16Elem::ONE, 1)
    }

    pub fn constant(c: R16Elem) -> SkewPoly {
        SkewPoly::from_coeffs(vec![c])
    }

    /// c·xⁱ
    pub fn monomial(c: R16Elem, i: usize) -> SkewPoly {
        let mut coeffs = vec![R16Elem::ZERO; i + 1];
        coeffs[i] = c;
        SkewPoly::from_coeffs(coeffs)
    }

    /// xⁿ − 1 (which is xⁿ + 1 in characteristic 2).
    pub fn x_n_minus_1(n: usize) -> SkewPoly {
        let mut coeffs = vec![R16Elem::ZERO; n + 1];
        coeffs[0] = R16Elem::ONE;
        coeffs[n] += R16Elem::ONE;
        SkewPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<R16Elem>) -> SkewPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        SkewPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[R16Elem] {
        &self.coeffs
    }

    /// Coefficient of xⁱ (zero past the degree).
    pub fn coeff(&self, i: usize) -> R16Elem {
        self.coeffs.get(i).copied().unwrap_or(R16Elem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<R16Elem> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(R16Elem::ONE)
    }

    /// Coefficient vector zero-padded (or truncated) to `n` entries.
    pub fn to_vector(&self, n: usize) -> Vec<R16Elem> {
        let mut v = self.coeffs.clone();
        v.resize(n, R16Elem::ZERO);
        v
    }

    /// θ applied to every coefficient.
    pub fn apply_theta(&self) -> SkewPoly {
        SkewPoly::from_coeffs(self.coeffs.iter().map(|c| c.theta()).collect())
    }

    pub fn add(&self, rhs: &SkewPoly) -> SkewPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        SkewPoly::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }

    pub fn mul(&self, rhs: &SkewPoly) -> SkewPoly {
        if self.is_zero() || rhs.is_zero() {
            return SkewPoly::zero();
        }
        let rhs_theta: Vec<R16Elem> = rhs.coeffs.iter().map(|c| c.theta()).collect();
        let mut out = vec![R16Elem::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let twisted = if i % 2 == 0 { &rhs.coeffs } else { &rhs_theta };
            for (j, &b) in twisted.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        SkewPoly::from_coeffs(out)
    }

    /// Right division by a monic `g`: returns `(q, r)` with
    /// `self = q·g + r` and `deg r < deg g`.
    pub fn right_divmod(&self, g: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        if g.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if !g.is_monic() {
            return Err(Error::NotMonic);
        }
        let t = g.coeffs.len() - 1;
        if self.coeffs.len() <= t {
            return Ok((SkewPoly::zero(), self.clone()));
        }
        let g_theta: Vec<R16Elem> = g.coeffs.iter().map(|c| c.theta()).collect();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![R16Elem::ZERO; rem.len() - t];
        for m in (t..rem.len()).rev() {
            let c = rem[m];
            if c.is_zero() {
                continue;
            }
            let s = m - t;
            quot[s] = c;
            // (c xˢ)·g = Σ c θˢ(g_j) x^{s+j}
            let twisted = if s.is_multiple_of(2) {
                &g.coeffs
            } else {
                &g_theta
            };
            for (j, &gj) in twisted.iter().enumerate() {
                rem[s + j] += c * gj;
            }
        }
        rem.truncate(t);
        Ok((SkewPoly::from_coeffs(quot), SkewPoly::from_coeffs(rem)))
    }

    pub fn right_rem(&self, g: &SkewPoly) -> Result<SkewPoly> {
        self.right_divmod(g).map(|(_, r)| r)
    }

    /// Whether this monic polynomial is a right divisor of xⁿ − 1.
    pub fn right_divides_xn_minus_1(&self, n: usize) -> Result<bool> {
        Ok(SkewPoly::x_n_minus_1(n).right_rem(self)?.is_zero())
    }

    /// aᵢ = a_{t−i} for all i.
    pub fn is_palindromic(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// aᵢ = θ(a_{t−i}) for all i.
    pub fn is_theta_palindromic(&self) -> bool {
        !self.is_zero()
            && self
                .coeffs
                .iter()
                .zip(self.coeffs.iter().rev())
                .all(|(a, b)| *a == b.theta())
    }
}

impl fmt::Display for SkewPoly {
    /// Comma-separated hex words, lowest degree first; zero prints as `0000`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0000");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewPoly[{self}]")
    }
}

impl FromStr for SkewPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<SkewPoly> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let coeffs = s
            .split(',')
            .map(str::parse)
            .collect::<Result<Vec<R16Elem>>>()?;
        Ok(SkewPoly::from_coeffs(coeffs))
    }
}

impl Add for &SkewPoly {
    type Output = SkewPoly;
    fn add(self, rhs: &SkewPoly) -> SkewPoly {
        SkewPoly::add(self, rhs)
    }
}

impl Add for SkewPoly {
    type Output = SkewPoly;
    fn add(self, rhs: SkewPoly) -> SkewPoly {
        SkewPoly::add(&self, &rhs)
    }
}

impl Mul for &SkewPoly {
    type Output = SkewPoly;
    fn mul(self, rhs: &SkewPoly) -> SkewPoly {
        SkewPoly::mul(self, rhs)
    }
}

impl Mul for SkewPoly {
    type Output = SkewPoly;
    fn mul(self, rhs: SkewPoly) -> SkewPoly {
        SkewPoly::mul(&self, &rhs)
    }
}
