//! Skew cyclic codes `C = (g)` over R16.
//!
//! A monic right divisor g of xⁿ − 1 generates the left submodule
//! `{ f·g : deg f < k }`, k = n − deg g, which is free of rank k with basis
//! `xʲ·g`. Through the Gray/CRT map the code splits as a direct sum of four
//! F16-linear component codes, and minimum distance is read off those.

mod search;

pub use search::{search_divisors, GeneratorClass, SearchOptions, SearchOutcome, SearchStrategy};

use crate::gf16::Gf16;
use crate::r16::R16Elem;
use crate::skewpoly::SkewPoly;
use crate::{Error, Result};

/// Default enumeration budget for distance computation and generator search.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewCyclicCode {
    n: usize,
    g: SkewPoly,
    k: usize,
}

impl SkewCyclicCode {
    /// Builds the code of even length `n` generated by `g`.
    pub fn new(g: SkewPoly, n: usize) -> Result<SkewCyclicCode> {
        SkewCyclicCode::build(g, n, false)
    }

    /// Like [`SkewCyclicCode::new`] but accepts odd `n`. Over odd lengths the
    /// θ-twist collapses and the result is an ordinary cyclic code.
    pub fn new_allow_odd(g: SkewPoly, n: usize) -> Result<SkewCyclicCode> {
        SkewCyclicCode::build(g, n, true)
    }

    fn build(g: SkewPoly, n: usize, allow_odd: bool) -> Result<SkewCyclicCode> {
        let degree = g.degree().unwrap_or(0);
        if degree == 0 || degree >= n {
            return Err(Error::DegreeOutOfRange { degree, n });
        }
        if !g.is_monic() {
            return Err(Error::NotMonic);
        }
        if n % 2 == 1 && !allow_odd {
            return Err(Error::OddLength(n));
        }
        if !g.right_divides_xn_minus_1(n)? {
            return Err(Error::NotRightDivisor { n });
        }
        Ok(SkewCyclicCode {
            n,
            k: n - degree,
            g,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn generator(&self) -> &SkewPoly {
        &self.g
    }

    pub fn degree(&self) -> usize {
        self.n - self.k
    }

    /// Coefficient vector of `f·g`, padded to length n.
    pub fn encode(&self, f: &SkewPoly) -> Result<Vec<R16Elem>> {
        if let Some(degree) = f.degree() {
            if degree >= self.k {
                return Err(Error::MessageTooLong { degree, k: self.k });
            }
        }
        Ok((f * &self.g).to_vector(self.n))
    }

    /// Membership test: the right remainder of `c(x)` by g vanishes.
    pub fn contains(&self, c: &[R16Elem]) -> bool {
        if c.len() != self.n {
            return false;
        }
        SkewPoly::from_coeffs(c.to_vec())
            .right_rem(&self.g)
            .expect("generator is monic")
            .is_zero()
    }

    /// The 4k codewords `e·xʲ·g`, j ascending, then e over 1, u, v, uv.
    /// Their R16-span (equivalently F16-span) is the whole code.
    pub fn spanning_codewords(&self) -> Vec<Vec<R16Elem>> {
        (0..self.k)
            .flat_map(|j| {
                R16Elem::BASIS
                    .into_iter()
                    .map(move |e| self.encode(&SkewPoly::monomial(e, j)).expect("j < k"))
            })
            .collect()
    }

    /// The four component codes in Gray order C₁..C₄.
    pub fn component_codes(&self) -> [ComponentCode; 4] {
        let spanning = self.spanning_codewords();
        std::array::from_fn(|i| {
            let rows = spanning
                .iter()
                .map(|c| c.iter().map(|x| x.gray().0[i]).collect())
                .collect();
            ComponentCode::from_rows(i + 1, self.n, rows)
        })
    }

    pub fn component_dimensions(&self) -> [usize; 4] {
        self.component_codes().map(|c| c.dimension())
    }

    /// Minimum Hamming distance over the n R16 coordinates.
    ///
    /// Multiplying by a CRT idempotent isolates a single component, so the
    /// minimum is the smallest component distance. Returns 0 if the code has
    /// no nonzero codewords.
    pub fn min_distance(&self, budget: u64) -> Result<usize> {
        let mut best: Option<usize> = None;
        for comp in self.component_codes() {
            if let Some(d) = comp.min_distance(budget)? {
                best = Some(best.map_or(d, |b| b.min(d)));
            }
        }
        Ok(best.unwrap_or(0))
    }

    /// Minimum distance of the Gray image in F16^{4n}.
    ///
    /// The Gray weight of a codeword is the sum of its component weights; a
    /// single-component codeword attains the smallest component distance, so
    /// this coincides with [`SkewCyclicCode::min_distance`]. It is kept as a
    /// separate entry point because the two conventions differ in general.
    pub fn gray_min_distance(&self, budget: u64) -> Result<usize> {
        self.min_distance(budget)
    }

    /// (n, k, d) with d over R16 symbols.
    pub fn params(&self, budget: u64) -> Result<(usize, usize, usize)> {
        Ok((self.n, self.k, self.min_distance(budget)?))
    }

    /// The skew shift (θ(c_{n−1}), θ(c₀), …, θ(c_{n−2})).
    pub fn skew_shift(c: &[R16Elem]) -> Vec<R16Elem> {
        let Some((last, rest)) = c.split_last() else {
            return Vec::new();
        };
        std::iter::once(last)
            .chain(rest)
            .map(|x| x.theta())
            .collect()
    }
}

/// An F16-linear component code, stored as a row-reduced generator matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentCode {
    index: usize,
    n: usize,
    rows: Vec<Vec<Gf16>>,
}

impl ComponentCode {
    /// Row-reduces `rows` and drops the zero rows.
    pub fn from_rows(index: usize, n: usize, mut rows: Vec<Vec<Gf16>>) -> ComponentCode {
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, p);
            let inv = rows[rank][col].inv().expect("pivot is nonzero");
            for x in rows[rank].iter_mut() {
                *x *= inv;
            }
            let pivot = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                let f = row[col];
                if r != rank && !f.is_zero() {
                    for (x, &v) in row.iter_mut().zip(&pivot) {
                        *x += f * v;
                    }
                }
            }
            rank += 1;
        }
        rows.truncate(rank);
        ComponentCode { index, n, rows }
    }

    /// Component index 1..=4 in Gray order.
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn generator_matrix(&self) -> &[Vec<Gf16>] {
        &self.rows
    }

    /// Minimum weight of a nonzero codeword by full enumeration of the
    /// 16^dim codewords. `None` when the component is the zero code.
    pub fn min_distance(&self, budget: u64) -> Result<Option<usize>> {
        let dim = self.dimension();
        if dim == 0 {
            return Ok(None);
        }
        let needed = 16u128.pow(dim as u32);
        if needed > budget as u128 {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        let mut best = self.n;
        let mut acc = vec![Gf16::ZERO; self.n];
        self.enumerate(0, &mut acc, false, &mut best);
        Ok(Some(best))
    }

    fn enumerate(&self, row: usize, acc: &mut Vec<Gf16>, nonzero: bool, best: &mut usize) {
        if row == self.rows.len() {
            if nonzero {
                let w = acc.iter().filter(|x| !x.is_zero()).count();
                *best = (*best).min(w);
            }
            return;
        }
        let saved = acc.clone();
        for s in Gf16::all() {
            for (a, (&base, &r)) in acc.iter_mut().zip(saved.iter().zip(&self.rows[row])) {
                *a = base + s * r;
            }
            self.enumerate(row + 1, acc, nonzero || !s.is_zero(), best);
        }
        acc.copy_from_slice(&saved);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SkewPoly {
        s.parse().unwrap()
    }

    fn g_ex1() -> SkewPoly {
        p("1000,B220,D330,1000")
    }

    fn g_ex2() -> SkewPoly {
        p("1000,8440,0000,8440,1000")
    }

    #[test]
    fn construction() {
        assert_eq!(SkewCyclicCode::new(g_ex1(), 6).unwrap().k(), 3);
        assert_eq!(SkewCyclicCode::new(g_ex2(), 6).unwrap().k(), 2);
        let x_plus_alpha = p("2000,1000");
        assert!(matches!(
            SkewCyclicCode::new(x_plus_alpha.clone(), 7),
            Err(Error::OddLength(7))
        ));
        assert!(matches!(
            SkewCyclicCode::new(p("2000"), 6),
            Err(Error::DegreeOutOfRange { degree: 0, n: 6 })
        ));
        assert!(matches!(
            SkewCyclicCode::new(g_ex1(), 3),
            Err(Error::DegreeOutOfRange { .. })
        ));
        assert!(matches!(
            SkewCyclicCode::new(p("1000,2000"), 6),
            Err(Error::NotMonic)
        ));
        assert!(matches!(
            SkewCyclicCode::new(x_plus_alpha, 4),
            Err(Error::NotRightDivisor { n: 4 })
        ));
    }

    #[test]
    fn odd_override() {
        // x+1 divides x³+1 = (x²+x+1)(x+1) when θ acts trivially on 1.
        let code = SkewCyclicCode::new_allow_odd(p("1000,1000"), 3).unwrap();
        assert_eq!(code.k(), 2);
    }

    #[test]
    fn encode_examples() {
        let code = SkewCyclicCode::new(g_ex1(), 6).unwrap();
        assert_eq!(code.encode(&SkewPoly::one()).unwrap(), g_ex1().to_vector(6));
        assert_eq!(
            code.encode(&SkewPoly::zero()).unwrap(),
            vec![R16Elem::ZERO; 6]
        );
        assert!(matches!(
            code.encode(&SkewPoly::monomial(R16Elem::ONE, 3)),
            Err(Error::MessageTooLong { degree: 3, k: 3 })
        ));
    }

    #[test]
    fn membership() {
        let code = SkewCyclicCode::new(p("2000,1000"), 6).unwrap();
        assert!(code.contains(&[R16Elem::ZERO; 6]));
        assert!(code.contains(&code.encode(&p("1234,0001")).unwrap()));
        let mut c = vec![R16Elem::ZERO; 6];
        c[4] = R16Elem::ONE;
        c[5] = R16Elem::scalar(Gf16::exp(4));
        assert!(!code.contains(&c));
        assert!(!code.contains(&[R16Elem::ZERO; 5]));
    }

    #[test]
    fn components_of_example_one() {
        let code = SkewCyclicCode::new(g_ex1(), 6).unwrap();
        assert_eq!(code.component_dimensions(), [3, 3, 3, 3]);
        for (i, c) in code.component_codes().iter().enumerate() {
            assert_eq!(c.index(), i + 1);
        }
    }

    #[test]
    fn components_of_x_plus_one() {
        let code = SkewCyclicCode::new(p("1000,1000"), 2).unwrap();
        for comp in code.component_codes() {
            assert_eq!(comp.generator_matrix(), &[vec![Gf16::ONE, Gf16::ONE]]);
        }
        assert_eq!(code.params(DEFAULT_BUDGET).unwrap(), (2, 1, 2));
    }

    #[test]
    fn zero_component() {
        let comp = ComponentCode::from_rows(1, 3, vec![vec![Gf16::ZERO; 3]; 2]);
        assert_eq!(comp.dimension(), 0);
        assert_eq!(comp.min_distance(10).unwrap(), None);
    }

    #[test]
    fn budget_enforced() {
        let code = SkewCyclicCode::new(g_ex1(), 6).unwrap();
        assert!(matches!(
            code.min_distance(4095),
            Err(Error::BudgetExceeded {
                needed: 4096,
                budget: 4095
            })
        ));
        assert_eq!(code.min_distance(4096).unwrap(), 4);
    }

    #[test]
    fn skew_shift() {
        let c: Vec<R16Elem> = ["0100", "2000", "0000"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        let shifted = SkewCyclicCode::skew_shift(&c);
        assert_eq!(shifted[0], R16Elem::ZERO);
        assert_eq!(shifted[1], R16Elem::U.theta());
        assert_eq!(shifted[2], R16Elem::scalar(Gf16::ALPHA).theta());
        assert!(SkewCyclicCode::skew_shift(&[]).is_empty());
    }
}
