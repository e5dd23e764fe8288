//! The ring R16 = F16[u,v]/(u² − u, v² − v) and its automorphism θ.
//!
//! An element a + ub + vc + uvd is stored as its four F16 coefficients. The
//! Gray map (a+b+c+d, a+c, a+b, a) is also the CRT decomposition of R16 into
//! four copies of F16: its coordinates are the evaluations at
//! (u,v) = (1,1), (0,1), (1,0), (0,0). That ordering is used for the
//! component codes everywhere downstream.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::gf16::Gf16;
use crate::Error;

/// a + ub + vc + uvd.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct R16Elem {
    pub a: Gf16,
    pub b: Gf16,
    pub c: Gf16,
    pub d: Gf16,
}

/// Image of the Gray map, in component order 1..4.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct GrayVector(pub [Gf16; 4]);

impl GrayVector {
    /// Inverse Gray map by back-substitution.
    pub fn to_r16(self) -> R16Elem {
        let [g1, g2, g3, g4] = self.0;
        R16Elem {
            a: g4,
            b: g3 + g4,
            c: g2 + g4,
            d: g1 + g2 + g3 + g4,
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, rhs: GrayVector) -> GrayVector {
        GrayVector(std::array::from_fn(|i| self.0[i] * rhs.0[i]))
    }

    /// Coordinates reversed, then raised to the fourth power. This is what θ
    /// does on the Gray side.
    pub fn reverse_frob(self) -> GrayVector {
        let [g1, g2, g3, g4] = self.0;
        GrayVector([g4.frob(), g3.frob(), g2.frob(), g1.frob()])
    }
}

impl R16Elem {
    pub const ZERO: R16Elem = R16Elem::new(Gf16::ZERO, Gf16::ZERO, Gf16::ZERO, Gf16::ZERO);
    pub const ONE: R16Elem = R16Elem::new(Gf16::ONE, Gf16::ZERO, Gf16::ZERO, Gf16::ZERO);
    pub const U: R16Elem = R16Elem::new(Gf16::ZERO, Gf16::ONE, Gf16::ZERO, Gf16::ZERO);
    pub const V: R16Elem = R16Elem::new(Gf16::ZERO, Gf16::ZERO, Gf16::ONE, Gf16::ZERO);
    pub const UV: R16Elem = R16Elem::new(Gf16::ZERO, Gf16::ZERO, Gf16::ZERO, Gf16::ONE);

    /// F16-basis of R16 used for spanning sets: 1, u, v, uv.
    pub const BASIS: [R16Elem; 4] = [R16Elem::ONE, R16Elem::U, R16Elem::V, R16Elem::UV];

    pub const fn new(a: Gf16, b: Gf16, c: Gf16, d: Gf16) -> R16Elem {
        R16Elem { a, b, c, d }
    }

    /// Embeds a field element as a constant.
    pub const fn scalar(a: Gf16) -> R16Elem {
        R16Elem::new(a, Gf16::ZERO, Gf16::ZERO, Gf16::ZERO)
    }

    /// Packs as 0xABCD, the same nibble order as the hex text form.
    pub const fn to_u16(self) -> u16 {
        (self.a.bits() as u16) << 12
            | (self.b.bits() as u16) << 8
            | (self.c.bits() as u16) << 4
            | self.d.bits() as u16
    }

    pub const fn from_u16(w: u16) -> R16Elem {
        R16Elem::new(
            Gf16::new((w >> 12) as u8 & 0xF),
            Gf16::new((w >> 8) as u8 & 0xF),
            Gf16::new((w >> 4) as u8 & 0xF),
            Gf16::new(w as u8 & 0xF),
        )
    }

    /// All 65,536 elements in hex order.
    pub fn all() -> impl Iterator<Item = R16Elem> {
        (0..=u16::MAX).map(R16Elem::from_u16)
    }

    pub fn is_zero(self) -> bool {
        self == R16Elem::ZERO
    }

    /// A unit is an element whose four CRT components are all nonzero.
    pub fn is_unit(self) -> bool {
        self.gray().0.iter().all(|g| !g.is_zero())
    }

    pub fn gray(self) -> GrayVector {
        let R16Elem { a, b, c, d } = self;
        GrayVector([a + b + c + d, a + c, a + b, a])
    }

    /// θ(a+ub+vc+uvd) = (a+b+c+d)⁴ + u(b+d)⁴ + v(c+d)⁴ + uv·d⁴.
    pub fn theta(self) -> R16Elem {
        let R16Elem { a, b, c, d } = self;
        R16Elem::new(
            (a + b + c + d).frob(),
            (b + d).frob(),
            (c + d).frob(),
            d.frob(),
        )
    }

    /// θⁱ; θ has order 2 so only the parity of `i` matters.
    pub fn theta_pow(self, i: usize) -> R16Elem {
        if i.is_multiple_of(2) {
            self
        } else {
            self.theta()
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, rhs: R16Elem) -> R16Elem {
        self.gray().mul(rhs.gray()).to_r16()
    }

    pub fn to_hex(self) -> String {
        format!("{:04X}", self.to_u16())
    }
}

impl fmt::Display for R16Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:04X}", self.to_u16())
    }
}

impl fmt::Debug for R16Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R16({:04X})", self.to_u16())
    }
}

impl FromStr for R16Elem {
    type Err = Error;

    fn from_str(s: &str) -> Result<R16Elem, Error> {
        let s = s.trim();
        if s.len() != 4 || !s.chars().all(|c| c.is_ascii_hexdigit()) {
            return Err(Error::Parse(format!(
                "expected 4 hex digits for a ring element, got {s:?}"
            )));
        }
        Ok(R16Elem::from_u16(u16::from_str_radix(s, 16).unwrap()))
    }
}

impl Serialize for R16Elem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for R16Elem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<R16Elem, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<Gf16> for R16Elem {
    fn from(a: Gf16) -> R16Elem {
        R16Elem::scalar(a)
    }
}

impl Add for R16Elem {
    type Output = R16Elem;
    fn add(self, rhs: R16Elem) -> R16Elem {
        R16Elem::new(
            self.a + rhs.a,
            self.b + rhs.b,
            self.c + rhs.c,
            self.d + rhs.d,
        )
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Sub for R16Elem {
    type Output = R16Elem;
    fn sub(self, rhs: R16Elem) -> R16Elem {
        self + rhs
    }
}

impl AddAssign for R16Elem {
    fn add_assign(&mut self, rhs: R16Elem) {
        *self = *self + rhs;
    }
}

impl Mul for R16Elem {
    type Output = R16Elem;
    fn mul(self, rhs: R16Elem) -> R16Elem {
        R16Elem::mul(self, rhs)
    }
}

impl MulAssign for R16Elem {
    fn mul_assign(&mut self, rhs: R16Elem) {
        *self = *self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn al(i: i64) -> Gf16 {
        Gf16::exp(i)
    }

    // Direct expansion: monomials 1, u, v, uv are bitmasks {0,1,2,3} and
    // multiply by OR since u² = u and v² = v.
    fn mul_oracle(x: R16Elem, y: R16Elem) -> R16Elem {
        let xs = [x.a, x.b, x.c, x.d];
        let ys = [y.a, y.b, y.c, y.d];
        let mut out = [Gf16::ZERO; 4];
        for i in 0..4 {
            for j in 0..4 {
                out[i | j] += xs[i] * ys[j];
            }
        }
        R16Elem::new(out[0], out[1], out[2], out[3])
    }

    fn beta() -> R16Elem {
        R16Elem::new(al(1), Gf16::ONE, al(3), al(2))
    }

    #[test]
    fn add_examples() {
        let x = beta();
        assert_eq!(x + x, R16Elem::ZERO);
        assert_eq!(
            R16Elem::U + R16Elem::V,
            R16Elem::new(Gf16::ZERO, Gf16::ONE, Gf16::ONE, Gf16::ZERO)
        );
        assert_eq!(x + R16Elem::ZERO, x);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(R16Elem::U * R16Elem::V, R16Elem::UV);
        assert_eq!(R16Elem::U * R16Elem::U, R16Elem::U);
        assert_eq!(R16Elem::V * R16Elem::V, R16Elem::V);
        let alpha_plus_u = R16Elem::new(al(1), Gf16::ONE, Gf16::ZERO, Gf16::ZERO);
        assert_eq!(
            alpha_plus_u * R16Elem::V,
            R16Elem::new(Gf16::ZERO, Gf16::ZERO, al(1), Gf16::ONE)
        );
    }

    #[test]
    fn crt_mul_matches_expansion() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100_000 {
            let x = R16Elem::from_u16(rng.gen());
            let y = R16Elem::from_u16(rng.gen());
            assert_eq!(x * y, mul_oracle(x, y));
        }
        for x in R16Elem::all() {
            assert_eq!(x * R16Elem::U, mul_oracle(x, R16Elem::U));
            assert_eq!(x * R16Elem::V, mul_oracle(x, R16Elem::V));
        }
    }

    #[test]
    fn theta_examples() {
        assert_eq!(R16Elem::U.theta(), R16Elem::ONE + R16Elem::U);
        assert_eq!(beta().theta(), R16Elem::new(al(3), al(2), al(9), al(8)));
    }

    #[test]
    fn theta_is_involution_and_fixes_256() {
        let mut fixed = 0;
        for x in R16Elem::all() {
            assert_eq!(x.theta().theta(), x);
            if x.theta() == x {
                fixed += 1;
            }
        }
        assert_eq!(fixed, 256);
    }

    #[test]
    fn gray_examples() {
        assert_eq!(beta().gray(), GrayVector([al(12), al(9), al(4), al(1)]));
        assert_eq!(R16Elem::ZERO.gray(), GrayVector([Gf16::ZERO; 4]));
        assert_eq!(R16Elem::ONE.gray(), GrayVector([Gf16::ONE; 4]));
        assert_eq!(GrayVector([Gf16::ZERO; 4]).to_r16(), R16Elem::ZERO);
        assert_eq!(GrayVector([al(12), al(9), al(4), al(1)]).to_r16(), beta());
    }

    #[test]
    fn idempotents_pick_components() {
        let e = [
            R16Elem::UV,
            R16Elem::V + R16Elem::UV,
            R16Elem::U + R16Elem::UV,
            R16Elem::ONE + R16Elem::U + R16Elem::V + R16Elem::UV,
        ];
        for (i, ei) in e.iter().enumerate() {
            let mut want = [Gf16::ZERO; 4];
            want[i] = Gf16::ONE;
            assert_eq!(ei.gray(), GrayVector(want));
            assert_eq!(*ei * *ei, *ei);
        }
    }

    #[test]
    fn hex_text() {
        assert_eq!(beta().to_string(), "2184");
        assert_eq!("2184".parse::<R16Elem>().unwrap(), beta());
        assert!("218".parse::<R16Elem>().is_err());
        assert!("21X4".parse::<R16Elem>().is_err());
    }

    #[test]
    fn units() {
        assert!(R16Elem::ONE.is_unit());
        assert!(!R16Elem::U.is_unit());
        assert!(!R16Elem::ZERO.is_unit());
    }
}
