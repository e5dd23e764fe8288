//! Arithmetic in GF(16) = F2[α]/(α⁴ + α + 1).
//!
//! Elements are stored in additive form: bit i of the nibble is the
//! coefficient of αⁱ. Multiplication goes through log/exp tables that are
//! generated at compile time from the modulus and then checked, also at
//! compile time, against the additive column of [`crate::table::TABLE`].

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Sub};
use std::str::FromStr;

use crate::table::TABLE;
use crate::Error;

/// Reduction polynomial x⁴ + x + 1.
pub const MODULUS: u8 = 0b1_0011;

const fn build_exp() -> [u8; 30] {
    let mut exp = [0u8; 30];
    let mut x = 1u8;
    let mut i = 0;
    while i < 15 {
        exp[i] = x;
        exp[i + 15] = x;
        x <<= 1;
        if x & 0x10 != 0 {
            x ^= MODULUS;
        }
        i += 1;
    }
    exp
}

const fn build_log(exp: &[u8; 30]) -> [u8; 16] {
    let mut log = [0u8; 16];
    let mut i = 0;
    while i < 15 {
        log[exp[i] as usize] = i as u8;
        i += 1;
    }
    log
}

const fn build_mul(exp: &[u8; 30], log: &[u8; 16]) -> [[u8; 16]; 16] {
    let mut mul = [[0u8; 16]; 16];
    let mut x = 1;
    while x < 16 {
        let mut y = 1;
        while y < 16 {
            mul[x][y] = exp[(log[x] + log[y]) as usize];
            y += 1;
        }
        x += 1;
    }
    mul
}

const fn build_frob(mul: &[[u8; 16]; 16]) -> [u8; 16] {
    let mut frob = [0u8; 16];
    let mut x = 0;
    while x < 16 {
        let sq = mul[x][x];
        frob[x] = mul[sq as usize][sq as usize];
        x += 1;
    }
    frob
}

pub(crate) const EXP: [u8; 30] = build_exp();
pub(crate) const LOG: [u8; 16] = build_log(&EXP);
pub(crate) const MUL: [[u8; 16]; 16] = build_mul(&EXP, &LOG);
pub(crate) const FROB: [u8; 16] = build_frob(&MUL);

const fn tables_match_correspondence_table() -> bool {
    let mut r = 0;
    while r < 16 {
        let row = TABLE[r];
        match row.power {
            None => {
                if row.additive != 0 {
                    return false;
                }
            }
            Some(i) => {
                if EXP[i as usize] != row.additive {
                    return false;
                }
            }
        }
        r += 1;
    }
    true
}

const _: () = assert!(
    tables_match_correspondence_table(),
    "generated GF(16) tables disagree with the correspondence table"
);

/// An element of GF(16).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Gf16(u8);

impl Gf16 {
    pub const ZERO: Gf16 = Gf16(0);
    pub const ONE: Gf16 = Gf16(1);
    pub const ALPHA: Gf16 = Gf16(2);

    /// Builds an element from its additive bits. Panics if `bits > 15`.
    pub const fn new(bits: u8) -> Gf16 {
        assert!(bits < 16, "GF(16) element out of range");
        Gf16(bits)
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// All 16 elements in additive order.
    pub fn all() -> impl Iterator<Item = Gf16> {
        (0..16).map(Gf16)
    }

    /// αⁱ for any integer exponent.
    pub const fn exp(i: i64) -> Gf16 {
        Gf16(EXP[i.rem_euclid(15) as usize])
    }

    /// The discrete log base α, in `0..15`. `None` for zero.
    pub const fn log(self) -> Option<u8> {
        if self.0 == 0 {
            None
        } else {
            Some(LOG[self.0 as usize])
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub const fn inv(self) -> Option<Gf16> {
        match self.log() {
            None => None,
            Some(l) => Some(Gf16(EXP[(15 - l as usize) % 15])),
        }
    }

    /// The Frobenius power x ↦ x⁴.
    pub const fn frob(self) -> Gf16 {
        Gf16(FROB[self.0 as usize])
    }

    pub const fn add(self, rhs: Gf16) -> Gf16 {
        Gf16(self.0 ^ rhs.0)
    }

    pub const fn mul(self, rhs: Gf16) -> Gf16 {
        Gf16(MUL[self.0 as usize][rhs.0 as usize])
    }

    pub fn pow(self, e: u32) -> Gf16 {
        match self.log() {
            None if e == 0 => Gf16::ONE,
            None => Gf16::ZERO,
            Some(l) => Gf16::exp(l as i64 * e as i64),
        }
    }

    /// Uppercase hex digit of the additive bits.
    pub fn to_hex(self) -> char {
        char::from_digit(self.0 as u32, 16)
            .unwrap()
            .to_ascii_uppercase()
    }

    pub fn from_hex(c: char) -> Result<Gf16, Error> {
        c.to_digit(16)
            .map(|d| Gf16(d as u8))
            .ok_or_else(|| Error::Parse(format!("invalid hex digit {c:?}")))
    }
}

impl fmt::Debug for Gf16 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.log() {
            None => write!(f, "0"),
            Some(i) => write!(f, "α^{i}"),
        }
    }
}

impl fmt::Display for Gf16 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_hex())
    }
}

impl FromStr for Gf16 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Gf16, Error> {
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => Gf16::from_hex(c),
            _ => Err(Error::Parse(format!("expected one hex digit, got {s:?}"))),
        }
    }
}

impl Add for Gf16 {
    type Output = Gf16;
    fn add(self, rhs: Gf16) -> Gf16 {
        Gf16::add(self, rhs)
    }
}

impl Sub for Gf16 {
    type Output = Gf16;
    fn sub(self, rhs: Gf16) -> Gf16 {
        Gf16::add(self, rhs)
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl AddAssign for Gf16 {
    fn add_assign(&mut self, rhs: Gf16) {
        self.0 ^= rhs.0;
    }
}

impl Mul for Gf16 {
    type Output = Gf16;
    fn mul(self, rhs: Gf16) -> Gf16 {
        Gf16::mul(self, rhs)
    }
}

impl MulAssign for Gf16 {
    fn mul_assign(&mut self, rhs: Gf16) {
        *self = *self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Carry-less multiply followed by reduction modulo x⁴+x+1.
    fn clmul_oracle(x: u8, y: u8) -> u8 {
        let mut acc = 0u16;
        for i in 0..4 {
            if y >> i & 1 == 1 {
                acc ^= (x as u16) << i;
            }
        }
        for bit in (4..8).rev() {
            if acc >> bit & 1 == 1 {
                acc ^= (MODULUS as u16) << (bit - 4);
            }
        }
        acc as u8
    }

    fn a(i: i64) -> Gf16 {
        Gf16::exp(i)
    }

    #[test]
    fn add_examples() {
        assert_eq!(a(1) + a(2), a(5));
        assert_eq!(Gf16::ONE + Gf16::ONE, Gf16::ZERO);
        assert_eq!(a(13) + a(14), a(2));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(a(1) * a(2), a(3));
        assert_eq!(a(14) * a(1), Gf16::ONE);
        // (1+α)² = 1+α² by the clmul oracle
        assert_eq!(clmul_oracle(0b0011, 0b0011), 0b0101);
        assert_eq!(a(4) * a(4), Gf16::new(0b0101));
        assert_eq!(a(4) * a(4), a(8));
    }

    #[test]
    fn mul_matches_clmul_everywhere() {
        for x in Gf16::all() {
            for y in Gf16::all() {
                assert_eq!((x * y).bits(), clmul_oracle(x.bits(), y.bits()));
            }
        }
    }

    #[test]
    fn inv_examples() {
        assert_eq!(Gf16::ONE.inv(), Some(Gf16::ONE));
        assert_eq!(a(1).inv(), Some(a(14)));
        assert_eq!(a(5).inv(), Some(a(10)));
        assert_eq!(Gf16::ZERO.inv(), None);
        for x in Gf16::all().skip(1) {
            assert_eq!(x * x.inv().unwrap(), Gf16::ONE);
        }
    }

    #[test]
    fn frob_examples() {
        assert_eq!(Gf16::ALPHA.frob(), Gf16::new(0b0011));
        assert_eq!(Gf16::ZERO.frob(), Gf16::ZERO);
        for x in Gf16::all() {
            assert_eq!(x.frob().frob(), x);
            assert_eq!(x.frob(), x * x * x * x);
        }
    }

    #[test]
    fn log_exp() {
        assert_eq!(Gf16::ONE.log(), Some(0));
        assert_eq!(Gf16::exp(12), Gf16::new(0b1111));
        assert_eq!(Gf16::exp(7).log(), Some(7));
        assert_eq!(Gf16::ZERO.log(), None);
        assert_eq!(Gf16::exp(-1), a(14));
        for x in Gf16::all().skip(1) {
            assert_eq!(Gf16::exp(x.log().unwrap() as i64), x);
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for x in Gf16::all() {
            for y in Gf16::all() {
                assert_eq!(x + y, y + x);
                assert_eq!(x * y, y * x);
                assert_eq!((x + y).frob(), x.frob() + y.frob());
                assert_eq!((x * y).frob(), x.frob() * y.frob());
                for z in Gf16::all() {
                    assert_eq!((x + y) + z, x + (y + z));
                    assert_eq!((x * y) * z, x * (y * z));
                    assert_eq!(x * (y + z), x * y + x * z);
                }
            }
        }
    }

    #[test]
    fn alpha_generates_multiplicative_group() {
        let mut seen = std::collections::HashSet::new();
        let mut x = Gf16::ONE;
        for _ in 0..15 {
            assert!(seen.insert(x));
            x *= Gf16::ALPHA;
        }
        assert_eq!(x, Gf16::ONE);
        assert_eq!(seen.len(), 15);
    }

    #[test]
    fn every_table_row_reproduced_by_exp() {
        for row in TABLE.iter() {
            if let Some(i) = row.power {
                assert_eq!(Gf16::exp(i as i64).bits(), row.additive);
            }
        }
    }

    #[test]
    fn hex() {
        assert_eq!(Gf16::ALPHA.to_string(), "2");
        assert_eq!(a(4).to_string(), "3");
        assert_eq!(a(12).to_string(), "F");
        assert_eq!("f".parse::<Gf16>().unwrap(), a(12));
        assert!("G".parse::<Gf16>().is_err());
        assert!("12".parse::<Gf16>().is_err());
    }

    #[test]
    fn pow() {
        assert_eq!(Gf16::ZERO.pow(0), Gf16::ONE);
        assert_eq!(Gf16::ZERO.pow(3), Gf16::ZERO);
        assert_eq!(a(3).pow(5), Gf16::ONE);
    }
}
