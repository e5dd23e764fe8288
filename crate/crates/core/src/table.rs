//! The F16 / DNA-pair correspondence table.
//!
//! Each row pairs a field element (by its power of α, or zero) with its
//! additive form over the basis {1, α, α², α³} and a DNA double base. The
//! rows are chosen so that x and x⁴ always land on pairs that are reverses
//! of each other.

/// One row of the correspondence table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRow {
    /// `None` for the zero element, otherwise the exponent i of αⁱ.
    pub power: Option<u8>,
    /// Additive form; bit i is the coefficient of αⁱ.
    pub additive: u8,
    /// The DNA double base.
    pub pair: [u8; 2],
}

const fn row(power: Option<u8>, additive: u8, pair: &[u8; 2]) -> TableRow {
    TableRow {
        power,
        additive,
        pair: *pair,
    }
}

/// All 16 rows, zero first, then α⁰ … α¹⁴.
pub const TABLE: [TableRow; 16] = [
    row(None, 0b0000, b"AA"),
    row(Some(0), 0b0001, b"TT"),
    row(Some(1), 0b0010, b"AT"),
    row(Some(2), 0b0100, b"GC"),
    row(Some(3), 0b1000, b"AG"),
    row(Some(4), 0b0011, b"TA"),
    row(Some(5), 0b0110, b"CC"),
    row(Some(6), 0b1100, b"AC"),
    row(Some(7), 0b1011, b"GT"),
    row(Some(8), 0b0101, b"CG"),
    row(Some(9), 0b1010, b"CA"),
    row(Some(10), 0b0111, b"GG"),
    row(Some(11), 0b1110, b"CT"),
    row(Some(12), 0b1111, b"GA"),
    row(Some(13), 0b1101, b"TG"),
    row(Some(14), 0b1001, b"TC"),
];

impl TableRow {
    /// Multiplicative label, e.g. `0`, `α^0`, `α^12`.
    pub fn power_label(&self) -> String {
        match self.power {
            None => "0".to_string(),
            Some(i) => format!("α^{i}"),
        }
    }

    /// Additive label, e.g. `1+α+α^3`.
    pub fn additive_label(&self) -> String {
        if self.additive == 0 {
            return "0".to_string();
        }
        let terms: Vec<&str> = (0..4)
            .filter(|i| self.additive >> i & 1 == 1)
            .map(|i| ["1", "α", "α^2", "α^3"][i])
            .collect();
        terms.join("+")
    }

    pub fn pair_str(&self) -> &str {
        std::str::from_utf8(&self.pair).expect("table pairs are ASCII")
    }
}
