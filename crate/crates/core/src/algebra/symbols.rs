//! The fixed symbol tables: the 36 matrix variables `X11..X66` and the 47
//! parameter symbols of the block matrices.

use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;

/// Number of main variables (entries of a generic 6x6 matrix).
pub const NUM_VARS: usize = 36;

/// Number of parameter symbols.
pub const NUM_PARAMS: usize = 47;

/// Position `(row, col)` of a main variable `X{row}{col}`, both 1-based.
///
/// The linear index follows the row-major listing `X11, X12, ..., X16, X21, ..., X66`;
/// that listing is also the variable order used by every monomial order (X11 largest).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarIndex {
    row: u8,
    col: u8,
}

impl VarIndex {
    pub fn new(row: usize, col: usize) -> Option<Self> {
        if (1..=6).contains(&row) && (1..=6).contains(&col) {
            Some(Self { row: row as u8, col: col as u8 })
        } else {
            None
        }
    }

    /// Panicking constructor for indices known to be in range.
    pub fn at(row: usize, col: usize) -> Self {
        Self::new(row, col).unwrap_or_else(|| panic!("variable X{row}{col} out of range"))
    }

    pub fn from_linear(i: usize) -> Self {
        assert!(i < NUM_VARS, "variable index {i} out of range");
        Self { row: (i / 6 + 1) as u8, col: (i % 6 + 1) as u8 }
    }

    pub fn linear(self) -> usize {
        (self.row as usize - 1) * 6 + (self.col as usize - 1)
    }

    pub fn row(self) -> usize {
        self.row as usize
    }

    pub fn col(self) -> usize {
        self.col as usize
    }

    /// All 36 variables in the fixed order.
    pub fn all() -> impl Iterator<Item = VarIndex> {
        (0..NUM_VARS).map(Self::from_linear)
    }
}

impl fmt::Display for VarIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X{}{}", self.row, self.col)
    }
}

impl FromStr for VarIndex {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let b = s.as_bytes();
        if b.len() == 3 && b[0] == b'X' && b[1].is_ascii_digit() && b[2].is_ascii_digit() {
            let (r, c) = ((b[1] - b'0') as usize, (b[2] - b'0') as usize);
            if let Some(v) = VarIndex::new(r, c) {
                return Ok(v);
            }
        }
        Err(ParseError::UnknownSymbol(s.to_string()))
    }
}

/// Family of a parameter symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParamFamily {
    /// `d11..d33`: entries of `A_s`.
    D,
    /// `f11..f33`: entries of `B_s`.
    F,
    /// `b11..b33`: entries of `B0`.
    B,
    /// `c11..c33`: entries of `C0`.
    C,
    /// `e11..e33`: entries of `C_s`.
    E,
}

impl ParamFamily {
    const ORDER: [ParamFamily; 5] =
        [ParamFamily::D, ParamFamily::F, ParamFamily::B, ParamFamily::C, ParamFamily::E];

    fn letter(self) -> char {
        match self {
            ParamFamily::D => 'd',
            ParamFamily::F => 'f',
            ParamFamily::B => 'b',
            ParamFamily::C => 'c',
            ParamFamily::E => 'e',
        }
    }

    fn offset(self) -> usize {
        9 * Self::ORDER.iter().position(|&f| f == self).unwrap()
    }
}

/// One of the 47 parameter symbols, in the fixed order
/// `d11..d33, f11..f33, b11..b33, c11..c33, e11..e33, d1, d2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamSymbol(u8);

impl ParamSymbol {
    pub const D1: ParamSymbol = ParamSymbol(45);
    pub const D2: ParamSymbol = ParamSymbol(46);

    /// Matrix-entry symbol such as `e21` (`row`, `col` in 1..=3).
    pub fn entry(family: ParamFamily, row: usize, col: usize) -> Self {
        assert!((1..=3).contains(&row) && (1..=3).contains(&col), "entry {row}{col} out of range");
        ParamSymbol((family.offset() + (row - 1) * 3 + (col - 1)) as u8)
    }

    pub fn d(row: usize, col: usize) -> Self {
        Self::entry(ParamFamily::D, row, col)
    }

    pub fn e(row: usize, col: usize) -> Self {
        Self::entry(ParamFamily::E, row, col)
    }

    pub fn from_index(i: usize) -> Self {
        assert!(i < NUM_PARAMS, "parameter index {i} out of range");
        ParamSymbol(i as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn all() -> impl Iterator<Item = ParamSymbol> {
        (0..NUM_PARAMS).map(Self::from_index)
    }
}

impl fmt::Display for ParamSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            45 => f.write_str("d1"),
            46 => f.write_str("d2"),
            i => {
                let fam = ParamFamily::ORDER[i as usize / 9];
                let k = i as usize % 9;
                write!(f, "{}{}{}", fam.letter(), k / 3 + 1, k % 3 + 1)
            }
        }
    }
}

impl FromStr for ParamSymbol {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "d1" => return Ok(Self::D1),
            "d2" => return Ok(Self::D2),
            _ => {}
        }
        let b = s.as_bytes();
        if b.len() == 3 && b[1].is_ascii_digit() && b[2].is_ascii_digit() {
            let fam = ParamFamily::ORDER.iter().find(|f| f.letter() as u8 == b[0]);
            let (r, c) = ((b[1] - b'0') as usize, (b[2] - b'0') as usize);
            if let Some(&fam) = fam {
                if (1..=3).contains(&r) && (1..=3).contains(&c) {
                    return Ok(Self::entry(fam, r, c));
                }
            }
        }
        Err(ParseError::UnknownSymbol(s.to_string()))
    }
}
