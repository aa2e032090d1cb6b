//! Affine type labels `X_n~k` and their validity rules.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// The letter series of a Cartan type.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub(crate) fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }
}

/// An affine type `X_n^(k)`, written `Xn~k` in string form (e.g. `A2~2`).
///
/// `rank` is the rank of the underlying finite algebra `g`; the index set of
/// the affine diagram is `{0, .., finite_rank()}`, which is smaller than
/// `rank` for twisted types.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct AffineType {
    pub series: Series,
    pub rank: u32,
    pub twist: u8,
}

impl AffineType {
    pub fn new(series: Series, rank: u32, twist: u8) -> Result<Self> {
        let t = AffineType { series, rank, twist };
        t.validate()?;
        Ok(t)
    }

    /// Checks that `(series, rank, twist)` names a real affine diagram.
    pub fn validate(&self) -> Result<()> {
        let ok = match (self.twist, self.series) {
            (1, Series::A) => self.rank >= 1,
            (1, Series::B) => self.rank >= 2,
            (1, Series::C) => self.rank >= 2,
            (1, Series::D) => self.rank >= 3,
            (1, Series::E) => (6..=8).contains(&self.rank),
            (1, Series::F) => self.rank == 4,
            (1, Series::G) => self.rank == 2,
            // Twisted families: fixed points of a diagram automorphism of
            // order k, so only the series with such an automorphism appear.
            (2, Series::A) => self.rank >= 2,
            (2, Series::D) => self.rank >= 3,
            (2, Series::E) => self.rank == 6,
            (3, Series::D) => self.rank == 4,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::BadType(self.to_string()))
        }
    }

    /// Number of finite nodes `n = |I_0|`; the affine index set is `{0..n}`.
    pub fn finite_rank(&self) -> usize {
        let r = self.rank as usize;
        match (self.twist, self.series) {
            (1, _) => r,
            (2, Series::A) if r % 2 == 0 => r / 2,
            (2, Series::A) => (r + 1) / 2,
            (2, Series::D) => r - 1,
            (2, Series::E) => 4,
            (3, Series::D) => 2,
            _ => unreachable!("validated type"),
        }
    }

    /// True for the `A_{2n}^(2)` family, which is special-cased throughout
    /// (doubled roots, all loop periods 1, distinguished structure
    /// constants).
    pub fn is_a2n_2(&self) -> bool {
        self.twist == 2 && self.series == Series::A && self.rank % 2 == 0
    }

    /// All types exercised by the cross-type test suites: one window per
    /// series and twist at desk-scale ranks.
    pub fn registry() -> Vec<AffineType> {
        let mut out = Vec::new();
        let mut push = |s: Series, n: u32, k: u8| {
            out.push(AffineType::new(s, n, k).expect("registry entry must be valid"));
        };
        push(Series::A, 1, 1);
        push(Series::A, 2, 1);
        push(Series::A, 3, 1);
        push(Series::A, 4, 1);
        push(Series::B, 3, 1);
        push(Series::B, 4, 1);
        push(Series::C, 2, 1);
        push(Series::C, 3, 1);
        push(Series::C, 4, 1);
        push(Series::D, 4, 1);
        push(Series::D, 5, 1);
        push(Series::E, 6, 1);
        push(Series::E, 7, 1);
        push(Series::E, 8, 1);
        push(Series::F, 4, 1);
        push(Series::G, 2, 1);
        push(Series::A, 2, 2);
        push(Series::A, 4, 2);
        push(Series::A, 6, 2);
        push(Series::A, 3, 2);
        push(Series::A, 5, 2);
        push(Series::A, 7, 2);
        push(Series::D, 3, 2);
        push(Series::D, 4, 2);
        push(Series::D, 5, 2);
        push(Series::E, 6, 2);
        push(Series::D, 4, 3);
        out
    }
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}~{}", self.series.letter(), self.rank, self.twist)
    }
}

impl FromStr for AffineType {
    type Err = Error;

    /// Parses strings like `A1~1`, `A2~2`, `D4~3` (series letter, rank,
    /// tilde, twist).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadType(s.to_string());
        let mut chars = s.chars();
        let series = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Series::A,
            Some('B') => Series::B,
            Some('C') => Series::C,
            Some('D') => Series::D,
            Some('E') => Series::E,
            Some('F') => Series::F,
            Some('G') => Series::G,
            _ => return Err(bad()),
        };
        let rest: String = chars.collect();
        let (rank_str, twist_str) = rest.split_once('~').ok_or_else(bad)?;
        let rank: u32 = rank_str.parse().map_err(|_| bad())?;
        let twist: u8 = twist_str.parse().map_err(|_| bad())?;
        AffineType::new(series, rank, twist).map_err(|_| bad())
    }
}
