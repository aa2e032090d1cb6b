//! Elements of the root lattice `Q = Z alpha_0 + .. + Z alpha_n`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

/// An integer vector of coordinates over the affine simple roots.
///
/// Index 0 is the affine node. The coordinate vector determines (together
/// with the type's `delta` marks) a unique decomposition into a finite part
/// supported on `1..=n` plus a multiple of `delta`; see
/// `CartanData::level_and_finite_part`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    pub fn zero(len: usize) -> Self {
        Weight { coords: vec![0; len] }
    }

    /// The simple root `alpha_i` in a diagram with `len` nodes.
    pub fn simple(i: usize, len: usize) -> Self {
        assert!(i < len, "Weight::simple: node {i} out of range for {len} nodes");
        let mut coords = vec![0; len];
        coords[i] = 1;
        Weight { coords }
    }

    pub fn from_coords(coords: Vec<i64>) -> Self {
        Weight { coords }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coord(&self, i: usize) -> i64 {
        self.coords[i]
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Sum of all coordinates (affine node included).
    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    /// True if every coordinate is `>= 0` and some coordinate is `> 0`.
    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0) && !self.is_zero()
    }

    pub fn scaled(&self, k: i64) -> Self {
        Weight { coords: self.coords.iter().map(|c| c * k).collect() }
    }
}

impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.len(), rhs.len(), "Weight::add: mismatched lengths");
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.len(), rhs.len(), "Weight::sub: mismatched lengths");
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight { coords: self.coords.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for Weight {
            type Output = Weight;
            fn $method(self, rhs: Weight) -> Weight {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&Weight> for Weight {
            type Output = Weight;
            fn $method(self, rhs: &Weight) -> Weight {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<Weight> for &Weight {
            type Output = Weight;
            fn $method(self, rhs: Weight) -> Weight {
                $trait::$method(self, &rhs)
            }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub);

impl Neg for Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        -&self
    }
}

impl fmt::Display for Weight {
    /// Writes the weight as a signed combination of `a0..an`, e.g.
    /// `a1 + 2*a2` or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let m = c.unsigned_abs();
            if m != 1 {
                write!(f, "{m}*")?;
            }
            write!(f, "a{i}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_height() {
        let a = Weight::simple(1, 3);
        let b = Weight::simple(2, 3);
        let s = &a + &b.scaled(2);
        assert_eq!(s.coords(), &[0, 1, 2]);
        assert_eq!(s.height(), 3);
        assert!(s.is_positive());
        assert!(!(-&s).is_positive());
        assert_eq!(&s - &s, Weight::zero(3));
    }

    #[test]
    fn display_forms() {
        assert_eq!(Weight::zero(2).to_string(), "0");
        assert_eq!(Weight::from_coords(vec![1, -2, 0]).to_string(), "a0 - 2*a1");
        assert_eq!(Weight::from_coords(vec![0, 1, 3]).to_string(), "a1 + 3*a2");
    }
}
