//! Affine Cartan data and root systems.
//!
//! - `types`: the `Xn~k` type labels and their validity rules
//! - `weight`: root-lattice elements
//! - `data`: Cartan matrices, symmetrizers, the null root, finite roots
//! - `roots`: the affine root system with multiplicities
//! - `bcoeff`: the `b_{ij}^r` structure constants and their `q = 1` limits

pub mod bcoeff;
pub mod data;
pub mod roots;
pub mod types;
pub mod weight;

pub use bcoeff::{b_coeff, big_b_coeff};
pub use data::{build_cartan, CartanData};
pub use roots::{Root, RootSystem};
pub use types::{AffineType, Series};
pub use weight::Weight;
