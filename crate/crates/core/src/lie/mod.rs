//! Free Lie algebras over weighted generators, graded ideals, and finite
//! simple Lie algebras from generators and relations:
//!
//! * [`GeneratorSet`] and [`LieElement`]: homogeneous elements in the
//!   Lyndon basis, with exact brackets through the associative envelope.
//! * [`Presentation`] and [`IdealSpan`]: degreewise spans of the ideal
//!   generated by homogeneous relations, and quotient dimensions.
//! * [`FiniteLie`] and [`serre_construct`]: finite simple Lie algebras
//!   with verified structure-constant tables.

pub mod element;
pub mod ideal;
pub mod serre;
pub mod words;

pub use element::{bracket, GeneratorSet, LieElement};
pub use ideal::{IdealSpan, Presentation, DEFAULT_HEIGHT_LIMIT};
pub use serre::{serre_construct, FiniteLie, SparseVec};
pub use words::{is_lyndon, lyndon_words_with_content, standard_split, Letter, Word};
