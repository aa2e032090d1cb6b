//! Extended affine Weyl group machinery:
//!
//! * [`ExtWeylElement`]: elements as integer matrices on the root lattice
//!   with a diagram-automorphism component, with reduced words recovered by
//!   descent peeling.
//! * [`IotaSequence`]: the periodic reflection sequence assembled from the
//!   fundamental translations, extended to all integers.
//! * [`BetaEnumerator`] and [`OrderedRoot`]: the induced enumeration of
//!   positive real roots and the convex total order including imaginary
//!   layers.
//! * [`choose_o_map`]: alternating sign assignments on the finite diagram.

pub mod beta;
pub mod element;
pub mod iota;
pub mod omap;

pub use beta::{compare, BetaEnumerator, OrderedRoot, OrderedRootKind, DEFAULT_BETA_BOUND};
pub use element::{element_from_word, peel, ExtWeylElement};
pub use iota::{iota_sequence, IotaSequence};
pub use omap::choose_o_map;
