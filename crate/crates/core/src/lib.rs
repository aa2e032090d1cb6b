//! Exact symbolic computation for affine Kac-Moody algebras and their
//! Drinfeld realizations.
//!
//! The crate is organized bottom-up:
//!
//! * [`arith`]: exact scalars (Laurent polynomials, rational functions in `q`,
//!   small cyclotomic extensions) and fraction-free rank computation.
//! * [`cartan`]: affine Cartan data, the invariant form, root enumeration and
//!   the structure constants of the current-relation family.
//! * [`weyl`]: the extended affine Weyl group, translation elements, the
//!   doubly infinite reflection sequence and the convex root order.
//! * [`lie`]: free Lie algebras over the rationals (Lyndon bases), graded
//!   ideals generated by relation instances, and a finite-dimensional
//!   simple-algebra constructor used for the twisted loop realization.
//! * [`drinfeld`]: the classical (specialized) relation families, the
//!   positive current algebra, equivalence checks between relation sets, and
//!   the twisted loop representation used to verify the current presentation.
//! * [`qengine`]: the quantum relation families in the free associative
//!   algebra over `Q(q)`, graded dimension counts, the PBW-style envelope
//!   series, and the injectivity certificate comparing the two.
//! * [`report`]: serializable result tables shared with the command line
//!   interface.

pub mod arith;
pub mod cartan;
pub mod drinfeld;
pub mod lie;
pub mod qengine;
pub mod report;
pub mod weyl;

pub use arith::{Cyclotomic, ExactMatrix, LaurentPoly, RationalFunction, Scalar};
pub use cartan::{AffineType, CartanData, Root, RootSystem, Weight};
pub use drinfeld::{Family, LoopPresentation, TwistedLoop};
pub use lie::{FiniteLie, GeneratorSet, IdealSpan, LieElement, Presentation};
pub use qengine::{EnvelopeCounter, GradedDimReport, NCWordPoly, QRelationFamily};
pub use weyl::{BetaEnumerator, ExtWeylElement, IotaSequence, OrderedRoot};

/// Errors surfaced by fallible operations across the crate.
///
/// Internal invariant violations panic instead; an `Error` always describes a
/// problem with the caller's input or a genuine mathematical obstruction.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A rational function has a pole at `q = 1` and cannot be specialized.
    #[error("specialization at q = 1 hits a pole: {0}")]
    PoleAtOne(String),

    /// Matrix entries mix scalar kinds (rational, rational function,
    /// cyclotomic) or cyclotomic orders.
    #[error("matrix mixes scalar kinds: {0}")]
    MixedScalar(String),

    /// An affine type string or parameter combination is not recognized.
    #[error("unsupported or malformed affine type: {0}")]
    BadType(String),

    /// A numeric argument is outside the documented domain.
    #[error("argument out of domain: {0}")]
    BadArgument(String),

    /// A computation exceeded a configured size or iteration bound.
    #[error("resource bound exceeded: {0}")]
    ResourceBound(String),

    /// A matrix claimed to lie in the extended Weyl group failed to
    /// factorize as reflections times a diagram automorphism.
    #[error("not an extended Weyl group element: {0}")]
    NotWeyl(String),
}

pub type Result<T> = std::result::Result<T, Error>;
