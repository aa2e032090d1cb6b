//! Ideal comparison between relation sets: equality or one-sided
//! containment over the degree box, and membership of individual elements.

use crate::cartan::Weight;
use crate::lie::LieElement;
use crate::Result;

use super::presentation::{Family, LoopPresentation};

/// Outcome of comparing the ideals generated by two relation sets.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SetRelation {
    Equal,
    /// The left ideal is strictly contained in the right one.
    LeftInRight,
    /// The right ideal is strictly contained in the left one.
    RightInLeft,
    Incomparable,
}

impl std::fmt::Display for SetRelation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SetRelation::Equal => "equal",
            SetRelation::LeftInRight => "left-in-right",
            SetRelation::RightInLeft => "right-in-left",
            SetRelation::Incomparable => "incomparable",
        };
        f.write_str(s)
    }
}

/// Degreewise comparison of two ideals.
///
/// `left_extra` lists the degrees at which the left ideal contains
/// something outside the right one, `right_extra` the converse; both empty
/// means the ideals agree on every degree of the box.
#[derive(Clone, Debug)]
pub struct EquivalenceReport {
    pub verdict: SetRelation,
    pub left_extra: Vec<Weight>,
    pub right_extra: Vec<Weight>,
}

/// Compares the ideals generated by two family sets at every degree of the
/// query box. Ranks of the two ideals and of their union are computed per
/// degree; containment failures are read off the union rank.
pub fn check_equivalence(
    pres: &LoopPresentation,
    left: &[Family],
    right: &[Family],
) -> Result<EquivalenceReport> {
    let mut left_span = pres.span(left)?;
    let mut right_span = pres.span(right)?;
    let union: Vec<Family> = left.iter().chain(right.iter()).copied().collect();
    let mut union_span = pres.span(&union)?;

    let mut left_extra = Vec::new();
    let mut right_extra = Vec::new();
    for degree in pres.degrees() {
        let l = left_span.ideal_rank(&degree)?;
        let r = right_span.ideal_rank(&degree)?;
        let u = union_span.ideal_rank(&degree)?;
        if u > r {
            left_extra.push(degree.clone());
        }
        if u > l {
            right_extra.push(degree);
        }
    }
    let verdict = match (left_extra.is_empty(), right_extra.is_empty()) {
        (true, true) => SetRelation::Equal,
        (true, false) => SetRelation::LeftInRight,
        (false, true) => SetRelation::RightInLeft,
        (false, false) => SetRelation::Incomparable,
    };
    Ok(EquivalenceReport { verdict, left_extra, right_extra })
}

/// Result of testing a batch of elements for ideal membership.
#[derive(Clone, Debug)]
pub struct MembershipReport {
    pub checked: usize,
    /// Degrees of the elements that were not in the ideal.
    pub failures: Vec<Weight>,
}

impl MembershipReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Tests each target element for membership in the ideal generated by the
/// base families.
pub fn check_membership(
    pres: &LoopPresentation,
    targets: &[LieElement],
    base: &[Family],
) -> Result<MembershipReport> {
    let mut span = pres.span(base)?;
    let mut failures = Vec::new();
    for t in targets {
        if !span.contains(t)? {
            failures.push(t.degree().clone());
        }
    }
    Ok(MembershipReport { checked: targets.len(), failures })
}

/// Tests every instance of the target families for membership in the ideal
/// generated by the base families.
pub fn check_family_membership(
    pres: &LoopPresentation,
    targets: &[Family],
    base: &[Family],
) -> Result<MembershipReport> {
    let els = pres.relation_set(targets);
    check_membership(pres, &els, base)
}
