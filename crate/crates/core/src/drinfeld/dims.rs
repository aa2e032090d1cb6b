//! Graded dimensions of presented quotients, compared degree by degree
//! with the root system.

use crate::cartan::{RootSystem, Weight};
use crate::Result;

use super::presentation::{Family, LoopPresentation};

/// One degree's comparison between a presented quotient and the root
/// multiplicity at that degree.
#[derive(Clone, Debug)]
pub struct DimEntry {
    pub degree: Weight,
    pub expected: usize,
    pub got: usize,
}

impl DimEntry {
    pub fn matches(&self) -> bool {
        self.expected == self.got
    }
}

/// Quotient dimension at every degree of the query box.
pub fn graded_dims(
    pres: &LoopPresentation,
    fams: &[Family],
) -> Result<Vec<(Weight, usize)>> {
    let mut span = pres.span(fams)?;
    pres.degrees()
        .into_iter()
        .map(|d| {
            let dim = span.quotient_dim(&d)?;
            Ok((d, dim))
        })
        .collect()
}

/// Compares the quotient dimensions of the presented algebra with root
/// multiplicities over the whole query box.
pub fn check_dims_against_roots(
    pres: &LoopPresentation,
    fams: &[Family],
) -> Result<Vec<DimEntry>> {
    let roots = RootSystem::new(pres.cartan());
    let mut span = pres.span(fams)?;
    let mut out = Vec::new();
    for degree in pres.degrees() {
        let got = span.quotient_dim(&degree)?;
        let expected = roots.multiplicity(&degree);
        out.push(DimEntry { degree, expected, got });
    }
    Ok(out)
}

/// The entries of a dimension report that disagree.
pub fn mismatches(entries: &[DimEntry]) -> Vec<&DimEntry> {
    entries.iter().filter(|e| !e.matches()).collect()
}

/// A degree where removing families strictly enlarged the quotient.
#[derive(Clone, Debug)]
pub struct DropWitness {
    pub degree: Weight,
    pub kept: usize,
    pub dropped: usize,
}

/// Scans the box for degrees where the quotient by the reduced relation
/// set is strictly larger than the quotient by the full set.
pub fn drop_witnesses(
    pres: &LoopPresentation,
    full: &[Family],
    reduced: &[Family],
) -> Result<Vec<DropWitness>> {
    let mut full_span = pres.span(full)?;
    let mut reduced_span = pres.span(reduced)?;
    let mut out = Vec::new();
    for degree in pres.degrees() {
        let kept = full_span.quotient_dim(&degree)?;
        let dropped = reduced_span.quotient_dim(&degree)?;
        if dropped > kept {
            out.push(DropWitness { degree, kept, dropped });
        }
    }
    Ok(out)
}
