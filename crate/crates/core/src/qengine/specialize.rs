//! Coefficientwise `q = 1` checks tying every quantum relation instance to
//! its classical counterpart.

use crate::drinfeld::presentation::nondecreasing_tuples;
use crate::drinfeld::{Family, LoopPresentation};
use crate::lie::LieElement;
use crate::Result;

use super::families::{q_family_instances, QRelationFamily};

/// Outcome of specializing one window's worth of quantum instances.
#[derive(Clone, Debug)]
pub struct SpecializationReport {
    pub pairs: usize,
    pub mismatches: Vec<String>,
}

impl SpecializationReport {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Specializes every quantum instance at `q = 1` and compares it, word by
/// word, with the matching classical instance expanded in the associative
/// envelope. The quantum enumerators replicate the classical loop order, so
/// the two lists are zipped positionally; a length difference is itself a
/// mismatch.
pub fn check_specialization(pres: &LoopPresentation) -> Result<SpecializationReport> {
    let mut report = SpecializationReport { pairs: 0, mismatches: Vec::new() };
    let table = [
        (QRelationFamily::Xd, Family::Xd),
        (QRelationFamily::X1, Family::X1),
        (QRelationFamily::X2, Family::X2),
        (QRelationFamily::X3, Family::X3),
        (QRelationFamily::T2, Family::T2),
        (QRelationFamily::S2, Family::S2),
        (QRelationFamily::T3, Family::T3),
        (QRelationFamily::S, Family::S),
        (QRelationFamily::U3, Family::U3),
    ];
    for (qf, cf) in table {
        let quantum = q_family_instances(pres, qf);
        let classical = pres.family_instances(cf);
        compare(qf, &quantum, &classical, &mut report)?;
    }
    let head = q_family_instances(pres, QRelationFamily::Sul);
    let head_classical = chain_head_classical(pres);
    compare(QRelationFamily::Sul, &head, &head_classical, &mut report)?;
    Ok(report)
}

fn compare(
    qf: QRelationFamily,
    quantum: &[super::word_poly::NCWordPoly],
    classical: &[LieElement],
    report: &mut SpecializationReport,
) -> Result<()> {
    if quantum.len() != classical.len() {
        report.mismatches.push(format!(
            "{}: {} quantum vs {} classical instances",
            qf.tag(),
            quantum.len(),
            classical.len()
        ));
        return Ok(());
    }
    for (k, (qi, ci)) in quantum.iter().zip(classical).enumerate() {
        report.pairs += 1;
        if qi.degree() != ci.degree() {
            report.mismatches.push(format!("{} instance {k}: degrees differ", qf.tag()));
            continue;
        }
        if qi.specialize_at_one()? != ci.to_assoc() {
            report.mismatches.push(format!("{} instance {k}: specialization differs", qf.tag()));
        }
    }
    Ok(())
}

/// Classical instances of the chain head, enumerated exactly like the
/// quantum head: the `S` chains restricted to node pairs with `a_ij` in
/// `{0, -1}` on twisted types, every pair on untwisted ones.
fn chain_head_classical(pres: &LoopPresentation) -> Vec<LieElement> {
    let cd = pres.cartan();
    let untwisted = cd.affine_type().twist == 1;
    let n = cd.finite_rank();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            if !untwisted && !matches!(cd.a(i, j), 0 | -1) {
                continue;
            }
            let m = (1 - cd.a(i, j)) as usize;
            if m as i64 + 1 > pres.height_bound() {
                continue;
            }
            for &s in &pres.node_levels(j, pres.level_bound()) {
                let levels = pres.node_levels(i, pres.level_bound() - s);
                for rs in nondecreasing_tuples(&levels, m, pres.level_bound() - s) {
                    out.push(
                        pres.s_instance(i, j, &rs, s)
                            .expect("chain head stayed inside the window"),
                    );
                }
            }
        }
    }
    out
}
