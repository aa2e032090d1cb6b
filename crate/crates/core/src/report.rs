//! Serializable result tables shared with the command line interface.
//!
//! Every document carries `schema: 1` at the top level and renders either as
//! pretty-printed JSON or as a flat CSV table with a header row. Degrees are
//! reported as a finite part `alpha` (coordinates on the finite simple
//! roots) together with a `level` along the imaginary direction, so the
//! underlying weight is `alpha + level * delta`.

use serde::Serialize;

use crate::cartan::{CartanData, Root, Weight};
use crate::drinfeld::{DimEntry, DimTriple, EquivalenceReport, RelationReport, SetRelation};
use crate::qengine::DegreeRow;
use crate::weyl::{OrderedRoot, OrderedRootKind};

/// Version stamp written into every report document.
pub const SCHEMA: u32 = 1;

/// A graded degree split into its finite part and its level.
#[derive(Serialize, Clone, PartialEq, Eq, Debug)]
pub struct DegreeLabel {
    pub alpha: Vec<i64>,
    pub level: i64,
}

impl DegreeLabel {
    /// Splits a weight as `alpha + level * delta` on the finite simple
    /// coordinates.
    pub fn from_weight(cd: &CartanData, w: &Weight) -> Self {
        let level = w.coord(0) / cd.delta().coord(0);
        let alpha = w - &cd.delta().scaled(level);
        DegreeLabel { alpha: alpha.coords()[1..].to_vec(), level }
    }

    /// Short human-readable form, e.g. `[2 1]@3`.
    pub fn compact(&self) -> String {
        format!("[{}]@{}", join_i64(&self.alpha), self.level)
    }
}

fn join_i64(xs: &[i64]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn verdict(ok: bool) -> String {
    if ok { "PASS".to_string() } else { "FAIL".to_string() }
}

/// Renders any report document as pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("report serialization cannot fail");
    s.push('\n');
    s
}

/// One positive root of the bounded table.
#[derive(Serialize, Clone, Debug)]
pub struct RootRow {
    pub alpha: Vec<i64>,
    pub level: i64,
    pub multiplicity: usize,
    pub imaginary: bool,
}

/// Table of positive roots up to a level and height bound.
#[derive(Serialize, Debug)]
pub struct RootsReport {
    pub schema: u32,
    #[serde(rename = "type")]
    pub affine_type: String,
    pub level_bound: i64,
    pub height_bound: i64,
    pub rows: Vec<RootRow>,
}

impl RootsReport {
    pub fn build(cd: &CartanData, roots: &[Root], level_bound: i64, height_bound: i64) -> Self {
        let rows = roots
            .iter()
            .map(|r| {
                let label = DegreeLabel::from_weight(cd, &r.weight);
                RootRow {
                    alpha: label.alpha,
                    level: label.level,
                    multiplicity: r.multiplicity,
                    imaginary: r.imaginary,
                }
            })
            .collect();
        RootsReport {
            schema: SCHEMA,
            affine_type: cd.affine_type().to_string(),
            level_bound,
            height_bound,
            rows,
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("alpha,level,multiplicity,imaginary\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{}\n",
                join_i64(&row.alpha),
                row.level,
                row.multiplicity,
                row.imaginary
            ));
        }
        out
    }
}

/// One entry of the convex-order table: a real root `beta_r` carries its
/// index, an imaginary entry carries its level and node.
#[derive(Serialize, Clone, Debug)]
pub struct PbwRow {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub node: Option<usize>,
    pub alpha: Vec<i64>,
    pub level: i64,
}

impl PbwRow {
    fn from_ordered(cd: &CartanData, r: &OrderedRoot) -> Self {
        let label = DegreeLabel::from_weight(cd, &r.weight);
        let (index, node) = match r.kind {
            OrderedRootKind::Real { index } => (Some(index), None),
            OrderedRootKind::Imaginary { node, .. } => (None, Some(node)),
        };
        PbwRow { index, node, alpha: label.alpha, level: label.level }
    }
}

/// The three blocks of the convex order, truncated to `count` entries.
#[derive(Serialize, Debug)]
pub struct PbwReport {
    pub schema: u32,
    #[serde(rename = "type")]
    pub affine_type: String,
    pub count: usize,
    pub lead: Vec<PbwRow>,
    pub imaginary: Vec<PbwRow>,
    pub trail: Vec<PbwRow>,
}

impl PbwReport {
    pub fn build(
        cd: &CartanData,
        count: usize,
        lead: &[OrderedRoot],
        imaginary: &[OrderedRoot],
        trail: &[OrderedRoot],
    ) -> Self {
        let conv = |rs: &[OrderedRoot]| rs.iter().map(|r| PbwRow::from_ordered(cd, r)).collect();
        PbwReport {
            schema: SCHEMA,
            affine_type: cd.affine_type().to_string(),
            count,
            lead: conv(lead),
            imaginary: conv(imaginary),
            trail: conv(trail),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("block,index,node,alpha,level\n");
        let mut push = |name: &str, rows: &[PbwRow]| {
            for row in rows {
                let index = row.index.map(|i| i.to_string()).unwrap_or_default();
                let node = row.node.map(|n| n.to_string()).unwrap_or_default();
                out.push_str(&format!(
                    "{name},{index},{node},{},{}\n",
                    join_i64(&row.alpha),
                    row.level
                ));
            }
        };
        push("lead", &self.lead);
        push("imaginary", &self.imaginary);
        push("trail", &self.trail);
        out
    }
}

/// A block of rows together with its aggregate outcome.
#[derive(Serialize, Debug)]
pub struct SectionSummary<R: Serialize> {
    pub passed: bool,
    pub rows: Vec<R>,
}

/// Graded dimension of a quotient against the root-multiplicity target.
#[derive(Serialize, Clone, Debug)]
pub struct DimRow {
    pub degree: DegreeLabel,
    pub expected: usize,
    pub got: usize,
    pub verdict: String,
}

impl DimRow {
    pub fn new(cd: &CartanData, e: &DimEntry) -> Self {
        DimRow {
            degree: DegreeLabel::from_weight(cd, &e.degree),
            expected: e.expected,
            got: e.got,
            verdict: verdict(e.matches()),
        }
    }
}

/// Dimension triple quotient / image / loop algebra at one degree.
#[derive(Serialize, Clone, Debug)]
pub struct TripleRow {
    pub degree: DegreeLabel,
    pub quotient: usize,
    pub image: usize,
    pub loops: usize,
    pub verdict: String,
}

impl TripleRow {
    pub fn new(cd: &CartanData, t: &DimTriple) -> Self {
        TripleRow {
            degree: DegreeLabel::from_weight(cd, &t.degree),
            quotient: t.quotient,
            image: t.image,
            loops: t.loops,
            verdict: verdict(t.matches()),
        }
    }
}

/// Outcome of the defining-relation checks on the loop algebra.
#[derive(Serialize, Debug)]
pub struct RelationSummary {
    pub passed: bool,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl RelationSummary {
    pub fn new(r: &RelationReport) -> Self {
        RelationSummary { passed: r.holds(), checked: r.checked, failures: r.failures.clone() }
    }
}

/// One degree of the injectivity certificate.
#[derive(Serialize, Clone, Debug)]
pub struct CertRow {
    pub degree: DegreeLabel,
    pub words: usize,
    pub ideal_rank: usize,
    pub dim_q: usize,
    pub dim_classical: usize,
    pub verdict: String,
}

impl CertRow {
    pub fn new(cd: &CartanData, r: &DegreeRow) -> Self {
        CertRow {
            degree: DegreeLabel::from_weight(cd, &r.degree),
            words: r.words,
            ideal_rank: r.ideal_rank,
            dim_q: r.dim_q,
            dim_classical: r.dim_classical,
            verdict: verdict(r.passes()),
        }
    }
}

/// Full verification document: graded dimensions, evaluation onto the loop
/// algebra, defining relations, and the graded injectivity certificate.
#[derive(Serialize, Debug)]
pub struct CertifyReport {
    pub schema: u32,
    #[serde(rename = "type")]
    pub affine_type: String,
    pub height_bound: i64,
    pub level_bound: i64,
    pub families: Vec<String>,
    pub graded_dims: SectionSummary<DimRow>,
    pub evaluation: SectionSummary<TripleRow>,
    pub relations: RelationSummary,
    pub certificate: SectionSummary<CertRow>,
    pub passed: bool,
    pub failing_degrees: Vec<DegreeLabel>,
}

impl CertifyReport {
    /// Assembles the document and derives the overall verdict and the list
    /// of failing degrees from the sections.
    pub fn new(
        affine_type: String,
        height_bound: i64,
        level_bound: i64,
        families: Vec<String>,
        graded_dims: SectionSummary<DimRow>,
        evaluation: SectionSummary<TripleRow>,
        relations: RelationSummary,
        certificate: SectionSummary<CertRow>,
    ) -> Self {
        let mut failing_degrees = Vec::new();
        for row in &graded_dims.rows {
            if row.verdict != "PASS" {
                failing_degrees.push(row.degree.clone());
            }
        }
        for row in &evaluation.rows {
            if row.verdict != "PASS" && !failing_degrees.contains(&row.degree) {
                failing_degrees.push(row.degree.clone());
            }
        }
        for row in &certificate.rows {
            if row.verdict != "PASS" && !failing_degrees.contains(&row.degree) {
                failing_degrees.push(row.degree.clone());
            }
        }
        let passed = graded_dims.passed
            && evaluation.passed
            && relations.passed
            && certificate.passed
            && failing_degrees.is_empty();
        CertifyReport {
            schema: SCHEMA,
            affine_type,
            height_bound,
            level_bound,
            families,
            graded_dims,
            evaluation,
            relations,
            certificate,
            passed,
            failing_degrees,
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "section,alpha,level,expected,got,quotient,image,loops,words,ideal_rank,dim_q,dim_classical,verdict\n",
        );
        for r in &self.graded_dims.rows {
            out.push_str(&format!(
                "graded-dims,{},{},{},{},,,,,,,,{}\n",
                join_i64(&r.degree.alpha),
                r.degree.level,
                r.expected,
                r.got,
                r.verdict
            ));
        }
        for r in &self.evaluation.rows {
            out.push_str(&format!(
                "evaluation,{},{},,,{},{},{},,,,,{}\n",
                join_i64(&r.degree.alpha),
                r.degree.level,
                r.quotient,
                r.image,
                r.loops,
                r.verdict
            ));
        }
        out.push_str(&format!(
            "relations,,,,,,,,,,,,{}\n",
            verdict(self.relations.passed)
        ));
        for r in &self.certificate.rows {
            out.push_str(&format!(
                "certificate,{},{},,,,,,{},{},{},{},{}\n",
                join_i64(&r.degree.alpha),
                r.degree.level,
                r.words,
                r.ideal_rank,
                r.dim_q,
                r.dim_classical,
                r.verdict
            ));
        }
        out
    }
}

/// Degreewise ideal comparison between two named relation sets.
#[derive(Serialize, Debug)]
pub struct EquivReport {
    pub schema: u32,
    #[serde(rename = "type")]
    pub affine_type: String,
    pub a: String,
    pub b: String,
    pub height_bound: i64,
    pub level_bound: i64,
    pub verdict: String,
    pub relation: String,
    pub a_extra: Vec<DegreeLabel>,
    pub b_extra: Vec<DegreeLabel>,
}

impl EquivReport {
    pub fn build(
        cd: &CartanData,
        a: String,
        b: String,
        height_bound: i64,
        level_bound: i64,
        cmp: &EquivalenceReport,
    ) -> Self {
        let verdict = match cmp.verdict {
            SetRelation::Equal => "EQUAL",
            SetRelation::LeftInRight | SetRelation::RightInLeft => "STRICT",
            SetRelation::Incomparable => "INCOMPARABLE",
        };
        let label = |ws: &[Weight]| ws.iter().map(|w| DegreeLabel::from_weight(cd, w)).collect();
        EquivReport {
            schema: SCHEMA,
            affine_type: cd.affine_type().to_string(),
            a,
            b,
            height_bound,
            level_bound,
            verdict: verdict.to_string(),
            relation: cmp.verdict.to_string(),
            a_extra: label(&cmp.left_extra),
            b_extra: label(&cmp.right_extra),
        }
    }

    pub fn to_csv(&self) -> String {
        let compact = |ds: &[DegreeLabel]| {
            ds.iter().map(DegreeLabel::compact).collect::<Vec<_>>().join(" ")
        };
        format!(
            "a,b,verdict,relation,a_extra,b_extra\n{},{},{},{},{},{}\n",
            self.a,
            self.b,
            self.verdict,
            self.relation,
            compact(&self.a_extra),
            compact(&self.b_extra)
        )
    }
}
