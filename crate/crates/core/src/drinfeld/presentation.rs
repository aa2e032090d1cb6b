//! Presentations of the positive loop half: generators `x_{i,r}` graded by
//! affine roots, and the relation families that cut the free Lie algebra
//! down to it.

use std::collections::BTreeMap;

use itertools::Itertools;
use num::rational::BigRational;

use crate::cartan::{CartanData, Weight};
use crate::lie::{bracket, GeneratorSet, IdealSpan, LieElement, Presentation};
use crate::{Error, Result};

/// Relation families for the positive loop half.
///
/// The first block is the symmetrized families, each an orbit sum over
/// permutations of its loop indices; the second block is the simplified
/// families, which pin the loop indices to a few small shifts, written as
/// differences where the defining identity equates two brackets. `Serre`
/// is the plain nested-bracket family `(ad x_{i,0})^{1-a_ij} x_{j,s}`.
///
/// Every family instantiates to the empty list on types where its side
/// condition (twist, Cartan entry, doubled node) never holds.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Family {
    Xd,
    X1,
    X2,
    X3,
    T2,
    S2,
    T3,
    U3,
    S,
    XdEq,
    X12,
    X3Full,
    T2P,
    T2PP,
    S2Eq,
    T3P,
    T3PP,
    T3PPP,
    U3P,
    U3PP,
    Serre,
}

impl Family {
    /// Short tag used in reports and command output.
    pub fn tag(self) -> &'static str {
        match self {
            Family::Xd => "xd",
            Family::X1 => "x1",
            Family::X2 => "x2",
            Family::X3 => "x3",
            Family::T2 => "t2",
            Family::S2 => "s2",
            Family::T3 => "t3",
            Family::U3 => "u3",
            Family::S => "s",
            Family::XdEq => "x_d",
            Family::X12 => "x_12",
            Family::X3Full => "x_3",
            Family::T2P => "t2'",
            Family::T2PP => "t2''",
            Family::S2Eq => "s_2",
            Family::T3P => "t3'",
            Family::T3PP => "t3''",
            Family::T3PPP => "t3'''",
            Family::U3P => "u3'",
            Family::U3PP => "u3''",
            Family::Serre => "serre",
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

/// Resolves a named relation set.
///
/// `prop72` is the full symmetrized set and `cor729` the full simplified
/// set; `x123` / `x12-x3` are their single-node fragments. `dr+` is the
/// symmetrized set without the `s` and `u3` families, and `dr+s+` puts
/// them back.
pub fn family_set(name: &str) -> Result<Vec<Family>> {
    use Family::*;
    let fams = match name {
        "prop72" | "dr+s+" => vec![Xd, X1, X2, X3, T2, S2, T3, U3, S],
        "dr+" => vec![Xd, X1, X2, X3, T2, S2, T3],
        "cor729" => {
            vec![XdEq, X12, X3Full, T2P, T2PP, S2Eq, T3P, T3PP, T3PPP, U3P, U3PP, Serre]
        }
        "x123" => vec![X1, X2, X3],
        "x12-x3" => vec![X12, X3Full],
        _ => {
            return Err(Error::BadArgument(format!("family_set: unknown set name `{name}`")))
        }
    };
    Ok(fams)
}

/// Generator window and degree bounds for one affine type.
///
/// Generators are `x_{i,r}` for finite nodes `i` and levels `0 <= r <=
/// level_bound` with `d_tilde(i) | r`; the degree of `x_{i,r}` is the
/// affine root `alpha_i + r delta`. Relation instances and queries are both
/// confined to degrees whose finite part has height at most `height_bound`
/// and whose level is at most `level_bound`. Inside that box the per-degree
/// ideal components are exact: bracketing never lowers the finite height or
/// the level, so no instance outside the box can contribute.
pub struct LoopPresentation {
    cd: CartanData,
    height_bound: i64,
    level_bound: i64,
    set: GeneratorSet,
    index: BTreeMap<(usize, i64), usize>,
}

impl LoopPresentation {
    pub fn new(cd: &CartanData, height_bound: i64, level_bound: i64) -> Result<Self> {
        if height_bound < 1 || level_bound < 0 {
            return Err(Error::BadArgument(
                "LoopPresentation::new: need height_bound >= 1 and level_bound >= 0".into(),
            ));
        }
        let width = cd.size();
        let delta = cd.delta();
        let mut gens = Vec::new();
        let mut index = BTreeMap::new();
        for i in 1..=cd.finite_rank() {
            let mut r = 0;
            while r <= level_bound {
                let degree = &Weight::simple(i, width) + &delta.scaled(r);
                index.insert((i, r), gens.len());
                gens.push((format!("x{i}.{r}"), degree));
                r += cd.d_tilde(i);
            }
        }
        let set = GeneratorSet::new(gens)?;
        Ok(LoopPresentation { cd: cd.clone(), height_bound, level_bound, set, index })
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cd
    }

    pub fn set(&self) -> &GeneratorSet {
        &self.set
    }

    pub fn height_bound(&self) -> i64 {
        self.height_bound
    }

    pub fn level_bound(&self) -> i64 {
        self.level_bound
    }

    /// The generator `x_{i,r}`, if `(i, r)` is inside the window.
    pub fn generator(&self, i: usize, r: i64) -> Result<LieElement> {
        match self.index.get(&(i, r)) {
            Some(&k) => Ok(LieElement::generator(&self.set, k)),
            None => Err(Error::BadArgument(format!(
                "LoopPresentation::generator: no generator x{i}.{r} in the window"
            ))),
        }
    }

    fn x(&self, i: usize, r: i64) -> LieElement {
        self.generator(i, r).expect("LoopPresentation: generator outside the window")
    }

    /// The alphabet index of the generator `x_{i,r}`, if `(i, r)` is inside
    /// the window.
    pub fn letter(&self, i: usize, r: i64) -> Result<usize> {
        match self.index.get(&(i, r)) {
            Some(&k) => Ok(k),
            None => Err(Error::BadArgument(format!(
                "LoopPresentation::letter: no generator x{i}.{r} in the window"
            ))),
        }
    }

    /// The `(node, level)` labels of generator letter `g`.
    pub fn generator_label(&self, g: usize) -> (usize, i64) {
        for (&(i, r), &k) in &self.index {
            if k == g {
                return (i, r);
            }
        }
        panic!("LoopPresentation::generator_label: no generator letter {g}");
    }

    /// The degree `alpha + level * delta`, with `alpha` given by its
    /// coefficients on the finite simple roots.
    pub fn degree(&self, finite: &[i64], level: i64) -> Weight {
        assert_eq!(
            finite.len(),
            self.cd.finite_rank(),
            "LoopPresentation::degree: wrong number of finite coefficients"
        );
        let mut coords = vec![0; self.cd.size()];
        for (k, &c) in finite.iter().enumerate() {
            coords[k + 1] = c;
        }
        &Weight::from_coords(coords) + &self.cd.delta().scaled(level)
    }

    /// Every degree in the query box with nonzero finite part, ordered by
    /// (finite height, finite coordinates, level).
    pub fn degrees(&self) -> Vec<Weight> {
        let mut out = Vec::new();
        for finite in finite_parts(self.cd.finite_rank(), self.height_bound) {
            for level in 0..=self.level_bound {
                out.push(self.degree(&finite, level));
            }
        }
        out
    }

    /// All instances of the given families, zero instances dropped.
    pub fn relation_set(&self, fams: &[Family]) -> Vec<LieElement> {
        let mut out = Vec::new();
        for &f in fams {
            out.extend(self.family_instances(f));
        }
        out.retain(|e| !e.is_zero());
        out
    }

    /// Ideal span for the union of the given families, with the height
    /// limit matched to the query box.
    pub fn span(&self, fams: &[Family]) -> Result<IdealSpan> {
        let pres = Presentation::new(self.set.clone(), self.relation_set(fams))?;
        let limit = self.height_bound + self.level_bound * self.cd.delta().height();
        Ok(IdealSpan::new(pres).with_height_limit(limit as usize))
    }

    /// All instances of one family inside the degree box.
    pub fn family_instances(&self, f: Family) -> Vec<LieElement> {
        match f {
            Family::Xd => self.xd_instances(),
            Family::X1 => self.x1_instances(),
            Family::X2 => self.x2_instances(),
            Family::X3 => self.x3_instances(),
            Family::T2 => self.t2_instances(),
            Family::S2 => self.s2_instances(),
            Family::T3 => self.t3_instances(),
            Family::U3 => self.u3_instances(),
            Family::S => self.s_family_instances(),
            Family::XdEq => self.xdeq_instances(),
            Family::X12 => self.x12_instances(),
            Family::X3Full => self.x3full_instances(),
            Family::T2P => self.t2p_instances(),
            Family::T2PP => self.t2pp_instances(),
            Family::S2Eq => self.s2eq_instances(),
            Family::T3P => self.t3p_instances(),
            Family::T3PP => self.t3pp_instances(),
            Family::T3PPP => self.t3ppp_instances(),
            Family::U3P => self.u3p_instances(),
            Family::U3PP => self.u3pp_instances(),
            Family::Serre => self.serre_instances(),
        }
    }

    /// True when `i` is the doubled node: the short node of an `A_{2n}^(2)`
    /// diagram, whose loop copies square to a root.
    pub(crate) fn doubled_node(&self, i: usize) -> bool {
        self.cd.affine_type().is_a2n_2() && self.cd.d(i) == 1
    }

    /// Levels `0, d_tilde(i), 2 d_tilde(i), ... <= max`.
    pub(crate) fn node_levels(&self, i: usize, max: i64) -> Vec<i64> {
        let dt = self.cd.d_tilde(i);
        let mut out = Vec::new();
        let mut r = 0;
        while r <= max {
            out.push(r);
            r += dt;
        }
        out
    }

    /// Ordered node pairs `(i, j)` with `a_ij` equal to `entry`.
    pub(crate) fn pairs_with_entry(&self, entry: i64) -> Vec<(usize, usize)> {
        let n = self.cd.finite_rank();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                if i != j && self.cd.a(i, j) == entry {
                    out.push((i, j));
                }
            }
        }
        out
    }

    fn xd_instances(&self) -> Vec<LieElement> {
        let mut out = Vec::new();
        if self.height_bound < 2 {
            return out;
        }
        let n = self.cd.finite_rank();
        for i in 1..=n {
            for j in (i + 1)..=n {
                if self.cd.a(i, j) >= 0 {
                    continue;
                }
                let dij = self.cd.d_tilde(i).max(self.cd.d_tilde(j));
                for &r in &self.node_levels(i, self.level_bound - dij) {
                    for &s in &self.node_levels(j, self.level_bound - dij - r) {
                        out.push(lin(vec![
                            (bracket(&self.x(i, r + dij), &self.x(j, s)), 1),
                            (bracket(&self.x(j, s + dij), &self.x(i, r)), 1),
                        ]));
                    }
                }
            }
        }
        out
    }

    fn x1_instances(&self) -> Vec<LieElement> {
        let mut out = Vec::new();
        if self.height_bound < 2 {
            return out;
        }
        for i in 1..=self.cd.finite_rank() {
            if self.doubled_node(i) {
                continue;
            }
            let e = self.cd.d_tilde(i);
            for &r1 in &self.node_levels(i, self.level_bound - e) {
                for &r2 in &self.node_levels(i, self.level_bound - e - r1) {
                    if r2 < r1 {
                        continue;
                    }
                    out.push(lin(vec![
                        (bracket(&self.x(i, r1 + e), &self.x(i, r2)), 1),
                        (bracket(&self.x(i, r2 + e), &self.x(i, r1)), 1),
                    ]));
                }
            }
        }
        out
    }

    fn x2_instances(&self) -> Vec<LieElement> {
        let mut out = Vec::new();
        if self.height_bound < 2 {
            return out;
        }
        for i in 1..=self.cd.finite_rank() {
            if !self.doubled_node(i) {
                continue;
            }
            for r1 in 0..=(self.level_bound - 2) {
                for r2 in r1..=(self.level_bound - 2 - r1) {
                    out.push(lin(vec![
                        (bracket(&self.x(i, r1 + 2), &self.x(i, r2)), 1),
                        (bracket(&self.x(i, r2 + 2), &self.x(i, r1)), 1),
                    ]));
                }
            }
        }
        out
    }

    fn x3_instances(&self) -> Vec<LieElement> {
        let mut out = Vec::new();
        if self.height_bound < 3 {
            return out;
        }
        for i in 1..=self.cd.finite_rank() {
            if !self.doubled_node(i) {
                continue;
            }
            for r1 in 0..=(self.level_bound - 1) {
                for r2 in r1..=(self.level_bound - 1 - r1) {
                    for r3 in r2..=(self.level_bound - 1 - r1 - r2) {
                        let rs = [r1, r2, r3];
                        let mut terms = Vec::new();
                        for p in (0..3).permutations(3) {
                            let inner = bracket(&self.x(i, rs[p[0]] + 1), &self.x(i, rs[p[1]]));
                            terms.push((bracket(&inner, &self.x(i, rs[p[2]])), 1));
                        }
                        out.push(lin(terms));
                    }
                }
            }
        }
        out
    }

    fn t2_instances(&self) -> Vec<LieElement> {
        let t = self.cd.affine_type();
        if t.twist != 2 || t.is_a2n_2() || self.height_bound < 3 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for (i, j) in self.pairs_with_entry(-2) {
            for &s in &self.node_levels(j, self.level_bound - 1) {
                for r1 in 0..=(self.level_bound - 1 - s) {
                    for r2 in r1..=(self.level_bound - 1 - s - r1) {
                        out.push(lin(vec![
                            (
                                bracket(
                                    &bracket(&self.x(j, s), &self.x(i, r1 + 1)),
                                    &self.x(i, r2),
                                ),
                                1,
                            ),
                            (
                                bracket(
                                    &bracket(&self.x(j, s), &self.x(i, r2 + 1)),
                                    &self.x(i, r1),
                                ),
                                1,
                            ),
                        ]));
                    }
                }
            }
        }
        out
    }

    fn s2_instances(&self) -> Vec<LieElement> {
        if !self.cd.affine_type().is_a2n_2() || self.height_bound < 3 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for (i, j) in self.pairs_with_entry(-2) {
            for s in 0..=(self.level_bound - 1) {
                for r1 in 0..=(self.level_bound - 1 - s) {
                    for r2 in r1..=(self.level_bound - 1 - s - r1) {
                        let xj = self.x(j, s);
                        out.push(lin(vec![
                            (bracket(&bracket(&xj, &self.x(i, r1 + 1)), &self.x(i, r2)), 1),
                            (bracket(&bracket(&xj, &self.x(i, r2)), &self.x(i, r1 + 1)), 1),
                            (bracket(&bracket(&xj, &self.x(i, r2 + 1)), &self.x(i, r1)), 1),
                            (bracket(&bracket(&xj, &self.x(i, r1)), &self.x(i, r2 + 1)), 1),
                        ]));
                    }
                }
            }
        }
        out
    }

    fn t3_instances(&self) -> Vec<LieElement> {
        if self.cd.affine_type().twist != 3 || self.height_bound < 3 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for (i, j) in self.pairs_with_entry(-3) {
            for &s in &self.node_levels(j, self.level_bound - 2) {
                for r1 in 0..=(self.level_bound - 2 - s) {
                    for r2 in r1..=(self.level_bound - 2 - s - r1) {
                        let xj = self.x(j, s);
                        out.push(lin(vec![
                            (bracket(&bracket(&xj, &self.x(i, r1 + 2)), &self.x(i, r2)), 2),
                            (bracket(&bracket(&xj, &self.x(i, r1 + 1)), &self.x(i, r2 + 1)), 1),
                            (bracket(&bracket(&xj, &self.x(i, r2 + 2)), &self.x(i, r1)), 2),
                            (bracket(&bracket(&xj, &self.x(i, r2 + 1)), &self.x(i, r1 + 1)), 1),
                        ]));
                    }
                }
            }
        }
        out
    }

    fn u3_instances(&self) -> Vec<LieElement> {
        if self.cd.affine_type().twist != 3 || self.height_bound < 4 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for (i, j) in self.pairs_with_entry(-3) {
            for &s in &self.node_levels(j, self.level_bound - 1) {
                for r1 in 0..=(self.level_bound - 1 - s) {
                    for r2 in r1..=(self.level_bound - 1 - s - r1) {
                        for r3 in r2..=(self.level_bound - 1 - s - r1 - r2) {
                            let rs = [r1, r2, r3];
                            let mut terms = Vec::new();
                            for p in (0..3).permutations(3) {
                                let mut el =
                                    bracket(&self.x(j, s), &self.x(i, rs[p[0]] + 1));
                                el = bracket(&el, &self.x(i, rs[p[1]]));
                                el = bracket(&el, &self.x(i, rs[p[2]]));
                                terms.push((el, 1));
                            }
                            out.push(lin(terms));
                        }
                    }
                }
            }
        }
        out
    }

    fn s_family_instances(&self) -> Vec<LieElement> {
        let n = self.cd.finite_rank();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    continue;
                }
                let m = (1 - self.cd.a(i, j)) as usize;
                if m as i64 + 1 > self.height_bound {
                    continue;
                }
                for &s in &self.node_levels(j, self.level_bound) {
                    let levels = self.node_levels(i, self.level_bound - s);
                    for rs in nondecreasing_tuples(&levels, m, self.level_bound - s) {
                        out.push(
                            self.s_instance(i, j, &rs, s)
                                .expect("s_family_instances: instance outside the window"),
                        );
                    }
                }
            }
        }
        out
    }

    /// One symmetrized nested-bracket instance: the sum over all
    /// permutations `p` of `[... [[x_{j,s}, x_{i,rs_p(1)}], x_{i,rs_p(2)}]
    /// ..., x_{i,rs_p(m)}]`, where `m = 1 - a_ij` must equal `rs.len()`.
    pub fn s_instance(&self, i: usize, j: usize, rs: &[i64], s: i64) -> Result<LieElement> {
        if i == j || i < 1 || j < 1 || i > self.cd.finite_rank() || j > self.cd.finite_rank() {
            return Err(Error::BadArgument("s_instance: need distinct finite nodes".into()));
        }
        let m = (1 - self.cd.a(i, j)) as usize;
        if rs.len() != m {
            return Err(Error::BadArgument(format!(
                "s_instance: expected {m} loop indices, got {}",
                rs.len()
            )));
        }
        let mut terms = Vec::new();
        for p in (0..m).permutations(m) {
            let mut el = self.generator(j, s)?;
            for &k in &p {
                el = bracket(&el, &self.generator(i, rs[k])?);
            }
            terms.push((el, 1));
        }
        Ok(lin(terms))
    }

    fn xdeq_instances(&self) -> Vec<LieElement> {
        let mut out = Vec::new();
        if self.height_bound < 2 {
            return out;
        }
        let n = self.cd.finite_rank();
        for i in 1..=n {
            for j in (i + 1)..=n {
                let (di, dj) = (self.cd.d_tilde(i), self.cd.d_tilde(j));
                for total in 0..=self.level_bound {
                    let pairs: Vec<(i64, i64)> = (0..=total)
                        .filter(|r| r % di == 0 && (total - r) % dj == 0)
                        .map(|r| (r, total - r))
                        .collect();
                    for w in pairs.windows(2) {
                        out.push(lin(vec![
                            (bracket(&self.x(i, w[0].0), &self.x(j, w[0].1)), 1),
                            (bracket(&self.x(i, w[1].0), &self.x(j, w[1].1)), -1),
                        ]));
                    }
                }
            }
        }
        out
    }

    fn x12_instances(&self) -> Vec<LieElement> {
        let mut out = Vec::new();
        if self.height_bound < 2 {
            return out;
        }
        for i in 1..=self.cd.finite_rank() {
            let doubled = self.doubled_node(i);
            let levels = self.node_levels(i, self.level_bound);
            for &r in &levels {
                for &s in &levels {
                    if s >= r || r + s > self.level_bound {
                        continue;
                    }
                    if doubled && (r + s) % 2 != 0 {
                        continue;
                    }
                    out.push(bracket(&self.x(i, r), &self.x(i, s)));
                }
            }
            if doubled {
                for s in 0..=self.level_bound {
                    for h in 1.. {
                        let r = s + 2 * h + 1;
                        if r + s > self.level_bound {
                            break;
                        }
                        let sign = if h % 2 == 0 { 1 } else { -1 };
                        out.push(lin(vec![
                            (bracket(&self.x(i, r), &self.x(i, s)), 1),
                            (bracket(&self.x(i, s + h + 1), &self.x(i, s + h)), -sign),
                        ]));
                    }
                }
            }
        }
        out
    }

    fn x3full_instances(&self) -> Vec<LieElement> {
        let mut out = Vec::new();
        if self.height_bound < 3 {
            return out;
        }
        for i in 1..=self.cd.finite_rank() {
            if !self.doubled_node(i) {
                continue;
            }
            for r1 in 0..=self.level_bound {
                for r2 in 0..r1 {
                    for r3 in 0..=(self.level_bound - r1 - r2) {
                        out.push(bracket(
                            &bracket(&self.x(i, r1), &self.x(i, r2)),
                            &self.x(i, r3),
                        ));
                    }
                }
            }
        }
        out
    }

    fn t2p_instances(&self) -> Vec<LieElement> {
        let t = self.cd.affine_type();
        if t.twist != 2 || t.is_a2n_2() || self.height_bound < 3 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for (i, j) in self.pairs_with_entry(-2) {
            for &s in &self.node_levels(j, self.level_bound - 1) {
                out.push(bracket(
                    &bracket(&self.x(j, s), &self.x(i, 1)),
                    &self.x(i, 0),
                ));
            }
        }
        out
    }

    fn t2pp_instances(&self) -> Vec<LieElement> {
        let t = self.cd.affine_type();
        if t.twist != 2 || t.is_a2n_2() || self.height_bound < 3 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for (i, j) in self.pairs_with_entry(-2) {
            for &s in &self.node_levels(j, self.level_bound - 2) {
                out.push(lin(vec![
                    (bracket(&bracket(&self.x(j, s), &self.x(i, 1)), &self.x(i, 1)), 1),
                    (bracket(&bracket(&self.x(j, s + 2), &self.x(i, 0)), &self.x(i, 0)), 1),
                ]));
            }
        }
        out
    }

    fn s2eq_instances(&self) -> Vec<LieElement> {
        if !self.cd.affine_type().is_a2n_2() || self.height_bound < 3 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for (i, j) in self.pairs_with_entry(-2) {
            for s in 0..=(self.level_bound - 1) {
                out.push(lin(vec![
                    (bracket(&bracket(&self.x(j, s), &self.x(i, 0)), &self.x(i, 1)), 1),
                    (bracket(&bracket(&self.x(j, s + 1), &self.x(i, 0)), &self.x(i, 0)), 1),
                ]));
            }
        }
        out
    }

    fn t3p_instances(&self) -> Vec<LieElement> {
        if self.cd.affine_type().twist != 3 || self.height_bound < 3 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for (i, j) in self.pairs_with_entry(-3) {
            for &s in &self.node_levels(j, self.level_bound - 2) {
                out.push(lin(vec![
                    (bracket(&bracket(&self.x(j, s), &self.x(i, 1)), &self.x(i, 1)), 1),
                    (bracket(&bracket(&self.x(j, s), &self.x(i, 2)), &self.x(i, 0)), 2),
                ]));
            }
        }
        out
    }

    fn t3pp_instances(&self) -> Vec<LieElement> {
        if self.cd.affine_type().twist != 3 || self.height_bound < 3 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for (i, j) in self.pairs_with_entry(-3) {
            for &s in &self.node_levels(j, self.level_bound - 3) {
                out.push(lin(vec![
                    (bracket(&bracket(&self.x(j, s), &self.x(i, 2)), &self.x(i, 1)), 2),
                    (bracket(&bracket(&self.x(j, s + 3), &self.x(i, 0)), &self.x(i, 0)), 1),
                ]));
            }
        }
        out
    }

    fn t3ppp_instances(&self) -> Vec<LieElement> {
        if self.cd.affine_type().twist != 3 || self.height_bound < 3 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for (i, j) in self.pairs_with_entry(-3) {
            for &s in &self.node_levels(j, self.level_bound - 4) {
                out.push(lin(vec![
                    (bracket(&bracket(&self.x(j, s), &self.x(i, 2)), &self.x(i, 2)), 1),
                    (bracket(&bracket(&self.x(j, s + 3), &self.x(i, 1)), &self.x(i, 0)), 2),
                ]));
            }
        }
        out
    }

    fn u3p_instances(&self) -> Vec<LieElement> {
        if self.cd.affine_type().twist != 3 || self.height_bound < 4 || self.level_bound < 1 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for (i, j) in self.pairs_with_entry(-3) {
            let el = bracket(&bracket(&self.x(j, 0), &self.x(i, 1)), &self.x(i, 0));
            out.push(bracket(&el, &self.x(i, 0)));
        }
        out
    }

    fn u3pp_instances(&self) -> Vec<LieElement> {
        if self.cd.affine_type().twist != 3 || self.height_bound < 4 || self.level_bound < 2 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for (i, j) in self.pairs_with_entry(-3) {
            let el = bracket(&bracket(&self.x(j, 0), &self.x(i, 2)), &self.x(i, 0));
            out.push(bracket(&el, &self.x(i, 0)));
        }
        out
    }

    fn serre_instances(&self) -> Vec<LieElement> {
        let n = self.cd.finite_rank();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    continue;
                }
                let m = 1 - self.cd.a(i, j);
                if m + 1 > self.height_bound {
                    continue;
                }
                for &s in &self.node_levels(j, self.level_bound) {
                    out.push(
                        self.serre_instance(i, j, s)
                            .expect("serre_instances: instance outside the window"),
                    );
                }
            }
        }
        out
    }

    /// The nested-bracket instance `(ad x_{i,0})^{1-a_ij} x_{j,s}`.
    pub fn serre_instance(&self, i: usize, j: usize, s: i64) -> Result<LieElement> {
        if i == j || i < 1 || j < 1 || i > self.cd.finite_rank() || j > self.cd.finite_rank() {
            return Err(Error::BadArgument("serre_instance: need distinct finite nodes".into()));
        }
        let xi = self.generator(i, 0)?;
        let mut el = self.generator(j, s)?;
        for _ in 0..(1 - self.cd.a(i, j)) {
            el = bracket(&xi, &el);
        }
        Ok(el)
    }
}

/// Integer linear combination of homogeneous elements of one degree.
fn lin(terms: Vec<(LieElement, i64)>) -> LieElement {
    let mut it = terms.into_iter();
    let (first, c0) = it.next().expect("lin: no terms");
    let mut acc = first.scaled(&BigRational::from_integer(c0.into()));
    for (el, c) in it {
        acc = acc
            .add_scaled(&el, &BigRational::from_integer(c.into()))
            .expect("lin: degree mismatch between terms");
    }
    acc
}

/// Nonzero vectors in `N^n` with coordinate sum at most `height_bound`,
/// ordered by (sum, coordinates).
fn finite_parts(n: usize, height_bound: i64) -> Vec<Vec<i64>> {
    fn rec(cur: &mut Vec<i64>, pos: usize, remaining: i64, out: &mut Vec<Vec<i64>>) {
        if pos == cur.len() {
            out.push(cur.clone());
            return;
        }
        for c in 0..=remaining {
            cur[pos] = c;
            rec(cur, pos + 1, remaining - c, out);
        }
        cur[pos] = 0;
    }
    let mut out = Vec::new();
    rec(&mut vec![0; n], 0, height_bound, &mut out);
    out.retain(|v| v.iter().sum::<i64>() >= 1);
    out.sort_by_key(|v| (v.iter().sum::<i64>(), v.clone()));
    out
}

/// Nondecreasing `m`-tuples drawn from the ascending list `levels` with
/// coordinate sum at most `budget`.
pub(crate) fn nondecreasing_tuples(levels: &[i64], m: usize, budget: i64) -> Vec<Vec<i64>> {
    fn rec(
        levels: &[i64],
        m: usize,
        budget: i64,
        start: usize,
        cur: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for (k, &r) in levels.iter().enumerate().skip(start) {
            if r > budget {
                break;
            }
            cur.push(r);
            rec(levels, m, budget - r, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(levels, m, budget, 0, &mut Vec::with_capacity(m), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::build_cartan;

    fn pres(name: &str, hb: i64, lb: i64) -> LoopPresentation {
        let cd = build_cartan(name.parse().unwrap()).unwrap();
        LoopPresentation::new(&cd, hb, lb).unwrap()
    }

    // ---- Generator window ----

    #[test]
    fn window_respects_loop_periods() {
        let p = pres("D4~3", 3, 6);
        assert!(p.generator(1, 5).is_ok(), "short node carries every level");
        assert!(p.generator(2, 3).is_ok(), "long node carries multiples of 3");
        assert!(p.generator(2, 2).is_err(), "long node skips level 2");
        assert!(p.generator(1, 7).is_err(), "level beyond the window");
    }

    #[test]
    fn doubled_type_has_every_level() {
        let p = pres("A2~2", 3, 4);
        for r in 0..=4 {
            assert!(p.generator(1, r).is_ok(), "A2~2 node 1 carries level {r}");
        }
    }

    #[test]
    fn generator_degrees_are_affine_roots() {
        let p = pres("A2~1", 3, 3);
        let x = p.generator(2, 2).unwrap();
        // alpha_2 + 2 delta with delta = (1, 1, 1).
        assert_eq!(x.degree().coords(), &[2, 2, 3]);
    }

    // ---- Family applicability ----

    #[test]
    fn family_applicability_follows_the_type() {
        let untwisted = pres("A2~1", 3, 3);
        assert!(untwisted.family_instances(Family::X2).is_empty());
        assert!(untwisted.family_instances(Family::T2).is_empty());
        assert!(untwisted.family_instances(Family::T3).is_empty());
        assert!(!untwisted.family_instances(Family::X1).is_empty());
        assert!(!untwisted.family_instances(Family::Xd).is_empty());

        let doubled = pres("A2~2", 3, 3);
        assert!(doubled.family_instances(Family::X1).is_empty());
        assert!(!doubled.family_instances(Family::X2).is_empty());
        assert!(!doubled.family_instances(Family::X3).is_empty());
        assert!(doubled.family_instances(Family::S2).is_empty(), "no node pairs at rank 1");

        let triple = pres("D4~3", 4, 4);
        assert!(!triple.family_instances(Family::T3).is_empty());
        assert!(!triple.family_instances(Family::U3).is_empty());
        assert!(triple.family_instances(Family::T2).is_empty());
    }

    #[test]
    fn twisted_pair_selection_matches_the_cartan_matrix() {
        let p = pres("A3~2", 3, 4);
        assert_eq!(p.pairs_with_entry(-2), vec![(1, 2)]);
        let q = pres("A4~2", 3, 4);
        assert_eq!(q.pairs_with_entry(-2), vec![(2, 1)]);
    }

    // ---- Instance shapes ----

    #[test]
    fn serre_instance_has_the_nested_degree() {
        let p = pres("C2~1", 4, 2);
        // a_12 = -2, so three brackets of x1 on x2.
        let el = p.serre_instance(1, 2, 0).unwrap();
        let (level, finite) = p.cartan().level_and_finite_part(el.degree());
        assert_eq!(level, 0);
        assert_eq!(finite.coords(), &[0, 3, 1]);
    }

    #[test]
    fn s_instance_at_equal_indices_is_the_scaled_serre_bracket() {
        let p = pres("A2~1", 3, 2);
        // Both loop indices zero: each permutation contributes the same
        // nested bracket, so the orbit sum is 2! times one term, and the
        // nesting is the reflected Serre bracket.
        let s = p.s_instance(1, 2, &[0, 0], 0).unwrap();
        let serre = p.serre_instance(1, 2, 0).unwrap();
        let two = BigRational::from_integer(2.into());
        assert_eq!(s, serre.scaled(&two), "m = 2 even, so no sign flip");
    }

    #[test]
    fn x12_difference_identities_are_homogeneous() {
        let p = pres("A2~2", 2, 6);
        for el in p.family_instances(Family::X12) {
            let (level, finite) = p.cartan().level_and_finite_part(el.degree());
            assert_eq!(finite.coords(), &[0, 2], "doubled-node pair degree");
            assert!(level <= 6);
        }
    }

    #[test]
    fn relation_sets_are_nonzero_and_window_bounded() {
        for name in ["A1~1", "A2~1", "C2~1", "A2~2", "A3~2", "A4~2", "D4~3"] {
            let p = pres(name, 4, 4);
            for set_name in ["prop72", "cor729", "dr+"] {
                for el in p.relation_set(&family_set(set_name).unwrap()) {
                    assert!(!el.is_zero(), "{name}/{set_name}: zero instance survived");
                    let (level, finite) = p.cartan().level_and_finite_part(el.degree());
                    assert!(level <= 4, "{name}/{set_name}: level outside the box");
                    assert!(finite.height() <= 4, "{name}/{set_name}: height outside the box");
                }
            }
        }
    }

    #[test]
    fn named_sets_resolve() {
        assert_eq!(family_set("prop72").unwrap().len(), 9);
        assert_eq!(family_set("cor729").unwrap().len(), 12);
        assert_eq!(family_set("dr+").unwrap().len(), 7);
        assert!(family_set("nope").is_err());
    }

    // ---- Helper enumeration ----

    #[test]
    fn nondecreasing_tuples_respect_the_budget() {
        let tuples = nondecreasing_tuples(&[0, 1, 2, 3], 2, 3);
        assert!(tuples.contains(&vec![0, 3]));
        assert!(tuples.contains(&vec![1, 2]));
        assert!(!tuples.contains(&vec![2, 2]), "sum 4 exceeds the budget");
        for t in &tuples {
            assert!(t[0] <= t[1]);
            assert!(t[0] + t[1] <= 3);
        }
    }

    #[test]
    fn finite_parts_enumerate_the_simplex() {
        let parts = finite_parts(2, 2);
        assert_eq!(
            parts,
            vec![vec![0, 1], vec![1, 0], vec![0, 2], vec![1, 1], vec![2, 0]],
        );
    }
}
