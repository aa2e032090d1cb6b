//! The quantum relation families, instantiated inside a presentation window
//! in the same enumeration order as their classical counterparts.

use itertools::Itertools;

use crate::arith::{LaurentPoly, RationalFunction};
use crate::drinfeld::presentation::nondecreasing_tuples;
use crate::drinfeld::LoopPresentation;
use crate::lie::Letter;
use crate::{Error, Result};

use super::word_poly::NCWordPoly;

/// The relation families on the positive loop generators over `Q(q)`.
///
/// `ZxPlus` records the vanishing of the generators outside the divisibility
/// grid; the window alphabet already omits those, so it instantiates to the
/// empty list and is kept only so named sets stay complete. `Sul` is the
/// restriction of the `S` chains to the node pairs with `a_ij` in
/// `{0, -1}` on twisted types (every pair on untwisted ones); its instances
/// are a sublist of the `S` instances, so the full sets list `S` and not
/// `Sul`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum QRelationFamily {
    ZxPlus,
    Xd,
    X1,
    X2,
    X3,
    Sul,
    T2,
    S2,
    T3,
    S,
    U3,
}

impl QRelationFamily {
    pub const ALL: [QRelationFamily; 11] = [
        QRelationFamily::ZxPlus,
        QRelationFamily::Xd,
        QRelationFamily::X1,
        QRelationFamily::X2,
        QRelationFamily::X3,
        QRelationFamily::Sul,
        QRelationFamily::T2,
        QRelationFamily::S2,
        QRelationFamily::T3,
        QRelationFamily::S,
        QRelationFamily::U3,
    ];

    /// The level-shifted families: every instance lives at level at least
    /// one, so their ideal meets the level-zero slice trivially.
    pub const DR_PLUS: [QRelationFamily; 7] = [
        QRelationFamily::Xd,
        QRelationFamily::X1,
        QRelationFamily::X2,
        QRelationFamily::X3,
        QRelationFamily::T2,
        QRelationFamily::S2,
        QRelationFamily::T3,
    ];

    /// The full defining set: the level-shifted families together with the
    /// symmetrized chains.
    pub const FULL: [QRelationFamily; 9] = [
        QRelationFamily::Xd,
        QRelationFamily::X1,
        QRelationFamily::X2,
        QRelationFamily::X3,
        QRelationFamily::T2,
        QRelationFamily::S2,
        QRelationFamily::T3,
        QRelationFamily::S,
        QRelationFamily::U3,
    ];

    /// Display and parse token.
    pub fn tag(self) -> &'static str {
        match self {
            QRelationFamily::ZxPlus => "ZX+",
            QRelationFamily::Xd => "XD",
            QRelationFamily::X1 => "X1",
            QRelationFamily::X2 => "X2",
            QRelationFamily::X3 => "X3",
            QRelationFamily::Sul => "SUL",
            QRelationFamily::T2 => "T2",
            QRelationFamily::S2 => "S2",
            QRelationFamily::T3 => "T3",
            QRelationFamily::S => "S",
            QRelationFamily::U3 => "U3",
        }
    }

    /// Parses a family token; matching is case-insensitive and a trailing
    /// `+` is ignored, so `S+`, `s`, and `s+` all name the chain family.
    pub fn parse(name: &str) -> Result<QRelationFamily> {
        let mut t = name.trim().to_ascii_uppercase();
        if t.ends_with('+') {
            t.pop();
        }
        for f in QRelationFamily::ALL {
            if t == f.tag().trim_end_matches('+') {
                return Ok(f);
            }
        }
        Err(Error::BadArgument(format!("unknown quantum relation family {name:?}")))
    }
}

/// Resolves a set name: `dr+` is the level-shifted families, `dr+s+`
/// (alias `iplus`) adds the symmetrized chains, and any single family
/// token names itself.
pub fn q_family_set(name: &str) -> Result<Vec<QRelationFamily>> {
    match name.trim().to_ascii_lowercase().as_str() {
        "dr+" => Ok(QRelationFamily::DR_PLUS.to_vec()),
        "dr+s+" | "iplus" => Ok(QRelationFamily::FULL.to_vec()),
        other => Ok(vec![QRelationFamily::parse(other)?]),
    }
}

/// All instances of one family inside the degree box, in the same order as
/// the classical enumeration of the matching family.
pub fn q_family_instances(pres: &LoopPresentation, f: QRelationFamily) -> Vec<NCWordPoly> {
    match f {
        QRelationFamily::ZxPlus => Vec::new(),
        QRelationFamily::Xd => xd_q(pres),
        QRelationFamily::X1 => x1_q(pres),
        QRelationFamily::X2 => x2_q(pres),
        QRelationFamily::X3 => x3_q(pres),
        QRelationFamily::Sul => s_q(pres, true),
        QRelationFamily::T2 => t2_q(pres),
        QRelationFamily::S2 => s2_q(pres),
        QRelationFamily::T3 => t3_q(pres),
        QRelationFamily::S => s_q(pres, false),
        QRelationFamily::U3 => u3_q(pres),
    }
}

/// All instances of the given families, zero instances dropped.
pub fn q_instantiate(pres: &LoopPresentation, fams: &[QRelationFamily]) -> Vec<NCWordPoly> {
    let mut out = Vec::new();
    for &f in fams {
        out.extend(q_family_instances(pres, f));
    }
    out.retain(|p| !p.is_zero());
    out
}

fn q_pow(e: i64) -> RationalFunction {
    RationalFunction::from_laurent(LaurentPoly::q_pow(e))
}

fn x(pres: &LoopPresentation, i: usize, r: i64) -> NCWordPoly {
    let k = pres
        .letter(i, r)
        .expect("quantum enumerator stayed inside the window");
    NCWordPoly::word(pres.set(), vec![k as Letter])
}

fn add(a: NCWordPoly, b: &NCWordPoly) -> NCWordPoly {
    a.add_scaled(b, &RationalFunction::one())
        .expect("instance terms share a degree")
}

fn xd_q(pres: &LoopPresentation) -> Vec<NCWordPoly> {
    let cd = pres.cartan();
    let mut out = Vec::new();
    if pres.height_bound() < 2 {
        return out;
    }
    let n = cd.finite_rank();
    for i in 1..=n {
        for j in (i + 1)..=n {
            if cd.a(i, j) >= 0 {
                continue;
            }
            let dij = cd.d_tilde(i).max(cd.d_tilde(j));
            let ei = cd.d(i) * cd.a(i, j);
            let ej = cd.d(j) * cd.a(j, i);
            for &r in &pres.node_levels(i, pres.level_bound() - dij) {
                for &s in &pres.node_levels(j, pres.level_bound() - dij - r) {
                    let a = x(pres, i, r + dij).q_bracket(&x(pres, j, s), ei);
                    let b = x(pres, j, s + dij).q_bracket(&x(pres, i, r), ej);
                    out.push(add(a, &b));
                }
            }
        }
    }
    out
}

fn x1_q(pres: &LoopPresentation) -> Vec<NCWordPoly> {
    let cd = pres.cartan();
    let mut out = Vec::new();
    if pres.height_bound() < 2 {
        return out;
    }
    for i in 1..=cd.finite_rank() {
        if pres.doubled_node(i) {
            continue;
        }
        let e = cd.d_tilde(i);
        let exp = 2 * cd.d(i);
        for &r1 in &pres.node_levels(i, pres.level_bound() - e) {
            for &r2 in &pres.node_levels(i, pres.level_bound() - e - r1) {
                if r2 < r1 {
                    continue;
                }
                let a = x(pres, i, r1 + e).q_bracket(&x(pres, i, r2), exp);
                let b = x(pres, i, r2 + e).q_bracket(&x(pres, i, r1), exp);
                out.push(add(a, &b));
            }
        }
    }
    out
}

fn x2_q(pres: &LoopPresentation) -> Vec<NCWordPoly> {
    let cd = pres.cartan();
    let mut out = Vec::new();
    if pres.height_bound() < 2 {
        return out;
    }
    let minus_q4 = RationalFunction::from_laurent(-&LaurentPoly::q_pow(4));
    for i in 1..=cd.finite_rank() {
        if !pres.doubled_node(i) {
            continue;
        }
        for r1 in 0..=(pres.level_bound() - 2) {
            for r2 in r1..=(pres.level_bound() - 2 - r1) {
                let block = |a: i64, b: i64| {
                    let lead = x(pres, i, a + 2).q_bracket(&x(pres, i, b), 2);
                    let shifted = x(pres, i, a + 1).q_bracket(&x(pres, i, b + 1), -6);
                    lead.add_scaled(&shifted, &minus_q4)
                        .expect("doubled-node blocks share a degree")
                };
                out.push(add(block(r1, r2), &block(r2, r1)));
            }
        }
    }
    out
}

fn x3_q(pres: &LoopPresentation) -> Vec<NCWordPoly> {
    let cd = pres.cartan();
    let mut out = Vec::new();
    if pres.height_bound() < 3 {
        return out;
    }
    for i in 1..=cd.finite_rank() {
        if !pres.doubled_node(i) {
            continue;
        }
        for r1 in 0..=(pres.level_bound() - 1) {
            for r2 in r1..=(pres.level_bound() - 1 - r1) {
                for r3 in r2..=(pres.level_bound() - 1 - r1 - r2) {
                    let rs = [r1, r2, r3];
                    let mut total: Option<NCWordPoly> = None;
                    for p in (0..3).permutations(3) {
                        let inner =
                            x(pres, i, rs[p[0]] + 1).q_bracket(&x(pres, i, rs[p[1]]), 2);
                        let term = inner.q_bracket(&x(pres, i, rs[p[2]]), 4);
                        total = Some(match total {
                            None => term,
                            Some(t) => add(t, &term),
                        });
                    }
                    out.push(total.expect("three permutation terms"));
                }
            }
        }
    }
    out
}

fn t2_q(pres: &LoopPresentation) -> Vec<NCWordPoly> {
    let cd = pres.cartan();
    let t = cd.affine_type();
    if t.twist != 2 || t.is_a2n_2() || pres.height_bound() < 3 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, j) in pres.pairs_with_entry(-2) {
        for &s in &pres.node_levels(j, pres.level_bound() - 1) {
            for r1 in 0..=(pres.level_bound() - 1 - s) {
                for r2 in r1..=(pres.level_bound() - 1 - s - r1) {
                    let term = |a: i64, b: i64| {
                        x(pres, j, s)
                            .q_bracket(&x(pres, i, a + 1), 2)
                            .q_bracket(&x(pres, i, b), 0)
                    };
                    out.push(add(term(r1, r2), &term(r2, r1)));
                }
            }
        }
    }
    out
}

fn s2_q(pres: &LoopPresentation) -> Vec<NCWordPoly> {
    let cd = pres.cartan();
    if !cd.affine_type().is_a2n_2() || pres.height_bound() < 3 {
        return Vec::new();
    }
    let balanced = RationalFunction::from_laurent(
        &LaurentPoly::q_pow(2) + &LaurentPoly::q_pow(-2),
    );
    let q2 = q_pow(2);
    let mut out = Vec::new();
    for (i, j) in pres.pairs_with_entry(-2) {
        for s in 0..=(pres.level_bound() - 1) {
            for r1 in 0..=(pres.level_bound() - 1 - s) {
                for r2 in r1..=(pres.level_bound() - 1 - s - r1) {
                    let half = |a: i64, b: i64| {
                        let chain = x(pres, j, s)
                            .q_bracket(&x(pres, i, a + 1), 2)
                            .q_bracket(&x(pres, i, b), 0)
                            .scaled(&balanced);
                        let flipped = x(pres, i, a + 1)
                            .q_bracket(&x(pres, i, b), 2)
                            .q_bracket(&x(pres, j, s), -4)
                            .scaled(&q2);
                        add(chain, &flipped)
                    };
                    out.push(add(half(r1, r2), &half(r2, r1)));
                }
            }
        }
    }
    out
}

fn t3_q(pres: &LoopPresentation) -> Vec<NCWordPoly> {
    let cd = pres.cartan();
    if cd.affine_type().twist != 3 || pres.height_bound() < 3 {
        return Vec::new();
    }
    let lead = RationalFunction::from_laurent(&LaurentPoly::q_pow(2) + &LaurentPoly::one());
    let mut out = Vec::new();
    for (i, j) in pres.pairs_with_entry(-3) {
        for &s in &pres.node_levels(j, pres.level_bound() - 2) {
            for r1 in 0..=(pres.level_bound() - 2 - s) {
                for r2 in r1..=(pres.level_bound() - 2 - s - r1) {
                    let half = |a: i64, b: i64| {
                        let far = x(pres, j, s)
                            .q_bracket(&x(pres, i, a + 2), 3)
                            .q_bracket(&x(pres, i, b), -1)
                            .scaled(&lead);
                        let near = x(pres, j, s)
                            .q_bracket(&x(pres, i, a + 1), 3)
                            .q_bracket(&x(pres, i, b + 1), 1);
                        add(far, &near)
                    };
                    out.push(add(half(r1, r2), &half(r2, r1)));
                }
            }
        }
    }
    out
}

fn u3_q(pres: &LoopPresentation) -> Vec<NCWordPoly> {
    let cd = pres.cartan();
    if cd.affine_type().twist != 3 || pres.height_bound() < 4 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, j) in pres.pairs_with_entry(-3) {
        for &s in &pres.node_levels(j, pres.level_bound() - 1) {
            for r1 in 0..=(pres.level_bound() - 1 - s) {
                for r2 in r1..=(pres.level_bound() - 1 - s - r1) {
                    for r3 in r2..=(pres.level_bound() - 1 - s - r1 - r2) {
                        let rs = [r1, r2, r3];
                        let mut total: Option<NCWordPoly> = None;
                        for p in (0..3).permutations(3) {
                            let term = x(pres, j, s)
                                .q_bracket(&x(pres, i, rs[p[0]] + 1), 3)
                                .q_bracket(&x(pres, i, rs[p[1]]), 1)
                                .q_bracket(&x(pres, i, rs[p[2]]), -1);
                            total = Some(match total {
                                None => term,
                                Some(t) => add(t, &term),
                            });
                        }
                        out.push(total.expect("six permutation terms"));
                    }
                }
            }
        }
    }
    out
}

fn s_q(pres: &LoopPresentation, head_only: bool) -> Vec<NCWordPoly> {
    let cd = pres.cartan();
    let untwisted = cd.affine_type().twist == 1;
    let n = cd.finite_rank();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            if head_only && !untwisted && !matches!(cd.a(i, j), 0 | -1) {
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
                        s_q_instance(pres, i, j, &rs, s)
                            .expect("chain enumerator stayed inside the window"),
                    );
                }
            }
        }
    }
    out
}

/// One symmetrized quantum chain: the sum over all permutations `p` of the
/// nested twisted brackets
/// `[... [[x_{j,s}, x_{i,rs_p(1)}]_{e_1}, x_{i,rs_p(2)}]_{e_2} ...]_{e_m}`
/// with `e_u = d_i (-a_ij - 2(u - 1))` and `m = 1 - a_ij = rs.len()`.
pub fn s_q_instance(
    pres: &LoopPresentation,
    i: usize,
    j: usize,
    rs: &[i64],
    s: i64,
) -> Result<NCWordPoly> {
    let cd = pres.cartan();
    if i == j || i < 1 || j < 1 || i > cd.finite_rank() || j > cd.finite_rank() {
        return Err(Error::BadArgument("s_q_instance: need distinct finite nodes".into()));
    }
    let m = (1 - cd.a(i, j)) as usize;
    if rs.len() != m {
        return Err(Error::BadArgument(format!(
            "s_q_instance: expected {m} loop indices, got {}",
            rs.len()
        )));
    }
    let di = cd.d(i);
    let aij = cd.a(i, j);
    let head = {
        let k = pres.letter(j, s)?;
        NCWordPoly::word(pres.set(), vec![k as Letter])
    };
    let mut total: Option<NCWordPoly> = None;
    for p in (0..m).permutations(m) {
        let mut el = head.clone();
        for (u, &k) in p.iter().enumerate() {
            let exp = di * (-aij - 2 * u as i64);
            let kk = pres.letter(i, rs[k])?;
            el = el.q_bracket(&NCWordPoly::word(pres.set(), vec![kk as Letter]), exp);
        }
        total = Some(match total {
            None => el,
            Some(t) => add(t, &el),
        });
    }
    Ok(total.expect("at least one permutation"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::build_cartan;

    fn pres(name: &str, hb: i64, lb: i64) -> LoopPresentation {
        let cd = build_cartan(name.parse().unwrap()).unwrap();
        LoopPresentation::new(&cd, hb, lb).unwrap()
    }

    #[test]
    fn family_tokens_round_trip() {
        for f in QRelationFamily::ALL {
            assert_eq!(QRelationFamily::parse(f.tag()).unwrap(), f);
        }
        assert_eq!(QRelationFamily::parse("s+").unwrap(), QRelationFamily::S);
        assert_eq!(QRelationFamily::parse("u3+").unwrap(), QRelationFamily::U3);
        assert_eq!(QRelationFamily::parse("sul").unwrap(), QRelationFamily::Sul);
        assert_eq!(QRelationFamily::parse("zx+").unwrap(), QRelationFamily::ZxPlus);
        assert!(QRelationFamily::parse("x9").is_err());

        assert_eq!(q_family_set("dr+").unwrap().len(), 7);
        assert_eq!(q_family_set("dr+s+").unwrap().len(), 9);
        assert_eq!(q_family_set("iplus").unwrap(), q_family_set("dr+s+").unwrap());
        assert_eq!(q_family_set("S+").unwrap(), vec![QRelationFamily::S]);
    }

    #[test]
    fn single_node_pair_relation_matches_the_frozen_value() {
        let p = pres("A1~1", 2, 1);
        let insts = q_family_instances(&p, QRelationFamily::X1);
        assert_eq!(insts.len(), 1);
        let x10 = NCWordPoly::word(p.set(), vec![0]);
        let x11 = NCWordPoly::word(p.set(), vec![1]);
        let two = RationalFunction::from_laurent(LaurentPoly::int(2));
        let minus_two_q2 =
            RationalFunction::from_laurent(-&(&LaurentPoly::int(2) * &LaurentPoly::q_pow(2)));
        let expected = x11
            .mul(&x10)
            .scaled(&two)
            .add_scaled(&x10.mul(&x11), &minus_two_q2)
            .unwrap();
        assert_eq!(insts[0], expected);
    }

    #[test]
    fn untwisted_chain_head_equals_the_full_chain_family() {
        let p = pres("A2~1", 3, 2);
        let head = q_family_instances(&p, QRelationFamily::Sul);
        let full = q_family_instances(&p, QRelationFamily::S);
        assert!(!full.is_empty());
        assert_eq!(head, full);
    }

    #[test]
    fn twisted_chain_head_is_a_strict_sublist() {
        let p = pres("A3~2", 4, 2);
        let head = q_family_instances(&p, QRelationFamily::Sul);
        let full = q_family_instances(&p, QRelationFamily::S);
        assert!(!head.is_empty());
        assert!(head.len() < full.len());
        for inst in &head {
            assert!(full.contains(inst));
        }
    }

    #[test]
    fn inapplicable_families_instantiate_empty() {
        let a21 = pres("A2~1", 3, 2);
        for f in [
            QRelationFamily::ZxPlus,
            QRelationFamily::X2,
            QRelationFamily::X3,
            QRelationFamily::T2,
            QRelationFamily::S2,
            QRelationFamily::T3,
            QRelationFamily::U3,
        ] {
            assert!(q_family_instances(&a21, f).is_empty(), "family {:?}", f);
        }

        let a11 = pres("A1~1", 3, 2);
        assert!(q_family_instances(&a11, QRelationFamily::Xd).is_empty());
        assert!(q_family_instances(&a11, QRelationFamily::S).is_empty());
        assert!(!q_family_instances(&a11, QRelationFamily::X1).is_empty());

        let a22 = pres("A2~2", 3, 3);
        assert!(q_family_instances(&a22, QRelationFamily::X1).is_empty());
        assert!(q_family_instances(&a22, QRelationFamily::T2).is_empty());
        assert!(!q_family_instances(&a22, QRelationFamily::X2).is_empty());
        assert!(!q_family_instances(&a22, QRelationFamily::X3).is_empty());
    }

    #[test]
    fn instances_stay_inside_the_window() {
        for name in ["A1~1", "A2~1", "C2~1", "A2~2", "A3~2", "A4~2", "D4~3"] {
            let p = pres(name, 4, 2);
            let degrees = p.degrees();
            for f in QRelationFamily::ALL {
                for inst in q_family_instances(&p, f) {
                    assert!(
                        degrees.contains(inst.degree()),
                        "{name} {:?} instance degree {:?} outside the window",
                        f,
                        inst.degree()
                    );
                }
            }
        }
    }

    #[test]
    fn relation_coefficients_are_laurent() {
        for name in ["A2~1", "A2~2", "A3~2", "A4~2", "D4~3"] {
            let p = pres(name, 4, 2);
            for f in QRelationFamily::ALL {
                for inst in q_family_instances(&p, f) {
                    for c in inst.terms().values() {
                        assert!(c.is_laurent(), "{name} {:?} has a non-Laurent coefficient", f);
                    }
                }
            }
        }
    }

    #[test]
    fn level_shifted_families_start_above_level_zero() {
        for name in ["A1~1", "A2~1", "C2~1", "A2~2", "A3~2", "A4~2", "D4~3"] {
            let p = pres(name, 4, 2);
            for f in QRelationFamily::DR_PLUS {
                for inst in q_family_instances(&p, f) {
                    let level = inst.degree().coord(0);
                    assert!(level >= 1, "{name} {:?} instance at level {level}", f);
                }
            }
        }
    }
}
