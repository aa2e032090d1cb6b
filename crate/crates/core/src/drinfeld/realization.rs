//! Checks tying the presentations to the twisted loop model: the defining
//! relation window of the affine algebra on loop generators, and the
//! evaluation of the positive-half families.

use std::collections::BTreeMap;

use num::rational::BigRational;
use num::BigInt;

use crate::arith::{Cyclotomic, EchelonBasis};
use crate::cartan::{big_b_coeff, Weight};
use crate::lie::{standard_split, LieElement, Word};
use crate::{Error, Result};

use super::loop_algebra::{LoopElement, TwistedLoop};
use super::presentation::{Family, LoopPresentation};

/// Outcome of a relation window check: how many identities were tested
/// and which ones failed, as display strings.
#[derive(Debug)]
pub struct RelationReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl RelationReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Verifies the defining relations of the affine algebra on the twisted
/// loop model, over all integral loop indices with `|r|, |s| <= window`:
/// centrality of `c`, the imaginary bracket with its level pairing, the
/// action of `h_{i,r}` on loop generators, the mixed bracket with its
/// central coefficient, and the rank-dependent Serre-type relations.
pub fn verify_relations(tl: &TwistedLoop, window: i64) -> RelationReport {
    let cd = tl.cartan();
    let n = cd.finite_rank();
    let k = tl.order();
    let mut report = RelationReport { checked: 0, failures: Vec::new() };
    let levels = |i: usize| -> Vec<i64> {
        (-window..=window).filter(|&r| cd.is_integral_pair(i, r)).collect()
    };
    let rat = |num: i64, den: i64| {
        Cyclotomic::from_rational(k, BigRational::new(BigInt::from(num), BigInt::from(den)))
    };
    let mut run = |name: String, got: LoopElement, want: LoopElement| {
        report.checked += 1;
        if got != want {
            report.failures.push(name);
        }
    };

    let c = tl.central();
    for i in 1..=n {
        let x = tl.x_plus(i, 0).unwrap();
        let h = tl.h_gen(i, cd.d_tilde(i)).unwrap();
        run(format!("central c x{i}"), tl.bracket(&c, &x), LoopElement::zero(k));
        run(format!("central c h{i}"), tl.bracket(&c, &h), LoopElement::zero(k));
    }

    for i in 1..=n {
        for j in 1..=n {
            for &r in &levels(i) {
                let hi = tl.h_gen(i, r).unwrap();
                for &s in &levels(j) {
                    let b = big_b_coeff(cd, i, j, r);
                    // [h_{i,r}, h_{j,s}] = delta_{r+s,0} (r B_ij^r / d_j) c
                    let hh_want = if r + s == 0 {
                        c.scaled(&rat(r * b, cd.d(j)))
                    } else {
                        LoopElement::zero(k)
                    };
                    let hj = tl.h_gen(j, s).unwrap();
                    run(format!("hh i={i} j={j} r={r} s={s}"), tl.bracket(&hi, &hj), hh_want);

                    // [h_{i,r}, x^pm_{j,s}] = pm B_ij^r x^pm_{j,r+s}
                    let xp = tl.x_plus(j, s).unwrap();
                    let xm = tl.x_minus(j, s).unwrap();
                    let (hx_plus, hx_minus) = if b == 0 {
                        (LoopElement::zero(k), LoopElement::zero(k))
                    } else {
                        (
                            tl.x_plus(j, r + s).unwrap().scaled(&rat(b, 1)),
                            tl.x_minus(j, r + s).unwrap().scaled(&rat(-b, 1)),
                        )
                    };
                    run(format!("hx+ i={i} j={j} r={r} s={s}"), tl.bracket(&hi, &xp), hx_plus);
                    run(format!("hx- i={i} j={j} r={r} s={s}"), tl.bracket(&hi, &xm), hx_minus);

                    // [x^+_{i,r}, x^-_{j,s}] = delta_ij (h_{i,r+s}
                    //                          + delta_{r+s,0} ((r-s)/2d_i) c)
                    let xpi = tl.x_plus(i, r).unwrap();
                    let pm_want = if i != j {
                        LoopElement::zero(k)
                    } else if r + s == 0 {
                        tl.h_gen(i, 0).unwrap().add_scaled(&c, &rat(r - s, 2 * cd.d(i)))
                    } else {
                        tl.h_gen(i, r + s).unwrap()
                    };
                    run(format!("x+x- i={i} j={j} r={r} s={s}"), tl.bracket(&xpi, &xm), pm_want);
                }
            }
        }
    }

    let at = cd.affine_type();
    if n == 1 && !at.is_a2n_2() {
        // [x^pm_{1, r pm 1}, x^pm_{1,r}] = 0
        for r in -window..window {
            let p = tl.bracket(&tl.x_plus(1, r + 1).unwrap(), &tl.x_plus(1, r).unwrap());
            run(format!("adjacent+ r={r}"), p, LoopElement::zero(k));
        }
        for r in (-window + 1)..=window {
            let m = tl.bracket(&tl.x_minus(1, r - 1).unwrap(), &tl.x_minus(1, r).unwrap());
            run(format!("adjacent- r={r}"), m, LoopElement::zero(k));
        }
    }
    if n == 1 && at.is_a2n_2() {
        // [[x^pm_{1, r pm 1}, x^pm_{1,r}], x^pm_{1,r}] = 0
        for r in -window..window {
            let xp1 = tl.x_plus(1, r + 1).unwrap();
            let xp0 = tl.x_plus(1, r).unwrap();
            let p = tl.bracket(&tl.bracket(&xp1, &xp0), &xp0);
            run(format!("doubled+ r={r}"), p, LoopElement::zero(k));
        }
        for r in (-window + 1)..=window {
            let xm1 = tl.x_minus(1, r - 1).unwrap();
            let xm0 = tl.x_minus(1, r).unwrap();
            let m = tl.bracket(&tl.bracket(&xm1, &xm0), &xm0);
            run(format!("doubled- r={r}"), m, LoopElement::zero(k));
        }
    }
    if n > 1 {
        // (ad x^pm_{i,r})^{1 - a_ij} x^pm_{j,s} = 0
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    continue;
                }
                let m = (1 - cd.a(i, j)) as usize;
                for &r in &levels(i) {
                    let xpi = tl.x_plus(i, r).unwrap();
                    let xmi = tl.x_minus(i, r).unwrap();
                    for &s in &levels(j) {
                        let mut accp = tl.x_plus(j, s).unwrap();
                        let mut accm = tl.x_minus(j, s).unwrap();
                        for _ in 0..m {
                            accp = tl.bracket(&xpi, &accp);
                            accm = tl.bracket(&xmi, &accm);
                        }
                        run(format!("serre+ i={i} j={j} r={r} s={s}"), accp, LoopElement::zero(k));
                        run(format!("serre- i={i} j={j} r={r} s={s}"), accm, LoopElement::zero(k));
                    }
                }
            }
        }
    }

    report
}

/// Evaluates a free Lie element on raising loop generators, sending the
/// window generator `x_{i,r}` to `x^+_{i,r}`.
pub fn evaluate(tl: &TwistedLoop, pres: &LoopPresentation, el: &LieElement) -> Result<LoopElement> {
    check_same_type(tl, pres)?;
    let mut memo: BTreeMap<Word, LoopElement> = BTreeMap::new();
    let mut out = LoopElement::zero(tl.order());
    for (word, coeff) in el.terms() {
        let val = eval_word(tl, pres, word, &mut memo);
        out = out.add_scaled(&val, &Cyclotomic::from_rational(tl.order(), coeff.clone()));
    }
    Ok(out)
}

fn eval_word(
    tl: &TwistedLoop,
    pres: &LoopPresentation,
    w: &[crate::lie::Letter],
    memo: &mut BTreeMap<Word, LoopElement>,
) -> LoopElement {
    if let Some(v) = memo.get(w) {
        return v.clone();
    }
    let val = if w.len() == 1 {
        let (i, r) = pres.generator_label(w[0] as usize);
        tl.x_plus(i, r).expect("evaluate: window generators are integral pairs")
    } else {
        let split = standard_split(w);
        let left = eval_word(tl, pres, &w[..split], memo);
        let right = eval_word(tl, pres, &w[split..], memo);
        tl.bracket(&left, &right)
    };
    memo.insert(w.to_vec(), val.clone());
    val
}

fn check_same_type(tl: &TwistedLoop, pres: &LoopPresentation) -> Result<()> {
    if tl.cartan().affine_type() != pres.cartan().affine_type() {
        return Err(Error::BadArgument(
            "evaluate: presentation and loop model have different affine types".into(),
        ));
    }
    Ok(())
}

/// One degree row of the evaluation check: the presentation quotient
/// dimension, the rank of the evaluated word basis, and the loop weight
/// space dimension must agree.
#[derive(Debug)]
pub struct DimTriple {
    pub degree: Weight,
    pub quotient: usize,
    pub image: usize,
    pub loops: usize,
}

impl DimTriple {
    pub fn matches(&self) -> bool {
        self.quotient == self.image && self.image == self.loops
    }
}

/// Outcome of [`verify_evaluation`]: family instances that failed to
/// vanish on the model, and the dimension triples over the degree box.
#[derive(Debug)]
pub struct EvalReport {
    pub instances_checked: usize,
    pub nonzero_instances: Vec<String>,
    pub rows: Vec<DimTriple>,
}

impl EvalReport {
    pub fn holds(&self) -> bool {
        self.nonzero_instances.is_empty() && self.rows.iter().all(DimTriple::matches)
    }

    /// Degrees whose dimension triple disagrees.
    pub fn mismatched_degrees(&self) -> Vec<Weight> {
        self.rows.iter().filter(|r| !r.matches()).map(|r| r.degree.clone()).collect()
    }
}

/// Checks that evaluation on raising loop generators factors exactly
/// through the presentation: every instance of the given families
/// evaluates to zero, and at each box degree the quotient dimension, the
/// evaluated image rank, and the loop weight space dimension agree.
pub fn verify_evaluation(
    tl: &TwistedLoop,
    pres: &LoopPresentation,
    fams: &[Family],
) -> Result<EvalReport> {
    check_same_type(tl, pres)?;
    let mut report =
        EvalReport { instances_checked: 0, nonzero_instances: Vec::new(), rows: Vec::new() };
    let mut memo: BTreeMap<Word, LoopElement> = BTreeMap::new();

    for &f in fams {
        for inst in pres.family_instances(f) {
            report.instances_checked += 1;
            let mut val = LoopElement::zero(tl.order());
            for (word, coeff) in inst.terms() {
                let piece = eval_word(tl, pres, word, &mut memo);
                val = val.add_scaled(&piece, &Cyclotomic::from_rational(tl.order(), coeff.clone()));
            }
            if !val.is_zero() {
                report
                    .nonzero_instances
                    .push(format!("{f} at {:?}", inst.degree().coords()));
            }
        }
    }

    let mut span = pres.span(fams)?;
    let dim = tl.finite().dim();
    for degree in pres.degrees() {
        let quotient = span.quotient_dim(&degree)?;
        let mut image: EchelonBasis<Cyclotomic> = EchelonBasis::new(dim + 1);
        let (level, _) = tl.cartan().level_and_finite_part(&degree);
        for word in span.basis_words(&degree)? {
            let val = eval_word(tl, pres, &word, &mut memo);
            let mut dense = vec![Cyclotomic::zero(tl.order()); dim + 1];
            if let Some(vec) = val.component(level) {
                for (&t, c) in vec {
                    dense[t] = c.clone();
                }
            }
            dense[dim] = val.central_part().clone();
            image.insert(dense);
        }
        let loops = tl.weight_space_dim(&degree)?;
        report.rows.push(DimTriple { degree, quotient, image: image.dim(), loops });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::build_cartan;
    use crate::drinfeld::loop_algebra::build_twisted_loop;
    use crate::drinfeld::presentation::family_set;

    fn model(name: &str) -> TwistedLoop {
        let cd = build_cartan(name.parse().unwrap()).unwrap();
        build_twisted_loop(&cd).unwrap()
    }

    // ---- Relation window ----

    #[test]
    fn relations_hold_on_rank_one_untwisted() {
        let report = verify_relations(&model("A1~1"), 4);
        assert!(report.holds(), "A1~1 relation window: {:?}", report.failures);
        assert!(report.checked > 100, "A1~1 relation window is nonempty");
    }

    #[test]
    fn relations_hold_on_rank_two_untwisted() {
        let report = verify_relations(&model("A2~1"), 4);
        assert!(report.holds(), "A2~1 relation window: {:?}", report.failures);
    }

    #[test]
    fn relations_hold_on_doubled_type() {
        let report = verify_relations(&model("A2~2"), 4);
        assert!(report.holds(), "A2~2 relation window: {:?}", report.failures);
    }

    #[test]
    fn relations_hold_on_triple_twist() {
        let report = verify_relations(&model("D4~3"), 4);
        assert!(report.holds(), "D4~3 relation window: {:?}", report.failures);
    }

    #[test]
    fn relations_hold_across_remaining_types() {
        for name in ["C2~1", "A3~2", "A4~2"] {
            let report = verify_relations(&model(name), 3);
            assert!(report.holds(), "{name} relation window: {:?}", report.failures);
        }
    }

    // ---- Evaluation ----

    #[test]
    fn evaluation_factors_on_rank_one() {
        let cd = build_cartan("A1~1".parse().unwrap()).unwrap();
        let tl = build_twisted_loop(&cd).unwrap();
        let pres = LoopPresentation::new(&cd, 3, 3).unwrap();
        let report = verify_evaluation(&tl, &pres, &family_set("cor729").unwrap()).unwrap();
        assert!(report.holds(), "A1~1 evaluation: {:?}", report.mismatched_degrees());
        assert!(report.instances_checked > 0);
        assert!(!report.rows.is_empty());
    }

    #[test]
    fn evaluation_factors_on_doubled_type() {
        let cd = build_cartan("A2~2".parse().unwrap()).unwrap();
        let tl = build_twisted_loop(&cd).unwrap();
        let pres = LoopPresentation::new(&cd, 3, 4).unwrap();
        let report = verify_evaluation(&tl, &pres, &family_set("cor729").unwrap()).unwrap();
        assert!(report.holds(), "A2~2 evaluation: {:?}", report.mismatched_degrees());
    }

    #[test]
    fn evaluation_factors_on_rank_two() {
        let cd = build_cartan("A2~1".parse().unwrap()).unwrap();
        let tl = build_twisted_loop(&cd).unwrap();
        let pres = LoopPresentation::new(&cd, 3, 2).unwrap();
        let report = verify_evaluation(&tl, &pres, &family_set("prop72").unwrap()).unwrap();
        assert!(report.holds(), "A2~1 evaluation: {:?}", report.mismatched_degrees());
    }

    #[test]
    fn single_instances_evaluate_to_zero() {
        let cd = build_cartan("A2~1".parse().unwrap()).unwrap();
        let tl = build_twisted_loop(&cd).unwrap();
        let pres = LoopPresentation::new(&cd, 4, 4).unwrap();
        let inst = pres.serre_instance(1, 2, 2).unwrap();
        assert!(evaluate(&tl, &pres, &inst).unwrap().is_zero(), "A2~1: serre instance vanishes");
    }

    #[test]
    fn free_words_do_not_all_vanish() {
        let cd = build_cartan("A1~1".parse().unwrap()).unwrap();
        let tl = build_twisted_loop(&cd).unwrap();
        let pres = LoopPresentation::new(&cd, 2, 2).unwrap();
        let gen = pres.generator(1, 1).unwrap();
        let val = evaluate(&tl, &pres, &gen).unwrap();
        assert!(!val.is_zero(), "A1~1: generators evaluate to nonzero loop vectors");
    }

    #[test]
    fn mismatched_types_are_rejected() {
        let cd1 = build_cartan("A1~1".parse().unwrap()).unwrap();
        let cd2 = build_cartan("A2~1".parse().unwrap()).unwrap();
        let tl = build_twisted_loop(&cd1).unwrap();
        let pres = LoopPresentation::new(&cd2, 2, 2).unwrap();
        let gen = pres.generator(1, 0).unwrap();
        assert!(evaluate(&tl, &pres, &gen).is_err(), "evaluate: affine types must agree");
    }
}
