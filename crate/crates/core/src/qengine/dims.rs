//! Per-degree spans of the two-sided relation ideal in the free associative
//! algebra over `Q(q)`, and exact graded dimensions of the quotient.

use std::collections::HashSet;

use itertools::Itertools;
use num::BigRational;

use crate::arith::{
    bareiss_rank, clear_ratfn_rows, clear_rational_rows, ExactMatrix, RationalFunction, Scalar,
};
use crate::cartan::Weight;
use crate::drinfeld::LoopPresentation;
use crate::lie::{Letter, Word};
use crate::{Error, Result};

use super::families::{q_instantiate, QRelationFamily};
use super::word_poly::{words_of_degree, words_within, NCWordPoly};

/// Dense coordinate rows spanning the degree-`d` slice of the two-sided
/// ideal generated by `instances`: every product `u * rho * v` whose degrees
/// add up to `d`, written over the ascending word basis at `d` and
/// deduplicated. Instances of larger degree are skipped.
pub fn ideal_rows(
    pres: &LoopPresentation,
    instances: &[NCWordPoly],
    d: &Weight,
) -> Vec<Vec<RationalFunction>> {
    let set = pres.set();
    let basis = words_of_degree(set, d);
    let mut rows = Vec::new();
    let mut seen: HashSet<Vec<RationalFunction>> = HashSet::new();
    for rho in instances {
        let rem = d - rho.degree();
        if rem.coords().iter().any(|&c| c < 0) {
            continue;
        }
        for u in words_within(set, &rem) {
            let dv = &rem - &set.word_degree(&u);
            for v in words_of_degree(set, &dv) {
                let mut row = vec![RationalFunction::zero(); basis.len()];
                for (w, c) in rho.terms() {
                    let mut full = u.clone();
                    full.extend_from_slice(w);
                    full.extend_from_slice(&v);
                    let k = basis
                        .binary_search(&full)
                        .expect("ideal_rows: shifted word escapes the degree basis");
                    row[k] = c.clone();
                }
                if seen.insert(row.clone()) {
                    rows.push(row);
                }
            }
        }
    }
    rows
}

/// Rank of the degree-`d` ideal slice over `Q(q)`, computed fraction-free
/// after clearing denominators.
pub fn ideal_rank(pres: &LoopPresentation, instances: &[NCWordPoly], d: &Weight) -> usize {
    let rows = ideal_rows(pres, instances, d);
    if rows.is_empty() {
        return 0;
    }
    bareiss_rank(clear_ratfn_rows(rows))
}

/// Rank of the same slice after evaluating every entry at `q = 1`.
pub fn ideal_rank_at_one(
    pres: &LoopPresentation,
    instances: &[NCWordPoly],
    d: &Weight,
) -> usize {
    let rows = ideal_rows(pres, instances, d);
    if rows.is_empty() {
        return 0;
    }
    let at_one: Vec<Vec<BigRational>> = clear_ratfn_rows(rows)
        .into_iter()
        .map(|row| row.into_iter().map(|p| p.eval_one()).collect())
        .collect();
    bareiss_rank(clear_rational_rows(at_one))
}

/// Graded dimension at `d` of the free algebra on the windowed generators
/// modulo the two-sided ideal of the given families.
pub fn fplus_dim(pres: &LoopPresentation, d: &Weight, fams: &[QRelationFamily]) -> usize {
    let instances = q_instantiate(pres, fams);
    fplus_dim_with(pres, &instances, d)
}

/// Same, over a precomputed instance pool.
pub fn fplus_dim_with(pres: &LoopPresentation, instances: &[NCWordPoly], d: &Weight) -> usize {
    words_of_degree(pres.set(), d).len() - ideal_rank(pres, instances, d)
}

/// Independent dense recomputation of [`fplus_dim`] for cross-checking.
///
/// Enumerates raw letter sequences length by length instead of walking
/// degrees, materializes every shifted relation row without deduplication,
/// and takes the rank through the generic scalar matrix. Deliberately free
/// of the sparsity and pruning the main path relies on.
pub fn fplus_dim_dense(
    pres: &LoopPresentation,
    d: &Weight,
    fams: &[QRelationFamily],
) -> Result<usize> {
    let set = pres.set();
    let delta = pres.cartan().delta();
    let level = d.coord(0) / delta.coord(0);
    let alpha = d - &delta.scaled(level);
    let len = alpha.height();
    if !(1..=6).contains(&len) {
        return Err(Error::ResourceBound(format!(
            "fplus_dim_dense: word length {len} outside the supported range"
        )));
    }
    let len = len as usize;
    let mut basis: Vec<Word> = Vec::new();
    for w in raw_words(set.len(), len) {
        if &set.word_degree(&w) == d {
            basis.push(w);
        }
    }

    let mut rows: Vec<Vec<RationalFunction>> = Vec::new();
    for rho in q_instantiate(pres, fams) {
        let rho_level = rho.degree().coord(0) / delta.coord(0);
        let rho_len = (rho.degree() - &delta.scaled(rho_level)).height() as usize;
        if rho_len > len {
            continue;
        }
        for left in 0..=(len - rho_len) {
            for u in raw_words(set.len(), left) {
                for v in raw_words(set.len(), len - rho_len - left) {
                    let shifted_degree = &(&set.word_degree(&u) + rho.degree())
                        + &set.word_degree(&v);
                    if &shifted_degree != d {
                        continue;
                    }
                    let mut row = vec![RationalFunction::zero(); basis.len()];
                    for (w, c) in rho.terms() {
                        let mut full = u.clone();
                        full.extend_from_slice(w);
                        full.extend_from_slice(&v);
                        let k = basis
                            .binary_search(&full)
                            .expect("fplus_dim_dense: word escapes the basis");
                        row[k] = c.clone();
                    }
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return Ok(basis.len());
    }
    let mut matrix = ExactMatrix::new(rows.len(), basis.len());
    for (r, row) in rows.iter().enumerate() {
        for (c, entry) in row.iter().enumerate() {
            if !entry.is_zero() {
                matrix.set(r, c, Scalar::RatFn(entry.clone()));
            }
        }
    }
    Ok(basis.len() - matrix.exact_rank()?)
}

/// Raw letter sequences of one length, in lexicographic order; length zero
/// yields the empty word alone.
fn raw_words(alphabet: usize, len: usize) -> Vec<Word> {
    if len == 0 {
        return vec![Vec::new()];
    }
    (0..len)
        .map(|_| 0..alphabet as Letter)
        .multi_cartesian_product()
        .collect()
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
    fn single_generator_degrees_are_one_dimensional() {
        let p = pres("A1~1", 2, 3);
        let fams = q_family_set_all();
        for r in 0..=3 {
            let d = p.degree(&[1], r);
            assert_eq!(fplus_dim(&p, &d, &fams), 1);
        }
    }

    fn q_family_set_all() -> Vec<QRelationFamily> {
        QRelationFamily::FULL.to_vec()
    }

    #[test]
    fn two_block_degree_has_dimension_one() {
        let p = pres("A1~1", 2, 2);
        let d = p.degree(&[2], 1);
        assert_eq!(words_of_degree(p.set(), &d).len(), 2);
        assert_eq!(fplus_dim(&p, &d, &q_family_set_all()), 1);
    }

    #[test]
    fn level_zero_height_three_degree_has_dimension_two() {
        let p = pres("A2~1", 3, 2);
        let d = p.degree(&[2, 1], 0);
        assert_eq!(fplus_dim(&p, &d, &q_family_set_all()), 2);
    }

    #[test]
    fn adding_families_never_raises_a_dimension() {
        let p = pres("A2~1", 3, 2);
        let chains: [&[QRelationFamily]; 4] = [
            &[],
            &[QRelationFamily::Xd],
            &[QRelationFamily::Xd, QRelationFamily::X1],
            &QRelationFamily::FULL,
        ];
        for d in [p.degree(&[2, 1], 0), p.degree(&[2, 1], 1), p.degree(&[1, 1], 1)] {
            let words = words_of_degree(p.set(), &d).len();
            let mut last = words;
            for fams in chains {
                let dim = fplus_dim(&p, &d, fams);
                assert!(dim <= last, "dimension grew at {:?}", d);
                assert!(dim <= words);
                last = dim;
            }
        }
    }

    #[test]
    fn dense_oracle_agrees_with_the_pruned_path() {
        for (name, hb, lb) in [("A1~1", 3, 2), ("A2~1", 2, 2), ("A2~2", 3, 2)] {
            let p = pres(name, hb, lb);
            let fams = q_family_set_all();
            for d in p.degrees() {
                let fast = fplus_dim(&p, &d, &fams);
                let dense = fplus_dim_dense(&p, &d, &fams).unwrap();
                assert_eq!(fast, dense, "{name} at {:?}", d);
            }
        }
    }

    #[test]
    fn specialized_rank_never_exceeds_the_generic_rank() {
        let p = pres("A2~2", 3, 3);
        let instances = q_instantiate(&p, &QRelationFamily::FULL);
        for d in p.degrees() {
            let generic = ideal_rank(&p, &instances, &d);
            let at_one = ideal_rank_at_one(&p, &instances, &d);
            assert!(at_one <= generic, "rank grew under specialization at {:?}", d);
        }
    }

    #[test]
    fn dense_oracle_rejects_oversized_degrees() {
        let p = pres("A1~1", 2, 1);
        let d = p.degree(&[1], 0).scaled(9);
        assert!(fplus_dim_dense(&p, &d, &QRelationFamily::FULL).is_err());
    }
}
