//! Homogeneous elements of the free associative algebra over `Q(q)` on the
//! windowed loop generators.

use std::collections::BTreeMap;

use num::Zero;

use crate::arith::{LaurentPoly, RationalFunction};
use crate::cartan::Weight;
use crate::lie::words::Assoc;
use crate::lie::{GeneratorSet, Letter, Word};
use crate::{Error, Result};

/// A multidegree-homogeneous noncommutative polynomial: finitely many words
/// over the generator alphabet, each with a nonzero coefficient in `Q(q)`,
/// all of the same degree.
///
/// Relation instances built from twisted commutators keep their coefficients
/// inside `Z[q, q^-1]`; denominators only appear later, in span arithmetic.
#[derive(Clone, PartialEq, Debug)]
pub struct NCWordPoly {
    degree: Weight,
    terms: BTreeMap<Word, RationalFunction>,
}

impl NCWordPoly {
    /// The zero polynomial, tagged with a degree.
    pub fn zero(degree: Weight) -> Self {
        NCWordPoly { degree, terms: BTreeMap::new() }
    }

    /// The single word `w` with coefficient one; the empty word is the unit
    /// in degree zero.
    pub fn word(set: &GeneratorSet, w: Word) -> Self {
        let degree = set.word_degree(&w);
        let mut terms = BTreeMap::new();
        terms.insert(w, RationalFunction::one());
        NCWordPoly { degree, terms }
    }

    pub fn degree(&self) -> &Weight {
        &self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Word, RationalFunction> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `self + c * rhs`; the degrees must agree.
    pub fn add_scaled(&self, rhs: &Self, c: &RationalFunction) -> Result<Self> {
        if self.degree != rhs.degree {
            return Err(Error::BadArgument(format!(
                "NCWordPoly::add_scaled: degree mismatch {:?} vs {:?}",
                self.degree, rhs.degree
            )));
        }
        let mut out = self.clone();
        for (w, a) in &rhs.terms {
            let next = match out.terms.get(w) {
                Some(b) => b + &(c * a),
                None => c * a,
            };
            if next.is_zero() {
                out.terms.remove(w);
            } else {
                out.terms.insert(w.clone(), next);
            }
        }
        Ok(out)
    }

    pub fn scaled(&self, c: &RationalFunction) -> Self {
        if c.is_zero() {
            return NCWordPoly::zero(self.degree.clone());
        }
        let terms = self.terms.iter().map(|(w, a)| (w.clone(), c * a)).collect();
        NCWordPoly { degree: self.degree.clone(), terms }
    }

    /// Concatenation product; degrees add.
    pub fn mul(&self, rhs: &Self) -> Self {
        let degree = &self.degree + &rhs.degree;
        let mut terms: BTreeMap<Word, RationalFunction> = BTreeMap::new();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                let c = a * b;
                let next = match terms.get(&w) {
                    Some(t) => t + &c,
                    None => c,
                };
                if next.is_zero() {
                    terms.remove(&w);
                } else {
                    terms.insert(w, next);
                }
            }
        }
        NCWordPoly { degree, terms }
    }

    /// The twisted commutator `self * rhs - q^exp * rhs * self`.
    pub fn q_bracket(&self, rhs: &Self, exp: i64) -> Self {
        let minus_q = RationalFunction::from_laurent(-&LaurentPoly::q_pow(exp));
        self.mul(rhs)
            .add_scaled(&rhs.mul(self), &minus_q)
            .expect("NCWordPoly::q_bracket: products share a degree")
    }

    /// Coefficient vector over an ascending word basis; every word of the
    /// polynomial must appear in `basis`.
    pub fn coordinates(&self, basis: &[Word]) -> Vec<RationalFunction> {
        let mut out = vec![RationalFunction::zero(); basis.len()];
        for (w, c) in &self.terms {
            let k = basis
                .binary_search(w)
                .expect("NCWordPoly::coordinates: word missing from the basis");
            out[k] = c.clone();
        }
        out
    }

    /// Evaluates every coefficient at `q = 1`, yielding a word combination
    /// over the rationals; fails on a coefficient with a pole there.
    pub fn specialize_at_one(&self) -> Result<Assoc> {
        let mut out = Assoc::new();
        for (w, c) in &self.terms {
            let v = c.specialize_at_one()?;
            if !v.is_zero() {
                out.insert(w.clone(), v);
            }
        }
        Ok(out)
    }
}

/// Every word over the alphabet with total degree exactly `d`, ascending
/// lexicographically. Degree zero yields the empty word alone.
pub fn words_of_degree(set: &GeneratorSet, d: &Weight) -> Vec<Word> {
    let mut out = Vec::new();
    let mut cur = Word::new();
    fill_exact(set, d.clone(), &mut cur, &mut out);
    out
}

fn fill_exact(set: &GeneratorSet, rest: Weight, cur: &mut Word, out: &mut Vec<Word>) {
    if rest.is_zero() {
        out.push(cur.clone());
        return;
    }
    for l in 0..set.len() {
        let next = &rest - set.degree(l);
        if next.coords().iter().any(|&c| c < 0) {
            continue;
        }
        cur.push(l as Letter);
        fill_exact(set, next, cur, out);
        cur.pop();
    }
}

/// Every word whose degree is componentwise at most `bound`, the empty word
/// included, in ascending word order.
pub fn words_within(set: &GeneratorSet, bound: &Weight) -> Vec<Word> {
    let mut out = Vec::new();
    let mut cur = Word::new();
    fill_within(set, bound.clone(), &mut cur, &mut out);
    out
}

fn fill_within(set: &GeneratorSet, rest: Weight, cur: &mut Word, out: &mut Vec<Word>) {
    out.push(cur.clone());
    for l in 0..set.len() {
        let next = &rest - set.degree(l);
        if next.coords().iter().any(|&c| c < 0) {
            continue;
        }
        cur.push(l as Letter);
        fill_within(set, next, cur, out);
        cur.pop();
    }
}
