//! Graded two-sided Lie ideals generated by homogeneous relations, and
//! dimensions of the corresponding quotient components.
//!
//! The component of the ideal at degree `d` is the span of the relations of
//! degree `d` together with the brackets of every generator with the
//! component at the correspondingly lower degree. That recursion is
//! complete because the adjoint action of any bracket monomial decomposes
//! into compositions of generator adjoints.

use std::collections::BTreeMap;

use num::BigRational;

use super::element::{bracket, GeneratorSet, LieElement};
use super::words::Word;
use crate::arith::EchelonBasis;
use crate::cartan::Weight;
use crate::{Error, Result};

/// A generator set together with homogeneous relations.
pub struct Presentation {
    set: GeneratorSet,
    rels: Vec<LieElement>,
}

impl Presentation {
    pub fn new(set: GeneratorSet, rels: Vec<LieElement>) -> Result<Self> {
        for r in &rels {
            if r.degree().len() != set.degree_width() {
                return Err(Error::BadArgument(
                    "Presentation::new: relation degree width mismatch".into(),
                ));
            }
        }
        Ok(Presentation { set, rels })
    }

    pub fn set(&self) -> &GeneratorSet {
        &self.set
    }

    pub fn relations(&self) -> &[LieElement] {
        &self.rels
    }
}

pub const DEFAULT_HEIGHT_LIMIT: usize = 30;

struct Component {
    words: Vec<Word>,
    span: EchelonBasis<BigRational>,
    span_elems: Vec<LieElement>,
}

/// Memoized per-degree spans of the ideal generated by the relations of a
/// [`Presentation`], with quotient-dimension queries.
pub struct IdealSpan {
    pres: Presentation,
    height_limit: usize,
    comp: BTreeMap<Weight, Component>,
}

impl IdealSpan {
    pub fn new(pres: Presentation) -> Self {
        IdealSpan { pres, height_limit: DEFAULT_HEIGHT_LIMIT, comp: BTreeMap::new() }
    }

    /// Caps the total height (coordinate sum) of computable degrees.
    pub fn with_height_limit(mut self, limit: usize) -> Self {
        self.height_limit = limit;
        self
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    /// Dimension of the free Lie algebra's component at `d`.
    pub fn free_dim(&mut self, d: &Weight) -> Result<usize> {
        self.ensure(d)?;
        Ok(self.comp[d].words.len())
    }

    /// Rank of the ideal's component at `d`.
    pub fn ideal_rank(&mut self, d: &Weight) -> Result<usize> {
        self.ensure(d)?;
        Ok(self.comp[d].span.dim())
    }

    /// Dimension of the quotient algebra's component at `d`.
    pub fn quotient_dim(&mut self, d: &Weight) -> Result<usize> {
        self.ensure(d)?;
        let c = &self.comp[d];
        Ok(c.words.len() - c.span.dim())
    }

    /// The Lyndon basis of the free component at `d`.
    pub fn basis_words(&mut self, d: &Weight) -> Result<Vec<Word>> {
        self.ensure(d)?;
        Ok(self.comp[d].words.clone())
    }

    /// Independent spanning elements of the ideal's component at `d`.
    pub fn span_elements(&mut self, d: &Weight) -> Result<Vec<LieElement>> {
        self.ensure(d)?;
        Ok(self.comp[d].span_elems.clone())
    }

    /// Whether `x` lies in the ideal.
    pub fn contains(&mut self, x: &LieElement) -> Result<bool> {
        if x.is_zero() {
            return Ok(true);
        }
        self.ensure(x.degree())?;
        let c = &self.comp[x.degree()];
        Ok(c.span.contains(&x.coordinates(&c.words)))
    }

    /// Reduces `x` modulo the ideal's component at its degree.
    pub fn reduce(&mut self, x: &LieElement) -> Result<LieElement> {
        self.ensure(x.degree())?;
        let c = &self.comp[x.degree()];
        let mut v = x.coordinates(&c.words);
        c.span.reduce(&mut v);
        let terms: BTreeMap<Word, BigRational> = c
            .words
            .iter()
            .cloned()
            .zip(v)
            .filter(|(_, x)| !num::Zero::is_zero(x))
            .collect();
        Ok(LieElement::from_coordinates(x.degree().clone(), terms))
    }

    fn ensure(&mut self, d: &Weight) -> Result<()> {
        if self.comp.contains_key(d) {
            return Ok(());
        }
        if d.height() > self.height_limit as i64 {
            return Err(Error::ResourceBound(format!(
                "ideal component at height {} exceeds the limit {}",
                d.height(),
                self.height_limit
            )));
        }
        let set_len = self.pres.set.len();
        let mut lower: Vec<(usize, Weight)> = Vec::new();
        for g in 0..set_len {
            let rest = d.clone() - self.pres.set.degree(g).clone();
            if rest.coords().iter().any(|&c| c < 0) || rest.is_zero() {
                continue;
            }
            self.ensure(&rest)?;
            lower.push((g, rest));
        }
        let mut rows: Vec<LieElement> =
            self.pres.rels.iter().filter(|r| r.degree() == d).cloned().collect();
        for (g, rest) in lower {
            let gen = LieElement::generator(&self.pres.set, g);
            for e in &self.comp[&rest].span_elems {
                rows.push(bracket(&gen, e));
            }
        }
        let words = self.pres.set.lyndon_basis(d);
        let mut span = EchelonBasis::new(words.len());
        let mut span_elems = Vec::new();
        for r in rows {
            if !r.is_zero() && span.insert(r.coordinates(&words)) {
                span_elems.push(r);
            }
        }
        self.comp.insert(d.clone(), Component { words, span, span_elems });
        Ok(())
    }
}
