//! Weighted generator sets and elements of the free Lie algebra they span.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigRational, One, Zero};

use super::words::{
    assoc_add_scaled, commutator, expand_lyndon, lie_coordinates, lyndon_words_with_content,
    standard_split, Assoc, Letter, Word,
};
use crate::cartan::Weight;
use crate::{Error, Result};

/// An ordered alphabet of generators, each carrying a multidegree.
///
/// Degrees must have nonnegative coordinates and positive height, which
/// bounds word length by the height of any target degree and keeps every
/// graded component finite-dimensional.
#[derive(Clone)]
pub struct GeneratorSet {
    names: Vec<String>,
    degrees: Vec<Weight>,
}

impl GeneratorSet {
    pub fn new(gens: Vec<(String, Weight)>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::BadArgument("GeneratorSet::new: no generators".into()));
        }
        let width = gens[0].1.len();
        for (name, d) in &gens {
            if d.len() != width {
                return Err(Error::BadArgument(format!(
                    "GeneratorSet::new: degree width mismatch for {name}"
                )));
            }
            if d.coords().iter().any(|&c| c < 0) || d.height() < 1 {
                return Err(Error::BadArgument(format!(
                    "GeneratorSet::new: generator {name} needs a nonzero nonnegative degree"
                )));
            }
        }
        let (names, degrees) = gens.into_iter().unzip();
        Ok(GeneratorSet { names, degrees })
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn degree(&self, i: usize) -> &Weight {
        &self.degrees[i]
    }

    pub fn degree_width(&self) -> usize {
        self.degrees[0].len()
    }

    /// Degree of a word: the sum of its letter degrees.
    pub fn word_degree(&self, w: &[Letter]) -> Weight {
        let mut d = Weight::zero(self.degree_width());
        for &l in w {
            d = d + self.degrees[l as usize].clone();
        }
        d
    }

    /// All generator-multiplicity vectors whose degrees sum to `d`.
    fn contents(&self, d: &Weight) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut current = vec![0u32; self.len()];
        self.fill_contents(0, d.clone(), &mut current, &mut out);
        out
    }

    fn fill_contents(&self, from: usize, rest: Weight, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest.is_zero() {
            out.push(current.clone());
            return;
        }
        if from == self.len() {
            return;
        }
        let mut m = 0u32;
        let mut rest = rest;
        loop {
            current[from] = m;
            self.fill_contents(from + 1, rest.clone(), current, out);
            rest = rest - self.degrees[from].clone();
            if rest.coords().iter().any(|&c| c < 0) {
                break;
            }
            m += 1;
        }
        current[from] = 0;
    }

    /// The Lyndon-word basis of the free Lie algebra's component at `d`,
    /// sorted lexicographically.
    pub fn lyndon_basis(&self, d: &Weight) -> Vec<Word> {
        let mut out = Vec::new();
        for counts in self.contents(d) {
            out.extend(lyndon_words_with_content(&counts));
        }
        out.sort();
        out
    }

    /// Renders a word as its nested bracketing with generator names.
    pub fn word_string(&self, w: &[Letter]) -> String {
        if w.len() == 1 {
            return self.names[w[0] as usize].clone();
        }
        let k = standard_split(w);
        format!("[{}, {}]", self.word_string(&w[..k]), self.word_string(&w[k..]))
    }
}

/// A homogeneous element of the free Lie algebra, stored as coordinates in
/// the Lyndon basis of its degree component.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieElement {
    degree: Weight,
    terms: BTreeMap<Word, BigRational>,
}

impl LieElement {
    pub fn zero(degree: Weight) -> Self {
        LieElement { degree, terms: BTreeMap::new() }
    }

    pub fn generator(set: &GeneratorSet, i: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![i as Letter], BigRational::one());
        LieElement { degree: set.degree(i).clone(), terms }
    }

    /// Builds an element from Lyndon coordinates; words must be Lyndon and
    /// coefficients nonzero.
    pub fn from_coordinates(degree: Weight, terms: BTreeMap<Word, BigRational>) -> Self {
        debug_assert!(terms.keys().all(|w| super::words::is_lyndon(w)));
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        LieElement { degree, terms }
    }

    pub fn degree(&self) -> &Weight {
        &self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Word, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scaled(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return LieElement::zero(self.degree.clone());
        }
        let terms = self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect();
        LieElement { degree: self.degree.clone(), terms }
    }

    /// `self + c * rhs`; degrees must agree.
    pub fn add_scaled(&self, rhs: &LieElement, c: &BigRational) -> Result<Self> {
        if self.degree != rhs.degree {
            return Err(Error::BadArgument(format!(
                "LieElement::add_scaled: degrees {} and {} differ",
                self.degree, rhs.degree
            )));
        }
        let mut terms = self.terms.clone();
        for (w, x) in &rhs.terms {
            let v = terms.remove(w).unwrap_or_else(BigRational::zero) + c * x;
            if !v.is_zero() {
                terms.insert(w.clone(), v);
            }
        }
        Ok(LieElement { degree: self.degree.clone(), terms })
    }

    /// Expansion into the free associative algebra.
    pub fn to_assoc(&self) -> Assoc {
        let mut p = Assoc::new();
        for (w, c) in &self.terms {
            assoc_add_scaled(&mut p, &expand_lyndon(w), c);
        }
        p
    }

    /// Dense coordinates relative to a sorted Lyndon basis of the degree
    /// component; panics on a word outside the basis.
    pub fn coordinates(&self, basis: &[Word]) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); basis.len()];
        for (w, c) in &self.terms {
            let k = basis.binary_search(w).expect("LieElement::coordinates: word outside basis");
            v[k] = c.clone();
        }
        v
    }

    pub fn display_with<'a>(&'a self, set: &'a GeneratorSet) -> impl fmt::Display + 'a {
        DisplayIn { elem: self, set }
    }
}

/// Lie bracket of homogeneous elements, computed in the associative
/// envelope and re-expressed in the Lyndon basis.
pub fn bracket(a: &LieElement, b: &LieElement) -> LieElement {
    let degree = a.degree().clone() + b.degree().clone();
    let comm = commutator(&a.to_assoc(), &b.to_assoc());
    let coords = lie_coordinates(comm).expect("commutator of Lie elements is a Lie element");
    LieElement::from_coordinates(degree, coords)
}

struct DisplayIn<'a> {
    elem: &'a LieElement,
    set: &'a GeneratorSet,
}

impl fmt::Display for DisplayIn<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.elem.is_zero() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.elem.terms.iter().enumerate() {
            let (sign, mag) = if c < &BigRational::zero() { ("-", -c) } else { ("+", c.clone()) };
            if k == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "{}", self.set.word_string(w))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simple_set() -> GeneratorSet {
        GeneratorSet::new(vec![
            ("a".into(), Weight::from_coords(vec![1, 0])),
            ("b".into(), Weight::from_coords(vec![0, 1])),
        ])
        .unwrap()
    }

    // ---- Basis enumeration ----

    #[test]
    fn one_generator_squares_to_nothing() {
        let set = GeneratorSet::new(vec![("a".into(), Weight::from_coords(vec![1]))]).unwrap();
        assert_eq!(set.lyndon_basis(&Weight::from_coords(vec![1])).len(), 1);
        assert_eq!(set.lyndon_basis(&Weight::from_coords(vec![2])).len(), 0);
    }

    #[test]
    fn two_distinct_generators_bracket_once() {
        let set = simple_set();
        let basis = set.lyndon_basis(&Weight::from_coords(vec![1, 1]));
        assert_eq!(basis, vec![vec![0, 1]]);
    }

    #[test]
    fn repeated_degrees_enumerate_all_contents() {
        // Two generators of the same degree: the component at twice that
        // degree is spanned by the single mixed bracket.
        let set = GeneratorSet::new(vec![
            ("x".into(), Weight::from_coords(vec![1])),
            ("y".into(), Weight::from_coords(vec![1])),
        ])
        .unwrap();
        let basis = set.lyndon_basis(&Weight::from_coords(vec![2]));
        assert_eq!(basis, vec![vec![0, 1]]);
    }

    #[test]
    fn rejects_degenerate_generators() {
        assert!(GeneratorSet::new(vec![]).is_err());
        assert!(GeneratorSet::new(vec![("z".into(), Weight::zero(2))]).is_err());
        assert!(GeneratorSet::new(vec![("n".into(), Weight::from_coords(vec![-1, 2]))]).is_err());
    }

    // ---- Bracket algebra ----

    #[test]
    fn bracket_is_antisymmetric() {
        let set = simple_set();
        let a = LieElement::generator(&set, 0);
        let b = LieElement::generator(&set, 1);
        let ab = bracket(&a, &b);
        let ba = bracket(&b, &a);
        assert!(ab.add_scaled(&ba, &BigRational::one()).unwrap().is_zero());
        assert!(bracket(&a, &a).is_zero());
    }

    #[test]
    fn jacobi_holds_on_nested_triples() {
        let set = simple_set();
        let a = LieElement::generator(&set, 0);
        let b = LieElement::generator(&set, 1);
        let ab = bracket(&a, &b);
        let aab = bracket(&a, &ab);
        for (x, y, z) in [(&a, &b, &ab), (&a, &ab, &aab), (&b, &ab, &aab)] {
            let total = bracket(x, &bracket(y, z))
                .add_scaled(&bracket(y, &bracket(z, x)), &BigRational::one())
                .unwrap()
                .add_scaled(&bracket(z, &bracket(x, y)), &BigRational::one())
                .unwrap();
            assert!(total.is_zero(), "Jacobi fails");
        }
    }

    #[test]
    fn coordinates_round_trip() {
        let set = simple_set();
        let a = LieElement::generator(&set, 0);
        let b = LieElement::generator(&set, 1);
        let e = bracket(&a, &bracket(&a, &b));
        let basis = set.lyndon_basis(e.degree());
        let v = e.coordinates(&basis);
        assert_eq!(v.len(), basis.len());
        let rebuilt: BTreeMap<Word, BigRational> = basis
            .iter()
            .cloned()
            .zip(v)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        assert_eq!(LieElement::from_coordinates(e.degree().clone(), rebuilt), e);
    }

    #[test]
    fn display_shows_nested_brackets() {
        let set = simple_set();
        let a = LieElement::generator(&set, 0);
        let b = LieElement::generator(&set, 1);
        let e = bracket(&a, &bracket(&a, &b)).scaled(&BigRational::from_integer((-2).into()));
        assert_eq!(format!("{}", e.display_with(&set)), "-2*[a, [a, b]]");
    }
}
