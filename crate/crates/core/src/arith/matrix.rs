//! Sparse exact matrices and fraction-free rank computation.
//!
//! Matrices store only nonzero entries, keyed by `(row, col)`. Entries are
//! [`Scalar`] values; a single matrix must stay within one scalar kind (and
//! one cyclotomic order), which `exact_rank` enforces. Ranks are computed by
//! Bareiss elimination after clearing denominators, so no floating point or
//! probabilistic shortcut is ever involved.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, Integer, One, Zero};

use super::cyclotomic::Cyclotomic;
use super::laurent::LaurentPoly;
use super::ratfun::RationalFunction;
use crate::{Error, Result};

/// A scalar entry: rational, rational function in `q`, or cyclotomic.
#[derive(Clone, PartialEq, Debug)]
pub enum Scalar {
    Rat(BigRational),
    RatFn(RationalFunction),
    Cyc(Cyclotomic),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(x) => Zero::is_zero(x),
            Scalar::RatFn(x) => x.is_zero(),
            Scalar::Cyc(x) => x.is_zero(),
        }
    }

    /// A short tag used in mixed-kind error messages.
    fn kind(&self) -> String {
        match self {
            Scalar::Rat(_) => "rational".to_string(),
            Scalar::RatFn(_) => "rational function".to_string(),
            Scalar::Cyc(x) => format!("cyclotomic(order {})", x.order()),
        }
    }
}

impl From<BigRational> for Scalar {
    fn from(x: BigRational) -> Self {
        Scalar::Rat(x)
    }
}

impl From<RationalFunction> for Scalar {
    fn from(x: RationalFunction) -> Self {
        Scalar::RatFn(x)
    }
}

impl From<LaurentPoly> for Scalar {
    fn from(x: LaurentPoly) -> Self {
        Scalar::RatFn(RationalFunction::from_laurent(x))
    }
}

impl From<Cyclotomic> for Scalar {
    fn from(x: Cyclotomic) -> Self {
        Scalar::Cyc(x)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(x) => write!(f, "{}", x),
            Scalar::RatFn(x) => write!(f, "{}", x),
            Scalar::Cyc(x) => write!(f, "{}", x),
        }
    }
}

/// A sparse matrix over one of the exact scalar kinds.
#[derive(Clone, Debug)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.len()
    }

    /// Sets entry `(i, j)`; storing a zero removes any existing entry.
    ///
    /// Panics when the position is out of range.
    pub fn set<S: Into<Scalar>>(&mut self, i: usize, j: usize, value: S) {
        assert!(i < self.rows && j < self.cols, "ExactMatrix::set: index out of range");
        let value = value.into();
        if value.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), value);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&Scalar> {
        self.entries.get(&(i, j))
    }

    /// Builds a matrix from dense rows of scalars.
    pub fn from_rows<S: Into<Scalar> + Clone>(rows: &[Vec<S>]) -> Self {
        let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
        let mut m = ExactMatrix::new(rows.len(), ncols);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    /// Rank over the fraction field of the entries, by fraction-free
    /// elimination. The result does not depend on row or column order.
    ///
    /// Fails with [`Error::MixedScalar`] when entries mix scalar kinds or
    /// cyclotomic orders.
    pub fn exact_rank(&self) -> Result<usize> {
        let mut kind: Option<&Scalar> = None;
        for v in self.entries.values() {
            match kind {
                None => kind = Some(v),
                Some(k) => {
                    let compatible = match (k, v) {
                        (Scalar::Rat(_), Scalar::Rat(_)) => true,
                        (Scalar::RatFn(_), Scalar::RatFn(_)) => true,
                        (Scalar::Cyc(a), Scalar::Cyc(b)) => a.order() == b.order(),
                        _ => false,
                    };
                    if !compatible {
                        return Err(Error::MixedScalar(format!(
                            "{} vs {}",
                            k.kind(),
                            v.kind()
                        )));
                    }
                }
            }
        }
        let Some(kind) = kind else { return Ok(0) };
        match kind {
            Scalar::Rat(_) => {
                let rows = self.dense_rows(|s| match s {
                    Scalar::Rat(x) => x.clone(),
                    _ => unreachable!(),
                });
                Ok(bareiss_rank(clear_rational_rows(rows)))
            }
            Scalar::RatFn(_) => {
                let rows = self.dense_rows(|s| match s {
                    Scalar::RatFn(x) => x.clone(),
                    _ => unreachable!(),
                });
                Ok(bareiss_rank(clear_ratfn_rows(rows)))
            }
            Scalar::Cyc(_) => {
                let rows = self.dense_rows(|s| match s {
                    Scalar::Cyc(x) => x.clone(),
                    _ => unreachable!(),
                });
                Ok(bareiss_rank(rows))
            }
        }
    }

    fn dense_rows<T: Clone, F: Fn(&Scalar) -> T>(&self, f: F) -> Vec<Vec<T>>
    where
        T: ZeroLike,
    {
        let mut rows = vec![vec![T::zero_like(); self.cols]; self.rows];
        for ((i, j), v) in &self.entries {
            rows[*i][*j] = f(v);
        }
        rows
    }
}

/// Internal helper so `dense_rows` can fill untouched positions.
trait ZeroLike {
    fn zero_like() -> Self;
}

impl ZeroLike for BigRational {
    fn zero_like() -> Self {
        <BigRational as Zero>::zero()
    }
}

impl ZeroLike for RationalFunction {
    fn zero_like() -> Self {
        RationalFunction::zero()
    }
}

impl ZeroLike for Cyclotomic {
    fn zero_like() -> Self {
        // The order is patched by the caller before elimination.
        Cyclotomic::zero(1)
    }
}

// ---- Fraction-free elimination ----

/// The operations Bareiss elimination needs: an integral domain where the
/// algorithm's divisions are known to be exact.
pub trait PivotRing: Clone {
    fn is_zero(&self) -> bool;
    fn mul(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    /// Division that the caller guarantees to be exact; panics otherwise.
    fn exact_div(&self, rhs: &Self) -> Self;
}

impl PivotRing for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        let (q, r) = self.div_rem(rhs);
        assert!(Zero::is_zero(&r), "PivotRing<BigInt>: non-exact division");
        q
    }
}

impl PivotRing for LaurentPoly {
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        LaurentPoly::exact_div(self, rhs).expect("PivotRing<LaurentPoly>: non-exact division")
    }
}

impl PivotRing for Cyclotomic {
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

impl PivotRing for BigRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

/// Rank of a dense row list by Bareiss fraction-free elimination.
///
/// Pivots are chosen deterministically (lowest row, then lowest column); the
/// divisions prescribed by the algorithm are exact in any integral domain, so
/// the result is the rank over the fraction field.
pub fn bareiss_rank<T: PivotRing>(mut rows: Vec<Vec<T>>) -> usize {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev_pivot: Option<T> = None;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let pivot = rows[rank][col].clone();
        let zero = pivot.sub(&pivot);
        // Update every remaining row, including those with a zero entry in
        // the pivot column: the rescale by pivot / previous pivot is what
        // keeps later divisions exact.
        for i in rank + 1..nrows {
            let head = rows[i][col].clone();
            for j in col + 1..ncols {
                let mut t = rows[i][j].mul(&pivot).sub(&head.mul(&rows[rank][j]));
                if let Some(p) = &prev_pivot {
                    t = t.exact_div(p);
                }
                rows[i][j] = t;
            }
            rows[i][col] = zero.clone();
        }
        prev_pivot = Some(pivot);
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Scales each row by the least common multiple of its denominators, mapping
/// rational rows to integer rows with the same row space.
pub fn clear_rational_rows(rows: Vec<Vec<BigRational>>) -> Vec<Vec<BigInt>> {
    rows.into_iter()
        .map(|row| {
            let mut l = BigInt::one();
            for x in &row {
                l = l.lcm(x.denom());
            }
            row.into_iter()
                .map(|x| {
                    let scaled = x * BigRational::from_integer(l.clone());
                    debug_assert!(scaled.is_integer());
                    scaled.to_integer()
                })
                .collect()
        })
        .collect()
}

/// Scales each row by the least common multiple of its denominators, mapping
/// rational-function rows to Laurent-polynomial rows with the same row space.
pub fn clear_ratfn_rows(rows: Vec<Vec<RationalFunction>>) -> Vec<Vec<LaurentPoly>> {
    rows.into_iter()
        .map(|row| {
            let mut l = LaurentPoly::one();
            for x in &row {
                let d = x.denominator();
                let g = l.gcd(d);
                l = &l * &d.exact_div(&g).expect("clear_ratfn_rows: gcd must divide");
            }
            row.into_iter()
                .map(|x| {
                    let extra = l
                        .exact_div(x.denominator())
                        .expect("clear_ratfn_rows: lcm not divisible by denominator");
                    x.numerator() * &extra
                })
                .collect()
        })
        .collect()
}

// ---- Echelon bases over a field ----

/// Field operations for incremental row reduction.
pub trait FieldOps: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn div(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self {
        Self::zero().sub(self)
    }
}

impl FieldOps for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

impl FieldOps for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

impl FieldOps for Cyclotomic {
    fn zero() -> Self {
        // Order 1 zeros are only ever produced and compared via is_zero;
        // a basis over a higher order never mixes them into arithmetic.
        Cyclotomic::zero(1)
    }
    fn one() -> Self {
        Cyclotomic::one(1)
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

/// An incrementally built row-echelon basis of a subspace of `F^cols`.
///
/// Supports membership tests and, when tracking is enabled, expressing a
/// vector as an explicit combination of the vectors previously inserted.
pub struct EchelonBasis<F: FieldOps> {
    cols: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
    combos: Option<Vec<Vec<(usize, F)>>>,
    inserted: usize,
}

impl<F: FieldOps> EchelonBasis<F> {
    pub fn new(cols: usize) -> Self {
        EchelonBasis { cols, rows: Vec::new(), pivots: Vec::new(), combos: None, inserted: 0 }
    }

    /// Like [`EchelonBasis::new`] but records how each basis row was formed,
    /// enabling [`EchelonBasis::express`].
    pub fn with_tracking(cols: usize) -> Self {
        EchelonBasis { combos: Some(Vec::new()), ..EchelonBasis::new(cols) }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn inserted(&self) -> usize {
        self.inserted
    }

    /// Inserts a vector; returns `true` when it enlarged the span.
    pub fn insert(&mut self, mut v: Vec<F>) -> bool {
        assert_eq!(v.len(), self.cols, "EchelonBasis::insert: wrong vector length");
        let idx = self.inserted;
        self.inserted += 1;
        let mut combo: Vec<(usize, F)> = vec![(idx, F::one())];
        reduce_against(&self.pivots, &self.rows, self.combos.as_deref(), &mut v, &mut combo);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = v[p].clone();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = x.div(&lead);
            }
        }
        for (_, c) in combo.iter_mut() {
            *c = c.div(&lead);
        }
        // Keep rows sorted by pivot column so reduction sweeps once.
        let pos = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(pos, v);
        self.pivots.insert(pos, p);
        if let Some(combos) = &mut self.combos {
            combos.insert(pos, combo);
        }
        true
    }

    /// Reduces `v` against the basis in place.
    pub fn reduce(&self, v: &mut [F]) {
        let mut combo = Vec::new();
        reduce_against(&self.pivots, &self.rows, None, v, &mut combo);
    }

    pub fn contains(&self, v: &[F]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(F::is_zero)
    }

    /// Expresses `v` as a combination of the inserted vectors, returned as
    /// sparse `(insertion index, coefficient)` pairs. Requires tracking;
    /// `None` when `v` is outside the span.
    pub fn express(&self, v: &[F]) -> Option<Vec<(usize, F)>> {
        let combos = self.combos.as_deref().expect("EchelonBasis::express: tracking disabled");
        let mut w = v.to_vec();
        let mut combo: Vec<(usize, F)> = Vec::new();
        reduce_against(&self.pivots, &self.rows, Some(combos), &mut w, &mut combo);
        if w.iter().all(F::is_zero) {
            // reduce subtracted basis rows until v vanished, accumulating
            // the subtracted multiples; negate to express v itself.
            Some(combo.into_iter().map(|(i, c)| (i, c.neg())).collect())
        } else {
            None
        }
    }
}

/// Reduces `v` against echelon rows, optionally accumulating the applied
/// combination in terms of originally inserted vectors.
fn reduce_against<F: FieldOps>(
    pivots: &[usize],
    rows: &[Vec<F>],
    combos: Option<&[Vec<(usize, F)>]>,
    v: &mut [F],
    combo: &mut Vec<(usize, F)>,
) {
    for (r, &p) in pivots.iter().enumerate() {
        if v[p].is_zero() {
            continue;
        }
        let c = v[p].clone();
        for (j, x) in rows[r].iter().enumerate() {
            if !x.is_zero() {
                v[j] = v[j].sub(&c.mul(x));
            }
        }
        if let Some(combos) = combos {
            for (idx, coeff) in &combos[r] {
                merge_combo(combo, *idx, c.mul(coeff).neg());
            }
        }
    }
}

fn merge_combo<F: FieldOps>(combo: &mut Vec<(usize, F)>, idx: usize, c: F) {
    if c.is_zero() {
        return;
    }
    match combo.binary_search_by_key(&idx, |(i, _)| *i) {
        Ok(pos) => {
            let sum = combo[pos].1.add(&c);
            if sum.is_zero() {
                combo.remove(pos);
            } else {
                combo[pos].1 = sum;
            }
        }
        Err(pos) => combo.insert(pos, (idx, c)),
    }
}
