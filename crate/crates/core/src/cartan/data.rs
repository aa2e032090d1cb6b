//! Construction of affine Cartan matrices and the derived structure
//! constants: symmetrizers, the null root, loop periods, and the finite
//! root system of the underlying diagram.

use num::rational::BigRational;
use num::{BigInt, One, Signed, Zero};
use std::collections::BTreeSet;

use super::types::{AffineType, Series};
use super::weight::Weight;
use crate::{Error, Result};

/// An affine Cartan matrix together with everything derived from it.
///
/// Nodes are indexed `0..=n` with 0 the affine node; `n = finite_rank()`.
/// The convention is `a[i][j] = 2 (alpha_i | alpha_j) / (alpha_i | alpha_i)`,
/// so `s_i(alpha_j) = alpha_j - a[i][j] alpha_i` and `d_i a[i][j]` is
/// symmetric.
#[derive(Clone, Debug)]
pub struct CartanData {
    t: AffineType,
    n: usize,
    a: Vec<Vec<i64>>,
    d: Vec<i64>,
    d_tilde: Vec<i64>,
    delta: Vec<i64>,
    phi0: Vec<Weight>,
    theta: Weight,
}

/// Builds the Cartan data for an affine type.
///
/// Untwisted matrices are assembled from the finite diagram and its highest
/// root; twisted matrices come from fixed per-family tables. The symmetrizer
/// and the null root are then recomputed from the matrix itself, so the
/// tables are cross-checked on every construction.
pub fn build_cartan(t: AffineType) -> Result<CartanData> {
    t.validate()?;
    let n = t.finite_rank();
    let a = affine_matrix(t);
    debug_assert_eq!(a.len(), n + 1);

    let d = symmetrizer(&a)?;
    let delta = null_root(&a)?;
    assert_eq!(delta[0], 1, "build_cartan: affine mark of {t} is not 1");

    let d_tilde: Vec<i64> = if t.twist == 1 || t.is_a2n_2() {
        vec![1; n + 1]
    } else {
        d.clone()
    };

    let phi0 = finite_roots(&a, n);
    let theta = highest_root(&phi0);

    Ok(CartanData { t, n, a, d, d_tilde, delta, phi0, theta })
}

impl CartanData {
    pub fn affine_type(&self) -> AffineType {
        self.t
    }

    /// Rank of the finite diagram; the affine diagram has `n + 1` nodes.
    pub fn finite_rank(&self) -> usize {
        self.n
    }

    /// Number of nodes in the affine diagram, `n + 1`.
    pub fn size(&self) -> usize {
        self.n + 1
    }

    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.a
    }

    /// The finite Cartan matrix (rows and columns `1..=n`).
    pub fn finite_cartan_matrix(&self) -> Vec<Vec<i64>> {
        (1..=self.n)
            .map(|i| (1..=self.n).map(|j| self.a[i][j]).collect())
            .collect()
    }

    /// Symmetrizer entry `d_i = (alpha_i | alpha_i) / 2`, normalized so the
    /// minimum over the diagram is 1.
    pub fn d(&self, i: usize) -> i64 {
        self.d[i]
    }

    /// Loop period of node `i`: the generator `x_{i,r}` exists exactly when
    /// this divides `r`. Equal to 1 on every node for untwisted types and
    /// for `A_{2n}^(2)`, and to `d_i` otherwise.
    pub fn d_tilde(&self, i: usize) -> i64 {
        self.d_tilde[i]
    }

    /// True when the pair `(i, r)` indexes an actual generator.
    pub fn is_integral_pair(&self, i: usize, r: i64) -> bool {
        r % self.d_tilde[i] == 0
    }

    /// Marks of the null root: `delta = sum delta_marks[i] * alpha_i`, the
    /// primitive positive kernel vector of the Cartan matrix.
    pub fn delta_marks(&self) -> &[i64] {
        &self.delta
    }

    pub fn delta(&self) -> Weight {
        Weight::from_coords(self.delta.clone())
    }

    /// Splits `w` as `finite + level * delta` with `finite` supported on the
    /// finite nodes. The split is exact because the affine mark is 1.
    pub fn level_and_finite_part(&self, w: &Weight) -> (i64, Weight) {
        assert_eq!(w.len(), self.size(), "level_and_finite_part: wrong length");
        let level = w.coord(0);
        let finite = w - &self.delta().scaled(level);
        debug_assert_eq!(finite.coord(0), 0);
        (level, finite)
    }

    /// The invariant form `(a | b) = sum a_i d_i a[i][j] b_j`.
    pub fn bilinear(&self, a: &Weight, b: &Weight) -> i64 {
        assert_eq!(a.len(), self.size(), "bilinear: wrong length");
        assert_eq!(b.len(), self.size(), "bilinear: wrong length");
        let mut acc = 0;
        for i in 0..self.size() {
            if a.coord(i) == 0 {
                continue;
            }
            for j in 0..self.size() {
                acc += a.coord(i) * self.d[i] * self.a[i][j] * b.coord(j);
            }
        }
        acc
    }

    /// Half the squared length `(w | w) / 2`; for a finite root this is the
    /// symmetrizer value of its orbit.
    pub fn norm_half(&self, w: &Weight) -> i64 {
        let n2 = self.bilinear(w, w);
        debug_assert_eq!(n2 % 2, 0);
        n2 / 2
    }

    /// `s_i(w) = w - <w, alpha_i^vee> alpha_i`, the simple reflection.
    pub fn simple_reflection(&self, i: usize, w: &Weight) -> Weight {
        let pairing: i64 = (0..self.size()).map(|j| self.a[i][j] * w.coord(j)).sum();
        let mut coords = w.coords().to_vec();
        coords[i] -= pairing;
        Weight::from_coords(coords)
    }

    /// All roots of the finite diagram (both signs), as level-0 weights,
    /// sorted by (height, coordinates).
    pub fn phi0(&self) -> &[Weight] {
        &self.phi0
    }

    /// The positive finite roots only.
    pub fn phi0_positive(&self) -> Vec<Weight> {
        self.phi0.iter().filter(|r| r.is_positive()).cloned().collect()
    }

    /// The highest root of the finite diagram.
    pub fn theta(&self) -> &Weight {
        &self.theta
    }
}

/// The affine Cartan matrix for `t`, nodes `0..=n`.
fn affine_matrix(t: AffineType) -> Vec<Vec<i64>> {
    let n = t.finite_rank();
    match (t.twist, t.series) {
        (1, _) => untwisted_matrix(t.series, n),
        (2, Series::A) if t.is_a2n_2() => {
            // Finite part B_n with node n short; the affine node carries the
            // quadruple-laced end (double for n >= 2).
            let mut a = blank(n + 1);
            if n == 1 {
                a[0][1] = -1;
                a[1][0] = -4;
            } else {
                a[0][1] = -1;
                a[1][0] = -2;
                for i in 1..n - 1 {
                    link(&mut a, i, i + 1);
                }
                a[n - 1][n] = -1;
                a[n][n - 1] = -2;
            }
            a
        }
        (2, Series::A) => {
            // A_{2n-1}^(2): finite part C_n (node n long), nodes 0 and 1
            // both attached to node 2. For n = 2 the fork collapses onto
            // the long node.
            let mut a = blank(n + 1);
            if n == 2 {
                a[0][2] = -2;
                a[2][0] = -1;
                a[1][2] = -2;
                a[2][1] = -1;
            } else {
                link(&mut a, 0, 2);
                link(&mut a, 1, 2);
                for i in 2..n - 1 {
                    link(&mut a, i, i + 1);
                }
                a[n - 1][n] = -2;
                a[n][n - 1] = -1;
            }
            a
        }
        (2, Series::D) => {
            // D_{n+1}^(2): a chain with both end nodes short.
            let mut a = blank(n + 1);
            a[0][1] = -2;
            a[1][0] = -1;
            for i in 1..n - 1 {
                link(&mut a, i, i + 1);
            }
            a[n - 1][n] = -1;
            a[n][n - 1] = -2;
            a
        }
        (2, Series::E) => vec![
            vec![2, -1, 0, 0, 0],
            vec![-1, 2, -1, 0, 0],
            vec![0, -1, 2, -2, 0],
            vec![0, 0, -1, 2, -1],
            vec![0, 0, 0, -1, 2],
        ],
        (3, Series::D) => vec![vec![2, -1, 0], vec![-1, 2, -3], vec![0, -1, 2]],
        _ => unreachable!("validated type"),
    }
}

/// Builds `X_n^(1)` from the finite matrix: the affine row and column pair
/// the other simple roots against the highest root.
fn untwisted_matrix(series: Series, n: usize) -> Vec<Vec<i64>> {
    let fin = finite_matrix(series, n);
    let fin_d = symmetrizer(&fin).expect("finite Cartan matrix is symmetrizable");
    let roots = finite_roots_indexed(&fin);
    let theta = highest_root(&roots);

    // (theta | alpha_j) in the finite normalization, j running 0-indexed.
    let pair = |j: usize| -> i64 {
        (0..n).map(|i| theta.coord(i) * fin_d[i] * fin[i][j]).sum()
    };
    let theta_norm: i64 = (0..n).map(|j| theta.coord(j) * pair(j)).sum();

    let mut a = blank(n + 1);
    for i in 0..n {
        for j in 0..n {
            a[i + 1][j + 1] = fin[i][j];
        }
    }
    for j in 0..n {
        let p = pair(j);
        a[0][j + 1] = -2 * p / theta_norm;
        a[j + 1][0] = -2 * p / (2 * fin_d[j]);
    }
    a
}

/// Finite Cartan matrices, nodes 0-indexed `0..n`.
pub(crate) fn finite_matrix(series: Series, n: usize) -> Vec<Vec<i64>> {
    let mut a = blank(n);
    match series {
        Series::A => {
            for i in 0..n.saturating_sub(1) {
                link(&mut a, i, i + 1);
            }
        }
        Series::B => {
            // Last node short.
            for i in 0..n - 1 {
                link(&mut a, i, i + 1);
            }
            a[n - 1][n - 2] = -2;
        }
        Series::C => {
            // Last node long.
            for i in 0..n - 1 {
                link(&mut a, i, i + 1);
            }
            a[n - 2][n - 1] = -2;
        }
        Series::D => {
            // Chain 0..n-3 with both of n-2, n-1 attached to n-3.
            for i in 0..n - 3 {
                link(&mut a, i, i + 1);
            }
            link(&mut a, n - 3, n - 2);
            link(&mut a, n - 3, n - 1);
        }
        Series::E => {
            // Chain 0-2-3-4-.. with node 1 hanging off node 3.
            link(&mut a, 0, 2);
            link(&mut a, 1, 3);
            for i in 2..n - 1 {
                link(&mut a, i, i + 1);
            }
        }
        Series::F => {
            link(&mut a, 0, 1);
            link(&mut a, 2, 3);
            a[1][2] = -1;
            a[2][1] = -2;
        }
        Series::G => {
            a[0][1] = -3;
            a[1][0] = -1;
        }
    }
    a
}

fn blank(size: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0; size]; size];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    a
}

fn link(a: &mut [Vec<i64>], i: usize, j: usize) {
    a[i][j] = -1;
    a[j][i] = -1;
}

/// Positive integer diagonal `d` with `d_i a[i][j] = d_j a[j][i]`, gcd 1.
///
/// Fails if the matrix is not symmetrizable or the diagram is disconnected.
pub(crate) fn symmetrizer(a: &[Vec<i64>]) -> Result<Vec<i64>> {
    let size = a.len();
    let mut x: Vec<Option<BigRational>> = vec![None; size];
    x[0] = Some(BigRational::one());
    let mut queue = vec![0usize];
    while let Some(i) = queue.pop() {
        let xi = x[i].clone().expect("queued node has a value");
        for j in 0..size {
            if i == j || a[i][j] == 0 {
                continue;
            }
            let ratio = BigRational::new(BigInt::from(a[i][j]), BigInt::from(a[j][i]));
            let xj = &xi * ratio;
            match &x[j] {
                None => {
                    x[j] = Some(xj);
                    queue.push(j);
                }
                Some(prev) => {
                    if *prev != xj {
                        return Err(Error::BadType("matrix is not symmetrizable".into()));
                    }
                }
            }
        }
    }
    if x.iter().any(|v| v.is_none()) {
        return Err(Error::BadType("diagram is disconnected".into()));
    }
    let vals: Vec<BigRational> = x.into_iter().map(|v| v.unwrap()).collect();
    let ints = scale_to_primitive_integers(&vals);
    assert_eq!(
        *ints.iter().min().unwrap(),
        1,
        "symmetrizer: normalization did not reach minimum 1"
    );
    for i in 0..size {
        for j in 0..size {
            assert_eq!(ints[i] * a[i][j], ints[j] * a[j][i], "symmetrizer: check failed");
        }
    }
    Ok(ints)
}

/// The primitive positive integer kernel vector of `a`; errors unless the
/// kernel is exactly one-dimensional.
fn null_root(a: &[Vec<i64>]) -> Result<Vec<i64>> {
    let size = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .map(|row| row.iter().map(|&v| BigRational::from(BigInt::from(v))).collect())
        .collect();

    // Row-reduce, tracking pivot columns.
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..size {
        let Some(p) = (row..size).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for v in m[row].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..size {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..size {
                    let delta = &f * &m[row][c];
                    m[r][c] = &m[r][c] - delta;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
    }
    if pivot_cols.len() != size - 1 {
        return Err(Error::BadType(format!(
            "matrix has corank {}, expected 1",
            size - pivot_cols.len()
        )));
    }

    let free_col = (0..size).find(|c| !pivot_cols.contains(c)).unwrap();
    let mut kernel = vec![BigRational::zero(); size];
    kernel[free_col] = BigRational::one();
    for (r, &pc) in pivot_cols.iter().enumerate() {
        kernel[pc] = -m[r][free_col].clone();
    }

    let mut ints = scale_to_primitive_integers(&kernel);
    if ints.iter().any(|&v| v < 0) {
        for v in ints.iter_mut() {
            *v = -*v;
        }
    }
    assert!(ints.iter().all(|&v| v > 0), "null_root: kernel vector not positive");
    Ok(ints)
}

/// Scales a rational vector to integers with gcd 1, preserving signs.
fn scale_to_primitive_integers(vals: &[BigRational]) -> Vec<i64> {
    let mut lcm = BigInt::one();
    for v in vals {
        lcm = num::integer::lcm(lcm, v.denom().abs());
    }
    let scaled: Vec<BigInt> = vals.iter().map(|v| (v * &lcm).to_integer()).collect();
    let mut gcd = BigInt::zero();
    for v in &scaled {
        gcd = num::integer::gcd(gcd, v.abs());
    }
    assert!(!gcd.is_zero(), "scale_to_primitive_integers: zero vector");
    scaled
        .iter()
        .map(|v| {
            let q = v / &gcd;
            i64::try_from(&q).expect("structure constants fit in i64")
        })
        .collect()
}

/// Orbit of the simple roots under all simple reflections, for an `n`-node
/// matrix with weights indexed over those same `n` nodes. Sorted by height,
/// then coordinates; positive and negative roots both included.
pub(crate) fn finite_roots_indexed(a: &[Vec<i64>]) -> Vec<Weight> {
    let n = a.len();
    let reflect = |i: usize, w: &Weight| -> Weight {
        let pairing: i64 = (0..n).map(|j| a[i][j] * w.coord(j)).sum();
        let mut coords = w.coords().to_vec();
        coords[i] -= pairing;
        Weight::from_coords(coords)
    };
    let mut seen: BTreeSet<Weight> = (0..n).map(|i| Weight::simple(i, n)).collect();
    let mut frontier: Vec<Weight> = seen.iter().cloned().collect();
    while let Some(w) = frontier.pop() {
        for i in 0..n {
            let r = reflect(i, &w);
            if seen.insert(r.clone()) {
                frontier.push(r);
            }
        }
        assert!(seen.len() <= 480, "finite_roots_indexed: closure did not stabilize");
    }
    let mut out: Vec<Weight> = seen.into_iter().collect();
    out.sort_by_key(|w| (w.height(), w.coords().to_vec()));
    out
}

/// Roots of the finite sub-diagram of an affine matrix, returned as
/// full-length level-0 weights.
fn finite_roots(a: &[Vec<i64>], n: usize) -> Vec<Weight> {
    let fin: Vec<Vec<i64>> = (1..=n).map(|i| (1..=n).map(|j| a[i][j]).collect()).collect();
    finite_roots_indexed(&fin)
        .into_iter()
        .map(|w| {
            let mut coords = vec![0; n + 1];
            coords[1..].copy_from_slice(w.coords());
            Weight::from_coords(coords)
        })
        .collect()
}

/// The unique root of maximal height.
fn highest_root(roots: &[Weight]) -> Weight {
    let max_h = roots.iter().map(|r| r.height()).max().expect("nonempty root set");
    let mut at_max = roots.iter().filter(|r| r.height() == max_h);
    let theta = at_max.next().expect("nonempty root set").clone();
    assert!(at_max.next().is_none(), "highest_root: maximal height not unique");
    theta
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cd(s: &str) -> CartanData {
        build_cartan(s.parse().unwrap()).unwrap()
    }

    // ---- Fixed matrices ----

    #[test]
    fn rank_one_untwisted_matrix() {
        let c = cd("A1~1");
        assert_eq!(c.cartan_matrix(), &[vec![2, -2], vec![-2, 2]]);
        assert_eq!(c.delta_marks(), &[1, 1]);
        assert_eq!((c.d(0), c.d(1)), (1, 1));
    }

    #[test]
    fn a2_twisted_matrix() {
        let c = cd("A2~2");
        assert_eq!(c.cartan_matrix(), &[vec![2, -1], vec![-4, 2]]);
        assert_eq!(c.delta_marks(), &[1, 2]);
        assert_eq!((c.d(0), c.d(1)), (4, 1));
        assert_eq!((c.d_tilde(0), c.d_tilde(1)), (1, 1));
    }

    #[test]
    fn a4_twisted_matrix() {
        let c = cd("A4~2");
        assert_eq!(
            c.cartan_matrix(),
            &[vec![2, -1, 0], vec![-2, 2, -1], vec![0, -2, 2]]
        );
        assert_eq!(c.delta_marks(), &[1, 2, 2]);
        assert_eq!(c.d, vec![4, 2, 1]);
        assert_eq!(c.d_tilde, vec![1, 1, 1]);
    }

    #[test]
    fn d4_triple_twist_matrix() {
        let c = cd("D4~3");
        assert_eq!(c.cartan_matrix(), &[vec![2, -1, 0], vec![-1, 2, -3], vec![0, -1, 2]]);
        assert_eq!(c.delta_marks(), &[1, 2, 1]);
        assert_eq!(c.d, vec![1, 1, 3]);
        assert_eq!(c.d_tilde, vec![1, 1, 3]);
    }

    #[test]
    fn c2_untwisted_matrix() {
        let c = cd("C2~1");
        assert_eq!(
            c.cartan_matrix(),
            &[vec![2, -1, 0], vec![-2, 2, -2], vec![0, -1, 2]]
        );
        assert_eq!(c.delta_marks(), &[1, 2, 1]);
        assert_eq!(c.d, vec![2, 1, 2]);
    }

    #[test]
    fn a3_twisted_matrix() {
        let c = cd("A3~2");
        assert_eq!(
            c.cartan_matrix(),
            &[vec![2, 0, -2], vec![0, 2, -2], vec![-1, -1, 2]]
        );
        assert_eq!(c.delta_marks(), &[1, 1, 1]);
        assert_eq!(c.d, vec![1, 1, 2]);
        assert_eq!(c.d_tilde, vec![1, 1, 2]);
    }

    #[test]
    fn g2_untwisted_attaches_to_long_node() {
        let c = cd("G2~1");
        assert_eq!(
            c.cartan_matrix(),
            &[vec![2, 0, -1], vec![0, 2, -3], vec![-1, -1, 2]]
        );
        assert_eq!(c.delta_marks(), &[1, 3, 2]);
        assert_eq!(c.d, vec![3, 1, 3]);
    }

    #[test]
    fn e6_twisted_matrix() {
        let c = cd("E6~2");
        assert_eq!(c.delta_marks(), &[1, 2, 3, 2, 1]);
        assert_eq!(c.d, vec![1, 1, 1, 2, 2]);
        assert_eq!(c.d_tilde, vec![1, 1, 1, 2, 2]);
    }

    #[test]
    fn f4_untwisted_marks() {
        let c = cd("F4~1");
        assert_eq!(c.delta_marks(), &[1, 2, 3, 4, 2]);
        assert_eq!(c.d, vec![2, 2, 2, 1, 1]);
    }

    // ---- Derived structure ----

    #[test]
    fn form_vanishes_on_delta_everywhere() {
        for t in AffineType::registry() {
            let c = build_cartan(t).unwrap();
            let delta = c.delta();
            for i in 0..c.size() {
                let alpha = Weight::simple(i, c.size());
                assert_eq!(c.bilinear(&delta, &alpha), 0, "(delta|a{i}) != 0 in {t}");
            }
            assert_eq!(c.bilinear(&delta, &delta), 0);
        }
    }

    #[test]
    fn level_split_is_exact() {
        let c = cd("A2~2");
        let w = Weight::from_coords(vec![3, 1]);
        let (level, fin) = c.level_and_finite_part(&w);
        assert_eq!(level, 3);
        assert_eq!(fin.coords(), &[0, -5]);
        assert_eq!(&fin + &c.delta().scaled(level), w);
    }

    #[test]
    fn finite_root_counts() {
        for (s, count) in [
            ("A1~1", 2),
            ("A2~1", 6),
            ("C2~1", 8),
            ("A2~2", 2),
            ("A4~2", 8),
            ("D4~3", 12),
            ("G2~1", 12),
            ("F4~1", 48),
            ("E6~1", 72),
        ] {
            assert_eq!(cd(s).phi0().len(), count, "root count for {s}");
        }
    }

    #[test]
    fn theta_of_common_types() {
        assert_eq!(cd("A1~1").theta().coords(), &[0, 1]);
        assert_eq!(cd("C2~1").theta().coords(), &[0, 2, 1]);
        assert_eq!(cd("G2~1").theta().coords(), &[0, 3, 2]);
        assert_eq!(cd("D4~3").theta().coords(), &[0, 3, 2]);
    }

    #[test]
    fn norms_in_a2_twisted() {
        let c = cd("A2~2");
        let a1 = Weight::simple(1, 2);
        assert_eq!(c.norm_half(&a1), 1);
        assert_eq!(c.norm_half(&a1.scaled(2)), 4);
        let a0 = Weight::simple(0, 2);
        assert_eq!(c.norm_half(&a0), 4);
    }

    #[test]
    fn simple_reflection_matches_matrix_row() {
        let c = cd("C2~1");
        let a1 = Weight::simple(1, 3);
        let r = c.simple_reflection(2, &a1);
        // s_2(a1) = a1 - a[2][1] a2 = a1 + a2.
        assert_eq!(r.coords(), &[0, 1, 1]);
        let fixed = c.simple_reflection(2, &r);
        assert_eq!(fixed, a1);
    }

    #[test]
    fn integral_pairs_follow_loop_periods() {
        let c = cd("D4~3");
        assert!(c.is_integral_pair(1, 5));
        assert!(c.is_integral_pair(2, 0));
        assert!(c.is_integral_pair(2, -3));
        assert!(!c.is_integral_pair(2, 1));
        assert!(!c.is_integral_pair(2, -4));
    }
}
