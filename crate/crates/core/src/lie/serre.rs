//! Finite-dimensional simple Lie algebras built from Chevalley generators
//! and defining relations.
//!
//! The positive part is realized as the free Lie algebra on `e_1..e_n`
//! modulo the ideal of the defining relations, computed degreewise up to
//! one past the highest-root height; since the quotient is generated in
//! degree one, the verified vanishing of that top shell forces every
//! higher component to vanish as well. Root vectors are fixed by the
//! canonical decomposition `E_a = [e_i, E_{a - a_i}]` with the smallest
//! valid `i`, the negative side mirrors the positive one through the
//! involution `e_i -> -f_i`, and the mixed brackets follow by a Jacobi
//! recursion on total height. The finished table is checked for
//! antisymmetry, weight additivity, and the Jacobi identity on all basis
//! triples.

use std::collections::BTreeMap;

use num::{BigRational, One, Zero};

use super::element::{bracket, GeneratorSet, LieElement};
use super::ideal::{IdealSpan, Presentation};
use super::words::Word;
use crate::arith::EchelonBasis;
use crate::cartan::data::{finite_matrix, finite_roots_indexed, symmetrizer};
use crate::cartan::{Series, Weight};
use crate::{Error, Result};

/// Sparse vector over the algebra's basis: index to nonzero coefficient.
pub type SparseVec = BTreeMap<usize, BigRational>;

/// A finite simple Lie algebra with explicit structure constants.
///
/// The basis is `E_0..E_{p-1}` (root vectors for the positive roots in
/// height-then-lexicographic order), `h_0..h_{n-1}` (Cartan generators),
/// `F_0..F_{p-1}` (negative root vectors in the same root order), with
/// `p` the number of positive roots and `n` the rank.
pub struct FiniteLie {
    series: Series,
    rank: usize,
    a: Vec<Vec<i64>>,
    d: Vec<i64>,
    roots: Vec<Weight>,
    root_index: BTreeMap<Weight, usize>,
    parent: Vec<Option<(usize, usize)>>,
    table: Vec<Vec<SparseVec>>,
}

/// Builds the simple Lie algebra of the given finite type.
///
/// Supported at desk scale: A of rank 1 to 4, B and C of rank 2 to 4, D of
/// rank 3 to 4, and G_2. The F_4 shell one past its highest-root height is
/// far beyond the per-degree linear algebra this construction relies on,
/// so rank-4 F is refused alongside every rank above 4.
pub fn serre_construct(series: Series, rank: usize) -> Result<FiniteLie> {
    let supported = match series {
        Series::A => (1..=4).contains(&rank),
        Series::B | Series::C => (2..=4).contains(&rank),
        Series::D => (3..=4).contains(&rank),
        Series::G => rank == 2,
        Series::E | Series::F => false,
    };
    if !supported {
        return Err(Error::ResourceBound(format!(
            "serre_construct: type {}{rank} is outside the supported desk scale",
            series.letter()
        )));
    }
    let a = finite_matrix(series, rank);
    let d = symmetrizer(&a)?;
    let roots: Vec<Weight> =
        finite_roots_indexed(&a).into_iter().filter(Weight::is_positive).collect();
    let root_index: BTreeMap<Weight, usize> =
        roots.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
    let p = roots.len();
    let theta_height = roots.last().expect("nonempty root set").height();

    // Free Lie algebra on the positive Chevalley generators modulo the
    // defining relations (ad e_i)^{1 - a_ij} e_j.
    let set = GeneratorSet::new(
        (0..rank).map(|i| (format!("e{i}"), Weight::simple(i, rank))).collect(),
    )?;
    let mut rels = Vec::new();
    for i in 0..rank {
        for j in 0..rank {
            if i == j {
                continue;
            }
            let ei = LieElement::generator(&set, i);
            let mut r = LieElement::generator(&set, j);
            for _ in 0..(1 - a[i][j]) {
                r = bracket(&ei, &r);
            }
            rels.push(r);
        }
    }
    let mut span = IdealSpan::new(Presentation::new(set, rels)?)
        .with_height_limit(theta_height as usize + 1);

    // Every component up to one past the top height must match the root
    // multiplicities: one at each positive root, zero elsewhere.
    for degree in degrees_up_to(rank, theta_height + 1) {
        let dim = span.quotient_dim(&degree)?;
        let expected = usize::from(root_index.contains_key(&degree));
        assert_eq!(dim, expected, "serre_construct: component dimension at {degree}");
    }

    // Canonical root vectors in the free algebra.
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; p];
    let mut evec: Vec<LieElement> = Vec::with_capacity(p);
    for k in 0..p {
        if roots[k].height() == 1 {
            let i = node_of_simple(&roots[k]);
            evec.push(LieElement::generator(span.presentation().set(), i));
            continue;
        }
        let (i, lower) = (0..rank)
            .find_map(|i| {
                let rest = roots[k].clone() - Weight::simple(i, rank);
                root_index.get(&rest).map(|&l| (i, l))
            })
            .expect("positive root with no simple-root predecessor");
        parent[k] = Some((i, lower));
        let e = bracket(&evec_simple(&evec, &root_index, i, rank), &evec[lower]);
        assert!(!span.contains(&e)?, "serre_construct: root vector degenerates at {}", roots[k]);
        evec.push(e);
    }

    // Structure constants on the positive side, extracted by expressing
    // each product against the ideal rows plus the canonical root vector.
    let mut tracked: BTreeMap<Weight, (Vec<Word>, EchelonBasis<BigRational>, usize)> =
        BTreeMap::new();
    for k in 0..p {
        if roots[k].height() < 2 {
            continue;
        }
        let words = span.basis_words(&roots[k])?;
        let mut basis = EchelonBasis::with_tracking(words.len());
        let elems = span.span_elements(&roots[k])?;
        for e in &elems {
            basis.insert(e.coordinates(&words));
        }
        let ideal_rows = basis.inserted();
        assert!(
            basis.insert(evec[k].coordinates(&words)),
            "serre_construct: root vector inside the ideal at {}",
            roots[k]
        );
        tracked.insert(roots[k].clone(), (words, basis, ideal_rows));
    }
    let mut n_const: BTreeMap<(usize, usize), BigRational> = BTreeMap::new();
    for k in 0..p {
        for l in (k + 1)..p {
            let sum = roots[k].clone() + roots[l].clone();
            if !root_index.contains_key(&sum) {
                continue;
            }
            let (words, basis, ideal_rows) = &tracked[&sum];
            let product = bracket(&evec[k], &evec[l]);
            let combo = basis
                .express(&product.coordinates(words))
                .expect("root-vector product escapes its component");
            let mut coeff = BigRational::zero();
            for (idx, c) in combo {
                assert!(idx <= *ideal_rows, "serre_construct: stray expression index");
                if idx == *ideal_rows {
                    coeff = c;
                }
            }
            assert!(
                !coeff.is_zero(),
                "serre_construct: vanishing product of root vectors at {sum}"
            );
            n_const.insert((l, k), -&coeff);
            n_const.insert((k, l), coeff);
        }
    }

    let builder = Builder {
        a: &a,
        roots: &roots,
        root_index: &root_index,
        parent: &parent,
        simple_idx: (0..rank)
            .map(|i| root_index[&Weight::simple(i, rank)])
            .collect(),
        n_const: &n_const,
        p,
        n: rank,
    };
    let table = builder.assemble(theta_height);

    let lie = FiniteLie { series, rank, a, d, roots, root_index, parent, table };
    lie.verify();
    Ok(lie)
}

/// All nonzero degrees over `n` nodes with height at most `max`.
fn degrees_up_to(n: usize, max: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut coords = vec![0i64; n];
    fill_degrees(0, max, &mut coords, &mut out);
    out
}

fn fill_degrees(from: usize, left: i64, coords: &mut Vec<i64>, out: &mut Vec<Weight>) {
    if from == coords.len() {
        let w = Weight::from_coords(coords.clone());
        if !w.is_zero() {
            out.push(w);
        }
        return;
    }
    for c in 0..=left {
        coords[from] = c;
        fill_degrees(from + 1, left - c, coords, out);
    }
    coords[from] = 0;
}

fn node_of_simple(w: &Weight) -> usize {
    w.coords().iter().position(|&c| c == 1).expect("simple root has a unit coordinate")
}

fn evec_simple(
    evec: &[LieElement],
    root_index: &BTreeMap<Weight, usize>,
    i: usize,
    rank: usize,
) -> LieElement {
    evec[root_index[&Weight::simple(i, rank)]].clone()
}

/// Scratch state for assembling the structure-constant table.
struct Builder<'a> {
    a: &'a [Vec<i64>],
    roots: &'a [Weight],
    root_index: &'a BTreeMap<Weight, usize>,
    parent: &'a [Option<(usize, usize)>],
    simple_idx: Vec<usize>,
    n_const: &'a BTreeMap<(usize, usize), BigRational>,
    p: usize,
    n: usize,
}

impl Builder<'_> {
    /// Pairing of a weight with the `i`-th simple coroot.
    fn cw(&self, w: &Weight, i: usize) -> i64 {
        (0..self.n).map(|j| self.a[i][j] * w.coord(j)).sum()
    }

    /// Bracket of the root vector `E_k` with a sparse vector, given the
    /// mixed brackets of all lower total heights.
    fn ad_e(&self, k: usize, v: &SparseVec, mixed: &Mixed) -> SparseVec {
        let mut out = SparseVec::new();
        for (&b, c) in v {
            if b < self.p {
                if let Some(nc) = self.n_const.get(&(k, b)) {
                    let sum = self.roots[k].clone() + self.roots[b].clone();
                    add_to(&mut out, self.root_index[&sum], &(c * nc));
                }
            } else if b < self.p + self.n {
                let j = b - self.p;
                let w = -self.cw(&self.roots[k], j);
                add_to(&mut out, k, &(c * BigRational::from_integer(w.into())));
            } else {
                let m = b - self.p - self.n;
                let entry = mixed.get(&(k, m)).expect("mixed bracket missing in ad_e");
                add_scaled(&mut out, entry, c);
            }
        }
        out
    }

    /// Bracket of `F_k` with a sparse vector.
    fn ad_f(&self, k: usize, v: &SparseVec, mixed: &Mixed) -> SparseVec {
        let mut out = SparseVec::new();
        for (&b, c) in v {
            if b < self.p {
                let entry = mixed.get(&(b, k)).expect("mixed bracket missing in ad_f");
                let neg = -c;
                add_scaled(&mut out, entry, &neg);
            } else if b < self.p + self.n {
                let j = b - self.p;
                let w = self.cw(&self.roots[k], j);
                add_to(&mut out, self.p + self.n + k, &(c * BigRational::from_integer(w.into())));
            } else {
                let m = b - self.p - self.n;
                if let Some(nc) = self.n_const.get(&(k, m)) {
                    let sum = self.roots[k].clone() + self.roots[m].clone();
                    add_to(&mut out, self.p + self.n + self.root_index[&sum], &(c * nc));
                }
            }
        }
        out
    }

    /// Mixed brackets `[E_k, F_l]` for all root pairs, by recursion on
    /// total height.
    fn mixed_brackets(&self, theta_height: i64) -> Mixed {
        let mut mixed = Mixed::new();
        for total in 2..=(2 * theta_height) {
            for k in 0..self.p {
                for l in 0..self.p {
                    if self.roots[k].height() + self.roots[l].height() != total {
                        continue;
                    }
                    let v = self.mixed_pair(k, l, &mixed);
                    mixed.insert((k, l), v);
                }
            }
        }
        mixed
    }

    fn mixed_pair(&self, k: usize, l: usize, mixed: &Mixed) -> SparseVec {
        if let Some((i, lower)) = self.parent[k] {
            // [ [e_i, E_lower], F_l ] via the Jacobi identity.
            let si = self.simple_idx[i];
            let first = self.ad_e(si, &mixed[&(lower, l)], mixed);
            let second = self.ad_e(lower, &mixed[&(si, l)], mixed);
            return sub(first, second);
        }
        let i = node_of_simple(&self.roots[k]);
        if let Some((j, lower)) = self.parent[l] {
            // [ e_i, [f_j, F_lower] ] via the Jacobi identity.
            let sj = self.simple_idx[j];
            let mut out = self.ad_f(sj, &mixed[&(k, lower)], mixed);
            if i == j {
                let w = -self.cw(&self.roots[lower], i);
                add_to(
                    &mut out,
                    self.p + self.n + lower,
                    &BigRational::from_integer(w.into()),
                );
            }
            return out;
        }
        let j = node_of_simple(&self.roots[l]);
        let mut out = SparseVec::new();
        if i == j {
            out.insert(self.p + i, BigRational::one());
        }
        out
    }

    fn assemble(&self, theta_height: i64) -> Vec<Vec<SparseVec>> {
        let mixed = self.mixed_brackets(theta_height);
        let dim = 2 * self.p + self.n;
        let mut table = vec![vec![SparseVec::new(); dim]; dim];
        for k in 0..self.p {
            for l in 0..self.p {
                // E with E, F with F.
                if let Some(nc) = self.n_const.get(&(k, l)) {
                    let sum = self.roots[k].clone() + self.roots[l].clone();
                    let s = self.root_index[&sum];
                    table[k][l].insert(s, nc.clone());
                    table[self.p + self.n + k][self.p + self.n + l]
                        .insert(self.p + self.n + s, nc.clone());
                }
                // E with F.
                let v = &mixed[&(k, l)];
                table[k][self.p + self.n + l] = v.clone();
                table[self.p + self.n + l][k] = neg(v);
            }
        }
        for i in 0..self.n {
            for k in 0..self.p {
                let c = BigRational::from_integer(self.cw(&self.roots[k], i).into());
                if !c.is_zero() {
                    table[self.p + i][k].insert(k, c.clone());
                    table[k][self.p + i].insert(k, -&c);
                    table[self.p + i][self.p + self.n + k].insert(self.p + self.n + k, -&c);
                    table[self.p + self.n + k][self.p + i].insert(self.p + self.n + k, c);
                }
            }
        }
        table
    }
}

type Mixed = BTreeMap<(usize, usize), SparseVec>;

fn add_to(v: &mut SparseVec, idx: usize, c: &BigRational) {
    if c.is_zero() {
        return;
    }
    let entry = v.entry(idx).or_insert_with(BigRational::zero);
    *entry += c;
    if entry.is_zero() {
        v.remove(&idx);
    }
}

fn add_scaled(target: &mut SparseVec, src: &SparseVec, c: &BigRational) {
    for (&idx, x) in src {
        add_to(target, idx, &(c * x));
    }
}

fn sub(mut a: SparseVec, b: SparseVec) -> SparseVec {
    for (idx, x) in b {
        add_to(&mut a, idx, &-x);
    }
    a
}

fn neg(v: &SparseVec) -> SparseVec {
    v.iter().map(|(&i, c)| (i, -c)).collect()
}

impl FiniteLie {
    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        2 * self.roots.len() + self.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.a
    }

    /// Symmetrizer entry: `d_i a_ij = d_j a_ji`.
    pub fn d(&self, i: usize) -> i64 {
        self.d[i]
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.roots
    }

    pub fn highest_root(&self) -> &Weight {
        self.roots.last().expect("nonempty root set")
    }

    /// Canonical decomposition of a non-simple positive root: the node `i`
    /// and root index `l` with `E_k = [e_i, E_l]`.
    pub fn parent(&self, k: usize) -> Option<(usize, usize)> {
        self.parent[k]
    }

    pub fn e_index(&self, i: usize) -> usize {
        self.root_index[&Weight::simple(i, self.rank)]
    }

    pub fn h_index(&self, i: usize) -> usize {
        self.roots.len() + i
    }

    pub fn f_index(&self, i: usize) -> usize {
        self.roots.len() + self.rank + self.e_index(i)
    }

    /// Basis index of the root space for `w`, positive or negative.
    pub fn root_space(&self, w: &Weight) -> Option<usize> {
        if let Some(&k) = self.root_index.get(w) {
            return Some(k);
        }
        self.root_index.get(&-w.clone()).map(|&k| self.roots.len() + self.rank + k)
    }

    /// Weight of a basis vector: the root for `E`, zero for `h`, the
    /// negated root for `F`.
    pub fn weight_of(&self, b: usize) -> Weight {
        let p = self.roots.len();
        if b < p {
            self.roots[b].clone()
        } else if b < p + self.rank {
            Weight::zero(self.rank)
        } else {
            -self.roots[b - p - self.rank].clone()
        }
    }

    pub fn bracket_entry(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i][j]
    }

    pub fn bracket_vec(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&i, a) in x {
            for (&j, b) in y {
                add_scaled(&mut out, &self.table[i][j], &(a * b));
            }
        }
        out
    }

    /// Trace form `tr(ad x ad y)` on basis vectors.
    pub fn killing(&self, i: usize, j: usize) -> BigRational {
        let mut total = BigRational::zero();
        for b in 0..self.dim() {
            for (&c, x) in &self.table[j][b] {
                if let Some(y) = self.table[i][c].get(&b) {
                    total += x * y;
                }
            }
        }
        total
    }

    pub fn killing_vec(&self, x: &SparseVec, y: &SparseVec) -> BigRational {
        let mut total = BigRational::zero();
        for (&i, a) in x {
            for (&j, b) in y {
                total += a * b * self.killing(i, j);
            }
        }
        total
    }

    /// The involution `e_i -> -f_i`, `h -> -h`, as a basis map.
    pub fn chevalley_involution(&self, v: &SparseVec) -> SparseVec {
        let p = self.roots.len();
        let mut out = SparseVec::new();
        for (&b, c) in v {
            let (target, sign) = if b < p {
                (p + self.rank + b, self.roots[b].height())
            } else if b < p + self.rank {
                (b, 1)
            } else {
                (b - p - self.rank, self.roots[b - p - self.rank].height())
            };
            let signed = if sign % 2 == 0 { c.clone() } else { -c };
            add_to(&mut out, target, &signed);
        }
        out
    }

    /// Count of basis triples violating the Jacobi identity.
    pub fn jacobi_defects(&self) -> usize {
        let dim = self.dim();
        let mut bad = 0;
        for i in 0..dim {
            for j in (i + 1)..dim {
                for k in (j + 1)..dim {
                    let mut s = SparseVec::new();
                    for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
                        let inner = &self.table[y][z];
                        for (&b, c) in inner {
                            add_scaled(&mut s, &self.table[x][b], c);
                        }
                    }
                    if !s.is_empty() {
                        bad += 1;
                    }
                }
            }
        }
        bad
    }

    /// Construction-time consistency checks.
    fn verify(&self) {
        let dim = self.dim();
        for i in 0..dim {
            for j in 0..dim {
                assert_eq!(
                    self.table[i][j],
                    neg(&self.table[j][i]),
                    "FiniteLie: bracket not antisymmetric at ({i}, {j})"
                );
                let w = self.weight_of(i) + self.weight_of(j);
                for &b in self.table[i][j].keys() {
                    assert_eq!(
                        self.weight_of(b),
                        w,
                        "FiniteLie: weight drift in [{i}, {j}]"
                    );
                }
            }
        }
        assert_eq!(self.jacobi_defects(), 0, "FiniteLie: Jacobi identity fails");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // ---- Dimensions ----

    #[test]
    fn classical_dimensions() {
        assert_eq!(serre_construct(Series::A, 1).unwrap().dim(), 3);
        assert_eq!(serre_construct(Series::A, 2).unwrap().dim(), 8);
        assert_eq!(serre_construct(Series::A, 3).unwrap().dim(), 15);
        assert_eq!(serre_construct(Series::D, 4).unwrap().dim(), 28);
    }

    #[test]
    fn shorter_series_and_exceptional_ranks() {
        assert_eq!(serre_construct(Series::C, 2).unwrap().dim(), 10);
        assert_eq!(serre_construct(Series::G, 2).unwrap().dim(), 14);
        // D_3 coincides with A_3 through the fork-shaped labeling.
        assert_eq!(serre_construct(Series::D, 3).unwrap().dim(), 15);
    }

    #[test]
    fn unsupported_types_are_refused() {
        assert!(serre_construct(Series::F, 4).is_err());
        assert!(serre_construct(Series::E, 6).is_err());
        assert!(serre_construct(Series::A, 5).is_err());
        assert!(serre_construct(Series::D, 2).is_err());
    }

    // ---- Rank-one table ----

    #[test]
    fn rank_one_is_the_standard_triple() {
        let g = serre_construct(Series::A, 1).unwrap();
        let (e, h, f) = (g.e_index(0), g.h_index(0), g.f_index(0));
        assert_eq!(g.bracket_entry(e, f), &SparseVec::from([(h, BigRational::one())]));
        assert_eq!(
            g.bracket_entry(h, e),
            &SparseVec::from([(e, BigRational::from_integer(2.into()))])
        );
        assert_eq!(
            g.bracket_entry(h, f),
            &SparseVec::from([(f, BigRational::from_integer((-2).into()))])
        );
        assert_eq!(g.killing(e, f), BigRational::from_integer(4.into()));
    }

    // ---- Structural properties ----

    #[test]
    fn root_spaces_cover_every_root_once() {
        let g = serre_construct(Series::A, 2).unwrap();
        assert_eq!(g.positive_roots().len(), 3);
        for w in g.positive_roots() {
            assert!(g.root_space(w).is_some());
            assert!(g.root_space(&-w.clone()).is_some());
        }
        assert_eq!(g.highest_root().coords(), &[1, 1]);
    }

    #[test]
    fn killing_form_is_invariant() {
        let g = serre_construct(Series::C, 2).unwrap();
        let dim = g.dim();
        for i in 0..dim.min(6) {
            for j in 0..dim.min(6) {
                assert_eq!(g.killing(i, j), g.killing(j, i), "symmetry at ({i}, {j})");
                for k in 0..dim.min(6) {
                    let left = g.killing_vec(
                        g.bracket_entry(i, j),
                        &SparseVec::from([(k, BigRational::one())]),
                    );
                    let right = g.killing_vec(
                        &SparseVec::from([(i, BigRational::one())]),
                        g.bracket_entry(j, k),
                    );
                    assert_eq!(left, right, "invariance at ({i}, {j}, {k})");
                }
            }
        }
    }

    #[test]
    fn involution_is_an_automorphism() {
        let g = serre_construct(Series::A, 2).unwrap();
        let dim = g.dim();
        for i in 0..dim {
            for j in 0..dim {
                let x = SparseVec::from([(i, BigRational::one())]);
                let y = SparseVec::from([(j, BigRational::one())]);
                let lhs = g.chevalley_involution(g.bracket_entry(i, j));
                let rhs = g.bracket_vec(&g.chevalley_involution(&x), &g.chevalley_involution(&y));
                assert_eq!(lhs, rhs, "involution at ({i}, {j})");
            }
        }
        // On generators it is the expected sign flip.
        let e = SparseVec::from([(g.e_index(0), BigRational::one())]);
        let image = g.chevalley_involution(&e);
        assert_eq!(image, SparseVec::from([(g.f_index(0), -BigRational::one())]));
    }

    #[test]
    fn parent_decomposition_reaches_every_root() {
        let g = serre_construct(Series::D, 4).unwrap();
        for (k, w) in g.positive_roots().iter().enumerate() {
            match g.parent(k) {
                None => assert_eq!(w.height(), 1),
                Some((i, l)) => {
                    let rebuilt =
                        Weight::simple(i, g.rank()) + g.positive_roots()[l].clone();
                    assert_eq!(&rebuilt, w);
                }
            }
        }
    }
}
