//! The twisted loop model of the affine algebra.
//!
//! The finite simple algebra `g` attached to an affine type carries a
//! diagram automorphism `chi` whose order is the twist `k`.  Loop space
//! `sum_r g^[r mod k] (x) t^r` together with a central line `C c` then
//! realizes the affine algebra, with bracket
//!
//! ```text
//! [x (x) t^m, y (x) t^l] = [x, y] (x) t^{m+l} + delta_{m+l,0} m kappa(x, y) c
//! ```
//!
//! where `g^[m]` is the `zeta_k^m`-eigenspace of `chi` and `kappa` is the
//! invariant form normalizing the first-node level pairing to `1/d_1`.
//! Loop generators are built from projected root vectors of `g`, scaled so
//! that `[h_{i,0}, x^+_{j,0}] = a_ij x^+_{j,0}`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num::rational::BigRational;
use num::{BigInt, One, Zero};

use crate::arith::{Cyclotomic, EchelonBasis};
use crate::cartan::{AffineType, CartanData, Series, Weight};
use crate::lie::{serre_construct, FiniteLie, SparseVec};
use crate::{Error, Result};

/// A finite-algebra vector with coefficients in the cyclotomic field of
/// the twist order.  Zero coefficients are never stored.
pub type CycVec = BTreeMap<usize, Cyclotomic>;

fn cyc_add_term(target: &mut CycVec, b: usize, piece: Cyclotomic) {
    if piece.is_zero() {
        return;
    }
    match target.entry(b) {
        Entry::Vacant(e) => {
            e.insert(piece);
        }
        Entry::Occupied(mut e) => {
            let sum = e.get() + &piece;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

fn cyc_add_scaled(target: &mut CycVec, src: &CycVec, c: &Cyclotomic) {
    if c.is_zero() {
        return;
    }
    for (&b, x) in src {
        cyc_add_term(target, b, x * c);
    }
}

fn cyc_bracket(g: &FiniteLie, x: &CycVec, y: &CycVec) -> CycVec {
    let mut out = CycVec::new();
    for (&a, ca) in x {
        for (&b, cb) in y {
            let c = ca * cb;
            if c.is_zero() {
                continue;
            }
            for (&t, n) in g.bracket_entry(a, b) {
                cyc_add_term(&mut out, t, c.scale(n));
            }
        }
    }
    out
}

fn unit(b: usize) -> SparseVec {
    let mut v = SparseVec::new();
    v.insert(b, BigRational::one());
    v
}

fn apply_map(map: &[SparseVec], v: &SparseVec) -> SparseVec {
    let mut out = SparseVec::new();
    for (&a, c) in v {
        for (&b, x) in &map[a] {
            let piece = c * x;
            let slot = out.entry(b).or_insert_with(BigRational::zero);
            *slot += piece;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// An element of the centrally extended twisted loop algebra: finitely
/// many loop levels, each carrying a finite-algebra vector, plus a
/// central coordinate.  Components are kept pruned, so equality is
/// structural.
#[derive(Clone, Debug, PartialEq)]
pub struct LoopElement {
    terms: BTreeMap<i64, CycVec>,
    central: Cyclotomic,
}

impl LoopElement {
    pub fn zero(order: u8) -> Self {
        LoopElement { terms: BTreeMap::new(), central: Cyclotomic::zero(order) }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.central.is_zero()
    }

    /// Loop levels carrying a nonzero finite-algebra component.
    pub fn levels(&self) -> impl Iterator<Item = i64> + '_ {
        self.terms.keys().copied()
    }

    pub fn component(&self, level: i64) -> Option<&CycVec> {
        self.terms.get(&level)
    }

    pub fn central_part(&self) -> &Cyclotomic {
        &self.central
    }

    pub fn scaled(&self, c: &Cyclotomic) -> Self {
        let mut out = LoopElement::zero(self.central.order());
        out.central = &self.central * c;
        for (&lv, v) in &self.terms {
            let mut slot = CycVec::new();
            cyc_add_scaled(&mut slot, v, c);
            if !slot.is_empty() {
                out.terms.insert(lv, slot);
            }
        }
        out
    }

    pub fn add_scaled(&self, rhs: &Self, c: &Cyclotomic) -> Self {
        let mut out = self.clone();
        for (&lv, v) in &rhs.terms {
            let slot = out.terms.entry(lv).or_default();
            cyc_add_scaled(slot, v, c);
        }
        out.terms.retain(|_, v| !v.is_empty());
        out.central = &out.central + &(&rhs.central * c);
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add_scaled(rhs, &Cyclotomic::from_int(self.central.order(), -1))
    }
}

/// Diagram automorphism and orbit tables for the fold `g -> g^chi`:
/// the node permutation `mu` of `g` and, per finite node of the affine
/// type, its `mu`-orbit with the chosen representative first.
fn fold_tables(at: AffineType) -> Result<(Vec<usize>, Vec<Vec<usize>>)> {
    let r = at.rank as usize;
    let n = at.finite_rank();
    match (at.twist, at.series) {
        (1, _) => Ok(((0..r).collect(), (0..r).map(|a| vec![a]).collect())),
        (2, Series::A) => {
            let mu = (0..r).rev().collect();
            let mut orbits = Vec::with_capacity(n);
            for i in 1..=n {
                let (a, b) = (i - 1, r - i);
                orbits.push(if a == b { vec![a] } else { vec![a, b] });
            }
            Ok((mu, orbits))
        }
        (2, Series::D) => {
            let mut mu: Vec<usize> = (0..r).collect();
            mu.swap(r - 2, r - 1);
            let mut orbits: Vec<Vec<usize>> = (0..n - 1).map(|a| vec![a]).collect();
            orbits.push(vec![r - 2, r - 1]);
            Ok((mu, orbits))
        }
        (3, Series::D) if r == 4 => Ok((vec![2, 1, 3, 0], vec![vec![0, 2, 3], vec![1]])),
        _ => Err(Error::BadType(format!("no twisted loop tables for {at}"))),
    }
}

fn lift_chi(g: &FiniteLie, mu: &[usize], signs: &[i64]) -> Vec<SparseVec> {
    let p = g.positive_roots().len();
    let rank = g.rank();
    let signed = |b: usize, s: i64| {
        let mut v = SparseVec::new();
        v.insert(b, BigRational::from_integer(BigInt::from(s)));
        v
    };
    let mut chi: Vec<SparseVec> = vec![SparseVec::new(); g.dim()];
    for i in 0..rank {
        chi[g.e_index(i)] = signed(g.e_index(mu[i]), signs[i]);
        chi[g.h_index(i)] = signed(g.h_index(mu[i]), 1);
        chi[g.f_index(i)] = signed(g.f_index(mu[i]), signs[i]);
    }
    // Roots are listed by increasing height, so each parent image is
    // already available when its child comes up.  `E_b = [e_i, E_l]` and
    // `F_b = [f_i, F_l]` both hold with structure constant 1.
    for b in 0..p {
        if let Some((i, l)) = g.parent(b) {
            chi[b] = g.bracket_vec(&chi[g.e_index(i)], &chi[l]);
            chi[p + rank + b] = g.bracket_vec(&chi[g.f_index(i)], &chi[p + rank + l]);
        }
    }
    chi
}

fn is_automorphism(g: &FiniteLie, chi: &[SparseVec]) -> bool {
    let dim = g.dim();
    for a in 0..dim {
        for b in a + 1..dim {
            let lhs = apply_map(chi, g.bracket_entry(a, b));
            let rhs = g.bracket_vec(&chi[a], &chi[b]);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

fn power_is_identity(g: &FiniteLie, chi: &[SparseVec], order: u8) -> bool {
    for b in 0..g.dim() {
        let mut v = unit(b);
        for _ in 0..order {
            v = apply_map(chi, &v);
        }
        if v != unit(b) {
            return false;
        }
    }
    true
}

fn fixed_dim(g: &FiniteLie, chi: &[SparseVec], order: u8) -> usize {
    let dim = g.dim();
    let mut basis: EchelonBasis<BigRational> = EchelonBasis::new(dim);
    for b in 0..dim {
        let mut acc = unit(b);
        let mut v = unit(b);
        for _ in 1..order {
            v = apply_map(chi, &v);
            for (&t, c) in &v {
                let slot = acc.entry(t).or_insert_with(BigRational::zero);
                *slot += c;
            }
        }
        let mut dense = vec![BigRational::zero(); dim];
        for (t, c) in acc {
            dense[t] = c;
        }
        basis.insert(dense);
    }
    basis.dim()
}

/// Lifts the node permutation `mu` to an algebra automorphism of order
/// `order` whose fixed subalgebra has the expected dimension, searching
/// generator signs `chi(e_i) = s_i e_{mu(i)}` with `+1` preferred.
fn find_chi(
    g: &FiniteLie,
    mu: &[usize],
    order: u8,
    fixed_target: usize,
) -> Result<Vec<SparseVec>> {
    let rank = g.rank();
    for mask in 0u32..1 << rank {
        let signs: Vec<i64> =
            (0..rank).map(|i| if mask >> i & 1 == 0 { 1 } else { -1 }).collect();
        let chi = lift_chi(g, mu, &signs);
        if is_automorphism(g, &chi)
            && power_is_identity(g, &chi, order)
            && fixed_dim(g, &chi, order) == fixed_target
        {
            return Ok(chi);
        }
    }
    Err(Error::BadType(format!(
        "no order-{order} automorphism lift of the node permutation on {}{}",
        g.series().letter(),
        g.rank()
    )))
}

/// The finite algebra of an affine type with its twist automorphism,
/// eigenspace projections, generator scalings, and the invariant form of
/// the central extension.
pub struct TwistedLoop {
    cd: CartanData,
    g: FiniteLie,
    order: u8,
    orbits: Vec<Vec<usize>>,
    proj: Vec<Vec<CycVec>>,
    gamma_plus: Vec<BigRational>,
    gamma_minus: Vec<BigRational>,
    kappa: Vec<Vec<BigRational>>,
}

/// Builds the twisted loop model for an affine type.
///
/// Fails with [`Error::BadType`] when the underlying finite algebra or
/// the fold tables are out of range (E series, ranks above 4).
pub fn build_twisted_loop(cd: &CartanData) -> Result<TwistedLoop> {
    let at = cd.affine_type();
    let g = serre_construct(at.series, at.rank as usize)?;
    let (mu, orbits) = fold_tables(at)?;
    let k = at.twist;
    let n = cd.finite_rank();
    for i in 1..=n {
        assert_eq!(
            cd.d_tilde(i),
            i64::from(k) / orbits[i - 1].len() as i64,
            "build_twisted_loop: orbit table disagrees with the loop periods of {at}"
        );
    }

    let fixed_target = cd.phi0().len() + n;
    let chi = find_chi(&g, &mu, k, fixed_target)?;

    let dim = g.dim();
    let mut pow: Vec<Vec<SparseVec>> = vec![(0..dim).map(unit).collect()];
    for l in 1..k as usize {
        let prev = &pow[l - 1];
        pow.push((0..dim).map(|b| apply_map(&chi, &prev[b])).collect());
    }
    let inv_k = BigRational::new(BigInt::one(), BigInt::from(k));
    let mut proj: Vec<Vec<CycVec>> = Vec::with_capacity(k as usize);
    for m in 0..i64::from(k) {
        let mut col = Vec::with_capacity(dim);
        for b in 0..dim {
            let mut out = CycVec::new();
            for l in 0..i64::from(k) {
                let scale = Cyclotomic::zeta_pow(k, -m * l).scale(&inv_k);
                for (&t, c) in &pow[l as usize][b] {
                    cyc_add_term(&mut out, t, scale.scale(c));
                }
            }
            col.push(out);
        }
        proj.push(col);
    }

    // Gamma gauge: with t_i = [P_0 e_i, P_0 f_i] and [t_i, P_0 e_i] =
    // a_i P_0 e_i, setting gamma+ gamma- = 2 / a_i makes the diagonal
    // Cartan entry come out as 2.
    let mut gamma_plus = Vec::with_capacity(n);
    let gamma_minus = vec![BigRational::one(); n];
    for i in 1..=n {
        let rep = orbits[i - 1][0];
        let e0 = &proj[0][g.e_index(rep)];
        let f0 = &proj[0][g.f_index(rep)];
        let t = cyc_bracket(&g, e0, f0);
        let te = cyc_bracket(&g, &t, e0);
        let a = proportionality(&te, e0).and_then(|c| c.to_rational()).unwrap_or_else(|| {
            panic!("build_twisted_loop: [t_i, P_0 e_i] is not a rational multiple of P_0 e_i")
        });
        assert!(!a.is_zero(), "build_twisted_loop: degenerate Cartan gauge at node {i}");
        gamma_plus.push(BigRational::from_integer(BigInt::from(2)) / a);
    }

    let mut kappa = vec![vec![BigRational::zero(); dim]; dim];
    for a in 0..dim {
        for b in a..dim {
            let v = g.killing(a, b);
            kappa[a][b] = v.clone();
            kappa[b][a] = v;
        }
    }
    // Normalize the form so the first-node level pairing is 1/d_1.
    let rep = orbits[0][0];
    let pair = form_pair(&kappa, &proj[0][g.e_index(rep)], &proj[0][g.f_index(rep)])
        .to_rational()
        .expect("build_twisted_loop: Killing level pairing must be rational");
    let d1 = BigRational::from_integer(BigInt::from(cd.d(1)));
    let target = (d1 * &gamma_plus[0] * &gamma_minus[0] * pair).recip();
    for row in &mut kappa {
        for x in row.iter_mut() {
            *x *= &target;
        }
    }

    let tl = TwistedLoop { cd: cd.clone(), g, order: k, orbits, proj, gamma_plus, gamma_minus, kappa };
    for i in 1..=n {
        for j in 1..=n {
            let h = tl.h_gen(i, 0)?;
            let x = tl.x_plus(j, 0)?;
            let want = x.scaled(&Cyclotomic::from_int(k, tl.cd.a(i, j)));
            if tl.bracket(&h, &x) != want {
                return Err(Error::BadType(format!(
                    "twisted loop model for {at} fails the Cartan matrix check at ({i}, {j})"
                )));
            }
        }
    }
    Ok(tl)
}

/// The scalar `a` with `num = a * den`, if one exists (`den` nonzero).
fn proportionality(num: &CycVec, den: &CycVec) -> Option<Cyclotomic> {
    let (&b0, c0) = den.iter().next()?;
    let a = num.get(&b0)? / c0;
    let mut check = CycVec::new();
    cyc_add_scaled(&mut check, den, &a);
    if &check == num {
        Some(a)
    } else {
        None
    }
}

fn form_pair(form: &[Vec<BigRational>], u: &CycVec, v: &CycVec) -> Cyclotomic {
    let mut out = Cyclotomic::zero(1);
    for (&a, ca) in u {
        for (&b, cb) in v {
            out = &out + &(ca * cb).scale(&form[a][b]);
        }
    }
    out
}

impl TwistedLoop {
    pub fn cartan(&self) -> &CartanData {
        &self.cd
    }

    pub fn finite(&self) -> &FiniteLie {
        &self.g
    }

    /// The twist order `k`.
    pub fn order(&self) -> u8 {
        self.order
    }

    /// The `mu`-orbit of finite-algebra nodes folding onto finite node
    /// `i`, representative first.
    pub fn orbit(&self, i: usize) -> &[usize] {
        &self.orbits[i - 1]
    }

    /// The central generator `c`.
    pub fn central(&self) -> LoopElement {
        let mut out = LoopElement::zero(self.order);
        out.central = Cyclotomic::one(self.order);
        out
    }

    /// The raising loop generator `x^+_{i,r}`; needs `(i, r)` integral.
    pub fn x_plus(&self, i: usize, r: i64) -> Result<LoopElement> {
        self.loop_gen(i, r, true)
    }

    /// The lowering loop generator `x^-_{i,r}`; needs `(i, r)` integral.
    pub fn x_minus(&self, i: usize, r: i64) -> Result<LoopElement> {
        self.loop_gen(i, r, false)
    }

    fn loop_gen(&self, i: usize, r: i64, plus: bool) -> Result<LoopElement> {
        if i < 1 || i > self.cd.finite_rank() || !self.cd.is_integral_pair(i, r) {
            return Err(Error::BadArgument(format!(
                "twisted loop generator ({i}, {r}) is not an integral pair"
            )));
        }
        let rep = self.orbits[i - 1][0];
        let b = if plus { self.g.e_index(rep) } else { self.g.f_index(rep) };
        let gamma = if plus { &self.gamma_plus[i - 1] } else { &self.gamma_minus[i - 1] };
        let m = r.rem_euclid(i64::from(self.order)) as usize;
        let mut vec = CycVec::new();
        for (&t, c) in &self.proj[m][b] {
            vec.insert(t, c.scale(gamma));
        }
        debug_assert!(!vec.is_empty(), "TwistedLoop: integral loop generator must be nonzero");
        let mut out = LoopElement::zero(self.order);
        out.terms.insert(r, vec);
        Ok(out)
    }

    /// The imaginary generator `h_{i,r} = [x^+_{i,r}, x^-_{i,0}]`; never
    /// carries a central part.
    pub fn h_gen(&self, i: usize, r: i64) -> Result<LoopElement> {
        Ok(self.bracket(&self.x_plus(i, r)?, &self.x_minus(i, 0)?))
    }

    /// The extended bracket.  Central parts of the inputs drop out, and
    /// the form contributes `m kappa(x, y) c` at total level zero.
    pub fn bracket(&self, x: &LoopElement, y: &LoopElement) -> LoopElement {
        let mut out = LoopElement::zero(self.order);
        let one = Cyclotomic::one(self.order);
        for (&m, u) in &x.terms {
            for (&l, v) in &y.terms {
                let w = cyc_bracket(&self.g, u, v);
                if !w.is_empty() {
                    let slot = out.terms.entry(m + l).or_default();
                    cyc_add_scaled(slot, &w, &one);
                }
                if m + l == 0 && m != 0 {
                    let pair = self
                        .form_value(u, v)
                        .scale(&BigRational::from_integer(BigInt::from(m)));
                    out.central = &out.central + &pair;
                }
            }
        }
        out.terms.retain(|_, v| !v.is_empty());
        out
    }

    fn form_value(&self, u: &CycVec, v: &CycVec) -> Cyclotomic {
        form_pair(&self.kappa, u, v)
    }

    /// Dimension of the positive loop half at an affine degree: the rank
    /// of the projected root vectors `P_{r mod k}(E_beta)` over the
    /// finite-algebra positive roots `beta` folding onto the finite part.
    pub fn weight_space_dim(&self, degree: &Weight) -> Result<usize> {
        let (level, finite) = self.cd.level_and_finite_part(degree);
        if !finite.is_positive() {
            return Err(Error::BadArgument(
                "TwistedLoop::weight_space_dim: need a nonzero positive finite part".into(),
            ));
        }
        let m = level.rem_euclid(i64::from(self.order)) as usize;
        let dim = self.g.dim();
        let mut basis: EchelonBasis<Cyclotomic> = EchelonBasis::new(dim);
        for idx in 0..self.g.positive_roots().len() {
            if !self.folds_to(idx, &finite) {
                continue;
            }
            let v = &self.proj[m][idx];
            if v.is_empty() {
                continue;
            }
            let mut dense = vec![Cyclotomic::zero(self.order); dim];
            for (&t, c) in v {
                dense[t] = c.clone();
            }
            basis.insert(dense);
        }
        Ok(basis.dim())
    }

    fn folds_to(&self, root_idx: usize, finite: &Weight) -> bool {
        let beta = &self.g.positive_roots()[root_idx];
        for i in 1..=self.cd.finite_rank() {
            let s: i64 = self.orbits[i - 1].iter().map(|&a| beta.coord(a)).sum();
            if s != finite.coord(i) {
                return false;
            }
        }
        true
    }
}
