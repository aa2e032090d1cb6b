//! The bijection from nonzero integers onto positive real roots induced by
//! the reflection sequence, and the total order on ordered roots.

use std::cmp::Ordering;

use super::super::cartan::{CartanData, Weight};
use super::element::{mat_act, mat_identity, mat_mul, reflection_matrix, Mat};
use super::iota::IotaSequence;
use crate::{Error, Result};

/// Memoizing enumerator for `beta_r = w_r(alpha_{iota_r})`.
///
/// The partial products grow one reflection at a time in each direction:
/// `w_1` is the identity and `w_{r+1} = w_r s_{iota_r}` going up, while
/// `w_0` is the identity and `w_{r-1} = w_r s_{iota_r}` going down. Indices
/// beyond `bound` in absolute value are refused.
pub struct BetaEnumerator {
    cd: CartanData,
    seq: IotaSequence,
    bound: usize,
    w_up: Vec<Mat>,
    w_down: Vec<Mat>,
    beta_up: Vec<Weight>,
    beta_down: Vec<Weight>,
}

pub const DEFAULT_BETA_BOUND: usize = 10_000;

impl BetaEnumerator {
    pub fn new(cd: &CartanData, seq: IotaSequence) -> Self {
        let id = mat_identity(cd.size());
        BetaEnumerator {
            cd: cd.clone(),
            seq,
            bound: DEFAULT_BETA_BOUND,
            w_up: vec![id.clone()],
            w_down: vec![id],
            beta_up: Vec::new(),
            beta_down: Vec::new(),
        }
    }

    pub fn with_bound(mut self, bound: usize) -> Self {
        self.bound = bound;
        self
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cd
    }

    pub fn sequence(&self) -> &IotaSequence {
        &self.seq
    }

    /// `beta_r` for `r != 0` ascending, `r <= 0` descending; always a
    /// positive real root.
    pub fn beta(&mut self, r: i64) -> Result<Weight> {
        if r.unsigned_abs() as usize > self.bound {
            return Err(Error::ResourceBound(format!(
                "beta index {r} exceeds the enumeration bound {}",
                self.bound
            )));
        }
        if r >= 1 {
            let k = r as usize;
            while self.beta_up.len() < k {
                let next = self.beta_up.len() as i64 + 1; // computing beta_next
                let w = self.w_up.last().unwrap();
                let alpha = Weight::simple(self.seq.value(next), self.cd.size());
                let beta = Weight::from_coords(mat_act(w, alpha.coords()));
                assert!(beta.is_positive(), "beta_{next} is not positive");
                let step = mat_mul(w, &reflection_matrix(&self.cd, self.seq.value(next)));
                self.w_up.push(step);
                self.beta_up.push(beta);
            }
            Ok(self.beta_up[k - 1].clone())
        } else {
            let k = (-r) as usize;
            while self.beta_down.len() < k + 1 {
                let at = -(self.beta_down.len() as i64); // computing beta_at
                let w = self.w_down.last().unwrap();
                let alpha = Weight::simple(self.seq.value(at), self.cd.size());
                let beta = Weight::from_coords(mat_act(w, alpha.coords()));
                assert!(beta.is_positive(), "beta_{at} is not positive");
                let step = mat_mul(w, &reflection_matrix(&self.cd, self.seq.value(at)));
                self.w_down.push(step);
                self.beta_down.push(beta);
            }
            Ok(self.beta_down[k].clone())
        }
    }
}

/// A root entry of the convex order: either `beta_r` or an imaginary pair
/// `(m delta, i)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OrderedRootKind {
    Real { index: i64 },
    Imaginary { level: i64, node: usize },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrderedRoot {
    pub weight: Weight,
    pub kind: OrderedRootKind,
}

impl OrderedRoot {
    pub fn real(index: i64, e: &mut BetaEnumerator) -> Result<Self> {
        Ok(OrderedRoot { weight: e.beta(index)?, kind: OrderedRootKind::Real { index } })
    }

    /// The imaginary entry `(level * delta, node)`; the node must carry a
    /// generator at that level.
    pub fn imaginary(level: i64, node: usize, cd: &CartanData) -> Self {
        assert!(level >= 1, "imaginary ordered roots have positive level");
        assert!(
            (1..=cd.finite_rank()).contains(&node) && cd.is_integral_pair(node, level),
            "imaginary ordered root ({level} delta, {node}) does not exist"
        );
        OrderedRoot { weight: cd.delta().scaled(level), kind: OrderedRootKind::Imaginary { level, node } }
    }

    /// Sort key for the total order: the positive-index real block
    /// ascending, then all imaginary entries by descending level and
    /// ascending node, then the non-positive real block ascending.
    fn key(&self) -> (u8, i64, i64) {
        match self.kind {
            OrderedRootKind::Real { index } if index >= 1 => (0, index, 0),
            OrderedRootKind::Imaginary { level, node } => (1, -level, node as i64),
            OrderedRootKind::Real { index } => (2, index, 0),
        }
    }
}

/// The total order on ordered roots.
pub fn compare(a: &OrderedRoot, b: &OrderedRoot) -> Ordering {
    a.key().cmp(&b.key())
}

impl PartialOrd for OrderedRoot {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(compare(self, other))
    }
}

impl Ord for OrderedRoot {
    fn cmp(&self, other: &Self) -> Ordering {
        compare(self, other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{build_cartan, RootSystem};
    use crate::weyl::iota::iota_sequence;

    fn enumerator(s: &str) -> BetaEnumerator {
        let cd = build_cartan(s.parse().unwrap()).unwrap();
        let seq = iota_sequence(&cd).unwrap();
        BetaEnumerator::new(&cd, seq)
    }

    // ---- Values ----

    #[test]
    fn rank_one_ladder() {
        let mut e = enumerator("A1~1");
        // iota_1 = 0, so the ascending chain walks r delta - alpha_1 and
        // the descending chain walks r delta + alpha_1.
        assert_eq!(e.beta(1).unwrap().coords(), &[1, 0]);
        assert_eq!(e.beta(2).unwrap().coords(), &[2, 1]);
        assert_eq!(e.beta(3).unwrap().coords(), &[3, 2]);
        assert_eq!(e.beta(0).unwrap().coords(), &[0, 1]);
        assert_eq!(e.beta(-1).unwrap().coords(), &[1, 2]);
        assert_eq!(e.beta(-2).unwrap().coords(), &[2, 3]);
    }

    #[test]
    fn a2_twisted_ladder_interleaves_doubled_roots() {
        let mut e = enumerator("A2~2");
        // iota = (0, 1): beta_1 = delta - 2 alpha_1, beta_2 = delta - alpha_1,
        // beta_3 = 3 delta - 2 alpha_1, beta_4 = 2 delta - alpha_1.
        assert_eq!(e.beta(1).unwrap().coords(), &[1, 0]);
        assert_eq!(e.beta(2).unwrap().coords(), &[1, 1]);
        assert_eq!(e.beta(3).unwrap().coords(), &[3, 4]);
        assert_eq!(e.beta(4).unwrap().coords(), &[2, 3]);
        assert_eq!(e.beta(0).unwrap().coords(), &[0, 1]);
        assert_eq!(e.beta(-1).unwrap().coords(), &[1, 4]);
        assert_eq!(e.beta(-2).unwrap().coords(), &[1, 3]);
    }

    #[test]
    fn bound_is_enforced() {
        let mut e = enumerator("A1~1").with_bound(5);
        assert!(e.beta(5).is_ok());
        assert!(matches!(e.beta(6), Err(Error::ResourceBound(_))));
        assert!(matches!(e.beta(-6), Err(Error::ResourceBound(_))));
    }

    // ---- Bijectivity within windows ----

    #[test]
    fn betas_are_distinct_positive_real_roots() {
        for t in ["A1~1", "A2~1", "C2~1", "A2~2", "A4~2", "A3~2", "D4~3", "G2~1"] {
            let mut e = enumerator(t);
            let sys = RootSystem::new(e.cartan());
            let mut seen = std::collections::BTreeSet::new();
            for r in -200..=200 {
                let b = e.beta(r).unwrap();
                assert!(sys.is_real_root(&b), "{t}: beta_{r} = {b} is not a real root");
                assert!(b.is_positive(), "{t}: beta_{r} not positive");
                assert!(seen.insert(b.clone()), "{t}: beta_{r} = {b} repeated");
            }
        }
    }

    #[test]
    fn low_level_roots_are_all_reached() {
        for t in ["A1~1", "A2~1", "C2~1", "A2~2", "A4~2", "A3~2", "D4~3"] {
            let mut e = enumerator(t);
            let sys = RootSystem::new(e.cartan());
            let want: std::collections::BTreeSet<Weight> = sys
                .positive_roots(5, 1000)
                .into_iter()
                .filter(|r| !r.imaginary)
                .map(|r| r.weight)
                .collect();
            let mut seen = std::collections::BTreeSet::new();
            for r in -2000..=2000 {
                seen.insert(e.beta(r).unwrap());
            }
            for w in &want {
                assert!(seen.contains(w), "{t}: real root {w} of level <= 5 never enumerated");
            }
        }
    }

    // ---- Order ----

    #[test]
    fn order_blocks_and_directions() {
        let cd = build_cartan("A2~1".parse().unwrap()).unwrap();
        let mut e = enumerator("A2~1");
        let b1 = OrderedRoot::real(1, &mut e).unwrap();
        let b2 = OrderedRoot::real(2, &mut e).unwrap();
        let b0 = OrderedRoot::real(0, &mut e).unwrap();
        let bm1 = OrderedRoot::real(-1, &mut e).unwrap();
        let im11 = OrderedRoot::imaginary(1, 1, &cd);
        let im12 = OrderedRoot::imaginary(1, 2, &cd);
        let im21 = OrderedRoot::imaginary(2, 1, &cd);

        assert_eq!(compare(&b1, &b2), Ordering::Less);
        assert_eq!(compare(&b2, &im21), Ordering::Less);
        assert_eq!(compare(&im21, &im11), Ordering::Less);
        assert_eq!(compare(&im11, &im12), Ordering::Less);
        assert_eq!(compare(&im12, &bm1), Ordering::Less);
        assert_eq!(compare(&bm1, &b0), Ordering::Less);

        let mut all = vec![&b0, &bm1, &im11, &im21, &im12, &b2, &b1];
        all.sort();
        let keys: Vec<_> = all.iter().map(|r| r.kind.clone()).collect();
        assert_eq!(
            keys,
            vec![
                OrderedRootKind::Real { index: 1 },
                OrderedRootKind::Real { index: 2 },
                OrderedRootKind::Imaginary { level: 2, node: 1 },
                OrderedRootKind::Imaginary { level: 1, node: 1 },
                OrderedRootKind::Imaginary { level: 1, node: 2 },
                OrderedRootKind::Real { index: -1 },
                OrderedRootKind::Real { index: 0 },
            ]
        );
    }

    #[test]
    fn imaginary_constructor_validates_existence() {
        let cd = build_cartan("D4~3".parse().unwrap()).unwrap();
        let ok = OrderedRoot::imaginary(3, 2, &cd);
        assert_eq!(ok.weight, cd.delta().scaled(3));
        let res = std::panic::catch_unwind(|| OrderedRoot::imaginary(1, 2, &cd));
        assert!(res.is_err(), "level 1 has no long-node generator");
    }
}
