//! The doubly infinite reflection sequence underlying the convex root
//! order: a reduced word for the product of the fundamental translations,
//! extended to all integer indices by the closing automorphism.

use super::super::cartan::CartanData;
use super::element::{peel, ExtWeylElement, DEFAULT_PEEL_BOUND};
use crate::Result;

/// One period of the reflection sequence.
///
/// `iota[0..N]` is a reduced word for `lambda_1 .. lambda_n` modulo its
/// automorphism component `tau`, assembled block by block; `block_ends[r]`
/// marks the prefix length that realizes `lambda_1 .. lambda_{r+1}`, with
/// `block_taus[r]` the automorphism component of that prefix. The word
/// extends to every integer index by `iota_{N+r} = tau(iota_r)`.
#[derive(Clone, Debug)]
pub struct IotaSequence {
    iota: Vec<usize>,
    tau: Vec<usize>,
    tau_inv: Vec<usize>,
    tau_order: usize,
    block_ends: Vec<usize>,
    block_taus: Vec<Vec<usize>>,
}

/// Builds the sequence for one affine type.
///
/// Each translation contributes its greedy reduced word, conjugated by the
/// automorphism component accumulated so far. Panics if the assembled word
/// fails the reducedness check against a fresh factorization of the full
/// product; that would mean the peeling and the assembly disagree.
pub fn iota_sequence(cd: &CartanData) -> Result<IotaSequence> {
    let mut u = ExtWeylElement::identity(cd);
    let mut iota: Vec<usize> = Vec::new();
    let mut block_ends = Vec::new();
    let mut block_taus = Vec::new();

    for i in 1..=cd.finite_rank() {
        let lam = ExtWeylElement::translation(cd, i)?;
        let lam_word = lam.word().expect("translation caches its word");
        let twist = u.tau().to_vec();
        iota.extend(lam_word.iter().map(|&x| twist[x]));
        u = u.mul(&lam);
        block_ends.push(iota.len());
        block_taus.push(u.tau().to_vec());
    }

    let (direct_word, direct_tau) = peel(cd, u.matrix(), DEFAULT_PEEL_BOUND)?;
    assert_eq!(
        direct_word.len(),
        iota.len(),
        "iota_sequence: assembled word of length {} is not reduced (true length {})",
        iota.len(),
        direct_word.len()
    );
    assert_eq!(direct_tau, u.tau(), "iota_sequence: automorphism mismatch");

    let tau = u.tau().to_vec();
    let mut tau_inv = vec![0; tau.len()];
    for (x, &y) in tau.iter().enumerate() {
        tau_inv[y] = x;
    }
    let tau_order = permutation_order(&tau);

    Ok(IotaSequence { iota, tau, tau_inv, tau_order, block_ends, block_taus })
}

impl IotaSequence {
    /// Period length `N`.
    pub fn period(&self) -> usize {
        self.iota.len()
    }

    /// The closing automorphism.
    pub fn tau(&self) -> &[usize] {
        &self.tau
    }

    /// One period of values, indices `1..=N`.
    pub fn period_values(&self) -> &[usize] {
        &self.iota
    }

    /// Prefix lengths realizing the partial translation products.
    pub fn block_ends(&self) -> &[usize] {
        &self.block_ends
    }

    /// Automorphism components of the partial translation products.
    pub fn block_taus(&self) -> &[Vec<usize>] {
        &self.block_taus
    }

    /// `iota_r` for any nonzero-or-not integer `r`, via periodicity in both
    /// directions.
    pub fn value(&self, r: i64) -> usize {
        let n = self.period() as i64;
        let q = (r - 1).div_euclid(n);
        let idx = (r - 1).rem_euclid(n) as usize;
        let mut v = self.iota[idx];
        let steps = q.rem_euclid(self.tau_order as i64) as usize;
        for _ in 0..steps {
            v = self.tau[v];
        }
        v
    }

    /// `iota` shifted the other way: the inverse automorphism, exposed for
    /// callers that walk indices downward in bulk.
    pub fn tau_inv(&self) -> &[usize] {
        &self.tau_inv
    }
}

fn permutation_order(perm: &[usize]) -> usize {
    let id: Vec<usize> = (0..perm.len()).collect();
    let mut cur = perm.to_vec();
    let mut order = 1;
    while cur != id {
        cur = cur.iter().map(|&x| perm[x]).collect();
        order += 1;
        assert!(order <= 10_000, "permutation_order: runaway");
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::build_cartan;
    use crate::weyl::element::element_from_word;

    fn seq(s: &str) -> (CartanData, IotaSequence) {
        let cd = build_cartan(s.parse().unwrap()).unwrap();
        let seq = iota_sequence(&cd).unwrap();
        (cd, seq)
    }

    #[test]
    fn rank_one_alternates_under_tau() {
        let (_, s) = seq("A1~1");
        assert_eq!(s.period(), 1);
        assert_eq!(s.tau(), &[1, 0]);
        // iota_1 = 0 from the greedy word of lambda_1; the extension
        // alternates 0, 1, 0, 1 in both directions.
        assert_eq!(s.value(1), 0);
        assert_eq!(s.value(2), 1);
        assert_eq!(s.value(3), 0);
        assert_eq!(s.value(0), 1);
        assert_eq!(s.value(-1), 0);
    }

    #[test]
    fn a2_twisted_has_trivial_tau() {
        let (_, s) = seq("A2~2");
        assert_eq!(s.period(), 2);
        assert_eq!(s.tau(), &[0, 1]);
        assert_eq!(s.period_values(), &[0, 1]);
        assert_eq!(s.value(3), 0);
        assert_eq!(s.value(0), 1);
        assert_eq!(s.value(-1), 0);
    }

    #[test]
    fn periodicity_identity_holds() {
        for t in ["A1~1", "A2~1", "C2~1", "A2~2", "A4~2", "A3~2", "D4~3", "G2~1"] {
            let (_, s) = seq(t);
            let n = s.period() as i64;
            for r in 1..=n {
                assert_eq!(s.value(n + r), s.tau()[s.value(r)], "{t}: iota_(N+r) at r={r}");
                assert_eq!(s.tau()[s.value(r - n)], s.value(r), "{t}: iota_(r-N) at r={r}");
            }
        }
    }

    #[test]
    fn period_is_sum_of_translation_lengths() {
        for t in ["A1~1", "A2~1", "C2~1", "A2~2", "A4~2", "A3~2", "D4~3", "G2~1", "F4~1"] {
            let (cd, s) = seq(t);
            let mut total = 0;
            for i in 1..=cd.finite_rank() {
                let lam = ExtWeylElement::translation(&cd, i).unwrap();
                total += lam.word().unwrap().len();
            }
            assert_eq!(s.period(), total, "{t}");
        }
    }

    #[test]
    fn prefix_products_match_translation_products() {
        for t in ["A1~1", "A2~1", "C2~1", "A2~2", "A4~2", "A3~2", "D4~3"] {
            let (cd, s) = seq(t);
            let mut product = ExtWeylElement::identity(&cd);
            for r in 1..=cd.finite_rank() {
                product = product.mul(&ExtWeylElement::translation(&cd, r).unwrap());
                let prefix = &s.period_values()[..s.block_ends()[r - 1]];
                let tau_r = &s.block_taus()[r - 1];
                let rebuilt = element_from_word(&cd, prefix, tau_r).unwrap();
                assert_eq!(rebuilt.matrix(), product.matrix(), "{t}: prefix r={r}");
                assert_eq!(rebuilt.tau(), product.tau(), "{t}: tau r={r}");
            }
        }
    }
}
