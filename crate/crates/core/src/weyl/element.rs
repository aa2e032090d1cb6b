//! Elements of the extended affine Weyl group, represented by their linear
//! action on the root lattice plus a diagram-automorphism component.

use super::super::cartan::{CartanData, Weight};
use crate::{Error, Result};

pub type Mat = Vec<Vec<i64>>;

/// Default cap on greedy peeling steps; lengths in this project stay far
/// below it (the longest translation products over the registry are in the
/// hundreds).
pub const DEFAULT_PEEL_BOUND: usize = 100_000;

/// An element `w * tau` with `w` in the affine Weyl group and `tau` a
/// diagram automorphism.
///
/// `m` is the matrix of the full action on coordinates (column `j` holds
/// the image of `alpha_j`); `tau` is the automorphism component, which is
/// well defined because the Weyl group is normal in the extended group.
/// `word` caches a reduced expression `s_{word[0]} .. s_{word[l-1]} * tau`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtWeylElement {
    m: Mat,
    tau: Vec<usize>,
    word: Option<Vec<usize>>,
}

impl ExtWeylElement {
    pub fn identity(cd: &CartanData) -> Self {
        let size = cd.size();
        ExtWeylElement {
            m: mat_identity(size),
            tau: (0..size).collect(),
            word: Some(Vec::new()),
        }
    }

    pub fn reflection(cd: &CartanData, i: usize) -> Self {
        ExtWeylElement {
            m: reflection_matrix(cd, i),
            tau: (0..cd.size()).collect(),
            word: Some(vec![i]),
        }
    }

    /// A diagram automorphism given as a node permutation; errors unless it
    /// preserves the Cartan matrix.
    pub fn automorphism(cd: &CartanData, perm: Vec<usize>) -> Result<Self> {
        let size = cd.size();
        let mut seen = vec![false; size];
        if perm.len() != size || perm.iter().any(|&p| p >= size || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::NotWeyl("automorphism: not a permutation".into()));
        }
        for i in 0..size {
            for j in 0..size {
                if cd.a(perm[i], perm[j]) != cd.a(i, j) {
                    return Err(Error::NotWeyl(
                        "automorphism: permutation does not preserve the Cartan matrix".into(),
                    ));
                }
            }
        }
        let mut m = vec![vec![0; size]; size];
        for (j, row) in perm.iter().enumerate() {
            m[*row][j] = 1;
        }
        Ok(ExtWeylElement { m, tau: perm, word: Some(Vec::new()) })
    }

    /// The translation by `d~_i` times the `i`-th fundamental coweight:
    /// `alpha_j -> alpha_j - <lambda_i | alpha_j> delta` with the pairing
    /// `delta_ij d~_i` on finite nodes and fixed `delta`. The reduced word
    /// and automorphism component are recovered by greedy peeling.
    pub fn translation(cd: &CartanData, i: usize) -> Result<Self> {
        assert!(
            (1..=cd.finite_rank()).contains(&i),
            "translation: node {i} is not a finite node"
        );
        let size = cd.size();
        let delta = cd.delta_marks();
        let mut m = mat_identity(size);
        for r in 0..size {
            // <lambda_i | alpha_0> = -delta_1 ... balances <lambda_i | delta> = 0.
            m[r][i] -= cd.d_tilde(i) * delta[r];
            m[r][0] += cd.d_tilde(i) * delta[i] * delta[r];
        }
        let (word, tau) = peel(cd, &m, DEFAULT_PEEL_BOUND)?;
        Ok(ExtWeylElement { m, tau, word: Some(word) })
    }

    pub fn act(&self, w: &Weight) -> Weight {
        Weight::from_coords(mat_act(&self.m, w.coords()))
    }

    /// Group product `self * rhs` (apply `rhs` first).
    pub fn mul(&self, rhs: &ExtWeylElement) -> ExtWeylElement {
        let tau = (0..self.tau.len()).map(|x| self.tau[rhs.tau[x]]).collect();
        ExtWeylElement { m: mat_mul(&self.m, &rhs.m), tau, word: None }
    }

    pub fn matrix(&self) -> &Mat {
        &self.m
    }

    /// The diagram-automorphism component.
    pub fn tau(&self) -> &[usize] {
        &self.tau
    }

    /// Cached reduced word, if one was computed at construction time.
    pub fn word(&self) -> Option<&[usize]> {
        self.word.as_deref()
    }

    /// Right-descent set: nodes `i` with `w(alpha_i)` negative.
    pub fn descents(&self, cd: &CartanData) -> Vec<usize> {
        (0..cd.size()).filter(|&i| column_is_negative(&self.m, i)).collect()
    }

    /// Length (number of greedy peeling steps) and the descent set.
    pub fn length_and_descents(&self, cd: &CartanData) -> Result<(usize, Vec<usize>)> {
        let (word, _) = peel(cd, &self.m, DEFAULT_PEEL_BOUND)?;
        Ok((word.len(), self.descents(cd)))
    }

    /// Recomputes the reduced word and automorphism component from the
    /// matrix and caches the word.
    pub fn resolve(&mut self, cd: &CartanData) -> Result<()> {
        let (word, tau) = peel(cd, &self.m, DEFAULT_PEEL_BOUND)?;
        assert_eq!(tau, self.tau, "resolve: tracked automorphism disagrees with peeling");
        self.word = Some(word);
        Ok(())
    }
}

/// Greedy factorization `M = s_{w_1} .. s_{w_l} * tau`: repeatedly strips
/// the smallest right descent until only a diagram automorphism remains.
///
/// Errors with `NotWeyl` if the step bound is exceeded or the descent-free
/// remainder is not a diagram automorphism.
pub fn peel(cd: &CartanData, m: &Mat, bound: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    let size = cd.size();
    let mut cur = m.clone();
    let mut peeled = Vec::new();
    loop {
        match (0..size).find(|&i| column_is_negative(&cur, i)) {
            Some(i) => {
                if peeled.len() >= bound {
                    return Err(Error::NotWeyl(format!(
                        "peeling exceeded {bound} steps; input is not in the extended group \
                         or the bound is too small"
                    )));
                }
                cur = mat_mul(&cur, &reflection_matrix(cd, i));
                peeled.push(i);
            }
            None => break,
        }
    }
    let tau = permutation_of(&cur).ok_or_else(|| {
        Error::NotWeyl("descent-free remainder is not a permutation matrix".into())
    })?;
    for i in 0..size {
        for j in 0..size {
            if cd.a(tau[i], tau[j]) != cd.a(i, j) {
                return Err(Error::NotWeyl(
                    "remainder permutation does not preserve the Cartan matrix".into(),
                ));
            }
        }
    }
    // M = R s_{i_k} .. s_{i_1} with R the automorphism; moving R to the
    // right conjugates each letter.
    let word = peeled.iter().rev().map(|&i| tau[i]).collect();
    Ok((word, tau))
}

/// Evaluates a word-with-automorphism expression back into an element.
pub fn element_from_word(cd: &CartanData, word: &[usize], tau: &[usize]) -> Result<ExtWeylElement> {
    let mut e = ExtWeylElement::automorphism(cd, tau.to_vec())?;
    for &i in word.iter().rev() {
        e = ExtWeylElement::reflection(cd, i).mul(&e);
    }
    Ok(e)
}

pub fn mat_identity(size: usize) -> Mat {
    let mut m = vec![vec![0; size]; size];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let size = a.len();
    let mut out = vec![vec![0; size]; size];
    for i in 0..size {
        for k in 0..size {
            let v = a[i][k];
            if v == 0 {
                continue;
            }
            for j in 0..size {
                out[i][j] += v * b[k][j];
            }
        }
    }
    out
}

pub fn mat_act(m: &Mat, coords: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(coords).map(|(a, c)| a * c).sum())
        .collect()
}

pub fn reflection_matrix(cd: &CartanData, i: usize) -> Mat {
    let size = cd.size();
    let mut m = mat_identity(size);
    for j in 0..size {
        m[i][j] -= cd.a(i, j);
    }
    m
}

/// True if column `j` is the coordinate vector of a negative-cone element.
fn column_is_negative(m: &Mat, j: usize) -> bool {
    let mut nonzero = false;
    for row in m {
        if row[j] > 0 {
            return false;
        }
        nonzero |= row[j] != 0;
    }
    nonzero
}

/// The permutation `sigma` if `m` maps `alpha_j` to `alpha_sigma(j)` for
/// all `j`.
fn permutation_of(m: &Mat) -> Option<Vec<usize>> {
    let size = m.len();
    let mut perm = Vec::with_capacity(size);
    let mut used = vec![false; size];
    for j in 0..size {
        let mut image = None;
        for (i, row) in m.iter().enumerate() {
            match row[j] {
                0 => {}
                1 if image.is_none() => image = Some(i),
                _ => return None,
            }
        }
        let i = image?;
        if std::mem::replace(&mut used[i], true) {
            return None;
        }
        perm.push(i);
    }
    Some(perm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::build_cartan;

    fn cd(s: &str) -> CartanData {
        build_cartan(s.parse().unwrap()).unwrap()
    }

    // ---- Reflections ----

    #[test]
    fn reflection_matches_cartan_action() {
        let c = cd("A1~1");
        let s1 = ExtWeylElement::reflection(&c, 1);
        // s_1(alpha_0) = alpha_0 + 2 alpha_1 = delta + alpha_1.
        assert_eq!(s1.act(&Weight::simple(0, 2)).coords(), &[1, 2]);
        assert_eq!(s1.act(&c.delta()), c.delta());
        let twice = s1.mul(&s1);
        assert_eq!(twice, ExtWeylElement::identity(&c).mul(&twice));
        assert_eq!(twice.matrix(), &mat_identity(2));
    }

    #[test]
    fn reflections_preserve_the_form() {
        for s in ["A2~2", "C2~1", "D4~3"] {
            let c = cd(s);
            for i in 0..c.size() {
                let w = ExtWeylElement::reflection(&c, i);
                for p in 0..c.size() {
                    for q in 0..c.size() {
                        let a = Weight::simple(p, c.size());
                        let b = Weight::simple(q, c.size());
                        assert_eq!(
                            c.bilinear(&w.act(&a), &w.act(&b)),
                            c.bilinear(&a, &b),
                            "form broken by s_{i} in {s}"
                        );
                    }
                }
            }
        }
    }

    // ---- Translations ----

    #[test]
    fn translation_action_on_simple_roots() {
        let c = cd("A1~1");
        let t = ExtWeylElement::translation(&c, 1).unwrap();
        // lambda_1(alpha_1) = alpha_1 - delta = -alpha_0, and
        // lambda_1(alpha_0) = alpha_0 + delta.
        assert_eq!(t.act(&Weight::simple(1, 2)).coords(), &[-1, 0]);
        assert_eq!(t.act(&Weight::simple(0, 2)).coords(), &[2, 1]);
        assert_eq!(t.act(&c.delta()), c.delta());
    }

    #[test]
    fn rank_one_translation_has_length_one_with_twist() {
        let c = cd("A1~1");
        let t = ExtWeylElement::translation(&c, 1).unwrap();
        let (len, descents) = t.length_and_descents(&c).unwrap();
        assert_eq!(len, 1);
        assert_eq!(descents, vec![1]);
        assert_eq!(t.tau(), &[1, 0]);
        assert_eq!(t.word(), Some(&[0][..]));
    }

    #[test]
    fn twisted_translation_factors_without_twist() {
        let c = cd("A2~2");
        let t = ExtWeylElement::translation(&c, 1).unwrap();
        assert_eq!(t.tau(), &[0, 1]);
        assert_eq!(t.word(), Some(&[0, 1][..]));
        let rebuilt = element_from_word(&c, t.word().unwrap(), t.tau()).unwrap();
        assert_eq!(rebuilt.matrix(), t.matrix());
    }

    #[test]
    fn translations_commute() {
        let c = cd("C2~1");
        let t1 = ExtWeylElement::translation(&c, 1).unwrap();
        let t2 = ExtWeylElement::translation(&c, 2).unwrap();
        assert_eq!(t1.mul(&t2).matrix(), t2.mul(&t1).matrix());
    }

    #[test]
    fn scaled_translation_pairing() {
        let c = cd("D4~3");
        // d~_2 = 3, so lambda_2 shifts alpha_2 by 3 delta.
        let t = ExtWeylElement::translation(&c, 2).unwrap();
        let a2 = Weight::simple(2, 3);
        assert_eq!(t.act(&a2), &a2 - &c.delta().scaled(3));
        let a1 = Weight::simple(1, 3);
        assert_eq!(t.act(&a1), a1);
    }

    // ---- Length oracle ----

    /// Counts positive real roots sent negative: the classical length
    /// formula, used as an independent oracle for the peeling count.
    fn negativity_count(c: &CartanData, w: &ExtWeylElement) -> usize {
        let sys = crate::cartan::RootSystem::new(c);
        sys.positive_roots(12, 1000)
            .iter()
            .filter(|r| !r.imaginary && !w.act(&r.weight).is_positive())
            .count()
    }

    #[test]
    fn length_matches_negativity_count() {
        for s in ["A1~1", "A2~1", "A2~2", "C2~1", "A3~2", "D4~3"] {
            let c = cd(s);
            for i in 1..=c.finite_rank() {
                let t = ExtWeylElement::translation(&c, i).unwrap();
                let (len, _) = t.length_and_descents(&c).unwrap();
                assert_eq!(len, negativity_count(&c, &t), "lambda_{i} in {s}");

                let s0 = ExtWeylElement::reflection(&c, 0);
                let prod = t.mul(&s0);
                let (len, _) = prod.length_and_descents(&c).unwrap();
                assert_eq!(len, negativity_count(&c, &prod), "lambda_{i} s_0 in {s}");
            }
        }
    }

    #[test]
    fn identity_and_reflection_lengths() {
        let c = cd("A2~1");
        let id = ExtWeylElement::identity(&c);
        assert_eq!(id.length_and_descents(&c).unwrap(), (0, vec![]));
        let s2 = ExtWeylElement::reflection(&c, 2);
        assert_eq!(s2.length_and_descents(&c).unwrap(), (1, vec![2]));
    }

    // ---- Automorphisms ----

    #[test]
    fn automorphism_validation() {
        let c = cd("A2~1");
        let rot = ExtWeylElement::automorphism(&c, vec![1, 2, 0]).unwrap();
        assert_eq!(rot.act(&Weight::simple(0, 3)), Weight::simple(1, 3));

        let c2 = cd("C2~1");
        // The end-to-end flip preserves the diagram; swapping only the
        // affine node with the middle does not, nor does a non-bijection.
        assert!(ExtWeylElement::automorphism(&c2, vec![2, 1, 0]).is_ok());
        assert!(ExtWeylElement::automorphism(&c2, vec![1, 0, 2]).is_err());
        assert!(ExtWeylElement::automorphism(&c2, vec![0, 0, 1]).is_err());
    }

    #[test]
    fn peel_rejects_non_group_matrices() {
        let c = cd("A1~1");
        // Doubling is not in the extended group: it has no descents yet is
        // not a permutation matrix.
        let m = vec![vec![2, 0], vec![0, 2]];
        assert!(matches!(peel(&c, &m, 100), Err(Error::NotWeyl(_))));
    }
}
