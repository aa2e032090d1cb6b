//! The affine root system: positive-root enumeration and multiplicities.

use std::collections::BTreeSet;

use super::data::CartanData;
use super::weight::Weight;

/// A root together with its multiplicity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Root {
    pub weight: Weight,
    pub multiplicity: usize,
    pub imaginary: bool,
}

/// Root-system queries for one affine type.
///
/// Real roots are `r delta + alpha` with `alpha` a finite root whose loop
/// period divides `r`, plus (for `A_{2n}^(2)` only) the doubled short roots
/// `(2r+1) delta + 2 alpha` at odd levels. Imaginary roots are the nonzero
/// multiples of `delta`, with multiplicity counting the nodes whose loop
/// period divides the level.
#[derive(Clone, Debug)]
pub struct RootSystem {
    cd: CartanData,
    phi0: BTreeSet<Weight>,
    short0: BTreeSet<Weight>,
}

impl RootSystem {
    pub fn new(cd: &CartanData) -> Self {
        let phi0: BTreeSet<Weight> = cd.phi0().iter().cloned().collect();
        let short0 = phi0
            .iter()
            .filter(|r| cd.norm_half(r) == 1)
            .cloned()
            .collect();
        RootSystem { cd: cd.clone(), phi0, short0 }
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cd
    }

    /// Loop period of a finite root: 1 for untwisted types and
    /// `A_{2n}^(2)`, half the squared length otherwise. Constant on Weyl
    /// orbits.
    pub fn root_period(&self, alpha: &Weight) -> i64 {
        assert!(self.phi0.contains(alpha), "root_period: not a finite root");
        let t = self.cd.affine_type();
        if t.twist == 1 || t.is_a2n_2() {
            1
        } else {
            self.cd.norm_half(alpha)
        }
    }

    /// Multiplicity of `w` as a root; 0 when `w` is not a root. Sign and
    /// positivity of `w` do not matter: a root and its negative have the
    /// same multiplicity.
    pub fn multiplicity(&self, w: &Weight) -> usize {
        let (level, fin) = self.cd.level_and_finite_part(w);
        if fin.is_zero() {
            if level == 0 {
                return 0;
            }
            return (1..=self.cd.finite_rank())
                .filter(|&i| self.cd.is_integral_pair(i, level))
                .count();
        }
        if self.phi0.contains(&fin) {
            if level % self.root_period(&fin) == 0 {
                return 1;
            }
            return 0;
        }
        if self.cd.affine_type().is_a2n_2() && level % 2 != 0 {
            if let Some(half) = halve(&fin) {
                if self.short0.contains(&half) {
                    return 1;
                }
            }
        }
        0
    }

    pub fn is_root(&self, w: &Weight) -> bool {
        self.multiplicity(w) > 0
    }

    pub fn is_real_root(&self, w: &Weight) -> bool {
        let (_, fin) = self.cd.level_and_finite_part(w);
        !fin.is_zero() && self.is_root(w)
    }

    /// All positive roots with level at most `level_max` and finite-part
    /// height at most `height_max` in absolute value, sorted by (level,
    /// finite height, coordinates).
    ///
    /// Bounds must be at least 1.
    pub fn positive_roots(&self, level_max: i64, height_max: i64) -> Vec<Root> {
        assert!(level_max >= 1, "positive_roots: level bound must be >= 1");
        assert!(height_max >= 1, "positive_roots: height bound must be >= 1");
        let delta = self.cd.delta();
        let mut out = Vec::new();

        for alpha in &self.phi0 {
            if alpha.height().abs() > height_max {
                continue;
            }
            let period = self.root_period(alpha);
            let start = if alpha.is_positive() { 0 } else { 1 };
            for level in start..=level_max {
                if level % period == 0 {
                    let w = alpha + &delta.scaled(level);
                    out.push(Root { weight: w, multiplicity: 1, imaginary: false });
                }
            }
        }

        if self.cd.affine_type().is_a2n_2() {
            for alpha in &self.short0 {
                let doubled = alpha.scaled(2);
                if doubled.height().abs() > height_max {
                    continue;
                }
                for level in (1..=level_max).step_by(2) {
                    let w = &doubled + &delta.scaled(level);
                    out.push(Root { weight: w, multiplicity: 1, imaginary: false });
                }
            }
        }

        for level in 1..=level_max {
            let mult = self.multiplicity(&delta.scaled(level));
            out.push(Root { weight: delta.scaled(level), multiplicity: mult, imaginary: true });
        }

        out.sort_by_key(|r| {
            let (level, fin) = self.cd.level_and_finite_part(&r.weight);
            (level, fin.height(), fin.coords().to_vec())
        });
        out
    }
}

/// `w / 2` if every coordinate is even.
fn halve(w: &Weight) -> Option<Weight> {
    if w.coords().iter().all(|c| c % 2 == 0) {
        Some(Weight::from_coords(w.coords().iter().map(|c| c / 2).collect()))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::build_cartan;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(&build_cartan(s.parse().unwrap()).unwrap())
    }

    fn weights(roots: &[Root]) -> Vec<Vec<i64>> {
        roots.iter().map(|r| r.weight.coords().to_vec()).collect()
    }

    // ---- Enumeration ----

    #[test]
    fn rank_one_untwisted_level_one() {
        let roots = rs("A1~1").positive_roots(1, 10);
        // a1, delta - a1, delta, delta + a1.
        assert_eq!(weights(&roots), vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![1, 2]]);
        assert_eq!(roots[2].multiplicity, 1);
        assert!(roots[2].imaginary);
    }

    #[test]
    fn a2_twisted_level_one_includes_doubled_roots() {
        let roots = rs("A2~2").positive_roots(1, 10);
        // a1, delta - 2 a1, delta - a1, delta, delta + a1, delta + 2 a1,
        // written in coordinates over (a0, a1) with delta = a0 + 2 a1.
        assert_eq!(
            weights(&roots),
            vec![
                vec![0, 1],
                vec![1, 0],
                vec![1, 1],
                vec![1, 2],
                vec![1, 3],
                vec![1, 4],
            ]
        );
        assert_eq!(roots.len(), 6);
    }

    #[test]
    fn a2_twisted_doubled_roots_only_at_odd_levels() {
        let sys = rs("A2~2");
        let roots = sys.positive_roots(4, 10);
        let delta = sys.cartan().delta();
        let two_a1 = Weight::simple(1, 2).scaled(2);
        for level in 1..=4 {
            let w = &two_a1 + &delta.scaled(level);
            let found = roots.iter().any(|r| r.weight == w);
            assert_eq!(found, level % 2 == 1, "doubled root at level {level}");
        }
    }

    #[test]
    fn triple_twist_long_roots_thin_out() {
        let sys = rs("D4~3");
        let roots = sys.positive_roots(3, 10);
        let delta = sys.cartan().delta();
        // theta = 3 a1 + 2 a2 is long, so it recurs only at levels
        // divisible by 3; the short root a1 recurs at every level.
        let theta = sys.cartan().theta().clone();
        let a1 = Weight::simple(1, 3);
        for level in 1..=3 {
            let has_theta = roots.iter().any(|r| r.weight == &theta + &delta.scaled(level));
            let has_a1 = roots.iter().any(|r| r.weight == &a1 + &delta.scaled(level));
            assert_eq!(has_theta, level == 3, "long root at level {level}");
            assert!(has_a1, "short root at level {level}");
        }
    }

    #[test]
    fn imaginary_multiplicities() {
        let sys = rs("D4~3");
        let delta = sys.cartan().delta();
        assert_eq!(sys.multiplicity(&delta), 1);
        assert_eq!(sys.multiplicity(&delta.scaled(2)), 1);
        assert_eq!(sys.multiplicity(&delta.scaled(3)), 2);
        assert_eq!(sys.multiplicity(&delta.scaled(-3)), 2);

        // Untwisted: every level has the full rank.
        let sys = rs("C2~1");
        let delta = sys.cartan().delta();
        assert_eq!(sys.multiplicity(&delta), 2);
        assert_eq!(sys.multiplicity(&delta.scaled(5)), 2);
    }

    #[test]
    fn multiplicity_rejects_non_roots() {
        let sys = rs("A1~1");
        assert_eq!(sys.multiplicity(&Weight::zero(2)), 0);
        // 3 a1 is not a root, nor is 2 a1 outside A_{2n}^(2).
        assert_eq!(sys.multiplicity(&Weight::simple(1, 2).scaled(3)), 0);
        assert_eq!(sys.multiplicity(&Weight::simple(1, 2).scaled(2)), 0);

        let sys = rs("A2~2");
        // 2 a1 alone (level 0) is not a root; 2 a1 + delta is.
        let two_a1 = Weight::simple(1, 2).scaled(2);
        assert_eq!(sys.multiplicity(&two_a1), 0);
        assert_eq!(sys.multiplicity(&(&two_a1 + &sys.cartan().delta())), 1);
        assert_eq!(sys.multiplicity(&Weight::simple(1, 2).scaled(4)), 0);
    }

    #[test]
    fn negative_real_roots_count_once() {
        let sys = rs("A2~1");
        let a1 = Weight::simple(1, 3);
        let delta = sys.cartan().delta();
        assert_eq!(sys.multiplicity(&-&a1), 1);
        assert_eq!(sys.multiplicity(&(&a1 - &delta)), 1);
        assert!(sys.is_real_root(&(&a1 - &delta)));
        assert!(!sys.is_real_root(&delta));
    }

    // ---- Stability ----

    #[test]
    fn enumerated_real_roots_are_reflection_stable() {
        for s in ["A1~1", "A2~1", "C2~1", "A2~2", "A4~2", "A3~2", "D4~3"] {
            let sys = rs(s);
            let cd = sys.cartan();
            let roots = sys.positive_roots(4, 100);
            for root in &roots {
                for i in 0..cd.size() {
                    let image = cd.simple_reflection(i, &root.weight);
                    assert_eq!(
                        sys.multiplicity(&image),
                        root.multiplicity,
                        "reflection s_{i} breaks multiplicity of {} in {s}",
                        root.weight
                    );
                }
            }
        }
    }

    #[test]
    fn doubled_roots_have_norm_eight() {
        let sys = rs("A4~2");
        let cd = sys.cartan();
        for root in sys.positive_roots(3, 100) {
            let (level, fin) = cd.level_and_finite_part(&root.weight);
            if root.imaginary {
                continue;
            }
            let norm = cd.bilinear(&root.weight, &root.weight);
            if halve(&fin).map(|h| sys.phi0.contains(&h)).unwrap_or(false) {
                assert_eq!(norm, 8, "doubled root norm at {}", root.weight);
                assert_eq!(level % 2, 1);
            } else {
                assert!(norm == 2 || norm == 4, "real root norm at {}", root.weight);
            }
        }
    }
}
