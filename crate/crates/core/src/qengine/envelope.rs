//! Multiset counting for the enveloping algebra of the positive loop half.

use std::collections::HashMap;

use crate::cartan::{CartanData, RootSystem, Weight};

/// Graded dimension counting for the enveloping algebra of the positive
/// half of the loop algebra. A degree-`d` basis of the envelope consists of
/// the unordered products of graded basis elements of the positive half
/// with degrees summing to `d`, so the dimension is a multiset count driven
/// by the root multiplicities.
pub struct EnvelopeCounter {
    cd: CartanData,
    roots: RootSystem,
}

impl EnvelopeCounter {
    pub fn new(cd: &CartanData) -> Self {
        EnvelopeCounter { cd: cd.clone(), roots: RootSystem::new(cd) }
    }

    /// Dimension of the positive loop half at `v`: the root multiplicity
    /// when `v = alpha + r delta` with `alpha` a nonzero sum of finite
    /// simple roots and `r >= 0`, and zero otherwise. Purely imaginary
    /// degrees never enter the positive half.
    pub fn basis_dim(&self, v: &Weight) -> usize {
        let delta = self.cd.delta();
        let d0 = delta.coord(0);
        let c0 = v.coord(0);
        if c0 < 0 || c0 % d0 != 0 {
            return 0;
        }
        let alpha = v - &delta.scaled(c0 / d0);
        if alpha.is_zero() || alpha.coords().iter().any(|&c| c < 0) {
            return 0;
        }
        self.roots.multiplicity(v)
    }

    /// The number of multisets of graded basis elements whose degrees sum
    /// to `d`: a bounded knapsack over the box of degrees dominated by `d`.
    pub fn dim(&self, d: &Weight) -> usize {
        let bound = d.coords();
        if bound.iter().any(|&c| c < 0) {
            return 0;
        }
        let points = box_points(bound);
        let index: HashMap<Vec<i64>, usize> =
            points.iter().enumerate().map(|(k, p)| (p.clone(), k)).collect();
        let mut counts = vec![0usize; points.len()];
        counts[0] = 1;
        for part in &points {
            if part.iter().all(|&c| c == 0) {
                continue;
            }
            let mult = self.basis_dim(&Weight::from_coords(part.clone()));
            for _ in 0..mult {
                for k in 0..points.len() {
                    let v = &points[k];
                    if v.iter().zip(part).any(|(&a, &b)| a < b) {
                        continue;
                    }
                    let prev: Vec<i64> = v.iter().zip(part).map(|(&a, &b)| a - b).collect();
                    let below = counts[index[&prev]];
                    counts[k] += below;
                }
            }
        }
        counts[points.len() - 1]
    }
}

/// One-off envelope dimension straight from the root multiplicities.
pub fn envelope_dim(cd: &CartanData, d: &Weight) -> usize {
    EnvelopeCounter::new(cd).dim(d)
}

/// Lattice points componentwise between zero and `bound`, ascending
/// lexicographically, so every point follows all the points it dominates.
fn box_points(bound: &[i64]) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = vec![0; bound.len()];
    loop {
        out.push(cur.clone());
        let mut pos = bound.len();
        while pos > 0 {
            pos -= 1;
            if cur[pos] < bound[pos] {
                cur[pos] += 1;
                for c in cur.iter_mut().skip(pos + 1) {
                    *c = 0;
                }
                break;
            }
            if pos == 0 {
                return out;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::build_cartan;

    fn cartan(name: &str) -> CartanData {
        build_cartan(name.parse().unwrap()).unwrap()
    }

    fn degree(cd: &CartanData, finite: &[i64], level: i64) -> Weight {
        let mut coords = vec![0; cd.size()];
        for (k, &c) in finite.iter().enumerate() {
            coords[k + 1] = c;
        }
        &Weight::from_coords(coords) + &cd.delta().scaled(level)
    }

    #[test]
    fn box_points_respect_dominance_order() {
        let points = box_points(&[1, 2]);
        assert_eq!(points.len(), 6);
        assert_eq!(points[0], vec![0, 0]);
        assert_eq!(points.last().unwrap(), &vec![1, 2]);
        for (k, p) in points.iter().enumerate() {
            for q in &points[k + 1..] {
                assert!(!q.iter().zip(p).all(|(&a, &b)| a <= b) || q == p);
            }
        }
    }

    #[test]
    fn simple_degrees_have_dimension_one() {
        for name in ["A1~1", "A2~1", "A2~2", "D4~3"] {
            let cd = cartan(name);
            let counter = EnvelopeCounter::new(&cd);
            for i in 0..cd.finite_rank() {
                let mut finite = vec![0; cd.finite_rank()];
                finite[i] = 1;
                assert_eq!(counter.dim(&degree(&cd, &finite, 0)), 1, "{name}");
            }
        }
    }

    #[test]
    fn two_block_degree_counts_the_frozen_multisets() {
        let cd = cartan("A1~1");
        assert_eq!(envelope_dim(&cd, &degree(&cd, &[2], 1)), 1);
    }

    #[test]
    fn level_zero_height_three_degree_counts_both_multisets() {
        let cd = cartan("A2~1");
        assert_eq!(envelope_dim(&cd, &degree(&cd, &[2, 1], 0)), 2);
    }

    #[test]
    fn purely_imaginary_degrees_never_contribute_basis_vectors() {
        let cd = cartan("A2~1");
        let counter = EnvelopeCounter::new(&cd);
        assert_eq!(counter.basis_dim(&cd.delta().scaled(1)), 0);
        assert_eq!(counter.basis_dim(&cd.delta().scaled(2)), 0);
        assert_eq!(counter.basis_dim(&degree(&cd, &[1, 0], 1)), 1);
    }

    #[test]
    fn counting_matches_a_direct_multiset_enumeration() {
        for (name, finite_cap, level_cap) in
            [("A2~1", 2, 2), ("A2~2", 3, 3), ("D4~3", 2, 2)]
        {
            let cd = cartan(name);
            let counter = EnvelopeCounter::new(&cd);
            let mut targets = Vec::new();
            for finite in box_points(&vec![finite_cap; cd.finite_rank()]) {
                for level in 0..=level_cap {
                    targets.push(degree(&cd, &finite, level));
                }
            }
            for d in targets {
                if d.coords().iter().any(|&c| c < 0) {
                    continue;
                }
                let parts: Vec<(Vec<i64>, usize)> = box_points(d.coords())
                    .into_iter()
                    .filter(|p| p.iter().any(|&c| c > 0))
                    .map(|p| {
                        let m = counter.basis_dim(&Weight::from_coords(p.clone()));
                        (p, m)
                    })
                    .filter(|(_, m)| *m > 0)
                    .collect();
                let brute = count_multisets(&parts, d.coords(), 0);
                assert_eq!(counter.dim(&d), brute, "{name} at {:?}", d);
            }
        }
    }

    fn count_multisets(parts: &[(Vec<i64>, usize)], target: &[i64], from: usize) -> usize {
        if target.iter().all(|&c| c == 0) {
            return 1;
        }
        if from == parts.len() {
            return 0;
        }
        let (p, m) = &parts[from];
        let mut total = 0usize;
        let mut copies = 0i64;
        loop {
            let rest: Vec<i64> = target
                .iter()
                .zip(p)
                .map(|(&t, &c)| t - copies * c)
                .collect();
            if rest.iter().any(|&c| c < 0) {
                break;
            }
            total += choose(copies as usize + m - 1, m - 1) * count_multisets(parts, &rest, from + 1);
            copies += 1;
        }
        total
    }

    fn choose(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        let mut out = 1usize;
        for t in 0..k {
            out = out * (n - t) / (t + 1);
        }
        out
    }
}
