//! Sign assignments on the finite nodes: a map `o : {1..n} -> {+1, -1}`
//! with `o(i) o(j) = -1` whenever `a_ij != 0` and `i != j`, refined by the
//! constraint that in a doubly-twisted type outside the doubled-node family
//! every node with an outgoing `-2` entry gets `+1`.

use super::super::cartan::CartanData;
use crate::{Error, Result};

/// Picks the lexicographically first valid sign vector, preferring `+1`.
/// Entry 0 (the affine node) is left as 0; entries `1..=n` are `1` or `-1`.
pub fn choose_o_map(cd: &CartanData) -> Result<Vec<i8>> {
    let n = cd.finite_rank();
    let mut o = vec![0i8; cd.size()];
    let pinning = cd.affine_type().twist >= 2 && !cd.affine_type().is_a2n_2();
    if pinning {
        for i in 1..=n {
            for j in 1..=n {
                if i != j && cd.a(i, j) == -2 {
                    if o[i] == -1 {
                        return Err(Error::BadType(format!(
                            "conflicting sign constraints at node {i}"
                        )));
                    }
                    o[i] = 1;
                }
            }
        }
    }
    // The finite diagram is a forest, so each connected component is
    // two-colorable and the coloring is determined by one node. Walk each
    // component from a pinned node when it has one, otherwise seed its
    // lowest node with +1; that makes the result lexicographically first
    // among valid assignments, since flipping an unpinned component stays
    // valid and a pinned one has no freedom.
    let mut visited = vec![false; cd.size()];
    for start in 1..=n {
        if visited[start] {
            continue;
        }
        let mut component = vec![start];
        let mut stack = vec![start];
        visited[start] = true;
        while let Some(v) = stack.pop() {
            for u in 1..=n {
                if u != v && cd.a(v, u) != 0 && !visited[u] {
                    visited[u] = true;
                    component.push(u);
                    stack.push(u);
                }
            }
        }
        component.sort_unstable();
        let seed = *component.iter().find(|&&v| o[v] != 0).unwrap_or(&component[0]);
        if o[seed] == 0 {
            o[seed] = 1;
        }
        let mut stack = vec![seed];
        let mut colored = vec![false; cd.size()];
        colored[seed] = true;
        while let Some(v) = stack.pop() {
            for u in 1..=n {
                if u != v && cd.a(v, u) != 0 && !colored[u] {
                    colored[u] = true;
                    let forced = -o[v];
                    if o[u] == 0 {
                        o[u] = forced;
                    } else if o[u] != forced {
                        return Err(Error::BadType(format!(
                            "sign constraints are unsatisfiable at edge {v}-{u}"
                        )));
                    }
                    stack.push(u);
                }
            }
        }
    }
    // Alternation guard over every edge, including ones between two pins.
    for i in 1..=n {
        for j in 1..=n {
            if i != j && cd.a(i, j) != 0 {
                assert_eq!(o[i] * o[j], -1, "choose_o_map: adjacent nodes {i},{j} share a sign");
            }
        }
    }
    Ok(o)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::build_cartan;

    fn omap(s: &str) -> Vec<i8> {
        choose_o_map(&build_cartan(s.parse().unwrap()).unwrap()).unwrap()
    }

    // ---- Untwisted and doubled-node types: pure alternation ----

    #[test]
    fn untwisted_prefers_plus_at_the_low_node() {
        assert_eq!(omap("A1~1"), vec![0, 1]);
        assert_eq!(omap("A2~1"), vec![0, 1, -1]);
        assert_eq!(omap("C2~1"), vec![0, 1, -1]);
        assert_eq!(omap("G2~1"), vec![0, 1, -1]);
        assert_eq!(omap("A4~1"), vec![0, 1, -1, 1, -1]);
    }

    #[test]
    fn doubled_node_family_is_exempt_from_pinning() {
        assert_eq!(omap("A2~2"), vec![0, 1]);
        assert_eq!(omap("A4~2"), vec![0, 1, -1]);
    }

    // ---- Twisted pinning ----

    #[test]
    fn twisted_types_pin_the_doubling_source() {
        // A3~2 finite part is C_2 with a_12 = -2, so node 1 is pinned +1.
        assert_eq!(omap("A3~2"), vec![0, 1, -1]);
        // D3~2 finite part is B_2 with a_21 = -2, so node 2 is pinned +1.
        assert_eq!(omap("D3~2"), vec![0, -1, 1]);
        // D4~3 has a_12 = -3, no -2 entries, so no pin applies.
        assert_eq!(omap("D4~3"), vec![0, 1, -1]);
    }

    #[test]
    fn longer_twisted_chains_alternate_from_the_pin() {
        // A5~2 finite part is C_3: a_23 = -2 pins node 2... except the pin
        // sits mid-chain, so alternation walks outward from it.
        let o = omap("A5~2");
        let cd = build_cartan("A5~2".parse().unwrap()).unwrap();
        let pinned: Vec<usize> = (1..=3)
            .filter(|&i| (1..=3).any(|j| j != i && cd.a(i, j) == -2))
            .collect();
        for &i in &pinned {
            assert_eq!(o[i], 1, "pinned node {i} must be +1");
        }
        for i in 1..=3 {
            for j in 1..=3 {
                if i != j && cd.a(i, j) != 0 {
                    assert_eq!(o[i] * o[j], -1);
                }
            }
        }
    }

    #[test]
    fn every_registry_type_yields_a_valid_assignment() {
        for t in crate::cartan::AffineType::registry() {
            let cd = build_cartan(t).unwrap();
            let o = choose_o_map(&cd).unwrap();
            assert_eq!(o[0], 0, "{t}: affine node must stay 0");
            for i in 1..=cd.finite_rank() {
                assert!(o[i] == 1 || o[i] == -1, "{t}: node {i} unassigned");
                for j in 1..=cd.finite_rank() {
                    if i != j && cd.a(i, j) != 0 {
                        assert_eq!(o[i] * o[j], -1, "{t}: nodes {i},{j} clash");
                    }
                }
            }
        }
    }
}
