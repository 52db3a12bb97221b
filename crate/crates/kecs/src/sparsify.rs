//! Forest decomposition and the sparse certificate that preserves the
//! maximal k-edge-connected subgraphs: the union of the first
//! 2k(⌈log2 n⌉+1) forests contains every edge the partition depends on,
//! so the solver can run on at most t(n-1) edges.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};

/// Edge-disjoint forests F_1..F_t where each F_i is a maximal spanning
/// forest of the graph minus the earlier forests. Later forests may be
/// empty once the edges run out.
#[derive(Clone, Debug)]
pub struct ForestDecomposition {
    pub forests: Vec<Vec<EdgeId>>,
    /// Edges in none of the forests.
    pub leftover: Vec<EdgeId>,
    pub t: u32,
}

/// Builds a t-forest decomposition by t successive DFS spanning-forest
/// passes over the remaining edges, O(t·m) total.
pub fn forest_decomposition(g: &Graph, t: u32) -> Result<ForestDecomposition> {
    if t < 1 {
        return Err(Error::InvalidForestCount(t));
    }
    let mut assigned = vec![false; g.edge_universe()];
    let mut remaining = g.edge_count();
    let mut forests: Vec<Vec<EdgeId>> = Vec::with_capacity(t as usize);
    let mut seen = vec![0u32; g.universe()];
    let mut stack: Vec<VertexId> = Vec::new();
    for pass in 1..=t {
        let mut forest = Vec::new();
        if remaining > 0 {
            for root in g.vertices() {
                if seen[root.index()] == pass {
                    continue;
                }
                seen[root.index()] = pass;
                stack.push(root);
                while let Some(x) = stack.pop() {
                    for &e in g.incident(x) {
                        if assigned[e.index()] {
                            continue;
                        }
                        let w = g.other_end(e, x);
                        if seen[w.index()] == pass {
                            continue;
                        }
                        seen[w.index()] = pass;
                        assigned[e.index()] = true;
                        forest.push(e);
                        stack.push(w);
                    }
                }
            }
            remaining -= forest.len();
        }
        forest.sort_unstable();
        forests.push(forest);
    }
    let leftover: Vec<EdgeId> = g.edge_ids().filter(|e| !assigned[e.index()]).collect();
    Ok(ForestDecomposition {
        forests,
        leftover,
        t,
    })
}

/// ⌈log2 n⌉ with n <= 1 mapping to 0.
fn ceil_log2(n: usize) -> u32 {
    if n <= 1 {
        0
    } else {
        usize::BITS - (n - 1).leading_zeros()
    }
}

/// Number of forests the certificate keeps: 2k(⌈log2 n⌉ + 1).
pub fn certificate_forest_count(k: u32, n: usize) -> u32 {
    2 * k * (ceil_log2(n) + 1)
}

/// Subgraph on the same vertex set whose maximal k-edge-connected
/// subgraphs equal the input's: the union of the first
/// `certificate_forest_count(k, n)` forests. Has at most t(n-1) edges.
pub fn kecs_certificate(g: &Graph, k: u32) -> Result<Graph> {
    if k < 1 {
        return Err(Error::InvalidK(k));
    }
    let mut out = g.clone();
    if g.edge_count() == 0 {
        return Ok(out);
    }
    let t = certificate_forest_count(k, g.vertex_count());
    let decomposition = forest_decomposition(g, t)?;
    for e in decomposition.leftover {
        out.delete_edge(e)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::reference::brute_partition_recursive_mincut;
    use crate::solver::maximal_kecs;

    struct Dsu(Vec<usize>);

    impl Dsu {
        fn new(n: usize) -> Self {
            Dsu((0..n).collect())
        }
        fn find(&mut self, x: usize) -> usize {
            if self.0[x] != x {
                self.0[x] = self.find(self.0[x]);
            }
            self.0[x]
        }
        fn union(&mut self, x: usize, y: usize) -> bool {
            let (rx, ry) = (self.find(x), self.find(y));
            if rx == ry {
                return false;
            }
            self.0[rx] = ry;
            true
        }
    }

    /// Checks every decomposition invariant directly: forests are
    /// edge-disjoint, each is acyclic, and each is maximal in the graph
    /// minus its predecessors.
    fn validate(g: &Graph, d: &ForestDecomposition) {
        let mut taken = vec![false; g.edge_universe()];
        for forest in &d.forests {
            let mut dsu = Dsu::new(g.universe());
            for &e in forest {
                assert!(!taken[e.index()], "edge {e} in two forests");
                taken[e.index()] = true;
                let (u, v) = g.ends(e);
                assert!(dsu.union(u.index(), v.index()), "cycle through edge {e}");
            }
            // maximality: every edge not yet assigned closes a cycle here
            for e in g.edge_ids() {
                if taken[e.index()] {
                    continue;
                }
                let (u, v) = g.ends(e);
                assert_eq!(
                    dsu.find(u.index()),
                    dsu.find(v.index()),
                    "edge {e} could extend the forest"
                );
            }
        }
        for &e in &d.leftover {
            assert!(!taken[e.index()]);
        }
        let total: usize = d.forests.iter().map(Vec::len).sum::<usize>() + d.leftover.len();
        assert_eq!(total, g.edge_count());
    }

    #[test]
    fn tree_is_its_own_first_forest() {
        let g = gen::tree(8, 3).unwrap();
        let d = forest_decomposition(&g, 1).unwrap();
        assert_eq!(d.forests[0].len(), g.edge_count());
        assert!(d.leftover.is_empty());
        validate(&g, &d);
    }

    #[test]
    fn parallel_edges_spread_one_per_forest() {
        let g = Graph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        let d = forest_decomposition(&g, 3).unwrap();
        for forest in &d.forests {
            assert_eq!(forest.len(), 1);
        }
        validate(&g, &d);
    }

    #[test]
    fn k4_two_passes() {
        let g = gen::two_cliques(4, 0, 0).unwrap();
        let d = forest_decomposition(&g, 2).unwrap();
        // first pass: spanning tree; second: spanning forest of the
        // leftover triangle, whose third edge closes a cycle
        assert_eq!(d.forests[0].len(), 3);
        assert_eq!(d.forests[1].len(), 2);
        assert_eq!(d.leftover.len(), 1);
        validate(&g, &d);
    }

    #[test]
    fn zero_forests_rejected() {
        let g = gen::cycle(4).unwrap();
        assert_eq!(
            forest_decomposition(&g, 0).unwrap_err(),
            Error::InvalidForestCount(0)
        );
    }

    #[test]
    fn decomposition_invariants_on_random_graphs() {
        for seed in 0..8 {
            let g = gen::random_multigraph(12, 40, seed).unwrap();
            for t in [1, 2, 5] {
                validate(&g, &forest_decomposition(&g, t).unwrap());
            }
        }
    }

    #[test]
    fn certificate_of_tree_is_the_tree() {
        let g = gen::tree(9, 1).unwrap();
        let cert = kecs_certificate(&g, 2).unwrap();
        assert_eq!(cert.edge_count(), g.edge_count());
        let ids: Vec<EdgeId> = cert.edge_ids().collect();
        let orig: Vec<EdgeId> = g.edge_ids().collect();
        assert_eq!(ids, orig);
    }

    #[test]
    fn certificate_of_small_cycle_is_whole() {
        let g = gen::cycle(6).unwrap();
        let cert = kecs_certificate(&g, 2).unwrap();
        assert_eq!(cert.edge_count(), 6);
    }

    #[test]
    fn certificate_edge_bound_holds() {
        let g = gen::random_multigraph(40, 300, 9).unwrap();
        let k = 3;
        let cert = kecs_certificate(&g, k).unwrap();
        let t = certificate_forest_count(k, g.vertex_count()) as usize;
        assert!(cert.edge_count() <= t * (g.vertex_count() - 1));
    }

    #[test]
    fn certificate_preserves_partition() {
        let g = gen::random_multigraph(40, 300, 4).unwrap();
        let k = 3;
        let cert = kecs_certificate(&g, k).unwrap();
        let a = maximal_kecs(&cert, k).unwrap().partition;
        let b = brute_partition_recursive_mincut(&g, k).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn certificate_preserves_partition_small_sweep() {
        for seed in 0..12 {
            let n = 5 + (seed as usize) % 12;
            let g = gen::random_multigraph(n, 3 * n, seed).unwrap();
            for k in 2..=5 {
                let cert = kecs_certificate(&g, k).unwrap();
                assert_eq!(
                    brute_partition_recursive_mincut(&cert, k).unwrap(),
                    brute_partition_recursive_mincut(&g, k).unwrap(),
                    "n={n} k={k} seed={seed}"
                );
            }
        }
    }

    #[test]
    fn forest_count_formula() {
        assert_eq!(certificate_forest_count(3, 1), 6);
        assert_eq!(certificate_forest_count(3, 2), 12);
        assert_eq!(certificate_forest_count(2, 64), 28);
        assert_eq!(certificate_forest_count(2, 65), 32);
    }
}
