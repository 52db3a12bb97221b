//! Maintenance of the maximal k-edge-connected subgraphs under a stream of
//! edge deletions, with O(1) same-part queries.
//!
//! Each part keeps its induced live subgraph together with a live oracle.
//! Deleting an edge inside a part re-runs the work-list loop seeded with
//! just the edge's endpoints: if the part is still k-edge-connected that
//! costs a single query, otherwise the part splits and the pieces get
//! fresh graphs and oracles. Deletions between parts only touch the
//! bookkeeping graph; parts never re-merge.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexPartition};
use crate::oracle::{BaselineOracle, ConnectivityOracle, CostCounters};
use crate::solver::{maximal_kecs, solve_list, NoObserver, WorkList};

struct Part {
    /// Members in root ids, ascending.
    members: Vec<VertexId>,
    /// Local vertex universe of `graph` back to root ids.
    to_root: Vec<VertexId>,
    /// Induced subgraph on `members` minus all deletions so far.
    graph: Graph,
    oracle: BaselineOracle,
}

pub struct DecrementalState {
    k: u32,
    /// The original graph minus every deletion so far, in root ids.
    global: Graph,
    parts: Vec<Option<Part>>,
    part_of: Vec<u32>,
    local_of: Vec<u32>,
    counters: CostCounters,
    max_recursion_depth: u32,
}

impl DecrementalState {
    /// Preprocesses `g`: computes the partition once, then materializes a
    /// live graph and oracle per part.
    pub fn init(g: &Graph, k: u32) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidK(k));
        }
        let solved = maximal_kecs(g, k)?;
        let mut state = DecrementalState {
            k,
            global: g.clone(),
            parts: Vec::with_capacity(solved.partition.len()),
            part_of: vec![0; g.universe()],
            local_of: vec![0; g.universe()],
            counters: solved.stats.counters,
            max_recursion_depth: solved.stats.recursion_depth,
        };
        for members in solved.partition.parts() {
            state.install_part(members.clone())?;
        }
        Ok(state)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// The original graph with all recorded deletions applied.
    pub fn remaining_graph(&self) -> &Graph {
        &self.global
    }

    /// Aggregate oracle work across preprocessing and all updates.
    pub fn counters(&self) -> CostCounters {
        self.counters
    }

    pub fn max_recursion_depth(&self) -> u32 {
        self.max_recursion_depth
    }

    fn install_part(&mut self, members: Vec<VertexId>) -> Result<usize> {
        let pid = self.parts.len() as u32;
        let graph = self.global.induced_subgraph(&members)?;
        let oracle = BaselineOracle::init(&graph, self.k)?;
        self.counters += oracle.counters();
        for (rank, &v) in members.iter().enumerate() {
            self.part_of[v.index()] = pid;
            self.local_of[v.index()] = rank as u32;
        }
        self.parts.push(Some(Part {
            to_root: members.clone(),
            members,
            graph,
            oracle,
        }));
        Ok(pid as usize)
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if self.global.contains_vertex(v) {
            Ok(())
        } else {
            Err(Error::NoSuchVertex(v.0))
        }
    }

    /// Deletes the lowest-id surviving edge between `u` and `v`.
    ///
    /// Returns the ids of the parts that changed: empty when the partition
    /// is untouched (cross-part edge, or the part stayed k-edge-connected),
    /// otherwise the reused id of the shrunken part followed by the ids of
    /// the parts split off from it.
    pub fn delete(&mut self, u: VertexId, v: VertexId) -> Result<Vec<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let edge = self
            .global
            .find_edge(u, v)
            .ok_or(Error::NoSuchEndpointEdge {
                u: self.global.label(u),
                v: self.global.label(v),
            })?;
        self.global.delete_edge(edge)?;
        if self.part_of[u.index()] != self.part_of[v.index()] {
            // between parts: recorded, but the partition cannot change
            return Ok(Vec::new());
        }
        let pid = self.part_of[u.index()] as usize;
        let part = self.parts[pid].take().expect("live part");
        let local_u = VertexId(self.local_of[u.index()]);
        let local_v = VertexId(self.local_of[v.index()]);
        let local_edge = part
            .graph
            .incident(local_u)
            .iter()
            .copied()
            .find(|&e| part.graph.edge_origin(e) == edge)
            .expect("part graph mirrors the global edge");
        let Part {
            members,
            to_root,
            mut graph,
            mut oracle,
        } = part;
        let before = oracle.counters();
        graph.delete_edge(local_edge)?;
        oracle.delete(local_edge)?;
        self.counters += oracle.counters() - before;
        // the update call: the endpoints seed the work list
        let list = WorkList::from_members(graph.universe(), [local_u, local_v]);
        let run = solve_list(graph, oracle, list, &mut NoObserver)?;
        self.counters += run.stats.counters;
        self.max_recursion_depth = self.max_recursion_depth.max(run.stats.recursion_depth);
        if run.parts.len() == 1 {
            // still k-edge-connected: keep the live graph and oracle
            self.parts[pid] = Some(Part {
                members,
                to_root,
                graph: run.residual_graph,
                oracle: run.residual_oracle,
            });
            return Ok(Vec::new());
        }
        let mut changed = vec![pid];
        let (residual_local, split_off) = run.parts.split_last().expect("at least one part");
        for local_part in split_off {
            let mut roots: Vec<VertexId> =
                local_part.iter().map(|lv| to_root[lv.index()]).collect();
            roots.sort_unstable();
            changed.push(self.install_part(roots)?);
        }
        let mut residual_roots: Vec<VertexId> = residual_local
            .iter()
            .map(|lv| to_root[lv.index()])
            .collect();
        residual_roots.sort_unstable();
        // the residual keeps its id, local ids, live graph, and oracle
        self.parts[pid] = Some(Part {
            members: residual_roots,
            to_root,
            graph: run.residual_graph,
            oracle: run.residual_oracle,
        });
        Ok(changed)
    }

    /// O(1): do `u` and `v` currently share a part?
    pub fn same_part(&self, u: VertexId, v: VertexId) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.part_of[u.index()] == self.part_of[v.index()])
    }

    pub fn current_partition(&self) -> VertexPartition {
        let parts: Vec<Vec<VertexId>> = self
            .parts
            .iter()
            .flatten()
            .map(|p| p.members.clone())
            .collect();
        VertexPartition::from_parts(parts).expect("parts stay disjoint")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::reference::enumerate_k_cuts;

    #[test]
    fn init_cycle_is_one_part() {
        let g = gen::cycle(4).unwrap();
        let st = DecrementalState::init(&g, 2).unwrap();
        assert_eq!(st.current_partition().len(), 1);
        assert!(st.same_part(VertexId(0), VertexId(2)).unwrap());
    }

    #[test]
    fn init_tree_is_singletons() {
        let g = gen::tree(6, 9).unwrap();
        let st = DecrementalState::init(&g, 2).unwrap();
        assert_eq!(st.current_partition().len(), 6);
    }

    #[test]
    fn init_joined_cliques() {
        let g = gen::two_cliques(4, 4, 2).unwrap();
        let st = DecrementalState::init(&g, 3).unwrap();
        assert_eq!(st.current_partition().len(), 2);
    }

    #[test]
    fn deleting_cycle_edge_shatters_it() {
        let g = gen::cycle(4).unwrap();
        let mut st = DecrementalState::init(&g, 2).unwrap();
        let changed = st.delete(VertexId(0), VertexId(1)).unwrap();
        assert!(!changed.is_empty());
        assert_eq!(st.current_partition().len(), 4);
        assert!(!st.same_part(VertexId(0), VertexId(2)).unwrap());
    }

    #[test]
    fn k5_survives_one_deletion() {
        let mut edges = Vec::new();
        for u in 0..5u32 {
            for v in (u + 1)..5 {
                edges.push((u, v));
            }
        }
        let g = Graph::from_edges(5, &edges).unwrap();
        let mut st = DecrementalState::init(&g, 3).unwrap();
        let changed = st.delete(VertexId(0), VertexId(1)).unwrap();
        assert!(changed.is_empty());
        assert_eq!(st.current_partition().len(), 1);
    }

    #[test]
    fn cross_part_deletion_is_ignored() {
        // two triangles and a bridge: at k=2 the bridge joins two parts
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)])
            .unwrap();
        let mut st = DecrementalState::init(&g, 2).unwrap();
        let before = st.current_partition();
        let changed = st.delete(VertexId(0), VertexId(3)).unwrap();
        assert!(changed.is_empty());
        assert_eq!(st.current_partition(), before);
    }

    #[test]
    fn deleting_missing_or_spent_edges_errors() {
        let g = Graph::from_edges(3, &[(0, 1), (0, 1), (1, 2)]).unwrap();
        let mut st = DecrementalState::init(&g, 1).unwrap();
        // two parallel edges resolve one at a time
        st.delete(VertexId(0), VertexId(1)).unwrap();
        st.delete(VertexId(0), VertexId(1)).unwrap();
        assert!(matches!(
            st.delete(VertexId(0), VertexId(1)),
            Err(Error::NoSuchEndpointEdge { .. })
        ));
        assert!(matches!(
            st.delete(VertexId(0), VertexId(2)),
            Err(Error::NoSuchEndpointEdge { .. })
        ));
        assert!(st.delete(VertexId(9), VertexId(1)).is_err());
    }

    #[test]
    fn full_deletion_leaves_singletons() {
        let g = gen::random_multigraph(8, 16, 3).unwrap();
        let mut st = DecrementalState::init(&g, 2).unwrap();
        let pairs: Vec<(VertexId, VertexId)> = g.edge_ids().map(|e| g.ends(e)).collect();
        for (u, v) in pairs {
            st.delete(u, v).unwrap();
        }
        assert_eq!(st.current_partition().len(), 8);
        assert!(!st.same_part(VertexId(0), VertexId(1)).unwrap());
    }

    #[test]
    fn stream_matches_static_recomputation() {
        for seed in 0..10 {
            let n = 6 + (seed as usize) % 8;
            let g = gen::random_multigraph(n, 3 * n, seed).unwrap();
            let k = 2 + (seed % 3) as u32;
            let mut st = DecrementalState::init(&g, k).unwrap();
            let mut prev = st.current_partition();
            let pairs: Vec<(VertexId, VertexId)> = g.edge_ids().map(|e| g.ends(e)).collect();
            for (u, v) in pairs {
                st.delete(u, v).unwrap();
                let fresh = maximal_kecs(st.remaining_graph(), k).unwrap().partition;
                let now = st.current_partition();
                assert_eq!(now, fresh, "seed={seed} k={k}");
                // the partition only ever refines
                assert!(now.refines(&prev));
                prev = now;
            }
        }
    }

    #[test]
    fn update_seed_list_covers_every_new_cut() {
        // whenever an in-part deletion happens, every k-cut of the part
        // minus the edge must contain one of the edge's endpoints
        for seed in 0..8 {
            let g = gen::random_multigraph(10, 25, seed).unwrap();
            let k = 3;
            let st = DecrementalState::init(&g, k).unwrap();
            let partition = st.current_partition();
            for part in partition.parts() {
                if part.len() < 2 {
                    continue;
                }
                let sub = g.induced_subgraph(part).unwrap();
                let Some(edge) = sub.edge_ids().next() else {
                    continue;
                };
                let (x, y) = sub.ends(edge);
                let mut cut_graph = sub.clone();
                cut_graph.delete_edge(edge).unwrap();
                let cuts = enumerate_k_cuts(&cut_graph, k).unwrap();
                let xi = cuts.vertices.binary_search(&x).unwrap();
                let yi = cuts.vertices.binary_search(&y).unwrap();
                let seeds: u32 = (1 << xi) | (1 << yi);
                for &mask in &cuts.masks {
                    assert!(mask & seeds != 0, "k-cut avoiding both endpoints");
                }
            }
        }
    }

    #[test]
    fn counters_grow_monotonically() {
        let g = gen::random_multigraph(10, 20, 1).unwrap();
        let mut st = DecrementalState::init(&g, 3).unwrap();
        let mut last = st.counters();
        let pairs: Vec<(VertexId, VertexId)> = g.edge_ids().map(|e| g.ends(e)).collect();
        for (u, v) in pairs {
            st.delete(u, v).unwrap();
            let now = st.counters();
            assert!(now.query_count >= last.query_count);
            assert!(now.update_units >= last.update_units);
            last = now;
        }
    }
}
