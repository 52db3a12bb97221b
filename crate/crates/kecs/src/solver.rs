//! Static computation of the maximal k-edge-connected subgraphs.
//!
//! The core loop keeps a work list L of vertices with the invariant that
//! every k-cut of the current graph intersects L. While L has two members
//! it picks the two earliest, trims the second if the pair is
//! k-edge-connected, and otherwise races the two component searches,
//! recurses on the smaller side, and cuts it off. When |L| <= 1 the
//! remaining graph is k-edge-connected and becomes one output part.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId, VertexPartition};
use crate::local::race_smaller;
use crate::oracle::{BaselineOracle, ConnectivityOracle, CostCounters};
use crate::sparsify::{certificate_forest_count, kecs_certificate};

const NIL: u32 = u32::MAX;

/// Ordered vertex list with O(1) membership, removal, append, and
/// deterministic first/second extraction (insertion order).
pub struct WorkList {
    next: Vec<u32>,
    prev: Vec<u32>,
    present: Vec<bool>,
    head: u32,
    tail: u32,
    len: usize,
}

impl WorkList {
    pub fn new(universe: usize) -> Self {
        WorkList {
            next: vec![NIL; universe],
            prev: vec![NIL; universe],
            present: vec![false; universe],
            head: NIL,
            tail: NIL,
            len: 0,
        }
    }

    /// List holding every live vertex of `g` in ascending id order.
    pub fn full(g: &Graph) -> Self {
        let mut list = WorkList::new(g.universe());
        for v in g.vertices() {
            list.push_back(v);
        }
        list
    }

    pub fn from_members<I: IntoIterator<Item = VertexId>>(universe: usize, members: I) -> Self {
        let mut list = WorkList::new(universe);
        for v in members {
            list.push_back(v);
        }
        list
    }

    /// Appends `v` unless already present.
    pub fn push_back(&mut self, v: VertexId) {
        let i = v.index();
        if self.present[i] {
            return;
        }
        self.present[i] = true;
        self.prev[i] = self.tail;
        self.next[i] = NIL;
        if self.tail == NIL {
            self.head = v.0;
        } else {
            self.next[self.tail as usize] = v.0;
        }
        self.tail = v.0;
        self.len += 1;
    }

    /// Removes `v` if present; reports whether it was.
    pub fn discard(&mut self, v: VertexId) -> bool {
        let i = v.index();
        if !self.present[i] {
            return false;
        }
        let (p, n) = (self.prev[i], self.next[i]);
        if p == NIL {
            self.head = n;
        } else {
            self.next[p as usize] = n;
        }
        if n == NIL {
            self.tail = p;
        } else {
            self.prev[n as usize] = p;
        }
        self.present[i] = false;
        self.len -= 1;
        true
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.present.get(v.index()).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Earliest-inserted member.
    pub fn first(&self) -> Option<VertexId> {
        (self.head != NIL).then_some(VertexId(self.head))
    }

    /// Second-earliest member.
    pub fn second(&self) -> Option<VertexId> {
        self.first().and_then(|f| {
            let n = self.next[f.index()];
            (n != NIL).then_some(VertexId(n))
        })
    }

    pub fn iter(&self) -> WorkListIter<'_> {
        WorkListIter {
            list: self,
            at: self.head,
        }
    }
}

pub struct WorkListIter<'a> {
    list: &'a WorkList,
    at: u32,
}

impl Iterator for WorkListIter<'_> {
    type Item = VertexId;
    fn next(&mut self) -> Option<VertexId> {
        if self.at == NIL {
            return None;
        }
        let v = VertexId(self.at);
        self.at = self.list.next[self.at as usize];
        Some(v)
    }
}

/// Hook called at the top of every loop iteration with the current graph
/// and work list; used by the test suites to check the k-cut invariant.
pub trait MainObserver {
    fn iteration(&mut self, g: &Graph, list: &WorkList);
}

/// Observer that does nothing.
pub struct NoObserver;

impl MainObserver for NoObserver {
    fn iteration(&mut self, _: &Graph, _: &WorkList) {}
}

/// Accounting for one recursive call.
#[derive(Clone, Copy, Debug)]
pub struct CallStats {
    /// vol(V) of the call's graph at entry, i.e. twice its edge count.
    pub start_volume: u64,
    /// Oracle queries issued through this call's own oracle.
    pub queries: u64,
    /// Nesting below the top-level call, which sits at depth 0.
    pub depth: u32,
}

#[derive(Clone, Debug, Default)]
pub struct SolverStats {
    pub counters: CostCounters,
    /// Deepest nesting of split recursions; a run that never splits stays
    /// at 0. Volume halving keeps this at most ceil(log2 m0) + 1.
    pub recursion_depth: u32,
    pub calls: Vec<CallStats>,
}

#[derive(Clone, Debug)]
pub struct SolverResult {
    pub partition: VertexPartition,
    pub stats: SolverStats,
}

pub struct SolverOptions {
    /// Replace the input by its sparse certificate first when that shrinks
    /// the edge count.
    pub use_certificate: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            use_certificate: true,
        }
    }
}

/// Outcome of one work-list run: all parts (the still-live remainder last)
/// plus the remainder's graph and oracle, alive for reuse by the
/// decremental driver.
pub struct ListRun<O: ConnectivityOracle> {
    /// Parts in the ids of the graph the run was invoked on; the part for
    /// the remaining k-edge-connected graph is last (when nonempty).
    pub parts: Vec<Vec<VertexId>>,
    pub residual_graph: Graph,
    pub residual_oracle: O,
    pub stats: SolverStats,
}

/// One work-list run over `g` with a caller-supplied oracle already bound
/// to `g`'s current state. The caller promises that every k-cut of `g`
/// intersects `list` (full vertex set for fresh graphs, the two endpoints
/// of a deleted edge for update calls).
///
/// Counter deltas accrued during the run are reported in `stats`;
/// the handed-in oracle's prior activity is not.
pub fn solve_list<O: ConnectivityOracle>(
    g: Graph,
    oracle: O,
    list: WorkList,
    observer: &mut dyn MainObserver,
) -> Result<ListRun<O>> {
    let k = oracle.k();
    let mut stats = SolverStats::default();
    let (parts, residual_graph, residual_oracle) =
        run(k, g, oracle, list, 0, &mut stats, observer)?;
    Ok(ListRun {
        parts,
        residual_graph,
        residual_oracle,
        stats,
    })
}

fn run<O: ConnectivityOracle>(
    k: u32,
    mut g: Graph,
    mut oracle: O,
    mut list: WorkList,
    depth: u32,
    stats: &mut SolverStats,
    observer: &mut dyn MainObserver,
) -> Result<(Vec<Vec<VertexId>>, Graph, O)> {
    stats.recursion_depth = stats.recursion_depth.max(depth);
    let start_volume = g.total_volume();
    let entry_counters = oracle.counters();
    let mut parts: Vec<Vec<VertexId>> = Vec::new();
    while list.len() > 1 {
        observer.iteration(&g, &list);
        let u = list.first().expect("len > 1");
        let v = list.second().expect("len > 1");
        if oracle.is_k_connected(u, v)? {
            list.discard(v);
            continue;
        }
        let found = race_smaller(&g, &mut oracle, u, v)?;
        // recurse on a fresh copy of the found side with its own oracle
        let child_g = g.induced_from_sorted(&found.members, |w| found.set.contains(&w));
        let child_oracle = O::init(&child_g, k)?;
        stats.counters += child_oracle.counters();
        let child_list = WorkList::full(&child_g);
        let (child_parts, _, _) = run(
            k,
            child_g,
            child_oracle,
            child_list,
            depth + 1,
            stats,
            observer,
        )?;
        for part in child_parts {
            parts.push(
                part.into_iter()
                    .map(|cv| found.members[cv.index()])
                    .collect(),
            );
        }
        // cut the found side off: drop its vertices, internal edges, and
        // boundary edges, and pull the outside endpoints into the list
        let mut boundary: Vec<VertexId> = Vec::new();
        for &x in &found.members {
            let incident: Vec<EdgeId> = g.incident(x).to_vec();
            for e in incident {
                if !g.edge_alive(e) {
                    continue;
                }
                let w = g.other_end(e, x);
                if !found.set.contains(&w) {
                    boundary.push(w);
                }
                g.delete_edge(e)?;
                oracle.delete(e)?;
            }
            g.delete_vertex(x)?;
            list.discard(x);
        }
        boundary.sort_unstable();
        boundary.dedup();
        for w in boundary {
            list.push_back(w);
        }
    }
    // |L| <= 1: whatever remains is k-edge-connected
    let rest: Vec<VertexId> = g.vertices().collect();
    if !rest.is_empty() {
        parts.push(rest);
    }
    let delta = oracle.counters() - entry_counters;
    stats.counters += delta;
    stats.calls.push(CallStats {
        start_volume,
        queries: delta.query_count,
        depth,
    });
    Ok((parts, g, oracle))
}

/// Maximal k-edge-connected subgraphs of `g`, generic in the oracle.
pub fn maximal_kecs_with<O: ConnectivityOracle>(
    g: &Graph,
    k: u32,
    opts: &SolverOptions,
    observer: &mut dyn MainObserver,
) -> Result<SolverResult> {
    if k < 1 {
        return Err(Error::InvalidK(k));
    }
    let mut stats = SolverStats::default();
    if k == 1 {
        // 1-edge-connected means connected
        return Ok(SolverResult {
            partition: g.connected_components(),
            stats,
        });
    }
    let certificate;
    let source = if opts.use_certificate && worth_sparsifying(g, k) {
        certificate = kecs_certificate(g, k)?;
        &certificate
    } else {
        g
    };
    let mut parts: Vec<Vec<VertexId>> = Vec::new();
    for comp in source.connected_components().parts() {
        if comp.len() == 1 {
            parts.push(comp.clone());
            continue;
        }
        let sub = source.induced_subgraph(comp)?;
        let oracle = O::init(&sub, k)?;
        stats.counters += oracle.counters();
        let list = WorkList::full(&sub);
        let (sub_parts, _, _) = run(k, sub, oracle, list, 0, &mut stats, observer)?;
        for part in sub_parts {
            parts.push(part.into_iter().map(|cv| comp[cv.index()]).collect());
        }
    }
    Ok(SolverResult {
        partition: VertexPartition::from_parts(parts)?,
        stats,
    })
}

fn worth_sparsifying(g: &Graph, k: u32) -> bool {
    let bound = certificate_forest_count(k, g.vertex_count()) as usize;
    g.edge_count() > bound * g.vertex_count().saturating_sub(1)
}

/// Maximal k-edge-connected subgraphs with the baseline oracle and default
/// options.
pub fn maximal_kecs(g: &Graph, k: u32) -> Result<SolverResult> {
    maximal_kecs_with::<BaselineOracle>(g, k, &SolverOptions::default(), &mut NoObserver)
}

/// As `maximal_kecs` with explicit options.
pub fn maximal_kecs_opts(g: &Graph, k: u32, opts: &SolverOptions) -> Result<SolverResult> {
    maximal_kecs_with::<BaselineOracle>(g, k, opts, &mut NoObserver)
}
