//! Pairwise k-edge-connectivity oracle: the abstract decremental interface
//! the solver is reduced to, plus an exact baseline implementation that
//! recomputes a capped unit-capacity flow per query.

use std::ops::{Add, AddAssign, Sub};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};

/// Work counters for the preprocess / update / query roles. Query count is
/// the implementation-independent quantity the solver's bounds are checked
/// against.
#[derive(Clone, Copy, Default, Debug, PartialEq, Eq)]
pub struct CostCounters {
    pub preprocess_units: u64,
    pub update_units: u64,
    pub query_count: u64,
}

impl Add for CostCounters {
    type Output = CostCounters;
    fn add(self, rhs: CostCounters) -> CostCounters {
        CostCounters {
            preprocess_units: self.preprocess_units + rhs.preprocess_units,
            update_units: self.update_units + rhs.update_units,
            query_count: self.query_count + rhs.query_count,
        }
    }
}

impl AddAssign for CostCounters {
    fn add_assign(&mut self, rhs: CostCounters) {
        *self = *self + rhs;
    }
}

impl Sub for CostCounters {
    type Output = CostCounters;
    fn sub(self, rhs: CostCounters) -> CostCounters {
        CostCounters {
            preprocess_units: self.preprocess_units - rhs.preprocess_units,
            update_units: self.update_units - rhs.update_units,
            query_count: self.query_count - rhs.query_count,
        }
    }
}

/// Exact decremental pairwise k-edge-connectivity oracle.
///
/// An instance is bound to a private snapshot of the graph at `init` time
/// and afterwards supports only edge deletions. Answers are deterministic
/// and exact on the current state. Distinct instances are independent.
pub trait ConnectivityOracle: Sized {
    /// Binds a fresh oracle to a private copy of `g`. Counters start at
    /// zero except for the preprocessing charge.
    fn init(g: &Graph, k: u32) -> Result<Self>;

    fn k(&self) -> u32;

    /// Removes an edge from the bound graph; later queries reflect it.
    fn delete(&mut self, e: EdgeId) -> Result<()>;

    /// True iff the minimum edge cut separating `s` and `t` in the current
    /// graph has size >= k. `s == t` answers true by the singleton
    /// convention.
    fn is_k_connected(&mut self, s: VertexId, t: VertexId) -> Result<bool>;

    fn counters(&self) -> CostCounters;
}

/// Reusable buffers for the flow searches, epoch-stamped so nothing needs
/// clearing between runs.
#[derive(Clone, Debug, Default)]
struct FlowScratch {
    run: u32,
    flow: Vec<i8>,
    flow_run: Vec<u32>,
    epoch: u32,
    seen: Vec<u32>,
    parent: Vec<EdgeId>,
    queue: Vec<VertexId>,
    // second search side plus walk bookkeeping for the two-sided search
    seen_back: Vec<u32>,
    parent_back: Vec<EdgeId>,
    frontier: [Vec<VertexId>; 2],
    next_frontier: Vec<VertexId>,
    delta: Vec<i8>,
    delta_run: Vec<u32>,
    touched: Vec<EdgeId>,
}

impl FlowScratch {
    fn ensure(&mut self, g: &Graph) {
        if self.flow.len() < g.edge_universe() {
            self.flow.resize(g.edge_universe(), 0);
            self.flow_run.resize(g.edge_universe(), 0);
            self.delta.resize(g.edge_universe(), 0);
            self.delta_run.resize(g.edge_universe(), 0);
        }
        if self.seen.len() < g.universe() {
            self.seen.resize(g.universe(), 0);
            self.parent.resize(g.universe(), EdgeId(0));
            self.seen_back.resize(g.universe(), 0);
            self.parent_back.resize(g.universe(), EdgeId(0));
        }
    }

    #[inline]
    fn flow_of(&self, e: EdgeId) -> i8 {
        if self.flow_run[e.index()] == self.run {
            self.flow[e.index()]
        } else {
            0
        }
    }

    #[inline]
    fn add_flow(&mut self, e: EdgeId, delta: i8) {
        let f = self.flow_of(e) + delta;
        self.flow[e.index()] = f;
        self.flow_run[e.index()] = self.run;
    }

    #[inline]
    fn walk_delta(&self, e: EdgeId) -> i8 {
        if self.delta_run[e.index()] == self.epoch {
            self.delta[e.index()]
        } else {
            0
        }
    }

    #[inline]
    fn add_walk_delta(&mut self, e: EdgeId, delta: i8) {
        if self.delta_run[e.index()] != self.epoch {
            self.delta_run[e.index()] = self.epoch;
            self.delta[e.index()] = 0;
            self.touched.push(e);
        }
        self.delta[e.index()] += delta;
    }
}

/// Signed flow on `e` as seen from endpoint `x` (positive = out of `x`).
#[inline]
fn flow_from(scratch: &FlowScratch, g: &Graph, e: EdgeId, x: VertexId) -> i8 {
    let (a, _) = g.ends(e);
    if a == x {
        scratch.flow_of(e)
    } else {
        -scratch.flow_of(e)
    }
}

#[inline]
fn push_unit(scratch: &mut FlowScratch, g: &Graph, e: EdgeId, from: VertexId) {
    let (a, _) = g.ends(e);
    if a == from {
        scratch.add_flow(e, 1);
    } else {
        scratch.add_flow(e, -1);
    }
}

/// One breadth-first search for an augmenting path in the residual graph;
/// applies the unit of flow when `t` is reached.
fn augment_bfs(g: &Graph, s: VertexId, t: VertexId, scratch: &mut FlowScratch) -> bool {
    scratch.epoch += 1;
    let ep = scratch.epoch;
    scratch.queue.clear();
    scratch.queue.push(s);
    scratch.seen[s.index()] = ep;
    let mut head = 0;
    let mut found = false;
    'bfs: while head < scratch.queue.len() {
        let x = scratch.queue[head];
        head += 1;
        for &e in g.incident(x) {
            if flow_from(scratch, g, e, x) >= 1 {
                continue; // arc saturated in this direction
            }
            let w = g.other_end(e, x);
            if scratch.seen[w.index()] == ep {
                continue;
            }
            scratch.seen[w.index()] = ep;
            scratch.parent[w.index()] = e;
            if w == t {
                found = true;
                break 'bfs;
            }
            scratch.queue.push(w);
        }
    }
    if !found {
        return false;
    }
    let mut x = t;
    while x != s {
        let e = scratch.parent[x.index()];
        let y = g.other_end(e, x);
        push_unit(scratch, g, e, y);
        x = y;
    }
    true
}

enum TwoSided {
    Augmented,
    NoPath,
    /// The concatenated walk would push two units through one edge; the
    /// caller retries with the one-sided search.
    Tangled,
}

/// One bidirectional breadth-first search for an augmenting path: levels
/// grow from both endpoints, always expanding the smaller frontier, until
/// the trees meet or one side exhausts its residual reach. The joined walk
/// is applied as a net flow change after cancelling opposite traversals of
/// the same edge.
fn augment_two_sided(g: &Graph, s: VertexId, t: VertexId, scratch: &mut FlowScratch) -> TwoSided {
    scratch.epoch += 1;
    let ep = scratch.epoch;
    scratch.frontier[0].clear();
    scratch.frontier[1].clear();
    scratch.frontier[0].push(s);
    scratch.frontier[1].push(t);
    scratch.seen[s.index()] = ep;
    scratch.seen_back[t.index()] = ep;
    let meet: VertexId;
    'search: loop {
        // expand the smaller frontier by one full level; ties go forward
        let side = usize::from(scratch.frontier[0].len() > scratch.frontier[1].len());
        let mut level = std::mem::take(&mut scratch.frontier[side]);
        let mut next = std::mem::take(&mut scratch.next_frontier);
        next.clear();
        let mut hit = None;
        'level: for &x in &level {
            for &e in g.incident(x) {
                let f = flow_from(scratch, g, e, x);
                // forward needs a residual arc x->w, backward an arc w->x
                let usable = if side == 0 { f < 1 } else { f > -1 };
                if !usable {
                    continue;
                }
                let w = g.other_end(e, x);
                let (mine, theirs) = if side == 0 {
                    (&mut scratch.seen, &scratch.seen_back)
                } else {
                    (&mut scratch.seen_back, &scratch.seen)
                };
                if mine[w.index()] == ep {
                    continue;
                }
                mine[w.index()] = ep;
                if side == 0 {
                    scratch.parent[w.index()] = e;
                } else {
                    scratch.parent_back[w.index()] = e;
                }
                if theirs[w.index()] == ep {
                    hit = Some(w);
                    break 'level;
                }
                next.push(w);
            }
        }
        level.clear();
        scratch.frontier[side] = next;
        scratch.next_frontier = level;
        if let Some(w) = hit {
            meet = w;
            break 'search;
        }
        if scratch.frontier[side].is_empty() {
            return TwoSided::NoPath;
        }
    }
    // net flow change of the joined walk s -> meet -> t
    scratch.touched.clear();
    let mut x = meet;
    while x != s {
        let e = scratch.parent[x.index()];
        let y = g.other_end(e, x); // arc y -> x
        let (a, _) = g.ends(e);
        scratch.add_walk_delta(e, if a == y { 1 } else { -1 });
        x = y;
    }
    x = meet;
    while x != t {
        let e = scratch.parent_back[x.index()];
        let z = g.other_end(e, x); // arc x -> z
        let (a, _) = g.ends(e);
        scratch.add_walk_delta(e, if a == x { 1 } else { -1 });
        x = z;
    }
    for i in 0..scratch.touched.len() {
        let e = scratch.touched[i];
        if (scratch.flow_of(e) + scratch.walk_delta(e)).abs() > 1 {
            return TwoSided::Tangled;
        }
    }
    for i in 0..scratch.touched.len() {
        let e = scratch.touched[i];
        let d = scratch.walk_delta(e);
        if d != 0 {
            scratch.add_flow(e, d);
        }
    }
    TwoSided::Augmented
}

fn capped_flow(g: &Graph, s: VertexId, t: VertexId, cap: u32, scratch: &mut FlowScratch) -> u32 {
    if s == t {
        return cap;
    }
    scratch.ensure(g);
    scratch.run = scratch.run.wrapping_add(1);
    let mut value = 0;
    while value < cap {
        match augment_two_sided(g, s, t, scratch) {
            TwoSided::Augmented => value += 1,
            TwoSided::NoPath => break,
            TwoSided::Tangled => {
                if !augment_bfs(g, s, t, scratch) {
                    break;
                }
                value += 1;
            }
        }
    }
    value
}

/// min(λ(s,t), cap) via at most `cap` unit-capacity augmenting-path
/// searches, each a single BFS over the residual graph, so O(cap · m).
/// By the singleton convention `s == t` returns `cap`.
pub fn st_connectivity_capped(g: &Graph, s: VertexId, t: VertexId, cap: u32) -> Result<u32> {
    if !g.contains_vertex(s) {
        return Err(Error::NoSuchVertex(s.0));
    }
    if !g.contains_vertex(t) {
        return Err(Error::NoSuchVertex(t.0));
    }
    let mut scratch = FlowScratch::default();
    Ok(capped_flow(g, s, t, cap, &mut scratch))
}

/// Baseline oracle: owns a private copy of the graph and recomputes a
/// capped flow on every query. Exact and deterministic; query time O(k·m).
#[derive(Debug)]
pub struct BaselineOracle {
    k: u32,
    g: Graph,
    counters: CostCounters,
    scratch: FlowScratch,
}

impl BaselineOracle {
    /// The bound graph in its current (post-deletion) state.
    pub fn graph(&self) -> &Graph {
        &self.g
    }
}

impl ConnectivityOracle for BaselineOracle {
    fn init(g: &Graph, k: u32) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidK(k));
        }
        Ok(BaselineOracle {
            k,
            g: g.clone(),
            counters: CostCounters {
                preprocess_units: g.edge_count() as u64,
                ..CostCounters::default()
            },
            scratch: FlowScratch::default(),
        })
    }

    fn k(&self) -> u32 {
        self.k
    }

    fn delete(&mut self, e: EdgeId) -> Result<()> {
        self.g.delete_edge(e)?;
        self.counters.update_units += 1;
        Ok(())
    }

    fn is_k_connected(&mut self, s: VertexId, t: VertexId) -> Result<bool> {
        if !self.g.contains_vertex(s) {
            return Err(Error::NoSuchVertex(s.0));
        }
        if !self.g.contains_vertex(t) {
            return Err(Error::NoSuchVertex(t.0));
        }
        self.counters.query_count += 1;
        if s == t {
            return Ok(true);
        }
        // λ(s,t) is bounded by either endpoint degree
        if self.g.degree(s) < self.k || self.g.degree(t) < self.k {
            return Ok(false);
        }
        Ok(capped_flow(&self.g, s, t, self.k, &mut self.scratch) >= self.k)
    }

    fn counters(&self) -> CostCounters {
        self.counters
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    fn c4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn k4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn k5() -> Graph {
        let mut edges = Vec::new();
        for u in 0..5u32 {
            for v in (u + 1)..5 {
                edges.push((u, v));
            }
        }
        Graph::from_edges(5, &edges).unwrap()
    }

    fn all_pairs<F: FnMut(VertexId, VertexId) -> bool>(n: u32, mut f: F) -> bool {
        for u in 0..n {
            for v in (u + 1)..n {
                if !f(VertexId(u), VertexId(v)) {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn init_empty_graph() {
        let o = BaselineOracle::init(&Graph::new(), 3).unwrap();
        assert_eq!(o.counters().query_count, 0);
        assert_eq!(o.k(), 3);
    }

    #[test]
    fn init_rejects_k_zero() {
        assert_eq!(
            BaselineOracle::init(&c4(), 0).unwrap_err(),
            Error::InvalidK(0)
        );
    }

    #[test]
    fn cycle_is_two_edge_connected() {
        let mut o = BaselineOracle::init(&c4(), 2).unwrap();
        assert!(all_pairs(4, |u, v| o.is_k_connected(u, v).unwrap()));
    }

    #[test]
    fn k4_is_not_four_edge_connected() {
        // λ(K4) = 3: brute capped flow confirms before freezing the verdict
        let g = k4();
        assert_eq!(
            st_connectivity_capped(&g, VertexId(0), VertexId(1), 10).unwrap(),
            3
        );
        let mut o = BaselineOracle::init(&g, 4).unwrap();
        assert!(all_pairs(4, |u, v| !o.is_k_connected(u, v).unwrap()));
    }

    #[test]
    fn deleting_cycle_edge_breaks_two_connectivity() {
        let mut o = BaselineOracle::init(&c4(), 2).unwrap();
        o.delete(EdgeId(0)).unwrap();
        assert!(all_pairs(4, |u, v| !o.is_k_connected(u, v).unwrap()));
        assert_eq!(o.counters().update_units, 1);
    }

    #[test]
    fn deleting_one_parallel_edge() {
        let g = Graph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        let mut o = BaselineOracle::init(&g, 2).unwrap();
        assert!(o.is_k_connected(VertexId(0), VertexId(1)).unwrap());
        o.delete(EdgeId(0)).unwrap();
        assert!(!o.is_k_connected(VertexId(0), VertexId(1)).unwrap());
    }

    #[test]
    fn k5_minus_edge_stays_three_connected() {
        let mut o = BaselineOracle::init(&k5(), 3).unwrap();
        o.delete(EdgeId(0)).unwrap();
        assert!(all_pairs(5, |u, v| o.is_k_connected(u, v).unwrap()));
    }

    #[test]
    fn delete_unknown_edge_errors() {
        let mut o = BaselineOracle::init(&c4(), 2).unwrap();
        assert_eq!(o.delete(EdgeId(99)), Err(Error::NoSuchEdge(99)));
    }

    #[test]
    fn same_vertex_is_always_connected() {
        let mut o = BaselineOracle::init(&c4(), 5).unwrap();
        assert!(o.is_k_connected(VertexId(2), VertexId(2)).unwrap());
    }

    #[test]
    fn bridge_separates_at_k2() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let mut o1 = BaselineOracle::init(&g, 1).unwrap();
        assert!(o1.is_k_connected(VertexId(0), VertexId(2)).unwrap());
        let mut o2 = BaselineOracle::init(&g, 2).unwrap();
        assert!(!o2.is_k_connected(VertexId(0), VertexId(2)).unwrap());
    }

    #[test]
    fn petersen_is_three_edge_connected() {
        let g = gen::petersen();
        let mut o = BaselineOracle::init(&g, 3).unwrap();
        assert!(all_pairs(10, |u, v| o.is_k_connected(u, v).unwrap()));
        let mut o4 = BaselineOracle::init(&g, 4).unwrap();
        assert!(all_pairs(10, |u, v| !o4.is_k_connected(u, v).unwrap()));
    }

    #[test]
    fn unknown_vertex_errors() {
        let mut o = BaselineOracle::init(&c4(), 2).unwrap();
        assert_eq!(
            o.is_k_connected(VertexId(0), VertexId(17)).unwrap_err(),
            Error::NoSuchVertex(17)
        );
    }

    #[test]
    fn capped_flow_disconnected_is_zero() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            st_connectivity_capped(&g, VertexId(0), VertexId(3), 5).unwrap(),
            0
        );
    }

    #[test]
    fn capped_flow_parallel_edges_hit_cap() {
        let g = Graph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(
            st_connectivity_capped(&g, VertexId(0), VertexId(1), 3).unwrap(),
            3
        );
        assert_eq!(
            st_connectivity_capped(&g, VertexId(0), VertexId(1), 2).unwrap(),
            2
        );
    }

    #[test]
    fn capped_flow_cycle_is_two() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        assert_eq!(
            st_connectivity_capped(&g, VertexId(0), VertexId(3), 5).unwrap(),
            2
        );
    }

    #[test]
    fn deleting_all_edges_disconnects_everything() {
        let g = c4();
        let mut o = BaselineOracle::init(&g, 1).unwrap();
        for e in g.edge_ids() {
            o.delete(e).unwrap();
        }
        assert!(all_pairs(4, |u, v| !o.is_k_connected(u, v).unwrap()));
    }

    #[test]
    fn answers_are_symmetric() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        for k in 1..=3 {
            let mut o = BaselineOracle::init(&g, k).unwrap();
            for u in 0..5 {
                for v in 0..5 {
                    let a = o.is_k_connected(VertexId(u), VertexId(v)).unwrap();
                    let b = o.is_k_connected(VertexId(v), VertexId(u)).unwrap();
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn query_counter_increments() {
        let mut o = BaselineOracle::init(&c4(), 2).unwrap();
        o.is_k_connected(VertexId(0), VertexId(1)).unwrap();
        o.is_k_connected(VertexId(0), VertexId(0)).unwrap();
        assert_eq!(o.counters().query_count, 2);
        assert_eq!(o.counters().preprocess_units, 4);
    }
}
