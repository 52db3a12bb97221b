//! Independent brute-force oracles used to ground every acceptance test.
//! Nothing here shares code with the production solver path: connectivity
//! is recomputed from scratch with simple textbook procedures, sized for
//! graphs up to a few dozen vertices.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId, VertexPartition};

/// Cap for the exhaustive cut enumeration.
pub const ENUMERATION_CAP: usize = 20;

/// Exact min(λ(s,t), cap) by plain BFS augmentation. Deliberately separate
/// from the oracle module's engine so the two can cross-check each other.
pub fn pairwise_connectivity_capped(g: &Graph, s: VertexId, t: VertexId, cap: u32) -> u32 {
    if s == t {
        return cap;
    }
    let mut flow: Vec<i8> = vec![0; g.edge_universe()];
    let mut value = 0;
    while value < cap {
        let mut parent: Vec<Option<EdgeId>> = vec![None; g.universe()];
        let mut seen = vec![false; g.universe()];
        seen[s.index()] = true;
        let mut queue = VecDeque::from([s]);
        let mut reached = false;
        'bfs: while let Some(x) = queue.pop_front() {
            for &e in g.incident(x) {
                let (a, _) = g.ends(e);
                let f = if a == x {
                    flow[e.index()]
                } else {
                    -flow[e.index()]
                };
                if f >= 1 {
                    continue;
                }
                let w = g.other_end(e, x);
                if seen[w.index()] {
                    continue;
                }
                seen[w.index()] = true;
                parent[w.index()] = Some(e);
                if w == t {
                    reached = true;
                    break 'bfs;
                }
                queue.push_back(w);
            }
        }
        if !reached {
            break;
        }
        let mut x = t;
        while x != s {
            let e = parent[x.index()].unwrap();
            let y = g.other_end(e, x);
            let (a, _) = g.ends(e);
            flow[e.index()] += if a == y { 1 } else { -1 };
            x = y;
        }
        value += 1;
    }
    value
}

/// Exact global minimum cut (value, one side) by the deterministic
/// maximum-adjacency contraction procedure on the multiplicity matrix.
/// Disconnected graphs return value 0 with one connected component as the
/// side. Needs at least two vertices.
pub fn global_min_cut(g: &Graph) -> Result<(u64, Vec<VertexId>)> {
    let verts: Vec<VertexId> = g.vertices().collect();
    let n = verts.len();
    if n < 2 {
        return Err(Error::TooLarge { size: n, cap: 0 });
    }
    let comps = g.connected_components();
    if comps.len() > 1 {
        return Ok((0, comps.parts()[0].clone()));
    }
    let rank_of = |v: VertexId| verts.binary_search(&v).unwrap();
    let mut w = vec![vec![0u64; n]; n];
    for e in g.edge_ids() {
        let (u, v) = g.ends(e);
        let (i, j) = (rank_of(u), rank_of(v));
        w[i][j] += 1;
        w[j][i] += 1;
    }
    let mut groups: Vec<Vec<VertexId>> = verts.iter().map(|&v| vec![v]).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut best: Option<(u64, Vec<VertexId>)> = None;
    while active.len() > 1 {
        // one minimum cut phase: maximum adjacency order from the first
        // active vertex, ties to the smallest index
        let mut in_a = vec![false; n];
        let mut wsum = vec![0u64; n];
        let first = active[0];
        in_a[first] = true;
        for &x in &active {
            wsum[x] = w[first][x];
        }
        let mut prev = first;
        let mut last = first;
        for _ in 1..active.len() {
            let mut pick = usize::MAX;
            for &x in &active {
                if !in_a[x] && (pick == usize::MAX || wsum[x] > wsum[pick]) {
                    pick = x;
                }
            }
            in_a[pick] = true;
            prev = last;
            last = pick;
            for &x in &active {
                if !in_a[x] {
                    wsum[x] += w[pick][x];
                }
            }
        }
        let cut_of_phase = wsum[last];
        if best
            .as_ref()
            .map(|(v, _)| cut_of_phase < *v)
            .unwrap_or(true)
        {
            best = Some((cut_of_phase, groups[last].clone()));
        }
        // contract `last` into `prev`
        for &x in &active {
            if x != last && x != prev {
                w[prev][x] += w[last][x];
                w[x][prev] = w[prev][x];
            }
        }
        let moved = std::mem::take(&mut groups[last]);
        groups[prev].extend(moved);
        active.retain(|&x| x != last);
    }
    let (value, mut side) = best.unwrap();
    side.sort_unstable();
    Ok((value, side))
}

/// The folklore recursion: find a global minimum cut, stop if it is at
/// least k, otherwise recurse on both sides. Exact on any size, quadratic
/// or worse; meant as the ground truth for desk-scale graphs.
pub fn brute_partition_recursive_mincut(g: &Graph, k: u32) -> Result<VertexPartition> {
    if k < 1 {
        return Err(Error::InvalidK(k));
    }
    let mut parts: Vec<Vec<VertexId>> = Vec::new();
    let all: Vec<VertexId> = g.vertices().collect();
    recurse_mincut(g, &all, k, &mut parts)?;
    VertexPartition::from_parts(parts)
}

fn recurse_mincut(
    g: &Graph,
    members: &[VertexId],
    k: u32,
    out: &mut Vec<Vec<VertexId>>,
) -> Result<()> {
    match members.len() {
        0 => return Ok(()),
        1 => {
            out.push(members.to_vec());
            return Ok(());
        }
        _ => {}
    }
    let sub = g.induced_subgraph(members)?;
    let (value, side) = global_min_cut(&sub)?;
    if value >= k as u64 {
        out.push(members.to_vec());
        return Ok(());
    }
    let side_members: Vec<VertexId> = side.iter().map(|v| members[v.index()]).collect();
    let rest: Vec<VertexId> = members
        .iter()
        .copied()
        .filter(|v| side_members.binary_search(v).is_err())
        .collect();
    recurse_mincut(g, &side_members, k, out)?;
    recurse_mincut(g, &rest, k, out)
}

/// k-edge-connected components of the whole graph: vertices are grouped
/// when their pairwise connectivity in G (not in the induced subgraph) is
/// at least k. All-pairs capped flow closed under union-find.
pub fn kecc_components(g: &Graph, k: u32) -> Result<VertexPartition> {
    if k < 1 {
        return Err(Error::InvalidK(k));
    }
    let verts: Vec<VertexId> = g.vertices().collect();
    let mut dsu = Dsu::new(g.universe());
    for (i, &u) in verts.iter().enumerate() {
        for &v in &verts[i + 1..] {
            if dsu.find(u.index()) == dsu.find(v.index()) {
                continue; // λ >= k is transitive
            }
            if pairwise_connectivity_capped(g, u, v, k) >= k {
                dsu.union(u.index(), v.index());
            }
        }
    }
    let mut parts: Vec<Vec<VertexId>> = vec![Vec::new(); g.universe()];
    for &v in &verts {
        parts[dsu.find(v.index())].push(v);
    }
    VertexPartition::from_parts(parts.into_iter().filter(|p| !p.is_empty()).collect())
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            self.parent[x] = self.find(self.parent[x]);
        }
        self.parent[x]
    }

    fn union(&mut self, x: usize, y: usize) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx != ry {
            self.parent[rx.max(ry)] = rx.min(ry);
        }
    }
}

/// All k-cuts of a small graph: every nonempty vertex set with fewer than
/// k boundary edges, plus the whole vertex set as the trivial cut. Sets
/// are bitmasks over `vertices` (bit i = `vertices[i]`).
pub struct CutEnumeration {
    pub vertices: Vec<VertexId>,
    pub masks: Vec<u32>,
}

impl CutEnumeration {
    pub fn sets(&self) -> Vec<Vec<VertexId>> {
        self.masks
            .iter()
            .map(|&m| {
                (0..self.vertices.len())
                    .filter(|i| m >> i & 1 == 1)
                    .map(|i| self.vertices[i])
                    .collect()
            })
            .collect()
    }
}

/// Exhaustive k-cut enumeration by Gray-code subset walk, O(2^n · deg).
/// Errors above `ENUMERATION_CAP` vertices.
pub fn enumerate_k_cuts(g: &Graph, k: u32) -> Result<CutEnumeration> {
    let vertices: Vec<VertexId> = g.vertices().collect();
    let n = vertices.len();
    if n > ENUMERATION_CAP {
        return Err(Error::TooLarge {
            size: n,
            cap: ENUMERATION_CAP,
        });
    }
    let mut rank = vec![usize::MAX; g.universe()];
    for (i, &v) in vertices.iter().enumerate() {
        rank[v.index()] = i;
    }
    let mut masks = Vec::new();
    if n == 0 {
        return Ok(CutEnumeration { vertices, masks });
    }
    let mut in_set = vec![false; n];
    let mut mask: u32 = 0;
    let mut boundary: i64 = 0;
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    for step in 1u64..=(1u64 << n) - 1 {
        let bit = step.trailing_zeros() as usize;
        let v = vertices[bit];
        let entering = !in_set[bit];
        for &e in g.incident(v) {
            let w = g.other_end(e, v);
            let w_in = in_set[rank[w.index()]];
            // an edge to an inside vertex stops/starts crossing as v flips
            let delta = if w_in { -1 } else { 1 };
            boundary += if entering { delta } else { -delta };
        }
        in_set[bit] = entering;
        mask ^= 1 << bit;
        if (boundary as u64) < k as u64 || mask == full {
            masks.push(mask);
        }
    }
    Ok(CutEnumeration { vertices, masks })
}

/// Supergraph that makes the whole original vertex set k-edge-connected
/// without changing its maximal k-edge-connected subgraphs: consecutive
/// original vertices are joined by k parallel length-2 dummy paths. The
/// dummies keep degree 2, which requires k > 2. Original ids are
/// preserved; dummies take the ids at and above the original universe.
pub fn dummy_path_supergraph(g: &Graph, k: u32) -> Result<Graph> {
    if k <= 2 {
        return Err(Error::BadParams(format!("dummy paths need k > 2, got {k}")));
    }
    let mut out = g.clone();
    let chain: Vec<VertexId> = g.vertices().collect();
    let mut next_label = g
        .vertices()
        .map(|v| g.label(v))
        .max()
        .map(|l| l + 1)
        .unwrap_or(0);
    for pair in chain.windows(2) {
        for _ in 0..k {
            let d = out.add_vertex(next_label);
            next_label += 1;
            out.add_edge(pair[0], d)?;
            out.add_edge(d, pair[1])?;
        }
    }
    Ok(out)
}

/// All bridge edges, multigraph-aware: parallel edges are never bridges.
pub fn bridges(g: &Graph) -> Vec<EdgeId> {
    let n = g.universe();
    let mut disc = vec![0u32; n];
    let mut low = vec![0u32; n];
    let mut visited = vec![false; n];
    let mut out = Vec::new();
    let mut timer = 1u32;
    // iterative DFS: (vertex, incident index, edge we arrived by)
    let mut stack: Vec<(VertexId, usize, Option<EdgeId>)> = Vec::new();
    for root in g.vertices() {
        if visited[root.index()] {
            continue;
        }
        visited[root.index()] = true;
        disc[root.index()] = timer;
        low[root.index()] = timer;
        timer += 1;
        stack.push((root, 0, None));
        while let Some(&mut (x, ref mut idx, via)) = stack.last_mut() {
            if *idx < g.incident(x).len() {
                let e = g.incident(x)[*idx];
                *idx += 1;
                if Some(e) == via {
                    continue; // skip only the arrival edge; parallels still count
                }
                let w = g.other_end(e, x);
                if visited[w.index()] {
                    low[x.index()] = low[x.index()].min(disc[w.index()]);
                } else {
                    visited[w.index()] = true;
                    disc[w.index()] = timer;
                    low[w.index()] = timer;
                    timer += 1;
                    stack.push((w, 0, Some(e)));
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p.index()] = low[p.index()].min(low[x.index()]);
                    if low[x.index()] > disc[p.index()] {
                        out.push(via.unwrap());
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Maximal 2-edge-connected subgraphs by the classical route: delete all
/// bridges, take connected components.
pub fn two_edge_connected_subgraphs(g: &Graph) -> VertexPartition {
    let mut h = g.clone();
    for e in bridges(g) {
        h.delete_edge(e).expect("bridge is live");
    }
    h.connected_components()
}
