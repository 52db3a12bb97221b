//! Undirected multigraph with stable vertex/edge identities, O(1) edge
//! deletion, induced subgraphs, and the text formats used by the CLI.
//!
//! Vertices and edges are dense integer ids within one graph. Deleting an
//! entity retires its id; ids are never reused. Parallel edges are allowed
//! and distinguished by id, self-loops are rejected.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::io::BufRead;

use crate::error::{Error, Result};

/// Dense vertex id, unique within one graph's universe.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Stable edge id, unique within one graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct EdgeId(pub u32);

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug)]
struct EdgeRec {
    ends: [VertexId; 2],
    /// Position of this edge inside each endpoint's incidence list, kept
    /// exact so deletion is O(1).
    pos: [u32; 2],
    /// Edge id in the graph this one was originally induced from, for
    /// tracing edges through nested subgraphs. Equals the own id for
    /// graphs built directly.
    origin: EdgeId,
    alive: bool,
}

/// Mutable undirected multigraph.
#[derive(Clone, Debug, Default)]
pub struct Graph {
    labels: Vec<u64>,
    vert_alive: Vec<bool>,
    live_verts: usize,
    deg: Vec<u32>,
    adj: Vec<Vec<EdgeId>>,
    edges: Vec<EdgeRec>,
    live_edges: usize,
}

impl Graph {
    pub fn new() -> Self {
        Graph::default()
    }

    /// Graph with `n` isolated vertices labeled `0..n`.
    pub fn with_vertices(n: usize) -> Self {
        let mut g = Graph::new();
        for i in 0..n {
            g.add_vertex(i as u64);
        }
        g
    }

    /// Convenience constructor: vertices `0..n`, edges by index pairs.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let mut g = Graph::with_vertices(n);
        for &(u, v) in edges {
            g.add_edge(VertexId(u), VertexId(v))?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, label: u64) -> VertexId {
        let id = VertexId(self.labels.len() as u32);
        self.labels.push(label);
        self.vert_alive.push(true);
        self.deg.push(0);
        self.adj.push(Vec::new());
        self.live_verts += 1;
        id
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        let id = EdgeId(self.edges.len() as u32);
        self.add_edge_with_origin(u, v, id)
    }

    pub(crate) fn add_edge_with_origin(
        &mut self,
        u: VertexId,
        v: VertexId,
        origin: EdgeId,
    ) -> Result<EdgeId> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop { line: None });
        }
        let id = EdgeId(self.edges.len() as u32);
        let pos = [
            self.adj[u.index()].len() as u32,
            self.adj[v.index()].len() as u32,
        ];
        self.adj[u.index()].push(id);
        self.adj[v.index()].push(id);
        self.deg[u.index()] += 1;
        self.deg[v.index()] += 1;
        self.edges.push(EdgeRec {
            ends: [u, v],
            pos,
            origin,
            alive: true,
        });
        self.live_edges += 1;
        Ok(id)
    }

    #[inline]
    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if self.contains_vertex(v) {
            Ok(())
        } else {
            Err(Error::NoSuchVertex(v.0))
        }
    }

    #[inline]
    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vert_alive.get(v.index()).copied().unwrap_or(false)
    }

    #[inline]
    pub fn edge_alive(&self, e: EdgeId) -> bool {
        self.edges.get(e.index()).map(|r| r.alive).unwrap_or(false)
    }

    /// Both endpoints of a live edge. Panics on retired or unknown ids.
    #[inline]
    pub fn ends(&self, e: EdgeId) -> (VertexId, VertexId) {
        let rec = &self.edges[e.index()];
        assert!(rec.alive, "edge {} is not alive", e.0);
        (rec.ends[0], rec.ends[1])
    }

    /// The endpoint of `e` that is not `x`.
    #[inline]
    pub fn other_end(&self, e: EdgeId, x: VertexId) -> VertexId {
        let rec = &self.edges[e.index()];
        if rec.ends[0] == x {
            rec.ends[1]
        } else {
            rec.ends[0]
        }
    }

    /// Id of the corresponding edge in the graph this graph was induced
    /// from; composed across nested inductions.
    pub fn edge_origin(&self, e: EdgeId) -> EdgeId {
        self.edges[e.index()].origin
    }

    /// Number of live vertices.
    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.live_verts
    }

    /// Number of live edges, counting parallels separately.
    #[inline]
    pub fn edge_count(&self) -> usize {
        self.live_edges
    }

    /// Size of the id space, including retired vertices.
    #[inline]
    pub fn universe(&self) -> usize {
        self.labels.len()
    }

    /// Size of the edge id space, including retired edges.
    #[inline]
    pub fn edge_universe(&self) -> usize {
        self.edges.len()
    }

    pub fn label(&self, v: VertexId) -> u64 {
        self.labels[v.index()]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> u32 {
        self.deg[v.index()]
    }

    /// Live vertices in ascending id order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vert_alive
            .iter()
            .enumerate()
            .filter(|(_, &a)| a)
            .map(|(i, _)| VertexId(i as u32))
    }

    /// Live edges in ascending id order.
    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, r)| r.alive)
            .map(|(i, _)| EdgeId(i as u32))
    }

    /// Live incident edges of `v`; every entry is alive, parallels repeat.
    #[inline]
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.adj[v.index()]
    }

    /// Sum of degrees over `s`.
    pub fn vol<I: IntoIterator<Item = VertexId>>(&self, s: I) -> u64 {
        s.into_iter().map(|v| self.deg[v.index()] as u64).sum()
    }

    /// Volume of the whole live vertex set, i.e. twice the live edge count.
    #[inline]
    pub fn total_volume(&self) -> u64 {
        2 * self.live_edges as u64
    }

    /// Removes one edge; both endpoint degrees drop by one.
    pub fn delete_edge(&mut self, e: EdgeId) -> Result<()> {
        match self.edges.get(e.index()) {
            Some(rec) if rec.alive => {}
            _ => return Err(Error::NoSuchEdge(e.0)),
        }
        for side in 0..2 {
            let v = self.edges[e.index()].ends[side];
            let p = self.edges[e.index()].pos[side] as usize;
            let list = &mut self.adj[v.index()];
            list.swap_remove(p);
            if p < list.len() {
                let moved = list[p];
                let mrec = &mut self.edges[moved.index()];
                let mside = if mrec.ends[0] == v { 0 } else { 1 };
                mrec.pos[mside] = p as u32;
            }
            self.deg[v.index()] -= 1;
        }
        self.edges[e.index()].alive = false;
        self.live_edges -= 1;
        Ok(())
    }

    /// Removes a vertex along with all its incident edges; the id retires.
    pub fn delete_vertex(&mut self, v: VertexId) -> Result<()> {
        self.check_vertex(v)?;
        while let Some(&e) = self.adj[v.index()].last() {
            self.delete_edge(e)?;
        }
        self.vert_alive[v.index()] = false;
        self.live_verts -= 1;
        Ok(())
    }

    /// Lowest-id live edge between `u` and `v`, if any. Parallel edges are
    /// resolved deterministically to the lowest surviving id.
    pub fn find_edge(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        if !self.contains_vertex(u) || !self.contains_vertex(v) {
            return None;
        }
        self.adj[u.index()]
            .iter()
            .copied()
            .filter(|&e| self.other_end(e, u) == v)
            .min()
    }

    /// Every live edge with exactly one endpoint in `s`, ascending by id.
    /// Parallel edges are counted separately.
    pub fn cut_edges(&self, s: &[VertexId]) -> Result<Vec<EdgeId>> {
        let set = self.vertex_set(s)?;
        let mut out = Vec::new();
        for &v in s {
            for &e in self.incident(v) {
                if !set.contains(&self.other_end(e, v)) {
                    out.push(e);
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    fn vertex_set(&self, s: &[VertexId]) -> Result<HashSet<VertexId>> {
        let mut set = HashSet::with_capacity(s.len());
        for &v in s {
            self.check_vertex(v)?;
            if !set.insert(v) {
                return Err(Error::InvalidPartition(format!("duplicate vertex {v}")));
            }
        }
        Ok(set)
    }

    /// Fresh graph induced on `s`, value-independent of `self`.
    ///
    /// Vertices of the result are the members of `s` in ascending id order,
    /// re-indexed densely from 0. Labels carry over and `edge_origin`
    /// traces each edge back to this graph's ids.
    pub fn induced_subgraph(&self, s: &[VertexId]) -> Result<Graph> {
        let set = self.vertex_set(s)?;
        let mut sorted: Vec<VertexId> = s.to_vec();
        sorted.sort_unstable();
        Ok(self.induced_from_sorted(&sorted, |w| set.contains(&w)))
    }

    /// Induction core shared with the solver's hot path: `sorted` must hold
    /// distinct live vertices in ascending order and `in_set` must agree
    /// with membership in `sorted`.
    pub(crate) fn induced_from_sorted<F>(&self, sorted: &[VertexId], in_set: F) -> Graph
    where
        F: Fn(VertexId) -> bool,
    {
        let mut g = Graph::new();
        for &v in sorted {
            g.add_vertex(self.label(v));
        }
        let rank =
            |v: VertexId| -> u32 { sorted.binary_search(&v).expect("member of sorted set") as u32 };
        let mut keep: Vec<EdgeId> = Vec::new();
        for &v in sorted {
            for &e in self.incident(v) {
                let w = self.other_end(e, v);
                // collect each internal edge once, from its smaller endpoint
                if v < w && in_set(w) {
                    keep.push(e);
                }
            }
        }
        keep.sort_unstable();
        for e in keep {
            let (u, v) = self.ends(e);
            let origin = self.edge_origin(e);
            g.add_edge_with_origin(VertexId(rank(u)), VertexId(rank(v)), origin)
                .expect("endpoints are distinct members");
        }
        g
    }

    /// Connected components over live vertices; isolated vertices become
    /// singleton parts.
    pub fn connected_components(&self) -> VertexPartition {
        let mut seen = vec![false; self.universe()];
        let mut parts: Vec<Vec<VertexId>> = Vec::new();
        let mut queue = VecDeque::new();
        for start in self.vertices() {
            if seen[start.index()] {
                continue;
            }
            seen[start.index()] = true;
            queue.push_back(start);
            let mut part = Vec::new();
            while let Some(x) = queue.pop_front() {
                part.push(x);
                for &e in self.incident(x) {
                    let w = self.other_end(e, x);
                    if !seen[w.index()] {
                        seen[w.index()] = true;
                        queue.push_back(w);
                    }
                }
            }
            parts.push(part);
        }
        VertexPartition::from_parts(parts).expect("BFS parts are disjoint")
    }
}

/// Disjoint nonempty vertex sets covering a universe, held in canonical
/// order: members ascending within a part, parts ascending by smallest
/// member.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexPartition {
    parts: Vec<Vec<VertexId>>,
    universe: Vec<VertexId>,
}

impl VertexPartition {
    pub fn empty() -> Self {
        VertexPartition {
            parts: Vec::new(),
            universe: Vec::new(),
        }
    }

    pub fn from_parts(mut parts: Vec<Vec<VertexId>>) -> Result<Self> {
        for part in &mut parts {
            if part.is_empty() {
                return Err(Error::InvalidPartition("empty part".into()));
            }
            part.sort_unstable();
            part.dedup();
        }
        parts.sort_unstable_by_key(|p| p[0]);
        let mut universe: Vec<VertexId> = parts.iter().flatten().copied().collect();
        universe.sort_unstable();
        if universe.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPartition("parts are not disjoint".into()));
        }
        Ok(VertexPartition { parts, universe })
    }

    pub fn parts(&self) -> &[Vec<VertexId>] {
        &self.parts
    }

    pub fn universe(&self) -> &[VertexId] {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part_of(&self, v: VertexId) -> Option<usize> {
        self.parts.iter().position(|p| p.binary_search(&v).is_ok())
    }

    pub fn same_part(&self, u: VertexId, v: VertexId) -> bool {
        match (self.part_of(u), self.part_of(v)) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }

    /// True if every part of `self` is contained in some part of `coarser`.
    pub fn refines(&self, coarser: &VertexPartition) -> bool {
        self.parts.iter().all(|p| {
            coarser
                .part_of(p[0])
                .map(|i| {
                    p.iter()
                        .all(|&v| coarser.parts[i].binary_search(&v).is_ok())
                })
                .unwrap_or(false)
        })
    }
}

/// Canonical partition text: one part per line, labels ascending within a
/// line, lines sorted by smallest label. Bit-exact for diff-based testing.
pub fn format_partition(p: &VertexPartition, g: &Graph) -> String {
    let mut lines: Vec<Vec<u64>> = p
        .parts()
        .iter()
        .map(|part| {
            let mut labels: Vec<u64> = part.iter().map(|&v| g.label(v)).collect();
            labels.sort_unstable();
            labels
        })
        .collect();
    lines.sort_unstable();
    let mut out = String::new();
    for line in lines {
        let strs: Vec<String> = line.iter().map(u64::to_string).collect();
        out.push_str(&strs.join(" "));
        out.push('\n');
    }
    out
}

/// Parses the edge-list format: first nonblank non-comment line is the
/// vertex count, each following line is `u v`. `#` starts a comment,
/// duplicate lines are parallel edges, self-loops are rejected.
///
/// Vertex labels are arbitrary nonnegative integers; they are compacted to
/// dense ids in ascending label order. If fewer distinct labels appear than
/// the declared count, the remaining vertices are isolated and take the
/// smallest unused labels.
pub fn parse_graph<R: BufRead>(reader: R) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(u64, u64, usize)> = Vec::new();
    let mut labels: HashSet<u64> = HashSet::new();
    for (i, line) in reader.lines().enumerate() {
        let lineno = i + 1;
        let line = line.map_err(|e| Error::Parse {
            line: lineno,
            msg: e.to_string(),
        })?;
        let text = line.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let fields: Vec<&str> = text.split_whitespace().collect();
        if declared.is_none() {
            if fields.len() != 1 {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "expected a single vertex count".into(),
                });
            }
            let n = fields[0].parse::<usize>().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("invalid vertex count '{}'", fields[0]),
            })?;
            declared = Some(n);
            continue;
        }
        if fields.len() != 2 {
            return Err(Error::Parse {
                line: lineno,
                msg: "expected 'u v'".into(),
            });
        }
        let mut ends = [0u64; 2];
        for (slot, f) in fields.iter().enumerate() {
            ends[slot] = f.parse::<u64>().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("invalid vertex '{f}'"),
            })?;
        }
        if ends[0] == ends[1] {
            return Err(Error::SelfLoop { line: Some(lineno) });
        }
        labels.insert(ends[0]);
        labels.insert(ends[1]);
        edges.push((ends[0], ends[1], lineno));
    }
    let n = declared.ok_or(Error::Parse {
        line: 1,
        msg: "missing vertex count".into(),
    })?;
    if labels.len() > n {
        return Err(Error::Parse {
            line: 1,
            msg: format!(
                "{} distinct vertices exceed declared count {}",
                labels.len(),
                n
            ),
        });
    }
    let mut all: Vec<u64> = labels.iter().copied().collect();
    all.sort_unstable();
    // pad up to the declared count with the smallest unused labels
    let mut next = 0u64;
    let mut have: HashSet<u64> = labels.clone();
    while all.len() < n {
        while have.contains(&next) {
            next += 1;
        }
        have.insert(next);
        all.push(next);
    }
    all.sort_unstable();
    let mut g = Graph::new();
    let mut id_of: HashMap<u64, VertexId> = HashMap::with_capacity(all.len());
    for label in all {
        let id = g.add_vertex(label);
        id_of.insert(label, id);
    }
    for (u, v, _line) in edges {
        g.add_edge(id_of[&u], id_of[&v])?;
    }
    Ok(g)
}

/// Emits the same format `parse_graph` accepts: live vertex count, then one
/// `u v` line per live edge in ascending edge-id order, using labels.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("{}\n", g.vertex_count());
    for e in g.edge_ids() {
        let (u, v) = g.ends(e);
        out.push_str(&format!("{} {}\n", g.label(u), g.label(v)));
    }
    out
}
