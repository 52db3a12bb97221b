//! Deterministic test-graph generators. Same seed, same edge list.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Random multigraph: `m` edges with uniform distinct endpoints. Parallel
/// edges arise naturally.
pub fn random_multigraph(n: usize, m: usize, seed: u64) -> Result<Graph> {
    if m > 0 && n < 2 {
        return Err(Error::BadParams(format!(
            "{m} edges need at least 2 vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::with_vertices(n);
    for _ in 0..m {
        loop {
            let u = rng.gen_range(0..n) as u32;
            let v = rng.gen_range(0..n) as u32;
            if u != v {
                g.add_edge(VertexId(u), VertexId(v))?;
                break;
            }
        }
    }
    Ok(g)
}

/// Cycle on `n >= 2` vertices; `n == 2` is a pair of parallel edges.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::BadParams(format!("cycle needs n >= 2, got {n}")));
    }
    let mut g = Graph::with_vertices(n);
    for i in 0..n {
        g.add_edge(VertexId(i as u32), VertexId(((i + 1) % n) as u32))?;
    }
    Ok(g)
}

/// Uniform random recursive tree: vertex `v` attaches to a random earlier
/// vertex.
pub fn tree(n: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::with_vertices(n);
    for v in 1..n {
        let p = rng.gen_range(0..v) as u32;
        g.add_edge(VertexId(v as u32), VertexId(p))?;
    }
    Ok(g)
}

/// Two cliques K_a (vertices `0..a`) and K_b (vertices `a..a+b`) joined by
/// `bridges` distinct cross edges in lexicographic order.
pub fn two_cliques(a: usize, b: usize, bridges: usize) -> Result<Graph> {
    if bridges > a * b {
        return Err(Error::BadParams(format!(
            "{bridges} bridges exceed the {} distinct cross pairs",
            a * b
        )));
    }
    let mut g = Graph::with_vertices(a + b);
    for block in [(0, a), (a, a + b)] {
        for u in block.0..block.1 {
            for v in (u + 1)..block.1 {
                g.add_edge(VertexId(u as u32), VertexId(v as u32))?;
            }
        }
    }
    for i in 0..bridges {
        let u = (i / b) as u32;
        let v = (a + i % b) as u32;
        g.add_edge(VertexId(u), VertexId(v))?;
    }
    Ok(g)
}

/// Two cliques connected only through `channels` disjoint length-2 paths
/// between vertex 0 and vertex `a`. The middle vertices have degree 2, so
/// for k in {3..=channels} the cliques are k-edge-connected to each other
/// in the whole graph while no subgraph containing both is k-edge-connected.
pub fn clique_pair_with_channels(a: usize, b: usize, channels: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::BadParams("cliques must be nonempty".into()));
    }
    let mut g = two_cliques(a, b, 0)?;
    for _ in 0..channels {
        let mid = g.add_vertex(g.universe() as u64);
        g.add_edge(VertexId(0), mid)?;
        g.add_edge(mid, VertexId(a as u32))?;
    }
    Ok(g)
}

/// The Petersen graph: outer 5-cycle, inner pentagram, five spokes.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5u32 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, &edges).unwrap()
}
