//! Property tests for the structural invariants: volume accounting, degree
//! bookkeeping under deletions, parse/serialize stability, oracle laws
//! (symmetry, transitivity, agreement with fresh recomputation), and the
//! decremental driver's amortized query budget.

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use kecs::decremental::DecrementalState;
use kecs::gen;
use kecs::graph::{parse_graph, serialize_graph, Graph, VertexId};
use kecs::oracle::{st_connectivity_capped, BaselineOracle, ConnectivityOracle};

/// Total oracle queries over a stream deleting every edge must stay below
/// AMORTIZED_QUERY_FACTOR * m0 * (ceil(log2 m0) + 1). Worst measured 1.5.
const AMORTIZED_QUERY_FACTOR: f64 = 4.0;

fn small_graph() -> impl Strategy<Value = Graph> {
    (2usize..=12).prop_flat_map(|n| {
        prop::collection::vec((0..n as u32, 0..n as u32), 0..=3 * n).prop_map(move |pairs| {
            let mut g = Graph::with_vertices(n);
            for (u, v) in pairs {
                if u != v {
                    g.add_edge(VertexId(u), VertexId(v)).unwrap();
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn volume_splits_into_cut_plus_inside(g in small_graph(), mask in any::<u32>()) {
        let s: Vec<VertexId> = g
            .vertices()
            .filter(|v| mask >> (v.index() % 32) & 1 == 1)
            .collect();
        let cut = g.cut_edges(&s).unwrap().len() as u64;
        let inside = g.induced_subgraph(&s).unwrap().edge_count() as u64;
        prop_assert_eq!(g.vol(s.iter().copied()), cut + 2 * inside);
    }

    #[test]
    fn degree_sum_tracks_deletions(g in small_graph(), mask in any::<u64>()) {
        let mut g = g;
        let doomed: Vec<_> = g
            .edge_ids()
            .filter(|e| mask >> (e.index() % 64) & 1 == 1)
            .collect();
        for e in doomed {
            g.delete_edge(e).unwrap();
        }
        let degsum: u64 = g.vertices().map(|v| g.degree(v) as u64).sum();
        prop_assert_eq!(degsum, 2 * g.edge_count() as u64);
    }

    #[test]
    fn serialization_is_a_fixed_point(g in small_graph()) {
        let text = serialize_graph(&g);
        let parsed = parse_graph(text.as_bytes()).unwrap();
        prop_assert_eq!(parsed.vertex_count(), g.vertex_count());
        prop_assert_eq!(parsed.edge_count(), g.edge_count());
        prop_assert_eq!(serialize_graph(&parsed), text);
    }

    #[test]
    fn induced_on_everything_keeps_the_edge_multiset(g in small_graph()) {
        let all: Vec<VertexId> = g.vertices().collect();
        let sub = g.induced_subgraph(&all).unwrap();
        let mut a: Vec<(u64, u64)> = g
            .edge_ids()
            .map(|e| {
                let (u, v) = g.ends(e);
                (g.label(u).min(g.label(v)), g.label(u).max(g.label(v)))
            })
            .collect();
        let mut b: Vec<(u64, u64)> = sub
            .edge_ids()
            .map(|e| {
                let (u, v) = sub.ends(e);
                (sub.label(u).min(sub.label(v)), sub.label(u).max(sub.label(v)))
            })
            .collect();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn oracle_is_symmetric_and_transitive(g in small_graph(), k in 1u32..=4) {
        let mut o = BaselineOracle::init(&g, k).unwrap();
        let verts: Vec<VertexId> = g.vertices().collect();
        let n = verts.len();
        let mut answer = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                answer[i][j] = o.is_k_connected(verts[i], verts[j]).unwrap();
            }
        }
        for i in 0..n {
            prop_assert!(answer[i][i]);
            for j in 0..n {
                prop_assert_eq!(answer[i][j], answer[j][i]);
                for l in 0..n {
                    if answer[i][j] && answer[j][l] {
                        prop_assert!(answer[i][l], "transitivity failed");
                    }
                }
            }
        }
    }

    #[test]
    fn oracle_after_deletions_matches_fresh_flow(
        g in small_graph(),
        mask in any::<u64>(),
        k in 1u32..=4,
    ) {
        let mut o = BaselineOracle::init(&g, k).unwrap();
        let mut current = g.clone();
        let doomed: Vec<_> = g
            .edge_ids()
            .filter(|e| mask >> (e.index() % 64) & 1 == 1)
            .collect();
        for e in doomed {
            o.delete(e).unwrap();
            current.delete_edge(e).unwrap();
        }
        let verts: Vec<VertexId> = g.vertices().collect();
        for &s in &verts {
            for &t in &verts {
                let expect = s == t || st_connectivity_capped(&current, s, t, k).unwrap() >= k;
                prop_assert_eq!(o.is_k_connected(s, t).unwrap(), expect);
            }
        }
    }
}

#[test]
fn oracle_matches_fresh_flow_up_to_n60() {
    use kecs::reference::pairwise_connectivity_capped;
    for seed in 0..10u64 {
        let n = 20 + (seed as usize * 9) % 41;
        let m = 2 * n + (seed as usize * 13) % n;
        let g = gen::random_multigraph(n, m, seed).unwrap();
        let k = 2 + (seed % 3) as u32;
        let mut o = BaselineOracle::init(&g, k).unwrap();
        let mut current = g.clone();
        // delete a third of the edges, then spot-check sampled pairs
        let doomed: Vec<_> = g.edge_ids().filter(|e| e.index() % 3 == 0).collect();
        for e in doomed {
            o.delete(e).unwrap();
            current.delete_edge(e).unwrap();
        }
        for u in (0..n as u32).step_by(3) {
            for v in (1..n as u32).step_by(4) {
                let s = VertexId(u);
                let t = VertexId(v);
                let expect = s == t || st_connectivity_capped(&current, s, t, k).unwrap() >= k;
                assert_eq!(o.is_k_connected(s, t).unwrap(), expect, "seed={seed}");
                let independent = pairwise_connectivity_capped(&current, s, t, k) >= k || s == t;
                assert_eq!(o.is_k_connected(s, t).unwrap(), independent, "seed={seed}");
            }
        }
    }
}

#[test]
fn decremental_queries_amortize_over_the_stream() {
    for seed in 0..40u64 {
        let n = 4 + (seed as usize * 3) % 27;
        let m = 2 + (seed as usize * 17) % (3 * n);
        let k = 1 + (seed % 5) as u32;
        let g = gen::random_multigraph(n, m, seed).unwrap();
        let mut st = DecrementalState::init(&g, k).unwrap();
        let mut order: Vec<(VertexId, VertexId)> = g.edge_ids().map(|e| g.ends(e)).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        order.shuffle(&mut rng);
        for (u, v) in order {
            st.delete(u, v).unwrap();
        }
        let m0 = g.edge_count().max(1) as f64;
        let bound = AMORTIZED_QUERY_FACTOR * m0 * (m0.log2().ceil() + 1.0);
        let queries = st.counters().query_count as f64;
        assert!(
            queries <= bound,
            "seed={seed}: {queries} queries exceed {bound:.1}"
        );
    }
}
