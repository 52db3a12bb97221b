//! Local discovery of the connected component of G[kECC(u)] containing a
//! seed vertex, and the two-sided lockstep race that returns whichever
//! component has the smaller volume.
//!
//! The search is a BFS that admits a newly found neighbor only after the
//! oracle confirms it is k-edge-connected to the seed. It is written as a
//! resumable state machine advancing one edge-endpoint scan at a time so
//! two searches can be interleaved deterministically.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::oracle::ConnectivityOracle;

#[derive(Debug, PartialEq, Eq)]
enum Step {
    Scanned,
    Finished,
}

/// Resumable single-seed search. `visited` only ever holds vertices
/// confirmed k-edge-connected to the seed and reachable from it through
/// confirmed vertices.
pub struct LocalSearch {
    seed: VertexId,
    visited: HashSet<VertexId>,
    rejected: HashSet<VertexId>,
    queue: VecDeque<VertexId>,
    current: Option<(VertexId, usize)>,
    scans: usize,
    done: bool,
}

impl LocalSearch {
    pub fn new(seed: VertexId) -> Self {
        let mut queue = VecDeque::new();
        queue.push_back(seed);
        LocalSearch {
            seed,
            visited: HashSet::from([seed]),
            rejected: HashSet::new(),
            queue,
            current: None,
            scans: 0,
            done: false,
        }
    }

    pub fn seed(&self) -> VertexId {
        self.seed
    }

    /// Edge-endpoint scans performed so far.
    pub fn scans(&self) -> usize {
        self.scans
    }

    pub fn visited(&self) -> &HashSet<VertexId> {
        &self.visited
    }

    /// Advances by at most one edge-endpoint scan. Completion (an empty
    /// frontier) is detected as its own step, so a finished search of
    /// volume V has taken exactly V scanning steps plus one detecting step.
    ///
    /// `rival` is the other race side's visited set; accepting a vertex the
    /// rival already holds means the seeds were k-edge-connected after all,
    /// which the caller's contract forbids.
    fn step<O: ConnectivityOracle>(
        &mut self,
        g: &Graph,
        oracle: &mut O,
        rival: Option<&HashSet<VertexId>>,
    ) -> Result<Step> {
        debug_assert!(!self.done);
        loop {
            match self.current {
                None => match self.queue.pop_front() {
                    Some(x) => self.current = Some((x, 0)),
                    None => {
                        self.done = true;
                        return Ok(Step::Finished);
                    }
                },
                Some((x, i)) => {
                    if i >= g.incident(x).len() {
                        self.current = None;
                        continue;
                    }
                    self.current = Some((x, i + 1));
                    self.scans += 1;
                    let w = g.other_end(g.incident(x)[i], x);
                    if self.visited.contains(&w) || self.rejected.contains(&w) {
                        return Ok(Step::Scanned);
                    }
                    if oracle.is_k_connected(self.seed, w)? {
                        if let Some(r) = rival {
                            if r.contains(&w) {
                                return Err(Error::RaceOverlap {
                                    u: self.seed.0,
                                    v: w.0,
                                });
                            }
                        }
                        self.visited.insert(w);
                        self.queue.push_back(w);
                    } else {
                        self.rejected.insert(w);
                    }
                    return Ok(Step::Scanned);
                }
            }
        }
    }

    fn run_to_completion<O: ConnectivityOracle>(
        mut self,
        g: &Graph,
        oracle: &mut O,
    ) -> Result<Discovered> {
        while self.step(g, oracle, None)? == Step::Scanned {}
        Ok(self.into_discovered())
    }

    fn into_discovered(self) -> Discovered {
        let mut members: Vec<VertexId> = self.visited.iter().copied().collect();
        members.sort_unstable();
        Discovered {
            seed: self.seed,
            members,
            set: self.visited,
            scans: self.scans,
        }
    }
}

/// A completed search: the connected component of G[kECC(seed)] that
/// contains the seed.
#[derive(Debug)]
pub struct Discovered {
    pub seed: VertexId,
    /// Component members in ascending id order.
    pub members: Vec<VertexId>,
    pub set: HashSet<VertexId>,
    /// Edge-endpoint scans spent; at completion this equals vol(members).
    pub scans: usize,
}

/// Connected component of G[kECC(u)] containing `u`. Oracle verdicts are
/// memoized per call through the visited/rejected sets; they must not be
/// reused across calls because the graph mutates between calls.
pub fn local_component<O: ConnectivityOracle>(
    g: &Graph,
    oracle: &mut O,
    u: VertexId,
) -> Result<Vec<VertexId>> {
    if !g.contains_vertex(u) {
        return Err(Error::NoSuchVertex(u.0));
    }
    Ok(LocalSearch::new(u).run_to_completion(g, oracle)?.members)
}

/// Runs the component searches of `u` and `v` in lockstep, alternating one
/// edge-endpoint scan at a time with `u` stepping first, and returns the
/// side that completes first. Because completion takes vol+1 steps, the
/// returned side satisfies vol(winner) <= vol(loser); ties go to `u`.
///
/// Requires that `u` and `v` are not k-edge-connected. If the two searches
/// ever accept a common vertex the contract was violated and an error is
/// returned.
pub fn race_smaller<O: ConnectivityOracle>(
    g: &Graph,
    oracle: &mut O,
    u: VertexId,
    v: VertexId,
) -> Result<Discovered> {
    if !g.contains_vertex(u) {
        return Err(Error::NoSuchVertex(u.0));
    }
    if !g.contains_vertex(v) {
        return Err(Error::NoSuchVertex(v.0));
    }
    if u == v {
        return Err(Error::RaceOverlap { u: u.0, v: v.0 });
    }
    let mut a = LocalSearch::new(u);
    let mut b = LocalSearch::new(v);
    loop {
        if a.step(g, oracle, Some(&b.visited))? == Step::Finished {
            return Ok(a.into_discovered());
        }
        if b.step(g, oracle, Some(&a.visited))? == Step::Finished {
            return Ok(b.into_discovered());
        }
    }
}
