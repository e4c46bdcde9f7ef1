//! Exact vertex connectivity with a checkable cut certificate.
//!
//! Local connectivity between non-adjacent `s`, `t` is the max flow in the
//! vertex-split network (`v_in -> v_out` with capacity 1, each edge `{u, v}`
//! becoming `u_out -> v_in` and `v_out -> u_in` with unbounded capacity).
//! `kappa` is the minimum over all non-adjacent pairs, `n - 1` for complete
//! graphs. The reported pair is the lexicographically first one attaining
//! the minimum, and the cut is the minimum cut closest to `s` for that pair,
//! so the certificate does not depend on how pairs were scheduled.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectivityCertificate {
    pub kappa: usize,
    /// A vertex cut of size `kappa`; absent for complete graphs.
    pub cut: Option<Vec<usize>>,
    /// A pair `(s, t)` separated by `cut`; absent for complete graphs.
    pub witness_pair: Option<(usize, usize)>,
}

impl ConnectivityCertificate {
    /// Re-checks the certificate by traversal, independently of the flow code.
    pub fn validate(&self, g: &Graph) -> bool {
        match (&self.cut, self.witness_pair) {
            (None, None) => g.is_complete() && self.kappa + 1 == g.order(),
            (Some(cut), Some((s, t))) => {
                if cut.len() != self.kappa || cut.contains(&s) || cut.contains(&t) {
                    return false;
                }
                let mut alive = VertexSet::full(g.order());
                for &v in cut {
                    alive.remove(v);
                }
                !reachable(g, &alive, s).contains(t)
            }
            _ => false,
        }
    }
}

fn reachable(g: &Graph, alive: &VertexSet, s: usize) -> VertexSet {
    let mut seen = VertexSet::empty(g.order());
    seen.insert(s);
    let mut stack = vec![s];
    while let Some(u) = stack.pop() {
        let mut fresh = g.neighbours(u).intersection(alive);
        fresh.difference_with(&seen);
        for v in &fresh {
            seen.insert(v);
            stack.push(v);
        }
    }
    seen
}

struct Arc {
    to: usize,
    cap: u32,
    rev: usize,
}

/// Vertex-split flow network for one `(s, t)` pair.
struct SplitNetwork {
    adj: Vec<Vec<Arc>>,
}

impl SplitNetwork {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut net = SplitNetwork { adj: (0..2 * n).map(|_| Vec::new()).collect() };
        let inf = n as u32 + 1;
        for v in 0..n {
            net.add(2 * v, 2 * v + 1, 1);
        }
        for (u, v) in g.edges() {
            net.add(2 * u + 1, 2 * v, inf);
            net.add(2 * v + 1, 2 * u, inf);
        }
        net
    }

    fn add(&mut self, from: usize, to: usize, cap: u32) {
        let (rf, rt) = (self.adj[to].len(), self.adj[from].len());
        self.adj[from].push(Arc { to, cap, rev: rf });
        self.adj[to].push(Arc { to: from, cap: 0, rev: rt });
    }

    /// Shortest augmenting paths; every path carries one unit.
    fn max_flow(&mut self, source: usize, sink: usize) -> usize {
        let mut flow = 0;
        loop {
            let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.adj.len()];
            let mut queue = VecDeque::from([source]);
            let mut seen = vec![false; self.adj.len()];
            seen[source] = true;
            while let Some(u) = queue.pop_front() {
                if u == sink {
                    break;
                }
                for (i, a) in self.adj[u].iter().enumerate() {
                    if a.cap > 0 && !seen[a.to] {
                        seen[a.to] = true;
                        prev[a.to] = Some((u, i));
                        queue.push_back(a.to);
                    }
                }
            }
            if !seen[sink] {
                return flow;
            }
            let mut v = sink;
            while let Some((u, i)) = prev[v] {
                self.adj[u][i].cap -= 1;
                let rev = self.adj[u][i].rev;
                self.adj[v][rev].cap += 1;
                v = u;
            }
            flow += 1;
        }
    }

    fn residual_reach(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[source] = true;
        let mut stack = vec![source];
        while let Some(u) = stack.pop() {
            for a in &self.adj[u] {
                if a.cap > 0 && !seen[a.to] {
                    seen[a.to] = true;
                    stack.push(a.to);
                }
            }
        }
        seen
    }
}

/// Max number of internally vertex-disjoint `s`-`t` paths, `s`, `t`
/// non-adjacent, together with a minimum separating vertex set.
pub fn local_connectivity(g: &Graph, s: usize, t: usize) -> (usize, Vec<usize>) {
    assert!(s != t && !g.has_edge(s, t), "local connectivity needs a non-adjacent pair");
    let mut net = SplitNetwork::new(g);
    let flow = net.max_flow(2 * s + 1, 2 * t);
    let reach = net.residual_reach(2 * s + 1);
    let cut: Vec<usize> =
        (0..g.order()).filter(|&v| v != s && v != t && reach[2 * v] && !reach[2 * v + 1]).collect();
    debug_assert_eq!(cut.len(), flow);
    (flow, cut)
}

pub fn vertex_connectivity(g: &Graph) -> Result<ConnectivityCertificate> {
    let n = g.order();
    if n < 2 {
        return Err(Error::UndefinedConnectivity(n));
    }
    if g.is_complete() {
        return Ok(ConnectivityCertificate { kappa: n - 1, cut: None, witness_pair: None });
    }
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|s| (s + 1..n).map(move |t| (s, t))).filter(|&(s, t)| !g.has_edge(s, t)).collect();
    let (kappa, s, t) = pairs
        .par_iter()
        .map(|&(s, t)| {
            let mut net = SplitNetwork::new(g);
            (net.max_flow(2 * s + 1, 2 * t), s, t)
        })
        .min()
        .expect("non-complete graph has a non-adjacent pair");
    let (flow, cut) = local_connectivity(g, s, t);
    debug_assert_eq!(flow, kappa);
    Ok(ConnectivityCertificate { kappa, cut: Some(cut), witness_pair: Some((s, t)) })
}

/// `true` iff `g` has more than `k` vertices and no vertex cut smaller than `k`.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    if g.order() <= k {
        return false;
    }
    if k == 0 {
        return true;
    }
    if g.min_degree().unwrap_or(0) < k {
        return false;
    }
    vertex_connectivity(g).map(|c| c.kappa >= k).unwrap_or(false)
}
