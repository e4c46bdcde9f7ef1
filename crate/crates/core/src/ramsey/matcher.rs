//! Backtracking subgraph matcher over bitset adjacency rows.
//!
//! A `Plan` fixes the order in which pattern vertices are placed and, for
//! each position, which earlier positions are pattern-adjacent to it. The
//! candidates for a position are then the used-free allowed hosts that are
//! adjacent to every already-placed neighbour: one bitset intersection per
//! back edge.

use crate::bitset::VertexSet;
use crate::graph::Graph;

#[derive(Clone, Debug)]
pub(crate) struct Plan {
    /// Pattern vertex placed at each position.
    pub order: Vec<usize>,
    /// For each position, the earlier positions it must be adjacent to.
    pub back: Vec<Vec<usize>>,
}

impl Plan {
    fn from_order(pattern: &Graph, order: Vec<usize>) -> Self {
        let mut pos_of = vec![usize::MAX; pattern.order()];
        for (p, &v) in order.iter().enumerate() {
            pos_of[v] = p;
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(p, &v)| {
                let mut b: Vec<usize> =
                    pattern.neighbours(v).iter().map(|w| pos_of[w]).filter(|&q| q < p).collect();
                b.sort_unstable();
                b
            })
            .collect();
        Plan { order, back }
    }

    /// Pattern vertices by descending degree, ties by index.
    pub fn by_degree(pattern: &Graph) -> Self {
        let mut order: Vec<usize> = (0..pattern.order()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(pattern.degree(v)), v));
        Self::from_order(pattern, order)
    }

    /// Plan whose first two positions are the endpoints `a`, `b` of a pattern
    /// edge; the rest are added greedily by most already-placed neighbours,
    /// then degree, then index, so isolated vertices come last.
    pub fn anchored(pattern: &Graph, a: usize, b: usize) -> Self {
        let n = pattern.order();
        let mut order = vec![a, b];
        let mut placed = VertexSet::empty(n);
        placed.insert(a);
        placed.insert(b);
        while order.len() < n {
            let next = (0..n)
                .filter(|&v| !placed.contains(v))
                .max_by_key(|&v| {
                    (pattern.neighbours(v).intersection_len(&placed), pattern.degree(v), std::cmp::Reverse(v))
                })
                .expect("unplaced vertex exists");
            placed.insert(next);
            order.push(next);
        }
        Self::from_order(pattern, order)
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }
}

/// Depth-first extension of a partial placement. `hosts[p]` is the host vertex
/// at position `p` for `p < hosts.len()`. Returns `true` once every position
/// is filled; candidates are tried in ascending host order.
pub(crate) fn extend(
    rows: &[VertexSet],
    allowed: &VertexSet,
    plan: &Plan,
    hosts: &mut Vec<usize>,
    used: &mut VertexSet,
) -> bool {
    let p = hosts.len();
    if p == plan.len() {
        return true;
    }
    let mut cand = allowed.difference(used);
    for &q in &plan.back[p] {
        cand.intersect_with(&rows[hosts[q]]);
        if cand.is_empty() {
            return false;
        }
    }
    for h in cand.iter() {
        hosts.push(h);
        used.insert(h);
        if extend(rows, allowed, plan, hosts, used) {
            return true;
        }
        used.remove(h);
        hosts.pop();
    }
    false
}

/// Converts a position-indexed placement into a pattern-vertex-indexed map.
pub(crate) fn to_map(plan: &Plan, hosts: &[usize]) -> Vec<usize> {
    let mut map = vec![0; plan.len()];
    for (p, &v) in plan.order.iter().enumerate() {
        map[v] = hosts[p];
    }
    map
}

/// Incremental detector: does the graph `rows` contain a copy of the pattern
/// that uses the edge `{u, v}`? One anchored plan per oriented pattern edge.
#[derive(Clone, Debug)]
pub(crate) struct EdgeAnchoredMatcher {
    plans: Vec<Plan>,
    order: usize,
}

impl EdgeAnchoredMatcher {
    pub fn new(pattern: &Graph) -> Self {
        let plans = pattern
            .edges()
            .flat_map(|(a, b)| [(a, b), (b, a)])
            .map(|(a, b)| Plan::anchored(pattern, a, b))
            .collect();
        EdgeAnchoredMatcher { plans, order: pattern.order() }
    }

    pub fn copy_through(&self, rows: &[VertexSet], all: &VertexSet, u: usize, v: usize) -> bool {
        if self.order > all.len() {
            return false;
        }
        let mut hosts = Vec::with_capacity(self.order);
        let mut used = VertexSet::empty(all.universe());
        self.plans.iter().any(|plan| {
            hosts.clear();
            hosts.extend([u, v]);
            used.insert(u);
            used.insert(v);
            let found = extend(rows, all, plan, &mut hosts, &mut used);
            for &h in &hosts {
                used.remove(h);
            }
            found
        })
    }
}
