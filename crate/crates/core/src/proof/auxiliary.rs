use itertools::Itertools;
use serde::Serialize;

use super::cliques::CliquePacking;
use crate::bitset::VertexSet;
use crate::colouring::{Colour, TwoColouring};
use crate::digraph::Digraph;
use crate::embedding::Embedding;

/// Digraph on the packed cliques with `Q_i -> Q_j` iff some vertex of `Q_i`
/// has at least `k` red neighbours in `Q_j`.
pub fn build_aux_digraph(c: &TwoColouring, packing: &CliquePacking, k: usize) -> Digraph {
    let n = c.order();
    let sets: Vec<VertexSet> =
        packing.cliques.iter().map(|q| VertexSet::from_iter_in(n, q.iter().copied())).collect();
    let mut d = Digraph::empty(sets.len());
    for (i, qi) in packing.cliques.iter().enumerate() {
        for (j, qj) in sets.iter().enumerate() {
            if i != j && qi.iter().any(|&v| c.red_neighbours(v).intersection_len(qj) >= k) {
                d.add_arc(i, j);
            }
        }
    }
    d
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DigraphColouring {
    /// Colour of each vertex, `0..colour_count`.
    pub colours: Vec<usize>,
    /// Greedy order: each vertex has at most `2 * max_in_degree` neighbours
    /// (either direction) before it.
    pub order: Vec<usize>,
    pub colour_count: usize,
    pub max_in_degree: usize,
}

impl DigraphColouring {
    /// Vertices grouped by colour.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.colour_count];
        for (v, &col) in self.colours.iter().enumerate() {
            classes[col].push(v);
        }
        classes
    }
}

/// Proper colouring of the underlying graph with at most `2Δ + 1` colours,
/// `Δ` the maximum in-degree. Vertices are peeled off by repeatedly removing
/// the lowest-index vertex whose out-degree among the remaining vertices is at
/// most `Δ` (one exists since remaining out-degrees sum to at most `Δ` times
/// the remaining count); the reversed removal sequence is then coloured
/// greedily with the smallest free colour.
pub fn digraph_colouring(d: &Digraph) -> DigraphColouring {
    let n = d.order();
    let delta = d.max_in_degree();
    let mut remaining = VertexSet::full(n);
    let mut removal = Vec::with_capacity(n);
    while !remaining.is_empty() {
        let v = remaining
            .iter()
            .find(|&v| d.out_neighbours(v).intersection_len(&remaining) <= delta)
            .expect("a vertex of small out-degree always remains");
        remaining.remove(v);
        removal.push(v);
    }
    removal.reverse();
    let order = removal;

    let mut colours = vec![usize::MAX; n];
    let mut colour_count = 0;
    for &v in &order {
        let mut taken = vec![false; 2 * delta + 2];
        for w in d.out_neighbours(v).iter().chain(d.in_neighbours(v).iter()) {
            if colours[w] < taken.len() {
                taken[colours[w]] = true;
            }
        }
        let col = taken.iter().position(|&t| !t).expect("at most 2Δ coloured neighbours");
        colours[v] = col;
        colour_count = colour_count.max(col + 1);
    }

    assert!(colour_count <= 2 * delta + 1, "{colour_count} colours for max in-degree {delta}");
    assert!(d.arcs().all(|(u, v)| colours[u] != colours[v]), "colouring is not proper");
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for v in 0..n {
        let earlier =
            d.out_neighbours(v).iter().chain(d.in_neighbours(v).iter()).filter(|&w| pos[w] < pos[v]);
        assert!(earlier.count() <= 2 * delta, "vertex {v} has too many earlier neighbours");
    }
    DigraphColouring { colours, order, colour_count, max_in_degree: delta }
}

/// First `k`-subset of `q` (lexicographic over ascending `q`) whose common red
/// neighbourhood outside `q` has at least `n_target - k` vertices.
pub fn pigeonhole_extract(
    c: &TwoColouring,
    q: &[usize],
    k: usize,
    n_target: usize,
) -> Option<(Vec<usize>, VertexSet)> {
    let mut sorted = q.to_vec();
    sorted.sort_unstable();
    let q_set = VertexSet::from_iter_in(c.order(), sorted.iter().copied());
    let need = n_target.saturating_sub(k);
    sorted.into_iter().combinations(k).find_map(|hub| {
        let mut common = VertexSet::full(c.order());
        common.difference_with(&q_set);
        for &h in &hub {
            common.intersect_with(c.red_neighbours(h));
        }
        (common.len() >= need).then_some((hub, common))
    })
}

/// Blue clique with one vertex per given clique: `u_1` is the lowest vertex of
/// the first clique and `u_i` the lowest vertex of clique `i` with no red
/// neighbour among `u_1..u_{i-1}`. `Err(i)` names the first clique (1-based)
/// offering no such vertex.
pub fn greedy_blue_clique_across(c: &TwoColouring, cliques: &[Vec<usize>]) -> Result<Embedding, usize> {
    let mut picked: Vec<usize> = Vec::with_capacity(cliques.len());
    let mut red_to_picked = VertexSet::empty(c.order());
    for (i, q) in cliques.iter().enumerate() {
        let u = q
            .iter()
            .copied()
            .filter(|&v| !red_to_picked.contains(v) && !picked.contains(&v))
            .min()
            .ok_or(i + 1)?;
        picked.push(u);
        red_to_picked.union_with(c.red_neighbours(u));
    }
    Ok(Embedding::clique(c.order(), picked, Colour::Blue))
}
