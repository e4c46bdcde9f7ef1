use serde::Serialize;

use crate::bitset::VertexSet;
use crate::colouring::{Colour, TwoColouring};
use crate::embedding::Embedding;

/// Largest `colour`-degree of a vertex of `within`, counted inside `within`.
pub fn max_degree_within(c: &TwoColouring, within: &VertexSet, colour: Colour) -> usize {
    within.iter().map(|v| c.degree_within(v, colour, within)).max().unwrap_or(0)
}

/// `⌈|U| / (d + 1)⌉`: the size the sparse-colour greedy always reaches.
pub fn sparse_clique_bound(u_len: usize, max_sparse_degree: usize) -> usize {
    u_len.div_ceil(max_sparse_degree + 1)
}

/// Greedy clique in the colour opposite to `sparse`: take the pool vertex with
/// fewest `sparse` neighbours in the pool (lowest index on ties), then discard
/// it and those neighbours. Each round removes at most `d + 1` vertices, where
/// `d` is the largest `sparse`-degree inside `U`, which gives the size bound.
pub fn greedy_sparse_clique(c: &TwoColouring, u: &VertexSet, sparse: Colour) -> Embedding {
    let d = max_degree_within(c, u, sparse);
    let mut pool = u.clone();
    let mut clique = Vec::new();
    while let Some(v) = pool.iter().min_by_key(|&v| (c.degree_within(v, sparse, &pool), v)) {
        clique.push(v);
        pool.remove(v);
        match sparse {
            Colour::Red => pool.difference_with(c.red_neighbours(v)),
            Colour::Blue => pool.intersect_with(c.red_neighbours(v)),
        }
    }
    assert!(
        clique.len() >= sparse_clique_bound(u.len(), d),
        "greedy clique of size {} below bound {}",
        clique.len(),
        sparse_clique_bound(u.len(), d)
    );
    Embedding::clique(c.order(), clique, sparse.other())
}

/// Lexicographically first `size`-clique in `colour` inside `pool`.
pub fn exact_clique(c: &TwoColouring, pool: &VertexSet, colour: Colour, size: usize) -> Option<Vec<usize>> {
    fn go(c: &TwoColouring, colour: Colour, cand: VertexSet, chosen: &mut Vec<usize>, size: usize) -> bool {
        if chosen.len() == size {
            return true;
        }
        if chosen.len() + cand.len() < size {
            return false;
        }
        let mut rest = cand.clone();
        for v in cand.iter() {
            rest.remove(v);
            if chosen.len() + 1 + rest.len() < size {
                return false;
            }
            let mut next = rest.clone();
            match colour {
                Colour::Red => next.intersect_with(c.red_neighbours(v)),
                Colour::Blue => next.difference_with(c.red_neighbours(v)),
            }
            chosen.push(v);
            if go(c, colour, next, chosen, size) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::with_capacity(size);
    go(c, colour, pool.clone(), &mut chosen, size).then_some(chosen)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliquePacking {
    /// Pairwise disjoint, each sorted ascending.
    pub cliques: Vec<Vec<usize>>,
    pub colour: Colour,
    pub size_each: usize,
}

impl CliquePacking {
    pub fn is_valid(&self, c: &TwoColouring) -> bool {
        let mut seen = VertexSet::empty(c.order());
        for q in &self.cliques {
            if q.len() != self.size_each {
                return false;
            }
            for (i, &u) in q.iter().enumerate() {
                if u >= c.order() || seen.contains(u) {
                    return false;
                }
                seen.insert(u);
                if q[i + 1..].iter().any(|&v| c.colour(u, v) != self.colour) {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackingFailure {
    pub achieved: usize,
    /// The cliques found before getting stuck.
    pub partial: CliquePacking,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PackingOptions {
    /// Largest pool on which the exact clique search runs when the greedy
    /// falls short.
    pub exact_width: usize,
}

impl Default for PackingOptions {
    fn default() -> Self {
        PackingOptions { exact_width: 64 }
    }
}

/// Greedily pulls `count` disjoint `colour`-cliques of `size` vertices out of
/// `u`, trying the sparse-colour greedy first and the exact search when the
/// greedy falls short on a small enough pool.
pub fn clique_packing(
    c: &TwoColouring,
    u: &VertexSet,
    size: usize,
    count: usize,
    colour: Colour,
    opts: PackingOptions,
) -> Result<CliquePacking, PackingFailure> {
    let mut pool = u.clone();
    let mut packing = CliquePacking { cliques: Vec::new(), colour, size_each: size };
    while packing.cliques.len() < count {
        let greedy = greedy_sparse_clique(c, &pool, colour.other());
        let found = if greedy.map.len() >= size {
            Some(greedy.map[..size].to_vec())
        } else if pool.len() <= opts.exact_width {
            exact_clique(c, &pool, colour, size)
        } else {
            None
        };
        let Some(mut q) = found else {
            return Err(PackingFailure { achieved: packing.cliques.len(), partial: packing });
        };
        q.sort_unstable();
        for &v in &q {
            pool.remove(v);
        }
        packing.cliques.push(q);
    }
    Ok(packing)
}
