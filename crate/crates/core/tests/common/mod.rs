//! Naive reference implementations used as oracles by the integration and
//! acceptance tests. They share no code with the library beyond its plain
//! data types, and favour obviousness over speed.
#![allow(dead_code)]

use kconn_core::{Colour, Digraph, Embedding, Graph, TwoColouring};

pub type Matrix = Vec<Vec<bool>>;

pub fn graph_matrix(g: &Graph) -> Matrix {
    let n = g.order();
    let mut m = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}

pub fn colour_matrix(c: &TwoColouring, colour: Colour) -> Matrix {
    let n = c.order();
    (0..n).map(|u| (0..n).map(|v| u != v && c.colour(u, v) == colour).collect()).collect()
}

/// Every colouring of `K_n`, as red-pair bit strings in lexicographic pair order.
pub fn all_colourings(n: usize) -> impl Iterator<Item = TwoColouring> {
    let m = n * n.saturating_sub(1) / 2;
    (0u64..1 << m).map(move |mask| {
        let bits: Vec<bool> = (0..m).map(|i| mask >> (m - 1 - i) & 1 == 1).collect();
        TwoColouring::from_bits(n, &bits).unwrap()
    })
}

/// Tries every injective map of pattern vertices into host vertices.
pub fn has_copy(host: &Matrix, pattern: &Graph) -> bool {
    fn place(host: &Matrix, p: &Matrix, map: &mut Vec<usize>) -> bool {
        let i = map.len();
        if i == p.len() {
            return true;
        }
        for h in 0..host.len() {
            if map.contains(&h) {
                continue;
            }
            if (0..i).all(|j| !p[i][j] || host[h][map[j]]) {
                map.push(h);
                if place(host, p, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    pattern.order() <= host.len() && place(host, &graph_matrix(pattern), &mut Vec::new())
}

pub fn avoids(c: &TwoColouring, red: &Graph, blue: &Graph) -> bool {
    !has_copy(&colour_matrix(c, Colour::Red), red) && !has_copy(&colour_matrix(c, Colour::Blue), blue)
}

pub fn brute_arrows(n: usize, red: &Graph, blue: &Graph) -> bool {
    all_colourings(n).all(|c| !avoids(&c, red, blue))
}

pub fn brute_ramsey(pattern: &Graph, cap: usize) -> Option<usize> {
    (0..=cap).find(|&n| brute_arrows(n, pattern, pattern))
}

/// Injective, in range, and every pattern edge lands on a pair of the
/// claimed colour.
pub fn embedding_ok(e: &Embedding, c: &TwoColouring) -> bool {
    let n = c.order();
    let mut seen = vec![false; n];
    for &h in &e.map {
        if h >= n || seen[h] {
            return false;
        }
        seen[h] = true;
    }
    e.map.len() == e.pattern.order()
        && e.pattern.edges().all(|(a, b)| c.colour(e.map[a], e.map[b]) == e.colour)
}

/// Whether `target` and `g` are isomorphic, by brute force over bijections
/// that respect degrees.
pub fn isomorphic(g: &Graph, target: &Graph) -> bool {
    if g.order() != target.order() || g.edge_count() != target.edge_count() {
        return false;
    }
    let (a, b) = (graph_matrix(g), graph_matrix(target));
    let deg = |m: &Matrix, v: usize| m[v].iter().filter(|&&x| x).count();
    fn go(a: &Matrix, b: &Matrix, map: &mut Vec<usize>, deg: &dyn Fn(&Matrix, usize) -> usize) -> bool {
        let i = map.len();
        if i == a.len() {
            return true;
        }
        for h in 0..b.len() {
            if !map.contains(&h) && deg(a, i) == deg(b, h) && (0..i).all(|j| a[i][j] == b[h][map[j]]) {
                map.push(h);
                if go(a, b, map, deg) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    go(&a, &b, &mut Vec::new(), &deg)
}

fn connected_without(m: &Matrix, removed: &[bool]) -> bool {
    let n = m.len();
    let Some(start) = (0..n).find(|&v| !removed[v]) else { return true };
    let mut seen = removed.to_vec();
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for w in 0..n {
            if m[v][w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// Smallest vertex set whose removal disconnects `g`; `n - 1` if none does.
pub fn brute_kappa(g: &Graph) -> usize {
    let n = g.order();
    let m = graph_matrix(g);
    let mut best = n - 1;
    for mask in 0u32..1 << n {
        let size = mask.count_ones() as usize;
        if size >= best || n - size < 2 {
            continue;
        }
        let removed: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        if !connected_without(&m, &removed) {
            best = size;
        }
    }
    best
}

/// Checks a vertex colouring of a digraph against the greedy peeling guarantees:
/// proper on the underlying graph, at most `2Δ + 1` colours, and the order
/// puts at most `2Δ` neighbours before each vertex.
pub fn check_digraph_colouring(
    d: &Digraph,
    colours: &[usize],
    order: &[usize],
    colour_count: usize,
) -> Result<(), String> {
    let n = d.order();
    let delta = (0..n).map(|v| (0..n).filter(|&u| d.has_arc(u, v)).count()).max().unwrap_or(0);
    let adjacent = |u: usize, v: usize| d.has_arc(u, v) || d.has_arc(v, u);
    for u in 0..n {
        for v in u + 1..n {
            if adjacent(u, v) && colours[u] == colours[v] {
                return Err(format!("{u} and {v} adjacent with colour {}", colours[u]));
            }
        }
    }
    let used = colours.iter().copied().max().map_or(0, |m| m + 1);
    if used > colour_count || colour_count > 2 * delta + 1 {
        return Err(format!("{colour_count} colours (used {used}) for max in-degree {delta}"));
    }
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..n).collect::<Vec<_>>() {
        return Err("order is not a permutation".into());
    }
    for (i, &v) in order.iter().enumerate() {
        let before = order[..i].iter().filter(|&&u| adjacent(u, v)).count();
        if before > 2 * delta {
            return Err(format!("vertex {v} has {before} earlier neighbours, Δ = {delta}"));
        }
    }
    Ok(())
}
