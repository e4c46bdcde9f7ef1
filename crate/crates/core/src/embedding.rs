use crate::colouring::{Colour, TwoColouring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Certificate of a monochromatic copy: pattern vertex `i` sits on host
/// vertex `map[i]` of `K_host_order`, and every pattern edge has `colour`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub pattern: Graph,
    pub host_order: usize,
    pub map: Vec<usize>,
    pub colour: Colour,
}

impl Embedding {
    pub fn new(pattern: Graph, host_order: usize, map: Vec<usize>, colour: Colour) -> Self {
        Embedding { pattern, host_order, map, colour }
    }

    /// Complete-graph embedding on `vertices` in the given order.
    pub fn clique(host_order: usize, vertices: Vec<usize>, colour: Colour) -> Self {
        Embedding { pattern: Graph::complete(vertices.len()), host_order, map: vertices, colour }
    }

    /// Same certificate read against the colour-swapped host.
    pub fn swapped(mut self) -> Self {
        self.colour = self.colour.other();
        self
    }
}

/// `Ok(true)` iff the map is an injection into `0..N` and every pattern edge
/// lands on a pair of the embedding's colour. A host-order mismatch is an
/// error, not `false`.
pub fn validate_embedding(e: &Embedding, c: &TwoColouring) -> Result<bool> {
    if e.host_order != c.order() {
        return Err(Error::HostOrderMismatch { embedding: e.host_order, colouring: c.order() });
    }
    if e.map.len() != e.pattern.order() {
        return Ok(false);
    }
    let mut seen = vec![false; c.order()];
    for &h in &e.map {
        if h >= c.order() || seen[h] {
            return Ok(false);
        }
        seen[h] = true;
    }
    Ok(e.pattern.edges().all(|(u, v)| c.colour(e.map[u], e.map[v]) == e.colour))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_triangle() {
        let e = Embedding::clique(3, vec![0, 1, 2], Colour::Red);
        assert_eq!(validate_embedding(&e, &TwoColouring::all_red(3)), Ok(true));
        let blue = Embedding { colour: Colour::Blue, ..e };
        assert_eq!(validate_embedding(&blue, &TwoColouring::all_red(3)), Ok(false));
    }

    #[test]
    fn pentagon_triangle_fails() {
        // {0,2} is blue in the pentagon colouring.
        let e = Embedding::clique(5, vec![0, 1, 2], Colour::Red);
        assert_eq!(validate_embedding(&e, &TwoColouring::pentagon()), Ok(false));
    }

    #[test]
    fn non_injective_and_mismatch() {
        let e = Embedding::clique(4, vec![0, 0, 1], Colour::Red);
        assert_eq!(validate_embedding(&e, &TwoColouring::all_red(4)), Ok(false));
        let e = Embedding::clique(3, vec![0, 1, 2], Colour::Red);
        assert_eq!(
            validate_embedding(&e, &TwoColouring::all_red(4)),
            Err(Error::HostOrderMismatch { embedding: 3, colouring: 4 })
        );
    }
}
