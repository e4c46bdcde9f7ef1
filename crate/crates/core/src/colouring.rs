//! Red/blue edge colourings of complete graphs and the `RB` hex codec.
//!
//! Codec line: `RB <N> <hex>`, where the hex digits pack one bit per pair in
//! lexicographic order `(0,1), (0,2), ..., (0,N-1), (1,2), ...`, most
//! significant bit first, `1` = red, zero-padded to a whole digit. With fewer
//! than two vertices there are no pairs and the line is just `RB <N>`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Colour {
    Red,
    Blue,
}

impl Colour {
    pub fn other(self) -> Colour {
        match self {
            Colour::Red => Colour::Blue,
            Colour::Blue => Colour::Red,
        }
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Colour::Red => "red",
            Colour::Blue => "blue",
        })
    }
}

/// Number of unordered pairs in `K_n`.
#[inline]
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of pair `{u, v}` (`u < v`) in the lexicographic pair order of `K_n`.
#[inline]
pub fn pair_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// Pairs of `K_n` in lexicographic order.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

/// A total red/blue colouring of the pairs of `K_N`. Red adjacency is stored,
/// blue is its complement.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TwoColouring {
    red: Graph,
}

impl TwoColouring {
    pub fn all_blue(n: usize) -> Self {
        TwoColouring { red: Graph::empty(n) }
    }

    pub fn all_red(n: usize) -> Self {
        TwoColouring { red: Graph::complete(n) }
    }

    /// Colouring whose red class is exactly `red` and blue class its complement.
    pub fn from_red_graph(red: Graph) -> Self {
        TwoColouring { red }
    }

    /// The pentagon colouring of `K_5`: cycle pairs `{i, i+1 mod 5}` red,
    /// the rest blue.
    pub fn pentagon() -> Self {
        Self::from_red_graph(Graph::cycle(5))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.red.order()
    }

    #[inline]
    pub fn colour(&self, u: usize, v: usize) -> Colour {
        assert_ne!(u, v, "no colour on the diagonal");
        if self.red.has_edge(u, v) {
            Colour::Red
        } else {
            Colour::Blue
        }
    }

    pub fn set(&mut self, u: usize, v: usize, c: Colour) {
        match c {
            Colour::Red => self.red.add_edge(u, v),
            Colour::Blue => self.red.remove_edge(u, v),
        }
    }

    #[inline]
    pub fn red_neighbours(&self, v: usize) -> &VertexSet {
        self.red.neighbours(v)
    }

    pub fn blue_neighbours(&self, v: usize) -> VertexSet {
        let mut s = VertexSet::full(self.order());
        s.difference_with(self.red.neighbours(v));
        s.remove(v);
        s
    }

    pub fn neighbours(&self, v: usize, c: Colour) -> VertexSet {
        match c {
            Colour::Red => self.red_neighbours(v).clone(),
            Colour::Blue => self.blue_neighbours(v),
        }
    }

    /// `|N_c(v) ∩ within|`.
    pub fn degree_within(&self, v: usize, c: Colour, within: &VertexSet) -> usize {
        let red = self.red.neighbours(v).intersection_len(within);
        match c {
            Colour::Red => red,
            Colour::Blue => within.len() - red - within.contains(v) as usize,
        }
    }

    pub fn red_edge_count(&self) -> usize {
        self.red.edge_count()
    }

    pub fn blue_edge_count(&self) -> usize {
        pair_count(self.order()) - self.red_edge_count()
    }

    pub fn red_subgraph(&self) -> Graph {
        self.red.clone()
    }

    pub fn blue_subgraph(&self) -> Graph {
        self.red.complement()
    }

    pub fn subgraph(&self, c: Colour) -> Graph {
        match c {
            Colour::Red => self.red_subgraph(),
            Colour::Blue => self.blue_subgraph(),
        }
    }

    /// The same colouring with red and blue exchanged.
    pub fn swapped(&self) -> Self {
        TwoColouring { red: self.red.complement() }
    }

    /// Colour bits in codec pair order (`true` = red).
    pub fn bits(&self) -> Vec<bool> {
        pairs(self.order()).map(|(u, v)| self.red.has_edge(u, v)).collect()
    }

    pub fn from_bits(n: usize, bits: &[bool]) -> Result<Self> {
        if bits.len() != pair_count(n) {
            return Err(Error::Codec(format!(
                "K_{n} has {} pairs but {} bits were supplied",
                pair_count(n),
                bits.len()
            )));
        }
        let red = Graph::from_edges(n, pairs(n).zip(bits).filter(|(_, &b)| b).map(|(p, _)| p));
        Ok(TwoColouring { red })
    }

    pub fn encode(&self) -> String {
        let n = self.order();
        let bits = self.bits();
        let mut out = format!("RB {n}");
        if !bits.is_empty() {
            out.push(' ');
            for chunk in bits.chunks(4) {
                let mut nib = 0u32;
                for (i, &b) in chunk.iter().enumerate() {
                    nib |= (b as u32) << (3 - i);
                }
                out.push(char::from_digit(nib, 16).unwrap().to_ascii_uppercase());
            }
        }
        out
    }

    pub fn decode(text: &str) -> Result<Self> {
        let mut parts = text.split_whitespace();
        if parts.next() != Some("RB") {
            return Err(Error::Codec("missing `RB` header".into()));
        }
        let n: usize = parts
            .next()
            .ok_or_else(|| Error::Codec("missing order after `RB`".into()))?
            .parse()
            .map_err(|e| Error::Codec(format!("bad order: {e}")))?;
        let hex = parts.next().unwrap_or("");
        if parts.next().is_some() {
            return Err(Error::Codec("trailing data after hex payload".into()));
        }
        let m = pair_count(n);
        if hex.len() != m.div_ceil(4) {
            return Err(Error::Codec(format!(
                "K_{n} needs {} bits ({} hex digits), found {} digits",
                m,
                m.div_ceil(4),
                hex.len()
            )));
        }
        let mut bits = Vec::with_capacity(hex.len() * 4);
        for (i, ch) in hex.chars().enumerate() {
            let nib = ch
                .to_digit(16)
                .ok_or_else(|| Error::Codec(format!("non-hex digit {ch:?} at position {i}")))?;
            for s in (0..4).rev() {
                bits.push((nib >> s) & 1 == 1);
            }
        }
        if bits[m..].iter().any(|&b| b) {
            return Err(Error::Codec("nonzero padding bits".into()));
        }
        bits.truncate(m);
        Self::from_bits(n, &bits)
    }

    /// Colouring of `K_|vertices|` induced on `vertices` (relabelled in the
    /// given order).
    pub fn restrict(&self, vertices: &[usize]) -> Self {
        let m = vertices.len();
        let mut red = Graph::empty(m);
        for i in 0..m {
            for j in i + 1..m {
                if self.red.has_edge(vertices[i], vertices[j]) {
                    red.add_edge(i, j);
                }
            }
        }
        TwoColouring { red }
    }
}

impl fmt::Debug for TwoColouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

impl fmt::Display for TwoColouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}
