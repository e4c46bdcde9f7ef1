use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Directed graph without self-arcs, with out- and in-adjacency kept in sync.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Digraph {
    out: Vec<VertexSet>,
    inc: Vec<VertexSet>,
}

impl Digraph {
    pub fn empty(n: usize) -> Self {
        Digraph { out: vec![VertexSet::empty(n); n], inc: vec![VertexSet::empty(n); n] }
    }

    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut d = Self::empty(n);
        for (u, v) in arcs {
            d.add_arc(u, v);
        }
        d
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.out.len()
    }

    /// Adds `u -> v`; self-arcs are ignored.
    pub fn add_arc(&mut self, u: usize, v: usize) {
        if u != v {
            self.out[u].insert(v);
            self.inc[v].insert(u);
        }
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].contains(v)
    }

    pub fn out_neighbours(&self, v: usize) -> &VertexSet {
        &self.out[v]
    }

    pub fn in_neighbours(&self, v: usize) -> &VertexSet {
        &self.inc[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inc[v].len()
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.in_degree(v)).collect()
    }

    pub fn max_in_degree(&self) -> usize {
        (0..self.order()).map(|v| self.in_degree(v)).max().unwrap_or(0)
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(VertexSet::len).sum()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out.iter().enumerate().flat_map(|(u, row)| row.iter().map(move |v| (u, v)))
    }

    /// Underlying undirected simple graph (antiparallel arcs merge).
    pub fn underlying(&self) -> Graph {
        Graph::from_edges(self.order(), self.arcs())
    }

    /// Text form: a `DG <n>` header line followed by one `u v` line per arc.
    pub fn to_text(&self) -> String {
        let mut s = format!("DG {}\n", self.order());
        for (u, v) in self.arcs() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::param("empty digraph input"))?;
        let n: usize = header
            .strip_prefix("DG")
            .map(str::trim)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::param(format!("bad digraph header {header:?}, expected `DG <n>`")))?;
        let mut d = Digraph::empty(n);
        for (i, line) in lines.enumerate() {
            let mut it = line.split_whitespace().map(str::parse::<usize>);
            match (it.next(), it.next(), it.next()) {
                (Some(Ok(u)), Some(Ok(v)), None) if u < n && v < n && u != v => d.add_arc(u, v),
                _ => return Err(Error::param(format!("bad arc line {}: {line:?}", i + 2))),
            }
        }
        Ok(d)
    }
}
