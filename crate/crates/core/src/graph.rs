use crate::bitset::VertexSet;

/// Undirected simple graph on vertices `0..n`, stored as bitset adjacency rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<VertexSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { rows: vec![VertexSet::empty(n); n] }
    }

    /// Builds a graph from an edge list. Self-loops and duplicates are
    /// silently dropped; out-of-range endpoints panic.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            g.rows[u] = VertexSet::full(n);
            g.rows[u].remove(u);
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Self::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0);
        }
        g
    }

    /// Star `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        let n = self.order();
        assert!(u < n && v < n, "edge ({u},{v}) outside graph of order {n}");
        if u != v {
            self.rows[u].insert(v);
            self.rows[v].insert(u);
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u].remove(v);
        self.rows[v].remove(u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.order()).map(|v| self.degree(v)).min()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Self {
        let n = self.order();
        let mut g = Self::complete(n);
        for (u, v) in self.edges() {
            g.remove_edge(u, v);
        }
        g
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.edge_count() == n * n.saturating_sub(1) / 2
    }

    /// Whether the subgraph induced on `alive` is connected. An empty or
    /// single-vertex set counts as connected.
    pub fn is_connected_within(&self, alive: &VertexSet) -> bool {
        let Some(start) = alive.first() else { return true };
        let mut seen = VertexSet::empty(self.order());
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            let mut fresh = self.rows[u].intersection(alive);
            fresh.difference_with(&seen);
            for v in &fresh {
                seen.insert(v);
                stack.push(v);
            }
        }
        seen.len() == alive.len()
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(&VertexSet::full(self.order()))
    }

    /// Checks whether `self` contains `pattern` as a (not necessarily induced)
    /// subgraph on the same labels, i.e. every pattern edge is an edge here.
    pub fn contains_labelled(&self, pattern: &Graph) -> bool {
        pattern.order() <= self.order() && pattern.edges().all(|(u, v)| self.has_edge(u, v))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
