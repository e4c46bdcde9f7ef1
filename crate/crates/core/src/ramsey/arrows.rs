use rayon::prelude::*;

use super::matcher::EdgeAnchoredMatcher;
use crate::bitset::VertexSet;
use crate::colouring::{pair_count, pairs, TwoColouring};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_EXHAUSTIVE_CAP: usize = 8;

/// Number of leading pairs whose colours are enumerated up front and handed
/// to workers as independent subtrees.
const SPLIT_DEPTH: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    /// Largest host order searched exhaustively.
    pub max_order: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_order: DEFAULT_EXHAUSTIVE_CAP }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowingResult {
    pub holds: bool,
    /// Present iff `!holds`: a colouring with no red `pattern1` and no blue
    /// `pattern2`, the first such in search order.
    pub witness: Option<TwoColouring>,
}

/// `K_n -> (red, blue)` under the default exhaustive cap.
pub fn arrows(n: usize, red: &Graph, blue: &Graph) -> Result<ArrowingResult> {
    arrows_with(n, red, blue, &SearchLimits::default())
}

/// Decides whether every red/blue colouring of `K_n` contains a red copy of
/// `red` or a blue copy of `blue`.
///
/// Pairs are coloured in lexicographic order, blue before red, and a branch
/// is cut as soon as the latest pair closes a monochromatic copy, so the
/// witness returned is the lexicographically least colouring bit string
/// (red = 1) that avoids both patterns. In the diagonal case the first pair is
/// fixed blue: colour exchange maps witnesses to witnesses and the least one
/// always starts with a blue pair. The leading pairs are split across rayon
/// workers and the first witness in subtree order is kept, so the answer does
/// not depend on the thread count.
pub fn arrows_with(n: usize, red: &Graph, blue: &Graph, limits: &SearchLimits) -> Result<ArrowingResult> {
    if n > limits.max_order {
        return Err(Error::capacity(
            format!("K_{n} exceeds the exhaustive search cap of {}", limits.max_order),
            Some(format!("no colourings of K_{n} examined")),
        ));
    }
    let edgeless_fits = |g: &Graph| g.edge_count() == 0 && g.order() <= n;
    if edgeless_fits(red) || edgeless_fits(blue) {
        return Ok(ArrowingResult { holds: true, witness: None });
    }

    let search = Search::new(n, red, blue);
    let m = pair_count(n);
    let depth = m.min(SPLIT_DEPTH);
    let symmetric = red == blue && m > 0;
    let tasks: u64 = if symmetric { 1 << (depth - 1) } else { 1 << depth };

    let witness = (0..tasks).into_par_iter().find_map_first(|prefix| {
        let mut st = search.fresh();
        for i in 0..depth {
            let is_red = (prefix >> (depth - 1 - i)) & 1 == 1;
            if !search.assign(&mut st, i, is_red) {
                return None;
            }
        }
        search.dfs(&mut st, depth).then(|| st.witness(n))
    });

    Ok(ArrowingResult { holds: witness.is_none(), witness })
}

struct Search {
    pairs: Vec<(usize, usize)>,
    all: VertexSet,
    red: EdgeAnchoredMatcher,
    blue: EdgeAnchoredMatcher,
}

struct State {
    red: Vec<VertexSet>,
    blue: Vec<VertexSet>,
    bits: Vec<bool>,
}

impl State {
    fn witness(&self, n: usize) -> TwoColouring {
        TwoColouring::from_bits(n, &self.bits).expect("full assignment")
    }
}

impl Search {
    fn new(n: usize, red: &Graph, blue: &Graph) -> Self {
        Search {
            pairs: pairs(n).collect(),
            all: VertexSet::full(n),
            red: EdgeAnchoredMatcher::new(red),
            blue: EdgeAnchoredMatcher::new(blue),
        }
    }

    fn fresh(&self) -> State {
        let n = self.all.universe();
        State {
            red: vec![VertexSet::empty(n); n],
            blue: vec![VertexSet::empty(n); n],
            bits: Vec::with_capacity(self.pairs.len()),
        }
    }

    /// Colours pair `idx` (which must be the next unassigned one). Returns
    /// `false`, leaving the state unchanged, if that closes a forbidden copy.
    fn assign(&self, st: &mut State, idx: usize, is_red: bool) -> bool {
        debug_assert_eq!(st.bits.len(), idx);
        let (u, v) = self.pairs[idx];
        let (rows, matcher) = if is_red { (&mut st.red, &self.red) } else { (&mut st.blue, &self.blue) };
        rows[u].insert(v);
        rows[v].insert(u);
        if matcher.copy_through(rows, &self.all, u, v) {
            rows[u].remove(v);
            rows[v].remove(u);
            return false;
        }
        st.bits.push(is_red);
        true
    }

    fn unassign(&self, st: &mut State, idx: usize) {
        let (u, v) = self.pairs[idx];
        let rows = if st.bits.pop().expect("assigned") { &mut st.red } else { &mut st.blue };
        rows[u].remove(v);
        rows[v].remove(u);
    }

    fn dfs(&self, st: &mut State, idx: usize) -> bool {
        if idx == self.pairs.len() {
            return true;
        }
        for is_red in [false, true] {
            if self.assign(st, idx, is_red) {
                if self.dfs(st, idx + 1) {
                    return true;
                }
                self.unassign(st, idx);
            }
        }
        false
    }
}
