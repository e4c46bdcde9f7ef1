//! Exact arrowing decisions and Ramsey numbers for small instances, plus the
//! monochromatic-copy search every other module uses as its certificate
//! finder.

mod arrows;
pub(crate) mod matcher;

pub use arrows::{arrows, arrows_with, ArrowingResult, SearchLimits, DEFAULT_EXHAUSTIVE_CAP};

use crate::bitset::VertexSet;
use crate::colouring::{Colour, TwoColouring};
use crate::embedding::Embedding;
use crate::error::Result;
use crate::graph::Graph;
use matcher::Plan;

/// Looks for a copy of `pattern` in the `colour` class of `c`. Host
/// candidates are tried in ascending order and pattern vertices are placed by
/// descending degree (ties by index), so the answer is deterministic.
pub fn find_mono_copy(c: &TwoColouring, pattern: &Graph, colour: Colour) -> Option<Embedding> {
    find_mono_copy_within(c, pattern, colour, &VertexSet::full(c.order()))
}

/// [`find_mono_copy`] restricted to host vertices in `within`.
pub fn find_mono_copy_within(
    c: &TwoColouring,
    pattern: &Graph,
    colour: Colour,
    within: &VertexSet,
) -> Option<Embedding> {
    if pattern.order() > within.len() {
        return None;
    }
    let rows: Vec<VertexSet> = (0..c.order()).map(|v| c.neighbours(v, colour)).collect();
    let plan = Plan::by_degree(pattern);
    let mut hosts = Vec::with_capacity(pattern.order());
    let mut used = VertexSet::empty(c.order());
    matcher::extend(&rows, within, &plan, &mut hosts, &mut used)
        .then(|| Embedding::new(pattern.clone(), c.order(), matcher::to_map(&plan, &hosts), colour))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RamseyValue {
    /// `r(G) = value`; `witness` is a colouring of `K_{value-1}` with no
    /// monochromatic copy (absent when `value == 0`).
    Exact { value: usize, witness: Option<TwoColouring> },
    /// Every order up to `cap` admits a witness, so `r(G) > cap`.
    /// `witness_order` is the largest order with a witness found.
    OverCap { cap: usize, witness_order: usize, witness: TwoColouring },
}

impl RamseyValue {
    pub fn value(&self) -> Option<usize> {
        match self {
            RamseyValue::Exact { value, .. } => Some(*value),
            RamseyValue::OverCap { .. } => None,
        }
    }

    /// Best certified lower bound on `r(G)`.
    pub fn lower_bound(&self) -> usize {
        match self {
            RamseyValue::Exact { value, .. } => *value,
            RamseyValue::OverCap { witness_order, .. } => witness_order + 1,
        }
    }
}

/// Smallest `N <= cap` with `K_N -> (pattern, pattern)`. The exhaustive order
/// limit is raised to `cap` for this call.
pub fn ramsey_number(pattern: &Graph, cap: usize) -> Result<RamseyValue> {
    ramsey_number_with(pattern, cap, &SearchLimits { max_order: cap.max(DEFAULT_EXHAUSTIVE_CAP) })
}

pub fn ramsey_number_with(pattern: &Graph, cap: usize, limits: &SearchLimits) -> Result<RamseyValue> {
    let mut last_witness: Option<TwoColouring> = None;
    for n in 0..=cap {
        let res = arrows_with(n, pattern, pattern, limits)?;
        if res.holds {
            return Ok(RamseyValue::Exact { value: n, witness: last_witness });
        }
        last_witness = res.witness;
    }
    Ok(RamseyValue::OverCap {
        cap,
        witness_order: cap,
        witness: last_witness.expect("cap >= 0 iteration produced a witness"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::validate_embedding;

    #[test]
    fn all_red_triangle() {
        let e = find_mono_copy(&TwoColouring::all_red(5), &Graph::complete(3), Colour::Red).unwrap();
        assert_eq!(e.map, vec![0, 1, 2]);
        assert_eq!(validate_embedding(&e, &TwoColouring::all_red(5)), Ok(true));
    }

    #[test]
    fn pentagon_is_triangle_free_both_colours() {
        let p = TwoColouring::pentagon();
        assert!(find_mono_copy(&p, &Graph::complete(3), Colour::Red).is_none());
        assert!(find_mono_copy(&p, &Graph::complete(3), Colour::Blue).is_none());
        assert!(find_mono_copy(&p, &Graph::cycle(5), Colour::Blue).is_some());
    }

    #[test]
    fn isolated_pattern_vertices_need_distinct_hosts() {
        let pattern = Graph::from_edges(4, [(0, 1)]);
        assert!(find_mono_copy(&TwoColouring::all_red(3), &pattern, Colour::Red).is_none());
        let e = find_mono_copy(&TwoColouring::all_red(4), &pattern, Colour::Red).unwrap();
        assert_eq!(validate_embedding(&e, &TwoColouring::all_red(4)), Ok(true));
    }

    #[test]
    fn within_restricts_hosts() {
        let c = TwoColouring::all_red(6);
        let within = VertexSet::from_iter_in(6, [1, 3, 5]);
        let e = find_mono_copy_within(&c, &Graph::complete(3), Colour::Red, &within).unwrap();
        assert_eq!(e.map, vec![1, 3, 5]);
        assert!(find_mono_copy_within(&c, &Graph::complete(4), Colour::Red, &within).is_none());
    }

    #[test]
    fn small_ramsey_values() {
        assert_eq!(ramsey_number(&Graph::complete(2), 8).unwrap().value(), Some(2));
        assert_eq!(ramsey_number(&Graph::complete(1), 8).unwrap().value(), Some(1));
        assert_eq!(ramsey_number(&Graph::complete(3), 8).unwrap().value(), Some(6));
        let over = ramsey_number(&Graph::complete(3), 4).unwrap();
        assert!(matches!(over, RamseyValue::OverCap { cap: 4, witness_order: 4, .. }));
        assert_eq!(over.lower_bound(), 5);
    }
}
