use serde::Serialize;

use crate::bitset::VertexSet;
use crate::colouring::{Colour, TwoColouring};
use crate::ratio::Ratio;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DescentStep {
    pub vertex: usize,
    pub colour: Colour,
    /// Survivor count after the step.
    pub survivors: usize,
}

/// Hubs accumulated so far and the vertices that survive below them. Every
/// red hub is red to all survivors and every blue hub is blue to all
/// survivors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentState {
    pub red_hubs: Vec<usize>,
    pub blue_hubs: Vec<usize>,
    pub survivors: VertexSet,
    pub trace: Vec<DescentStep>,
}

impl DescentState {
    pub fn steps(&self) -> usize {
        self.trace.len()
    }

    /// Direct scan of the disjointness and full-colour adjacency invariants.
    pub fn holds_invariant(&self, c: &TwoColouring) -> bool {
        let hubs = self.red_hubs.iter().map(|&r| (r, Colour::Red));
        let hubs = hubs.chain(self.blue_hubs.iter().map(|&b| (b, Colour::Blue)));
        let mut seen = VertexSet::empty(c.order());
        for (h, colour) in hubs {
            if seen.contains(h) || self.survivors.contains(h) {
                return false;
            }
            seen.insert(h);
            if self.survivors.iter().any(|u| c.colour(h, u) != colour) {
                return false;
            }
        }
        true
    }
}

/// Repeatedly takes the lowest surviving vertex, files it as a red or blue hub
/// according to which of its colour neighbourhoods among the survivors is
/// larger (ties go red), and keeps only that neighbourhood. Stops once either
/// hub list reaches `k` or nothing survives, so at most `2k - 1` steps run and
/// each step keeps at least half of the other survivors.
pub fn majority_descent(c: &TwoColouring, k: usize) -> DescentState {
    let mut st = DescentState {
        red_hubs: Vec::new(),
        blue_hubs: Vec::new(),
        survivors: VertexSet::full(c.order()),
        trace: Vec::new(),
    };
    while st.red_hubs.len() < k && st.blue_hubs.len() < k {
        let Some(v) = st.survivors.first() else { break };
        st.survivors.remove(v);
        let red = c.red_neighbours(v).intersection(&st.survivors);
        let blue_len = st.survivors.len() - red.len();
        let colour = if red.len() >= blue_len {
            st.survivors = red;
            st.red_hubs.push(v);
            Colour::Red
        } else {
            st.survivors.difference_with(c.red_neighbours(v));
            st.blue_hubs.push(v);
            Colour::Blue
        };
        st.trace.push(DescentStep { vertex: v, colour, survivors: st.survivors.len() });
    }
    st
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionDescent {
    pub added: Vec<usize>,
    pub survivors: VertexSet,
    pub trace: Vec<DescentStep>,
}

/// While fewer than `k_needed` vertices have been added, takes the survivor
/// with the most red neighbours among the survivors (lowest index on ties),
/// provided that count is at least `epsilon * |survivors|`, and drops to its
/// red neighbourhood. On return either `k_needed` vertices were added or every
/// survivor has red degree below `epsilon * |survivors|` inside the survivors.
pub fn fraction_descent(
    c: &TwoColouring,
    start: &VertexSet,
    k_needed: usize,
    epsilon: Ratio,
) -> FractionDescent {
    let mut survivors = start.clone();
    let mut added = Vec::new();
    let mut trace = Vec::new();
    while added.len() < k_needed {
        let best = survivors
            .iter()
            .map(|v| (c.red_neighbours(v).intersection_len(&survivors), v))
            .max_by_key(|&(deg, v)| (deg, std::cmp::Reverse(v)));
        let Some((deg, v)) = best else { break };
        if !epsilon.reached_by(deg, survivors.len()) {
            break;
        }
        survivors.intersect_with(c.red_neighbours(v));
        added.push(v);
        trace.push(DescentStep { vertex: v, colour: Colour::Red, survivors: survivors.len() });
    }
    FractionDescent { added, survivors, trace }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn majority_on_all_red() {
        let c = TwoColouring::all_red(16);
        let st = majority_descent(&c, 2);
        assert_eq!((st.red_hubs.clone(), st.blue_hubs.len(), st.steps()), (vec![0, 1], 0, 2));
        assert_eq!(st.survivors.len(), 14);
        assert!(st.holds_invariant(&c));
    }

    #[test]
    fn majority_on_all_blue() {
        let c = TwoColouring::all_blue(8);
        let st = majority_descent(&c, 1);
        assert_eq!(st.blue_hubs, vec![0]);
        assert_eq!(st.survivors.to_vec(), (1..8).collect::<Vec<_>>());
    }

    #[test]
    fn majority_pentagon_tie_goes_red() {
        let c = TwoColouring::pentagon();
        let st = majority_descent(&c, 1);
        assert_eq!(st.red_hubs, vec![0]);
        assert_eq!(st.survivors.to_vec(), vec![1, 4]);
    }

    #[test]
    fn majority_runs_dry() {
        let st = majority_descent(&TwoColouring::all_red(1), 2);
        assert_eq!((st.red_hubs.len(), st.survivors.len()), (1, 0));
    }

    #[test]
    fn fraction_examples() {
        let eps: Ratio = "1/40".parse().unwrap();
        let c = TwoColouring::all_red(10);
        let fd = fraction_descent(&c, &VertexSet::full(10), 2, eps);
        assert_eq!(fd.added, vec![0, 1]);
        assert_eq!(fd.survivors.len(), 8);

        let c = TwoColouring::all_blue(10);
        let fd = fraction_descent(&c, &VertexSet::full(10), 2, eps);
        assert!(fd.added.is_empty());
        assert_eq!(fd.survivors, VertexSet::full(10));

        let fd = fraction_descent(&TwoColouring::pentagon(), &VertexSet::full(5), 1, "1/2".parse().unwrap());
        assert!(fd.added.is_empty());
    }
}
