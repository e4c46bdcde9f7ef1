//! Seeded colouring generators for experiments and fixtures.
//!
//! `Uniform(p)` seeds ChaCha8 with `seed` (via `SeedableRng::seed_from_u64`)
//! and draws one `u64` per pair in lexicographic pair order; the pair is red
//! iff the draw is below `p * 2^64`, compared exactly. ChaCha8 output is fixed
//! by its specification, so a given `(N, p, seed)` always yields the same
//! colouring, independent of platform or thread count.

use rand::seq::index::sample;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::colouring::{pairs, TwoColouring};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ratio::Ratio;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distribution {
    Uniform(Ratio),
    AllRed,
    AllBlue,
    /// Red 5-cycle, blue complementary 5-cycle; only for `N = 5`.
    PentagonLike,
}

pub fn gen_colouring(n: usize, dist: Distribution, seed: u64) -> Result<TwoColouring> {
    if n == 0 {
        return Err(Error::param("colouring order must be at least 1"));
    }
    match dist {
        Distribution::AllRed => Ok(TwoColouring::all_red(n)),
        Distribution::AllBlue => Ok(TwoColouring::all_blue(n)),
        Distribution::PentagonLike if n == 5 => Ok(TwoColouring::pentagon()),
        Distribution::PentagonLike => Err(Error::param(format!("pentagon colouring needs N = 5, got {n}"))),
        Distribution::Uniform(p) => {
            if p.num() > p.den() {
                return Err(Error::param(format!("red probability {p} exceeds 1")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let threshold = ((p.num() as u128) << 64) / p.den() as u128;
            let red = Graph::from_edges(n, pairs(n).filter(|_| (rng.next_u64() as u128) < threshold));
            Ok(TwoColouring::from_red_graph(red))
        }
    }
}

/// Random digraph on `n` vertices with every in-degree at most
/// `max_in_degree`: each vertex draws its in-degree uniformly from
/// `0..=min(max_in_degree, n - 1)`, then that many distinct in-neighbours.
pub fn gen_digraph(n: usize, max_in_degree: usize, seed: u64) -> Digraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut d = Digraph::empty(n);
    for v in 0..n {
        let deg = rng.gen_range(0..=max_in_degree.min(n.saturating_sub(1)));
        for i in sample(&mut rng, n - 1, deg) {
            let u = if i >= v { i + 1 } else { i };
            d.add_arc(u, v);
        }
    }
    d
}
