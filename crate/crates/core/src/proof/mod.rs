//! The procedures of the upper-bound argument as runnable, certificate
//! producing operations: the two descents, sparse-colour cliques and clique
//! packing, the auxiliary digraph and its colouring, pigeonhole extraction,
//! the greedy cross-clique embedding, and the two strategies chaining them.

mod auxiliary;
mod cliques;
mod descent;
mod strategy;

pub use auxiliary::{
    build_aux_digraph, digraph_colouring, greedy_blue_clique_across, pigeonhole_extract, DigraphColouring,
};
pub use cliques::{
    clique_packing, exact_clique, greedy_sparse_clique, max_degree_within, sparse_clique_bound,
    CliquePacking, PackingFailure, PackingOptions,
};
pub use descent::{fraction_descent, majority_descent, DescentState, DescentStep, FractionDescent};
pub use strategy::{
    case1_strategy, case2_strategy, StageRecord, StrategyOptions, StrategyOutcome, StrategyReport,
};
