//! Criterion benchmarks for the search-heavy operations; see `benches/`.
