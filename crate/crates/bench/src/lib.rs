//! Criterion benchmarks for toughlab; see `benches/`.
