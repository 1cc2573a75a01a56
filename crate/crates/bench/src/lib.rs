//! Criterion benchmarks for the exact CHSH toolkit; see `benches/exact.rs`.
