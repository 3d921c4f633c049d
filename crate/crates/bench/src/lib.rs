//! Criterion benchmarks for `unitring-core`; see `benches/`.
