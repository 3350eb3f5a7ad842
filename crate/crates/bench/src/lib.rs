//! Benchmarks for the regcc oracles live in `benches/`; run them with
//! `cargo bench -p regcc-bench`.
