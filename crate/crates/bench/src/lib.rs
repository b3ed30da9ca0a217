//! Benchmark-only crate; see `benches/scans.rs`.
