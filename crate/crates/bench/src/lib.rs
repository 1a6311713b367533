//! Benchmark-only crate; the measurements live in `benches/corepath.rs`.
