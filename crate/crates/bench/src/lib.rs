//! Criterion benchmarks for the exact solvers; run with `cargo bench -p matchlab-bench`.
