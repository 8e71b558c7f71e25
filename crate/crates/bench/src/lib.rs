//! Shared fixtures for the benchmark targets.

use effsum_cli::generate::{generate_sets, Family, GenConfig};
use effsum_core::FiniteSet;

/// Seeded instances of a given base-set size, one per family, used by the
/// oracle-versus-rules benchmarks.
pub fn bench_instances(a_size: usize) -> Vec<(String, FiniteSet, FiniteSet)> {
    let cfg = GenConfig {
        dim: 2,
        a_size,
        b_size: 4,
        coord_bound: 5,
    };
    Family::ALL
        .iter()
        .map(|&family| {
            let (a, b) = generate_sets(42, family, &cfg);
            (format!("{}_{a_size}", family.as_str()), a, b)
        })
        .collect()
}
