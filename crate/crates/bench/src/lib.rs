//! Deterministic inputs for the benchmarks.

use pfsdist::{PatternLibrary, PfsSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `count` random sets over a universe of `n` labels, reproducible from `seed`.
pub fn random_sets(seed: u64, count: usize, n: usize) -> Vec<PfsSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|k| {
            let pairs = (0..n).map(|i| {
                let mu: f64 = rng.random();
                let nu = rng.random::<f64>() * (1.0 - mu * mu).sqrt();
                (format!("x{i}"), mu, nu)
            });
            PfsSet::from_pairs(format!("S{k}"), pairs.collect::<Vec<_>>())
                .expect("valid by construction")
        })
        .collect()
}

pub fn random_library(seed: u64, patterns: usize, n: usize) -> PatternLibrary {
    PatternLibrary::new(random_sets(seed, patterns, n)).expect("shared universe")
}
