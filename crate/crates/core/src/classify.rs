//! Minimum-distance assignment of samples to known patterns.

use crate::distance::{DistanceMethod, DistanceValue};
use crate::error::{Error, Result};
use crate::pfs::PfsSet;

/// Distances within this much of the minimum are reported as ties.
pub const TIE_TOLERANCE: f64 = 1e-9;

/// An ordered, nonempty list of pairwise-conformable reference patterns.
#[derive(Debug, Clone, PartialEq)]
pub struct PatternLibrary {
    patterns: Vec<PfsSet>,
}

impl PatternLibrary {
    pub fn new(patterns: Vec<PfsSet>) -> Result<Self> {
        let first = patterns.first().ok_or(Error::EmptyLibrary)?;
        for p in &patterns[1..] {
            first.check_conformable(p)?;
        }
        Ok(PatternLibrary { patterns })
    }

    pub fn patterns(&self) -> &[PfsSet] {
        &self.patterns
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.patterns.iter().map(PfsSet::name)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassificationResult {
    pub sample_name: String,
    /// One entry per pattern, in library order.
    pub distances: Vec<(String, DistanceValue)>,
    /// Lowest index attaining the minimum distance.
    pub winner_index: usize,
    /// Every pattern index within [`TIE_TOLERANCE`] of the minimum; contains `winner_index`.
    pub tied: Vec<usize>,
}

impl ClassificationResult {
    pub fn winner_name(&self) -> &str {
        &self.distances[self.winner_index].0
    }

    pub fn winner_distance(&self) -> DistanceValue {
        self.distances[self.winner_index].1
    }

    pub fn is_tied(&self) -> bool {
        self.tied.len() > 1
    }
}

/// Computes the distance from `sample` to every pattern and assigns it to the nearest.
pub fn classify(
    library: &PatternLibrary,
    sample: &PfsSet,
    method: DistanceMethod,
) -> Result<ClassificationResult> {
    let distances = library
        .patterns
        .iter()
        .map(|p| Ok((p.name().to_string(), method.distance(p, sample)?)))
        .collect::<Result<Vec<_>>>()?;

    let mut winner_index = 0;
    for (i, (_, d)) in distances.iter().enumerate().skip(1) {
        if d.value() < distances[winner_index].1.value() {
            winner_index = i;
        }
    }
    let best = distances[winner_index].1.value();
    let tied = distances
        .iter()
        .enumerate()
        .filter(|(_, (_, d))| d.value() - best <= TIE_TOLERANCE)
        .map(|(i, _)| i)
        .collect();

    Ok(ClassificationResult {
        sample_name: sample.name().to_string(),
        distances,
        winner_index,
        tied,
    })
}

/// Classifies every sample in order, stopping at the first one that fails.
pub fn classify_batch(
    library: &PatternLibrary,
    samples: &[PfsSet],
    method: DistanceMethod,
) -> Result<Vec<ClassificationResult>> {
    samples
        .iter()
        .map(|s| classify(library, s, method))
        .collect()
}
