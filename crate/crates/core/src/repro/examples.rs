//! The delta sweep, the eight two-element cases and the worked classification.

use crate::classify::{classify_batch, ClassificationResult, PatternLibrary};
use crate::dataset::Dataset;
use crate::distance::{DistanceMethod, DistanceValue};
use crate::error::Result;
use crate::pfs::{PfsElement, PfsSet};
use crate::ScoreValue;

use super::data;

#[derive(Debug, Clone, PartialEq)]
pub struct DeltaSweepRow {
    pub delta: f64,
    pub euclid: DistanceValue,
    pub proposed: DistanceValue,
    pub score_a: ScoreValue,
    pub score_b: ScoreValue,
    pub abs_score_a: f64,
    pub abs_score_b: f64,
}

/// Sets for `delta = step / 10`: `A = (delta, 1 - delta)` and
/// `B = (delta - 0.1, 1.1 - delta)` in squared degrees, both without hesitance.
///
/// The squares are built from integers so that they sum to one exactly.
pub fn sweep_sets(step: u32) -> Result<(PfsSet, PfsSet)> {
    let tenth = |k: u32| f64::from(k) / 10.0;
    let a = PfsElement::from_squares("x", tenth(step), tenth(10 - step), 0.0)?;
    let b = PfsElement::from_squares("x", tenth(step - 1), tenth(11 - step), 0.0)?;
    Ok((PfsSet::new("A", vec![a])?, PfsSet::new("B", vec![b])?))
}

pub fn run_example1() -> Vec<DeltaSweepRow> {
    (1..=10)
        .map(|step| {
            let (a, b) = sweep_sets(step).expect("sweep sets are valid");
            let score_a = a.elements()[0].score();
            let score_b = b.elements()[0].score();
            DeltaSweepRow {
                delta: f64::from(step) / 10.0,
                euclid: DistanceMethod::PfsEuclidean
                    .distance(&a, &b)
                    .expect("conformable"),
                proposed: DistanceMethod::PfsMatrix
                    .distance(&a, &b)
                    .expect("conformable"),
                score_a,
                score_b,
                abs_score_a: score_a.abs(),
                abs_score_b: score_b.abs(),
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct CaseTableRow {
    pub method: DistanceMethod,
    pub values: [DistanceValue; 8],
}

impl CaseTableRow {
    pub fn method_name(&self) -> String {
        self.method.table_label()
    }
}

/// Row order of the case table.
pub const CASE_METHODS: [DistanceMethod; 7] = [
    DistanceMethod::IfsHamming,
    DistanceMethod::IfsEuclidean,
    DistanceMethod::PfsHamming,
    DistanceMethod::PfsEuclidean,
    DistanceMethod::PfsChen { beta: 1.0 },
    DistanceMethod::PfsChen { beta: 2.0 },
    DistanceMethod::PfsMatrix,
];

/// The eight cases at their printed two-decimal degrees.
pub fn cases_printed() -> Dataset {
    Dataset::from_json_str(data::TABLE3, crate::DEFAULT_EPSILON).expect("embedded data is valid")
}

/// The eight cases with cases 1 to 5 at the exact square roots their
/// printed degrees round.
pub fn cases_squared() -> Dataset {
    Dataset::from_json_str(data::TABLE3_SQUARED, crate::DEFAULT_EPSILON)
        .expect("embedded data is valid")
}

fn case_row(dataset: &Dataset, method: DistanceMethod) -> Result<CaseTableRow> {
    let mut values = [DistanceValue::new(0.0); 8];
    for (i, v) in values.iter_mut().enumerate() {
        let a = dataset.require(&format!("A{}", i + 1))?;
        let b = dataset.require(&format!("B{}", i + 1))?;
        *v = method.distance(a, b)?;
    }
    Ok(CaseTableRow { method, values })
}

/// Every method of [`CASE_METHODS`] on the pairs `A1/B1 .. A8/B8` of `dataset`.
pub fn run_example2_on(dataset: &Dataset) -> Result<Vec<CaseTableRow>> {
    CASE_METHODS.iter().map(|&m| case_row(dataset, m)).collect()
}

/// The case table as published: the six baseline rows agree with the exact
/// squared degrees, the matrix row with the printed degrees.
pub fn run_example2() -> Vec<CaseTableRow> {
    let squared = cases_squared();
    let printed = cases_printed();
    CASE_METHODS
        .iter()
        .map(|&m| {
            let source = if m == DistanceMethod::PfsMatrix {
                &printed
            } else {
                &squared
            };
            case_row(source, m).expect("embedded cases are complete")
        })
        .collect()
}

pub fn worked_example() -> (PatternLibrary, Vec<PfsSet>) {
    let patterns = Dataset::from_json_str(data::WORKED_PATTERNS, crate::DEFAULT_EPSILON)
        .expect("embedded data is valid");
    let samples = Dataset::from_json_str(data::WORKED_SAMPLES, crate::DEFAULT_EPSILON)
        .expect("embedded data is valid");
    let library = PatternLibrary::new(patterns.into_sets()).expect("conformable patterns");
    (library, samples.into_sets())
}

pub fn run_worked_example() -> Vec<ClassificationResult> {
    let (library, samples) = worked_example();
    classify_batch(&library, &samples, DistanceMethod::PfsMatrix).expect("conformable samples")
}
