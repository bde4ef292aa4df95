//! Distance measures between fuzzy sets.
//!
//! Every measure here is the normalized (per-universe averaged) form. The
//! single-element formulas are the same code evaluated on a one-point universe;
//! see [`DistanceMethod::between_elements`].

mod classic;
mod matrix;

use std::fmt;

pub use classic::{chen_pfs, euclidean_ifs, euclidean_pfs, hamming_ifs, hamming_pfs};
pub use matrix::{element_ratio, matrix_distance, AdjustmentMatrix, DiffVector};

use crate::error::{Error, Result};
use crate::ifs::as_ifs_naive;
use crate::pfs::{PfsElement, PfsSet};
use crate::set::FuzzySet;

/// A computed distance.
///
/// Values lie in `[0, 1]` for every PFS measure on valid input. The IFS
/// measures applied through [`as_ifs_naive`] to pairs with `mu + nu > 1` can
/// exceed one.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct DistanceValue(f64);

impl DistanceValue {
    pub(crate) fn new(value: f64) -> Self {
        DistanceValue(value)
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl From<DistanceValue> for f64 {
    fn from(d: DistanceValue) -> f64 {
        d.0
    }
}

impl fmt::Display for DistanceValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// The measure families available to the classifier and the CLI.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DistanceMethod {
    /// IFS Hamming on the naive `(mu, nu, 1 - mu - nu)` reading of each pair.
    IfsHamming,
    /// IFS Euclidean on the naive reading.
    IfsEuclidean,
    PfsHamming,
    PfsEuclidean,
    /// Chen's power-mean family; `beta >= 1`.
    PfsChen {
        beta: f64,
    },
    /// The matrix-weighted measure.
    PfsMatrix,
}

impl DistanceMethod {
    pub const ALL_NAMES: [&'static str; 6] = [
        "ifs-hamming",
        "ifs-euclid",
        "pfs-hamming",
        "pfs-euclid",
        "chen",
        "matrix",
    ];

    pub fn chen(beta: f64) -> Result<Self> {
        classic::Exponent::from_beta(beta)?;
        Ok(DistanceMethod::PfsChen { beta })
    }

    /// Resolves a command-line style name. `beta` is required for `chen` and
    /// rejected for every other method.
    pub fn from_name(name: &str, beta: Option<f64>) -> Result<Self> {
        let method = match name {
            "ifs-hamming" => DistanceMethod::IfsHamming,
            "ifs-euclid" => DistanceMethod::IfsEuclidean,
            "pfs-hamming" => DistanceMethod::PfsHamming,
            "pfs-euclid" => DistanceMethod::PfsEuclidean,
            "matrix" => DistanceMethod::PfsMatrix,
            "chen" => {
                let beta =
                    beta.ok_or_else(|| Error::Config("method 'chen' requires --beta".into()))?;
                return Self::chen(beta);
            }
            other => {
                return Err(Error::Config(format!(
                    "unknown method '{other}' (expected one of {})",
                    Self::ALL_NAMES.join(", ")
                )))
            }
        };
        if beta.is_some() {
            return Err(Error::Config(format!(
                "--beta only applies to method 'chen', not '{name}'"
            )));
        }
        Ok(method)
    }

    pub fn name(self) -> &'static str {
        match self {
            DistanceMethod::IfsHamming => "ifs-hamming",
            DistanceMethod::IfsEuclidean => "ifs-euclid",
            DistanceMethod::PfsHamming => "pfs-hamming",
            DistanceMethod::PfsEuclidean => "pfs-euclid",
            DistanceMethod::PfsChen { .. } => "chen",
            DistanceMethod::PfsMatrix => "matrix",
        }
    }

    /// Row label used in reproduced tables.
    pub fn table_label(self) -> String {
        match self {
            DistanceMethod::IfsHamming => "d_Hm".into(),
            DistanceMethod::IfsEuclidean => "d_Eu".into(),
            DistanceMethod::PfsHamming => "D_Hm".into(),
            DistanceMethod::PfsEuclidean => "D_Eu".into(),
            DistanceMethod::PfsChen { beta } => format!("D_C(beta={beta})"),
            DistanceMethod::PfsMatrix => "D_N".into(),
        }
    }

    pub fn distance(self, a: &PfsSet, b: &PfsSet) -> Result<DistanceValue> {
        match self {
            DistanceMethod::IfsHamming => hamming_ifs(&as_ifs_naive(a), &as_ifs_naive(b)),
            DistanceMethod::IfsEuclidean => euclidean_ifs(&as_ifs_naive(a), &as_ifs_naive(b)),
            DistanceMethod::PfsHamming => hamming_pfs(a, b),
            DistanceMethod::PfsEuclidean => euclidean_pfs(a, b),
            DistanceMethod::PfsChen { beta } => chen_pfs(a, b, beta),
            DistanceMethod::PfsMatrix => matrix_distance(a, b),
        }
    }

    /// The single-element form of the measure.
    pub fn between_elements(self, a: &PfsElement, b: &PfsElement) -> Result<DistanceValue> {
        let wrap = |e: &PfsElement, name: &str| {
            FuzzySet::new(name, vec![e.relabeled("x")]).expect("one element")
        };
        self.distance(&wrap(a, "a"), &wrap(b, "b"))
    }
}

impl fmt::Display for DistanceMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DistanceMethod::PfsChen { beta } => write!(f, "chen(beta={beta})"),
            other => f.write_str(other.name()),
        }
    }
}
