//! Pythagorean fuzzy sets, distance measures between them, and a
//! minimum-distance classifier.
//!
//! ```
//! use pfsdist::{DistanceMethod, PfsSet};
//!
//! let a = PfsSet::from_pairs("A", [("x1", 0.6, 0.6)])?;
//! let b = PfsSet::from_pairs("B", [("x1", 0.3, 0.3)])?;
//! let d = DistanceMethod::PfsMatrix.distance(&a, &b)?;
//! assert!((d.value() - 0.377).abs() < 1e-3);
//! # Ok::<(), pfsdist::Error>(())
//! ```

pub mod classify;
pub mod dataset;
pub mod distance;
pub mod error;
pub mod ifs;
pub mod pfs;
pub mod repro;
pub mod set;
pub mod table;

pub use classify::{classify, classify_batch, ClassificationResult, PatternLibrary, TIE_TOLERANCE};
pub use dataset::Dataset;
pub use distance::{DistanceMethod, DistanceValue};
pub use error::{Error, Result};
pub use ifs::{as_ifs_naive, IfsElement, IfsSet};
pub use pfs::{PfsElement, PfsSet, DEFAULT_EPSILON, EQUALITY_TOLERANCE};
pub use set::{FuzzySet, Labeled};
pub use table::{emit_table, Cell, Table, TableFormat};

/// Score of an element: `mu² - nu²` for PFS, `mu - nu` for IFS. Always in `[-1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct ScoreValue(f64);

impl ScoreValue {
    pub(crate) fn new(value: f64) -> Self {
        ScoreValue(value.clamp(-1.0, 1.0))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn abs(self) -> f64 {
        self.0.abs()
    }
}

impl From<ScoreValue> for f64 {
    fn from(s: ScoreValue) -> f64 {
        s.0
    }
}
