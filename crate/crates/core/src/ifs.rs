//! Intuitionistic fuzzy elements.

use crate::error::{Error, Result};
use crate::pfs::{PfsSet, DEFAULT_EPSILON};
use crate::set::{FuzzySet, Labeled};
use crate::ScoreValue;

pub type IfsSet = FuzzySet<IfsElement>;

#[derive(Debug, Clone, PartialEq)]
pub struct IfsElement {
    label: String,
    mu: f64,
    nu: f64,
    // 1 - mu - nu; clamped for validated elements, signed for naive conversions.
    pi: f64,
}

impl Labeled for IfsElement {
    fn label(&self) -> &str {
        &self.label
    }
}

impl IfsElement {
    pub fn new(label: impl Into<String>, mu: f64, nu: f64) -> Result<Self> {
        Self::with_epsilon(label, mu, nu, DEFAULT_EPSILON)
    }

    /// Validates `mu, nu ∈ [0, 1]` and `mu + nu <= 1 + epsilon`.
    pub fn with_epsilon(label: impl Into<String>, mu: f64, nu: f64, epsilon: f64) -> Result<Self> {
        let label = label.into();
        if !(epsilon.is_finite() && epsilon >= 0.0) {
            return Err(Error::range("epsilon", epsilon, ">= 0"));
        }
        for (what, v) in [("mu", mu), ("nu", nu)] {
            if !(v.is_finite() && (0.0..=1.0).contains(&v)) {
                return Err(Error::range(format!("{what} of '{label}'"), v, "[0, 1]"));
            }
        }
        if mu + nu > 1.0 + epsilon {
            return Err(Error::Constraint {
                label,
                constraint: "mu + nu <= 1",
                value: mu + nu,
                epsilon,
            });
        }
        Ok(IfsElement {
            label,
            mu,
            nu,
            pi: (1.0 - mu - nu).max(0.0),
        })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    /// Hesitance `1 - mu - nu`.
    ///
    /// Non-negative for validated elements. Elements produced by
    /// [`as_ifs_naive`] keep the signed value.
    pub fn hesitance(&self) -> f64 {
        self.pi
    }

    /// `mu - nu`.
    pub fn score(&self) -> ScoreValue {
        ScoreValue::new(self.mu - self.nu)
    }
}

/// Reads a PFS as if its pairs were IFS pairs, with `pi = 1 - mu - nu`.
///
/// No IFS constraint is enforced and `pi` is not clamped, so pairs with
/// `mu + nu > 1` get a negative hesitance. This is the reading under which
/// the classic IFS Hamming and Euclidean measures are commonly tabulated
/// against Pythagorean data; distances computed from such sets may exceed 1.
pub fn as_ifs_naive(set: &PfsSet) -> IfsSet {
    let elements = set
        .elements()
        .iter()
        .map(|e| IfsElement {
            label: e.label().to_string(),
            mu: e.mu(),
            nu: e.nu(),
            pi: 1.0 - e.mu() - e.nu(),
        })
        .collect();
    FuzzySet::new(set.name(), elements).expect("labels already validated")
}
