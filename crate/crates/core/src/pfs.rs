//! Pythagorean fuzzy elements and the set algebra over them.

use crate::error::{Error, Result};
use crate::set::{FuzzySet, Labeled};
use crate::ScoreValue;

/// Default slack on `mu² + nu² <= 1` (and `mu + nu <= 1` for IFS).
///
/// Some published datasets contain pairs such as (0.20, 0.98) whose squares sum
/// to 1.0004; a strict check would reject them.
pub const DEFAULT_EPSILON: f64 = 1e-3;

/// Tolerance used by [`PfsSet::equals`].
pub const EQUALITY_TOLERANCE: f64 = 1e-12;

pub type PfsSet = FuzzySet<PfsElement>;

/// One universe point's membership and non-membership degrees.
///
/// Squared degrees are kept next to the degrees themselves because every
/// distance formula works on squares; elements built with
/// [`PfsElement::from_squares`] therefore carry their squares exactly.
/// Hesitance is always derived.
#[derive(Debug, Clone, PartialEq)]
pub struct PfsElement {
    label: String,
    mu: f64,
    nu: f64,
    mu_sq: f64,
    nu_sq: f64,
}

impl Labeled for PfsElement {
    fn label(&self) -> &str {
        &self.label
    }
}

fn check_unit(what: &str, label: &str, value: f64) -> Result<()> {
    if value.is_finite() && (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::range(
            format!("{what} of '{label}'"),
            value,
            "[0, 1]",
        ))
    }
}

fn check_epsilon(epsilon: f64) -> Result<()> {
    if epsilon.is_finite() && epsilon >= 0.0 {
        Ok(())
    } else {
        Err(Error::range("epsilon", epsilon, ">= 0"))
    }
}

impl PfsElement {
    /// Validates with [`DEFAULT_EPSILON`].
    pub fn new(label: impl Into<String>, mu: f64, nu: f64) -> Result<Self> {
        Self::with_epsilon(label, mu, nu, DEFAULT_EPSILON)
    }

    /// Validates `mu, nu ∈ [0, 1]` and `mu² + nu² <= 1 + epsilon`.
    pub fn with_epsilon(label: impl Into<String>, mu: f64, nu: f64, epsilon: f64) -> Result<Self> {
        let label = label.into();
        check_epsilon(epsilon)?;
        check_unit("mu", &label, mu)?;
        check_unit("nu", &label, nu)?;
        Self::checked(label, mu, nu, mu * mu, nu * nu, epsilon)
    }

    /// Builds an element from its squared degrees.
    pub fn from_squares(
        label: impl Into<String>,
        mu_sq: f64,
        nu_sq: f64,
        epsilon: f64,
    ) -> Result<Self> {
        let label = label.into();
        check_epsilon(epsilon)?;
        check_unit("mu²", &label, mu_sq)?;
        check_unit("nu²", &label, nu_sq)?;
        Self::checked(label, mu_sq.sqrt(), nu_sq.sqrt(), mu_sq, nu_sq, epsilon)
    }

    fn checked(
        label: String,
        mu: f64,
        nu: f64,
        mu_sq: f64,
        nu_sq: f64,
        epsilon: f64,
    ) -> Result<Self> {
        let total = mu_sq + nu_sq;
        if total > 1.0 + epsilon {
            return Err(Error::Constraint {
                label,
                constraint: "mu² + nu² <= 1",
                value: total,
                epsilon,
            });
        }
        Ok(PfsElement {
            label,
            mu,
            nu,
            mu_sq,
            nu_sq,
        })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn mu_sq(&self) -> f64 {
        self.mu_sq
    }

    pub fn nu_sq(&self) -> f64 {
        self.nu_sq
    }

    /// `1 - mu² - nu²`, clamped at zero.
    pub fn hesitance_sq(&self) -> f64 {
        (1.0 - self.mu_sq - self.nu_sq).max(0.0)
    }

    /// `sqrt(max(0, 1 - mu² - nu²))`.
    pub fn hesitance(&self) -> f64 {
        self.hesitance_sq().sqrt()
    }

    /// `mu² - nu²`.
    pub fn score(&self) -> ScoreValue {
        ScoreValue::new(self.mu_sq - self.nu_sq)
    }

    /// The squared-degree triple `(mu², nu², h²)`; its entries sum to one for
    /// every element inside the unit disc.
    pub fn squares(&self) -> [f64; 3] {
        [self.mu_sq, self.nu_sq, self.hesitance_sq()]
    }

    pub fn relabeled(&self, label: impl Into<String>) -> Self {
        PfsElement {
            label: label.into(),
            ..self.clone()
        }
    }
}

impl PfsSet {
    /// Convenience constructor from `(label, mu, nu)` triples with the default slack.
    pub fn from_pairs<S: Into<String>>(
        name: impl Into<String>,
        pairs: impl IntoIterator<Item = (S, f64, f64)>,
    ) -> Result<Self> {
        let elements = pairs
            .into_iter()
            .map(|(label, mu, nu)| PfsElement::new(label, mu, nu))
            .collect::<Result<Vec<_>>>()?;
        FuzzySet::new(name, elements)
    }

    /// `self ⊆ other`: every membership is no larger and every non-membership no smaller.
    pub fn is_subset_of(&self, other: &PfsSet) -> Result<bool> {
        self.check_conformable(other)?;
        Ok(self
            .elements()
            .iter()
            .zip(other.elements())
            .all(|(a, b)| a.mu <= b.mu && a.nu >= b.nu))
    }

    /// Componentwise equality of degrees within [`EQUALITY_TOLERANCE`].
    pub fn equals(&self, other: &PfsSet) -> Result<bool> {
        self.check_conformable(other)?;
        Ok(self.elements().iter().zip(other.elements()).all(|(a, b)| {
            (a.mu - b.mu).abs() <= EQUALITY_TOLERANCE && (a.nu - b.nu).abs() <= EQUALITY_TOLERANCE
        }))
    }

    /// Elementwise `(min mu, max nu)`.
    pub fn intersect(&self, other: &PfsSet) -> Result<PfsSet> {
        let name = format!("{}∩{}", self.name(), other.name());
        self.zip_with(other, name, |a, b| {
            let lo = if a.mu <= b.mu { a } else { b };
            let hi = if a.nu >= b.nu { a } else { b };
            Ok(combine(a, lo.mu, lo.mu_sq, hi.nu, hi.nu_sq))
        })
    }

    /// Elementwise `(max mu, min nu)`.
    pub fn union(&self, other: &PfsSet) -> Result<PfsSet> {
        let name = format!("{}∪{}", self.name(), other.name());
        self.zip_with(other, name, |a, b| {
            let hi = if a.mu >= b.mu { a } else { b };
            let lo = if a.nu <= b.nu { a } else { b };
            Ok(combine(a, hi.mu, hi.mu_sq, lo.nu, lo.nu_sq))
        })
    }

    /// Algebraic product: `mu' = mu_a·mu_b`, `nu' = sqrt(nu_a² + nu_b² - nu_a²·nu_b²)`.
    ///
    /// Non-memberships enter the second slot. The result is re-validated.
    pub fn product(&self, other: &PfsSet) -> Result<PfsSet> {
        let name = format!("{}·{}", self.name(), other.name());
        self.zip_with(other, name, |a, b| {
            let mu_sq = a.mu_sq * b.mu_sq;
            let nu_sq = a.nu_sq + b.nu_sq - a.nu_sq * b.nu_sq;
            PfsElement::checked(
                a.label.clone(),
                a.mu * b.mu,
                nu_sq.sqrt(),
                mu_sq,
                nu_sq,
                DEFAULT_EPSILON,
            )
        })
    }

    /// `n`-th power: `mu' = mu^n`, `nu' = sqrt(1 - (1 - nu²)^n)`.
    pub fn power(&self, n: u32) -> Result<PfsSet> {
        if n < 1 {
            return Err(Error::range("power exponent", n as f64, ">= 1"));
        }
        let exp = i32::try_from(n)
            .map_err(|_| Error::range("power exponent", n as f64, "<= i32::MAX"))?;
        let name = format!("{}^{n}", self.name());
        self.map(name, |a| {
            let mu_sq = a.mu_sq.powi(exp);
            let nu_sq = 1.0 - (1.0 - a.nu_sq).max(0.0).powi(exp);
            PfsElement::checked(
                a.label.clone(),
                a.mu.powi(exp),
                nu_sq.sqrt(),
                mu_sq,
                nu_sq,
                DEFAULT_EPSILON,
            )
        })
    }
}

fn combine(template: &PfsElement, mu: f64, mu_sq: f64, nu: f64, nu_sq: f64) -> PfsElement {
    PfsElement {
        label: template.label.clone(),
        mu,
        nu,
        mu_sq,
        nu_sq,
    }
}
