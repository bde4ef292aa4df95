//! Normalized Hamming, Euclidean and Chen distances.
//!
//! All of them are power means over the three per-element coordinate
//! differences with a `1/2n` prefactor. The IFS variants difference the
//! degrees `(mu, nu, pi)`; the PFS variants difference the squared degrees
//! `(mu², nu², h²)`. Single-element forms are the `n = 1` case.

use super::DistanceValue;
use crate::error::{Error, Result};
use crate::ifs::IfsSet;
use crate::pfs::{PfsElement, PfsSet};

/// Exponent of the power mean. One and two get their own arithmetic so that
/// Chen's measure at those exponents is bit-for-bit Hamming / Euclidean.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Exponent {
    One,
    Two,
    Real(f64),
}

impl Exponent {
    pub(crate) fn from_beta(beta: f64) -> Result<Self> {
        if !(beta.is_finite() && beta >= 1.0) {
            return Err(Error::range("beta", beta, ">= 1"));
        }
        Ok(if beta == 1.0 {
            Exponent::One
        } else if beta == 2.0 {
            Exponent::Two
        } else {
            Exponent::Real(beta)
        })
    }

    fn term(self, d: f64) -> f64 {
        match self {
            Exponent::One => d.abs(),
            Exponent::Two => d * d,
            Exponent::Real(p) => d.abs().powf(p),
        }
    }

    fn root(self, s: f64) -> f64 {
        match self {
            Exponent::One => s,
            Exponent::Two => s.sqrt(),
            Exponent::Real(p) => s.powf(p.recip()),
        }
    }
}

pub(crate) fn power_mean<I>(diffs: I, n: usize, exp: Exponent) -> DistanceValue
where
    I: IntoIterator<Item = [f64; 3]>,
{
    let sum: f64 = diffs
        .into_iter()
        .map(|d| exp.term(d[0]) + exp.term(d[1]) + exp.term(d[2]))
        .sum();
    DistanceValue::new(exp.root(sum / (2 * n) as f64))
}

pub(crate) fn pfs_diff(a: &PfsElement, b: &PfsElement) -> [f64; 3] {
    let (x, y) = (a.squares(), b.squares());
    [x[0] - y[0], x[1] - y[1], x[2] - y[2]]
}

fn ifs_distance(a: &IfsSet, b: &IfsSet, exp: Exponent) -> Result<DistanceValue> {
    a.check_conformable(b)?;
    let diffs = a.elements().iter().zip(b.elements()).map(|(x, y)| {
        [
            x.mu() - y.mu(),
            x.nu() - y.nu(),
            x.hesitance() - y.hesitance(),
        ]
    });
    Ok(power_mean(diffs, a.len(), exp))
}

pub(crate) fn pfs_distance(a: &PfsSet, b: &PfsSet, exp: Exponent) -> Result<DistanceValue> {
    a.check_conformable(b)?;
    let diffs = a
        .elements()
        .iter()
        .zip(b.elements())
        .map(|(x, y)| pfs_diff(x, y));
    Ok(power_mean(diffs, a.len(), exp))
}

/// `(1/2n) Σ (|Δmu| + |Δnu| + |Δpi|)`.
pub fn hamming_ifs(a: &IfsSet, b: &IfsSet) -> Result<DistanceValue> {
    ifs_distance(a, b, Exponent::One)
}

/// `sqrt((1/2n) Σ (Δmu² + Δnu² + Δpi²))`.
pub fn euclidean_ifs(a: &IfsSet, b: &IfsSet) -> Result<DistanceValue> {
    ifs_distance(a, b, Exponent::Two)
}

/// `(1/2n) Σ (|Δ(mu²)| + |Δ(nu²)| + |Δ(h²)|)`.
pub fn hamming_pfs(a: &PfsSet, b: &PfsSet) -> Result<DistanceValue> {
    pfs_distance(a, b, Exponent::One)
}

/// `sqrt((1/2n) Σ (Δ(mu²)² + Δ(nu²)² + Δ(h²)²))`.
pub fn euclidean_pfs(a: &PfsSet, b: &PfsSet) -> Result<DistanceValue> {
    pfs_distance(a, b, Exponent::Two)
}

/// Chen's measure `[(1/2n) Σ (|Δ(mu²)|^β + |Δ(nu²)|^β + |Δ(h²)|^β)]^(1/β)` for real `β >= 1`.
pub fn chen_pfs(a: &PfsSet, b: &PfsSet, beta: f64) -> Result<DistanceValue> {
    pfs_distance(a, b, Exponent::from_beta(beta)?)
}
