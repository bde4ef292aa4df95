//! Matrix-weighted distance between Pythagorean fuzzy sets.
//!
//! For each aligned element pair the squared-degree difference vector
//! `m = (Δmu², Δnu², Δh²)` is multiplied on the right by
//!
//! ```text
//!     | 1  0  0 |
//! M = | 0  1  0 |
//!     | Y  N  H |
//! ```
//!
//! where `Y` and `N` are the pooled membership and non-membership shares of the
//! pair and `H = sqrt(1 - Y² - N²)`. This moves the hesitance difference onto the
//! membership and non-membership channels in proportion to their mass. The
//! squared norm of `m·M` is divided by the sum of fourth powers of all six
//! degrees, and the distance is the root mean of those ratios over the universe.

use super::DistanceValue;
use crate::error::Result;
use crate::pfs::{PfsElement, PfsSet};

/// Squared-degree differences of two elements. The coordinates sum to zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiffVector {
    pub membership: f64,
    pub non_membership: f64,
    pub hesitance: f64,
}

impl DiffVector {
    pub fn between(a: &PfsElement, b: &PfsElement) -> Self {
        let [dy, dn, dh] = super::classic::pfs_diff(a, b);
        DiffVector {
            membership: dy,
            non_membership: dn,
            hesitance: dh,
        }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.membership, self.non_membership, self.hesitance]
    }
}

/// Bottom row `(Y, N, H)` of the adjustment matrix; the upper rows are the identity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdjustmentMatrix {
    pub y: f64,
    pub n: f64,
    pub h: f64,
}

impl AdjustmentMatrix {
    /// Row used when both elements have zero membership and non-membership.
    /// The difference vector is zero there, so only determinism matters.
    pub const FULLY_HESITANT: AdjustmentMatrix = AdjustmentMatrix {
        y: 0.5,
        n: 0.5,
        h: std::f64::consts::FRAC_1_SQRT_2,
    };

    pub fn between(a: &PfsElement, b: &PfsElement) -> Self {
        let pooled_mu = a.mu_sq() + b.mu_sq();
        let pooled_nu = a.nu_sq() + b.nu_sq();
        let total = pooled_mu + pooled_nu;
        if total == 0.0 {
            return Self::FULLY_HESITANT;
        }
        let y = pooled_mu / total;
        let n = pooled_nu / total;
        AdjustmentMatrix {
            y,
            n,
            h: (1.0 - y * y - n * n).max(0.0).sqrt(),
        }
    }

    pub fn to_matrix(self) -> [[f64; 3]; 3] {
        [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [self.y, self.n, self.h]]
    }

    /// Row vector times matrix: `(m_y + m_h·Y, m_n + m_h·N, m_h·H)`.
    pub fn transform(self, m: DiffVector) -> [f64; 3] {
        [
            m.membership + m.hesitance * self.y,
            m.non_membership + m.hesitance * self.n,
            m.hesitance * self.h,
        ]
    }
}

/// Per-element term `|m·M|² / (Σ fourth powers of both elements' degrees)`.
///
/// Symmetric in its arguments: swapping them negates `m` and leaves `M` and the
/// denominator unchanged.
pub fn element_ratio(a: &PfsElement, b: &PfsElement) -> f64 {
    let v = AdjustmentMatrix::between(a, b).transform(DiffVector::between(a, b));
    let numerator = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    let fourth = |e: &PfsElement| e.squares().iter().map(|s| s * s).sum::<f64>();
    // Each element's squares sum to one, so at least one is >= 1/3 and this is >= 2/9.
    let denominator = fourth(a) + fourth(b);
    numerator / denominator
}

/// `sqrt((1/n) Σ element_ratio(a_i, b_i))`, summed in index order.
pub fn matrix_distance(a: &PfsSet, b: &PfsSet) -> Result<DistanceValue> {
    a.check_conformable(b)?;
    let sum: f64 = a
        .elements()
        .iter()
        .zip(b.elements())
        .map(|(x, y)| element_ratio(x, y))
        .sum();
    Ok(DistanceValue::new((sum / a.len() as f64).sqrt()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(mu: f64, nu: f64) -> PfsElement {
        PfsElement::new("x", mu, nu).unwrap()
    }

    fn sq(mu_sq: f64, nu_sq: f64) -> PfsElement {
        PfsElement::from_squares("x", mu_sq, nu_sq, 0.0).unwrap()
    }

    fn close3(a: [f64; 3], b: [f64; 3], tol: f64) -> bool {
        a.iter().zip(&b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn diff_vector_examples() {
        let m = DiffVector::between(&el(0.6, 0.6), &el(0.3, 0.3));
        assert!(close3(m.to_array(), [0.27, 0.27, -0.54], 1e-15));
        assert_eq!(
            DiffVector::between(&el(0.4, 0.2), &el(0.4, 0.2)).to_array(),
            [0.0; 3]
        );
        let m = DiffVector::between(&sq(0.1, 0.9), &sq(0.0, 1.0));
        assert!(close3(m.to_array(), [0.1, -0.1, 0.0], 1e-15));
    }

    #[test]
    fn adjustment_examples() {
        let m = AdjustmentMatrix::between(&el(0.6, 0.6), &el(0.3, 0.3));
        assert!((m.y - 0.5).abs() < 1e-15 && (m.n - 0.5).abs() < 1e-15);
        assert!((m.h - 0.707).abs() < 1e-3);

        let zero = AdjustmentMatrix::between(&el(0.0, 0.0), &el(0.0, 0.0));
        assert_eq!(zero, AdjustmentMatrix::FULLY_HESITANT);

        // pooled shares 0.1/2 and 1.9/2
        let m = AdjustmentMatrix::between(&sq(0.1, 0.9), &sq(0.0, 1.0));
        assert!((m.y - 0.05).abs() < 1e-15);
        assert!((m.n - 0.95).abs() < 1e-15);
        assert!((m.h - 0.095f64.sqrt()).abs() < 1e-12);
        assert!((m.h - 0.3082).abs() < 1e-4);
    }

    #[test]
    fn transform_examples() {
        let a = el(0.6, 0.6);
        let b = el(0.3, 0.3);
        let v = AdjustmentMatrix::between(&a, &b).transform(DiffVector::between(&a, &b));
        assert!(v[0].abs() < 1e-15 && v[1].abs() < 1e-15);
        // printed as +0.3818; the sign is immaterial to the norm
        assert!((v[2] + 0.54 * std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((v[2] + 0.3818).abs() < 1e-4);

        let m = AdjustmentMatrix {
            y: 0.3,
            n: 0.7,
            h: 0.42f64.sqrt(),
        };
        let zero = DiffVector {
            membership: 0.0,
            non_membership: 0.0,
            hesitance: 0.0,
        };
        assert_eq!(m.transform(zero), [0.0; 3]);
        let flat = DiffVector {
            membership: 0.1,
            non_membership: -0.1,
            hesitance: 0.0,
        };
        assert_eq!(m.transform(flat), [0.1, -0.1, 0.0]);
    }

    #[test]
    fn element_ratio_examples() {
        let a = el(0.6, 0.6);
        assert_eq!(element_ratio(&a, &a), 0.0);

        // numerator 0.54²/2 = 0.1458; denominator 0.1296·2 + 0.0081·2 + 0.28² + 0.82²
        let r = element_ratio(&a, &el(0.3, 0.3));
        assert!((r - 0.1458 / 1.0262).abs() < 1e-12);
        assert!((r - 0.1421).abs() < 1e-4);

        // delta = 0.5 pair of the sweep: (0.5, 0.5, 0) vs (0.4, 0.6, 0)
        let r = element_ratio(&sq(0.5, 0.5), &sq(0.4, 0.6));
        assert!((r - 0.02 / 1.02).abs() < 1e-15);
    }

    #[test]
    fn matrix_matches_explicit_product() {
        let a = el(0.7, 0.2);
        let b = el(0.1, 0.5);
        let m = DiffVector::between(&a, &b).to_array();
        let mat = AdjustmentMatrix::between(&a, &b).to_matrix();
        let explicit: Vec<f64> = (0..3)
            .map(|j| (0..3).map(|i| m[i] * mat[i][j]).sum())
            .collect();
        let v = AdjustmentMatrix::between(&a, &b).transform(DiffVector::between(&a, &b));
        assert!(close3(v, [explicit[0], explicit[1], explicit[2]], 1e-15));
    }

    #[test]
    fn zero_memberships_collapse_distance() {
        // with Y = 0 the hesitance difference cancels the non-membership difference
        let r = element_ratio(&el(0.0, 0.3), &el(0.0, 0.9));
        assert!(r.abs() < 1e-15);
        let r = element_ratio(&el(0.3, 0.0), &el(0.9, 0.0));
        assert!(r.abs() < 1e-15);
    }
}
