//! Jacobi theta nulls θ₂, θ₃, θ₄ at purely imaginary argument τ = iy.
//!
//! With q = e^{-πy} the three series are
//!
//! - θ₂(iy) = 2 Σ_{k≥0} q^{(k+1/2)²}
//! - θ₃(iy) = 1 + 2 Σ_{k≥1} q^{k²}
//! - θ₄(iy) = 1 + 2 Σ_{k≥1} (-1)^k q^{k²}
//!
//! all real and positive for y > 0. (θ₁'s null vanishes identically and is
//! excluded.) Each also has a Jacobi triple product representation:
//!
//! - θ₂(iy) = 2 q^{1/4} Π_{k≥1} (1 - q^{2k})(1 + q^{2k})²
//! - θ₃(iy) =           Π_{k≥1} (1 - q^{2k})(1 + q^{2k-1})²
//! - θ₄(iy) =           Π_{k≥1} (1 - q^{2k})(1 - q^{2k-1})²
//!
//! and the Poisson-summation transforms
//!
//! - θ₂(iy) = y^{-1/2} θ₄(i/y),  θ₄(iy) = y^{-1/2} θ₂(i/y),
//! - θ₃(iy) = y^{-1/2} θ₃(i/y).
//!
//! Series are truncated with an explicit geometric-tail majorant, so the
//! absolute error is certified below `Precision::eps`. Below y = 0.2 the
//! transform is applied automatically, which keeps term counts at a few
//! dozen for every input. All arithmetic is f64; do not request eps below
//! 1e-13.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::precision::Precision;

/// Which theta null to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaKind {
    Theta2,
    Theta3,
    Theta4,
}

impl ThetaKind {
    /// The conventional index 2, 3 or 4.
    pub fn index(self) -> u8 {
        match self {
            ThetaKind::Theta2 => 2,
            ThetaKind::Theta3 => 3,
            ThetaKind::Theta4 => 4,
        }
    }

    pub fn from_index(i: u8) -> Result<Self> {
        match i {
            2 => Ok(ThetaKind::Theta2),
            3 => Ok(ThetaKind::Theta3),
            4 => Ok(ThetaKind::Theta4),
            _ => Err(Error::InvalidInput(format!(
                "theta index must be 2, 3 or 4, got {i}"
            ))),
        }
    }

    /// The kind appearing on the other side of the τ ↦ -1/τ transform.
    fn transform_partner(self) -> ThetaKind {
        match self {
            ThetaKind::Theta2 => ThetaKind::Theta4,
            ThetaKind::Theta3 => ThetaKind::Theta3,
            ThetaKind::Theta4 => ThetaKind::Theta2,
        }
    }
}

/// Below this y the series is evaluated through the Jacobi transform.
const TRANSFORM_THRESHOLD: f64 = 0.2;

fn check_y(y: f64) -> Result<()> {
    if !(y.is_finite() && y > 0.0) {
        return Err(Error::InvalidInput(format!("y must be positive, got {y}")));
    }
    Ok(())
}

/// θ_kind(iy) with certified absolute error below `p.eps`.
///
/// For y < 0.2 the value is computed through `theta_transformed`.
pub fn theta_null(kind: ThetaKind, y: f64, p: &Precision) -> Result<f64> {
    theta_null_counted(kind, y, p).map(|(v, _)| v)
}

/// Same as `theta_null`, also reporting the number of series terms used.
pub fn theta_null_counted(kind: ThetaKind, y: f64, p: &Precision) -> Result<(f64, usize)> {
    check_y(y)?;
    if y < TRANSFORM_THRESHOLD {
        theta_transformed_counted(kind, y, p)
    } else {
        theta_null_series_counted(kind, y, p)
    }
}

/// Direct series evaluation, no automatic transform.
pub fn theta_null_series(kind: ThetaKind, y: f64, p: &Precision) -> Result<f64> {
    theta_null_series_counted(kind, y, p).map(|(v, _)| v)
}

pub fn theta_null_series_counted(
    kind: ThetaKind,
    y: f64,
    p: &Precision,
) -> Result<(f64, usize)> {
    check_y(y)?;
    let a = PI * y;
    match kind {
        ThetaKind::Theta3 | ThetaKind::Theta4 => {
            let mut sum = 1.0;
            let mut k: usize = 1;
            loop {
                // Tail from index k onward: first term e^{-a k²}, term ratio
                // at most e^{-a (2k+1)}.
                let t = (-a * (k * k) as f64).exp();
                let ratio = (-a * (2 * k + 1) as f64).exp();
                if 2.0 * t / (1.0 - ratio) < p.eps {
                    return Ok((sum, k - 1));
                }
                if k > p.max_terms {
                    return Err(Error::CapExceeded {
                        what: "terms",
                        needed: k as f64,
                        cap: p.max_terms as f64,
                    });
                }
                let signed = if kind == ThetaKind::Theta4 && k % 2 == 1 {
                    -t
                } else {
                    t
                };
                sum += 2.0 * signed;
                k += 1;
            }
        }
        ThetaKind::Theta2 => {
            // Always include k = 0 so the result stays strictly positive.
            let mut sum = 2.0 * (-a * 0.25).exp();
            let mut k: usize = 1;
            loop {
                let half = k as f64 + 0.5;
                let t = (-a * half * half).exp();
                let ratio = (-a * (2 * k + 2) as f64).exp();
                if 2.0 * t / (1.0 - ratio) < p.eps {
                    return Ok((sum, k));
                }
                if k > p.max_terms {
                    return Err(Error::CapExceeded {
                        what: "terms",
                        needed: k as f64,
                        cap: p.max_terms as f64,
                    });
                }
                sum += 2.0 * t;
                k += 1;
            }
        }
    }
}

/// θ_kind(iy) evaluated through the transformed side:
/// y^{-1/2} θ_partner(i/y), with the partner series evaluated directly.
pub fn theta_transformed(kind: ThetaKind, y: f64, p: &Precision) -> Result<f64> {
    theta_transformed_counted(kind, y, p).map(|(v, _)| v)
}

pub fn theta_transformed_counted(
    kind: ThetaKind,
    y: f64,
    p: &Precision,
) -> Result<(f64, usize)> {
    check_y(y)?;
    let scale = y.sqrt().recip();
    // The partner value gets multiplied by y^{-1/2}; shrink the inner target
    // accordingly when that factor exceeds 1.
    let inner = Precision {
        eps: p.eps * y.sqrt().min(1.0),
        ..*p
    };
    let (v, terms) = theta_null_series_counted(kind.transform_partner(), y.recip(), &inner)?;
    Ok((scale * v, terms))
}

/// Jacobi triple product evaluation.
///
/// Factors are multiplied until the next factor differs from 1 by less than
/// `p.eps` divided by the number of factors taken so far; agrees with
/// `theta_null` to 2·eps.
pub fn theta_null_product(kind: ThetaKind, y: f64, p: &Precision) -> Result<f64> {
    theta_null_product_counted(kind, y, p).map(|(v, _)| v)
}

pub fn theta_null_product_counted(
    kind: ThetaKind,
    y: f64,
    p: &Precision,
) -> Result<(f64, usize)> {
    check_y(y)?;
    let q = (-PI * y).exp();
    let mut product = 1.0;
    let mut k: usize = 1;
    loop {
        let q_even = q.powi(2 * k as i32);
        let factor = match kind {
            ThetaKind::Theta2 => {
                let u = 1.0 + q_even;
                (1.0 - q_even) * u * u
            }
            ThetaKind::Theta3 => {
                let u = 1.0 + q.powi(2 * k as i32 - 1);
                (1.0 - q_even) * u * u
            }
            ThetaKind::Theta4 => {
                let u = 1.0 - q.powi(2 * k as i32 - 1);
                (1.0 - q_even) * u * u
            }
        };
        if (factor - 1.0).abs() < p.eps / k as f64 {
            break;
        }
        if k > p.max_terms {
            return Err(Error::CapExceeded {
                what: "terms",
                needed: k as f64,
                cap: p.max_terms as f64,
            });
        }
        product *= factor;
        k += 1;
    }
    let value = match kind {
        ThetaKind::Theta2 => 2.0 * (-PI * y / 4.0).exp() * product,
        _ => product,
    };
    Ok((value, k - 1))
}
