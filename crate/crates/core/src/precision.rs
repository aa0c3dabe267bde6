//! Truncation control for every infinite sum and integral in the crate.

use crate::error::{Error, Result};

/// Accuracy target and truncation budget.
///
/// Every series, lattice sum and quadrature takes a `Precision` and either
/// returns a value whose absolute error is certified to be below `eps`, or
/// fails with `CapExceeded` when that would require exceeding `max_radius`
/// or `max_terms`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Precision {
    /// Target absolute error of each evaluated sum or integral.
    pub eps: f64,
    /// Hard cap on the enumeration radius of lattice sums.
    pub max_radius: f64,
    /// Hard cap on the number of enumerated terms.
    pub max_terms: usize,
}

impl Precision {
    pub fn new(eps: f64, max_radius: f64, max_terms: usize) -> Result<Self> {
        if !(eps.is_finite() && eps > 0.0 && eps < 1.0) {
            return Err(Error::InvalidInput(format!(
                "eps must lie in (0, 1), got {eps}"
            )));
        }
        if !(max_radius.is_finite() && max_radius > 0.0) {
            return Err(Error::InvalidInput(format!(
                "max_radius must be positive, got {max_radius}"
            )));
        }
        if max_terms == 0 {
            return Err(Error::InvalidInput("max_terms must be at least 1".into()));
        }
        Ok(Self {
            eps,
            max_radius,
            max_terms,
        })
    }

    /// Default budget with a custom accuracy target.
    pub fn with_eps(eps: f64) -> Result<Self> {
        Self::new(eps, DEFAULT_MAX_RADIUS, DEFAULT_MAX_TERMS)
    }

    /// Same budget, tighter target; used when a result feeds a later stage.
    pub(crate) fn tightened(&self, factor: f64) -> Precision {
        Precision {
            eps: (self.eps * factor).max(f64::MIN_POSITIVE),
            ..*self
        }
    }
}

pub const DEFAULT_EPS: f64 = 1e-12;
pub const DEFAULT_MAX_RADIUS: f64 = 50.0;
pub const DEFAULT_MAX_TERMS: usize = 10_000_000;

impl Default for Precision {
    fn default() -> Self {
        Precision {
            eps: DEFAULT_EPS,
            max_radius: DEFAULT_MAX_RADIUS,
            max_terms: DEFAULT_MAX_TERMS,
        }
    }
}
