//! Special functions on the real axis with complex parameters.

mod appell;
mod erf;
mod gamma;
mod gauss;
mod hyper;
mod pcf;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use appell::appell_f1;
pub use erf::{erf, erfc};
pub use gamma::{digamma, gamma, reciprocal_gamma};
pub use gauss::{
    gauss_2f1, gauss_2f1_at_one, gauss_2f1_maclaurin, gauss_2f1_regularized, Gauss2F1, RegularizedGauss2F1,
};
pub use hyper::{hyp_2f2, kummer_phi, kummer_phi_with, pfq_series};
pub use pcf::{pcf_d, pcf_d_with, PCF_MAX_ABS_Z};

/// Stopping rules shared by every power series in this module.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesControl {
    pub max_terms: usize,
    /// A term this small relative to the partial sum counts as negligible;
    /// summation stops after three negligible terms in a row.
    pub rel_tail_tol: f64,
    /// Terms above this magnitude abort the summation.
    pub recurrence_guard: f64,
}

impl Default for SeriesControl {
    fn default() -> Self {
        SeriesControl { max_terms: 10_000, rel_tail_tol: 1e-16, recurrence_guard: 1e300 }
    }
}

impl SeriesControl {
    pub fn validate(&self) -> Result<()> {
        if self.max_terms < 1 {
            return Err(Error::Domain("max_terms must be at least 1".into()));
        }
        if !(self.rel_tail_tol > 0.0 && self.rel_tail_tol < 1.0) {
            return Err(Error::Domain(format!("rel_tail_tol must lie in (0, 1), got {}", self.rel_tail_tol)));
        }
        if !(self.recurrence_guard > 1.0) {
            return Err(Error::Domain("recurrence_guard must exceed 1".into()));
        }
        Ok(())
    }
}

/// The orders `(μ, ν)` of a parameterised identity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OrderPair {
    pub mu: Complex64,
    pub nu: Complex64,
}

impl OrderPair {
    pub fn new(mu: f64, nu: f64) -> Self {
        OrderPair { mu: Complex64::new(mu, 0.0), nu: Complex64::new(nu, 0.0) }
    }

    /// True when both orders are real.
    pub fn is_real(&self) -> bool {
        self.mu.im == 0.0 && self.nu.im == 0.0
    }

    /// `Re ν < 1` and `Re μ < min(1 − Re ν, 2 + Re ν)`.
    pub fn in_convolution_range(&self) -> bool {
        let (m, n) = (self.mu.re, self.nu.re);
        n < 1.0 && m < (1.0 - n).min(2.0 + n)
    }

    /// `Re(μ + ν) < bound`.
    pub fn sum_below(&self, bound: f64) -> bool {
        (self.mu + self.nu).re < bound
    }
}

pub(crate) fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// The nonpositive integer `-n` if `z` is one.
pub(crate) fn nonpositive_integer(z: Complex64) -> Option<u64> {
    if z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0 && z.re > -1e15 {
        Some((-z.re) as u64)
    } else {
        None
    }
}

/// Complex power with a positive real base, on the principal branch.
pub(crate) fn pow_pos(base: f64, exponent: Complex64) -> Complex64 {
    debug_assert!(base >= 0.0);
    if exponent.im == 0.0 {
        return c(base.powf(exponent.re));
    }
    if base == 0.0 {
        return if exponent.re > 0.0 { c(0.0) } else { c(f64::INFINITY) };
    }
    (exponent * base.ln()).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_control_is_valid() {
        SeriesControl::default().validate().unwrap();
        assert!(SeriesControl { max_terms: 0, ..Default::default() }.validate().is_err());
        assert!(SeriesControl { rel_tail_tol: 1.0, ..Default::default() }.validate().is_err());
    }

    #[test]
    fn order_constraints() {
        assert!(OrderPair::new(-0.5, -0.5).in_convolution_range());
        assert!(!OrderPair::new(0.0, 1.0).in_convolution_range());
        assert!(!OrderPair::new(1.0, -1.5).in_convolution_range());
        assert!(OrderPair::new(-0.5, 0.25).sum_below(0.0));
    }

    #[test]
    fn integer_detection() {
        assert_eq!(nonpositive_integer(c(-3.0)), Some(3));
        assert_eq!(nonpositive_integer(c(0.0)), Some(0));
        assert_eq!(nonpositive_integer(c(-0.5)), None);
        assert_eq!(nonpositive_integer(Complex64::new(-1.0, 1e-3)), None);
    }
}
