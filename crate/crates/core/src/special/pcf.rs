//! The parabolic cylinder function D_ν(z) for real z.
//!
//! Near the origin and for negative z, D_ν is evaluated from its Kummer
//! representation. For z > 1 that representation starts to cancel (about
//! nine digits are lost by z = 3 when ν = −5.5),
//! so D_ν is taken from the Laplace-type integral
//! `D_ν(z) = e^{−z²/4}/Γ(−ν) ∫₀^∞ t^{−ν−1} e^{−zt − t²/2} dt` (Re ν ≤ −1/2),
//! and raised to the requested order with `D_{ν+1} = z D_ν − ν D_{ν−1}`.

use num_complex::Complex64;
use std::f64::consts::{PI, SQRT_2};

use super::gamma::{gamma, reciprocal_gamma};
use super::hyper::pfq_series;
use super::{c, pow_pos, SeriesControl};
use crate::error::{Error, Result};
use crate::quad::{integrate_semi_infinite, QuadratureSpec};

/// Largest |z| accepted; no asymptotic expansion is provided beyond it.
pub const PCF_MAX_ABS_Z: f64 = 40.0;

/// Above this z the integral representation replaces the Kummer series.
const INTEGRAL_ROUTE_FROM: f64 = 1.0;

/// D_ν(z). `z` must be real with `|z| ≤ 40`.
pub fn pcf_d(nu: Complex64, z: Complex64) -> Result<Complex64> {
    if z.im != 0.0 {
        return Err(Error::Domain(format!("D_nu is evaluated for real z only (z = {z})")));
    }
    pcf_d_with(nu, z.re, &SeriesControl::default())
}

/// [`pcf_d`] for a real argument with explicit series control.
pub fn pcf_d_with(nu: Complex64, z: f64, ctrl: &SeriesControl) -> Result<Complex64> {
    if !z.is_finite() || z.abs() > PCF_MAX_ABS_Z {
        return Err(Error::Domain(format!("D_nu(z) needs |z| <= {PCF_MAX_ABS_Z}, got {z}")));
    }
    if z > INTEGRAL_ROUTE_FROM {
        by_integral(nu, z)
    } else {
        by_kummer(nu, z, ctrl)
    }
}

/// The Kummer representation, with the Gaussian factor folded into the
/// leading terms so the series never overflow for |z| ≤ 40.
pub(crate) fn by_kummer(nu: Complex64, z: f64, ctrl: &SeriesControl) -> Result<Complex64> {
    let x = c(z * z / 2.0);
    let scale = pow_pos(2.0, nu / 2.0) * (-z * z / 4.0).exp();
    let sqrt_pi = PI.sqrt();
    let mut out = c(0.0);
    let even = reciprocal_gamma((c(1.0) - nu) / 2.0);
    if even != c(0.0) {
        out += pfq_series(&[-nu / 2.0], &[c(0.5)], x, scale * sqrt_pi * even, ctrl)?;
    }
    let odd = reciprocal_gamma(-nu / 2.0);
    if odd != c(0.0) && z != 0.0 {
        let first = scale * (z / SQRT_2) * (-2.0 * sqrt_pi) * odd;
        out += pfq_series(&[(c(1.0) - nu) / 2.0], &[c(1.5)], x, first, ctrl)?;
    }
    Ok(out)
}

/// D_ν(z) for Re ν < 0 from the integral representation.
fn integral_base(nu: Complex64, z: f64) -> Result<Complex64> {
    debug_assert!(nu.re < 0.0);
    let power = -nu - 1.0;
    // ∫ t^{−ν−1} e^{−zt} dt = Γ(−ν) z^ν bounds the integral and sets the scale
    // for the absolute tolerance of the tail test.
    let magnitude = (gamma(-nu)? * pow_pos(z, nu)).norm();
    let spec =
        QuadratureSpec::semi_infinite(0.0).exponents(power.re, 0.0).decay(z).tolerances(1e-13, 1e-17 * magnitude);
    let r = integrate_semi_infinite(|n| Ok(pow_pos(n.from_lower, power) * (-(z + 0.5 * n.t) * n.t).exp()), &spec)?;
    Ok((-z * z / 4.0).exp() * reciprocal_gamma(-nu) * r.value)
}

pub(crate) fn by_integral(nu: Complex64, z: f64) -> Result<Complex64> {
    // Close to ν = 0 the integrand t^{−ν−1} is barely integrable, so the
    // integral is only used for Re ν ≤ −1/2; higher orders are reached with
    // the upward recurrence, which is stable for z > 0.
    if nu.re <= -0.5 {
        return integral_base(nu, z);
    }
    let steps = (nu.re + 1.5).floor() as usize + 1;
    let base = nu - steps as f64;
    let mut lower = integral_base(base, z)?;
    let mut upper = integral_base(base + 1.0, z)?;
    let mut order = base + 1.0;
    for _ in 1..steps {
        let next = z * upper - order * lower;
        lower = upper;
        upper = next;
        order += 1.0;
    }
    Ok(upper)
}
