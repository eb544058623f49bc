//! Appell's F₁ on the real slice z1, z2 < 1, through its Euler integral.

use num_complex::Complex64;

use super::gamma::{gamma, reciprocal_gamma};
use super::{c, pow_pos};
use crate::error::{Error, Result};
use crate::quad::{integrate_finite, QuadratureSpec};

/// F₁(a; b1, b2; c; z1, z2) for `Re c > Re a > 0` and real `z1, z2 < 1`:
///
/// `Γ(c)/(Γ(a)Γ(c−a)) ∫₀¹ u^{a−1}(1−u)^{c−a−1}(1−z1 u)^{−b1}(1−z2 u)^{−b2} du`.
pub fn appell_f1(a: Complex64, b1: Complex64, b2: Complex64, cc: Complex64, z1: f64, z2: f64) -> Result<Complex64> {
    if !(cc.re > a.re && a.re > 0.0) {
        return Err(Error::Domain(format!("Appell F1 integral needs Re c > Re a > 0 (a = {a}, c = {cc})")));
    }
    if !(z1 < 1.0 && z2 < 1.0) {
        return Err(Error::Domain(format!("Appell F1 needs z1, z2 < 1 (got {z1}, {z2})")));
    }
    if z1 == 0.0 && z2 == 0.0 {
        return Ok(c(1.0));
    }
    let prefactor = gamma(cc)? * reciprocal_gamma(a) * reciprocal_gamma(cc - a);
    let (pa, pb) = (a - 1.0, cc - a - 1.0);
    let spec = QuadratureSpec::finite(0.0, 1.0).exponents(pa.re, pb.re).tolerances(1e-13, 0.0);
    let (z1c, z2c) = (1.0 - z1, 1.0 - z2);
    let r = integrate_finite(
        |n| {
            // 1 − z u written as (1 − z) + z (1 − u) stays accurate near u = 1.
            let g1 = z1c + z1 * n.to_upper;
            let g2 = z2c + z2 * n.to_upper;
            Ok(pow_pos(n.from_lower, pa) * pow_pos(n.to_upper, pb) * pow_pos(g1, -b1) * pow_pos(g2, -b2))
        },
        &spec,
    )?;
    Ok(prefactor * r.value)
}
