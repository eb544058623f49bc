//! Registered identities, grouped by family. Registry order is the order
//! of the groups below, then declaration order within each group.

mod blocks;
mod corrections;
mod erf;
mod integrals;
mod reductions;
mod theorems;

use num_complex::Complex64;

use super::{IdentityCase, ParamPoint};
use crate::error::Result;
use crate::special::{nonpositive_integer, pcf_d, pow_pos, reciprocal_gamma};

type C = Complex64;

pub(super) fn all() -> Vec<IdentityCase> {
    let mut v = Vec::new();
    v.extend(blocks::cases());
    v.extend(theorems::cases());
    v.extend(erf::cases());
    v.extend(corrections::cases());
    v.extend(integrals::cases());
    v.extend(reductions::cases());
    v
}

fn re(x: f64) -> C {
    C::new(x, 0.0)
}

fn d(nu: C, z: f64) -> Result<C> {
    pcf_d(nu, re(z))
}

fn rg(z: C) -> C {
    reciprocal_gamma(z)
}

fn pw(base: f64, exponent: C) -> C {
    pow_pos(base, exponent)
}

fn need(ok: bool, condition: &str) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(condition.to_string())
    }
}

fn positive_xyp(pt: &ParamPoint) -> std::result::Result<(), String> {
    need(pt.x > 0.0, "x > 0")?;
    need(pt.y > 0.0, "y > 0")?;
    need(pt.p > 0.0, "p > 0")
}

/// Effective endpoint exponent of `power · ₂F₁(a, b; ·; Z)` where `Z → −∞`
/// like the reciprocal of the distance to the endpoint: the hypergeometric
/// factor contributes `(distance)^{min(a, b)}` when that is singular.
fn with_pfaff_growth(power: f64, a: C, b: C) -> f64 {
    power + 0f64.min(a.re).min(b.re)
}

/// Effective endpoint exponent of `power · ₂F₁(a, b; c; Z)` where `1 − Z`
/// vanishes linearly at the endpoint.
fn with_unit_argument(power: f64, a: C, b: C, c: C) -> f64 {
    power + 0f64.min((c - a - b).re)
}

/// Extra vanishing order at `Z = 0` of the regularized ₂F₁ when `c` is a
/// nonpositive integer `−n`: it starts at `Z^{n+1}`.
fn regularized_order(c: C) -> f64 {
    nonpositive_integer(c).map_or(0.0, |n| n as f64 + 1.0)
}
