//! Single-function transforms from which the product transforms are built.

use super::{d, need, pw, re, rg, C};
use crate::catalog::{grid, Expectation, IdentityCase, Kind, ParamPoint, Piece, Rhs};
use crate::error::Result;
use crate::special::{gamma, kummer_phi};

const NUS: [f64; 3] = [0.25, 0.5, 1.0];
const VARS: [f64; 3] = [0.5, 1.0, 2.0];
const PS: [f64; 3] = [0.5, 1.0, 3.0];

/// ν from `nu`, the shift `a` from `y`.
fn pcf_grid() -> Vec<ParamPoint> {
    grid(&[0.0], &NUS, &[0.0], &VARS, &PS)
}

fn kummer_grid(nus: &[f64]) -> Vec<ParamPoint> {
    grid(&[0.0], nus, &VARS, &[0.0], &PS)
}

fn pcf_valid(pt: &ParamPoint) -> std::result::Result<(), String> {
    need(pt.nu().re > 0.0, "Re nu > 0")?;
    need(pt.y > 0.0, "a > 0")?;
    need(pt.p > 0.0, "p > 0")
}

fn pcf_lhs(pt: &ParamPoint) -> Result<C> {
    let (nu, a, p) = (pt.nu(), pt.y, pt.p);
    Ok(gamma(nu)? * (a * p / 2.0).exp() * d(-2.0 * nu, (2.0 * a * p).sqrt())?)
}

fn pcf_rhs(pt: &ParamPoint) -> Result<Vec<Piece>> {
    let (nu, a, p) = (pt.nu(), pt.y, pt.p);
    let coef = pw(2.0, -nu) * a.sqrt();
    let f = move |n: crate::quad::Node| Ok(pw(n.t, nu - 1.0) * pw(n.t + a, -nu - 0.5));
    Ok(vec![Piece::new(0.0, f64::INFINITY, Box::new(f)).exponents(nu.re - 1.0, 0.0).coefficient(coef).laplace(p)])
}

fn pcf2_lhs(pt: &ParamPoint) -> Result<C> {
    let (nu, a, p) = (pt.nu(), pt.y, pt.p);
    Ok(gamma(nu)? / p.sqrt() * (a * p / 2.0).exp() * d(1.0 - 2.0 * nu, (2.0 * a * p).sqrt())?)
}

fn pcf2_rhs(pt: &ParamPoint) -> Result<Vec<Piece>> {
    let (nu, a, p) = (pt.nu(), pt.y, pt.p);
    let coef = pw(2.0, 0.5 - nu);
    let f = move |n: crate::quad::Node| Ok(pw(n.t, nu - 1.0) * pw(n.t + a, 0.5 - nu));
    Ok(vec![Piece::new(0.0, f64::INFINITY, Box::new(f)).exponents(nu.re - 1.0, 0.0).coefficient(coef).laplace(p)])
}

/// Kummer original `t^{b−a−1}(x−t)^{a−1}` on `[0, x]` with `a = ν`, `b = 2ν + 1`.
fn kum_valid(pt: &ParamPoint) -> std::result::Result<(), String> {
    need(pt.nu().re > 0.0, "Re b > Re a > 0 (a = nu, b = 2nu + 1)")?;
    need(pt.x > 0.0, "x > 0")?;
    need(pt.p > 0.0, "p > 0")
}

fn kum_lhs(pt: &ParamPoint) -> Result<C> {
    let (nu, x, p) = (pt.nu(), pt.x, pt.p);
    Ok((-x * p).exp() * kummer_phi(nu, 2.0 * nu + 1.0, re(x * p))?)
}

fn kum_rhs(pt: &ParamPoint) -> Result<Vec<Piece>> {
    let (nu, x, p) = (pt.nu(), pt.x, pt.p);
    let (a, b) = (nu, 2.0 * nu + 1.0);
    let coef = pw(x, 1.0 - b) * gamma(b)? * rg(b - a) * rg(a);
    let f = move |n: crate::quad::Node| Ok(pw(n.from_lower, b - a - 1.0) * pw(n.to_upper, a - 1.0));
    Ok(vec![Piece::new(0.0, x, Box::new(f)).exponents((b - a).re - 1.0, a.re - 1.0).coefficient(coef).laplace(p)])
}

fn kum_b_valid(pt: &ParamPoint) -> std::result::Result<(), String> {
    need(pt.nu().re > -2.0 && pt.nu().re < 1.0, "-2 < Re nu < 1")?;
    need(pt.x > 0.0, "x > 0")?;
    need(pt.p > 0.0, "p > 0")
}

fn kum_b_lhs(pt: &ParamPoint) -> Result<C> {
    let (nu, x, p) = (pt.nu(), pt.x, pt.p);
    let pref = x.sqrt() * 2.0 / std::f64::consts::PI.sqrt() * gamma(1.0 + nu / 2.0)? * gamma((1.0 - nu) / 2.0)?;
    Ok(pref * (-x * p).exp() * kummer_phi((1.0 - nu) / 2.0, re(1.5), re(p * x))?)
}

fn kum_b_rhs(pt: &ParamPoint) -> Result<Vec<Piece>> {
    let (nu, x, p) = (pt.nu(), pt.x, pt.p);
    let f = move |n: crate::quad::Node| Ok(pw(n.from_lower, nu / 2.0) * pw(n.to_upper, -(1.0 + nu) / 2.0));
    Ok(vec![Piece::new(0.0, x, Box::new(f)).exponents(nu.re / 2.0, -(1.0 + nu.re) / 2.0).laplace(p)])
}

fn kum_c_valid(pt: &ParamPoint) -> std::result::Result<(), String> {
    need(pt.nu().re > -1.0 && pt.nu().re < 0.0, "-1 < Re nu < 0")?;
    need(pt.x > 0.0, "x > 0")?;
    need(pt.p > 0.0, "p > 0")
}

fn kum_c_lhs(pt: &ParamPoint) -> Result<C> {
    let (nu, x, p) = (pt.nu(), pt.x, pt.p);
    let pref = 1.0 / (x * std::f64::consts::PI).sqrt() * gamma((1.0 + nu) / 2.0)? * gamma(-nu / 2.0)?;
    Ok(pref * (-x * p).exp() * kummer_phi(-nu / 2.0, re(0.5), re(p * x))?)
}

fn kum_c_rhs(pt: &ParamPoint) -> Result<Vec<Piece>> {
    let (nu, x, p) = (pt.nu(), pt.x, pt.p);
    let f = move |n: crate::quad::Node| Ok(pw(n.from_lower, (nu - 1.0) / 2.0) * pw(n.to_upper, -nu / 2.0 - 1.0));
    Ok(vec![Piece::new(0.0, x, Box::new(f)).exponents((nu.re - 1.0) / 2.0, -nu.re / 2.0 - 1.0).laplace(p)])
}

pub(super) fn cases() -> Vec<IdentityCase> {
    vec![
        IdentityCase {
            id: "ILT-PCF-BLOCK",
            kind: Kind::LaplacePair,
            summary: "Γ(ν) e^{ap/2} D_{−2ν}(√(2ap)) is the transform of 2^{−ν} √a t^{ν−1} (t+a)^{−ν−1/2}",
            roles: "nu = ν, y = a, p = p",
            tolerance: 1e-9,
            expectation: Expectation::Holds,
            validity: pcf_valid,
            lhs: pcf_lhs,
            rhs: Rhs::Pieces(pcf_rhs),
            scale: None,
            default_grid: pcf_grid,
        },
        IdentityCase {
            id: "ILT-PCF-BLOCK2",
            kind: Kind::LaplacePair,
            summary: "Γ(ν) p^{−1/2} e^{ap/2} D_{1−2ν}(√(2ap)) is the transform of 2^{1/2−ν} t^{ν−1} (t+a)^{1/2−ν}",
            roles: "nu = ν, y = a, p = p",
            tolerance: 1e-9,
            expectation: Expectation::Holds,
            validity: pcf_valid,
            lhs: pcf2_lhs,
            rhs: Rhs::Pieces(pcf2_rhs),
            scale: None,
            default_grid: pcf_grid,
        },
        IdentityCase {
            id: "ILT-KUM-BLOCK",
            kind: Kind::LaplacePair,
            summary: "e^{−xp} Φ(a; b; xp) is the transform of x^{1−b} Γ(b)/(Γ(b−a)Γ(a)) t^{b−a−1} (x−t)^{a−1} on (0, x), at a = ν, b = 2ν+1",
            roles: "nu = ν, x = x, p = p",
            tolerance: 1e-9,
            expectation: Expectation::Holds,
            validity: kum_valid,
            lhs: kum_lhs,
            rhs: Rhs::Pieces(kum_rhs),
            scale: None,
            default_grid: || kummer_grid(&NUS),
        },
        IdentityCase {
            id: "ILT-KUM-BLOCK-B",
            kind: Kind::LaplacePair,
            summary: "2√(x/π) Γ(1+ν/2) Γ((1−ν)/2) e^{−xp} Φ((1−ν)/2; 3/2; px) is the transform of t^{ν/2} (x−t)^{−(1+ν)/2} on (0, x)",
            roles: "nu = ν, x = x, p = p",
            tolerance: 1e-9,
            expectation: Expectation::Holds,
            validity: kum_b_valid,
            lhs: kum_b_lhs,
            rhs: Rhs::Pieces(kum_b_rhs),
            scale: None,
            default_grid: || kummer_grid(&[-1.5, -0.5, 0.25, 0.5]),
        },
        IdentityCase {
            id: "ILT-KUM-BLOCK-C",
            kind: Kind::LaplacePair,
            summary: "(πx)^{−1/2} Γ((1+ν)/2) Γ(−ν/2) e^{−xp} Φ(−ν/2; 1/2; px) is the transform of t^{(ν−1)/2} (x−t)^{−ν/2−1} on (0, x)",
            roles: "nu = ν, x = x, p = p",
            tolerance: 1e-9,
            expectation: Expectation::Holds,
            validity: kum_c_valid,
            lhs: kum_c_lhs,
            rhs: Rhs::Pieces(kum_c_rhs),
            scale: None,
            default_grid: || kummer_grid(&[-0.75, -0.5, -0.25]),
        },
    ]
}
