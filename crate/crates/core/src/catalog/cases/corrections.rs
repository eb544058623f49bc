//! Two transforms whose commonly tabulated forms are wrong, each with its
//! corrected form and a negative control that encodes the tabulated form.

use std::f64::consts::PI;

use super::{d, need, pw, re, rg, C};
use crate::catalog::{grid, Expectation, IdentityCase, Kind, ParamPoint, Piece, Rhs};
use crate::error::Result;
use crate::quad::Node;
use crate::special::{pfq_series, SeriesControl};

const AS: [f64; 3] = [0.5, 1.0, 1.5];
const PS: [f64; 3] = [0.5, 1.0, 2.0];

fn squares(v: &[f64]) -> Vec<f64> {
    v.iter().map(|a| a * a).collect()
}

fn reciprocal_grid() -> Vec<ParamPoint> {
    grid(&[0.0], &[-1.5, -0.5, 0.25, 1.0], &[0.0], &squares(&AS), &PS)
}

fn product_grid() -> Vec<ParamPoint> {
    let orders = [-1.5, -1.0, -0.5];
    grid(&orders, &orders, &[0.0], &squares(&AS), &PS)
}

fn reciprocal_valid(pt: &ParamPoint) -> std::result::Result<(), String> {
    need(pt.a() > 0.0, "a > 0")?;
    need(pt.p > 0.0, "p > 0")
}

/// `D_ν(a√p) D_{−ν−1}(a√p)`.
fn reciprocal_lhs(pt: &ParamPoint) -> Result<C> {
    let (nu, z) = (pt.nu(), pt.a() * pt.p.sqrt());
    Ok(d(nu, z)? * d(-nu - 1.0, z)?)
}

fn reciprocal_rhs(pt: &ParamPoint) -> Result<Vec<Piece>> {
    let (nu, a, a2) = (pt.nu(), pt.a(), pt.y);
    let lower = a2 / 2.0;
    let f = move |n: Node| {
        let g = n.from_lower;
        let t = lower + g;
        let angle = (g / (2.0 * t)).sqrt().asin();
        Ok(re(a / ((g * (g + a2)).sqrt() * (2.0 * PI * t).sqrt())) * ((2.0 * nu + 1.0) * angle).cos())
    };
    Ok(vec![Piece::new(lower, f64::INFINITY, Box::new(f)).exponents(-0.5, 0.0).laplace(pt.p)])
}

fn tabulated_reciprocal_valid(pt: &ParamPoint) -> std::result::Result<(), String> {
    reciprocal_valid(pt)?;
    need(pt.a() <= 2.0, "a <= 2 (arccos argument a²/(2t) <= 1 on t >= a)")
}

fn tabulated_reciprocal_rhs(pt: &ParamPoint) -> Result<Vec<Piece>> {
    let (nu, a, a2) = (pt.nu(), pt.a(), pt.y);
    let f = move |n: Node| {
        let g = n.from_lower;
        let t = a + g;
        let angle = (a2 / (2.0 * t)).acos();
        Ok(re(1.0 / ((g * (g + 2.0 * a)).sqrt() * (2.0 * t).sqrt())) * ((nu + 0.5) * angle).cos())
    };
    Ok(vec![Piece::new(a, f64::INFINITY, Box::new(f)).exponents(-0.5, 0.0).laplace(pt.p)])
}

fn product_valid(pt: &ParamPoint) -> std::result::Result<(), String> {
    need(pt.orders.sum_below(0.0), "Re(mu + nu) < 0")?;
    need(pt.a() > 0.0, "a > 0")?;
    need(pt.p > 0.0, "p > 0")
}

fn product_lhs_with(pt: &ParamPoint, exponent_factor: f64) -> Result<C> {
    let (mu, nu, a, p) = (pt.mu(), pt.nu(), pt.a(), pt.p);
    let z = a * p;
    Ok((exponent_factor * z * z).exp() * d(mu, z)? * d(nu, z)?)
}

/// `e^{a²p²/2} D_μ(ap) D_ν(ap)`.
fn product_lhs(pt: &ParamPoint) -> Result<C> {
    product_lhs_with(pt, 0.5)
}

/// The tabulated left side, `e^{a²p²/4} D_μ(ap) D_ν(ap)`.
fn tabulated_product_lhs(pt: &ParamPoint) -> Result<C> {
    product_lhs_with(pt, 0.25)
}

fn product_rhs(pt: &ParamPoint) -> Result<Vec<Piece>> {
    let (mu, nu, a2) = (pt.mu(), pt.nu(), pt.y);
    let s = mu + nu;
    let num = [-mu, -nu];
    let den = [-s / 2.0, (1.0 - s) / 2.0];
    let ctrl = SeriesControl::default();
    let e0 = -(1.0 + s);
    let f = move |n: Node| {
        let t = n.t;
        let gauss = (-t * t / (2.0 * a2)).exp();
        Ok(pw(t, e0) * pfq_series(&num, &den, re(t * t / (4.0 * a2)), re(gauss), &ctrl)?)
    };
    let coef = rg(-s) * pw(pt.a(), s);
    Ok(vec![Piece::new(0.0, f64::INFINITY, Box::new(f)).exponents(e0.re, 0.0).coefficient(coef).laplace(pt.p)])
}

pub(super) fn cases() -> Vec<IdentityCase> {
    vec![
        IdentityCase {
            id: "T41-CORRECTED",
            kind: Kind::LaplacePair,
            summary: "D_ν(a√p) D_{−ν−1}(a√p) as an original on (a²/2, ∞) with a cosine of an arcsine",
            roles: "nu = ν, y = a² (a = √y), p = p",
            tolerance: Kind::LaplacePair.default_tolerance(),
            expectation: Expectation::Holds,
            validity: reciprocal_valid,
            lhs: reciprocal_lhs,
            rhs: Rhs::Pieces(reciprocal_rhs),
            scale: None,
            default_grid: reciprocal_grid,
        },
        IdentityCase {
            id: "NEG-T41",
            kind: Kind::LaplacePair,
            summary: "tabulated form: D_ν(a√p) D_{−ν−1}(a√p) as an original on (a, ∞) with (t²−a²)^{−1/2}/√(2t) and an arccosine; must fail",
            roles: "nu = ν, y = a² (a = √y), p = p",
            tolerance: Kind::LaplacePair.default_tolerance(),
            expectation: Expectation::Fails,
            validity: tabulated_reciprocal_valid,
            lhs: reciprocal_lhs,
            rhs: Rhs::Pieces(tabulated_reciprocal_rhs),
            scale: None,
            default_grid: reciprocal_grid,
        },
        IdentityCase {
            id: "T42-CORRECTED",
            kind: Kind::LaplacePair,
            summary: "e^{a²p²/2} D_μ(ap) D_ν(ap) as an original with a Gaussian times ₂F₂",
            roles: "mu = μ, nu = ν, y = a² (a = √y), p = p",
            tolerance: Kind::LaplacePair.default_tolerance(),
            expectation: Expectation::Holds,
            validity: product_valid,
            lhs: product_lhs,
            rhs: Rhs::Pieces(product_rhs),
            scale: None,
            default_grid: product_grid,
        },
        IdentityCase {
            id: "NEG-T42",
            kind: Kind::LaplacePair,
            summary: "tabulated form with e^{a²p²/4} on the left; must fail",
            roles: "mu = μ, nu = ν, y = a² (a = √y), p = p",
            tolerance: Kind::LaplacePair.default_tolerance(),
            expectation: Expectation::Fails,
            validity: product_valid,
            lhs: tabulated_product_lhs,
            rhs: Rhs::Pieces(product_rhs),
            scale: None,
            default_grid: product_grid,
        },
    ]
}
