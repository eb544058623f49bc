//! Definite integrals of a Gaussian times ₂F₂, in closed form through ₂F₁.
//! `W = y(2x+y)/(x+y)²`, `1 − W = x²/(x+y)²`.

use super::{need, pw, re, C};
use crate::catalog::{grid, Expectation, IdentityCase, Kind, ParamPoint, Piece, Rhs};
use crate::error::Result;
use crate::quad::Node;
use crate::special::{gamma, pfq_series, Gauss2F1, SeriesControl};

fn integral_grid() -> Vec<ParamPoint> {
    let orders = [-1.5, -1.0, -0.5];
    let vars = [0.5, 1.0, 2.0];
    grid(&orders, &orders, &vars, &vars, &[1.0])
}

fn w(x: f64, y: f64) -> (f64, f64) {
    let s2 = (x + y) * (x + y);
    (y * (2.0 * x + y) / s2, x * x / s2)
}

/// `∫₀^∞ t^{power} e^{−(x+y)t²/(4xy)} ₂F₂(−μ, −ν; −(μ+ν)/2, (1−μ−ν)/2; t²/(8x)) dt`.
fn gaussian_2f2(pt: &ParamPoint, power: C) -> Vec<Piece> {
    let (mu, nu, x, y) = (pt.mu(), pt.nu(), pt.x, pt.y);
    let s = mu + nu;
    let num = [-mu, -nu];
    let den = [-s / 2.0, (1.0 - s) / 2.0];
    let ctrl = SeriesControl::default();
    let rate = (x + y) / (4.0 * x * y);
    let f = move |n: Node| {
        let t = n.t;
        Ok(pw(t, power) * pfq_series(&num, &den, re(t * t / (8.0 * x)), re((-rate * t * t).exp()), &ctrl)?)
    };
    vec![Piece::new(0.0, f64::INFINITY, Box::new(f)).exponents(power.re, 0.0)]
}

fn first_valid(pt: &ParamPoint) -> std::result::Result<(), String> {
    need(pt.orders.sum_below(1.0), "Re(mu + nu) < 1")?;
    need((pt.mu() + pt.nu()).norm() > 0.0, "mu + nu != 0")?;
    need(pt.x > 0.0 && pt.y > 0.0, "x > 0 and y > 0")
}

fn first_lhs(pt: &ParamPoint) -> Result<C> {
    let (mu, nu, x, y) = (pt.mu(), pt.nu(), pt.x, pt.y);
    let s = mu + nu;
    let (z, zc) = w(x, y);
    let f1 = Gauss2F1::new(-mu / 2.0, -(1.0 + nu) / 2.0, -s / 2.0).eval_with_complement(z, zc)?;
    let f2 = Gauss2F1::new(-mu / 2.0, (1.0 - nu) / 2.0, 1.0 - s / 2.0).eval_with_complement(z, zc)?;
    let bracket = f1 - nu * y / (s * (x + y)) * f2;
    Ok(pw(2.0, -s) * gamma((1.0 - s) / 2.0)? * y * pw((x + y) / (x * y), (1.0 + s) / 2.0) * bracket)
}

fn first_rhs(pt: &ParamPoint) -> Result<Vec<Piece>> {
    Ok(gaussian_2f2(pt, -(pt.mu() + pt.nu())))
}

fn second_valid(pt: &ParamPoint) -> std::result::Result<(), String> {
    need(pt.orders.sum_below(0.0), "Re(mu + nu) < 0")?;
    need(pt.x > 0.0 && pt.y > 0.0, "x > 0 and y > 0")
}

fn second_lhs(pt: &ParamPoint) -> Result<C> {
    let (mu, nu, x, y) = (pt.mu(), pt.nu(), pt.x, pt.y);
    let s = mu + nu;
    let (z, zc) = w(x, y);
    let f = Gauss2F1::new(-mu / 2.0, -nu / 2.0, (1.0 - s) / 2.0).eval_with_complement(z, zc)?;
    Ok(pw(2.0, -(1.0 + s)) * gamma(-s / 2.0)? * pw((x + y) / (x * y), s / 2.0) * f)
}

fn second_rhs(pt: &ParamPoint) -> Result<Vec<Piece>> {
    Ok(gaussian_2f2(pt, -(1.0 + pt.mu() + pt.nu())))
}

pub(super) fn cases() -> Vec<IdentityCase> {
    let case = |id, summary, validity, lhs, rhs| IdentityCase {
        id,
        kind: Kind::DirectIntegral,
        summary,
        roles: "mu = μ, nu = ν, x = x, y = y; p unused",
        tolerance: Kind::DirectIntegral.default_tolerance(),
        expectation: Expectation::Holds,
        validity,
        lhs,
        rhs: Rhs::Pieces(rhs),
        scale: None,
        default_grid: integral_grid,
    };
    vec![
        case(
            "S51-INT",
            "∫₀^∞ t^{−(μ+ν)} e^{−(x+y)t²/(4xy)} ₂F₂(−μ, −ν; −(μ+ν)/2, (1−μ−ν)/2; t²/(8x)) dt as a combination of two ₂F₁ at W",
            first_valid,
            first_lhs,
            first_rhs,
        ),
        case(
            "S52-INT",
            "∫₀^∞ t^{−(1+μ+ν)} e^{−(x+y)t²/(4xy)} ₂F₂(−μ, −ν; −(μ+ν)/2, (1−μ−ν)/2; t²/(8x)) dt as a single ₂F₁ at W",
            second_valid,
            second_lhs,
            second_rhs,
        ),
    ]
}
