//! Products of two parabolic cylinder functions whose arguments may have
//! opposite signs, and the intermediate Kummer-function transforms.
//!
//! Variables shared by the originals below:
//! `Z₁ = t(x−y−t)/((x−t)(y+t))` on `(0, x)`,
//! `Z₂ = xy/(t(y−x+t))` on `(x, ∞)`,
//! `Z₃ = t(x+y+t)/((x+t)(y+t))` on `(0, ∞)`.

use std::f64::consts::PI;

use super::{d, need, positive_xyp, pw, re, regularized_order, rg, with_pfaff_growth, with_unit_argument, C};
use crate::catalog::{grid, Expectation, IdentityCase, Kind, ParamPoint, Piece, Rhs};
use crate::error::Result;
use crate::quad::Node;
use crate::special::{kummer_phi, Gauss2F1, RegularizedGauss2F1};

fn theorem_grid() -> Vec<ParamPoint> {
    let orders = [-1.5, -1.0, -0.5];
    grid(&orders, &orders, &[0.5, 1.0], &[0.5, 2.0], &[0.5, 1.0, 3.0])
}

fn convolution_valid(pt: &ParamPoint) -> std::result::Result<(), String> {
    need(pt.orders.in_convolution_range(), "Re nu < 1 and Re mu < min(1 - Re nu, 2 + Re nu)")?;
    positive_xyp(pt)
}

/// `Z₁` and `1 − Z₁` at a node of `(0, x)`.
fn z1(n: Node, x: f64, y: f64) -> (f64, f64, f64, f64) {
    let (t, xm) = (n.from_lower, n.to_upper);
    (t, xm, t * (xm - y) / (xm * (y + t)), x * y / (xm * (y + t)))
}

/// `t`, `t − x`, `Z₂` and `1 − Z₂` at a node of `(x, ∞)`.
fn z2(n: Node, x: f64, y: f64) -> (f64, f64, f64, f64) {
    let g = n.from_lower;
    let t = x + g;
    (t, g, x * y / (t * (y + g)), g * (x + y + g) / (t * (y + g)))
}

/// `Z₃` and `1 − Z₃` at `t`.
fn z3(t: f64, x: f64, y: f64) -> (f64, f64) {
    let den = (x + t) * (y + t);
    (t * (x + y + t) / den, x * y / den)
}

/// `t^{(ν−μ)/2} (x−t)^{−(1+ν)/2} (y+t)^{μ/2} F(−μ/2, (1+ν)/2; 1+(ν−μ)/2; Z₁)` on `(0, x)`.
fn first_difference_piece(pt: &ParamPoint, coef: C) -> Piece {
    let (mu, nu, x, y) = (pt.mu(), pt.nu(), pt.x, pt.y);
    let (a, b) = (-mu / 2.0, (1.0 + nu) / 2.0);
    let f = Gauss2F1::new(a, b, 1.0 + (nu - mu) / 2.0);
    let (e0, e1, e2) = ((nu - mu) / 2.0, -(1.0 + nu) / 2.0, mu / 2.0);
    let integrand = move |n: Node| {
        let (t, xm, z, zc) = z1(n, x, y);
        Ok(pw(t, e0) * pw(xm, e1) * pw(y + t, e2) * f.eval_with_complement(z, zc)?)
    };
    Piece::new(0.0, x, Box::new(integrand))
        .exponents(e0.re, with_pfaff_growth(e1.re, a, b))
        .coefficient(coef)
        .laplace(pt.p)
}

/// `t^{(ν−1)/2} (t−x)^{−(1+μ+ν)/2} (y−x+t)^{(μ−1)/2} F((1−μ)/2, (1−ν)/2; 3/2; Z₂)` on `(x, ∞)`.
fn second_difference_piece(pt: &ParamPoint, coef: C) -> Piece {
    let (mu, nu, x, y) = (pt.mu(), pt.nu(), pt.x, pt.y);
    let (a, b, c) = ((1.0 - mu) / 2.0, (1.0 - nu) / 2.0, re(1.5));
    let f = Gauss2F1::new(a, b, c);
    let (e0, e1, e2) = ((nu - 1.0) / 2.0, -(1.0 + mu + nu) / 2.0, (mu - 1.0) / 2.0);
    let integrand = move |n: Node| {
        let (t, g, z, zc) = z2(n, x, y);
        Ok(pw(t, e0) * pw(g, e1) * pw(y + g, e2) * f.eval_with_complement(z, zc)?)
    };
    Piece::new(x, f64::INFINITY, Box::new(integrand))
        .exponents(with_unit_argument(e1.re, a, b, c), 0.0)
        .coefficient(coef)
        .laplace(pt.p)
}

/// `t^{ν/2} (t−x)^{−(1+μ+ν)/2} (y−x+t)^{μ/2} F(−μ/2, −ν/2; 1/2; Z₂)` on `(x, ∞)`.
fn second_sum_piece(pt: &ParamPoint, coef: C) -> Piece {
    let (mu, nu, x, y) = (pt.mu(), pt.nu(), pt.x, pt.y);
    let (a, b, c) = (-mu / 2.0, -nu / 2.0, re(0.5));
    let f = Gauss2F1::new(a, b, c);
    let (e0, e1, e2) = (nu / 2.0, -(1.0 + mu + nu) / 2.0, mu / 2.0);
    let integrand = move |n: Node| {
        let (t, g, z, zc) = z2(n, x, y);
        Ok(pw(t, e0) * pw(g, e1) * pw(y + g, e2) * f.eval_with_complement(z, zc)?)
    };
    Piece::new(x, f64::INFINITY, Box::new(integrand))
        .exponents(with_unit_argument(e1.re, a, b, c), 0.0)
        .coefficient(coef)
        .laplace(pt.p)
}

fn difference_first_coef(pt: &ParamPoint) -> C {
    let (mu, nu) = (pt.mu(), pt.nu());
    pw(2.0, (mu - nu) / 2.0) * PI.sqrt() * rg(1.0 + (nu - mu) / 2.0) * rg(-nu)
}

fn arg(v: f64, p: f64) -> f64 {
    (2.0 * v * p).sqrt()
}

// --- difference of reflected arguments, with p^{-1/2} ---

fn diff_half_lhs(pt: &ParamPoint) -> Result<C> {
    let (mu, nu, x, y, p) = (pt.mu(), pt.nu(), pt.x, pt.y, pt.p);
    let dn = d(nu, -arg(x, p))? - d(nu, arg(x, p))?;
    Ok(p.powf(-0.5) * (p * (y - x) / 2.0).exp() * d(mu, arg(y, p))? * dn)
}

fn diff_half_rhs(pt: &ParamPoint) -> Result<Vec<Piece>> {
    let (mu, nu, x, y) = (pt.mu(), pt.nu(), pt.x, pt.y);
    let c2 = pw(2.0, 2.0 + (mu + nu) / 2.0) * (PI * x * y).sqrt() * rg(-mu / 2.0) * rg(-nu / 2.0);
    Ok(vec![first_difference_piece(pt, difference_first_coef(pt)), second_difference_piece(pt, c2)])
}

// --- Kummer intermediate of the difference transform ---

fn diff_kummer_lhs(pt: &ParamPoint) -> Result<C> {
    let (mu, nu, x, y, p) = (pt.mu(), pt.nu(), pt.x, pt.y, pt.p);
    let phi = kummer_phi((1.0 - nu) / 2.0, re(1.5), re(p * x))?;
    Ok((p * y / 2.0 - p * x).exp() * d(mu, arg(y, p))? * phi)
}

fn diff_kummer_rhs(pt: &ParamPoint) -> Result<Vec<Piece>> {
    let (mu, nu, x, y) = (pt.mu(), pt.nu(), pt.x, pt.y);
    let c1 = pw(2.0, mu / 2.0 - 1.0) * (PI / x).sqrt() * rg(1.0 + (nu - mu) / 2.0) * rg((1.0 - nu) / 2.0);
    let c2 = pw(2.0, mu / 2.0) * y.sqrt() * rg(-mu / 2.0);
    Ok(vec![first_difference_piece(pt, c1), second_difference_piece(pt, c2)])
}

// --- difference without p^{-1/2} ---

/// The first original behaves like `t^{(ν−μ−1)/2}/Γ((1−μ+ν)/2)` at `t = 0`,
/// which is integrable only for `Re(ν − μ) > −1`. At `ν − μ = −1` the
/// integral still converges but loses the point mass that the family
/// concentrates at `t = 0` as `ν − μ ↓ −1`.
fn diff_valid(pt: &ParamPoint) -> std::result::Result<(), String> {
    convolution_valid(pt)?;
    // At Re(nu - mu) = -1 the first original degenerates into a point mass at
    // t = 0; below that it would need a finite-part integral.
    need((pt.nu() - pt.mu()).re >= -1.0, "Re(nu - mu) >= -1 (the first original is a measure at t = 0 below that)")
}

fn diff_lhs(pt: &ParamPoint) -> Result<C> {
    Ok(diff_half_lhs(pt)? * pt.p.sqrt())
}

fn diff_rhs(pt: &ParamPoint) -> Result<Vec<Piece>> {
    let (mu, nu, x, y, p) = (pt.mu(), pt.nu(), pt.x, pt.y, pt.p);

    let (a1, b1, c1) = (-(1.0 + mu) / 2.0, (1.0 + nu) / 2.0, (1.0 - mu + nu) / 2.0);
    let (a2, c2) = ((1.0 - mu) / 2.0, (3.0 - mu + nu) / 2.0);
    let r1 = RegularizedGauss2F1::new(a1, b1, c1);
    let r2 = RegularizedGauss2F1::new(a2, b1, c2);
    let (e0, e1, e2) = (-(1.0 + mu - nu) / 2.0, -(1.0 + nu) / 2.0, (1.0 + mu) / 2.0);
    let first = move |n: Node| {
        let (t, xm, z, zc) = z1(n, x, y);
        let bracket = r1.eval_with_complement(z, zc)? + mu * t / (2.0 * (y + t)) * r2.eval_with_complement(z, zc)?;
        Ok(pw(t, e0) * pw(xm, e1) * pw(y + t, e2) * bracket)
    };
    let lower = (e0.re + regularized_order(c1)).min(e0.re + 1.0 + regularized_order(c2));
    let upper = with_pfaff_growth(e1.re, a1, b1).min(with_pfaff_growth(e1.re, a2, b1));
    let coef1 = pw(2.0, (mu - nu) / 2.0) * (PI / y).sqrt() * rg(-nu);

    let (fa1, fb, fc) = (-mu / 2.0, (1.0 - nu) / 2.0, re(1.5));
    let fa2 = (2.0 - mu) / 2.0;
    let f1 = Gauss2F1::new(fa1, fb, fc);
    let f2 = Gauss2F1::new(fa2, fb, fc);
    let (g1, g2) = (rg(-(1.0 + mu) / 2.0), rg((1.0 - mu) / 2.0));
    let (h0, h1, h2) = ((nu - 1.0) / 2.0, -(2.0 + mu + nu) / 2.0, mu / 2.0);
    let second = move |n: Node| {
        let (t, g, z, zc) = z2(n, x, y);
        let bracket =
            g1 * f1.eval_with_complement(z, zc)? + mu * g / (2.0 * (y + g)) * g2 * f2.eval_with_complement(z, zc)?;
        Ok(pw(t, h0) * pw(g, h1) * pw(y + g, h2) * bracket)
    };
    let lower2 = with_unit_argument(h1.re, fa1, fb, fc).min(with_unit_argument(h1.re + 1.0, fa2, fb, fc));
    let coef2 = pw(2.0, (4.0 + mu + nu) / 2.0) * (PI * x).sqrt() * rg(-nu / 2.0);

    let mut pieces = vec![
        Piece::new(0.0, x, Box::new(first)).exponents(lower, upper).coefficient(coef1).laplace(p),
        Piece::new(x, f64::INFINITY, Box::new(second)).exponents(lower2, 0.0).coefficient(coef2).laplace(p),
    ];
    if regularized_order(c1) == 1.0 {
        // c1 = 0: t^{c1-1}/Γ(c1) tends to δ(t), leaving x^{-(1+ν)/2} y^{(1+μ)/2}.
        let atom = move |_: Node| Ok(pw(x, e1) * pw(y, e2));
        pieces.push(Piece::point_mass(0.0, Box::new(atom)).coefficient(coef1).laplace(p));
    }
    Ok(pieces)
}

// --- sum of reflected arguments, with p^{-1/2} ---

fn sum_half_lhs(pt: &ParamPoint) -> Result<C> {
    let (mu, nu, x, y, p) = (pt.mu(), pt.nu(), pt.x, pt.y, pt.p);
    let dn = d(nu, -arg(x, p))? + d(nu, arg(x, p))?;
    Ok(p.powf(-0.5) * (p * (y - x) / 2.0).exp() * d(mu, arg(y, p))? * dn)
}

fn sum_half_rhs(pt: &ParamPoint) -> Result<Vec<Piece>> {
    let (mu, nu) = (pt.mu(), pt.nu());
    let c2 = pw(2.0, 1.0 + (mu + nu) / 2.0) * PI.sqrt() * rg((1.0 - nu) / 2.0) * rg((1.0 - mu) / 2.0);
    Ok(vec![first_difference_piece(pt, difference_first_coef(pt)), second_sum_piece(pt, c2)])
}

// --- Kummer intermediate of the sum transform ---

fn sum_kummer_valid(pt: &ParamPoint) -> std::result::Result<(), String> {
    convolution_valid(pt)?;
    need(pt.nu().re < 0.0, "Re nu < 0")
}

fn sum_kummer_lhs(pt: &ParamPoint) -> Result<C> {
    let (mu, nu, x, y, p) = (pt.mu(), pt.nu(), pt.x, pt.y, pt.p);
    let phi = kummer_phi(-nu / 2.0, re(0.5), re(p * x))?;
    Ok(p.powf(-0.5) * (p * y / 2.0 - p * x).exp() * d(mu, arg(y, p))? * phi)
}

fn sum_kummer_rhs(pt: &ParamPoint) -> Result<Vec<Piece>> {
    let (mu, nu, x, y, p) = (pt.mu(), pt.nu(), pt.x, pt.y, pt.p);
    let (a, b) = ((1.0 - mu) / 2.0, 1.0 + nu / 2.0);
    let f = Gauss2F1::new(a, b, 1.0 + (nu - mu) / 2.0);
    let (e0, e1, e2) = ((nu - mu) / 2.0, -1.0 - nu / 2.0, (mu - 1.0) / 2.0);
    let first = move |n: Node| {
        let (t, xm, z, zc) = z1(n, x, y);
        Ok(pw(t, e0) * pw(xm, e1) * pw(y + t, e2) * f.eval_with_complement(z, zc)?)
    };
    let c1 = pw(2.0, mu / 2.0) * (PI * x * y).sqrt() * rg(1.0 + (nu - mu) / 2.0) * rg(-nu / 2.0);
    let c2 = pw(2.0, mu / 2.0) * rg((1.0 - mu) / 2.0);
    Ok(vec![
        Piece::new(0.0, x, Box::new(first)).exponents(e0.re, with_pfaff_growth(e1.re, a, b)).coefficient(c1).laplace(p),
        second_sum_piece(pt, c2),
    ])
}

// --- reflected argument on one factor only ---

fn neg_half_lhs(pt: &ParamPoint) -> Result<C> {
    let (mu, nu, x, y, p) = (pt.mu(), pt.nu(), pt.x, pt.y, pt.p);
    Ok(p.powf(-0.5) * (p * (y - x) / 2.0).exp() * d(mu, arg(y, p))? * d(nu, -arg(x, p))?)
}

fn neg_half_rhs(pt: &ParamPoint) -> Result<Vec<Piece>> {
    let (mu, nu, x, y, p) = (pt.mu(), pt.nu(), pt.x, pt.y, pt.p);
    let common = pw(2.0, 1.0 + (mu + nu) / 2.0) * (PI * x * y).sqrt();
    let ca = common * rg(-mu / 2.0) * rg(-nu / 2.0);
    let cb = common * rg((1.0 - mu) / 2.0) * rg((1.0 - nu) / 2.0);
    let (a1, b1, c) = ((1.0 - mu) / 2.0, (1.0 - nu) / 2.0, re(1.5));
    let (a2, b2, c2) = (-mu / 2.0, -nu / 2.0, re(0.5));
    let fa = Gauss2F1::new(a1, b1, c);
    let fb = Gauss2F1::new(a2, b2, c2);
    let (e0, e1, e2) = ((nu - 1.0) / 2.0, -(1.0 + mu + nu) / 2.0, (mu - 1.0) / 2.0);
    let second = move |n: Node| {
        let (t, g, z, zc) = z2(n, x, y);
        let root = (t * (y + g) / (4.0 * x * y)).sqrt();
        let bracket = ca * fa.eval_with_complement(z, zc)? + cb * root * fb.eval_with_complement(z, zc)?;
        Ok(pw(t, e0) * pw(g, e1) * pw(y + g, e2) * bracket)
    };
    let lower = with_unit_argument(e1.re, a1, b1, c).min(with_unit_argument(e1.re, a2, b2, c2));
    Ok(vec![
        first_difference_piece(pt, difference_first_coef(pt)),
        Piece::new(x, f64::INFINITY, Box::new(second)).exponents(lower, 0.0).laplace(p),
    ])
}

// --- single function of reflected argument ---

fn single_grid() -> Vec<ParamPoint> {
    grid(&[0.0], &[-1.5, -1.0, -0.5, 0.25, 0.5], &[0.5, 1.0, 2.0], &[0.0], &[0.5, 1.0, 3.0])
}

fn single_valid(pt: &ParamPoint) -> std::result::Result<(), String> {
    need(pt.nu().re < 1.0, "Re nu < 1")?;
    need(pt.x > 0.0, "x > 0")?;
    need(pt.p > 0.0, "p > 0")
}

fn single_lhs(pt: &ParamPoint) -> Result<C> {
    let (nu, x, p) = (pt.nu(), pt.x, pt.p);
    Ok(p.powf(-0.5) * (-p * x / 2.0).exp() * d(nu, -arg(x, p))?)
}

fn single_rhs(pt: &ParamPoint) -> Result<Vec<Piece>> {
    let (nu, x, p) = (pt.nu(), pt.x, pt.p);
    let c1 = pw(2.0, -nu / 2.0) * PI.sqrt() * rg(-nu) * rg(1.0 + nu / 2.0);
    let c2 = pw(2.0, nu / 2.0) * rg((1.0 - nu) / 2.0);
    let (e0, e1) = (nu / 2.0, -(1.0 + nu) / 2.0);
    let inner = move |n: Node| Ok(pw(n.from_lower, e0) * pw(n.to_upper, e1));
    let outer = move |n: Node| Ok(pw(x + n.from_lower, e0) * pw(n.from_lower, e1));
    Ok(vec![
        Piece::new(0.0, x, Box::new(inner)).exponents(e0.re, e1.re).coefficient(c1).laplace(p),
        Piece::new(x, f64::INFINITY, Box::new(outer)).exponents(e1.re, 0.0).coefficient(c2).laplace(p),
    ])
}

// --- both arguments positive ---

fn positive_valid(pt: &ParamPoint) -> std::result::Result<(), String> {
    need(pt.orders.sum_below(1.0), "Re(mu + nu) < 1")?;
    need(pt.x >= 0.0 && pt.y >= 0.0, "x >= 0 and y >= 0")?;
    need(pt.p > 0.0, "p > 0")
}

fn pos_half_lhs(pt: &ParamPoint) -> Result<C> {
    let (mu, nu, x, y, p) = (pt.mu(), pt.nu(), pt.x, pt.y, pt.p);
    Ok(p.powf(-0.5) * (p * (x + y) / 2.0).exp() * d(mu, arg(y, p))? * d(nu, arg(x, p))?)
}

fn pos_half_rhs(pt: &ParamPoint) -> Result<Vec<Piece>> {
    let (mu, nu, x, y, p) = (pt.mu(), pt.nu(), pt.x, pt.y, pt.p);
    let f = Gauss2F1::new(-mu / 2.0, -nu / 2.0, (1.0 - mu - nu) / 2.0);
    let e0 = -(1.0 + mu + nu) / 2.0;
    let integrand = move |n: Node| {
        let t = n.t;
        let (z, zc) = z3(t, x, y);
        Ok(pw(t, e0) * pw(y + t, mu / 2.0) * pw(x + t, nu / 2.0) * f.eval_with_complement(z, zc)?)
    };
    let coef = pw(2.0, (mu + nu) / 2.0) * rg((1.0 - mu - nu) / 2.0);
    Ok(vec![Piece::new(0.0, f64::INFINITY, Box::new(integrand)).exponents(e0.re, 0.0).coefficient(coef).laplace(p)])
}

fn pos_valid(pt: &ParamPoint) -> std::result::Result<(), String> {
    need(pt.orders.sum_below(0.0), "Re(mu + nu) < 0 (integrability of the original at t = 0)")?;
    positive_xyp(pt)
}

fn pos_lhs(pt: &ParamPoint) -> Result<C> {
    let (mu, nu, x, y, p) = (pt.mu(), pt.nu(), pt.x, pt.y, pt.p);
    Ok((p * (x + y) / 2.0).exp() * d(mu, arg(y, p))? * d(nu, arg(x, p))?)
}

fn pos_rhs(pt: &ParamPoint) -> Result<Vec<Piece>> {
    let (mu, nu, x, y, p) = (pt.mu(), pt.nu(), pt.x, pt.y, pt.p);
    let s = mu + nu;
    let f1 = Gauss2F1::new(-mu / 2.0, -(1.0 + nu) / 2.0, -s / 2.0);
    let f2 = Gauss2F1::new(-mu / 2.0, (1.0 - nu) / 2.0, 1.0 - s / 2.0);
    let (g1, g2) = (rg(-s / 2.0), rg(1.0 - s / 2.0));
    let e0 = -1.0 - s / 2.0;
    let integrand = move |n: Node| {
        let t = n.t;
        let (z, zc) = z3(t, x, y);
        let bracket =
            g1 * f1.eval_with_complement(z, zc)? + nu * t / (2.0 * (x + t)) * g2 * f2.eval_with_complement(z, zc)?;
        Ok(pw(t, e0) * pw(y + t, mu / 2.0) * pw(x + t, (1.0 + nu) / 2.0) * bracket)
    };
    let coef = pw(2.0, s / 2.0) / x.sqrt();
    Ok(vec![Piece::new(0.0, f64::INFINITY, Box::new(integrand)).exponents(e0.re, 0.0).coefficient(coef).laplace(p)])
}

pub(super) fn cases() -> Vec<IdentityCase> {
    let case = |id, summary, validity, lhs, rhs| IdentityCase {
        id,
        kind: Kind::LaplacePair,
        summary,
        roles: "mu = μ, nu = ν, x = x, y = y, p = p",
        tolerance: Kind::LaplacePair.default_tolerance(),
        expectation: Expectation::Holds,
        validity,
        lhs,
        rhs: Rhs::Pieces(rhs),
        scale: None,
        default_grid: theorem_grid,
    };
    vec![
        case(
            "T31-DIFF-HALF",
            "p^{−1/2} e^{p(y−x)/2} D_μ(√(2yp)) [D_ν(−√(2xp)) − D_ν(√(2xp))] as a two-piece original over (0, x) and (x, ∞)",
            convolution_valid,
            diff_half_lhs,
            diff_half_rhs,
        ),
        case(
            "T31-KUMMER",
            "e^{py/2−px} D_μ(√(2yp)) Φ((1−ν)/2; 3/2; px) as a two-piece original",
            convolution_valid,
            diff_kummer_lhs,
            diff_kummer_rhs,
        ),
        IdentityCase {
            default_grid: theorem_grid,
            ..case(
                "T32-DIFF",
                "e^{p(y−x)/2} D_μ(√(2yp)) [D_ν(−√(2xp)) − D_ν(√(2xp))] as a two-piece original with regularized ₂F₁",
                diff_valid,
                diff_lhs,
                diff_rhs,
            )
        },
        case(
            "T33-SUM-HALF",
            "p^{−1/2} e^{p(y−x)/2} D_μ(√(2yp)) [D_ν(−√(2xp)) + D_ν(√(2xp))] as a two-piece original",
            convolution_valid,
            sum_half_lhs,
            sum_half_rhs,
        ),
        case(
            "T33-KUMMER",
            "p^{−1/2} e^{py/2−px} D_μ(√(2yp)) Φ(−ν/2; 1/2; px) as a two-piece original",
            sum_kummer_valid,
            sum_kummer_lhs,
            sum_kummer_rhs,
        ),
        case(
            "T34-NEG-HALF",
            "p^{−1/2} e^{p(y−x)/2} D_μ(√(2yp)) D_ν(−√(2xp)) as a two-piece original",
            convolution_valid,
            neg_half_lhs,
            neg_half_rhs,
        ),
        IdentityCase {
            roles: "nu = ν, x = x, p = p",
            default_grid: single_grid,
            ..case(
                "C341-SINGLE",
                "p^{−1/2} e^{−px/2} D_ν(−√(2xp)) as a two-piece original",
                single_valid,
                single_lhs,
                single_rhs,
            )
        },
        case(
            "T35-POS-HALF",
            "p^{−1/2} e^{p(x+y)/2} D_μ(√(2yp)) D_ν(√(2xp)) as an original on (0, ∞)",
            positive_valid,
            pos_half_lhs,
            pos_half_rhs,
        ),
        case(
            "T36-POS",
            "e^{p(x+y)/2} D_μ(√(2yp)) D_ν(√(2xp)) as an original on (0, ∞)",
            pos_valid,
            pos_lhs,
            pos_rhs,
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{integrate_piece, relative_error};

    fn rhs_value(pieces: Vec<Piece>) -> C {
        pieces.iter().map(|p| p.coefficient * integrate_piece(p, 1e-12).unwrap().0).sum()
    }

    /// At `ν − μ = −1` the integral over `(0, x)` alone misses the point
    /// mass at `t = 0`, which is `coef · x^{−(1+ν)/2} y^{(1+μ)/2}`.
    #[test]
    fn difference_transform_point_mass_at_unit_gap() {
        for (x, y, p) in [(0.5, 0.5, 0.5), (1.0, 2.0, 3.0)] {
            let pt = ParamPoint::new(-0.5, -1.5, x, y, p);
            assert!(diff_valid(&pt).is_ok());
            let (mu, nu) = (pt.mu(), pt.nu());
            let lhs = diff_lhs(&pt).unwrap();
            let mut pieces = diff_rhs(&pt).unwrap();
            assert_eq!(pieces.len(), 3);
            let atom = pieces.pop().unwrap();
            let coef = pw(2.0, (mu - nu) / 2.0) * (PI / y).sqrt() * rg(-nu);
            let boundary = coef * pw(x, -(1.0 + nu) / 2.0) * pw(y, (1.0 + mu) / 2.0);
            let (v, _) = integrate_piece(&atom, 1e-12).unwrap();
            assert!(relative_error(atom.coefficient * v, boundary, 0.0) < 1e-15);
            let continuous = rhs_value(pieces);
            assert!(relative_error(lhs, continuous, 0.0) > 0.1);
            assert!(relative_error(lhs, continuous + boundary, 0.0) < 1e-10, "{lhs} vs {}", continuous + boundary);
        }
    }

    #[test]
    fn negative_argument_image_is_mean_of_difference_and_sum() {
        for pt in theorem_grid().iter().step_by(7) {
            let neg = neg_half_lhs(pt).unwrap();
            let mean = (diff_half_lhs(pt).unwrap() + sum_half_lhs(pt).unwrap()) / 2.0;
            assert!((neg - mean).norm() <= 1e-12 * neg.norm().max(mean.norm()), "{pt:?}");
        }
    }

    #[test]
    fn positive_images_are_symmetric_under_swap() {
        for pt in theorem_grid().iter().step_by(5) {
            let swapped = ParamPoint::new(pt.nu().re, pt.mu().re, pt.y, pt.x, pt.p);
            for f in [pos_half_lhs as fn(&ParamPoint) -> Result<C>, pos_lhs] {
                let (u, v) = (f(pt).unwrap(), f(&swapped).unwrap());
                assert!(relative_error(u, v, 0.0) <= 1e-12, "{pt:?}");
            }
        }
    }
}
