//! Products of error functions: Laplace pairs at orders −1 and the integral
//! representations obtained from them at p = 1.

use std::f64::consts::PI;

use super::{need, re, C};
use crate::catalog::{grid, Expectation, IdentityCase, Kind, ParamPoint, Piece, Rhs};
use crate::error::Result;
use crate::quad::Node;
use crate::special::{erf, erfc};

const ARGS: [f64; 4] = [0.25, 0.5, 1.0, 2.0];

fn laplace_grid() -> Vec<ParamPoint> {
    grid(&[-1.0], &[-1.0], &ARGS, &ARGS, &[0.5, 1.0, 3.0])
}

/// `a = √y`, `b = √x` over all pairs of [`ARGS`].
fn ab_grid() -> Vec<ParamPoint> {
    let sq: Vec<f64> = ARGS.iter().map(|v| v * v).collect();
    grid(&[-1.0], &[-1.0], &sq, &sq, &[1.0])
}

/// `a = b` over [`ARGS`].
fn diagonal_grid() -> Vec<ParamPoint> {
    ARGS.iter().map(|v| ParamPoint::new(-1.0, -1.0, v * v, v * v, 1.0)).collect()
}

fn mix_valid(pt: &ParamPoint) -> std::result::Result<(), String> {
    need(pt.y > 0.0, "y > 0")?;
    need(pt.x >= 0.0, "x >= 0")?;
    need(pt.p > 0.0, "p > 0")
}

fn mix_lhs(pt: &ParamPoint) -> Result<C> {
    let (x, y, p) = (pt.x, pt.y, pt.p);
    Ok(re((p * y).exp() * erfc((y * p).sqrt()) * erf((x * p).sqrt())))
}

fn mix_rhs(pt: &ParamPoint) -> Result<Vec<Piece>> {
    let (x, y, p) = (pt.x, pt.y, pt.p);
    let inner = move |n: Node| Ok(re(y.sqrt() / (n.t.sqrt() * (y + n.t))));
    let outer = move |n: Node| {
        let g = n.from_lower;
        Ok(re(x.sqrt() / ((y + g).sqrt() * (x + y + g))))
    };
    Ok(vec![
        Piece::new(0.0, x, Box::new(inner)).exponents(-0.5, 0.0).coefficient(re(1.0 / PI)).laplace(p),
        Piece::new(x, f64::INFINITY, Box::new(outer)).coefficient(re(-1.0 / PI)).laplace(p),
    ])
}

fn two_valid(pt: &ParamPoint) -> std::result::Result<(), String> {
    need(pt.x >= 0.0 && pt.y >= 0.0, "x >= 0 and y >= 0")?;
    need(pt.x + pt.y > 0.0, "x + y > 0")?;
    need(pt.p > 0.0, "p > 0")
}

fn two_lhs(pt: &ParamPoint) -> Result<C> {
    let (x, y, p) = (pt.x, pt.y, pt.p);
    Ok(re((p * (x + y)).exp() * erfc((y * p).sqrt()) * erfc((x * p).sqrt())))
}

fn two_rhs(pt: &ParamPoint) -> Result<Vec<Piece>> {
    let (x, y, p) = (pt.x, pt.y, pt.p);
    let f = move |n: Node| {
        let t = n.t;
        let num = x.sqrt() * (x + t).sqrt() + y.sqrt() * (y + t).sqrt();
        Ok(re(num / ((x + y + t) * ((x + t) * (y + t)).sqrt())))
    };
    let lower = if x == 0.0 || y == 0.0 { -0.5 } else { 0.0 };
    Ok(vec![Piece::new(0.0, f64::INFINITY, Box::new(f)).exponents(lower, 0.0).coefficient(re(1.0 / PI)).laplace(p)])
}

fn rep1_valid(pt: &ParamPoint) -> std::result::Result<(), String> {
    need(pt.a() > 0.0, "a > 0")?;
    need(pt.b() >= 0.0, "b >= 0")
}

fn rep1_lhs(pt: &ParamPoint) -> Result<C> {
    Ok(re(erfc(pt.a()) * erf(pt.b())))
}

fn rep1_rhs(pt: &ParamPoint) -> Result<Vec<Piece>> {
    let (a2, b2) = (pt.y, pt.x);
    let (a, b) = (pt.a(), pt.b());
    let inner = move |n: Node| Ok(re(1.0 / ((n.t + a2) * n.t.sqrt())));
    let outer = move |n: Node| Ok(re(1.0 / ((n.t + a2 + b2) * (n.t + a2).sqrt())));
    Ok(vec![
        Piece::new(0.0, b2, Box::new(inner)).exponents(-0.5, 0.0).coefficient(re(a * (-a2).exp() / PI)).laplace(1.0),
        Piece::new(0.0, f64::INFINITY, Box::new(outer)).coefficient(re(-b * (-a2 - b2).exp() / PI)).laplace(1.0),
    ])
}

fn rep2_valid(pt: &ParamPoint) -> std::result::Result<(), String> {
    need(pt.a() >= 0.0 && pt.b() >= 0.0, "a >= 0 and b >= 0")?;
    need(pt.a() + pt.b() > 0.0, "a + b > 0")
}

fn rep2_lhs(pt: &ParamPoint) -> Result<C> {
    Ok(re(erfc(pt.a()) * erfc(pt.b())))
}

fn rep2_rhs(pt: &ParamPoint) -> Result<Vec<Piece>> {
    let (a2, b2) = (pt.y, pt.x);
    let (a, b) = (pt.a(), pt.b());
    let f = move |n: Node| {
        let t = n.t;
        let num = a * (t + a2).sqrt() + b * (t + b2).sqrt();
        Ok(re(num / ((t + a2 + b2) * ((t + a2) * (t + b2)).sqrt())))
    };
    let lower = if a == 0.0 || b == 0.0 { -0.5 } else { 0.0 };
    Ok(vec![Piece::new(0.0, f64::INFINITY, Box::new(f))
        .exponents(lower, 0.0)
        .coefficient(re((-a2 - b2).exp() / PI))
        .laplace(1.0)])
}

fn single_valid(pt: &ParamPoint) -> std::result::Result<(), String> {
    need(pt.b() > 0.0, "b > 0")
}

fn single_lhs(pt: &ParamPoint) -> Result<C> {
    Ok(re(erfc(pt.b())))
}

fn single_rhs(pt: &ParamPoint) -> Result<Vec<Piece>> {
    let (b, b2) = (pt.b(), pt.x);
    let f = move |n: Node| Ok(re(1.0 / ((n.t + b2) * n.t.sqrt())));
    Ok(vec![Piece::new(0.0, f64::INFINITY, Box::new(f))
        .exponents(-0.5, 0.0)
        .coefficient(re(b * (-b2).exp() / PI))
        .laplace(1.0)])
}

fn one_minus_valid(pt: &ParamPoint) -> std::result::Result<(), String> {
    need(pt.a() > 0.0 && pt.b() > 0.0, "a > 0 and b > 0")
}

/// `1 − erf(a) erf(b) = A + B − AB` with `A = erfc(a)`, `B = erfc(b)`.
fn one_minus_lhs(pt: &ParamPoint) -> Result<C> {
    let (ca, cb) = (erfc(pt.a()), erfc(pt.b()));
    Ok(re(ca + cb - ca * cb))
}

fn one_minus_rhs(pt: &ParamPoint) -> Result<Vec<Piece>> {
    let (a2, b2) = (pt.y, pt.x);
    let (a, b) = (pt.a(), pt.b());
    let ea = (-a2).exp();
    let outer = move |n: Node| {
        let t = n.t;
        Ok(re(1.0 / ((t + b2) * t.sqrt()) - ea / ((t + a2 + b2) * (t + a2).sqrt())))
    };
    let inner = move |n: Node| Ok(re(1.0 / ((n.t + a2) * n.t.sqrt())));
    Ok(vec![
        Piece::new(0.0, f64::INFINITY, Box::new(outer))
            .exponents(-0.5, 0.0)
            .coefficient(re(b * (-b2).exp() / PI))
            .laplace(1.0),
        Piece::new(0.0, b2, Box::new(inner)).exponents(-0.5, 0.0).coefficient(re(a * ea / PI)).laplace(1.0),
    ])
}

fn diagonal_valid(pt: &ParamPoint) -> std::result::Result<(), String> {
    need(pt.a() >= 0.0, "a >= 0")
}

fn diagonal_lhs(pt: &ParamPoint) -> Result<C> {
    let ca = erfc(pt.a());
    Ok(re(ca * (2.0 - ca)))
}

fn diagonal_rhs(pt: &ParamPoint) -> Result<Vec<Piece>> {
    let a2 = pt.y;
    let f = move |n: Node| Ok(re((-a2 * n.t * n.t).exp() / (n.t * n.t + 1.0)));
    Ok(vec![Piece::new(0.0, 1.0, Box::new(f)).coefficient(re(4.0 / PI * (-a2).exp()))])
}

pub(super) fn cases() -> Vec<IdentityCase> {
    let direct = |id, summary, validity, lhs, rhs| IdentityCase {
        id,
        kind: Kind::DirectIntegral,
        summary,
        roles: "y = a², x = b² (a = √y, b = √x)",
        tolerance: Kind::DirectIntegral.default_tolerance(),
        expectation: Expectation::Holds,
        validity,
        lhs,
        rhs: Rhs::Pieces(rhs),
        scale: None,
        default_grid: ab_grid,
    };
    vec![
        IdentityCase {
            id: "C321-ERF-MIX",
            kind: Kind::LaplacePair,
            summary: "e^{py} erfc(√(yp)) erf(√(xp)) as a two-piece original with algebraic integrands",
            roles: "x = x, y = y, p = p",
            tolerance: Kind::LaplacePair.default_tolerance(),
            expectation: Expectation::Holds,
            validity: mix_valid,
            lhs: mix_lhs,
            rhs: Rhs::Pieces(mix_rhs),
            scale: None,
            default_grid: laplace_grid,
        },
        direct(
            "C321-REP",
            "erfc(a) erf(b) as a finite plus a semi-infinite integral of algebraic functions",
            rep1_valid,
            rep1_lhs,
            rep1_rhs,
        ),
        IdentityCase {
            id: "C361-ERFC2",
            kind: Kind::LaplacePair,
            summary: "e^{p(x+y)} erfc(√(yp)) erfc(√(xp)) as an original on (0, ∞)",
            roles: "x = x, y = y, p = p",
            tolerance: Kind::LaplacePair.default_tolerance(),
            expectation: Expectation::Holds,
            validity: two_valid,
            lhs: two_lhs,
            rhs: Rhs::Pieces(two_rhs),
            scale: None,
            default_grid: laplace_grid,
        },
        direct(
            "C361-REP",
            "erfc(a) erfc(b) as one semi-infinite integral of algebraic functions",
            rep2_valid,
            rep2_lhs,
            rep2_rhs,
        ),
        IdentityCase {
            roles: "x = b² (b = √x)",
            default_grid: || ARGS.iter().map(|v| ParamPoint::new(-1.0, -1.0, v * v, 0.0, 1.0)).collect(),
            ..direct(
                "C361-ERFC-SINGLE",
                "erfc(b) = (b/π) e^{−b²} ∫₀^∞ e^{−t} / ((t+b²)√t) dt",
                single_valid,
                single_lhs,
                single_rhs,
            )
        },
        direct(
            "C361-ONE-MINUS",
            "1 − erf(a) erf(b) as a semi-infinite plus a finite integral",
            one_minus_valid,
            one_minus_lhs,
            one_minus_rhs,
        ),
        IdentityCase {
            tolerance: 1e-10,
            roles: "y = a² (a = √y); x is set equal to y",
            default_grid: diagonal_grid,
            ..direct(
                "C361-NG69",
                "1 − erf(a)² = (4/π) e^{−a²} ∫₀¹ e^{−a²s²} / (s²+1) ds",
                diagonal_valid,
                diagonal_lhs,
                diagonal_rhs,
            )
        },
    ]
}
