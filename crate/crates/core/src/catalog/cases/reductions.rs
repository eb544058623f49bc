//! Function identities used by the derivations: reflection sums of D_ν,
//! its recurrence and special values, ₂F₁ transformations and contiguous
//! relations, and reductions of Appell's F₁.
//!
//! Hypergeometric cases map `a → mu`, `b → nu`, `c → y`, `z → x` unless
//! their `roles` say otherwise.

use std::f64::consts::PI;

use super::{d, need, pw, re, rg, C};
use crate::catalog::{Expectation, IdentityCase, Kind, ParamPoint, Piece, Rhs};
use crate::error::Result;
use crate::quad::Node;
use crate::special::{appell_f1, erfc, gamma, gauss_2f1, gauss_2f1_at_one, gauss_2f1_maclaurin, kummer_phi, Gauss2F1};

type Validity = std::result::Result<(), String>;

fn any(_: &ParamPoint) -> Validity {
    Ok(())
}

fn points(rows: &[(f64, f64, f64, f64, f64)]) -> Vec<ParamPoint> {
    rows.iter().map(|&(mu, nu, x, y, p)| ParamPoint::new(mu, nu, x, y, p)).collect()
}

/// `(ν, z)` pairs stored as `nu` and `x`.
fn order_argument_grid(nus: &[f64], zs: &[f64]) -> Vec<ParamPoint> {
    nus.iter().flat_map(|&nu| zs.iter().map(move |&z| ParamPoint::new(0.0, nu, z, 0.0, 0.0))).collect()
}

/// `(a, b, c)` triples crossed with `z` values.
fn abc_grid(abc: &[(f64, f64, f64)], zs: &[f64]) -> Vec<ParamPoint> {
    abc.iter().flat_map(|&(a, b, c)| zs.iter().map(move |&z| ParamPoint::new(a, b, z, c, 0.0))).collect()
}

fn abcz(pt: &ParamPoint) -> (C, C, C, f64) {
    (pt.mu(), pt.nu(), re(pt.y), pt.x)
}

fn pcf_argument_valid(pt: &ParamPoint) -> Validity {
    need(pt.x.abs() <= 40.0, "|z| <= 40")
}

const REFLECTION_ORDERS: [f64; 5] = [-1.5, -0.7, -0.5, 0.5, 1.5];
const REFLECTION_ARGS: [f64; 9] = [0.1, 0.5, 1.0, 1.3, 2.0, 3.0, 5.0, 7.0, 10.0];

fn reflection_valid(pt: &ParamPoint) -> Validity {
    need(pt.x > 0.0 && pt.x <= 40.0, "0 < z <= 40")
}

fn difference_lhs(pt: &ParamPoint) -> Result<C> {
    let (nu, z) = (pt.nu(), pt.x);
    Ok(d(nu, -z)? - d(nu, z)?)
}

fn difference_rhs(pt: &ParamPoint) -> Result<C> {
    let (nu, z) = (pt.nu(), pt.x);
    let phi = kummer_phi((1.0 - nu) / 2.0, re(1.5), re(z * z / 2.0))?;
    Ok(z * pw(2.0, (nu + 3.0) / 2.0) * PI.sqrt() * rg(-nu / 2.0) * (-z * z / 4.0).exp() * phi)
}

fn sum_lhs(pt: &ParamPoint) -> Result<C> {
    let (nu, z) = (pt.nu(), pt.x);
    Ok(d(nu, -z)? + d(nu, z)?)
}

fn sum_rhs(pt: &ParamPoint) -> Result<C> {
    let (nu, z) = (pt.nu(), pt.x);
    let phi = kummer_phi(-nu / 2.0, re(0.5), re(z * z / 2.0))?;
    Ok(pw(2.0, (nu + 2.0) / 2.0) * PI.sqrt() * rg((1.0 - nu) / 2.0) * (-z * z / 4.0).exp() * phi)
}

fn recurrence_terms(pt: &ParamPoint) -> Result<[C; 3]> {
    let (nu, z) = (pt.nu(), pt.x);
    Ok([z * d(nu, z)?, d(nu + 1.0, z)?, nu * d(nu - 1.0, z)?])
}

/// `z D_ν(z) − D_{ν+1}(z) − ν D_{ν−1}(z)`.
fn recurrence_lhs(pt: &ParamPoint) -> Result<C> {
    let [a, b, c] = recurrence_terms(pt)?;
    Ok(a - b - c)
}

fn recurrence_scale(pt: &ParamPoint) -> Result<f64> {
    Ok(recurrence_terms(pt)?.iter().map(|v| v.norm()).fold(0.0, f64::max))
}

fn zero(_: &ParamPoint) -> Result<C> {
    Ok(re(0.0))
}

fn erfc_lhs(pt: &ParamPoint) -> Result<C> {
    d(re(-1.0), pt.x)
}

fn erfc_rhs(pt: &ParamPoint) -> Result<C> {
    let z = pt.x;
    Ok(re((PI / 2.0).sqrt() * (z * z / 4.0).exp() * erfc(z / 2f64.sqrt())))
}

fn origin_lhs(pt: &ParamPoint) -> Result<C> {
    d(pt.mu(), 0.0)
}

fn origin_rhs(pt: &ParamPoint) -> Result<C> {
    let mu = pt.mu();
    Ok(pw(2.0, mu / 2.0) * PI.sqrt() * rg((1.0 - mu) / 2.0))
}

/// `erfc(−z) + erfc(z) − 2`.
fn reflect_lhs(pt: &ParamPoint) -> Result<C> {
    let z = pt.x;
    Ok(re(erfc(-z) + erfc(z) - 2.0))
}

/// Absolute check: the residual is measured against 1.
fn unit_scale(_: &ParamPoint) -> Result<f64> {
    Ok(1.0)
}

// --- Gauss hypergeometric ---

fn gauss_valid(pt: &ParamPoint) -> Validity {
    need(pt.x < 1.0, "z < 1")?;
    need(crate::special::nonpositive_integer(re(pt.y)).is_none(), "c not a nonpositive integer")
}

fn euler_lhs(pt: &ParamPoint) -> Result<C> {
    let (a, b, c, z) = abcz(pt);
    gauss_2f1(a, b, c, re(z))
}

fn euler_rhs(pt: &ParamPoint) -> Result<C> {
    let (a, b, c, z) = abcz(pt);
    Ok(pw(1.0 - z, c - a - b) * gauss_2f1(c - a, c - b, c, re(z))?)
}

fn pfaff_valid(pt: &ParamPoint) -> Validity {
    gauss_valid(pt)?;
    need(pt.x > -1.0 && pt.x < 0.0, "-1 < z < 0")
}

fn pfaff_lhs(pt: &ParamPoint) -> Result<C> {
    let (a, b, c, z) = abcz(pt);
    gauss_2f1_maclaurin(a, b, c, re(z))
}

fn pfaff_rhs(pt: &ParamPoint) -> Result<C> {
    let (a, b, c, z) = abcz(pt);
    Ok(pw(1.0 - z, -a) * gauss_2f1_maclaurin(a, c - b, c, re(z / (z - 1.0)))?)
}

fn connection_valid(pt: &ParamPoint) -> Validity {
    gauss_valid(pt)?;
    need(pt.x > 0.5, "1/2 < z < 1")
}

fn maclaurin_lhs(pt: &ParamPoint) -> Result<C> {
    let (a, b, c, z) = abcz(pt);
    gauss_2f1_maclaurin(a, b, c, re(z))
}

/// `a → mu`, `b → nu`, `c = a + b + 1/2`, `z → x`.
fn quadratic_c(pt: &ParamPoint) -> C {
    pt.mu() + pt.nu() + 0.5
}

fn quadratic_valid(pt: &ParamPoint) -> Validity {
    need(pt.x < 1.0, "z < 1")?;
    need(crate::special::nonpositive_integer(quadratic_c(pt)).is_none(), "a + b + 1/2 not a nonpositive integer")
}

fn quadratic_lhs(pt: &ParamPoint) -> Result<C> {
    gauss_2f1(pt.mu(), pt.nu(), quadratic_c(pt), re(pt.x))
}

fn quadratic_rhs(pt: &ParamPoint) -> Result<C> {
    let z = pt.x;
    let w = z / (2.0 * (1.0 + (1.0 - z).sqrt()));
    gauss_2f1(2.0 * pt.mu(), 2.0 * pt.nu(), quadratic_c(pt), re(w))
}

fn contiguous_terms(pt: &ParamPoint) -> Result<[C; 3]> {
    let (a, b, c, z) = abcz(pt);
    let zc = re(z);
    Ok([
        (a * c - c * c) * gauss_2f1(a - 1.0, b, c, zc)?,
        (c * c - a * c + c * (a - b) * z) * gauss_2f1(a, b, c, zc)?,
        a * (b - c) * z * gauss_2f1(a + 1.0, b, c + 1.0, zc)?,
    ])
}

fn contiguous_lhs(pt: &ParamPoint) -> Result<C> {
    let [u, v, w] = contiguous_terms(pt)?;
    Ok(u + v + w)
}

fn contiguous_scale(pt: &ParamPoint) -> Result<f64> {
    Ok(contiguous_terms(pt)?.iter().map(|v| v.norm()).fold(0.0, f64::max))
}

fn gauss_sum_valid(pt: &ParamPoint) -> Validity {
    let (a, b, c, _) = abcz(pt);
    need(c.re > b.re && b.re > 0.0, "Re c > Re b > 0")?;
    need((c - a - b).re > 0.0, "Re(c - a - b) > 0")
}

fn gauss_sum_lhs(pt: &ParamPoint) -> Result<C> {
    let (a, b, c, _) = abcz(pt);
    gauss_2f1_at_one(a, b, c)
}

/// Euler integral at unit argument.
fn gauss_sum_rhs(pt: &ParamPoint) -> Result<Vec<Piece>> {
    let (a, b, c, _) = abcz(pt);
    let (e0, e1) = (b - 1.0, c - a - b - 1.0);
    let f = move |n: Node| Ok(pw(n.from_lower, e0) * pw(n.to_upper, e1));
    let coef = gamma(c)? * rg(b) * rg(c - b);
    Ok(vec![Piece::new(0.0, 1.0, Box::new(f)).exponents(e0.re, e1.re).coefficient(coef)])
}

fn arcsin_valid(pt: &ParamPoint) -> Validity {
    need(pt.x >= 0.0 && pt.x < 1.0, "0 <= z < 1")
}

fn arcsin_lhs(pt: &ParamPoint) -> Result<C> {
    let a = pt.mu();
    gauss_2f1(a, 1.0 - a, re(0.5), re(pt.x))
}

fn arcsin_rhs(pt: &ParamPoint) -> Result<C> {
    let (a, z) = (pt.mu(), pt.x);
    Ok(((2.0 * a - 1.0) * z.sqrt().asin()).cos() / (1.0 - z).sqrt())
}

fn unit_valid(pt: &ParamPoint) -> Validity {
    need(pt.x < 1.0, "z < 1")
}

fn reciprocal_lhs(pt: &ParamPoint) -> Result<C> {
    gauss_2f1(re(1.0), re(1.5), re(1.5), re(pt.x))
}

fn reciprocal_rhs(pt: &ParamPoint) -> Result<C> {
    Ok(re(1.0 / (1.0 - pt.x)))
}

fn root_lhs(pt: &ParamPoint) -> Result<C> {
    gauss_2f1(re(1.0), re(0.5), re(2.0), re(pt.x))
}

fn root_rhs(pt: &ParamPoint) -> Result<C> {
    Ok(re(2.0 / (1.0 + (1.0 - pt.x).sqrt())))
}

// --- Appell F1: a → mu, b1 → nu, b2 → p, z1 → x, z2 → y ---

fn appell_reduction_valid(pt: &ParamPoint) -> Validity {
    let c = pt.nu().re + pt.p;
    need(c > pt.mu().re && pt.mu().re > 0.0, "b1 + b2 > a > 0")?;
    need(pt.x < 1.0 && pt.y < 1.0, "z1 < 1 and z2 < 1")
}

fn appell_reduction_lhs(pt: &ParamPoint) -> Result<C> {
    let (a, b1, b2) = (pt.mu(), pt.nu(), re(pt.p));
    appell_f1(a, b1, b2, b1 + b2, pt.x, pt.y)
}

fn appell_reduction_rhs(pt: &ParamPoint) -> Result<C> {
    let (a, b1, b2, z1, z2) = (pt.mu(), pt.nu(), re(pt.p), pt.x, pt.y);
    let f = Gauss2F1::new(a, b1, b1 + b2);
    Ok(pw(1.0 - z2, -a) * f.eval_with_complement((z1 - z2) / (1.0 - z2), (1.0 - z1) / (1.0 - z2))?)
}

/// `a → mu`, `b1 → nu`, `c → y`, `z1 → x`, `b2 → p`, `z2 = 0`.
fn appell_zero_valid(pt: &ParamPoint) -> Validity {
    need(pt.y > pt.mu().re && pt.mu().re > 0.0, "Re c > Re a > 0")?;
    need(pt.x < 1.0, "z1 < 1")
}

fn appell_zero_lhs(pt: &ParamPoint) -> Result<C> {
    appell_f1(pt.mu(), pt.nu(), re(pt.p), re(pt.y), pt.x, 0.0)
}

fn appell_zero_rhs(pt: &ParamPoint) -> Result<C> {
    gauss_2f1(pt.mu(), pt.nu(), re(pt.y), re(pt.x))
}

const GAUSS_TRIPLES: [(f64, f64, f64); 6] =
    [(0.3, 0.7, 1.9), (-0.4, 1.2, 2.5), (1.1, 0.6, 1.3), (0.5, 0.5, 1.0), (0.25, 0.75, 3.0), (1.5, 0.8, 1.3)];

pub(super) fn cases() -> Vec<IdentityCase> {
    let closed = |id, summary, roles, validity, lhs, rhs, default_grid| IdentityCase {
        id,
        kind: Kind::Reduction,
        summary,
        roles,
        tolerance: Kind::Reduction.default_tolerance(),
        expectation: Expectation::Holds,
        validity,
        lhs,
        rhs: Rhs::Closed(rhs),
        scale: None,
        default_grid,
    };
    vec![
        closed(
            "R-PCF-DIFF",
            "D_ν(−z) − D_ν(z) = z 2^{(ν+3)/2} √π e^{−z²/4} Φ((1−ν)/2; 3/2; z²/2) / Γ(−ν/2)",
            "nu = ν, x = z",
            reflection_valid,
            difference_lhs,
            difference_rhs,
            || order_argument_grid(&REFLECTION_ORDERS, &REFLECTION_ARGS),
        ),
        closed(
            "R-PCF-SUM",
            "D_ν(−z) + D_ν(z) = 2^{(ν+2)/2} √π e^{−z²/4} Φ(−ν/2; 1/2; z²/2) / Γ((1−ν)/2)",
            "nu = ν, x = z",
            reflection_valid,
            sum_lhs,
            sum_rhs,
            || order_argument_grid(&REFLECTION_ORDERS, &REFLECTION_ARGS),
        ),
        IdentityCase {
            scale: Some(recurrence_scale),
            ..closed(
                "R-PCF-RECURRENCE",
                "z D_ν(z) − D_{ν+1}(z) − ν D_{ν−1}(z) = 0, relative to the largest term",
                "nu = ν, x = z",
                pcf_argument_valid,
                recurrence_lhs,
                zero,
                || order_argument_grid(&[-1.5, -0.5, 0.5, 1.5], &[-5.0, -2.0, -0.5, 0.5, 2.0, 5.0, 10.0]),
            )
        },
        closed(
            "R-PCF-ERFC",
            "D_{−1}(z) = √(π/2) e^{z²/4} erfc(z/√2)",
            "x = z",
            pcf_argument_valid,
            erfc_lhs,
            erfc_rhs,
            || order_argument_grid(&[-1.0], &[-3.0, -1.0, 0.0, 0.5, 1.0, 2.0, 3.0, 5.0, 10.0]),
        ),
        closed(
            "R-PCF-ORIGIN",
            "D_μ(0) = 2^{μ/2} √π / Γ((1−μ)/2)",
            "mu = μ",
            any,
            origin_lhs,
            origin_rhs,
            || points(&[-2.5, -1.5, -0.5, 0.5, 1.5, 2.5].map(|m| (m, 0.0, 0.0, 0.0, 0.0))),
        ),
        IdentityCase {
            tolerance: 1e-14,
            scale: Some(unit_scale),
            ..closed(
                "R-ERFC-REFLECT",
                "erfc(−z) + erfc(z) = 2, as an absolute residual",
                "x = z",
                any,
                reflect_lhs,
                zero,
                || order_argument_grid(&[0.0], &[0.0, 0.1, 0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 5.0]),
            )
        },
        closed(
            "R-2F1-EULER",
            "F(a, b; c; z) = (1−z)^{c−a−b} F(c−a, c−b; c; z)",
            "mu = a, nu = b, y = c, x = z",
            gauss_valid,
            euler_lhs,
            euler_rhs,
            || abc_grid(&GAUSS_TRIPLES, &[-0.9, -0.4, 0.3, 0.7, 0.95]),
        ),
        closed(
            "R-2F1-PFAFF",
            "F(a, b; c; z) = (1−z)^{−a} F(a, c−b; c; z/(z−1)), both by Maclaurin series",
            "mu = a, nu = b, y = c, x = z",
            pfaff_valid,
            pfaff_lhs,
            pfaff_rhs,
            || abc_grid(&GAUSS_TRIPLES, &[-0.9, -0.75, -0.6]),
        ),
        closed(
            "R-2F1-CONNECTION",
            "the z ↦ 1−z connection formulas (including integer c−a−b) agree with the Maclaurin series",
            "mu = a, nu = b, y = c, x = z",
            connection_valid,
            maclaurin_lhs,
            euler_lhs,
            || {
                let mut triples = GAUSS_TRIPLES.to_vec();
                triples.extend([(1.2, 0.8, 1.0), (0.3, 0.7, 3.0), (0.6, 1.4, 1.0)]);
                abc_grid(&triples, &[0.6, 0.75, 0.9])
            },
        ),
        closed(
            "R-2F1-QUADRATIC",
            "F(a, b; a+b+1/2; z) = F(2a, 2b; a+b+1/2; (1−√(1−z))/2)",
            "mu = a, nu = b, x = z",
            quadratic_valid,
            quadratic_lhs,
            quadratic_rhs,
            || {
                let pairs = [(0.3, 0.45), (-0.7, 0.2), (1.1, 0.35), (0.25, 0.25)];
                pairs
                    .iter()
                    .flat_map(|&(a, b)| [-0.8, 0.2, 0.6, 0.9].map(|z| ParamPoint::new(a, b, z, 0.0, 0.0)))
                    .collect()
            },
        ),
        IdentityCase {
            scale: Some(contiguous_scale),
            ..closed(
                "R-2F1-CONTIGUOUS",
                "(ac−c²) F(a−1, b; c; z) + (c²−ac+c(a−b)z) F(a, b; c; z) + a(b−c) z F(a+1, b; c+1; z) = 0",
                "mu = a, nu = b, y = c, x = z",
                gauss_valid,
                contiguous_lhs,
                zero,
                || abc_grid(&GAUSS_TRIPLES, &[-0.9, -0.3, 0.2, 0.6, 0.9]),
            )
        },
        IdentityCase {
            rhs: Rhs::Pieces(gauss_sum_rhs),
            ..closed(
                "R-2F1-GAUSS-SUM",
                "F(a, b; c; 1) = Γ(c)Γ(c−a−b)/(Γ(c−a)Γ(c−b)) against the Euler integral at z = 1",
                "mu = a, nu = b, y = c",
                gauss_sum_valid,
                gauss_sum_lhs,
                zero,
                || {
                    points(&[
                        (0.3, 0.6, 0.0, 1.7, 0.0),
                        (-0.5, 0.4, 0.0, 1.2, 0.0),
                        (1.2, 0.7, 0.0, 2.5, 0.0),
                        (0.25, 0.25, 0.0, 1.0, 0.0),
                        (-1.5, 1.5, 0.0, 2.0, 0.0),
                    ])
                },
            )
        },
        closed(
            "R-2F1-ARCSIN",
            "F(a, 1−a; 1/2; z) = cos((2a−1) arcsin √z) / √(1−z)",
            "mu = a, x = z",
            arcsin_valid,
            arcsin_lhs,
            arcsin_rhs,
            || {
                [0.3, -0.6, 1.7]
                    .iter()
                    .flat_map(|&a| [0.1, 0.4, 0.7, 0.95].map(|z| ParamPoint::new(a, 0.0, z, 0.0, 0.0)))
                    .collect()
            },
        ),
        closed(
            "R-2F1-RECIPROCAL",
            "F(1, 3/2; 3/2; z) = 1/(1−z)",
            "x = z",
            unit_valid,
            reciprocal_lhs,
            reciprocal_rhs,
            || order_argument_grid(&[0.0], &[-0.9, -0.3, 0.2, 0.6, 0.9]),
        ),
        closed("R-2F1-ROOT", "F(1, 1/2; 2; z) = 2/(1+√(1−z))", "x = z", unit_valid, root_lhs, root_rhs, || {
            order_argument_grid(&[0.0], &[-0.9, -0.3, 0.2, 0.6, 0.9])
        }),
        closed(
            "R-APPELL-REDUCTION",
            "F₁(a; b1, b2; b1+b2; z1, z2) = (1−z2)^{−a} F(a, b1; b1+b2; (z1−z2)/(1−z2))",
            "mu = a, nu = b1, p = b2, x = z1, y = z2",
            appell_reduction_valid,
            appell_reduction_lhs,
            appell_reduction_rhs,
            || {
                points(&[
                    (0.4, 0.3, 0.2, -0.5, 0.7),
                    (0.6, 0.5, 0.7, 0.3, 0.9),
                    (0.25, 1.2, -0.8, 0.5, 0.4),
                    (0.9, 0.6, 0.85, -2.0, 1.1),
                ])
            },
        ),
        closed(
            "R-APPELL-Z2-ZERO",
            "F₁(a; b1, b2; c; z1, 0) = F(a, b1; c; z1)",
            "mu = a, nu = b1, y = c, x = z1, p = b2",
            appell_zero_valid,
            appell_zero_lhs,
            appell_zero_rhs,
            || points(&[(0.4, 0.3, 0.2, 1.0, 0.7), (0.6, -0.5, 0.8, 1.4, 0.3), (0.25, 1.2, -0.8, 2.0, 1.5)]),
        ),
    ]
}
