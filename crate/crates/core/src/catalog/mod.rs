//! Executable catalog of Laplace-transform pairs, integral representations,
//! definite integrals and function reductions, each verified numerically
//! over a parameter grid.
//!
//! Every case compares a closed-form side (`lhs`) with an independently
//! computed side (`rhs`): usually a quadrature of the original function,
//! sometimes another closed form. Reductions that assert a vanishing
//! combination put the residual on the left, zero on the right, and supply
//! a scale (the largest term) for the relative error.

mod cases;
mod report;

use std::sync::OnceLock;
use std::time::Instant;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{finite, Error, Result};
use crate::quad::{integrate_finite_raw, integrate_semi_infinite_raw, Node, QuadratureResult, QuadratureSpec};
use crate::special::OrderPair;

pub use report::{write_report, write_timing, ReportFormat};

/// What a case compares.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    /// Image function against the Laplace integral of its original.
    LaplacePair,
    /// Closed form against a direct (non-Laplace) integral.
    DirectIntegral,
    /// Function identity, recurrence or transformation.
    Reduction,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::LaplacePair => "laplace_pair",
            Kind::DirectIntegral => "direct_integral",
            Kind::Reduction => "reduction",
        }
    }

    pub fn default_tolerance(self) -> f64 {
        match self {
            Kind::LaplacePair => 1e-8,
            Kind::DirectIntegral => 1e-9,
            Kind::Reduction => 1e-10,
        }
    }

    pub fn parse(s: &str) -> Option<Kind> {
        match s {
            "laplace_pair" => Some(Kind::LaplacePair),
            "direct_integral" => Some(Kind::DirectIntegral),
            "reduction" => Some(Kind::Reduction),
            _ => None,
        }
    }
}

/// Whether a case is expected to hold. Negative controls encode formulas
/// that are known to be wrong and must fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    Holds,
    Fails,
}

/// One point of a parameter grid. How each field is used is documented by
/// the case's `roles`; the defaults follow the convention `a = √y`, `b = √x`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParamPoint {
    pub orders: OrderPair,
    pub x: f64,
    pub y: f64,
    pub p: f64,
}

impl ParamPoint {
    pub fn new(mu: f64, nu: f64, x: f64, y: f64, p: f64) -> Self {
        ParamPoint { orders: OrderPair::new(mu, nu), x, y, p }
    }

    pub fn mu(&self) -> Complex64 {
        self.orders.mu
    }

    pub fn nu(&self) -> Complex64 {
        self.orders.nu
    }

    /// `a = √y`.
    pub fn a(&self) -> f64 {
        self.y.sqrt()
    }

    /// `b = √x`.
    pub fn b(&self) -> f64 {
        self.x.sqrt()
    }
}

pub type Integrand = Box<dyn Fn(Node) -> Result<Complex64> + Send + Sync>;

/// One integral contributing `coefficient * ∫ w(t) f(t) dt` to a side, where
/// `w(t) = e^{-pt}` when `laplace` is set and 1 otherwise.
pub struct Piece {
    pub lower: f64,
    pub upper: f64,
    pub exponent_at_lower: f64,
    pub exponent_at_upper: f64,
    pub coefficient: Complex64,
    pub laplace: Option<f64>,
    /// Rate of exponential decay (beyond any Laplace factor) used to size
    /// the panels of a semi-infinite integral.
    pub decay_hint: f64,
    /// A unit point mass at `lower`: the piece contributes the integrand
    /// value there (times the Laplace factor) instead of an integral.
    pub point_mass: bool,
    pub integrand: Integrand,
}

impl Piece {
    pub fn new(lower: f64, upper: f64, integrand: Integrand) -> Self {
        Piece {
            lower,
            upper,
            exponent_at_lower: 0.0,
            exponent_at_upper: 0.0,
            coefficient: Complex64::new(1.0, 0.0),
            laplace: None,
            decay_hint: 0.0,
            point_mass: false,
            integrand,
        }
    }

    /// A point mass at `at`, the limit of `t^{c-1}/Γ(c)` kernels as `c → 0`.
    pub fn point_mass(at: f64, integrand: Integrand) -> Self {
        Piece { point_mass: true, ..Piece::new(at, at, integrand) }
    }

    pub fn exponents(mut self, at_lower: f64, at_upper: f64) -> Self {
        self.exponent_at_lower = at_lower;
        self.exponent_at_upper = at_upper;
        self
    }

    pub fn coefficient(mut self, c: Complex64) -> Self {
        self.coefficient = c;
        self
    }

    pub fn laplace(mut self, p: f64) -> Self {
        self.laplace = Some(p);
        self
    }

    pub fn decay(mut self, rate: f64) -> Self {
        self.decay_hint = rate;
        self
    }
}

pub type SideFn = fn(&ParamPoint) -> Result<Complex64>;

/// The independently computed side of an identity.
pub enum Rhs {
    Pieces(fn(&ParamPoint) -> Result<Vec<Piece>>),
    Closed(SideFn),
}

pub struct IdentityCase {
    pub id: &'static str,
    pub kind: Kind,
    /// The identity in words and symbols.
    pub summary: &'static str,
    /// How the fields of a [`ParamPoint`] map onto the identity's symbols.
    pub roles: &'static str,
    pub tolerance: f64,
    pub expectation: Expectation,
    /// `Err(condition)` names the violated parameter condition.
    pub validity: fn(&ParamPoint) -> std::result::Result<(), String>,
    pub lhs: SideFn,
    pub rhs: Rhs,
    /// Magnitude used in place of |lhs|, |rhs| when both are small by
    /// construction (residual checks).
    pub scale: Option<fn(&ParamPoint) -> Result<f64>>,
    pub default_grid: fn() -> Vec<ParamPoint>,
}

impl std::fmt::Debug for IdentityCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityCase").field("id", &self.id).field("kind", &self.kind).finish_non_exhaustive()
    }
}

impl IdentityCase {
    pub fn check(&self, params: &ParamPoint) -> Result<()> {
        if !(params.x.is_finite() && params.y.is_finite() && params.p.is_finite()) {
            return Err(Error::InvalidParams { case: self.id.into(), condition: "finite x, y, p".into() });
        }
        (self.validity)(params).map_err(|condition| Error::InvalidParams { case: self.id.into(), condition })
    }
}

/// Summary row for listings.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseInfo {
    pub id: &'static str,
    pub kind: Kind,
    pub summary: &'static str,
    pub tolerance: f64,
    pub expectation: Expectation,
}

pub fn registry() -> &'static [IdentityCase] {
    static REGISTRY: OnceLock<Vec<IdentityCase>> = OnceLock::new();
    REGISTRY.get_or_init(cases::all)
}

pub fn list_cases() -> Vec<CaseInfo> {
    registry()
        .iter()
        .map(|c| CaseInfo {
            id: c.id,
            kind: c.kind,
            summary: c.summary,
            tolerance: c.tolerance,
            expectation: c.expectation,
        })
        .collect()
}

pub fn find_case(id: &str) -> Result<&'static IdentityCase> {
    registry().iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownCase(id.into()))
}

/// Cases whose id matches a shell-style glob, in registry order.
pub fn select(pattern: &str) -> Result<Vec<&'static IdentityCase>> {
    let pat = glob::Pattern::new(pattern).map_err(|e| Error::Config(format!("bad case pattern {pattern:?}: {e}")))?;
    let hits: Vec<_> = registry().iter().filter(|c| pat.matches(c.id)).collect();
    if hits.is_empty() {
        return Err(Error::UnknownCase(pattern.into()));
    }
    Ok(hits)
}

/// The closed-form side at `params`.
pub fn eval_lhs(id: &str, params: &ParamPoint) -> Result<Complex64> {
    let case = find_case(id)?;
    case.check(params)?;
    (case.lhs)(params)
}

/// The independently computed side at `params`.
pub fn eval_rhs(id: &str, params: &ParamPoint) -> Result<Complex64> {
    let case = find_case(id)?;
    case.check(params)?;
    Ok(evaluate_rhs(case, params, quad_rel_tol(case.tolerance))?.value)
}

struct SideValue {
    value: Complex64,
    evaluations: usize,
}

/// Quadrature accuracy requested for a case tolerance.
pub fn quad_rel_tol(case_tol: f64) -> f64 {
    (case_tol / 100.0).clamp(1e-13, 1e-10)
}

fn evaluate_rhs(case: &IdentityCase, params: &ParamPoint, rel_tol: f64) -> Result<SideValue> {
    match &case.rhs {
        Rhs::Closed(f) => Ok(SideValue { value: f(params)?, evaluations: 0 }),
        Rhs::Pieces(build) => {
            let mut value = Complex64::new(0.0, 0.0);
            let mut evaluations = 0;
            for piece in build(params)? {
                let (v, n) = integrate_piece(&piece, rel_tol)?;
                value += piece.coefficient * v;
                evaluations += n;
            }
            Ok(SideValue { value, evaluations })
        }
    }
}

/// Integrate one piece. The absolute tolerance starts at 1e-13 and is
/// tightened if the integral turns out to be small, so that it never
/// dominates the relative request.
pub fn integrate_piece(piece: &Piece, rel_tol: f64) -> Result<(Complex64, usize)> {
    integrate_piece_detailed(piece, rel_tol).map(|r| (r.value, r.evaluations))
}

/// Like [`integrate_piece`], keeping the quadrature error estimate. The
/// value and estimate exclude the piece coefficient.
pub fn integrate_piece_detailed(piece: &Piece, rel_tol: f64) -> Result<QuadratureResult> {
    let zero = |evaluations| QuadratureResult {
        value: Complex64::new(0.0, 0.0),
        error_estimate: 0.0,
        evaluations,
        converged: true,
    };
    if piece.coefficient == Complex64::new(0.0, 0.0) {
        return Ok(zero(0));
    }
    let p = piece.laplace.unwrap_or(0.0);
    if piece.point_mass {
        let t = piece.lower;
        let v = (piece.integrand)(Node { t, from_lower: 0.0, to_upper: 0.0 })?;
        return Ok(QuadratureResult { value: v * (-p * t).exp(), ..zero(1) });
    }
    if piece.lower == piece.upper {
        return Ok(zero(0));
    }
    let f = |n: Node| {
        let v = (piece.integrand)(n)?;
        Ok(if p != 0.0 { v * (-p * n.t).exp() } else { v })
    };
    let base = QuadratureSpec {
        lower: piece.lower,
        upper: piece.upper,
        exponent_at_lower: piece.exponent_at_lower,
        exponent_at_upper: piece.exponent_at_upper,
        decay_rate: p + piece.decay_hint,
        rel_tol,
        abs_tol: 1e-13,
        max_subdivisions: 2000,
    };
    let run = |spec: &QuadratureSpec| {
        if spec.upper.is_finite() {
            integrate_finite_raw(&f, spec)
        } else {
            integrate_semi_infinite_raw(&f, spec)
        }
    };
    let mut r = run(&base)?;
    let floor = rel_tol * r.value.norm() * 1e-3;
    if floor < base.abs_tol && r.value.norm() > 0.0 {
        let first = r.evaluations;
        r = run(&QuadratureSpec { abs_tol: floor.max(1e-300), ..base })?;
        r.evaluations += first;
    }
    r.into_result()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PointRecord {
    pub params: ParamPoint,
    pub lhs: Option<Complex64>,
    pub rhs: Option<Complex64>,
    pub rel_error: Option<f64>,
    pub verdict: Verdict,
    pub evaluations: usize,
    pub error: Option<String>,
    pub wall_time_ms: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub id: &'static str,
    pub kind: Kind,
    pub expectation: Expectation,
    pub tolerance: f64,
    pub records: Vec<PointRecord>,
    pub max_rel_error: Option<f64>,
    pub verdict: Verdict,
    pub evaluations: usize,
    pub wall_time_ms: f64,
}

impl VerificationReport {
    /// Whether the verdict is the expected one (a failing negative control
    /// counts as success).
    pub fn as_expected(&self) -> bool {
        match self.expectation {
            Expectation::Holds => self.verdict == Verdict::Pass,
            Expectation::Fails => self.verdict == Verdict::Fail,
        }
    }
}

/// `|l − r| / max(|l|, |r|, scale, 1e-300)`.
pub fn relative_error(lhs: Complex64, rhs: Complex64, scale: f64) -> f64 {
    (lhs - rhs).norm() / lhs.norm().max(rhs.norm()).max(scale).max(1e-300)
}

fn verify_point(case: &IdentityCase, params: &ParamPoint, tol: f64) -> PointRecord {
    let start = Instant::now();
    let mut record = PointRecord {
        params: *params,
        lhs: None,
        rhs: None,
        rel_error: None,
        verdict: Verdict::Fail,
        evaluations: 0,
        error: None,
        wall_time_ms: 0.0,
    };
    if let Err(e) = case.check(params) {
        record.verdict = Verdict::Skipped;
        record.error = Some(e.to_string());
        return record;
    }
    let outcome = (|| -> Result<()> {
        let lhs = finite((case.lhs)(params)?, "left side")?;
        record.lhs = Some(lhs);
        let rhs = evaluate_rhs(case, params, quad_rel_tol(tol))?;
        record.rhs = Some(finite(rhs.value, "right side")?);
        record.evaluations = rhs.evaluations;
        let scale = match case.scale {
            Some(f) => f(params)?,
            None => 0.0,
        };
        let err = relative_error(lhs, rhs.value, scale);
        if !err.is_finite() {
            return Err(Error::NonFinite("relative error"));
        }
        record.rel_error = Some(err);
        record.verdict = if err <= tol { Verdict::Pass } else { Verdict::Fail };
        Ok(())
    })();
    if let Err(e) = outcome {
        record.verdict = Verdict::Fail;
        record.error = Some(e.to_string());
    }
    record.wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    record
}

/// Verify a case over `grid` (its default grid when `None`) at tolerance
/// `tol` (the case default when `None`). Points are evaluated in parallel
/// and reported in grid order.
pub fn verify(id: &str, grid: Option<&[ParamPoint]>, tol: Option<f64>) -> Result<VerificationReport> {
    Ok(verify_case(find_case(id)?, grid, tol))
}

pub fn verify_case(case: &IdentityCase, grid: Option<&[ParamPoint]>, tol: Option<f64>) -> VerificationReport {
    let start = Instant::now();
    let default;
    let points = match grid {
        Some(g) => g,
        None => {
            default = (case.default_grid)();
            &default[..]
        }
    };
    let tol = tol.unwrap_or(case.tolerance);
    let records: Vec<PointRecord> = points.par_iter().map(|pt| verify_point(case, pt, tol)).collect();

    let evaluated: Vec<_> = records.iter().filter(|r| r.verdict != Verdict::Skipped).collect();
    let max_rel_error =
        evaluated.iter().filter_map(|r| r.rel_error).fold(None, |m: Option<f64>, e| Some(m.map_or(e, |m| m.max(e))));
    let verdict = if evaluated.is_empty() {
        Verdict::Skipped
    } else if evaluated.iter().all(|r| r.verdict == Verdict::Pass) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    let evaluations = records.iter().map(|r| r.evaluations).sum();
    VerificationReport {
        id: case.id,
        kind: case.kind,
        expectation: case.expectation,
        tolerance: tol,
        records,
        max_rel_error,
        verdict,
        evaluations,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

/// Verify every reduction case on its default grid.
pub fn reduction_suite() -> Vec<VerificationReport> {
    registry().par_iter().filter(|c| c.kind == Kind::Reduction).map(|c| verify_case(c, None, None)).collect()
}

/// Cartesian product of order and variable values, in nested order
/// `mu, nu, x, y, p`.
pub fn grid(mus: &[f64], nus: &[f64], xs: &[f64], ys: &[f64], ps: &[f64]) -> Vec<ParamPoint> {
    let mut out = Vec::with_capacity(mus.len() * nus.len() * xs.len() * ys.len() * ps.len());
    for &mu in mus {
        for &nu in nus {
            for &x in xs {
                for &y in ys {
                    for &p in ps {
                        out.push(ParamPoint::new(mu, nu, x, y, p));
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_ordered_deterministically() {
        let ids: Vec<_> = list_cases().iter().map(|c| c.id).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len());
        assert_eq!(ids, list_cases().iter().map(|c| c.id).collect::<Vec<_>>());
        assert!(ids.len() >= 20);
        for id in ["T31-DIFF-HALF", "T41-CORRECTED", "NEG-T41", "NEG-T42", "C361-REP"] {
            assert!(ids.contains(&id), "{id}");
        }
    }

    #[test]
    fn default_grids_are_valid() {
        for case in registry() {
            let grid = (case.default_grid)();
            assert!(!grid.is_empty(), "{}", case.id);
            for pt in &grid {
                case.check(pt).unwrap_or_else(|e| panic!("{}: {e} at {pt:?}", case.id));
            }
        }
    }

    #[test]
    fn negative_controls_are_marked() {
        for case in registry() {
            let neg = case.id.starts_with("NEG-");
            assert_eq!(neg, case.expectation == Expectation::Fails, "{}", case.id);
        }
    }

    #[test]
    fn glob_selection() {
        assert_eq!(select("T3*").unwrap().iter().filter(|c| c.id == "T31-DIFF-HALF").count(), 1);
        assert!(matches!(select("NOPE*"), Err(Error::UnknownCase(_))));
    }

    #[test]
    fn relative_error_uses_floor_and_scale() {
        let z = Complex64::new(0.0, 0.0);
        assert_eq!(relative_error(z, z, 0.0), 0.0);
        let e = relative_error(Complex64::new(1e-12, 0.0), z, 1.0);
        assert!((e - 1e-12).abs() < 1e-27);
    }
}
