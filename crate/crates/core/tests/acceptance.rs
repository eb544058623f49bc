//! Acceptance run: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test -p pcflap --test acceptance`.

use std::path::Path;
use std::process::Command;

use pcflap::catalog::{
    eval_rhs, find_case, grid, relative_error, verify, verify_case, ParamPoint, Verdict, VerificationReport,
};
use pcflap::quad::{integrate_finite_raw, integrate_semi_infinite_raw, Node, QuadratureSpec};
use pcflap::special::gamma;
use pcflap::Complex64;

struct Outcome {
    pass: bool,
    detail: String,
}

fn fmt_err(e: Option<f64>) -> String {
    e.map_or_else(|| "n/a".into(), |v| format!("{v:.2e}"))
}

/// Every point evaluated (none skipped or failed to evaluate) and within `tol`.
fn clean_within(rep: &VerificationReport, tol: f64) -> bool {
    !rep.records.is_empty()
        && rep.records.iter().all(|r| r.verdict != Verdict::Skipped && r.error.is_none())
        && rep.max_rel_error.is_some_and(|e| e <= tol)
}

fn run_cases(ids: &[&str], tol: f64, min_points: usize) -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for id in ids {
        match verify(id, None, Some(tol)) {
            Ok(rep) => {
                let ok = clean_within(&rep, tol) && rep.records.len() >= min_points;
                pass &= ok;
                parts.push(format!("{id}={}/{}pts", fmt_err(rep.max_rel_error), rep.records.len()));
            }
            Err(e) => {
                pass = false;
                parts.push(format!("{id}: {e}"));
            }
        }
    }
    Outcome { pass, detail: parts.join(" ") }
}

fn blocks() -> Outcome {
    run_cases(&["ILT-PCF-BLOCK", "ILT-PCF-BLOCK2", "ILT-KUM-BLOCK", "ILT-KUM-BLOCK-B", "ILT-KUM-BLOCK-C"], 1e-9, 1)
}

fn theorems() -> Outcome {
    let ids = [
        "T31-DIFF-HALF",
        "T31-KUMMER",
        "T32-DIFF",
        "T33-SUM-HALF",
        "T33-KUMMER",
        "T34-NEG-HALF",
        "C341-SINGLE",
        "T35-POS-HALF",
        "T36-POS",
    ];
    let mut out = run_cases(&ids, 1e-8, 24);
    // every grid point is real-order
    for id in ids {
        let case = find_case(id).unwrap();
        if !(case.default_grid)().iter().all(|pt| pt.orders.is_real()) {
            out.pass = false;
            out.detail.push_str(&format!(" {id}: complex orders in grid"));
        }
    }
    out
}

fn error_function_representations() -> Outcome {
    let ab = [0.25, 0.5, 1.0, 2.0];
    let squares: Vec<f64> = ab.iter().map(|v| v * v).collect();
    // y = a², x = b²
    let plane = grid(&[-1.0], &[-1.0], &squares, &squares, &[1.0]);
    let mut pass = true;
    let mut parts = Vec::new();
    for id in ["C321-REP", "C361-REP", "C361-ERFC-SINGLE", "C361-ONE-MINUS"] {
        let rep = verify_case(find_case(id).unwrap(), Some(&plane), Some(1e-9));
        pass &= clean_within(&rep, 1e-9) && rep.records.len() == 16;
        parts.push(format!("{id}={}", fmt_err(rep.max_rel_error)));
    }
    // At a = b the general representation must agree with the classical
    // single-integral one, and both with 1 − erf(a)².
    let mut worst: f64 = 0.0;
    for &a in &ab {
        let pt = ParamPoint::new(-1.0, -1.0, a * a, a * a, 1.0);
        match (eval_rhs("C361-ONE-MINUS", &pt), eval_rhs("C361-NG69", &pt)) {
            (Ok(general), Ok(classical)) => worst = worst.max(relative_error(general, classical, 0.0)),
            _ => pass = false,
        }
    }
    let ng = verify("C361-NG69", None, Some(1e-10)).unwrap();
    pass &= worst <= 1e-10 && clean_within(&ng, 1e-10);
    parts.push(format!("a=b general-vs-classical={worst:.2e} C361-NG69={}", fmt_err(ng.max_rel_error)));
    Outcome { pass, detail: parts.join(" ") }
}

fn correction_discrimination() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for (good, bad) in [("T41-CORRECTED", "NEG-T41"), ("T42-CORRECTED", "NEG-T42")] {
        let g = verify(good, None, Some(1e-8)).unwrap();
        let points = (find_case(good).unwrap().default_grid)();
        let b = verify_case(find_case(bad).unwrap(), Some(&points), Some(1e-8));
        let bad_ok = b.records.iter().all(|r| r.error.is_none()) && b.max_rel_error.is_some_and(|e| e >= 1e-2);
        pass &= clean_within(&g, 1e-8) && bad_ok;
        parts.push(format!("{good}={} {bad}={}", fmt_err(g.max_rel_error), fmt_err(b.max_rel_error)));
    }
    Outcome { pass, detail: parts.join(" ") }
}

fn section_integrals() -> Outcome {
    let orders = [-1.5, -1.0, -0.5];
    let args = [0.5, 1.0, 2.0];
    let mut pass = true;
    let mut parts = Vec::new();
    for id in ["S51-INT", "S52-INT"] {
        let case = find_case(id).unwrap();
        let points: Vec<ParamPoint> =
            grid(&orders, &orders, &args, &args, &[1.0]).into_iter().filter(|pt| (case.validity)(pt).is_ok()).collect();
        let rep = verify_case(case, Some(&points), Some(1e-8));
        pass &= clean_within(&rep, 1e-8);
        parts.push(format!("{id}={}/{}pts", fmt_err(rep.max_rel_error), rep.records.len()));
    }
    Outcome { pass, detail: parts.join(" ") }
}

fn invariant_suite() -> Outcome {
    let ids: Vec<&str> = pcflap::catalog::registry().iter().map(|c| c.id).filter(|id| id.starts_with("R-")).collect();
    let mut out = run_cases(&ids, 1e-10, 1);
    out.detail = format!("{} reductions: {}", ids.len(), out.detail);
    out
}

fn beta(a: f64, b: f64) -> f64 {
    let g = |v: f64| gamma(Complex64::new(v, 0.0)).unwrap().re;
    g(a) * g(b) / g(a + b)
}

fn quadrature_honesty() -> Outcome {
    let shapes = [0.3, 0.5, 1.0, 1.7, 3.0];
    let mut honest = 0;
    let mut total = 0;
    let mut worst_ratio: f64 = 0.0;
    for &a in &shapes {
        for &b in &shapes {
            let spec = QuadratureSpec::finite(0.0, 1.0).exponents(a - 1.0, b - 1.0);
            let f = |n: Node| Ok(Complex64::new(n.from_lower.powf(a - 1.0) * n.to_upper.powf(b - 1.0), 0.0));
            let r = integrate_finite_raw(&f, &spec).unwrap();
            let err = (r.value.re - beta(a, b)).abs();
            total += 1;
            if err <= 10.0 * r.error_estimate {
                honest += 1;
            }
            worst_ratio = worst_ratio.max(err / r.error_estimate);
        }
    }
    for &s in &shapes {
        for &rate in &[0.25, 0.5, 1.0, 2.0, 4.0] {
            let spec = QuadratureSpec::semi_infinite(0.0).exponents(s - 1.0, 0.0).decay(rate);
            let f = |n: Node| Ok(Complex64::new(n.t.powf(s - 1.0) * (-rate * n.t).exp(), 0.0));
            let r = integrate_semi_infinite_raw(&f, &spec).unwrap();
            let exact = gamma(Complex64::new(s, 0.0)).unwrap().re / rate.powf(s);
            let err = (r.value.re - exact).abs();
            total += 1;
            if err <= 10.0 * r.error_estimate {
                honest += 1;
            }
            worst_ratio = worst_ratio.max(err / r.error_estimate);
        }
    }
    Outcome {
        pass: total == 50 && honest >= 49,
        detail: format!("{honest}/{total} within 10x estimate, worst true/estimate = {worst_ratio:.2}"),
    }
}

fn run_cli(out: &Path) -> Result<(), String> {
    let status = Command::new(env!("CARGO_BIN_EXE_pcflap"))
        .args(["verify", "--all", "--format", "json", "--out"])
        .arg(out)
        .output()
        .map_err(|e| e.to_string())?;
    if !status.status.success() {
        return Err(format!("exit {:?}: {}", status.status.code(), String::from_utf8_lossy(&status.stderr)));
    }
    Ok(())
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let (first, second) = (dir.path().join("first.json"), dir.path().join("second.json"));
    if let Err(e) = run_cli(&first).and_then(|_| run_cli(&second)) {
        return Outcome { pass: false, detail: e };
    }
    let (a, b) = (std::fs::read(&first).unwrap(), std::fs::read(&second).unwrap());
    Outcome { pass: !a.is_empty() && a == b, detail: format!("{} bytes, identical = {}", a.len(), a == b) }
}

type Check = fn() -> Outcome;

fn main() {
    let criteria: [(&str, Check); 8] = [
        ("building-block transforms <= 1e-9", blocks),
        ("theorem transforms <= 1e-8, >= 24 points each", theorems),
        ("error-function representations <= 1e-9; a=b classical form <= 1e-10", error_function_representations),
        ("corrected forms pass at 1e-8, tabulated forms err >= 1e-2", correction_discrimination),
        ("definite integrals <= 1e-8", section_integrals),
        ("special-function invariants <= 1e-10", invariant_suite),
        ("quadrature estimates honest on >= 49 of 50 Beta/Gamma integrals", quadrature_honesty),
        ("verify --all JSON byte-identical across runs", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        if !o.pass {
            failed += 1;
        }
        println!("criterion {} {}: {} [{}]", i + 1, if o.pass { "PASS" } else { "FAIL" }, name, o.detail);
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
