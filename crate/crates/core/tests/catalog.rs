use pcflap::catalog::{
    find_case, integrate_piece_detailed, quad_rel_tol, registry, relative_error, verify, verify_case, write_report,
    Expectation, Kind, ReportFormat, Rhs, Verdict,
};
use pcflap::Complex64 as C;

#[test]
fn every_default_grid_point_is_valid_and_every_case_behaves_as_declared() {
    for case in registry() {
        let points = (case.default_grid)();
        assert!(!points.is_empty(), "{}", case.id);
        for pt in &points {
            assert!((case.validity)(pt).is_ok(), "{} {pt:?}", case.id);
        }
    }
    let reports = pcflap::catalog::reduction_suite();
    assert!(reports.iter().all(|r| r.kind == Kind::Reduction && r.verdict == Verdict::Pass));
}

/// Tightening the quadrature request a hundredfold moves the right side by
/// less than the error the coarser run reported.
#[test]
fn refinement_stays_within_reported_error() {
    for case in registry().iter().filter(|c| c.kind == Kind::LaplacePair) {
        let Rhs::Pieces(build) = &case.rhs else { panic!("{} has no quadrature side", case.id) };
        let coarse_tol = quad_rel_tol(case.tolerance);
        for pt in (case.default_grid)().iter().step_by(11) {
            let (mut coarse, mut fine, mut estimate) = (C::new(0.0, 0.0), C::new(0.0, 0.0), 0.0);
            for piece in build(pt).unwrap() {
                let a = integrate_piece_detailed(&piece, coarse_tol).unwrap();
                let b = integrate_piece_detailed(&piece, (coarse_tol / 100.0).max(1e-13)).unwrap();
                coarse += piece.coefficient * a.value;
                fine += piece.coefficient * b.value;
                estimate += piece.coefficient.norm() * a.error_estimate;
            }
            let change = (coarse - fine).norm();
            // the estimate cannot undercut double-precision rounding of the sum
            let floor = 4.0 * f64::EPSILON * coarse.norm();
            assert!(change <= estimate.max(floor), "{} {pt:?}: change {change:e} > estimate {estimate:e}", case.id);
        }
    }
}

#[test]
fn negative_controls_fail_by_three_orders_on_the_corrected_grids() {
    for (good, bad) in [("T41-CORRECTED", "NEG-T41"), ("T42-CORRECTED", "NEG-T42")] {
        let points = (find_case(good).unwrap().default_grid)();
        let g = verify(good, Some(&points), Some(1e-8)).unwrap();
        let b = verify(bad, Some(&points), Some(1e-8)).unwrap();
        assert_eq!(g.verdict, Verdict::Pass);
        assert_eq!(b.verdict, Verdict::Fail);
        assert!(b.max_rel_error.unwrap() >= 1e3 * 1e-8);
        assert!(g.as_expected() && b.as_expected());
        assert_eq!(find_case(bad).unwrap().expectation, Expectation::Fails);
    }
}

#[test]
fn reports_are_ordered_and_reproducible() {
    let case = find_case("T33-SUM-HALF").unwrap();
    let grid = (case.default_grid)();
    let a = verify_case(case, Some(&grid), None);
    let b = verify_case(case, Some(&grid), None);
    for ((ra, rb), pt) in a.records.iter().zip(&b.records).zip(&grid) {
        assert_eq!(&ra.params, pt);
        assert_eq!(ra.lhs, rb.lhs);
        assert_eq!(ra.rhs, rb.rhs);
    }
    let (mut ja, mut jb) = (Vec::new(), Vec::new());
    write_report(std::slice::from_ref(&a), ReportFormat::Json, &mut ja).unwrap();
    write_report(std::slice::from_ref(&b), ReportFormat::Json, &mut jb).unwrap();
    assert_eq!(ja, jb);
}

#[test]
fn tolerance_override_sets_the_verdict_threshold() {
    // the tolerance also sets the quadrature request, so only the verdicts are compared
    let loose = verify("C341-SINGLE", None, Some(1e-8)).unwrap();
    let tight = verify("C341-SINGLE", None, Some(1e-16)).unwrap();
    assert_eq!(loose.verdict, Verdict::Pass);
    assert_eq!(tight.verdict, Verdict::Fail);
    assert_eq!(loose.records.len(), tight.records.len());
    assert!(tight.records.iter().all(|r| r.error.is_none()));
}

#[test]
fn relative_error_floor() {
    assert_eq!(relative_error(C::new(0.0, 0.0), C::new(0.0, 0.0), 0.0), 0.0);
    assert_eq!(relative_error(C::new(1.0, 0.0), C::new(-1.0, 0.0), 0.0), 2.0);
    assert!((relative_error(C::new(1e-20, 0.0), C::new(0.0, 0.0), 1.0) - 1e-20).abs() < 1e-35);
}
