//! Generalised hypergeometric power series.

use num_complex::Complex64;

use super::{c, nonpositive_integer, SeriesControl};
use crate::error::{Error, Result};
use crate::quad::Neumaier;

/// `first * Σ_k [(num)_k / (den)_k] z^k / k!`, summed with compensation.
///
/// The series ends early when a numerator parameter makes a term vanish;
/// a denominator factor hitting zero before that is a `ParameterPole`.
pub fn pfq_series(
    num: &[Complex64],
    den: &[Complex64],
    z: Complex64,
    first: Complex64,
    ctrl: &SeriesControl,
) -> Result<Complex64> {
    let mut re = Neumaier::default();
    let mut im = Neumaier::default();
    let mut term = first;
    let mut quiet = 0;
    for k in 0..ctrl.max_terms {
        re.add(term.re);
        im.add(term.im);
        if term == c(0.0) {
            return Ok(Complex64::new(re.sum(), im.sum()));
        }
        let kf = k as f64;
        let mut ratio = z / (kf + 1.0);
        for &a in num {
            ratio *= a + kf;
        }
        if ratio == c(0.0) {
            return Ok(Complex64::new(re.sum(), im.sum()));
        }
        for &b in den {
            let d = b + kf;
            if d == c(0.0) {
                return Err(Error::ParameterPole { name: "denominator parameter", value: b });
            }
            ratio /= d;
        }
        term *= ratio;
        let size = term.norm();
        if !size.is_finite() || size > ctrl.recurrence_guard {
            return Err(Error::NonConvergence {
                what: "hypergeometric series (term overflow)",
                partial: Some(Complex64::new(re.sum(), im.sum())),
                error_estimate: None,
            });
        }
        let partial = Complex64::new(re.sum(), im.sum()).norm();
        if size <= ctrl.rel_tail_tol * partial {
            quiet += 1;
            if quiet >= 3 {
                re.add(term.re);
                im.add(term.im);
                return Ok(Complex64::new(re.sum(), im.sum()));
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::NonConvergence {
        what: "hypergeometric series",
        partial: Some(Complex64::new(re.sum(), im.sum())),
        error_estimate: None,
    })
}

/// Kummer's confluent function Φ(a; b; z) = ₁F₁(a; b; z).
pub fn kummer_phi(a: Complex64, b: Complex64, z: Complex64) -> Result<Complex64> {
    kummer_phi_with(a, b, z, &SeriesControl::default())
}

/// [`kummer_phi`] with explicit series control.
///
/// For `Re z < −1` the Kummer transformation `e^z Φ(b − a; b; −z)` replaces
/// the alternating series, which would otherwise cancel catastrophically.
pub fn kummer_phi_with(a: Complex64, b: Complex64, z: Complex64, ctrl: &SeriesControl) -> Result<Complex64> {
    ctrl.validate()?;
    if nonpositive_integer(b).is_some() {
        return Err(Error::ParameterPole { name: "b", value: b });
    }
    let terminating = nonpositive_integer(a).is_some();
    if z.re < -1.0 && !terminating {
        return Ok(z.exp() * pfq_series(&[b - a], &[b], -z, c(1.0), ctrl)?);
    }
    pfq_series(&[a], &[b], z, c(1.0), ctrl)
}

/// ₂F₂(a1, a2; b1, b2; z), an entire function, by its Maclaurin series.
pub fn hyp_2f2(a1: Complex64, a2: Complex64, b1: Complex64, b2: Complex64, z: Complex64) -> Result<Complex64> {
    for (name, b) in [("b1", b1), ("b2", b2)] {
        if nonpositive_integer(b).is_some() {
            return Err(Error::ParameterPole { name, value: b });
        }
    }
    pfq_series(&[a1, a2], &[b1, b2], z, c(1.0), &SeriesControl::default())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kummer_elementary_cases() {
        let z = c(0.7);
        assert_eq!(kummer_phi(c(0.3), c(1.7), c(0.0)).unwrap(), c(1.0));
        assert!((kummer_phi(c(1.0), c(1.0), z).unwrap() - z.exp()).norm() < 1e-15);
        let b = c(2.5);
        assert!((kummer_phi(c(-1.0), b, z).unwrap() - (c(1.0) - z / b)).norm() < 1e-15);
        let z = c(-7.0);
        assert!((kummer_phi(c(1.0), c(1.0), z).unwrap() - z.exp()).norm() < 1e-15 * z.exp().norm());
    }

    #[test]
    fn kummer_pole_parameter() {
        assert!(matches!(kummer_phi(c(1.0), c(-2.0), c(0.5)), Err(Error::ParameterPole { .. })));
    }

    #[test]
    fn kummer_transformation_consistency() {
        // Both branches of the evaluator, straddling the switch at z = -1.
        let (a, b) = (c(0.3), c(1.6));
        let direct = pfq_series(&[a], &[b], c(-2.0), c(1.0), &SeriesControl::default()).unwrap();
        let trans = kummer_phi(a, b, c(-2.0)).unwrap();
        assert!((direct - trans).norm() < 1e-14 * trans.norm());
    }

    #[test]
    fn hyp_2f2_reduces_and_terminates() {
        let z = c(0.8);
        let lhs = hyp_2f2(c(1.0), c(0.4), c(1.0), c(2.2), z).unwrap();
        let rhs = kummer_phi(c(0.4), c(2.2), z).unwrap();
        assert!((lhs - rhs).norm() < 1e-15 * rhs.norm());
        // Brute-force oracle of the terminating case.
        let v = hyp_2f2(c(-1.0), c(-1.0), c(0.5), c(1.0), c(0.3)).unwrap();
        assert!((v.re - 1.6).abs() < 1e-15, "{v}");
        assert_eq!(hyp_2f2(c(0.2), c(0.3), c(0.4), c(0.5), c(0.0)).unwrap(), c(1.0));
    }

    #[test]
    fn max_terms_exhaustion() {
        let ctrl = SeriesControl { max_terms: 3, ..Default::default() };
        assert!(matches!(
            kummer_phi_with(c(0.5), c(1.5), c(10.0), &ctrl),
            Err(Error::NonConvergence { partial: Some(_), .. })
        ));
    }
}
