//! Gamma, reciprocal gamma and digamma for complex arguments.
//!
//! Real arguments go through `libm::tgamma`; complex ones through a
//! 14-term Lanczos approximation (g = 671/128) with reflection below 1/2.

use num_complex::Complex64;
use std::f64::consts::PI;

use super::{c, nonpositive_integer};
use crate::error::{Error, Result};

const LANCZOS_G: f64 = 5.242_187_5;
const LANCZOS_SER0: f64 = 0.999_999_999_999_997_092;
const LANCZOS_COF: [f64; 14] = [
    57.156_235_665_862_923_5,
    -59.597_960_355_475_491_2,
    14.136_097_974_741_747_1,
    -0.491_913_816_097_620_199,
    0.339_946_499_848_118_887e-4,
    0.465_236_289_270_485_756e-4,
    -0.983_744_753_048_795_646e-4,
    0.158_088_703_224_912_494e-3,
    -0.210_264_441_724_104_883e-3,
    0.217_439_618_115_212_643e-3,
    -0.164_318_106_536_763_890e-3,
    0.844_182_239_838_527_433e-4,
    -0.261_908_384_015_814_087e-4,
    0.368_991_826_595_316_234e-5,
];
const SQRT_TWO_PI: f64 = 2.506_628_274_631_000_5;

/// `ln Γ(z)` up to a multiple of `2πi`, for `Re z ≥ 1/2`.
fn lanczos_log(z: Complex64) -> Complex64 {
    let tmp = z + LANCZOS_G;
    let tmp = (z + 0.5) * tmp.ln() - tmp;
    let mut ser = c(LANCZOS_SER0);
    let mut y = z;
    for &k in &LANCZOS_COF {
        y += 1.0;
        ser += k / y;
    }
    tmp + (ser * SQRT_TWO_PI / z).ln()
}

/// `sin(πz)` with exact zeros at the integers.
pub(crate) fn sin_pi(z: Complex64) -> Complex64 {
    let r = z.re - 2.0 * (z.re / 2.0).round();
    let (s, co) = if r.fract() == 0.0 {
        (0.0, if r == 0.0 { 1.0 } else { -1.0 })
    } else if r.abs() == 0.5 {
        (r.signum(), 0.0)
    } else {
        ((PI * r).sin(), (PI * r).cos())
    };
    if z.im == 0.0 {
        return c(s);
    }
    let y = PI * z.im;
    Complex64::new(s * y.cosh(), co * y.sinh())
}

/// `cos(πz)`.
fn cos_pi(z: Complex64) -> Complex64 {
    sin_pi(z + 0.5)
}

/// Γ(z). Fails at the poles `0, −1, −2, …`.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    if nonpositive_integer(z).is_some() {
        return Err(Error::Pole(z));
    }
    let v = if z.im == 0.0 {
        c(libm::tgamma(z.re))
    } else if z.re < 0.5 {
        c(PI) / (sin_pi(z) * lanczos_log(c(1.0) - z).exp())
    } else {
        lanczos_log(z).exp()
    };
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite("gamma"))
    }
}

/// 1/Γ(z), an entire function: exactly zero at the poles of Γ.
pub fn reciprocal_gamma(z: Complex64) -> Complex64 {
    if nonpositive_integer(z).is_some() {
        return c(0.0);
    }
    if z.im == 0.0 {
        let x = z.re;
        if x < 0.5 {
            // Avoid the overflow of Γ(1 − x) turning into a spurious zero.
            let g = libm::tgamma(1.0 - x);
            if g.is_finite() {
                return c(sin_pi(z).re * g / PI);
            }
        }
        return c(1.0 / libm::tgamma(x));
    }
    if z.re < 0.5 {
        sin_pi(z) * lanczos_log(c(1.0) - z).exp() / PI
    } else {
        (-lanczos_log(z)).exp()
    }
}

/// The digamma function ψ(z) = Γ'(z)/Γ(z).
pub fn digamma(z: Complex64) -> Result<Complex64> {
    if nonpositive_integer(z).is_some() {
        return Err(Error::Pole(z));
    }
    if z.re < 0.5 {
        let reflected = digamma(c(1.0) - z)?;
        return Ok(reflected - cos_pi(z) / sin_pi(z) * PI);
    }
    let mut z = z;
    let mut acc = c(0.0);
    while z.norm() < 10.0 {
        acc -= z.inv();
        z += 1.0;
    }
    // Asymptotic series with Bernoulli coefficients B_{2k} / (2k).
    const COEF: [f64; 7] =
        [1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0, 1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0];
    let w = (z * z).inv();
    let mut tail = c(0.0);
    for &k in COEF.iter().rev() {
        tail = (tail + k) * w;
    }
    Ok(acc + z.ln() - 0.5 * z.inv() - tail)
}
