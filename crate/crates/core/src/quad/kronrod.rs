//! 15-point Gauss–Kronrod rule with the embedded 7-point Gauss rule.

use num_complex::Complex64;

use crate::error::Result;

/// Kronrod abscissae on [-1, 1]; odd indices are the Gauss nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
pub(crate) struct RuleOutput {
    pub value: Complex64,
    pub error: f64,
}

/// Apply the rule on [lo, hi] to `f`, which receives the abscissa.
pub(crate) fn gk15<F>(lo: f64, hi: f64, mut f: F) -> Result<RuleOutput>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);

    let f_center = f(center)?;
    let mut res_k = f_center * WGK[7];
    let mut res_g = f_center * WG[3];
    let mut res_abs = f_center.norm() * WGK[7];

    let mut values = [(Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)); 7];
    for (j, slot) in values.iter_mut().enumerate() {
        let dx = half * XGK[j];
        let left = f(center - dx)?;
        let right = f(center + dx)?;
        res_k += (left + right) * WGK[j];
        res_abs += (left.norm() + right.norm()) * WGK[j];
        if j % 2 == 1 {
            res_g += (left + right) * WG[j / 2];
        }
        *slot = (left, right);
    }

    let mean = res_k * 0.5;
    let mut res_asc = WGK[7] * (f_center - mean).norm();
    for (j, (left, right)) in values.iter().enumerate() {
        res_asc += WGK[j] * ((left - mean).norm() + (right - mean).norm());
    }

    let scale = half.abs();
    let value = res_k * half;
    let res_abs = res_abs * scale;
    let res_asc = res_asc * scale;
    let mut error = ((res_k - res_g) * half).norm();

    if res_asc != 0.0 && error != 0.0 {
        error = res_asc * (200.0 * error / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * res_abs);
    }

    Ok(RuleOutput { value, error })
}
