//! Adaptive Gauss-Kronrod quadrature and power-law endpoint substitutions.
//!
//! Used for the Caputo fallback in residual checks and as an independent
//! numerical route against the closed-form kernel weights.

use alloc::vec::Vec;

// 15-point Kronrod abscissae / weights on [-1, 1] (non-negative half) and
// the embedded 7-point Gauss weights.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub error: f64,
    /// `false` when the interval budget ran out before the tolerance was met.
    pub converged: bool,
}

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for (j, &x) in XGK.iter().take(7).enumerate() {
        let dx = half * x;
        let sum = f(center - dx) + f(center + dx);
        kronrod += WGK[j] * sum;
        if j % 2 == 1 {
            gauss += WG[j / 2] * sum;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

/// Globally adaptive G7/K15 on `[a, b]` with bisection of the worst
/// interval until `error <= max(abs_tol, rel_tol * |value|)`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, abs_tol: f64, rel_tol: f64) -> QuadResult {
    const MAX_INTERVALS: usize = 2000;
    if a == b {
        return QuadResult { value: 0.0, error: 0.0, converged: true };
    }
    let (v, e) = gk15(&f, a, b);
    let mut intervals: Vec<(f64, f64, f64, f64)> = alloc::vec![(a, b, v, e)];
    let mut value = v;
    let mut error = e;
    while error > abs_tol.max(rel_tol * value.abs()) {
        if intervals.len() >= MAX_INTERVALS {
            return QuadResult { value, error, converged: false };
        }
        let (worst, _) = intervals
            .iter()
            .enumerate()
            .fold((0, -1.0), |(bi, be), (i, iv)| if iv.3 > be { (i, iv.3) } else { (bi, be) });
        let (lo, hi, v0, e0) = intervals.swap_remove(worst);
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            // interval collapsed to float resolution
            intervals.push((lo, hi, v0, 0.0));
            value = intervals.iter().map(|iv| iv.2).sum();
            error = intervals.iter().map(|iv| iv.3).sum();
            continue;
        }
        let (v1, e1) = gk15(&f, lo, mid);
        let (v2, e2) = gk15(&f, mid, hi);
        intervals.push((lo, mid, v1, e1));
        intervals.push((mid, hi, v2, e2));
        value += v1 + v2 - v0;
        error += e1 + e2 - e0;
        if intervals.len().is_multiple_of(64) {
            // resum to shed accumulated cancellation in the running totals
            value = intervals.iter().map(|iv| iv.2).sum();
            error = intervals.iter().map(|iv| iv.3).sum();
        }
    }
    QuadResult { value, error, converged: true }
}

/// `\int_a^b (b - q)^p g(q) dq` for `p > -1`.
///
/// Substitutes `q = b - (b - a) u^(1/(p+1))`, which absorbs the power and
/// leaves `(b - a)^(p+1)/(p+1) \int_0^1 g(q(u)) du`.
pub fn integrate_right_singular<G: Fn(f64) -> f64>(
    g: G,
    a: f64,
    b: f64,
    p: f64,
    abs_tol: f64,
    rel_tol: f64,
) -> QuadResult {
    let len = b - a;
    let s = p + 1.0;
    let scale = libm::pow(len, s) / s;
    let r = integrate(
        |u| g(b - len * libm::pow(u, 1.0 / s)),
        0.0,
        1.0,
        abs_tol / scale,
        rel_tol,
    );
    QuadResult { value: r.value * scale, error: r.error * scale, ..r }
}

/// `\int_a^b (q - a)^p g(q) dq` for `p > -1`, mirror of
/// [`integrate_right_singular`].
pub fn integrate_left_singular<G: Fn(f64) -> f64>(
    g: G,
    a: f64,
    b: f64,
    p: f64,
    abs_tol: f64,
    rel_tol: f64,
) -> QuadResult {
    let len = b - a;
    let s = p + 1.0;
    let scale = libm::pow(len, s) / s;
    let r = integrate(
        |u| g(a + len * libm::pow(u, 1.0 / s)),
        0.0,
        1.0,
        abs_tol / scale,
        rel_tol,
    );
    QuadResult { value: r.value * scale, error: r.error * scale, ..r }
}

/// `\int_a^b (q - a)^p (b - q)^r g(q) dq` with both endpoints singular;
/// split at the midpoint and substituted on each side.
pub fn integrate_both_singular<G: Fn(f64) -> f64>(
    g: G,
    a: f64,
    b: f64,
    p: f64,
    r: f64,
    abs_tol: f64,
    rel_tol: f64,
) -> QuadResult {
    let mid = 0.5 * (a + b);
    let left = integrate_left_singular(
        |q| g(q) * libm::pow(b - q, r),
        a,
        mid,
        p,
        0.5 * abs_tol,
        rel_tol,
    );
    let right = integrate_right_singular(
        |q| g(q) * libm::pow(q - a, p),
        mid,
        b,
        r,
        0.5 * abs_tol,
        rel_tol,
    );
    QuadResult {
        value: left.value + right.value,
        error: left.error + right.error,
        converged: left.converged && right.converged,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    #[test]
    fn polynomial_exact() {
        let r = integrate(|x| x * x * x, 0.0, 2.0, 1e-14, 1e-14);
        assert!((r.value - 4.0).abs() < 1e-13);
        assert!(r.converged);
    }

    #[test]
    fn oscillatory() {
        let r = integrate(|x| libm::sin(10.0 * x), 0.0, PI, 1e-13, 1e-13);
        let exact = (1.0 - libm::cos(10.0 * PI)) / 10.0;
        assert!((r.value - exact).abs() < 1e-12);
    }

    #[test]
    fn beta_function_via_right_singularity() {
        // \int_0^1 (1-q)^(-1/2) q^3 dq = B(1/2, 4) = 32/35
        let r = integrate_right_singular(|q| q * q * q, 0.0, 1.0, -0.5, 1e-14, 1e-13);
        assert!((r.value - 32.0 / 35.0).abs() < 1e-12, "{}", r.value);
    }

    #[test]
    fn both_endpoints_singular() {
        // \int_0^1 q^(-1/2) (1-q)^(-1/2) dq = pi
        let r = integrate_both_singular(|_| 1.0, 0.0, 1.0, -0.5, -0.5, 1e-14, 1e-13);
        assert!((r.value - PI).abs() < 1e-11, "{}", r.value);
    }
}
