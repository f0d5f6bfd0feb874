//! The implicit function `v(t)` with `v² = t² ∫₀^v x/(eˣ-1) dx`, the
//! auxiliary functions `f`, `g`, and the asymptotic estimate of `p(r, k)`.

use num_traits::{Float, FloatConst};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{ln_big, PartitionTable};
use crate::tolerances::{QUADRATURE_ABS_TOL, ROOT_MAX_ITER, ROOT_REL_TOL};

/// Probe set used to fix the exponent sign.
pub const CALIBRATION_PROBES: [(i64, i64); 3] = [(400, 20), (900, 30), (1600, 40)];

fn c<F: Float>(x: f64) -> F {
    F::from(x).expect("constant representable")
}

/// `x / (eˣ - 1)`, extended by 1 at the origin.
pub fn bose<F: Float>(x: F) -> F {
    if x == F::zero() {
        F::one()
    } else {
        x / x.exp_m1()
    }
}

fn simpson<F: Float>(a: F, b: F, fa: F, fm: F, fb: F) -> F {
    (b - a) / c(6.0) * (fa + c::<F>(4.0) * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adaptive<F: Float>(f: &impl Fn(F) -> F, a: F, b: F, fa: F, fm: F, fb: F, whole: F, tol: F, depth: u32) -> F {
    let m = (a + b) / c(2.0);
    let (lm, rm) = ((a + m) / c(2.0), (m + b) / c(2.0));
    let (flm, frm) = (f(lm), f(rm));
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= c::<F>(15.0) * tol {
        return left + right + delta / c(15.0);
    }
    adaptive(f, a, m, fa, flm, fm, left, tol / c(2.0), depth - 1)
        + adaptive(f, m, b, fm, frm, fb, right, tol / c(2.0), depth - 1)
}

/// Adaptive Simpson quadrature of `f` over `[a, b]`.
pub fn integrate<F: Float>(f: impl Fn(F) -> F, a: F, b: F, tol: F) -> F {
    let m = (a + b) / c(2.0);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = simpson(a, b, fa, fm, fb);
    adaptive(&f, a, b, fa, fm, fb, whole, tol, 48)
}

/// `∫₀^v x/(eˣ-1) dx`.
pub fn bose_integral<F: Float>(v: F) -> F {
    let tol = c::<F>(QUADRATURE_ABS_TOL) * v.min(F::one());
    integrate(bose, F::zero(), v, tol)
}

/// Residual `v - t² I(v)/v`, whose positive root is `v(t)`.
fn scaled_residual<F: Float>(t: F, v: F) -> F {
    v - t * t * bose_integral(v) / v
}

/// The unique positive root `v(t)`.
pub fn v_of<F: Float + FloatConst>(t: F) -> Result<F> {
    if t.is_nan() || t <= F::zero() || !t.is_finite() {
        return Err(Error::InvalidArgument("v(t) needs finite t > 0".into()));
    }
    let mut lo = t * t * c(1e-6);
    let mut hi = t * F::PI() / c::<F>(6.0).sqrt() + F::one();
    if scaled_residual(t, lo) > F::zero() || scaled_residual(t, hi) < F::zero() {
        return Err(Error::Numeric(format!("no sign change for v({})", t.to_f64().unwrap_or(f64::NAN))));
    }
    let rel = c::<F>(ROOT_REL_TOL).max(F::epsilon() * c(100.0));
    for _ in 0..ROOT_MAX_ITER {
        let mid = (lo + hi) / c(2.0);
        if scaled_residual(t, mid) < F::zero() {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= F::epsilon() * c(4.0) * hi {
            break;
        }
    }
    // Newton polish on v² - t² I(v).
    let mut v = (lo + hi) / c(2.0);
    for _ in 0..4 {
        let phi = v * v - t * t * bose_integral(v);
        let dphi = c::<F>(2.0) * v - t * t * bose(v);
        if dphi == F::zero() {
            break;
        }
        let next = v - phi / dphi;
        if !(next > lo && next < hi) {
            break;
        }
        v = next;
    }
    let residual = (v * v - t * t * bose_integral(v)).abs();
    if residual > rel * (v * v).max(F::one()) {
        return Err(Error::Numeric(format!(
            "v({}) residual {} above tolerance",
            t.to_f64().unwrap_or(f64::NAN),
            residual.to_f64().unwrap_or(f64::NAN)
        )));
    }
    Ok(v)
}

/// Continuous extension of `v` to `[0, ∞]`.
pub fn v_tilde<F: Float + FloatConst>(alpha: F) -> Result<F> {
    if alpha == F::zero() {
        Ok(F::zero())
    } else if alpha == F::infinity() {
        Ok(F::infinity())
    } else {
        v_of(alpha)
    }
}

/// `v(t) / √(8πt) · (1 - e^{-v}(1 + t²/2))^{-1/2}`.
pub fn f_of<F: Float + FloatConst>(t: F) -> Result<F> {
    let v = v_of(t)?;
    let inner = F::one() - (-v).exp() * (F::one() + t * t / c(2.0));
    Ok(v / (c::<F>(8.0) * F::PI() * t).sqrt() / inner.sqrt())
}

/// `2v(t)/t - t ln(1 - e^{-v(t)})`.
pub fn g_of<F: Float + FloatConst>(t: F) -> Result<F> {
    let v = v_of(t)?;
    Ok(c::<F>(2.0) * v / t - t * (-(-v).exp_m1()).ln())
}

/// `ln f(k/√r) - ln r + σ √r g(k/√r)`.
pub fn log_p_asymptotic<F: Float + FloatConst>(r: i64, k: i64, sign: i8) -> Result<F> {
    if r < 1 || k < 1 {
        return Err(Error::InvalidArgument("asymptotic needs r, k ≥ 1".into()));
    }
    let rf: F = c(r as f64);
    let t = c::<F>(k as f64) / rf.sqrt();
    let sigma: F = c(sign as f64);
    Ok(f_of(t)?.ln() - rf.ln() + sigma * rf.sqrt() * g_of(t)?)
}

#[derive(Clone, Debug, Serialize)]
pub struct Comparison {
    pub r: i64,
    pub k: i64,
    pub exact_log: f64,
    pub asymptotic_log: f64,
    pub relative_error: f64,
}

/// Exact `ln p(r, k)` against the asymptotic estimate.
pub fn compare(table: &PartitionTable, r: i64, k: i64, sign: i8) -> Result<Comparison> {
    let exact_log = ln_big(&table.p2(r, k));
    let asymptotic_log: f64 = log_p_asymptotic(r, k, sign)?;
    Ok(Comparison { r, k, exact_log, asymptotic_log, relative_error: ((exact_log - asymptotic_log) / exact_log).abs() })
}

#[derive(Clone, Debug, Serialize)]
pub struct Calibration {
    pub sign: i8,
    pub plus: Vec<Comparison>,
    pub minus: Vec<Comparison>,
}

/// Choose the exponent sign minimizing the log error on the probe set.
pub fn calibrate(table: &PartitionTable) -> Result<Calibration> {
    let run = |sign| {
        CALIBRATION_PROBES
            .iter()
            .map(|&(r, k)| compare(table, r, k, sign))
            .collect::<Result<Vec<_>>>()
    };
    let (plus, minus) = (run(1)?, run(-1)?);
    let worst = |v: &[Comparison]| v.iter().map(|c| c.relative_error).fold(0.0, f64::max);
    let plus_wins = plus.iter().zip(&minus).all(|(p, m)| p.relative_error < m.relative_error);
    let minus_wins = plus.iter().zip(&minus).all(|(p, m)| m.relative_error < p.relative_error);
    let sign = match (plus_wins, minus_wins) {
        (true, false) => 1,
        (false, true) => -1,
        _ => {
            return Err(Error::Numeric(format!(
                "sign calibration inconsistent across probes (worst errors {:.3} / {:.3})",
                worst(&plus),
                worst(&minus)
            )))
        }
    };
    let best = if sign == 1 { worst(&plus) } else { worst(&minus) };
    if best > 0.5 {
        return Err(Error::Numeric(format!("both signs poor: best worst-case relative error {best:.3}")));
    }
    Ok(Calibration { sign, plus, minus })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integral_limit() {
        let total: f64 = bose_integral(60.0);
        assert!((total - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-10);
    }

    #[test]
    fn v_at_one() {
        let v: f64 = v_of(1.0).unwrap();
        assert!((v - 0.81).abs() < 0.02, "{v}");
        let v32: f32 = v_of(1.0f32).unwrap();
        assert!((v32 as f64 - v).abs() < 1e-4);
    }

    #[test]
    fn small_t_expansion() {
        for t in [0.01f64, 0.05, 0.1, 0.2] {
            let v = v_of(t).unwrap();
            let rem = (v - t * t * (1.0 - t * t / 4.0)) / t.powi(6);
            assert!(rem.abs() < 1.0, "t={t} rem={rem}");
        }
    }

    #[test]
    fn extension() {
        assert_eq!(v_tilde(0.0f64).unwrap(), 0.0);
        assert_eq!(v_tilde(f64::INFINITY).unwrap(), f64::INFINITY);
        assert!(v_of(-1.0f64).is_err());
    }

    #[test]
    fn derivative_identity() {
        for t in [0.3f64, 1.0, 3.0] {
            let h = 1e-5;
            let dg = (g_of(t + h).unwrap() - g_of(t - h).unwrap()) / (2.0 * h);
            let lhs = t * t * dg;
            let rhs = t * g_of(t).unwrap() - 2.0 * v_of(t).unwrap();
            assert!((lhs - rhs).abs() < 1e-5, "t={t}: {lhs} vs {rhs}");
        }
    }
}
