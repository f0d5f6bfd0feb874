//! Named tolerances and caps used by the checks and the acceptance matrix.

/// Default element cap for ball growth.
pub const DEFAULT_ELEMENT_CAP: usize = 5_000_000;

/// Absolute tolerance for adaptive Simpson quadrature.
pub const QUADRATURE_ABS_TOL: f64 = 1e-12;

/// Relative residual accepted for the implicit root `v(t)`.
pub const ROOT_REL_TOL: f64 = 1e-10;

/// Iteration cap for bisection plus Newton polishing.
pub const ROOT_MAX_ITER: usize = 400;

/// Relative error of logs allowed between exact restricted partition counts
/// and the asymptotic estimate.
pub const ASYMPTOTIC_LOG_REL_TOL: f64 = 0.05;

/// Reference value of `v(1)` and the allowed deviation.
pub const V_AT_ONE: f64 = 0.81;
pub const V_AT_ONE_TOL: f64 = 0.02;

/// Bound on `|v(t) - t^2 (1 - t^2/4)| / t^6` over small `t`.
pub const SMALL_T_REMAINDER_BOUND: f64 = 1.0;

/// `v(t)/t` must exceed this fraction of its limit by `t = 100`.
pub const LARGE_T_RATIO_FRACTION: f64 = 0.9;

/// Upper bound on the sup-error between discrete and multiplicative traces at
/// the largest convergence sample.
pub const LIMIT_SUP_ERROR: f64 = 0.1;

/// Slack allowed when checking that convergence errors are nonincreasing.
pub const MONOTONE_SLACK: f64 = 1e-12;

/// Step used for central finite differences of `g`.
pub const FINITE_DIFF_STEP: f64 = 1e-5;

/// Tolerance on the derivative identity for `g`.
pub const DERIVATIVE_IDENTITY_TOL: f64 = 1e-5;

/// Relative resolution for comparisons of `v(t)/t` with its limit, whose
/// true gap falls below double precision for large `t`.
pub const FLOAT_RESOLUTION: f64 = 1e-12;
