//! Deterministic time-dependent model parameters and their exact integrals.
//!
//! Rate, dividend, volatility and mean-reversion-level inputs are all
//! instances of [`Curve`]. The parametric kinds carry closed-form
//! antiderivatives so discount factors and carry integrals are exact and
//! bit-reproducible; anything without a closed form falls back to adaptive
//! Gauss-Kronrod quadrature at 1e-12 absolute tolerance.

use crate::error::EngineError;
use crate::quad::integrate_gk;
use crate::Result;
use serde::{Deserialize, Serialize};

const QUAD_TOL: f64 = 1e-12;

/// Deterministic parameter curve.
///
/// Units are 1/year for rate-like curves and price units for normal
/// volatility curves.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Curve {
    /// c0
    Constant { c0: f64 },
    /// c0 + c1 * exp(-c2 * t)
    ExpDecay { c0: f64, c1: f64, c2: f64 },
    /// c0 + c1 * (t_ref - t); `t_ref` is normally the option maturity.
    LinearToMaturity { c0: f64, c1: f64, t_ref: f64 },
    /// Right-continuous step function: value `values[i]` on
    /// [times[i], times[i+1]), with the last value extended to infinity.
    PiecewiseConstant { times: Vec<f64>, values: Vec<f64> },
}

impl Curve {
    pub fn constant(c0: f64) -> Self {
        Curve::Constant { c0 }
    }

    /// Validates structural invariants (grid shape, finite parameters).
    pub fn validate(&self) -> Result<()> {
        match self {
            Curve::Constant { c0 } => {
                if !c0.is_finite() {
                    return Err(EngineError::validation("constant curve value not finite"));
                }
            }
            Curve::ExpDecay { c0, c1, c2 } => {
                if ![c0, c1, c2].iter().all(|p| p.is_finite()) {
                    return Err(EngineError::validation("exp-decay parameters not finite"));
                }
            }
            Curve::LinearToMaturity { c0, c1, t_ref } => {
                if ![c0, c1, t_ref].iter().all(|p| p.is_finite()) {
                    return Err(EngineError::validation("linear curve parameters not finite"));
                }
            }
            Curve::PiecewiseConstant { times, values } => {
                if times.len() != values.len() || times.is_empty() {
                    return Err(EngineError::Shape(format!(
                        "piecewise curve needs matching non-empty grids, got {} times / {} values",
                        times.len(),
                        values.len()
                    )));
                }
                if times.windows(2).any(|w| w[1] <= w[0]) {
                    return Err(EngineError::validation(
                        "piecewise curve times must be strictly increasing",
                    ));
                }
                if values.iter().any(|v| !v.is_finite()) {
                    return Err(EngineError::validation("piecewise curve values not finite"));
                }
            }
        }
        Ok(())
    }

    /// Point value at time `t >= 0`.
    pub fn value(&self, t: f64) -> f64 {
        match self {
            Curve::Constant { c0 } => *c0,
            Curve::ExpDecay { c0, c1, c2 } => c0 + c1 * (-c2 * t).exp(),
            Curve::LinearToMaturity { c0, c1, t_ref } => c0 + c1 * (t_ref - t),
            Curve::PiecewiseConstant { times, values } => {
                if t < times[0] {
                    return values[0];
                }
                match times.binary_search_by(|probe| probe.partial_cmp(&t).unwrap()) {
                    Ok(i) => values[i],
                    Err(i) => values[i - 1],
                }
            }
        }
    }

    /// Exact integral over [t, u].
    pub fn integral(&self, t: f64, u: f64) -> Result<f64> {
        if t > u {
            return Err(EngineError::domain(format!(
                "curve integral needs t <= u, got t={t}, u={u}"
            )));
        }
        Ok(match self {
            Curve::Constant { c0 } => c0 * (u - t),
            Curve::ExpDecay { c0, c1, c2 } => {
                if c2.abs() < 1e-14 {
                    (c0 + c1) * (u - t)
                } else {
                    c0 * (u - t) + c1 / c2 * ((-c2 * t).exp() - (-c2 * u).exp())
                }
            }
            Curve::LinearToMaturity { c0, c1, t_ref } => {
                c0 * (u - t) + c1 * (t_ref * (u - t) - 0.5 * (u * u - t * t))
            }
            Curve::PiecewiseConstant { times, values } => {
                let mut acc = 0.0;
                let mut lo = t;
                for (i, &cell_start) in times.iter().enumerate() {
                    let cell_end = times.get(i + 1).copied().unwrap_or(f64::INFINITY);
                    if cell_end <= lo {
                        continue;
                    }
                    if cell_start >= u {
                        break;
                    }
                    let seg_lo = lo.max(cell_start.min(lo));
                    let seg_hi = u.min(cell_end);
                    if seg_hi > seg_lo {
                        acc += values[i] * (seg_hi - seg_lo);
                        lo = seg_hi;
                    }
                }
                // Left of the first knot the first value extends flat.
                if t < times[0] {
                    acc += values[0] * (u.min(times[0]) - t);
                }
                acc
            }
        })
    }
}

/// Deterministic discount curve D(t, s) = exp(-int_t^s r).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscountCurve {
    pub rate: Curve,
}

impl DiscountCurve {
    pub fn new(rate: Curve) -> Self {
        DiscountCurve { rate }
    }

    /// Discount factor between t and s, t <= s.
    pub fn factor(&self, t: f64, s: f64) -> Result<f64> {
        if t > s {
            return Err(EngineError::domain(format!(
                "discount factor needs t <= s, got t={t}, s={s}"
            )));
        }
        Ok((-self.rate.integral(t, s)?).exp())
    }
}

/// Integrated carry int_t^u (r(s) - q(s)) ds, exact for parametric kinds.
pub fn integrated_carry(r: &Curve, q: &Curve, t: f64, u: f64) -> Result<f64> {
    Ok(r.integral(t, u)? - q.integral(t, u)?)
}

/// The growth factor A(s) = exp(int_t^s theta) and the scaled time-change
/// integral C = (eps^2 / 2) * int_t^u A(s) ds needed by the 3/2
/// characteristic function.
#[derive(Debug, Clone)]
pub struct ThetaIntegrals {
    theta: Curve,
    start: f64,
    /// C = (eps^2/2) * int_t^u exp(int_t^s theta(w) dw) ds
    pub c: f64,
}

impl ThetaIntegrals {
    /// Growth factor A(s) for s in [t, u].
    pub fn growth(&self, s: f64) -> f64 {
        self.theta
            .integral(self.start, s)
            .map(f64::exp)
            .unwrap_or(f64::NAN)
    }
}

/// Computes [`ThetaIntegrals`] over [t, u] with volatility-of-variance `eps`.
///
/// Constant theta uses the closed form; other kinds integrate the (smooth)
/// exponential growth factor by adaptive quadrature.
pub fn theta_integrals(theta: &Curve, t: f64, u: f64, eps: f64) -> Result<ThetaIntegrals> {
    if t > u {
        return Err(EngineError::domain(format!(
            "theta integrals need t <= u, got t={t}, u={u}"
        )));
    }
    if !(eps > 0.0) {
        return Err(EngineError::domain("theta integrals need eps > 0"));
    }
    let half_eps2 = 0.5 * eps * eps;
    let c = match theta {
        Curve::Constant { c0 } if c0.abs() < 1e-14 => half_eps2 * (u - t),
        Curve::Constant { c0 } => half_eps2 * ((c0 * (u - t)).exp() - 1.0) / c0,
        _ => {
            let integrand = |s: f64| theta.integral(t, s).map(f64::exp).unwrap_or(f64::NAN);
            half_eps2 * integrate_gk(integrand, t, u, QUAD_TOL)?
        }
    };
    Ok(ThetaIntegrals {
        theta: theta.clone(),
        start: t,
        c,
    })
}
