//! Scalar special functions underlying every closed form: the symmetric
//! kernel f(u,v) of the Van-Brunt-Visser formula, the hyperbolic ratio
//! s(a) = sinh(a/2)/(a/2), and the splitting coefficients g, h, l.
//!
//! The kernel
//!
//! ```text
//! f(u,v) = ((u-v) e^{u+v} - (u e^u - v e^v)) / (u v (e^u - e^v))
//! ```
//!
//! has removable singularities on u = 0, v = 0 and u = v, all of which
//! cancel catastrophically in floating point. Evaluation therefore switches
//! to series fallbacks near those sets; see `f_kernel` for the exact policy.
//! The set e^u = e^v with u != v is a genuine pole and is rejected.

use crate::error::{Error, Result};
use num_complex::Complex64;

/// Complex scalar used for every commutator parameter and coefficient.
pub type CScalar = Complex64;

/// Distance below which an input counts as sitting on a singular line.
const SINGULAR_SWITCH: f64 = 1e-5;

/// Radius of the polydisk handled by the frozen double Taylor table.
const SERIES_RADIUS: f64 = 0.35;

fn require_finite(label: &str, z: CScalar) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFiniteInput(format!("{label} = {z}")))
    }
}

/// Outputs are finite or an error; exp overflow on huge arguments comes
/// back as an error, never as Inf/NaN.
fn finite_output(label: &str, z: CScalar) -> Result<CScalar> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::NonFiniteInput(format!("overflow evaluating {label}")))
    }
}

/// Series table evaluation in sigma = (u+v)/2, tau = (u-v)/2.
fn f_series(u: CScalar, v: CScalar) -> CScalar {
    let sigma = (u + v) * 0.5;
    let tau = (u - v) * 0.5;
    let tau2 = tau * tau;
    // Powers are cheap at degree 20 and the table is sorted; accumulate directly.
    let mut acc = CScalar::new(0.0, 0.0);
    for &(a, b, c) in crate::series_table::F_SERIES_ST {
        acc += sigma.powu(a) * tau2.powu(b / 2) * c;
    }
    acc
}

/// Expansion of f(u,v) in powers of v at fixed u, for |v| < SINGULAR_SWITCH
/// and |u| outside the series polydisk. The numerator coefficients are
/// A_k = e^u (u/k! - 1/(k-1)!) + 1/(k-1)! from factoring v out of the
/// closed-form numerator; the denominator u(e^u - e^v) has no cancellation.
fn f_near_v0(u: CScalar, v: CScalar) -> CScalar {
    let eu = u.exp();
    let inv_fact = [1.0, 1.0, 0.5, 1.0 / 6.0, 1.0 / 24.0, 1.0 / 120.0, 1.0 / 720.0];
    let mut num = CScalar::new(0.0, 0.0);
    let mut vpow = CScalar::new(1.0, 0.0);
    for k in 1..=6usize {
        let a_k = eu * (u * inv_fact[k] - inv_fact[k - 1]) + inv_fact[k - 1];
        num += a_k * vpow;
        vpow *= v;
    }
    // e^v - 1 by series: |v| < 1e-5 so three terms reach machine precision.
    let expm1_v = v * (1.0 + v * (0.5 + v / 6.0));
    num / (u * (eu - 1.0 - expm1_v))
}

/// Expansion of f near the diagonal: with sigma = (u+v)/2, tau = (u-v)/2,
/// f = ((e^sigma - cosh tau) * tau/sinh(tau) - sigma) / (u v). For
/// |tau| < SINGULAR_SWITCH the ratio tau/sinh(tau) is evaluated by series.
fn f_near_diag(u: CScalar, v: CScalar) -> CScalar {
    let sigma = (u + v) * 0.5;
    let tau = (u - v) * 0.5;
    let t2 = tau * tau;
    let tau_over_sinh = 1.0 / (1.0 + t2 * (1.0 / 6.0 + t2 / 120.0));
    let cosh_tau = 1.0 + t2 * (0.5 + t2 / 24.0);
    ((sigma.exp() - cosh_tau) * tau_over_sinh - sigma) / (u * v)
}

/// The symmetric Van-Brunt-Visser kernel f(u, v).
///
/// Evaluation policy:
/// - both |u|, |v| <= 0.35: frozen double Taylor series (degree 20, exact
///   rational coefficients), which covers all three removable lines at once;
/// - min(|u|, |v|, |u-v|) < 1e-5 outside that polydisk: a single-line series
///   in the small direction (order >= 6);
/// - elsewhere: the closed form.
///
/// Errors on non-finite input and on the non-removable set e^u = e^v, u != v.
pub fn f_kernel(u: CScalar, v: CScalar) -> Result<CScalar> {
    require_finite("u", u)?;
    require_finite("v", v)?;

    if u.norm() <= SERIES_RADIUS && v.norm() <= SERIES_RADIUS {
        return finite_output("f", f_series(u, v));
    }

    let du = u.norm();
    let dv = v.norm();
    let duv = (u - v).norm();

    // Genuine pole: e^u = e^v away from the diagonal, i.e. u - v in 2*pi*i*Z \ {0}.
    let eu = u.exp();
    let ev = v.exp();
    if duv >= 1e-3 && (eu - ev).norm() < 1e-9 * (eu.norm() + ev.norm()).max(1e-300) {
        return Err(Error::DegenerateKernelInput {
            u: u.to_string(),
            v: v.to_string(),
        });
    }

    if duv < SINGULAR_SWITCH && duv <= du.min(dv) {
        return finite_output("f", f_near_diag(u, v));
    }
    if dv < SINGULAR_SWITCH {
        return finite_output("f", f_near_v0(u, v));
    }
    if du < SINGULAR_SWITCH {
        return finite_output("f", f_near_v0(v, u));
    }

    finite_output("f", ((u - v) * (u + v).exp() - (u * eu - v * ev)) / (u * v * (eu - ev)))
}

/// s(a) = sinh(a/2) / (a/2), with the removable limit s(0) = 1.
pub fn s_kernel(a: CScalar) -> Result<CScalar> {
    require_finite("a", a)?;
    let h = a * 0.5;
    if h.norm() < 1e-4 {
        let h2 = h * h;
        return Ok(1.0 + h2 * (1.0 / 6.0 + h2 / 120.0));
    }
    finite_output("s", h.sinh() / h)
}

/// kappa(t) = t / (1 - e^{-t}), with kappa(0) = 1; the coefficient shape of
/// every H-E pair product. Errors when 1 - e^{-t} vanishes with t != 0.
pub fn exp_ratio(t: CScalar) -> Result<CScalar> {
    require_finite("t", t)?;
    if t.norm() < 1e-4 {
        // 1 - e^{-t} = t (1 - t/2 + t^2/6 - t^3/24 + t^4/120 - ...)
        let d = 1.0 - t * 0.5 + t * t / 6.0 - t * t * t / 24.0 + t * t * t * t / 120.0;
        return Ok(1.0 / d);
    }
    let den = 1.0 - (-t).exp();
    if den.norm() < 1e-12 {
        return Err(Error::DegenerateKernelInput {
            u: t.to_string(),
            v: "0".into(),
        });
    }
    finite_output("kappa", t / den)
}

/// The splitting coefficients
/// g_alpha(u,v) = 1 + alpha*u*f(alpha*u, v),
/// h_alpha(u,v) = alpha*(1 + v*f(alpha*u, v)),
/// l_alpha(u,v) = alpha*f(alpha*u, v),
/// sharing a single kernel evaluation. The identities g = 1 + u*l and
/// h = alpha + v*l hold exactly by construction.
pub fn ghl_coeffs(alpha: CScalar, u: CScalar, v: CScalar) -> Result<(CScalar, CScalar, CScalar)> {
    require_finite("alpha", alpha)?;
    let fv = f_kernel(alpha * u, v)?;
    let l = alpha * fv;
    Ok((1.0 + u * l, alpha + v * l, l))
}
