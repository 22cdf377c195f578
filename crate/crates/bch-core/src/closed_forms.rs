//! The named generator-pair and generator-triple closed forms, stated
//! directly in root data. Each one is a specialization of the generic engine;
//! the overlap is pinned by tests, and every operation is verifiable through
//! the representation oracle.

use crate::algebra::{Algebra, LieElement, Root};
use crate::engine::BCHResult;
use crate::error::{Error, Result};
use crate::scalar::{exp_ratio, CScalar};
use num_complex::Complex64;

fn cx(re: f64) -> CScalar {
    Complex64::new(re, 0.0)
}

/// Two-factor product with dispatch: the plain VBV pair formula when
/// `[x,y]` closes in span{x, y, I}, else the named step-step closed forms
/// (the flat sandwich for opposite roots, the root-string product when the
/// root sum lies in Phi). Anything else keeps the span-failure error.
pub fn pair_product(x: &LieElement, y: &LieElement, algebra: &Algebra) -> Result<BCHResult> {
    match crate::engine::bch_pair(x, y, algebra) {
        Ok(res) => Ok(res),
        Err(span_err @ Error::SpanFailure { .. }) => {
            let (Some((ra, ca)), Some((rb, cb))) = (
                crate::engine::single_step_term(x, algebra),
                crate::engine::single_step_term(y, algebra),
            ) else {
                return Err(span_err);
            };
            if ra.add(&rb).is_zero() {
                epm_sandwich(ca, Complex64::new(0.0, 0.0), cb, &ra, algebra)
            } else if algebra.is_root(&ra.add(&rb)) {
                ee_pair(ca, &ra, cb, &rb, algebra)
            } else {
                Err(span_err)
            }
        }
        Err(other) => Err(other),
    }
}

/// exp(lambda H^alpha) exp(mu E^beta)
///   = exp(lambda H^alpha + lambda mu (alpha_v, beta) / (1 - e^{-lambda (alpha_v, beta)}) E^beta),
/// with the commuting limit when (alpha_v, beta) lambda -> 0.
pub fn he_pair(lambda: CScalar, alpha: &Root, mu: CScalar, beta: &Root, algebra: &Algebra) -> Result<BCHResult> {
    let h = algebra.cartan_element(alpha)?;
    let e = algebra.step_element(beta)?;
    let t = lambda * algebra.pairing(alpha, beta)?;
    let coeff = mu * exp_ratio(t)?;
    Ok(BCHResult::plain(h.scaled(lambda).add_scaled(coeff, &e)))
}

/// exp(l_a H^alpha) exp(mu E^beta) exp(l_g H^gamma): the H-E-H triple,
/// whose only nonzero commutator parameters are v = l_a (alpha_v, beta) and
/// w = -l_g (gamma_v, beta). The E^beta coefficient is
/// mu (a + g) / (e^g - e^{-a}) with a = l_a (alpha_v, beta), g = l_g (gamma_v, beta);
/// the a + g -> 0 limit is removable and taken by series.
pub fn heh_triple(
    lambda_a: CScalar,
    alpha: &Root,
    mu: CScalar,
    beta: &Root,
    lambda_g: CScalar,
    gamma: &Root,
    algebra: &Algebra,
) -> Result<BCHResult> {
    let ha = algebra.cartan_element(alpha)?;
    let hg = algebra.cartan_element(gamma)?;
    let e = algebra.step_element(beta)?;
    let a = lambda_a * algebra.pairing(alpha, beta)?;
    let g = lambda_g * algebra.pairing(gamma, beta)?;
    // mu (a+g) / (e^g - e^{-a}) = mu e^{-g} kappa(a+g)
    let coeff = mu * (-g).exp() * exp_ratio(a + g)?;
    if !coeff.re.is_finite() || !coeff.im.is_finite() {
        return Err(Error::DegenerateCase {
            context: "H-E-H triple".into(),
            detail: "degenerate denominator e^g = e^{-a}".into(),
        });
    }
    Ok(BCHResult::plain(
        ha.scaled(lambda_a).add(&hg.scaled(lambda_g)).add_scaled(coeff, &e),
    ))
}

/// exp(mu_a E^alpha) exp(mu_b E^beta) for roots alpha != -beta.
///
/// When alpha + beta is not a root the factors commute and W is the sum.
/// Otherwise the result closes on the root string:
///   W = mu_a E^alpha + mu_b E^beta + (1/2) mu_a mu_b e_ab E^{alpha+beta}
///     + (1/12) mu_a^2 mu_b e_{a,a+b} e_ab E^{2alpha+beta}      (if a root)
///     + (1/12) mu_a mu_b^2 e_{b,a+b} e_ba E^{alpha+2beta}      (if a root).
/// Root strings of length five (2a+3b or 3a+2b in Phi) are not supported.
pub fn ee_pair(mu_a: CScalar, alpha: &Root, mu_b: CScalar, beta: &Root, algebra: &Algebra) -> Result<BCHResult> {
    if !algebra.is_root(alpha) || !algebra.is_root(beta) {
        return Err(Error::RootError("both arguments must be roots".into()));
    }
    if alpha.add(beta).is_zero() {
        return Err(Error::RootError(
            "alpha = -beta is outside this operation (the product is an E-H-E sandwich)".into(),
        ));
    }
    let ea = algebra.step_element(alpha)?;
    let eb = algebra.step_element(beta)?;
    let sum = alpha.add(beta);
    if !algebra.is_root(&sum) {
        return Ok(BCHResult::plain(ea.scaled(mu_a).add(&eb.scaled(mu_b))));
    }
    let combo = |ka: i32, kb: i32| {
        Root(alpha.0.iter().zip(&beta.0).map(|(a, b)| ka * a + kb * b).collect())
    };
    if algebra.is_root(&combo(2, 3)) || algebra.is_root(&combo(3, 2)) {
        return Err(Error::UnsupportedRootString(
            "length-five root strings (2a+3b or 3a+2b in Phi) are not supported".into(),
        ));
    }
    let e_ab = algebra.structure_constant(alpha, beta)?;
    let mut w = ea
        .scaled(mu_a)
        .add(&eb.scaled(mu_b))
        .add_scaled(mu_a * mu_b * e_ab * 0.5, &algebra.step_element(&sum)?);
    let two_a_b = combo(2, 1);
    let a_two_b = combo(1, 2);
    match (algebra.is_root(&two_a_b), algebra.is_root(&a_two_b)) {
        (true, true) => {
            return Err(Error::UnsupportedRootString(
                "both 2a+b and a+2b are roots; no catalog algebra reaches this".into(),
            ))
        }
        (true, false) => {
            let e_a_apb = algebra.structure_constant(alpha, &sum)?;
            w = w.add_scaled(
                mu_a * mu_a * mu_b * e_a_apb * e_ab / 12.0,
                &algebra.step_element(&two_a_b)?,
            );
        }
        (false, true) => {
            let e_b_apb = algebra.structure_constant(beta, &sum)?;
            let e_ba = -e_ab;
            w = w.add_scaled(
                mu_a * mu_b * mu_b * e_b_apb * e_ba / 12.0,
                &algebra.step_element(&a_two_b)?,
            );
        }
        (false, false) => {}
    }
    Ok(BCHResult::plain(w))
}

/// Shared quadratic core of the E-H-E sandwich and the sl2 ladder triple:
/// given the root sum S and product P = e^{2 lambda} of the quadratic
/// Y^2 - S Y + P = 0 for Y = e^{-lambda_pm}, return
/// (prefactor, e^{-lambda_+}, e^{-lambda_-}) with principal-branch logs.
fn lambda_quadratic(s: CScalar, p: CScalar) -> Result<(CScalar, CScalar, CScalar)> {
    let disc2 = s * s - 4.0 * p;
    if disc2.norm() < 1e-12 * s.norm().max(p.norm()).max(1.0) {
        return Err(Error::CoincidentRoots(disc2.norm().sqrt()));
    }
    let disc = disc2.sqrt();
    let ep = (s + disc) / 2.0;
    let em = (s - disc) / 2.0;
    if ep.norm() < 1e-300 || em.norm() < 1e-300 {
        return Err(Error::DegenerateCase {
            context: "lambda quadratic".into(),
            detail: "a quadratic root vanishes, so its logarithm is undefined".into(),
        });
    }
    let lp = -ep.ln();
    let lm = -em.ln();
    let pref = (lp - lm) / (em - ep);
    Ok((pref, ep, em))
}

/// exp(mu_a E^alpha) exp(lambda H^alpha) exp(mu_n E^{-alpha}):
///
/// W = (l+ - l-)/(e^{-l-} - e^{-l+}) [ mu_a E^alpha
///       + (e^{-l+} + e^{-l-} - 2)/2 H^alpha + mu_n E^{-alpha} ],
///
/// where e^{-l_pm} are the roots of Y^2 - (1 + e^{2 lambda} + mu_n mu_a) Y
/// + e^{2 lambda} = 0 on principal branches. The lambda = 0 case is the
/// plain exp(E) exp(E^-) product.
pub fn epm_sandwich(
    mu_a: CScalar,
    lambda: CScalar,
    mu_n: CScalar,
    alpha: &Root,
    algebra: &Algebra,
) -> Result<BCHResult> {
    let e = algebra.step_element(alpha)?;
    let f = algebra.step_element(&alpha.neg())?;
    let h = algebra.cartan_element(alpha)?;
    let p = (lambda * 2.0).exp();
    let s = 1.0 + p + mu_n * mu_a;
    let (pref, ep, em) = lambda_quadratic(s, p)?;
    let w = e
        .scaled(mu_a)
        .add(&h.scaled((ep + em - 2.0) * 0.5))
        .add(&f.scaled(mu_n))
        .scaled(pref);
    Ok(BCHResult {
        w,
        alpha_used: None,
        tilde: None,
        oracle_residual: None,
        branch_note: Some(format!("e^-lambda+ = {ep}, e^-lambda- = {em} (principal)")),
    })
}

/// Coefficients of W on (L_-1, L_0, L_1) for the ladder algebra
/// `[L_m, L_n]` = (n - m) L_{m+n}, m, n in {-1, 0, 1}:
///
/// exp(a L_-1) exp(b L_0) exp(c L_1)
///   = exp{pref [a L_-1 + (2 - e^{-l+} - e^{-l-}) L_0 + c L_1]},
/// pref = (l+ - l-)/(e^{-l-} - e^{-l+}), with e^{-l_pm} the roots of
/// Y^2 - (1 + e^{-b} - a c) Y + e^{-b} = 0 and l- + l+ = b.
/// Returns (coefficients, e^{-lambda_+}, e^{-lambda_-}).
pub fn sl2_ladder_triple(a: CScalar, b: CScalar, c: CScalar) -> Result<([CScalar; 3], CScalar, CScalar)> {
    let p = (-b).exp();
    let s = 1.0 + p - a * c;
    let (pref, ep, em) = lambda_quadratic(s, p)?;
    Ok(([pref * a, pref * (2.0 - ep - em), pref * c], ep, em))
}

/// exp(mu_a E^alpha) exp(lambda H^beta) exp(mu_g E^gamma) with gamma != -alpha
/// and alpha + gamma not a root (so `[E^alpha, E^gamma]` = 0); the type-5
/// configuration with u = -lambda (beta_v, alpha), z = lambda (beta_v, gamma).
///
/// Both box solutions collapse to
///   W = kappa(u) mu_a E^alpha + lambda H^beta + kappa(z) mu_g E^gamma,
/// kappa(t) = t/(1 - e^{-t}). When gamma = alpha the split parameterization
/// exp(lambda H) = exp(l- H) exp(l+ H) with the commuting condition
///   mu_g g (1 - e^{l- a}) + mu_a a (1 - e^{-l+ g}) = 0
/// has the closed solution e^{l- a} = (mu_g + mu_a)/(mu_g + mu_a e^{-lambda a}),
/// and the split form reproduces the same W; the split values are recorded.
pub fn ehe_type5(
    mu_a: CScalar,
    alpha: &Root,
    lambda: CScalar,
    beta: &Root,
    mu_g: CScalar,
    gamma: &Root,
    algebra: &Algebra,
) -> Result<BCHResult> {
    if !algebra.is_root(alpha) || !algebra.is_root(gamma) {
        return Err(Error::RootError("alpha and gamma must be roots".into()));
    }
    if alpha.add(gamma).is_zero() {
        return Err(Error::RootError(
            "gamma = -alpha is the E-H-E sandwich, not a type-5 configuration".into(),
        ));
    }
    if algebra.is_root(&alpha.add(gamma)) {
        return Err(Error::RootError(
            "alpha + gamma is a root, so [E^alpha, E^gamma] != 0".into(),
        ));
    }
    let a = algebra.pairing(beta, alpha)?;
    let g = algebra.pairing(beta, gamma)?;
    if a == 0.0 || g == 0.0 {
        return Err(Error::RootError(
            "(beta_v, alpha) and (beta_v, gamma) must both be nonzero".into(),
        ));
    }
    if a + g == 0.0 && lambda.norm() > 1e-12 {
        return Err(Error::UnsupportedType {
            subcase: "4 (u = z != 0: this E-H-E lands in type 4, use the generic engine)".into(),
        });
    }
    let u = -lambda * a;
    let z = lambda * g;
    let ea = algebra.step_element(alpha)?;
    let eg = algebra.step_element(gamma)?;
    let h = algebra.cartan_element(beta)?;
    let w = ea
        .scaled(mu_a * exp_ratio(u)?)
        .add(&h.scaled(lambda))
        .add(&eg.scaled(mu_g * exp_ratio(z)?));

    let mut branch_note = None;
    if alpha == gamma {
        // record the split parameterization
        let k = (-lambda * a).exp();
        let den = mu_g + mu_a * k;
        if den.norm() < 1e-12 * (mu_g.norm() + mu_a.norm()).max(1.0) {
            return Err(Error::NoSplitSolution(format!(
                "mu_g + mu_a e^{{-lambda a}} = {den} vanishes"
            )));
        }
        let xa = (mu_g + mu_a) / den;
        if xa.norm() < 1e-300 {
            return Err(Error::NoSplitSolution("split root vanishes".into()));
        }
        let lm = xa.ln() / cx(a);
        let lp = lambda - lm;
        branch_note = Some(format!("split lambda- = {lm}, lambda+ = {lp} (principal)"));
    }
    Ok(BCHResult {
        w,
        alpha_used: None,
        tilde: None,
        oracle_residual: None,
        branch_note,
    })
}
