//! The closed-form engine: the two-exponential product for commutators of
//! the form `[X,Y]` = uX + vY + cI, the three-exponential splitting algorithm
//! with per-type alpha solutions (types 1c-i, 4 and 5), and the weakened
//! two-exponential formula that holds in the presence of a witness element,
//! which is never trusted without an oracle residual.
//!
//! The splitting algorithm writes exp(X)exp(Y)exp(Z) as
//! exp(Xt)exp(Yt) with
//!   Xt = g_a(u,v) X + h_a(u,v) Y + l_a(u,v) c I,
//!   Yt = h_b(z,w) Y + g_b(z,w) Z + l_b(z,w) d I,   b = 1 - a,
//! and fixes the split weight `a` so that `[Xt, Yt]` = ut Xt + vt Yt + ct I.
//! That condition is a scalar equation in `a`; its closed solutions depend
//! on which of the thirteen commutator-algebra types the parameters land in.

use crate::algebra::{Algebra, GeneratorKind, LieElement};
use crate::error::{Error, Result};
use crate::jacobi::{check_jacobi, classify, TripleParams, TypeTag, DEFAULT_TOL};
use crate::oracle::verify_product;
use crate::scalar::{f_kernel, ghl_coeffs, s_kernel, CScalar};
use serde_json::{json, Value};

/// Span tolerance for extracting commutator parameters by projection.
pub const SPAN_TOL: f64 = 1e-10;

/// Residual gate on the alpha equation.
pub const FONDA_TOL: f64 = 1e-8;

/// Residual gate on the reassembled commutator condition.
pub const TILDE_TOL: f64 = 1e-8;

/// Oracle residual below which a candidate counts as verified.
pub const VERIFY_TOL: f64 = 1e-8;

/// One solution of the alpha equation, with branch provenance.
#[derive(Debug, Clone)]
pub struct AlphaSolution {
    pub alpha: CScalar,
    pub beta: CScalar,
    /// "1c-i", "4+", "4-", "5a", "5b"; quadratic branches carry b and x^u.
    pub branch: String,
    pub residual_fonda: f64,
    /// For type 4: the quadratic coefficient b and the root x^u.
    pub quadratic: Option<(CScalar, CScalar)>,
}

impl AlphaSolution {
    pub fn to_json(&self) -> Value {
        let mut map = serde_json::Map::new();
        map.insert("alpha".into(), json!([self.alpha.re, self.alpha.im]));
        map.insert("beta".into(), json!([self.beta.re, self.beta.im]));
        map.insert("branch".into(), json!(self.branch));
        map.insert("residual_fonda".into(), json!(self.residual_fonda));
        if let Some((b, xu)) = self.quadratic {
            map.insert("b".into(), json!([b.re, b.im]));
            map.insert("x_u".into(), json!([xu.re, xu.im]));
        }
        Value::Object(map)
    }
}

/// The commutator parameters of the reassembled pair.
#[derive(Debug, Clone, Copy)]
pub struct TildeParams {
    pub u_t: CScalar,
    pub v_t: CScalar,
    pub c_t: CScalar,
}

impl TildeParams {
    pub fn to_json(&self) -> Value {
        json!({
            "u": [self.u_t.re, self.u_t.im],
            "v": [self.v_t.re, self.v_t.im],
            "c": [self.c_t.re, self.c_t.im],
        })
    }
}

/// A closed-form result: the exponent W plus the split/branch metadata that
/// produced it and, when a verification ran, the oracle residual.
#[derive(Debug, Clone)]
pub struct BCHResult {
    pub w: LieElement,
    pub alpha_used: Option<AlphaSolution>,
    pub tilde: Option<TildeParams>,
    pub oracle_residual: Option<f64>,
    /// Extra branch bookkeeping for quadratic-root formulas.
    pub branch_note: Option<String>,
}

impl BCHResult {
    pub fn plain(w: LieElement) -> Self {
        BCHResult { w, alpha_used: None, tilde: None, oracle_residual: None, branch_note: None }
    }

    pub fn to_json(&self, algebra: &Algebra) -> Value {
        let mut coeffs = serde_json::Map::new();
        for (&i, &v) in &self.w.coeffs {
            coeffs.insert(algebra.generator_name(i).to_string(), json!([v.re, v.im]));
        }
        json!({
            "w": {
                "coefficients": Value::Object(coeffs),
                "central": [self.w.central.re, self.w.central.im],
            },
            "alpha": self.alpha_used.as_ref().map(|a| a.to_json()),
            "tilde": self.tilde.as_ref().map(|t| t.to_json()),
            "residual": self.oracle_residual,
            "branch_note": self.branch_note,
        })
    }
}

// ------------------------------------------------------------- extraction

/// Project `target` onto the span of `spanners` plus the central element.
/// Returns the coefficients (one per spanner, then the central one) or a
/// span-failure error naming the largest stray component.
fn project_span(algebra: &Algebra, target: &LieElement, spanners: &[&LieElement]) -> Result<Vec<CScalar>> {
    let n = algebra.dim();
    let mut cols: Vec<Vec<CScalar>> = spanners.iter().map(|s| s.dense(n)).collect();
    cols.push(LieElement::central_element().dense(n));
    let rhs = target.dense(n);
    let (coeffs, residual) = crate::linalg::lstsq(&cols, &rhs, 1e-12);
    let scale = target.coeff_norm().max(1.0);
    if residual > SPAN_TOL * scale {
        // name the worst offending generator
        let mut resid_el = target.clone();
        for (k, s) in spanners.iter().enumerate() {
            resid_el = resid_el.add_scaled(-coeffs[k], s);
        }
        resid_el.central -= coeffs[spanners.len()];
        let (component, magnitude) = resid_el
            .coeffs
            .iter()
            .map(|(&i, v)| (algebra.generator_name(i).to_string(), v.norm()))
            .chain(std::iter::once(("I".to_string(), resid_el.central.norm())))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        return Err(Error::SpanFailure { component, magnitude });
    }
    Ok(coeffs)
}

/// Extract the ten parameters of a three-factor problem:
/// `[x,y]` over span{x, y, I}, `[y,z]` over span{y, z, I} (with the y coefficient
/// first), and `[x,z]` over span{x, y, z, I}.
pub fn extract_triple_params(algebra: &Algebra, x: &LieElement, y: &LieElement, z: &LieElement) -> Result<TripleParams> {
    let k_xy = algebra.commutator(x, y)?;
    let co = project_span(algebra, &k_xy, &[x, y])?;
    let (u, v, c) = (co[0], co[1], co[2]);
    let k_yz = algebra.commutator(y, z)?;
    let co = project_span(algebra, &k_yz, &[y, z])?;
    let (w, zz, d) = (co[0], co[1], co[2]);
    let k_xz = algebra.commutator(x, z)?;
    let co = project_span(algebra, &k_xz, &[x, y, z])?;
    let (m, n, p, e) = (co[0], co[1], co[2], co[3]);
    Ok(TripleParams { u, v, c, w, z: zz, d, m, n, p, e })
}

// ------------------------------------------------------------------ pairs

/// Closed form for exp(x)exp(y) when `[x,y]` = u x + v y + c I:
/// W = x + y + f(u,v) `[x,y]`.
pub fn bch_pair(x: &LieElement, y: &LieElement, algebra: &Algebra) -> Result<BCHResult> {
    if !x.is_finite() || !y.is_finite() {
        return Err(Error::NonFiniteInput("pair elements".into()));
    }
    let k = algebra.commutator(x, y)?;
    let co = project_span(algebra, &k, &[x, y])?;
    let (u, v) = (co[0], co[1]);
    let f = f_kernel(u, v)?;
    let w = x.add(y).add_scaled(f, &k);
    Ok(BCHResult::plain(w))
}

// --------------------------------------------------------------- the alpha
// equation

/// Absolute residual of the alpha equation
/// h_a(u,v) [h_b(z,w)(u+z) + g_b(z,w)(m-w)]
///   + g_a(u,v) [h_b(z,w)(p-v) - g_b(z,w) n] = 0.
pub fn fonda_residual(alpha: CScalar, t: &TripleParams) -> Result<f64> {
    let beta = 1.0 - alpha;
    let (ga, ha, _) = ghl_coeffs(alpha, t.u, t.v)?;
    let (gb, hb, _) = ghl_coeffs(beta, t.z, t.w)?;
    let lhs = ha * (hb * (t.u + t.z) + gb * (t.m - t.w)) + ga * (hb * (t.p - t.v) - gb * t.n);
    Ok(lhs.norm())
}

/// Closed-form solutions of the alpha equation for the three boxed types.
///
/// For type 4 the equation reduces to a quadratic in x^u = e^{alpha u}:
///   x^{2u} + b x^u + e^{u+v-w} = 0,
///   b = (n u / 2) s(v) s(w) e^{(2u+v-w)/2} - e^u - e^v + e^{u+v} - e^{u+v-w},
/// independent of the logarithm branch of alpha; alpha is recovered with the
/// principal branch. (The source box prints e^{(u+v-w)/2} in the n-term; that
/// variant fails the alpha equation whenever n != 0 and both forms agree at
/// n = 0, so the e^{(2u+v-w)/2} form is used and gated on the residual.)
pub fn solve_alpha(t: &TripleParams, tag: &TypeTag) -> Result<Vec<AlphaSolution>> {
    if !t.is_finite() {
        return Err(Error::NonFiniteInput("triple parameters".into()));
    }
    match tag.subcase.as_str() {
        "1c-i" => {
            let sv = s_kernel(t.v)?;
            let sw = s_kernel(t.w)?;
            let swv = s_kernel(t.w - t.v)?;
            let den = (t.m - t.w) * (t.w - t.v) * swv;
            let scale = t.m.norm().max(t.w.norm()).max(t.v.norm()).max(1.0);
            if (t.m - t.w).norm() < 1e-12 * scale || ((t.w - t.v) * swv).norm() < 1e-12 * scale {
                return Err(Error::DegenerateCase {
                    context: "type 1c-i alpha".into(),
                    detail: format!(
                        "vanishing denominator (m-w = {}, (w-v)s(w-v) = {})",
                        t.m - t.w,
                        (t.w - t.v) * swv
                    ),
                });
            }
            let num = t.n * sv * t.w * sw - (t.w / 2.0).exp() * t.v * sv * (t.m - t.w);
            let alpha = num / den;
            let residual_fonda = fonda_residual(alpha, t)?;
            if residual_fonda > FONDA_TOL {
                return Err(Error::DegenerateCase {
                    context: "type 1c-i alpha".into(),
                    detail: format!("box formula fails the alpha equation (residual {residual_fonda:.3e})"),
                });
            }
            Ok(vec![AlphaSolution {
                alpha,
                beta: 1.0 - alpha,
                branch: "1c-i".into(),
                residual_fonda,
                quadratic: None,
            }])
        }
        "4" => {
            let sv = s_kernel(t.v)?;
            let sw = s_kernel(t.w)?;
            let b = (t.n * t.u / 2.0) * sv * sw * ((2.0 * t.u + t.v - t.w) / 2.0).exp()
                - t.u.exp()
                - t.v.exp()
                + (t.u + t.v).exp()
                - (t.u + t.v - t.w).exp();
            let disc = (b * b - 4.0 * (t.u + t.v - t.w).exp()).sqrt();
            let roots = [(-b + disc) / 2.0, (-b - disc) / 2.0];
            let mut out = Vec::new();
            let mut rejected = [f64::INFINITY; 2];
            for (k, &xu) in roots.iter().enumerate() {
                if xu.norm() < 1e-300 {
                    continue;
                }
                let alpha = xu.ln() / t.u;
                let residual_fonda = fonda_residual(alpha, t)?;
                if residual_fonda <= FONDA_TOL {
                    out.push(AlphaSolution {
                        alpha,
                        beta: 1.0 - alpha,
                        branch: if k == 0 { "4+".into() } else { "4-".into() },
                        residual_fonda,
                        quadratic: Some((b, xu)),
                    });
                } else {
                    rejected[k] = residual_fonda;
                }
            }
            if out.is_empty() {
                return Err(Error::NoBranch(rejected[0], rejected[1]));
            }
            // deterministic order: smaller |Im alpha| first
            out.sort_by(|a, b| a.alpha.im.abs().total_cmp(&b.alpha.im.abs()));
            Ok(out)
        }
        "5" => {
            let mut out = Vec::new();
            for (alpha, label) in [(t.v / t.u, "5a"), (1.0 - t.w / t.z, "5b")] {
                let residual_fonda = fonda_residual(alpha, t)?;
                if residual_fonda > FONDA_TOL {
                    return Err(Error::DegenerateCase {
                        context: "type 5 alpha".into(),
                        detail: format!("solution {label} fails the alpha equation (residual {residual_fonda:.3e})"),
                    });
                }
                out.push(AlphaSolution {
                    alpha,
                    beta: 1.0 - alpha,
                    branch: label.into(),
                    residual_fonda,
                    quadratic: None,
                });
            }
            Ok(out)
        }
        other => Err(Error::UnsupportedType { subcase: other.to_string() }),
    }
}

// ----------------------------------------------------------------- triples

/// Assemble W for a given alpha: build the reassembled pair, check that its
/// commutator closes in VBV form, and apply the pair formula.
pub fn assemble_triple(
    x: &LieElement,
    y: &LieElement,
    z: &LieElement,
    t: &TripleParams,
    alpha: &AlphaSolution,
    algebra: &Algebra,
) -> Result<BCHResult> {
    let (ga, ha, la) = ghl_coeffs(alpha.alpha, t.u, t.v)?;
    let (gb, hb, lb) = ghl_coeffs(alpha.beta, t.z, t.w)?;

    let mut xt = x.scaled(ga).add_scaled(ha, y);
    xt.central += la * t.c;
    let mut yt = y.scaled(hb).add_scaled(gb, z);
    yt.central += lb * t.d;

    let u_t = hb * t.u + gb * t.m;
    let v_t = ga * t.p + ha * t.z;
    let c_t = (hb - gb * la * t.m) * t.c + (ha - ga * lb * t.p) * t.d + ga * gb * t.e;

    // the reassembled commutator must close in VBV form
    let k = algebra.commutator(&xt, &yt)?;
    let mut expected = xt.scaled(u_t).add_scaled(v_t, &yt);
    expected.central += c_t;
    let gap = k.sub(&expected).coeff_norm();
    let scale = k.coeff_norm().max(1.0);
    if gap > TILDE_TOL * scale {
        return Err(Error::DegenerateCase {
            context: "reassembled pair".into(),
            detail: format!("[Xt,Yt] misses the required form by {gap:.3e} (branch {})", alpha.branch),
        });
    }

    let f = f_kernel(u_t, v_t)?;
    let w = xt.add(&yt).add_scaled(f, &k);
    Ok(BCHResult {
        w,
        alpha_used: Some(alpha.clone()),
        tilde: Some(TildeParams { u_t, v_t, c_t }),
        oracle_residual: None,
        branch_note: None,
    })
}

/// Full three-exponential closed form for exp(x)exp(y)exp(z).
///
/// Extracts the ten commutator parameters, checks the Jacobi system,
/// classifies, solves the alpha equation for the boxed types and assembles
/// W. When `verify` is set the representation gates every surviving branch
/// and the smallest-residual one is returned.
pub fn bch_triple(
    x: &LieElement,
    y: &LieElement,
    z: &LieElement,
    algebra: &Algebra,
    verify: bool,
) -> Result<BCHResult> {
    // a vanishing factor reduces the problem to a two-factor product
    let zero_gate = 1e-14;
    let reduce = |a: &LieElement, b: &LieElement| -> Result<BCHResult> {
        let mut res = crate::closed_forms::pair_product(a, b, algebra)?;
        if verify {
            res.oracle_residual = Some(verify_product(&[a.clone(), b.clone()], &res.w, algebra)?);
        }
        Ok(res)
    };
    if y.coeff_norm() < zero_gate {
        return reduce(x, z);
    }
    if x.coeff_norm() < zero_gate {
        return reduce(y, z);
    }
    if z.coeff_norm() < zero_gate {
        return reduce(x, y);
    }
    let t = extract_triple_params(algebra, x, y, z)?;
    let (ok, residuals) = check_jacobi(&t, SPAN_TOL)?;
    if !ok {
        return Err(Error::JacobiViolation { residuals, tol: SPAN_TOL });
    }
    let tag = classify(t.u, t.v, t.c, t.w, t.z, t.d, DEFAULT_TOL)?;
    let candidates = solve_alpha(&t, &tag)?;

    let mut best: Option<BCHResult> = None;
    let mut last_err: Option<Error> = None;
    for alpha in &candidates {
        match assemble_triple(x, y, z, &t, alpha, algebra) {
            Ok(mut res) => {
                if verify {
                    let r = verify_product(&[x.clone(), y.clone(), z.clone()], &res.w, algebra)?;
                    res.oracle_residual = Some(r);
                    let better = match &best {
                        None => true,
                        Some(b) => r < b.oracle_residual.unwrap_or(f64::INFINITY),
                    };
                    if better {
                        best = Some(res);
                    }
                } else if best.is_none() {
                    best = Some(res);
                }
            }
            Err(e) => last_err = Some(e),
        }
    }
    best.ok_or_else(|| last_err.unwrap_or(Error::NoBranch(f64::INFINITY, f64::INFINITY)))
}

// ----------------------------------------------------------------- lemma 1

/// Outcome of the witness-mediated two-exponential formula. The candidate is
/// never trusted from the hypotheses alone: `verified` records whether the
/// representation oracle confirms it.
#[derive(Debug, Clone)]
pub struct Lemma1Report {
    pub candidate: BCHResult,
    pub params: TripleParams,
    pub residual: f64,
    pub verified: bool,
}

impl Lemma1Report {
    pub fn to_json(&self, algebra: &Algebra) -> Value {
        json!({
            "candidate": self.candidate.to_json(algebra),
            "params": self.params.to_json(),
            "residual": self.residual,
            "verified": self.verified,
        })
    }
}

/// Candidate closed form exp(x)exp(z) = exp(x + z + f(m,p)`[x,z]`) under the
/// witness conditions `[x,y]` in span{x,y,I}, `[y,z]` in span{y,z,I},
/// `[x,z]` in span{x,y,z,I}, always reported together with the oracle residual.
pub fn bch_pair_lemma1(
    x: &LieElement,
    z: &LieElement,
    witness_y: &LieElement,
    algebra: &Algebra,
) -> Result<Lemma1Report> {
    let t = extract_triple_params(algebra, x, witness_y, z)?;
    let (ok, residuals) = check_jacobi(&t, SPAN_TOL)?;
    if !ok {
        return Err(Error::JacobiViolation { residuals, tol: SPAN_TOL });
    }
    let k_xz = algebra.commutator(x, z)?;
    let f = f_kernel(t.m, t.p)?;
    let w = x.add(z).add_scaled(f, &k_xz);
    let residual = verify_product(&[x.clone(), z.clone()], &w, algebra)?;
    Ok(Lemma1Report {
        candidate: BCHResult {
            w,
            alpha_used: None,
            tilde: None,
            oracle_residual: Some(residual),
            branch_note: None,
        },
        params: t,
        residual,
        verified: residual < VERIFY_TOL,
    })
}

/// Scan the basis (and the central element) for witnesses usable in
/// `bch_pair_lemma1` with the given x, z.
pub fn find_witness(x: &LieElement, z: &LieElement, algebra: &Algebra) -> Result<Vec<LieElement>> {
    let mut out = Vec::new();
    let mut candidates: Vec<LieElement> =
        (0..algebra.dim()).map(LieElement::basis).collect();
    candidates.push(LieElement::central_element());
    for y in candidates {
        let t = match extract_triple_params(algebra, x, &y, z) {
            Ok(t) => t,
            Err(_) => continue,
        };
        if let Ok((true, _)) = check_jacobi(&t, SPAN_TOL) {
            out.push(y);
        }
    }
    Ok(out)
}

// ------------------------------------------------------------ helpers used
// by the CLI dispatcher

/// True when the element is a single step-generator term, returning the
/// root and coefficient.
pub fn single_step_term(el: &LieElement, algebra: &Algebra) -> Option<(crate::algebra::Root, CScalar)> {
    if el.central.norm() > 0.0 || el.coeffs.len() != 1 {
        return None;
    }
    let (&i, &coeff) = el.coeffs.iter().next()?;
    match &algebra.generators[i].kind {
        GeneratorKind::Step(r) => Some((r.clone(), coeff)),
        _ => None,
    }
}
