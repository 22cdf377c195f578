//! Independent verification layer: dense matrix exponentials and logarithms
//! in faithful representations, and a truncated BCH series evaluated inside
//! bracket-closed coefficient spaces. Every closed form in the crate is
//! certified against at least one of the two routes; they are deliberately
//! independent of the engine code they check.

use crate::algebra::{Algebra, LieElement, MAX_REP_DIM};
use crate::error::{Error, Result};
use crate::linalg::{frobenius, identity, one_norm, solve, CMat};
use crate::scalar::CScalar;
use num_complex::Complex64;

/// Padé(13,13) numerator coefficients (Higham 2005, scaling-and-squaring).
const PADE13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];

fn check_dim(m: &CMat) -> Result<usize> {
    let n = m.nrows();
    if n != m.ncols() {
        return Err(Error::Oracle(format!("matrix is {}x{}, not square", m.nrows(), m.ncols())));
    }
    if n > MAX_REP_DIM {
        return Err(Error::DimensionLimit(n, MAX_REP_DIM));
    }
    if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFiniteInput("matrix entry".into()));
    }
    Ok(n)
}

/// Matrix exponential by scaling and squaring with a Padé(13,13) core.
pub fn mat_exp(m: &CMat) -> Result<CMat> {
    let n = check_dim(m)?;
    if n == 0 {
        return Ok(m.clone());
    }
    let norm = one_norm(m);
    let theta13 = 5.37;
    let s = if norm > theta13 {
        (norm / theta13).log2().ceil() as u32
    } else {
        0
    };
    let scale = Complex64::new(1.0 / (1u64 << s) as f64, 0.0);
    let a = m.mapv(|z| z * scale);

    let eye = identity(n);
    let a2 = a.dot(&a);
    let a4 = a2.dot(&a2);
    let a6 = a2.dot(&a4);
    let c = |k: usize| Complex64::new(PADE13[k], 0.0);

    let u_inner = a6.mapv(|z| z * c(13)) + a4.mapv(|z| z * c(11)) + a2.mapv(|z| z * c(9));
    let u_poly = a6.dot(&u_inner)
        + a6.mapv(|z| z * c(7))
        + a4.mapv(|z| z * c(5))
        + a2.mapv(|z| z * c(3))
        + eye.mapv(|z| z * c(1));
    let u = a.dot(&u_poly);

    let v_inner = a6.mapv(|z| z * c(12)) + a4.mapv(|z| z * c(10)) + a2.mapv(|z| z * c(8));
    let v = a6.dot(&v_inner)
        + a6.mapv(|z| z * c(6))
        + a4.mapv(|z| z * c(4))
        + a2.mapv(|z| z * c(2))
        + eye.mapv(|z| z * c(0));

    let num = &v + &u;
    let den = &v - &u;
    let mut r = solve(&den, &num)
        .ok_or_else(|| Error::Oracle("Pade denominator singular in mat_exp".into()))?;
    for _ in 0..s {
        r = r.dot(&r);
    }
    Ok(r)
}

/// Principal matrix logarithm by inverse scaling and squaring: repeated
/// Denman-Beavers square roots until close to the identity, then a Gregory
/// series. Errors when the spectrum touches the closed negative real axis
/// (the iteration stalls or the round trip fails).
pub fn mat_log(m: &CMat) -> Result<CMat> {
    let n = check_dim(m)?;
    if n == 0 {
        return Ok(m.clone());
    }
    let branch = |detail: &str| Error::LogBranch(detail.to_string());

    let eye = identity(n);
    let mut a = m.clone();
    let mut sqrts = 0u32;
    while frobenius(&(&a - &eye)) > 0.25 {
        if sqrts >= 40 {
            return Err(branch("square-root iteration did not contract"));
        }
        // one Denman-Beavers run for sqrt(a)
        let mut y = a.clone();
        let mut z = identity(n);
        let mut converged = false;
        for _ in 0..60 {
            let y_inv = solve(&y, &eye).ok_or_else(|| branch("singular iterate (eigenvalue on the negative real axis?)"))?;
            let z_inv = solve(&z, &eye).ok_or_else(|| branch("singular iterate (eigenvalue on the negative real axis?)"))?;
            let y_next = (&y + &z_inv).mapv(|v| v * 0.5);
            let z_next = (&z + &y_inv).mapv(|v| v * 0.5);
            let delta = frobenius(&(&y_next - &y));
            y = y_next;
            z = z_next;
            if delta < 1e-15 * frobenius(&y).max(1.0) {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(branch("Denman-Beavers did not converge"));
        }
        a = y;
        sqrts += 1;
    }

    // log(I + E) with ||E|| <= 0.25 by the alternating power series
    let e = &a - &eye;
    let mut term = e.clone();
    let mut acc = e.clone();
    for k in 2..60 {
        term = term.dot(&e);
        let coeff = Complex64::new(if k % 2 == 0 { -1.0 } else { 1.0 } / k as f64, 0.0);
        acc = acc + term.mapv(|z| z * coeff);
        if frobenius(&term) / (k as f64) < 1e-18 {
            break;
        }
    }
    let factor = Complex64::new((1u64 << sqrts) as f64, 0.0);
    let result = acc.mapv(|z| z * factor);

    // round-trip gate: exp(log(m)) must reproduce m
    let back = mat_exp(&result)?;
    let rel = frobenius(&(&back - m)) / frobenius(m).max(1e-300);
    if rel > 1e-10 {
        return Err(branch(&format!("round trip failed with relative error {rel:.3e}")));
    }
    Ok(result)
}

/// Relative Frobenius residual of prod_i exp(rep(factor_i)) against
/// exp(rep(w)) in the algebra's representation.
pub fn verify_product(factors: &[LieElement], w: &LieElement, algebra: &Algebra) -> Result<f64> {
    let mut prod = identity(algebra.rep_dim);
    for f in factors {
        prod = prod.dot(&mat_exp(&algebra.represent(f)?)?);
    }
    let expw = mat_exp(&algebra.represent(w)?)?;
    Ok(frobenius(&(&prod - &expw)) / frobenius(&prod).max(1e-300))
}

// --------------------------------------------------------------- closures

/// A finite bracket closure over labeled basis vectors, the substrate for the
/// series oracle when no matrix representation exists. The last basis slot is
/// always the central element.
#[derive(Debug, Clone)]
pub struct AbstractClosure {
    pub labels: Vec<&'static str>,
    /// table[i][j] = coefficient vector of `[b_i, b_j]`
    table: Vec<Vec<Vec<CScalar>>>,
}

impl AbstractClosure {
    /// Closure on (X, Y, I) from pair parameters `[X,Y]` = uX + vY + cI.
    pub fn pair(u: CScalar, v: CScalar, c: CScalar) -> Result<Self> {
        let dim = 3;
        let mut table = vec![vec![vec![Complex64::new(0.0, 0.0); dim]; dim]; dim];
        table[0][1] = vec![u, v, c];
        table[1][0] = vec![-u, -v, -c];
        let closure = AbstractClosure { labels: vec!["X", "Y", "I"], table };
        closure.check_jacobi_residual(1e-10)?;
        Ok(closure)
    }

    /// Closure on (X, Y, Z, I) from full triple parameters. The Jacobi
    /// residual of the closure is exactly the residual vector of the linear
    /// system, so jacobi-consistent parameters are required.
    pub fn triple(t: &crate::jacobi::TripleParams) -> Result<Self> {
        let dim = 4;
        let zero = Complex64::new(0.0, 0.0);
        let mut table = vec![vec![vec![zero; dim]; dim]; dim];
        let xy = vec![t.u, t.v, zero, t.c];
        let yz = vec![zero, t.w, t.z, t.d];
        let xz = vec![t.m, t.n, t.p, t.e];
        let neg = |v: &[CScalar]| v.iter().map(|&x| -x).collect::<Vec<_>>();
        table[0][1] = xy.clone();
        table[1][0] = neg(&xy);
        table[1][2] = yz.clone();
        table[2][1] = neg(&yz);
        table[0][2] = xz.clone();
        table[2][0] = neg(&xz);
        let closure = AbstractClosure { labels: vec!["X", "Y", "Z", "I"], table };
        closure.check_jacobi_residual(1e-10)?;
        Ok(closure)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn bracket(&self, a: &[CScalar], b: &[CScalar]) -> Vec<CScalar> {
        let dim = self.dim();
        let mut out = vec![Complex64::new(0.0, 0.0); dim];
        for i in 0..dim {
            if a[i].norm() == 0.0 {
                continue;
            }
            for j in 0..dim {
                if b[j].norm() == 0.0 {
                    continue;
                }
                let k = a[i] * b[j];
                for (o, t) in out.iter_mut().zip(&self.table[i][j]) {
                    *o += k * t;
                }
            }
        }
        out
    }

    /// Largest Jacobi-identity residual over all basis triples.
    fn check_jacobi_residual(&self, tol: f64) -> Result<()> {
        let dim = self.dim();
        let basis = |i: usize| {
            let mut v = vec![Complex64::new(0.0, 0.0); dim];
            v[i] = Complex64::new(1.0, 0.0);
            v
        };
        let mut worst = 0.0f64;
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let a = basis(i);
                    let b = basis(j);
                    let c = basis(k);
                    let mut total = self.bracket(&a, &self.bracket(&b, &c));
                    for (t, v) in total
                        .iter_mut()
                        .zip(self.bracket(&b, &self.bracket(&c, &a)))
                    {
                        *t += v;
                    }
                    for (t, v) in total
                        .iter_mut()
                        .zip(self.bracket(&c, &self.bracket(&a, &b)))
                    {
                        *t += v;
                    }
                    worst = worst.max(total.iter().map(|z| z.norm()).fold(0.0, f64::max));
                }
            }
        }
        if worst > tol {
            return Err(Error::Oracle(format!(
                "bracket table violates the Jacobi identity (residual {worst:.3e})"
            )));
        }
        Ok(())
    }
}

/// Accumulate sum over compositions k_1 + ... + k_parts = budget of the
/// nested brackets [z_{k_1}, [... `[z_{k_parts}, seed]` ...]], sharing the
/// inner partial brackets across compositions with a common suffix.
fn nested_bracket_sum(
    closure: &AbstractClosure,
    zs: &[Vec<CScalar>],
    budget: usize,
    parts: usize,
    seed: &[CScalar],
    tot: &mut [CScalar],
) {
    if parts == 0 || parts > budget {
        return;
    }
    if parts == 1 {
        let v = closure.bracket(&zs[budget], seed);
        for (t, x) in tot.iter_mut().zip(&v) {
            *t += x;
        }
        return;
    }
    // choose the innermost index first; remaining parts each need >= 1
    for k in 1..=(budget - (parts - 1)) {
        let inner = closure.bracket(&zs[k], seed);
        nested_bracket_sum(closure, zs, budget - k, parts - 1, &inner, tot);
    }
}

/// Bernoulli numbers B_2, B_4, ..., B_20.
const BERNOULLI_EVEN: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];

/// Outcome of a truncated series evaluation.
#[derive(Debug, Clone)]
pub struct SeriesResult {
    pub value: Vec<CScalar>,
    /// Norms of the graded terms z_1, z_2, ...
    pub term_norms: Vec<f64>,
    /// False when the term norms stopped decreasing beyond order 6.
    pub converged: bool,
}

/// Truncated BCH sum log(e^a e^b) inside the closure's coefficient space,
/// via the graded recursion
///   (n+1) z_{n+1} = 1/2 `[a-b, z_n]`
///     + sum_{p>=1, 2p<=n} B_{2p}/(2p)! sum_{k_1+..+k_{2p}=n} [z_{k_1}, [... `[z_{k_{2p}}, a+b]` ...]]
/// whose order-2 truncation is a + b + `[a,b]`/2.
pub fn dynkin_bch(a: &[CScalar], b: &[CScalar], closure: &AbstractClosure, order: usize) -> Result<SeriesResult> {
    if order == 0 || order > 20 {
        return Err(Error::Oracle(format!("series order {order} outside 1..=20")));
    }
    let dim = closure.dim();
    if a.len() != dim || b.len() != dim {
        return Err(Error::Oracle("coefficient vector length mismatch".into()));
    }
    let add = |x: &[CScalar], y: &[CScalar], s: f64| -> Vec<CScalar> {
        x.iter().zip(y).map(|(p, q)| p + q * s).collect()
    };
    let sum_ab = add(a, b, 1.0);
    let diff_ab = add(a, b, -1.0);

    let mut zs: Vec<Vec<CScalar>> = vec![vec![Complex64::new(0.0, 0.0); dim], sum_ab.clone()];
    for n in 1..order {
        let mut acc: Vec<CScalar> = closure
            .bracket(&diff_ab, &zs[n])
            .iter()
            .map(|z| z * 0.5)
            .collect();
        for p in 1..=(n / 2) {
            let mut coef = BERNOULLI_EVEN[p - 1];
            for k in 1..=(2 * p) {
                coef /= k as f64;
            }
            let mut tot = vec![Complex64::new(0.0, 0.0); dim];
            nested_bracket_sum(closure, &zs, n, 2 * p, &sum_ab, &mut tot);
            for (aa, t) in acc.iter_mut().zip(&tot) {
                *aa += t * coef;
            }
        }
        let scale = 1.0 / (n as f64 + 1.0);
        zs.push(acc.iter().map(|z| z * scale).collect());
    }

    let mut value = vec![Complex64::new(0.0, 0.0); dim];
    let mut term_norms = Vec::with_capacity(order);
    for zn in zs.iter().skip(1) {
        for (v, z) in value.iter_mut().zip(zn) {
            *v += z;
        }
        term_norms.push(zn.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt());
    }
    // decrease heuristic beyond order 6, tolerating single-step wiggles from
    // near-vanishing odd/even terms
    let scale = term_norms.iter().copied().fold(1e-300, f64::max);
    let mut converged = true;
    for k in 6..term_norms.len() {
        let recent = term_norms[k - 1].max(term_norms[k - 2]);
        if term_norms[k] > recent && term_norms[k] > 1e-14 * scale {
            converged = false;
        }
    }
    Ok(SeriesResult { value, term_norms, converged })
}
