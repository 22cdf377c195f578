//! Small dense complex linear algebra used by the algebra loader, the
//! parameter extraction, and the matrix oracle. Everything here is desk
//! scale (dimension <= 16 plus squares of that for Sylvester-style solves),
//! so plain Gaussian elimination with partial pivoting is enough.

use ndarray::Array2;
use num_complex::Complex64;

pub type CMat = Array2<Complex64>;

pub fn identity(n: usize) -> CMat {
    Array2::from_diag_elem(n, Complex64::new(1.0, 0.0))
}

pub fn frobenius(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn one_norm(m: &CMat) -> f64 {
    let mut max = 0.0f64;
    for j in 0..m.ncols() {
        let s: f64 = (0..m.nrows()).map(|i| m[[i, j]].norm()).sum();
        max = max.max(s);
    }
    max
}

/// Solve A X = B by Gaussian elimination with partial pivoting.
/// Returns None when a pivot collapses (singular to working precision).
pub fn solve(a: &CMat, b: &CMat) -> Option<CMat> {
    let n = a.nrows();
    assert_eq!(n, a.ncols());
    assert_eq!(n, b.nrows());
    let m = b.ncols();
    let mut aug = Array2::<Complex64>::zeros((n, n + m));
    aug.slice_mut(ndarray::s![.., ..n]).assign(a);
    aug.slice_mut(ndarray::s![.., n..]).assign(b);

    let scale = one_norm(a).max(1e-300);
    for col in 0..n {
        let mut max_val = 0.0;
        let mut max_row = col;
        for row in col..n {
            let v = aug[[row, col]].norm();
            if v > max_val {
                max_val = v;
                max_row = row;
            }
        }
        if max_val < 1e-14 * scale {
            return None;
        }
        if max_row != col {
            for j in 0..(n + m) {
                aug.swap([col, j], [max_row, j]);
            }
        }
        let pivot = aug[[col, col]];
        for row in (col + 1)..n {
            let factor = aug[[row, col]] / pivot;
            for j in col..(n + m) {
                let v = aug[[col, j]];
                aug[[row, j]] -= factor * v;
            }
        }
    }
    let mut x = Array2::<Complex64>::zeros((n, m));
    for col in (0..n).rev() {
        let pivot = aug[[col, col]];
        for j in 0..m {
            let mut sum = aug[[col, n + j]];
            for k in (col + 1)..n {
                sum -= aug[[col, k]] * x[[k, j]];
            }
            x[[col, j]] = sum / pivot;
        }
    }
    Some(x)
}

/// Least squares min ||A x - b|| over complex columns, rank-revealing via
/// column-pivoted modified Gram-Schmidt. Columns judged dependent (norm below
/// `rank_tol` times the largest original column) get coefficient zero.
/// Returns (x, residual_norm).
pub fn lstsq(columns: &[Vec<Complex64>], rhs: &[Complex64], rank_tol: f64) -> (Vec<Complex64>, f64) {
    let k = columns.len();
    let n = rhs.len();
    let mut q: Vec<Vec<Complex64>> = columns.to_vec();
    // r[step][orig] keys the R factor by the original column index, so the
    // entries stay valid as the pivot order evolves
    let mut r = vec![vec![Complex64::new(0.0, 0.0); k]; k];
    let mut diag = vec![Complex64::new(0.0, 0.0); k];
    let mut order: Vec<usize> = (0..k).collect();
    let norm = |v: &[Complex64]| v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let scale0 = columns.iter().map(|c| norm(c)).fold(0.0f64, f64::max).max(1e-300);

    let mut rank = 0usize;
    for step in 0..k {
        // pick the remaining column with the largest norm
        let (best, best_norm) = (step..k)
            .map(|j| (j, norm(&q[order[j]])))
            .fold((step, -1.0), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
        order.swap(step, best);
        if best_norm < rank_tol * scale0 {
            break;
        }
        let col = order[step];
        let nrm = Complex64::new(best_norm, 0.0);
        for i in 0..n {
            q[col][i] /= nrm;
        }
        diag[step] = nrm;
        for &other in order.iter().skip(step + 1) {
            let mut dot = Complex64::new(0.0, 0.0);
            for i in 0..n {
                dot += q[col][i].conj() * q[other][i];
            }
            r[step][other] = dot;
            for i in 0..n {
                let d = dot * q[col][i];
                q[other][i] -= d;
            }
        }
        rank = step + 1;
    }

    // project rhs onto the kept Q columns
    let mut qtb = vec![Complex64::new(0.0, 0.0); rank];
    let mut resid: Vec<Complex64> = rhs.to_vec();
    for step in 0..rank {
        let col = order[step];
        let mut dot = Complex64::new(0.0, 0.0);
        for i in 0..n {
            dot += q[col][i].conj() * rhs[i];
        }
        qtb[step] = dot;
        for i in 0..n {
            let d = dot * q[col][i];
            resid[i] -= d;
        }
    }
    // back-substitute R y = Q^H b over the kept columns; `order` is final here
    let mut y = vec![Complex64::new(0.0, 0.0); rank];
    for step in (0..rank).rev() {
        let mut sum = qtb[step];
        for j in (step + 1)..rank {
            sum -= r[step][order[j]] * y[j];
        }
        y[step] = sum / diag[step];
    }
    let mut x = vec![Complex64::new(0.0, 0.0); k];
    for step in 0..rank {
        x[order[step]] = y[step];
    }
    (x, norm(&resid))
}
