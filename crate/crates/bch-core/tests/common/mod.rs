//! Shared helpers for the integration and acceptance suites: seeded complex
//! sampling, an independent brute-force solver for the Jacobi linear system,
//! and construction of faithful matrix pairs with a prescribed commutator.

use bch_core::linalg::{frobenius, lstsq, solve, CMat};
use bch_core::CScalar;
use ndarray::Array2;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn c(re: f64, im: f64) -> CScalar {
    Complex64::new(re, im)
}

/// Uniform draw from the complex disk of the given radius.
pub fn disk(rng: &mut ChaCha8Rng, radius: f64) -> CScalar {
    loop {
        let z = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        if z.norm() <= 1.0 {
            return z * radius;
        }
    }
}

/// Brute-force outcome for the Jacobi system in (m, n, p, e).
pub struct BruteForce {
    /// None when the system is inconsistent.
    pub particular: Option<[CScalar; 4]>,
    pub nullity: usize,
}

/// Independent dense solve of the 4x4 linear system
///   z m                      = -u w
///   v m + (z-u) n - w p      = 0
///             u p            = -z v
///   c m       - d p + (z-u) e = d v - c w
/// by rank-revealing least squares; nothing here shares code with
/// `solve_jacobi`'s per-case formulas.
pub fn brute_force_jacobi(u: CScalar, v: CScalar, cc: CScalar, w: CScalar, z: CScalar, d: CScalar) -> BruteForce {
    let zero = c(0.0, 0.0);
    let cols: Vec<Vec<CScalar>> = vec![
        vec![z, v, zero, cc],          // m column
        vec![zero, z - u, zero, zero], // n column
        vec![zero, -w, u, -d],         // p column
        vec![zero, zero, zero, z - u], // e column
    ];
    let rhs = vec![-u * w, zero, -z * v, d * v - cc * w];

    let rank = numeric_rank(&cols, 1e-9);
    let (x, res) = lstsq(&cols, &rhs, 1e-9);
    let scale = rhs.iter().map(|z| z.norm()).fold(1.0f64, f64::max);
    if res > 1e-8 * scale {
        return BruteForce { particular: None, nullity: 4 - rank };
    }
    BruteForce {
        particular: Some([x[0], x[1], x[2], x[3]]),
        nullity: 4 - rank,
    }
}

fn numeric_rank(cols: &[Vec<CScalar>], tol: f64) -> usize {
    // modified Gram-Schmidt with column pivoting, counting survivors
    let mut q: Vec<Vec<CScalar>> = cols.to_vec();
    let n = q[0].len();
    let norm = |v: &[CScalar]| v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let scale = q.iter().map(|col| norm(col)).fold(0.0f64, f64::max).max(1.0);
    let mut rank = 0;
    for step in 0..q.len() {
        let (best, best_norm) = (step..q.len())
            .map(|j| (j, norm(&q[j])))
            .fold((step, -1.0), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
        q.swap(step, best);
        if best_norm < tol * scale {
            break;
        }
        rank += 1;
        let head = q[step].clone();
        for col in q.iter_mut().skip(step + 1) {
            let mut dot = c(0.0, 0.0);
            for i in 0..n {
                dot += head[i].conj() * col[i];
            }
            let dot = dot / c(best_norm * best_norm, 0.0);
            for i in 0..n {
                let delta = dot * head[i];
                col[i] -= delta;
            }
        }
    }
    rank
}

/// Construct a random faithful 3x3 pair (A, B) with `[A, B]` = u A + v B + c I,
/// by solving the Sylvester-type equation for A at a random B.
pub fn vbv_matrix_pair(u: CScalar, v: CScalar, cc: CScalar, rng: &mut ChaCha8Rng) -> (CMat, CMat) {
    loop {
        let mut b = Array2::<Complex64>::zeros((3, 3));
        for i in 0..3 {
            for j in 0..3 {
                b[[i, j]] = disk(rng, 1.0);
            }
        }
        // linear operator L(A) = AB - BA - uA, assembled column by column
        let mut op = Array2::<Complex64>::zeros((9, 9));
        for col in 0..9 {
            let mut basis = Array2::<Complex64>::zeros((3, 3));
            basis[[col / 3, col % 3]] = c(1.0, 0.0);
            let image = basis.dot(&b) - b.dot(&basis) - basis.mapv(|zv| zv * u);
            for row in 0..9 {
                op[[row, col]] = image[[row / 3, row % 3]];
            }
        }
        let mut rhs = Array2::<Complex64>::zeros((9, 1));
        for row in 0..9 {
            let (i, j) = (row / 3, row % 3);
            rhs[[row, 0]] = v * b[[i, j]] + if i == j { cc } else { c(0.0, 0.0) };
        }
        let Some(avec) = solve(&op, &rhs) else { continue };
        let mut a = Array2::<Complex64>::zeros((3, 3));
        for row in 0..9 {
            a[[row / 3, row % 3]] = avec[[row, 0]];
        }
        // confirm the commutator relation and non-triviality
        let k = a.dot(&b) - b.dot(&a);
        let target = a.mapv(|zv| zv * u)
            + b.mapv(|zv| zv * v)
            + Array2::from_diag_elem(3, cc);
        if frobenius(&(&k - &target)) < 1e-10 && frobenius(&a) > 1e-3 {
            return (a, b);
        }
    }
}
