//! One-sided Jacobi SVD and complex LU, used for kernels and inverse iteration.

use num_complex::Complex64;

use crate::matrix::ComplexMatrix;

pub(crate) type CVec = Vec<Complex64>;

fn zero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

pub(crate) fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

/// `u^H v`.
pub(crate) fn dot(u: &[Complex64], v: &[Complex64]) -> Complex64 {
    u.iter().zip(v).map(|(a, b)| a.conj() * b).sum()
}

pub(crate) struct Svd {
    pub sigma: Vec<f64>,
    /// Right singular vectors as columns.
    pub v: Vec<CVec>,
}

/// Hestenes one-sided Jacobi: rotates columns of `a` until mutually orthogonal.
pub(crate) fn jacobi_svd(a: &ComplexMatrix) -> Svd {
    let (rows, n) = (a.rows(), a.cols());
    let mut cols: Vec<CVec> = (0..n).map(|j| (0..rows).map(|i| a[(i, j)]).collect()).collect();
    let mut v: Vec<CVec> = (0..n)
        .map(|j| {
            let mut e = vec![zero(); n];
            e[j] = Complex64::new(1.0, 0.0);
            e
        })
        .collect();
    let eps = f64::EPSILON;
    for _sweep in 0..80 {
        let mut rotated = false;
        for i in 0..n {
            for j in i + 1..n {
                let alpha: f64 = cols[i].iter().map(|x| x.norm_sqr()).sum();
                let beta: f64 = cols[j].iter().map(|x| x.norm_sqr()).sum();
                let gamma = dot(&cols[i], &cols[j]);
                let g = gamma.norm();
                if g == 0.0 || g <= eps * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let phase = (gamma / g).conj();
                let zeta = (beta - alpha) / (2.0 * g);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                rotate(&mut cols, i, j, phase, c, s);
                rotate(&mut v, i, j, phase, c, s);
            }
        }
        if !rotated {
            break;
        }
    }
    Svd {
        sigma: cols.iter().map(|c| norm(c)).collect(),
        v,
    }
}

fn rotate(cols: &mut [CVec], i: usize, j: usize, phase: Complex64, c: f64, s: f64) {
    let (left, right) = cols.split_at_mut(j);
    let (ci, cj) = (&mut left[i], &mut right[0]);
    for (x, y) in ci.iter_mut().zip(cj.iter_mut()) {
        let xi = *x;
        let xj = *y * phase;
        *x = xi * c - xj * s;
        *y = xi * s + xj * c;
    }
}

/// Orthonormal basis of the numerical kernel: right singular vectors whose
/// singular value is at most `tol * (1 + ||m||_inf)`.
pub fn null_space_basis(m: &ComplexMatrix, tol: f64) -> Vec<CVec> {
    let threshold = tol * (1.0 + m.norm_inf());
    let svd = jacobi_svd(m);
    svd.sigma
        .iter()
        .zip(svd.v)
        .filter(|(s, _)| **s <= threshold)
        .map(|(_, v)| v)
        .collect()
}

/// Numerical rank with the same threshold convention as [`null_space_basis`].
pub fn numerical_rank(m: &ComplexMatrix, tol: f64) -> usize {
    m.cols() - null_space_basis(m, tol).len()
}

/// LU with partial pivoting; tiny pivots are replaced so near-singular shifts still solve.
pub(crate) struct Lu {
    n: usize,
    a: Vec<Complex64>,
    perm: Vec<usize>,
}

impl Lu {
    pub(crate) fn new(m: &ComplexMatrix) -> Lu {
        let n = m.rows();
        let mut a: Vec<Complex64> = (0..n * n).map(|k| m[(k / n, k % n)]).collect();
        let mut perm: Vec<usize> = (0..n).collect();
        let floor = f64::EPSILON * (1.0 + m.norm_inf());
        for k in 0..n {
            let p = (k..n)
                .max_by(|&x, &y| a[x * n + k].norm().total_cmp(&a[y * n + k].norm()))
                .unwrap_or(k);
            if p != k {
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                perm.swap(k, p);
            }
            if a[k * n + k].norm() < floor {
                a[k * n + k] = Complex64::new(floor, 0.0);
            }
            let pivot = a[k * n + k];
            for i in k + 1..n {
                let f = a[i * n + k] / pivot;
                a[i * n + k] = f;
                for j in k + 1..n {
                    let ukj = a[k * n + j];
                    a[i * n + j] -= f * ukj;
                }
            }
        }
        Lu { n, a, perm }
    }

    pub(crate) fn solve(&self, b: &[Complex64]) -> CVec {
        let n = self.n;
        let mut x: CVec = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            for j in 0..i {
                let l = self.a[i * n + j];
                x[i] = x[i] - l * x[j];
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                let u = self.a[i * n + j];
                x[i] = x[i] - u * x[j];
            }
            x[i] /= self.a[i * n + i];
        }
        x
    }
}
