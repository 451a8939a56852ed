//! Eigenvalues of a real dense matrix: balancing, Householder reduction to
//! upper Hessenberg form, then Francis double-shift QR with deflation.

use num_complex::Complex64;

use crate::error::{Error, Result};

struct Work {
    n: usize,
    a: Vec<f64>,
}

impl Work {
    #[inline]
    fn at(&self, i: isize, j: isize) -> f64 {
        self.a[i as usize * self.n + j as usize]
    }

    #[inline]
    fn set(&mut self, i: isize, j: isize, x: f64) {
        self.a[i as usize * self.n + j as usize] = x;
    }

    #[inline]
    fn sub(&mut self, i: isize, j: isize, x: f64) {
        self.a[i as usize * self.n + j as usize] -= x;
    }
}

/// Diagonal similarity scaling by powers of two so that row and column norms match.
fn balance(w: &mut Work) {
    const RADIX: f64 = 2.0;
    let n = w.n as isize;
    let sqrdx = RADIX * RADIX;
    let mut done = false;
    while !done {
        done = true;
        for i in 0..n {
            let (mut r, mut c) = (0.0, 0.0);
            for j in 0..n {
                if j != i {
                    c += w.at(j, i).abs();
                    r += w.at(i, j).abs();
                }
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            let mut g = r / RADIX;
            while c < g {
                f *= RADIX;
                c *= sqrdx;
            }
            g = r * RADIX;
            while c > g {
                f /= RADIX;
                c /= sqrdx;
            }
            if (c + r) / f < 0.95 * s {
                done = false;
                let inv = 1.0 / f;
                for j in 0..n {
                    w.set(i, j, w.at(i, j) * inv);
                    w.set(j, i, w.at(j, i) * f);
                }
            }
        }
    }
}

fn hessenberg(w: &mut Work) {
    let n = w.n as isize;
    let mut ort = vec![0.0; w.n];
    for m in 1..n - 1 {
        let scale: f64 = (m..n).map(|i| w.at(i, m - 1).abs()).sum();
        if scale == 0.0 {
            continue;
        }
        let mut h = 0.0;
        for i in (m..n).rev() {
            ort[i as usize] = w.at(i, m - 1) / scale;
            h += ort[i as usize] * ort[i as usize];
        }
        let mut g = h.sqrt();
        if ort[m as usize] > 0.0 {
            g = -g;
        }
        h -= ort[m as usize] * g;
        ort[m as usize] -= g;
        for j in m..n {
            let f: f64 = (m..n).map(|i| ort[i as usize] * w.at(i, j)).sum::<f64>() / h;
            for i in m..n {
                w.sub(i, j, f * ort[i as usize]);
            }
        }
        for i in 0..n {
            let f: f64 = (m..n).map(|j| ort[j as usize] * w.at(i, j)).sum::<f64>() / h;
            for j in m..n {
                w.sub(i, j, f * ort[j as usize]);
            }
        }
        w.set(m, m - 1, scale * g);
        for i in m + 1..n {
            w.set(i, m - 1, 0.0);
        }
    }
}

fn sign(a: f64, b: f64) -> f64 {
    if b >= 0.0 {
        a.abs()
    } else {
        -a.abs()
    }
}

fn hqr(w: &mut Work) -> Result<Vec<Complex64>> {
    let n = w.n as isize;
    let cap = 30 * w.n.max(1);
    let eps = f64::EPSILON;
    let mut out = vec![Complex64::new(0.0, 0.0); w.n];
    let mut anorm = 0.0;
    for i in 0..n {
        for j in (i - 1).max(0)..n {
            anorm += w.at(i, j).abs();
        }
    }
    let mut nn = n - 1;
    let mut t = 0.0;
    let mut its = 0usize;
    let mut total = 0usize;
    while nn >= 0 {
        let mut l = nn;
        while l >= 1 {
            let mut s = w.at(l - 1, l - 1).abs() + w.at(l, l).abs();
            if s == 0.0 {
                s = anorm;
            }
            if w.at(l, l - 1).abs() <= eps * s {
                w.set(l, l - 1, 0.0);
                break;
            }
            l -= 1;
        }
        let mut x = w.at(nn, nn);
        if l == nn {
            out[nn as usize] = Complex64::new(x + t, 0.0);
            nn -= 1;
            its = 0;
            continue;
        }
        let mut y = w.at(nn - 1, nn - 1);
        let mut ww = w.at(nn, nn - 1) * w.at(nn - 1, nn);
        if l == nn - 1 {
            let p = 0.5 * (y - x);
            let q = p * p + ww;
            let mut z = q.abs().sqrt();
            x += t;
            if q >= 0.0 {
                z = p + sign(z, p);
                let hi = x + z;
                let lo = if z != 0.0 { x - ww / z } else { hi };
                out[(nn - 1) as usize] = Complex64::new(hi, 0.0);
                out[nn as usize] = Complex64::new(lo, 0.0);
            } else {
                out[(nn - 1) as usize] = Complex64::new(x + p, -z);
                out[nn as usize] = Complex64::new(x + p, z);
            }
            nn -= 2;
            its = 0;
            continue;
        }
        if total >= cap {
            return Err(Error::NoConvergence(cap));
        }
        if its > 0 && its.is_multiple_of(10) {
            t += x;
            for i in 0..=nn {
                w.sub(i, i, x);
            }
            let s = w.at(nn, nn - 1).abs() + w.at(nn - 1, nn - 2).abs();
            x = 0.75 * s;
            y = x;
            ww = -0.4375 * s * s;
        }
        its += 1;
        total += 1;

        let (mut p, mut q, mut r, mut z);
        let mut m = nn - 2;
        loop {
            z = w.at(m, m);
            r = x - z;
            let s = y - z;
            p = (r * s - ww) / w.at(m + 1, m) + w.at(m, m + 1);
            q = w.at(m + 1, m + 1) - z - r - s;
            r = w.at(m + 2, m + 1);
            let s = p.abs() + q.abs() + r.abs();
            p /= s;
            q /= s;
            r /= s;
            if m == l {
                break;
            }
            let u = w.at(m, m - 1).abs() * (q.abs() + r.abs());
            let v = p.abs() * (w.at(m - 1, m - 1).abs() + z.abs() + w.at(m + 1, m + 1).abs());
            if u <= eps * v {
                break;
            }
            m -= 1;
        }
        for i in m + 2..=nn {
            w.set(i, i - 2, 0.0);
            if i != m + 2 {
                w.set(i, i - 3, 0.0);
            }
        }
        for k in m..nn {
            if k != m {
                p = w.at(k, k - 1);
                q = w.at(k + 1, k - 1);
                r = if k != nn - 1 { w.at(k + 2, k - 1) } else { 0.0 };
                x = p.abs() + q.abs() + r.abs();
                if x != 0.0 {
                    p /= x;
                    q /= x;
                    r /= x;
                }
            }
            let s = sign((p * p + q * q + r * r).sqrt(), p);
            if s == 0.0 {
                continue;
            }
            if k == m {
                if l != m {
                    w.set(k, k - 1, -w.at(k, k - 1));
                }
            } else {
                w.set(k, k - 1, -s * x);
            }
            p += s;
            x = p / s;
            y = q / s;
            z = r / s;
            q /= p;
            r /= p;
            for j in k..=nn {
                let mut pj = w.at(k, j) + q * w.at(k + 1, j);
                if k != nn - 1 {
                    pj += r * w.at(k + 2, j);
                    w.sub(k + 2, j, pj * z);
                }
                w.sub(k + 1, j, pj * y);
                w.sub(k, j, pj * x);
            }
            for i in l..=nn.min(k + 3) {
                let mut pi = x * w.at(i, k) + y * w.at(i, k + 1);
                if k != nn - 1 {
                    pi += z * w.at(i, k + 2);
                    w.sub(i, k + 2, pi * r);
                }
                w.sub(i, k + 1, pi * q);
                w.sub(i, k, pi);
            }
        }
    }
    Ok(out)
}

/// All eigenvalues of the `n x n` row-major matrix `data`, unordered.
pub(crate) fn eigenvalues_dense(n: usize, data: &[f64]) -> Result<Vec<Complex64>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut w = Work { n, a: data.to_vec() };
    balance(&mut w);
    hessenberg(&mut w);
    hqr(&mut w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(mut v: Vec<Complex64>) -> Vec<Complex64> {
        v.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        v
    }

    #[test]
    fn swap_matrix() {
        let ev = sorted(eigenvalues_dense(2, &[0.0, 1.0, 1.0, 0.0]).unwrap());
        assert!((ev[0].re + 1.0).abs() < 1e-14 && (ev[1].re - 1.0).abs() < 1e-14);
    }

    #[test]
    fn rotation_is_complex() {
        let ev = sorted(eigenvalues_dense(2, &[0.0, -1.0, 1.0, 0.0]).unwrap());
        assert!((ev[0] - Complex64::new(0.0, -1.0)).norm() < 1e-14);
        assert!((ev[1] - Complex64::new(0.0, 1.0)).norm() < 1e-14);
    }

    #[test]
    fn upper_triangular_diagonal() {
        let a = [1.0, 5.0, -3.0, 0.0, 2.0, 7.0, 0.0, 0.0, 3.0];
        let ev = sorted(eigenvalues_dense(3, &a).unwrap());
        for (k, e) in ev.iter().enumerate() {
            assert!((e.re - (k + 1) as f64).abs() < 1e-12 && e.im == 0.0);
        }
    }

    #[test]
    fn zero_matrix() {
        let ev = eigenvalues_dense(5, &[0.0; 25]).unwrap();
        assert!(ev.iter().all(|e| e.norm() == 0.0));
    }
}
