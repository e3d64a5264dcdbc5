//! Eigenvalues of dense real symmetric matrices: Householder reduction to
//! tridiagonal form followed by implicit-shift QL iteration.
//!
//! Only eigenvalues are produced, so the reflectors are never accumulated.

use crate::error::{Error, Result};

/// Reduces the symmetric matrix `a` (row-major, `n x n`, only the lower
/// triangle is read) to tridiagonal form. Returns `(diag, offdiag)` where
/// `offdiag[i]` couples rows `i` and `i + 1`; the last entry is zero.
fn tridiagonalize(a: &mut [f64], n: usize) -> (Vec<f64>, Vec<f64>) {
    let at = |i: usize, j: usize| i * n + j;
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let scale: f64 = (0..=l).map(|k| a[at(i, k)].abs()).sum();
            if scale == 0.0 {
                e[i] = a[at(i, l)];
            } else {
                for k in 0..=l {
                    a[at(i, k)] /= scale;
                    h += a[at(i, k)] * a[at(i, k)];
                }
                let f = a[at(i, l)];
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                a[at(i, l)] = f - g;
                let mut f = 0.0;
                for j in 0..=l {
                    let mut g = 0.0;
                    for k in 0..=j {
                        g += a[at(j, k)] * a[at(i, k)];
                    }
                    for k in j + 1..=l {
                        g += a[at(k, j)] * a[at(i, k)];
                    }
                    e[j] = g / h;
                    f += e[j] * a[at(i, j)];
                }
                let hh = f / (h + h);
                for j in 0..=l {
                    let f = a[at(i, j)];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        a[at(j, k)] -= f * e[k] + g * a[at(i, k)];
                    }
                }
            }
        } else {
            e[i] = a[at(i, l)];
        }
        d[i] = h;
    }
    for (i, di) in d.iter_mut().enumerate() {
        *di = a[at(i, i)];
    }
    // Shift so that e[i] couples i and i + 1.
    if n > 0 {
        e.rotate_left(1);
        e[n - 1] = 0.0;
    }
    (d, e)
}

/// Implicit-shift QL on a symmetric tridiagonal matrix. `max_sweeps` bounds
/// the iterations spent on each eigenvalue.
fn tridiagonal_ql(d: &mut [f64], e: &mut [f64], max_sweeps: usize) -> Result<()> {
    let n = d.len();
    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            if sweeps == max_sweeps {
                return Err(Error::NoConvergence { index: l });
            }
            sweeps += 1;
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// All eigenvalues of the symmetric row-major matrix `a`, in solver order.
pub fn symmetric_eigenvalues(a: &[f64], n: usize, max_sweeps: usize) -> Result<Vec<f64>> {
    assert_eq!(a.len(), n * n, "matrix is not n x n");
    let mut work = a.to_vec();
    let (mut d, mut e) = tridiagonalize(&mut work, n);
    tridiagonal_ql(&mut d, &mut e, max_sweeps)?;
    Ok(d)
}
