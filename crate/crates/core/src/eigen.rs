//! Eigenvalues of dense real symmetric matrices.
//!
//! Householder reduction to tridiagonal form followed by the implicit QL
//! iteration with Wilkinson-style shifts. Only eigenvalues are produced; the
//! reflectors are discarded as soon as they have been applied.

use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 60;

/// All eigenvalues of the symmetric `n x n` row-major matrix `a`, sorted descending.
///
/// Only the lower triangle of `a` is read.
pub fn symmetric_eigenvalues(mut a: Vec<f64>, n: usize) -> Result<Vec<f64>> {
    assert_eq!(a.len(), n * n, "matrix buffer does not match its order");
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut diag = vec![0.0; n];
    let mut off = vec![0.0; n];
    tridiagonalize(&mut a, n, &mut diag, &mut off);
    tridiagonal_ql(&mut diag, &mut off).ok_or(Error::ConvergenceFailure(n))?;
    diag.sort_by(|x, y| y.total_cmp(x));
    Ok(diag)
}

/// Householder reduction. On return `diag` holds the diagonal and `off[i]` the
/// subdiagonal entry between rows `i - 1` and `i` (`off[0] = 0`).
fn tridiagonalize(a: &mut [f64], n: usize, diag: &mut [f64], off: &mut [f64]) {
    for i in (1..n).rev() {
        let l = i - 1;
        let row = i * n;
        if l == 0 {
            off[i] = a[row + l];
            continue;
        }
        let scale: f64 = a[row..=row + l].iter().map(|x| x.abs()).sum();
        if scale == 0.0 {
            off[i] = a[row + l];
            continue;
        }
        let mut h = 0.0;
        for k in 0..=l {
            a[row + k] /= scale;
            h += a[row + k] * a[row + k];
        }
        let f = a[row + l];
        let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
        off[i] = scale * g;
        h -= f * g;
        a[row + l] = f - g;

        let mut f = 0.0;
        for j in 0..=l {
            let mut g = 0.0;
            for k in 0..=j {
                g += a[j * n + k] * a[row + k];
            }
            for k in j + 1..=l {
                g += a[k * n + j] * a[row + k];
            }
            off[j] = g / h;
            f += off[j] * a[row + j];
        }
        let hh = f / (h + h);
        for j in 0..=l {
            let f = a[row + j];
            let g = off[j] - hh * f;
            off[j] = g;
            for k in 0..=j {
                a[j * n + k] -= f * off[k] + g * a[row + k];
            }
        }
    }
    off[0] = 0.0;
    for i in 0..n {
        diag[i] = a[i * n + i];
    }
}

/// Implicit QL on a symmetric tridiagonal matrix. `None` when a block fails to
/// split within [`MAX_SWEEPS`] sweeps.
fn tridiagonal_ql(diag: &mut [f64], off: &mut [f64]) -> Option<()> {
    let n = diag.len();
    for i in 1..n {
        off[i - 1] = off[i];
    }
    off[n - 1] = 0.0;

    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = diag[m].abs() + diag[m + 1].abs();
                if off[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > MAX_SWEEPS {
                return None;
            }

            let mut g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
            let mut r = g.hypot(1.0);
            g = diag[m] - diag[l] + off[l] / (g + if g >= 0.0 { r } else { -r });
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * off[i];
                let b = c * off[i];
                r = f.hypot(g);
                off[i + 1] = r;
                if r == 0.0 {
                    diag[i + 1] -= p;
                    off[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + 2.0 * c * b;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            diag[l] -= p;
            off[l] = g;
            off[m] = 0.0;
        }
    }
    Some(())
}
