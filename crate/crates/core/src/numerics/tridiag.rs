//! Symmetric tridiagonal eigenvalue tools: Sturm-sequence counting,
//! bisection for the smallest eigenvalue, and inverse iteration.

use crate::{Error, Result};

/// Guard against vanishing pivots in the LDLT recurrence.
const PIVOT_GUARD: f64 = 1e-300;

/// Count eigenvalues of a symmetric tridiagonal matrix strictly below `x`.
///
/// Runs the LDLT pivot recurrence (Sturm sequence); the number of negative
/// pivots equals the eigenvalue count below the shift.
pub fn count_below(diag: &[f64], off: &[f64], x: f64) -> usize {
    let n = diag.len();
    debug_assert_eq!(off.len() + 1, n);
    let mut count = 0;
    let mut q = diag[0] - x;
    if q < 0.0 {
        count += 1;
    }
    for i in 1..n {
        let q_safe = if q.abs() < PIVOT_GUARD {
            if q >= 0.0 {
                PIVOT_GUARD
            } else {
                -PIVOT_GUARD
            }
        } else {
            q
        };
        q = (diag[i] - x) - off[i - 1] * off[i - 1] / q_safe;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Locate the smallest eigenvalue inside `(lo, hi)` by bisection on the
/// Sturm count. `lo` must lie below the spectrum and `hi` above the first
/// eigenvalue; the bracket is validated by the caller.
pub fn smallest_eigenvalue(diag: &[f64], off: &[f64], lo: f64, hi: f64, tol: f64) -> Result<f64> {
    let (mut lo, mut hi) = (lo, hi);
    const MAX_ITERS: usize = 200;
    for _ in 0..MAX_ITERS {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= tol * mid.abs().max(1.0) {
            return Ok(mid);
        }
        if count_below(diag, off, mid) >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Err(Error::BisectionStalled {
        lo,
        hi,
        iterations: MAX_ITERS,
    })
}

/// Solve `(A - shift) x = rhs` for tridiagonal symmetric `A` by LU with
/// partial pivoting. Row swaps introduce one extra superdiagonal.
fn solve_shifted(diag: &[f64], off: &[f64], shift: f64, rhs: &[f64]) -> Vec<f64> {
    let n = diag.len();
    let mut d: Vec<f64> = diag.iter().map(|&v| v - shift).collect();
    let mut e: Vec<f64> = off.to_vec(); // superdiagonal
    let mut f = vec![0.0; n]; // second superdiagonal from pivoting
    let mut b = rhs.to_vec();

    // forward elimination with row swaps
    let mut sub: Vec<f64> = off.to_vec(); // subdiagonal entries to eliminate
    for i in 0..n - 1 {
        if sub[i].abs() > d[i].abs() {
            // swap rows i and i+1
            d.swap(i, i + 1);
            std::mem::swap(&mut sub[i], &mut d[i + 1]);
            // careful: after the swap the row layouts differ
            // row i   : d[i], e[i], f[i]
            // row i+1 : sub[i], d[i+1], e[i+1]
            let tmp_e = e[i];
            e[i] = d[i + 1];
            d[i + 1] = tmp_e;
            if i + 1 < n - 1 {
                f[i] = e[i + 1];
                e[i + 1] = 0.0;
            }
            b.swap(i, i + 1);
        }
        let pivot = if d[i].abs() < PIVOT_GUARD {
            PIVOT_GUARD.copysign(if d[i] == 0.0 { 1.0 } else { d[i] })
        } else {
            d[i]
        };
        let ratio = sub[i] / pivot;
        d[i + 1] -= ratio * e[i];
        if i + 1 < n - 1 {
            e[i + 1] -= ratio * f[i];
        }
        b[i + 1] -= ratio * b[i];
        sub[i] = 0.0;
    }

    // back substitution
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut acc = b[i];
        if i + 1 < n {
            acc -= e[i] * x[i + 1];
        }
        if i + 2 < n {
            acc -= f[i] * x[i + 2];
        }
        let pivot = if d[i].abs() < PIVOT_GUARD {
            PIVOT_GUARD.copysign(if d[i] == 0.0 { 1.0 } else { d[i] })
        } else {
            d[i]
        };
        x[i] = acc / pivot;
    }
    x
}

/// Eigenvector for an isolated eigenvalue near `shift` by inverse iteration.
///
/// The shift is expected to sit within bisection tolerance of the eigenvalue,
/// which is exactly the near-singular regime inverse iteration wants. The
/// returned vector has unit infinity norm and nonnegative first component.
pub fn inverse_iteration(diag: &[f64], off: &[f64], shift: f64) -> Vec<f64> {
    let n = diag.len();
    let mut y = vec![1.0; n];
    for _ in 0..3 {
        y = solve_shifted(diag, off, shift, &y);
        let norm = y.iter().fold(0.0_f64, |a, &v| a.max(v.abs()));
        for v in &mut y {
            *v /= norm;
        }
    }
    // fix overall sign by the largest component
    let lead = y
        .iter()
        .cloned()
        .max_by(|a, b| a.abs().partial_cmp(&b.abs()).unwrap())
        .unwrap_or(1.0);
    if lead < 0.0 {
        for v in &mut y {
            *v = -*v;
        }
    }
    y
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    // 1D Dirichlet Laplacian on a chain: eigenvalues 2 - 2 cos(k pi / (n+1))
    fn chain(n: usize) -> (Vec<f64>, Vec<f64>) {
        (vec![2.0; n], vec![-1.0; n - 1])
    }

    #[test]
    fn count_matches_closed_form() {
        let (d, e) = chain(50);
        for k in [1usize, 7, 25, 50] {
            let ev = 2.0 - 2.0 * (k as f64 * PI / 51.0).cos();
            assert_eq!(count_below(&d, &e, ev - 1e-9), k - 1);
            assert_eq!(count_below(&d, &e, ev + 1e-9), k);
        }
    }

    #[test]
    fn smallest_eigenvalue_of_chain() {
        let (d, e) = chain(200);
        let exact = 2.0 - 2.0 * (PI / 201.0).cos();
        let ev = smallest_eigenvalue(&d, &e, 0.0, 4.0, 1e-14).unwrap();
        assert!((ev - exact).abs() < 1e-12, "{ev} vs {exact}");
    }

    #[test]
    fn inverse_iteration_recovers_sine_mode() {
        let n = 100;
        let (d, e) = chain(n);
        let ev = 2.0 - 2.0 * (PI / (n as f64 + 1.0)).cos();
        let y = inverse_iteration(&d, &e, ev);
        // exact mode sin(k pi i / (n+1)), compare after normalization
        let exact: Vec<f64> = (1..=n)
            .map(|i| (i as f64 * PI / (n as f64 + 1.0)).sin())
            .collect();
        let scale = y[n / 2] / exact[n / 2];
        for i in 0..n {
            assert!(
                (y[i] - scale * exact[i]).abs() < 1e-9,
                "component {i}: {} vs {}",
                y[i],
                scale * exact[i]
            );
        }
    }
}
