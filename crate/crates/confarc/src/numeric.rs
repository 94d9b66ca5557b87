//! Shared numerical kernels: adaptive quadrature, finite-difference
//! stencils on uniform grids, and log-log order fits.

use nalgebra::{DMatrix, DVector};

use crate::{Error, Result};

/// Eigen-decomposition of a small symmetric matrix by cyclic Jacobi
/// rotations: returns `(eigenvalues, eigenvectors-as-columns)` with
/// `A = V diag(lambda) V^T`.
pub fn jacobi_eigen(a: &DMatrix<f64>) -> (DVector<f64>, DMatrix<f64>) {
    let n = a.nrows();
    let mut m = a.clone();
    let mut v = DMatrix::<f64>::identity(n, n);
    let scale = a.norm().max(f64::MIN_POSITIVE);
    for _sweep in 0..100 {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += m[(p, q)] * m[(p, q)];
            }
        }
        if off.sqrt() <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                if m[(p, q)].abs() <= 1e-300 {
                    continue;
                }
                let theta = (m[(q, q)] - m[(p, p)]) / (2.0 * m[(p, q)]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (mkp, mkq) = (m[(k, p)], m[(k, q)]);
                    m[(k, p)] = c * mkp - s * mkq;
                    m[(k, q)] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let (mpk, mqk) = (m[(p, k)], m[(q, k)]);
                    m[(p, k)] = c * mpk - s * mqk;
                    m[(q, k)] = s * mpk + c * mqk;
                }
                for k in 0..n {
                    let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }
    (m.diagonal(), v)
}

/// Adaptive Simpson quadrature of a fallible integrand.
///
/// The integrand may reject a point (domain edge, vertex); the error is
/// propagated. Convergence is declared per panel when the Richardson
/// estimate drops below the locally allotted tolerance.
pub fn adaptive_simpson<F>(f: F, a: f64, b: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    if b.partial_cmp(&a).is_none_or(|o| o == std::cmp::Ordering::Less) {
        return Err(Error::Numerical(format!("bad interval [{a}, {b}]")));
    }
    if a == b {
        return Ok(0.0);
    }
    let fa = f(a)?;
    let fb = f(b)?;
    let m = 0.5 * (a + b);
    let fm = f(m)?;
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    // machine floor: panels whose correction is below roundoff on the
    // whole-integral scale are accepted regardless of the local budget
    let floor = 1e-15 * (1.0 + whole.abs());
    simpson_panel(&f, a, b, fa, fm, fb, whole, tol, floor, 48)
}

#[allow(clippy::too_many_arguments)]
fn simpson_panel<F>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    floor: f64,
    depth: u32,
) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm)?;
    let frm = f(rm)?;
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol + floor || (b - a) < 1e-14 {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 {
        return Err(Error::QuadratureDivergence);
    }
    let lv = simpson_panel(f, a, m, fa, flm, fm, left, 0.5 * tol, floor, depth - 1)?;
    let rv = simpson_panel(f, m, b, fm, frm, fb, right, 0.5 * tol, floor, depth - 1)?;
    Ok(lv + rv)
}

/// Composite Simpson on tabulated values over a uniform grid.
///
/// Falls back to a trapezoid for the last interval when the point count is
/// even.
pub fn simpson_tabulated(values: &[f64], h: f64) -> f64 {
    let n = values.len();
    if n < 2 {
        return 0.0;
    }
    let mut acc = 0.0;
    let mut i = 0;
    while i + 2 < n {
        acc += h / 3.0 * (values[i] + 4.0 * values[i + 1] + values[i + 2]);
        i += 2;
    }
    if i + 1 < n {
        acc += 0.5 * h * (values[i] + values[i + 1]);
    }
    acc
}

/// First derivative, five-point central stencil, O(h^4).
pub fn stencil_d1(fm2: f64, fm1: f64, fp1: f64, fp2: f64, h: f64) -> f64 {
    (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h)
}

/// Second derivative, five-point central stencil, O(h^4).
pub fn stencil_d2(fm2: f64, fm1: f64, f0: f64, fp1: f64, fp2: f64, h: f64) -> f64 {
    (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h)
}

/// Third derivative, five-point central stencil, O(h^2).
pub fn stencil_d3(fm2: f64, fm1: f64, fp1: f64, fp2: f64, h: f64) -> f64 {
    (fp2 - 2.0 * fp1 + 2.0 * fm1 - fm2) / (2.0 * h * h * h)
}

/// Third derivative, seven-point central stencil, O(h^4).
pub fn stencil_d3_7(fm3: f64, fm2: f64, fm1: f64, fp1: f64, fp2: f64, fp3: f64, h: f64) -> f64 {
    (fm3 - 8.0 * fm2 + 13.0 * fm1 - 13.0 * fp1 + 8.0 * fp2 - fp3) / (8.0 * h * h * h)
}

/// Least-squares slope of log(y) against log(x).
///
/// Used to read empirical convergence orders off error sweeps; pairs with
/// non-positive entries are skipped (converged-to-roundoff points).
pub fn loglog_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let pts: Vec<(f64, f64)> = xs
        .iter()
        .zip(ys)
        .filter(|(x, y)| **x > 0.0 && **y > 0.0)
        .map(|(x, y)| (x.ln(), y.ln()))
        .collect();
    if pts.len() < 2 {
        return f64::NAN;
    }
    let n = pts.len() as f64;
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}

/// Solve `g(t) = target` for increasing `g` by Newton iteration with a
/// bisection fallback bracket `[lo, hi]`.
pub fn solve_increasing<G, D>(g: G, dg: D, target: f64, mut lo: f64, mut hi: f64) -> Result<f64>
where
    G: Fn(f64) -> Result<f64>,
    D: Fn(f64) -> Result<f64>,
{
    let mut t = 0.5 * (lo + hi);
    for _ in 0..60 {
        let val = g(t)? - target;
        if val.abs() < 1e-13 * (1.0 + target.abs()) {
            return Ok(t);
        }
        if val > 0.0 {
            hi = t;
        } else {
            lo = t;
        }
        let slope = dg(t)?;
        let mut next = t - val / slope;
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        if (next - t).abs() < 1e-15 * (1.0 + t.abs()) {
            return Ok(next);
        }
        t = next;
    }
    Ok(t)
}
