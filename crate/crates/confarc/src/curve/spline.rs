//! Least-squares quintic B-spline fit for sampled curves.
//!
//! Degree 5 keeps four derivatives available, which the conformal
//! invariants need. Fitting with roughly half as many control points as
//! data points smooths sampling noise; tolerances downstream are relaxed
//! accordingly (about two orders of magnitude versus the analytic kinds).

use nalgebra::{DMatrix, DVector, Vector3};

use crate::{Error, Result};

const DEGREE: usize = 5;

#[derive(Debug, Clone)]
pub struct SampledCurve {
    knots: Vec<f64>,
    control: Vec<Vector3<f64>>,
}

impl SampledCurve {
    /// Fit a smoothing quintic spline through at least 8 points. A closed
    /// curve is closed geometrically by appending the first point.
    pub fn fit(points: &[[f64; 3]], closed: bool) -> Result<Self> {
        let mut pts: Vec<Vector3<f64>> = points.iter().map(|p| Vector3::from(*p)).collect();
        if closed {
            if let Some(first) = pts.first().copied() {
                pts.push(first);
            }
        }
        let n = pts.len();
        if n < 8 {
            return Err(Error::InvalidSpec(format!(
                "sampled curves need at least 8 points, got {n}"
            )));
        }
        // chord-length parameters on [0, 1]
        let mut params = Vec::with_capacity(n);
        params.push(0.0);
        for w in pts.windows(2) {
            let step = (w[1] - w[0]).norm();
            if step == 0.0 {
                return Err(Error::InvalidSpec("repeated sample point".into()));
            }
            params.push(params.last().unwrap() + step);
        }
        let total = *params.last().unwrap();
        for u in params.iter_mut() {
            *u /= total;
        }

        let nc = (n / 2).clamp(8, n);
        let knots = clamped_knots(nc);

        // least-squares control points, one solve per coordinate
        let mut design = DMatrix::<f64>::zeros(n, nc);
        for (row, &u) in params.iter().enumerate() {
            let span = find_span(&knots, nc, u);
            let basis = ders_basis_funs(span, u, 0, &knots);
            for j in 0..=DEGREE {
                design[(row, span - DEGREE + j)] = basis[0][j];
            }
        }
        let svd = design.clone().svd(true, true);
        let mut control = vec![Vector3::zeros(); nc];
        for axis in 0..3 {
            let rhs = DVector::from_fn(n, |i, _| pts[i][axis]);
            let sol = svd
                .solve(&rhs, 1e-12)
                .map_err(|e| Error::Numerical(format!("spline solve failed: {e}")))?;
            for (i, c) in control.iter_mut().enumerate() {
                c[axis] = sol[i];
            }
        }
        Ok(Self { knots, control })
    }

    pub fn domain(&self) -> (f64, f64) {
        (0.0, 1.0)
    }

    /// Position and four derivatives at `u` in `[0, 1]`.
    #[allow(clippy::needless_range_loop)]
    pub fn jet(&self, u: f64) -> Result<[Vector3<f64>; 5]> {
        if !(-1e-9..=1.0 + 1e-9).contains(&u) {
            return Err(Error::Degenerate(format!(
                "parameter {u} outside the sampled range [0, 1]"
            )));
        }
        let u = u.clamp(0.0, 1.0);
        let nc = self.control.len();
        let span = find_span(&self.knots, nc, u);
        let ders = ders_basis_funs(span, u, 4, &self.knots);
        let mut out = [Vector3::zeros(); 5];
        for (k, slot) in out.iter_mut().enumerate() {
            for j in 0..=DEGREE {
                *slot += self.control[span - DEGREE + j] * ders[k][j];
            }
        }
        Ok(out)
    }
}

fn clamped_knots(nc: usize) -> Vec<f64> {
    let interior = nc - DEGREE - 1;
    let mut knots = Vec::with_capacity(nc + DEGREE + 1);
    knots.extend(std::iter::repeat_n(0.0, DEGREE + 1));
    for k in 1..=interior {
        knots.push(k as f64 / (interior + 1) as f64);
    }
    knots.extend(std::iter::repeat_n(1.0, DEGREE + 1));
    knots
}

fn find_span(knots: &[f64], nc: usize, u: f64) -> usize {
    if u >= knots[nc] {
        return nc - 1;
    }
    let mut lo = DEGREE;
    let mut hi = nc;
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if u < knots[mid] {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    lo
}

/// B-spline basis functions and derivatives on a span (the banded
/// divided-difference recursion).
#[allow(clippy::needless_range_loop)]
fn ders_basis_funs(span: usize, u: f64, n_ders: usize, knots: &[f64]) -> Vec<Vec<f64>> {
    let p = DEGREE;
    let mut ndu = vec![vec![0.0; p + 1]; p + 1];
    let mut left = vec![0.0; p + 1];
    let mut right = vec![0.0; p + 1];
    ndu[0][0] = 1.0;
    for j in 1..=p {
        left[j] = u - knots[span + 1 - j];
        right[j] = knots[span + j] - u;
        let mut saved = 0.0;
        for r in 0..j {
            ndu[j][r] = right[r + 1] + left[j - r];
            let temp = ndu[r][j - 1] / ndu[j][r];
            ndu[r][j] = saved + right[r + 1] * temp;
            saved = left[j - r] * temp;
        }
        ndu[j][j] = saved;
    }
    let mut ders = vec![vec![0.0; p + 1]; n_ders + 1];
    for j in 0..=p {
        ders[0][j] = ndu[j][p];
    }
    let mut a = [vec![0.0; p + 1], vec![0.0; p + 1]];
    for r in 0..=p {
        let mut s1 = 0;
        let mut s2 = 1;
        a[0].iter_mut().for_each(|x| *x = 0.0);
        a[1].iter_mut().for_each(|x| *x = 0.0);
        a[0][0] = 1.0;
        for k in 1..=n_ders.min(p) {
            let mut d = 0.0;
            let rk = r as i64 - k as i64;
            let pk = p - k;
            if r >= k {
                a[s2][0] = a[s1][0] / ndu[pk + 1][rk as usize];
                d = a[s2][0] * ndu[rk as usize][pk];
            }
            let j1 = if rk >= -1 { 1 } else { (-rk) as usize };
            let j2 = if r as i64 - 1 <= pk as i64 { k - 1 } else { p - r };
            for j in j1..=j2 {
                a[s2][j] = (a[s1][j] - a[s1][j - 1]) / ndu[pk + 1][(rk + j as i64) as usize];
                d += a[s2][j] * ndu[(rk + j as i64) as usize][pk];
            }
            if r as i64 <= pk as i64 {
                a[s2][k] = -a[s1][k - 1] / ndu[pk + 1][r];
                d += a[s2][k] * ndu[r][pk];
            }
            ders[k][r] = d;
            std::mem::swap(&mut s1, &mut s2);
        }
    }
    let mut factor = p as f64;
    for k in 1..=n_ders.min(p) {
        for j in 0..=p {
            ders[k][j] *= factor;
        }
        factor *= (p - k) as f64;
    }
    ders
}
