//! Exterior algebra of R^5_1 and the circle space Theta(1,3).
//!
//! An oriented circle in S^3 (or R^3, lines included) is an oriented
//! timelike 3-dimensional subspace of R^5_1, identified by its ten Pluecker
//! coordinates `p_{i1 i2 i3}` inside `Lambda^3 R^5_1 = R^10_4`. The inner
//! product there is `-det(<x_i, y_j>)` on decomposables, which in
//! coordinates is `sum eps_I p_I q_I` with `eps_I = +1` when the
//! multi-index contains 0 and `-1` otherwise. Theta(1,3) is the unit-norm,
//! Pluecker-constrained locus; the Moebius group acts on it through the
//! compound-matrix homomorphism `Psi : O(4,1) -> O(6,4)`.
//!
//! The coordinate order `(012, 013, 014, 023, 024, 034, 123, 124, 134,
//! 234)` is fixed lexicographically and is contractual for file export.

use nalgebra::{Matrix3, SMatrix, SVector};

use crate::minkowski::{lorentz_form, lorentz_orthonormalize, MinkVec5};
use crate::{Error, Result};

/// Element of `Lambda^3 R^5_1` in the fixed lexicographic coordinate order.
pub type TriVector = SVector<f64, 10>;
/// Element of `Lambda^2 R^5_1` in the order `(01, 02, 03, 04, 12, 13, 14,
/// 23, 24, 34)`.
pub type BiVector = SVector<f64, 10>;

/// Multi-indices of the trivector coordinates, lexicographic.
pub const TRI_INDICES: [[usize; 3]; 10] = [
    [0, 1, 2],
    [0, 1, 3],
    [0, 1, 4],
    [0, 2, 3],
    [0, 2, 4],
    [0, 3, 4],
    [1, 2, 3],
    [1, 2, 4],
    [1, 3, 4],
    [2, 3, 4],
];

/// Index pairs of the bivector coordinates, lexicographic.
pub const PAIR_INDICES: [[usize; 2]; 10] = [
    [0, 1],
    [0, 2],
    [0, 3],
    [0, 4],
    [1, 2],
    [1, 3],
    [1, 4],
    [2, 3],
    [2, 4],
    [3, 4],
];

/// Signature of the trivector coordinates: +1 when the multi-index contains
/// the timelike index 0, else -1 (six plus, four minus).
pub const TRI_SIGNS: [f64; 10] = [1.0, 1.0, 1.0, 1.0, 1.0, 1.0, -1.0, -1.0, -1.0, -1.0];

/// Signature of the bivector coordinates: +1 when the pair contains 0, else
/// -1 (four plus, six minus).
pub const BI_SIGNS: [f64; 10] = [1.0, 1.0, 1.0, 1.0, -1.0, -1.0, -1.0, -1.0, -1.0, -1.0];

/// Exterior product of three vectors: the ten 3x3 minors.
///
/// The determinant is expanded along the `x1` row with commutative 2x2
/// minors of `(x2, x3)`, so swapping `x2` and `x3` negates the output
/// bit-exactly.
pub fn wedge3(x1: &MinkVec5, x2: &MinkVec5, x3: &MinkVec5) -> TriVector {
    let mut p = TriVector::zeros();
    for (slot, idx) in TRI_INDICES.iter().enumerate() {
        let [a, b, c] = *idx;
        let m_bc = x2[b] * x3[c] - x2[c] * x3[b];
        let m_ac = x2[a] * x3[c] - x2[c] * x3[a];
        let m_ab = x2[a] * x3[b] - x2[b] * x3[a];
        p[slot] = x1[a] * m_bc - x1[b] * m_ac + x1[c] * m_ab;
    }
    p
}

/// [`wedge3`] with the arguments Euclidean-Gram-Schmidt-reduced first.
///
/// Column reduction leaves the exterior product unchanged but removes the
/// catastrophic cancellation that the plain minors suffer when two
/// arguments nearly coincide (tangent-circle constructions with a tiny
/// parameter gap).
pub fn wedge3_stable(x1: &MinkVec5, x2: &MinkVec5, x3: &MinkVec5) -> TriVector {
    let b = x2 - x1 * (x2.dot(x1) / x1.norm_squared());
    let mut c = x3 - x1 * (x3.dot(x1) / x1.norm_squared());
    let b2 = b.norm_squared();
    if b2 > 0.0 {
        c -= b * (c.dot(&b) / b2);
    }
    wedge3(x1, &b, &c)
}

/// Exterior product of two vectors: the ten 2x2 minors.
pub fn wedge2(x1: &MinkVec5, x2: &MinkVec5) -> BiVector {
    let mut q = BiVector::zeros();
    for (slot, idx) in PAIR_INDICES.iter().enumerate() {
        q[slot] = x1[idx[0]] * x2[idx[1]] - x1[idx[1]] * x2[idx[0]];
    }
    q
}

/// Indefinite inner product of trivectors, coordinate form.
pub fn tri_inner(p: &TriVector, q: &TriVector) -> f64 {
    let mut acc = 0.0;
    for i in 0..10 {
        acc += TRI_SIGNS[i] * p[i] * q[i];
    }
    acc
}

/// Inner product of decomposables through the Gram determinant,
/// `-det(<x_i, y_j>)`. Independent route used to pin the coordinate signs.
pub fn tri_inner_det(xs: &[MinkVec5; 3], ys: &[MinkVec5; 3]) -> f64 {
    let g = Matrix3::from_fn(|i, k| lorentz_form(&xs[i], &ys[k]));
    -g.determinant()
}

/// Indefinite inner product of bivectors, coordinate form.
pub fn bi_inner(p: &BiVector, q: &BiVector) -> f64 {
    let mut acc = 0.0;
    for i in 0..10 {
        acc += BI_SIGNS[i] * p[i] * q[i];
    }
    acc
}

/// Bivector inner product of decomposables through the 2x2 Gram
/// determinant, `-det(<x_i, y_j>)`.
pub fn bi_inner_det(xs: &[MinkVec5; 2], ys: &[MinkVec5; 2]) -> f64 {
    let a = lorentz_form(&xs[0], &ys[0]);
    let b = lorentz_form(&xs[0], &ys[1]);
    let c = lorentz_form(&xs[1], &ys[0]);
    let d = lorentz_form(&xs[1], &ys[1]);
    -(a * d - b * c)
}

/// Metric matrix of `R^10_4` in the trivector coordinate order.
pub fn tri_metric() -> SMatrix<f64, 10, 10> {
    SMatrix::from_diagonal(&SVector::from(TRI_SIGNS))
}

/// The five quadratic Pluecker residuals; all vanish exactly on
/// decomposable trivectors and cut out the Grassmann cone.
///
/// Expanded in coordinates they read
/// `R0 = p012 p034 - p013 p024 + p014 p023`, and likewise with the index 0
/// role rotated through the five coordinates.
pub fn plucker_residuals(p: &TriVector) -> [f64; 5] {
    let [p012, p013, p014, p023, p024, p034, p123, p124, p134, p234] =
        [p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7], p[8], p[9]];
    [
        p012 * p034 - p013 * p024 + p014 * p023,
        p012 * p134 - p013 * p124 + p014 * p123,
        p012 * p234 - p023 * p124 + p024 * p123,
        p013 * p234 - p023 * p134 + p034 * p123,
        p014 * p234 - p024 * p134 + p034 * p124,
    ]
}

/// Largest Pluecker residual magnitude, normalized by the squared Euclidean
/// norm of `p` (the residuals are quadratic).
pub fn decomposability_residual(p: &TriVector) -> f64 {
    let scale = p.norm_squared().max(f64::MIN_POSITIVE);
    plucker_residuals(p)
        .into_iter()
        .fold(0.0f64, |m, r| m.max(r.abs()))
        / scale
}

/// Jacobian of the five residuals with respect to the ten coordinates.
pub fn plucker_jacobian(p: &TriVector) -> SMatrix<f64, 5, 10> {
    let mut j = SMatrix::<f64, 5, 10>::zeros();
    // each residual is sum of three bilinear monomials +- p_a p_b
    const TERMS: [[(usize, usize, f64); 3]; 5] = [
        [(0, 5, 1.0), (1, 4, -1.0), (2, 3, 1.0)],
        [(0, 8, 1.0), (1, 7, -1.0), (2, 6, 1.0)],
        [(0, 9, 1.0), (3, 7, -1.0), (4, 6, 1.0)],
        [(1, 9, 1.0), (3, 8, -1.0), (5, 6, 1.0)],
        [(2, 9, 1.0), (4, 8, -1.0), (5, 7, 1.0)],
    ];
    for (row, terms) in TERMS.iter().enumerate() {
        for &(a, b, s) in terms {
            j[(row, a)] += s * p[b];
            j[(row, b)] += s * p[a];
        }
    }
    j
}

/// The compound-matrix map `Psi : M_5(R) -> M_10(R)`; entry `(I, J)` is the
/// 3x3 minor of `a` with rows `I` and columns `J`, so that
/// `Psi(A)(x1 ^ x2 ^ x3) = (A x1) ^ (A x2) ^ (A x3)`.
pub fn psi_map(a: &SMatrix<f64, 5, 5>) -> SMatrix<f64, 10, 10> {
    let mut out = SMatrix::<f64, 10, 10>::zeros();
    for (ri, rows) in TRI_INDICES.iter().enumerate() {
        for (ci, cols) in TRI_INDICES.iter().enumerate() {
            let m = Matrix3::from_fn(|i, k| a[(rows[i], cols[k])]);
            out[(ri, ci)] = m.determinant();
        }
    }
    out
}

/// A point of Theta(1,3): a unit-norm decomposable trivector representing an
/// oriented circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CirclePoint {
    tri: TriVector,
}

impl CirclePoint {
    /// Relative tolerance on the Pluecker residuals and unit norm.
    pub const TOL: f64 = 1e-9;

    /// Validate decomposability and timelike signature, then normalize.
    ///
    /// A non-positive `<P, P>` means the span is not timelike; that is
    /// reported as an error rather than silently flipping the signature.
    pub fn try_new(tri: TriVector) -> Result<Self> {
        let res = decomposability_residual(&tri);
        if res > Self::TOL {
            return Err(Error::NotDecomposable(res));
        }
        let n = tri_inner(&tri, &tri);
        if n <= Self::TOL * tri.norm_squared() {
            return Err(Error::NotTimelike(n));
        }
        Ok(Self { tri: tri / n.sqrt() })
    }

    /// Wedge an oriented basis of a timelike 3-space and normalize.
    pub fn from_span(x1: &MinkVec5, x2: &MinkVec5, x3: &MinkVec5) -> Result<Self> {
        Self::try_new(wedge3(x1, x2, x3))
    }

    pub fn tri(&self) -> &TriVector {
        &self.tri
    }

    /// The same circle with reversed orientation.
    pub fn reversed(&self) -> Self {
        Self { tri: -self.tri }
    }

    /// Apply a Moebius map through `Psi`.
    pub fn transform(&self, psi: &SMatrix<f64, 10, 10>) -> Result<Self> {
        Self::try_new(psi * self.tri)
    }

    /// Recover an oriented basis `(x1, x2, x3)` of the underlying 3-space,
    /// with `wedge3(x1, x2, x3)` a positive multiple of the stored
    /// coordinates.
    ///
    /// The span is the kernel of `v -> v ^ P`, extracted by SVD.
    pub fn span_basis(&self) -> Result<[MinkVec5; 3]> {
        span_basis_of(&self.tri)
    }
}

/// Kernel basis of `v -> v ^ p` for a (near-)decomposable trivector,
/// oriented so the wedge of the result is a positive multiple of `p`.
pub fn span_basis_of(p: &TriVector) -> Result<[MinkVec5; 3]> {
    let res = decomposability_residual(p);
    if res > 1e-6 {
        return Err(Error::NotDecomposable(res));
    }
    span_basis_relaxed(p)
}

/// [`span_basis_of`] without the decomposability gate, for callers whose
/// input carries finite-difference noise and who have already vetted the
/// residual at their own tolerance.
pub fn span_basis_relaxed(p: &TriVector) -> Result<[MinkVec5; 3]> {
    // v ^ p in Lambda^4 = R^5: coordinate omit(m) lists the 4-subset without m
    // (v ^ p)_{j1 j2 j3 j4} = sum_k (-1)^{k-1} v_{jk} p_{J \ jk}
    let mut m = SMatrix::<f64, 5, 5>::zeros();
    for omit in 0..5 {
        let j: Vec<usize> = (0..5).filter(|&i| i != omit).collect();
        for (k, &jk) in j.iter().enumerate() {
            let rest: [usize; 3] = {
                let mut r = [0usize; 3];
                let mut w = 0;
                for &x in &j {
                    if x != jk {
                        r[w] = x;
                        w += 1;
                    }
                }
                r
            };
            let slot = TRI_INDICES.iter().position(|t| *t == rest).expect("triple");
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            m[(omit, jk)] += sign * p[slot];
        }
    }
    let svd = m.svd(true, true);
    let v_t = svd.v_t.expect("svd vectors");
    // three smallest singular values span the kernel
    let mut order: Vec<usize> = (0..5).collect();
    order.sort_by(|&a, &b| svd.singular_values[a].total_cmp(&svd.singular_values[b]));
    let mut basis = [MinkVec5::zeros(); 3];
    for (i, &row) in order.iter().take(3).enumerate() {
        basis[i] = v_t.row(row).transpose();
    }
    // fix orientation: wedge of the basis must be a positive multiple of p
    let w = wedge3(&basis[0], &basis[1], &basis[2]);
    if w.dot(p) < 0.0 {
        basis.swap(1, 2);
    }
    Ok(basis)
}

/// Orthonormal basis of the Lorentz-orthogonal complement of a span,
/// via SVD kernel of the constraint matrix `<w_i, .> = 0`.
pub fn complement_basis_2(span: &[MinkVec5; 3]) -> Result<[MinkVec5; 2]> {
    let j = crate::minkowski::metric::<5>();
    // padded square so the SVD carries the full right-singular basis
    let mut m = SMatrix::<f64, 5, 5>::zeros();
    for (r, w) in span.iter().enumerate() {
        m.set_row(r, &(j * w).transpose());
    }
    let svd = m.svd(false, true);
    let v_t = svd.v_t.expect("svd vectors");
    let mut order: Vec<usize> = (0..5).collect();
    order.sort_by(|&a, &b| svd.singular_values[a].total_cmp(&svd.singular_values[b]));
    let u0: MinkVec5 = v_t.row(order[0]).transpose();
    let u1: MinkVec5 = v_t.row(order[1]).transpose();
    let on = lorentz_orthonormalize(&[u0, u1])?;
    if on.iter().any(|(_, s)| *s < 0.0) {
        return Err(Error::Degenerate("complement of the span is not spacelike".into()));
    }
    Ok([on[0].0, on[1].0])
}

/// The anti-isometry `F` from oriented timelike 3-spaces to oriented
/// spacelike 2-spaces: the Lorentz-orthogonal complement, with the sign of
/// `u ^ v` fixed so that `(x1, x2, x3, u, v)` is positively oriented in
/// R^5_1. Satisfies `<F(P), F(Q)> = -<P, Q>`.
pub fn anti_isometry_f(p: &CirclePoint) -> Result<BiVector> {
    let span = p.span_basis()?;
    let [u, v] = complement_basis_2(&span)?;
    let det = SMatrix::<f64, 5, 5>::from_columns(&[span[0], span[1], span[2], u, v]).determinant();
    let q = wedge2(&u, &v);
    // the span basis wedges to +P which has unit norm; renormalize the frame
    // volume sign only
    if det < 0.0 {
        Ok(-q)
    } else {
        Ok(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn e(i: usize) -> MinkVec5 {
        let mut v = MinkVec5::zeros();
        v[i] = 1.0;
        v
    }

    fn random_vec(rng: &mut ChaCha8Rng) -> MinkVec5 {
        MinkVec5::from_fn(|_, _| rng.gen_range(-1.0..1.0))
    }

    #[test]
    fn wedge_of_coordinate_axes() {
        let p = wedge3(&e(0), &e(1), &e(2));
        assert_eq!(p[0], 1.0);
        assert_eq!(p.iter().skip(1).map(|x| x.abs()).sum::<f64>(), 0.0);
        assert_eq!(wedge3(&e(0), &e(1), &e(0)), TriVector::zeros());
    }

    #[test]
    fn tri_inner_signature() {
        let p012 = wedge3(&e(0), &e(1), &e(2));
        let p123 = wedge3(&e(1), &e(2), &e(3));
        assert_eq!(tri_inner(&p012, &p012), 1.0);
        assert_eq!(tri_inner(&p123, &p123), -1.0);
    }

    #[test]
    fn coordinate_and_determinant_forms_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let xs = [random_vec(&mut rng), random_vec(&mut rng), random_vec(&mut rng)];
            let ys = [random_vec(&mut rng), random_vec(&mut rng), random_vec(&mut rng)];
            let coord = tri_inner(&wedge3(&xs[0], &xs[1], &xs[2]), &wedge3(&ys[0], &ys[1], &ys[2]));
            let det = tri_inner_det(&xs, &ys);
            assert_relative_eq!(coord, det, epsilon = 1e-12, max_relative = 1e-12);
        }
    }

    #[test]
    fn bivector_forms_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..50 {
            let xs = [random_vec(&mut rng), random_vec(&mut rng)];
            let ys = [random_vec(&mut rng), random_vec(&mut rng)];
            let coord = bi_inner(&wedge2(&xs[0], &xs[1]), &wedge2(&ys[0], &ys[1]));
            assert_relative_eq!(coord, bi_inner_det(&xs, &ys), epsilon = 1e-12, max_relative = 1e-12);
        }
    }

    #[test]
    fn residuals_vanish_on_decomposables_and_not_on_sums() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..40 {
            let p = wedge3(&random_vec(&mut rng), &random_vec(&mut rng), &random_vec(&mut rng));
            assert!(decomposability_residual(&p) < 1e-12);
        }
        let sum = wedge3(&e(0), &e(1), &e(2)) + wedge3(&e(0), &e(3), &e(4));
        let r = plucker_residuals(&sum);
        assert!(r.iter().any(|x| x.abs() > 0.5), "residuals {r:?}");
        assert_eq!(plucker_residuals(&TriVector::zeros()), [0.0; 5]);
    }

    #[test]
    fn jacobian_matches_finite_differences_and_has_rank_3() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let p = wedge3(&random_vec(&mut rng), &random_vec(&mut rng), &random_vec(&mut rng));
        let j = plucker_jacobian(&p);
        let h = 1e-6;
        for col in 0..10 {
            let mut pp = p;
            let mut pm = p;
            pp[col] += h;
            pm[col] -= h;
            let rp = plucker_residuals(&pp);
            let rm = plucker_residuals(&pm);
            for row in 0..5 {
                assert_relative_eq!(j[(row, col)], (rp[row] - rm[row]) / (2.0 * h), epsilon = 1e-6);
            }
        }
        let svd = nalgebra::DMatrix::from_fn(5, 10, |r, c| j[(r, c)]).svd(false, false);
        let sv = svd.singular_values;
        assert!(sv[2] > 1e-6 * sv[0]);
        assert!(sv[3] < 1e-9 * sv[0], "rank should be exactly 3, sv = {sv:?}");
    }

    #[test]
    fn psi_of_identity_and_reflection() {
        assert_eq!(psi_map(&SMatrix::identity()), SMatrix::<f64, 10, 10>::identity());
        let mut refl = SMatrix::<f64, 5, 5>::identity();
        refl[(0, 0)] = -1.0;
        let psi = psi_map(&refl);
        for i in 0..10 {
            for k in 0..10 {
                let expect = if i != k {
                    0.0
                } else if TRI_INDICES[i][0] == 0 {
                    -1.0
                } else {
                    1.0
                };
                assert_eq!(psi[(i, k)], expect);
            }
        }
    }

    #[test]
    fn psi_is_a_homomorphism_into_o_6_4() {
        use crate::minkowski::MoebiusMap;
        let jt = tri_metric();
        for seed in 0..6 {
            let a = MoebiusMap::random(seed, 0.5);
            let b = MoebiusMap::random(seed + 100, 0.5);
            let pa = psi_map(a.matrix());
            let pb = psi_map(b.matrix());
            let pab = psi_map(a.compose(&b).matrix());
            assert!((pab - pa * pb).norm() < 1e-9, "homomorphism residual too large");
            assert!((pa.transpose() * jt * pa - jt).norm() < 1e-9, "O(6,4) residual too large");
        }
    }

    #[test]
    fn psi_intertwines_the_wedge() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let a = SMatrix::<f64, 5, 5>::from_fn(|_, _| rng.gen_range(-1.0..1.0));
        let (x1, x2, x3) = (random_vec(&mut rng), random_vec(&mut rng), random_vec(&mut rng));
        let lhs = psi_map(&a) * wedge3(&x1, &x2, &x3);
        let rhs = wedge3(&(a * x1), &(a * x2), &(a * x3));
        assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn timelike_classification_matches_diagonalized_span() {
        // sign of <P, P> against the signature of the restricted form
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let mut seen_timelike = 0;
        let mut seen_spacelike = 0;
        for _ in 0..200 {
            let xs = [random_vec(&mut rng), random_vec(&mut rng), random_vec(&mut rng)];
            let p = wedge3(&xs[0], &xs[1], &xs[2]);
            let n = tri_inner(&p, &p);
            match lorentz_orthonormalize(&xs) {
                Ok(on) => {
                    let negs = on.iter().filter(|(_, s)| *s < 0.0).count();
                    if negs == 1 {
                        assert!(n > 0.0);
                        seen_timelike += 1;
                    } else if negs == 0 {
                        assert!(n < 0.0);
                        seen_spacelike += 1;
                    }
                }
                Err(_) => assert!(n.abs() < 1e-8 * p.norm_squared()),
            }
        }
        assert!(seen_timelike > 10 && seen_spacelike > 10);
    }

    #[test]
    fn circle_point_normalizes_and_rejects() {
        let p = CirclePoint::from_span(&(e(0) * 3.0), &e(1), &e(2)).unwrap();
        assert_relative_eq!(tri_inner(p.tri(), p.tri()), 1.0, epsilon = 1e-14);
        // spacelike span rejected
        assert!(CirclePoint::from_span(&e(1), &e(2), &e(3)).is_err());
        // non-decomposable rejected
        let sum = wedge3(&e(0), &e(1), &e(2)) + wedge3(&e(0), &e(3), &e(4));
        assert!(CirclePoint::try_new(sum).is_err());
    }

    #[test]
    fn span_basis_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for _ in 0..30 {
            let xs = [
                random_vec(&mut rng) + e(0) * 2.0,
                random_vec(&mut rng),
                random_vec(&mut rng),
            ];
            let Ok(p) = CirclePoint::from_span(&xs[0], &xs[1], &xs[2]) else {
                continue;
            };
            let basis = p.span_basis().unwrap();
            let rebuilt = CirclePoint::from_span(&basis[0], &basis[1], &basis[2]).unwrap();
            assert!((rebuilt.tri() - p.tri()).norm() < 1e-9);
        }
    }

    #[test]
    fn anti_isometry_on_coordinate_spans() {
        let p = CirclePoint::from_span(&e(0), &e(1), &e(2)).unwrap();
        let f = anti_isometry_f(&p).unwrap();
        // complement is span(e3, e4); bivector norm flips sign
        assert_relative_eq!(bi_inner(&f, &f), -1.0, epsilon = 1e-12);
        let e34 = wedge2(&e(3), &e(4));
        assert!((f - e34).norm() < 1e-12 || (f + e34).norm() < 1e-12);
    }

    #[test]
    fn anti_isometry_reverses_inner_products() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        let mut tested = 0;
        while tested < 25 {
            let p = CirclePoint::from_span(
                &(random_vec(&mut rng) + e(0) * 2.0),
                &random_vec(&mut rng),
                &random_vec(&mut rng),
            );
            let q = CirclePoint::from_span(
                &(random_vec(&mut rng) + e(0) * 2.0),
                &random_vec(&mut rng),
                &random_vec(&mut rng),
            );
            let (Ok(p), Ok(q)) = (p, q) else { continue };
            let fp = anti_isometry_f(&p).unwrap();
            let fq = anti_isometry_f(&q).unwrap();
            assert_relative_eq!(
                bi_inner(&fp, &fq),
                -tri_inner(p.tri(), q.tri()),
                epsilon = 1e-9,
                max_relative = 1e-9
            );
            tested += 1;
        }
    }

    proptest! {
        #[test]
        fn wedge_is_alternating(
            a in prop::array::uniform5(-3.0f64..3.0),
            b in prop::array::uniform5(-3.0f64..3.0),
            c in prop::array::uniform5(-3.0f64..3.0),
        ) {
            let (x, y, z) = (MinkVec5::from(a), MinkVec5::from(b), MinkVec5::from(c));
            let p = wedge3(&x, &y, &z);
            // the adjacent swap negates bit-exactly; the one moving x1 is
            // exact only up to re-association roundoff
            prop_assert_eq!(p, -wedge3(&x, &z, &y));
            let other = p + wedge3(&y, &x, &z);
            prop_assert!(other.norm() <= 1e-14 * (1.0 + p.norm()));
            prop_assert_eq!(wedge3(&x, &z, &z), TriVector::zeros());
            prop_assert!(wedge3(&x, &x, &z).norm() <= 1e-14 * (1.0 + p.norm()));
        }

        #[test]
        fn wedge_is_trilinear(
            a in prop::array::uniform5(-3.0f64..3.0),
            b in prop::array::uniform5(-3.0f64..3.0),
            c in prop::array::uniform5(-3.0f64..3.0),
            d in prop::array::uniform5(-3.0f64..3.0),
            lambda in -2.0f64..2.0,
        ) {
            let (x, y, z, w) = (MinkVec5::from(a), MinkVec5::from(b), MinkVec5::from(c), MinkVec5::from(d));
            let lhs = wedge3(&(x * lambda + w), &y, &z);
            let rhs = wedge3(&x, &y, &z) * lambda + wedge3(&w, &y, &z);
            prop_assert!((lhs - rhs).norm() < 1e-9 * (1.0 + rhs.norm()));
        }
    }
}
