//! Dense complex linear algebra over a composite Hilbert space.
//!
//! Operators on `p` subsystems of dimensions `n_1 <= ... <= n_p` live on the
//! tensor-product space of total dimension `N = n_1 * ... * n_p`. Composite
//! basis indices are big-endian in factor order: the basis ket with factor
//! indices `(j_1, ..., j_p)` sits at `sum_a j_a * prod_{b>a} n_b`, the
//! lexicographic ordering of product kets.
//!
//! Everything here is a pure function of its inputs; values are immutable
//! after construction and safe to share across threads.

use nalgebra::linalg::SymmetricEigen;
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

/// Largest total dimension for which dense matrices are allocated by default.
pub const DEFAULT_DIM_CAP: usize = 4096;

/// Entrywise Hermiticity tolerance for stored density matrices.
pub const HERMITICITY_TOL: f64 = 1e-12;
/// Unit-trace tolerance for stored density matrices.
pub const TRACE_TOL: f64 = 1e-12;
/// Floor on the smallest eigenvalue of a stored density matrix; mixtures of
/// many projectors accumulate float error of roughly this size.
pub const PSD_TOL: f64 = -1e-9;
/// Entrywise Hermiticity tolerance accepted by [`hermitian_eig`].
pub const EIG_HERMITICITY_TOL: f64 = 1e-10;

/// The factor dimensions `n_1 <= ... <= n_p` of a composite Hilbert space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionProfile {
    dims: Vec<usize>,
    total: usize,
}

impl DimensionProfile {
    /// Builds a profile under the default dense-matrix cap of 4096.
    pub fn new(dims: &[usize]) -> Result<Self> {
        Self::with_cap(dims, DEFAULT_DIM_CAP)
    }

    /// Builds a profile under a caller-chosen cap. Use this for partition
    /// arithmetic on large systems where no matrices are ever allocated.
    pub fn with_cap(dims: &[usize], cap: usize) -> Result<Self> {
        if dims.len() < 2 {
            return Err(Error::InvalidProfile(format!(
                "need at least two factors, got {}",
                dims.len()
            )));
        }
        if let Some(&d) = dims.iter().find(|&&d| d < 2) {
            return Err(Error::InvalidProfile(format!(
                "every factor dimension must be at least 2, got {d}"
            )));
        }
        if dims.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidProfile(format!(
                "factor dimensions must be sorted ascending, got {dims:?}"
            )));
        }
        let mut total = 1usize;
        for &d in dims {
            total = total.checked_mul(d).ok_or(Error::DimensionOverflow)?;
        }
        if total > cap {
            return Err(Error::SizeCap {
                requested: total,
                cap,
            });
        }
        Ok(Self {
            dims: dims.to_vec(),
            total,
        })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Total dimension `N` of the composite space.
    pub fn total(&self) -> usize {
        self.total
    }

    /// Number of factors `p`.
    pub fn factor_count(&self) -> usize {
        self.dims.len()
    }

    /// Smallest factor dimension `n_1`.
    pub fn min_dim(&self) -> usize {
        self.dims[0]
    }

    pub fn is_uniform(&self) -> bool {
        self.dims.iter().all(|&d| d == self.dims[0])
    }

    /// Composite basis index of the product ket with the given factor
    /// indices (big-endian in factor order).
    pub fn composite_index(&self, indices: &[usize]) -> usize {
        debug_assert_eq!(indices.len(), self.dims.len());
        let mut idx = 0usize;
        for (&j, &n) in indices.iter().zip(&self.dims) {
            debug_assert!(j < n);
            idx = idx * n + j;
        }
        idx
    }

    /// Inverse of [`composite_index`](Self::composite_index).
    pub fn factor_indices(&self, composite: usize) -> Vec<usize> {
        debug_assert!(composite < self.total);
        let mut rem = composite;
        let mut out = vec![0usize; self.dims.len()];
        for (slot, &n) in out.iter_mut().zip(&self.dims).rev() {
            *slot = rem % n;
            rem /= n;
        }
        out
    }

    /// Composite index of the "diagonal" product ket whose every factor
    /// index equals `j` (requires `j < n_1`).
    pub fn diagonal_index(&self, j: usize) -> usize {
        debug_assert!(j < self.dims[0]);
        let mut idx = 0usize;
        for &n in &self.dims {
            idx = idx * n + j;
        }
        idx
    }
}

impl std::fmt::Display for DimensionProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let dims: Vec<String> = self.dims.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", dims.join("x"))
    }
}

/// An `N x N` Hermitian, unit-trace, positive-semidefinite operator on the
/// composite space described by its [`DimensionProfile`].
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    profile: DimensionProfile,
    mat: CMatrix,
}

impl DensityMatrix {
    /// Validates and wraps a candidate matrix. Checks shape, finiteness,
    /// entrywise Hermiticity (1e-12), unit trace (1e-12), and that the
    /// smallest eigenvalue is above -1e-9.
    pub fn new(profile: DimensionProfile, mat: CMatrix) -> Result<Self> {
        let n = profile.total();
        if mat.nrows() != n || mat.ncols() != n {
            return Err(Error::DimensionMismatch {
                expected: format!("{n}x{n}"),
                found: format!("{}x{}", mat.nrows(), mat.ncols()),
            });
        }
        if mat.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidDensityMatrix(
                "matrix contains a non-finite entry".into(),
            ));
        }
        let herm_dev = hermiticity_deviation(&mat);
        if herm_dev > HERMITICITY_TOL {
            return Err(Error::InvalidDensityMatrix(format!(
                "not Hermitian: max entrywise deviation {herm_dev:.3e}"
            )));
        }
        let tr = trace(&mat);
        if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
            return Err(Error::InvalidDensityMatrix(format!(
                "trace is {} + {}i, expected 1",
                tr.re, tr.im
            )));
        }
        let (eigenvalues, _) = hermitian_eig(&mat)?;
        let min_eig = *eigenvalues.last().expect("nonempty spectrum");
        if min_eig < PSD_TOL {
            return Err(Error::InvalidDensityMatrix(format!(
                "not positive semidefinite: smallest eigenvalue {min_eig:.3e}"
            )));
        }
        Ok(Self { profile, mat })
    }

    /// The totally mixed state `I/N`.
    pub fn maximally_mixed(profile: DimensionProfile) -> Self {
        let n = profile.total();
        let w = Complex64::new(1.0 / n as f64, 0.0);
        let mat = CMatrix::from_diagonal_element(n, n, w);
        Self { profile, mat }
    }

    /// The projector onto a pure state; `psi` is normalized first.
    pub fn from_pure(profile: DimensionProfile, psi: &CVector) -> Result<Self> {
        if psi.len() != profile.total() {
            return Err(Error::DimensionMismatch {
                expected: profile.total().to_string(),
                found: psi.len().to_string(),
            });
        }
        let norm = psi.norm();
        if norm <= 0.0 || !norm.is_finite() {
            return Err(Error::InvalidState("zero or non-finite state vector".into()));
        }
        let unit = psi / Complex64::new(norm, 0.0);
        let mat = outer(&unit, &unit);
        Ok(Self { profile, mat })
    }

    /// Wraps without validation. Internal constructors that are valid by
    /// construction use this to avoid a redundant eigendecomposition.
    pub(crate) fn trusted(profile: DimensionProfile, mat: CMatrix) -> Self {
        debug_assert_eq!(mat.nrows(), profile.total());
        debug_assert_eq!(mat.ncols(), profile.total());
        Self { profile, mat }
    }

    pub fn profile(&self) -> &DimensionProfile {
        &self.profile
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.mat
    }

    pub fn trace(&self) -> Complex64 {
        trace(&self.mat)
    }

    /// `Tr(rho^2)`; 1 exactly for pure states, `1/N` for the totally mixed.
    pub fn purity(&self) -> f64 {
        self.mat.iter().map(|z| z.norm_sqr()).sum()
    }
}

/// Outer product `u v^dagger`.
pub fn outer(u: &CVector, v: &CVector) -> CMatrix {
    CMatrix::from_fn(u.len(), v.len(), |i, j| u[i] * v[j].conj())
}

pub fn identity(n: usize) -> CMatrix {
    CMatrix::identity(n, n)
}

pub fn trace(m: &CMatrix) -> Complex64 {
    m.diagonal().sum()
}

fn hermiticity_deviation(m: &CMatrix) -> f64 {
    let mut max = 0.0f64;
    for i in 0..m.nrows() {
        for j in i..m.ncols() {
            let dev = (m[(i, j)] - m[(j, i)].conj()).norm();
            if dev > max {
                max = dev;
            }
        }
    }
    max
}

/// Kronecker product; dimensions multiply, and chaining left-to-right is
/// associative up to exact float equality.
pub fn tensor(a: &CMatrix, b: &CMatrix) -> Result<CMatrix> {
    let rows = a
        .nrows()
        .checked_mul(b.nrows())
        .ok_or(Error::DimensionOverflow)?;
    let cols = a
        .ncols()
        .checked_mul(b.ncols())
        .ok_or(Error::DimensionOverflow)?;
    if rows > DEFAULT_DIM_CAP || cols > DEFAULT_DIM_CAP {
        return Err(Error::SizeCap {
            requested: rows.max(cols),
            cap: DEFAULT_DIM_CAP,
        });
    }
    Ok(a.kronecker(b))
}

/// Kronecker product of vectors.
pub fn tensor_vec(a: &CVector, b: &CVector) -> Result<CVector> {
    let len = a.len().checked_mul(b.len()).ok_or(Error::DimensionOverflow)?;
    if len > DEFAULT_DIM_CAP {
        return Err(Error::SizeCap {
            requested: len,
            cap: DEFAULT_DIM_CAP,
        });
    }
    let mut out = CVector::zeros(len);
    for i in 0..a.len() {
        for j in 0..b.len() {
            out[i * b.len() + j] = a[i] * b[j];
        }
    }
    Ok(out)
}

/// Hilbert-Schmidt inner product `Tr(A^dagger B)`. Real within float error
/// when both arguments are Hermitian.
pub fn hs_inner(a: &CMatrix, b: &CMatrix) -> Result<Complex64> {
    if a.nrows() != a.ncols() || a.shape() != b.shape() {
        return Err(Error::DimensionMismatch {
            expected: format!("equal square shapes, left is {}x{}", a.nrows(), a.ncols()),
            found: format!("{}x{}", b.nrows(), b.ncols()),
        });
    }
    Ok(a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum())
}

/// Frobenius distance `sqrt(<a-b, a-b>)`.
pub fn frobenius_distance(a: &CMatrix, b: &CMatrix) -> Result<f64> {
    if a.shape() != b.shape() {
        return Err(Error::DimensionMismatch {
            expected: format!("{}x{}", a.nrows(), a.ncols()),
            found: format!("{}x{}", b.nrows(), b.ncols()),
        });
    }
    Ok((a - b).norm())
}

/// Eigendecomposition of a Hermitian matrix.
///
/// Returns eigenvalues sorted descending with matching eigenvector columns.
/// The input must be Hermitian within 1e-10 entrywise; the reconstruction
/// `V diag(lambda) V^dagger` agrees with the input to about 1e-14 relative.
pub fn hermitian_eig(m: &CMatrix) -> Result<(Vec<f64>, CMatrix)> {
    if m.nrows() != m.ncols() {
        return Err(Error::DimensionMismatch {
            expected: "square matrix".into(),
            found: format!("{}x{}", m.nrows(), m.ncols()),
        });
    }
    let dev = hermiticity_deviation(m);
    if dev > EIG_HERMITICITY_TOL {
        return Err(Error::NonHermitian { max_deviation: dev });
    }
    let eig = SymmetricEigen::new(m.clone());
    let n = m.nrows();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        eig.eigenvalues[j]
            .partial_cmp(&eig.eigenvalues[i])
            .expect("finite eigenvalues")
    });
    let eigenvalues: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let eigenvectors = CMatrix::from_fn(n, n, |r, c| eig.eigenvectors[(r, order[c])]);
    Ok((eigenvalues, eigenvectors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use rand_distr::StandardNormal;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> CMatrix {
        CMatrix::from_fn(n, n, |_, _| {
            c(rng.sample(StandardNormal), rng.sample(StandardNormal))
        })
    }

    fn random_hermitian(rng: &mut ChaCha8Rng, n: usize) -> CMatrix {
        let g = random_matrix(rng, n);
        (&g + g.adjoint()) * c(0.5, 0.0)
    }

    /// Direct double-loop Kronecker product used as the index-arithmetic
    /// oracle for `tensor`.
    fn kron_oracle(a: &CMatrix, b: &CMatrix) -> CMatrix {
        let (ar, ac, br, bc) = (a.nrows(), a.ncols(), b.nrows(), b.ncols());
        let mut out = CMatrix::zeros(ar * br, ac * bc);
        for i in 0..ar {
            for j in 0..ac {
                for k in 0..br {
                    for l in 0..bc {
                        out[(i * br + k, j * bc + l)] = a[(i, j)] * b[(k, l)];
                    }
                }
            }
        }
        out
    }

    #[test]
    fn profile_rejects_bad_inputs() {
        assert!(DimensionProfile::new(&[2]).is_err());
        assert!(DimensionProfile::new(&[2, 1]).is_err());
        assert!(DimensionProfile::new(&[3, 2]).is_err());
        assert!(DimensionProfile::new(&[64, 64, 64]).is_err()); // above cap
        assert!(DimensionProfile::with_cap(&[64, 64, 64], 1 << 20).is_ok());
    }

    #[test]
    fn composite_index_is_big_endian() {
        let p = DimensionProfile::new(&[2, 3, 4]).unwrap();
        assert_eq!(p.composite_index(&[0, 0, 0]), 0);
        assert_eq!(p.composite_index(&[0, 0, 1]), 1);
        assert_eq!(p.composite_index(&[0, 1, 0]), 4);
        assert_eq!(p.composite_index(&[1, 0, 0]), 12);
        assert_eq!(p.composite_index(&[1, 2, 3]), 23);
        for idx in 0..p.total() {
            assert_eq!(p.composite_index(&p.factor_indices(idx)), idx);
        }
        assert_eq!(p.diagonal_index(1), 17);
    }

    #[test]
    fn tensor_identity_case() {
        let i2 = identity(2);
        let i4 = tensor(&i2, &i2).unwrap();
        assert_eq!(i4, identity(4));
    }

    #[test]
    fn tensor_projector_product() {
        let d10 = CMatrix::from_diagonal(&CVector::from_vec(vec![c(1.0, 0.0), c(0.0, 0.0)]));
        let t = tensor(&d10, &d10).unwrap();
        let expected =
            CMatrix::from_fn(4, 4, |i, j| if i == 0 && j == 0 { c(1.0, 0.0) } else { c(0.0, 0.0) });
        assert_eq!(t, expected);
    }

    #[test]
    fn tensor_basis_projectors_match_double_loop_oracle() {
        // |0><0| tensor |1><1| projects onto composite basis index 1.
        let p0 = CMatrix::from_fn(2, 2, |i, j| {
            if i == 0 && j == 0 {
                c(1.0, 0.0)
            } else {
                c(0.0, 0.0)
            }
        });
        let p1 = CMatrix::from_fn(2, 2, |i, j| {
            if i == 1 && j == 1 {
                c(1.0, 0.0)
            } else {
                c(0.0, 0.0)
            }
        });
        let t = tensor(&p0, &p1).unwrap();
        assert_eq!(t, kron_oracle(&p0, &p1));
        for i in 0..4 {
            for j in 0..4 {
                let expected = if i == 1 && j == 1 { 1.0 } else { 0.0 };
                assert_eq!(t[(i, j)], c(expected, 0.0));
            }
        }
    }

    #[test]
    fn tensor_random_matches_double_loop_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let a = random_matrix(&mut rng, 3);
        let b = random_matrix(&mut rng, 4);
        let t = tensor(&a, &b).unwrap();
        assert_eq!(t, kron_oracle(&a, &b));
    }

    #[test]
    fn tensor_respects_cap() {
        let big = identity(128);
        assert!(matches!(tensor(&big, &big).unwrap_err(), Error::SizeCap { .. }));
    }

    #[test]
    fn hs_inner_of_mixed_state_with_projector() {
        let profile = DimensionProfile::new(&[2, 2]).unwrap();
        let mixed = DensityMatrix::maximally_mixed(profile.clone());
        let e0 = CVector::from_vec(vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        let proj = outer(&e0, &e0);
        let v = hs_inner(mixed.matrix(), &proj).unwrap();
        assert_abs_diff_eq!(v.re, 0.25, epsilon = 1e-15);
        assert_abs_diff_eq!(v.im, 0.0, epsilon = 1e-15);
        // <E, E> = 1 for a rank-1 projector.
        let ee = hs_inner(&proj, &proj).unwrap();
        assert_abs_diff_eq!(ee.re, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn hs_inner_dimension_mismatch() {
        let a = identity(2);
        let b = identity(3);
        assert!(hs_inner(&a, &b).is_err());
    }

    #[test]
    fn frobenius_distance_rank_one_projectors() {
        // distance of two rank-1 projectors is sqrt(2(1 - Tr(PQ)))
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..16 {
            let u = CVector::from_fn(4, |_, _| {
                c(rng.sample(StandardNormal), rng.sample(StandardNormal))
            })
            .normalize();
            let v = CVector::from_fn(4, |_, _| {
                c(rng.sample(StandardNormal), rng.sample(StandardNormal))
            })
            .normalize();
            let p = outer(&u, &u);
            let q = outer(&v, &v);
            let d = frobenius_distance(&p, &q).unwrap();
            let overlap = hs_inner(&p, &q).unwrap().re;
            assert_abs_diff_eq!(d, (2.0 * (1.0 - overlap)).sqrt(), epsilon = 1e-12);
        }
    }

    #[test]
    fn frobenius_distance_hand_expanded_2x2() {
        // distance(I/2, diag(1,0)) = sqrt(1/2), by expanding the 2x2 case:
        // the difference is diag(-1/2, 1/2) with squared norm 1/4 + 1/4.
        let half_i = identity(2) * c(0.5, 0.0);
        let d10 = CMatrix::from_diagonal(&CVector::from_vec(vec![c(1.0, 0.0), c(0.0, 0.0)]));
        let d = frobenius_distance(&half_i, &d10).unwrap();
        assert_abs_diff_eq!(d, 0.5f64.sqrt(), epsilon = 1e-15);
        assert_abs_diff_eq!(frobenius_distance(&d10, &d10).unwrap(), 0.0, epsilon = 0.0);
    }

    #[test]
    fn hermitian_eig_known_2x2_cases() {
        let diag = CMatrix::from_diagonal(&CVector::from_vec(vec![c(1.0, 0.0), c(3.0, 0.0)]));
        let (vals, _) = hermitian_eig(&diag).unwrap();
        assert_abs_diff_eq!(vals[0], 3.0, epsilon = 1e-14);
        assert_abs_diff_eq!(vals[1], 1.0, epsilon = 1e-14);

        let flip = CMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]);
        let (vals, vecs) = hermitian_eig(&flip).unwrap();
        assert_abs_diff_eq!(vals[0], 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(vals[1], -1.0, epsilon = 1e-14);
        // eigenvector columns reconstruct the input
        let lam = CMatrix::from_diagonal(&CVector::from_vec(
            vals.iter().map(|&x| c(x, 0.0)).collect(),
        ));
        let recon = &vecs * lam * vecs.adjoint();
        assert!(frobenius_distance(&recon, &flip).unwrap() < 1e-13);
    }

    #[test]
    fn hermitian_eig_reconstructs_random_6x6() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let h = random_hermitian(&mut rng, 6);
        let (vals, vecs) = hermitian_eig(&h).unwrap();
        assert!(vals.windows(2).all(|w| w[0] >= w[1]), "sorted descending");
        let lam = CMatrix::from_diagonal(&CVector::from_vec(
            vals.iter().map(|&x| c(x, 0.0)).collect(),
        ));
        let recon = &vecs * lam * vecs.adjoint();
        let resid = frobenius_distance(&recon, &h).unwrap();
        assert!(resid <= 1e-8 * h.norm(), "residual {resid:.3e}");
    }

    #[test]
    fn hermitian_eig_rejects_non_hermitian() {
        let m = CMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert!(matches!(
            hermitian_eig(&m).unwrap_err(),
            Error::NonHermitian { .. }
        ));
    }

    #[test]
    fn density_matrix_validation() {
        let profile = DimensionProfile::new(&[2, 2]).unwrap();
        let mixed = DensityMatrix::maximally_mixed(profile.clone());
        assert!(DensityMatrix::new(profile.clone(), mixed.matrix().clone()).is_ok());

        // wrong trace
        assert!(DensityMatrix::new(profile.clone(), identity(4)).is_err());

        // negative eigenvalue, trace 1, Hermitian
        let bad = CMatrix::from_diagonal(&CVector::from_vec(vec![
            c(1.5, 0.0),
            c(-0.5, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
        ]));
        assert!(DensityMatrix::new(profile.clone(), bad).is_err());

        // non-Hermitian
        let mut skew = mixed.matrix().clone();
        skew[(0, 1)] = c(0.1, 0.0);
        assert!(DensityMatrix::new(profile, skew).is_err());
    }

    #[test]
    fn density_eigenvalues_sum_to_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let profile = DimensionProfile::new(&[2, 3]).unwrap();
        let g = random_matrix(&mut rng, 6);
        let mut rho = &g * g.adjoint();
        let tr = trace(&rho).re;
        rho /= c(tr, 0.0);
        let dm = DensityMatrix::new(profile, rho).unwrap();
        let (vals, _) = hermitian_eig(dm.matrix()).unwrap();
        let sum: f64 = vals.iter().sum();
        assert_abs_diff_eq!(sum, 1.0, epsilon = 1e-9);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn tensor_respects_trace(seed in 0u64..1000, na in 2usize..5, nb in 2usize..5) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = random_matrix(&mut rng, na);
            let b = random_matrix(&mut rng, nb);
            let t = tensor(&a, &b).unwrap();
            let lhs = trace(&t);
            let rhs = trace(&a) * trace(&b);
            prop_assert!((lhs - rhs).norm() <= 1e-12 * (1.0 + rhs.norm()));
        }

        #[test]
        fn hs_inner_conjugate_symmetry(seed in 0u64..1000, n in 2usize..6) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = random_matrix(&mut rng, n);
            let b = random_matrix(&mut rng, n);
            let ab = hs_inner(&a, &b).unwrap();
            let ba = hs_inner(&b, &a).unwrap();
            prop_assert!((ab - ba.conj()).norm() <= 1e-12 * (1.0 + ab.norm()));

            // real and symmetric on Hermitian pairs
            let ha = (&a + a.adjoint()) * c(0.5, 0.0);
            let hb = (&b + b.adjoint()) * c(0.5, 0.0);
            let hab = hs_inner(&ha, &hb).unwrap();
            prop_assert!(hab.im.abs() <= 1e-12 * (1.0 + hab.norm()));
        }

        #[test]
        fn hs_norm_is_nonnegative(seed in 0u64..1000, n in 2usize..6) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let x = random_matrix(&mut rng, n);
            let xx = hs_inner(&x, &x).unwrap();
            prop_assert!(xx.re >= 0.0);
            prop_assert!(xx.im.abs() <= 1e-12 * (1.0 + xx.re));
            prop_assert!((xx.re.sqrt() - x.norm()).abs() <= 1e-9);
        }

        #[test]
        fn frobenius_triangle_inequality(seed in 0u64..1000, n in 2usize..6) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = random_matrix(&mut rng, n);
            let b = random_matrix(&mut rng, n);
            let cm = random_matrix(&mut rng, n);
            let ab = frobenius_distance(&a, &b).unwrap();
            let bc = frobenius_distance(&b, &cm).unwrap();
            let ac = frobenius_distance(&a, &cm).unwrap();
            prop_assert!(ac <= ab + bc + 1e-9);
            // symmetry
            prop_assert!((ab - frobenius_distance(&b, &a).unwrap()).abs() <= 1e-12);
        }

        #[test]
        fn tensor_chain_is_left_associative(seed in 0u64..1000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = random_matrix(&mut rng, 2);
            let b = random_matrix(&mut rng, 2);
            let cm = random_matrix(&mut rng, 3);
            let left = tensor(&tensor(&a, &b).unwrap(), &cm).unwrap();
            let right = tensor(&a, &tensor(&b, &cm).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
