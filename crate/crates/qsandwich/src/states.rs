//! Constructors for every state family the witness machinery works with:
//! Schmidt-form entangled states, pure product projectors, the totally mixed
//! state, Werner mixtures, and Schmidt decomposition of bipartite vectors.
//!
//! A Schmidt-form state on factors of dimensions `n_1 <= ... <= n_p` is
//!
//! ```text
//! psi = sum_{j < n_1} v_j |j j ... j>,    sum |v_j|^2 = 1,
//! ```
//!
//! written in the computational basis. States given in arbitrary local bases
//! reduce to this form by conjugating with local unitaries, so the local
//! bases are not stored per state.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{outer, CMatrix, CVector, DensityMatrix, DimensionProfile};

/// Coefficient-sum tolerance accepted before exact renormalization.
pub const NORMALIZATION_TOL: f64 = 1e-9;
/// Unit-norm tolerance for product-state factors.
pub const FACTOR_NORM_TOL: f64 = 1e-12;

/// The coefficients of a Schmidt-form entangled state, with the dominant
/// index marking the largest `|v_j|` (smallest index on ties).
///
/// `|v_{j0}|^2` is the witness threshold: every state whose overlap with
/// this state's projector exceeds it is entangled.
#[derive(Debug, Clone)]
pub struct SchmidtVector {
    profile: DimensionProfile,
    coeffs: Vec<Complex64>,
    dominant_index: usize,
}

impl SchmidtVector {
    pub fn profile(&self) -> &DimensionProfile {
        &self.profile
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Index of the largest coefficient modulus (smallest index on ties).
    pub fn dominant_index(&self) -> usize {
        self.dominant_index
    }

    /// `|v_{j0}|^2`, the witness threshold.
    pub fn witness_threshold(&self) -> f64 {
        self.coeffs[self.dominant_index].norm_sqr()
    }

    /// The state vector on the composite space.
    pub fn state_vector(&self) -> CVector {
        let mut psi = CVector::zeros(self.profile.total());
        for (j, &v) in self.coeffs.iter().enumerate() {
            psi[self.profile.diagonal_index(j)] = v;
        }
        psi
    }

    /// The rank-1 projector onto the state.
    pub fn density(&self) -> DensityMatrix {
        let n = self.profile.total();
        let mut mat = CMatrix::zeros(n, n);
        for (j, &vj) in self.coeffs.iter().enumerate() {
            for (k, &vk) in self.coeffs.iter().enumerate() {
                mat[(self.profile.diagonal_index(j), self.profile.diagonal_index(k))] =
                    vj * vk.conj();
            }
        }
        DensityMatrix::trusted(self.profile.clone(), mat)
    }

    /// The closest pure product projector: all factors pinned to the
    /// dominant basis index.
    pub fn closest_product_factors(&self) -> ProductFactors {
        let indices = vec![self.dominant_index; self.profile.factor_count()];
        ProductFactors::basis(self.profile.clone(), &indices)
            .expect("dominant index is valid in every factor")
    }
}

/// Builds a Schmidt-form state and its density matrix.
///
/// Coefficients must have length `n_1`, squared moduli summing to 1 within
/// `1e-9` (they are renormalized exactly on construction so downstream
/// thresholds are consistent), and at least two nonzero entries; a single
/// nonzero coefficient would describe a product state, which has no
/// entangled neighborhood.
pub fn schmidt_state(
    profile: &DimensionProfile,
    coeffs: &[Complex64],
) -> Result<(SchmidtVector, DensityMatrix)> {
    let n1 = profile.min_dim();
    if coeffs.len() != n1 {
        return Err(Error::InvalidState(format!(
            "expected {n1} coefficients for profile {profile}, got {}",
            coeffs.len()
        )));
    }
    if coeffs.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
        return Err(Error::InvalidState("non-finite coefficient".into()));
    }
    let sum: f64 = coeffs.iter().map(|v| v.norm_sqr()).sum();
    if (sum - 1.0).abs() > NORMALIZATION_TOL {
        return Err(Error::InvalidState(format!(
            "squared coefficient moduli sum to {sum}, expected 1 within {NORMALIZATION_TOL:e}"
        )));
    }
    let nonzero = coeffs.iter().filter(|v| v.norm_sqr() > 0.0).count();
    if nonzero < 2 {
        return Err(Error::InvalidState(
            "fewer than two nonzero coefficients: the state would be a product state".into(),
        ));
    }
    let scale = Complex64::new(1.0 / sum.sqrt(), 0.0);
    let coeffs: Vec<Complex64> = coeffs.iter().map(|v| v * scale).collect();
    let mut dominant_index = 0;
    for (j, v) in coeffs.iter().enumerate() {
        if v.norm_sqr() > coeffs[dominant_index].norm_sqr() {
            dominant_index = j;
        }
    }
    let sv = SchmidtVector {
        profile: profile.clone(),
        coeffs,
        dominant_index,
    };
    let dm = sv.density();
    Ok((sv, dm))
}

/// The Schmidt-form state with every coefficient equal to `1/sqrt(n)`;
/// requires all factor dimensions equal. These states have the smallest
/// possible witness threshold `1/n` and so the largest entangled
/// neighborhood.
pub fn maximally_entangled(profile: &DimensionProfile) -> Result<(SchmidtVector, DensityMatrix)> {
    if !profile.is_uniform() {
        return Err(Error::InvalidState(format!(
            "maximally entangled states need equal factor dimensions, got {profile}"
        )));
    }
    let n = profile.min_dim();
    let w = Complex64::new(1.0 / (n as f64).sqrt(), 0.0);
    schmidt_state(profile, &vec![w; n])
}

/// One unit vector per factor, describing the pure product state that is
/// their tensor product.
#[derive(Debug, Clone)]
pub struct ProductFactors {
    profile: DimensionProfile,
    factors: Vec<CVector>,
}

impl ProductFactors {
    pub fn new(profile: DimensionProfile, factors: Vec<CVector>) -> Result<Self> {
        if factors.len() != profile.factor_count() {
            return Err(Error::DimensionMismatch {
                expected: format!("{} factors", profile.factor_count()),
                found: format!("{}", factors.len()),
            });
        }
        for (alpha, (f, &n)) in factors.iter().zip(profile.dims()).enumerate() {
            if f.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: format!("factor {alpha} of length {n}"),
                    found: format!("{}", f.len()),
                });
            }
            let norm = f.norm();
            if (norm - 1.0).abs() > FACTOR_NORM_TOL {
                return Err(Error::InvalidState(format!(
                    "factor {alpha} has norm {norm}, expected 1 within {FACTOR_NORM_TOL:e}"
                )));
            }
        }
        Ok(Self { profile, factors })
    }

    /// Product of computational basis vectors, one index per factor.
    pub fn basis(profile: DimensionProfile, indices: &[usize]) -> Result<Self> {
        if indices.len() != profile.factor_count() {
            return Err(Error::DimensionMismatch {
                expected: format!("{} indices", profile.factor_count()),
                found: format!("{}", indices.len()),
            });
        }
        let mut factors = Vec::with_capacity(indices.len());
        for (&j, &n) in indices.iter().zip(profile.dims()) {
            if j >= n {
                return Err(Error::InvalidState(format!(
                    "basis index {j} out of range for factor of dimension {n}"
                )));
            }
            let mut f = CVector::zeros(n);
            f[j] = Complex64::new(1.0, 0.0);
            factors.push(f);
        }
        Ok(Self { profile, factors })
    }

    pub fn profile(&self) -> &DimensionProfile {
        &self.profile
    }

    pub fn factors(&self) -> &[CVector] {
        &self.factors
    }

    /// The tensor product of the factors as a vector on the composite space.
    pub fn state_vector(&self) -> CVector {
        let mut psi = CVector::from_element(1, Complex64::new(1.0, 0.0));
        for f in &self.factors {
            let mut next = CVector::zeros(psi.len() * f.len());
            for i in 0..psi.len() {
                for j in 0..f.len() {
                    next[i * f.len() + j] = psi[i] * f[j];
                }
            }
            psi = next;
        }
        psi
    }
}

/// The rank-1 projector onto the product of the factors.
pub fn product_projector(factors: &ProductFactors) -> DensityMatrix {
    let mut psi = factors.state_vector();
    // Exact renormalization keeps the trace at 1 to machine precision even
    // when each factor is only unit within FACTOR_NORM_TOL.
    let norm = psi.norm();
    psi /= Complex64::new(norm, 0.0);
    DensityMatrix::trusted(factors.profile().clone(), outer(&psi, &psi))
}

/// A product projector with zero overlap against every Schmidt-form state
/// on the profile: all factors at basis index 0 except the last at index 1.
/// Such projectors commute with the reference and sit on the far sandwich
/// plane.
pub fn far_product_factors(profile: &DimensionProfile) -> ProductFactors {
    let mut indices = vec![0usize; profile.factor_count()];
    *indices.last_mut().expect("p >= 2") = 1;
    ProductFactors::basis(profile.clone(), &indices).expect("index 1 is valid: every dim >= 2")
}

/// Mixing weight for the Werner family `(1-s) I/N + s E` on a profile with
/// all factor dimensions equal.
#[derive(Debug, Clone)]
pub struct WernerParams {
    profile: DimensionProfile,
    s: f64,
}

impl WernerParams {
    pub fn new(profile: DimensionProfile, s: f64) -> Result<Self> {
        if !profile.is_uniform() {
            return Err(Error::InvalidState(format!(
                "Werner mixtures need equal factor dimensions, got {profile}"
            )));
        }
        if !(0.0..=1.0).contains(&s) || !s.is_finite() {
            return Err(Error::InvalidStrength(s));
        }
        Ok(Self { profile, s })
    }

    pub fn profile(&self) -> &DimensionProfile {
        &self.profile
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    /// The separability boundary weight `s* = 1/(1 + n^(p-1))`: the Werner
    /// state at `s*` is the separable state on the mixing line closest to
    /// the maximally entangled projector. For two factors it lies exactly
    /// on the near sandwich plane; for more factors it lies strictly inside
    /// the sandwich.
    pub fn boundary_mixing(profile: &DimensionProfile) -> Result<f64> {
        if !profile.is_uniform() {
            return Err(Error::InvalidState(format!(
                "Werner mixtures need equal factor dimensions, got {profile}"
            )));
        }
        let n = profile.min_dim() as f64;
        let p = profile.factor_count() as u32;
        Ok(1.0 / (1.0 + n.powi(p as i32 - 1)))
    }
}

/// The convex mixture `(1-s) I/N + s e`.
pub fn werner(params: &WernerParams, e: &DensityMatrix) -> Result<DensityMatrix> {
    if e.profile() != params.profile() {
        return Err(Error::DimensionMismatch {
            expected: params.profile().to_string(),
            found: e.profile().to_string(),
        });
    }
    let n = params.profile().total();
    let s = Complex64::new(params.s, 0.0);
    let w = Complex64::new((1.0 - params.s) / n as f64, 0.0);
    let mut mat = e.matrix() * s;
    for i in 0..n {
        mat[(i, i)] += w;
    }
    Ok(DensityMatrix::trusted(params.profile().clone(), mat))
}

/// Result of a bipartite Schmidt decomposition: nonnegative coefficients in
/// descending order (phases absorbed into the local bases) together with
/// the matching orthonormal local vectors.
#[derive(Debug, Clone)]
pub struct SchmidtDecomposition {
    pub coeffs: Vec<f64>,
    pub left: Vec<CVector>,
    pub right: Vec<CVector>,
}

impl SchmidtDecomposition {
    /// Rebuilds the state vector `sum_k c_k (left_k tensor right_k)`.
    pub fn reconstruct(&self) -> CVector {
        let n1 = self.left[0].len();
        let n2 = self.right[0].len();
        let mut psi = CVector::zeros(n1 * n2);
        for ((&c, l), r) in self.coeffs.iter().zip(&self.left).zip(&self.right) {
            for i in 0..n1 {
                for j in 0..n2 {
                    psi[i * n2 + j] += Complex64::new(c, 0.0) * l[i] * r[j];
                }
            }
        }
        psi
    }
}

/// Schmidt decomposition of a bipartite vector via singular value
/// decomposition of its `n_1 x n_2` coefficient matrix. The input is
/// normalized first; a zero vector is rejected. A product vector comes back
/// with a single nonzero coefficient.
pub fn schmidt_decompose(
    profile: &DimensionProfile,
    psi: &CVector,
) -> Result<SchmidtDecomposition> {
    if profile.factor_count() != 2 {
        return Err(Error::UnsupportedProfile(format!(
            "Schmidt decomposition needs a bipartite profile, got {} factors",
            profile.factor_count()
        )));
    }
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
    let (n1, n2) = (profile.dims()[0], profile.dims()[1]);
    let m = CMatrix::from_fn(n1, n2, |i, j| psi[i * n2 + j] / Complex64::new(norm, 0.0));
    let svd = m.svd(true, true);
    let u = svd.u.expect("requested");
    let v_t = svd.v_t.expect("requested");
    let k = svd.singular_values.len();
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&a, &b| {
        svd.singular_values[b]
            .partial_cmp(&svd.singular_values[a])
            .expect("finite singular values")
    });
    let mut coeffs = Vec::with_capacity(k);
    let mut left = Vec::with_capacity(k);
    let mut right = Vec::with_capacity(k);
    for &idx in &order {
        coeffs.push(svd.singular_values[idx]);
        left.push(CVector::from_fn(n1, |i, _| u[(i, idx)]));
        right.push(CVector::from_fn(n2, |j, _| v_t[(idx, j)]));
    }
    Ok(SchmidtDecomposition { coeffs, left, right })
}
