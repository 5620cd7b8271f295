//! Dense complex-matrix algebra at small dimension: construction,
//! Hermiticity and positivity tests, tensor products, partial traces and
//! the trace distance.
//!
//! Everything here is plain row-major storage with `O(n^3)` loops; the
//! intended scale is dimension <= 64. Hermitian eigenproblems are
//! delegated to [`nalgebra`].

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance for the Hermiticity check `max |A - A^dag| <= HERM_TOL`.
pub const HERM_TOL: f64 = 1e-10;

/// Default eigenvalue floor for positivity: `min eig >= -POSITIVITY_TOL`.
pub const POSITIVITY_TOL: f64 = 1e-9;

/// Operators are considered equal when their max-entry distance is below
/// this, unless a caller overrides.
pub const EQ_TOL: f64 = 1e-10;

/// Dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "CMatrixRepr", into = "CMatrixRepr")]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

/// JSON form: `{"rows": r, "cols": c, "data": [[re, im], ...]}` row-major.
#[derive(Serialize, Deserialize)]
struct CMatrixRepr {
    rows: usize,
    cols: usize,
    data: Vec<[f64; 2]>,
}

impl TryFrom<CMatrixRepr> for CMatrix {
    type Error = Error;

    fn try_from(repr: CMatrixRepr) -> Result<Self> {
        let data = repr
            .data
            .iter()
            .map(|&[re, im]| Complex64::new(re, im))
            .collect();
        CMatrix::from_vec(repr.rows, repr.cols, data)
    }
}

impl From<CMatrix> for CMatrixRepr {
    fn from(m: CMatrix) -> Self {
        CMatrixRepr {
            rows: m.rows,
            cols: m.cols,
            data: m.data.iter().map(|z| [z.re, z.im]).collect(),
        }
    }
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex64::ZERO; rows * cols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, dim, |i, j| {
            if i == j {
                Complex64::ONE
            } else {
                Complex64::ZERO
            }
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds from row-major data, validating length and finiteness.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::BadDataLength {
                rows,
                cols,
                len: data.len(),
            });
        }
        let m = Self { rows, cols, data };
        if !m.is_finite() {
            return Err(Error::NonFinite);
        }
        Ok(m)
    }

    /// Builds a matrix with real entries; panics if the slice length is wrong.
    pub fn from_real(rows: usize, cols: usize, entries: &[f64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count");
        Self {
            rows,
            cols,
            data: entries.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        }
    }

    /// Diagonal matrix from real diagonal entries.
    pub fn diag_real(diag: &[f64]) -> Self {
        let n = diag.len();
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Complex64::new(diag[i], 0.0)
            } else {
                Complex64::ZERO
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> Complex64 {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    pub fn is_finite(&self) -> bool {
        self.data
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.at(j, i).conj())
    }

    pub fn trace(&self) -> Complex64 {
        assert!(self.is_square(), "trace of a non-square matrix");
        (0..self.rows).map(|i| self.at(i, i)).sum()
    }

    /// Hermitian part `(A + A^dag) / 2`.
    pub fn symmetrized(&self) -> Self {
        assert!(self.is_square());
        Self::from_fn(self.rows, self.cols, |i, j| {
            (self.at(i, j) + self.at(j, i).conj()) * 0.5
        })
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Max-entry distance to another matrix of the same shape.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Equality up to `tol` in max-entry distance.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self.rows, self.cols) == (other.rows, other.cols) && self.max_abs_diff(other) <= tol
    }

    /// Deviation from Hermiticity, `max |A - A^dag|`.
    pub fn hermiticity_defect(&self) -> f64 {
        assert!(self.is_square());
        let mut worst: f64 = 0.0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                worst = worst.max((self.at(i, j) - self.at(j, i).conj()).norm());
            }
        }
        worst
    }
}

impl std::ops::Add for &CMatrix {
    type Output = CMatrix;

    fn add(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMatrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j) + rhs.at(i, j))
    }
}

impl std::ops::Sub for &CMatrix {
    type Output = CMatrix;

    fn sub(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMatrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j) - rhs.at(i, j))
    }
}

/// Matrix product.
impl std::ops::Mul for &CMatrix {
    type Output = CMatrix;

    fn mul(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions");
        let mut out = CMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.at(i, k);
                if aik == Complex64::ZERO {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += aik * rhs.at(k, j);
                }
            }
        }
        out
    }
}

impl std::ops::Mul<Complex64> for &CMatrix {
    type Output = CMatrix;

    fn mul(self, rhs: Complex64) -> CMatrix {
        CMatrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j) * rhs)
    }
}

impl std::ops::Mul<f64> for &CMatrix {
    type Output = CMatrix;

    fn mul(self, rhs: f64) -> CMatrix {
        CMatrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j) * rhs)
    }
}

/// Pauli x.
pub fn pauli_x() -> CMatrix {
    CMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0])
}

/// Pauli y.
pub fn pauli_y() -> CMatrix {
    CMatrix::from_vec(
        2,
        2,
        vec![
            Complex64::ZERO,
            Complex64::new(0.0, -1.0),
            Complex64::new(0.0, 1.0),
            Complex64::ZERO,
        ],
    )
    .expect("static data")
}

/// Pauli z.
pub fn pauli_z() -> CMatrix {
    CMatrix::from_real(2, 2, &[1.0, 0.0, 0.0, -1.0])
}

/// A square matrix certified Hermitian within [`HERM_TOL`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "CMatrix", into = "CMatrix")]
pub struct HermitianMatrix {
    underlying: CMatrix,
}

impl TryFrom<CMatrix> for HermitianMatrix {
    type Error = Error;

    fn try_from(m: CMatrix) -> Result<Self> {
        HermitianMatrix::new(m)
    }
}

impl From<HermitianMatrix> for CMatrix {
    fn from(h: HermitianMatrix) -> CMatrix {
        h.underlying
    }
}

impl HermitianMatrix {
    pub fn new(m: CMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        if !m.is_finite() {
            return Err(Error::NonFinite);
        }
        let defect = m.hermiticity_defect();
        if defect > HERM_TOL {
            return Err(Error::NotHermitian {
                max_deviation: defect,
            });
        }
        Ok(Self { underlying: m })
    }

    pub fn dim(&self) -> usize {
        self.underlying.rows()
    }

    pub fn as_matrix(&self) -> &CMatrix {
        &self.underlying
    }

    pub fn into_matrix(self) -> CMatrix {
        self.underlying
    }

    /// Eigendecomposition; values ascending, vectors as matching columns.
    pub fn eigen(&self) -> Result<HermitianEigen> {
        hermitian_eigen(&self.underlying)
    }

    /// True iff the smallest eigenvalue is >= `-tol`.
    ///
    /// The matrix is symmetrized before the eigensolve so that float noise
    /// within [`HERM_TOL`] cannot leak into the spectrum.
    pub fn is_positive(&self, tol: f64) -> Result<bool> {
        let eig = self.eigen()?;
        Ok(eig.values.first().is_none_or(|&lo| lo >= -tol))
    }
}

/// Eigensystem of a Hermitian matrix: real eigenvalues in ascending order
/// and orthonormal eigenvectors as the columns of `vectors`.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: CMatrix,
}

/// Eigendecomposition of the Hermitian part of `m`.
///
/// Always symmetrizes first; callers hold matrices that are Hermitian only
/// up to float noise from products like `F rho F`.
pub fn hermitian_eigen(m: &CMatrix) -> Result<HermitianEigen> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let sym = m.symmetrized();
    let dm = nalgebra::DMatrix::from_fn(n, n, |i, j| sym.at(i, j));
    let eig = dm
        .try_symmetric_eigen(f64::EPSILON, 10_000)
        .ok_or(Error::EigenDidNotConverge)?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let vectors = CMatrix::from_fn(n, n, |i, j| eig.eigenvectors[(i, order[j])]);
    Ok(HermitianEigen { values, vectors })
}

/// Eigenvalues only, ascending.
pub fn hermitian_eigenvalues(m: &CMatrix) -> Result<Vec<f64>> {
    Ok(hermitian_eigen(m)?.values)
}

/// Kronecker product. Dimensions multiply; basis order is row-major over
/// `(index of a, index of b)` pairs.
pub fn tensor(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let (ra, ca) = (a.rows(), a.cols());
    let (rb, cb) = (b.rows(), b.cols());
    CMatrix::from_fn(ra * rb, ca * cb, |i, j| {
        a.at(i / rb, j / cb) * b.at(i % rb, j % cb)
    })
}

/// Which factor of a bipartite system to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Partial trace of a square matrix on a `d_a x d_b` bipartite space.
///
/// Returns the `d_a x d_a` (keep = A) or `d_b x d_b` (keep = B) matrix;
/// the total trace is preserved and the map is linear in `m`.
pub fn partial_trace(m: &CMatrix, dims: (usize, usize), keep: Subsystem) -> Result<CMatrix> {
    let (d_a, d_b) = dims;
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.rows() != d_a * d_b {
        return Err(Error::BadBipartiteSplit {
            side: m.rows(),
            d_a,
            d_b,
        });
    }
    let out = match keep {
        Subsystem::A => CMatrix::from_fn(d_a, d_a, |a, a2| {
            (0..d_b).map(|b| m.at(a * d_b + b, a2 * d_b + b)).sum()
        }),
        Subsystem::B => CMatrix::from_fn(d_b, d_b, |b, b2| {
            (0..d_a).map(|a| m.at(a * d_b + b, a * d_b + b2)).sum()
        }),
    };
    Ok(out)
}

/// Trace distance `(1/2) sum |eig(a - b)|` between Hermitian operators.
///
/// Zero iff `a = b` up to tolerance; symmetric; satisfies the triangle
/// inequality. For density operators the value lies in `[0, 1]`.
pub fn trace_distance(a: &CMatrix, b: &CMatrix) -> Result<f64> {
    if (a.rows(), a.cols()) != (b.rows(), b.cols()) {
        return Err(Error::DimensionMismatch {
            context: "trace_distance",
            expected: a.rows(),
            found: b.rows(),
        });
    }
    let diff = a - b;
    let eigs = hermitian_eigenvalues(&diff)?;
    Ok(0.5 * eigs.iter().map(|v| v.abs()).sum::<f64>())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ket0_proj() -> CMatrix {
        CMatrix::diag_real(&[1.0, 0.0])
    }

    fn ket1_proj() -> CMatrix {
        CMatrix::diag_real(&[0.0, 1.0])
    }

    #[test]
    fn tensor_identity_case() {
        let i2 = CMatrix::identity(2);
        assert!(tensor(&i2, &i2).approx_eq(&CMatrix::identity(4), 0.0));
    }

    #[test]
    fn tensor_projector_case() {
        // |0><0| (x) |1><1| = diag(0,1,0,0) in basis {00,01,10,11},
        // by hand Kronecker expansion.
        let t = tensor(&ket0_proj(), &ket1_proj());
        assert!(t.approx_eq(&CMatrix::diag_real(&[0.0, 1.0, 0.0, 0.0]), 0.0));
    }

    #[test]
    fn tensor_acts_on_columns() {
        // (sigma_x (x) I) |00> = |10>, by direct matrix-vector product.
        let ket00 = CMatrix::from_real(4, 1, &[1.0, 0.0, 0.0, 0.0]);
        let op = tensor(&pauli_x(), &CMatrix::identity(2));
        let moved = &op * &ket00;
        assert!(moved.approx_eq(&CMatrix::from_real(4, 1, &[0.0, 0.0, 1.0, 0.0]), 0.0));
    }

    #[test]
    fn tensor_mixed_product_property() {
        // (a (x) b)(c (x) d) = (ac) (x) (bd) on a small concrete case.
        let a = CMatrix::from_real(2, 2, &[1.0, 2.0, 3.0, 4.0]);
        let b = pauli_x();
        let c = CMatrix::from_real(2, 2, &[0.0, 1.0, -1.0, 0.5]);
        let d = pauli_z();
        let lhs = &tensor(&a, &b) * &tensor(&c, &d);
        let rhs = tensor(&(&a * &c), &(&b * &d));
        assert!(lhs.approx_eq(&rhs, 1e-12));
    }

    fn singlet_projector() -> CMatrix {
        // |psi> = (|01> - |10>)/sqrt(2)
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let psi = [0.0, s, -s, 0.0];
        CMatrix::from_fn(4, 4, |i, j| Complex64::new(psi[i] * psi[j], 0.0))
    }

    #[test]
    fn partial_trace_singlet_is_maximally_mixed() {
        let rho_a = partial_trace(&singlet_projector(), (2, 2), Subsystem::A).unwrap();
        assert!(rho_a.approx_eq(&CMatrix::diag_real(&[0.5, 0.5]), 1e-15));
    }

    #[test]
    fn partial_trace_of_product_projector() {
        let rho0 = tensor(&ket1_proj(), &ket0_proj());
        let traced = partial_trace(&rho0, (2, 2), Subsystem::A).unwrap();
        assert!(traced.approx_eq(&ket1_proj(), 0.0));
    }

    #[test]
    fn partial_trace_factorizes_products() {
        let rho = CMatrix::from_real(2, 2, &[0.7, 0.1, 0.1, 0.3]);
        let sigma = CMatrix::from_real(3, 3, &[0.5, 0.0, 0.2, 0.0, 0.25, 0.0, 0.2, 0.0, 0.25]);
        let kept = partial_trace(&tensor(&rho, &sigma), (2, 3), Subsystem::A).unwrap();
        let expect = &rho * sigma.trace();
        assert!(kept.approx_eq(&expect, 1e-14));
    }

    #[test]
    fn partial_trace_preserves_trace() {
        let m = CMatrix::from_fn(6, 6, |i, j| Complex64::new(i as f64, j as f64 - 2.0));
        for keep in [Subsystem::A, Subsystem::B] {
            let t = partial_trace(&m, (2, 3), keep).unwrap();
            assert!((t.trace() - m.trace()).norm() < 1e-12);
        }
    }

    #[test]
    fn partial_trace_rejects_bad_split() {
        let m = CMatrix::identity(5);
        assert!(matches!(
            partial_trace(&m, (2, 2), Subsystem::A),
            Err(Error::BadBipartiteSplit { .. })
        ));
    }

    #[test]
    fn positivity_of_half_identity() {
        let h = HermitianMatrix::new(&CMatrix::identity(2) * 0.5).unwrap();
        assert!(h.is_positive(POSITIVITY_TOL).unwrap());
    }

    #[test]
    fn positivity_rejects_negative_eigenvalue() {
        let h = HermitianMatrix::new(CMatrix::diag_real(&[1.0, -0.01])).unwrap();
        assert!(!h.is_positive(POSITIVITY_TOL).unwrap());
    }

    #[test]
    fn positivity_rejects_pauli_x() {
        // eigenvalues of sigma_x are +1 and -1
        let h = HermitianMatrix::new(pauli_x()).unwrap();
        assert!(!h.is_positive(POSITIVITY_TOL).unwrap());
        let eig = h.eigen().unwrap();
        assert!((eig.values[0] + 1.0).abs() < 1e-12);
        assert!((eig.values[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn hermitian_rejects_asymmetric() {
        let m = CMatrix::from_real(2, 2, &[0.0, 1.0, 0.0, 0.0]);
        assert!(matches!(
            HermitianMatrix::new(m),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn trace_distance_frozen_cases() {
        let rho = ket0_proj();
        assert!(trace_distance(&rho, &rho).unwrap().abs() < 1e-15);
        // eigenvalues of diag(1,-1): distance 1
        assert!((trace_distance(&ket0_proj(), &ket1_proj()).unwrap() - 1.0).abs() < 1e-12);
        // eigenvalues of diag(1/2,-1/2): distance 1/2
        let half = &CMatrix::identity(2) * 0.5;
        assert!((trace_distance(&ket0_proj(), &half).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn trace_distance_dimension_mismatch() {
        let a = CMatrix::identity(2);
        let b = CMatrix::identity(3);
        assert!(trace_distance(&a, &b).is_err());
    }

    #[test]
    fn eigen_reconstructs_matrix() {
        let m = CMatrix::from_vec(
            3,
            3,
            vec![
                Complex64::new(2.0, 0.0),
                Complex64::new(0.5, 0.25),
                Complex64::new(0.0, -1.0),
                Complex64::new(0.5, -0.25),
                Complex64::new(-1.0, 0.0),
                Complex64::new(0.3, 0.0),
                Complex64::new(0.0, 1.0),
                Complex64::new(0.3, 0.0),
                Complex64::new(0.7, 0.0),
            ],
        )
        .unwrap();
        let eig = hermitian_eigen(&m).unwrap();
        // sum_k lambda_k |v_k><v_k| = m
        let mut rebuilt = CMatrix::zeros(3, 3);
        for k in 0..3 {
            let col = CMatrix::from_fn(3, 1, |i, _| eig.vectors.at(i, k));
            rebuilt = &rebuilt + &(&(&col * &col.adjoint()) * eig.values[k]);
        }
        assert!(rebuilt.approx_eq(&m, 1e-12));
        assert!(eig.values.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn json_round_trip_matches_schema() {
        let m = CMatrix::from_vec(
            1,
            2,
            vec![Complex64::new(1.0, -2.0), Complex64::new(0.0, 3.5)],
        )
        .unwrap();
        let json = serde_json::to_value(&m).unwrap();
        assert_eq!(
            json,
            serde_json::json!({"rows": 1, "cols": 2, "data": [[1.0, -2.0], [0.0, 3.5]]})
        );
        let back: CMatrix = serde_json::from_value(json).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn json_rejects_bad_length_and_nonfinite() {
        let bad_len = serde_json::json!({"rows": 2, "cols": 2, "data": [[1.0, 0.0]]});
        assert!(serde_json::from_value::<CMatrix>(bad_len).is_err());
        let nonfinite = serde_json::json!({"rows": 1, "cols": 1, "data": [[f64::INFINITY, 0.0]]});
        assert!(serde_json::from_value::<CMatrix>(nonfinite).is_err());
    }
}
