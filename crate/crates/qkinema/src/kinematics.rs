//! State spaces and their convex structure.
//!
//! Two layers of state are kept deliberately distinct:
//!
//! * [`DensityOperator`]: a positive unit-trace Hermitian matrix, the
//!   standard quantum state. Distinct preparations that average to the
//!   same matrix are *identified* at this layer.
//! * [`Ensemble`]: an explicit weighted list of density operators, i.e.
//!   a preparation record. Two ensembles with the same
//!   [barycenter](Ensemble::barycenter) are different values here; whether
//!   they should be told apart is exactly the question the rest of the
//!   crate mechanizes.
//!
//! Ensembles are never canonicalized: no merging of identical states, no
//! sorting. Identity of ensembles is structural.

use num_complex::Complex64;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::operator::{self, CMatrix, HermitianMatrix, POSITIVITY_TOL};

/// Tolerance on `|Tr rho - 1|`.
pub const TRACE_TOL: f64 = 1e-10;

/// Tolerance on `|<psi|psi> - 1|` and on ensemble weight sums.
pub const NORM_TOL: f64 = 1e-10;

/// Spectral weights below this are dropped by
/// [`eigen_decomposition_ensemble`].
pub const EIGENVALUE_FLOOR: f64 = 1e-12;

/// A positive unit-trace Hermitian matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "CMatrix", into = "CMatrix")]
pub struct DensityOperator {
    matrix: HermitianMatrix,
}

impl TryFrom<CMatrix> for DensityOperator {
    type Error = Error;

    fn try_from(m: CMatrix) -> Result<Self> {
        DensityOperator::new(m)
    }
}

impl From<DensityOperator> for CMatrix {
    fn from(rho: DensityOperator) -> CMatrix {
        rho.matrix.into_matrix()
    }
}

impl DensityOperator {
    /// Validates Hermiticity, positivity (eigenvalue floor
    /// [`POSITIVITY_TOL`]) and unit trace.
    pub fn new(m: CMatrix) -> Result<Self> {
        let herm = HermitianMatrix::new(m)?;
        let eig = herm.eigen()?;
        if let Some(&lo) = eig.values.first() {
            if lo < -POSITIVITY_TOL {
                return Err(Error::NotPositive { min_eigenvalue: lo });
            }
        }
        Self::from_hermitian_unchecked_psd(herm)
    }

    /// Skips the eigensolve; for callers that hold a matrix which is
    /// positive by construction (projectors, convex sums of states).
    /// Hermiticity and trace are still checked.
    pub(crate) fn new_trusted_psd(m: CMatrix) -> Result<Self> {
        Self::from_hermitian_unchecked_psd(HermitianMatrix::new(m)?)
    }

    fn from_hermitian_unchecked_psd(herm: HermitianMatrix) -> Result<Self> {
        let tr = herm.as_matrix().trace();
        if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
            return Err(Error::TraceNotOne { trace: tr.re });
        }
        Ok(Self { matrix: herm })
    }

    /// `I / dim`.
    pub fn maximally_mixed(dim: usize) -> Self {
        assert!(dim >= 1);
        Self::new_trusted_psd(&CMatrix::identity(dim) * (1.0 / dim as f64)).expect("valid")
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &CMatrix {
        self.matrix.as_matrix()
    }

    pub fn hermitian(&self) -> &HermitianMatrix {
        &self.matrix
    }

    /// Trace distance to another state, clamped to `[0, 1]`.
    pub fn trace_distance(&self, other: &Self) -> Result<f64> {
        Ok(operator::trace_distance(self.matrix(), other.matrix())?.clamp(0.0, 1.0))
    }

    /// Max-entry equality within `tol`.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.matrix().approx_eq(other.matrix(), tol)
    }
}

/// A unit vector in the Hilbert space.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: Vec<Complex64>,
}

impl PureState {
    /// Requires `|<psi|psi> - 1| <= NORM_TOL`.
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm_sq: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if !norm_sq.is_finite() {
            return Err(Error::NonFinite);
        }
        if (norm_sq - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm_sq });
        }
        Ok(Self { amplitudes })
    }

    /// Normalizes the given vector; errors on the zero vector.
    pub fn normalized(amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm_sq: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if !norm_sq.is_finite() {
            return Err(Error::NonFinite);
        }
        if norm_sq <= 0.0 {
            return Err(Error::ZeroVector);
        }
        let inv = 1.0 / norm_sq.sqrt();
        Ok(Self {
            amplitudes: amplitudes.into_iter().map(|z| z * inv).collect(),
        })
    }

    /// Computational basis vector `|k>` in dimension `dim`.
    pub fn basis(dim: usize, k: usize) -> Result<Self> {
        if k >= dim {
            return Err(Error::OutOfRange {
                index: k,
                size: dim,
            });
        }
        let mut amplitudes = vec![Complex64::ZERO; dim];
        amplitudes[k] = Complex64::ONE;
        Ok(Self { amplitudes })
    }

    /// Qubit `|+> = (|0> + |1>)/sqrt(2)`.
    pub fn plus() -> Self {
        let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        Self {
            amplitudes: vec![s, s],
        }
    }

    /// Qubit `|-> = (|0> - |1>)/sqrt(2)`.
    pub fn minus() -> Self {
        let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        Self {
            amplitudes: vec![s, -s],
        }
    }

    /// Two-qubit singlet `(|01> - |10>)/sqrt(2)`.
    pub fn singlet() -> Self {
        let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        Self {
            amplitudes: vec![Complex64::ZERO, s, -s, Complex64::ZERO],
        }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// The vector as a `dim x 1` column matrix.
    pub fn column(&self) -> CMatrix {
        CMatrix::from_fn(self.dim(), 1, |i, _| self.amplitudes[i])
    }

    /// The projector `|psi><psi|` as a density operator.
    pub fn projector(&self) -> DensityOperator {
        let n = self.dim();
        let m = CMatrix::from_fn(n, n, |i, j| self.amplitudes[i] * self.amplitudes[j].conj());
        DensityOperator::new_trusted_psd(m).expect("projector of a unit vector")
    }
}

/// Coarse classification of an ensemble.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EnsembleKind {
    /// A single component of weight one: a density operator regarded as a
    /// point, carrying no preparation record.
    Elementary,
    /// A proper statistical mixture of preparations.
    Genuine,
}

/// A finite weighted list of density operators of equal dimension: a
/// preparation record, not just its average.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "EnsembleRepr", into = "EnsembleRepr")]
pub struct Ensemble {
    components: Vec<(f64, DensityOperator)>,
}

/// JSON form: `{"components": [{"weight": p, "state": <matrix>}, ...]}`.
#[derive(Serialize, Deserialize)]
struct EnsembleRepr {
    components: Vec<EnsembleComponentRepr>,
}

#[derive(Serialize, Deserialize)]
struct EnsembleComponentRepr {
    weight: f64,
    state: DensityOperator,
}

impl TryFrom<EnsembleRepr> for Ensemble {
    type Error = Error;

    fn try_from(repr: EnsembleRepr) -> Result<Self> {
        Ensemble::new(
            repr.components
                .into_iter()
                .map(|c| (c.weight, c.state))
                .collect(),
        )
    }
}

impl From<Ensemble> for EnsembleRepr {
    fn from(e: Ensemble) -> EnsembleRepr {
        EnsembleRepr {
            components: e
                .components
                .into_iter()
                .map(|(weight, state)| EnsembleComponentRepr { weight, state })
                .collect(),
        }
    }
}

impl Ensemble {
    /// Requires a nonempty list, nonnegative weights summing to one within
    /// [`NORM_TOL`], and states of equal dimension.
    pub fn new(components: Vec<(f64, DensityOperator)>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptyEnsemble);
        }
        let dim = components[0].1.dim();
        let mut sum = 0.0;
        for (w, state) in &components {
            if !w.is_finite() {
                return Err(Error::NonFinite);
            }
            if *w < 0.0 {
                return Err(Error::NegativeWeight { weight: *w });
            }
            if state.dim() != dim {
                return Err(Error::DimensionMismatch {
                    context: "ensemble components",
                    expected: dim,
                    found: state.dim(),
                });
            }
            sum += w;
        }
        if (sum - 1.0).abs() > NORM_TOL {
            return Err(Error::WeightsNotNormalized { sum });
        }
        Ok(Self { components })
    }

    /// The single-component ensemble `{(1, rho)}`.
    pub fn dirac(state: DensityOperator) -> Self {
        Self {
            components: vec![(1.0, state)],
        }
    }

    pub fn components(&self) -> &[(f64, DensityOperator)] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.components[0].1.dim()
    }

    /// Elementary iff the ensemble is exactly one component of weight one.
    pub fn kind(&self) -> EnsembleKind {
        if self.components.len() == 1 && (self.components[0].0 - 1.0).abs() <= NORM_TOL {
            EnsembleKind::Elementary
        } else {
            EnsembleKind::Genuine
        }
    }

    /// The represented density operator `sum_j p_j rho_j`.
    ///
    /// This is the map that forgets the preparation record; it is affine
    /// with respect to [`mix_ensembles`].
    pub fn barycenter(&self) -> DensityOperator {
        let dim = self.dim();
        let mut acc = CMatrix::zeros(dim, dim);
        let mut total = 0.0;
        for (w, state) in &self.components {
            acc = &acc + &(state.matrix() * *w);
            total += w;
        }
        // dividing by the weight sum (1 within NORM_TOL) keeps the trace
        // inside TRACE_TOL even when both tolerances are maxed out
        DensityOperator::new_trusted_psd(&acc * (1.0 / total)).expect("convex sum of states")
    }

    /// Structural equality within `tol`: same length, pairwise equal
    /// weights and states in order.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.components.len() == other.components.len()
            && self
                .components
                .iter()
                .zip(&other.components)
                .all(|((wa, sa), (wb, sb))| (wa - wb).abs() <= tol && sa.approx_eq(sb, tol))
    }
}

/// Convex combination of ensembles: components are concatenated with
/// weights scaled, never merged.
///
/// The barycenter of the result is the weighted sum of the parts'
/// barycenters.
pub fn mix_ensembles(parts: &[(f64, Ensemble)]) -> Result<Ensemble> {
    if parts.is_empty() {
        return Err(Error::EmptyEnsemble);
    }
    let dim = parts[0].1.dim();
    let mut sum = 0.0;
    for (q, e) in parts {
        if *q < 0.0 {
            return Err(Error::NegativeWeight { weight: *q });
        }
        if e.dim() != dim {
            return Err(Error::DimensionMismatch {
                context: "mix_ensembles",
                expected: dim,
                found: e.dim(),
            });
        }
        sum += q;
    }
    if (sum - 1.0).abs() > NORM_TOL {
        return Err(Error::WeightsNotNormalized { sum });
    }
    let mut components = Vec::new();
    for (q, e) in parts {
        for (w, state) in e.components() {
            components.push((q * w, state.clone()));
        }
    }
    Ok(Ensemble { components })
}

/// True iff the two preparations are identified by standard quantum
/// kinematics, i.e. their barycenters are within `tol` in trace distance.
pub fn equivalent_in_qm(e1: &Ensemble, e2: &Ensemble, tol: f64) -> Result<bool> {
    Ok(e1.barycenter().trace_distance(&e2.barycenter())? <= tol)
}

/// Splitmix-style derivation of independent seeds from a base seed.
pub fn derive_seed(seed: u64, stream: u64) -> u64 {
    let mut z = seed ^ stream.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn standard_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Ginibre construction: `G G^dag / Tr(G G^dag)` with i.i.d. standard
/// complex Gaussian entries. Deterministic given the seed.
pub fn random_density(dim: usize, seed: u64) -> DensityOperator {
    assert!(dim >= 1);
    let mut rng = rng_for(seed);
    let g = CMatrix::from_fn(dim, dim, |_, _| standard_complex(&mut rng));
    let gg = &g * &g.adjoint();
    let tr = gg.trace().re;
    // Tr GG^dag > 0 almost surely; a zero draw cannot happen with
    // Gaussian entries at f64 precision.
    DensityOperator::new_trusted_psd(&gg * (1.0 / tr)).expect("Ginibre state")
}

/// Flat-Dirichlet weights over states drawn by [`random_density`].
pub fn random_ensemble(dim: usize, n_components: usize, seed: u64) -> Ensemble {
    assert!(dim >= 1 && n_components >= 1);
    let mut rng = rng_for(seed);
    // Dirichlet(1,...,1) via normalized Exp(1) draws.
    let mut weights: Vec<f64> = (0..n_components)
        .map(|_| -(1.0 - rng.random::<f64>()).ln())
        .collect();
    let total: f64 = weights.iter().sum();
    for w in &mut weights {
        *w /= total;
    }
    let components = weights
        .into_iter()
        .enumerate()
        .map(|(k, w)| (w, random_density(dim, derive_seed(seed, k as u64 + 1))))
        .collect();
    Ensemble::new(components).expect("normalized Dirichlet weights")
}

/// Normalized Gaussian vector on `H_A (x) H_B`.
pub fn random_bipartite_pure(d_a: usize, d_b: usize, seed: u64) -> PureState {
    assert!(d_a >= 1 && d_b >= 1);
    let mut rng = rng_for(seed);
    let v: Vec<Complex64> = (0..d_a * d_b).map(|_| standard_complex(&mut rng)).collect();
    PureState::normalized(v).expect("Gaussian vector")
}

/// The spectral preparation of `rho`: `{(lambda_i, |v_i><v_i|)}` with
/// eigenvalues below [`EIGENVALUE_FLOOR`] dropped and the rest
/// renormalized.
///
/// This is the canonical "second preparation" of a given density operator
/// used by the affinity certifier: it is in general structurally different
/// from whatever ensemble `rho` came from, yet has the same barycenter.
pub fn eigen_decomposition_ensemble(rho: &DensityOperator) -> Result<Ensemble> {
    let eig = rho.hermitian().eigen()?;
    let n = rho.dim();
    let mut components = Vec::new();
    let mut kept_weight = 0.0;
    for (k, &lambda) in eig.values.iter().enumerate() {
        if lambda < EIGENVALUE_FLOOR {
            continue;
        }
        let amplitudes: Vec<Complex64> = (0..n).map(|i| eig.vectors.at(i, k)).collect();
        let state = PureState::new(amplitudes)?.projector();
        components.push((lambda, state));
        kept_weight += lambda;
    }
    if components.is_empty() {
        // cannot happen for a unit-trace positive matrix
        return Err(Error::EmptyEnsemble);
    }
    for (w, _) in &mut components {
        *w /= kept_weight;
    }
    Ensemble::new(components)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::operator::EQ_TOL;

    pub(crate) fn ensemble_z() -> Ensemble {
        Ensemble::new(vec![
            (0.5, PureState::basis(2, 0).unwrap().projector()),
            (0.5, PureState::basis(2, 1).unwrap().projector()),
        ])
        .unwrap()
    }

    pub(crate) fn ensemble_x() -> Ensemble {
        Ensemble::new(vec![
            (0.5, PureState::plus().projector()),
            (0.5, PureState::minus().projector()),
        ])
        .unwrap()
    }

    #[test]
    fn density_operator_validation() {
        assert!(DensityOperator::new(CMatrix::diag_real(&[0.5, 0.5])).is_ok());
        assert!(matches!(
            DensityOperator::new(CMatrix::diag_real(&[1.5, -0.5])),
            Err(Error::NotPositive { .. })
        ));
        assert!(matches!(
            DensityOperator::new(CMatrix::diag_real(&[0.6, 0.6])),
            Err(Error::TraceNotOne { .. })
        ));
    }

    #[test]
    fn pure_state_must_be_normalized() {
        assert!(PureState::new(vec![Complex64::ONE, Complex64::ONE]).is_err());
        let psi = PureState::normalized(vec![Complex64::ONE, Complex64::ONE]).unwrap();
        assert!((psi.amplitudes()[0].re - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn barycenter_of_dirac_is_the_state() {
        let rho = random_density(3, 7);
        let e = Ensemble::dirac(rho.clone());
        assert!(e.barycenter().approx_eq(&rho, 0.0));
        assert_eq!(e.kind(), EnsembleKind::Elementary);
    }

    #[test]
    fn barycenter_of_z_and_x_ensembles_is_maximally_mixed() {
        let half = DensityOperator::maximally_mixed(2);
        // direct sum of diagonals
        assert!(ensemble_z().barycenter().approx_eq(&half, EQ_TOL));
        // off-diagonals of |+><+| and |-><-| cancel
        assert!(ensemble_x().barycenter().approx_eq(&half, EQ_TOL));
    }

    #[test]
    fn mix_concatenates_and_scales() {
        let rho = random_density(2, 3);
        let e = Ensemble::dirac(rho.clone());
        let mixed = mix_ensembles(&[(0.5, e.clone()), (0.5, e.clone())]).unwrap();
        assert_eq!(mixed.len(), 2);
        assert!((mixed.components()[0].0 - 0.5).abs() < 1e-15);
        assert!(mixed.barycenter().approx_eq(&rho, EQ_TOL));
        assert_eq!(mixed.kind(), EnsembleKind::Genuine);
    }

    #[test]
    fn mix_of_z_and_x_has_four_components() {
        let mixed = mix_ensembles(&[(0.5, ensemble_z()), (0.5, ensemble_x())]).unwrap();
        assert_eq!(mixed.len(), 4);
        assert!(mixed
            .barycenter()
            .approx_eq(&DensityOperator::maximally_mixed(2), EQ_TOL));
    }

    #[test]
    fn mix_keeps_zero_weight_components() {
        let e = ensemble_z();
        let f = Ensemble::dirac(random_density(2, 11));
        let mixed = mix_ensembles(&[(1.0, e.clone()), (0.0, f)]).unwrap();
        assert_eq!(mixed.len(), 3);
        assert!(mixed.barycenter().approx_eq(&e.barycenter(), EQ_TOL));
    }

    #[test]
    fn mix_rejects_bad_weights_and_dims() {
        let e = ensemble_z();
        assert!(matches!(
            mix_ensembles(&[(0.7, e.clone()), (0.7, e.clone())]),
            Err(Error::WeightsNotNormalized { .. })
        ));
        let f = Ensemble::dirac(random_density(3, 0));
        assert!(mix_ensembles(&[(0.5, e), (0.5, f)]).is_err());
    }

    #[test]
    fn z_and_x_preparations_are_identified_in_qm() {
        // the core identification: distinct preparations, one density matrix
        assert!(equivalent_in_qm(&ensemble_z(), &ensemble_x(), 1e-10).unwrap());
        assert!(!ensemble_z().approx_eq(&ensemble_x(), 1e-6));
    }

    #[test]
    fn orthogonal_preparations_are_not_identified() {
        let e0 = Ensemble::dirac(PureState::basis(2, 0).unwrap().projector());
        let e1 = Ensemble::dirac(PureState::basis(2, 1).unwrap().projector());
        assert!(!equivalent_in_qm(&e0, &e1, 1e-10).unwrap());
        assert!(equivalent_in_qm(&e0, &e0, 1e-10).unwrap());
    }

    #[test]
    fn random_generators_are_deterministic() {
        assert_eq!(random_density(3, 42), random_density(3, 42));
        assert!(random_ensemble(2, 4, 9).approx_eq(&random_ensemble(2, 4, 9), 0.0));
        assert_eq!(
            random_bipartite_pure(2, 3, 5).amplitudes(),
            random_bipartite_pure(2, 3, 5).amplitudes()
        );
        assert_ne!(random_density(3, 42), random_density(3, 43));
    }

    #[test]
    fn random_states_satisfy_invariants() {
        for seed in 0..1000 {
            let rho = random_density(2, seed);
            assert!(rho.hermitian().is_positive(POSITIVITY_TOL).unwrap());
            assert!((rho.matrix().trace().re - 1.0).abs() <= TRACE_TOL);
        }
        for seed in 0..100 {
            let e = random_ensemble(3, 3, seed);
            let bar = e.barycenter();
            assert!(bar.hermitian().is_positive(POSITIVITY_TOL).unwrap());
            assert!((bar.matrix().trace().re - 1.0).abs() <= TRACE_TOL);
        }
    }

    #[test]
    fn spectral_ensemble_of_maximally_mixed() {
        let e = eigen_decomposition_ensemble(&DensityOperator::maximally_mixed(2)).unwrap();
        assert_eq!(e.len(), 2);
        for (w, _) in e.components() {
            assert!((w - 0.5).abs() < 1e-12);
        }
        assert!(e
            .barycenter()
            .approx_eq(&DensityOperator::maximally_mixed(2), 1e-12));
    }

    #[test]
    fn spectral_ensemble_of_pure_state_is_dirac() {
        let rho = PureState::basis(2, 0).unwrap().projector();
        let e = eigen_decomposition_ensemble(&rho).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e.kind(), EnsembleKind::Elementary);
        assert!(e.components()[0].1.approx_eq(&rho, 1e-12));
    }

    #[test]
    fn spectral_ensemble_of_diagonal_state() {
        let rho = DensityOperator::new(CMatrix::diag_real(&[0.75, 0.25])).unwrap();
        let e = eigen_decomposition_ensemble(&rho).unwrap();
        assert_eq!(e.len(), 2);
        // ascending eigenvalue order
        assert!((e.components()[0].0 - 0.25).abs() < 1e-12);
        assert!((e.components()[1].0 - 0.75).abs() < 1e-12);
        assert!(e.components()[0]
            .1
            .approx_eq(&PureState::basis(2, 1).unwrap().projector(), 1e-12));
        assert!(e.components()[1]
            .1
            .approx_eq(&PureState::basis(2, 0).unwrap().projector(), 1e-12));
    }

    #[test]
    fn spectral_ensemble_reproduces_barycenter() {
        for seed in 0..50 {
            let rho = random_density(4, seed);
            let e = eigen_decomposition_ensemble(&rho).unwrap();
            assert!(rho.trace_distance(&e.barycenter()).unwrap() <= 1e-9);
        }
    }

    #[test]
    fn ensemble_json_encoding() {
        let e = ensemble_z();
        let json = serde_json::to_value(&e).unwrap();
        assert_eq!(json["components"][0]["weight"], 0.5);
        assert_eq!(json["components"][0]["state"]["rows"], 2);
        let back: Ensemble = serde_json::from_value(json).unwrap();
        assert!(back.approx_eq(&e, 0.0));
    }

    #[test]
    fn ensemble_json_rejects_bad_weights() {
        let bad = serde_json::json!({"components": [
            {"weight": 0.9, "state": {"rows": 1, "cols": 1, "data": [[1.0, 0.0]]}}
        ]});
        assert!(serde_json::from_value::<Ensemble>(bad).is_err());
    }
}
