//! POVMs with the trace rule, event probabilities over finite outcome
//! sets, and ensemble functionals: the observables that would tell
//! preparations apart when ordinary operators cannot.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kinematics::{DensityOperator, Ensemble, PureState};
use crate::operator::{CMatrix, HermitianMatrix};

/// Tolerance on `|sum_k F_k - I|` (max entry).
pub const COMPLETENESS_TOL: f64 = 1e-10;

/// Tolerance for projectivity and mutual orthogonality of effects.
pub const PROJECTIVE_TOL: f64 = 1e-9;

/// Outcome probabilities within this of 0 or 1 are clipped to the
/// boundary; beyond it they are an internal-consistency error.
pub const PROBABILITY_CLIP: f64 = 1e-10;

/// Tolerance on the probability sum over all outcomes.
pub const PROBABILITY_SUM_TOL: f64 = 1e-9;

/// Positive operators below the identity that sum to the identity, each
/// tagged with a real outcome value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PovmRepr", into = "PovmRepr")]
pub struct Povm {
    effects: Vec<(f64, HermitianMatrix)>,
}

/// JSON form: `{"effects": [{"label": x, "operator": <matrix>}, ...]}`.
#[derive(Serialize, Deserialize)]
struct PovmRepr {
    effects: Vec<PovmEffectRepr>,
}

#[derive(Serialize, Deserialize)]
struct PovmEffectRepr {
    label: f64,
    operator: HermitianMatrix,
}

impl TryFrom<PovmRepr> for Povm {
    type Error = Error;

    fn try_from(repr: PovmRepr) -> Result<Self> {
        Povm::new(
            repr.effects
                .into_iter()
                .map(|e| (e.label, e.operator))
                .collect(),
        )
    }
}

impl From<Povm> for PovmRepr {
    fn from(p: Povm) -> PovmRepr {
        PovmRepr {
            effects: p
                .effects
                .into_iter()
                .map(|(label, operator)| PovmEffectRepr { label, operator })
                .collect(),
        }
    }
}

impl Povm {
    /// Validates positivity of every effect, completeness
    /// `sum_k F_k = I` within [`COMPLETENESS_TOL`], and distinct labels.
    pub fn new(effects: Vec<(f64, HermitianMatrix)>) -> Result<Self> {
        if effects.is_empty() {
            return Err(Error::EmptyPovm);
        }
        let dim = effects[0].1.dim();
        let mut sum = CMatrix::zeros(dim, dim);
        for (label, op) in &effects {
            if !label.is_finite() {
                return Err(Error::NonFinite);
            }
            if op.dim() != dim {
                return Err(Error::DimensionMismatch {
                    context: "POVM effects",
                    expected: dim,
                    found: op.dim(),
                });
            }
            if !op.is_positive(crate::operator::POSITIVITY_TOL)? {
                let min = op.eigen()?.values[0];
                return Err(Error::NotPositive {
                    min_eigenvalue: min,
                });
            }
            sum = &sum + op.as_matrix();
        }
        let defect = sum.max_abs_diff(&CMatrix::identity(dim));
        if defect > COMPLETENESS_TOL {
            return Err(Error::EffectsNotComplete {
                max_deviation: defect,
            });
        }
        for i in 0..effects.len() {
            for j in (i + 1)..effects.len() {
                if effects[i].0 == effects[j].0 {
                    return Err(Error::DuplicateLabel {
                        label: effects[i].0,
                    });
                }
            }
        }
        Ok(Self { effects })
    }

    /// Convenience: effects from raw matrices, Hermiticity checked here.
    pub fn from_matrices(effects: Vec<(f64, CMatrix)>) -> Result<Self> {
        Self::new(
            effects
                .into_iter()
                .map(|(l, m)| HermitianMatrix::new(m).map(|h| (l, h)))
                .collect::<Result<_>>()?,
        )
    }

    /// Rank-one projective measurement onto the given states, labeled
    /// `0.0, 1.0, ...` in order. The states must form an orthonormal
    /// basis for the effects to sum to the identity.
    pub fn from_projectors(basis: &[PureState]) -> Result<Self> {
        Self::from_matrices(
            basis
                .iter()
                .enumerate()
                .map(|(k, psi)| (k as f64, psi.projector().matrix().clone()))
                .collect(),
        )
    }

    /// The computational-basis measurement in dimension `dim`.
    pub fn computational_basis(dim: usize) -> Self {
        let basis: Vec<PureState> = (0..dim)
            .map(|k| PureState::basis(dim, k).unwrap())
            .collect();
        Self::from_projectors(&basis).expect("orthonormal basis")
    }

    /// The qubit x-basis measurement `{|+><+|, |-><-|}`.
    pub fn qubit_x_basis() -> Self {
        Self::from_projectors(&[PureState::plus(), PureState::minus()]).expect("orthonormal basis")
    }

    pub fn dim(&self) -> usize {
        self.effects[0].1.dim()
    }

    pub fn len(&self) -> usize {
        self.effects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.effects.is_empty()
    }

    pub fn effects(&self) -> &[(f64, HermitianMatrix)] {
        &self.effects
    }

    pub fn labels(&self) -> impl Iterator<Item = f64> + '_ {
        self.effects.iter().map(|(l, _)| *l)
    }

    pub fn effect(&self, k: usize) -> &HermitianMatrix {
        &self.effects[k].1
    }

    /// The trace rule: `p_k = Re Tr(rho F_k)` for each outcome in order.
    ///
    /// Values within [`PROBABILITY_CLIP`] of 0 or 1 are clipped to the
    /// boundary; values beyond that range, or a total off 1 by more than
    /// [`PROBABILITY_SUM_TOL`], indicate corrupted inputs and error out.
    pub fn outcome_probabilities(&self, rho: &DensityOperator) -> Result<Vec<f64>> {
        if rho.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                context: "outcome_probabilities",
                expected: self.dim(),
                found: rho.dim(),
            });
        }
        let mut probs = Vec::with_capacity(self.effects.len());
        for (_, effect) in &self.effects {
            let p = trace_product_re(rho.matrix(), effect.as_matrix());
            let p = if p.abs() <= PROBABILITY_CLIP {
                0.0
            } else if (p - 1.0).abs() <= PROBABILITY_CLIP {
                1.0
            } else if !(0.0..=1.0).contains(&p) {
                return Err(Error::ProbabilityOutOfRange { value: p });
            } else {
                p
            };
            probs.push(p);
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > PROBABILITY_SUM_TOL {
            return Err(Error::ProbabilitiesNotNormalized { sum });
        }
        Ok(probs)
    }

    /// Probability that the outcome lands in `event`, a finite set of
    /// labels. Additive over disjoint events; the full label set gives 1.
    pub fn event_probability(&self, rho: &DensityOperator, event: &[f64]) -> Result<f64> {
        let probs = self.outcome_probabilities(rho)?;
        let mut member = vec![false; self.effects.len()];
        for label in event {
            let k = self
                .effects
                .iter()
                .position(|(l, _)| l == label)
                .ok_or(Error::UnknownLabel { label: *label })?;
            member[k] = true;
        }
        Ok(member
            .iter()
            .zip(&probs)
            .filter(|(m, _)| **m)
            .map(|(_, p)| p)
            .sum())
    }

    /// True iff every effect is a projector (`F^2 = F` within
    /// [`PROJECTIVE_TOL`]) and distinct effects are mutually orthogonal.
    pub fn is_projective(&self) -> bool {
        for (_, f) in &self.effects {
            let m = f.as_matrix();
            if (&(m * m) - m).max_abs() > PROJECTIVE_TOL {
                return false;
            }
        }
        for i in 0..self.effects.len() {
            for j in (i + 1)..self.effects.len() {
                let prod = self.effects[i].1.as_matrix() * self.effects[j].1.as_matrix();
                if prod.max_abs() > PROJECTIVE_TOL {
                    return false;
                }
            }
        }
        true
    }
}

/// `Re Tr(a b)` without forming the product matrix.
fn trace_product_re(a: &CMatrix, b: &CMatrix) -> f64 {
    let n = a.rows();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            let prod = a.at(i, j) * b.at(j, i);
            acc += prod.re;
        }
    }
    acc
}

/// A real-valued observable on ensembles.
///
/// Every functional here is affine over [`mix_ensembles`]
/// (that is the convex structure of the ensemble space); `nonlinear`
/// flags functionals that are *not* a function of the barycenter alone,
/// witnessed by at least one equal-barycenter pair of ensembles on which
/// the values differ.
///
/// [`mix_ensembles`]: crate::kinematics::mix_ensembles
pub struct EnsembleFunctional {
    name: String,
    nonlinear: bool,
    eval: Box<dyn Fn(&Ensemble) -> f64 + Send + Sync>,
}

impl std::fmt::Debug for EnsembleFunctional {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("EnsembleFunctional")
            .field("name", &self.name)
            .field("nonlinear", &self.nonlinear)
            .finish_non_exhaustive()
    }
}

impl EnsembleFunctional {
    pub fn new(
        name: impl Into<String>,
        nonlinear: bool,
        eval: impl Fn(&Ensemble) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            nonlinear,
            eval: Box::new(eval),
        }
    }

    pub fn evaluate(&self, e: &Ensemble) -> f64 {
        (self.eval)(e)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_nonlinear(&self) -> bool {
        self.nonlinear
    }
}

/// Haar-flavored random rank-one projective measurement: the eigenbasis
/// of a random Hermitian matrix, labeled `0.0, 1.0, ...` in eigenvalue
/// order. Deterministic given the seed.
pub fn random_projective_povm(dim: usize, seed: u64) -> Povm {
    use rand::prelude::*;
    use rand_distr::StandardNormal;
    assert!(dim >= 1);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let g = CMatrix::from_fn(dim, dim, |_, _| {
        num_complex::Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    });
    let eig = crate::operator::hermitian_eigen(&g).expect("random Hermitian eigenbasis");
    let basis: Vec<PureState> = (0..dim)
        .map(|k| {
            PureState::new((0..dim).map(|i| eig.vectors.at(i, k)).collect())
                .expect("orthonormal eigenvector")
        })
        .collect();
    Povm::from_projectors(&basis).expect("eigenbasis is orthonormal")
}

/// The functional `f(pi) = sum_j p_j (Tr rho_j |phi><phi|)^2`.
///
/// The squared overlap makes each component's contribution nonlinear in
/// the component state, so `f` depends on the decomposition, not only on
/// the barycenter, while staying affine over ensemble mixing.
pub fn basis_overlap_functional(basis_state: &PureState) -> EnsembleFunctional {
    let projector = basis_state.projector().matrix().clone();
    EnsembleFunctional::new(
        format!("basis_overlap(dim {})", basis_state.dim()),
        true,
        move |e: &Ensemble| {
            e.components()
                .iter()
                .map(|(w, rho)| {
                    let overlap = trace_product_re(rho.matrix(), &projector);
                    w * overlap * overlap
                })
                .sum()
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kinematics::{mix_ensembles, random_density, random_ensemble, Ensemble};
    use crate::operator::tensor;

    fn z_povm() -> Povm {
        Povm::computational_basis(2)
    }

    fn singlet_b_measurement() -> Povm {
        // effects 1 (x) |0><0| and 1 (x) |1><1|
        let i2 = CMatrix::identity(2);
        let p0 = PureState::basis(2, 0).unwrap().projector();
        let p1 = PureState::basis(2, 1).unwrap().projector();
        Povm::from_matrices(vec![
            (0.0, tensor(&i2, p0.matrix())),
            (1.0, tensor(&i2, p1.matrix())),
        ])
        .unwrap()
    }

    #[test]
    fn povm_rejects_incomplete_effects() {
        let p0 = PureState::basis(2, 0).unwrap().projector().matrix().clone();
        assert!(matches!(
            Povm::from_matrices(vec![(0.0, p0)]),
            Err(Error::EffectsNotComplete { .. })
        ));
    }

    #[test]
    fn povm_rejects_negative_effects() {
        let too_big = CMatrix::diag_real(&[2.0, 1.0]);
        let compensating = CMatrix::diag_real(&[-1.0, 0.0]);
        assert!(matches!(
            Povm::from_matrices(vec![(0.0, too_big), (1.0, compensating)]),
            Err(Error::NotPositive { .. })
        ));
    }

    #[test]
    fn povm_rejects_duplicate_labels() {
        let half = &CMatrix::identity(2) * 0.5;
        assert!(matches!(
            Povm::from_matrices(vec![(1.0, half.clone()), (1.0, half)]),
            Err(Error::DuplicateLabel { .. })
        ));
    }

    #[test]
    fn trace_rule_on_singlet_local_measurement() {
        let rho = PureState::singlet().projector();
        let probs = singlet_b_measurement().outcome_probabilities(&rho).unwrap();
        assert!((probs[0] - 0.5).abs() < 1e-12);
        assert!((probs[1] - 0.5).abs() < 1e-12);
    }

    #[test]
    fn trace_rule_rejects_dimension_mismatch() {
        let rho = DensityOperator::maximally_mixed(3);
        assert!(matches!(
            z_povm().outcome_probabilities(&rho),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn trace_rule_on_eigenstate() {
        let rho = PureState::basis(2, 0).unwrap().projector();
        let probs = z_povm().outcome_probabilities(&rho).unwrap();
        assert_eq!(probs, vec![1.0, 0.0]);
    }

    #[test]
    fn trace_rule_on_maximally_mixed() {
        // any projective 2-outcome measurement sees (1/2, 1/2):
        // Tr(P)/2 = 1/2 for rank-1 projectors
        let rho = DensityOperator::maximally_mixed(2);
        for povm in [z_povm(), Povm::qubit_x_basis()] {
            let probs = povm.outcome_probabilities(&rho).unwrap();
            assert!((probs[0] - 0.5).abs() < 1e-12);
            assert!((probs[1] - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn event_probability_measure_axioms() {
        let rho = PureState::singlet().projector();
        let povm = singlet_b_measurement();
        let all: Vec<f64> = povm.labels().collect();
        assert!((povm.event_probability(&rho, &all).unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(povm.event_probability(&rho, &[]).unwrap(), 0.0);
        assert!((povm.event_probability(&rho, &[0.0]).unwrap() - 0.5).abs() < 1e-12);
        assert!(matches!(
            povm.event_probability(&rho, &[7.0]),
            Err(Error::UnknownLabel { .. })
        ));
    }

    #[test]
    fn event_probability_is_additive_and_monotone() {
        let rho = random_density(3, 5);
        let povm = Povm::computational_basis(3);
        let p01 = povm.event_probability(&rho, &[0.0, 1.0]).unwrap();
        let p0 = povm.event_probability(&rho, &[0.0]).unwrap();
        let p1 = povm.event_probability(&rho, &[1.0]).unwrap();
        assert!((p01 - (p0 + p1)).abs() < 1e-12);
        assert!(p01 + 1e-12 >= p0);
    }

    #[test]
    fn projectivity_classification() {
        assert!(z_povm().is_projective());
        assert!(singlet_b_measurement().is_projective());
        let half = &CMatrix::identity(2) * 0.5;
        let fuzzy = Povm::from_matrices(vec![(0.0, half.clone()), (1.0, half)]).unwrap();
        // F^2 = F/2 != F
        assert!(!fuzzy.is_projective());
    }

    #[test]
    fn trace_rule_is_affine_in_the_state() {
        // probs(m, sum p_j rho_j) = sum p_j probs(m, rho_j): no measurement
        // can tell two decompositions of one density operator apart.
        let povm = Povm::computational_basis(3);
        for seed in 0..30 {
            let e = random_ensemble(3, 3, seed);
            let direct = povm.outcome_probabilities(&e.barycenter()).unwrap();
            let mut mixed = vec![0.0; povm.len()];
            for (w, rho) in e.components() {
                for (acc, p) in mixed
                    .iter_mut()
                    .zip(povm.outcome_probabilities(rho).unwrap())
                {
                    *acc += w * p;
                }
            }
            for (a, b) in direct.iter().zip(&mixed) {
                assert!((a - b).abs() <= 1e-10, "seed {seed}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn basis_overlap_frozen_values() {
        // brute-force arithmetic: E_Z gives 1/2 * 1^2 + 1/2 * 0^2 = 0.5,
        // E_X gives 1/2 * (1/2)^2 * 2 = 0.25
        let f = basis_overlap_functional(&PureState::basis(2, 0).unwrap());
        assert!(f.is_nonlinear());
        let e_z = crate::kinematics::tests::ensemble_z();
        let e_x = crate::kinematics::tests::ensemble_x();
        assert!((f.evaluate(&e_z) - 0.5).abs() < 1e-12);
        assert!((f.evaluate(&e_x) - 0.25).abs() < 1e-12);
        // equal barycenters, differing functional values: the witness pair
        assert!(crate::kinematics::equivalent_in_qm(&e_z, &e_x, 1e-10).unwrap());
        assert!(((f.evaluate(&e_z) - f.evaluate(&e_x)) - 0.25).abs() < 1e-12);
    }

    #[test]
    fn basis_overlap_on_dirac_is_squared_expectation() {
        let phi = PureState::plus();
        let f = basis_overlap_functional(&phi);
        let rho = random_density(2, 17);
        let overlap = trace_product_re(rho.matrix(), phi.projector().matrix());
        let e = Ensemble::dirac(rho);
        assert!((f.evaluate(&e) - overlap * overlap).abs() < 1e-12);
    }

    #[test]
    fn basis_overlap_is_affine_over_mixing() {
        let f = basis_overlap_functional(&PureState::basis(2, 0).unwrap());
        for seed in 0..20 {
            let e1 = random_ensemble(2, 2, seed);
            let e2 = random_ensemble(2, 3, seed + 1000);
            let q = 0.3;
            let mixed = mix_ensembles(&[(q, e1.clone()), (1.0 - q, e2.clone())]).unwrap();
            let expect = q * f.evaluate(&e1) + (1.0 - q) * f.evaluate(&e2);
            assert!((f.evaluate(&mixed) - expect).abs() <= 1e-9);
        }
    }

    #[test]
    fn povm_json_encoding() {
        let povm = z_povm();
        let json = serde_json::to_value(&povm).unwrap();
        assert_eq!(json["effects"][0]["label"], 0.0);
        assert_eq!(json["effects"][0]["operator"]["rows"], 2);
        let back: Povm = serde_json::from_value(json).unwrap();
        assert_eq!(back, povm);
    }
}
