//! State maps, Kraus channels, the ensemble lift, and the affinity
//! certifier.
//!
//! A [`StateMap`] is a black-box transformation of density operators with
//! no linearity assumption. [`certify_affine`] probes such a map with
//! pairs of structurally different preparations of the same density
//! operator; an affine map sends both to the same output, a nonlinear map
//! betrays itself on some pair. The verdict is probabilistic
//! certification over the sampled trials, not a proof.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kinematics::{
    derive_seed, eigen_decomposition_ensemble, random_ensemble, DensityOperator, Ensemble,
};
use crate::operator::{pauli_x, pauli_y, pauli_z, CMatrix};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

/// Tolerance on `|sum K_i^dag K_i - I|` (max entry).
pub const TRACE_PRESERVATION_TOL: f64 = 1e-10;

/// Default deviation threshold separating float noise (<= 1e-10 in
/// practice) from genuine nonlinearity.
pub const DEFAULT_AFFINITY_THRESHOLD: f64 = 1e-8;

type ApplyFn = Box<dyn Fn(&DensityOperator) -> Result<DensityOperator> + Send + Sync>;

/// A black-box transformation of density operators, possibly nonlinear.
pub struct StateMap {
    name: String,
    dim_in: usize,
    dim_out: usize,
    apply: ApplyFn,
}

impl std::fmt::Debug for StateMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("StateMap")
            .field("name", &self.name)
            .field("dim_in", &self.dim_in)
            .field("dim_out", &self.dim_out)
            .finish_non_exhaustive()
    }
}

impl StateMap {
    pub fn new(
        name: impl Into<String>,
        dim_in: usize,
        dim_out: usize,
        apply: impl Fn(&DensityOperator) -> Result<DensityOperator> + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            dim_in,
            dim_out,
            apply: Box::new(apply),
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::new("identity", dim, dim, |rho| Ok(rho.clone()))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    /// Applies the map. Any failure of the underlying function, and any
    /// output of the wrong dimension, is reported as
    /// [`Error::MapOutputInvalid`] naming the offending input.
    pub fn apply(&self, rho: &DensityOperator) -> Result<DensityOperator> {
        if rho.dim() != self.dim_in {
            return Err(Error::DimensionMismatch {
                context: "StateMap input",
                expected: self.dim_in,
                found: rho.dim(),
            });
        }
        let out = (self.apply)(rho).map_err(|e| self.invalid_output(rho, e))?;
        if out.dim() != self.dim_out {
            return Err(self.invalid_output(
                rho,
                Error::DimensionMismatch {
                    context: "StateMap output",
                    expected: self.dim_out,
                    found: out.dim(),
                },
            ));
        }
        Ok(out)
    }

    fn invalid_output(&self, input: &DensityOperator, source: Error) -> Error {
        Error::MapOutputInvalid {
            map: self.name.clone(),
            input_json: serde_json::to_string(input).unwrap_or_else(|_| "<unprintable>".into()),
            source: Box::new(source),
        }
    }
}

/// A trace-preserving channel given by Kraus operators
/// `rho -> sum_i K_i rho K_i^dag`. A concrete affine subfamily of the
/// state maps, used as positive controls for the certifier.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausChannel {
    kraus_operators: Vec<CMatrix>,
}

impl KrausChannel {
    /// Requires square operators of equal dimension with
    /// `sum_i K_i^dag K_i = I` within [`TRACE_PRESERVATION_TOL`].
    pub fn new(kraus_operators: Vec<CMatrix>) -> Result<Self> {
        if kraus_operators.is_empty() {
            return Err(Error::EmptyEnsemble);
        }
        let dim = kraus_operators[0].rows();
        let mut sum = CMatrix::zeros(dim, dim);
        for k in &kraus_operators {
            if !k.is_square() || k.rows() != dim {
                return Err(Error::DimensionMismatch {
                    context: "Kraus operators",
                    expected: dim,
                    found: k.rows(),
                });
            }
            sum = &sum + &(&k.adjoint() * k);
        }
        let defect = sum.max_abs_diff(&CMatrix::identity(dim));
        if defect > TRACE_PRESERVATION_TOL {
            return Err(Error::NotTracePreserving {
                max_deviation: defect,
            });
        }
        Ok(Self { kraus_operators })
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            kraus_operators: vec![CMatrix::identity(dim)],
        }
    }

    /// The full bit flip `{sigma_x}` on a qubit.
    pub fn bit_flip() -> Self {
        Self {
            kraus_operators: vec![pauli_x()],
        }
    }

    /// Qubit depolarizing channel with error weight `q`:
    /// `{sqrt(1-q) I, sqrt(q/3) sigma_x, sqrt(q/3) sigma_y, sqrt(q/3) sigma_z}`.
    pub fn depolarizing(q: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&q) {
            return Err(Error::ProbabilityOutOfRange { value: q });
        }
        let w = (q / 3.0).sqrt();
        Self::new(vec![
            &CMatrix::identity(2) * (1.0 - q).sqrt(),
            &pauli_x() * w,
            &pauli_y() * w,
            &pauli_z() * w,
        ])
    }

    /// The unitary shift `|k> -> |k+1 mod dim>`; at dim 2 this is the
    /// bit flip.
    pub fn cyclic_shift(dim: usize) -> Self {
        assert!(dim >= 1);
        Self {
            kraus_operators: vec![CMatrix::from_fn(dim, dim, |i, j| {
                if i == (j + 1) % dim {
                    num_complex::Complex64::ONE
                } else {
                    num_complex::Complex64::ZERO
                }
            })],
        }
    }

    /// Depolarizing channel in any dimension,
    /// `rho -> (1-q) rho + q I/dim`, built from the Weyl shift-and-phase
    /// unitaries `X^a Z^b` (their uniform average over all `dim^2` pairs
    /// scrambles any state to `I/dim`).
    pub fn generalized_depolarizing(dim: usize, q: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&q) {
            return Err(Error::ProbabilityOutOfRange { value: q });
        }
        assert!(dim >= 1);
        let d = dim as f64;
        let omega = 2.0 * std::f64::consts::PI / d;
        let weyl = |a: usize, b: usize| {
            CMatrix::from_fn(dim, dim, |i, j| {
                if i == (j + a) % dim {
                    num_complex::Complex64::from_polar(1.0, omega * (b * j) as f64)
                } else {
                    num_complex::Complex64::ZERO
                }
            })
        };
        let mut ops = vec![&CMatrix::identity(dim) * (1.0 - q + q / (d * d)).sqrt()];
        let w = (q / (d * d)).sqrt();
        for a in 0..dim {
            for b in 0..dim {
                if a == 0 && b == 0 {
                    continue;
                }
                ops.push(&weyl(a, b) * w);
            }
        }
        Self::new(ops)
    }

    pub fn dim(&self) -> usize {
        self.kraus_operators[0].rows()
    }

    pub fn kraus_operators(&self) -> &[CMatrix] {
        &self.kraus_operators
    }

    /// `sum_i K_i rho K_i^dag`; affine in `rho`, trace preserved.
    pub fn apply(&self, rho: &DensityOperator) -> Result<DensityOperator> {
        if rho.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                context: "apply_kraus",
                expected: self.dim(),
                found: rho.dim(),
            });
        }
        let dim = self.dim();
        let mut out = CMatrix::zeros(dim, dim);
        for k in &self.kraus_operators {
            out = &out + &(&(k * rho.matrix()) * &k.adjoint());
        }
        DensityOperator::new(out)
    }

    /// Wraps the channel as a named [`StateMap`].
    pub fn into_state_map(self, name: impl Into<String>) -> StateMap {
        let dim = self.dim();
        StateMap::new(name, dim, dim, move |rho| self.apply(rho))
    }
}

/// The purification-flavored map `rho -> rho^2 / Tr(rho^2)`.
///
/// Fixes every pure state, sharpens every mixed one; well defined
/// everywhere since `Tr rho^2 >= 1/dim`. The canonical nonlinear control
/// for [`certify_affine`].
pub fn nonlinear_purification_map(dim: usize) -> StateMap {
    StateMap::new("purify", dim, dim, |rho| {
        let sq = rho.matrix() * rho.matrix();
        let purity = sq.trace().re;
        DensityOperator::new(&sq * (1.0 / purity))
    })
}

/// Componentwise action on a preparation record:
/// `{(p_j, rho_j)} -> {(p_j, map(rho_j))}`.
///
/// Weights are untouched, so this lift commutes with ensemble mixing
/// whatever the map does to individual states: ensembles always evolve
/// affinely even under a nonlinear map, because each member of the
/// statistical ensemble evolves independently of the others.
pub fn lift_to_ensemble(map: &StateMap, e: &Ensemble) -> Result<Ensemble> {
    let components = e
        .components()
        .iter()
        .map(|(w, rho)| map.apply(rho).map(|out| (*w, out)))
        .collect::<Result<Vec<_>>>()?;
    Ensemble::new(components)
}

/// Verdict of an affinity search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AffinityVerdict {
    /// No witness surfaced over the sampled trials. Probabilistic
    /// certification, not a proof.
    CertifiedAffine,
    /// Two equal-barycenter preparations were mapped to detectably
    /// different outputs.
    WitnessFound,
}

/// A pair of preparations of the same density operator that the map sent
/// to different places.
#[derive(Debug, Clone, Serialize)]
pub struct AffinityWitness {
    pub e1: Ensemble,
    pub e2: Ensemble,
    pub deviation: f64,
}

/// Outcome of [`certify_affine`].
#[derive(Debug, Clone, Serialize)]
pub struct AffinityReport {
    verdict: AffinityVerdict,
    trials: usize,
    witness: Option<AffinityWitness>,
}

impl AffinityReport {
    fn certified(trials: usize) -> Self {
        Self {
            verdict: AffinityVerdict::CertifiedAffine,
            trials,
            witness: None,
        }
    }

    fn with_witness(trials: usize, witness: AffinityWitness) -> Self {
        Self {
            verdict: AffinityVerdict::WitnessFound,
            trials,
            witness: Some(witness),
        }
    }

    pub fn verdict(&self) -> AffinityVerdict {
        self.verdict
    }

    /// Number of trials actually performed (the search stops at the first
    /// witness).
    pub fn trials(&self) -> usize {
        self.trials
    }

    pub fn witness(&self) -> Option<&AffinityWitness> {
        self.witness.as_ref()
    }
}

/// Randomized search for a violation of affinity.
///
/// Each trial draws a random ensemble `e1`, forms its barycenter `rho`,
/// and takes the spectral decomposition of `rho` as a second preparation
/// `e2`. The trial then compares `map(rho)` against the barycenters of
/// the lifted `e1` and `e2` (and those two against each other) in trace
/// distance. Any deviation above `threshold` stops the search with the
/// witness pair from the lowest-numbered failing trial; otherwise the map
/// is certified affine over the sampled trials.
pub fn certify_affine(
    map: &StateMap,
    dim: usize,
    trials: usize,
    seed: u64,
    threshold: f64,
) -> Result<AffinityReport> {
    assert!(trials >= 1, "at least one trial");
    assert!(threshold > 0.0, "positive threshold");
    if map.dim_in() != dim || map.dim_out() != dim {
        return Err(Error::DimensionMismatch {
            context: "certify_affine",
            expected: dim,
            found: map.dim_in(),
        });
    }
    for trial in 0..trials {
        let trial_seed = derive_seed(seed, trial as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
        let n_components = rng.random_range(2..=4);
        let e1 = random_ensemble(dim, n_components, derive_seed(trial_seed, 1));
        let rho = e1.barycenter();
        let e2 = eigen_decomposition_ensemble(&rho)?;

        let mapped_rho = map.apply(&rho)?;
        let bary1 = lift_to_ensemble(map, &e1)?.barycenter();
        let bary2 = lift_to_ensemble(map, &e2)?.barycenter();

        let d1 = mapped_rho.trace_distance(&bary1)?;
        let d2 = mapped_rho.trace_distance(&bary2)?;
        let d3 = bary1.trace_distance(&bary2)?;
        let deviation = d1.max(d2).max(d3);
        if deviation > threshold {
            return Ok(AffinityReport::with_witness(
                trial + 1,
                AffinityWitness { e1, e2, deviation },
            ));
        }
    }
    Ok(AffinityReport::certified(trials))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kinematics::{mix_ensembles, random_density, PureState};
    use crate::operator::EQ_TOL;

    #[test]
    fn identity_channel_is_identity() {
        let rho = random_density(3, 1);
        let out = KrausChannel::identity(3).apply(&rho).unwrap();
        assert!(out.approx_eq(&rho, 0.0));
    }

    #[test]
    fn bit_flip_swaps_basis_projectors() {
        let rho = PureState::basis(2, 0).unwrap().projector();
        let out = KrausChannel::bit_flip().apply(&rho).unwrap();
        assert!(out.approx_eq(&PureState::basis(2, 1).unwrap().projector(), EQ_TOL));
    }

    #[test]
    fn depolarizing_three_quarters_scrambles_completely() {
        // direct Kraus sum: (1/4)|0><0| + (1/4)(|1><1| + |1><1| + |0><0|) = I/2
        let rho = PureState::basis(2, 0).unwrap().projector();
        let out = KrausChannel::depolarizing(0.75)
            .unwrap()
            .apply(&rho)
            .unwrap();
        assert!(out.approx_eq(&DensityOperator::maximally_mixed(2), EQ_TOL));
    }

    #[test]
    fn kraus_construction_rejects_non_trace_preserving() {
        let half = &CMatrix::identity(2) * 0.5;
        assert!(matches!(
            KrausChannel::new(vec![half]),
            Err(Error::NotTracePreserving { .. })
        ));
        assert!(KrausChannel::depolarizing(1.5).is_err());
        assert!(KrausChannel::generalized_depolarizing(3, -0.1).is_err());
    }

    #[test]
    fn cyclic_shift_at_dim_2_is_bit_flip() {
        assert_eq!(KrausChannel::cyclic_shift(2), KrausChannel::bit_flip());
        let rho = PureState::basis(3, 2).unwrap().projector();
        let out = KrausChannel::cyclic_shift(3).apply(&rho).unwrap();
        assert!(out.approx_eq(&PureState::basis(3, 0).unwrap().projector(), EQ_TOL));
    }

    #[test]
    fn generalized_depolarizing_mixes_toward_identity() {
        for dim in 2..=4 {
            let q = 0.6;
            let chan = KrausChannel::generalized_depolarizing(dim, q).unwrap();
            let rho = random_density(dim, 31);
            let out = chan.apply(&rho).unwrap();
            let expect =
                &(rho.matrix() * (1.0 - q)) + &(&CMatrix::identity(dim) * (q / dim as f64));
            assert!(out.matrix().approx_eq(&expect, 1e-10), "dim {dim}");
        }
    }

    #[test]
    fn kraus_channels_preserve_trace_on_random_states() {
        let chan = KrausChannel::depolarizing(0.3).unwrap();
        for seed in 0..50 {
            let rho = random_density(2, seed);
            let out = chan.apply(&rho).unwrap();
            assert!((out.matrix().trace().re - 1.0).abs() <= 1e-10);
        }
    }

    #[test]
    fn purification_map_frozen_values() {
        let purify = nonlinear_purification_map(2);
        // pure fixed point
        let pure = PureState::basis(2, 0).unwrap().projector();
        assert!(purify.apply(&pure).unwrap().approx_eq(&pure, EQ_TOL));
        // diag(0.5625, 0.0625)/0.625 = diag(0.9, 0.1)
        let rho = DensityOperator::new(CMatrix::diag_real(&[0.75, 0.25])).unwrap();
        let out = purify.apply(&rho).unwrap();
        assert!(out.approx_eq(
            &DensityOperator::new(CMatrix::diag_real(&[0.9, 0.1])).unwrap(),
            1e-12
        ));
        // (I/4)/(1/2) = I/2
        let mixed = DensityOperator::maximally_mixed(2);
        assert!(purify.apply(&mixed).unwrap().approx_eq(&mixed, 1e-12));
    }

    #[test]
    fn purification_map_preserves_positivity_and_trace() {
        let purify = nonlinear_purification_map(3);
        for seed in 0..10_000 {
            let out = purify.apply(&random_density(3, seed)).unwrap();
            assert!(
                (out.matrix().trace().re - 1.0).abs() <= 1e-10,
                "seed {seed}"
            );
        }
    }

    #[test]
    fn lift_with_identity_is_identity() {
        let e = crate::kinematics::tests::ensemble_z();
        let lifted = lift_to_ensemble(&StateMap::identity(2), &e).unwrap();
        assert!(lifted.approx_eq(&e, 0.0));
    }

    #[test]
    fn lift_fixes_pure_components_of_nonlinear_map() {
        let e = crate::kinematics::tests::ensemble_z();
        let lifted = lift_to_ensemble(&nonlinear_purification_map(2), &e).unwrap();
        assert!(lifted.approx_eq(&e, 1e-12));
    }

    #[test]
    fn lift_maps_single_component() {
        let e = Ensemble::dirac(DensityOperator::new(CMatrix::diag_real(&[0.75, 0.25])).unwrap());
        let lifted = lift_to_ensemble(&nonlinear_purification_map(2), &e).unwrap();
        assert_eq!(lifted.len(), 1);
        assert!(lifted.components()[0].1.approx_eq(
            &DensityOperator::new(CMatrix::diag_real(&[0.9, 0.1])).unwrap(),
            1e-12
        ));
    }

    #[test]
    fn lift_commutes_with_mixing_even_for_nonlinear_maps() {
        let purify = nonlinear_purification_map(2);
        for seed in 0..20 {
            let e1 = crate::kinematics::random_ensemble(2, 2, seed);
            let e2 = crate::kinematics::random_ensemble(2, 3, seed + 500);
            let mixed = mix_ensembles(&[(0.25, e1.clone()), (0.75, e2.clone())]).unwrap();
            let lift_of_mix = lift_to_ensemble(&purify, &mixed).unwrap();
            let mix_of_lifts = mix_ensembles(&[
                (0.25, lift_to_ensemble(&purify, &e1).unwrap()),
                (0.75, lift_to_ensemble(&purify, &e2).unwrap()),
            ])
            .unwrap();
            assert!(lift_of_mix.approx_eq(&mix_of_lifts, 1e-10), "seed {seed}");
        }
    }

    #[test]
    fn certify_affine_passes_identity() {
        let report = certify_affine(&StateMap::identity(2), 2, 200, 0, 1e-8).unwrap();
        assert_eq!(report.verdict(), AffinityVerdict::CertifiedAffine);
        assert_eq!(report.trials(), 200);
        assert!(report.witness().is_none());
    }

    #[test]
    fn certify_affine_passes_kraus_channels() {
        for (name, chan) in [
            ("bit_flip", KrausChannel::bit_flip()),
            ("depolarizing", KrausChannel::depolarizing(0.4).unwrap()),
        ] {
            let map = chan.into_state_map(name);
            let report = certify_affine(&map, 2, 300, 7, 1e-8).unwrap();
            assert_eq!(report.verdict(), AffinityVerdict::CertifiedAffine, "{name}");
        }
    }

    #[test]
    fn certify_affine_catches_purification_map() {
        let report = certify_affine(&nonlinear_purification_map(2), 2, 50, 1, 1e-8).unwrap();
        assert_eq!(report.verdict(), AffinityVerdict::WitnessFound);
        let witness = report.witness().unwrap();
        assert!(witness.deviation > 1e-8);
        // the witnesses are two preparations of the same density operator
        let d = witness
            .e1
            .barycenter()
            .trace_distance(&witness.e2.barycenter())
            .unwrap();
        assert!(d <= 1e-9);
    }

    #[test]
    fn certify_affine_is_deterministic() {
        let a = certify_affine(&nonlinear_purification_map(2), 2, 50, 3, 1e-8).unwrap();
        let b = certify_affine(&nonlinear_purification_map(2), 2, 50, 3, 1e-8).unwrap();
        assert_eq!(a.trials(), b.trials());
        assert!((a.witness().unwrap().deviation - b.witness().unwrap().deviation).abs() == 0.0);
    }

    #[test]
    fn shipped_witness_deviation_is_0_15() {
        // e1 = {(0.75, |0><0|), (0.25, |1><1|)}: the map sends the
        // barycenter to diag(0.9, 0.1) while the lifted ensemble averages
        // to diag(0.75, 0.25); trace distance 0.15.
        let e1 = Ensemble::new(vec![
            (0.75, PureState::basis(2, 0).unwrap().projector()),
            (0.25, PureState::basis(2, 1).unwrap().projector()),
        ])
        .unwrap();
        let purify = nonlinear_purification_map(2);
        let mapped = purify.apply(&e1.barycenter()).unwrap();
        let lifted = lift_to_ensemble(&purify, &e1).unwrap().barycenter();
        let deviation = mapped.trace_distance(&lifted).unwrap();
        assert!((deviation - 0.15).abs() <= 1e-10);
    }

    #[test]
    fn barycenter_commutes_with_affine_maps_only() {
        // barycenter(lift(map, e)) == map(barycenter(e)) iff no witness
        let id = StateMap::identity(2);
        let purify = nonlinear_purification_map(2);
        let e = Ensemble::new(vec![
            (0.75, PureState::basis(2, 0).unwrap().projector()),
            (0.25, PureState::basis(2, 1).unwrap().projector()),
        ])
        .unwrap();
        let commutes = |map: &StateMap| -> bool {
            let lhs = lift_to_ensemble(map, &e).unwrap().barycenter();
            let rhs = map.apply(&e.barycenter()).unwrap();
            lhs.approx_eq(&rhs, 1e-10)
        };
        assert!(commutes(&id));
        assert!(!commutes(&purify));
    }

    #[test]
    fn affinity_report_serializes_to_schema() {
        let certified = certify_affine(&StateMap::identity(2), 2, 5, 0, 1e-8).unwrap();
        let json = serde_json::to_value(&certified).unwrap();
        assert_eq!(json["verdict"], "certified_affine");
        assert_eq!(json["trials"], 5);
        assert!(json["witness"].is_null());

        let found = certify_affine(&nonlinear_purification_map(2), 2, 50, 0, 1e-8).unwrap();
        let json = serde_json::to_value(&found).unwrap();
        assert_eq!(json["verdict"], "witness_found");
        assert!(json["witness"]["deviation"].as_f64().unwrap() > 1e-8);
        assert!(json["witness"]["e1"]["components"].is_array());
    }

    #[test]
    fn invalid_map_output_names_the_input() {
        // a "map" that scales the trace: output fails validation
        let broken = StateMap::new("broken", 2, 2, |rho| {
            DensityOperator::new(rho.matrix() * 0.5)
        });
        let err = certify_affine(&broken, 2, 3, 0, 1e-8).unwrap_err();
        match err {
            Error::MapOutputInvalid {
                map, input_json, ..
            } => {
                assert_eq!(map, "broken");
                assert!(input_json.contains("\"rows\":2"));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }
}
