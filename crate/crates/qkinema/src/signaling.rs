//! The projection postulate, post-measurement ensembles, remote steering
//! on bipartite systems, and the signaling question.
//!
//! Measuring one half of an entangled pair leaves the other half in an
//! outcome-conditioned ensemble that depends on the chosen basis. Whether
//! that dependence is usable as a channel hinges entirely on which states
//! count as distinct:
//!
//! * At the density-operator layer, [`verify_no_signaling`] checks the
//!   identity: the steered ensemble's barycenter equals the partial trace
//!   of the joint state, whatever was measured. The remote party, who
//!   never learns the outcomes, sees the same unconditioned state; only
//!   its decomposition differs.
//! * If ensembles themselves are treated as distinguishable states
//!   (some observable is a function of the decomposition, not just the
//!   barycenter), [`simulate_eqm_signaling`] turns exactly that
//!   dependence into a working one-bit channel, instantaneous because
//!   projection is modeled as instantaneous.
//!
//! The projection postulate is implemented for projective measurements
//! only; non-projective POVMs are rejected rather than generalized. Note
//! this machinery says nothing about nonlinear theories that drop the
//! projection postulate: it questions the combination, not nonlinearity
//! alone.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kinematics::{equivalent_in_qm, DensityOperator, Ensemble, PureState};
use crate::measurement::{EnsembleFunctional, Povm};
use crate::operator::{partial_trace, tensor, CMatrix, HermitianMatrix, Subsystem};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

/// Outcomes with probability at or below this floor are undefined for the
/// projection postulate (the normalizing denominator vanishes) and are
/// dropped from post-measurement ensembles.
pub const PROB_FLOOR: f64 = 1e-12;

/// Default tolerance for the no-signaling identity.
pub const DEFAULT_NO_SIGNALING_TOL: f64 = 1e-9;

/// Minimum functional gap for a usable signaling channel.
pub const MIN_FUNCTIONAL_GAP: f64 = 1e-9;

/// One projective-measurement event: which outcome fired, how likely it
/// was, and the state the system collapsed to.
#[derive(Debug, Clone, Serialize)]
pub struct MeasurementRecord {
    pub outcome_index: usize,
    pub probability: f64,
    pub post_state: DensityOperator,
}

/// The projection postulate: observing outcome `k` of a projective
/// measurement leaves the system in `F_k rho F_k / Tr(rho F_k)`.
///
/// Repeating the same measurement on the post-state reproduces outcome
/// `k` with probability one.
pub fn project(m: &Povm, rho: &DensityOperator, k: usize) -> Result<MeasurementRecord> {
    if !m.is_projective() {
        return Err(Error::NotProjective);
    }
    if k >= m.len() {
        return Err(Error::OutOfRange {
            index: k,
            size: m.len(),
        });
    }
    let probability = m.outcome_probabilities(rho)?[k];
    if probability <= PROB_FLOOR {
        return Err(Error::ZeroProbabilityBranch {
            outcome: k,
            probability,
        });
    }
    let f = m.effect(k).as_matrix();
    let post = &(&(f * rho.matrix()) * f) * (1.0 / probability);
    Ok(MeasurementRecord {
        outcome_index: k,
        probability,
        post_state: DensityOperator::new(post)?,
    })
}

/// The unconditioned result of measuring without reading outcomes: the
/// ensemble `{(p_k, rho_k)}` over all surviving branches.
pub fn post_measurement_ensemble(m: &Povm, rho: &DensityOperator) -> Result<Ensemble> {
    if !m.is_projective() {
        return Err(Error::NotProjective);
    }
    let probs = m.outcome_probabilities(rho)?;
    let mut components = Vec::new();
    let mut kept = 0.0;
    for (k, &p) in probs.iter().enumerate() {
        if p <= PROB_FLOOR {
            continue;
        }
        components.push((p, project(m, rho, k)?.post_state));
        kept += p;
    }
    // dropped branches carry at most PROB_FLOOR each; renormalize the
    // survivors so the ensemble invariant holds exactly
    for (w, _) in &mut components {
        *w /= kept;
    }
    Ensemble::new(components)
}

/// Embeds a projective measurement on system B into the bipartite space:
/// each effect `P_k` becomes `I_A (x) P_k`, labels unchanged.
pub fn local_measurement_on_b(p: &Povm, d_a: usize) -> Result<Povm> {
    if !p.is_projective() {
        return Err(Error::NotProjective);
    }
    let id_a = CMatrix::identity(d_a);
    Povm::new(
        p.effects()
            .iter()
            .map(|(label, op)| {
                HermitianMatrix::new(tensor(&id_a, op.as_matrix())).map(|h| (*label, h))
            })
            .collect::<Result<_>>()?,
    )
}

/// What a measurement on B prepares on A, outcome by outcome.
#[derive(Debug, Clone, Serialize)]
pub struct SteeredEnsemble {
    pub ensemble: Ensemble,
    pub measurement_name: String,
}

/// Measures `p_on_b` on the B side of `rho_ab` and collects the
/// outcome-conditioned reduced states of A: the ensemble
/// `{(p_k, Tr_B rho_k)}` over surviving outcomes.
pub fn steer(
    rho_ab: &DensityOperator,
    dims: (usize, usize),
    p_on_b: &Povm,
    measurement_name: &str,
) -> Result<SteeredEnsemble> {
    let (d_a, d_b) = dims;
    if rho_ab.dim() != d_a * d_b {
        return Err(Error::BadBipartiteSplit {
            side: rho_ab.dim(),
            d_a,
            d_b,
        });
    }
    if p_on_b.dim() != d_b {
        return Err(Error::DimensionMismatch {
            context: "steer measurement",
            expected: d_b,
            found: p_on_b.dim(),
        });
    }
    let full = local_measurement_on_b(p_on_b, d_a)?;
    let probs = full.outcome_probabilities(rho_ab)?;
    let mut components = Vec::new();
    let mut kept = 0.0;
    for (k, &p) in probs.iter().enumerate() {
        if p <= PROB_FLOOR {
            continue;
        }
        let record = project(&full, rho_ab, k)?;
        let reduced = partial_trace(record.post_state.matrix(), dims, Subsystem::A)?;
        components.push((p, DensityOperator::new(reduced)?));
        kept += p;
    }
    for (w, _) in &mut components {
        *w /= kept;
    }
    Ok(SteeredEnsemble {
        ensemble: Ensemble::new(components)?,
        measurement_name: measurement_name.to_string(),
    })
}

/// Which theory a verdict speaks about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Theory {
    #[serde(rename = "QM")]
    Qm,
    #[serde(rename = "EQM")]
    Eqm,
}

/// Outcome of a signaling analysis.
///
/// Construction enforces that a QM verdict never reports signaling; the
/// identity checked by [`verify_no_signaling`] leaves no room for it.
#[derive(Debug, Clone, Serialize)]
pub struct SignalingVerdict {
    theory: Theory,
    signaling: bool,
    channel_gap: f64,
    detail: String,
}

impl SignalingVerdict {
    fn qm(channel_gap: f64, detail: String) -> Self {
        Self {
            theory: Theory::Qm,
            signaling: false,
            channel_gap,
            detail,
        }
    }

    fn eqm(signaling: bool, channel_gap: f64, detail: String) -> Self {
        Self {
            theory: Theory::Eqm,
            signaling,
            channel_gap,
            detail,
        }
    }

    pub fn theory(&self) -> Theory {
        self.theory
    }

    pub fn signaling(&self) -> bool {
        self.signaling
    }

    /// For QM: the largest observed deviation in the no-signaling
    /// identity. For EQM: the distinguishing-functional value gap.
    pub fn channel_gap(&self) -> f64 {
        self.channel_gap
    }

    pub fn detail(&self) -> &str {
        &self.detail
    }
}

/// Checks that steering cannot move the unconditioned state of A: for
/// every given measurement on B, the barycenter of the steered ensemble
/// must equal `Tr_B rho_ab` within `tol`.
///
/// This is an identity of the formalism, so a deviation above `tol` is
/// not a physics discovery but an implementation bug, and is reported as
/// an error rather than a verdict.
pub fn verify_no_signaling(
    rho_ab: &DensityOperator,
    dims: (usize, usize),
    measurements: &[Povm],
    tol: f64,
) -> Result<SignalingVerdict> {
    let rho_a = DensityOperator::new(partial_trace(rho_ab.matrix(), dims, Subsystem::A)?)?;
    let mut max_gap: f64 = 0.0;
    for (idx, m) in measurements.iter().enumerate() {
        let steered = steer(rho_ab, dims, m, &format!("measurement {idx}"))?;
        let distance = steered.ensemble.barycenter().trace_distance(&rho_a)?;
        if distance > tol {
            return Err(Error::NoSignalingViolated { distance, tol });
        }
        max_gap = max_gap.max(distance);
    }
    Ok(SignalingVerdict::qm(
        max_gap,
        format!(
            "checked {} local measurement(s) on a {}x{} bipartite state; steered barycenters \
             match the reduced state within {max_gap:.3e} (tolerance {tol:.1e})",
            measurements.len(),
            dims.0,
            dims.1
        ),
    ))
}

/// Runs the one-bit signaling protocol that becomes available if some
/// observable can tell equal-barycenter ensembles apart.
///
/// Alice holds the B side of a shared singlet and encodes bit 0 by
/// measuring in the z basis, bit 1 by measuring in the x basis. Bob's
/// half is thereby steered into one of two ensembles with the *same*
/// density operator. Bob evaluates `functional` on his steered ensemble
/// and decodes by thresholding at the midpoint of the two analytic
/// values.
///
/// Errors if the functional is not flagged nonlinear or cannot separate
/// the two steered ensembles.
pub fn simulate_eqm_signaling(
    functional: &EnsembleFunctional,
    n_shots: usize,
    seed: u64,
) -> Result<SignalingVerdict> {
    assert!(n_shots >= 1, "at least one shot");
    if !functional.is_nonlinear() {
        return Err(Error::NotFlaggedNonlinear {
            name: functional.name().to_string(),
        });
    }
    let singlet = PureState::singlet().projector();
    let dims = (2, 2);
    let steered_z = steer(&singlet, dims, &Povm::computational_basis(2), "Z-basis")?;
    let steered_x = steer(&singlet, dims, &Povm::qubit_x_basis(), "X-basis")?;

    let value_z = functional.evaluate(&steered_z.ensemble);
    let value_x = functional.evaluate(&steered_x.ensemble);
    let gap = (value_z - value_x).abs();
    if gap < MIN_FUNCTIONAL_GAP {
        return Err(Error::FunctionalGapTooSmall { gap });
    }
    let midpoint = 0.5 * (value_z + value_x);

    // invisible at the density-operator layer: both steered ensembles
    // average to the same reduced state
    let qm_equivalent = equivalent_in_qm(&steered_z.ensemble, &steered_x.ensemble, 1e-9)?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut correct = 0usize;
    for _ in 0..n_shots {
        let bit = rng.random_bool(0.5);
        let bob_value = if bit {
            functional.evaluate(&steered_x.ensemble)
        } else {
            functional.evaluate(&steered_z.ensemble)
        };
        // decode: which analytic value is bob_value on the side of?
        let decoded = if value_z > value_x {
            bob_value < midpoint
        } else {
            bob_value > midpoint
        };
        if decoded == bit {
            correct += 1;
        }
    }

    let signaling = correct == n_shots;
    Ok(SignalingVerdict::eqm(
        signaling,
        gap,
        format!(
            "functional '{}' reads {value_z} on the z-steered ensemble and {value_x} on the \
             x-steered ensemble (gap {gap}); {correct}/{n_shots} bits decoded correctly; \
             the two steered ensembles are QM-equivalent (same barycenter): {qm_equivalent}",
            functional.name()
        ),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kinematics::{random_bipartite_pure, random_density};
    use crate::measurement::basis_overlap_functional;
    use crate::operator::EQ_TOL;

    fn singlet() -> DensityOperator {
        PureState::singlet().projector()
    }

    fn z_on_b_full() -> Povm {
        local_measurement_on_b(&Povm::computational_basis(2), 2).unwrap()
    }

    fn proj(k: usize) -> DensityOperator {
        PureState::basis(2, k).unwrap().projector()
    }

    #[test]
    fn projection_on_singlet_first_outcome() {
        let record = project(&z_on_b_full(), &singlet(), 0).unwrap();
        assert!((record.probability - 0.5).abs() < 1e-12);
        let expect = tensor(proj(1).matrix(), proj(0).matrix());
        assert!(record.post_state.matrix().approx_eq(&expect, 1e-12));
    }

    #[test]
    fn projection_on_singlet_second_outcome() {
        let record = project(&z_on_b_full(), &singlet(), 1).unwrap();
        assert!((record.probability - 0.5).abs() < 1e-12);
        let expect = tensor(proj(0).matrix(), proj(1).matrix());
        assert!(record.post_state.matrix().approx_eq(&expect, 1e-12));
    }

    #[test]
    fn projection_on_eigenstate_is_certain() {
        let record = project(&Povm::computational_basis(2), &proj(0), 0).unwrap();
        assert!((record.probability - 1.0).abs() < 1e-12);
        assert!(record.post_state.approx_eq(&proj(0), EQ_TOL));
    }

    #[test]
    fn projection_rejects_non_projective() {
        let half = &CMatrix::identity(2) * 0.5;
        let fuzzy = Povm::from_matrices(vec![(0.0, half.clone()), (1.0, half)]).unwrap();
        assert!(matches!(
            project(&fuzzy, &proj(0), 0),
            Err(Error::NotProjective)
        ));
    }

    #[test]
    fn projection_rejects_zero_probability_branch() {
        assert!(matches!(
            project(&Povm::computational_basis(2), &proj(0), 1),
            Err(Error::ZeroProbabilityBranch { .. })
        ));
    }

    #[test]
    fn repeated_measurement_reproduces_outcome() {
        for seed in 0..50 {
            let rho = random_density(4, seed);
            let povm = Povm::computational_basis(4);
            let probs = povm.outcome_probabilities(&rho).unwrap();
            for (k, &p) in probs.iter().enumerate() {
                if p <= 1e-6 {
                    continue;
                }
                let record = project(&povm, &rho, k).unwrap();
                let again = povm.outcome_probabilities(&record.post_state).unwrap();
                assert!(again[k] >= 1.0 - 1e-9, "seed {seed} outcome {k}");
            }
        }
    }

    #[test]
    fn post_measurement_ensemble_of_singlet() {
        let e = post_measurement_ensemble(&z_on_b_full(), &singlet()).unwrap();
        assert_eq!(e.len(), 2);
        assert!((e.components()[0].0 - 0.5).abs() < 1e-12);
        assert!((e.components()[1].0 - 0.5).abs() < 1e-12);
        let rho0 = tensor(proj(1).matrix(), proj(0).matrix());
        assert!(e.components()[0].1.matrix().approx_eq(&rho0, 1e-12));
        // barycenter is sum_k F_k rho F_k
        let bary = e.barycenter();
        let expect = &(&rho0 * 0.5) + &(&tensor(proj(0).matrix(), proj(1).matrix()) * 0.5);
        assert!(bary.matrix().approx_eq(&expect, 1e-12));
    }

    #[test]
    fn post_measurement_ensemble_of_eigenstate_is_dirac() {
        let e = post_measurement_ensemble(&Povm::computational_basis(2), &proj(0)).unwrap();
        assert_eq!(e.len(), 1);
        assert!(e.components()[0].1.approx_eq(&proj(0), EQ_TOL));
    }

    #[test]
    fn post_measurement_ensemble_of_maximally_mixed() {
        let e = post_measurement_ensemble(
            &Povm::computational_basis(2),
            &DensityOperator::maximally_mixed(2),
        )
        .unwrap();
        assert_eq!(e.len(), 2);
        assert!((e.components()[0].0 - 0.5).abs() < 1e-12);
        assert!(e.components()[0].1.approx_eq(&proj(0), 1e-12));
        assert!(e.components()[1].1.approx_eq(&proj(1), 1e-12));
    }

    #[test]
    fn local_measurement_embeds_effects() {
        let full = z_on_b_full();
        assert_eq!(full.dim(), 4);
        assert!(full.is_projective());
        let expect = tensor(&CMatrix::identity(2), proj(0).matrix());
        assert!(full.effect(0).as_matrix().approx_eq(&expect, 0.0));

        // single-effect identity POVM lifts to the bipartite identity
        let trivial = Povm::from_matrices(vec![(0.0, CMatrix::identity(2))]).unwrap();
        let lifted = local_measurement_on_b(&trivial, 2).unwrap();
        assert!(lifted
            .effect(0)
            .as_matrix()
            .approx_eq(&CMatrix::identity(4), 0.0));

        let x_full = local_measurement_on_b(&Povm::qubit_x_basis(), 2).unwrap();
        assert_eq!(x_full.dim(), 4);
        assert!(x_full.is_projective());
    }

    #[test]
    fn steering_singlet_in_z_anticorrelates() {
        let s = steer(&singlet(), (2, 2), &Povm::computational_basis(2), "Z-basis").unwrap();
        assert_eq!(s.ensemble.len(), 2);
        assert!((s.ensemble.components()[0].0 - 0.5).abs() < 1e-12);
        assert!(s.ensemble.components()[0].1.approx_eq(&proj(1), 1e-12));
        assert!(s.ensemble.components()[1].1.approx_eq(&proj(0), 1e-12));
    }

    #[test]
    fn steering_singlet_in_x_anticorrelates() {
        let s = steer(&singlet(), (2, 2), &Povm::qubit_x_basis(), "X-basis").unwrap();
        assert_eq!(s.ensemble.len(), 2);
        let minus = PureState::minus().projector();
        let plus = PureState::plus().projector();
        assert!(s.ensemble.components()[0].1.approx_eq(&minus, 1e-12));
        assert!(s.ensemble.components()[1].1.approx_eq(&plus, 1e-12));
    }

    #[test]
    fn steering_product_state_cannot_move_a() {
        let rho_a = random_density(2, 5);
        let rho_b = random_density(2, 6);
        let joint = DensityOperator::new(tensor(rho_a.matrix(), rho_b.matrix())).unwrap();
        let s = steer(&joint, (2, 2), &Povm::computational_basis(2), "Z-basis").unwrap();
        for (_, state) in s.ensemble.components() {
            assert!(state.approx_eq(&rho_a, 1e-9));
        }
    }

    #[test]
    fn no_signaling_on_singlet_z_and_x() {
        let verdict = verify_no_signaling(
            &singlet(),
            (2, 2),
            &[Povm::computational_basis(2), Povm::qubit_x_basis()],
            DEFAULT_NO_SIGNALING_TOL,
        )
        .unwrap();
        assert_eq!(verdict.theory(), Theory::Qm);
        assert!(!verdict.signaling());
        assert!(verdict.channel_gap() <= 1e-12);
    }

    #[test]
    fn no_signaling_on_random_states() {
        use crate::measurement::random_projective_povm;
        for seed in 0..5 {
            let rho = random_bipartite_pure(3, 3, seed).projector();
            let measurements: Vec<Povm> = (0..20)
                .map(|k| random_projective_povm(3, crate::kinematics::derive_seed(seed, k)))
                .collect();
            let verdict =
                verify_no_signaling(&rho, (3, 3), &measurements, DEFAULT_NO_SIGNALING_TOL).unwrap();
            assert!(!verdict.signaling());
        }
    }

    #[test]
    fn no_signaling_on_product_states_has_zero_gap() {
        let joint = DensityOperator::new(tensor(
            random_density(2, 3).matrix(),
            random_density(2, 4).matrix(),
        ))
        .unwrap();
        let verdict = verify_no_signaling(
            &joint,
            (2, 2),
            &[Povm::computational_basis(2), Povm::qubit_x_basis()],
            DEFAULT_NO_SIGNALING_TOL,
        )
        .unwrap();
        assert!(!verdict.signaling());
        assert!(verdict.channel_gap() <= 1e-12);
    }

    #[test]
    fn steered_ensembles_are_equivalent_but_distinct() {
        let z = steer(&singlet(), (2, 2), &Povm::computational_basis(2), "Z").unwrap();
        let x = steer(&singlet(), (2, 2), &Povm::qubit_x_basis(), "X").unwrap();
        assert!(equivalent_in_qm(&z.ensemble, &x.ensemble, 1e-9).unwrap());
        assert!(!z.ensemble.approx_eq(&x.ensemble, 1e-3));
        let f = basis_overlap_functional(&PureState::basis(2, 0).unwrap());
        let gap = (f.evaluate(&z.ensemble) - f.evaluate(&x.ensemble)).abs();
        assert!((gap - 0.25).abs() < 1e-12);
    }

    #[test]
    fn eqm_signaling_demonstration() {
        let f = basis_overlap_functional(&PureState::basis(2, 0).unwrap());
        let verdict = simulate_eqm_signaling(&f, 32, 9).unwrap();
        assert_eq!(verdict.theory(), Theory::Eqm);
        assert!(verdict.signaling());
        assert!((verdict.channel_gap() - 0.25).abs() < 1e-10);
        assert!(verdict.detail().contains("QM-equivalent"));
    }

    #[test]
    fn eqm_signaling_is_deterministic() {
        let f = basis_overlap_functional(&PureState::basis(2, 0).unwrap());
        let a = simulate_eqm_signaling(&f, 1, 4).unwrap();
        let b = simulate_eqm_signaling(&f, 1, 4).unwrap();
        assert_eq!(a.detail(), b.detail());
        assert_eq!(a.signaling(), b.signaling());
    }

    #[test]
    fn eqm_signaling_rejects_linear_functionals() {
        // average population is a function of the barycenter alone
        let linear = EnsembleFunctional::new("mean_population", false, |e: &Ensemble| {
            e.components()
                .iter()
                .map(|(w, rho)| w * rho.matrix().at(0, 0).re)
                .sum()
        });
        assert!(matches!(
            simulate_eqm_signaling(&linear, 1, 0),
            Err(Error::NotFlaggedNonlinear { .. })
        ));
        // and a constant functional flagged nonlinear cannot separate
        let constant = EnsembleFunctional::new("constant", true, |_: &Ensemble| 0.0);
        assert!(matches!(
            simulate_eqm_signaling(&constant, 1, 0),
            Err(Error::FunctionalGapTooSmall { .. })
        ));
    }

    #[test]
    fn qm_verdicts_never_signal() {
        // construction forbids it; spot-check over random inputs
        for seed in 0..20 {
            let rho = random_density(4, seed);
            let verdict = verify_no_signaling(
                &rho,
                (2, 2),
                &[Povm::computational_basis(2)],
                DEFAULT_NO_SIGNALING_TOL,
            )
            .unwrap();
            assert_eq!(verdict.theory(), Theory::Qm);
            assert!(!verdict.signaling());
        }
    }

    #[test]
    fn verdict_serializes_with_theory_tag() {
        let verdict = verify_no_signaling(
            &singlet(),
            (2, 2),
            &[Povm::computational_basis(2)],
            DEFAULT_NO_SIGNALING_TOL,
        )
        .unwrap();
        let json = serde_json::to_value(&verdict).unwrap();
        assert_eq!(json["theory"], "QM");
        assert_eq!(json["signaling"], false);
        assert!(json["channel_gap"].as_f64().unwrap() <= 1e-12);
    }
}
