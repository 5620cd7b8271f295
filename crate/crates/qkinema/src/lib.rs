//! Kinematics of finite-dimensional quantum mechanics (density
//! operators, POVMs, ensembles, the projection postulate) together with
//! machinery that checks two structural facts numerically:
//!
//! 1. **Evolution on a convex state space must be affine.** Any state map
//!    that is not affine sends two preparations of the same density
//!    operator to different places; [`certify_affine`] searches for such
//!    a witness pair and certifies Kraus channels clean.
//! 2. **No-signaling is a kinematic identity, not an extra postulate.**
//!    Whatever is measured on one half of a bipartite state, the steered
//!    ensemble on the other half averages back to the partial trace
//!    ([`verify_no_signaling`]). Conversely, any theory whose states are
//!    the ensembles themselves, with equal-barycenter preparations
//!    distinguishable, admits an instantaneous channel through the
//!    projection postulate, which [`simulate_eqm_signaling`] runs.
//!
//! Everything works on dense complex matrices at desk scale (dimension
//! <= 64); all randomness is explicitly seeded and reproducible.
//!
//! The companion guide under `book/` walks through the concepts
//! chapter by chapter; its code snippets are compiled as doctests.

pub mod classical;
pub mod dynamics;
pub mod error;
pub mod kinematics;
pub mod measurement;
pub mod operator;
pub mod signaling;

#[cfg(doctest)]
mod book;

pub use error::{Error, Result};

pub use operator::{
    hermitian_eigen, partial_trace, tensor, trace_distance, CMatrix, HermitianEigen,
    HermitianMatrix, Subsystem,
};

pub use kinematics::{
    derive_seed, eigen_decomposition_ensemble, equivalent_in_qm, mix_ensembles,
    random_bipartite_pure, random_density, random_ensemble, DensityOperator, Ensemble,
    EnsembleKind, PureState,
};

pub use measurement::{basis_overlap_functional, random_projective_povm, EnsembleFunctional, Povm};

pub use dynamics::{
    certify_affine, lift_to_ensemble, nonlinear_purification_map, AffinityReport, AffinityVerdict,
    AffinityWitness, KrausChannel, StateMap, DEFAULT_AFFINITY_THRESHOLD,
};

pub use classical::{push_forward, ClassicalDistribution, PhaseSpace, PointMap};

pub use signaling::{
    local_measurement_on_b, post_measurement_ensemble, project, simulate_eqm_signaling, steer,
    verify_no_signaling, MeasurementRecord, SignalingVerdict, SteeredEnsemble, Theory,
    DEFAULT_NO_SIGNALING_TOL,
};
