//! Command-line front end: demos and verification runs that emit a JSON
//! report to stdout.
//!
//! Exit codes: 0 = the expected verdict was reached; 2 = a witness or
//! violation was found where none was expected (or vice versa); 1 =
//! usage or validation error.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use qkinema::classical::{push_forward, ClassicalDistribution, PhaseSpace, PointMap};
use qkinema::dynamics::{
    certify_affine, nonlinear_purification_map, AffinityVerdict, KrausChannel, StateMap,
    DEFAULT_AFFINITY_THRESHOLD,
};
use qkinema::kinematics::{
    derive_seed, equivalent_in_qm, random_bipartite_pure, random_density, DensityOperator,
    PureState,
};
use qkinema::measurement::{basis_overlap_functional, random_projective_povm, Povm};
use qkinema::operator::{partial_trace, tensor, Subsystem};
use qkinema::signaling::{
    local_measurement_on_b, project, simulate_eqm_signaling, steer, verify_no_signaling,
    DEFAULT_NO_SIGNALING_TOL,
};
use qkinema::Error as QkError;

const SEED_ENV: &str = "QKINEMA_SEED";
const DEFAULT_SEED: u64 = 42;

#[derive(Parser)]
#[command(
    name = "qkinema",
    version,
    about = "Density operators, steering and affinity checks with JSON reports"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Built-in demonstrations with fixed expected values
    Demo {
        #[command(subcommand)]
        which: DemoCommand,
    },
    /// Randomized verification of structural identities
    Verify {
        #[command(subcommand)]
        which: VerifyCommand,
    },
    /// Certification runs over randomized trials
    Certify {
        #[command(subcommand)]
        which: CertifyCommand,
    },
    /// Protocol simulations
    Simulate {
        #[command(subcommand)]
        which: SimulateCommand,
    },
}

#[derive(Subcommand)]
enum DemoCommand {
    /// Singlet + local z measurement: probabilities, post-measurement
    /// states, reduced states, and the two steered ensembles
    Example2,
    /// Finite phase space: a nonlinear point map whose lift to
    /// distributions is affine
    Classical,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Check that steering cannot move the unconditioned reduced state
    Nosignaling {
        /// Bipartite dimensions as dA,dB
        #[arg(long, value_parser = parse_dims)]
        dims: (usize, usize),
        /// Number of random joint states to test (10 random local
        /// measurements each)
        #[arg(long, default_value_t = 50)]
        trials: usize,
        /// Base seed; falls back to QKINEMA_SEED, then a fixed default
        #[arg(long)]
        seed: Option<u64>,
        /// Tolerance on the steered-barycenter identity
        #[arg(long, default_value_t = DEFAULT_NO_SIGNALING_TOL)]
        tol: f64,
    },
}

#[derive(Subcommand)]
enum CertifyCommand {
    /// Search for an affinity violation of a state map
    Affine {
        /// One of: identity | depolarizing[:q] | purify
        #[arg(long)]
        map: String,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_AFFINITY_THRESHOLD)]
        threshold: f64,
    },
}

#[derive(Subcommand)]
enum SimulateCommand {
    /// One-bit signaling through steering, granted an observable that
    /// distinguishes equal-barycenter ensembles
    EqmSignaling {
        #[arg(long, default_value_t = 16)]
        shots: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn parse_dims(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected dA,dB, got '{s}'"))?;
    let d_a: usize = a
        .trim()
        .parse()
        .map_err(|_| format!("bad dimension '{a}'"))?;
    let d_b: usize = b
        .trim()
        .parse()
        .map_err(|_| format!("bad dimension '{b}'"))?;
    if d_a == 0 || d_b == 0 {
        return Err("dimensions must be at least 1".into());
    }
    Ok((d_a, d_b))
}

/// CLI outcome: the JSON report plus whether the expected verdict held.
struct Report {
    body: serde_json::Value,
    pass: bool,
}

enum CliError {
    /// Bad arguments or configuration: exit 1.
    Usage(String),
    /// A violation/witness surfaced where none was expected: exit 2.
    Violation(serde_json::Value),
}

fn resolve_seed(cli_seed: Option<u64>) -> Result<u64, CliError> {
    if let Some(s) = cli_seed {
        return Ok(s);
    }
    match std::env::var(SEED_ENV) {
        Ok(raw) => raw
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{SEED_ENV} must be an integer, got '{raw}'"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // keep clap's rendering but pin the exit codes: help/version
            // are successes, everything else is a usage error
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    let outcome = match cli.command {
        Command::Demo { which } => match which {
            DemoCommand::Example2 => demo_example2(),
            DemoCommand::Classical => demo_classical(),
        },
        Command::Verify { which } => match which {
            VerifyCommand::Nosignaling {
                dims,
                trials,
                seed,
                tol,
            } => verify_nosignaling(dims, trials, seed, tol),
        },
        Command::Certify { which } => match which {
            CertifyCommand::Affine {
                map,
                dim,
                trials,
                seed,
                threshold,
            } => certify_affine_cmd(&map, dim, trials, seed, threshold),
        },
        Command::Simulate { which } => match which {
            SimulateCommand::EqmSignaling { shots, seed } => simulate_eqm(shots, seed),
        },
    };

    match outcome {
        Ok(report) => {
            println!("{}", serde_json::to_string_pretty(&report.body).unwrap());
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Violation(body)) => {
            println!("{}", serde_json::to_string_pretty(&body).unwrap());
            ExitCode::from(2)
        }
    }
}

fn check(name: &str, pass: bool, got: serde_json::Value) -> serde_json::Value {
    json!({"name": name, "pass": pass, "got": got})
}

fn demo_example2() -> Result<Report, CliError> {
    let singlet = PureState::singlet().projector();
    let m = local_measurement_on_b(&Povm::computational_basis(2), 2)
        .map_err(|e| CliError::Usage(e.to_string()))?;

    let mut checks = Vec::new();

    let probs = m
        .outcome_probabilities(&singlet)
        .map_err(internal_violation)?;
    checks.push(check(
        "outcome probabilities are (1/2, 1/2)",
        (probs[0] - 0.5).abs() <= 1e-12 && (probs[1] - 0.5).abs() <= 1e-12,
        json!(probs),
    ));

    let proj = |k: usize| PureState::basis(2, k).unwrap().projector();
    let rho0 = project(&m, &singlet, 0).map_err(internal_violation)?;
    let rho1 = project(&m, &singlet, 1).map_err(internal_violation)?;
    let expect0 = tensor(proj(1).matrix(), proj(0).matrix());
    let expect1 = tensor(proj(0).matrix(), proj(1).matrix());
    checks.push(check(
        "post-measurement state for outcome 0 is |1><1| (x) |0><0|",
        rho0.post_state.matrix().max_abs_diff(&expect0) <= 1e-12,
        serde_json::to_value(&rho0.post_state).unwrap(),
    ));
    checks.push(check(
        "post-measurement state for outcome 1 is |0><0| (x) |1><1|",
        rho1.post_state.matrix().max_abs_diff(&expect1) <= 1e-12,
        serde_json::to_value(&rho1.post_state).unwrap(),
    ));

    let reduced0 = partial_trace(rho0.post_state.matrix(), (2, 2), Subsystem::A)
        .map_err(internal_violation)?;
    checks.push(check(
        "conditioned reduced state of A is |1><1|",
        reduced0.max_abs_diff(proj(1).matrix()) <= 1e-12,
        serde_json::to_value(&reduced0).unwrap(),
    ));

    let rho_a =
        partial_trace(singlet.matrix(), (2, 2), Subsystem::A).map_err(internal_violation)?;
    checks.push(check(
        "unconditioned reduced state of A is I/2",
        rho_a.max_abs_diff(DensityOperator::maximally_mixed(2).matrix()) <= 1e-12,
        serde_json::to_value(&rho_a).unwrap(),
    ));

    let steered_z = steer(&singlet, (2, 2), &Povm::computational_basis(2), "Z-basis")
        .map_err(internal_violation)?;
    let steered_x =
        steer(&singlet, (2, 2), &Povm::qubit_x_basis(), "X-basis").map_err(internal_violation)?;
    let equivalent = equivalent_in_qm(&steered_z.ensemble, &steered_x.ensemble, 1e-9)
        .map_err(internal_violation)?;
    checks.push(check(
        "steered ensembles from z and x measurements are QM-equivalent",
        equivalent,
        json!({
            "z_steered": serde_json::to_value(&steered_z.ensemble).unwrap(),
            "x_steered": serde_json::to_value(&steered_x.ensemble).unwrap(),
        }),
    ));

    let f = basis_overlap_functional(&PureState::basis(2, 0).unwrap());
    let gap = (f.evaluate(&steered_z.ensemble) - f.evaluate(&steered_x.ensemble)).abs();
    checks.push(check(
        "ensemble functional separates the steered ensembles by 0.25",
        (gap - 0.25).abs() <= 1e-10,
        json!(gap),
    ));

    let pass = checks.iter().all(|c| c["pass"].as_bool().unwrap());
    Ok(Report {
        body: json!({"command": "demo example2", "checks": checks, "pass": pass}),
        pass,
    })
}

fn demo_classical() -> Result<Report, CliError> {
    let space = PhaseSpace::new(5).map_err(|e| CliError::Usage(e.to_string()))?;
    // omega -> omega^2 mod 5: nonlinear and many-to-one on points
    let square = PointMap::new((0..5).map(|w| (w * w) % 5).collect())
        .map_err(|e| CliError::Usage(e.to_string()))?;

    let mut checks = Vec::new();

    let d2 = ClassicalDistribution::dirac(space, 2).unwrap();
    let pushed = push_forward(&square, &d2).map_err(internal_violation)?;
    checks.push(check(
        "point mass at 2 moves to 4",
        pushed.approx_eq(&ClassicalDistribution::dirac(space, 4).unwrap(), 0.0),
        serde_json::to_value(&pushed).unwrap(),
    ));

    let half_half = ClassicalDistribution::new(vec![0.0, 0.0, 0.5, 0.5, 0.0]).unwrap();
    let collapsed = push_forward(&square, &half_half).map_err(internal_violation)?;
    checks.push(check(
        "mass at 2 and 3 collapses onto 4",
        collapsed.approx_eq(&ClassicalDistribution::dirac(space, 4).unwrap(), 1e-15),
        serde_json::to_value(&collapsed).unwrap(),
    ));

    // affinity of the lift under a random mixture
    let p = qkinema::classical::random_distribution(5, 1);
    let q = qkinema::classical::random_distribution(5, 2);
    let alpha = 0.37;
    let mixed = ClassicalDistribution::mix(&[(alpha, &p), (1.0 - alpha, &q)]).unwrap();
    let lhs = push_forward(&square, &mixed).map_err(internal_violation)?;
    let rhs = ClassicalDistribution::mix(&[
        (alpha, &push_forward(&square, &p).unwrap()),
        (1.0 - alpha, &push_forward(&square, &q).unwrap()),
    ])
    .unwrap();
    checks.push(check(
        "push-forward of a mixture equals the mixture of push-forwards",
        lhs.approx_eq(&rhs, 1e-12),
        json!({"mixture_pushed": serde_json::to_value(&lhs).unwrap()}),
    ));

    let pass = checks.iter().all(|c| c["pass"].as_bool().unwrap());
    Ok(Report {
        body: json!({
            "command": "demo classical",
            "phase_space_size": 5,
            "point_map": serde_json::to_value(&square).unwrap(),
            "checks": checks,
            "pass": pass,
        }),
        pass,
    })
}

fn internal_violation(e: QkError) -> CliError {
    CliError::Violation(json!({
        "pass": false,
        "error": e.to_string(),
    }))
}

fn verify_nosignaling(
    dims: (usize, usize),
    trials: usize,
    seed: Option<u64>,
    tol: f64,
) -> Result<Report, CliError> {
    if trials == 0 {
        return Err(CliError::Usage("trials must be at least 1".into()));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(CliError::Usage("tol must be positive".into()));
    }
    let seed = resolve_seed(seed)?;
    let (d_a, d_b) = dims;
    let mut max_gap: f64 = 0.0;
    for trial in 0..trials as u64 {
        let state_seed = derive_seed(seed, trial);
        let rho = if trial % 2 == 0 {
            random_bipartite_pure(d_a, d_b, state_seed).projector()
        } else {
            random_density(d_a * d_b, state_seed)
        };
        let measurements: Vec<Povm> = (0..10)
            .map(|k| random_projective_povm(d_b, derive_seed(state_seed, k)))
            .collect();
        match verify_no_signaling(&rho, dims, &measurements, tol) {
            Ok(verdict) => max_gap = max_gap.max(verdict.channel_gap()),
            Err(e @ QkError::NoSignalingViolated { .. }) => {
                return Err(CliError::Violation(json!({
                    "command": "verify nosignaling",
                    "dims": [d_a, d_b],
                    "trial": trial,
                    "seed": seed,
                    "error": e.to_string(),
                    "pass": false,
                })));
            }
            Err(e) => return Err(CliError::Usage(e.to_string())),
        }
    }
    Ok(Report {
        body: json!({
            "command": "verify nosignaling",
            "dims": [d_a, d_b],
            "trials": trials,
            "measurements_per_trial": 10,
            "seed": seed,
            "tol": tol,
            "verdict": {
                "theory": "QM",
                "signaling": false,
                "channel_gap": max_gap,
                "detail": format!(
                    "steered barycenters matched the reduced state on {trials} random states \
                     ({} pure, {} mixed) within {max_gap:.3e}",
                    trials.div_ceil(2),
                    trials / 2
                ),
            },
            "pass": true,
        }),
        pass: true,
    })
}

fn build_map(spec: &str, dim: usize) -> Result<(StateMap, AffinityVerdict), CliError> {
    let (kind, param) = match spec.split_once(':') {
        Some((k, p)) => (k, Some(p)),
        None => (spec, None),
    };
    match kind {
        "identity" => {
            if param.is_some() {
                return Err(CliError::Usage("identity takes no parameter".into()));
            }
            Ok((StateMap::identity(dim), AffinityVerdict::CertifiedAffine))
        }
        "depolarizing" => {
            let q: f64 = match param {
                Some(p) => p
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad depolarizing weight '{p}'")))?,
                None => 0.75,
            };
            let chan = if dim == 2 {
                KrausChannel::depolarizing(q)
            } else {
                KrausChannel::generalized_depolarizing(dim, q)
            }
            .map_err(|e| CliError::Usage(e.to_string()))?;
            Ok((
                chan.into_state_map(format!("depolarizing(q={q})")),
                AffinityVerdict::CertifiedAffine,
            ))
        }
        "purify" => {
            if param.is_some() {
                return Err(CliError::Usage("purify takes no parameter".into()));
            }
            Ok((
                nonlinear_purification_map(dim),
                AffinityVerdict::WitnessFound,
            ))
        }
        other => Err(CliError::Usage(format!(
            "unknown map '{other}' (expected identity, depolarizing[:q] or purify)"
        ))),
    }
}

fn certify_affine_cmd(
    map_spec: &str,
    dim: usize,
    trials: usize,
    seed: Option<u64>,
    threshold: f64,
) -> Result<Report, CliError> {
    if dim == 0 {
        return Err(CliError::Usage("dim must be at least 1".into()));
    }
    if trials == 0 {
        return Err(CliError::Usage("trials must be at least 1".into()));
    }
    if threshold.is_nan() || threshold <= 0.0 {
        return Err(CliError::Usage("threshold must be positive".into()));
    }
    let seed = resolve_seed(seed)?;
    let (map, expected) = build_map(map_spec, dim)?;
    let report = certify_affine(&map, dim, trials, seed, threshold)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let pass = report.verdict() == expected;
    Ok(Report {
        body: json!({
            "command": "certify affine",
            "map": map.name(),
            "dim": dim,
            "trials_requested": trials,
            "seed": seed,
            "threshold": threshold,
            "expected_verdict": serde_json::to_value(expected).unwrap(),
            "report": serde_json::to_value(&report).unwrap(),
            "pass": pass,
        }),
        pass,
    })
}

fn simulate_eqm(shots: usize, seed: Option<u64>) -> Result<Report, CliError> {
    if shots == 0 {
        return Err(CliError::Usage("shots must be at least 1".into()));
    }
    let seed = resolve_seed(seed)?;
    let functional = basis_overlap_functional(&PureState::basis(2, 0).unwrap());

    let singlet = PureState::singlet().projector();
    let steered_z = steer(&singlet, (2, 2), &Povm::computational_basis(2), "Z-basis")
        .map_err(internal_violation)?;
    let steered_x =
        steer(&singlet, (2, 2), &Povm::qubit_x_basis(), "X-basis").map_err(internal_violation)?;
    let value_z = functional.evaluate(&steered_z.ensemble);
    let value_x = functional.evaluate(&steered_x.ensemble);
    let equivalent = equivalent_in_qm(&steered_z.ensemble, &steered_x.ensemble, 1e-9)
        .map_err(internal_violation)?;

    let verdict = simulate_eqm_signaling(&functional, shots, seed)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let pass = verdict.signaling();
    Ok(Report {
        body: json!({
            "command": "simulate eqm-signaling",
            "shots": shots,
            "seed": seed,
            "functional": functional.name(),
            "functional_values": {"alice_sends_0_z_basis": value_z, "alice_sends_1_x_basis": value_x},
            "steered_ensembles_equivalent_in_qm": equivalent,
            "verdict": serde_json::to_value(&verdict).unwrap(),
            "pass": pass,
        }),
        pass,
    })
}
