//! Finite phase space, probability distributions on it, and the affine
//! push-forward of point dynamics.
//!
//! The point of this module is the comparison it enables: a map on phase
//! space points can be as nonlinear as it likes, yet its lift to
//! distributions is affine, which is the same statement the certifier
//! makes for ensembles of quantum states.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance on distribution normalization.
pub const CLASSICAL_SUM_TOL: f64 = 1e-12;

/// A finite phase space with points labeled `0..size`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PhaseSpace {
    size: usize,
}

impl PhaseSpace {
    pub fn new(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyPhaseSpace);
        }
        Ok(Self { size })
    }

    pub fn size(&self) -> usize {
        self.size
    }
}

/// A probability vector over a finite phase space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(
    try_from = "ClassicalDistributionRepr",
    into = "ClassicalDistributionRepr"
)]
pub struct ClassicalDistribution {
    probs: Vec<f64>,
}

/// JSON form: `{"size": N, "probs": [...]}`.
#[derive(Serialize, Deserialize)]
struct ClassicalDistributionRepr {
    size: usize,
    probs: Vec<f64>,
}

impl TryFrom<ClassicalDistributionRepr> for ClassicalDistribution {
    type Error = Error;

    fn try_from(repr: ClassicalDistributionRepr) -> Result<Self> {
        if repr.probs.len() != repr.size {
            return Err(Error::BadDataLength {
                rows: repr.size,
                cols: 1,
                len: repr.probs.len(),
            });
        }
        ClassicalDistribution::new(repr.probs)
    }
}

impl From<ClassicalDistribution> for ClassicalDistributionRepr {
    fn from(d: ClassicalDistribution) -> Self {
        ClassicalDistributionRepr {
            size: d.probs.len(),
            probs: d.probs,
        }
    }
}

impl ClassicalDistribution {
    /// Requires nonnegative entries summing to one within
    /// [`CLASSICAL_SUM_TOL`].
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::EmptyPhaseSpace);
        }
        let mut sum = 0.0;
        for &p in &probs {
            if !p.is_finite() {
                return Err(Error::NonFinite);
            }
            if p < 0.0 {
                return Err(Error::NegativeWeight { weight: p });
            }
            sum += p;
        }
        if (sum - 1.0).abs() > CLASSICAL_SUM_TOL {
            return Err(Error::WeightsNotNormalized { sum });
        }
        Ok(Self { probs })
    }

    /// Unit mass on the point `omega`.
    pub fn dirac(space: PhaseSpace, omega: usize) -> Result<Self> {
        if omega >= space.size() {
            return Err(Error::OutOfRange {
                index: omega,
                size: space.size(),
            });
        }
        let mut probs = vec![0.0; space.size()];
        probs[omega] = 1.0;
        Ok(Self { probs })
    }

    /// Convex combination of distributions on the same space.
    pub fn mix(parts: &[(f64, &ClassicalDistribution)]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyPhaseSpace);
        }
        let size = parts[0].1.size();
        let mut weight_sum = 0.0;
        for (q, d) in parts {
            if *q < 0.0 {
                return Err(Error::NegativeWeight { weight: *q });
            }
            if d.size() != size {
                return Err(Error::DimensionMismatch {
                    context: "classical mix",
                    expected: size,
                    found: d.size(),
                });
            }
            weight_sum += q;
        }
        if (weight_sum - 1.0).abs() > CLASSICAL_SUM_TOL {
            return Err(Error::WeightsNotNormalized { sum: weight_sum });
        }
        let mut probs = vec![0.0; size];
        for (q, d) in parts {
            for (acc, p) in probs.iter_mut().zip(&d.probs) {
                *acc += q * p;
            }
        }
        Ok(Self { probs })
    }

    pub fn size(&self) -> usize {
        self.probs.len()
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn total_mass(&self) -> f64 {
        self.probs.iter().sum()
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.size() == other.size()
            && self
                .probs
                .iter()
                .zip(&other.probs)
                .all(|(a, b)| (a - b).abs() <= tol)
    }
}

/// A total map on phase space points, as a lookup table. Not required to
/// be injective, let alone linear in any sense.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PointMapRepr", into = "PointMapRepr")]
pub struct PointMap {
    table: Vec<usize>,
}

/// JSON form: `{"table": [f(0), ..., f(N-1)]}`.
#[derive(Serialize, Deserialize)]
struct PointMapRepr {
    table: Vec<usize>,
}

impl TryFrom<PointMapRepr> for PointMap {
    type Error = Error;

    fn try_from(repr: PointMapRepr) -> Result<Self> {
        PointMap::new(repr.table)
    }
}

impl From<PointMap> for PointMapRepr {
    fn from(f: PointMap) -> Self {
        PointMapRepr { table: f.table }
    }
}

impl PointMap {
    /// Requires every output in `0..table.len()`.
    pub fn new(table: Vec<usize>) -> Result<Self> {
        if table.is_empty() {
            return Err(Error::EmptyPhaseSpace);
        }
        let n = table.len();
        for &out in &table {
            if out >= n {
                return Err(Error::OutOfRange {
                    index: out,
                    size: n,
                });
            }
        }
        Ok(Self { table })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            table: (0..n).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn apply(&self, omega: usize) -> usize {
        self.table[omega]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }
}

/// Lifts a point map to distributions: the mass at `omega` accumulates
/// onto `f(omega)`. Affine in the distribution by construction; total
/// mass is preserved.
pub fn push_forward(f: &PointMap, pi: &ClassicalDistribution) -> Result<ClassicalDistribution> {
    if f.size() != pi.size() {
        return Err(Error::DimensionMismatch {
            context: "push_forward",
            expected: f.size(),
            found: pi.size(),
        });
    }
    let mut probs = vec![0.0; pi.size()];
    for (omega, &p) in pi.probs().iter().enumerate() {
        probs[f.apply(omega)] += p;
    }
    Ok(ClassicalDistribution { probs })
}

/// Flat-Dirichlet random distribution; deterministic given the seed.
pub fn random_distribution(n: usize, seed: u64) -> ClassicalDistribution {
    assert!(n >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut probs: Vec<f64> = (0..n).map(|_| -(1.0 - rng.random::<f64>()).ln()).collect();
    let total: f64 = probs.iter().sum();
    for p in &mut probs {
        *p /= total;
    }
    ClassicalDistribution { probs }
}

/// Uniformly random (generally non-injective) point map.
pub fn random_point_map(n: usize, seed: u64) -> PointMap {
    assert!(n >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    PointMap {
        table: (0..n).map(|_| rng.random_range(0..n)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square_mod_5() -> PointMap {
        PointMap::new((0..5).map(|w| (w * w) % 5).collect()).unwrap()
    }

    #[test]
    fn dirac_places_unit_mass() {
        let space = PhaseSpace::new(5).unwrap();
        let d = ClassicalDistribution::dirac(space, 2).unwrap();
        assert_eq!(d.probs(), &[0.0, 0.0, 1.0, 0.0, 0.0]);
        let tiny = ClassicalDistribution::dirac(PhaseSpace::new(1).unwrap(), 0).unwrap();
        assert_eq!(tiny.probs(), &[1.0]);
        assert!(ClassicalDistribution::dirac(space, 5).is_err());
    }

    #[test]
    fn mix_of_diracs() {
        let space = PhaseSpace::new(2).unwrap();
        let d0 = ClassicalDistribution::dirac(space, 0).unwrap();
        let d1 = ClassicalDistribution::dirac(space, 1).unwrap();
        let mixed = ClassicalDistribution::mix(&[(0.5, &d0), (0.5, &d1)]).unwrap();
        assert_eq!(mixed.probs(), &[0.5, 0.5]);
    }

    #[test]
    fn push_forward_identity() {
        let pi = random_distribution(7, 3);
        let out = push_forward(&PointMap::identity(7), &pi).unwrap();
        assert!(out.approx_eq(&pi, 0.0));
    }

    #[test]
    fn push_forward_square_map_on_dirac() {
        // f(2) = 4 under omega^2 mod 5
        let space = PhaseSpace::new(5).unwrap();
        let d2 = ClassicalDistribution::dirac(space, 2).unwrap();
        let out = push_forward(&square_mod_5(), &d2).unwrap();
        assert!(out.approx_eq(&ClassicalDistribution::dirac(space, 4).unwrap(), 0.0));
    }

    #[test]
    fn push_forward_collapses_many_to_one() {
        // 2^2 = 4 and 3^2 = 9 = 4 mod 5: both points land on 4
        let space = PhaseSpace::new(5).unwrap();
        let pi = ClassicalDistribution::new(vec![0.0, 0.0, 0.5, 0.5, 0.0]).unwrap();
        let out = push_forward(&square_mod_5(), &pi).unwrap();
        assert!(out.approx_eq(&ClassicalDistribution::dirac(space, 4).unwrap(), 0.0));
    }

    #[test]
    fn push_forward_is_affine_and_mass_preserving() {
        for seed in 0..50 {
            let n = 2 + (seed as usize % 63);
            let f = random_point_map(n, seed);
            let p = random_distribution(n, seed + 1000);
            let q = random_distribution(n, seed + 2000);
            let alpha = 0.31;
            let mixed = ClassicalDistribution::mix(&[(alpha, &p), (1.0 - alpha, &q)]).unwrap();
            let lhs = push_forward(&f, &mixed).unwrap();
            let rhs = ClassicalDistribution::mix(&[
                (alpha, &push_forward(&f, &p).unwrap()),
                (1.0 - alpha, &push_forward(&f, &q).unwrap()),
            ])
            .unwrap();
            assert!(lhs.approx_eq(&rhs, 1e-12), "seed {seed}");
            assert!((lhs.total_mass() - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn point_map_rejects_out_of_range() {
        assert!(PointMap::new(vec![0, 3]).is_err());
    }

    #[test]
    fn distribution_json_encoding() {
        let d = ClassicalDistribution::new(vec![0.25, 0.75]).unwrap();
        let json = serde_json::to_value(&d).unwrap();
        assert_eq!(json, serde_json::json!({"size": 2, "probs": [0.25, 0.75]}));
        let back: ClassicalDistribution = serde_json::from_value(json).unwrap();
        assert!(back.approx_eq(&d, 0.0));

        let bad = serde_json::json!({"size": 3, "probs": [0.25, 0.75]});
        assert!(serde_json::from_value::<ClassicalDistribution>(bad).is_err());
    }

    #[test]
    fn point_map_json_encoding() {
        let f = square_mod_5();
        let json = serde_json::to_value(&f).unwrap();
        assert_eq!(json, serde_json::json!({"table": [0, 1, 4, 4, 1]}));
        let back: PointMap = serde_json::from_value(json).unwrap();
        assert_eq!(back, f);
    }
}
