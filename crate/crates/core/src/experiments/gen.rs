//! Seeded random instances over the edges of the complete graph.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::attrset::{AttrSet, SetFamily, MAX_ATTRIBUTES};
use crate::error::{Error, Result};
use crate::instance::Instance;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GenParams {
    pub n: usize,
    /// Probability of keeping each edge. Kept edges split evenly between F
    /// and A, so each family has density `rho / 2`.
    pub rho: f64,
    pub seed: u64,
}

/// Independent stream `trial` under `master`.
pub fn trial_rng(master: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(master);
    rng.set_stream(trial);
    rng
}

/// Instance drawn from the generator seeded with `params.seed`.
pub fn gen_random_instance(params: GenParams) -> Result<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    gen_with_rng(params.n, params.rho, &mut rng)
}

/// Walks the pairs `i < j` in lexicographic order, keeps each with
/// probability `rho` and sends it to F or A on a fair coin. Attributes no
/// edge of A touches become singletons of A, then both families are
/// shuffled.
pub fn gen_with_rng<R: Rng + ?Sized>(n: usize, rho: f64, rng: &mut R) -> Result<Instance> {
    if !(0.0..=1.0).contains(&rho) {
        return Err(Error::InvalidParameter(format!(
            "rho must lie in [0, 1], got {rho}"
        )));
    }
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "n must be at least 2, got {n}"
        )));
    }
    if n > MAX_ATTRIBUTES {
        return Err(Error::UniverseTooLarge(n));
    }
    let mut forbidden = Vec::new();
    let mut required = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(rho) {
                let edge = AttrSet::from([i, j]);
                if rng.gen_bool(0.5) {
                    forbidden.push(edge);
                } else {
                    required.push(edge);
                }
            }
        }
    }
    let covered: AttrSet = required.iter().fold(AttrSet::EMPTY, |acc, &b| acc.union(b));
    required.extend(
        AttrSet::full(n)
            .difference(covered)
            .iter()
            .map(AttrSet::singleton),
    );
    forbidden.shuffle(rng);
    required.shuffle(rng);
    Instance::new(
        n,
        SetFamily::from_sets(forbidden),
        SetFamily::from_sets(required),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_density_gives_singletons() {
        let inst = gen_random_instance(GenParams {
            n: 5,
            rho: 0.0,
            seed: 9,
        })
        .unwrap();
        assert!(inst.forbidden().is_empty());
        let mut req = inst.required().to_owned().into_sets();
        req.sort_by_key(|s| s.to_vec());
        assert_eq!(req, (0..5).map(AttrSet::singleton).collect::<Vec<_>>());
    }

    #[test]
    fn same_seed_same_instance() {
        let p = GenParams {
            n: 12,
            rho: 0.6,
            seed: 77,
        };
        assert_eq!(
            gen_random_instance(p).unwrap(),
            gen_random_instance(p).unwrap()
        );
    }

    #[test]
    fn streams_differ() {
        let a = gen_with_rng(12, 0.5, &mut trial_rng(1, 0)).unwrap();
        let b = gen_with_rng(12, 0.5, &mut trial_rng(1, 1)).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn bad_parameters() {
        for (n, rho) in [(5, -0.1), (5, 1.5), (1, 0.5), (129, 0.5)] {
            assert!(gen_random_instance(GenParams { n, rho, seed: 0 }).is_err());
        }
    }

    #[test]
    fn always_feasible_and_covering_universe() {
        for seed in 0..200 {
            let inst = gen_random_instance(GenParams {
                n: 8,
                rho: 0.7,
                seed,
            })
            .unwrap();
            assert!(inst.is_feasible());
            assert_eq!(inst.required().union(), inst.universe());
        }
    }
}
