//! Seeded randomized checks of the semigroup isomorphism, associativity,
//! Monge closure and the weight formula.
//!
//! Trial `t` draws from ChaCha8 seeded with `seed` on stream `t`, so any
//! trial can be replayed alone and the output depends only on the
//! configuration.

use kelpbed_core::demazure::{star, weight, weight_oracle, DEFAULT_ORACLE_BOUND};
use kelpbed_core::monge::{distance_product, is_monge, phi, SimpleMongeMatrix};
use kelpbed_core::{BiwordMatrix, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Signature of a candidate `⋆` implementation.
pub type StarFn = dyn Fn(&BiwordMatrix, &BiwordMatrix) -> Result<BiwordMatrix>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub trials: u64,
    /// Largest dimension; each trial draws `n` uniformly from `1..=max_n`.
    pub max_n: usize,
    pub max_entry: u64,
    pub seed: u64,
    /// Kelp cap per side for the matching oracle; larger pairs are skipped.
    pub oracle_bound: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            trials: 100,
            max_n: 5,
            max_entry: 3,
            seed: 0,
            oracle_bound: DEFAULT_ORACLE_BOUND,
        }
    }
}

/// Pass and fail counts of one property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckTally {
    pub name: &'static str,
    pub passed: u64,
    pub failed: u64,
    /// Trial index of the first failure.
    pub first_failure: Option<u64>,
}

impl CheckTally {
    fn new(name: &'static str) -> Self {
        CheckTally {
            name,
            passed: 0,
            failed: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, trial: u64, ok: bool) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            self.first_failure.get_or_insert(trial);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<CheckTally>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.failed == 0)
    }

    /// One line per check, e.g. `isomorphism: 100 passed, 0 failed`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{}: {} passed, {} failed",
                c.name, c.passed, c.failed
            ));
            if let Some(t) = c.first_failure {
                out.push_str(&format!(" (first failure at trial {t})"));
            }
            out.push('\n');
        }
        out
    }
}

pub fn random_matrix(rng: &mut ChaCha8Rng, n: usize, max_entry: u64) -> BiwordMatrix {
    let entries = (0..n * n).map(|_| rng.gen_range(0..=max_entry)).collect();
    BiwordMatrix::from_row_major(n, entries).expect("n >= 1")
}

/// The generator for trial `trial`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

pub fn verify(config: &VerifyConfig) -> VerifyReport {
    verify_with(config, &star)
}

/// Run every check against `star_impl` in place of the library product.
pub fn verify_with(config: &VerifyConfig, star_impl: &StarFn) -> VerifyReport {
    let mut iso = CheckTally::new("isomorphism");
    let mut assoc = CheckTally::new("associativity");
    let mut closure = CheckTally::new("closure");
    let mut wt = CheckTally::new("weight");
    for trial in 0..config.trials {
        let mut rng = trial_rng(config.seed, trial);
        let n = rng.gen_range(1..=config.max_n.max(1));
        let x = random_matrix(&mut rng, n, config.max_entry);
        let y = random_matrix(&mut rng, n, config.max_entry);
        let z = random_matrix(&mut rng, n, config.max_entry);

        let xy = star_impl(&x, &y);
        let ok = match &xy {
            Ok(xy) => {
                let expected = distance_product(phi(&x).as_matrix(), phi(&y).as_matrix());
                expected.is_ok_and(|e| phi(xy).as_matrix() == &e)
            }
            Err(_) => false,
        };
        iso.record(trial, ok);

        let ok = (|| -> Result<bool> {
            let left = star_impl(&star_impl(&x, &y)?, &z)?;
            let right = star_impl(&x, &star_impl(&y, &z)?)?;
            Ok(left == right)
        })()
        .unwrap_or(false);
        assoc.record(trial, ok);

        let product =
            distance_product(phi(&x).as_matrix(), phi(&y).as_matrix()).expect("same dimension");
        closure.record(
            trial,
            is_monge(&product) && SimpleMongeMatrix::new(product).is_ok(),
        );

        if let Ok(oracle) = weight_oracle(&x, &y, config.oracle_bound) {
            wt.record(trial, weight(&x, &y).is_ok_and(|w| w == oracle));
        }
    }
    VerifyReport {
        checks: vec![iso, assoc, closure, wt],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_trials_is_vacuous() {
        let report = verify(&VerifyConfig {
            trials: 0,
            ..Default::default()
        });
        assert!(report.all_passed());
        assert!(report.checks.iter().all(|c| c.passed == 0));
    }

    #[test]
    fn streams_are_independent_of_trial_count() {
        let mut a = trial_rng(7, 3);
        let mut b = trial_rng(7, 3);
        assert_eq!(random_matrix(&mut a, 3, 4), random_matrix(&mut b, 3, 4));
        let mut c = trial_rng(7, 4);
        let mut d = trial_rng(7, 3);
        let draws_c: Vec<u64> = (0..8).map(|_| c.gen()).collect();
        let draws_d: Vec<u64> = (0..8).map(|_| d.gen()).collect();
        assert_ne!(draws_c, draws_d);
    }

    #[test]
    fn library_star_passes() {
        let report = verify(&VerifyConfig {
            trials: 50,
            ..Default::default()
        });
        assert!(report.all_passed(), "{}", report.render());
    }
}
