use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_integer::gcd;

use super::build_shor15;
use crate::error::SimError;
use crate::sim::{run_shots, Counts};

/// Parameters of the compiled factoring instance: 4 counting qubits, N = 15.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShorConfig {
    n_count: u32,
    modulus: u64,
}

impl ShorConfig {
    pub const fn shor15() -> Self {
        ShorConfig {
            n_count: 4,
            modulus: 15,
        }
    }

    pub fn n_count(&self) -> u32 {
        self.n_count
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Candidate bases `a` in `[2, N)` coprime to `N`, ascending.
    pub fn bases(&self) -> impl Iterator<Item = u64> {
        let n = self.modulus;
        (2..n).filter(move |&a| gcd(a, n) == 1)
    }
}

impl Default for ShorConfig {
    fn default() -> Self {
        Self::shor15()
    }
}

/// One period estimate `r` derived from measured value `m` for some base.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeriodTrial {
    pub m: u64,
    pub r: u64,
    /// `a^r mod N == 1`
    pub accepted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseAttempt {
    pub a: u64,
    pub trials: Vec<PeriodTrial>,
}

impl BaseAttempt {
    pub fn found_period(&self) -> bool {
        self.trials.iter().any(|t| t.accepted)
    }
}

/// Everything the factoring pipeline produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorReport {
    pub config: ShorConfig,
    /// Empty when the report was built from measured values directly.
    pub counts: Counts,
    pub measured_values: BTreeSet<u64>,
    pub bases: Vec<BaseAttempt>,
    /// Every `gcd(a^(r/2) +- 1, N) > 1`, including the trivial factor `N`.
    pub factors: BTreeSet<u64>,
}

impl FactorReport {
    /// Flattened `(a, r, accepted)` triples in evaluation order.
    pub fn periods_tried(&self) -> impl Iterator<Item = (u64, u64, bool)> + '_ {
        self.bases
            .iter()
            .flat_map(|b| b.trials.iter().map(move |t| (b.a, t.r, t.accepted)))
    }

    /// The prime members of [`factors`](Self::factors).
    pub fn prime_factors(&self) -> BTreeSet<u64> {
        self.factors
            .iter()
            .copied()
            .filter(|&f| is_prime(f))
            .collect()
    }
}

/// Read the leftmost `n_count` characters of each key as a binary integer,
/// deduplicate and drop zero.
pub fn extract_measured_values(counts: &Counts, n_count: u32) -> BTreeSet<u64> {
    counts
        .keys()
        .filter_map(|key| {
            let head = key.get(..n_count as usize).unwrap_or(key);
            u64::from_str_radix(head, 2).ok()
        })
        .filter(|&m| m != 0)
        .collect()
}

/// Denominator of `m / 2^n_count` in lowest terms.
pub fn estimate_period(m: u64, n_count: u32) -> u64 {
    let denom = 1u64 << n_count;
    denom / gcd(m, denom)
}

/// For every coprime base `a` and measured value `m`, take `r` from
/// [`estimate_period`]; when `a^r = 1 (mod N)` collect
/// `gcd(a^(r/2) + 1, N)` and `gcd(a^(r/2) - 1, N)` if they exceed 1.
/// `r/2` is floor division, odd `r` included.
pub fn extract_factors(measured_values: &BTreeSet<u64>, config: ShorConfig) -> FactorReport {
    let n = config.modulus;
    let mut factors = BTreeSet::new();
    let mut bases = Vec::new();
    for a in config.bases() {
        let mut trials = Vec::with_capacity(measured_values.len());
        for &m in measured_values {
            let r = estimate_period(m, config.n_count);
            let accepted = pow_mod(a, r, n) == 1;
            if accepted {
                let half = pow_mod(a, r / 2, n);
                // a^(r/2) - 1 = half - 1 (mod N), kept non-negative
                for candidate in [gcd(half + 1, n), gcd((half + n - 1) % n, n)] {
                    if candidate > 1 {
                        factors.insert(candidate);
                    }
                }
            }
            trials.push(PeriodTrial { m, r, accepted });
        }
        bases.push(BaseAttempt { a, trials });
    }
    FactorReport {
        config,
        counts: Counts::new(),
        measured_values: measured_values.clone(),
        bases,
        factors,
    }
}

/// Simulate [`build_shor15`] and post-process the counts.
pub fn run_shor15_pipeline(shots: u64, seed: u64) -> Result<FactorReport, SimError> {
    let config = ShorConfig::shor15();
    let counts = run_shots(&build_shor15(), shots, seed)?;
    let measured = extract_measured_values(&counts, config.n_count);
    let mut report = extract_factors(&measured, config);
    report.counts = counts;
    Ok(report)
}

fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = u128::from(modulus);
    let mut b = u128::from(base) % m;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}
