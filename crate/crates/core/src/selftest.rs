//! Seeded property sweeps over random polynomials with known root
//! structure. Deterministic for a given seed regardless of thread count.

use std::fmt;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::{pow_signed, Rational, UniPoly};
use crate::classifier::classify;
use crate::engine::{disc_value, hyperfactorial};
use crate::error::Result;
use crate::partitions::{partitions_of, Partition};
use crate::roots::{
    check_leibniz_structure, disc_from_distinct_roots, disc_from_multiple_roots_abs, expand,
    random_distinct_spec, random_spec, squarefree_multiplicity,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_n: usize,
    pub trials: usize,
    pub seed: u64,
}

/// Root-side identities get expensive fast; they are swept up to this degree.
pub const ROOT_IDENTITY_MAX_N: usize = 6;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PropertyOutcome {
    pub name: &'static str,
    pub checked: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl PropertyOutcome {
    fn merge(mut self, other: Tally) -> Self {
        self.checked += other.checked;
        self.failures += other.failures;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
        self
    }
}

#[derive(Default)]
struct Tally {
    checked: usize,
    failures: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    fn check_result(&mut self, r: Result<bool>, describe: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.check(ok, describe),
            Err(e) => self.check(false, || format!("{}: {}", describe(), e)),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SelftestReport {
    pub properties: Vec<PropertyOutcome>,
}

impl SelftestReport {
    pub fn checked(&self) -> usize {
        self.properties.iter().map(|p| p.checked).sum()
    }

    pub fn failures(&self) -> usize {
        self.properties.iter().map(|p| p.failures).sum()
    }

    pub fn ok(&self) -> bool {
        self.failures() == 0
    }
}

impl fmt::Display for SelftestReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.properties {
            write!(f, "{:<24} {:>7} checked {:>4} failed", p.name, p.checked, p.failures)?;
            if let Some(msg) = &p.first_failure {
                write!(f, "  first: {}", msg)?;
            }
            writeln!(f)?;
        }
        let status = if self.ok() { "OK" } else { "FAIL" };
        write!(f, "{}: {} properties, {} failures", status, self.checked(), self.failures())
    }
}

/// Independent generator per `(property, n, index)` so parallel sweeps
/// reproduce exactly.
fn rng_for(seed: u64, property: u64, n: usize, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((property << 48) | ((n as u64) << 24) | index as u64);
    rng
}

fn random_rational<R: Rng>(rng: &mut R, nonzero: bool) -> Rational {
    loop {
        let num: i64 = rng.gen_range(-9..=9);
        let den: i64 = rng.gen_range(1..=5);
        if !(nonzero && num == 0) {
            return Rational::new(num.into(), den.into());
        }
    }
}

fn random_int_poly<R: Rng>(rng: &mut R, n: usize) -> UniPoly {
    let mut cs: Vec<i64> = (0..=n).map(|_| rng.gen_range(-9..=9)).collect();
    while cs[n] == 0 {
        cs[n] = rng.gen_range(-9..=9);
    }
    UniPoly::from_ints(&cs)
}

/// Every `(n, mu)` with `1 <= n <= max_n`.
fn multiplicity_cases(max_n: usize) -> Vec<(usize, usize, Partition)> {
    (1..=max_n)
        .flat_map(|n| {
            partitions_of(n)
                .unwrap()
                .into_iter()
                .enumerate()
                .map(move |(i, mu)| (n, i, mu))
        })
        .collect()
}

fn sweep<F>(name: &'static str, cases: &[(usize, usize, Partition)], body: F) -> PropertyOutcome
where
    F: Fn(usize, usize, &Partition, &mut Tally) + Sync,
{
    cases
        .par_iter()
        .map(|(n, i, mu)| {
            let mut t = Tally::default();
            body(*n, *i, mu, &mut t);
            t
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(PropertyOutcome { name, ..Default::default() }, PropertyOutcome::merge)
}

/// `classify(expand(spec)) = mu` and the squarefree oracle agrees.
pub fn oracle_equivalence(cfg: &SweepConfig) -> PropertyOutcome {
    sweep("oracle-equivalence", &multiplicity_cases(cfg.max_n), |n, i, mu, t| {
        let mut rng = rng_for(cfg.seed, 1, n, i);
        for _ in 0..cfg.trials {
            let spec = random_spec(mu, &mut rng);
            let f = expand(&spec);
            t.check_result(classify(&f).map(|m| m == *mu), || format!("classify [{}] != {}", spec, mu));
            t.check_result(squarefree_multiplicity(&f).map(|m| m == *mu), || {
                format!("squarefree [{}] != {}", spec, mu)
            });
        }
    })
}

/// `D(lambda) = 0` for every `lambda` above `conj(mu)`, and
/// `D(conj(mu)) != 0`.
pub fn vanishing_conditions(cfg: &SweepConfig) -> PropertyOutcome {
    sweep("vanishing-conditions", &multiplicity_cases(cfg.max_n), |n, i, mu, t| {
        let mut rng = rng_for(cfg.seed, 2, n, i);
        let conj = mu.conjugate();
        let all = partitions_of(n).unwrap();
        for _ in 0..cfg.trials {
            let spec = random_spec(mu, &mut rng);
            let f = expand(&spec);
            for lambda in all.iter().filter(|l| **l >= conj) {
                let expect_zero = *lambda > conj;
                t.check_result(
                    disc_value(&f, lambda).map(|d| d.value.is_zero() == expect_zero),
                    || format!("D({}) for [{}]", lambda, spec),
                );
            }
        }
    })
}

/// `D(1,...,1) = prod i^i * a_n^(n-1)` on random integer polynomials.
pub fn closed_form(cfg: &SweepConfig) -> PropertyOutcome {
    let cases: Vec<_> = (1..=cfg.max_n).map(|n| (n, 0, Partition::ones(n))).collect();
    sweep("last-discriminant", &cases, |n, _, ones, t| {
        let mut rng = rng_for(cfg.seed, 3, n, 0);
        let constant = Rational::from_integer(hyperfactorial(n));
        for _ in 0..cfg.trials {
            let f = random_int_poly(&mut rng, n);
            let expected = &constant * pow_signed(f.leading().unwrap(), n as i64 - 1);
            t.check_result(disc_value(&f, ones).map(|d| d.value == expected), || format!("{}", f));
        }
    })
}

/// Root-side formula with simple roots equals the engine value exactly.
pub fn distinct_roots_identity(cfg: &SweepConfig) -> PropertyOutcome {
    let max_n = cfg.max_n.min(ROOT_IDENTITY_MAX_N);
    sweep("distinct-roots-identity", &multiplicity_cases(max_n), |n, i, gamma, t| {
        let mut rng = rng_for(cfg.seed, 4, n, i);
        for _ in 0..cfg.trials {
            let spec = random_distinct_spec(n, &mut rng);
            let f = expand(&spec);
            let ok = disc_from_distinct_roots(&spec, gamma)
                .and_then(|lhs| disc_value(&f, gamma).map(|d| d.value == lhs));
            t.check_result(ok, || format!("gamma {} for [{}]", gamma, spec));
        }
    })
}

/// Root-side formula with multiple roots equals the engine value in
/// absolute value.
pub fn multiple_roots_identity(cfg: &SweepConfig) -> PropertyOutcome {
    let max_n = cfg.max_n.min(ROOT_IDENTITY_MAX_N);
    sweep("multiple-roots-identity", &multiplicity_cases(max_n), |n, i, mu, t| {
        let mut rng = rng_for(cfg.seed, 5, n, i);
        let all = partitions_of(n).unwrap();
        for _ in 0..cfg.trials {
            let spec = random_spec(mu, &mut rng);
            let f = expand(&spec);
            for gamma in &all {
                let ok = disc_from_multiple_roots_abs(&spec, gamma)
                    .and_then(|lhs| disc_value(&f, gamma).map(|d| d.value.abs() == lhs));
                t.check_result(ok, || format!("gamma {} for [{}]", gamma, spec));
            }
        }
    })
}

pub fn leibniz_structure(cfg: &SweepConfig) -> PropertyOutcome {
    sweep("leibniz-structure", &multiplicity_cases(cfg.max_n), |n, i, mu, t| {
        let mut rng = rng_for(cfg.seed, 6, n, i);
        for _ in 0..cfg.trials {
            let spec = random_spec(mu, &mut rng);
            let report = check_leibniz_structure(&spec);
            t.check(report.failed == 0 && report.checked > 0, || format!("[{}]", spec));
        }
    })
}

/// Classification is unchanged by `F -> c F` and `F -> F(x + t)`.
pub fn invariance(cfg: &SweepConfig) -> PropertyOutcome {
    sweep("scaling-shift-invariance", &multiplicity_cases(cfg.max_n), |n, i, mu, t| {
        let mut rng = rng_for(cfg.seed, 7, n, i);
        for _ in 0..cfg.trials {
            let spec = random_spec(mu, &mut rng);
            let f = expand(&spec);
            let c = random_rational(&mut rng, true);
            let shift = random_rational(&mut rng, false);
            t.check_result(classify(&f.scale(&c)).map(|m| m == *mu), || format!("scale {} [{}]", c, spec));
            t.check_result(classify(&f.shift(&shift)).map(|m| m == *mu), || {
                format!("shift {} [{}]", shift, spec)
            });
        }
    })
}

/// All sweeps.
pub fn run(cfg: &SweepConfig) -> SelftestReport {
    let properties = vec![
        oracle_equivalence(cfg),
        vanishing_conditions(cfg),
        closed_form(cfg),
        distinct_roots_identity(cfg),
        multiple_roots_identity(cfg),
        leibniz_structure(cfg),
        invariance(cfg),
    ];
    SelftestReport { properties }
}
