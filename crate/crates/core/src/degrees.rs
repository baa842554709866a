//! Maximal polynomial degrees in three condition systems for the
//! multiplicity problem:
//!
//! - `yhz`: nested subresultant-based conditions (closed-form degree only;
//!   the formula is stated under an extra genericity assumption that is not
//!   checked here),
//! - `hy21`: sums of non-nested determinants,
//! - `hy22`: the single gamma-discriminants computed by this crate.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};

/// `#{mu_k : mu_k >= i}`
fn parts_at_least(mu: &Partition, i: usize) -> usize {
    mu.parts().iter().filter(|&&p| p >= i).count()
}

pub fn d_yhz(mu: &Partition) -> Result<u64> {
    let n = mu.n() as u64;
    if mu.len() == 1 {
        return Ok(2 * n - 1);
    }
    let (mu1, mu2) = (mu.part(1), mu.part(2));
    let product: u64 = (1..=mu2).map(|j| 2 * parts_at_least(mu, j) as u64 - 1).product();
    let factor = if mu1 == mu2 {
        Rational::one()
    } else if mu1 == mu2 + 1 {
        let denom = 2 * parts_at_least(mu, mu2) as i64 - 1;
        Rational::one() + Rational::new(BigInt::from(2), BigInt::from(denom))
    } else {
        Rational::from_integer(BigInt::from(2 * (mu1 - mu2) as i64 - 1))
    };
    let value = Rational::from_integer(BigInt::from(product)) * factor;
    if !value.is_integer() {
        return Err(Error::NonIntegral(value.to_string()));
    }
    value
        .to_integer()
        .try_into()
        .map_err(|_| Error::NonIntegral(value.to_string()))
}

/// `2n + 3^mu_2 - 4 mu_2`, a lower bound on [`d_yhz`] when `mu` has more
/// than one part.
pub fn yhz_lower_bound(mu: &Partition) -> i64 {
    let mu2 = mu.part(2) as u32;
    2 * mu.n() as i64 + 3i64.pow(mu2) - 4 * mu2 as i64
}

pub fn d_hy21(mu: &Partition) -> u64 {
    2 * mu.n() as u64 - 1
}

pub fn d_hy22(mu: &Partition) -> u64 {
    2 * mu.n() as u64 - 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeRow {
    pub n: usize,
    pub d_yhz: u64,
    pub d_hy21: u64,
    pub d_hy22: u64,
}

/// Per `n` in `3..=max_n`, the maximum of each degree function over all
/// partitions of `n`.
pub fn degree_table(max_n: usize) -> Result<Vec<DegreeRow>> {
    if max_n < 3 {
        return Err(Error::Parse(format!("degree table needs max_n >= 3, got {}", max_n)));
    }
    (3..=max_n)
        .map(|n| {
            let all = partitions_of(n)?;
            let mut row = DegreeRow { n, d_yhz: 0, d_hy21: 0, d_hy22: 0 };
            for mu in &all {
                row.d_yhz = row.d_yhz.max(d_yhz(mu)?);
                row.d_hy21 = row.d_hy21.max(d_hy21(mu));
                row.d_hy22 = row.d_hy22.max(d_hy22(mu));
            }
            Ok(row)
        })
        .collect()
}

pub fn to_csv(rows: &[DegreeRow]) -> String {
    let mut out = String::from("n,d_yhz,d_hy21,d_hy22\n");
    for r in rows {
        writeln!(out, "{},{},{},{}", r.n, r.d_yhz, r.d_hy21, r.d_hy22).unwrap();
    }
    out
}
