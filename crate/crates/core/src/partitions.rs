//! Partitions of `n`: the candidate multiplicity vectors for a degree-`n`
//! polynomial, their conjugates, and the order the classifier scans them in.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let valid = !parts.is_empty()
            && parts.iter().all(|&p| p > 0)
            && parts.windows(2).all(|w| w[0] >= w[1]);
        if !valid {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Like [`Partition::new`] but also checks the parts sum to `n`.
    pub fn of(n: usize, parts: Vec<usize>) -> Result<Self> {
        let p = Self::new(parts)?;
        if p.n() != n {
            return Err(Error::NotAPartitionOf { parts: p.parts, n });
        }
        Ok(p)
    }

    /// `(1, 1, ..., 1)` with `n` ones.
    pub fn ones(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn single(n: usize) -> Self {
        Partition { parts: vec![n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part.
    pub fn first(&self) -> usize {
        self.parts[0]
    }

    /// Part `i` counted from 1, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        i.checked_sub(1)
            .and_then(|k| self.parts.get(k))
            .copied()
            .unwrap_or(0)
    }

    /// Transpose of the Young diagram: part `i` counts the parts `>= i`.
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.first())
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// Lexicographic comparison, shorter sequences padded with zeros.
    /// Only defined between partitions of the same `n`.
    pub fn lex_compare(&self, other: &Partition) -> Result<Ordering> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(self.n(), other.n()));
        }
        Ok(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        let len = self.parts.len().max(other.parts.len());
        (1..=len)
            .map(|i| self.part(i).cmp(&other.part(i)))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts, e.g. `2,2,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {:?}", t)))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n`, in strictly decreasing lexicographic order
/// (`(n)` first, `(1,...,1)` last).
pub fn partitions_of(n: usize) -> Result<Vec<Partition>> {
    if n == 0 {
        return Err(Error::NonPositive);
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    descend(n, n, &mut current, &mut out);
    Ok(out)
}

fn descend(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        descend(remaining - p, p, current, out);
        current.pop();
    }
}

/// Pairs `(mu, gamma)` with `gamma = conjugate(mu)`, sorted so the gammas are
/// strictly decreasing. This is the order in which the classifier tests
/// `D(gamma) != 0`.
pub fn classification_order(n: usize) -> Result<Vec<(Partition, Partition)>> {
    Ok(partitions_of(n)?
        .into_iter()
        .map(|gamma| (gamma.conjugate(), gamma))
        .collect())
}
