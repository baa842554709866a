//! Exact determinants over integral domains.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{Rational, SymPoly};
use crate::error::{Error, Result};

/// The ring operations fraction-free elimination needs.
pub trait ExactDomain: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn vanishes(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Quotient of a division that must be exact.
    fn exact_div(&self, rhs: &Self) -> Result<Self>;
}

impl ExactDomain for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Result<Self> {
        if Zero::is_zero(rhs) {
            return Err(Error::NotDivisible);
        }
        let (q, r) = self.div_rem(rhs);
        if Zero::is_zero(&r) {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }
}

impl ExactDomain for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Result<Self> {
        if Zero::is_zero(rhs) {
            return Err(Error::NotDivisible);
        }
        Ok(self / rhs)
    }
}

impl ExactDomain for SymPoly {
    fn zero_like(&self) -> Self {
        SymPoly::zero(self.nvars())
    }
    fn one_like(&self) -> Self {
        SymPoly::constant(self.nvars(), BigInt::one())
    }
    fn vanishes(&self) -> bool {
        SymPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Result<Self> {
        self.exact_divide(rhs)
    }
}

fn check_square<T>(m: &[Vec<T>]) {
    assert!(!m.is_empty(), "determinant of an empty matrix");
    assert!(m.iter().all(|r| r.len() == m.len()), "matrix is not square");
}

/// Single-step fraction-free (Bareiss) elimination.
///
/// Every intermediate entry is a minor of the input, so each division by the
/// previous pivot is exact. The pivot for column `k` is the first row at or
/// below `k` with a nonzero entry; a column without one makes the
/// determinant zero.
pub fn det_fraction_free<T: ExactDomain>(matrix: &[Vec<T>]) -> Result<T> {
    check_square(matrix);
    let size = matrix.len();
    let mut m = matrix.to_vec();
    let mut negate = false;
    let mut prev = m[0][0].one_like();
    for k in 0..size - 1 {
        let Some(pivot) = (k..size).find(|&r| !m[r][k].vanishes()) else {
            return Ok(m[0][0].zero_like());
        };
        if pivot != k {
            m.swap(pivot, k);
            negate = !negate;
        }
        let (upper, lower) = m.split_at_mut(k + 1);
        let pivot_row = &upper[k];
        for row in lower.iter_mut() {
            let factor = row[k].clone();
            for j in k + 1..size {
                let mut v = pivot_row[k].mul(&row[j]);
                if !factor.vanishes() {
                    v = v.sub(&factor.mul(&pivot_row[j]));
                }
                row[j] = v.exact_div(&prev)?;
            }
            row[k] = factor.zero_like();
        }
        prev = m[k][k].clone();
    }
    let det = m[size - 1][size - 1].clone();
    Ok(if negate { det.neg() } else { det })
}

/// Laplace expansion with memoization over column subsets.
///
/// Processes rows top to bottom; the state after `k` rows is the set of
/// columns they occupy, so at most `2^size` minors are kept. Division-free,
/// which makes it the fallback when elimination misbehaves and an
/// independent route for cross-checks.
pub fn det_by_minors<T: ExactDomain>(matrix: &[Vec<T>]) -> T {
    check_square(matrix);
    let size = matrix.len();
    assert!(size <= 30, "minor expansion supports at most 30 columns");
    let zero = matrix[0][0].zero_like();
    let mut level: HashMap<u32, T> = HashMap::new();
    level.insert(0, matrix[0][0].one_like());
    for row in matrix {
        let mut next: HashMap<u32, T> = HashMap::new();
        for (mask, minor) in &level {
            for (j, entry) in row.iter().enumerate() {
                let bit = 1u32 << j;
                if mask & bit != 0 || entry.vanishes() {
                    continue;
                }
                // Moving column j past the occupied columns to its right.
                let crossings = (mask >> j).count_ones();
                let mut term = minor.mul(entry);
                if crossings % 2 == 1 {
                    term = term.neg();
                }
                let slot = next.entry(mask | bit).or_insert_with(|| zero.clone());
                *slot = slot.add(&term);
            }
        }
        next.retain(|_, v| !v.vanishes());
        level = next;
    }
    level.remove(&((1u32 << size) - 1)).unwrap_or(zero)
}
