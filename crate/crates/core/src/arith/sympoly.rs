use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Exponent vector over `a_0..a_n`; index `i` is the exponent of `a_i`.
///
/// Ordered graded-lexicographically: total degree first, then exponents
/// compared from `a_n` down to `a_0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial with integer coefficients in the indeterminates
/// `a_0..a_n`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl SymPoly {
    pub fn zero(nvars: usize) -> Self {
        SymPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    /// The indeterminate `a_i`.
    pub fn var(i: usize, nvars: usize) -> Self {
        Self::term(Monomial::var(i, nvars), BigInt::one())
    }

    pub fn term(m: Monomial, c: BigInt) -> Self {
        let nvars = m.0.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SymPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        SymPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self -= c * m * other`
    fn sub_scaled(&mut self, c: &BigInt, m: &Monomial, other: &SymPoly) {
        for (om, oc) in &other.terms {
            self.add_term(m.mul(om), -(c * oc));
        }
    }

    /// Exact quotient in `Z[a_0..a_n]`; fails if `divisor` does not divide
    /// `self`.
    pub fn exact_divide(&self, divisor: &SymPoly) -> Result<SymPoly> {
        let (lead_m, lead_c) = divisor.leading_term().ok_or(Error::NotDivisible)?;
        let mut rem = self.clone();
        let mut quot = SymPoly::zero(self.nvars);
        if divisor.terms.len() == 1 {
            for (m, c) in &self.terms {
                let qm = m.div(lead_m).ok_or(Error::NotDivisible)?;
                let (qc, r) = c.div_rem(lead_c);
                if !r.is_zero() {
                    return Err(Error::NotDivisible);
                }
                quot.terms.insert(qm, qc);
            }
            return Ok(quot);
        }
        while let Some((m, c)) = rem.terms.iter().next_back() {
            let qm = m.div(lead_m).ok_or(Error::NotDivisible)?;
            let (qc, r) = c.div_rem(lead_c);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            rem.sub_scaled(&qc, &qm, divisor);
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// Substitutes `values[i]` for `a_i`.
    pub fn eval(&self, values: &[Rational]) -> Rational {
        assert_eq!(values.len(), self.nvars, "one value per indeterminate");
        self.terms
            .iter()
            .map(|(m, c)| {
                m.0.iter().zip(values).fold(Rational::from_integer(c.clone()), |acc, (&e, v)| {
                    (0..e).fold(acc, |a, _| a * v)
                })
            })
            .fold(Rational::zero(), |acc, t| acc + t)
    }
}

impl Add for &SymPoly {
    type Output = SymPoly;
    fn add(self, rhs: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SymPoly {
    type Output = SymPoly;
    fn sub(self, rhs: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        out.sub_scaled(&BigInt::one(), &Monomial::one(self.nvars), rhs);
        out
    }
}

impl Mul for &SymPoly {
    type Output = SymPoly;
    fn mul(self, rhs: &SymPoly) -> SymPoly {
        let mut out = SymPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            for (om, oc) in &rhs.terms {
                out.add_term(m.mul(om), c * oc);
            }
        }
        out
    }
}

impl Neg for &SymPoly {
    type Output = SymPoly;
    fn neg(self) -> SymPoly {
        SymPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for Monomial {
    /// `a5^4*a3`, highest index first; empty for the unit monomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate().rev() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "a{}", i)?;
            if e > 1 {
                write!(f, "^{}", e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for SymPoly {
    /// Terms in descending graded-lex order, e.g. `8294400*a5^4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = m.degree() == 0;
            if unit {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", mag, m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a(i: usize) -> SymPoly {
        SymPoly::var(i, 6)
    }

    #[test]
    fn ring_examples() {
        let p = &(&a(5) + &a(4)) * &(&a(5) - &a(4));
        let expected = &(&a(5) * &a(5)) - &(&a(4) * &a(4));
        assert_eq!(p, expected);
        assert_eq!(p.to_string(), "a5^2 - a4^2");

        let num = &(&a(5) * &a(5)) * &a(4);
        assert_eq!(num.exact_divide(&a(5)).unwrap(), &a(5) * &a(4));

        let bad = &(&a(5) * &a(5)) + &a(4);
        assert_eq!(bad.exact_divide(&a(5)), Err(Error::NotDivisible));
        assert_eq!(a(5).exact_divide(&SymPoly::zero(6)), Err(Error::NotDivisible));
    }

    #[test]
    fn multi_term_division() {
        let f = &(&a(5) + &a(3).scale(&BigInt::from(3))) - &a(0);
        let g = &(&a(2) * &a(2)) - &a(1).scale(&BigInt::from(7));
        let prod = &f * &g;
        assert_eq!(prod.exact_divide(&f).unwrap(), g);
        assert_eq!(prod.exact_divide(&g).unwrap(), f);
        let off = &prod + &SymPoly::constant(6, BigInt::one());
        assert_eq!(off.exact_divide(&f), Err(Error::NotDivisible));
        // coefficient non-divisibility
        assert_eq!(a(5).exact_divide(&a(5).scale(&BigInt::from(2))), Err(Error::NotDivisible));
    }

    #[test]
    fn graded_lex_order_and_display() {
        let p = &(&(&a(0) * &a(0)) + &(&a(5) * &a(1))) + &a(3);
        // both degree-2 terms before the linear one; a5*a1 beats a0^2
        assert_eq!(p.to_string(), "a5*a1 + a0^2 + a3");
        let c = SymPoly::constant(6, BigInt::from(-8294400));
        assert_eq!(c.to_string(), "-8294400");
        assert_eq!(SymPoly::zero(6).to_string(), "0");
        assert!(p.total_degree() == Some(2) && !p.is_homogeneous());
    }

    #[test]
    fn evaluation() {
        let p = &(&a(5) * &a(5)).scale(&BigInt::from(3)) - &a(1);
        let vals: Vec<Rational> = (0..6).map(|i| Rational::from_integer(BigInt::from(i))).collect();
        assert_eq!(p.eval(&vals), Rational::from_integer(BigInt::from(74)));
    }

    fn small_sym() -> impl Strategy<Value = SymPoly> {
        prop::collection::vec((prop::collection::vec(0u32..3, 3), -9i64..9), 0..5).prop_map(|ts| {
            ts.into_iter().fold(SymPoly::zero(3), |acc, (e, c)| {
                &acc + &SymPoly::term(Monomial::from_exponents(e), BigInt::from(c))
            })
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(p in small_sym(), q in small_sym(), r in small_sym()) {
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert!((&p - &p).is_zero());
        }

        #[test]
        fn product_divides_back(p in small_sym(), q in small_sym()) {
            prop_assume!(!q.is_zero());
            prop_assert_eq!((&p * &q).exact_divide(&q).unwrap(), p);
        }
    }
}
