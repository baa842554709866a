//! Gamma-discriminants `D(gamma) = det(matrix) / a_n`, concrete and symbolic.

mod det;
mod matrix;

pub use det::{det_by_minors, det_fraction_free, ExactDomain};
pub use matrix::{
    build_matrix, build_symbolic_matrix, layout, sympoly_terms_json, Block, DiscMatrix, EntryRepr,
    RowProvenance,
};

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::arith::{format_ratio, pow_signed, Rational, SymPoly, UniPoly};
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Determinant route for symbolic matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DetStrategy {
    /// Fraction-free elimination with exact polynomial division.
    #[default]
    Bareiss,
    /// Memoized minor expansion; division-free.
    Minors,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymbolicConfig {
    /// Largest degree accepted by [`disc_symbolic`].
    pub cap: usize,
    pub strategy: DetStrategy,
}

impl Default for SymbolicConfig {
    fn default() -> Self {
        SymbolicConfig { cap: 6, strategy: DetStrategy::Bareiss }
    }
}

/// A computed `D(gamma)` for a polynomial of degree `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiscValue<T> {
    pub value: T,
    pub gamma: Partition,
    pub n: usize,
}

impl DiscValue<Rational> {
    pub fn to_json(&self) -> Value {
        json!({ "n": self.n, "gamma": self.gamma.parts(), "value": format_ratio(&self.value) })
    }
}

impl DiscValue<SymPoly> {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "gamma": self.gamma.parts(),
            "value": self.value.to_string(),
            "terms": sympoly_terms_json(&self.value),
        })
    }
}

/// `D(gamma)` of a concrete polynomial.
///
/// Denominators are cleared first (`G = c F`, integral and primitive), the
/// determinant is taken over the integers, and the result is rescaled using
/// `D_G = c^(n + gamma_1 - 2) D_F`.
pub fn disc_value(f: &UniPoly, gamma: &Partition) -> Result<DiscValue<Rational>> {
    let n = f.require_nonconstant()?;
    let (g, scale) = f.clear_denominators()?;
    let coeffs = g.integer_coeffs().expect("cleared polynomial is integral");
    let matrix = matrix::build_integer_matrix(&coeffs, gamma)?;
    let dp = det_fraction_free(&matrix.entries)?;
    let d_g = dp.exact_div(&coeffs[n])?;
    let homogeneity = (n + gamma.first() - 2) as i64;
    let value = Rational::from_integer(d_g) * pow_signed(&scale, -homogeneity);
    Ok(DiscValue { value, gamma: gamma.clone(), n })
}

/// `D(gamma)` by elimination directly over the rationals, without clearing
/// denominators. Slower; kept as an independent route.
pub fn disc_value_direct(f: &UniPoly, gamma: &Partition) -> Result<DiscValue<Rational>> {
    let m = build_matrix(f, gamma)?;
    let dp = det_fraction_free(&m.entries)?;
    let value = dp / f.leading().expect("nonconstant");
    Ok(DiscValue { value, gamma: gamma.clone(), n: m.n })
}

/// The parametric `D(gamma)` for the generic degree-`n` polynomial, as an
/// integer polynomial in `a_0..a_n`.
pub fn disc_symbolic(n: usize, gamma: &Partition, config: &SymbolicConfig) -> Result<DiscValue<SymPoly>> {
    if n > config.cap {
        return Err(Error::SymbolicCapExceeded { n, cap: config.cap });
    }
    let m = build_symbolic_matrix(n, gamma)?;
    let dp = match config.strategy {
        DetStrategy::Bareiss => det_fraction_free(&m.entries)?,
        DetStrategy::Minors => det_by_minors(&m.entries),
    };
    let lead = SymPoly::var(n, n + 1);
    let value = dp.exact_divide(&lead)?;
    Ok(DiscValue { value, gamma: gamma.clone(), n })
}

/// `prod_{i=1}^{n} i^i`, the constant in `D(1,...,1) = prod i^i * a_n^(n-1)`.
pub fn hyperfactorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * BigInt::from(i).pow(i as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{parse_rational, Monomial};
    use crate::partitions::partitions_of;
    use num_traits::{One, Zero};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gamma(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn quintic() -> UniPoly {
        UniPoly::parse_descending("1,-5,7,1,-8,4").unwrap()
    }

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn hyperfactorial_of_five() {
        assert_eq!(hyperfactorial(5), BigInt::from(86_400_000u64));
        assert_eq!(hyperfactorial(1), BigInt::one());
    }

    #[test]
    fn generic_quintic_all_ones() {
        let d = disc_symbolic(5, &Partition::ones(5), &SymbolicConfig::default()).unwrap();
        let expected = SymPoly::term(
            Monomial::from_exponents(vec![0, 0, 0, 0, 0, 4]),
            BigInt::from(86_400_000u64),
        );
        assert_eq!(d.value, expected);
        assert_eq!(d.value.to_string(), "86400000*a5^4");

        for a5 in ["3", "-2/7"] {
            let f = UniPoly::new(vec![q("1"), q("-4"), q("0"), q("5/3"), q("2"), q(a5)]);
            let v = disc_value(&f, &Partition::ones(5)).unwrap().value;
            assert_eq!(v, Rational::from_integer(hyperfactorial(5)) * pow_signed(&q(a5), 4));
        }
    }

    #[test]
    fn quintic_chain_values() {
        let f = quintic();
        assert!(disc_value(&f, &gamma(&[5])).unwrap().value.is_zero());
        assert!(disc_value(&f, &gamma(&[4, 1])).unwrap().value.is_zero());
        let d32 = disc_value(&f, &gamma(&[3, 2])).unwrap().value;
        assert!(!d32.is_zero());
        assert_eq!(d32, disc_value_direct(&f, &gamma(&[3, 2])).unwrap().value);
    }

    #[test]
    fn symbolic_specializes_to_concrete() {
        let f = quintic();
        let vals = f.coeffs().to_vec();
        let cfg = SymbolicConfig::default();
        let sym = disc_symbolic(5, &gamma(&[3, 2]), &cfg).unwrap();
        assert_eq!(sym.value.eval(&vals), disc_value(&f, &gamma(&[3, 2])).unwrap().value);
    }

    #[test]
    fn degree_one() {
        let f = UniPoly::from_ints(&[5, 3]);
        let cfg = SymbolicConfig::default();
        // 1x1 matrix [a_1], divided by a_1
        assert_eq!(disc_value(&f, &gamma(&[1])).unwrap().value, Rational::one());
        assert_eq!(disc_symbolic(1, &gamma(&[1]), &cfg).unwrap().value.to_string(), "1");
    }

    #[test]
    fn symbolic_total_degree_and_homogeneity() {
        let cfg = SymbolicConfig::default();
        for n in 1..=5 {
            for g in partitions_of(n).unwrap() {
                let d = disc_symbolic(n, &g, &cfg).unwrap().value;
                assert!(d.is_homogeneous());
                assert_eq!(d.total_degree(), Some((n + g.first() - 2) as u32), "n={} gamma={}", n, g);
            }
        }
    }

    #[test]
    fn strategies_agree() {
        let bareiss = SymbolicConfig::default();
        let minors = SymbolicConfig { strategy: DetStrategy::Minors, ..bareiss };
        for n in 1..=5 {
            for g in partitions_of(n).unwrap() {
                assert_eq!(
                    disc_symbolic(n, &g, &bareiss).unwrap().value,
                    disc_symbolic(n, &g, &minors).unwrap().value
                );
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let err = disc_symbolic(7, &Partition::single(7), &SymbolicConfig::default()).unwrap_err();
        assert_eq!(err, Error::SymbolicCapExceeded { n: 7, cap: 6 });
        assert!(err.to_string().contains("n <= 6"));
        let cfg = SymbolicConfig { cap: 2, ..Default::default() };
        assert!(disc_symbolic(3, &Partition::single(3), &cfg).is_err());
    }

    fn random_poly(rng: &mut ChaCha8Rng, n: usize, rational: bool) -> UniPoly {
        let mut cs: Vec<Rational> = (0..=n)
            .map(|_| {
                let num = BigInt::from(rng.gen_range(-9i64..=9));
                let den = if rational { BigInt::from(rng.gen_range(1i64..=4)) } else { BigInt::one() };
                Rational::new(num, den)
            })
            .collect();
        if cs[n].is_zero() {
            cs[n] = Rational::one();
        }
        UniPoly::new(cs)
    }

    #[test]
    fn scaling_homogeneity() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..=6 {
            let f = random_poly(&mut rng, n, true);
            for c in [q("3"), q("-2/5")] {
                let cf = f.scale(&c);
                for g in partitions_of(n).unwrap() {
                    let lhs = disc_value(&cf, &g).unwrap().value;
                    let rhs = pow_signed(&c, (n + g.first() - 2) as i64) * disc_value(&f, &g).unwrap().value;
                    assert_eq!(lhs, rhs);
                    assert_eq!(disc_value_direct(&f, &g).unwrap().value, disc_value(&f, &g).unwrap().value);
                }
            }
        }
    }

    #[test]
    fn symbolic_agrees_with_concrete_up_to_six() {
        let cfg = SymbolicConfig::default();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 1..=6 {
            for g in partitions_of(n).unwrap() {
                let sym = disc_symbolic(n, &g, &cfg).unwrap().value;
                for _ in 0..3 {
                    let f = random_poly(&mut rng, n, false);
                    assert_eq!(sym.eval(f.coeffs()), disc_value(&f, &g).unwrap().value, "n={} gamma={}", n, g);
                }
            }
        }
    }
}
