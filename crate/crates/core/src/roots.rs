//! Root-side ground truth: polynomials built from prescribed roots, a
//! squarefree-decomposition multiplicity oracle, and the root-side
//! determinant formulas for `D(gamma)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::arith::{factorial, parse_rational, pow_signed, Rational, UniPoly};
use crate::engine::det_fraction_free;
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// `leading * prod (x - r)^mult` over pairwise distinct rational roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSpec {
    roots: Vec<(Rational, usize)>,
    leading: Rational,
}

impl RootSpec {
    pub fn new(roots: Vec<(Rational, usize)>, leading: Rational) -> Result<Self> {
        if leading.is_zero() {
            return Err(Error::ZeroLeadingCoefficient);
        }
        if roots.is_empty() || roots.iter().any(|(_, m)| *m == 0) {
            return Err(Error::Parse("every root needs a positive multiplicity".into()));
        }
        for (i, (r, _)) in roots.iter().enumerate() {
            if roots[..i].iter().any(|(s, _)| s == r) {
                return Err(Error::RepeatedRoot(r.to_string()));
            }
        }
        Ok(RootSpec { roots, leading })
    }

    /// Simple roots only.
    pub fn distinct(roots: Vec<Rational>, leading: Rational) -> Result<Self> {
        Self::new(roots.into_iter().map(|r| (r, 1)).collect(), leading)
    }

    pub fn roots(&self) -> &[(Rational, usize)] {
        &self.roots
    }

    pub fn leading(&self) -> &Rational {
        &self.leading
    }

    pub fn degree(&self) -> usize {
        self.roots.iter().map(|(_, m)| m).sum()
    }

    /// The multiplicities sorted into a partition.
    pub fn multiplicity_vector(&self) -> Partition {
        let mut parts: Vec<usize> = self.roots.iter().map(|(_, m)| *m).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("positive multiplicities")
    }

    /// Each root repeated by its multiplicity.
    fn flattened(&self) -> Vec<Rational> {
        self.roots
            .iter()
            .flat_map(|(r, m)| std::iter::repeat_n(r.clone(), *m))
            .collect()
    }
}

impl fmt::Display for RootSpec {
    /// `leading; r1^m1, r2^m2, ...`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let roots: Vec<String> = self.roots.iter().map(|(r, m)| format!("{}^{}", r, m)).collect();
        write!(f, "{}; {}", self.leading, roots.join(", "))
    }
}

impl FromStr for RootSpec {
    type Err = Error;

    /// Parses `leading; r1^m1, r2^m2, ...`; a root without `^m` is simple.
    fn from_str(s: &str) -> Result<Self> {
        let (lead, rest) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("expected \"leading; roots\", got {:?}", s)))?;
        let leading = parse_rational(lead)?;
        let roots = rest
            .split(',')
            .map(|item| {
                let (r, m) = match item.split_once('^') {
                    Some((r, m)) => {
                        let m = m
                            .trim()
                            .parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad multiplicity in {:?}", item)))?;
                        (r, m)
                    }
                    None => (item, 1),
                };
                Ok((parse_rational(r)?, m))
            })
            .collect::<Result<Vec<_>>>()?;
        RootSpec::new(roots, leading)
    }
}

/// Expanded polynomial of a root specification.
pub fn expand(spec: &RootSpec) -> UniPoly {
    spec.roots.iter().fold(UniPoly::constant(spec.leading.clone()), |acc, (r, m)| {
        &acc * &UniPoly::linear_root(r).pow(*m)
    })
}

/// Yun's squarefree decomposition: `F = c * g_1 * g_2^2 * ... * g_k^k` with
/// monic, squarefree, pairwise coprime `g_i`. Returns `(c, [g_1, .., g_k])`.
pub fn squarefree_decomposition(f: &UniPoly) -> Result<(Rational, Vec<UniPoly>)> {
    f.require_nonconstant()?;
    let c = f.leading().unwrap().clone();
    let f = f.monic();
    let df = f.derivative(1);
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0)?;
    let mut d = &df.exact_div(&a0)? - &b.derivative(1);
    let mut factors = Vec::new();
    while b.degree() != Some(0) {
        let a = b.gcd(&d);
        let next_b = b.exact_div(&a)?;
        let next_c = d.exact_div(&a)?;
        d = &next_c - &next_b.derivative(1);
        b = next_b;
        factors.push(a);
    }
    Ok((c, factors))
}

/// Multiplicity vector read off the squarefree decomposition: multiplicity
/// `i` appears `deg g_i` times.
pub fn squarefree_multiplicity(f: &UniPoly) -> Result<Partition> {
    let (_, factors) = squarefree_decomposition(f)?;
    let mut parts = Vec::new();
    for (i, g) in factors.iter().enumerate().rev() {
        let deg = g.degree().unwrap_or(0);
        parts.extend(std::iter::repeat_n(i + 1, deg));
    }
    Partition::new(parts)
}

/// `det [alpha_j^(n-1); ...; alpha_j^0]`, rows from the highest power down.
pub fn vandermonde(alphas: &[Rational]) -> Result<Rational> {
    let n = alphas.len();
    let rows: Vec<Vec<Rational>> = (0..n)
        .rev()
        .map(|p| alphas.iter().map(|a| pow_signed(a, p as i64)).collect())
        .collect();
    det_fraction_free(&rows)
}

fn check_gamma(n: usize, gamma: &Partition) -> Result<()> {
    if gamma.n() != n {
        return Err(Error::NotAPartitionOf { parts: gamma.parts().to_vec(), n });
    }
    Ok(())
}

/// `(derivative, shift)` for the non-`F` rows: `gamma_i` rows of `F^(i)`,
/// shifts descending.
fn derivative_rows(gamma: &Partition) -> Vec<(usize, usize)> {
    gamma
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(idx, &g)| (0..g).rev().map(move |k| (idx + 1, k)))
        .collect()
}

/// Root-side evaluation of `D(gamma)` for a polynomial with `n` simple roots:
///
/// `a_n^(gamma_1 - 2) * det[F^(i)(alpha_j) alpha_j^k] / V(alpha_1..alpha_n)`
///
/// with rows in the same block order as the coefficient matrix minus its
/// `F` block.
pub fn disc_from_distinct_roots(spec: &RootSpec, gamma: &Partition) -> Result<Rational> {
    if let Some((r, _)) = spec.roots.iter().find(|(_, m)| *m > 1) {
        return Err(Error::RepeatedRoot(r.to_string()));
    }
    let alphas = spec.flattened();
    check_gamma(alphas.len(), gamma)?;
    let f = expand(spec);
    let rows: Vec<Vec<Rational>> = derivative_rows(gamma)
        .into_iter()
        .map(|(i, k)| {
            let fi = f.derivative(i);
            alphas.iter().map(|a| fi.eval(a) * pow_signed(a, k as i64)).collect()
        })
        .collect();
    let numerator = det_fraction_free(&rows)?;
    let v = vandermonde(&alphas)?;
    let scale = pow_signed(&spec.leading, gamma.first() as i64 - 2);
    Ok(scale * numerator / v)
}

/// `|D(gamma)|` from distinct roots with multiplicities: the determinant of
/// `(F^(i) x^k)^(l)(r_j)` for `l < mu_j`, divided by
/// `prod_{i<j} (r_i - r_j)^(mu_i mu_j)` and scaled by
/// `a_n^(gamma_1 - 2) / prod_j prod_{l < mu_j} l!`. Only the absolute value
/// is determined.
pub fn disc_from_multiple_roots_abs(spec: &RootSpec, gamma: &Partition) -> Result<Rational> {
    let n = spec.degree();
    check_gamma(n, gamma)?;
    let f = expand(spec);
    let rows: Vec<Vec<Rational>> = derivative_rows(gamma)
        .into_iter()
        .map(|(i, k)| {
            let row_poly = f.derivative(i).mul_power(k);
            spec.roots
                .iter()
                .flat_map(|(r, m)| {
                    let row_poly = &row_poly;
                    (0..*m).map(move |l| row_poly.derivative(l).eval(r))
                })
                .collect()
        })
        .collect();
    let numerator = det_fraction_free(&rows)?;
    let mut denominator = Rational::one();
    for (i, (ri, mi)) in spec.roots.iter().enumerate() {
        for (rj, mj) in &spec.roots[i + 1..] {
            denominator *= pow_signed(&(ri - rj), (mi * mj) as i64);
        }
    }
    let factorials: BigInt = spec
        .roots
        .iter()
        .flat_map(|(_, m)| (0..*m).map(|l| BigInt::from(factorial(l))))
        .product();
    let c = pow_signed(&spec.leading, gamma.first() as i64 - 2) / Rational::from_integer(factorials);
    Ok((c * numerator / denominator).abs())
}

/// Outcome of [`check_leibniz_structure`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LeibnizReport {
    pub checked: usize,
    pub failed: usize,
}

/// For `F` with multiplicity vector `mu`, every derivative order `i` up to
/// `mu_1`, shift `k < conj(mu)_i` and root `r_j` with `mu_j >= i`:
/// `(F^(i) x^k)^(l)(r_j)` vanishes for `l < mu_j - i` and equals
/// `F^(mu_j)(r_j) r_j^k` at `l = mu_j - i`.
pub fn check_leibniz_structure(spec: &RootSpec) -> LeibnizReport {
    let f = expand(spec);
    let gamma = spec.multiplicity_vector().conjugate();
    let mut report = LeibnizReport::default();
    for (i, k) in derivative_rows(&gamma) {
        let row_poly = f.derivative(i).mul_power(k);
        for (r, mu) in spec.roots.iter().filter(|(_, m)| *m >= i) {
            let top = mu - i;
            for l in 0..=top {
                let value = row_poly.derivative(l).eval(r);
                let expected = if l < top {
                    Rational::zero()
                } else {
                    f.derivative(*mu).eval(r) * pow_signed(r, k as i64)
                };
                report.checked += 1;
                if value != expected {
                    report.failed += 1;
                }
            }
        }
    }
    report
}

/// Candidate roots: the integers and half-integers in `[-9, 9]`.
fn root_pool() -> Vec<Rational> {
    (-18i64..=18).map(|k| Rational::new(k.into(), 2.into())).collect()
}

/// Random spec with multiplicity vector `mu`: distinct roots from the
/// half-integer grid on `[-9, 9]`, leading coefficient a nonzero integer in
/// `[-5, 5]`.
pub fn random_spec<R: Rng + ?Sized>(mu: &Partition, rng: &mut R) -> RootSpec {
    let pool = root_pool();
    assert!(mu.len() <= pool.len(), "not enough candidate roots");
    let chosen: Vec<Rational> = pool.choose_multiple(rng, mu.len()).cloned().collect();
    let mut lead = 0i64;
    while lead == 0 {
        lead = rng.gen_range(-5..=5);
    }
    let roots = chosen.into_iter().zip(mu.parts().iter().copied()).collect();
    RootSpec::new(roots, Rational::from_integer(lead.into())).expect("distinct by construction")
}

/// Random spec with `n` simple roots.
pub fn random_distinct_spec<R: Rng + ?Sized>(n: usize, rng: &mut R) -> RootSpec {
    random_spec(&Partition::ones(n), rng)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::disc_value;
    use crate::partitions::partitions_of;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn expand_examples() {
        let spec: RootSpec = "1; 1^2, -1^1, 2^2".parse().unwrap();
        assert_eq!(expand(&spec), UniPoly::parse_descending("1,-5,7,1,-8,4").unwrap());

        let spec = RootSpec::new(vec![(q("0"), 4)], q("-3/2")).unwrap();
        assert_eq!(expand(&spec), UniPoly::new(vec![q("0"), q("0"), q("0"), q("0"), q("-3/2")]));

        let spec: RootSpec = "3; 1, 2".parse().unwrap();
        assert_eq!(expand(&spec), UniPoly::from_ints(&[6, -9, 3]));
    }

    #[test]
    fn spec_validation() {
        assert!(matches!("1; 2, 2".parse::<RootSpec>(), Err(Error::RepeatedRoot(_))));
        assert!(matches!("1; 1/2^2, 2/4".parse::<RootSpec>(), Err(Error::RepeatedRoot(_))));
        assert_eq!("0; 1".parse::<RootSpec>(), Err(Error::ZeroLeadingCoefficient));
        assert!("1 1, 2".parse::<RootSpec>().is_err());
        assert!("1; 1^x".parse::<RootSpec>().is_err());
        assert!("1; 1^0".parse::<RootSpec>().is_err());
        let spec: RootSpec = "-2/3; 1/2^3, -4".parse().unwrap();
        assert_eq!(spec.to_string(), "-2/3; 1/2^3, -4^1");
        assert_eq!(spec.to_string().parse::<RootSpec>().unwrap(), spec);
        assert_eq!(spec.multiplicity_vector(), Partition::new(vec![3, 1]).unwrap());
    }

    #[test]
    fn squarefree_examples() {
        let f = UniPoly::parse_descending("1,-5,7,1,-8,4").unwrap();
        assert_eq!(squarefree_multiplicity(&f).unwrap(), Partition::new(vec![2, 2, 1]).unwrap());
        let sqfree = UniPoly::parse_descending("1,0,0,0,1,1").unwrap();
        assert_eq!(squarefree_multiplicity(&sqfree).unwrap(), Partition::ones(5));
        assert_eq!(squarefree_multiplicity(&UniPoly::from_ints(&[3])), Err(Error::ConstantPolynomial));
        assert_eq!(squarefree_multiplicity(&UniPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn yun_reconstructs_and_factors_are_coprime() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..=10 {
            for mu in partitions_of(n).unwrap() {
                let spec = random_spec(&mu, &mut rng);
                let f = expand(&spec);
                let (c, gs) = squarefree_decomposition(&f).unwrap();
                let rebuilt = gs
                    .iter()
                    .enumerate()
                    .fold(UniPoly::constant(c), |acc, (i, g)| &acc * &g.pow(i + 1));
                assert_eq!(rebuilt, f);
                for (i, g) in gs.iter().enumerate() {
                    assert_eq!(g.gcd(&g.derivative(1)).degree(), Some(0), "g_{} not squarefree", i + 1);
                    for h in &gs[i + 1..] {
                        assert_eq!(g.gcd(h).degree(), Some(0));
                    }
                }
                assert_eq!(squarefree_multiplicity(&f).unwrap(), mu);
            }
        }
    }

    #[test]
    fn vandermonde_is_product_of_differences() {
        let alphas = vec![q("0"), q("1"), q("-1/2"), q("3")];
        let mut prod = Rational::one();
        for i in 0..alphas.len() {
            for j in i + 1..alphas.len() {
                prod *= &alphas[i] - &alphas[j];
            }
        }
        assert_eq!(vandermonde(&alphas).unwrap(), prod);
    }

    #[test]
    fn quadratic_distinct_roots_by_hand() {
        // F = x^2 - x; numerator det [[F'(0)*0, F'(1)*1], [F'(0), F'(1)]] = 1,
        // V(0, 1) = -1, a_2^0 = 1.
        let spec: RootSpec = "1; 0, 1".parse().unwrap();
        let gamma = Partition::single(2);
        let rhs = disc_from_distinct_roots(&spec, &gamma).unwrap();
        assert_eq!(rhs, q("-1"));
        assert_eq!(rhs, disc_value(&expand(&spec), &gamma).unwrap().value);
        // closed form for (1,1): 1^1 * 2^2 * a_2
        let ones = disc_from_distinct_roots(&spec, &Partition::ones(2)).unwrap();
        assert_eq!(ones, q("4"));
    }

    #[test]
    fn distinct_roots_rejects_multiple() {
        let spec: RootSpec = "1; 0^2, 1".parse().unwrap();
        assert!(matches!(
            disc_from_distinct_roots(&spec, &Partition::single(3)),
            Err(Error::RepeatedRoot(_))
        ));
    }

    #[test]
    fn distinct_roots_identity_small_sweep() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 1..=5 {
            for gamma in partitions_of(n).unwrap() {
                for _ in 0..3 {
                    let spec = random_distinct_spec(n, &mut rng);
                    let lhs = disc_from_distinct_roots(&spec, &gamma).unwrap();
                    assert_eq!(lhs, disc_value(&expand(&spec), &gamma).unwrap().value);
                }
            }
        }
    }

    #[test]
    fn three_two_example_with_half_constant() {
        // mu = (3,2), gamma = (2,2,1); c = 1 / ((0! 1! 2!)(0! 1!)) = 1/2
        let spec: RootSpec = "1; 1^3, -2^2".parse().unwrap();
        let gamma = Partition::new(vec![2, 2, 1]).unwrap();
        let lhs = disc_from_multiple_roots_abs(&spec, &gamma).unwrap();
        let rhs = disc_value(&expand(&spec), &gamma).unwrap().value;
        assert!(!rhs.is_zero());
        assert_eq!(lhs, rhs.abs());
    }

    #[test]
    fn multiple_roots_formula_reduces_to_distinct() {
        let spec: RootSpec = "2; 0, 1, -3/2, 5".parse().unwrap();
        for gamma in partitions_of(4).unwrap() {
            let a = disc_from_multiple_roots_abs(&spec, &gamma).unwrap();
            let b = disc_from_distinct_roots(&spec, &gamma).unwrap();
            assert_eq!(a, b.abs());
        }
    }

    #[test]
    fn leibniz_structure_holds() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for n in 1..=7 {
            for mu in partitions_of(n).unwrap() {
                let report = check_leibniz_structure(&random_spec(&mu, &mut rng));
                assert!(report.checked > 0);
                assert_eq!(report.failed, 0);
            }
        }
    }

    #[test]
    fn random_specs_respect_ranges() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let mu = Partition::new(vec![3, 2, 2, 1]).unwrap();
        for _ in 0..50 {
            let spec = random_spec(&mu, &mut rng);
            assert_eq!(spec.multiplicity_vector(), mu);
            assert!(spec.leading().abs() <= q("5") && !spec.leading().is_zero());
            assert!(spec.leading().is_integer());
            for (r, _) in spec.roots() {
                assert!(r.abs() <= q("9"));
                assert!((r * q("2")).is_integer());
            }
        }
    }
}
