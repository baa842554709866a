//! Exact scalar and polynomial arithmetic.

mod rational;
mod sympoly;
mod unipoly;

pub use rational::{format_ratio, parse_rational, pow_signed, Rational};
pub use sympoly::{Monomial, SymPoly};
pub use unipoly::UniPoly;

/// `k (k-1) ... (k-i+1)`, the factor a derivative of order `i` puts on `x^k`.
pub fn falling_factorial(k: usize, i: usize) -> u64 {
    if i > k {
        return 0;
    }
    ((k - i + 1)..=k).map(|v| v as u64).product()
}

pub fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn falling_factorials() {
        assert_eq!(falling_factorial(5, 0), 1);
        assert_eq!(falling_factorial(5, 2), 20);
        assert_eq!(falling_factorial(3, 3), 6);
        assert_eq!(falling_factorial(2, 3), 0);
        assert_eq!(factorial(0), 1);
        assert_eq!(factorial(5), 120);
    }
}
