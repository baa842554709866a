//! The gamma-discriminant coefficient matrix and its serializations.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::arith::{falling_factorial, format_ratio, Rational, SymPoly, UniPoly};
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Where a row comes from: the coefficients of `F^(derivative) * x^shift`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RowProvenance {
    pub derivative: usize,
    pub shift: usize,
}

/// A run of consecutive rows sharing one derivative order. The
/// `F^(0)` block is kept even when it has no rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub derivative: usize,
    pub rows: usize,
}

/// Square matrix of size `n + gamma_1 - 1` whose rows are the coefficient
/// vectors of `F^(i) x^k`, right-aligned: column `j` holds the coefficient of
/// `x^(size - 1 - j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiscMatrix<T> {
    pub n: usize,
    pub gamma: Partition,
    pub gamma0: usize,
    pub blocks: Vec<Block>,
    pub rows: Vec<RowProvenance>,
    pub entries: Vec<Vec<T>>,
}

impl<T> DiscMatrix<T> {
    pub fn size(&self) -> usize {
        self.entries.len()
    }
}

/// Row blocks for `gamma`: `gamma_1 - 1` rows of `F`, then `gamma_i` rows of
/// `F^(i)`, shifts running from `x^(rows-1)` down to `x^0` in each block.
pub fn layout(gamma: &Partition) -> (usize, Vec<Block>, Vec<RowProvenance>) {
    let gamma0 = gamma.first() - 1;
    let counts = std::iter::once(gamma0).chain(gamma.parts().iter().copied());
    let blocks: Vec<Block> = counts
        .enumerate()
        .map(|(derivative, rows)| Block { derivative, rows })
        .collect();
    let rows = blocks
        .iter()
        .flat_map(|b| {
            (0..b.rows)
                .rev()
                .map(move |shift| RowProvenance { derivative: b.derivative, shift })
        })
        .collect();
    (gamma0, blocks, rows)
}

fn check_gamma(n: usize, gamma: &Partition) -> Result<()> {
    if gamma.n() != n {
        return Err(Error::NotAPartitionOf { parts: gamma.parts().to_vec(), n });
    }
    Ok(())
}

/// Fills the layout for `gamma` with `coeff(i, e)`, the coefficient of `x^e`
/// in `F^(i)`.
fn assemble<T>(
    n: usize,
    gamma: &Partition,
    zero: &T,
    coeff: impl Fn(usize, usize) -> T,
) -> Result<DiscMatrix<T>>
where
    T: Clone,
{
    check_gamma(n, gamma)?;
    let (gamma0, blocks, rows) = layout(gamma);
    let size = n + gamma.first() - 1;
    debug_assert_eq!(rows.len(), size);
    let entries = rows
        .iter()
        .map(|row| {
            (0..size)
                .map(|col| {
                    let power = size - 1 - col;
                    match power.checked_sub(row.shift) {
                        Some(e) if e + row.derivative <= n => coeff(row.derivative, e),
                        _ => zero.clone(),
                    }
                })
                .collect()
        })
        .collect();
    Ok(DiscMatrix { n, gamma: gamma.clone(), gamma0, blocks, rows, entries })
}

/// The matrix for a concrete polynomial.
pub fn build_matrix(f: &UniPoly, gamma: &Partition) -> Result<DiscMatrix<Rational>> {
    let n = f.require_nonconstant()?;
    let derivatives: Vec<UniPoly> = (0..=gamma.len()).map(|i| f.derivative(i)).collect();
    assemble(n, gamma, &Rational::zero(), |i, e| derivatives[i].coeff(e))
}

/// Same matrix over a polynomial with integer coefficients (ascending).
pub(crate) fn build_integer_matrix(coeffs: &[BigInt], gamma: &Partition) -> Result<DiscMatrix<BigInt>> {
    let n = coeffs.len() - 1;
    assemble(n, gamma, &BigInt::zero(), |i, e| {
        &coeffs[e + i] * BigInt::from(falling_factorial(e + i, i))
    })
}

/// The matrix for the generic polynomial `a_n x^n + ... + a_0`, entries in
/// `Z[a_0..a_n]`.
pub fn build_symbolic_matrix(n: usize, gamma: &Partition) -> Result<DiscMatrix<SymPoly>> {
    if n == 0 {
        return Err(Error::NonPositive);
    }
    let nvars = n + 1;
    assemble(n, gamma, &SymPoly::zero(nvars), |i, e| {
        SymPoly::var(e + i, nvars).scale(&BigInt::from(falling_factorial(e + i, i)))
    })
}

/// Rendering of a single matrix entry.
pub trait EntryRepr {
    fn to_json(&self) -> Value;
    /// LaTeX for a nonzero entry in a row of the given derivative order.
    fn to_latex(&self, row: &RowProvenance) -> String;
    fn is_blank(&self) -> bool;
}

impl EntryRepr for Rational {
    fn to_json(&self) -> Value {
        Value::String(format_ratio(self))
    }

    fn to_latex(&self, _row: &RowProvenance) -> String {
        if self.is_integer() {
            self.to_string()
        } else {
            let sign = if self.is_negative() { "-" } else { "" };
            format!("{}\\frac{{{}}}{{{}}}", sign, self.numer().abs(), self.denom())
        }
    }

    fn is_blank(&self) -> bool {
        self.is_zero()
    }
}

impl EntryRepr for SymPoly {
    fn to_json(&self) -> Value {
        sympoly_terms_json(self)
    }

    /// Single-term entries `k(k-1)..(k-i+1) a_k` print their factors the way
    /// the coefficient arises, e.g. `5\cdot4a_{5}`.
    fn to_latex(&self, row: &RowProvenance) -> String {
        if self.len() == 1 {
            let (m, c) = self.leading_term().unwrap();
            let vars: Vec<usize> = (0..m.exponents().len()).filter(|&i| m.exponents()[i] > 0).collect();
            if let [k] = vars[..] {
                let i = row.derivative;
                if m.degree() == 1 && *c == BigInt::from(falling_factorial(k, i)) {
                    let factors: Vec<String> = ((k + 1 - i)..=k).rev().map(|v| v.to_string()).collect();
                    return format!("{}a_{{{}}}", factors.join("\\cdot"), k);
                }
            }
        }
        self.to_string()
    }

    fn is_blank(&self) -> bool {
        self.is_zero()
    }
}

/// `[{"coeff": "20", "exponents": [0, .., 1]}, ...]`, descending graded-lex.
pub fn sympoly_terms_json(p: &SymPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(m, c)| json!({ "coeff": c.to_string(), "exponents": m.exponents() }))
            .collect(),
    )
}

impl<T: EntryRepr> DiscMatrix<T> {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "gamma": self.gamma.parts(),
            "gamma0": self.gamma0,
            "size": self.size(),
            "blocks": self.blocks.iter().map(|b| json!({ "derivative": b.derivative, "rows": b.rows })).collect::<Vec<_>>(),
            "rows": self.rows.iter().zip(&self.entries).map(|(p, r)| json!({
                "derivative": p.derivative,
                "shift": p.shift,
                "entries": r.iter().map(EntryRepr::to_json).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }

    /// A LaTeX `array` with one `\hline` between consecutive derivative
    /// blocks and blank cells for zero entries.
    pub fn to_latex(&self) -> String {
        let size = self.size();
        let mut out = format!("\\left|\n\\begin{{array}}[c]{{{}}}\n", "c".repeat(size));
        let mut row_idx = 0;
        let nonempty: Vec<&Block> = self.blocks.iter().filter(|b| b.rows > 0).collect();
        for (bi, block) in nonempty.iter().enumerate() {
            for r in 0..block.rows {
                let prov = &self.rows[row_idx];
                let cells: Vec<String> = self.entries[row_idx]
                    .iter()
                    .map(|e| if e.is_blank() { String::new() } else { e.to_latex(prov) })
                    .collect();
                out.push_str(&cells.join(" & "));
                let last_in_block = r + 1 == block.rows;
                if row_idx + 1 < size {
                    out.push_str("\\\\");
                    if last_in_block && bi + 1 < nonempty.len() {
                        out.push_str("\\hline");
                    }
                }
                out.push('\n');
                row_idx += 1;
            }
        }
        out.push_str("\\end{array}\n\\right|");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gamma(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn rendered(m: &DiscMatrix<SymPoly>) -> Vec<Vec<String>> {
        m.entries
            .iter()
            .zip(&m.rows)
            .map(|(r, p)| r.iter().map(|e| if e.is_zero() { String::new() } else { e.to_latex(p) }).collect())
            .collect()
    }

    #[test]
    fn quintic_three_two_layout() {
        let m = build_symbolic_matrix(5, &gamma(&[3, 2])).unwrap();
        assert_eq!(m.size(), 7);
        assert_eq!(m.gamma0, 2);
        let sizes: Vec<usize> = m.blocks.iter().map(|b| b.rows).collect();
        assert_eq!(sizes, [2, 3, 2]);
        let cells = rendered(&m);
        let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        assert_eq!(cells[0], s(&["a_{5}", "a_{4}", "a_{3}", "a_{2}", "a_{1}", "a_{0}", ""]));
        assert_eq!(cells[1], s(&["", "a_{5}", "a_{4}", "a_{3}", "a_{2}", "a_{1}", "a_{0}"]));
        assert_eq!(cells[2], s(&["5a_{5}", "4a_{4}", "3a_{3}", "2a_{2}", "1a_{1}", "", ""]));
        assert_eq!(cells[4], s(&["", "", "5a_{5}", "4a_{4}", "3a_{3}", "2a_{2}", "1a_{1}"]));
        assert_eq!(
            cells[5],
            s(&["", "", "5\\cdot4a_{5}", "4\\cdot3a_{4}", "3\\cdot2a_{3}", "2\\cdot1a_{2}", ""])
        );
        assert_eq!(
            cells[6],
            s(&["", "", "", "5\\cdot4a_{5}", "4\\cdot3a_{4}", "3\\cdot2a_{3}", "2\\cdot1a_{2}"])
        );
        let prov: Vec<(usize, usize)> = m.rows.iter().map(|r| (r.derivative, r.shift)).collect();
        assert_eq!(prov, [(0, 1), (0, 0), (1, 2), (1, 1), (1, 0), (2, 1), (2, 0)]);
    }

    #[test]
    fn all_ones_has_empty_f_block() {
        let m = build_symbolic_matrix(5, &Partition::ones(5)).unwrap();
        assert_eq!(m.size(), 5);
        assert_eq!(m.blocks[0], Block { derivative: 0, rows: 0 });
        let derivs: Vec<usize> = m.rows.iter().map(|r| r.derivative).collect();
        assert_eq!(derivs, [1, 2, 3, 4, 5]);
        let cells = rendered(&m);
        assert_eq!(cells[4][4], "5\\cdot4\\cdot3\\cdot2\\cdot1a_{5}");
        assert_eq!(cells[0][4], "1a_{1}");
        assert!(m.to_json()["blocks"][0]["rows"] == 0);
    }

    #[test]
    fn degree_one() {
        let f = UniPoly::from_ints(&[3, 2]);
        let m = build_matrix(&f, &gamma(&[1])).unwrap();
        assert_eq!(m.entries, vec![vec![Rational::from_integer(2.into())]]);
    }

    #[test]
    fn concrete_matches_symbolic_pattern() {
        let f = UniPoly::from_ints(&[4, -8, 1, 7, -5, 1]);
        let vals: Vec<Rational> = f.coeffs().to_vec();
        for g in crate::partitions::partitions_of(5).unwrap() {
            let c = build_matrix(&f, &g).unwrap();
            let s = build_symbolic_matrix(5, &g).unwrap();
            let ints = build_integer_matrix(&f.integer_coeffs().unwrap(), &g).unwrap();
            for ((cr, sr), ir) in c.entries.iter().zip(&s.entries).zip(&ints.entries) {
                for ((ce, se), ie) in cr.iter().zip(sr).zip(ir) {
                    assert_eq!(*ce, se.eval(&vals));
                    assert_eq!(*ce, Rational::from_integer(ie.clone()));
                }
            }
        }
    }

    #[test]
    fn squareness_up_to_ten() {
        for n in 1..=10 {
            for g in crate::partitions::partitions_of(n).unwrap() {
                let (gamma0, blocks, rows) = layout(&g);
                assert_eq!(gamma0, g.first() - 1);
                assert_eq!(rows.len(), n + g.first() - 1);
                assert_eq!(blocks.iter().map(|b| b.rows).sum::<usize>(), rows.len());
            }
        }
    }

    #[test]
    fn rejects_wrong_gamma() {
        let f = UniPoly::from_ints(&[1, 0, 1]);
        assert!(matches!(build_matrix(&f, &gamma(&[2, 1])), Err(Error::NotAPartitionOf { .. })));
        assert_eq!(build_matrix(&UniPoly::from_ints(&[1]), &gamma(&[1])).unwrap_err(), Error::ConstantPolynomial);
    }

    #[test]
    fn latex_has_rules_between_blocks() {
        let m = build_symbolic_matrix(5, &gamma(&[3, 2])).unwrap();
        let tex = m.to_latex();
        assert_eq!(tex.matches("\\hline").count(), 2);
        assert!(tex.starts_with("\\left|\n\\begin{array}[c]{ccccccc}\n"));
        assert!(tex.contains("a_{5} & a_{4} & a_{3} & a_{2} & a_{1} & a_{0} & \\\\\n"));
        let ones = build_symbolic_matrix(5, &Partition::ones(5)).unwrap().to_latex();
        assert_eq!(ones.matches("\\hline").count(), 4);
    }
}
