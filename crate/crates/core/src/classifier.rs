//! The discriminant chain: evaluate `D(gamma)` for gamma in decreasing
//! lexicographic order and stop at the first nonzero value. That gamma is the
//! conjugate of the multiplicity vector.

use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::arith::{format_ratio, Rational, UniPoly};
use crate::engine::disc_value;
use crate::error::Result;
use crate::partitions::{classification_order, Partition};

#[derive(Clone, Debug, PartialEq)]
pub struct TraceStep {
    pub gamma: Partition,
    pub value: Rational,
    pub nonzero: bool,
}

/// Every discriminant evaluated on the way to the answer.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassificationTrace {
    pub input: UniPoly,
    pub n: usize,
    pub steps: Vec<TraceStep>,
    /// The multiplicity vector.
    pub result: Partition,
    /// The largest gamma with `D(gamma) != 0`; `result` is its conjugate.
    pub delta: Partition,
}

impl ClassificationTrace {
    pub fn to_json(&self) -> Value {
        json!({
            "input": descending_coeffs(&self.input),
            "n": self.n,
            "steps": self.steps.iter().map(|s| json!({
                "gamma": s.gamma.parts(),
                "value": format_ratio(&s.value),
                "nonzero": s.nonzero,
            })).collect::<Vec<_>>(),
            "multiplicity": self.result.parts(),
        })
    }
}

/// `"a_n,...,a_0"`
pub fn descending_coeffs(f: &UniPoly) -> String {
    let cs: Vec<String> = f.coeffs().iter().rev().map(ToString::to_string).collect();
    cs.join(",")
}

/// Runs the chain, recording each step.
pub fn classify_trace(f: &UniPoly) -> Result<ClassificationTrace> {
    let n = f.require_nonconstant()?;
    let mut steps = Vec::new();
    for (mu, gamma) in classification_order(n)? {
        let value = disc_value(f, &gamma)?.value;
        let nonzero = !value.is_zero();
        steps.push(TraceStep { gamma: gamma.clone(), value, nonzero });
        if nonzero {
            return Ok(ClassificationTrace { input: f.clone(), n, steps, result: mu, delta: gamma });
        }
    }
    unreachable!("D(1,...,1) = prod i^i * a_n^(n-1) never vanishes")
}

/// The multiplicity vector of `f`.
pub fn classify(f: &UniPoly) -> Result<Partition> {
    Ok(classify_trace(f)?.result)
}

/// Evaluates every discriminant in parallel and picks the first nonzero one
/// in chain order. Always agrees with [`classify`].
pub fn classify_speculative(f: &UniPoly) -> Result<Partition> {
    let n = f.require_nonconstant()?;
    let order = classification_order(n)?;
    let zeros = order
        .par_iter()
        .map(|(_, gamma)| disc_value(f, gamma).map(|d| d.value.is_zero()))
        .collect::<Result<Vec<bool>>>()?;
    let first = zeros.iter().position(|z| !z).expect("last discriminant is nonzero");
    Ok(order[first].0.clone())
}

/// The condition characterising one multiplicity vector: all of
/// `vanishing` are zero and `nonzero` is not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition {
    pub mu: Partition,
    pub vanishing: Vec<Partition>,
    pub nonzero: Partition,
}

impl Condition {
    pub fn to_json(&self) -> Value {
        json!({
            "mu": self.mu.parts(),
            "equal": self.vanishing.iter().map(Partition::parts).collect::<Vec<_>>(),
            "nonzero": self.nonzero.parts(),
        })
    }
}

/// One condition per partition of `n`, in chain order.
pub fn conditions(n: usize) -> Result<Vec<Condition>> {
    let order = classification_order(n)?;
    Ok(order
        .iter()
        .enumerate()
        .map(|(i, (mu, gamma))| Condition {
            mu: mu.clone(),
            vanishing: order[..i].iter().map(|(_, g)| g.clone()).collect(),
            nonzero: gamma.clone(),
        })
        .collect())
}
