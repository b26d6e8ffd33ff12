//! Step constructors and computations shared by several claims.

use serde::Serialize;
use serde_json::{json, Value};

use super::{Status, Step, StepKind};
use crate::constructions::triangular_positions;
use crate::properties::{trivial_quadratic, PropertyVerdict};
use crate::ring::FiniteRing;

fn value<T: Serialize>(data: &T) -> Value {
    serde_json::to_value(data).expect("step data serialises")
}

pub(crate) fn verified<T: Serialize>(name: &str, description: &str, passed: bool, data: &T) -> Step {
    Step {
        name: name.into(),
        description: description.into(),
        kind: StepKind::Verified,
        status: if passed { Status::Pass } else { Status::Fail },
        chain_sizes: Vec::new(),
        data: value(data),
    }
}

pub(crate) fn cited<T: Serialize>(name: &str, description: &str, passed: bool, data: &T) -> Step {
    Step {
        kind: StepKind::Cited,
        ..verified(name, description, passed, data)
    }
}

pub(crate) fn skipped(name: &str, description: &str, reason: &str) -> Step {
    Step {
        name: name.into(),
        description: description.into(),
        kind: StepKind::Verified,
        status: Status::Skipped,
        chain_sizes: Vec::new(),
        data: json!({ "reason": reason }),
    }
}

pub(crate) fn with_chain(mut step: Step, sizes: &[u64]) -> Step {
    step.chain_sizes = sizes.to_vec();
    step
}

/// Step asserting a property verdict equals `expect`.
pub(crate) fn verdict_step(name: &str, description: &str, verdict: &PropertyVerdict, expect: bool) -> Step {
    let sizes = verdict
        .primary_witness()
        .map(|w| w.chain_sizes.clone())
        .unwrap_or_default();
    with_chain(verified(name, description, verdict.holds == expect, verdict), &sizes)
}

/// R-coordinates of matrix entry `(i, j)` of an element of `Tₙ(R)`.
fn entry(base_rank: usize, n: usize, x: &[u64], i: usize, j: usize) -> Vec<u64> {
    let positions = triangular_positions(n);
    let slots = positions.len();
    let slot = positions.iter().position(|&p| p == (i, j)).expect("upper-triangular entry");
    (0..base_rank).map(|r| x[r * slots + slot]).collect()
}

#[derive(Debug, Serialize)]
pub(crate) struct InductionReplay {
    pub base_quadratic_trivial: bool,
    pub diagonal_multiplicative: bool,
    /// For each offset `k ≥ 1`: products of basis matrices supported on
    /// offsets `≥ k` vanish at offset `k`.
    pub offsets_raise: Vec<bool>,
    pub linear_coefficient_unit: bool,
    pub orders_repeat_base: bool,
    pub basis_pairs_checked: u64,
}

impl InductionReplay {
    pub(crate) fn passed(&self) -> bool {
        self.base_quadratic_trivial
            && self.diagonal_multiplicative
            && self.offsets_raise.iter().all(|&b| b)
            && self.linear_coefficient_unit
            && self.orders_repeat_base
    }
}

/// Structural replay of the argument that a solution of `c·x² + d·x = 0` in
/// `Tₙ(R)` vanishes: first on the diagonal, then one superdiagonal at a time.
pub(crate) fn superdiagonal_induction(
    base: &FiniteRing,
    tn: &FiniteRing,
    n: usize,
    c: i64,
    d: i64,
) -> crate::error::Result<InductionReplay> {
    let k = base.rank();
    let positions = triangular_positions(n);
    let slots = positions.len();
    let offset_of = |b: usize| {
        let (i, j) = positions[b % slots];
        j - i
    };
    let mut pairs = 0u64;
    let mut diagonal_multiplicative = true;
    for u in 0..tn.rank() {
        for v in 0..tn.rank() {
            pairs += 1;
            let (x, y) = (tn.basis_coords(u), tn.basis_coords(v));
            let xy = tn.mul_coords(&x, &y);
            for i in 0..n {
                let lhs = entry(k, n, &xy, i, i);
                let rhs = base.mul_coords(&entry(k, n, &x, i, i), &entry(k, n, &y, i, i));
                diagonal_multiplicative &= lhs == rhs;
            }
        }
    }
    let offsets_raise = (1..n)
        .map(|off| {
            (0..tn.rank()).filter(|&u| offset_of(u) >= off).all(|u| {
                (0..tn.rank()).filter(|&v| offset_of(v) >= off).all(|v| {
                    let xy = tn.mul_coords(&tn.basis_coords(u), &tn.basis_coords(v));
                    (0..n - off).all(|i| entry(k, n, &xy, i, i + off).iter().all(|&e| e == 0))
                })
            })
        })
        .collect();
    let mut expected: Vec<u64> = base.orders().iter().flat_map(|&o| std::iter::repeat(o).take(slots)).collect();
    let mut actual = tn.orders().to_vec();
    expected.sort_unstable();
    actual.sort_unstable();
    Ok(InductionReplay {
        base_quadratic_trivial: trivial_quadratic(base, c, d)?.holds,
        diagonal_multiplicative,
        offsets_raise,
        linear_coefficient_unit: d == 1 || d == -1,
        orders_repeat_base: expected == actual,
        basis_pairs_checked: pairs,
    })
}
