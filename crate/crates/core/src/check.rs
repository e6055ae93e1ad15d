//! Decision procedures for score sequences.
//!
//! Four checks live here:
//!
//! * [`moon_check`]: Moon's inequality test for bitournament score pairs:
//!   every prefix-sum pair `(k, l)` must satisfy `sum >= k*l`, with equality
//!   at `(m, n)`.
//! * [`trim_check`]: the trimming test: the pair must be feasible and the
//!   conjugate of `B` must trim to the zero sequence under `A` as schedule.
//! * [`landau_check`]: Landau's test for tournament score sequences.
//! * [`avery_check`]: Avery's test for digraph score sequences (score
//!   `n-1 + outdegree - indegree`).
//!
//! All checks return a [`CheckReport`] rather than an error: rejection is an
//! answer, and it always carries a witness locating the first failure.

use crate::seq::{BoundedSeq, IntSeq, TrimSchedule, TrimTrace};
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Accept,
    Reject,
}

/// Which decision procedure produced a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Criterion {
    Moon,
    Trimming,
    Landau,
    Avery,
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Criterion::Moon => "moon",
            Criterion::Trimming => "trimming",
            Criterion::Landau => "landau",
            Criterion::Avery => "avery",
        };
        f.write_str(name)
    }
}

/// Which side of a pair a witness refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    A,
    B,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::A => "A",
            Side::B => "B",
        })
    }
}

/// Location of the first failure behind a rejection.
///
/// `index` fields are 0-based; trimming `step` is 1-based (the position of
/// the schedule entry that could not be applied).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// An element exceeds what any orientation could give it.
    ElementOutOfBound {
        side: Side,
        index: usize,
        value: u64,
        bound: u64,
    },
    /// A sequence's bound does not equal the partner sequence's length.
    BoundMismatch {
        side: Side,
        bound: u64,
        expected: u64,
    },
    /// Element totals do not add up to the arc count `m*n`.
    SumMismatch { actual: u64, expected: u64 },
    /// Moon inequality failed at `(k, l)`: either `sum < k*l`, or the
    /// required equality at `(m, n)` does not hold.
    MoonViolation {
        k: usize,
        l: usize,
        sum: u64,
        product: u64,
    },
    /// Prefix-sum inequality (Landau or Avery) failed at `k`, or the
    /// required equality at `k = n` does not hold.
    PrefixViolation { k: usize, sum: u64, required: u64 },
    /// Normal trimming step `step` (1-based) asked for more positive
    /// elements than were available.
    TrimFailure {
        step: usize,
        requested: u64,
        available: usize,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::ElementOutOfBound {
                side,
                index,
                value,
                bound,
            } => write!(
                f,
                "element {} of {side} is {value}, exceeds bound {bound}",
                index + 1
            ),
            Witness::BoundMismatch {
                side,
                bound,
                expected,
            } => write!(f, "bound of {side} is {bound}, expected {expected}"),
            Witness::SumMismatch { actual, expected } => {
                write!(f, "element sum {actual}, feasibility requires {expected}")
            }
            Witness::MoonViolation { k, l, sum, product } => {
                if sum < product {
                    write!(f, "k={k} l={l}: sum {sum} < product {product}")
                } else {
                    write!(f, "k={k} l={l}: sum {sum} != product {product}")
                }
            }
            Witness::PrefixViolation { k, sum, required } => {
                if sum < required {
                    write!(f, "k={k}: prefix sum {sum} < {required}")
                } else {
                    write!(f, "k={k}: prefix sum {sum} != {required}")
                }
            }
            Witness::TrimFailure {
                step,
                requested,
                available,
            } => write!(
                f,
                "step {step}: cannot trim {requested} elements, only {available} positive"
            ),
        }
    }
}

/// Outcome of a decision procedure: the verdict, the criterion that ran,
/// a witness on rejection, and the full trimming trace when the trimming
/// criterion accepts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub verdict: Verdict,
    pub criterion: Criterion,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<TrimTrace>,
}

impl CheckReport {
    pub fn accept(criterion: Criterion) -> Self {
        CheckReport {
            verdict: Verdict::Accept,
            criterion,
            witness: None,
            trace: None,
        }
    }

    pub fn accept_with_trace(criterion: Criterion, trace: TrimTrace) -> Self {
        CheckReport {
            verdict: Verdict::Accept,
            criterion,
            witness: None,
            trace: Some(trace),
        }
    }

    pub fn reject(criterion: Criterion, witness: Witness) -> Self {
        CheckReport {
            verdict: Verdict::Reject,
            criterion,
            witness: Some(witness),
            trace: None,
        }
    }

    pub fn accepted(&self) -> bool {
        self.verdict == Verdict::Accept
    }
}

/// Failure to form a feasible pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum FeasibleError {
    #[error("bound of {side} is {bound}, expected {expected}")]
    BoundMismatch {
        side: Side,
        bound: u64,
        expected: u64,
    },
    #[error("element sum {actual}, feasibility requires {expected}")]
    SumMismatch { actual: u64, expected: u64 },
}

impl From<FeasibleError> for Witness {
    fn from(err: FeasibleError) -> Self {
        match err {
            FeasibleError::BoundMismatch {
                side,
                bound,
                expected,
            } => Witness::BoundMismatch {
                side,
                bound,
                expected,
            },
            FeasibleError::SumMismatch { actual, expected } => {
                Witness::SumMismatch { actual, expected }
            }
        }
    }
}

/// Clamp a u128 total into the u64 witness fields. Quantities this large
/// cannot arise from sequences that fit in memory; the exact comparison has
/// already happened in u128.
fn sat(v: u128) -> u64 {
    u64::try_from(v).unwrap_or(u64::MAX)
}

/// An `(m, n)`-feasible pair: `a` is an `(m, n)`-sequence, `b` an
/// `(n, m)`-sequence, and the element totals add up to `m*n` (the number of
/// arcs of the complete bipartite graph being oriented).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FeasiblePair {
    a: BoundedSeq,
    b: BoundedSeq,
}

impl FeasiblePair {
    pub fn new(a: BoundedSeq, b: BoundedSeq) -> Result<Self, FeasibleError> {
        if a.bound() != b.len() as u64 {
            return Err(FeasibleError::BoundMismatch {
                side: Side::A,
                bound: a.bound(),
                expected: b.len() as u64,
            });
        }
        if b.bound() != a.len() as u64 {
            return Err(FeasibleError::BoundMismatch {
                side: Side::B,
                bound: b.bound(),
                expected: a.len() as u64,
            });
        }
        let expected = (a.len() as u128) * (b.len() as u128);
        let actual = a.sum() + b.sum();
        if actual != expected {
            return Err(FeasibleError::SumMismatch {
                actual: sat(actual),
                expected: sat(expected),
            });
        }
        Ok(FeasiblePair { a, b })
    }

    pub fn a(&self) -> &BoundedSeq {
        &self.a
    }

    pub fn b(&self) -> &BoundedSeq {
        &self.b
    }

    /// Length of `a`: the number of x-vertices.
    pub fn m(&self) -> usize {
        self.a.len()
    }

    /// Length of `b`: the number of y-vertices.
    pub fn n(&self) -> usize {
        self.b.len()
    }

    pub fn into_parts(self) -> (BoundedSeq, BoundedSeq) {
        (self.a, self.b)
    }
}

/// `prefix[k]` = sum of the first `k` elements.
fn prefix_sums(s: &IntSeq) -> Vec<u128> {
    let mut out = Vec::with_capacity(s.len() + 1);
    let mut acc = 0u128;
    out.push(acc);
    for &e in s.elems() {
        acc += e as u128;
        out.push(acc);
    }
    out
}

fn out_of_bound_witness(s: &IntSeq, bound: u64, side: Side) -> Option<Witness> {
    s.elems()
        .iter()
        .enumerate()
        .find(|(_, &e)| e > bound)
        .map(|(index, &value)| Witness::ElementOutOfBound {
            side,
            index,
            value,
            bound,
        })
}

/// Moon's characterization. Inputs are sorted nondecreasing internally, so
/// any ordering is accepted. Scores above the partner length are rejected
/// up front with an out-of-bound witness; a degenerate side (`m = 0` or
/// `n = 0`) reduces the test to the feasibility equation `total = m*n`.
///
/// On rejection the witness is the lexicographically smallest violating
/// `(k, l)`, or the equality failure at `(m, n)`.
pub fn moon_check(a: &IntSeq, b: &IntSeq) -> CheckReport {
    let m = a.len();
    let n = b.len();
    if let Some(w) = out_of_bound_witness(a, n as u64, Side::A)
        .or_else(|| out_of_bound_witness(b, m as u64, Side::B))
    {
        return CheckReport::reject(Criterion::Moon, w);
    }
    let pa = prefix_sums(&a.sorted());
    let pb = prefix_sums(&b.sorted());
    let total = pa[m] + pb[n];
    let product = (m as u128) * (n as u128);
    if m > 0 && n > 0 {
        for k in 1..=m {
            for l in 1..=n {
                let sum = pa[k] + pb[l];
                let kl = (k as u128) * (l as u128);
                if sum < kl {
                    return CheckReport::reject(
                        Criterion::Moon,
                        Witness::MoonViolation {
                            k,
                            l,
                            sum: sat(sum),
                            product: sat(kl),
                        },
                    );
                }
            }
        }
    }
    if total != product {
        return CheckReport::reject(
            Criterion::Moon,
            Witness::MoonViolation {
                k: m,
                l: n,
                sum: sat(total),
                product: sat(product),
            },
        );
    }
    CheckReport::accept(Criterion::Moon)
}

/// One row of the Moon table: prefix-sum pair against the product `k*l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MoonRow {
    pub k: usize,
    pub l: usize,
    pub sum: u64,
    pub product: u64,
}

/// The full `(k, l)` table over sorted inputs, `k`-major, as a display aid.
pub fn moon_table(a: &IntSeq, b: &IntSeq) -> Vec<MoonRow> {
    let pa = prefix_sums(&a.sorted());
    let pb = prefix_sums(&b.sorted());
    let mut rows = Vec::with_capacity(a.len() * b.len());
    for k in 1..=a.len() {
        for l in 1..=b.len() {
            rows.push(MoonRow {
                k,
                l,
                sum: sat(pa[k] + pb[l]),
                product: sat((k as u128) * (l as u128)),
            });
        }
    }
    rows
}

/// The trimming characterization: accept iff the pair is feasible and the
/// conjugate of `b` trims to zero under `a` as schedule.
///
/// No sorting is needed: success of the trimming run is invariant under
/// permutations of either side. Acceptance carries the full trace (it
/// necessarily ends in the zero sequence); rejection carries either the
/// feasibility failure or the 1-based index of the schedule entry whose
/// normal trimming did not exist.
pub fn trim_check(a: &BoundedSeq, b: &BoundedSeq) -> CheckReport {
    if let Err(err) = FeasiblePair::new(a.clone(), b.clone()) {
        return CheckReport::reject(Criterion::Trimming, err.into());
    }
    match b.conjugate().trim_by(&TrimSchedule::from(a)) {
        Ok((out, trace)) => {
            debug_assert!(out.is_zero(), "feasible pair trimmed to a nonzero tail");
            CheckReport::accept_with_trace(Criterion::Trimming, trace)
        }
        Err(fail) => CheckReport::reject(
            Criterion::Trimming,
            Witness::TrimFailure {
                step: fail.step,
                requested: fail.source.requested,
                available: fail.source.available,
            },
        ),
    }
}

/// Both directions of the trimming criterion for a feasible pair: does the
/// conjugate of `a` trim to zero under `b`, and the conjugate of `b` under
/// `a`? The two flags are always equal; both are returned so that can be
/// observed rather than assumed.
pub fn corollary_symmetry(a: &BoundedSeq, b: &BoundedSeq) -> Result<(bool, bool), FeasibleError> {
    FeasiblePair::new(a.clone(), b.clone())?;
    let a_under_b = a.conjugate().trim_by(&TrimSchedule::from(b)).is_ok();
    let b_under_a = b.conjugate().trim_by(&TrimSchedule::from(a)).is_ok();
    Ok((a_under_b, b_under_a))
}

/// One row of a Landau or Avery table: sorted prefix sum against the
/// required lower bound at `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrefixRow {
    pub k: usize,
    pub sum: u64,
    pub required: u64,
}

fn prefix_table(s: &IntSeq, required: impl Fn(u128) -> u128) -> Vec<PrefixRow> {
    let p = prefix_sums(&s.sorted());
    (1..=s.len())
        .map(|k| PrefixRow {
            k,
            sum: sat(p[k]),
            required: sat(required(k as u128)),
        })
        .collect()
}

/// The Landau table over the sorted input, as a display aid.
pub fn landau_table(s: &IntSeq) -> Vec<PrefixRow> {
    prefix_table(s, |k| k * k.saturating_sub(1) / 2)
}

/// The Avery table over the sorted input, as a display aid.
pub fn avery_table(s: &IntSeq) -> Vec<PrefixRow> {
    prefix_table(s, |k| k * k.saturating_sub(1))
}

fn prefix_check(s: &IntSeq, criterion: Criterion, required: impl Fn(u128) -> u128) -> CheckReport {
    let p = prefix_sums(&s.sorted());
    let n = s.len();
    for k in 1..=n {
        let need = required(k as u128);
        if p[k] < need {
            return CheckReport::reject(
                criterion,
                Witness::PrefixViolation {
                    k,
                    sum: sat(p[k]),
                    required: sat(need),
                },
            );
        }
    }
    let need = required(n as u128);
    if p[n] != need {
        return CheckReport::reject(
            criterion,
            Witness::PrefixViolation {
                k: n,
                sum: sat(p[n]),
                required: sat(need),
            },
        );
    }
    CheckReport::accept(criterion)
}

/// Landau's characterization of tournament score sequences: every sorted
/// prefix sum is at least `k(k-1)/2`, with equality at `k = n`.
pub fn landau_check(s: &IntSeq) -> CheckReport {
    prefix_check(s, Criterion::Landau, |k| k * k.saturating_sub(1) / 2)
}

/// Avery's characterization of digraph score sequences (score of a vertex is
/// `n-1 + outdegree - indegree`): every sorted prefix sum is at least
/// `k(k-1)`, with equality at `k = n`.
pub fn avery_check(s: &IntSeq) -> CheckReport {
    prefix_check(s, Criterion::Avery, |k| k * k.saturating_sub(1))
}
