//! Explicit bitournaments and the greedy construction that realizes an
//! accepted score pair.
//!
//! A bitournament is a total orientation of the complete bipartite graph
//! `K_{m,n}`: every `(x_i, y_j)` pair carries exactly one arc. It is stored
//! as a dense m-by-n boolean matrix, entry `(i, j)` true meaning the arc
//! runs `x_i -> y_j`.
//!
//! [`realize`] walks the x-vertices in input order. For x-vertex `i` it
//! sends arcs to the `a_i` y-vertices whose remaining indegree capacity
//! (the conjugate of `B`, progressively trimmed) is largest, using the same
//! smallest-index tie-break as normal trimming. Every remaining pair gets
//! the arc `y_j -> x_i`, which makes the y-scores come out to `b_j` exactly.

use crate::check::{CheckReport, Criterion, FeasiblePair, Witness};
use crate::seq::{BoundedSeq, IntSeq};
use serde::Serialize;

/// Hard cap on dense matrices so memory stays predictable.
pub const MAX_ARCS: usize = 1_000_000;

/// An orientation of `K_{m,n}`. Entry `(i, j)` true means `x_i -> y_j`,
/// false means `y_j -> x_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bitournament {
    m: usize,
    n: usize,
    arcs: Vec<bool>,
}

impl Bitournament {
    /// All-false orientation (every arc from the y-side).
    pub fn new(m: usize, n: usize) -> Result<Self, RealizeError> {
        let cells = m.checked_mul(n).filter(|&c| c <= MAX_ARCS);
        match cells {
            Some(c) => Ok(Bitournament {
                m,
                n,
                arcs: vec![false; c],
            }),
            None => Err(RealizeError::TooLarge { m, n }),
        }
    }

    /// Decode an orientation from a bitmask: bit `i*n + j` set means
    /// `x_i -> y_j`. Panics if the matrix does not fit in 64 bits; this is
    /// the encoding the enumeration oracle iterates over.
    pub fn from_code(m: usize, n: usize, code: u64) -> Self {
        assert!(m * n <= 64, "orientation code holds at most 64 arcs");
        let arcs = (0..m * n).map(|p| code >> p & 1 == 1).collect();
        Bitournament { m, n, arcs }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc(&self, i: usize, j: usize) -> bool {
        self.arcs[i * self.n + j]
    }

    pub fn set_arc(&mut self, i: usize, j: usize, from_x: bool) {
        self.arcs[i * self.n + j] = from_x;
    }

    /// Scores in index order: x-score `i` is the true count of row `i`,
    /// y-score `j` is `m` minus the true count of column `j`.
    pub fn scores(&self) -> (IntSeq, IntSeq) {
        let mut xs = vec![0u64; self.m];
        let mut ys = vec![self.m as u64; self.n];
        for i in 0..self.m {
            for j in 0..self.n {
                if self.arc(i, j) {
                    xs[i] += 1;
                    ys[j] -= 1;
                }
            }
        }
        (IntSeq::new(xs), IntSeq::new(ys))
    }

    /// Row-major 0/1 rendering, one line per x-vertex.
    pub fn matrix_rows(&self) -> Vec<String> {
        (0..self.m)
            .map(|i| {
                (0..self.n)
                    .map(|j| if self.arc(i, j) { '1' } else { '0' })
                    .collect()
            })
            .collect()
    }

    /// DOT rendering with default vertex names `x1..xm`, `y1..yn`.
    pub fn to_dot(&self) -> String {
        self.to_dot_labeled(None)
    }

    /// DOT rendering. Output is line-stable: the vertex declarations, then
    /// every `x -> y` arc in row-major order, then every `y -> x` arc in
    /// row-major order. Custom labels are quoted; their counts must match
    /// the two sides.
    pub fn to_dot_labeled(&self, labels: Option<(&[String], &[String])>) -> String {
        let (x_names, y_names): (Vec<String>, Vec<String>) = match labels {
            Some((xs, ys)) => {
                assert_eq!(xs.len(), self.m, "x label count must equal m");
                assert_eq!(ys.len(), self.n, "y label count must equal n");
                (
                    xs.iter().map(|l| format!("\"{l}\"")).collect(),
                    ys.iter().map(|l| format!("\"{l}\"")).collect(),
                )
            }
            None => (
                (1..=self.m).map(|i| format!("x{i}")).collect(),
                (1..=self.n).map(|j| format!("y{j}")).collect(),
            ),
        };
        let mut out = String::from("digraph bitournament {\n");
        for name in x_names.iter().chain(y_names.iter()) {
            out.push_str(&format!("  {name};\n"));
        }
        for i in 0..self.m {
            for j in 0..self.n {
                if self.arc(i, j) {
                    out.push_str(&format!("  {} -> {};\n", x_names[i], y_names[j]));
                }
            }
        }
        for i in 0..self.m {
            for j in 0..self.n {
                if !self.arc(i, j) {
                    out.push_str(&format!("  {} -> {};\n", y_names[j], x_names[i]));
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

/// One construction step: x-vertex `x` (0-based) sent arcs to the y-indices
/// in `chosen`, leaving the remaining-indegree sequence `after`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizeStep {
    pub x: usize,
    pub chosen: Vec<usize>,
    pub after: BoundedSeq,
}

/// Step-by-step record of a realization, mirroring the trimming trace the
/// construction follows.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RealizationLog {
    pub steps: Vec<RealizeStep>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RealizeError {
    #[error("pair is not the score sequence of any bitournament")]
    NotRealizable(Box<CheckReport>),
    #[error("{m}x{n} arcs exceed the dense-matrix limit of {MAX_ARCS}")]
    TooLarge { m: usize, n: usize },
}

/// Build a bitournament whose x-scores equal `pair.a` and y-scores equal
/// `pair.b`, both in input index order. Deterministic: the greedy choice at
/// each step uses the normal-trimming tie-break.
///
/// Fails with the same step witness `trim_check` would report when the pair
/// is feasible but not realizable.
pub fn realize(pair: &FeasiblePair) -> Result<(Bitournament, RealizationLog), RealizeError> {
    let m = pair.m();
    let n = pair.n();
    let mut t = Bitournament::new(m, n)?;
    let mut remaining = pair.b().conjugate();
    let mut steps = Vec::with_capacity(m);
    for i in 0..m {
        let wanted = pair.a().get(i);
        let chosen = remaining.largest_positive_positions(wanted).map_err(|e| {
            RealizeError::NotRealizable(Box::new(CheckReport::reject(
                Criterion::Trimming,
                Witness::TrimFailure {
                    step: i + 1,
                    requested: e.requested,
                    available: e.available,
                },
            )))
        })?;
        for &j in &chosen {
            t.set_arc(i, j, true);
        }
        remaining = remaining
            .trim_at(&chosen)
            .expect("chosen positions are positive by selection");
        steps.push(RealizeStep {
            x: i,
            chosen,
            after: remaining.clone(),
        });
    }
    debug_assert!(remaining.is_zero(), "feasible sums force a zero remainder");
    Ok((t, RealizationLog { steps }))
}

/// Feasibility-check then realize, mirroring `trim_check` end to end: fails
/// exactly on the pairs `trim_check` rejects, with the same witness.
pub fn realize_pair(
    a: &BoundedSeq,
    b: &BoundedSeq,
) -> Result<(Bitournament, RealizationLog), RealizeError> {
    let pair = FeasiblePair::new(a.clone(), b.clone()).map_err(|err| {
        RealizeError::NotRealizable(Box::new(CheckReport::reject(
            Criterion::Trimming,
            err.into(),
        )))
    })?;
    realize(&pair)
}
