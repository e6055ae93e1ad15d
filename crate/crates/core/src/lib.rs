//! Score sequences of bitournaments.
//!
//! A *bitournament* is an orientation of a complete bipartite graph
//! `K_{m,n}`; the *score* of a vertex is its outdegree. This crate decides
//! whether a pair of integer sequences is the score sequence pair of some
//! bitournament, builds an explicit realization when it is, and
//! cross-validates the decision procedures against exhaustive enumeration.
//!
//! Two equivalent characterizations are implemented side by side:
//!
//! * Moon's inequalities over prefix sums ([`check::moon_check`]), and
//! * a trimming test ([`check::trim_check`]): the pair must be feasible
//!   (bounds cross-match, element totals equal `m*n`) and the conjugate of
//!   `B` must trim to the zero sequence under `A` as a schedule.
//!
//! Landau's tournament test and Avery's digraph test are included for the
//! neighboring score-sequence families, and the [`oracle`] module provides
//! the brute-force ground truth all of them are checked against.
//!
//! ```
//! use bitourn::seq::BoundedSeq;
//! use bitourn::check::trim_check;
//! use bitourn::realize::realize_pair;
//!
//! let a = BoundedSeq::new(vec![1, 1, 2, 2, 3, 4], 5).unwrap();
//! let b = BoundedSeq::new(vec![1, 2, 3, 5, 6], 6).unwrap();
//! assert!(trim_check(&a, &b).accepted());
//!
//! let (bitournament, _log) = realize_pair(&a, &b).unwrap();
//! let (x_scores, y_scores) = bitournament.scores();
//! assert_eq!(x_scores.elems(), a.elems());
//! assert_eq!(y_scores.elems(), b.elems());
//! ```
//!
//! With the default `parallel` feature the enumeration oracles fan out over
//! rayon; building with `--no-default-features` keeps everything
//! single-threaded with identical results.

// Index loops here are coordinate math (prefix index k, matrix cell (i, j));
// iterator rewrites would hide the quantities the formulas are stated in.
#![allow(clippy::needless_range_loop)]

pub mod check;
pub mod oracle;
pub mod realize;
pub mod seq;

pub use check::{
    avery_check, avery_table, corollary_symmetry, landau_check, landau_table, moon_check,
    moon_table, trim_check, CheckReport, Criterion, FeasibleError, FeasiblePair, MoonRow,
    PrefixRow, Side, Verdict, Witness,
};
pub use realize::{realize, realize_pair, Bitournament, RealizationLog, RealizeError};
pub use seq::{
    BoundedSeq, IntSeq, NotEnoughPositives, SeqError, TrimFailed, TrimSchedule, TrimTrace,
};
