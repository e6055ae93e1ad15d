//! Bounded integer sequences and the trimming calculus on them.
//!
//! An `(m, n)`-sequence is a sequence of `m` nonnegative integers, each at
//! most `n`. [`BoundedSeq`] keeps the bound attached so the conjugate
//! (elementwise complement against the bound) is well defined.
//!
//! A *c-trimming* subtracts 1 from `c` strictly positive elements; the
//! *normal* c-trimming subtracts from the `c` largest positive elements and
//! is the variant the decision procedures rely on. Trimming by a whole
//! schedule applies one normal trimming per schedule entry, in order, and
//! fails as soon as a step asks for more positive elements than remain.

use serde::Serialize;
use std::fmt;

/// A plain sequence of nonnegative integers, no bound attached.
///
/// Used for raw score sequences (tournament and digraph checks) and for the
/// scores read back off an explicit bitournament.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct IntSeq(Vec<u64>);

impl IntSeq {
    pub fn new(elems: Vec<u64>) -> Self {
        IntSeq(elems)
    }

    pub fn elems(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u128 {
        self.0.iter().map(|&e| e as u128).sum()
    }

    /// Copy with elements rearranged nondecreasing.
    pub fn sorted(&self) -> IntSeq {
        let mut v = self.0.clone();
        v.sort_unstable();
        IntSeq(v)
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }
}

impl From<Vec<u64>> for IntSeq {
    fn from(elems: Vec<u64>) -> Self {
        IntSeq(elems)
    }
}

impl From<&[u64]> for IntSeq {
    fn from(elems: &[u64]) -> Self {
        IntSeq(elems.to_vec())
    }
}

impl fmt::Display for IntSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join_elems(&self.0))
    }
}

pub(crate) fn join_elems(elems: &[u64]) -> String {
    elems
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Validation failures when building or position-trimming a [`BoundedSeq`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum SeqError {
    #[error("element {value} at index {index} exceeds the bound {bound}")]
    ElementExceedsBound {
        index: usize,
        value: u64,
        bound: u64,
    },
    #[error("position {index} is out of range for a sequence of length {len}")]
    PositionOutOfRange { index: usize, len: usize },
    #[error("position {index} selected more than once")]
    DuplicatePosition { index: usize },
    #[error("position {index} holds 0 and cannot be trimmed")]
    PositionNotPositive { index: usize },
}

/// A c-trimming was requested with `c` above the number of positive
/// elements. This is the failure that makes a whole trimming schedule
/// inapplicable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("cannot trim {requested} elements, only {available} are positive")]
pub struct NotEnoughPositives {
    pub requested: u64,
    pub available: usize,
}

/// An `(m, n)`-sequence: `m` elements, each between 0 and `bound` inclusive.
///
/// Values are immutable after construction; every operation returns a new
/// sequence. The empty sequence is valid for any bound.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BoundedSeq {
    elems: Vec<u64>,
    bound: u64,
}

impl BoundedSeq {
    pub fn new(elems: Vec<u64>, bound: u64) -> Result<Self, SeqError> {
        if let Some((index, &value)) = elems.iter().enumerate().find(|(_, &e)| e > bound) {
            return Err(SeqError::ElementExceedsBound {
                index,
                value,
                bound,
            });
        }
        Ok(BoundedSeq { elems, bound })
    }

    pub fn zeros(len: usize, bound: u64) -> Self {
        BoundedSeq {
            elems: vec![0; len],
            bound,
        }
    }

    pub fn elems(&self) -> &[u64] {
        &self.elems
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn get(&self, index: usize) -> u64 {
        self.elems[index]
    }

    pub fn sum(&self) -> u128 {
        self.elems.iter().map(|&e| e as u128).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.elems.iter().all(|&e| e == 0)
    }

    /// Number of strictly positive elements; the ceiling for any c-trimming.
    pub fn positive_count(&self) -> usize {
        self.elems.iter().filter(|&&e| e > 0).count()
    }

    pub fn to_int_seq(&self) -> IntSeq {
        IntSeq(self.elems.clone())
    }

    /// Copy with elements rearranged nondecreasing, same bound.
    pub fn sorted(&self) -> BoundedSeq {
        let mut elems = self.elems.clone();
        elems.sort_unstable();
        BoundedSeq {
            elems,
            bound: self.bound,
        }
    }

    /// Elementwise complement against the bound: element `e` becomes
    /// `bound - e`. Same length, same bound; an involution.
    pub fn conjugate(&self) -> BoundedSeq {
        BoundedSeq {
            elems: self.elems.iter().map(|&e| self.bound - e).collect(),
            bound: self.bound,
        }
    }

    /// The positions a normal c-trimming targets: the `c` largest positive
    /// elements, ties broken toward the smallest index. Returned in
    /// ascending index order.
    ///
    /// The fixed tie-break makes every trace and realization deterministic;
    /// the resulting multiset of values is the same for any tie-break.
    pub fn largest_positive_positions(&self, c: u64) -> Result<Vec<usize>, NotEnoughPositives> {
        let mut positions: Vec<usize> = (0..self.elems.len())
            .filter(|&i| self.elems[i] > 0)
            .collect();
        if (positions.len() as u64) < c {
            return Err(NotEnoughPositives {
                requested: c,
                available: positions.len(),
            });
        }
        positions.sort_by(|&i, &j| self.elems[j].cmp(&self.elems[i]).then(i.cmp(&j)));
        positions.truncate(c as usize);
        positions.sort_unstable();
        Ok(positions)
    }

    /// General c-trimming: subtract 1 at each of the given positions, which
    /// must be distinct, in range and strictly positive.
    pub fn trim_at(&self, positions: &[usize]) -> Result<BoundedSeq, SeqError> {
        let mut seen = vec![false; self.elems.len()];
        for &i in positions {
            if i >= self.elems.len() {
                return Err(SeqError::PositionOutOfRange {
                    index: i,
                    len: self.elems.len(),
                });
            }
            if seen[i] {
                return Err(SeqError::DuplicatePosition { index: i });
            }
            seen[i] = true;
            if self.elems[i] == 0 {
                return Err(SeqError::PositionNotPositive { index: i });
            }
        }
        let mut elems = self.elems.clone();
        for &i in positions {
            elems[i] -= 1;
        }
        Ok(BoundedSeq {
            elems,
            bound: self.bound,
        })
    }

    /// Normal c-trimming: subtract 1 from the `c` largest positive elements
    /// (smallest index first among ties). A 0-trimming is the identity.
    pub fn normal_trim(&self, c: u64) -> Result<BoundedSeq, NotEnoughPositives> {
        let positions = self.largest_positive_positions(c)?;
        let mut elems = self.elems.clone();
        for &i in &positions {
            elems[i] -= 1;
        }
        Ok(BoundedSeq {
            elems,
            bound: self.bound,
        })
    }

    /// Apply one normal trimming per schedule entry, in order, recording
    /// every intermediate sequence. Fails with the 1-based step index of the
    /// first entry that asks for more positive elements than remain.
    pub fn trim_by(&self, schedule: &TrimSchedule) -> Result<(BoundedSeq, TrimTrace), TrimFailed> {
        let mut current = self.clone();
        let mut steps = Vec::with_capacity(schedule.len());
        for (idx, &amount) in schedule.amounts().iter().enumerate() {
            match current.normal_trim(amount) {
                Ok(next) => {
                    steps.push(TrimStep {
                        amount,
                        result: next.clone(),
                    });
                    current = next;
                }
                Err(source) => {
                    return Err(TrimFailed {
                        step: idx + 1,
                        source,
                        partial: TrimTrace {
                            start: self.clone(),
                            steps,
                        },
                    });
                }
            }
        }
        Ok((
            current,
            TrimTrace {
                start: self.clone(),
                steps,
            },
        ))
    }

    /// `c` concatenated copies of this sequence with every element scaled by
    /// `c`; the bound scales by `c` as well. The element sum scales by `c²`.
    pub fn replicate_scale(&self, c: u64) -> BoundedSeq {
        let bound = self
            .bound
            .checked_mul(c)
            .expect("replicated bound overflows u64");
        let scaled: Vec<u64> = self
            .elems
            .iter()
            .map(|&e| e.checked_mul(c).expect("replicated element overflows u64"))
            .collect();
        let mut elems = Vec::with_capacity(self.elems.len() * c as usize);
        for _ in 0..c {
            elems.extend_from_slice(&scaled);
        }
        BoundedSeq { elems, bound }
    }
}

impl fmt::Display for BoundedSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join_elems(&self.elems))
    }
}

/// The amounts `c_1, ..., c_k` of a trimming schedule.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct TrimSchedule(Vec<u64>);

impl TrimSchedule {
    pub fn new(amounts: Vec<u64>) -> Self {
        TrimSchedule(amounts)
    }

    pub fn amounts(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<u64>> for TrimSchedule {
    fn from(amounts: Vec<u64>) -> Self {
        TrimSchedule(amounts)
    }
}

impl From<&BoundedSeq> for TrimSchedule {
    fn from(seq: &BoundedSeq) -> Self {
        TrimSchedule(seq.elems().to_vec())
    }
}

impl fmt::Display for TrimSchedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join_elems(&self.0))
    }
}

/// One applied trimming step: the amount and the sequence it produced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrimStep {
    pub amount: u64,
    pub result: BoundedSeq,
}

/// Full record of a trimming schedule run: the starting sequence and every
/// intermediate result. Positions that reach 0 are retained, so the element
/// count is invariant across the whole trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrimTrace {
    pub start: BoundedSeq,
    pub steps: Vec<TrimStep>,
}

impl TrimTrace {
    /// The last sequence of the trace (the start, if no step was applied).
    pub fn final_seq(&self) -> &BoundedSeq {
        self.steps.last().map_or(&self.start, |s| &s.result)
    }

    /// Start sequence followed by the result of each step.
    pub fn rows(&self) -> impl Iterator<Item = &BoundedSeq> {
        std::iter::once(&self.start).chain(self.steps.iter().map(|s| &s.result))
    }

    /// The amounts applied so far.
    pub fn amounts(&self) -> Vec<u64> {
        self.steps.iter().map(|s| s.amount).collect()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// A trimming schedule stopped at `step` (1-based) because the sequence had
/// too few positive elements left. Carries the partial trace up to the
/// failing step.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("schedule step {step} failed: {source}")]
pub struct TrimFailed {
    pub step: usize,
    pub source: NotEnoughPositives,
    pub partial: TrimTrace,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bseq(elems: &[u64], bound: u64) -> BoundedSeq {
        BoundedSeq::new(elems.to_vec(), bound).unwrap()
    }

    #[test]
    fn rejects_element_above_bound() {
        let err = BoundedSeq::new(vec![0, 5], 4).unwrap_err();
        assert_eq!(
            err,
            SeqError::ElementExceedsBound {
                index: 1,
                value: 5,
                bound: 4
            }
        );
    }

    #[test]
    fn conjugate_golden() {
        assert_eq!(
            bseq(&[1, 2, 2, 2, 3], 4).conjugate(),
            bseq(&[3, 2, 2, 2, 1], 4)
        );
        assert_eq!(
            bseq(&[1, 2, 3, 5, 6], 6).conjugate(),
            bseq(&[5, 4, 3, 1, 0], 6)
        );
        // zero bound is a fixed point
        assert_eq!(bseq(&[0, 0, 0], 0).conjugate(), bseq(&[0, 0, 0], 0));
    }

    #[test]
    fn conjugate_is_involution_and_sum_complement() {
        let s = bseq(&[0, 2, 1, 5, 3, 2], 6);
        assert_eq!(s.conjugate().conjugate(), s);
        assert_eq!(s.conjugate().sum(), 6 * 6 - s.sum());
    }

    #[test]
    fn general_trim_golden() {
        let a = bseq(&[0, 2, 1, 5, 3, 2], 6);
        assert_eq!(a.trim_at(&[1, 2, 3]).unwrap(), bseq(&[0, 1, 0, 4, 3, 2], 6));
        // 0-trimming is the identity
        assert_eq!(a.trim_at(&[]).unwrap(), a);
        assert_eq!(bseq(&[1, 1], 1).trim_at(&[0, 1]).unwrap(), bseq(&[0, 0], 1));
    }

    #[test]
    fn general_trim_rejects_bad_positions() {
        let a = bseq(&[0, 2], 2);
        assert_eq!(
            a.trim_at(&[0]).unwrap_err(),
            SeqError::PositionNotPositive { index: 0 }
        );
        assert_eq!(
            a.trim_at(&[5]).unwrap_err(),
            SeqError::PositionOutOfRange { index: 5, len: 2 }
        );
        assert_eq!(
            a.trim_at(&[1, 1]).unwrap_err(),
            SeqError::DuplicatePosition { index: 1 }
        );
    }

    #[test]
    fn normal_trim_golden() {
        let a = bseq(&[0, 2, 1, 5, 3, 2], 6);
        let t3 = a.normal_trim(3).unwrap();
        assert_eq!(t3, bseq(&[0, 1, 1, 4, 2, 2], 6));
        assert_eq!(t3.normal_trim(5).unwrap(), bseq(&[0, 0, 0, 3, 1, 1], 6));
    }

    #[test]
    fn normal_trim_needs_enough_positives() {
        let err = bseq(&[5, 4, 3, 1, 0], 6).normal_trim(6).unwrap_err();
        assert_eq!(
            err,
            NotEnoughPositives {
                requested: 6,
                available: 4
            }
        );
    }

    #[test]
    fn normal_trim_tie_break_prefers_smallest_index() {
        // two equal largest values: the earlier one is trimmed
        let a = bseq(&[4, 4, 3, 1, 0], 6);
        assert_eq!(a.normal_trim(1).unwrap(), bseq(&[3, 4, 3, 1, 0], 6));
        assert_eq!(a.largest_positive_positions(3).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn positive_count_golden() {
        assert_eq!(bseq(&[0, 2, 1, 5, 3, 2], 6).positive_count(), 5);
        assert_eq!(bseq(&[0, 0, 0], 3).positive_count(), 0);
        assert_eq!(bseq(&[5, 4, 3, 1, 0], 6).positive_count(), 4);
    }

    #[test]
    fn trim_by_reaches_zero_on_matching_schedule() {
        // sum 10 trimmed by amounts summing to 10
        let (out, trace) = bseq(&[3, 2, 2, 2, 1], 4)
            .trim_by(&TrimSchedule::new(vec![5, 3, 2]))
            .unwrap();
        assert!(out.is_zero());
        assert_eq!(out.len(), 5);
        // multisets along the way match the hand derivation
        let sorted: Vec<Vec<u64>> = trace.rows().map(|r| r.sorted().elems().to_vec()).collect();
        assert_eq!(
            sorted,
            vec![
                vec![1, 2, 2, 2, 3],
                vec![0, 1, 1, 1, 2],
                vec![0, 0, 0, 1, 1],
                vec![0, 0, 0, 0, 0],
            ]
        );
    }

    #[test]
    fn trim_by_handles_zero_amounts() {
        let (out, trace) = bseq(&[3, 2, 2, 2, 1], 4)
            .trim_by(&TrimSchedule::new(vec![2, 0, 3, 5]))
            .unwrap();
        assert!(out.is_zero());
        // the 0-step leaves the sequence untouched
        assert_eq!(trace.steps[1].result, trace.steps[0].result);
        assert_eq!(trace.steps[0].result, bseq(&[2, 1, 2, 2, 1], 4));
        assert_eq!(trace.steps[2].result, bseq(&[1, 1, 1, 1, 1], 4));
    }

    #[test]
    fn trim_by_reports_failing_step() {
        let err = bseq(&[1], 1)
            .trim_by(&TrimSchedule::new(vec![2]))
            .unwrap_err();
        assert_eq!(err.step, 1);
        assert_eq!(
            err.source,
            NotEnoughPositives {
                requested: 2,
                available: 1
            }
        );

        let err = bseq(&[2, 1], 2)
            .trim_by(&TrimSchedule::new(vec![1, 3, 1]))
            .unwrap_err();
        assert_eq!(err.step, 2);
        assert_eq!(err.partial.len(), 1);
        assert_eq!(err.partial.final_seq(), &bseq(&[1, 1], 2));
    }

    #[test]
    fn trace_sums_drop_by_the_applied_amount() {
        let (_, trace) = bseq(&[5, 4, 3, 1, 0], 6)
            .trim_by(&TrimSchedule::new(vec![1, 1, 2, 2, 3, 4]))
            .unwrap();
        let rows: Vec<&BoundedSeq> = trace.rows().collect();
        for (i, step) in trace.steps.iter().enumerate() {
            assert_eq!(rows[i].sum() - rows[i + 1].sum(), step.amount as u128);
        }
        assert_eq!(trace.final_seq(), rows[rows.len() - 1]);
    }

    #[test]
    fn replicate_scale_golden() {
        let s = bseq(&[1, 0], 1);
        let r = s.replicate_scale(2);
        assert_eq!(r, bseq(&[2, 0, 2, 0], 2));
        assert_eq!(r.sum(), 4 * s.sum());

        assert_eq!(s.replicate_scale(1), s);
        assert_eq!(bseq(&[1], 1).replicate_scale(3), bseq(&[3, 3, 3], 3));
    }

    #[test]
    fn empty_sequence_is_total() {
        let e = BoundedSeq::new(vec![], 7).unwrap();
        assert!(e.is_zero());
        assert_eq!(e.conjugate(), e);
        assert_eq!(e.positive_count(), 0);
        let (out, trace) = e.trim_by(&TrimSchedule::new(vec![0, 0])).unwrap();
        assert_eq!(out, e);
        assert_eq!(trace.len(), 2);
    }

    #[test]
    fn display_is_comma_joined() {
        assert_eq!(bseq(&[0, 2, 1], 2).to_string(), "0,2,1");
        assert_eq!(IntSeq::new(vec![]).to_string(), "");
        assert_eq!(TrimSchedule::new(vec![3, 5]).to_string(), "3,5");
    }
}
