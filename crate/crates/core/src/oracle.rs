//! Exhaustive ground truth for every characterization in the crate.
//!
//! The engines here enumerate orientations directly: all `2^(m*n)`
//! orientations of `K_{m,n}`, all `2^(n(n-1)/2)` tournaments on `n`
//! vertices, all `2^(n(n-1))` digraphs, tabulating the score sequences
//! that actually occur. The decision procedures are then validated
//! extensionally against these censuses.
//!
//! Orientations are encoded as bitmasks (bit `i*n + j` set means the arc
//! `x_i -> y_j`), so the code space is a plain integer range. Disjoint
//! sub-ranges are independent and merge by summing counts, which makes the
//! sweep data-parallel with a deterministic result. With the `parallel`
//! feature (on by default) the public entry points fan out over rayon; the
//! `*_seq` variants always run on the calling thread.

use crate::check::{moon_check, trim_check};
use crate::seq::{BoundedSeq, IntSeq};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Largest bitournament code space: 2^24 orientations.
pub const MAX_ORIENTATION_BITS: u32 = 24;
/// Largest digraph arc-set space: 2^20 subsets.
pub const MAX_ARC_BITS: u32 = 20;

/// Minimum code range per rayon split; below this the fan-out costs more
/// than the work.
#[cfg(feature = "parallel")]
const MIN_SPLIT: usize = 1 << 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("{bits} orientation bits exceed the enumeration budget of {max}")]
    BudgetExceeded { bits: u32, max: u32 },
    #[error("oracle, Moon and trimming disagree on {} candidate pair(s)", .0.len())]
    Discrepancy(Vec<Discrepancy>),
}

/// A candidate pair on which the three routes disagreed, or a realizable
/// pair the candidate generator failed to produce (`in_universe` false).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub a: Vec<u64>,
    pub b: Vec<u64>,
    pub oracle: bool,
    pub moon: bool,
    pub trimming: bool,
    pub in_universe: bool,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "a=[{}] b=[{}] oracle={} moon={} trimming={}{}",
            crate::seq::join_elems(&self.a),
            crate::seq::join_elems(&self.b),
            self.oracle,
            self.moon,
            self.trimming,
            if self.in_universe {
                ""
            } else {
                " (missing from candidate universe)"
            }
        )
    }
}

/// One distinct sorted score pair and how many orientations achieve it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusEntry {
    pub x_scores: IntSeq,
    pub y_scores: IntSeq,
    pub count: u64,
}

type PairKey = (Vec<u64>, Vec<u64>);
type CensusMap = BTreeMap<PairKey, u64>;

fn budget(bits: u32, max: u32) -> Result<(), OracleError> {
    if bits > max {
        Err(OracleError::BudgetExceeded { bits, max })
    } else {
        Ok(())
    }
}

/// Sorted (x, y) score pair of the orientation `code` of `K_{m,n}`.
fn scores_of_code(m: usize, n: usize, code: u64) -> PairKey {
    let row_mask = (1u64 << n) - 1;
    let mut xs: Vec<u64> = (0..m)
        .map(|i| (code >> (i * n) & row_mask).count_ones() as u64)
        .collect();
    let mut ys: Vec<u64> = (0..n)
        .map(|j| {
            let into_y = (0..m).filter(|&i| code >> (i * n + j) & 1 == 1).count();
            (m - into_y) as u64
        })
        .collect();
    xs.sort_unstable();
    ys.sort_unstable();
    (xs, ys)
}

fn census_fold(m: usize, n: usize, codes: std::ops::Range<u64>) -> CensusMap {
    let mut map = CensusMap::new();
    for code in codes {
        *map.entry(scores_of_code(m, n, code)).or_insert(0) += 1;
    }
    map
}

#[cfg(feature = "parallel")]
fn merge_census(mut left: CensusMap, right: CensusMap) -> CensusMap {
    for (key, count) in right {
        *left.entry(key).or_insert(0) += count;
    }
    left
}

fn census_entries(map: CensusMap) -> Vec<CensusEntry> {
    map.into_iter()
        .map(|((xs, ys), count)| CensusEntry {
            x_scores: IntSeq::new(xs),
            y_scores: IntSeq::new(ys),
            count,
        })
        .collect()
}

/// Sweep all `2^(m*n)` orientations of `K_{m,n}` and aggregate the sorted
/// score pairs. Entries come out in lexicographic key order; the counts sum
/// to `2^(m*n)`.
pub fn enumerate_bitournaments(m: usize, n: usize) -> Result<Vec<CensusEntry>, OracleError> {
    let bits = (m * n) as u32;
    budget(bits, MAX_ORIENTATION_BITS)?;
    #[cfg(feature = "parallel")]
    {
        let map = (0..1usize << bits)
            .into_par_iter()
            .with_min_len(MIN_SPLIT)
            .fold(CensusMap::new, |mut map, code| {
                *map.entry(scores_of_code(m, n, code as u64)).or_insert(0) += 1;
                map
            })
            .reduce(CensusMap::new, merge_census);
        Ok(census_entries(map))
    }
    #[cfg(not(feature = "parallel"))]
    {
        enumerate_bitournaments_seq(m, n)
    }
}

/// Single-threaded variant of [`enumerate_bitournaments`].
pub fn enumerate_bitournaments_seq(m: usize, n: usize) -> Result<Vec<CensusEntry>, OracleError> {
    let bits = (m * n) as u32;
    budget(bits, MAX_ORIENTATION_BITS)?;
    Ok(census_entries(census_fold(m, n, 0..1u64 << bits)))
}

fn tournament_edges(n: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    edges
}

fn tournament_scores(n: usize, edges: &[(usize, usize)], code: u64) -> Vec<u64> {
    let mut scores = vec![0u64; n];
    for (e, &(i, j)) in edges.iter().enumerate() {
        if code >> e & 1 == 1 {
            scores[i] += 1;
        } else {
            scores[j] += 1;
        }
    }
    scores.sort_unstable();
    scores
}

fn set_fold<F>(codes: std::ops::Range<u64>, score_fn: F) -> BTreeSet<Vec<u64>>
where
    F: Fn(u64) -> Option<Vec<u64>>,
{
    let mut set = BTreeSet::new();
    for code in codes {
        if let Some(s) = score_fn(code) {
            set.insert(s);
        }
    }
    set
}

#[cfg(feature = "parallel")]
fn set_sweep<F>(total: u64, score_fn: F) -> BTreeSet<Vec<u64>>
where
    F: Fn(u64) -> Option<Vec<u64>> + Sync,
{
    (0..total as usize)
        .into_par_iter()
        .with_min_len(MIN_SPLIT)
        .fold(BTreeSet::new, |mut set, code| {
            if let Some(s) = score_fn(code as u64) {
                set.insert(s);
            }
            set
        })
        .reduce(BTreeSet::new, |mut left, right| {
            left.extend(right);
            left
        })
}

#[cfg(not(feature = "parallel"))]
fn set_sweep<F>(total: u64, score_fn: F) -> BTreeSet<Vec<u64>>
where
    F: Fn(u64) -> Option<Vec<u64>> + Sync,
{
    set_fold(0..total, score_fn)
}

fn into_seqs(set: BTreeSet<Vec<u64>>) -> Vec<IntSeq> {
    set.into_iter().map(IntSeq::new).collect()
}

/// Distinct sorted score sequences over all orientations of the complete
/// graph `K_n`.
pub fn enumerate_tournaments(n: usize) -> Result<Vec<IntSeq>, OracleError> {
    let bits = (n * n.saturating_sub(1) / 2) as u32;
    budget(bits, MAX_ORIENTATION_BITS)?;
    let edges = tournament_edges(n);
    Ok(into_seqs(set_sweep(1u64 << bits, |code| {
        Some(tournament_scores(n, &edges, code))
    })))
}

/// Single-threaded variant of [`enumerate_tournaments`].
pub fn enumerate_tournaments_seq(n: usize) -> Result<Vec<IntSeq>, OracleError> {
    let bits = (n * n.saturating_sub(1) / 2) as u32;
    budget(bits, MAX_ORIENTATION_BITS)?;
    let edges = tournament_edges(n);
    Ok(into_seqs(set_fold(0..1u64 << bits, |code| {
        Some(tournament_scores(n, &edges, code))
    })))
}

fn ordered_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1));
    for i in 0..n {
        for j in 0..n {
            if i != j {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

/// Sorted sequence of `n-1 + outdegree - indegree` per vertex for the arc
/// subset `code`. Never negative: indegree is at most `n-1`.
fn digraph_scores(n: usize, pairs: &[(usize, usize)], code: u64) -> Vec<u64> {
    let mut out_deg = vec![0i64; n];
    let mut in_deg = vec![0i64; n];
    for (p, &(i, j)) in pairs.iter().enumerate() {
        if code >> p & 1 == 1 {
            out_deg[i] += 1;
            in_deg[j] += 1;
        }
    }
    let mut scores: Vec<u64> = (0..n)
        .map(|v| (n as i64 - 1 + out_deg[v] - in_deg[v]) as u64)
        .collect();
    scores.sort_unstable();
    scores
}

/// Distinct sorted score sequences over all digraphs on `n` vertices, where
/// each ordered pair independently carries an arc or not (both directions
/// may coexist).
pub fn enumerate_digraphs(n: usize) -> Result<Vec<IntSeq>, OracleError> {
    let bits = (n * n.saturating_sub(1)) as u32;
    budget(bits, MAX_ARC_BITS)?;
    let pairs = ordered_pairs(n);
    Ok(into_seqs(set_sweep(1u64 << bits, |code| {
        Some(digraph_scores(n, &pairs, code))
    })))
}

/// Single-threaded variant of [`enumerate_digraphs`].
pub fn enumerate_digraphs_seq(n: usize) -> Result<Vec<IntSeq>, OracleError> {
    let bits = (n * n.saturating_sub(1)) as u32;
    budget(bits, MAX_ARC_BITS)?;
    let pairs = ordered_pairs(n);
    Ok(into_seqs(set_fold(0..1u64 << bits, |code| {
        Some(digraph_scores(n, &pairs, code))
    })))
}

/// Like [`enumerate_digraphs`] but restricted to oriented graphs: at most
/// one arc per unordered pair. A two-cycle adds and removes one from the
/// same vertex score, so this is expected to produce the same set; it is
/// enumerated separately so the expectation can be tested, not assumed.
pub fn enumerate_oriented_graphs(n: usize) -> Result<Vec<IntSeq>, OracleError> {
    let bits = (n * n.saturating_sub(1)) as u32;
    budget(bits, MAX_ARC_BITS)?;
    let pairs = ordered_pairs(n);
    let twin: Vec<(usize, usize)> = {
        let index_of = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j)).unwrap();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| (index_of(i, j), index_of(j, i)))
            .collect()
    };
    Ok(into_seqs(set_sweep(1u64 << bits, |code| {
        let has_two_cycle = twin
            .iter()
            .any(|&(p, q)| code >> p & 1 == 1 && code >> q & 1 == 1);
        if has_two_cycle {
            None
        } else {
            Some(digraph_scores(n, &pairs, code))
        }
    })))
}

/// All nondecreasing sequences of the given length with elements in
/// `0..=max`, in lexicographic order.
pub fn nondecreasing_sequences(len: usize, max: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(len);
    fn rec(buf: &mut Vec<u64>, len: usize, max: u64, lo: u64, out: &mut Vec<Vec<u64>>) {
        if buf.len() == len {
            out.push(buf.clone());
            return;
        }
        for v in lo..=max {
            buf.push(v);
            rec(buf, len, max, v, out);
            buf.pop();
        }
    }
    rec(&mut buf, len, max, 0, &mut out);
    out
}

/// Every sequence of the given length with elements in `0..=max`
/// (full cartesian product), in lexicographic order.
pub fn all_sequences(len: usize, max: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(len);
    fn rec(buf: &mut Vec<u64>, len: usize, max: u64, out: &mut Vec<Vec<u64>>) {
        if buf.len() == len {
            out.push(buf.clone());
            return;
        }
        for v in 0..=max {
            buf.push(v);
            rec(buf, len, max, out);
            buf.pop();
        }
    }
    rec(&mut buf, len, max, &mut out);
    out
}

/// The candidate universe for cross-validation at `(m, n)`: every pair of a
/// nondecreasing `(m, n)`-sequence and a nondecreasing `(n, m)`-sequence
/// whose elements total `m*n`. Every realizable sorted pair lies in here.
pub fn candidate_pairs(m: usize, n: usize) -> Vec<(BoundedSeq, BoundedSeq)> {
    let target = (m as u128) * (n as u128);
    let b_side = nondecreasing_sequences(n, m as u64);
    let mut out = Vec::new();
    for a in nondecreasing_sequences(m, n as u64) {
        let a_sum: u128 = a.iter().map(|&e| e as u128).sum();
        if a_sum > target {
            continue;
        }
        for b in &b_side {
            let b_sum: u128 = b.iter().map(|&e| e as u128).sum();
            if a_sum + b_sum == target {
                out.push((
                    BoundedSeq::new(a.clone(), n as u64).expect("generated within bound"),
                    BoundedSeq::new(b.clone(), m as u64).expect("generated within bound"),
                ));
            }
        }
    }
    out
}

/// Summary of a successful three-way cross-validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossReport {
    pub m: usize,
    pub n: usize,
    pub orientations: u64,
    pub candidates: usize,
    pub realizable: usize,
}

impl fmt::Display for CrossReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "m={} n={}: {} orientations, {} candidate pairs, {} realizable, three-way agreement",
            self.m, self.n, self.orientations, self.candidates, self.realizable
        )
    }
}

fn cross_validate_against(
    m: usize,
    n: usize,
    census: Vec<CensusEntry>,
) -> Result<CrossReport, OracleError> {
    let realized: BTreeSet<PairKey> = census
        .into_iter()
        .map(|e| (e.x_scores.into_vec(), e.y_scores.into_vec()))
        .collect();
    let candidates = candidate_pairs(m, n);
    let mut discrepancies = Vec::new();
    let mut candidate_keys: BTreeSet<PairKey> = BTreeSet::new();
    for (a, b) in &candidates {
        let key = (a.elems().to_vec(), b.elems().to_vec());
        let oracle = realized.contains(&key);
        let moon = moon_check(&a.to_int_seq(), &b.to_int_seq()).accepted();
        let trimming = trim_check(a, b).accepted();
        if !(oracle == moon && moon == trimming) {
            discrepancies.push(Discrepancy {
                a: key.0.clone(),
                b: key.1.clone(),
                oracle,
                moon,
                trimming,
                in_universe: true,
            });
        }
        candidate_keys.insert(key);
    }
    // every realizable pair must have been generated as a candidate
    for key in &realized {
        if !candidate_keys.contains(key) {
            discrepancies.push(Discrepancy {
                a: key.0.clone(),
                b: key.1.clone(),
                oracle: true,
                moon: false,
                trimming: false,
                in_universe: false,
            });
        }
    }
    if discrepancies.is_empty() {
        Ok(CrossReport {
            m,
            n,
            orientations: 1u64 << (m * n),
            candidates: candidates.len(),
            realizable: realized.len(),
        })
    } else {
        Err(OracleError::Discrepancy(discrepancies))
    }
}

/// Three-way equality check at `(m, n)`: the set of sorted pairs realized by
/// some orientation must equal the Moon-accepted set and the
/// trimming-accepted set over the candidate universe. Any element of a
/// symmetric difference is returned as a [`Discrepancy`]; a disagreement
/// here means an implementation bug, so callers should treat it as fatal.
pub fn cross_validate(m: usize, n: usize) -> Result<CrossReport, OracleError> {
    cross_validate_against(m, n, enumerate_bitournaments(m, n)?)
}

/// Single-threaded variant of [`cross_validate`].
pub fn cross_validate_seq(m: usize, n: usize) -> Result<CrossReport, OracleError> {
    cross_validate_against(m, n, enumerate_bitournaments_seq(m, n)?)
}

/// Census rendered as CSV: `x_scores,y_scores,count`, scores joined by `;`.
pub fn census_csv(entries: &[CensusEntry]) -> String {
    let semi = |s: &IntSeq| {
        s.elems()
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(";")
    };
    let mut out = String::from("x_scores,y_scores,count\n");
    for e in entries {
        out.push_str(&format!(
            "{},{},{}\n",
            semi(&e.x_scores),
            semi(&e.y_scores),
            e.count
        ));
    }
    out
}
