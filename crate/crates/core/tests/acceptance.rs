//! Acceptance suite: one test per release criterion, each printing a
//! `[acceptance] criterion N: PASS` line on success (run with
//! `cargo test -p bitourn --test acceptance -- --nocapture` to see them).
//! Every tolerance is pinned in the assertions themselves.

use bitourn::check::{
    avery_check, corollary_symmetry, landau_check, moon_check, moon_table, trim_check, FeasiblePair,
};
use bitourn::oracle::{
    all_sequences, candidate_pairs, cross_validate_seq, enumerate_digraphs_seq,
    enumerate_tournaments_seq,
};
use bitourn::realize::realize_pair;
use bitourn::seq::{BoundedSeq, IntSeq, TrimSchedule};
use itertools::Itertools;
use rand::rngs::StdRng;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::SeedableRng;
use std::time::{Duration, Instant};

fn bseq(elems: &[u64], bound: u64) -> BoundedSeq {
    BoundedSeq::new(elems.to_vec(), bound).unwrap()
}

fn pass(n: u32, what: &str) {
    println!("[acceptance] criterion {n}: PASS - {what}");
}

/// Shortest of several timed runs, to keep the timing assertions stable.
fn best_of<F: FnMut()>(runs: u32, mut f: F) -> Duration {
    (0..runs)
        .map(|_| {
            let t = Instant::now();
            f();
            t.elapsed()
        })
        .min()
        .unwrap()
}

#[test]
fn criterion_1_worked_example_trace() {
    let a = bseq(&[1, 1, 2, 2, 3, 4], 5);
    let b = bseq(&[1, 2, 3, 5, 6], 6);

    let trim = trim_check(&a, &b);
    let moon = moon_check(&a.to_int_seq(), &b.to_int_seq());
    assert!(trim.accepted(), "criterion 1 FAIL: trimming rejected");
    assert!(moon.accepted(), "criterion 1 FAIL: moon rejected");

    let trace = trim.trace.expect("accepting trim report carries a trace");
    let rows: Vec<Vec<u64>> = trace.rows().map(|r| r.elems().to_vec()).collect();
    assert_eq!(
        rows,
        vec![
            vec![5, 4, 3, 1, 0],
            vec![4, 4, 3, 1, 0],
            vec![3, 4, 3, 1, 0],
            vec![2, 3, 3, 1, 0],
            vec![2, 2, 2, 1, 0],
            vec![1, 1, 1, 1, 0],
            vec![0, 0, 0, 0, 0],
        ],
        "criterion 1 FAIL: trace differs from the worked derivation"
    );
    assert_eq!(trace.amounts(), vec![1, 1, 2, 2, 3, 4]);

    let elapsed = best_of(10, || {
        trim_check(&a, &b);
        moon_check(&a.to_int_seq(), &b.to_int_seq());
    });
    assert!(
        elapsed < Duration::from_millis(1),
        "criterion 1 FAIL: check took {elapsed:?}, budget 1 ms"
    );
    pass(
        1,
        "worked 6x5 example accepted with the exact seven-row trace in under 1 ms",
    );
}

#[test]
fn criterion_2_moon_table_values() {
    let rows = moon_table(
        &IntSeq::new(vec![1, 3, 4, 5]),
        &IntSeq::new(vec![0, 1, 2, 2, 2]),
    );
    assert_eq!(rows.len(), 20);
    let sums: Vec<u64> = rows.iter().map(|r| r.sum).collect();
    let products: Vec<u64> = rows.iter().map(|r| r.product).collect();
    assert_eq!(
        sums,
        vec![1, 2, 4, 6, 8, 4, 5, 7, 9, 11, 8, 9, 11, 13, 15, 13, 14, 16, 18, 20],
        "criterion 2 FAIL: prefix-sum column differs"
    );
    assert_eq!(
        products,
        vec![1, 2, 3, 4, 5, 2, 4, 6, 8, 10, 3, 6, 9, 12, 15, 4, 8, 12, 16, 20],
        "criterion 2 FAIL: product column differs"
    );
    for r in &rows {
        assert!(r.sum >= r.product);
    }
    assert_eq!(rows[19].sum, rows[19].product);
    assert!(moon_check(
        &IntSeq::new(vec![1, 3, 4, 5]),
        &IntSeq::new(vec![0, 1, 2, 2, 2])
    )
    .accepted());
    pass(
        2,
        "4x5 Moon table matches all 20 sums and products row for row",
    );
}

#[test]
fn criterion_3_trimming_goldens() {
    let a = bseq(&[0, 2, 1, 5, 3, 2], 6);
    let t3 = a.normal_trim(3).unwrap();
    assert_eq!(
        t3.elems(),
        &[0, 1, 1, 4, 2, 2],
        "criterion 3 FAIL: normal 3-trim differs"
    );
    assert_eq!(
        t3.normal_trim(5).unwrap().elems(),
        &[0, 0, 0, 3, 1, 1],
        "criterion 3 FAIL: subsequent 5-trim differs"
    );

    // conj(B) under A for the (4,5) pair, then under a permuted schedule
    let b = bseq(&[1, 2, 2, 2, 3], 4);
    let bbar = b.conjugate();
    assert_eq!(bbar.elems(), &[3, 2, 2, 2, 1]);
    for schedule in [vec![5, 3, 2, 0], vec![2, 0, 3, 5]] {
        let (out, trace) = bbar
            .trim_by(&TrimSchedule::new(schedule.clone()))
            .unwrap_or_else(|e| panic!("criterion 3 FAIL: schedule {schedule:?}: {e}"));
        assert_eq!(
            out.elems(),
            &[0, 0, 0, 0, 0],
            "criterion 3 FAIL: schedule {schedule:?} did not reach zero"
        );
        assert_eq!(trace.final_seq(), &out);
    }
    pass(
        3,
        "normal 3- and 5-trims exact; conj(B) trims to zero under A and its permutation",
    );
}

#[test]
fn criterion_4_three_way_equivalence_sweep() {
    let started = Instant::now();
    let mut sizes = 0u32;
    for m in 1..=16usize {
        for n in 1..=16usize {
            if m * n > 16 {
                continue;
            }
            let report = cross_validate_seq(m, n)
                .unwrap_or_else(|e| panic!("criterion 4 FAIL at ({m},{n}): {e}"));
            assert_eq!(report.m, m);
            sizes += 1;
        }
    }
    let elapsed = started.elapsed();
    assert_eq!(sizes, 50, "criterion 4 FAIL: size grid incomplete");
    assert!(
        elapsed < Duration::from_secs(300),
        "criterion 4 FAIL: sweep took {elapsed:?}, budget 5 minutes"
    );
    pass(
        4,
        "oracle, Moon and trimming agree at all 50 sizes with m*n <= 16",
    );
}

#[test]
fn criterion_5_realization_round_trip() {
    let mut accepted = 0u32;
    let mut rejected = 0u32;
    for m in 1..=4usize {
        for n in 1..=4usize {
            for (a, b) in candidate_pairs(m, n) {
                let verdict = trim_check(&a, &b).accepted();
                match realize_pair(&a, &b) {
                    Ok((t, _)) => {
                        assert!(
                            verdict,
                            "criterion 5 FAIL: realized rejected pair a={a} b={b}"
                        );
                        let (xs, ys) = t.scores();
                        assert_eq!(
                            xs.elems(),
                            a.elems(),
                            "criterion 5 FAIL: x-scores differ for a={a} b={b}"
                        );
                        assert_eq!(
                            ys.elems(),
                            b.elems(),
                            "criterion 5 FAIL: y-scores differ for a={a} b={b}"
                        );
                        accepted += 1;
                    }
                    Err(_) => {
                        assert!(
                            !verdict,
                            "criterion 5 FAIL: accepted pair not realized a={a} b={b}"
                        );
                        rejected += 1;
                    }
                }
            }
        }
    }
    assert!(accepted > 0 && rejected > 0);
    pass(
        5,
        "every accepted pair up to 4x4 realizes to its exact scores; rejects never realize",
    );
}

#[test]
fn criterion_6_corollary_symmetry() {
    let mut feasible = 0u32;
    for m in 0..=3usize {
        for n in 0..=3usize {
            for a in all_sequences(m, n as u64) {
                for b in all_sequences(n, m as u64) {
                    let a = bseq(&a, n as u64);
                    let b = bseq(&b, m as u64);
                    if let Ok((ab, ba)) = corollary_symmetry(&a, &b) {
                        feasible += 1;
                        assert_eq!(
                            ab, ba,
                            "criterion 6 FAIL: trim directions disagree on a={a} b={b}"
                        );
                    }
                }
            }
        }
    }
    assert!(feasible > 100);
    pass(
        6,
        "both trimming directions agree on every feasible pair up to 3x3",
    );
}

#[test]
fn criterion_7_permutation_invariance() {
    // pool every candidate pair up to 5x5 with its verdict
    let mut pool: Vec<(Vec<u64>, Vec<u64>, bool)> = Vec::new();
    for m in 1..=5usize {
        for n in 1..=5usize {
            for (a, b) in candidate_pairs(m, n) {
                let verdict = trim_check(&a, &b).accepted();
                pool.push((a.elems().to_vec(), b.elems().to_vec(), verdict));
            }
        }
    }
    assert!(pool.iter().any(|p| p.2) && pool.iter().any(|p| !p.2));

    let mut rng = StdRng::seed_from_u64(0x5eed_b170);
    for round in 0..1000 {
        let (a, b, verdict) = pool.choose(&mut rng).unwrap();
        let mut pa = a.clone();
        let mut pb = b.clone();
        pa.shuffle(&mut rng);
        pb.shuffle(&mut rng);
        let shuffled = trim_check(&bseq(&pa, b.len() as u64), &bseq(&pb, a.len() as u64));
        assert_eq!(
            shuffled.accepted(),
            *verdict,
            "criterion 7 FAIL at round {round}: verdict changed for a={pa:?} b={pb:?}"
        );
    }
    pass(
        7,
        "1000 random permutations of pooled pairs up to 5x5 left every verdict unchanged",
    );
}

#[test]
fn criterion_8_replication_feasibility() {
    let mut findings = Vec::new();
    let mut replicated = 0u32;
    for m in 1..=2usize {
        for n in 1..=2usize {
            for (a, b) in candidate_pairs(m, n) {
                if !trim_check(&a, &b).accepted() {
                    continue;
                }
                for c in [2u64, 3] {
                    let ra = a.replicate_scale(c);
                    let rb = b.replicate_scale(c);
                    FeasiblePair::new(ra.clone(), rb.clone()).unwrap_or_else(|e| {
                        panic!("criterion 8 FAIL: a={a} b={b} c={c} lost feasibility: {e}")
                    });
                    replicated += 1;
                    if !trim_check(&ra, &rb).accepted() {
                        findings.push(format!("a={a} b={b} c={c} no longer accepted"));
                    }
                }
            }
        }
    }
    assert!(replicated >= 8);
    for f in &findings {
        println!("[acceptance] criterion 8 finding: {f}");
    }
    pass(
        8,
        &format!(
            "all {replicated} replicated pairs stayed feasible; {} acceptance finding(s)",
            findings.len()
        ),
    );
}

#[test]
fn criterion_9_landau_avery_oracle_agreement() {
    let started = Instant::now();
    for n in 1..=5usize {
        let realizable: Vec<Vec<u64>> = enumerate_tournaments_seq(n)
            .unwrap()
            .into_iter()
            .map(IntSeq::into_vec)
            .collect();
        for s in all_sequences(n, n as u64) {
            let sorted = {
                let mut v = s.clone();
                v.sort_unstable();
                v
            };
            let verdict = landau_check(&IntSeq::new(s.clone())).accepted();
            assert_eq!(
                verdict,
                realizable.contains(&sorted),
                "criterion 9 FAIL: landau disagrees with enumeration on {s:?}"
            );
        }
    }
    for n in 1..=3usize {
        let realizable: Vec<Vec<u64>> = enumerate_digraphs_seq(n)
            .unwrap()
            .into_iter()
            .map(IntSeq::into_vec)
            .collect();
        let max = 2 * (n as u64).saturating_sub(1) + 1;
        for s in all_sequences(n, max) {
            let sorted = {
                let mut v = s.clone();
                v.sort_unstable();
                v
            };
            let verdict = avery_check(&IntSeq::new(s.clone())).accepted();
            assert_eq!(
                verdict,
                realizable.contains(&sorted),
                "criterion 9 FAIL: avery disagrees with enumeration on {s:?}"
            );
        }
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed < Duration::from_secs(10),
        "criterion 9 FAIL: agreement sweep took {elapsed:?}, budget 10 s"
    );
    pass(
        9,
        "landau (n <= 5) and avery (n <= 3) verdicts match exhaustive enumeration",
    );
}

#[test]
fn criterion_10_normal_trimming_optimality() {
    let mut compared = 0u64;
    for len in 0..=5usize {
        for elems in all_sequences(len, 3) {
            let s = bseq(&elems, 3);
            let positives: Vec<usize> = (0..len).filter(|&i| elems[i] > 0).collect();
            for c in 0..=positives.len() {
                let normal = s.normal_trim(c as u64).unwrap();
                for subset in positives.iter().copied().combinations(c) {
                    let general = s.trim_at(&subset).unwrap();
                    assert!(
                        normal.positive_count() >= general.positive_count(),
                        "criterion 10 FAIL: {elems:?} positions {subset:?} beat the normal {c}-trim"
                    );
                    compared += 1;
                }
            }
        }
    }
    assert!(compared > 10_000);
    pass(
        10,
        &format!("normal trimming kept the most positives across {compared} general trimmings"),
    );
}
