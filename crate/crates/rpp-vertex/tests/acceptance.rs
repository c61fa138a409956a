//! Acceptance checks: one PASS/FAIL line per criterion. Exits non-zero if
//! any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use rayon::prelude::*;
use rpp_vertex::coupling::{
    a_lambda_qt, check_colored_tables, enumerate_pairs, g_via_lozenges, g_via_vertex, pair_config_weight,
    pair_genfun_bruteforce, pair_row_weight, verify_colored_ybe, PairRPP,
};
use rpp_vertex::partitions::{hook_table, partitions_up_to, Partition};
use rpp_vertex::qt_series::{hook_product_pair, hook_product_single};
use rpp_vertex::rpp_core::{count_by_volume, enumerate, RPP};
use rpp_vertex::sliding::{slide, unslide, verify_round_trip, verify_t0_counting};
use rpp_vertex::vertex_model::{
    a_lambda_exponent, config_weight_q, gray_weight, rat, row_weight_closed, rpp_to_config, verify_ybe, white_weight,
    Monomial, QtMonomial, RowKind, VertexKind, YbeKind,
};

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn top_down(s: &Partition, rows: &[&[u64]]) -> RPP {
    RPP::from_rows_top_down(s.clone(), rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn criterion_1() -> (bool, String) {
    let shapes = [p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1]), p(&[3, 1]), p(&[2, 2]), p(&[3, 2, 1])];
    let bad: Vec<String> = shapes
        .iter()
        .filter(|s| {
            let series = hook_product_single(s, 10);
            let counts = count_by_volume(s, 10);
            (0..=10u32).any(|n| series.coeff_u64(n, 0) != counts[n as usize])
        })
        .map(|s| s.to_string())
        .collect();
    (bad.is_empty(), format!("7 shapes to q^10, mismatched {bad:?}"))
}

fn criterion_2() -> (bool, String) {
    let shapes = [p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1]), p(&[2, 2])];
    let bad: Vec<String> = shapes
        .iter()
        .filter(|s| pair_genfun_bruteforce(s, 8).map(|b| b != hook_product_pair(s, 8)).unwrap_or(true))
        .map(|s| s.to_string())
        .collect();
    (bad.is_empty(), format!("5 shapes to q^8, mismatched {bad:?}"))
}

fn criterion_3() -> (bool, String) {
    let xy = [(rat(1, 2), rat(1, 3)), (rat(2, 7), rat(5, 3)), (rat(-3, 4), rat(1, 5)), (rat(7, 2), rat(-2, 9)), (rat(3, 11), rat(4, 13))];
    let xyt = [(rat(1, 2), rat(1, 3), rat(2, 5)), (rat(3, 7), rat(-2, 5), rat(5, 4)), (rat(-4, 3), rat(2, 9), rat(3, 8))];
    let ww = verify_ybe(YbeKind::WhiteWhite, &xy).violations.len();
    let wg = verify_ybe(YbeKind::WhiteGray, &xy).violations.len();
    let colored = verify_colored_ybe(&xyt).map(|r| r.violations.len()).unwrap_or(usize::MAX);
    (
        ww == 0 && wg == 0 && colored == 0,
        format!("violations: white-white {ww}/64x5, white-gray {wg}/64x5, two-colour white-gray (z=yx) {colored}/4096x3"),
    )
}

fn criterion_4() -> (bool, String) {
    let single: Vec<RPP> = partitions_up_to(5).iter().flat_map(|s| enumerate(s, 8)).collect();
    let single_bad = single
        .par_iter()
        .filter(|r| config_weight_q(r).map(|w| w.q + a_lambda_exponent(r.shape()) != r.volume() as i64).unwrap_or(true))
        .count();
    let pairs: Vec<PairRPP> = partitions_up_to(4).iter().flat_map(|s| enumerate_pairs(s, 6)).collect();
    let pair_bad = pairs
        .par_iter()
        .filter(|q| {
            let w = pair_config_weight(q).map(|w| w.times(&a_lambda_qt(q.shape())));
            let g = g_via_lozenges(q).map(|g| g as i64);
            match (w, g) {
                (Ok(w), Ok(g)) => w != QtMonomial::new(q.volume() as i64, g),
                _ => true,
            }
        })
        .count();
    (
        single_bad == 0 && pair_bad == 0,
        format!("{} RPPs ({single_bad} bad), {} pairs ({pair_bad} bad)", single.len(), pairs.len()),
    )
}

fn criterion_5() -> (bool, String) {
    let x = Monomial::X;
    let mut failed = Vec::new();
    if row_weight_closed(RowKind::White, &p(&[1, 1]), &p(&[3, 1, 1]), &x, 3) != Some(Monomial::new(3, 0)) {
        failed.push("white row x^3".to_string());
    }
    if row_weight_closed(RowKind::Gray, &p(&[3, 1, 1]), &p(&[2, 1]), &x, 4) != Some(Monomial::new(6, 0)) {
        failed.push("gray row x^6".to_string());
    }
    if pair_row_weight(RowKind::White, (&p(&[2, 1]), &p(&[4, 2])), (&p(&[1]), &p(&[4, 1])), 2, 9) != Ok(Some(Monomial::new(7, 3))) {
        failed.push("two-colour white row x^7 t^3".to_string());
    }
    if pair_row_weight(RowKind::Gray, (&p(&[3, 1, 1]), &p(&[1, 1])), (&p(&[2, 1]), &p(&[1, 1])), 3, 10) != Ok(Some(Monomial::new(8, 3))) {
        failed.push("two-colour gray row x^8 t^3".to_string());
    }
    let r = top_down(&p(&[4, 3, 1]), &[&[3], &[1, 1, 4], &[0, 1, 3, 4]]);
    let exps = rpp_to_config(&r).map(|c| c.row_exponents()).unwrap_or_default();
    // x1^3 x2^4 x4^3 x5^3 x6 x7^3
    if exps != vec![3, 4, 0, 3, 3, 1, 3] {
        failed.push(format!("config weight x1^3 x2^4 x4^3 x5^3 x6 x7^3 (computed exponents {exps:?})"));
    }
    let s = p(&[3, 2, 1]);
    let pair = PairRPP::new(top_down(&s, &[&[2], &[1, 3], &[0, 1, 1]]), top_down(&s, &[&[2], &[1, 2], &[1, 2, 3]])).unwrap();
    if g_via_lozenges(&pair) != Ok(6) {
        failed.push("g = 6".to_string());
    }
    if hook_table(&p(&[4, 3, 1])) != vec![vec![6, 4, 3, 1], vec![4, 2, 1], vec![1]] {
        failed.push("hook table".to_string());
    }
    (failed.is_empty(), format!("7 worked values, failed: {failed:?}"))
}

fn criterion_6() -> (bool, String) {
    let pairs: Vec<PairRPP> = partitions_up_to(4).iter().flat_map(|s| enumerate_pairs(s, 6)).collect();
    let bad = pairs.par_iter().filter(|q| g_via_vertex(q).ok() != g_via_lozenges(q).ok()).count();
    (bad == 0, format!("{} pairs, {bad} discrepancies", pairs.len()))
}

fn criterion_7() -> (bool, String) {
    let s = p(&[4, 4, 3, 3, 1]);
    let pair = PairRPP::new(
        top_down(&s, &[&[0], &[0, 1, 4], &[0, 0, 2], &[0, 0, 0, 1], &[0, 0, 0, 0]]),
        top_down(&s, &[&[3], &[2, 4, 4], &[0, 1, 4], &[0, 0, 2, 4], &[0, 0, 0, 3]]),
    )
    .unwrap();
    let out = top_down(&s, &[&[3], &[2, 4, 4], &[1, 4, 4], &[1, 2, 2, 4], &[0, 0, 1, 3]]);
    let worked = slide(&pair).ok() == Some(out.clone()) && unslide(&out).ok() == Some(pair);
    let trips: Vec<_> = [p(&[2, 2]), p(&[3, 1]), s].iter().map(|l| verify_round_trip(l, 6)).collect();
    let trips_ok = trips.iter().all(|t| t.passed());
    let counting = verify_t0_counting(&p(&[2, 2]), 8).map(|r| r.holds).unwrap_or(false);
    let pairs: u64 = trips.iter().map(|t| t.pairs_checked).sum();
    (
        worked && trips_ok && counting,
        format!("worked example {worked}, round trips {trips_ok} ({pairs} pairs), (2,2) counts to n=8 {counting}"),
    )
}

fn criterion_8() -> (bool, String) {
    let samples = [(rat(1, 2), rat(2, 5)), (rat(-3, 7), rat(5, 3)), (rat(4, 1), rat(-1, 6))];
    let colored = check_colored_tables(&samples).len();
    let one = samples
        .iter()
        .flat_map(|(x, _)| VertexKind::ALL.iter().map(move |k| (x, k.state())))
        .filter(|(x, v)| gray_weight(*v, *x).ok() != white_weight(*v, &x.recip()).ok().map(|w| *x * w))
        .count();
    (colored == 0 && one == 0, format!("two-colour table mismatches {colored}, one-colour {one}"))
}

type Check = fn() -> (bool, String);

fn main() -> ExitCode {
    let criteria: [(&str, Check); 8] = [
        ("one-colour generating function", criterion_1),
        ("pair generating function", criterion_2),
        ("Yang-Baxter exhaustion", criterion_3),
        ("weight bijections", criterion_4),
        ("worked values", criterion_5),
        ("g oracle equivalence", criterion_6),
        ("sliding bijection", criterion_7),
        ("table consistency", criterion_8),
    ];
    let mut all = true;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let (ok, detail) = f();
        all &= ok;
        println!("{} {}. {name} ({:.2}s): {detail}", if ok { "PASS" } else { "FAIL" }, i + 1, t.elapsed().as_secs_f64());
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
