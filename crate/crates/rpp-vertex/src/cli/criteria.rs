//! The eight acceptance checks behind `rppv verify-all`.

use std::time::Instant;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::coupling::{
    a_lambda_qt, check_colored_tables, enumerate_pairs, g_via_lozenges, g_via_vertex, pair_config_weight,
    pair_genfun_bruteforce, pair_row_weight, verify_colored_ybe, verify_colored_ybe_mode, ColoredYbeMode, PairRPP,
};
use crate::partitions::{hook_table, partitions_up_to, Partition};
use crate::qt_series::{hook_product_pair, hook_product_single, QTSeries};
use crate::rpp_core::{count_by_volume, enumerate, RPP};
use crate::sliding::{slide, unslide, verify_round_trip, verify_t0_counting};
use crate::vertex_model::{
    a_lambda_exponent, config_weight_q, gray_weight, rat, row_weight_closed, rpp_to_config, verify_ybe, white_weight,
    Monomial, QtMonomial, RowKind, VertexKind, YbeKind,
};

/// Outcome of one criterion.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: String,
    pub passed: bool,
    pub details: serde_json::Value,
    pub elapsed: f64,
}

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).expect("valid literal")
}

fn timed(id: u8, name: &str, f: impl FnOnce() -> (bool, serde_json::Value)) -> CriterionResult {
    let t = Instant::now();
    let (passed, details) = f();
    CriterionResult { id, name: name.into(), passed, details, elapsed: t.elapsed().as_secs_f64() }
}

/// Brute-force series `Σ q^{|Λ|}` from enumeration counts.
pub fn single_bruteforce(lambda: &Partition, n_max: u32) -> QTSeries {
    let mut s = QTSeries::zero(n_max);
    for (n, c) in count_by_volume(lambda, n_max as u64).into_iter().enumerate() {
        s.add_term(n as u32, 0, c);
    }
    s
}

/// 1: one-colour generating functions against the hook product.
pub fn one_color_genfun() -> CriterionResult {
    timed(1, "one-colour generating function", || {
        let shapes = [&[1][..], &[2], &[1, 1], &[2, 1], &[3, 1], &[2, 2], &[3, 2, 1]];
        let mut bad = Vec::new();
        for s in shapes {
            let l = part(s);
            if single_bruteforce(&l, 10) != hook_product_single(&l, 10) {
                bad.push(l.to_string());
            }
        }
        (bad.is_empty(), json!({ "shapes": shapes.len(), "max_volume": 10, "mismatched": bad }))
    })
}

/// 2: pair generating functions against the pair hook product.
pub fn main_theorem() -> CriterionResult {
    timed(2, "pair generating function", || {
        let shapes = [&[1][..], &[2], &[1, 1], &[2, 1], &[2, 2]];
        let mut bad = Vec::new();
        for s in shapes {
            let l = part(s);
            match pair_genfun_bruteforce(&l, 8) {
                Ok(b) if b == hook_product_pair(&l, 8) => {}
                Ok(b) => bad.push(json!({ "shape": l.to_string(), "differences": b.diff_positions(&hook_product_pair(&l, 8)) })),
                Err(e) => bad.push(json!({ "shape": l.to_string(), "error": e.to_string() })),
            }
        }
        (bad.is_empty(), json!({ "shapes": shapes.len(), "max_volume": 8, "mismatched": bad }))
    })
}

/// Default one-colour sample points.
pub fn default_xy() -> Vec<(BigRational, BigRational)> {
    vec![(rat(1, 2), rat(1, 3)), (rat(2, 7), rat(5, 3)), (rat(-3, 4), rat(1, 5)), (rat(7, 2), rat(-2, 9)), (rat(3, 11), rat(4, 13))]
}

/// Default two-colour sample points.
pub fn default_xyt() -> Vec<(BigRational, BigRational, BigRational)> {
    vec![(rat(1, 2), rat(1, 3), rat(2, 5)), (rat(3, 7), rat(-2, 5), rat(5, 4)), (rat(-4, 3), rat(2, 9), rat(3, 8))]
}

/// 3: exhaustive Yang–Baxter checks.
pub fn ybe_exhaustion() -> CriterionResult {
    timed(3, "Yang-Baxter exhaustion", || {
        let xy = default_xy();
        let xyt = default_xyt();
        let ww = verify_ybe(YbeKind::WhiteWhite, &xy);
        let wg = verify_ybe(YbeKind::WhiteGray, &xy);
        let stated = verify_colored_ybe(&xyt).expect("tables verified");
        let shifted = verify_colored_ybe_mode(ColoredYbeMode::WhiteGrayShifted, &xyt).expect("tables verified");
        let cww = verify_colored_ybe_mode(ColoredYbeMode::WhiteWhite, &xyt).expect("tables verified");
        let passed = ww.passed() && wg.passed() && stated.passed();
        (
            passed,
            json!({
                "one_colour_white_white_violations": ww.violations.len(),
                "one_colour_white_gray_violations": wg.violations.len(),
                "two_colour_white_gray_z_eq_yx_violations": stated.violations.len(),
                "two_colour_white_gray_z_eq_yxt_violations": shifted.violations.len(),
                "two_colour_white_white_violations": cww.violations.len(),
                "first_violation": stated.violations.first(),
            }),
        )
    })
}

/// 4: the weight bijections on every RPP / pair in range.
pub fn weight_bijections() -> CriterionResult {
    timed(4, "weight bijections", || {
        let shapes: Vec<Partition> = partitions_up_to(5).into_iter().filter(|l| !l.is_empty()).collect();
        let single_bad: Vec<String> = shapes
            .par_iter()
            .flat_map_iter(|l| {
                enumerate(l, 8).into_iter().filter_map(move |r| {
                    let w = config_weight_q(&r).ok()?;
                    let ok = w.q + a_lambda_exponent(r.shape()) == r.volume() as i64 && w.t == 0;
                    (!ok).then(|| format!("{r:?}"))
                })
            })
            .collect();
        let pair_shapes: Vec<Partition> = partitions_up_to(4).into_iter().filter(|l| !l.is_empty()).collect();
        let pairs: Vec<PairRPP> = pair_shapes.iter().flat_map(|l| enumerate_pairs(l, 6)).collect();
        let pair_bad: Vec<String> = pairs
            .par_iter()
            .filter_map(|p| {
                let w = pair_config_weight(p).ok()?.times(&a_lambda_qt(p.shape()));
                let g = g_via_lozenges(p).ok()? as i64;
                (w != QtMonomial::new(p.volume() as i64, g)).then(|| format!("{p:?}"))
            })
            .collect();
        (
            single_bad.is_empty() && pair_bad.is_empty(),
            json!({ "pairs_checked": pairs.len(), "single_failures": single_bad.len(), "pair_failures": pair_bad.len() }),
        )
    })
}

/// 5: the worked values.
pub fn worked_values() -> CriterionResult {
    timed(5, "worked values", || {
        let x = Monomial::X;
        let mut items = Vec::new();
        let mut check = |name: &str, ok: bool, got: String| items.push((name.to_string(), ok, got));
        let r1 = row_weight_closed(RowKind::White, &part(&[1, 1]), &part(&[3, 1, 1]), &x, 3);
        check("white row (1,1)->(3,1,1) = x^3", r1 == Some(Monomial::new(3, 0)), format!("{r1:?}"));
        let r2 = row_weight_closed(RowKind::Gray, &part(&[3, 1, 1]), &part(&[2, 1]), &x, 4);
        check("gray row (3,1,1)->(2,1) = x^6", r2 == Some(Monomial::new(6, 0)), format!("{r2:?}"));
        let w2 = pair_row_weight(RowKind::White, (&part(&[2, 1]), &part(&[4, 2])), (&part(&[1]), &part(&[4, 1])), 2, 9);
        check("two-colour white row = x^7 t^3", matches!(w2, Ok(Some(m)) if m == Monomial::new(7, 3)), format!("{w2:?}"));
        let g2 = pair_row_weight(
            RowKind::Gray,
            (&part(&[3, 1, 1]), &part(&[1, 1])),
            (&part(&[2, 1]), &part(&[1, 1])),
            3,
            10,
        );
        check("two-colour gray row = x^8 t^3", matches!(g2, Ok(Some(m)) if m == Monomial::new(8, 3)), format!("{g2:?}"));
        let rpp = RPP::from_rows_top_down(part(&[4, 3, 1]), vec![vec![3], vec![1, 1, 4], vec![0, 1, 3, 4]])
            .expect("valid");
        let printed = vec![3, 4, 0, 3, 3, 1, 3];
        let got = rpp_to_config(&rpp).map(|c| c.row_exponents()).unwrap_or_default();
        check("config weight x1^3 x2^4 x4^3 x5^3 x6 x7^3", got == printed, format!("row exponents {got:?}"));
        let s321 = part(&[3, 2, 1]);
        let pair = PairRPP::new(
            RPP::from_rows_top_down(s321.clone(), vec![vec![2], vec![1, 3], vec![0, 1, 1]]).expect("valid"),
            RPP::from_rows_top_down(s321, vec![vec![2], vec![1, 2], vec![1, 2, 3]]).expect("valid"),
        )
        .expect("same shape");
        let g = g_via_lozenges(&pair);
        check("g of the two-colour example = 6", g == Ok(6), format!("{g:?}"));
        let h = hook_table(&part(&[4, 3, 1]));
        check("hook table 6 4 3 1 / 4 2 1 / 1", h == vec![vec![6, 4, 3, 1], vec![4, 2, 1], vec![1]], format!("{h:?}"));
        let passed = items.iter().all(|i| i.1);
        let details: Vec<_> = items.into_iter().map(|(n, ok, got)| json!({ "item": n, "passed": ok, "got": got })).collect();
        (passed, json!(details))
    })
}

/// 6: the two routes to `g` agree.
pub fn g_oracles() -> CriterionResult {
    timed(6, "g oracle equivalence", || {
        let pairs: Vec<PairRPP> = partitions_up_to(4).iter().flat_map(|l| enumerate_pairs(l, 6)).collect();
        let bad = pairs.par_iter().filter(|p| g_via_vertex(p).ok() != g_via_lozenges(p).ok()).count();
        (bad == 0, json!({ "pairs_checked": pairs.len(), "discrepancies": bad }))
    })
}

/// 7: sliding.
pub fn sliding_bijection() -> CriterionResult {
    timed(7, "sliding bijection", || {
        let shape = part(&[4, 4, 3, 3, 1]);
        let blue = RPP::from_rows_top_down(
            shape.clone(),
            vec![vec![0], vec![0, 1, 4], vec![0, 0, 2], vec![0, 0, 0, 1], vec![0, 0, 0, 0]],
        )
        .expect("valid");
        let red = RPP::from_rows_top_down(
            shape.clone(),
            vec![vec![3], vec![2, 4, 4], vec![0, 1, 4], vec![0, 0, 2, 4], vec![0, 0, 0, 3]],
        )
        .expect("valid");
        let out = RPP::from_rows_top_down(
            shape.clone(),
            vec![vec![3], vec![2, 4, 4], vec![1, 4, 4], vec![1, 2, 2, 4], vec![0, 0, 1, 3]],
        )
        .expect("valid");
        let pair = PairRPP::new(blue, red).expect("same shape");
        let worked = slide(&pair).ok() == Some(out.clone()) && unslide(&out).ok() == Some(pair);
        let trips: Vec<_> = [part(&[2, 2]), part(&[3, 1]), shape]
            .iter()
            .map(|l| (l.to_string(), verify_round_trip(l, 6)))
            .collect();
        let counting = verify_t0_counting(&part(&[2, 2]), 8);
        let counting_ok = counting.as_ref().map(|r| r.holds).unwrap_or(false);
        let passed = worked && trips.iter().all(|t| t.1.passed()) && counting_ok;
        (
            passed,
            json!({
                "worked_example": worked,
                "round_trips": trips.iter().map(|(l, r)| json!({ "shape": l, "rpps": r.rpps_checked, "pairs": r.pairs_checked, "failures": r.failures.len() })).collect::<Vec<_>>(),
                "t0_counting": counting.ok(),
            }),
        )
    })
}

/// 8: internal consistency of the weight tables.
pub fn table_consistency() -> CriterionResult {
    timed(8, "table consistency", || {
        let samples = [(rat(1, 2), rat(2, 5)), (rat(-3, 7), rat(5, 3)), (rat(4, 1), rat(-1, 6))];
        let colored = check_colored_tables(&samples);
        let mut one = 0;
        for (x, _) in &samples {
            for k in VertexKind::ALL {
                let v = k.state();
                if gray_weight(v, x).ok() != white_weight(v, &x.recip()).ok().map(|w| x * w) {
                    one += 1;
                }
            }
        }
        (colored.is_empty() && one == 0, json!({ "colored_mismatches": colored, "one_colour_mismatches": one }))
    })
}

/// Runs all eight checks in order.
pub fn run_all() -> Vec<CriterionResult> {
    vec![
        one_color_genfun(),
        main_theorem(),
        ybe_exhaustion(),
        weight_bijections(),
        worked_values(),
        g_oracles(),
        sliding_bijection(),
        table_consistency(),
    ]
}
