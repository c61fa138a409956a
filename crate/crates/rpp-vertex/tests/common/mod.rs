//! Shared strategies and brute-force oracles for the integration tests.
#![allow(dead_code)]

use proptest::prelude::*;
use rpp_vertex::coupling::PairRPP;
use rpp_vertex::partitions::{Cell, Partition};
use rpp_vertex::rpp_core::RPP;

pub fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

/// All partitions of size at most `n`, built here without the library.
pub fn shapes_up_to(n: usize) -> Vec<Partition> {
    fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        for part in 1..=left.min(max) {
            cur.push(part);
            rec(left - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out.into_iter().map(|v| Partition::new(v).unwrap()).collect()
}

pub fn shape_strategy(max_size: usize) -> impl Strategy<Value = Partition> {
    let shapes = shapes_up_to(max_size);
    (0..shapes.len()).prop_map(move |i| shapes[i].clone())
}

/// A filling made monotone by taking, at each cell, the maximum of the raw
/// values weakly below and to the left.
pub fn monotone(shape: &Partition, raw: &[u64]) -> RPP {
    let cells = shape.cells();
    let value = |c: Cell| -> u64 {
        cells
            .iter()
            .enumerate()
            .filter(|(_, d)| d.row <= c.row && d.col <= c.col)
            .map(|(i, _)| raw[i % raw.len().max(1)])
            .max()
            .unwrap_or(0)
    };
    RPP::from_fn(shape, value).unwrap()
}

pub fn rpp_strategy(max_size: usize, max_entry: u64) -> impl Strategy<Value = RPP> {
    (shape_strategy(max_size), prop::collection::vec(0..=max_entry, 1..8))
        .prop_map(|(s, raw)| monotone(&s, &raw))
}

pub fn pair_strategy(max_size: usize, max_entry: u64) -> impl Strategy<Value = PairRPP> {
    (shape_strategy(max_size), prop::collection::vec(0..=max_entry, 1..8), prop::collection::vec(0..=max_entry, 1..8))
        .prop_map(|(s, a, b)| PairRPP::new(monotone(&s, &a), monotone(&s, &b)).unwrap())
}

/// Cellwise brute force: every filling with entries in `0..=max_volume` and
/// total at most `max_volume`, kept when rows and columns weakly increase.
pub fn rpps_bruteforce(shape: &Partition, max_volume: u64) -> Vec<Vec<u64>> {
    let cells = shape.cells();
    let mut out = Vec::new();
    let mut vals = vec![0u64; cells.len()];
    fn rec(i: usize, left: u64, cells: &[Cell], vals: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if i == cells.len() {
            let get = |c: Cell| cells.iter().position(|&d| d == c).map(|k| vals[k]);
            let ok = cells.iter().enumerate().all(|(k, c)| {
                let right = get(Cell::new(c.row, c.col + 1)).is_none_or(|v| v >= vals[k]);
                let up = get(Cell::new(c.row + 1, c.col)).is_none_or(|v| v >= vals[k]);
                right && up
            });
            if ok {
                out.push(vals.clone());
            }
            return;
        }
        for v in 0..=left {
            vals[i] = v;
            rec(i + 1, left - v, cells, vals, out);
        }
        vals[i] = 0;
    }
    rec(0, max_volume, &cells, &mut vals, &mut out);
    out
}

/// Per-volume counts from [`rpps_bruteforce`].
pub fn counts_bruteforce(shape: &Partition, max_volume: u64) -> Vec<u64> {
    let mut c = vec![0u64; max_volume as usize + 1];
    for f in rpps_bruteforce(shape, max_volume) {
        c[f.iter().sum::<u64>() as usize] += 1;
    }
    c
}

/// Hook lengths by peeling: for each cell count cells to its right in the
/// row and above it in the column.
pub fn hooks_bruteforce(shape: &Partition) -> Vec<(Cell, usize)> {
    let cells = shape.cells();
    cells
        .iter()
        .map(|&c| {
            let arm = cells.iter().filter(|d| d.row == c.row && d.col > c.col).count();
            let leg = cells.iter().filter(|d| d.col == c.col && d.row > c.row).count();
            (c, arm + leg + 1)
        })
        .collect()
}

/// Coefficients of `Π_cells 1/(1 − q^{h})` up to `q^n`, by dense convolution.
pub fn hook_series_dense(shape: &Partition, n: usize) -> Vec<u64> {
    let mut s = vec![0u64; n + 1];
    s[0] = 1;
    for (_, h) in hooks_bruteforce(shape) {
        for k in h..=n {
            s[k] += s[k - h];
        }
    }
    s
}
