//! Batch evaluation over ranges of small naturals.
//!
//! With the `parallel` feature (on by default) the range-level entry points
//! fan out over rayon's pool; without it they run on the calling thread. The
//! `_seq` variants are always sequential.

use std::cmp::Ordering;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::nat::{view, Nat};
use crate::refnat::RefNat;

/// Evaluates `f` on every value in `0..n`, in order.
pub fn map_range<T, F>(n: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_range_seq(n, f)
    }
}

pub fn map_range_seq<T, F>(n: u64, f: F) -> Vec<T>
where
    F: Fn(u64) -> T,
{
    (0..n).map(f).collect()
}

/// Values in `0..n` for which `check` fails, ascending.
pub fn failures<F>(n: u64, check: F) -> Vec<u64>
where
    F: Fn(u64) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().filter(|&k| !check(k)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        failures_seq(n, check)
    }
}

pub fn failures_seq<F>(n: u64, check: F) -> Vec<u64>
where
    F: Fn(u64) -> bool,
{
    (0..n).filter(|&k| !check(k)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub op: &'static str,
    pub x: u64,
    pub y: u64,
}

/// One row of the pairwise sweep: every `y` in `0..=bound` against a fixed `x`.
fn check_row<N: Nat>(x: u64, bound: u64, table: &[N]) -> Vec<Mismatch> {
    let mut bad = Vec::new();
    let xn = &table[x as usize];
    let xr = RefNat::from(x);
    let back = |v: &N| view::<N, RefNat>(v);
    for y in 0..=bound {
        let yn = &table[y as usize];
        let yr = RefNat::from(y);
        let mut miss = |op| bad.push(Mismatch { op, x, y });
        if back(&xn.add(yn)) != xr.oracle_add(&yr) {
            miss("add");
        }
        match (xn.sub(yn), xr.oracle_sub(&yr)) {
            (Ok(d), Some(want)) if back(&d) == want => {}
            (Err(_), None) => {}
            _ => miss("sub"),
        }
        if back(&xn.mul(yn)) != xr.oracle_mul(&yr) {
            miss("mul");
        }
        if xn.compare(yn) != xr.oracle_cmp(&yr) {
            miss("cmp");
        }
        match (xn.div_and_rem(yn), xr.oracle_div_rem(&yr)) {
            (Ok((q, r)), Some((wq, wr))) if back(&q) == wq && back(&r) == wr => {}
            (Err(_), None) => {}
            _ => miss("div_and_rem"),
        }
    }
    bad
}

fn small_table<N: Nat>(bound: u64) -> Vec<N> {
    (0..=bound).map(|v| view(&RefNat::from(v))).collect()
}

/// Checks add, sub, mul, cmp and div_and_rem in representation `N` against
/// native arithmetic for every pair in `0..=bound`.
pub fn cross_check<N: Nat>(bound: u64) -> Vec<Mismatch> {
    let table = small_table::<N>(bound);
    map_range(bound + 1, |x| check_row(x, bound, &table))
        .into_iter()
        .flatten()
        .collect()
}

pub fn cross_check_seq<N: Nat>(bound: u64) -> Vec<Mismatch> {
    let table = small_table::<N>(bound);
    map_range_seq(bound + 1, |x| check_row(x, bound, &table))
        .into_iter()
        .flatten()
        .collect()
}

/// Checks `pow(x, y)` against native powers for `x <= max_base`, `y <= max_exp`.
pub fn cross_check_pow<N: Nat>(max_base: u64, max_exp: u32) -> Vec<Mismatch> {
    let mut bad = Vec::new();
    for x in 0..=max_base {
        let xn: N = view(&RefNat::from(x));
        for y in 0..=max_exp {
            let yn: N = view(&RefNat::from(u64::from(y)));
            let got: RefNat = view(&xn.pow(&yn));
            if got != RefNat::from(x).oracle_pow(y) {
                bad.push(Mismatch {
                    op: "pow",
                    x,
                    y: u64::from(y),
                });
            }
        }
    }
    bad
}

/// True when `cmp` agrees with the native order on `x, y`.
pub fn order_agrees<N: Nat>(x: u64, y: u64) -> bool {
    let (a, b): (N, N) = (view(&RefNat::from(x)), view(&RefNat::from(y)));
    a.compare(&b) == x.cmp(&y) && (x.cmp(&y) == Ordering::Equal) == (a == b)
}
