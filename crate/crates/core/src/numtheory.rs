//! Special numbers with compact trees, a trial-division prime stream, the
//! Lucas–Lehmer test, and the recursive benchmark workloads.

use std::cmp::Ordering;

use crate::codecs::{from_list, Collections};
use crate::error::{NatError, Result};
use crate::nat::{kth, view, Nat};
use crate::refnat::RefNat;
use crate::tree::Tree;

/// Exponent of the 45th known Mersenne prime.
pub const PRIME45: u64 = 43_112_609;

fn small<N: Nat>(v: u64) -> N {
    view(&RefNat::from(v))
}

pub trait SpecialNumbers: Collections {
    /// `2^p − 1`.
    fn mersenne(p: &Self) -> Self {
        p.exp2().pred().expect("2^p is positive")
    }

    /// `2^(2^p) + 1`.
    fn fermat(p: &Self) -> Self {
        p.exp2().exp2().succ()
    }

    /// `2^(p−1)·(2^p − 1)`.
    fn perfect(p: &Self) -> Result<Self> {
        perfect_generic(p)
    }
}

pub fn perfect_generic<N: Nat>(p: &N) -> Result<N> {
    let p1 = p.clone().pred().map_err(|_| NatError::PerfectTooSmall)?;
    if p1.is_e() {
        return Err(NatError::PerfectTooSmall);
    }
    let m = p.exp2().pred().expect("2^p is positive");
    Ok(p1.exp2().mul(&m))
}

impl SpecialNumbers for RefNat {}
impl SpecialNumbers for crate::bij::BijDigits {}

impl SpecialNumbers for Tree {
    /// `p−1` ones followed by `p` zeros in binary: one node with two equal
    /// counters.
    fn perfect(p: &Self) -> Result<Self> {
        let q = p
            .clone()
            .pred()
            .and_then(Tree::pred)
            .map_err(|_| NatError::PerfectTooSmall)?;
        Ok(Tree::v(q.clone(), vec![q]).succ())
    }
}

pub fn mersenne45() -> Tree {
    Tree::mersenne(&Tree::from_u64(PRIME45))
}

pub fn perfect45() -> Tree {
    Tree::perfect(&Tree::from_u64(PRIME45)).expect("exponent above 2")
}

/// Ascending stream of all primes by trial division against the primes
/// already produced.
pub struct Primes<N> {
    found: Vec<N>,
    next: N,
}

pub fn primes<N: Nat>() -> Primes<N> {
    Primes {
        found: Vec::new(),
        next: small(2),
    }
}

impl<N: Nat> Primes<N> {
    fn is_prime(&self, n: &N) -> bool {
        for p in &self.found {
            if p.mul(p).compare(n) == Ordering::Greater {
                return true;
            }
            let (_, r) = n.div_and_rem(p).expect("primes are positive");
            if r.is_e() {
                return false;
            }
        }
        true
    }
}

impl<N: Nat> Iterator for Primes<N> {
    type Item = N;

    fn next(&mut self) -> Option<N> {
        if self.found.is_empty() {
            let two = std::mem::replace(&mut self.next, small(3));
            self.found.push(two.clone());
            return Some(two);
        }
        loop {
            let cand = self.next.clone();
            self.next = self.next.clone().succ().succ();
            if self.is_prime(&cand) {
                self.found.push(cand.clone());
                return Some(cand);
            }
        }
    }
}

/// `k mod (m − 1)` for `m` a power of two, by folding quotient into remainder.
pub fn fastmod<N: Nat>(k: &N, m: &N) -> N {
    let m1 = m.clone().pred().expect("modulus is positive");
    let mut k = k.clone();
    loop {
        if k == m1 {
            return N::e();
        }
        if k.compare(m) == Ordering::Less {
            return k;
        }
        let (q, r) = k.div_and_rem(m).expect("modulus is positive");
        k = q.add(&r);
    }
}

/// Lucas–Lehmer residue test on `2^p − 1`, starting from 4 and running
/// `p − 2` squaring steps. For `p = 2` no step runs and the residue 4 is not
/// reduced, so the answer is `false` even though 3 is prime.
pub fn lucas_lehmer<N: Nat>(p: &N) -> bool {
    let Ok(steps) = p.clone().pred().and_then(N::pred) else {
        return false;
    };
    let four = N::one().i();
    let m = p.exp2();
    let m1 = m.clone().pred().expect("2^p is positive");
    let two = N::e().i();
    let mut x = four;
    let mut k = steps;
    while !k.is_e() {
        let sq = x.mul(&x);
        // x is a reduced residue; below 2 the subtraction wraps through m − 1.
        let y = match sq.sub(&two) {
            Ok(y) => y,
            Err(_) => sq.add(&m1).sub(&two).expect("m − 1 >= 2"),
        };
        x = fastmod(&y, &m);
        k = k.pred().expect("positive");
    }
    x.is_e()
}

pub fn mersenne_prime_exps<N: Nat>() -> impl Iterator<Item = N> {
    primes::<N>().filter(|p| lucas_lehmer(p))
}

pub fn mersenne_primes<N: Nat>() -> impl Iterator<Item = N> {
    mersenne_prime_exps::<N>().map(|p| p.exp2().pred().expect("2^p is positive"))
}

/// Ackermann's function, the inner argument evaluated eagerly.
pub fn ack<N: Nat>(m: &N, x: &N) -> N {
    let mut m = m.clone();
    let mut x = x.clone();
    loop {
        if m.is_e() {
            return x.succ();
        }
        let m1 = m.clone().pred().expect("positive");
        if x.is_e() {
            x = N::one();
        } else {
            x = ack(&m, &x.pred().expect("positive"));
        }
        m = m1;
    }
}

/// One Syracuse step: the odd-part projection of `3n + 2`.
pub fn syracuse<N: Collections>(n: &N) -> N {
    N::pair_rest(&n.add(&n.clone().i())).expect("3n + 2 is positive")
}

/// Syracuse iterates from `n` down to zero, both ends included.
pub fn nsyr<N: Collections>(n: &N) -> Vec<N> {
    let mut out = Vec::new();
    let mut n = n.clone();
    while !n.is_e() {
        let next = syracuse(&n);
        out.push(n);
        n = next;
    }
    out.push(N::e());
    out
}

/// Longest Syracuse trajectory over `0..=m`.
pub fn test_syr<N: Collections>(m: u64) -> usize {
    (0..=m)
        .map(|k| nsyr(&small::<N>(k)).len())
        .max()
        .unwrap_or(0)
}

/// Largest bitsize among the list encodings of the trajectories of `0..=m`.
pub fn compress_syr<N: Collections>(m: u64) -> N {
    (0..=m)
        .map(|k| from_list(&nsyr(&small::<N>(k))).bitsize())
        .reduce(|a, b| a.max2(&b))
        .expect("range is non-empty")
}

/// Bitsize of the list encoding of all trajectory encodings of `0..=m`.
pub fn compress_syr_twice<N: Collections>(m: u64) -> N {
    let codes: Vec<N> = (0..=m).map(|k| from_list(&nsyr(&small::<N>(k)))).collect();
    from_list(&codes).bitsize()
}

/// `2^k = (o applied k times to 0) + 1`.
pub fn a1<N: Nat>(k: &N) -> bool {
    N::e().i().pow(k) == kth(N::o, k, N::e()).succ()
}

/// `2^k = (i applied k−1 times to 0) + 2`, for `k >= 1`.
pub fn a2<N: Nat>(k: &N) -> bool {
    let k1 = k.clone().pred().expect("k >= 1");
    N::e().i().pow(k) == kth(N::i, &k1, N::e()).succ().succ()
}

/// `o` applied `n` times to `b` equals `2^n·(b+1) − 1`; returns both sides.
pub fn a3<N: Nat>(n: &N, b: &N) -> (bool, N, N) {
    let m = N::e().i().pow(n);
    let u = kth(N::o, n, b.clone());
    let v = m.mul(&b.clone().succ()).pred().expect("positive");
    (u == v, u, v)
}

/// `2^x·y` equals `(o applied x times to y−1) + 1`, for `y >= 1`.
pub fn a4<N: Nat>(x: &N, y: &N) -> (bool, N, N) {
    let a = N::e().i().pow(x).mul(y);
    let b = kth(N::o, x, y.clone().pred().expect("y >= 1")).succ();
    (a == b, a, b)
}
