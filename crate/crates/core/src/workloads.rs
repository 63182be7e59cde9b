//! Benchmark workloads shared by the command line, the acceptance checks and
//! the criterion suites. Each returns a small digest of its result.

use crate::codecs::{from_list, from_set, to_list, Collections};
use crate::nat::{view, Nat};
use crate::numtheory::{self, mersenne45, perfect45};
use crate::refnat::RefNat;
use crate::tree::Tree;

fn small<N: Nat>(v: u64) -> N {
    view(&RefNat::from(v))
}

fn decimal<N: Nat>(x: &N) -> String {
    view::<N, RefNat>(x).to_string()
}

/// Elements of the sparse set: 101, 2002, ... in steps of 1901 up to 100000.
pub fn sparse_elements() -> Vec<u64> {
    (101..=100_000).step_by(1901).collect()
}

pub fn ack_3_7<N: Nat>() -> String {
    decimal(&numtheory::ack(&small::<N>(3), &small::<N>(7)))
}

pub fn exp2_exp2_14<N: Nat>() -> N {
    small::<N>(14).exp2().exp2()
}

/// Bitsize of the sparse set's encoding.
pub fn sparse_set<N: Collections>() -> N {
    let xs: Vec<N> = sparse_elements().into_iter().map(small).collect();
    from_set(&xs).expect("ascending").bitsize()
}

/// Bitsize after a list encode, decode and re-encode of the sparse elements,
/// optionally dualized first.
pub fn list_round_trip<N: Collections>(m: u64, dualized: bool) -> N {
    let xs: Vec<N> = (101..=3000 + m)
        .step_by(1901)
        .map(|v| {
            let x = small::<N>(v);
            if dualized {
                x.dual()
            } else {
                x
            }
        })
        .collect();
    from_list(&to_list(&from_list(&xs))).bitsize()
}

pub fn bitsize_mersenne45() -> Tree {
    mersenne45().bitsize()
}

pub fn bitsize_perfect45() -> Tree {
    perfect45().bitsize()
}

/// The 100th prime.
pub fn primes_100<N: Nat>() -> String {
    decimal(&numtheory::primes::<N>().nth(99).expect("unbounded"))
}

/// The 7th Mersenne prime.
pub fn mersenne_7<N: Nat>() -> String {
    decimal(&numtheory::mersenne_primes::<N>().nth(6).expect("unbounded"))
}
