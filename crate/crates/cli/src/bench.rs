//! Timed benchmark suite. Each row prints `name rep elapsed_ms digest`, or
//! `name rep ?` when the representation cannot run it.

use std::fmt;
use std::time::Instant;

use clap::ValueEnum;

use giant::codecs::Collections;
use giant::numtheory::{compress_syr, compress_syr_twice, test_syr, PRIME45};
use giant::workloads as w;
use giant::{view, BijDigits, Nat, RefNat, Tree};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Ack,
    Exp2,
    Sparse,
    Lists,
    Bitsize45,
    Leftshift,
    Primes,
    Mersenne,
    Syracuse,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Rep {
    /// Trees.
    T,
    /// Bijective base-2 digit sequences.
    B,
    /// Ordinary big integers.
    N,
}

impl fmt::Display for Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rep::T => "t",
            Rep::B => "b",
            Rep::N => "n",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchResult {
    pub name: &'static str,
    pub rep: Rep,
    /// Elapsed milliseconds and digest, or `None` when not runnable.
    pub outcome: Option<(u128, String)>,
}

impl fmt::Display for BenchResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Some((ms, digest)) => write!(f, "{} {} {ms} {digest}", self.name, self.rep),
            None => write!(f, "{} {} ?", self.name, self.rep),
        }
    }
}

type Job = fn() -> String;

/// One benchmark row: a job per representation, `None` where not runnable.
struct Row {
    name: &'static str,
    suite: Suite,
    jobs: [Option<Job>; 3],
}

fn dec<N: Nat>(x: &N) -> String {
    view::<N, RefNat>(x).to_string()
}

/// Decimal when it fits in 64 bits, else `bitsize=<k>`.
fn compact(x: &Tree) -> String {
    match x.to_u64() {
        Some(v) => v.to_string(),
        None => format!("bitsize={}", dec(&x.bitsize())),
    }
}

fn bits<N: Nat>(x: N) -> String {
    dec(&x.bitsize())
}

macro_rules! each {
    ($f:ident) => {
        [
            Some($f::<Tree> as Job),
            Some($f::<BijDigits> as Job),
            Some($f::<RefNat> as Job),
        ]
    };
}

fn ack<N: Nat>() -> String {
    w::ack_3_7::<N>()
}

fn exp2<N: Nat>() -> String {
    bits(w::exp2_exp2_14::<N>())
}

fn sparse<N: Collections>() -> String {
    dec(&w::sparse_set::<N>())
}

fn lists<N: Collections>() -> String {
    dec(&w::list_round_trip::<N>(10_000, false))
}

fn lists_dual<N: Collections>() -> String {
    dec(&w::list_round_trip::<N>(10_000, true))
}

fn primes<N: Nat>() -> String {
    w::primes_100::<N>()
}

fn mersenne<N: Nat>() -> String {
    w::mersenne_7::<N>()
}

fn syr<N: Collections>() -> String {
    test_syr::<N>(2000).to_string()
}

fn compress<N: Collections>() -> String {
    dec(&compress_syr::<N>(100))
}

fn registry() -> Vec<Row> {
    let tree_only = |f: Job| [Some(f), None, None];
    vec![
        Row {
            name: "ack-3-7",
            suite: Suite::Ack,
            jobs: each!(ack),
        },
        Row {
            name: "exp2-exp2-14",
            suite: Suite::Exp2,
            jobs: each!(exp2),
        },
        Row {
            name: "sparse-set",
            suite: Suite::Sparse,
            jobs: each!(sparse),
        },
        Row {
            name: "list-round-trip",
            suite: Suite::Lists,
            jobs: each!(lists),
        },
        Row {
            name: "list-round-trip-dual",
            suite: Suite::Lists,
            jobs: each!(lists_dual),
        },
        Row {
            name: "bitsize-mersenne45",
            suite: Suite::Bitsize45,
            jobs: tree_only(|| dec(&w::bitsize_mersenne45())),
        },
        Row {
            name: "bitsize-perfect45",
            suite: Suite::Bitsize45,
            jobs: tree_only(|| dec(&w::bitsize_perfect45())),
        },
        Row {
            name: "large-leftshift",
            suite: Suite::Leftshift,
            jobs: tree_only(|| {
                let p = Tree::from_u64(PRIME45);
                bits(p.leftshift(&p))
            }),
        },
        Row {
            name: "primes-100",
            suite: Suite::Primes,
            jobs: each!(primes),
        },
        Row {
            name: "mersenne-primes-7",
            suite: Suite::Mersenne,
            jobs: each!(mersenne),
        },
        Row {
            name: "test-syracuse",
            suite: Suite::Syracuse,
            jobs: each!(syr),
        },
        Row {
            name: "compress-syracuse",
            suite: Suite::Syracuse,
            jobs: each!(compress),
        },
        Row {
            name: "compress-syracuse-twice",
            suite: Suite::Syracuse,
            jobs: tree_only(|| compact(&compress_syr_twice::<Tree>(20))),
        },
    ]
}

fn index(rep: Rep) -> usize {
    match rep {
        Rep::T => 0,
        Rep::B => 1,
        Rep::N => 2,
    }
}

/// Runs the rows of `suite` for each of `reps`, handing each result to `emit`
/// as soon as it is measured.
pub fn run(suite: Suite, reps: &[Rep], mut emit: impl FnMut(&BenchResult)) {
    for row in registry() {
        if suite != Suite::All && row.suite != suite {
            continue;
        }
        for &rep in reps {
            let outcome = row.jobs[index(rep)].map(|job| {
                let start = Instant::now();
                let digest = job();
                (start.elapsed().as_millis(), digest)
            });
            emit(&BenchResult {
                name: row.name,
                rep,
                outcome,
            });
        }
    }
}
