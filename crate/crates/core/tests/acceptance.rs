//! Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use giant::codecs::{
    from_list, from_set, l_and, l_dif, l_ite, l_not, l_or, l_xor, to_list, to_set, Collections,
};
use giant::nat::succ_depth;
use giant::numtheory::{
    a1, a2, a3, a4, mersenne45, mersenne_prime_exps, nsyr, perfect45, perfect_generic,
    SpecialNumbers, PRIME45,
};
use giant::sweep::{cross_check, cross_check_pow, failures};
use giant::{to_list_alt, view, BijDigits, Dag, Nat, RefNat, Tree};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn r(v: u64) -> RefNat {
    RefNat::from(v)
}

fn t(v: u64) -> Tree {
    Tree::from_u64(v)
}

fn small<N: Nat>(v: u64) -> N {
    view(&r(v))
}

fn dec<N: Nat>(x: &N) -> String {
    view::<N, RefNat>(x).to_string()
}

fn u<N: Nat>(x: &N) -> u64 {
    view::<N, RefNat>(x).to_u64().expect("fits in u64")
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn check(ok: bool, pass: String, fail: String) -> Outcome {
    if ok {
        Ok(pass)
    } else {
        Err(fail)
    }
}

fn expect_eq(what: &str, got: String, want: &str) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, want {want}"))
    }
}

fn ac1_oracle_equivalence() -> Outcome {
    let (bad, elapsed) = timed(|| {
        let mut bad = cross_check::<Tree>(511);
        bad.extend(cross_check::<BijDigits>(511));
        bad.extend(cross_check_pow::<Tree>(8, 6));
        bad.extend(cross_check_pow::<BijDigits>(8, 6));
        bad
    });
    let limit = Duration::from_secs(300);
    check(
        bad.is_empty() && elapsed < limit,
        format!("512x512 sweep on Tree and BijDigits exact in {elapsed:.2?}"),
        format!(
            "{} mismatches (first: {:?}) in {elapsed:.2?}",
            bad.len(),
            bad.first()
        ),
    )
}

fn ac2_golden_sessions() -> Outcome {
    let m127 = Tree::mersenne(&t(127));
    let set: Vec<Tree> = [1, 100, 123, 234].into_iter().map(t).collect();
    let encoded = from_set(&set).map_err(|e| e.to_string())?;
    let nsyr_table: Vec<String> = (0..8)
        .map(|k| {
            let xs: Vec<String> = nsyr(&t(k)).iter().map(dec).collect();
            format!("[{}]", xs.join(","))
        })
        .collect();
    let alt_table: Vec<String> = (0..=20)
        .map(|k| {
            let xs: Vec<String> = to_list_alt(&t(k)).iter().map(dec).collect();
            format!("[{}]", xs.join(","))
        })
        .collect();
    let to_set_1234: Vec<String> = to_set(&t(1234)).iter().map(dec).collect();
    let rows = [
        ("tree 42", t(42).to_string(), "W (V T []) [T,T,T]"),
        ("exp2 5", t(5).exp2().to_string(), "W T [V (V T []) []]"),
        ("exp2 5 value", dec(&t(5).exp2()), "32"),
        (
            "leftshift 10 1",
            t(10).leftshift(&t(1)).to_string(),
            "W T [W T [V T []]]",
        ),
        ("leftshift 10 1 value", dec(&t(10).leftshift(&t(1))), "1024"),
        ("mersenne 127", m127.to_string(), "V (W (V T [T]) []) []"),
        (
            "mersenne 127 value",
            dec(&m127),
            "170141183460469231731687303715884105727",
        ),
        (
            "fermat 11",
            Tree::fermat(&t(11)).to_string(),
            "V T [T,V T [W T [V T []]]]",
        ),
        (
            "mersenne45",
            mersenne45().to_string(),
            "V (W T [V (V T []) [],T,T,T,W T [],V T [],T,W T [],W T [],T,V T [],T,T]) []",
        ),
        (
            "from_set tree",
            encoded.to_string(),
            "W (V T []) [V T [T,W T [],T],T,V T [V T [],T],T,V T [W T [],T,T]]",
        ),
        (
            "from_set value",
            dec(&encoded),
            "27606985387162255149739023449108112443629669818608757680508075841159170",
        ),
        ("to_set 1234", to_set_1234.join(","), "1,4,6,7,10"),
        (
            "nsyr 0..7",
            nsyr_table.join(" "),
            "[0] [1,2,0] [2,0] [3,5,8,6,2,0] [4,3,5,8,6,2,0] [5,8,6,2,0] [6,2,0] [7,11,17,26,2,0]",
        ),
        (
            "to_list_alt 0..20",
            alt_table.join(" "),
            "[] [0] [1] [2] [0,0] [0,1] [3] [4] [0,2] [0,0,0] [1,0] [1,1] [0,0,1] [0,3] [5] [6] \
             [0,4] [0,0,2] [1,2] [1,0,0] [0,0,0,0]",
        ),
    ];
    for (what, got, want) in rows.iter() {
        expect_eq(what, got.clone(), want)?;
    }
    Ok(format!("{} sessions byte-exact", rows.len()))
}

fn ac3_giant_bitsizes() -> Outcome {
    let (bits, elapsed) = timed(|| mersenne45().bitsize());
    let bits = dec(&bits);
    let m_nodes = Dag::fold(&mersenne45()).node_count();
    let p_nodes = Dag::fold(&perfect45()).node_count();
    check(
        bits == PRIME45.to_string()
            && elapsed < Duration::from_secs(1)
            && m_nodes == 6
            && p_nodes == 7,
        format!("bitsize {bits} in {elapsed:.2?}; dag nodes {m_nodes} and {p_nodes}"),
        format!(
            "bitsize {bits} in {elapsed:.2?}; dag nodes {m_nodes} (want 6) and {p_nodes} (want 7)"
        ),
    )
}

fn ac4_exp2_exp2_14() -> Outcome {
    let (x, elapsed) = timed(|| t(14).exp2_fast().exp2_fast());
    let bits = dec(&x.bitsize_fast());
    let oracle = RefNat::oracle_exp2(1 << 14).oracle_bitsize();
    check(
        bits == "16385" && elapsed < Duration::from_millis(50),
        format!("built in {elapsed:.2?}, bitsize {bits}"),
        format!(
            "built in {elapsed:.2?}, bitsize {bits} but criterion requires 16385 \
             (independent oracle: bijective bitsize of 2^16384 is {oracle})"
        ),
    )
}

fn ac5_sparse_set_ratio() -> Outcome {
    fn best<N: Collections>(runs: usize) -> (String, Duration) {
        let mut best = Duration::MAX;
        let mut digest = String::new();
        for _ in 0..runs {
            let (bits, d) = timed(giant::workloads::sparse_set::<N>);
            digest = dec(&bits);
            best = best.min(d);
        }
        (digest, best)
    }
    let (tree_bits, tree) = best::<Tree>(5);
    let (bij_bits, bij) = best::<BijDigits>(1);
    let ratio = bij.as_secs_f64() / tree.as_secs_f64().max(1e-9);
    check(
        tree_bits == bij_bits && ratio >= 10.0,
        format!("Tree {tree:.2?}, BijDigits {bij:.2?}, ratio {ratio:.0}x"),
        format!(
            "Tree {tree:.2?} ({tree_bits}), BijDigits {bij:.2?} ({bij_bits}), ratio {ratio:.1}x"
        ),
    )
}

fn ac6_perfect_numbers() -> Outcome {
    for p in 2..=20u64 {
        let want = RefNat::oracle_exp2(p - 1)
            .oracle_mul(&RefNat::oracle_exp2(p).oracle_sub(&r(1)).unwrap());
        let got = [
            (
                "RefNat",
                dec(&RefNat::perfect(&r(p)).map_err(|e| e.to_string())?),
            ),
            (
                "BijDigits",
                dec(&BijDigits::perfect(&small(p)).map_err(|e| e.to_string())?),
            ),
            (
                "Tree shortcut",
                dec(&Tree::perfect(&t(p)).map_err(|e| e.to_string())?),
            ),
            (
                "Tree generic",
                dec(&perfect_generic(&t(p)).map_err(|e| e.to_string())?),
            ),
        ];
        for (rep, v) in got {
            expect_eq(&format!("perfect({p}) on {rep}"), v, &want.to_string())?;
        }
    }
    let (p2, p3) = (
        dec(&Tree::perfect(&t(2)).unwrap()),
        dec(&Tree::perfect(&t(3)).unwrap()),
    );
    Ok(format!(
        "p in 2..=20 on all representations; perfect(2) = {p2}, perfect(3) = {p3}"
    ))
}

fn ac7_lucas_lehmer() -> Outcome {
    fn prime(n: u64) -> bool {
        n >= 2
            && (2..)
                .take_while(|d| d * d <= n)
                .all(|d| !n.is_multiple_of(d))
    }
    // p = 2 is excluded: the residue test starts from 4 and never reduces it.
    let oracle: Vec<u64> = (3..=31u64)
        .filter(|&p| prime(p) && prime((1 << p) - 1))
        .collect();
    let on_ref: Vec<u64> = mersenne_prime_exps::<RefNat>()
        .take(7)
        .map(|p| u(&p))
        .collect();
    let on_tree: Vec<u64> = mersenne_prime_exps::<Tree>()
        .take(7)
        .map(|p| u(&p))
        .collect();
    let want = vec![3, 5, 7, 13, 17, 19, 31];
    check(
        on_ref == want
            && on_tree == want
            && oracle == want
            && !giant::numtheory::lucas_lehmer(&r(2)),
        format!("{on_ref:?} on RefNat and Tree; p = 2 excluded"),
        format!("RefNat {on_ref:?}, Tree {on_tree:?}, oracle {oracle:?}"),
    )
}

fn ac8_bitwise() -> Outcome {
    fn suite<N: Collections>() -> Vec<u64> {
        let table: Vec<N> = (0..256).map(small).collect();
        let mut bad = failures(256 * 256, |k| {
            let (x, y) = (k / 256, k % 256);
            let (a, b) = (&table[x as usize], &table[y as usize]);
            u(&l_and(a, b)) == x & y
                && u(&l_or(a, b)) == x | y
                && u(&l_xor(a, b)) == x ^ y
                && u(&l_dif(a, b)) == x & !y
        });
        bad.extend(failures(32 * 32 * 32, |k| {
            let (c, x, y) = (k / 1024, (k / 32) % 32, k % 32);
            let got = l_ite(&table[c as usize], &table[x as usize], &table[y as usize]);
            u(&got) == (c & x) | (!c & y)
        }));
        for l in 0..=10u64 {
            for x in 0..(1u64 << l) {
                match l_not(l, &small::<N>(x)) {
                    Ok(v) if u(&v) == ((1 << l) - 1) ^ x => {}
                    _ => bad.push(l << 32 | x),
                }
            }
        }
        bad
    }
    let bad_tree = suite::<Tree>();
    let bad_bij = suite::<BijDigits>();
    let bad_ref = suite::<RefNat>();
    let total = bad_tree.len() + bad_bij.len() + bad_ref.len();
    check(
        total == 0,
        "and/or/xor/dif on 256x256, ite on 32^3, not for l <= 10, on all representations".into(),
        format!("{total} failures"),
    )
}

fn ac9_properties() -> Outcome {
    fn per_rep<N: Collections>() -> Result<(), String> {
        let vals: Vec<N> = (0..=4096).map(small).collect();
        for (k, x) in vals.iter().enumerate() {
            let k = k as u64;
            let s = x.clone().succ();
            if u(&s) != k + 1 || s.pred().ok().as_ref() != Some(x) {
                return Err(format!("succ/pred at {k}"));
            }
            if x.dual().dual() != *x {
                return Err(format!("dual at {k}"));
            }
            if from_list(&to_list(x)) != *x {
                return Err(format!("list round trip at {k}"));
            }
            if from_set(&to_set(x)).ok().as_ref() != Some(x) {
                return Err(format!("set round trip at {k}"));
            }
            if k > 0 {
                let (h, tl) = x.decons().map_err(|e| e.to_string())?;
                if N::cons(&h, &tl) != *x {
                    return Err(format!("decons/cons at {k}"));
                }
            }
        }
        for x in &vals[..64] {
            for y in &vals[..64] {
                if N::cons(x, y).decons().ok() != Some((x.clone(), y.clone())) {
                    return Err(format!("cons/decons at {}, {}", u(x), u(y)));
                }
            }
        }
        for k in 0..=64u64 {
            let kn: N = small(k);
            let ok = a1(&kn)
                && (k == 0 || a2(&kn))
                && [0, 1, 7, 100].iter().all(|&b| a3(&kn, &small(b)).0)
                && [1, 2, 9, 1000].iter().all(|&y| a4(&kn, &small(y)).0);
            if !ok {
                return Err(format!("a1-a4 at k = {k}"));
            }
        }
        Ok(())
    }
    per_rep::<Tree>().map_err(|e| format!("Tree: {e}"))?;
    per_rep::<BijDigits>().map_err(|e| format!("BijDigits: {e}"))?;
    per_rep::<RefNat>().map_err(|e| format!("RefNat: {e}"))?;

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut accepted = 0;
    let mut drawn = 0;
    while accepted < 500 {
        drawn += 1;
        let x = Tree::random(&mut rng, 4);
        // Depth-4 trees can denote towers of powers; keep the expandable ones.
        if !x.bitsize_u64().is_some_and(|b| b <= 1 << 20) {
            continue;
        }
        accepted += 1;
        let back: Tree = view(&view::<Tree, RefNat>(&x));
        let back_bij: Tree = view(&view::<Tree, BijDigits>(&x));
        let reparsed: Tree = x.to_string().parse().map_err(|e| format!("{e}"))?;
        if back != x || back_bij != x || reparsed != x || x.dual().dual() != x {
            return Err(format!("canonicity round trip failed on {x}"));
        }
    }
    Ok(format!(
        "0..=4096 on all representations, a1-a4 for k <= 64, {accepted} random trees ({drawn} drawn)"
    ))
}

fn ac10_succ_depth() -> Outcome {
    let n = 1u64 << 16;
    let mean = |total: usize| total as f64 / n as f64;
    let tree = mean((0..n).map(|k| succ_depth(&t(k))).sum());
    let bij = mean((0..n).map(|k| succ_depth(&small::<BijDigits>(k))).sum());
    check(
        tree <= 3.0 && bij <= 3.0,
        format!("mean depth {tree:.4} on Tree, {bij:.4} on BijDigits"),
        format!("mean depth {tree:.4} on Tree, {bij:.4} on BijDigits, bound 3"),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("AC1 oracle equivalence", ac1_oracle_equivalence),
        ("AC2 golden sessions", ac2_golden_sessions),
        ("AC3 giant bitsizes and dags", ac3_giant_bitsizes),
        ("AC4 exp2 (exp2 14)", ac4_exp2_exp2_14),
        ("AC5 sparse set speedup", ac5_sparse_set_ratio),
        ("AC6 perfect numbers", ac6_perfect_numbers),
        ("AC7 mersenne exponents", ac7_lucas_lehmer),
        ("AC8 bitwise suite", ac8_bitwise),
        ("AC9 property suites", ac9_properties),
        ("AC10 succ depth", ac10_succ_depth),
    ];
    let filter: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let mut failed = 0;
    for (name, run) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        match run() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
