use proptest::prelude::*;

use giant::codecs::{from_list, from_mset, from_set, to_list, to_mset, to_set};
use giant::{from_list_alt, to_list_alt, view, BijDigits, Nat, RefNat, Tree};

fn r(v: u64) -> RefNat {
    RefNat::from(v)
}

fn t(v: u64) -> Tree {
    Tree::from_u64(v)
}

fn b(v: u64) -> BijDigits {
    view(&r(v))
}

fn back<N: Nat>(x: &N) -> RefNat {
    view(x)
}

proptest! {
    #[test]
    fn succ_pred_inverse(v in 0u64..1_000_000) {
        prop_assert_eq!(t(v).succ().pred().unwrap(), t(v));
        prop_assert_eq!(b(v).succ().pred().unwrap(), b(v));
        prop_assert_eq!(back(&t(v).succ()), r(v + 1));
        if v > 0 {
            prop_assert_eq!(t(v).pred().unwrap().succ(), t(v));
        }
    }

    #[test]
    fn ring_laws(x in 0u64..=512, y in 0u64..=512, z in 0u64..=512) {
        let (tx, ty, tz) = (t(x), t(y), t(z));
        prop_assert_eq!(tx.add(&ty), ty.add(&tx));
        prop_assert_eq!(tx.mul(&ty), ty.mul(&tx));
        prop_assert_eq!(tx.add(&ty).add(&tz), tx.add(&ty.add(&tz)));
        prop_assert_eq!(tx.mul(&ty).mul(&tz), tx.mul(&ty.mul(&tz)));
        prop_assert_eq!(tx.mul(&ty.add(&tz)), tx.mul(&ty).add(&tx.mul(&tz)));
        let (bx, by, bz) = (b(x), b(y), b(z));
        prop_assert_eq!(bx.mul(&by.add(&bz)), bx.mul(&by).add(&bx.mul(&bz)));
        prop_assert_eq!(back(&bx.mul(&by).add(&bz)), r(x * y + z));
    }

    #[test]
    fn division_law(x in 0u64..100_000, y in 1u64..5_000) {
        let (q, m) = t(x).div_and_rem(&t(y)).unwrap();
        prop_assert_eq!(back(&q), r(x / y));
        prop_assert_eq!(back(&m), r(x % y));
        prop_assert_eq!(q.mul(&t(y)).add(&m), t(x));
        let (q, m) = b(x).div_and_rem(&b(y)).unwrap();
        prop_assert_eq!(back(&q), r(x / y));
        prop_assert_eq!(back(&m), r(x % y));
    }

    #[test]
    fn exp2_and_leftshift(a in 0u64..=12, y in 0u64..=64) {
        let two = t(2);
        prop_assert_eq!(t(a).exp2(), two.pow(&t(a)));
        prop_assert_eq!(t(a).leftshift(&t(y)), t(a).exp2().mul(&t(y)));
        prop_assert_eq!(back(&t(a).leftshift(&t(y))), r(y << a));
        prop_assert_eq!(b(a).leftshift(&b(y)), b(a).exp2().mul(&b(y)));
    }

    #[test]
    fn fast_paths_agree_with_generic(v in 0u64..4096, w in 0u64..64) {
        let x = t(v);
        prop_assert_eq!(back(&x.exp2_fast()), RefNat::oracle_exp2(v));
        prop_assert_eq!(x.bitsize_fast(), t(r(v).oracle_bitsize()));
        prop_assert_eq!(back(&x.dual_fast()), back(&b(v).dual()));
        prop_assert_eq!(back(&t(w).leftshift_fast(&x)), back(&b(w).leftshift(&b(v))));
    }

    #[test]
    fn dual_involution(v in 0u64..u64::MAX / 4) {
        prop_assert_eq!(t(v).dual().dual(), t(v));
        prop_assert_eq!(b(v).dual().dual(), b(v));
        prop_assert_eq!(back(&t(v).dual()), back(&b(v).dual()));
    }

    #[test]
    fn cons_decons(x in 0u64..10_000, y in 0u64..10_000) {
        let c = Tree::cons(&t(x), &t(y));
        prop_assert_eq!(c.decons().unwrap(), (t(x), t(y)));
        prop_assert_eq!(back(&c), back(&BijDigits::cons(&b(x), &b(y))));
        prop_assert_eq!(from_list_alt(&to_list_alt(&t(x))), t(x));
    }

    #[test]
    fn collection_round_trips(v in 0u64..1_000_000) {
        prop_assert_eq!(from_list(&to_list(&t(v))), t(v));
        prop_assert_eq!(from_set(&to_set(&t(v))).unwrap(), t(v));
        prop_assert_eq!(from_mset(&to_mset(&t(v))).unwrap(), t(v));
        let bits: Vec<u64> = (0..64).filter(|k| v >> k & 1 == 1).collect();
        let got: Vec<u64> = to_set(&r(v)).iter().map(|e| e.to_u64().unwrap()).collect();
        prop_assert_eq!(got, bits);
    }

    #[test]
    fn text_round_trip(v in any::<u64>()) {
        let x = t(v);
        prop_assert_eq!(x.to_string().parse::<Tree>().unwrap(), x.clone());
        prop_assert_eq!(b(v).to_string().parse::<BijDigits>().unwrap(), b(v));
        prop_assert_eq!(x.to_u64(), Some(v));
    }
}
