//! Bijections between naturals and lists, multisets and sets of naturals,
//! bitwise operations borrowed from ordered-set algebra, and isomorphism
//! combinators that move values and operations between those views.

use std::cmp::Ordering;

use crate::error::{NatError, Result};
use crate::nat::Nat;
use crate::tree::Tree;

/// The pairing bijection `(x, y) ↦ 2^x·(2y+1)` from pairs onto positive
/// naturals, with its two projections.
pub trait Collections: Nat {
    fn pair_encode(x: &Self, y: &Self) -> Self {
        x.exp2().mul(&y.clone().o())
    }

    /// Exponent of the largest power of two dividing `z`.
    fn pair_first(z: &Self) -> Result<Self> {
        if z.is_e() {
            return Err(NatError::ProjectionOfZero);
        }
        let mut z = z.clone();
        let mut k = 0usize;
        while !z.is_o() {
            z = z.hf()?;
            k += 1;
        }
        Ok((0..k).fold(Self::e(), |acc, _| acc.succ()))
    }

    /// Odd part of `z`, halved.
    fn pair_rest(z: &Self) -> Result<Self> {
        if z.is_e() {
            return Err(NatError::ProjectionOfZero);
        }
        let mut z = z.clone();
        while !z.is_o() {
            z = z.hf()?;
        }
        z.o_inv()
    }
}

impl Collections for crate::refnat::RefNat {}
impl Collections for crate::bij::BijDigits {}

// The pairing goes through `vmul`, which adds a whole run of `o` digits
// in one node edit.
impl Collections for Tree {
    fn pair_encode(x: &Self, y: &Self) -> Self {
        let two_y = y.clone().o().pred().expect("odd is positive");
        Tree::vmul(x, &two_y).succ()
    }

    fn pair_first(z: &Self) -> Result<Self> {
        match z {
            Tree::T => Err(NatError::ProjectionOfZero),
            Tree::V(_) => Ok(Tree::T),
            Tree::W(_) => match z.clone().pred()? {
                Tree::V(n) => Ok(n.head().clone().succ()),
                _ => unreachable!("predecessor of an even number is odd"),
            },
        }
    }

    fn pair_rest(z: &Self) -> Result<Self> {
        match z {
            Tree::T => Err(NatError::ProjectionOfZero),
            Tree::V(_) => z.clone().o_inv(),
            Tree::W(_) => match z.clone().pred()? {
                Tree::V(n) => {
                    let mut tail = n.tail();
                    match tail.next() {
                        None => Ok(Tree::T),
                        Some(y) => {
                            let rest = Tree::w(y.clone(), tail.cloned().collect());
                            Ok(rest.i_inv()?.succ())
                        }
                    }
                }
                _ => unreachable!("predecessor of an even number is odd"),
            },
        }
    }
}

pub fn to_list<N: Collections>(x: &N) -> Vec<N> {
    let mut out = Vec::new();
    let mut x = x.clone();
    while !x.is_e() {
        out.push(N::pair_first(&x).expect("non-zero"));
        x = N::pair_rest(&x).expect("non-zero");
    }
    out
}

pub fn from_list<N: Collections>(xs: &[N]) -> N {
    xs.iter()
        .rev()
        .fold(N::e(), |acc, x| N::pair_encode(x, &acc))
}

/// Prefix sums.
pub fn list_to_mset<N: Nat>(xs: &[N]) -> Vec<N> {
    let mut acc = N::e();
    xs.iter()
        .map(|x| {
            acc = acc.add(x);
            acc.clone()
        })
        .collect()
}

/// Successive differences; the input must be non-decreasing.
pub fn mset_to_list<N: Nat>(ms: &[N]) -> Result<Vec<N>> {
    let mut prev = N::e();
    ms.iter()
        .map(|m| {
            let d = m
                .sub(&prev)
                .map_err(|_| NatError::Unordered("non-decreasing"))?;
            prev = m.clone();
            Ok(d)
        })
        .collect()
}

pub fn list_to_set<N: Nat>(xs: &[N]) -> Vec<N> {
    let shifted: Vec<N> = xs.iter().map(|x| x.clone().succ()).collect();
    list_to_mset(&shifted)
        .into_iter()
        .map(|m| m.pred().expect("prefix sums of positives are positive"))
        .collect()
}

/// Inverse of [`list_to_set`]; the input must be strictly ascending.
pub fn set_to_list<N: Nat>(xs: &[N]) -> Result<Vec<N>> {
    let shifted: Vec<N> = xs.iter().map(|x| x.clone().succ()).collect();
    let diffs = mset_to_list(&shifted).map_err(|_| NatError::Unordered("strictly ascending"))?;
    diffs
        .into_iter()
        .map(|d| {
            d.pred()
                .map_err(|_| NatError::Unordered("strictly ascending"))
        })
        .collect()
}

pub fn to_mset<N: Collections>(x: &N) -> Vec<N> {
    list_to_mset(&to_list(x))
}

pub fn from_mset<N: Collections>(ms: &[N]) -> Result<N> {
    Ok(from_list(&mset_to_list(ms)?))
}

/// The positions of the one bits of `x`, ascending.
pub fn to_set<N: Collections>(x: &N) -> Vec<N> {
    list_to_set(&to_list(x))
}

pub fn from_set<N: Collections>(xs: &[N]) -> Result<N> {
    Ok(from_list(&set_to_list(xs)?))
}

fn merge<N: Nat>(xs: &[N], ys: &[N], keep_x: bool, keep_y: bool, keep_both: bool) -> Vec<N> {
    let mut out = Vec::with_capacity(xs.len() + ys.len());
    let (mut a, mut b) = (0, 0);
    while a < xs.len() && b < ys.len() {
        match xs[a].compare(&ys[b]) {
            Ordering::Less => {
                if keep_x {
                    out.push(xs[a].clone());
                }
                a += 1;
            }
            Ordering::Greater => {
                if keep_y {
                    out.push(ys[b].clone());
                }
                b += 1;
            }
            Ordering::Equal => {
                if keep_both {
                    out.push(xs[a].clone());
                }
                a += 1;
                b += 1;
            }
        }
    }
    if keep_x {
        out.extend_from_slice(&xs[a..]);
    }
    if keep_y {
        out.extend_from_slice(&ys[b..]);
    }
    out
}

pub fn set_intersect<N: Nat>(xs: &[N], ys: &[N]) -> Vec<N> {
    merge(xs, ys, false, false, true)
}

pub fn set_union<N: Nat>(xs: &[N], ys: &[N]) -> Vec<N> {
    merge(xs, ys, true, true, true)
}

pub fn set_sym_diff<N: Nat>(xs: &[N], ys: &[N]) -> Vec<N> {
    merge(xs, ys, true, true, false)
}

pub fn set_minus<N: Nat>(xs: &[N], ys: &[N]) -> Vec<N> {
    merge(xs, ys, true, false, false)
}

/// Transports a set operation to naturals through [`to_set`]/[`from_set`].
pub fn l_op<N: Collections>(op: impl Fn(&[N], &[N]) -> Vec<N>, x: &N, y: &N) -> N {
    from_set(&op(&to_set(x), &to_set(y))).expect("set operations keep sets ascending")
}

pub fn l_and<N: Collections>(x: &N, y: &N) -> N {
    l_op(set_intersect, x, y)
}

pub fn l_or<N: Collections>(x: &N, y: &N) -> N {
    l_op(set_union, x, y)
}

pub fn l_xor<N: Collections>(x: &N, y: &N) -> N {
    l_op(set_sym_diff, x, y)
}

pub fn l_dif<N: Collections>(x: &N, y: &N) -> N {
    l_op(set_minus, x, y)
}

/// Bitwise if-then-else: bits of `a` where `cond` has a one, bits of `b`
/// elsewhere.
pub fn l_ite<N: Collections>(cond: &N, a: &N, b: &N) -> N {
    let (d, a, b) = (to_set(cond), to_set(a), to_set(b));
    let picked = set_intersect(&set_sym_diff(&a, &b), &d);
    from_set(&set_sym_diff(&picked, &b)).expect("set operations keep sets ascending")
}

/// Complement of `x` within the low `bitlen` bit positions.
pub fn l_not<N: Collections>(bitlen: u64, x: &N) -> Result<N> {
    let xs = to_set(x);
    let bound = (0..bitlen).fold(N::e(), |acc, _| acc.succ());
    if let Some(top) = xs.last() {
        if top.compare(&bound) != Ordering::Less {
            return Err(NatError::NotBelowBitlen {
                element: format!("{top:?}"),
                bitlen,
            });
        }
    }
    let all: Vec<N> = crate::nat::all_from(N::e()).take(bitlen as usize).collect();
    from_set(&set_minus(&all, &xs))
}

/// A pair of mutually inverse maps between a view `A` and the naturals.
pub struct Iso<A, N> {
    forward: fn(&A) -> Result<N>,
    backward: fn(&N) -> A,
}

impl<A, N> Iso<A, N> {
    pub const fn new(forward: fn(&A) -> Result<N>, backward: fn(&N) -> A) -> Self {
        Iso { forward, backward }
    }

    /// View to natural.
    pub fn from(&self, a: &A) -> Result<N> {
        (self.forward)(a)
    }

    /// Natural to view.
    pub fn to(&self, n: &N) -> A {
        (self.backward)(n)
    }
}

pub fn nat<N: Collections>() -> Iso<N, N> {
    Iso::new(|x| Ok(x.clone()), N::clone)
}

pub fn list<N: Collections>() -> Iso<Vec<N>, N> {
    Iso::new(|xs| Ok(from_list(xs)), to_list)
}

pub fn mset<N: Collections>() -> Iso<Vec<N>, N> {
    Iso::new(|xs| from_mset(xs), to_mset)
}

pub fn set<N: Collections>() -> Iso<Vec<N>, N> {
    Iso::new(|xs| from_set(xs), to_set)
}

/// Morphs `x` from the `this` view into the `that` view.
pub fn as_view<A, B, N>(that: &Iso<B, N>, this: &Iso<A, N>, x: &A) -> Result<B> {
    Ok(that.to(&this.from(x)?))
}

/// Applies a unary operation on naturals to a value seen through `iso`.
pub fn lend1<A, N>(op: impl FnOnce(N) -> N, iso: &Iso<A, N>, x: &A) -> Result<A> {
    Ok(iso.to(&op(iso.from(x)?)))
}

pub fn lend2<A, N>(op: impl FnOnce(&N, &N) -> N, iso: &Iso<A, N>, x: &A, y: &A) -> Result<A> {
    Ok(iso.to(&op(&iso.from(x)?, &iso.from(y)?)))
}
