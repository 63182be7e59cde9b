//! The representation-generic natural number contract.
//!
//! A representation supplies six primitives: the empty value `e`, the digit
//! constructors `o` (n ↦ 2n+1) and `i` (n ↦ 2n+2), their inverses and the
//! recognizer `is_o`. Everything else (successor, arithmetic, comparison,
//! division, the run-splitting pairing `cons`/`decons`, ...) is written once
//! in [`generic`] against those primitives and offered as overridable
//! default methods on [`Nat`].
//!
//! The generic algorithms walk a number one bijective base-2 digit at a time.
//! They are written as loops over an explicit frame stack rather than as
//! recursion, so operands with millions of digits do not exhaust the call
//! stack.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{NatError, Result};

/// One bijective base-2 digit: `O` is the constructor `o`, `I` is `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Digit {
    O,
    I,
}

impl Digit {
    pub fn flip(self) -> Digit {
        match self {
            Digit::O => Digit::I,
            Digit::I => Digit::O,
        }
    }

    fn apply<N: Nat>(self, x: N) -> N {
        match self {
            Digit::O => x.o(),
            Digit::I => x.i(),
        }
    }
}

/// Natural numbers built from the empty value and two digit constructors.
///
/// Values are immutable. The primitives and `succ`/`pred` consume their
/// receiver so that representations with owned storage can edit in place;
/// everything else borrows.
pub trait Nat: Clone + Eq + fmt::Debug + Send + Sync + 'static {
    /// The empty digit sequence, zero.
    fn e() -> Self;
    /// `n ↦ 2n+1`.
    fn o(self) -> Self;
    /// `n ↦ 2n+2`.
    fn i(self) -> Self;
    /// Inverse of [`Nat::o`]; fails unless the value is odd.
    fn o_inv(self) -> Result<Self>;
    /// Inverse of [`Nat::i`]; fails unless the value is even and positive.
    fn i_inv(self) -> Result<Self>;
    /// True when the outermost constructor is `o`.
    fn is_o(&self) -> bool;

    fn is_e(&self) -> bool {
        *self == Self::e()
    }

    fn is_i(&self) -> bool {
        !(self.is_e() || self.is_o())
    }

    fn one() -> Self {
        Self::e().o()
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Bijective base-2 digits, first-applied (least significant) first.
    fn digits(&self) -> Vec<Digit> {
        generic::digits(self)
    }

    /// Builds a value from digits given first-applied first.
    fn from_digits(digits: &[Digit]) -> Self {
        generic::from_digits(digits)
    }

    fn succ(self) -> Self {
        generic::succ(self)
    }

    fn pred(self) -> Result<Self> {
        generic::pred(self)
    }

    fn add(&self, y: &Self) -> Self {
        generic::add(self, y)
    }

    fn sub(&self, y: &Self) -> Result<Self> {
        generic::sub(self, y)
    }

    fn compare(&self, y: &Self) -> Ordering {
        generic::compare(self, y)
    }

    fn min2(&self, y: &Self) -> Self {
        if self.compare(y) == Ordering::Less {
            self.clone()
        } else {
            y.clone()
        }
    }

    fn max2(&self, y: &Self) -> Self {
        if self.compare(y) == Ordering::Less {
            y.clone()
        } else {
            self.clone()
        }
    }

    fn mul(&self, y: &Self) -> Self {
        generic::mul(self, y)
    }

    fn db(&self) -> Self {
        generic::db(self)
    }

    fn hf(&self) -> Result<Self> {
        generic::hf(self)
    }

    fn pow(&self, y: &Self) -> Self {
        generic::pow(self, y)
    }

    fn exp2(&self) -> Self {
        generic::exp2(self)
    }

    /// `2^self · y`.
    fn leftshift(&self, y: &Self) -> Self {
        generic::leftshift(self, y)
    }

    fn div_and_rem(&self, y: &Self) -> Result<(Self, Self)> {
        generic::div_and_rem(self, y)
    }

    fn divide(&self, y: &Self) -> Result<Self> {
        self.div_and_rem(y).map(|(q, _)| q)
    }

    fn remainder(&self, y: &Self) -> Result<Self> {
        self.div_and_rem(y).map(|(_, r)| r)
    }

    /// Swaps every `o` digit with `i` and vice versa.
    fn dual(&self) -> Self {
        generic::dual(self)
    }

    /// Number of digits in bijective base 2.
    fn bitsize(&self) -> Self {
        generic::bitsize(self)
    }

    /// Size of the representation; the digit count unless overridden.
    fn repsize(&self) -> Self {
        self.bitsize()
    }

    /// Splits a positive number into its first digit run and the remainder.
    fn decons(&self) -> Result<(Self, Self)> {
        generic::decons(self)
    }

    /// Inverse of [`Nat::decons`]: a bijection from pairs onto positive numbers.
    fn cons(x: &Self, y: &Self) -> Self {
        generic::cons(x, y)
    }
}

/// Converts between representations, digit by digit.
pub fn view<A: Nat, B: Nat>(x: &A) -> B {
    B::from_digits(&x.digits())
}

/// The unbounded stream `x, x+1, x+2, ...`.
pub fn all_from<N: Nat>(x: N) -> impl Iterator<Item = N> {
    std::iter::successors(Some(x), |v| Some(v.clone().succ()))
}

/// Number of nested successor calls the generic successor makes on `x`:
/// one plus the length of the outermost run of `i` digits.
pub fn succ_depth<N: Nat>(x: &N) -> usize {
    generic::succ_counted(x.clone()).1
}

/// Bijection from naturals to lists through repeated [`Nat::decons`].
pub fn to_list_alt<N: Nat>(x: &N) -> Vec<N> {
    let mut out = Vec::new();
    let mut x = x.clone();
    while !x.is_e() {
        let (hd, tl) = x.decons().expect("non-zero value decons");
        out.push(hd);
        x = tl;
    }
    out
}

/// Inverse of [`to_list_alt`].
pub fn from_list_alt<N: Nat>(xs: &[N]) -> N {
    xs.iter().rev().fold(N::e(), |acc, x| N::cons(x, &acc))
}

/// Applies `f` `k` times, counting `k` down with the predecessor.
pub fn kth<N: Nat>(f: impl Fn(N) -> N, k: &N, x: N) -> N {
    let mut k = k.clone();
    let mut x = x;
    while !k.is_e() {
        x = f(x);
        k = k.pred().expect("k is positive");
    }
    x
}

/// The digit-at-a-time algorithms shared by every representation.
///
/// Trait methods default to these; representation-specific overrides can be
/// checked against them directly.
pub mod generic {
    use super::*;

    pub(crate) enum Split<N> {
        E,
        O(N),
        I(N),
    }

    pub(crate) fn split<N: Nat>(x: N) -> Split<N> {
        if x.is_e() {
            Split::E
        } else if x.is_o() {
            Split::O(x.o_inv().expect("recognized o"))
        } else {
            Split::I(x.i_inv().expect("recognized i"))
        }
    }

    // Caller guarantees x is not e.
    fn split_digit<N: Nat>(x: N) -> (Digit, N) {
        match split(x) {
            Split::O(y) => (Digit::O, y),
            Split::I(y) => (Digit::I, y),
            Split::E => unreachable!("split_digit on e"),
        }
    }

    fn repeat<N: Nat>(mut x: N, f: impl Fn(N) -> N, times: usize) -> N {
        for _ in 0..times {
            x = f(x);
        }
        x
    }

    fn count<N: Nat>(n: usize) -> N {
        repeat(N::e(), N::succ, n)
    }

    pub fn digits<N: Nat>(x: &N) -> Vec<Digit> {
        let mut out = Vec::new();
        let mut x = x.clone();
        loop {
            match split(x) {
                Split::E => break,
                Split::O(y) => {
                    out.push(Digit::O);
                    x = y;
                }
                Split::I(y) => {
                    out.push(Digit::I);
                    x = y;
                }
            }
        }
        out.reverse();
        out
    }

    pub fn from_digits<N: Nat>(digits: &[Digit]) -> N {
        digits.iter().fold(N::e(), |acc, d| d.apply(acc))
    }

    pub(crate) fn succ_counted<N: Nat>(mut x: N) -> (N, usize) {
        let mut run = 0;
        let base = loop {
            match split(x) {
                Split::E => break N::one(),
                Split::O(y) => break y.i(),
                Split::I(y) => {
                    run += 1;
                    x = y;
                }
            }
        };
        (repeat(base, N::o, run), run + 1)
    }

    pub fn succ<N: Nat>(x: N) -> N {
        succ_counted(x).0
    }

    pub fn pred<N: Nat>(mut x: N) -> Result<N> {
        let mut run = 0;
        let base = loop {
            if x.is_one() {
                break N::e();
            }
            match split(x) {
                Split::E => return Err(NatError::PredOfZero),
                Split::I(y) => break y.o(),
                Split::O(y) => {
                    run += 1;
                    x = y;
                }
            }
        };
        Ok(repeat(base, N::i, run))
    }

    pub fn add<N: Nat>(x: &N, y: &N) -> N {
        let (mut x, mut y) = (x.clone(), y.clone());
        let mut frames = Vec::new();
        let base = loop {
            if x.is_e() {
                break y;
            }
            if y.is_e() {
                break x;
            }
            let (dx, x1) = split_digit(x);
            let (dy, y1) = split_digit(y);
            frames.push((dx, dy));
            x = x1;
            y = y1;
        };
        frames.into_iter().rev().fold(base, |r, frame| match frame {
            (Digit::O, Digit::O) => r.i(),
            (Digit::I, Digit::I) => r.succ().i(),
            _ => r.succ().o(),
        })
    }

    pub fn sub<N: Nat>(x: &N, y: &N) -> Result<N> {
        let (mut x, mut y) = (x.clone(), y.clone());
        let mut frames = Vec::new();
        let base = loop {
            if y.is_e() {
                break x;
            }
            if x.is_e() {
                return Err(NatError::Underflow);
            }
            let (dx, x1) = split_digit(x);
            let (dy, y1) = split_digit(y);
            frames.push((dx, dy));
            x = x1;
            y = y1;
        };
        let dec = |v: N| v.pred().map_err(|_| NatError::Underflow);
        frames
            .into_iter()
            .rev()
            .try_fold(base, |r, frame| match frame {
                (Digit::O, Digit::O) | (Digit::I, Digit::I) => dec(r.o()),
                (Digit::O, Digit::I) => dec(dec(r.o())?),
                (Digit::I, Digit::O) => Ok(r.o()),
            })
    }

    pub fn compare<N: Nat>(x: &N, y: &N) -> Ordering {
        let (mut x, mut y) = (x.clone(), y.clone());
        // Deepest digit mismatch decides when the remaining prefixes tie.
        let mut tie_break = Ordering::Equal;
        let base = loop {
            match (x.is_e(), y.is_e()) {
                (true, true) => break Ordering::Equal,
                (true, false) => break Ordering::Less,
                (false, true) => break Ordering::Greater,
                _ => {}
            }
            let (dx, x1) = split_digit(x);
            let (dy, y1) = split_digit(y);
            match (dx, dy) {
                (Digit::O, Digit::I) => tie_break = Ordering::Less,
                (Digit::I, Digit::O) => tie_break = Ordering::Greater,
                _ => {}
            }
            x = x1;
            y = y1;
        };
        if base == Ordering::Equal {
            tie_break
        } else {
            base
        }
    }

    pub fn mul<N: Nat>(x: &N, y: &N) -> N {
        if x.is_e() || y.is_e() {
            return N::e();
        }
        let x1 = x.clone().pred().expect("x positive");
        let y1 = y.clone().pred().expect("y positive");
        let r = x1.digits().into_iter().fold(y1.clone(), |r, d| match d {
            Digit::O => r.o(),
            Digit::I => y1.add(&r.o()).succ(),
        });
        r.succ()
    }

    pub fn db<N: Nat>(x: &N) -> N {
        x.clone().o().pred().expect("o x is positive")
    }

    pub fn hf<N: Nat>(x: &N) -> Result<N> {
        if !x.is_i() {
            return Err(NatError::HalfOfOdd);
        }
        Ok(x.clone().i_inv()?.succ())
    }

    pub fn pow<N: Nat>(x: &N, y: &N) -> N {
        let mut base = x.clone();
        let mut y = y.clone();
        let mut factors = Vec::new();
        loop {
            match split(y) {
                Split::E => break,
                Split::O(y1) => {
                    y = y1;
                    if y.is_e() {
                        factors.push(base);
                        break;
                    }
                    let sq = base.mul(&base);
                    factors.push(std::mem::replace(&mut base, sq));
                }
                Split::I(y1) => {
                    y = y1;
                    base = base.mul(&base);
                    factors.push(base.clone());
                }
            }
        }
        factors
            .into_iter()
            .rev()
            .fold(N::one(), |acc, f| f.mul(&acc))
    }

    pub fn exp2<N: Nat>(x: &N) -> N {
        let mut k = x.clone();
        let mut r = N::one();
        while !k.is_e() {
            k = k.pred().expect("k positive");
            r = r.db();
        }
        r
    }

    pub fn leftshift<N: Nat>(x: &N, y: &N) -> N {
        x.exp2().mul(y)
    }

    pub fn div_and_rem<N: Nat>(x: &N, y: &N) -> Result<(N, N)> {
        if y.is_e() {
            return Err(NatError::DivByZero);
        }
        let mut rest = x.clone();
        let mut terms = Vec::new();
        while rest.compare(y) != Ordering::Less {
            // Largest k with y·2^k <= rest.
            let mut k = N::e();
            let mut m = y.clone();
            while rest.compare(&m) != Ordering::Less {
                m = m.db();
                k = k.succ();
            }
            let k = k.pred().expect("at least one doubling");
            let p = k.exp2().mul(y);
            rest = rest.sub(&p)?;
            terms.push(k.exp2());
        }
        let q = terms.into_iter().rev().fold(N::e(), |z, t| t.add(&z));
        Ok((q, rest))
    }

    pub fn dual<N: Nat>(x: &N) -> N {
        let flipped: Vec<Digit> = x.digits().into_iter().map(Digit::flip).collect();
        N::from_digits(&flipped)
    }

    pub fn bitsize<N: Nat>(x: &N) -> N {
        let mut x = x.clone();
        let mut r = N::e();
        loop {
            match split(x) {
                Split::E => return r,
                Split::O(y) | Split::I(y) => {
                    r = r.succ();
                    x = y;
                }
            }
        }
    }

    fn run_length<N: Nat>(x: &N, d: Digit) -> (usize, N) {
        let mut x = x.clone();
        let mut n = 0;
        loop {
            let hit = match d {
                Digit::O => x.is_o(),
                Digit::I => x.is_i(),
            };
            if !hit {
                return (n, x);
            }
            n += 1;
            x = split_digit(x).1;
        }
    }

    fn ocount<N: Nat>(x: &N) -> N {
        count(run_length(x, Digit::O).0)
    }

    fn icount<N: Nat>(x: &N) -> N {
        count(run_length(x, Digit::I).0)
    }

    fn otrim<N: Nat>(x: &N) -> N {
        run_length(x, Digit::O).1
    }

    fn itrim<N: Nat>(x: &N) -> N {
        run_length(x, Digit::I).1
    }

    fn otimes<N: Nat>(x: &N, y: N) -> N {
        kth(N::o, x, y)
    }

    fn itimes<N: Nat>(x: &N, y: N) -> N {
        kth(N::i, x, y)
    }

    pub fn decons<N: Nat>(z: &N) -> Result<(N, N)> {
        if z.is_e() {
            return Err(NatError::DeconsOfZero);
        }
        let one_less = |v: N| v.pred().expect("run count is positive");
        if z.is_o() {
            let x0 = one_less(ocount(z));
            let y = otrim(z);
            let x = if y.is_e() { one_less(x0.o()) } else { x0 };
            Ok((x, y))
        } else {
            let x0 = one_less(icount(z));
            let y = itrim(z);
            let x = if y.is_e() { one_less(x0.i()) } else { x0 };
            Ok((x, y))
        }
    }

    pub fn cons<N: Nat>(x: &N, y: &N) -> N {
        let sx = x.clone().succ();
        if y.is_e() {
            if x.is_e() {
                N::one()
            } else if x.is_o() {
                let n = sx.i_inv().expect("successor of odd is even").succ();
                itimes(&n, N::e())
            } else {
                let n = sx.o_inv().expect("successor of even is odd").succ();
                otimes(&n, N::e())
            }
        } else if y.is_o() {
            itimes(&sx, y.clone())
        } else {
            otimes(&sx, y.clone())
        }
    }
}
