//! Hereditarily run-length compressed bijective base-2 numbers.
//!
//! Reading the digits of a number outermost first, a `V` node starts with a
//! run of `o` digits and a `W` node with a run of `i` digits; runs then
//! alternate. The node stores one counter per run, head first, where a run of
//! length `k+1` is stored as the counter `k`, itself a [`Tree`]. The leaf `T`
//! is zero.
//!
//! Every tree denotes a distinct natural and every natural has exactly one
//! tree, so structural equality is numeric equality.

mod dag;
mod text;

pub use dag::{Dag, Tag};

use std::sync::Arc;

use rand::Rng;

use crate::error::{NatError, Result};
use crate::nat::Nat;

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Tree {
    T,
    V(Arc<Node>),
    W(Arc<Node>),
}

/// Counters of one node. The tail is kept reversed so that the list head
/// (the counter right after `head`) sits at the end of the vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Node {
    head: Tree,
    rtail: Vec<Tree>,
}

impl Node {
    fn new(head: Tree, tail: Vec<Tree>) -> Node {
        let mut rtail = tail;
        rtail.reverse();
        Node { head, rtail }
    }

    pub fn head(&self) -> &Tree {
        &self.head
    }

    /// Counters after the head, in order.
    pub fn tail(&self) -> impl DoubleEndedIterator<Item = &Tree> + ExactSizeIterator {
        self.rtail.iter().rev()
    }

    /// Head followed by the tail.
    pub fn counters(&self) -> impl Iterator<Item = &Tree> {
        std::iter::once(&self.head).chain(self.tail())
    }

    pub fn tail_len(&self) -> usize {
        self.rtail.len()
    }
}

fn take(node: Arc<Node>) -> Node {
    Arc::unwrap_or_clone(node)
}

impl Tree {
    /// `V head tail`: runs starting with `o`.
    pub fn v(head: Tree, tail: Vec<Tree>) -> Tree {
        Tree::V(Arc::new(Node::new(head, tail)))
    }

    /// `W head tail`: runs starting with `i`.
    pub fn w(head: Tree, tail: Vec<Tree>) -> Tree {
        Tree::W(Arc::new(Node::new(head, tail)))
    }

    pub fn node(&self) -> Option<&Node> {
        match self {
            Tree::T => None,
            Tree::V(n) | Tree::W(n) => Some(n),
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Tree::T)
    }

    pub fn tag(&self) -> Tag {
        match self {
            Tree::T => Tag::Leaf,
            Tree::V(_) => Tag::V,
            Tree::W(_) => Tag::W,
        }
    }

    pub fn from_u64(v: u64) -> Tree {
        crate::nat::view(&crate::refnat::RefNat::from(v))
    }

    /// Total number of nodes, counting each leaf as one.
    pub fn node_count(&self) -> u64 {
        match self.node() {
            None => 1,
            Some(n) => 1 + n.counters().map(Tree::node_count).sum::<u64>(),
        }
    }

    /// Depth of nesting, with a leaf at depth zero.
    pub fn depth(&self) -> usize {
        match self.node() {
            None => 0,
            Some(n) => 1 + n.counters().map(Tree::depth).max().unwrap_or(0),
        }
    }

    /// `o` applied `k` times to `y`, as a single edit of the outer node.
    pub fn vmul(k: &Tree, y: &Tree) -> Tree {
        if k.is_leaf() {
            return y.clone();
        }
        let k1 = k.clone().pred().expect("k is positive");
        match y {
            Tree::T => Tree::V(Arc::new(Node::new(k1, Vec::new()))),
            Tree::V(n) => {
                let mut n = take(n.clone());
                n.head = n.head.add(k);
                Tree::V(Arc::new(n))
            }
            Tree::W(n) => {
                let mut n = take(n.clone());
                let y0 = std::mem::replace(&mut n.head, k1);
                n.rtail.push(y0);
                Tree::V(Arc::new(n))
            }
        }
    }

    /// Bijective base-2 digit count if it fits in a `u64`. Never does
    /// arithmetic on counters that do not themselves fit.
    pub fn bitsize_u64(&self) -> Option<u64> {
        let Some(n) = self.node() else {
            return Some(0);
        };
        n.counters()
            .try_fold(0u64, |acc, c| acc.checked_add(c.to_u64()?.checked_add(1)?))
    }

    pub fn to_u64(&self) -> Option<u64> {
        if self.bitsize_u64()? > 64 {
            return None;
        }
        self.digits().iter().try_fold(0u64, |v, d| {
            let bit = match d {
                crate::nat::Digit::O => 1,
                crate::nat::Digit::I => 2,
            };
            v.checked_mul(2)?.checked_add(bit)
        })
    }

    /// Bijective base-2 digit count, summed from the run counters.
    pub fn bitsize_fast(&self) -> Tree {
        let Some(n) = self.node() else {
            return Tree::T;
        };
        n.rtail
            .iter()
            .fold(n.head.clone(), |acc, c| c.add(&acc).succ())
            .succ()
    }

    pub fn exp2_fast(&self) -> Tree {
        if self.is_leaf() {
            return Tree::one();
        }
        let k = self.clone().pred().expect("positive");
        Tree::V(Arc::new(Node::new(k, Vec::new()))).succ()
    }

    /// `2^self · y`.
    pub fn leftshift_fast(&self, y: &Tree) -> Tree {
        if y.is_leaf() {
            return Tree::T;
        }
        Tree::vmul(self, &y.clone().pred().expect("positive")).succ()
    }

    pub fn dual_fast(&self) -> Tree {
        match self {
            Tree::T => Tree::T,
            Tree::V(n) => Tree::W(n.clone()),
            Tree::W(n) => Tree::V(n.clone()),
        }
    }

    /// Node count as a tree-number, with leaves counted as zero.
    pub fn repsize_fast(&self) -> Tree {
        let Some(n) = self.node() else {
            return Tree::T;
        };
        n.counters()
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
            .fold(Tree::T, |acc, c| c.repsize_fast().add(&acc))
            .succ()
    }

    pub fn decons_fast(&self) -> Result<(Tree, Tree)> {
        match self {
            Tree::T => Err(NatError::DeconsOfZero),
            Tree::V(n) | Tree::W(n) => {
                let is_v = matches!(self, Tree::V(_));
                let mut n = take(n.clone());
                match n.rtail.pop() {
                    None => {
                        let x = if is_v { n.head.o() } else { n.head.i() };
                        Ok((x.pred()?, Tree::T))
                    }
                    Some(y) => {
                        let rest = Node {
                            head: y,
                            rtail: n.rtail,
                        };
                        let rest = if is_v {
                            Tree::W(Arc::new(rest))
                        } else {
                            Tree::V(Arc::new(rest))
                        };
                        Ok((n.head, rest))
                    }
                }
            }
        }
    }

    pub fn cons_fast(x: &Tree, y: &Tree) -> Tree {
        match y {
            Tree::T => {
                if x.is_leaf() {
                    Tree::one()
                } else if x.is_o() {
                    let c = x.clone().succ().i_inv().expect("even successor");
                    Tree::W(Arc::new(Node::new(c, Vec::new())))
                } else {
                    let c = x.clone().succ().o_inv().expect("odd successor");
                    Tree::V(Arc::new(Node::new(c, Vec::new())))
                }
            }
            Tree::V(n) => {
                let mut n = take(n.clone());
                let y0 = std::mem::replace(&mut n.head, x.clone());
                n.rtail.push(y0);
                Tree::W(Arc::new(n))
            }
            Tree::W(n) => {
                let mut n = take(n.clone());
                let y0 = std::mem::replace(&mut n.head, x.clone());
                n.rtail.push(y0);
                Tree::V(Arc::new(n))
            }
        }
    }

    /// Random tree: a leaf with probability 1/2, otherwise a `V` or `W` node
    /// with a head and 0..=3 tail counters drawn the same way, cut to leaves
    /// at `max_depth`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, max_depth: usize) -> Tree {
        if max_depth == 0 || rng.gen_bool(0.5) {
            return Tree::T;
        }
        let head = Tree::random(rng, max_depth - 1);
        let len = rng.gen_range(0..=3);
        let tail = (0..len).map(|_| Tree::random(rng, max_depth - 1)).collect();
        if rng.gen_bool(0.5) {
            Tree::v(head, tail)
        } else {
            Tree::w(head, tail)
        }
    }
}

impl Nat for Tree {
    fn e() -> Self {
        Tree::T
    }

    fn o(self) -> Self {
        match self {
            Tree::T => Tree::v(Tree::T, Vec::new()),
            Tree::V(n) => {
                let mut n = take(n);
                n.head = std::mem::replace(&mut n.head, Tree::T).succ();
                Tree::V(Arc::new(n))
            }
            Tree::W(n) => {
                let mut n = take(n);
                let x = std::mem::replace(&mut n.head, Tree::T);
                n.rtail.push(x);
                Tree::V(Arc::new(n))
            }
        }
    }

    fn i(self) -> Self {
        match self {
            Tree::T => Tree::w(Tree::T, Vec::new()),
            Tree::V(n) => {
                let mut n = take(n);
                let x = std::mem::replace(&mut n.head, Tree::T);
                n.rtail.push(x);
                Tree::W(Arc::new(n))
            }
            Tree::W(n) => {
                let mut n = take(n);
                n.head = std::mem::replace(&mut n.head, Tree::T).succ();
                Tree::W(Arc::new(n))
            }
        }
    }

    fn o_inv(self) -> Result<Self> {
        let Tree::V(n) = self else {
            return Err(NatError::Destructor {
                op: "o_inv",
                expected: "o",
            });
        };
        let mut n = take(n);
        if n.head.is_leaf() {
            Ok(match n.rtail.pop() {
                None => Tree::T,
                Some(x) => Tree::W(Arc::new(Node {
                    head: x,
                    rtail: n.rtail,
                })),
            })
        } else {
            n.head = std::mem::replace(&mut n.head, Tree::T).pred()?;
            Ok(Tree::V(Arc::new(n)))
        }
    }

    fn i_inv(self) -> Result<Self> {
        let Tree::W(n) = self else {
            return Err(NatError::Destructor {
                op: "i_inv",
                expected: "i",
            });
        };
        let mut n = take(n);
        if n.head.is_leaf() {
            Ok(match n.rtail.pop() {
                None => Tree::T,
                Some(x) => Tree::V(Arc::new(Node {
                    head: x,
                    rtail: n.rtail,
                })),
            })
        } else {
            n.head = std::mem::replace(&mut n.head, Tree::T).pred()?;
            Ok(Tree::W(Arc::new(n)))
        }
    }

    fn is_o(&self) -> bool {
        matches!(self, Tree::V(_))
    }

    fn is_e(&self) -> bool {
        self.is_leaf()
    }

    fn is_i(&self) -> bool {
        matches!(self, Tree::W(_))
    }

    fn is_one(&self) -> bool {
        matches!(self, Tree::V(n) if n.head.is_leaf() && n.rtail.is_empty())
    }

    fn exp2(&self) -> Self {
        self.exp2_fast()
    }

    fn leftshift(&self, y: &Self) -> Self {
        self.leftshift_fast(y)
    }

    fn dual(&self) -> Self {
        self.dual_fast()
    }

    fn bitsize(&self) -> Self {
        self.bitsize_fast()
    }

    fn repsize(&self) -> Self {
        self.repsize_fast()
    }

    fn decons(&self) -> Result<(Self, Self)> {
        self.decons_fast()
    }

    fn cons(x: &Self, y: &Self) -> Self {
        Tree::cons_fast(x, y)
    }
}
