//! Printed form of trees, e.g. `W (V T []) [T,T,T]`.
//!
//! ```text
//! tree  := "T" | ctor " " head " [" items "]"
//! ctor  := "V" | "W"
//! head  := "T" | "(" tree ")"
//! items := ε | tree ("," tree)*
//! ```

use std::fmt;
use std::str::FromStr;

use super::Tree;
use crate::error::{NatError, Result};

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(n) = self.node() else {
            return f.write_str("T");
        };
        f.write_str(if matches!(self, Tree::V(_)) {
            "V "
        } else {
            "W "
        })?;
        if n.head().is_leaf() {
            f.write_str("T")?;
        } else {
            write!(f, "({})", n.head())?;
        }
        f.write_str(" [")?;
        for (k, c) in n.tail().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Tree {
    type Err = NatError;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        let t = p.tree()?;
        if p.pos != p.src.len() {
            return Err(p.error("trailing input"));
        }
        Ok(t)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> NatError {
        NatError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, lit: &[u8]) -> Result<()> {
        if self.src[self.pos..].starts_with(lit) {
            self.pos += lit.len();
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", String::from_utf8_lossy(lit))))
        }
    }

    fn tree(&mut self) -> Result<Tree> {
        let ctor = match self.peek() {
            Some(b'T') => {
                self.pos += 1;
                return Ok(Tree::T);
            }
            Some(c @ (b'V' | b'W')) => c,
            _ => return Err(self.error("expected `T`, `V` or `W`")),
        };
        self.pos += 1;
        self.expect(b" ")?;
        let head = match self.peek() {
            Some(b'T') => {
                self.pos += 1;
                Tree::T
            }
            Some(b'(') => {
                self.pos += 1;
                let h = self.tree()?;
                if h.is_leaf() {
                    self.pos -= 1;
                    return Err(self.error("a leaf head is written without parentheses"));
                }
                self.expect(b")")?;
                h
            }
            _ => return Err(self.error("expected `T` or `(`")),
        };
        self.expect(b" [")?;
        let mut tail = Vec::new();
        if self.peek() != Some(b']') {
            tail.push(self.tree()?);
            while self.peek() == Some(b',') {
                self.pos += 1;
                tail.push(self.tree()?);
            }
        }
        self.expect(b"]")?;
        Ok(if ctor == b'V' {
            Tree::v(head, tail)
        } else {
            Tree::w(head, tail)
        })
    }
}
