//! Uncompressed bijective base-2 numerals, one stored digit per constructor.

use std::fmt;
use std::str::FromStr;

use crate::error::{NatError, Result};
use crate::nat::{Digit, Nat};

/// Digit sequence stored first-applied first; the outermost digit is last,
/// so `o`/`i` and their inverses are pushes and pops.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BijDigits(Vec<Digit>);

impl BijDigits {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_digits(&self) -> &[Digit] {
        &self.0
    }

    /// Nested constructor form, outermost first: `I (I (O (I (O B))))`.
    pub fn nested(&self) -> String {
        let Some((inner, outer)) = self.0.split_first() else {
            return "B".to_string();
        };
        let letter = |d: &Digit| match d {
            Digit::O => 'O',
            Digit::I => 'I',
        };
        let mut s = String::with_capacity(self.0.len() * 4);
        for d in outer.iter().rev() {
            s.push(letter(d));
            s.push_str(" (");
        }
        s.push(letter(inner));
        s.push_str(" B");
        s.extend(std::iter::repeat_n(')', outer.len()));
        s
    }
}

impl fmt::Display for BijDigits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for d in &self.0 {
            f.write_str(match d {
                Digit::O => "o",
                Digit::I => "i",
            })?;
        }
        Ok(())
    }
}

impl FromStr for BijDigits {
    type Err = NatError;

    fn from_str(s: &str) -> Result<Self> {
        if s == "e" {
            return Ok(BijDigits::default());
        }
        if s.is_empty() {
            return Err(NatError::Parse {
                pos: 0,
                msg: "empty digit string (write `e` for zero)".into(),
            });
        }
        s.bytes()
            .enumerate()
            .map(|(pos, b)| match b {
                b'o' => Ok(Digit::O),
                b'i' => Ok(Digit::I),
                _ => Err(NatError::Parse {
                    pos,
                    msg: "expected `o` or `i`".into(),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(BijDigits)
    }
}

impl Nat for BijDigits {
    fn e() -> Self {
        BijDigits(Vec::new())
    }

    fn o(mut self) -> Self {
        self.0.push(Digit::O);
        self
    }

    fn i(mut self) -> Self {
        self.0.push(Digit::I);
        self
    }

    fn o_inv(mut self) -> Result<Self> {
        match self.0.pop() {
            Some(Digit::O) => Ok(self),
            _ => Err(NatError::Destructor {
                op: "o_inv",
                expected: "o",
            }),
        }
    }

    fn i_inv(mut self) -> Result<Self> {
        match self.0.pop() {
            Some(Digit::I) => Ok(self),
            _ => Err(NatError::Destructor {
                op: "i_inv",
                expected: "i",
            }),
        }
    }

    fn is_o(&self) -> bool {
        self.0.last() == Some(&Digit::O)
    }

    fn is_e(&self) -> bool {
        self.0.is_empty()
    }

    fn digits(&self) -> Vec<Digit> {
        self.0.clone()
    }

    fn from_digits(digits: &[Digit]) -> Self {
        BijDigits(digits.to_vec())
    }
}
