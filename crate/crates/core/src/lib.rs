//! Arithmetic on giant natural numbers through a hereditarily run-length
//! compressed tree representation.
//!
//! All arithmetic is written once against the [`Nat`] contract (six
//! primitives over bijective base-2 digits) and runs on three
//! representations:
//!
//! * [`Tree`]: the compressed trees, with fast overrides for powers of two,
//!   bit size, duality and pairing;
//! * [`BijDigits`]: a flat bijective base-2 digit sequence;
//! * [`RefNat`]: an ordinary big integer, also the test oracle.
//!
//! ```
//! use giant::{Nat, Tree};
//!
//! let x = Tree::from_u64(42);
//! assert_eq!(x.to_string(), "W (V T []) [T,T,T]");
//! assert_eq!(Tree::from_u64(5).exp2().to_string(), "W T [V (V T []) []]");
//! ```

pub mod bij;
pub mod codecs;
pub mod error;
pub mod nat;
pub mod numtheory;
pub mod refnat;
pub mod sweep;
pub mod tree;
pub mod workloads;

pub use bij::BijDigits;
pub use codecs::Collections;
pub use error::{NatError, Result};
pub use nat::{all_from, from_list_alt, kth, to_list_alt, view, Digit, Nat};
pub use numtheory::SpecialNumbers;
pub use refnat::RefNat;
pub use tree::{Dag, Tree};
