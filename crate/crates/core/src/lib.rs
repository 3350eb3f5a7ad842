//! Non-deterministic communication complexity of regular languages, decided
//! through syntactic ordered monoids and checked with exact small-scale oracles.

pub mod automata;
pub mod classification;
pub mod commcc;
pub mod error;
pub mod monoid;
pub mod reductions;
pub mod word;

pub use automata::{builtin_language, Dfa};
pub use error::{Error, Result};
pub use monoid::{Element, FiniteMonoid, MonoidMorphism, OrderIdeal, OrderedMonoid, StableOrder};
pub use word::{PaddedWord, EPSILON};
