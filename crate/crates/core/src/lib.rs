//! Square-free circular words over `{a, b, c}`.
//!
//! [`construct::construct_word`] builds a square-free circular word of every
//! length except 5, 7, 9, 10, 14 and 17. It works through binary codewords
//! ([`pansiot`]) and closed walks in the jump graph ([`k33`]). Every output
//! is re-checked by the naive square scan in [`words`], and [`enumerate`]
//! recounts everything by brute force.

pub mod cli;
pub mod construct;
pub mod enumerate;
pub mod k33;
pub mod pansiot;
pub mod words;

pub use construct::{construct_codeword, construct_word, ConstructError};
pub use k33::{ClosedWalk, Jump, WalkLabel, Weight};
pub use pansiot::{CircularCodeword, LinearCodeword};
pub use words::{CircularWord, Letter, LinearWord};
