//! Exact densities of regular languages and regular approximations of
//! non-regular ones.
//!
//! The crate is organised around a few layers:
//!
//! * [`word`], [`numbers`] and [`census`]: alphabets, words in shortlex
//!   order, exact integers/rationals and per-length word counts.
//! * [`automata`]: total DFAs, NFAs, Boolean operations, minimization,
//!   exact word counting and forbidden-word detection.
//! * [`density`]: density and natural density of a regular language,
//!   computed from the uniform-letter Markov chain on DFA states.
//! * [`languages`]: membership oracles for the non-regular languages
//!   studied here (semi-Dyck, Goldstine, Kemp, majority, primitive words,
//!   a diagonal recursive language, ...).
//! * [`approximations`]: inner/outer regular approximation families,
//!   containment checks and gap reports.
//! * [`monoid`]: transition monoids, Green's relations and the
//!   non-primitive witness extraction.
//! * [`suite`]: the end-to-end check suite exposed by the CLI.
//!
//! All results are exact; no floating point is used for any density.

pub mod approximations;
pub mod automata;
pub mod census;
pub mod density;
mod error;
mod graph;
pub mod languages;
pub mod linsolve;
pub mod monoid;
pub mod numbers;
pub mod random;
pub mod suite;
pub mod word;

pub use error::{Error, Result};
pub use numbers::{BigCount, Rational};
pub use word::{Alphabet, Letter, Word};
