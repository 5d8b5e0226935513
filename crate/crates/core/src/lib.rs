//! Simultaneous `(s,t)`-core partitions in exact arithmetic.
//!
//! The crate builds the poset of gaps of the numerical semigroup `<s,t>`,
//! enumerates its order ideals, maps them to `(s,t)`-cores with Anderson's
//! bijection, and checks the total-size formula
//! `(s+t+1)(s-1)(t-1)/(24(s+t)) · binom(s+t, s)` three ways: by brute
//! enumeration, by closed forms, and by the recursions obtained from
//! splitting each ideal of `T_s = P(s,s+1)` at its least missing element.
//!
//! The crate is `no_std` and needs only `alloc`. Threading, file formats
//! and the command line live in the `stcore-cli` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod anderson;
pub mod error;
pub mod exactnum;
pub mod ideal_enum;
pub mod identities;
pub mod partition;
pub mod report;
pub mod semigroup_poset;
pub mod statistics;

pub use error::{Error, Result};
pub use exactnum::{ExactInt, ExactRatio};
pub use ideal_enum::{OrderIdeal, DEFAULT_CAP};
pub use partition::Partition;
pub use semigroup_poset::GapPoset;
