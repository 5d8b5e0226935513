//! Anderson's bijection between order ideals of `P(s,t)` and
//! `(s,t)`-core partitions.
//!
//! The ideal `{a_1 > ... > a_j}` maps to the partition with parts
//! `a_k - (j - k)`. The inverse reads off the hook lengths of the first
//! column, which is implemented separately in [`Partition::first_column_hooks`].

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactnum::ExactInt;
use crate::ideal_enum::{is_order_ideal, OrderIdeal};
use crate::partition::Partition;
use crate::semigroup_poset::GapPoset;

/// Parts of the core for an ideal given by its increasing element list.
pub fn partition_of_elements(elements: &[u64]) -> Partition {
    let parts: Vec<u64> = elements.iter().enumerate().rev().map(|(m, &a)| a - m as u64).collect();
    Partition::new(parts).expect("distinct positive elements give a partition")
}

pub fn ideal_to_partition(ideal: &OrderIdeal) -> Partition {
    partition_of_elements(ideal.elements())
}

/// Inverse of [`ideal_to_partition`]. Fails with `NotACore` unless `p` is
/// an `(s,t)`-core.
pub fn partition_to_ideal(p: &Partition, s: u64, t: u64) -> Result<OrderIdeal> {
    let poset = GapPoset::new(s, t)?;
    partition_to_ideal_in(&poset, p)
}

/// [`partition_to_ideal`] against an already built poset.
pub fn partition_to_ideal_in(poset: &GapPoset, p: &Partition) -> Result<OrderIdeal> {
    let (s, t) = (poset.s(), poset.t());
    if !p.is_st_core(s, t) {
        return Err(Error::NotACore { s, t });
    }
    let mut hooks = p.first_column_hooks();
    hooks.reverse();
    match is_order_ideal(poset, &hooks) {
        Ok(true) => Ok(OrderIdeal::from_sorted_unchecked(s, t, hooks)),
        _ => Err(Error::InternalBijection { s, t }),
    }
}

/// Size of the core of an ideal, `Σ a - binom(#I, 2)`, from its elements.
pub fn core_size(elements: &[u64]) -> u64 {
    let sum: u64 = elements.iter().sum();
    let j = elements.len() as u64;
    sum - j * j.saturating_sub(1) / 2
}

/// Size of the core partition of `ideal` without building the partition.
pub fn core_size_of_ideal(ideal: &OrderIdeal) -> ExactInt {
    ExactInt::from(core_size(ideal.elements()))
}
