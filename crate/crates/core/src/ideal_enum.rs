//! Order ideals of a [`GapPoset`]: enumeration, validation, and the
//! least-missing-element decomposition of ideals of the staircase `T_s`.
//!
//! The enumerator walks elements in increasing value, which is a linear
//! extension because covers always decrease the value. An element can be
//! added once both of its lower covers are present, and every prefix of an
//! ideal's sorted element list is itself an ideal, so ideals come out in
//! lexicographic order of their sorted element lists with `∅` first.
//!
//! Ideals of `T_s` split by their least missing rank-0 element `i`
//! (`i = s` when all of `1..s-1` are present). Such an ideal is
//! `{1..i-1}` plus an ideal of a copy of `T_{i-1}` sitting above and to the
//! left of `i`, plus an ideal of a copy of `T_{s-i}` to the right of `i`.
//! The two smaller ideals are independent, which makes each `i` a separate
//! unit of work.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{binomial, exact_div, ExactInt};
use crate::semigroup_poset::{GapPoset, StaircaseCoord};

/// Enumeration refuses posets with more ideals than this unless the caller
/// raises the cap.
pub const DEFAULT_CAP: u64 = 100_000_000;

/// A downward-closed set of gaps, stored in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderIdeal {
    s: u64,
    t: u64,
    elements: Vec<u64>,
}

impl OrderIdeal {
    pub(crate) fn from_sorted_unchecked(s: u64, t: u64, elements: Vec<u64>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        OrderIdeal { s, t, elements }
    }

    /// Validates `elements` (in any order) as an ideal of `poset`.
    pub fn new(poset: &GapPoset, mut elements: Vec<u64>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if !is_order_ideal(poset, &elements)? {
            return Err(Error::NotAnIdeal { missing: missing_cover(poset, &elements) });
        }
        Ok(OrderIdeal { s: poset.s(), t: poset.t(), elements })
    }

    pub fn empty(s: u64, t: u64) -> Self {
        OrderIdeal { s, t, elements: Vec::new() }
    }

    /// The generators `(s, t)` of the parent poset.
    pub fn generators(&self) -> (u64, u64) {
        (self.s, self.t)
    }

    /// Elements in increasing order.
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<u64> {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, value: u64) -> bool {
        self.elements.binary_search(&value).is_ok()
    }
}

/// Written largest element first, e.g. `{7,4,2,1}`.
impl fmt::Display for OrderIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, v) in self.elements.iter().rev().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// A lower cover of some element of `sorted` that `sorted` lacks.
fn missing_cover(poset: &GapPoset, sorted: &[u64]) -> u64 {
    sorted
        .iter()
        .flat_map(|&a| poset.covers_down(a).unwrap_or_default())
        .find(|b| sorted.binary_search(b).is_err())
        .unwrap_or(0)
}

/// Whether `subset` is downward closed in `poset`. Fails with `NotAGap`
/// if the subset contains a non-gap.
pub fn is_order_ideal(poset: &GapPoset, subset: &[u64]) -> Result<bool> {
    let mut member = vec![false; poset.len()];
    for &v in subset {
        member[poset.require(v)?] = true;
    }
    Ok((0..poset.len()).filter(|&i| member[i]).all(|i| poset.lower_indices(i).all(|j| member[j])))
}

/// Number of ideals of `P(s,t)`: `binom(s+t, s) / (s+t)`.
pub fn ideal_count(s: u64, t: u64) -> Result<ExactInt> {
    crate::semigroup_poset::frobenius(s, t)?;
    exact_div(&binomial(s + t, s as i64), &ExactInt::from(s + t))
}

/// Returns the ideal count of `P(s,t)`, or `CapExceeded` if it is above
/// `cap`.
pub fn check_cap(s: u64, t: u64, cap: u64) -> Result<ExactInt> {
    let expected = ideal_count(s, t)?;
    if expected > ExactInt::from(cap) {
        return Err(Error::CapExceeded { expected, cap });
    }
    Ok(expected)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Pin {
    Free,
    In,
    Out,
}

/// Depth-first walker over the ideals of a poset, optionally with some
/// elements forced in or out. Yields borrowed element slices.
pub struct IdealWalker<'a> {
    poset: &'a GapPoset,
    pins: Option<Vec<Pin>>,
    pinned_in: usize,
    member: Vec<bool>,
    chosen: Vec<usize>,
    values: Vec<u64>,
    chosen_pinned: usize,
    cursor: usize,
    started: bool,
    done: bool,
}

impl<'a> IdealWalker<'a> {
    pub fn new(poset: &'a GapPoset) -> Self {
        IdealWalker {
            poset,
            pins: None,
            pinned_in: 0,
            member: vec![false; poset.len()],
            chosen: Vec::new(),
            values: Vec::new(),
            chosen_pinned: 0,
            cursor: 0,
            started: false,
            done: false,
        }
    }

    /// Walks only the ideals that contain every value in `include` and
    /// none in `exclude`.
    pub fn pinned(poset: &'a GapPoset, include: &[u64], exclude: &[u64]) -> Result<Self> {
        let mut pins = vec![Pin::Free; poset.len()];
        for &v in exclude {
            pins[poset.require(v)?] = Pin::Out;
        }
        for &v in include {
            let i = poset.require(v)?;
            if pins[i] == Pin::Out {
                // contradictory pins: nothing to walk
                let mut w = IdealWalker::new(poset);
                w.done = true;
                return Ok(w);
            }
            pins[i] = Pin::In;
        }
        let mut walker = IdealWalker::new(poset);
        walker.pinned_in = pins.iter().filter(|&&p| p == Pin::In).count();
        walker.pins = Some(pins);
        Ok(walker)
    }

    fn pin(&self, i: usize) -> Pin {
        self.pins.as_ref().map_or(Pin::Free, |p| p[i])
    }

    fn feasible(&self, i: usize) -> bool {
        self.poset.lower_indices(i).all(|j| self.member[j])
    }

    fn complete(&self) -> bool {
        self.chosen_pinned == self.pinned_in
    }

    /// The next ideal, as its increasing element list.
    #[allow(clippy::should_implement_trait)]
    pub fn next(&mut self) -> Option<&[u64]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.complete() {
                return Some(&self.values);
            }
        }
        let n = self.poset.len();
        loop {
            let mut found = None;
            let mut j = self.cursor;
            while j < n {
                let pin = self.pin(j);
                if pin != Pin::Out && self.feasible(j) {
                    found = Some(j);
                    break;
                }
                if pin == Pin::In {
                    break;
                }
                j += 1;
            }
            if let Some(j) = found {
                self.member[j] = true;
                self.chosen.push(j);
                self.values.push(self.poset.gaps()[j]);
                if self.pin(j) == Pin::In {
                    self.chosen_pinned += 1;
                }
                self.cursor = j + 1;
                if self.complete() {
                    return Some(&self.values);
                }
                continue;
            }
            loop {
                let Some(k) = self.chosen.pop() else {
                    self.done = true;
                    return None;
                };
                self.member[k] = false;
                self.values.pop();
                if self.pin(k) == Pin::In {
                    // a pinned element cannot be skipped
                    self.chosen_pinned -= 1;
                    continue;
                }
                self.cursor = k + 1;
                break;
            }
        }
    }
}

/// Owning iterator over the ideals of a poset in canonical order.
pub struct Ideals<'a> {
    walker: IdealWalker<'a>,
}

impl Iterator for Ideals<'_> {
    type Item = OrderIdeal;

    fn next(&mut self) -> Option<OrderIdeal> {
        let (s, t) = (self.walker.poset.s(), self.walker.poset.t());
        self.walker.next().map(|v| OrderIdeal::from_sorted_unchecked(s, t, v.to_vec()))
    }
}

/// All ideals of `poset` in lexicographic order of their sorted element
/// lists, provided their number is at most `cap`.
pub fn enumerate_ideals(poset: &GapPoset, cap: u64) -> Result<Ideals<'_>> {
    if !poset.is_empty() {
        check_cap(poset.s(), poset.t(), cap)?;
    }
    Ok(Ideals { walker: IdealWalker::new(poset) })
}

/// Calls `f` on every ideal of `poset`, in canonical order, without
/// allocating per ideal.
pub fn for_each_ideal(poset: &GapPoset, mut f: impl FnMut(&[u64])) {
    let mut walker = IdealWalker::new(poset);
    while let Some(ideal) = walker.next() {
        f(ideal);
    }
}

fn staircase_order(ideal: &OrderIdeal) -> u64 {
    let (s, t) = ideal.generators();
    assert_eq!(t, s + 1, "ideal does not belong to a staircase poset");
    s
}

/// The least rank-0 element of `T_s` missing from `ideal`, or `s` when all
/// of `1..s-1` are present.
pub fn least_missing_index(ideal: &OrderIdeal) -> u64 {
    let s = staircase_order(ideal);
    assert!(s >= 1, "T_0 has no decomposition");
    (1..s).find(|&k| !ideal.contains(k)).unwrap_or(s)
}

/// An ideal of `T_s` taken apart around its least missing element `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSplit {
    pub i: u64,
    /// Ideal of `T_{i-1}`; the part above and to the left of `i`.
    pub left: OrderIdeal,
    /// Ideal of `T_{s-i}`; the part to the right of `i`.
    pub right: OrderIdeal,
}

fn embed_left(s: u64, i: u64, x: u64) -> u64 {
    // x = r*i + k in T_{i-1}  ->  v(r+1, k) in T_s
    let (r, k) = (x / i, x % i);
    (r + 1) * (s + 1) + k
}

fn embed_right(s: u64, i: u64, x: u64) -> u64 {
    // x = r*(s-i+1) + k in T_{s-i}  ->  v(r, k+i) in T_s
    let w = s - i + 1;
    let (r, k) = (x / w, x % w);
    r * (s + 1) + k + i
}

pub fn split_ideal(ideal: &OrderIdeal) -> IdealSplit {
    let s = staircase_order(ideal);
    let i = least_missing_index(ideal);
    let mut left = Vec::new();
    let mut right = Vec::new();
    for &v in ideal.elements() {
        let c = StaircaseCoord::of(s, v).expect("ideal element lies in T_s");
        if c.rank >= 1 && c.pos + c.rank < i {
            left.push((c.rank - 1) * i + c.pos);
        } else if c.pos > i {
            right.push(c.rank * (s - i + 1) + (c.pos - i));
        } else {
            debug_assert!(c.rank == 0 && c.pos < i);
        }
    }
    left.sort_unstable();
    right.sort_unstable();
    IdealSplit {
        i,
        left: OrderIdeal::from_sorted_unchecked(i - 1, i, left),
        right: OrderIdeal::from_sorted_unchecked(s - i, s - i + 1, right),
    }
}

/// Inverse of [`split_ideal`] for ideals of `T_s`.
pub fn reassemble(s: u64, split: &IdealSplit) -> OrderIdeal {
    let i = split.i;
    assert!((1..=s).contains(&i), "least missing index out of range");
    assert_eq!(split.left.generators(), (i - 1, i));
    assert_eq!(split.right.generators(), (s - i, s - i + 1));
    let mut elements = Vec::with_capacity(i as usize - 1 + split.left.len() + split.right.len());
    assemble_into(s, i, split.left.elements(), split.right.elements(), &mut elements);
    OrderIdeal::from_sorted_unchecked(s, s + 1, elements)
}

fn assemble_into(s: u64, i: u64, left: &[u64], right: &[u64], out: &mut Vec<u64>) {
    out.clear();
    out.extend(1..i);
    out.extend(left.iter().map(|&x| embed_left(s, i, x)));
    out.extend(right.iter().map(|&x| embed_right(s, i, x)));
    out.sort_unstable();
}

/// Calls `f` on every ideal of `T_s` whose least missing index is `i`,
/// built as products of ideals of `T_{i-1}` and `T_{s-i}`.
pub fn for_each_in_fiber(s: u64, i: u64, mut f: impl FnMut(&[u64])) {
    assert!((1..=s).contains(&i), "fiber index out of range");
    let left_poset = GapPoset::staircase(i - 1);
    let right_poset = GapPoset::staircase(s - i);
    let mut lefts: Vec<Vec<u64>> = Vec::new();
    for_each_ideal(&left_poset, |l| lefts.push(l.to_vec()));
    let mut buf = Vec::new();
    for_each_ideal(&right_poset, |r| {
        for l in &lefts {
            assemble_into(s, i, l, r, &mut buf);
            f(&buf);
        }
    });
}

/// An independent slice of an enumeration. The slices produced by
/// [`plan_work`] cover every ideal exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WorkUnit {
    /// Ideals of `T_s` with least missing index `i`.
    Fiber(u64),
    /// Ideals containing exactly `include` among `pinned`.
    Pinned { include: Vec<u64>, exclude: Vec<u64> },
}

/// Splits the ideals of `poset` into roughly `target` units. Staircase
/// posets split into their `s` fibers; other posets split on the
/// membership of their largest few minimal elements.
pub fn plan_work(poset: &GapPoset, target: usize) -> Vec<WorkUnit> {
    let s = poset.s();
    if poset.is_staircase() && s >= 2 {
        return (1..=s).map(WorkUnit::Fiber).collect();
    }
    let minimal = s.saturating_sub(1);
    let want_bits = usize::BITS - target.max(1).saturating_sub(1).leading_zeros();
    let bits = (want_bits as u64).min(minimal).min(16);
    let pinned: Vec<u64> = (0..bits).map(|b| s - 1 - b).collect();
    (0..1u32 << bits)
        .map(|mask| {
            let (include, exclude) =
                pinned.iter().enumerate().partition::<Vec<_>, _>(|(b, _)| mask >> b & 1 == 1);
            WorkUnit::Pinned {
                include: include.into_iter().map(|(_, &v)| v).collect(),
                exclude: exclude.into_iter().map(|(_, &v)| v).collect(),
            }
        })
        .collect()
}

/// Runs one unit of a plan made by [`plan_work`] for the same poset.
pub fn run_work_unit(poset: &GapPoset, unit: &WorkUnit, mut f: impl FnMut(&[u64])) {
    match unit {
        WorkUnit::Fiber(i) => for_each_in_fiber(poset.s(), *i, f),
        WorkUnit::Pinned { include, exclude } => {
            let mut walker =
                IdealWalker::pinned(poset, include, exclude).expect("pinned values come from the poset");
            while let Some(ideal) = walker.next() {
                f(ideal);
            }
        }
    }
}
