//! Brute-force aggregates over all order ideals: core counts and sizes,
//! weighted ideal sums, and the checks built on them.
//!
//! Everything is accumulated in a single pass by [`CoreTally`], which is a
//! commutative monoid so partial tallies from independent work units can
//! be merged in any order.

use num_traits::Zero;

use crate::anderson::partition_of_elements;
use crate::error::{Error, Result};
use crate::exactnum::{binomial, exact_div, ratio, ExactInt, ExactRatio};
use crate::ideal_enum::{check_cap, for_each_ideal};
use crate::semigroup_poset::GapPoset;

/// The weight `a·σ + b·τ + c·ρ` on elements of `T_s`: `σ(x) = x`,
/// `τ(x) = 1`, and `ρ(x)` is the rank of `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeightFn {
    pub sigma: i64,
    pub tau: i64,
    pub rho: i64,
}

impl WeightFn {
    pub const SIGMA: WeightFn = WeightFn { sigma: 1, tau: 0, rho: 0 };
    pub const TAU: WeightFn = WeightFn { sigma: 0, tau: 1, rho: 0 };
    pub const RHO: WeightFn = WeightFn { sigma: 0, tau: 0, rho: 1 };

    pub const fn new(sigma: i64, tau: i64, rho: i64) -> Self {
        WeightFn { sigma, tau, rho }
    }

    /// Weight of element `x` of `poset`. A nonzero rank coefficient needs
    /// a staircase poset.
    pub fn eval(&self, poset: &GapPoset, x: u64) -> Result<i128> {
        if self.rho != 0 && !poset.is_staircase() {
            return Err(Error::UnrankedPoset { s: poset.s(), t: poset.t() });
        }
        let rank = if poset.is_staircase() { x / (poset.s() + 1) } else { 0 };
        Ok(self.sigma as i128 * x as i128 + self.tau as i128 + self.rho as i128 * rank as i128)
    }
}

fn add(acc: &mut u128, x: u128) {
    *acc = acc.checked_add(x).expect("tally overflowed u128");
}

/// Running totals over a stream of ideals of one poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreTally {
    s: u64,
    t: u64,
    count: u128,
    sum_sizes: u128,
    max_size: u64,
    sum_card: u128,
    sum_card_pairs: u128,
    sum_values: u128,
    sum_ranks: u128,
}

impl CoreTally {
    pub fn new(poset: &GapPoset) -> Self {
        CoreTally {
            s: poset.s(),
            t: poset.t(),
            count: 0,
            sum_sizes: 0,
            max_size: 0,
            sum_card: 0,
            sum_card_pairs: 0,
            sum_values: 0,
            sum_ranks: 0,
        }
    }

    pub fn observe(&mut self, elements: &[u64]) {
        let card = elements.len() as u128;
        let values: u128 = elements.iter().map(|&v| v as u128).sum();
        let pairs = card * card.saturating_sub(1) / 2;
        let size = values - pairs;
        add(&mut self.count, 1);
        add(&mut self.sum_sizes, size);
        self.max_size = self.max_size.max(u64::try_from(size).expect("core size fits u64"));
        add(&mut self.sum_card, card);
        add(&mut self.sum_card_pairs, pairs);
        add(&mut self.sum_values, values);
        if self.t == self.s + 1 {
            let ranks: u128 = elements.iter().map(|&v| (v / (self.s + 1)) as u128).sum();
            add(&mut self.sum_ranks, ranks);
        }
    }

    pub fn merge(mut self, other: &CoreTally) -> CoreTally {
        assert_eq!((self.s, self.t), (other.s, other.t), "tallies of different posets");
        add(&mut self.count, other.count);
        add(&mut self.sum_sizes, other.sum_sizes);
        self.max_size = self.max_size.max(other.max_size);
        add(&mut self.sum_card, other.sum_card);
        add(&mut self.sum_card_pairs, other.sum_card_pairs);
        add(&mut self.sum_values, other.sum_values);
        add(&mut self.sum_ranks, other.sum_ranks);
        self
    }

    pub fn count(&self) -> ExactInt {
        self.count.into()
    }

    pub fn stats(&self) -> CoreStats {
        assert!(self.count > 0, "no ideals observed");
        CoreStats {
            s: self.s,
            t: self.t,
            count: self.count.into(),
            sum_sizes: self.sum_sizes.into(),
            max_size: self.max_size.into(),
            average: ratio(self.sum_sizes.into(), self.count.into()),
        }
    }

    /// The `T_s` sums `f_s(σ)`, `f_s(τ)`, `f_s(ρ)` and `Σ binom(#I, 2)`.
    pub fn staircase_sums(&self) -> StaircaseSums {
        assert_eq!(self.t, self.s + 1, "not a staircase tally");
        StaircaseSums {
            s: self.s,
            count: self.count.into(),
            f_sigma: self.sum_values.into(),
            f_tau: self.sum_card.into(),
            f_rho: self.sum_ranks.into(),
            card_pairs: self.sum_card_pairs.into(),
        }
    }
}

/// Count, total size, largest size and average size of all `(s,t)`-cores.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreStats {
    pub s: u64,
    pub t: u64,
    pub count: ExactInt,
    pub sum_sizes: ExactInt,
    pub max_size: ExactInt,
    pub average: ExactRatio,
}

fn tally_serial(poset: &GapPoset) -> CoreTally {
    let mut tally = CoreTally::new(poset);
    for_each_ideal(poset, |v| tally.observe(v));
    tally
}

fn checked_poset(s: u64, t: u64, cap: u64) -> Result<GapPoset> {
    check_cap(s, t, cap)?;
    GapPoset::new(s, t)
}

/// `T_s` after checking its Catalan count against `cap`.
pub fn checked_staircase(s: u64, cap: u64) -> Result<GapPoset> {
    if s >= 1 {
        check_cap(s, s + 1, cap)?;
    }
    Ok(GapPoset::staircase(s))
}

pub fn core_statistics(s: u64, t: u64, cap: u64) -> Result<CoreStats> {
    Ok(tally_serial(&checked_poset(s, t, cap)?).stats())
}

/// Total size of all `(s,t)`-cores predicted by the average-size formula:
/// `(s+t+1)(s-1)(t-1) / (24(s+t)) · binom(s+t, s)`.
pub fn armstrong_closed(s: u64, t: u64) -> Result<ExactInt> {
    crate::semigroup_poset::frobenius(s, t)?;
    let num = ExactInt::from(s + t + 1) * (s - 1) * (t - 1) * binomial(s + t, s as i64);
    exact_div(&num, &(ExactInt::from(24u32) * (s + t)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArmstrongReport {
    pub s: u64,
    pub t: u64,
    pub brute: ExactInt,
    pub closed: ExactInt,
    pub equal: bool,
}

/// Compares already computed statistics with the closed form.
pub fn armstrong_report(stats: &CoreStats) -> Result<ArmstrongReport> {
    let closed = armstrong_closed(stats.s, stats.t)?;
    Ok(ArmstrongReport {
        s: stats.s,
        t: stats.t,
        equal: closed == stats.sum_sizes,
        brute: stats.sum_sizes.clone(),
        closed,
    })
}

pub fn verify_armstrong(s: u64, t: u64, cap: u64) -> Result<ArmstrongReport> {
    armstrong_report(&core_statistics(s, t, cap)?)
}

/// `f(w) = Σ_I Σ_{a∈I} w(a)` over the ideals of `poset`, evaluating `w`
/// element by element.
pub fn weighted_sum_in(poset: &GapPoset, w: WeightFn) -> Result<ExactInt> {
    if w.rho != 0 && !poset.is_staircase() {
        return Err(Error::UnrankedPoset { s: poset.s(), t: poset.t() });
    }
    let mut total = ExactInt::zero();
    let mut failure = None;
    for_each_ideal(poset, |v| {
        let mut local: i128 = 0;
        for &x in v {
            match w.eval(poset, x) {
                Ok(wx) => local = local.checked_add(wx).expect("weight sum overflowed i128"),
                Err(e) => failure = Some(e),
            }
        }
        total += local;
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(total),
    }
}

/// `f_s(w)` over the ideals of `T_s`.
pub fn weighted_ideal_sum(s: u64, w: WeightFn, cap: u64) -> Result<ExactInt> {
    weighted_sum_in(&checked_staircase(s, cap)?, w)
}

/// `g_s(σ) = f_s(σ) - Σ_I binom(#I, 2)`, the total size of all
/// `(s,s+1)`-cores.
pub fn g_sigma_brute(s: u64, cap: u64) -> Result<ExactInt> {
    let sums = staircase_sums(s, cap)?;
    Ok(sums.f_sigma - sums.card_pairs)
}

/// Brute-force sums over the ideals of `T_s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaircaseSums {
    pub s: u64,
    pub count: ExactInt,
    pub f_sigma: ExactInt,
    pub f_tau: ExactInt,
    pub f_rho: ExactInt,
    pub card_pairs: ExactInt,
}

pub fn staircase_sums(s: u64, cap: u64) -> Result<StaircaseSums> {
    Ok(tally_serial(&checked_staircase(s, cap)?).staircase_sums())
}

/// Whether every `(s,t)`-core is also an `(s, s+t)`-core.
pub fn lemma_st_check(s: u64, t: u64, cap: u64) -> Result<bool> {
    let (passing, total) = lemma_st_counts(s, t, cap)?;
    Ok(passing == total)
}

/// How many of the `(s,t)`-cores are `(s, s+t)`-cores, and how many
/// `(s,t)`-cores there are.
pub fn lemma_st_counts(s: u64, t: u64, cap: u64) -> Result<(ExactInt, ExactInt)> {
    let poset = checked_poset(s, t, cap)?;
    let (mut passing, mut total) = (0u64, 0u64);
    for_each_ideal(&poset, |v| {
        total += 1;
        if partition_of_elements(v).is_st_core(s, s + t) {
            passing += 1;
        }
    });
    Ok((passing.into(), total.into()))
}

/// Size of the largest `(s,t)`-core, `(s² - 1)(t² - 1) / 24`.
pub fn max_core_size(s: u64, t: u64) -> Result<ExactInt> {
    crate::semigroup_poset::frobenius(s, t)?;
    let num = (ExactInt::from(s) * s - 1u32) * (ExactInt::from(t) * t - 1u32);
    exact_div(&num, &ExactInt::from(24u32))
}
