//! The poset `P(s,t)` of gaps of the numerical semigroup `<s,t>`.
//!
//! An element `a` covers `b` when `a - b` is `s` or `t`. Elements are
//! identified by their integer value everywhere in the public API.
//!
//! For `t = s + 1` the poset is the staircase `T_s`: the element at rank
//! `r` and position `k` (`1 <= k <= s - 1 - r`) has value `r(s+1) + k`.

use alloc::vec;
use alloc::vec::Vec;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exactnum::ExactInt;
use crate::ideal_enum::OrderIdeal;

const NO_SLOT: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapPoset {
    s: u64,
    t: u64,
    gaps: Vec<u64>,
    /// `slot[v]` is the index of gap `v` in `gaps`, or `NO_SLOT`.
    slot: Vec<u32>,
    /// Indices of the elements `a - s` and `a - t`, when those are gaps.
    lower: Vec<[u32; 2]>,
}

fn check_generators(s: u64, t: u64) -> Result<(u64, u64)> {
    if s == 0 || t == 0 {
        return Err(Error::ZeroGenerator { s, t });
    }
    if s.gcd(&t) != 1 {
        return Err(Error::NotCoprime { s, t });
    }
    Ok((s.min(t), s.max(t)))
}

impl GapPoset {
    /// Builds `P(s,t)`. The pair is reordered so that `s <= t`; a
    /// generator equal to one gives the empty poset.
    pub fn new(s: u64, t: u64) -> Result<Self> {
        let (s, t) = check_generators(s, t)?;
        if s == 1 {
            return Ok(GapPoset::empty(s, t));
        }
        let frob = s
            .checked_mul(t)
            .map(|st| st - s - t)
            .expect("Frobenius number does not fit in u64");
        let n = usize::try_from(frob).expect("poset too large for this platform") + 1;

        let (s_us, t_us) = (s as usize, t as usize);
        let mut representable = vec![false; n];
        representable[0] = true;
        for v in 1..n {
            representable[v] =
                (v >= s_us && representable[v - s_us]) || (v >= t_us && representable[v - t_us]);
        }

        let mut gaps = Vec::new();
        let mut slot = vec![NO_SLOT; n];
        for v in 1..n {
            if !representable[v] {
                slot[v] = gaps.len() as u32;
                gaps.push(v as u64);
            }
        }
        let lookup = |v: u64, d: u64| -> u32 { if v > d { slot[(v - d) as usize] } else { NO_SLOT } };
        let lower = gaps.iter().map(|&v| [lookup(v, s), lookup(v, t)]).collect();
        Ok(GapPoset { s, t, gaps, slot, lower })
    }

    fn empty(s: u64, t: u64) -> Self {
        GapPoset { s, t, gaps: Vec::new(), slot: vec![NO_SLOT], lower: Vec::new() }
    }

    /// The staircase `T_j = P(j, j+1)`. `T_0` and `T_1` are empty.
    pub fn staircase(j: u64) -> Self {
        if j == 0 {
            return GapPoset::empty(0, 1);
        }
        GapPoset::new(j, j + 1).expect("consecutive integers are coprime")
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// Gaps in increasing order.
    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn len(&self) -> usize {
        self.gaps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gaps.is_empty()
    }

    pub fn is_staircase(&self) -> bool {
        self.t == self.s + 1
    }

    pub fn index_of(&self, value: u64) -> Option<usize> {
        let i = *self.slot.get(usize::try_from(value).ok()?)?;
        (i != NO_SLOT).then_some(i as usize)
    }

    pub fn contains(&self, value: u64) -> bool {
        self.index_of(value).is_some()
    }

    pub(crate) fn require(&self, value: u64) -> Result<usize> {
        self.index_of(value).ok_or(Error::NotAGap { value, s: self.s, t: self.t })
    }

    /// Indices of the lower covers of the element at `index`.
    pub(crate) fn lower_indices(&self, index: usize) -> impl Iterator<Item = usize> + '_ {
        self.lower[index].iter().filter(|&&i| i != NO_SLOT).map(|&i| i as usize)
    }

    /// Elements covered by `value`: the subset of `{value - s, value - t}`
    /// that are gaps.
    pub fn covers_down(&self, value: u64) -> Result<Vec<u64>> {
        let i = self.require(value)?;
        Ok(self.lower_indices(i).map(|j| self.gaps[j]).collect())
    }

    /// Position of `value` in the grid hanging from the Frobenius number:
    /// `frobenius - value = steps_s * s + steps_t * t`.
    pub fn grid_position(&self, value: u64) -> Result<(u64, u64)> {
        self.require(value)?;
        let frob = self.s * self.t - self.s - self.t;
        let gap = frob - value;
        let steps_t = (0..self.s)
            .find(|j| j * self.t <= gap && (gap - j * self.t).is_multiple_of(self.s))
            .expect("frobenius minus a gap is representable");
        Ok(((gap - steps_t * self.t) / self.s, steps_t))
    }

    /// Downward closure of `generators`.
    pub fn downward_closure(&self, generators: &[u64]) -> Result<OrderIdeal> {
        let mut member = vec![false; self.gaps.len()];
        let mut stack = Vec::with_capacity(generators.len());
        for &g in generators {
            stack.push(self.require(g)?);
        }
        while let Some(i) = stack.pop() {
            if core::mem::replace(&mut member[i], true) {
                continue;
            }
            stack.extend(self.lower_indices(i));
        }
        let elements = self.gaps.iter().zip(&member).filter(|(_, &m)| m).map(|(&v, _)| v).collect();
        Ok(OrderIdeal::from_sorted_unchecked(self.s, self.t, elements))
    }
}

/// Builds `P(s,t)`; see [`GapPoset::new`].
pub fn build_gap_poset(s: u64, t: u64) -> Result<GapPoset> {
    GapPoset::new(s, t)
}

/// The largest gap, `st - s - t`. This is `-1` when a generator is one.
pub fn frobenius(s: u64, t: u64) -> Result<ExactInt> {
    let (s, t) = check_generators(s, t)?;
    Ok(ExactInt::from(s) * t - s - t)
}

/// Downward closure of a set of generators inside `poset`.
pub fn principal_ideal(poset: &GapPoset, generators: &[u64]) -> Result<OrderIdeal> {
    poset.downward_closure(generators)
}

/// Rank/position coordinates of an element of `T_s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StaircaseCoord {
    pub rank: u64,
    pub pos: u64,
}

impl StaircaseCoord {
    pub fn of(s: u64, value: u64) -> Result<Self> {
        let not_gap = Error::NotAGap { value, s, t: s + 1 };
        if s < 2 {
            return Err(not_gap);
        }
        let (rank, pos) = (value / (s + 1), value % (s + 1));
        if pos == 0 || pos + rank > s - 1 {
            return Err(not_gap);
        }
        Ok(StaircaseCoord { rank, pos })
    }

    pub fn value(self, s: u64) -> u64 {
        self.rank * (s + 1) + self.pos
    }
}

/// Rank of `value` in `T_s`, with the minimal elements `1..s-1` at rank 0.
pub fn rank_in_ts(s: u64, value: u64) -> Result<u64> {
    StaircaseCoord::of(s, value).map(|c| c.rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;

    #[test]
    fn p35() {
        let p = GapPoset::new(3, 5).unwrap();
        assert_eq!(p.gaps(), &[1, 2, 4, 7]);
        assert_eq!(p.covers_down(7).unwrap(), vec![4, 2]);
        assert_eq!(p.covers_down(4).unwrap(), vec![1]);
        assert!(p.covers_down(2).unwrap().is_empty());
        assert!(p.covers_down(1).unwrap().is_empty());
        assert!(matches!(p.covers_down(3), Err(Error::NotAGap { value: 3, .. })));
    }

    #[test]
    fn p313() {
        let p = GapPoset::new(3, 13).unwrap();
        assert_eq!(p.gaps(), &[1, 2, 4, 5, 7, 8, 10, 11, 14, 17, 20, 23]);
        assert_eq!(GapPoset::new(13, 3).unwrap(), p);
    }

    #[test]
    fn rejects_bad_generators() {
        assert_eq!(GapPoset::new(2, 4), Err(Error::NotCoprime { s: 2, t: 4 }));
        assert_eq!(frobenius(6, 9), Err(Error::NotCoprime { s: 6, t: 9 }));
        assert!(matches!(GapPoset::new(0, 1), Err(Error::ZeroGenerator { .. })));
    }

    #[test]
    fn unit_generator_gives_empty_poset() {
        assert!(GapPoset::new(1, 7).unwrap().is_empty());
        assert!(GapPoset::new(4, 1).unwrap().is_empty());
        assert!(GapPoset::new(1, 1).unwrap().is_empty());
        assert!(GapPoset::staircase(0).is_empty());
        assert!(GapPoset::staircase(1).is_empty());
        assert_eq!(GapPoset::staircase(2).gaps(), &[1]);
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(frobenius(3, 5).unwrap(), 7.into());
        assert_eq!(frobenius(2, 3).unwrap(), 1.into());
        assert_eq!(frobenius(5, 6).unwrap(), 19.into());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_in_ts(5, 7).unwrap(), 1);
        assert_eq!(rank_in_ts(5, 4).unwrap(), 0);
        assert_eq!(rank_in_ts(5, 19).unwrap(), 3);
        assert!(matches!(rank_in_ts(5, 6), Err(Error::NotAGap { .. })));
        assert!(matches!(rank_in_ts(5, 12), Err(Error::NotAGap { .. })));
        assert!(matches!(rank_in_ts(5, 20), Err(Error::NotAGap { .. })));
    }

    #[test]
    fn principal_ideal_examples() {
        let p37 = GapPoset::new(3, 7).unwrap();
        assert_eq!(principal_ideal(&p37, &[11]).unwrap().elements(), &[1, 2, 4, 5, 8, 11]);
        let p35 = GapPoset::new(3, 5).unwrap();
        assert_eq!(principal_ideal(&p35, &[4]).unwrap().elements(), &[1, 4]);
        assert!(principal_ideal(&p35, &[]).unwrap().is_empty());
        assert!(matches!(principal_ideal(&p35, &[3]), Err(Error::NotAGap { .. })));
    }

    #[test]
    fn gap_counts_and_frobenius() {
        for s in 1..30u64 {
            for t in s..30 - s + 1 {
                if s.gcd(&t) != 1 {
                    continue;
                }
                let p = GapPoset::new(s, t).unwrap();
                assert_eq!(p.len() as u64, (s - 1) * (t - 1) / 2, "({s},{t})");
                if s > 1 {
                    assert_eq!(ExactInt::from(*p.gaps().last().unwrap()), frobenius(s, t).unwrap());
                }
                for &a in p.gaps() {
                    for d in [s, t] {
                        if a > d {
                            let b = a - d;
                            // b non-representable exactly when it is a gap
                            let representable = (0..=b / s).any(|i| (b - i * s) % t == 0);
                            assert_eq!(p.contains(b), !representable);
                        }
                    }
                    let covers = p.covers_down(a).unwrap();
                    assert!(covers.iter().all(|&b| a - b == s || a - b == t));
                }
            }
        }
    }

    #[test]
    fn staircase_coordinates_biject_onto_gaps() {
        for s in 2..=50u64 {
            let p = GapPoset::staircase(s);
            let mut from_coords = Vec::new();
            for r in 0..=s - 2 {
                for k in 1..=s - 1 - r {
                    from_coords.push(StaircaseCoord { rank: r, pos: k }.value(s));
                }
            }
            from_coords.sort_unstable();
            assert_eq!(from_coords, p.gaps());

            for &a in p.gaps() {
                let c = StaircaseCoord::of(s, a).unwrap();
                assert_eq!(c.value(s), a);
                let mut expected = Vec::new();
                if c.rank >= 1 {
                    expected.push(StaircaseCoord { rank: c.rank - 1, pos: c.pos + 1 }.value(s));
                    expected.push(StaircaseCoord { rank: c.rank - 1, pos: c.pos }.value(s));
                }
                assert_eq!(p.covers_down(a).unwrap(), expected);
            }
            let top = *p.gaps().last().unwrap();
            assert_eq!(rank_in_ts(s, top).unwrap(), s - 2);
        }
    }

    #[test]
    fn grid_positions() {
        let p = GapPoset::new(3, 5).unwrap();
        assert_eq!(p.grid_position(7).unwrap(), (0, 0));
        assert_eq!(p.grid_position(4).unwrap(), (1, 0));
        assert_eq!(p.grid_position(2).unwrap(), (0, 1));
        assert_eq!(p.grid_position(1).unwrap(), (2, 0));
        let t5 = GapPoset::staircase(5);
        for &a in t5.gaps() {
            let (i, j) = t5.grid_position(a).unwrap();
            assert_eq!(s_minus_two_minus(i + j), rank_in_ts(5, a).unwrap());
        }
        fn s_minus_two_minus(depth: u64) -> u64 {
            3 - depth
        }
    }
}
