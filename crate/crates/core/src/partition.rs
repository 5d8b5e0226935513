//! Integer partitions, hook lengths and the core predicates.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u64>,
    size: u64,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition("parts must be weakly decreasing"));
        }
        let size = parts
            .iter()
            .try_fold(0u64, |acc, &p| acc.checked_add(p))
            .ok_or(Error::InvalidPartition("size does not fit in u64"))?;
        Ok(Partition { parts, size })
    }

    /// The partition of zero.
    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Column lengths of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let mut cols = Vec::with_capacity(width as usize);
        for j in 0..width {
            cols.push(self.parts.iter().take_while(|&&p| p > j).count() as u64);
        }
        Partition { parts: cols, size: self.size }
    }

    /// Hook length of every cell, row by row.
    pub fn hook_lengths(&self) -> HookGrid {
        let conj = self.conjugate();
        let rows = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &row_len)| {
                (0..row_len)
                    .map(|j| row_len - j + conj.parts[j as usize] - i as u64 - 1)
                    .collect()
            })
            .collect();
        HookGrid { rows }
    }

    fn hooks(&self) -> Vec<u64> {
        self.hook_lengths().rows.concat()
    }

    /// True if no cell has hook length `s`.
    ///
    /// Debug builds also check the equivalent form: no hook is a multiple
    /// of `s`.
    pub fn is_s_core(&self, s: u64) -> bool {
        assert!(s >= 1, "s must be positive");
        let hooks = self.hooks();
        let core = hooks.iter().all(|&h| h != s);
        debug_assert_eq!(core, hooks.iter().all(|&h| h % s != 0));
        core
    }

    pub fn is_st_core(&self, s: u64, t: u64) -> bool {
        self.is_s_core(s) && self.is_s_core(t)
    }

    /// Hook lengths down the first column, strictly decreasing.
    pub fn first_column_hooks(&self) -> Vec<u64> {
        let n = self.parts.len() as u64;
        self.parts
            .iter()
            .enumerate()
            .map(|(k, &p)| p + (n - 1 - k as u64))
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Parses `"5,3,3,2"`; `"-"` is the empty partition. Parts that are not
/// weakly decreasing are rejected rather than sorted.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<u64>())
            .collect::<core::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidPartition("expected comma-separated positive integers"))?;
        Partition::new(parts)
    }
}

/// Hook lengths laid out like the Young diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookGrid {
    rows: Vec<Vec<u64>>,
}

impl HookGrid {
    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn max(&self) -> Option<u64> {
        self.rows.iter().flatten().copied().max()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::testutil::partitions_of;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Counts cells right of and below each cell directly.
    fn naive_hooks(p: &Partition) -> Vec<Vec<u64>> {
        let parts = p.parts();
        let mut rows = Vec::new();
        for (i, &len) in parts.iter().enumerate() {
            let mut row = Vec::new();
            for j in 0..len {
                let arm = len - j - 1;
                let leg = parts[i + 1..].iter().filter(|&&q| q > j).count() as u64;
                row.push(arm + leg + 1);
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("5,3,3,2").conjugate(), p("4,4,3,1,1"));
        assert_eq!(p("-").conjugate(), Partition::empty());
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
    }

    #[test]
    fn hook_examples() {
        assert_eq!(
            p("5,3,3,2").hook_lengths().rows(),
            &[vec![8, 7, 5, 2, 1], vec![5, 4, 2], vec![4, 3, 1], vec![2, 1]]
        );
        assert_eq!(p("1").hook_lengths().rows(), &[vec![1]]);
        assert_eq!(p("2,1").hook_lengths().rows(), &[vec![3, 1], vec![1]]);
        assert!(Partition::empty().hook_lengths().rows().is_empty());
    }

    #[test]
    fn hook_example_core_claims() {
        let lam = p("5,3,3,2");
        assert_eq!(lam.size(), 13);
        assert!(lam.is_s_core(6));
        assert!(!lam.is_s_core(5));
        for s in 9..40 {
            assert!(lam.is_s_core(s));
        }
        for s in [1, 2, 3, 4, 5, 7, 8] {
            assert!(!lam.is_s_core(s), "{s}");
        }
    }

    #[test]
    fn core_examples() {
        assert!(Partition::empty().is_s_core(3));
        assert!(p("4,2,1,1").is_st_core(3, 5));
        assert!(!p("2,1").is_st_core(3, 5));
        assert!(Partition::empty().is_st_core(7, 11));
    }

    #[test]
    fn first_column_examples() {
        assert_eq!(p("4,2,1,1").first_column_hooks(), vec![7, 4, 2, 1]);
        assert!(Partition::empty().first_column_hooks().is_empty());
        assert_eq!(p("3,1").first_column_hooks(), vec![4, 1]);
    }

    #[test]
    fn parsing_rejects_bad_input() {
        assert!(matches!("3,5".parse::<Partition>(), Err(Error::InvalidPartition(_))));
        assert!(matches!("3,0".parse::<Partition>(), Err(Error::InvalidPartition(_))));
        assert!(matches!("a,b".parse::<Partition>(), Err(Error::InvalidPartition(_))));
        assert!(matches!("".parse::<Partition>(), Err(Error::InvalidPartition(_))));
        assert_eq!(" 2, 1 ".parse::<Partition>().unwrap(), p("2,1"));
    }

    #[test]
    fn display_round_trip() {
        assert_eq!(alloc::format!("{}", p("5,3,3,2")), "5,3,3,2");
        assert_eq!(alloc::format!("{}", Partition::empty()), "-");
    }

    #[test]
    fn exhaustive_small_partitions() {
        for n in 0..=20 {
            for lam in partitions_of(n) {
                let conj = lam.conjugate();
                assert_eq!(conj.conjugate(), lam);
                assert_eq!(lam.hook_lengths().rows(), naive_hooks(&lam).as_slice());

                let mut a: Vec<u64> = lam.hook_lengths().rows().concat();
                let mut b: Vec<u64> = conj.hook_lengths().rows().concat();
                a.sort_unstable();
                b.sort_unstable();
                assert_eq!(a, b);

                // a hook equal to m*s forces a hook equal to s
                for s in 1..=8 {
                    for m in 1..=3 {
                        if a.contains(&(m * s)) {
                            assert!(a.contains(&s), "{lam} s={s} m={m}");
                        }
                    }
                }

                let fc = lam.first_column_hooks();
                assert!(fc.windows(2).all(|w| w[0] > w[1]));
                let firsts: Vec<u64> = lam.hook_lengths().rows().iter().map(|r| r[0]).collect();
                assert_eq!(fc, firsts);
            }
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    proptest! {
        #[test]
        fn parse_display_round_trip(mut parts in proptest::collection::vec(1u64..50, 0..12)) {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let lam = Partition::new(parts).unwrap();
            let text = alloc::format!("{lam}");
            prop_assert_eq!(text.parse::<Partition>().unwrap(), lam);
        }
    }
}
