//! Runs enumeration work units from [`stcore::ideal_enum::plan_work`] on a
//! rayon pool. Tallies are merged by a commutative fold, so the result does
//! not depend on scheduling.

use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuilder};
use stcore::ideal_enum::{for_each_ideal, plan_work, run_work_unit, WorkUnit};
use stcore::statistics::CoreTally;
use stcore::GapPoset;

pub struct Executor {
    pool: Option<ThreadPool>,
    threads: usize,
}

impl Executor {
    /// `threads <= 1` runs everything on the calling thread in canonical
    /// order.
    pub fn new(threads: usize) -> Result<Self, rayon::ThreadPoolBuildError> {
        let pool = if threads > 1 {
            Some(ThreadPoolBuilder::new().num_threads(threads).build()?)
        } else {
            None
        };
        Ok(Executor { pool, threads: threads.max(1) })
    }

    pub fn serial() -> Self {
        Executor { pool: None, threads: 1 }
    }

    pub fn threads(&self) -> usize {
        self.threads
    }

    fn units(&self, poset: &GapPoset) -> Vec<WorkUnit> {
        plan_work(poset, self.threads * 4)
    }

    pub fn tally(&self, poset: &GapPoset) -> CoreTally {
        match &self.pool {
            None => {
                let mut tally = CoreTally::new(poset);
                for_each_ideal(poset, |v| tally.observe(v));
                tally
            }
            Some(pool) => pool.install(|| {
                self.units(poset)
                    .par_iter()
                    .map(|unit| {
                        let mut tally = CoreTally::new(poset);
                        run_work_unit(poset, unit, |v| tally.observe(v));
                        tally
                    })
                    .reduce(|| CoreTally::new(poset), |a, b| a.merge(&b))
            }),
        }
    }

    /// Every ideal as its increasing element list, in canonical order.
    pub fn ideals(&self, poset: &GapPoset) -> Vec<Vec<u64>> {
        match &self.pool {
            None => {
                let mut out = Vec::new();
                for_each_ideal(poset, |v| out.push(v.to_vec()));
                out
            }
            Some(pool) => {
                let mut out: Vec<Vec<u64>> = pool.install(|| {
                    self.units(poset)
                        .par_iter()
                        .flat_map_iter(|unit| {
                            let mut part = Vec::new();
                            run_work_unit(poset, unit, |v| part.push(v.to_vec()));
                            part
                        })
                        .collect()
                });
                out.par_sort_unstable();
                out
            }
        }
    }

    /// Maps `f` over `items` on the pool, keeping input order.
    pub fn map<T: Sync, R: Send>(&self, items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
        match &self.pool {
            None => items.iter().map(f).collect(),
            Some(pool) => pool.install(|| items.par_iter().map(f).collect()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_matches_serial() {
        for (s, t) in [(3, 5), (5, 6), (4, 9), (5, 8), (2, 11), (7, 8)] {
            let poset = GapPoset::new(s, t).unwrap();
            let serial = Executor::serial();
            let par = Executor::new(4).unwrap();
            assert_eq!(serial.tally(&poset), par.tally(&poset));
            assert_eq!(serial.ideals(&poset), par.ideals(&poset));
        }
    }

    #[test]
    fn map_keeps_order() {
        let ex = Executor::new(3).unwrap();
        let items: Vec<u64> = (0..100).collect();
        assert_eq!(ex.map(&items, |x| x * 2), items.iter().map(|x| x * 2).collect::<Vec<_>>());
    }
}
