//! The `verify` targets. Each one builds a [`Report`] of exact
//! comparisons; brute-force sides run on the [`Executor`].

use num_integer::Integer;
use stcore::ideal_enum::{check_cap, ideal_count};
use stcore::identities::{
    check_catalan_average, check_delta, check_recursions, check_s4_recurrence, check_wz1,
    check_wz2, fiber_decomposition_total, f_closed, g_closed, h_closed, s4_total, Ingredients,
    Sequences,
};
use stcore::report::{Comparison, Report};
use stcore::statistics::{armstrong_closed, checked_staircase, lemma_st_counts, max_core_size, StaircaseSums};
use stcore::{ExactInt, GapPoset, Result};

use crate::parallel::Executor;

/// Coprime pairs `1 <= s < t` with `s + t <= max_sum`.
pub fn coprime_pairs(max_sum: u64) -> Vec<(u64, u64)> {
    let mut pairs = Vec::new();
    for s in 1..max_sum {
        for t in s + 1..=max_sum - s {
            if s.gcd(&t) == 1 {
                pairs.push((s, t));
            }
        }
    }
    pairs
}

fn pair_index(s: u64, t: u64) -> String {
    format!("({s},{t})")
}

/// Brute total, count and largest size of the `(s,t)`-cores against the
/// closed forms.
pub fn armstrong_pair(ex: &Executor, s: u64, t: u64, cap: u64) -> Result<Report> {
    check_cap(s, t, cap)?;
    let st = ex.tally(&GapPoset::new(s, t)?).stats();
    let idx = pair_index(s, t);
    Ok(Report {
        rows: vec![
            Comparison::new("armstrong-sum", idx.clone(), st.sum_sizes, armstrong_closed(s, t)?),
            Comparison::new("armstrong-count", idx.clone(), st.count, ideal_count(s, t)?),
            Comparison::new("armstrong-max", idx, st.max_size, max_core_size(s, t)?),
        ],
    })
}

pub fn armstrong(ex: &Executor, max_sum: u64, cap: u64) -> Result<Report> {
    let mut report = Report::default();
    for (s, t) in coprime_pairs(max_sum) {
        report.extend(armstrong_pair(ex, s, t, cap)?);
    }
    Ok(report)
}

fn staircase_sums(ex: &Executor, max_s: u64, cap: u64) -> Result<Vec<StaircaseSums>> {
    (0..=max_s).map(|s| Ok(ex.tally(&checked_staircase(s, cap)?).staircase_sums())).collect()
}

/// Total `(s,s+1)`-core size by brute force, by its recursion, by the
/// closed form, and by the fiber decomposition for `s <= max_s`; the
/// average size `binom(s+1,3)/2` for `s <= avg_max`.
pub fn catalan(ex: &Executor, max_s: u64, avg_max: u64, cap: u64) -> Result<Report> {
    let ing = Ingredients::new(staircase_sums(ex, max_s, cap)?);
    let mut seq = Sequences::new();
    seq.ensure(max_s);
    let mut report = Report::default();
    for s in 0..=max_s {
        let sums = ing.get(s);
        let idx = format!("s={s}");
        let brute = &sums.f_sigma - &sums.card_pairs;
        report.push(Comparison::new("g-brute", idx.clone(), brute, seq.g(s).clone()));
        report.push(Comparison::new("g-dp", idx.clone(), seq.g_sigma_dp(s).clone(), seq.g(s).clone()));
        report.push(Comparison::new("g-decomposition", idx, fiber_decomposition_total(s, &ing), seq.g(s).clone()));
    }
    report.extend(check_catalan_average(avg_max));
    Ok(report)
}

/// Both summation identities and the recursions up to `max_s`, and the
/// closed forms for `f(τ)`, `f(ρ)` and `g(σ)` against brute force up to
/// `brute_max`.
pub fn identities(ex: &Executor, max_s: u64, brute_max: u64, cap: u64) -> Result<Report> {
    let mut report = check_wz1(max_s);
    report.extend(check_wz2(max_s));
    report.extend(check_recursions(max_s));
    for sums in staircase_sums(ex, brute_max, cap)? {
        let idx = format!("s={}", sums.s);
        report.push(Comparison::new("h-closed", idx.clone(), sums.f_tau.clone(), h_closed(sums.s)));
        report.push(Comparison::new("f-closed", idx.clone(), sums.f_rho.clone(), f_closed(sums.s)?));
        report.push(Comparison::new("g-closed", idx, sums.f_sigma - sums.card_pairs, g_closed(sums.s)?));
    }
    Ok(report)
}

pub fn delta(max_n: u64, cap: u64) -> Result<Report> {
    check_delta(max_n, cap)
}

/// The `S(n)` recurrence to `max_n`, and `S(n)` against brute force on
/// `(4, 2n+1)` for `n <= brute_max`.
pub fn s4(ex: &Executor, max_n: u64, brute_max: u64, cap: u64) -> Result<Report> {
    let mut report = check_s4_recurrence(max_n);
    for n in 0..=brute_max {
        check_cap(4, 2 * n + 1, cap)?;
        let brute = ex.tally(&GapPoset::new(4, 2 * n + 1)?).stats().sum_sizes;
        report.push(Comparison::new("s4-brute", format!("n={n}"), brute, s4_total(n)));
    }
    Ok(report)
}

/// For each coprime pair, the number of `(s,t)`-cores that are also
/// `(s,s+t)`-cores against the number of `(s,t)`-cores.
pub fn lemma_st(max_sum: u64, cap: u64) -> Result<Report> {
    let mut report = Report::default();
    for (s, t) in coprime_pairs(max_sum) {
        let (passing, total): (ExactInt, ExactInt) = lemma_st_counts(s, t, cap)?;
        report.push(Comparison::new("lemma-st", pair_index(s, t), passing, total));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use stcore::DEFAULT_CAP;

    #[test]
    fn pairs_up_to_seven() {
        assert_eq!(
            coprime_pairs(7),
            [(1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (2, 3), (2, 5), (3, 4)]
        );
    }

    #[test]
    fn small_targets_pass() {
        let ex = Executor::serial();
        assert!(armstrong(&ex, 10, DEFAULT_CAP).unwrap().passed());
        assert!(catalan(&ex, 6, 20, DEFAULT_CAP).unwrap().passed());
        assert!(identities(&ex, 40, 6, DEFAULT_CAP).unwrap().passed());
        assert!(delta(3, DEFAULT_CAP).unwrap().passed());
        assert!(s4(&ex, 20, 2, DEFAULT_CAP).unwrap().passed());
        assert!(lemma_st(9, DEFAULT_CAP).unwrap().passed());
    }

    #[test]
    fn cap_is_enforced() {
        let ex = Executor::serial();
        assert!(matches!(armstrong_pair(&ex, 7, 9, 100), Err(stcore::Error::CapExceeded { .. })));
        assert!(matches!(catalan(&ex, 8, 5, 100), Err(stcore::Error::CapExceeded { .. })));
    }
}
