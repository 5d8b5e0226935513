//! Exact integer and rational arithmetic.
//!
//! Every count, sum and average in the crate is carried as an [`ExactInt`]
//! or [`ExactRatio`]; there is no floating-point path. Divisions that a
//! closed form claims to be exact go through [`exact_div`], which reports
//! a remainder as an error instead of truncating.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type ExactInt = BigInt;

/// Rational in lowest terms with a positive denominator.
pub type ExactRatio = BigRational;

/// `n choose k`, zero when `k < 0` or `k > n`.
///
/// Uses the multiplicative formula with an exact division after every
/// step, so intermediate values never exceed the final result times `k`.
pub fn binomial(n: u64, k: i64) -> ExactInt {
    if k < 0 || k as u64 > n {
        return ExactInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = ExactInt::one();
    for i in 1..=k {
        acc *= n - k + i;
        // acc is now i * binom(n - k + i, i)
        acc /= i;
    }
    acc
}

/// The Catalan number `binom(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> ExactInt {
    exact_div(&binomial(2 * n, n as i64), &ExactInt::from(n + 1))
        .expect("n + 1 always divides binom(2n, n)")
}

/// `a / b`, failing unless the division is exact.
pub fn exact_div(a: &ExactInt, b: &ExactInt) -> Result<ExactInt> {
    if b.is_zero() {
        return Err(Error::Divisibility { dividend: a.clone(), divisor: b.clone() });
    }
    let (q, r) = a.div_rem(b);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::Divisibility { dividend: a.clone(), divisor: b.clone() })
    }
}

/// Builds `p / q` in lowest terms. Panics if `q` is zero.
pub fn ratio(p: ExactInt, q: ExactInt) -> ExactRatio {
    ExactRatio::new(p, q)
}
