//! Exact scalars and the integer sequences everything else is built from.
//!
//! [`Rational`] is `num_rational::BigRational`: always stored in lowest terms
//! with a positive denominator, zero as `0/1`. Its `Display` output is the
//! canonical text form, `p/q`, or `p` when the denominator is 1, and
//! [`parse_rational`] reads that form back.

use alloc::string::ToString;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Integer-valued rational.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `p/q` reduced. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn factorial(n: usize) -> Rational {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= BigUint::from(i);
    }
    Rational::from_integer(acc.into())
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    // acc stays integral: after step i it equals C(n - k + i, i)
    for i in 1..=k {
        acc *= BigUint::from(n - k + i);
        acc /= BigUint::from(i);
    }
    Rational::from_integer(acc.into())
}

/// `⟨x⟩_n = x (x - 1) ... (x - n + 1)`, with `⟨x⟩_0 = 1`.
pub fn falling_factorial(x: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    let mut term = x.clone();
    for _ in 0..n {
        acc *= &term;
        term -= Rational::one();
    }
    acc
}

pub fn pow(base: &Rational, exp: usize) -> Rational {
    num_traits::pow(base.clone(), exp)
}

/// Parses `p`, `-p`, `p/q` or `-p/q` (decimal digits, `q > 0`).
///
/// Unreduced input such as `4/6` is accepted and reduced.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (t, None),
    };
    let digits = |d: &str| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit());
    let (negative, num_digits) = match num.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, num),
    };
    if !digits(num_digits) {
        return Err(bad());
    }
    let mut p: BigInt = num_digits.parse().map_err(|_| bad())?;
    if negative {
        p = -p;
    }
    let q: BigInt = match den {
        Some(d) if digits(d) => d.parse().map_err(|_| bad())?,
        Some(_) => return Err(bad()),
        None => BigInt::one(),
    };
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}
