//! Closed Stirling-number formulas for `B_n^(α)(x)` and `E_n^(α)(x)`.
//!
//! Both polynomials have the shape `Σ_k C(n,k) c_k x^{n-k}` where `c_k` is
//! the `k`-th derivative at zero of `((e^t - 1)/t)^{-α}` (Bernoulli) or
//! `((e^t + 1)/2)^{-α}` (Euler). The two inner sums below evaluate those
//! derivatives for an arbitrary falling-factorial argument `a`, so the same
//! code gives the Hessenberg entries `γ_k`, `β_k` with `a = α`.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::{binomial, factorial, falling_factorial, pow, Rational};
use crate::combinatorics::StirlingTable;
use crate::error::Result;

/// Dense polynomial in `x`, `coeffs()[d]` multiplying `x^d`.
/// Trailing zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> Rational {
        self.coeffs.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }
}

fn signed(sign_odd: bool, v: Rational) -> Rational {
    if sign_odd {
        -v
    } else {
        v
    }
}

/// `Σ_{i=0}^{k} ⟨a⟩_i k!/(k+i)! Σ_{j=0}^{i} (-1)^{i-j} C(k+i, i-j) S(k+j, j)`.
///
/// With `a = -α` this is the `k`-th derivative of `((e^t - 1)/t)^{-α}` at 0,
/// with `a = α` it is `γ_k`. Reads Stirling rows up to `2k`.
pub fn inner_sum_a(k: usize, a: &Rational, table: &StirlingTable) -> Result<Rational> {
    table.require(2 * k)?;
    let k_fact = factorial(k);
    let mut total = Rational::zero();
    for i in 0..=k {
        let ff = falling_factorial(a, i);
        if ff.is_zero() {
            // ⟨a⟩_i = 0 for every later i as well (a is a nonnegative integer < i)
            break;
        }
        let mut inner = Rational::zero();
        for j in 0..=i {
            let s = table.get(k + j, j);
            if s.is_zero() {
                continue;
            }
            inner += signed((i - j) % 2 == 1, binomial(k + i, i - j) * s);
        }
        total += ff * &k_fact / factorial(k + i) * inner;
    }
    Ok(total)
}

/// `Σ_{i=0}^{k} ⟨a⟩_i S(k, i) / 2^i`.
///
/// With `a = -α` this is the `k`-th derivative of `((e^t + 1)/2)^{-α}` at 0,
/// with `a = α` it is `β_k`.
pub fn inner_sum_c(k: usize, a: &Rational, table: &StirlingTable) -> Result<Rational> {
    table.require(k)?;
    let half = Rational::new(1.into(), 2.into());
    let mut total = Rational::zero();
    for i in 0..=k {
        let s = table.get(k, i);
        if s.is_zero() {
            continue;
        }
        total += falling_factorial(a, i) * s * pow(&half, i);
    }
    Ok(total)
}

// Σ_k C(n,k) c_k x^{n-k}, c_k supplied by `inner`.
fn appell_polynomial(n: usize, inner: impl Fn(usize) -> Result<Rational>) -> Result<Polynomial> {
    let mut coeffs = alloc::vec![Rational::zero(); n + 1];
    for k in 0..=n {
        coeffs[n - k] = binomial(n, k) * inner(k)?;
    }
    Ok(Polynomial::new(coeffs))
}

/// `B_n^(α)(x)` as an explicit polynomial. Needs Stirling rows up to `2n`.
pub fn bernoulli_poly_closed(
    n: usize,
    alpha: &Rational,
    table: &StirlingTable,
) -> Result<Polynomial> {
    table.require(2 * n)?;
    let a = -alpha;
    appell_polynomial(n, |k| inner_sum_a(k, &a, table))
}

/// `B_n^(α) = B_n^(α)(0)`.
pub fn bernoulli_number_closed(
    n: usize,
    alpha: &Rational,
    table: &StirlingTable,
) -> Result<Rational> {
    inner_sum_a(n, &-alpha, table)
}

/// Classical `B_n` as `Σ_{j=0}^{n} (-1)^j C(n+1, j+1) / C(n+j, j) · S(n+j, j)`.
pub fn bernoulli_number_qi(n: usize, table: &StirlingTable) -> Result<Rational> {
    table.require(2 * n)?;
    let mut total = Rational::zero();
    for j in 0..=n {
        let s = table.get(n + j, j);
        if s.is_zero() {
            continue;
        }
        let term = binomial(n + 1, j + 1) / binomial(n + j, j) * s;
        total += signed(j % 2 == 1, term);
    }
    Ok(total)
}

/// `E_n^(α)(x)` as an explicit polynomial. Needs Stirling rows up to `n`.
pub fn euler_poly_closed(n: usize, alpha: &Rational, table: &StirlingTable) -> Result<Polynomial> {
    table.require(n)?;
    let a = -alpha;
    appell_polynomial(n, |k| inner_sum_c(k, &a, table))
}

/// Higher-order Euler number
/// `Σ_{k=0}^{n} C(n,k) Σ_{i=0}^{k} ⟨-α⟩_i S(k,i) 2^{k-i}`,
/// which equals `2^n E_n^(α)(1/2)`.
pub fn euler_number_closed(n: usize, alpha: &Rational, table: &StirlingTable) -> Result<Rational> {
    table.require(n)?;
    let a = -alpha;
    let two = Rational::from_integer(2.into());
    let mut total = Rational::zero();
    for k in 0..=n {
        let mut inner = Rational::zero();
        for i in 0..=k {
            let s = table.get(k, i);
            if s.is_zero() {
                continue;
            }
            inner += falling_factorial(&a, i) * s * pow(&two, k - i);
        }
        total += binomial(n, k) * inner;
    }
    Ok(total)
}

/// Whether `p` has degree exactly `n` and leading coefficient 1.
pub fn is_monic_of_degree(p: &Polynomial, n: usize) -> bool {
    p.degree() == Some(n) && p.leading().is_one()
}
