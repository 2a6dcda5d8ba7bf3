//! Truncated formal power series over the rationals and the
//! generating-function route to `B_n^(α)(x)` and `E_n^(α)(x)`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::{factorial, Rational};
use crate::error::{Error, Result};

/// `Σ_{k < order} c_k t^k`. Coefficients at or beyond `order` are discarded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Pads with zeros or cuts `coeffs` to exactly `order` entries.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order, Rational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rational::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    /// The series `t`.
    pub fn variable(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    /// Exponential generating series: coefficient `k` is `values[k] / k!`.
    pub fn from_egf(values: &[Rational], order: usize) -> Self {
        let coeffs = values
            .iter()
            .take(order)
            .enumerate()
            .map(|(k, v)| v / factorial(k))
            .collect();
        Self::new(coeffs, order)
    }

    /// `e^{xt} = Σ x^k t^k / k!`.
    pub fn exp_linear(x: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order);
        let mut c = Rational::one();
        for k in 0..order {
            if k > 0 {
                c = c * x / Rational::from_integer(k.into());
            }
            coeffs.push(c.clone());
        }
        TruncatedSeries { coeffs }
    }

    /// `(e^t - 1)/t = Σ t^k / (k+1)!`, never dividing by `t`.
    pub fn exp_minus_one_over_t(order: usize) -> Self {
        let coeffs = (0..order).map(|k| factorial(k + 1).recip()).collect();
        TruncatedSeries { coeffs }
    }

    /// `(e^t + 1)/2 = 1 + Σ_{k>=1} t^k / (2 k!)`.
    pub fn exp_plus_one_over_two(order: usize) -> Self {
        let half = Rational::new(1.into(), 2.into());
        let coeffs = (0..order)
            .map(|k| {
                if k == 0 {
                    Rational::one()
                } else {
                    &half / factorial(k)
                }
            })
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `[t^k]`; zero past the truncation order.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `k! [t^k]`, the `k`-th derivative at zero.
    pub fn egf_coeff(&self, k: usize) -> Rational {
        self.coeff(k) * factorial(k)
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(TruncatedSeries { coeffs })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let order = self.order();
        let mut out = vec![Rational::zero(); order];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..order - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inv(&self) -> Result<Self> {
        let order = self.order();
        if order == 0 {
            return Ok(self.clone());
        }
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let a0_inv = a0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(order);
        out.push(a0_inv.clone());
        for k in 1..order {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out.push(-acc * &a0_inv);
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `log a` for `a_0 = 1`, from `a L' = a'`.
    pub fn log(&self) -> Result<Self> {
        let order = self.order();
        if order == 0 {
            return Ok(self.clone());
        }
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTermNotOne);
        }
        let mut out = vec![Rational::zero(); order];
        for k in 1..order {
            // k a_k = Σ_{j=1}^{k} j L_j a_{k-j}
            let mut acc = &self.coeffs[k] * Rational::from_integer(k.into());
            for (j, l) in out.iter().enumerate().take(k).skip(1) {
                acc -= l * Rational::from_integer(j.into()) * &self.coeffs[k - j];
            }
            out[k] = acc / Rational::from_integer(k.into());
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `exp a` for `a_0 = 0`, from `E' = a' E`.
    pub fn exp(&self) -> Result<Self> {
        let order = self.order();
        if order == 0 {
            return Ok(self.clone());
        }
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut out: Vec<Rational> = Vec::with_capacity(order);
        out.push(Rational::one());
        for k in 1..order {
            let mut acc = Rational::zero();
            for j in 1..=k {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                acc += &self.coeffs[j] * Rational::from_integer(j.into()) * &out[k - j];
            }
            out.push(acc / Rational::from_integer(k.into()));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `a^r = exp(r log a)` for `a_0 = 1` and any rational `r`.
    pub fn pow(&self, r: &Rational) -> Result<Self> {
        if self.order() > 0 && !self.coeffs[0].is_one() {
            return Err(Error::ConstantTermNotOne);
        }
        self.log()?.scale(r).exp()
    }

    /// `f(h(t))` for `h_0 = 0`, by Horner's rule.
    pub fn compose(&self, h: &Self) -> Result<Self> {
        self.same_order(h)?;
        let order = self.order();
        if order == 0 {
            return Ok(self.clone());
        }
        if !h.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut acc = Self::zero(order);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(h)?;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }
}

/// Truncation order used for a degree-`n` request: one guard coefficient
/// past the extracted one.
pub fn default_order(n: usize) -> usize {
    n + 2
}

fn check_order(n: usize, order: usize) -> Result<()> {
    if order <= n {
        return Err(Error::OrderTooSmall { n, order });
    }
    Ok(())
}

/// `n! [t^n] (t/(e^t - 1))^α e^{xt}`, computed as
/// `((e^t - 1)/t)^{-α} e^{xt}` so `t = 0` is never divided by.
pub fn oracle_bernoulli(
    n: usize,
    alpha: &Rational,
    x: &Rational,
    order: usize,
) -> Result<Rational> {
    check_order(n, order)?;
    let kernel = TruncatedSeries::exp_minus_one_over_t(order).pow(&-alpha)?;
    let gf = kernel.mul(&TruncatedSeries::exp_linear(x, order))?;
    Ok(gf.egf_coeff(n))
}

/// `n! [t^n] (2/(e^t + 1))^α e^{xt}`.
pub fn oracle_euler(n: usize, alpha: &Rational, x: &Rational, order: usize) -> Result<Rational> {
    check_order(n, order)?;
    let kernel = TruncatedSeries::exp_plus_one_over_two(order).pow(&-alpha)?;
    let gf = kernel.mul(&TruncatedSeries::exp_linear(x, order))?;
    Ok(gf.egf_coeff(n))
}
