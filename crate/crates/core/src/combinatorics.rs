//! Stirling numbers of the second kind and partial Bell polynomials.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::{binomial, factorial, pow, Rational};
use crate::error::{Error, Result};

/// Triangle of `S(n, k)` for `0 <= k <= n <= max_n`, built once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StirlingTable {
    max_n: usize,
    rows: Vec<Vec<Rational>>,
}

impl StirlingTable {
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![Rational::one()]);
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let mut row = vec![Rational::zero(); n + 1];
            for (k, slot) in row.iter_mut().enumerate().skip(1) {
                *slot = prev[k - 1].clone();
                if let Some(s) = prev.get(k) {
                    *slot += s * Rational::from_integer(k.into());
                }
            }
            rows.push(row);
        }
        StirlingTable { max_n, rows }
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    /// Fails unless rows up to `n` are present.
    pub fn require(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            Err(Error::TableTooSmall {
                have: self.max_n,
                need: n,
            })
        } else {
            Ok(())
        }
    }

    /// `S(n, k)`; zero for `k > n`. Panics if `n > max_n`, see [`Self::require`].
    pub fn get(&self, n: usize, k: usize) -> Rational {
        self.rows[n].get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn row(&self, n: usize) -> &[Rational] {
        &self.rows[n]
    }
}

/// `S(n, k)` without keeping a table around.
pub fn stirling2(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    // one row at a time, only columns 0..=k
    let mut row = vec![Rational::zero(); k + 1];
    row[0] = Rational::one();
    for m in 1..=n {
        for j in (1..=k.min(m)).rev() {
            let carried = core::mem::take(&mut row[j]) * Rational::from_integer(j.into());
            row[j] = carried + &row[j - 1];
        }
        row[0] = Rational::zero();
    }
    row[k].clone()
}

/// The argument sequence `x_1, x_2, ...` of a partial Bell polynomial,
/// stored 0-based (`as_slice()[0]` is `x_1`).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BellArgs(Vec<Rational>);

impl BellArgs {
    pub fn new(values: Vec<Rational>) -> Self {
        BellArgs(values)
    }

    pub fn ones(len: usize) -> Self {
        BellArgs(vec![Rational::one(); len])
    }

    /// `(1/2, 1/3, ..., 1/(len + 1))`.
    pub fn harmonic(len: usize) -> Self {
        BellArgs(
            (2..len + 2)
                .map(|d| Rational::new(1.into(), d.into()))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    /// `x_i`, 1-based.
    fn x(&self, i: usize) -> &Rational {
        &self.0[i - 1]
    }
}

impl From<Vec<Rational>> for BellArgs {
    fn from(values: Vec<Rational>) -> Self {
        BellArgs(values)
    }
}

/// Number of arguments `B_{n,k}` reads. `B_{n,0}` and `B_{n,k}` with `k > n`
/// are constants and read none.
pub fn bell_arity(n: usize, k: usize) -> usize {
    if k == 0 || k > n {
        0
    } else {
        n - k + 1
    }
}

fn check_args(n: usize, k: usize, xs: &BellArgs) -> Result<()> {
    let needed = bell_arity(n, k);
    if xs.len() < needed {
        return Err(Error::BellArgsTooShort {
            n,
            k,
            needed,
            got: xs.len(),
        });
    }
    Ok(())
}

/// `B_{n,k}(x_1, ..., x_{n-k+1})` by the recurrence
/// `B_{m,j} = Σ_{i=1}^{m-j+1} C(m-1, i-1) x_i B_{m-i,j-1}`.
pub fn bell_partial(n: usize, k: usize, xs: &BellArgs) -> Result<Rational> {
    check_args(n, k, xs)?;
    if k > n {
        return Ok(Rational::zero());
    }
    if k == 0 {
        return Ok(if n == 0 {
            Rational::one()
        } else {
            Rational::zero()
        });
    }
    let span = n - k; // only m - j <= span is ever needed
                      // prev[d] holds B_{j-1+d, j-1}
    let mut prev: Vec<Rational> = vec![Rational::zero(); span + 1];
    prev[0] = Rational::one();
    for j in 1..=k {
        let mut cur = vec![Rational::zero(); span + 1];
        for (d, slot) in cur.iter_mut().enumerate() {
            let m = j + d;
            let mut acc = Rational::zero();
            for i in 1..=d + 1 {
                // B_{m-i, j-1} sits at offset (m - i) - (j - 1) = d + 1 - i
                let below = &prev[d + 1 - i];
                if below.is_zero() {
                    continue;
                }
                acc += binomial(m - 1, i - 1) * xs.x(i) * below;
            }
            *slot = acc;
        }
        prev = cur;
    }
    Ok(prev[span].clone())
}

/// `B_{n,k}` straight from its definition: the sum over all `(l_1, ..., l_n)`
/// with `Σ i l_i = n`, `Σ l_i = k` of `n! / Π l_i! · Π (x_i / i!)^{l_i}`.
///
/// Exponential in `n`; meant as an independent check on [`bell_partial`].
pub fn bell_partial_enum(n: usize, k: usize, xs: &BellArgs) -> Result<Rational> {
    check_args(n, k, xs)?;
    if k > n {
        return Ok(Rational::zero());
    }
    let parts = bell_arity(n, k);
    let mut total = Rational::zero();
    let mut counts = vec![0usize; parts];
    enumerate(1, n, k, &mut counts, &mut |counts| {
        let mut term = factorial(n);
        for (idx, &l) in counts.iter().enumerate() {
            if l == 0 {
                continue;
            }
            let i = idx + 1;
            term /= factorial(l);
            term *= pow(&(xs.x(i) / factorial(i)), l);
        }
        total += term;
    });
    Ok(total)
}

// Assigns l_i for i = part.. with the remaining weight and block count.
fn enumerate(
    part: usize,
    weight: usize,
    blocks: usize,
    counts: &mut [usize],
    visit: &mut dyn FnMut(&[usize]),
) {
    if weight == 0 && blocks == 0 {
        visit(counts);
        return;
    }
    if part > counts.len() || blocks == 0 || weight == 0 {
        return;
    }
    let max_l = (weight / part).min(blocks);
    for l in (0..=max_l).rev() {
        counts[part - 1] = l;
        enumerate(part + 1, weight - l * part, blocks - l, counts, visit);
    }
    counts[part - 1] = 0;
}

/// `B_{n,k}(1/2, 1/3, ..., 1/(n-k+2))` in closed form:
/// `n!/(n+k)! · Σ_{i=0}^{k} (-1)^{k-i} C(n+k, k-i) S(n+i, i)`.
pub fn bell_harmonic(n: usize, k: usize) -> Result<Rational> {
    if k == 0 || k > n {
        return Err(Error::HarmonicRange { n, k });
    }
    let mut sum = Rational::zero();
    for i in 0..=k {
        let term = binomial(n + k, k - i) * stirling2(n + i, i);
        if (k - i).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(sum * factorial(n) / factorial(n + k))
}
