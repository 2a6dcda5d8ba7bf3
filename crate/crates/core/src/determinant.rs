//! Exact determinants and the Hessenberg-determinant route.
//!
//! The `k`-th derivative of a quotient `p/q` at a point is
//! `(-1)^k / q^{k+1} · det W`, where `W` is `(k+1) × (k+1)` with first column
//! `p, p', ..., p^{(k)}` and entry `C(i-1, j-1) q^{(i-j)}` in column `j + 1`
//! (1-based, zero above the band). Feeding `p = e^{xt}` and
//! `q = ((e^t - 1)/t)^α` or `((e^t + 1)/2)^α` gives `B_n^(α)(x)` and
//! `E_n^(α)(x)`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{binomial, pow, Rational};
use crate::closed::{inner_sum_a, inner_sum_c};
use crate::combinatorics::StirlingTable;
use crate::error::{Error, Result};

/// Largest dimension [`det_minor_oracle`] accepts.
pub const MINOR_ORACLE_MAX_DIM: usize = 9;

/// Dense square matrix over the rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqMatrix {
    dim: usize,
    entries: Vec<Rational>,
}

impl SqMatrix {
    pub fn zeros(dim: usize) -> Self {
        SqMatrix {
            dim,
            entries: alloc::vec![Rational::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::NotSquare { dim });
        }
        Ok(SqMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: Rational) {
        self.entries[row * self.dim + col] = v;
    }

    pub fn row(&self, row: usize) -> &[Rational] {
        &self.entries[row * self.dim..(row + 1) * self.dim]
    }

    // Removes `row` and `col`.
    fn minor(&self, row: usize, col: usize) -> SqMatrix {
        let dim = self.dim - 1;
        let mut entries = Vec::with_capacity(dim * dim);
        for r in (0..self.dim).filter(|&r| r != row) {
            for c in (0..self.dim).filter(|&c| c != col) {
                entries.push(self.get(r, c).clone());
            }
        }
        SqMatrix { dim, entries }
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Each row is first scaled by the LCM of its denominators so elimination
/// runs over the integers; the scale is divided back out at the end. A zero
/// pivot is replaced by the first nonzero entry below it. The empty matrix
/// has determinant 1.
pub fn det_exact(m: &SqMatrix) -> Rational {
    let n = m.dim();
    if n == 0 {
        return Rational::one();
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for r in 0..n {
        let row = m.row(r);
        let lcm = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        a.push(row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect());
        scale *= lcm;
    }

    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                // exact by Sylvester's identity
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    let det = if negate { -det } else { det };
    Rational::new(det, scale)
}

/// Determinant by cofactor expansion along the first row. Factorial cost,
/// so limited to [`MINOR_ORACLE_MAX_DIM`].
pub fn det_minor_oracle(m: &SqMatrix) -> Result<Rational> {
    if m.dim() > MINOR_ORACLE_MAX_DIM {
        return Err(Error::DimensionTooLarge {
            dim: m.dim(),
            max: MINOR_ORACLE_MAX_DIM,
        });
    }
    Ok(cofactor(m))
}

fn cofactor(m: &SqMatrix) -> Rational {
    match m.dim() {
        0 => Rational::one(),
        1 => m.get(0, 0).clone(),
        n => {
            let mut total = Rational::zero();
            for c in 0..n {
                let v = m.get(0, c);
                if v.is_zero() {
                    continue;
                }
                let term = v * cofactor(&m.minor(0, c));
                if c % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
            }
            total
        }
    }
}

/// Derivative jets `p(0), p'(0), ...` and `q(0), q'(0), ...` of a quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JetPair {
    p: Vec<Rational>,
    q: Vec<Rational>,
}

impl JetPair {
    pub fn new(p: Vec<Rational>, q: Vec<Rational>) -> Result<Self> {
        if p.is_empty() || p.len() != q.len() {
            return Err(Error::JetShape {
                p: p.len(),
                q: q.len(),
            });
        }
        if q[0].is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(JetPair { p, q })
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    pub fn p(&self) -> &[Rational] {
        &self.p
    }

    pub fn q(&self) -> &[Rational] {
        &self.q
    }

    /// The `(k+1) × (k+1)` matrix `W` whose determinant gives the `k`-th
    /// derivative of `p/q`.
    pub fn quotient_matrix(&self, k: usize) -> Result<SqMatrix> {
        if self.len() < k + 1 {
            return Err(Error::JetTooShort {
                k,
                needed: k + 1,
                got: self.len(),
            });
        }
        let dim = k + 1;
        let mut w = SqMatrix::zeros(dim);
        for i in 0..dim {
            w.set(i, 0, self.p[i].clone());
            for j in 0..(i + 1).min(dim - 1) {
                w.set(i, j + 1, binomial(i, j) * &self.q[i - j]);
            }
        }
        Ok(w)
    }
}

/// `d^k/dt^k [p/q]` at the jet point, `(-1)^k det W / q(0)^{k+1}`.
pub fn quotient_derivative(jets: &JetPair, k: usize) -> Result<Rational> {
    let w = jets.quotient_matrix(k)?;
    let det = det_exact(&w);
    let det = if k % 2 == 1 { -det } else { det };
    Ok(det / pow(&jets.q[0], k + 1))
}

/// `(-1)^n det W` with first column `1, x, ..., x^n` and band sequence
/// `seq`, divided by `seq[0]^{n+1}`. With `seq = γ` this is `B_n^(α)(x)`,
/// with `seq = β` it is `E_n^(α)(x)`. `n = 0` gives 1.
pub fn hessenberg_expression(n: usize, x: &Rational, seq: &[Rational]) -> Result<Rational> {
    if n == 0 {
        return Ok(Rational::one());
    }
    let powers: Vec<Rational> = (0..seq.len()).map(|i| pow(x, i)).collect();
    let jets = JetPair::new(powers, seq.to_vec())?;
    quotient_derivative(&jets, n)
}

/// `γ_0, ..., γ_{n_max}`: derivatives at 0 of `((e^t - 1)/t)^α`.
pub fn gamma_seq(n_max: usize, alpha: &Rational, table: &StirlingTable) -> Result<Vec<Rational>> {
    table.require(2 * n_max)?;
    (0..=n_max).map(|n| inner_sum_a(n, alpha, table)).collect()
}

/// `β_0, ..., β_{n_max}`: derivatives at 0 of `((e^t + 1)/2)^α`.
pub fn beta_seq(n_max: usize, alpha: &Rational, table: &StirlingTable) -> Result<Vec<Rational>> {
    table.require(n_max)?;
    (0..=n_max).map(|n| inner_sum_c(n, alpha, table)).collect()
}

pub fn bernoulli_via_det(
    n: usize,
    alpha: &Rational,
    x: &Rational,
    table: &StirlingTable,
) -> Result<Rational> {
    let gamma = gamma_seq(n, alpha, table)?;
    hessenberg_expression(n, x, &gamma)
}

pub fn euler_via_det(
    n: usize,
    alpha: &Rational,
    x: &Rational,
    table: &StirlingTable,
) -> Result<Rational> {
    let beta = beta_seq(n, alpha, table)?;
    hessenberg_expression(n, x, &beta)
}

/// Whether every entry strictly above the first superdiagonal is zero.
pub fn is_lower_hessenberg(m: &SqMatrix) -> bool {
    (0..m.dim()).all(|i| (i + 2..m.dim()).all(|j| m.get(i, j).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, ratio};
    use alloc::vec;

    fn m(rows: &[&[Rational]]) -> SqMatrix {
        SqMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn det_examples() {
        assert_eq!(det_exact(&SqMatrix::identity(4)), int(1));
        let two = m(&[&[int(1), int(1)], &[int(0), ratio(1, 2)]]);
        assert_eq!(det_exact(&two), ratio(1, 2));
        assert_eq!(det_exact(&SqMatrix::zeros(0)), int(1));
        assert_eq!(det_exact(&SqMatrix::zeros(3)), int(0));
    }

    #[test]
    fn det_needs_pivot_swap() {
        let a = m(&[
            &[int(0), int(2), int(1)],
            &[int(3), int(0), int(0)],
            &[int(0), int(0), ratio(1, 3)],
        ]);
        // expand: -3 * (2 * 1/3 - 0) = -2
        assert_eq!(det_exact(&a), int(-2));
        assert_eq!(det_minor_oracle(&a).unwrap(), int(-2));
    }

    #[test]
    fn minor_oracle_examples() {
        assert_eq!(
            det_minor_oracle(&m(&[&[ratio(-3, 4)]])).unwrap(),
            ratio(-3, 4)
        );
        let upper = m(&[
            &[int(2), int(9), ratio(1, 7)],
            &[int(0), ratio(-1, 3), int(5)],
            &[int(0), int(0), int(6)],
        ]);
        assert_eq!(det_minor_oracle(&upper).unwrap(), int(-4));
        assert_eq!(
            det_minor_oracle(&SqMatrix::identity(10)),
            Err(Error::DimensionTooLarge { dim: 10, max: 9 })
        );
    }

    #[test]
    fn from_rows_rejects_ragged() {
        let err = SqMatrix::from_rows(vec![vec![int(1), int(2)], vec![int(3)]]);
        assert_eq!(err, Err(Error::NotSquare { dim: 2 }));
    }

    #[test]
    fn quotient_matrix_shape() {
        let jets = JetPair::new(
            vec![int(1), int(2), int(3), int(4)],
            vec![int(5), int(6), int(7), int(8)],
        )
        .unwrap();
        let w = jets.quotient_matrix(3).unwrap();
        assert!(is_lower_hessenberg(&w));
        assert_eq!(w.row(0), &[int(1), int(5), int(0), int(0)]);
        assert_eq!(w.row(1), &[int(2), int(6), int(5), int(0)]);
        assert_eq!(w.row(2), &[int(3), int(7), int(12), int(5)]);
        assert_eq!(w.row(3), &[int(4), int(8), int(21), int(18)]);
    }

    #[test]
    fn quotient_derivative_examples() {
        let jets = JetPair::new(vec![int(3)], vec![int(4)]).unwrap();
        assert_eq!(quotient_derivative(&jets, 0).unwrap(), ratio(3, 4));
        // p = e^{0 t}, q = (e^t - 1)/t: first derivative of the quotient is B_1
        let jets = JetPair::new(vec![int(1), int(0)], vec![int(1), ratio(1, 2)]).unwrap();
        assert_eq!(quotient_derivative(&jets, 1).unwrap(), ratio(-1, 2));
        assert_eq!(
            quotient_derivative(&jets, 2),
            Err(Error::JetTooShort {
                k: 2,
                needed: 3,
                got: 2
            })
        );
        assert_eq!(
            JetPair::new(vec![int(1)], vec![int(0)]),
            Err(Error::ZeroDenominator)
        );
        assert_eq!(
            JetPair::new(vec![int(1)], vec![int(1), int(2)]),
            Err(Error::JetShape { p: 1, q: 2 })
        );
    }

    #[test]
    fn gamma_beta_examples() {
        let t = StirlingTable::new(24);
        let g = gamma_seq(10, &int(1), &t).unwrap();
        assert_eq!(g[0], int(1));
        assert_eq!(g[1], ratio(1, 2));
        for (n, gn) in g.iter().enumerate() {
            assert_eq!(gn, &ratio(1, n as i64 + 1));
        }
        assert_eq!(gamma_seq(3, &ratio(-5, 2), &t).unwrap()[0], int(1));
        let b = beta_seq(10, &int(1), &t).unwrap();
        assert_eq!(b[0], int(1));
        for bn in &b[1..] {
            assert_eq!(bn, &ratio(1, 2));
        }
        assert_eq!(beta_seq(4, &int(7), &t).unwrap()[0], int(1));
        assert!(gamma_seq(13, &int(1), &t).is_err());
        assert!(beta_seq(25, &int(1), &t).is_err());
    }

    #[test]
    fn via_det_examples() {
        let t = StirlingTable::new(20);
        assert_eq!(
            bernoulli_via_det(1, &int(1), &int(0), &t).unwrap(),
            ratio(-1, 2)
        );
        assert_eq!(
            bernoulli_via_det(1, &int(1), &int(3), &t).unwrap(),
            ratio(5, 2)
        );
        assert_eq!(
            bernoulli_via_det(0, &ratio(7, 2), &int(3), &t).unwrap(),
            int(1)
        );
        assert_eq!(
            bernoulli_via_det(2, &int(2), &int(0), &t).unwrap(),
            ratio(5, 6)
        );
        assert_eq!(euler_via_det(1, &int(1), &ratio(1, 2), &t).unwrap(), int(0));
        assert_eq!(euler_via_det(0, &int(4), &int(-1), &t).unwrap(), int(1));
        assert_eq!(
            euler_via_det(2, &int(1), &ratio(1, 2), &t).unwrap(),
            ratio(-1, 4)
        );
        assert!(bernoulli_via_det(11, &int(1), &int(0), &t).is_err());
    }
}
