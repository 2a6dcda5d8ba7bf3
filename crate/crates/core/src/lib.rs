//! Exact higher-order Bernoulli and Euler polynomials.
//!
//! `B_n^(α)(x)` and `E_n^(α)(x)` are the coefficient polynomials of
//!
//! ```text
//! (t / (e^t - 1))^α e^{xt} = Σ B_n^(α)(x) t^n / n!
//! (2 / (e^t + 1))^α e^{xt} = Σ E_n^(α)(x) t^n / n!
//! ```
//!
//! This crate computes them over the rationals along three independent
//! routes that must agree bit for bit:
//!
//! - [`closed`]: finite sums of Stirling numbers of the second kind and
//!   falling factorials,
//! - [`determinant`]: `(-1)^n` times a lower Hessenberg determinant built
//!   from the derivatives of `((e^t - 1)/t)^α` or `((e^t + 1)/2)^α`,
//! - [`series`]: coefficient extraction from the truncated generating series.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod arith;
pub mod closed;
pub mod combinatorics;
pub mod determinant;
mod error;
pub mod series;

pub use arith::{binomial, factorial, falling_factorial, parse_rational, Rational};
pub use closed::{
    bernoulli_number_closed, bernoulli_number_qi, bernoulli_poly_closed, euler_number_closed,
    euler_poly_closed, inner_sum_a, inner_sum_c, Polynomial,
};
pub use combinatorics::{
    bell_harmonic, bell_partial, bell_partial_enum, stirling2, BellArgs, StirlingTable,
};
pub use determinant::{
    bernoulli_via_det, beta_seq, det_exact, det_minor_oracle, euler_via_det, gamma_seq,
    hessenberg_expression, quotient_derivative, JetPair, SqMatrix,
};
pub use error::{Error, Result};
pub use series::{oracle_bernoulli, oracle_euler, TruncatedSeries};
