use std::fmt::Write;

use bernoulli_euler_core::{Polynomial, Rational};
use clap::ValueEnum;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
    Plain,
}

/// `\frac{p}{q}` with the sign pulled out front; integers stay bare.
pub fn latex_rational(r: &Rational) -> String {
    if r.is_integer() {
        return r.to_string();
    }
    let sign = if r.is_negative() { "-" } else { "" };
    format!("{sign}\\frac{{{}}}{{{}}}", r.numer().abs(), r.denom())
}

/// Human-readable polynomial in `x`, highest degree first, e.g.
/// `x^2 - x + 1/6`.
pub fn plain_polynomial(p: &Polynomial) -> String {
    render_polynomial(p, |r| r.to_string(), |d| format!("x^{d}"))
}

pub fn latex_polynomial(p: &Polynomial) -> String {
    render_polynomial(p, latex_rational, |d| format!("x^{{{d}}}"))
}

fn render_polynomial(
    p: &Polynomial,
    scalar: impl Fn(&Rational) -> String,
    power: impl Fn(usize) -> String,
) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (d, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let magnitude = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let var = match d {
            0 => String::new(),
            1 => "x".into(),
            _ => power(d),
        };
        if var.is_empty() {
            out.push_str(&scalar(&magnitude));
        } else if magnitude.is_one() {
            out.push_str(&var);
        } else {
            let _ = write!(out, "{} {var}", scalar(&magnitude));
        }
    }
    out
}
