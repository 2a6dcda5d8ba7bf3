//! `eval`: one value (or one polynomial) by a chosen route.

use std::fmt::Write;

use bernoulli_euler_core::series::default_order;
use bernoulli_euler_core::{
    bernoulli_poly_closed, bernoulli_via_det, euler_poly_closed, euler_via_det, oracle_bernoulli,
    oracle_euler, Polynomial, Rational, StirlingTable,
};
use clap::ValueEnum;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::format::{latex_polynomial, latex_rational, plain_polynomial, Format};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Bernoulli,
    Euler,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Bernoulli => "bernoulli",
            Family::Euler => "euler",
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Family::Bernoulli => "B",
            Family::Euler => "E",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Closed,
    Det,
    Series,
    All,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Det => "det",
            Method::Series => "series",
            Method::All => "all",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalRequest {
    pub family: Family,
    pub n: usize,
    pub alpha: Rational,
    /// `None` asks the closed route for the whole polynomial; the other
    /// routes evaluate at `x = 0`.
    pub x: Option<Rational>,
    pub method: Method,
}

/// A single value or an ascending coefficient list, all as `p/q` strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EvalValue {
    Scalar(String),
    Coefficients(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerMethod {
    pub closed: String,
    pub det: String,
    pub series: String,
}

/// Serialized as-is for `--format json`; field order is the wire order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalResult {
    pub family: Family,
    pub n: usize,
    pub alpha: String,
    pub x: Option<String>,
    pub method: Method,
    pub value: EvalValue,
    pub per_method: Option<PerMethod>,
    pub agreement: Option<bool>,
}

impl EvalResult {
    /// `Some(false)` only when `method = all` found the routes disagreeing.
    pub fn disagrees(&self) -> bool {
        self.agreement == Some(false)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string(self).expect("EvalResult is always serializable");
                s.push('\n');
                s
            }
            Format::Plain => self.render_plain(),
            Format::Csv => self.render_csv(),
            Format::Latex => self.render_latex(),
        }
    }

    fn polynomial(&self) -> Option<Polynomial> {
        match &self.value {
            EvalValue::Coefficients(c) => {
                Some(Polynomial::new(c.iter().map(|s| reparse(s)).collect()))
            }
            EvalValue::Scalar(_) => None,
        }
    }

    fn render_plain(&self) -> String {
        let mut out = String::new();
        match (&self.value, &self.per_method) {
            (_, Some(pm)) => {
                let _ = writeln!(out, "closed: {}", pm.closed);
                let _ = writeln!(out, "det: {}", pm.det);
                let _ = writeln!(out, "series: {}", pm.series);
                let _ = writeln!(out, "agreement: {}", self.agreement.unwrap_or(false));
            }
            (EvalValue::Scalar(v), None) => {
                let _ = writeln!(out, "{v}");
            }
            (EvalValue::Coefficients(_), None) => {
                let p = self.polynomial().unwrap_or_default();
                let _ = writeln!(out, "{}", plain_polynomial(&p));
            }
        }
        out
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        match (&self.value, &self.per_method) {
            (_, Some(pm)) => {
                out.push_str("n,method,value\n");
                for (m, v) in [
                    ("closed", &pm.closed),
                    ("det", &pm.det),
                    ("series", &pm.series),
                ] {
                    let _ = writeln!(out, "{},{m},{v}", self.n);
                }
            }
            (EvalValue::Scalar(v), None) => {
                out.push_str("n,value\n");
                let _ = writeln!(out, "{},{v}", self.n);
            }
            (EvalValue::Coefficients(c), None) => {
                out.push_str("degree,coefficient\n");
                for (d, v) in c.iter().enumerate() {
                    let _ = writeln!(out, "{d},{v}");
                }
            }
        }
        out
    }

    fn render_latex(&self) -> String {
        let symbol = self.family.symbol();
        let lhs_arg = match &self.x {
            Some(x) => latex_rational(&reparse(x)),
            None if self.polynomial().is_some() => "x".into(),
            None => "0".into(),
        };
        let alpha = latex_rational(&reparse(&self.alpha));
        let rhs = match &self.value {
            EvalValue::Scalar(v) => latex_rational(&reparse(v)),
            EvalValue::Coefficients(_) => latex_polynomial(&self.polynomial().unwrap_or_default()),
        };
        format!("{symbol}_{{{}}}^{{({alpha})}}({lhs_arg}) = {rhs}\n", self.n)
    }
}

// Strings in an EvalResult are produced by `Rational`'s Display.
fn reparse(s: &str) -> Rational {
    bernoulli_euler_core::parse_rational(s).expect("rational strings in a result always parse")
}

fn table_for(family: Family, n: usize) -> StirlingTable {
    match family {
        Family::Bernoulli => StirlingTable::new(2 * n),
        Family::Euler => StirlingTable::new(n),
    }
}

fn closed_poly(
    family: Family,
    n: usize,
    alpha: &Rational,
    table: &StirlingTable,
) -> Result<Polynomial, CliError> {
    Ok(match family {
        Family::Bernoulli => bernoulli_poly_closed(n, alpha, table)?,
        Family::Euler => euler_poly_closed(n, alpha, table)?,
    })
}

fn det_value(
    family: Family,
    n: usize,
    alpha: &Rational,
    x: &Rational,
    table: &StirlingTable,
) -> Result<Rational, CliError> {
    Ok(match family {
        Family::Bernoulli => bernoulli_via_det(n, alpha, x, table)?,
        Family::Euler => euler_via_det(n, alpha, x, table)?,
    })
}

fn series_value(
    family: Family,
    n: usize,
    alpha: &Rational,
    x: &Rational,
) -> Result<Rational, CliError> {
    let order = default_order(n);
    Ok(match family {
        Family::Bernoulli => oracle_bernoulli(n, alpha, x, order)?,
        Family::Euler => oracle_euler(n, alpha, x, order)?,
    })
}

pub fn cmd_eval(req: &EvalRequest) -> Result<EvalResult, CliError> {
    let table = table_for(req.family, req.n);
    let at = req.x.clone().unwrap_or_else(Rational::zero);
    let mut per_method = None;
    let mut agreement = None;
    let value = match req.method {
        Method::Closed => {
            let p = closed_poly(req.family, req.n, &req.alpha, &table)?;
            match &req.x {
                Some(x) => EvalValue::Scalar(p.eval(x).to_string()),
                None => {
                    EvalValue::Coefficients(p.coeffs().iter().map(ToString::to_string).collect())
                }
            }
        }
        Method::Det => {
            EvalValue::Scalar(det_value(req.family, req.n, &req.alpha, &at, &table)?.to_string())
        }
        Method::Series => {
            EvalValue::Scalar(series_value(req.family, req.n, &req.alpha, &at)?.to_string())
        }
        Method::All => {
            let closed = closed_poly(req.family, req.n, &req.alpha, &table)?.eval(&at);
            let det = det_value(req.family, req.n, &req.alpha, &at, &table)?;
            let series = series_value(req.family, req.n, &req.alpha, &at)?;
            agreement = Some(closed == det && det == series);
            per_method = Some(PerMethod {
                closed: closed.to_string(),
                det: det.to_string(),
                series: series.to_string(),
            });
            EvalValue::Scalar(closed.to_string())
        }
    };
    Ok(EvalResult {
        family: req.family,
        n: req.n,
        alpha: req.alpha.to_string(),
        x: req.x.as_ref().map(ToString::to_string),
        method: req.method,
        value,
        per_method,
        agreement,
    })
}
