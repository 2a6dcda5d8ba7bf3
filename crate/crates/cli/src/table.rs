//! `table`: higher-order Bernoulli numbers `B_n^(α)` (at `x = 0`) or Euler
//! numbers `2^n E_n^(α)(1/2)` for `n = 0..=n_max`.

use std::fmt::Write;

use bernoulli_euler_core::{bernoulli_number_closed, euler_number_closed, Rational, StirlingTable};
use serde::Serialize;

use crate::eval::Family;
use crate::format::{latex_rational, Format};
use crate::CliError;

pub const DEFAULT_ROW_CAP: usize = 64;

#[derive(Debug, Serialize)]
struct Row {
    n: usize,
    value: String,
}

#[derive(Debug, Serialize)]
struct TableJson<'a> {
    family: &'a str,
    alpha: String,
    n_max: usize,
    rows: Vec<Row>,
}

pub fn table_values(
    family: Family,
    n_max: usize,
    alpha: &Rational,
) -> Result<Vec<Rational>, CliError> {
    let table = StirlingTable::new(2 * n_max);
    (0..=n_max)
        .map(|n| {
            Ok(match family {
                Family::Bernoulli => bernoulli_number_closed(n, alpha, &table)?,
                Family::Euler => euler_number_closed(n, alpha, &table)?,
            })
        })
        .collect()
}

/// Plain output is one value per line; CSV has an `n,value` header; LaTeX
/// is a bare tabular body (no `\begin{tabular}`).
pub fn render_table(
    family: Family,
    alpha: &Rational,
    values: &[Rational],
    format: Format,
) -> String {
    let mut out = String::new();
    match format {
        Format::Plain => {
            for v in values {
                let _ = writeln!(out, "{v}");
            }
        }
        Format::Csv => {
            out.push_str("n,value\n");
            for (n, v) in values.iter().enumerate() {
                let _ = writeln!(out, "{n},{v}");
            }
        }
        Format::Latex => {
            let symbol = match family {
                Family::Bernoulli => "B",
                Family::Euler => "E",
            };
            let _ = writeln!(
                out,
                "$n$ & ${symbol}_n^{{({})}}$ \\\\",
                latex_rational(alpha)
            );
            out.push_str("\\hline\n");
            for (n, v) in values.iter().enumerate() {
                let _ = writeln!(out, "{n} & ${}$ \\\\", latex_rational(v));
            }
        }
        Format::Json => {
            let doc = TableJson {
                family: family.name(),
                alpha: alpha.to_string(),
                n_max: values.len().saturating_sub(1),
                rows: values
                    .iter()
                    .enumerate()
                    .map(|(n, v)| Row {
                        n,
                        value: v.to_string(),
                    })
                    .collect(),
            };
            out = serde_json::to_string(&doc).expect("table rows serialize");
            out.push('\n');
        }
    }
    out
}

pub fn cmd_table(
    family: Family,
    n_max: usize,
    alpha: &Rational,
    format: Format,
    cap: usize,
) -> Result<String, CliError> {
    if n_max > cap {
        return Err(CliError::Usage(format!(
            "--nmax {n_max} exceeds the row cap {cap}"
        )));
    }
    let values = table_values(family, n_max, alpha)?;
    Ok(render_table(family, alpha, &values, format))
}

#[cfg(test)]
mod tests {
    use super::*;
    use bernoulli_euler_core::parse_rational;

    fn one() -> Rational {
        parse_rational("1").unwrap()
    }

    #[test]
    fn bernoulli_rows() {
        let out = cmd_table(Family::Bernoulli, 2, &one(), Format::Plain, DEFAULT_ROW_CAP).unwrap();
        assert_eq!(out, "1\n-1/2\n1/6\n");
    }

    #[test]
    fn euler_rows() {
        let out = cmd_table(Family::Euler, 2, &one(), Format::Csv, DEFAULT_ROW_CAP).unwrap();
        assert_eq!(out, "n,value\n0,1\n1,0\n2,-1\n");
    }

    #[test]
    fn single_row() {
        for family in [Family::Bernoulli, Family::Euler] {
            let alpha = parse_rational("-7/3").unwrap();
            let out = cmd_table(family, 0, &alpha, Format::Plain, DEFAULT_ROW_CAP).unwrap();
            assert_eq!(out, "1\n");
        }
    }

    #[test]
    fn latex_and_json() {
        let out = cmd_table(Family::Bernoulli, 1, &one(), Format::Latex, DEFAULT_ROW_CAP).unwrap();
        assert_eq!(
            out,
            "$n$ & $B_n^{(1)}$ \\\\\n\\hline\n0 & $1$ \\\\\n1 & $-\\frac{1}{2}$ \\\\\n"
        );
        let out = cmd_table(Family::Euler, 1, &one(), Format::Json, DEFAULT_ROW_CAP).unwrap();
        assert_eq!(
            out,
            "{\"family\":\"euler\",\"alpha\":\"1\",\"n_max\":1,\"rows\":[{\"n\":0,\"value\":\"1\"},{\"n\":1,\"value\":\"0\"}]}\n"
        );
    }

    #[test]
    fn cap_enforced() {
        let err = cmd_table(
            Family::Bernoulli,
            65,
            &one(),
            Format::Plain,
            DEFAULT_ROW_CAP,
        )
        .unwrap_err();
        assert!(matches!(err, CliError::Usage(_)));
        assert!(cmd_table(Family::Bernoulli, 3, &one(), Format::Plain, 3).is_ok());
    }
}
