//! Plain-text ideal serialization.
//!
//! One monomial per line, either as space-separated exponents (`2 0 1`) or
//! in human syntax (`x1^2*x3`, `1` for the unit monomial). Blank lines and
//! lines starting with `#` are skipped.

use super::{Monomial, MonomialIdeal};
use crate::error::{Error, Result};
use crate::scalar::Exponent;

/// Output style for monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MonomialSyntax {
    #[default]
    Human,
    Exponents,
}

enum Line {
    Dense(Vec<u64>),
    Sparse(Vec<(usize, u64)>),
}

fn parse_line(line: &str, line_no: usize) -> Result<Line> {
    let err = |message: String| Error::Parse { line: line_no, message };
    if line.chars().next().is_some_and(|c| c.is_ascii_digit()) && !line.contains(['x', '*', '^']) {
        let exps = line
            .split_whitespace()
            .map(|t| t.parse::<u64>().map_err(|_| err(format!("bad exponent {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        // a lone `1` is the unit monomial in human syntax
        if exps == [1] && line.trim() == "1" {
            return Ok(Line::Sparse(Vec::new()));
        }
        return Ok(Line::Dense(exps));
    }
    let mut factors = Vec::new();
    for factor in line.split('*').map(str::trim) {
        let (var, exp) = match factor.split_once('^') {
            Some((v, e)) => (v.trim(), e.trim().parse::<u64>().map_err(|_| err(format!("bad exponent in {factor:?}")))?),
            None => (factor, 1),
        };
        let index = var
            .strip_prefix('x')
            .and_then(|d| d.parse::<usize>().ok())
            .filter(|&i| i >= 1)
            .ok_or_else(|| err(format!("bad variable {var:?}, expected x1, x2, …")))?;
        factors.push((index - 1, exp));
    }
    Ok(Line::Sparse(factors))
}

/// Parses an ideal. `n` fixes the number of variables; otherwise it is the
/// length of the exponent lines or the largest variable index used.
pub fn parse_ideal<E: Exponent>(text: &str, n: Option<usize>) -> Result<MonomialIdeal<E>> {
    let mut lines = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        lines.push((k + 1, parse_line(line, k + 1)?));
    }
    let inferred = lines
        .iter()
        .map(|(_, l)| match l {
            Line::Dense(e) => e.len(),
            Line::Sparse(f) => f.iter().map(|&(i, _)| i + 1).max().unwrap_or(0),
        })
        .max()
        .unwrap_or(0);
    let n = n.unwrap_or(inferred);
    let mut gens = Vec::with_capacity(lines.len());
    for (line_no, l) in lines {
        let mut exps = vec![0u64; n];
        match l {
            Line::Dense(e) => {
                if e.len() != n {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("expected {n} exponents, found {}", e.len()),
                    });
                }
                exps = e;
            }
            Line::Sparse(f) => {
                for (i, e) in f {
                    if i >= n {
                        return Err(Error::Parse { line: line_no, message: format!("variable x{} beyond x{n}", i + 1) });
                    }
                    exps[i] += e;
                }
            }
        }
        gens.push(Monomial::from_u64s(&exps)?);
    }
    MonomialIdeal::minimalize(n, gens)
}

/// One generator per line in the requested syntax.
pub fn format_ideal<E: Exponent>(ideal: &MonomialIdeal<E>, syntax: MonomialSyntax) -> String {
    let mut out = String::new();
    for g in ideal.gens() {
        match syntax {
            MonomialSyntax::Human => out.push_str(&g.to_string()),
            MonomialSyntax::Exponents => {
                let parts: Vec<String> = g.exponents().iter().map(|e| e.to_string()).collect();
                out.push_str(&parts.join(" "));
            }
        }
        out.push('\n');
    }
    out
}
