//! Line-oriented bracket files:
//!
//! ```text
//! # comment
//! name: linear-sl2
//! vars: x1 x2 x3
//! {x1,x2} = x3
//! ```
//!
//! Unlisted pairs are zero. `{xj,xi}` with `j > i` is accepted and stored as
//! `{xi,xj} = -(...)`.

use std::fmt::Write as _;

use super::PoissonStructure;
use crate::error::{Error, Result};
use crate::poly::{parse_poly, Polynomial, Var, VarSet};

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::BracketFile {
        line,
        message: message.into(),
    }
}

/// Parses a bracket file. The Jacobi identity is not checked here.
pub fn parse_bracket_file(text: &str) -> Result<PoissonStructure> {
    let mut name: Option<String> = None;
    let mut vars: Option<VarSet> = None;
    let mut entries: Vec<(Var, Var, Polynomial)> = Vec::new();
    let mut seen: Vec<(Var, Var, usize)> = Vec::new();

    for (no, raw) in text.lines().enumerate() {
        let line_no = no + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("name:") {
            name = Some(rest.trim().to_string());
            continue;
        }
        if let Some(rest) = line.strip_prefix("vars:") {
            if vars.is_some() {
                return Err(err(line_no, "duplicate `vars:` line"));
            }
            let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
            if names.is_empty() {
                return Err(err(line_no, "empty variable list"));
            }
            for n in &names {
                let ok = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                    && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
                if !ok {
                    return Err(err(line_no, format!("invalid variable name `{n}`")));
                }
            }
            vars = Some(VarSet::new(names).map_err(|m| err(line_no, m))?);
            continue;
        }
        let Some(vs) = vars.as_ref() else {
            return Err(err(line_no, "expected `vars:` before the first bracket"));
        };
        let Some(rest) = line.strip_prefix('{') else {
            return Err(err(line_no, format!("expected `{{xi,xj}} = expr`, found `{line}`")));
        };
        let Some((pair, rhs)) = rest.split_once('}') else {
            return Err(err(line_no, "missing `}`"));
        };
        let Some(expr) = rhs.trim().strip_prefix('=') else {
            return Err(err(line_no, "expected `=` after the bracket"));
        };
        let Some((a, b)) = pair.split_once(',') else {
            return Err(err(line_no, "expected two variables separated by `,`"));
        };
        let lookup = |s: &str| {
            vs.index(s.trim())
                .ok_or_else(|| err(line_no, format!("undeclared variable `{}`", s.trim())))
        };
        let (i, j) = (lookup(a)?, lookup(b)?);
        if i == j {
            return Err(err(line_no, "a variable is in involution with itself"));
        }
        let p = parse_poly(expr.trim(), vs).map_err(|e| err(line_no, e.to_string()))?;
        let (i, j, p) = if i < j { (i, j, p) } else { (j, i, -p) };
        if let Some(&(_, _, first)) = seen.iter().find(|&&(a, b, _)| (a, b) == (i, j)) {
            return Err(err(line_no, format!("pair already given on line {first}")));
        }
        seen.push((i, j, line_no));
        entries.push((i, j, p));
    }
    let vars = vars.ok_or_else(|| err(text.lines().count().max(1), "missing `vars:` line"))?;
    let p = PoissonStructure::new_unchecked(vars, entries).map_err(|e| err(0, e.to_string()))?;
    Ok(match name {
        Some(n) => p.with_name(n),
        None => p,
    })
}

pub fn write_bracket_file(p: &PoissonStructure) -> String {
    let mut out = String::new();
    if let Some(n) = p.name() {
        let _ = writeln!(out, "name: {n}");
    }
    let _ = writeln!(out, "vars: {}", p.vars().names().join(" "));
    for (i, j, x) in p.entries() {
        let _ = writeln!(
            out,
            "{{{},{}}} = {}",
            p.vars().name(i),
            p.vars().name(j),
            x.display(p.vars())
        );
    }
    out
}
