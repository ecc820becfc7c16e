//! Text format for inequality lists:
//!
//! ```text
//! n=4 count=34
//! DELTA0<TAB>{1},{2};{3},{4}|{}<TAB>+1*h{1,2} ...
//! ```

use std::fmt::Write;

use super::{CanonicalInequality, Kind, Shape};
use crate::entspace::LinExpr;
use crate::{Error, Result};

pub fn format_inequality_list(n: usize, list: &[CanonicalInequality]) -> String {
    let mut out = format!("n={n} count={}\n", list.len());
    for c in list {
        writeln!(out, "{c}").unwrap();
    }
    out
}

fn header_field<'a>(tok: Option<&'a str>, key: &str) -> Result<&'a str> {
    tok.and_then(|t| t.strip_prefix(key))
        .and_then(|t| t.strip_prefix('='))
        .ok_or_else(|| {
            Error::Parse(format!(
                "header must read `n=<int> count=<int>`, missing `{key}`"
            ))
        })
}

/// Parses a list file, rebuilding each expression from its payload and
/// rejecting lines whose stored expression disagrees.
pub fn parse_inequality_list(text: &str) -> Result<(usize, Vec<CanonicalInequality>)> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty inequality list".into()))?;
    let mut toks = header.split_whitespace();
    let n: usize = header_field(toks.next(), "n")?
        .parse()
        .map_err(|_| Error::Parse(format!("bad header `{header}`")))?;
    let count: usize = header_field(toks.next(), "count")?
        .parse()
        .map_err(|_| Error::Parse(format!("bad header `{header}`")))?;
    let mut out = Vec::with_capacity(count);
    for (lineno, line) in lines.enumerate() {
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 3 {
            return Err(Error::Parse(format!(
                "line {}: expected KIND<TAB>payload<TAB>expr",
                lineno + 2
            )));
        }
        let kind = Kind::from_tag(fields[0].trim())?;
        let shape = Shape::parse_payload(kind, fields[1].trim())?;
        let ineq = CanonicalInequality::new(n, shape)?;
        let stored = LinExpr::parse(n, fields[2])?;
        if &stored != ineq.expr() {
            return Err(Error::Parse(format!(
                "line {}: expression does not match payload {}",
                lineno + 2,
                fields[1]
            )));
        }
        out.push(ineq);
    }
    if out.len() != count {
        return Err(Error::Parse(format!(
            "header announces {count} inequalities, found {}",
            out.len()
        )));
    }
    Ok((n, out))
}
