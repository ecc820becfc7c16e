use std::fmt::Write as _;

use super::{BoundOutcome, BoundProblem, Cone, Constraint, Relation, Sense};
use crate::entspace::{parse_rational, LinExpr};
use crate::{Error, Result};

/// Parses the line-oriented problem format.
///
/// ```text
/// n 2
/// cone gamma
/// maximize h{1} + h{2}
/// st h{1,2} <= 1
/// ```
///
/// `n` must precede any expression; `cone` defaults to `gamma`. Blank lines
/// and `#` comments are ignored.
pub fn parse_problem(text: &str) -> Result<BoundProblem> {
    let mut n = None;
    let mut cone = Cone::Gamma;
    let mut objective = None;
    let mut constraints = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: &str| Error::Parse(format!("line {}: {msg}", lineno + 1));
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        let need_n = || n.ok_or_else(|| err("`n` must come first"));
        match key {
            "n" => {
                n = Some(rest.parse::<usize>().map_err(|_| err("bad `n`"))?);
            }
            "cone" => cone = rest.parse()?,
            "maximize" | "minimize" => {
                if objective.is_some() {
                    return Err(err("more than one objective"));
                }
                let sense = if key == "maximize" {
                    Sense::Maximize
                } else {
                    Sense::Minimize
                };
                objective = Some((LinExpr::parse(need_n()?, rest)?, sense));
            }
            "st" => {
                let (pos, rel, width) = ["<=", ">=", "="]
                    .iter()
                    .find_map(|op| rest.find(op).map(|p| (p, *op, op.len())))
                    .ok_or_else(|| err("constraint needs <=, = or >="))?;
                let rel = match rel {
                    "<=" => Relation::Le,
                    ">=" => Relation::Ge,
                    _ => Relation::Eq,
                };
                let expr = LinExpr::parse(need_n()?, rest[..pos].trim())?;
                let rhs = parse_rational(rest[pos + width..].trim())?;
                constraints.push(Constraint::new(expr, rel, rhs));
            }
            _ => return Err(err(&format!("unknown directive `{key}`"))),
        }
    }
    let n = n.ok_or_else(|| Error::Parse("missing `n`".into()))?;
    let (objective, sense) = objective.ok_or_else(|| Error::Parse("missing objective".into()))?;
    let p = BoundProblem {
        n,
        constraints,
        objective,
        sense,
        cone,
    };
    p.validate()?;
    Ok(p)
}

/// Renders an outcome: `status`, then `value` when optimal, then the certificate block.
pub fn format_outcome(outcome: &BoundOutcome) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "status {}", outcome.status());
    match outcome {
        BoundOutcome::Optimal { value, point, dual } => {
            let _ = writeln!(s, "value {value}");
            let _ = writeln!(s, "point {point}");
            write_dual(&mut s, dual);
        }
        BoundOutcome::Infeasible { dual } => write_dual(&mut s, dual),
        BoundOutcome::Unbounded { point, ray } => {
            let _ = writeln!(s, "point {point}");
            let _ = writeln!(s, "ray {ray}");
        }
    }
    s
}

fn write_dual(s: &mut String, dual: &super::DualCertificate) {
    let cone: Vec<String> = dual.cone.iter().map(|(k, l)| format!("{k}:{l}")).collect();
    let cons: Vec<String> = dual.constraints.iter().map(|m| m.to_string()).collect();
    let _ = writeln!(s, "dual-cone {}", cone.join(","));
    let _ = writeln!(s, "dual-constraints {}", cons.join(","));
}
