use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::{BoundProblem, Cone, Constraint, Relation, Sense};
use crate::entspace::{parse_rational, LinExpr, SubsetMask};
use crate::{check_n, Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NetworkEdge {
    pub id: String,
    /// Source or edge ids feeding this edge.
    pub inputs: Vec<String>,
    pub capacity: BigRational,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NetworkSink {
    pub id: String,
    pub wants: Vec<String>,
    /// Edge or source ids observed by the sink.
    pub sees: Vec<String>,
}

/// An acyclic network of independent sources, capacitated edges and demanding sinks.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct NetworkDescription {
    pub sources: Vec<String>,
    pub edges: Vec<NetworkEdge>,
    pub sinks: Vec<NetworkSink>,
    /// Optional per-source objective weights; all ones when absent.
    pub weights: Option<Vec<BigRational>>,
}

impl NetworkDescription {
    /// Random variables are numbered sources first, then edges, from 1.
    pub fn variable_count(&self) -> usize {
        self.sources.len() + self.edges.len()
    }

    fn index(&self) -> Result<HashMap<&str, usize>> {
        let mut idx = HashMap::new();
        for (i, id) in self
            .sources
            .iter()
            .chain(self.edges.iter().map(|e| &e.id))
            .enumerate()
        {
            if idx.insert(id.as_str(), i + 1).is_some() {
                return Err(Error::MalformedProblem(format!("duplicate id `{id}`")));
            }
        }
        Ok(idx)
    }
}

fn lookup(idx: &HashMap<&str, usize>, id: &str) -> Result<usize> {
    idx.get(id)
        .copied()
        .ok_or_else(|| Error::DanglingReference(id.to_string()))
}

fn mask_of(idx: &HashMap<&str, usize>, ids: &[String]) -> Result<SubsetMask> {
    let mut m = SubsetMask::EMPTY;
    for id in ids {
        m = m | SubsetMask::singleton(lookup(idx, id)?);
    }
    Ok(m)
}

/// Builds the outer-bound LP for `net` over `cone`.
///
/// Constraints: the sources are independent, every edge is a function of its
/// inputs, every sink decodes its demands from what it sees, and every edge
/// respects its capacity. The objective maximizes the (weighted) sum of
/// source entropies.
pub fn compile_network(net: &NetworkDescription, cone: Cone) -> Result<BoundProblem> {
    let n = net.variable_count();
    check_n(n)?;
    if net.sources.is_empty() {
        return Err(Error::MalformedProblem("network has no sources".into()));
    }
    let idx = net.index()?;
    let ns = net.sources.len();
    let one = |mask: SubsetMask| LinExpr::term(n, mask, num_traits::One::one());

    // Inputs of every variable, as 0-based variable indices; sources have none.
    let mut inputs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (e, edge) in net.edges.iter().enumerate() {
        if edge.inputs.is_empty() {
            return Err(Error::MalformedProblem(format!(
                "edge `{}` has no inputs",
                edge.id
            )));
        }
        for id in &edge.inputs {
            inputs[ns + e].push(lookup(&idx, id)? - 1);
        }
    }
    // Reject cycles with an iterative three-colour DFS.
    let mut state = vec![0u8; n];
    for start in 0..n {
        if state[start] != 0 {
            continue;
        }
        let mut stack = vec![(start, 0usize)];
        state[start] = 1;
        while let Some((v, pos)) = stack.pop() {
            if let Some(&w) = inputs[v].get(pos) {
                stack.push((v, pos + 1));
                match state[w] {
                    0 => {
                        state[w] = 1;
                        stack.push((w, 0));
                    }
                    1 => {
                        let id = if w < ns {
                            &net.sources[w]
                        } else {
                            &net.edges[w - ns].id
                        };
                        return Err(Error::CyclicNetwork(id.clone()));
                    }
                    _ => {}
                }
            } else {
                state[v] = 2;
            }
        }
    }

    let mut constraints = Vec::new();
    let sources = SubsetMask::full(ns);
    let mut indep = one(sources)?;
    for i in 1..=ns {
        indep = indep.try_sub(&one(SubsetMask::singleton(i))?)?;
    }
    constraints.push(Constraint::new(indep, Relation::Eq, BigRational::zero()));

    for (e, edge) in net.edges.iter().enumerate() {
        let me = SubsetMask::singleton(ns + e + 1);
        let from = mask_of(&idx, &edge.inputs)?;
        let functional = one(me | from)?.try_sub(&one(from)?)?;
        constraints.push(Constraint::new(
            functional,
            Relation::Eq,
            BigRational::zero(),
        ));
    }

    // Ancestor sources of each variable, for the reachability check.
    let mut reach: Vec<Option<SubsetMask>> = vec![None; n];
    fn ancestors(
        v: usize,
        ns: usize,
        inputs: &[Vec<usize>],
        memo: &mut [Option<SubsetMask>],
    ) -> SubsetMask {
        if let Some(m) = memo[v] {
            return m;
        }
        let m = if v < ns {
            SubsetMask::singleton(v + 1)
        } else {
            inputs[v].iter().fold(SubsetMask::EMPTY, |acc, &w| {
                acc | ancestors(w, ns, inputs, memo)
            })
        };
        memo[v] = Some(m);
        m
    }

    for sink in &net.sinks {
        let wants = mask_of(&idx, &sink.wants)?;
        let sees = mask_of(&idx, &sink.sees)?;
        if !wants.is_subset_of(sources) {
            return Err(Error::MalformedProblem(format!(
                "sink `{}` demands a non-source",
                sink.id
            )));
        }
        let available = sees.elements().fold(SubsetMask::EMPTY, |acc, v| {
            acc | ancestors(v - 1, ns, &inputs, &mut reach)
        });
        if let Some(missing) = (wants - available).min_element() {
            return Err(Error::UnreachableDemand {
                sink: sink.id.clone(),
                source_id: net.sources[missing - 1].clone(),
            });
        }
        let decoding = one(wants | sees)?.try_sub(&one(sees)?)?;
        constraints.push(Constraint::new(decoding, Relation::Eq, BigRational::zero()));
    }

    for (e, edge) in net.edges.iter().enumerate() {
        let me = SubsetMask::singleton(ns + e + 1);
        constraints.push(Constraint::new(
            one(me)?,
            Relation::Le,
            edge.capacity.clone(),
        ));
    }

    let mut objective = LinExpr::zero(n)?;
    for i in 0..ns {
        let w = match &net.weights {
            Some(ws) => ws.get(i).cloned().ok_or_else(|| {
                Error::MalformedProblem(format!("{} weights for {ns} sources", ws.len()))
            })?,
            None => num_traits::One::one(),
        };
        objective.add_scaled(&one(SubsetMask::singleton(i + 1))?, &w)?;
    }
    Ok(BoundProblem {
        n,
        constraints,
        objective,
        sense: Sense::Maximize,
        cone,
    })
}

/// Parses the line-oriented network format.
///
/// ```text
/// source s1
/// edge e1 from s1 s2 cap 1
/// sink t1 wants s1 sees e1
/// weights 1 2
/// ```
pub fn parse_network(text: &str) -> Result<NetworkDescription> {
    let mut net = NetworkDescription::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: &str| Error::Parse(format!("line {}: {msg}: `{line}`", lineno + 1));
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "source" => {
                let [_, id] = toks[..] else {
                    return Err(err("expected `source <id>`"));
                };
                net.sources.push(id.to_string());
            }
            "edge" => {
                let cap_at = toks.iter().position(|&t| t == "cap");
                match (toks.get(2), cap_at) {
                    (Some(&"from"), Some(c)) if toks.len() == c + 2 && toks.len() > 1 => {
                        net.edges.push(NetworkEdge {
                            id: toks[1].to_string(),
                            inputs: toks[3..c].iter().map(|s| s.to_string()).collect(),
                            capacity: parse_rational(toks[c + 1])?,
                        });
                    }
                    _ => return Err(err("expected `edge <id> from <ids..> cap <rational>`")),
                }
            }
            "sink" => {
                let sees_at = toks.iter().position(|&t| t == "sees");
                match (toks.get(2), sees_at) {
                    (Some(&"wants"), Some(s)) => net.sinks.push(NetworkSink {
                        id: toks[1].to_string(),
                        wants: toks[3..s].iter().map(|s| s.to_string()).collect(),
                        sees: toks[s + 1..].iter().map(|s| s.to_string()).collect(),
                    }),
                    _ => return Err(err("expected `sink <id> wants <ids..> sees <ids..>`")),
                }
            }
            "weights" => {
                net.weights = Some(
                    toks[1..]
                        .iter()
                        .map(|t| parse_rational(t))
                        .collect::<Result<_>>()?,
                );
            }
            _ => return Err(err("unknown directive")),
        }
    }
    Ok(net)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bound::solve_bound;
    use crate::ingen::GenBudget;

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn solve(text: &str, cone: Cone) -> Result<BigRational> {
        let p = compile_network(&parse_network(text)?, cone)?;
        Ok(solve_bound(&p, GenBudget::default())?
            .value()
            .unwrap()
            .clone())
    }

    #[test]
    fn single_link() {
        let net = "source s1\nedge e1 from s1 cap 1\nsink t1 wants s1 sees e1\n";
        assert_eq!(solve(net, Cone::Gamma).unwrap(), int(1));
        assert_eq!(solve(net, Cone::GammaIn).unwrap(), int(1));
    }

    #[test]
    fn shared_bottleneck() {
        let net = "source s1\nsource s2\nedge e1 from s1 s2 cap 1\nsink t1 wants s1 s2 sees e1\n";
        assert_eq!(solve(net, Cone::Gamma).unwrap(), int(1));
        assert_eq!(solve(net, Cone::GammaIn).unwrap(), int(1));
    }

    #[test]
    fn weighted_objective() {
        let net = "source s1\nsource s2\nedge e1 from s1 s2 cap 1\nsink t1 wants s1 s2 sees e1\nweights 1 3\n";
        assert_eq!(solve(net, Cone::Gamma).unwrap(), int(3));
    }

    #[test]
    fn rejects_cycles_and_dangling() {
        let cyc =
            "source s1\nedge a from s1 b cap 1\nedge b from a cap 1\nsink t wants s1 sees b\n";
        assert!(matches!(
            compile_network(&parse_network(cyc).unwrap(), Cone::Gamma),
            Err(Error::CyclicNetwork(_))
        ));
        let dangling = "source s1\nedge e1 from s9 cap 1\nsink t wants s1 sees e1\n";
        assert!(matches!(
            compile_network(&parse_network(dangling).unwrap(), Cone::Gamma),
            Err(Error::DanglingReference(id)) if id == "s9"
        ));
        let unreachable = "source s1\nsource s2\nedge e1 from s1 cap 1\nsink t wants s2 sees e1\n";
        assert!(matches!(
            compile_network(&parse_network(unreachable).unwrap(), Cone::Gamma),
            Err(Error::UnreachableDemand { .. })
        ));
    }

    #[test]
    fn parse_errors() {
        assert!(parse_network("edge e1 s1 cap 1").is_err());
        assert!(parse_network("source").is_err());
        assert!(parse_network("pipe x").is_err());
    }
}
