//! Generation, counting and classification of the minimal Ingleton set
//! `Δ = Δ0 ∪ Δ1 ∪ Δ2` and of the elemental Shannon inequalities.

mod classify;
mod count;
mod generate;
mod listfile;

use std::fmt;

use crate::entspace::{
    cond_entropy_expr, cond_mutinfo_expr, ingleton_expr, IngletonQuad, LinExpr, SubsetMask,
};
use crate::{Error, Result};

pub use classify::{classify_quad, reduce_quad, QuadClass};
pub use count::{count_delta, count_delta0, count_elemental};
pub use generate::{
    gen_delta, gen_delta0, gen_delta1, gen_delta2, gen_elemental, GenBudget, DEFAULT_BUDGET,
};
pub use listfile::{format_inequality_list, parse_inequality_list};

/// A disjoint-support Ingleton form `J(h; δ1, δ2, δ3, δ4 | β)`.
///
/// Canonical: within each unordered pair the member with the smaller minimum
/// element comes first.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Delta0Form {
    pub pair12: (SubsetMask, SubsetMask),
    pub pair34: (SubsetMask, SubsetMask),
    pub beta: SubsetMask,
}

impl Delta0Form {
    /// Canonicalizes the two pairs. Requires nonempty, pairwise disjoint parts.
    pub fn new(d: [SubsetMask; 4], beta: SubsetMask) -> Result<Self> {
        let mut seen = beta;
        for x in d {
            if x.is_empty() || !x.is_disjoint(seen) {
                return Err(Error::Parse(format!(
                    "Δ0 parts must be nonempty and pairwise disjoint: {d:?} | {beta}"
                )));
            }
            seen = seen | x;
        }
        let order = |a: SubsetMask, b: SubsetMask| {
            if a.min_element() < b.min_element() {
                (a, b)
            } else {
                (b, a)
            }
        };
        Ok(Delta0Form {
            pair12: order(d[0], d[1]),
            pair34: order(d[2], d[3]),
            beta,
        })
    }

    pub fn quad(&self) -> IngletonQuad {
        let b = self.beta;
        IngletonQuad::new(
            self.pair12.0 | b,
            self.pair12.1 | b,
            self.pair34.0 | b,
            self.pair34.1 | b,
        )
    }
}

impl fmt::Display for Delta0Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{};{},{}|{}",
            self.pair12.0, self.pair12.1, self.pair34.0, self.pair34.1, self.beta
        )
    }
}

/// Which family an inequality belongs to, together with its defining indices.
///
/// The derived order (variant first, then fields) is the canonical sort key.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Shape {
    Delta0(Delta0Form),
    /// `J(h; i, j, ∅, μ) = I(i; j | μ)` with `i < j`, `μ ⊆ N ∖ {i, j}`.
    Delta1 {
        i: usize,
        j: usize,
        mu: SubsetMask,
    },
    /// `J(h; i, i, ∅, N ∖ i) = h(i | N ∖ i)`.
    Delta2 {
        i: usize,
    },
    /// `h(i | N ∖ i) ≥ 0`.
    ElementalH {
        i: usize,
    },
    /// `I(i; j | δ) ≥ 0` with `i < j`.
    ElementalI {
        i: usize,
        j: usize,
        delta: SubsetMask,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Kind {
    Delta0,
    Delta1,
    Delta2,
    ElementalH,
    ElementalI,
}

impl Kind {
    pub fn tag(self) -> &'static str {
        match self {
            Kind::Delta0 => "DELTA0",
            Kind::Delta1 => "DELTA1",
            Kind::Delta2 => "DELTA2",
            Kind::ElementalH => "ELEM_H",
            Kind::ElementalI => "ELEM_I",
        }
    }

    pub fn from_tag(s: &str) -> Result<Kind> {
        Ok(match s {
            "DELTA0" => Kind::Delta0,
            "DELTA1" => Kind::Delta1,
            "DELTA2" => Kind::Delta2,
            "ELEM_H" => Kind::ElementalH,
            "ELEM_I" => Kind::ElementalI,
            _ => return Err(Error::Parse(format!("unknown inequality kind `{s}`"))),
        })
    }
}

impl Shape {
    pub fn kind(&self) -> Kind {
        match self {
            Shape::Delta0(_) => Kind::Delta0,
            Shape::Delta1 { .. } => Kind::Delta1,
            Shape::Delta2 { .. } => Kind::Delta2,
            Shape::ElementalH { .. } => Kind::ElementalH,
            Shape::ElementalI { .. } => Kind::ElementalI,
        }
    }

    /// The left-hand side of `expr ≥ 0` for this shape.
    pub fn expr(&self, n: usize) -> Result<LinExpr> {
        let full = SubsetMask::full(n);
        let single = |i: usize| -> Result<SubsetMask> {
            if (1..=n).contains(&i) {
                Ok(SubsetMask::singleton(i))
            } else {
                Err(Error::MaskOutOfRange {
                    mask: SubsetMask::singleton(i.clamp(1, crate::MAX_N)),
                    n,
                })
            }
        };
        match *self {
            Shape::Delta0(form) => ingleton_expr(n, &form.quad()),
            Shape::Delta1 { i, j, mu } => ingleton_expr(
                n,
                &IngletonQuad::new(single(i)?, single(j)?, SubsetMask::EMPTY, mu),
            ),
            Shape::Delta2 { i } => {
                let s = single(i)?;
                ingleton_expr(n, &IngletonQuad::new(s, s, SubsetMask::EMPTY, full - s))
            }
            Shape::ElementalH { i } => {
                let s = single(i)?;
                cond_entropy_expr(n, s, full - s)
            }
            Shape::ElementalI { i, j, delta } => {
                cond_mutinfo_expr(n, single(i)?, single(j)?, delta)
            }
        }
    }

    /// Checks the structural invariants of the payload.
    fn validate(&self, n: usize) -> Result<()> {
        let bad = |msg: String| Err(Error::Parse(msg));
        match *self {
            Shape::Delta0(form) => {
                let canon = Delta0Form::new(
                    [form.pair12.0, form.pair12.1, form.pair34.0, form.pair34.1],
                    form.beta,
                )?;
                if canon != form {
                    return bad(format!("Δ0 payload `{form}` is not canonical"));
                }
                form.quad().check(n)
            }
            Shape::Delta1 { i, j, mu } | Shape::ElementalI { i, j, delta: mu } => {
                if !(i < j && j <= n && i >= 1) {
                    return bad(format!("need 1 ≤ i < j ≤ n, got i={i} j={j}"));
                }
                mu.check(n)?;
                if mu.contains(i) || mu.contains(j) {
                    return bad(format!("conditioning set {mu} must avoid {i} and {j}"));
                }
                Ok(())
            }
            Shape::Delta2 { i } | Shape::ElementalH { i } => {
                if (1..=n).contains(&i) {
                    Ok(())
                } else {
                    bad(format!("element {i} outside 1..={n}"))
                }
            }
        }
    }

    pub fn payload_text(&self) -> String {
        match self {
            Shape::Delta0(form) => form.to_string(),
            Shape::Delta1 { i, j, mu } => format!("{i},{j}|{mu}"),
            Shape::ElementalI { i, j, delta } => format!("{i},{j}|{delta}"),
            Shape::Delta2 { i } | Shape::ElementalH { i } => i.to_string(),
        }
    }

    pub fn parse_payload(kind: Kind, s: &str) -> Result<Shape> {
        let bad = || Error::Parse(format!("bad {} payload `{s}`", kind.tag()));
        let int = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        Ok(match kind {
            Kind::Delta0 => {
                let (pairs, beta) = s.split_once('|').ok_or_else(bad)?;
                let (p12, p34) = pairs.split_once(';').ok_or_else(bad)?;
                let pair = |t: &str| -> Result<(SubsetMask, SubsetMask)> {
                    let split = t.find("},").ok_or_else(bad)?;
                    Ok((t[..=split].parse()?, t[split + 2..].parse()?))
                };
                let (d1, d2) = pair(p12)?;
                let (d3, d4) = pair(p34)?;
                Shape::Delta0(Delta0Form {
                    pair12: (d1, d2),
                    pair34: (d3, d4),
                    beta: beta.parse()?,
                })
            }
            Kind::Delta1 | Kind::ElementalI => {
                let (ij, set) = s.split_once('|').ok_or_else(bad)?;
                let (i, j) = ij.split_once(',').ok_or_else(bad)?;
                let (i, j, set) = (int(i)?, int(j)?, set.parse()?);
                if kind == Kind::Delta1 {
                    Shape::Delta1 { i, j, mu: set }
                } else {
                    Shape::ElementalI { i, j, delta: set }
                }
            }
            Kind::Delta2 => Shape::Delta2 { i: int(s)? },
            Kind::ElementalH => Shape::ElementalH { i: int(s)? },
        })
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.kind().tag(), self.payload_text())
    }
}

/// A member of a generated inequality set: `expr ≥ 0` together with its shape.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CanonicalInequality {
    shape: Shape,
    expr: LinExpr,
}

impl CanonicalInequality {
    pub fn new(n: usize, shape: Shape) -> Result<Self> {
        shape.validate(n)?;
        Ok(CanonicalInequality {
            expr: shape.expr(n)?,
            shape,
        })
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn kind(&self) -> Kind {
        self.shape.kind()
    }

    pub fn expr(&self) -> &LinExpr {
        &self.expr
    }

    pub fn n(&self) -> usize {
        self.expr.n()
    }
}

impl PartialOrd for CanonicalInequality {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalInequality {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.shape
            .cmp(&other.shape)
            .then_with(|| self.expr.n().cmp(&other.expr.n()))
    }
}

/// `KIND<TAB>payload<TAB>expr`.
impl fmt::Display for CanonicalInequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}",
            self.kind().tag(),
            self.shape.payload_text(),
            self.expr
        )
    }
}

/// Collects the expressions of a list of inequalities.
pub fn exprs(list: &[CanonicalInequality]) -> Vec<LinExpr> {
    list.iter().map(|c| c.expr().clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(xs: &[usize]) -> SubsetMask {
        SubsetMask::from_elements(xs.iter().copied())
    }

    #[test]
    fn delta0_canonical_pair_order() {
        let f =
            Delta0Form::new([m(&[2]), m(&[1, 5]), m(&[4]), m(&[3])], SubsetMask::EMPTY).unwrap();
        assert_eq!(f.pair12, (m(&[1, 5]), m(&[2])));
        assert_eq!(f.pair34, (m(&[3]), m(&[4])));
        assert!(Delta0Form::new([m(&[1]), m(&[1]), m(&[3]), m(&[4])], SubsetMask::EMPTY).is_err());
        assert!(Delta0Form::new([m(&[1]), SubsetMask::EMPTY, m(&[3]), m(&[4])], m(&[2])).is_err());
        assert!(Delta0Form::new([m(&[1]), m(&[2]), m(&[3]), m(&[4])], m(&[4])).is_err());
    }

    #[test]
    fn delta_shapes_match_elemental_exprs() {
        let n = 4;
        for i in 1..=n {
            assert_eq!(
                Shape::Delta2 { i }.expr(n).unwrap(),
                Shape::ElementalH { i }.expr(n).unwrap()
            );
        }
        let mu = m(&[3, 4]);
        assert_eq!(
            Shape::Delta1 { i: 1, j: 2, mu }.expr(n).unwrap(),
            Shape::ElementalI {
                i: 1,
                j: 2,
                delta: mu
            }
            .expr(n)
            .unwrap()
        );
    }

    #[test]
    fn invalid_payloads_rejected() {
        assert!(CanonicalInequality::new(
            3,
            Shape::Delta1 {
                i: 2,
                j: 1,
                mu: SubsetMask::EMPTY
            }
        )
        .is_err());
        assert!(CanonicalInequality::new(
            3,
            Shape::Delta1 {
                i: 1,
                j: 2,
                mu: m(&[2])
            }
        )
        .is_err());
        assert!(CanonicalInequality::new(3, Shape::Delta2 { i: 4 }).is_err());
        let noncanon = Shape::Delta0(Delta0Form {
            pair12: (m(&[2]), m(&[1])),
            pair34: (m(&[3]), m(&[4])),
            beta: SubsetMask::EMPTY,
        });
        assert!(CanonicalInequality::new(4, noncanon).is_err());
    }

    #[test]
    pub fn payload_text_round_trip() {
        let shapes = [
            Shape::Delta0(
                Delta0Form::new([m(&[1, 6]), m(&[2]), m(&[3]), m(&[4])], m(&[5])).unwrap(),
            ),
            Shape::Delta1 {
                i: 1,
                j: 3,
                mu: m(&[2, 5]),
            },
            Shape::Delta2 { i: 4 },
            Shape::ElementalH { i: 2 },
            Shape::ElementalI {
                i: 2,
                j: 6,
                delta: SubsetMask::EMPTY,
            },
        ];
        for s in shapes {
            let back = Shape::parse_payload(s.kind(), &s.payload_text()).unwrap();
            assert_eq!(back, s);
        }
    }
}
