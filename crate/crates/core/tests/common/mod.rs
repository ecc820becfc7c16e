#![allow(dead_code)]

use std::collections::BTreeMap;

use ingleton::entspace::{
    cond_entropy_expr, cond_mutinfo_expr, ingleton_expr, IngletonQuad, LinExpr, SubsetMask,
};
use ingleton::BigRational;

/// Integer coefficient maps over raw bitmasks, written without the library's expression type.
pub type Raw = BTreeMap<u32, i64>;

fn bump(e: &mut Raw, m: u32, c: i64) {
    if m == 0 {
        return;
    }
    let v = e.entry(m).or_insert(0);
    *v += c;
    if *v == 0 {
        e.remove(&m);
    }
}

pub fn raw_j(a1: u32, a2: u32, a3: u32, a4: u32) -> Raw {
    let mut e = Raw::new();
    for m in [a1 | a2, a1 | a3, a1 | a4, a2 | a3, a2 | a4] {
        bump(&mut e, m, 1);
    }
    for m in [a1, a2, a3 | a4, a1 | a2 | a3, a1 | a2 | a4] {
        bump(&mut e, m, -1);
    }
    e
}

pub fn raw_h(a: u32, b: u32) -> Raw {
    let mut e = Raw::new();
    bump(&mut e, a | b, 1);
    bump(&mut e, b, -1);
    e
}

pub fn raw_i(a: u32, b: u32, d: u32) -> Raw {
    let mut e = Raw::new();
    bump(&mut e, a | d, 1);
    bump(&mut e, b | d, 1);
    bump(&mut e, d, -1);
    bump(&mut e, a | b | d, -1);
    e
}

pub fn raw_sum(parts: &[Raw]) -> Raw {
    let mut e = Raw::new();
    for p in parts {
        for (&m, &c) in p {
            bump(&mut e, m, c);
        }
    }
    e
}

/// The library expression as a raw map, for comparison with the oracle.
pub fn to_raw(e: &LinExpr) -> Raw {
    e.iter()
        .map(|(m, c)| {
            assert!(c.is_integer());
            (m.bits(), i64::try_from(c.to_integer()).unwrap())
        })
        .collect()
}

pub fn mask(bits: u32) -> SubsetMask {
    SubsetMask::from_bits(bits)
}

pub fn j(n: usize, a: [u32; 4]) -> LinExpr {
    ingleton_expr(
        n,
        &IngletonQuad::new(mask(a[0]), mask(a[1]), mask(a[2]), mask(a[3])),
    )
    .unwrap()
}

pub fn h(n: usize, a: u32, b: u32) -> LinExpr {
    cond_entropy_expr(n, mask(a), mask(b)).unwrap()
}

pub fn i(n: usize, a: u32, b: u32, d: u32) -> LinExpr {
    cond_mutinfo_expr(n, mask(a), mask(b), mask(d)).unwrap()
}

pub fn sum(parts: &[LinExpr]) -> LinExpr {
    parts
        .iter()
        .skip(1)
        .fold(parts[0].clone(), |acc, p| &acc + p)
}

/// A named identity `lhs = rhs`.
pub struct Identity {
    pub name: &'static str,
    pub lhs: LinExpr,
    pub rhs: LinExpr,
}

impl Identity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Shrinking identities for a quadruple `a` and an extra subset `b`; only
/// identities whose side condition holds are returned.
pub fn shrink_identities(n: usize, a: [u32; 4], b: u32) -> Vec<Identity> {
    let [a1, a2, a3, a4] = a;
    let mut out = Vec::new();
    let lhs = || j(n, a);
    if b & !(a1 & a2) == 0 {
        out.push(Identity {
            name: "shrink-12",
            lhs: lhs(),
            rhs: &j(n, [a1, a2, a3 | b, a4 | b]) + &h(n, b, a3 | a4),
        });
    }
    if b & !(a1 & a3) == 0 {
        out.push(Identity {
            name: "shrink-13",
            lhs: lhs(),
            rhs: &j(n, [a1, a2 | b, a3, a4 | b]) + &i(n, b, a4, a2),
        });
    }
    if b & !(a3 & a4) == 0 {
        out.push(Identity {
            name: "shrink-34",
            lhs: lhs(),
            rhs: sum(&[j(n, [a1 | b, a2 | b, a3, a4]), i(n, b, a2, a1), h(n, b, a2)]),
        });
    }
    out
}

/// Splitting identity for `α1 = a∪b∪c` with `a ⊆ α2`, `b ⊆ α3`, `c ⊆ α4`.
///
/// The second mutual-information term is conditioned on `α2∪b`.
pub fn split_first(n: usize, a2: u32, a3: u32, a4: u32, a: u32, b: u32, c: u32) -> Identity {
    assert!(a & !a2 == 0 && b & !a3 == 0 && c & !a4 == 0);
    Identity {
        name: "split-first",
        lhs: j(n, [a | b | c, a2, a3, a4]),
        rhs: sum(&[
            i(n, a3, a4, a | b | c),
            i(n, a3, c, a2 | b),
            i(n, a4, b, a2),
            h(n, a, a3 | a4),
        ]),
    }
}

/// The same split with the second term conditioned on `α2∪a`; false in general.
pub fn split_first_as_printed(
    n: usize,
    a2: u32,
    a3: u32,
    a4: u32,
    a: u32,
    b: u32,
    c: u32,
) -> Identity {
    Identity {
        name: "split-first-as-printed",
        lhs: j(n, [a | b | c, a2, a3, a4]),
        rhs: sum(&[
            i(n, a3, a4, a | b | c),
            i(n, a3, c, a2 | a),
            i(n, a4, b, a2),
            h(n, a, a3 | a4),
        ]),
    }
}

/// Splitting identity for `α4 = a∪b∪c` with `a ⊆ α1`, `b ⊆ α2`, `c ⊆ α3`.
pub fn split_fourth(n: usize, a1: u32, a2: u32, a3: u32, a: u32, b: u32, c: u32) -> Identity {
    assert!(a & !a1 == 0 && b & !a2 == 0 && c & !a3 == 0);
    Identity {
        name: "split-fourth",
        lhs: j(n, [a1, a2, a3, a | b | c]),
        rhs: sum(&[
            i(n, a2, c, a1 | b),
            i(n, a3, b, a1),
            i(n, a3, a, a2 | c),
            i(n, a1, a2, a3 | a | b),
            h(n, c, a2),
        ]),
    }
}

/// Every subset of `m`, including `m` and `0`.
pub fn submasks(m: u32) -> impl Iterator<Item = u32> {
    let mut next = Some(m);
    std::iter::from_fn(move || {
        let s = next?;
        next = (s != 0).then(|| (s - 1) & m);
        Some(s)
    })
}

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}
