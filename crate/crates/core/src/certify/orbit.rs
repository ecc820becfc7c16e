use crate::entspace::{IngletonQuad, LinExpr};
use crate::{Error, Result};

/// The symmetry group of Ingleton terms on `{1..n}`: the two pair swaps
/// (`α1↔α2`, `α3↔α4`) combined with all relabelings of the ground set.
///
/// Every generated inequality family in this crate is closed under the group,
/// so one implication query per orbit decides the whole orbit.
pub struct QuadSymmetry {
    n: usize,
    perms: Vec<Vec<usize>>,
}

/// A group element: apply the swaps, then relabel with `perms[perm]`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    pub perm: usize,
    pub swap12: bool,
    pub swap34: bool,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

impl QuadSymmetry {
    /// Relabelings are enumerated explicitly, so `n` is capped at 7.
    pub fn new(n: usize) -> Result<Self> {
        if n > 7 {
            return Err(Error::Unsupported(format!(
                "orbit reduction for n ≤ 7 (got n={n})"
            )));
        }
        crate::check_n(n)?;
        Ok(QuadSymmetry {
            n,
            perms: permutations(n),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        4 * self.perms.len()
    }

    pub fn apply(&self, g: GroupElement, q: &IngletonQuad) -> IngletonQuad {
        q.swapped(g.swap12, g.swap34).relabel(&self.perms[g.perm])
    }

    /// Pulls an expression of the orbit representative back to the original quad:
    /// if `rep = g·q` then `J(q) = relabel⁻¹(J(rep))`.
    pub fn pull_back(&self, g: GroupElement, expr: &LinExpr) -> LinExpr {
        let perm = &self.perms[g.perm];
        let mut inv = vec![0; perm.len()];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        expr.relabel(&inv)
    }

    /// The lexicographically smallest image of `q`, and an element mapping `q` to it.
    pub fn canonical(&self, q: &IngletonQuad) -> (IngletonQuad, GroupElement) {
        let mut best: Option<(IngletonQuad, GroupElement)> = None;
        for swap12 in [false, true] {
            for swap34 in [false, true] {
                let s = q.swapped(swap12, swap34);
                for (perm, p) in self.perms.iter().enumerate() {
                    let img = s.relabel(p);
                    if best.as_ref().is_none_or(|(b, _)| img < *b) {
                        best = Some((
                            img,
                            GroupElement {
                                perm,
                                swap12,
                                swap34,
                            },
                        ));
                    }
                }
            }
        }
        best.expect("group is nonempty")
    }
}
