//! Floating-point phase one whose final basis is then confirmed exactly.

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::FeasOutcome;

const EPS: f64 = 1e-9;
/// Degenerate pivots tolerated before switching to the lowest-index rule.
const STALL_LIMIT: usize = 50;

/// Dense `f64` phase-one tableau over `[DA | I]`, where `D` flips rows to make `b ≥ 0`.
struct FloatTableau {
    rows: Vec<Vec<f64>>,
    obj: Vec<f64>,
    basis: Vec<usize>,
    cols: usize,
}

impl FloatTableau {
    fn new(a: &[Vec<BigRational>], b: &[BigRational], k: usize, flip: &[bool]) -> Self {
        let m = a.len();
        let cols = k + m;
        let mut rows = Vec::with_capacity(m);
        for i in 0..m {
            let s = if flip[i] { -1.0 } else { 1.0 };
            let mut r: Vec<f64> = a[i].iter().map(|v| s * v.to_f64().unwrap_or(0.0)).collect();
            r.extend((0..m).map(|j| if i == j { 1.0 } else { 0.0 }));
            r.push(s * b[i].to_f64().unwrap_or(0.0));
            rows.push(r);
        }
        let mut basis: Vec<usize> = (k..cols).collect();
        for j in 0..k {
            let mut hit = None;
            for (i, r) in rows.iter().enumerate() {
                if r[j] != 0.0 {
                    if hit.is_some() || r[j] != 1.0 {
                        hit = None;
                        break;
                    }
                    hit = Some(i);
                }
            }
            if let Some(i) = hit {
                if basis[i] >= k {
                    basis[i] = j;
                }
            }
        }
        let mut obj = vec![0.0; cols + 1];
        for o in &mut obj[k..cols] {
            *o = 1.0;
        }
        for (r, &bv) in rows.iter().zip(&basis) {
            if bv >= k {
                for (o, v) in obj.iter_mut().zip(r) {
                    *o -= v;
                }
            }
        }
        FloatTableau {
            rows,
            obj,
            basis,
            cols,
        }
    }

    fn pivot(&mut self, p: usize, e: usize) {
        let inv = 1.0 / self.rows[p][e];
        for v in self.rows[p].iter_mut() {
            *v *= inv;
        }
        let prow = std::mem::take(&mut self.rows[p]);
        let nz: Vec<usize> = (0..prow.len()).filter(|&j| prow[j] != 0.0).collect();
        let eliminate = |row: &mut Vec<f64>| {
            let f = row[e];
            if f != 0.0 {
                for &j in &nz {
                    row[j] -= f * prow[j];
                }
                row[e] = 0.0;
            }
        };
        for row in self.rows.iter_mut() {
            if !row.is_empty() {
                eliminate(row);
            }
        }
        eliminate(&mut self.obj);
        self.rows[p] = prow;
        self.basis[p] = e;
    }

    /// Runs to a (numerically) optimal basis, or gives up.
    fn solve(&mut self) -> bool {
        let rhs = self.cols;
        let mut stall = 0;
        for _ in 0..(50 * self.cols + 1000) {
            let entering = if stall < STALL_LIMIT {
                (0..self.cols)
                    .filter(|&j| self.obj[j] < -EPS)
                    .min_by(|&x, &y| self.obj[x].total_cmp(&self.obj[y]))
            } else {
                (0..self.cols).find(|&j| self.obj[j] < -EPS)
            };
            let Some(e) = entering else { return true };
            let mut best: Option<(usize, f64)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[e] <= EPS {
                    continue;
                }
                let ratio = row[rhs].max(0.0) / row[e];
                let better = match best {
                    None => true,
                    Some((bi, br)) => {
                        ratio < br - EPS
                            || (ratio <= br + EPS
                                && if stall < STALL_LIMIT {
                                    row[e] > self.rows[bi][e]
                                } else {
                                    self.basis[i] < self.basis[bi]
                                })
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let Some((p, ratio)) = best else { return false };
            stall = if ratio <= EPS { stall + 1 } else { 0 };
            self.pivot(p, e);
        }
        false
    }
}

/// Solves `M z = r` exactly; `None` if `M` is singular.
fn solve_exact(mut m: Vec<Vec<BigRational>>, mut r: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let n = r.len();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        r.swap(c, p);
        let inv = m[c][c].recip();
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] * &inv;
            let (top, bottom) = m.split_at_mut(i);
            for (dst, src) in bottom[0][c..].iter_mut().zip(&top[c][c..]) {
                if !src.is_zero() {
                    *dst -= &f * src;
                }
            }
            let d = &f * &r[c];
            r[i] -= d;
        }
    }
    let mut z = vec![BigRational::zero(); n];
    for c in (0..n).rev() {
        let mut acc = r[c].clone();
        for j in c + 1..n {
            if !m[c][j].is_zero() {
                acc -= &m[c][j] * &z[j];
            }
        }
        z[c] = acc / &m[c][c];
    }
    Some(z)
}

/// Phase one guided by a floating-point basis. `None` means "no confirmed
/// answer", never "infeasible".
pub(super) fn find_feasible(
    a: &[Vec<BigRational>],
    b: &[BigRational],
    k: usize,
) -> Option<FeasOutcome> {
    let m = a.len();
    if m == 0 {
        return None;
    }
    let flip: Vec<bool> = b.iter().map(|v| v.is_negative()).collect();
    let mut ft = FloatTableau::new(a, b, k, &flip);
    if !ft.solve() {
        return None;
    }
    let basis = ft.basis;

    // Column `j` of `[DA | I]`, entry `i`.
    let entry = |i: usize, j: usize| -> BigRational {
        if j < k {
            if flip[i] {
                -&a[i][j]
            } else {
                a[i][j].clone()
            }
        } else if j - k == i {
            num_traits::One::one()
        } else {
            BigRational::zero()
        }
    };
    let db: Vec<BigRational> = b.iter().map(|v| v.abs()).collect();
    let bmat: Vec<Vec<BigRational>> = (0..m)
        .map(|i| basis.iter().map(|&j| entry(i, j)).collect())
        .collect();
    let xb = solve_exact(bmat.clone(), db.clone())?;
    let artificial_zero = basis.iter().zip(&xb).all(|(&j, v)| j < k || v.is_zero());
    if artificial_zero && xb.iter().all(|v| !v.is_negative()) {
        let mut x = vec![BigRational::zero(); k];
        for (&j, v) in basis.iter().zip(xb) {
            if j < k {
                x[j] = v;
            }
        }
        return Some(FeasOutcome::Feasible { x });
    }

    // Duals of the phase-one basis: Bᵀy = c_B with unit cost on artificials.
    let bt: Vec<Vec<BigRational>> = (0..m)
        .map(|r| (0..m).map(|i| bmat[i][r].clone()).collect())
        .collect();
    let cb: Vec<BigRational> = basis
        .iter()
        .map(|&j| {
            if j >= k {
                num_traits::One::one()
            } else {
                BigRational::zero()
            }
        })
        .collect();
    let y = solve_exact(bt, cb)?;
    let yb: BigRational = y.iter().zip(&db).map(|(u, v)| u * v).sum();
    if !yb.is_positive() {
        return None;
    }
    for j in 0..k {
        let mut s = BigRational::zero();
        for (i, (yi, row)) in y.iter().zip(a).enumerate() {
            if !yi.is_zero() && !row[j].is_zero() {
                s += yi * entry(i, j);
            }
        }
        if s.is_positive() {
            return None;
        }
    }
    // yᵀDA ≤ 0 and yᵀDb > 0, so −Dy is a Farkas ray for the original system.
    let farkas = y
        .into_iter()
        .zip(&flip)
        .map(|(v, &f)| if f { v } else { -v })
        .collect();
    Some(FeasOutcome::Infeasible { farkas })
}
