//! Exact dense-tableau simplex over `BigRational`.
//!
//! Solves `min cᵀx  s.t.  Ax = b, x ≥ 0` with a two-phase method. Pivoting uses
//! Bland's rule (lowest-index entering column, lowest-index leaving basic
//! variable on ratio ties), so the method terminates on degenerate problems.
//!
//! Every outcome carries its own proof: optimal solutions come with a dual
//! vector, infeasible systems with a Farkas ray, unbounded ones with a
//! recession direction. Callers are expected to re-check these exactly.
//!
//! [`find_feasible`] first runs a floating-point phase one to guess a final
//! basis, then confirms it with exact elimination. A guess that does not check
//! out exactly is discarded and the exact tableau runs from scratch, so the
//! floating-point pass only ever saves time.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `min cᵀx  s.t.  Ax = b, x ≥ 0`, dense.
#[derive(Clone, Debug)]
pub struct StandardForm {
    pub a: Vec<Vec<BigRational>>,
    pub b: Vec<BigRational>,
    pub c: Vec<BigRational>,
}

#[derive(Clone, Debug)]
pub enum LpOutcome {
    /// `x` optimal; `dual` satisfies `Aᵀy ≤ c` and `bᵀy = value`.
    Optimal {
        x: Vec<BigRational>,
        dual: Vec<BigRational>,
        value: BigRational,
    },
    /// `yᵀA ≥ 0` componentwise and `yᵀb < 0`.
    Infeasible { farkas: Vec<BigRational> },
    /// `x` feasible; `ray ≥ 0`, `A·ray = 0`, `cᵀray < 0`.
    Unbounded {
        x: Vec<BigRational>,
        ray: Vec<BigRational>,
    },
}

/// Result of a phase-one-only solve.
#[derive(Clone, Debug)]
pub enum FeasOutcome {
    Feasible { x: Vec<BigRational> },
    Infeasible { farkas: Vec<BigRational> },
}

struct Tableau {
    /// Constraint rows, each `cols + 1` wide; the last entry is the right-hand side.
    rows: Vec<Vec<BigRational>>,
    /// Reduced costs, last entry is `-z`.
    obj: Vec<BigRational>,
    basis: Vec<usize>,
    /// Number of structural columns; columns `k..k+m` are artificials.
    k: usize,
    m: usize,
    /// Rows multiplied by −1 to make `b ≥ 0`.
    flipped: Vec<bool>,
}

impl Tableau {
    fn new(a: &[Vec<BigRational>], b: &[BigRational], k: usize) -> Self {
        let m = a.len();
        assert_eq!(b.len(), m, "right-hand side length");
        let width = k + m + 1;
        let mut rows = Vec::with_capacity(m);
        let mut flipped = Vec::with_capacity(m);
        for (i, (row, rhs)) in a.iter().zip(b).enumerate() {
            assert_eq!(row.len(), k, "ragged constraint matrix");
            let flip = rhs.is_negative();
            let mut r = Vec::with_capacity(width);
            r.extend(row.iter().map(|v| if flip { -v } else { v.clone() }));
            r.extend((0..m).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r.push(if flip { -rhs } else { rhs.clone() });
            rows.push(r);
            flipped.push(flip);
        }
        // Structural unit columns (a single +1) start in the basis in place of the
        // row's artificial. The initial basis matrix is still the identity, so the
        // artificial columns keep tracking B⁻¹.
        let mut basis: Vec<usize> = (k..k + m).collect();
        for j in 0..k {
            let mut hit = None;
            for (i, r) in rows.iter().enumerate() {
                if !r[j].is_zero() {
                    if hit.is_some() || !r[j].is_one() {
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
        Tableau {
            rows,
            obj: vec![BigRational::zero(); width],
            basis,
            k,
            m,
            flipped,
        }
    }

    fn rhs(&self) -> usize {
        self.k + self.m
    }

    /// Sets the objective row for costs `cost` (indexed over all columns).
    fn price(&mut self, cost: &[BigRational]) {
        let rhs = self.rhs();
        let mut obj: Vec<BigRational> = cost.to_vec();
        obj.push(BigRational::zero());
        for (r, &bvar) in self.rows.iter().zip(&self.basis) {
            let cb = &cost[bvar];
            if cb.is_zero() {
                continue;
            }
            for (o, v) in obj.iter_mut().zip(r.iter()) {
                if !v.is_zero() {
                    *o -= cb * v;
                }
            }
        }
        debug_assert_eq!(obj.len(), rhs + 1);
        self.obj = obj;
    }

    fn pivot(&mut self, p: usize, e: usize) {
        let piv = self.rows[p][e].clone();
        if !piv.is_one() {
            let inv = piv.recip();
            for v in self.rows[p].iter_mut() {
                if !v.is_zero() {
                    *v *= &inv;
                }
            }
        }
        let prow = std::mem::take(&mut self.rows[p]);
        let nz: Vec<usize> = (0..prow.len()).filter(|&j| !prow[j].is_zero()).collect();
        let eliminate = |row: &mut Vec<BigRational>| {
            let f = row[e].clone();
            if f.is_zero() {
                return;
            }
            for &j in &nz {
                let delta = &f * &prow[j];
                row[j] -= delta;
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != p {
                eliminate(row);
            }
        }
        eliminate(&mut self.obj);
        self.rows[p] = prow;
        self.basis[p] = e;
    }

    /// Runs Bland-rule iterations over entering columns `< limit`.
    /// Returns `Some(col)` if column `col` proves unboundedness.
    fn iterate(&mut self, limit: usize) -> Option<usize> {
        let rhs = self.rhs();
        loop {
            let e = (0..limit).find(|&j| self.obj[j].is_negative())?;
            let mut best: Option<(usize, BigRational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[e].is_positive() {
                    continue;
                }
                let ratio = &row[rhs] / &row[e];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((p, _)) => self.pivot(p, e),
                None => return Some(e),
            }
        }
    }

    fn primal(&self) -> Vec<BigRational> {
        let rhs = self.rhs();
        let mut x = vec![BigRational::zero(); self.k];
        for (row, &bvar) in self.rows.iter().zip(&self.basis) {
            if bvar < self.k {
                x[bvar] = row[rhs].clone();
            }
        }
        x
    }

    /// Row multipliers `y` for the original (unflipped) system, read off the
    /// artificial columns: `y_i = ±(c_art_i − d_art_i)`.
    fn duals(&self, art_cost: &BigRational) -> Vec<BigRational> {
        (0..self.m)
            .map(|i| {
                let y = art_cost - &self.obj[self.k + i];
                if self.flipped[i] {
                    -y
                } else {
                    y
                }
            })
            .collect()
    }

    /// Phase one. Returns `Err(farkas)` when infeasible.
    fn phase_one(&mut self) -> Result<(), Vec<BigRational>> {
        let mut cost = vec![BigRational::zero(); self.k];
        cost.extend((0..self.m).map(|_| BigRational::one()));
        self.price(&cost);
        let total = self.k + self.m;
        let unbounded = self.iterate(total);
        debug_assert!(unbounded.is_none(), "phase one is bounded below by 0");
        let z = -&self.obj[self.rhs()];
        if z.is_positive() {
            // y' with y'ᵀDA ≤ 0, y'ᵀDb = z > 0; return −Dy'.
            let y = self.duals(&BigRational::one());
            return Err(y.into_iter().map(|v| -v).collect());
        }
        Ok(())
    }

    /// Pivots zero-level artificials out of the basis; drops redundant rows.
    fn expel_artificials(&mut self) {
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] >= self.k {
                match (0..self.k).find(|&j| !self.rows[i][j].is_zero()) {
                    Some(j) => self.pivot(i, j),
                    None => {
                        self.rows.swap_remove(i);
                        self.basis.swap_remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }
}

/// Phase one only: find any `x ≥ 0` with `Ax = b`, where `A` has `k` columns.
pub fn find_feasible(a: &[Vec<BigRational>], b: &[BigRational], k: usize) -> FeasOutcome {
    if let Some(out) = guided::find_feasible(a, b, k) {
        return out;
    }
    find_feasible_exact(a, b, k)
}

/// [`find_feasible`] without the floating-point basis guess.
pub fn find_feasible_exact(a: &[Vec<BigRational>], b: &[BigRational], k: usize) -> FeasOutcome {
    let mut t = Tableau::new(a, b, k);
    match t.phase_one() {
        Ok(()) => FeasOutcome::Feasible { x: t.primal() },
        Err(farkas) => FeasOutcome::Infeasible { farkas },
    }
}

/// Two-phase simplex for `min cᵀx  s.t.  Ax = b, x ≥ 0`.
pub fn minimize(lp: &StandardForm) -> LpOutcome {
    let mut t = Tableau::new(&lp.a, &lp.b, lp.c.len());
    if let Err(farkas) = t.phase_one() {
        return LpOutcome::Infeasible { farkas };
    }
    t.expel_artificials();
    let mut cost = lp.c.clone();
    cost.extend((0..t.m).map(|_| BigRational::zero()));
    t.price(&cost);
    if let Some(e) = t.iterate(t.k) {
        let mut ray = vec![BigRational::zero(); t.k];
        ray[e] = BigRational::one();
        for (row, &bvar) in t.rows.iter().zip(&t.basis) {
            ray[bvar] = -&row[e];
        }
        return LpOutcome::Unbounded { x: t.primal(), ray };
    }
    let value = -&t.obj[t.rhs()];
    LpOutcome::Optimal {
        x: t.primal(),
        dual: t.duals(&BigRational::zero()),
        value,
    }
}

mod guided;
