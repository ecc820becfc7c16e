//! Whole-family checks built on [`decide`]: Shannon-implied Ingleton
//! inequalities, completeness and minimality of `Δ`, and full-dimensionality.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::orbit::{GroupElement, QuadSymmetry};
use super::{decide, verify_certificate, FarkasCertificate, Implication, SeparationWitness};
use crate::bound::{solve_bound, BoundOutcome, BoundProblem, Cone, Constraint, Relation, Sense};
use crate::entspace::{
    ingleton_expr, witness_fulldim, EntropyVector, IngletonQuad, LinExpr, SubsetMask,
};
use crate::ingen::{
    classify_quad, exprs, gen_delta, gen_elemental, CanonicalInequality, GenBudget, QuadClass,
};
use crate::{check_n, Error, Result};

/// Largest `n` for which every quadruple is enumerated.
pub const EXHAUSTIVE_MAX_N: usize = 4;

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum ScanMode {
    /// Every quadruple, reduced to one representative per symmetry orbit.
    Exhaustive,
    /// `samples` uniformly random quadruples from a seeded generator.
    Sampled { samples: usize, seed: u64 },
}

/// Uniformly random quadruples over `{1..n}`; identical for identical `(n, seed)`.
pub fn sample_quads(n: usize, samples: usize, seed: u64) -> Vec<IngletonQuad> {
    let full = SubsetMask::full(n).bits();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || SubsetMask::from_bits(rng.gen::<u32>() & full);
    (0..samples)
        .map(|_| IngletonQuad::new(draw(), draw(), draw(), draw()))
        .collect()
}

fn all_quads(n: usize) -> impl Iterator<Item = IngletonQuad> {
    let side = 1u32 << n;
    (0..side.pow(4)).map(move |x| {
        let part = |k: u32| SubsetMask::from_bits((x / side.pow(k)) % side);
        IngletonQuad::new(part(0), part(1), part(2), part(3))
    })
}

/// An orbit representative with every member and the element carrying it there.
struct Orbit {
    rep: IngletonQuad,
    members: Vec<(IngletonQuad, GroupElement)>,
}

fn orbits(sym: &QuadSymmetry) -> Vec<Orbit> {
    let tagged: Vec<(IngletonQuad, IngletonQuad, GroupElement)> = all_quads(sym.n())
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|q| {
            let (rep, g) = sym.canonical(&q);
            (rep, q, g)
        })
        .collect();
    let mut by_rep: BTreeMap<IngletonQuad, Vec<(IngletonQuad, GroupElement)>> = BTreeMap::new();
    for (rep, q, g) in tagged {
        by_rep.entry(rep).or_default().push((q, g));
    }
    by_rep
        .into_iter()
        .map(|(rep, members)| Orbit { rep, members })
        .collect()
}

fn require_exhaustive_n(n: usize) -> Result<()> {
    if n > EXHAUSTIVE_MAX_N {
        return Err(Error::Unsupported(format!(
            "exhaustive scans need n ≤ {EXHAUSTIVE_MAX_N} (got n={n}); use sampling"
        )));
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct Theorem1Row {
    pub quad: IngletonQuad,
    /// Quadruples represented by this row (1 when sampling).
    pub orbit_size: usize,
    /// Some subset lies in the union of the other three.
    pub covered: bool,
    pub class: QuadClass,
    /// The verdict over the elemental inequalities, with its proof.
    pub proof: Implication,
}

impl Theorem1Row {
    pub fn implied(&self) -> bool {
        self.proof.is_implied()
    }

    /// The structural classification predicts a Shannon-implied inequality.
    pub fn class_predicts_implied(&self) -> bool {
        !matches!(self.class, QuadClass::ReducesTo(_))
    }
}

#[derive(Clone, Debug)]
pub struct Theorem1Report {
    pub n: usize,
    pub mode: ScanMode,
    /// Quadruples covered by the scan.
    pub quads: usize,
    pub rows: Vec<Theorem1Row>,
}

impl Theorem1Report {
    /// Rows where the containment criterion and the LP verdict disagree.
    pub fn counterexamples(&self) -> impl Iterator<Item = &Theorem1Row> {
        self.rows.iter().filter(|r| r.covered != r.implied())
    }

    /// Rows where the classification and the LP verdict disagree.
    pub fn class_mismatches(&self) -> impl Iterator<Item = &Theorem1Row> {
        self.rows
            .iter()
            .filter(|r| r.class_predicts_implied() != r.implied())
    }

    pub fn implied_count(&self) -> usize {
        self.rows.iter().filter(|r| r.implied()).count()
    }

    pub fn passed(&self) -> bool {
        self.counterexamples().next().is_none() && self.class_mismatches().next().is_none()
    }
}

/// Compares the containment criterion with an exact implication test over the
/// elemental inequalities, quadruple by quadruple.
pub fn check_theorem1(n: usize, mode: ScanMode) -> Result<Theorem1Report> {
    check_n(n)?;
    let gens = exprs(&gen_elemental(n)?);
    let (quads, reps): (usize, Vec<(IngletonQuad, usize)>) = match mode {
        ScanMode::Exhaustive => {
            require_exhaustive_n(n)?;
            let sym = QuadSymmetry::new(n)?;
            let orbs = orbits(&sym);
            (
                1 << (4 * n),
                orbs.into_iter().map(|o| (o.rep, o.members.len())).collect(),
            )
        }
        ScanMode::Sampled { samples, seed } => (
            samples,
            sample_quads(n, samples, seed)
                .into_iter()
                .map(|q| (q, 1))
                .collect(),
        ),
    };
    let rows = reps
        .into_par_iter()
        .map(|(quad, orbit_size)| {
            let target = ingleton_expr(n, &quad)?;
            Ok(Theorem1Row {
                quad,
                orbit_size,
                covered: quad.has_covered_subset(),
                class: classify_quad(n, &quad)?,
                proof: decide(&target, &gens)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Theorem1Report {
        n,
        mode,
        quads,
        rows,
    })
}

#[derive(Clone, Debug)]
pub struct CompletenessRow {
    pub quad: IngletonQuad,
    pub orbit_size: usize,
    /// Certificate over `Δ` for `quad`, or `None` when none exists.
    pub certificate: Option<FarkasCertificate>,
    /// Orbit members whose transported certificate failed re-verification.
    pub transport_failures: Vec<IngletonQuad>,
}

#[derive(Clone, Debug)]
pub struct CompletenessReport {
    pub n: usize,
    pub mode: ScanMode,
    pub delta_size: usize,
    pub quads: usize,
    /// Quadruples whose certificate (direct or transported) verified.
    pub certified: usize,
    pub rows: Vec<CompletenessRow>,
}

impl CompletenessReport {
    pub fn failures(&self) -> impl Iterator<Item = IngletonQuad> + '_ {
        self.rows.iter().flat_map(|r| {
            let direct = r.certificate.is_none().then_some(r.quad);
            direct
                .into_iter()
                .chain(r.transport_failures.iter().copied())
        })
    }

    pub fn passed(&self) -> bool {
        self.certified == self.quads
    }
}

/// Certifies Ingleton inequalities as conic combinations of `Δ`.
///
/// In exhaustive mode each orbit representative is solved once and its
/// certificate is relabeled onto every other member, then re-verified there.
pub fn check_completeness(
    n: usize,
    mode: ScanMode,
    budget: GenBudget,
) -> Result<CompletenessReport> {
    check_n(n)?;
    let delta = gen_delta(n, budget)?;
    let gens = exprs(&delta);
    let solve = |q: &IngletonQuad| -> Result<Option<FarkasCertificate>> {
        Ok(match decide(&ingleton_expr(n, q)?, &gens)? {
            Implication::Implied(c) => Some(c),
            Implication::Separated(_) => None,
        })
    };
    let (quads, rows) = match mode {
        ScanMode::Exhaustive => {
            require_exhaustive_n(n)?;
            let sym = QuadSymmetry::new(n)?;
            let index: HashMap<&LinExpr, usize> =
                gens.iter().enumerate().map(|(k, g)| (g, k)).collect();
            let rows = orbits(&sym)
                .into_par_iter()
                .map(|orb| {
                    let certificate = solve(&orb.rep)?;
                    let mut transport_failures = Vec::new();
                    for (q, g) in &orb.members {
                        let ok = match &certificate {
                            Some(c) => {
                                let moved = transport(&sym, *g, c, &gens, &index);
                                match moved {
                                    Some(m) => {
                                        verify_certificate(&ingleton_expr(n, q)?, &gens, &m)?
                                    }
                                    None => false,
                                }
                            }
                            None => true,
                        };
                        if !ok {
                            transport_failures.push(*q);
                        }
                    }
                    Ok(CompletenessRow {
                        quad: orb.rep,
                        orbit_size: orb.members.len(),
                        certificate,
                        transport_failures,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            (1usize << (4 * n), rows)
        }
        ScanMode::Sampled { samples, seed } => {
            let rows = sample_quads(n, samples, seed)
                .into_par_iter()
                .map(|quad| {
                    Ok(CompletenessRow {
                        quad,
                        orbit_size: 1,
                        certificate: solve(&quad)?,
                        transport_failures: Vec::new(),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            (samples, rows)
        }
    };
    let certified = rows
        .iter()
        .filter(|r| r.certificate.is_some())
        .map(|r| r.orbit_size - r.transport_failures.len())
        .sum();
    Ok(CompletenessReport {
        n,
        mode,
        delta_size: delta.len(),
        quads,
        certified,
        rows,
    })
}

/// Rewrites a certificate for `rep = g·q` into one for `q`, generator by generator.
fn transport(
    sym: &QuadSymmetry,
    g: GroupElement,
    cert: &FarkasCertificate,
    gens: &[LinExpr],
    index: &HashMap<&LinExpr, usize>,
) -> Option<FarkasCertificate> {
    let mut terms = cert
        .terms
        .iter()
        .map(|(k, c)| {
            let moved = sym.pull_back(g, &gens[*k]);
            index.get(&moved).map(|&j| (j, c.clone()))
        })
        .collect::<Option<Vec<_>>>()?;
    terms.sort_by_key(|(j, _)| *j);
    Some(FarkasCertificate { terms })
}

#[derive(Clone, Debug)]
pub enum MinimalityOutcome {
    /// Not implied by the rest of `Δ`.
    NonRedundant(SeparationWitness),
    /// Implied by the rest; indices refer to the full list.
    Redundant(FarkasCertificate),
}

#[derive(Clone, Debug)]
pub struct MinimalityRow {
    pub index: usize,
    pub inequality: CanonicalInequality,
    pub outcome: MinimalityOutcome,
}

#[derive(Clone, Debug)]
pub struct MinimalityReport {
    pub n: usize,
    pub rows: Vec<MinimalityRow>,
}

impl MinimalityReport {
    pub fn redundant(&self) -> impl Iterator<Item = &MinimalityRow> {
        self.rows
            .iter()
            .filter(|r| matches!(r.outcome, MinimalityOutcome::Redundant(_)))
    }

    pub fn witnesses(&self) -> usize {
        self.rows.len() - self.redundant().count()
    }

    pub fn passed(&self) -> bool {
        self.redundant().next().is_none()
    }
}

/// Largest `n` checked for minimality without opting in to long runs.
pub const MINIMALITY_DEFAULT_MAX_N: usize = 5;

/// Tests every member of `Δ` against all the others.
pub fn check_minimality(n: usize, allow_long: bool, budget: GenBudget) -> Result<MinimalityReport> {
    check_n(n)?;
    if n > MINIMALITY_DEFAULT_MAX_N && !allow_long {
        return Err(Error::Unsupported(format!(
            "minimality beyond n={MINIMALITY_DEFAULT_MAX_N} is long-running and must be requested explicitly"
        )));
    }
    let delta = gen_delta(n, budget)?;
    let gens = exprs(&delta);
    let rows = (0..delta.len())
        .into_par_iter()
        .map(|i| {
            let rest: Vec<LinExpr> = gens
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, g)| g.clone())
                .collect();
            let outcome = match decide(&gens[i], &rest)? {
                Implication::Separated(w) => MinimalityOutcome::NonRedundant(w),
                Implication::Implied(c) => MinimalityOutcome::Redundant(FarkasCertificate {
                    terms: c
                        .terms
                        .into_iter()
                        .map(|(k, v)| (if k >= i { k + 1 } else { k }, v))
                        .collect(),
                }),
            };
            Ok(MinimalityRow {
                index: i,
                inequality: delta[i].clone(),
                outcome,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MinimalityReport { n, rows })
}

#[derive(Clone, Debug)]
pub struct FulldimReport {
    pub n: usize,
    pub quads: usize,
    /// Quadruples with a nonzero Ingleton term.
    pub nontrivial: usize,
    pub min_value: Option<BigRational>,
    /// Nontrivial quadruples evaluating below 1.
    pub failures: Vec<IngletonQuad>,
}

impl FulldimReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Evaluates every nontrivial Ingleton term at [`witness_fulldim`] and checks it is at least 1.
pub fn check_fulldim(n: usize, mode: ScanMode) -> Result<FulldimReport> {
    check_n(n)?;
    let quads: Vec<IngletonQuad> = match mode {
        ScanMode::Exhaustive => {
            require_exhaustive_n(n)?;
            all_quads(n).collect()
        }
        ScanMode::Sampled { samples, seed } => sample_quads(n, samples, seed),
    };
    let h = witness_fulldim(n)?;
    let values = quads
        .par_iter()
        .map(|q| {
            let e = ingleton_expr(n, q)?;
            (!e.is_zero()).then(|| e.evaluate(&h)).transpose()
        })
        .collect::<Result<Vec<Option<BigRational>>>>()?;
    let one = BigRational::one();
    let mut report = FulldimReport {
        n,
        quads: quads.len(),
        nontrivial: 0,
        min_value: None,
        failures: Vec::new(),
    };
    for (q, v) in quads.iter().zip(values) {
        let Some(v) = v else { continue };
        report.nontrivial += 1;
        if v < one {
            report.failures.push(*q);
        }
        if report.min_value.as_ref().is_none_or(|m| v < *m) {
            report.min_value = Some(v);
        }
    }
    Ok(report)
}

/// A polymatroid on `n ≥ 4` elements violating `J({1},{2},{3},{4}) ≥ 0`.
///
/// Minimizes the Ingleton term over the elemental cone with `h(N) = 1`.
pub fn find_ingleton_violator(n: usize) -> Result<EntropyVector> {
    check_n(n)?;
    if n < 4 {
        return Err(Error::Unsupported(format!(
            "Ingleton violations need at least 4 elements (got n={n})"
        )));
    }
    let s = SubsetMask::singleton;
    let objective = ingleton_expr(n, &IngletonQuad::new(s(1), s(2), s(3), s(4)))?;
    let problem = BoundProblem {
        n,
        constraints: vec![Constraint::new(
            LinExpr::term(n, SubsetMask::full(n), BigRational::one())?,
            Relation::Eq,
            BigRational::one(),
        )],
        objective,
        sense: Sense::Minimize,
        cone: Cone::Gamma,
    };
    match solve_bound(&problem, GenBudget::default())? {
        BoundOutcome::Optimal { value, point, .. } if value.is_negative() => Ok(point),
        other => Err(Error::Verification(format!(
            "no Ingleton violation found over the polymatroid cone ({})",
            other.status()
        ))),
    }
}
