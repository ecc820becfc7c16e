use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use ingleton::bound::{
    compile_network, format_outcome, membership, parse_network, parse_problem, solve_bound, Cone,
};
use ingleton::certify::{
    check_completeness, check_minimality, check_theorem1, decide, find_ingleton_violator,
    format_certificate_record, format_witness_record, Implication, MinimalityOutcome, ScanMode,
};
use ingleton::entspace::{witness_fulldim, witness_modular, EntropyVector, IngletonQuad, LinExpr};
use ingleton::ingen::{
    classify_quad, count_delta, exprs, format_inequality_list, gen_delta, gen_elemental,
    parse_inequality_list, GenBudget,
};

use crate::report::{emit, Report};
use crate::{Command, GlobalOpts, SampleOpts, WitnessKind};

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn mode(sample: &SampleOpts) -> ScanMode {
    match sample.samples {
        Some(samples) => ScanMode::Sampled {
            samples,
            seed: sample.seed,
        },
        None => ScanMode::Exhaustive,
    }
}

fn describe(mode: ScanMode) -> String {
    match mode {
        ScanMode::Exhaustive => "exhaustive".into(),
        ScanMode::Sampled { samples, seed } => format!("sampled {samples} seed {seed}"),
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Runs one command. `Ok(false)` means a verification claim failed.
pub fn run(g: &GlobalOpts, command: Command) -> Result<bool> {
    let budget = GenBudget(g.budget);
    let out = g.out.as_deref();
    match command {
        Command::Gen { n, elemental } => {
            let list = if elemental {
                gen_elemental(n)?
            } else {
                gen_delta(n, budget)?
            };
            let mut r = Report::raw();
            r.push_str(&format_inequality_list(n, &list));
            r.finish(out)?;
            Ok(true)
        }
        Command::Count { n } => {
            let mut r = Report::raw();
            r.line(count_delta(n));
            r.finish(out)?;
            Ok(true)
        }
        Command::Classify { n, quad } => {
            let q: IngletonQuad = quad.parse()?;
            q.check(n)?;
            let mut r = Report::raw();
            r.line(classify_quad(n, &q)?);
            r.finish(out)?;
            Ok(true)
        }
        Command::Implies {
            n,
            target,
            gens,
            cone,
        } => {
            let target = LinExpr::parse(n, &target)?;
            let list = match gens {
                Some(path) => {
                    let (m, list) = parse_inequality_list(&read(&path)?)?;
                    if m != n {
                        bail!("{} holds inequalities for n={m}, not n={n}", path.display());
                    }
                    list
                }
                None => match cone.map(Cone::from).unwrap_or(Cone::Gamma) {
                    Cone::Gamma => gen_elemental(n)?,
                    Cone::GammaIn => gen_delta(n, budget)?,
                },
            };
            let mut r = Report::new("implies", Some(n));
            r.meta("generators", list.len());
            match decide(&target, &exprs(&list))? {
                Implication::Implied(c) => {
                    r.line("implied");
                    r.line(format_certificate_record("target", &c)?);
                }
                Implication::Separated(w) => {
                    r.line("not-implied");
                    r.line(format_witness_record("target", &w)?);
                }
            }
            r.finish(out)?;
            Ok(true)
        }
        Command::CheckTheorem1 {
            n,
            sample,
            emit_certificates,
        } => {
            let mode = mode(&sample);
            let rep = check_theorem1(n, mode)?;
            let mut r = Report::new("check-theorem1", Some(n));
            r.meta("mode", describe(mode));
            r.meta("quads", rep.quads);
            r.meta("rows", rep.rows.len());
            r.meta("implied-rows", rep.implied_count());
            r.line("quad\torbit\tcovered\timplied\tclass");
            let mut certs = Vec::new();
            let mut wits = Vec::new();
            for row in &rep.rows {
                r.line(format!(
                    "{}\t{}\t{}\t{}\t{}",
                    row.quad,
                    row.orbit_size,
                    row.covered,
                    row.implied(),
                    row.class
                ));
                let id = row.quad.to_string();
                match &row.proof {
                    Implication::Implied(c) => certs.push(format_certificate_record(&id, c)?),
                    Implication::Separated(w) => wits.push(format_witness_record(&id, w)?),
                }
            }
            let cex = rep.counterexamples().count();
            let mism = rep.class_mismatches().count();
            r.line(format!("counterexamples {cex}"));
            r.line(format!("classification-mismatches {mism}"));
            r.line(verdict(rep.passed()));
            if let Some(dir) = emit_certificates {
                emit(&dir, &format!("theorem1-n{n}.cert"), &certs)?;
                emit(&dir, &format!("theorem1-n{n}.witness"), &wits)?;
            }
            r.finish(out)?;
            Ok(rep.passed())
        }
        Command::CheckCompleteness {
            n,
            sample,
            emit_certificates,
        } => {
            let mode = mode(&sample);
            let rep = check_completeness(n, mode, budget)?;
            let mut r = Report::new("check-completeness", Some(n));
            r.meta("mode", describe(mode));
            r.meta("delta", rep.delta_size);
            r.meta("quads", rep.quads);
            r.meta("rows", rep.rows.len());
            let mut certs = Vec::new();
            for row in &rep.rows {
                if let Some(c) = &row.certificate {
                    certs.push(format_certificate_record(&row.quad.to_string(), c)?);
                }
            }
            let failures: Vec<IngletonQuad> = rep.failures().collect();
            for q in &failures {
                r.line(format!("uncertified\t{q}"));
            }
            r.line(format!("certified {}/{}", rep.certified, rep.quads));
            r.line(verdict(rep.passed()));
            if let Some(dir) = emit_certificates {
                emit(&dir, &format!("completeness-n{n}.cert"), &certs)?;
            }
            r.finish(out)?;
            Ok(rep.passed())
        }
        Command::CheckMinimality {
            n,
            long,
            emit_certificates,
        } => {
            let rep = check_minimality(n, long, budget)?;
            let mut r = Report::new("check-minimality", Some(n));
            r.meta("delta", rep.rows.len());
            r.line("index\tkind\tpayload\tstatus\twitness");
            let mut records = Vec::new();
            for row in &rep.rows {
                let id = row.index.to_string();
                let head = format!(
                    "{}\t{}\t{}",
                    row.index,
                    row.inequality.kind().tag(),
                    row.inequality.shape().payload_text()
                );
                match &row.outcome {
                    MinimalityOutcome::NonRedundant(w) => {
                        r.line(format!("{head}\tnon-redundant\t{}", w.point));
                        records.push(format_witness_record(&id, w)?);
                    }
                    MinimalityOutcome::Redundant(c) => {
                        r.line(format!("{head}\tredundant\t{c}"));
                        records.push(format_certificate_record(&id, c)?);
                    }
                }
            }
            r.line(format!(
                "non-redundant {}/{}",
                rep.witnesses(),
                rep.rows.len()
            ));
            r.line(verdict(rep.passed()));
            if let Some(dir) = emit_certificates {
                emit(&dir, &format!("minimality-n{n}.witness"), &records)?;
            }
            r.finish(out)?;
            Ok(rep.passed())
        }
        Command::Witness { n, kind } => {
            let h = match kind {
                WitnessKind::Fulldim => witness_fulldim(n)?,
                WitnessKind::Modular => witness_modular(n)?,
                WitnessKind::Violator => find_ingleton_violator(n)?,
            };
            let mut r = Report::raw();
            r.line(h);
            r.finish(out)?;
            Ok(true)
        }
        Command::Membership { n, point, cone } => {
            let h = EntropyVector::parse(n, &point)?;
            let cone = Cone::from(cone);
            let res = membership(&h, cone, budget)?;
            let mut r = Report::new("membership", Some(n));
            r.meta("cone", cone.name());
            r.line(format!("member {}", res.member));
            if let Some(v) = &res.violated {
                r.line(format!("violated {v}"));
            }
            r.finish(out)?;
            Ok(true)
        }
        Command::Bound {
            problem,
            network,
            cone,
        } => {
            let p = match (problem, network) {
                (Some(path), _) => {
                    let mut p = parse_problem(&read(&path)?)?;
                    if let Some(c) = cone {
                        p.cone = c.into();
                    }
                    p
                }
                (None, Some(path)) => compile_network(
                    &parse_network(&read(&path)?)?,
                    cone.map(Cone::from).unwrap_or(Cone::Gamma),
                )?,
                (None, None) => bail!("need --problem or --network"),
            };
            let outcome = solve_bound(&p, budget)?;
            let mut r = Report::new("bound", Some(p.n));
            r.meta("cone", p.cone.name());
            r.meta("constraints", p.constraints.len());
            r.push_str(&format_outcome(&outcome));
            r.finish(out)?;
            Ok(true)
        }
    }
}
