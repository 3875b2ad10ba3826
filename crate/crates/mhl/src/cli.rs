//! Command-line front end: argument parsing and dispatch.

use std::fmt::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use mhl_core::lab::{self, ClassId, ClassPoset};
use mhl_core::{solver, ElementSet, ExchangeDigraph, HallCertificate};
use serde_json::json;

use crate::dot;
use crate::error::InputError;
use crate::fixtures;
use crate::generate::{generate_instance, Family};
use crate::instance::{read_instance, Instance};
use crate::report::{Report, Verdict};
use crate::verify::checks::{self, Checker, Pair};
use crate::verify::oracle::RankTable;
use crate::verify::{run_suite, SuiteConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Maximum common independent set with a min-max certificate.
    Intersect,
    /// Matchability verdict with a base or a blocking set.
    Matchable,
    /// First set violating Hall's condition, if any.
    Hall,
    /// Classes of the preorder on common independent sets.
    Classes,
    /// W, S and G for a maximal directed set of classes.
    Witnesses,
    /// All stable sets and their merge.
    Stable,
    /// A maximal negligible set.
    Negligible,
    /// Exhaustive checks on a seeded corpus.
    Verify,
    /// Print a seeded random instance.
    Gen,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Intersect => "intersect",
            Command::Matchable => "matchable",
            Command::Hall => "hall",
            Command::Classes => "classes",
            Command::Witnesses => "witnesses",
            Command::Stable => "stable",
            Command::Negligible => "negligible",
            Command::Verify => "verify",
            Command::Gen => "gen",
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "mhl", version, about = "Matroid intersection and matroidal Hall checks on finite instances")]
pub struct Cli {
    #[arg(value_enum)]
    pub command: Command,
    /// Instance file, or the name of a built-in fixture (P3MATCH, STAR2, PAIR-U).
    pub file: Option<String>,
    /// Write a Graphviz rendering (intersect: final exchange digraph;
    /// classes: Hasse diagram).
    #[arg(long, value_name = "OUT")]
    pub dot: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Corpus size for `verify`.
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    /// Largest ground size in the `verify` corpus; exact ground size for `gen`.
    #[arg(long, value_name = "G", default_value_t = 6)]
    pub max_ground: usize,
    /// Instance family for `gen`.
    #[arg(long, value_enum, default_value = "mixed")]
    pub family: Family,
    /// Maximal class id for `witnesses` (default: least representative).
    #[arg(long)]
    pub class: Option<usize>,
    /// Print the JSON report instead of text.
    #[arg(long)]
    pub json: bool,
}

/// Result of one command: the report plus its human-readable rendering.
pub struct Outcome {
    pub report: Report,
    pub text: String,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        self.report.verdict.exit_code()
    }
}

pub fn load(name: &str) -> Result<Instance, InputError> {
    match fixtures::by_name(name) {
        Some(file) => file.resolve(),
        None => read_instance(std::path::Path::new(name)),
    }
}

/// Library errors caused by oversized input are input errors; anything else
/// is reported as a property violation.
fn lib<T>(r: mhl_core::Result<T>) -> Result<Result<T, mhl_core::Error>, InputError> {
    match r {
        Err(e @ (mhl_core::Error::Capacity { .. } | mhl_core::Error::GroundTooLarge { .. })) => {
            Err(InputError::Usage(e.to_string()))
        }
        other => Ok(other),
    }
}

fn violated(command: &str, instance: &str, e: mhl_core::Error) -> Outcome {
    Outcome {
        report: Report::new(command, instance, Verdict::PropertyViolated, json!({ "error": e.to_string() })),
        text: format!("property violation: {e}\n"),
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, InputError> {
    let command = cli.command.name();
    if cli.dot.is_some() && !matches!(cli.command, Command::Intersect | Command::Classes) {
        return Err(InputError::Usage(format!("--dot is not supported by {command}")));
    }
    match cli.command {
        Command::Verify => return Ok(verify(cli)),
        Command::Gen => return gen(cli),
        _ => {}
    }
    let name = cli
        .file
        .as_deref()
        .ok_or_else(|| InputError::Usage(format!("{command} needs an instance FILE")))?;
    let inst = load(name)?;
    let outcome = match cli.command {
        Command::Intersect => intersect(cli, name, &inst)?,
        Command::Matchable => matchable(name, &inst)?,
        Command::Hall => hall(name, &inst)?,
        Command::Classes => classes(cli, name, &inst)?,
        Command::Witnesses => witnesses(cli, name, &inst)?,
        Command::Stable => stable(name, &inst)?,
        Command::Negligible => negligible(name, &inst)?,
        Command::Verify | Command::Gen => unreachable!(),
    };
    Ok(outcome)
}

fn write_dot(cli: &Cli, text: &str) -> Result<(), InputError> {
    if let Some(path) = &cli.dot {
        std::fs::write(path, text).map_err(|source| InputError::Io {
            path: path.clone(),
            source,
        })?;
    }
    Ok(())
}

fn intersect(cli: &Cli, name: &str, inst: &Instance) -> Result<Outcome, InputError> {
    let run = match lib(solver::run_intersection(&inst.m, &inst.n))? {
        Ok(run) => run,
        Err(e) => return Ok(violated("intersect", name, e)),
    };
    let cut = run.reachable;
    let ground = inst.m.ground();
    let (rm, rn) = (inst.m.rank(cut).unwrap(), inst.n.rank(ground - cut).unwrap());
    if cli.dot.is_some() {
        let d = ExchangeDigraph::build(&inst.m, &inst.n, run.set).expect("solver output is common independent");
        write_dot(cli, &dot::exchange_digraph_dot(inst, &d))?;
    }
    let text = format!(
        "{}\nsize {}\ncut X = {}: r_M(X) + r_N(E\\X) = {rm} + {rn}\niterations {}\n",
        inst.fmt_set(run.set),
        run.set.len(),
        inst.fmt_set(cut),
        run.iterations()
    );
    let certificate = json!({
        "set": run.set,
        "size": run.set.len(),
        "cut": cut,
        "rank_m_cut": rm,
        "rank_n_complement": rn,
    });
    let report = Report::new("intersect", name, Verdict::Ok, certificate)
        .counter("iterations", run.iterations() as u64)
        .counter("ground_size", inst.ground_size() as u64);
    Ok(Outcome { report, text })
}

fn matchable(name: &str, inst: &Instance) -> Result<Outcome, InputError> {
    let cert = match lib(solver::is_matchable(&inst.m, &inst.n))? {
        Ok(c) => c,
        Err(e) => return Ok(violated("matchable", name, e)),
    };
    let (verdict, text) = match &cert {
        HallCertificate::Matchable { base } => (Verdict::Matchable, format!("matchable: base {}\n", inst.fmt_set(*base))),
        HallCertificate::Blocked {
            cut,
            rank_m,
            rank_n_dot,
        } => (
            Verdict::Blocked,
            format!(
                "blocked: X = {}, r_M(X) = {rank_m} < r_N.X(X) = {rank_n_dot}\n",
                inst.fmt_set(*cut)
            ),
        ),
    };
    let certificate = serde_json::to_value(cert).expect("certificate serializes");
    Ok(Outcome {
        report: Report::new("matchable", name, verdict, certificate),
        text,
    })
}

fn hall(name: &str, inst: &Instance) -> Result<Outcome, InputError> {
    let found = match lib(solver::check_hall(&inst.m, &inst.n))? {
        Ok(f) => f,
        Err(e) => return Ok(violated("hall", name, e)),
    };
    Ok(match found {
        None => Outcome {
            report: Report::new("hall", name, Verdict::HallHolds, json!({ "violator": null })),
            text: "Hall's condition holds\n".into(),
        },
        Some(x) => {
            let (rm, rn) = (inst.m.rank(x).unwrap(), solver::dot_rank(&inst.n, x));
            Outcome {
                report: Report::new(
                    "hall",
                    name,
                    Verdict::HallViolated,
                    json!({ "violator": x, "rank_m": rm, "rank_n_dot": rn }),
                ),
                text: format!(
                    "violating X={}: r_M(X) = {rm} < r_N.X(X) = {rn}\n",
                    inst.fmt_set(x)
                ),
            }
        }
    })
}

fn poset(inst: &Instance) -> Result<Result<ClassPoset, mhl_core::Error>, InputError> {
    lib(ClassPoset::build(&inst.m, &inst.n))
}

fn classes(cli: &Cli, name: &str, inst: &Instance) -> Result<Outcome, InputError> {
    let poset = match poset(inst)? {
        Ok(p) => p,
        Err(e) => return Ok(violated("classes", name, e)),
    };
    write_dot(cli, &dot::class_poset_dot(inst, &poset))?;
    let maximal = poset.maximal();
    let mut text = String::new();
    let mut listed = Vec::new();
    for id in poset.ids() {
        let class = poset.class(id);
        let mark = if maximal.contains(&id) { " maximal" } else { "" };
        writeln!(
            text,
            "class {}: [{}] {} members, span_M {}, span_N {}{mark}",
            id.0,
            inst.fmt_set(class.representative),
            class.members.len(),
            inst.fmt_set(class.fingerprint.m_span),
            inst.fmt_set(class.fingerprint.n_span),
        )
        .unwrap();
        listed.push(json!({
            "id": id,
            "representative": class.representative,
            "members": class.members,
            "m_span": class.fingerprint.m_span,
            "n_span": class.fingerprint.n_span,
            "maximal": maximal.contains(&id),
        }));
    }
    let covers: Vec<(ClassId, ClassId)> = poset.covers();
    for (a, b) in &covers {
        writeln!(text, "cover {} < {}", a.0, b.0).unwrap();
    }
    let members: usize = poset.classes().iter().map(|c| c.members.len()).sum();
    let report = Report::new("classes", name, Verdict::Ok, json!({ "classes": listed, "covers": covers }))
        .counter("classes", poset.len() as u64)
        .counter("common_independent_sets", members as u64);
    Ok(Outcome { report, text })
}

fn witnesses(cli: &Cli, name: &str, inst: &Instance) -> Result<Outcome, InputError> {
    let poset = match poset(inst)? {
        Ok(p) => p,
        Err(e) => return Ok(violated("witnesses", name, e)),
    };
    let ws = match lab::compute_witnesses_in(&inst.m, &inst.n, &poset, cli.class.map(ClassId)) {
        Ok(ws) => ws,
        Err(mhl_core::Error::InvalidClass(c)) => {
            return Err(InputError::Usage(format!("class {c} is not a maximal class")))
        }
        Err(e) => return Ok(violated("witnesses", name, e)),
    };
    // Soundness of the structures, checked for every maximal class.
    let (tm, tn) = (RankTable::new(&inst.m), RankTable::new(&inst.n));
    let pair = Pair {
        m: &inst.m,
        n: &inst.n,
        tm: &tm,
        tn: &tn,
    };
    let mut checker = Checker::default();
    let hall = solver::check_hall(&inst.m, &inst.n).unwrap().is_none();
    checks::witnesses(&mut checker, &pair, &poset, hall);

    let mut text = String::new();
    let d: Vec<String> = ws
        .directed_set
        .iter()
        .map(|&c| format!("[{}]", inst.fmt_set(poset.representative(c))))
        .collect();
    writeln!(text, "directed set (down-set of class {}): {}", ws.top.0, d.join(" ")).unwrap();
    writeln!(text, "span_M(D) = {}, span_N(D) = {}", inst.fmt_set(ws.span_m), inst.fmt_set(ws.span_n)).unwrap();
    for (&x, &i) in &ws.i_x {
        writeln!(text, "I_{} = {}", inst.label(x), inst.fmt_set(i)).unwrap();
    }
    writeln!(text, "W = {}", inst.fmt_set(ws.w)).unwrap();
    writeln!(text, "S = {}", inst.fmt_set(ws.s)).unwrap();
    writeln!(text, "G = {}", inst.fmt_set(ws.g)).unwrap();
    for (&y, &(x, j)) in &ws.pairs {
        writeln!(text, "pair {}: x = {}, J = {}", inst.label(y), inst.label(x), inst.fmt_set(j)).unwrap();
    }
    let violations = checker.violations();
    match &checker.first {
        None => writeln!(text, "all soundness checks hold").unwrap(),
        Some((lemma, detail)) => writeln!(text, "{lemma} violated: {detail}").unwrap(),
    }
    let verdict = if violations == 0 {
        Verdict::PropertyHolds
    } else {
        Verdict::PropertyViolated
    };
    let i_x: std::collections::BTreeMap<String, ElementSet> =
        ws.i_x.iter().map(|(x, i)| (x.to_string(), *i)).collect();
    let pairs: std::collections::BTreeMap<String, serde_json::Value> = ws
        .pairs
        .iter()
        .map(|(y, (x, j))| (y.to_string(), json!({ "x": x, "j": j })))
        .collect();
    let certificate = json!({
        "top": ws.top,
        "directed_set": ws.directed_set,
        "span_m": ws.span_m,
        "span_n": ws.span_n,
        "i_x": i_x,
        "pairs": pairs,
        "w": ws.w,
        "s": ws.s,
        "g": ws.g,
        "first_violation": checker.first.as_ref().map(|(l, d)| json!({ "lemma": l, "detail": d })),
    });
    let mut report = Report::new("witnesses", name, verdict, certificate);
    for (k, t) in &checker.tallies {
        report = report
            .counter(&format!("{k}.checked"), t.checked)
            .counter(&format!("{k}.violations"), t.violations);
    }
    Ok(Outcome { report, text })
}

fn stable(name: &str, inst: &Instance) -> Result<Outcome, InputError> {
    let all = match lib(lab::stable_sets(&inst.m, &inst.n))? {
        Ok(a) => a,
        Err(e) => return Ok(violated("stable", name, e)),
    };
    let merged = match lab::merge_stable(&inst.m, &inst.n, &all) {
        Ok(s) => s,
        Err(e) => return Ok(violated("stable", name, e)),
    };
    let union = all.iter().fold(ElementSet::EMPTY, |u, &s| u | s);
    let holds = lab::is_stable(&inst.m, &inst.n, merged).unwrap() && union.is_subset(inst.m.closure(merged).unwrap());
    let mut text = String::new();
    for s in &all {
        writeln!(text, "stable {}", inst.fmt_set(*s)).unwrap();
    }
    writeln!(text, "merged {} (M-spans the union {})", inst.fmt_set(merged), inst.fmt_set(union)).unwrap();
    let verdict = if holds {
        Verdict::PropertyHolds
    } else {
        Verdict::PropertyViolated
    };
    let report = Report::new("stable", name, verdict, json!({ "stable_sets": all, "merged": merged }))
        .counter("stable_sets", all.len() as u64);
    Ok(Outcome { report, text })
}

fn negligible(name: &str, inst: &Instance) -> Result<Outcome, InputError> {
    let g = match lib(lab::maximal_negligible(&inst.m, &inst.n))? {
        Ok(g) => g,
        Err(e) => return Ok(violated("negligible", name, e)),
    };
    let witness = lab::negligible_witness(&inst.m, &inst.n, g);
    let text = format!(
        "maximal negligible G = {}\nwitness T = {}\n",
        inst.fmt_set(g),
        witness.map(|t| inst.fmt_set(t)).unwrap_or_else(|| "none".into())
    );
    let verdict = if witness.is_some() {
        Verdict::Ok
    } else {
        Verdict::PropertyViolated
    };
    Ok(Outcome {
        report: Report::new("negligible", name, verdict, json!({ "g": g, "witness": witness })),
        text,
    })
}

fn verify(cli: &Cli) -> Outcome {
    let config = SuiteConfig {
        seed: cli.seed,
        count: cli.count,
        max_ground: cli.max_ground.min(crate::generate::MAX_GENERATED_GROUND),
    };
    let suite = run_suite(config);
    let mut text = format!(
        "verify seed {} count {} max-ground {}\n",
        config.seed, config.count, config.max_ground
    );
    let mut report = Report::new(
        "verify",
        &format!("corpus(seed={}, count={}, max_ground={})", config.seed, config.count, config.max_ground),
        if suite.passed() {
            Verdict::PropertyHolds
        } else {
            Verdict::PropertyViolated
        },
        serde_json::Value::Null,
    );
    for (lemma, t) in &suite.lemmas {
        let status = if t.violations == 0 { "pass" } else { "FAIL" };
        writeln!(text, "{status} {lemma}: {} checked, {} violations", t.checked, t.violations).unwrap();
        report = report
            .counter(&format!("{lemma}.checked"), t.checked)
            .counter(&format!("{lemma}.violations"), t.violations);
    }
    if let Some(cx) = &suite.first_counterexample {
        writeln!(text, "first counterexample ({}, instance {}): {}", cx.lemma, cx.instance_index, cx.detail).unwrap();
        writeln!(text, "{}", cx.instance.to_json()).unwrap();
    }
    report.certificate = serde_json::to_value(&suite).expect("suite report serializes");
    Outcome { report, text }
}

fn gen(cli: &Cli) -> Result<Outcome, InputError> {
    let file = generate_instance(cli.seed, cli.family, cli.max_ground)?;
    let text = format!("{}\n", file.to_json());
    let report = Report::new(
        "gen",
        &format!("seed={} family={:?} ground={}", cli.seed, cli.family, cli.max_ground),
        Verdict::Ok,
        serde_json::to_value(&file).expect("instance serializes"),
    );
    Ok(Outcome { report, text })
}

/// Report for a failed invocation.
pub fn input_error_report(cli: &Cli, e: &InputError) -> Report {
    Report::new(
        cli.command.name(),
        cli.file.as_deref().unwrap_or(""),
        Verdict::InputError,
        json!({ "error": e.to_string() }),
    )
}
