//! Command-line front end. Every command produces a JSON report (written with
//! `--out`) and a text summary; the exit status is 0 iff no violations.

use std::collections::BTreeMap;

use clap::{Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::bialgebra::{bialgebra_coequalizer, bialgebra_coproduct, check_bialgebra, check_bialgebra_morphism, induce_bialgebra, PresentedPoissonBialgebra};
use crate::coalgebra::{load_spec, load_spec_unvalidated, spec_from_value, validate_coalgebra, CoalgebraSpec};
use crate::colimits::{poisson_coequalizer, MorphismTable};
use crate::error::{Error, Result};
use crate::expr::eval_str;
use crate::hopf::{free_poisson_hopf, verify_antipode, TruncatedHopf};
use crate::lie::lyndon_words;
use crate::linear::format_scalar;
use crate::poisson::{graded_dimension, Ambient};
use crate::tensor::render2;
use crate::verify::{
    check_antipode_antimorphism, check_coassociativity, check_counit, check_jacobi, check_leibniz,
    check_poisson_compat, CoalgebraStructure, Report,
};

#[derive(Parser, Debug)]
#[command(name = "poisson-hopf", version, about = "Exact free Poisson bialgebra and Hopf algebra computations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the JSON report here.
    #[arg(long, global = true)]
    pub out: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the coalgebra laws of a spec file.
    Validate { spec: String },
    /// Free Poisson bialgebra on a coalgebra, with every bialgebra law checked.
    Induce {
        spec: String,
        #[arg(long)]
        degree: usize,
    },
    /// Evaluate an expression in the free Poisson algebra on a coalgebra.
    Eval {
        spec: String,
        expr: String,
        #[arg(long)]
        degree: usize,
    },
    /// Coproduct of two free Poisson bialgebras.
    Coproduct {
        spec_a: String,
        spec_b: String,
        #[arg(long)]
        degree: usize,
    },
    /// Coequalizer of two maps into the free Poisson algebra on a coalgebra.
    Coequalize {
        spec: String,
        #[arg(long = "map", num_args = 1, required = true)]
        maps: Vec<String>,
        #[arg(long)]
        degree: usize,
    },
    /// Free Poisson Hopf algebra on a coalgebra.
    FreeHopf {
        spec: String,
        #[arg(long)]
        stages: usize,
        #[arg(long)]
        degree: usize,
    },
    /// Run selected law checkers on the free bialgebra (or, with --stages,
    /// the free Hopf algebra) of a spec.
    Verify {
        artifact: String,
        #[arg(long, default_value = "all")]
        laws: String,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        stages: Option<usize>,
    },
    /// Graded dimensions of the free Poisson algebra on a coalgebra.
    Dims {
        spec: String,
        #[arg(long)]
        degree: usize,
    },
}

pub struct Outcome {
    pub report: Value,
    pub text: String,
    pub violations: Report,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.violations.is_clean() {
            0
        } else {
            3
        }
    }

    pub fn json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.report).expect("report serializes");
        s.push('\n');
        s
    }
}

fn outcome(mut report: Value, mut text: String, violations: Report) -> Outcome {
    let violations = violations.sorted();
    report["violations"] = serde_json::to_value(&violations.violations).expect("violations serialize");
    report["ok"] = Value::Bool(violations.is_clean());
    for v in &violations.violations {
        text.push_str(&format!("violation: {v}\n"));
    }
    text.push_str(if violations.is_clean() { "ok\n" } else { "FAILED\n" });
    Outcome {
        report,
        text,
        violations,
    }
}

fn require_degree(n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::Validation("--degree must be at least 1".into()));
    }
    Ok(n)
}

fn delta_table(b: &PresentedPoissonBialgebra) -> BTreeMap<String, String> {
    let names = b.ambient().names();
    (0..names.len())
        .map(|a| (names[a].clone(), render2(b.generator_delta(a), names)))
        .collect()
}

fn hopf_report(h: &TruncatedHopf) -> (Value, String) {
    let amb = h.ambient();
    let antipode: BTreeMap<String, Value> = h
        .antipode_table()
        .into_iter()
        .enumerate()
        .map(|(a, s)| {
            let v = s.map(|p| Value::String(amb.render(&p))).unwrap_or(Value::Null);
            (amb.names()[a].clone(), v)
        })
        .collect();
    let dims = h.filtration_dims();
    let report = json!({
        "generators": amb.names(),
        "stages": h.stages(),
        "degree": amb.truncation(),
        "filtration_dims": dims,
        "graded_dims": h.quotient().graded_dims(),
        "hopf_relations": h.hopf_relations().iter().map(|r| amb.render(r)).collect::<Vec<_>>(),
        "ideal_rank": h.quotient().ideal().rank(),
        "degenerate": h.quotient().is_degenerate(),
        "antipode": antipode,
    });
    let text = format!(
        "free Poisson Hopf algebra: {} generators, {} stages, degree {}\nfiltration dims {:?}\n",
        amb.rank(),
        h.stages(),
        amb.truncation(),
        dims
    );
    (report, text)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MapFile {
    source: Value,
    images: BTreeMap<String, String>,
}

fn load_map(path: &str, target: &PresentedPoissonBialgebra) -> Result<(PresentedPoissonBialgebra, MorphismTable)> {
    let text = std::fs::read_to_string(path)?;
    let file: MapFile = serde_json::from_str(&text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let spec = spec_from_value(file.source)?;
    let source = induce_bialgebra(&spec, target.ambient().truncation())?;
    for key in file.images.keys() {
        if !spec.basis().contains(key) {
            return Err(Error::Validation(format!("{path}: image for unknown generator `{key}`")));
        }
    }
    let mut images = Vec::new();
    for name in spec.basis() {
        let expr = file
            .images
            .get(name)
            .ok_or_else(|| Error::Validation(format!("{path}: missing image for `{name}`")))?;
        let e = eval_str(expr, target.ambient())?;
        if e.lossy() {
            return Err(Error::IllDefinedMorphism(format!("{path}: image of `{name}` exceeds the degree budget")));
        }
        images.push(e.into_terms());
    }
    let table = MorphismTable::new(source.quotient().clone(), target.quotient().clone(), images)?;
    Ok((source, table))
}

const LAWS: [&str; 6] = ["coassociativity", "counit", "poisson-compatibility", "leibniz", "jacobi", "antipode"];

fn parse_laws(laws: &str) -> Result<Vec<&'static str>> {
    if laws == "all" {
        return Ok(LAWS.to_vec());
    }
    laws.split(',')
        .map(|l| {
            let l = l.trim();
            LAWS.iter()
                .copied()
                .find(|k| *k == l)
                .ok_or_else(|| Error::Validation(format!("unknown law `{l}`; expected one of {}", LAWS.join(", "))))
        })
        .collect()
}

fn run_laws<S: CoalgebraStructure + ?Sized>(s: &S, laws: &[&str], n: usize) -> Report {
    let mut report = Report::new();
    for law in laws {
        report.merge(match *law {
            "coassociativity" => check_coassociativity(s, n),
            "counit" => check_counit(s, n),
            "poisson-compatibility" => check_poisson_compat(s, n),
            "leibniz" => check_leibniz(s, n),
            "jacobi" => check_jacobi(s, n),
            _ => Report::new(),
        });
    }
    report
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    Ok(match &cli.command {
        Command::Validate { spec } => {
            let spec = load_spec_unvalidated(spec)?;
            let violations = validate_coalgebra(&spec);
            let report = json!({"command": "validate", "basis": spec.basis()});
            outcome(report, format!("coalgebra of dimension {}\n", spec.dim()), violations)
        }
        Command::Induce { spec, degree } => {
            let n = require_degree(*degree)?;
            let b = induce_bialgebra(&load_spec(spec)?, n)?;
            let epsilon: BTreeMap<String, String> = b
                .ambient()
                .names()
                .iter()
                .enumerate()
                .map(|(a, x)| (x.clone(), format_scalar(b.generator_epsilon(a))))
                .collect();
            let report = json!({
                "command": "induce",
                "generators": b.ambient().names(),
                "degree": n,
                "graded_dims": b.quotient().graded_dims(),
                "delta": delta_table(&b),
                "epsilon": epsilon,
            });
            let text = format!(
                "free Poisson bialgebra on {} generators, degree {n}\ngraded dims {:?}\n",
                b.ambient().rank(),
                b.quotient().graded_dims()
            );
            outcome(report, text, check_bialgebra(&b))
        }
        Command::Eval { spec, expr, degree } => {
            let n = require_degree(*degree)?;
            let b = induce_bialgebra(&load_spec(spec)?, n)?;
            let value = eval_str(expr, b.ambient())?;
            let amb = b.ambient();
            let delta = render2(&b.free_coproduct(value.terms()), amb.names());
            let counit = format_scalar(&b.free_counit(value.terms()));
            let report = json!({
                "command": "eval",
                "input": expr,
                "degree": n,
                "value": value.to_string(),
                "lossy": value.lossy(),
                "coproduct": delta,
                "counit": counit,
            });
            let mut text = format!("{value}\n");
            if value.lossy() {
                text.push_str("warning: terms above the degree budget were dropped\n");
            }
            outcome(report, text, Report::new())
        }
        Command::Coproduct { spec_a, spec_b, degree } => {
            let n = require_degree(*degree)?;
            let a = induce_bialgebra(&load_spec(spec_a)?, n)?;
            let b = induce_bialgebra(&load_spec(spec_b)?, n)?;
            let cp = bialgebra_coproduct(&[&a, &b], n)?;
            let obj = &cp.object;
            let report = json!({
                "command": "coproduct",
                "generators": obj.ambient().names(),
                "degree": n,
                "graded_dims": obj.quotient().graded_dims(),
                "delta": delta_table(obj),
            });
            let text = format!(
                "coproduct on {} generators, degree {n}\ngraded dims {:?}\n",
                obj.ambient().rank(),
                obj.quotient().graded_dims()
            );
            outcome(report, text, check_bialgebra(obj))
        }
        Command::Coequalize { spec, maps, degree } => {
            let n = require_degree(*degree)?;
            if maps.len() != 2 {
                return Err(Error::Validation(format!("expected exactly two --map files, got {}", maps.len())));
            }
            let target = induce_bialgebra(&load_spec(spec)?, n)?;
            let (src_f, f) = load_map(&maps[0], &target)?;
            let (src_g, g) = load_map(&maps[1], &target)?;
            if src_f.ambient() != src_g.ambient() {
                return Err(Error::IllDefinedMorphism("the two maps have different sources".into()));
            }
            let coalgebra_maps = check_bialgebra_morphism(&f, &src_f, &target).is_clean()
                && check_bialgebra_morphism(&g, &src_g, &target).is_clean();
            let mut violations = Report::new();
            let (quotient, certified) = if coalgebra_maps {
                let coeq = bialgebra_coequalizer(&f, &g, &src_f, &target)?;
                violations.merge(coeq.certificate.clone());
                violations.merge(check_bialgebra(&coeq.object));
                (coeq.object.quotient().clone(), true)
            } else {
                (poisson_coequalizer(&f, &g)?.object, false)
            };
            violations.merge(quotient.fixpoint_certificate());
            let amb = quotient.ambient();
            let report = json!({
                "command": "coequalize",
                "generators": amb.names(),
                "degree": n,
                "relations": quotient.generators().iter().map(|r| amb.render(r)).collect::<Vec<_>>(),
                "graded_dims": quotient.graded_dims(),
                "filtration_dims": quotient.filtration_dims(),
                "degenerate": quotient.is_degenerate(),
                "bialgebra_coequalizer": certified,
            });
            let mut text = format!("coequalizer graded dims {:?}\n", quotient.graded_dims());
            if quotient.is_degenerate() {
                text.push_str("warning: degenerate quotient (1 lies in the ideal)\n");
            }
            outcome(report, text, violations)
        }
        Command::FreeHopf { spec, stages, degree } => {
            let n = require_degree(*degree)?;
            let h = free_poisson_hopf(&load_spec(spec)?, *stages, n)?;
            let (mut report, text) = hopf_report(&h);
            report["command"] = json!("free-hopf");
            let mut violations = h.certificates().clone();
            violations.merge(verify_antipode(&h, 1)?);
            outcome(report, text, violations)
        }
        Command::Verify {
            artifact,
            laws,
            degree,
            stages,
        } => {
            let n = require_degree(*degree)?;
            let laws = parse_laws(laws)?;
            let spec: CoalgebraSpec = load_spec(artifact)?;
            let (violations, kind) = match stages {
                None => {
                    let b = induce_bialgebra(&spec, n)?;
                    (run_laws(&b, &laws, n), "bialgebra")
                }
                Some(m) => {
                    let h = free_poisson_hopf(&spec, *m, n)?;
                    let mut r = run_laws(&h, &laws, n);
                    if laws.contains(&"antipode") {
                        r.merge(check_antipode_antimorphism(&h, n));
                        r.merge(verify_antipode(&h, 1)?);
                    }
                    (r, "hopf")
                }
            };
            let report = json!({
                "command": "verify",
                "structure": kind,
                "degree": n,
                "stages": stages,
                "laws": laws,
            });
            let text = format!("checked {} on the free {kind}, degree {n}\n", laws.join(", "));
            outcome(report, text, violations)
        }
        Command::Dims { spec, degree } => {
            let n = require_degree(*degree)?;
            let spec = load_spec(spec)?;
            let amb = Ambient::new(spec.basis().to_vec(), n)?;
            let dim = spec.dim();
            let graded: Vec<usize> = amb.monomials().iter().map(Vec::len).collect();
            let lyndon: Vec<usize> = if dim == 0 {
                vec![0; n]
            } else {
                lyndon_words(dim, n).iter().map(Vec::len).collect()
            };
            let mut violations = Report::new();
            for (d, &g) in graded.iter().enumerate() {
                let expected = (dim as u128).pow(d as u32);
                if g as u128 != expected || graded_dimension(dim, d) != expected {
                    violations.push("dimension-law", vec![format!("degree {d}")], format!("{g} ≠ {expected}"));
                }
            }
            let report = json!({
                "command": "dims",
                "generators": spec.basis(),
                "degree": n,
                "graded_dims": graded,
                "lyndon_counts": lyndon,
            });
            let text = format!("graded dims {graded:?}\nLyndon counts {lyndon:?}\n");
            outcome(report, text, violations)
        }
    })
}

/// Runs the command, writes `--out`, prints the summary, and returns the
/// process exit code.
pub fn main_with(cli: Cli) -> i32 {
    match execute(&cli) {
        Ok(out) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, out.json()) {
                    eprintln!("error: {e}");
                    return 1;
                }
            }
            print!("{}", out.text);
            out.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
