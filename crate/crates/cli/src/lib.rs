//! Problem files, command dispatch and JSON result documents for `fthresh`.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use fthresh_core::oracle::{convergence_table, nu, NuQuery, OracleConfig, BUDGET_ENV};
use fthresh_core::rational::{format_rational, parse_rational};
use fthresh_core::thresholds::{
    f_threshold, f_threshold_candidates, fpt, jumping_coefficients, regularity_probe,
    test_ideal_generators, TestIdealOptions,
};
use fthresh_core::{DualPair, Error, IVec, MonomialIdeal, Method, QVector, ThresholdValue};
use serde::Deserialize;
use serde_json::{json, Value};

#[derive(Debug, Parser)]
#[command(name = "fthresh", version, about = "Exact F-thresholds of monomial ideals on toric rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Cells,
    Candidates,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rays of σ and of the dual cone σ^∨.
    Dual { problem: PathBuf },
    /// Hilbert basis of σ^∨ ∩ M.
    Hilbert { problem: PathBuf },
    /// The point ω with ⟨ω, v⟩ = 1 on every ray of σ, and its index.
    Gorenstein { problem: PathBuf },
    /// F-pure threshold c(a).
    Fpt {
        problem: PathBuf,
        #[arg(long)]
        ideal: String,
    },
    /// F-threshold c^J(a).
    Fthreshold {
        problem: PathBuf,
        #[arg(long)]
        ideal: String,
        #[arg(long = "with", default_value = "m")]
        with: String,
        #[arg(long, value_enum, default_value_t = Algorithm::Cells)]
        method: Algorithm,
    },
    /// Generators of the test ideal τ(a^c).
    Testideal {
        problem: PathBuf,
        #[arg(long)]
        ideal: String,
        /// The exponent c as "num/den".
        #[arg(long)]
        exponent: String,
    },
    /// The first F-jumping coefficients and their test ideals.
    Jumping {
        problem: PathBuf,
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value_t = 3)]
        count: usize,
    },
    /// ν_a^J(p^e) by brute force.
    Nu {
        problem: PathBuf,
        #[arg(long)]
        ideal: String,
        #[arg(long = "with", default_value = "m")]
        with: String,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        e: Option<u32>,
    },
    /// ν(p^e)/p^e for e = 1..e_max next to c^J(a).
    Report {
        problem: PathBuf,
        #[arg(long)]
        ideal: String,
        #[arg(long = "with", default_value = "m")]
        with: String,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long = "e-max")]
        e_max: Option<u32>,
        /// Also write the table as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Compares c(a) with c^m(a) on a simplicial cone.
    Regularity {
        problem: PathBuf,
        #[arg(long)]
        ideal: String,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub cone: ConeSpec,
    #[serde(default)]
    pub ideals: BTreeMap<String, IdealSpec>,
    pub p: Option<u64>,
    pub e_max: Option<u32>,
    pub budget: Option<usize>,
    pub max_doublings: Option<u32>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeSpec {
    pub rays: Vec<IVec>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealSpec {
    pub generators: Vec<IVec>,
}

/// A validated problem: the cone and every named ideal.
#[derive(Debug)]
pub struct Problem {
    pub context: Arc<DualPair>,
    pub ideals: BTreeMap<String, MonomialIdeal>,
    pub file: ProblemFile,
}

impl Problem {
    pub fn parse(text: &str) -> anyhow::Result<Problem> {
        let file: ProblemFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let context = Arc::new(DualPair::new(&file.cone.rays).context("cone.rays")?);
        let mut ideals = BTreeMap::new();
        for (name, spec) in &file.ideals {
            let i = MonomialIdeal::new(&context, spec.generators.clone())
                .with_context(|| format!("ideals.{name}.generators"))?;
            ideals.insert(name.clone(), i);
        }
        Ok(Problem {
            context,
            ideals,
            file,
        })
    }

    pub fn load(path: &Path) -> anyhow::Result<Problem> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        Problem::parse(&text)
    }

    /// A named ideal; `m` is the maximal ideal unless the file defines it.
    pub fn ideal(&self, name: &str) -> anyhow::Result<MonomialIdeal> {
        match self.ideals.get(name) {
            Some(i) => Ok(i.clone()),
            None if name == "m" => Ok(MonomialIdeal::maximal(&self.context)),
            None => anyhow::bail!("unknown ideal {name:?}"),
        }
    }

    pub fn oracle_config(&self) -> OracleConfig {
        let mut c = OracleConfig::default();
        if let Some(b) = self.file.budget {
            c.budget = b;
        }
        if std::env::var_os(BUDGET_ENV).is_some() {
            c.budget = OracleConfig::from_env().budget;
        }
        c
    }

    pub fn test_ideal_options(&self) -> TestIdealOptions {
        let mut o = TestIdealOptions::default();
        if let Some(d) = self.file.max_doublings {
            o.max_doublings = d;
        }
        o
    }
}

/// A finished command: the JSON document and the process exit status.
pub struct Response {
    pub document: Value,
    pub exit_code: i32,
}

pub fn rationals(v: &QVector) -> Value {
    json!(v.to_strings())
}

fn threshold(t: &ThresholdValue) -> Value {
    json!({
        "value": format_rational(&t.value),
        "witness": rationals(&t.witness),
        "witness_display": t.witness.to_string(),
        "method": match t.method {
            Method::Cells => "cells",
            Method::Candidates => "candidates",
            Method::Lp => "lp",
        },
    })
}

fn generators(i: &MonomialIdeal) -> Value {
    json!(i.generators())
}

fn is_budget(e: &anyhow::Error) -> bool {
    matches!(
        e.downcast_ref::<Error>(),
        Some(
            Error::OracleBudgetExceeded { .. }
                | Error::EnumerationBoundExceeded { .. }
                | Error::FrobeniusPowerTooLarge { .. }
        )
    )
}

fn error_document(echo: Value, e: &anyhow::Error) -> Response {
    let kind = e
        .chain()
        .find_map(|c| c.downcast_ref::<Error>())
        .map(|c| c.to_string().split(':').next().unwrap_or("Error").to_string())
        .unwrap_or_else(|| "Error".into());
    let mut document = json!({
        "command": echo,
        "error": { "kind": kind, "message": format!("{e:#}") },
    });
    if let Some(Error::EnumerationBoundExceeded { partial, doublings }) = e.downcast_ref::<Error>() {
        document["partial"] = json!({ "generators": partial, "doublings": doublings });
    }
    Response {
        document,
        exit_code: if is_budget(e) { 2 } else { 1 },
    }
}

fn echo(cmd: &Command) -> Value {
    match cmd {
        Command::Dual { problem } => json!({"name": "dual", "problem": problem}),
        Command::Hilbert { problem } => json!({"name": "hilbert", "problem": problem}),
        Command::Gorenstein { problem } => json!({"name": "gorenstein", "problem": problem}),
        Command::Fpt { problem, ideal } => json!({"name": "fpt", "problem": problem, "ideal": ideal}),
        Command::Fthreshold { problem, ideal, with, method } => json!({
            "name": "fthreshold", "problem": problem, "ideal": ideal, "with": with,
            "method": if *method == Algorithm::Cells { "cells" } else { "candidates" },
        }),
        Command::Testideal { problem, ideal, exponent } => json!({
            "name": "testideal", "problem": problem, "ideal": ideal, "exponent": exponent,
        }),
        Command::Jumping { problem, ideal, count } => json!({
            "name": "jumping", "problem": problem, "ideal": ideal, "count": count,
        }),
        Command::Nu { problem, ideal, with, p, e } => json!({
            "name": "nu", "problem": problem, "ideal": ideal, "with": with, "p": p, "e": e,
        }),
        Command::Report { problem, ideal, with, p, e_max, csv } => json!({
            "name": "report", "problem": problem, "ideal": ideal, "with": with,
            "p": p, "e_max": e_max, "csv": csv,
        }),
        Command::Regularity { problem, ideal } => json!({
            "name": "regularity", "problem": problem, "ideal": ideal,
        }),
    }
}

pub fn run(cli: &Cli) -> Response {
    let echo = echo(&cli.command);
    match dispatch(&cli.command) {
        Ok((result, warnings, exit_code)) => Response {
            document: json!({ "command": echo, "result": result, "warnings": warnings }),
            exit_code,
        },
        Err(e) => error_document(echo, &e),
    }
}

type Outcome = anyhow::Result<(Value, Vec<String>, i32)>;

fn dispatch(cmd: &Command) -> Outcome {
    let ok = |v: Value| Ok((v, Vec::new(), 0));
    match cmd {
        Command::Dual { problem } => {
            let p = Problem::load(problem)?;
            let warnings = p
                .context
                .dropped_rays()
                .iter()
                .map(|r| format!("ray {r:?} is not extreme and was dropped"))
                .collect();
            Ok((
                json!({
                    "sigma_rays": p.context.sigma_rays(),
                    "dual_rays": p.context.sigma_dual().rays(),
                    "simplicial": p.context.sigma().is_simplicial(),
                    "smooth": p.context.sigma().is_smooth(),
                }),
                warnings,
                0,
            ))
        }
        Command::Hilbert { problem } => {
            let p = Problem::load(problem)?;
            ok(json!({ "hilbert_basis": p.context.hilbert_basis() }))
        }
        Command::Gorenstein { problem } => {
            let p = Problem::load(problem)?;
            let g = p.context.gorenstein_data();
            let mut warnings = Vec::new();
            if !g.unique {
                warnings.push("the Gorenstein point is not unique".into());
            }
            Ok((
                json!({
                    "omega": g.omega.as_ref().map(rationals),
                    "omega_display": g.omega.as_ref().map(|w| w.to_string()),
                    "index": g.index,
                    "gorenstein": g.is_gorenstein(),
                }),
                warnings,
                0,
            ))
        }
        Command::Fpt { problem, ideal } => {
            let p = Problem::load(problem)?;
            ok(threshold(&fpt(&p.ideal(ideal)?)?))
        }
        Command::Fthreshold {
            problem,
            ideal,
            with,
            method,
        } => {
            let p = Problem::load(problem)?;
            let (a, j) = (p.ideal(ideal)?, p.ideal(with)?);
            let t = match method {
                Algorithm::Cells => f_threshold(&a, &j)?,
                Algorithm::Candidates => f_threshold_candidates(&a, &j)?,
            };
            ok(threshold(&t))
        }
        Command::Testideal {
            problem,
            ideal,
            exponent,
        } => {
            let p = Problem::load(problem)?;
            let a = p.ideal(ideal)?;
            let c = parse_rational(exponent).context("--exponent")?;
            let tau = test_ideal_generators(&a, &c, &p.test_ideal_options())?;
            ok(json!({ "exponent": format_rational(&c), "generators": generators(&tau) }))
        }
        Command::Jumping {
            problem,
            ideal,
            count,
        } => {
            let p = Problem::load(problem)?;
            let a = p.ideal(ideal)?;
            let chain = jumping_coefficients(&a, *count, &p.test_ideal_options())?;
            let steps: Vec<Value> = chain
                .steps
                .iter()
                .map(|s| {
                    let mut v = threshold(&s.value);
                    v["from_generator"] = json!(s.generator);
                    v["test_ideal"] = generators(&s.ideal);
                    v
                })
                .collect();
            let coefficients: Vec<String> = chain.coefficients().iter().map(format_rational).collect();
            ok(json!({ "coefficients": coefficients, "steps": steps }))
        }
        Command::Nu {
            problem,
            ideal,
            with,
            p: prime,
            e,
        } => {
            let p = Problem::load(problem)?;
            let prime = prime.or(p.file.p).context("--p is required (or \"p\" in the file)")?;
            let e = e.unwrap_or(1);
            let q = NuQuery::new(&p.ideal(ideal)?, &p.ideal(with)?, prime, e)?;
            let r = nu(&q, &p.oracle_config())?;
            ok(json!({
                "p": prime, "e": e, "q": q.q(), "nu": r.nu, "witness": r.witness, "states": r.states,
            }))
        }
        Command::Report {
            problem,
            ideal,
            with,
            p: prime,
            e_max,
            csv,
        } => {
            let p = Problem::load(problem)?;
            let prime = prime.or(p.file.p).context("--p is required (or \"p\" in the file)")?;
            let e_max = e_max.or(p.file.e_max).unwrap_or(4);
            let t = convergence_table(&p.ideal(ideal)?, &p.ideal(with)?, prime, e_max, &p.oracle_config())?;
            let limit = format_rational(&t.limit.value);
            let mut text = String::from("e,q,nu,ratio,limit\n");
            let mut rows = Vec::new();
            let mut warnings = Vec::new();
            for r in &t.rows {
                let nu = r.nu.as_ref().map(|n| n.nu);
                let ratio = r.ratio().map(|x| format_rational(&x));
                text.push_str(&format!(
                    "{},{},{},{},{}\n",
                    r.e,
                    r.q,
                    nu.map(|n| n.to_string()).unwrap_or_default(),
                    ratio.clone().unwrap_or_default(),
                    limit
                ));
                if nu.is_none() {
                    warnings.push(format!("row e = {} (q = {}) is absent: search budget or q cap exceeded", r.e, r.q));
                }
                rows.push(json!({ "e": r.e, "q": r.q, "nu": nu, "ratio": ratio }));
            }
            if let Some(path) = csv {
                std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
            }
            let code = if t.is_complete() { 0 } else { 2 };
            Ok((
                json!({ "p": prime, "rows": rows, "limit": threshold(&t.limit), "csv": text }),
                warnings,
                code,
            ))
        }
        Command::Regularity { problem, ideal } => {
            let p = Problem::load(problem)?;
            let r = regularity_probe(&p.ideal(ideal)?)?;
            ok(json!({
                "smooth": r.smooth,
                "fpt": threshold(&r.fpt),
                "fthreshold": threshold(&r.fthreshold),
                "equal": r.equal,
            }))
        }
    }
}
