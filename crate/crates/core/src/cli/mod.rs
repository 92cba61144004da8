//! Command-line front end.
//!
//! [`run`] parses arguments, dispatches to the engine and returns the exit
//! code together with everything to print. Exit codes: 0 on success, 1 on a
//! negative answer (inequivalent theories, a non-extension, a family that
//! cannot be represented, a failed property), 2 on usage, parse or I/O
//! errors.

pub mod format;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::cwa::{cwa_translate, verify_cwa};
use crate::defaults::{
    enumerate_extensions, enumerate_extensions_by_subsets, equivalent, generating_defaults, is_extension, DefaultRule,
    DefaultTheory, ExtensionSet,
};
use crate::error::Error;
use crate::logic::{is_satisfiable, parse_formula, Atom, FinTheory, Formula, FormulaSet};
use crate::represent::{
    comp_defaults, construct_normal_representing, construct_representing, tree_defaults, TheoryFamily,
};
use crate::transform::{eliminate_formula, normal_prereq_free, prereq_free, represent_subfamily, to_empty_w};

use format::{load_family, load_theory, write_theory, FormatError};

#[derive(Parser, Debug)]
#[command(name = "deflog", version, about = "Propositional default logic engine")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Refuse to enumerate theories with more defaults than this.
    #[arg(long, global = true, default_value_t = 16)]
    max_defaults: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Output {
    /// Write the resulting theory here instead of standard output.
    #[arg(short = 'o', long = "output")]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the extensions of a theory.
    Extensions { file: PathBuf },
    /// Test whether Cn(f1;f2;...) is an extension.
    Check {
        file: PathBuf,
        #[arg(long)]
        theory: String,
    },
    /// Test whether two theories have the same extensions.
    Equiv { first: PathBuf, second: PathBuf },
    /// Equivalent theory with prerequisite-free defaults.
    PrereqFree {
        file: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Equivalent normal prerequisite-free theory of a normal theory.
    Normalize {
        file: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Remove the consistent extensions containing a formula.
    Eliminate {
        file: PathBuf,
        #[arg(long)]
        formula: String,
        #[command(flatten)]
        output: Output,
    },
    /// Keep only some extensions of a theory (0-based family indices).
    Subfamily {
        file: PathBuf,
        #[arg(long)]
        family: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        keep: String,
        #[command(flatten)]
        output: Output,
    },
    /// Theory whose extensions are the members of a family file.
    Represent {
        family: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Normal theory over the world of one file and the formulas of another.
    RepresentNormal {
        #[arg(long)]
        w: PathBuf,
        #[arg(long)]
        psi: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Equivalent normal theory with an empty world.
    ToEmptyW {
        file: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Closed-world translation of a normal theory.
    Cwa {
        file: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Complete-literal defaults over the given atoms with the file's world.
    Comp {
        file: PathBuf,
        #[arg(long)]
        atoms: String,
        #[command(flatten)]
        output: Output,
    },
    /// Sign-prefix tree defaults over the given atoms for the file's world.
    Tree {
        file: PathBuf,
        #[arg(long)]
        atoms: String,
        #[command(flatten)]
        output: Output,
    },
    /// Check every applicable property of the theory.
    Verify { file: PathBuf },
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn answer(yes: bool, stdout: String) -> Self {
        Outcome {
            code: if yes { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        }
    }
}

enum Failure {
    Usage(String),
    Negative(String),
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidAtom(_) | Error::Parse(_) | Error::IndexOutOfRange { .. } | Error::EmptyAtomSet => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Negative(e.to_string()),
        }
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let ctx = Context {
        json: cli.json,
        max_defaults: cli.max_defaults,
    };
    match ctx.dispatch(cli.command) {
        Ok(outcome) => outcome,
        Err(Failure::Usage(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Negative(msg)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("{msg}\n"),
        },
    }
}

struct Context {
    json: bool,
    max_defaults: usize,
}

fn parse_inline(text: &str) -> Result<Formula, Failure> {
    parse_formula(text).map_err(|e| Failure::Usage(format!("in `{text}`: {e}")))
}

fn parse_atoms(list: &str) -> Result<Vec<Atom>, Failure> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| Atom::new(s).map_err(Failure::from))
        .collect()
}

fn parse_indices(list: &str) -> Result<Vec<usize>, Failure> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| Failure::Usage(format!("invalid index `{s}`"))))
        .collect()
}

fn theory_json(dt: &DefaultTheory) -> Value {
    json!({
        "world": dt.world().iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "defaults": dt.defaults().iter().map(default_json).collect::<Vec<_>>(),
    })
}

fn default_json(d: &DefaultRule) -> Value {
    json!({
        "prereq": d.prereq.to_string(),
        "justifications": d.justifications.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "consequent": d.consequent.to_string(),
    })
}

fn generators_json(t: &FinTheory) -> Value {
    json!(t.generators().iter().map(|f| f.to_string()).collect::<Vec<_>>())
}

fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

impl Context {
    fn guard(&self, dt: &DefaultTheory) -> Result<(), Failure> {
        let n = dt.defaults().len();
        if n > self.max_defaults {
            return Err(Failure::Usage(format!(
                "theory has {n} defaults; enumeration is limited to {} (raise --max-defaults)",
                self.max_defaults
            )));
        }
        Ok(())
    }

    fn load(&self, path: &Path) -> Result<DefaultTheory, Failure> {
        Ok(load_theory(path)?)
    }

    fn extensions(&self, dt: &DefaultTheory) -> Result<ExtensionSet, Failure> {
        self.guard(dt)?;
        Ok(enumerate_extensions(dt))
    }

    fn emit_theory(
        &self,
        dt: &DefaultTheory,
        output: &Output,
        extra: Option<(&str, Value)>,
    ) -> Result<Outcome, Failure> {
        let text = write_theory(dt);
        if let Some(path) = &output.out {
            std::fs::write(path, &text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        }
        if self.json {
            let mut v = json!({ "theory": theory_json(dt) });
            if let Some((key, value)) = extra {
                v[key] = value;
            }
            return Ok(Outcome::ok(render_json(&v)));
        }
        Ok(Outcome::ok(if output.out.is_some() { String::new() } else { text }))
    }

    fn dispatch(&self, command: Command) -> Result<Outcome, Failure> {
        match command {
            Command::Extensions { file } => {
                let dt = self.load(&file)?;
                let ext = self.extensions(&dt)?;
                if self.json {
                    let members: Vec<Value> = ext.iter().map(generators_json).collect();
                    return Ok(Outcome::answer(
                        !members.is_empty(),
                        render_json(&json!({ "extensions": members })),
                    ));
                }
                let mut out = format!("{} extension{}\n", ext.len(), if ext.len() == 1 { "" } else { "s" });
                for (i, t) in ext.iter().enumerate() {
                    let _ = writeln!(out, "{}: {}", i + 1, t.generators());
                }
                Ok(Outcome::answer(!ext.is_empty(), out))
            }
            Command::Check { file, theory } => {
                let dt = self.load(&file)?;
                let generators: FormulaSet = theory
                    .split(';')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(parse_inline)
                    .collect::<Result<_, _>>()?;
                let yes = is_extension(&dt, &FinTheory::new(generators));
                let text = if self.json {
                    render_json(&json!({ "extension": yes }))
                } else if yes {
                    "extension\n".to_string()
                } else {
                    "not an extension\n".to_string()
                };
                Ok(Outcome::answer(yes, text))
            }
            Command::Equiv { first, second } => {
                let a = self.load(&first)?;
                let b = self.load(&second)?;
                self.guard(&a)?;
                self.guard(&b)?;
                let yes = equivalent(&a, &b);
                let text = if self.json {
                    render_json(&json!({ "equivalent": yes }))
                } else if yes {
                    "equivalent\n".to_string()
                } else {
                    "not equivalent\n".to_string()
                };
                Ok(Outcome::answer(yes, text))
            }
            Command::PrereqFree { file, output } => {
                let dt = self.load(&file)?;
                self.guard(&dt)?;
                self.emit_theory(&prereq_free(&dt), &output, None)
            }
            Command::Normalize { file, output } => {
                let dt = self.load(&file)?;
                self.guard(&dt)?;
                self.emit_theory(&normal_prereq_free(&dt)?, &output, None)
            }
            Command::Eliminate { file, formula, output } => {
                let dt = self.load(&file)?;
                let f = parse_inline(&formula)?;
                self.emit_theory(&eliminate_formula(&dt, &f), &output, None)
            }
            Command::Subfamily {
                file,
                family,
                keep,
                output,
            } => {
                let dt = self.load(&file)?;
                let fam = load_family(&family)?;
                let keep = parse_indices(&keep)?;
                self.guard(&dt)?;
                self.emit_theory(&represent_subfamily(&dt, &fam, &keep)?, &output, None)
            }
            Command::Represent { family, output } => {
                let fam = load_family(&family)?;
                self.emit_theory(&construct_representing(&fam)?, &output, None)
            }
            Command::RepresentNormal { w, psi, output } => {
                let w = self.load(&w)?.world().clone();
                let psi = self.load(&psi)?.world().clone();
                self.emit_theory(&construct_normal_representing(&w, &psi), &output, None)
            }
            Command::ToEmptyW { file, output } => {
                let dt = self.load(&file)?;
                self.guard(&dt)?;
                self.emit_theory(&to_empty_w(&dt)?, &output, None)
            }
            Command::Cwa { file, output } => {
                let dt = self.load(&file)?;
                self.guard(&dt)?;
                let tr = cwa_translate(&dt)?;
                let fresh: serde_json::Map<String, Value> = tr
                    .fresh_atoms
                    .iter()
                    .map(|(psi, a)| (a.to_string(), json!(psi.to_string())))
                    .collect();
                self.emit_theory(&tr.result, &output, Some(("fresh_atoms", Value::Object(fresh))))
            }
            Command::Comp { file, atoms, output } => {
                let dt = self.load(&file)?;
                let atoms = parse_atoms(&atoms)?;
                let defaults = comp_defaults(&atoms)?;
                if !is_satisfiable(dt.world()) {
                    return Err(Error::UnsatisfiableWorld.into());
                }
                let result = DefaultTheory::new(defaults, dt.world().clone());
                self.emit_theory(&result, &output, None)
            }
            Command::Tree { file, atoms, output } => {
                let dt = self.load(&file)?;
                let atoms = parse_atoms(&atoms)?;
                self.emit_theory(&tree_defaults(dt.world(), &atoms)?, &output, None)
            }
            Command::Verify { file } => {
                let dt = self.load(&file)?;
                self.guard(&dt)?;
                self.verify(&dt)
            }
        }
    }

    fn verify(&self, dt: &DefaultTheory) -> Result<Outcome, Failure> {
        let report = verify_theory(dt, self.max_defaults);
        let all_pass = report.iter().all(|c| c.status != Status::Fail);
        if self.json {
            let checks: Vec<Value> = report
                .iter()
                .map(|c| json!({ "name": c.name, "status": c.status.label(), "detail": c.detail }))
                .collect();
            return Ok(Outcome::answer(
                all_pass,
                render_json(&json!({ "checks": checks, "pass": all_pass })),
            ));
        }
        let mut out = String::new();
        for c in &report {
            let _ = write!(out, "{} {}", c.status.label(), c.name);
            if !c.detail.is_empty() {
                let _ = write!(out, " ({})", c.detail);
            }
            out.push('\n');
        }
        Ok(Outcome::answer(all_pass, out))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        }
    }

    fn of(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

fn check(name: &'static str, ok: bool) -> Check {
    Check {
        name,
        status: Status::of(ok),
        detail: String::new(),
    }
}

fn skip(name: &'static str, why: &str) -> Check {
    Check {
        name,
        status: Status::Skip,
        detail: why.to_string(),
    }
}

/// Runs every property that applies to `dt`.
pub fn verify_theory(dt: &DefaultTheory, max_defaults: usize) -> Vec<Check> {
    let ext = enumerate_extensions(dt);
    let mut out = vec![
        check("extensions-are-fixpoints", ext.iter().all(|s| is_extension(dt, s))),
        check(
            "extensions-match-subset-enumeration",
            ext.same_as(enumerate_extensions_by_subsets(dt).members()),
        ),
        check("extensions-form-antichain", ext.is_antichain()),
        check(
            "extensions-generated-by-world-and-consequents",
            ext.iter().all(|s| {
                let gd = generating_defaults(dt, s);
                let generated = dt.world().union(&gd.iter().map(|d| d.consequent.clone()).collect());
                FinTheory::new(generated) == *s
            }),
        ),
    ];

    let pf = prereq_free(dt);
    if pf.defaults().len() > max_defaults {
        out.push(skip("prereq-free-equivalent", "too many emitted defaults"));
    } else {
        out.push(check(
            "prereq-free-equivalent",
            pf.is_prerequisite_free() && enumerate_extensions(&pf).same_as(ext.members()),
        ));
    }

    let consistent: Vec<FinTheory> = ext.iter().filter(|t| !t.is_inconsistent()).cloned().collect();
    let mut eliminated = true;
    for atom in dt.atoms() {
        let v = Formula::atom(atom);
        for f in [v.clone(), Formula::not(v)] {
            let after = enumerate_extensions(&eliminate_formula(dt, &f));
            let got: Vec<FinTheory> = after.iter().filter(|t| !t.is_inconsistent()).cloned().collect();
            let want: Vec<FinTheory> = consistent.iter().filter(|t| !t.entails(&f)).cloned().collect();
            eliminated &= crate::defaults::same_theories(&got, &want);
        }
    }
    out.push(check(
        "eliminate-keeps-consistent-extensions-without-formula",
        eliminated,
    ));

    if !consistent.is_empty() && consistent.len() == ext.len() {
        let ok = TheoryFamily::new(consistent.clone())
            .and_then(|fam| construct_representing(&fam))
            .map(|rep| enumerate_extensions(&rep).same_as(ext.members()))
            .unwrap_or(false);
        out.push(check("extensions-representable-by-construction", ok));
    } else {
        out.push(skip(
            "extensions-representable-by-construction",
            "no extensions or an inconsistent one",
        ));
    }

    if !dt.is_normal() {
        for name in [
            "normal-prereq-free-equivalent",
            "empty-world-equivalent",
            "cwa-semi-equivalent",
            "normal-extensions-pairwise-inconsistent",
        ] {
            out.push(skip(name, "theory is not normal"));
        }
        return out;
    }

    out.push(match normal_prereq_free(dt) {
        Ok(hat) if hat.defaults().len() <= max_defaults => check(
            "normal-prereq-free-equivalent",
            hat.is_normal() && enumerate_extensions(&hat).same_as(ext.members()),
        ),
        Ok(_) => skip("normal-prereq-free-equivalent", "too many emitted defaults"),
        Err(_) => check("normal-prereq-free-equivalent", false),
    });

    if is_satisfiable(dt.world()) {
        out.push(match to_empty_w(dt) {
            Ok(empty) => check(
                "empty-world-equivalent",
                empty.world().is_empty() && enumerate_extensions(&empty).same_as(ext.members()),
            ),
            Err(_) => check("empty-world-equivalent", false),
        });
    } else {
        out.push(skip("empty-world-equivalent", "world is unsatisfiable"));
    }

    out.push(match cwa_translate(dt) {
        Ok(tr) if tr.result.defaults().len() <= max_defaults => check(
            "cwa-semi-equivalent",
            verify_cwa(dt, &tr) && tr.check_bridge_consistency(dt.world()),
        ),
        Ok(_) => skip("cwa-semi-equivalent", "too many fresh atoms"),
        Err(_) => check("cwa-semi-equivalent", false),
    });

    let members = ext.members();
    let pairwise = members.iter().enumerate().all(|(i, a)| {
        members[i + 1..]
            .iter()
            .all(|b| !is_satisfiable(&a.generators().union(b.generators())))
    });
    out.push(check("normal-extensions-pairwise-inconsistent", pairwise));
    out
}
