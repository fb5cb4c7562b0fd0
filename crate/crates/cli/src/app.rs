//! Argument parsing and command execution for the `kupershmidt` binary.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use kupershmidt::linear::FieldSpec;
use kupershmidt::report::CheckReport;
use kupershmidt::search::{random_instance, Instance, InstanceKind};
use serde_json::{json, Value};

use crate::catalog::{catalog, entry};
use crate::checks::{run_check, Resolver, CHECKS, OBJECT_KEYWORDS};
use crate::construct::{construct, ConstructArgs};
use crate::error::{CliError, CliResult};
use crate::search_cmd::{run_search, SearchArgs};
use crate::spec_file::{canonical_json, CheckRequest, Object, SpecFile};
use crate::suite::{run_all, run_suite, SuiteOutcome};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "kupershmidt",
    version,
    about = "Exact checks, constructions and searches for Leibniz algebra structures"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Field override: Q or Fp.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Largest candidate space an exhaustive search may visit.
    #[arg(long, global = true)]
    pub budget: Option<u128>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Skip the derived statements and report the primary check only.
    #[arg(long, global = true)]
    pub no_consequences: bool,
    #[arg(long, global = true)]
    pub workers: Option<usize>,
}

#[derive(Debug, Args, Default)]
pub struct Context {
    #[arg(long)]
    pub algebra: Option<String>,
    /// Representation name, or `regular` / `dual-regular`.
    #[arg(long)]
    pub rep: Option<String>,
    #[arg(long)]
    pub twilled: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a named check on an object of a spec file.
    Check {
        file: PathBuf,
        object: String,
        check: String,
        #[command(flatten)]
        context: Context,
        /// Further operands (second operator, S, N, ...), in order.
        #[arg(long = "with")]
        with: Vec<String>,
    },
    /// Build new objects and print the extended spec file.
    Construct {
        file: PathBuf,
        construction: String,
        #[command(flatten)]
        context: Context,
        #[arg(long = "K", alias = "k")]
        k: Option<String>,
        #[arg(long = "N", alias = "n")]
        n: Option<String>,
        #[arg(long = "S", alias = "s")]
        s: Option<String>,
        #[arg(long)]
        theta: Option<String>,
        #[arg(long)]
        kn: Option<String>,
        #[arg(long)]
        pi: Option<String>,
        #[arg(long = "with")]
        with: Option<String>,
        #[arg(long)]
        split: Option<usize>,
        #[arg(long)]
        name: Option<String>,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Enumerate every operator over F_p satisfying a predicate.
    Search {
        file: PathBuf,
        #[arg(long)]
        predicate: Option<String>,
        #[command(flatten)]
        context: Context,
    },
    /// Run a consequence suite, or all of them.
    Suite {
        name: Option<String>,
        #[arg(long)]
        all: bool,
    },
    /// Print a seeded random verified instance as a spec file.
    Random {
        /// leibniz, nijenhuis, rota-baxter or kupershmidt.
        kind: String,
        /// Spec file supplying the algebra (or representation) for operators.
        file: Option<PathBuf>,
        #[command(flatten)]
        context: Context,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 2)]
        height: i64,
    },
    /// Print a spec file in canonical form.
    Fmt { file: PathBuf },
    /// List or export the bundled instances.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    List,
    Export { name: String },
}

/// What a command prints and the process exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: u8,
}

impl Output {
    fn new(stdout: String, clean: bool) -> Self {
        Output {
            stdout,
            code: if clean { 0 } else { 1 },
        }
    }
}

fn field_override(cli: &Cli) -> CliResult<Option<FieldSpec>> {
    cli.field
        .as_deref()
        .map(|s| s.parse::<FieldSpec>().map_err(CliError::from))
        .transpose()
}

fn load(path: &Path, cli: &Cli) -> CliResult<SpecFile> {
    let text = fs::read_to_string(path)?;
    SpecFile::parse(&text, field_override(cli)?)
}

fn scalars(v: &[kupershmidt::linear::Scalar]) -> Value {
    Value::Array(v.iter().map(|s| json!(s.to_canonical())).collect())
}

pub fn report_json(check: &str, object: &str, report: &CheckReport) -> String {
    let violations: Vec<Value> = report
        .violations
        .iter()
        .map(|v| json!({"identity": v.identity, "indices": v.indices, "lhs": scalars(&v.lhs), "rhs": scalars(&v.rhs)}))
        .collect();
    let consequences: Vec<Value> = report
        .consequences
        .iter()
        .map(|c| json!({"detail": c.detail, "name": c.name, "ok": c.ok}))
        .collect();
    canonical_json(&json!({
        "check": check,
        "consequences": consequences,
        "object": object,
        "ok": report.ok,
        "violations": violations,
    }))
}

fn report_text(check: &str, object: &str, report: &CheckReport) -> String {
    let lines: Vec<String> = report
        .violations
        .iter()
        .map(|v| {
            let show = |x: &[kupershmidt::linear::Scalar]| {
                x.iter()
                    .map(|s| s.to_canonical())
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            format!(
                "  violation {} at {:?}: [{}] != [{}]",
                v.identity,
                v.indices,
                show(&v.lhs),
                show(&v.rhs)
            )
        })
        .chain(report.consequences.iter().map(|c| {
            let mark = if c.ok { "pass" } else { "FAIL" };
            if c.detail.is_empty() {
                format!("  [{mark}] {}", c.name)
            } else {
                format!("  [{mark}] {}: {}", c.name, c.detail)
            }
        }))
        .collect();
    let status = if report.ok { "holds" } else { "fails" };
    let mut out = format!("{check} {object}: {status}\n");
    for l in lines {
        out.push_str(&l);
        out.push('\n');
    }
    out
}

fn construct_args(cmd: &Command) -> ConstructArgs {
    match cmd {
        Command::Construct {
            context,
            k,
            n,
            s,
            theta,
            kn,
            pi,
            with,
            split,
            name,
            ..
        } => ConstructArgs {
            algebra: context.algebra.clone(),
            rep: context.rep.clone(),
            k: k.clone(),
            n: n.clone(),
            s: s.clone(),
            theta: theta.clone(),
            kn: kn.clone(),
            pi: pi.clone(),
            with: with.clone(),
            split: *split,
            name: name.clone(),
        },
        _ => ConstructArgs::default(),
    }
}

fn suite_output(outcome: &SuiteOutcome, format: Format) -> Output {
    let text = match format {
        Format::Json => outcome.to_json(),
        Format::Text => outcome.to_text(),
    };
    Output::new(text, outcome.ok())
}

fn random_kind(
    kind: &str,
    dim: usize,
    file: Option<&SpecFile>,
    context: &Context,
) -> CliResult<InstanceKind> {
    if kind == "leibniz" {
        return Ok(InstanceKind::Leibniz { dim });
    }
    let file = file.ok_or_else(|| CliError::Usage(format!("random {kind} needs a spec file")))?;
    let req = CheckRequest {
        algebra: context.algebra.clone(),
        rep: context.rep.clone(),
        ..CheckRequest::new(kind, "")
    };
    let r = Resolver::new(file, &req);
    Ok(match kind {
        "nijenhuis" => InstanceKind::Nijenhuis(r.algebra()?),
        "rota-baxter" => InstanceKind::RotaBaxter(r.algebra()?),
        "kupershmidt" => InstanceKind::Kupershmidt(r.rep()?),
        other => return Err(CliError::Usage(format!("unknown random kind {other:?}"))),
    })
}

/// Runs one parsed command line.
pub fn execute(cli: &Cli) -> CliResult<Output> {
    match &cli.command {
        Command::Check {
            file,
            object,
            check,
            context,
            with,
        } => {
            if !CHECKS.contains(&check.as_str()) {
                return Err(CliError::UnknownCheck(check.clone()));
            }
            let spec = load(file, cli)?;
            if !OBJECT_KEYWORDS.contains(&object.as_str()) {
                spec.get(object)?;
            }
            let req = CheckRequest {
                algebra: context.algebra.clone(),
                rep: context.rep.clone(),
                twilled: context.twilled.clone(),
                with: with.clone(),
                ..CheckRequest::new(check, object)
            };
            let report = run_check(&spec, &req, !cli.no_consequences)?;
            let text = match cli.format {
                Format::Json => report_json(check, object, &report),
                Format::Text => report_text(check, object, &report),
            };
            Ok(Output::new(text, report.ok && report.consequences_ok()))
        }
        Command::Construct {
            file,
            construction,
            output,
            ..
        } => {
            let spec = load(file, cli)?;
            let out = construct(&spec, construction, &construct_args(&cli.command))?;
            let text = out.to_canonical();
            if let Some(path) = output {
                fs::write(path, &text)?;
                return Ok(Output::new(String::new(), true));
            }
            Ok(Output::new(text, true))
        }
        Command::Search {
            file,
            predicate,
            context,
        } => {
            let spec = load(file, cli)?;
            let args = SearchArgs {
                predicate: predicate.clone(),
                algebra: context.algebra.clone(),
                rep: context.rep.clone(),
                twilled: context.twilled.clone(),
                budget: cli.budget,
                workers: cli.workers,
            };
            let outcome = run_search(&spec, &args)?;
            let text = match cli.format {
                Format::Json => outcome.to_json(),
                Format::Text => outcome.to_text(),
            };
            Ok(Output::new(text, true))
        }
        Command::Suite { name, all } => {
            let outcome = match (name, all) {
                (_, true) => run_all()?,
                (Some(n), false) => SuiteOutcome {
                    entries: vec![run_suite(n)?],
                    require_negatives: false,
                },
                (None, false) => return Err(CliError::Usage("suite needs a name or --all".into())),
            };
            Ok(suite_output(&outcome, cli.format))
        }
        Command::Random {
            kind,
            file,
            context,
            dim,
            height,
        } => {
            let spec = file.as_deref().map(|p| load(p, cli)).transpose()?;
            let instance_kind = random_kind(kind, *dim, spec.as_ref(), context)?;
            let field = match (&spec, field_override(cli)?) {
                (_, Some(f)) => f,
                (Some(s), None) => s.field,
                (None, None) => FieldSpec::Rationals,
            };
            let mut out = spec.unwrap_or_else(|| SpecFile::new(field));
            match random_instance(&instance_kind, field, *height, cli.seed)? {
                Instance::Algebra(a) => out.insert("random", Object::Algebra(a), true),
                Instance::Operator(m) => out.insert("random", Object::Operator(m), true),
            }
            Ok(Output::new(out.to_canonical(), true))
        }
        Command::Fmt { file } => Ok(Output::new(load(file, cli)?.to_canonical(), true)),
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                let mut text = String::new();
                for e in catalog() {
                    text.push_str(&format!("{:<20} {}\n", e.name, e.summary));
                }
                Ok(Output::new(text, true))
            }
            CatalogAction::Export { name } => {
                let e = entry(name).ok_or_else(|| CliError::UnknownEntry(name.clone()))?;
                Ok(Output::new(e.spec().to_canonical(), true))
            }
        },
    }
}

/// Parses `args` (program name first) and runs them; errors become a
/// message on stderr's behalf and the matching exit code.
pub fn run<I, T>(args: I) -> (Output, Option<String>)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (
                Output {
                    stdout: if code == 0 {
                        e.to_string()
                    } else {
                        String::new()
                    },
                    code,
                },
                (code != 0).then(|| e.to_string()),
            );
        }
    };
    match execute(&cli) {
        Ok(out) => (out, None),
        Err(e) => (
            Output {
                stdout: String::new(),
                code: e.exit_code(),
            },
            Some(format!("error: {e}")),
        ),
    }
}
