//! Command-line front end. Every command prints either a JSON envelope
//! (tool, version, conventions, command, result) or a short text rendering.
//!
//! Exit codes: 0 success, 1 verification failed, 2 invalid input.

use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::alexander::alexander_from_braid;
use crate::braid::{parallelize_framed, torus_braid, twisted_torus_braid, twisted_torus_framed, BraidWord};
use crate::error::{Error, Result};
use crate::families::{
    cable_detect, family_membership, theorem11_fusion, theorem11_params, theorem31_params,
    verify_family_instance, FamilyParams, SearchBounds, TwistedTorusParams, Verdict, VERIFY_COST,
};
use crate::modarith::{coeff_quadruple, trace_arc_slots};
use crate::suite::{run_all, Criterion};
use crate::tangles::{essentiality_report, TangleSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "ttknot", version, about = "Twisted torus knots as braid words")]
pub struct RunConfig {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Maximum number of Alexander polynomial computations per command.
    #[arg(long, default_value_t = VERIFY_COST, global = true)]
    pub budget: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficients (a, b, c, d) for a torus knot T(p0, q0).
    Coeffs { p0: i64, q0: i64 },
    /// Slots visited by the two arcs of T(p0, q0).
    Trace { p0: i64, q0: i64 },
    /// Emit a braid word in the text format.
    #[command(subcommand)]
    Build(BuildCommand),
    /// Alexander polynomial of a braid closure.
    Alexander {
        /// Braid file, or `-` for standard input.
        #[arg(long)]
        braid: PathBuf,
    },
    #[command(subcommand)]
    Family(FamilyCommand),
    #[command(subcommand)]
    Cable(CableCommand),
    /// Arc decomposition and parallel classes of the tangle t(p, q; k).
    Tangle { p: i64, q: i64, k: i64 },
    /// Run the acceptance battery.
    Suite,
}

#[derive(Debug, Subcommand)]
pub enum BuildCommand {
    Torus {
        p: i64,
        #[arg(allow_hyphen_values = true)]
        q: i64,
    },
    Twisted {
        p: i64,
        #[arg(allow_hyphen_values = true)]
        q: i64,
        r: i64,
        #[arg(allow_hyphen_values = true)]
        s: i64,
    },
    /// Parallelization of the composite base for a family member.
    Parallel(FamilyArgs),
}

#[derive(Debug, Clone, Copy, Args)]
pub struct FamilyArgs {
    #[arg(long)]
    pub e: i64,
    #[arg(long)]
    pub k1: i64,
    #[arg(long)]
    pub k2: i64,
    #[arg(long)]
    pub x1: i64,
    #[arg(long)]
    pub x2: i64,
}

impl FamilyArgs {
    fn params(&self) -> Result<FamilyParams> {
        FamilyParams::new(self.e, self.k1, self.k2, self.x1, self.x2)
    }
}

#[derive(Debug, Clone, Copy, Args)]
pub struct TwistedArgs {
    pub p: i64,
    #[arg(allow_hyphen_values = true)]
    pub q: i64,
    pub r: i64,
    #[arg(allow_hyphen_values = true)]
    pub s: i64,
}

impl TwistedArgs {
    fn params(&self) -> Result<TwistedTorusParams> {
        TwistedTorusParams::new(self.p, self.q, self.r, self.s)
    }
}

#[derive(Debug, Subcommand)]
pub enum FamilyCommand {
    Params(FamilyArgs),
    Fusion(FamilyArgs),
    Verify(FamilyArgs),
    /// Family members with the given parameters.
    Detect {
        #[command(flatten)]
        tp: TwistedArgs,
        #[arg(long, default_value_t = 4)]
        max_e: i64,
        #[arg(long, default_value_t = 6)]
        max_k: i64,
        #[arg(long, default_value_t = 6)]
        max_x: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum CableCommand {
    Detect(TwistedArgs),
}

/// Sign, twist-region and cut-slot conventions, carried by every report.
pub fn conventions() -> Value {
    json!({
        "generator": "letter i > 0 is a positive crossing of slots i-1 and i",
        "torus_braid": "(s_{p-1} ... s_1)^q",
        "twist_region": "leftmost r slots",
        "cut_slots": "rightmost slots",
        "framing": "surface framing of the torus",
    })
}

struct Output {
    value: Value,
    text: String,
    code: i32,
}

impl Output {
    fn ok<T: Serialize>(result: &T, text: String) -> Result<Self> {
        Ok(Self {
            value: serde_json::to_value(result).map_err(|e| Error::Parse(e.to_string()))?,
            text,
            code: EXIT_OK,
        })
    }

    fn with_code(mut self, code: i32) -> Self {
        self.code = code;
        self
    }
}

fn command_name(cmd: &Command) -> String {
    match cmd {
        Command::Coeffs { .. } => "coeffs".into(),
        Command::Trace { .. } => "trace".into(),
        Command::Build(b) => match b {
            BuildCommand::Torus { .. } => "build torus",
            BuildCommand::Twisted { .. } => "build twisted",
            BuildCommand::Parallel(_) => "build parallel",
        }
        .into(),
        Command::Alexander { .. } => "alexander".into(),
        Command::Family(f) => match f {
            FamilyCommand::Params(_) => "family params",
            FamilyCommand::Fusion(_) => "family fusion",
            FamilyCommand::Verify(_) => "family verify",
            FamilyCommand::Detect { .. } => "family detect",
        }
        .into(),
        Command::Cable(_) => "cable detect".into(),
        Command::Tangle { .. } => "tangle".into(),
        Command::Suite => "suite".into(),
    }
}

fn braid_output(w: &BraidWord) -> Result<Output> {
    Output::ok(
        &json!({
            "strands": w.strands(),
            "letters": w.letters(),
            "components": w.component_count(),
        }),
        w.to_string(),
    )
}

fn read_braid(path: &PathBuf, stdin: &mut dyn Read) -> Result<BraidWord> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        stdin.read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path)?;
    }
    text.parse()
}

fn execute(cfg: &RunConfig, stdin: &mut dyn Read) -> Result<Output> {
    if cfg.budget < 1 {
        return Err(Error::BudgetExhausted { budget: cfg.budget });
    }
    match &cfg.command {
        Command::Coeffs { p0, q0 } => {
            let c = coeff_quadruple(*p0, *q0)?;
            Output::ok(&c, format!("a = {}, b = {}, c = {}, d = {}\n", c.a, c.b, c.c, c.d))
        }
        Command::Trace { p0, q0 } => {
            let s = trace_arc_slots(*p0, *q0)?;
            let labels: String = s.labels().iter().map(|&l| if l == 0 { 'A' } else { 'B' }).collect();
            let text = format!("A: {:?}\nB: {:?}\nlabels: {labels}\n", s.arc_a, s.arc_b);
            let mut v = serde_json::to_value(&s).map_err(|e| Error::Parse(e.to_string()))?;
            v["labels"] = json!(labels);
            Output::ok(&v, text)
        }
        Command::Build(b) => match b {
            BuildCommand::Torus { p, q } => braid_output(&torus_braid(*p, *q)?),
            BuildCommand::Twisted { p, q, r, s } => braid_output(&twisted_torus_braid(*p, *q, *r, *s)?),
            BuildCommand::Parallel(args) => {
                let fp = args.params()?;
                let base = theorem31_params(fp.e, fp.k1, fp.k2)?.base;
                let framed = twisted_torus_framed(base.p, base.q, base.r, base.s)?;
                braid_output(&parallelize_framed(&framed, fp.x1, fp.x2)?)
            }
        },
        Command::Alexander { braid } => {
            let w = read_braid(braid, stdin)?;
            let poly = alexander_from_braid(&w)?;
            Output::ok(
                &json!({ "polynomial": poly, "string": poly.to_string() }),
                format!("{poly}\n"),
            )
        }
        Command::Family(f) => match f {
            FamilyCommand::Params(args) => {
                let tp = theorem11_params(&args.params()?)?;
                Output::ok(&tp, format!("{tp}\n"))
            }
            FamilyCommand::Fusion(args) => {
                let fu = theorem11_fusion(&args.params()?)?;
                let text = format!(
                    "{} strings; factors {} and {}; companion {}\n",
                    fu.strings, fu.factor_knot, fu.factor_link, fu.companion
                );
                Output::ok(&fu, text)
            }
            FamilyCommand::Verify(args) => {
                let report = verify_family_instance(&args.params()?, cfg.budget)?;
                let mut text = format!(
                    "{} -> {}: {:?}\n",
                    report.family, report.derived, report.verdict
                );
                for c in &report.checks {
                    text.push_str(&format!("  {:<20} {:?} ({:?}) {}\n", c.name, c.status, c.evidence, c.detail));
                }
                let code = if report.verdict == Verdict::Pass { EXIT_OK } else { EXIT_FAILED };
                Ok(Output::ok(&report, text)?.with_code(code))
            }
            FamilyCommand::Detect { tp, max_e, max_k, max_x } => {
                let bounds = SearchBounds { max_e: *max_e, max_k: *max_k, max_x: *max_x };
                if bounds.max_e < 1 || bounds.max_k < 1 || bounds.max_x < 1 {
                    return Err(Error::OutOfRange("search bounds must be positive".into()));
                }
                let tp = tp.params()?;
                let members = family_membership(&tp, &bounds);
                let text = if members.is_empty() {
                    "no family member within bounds\n".into()
                } else {
                    members.iter().map(|m| format!("{m}\n")).collect()
                };
                Output::ok(&json!({ "params": tp, "bounds": bounds, "members": members }), text)
            }
        },
        Command::Cable(CableCommand::Detect(args)) => {
            let tp = args.params()?;
            match cable_detect(&tp) {
                Some(c) => Output::ok(
                    &json!({ "params": tp, "cable": c, "message": "cable structure" }),
                    format!("cable {} of companion {}\n", c.cable, c.companion),
                ),
                None => Output::ok(
                    &json!({ "params": tp, "cable": null, "message": "no cable structure" }),
                    "no cable structure\n".into(),
                ),
            }
        }
        Command::Tangle { p, q, k } => {
            let report = essentiality_report(&TangleSpec::new(*p, *q, *k)?)?;
            let mut text = format!("t({p}, {q}; {k}): {} ({})\n", report.verdict, report.basis.evidence);
            for a in &report.arcs.arcs {
                text.push_str(&format!(
                    "  arc {} -> {}: T({}, {}){}\n",
                    a.start,
                    a.end,
                    a.strands,
                    a.longitude,
                    if a.knotted { " knotted" } else { "" }
                ));
            }
            text.push_str(&format!("  classes: {:?}\n", report.classes.classes));
            Output::ok(&report, text)
        }
        Command::Suite => {
            let outcomes = run_all();
            let text: String = outcomes.iter().map(|o| o.line() + "\n").collect();
            let failed: Vec<Criterion> = outcomes.iter().filter(|o| !o.passed()).map(|o| o.criterion).collect();
            let code = if failed.is_empty() { EXIT_OK } else { EXIT_FAILED };
            Ok(Output::ok(&json!({ "outcomes": outcomes, "failed": failed }), text)?.with_code(code))
        }
    }
}

/// Runs one parsed command, writing the report to `out` and errors to `err`.
pub fn run(cfg: &RunConfig, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let name = command_name(&cfg.command);
    match execute(cfg, stdin) {
        Ok(o) => {
            let written = match cfg.format {
                Format::Text => out.write_all(o.text.as_bytes()),
                Format::Json => {
                    let env = json!({
                        "tool": "ttknot",
                        "version": env!("CARGO_PKG_VERSION"),
                        "conventions": conventions(),
                        "command": name,
                        "result": o.value,
                    });
                    writeln!(out, "{}", serde_json::to_string_pretty(&env).expect("json value"))
                }
            };
            if written.is_err() {
                return EXIT_FAILED;
            }
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "ttknot {name}: {e}");
            EXIT_INVALID
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
        }
    };
    run(&cfg, &mut io::stdin().lock(), &mut io::stdout().lock(), &mut io::stderr().lock())
}
