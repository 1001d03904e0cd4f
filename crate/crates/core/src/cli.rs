//! Command-line front end. [`run`] is the whole program minus process
//! plumbing, so tests can drive it in-process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::{hilbert, QuadraticPresentation};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::format;
use crate::koszul::{bar_homology, diagonal_failure, euler_from_hilbert, koszul_verdict};
use crate::laws::{check_double_dual, check_dual_antimultiplicative, check_unit_duality, run_suite, DiagramCheck, Suite, SuiteConfig};
use crate::linalg::Field;

#[derive(Debug, Parser)]
#[command(name = "qcat", version, about = "Exact computations with quadratic algebras")]
pub struct Cli {
    /// Output mode.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    pub format: OutputFormat,

    /// Evaluate everything on the calling thread.
    #[arg(long, global = true)]
    pub sequential: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Structured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProductKind {
    Black,
    White,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the quadratic dual.
    Dual { file: String },
    /// Print a Manin product.
    Product {
        #[arg(long, value_enum)]
        kind: ProductKind,
        a: String,
        b: String,
    },
    /// Print the internal Hom object from U to V.
    Hom { u: String, v: String },
    /// Graded dimensions in degrees 0..=max.
    Hilbert {
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
        max: u64,
        file: String,
    },
    /// Second Koszul complex slices, the Euler test and the verdict.
    Koszul {
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
        max: u64,
        file: String,
    },
    /// Bar complex homology table and its diagonal verdict.
    Ext {
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
        max: u64,
        file: String,
    },
    /// Randomised checks of the category laws on the given objects.
    Laws {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(required = true)]
        files: Vec<String>,
    },
    /// Double dual, unit duality and anti-multiplicativity against a partner
    /// (the file itself when omitted).
    SelfdualCheck { file: String, partner: Option<String> },
}

/// Collected output of one invocation.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub const EXIT_FAIL: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

struct Ctx<'a> {
    mode: OutputFormat,
    exec: Exec,
    stdin: Option<&'a mut dyn Read>,
    out: String,
    failed: bool,
}

/// Quotes values that contain whitespace, quotes or backslashes.
fn value(s: &str) -> String {
    if !s.is_empty() && !s.chars().any(|c| c.is_whitespace() || c == '"' || c == '\\') {
        return s.to_string();
    }
    let mut q = String::from("\"");
    for c in s.chars() {
        match c {
            '"' => q.push_str("\\\""),
            '\\' => q.push_str("\\\\"),
            '\n' => q.push_str("\\n"),
            c => q.push(c),
        }
    }
    q.push('"');
    q
}

fn record(kind: &str, fields: &[(&str, String)]) -> String {
    let mut line = format!("record={kind}");
    for (k, v) in fields {
        let _ = write!(line, " {k}={}", value(v));
    }
    line
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn field_key(f: Field) -> String {
    f.to_string().replace(' ', "")
}

impl Ctx<'_> {
    fn line(&mut self, s: impl AsRef<str>) {
        self.out.push_str(s.as_ref());
        self.out.push('\n');
    }

    fn text(&self) -> bool {
        self.mode == OutputFormat::Text
    }

    fn load(&mut self, path: &str) -> Result<QuadraticPresentation> {
        let text = if path == "-" {
            let stdin = self.stdin.take().ok_or_else(|| Error::Io {
                path: "-".into(),
                message: "standard input can be read only once".into(),
            })?;
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| Error::Io {
                path: "-".into(),
                message: e.to_string(),
            })?;
            s
        } else {
            std::fs::read_to_string(path).map_err(|e| Error::Io {
                path: path.into(),
                message: e.to_string(),
            })?
        };
        format::parse(&text).map_err(|e| match e {
            Error::Parse { line, column, message } => Error::Parse {
                line,
                column,
                message: format!("{path}: {message}"),
            },
            other => other,
        })
    }

    fn presentation(&mut self, a: &QuadraticPresentation) {
        if self.text() {
            self.out.push_str(&format::unparse(a));
            return;
        }
        self.line(record(
            "presentation",
            &[
                ("name", a.name().to_string()),
                ("field", field_key(a.field())),
                ("n", a.n().to_string()),
                ("relations", a.relations().dim().to_string()),
                ("gens", a.labels().join(",")),
            ],
        ));
        let text = format::unparse(a);
        for (k, rel) in text.lines().filter_map(|l| l.strip_prefix("rel ")).enumerate() {
            self.line(record("relation", &[("index", k.to_string()), ("terms", rel.to_string())]));
        }
    }

    fn check(&mut self, c: &DiagramCheck) {
        self.failed |= !c.passed;
        if self.text() {
            self.line(c.to_string());
            return;
        }
        let mut fields = vec![
            ("status", if c.passed { "PASS" } else { "FAIL" }.to_string()),
            ("name", c.name.clone()),
            ("objects", c.objects_label()),
        ];
        if let Some(t) = c.trial {
            fields.push(("trial", t.to_string()));
        }
        fields.push(("residual_nonzeros", c.residual_nonzeros().to_string()));
        self.line(record("check", &fields));
    }
}

fn error_record(e: &Error) -> String {
    let mut fields = Vec::new();
    let kind = match e {
        Error::Parse { line, column, message } => {
            fields.push(("line", line.to_string()));
            fields.push(("column", column.to_string()));
            fields.push(("message", message.clone()));
            "parse"
        }
        Error::Io { path, message } => {
            fields.push(("path", path.clone()));
            fields.push(("message", message.clone()));
            "io"
        }
        other => {
            fields.push(("message", other.to_string()));
            "math"
        }
    };
    fields.insert(0, ("kind", kind.to_string()));
    record("error", &fields)
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { 0 };
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: rendered, code }
            } else {
                Outcome { stdout: rendered, stderr: String::new(), code }
            };
        }
    };
    execute(&cli, stdin)
}

pub fn execute(cli: &Cli, stdin: &mut dyn Read) -> Outcome {
    let mut ctx = Ctx {
        mode: cli.format,
        exec: if cli.sequential { Exec::Sequential } else { Exec::Parallel },
        stdin: Some(stdin),
        out: String::new(),
        failed: false,
    };
    match dispatch(&cli.command, &mut ctx) {
        Ok(()) => Outcome {
            code: if ctx.failed { EXIT_FAIL } else { 0 },
            stdout: ctx.out,
            stderr: String::new(),
        },
        Err(e) => {
            let mut out = Outcome {
                stdout: ctx.out,
                stderr: String::new(),
                code: EXIT_ERROR,
            };
            if cli.format == OutputFormat::Structured {
                out.stdout.push_str(&error_record(&e));
                out.stdout.push('\n');
            } else {
                out.stderr = format!("error: {e}\n");
            }
            out
        }
    }
}

fn dispatch(cmd: &Command, ctx: &mut Ctx) -> Result<()> {
    match cmd {
        Command::Dual { file } => {
            let a = ctx.load(file)?;
            ctx.presentation(&a.dual());
        }
        Command::Product { kind, a, b } => {
            let (a, b) = (ctx.load(a)?, ctx.load(b)?);
            let (p, expected, label) = match kind {
                ProductKind::Black => (a.black(&b)?, a.relations().dim() * b.relations().dim(), "black"),
                ProductKind::White => {
                    let (na, nb) = (a.n() * a.n(), b.n() * b.n());
                    let (ca, cb) = (a.relations().dim(), b.relations().dim());
                    (a.white(&b)?, na * cb + ca * nb - ca * cb, "white")
                }
            };
            ctx.presentation(&p);
            let dim = p.relations().dim();
            if ctx.text() {
                ctx.line(format!(
                    "# {label} product: {} generators, {dim} relations (expected {expected})",
                    p.n()
                ));
            } else {
                ctx.line(record(
                    "product",
                    &[
                        ("kind", label.to_string()),
                        ("left", a.name().to_string()),
                        ("right", b.name().to_string()),
                        ("n", p.n().to_string()),
                        ("relations", dim.to_string()),
                        ("expected_relations", expected.to_string()),
                    ],
                ));
            }
        }
        Command::Hom { u, v } => {
            let (u, v) = (ctx.load(u)?, ctx.load(v)?);
            ctx.presentation(&u.internal_hom(&v)?);
        }
        Command::Hilbert { max, file } => {
            let a = ctx.load(file)?;
            for (m, d) in hilbert(&a, *max as usize).into_iter().enumerate() {
                if ctx.text() {
                    ctx.line(format!("{m}: {d}"));
                } else {
                    ctx.line(record("hilbert", &[("degree", m.to_string()), ("dim", d.to_string())]));
                }
            }
        }
        Command::Koszul { max, file } => {
            let a = ctx.load(file)?;
            koszul(ctx, &a, *max as usize);
        }
        Command::Ext { max, file } => {
            let a = ctx.load(file)?;
            ext(ctx, &a, *max as usize);
        }
        Command::Laws {
            suite,
            trials,
            seed,
            files,
        } => {
            let mut pool = Vec::new();
            for f in files {
                pool.push(ctx.load(f)?);
            }
            let cfg = SuiteConfig {
                trials: *trials,
                seed: *seed,
                exec: ctx.exec,
            };
            let report = run_suite(*suite, &pool, &cfg)?;
            for c in &report.checks {
                ctx.check(c);
            }
            for note in &report.notes {
                if ctx.text() {
                    ctx.line(format!("note {note}"));
                } else {
                    ctx.line(record("note", &[("text", note.clone())]));
                }
            }
            summary(ctx, &report.checks);
        }
        Command::SelfdualCheck { file, partner } => {
            let a = ctx.load(file)?;
            let b = match partner {
                Some(p) => ctx.load(p)?,
                None => a.clone(),
            };
            let mut checks = vec![check_double_dual(&a)];
            checks.extend(check_unit_duality(a.field()));
            checks.push(check_dual_antimultiplicative(&a, &b)?);
            checks.push(check_dual_antimultiplicative(&b, &a)?);
            for c in &checks {
                ctx.check(c);
            }
            summary(ctx, &checks);
        }
    }
    Ok(())
}

fn summary(ctx: &mut Ctx, checks: &[DiagramCheck]) {
    let failed = checks.iter().filter(|c| !c.passed).count();
    if ctx.text() {
        ctx.line(format!("checks {} failed {failed}", checks.len()));
    } else {
        ctx.line(record("summary", &[("checks", checks.len().to_string()), ("failed", failed.to_string())]));
    }
}

fn koszul(ctx: &mut Ctx, a: &QuadraticPresentation, max: usize) {
    let verdict = koszul_verdict(a, max, ctx.exec);
    for r in &verdict.reports {
        if ctx.text() {
            ctx.line(format!(
                "m={} positions {} dims {} homology {} exact={}",
                r.internal_degree,
                join(&r.positions, ","),
                join(&r.position_dims, ","),
                join(&r.homology_dims, ","),
                r.exact
            ));
        } else {
            ctx.line(record(
                "slice",
                &[
                    ("degree", r.internal_degree.to_string()),
                    ("positions", join(&r.positions, ",")),
                    ("dims", join(&r.position_dims, ",")),
                    ("ranks", join(&r.ranks, ",")),
                    ("homology", join(&r.homology_dims, ",")),
                    ("exact", r.exact.to_string()),
                ],
            ));
        }
    }
    let ha = hilbert(a, max);
    let hd = hilbert(&a.dual(), max);
    let euler = euler_from_hilbert(&ha, &hd);
    let first_failure = euler.iter().position(|ok| !ok).map(|k| k + 1);
    if ctx.text() {
        ctx.line(format!("hilbert {}", join(&ha, ",")));
        ctx.line(format!("hilbert_dual {}", join(&hd, ",")));
        match first_failure {
            None => ctx.line(format!("euler_hilbert holds up to {max}")),
            Some(m) => ctx.line(format!("euler_hilbert fails at m={m}")),
        }
        ctx.line(format!("koszul_up_to_{max}: {}", verdict.koszul));
    } else {
        ctx.line(record(
            "euler",
            &[
                ("hilbert", join(&ha, ",")),
                ("hilbert_dual", join(&hd, ",")),
                ("holds", first_failure.is_none().to_string()),
                ("first_failure", first_failure.map_or("none".to_string(), |m| m.to_string())),
            ],
        ));
        ctx.line(record(
            "verdict",
            &[("max_degree", max.to_string()), ("koszul", verdict.koszul.to_string())],
        ));
    }
}

fn ext(ctx: &mut Ctx, a: &QuadraticPresentation, max: usize) {
    let table = bar_homology(a, max, ctx.exec);
    let dual_dims = hilbert(&a.dual(), max);
    let failure = diagonal_failure(&table, &dual_dims);
    let koszul = koszul_verdict(a, max, ctx.exec).koszul;
    let diagonal = failure.is_none();
    // the diagonal criterion and the Koszul complex must agree
    let agree = diagonal == koszul;
    ctx.failed |= !agree;
    let failure_text = failure.map_or("none".to_string(), |(p, m, v)| format!("p={p},m={m},dim={v}"));
    if ctx.text() {
        ctx.line("bar homology, row m lists p = 0..m");
        for m in 0..=max {
            ctx.line(format!("m={m}: {}", join(table.row(m), " ")));
        }
        ctx.line(format!("dual_dims {}", join(&dual_dims, ",")));
        ctx.line(format!("diagonal_up_to_{max}: {diagonal} (first failure {failure_text})"));
        ctx.line(format!(
            "cross-check koszul_up_to_{max}: {koszul} {}",
            if agree { "PASS" } else { "FAIL" }
        ));
    } else {
        for m in 0..=max {
            ctx.line(record("bar", &[("degree", m.to_string()), ("homology", join(table.row(m), ","))]));
        }
        ctx.line(record(
            "ext",
            &[
                ("max_degree", max.to_string()),
                ("dual_dims", join(&dual_dims, ",")),
                ("diagonal", diagonal.to_string()),
                ("failure", failure_text),
            ],
        ));
        ctx.line(record(
            "cross_check",
            &[("koszul", koszul.to_string()), ("agree", agree.to_string())],
        ));
    }
}
