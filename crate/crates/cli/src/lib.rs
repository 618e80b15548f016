//! Command-line front end for `curvelattice-core`: argument parsing, model
//! documents, and JSON/CSV/table reports.

pub mod model_file;
pub mod report;
pub mod verify;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use curvelattice_core::cubic::{classify_cubic, Septuple};
use curvelattice_core::k3::{cohomology_traced, Builtin, K3Model};
use curvelattice_core::quartic::{
    classify_quartic, families_q1_row, family_union, max_genus_with_residue, q1_families,
    q2_nonvanishing_families, q2_nonvanishing_row, quartic_large_genus, FamilyCheck,
};
use curvelattice_core::{DivClass2, Int};
use rayon::prelude::*;

use model_file::load_model;
use report::*;

/// An error with the process exit code it maps to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(m: impl ToString) -> Self {
        CliError {
            code: 1,
            message: m.to_string(),
        }
    }

    pub fn domain(m: impl ToString) -> Self {
        CliError {
            code: 2,
            message: m.to_string(),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "curvelattice",
    version,
    about = "Divisor classes on rank-2 quartic K3 and cubic surfaces, and the Hilbert-scheme components of their curves",
    after_help = "Examples:\n  curvelattice classify quartic --model q1 --class 8,6\n  curvelattice classify cubic --tuple 15,5,4,4,4,4,2\n  curvelattice enumerate --model q1 --bmax 10 --check\n  curvelattice maxgenus 26 5\n  curvelattice cohomology --model q1 --class 15,10 --twist 4\n  curvelattice verify all\n\nExit codes: 0 ok, 1 usage, 2 domain or model error, 3 verification mismatch.\nCURVELATTICE_THREADS caps the worker threads used by scans."
)]
pub struct Cli {
    /// Output format; `enumerate` defaults to csv, everything else to json.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Omit wall-clock time so output is byte-identical across runs.
    #[arg(long, global = true)]
    pub stable: bool,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify the maximal family of curves in a divisor class.
    #[command(subcommand)]
    Classify(ClassifyCmd),
    /// List the classes of a closed-form region on a built-in quartic.
    Enumerate(EnumerateArgs),
    /// Maximum genus G(d,s) of curves not on a surface of degree s-1.
    Maxgenus {
        #[arg(allow_hyphen_values = true)]
        d: String,
        #[arg(allow_hyphen_values = true)]
        s: String,
    },
    /// Cohomology of O_S(C - nH) with the peeling trace.
    Cohomology {
        /// q1, q2, or a path to a JSON model document.
        #[arg(long)]
        model: String,
        /// a,b
        #[arg(long, allow_hyphen_values = true)]
        class: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        twist: String,
    },
    /// Run invariant scans.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
}

#[derive(Subcommand, Debug)]
pub enum ClassifyCmd {
    /// A class a,b on a quartic K3 model.
    Quartic {
        /// q1, q2, or a path to a JSON model document.
        #[arg(long)]
        model: String,
        /// a,b
        #[arg(long, allow_hyphen_values = true)]
        class: String,
        /// Known h1(I_C(1)) of the general curve.
        #[arg(long = "h1-ic1")]
        h1_ic1: Option<String>,
    },
    /// A septuple delta,m1,...,m6 on a smooth cubic.
    Cubic {
        #[arg(long, allow_hyphen_values = true)]
        tuple: String,
    },
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    /// q1, q2, or a model document equal to one of them.
    #[arg(long)]
    pub model: String,
    #[arg(long)]
    pub bmax: String,
    /// families (q1) or nonvanishing (q2); defaults by model.
    #[arg(long, value_enum)]
    pub region: Option<Region>,
    /// Compare with the parametrized families; exit 3 on mismatch.
    #[arg(long)]
    pub check: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Region {
    Families,
    Nonvanishing,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Rr,
    Oracles,
    Families,
    Crossover,
    All,
}

/// Rendered output plus exit code.
pub struct Outcome {
    pub text: String,
    pub code: u8,
}

fn parse_int(s: &str, what: &str) -> Result<Int, CliError> {
    s.trim()
        .parse::<Int>()
        .map_err(|_| CliError::usage(format!("{what}: '{s}' is not a base-10 integer")))
}

fn parse_ints(s: &str, n: usize, what: &str) -> Result<Vec<Int>, CliError> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != n {
        return Err(CliError::usage(format!(
            "{what}: expected {n} comma-separated integers, got '{s}'"
        )));
    }
    parts.iter().map(|p| parse_int(p, what)).collect()
}

fn parse_class(s: &str) -> Result<DivClass2, CliError> {
    let v = parse_ints(s, 2, "--class")?;
    Ok(DivClass2::new(v[0].clone(), v[1].clone()))
}

fn thread_pool() -> Result<rayon::ThreadPool, CliError> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("CURVELATTICE_THREADS") {
        let n: usize = v.parse().ok().filter(|n| *n > 0).ok_or_else(|| {
            CliError::usage(format!(
                "CURVELATTICE_THREADS: '{v}' is not a positive integer"
            ))
        })?;
        b = b.num_threads(n);
    }
    b.build().map_err(|e| CliError::usage(e.to_string()))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Result<Outcome, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            return Ok(Outcome {
                text: e.render().to_string(),
                code,
            });
        }
    };
    let echo: Vec<String> = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let start = Instant::now();
    let pool = thread_pool()?;
    let (mut report, code, default_format) = pool.install(|| execute(&cli.command))?;
    report.command = echo;
    if !cli.stable {
        report.wall_time_us = Some(start.elapsed().as_micros() as u64);
    }
    let text = render(&report, cli.format.unwrap_or(default_format))?;
    if let Some(path) = &cli.out {
        std::fs::write(path, &text)
            .map_err(|e| CliError::domain(format!("cannot write {}: {e}", path.display())))?;
        return Ok(Outcome {
            text: String::new(),
            code,
        });
    }
    Ok(Outcome { text, code })
}

fn new_report(model: Option<&K3Model>, inputs: &[(&str, String)], payload: Payload) -> RunReport {
    RunReport {
        command: Vec::new(),
        model: model.map(|m| m.name().to_string()),
        inputs: inputs
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect::<BTreeMap<_, _>>(),
        payload,
        wall_time_us: None,
    }
}

fn execute(cmd: &Command) -> Result<(RunReport, u8, Format), CliError> {
    match cmd {
        Command::Classify(ClassifyCmd::Quartic {
            model,
            class,
            h1_ic1,
        }) => {
            let m = load_model(model)?;
            let c = parse_class(class)?;
            let h = h1_ic1
                .as_deref()
                .map(|s| parse_int(s, "--h1-ic1"))
                .transpose()?;
            let v = classify_quartic(&m, &c, h.as_ref()).map_err(CliError::domain)?;
            let mut inputs = vec![("class", c.to_string())];
            if let Some(h) = &h {
                inputs.push(("h1_ic1", h.to_string()));
            }
            Ok((
                new_report(Some(&m), &inputs, Payload::Quartic(QuarticRow::from(&v))),
                0,
                Format::Json,
            ))
        }
        Command::Classify(ClassifyCmd::Cubic { tuple }) => {
            let v = parse_ints(tuple, 7, "--tuple")?;
            let m: [Int; 6] = std::array::from_fn(|i| v[i + 1].clone());
            let t = Septuple::new(v[0].clone(), m).map_err(CliError::domain)?;
            let verdict = classify_cubic(&t);
            Ok((
                new_report(
                    None,
                    &[("tuple", t.to_string())],
                    Payload::Cubic(CubicRow::from(&verdict)),
                ),
                0,
                Format::Json,
            ))
        }
        Command::Enumerate(args) => enumerate(args),
        Command::Maxgenus { d, s } => {
            let (d, s) = (parse_int(d, "d")?, parse_int(s, "s")?);
            let (g, r) = max_genus_with_residue(&d, &s).map_err(CliError::domain)?;
            let p = Payload::MaxGenus(MaxGenus {
                d: Num::from(&d),
                s: Num::from(&s),
                g: Num(g),
                r: Num(r),
            });
            Ok((
                new_report(None, &[("d", d.to_string()), ("s", s.to_string())], p),
                0,
                Format::Json,
            ))
        }
        Command::Cohomology {
            model,
            class,
            twist,
        } => {
            let m = load_model(model)?;
            let c = parse_class(class)?;
            let n = parse_int(twist, "--twist")?;
            let shifted = &c - &m.hyperplane().scaled(&n);
            let (dims, trace) = cohomology_traced(&m, &shifted).map_err(CliError::domain)?;
            let p = Cohomology::new(
                &c,
                &n,
                &dims,
                &trace,
                m.minus_two_curves(),
                m.elliptic_pencils(),
            );
            let inputs = [("class", c.to_string()), ("twist", n.to_string())];
            Ok((
                new_report(Some(&m), &inputs, Payload::Cohomology(p)),
                0,
                Format::Json,
            ))
        }
        Command::Verify { suite } => {
            let suites = match suite {
                Suite::Rr => vec![verify::riemann_roch()],
                Suite::Oracles => vec![verify::oracles()],
                Suite::Families => vec![verify::families()],
                Suite::Crossover => vec![verify::crossover()],
                Suite::All => vec![
                    verify::riemann_roch(),
                    verify::oracles(),
                    verify::families(),
                    verify::crossover(),
                ],
            };
            let passed = suites
                .iter()
                .all(|s| s.checks.iter().all(|c| c.failed == 0));
            let name = format!("{suite:?}").to_lowercase();
            let p = Payload::Verify(VerifyReport { suites, passed });
            Ok((
                new_report(None, &[("suite", name)], p),
                if passed { 0 } else { 3 },
                Format::Json,
            ))
        }
    }
}

fn enumerate(args: &EnumerateArgs) -> Result<(RunReport, u8, Format), CliError> {
    let m = load_model(&args.model)?;
    let bmax = parse_int(&args.bmax, "--bmax")?;
    if bmax < Int::from(0) {
        return Err(CliError::usage("--bmax must be non-negative"));
    }
    let Some(builtin) = m.builtin() else {
        return Err(CliError::domain(
            "enumeration regions exist only for the built-in surfaces q1 and q2",
        ));
    };
    let region = match (builtin, args.region) {
        (Builtin::Q1, None | Some(Region::Families)) => Region::Families,
        (Builtin::Q2, None | Some(Region::Nonvanishing)) => Region::Nonvanishing,
        (b, Some(r)) => {
            return Err(CliError::usage(
                format!("region {r:?} is not defined on {}", b.name()).to_lowercase(),
            ))
        }
    };
    let bmax_u: u64 =
        u64::try_from(&bmax).map_err(|_| CliError::usage("--bmax is too large to scan"))?;
    let rows: Vec<DivClass2> = match region {
        Region::Families => (0..=bmax_u)
            .into_par_iter()
            .flat_map_iter(|b| families_q1_row(&m, &Int::from(b)))
            .collect(),
        Region::Nonvanishing => (0..=bmax_u)
            .into_par_iter()
            .map(|b| q2_nonvanishing_row(&m, &Int::from(b)))
            .collect::<Result<Vec<_>, _>>()
            .map_err(CliError::domain)?
            .into_iter()
            .flatten()
            .collect(),
    };
    let mut rows = rows;
    rows.sort();
    let verdicts = rows
        .par_iter()
        .map(|c| classify_quartic(&m, c, None).map(|v| QuarticRow::from(&v)))
        .collect::<Result<Vec<_>, _>>()
        .map_err(CliError::domain)?;

    let mut code = 0;
    let check = args.check.then(|| {
        let specs = match region {
            Region::Families => q1_families(),
            Region::Nonvanishing => q2_nonvanishing_families(),
        };
        let expected = family_union(&specs, &bmax);
        let fc = FamilyCheck::compare(&rows, &expected);
        let above: Vec<String> = match region {
            Region::Families => Vec::new(),
            Region::Nonvanishing => rows
                .iter()
                .filter(|c| quartic_large_genus(&m.degree(c), &m.genus(c)))
                .map(|c| c.to_string())
                .collect(),
        };
        let exact = fc.is_exact() && above.is_empty();
        if !exact {
            code = 3;
        }
        FamilyCheckReport {
            families: specs
                .iter()
                .map(|f| format!("{} + k*{}", f.base, f.step))
                .collect(),
            expected: expected.len(),
            found: rows.len(),
            unexpected: fc.unexpected.iter().map(|c| c.to_string()).collect(),
            missing: fc.missing.iter().map(|c| c.to_string()).collect(),
            above_genus_threshold: above,
            exact,
        }
    });
    let name = match region {
        Region::Families => "families",
        Region::Nonvanishing => "nonvanishing",
    };
    let p = Payload::Enumeration(Enumeration {
        region: name.to_string(),
        bmax: Num::from(&bmax),
        rows: verdicts,
        check,
    });
    let inputs = [("bmax", bmax.to_string()), ("region", name.to_string())];
    Ok((new_report(Some(&m), &inputs, p), code, Format::Csv))
}

const CSV_HEADER: [&str; 9] = [
    "a",
    "b",
    "d",
    "g",
    "h1_I4",
    "kind",
    "dim_w",
    "tangent_dim",
    "criteria",
];

fn opt(n: &Option<Num>) -> String {
    n.as_ref().map(|n| n.to_string()).unwrap_or_default()
}

fn quartic_record(r: &QuarticRow) -> [String; 9] {
    [
        r.a.to_string(),
        r.b.to_string(),
        r.d.to_string(),
        r.g.to_string(),
        r.h1_i4.to_string(),
        r.kind.clone(),
        opt(&r.dim_w),
        opt(&r.tangent_dim),
        r.criteria.join(";"),
    ]
}

/// Key/value pairs of a single-result payload, in display order.
fn fields(p: &Payload) -> Vec<(String, String)> {
    let kv = |k: &str, v: String| (k.to_string(), v);
    match p {
        Payload::Quartic(r) => {
            let mut v: Vec<(String, String)> = CSV_HEADER
                .iter()
                .map(|h| h.to_string())
                .zip(quartic_record(r))
                .collect();
            if let Some(c) = &r.clifford_bound {
                v.push(kv("clifford_bound", c.clone()));
            }
            v
        }
        Payload::Cubic(r) => vec![
            kv("delta", r.delta.to_string()),
            kv(
                "m",
                r.m.iter()
                    .map(|m| m.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
            ),
            kv("d", r.d.to_string()),
            kv("g", r.g.to_string()),
            kv("kind", r.kind.clone()),
            kv("dim_w", opt(&r.dim_w)),
            kv("tangent_dim", opt(&r.tangent_dim)),
            kv(
                "h1_I3",
                r.h1_i3.as_ref().map_or("unknown".into(), |n| n.to_string()),
            ),
            kv(
                "h1_I1_zero",
                r.h1_i1_zero.map_or("unknown".into(), |b| b.to_string()),
            ),
            kv("h1_I3_nonzero_in_range", r.h1_i3_nonzero_in_range.clone()),
            kv("conjecture_range", r.conjecture_range.to_string()),
            kv("criteria", r.criteria.join(";")),
            kv("notes", r.notes.join("; ")),
        ],
        Payload::MaxGenus(m) => vec![
            kv("d", m.d.to_string()),
            kv("s", m.s.to_string()),
            kv("g", m.g.to_string()),
            kv("r", m.r.to_string()),
        ],
        Payload::Cohomology(c) => {
            let mut v = vec![
                kv("a", c.a.to_string()),
                kv("b", c.b.to_string()),
                kv("twist", c.twist.to_string()),
                kv(
                    "line_bundle",
                    format!("({},{})", c.line_bundle[0], c.line_bundle[1]),
                ),
                kv("h0", c.h0.to_string()),
                kv("h1", c.h1.to_string()),
                kv("h2", c.h2.to_string()),
                kv("h1_ideal", c.h1_ideal.to_string()),
                kv("dual", c.trace.dual.to_string()),
                kv("peels", c.trace.peels.to_string()),
            ];
            for (i, r) in c.trace.runs.iter().enumerate() {
                v.push(kv(
                    &format!("run{}", i + 1),
                    format!(
                        "({},{}) x {} from ({},{}), d {} -> {}, h1 += {}",
                        r.curve[0],
                        r.curve[1],
                        r.times,
                        r.from[0],
                        r.from[1],
                        r.first_d,
                        r.last_d,
                        r.h1_added
                    ),
                ));
            }
            v.push(kv("terminal", c.trace.terminal.clone()));
            v
        }
        Payload::Enumeration(_) | Payload::Verify(_) => Vec::new(),
    }
}

fn csv_error(e: impl std::fmt::Display) -> CliError {
    CliError::domain(format!("csv output failed: {e}"))
}

pub fn render(report: &RunReport, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => Ok(report.to_json() + "\n"),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            match &report.payload {
                Payload::Enumeration(e) => {
                    w.write_record(CSV_HEADER).map_err(csv_error)?;
                    for r in &e.rows {
                        w.write_record(quartic_record(r)).map_err(csv_error)?;
                    }
                }
                Payload::Verify(v) => {
                    w.write_record(["suite", "check", "checked", "failed", "counterexamples"])
                        .map_err(csv_error)?;
                    for s in &v.suites {
                        for c in &s.checks {
                            let (n, f) = (c.checked.to_string(), c.failed.to_string());
                            w.write_record([
                                s.name.as_str(),
                                &c.name,
                                &n,
                                &f,
                                &c.counterexamples.join("; "),
                            ])
                            .map_err(csv_error)?;
                        }
                    }
                }
                p => {
                    let f = fields(p);
                    w.write_record(f.iter().map(|(k, _)| k))
                        .map_err(csv_error)?;
                    w.write_record(f.iter().map(|(_, v)| v))
                        .map_err(csv_error)?;
                }
            }
            let bytes = w.into_inner().map_err(csv_error)?;
            String::from_utf8(bytes).map_err(csv_error)
        }
        Format::Table => Ok(table(report)),
    }
}

fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|i| {
            rows.iter()
                .filter_map(|r| r.get(i))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(i, s)| format!("{s:<w$}", w = widths[i]))
            .collect();
        let _ = writeln!(out, "{}", line.join("  ").trim_end());
    }
    out
}

fn table(report: &RunReport) -> String {
    let mut out = String::new();
    if let Some(m) = &report.model {
        let _ = writeln!(out, "model  {m}");
    }
    match &report.payload {
        Payload::Enumeration(e) => {
            let mut rows = vec![CSV_HEADER.iter().map(|s| s.to_string()).collect::<Vec<_>>()];
            rows.extend(e.rows.iter().map(|r| quartic_record(r).to_vec()));
            out.push_str(&aligned(&rows));
            if let Some(c) = &e.check {
                let _ = writeln!(
                    out,
                    "check  {} (found {}, expected {}; unexpected [{}]; missing [{}])",
                    if c.exact { "exact" } else { "MISMATCH" },
                    c.found,
                    c.expected,
                    c.unexpected.join(" "),
                    c.missing.join(" ")
                );
            }
        }
        Payload::Verify(v) => {
            let mut rows = vec![vec![
                "suite".into(),
                "check".into(),
                "checked".into(),
                "failed".into(),
            ]];
            for s in &v.suites {
                for c in &s.checks {
                    rows.push(vec![
                        s.name.clone(),
                        c.name.clone(),
                        c.checked.to_string(),
                        c.failed.to_string(),
                    ]);
                }
            }
            out.push_str(&aligned(&rows));
            for s in &v.suites {
                for c in s.checks.iter().filter(|c| c.failed > 0) {
                    let _ = writeln!(
                        out,
                        "{} / {}: {}",
                        s.name,
                        c.name,
                        c.counterexamples.join("; ")
                    );
                }
            }
        }
        p => {
            let rows: Vec<Vec<String>> = fields(p).into_iter().map(|(k, v)| vec![k, v]).collect();
            out.push_str(&aligned(&rows));
        }
    }
    if let Some(t) = report.wall_time_us {
        let _ = writeln!(out, "wall_time_us  {t}");
    }
    out
}
