//! Command-line front end.
//!
//! Exit codes: `0` success (including a `none` operator result), `1` a
//! verification failure, `2` bad input. Streams are line-delimited JSON;
//! graphs and reports are single documents.

use std::ffi::OsString;
use std::io::{IsTerminal, Write};
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;

use crate::bijection::{pattern_to_tableau, tableau_to_pattern};
use crate::crystal::{build_graph, CrystalGraph, GtpCrystal, SsytCrystal};
use crate::gtpattern::{self, enumerate_patterns, string_datum, GtPattern};
use crate::partition::{weyl_dimension, Partition};
use crate::ssyt::{self, Tableau};
use crate::suite::{verify_shape, verify_sweep, ShapeReport, SweepReport};

#[derive(Debug, Parser)]
#[command(
    name = "gtcrystal",
    version,
    about = "Crystals on Gelfand-Tsetlin patterns and tableaux"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every element of the crystal, one JSON object per line.
    Enumerate {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_enum, default_value_t = Model::Gtp)]
        model: Model,
        #[arg(long, value_enum, default_value_t = StreamFormat::Json)]
        format: StreamFormat,
    },
    /// Apply f_i or e_i to one element.
    Apply {
        #[arg(value_enum)]
        op: Op,
        i: usize,
        #[command(flatten)]
        element: ElementArgs,
    },
    /// Map a pattern to its tableau or a tableau to its pattern.
    Biject {
        #[command(flatten)]
        element: ElementArgs,
    },
    /// Export the crystal graph.
    Graph {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_enum, default_value_t = Model::Gtp)]
        model: Model,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Run the verification suite on one shape, a sweep, or the crystal of
    /// a given element.
    Verify {
        #[arg(short = 'n')]
        n: Option<usize>,
        #[arg(short = 'l', long = "lambda", value_parser = parse_partition)]
        lambda: Option<Partition>,
        /// Sweep every partition of size at most B with at most n parts,
        /// for every rank up to n.
        #[arg(long = "all-upto", value_name = "B", conflicts_with = "lambda")]
        all_upto: Option<i64>,
        #[arg(long, conflicts_with_all = ["lambda", "all_upto", "ssyt"])]
        gtp: Option<String>,
        #[arg(long, conflicts_with_all = ["lambda", "all_upto"])]
        ssyt: Option<String>,
        /// Print only the JSON report.
        #[arg(long)]
        json: bool,
    },
    /// Weyl dimension of the irreducible module.
    Dim {
        #[command(flatten)]
        shape: ShapeArgs,
    },
    /// Closed-form string datum of a pattern.
    StringDatum {
        #[arg(long)]
        gtp: String,
    },
}

#[derive(Debug, Args)]
pub struct ShapeArgs {
    #[arg(short = 'n')]
    pub n: usize,
    /// Comma-separated parts, e.g. 3,1,0.
    #[arg(short = 'l', long = "lambda", value_parser = parse_partition)]
    pub lambda: Partition,
}

/// An element given inline as JSON or as a path to a JSON file.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct ElementArgs {
    #[arg(long)]
    pub gtp: Option<String>,
    #[arg(long)]
    pub ssyt: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    Gtp,
    Ssyt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Op {
    F,
    E,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StreamFormat {
    Json,
    Text,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = s
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|e| format!("bad part {p:?}: {e}"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| e.to_string())
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Verification,
    Io(std::io::Error),
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type CliResult = Result<(), Failure>;

fn load<T: DeserializeOwned>(payload: &str) -> Result<T, Failure> {
    let text = if payload.trim_start().starts_with('{') {
        payload.to_string()
    } else {
        std::fs::read_to_string(Path::new(payload))
            .map_err(|e| Failure::Input(format!("cannot read {payload}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("invalid element: {e}")))
}

enum Element {
    Gtp(GtPattern),
    Ssyt(Tableau),
}

fn load_element(gtp: &Option<String>, ssyt: &Option<String>) -> Result<Element, Failure> {
    match (gtp, ssyt) {
        (Some(g), _) => Ok(Element::Gtp(load(g)?)),
        (None, Some(s)) => Ok(Element::Ssyt(load(s)?)),
        (None, None) => Err(Failure::Input(
            "an element is required (--gtp or --ssyt)".into(),
        )),
    }
}

fn json_line<T: serde::Serialize>(out: &mut dyn Write, value: &T) -> CliResult {
    serde_json::to_writer(&mut *out, value).map_err(|e| Failure::Io(e.into()))?;
    writeln!(out)?;
    Ok(())
}

fn check_label(n: usize, i: usize) -> CliResult {
    if i < 1 || i + 1 > n {
        return Err(Failure::Input(format!(
            "label {i} outside 1..={}",
            n.saturating_sub(1)
        )));
    }
    Ok(())
}

fn shape_graph(n: usize, lambda: &Partition, model: Model) -> Result<CrystalGraph, Failure> {
    let patterns = enumerate_patterns(n, lambda)?;
    Ok(match model {
        Model::Gtp => build_graph(&GtpCrystal::new(n), &patterns)?,
        Model::Ssyt => {
            let tableaux = patterns
                .iter()
                .map(pattern_to_tableau)
                .collect::<crate::Result<Vec<_>>>()?;
            build_graph(&SsytCrystal::new(n), &tableaux)?
        }
    })
}

struct Style {
    color: bool,
}

impl Style {
    fn verdict(&self, pass: bool) -> String {
        match (pass, self.color) {
            (true, true) => "\x1b[32mPASS\x1b[0m".into(),
            (false, true) => "\x1b[31mFAIL\x1b[0m".into(),
            (true, false) => "PASS".into(),
            (false, false) => "FAIL".into(),
        }
    }
}

fn summarize(out: &mut dyn Write, style: &Style, shape: &ShapeReport) -> CliResult {
    writeln!(
        out,
        "{} n={} lambda={} elements={} edges={}",
        style.verdict(shape.pass),
        shape.n,
        shape.shape,
        shape.elements,
        shape.edges
    )?;
    for check in shape.checks.iter().filter(|c| !c.pass) {
        writeln!(
            out,
            "  {} {}: {} violations",
            style.verdict(false),
            check.name,
            check.violations
        )?;
        for d in &check.detail {
            writeln!(out, "    {d}")?;
        }
    }
    Ok(())
}

fn execute(cli: Cli, out: &mut dyn Write, style: &Style) -> CliResult {
    match cli.command {
        Command::Enumerate {
            shape,
            model,
            format,
        } => {
            let patterns = enumerate_patterns(shape.n, &shape.lambda)?;
            for (k, p) in patterns.iter().enumerate() {
                match (model, format) {
                    (Model::Gtp, StreamFormat::Json) => json_line(out, p)?,
                    (Model::Ssyt, StreamFormat::Json) => json_line(out, &pattern_to_tableau(p)?)?,
                    (Model::Gtp, StreamFormat::Text) => {
                        if k > 0 {
                            writeln!(out)?;
                        }
                        writeln!(out, "{}", p.to_triangle())?;
                    }
                    (Model::Ssyt, StreamFormat::Text) => {
                        if k > 0 {
                            writeln!(out)?;
                        }
                        for row in pattern_to_tableau(p)?.rows() {
                            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
                            writeln!(out, "{}", cells.join(" "))?;
                        }
                    }
                }
            }
        }
        Command::Apply { op, i, element } => match load_element(&element.gtp, &element.ssyt)? {
            Element::Gtp(p) => {
                check_label(p.n(), i)?;
                let r = match op {
                    Op::F => gtpattern::lower_gtp(&p, i)?,
                    Op::E => gtpattern::raise_gtp(&p, i)?,
                };
                match r {
                    Some(q) => json_line(out, &q)?,
                    None => writeln!(out, "none")?,
                }
            }
            Element::Ssyt(t) => {
                check_label(t.n(), i)?;
                let r = match op {
                    Op::F => ssyt::lower_ssyt(&t, i)?,
                    Op::E => ssyt::raise_ssyt(&t, i)?,
                };
                match r {
                    Some(q) => json_line(out, &q)?,
                    None => writeln!(out, "none")?,
                }
            }
        },
        Command::Biject { element } => match load_element(&element.gtp, &element.ssyt)? {
            Element::Gtp(p) => json_line(out, &pattern_to_tableau(&p)?)?,
            Element::Ssyt(t) => json_line(out, &tableau_to_pattern(&t)?)?,
        },
        Command::Graph {
            shape,
            model,
            format,
        } => {
            let graph = shape_graph(shape.n, &shape.lambda, model)?;
            match format {
                GraphFormat::Dot => write!(out, "{}", graph.to_dot())?,
                GraphFormat::Json => json_line(out, &graph)?,
            }
        }
        Command::Verify {
            n,
            lambda,
            all_upto,
            gtp,
            ssyt,
            json,
        } => {
            let report = if gtp.is_some() || ssyt.is_some() {
                let (n, shape) = match load_element(&gtp, &ssyt)? {
                    Element::Gtp(p) => (p.n(), p.shape()),
                    Element::Ssyt(t) => (t.n(), t.shape().clone()),
                };
                single(verify_shape(n, &shape)?)
            } else {
                let n = n.ok_or_else(|| Failure::Input("-n is required".into()))?;
                match (lambda, all_upto) {
                    (Some(l), None) => single(verify_shape(n, &l)?),
                    (None, Some(b)) => verify_sweep(b, n)?,
                    _ => {
                        return Err(Failure::Input(
                            "give one of -l, --all-upto, --gtp or --ssyt".into(),
                        ))
                    }
                }
            };
            if !json {
                for shape in &report.shapes {
                    summarize(out, style, shape)?;
                }
                let failed = report.shapes.iter().filter(|s| !s.pass).count();
                writeln!(
                    out,
                    "{} {} shapes checked, {failed} failing",
                    style.verdict(report.pass),
                    report.shapes.len()
                )?;
            }
            json_line(out, &report)?;
            if !report.pass {
                return Err(Failure::Verification);
            }
        }
        Command::Dim { shape } => {
            writeln!(out, "{}", weyl_dimension(shape.n, &shape.lambda)?)?;
        }
        Command::StringDatum { gtp } => {
            let p: GtPattern = load(&gtp)?;
            json_line(out, &string_datum(&p))?;
        }
    }
    Ok(())
}

fn single(shape: ShapeReport) -> SweepReport {
    SweepReport {
        pass: shape.pass,
        shapes: vec![shape],
    }
}

/// Parses `args` (program name first) and runs the command, returning the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    let style = Style {
        color: std::env::var_os("NO_COLOR").is_none() && std::io::stdout().is_terminal(),
    };
    match execute(cli, out, &style) {
        Ok(()) => 0,
        Err(Failure::Verification) => 1,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
