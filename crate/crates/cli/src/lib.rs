//! Command line front end: argument parsing, file ingestion, text grids and
//! JSON reports over the `bscone` library.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use bscone::bounds::{chi_polynomial, multiplicity_bounds, slope_bounds, strand_bound, strand_check};
use bscone::decompose::{decompose_betti, decompose_cohomology_with, CohomologyOptions, Decomposition};
use bscone::facets::{
    cohomology_facet, cohomology_facet_data, facet_from_supernatural, lower_facet_equation, monad_facet_equation,
    upper_facet_equation,
};
use bscone::json::{self, BettiJson, CohomologyJson, DecompositionJson, FunctionalJson};
use bscone::pairing::{self, Orientation};
use bscone::pure::{construction_generators, hk_moments_check, hk_pure_table, multiplicity};
use bscone::supernatural::{
    monad_table, multinomial_rank, rank_gcd_bound, residue_count_factor, schur_rank, supernatural_table,
};
use bscone::tables::{validate_betti, validate_cohomology, Diagnostics};
use bscone::{Betti, Cohomology, DegreeSequence, Error, Functional, Rational, RootSequence, Scalar};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "bscone", version, about = "Exact Boij-Soderberg computations on Betti and cohomology tables")]
struct Cli {
    /// What to print on success.
    #[arg(long, value_enum, default_value_t = OutputMode::Both, global = true)]
    output: OutputMode,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Json,
    Text,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Primitive pure Betti table of a degree sequence.
    Pure {
        #[arg(long, allow_hyphen_values = true)]
        degrees: String,
        /// Number of variables; defaults to the codimension.
        #[arg(long)]
        n: Option<usize>,
        /// Also report the generator count of the explicit construction.
        #[arg(long)]
        generators: bool,
    },
    /// Supernatural cohomology table, or a linear monad with `--monad A`.
    Supernatural {
        #[arg(long, allow_hyphen_values = true)]
        roots: String,
        /// Rational rank; defaults to the gcd bound.
        #[arg(long)]
        rank: Option<String>,
        /// Twist window `lo,hi`.
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
        /// Dual regularity of a monad realizing the table.
        #[arg(long, allow_hyphen_values = true)]
        monad: Option<i64>,
    },
    /// Integral rank bounds for a root sequence.
    RankBounds {
        #[arg(long, allow_hyphen_values = true)]
        roots: String,
    },
    /// Greedy decomposition into pure or supernatural tables.
    Decompose {
        #[arg(value_enum)]
        kind: Kind,
        input: PathBuf,
        /// Fail instead of widening a cohomology window.
        #[arg(long)]
        strict_window: bool,
    },
    /// The pairing of a Betti table with a cohomology table.
    Pair {
        betti: PathBuf,
        cohomology: PathBuf,
        #[command(flatten)]
        modification: Modification,
    },
    /// Coefficients of a pairing functional.
    Functional {
        #[arg(long, value_enum)]
        side: Kind,
        /// Cohomology table file (Betti side).
        #[arg(long)]
        table: Option<PathBuf>,
        /// Display rows `lo,hi` (Betti side).
        #[arg(long, allow_hyphen_values = true)]
        rows: Option<String>,
        /// Degree sequence of the pure table (cohomology side).
        #[arg(long, allow_hyphen_values = true)]
        degrees: Option<String>,
        /// Twist window `lo,hi` (cohomology side).
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
        #[command(flatten)]
        modification: Modification,
    },
    /// Facet equation of the Betti or cohomology fan.
    Facet {
        #[arg(long, allow_hyphen_values = true)]
        degrees: Option<String>,
        #[arg(long)]
        tau: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        rows: Option<String>,
        #[arg(long, value_enum, default_value_t = Kind::Betti)]
        side: Kind,
        #[arg(long, value_enum, default_value_t = Method::Chain)]
        method: Method,
        /// The lower instead of the upper equation (chain method only).
        #[arg(long)]
        lower: bool,
        /// Root sequence and one-based index (cohomology side).
        #[arg(long, allow_hyphen_values = true)]
        roots: Option<String>,
        #[arg(long)]
        index: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
    /// Multiplicity, strand and slope bounds.
    Bounds {
        #[command(subcommand)]
        which: BoundsCommand,
    },
    /// Structural checks on a table file.
    Validate { input: PathBuf },
}

#[derive(Subcommand, Debug)]
enum BoundsCommand {
    Multiplicity {
        input: PathBuf,
        #[arg(long)]
        codim: usize,
        /// Compare the bounds with `e / β_{0,0}`.
        #[arg(long)]
        normalized: bool,
    },
    Slope {
        input: PathBuf,
    },
    Strand {
        input: PathBuf,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        c: usize,
    },
}

#[derive(Args, Debug)]
struct Modification {
    #[arg(long, allow_hyphen_values = true, requires = "tau")]
    cutoff: Option<i64>,
    #[arg(long, requires = "cutoff")]
    tau: Option<usize>,
}

impl Modification {
    fn get(&self) -> Option<(i64, usize)> {
        self.cutoff.zip(self.tau)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Betti,
    Cohomology,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Chain,
    Supernatural,
    Both,
}

/// Why a command failed, with its exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Library(Error),
    /// A check ran and came out negative.
    Rejected(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) | Failure::Rejected(_) => 1,
            Failure::Library(Error::NotInCone(_)) => 2,
            Failure::Library(Error::WindowTooNarrow(_) | Error::IncompleteTable) => 3,
            Failure::Library(Error::Assertion(_)) => 4,
            Failure::Library(_) => 1,
        }
    }

    fn report(&self) -> Value {
        match self {
            Failure::Usage(m) => json!({"error": "Usage", "message": m}),
            Failure::Rejected(m) => json!({"error": "Rejected", "message": m}),
            Failure::Library(e) => {
                let kind: String = format!("{e:?}").chars().take_while(|c| c.is_alphanumeric()).collect();
                let mut report = json!({"error": kind, "message": e.to_string()});
                if let Error::NotInCone(ev) = e {
                    report["evidence"] = json!(format!("{ev:?}"));
                }
                report
            }
        }
    }
}

type Outcome = std::result::Result<Report, Failure>;

/// A successful result in both forms.
struct Report {
    json: String,
    text: String,
}

fn int_list(text: &str) -> std::result::Result<Vec<i64>, Failure> {
    text.split(',')
        .map(|s| s.trim().parse::<i64>().map_err(|_| Failure::Usage(format!("not an integer list: {text:?}"))))
        .collect()
}

fn int_pair(text: &str) -> std::result::Result<(i64, i64), Failure> {
    match int_list(text)?.as_slice() {
        &[a, b] if a <= b => Ok((a, b)),
        _ => Err(Failure::Usage(format!("expected lo,hi with lo <= hi, got {text:?}"))),
    }
}

fn required<T>(v: Option<T>, name: &str) -> std::result::Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("--{name} is required here")))
}

fn rational(text: &str) -> std::result::Result<Rational, Failure> {
    bscone::exact::parse_scalar(text).ok_or_else(|| Failure::Usage(format!("not a rational: {text:?}")))
}

struct Inputs<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl Inputs<'_> {
    fn read(&mut self, path: &PathBuf) -> std::result::Result<String, Failure> {
        if path.as_os_str() == "-" {
            if self.stdin_used {
                return Err(Failure::Usage("standard input can only be read once".into()));
            }
            self.stdin_used = true;
            let mut s = String::new();
            self.stdin.read_to_string(&mut s).map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
            return Ok(s);
        }
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("reading {}: {e}", path.display())))
    }

    fn betti(&mut self, path: &PathBuf) -> std::result::Result<Betti, Failure> {
        Ok(json::betti_from_json(&self.read(path)?)?)
    }

    fn cohomology(&mut self, path: &PathBuf) -> std::result::Result<Cohomology, Failure> {
        Ok(json::cohomology_from_json(&self.read(path)?)?)
    }
}

/// Right-aligned columns separated by one space.
fn grid(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r.iter().enumerate().map(|(c, s)| format!("{s:>w$}", w = widths[c])).collect();
        writeln!(out, "{}", line.join(" ").trim_end()).unwrap();
    }
    out
}

fn cell(v: &Rational) -> String {
    if *v == Rational::from_int(0) {
        ".".into()
    } else {
        v.to_string()
    }
}

fn betti_grid(columns: usize, rows: (i64, i64), value: impl Fn(usize, i64) -> Rational) -> String {
    let mut lines = vec![std::iter::once(String::new()).chain((0..=columns).map(|i| i.to_string())).collect::<Vec<_>>()];
    for l in rows.0..=rows.1 {
        let mut line = vec![format!("{l}:")];
        line.extend((0..=columns).map(|i| cell(&value(i, l))));
        lines.push(line);
    }
    grid(&lines)
}

/// Rows from `top` down to 0 with the row index on the right, display
/// columns along the bottom.
fn cohomology_grid(top: usize, columns: (i64, i64), value: impl Fn(usize, i64) -> Rational) -> String {
    let mut lines: Vec<Vec<String>> =
        (0..=top).rev().map(|i| (columns.0..=columns.1).map(|d| cell(&value(i, d))).collect()).collect();
    lines.push((columns.0..=columns.1).map(|d| d.to_string()).collect());
    let labels = (0..=top).rev().map(|i| i.to_string()).chain(std::iter::once("d\\i".to_string()));
    let body = grid(&lines);
    let width = body.lines().map(|l| l.chars().count()).max().unwrap_or(0);
    body.lines().zip(labels).map(|(l, lab)| format!("{l:<width$} | {lab}\n")).collect()
}

/// What [`render`] can draw.
#[derive(Clone, Copy)]
pub enum Renderable<'a> {
    Betti(&'a Betti),
    Cohomology(&'a Cohomology),
    Functional(&'a Functional),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderMode {
    Display,
    Json,
}

pub fn render(x: Renderable<'_>, mode: RenderMode) -> String {
    match (x, mode) {
        (Renderable::Betti(b), RenderMode::Json) => json::betti_to_json(b),
        (Renderable::Cohomology(c), RenderMode::Json) => json::cohomology_to_json(c),
        (Renderable::Functional(f), RenderMode::Json) => json::functional_to_json(f),
        (Renderable::Betti(b), RenderMode::Display) => match b.row_range() {
            Some(rows) => betti_grid(b.max_column().unwrap_or(0), rows, |i, l| b.get(i, i as i64 + l)),
            None => "0\n".into(),
        },
        (Renderable::Cohomology(c), RenderMode::Display) => {
            let (lo, hi) = c.display_columns();
            let cols = if lo <= hi { (lo, hi) } else { c.window() };
            cohomology_grid(c.m(), cols, |i, d| c.display_value(i, d).unwrap_or_else(|_| Rational::from_int(0)))
        }
        (Renderable::Functional(f), RenderMode::Display) => {
            let (lo, hi) = f.window();
            match f.orientation() {
                Orientation::Betti => betti_grid(f.size(), (lo, hi), |i, l| f.display(i, l)),
                Orientation::Cohomology => cohomology_grid(f.size(), (lo, hi + f.size() as i64), |i, d| f.display(i, d)),
            }
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes")
}

fn table_report(x: Renderable<'_>) -> Report {
    let text = render(x, RenderMode::Display);
    Report { json: render(x, RenderMode::Json), text }
}

fn decomposition_report<K, T>(d: &Decomposition<K, T, Rational>) -> Report
where
    K: AsRef<[i64]> + std::fmt::Display,
{
    let mut text = String::new();
    if d.parts.is_empty() {
        writeln!(text, "zero table: empty decomposition").unwrap();
    }
    for (k, p) in d.parts.iter().enumerate() {
        let zeroed: Vec<String> = p.zeroed.iter().map(|(i, j)| format!("({i},{j})")).collect();
        writeln!(text, "{}: {} * {}  zeroed {}", k + 1, p.coeff, p.skeleton, zeroed.join(" ")).unwrap();
    }
    Report { json: json::to_string(&DecompositionJson::from_decomposition(d)), text }
}

fn scalar_report(key: &str, v: &Rational) -> Report {
    Report { json: pretty(&json!({ key: v.to_string() })), text: format!("{v}\n") }
}

fn diagnostics_report(kind: &str, d: &Diagnostics) -> Outcome {
    let issues: Vec<String> = d.issues.iter().map(|i| i.to_string()).collect();
    if d.is_valid() {
        Ok(Report { json: pretty(&json!({"kind": kind, "valid": true, "issues": issues})), text: format!("valid {kind} table\n") })
    } else {
        Err(Failure::Rejected(format!("invalid {kind} table: {}", issues.join("; "))))
    }
}

fn dispatch(cli: Cli, inputs: &mut Inputs<'_>) -> Outcome {
    match cli.command {
        Command::Pure { degrees, n, generators } => {
            let d = DegreeSequence::new(int_list(&degrees)?)?;
            let b: Betti = hk_pure_table(&d, n.unwrap_or(d.codim()))?;
            let mut r = table_report(Renderable::Betti(&b));
            if generators {
                let g = construction_generators(&d)?;
                let table: Value = serde_json::from_str(&r.json).expect("library JSON is valid");
                r.json = pretty(&json!({"table": table, "generators": g.to_string()}));
                writeln!(r.text, "generators: {g}").unwrap();
            }
            Ok(r)
        }
        Command::Supernatural { roots, rank, window, monad } => {
            let z = RootSequence::new(int_list(&roots)?)?;
            let rank = match rank {
                Some(r) => rational(&r)?,
                None => Rational::from_bigint(&rank_gcd_bound(&z)),
            };
            let m = z.len() as i64;
            let window = match window {
                Some(w) => int_pair(&w)?,
                None => (z.last() - m, z.first() + 2),
            };
            let t: Cohomology = match monad {
                Some(a) => monad_table(&z, &rank, a, window)?,
                None => supernatural_table(&z, &rank, window)?,
            };
            Ok(table_report(Renderable::Cohomology(&t)))
        }
        Command::RankBounds { roots } => {
            let z = RootSequence::new(int_list(&roots)?)?;
            let (g, mult, schur, lit) = (rank_gcd_bound(&z), multinomial_rank(&z), schur_rank(&z), residue_count_factor(&z));
            Ok(Report {
                json: pretty(&json!({
                    "gcd_bound": g.to_string(),
                    "multinomial": mult.to_string(),
                    "schur": schur.to_string(),
                    "residue_formula": lit.to_string(),
                })),
                text: format!("gcd bound: {g}\nmultinomial: {mult}\nschur: {schur}\nresidue formula: {lit}\n"),
            })
        }
        Command::Decompose { kind, input, strict_window } => match kind {
            Kind::Betti => Ok(decomposition_report(&decompose_betti(&inputs.betti(&input)?)?)),
            Kind::Cohomology => {
                let c = inputs.cohomology(&input)?;
                Ok(decomposition_report(&decompose_cohomology_with(&c, CohomologyOptions { strict_window })?))
            }
        },
        Command::Pair { betti, cohomology, modification } => {
            let b = inputs.betti(&betti)?;
            let c = inputs.cohomology(&cohomology)?;
            let v = match modification.get() {
                Some((cutoff, tau)) => pairing::pair_modified(&b, &c, cutoff, tau)?,
                None => pairing::pair(&b, &c)?,
            };
            Ok(scalar_report("value", &v))
        }
        Command::Functional { side, table, rows, degrees, window, modification } => {
            let f: Functional = match side {
                Kind::Betti => {
                    let c = inputs.cohomology(&required(table, "table")?)?;
                    let rows = int_pair(&required(rows, "rows")?)?;
                    match modification.get() {
                        Some((cutoff, tau)) => pairing::betti_functional(&c, cutoff, tau, rows)?,
                        None => pairing::unmodified_betti_functional(&c, rows)?,
                    }
                }
                Kind::Cohomology => {
                    let d = DegreeSequence::new(int_list(&required(degrees, "degrees")?)?)?;
                    let window = window.as_deref().map(int_pair).transpose()?;
                    match modification.get() {
                        Some((cutoff, tau)) => pairing::cohomology_functional(&d, cutoff, tau, window)?,
                        None => pairing::unmodified_cohomology_functional(&d, window)?,
                    }
                }
            };
            Ok(table_report(Renderable::Functional(&f)))
        }
        Command::Facet { degrees, tau, rows, side, method, lower, roots, index, window } => {
            let f: Functional = match side {
                Kind::Betti => {
                    let d = DegreeSequence::new(int_list(&required(degrees, "degrees")?)?)?;
                    let tau = required(tau, "tau")?;
                    let rows = int_pair(&required(rows, "rows")?)?;
                    match (method, lower) {
                        (Method::Chain, false) => upper_facet_equation(&d, tau, rows)?,
                        (Method::Chain, true) => lower_facet_equation(&d, tau, rows)?,
                        (Method::Supernatural, false) => monad_facet_equation(&d, tau, rows)?,
                        (Method::Both, false) => facet_from_supernatural(&d, tau, rows)?,
                        (_, true) => return Err(Failure::Usage("--lower needs --method chain".into())),
                    }
                }
                Kind::Cohomology => {
                    let window = window.as_deref().map(int_pair).transpose()?;
                    let (z, i) = match (roots, index, degrees, tau) {
                        (Some(r), Some(i), None, None) => (RootSequence::new(int_list(&r)?)?, i),
                        (None, None, Some(d), Some(tau)) => facet_roots(&DegreeSequence::new(int_list(&d)?)?, tau)?,
                        _ => return Err(Failure::Usage("give --roots with --index, or --degrees with --tau".into())),
                    };
                    cohomology_facet(&z, i, window)?
                }
            };
            Ok(table_report(Renderable::Functional(&f)))
        }
        Command::Bounds { which } => match which {
            BoundsCommand::Multiplicity { input, codim, normalized } => {
                let b = inputs.betti(&input)?;
                let mb = multiplicity_bounds(&b, codim)?;
                let e = if hk_moments_check(&b, codim) { Some(multiplicity(&b, codim)?) } else { None };
                let mut json = json!({
                    "lower": mb.lower.to_string(),
                    "upper": mb.upper.to_string(),
                    "beta00": mb.beta00.to_string(),
                    "multiplicity": e.as_ref().map(|e| e.to_string()),
                });
                let mut text = format!("lower: {}\nupper: {}\n", mb.lower, mb.upper);
                if mb.needs_normalization() {
                    writeln!(text, "beta_00 = {}, bounds apply to e / beta_00", mb.beta00).unwrap();
                }
                if let Some(e) = &e {
                    writeln!(text, "multiplicity: {e}").unwrap();
                    if normalized {
                        let x = mb.normalized(e)?;
                        json["normalized"] = json!(x.to_string());
                        json["brackets"] = json!(mb.brackets(e)?);
                        writeln!(text, "normalized: {x}\nbracketed: {}", mb.brackets(e)?).unwrap();
                    }
                }
                Ok(Report { json: pretty(&json), text })
            }
            BoundsCommand::Slope { input } => {
                let c = inputs.cohomology(&input)?;
                let s = slope_bounds(&c)?;
                let chi = chi_polynomial(&c)?;
                let coeffs: Vec<String> = chi.coeffs().iter().map(|v| v.to_string()).collect();
                Ok(Report {
                    json: pretty(&json!({
                        "lower": s.lower.to_string(),
                        "mu": s.mu.to_string(),
                        "upper": s.upper.to_string(),
                        "rank": s.rank.to_string(),
                        "degree": s.degree.to_string(),
                        "chi": coeffs,
                    })),
                    text: format!(
                        "{} <= mu = {} <= {}\nrank {}, degree {}\nchi(d) = {}\n",
                        s.lower, s.mu, s.upper, s.rank, s.degree, chi
                    ),
                })
            }
            BoundsCommand::Strand { input, p, c } => {
                let b = inputs.betti(&input)?;
                let bound: Rational = strand_bound(p, c)?;
                let holds = strand_check(&b, p, c)?;
                Ok(Report {
                    json: pretty(&json!({"bound": bound.to_string(), "holds": holds})),
                    text: format!("bound: {bound}\nholds: {holds}\n"),
                })
            }
        },
        Command::Validate { input } => {
            let text = inputs.read(&input)?;
            let v: Value = serde_json::from_str(&text).map_err(|e| Failure::Library(Error::Parse(e.to_string())))?;
            if v.get("entries").is_some() {
                let b: Betti = serde_json::from_value::<BettiJson>(v)
                    .map_err(|e| Error::Parse(e.to_string()))?
                    .to_table()?;
                diagnostics_report("betti", &validate_betti(&b))
            } else if v.get("values").is_some() {
                let c: Cohomology = serde_json::from_value::<CohomologyJson>(v)
                    .map_err(|e| Error::Parse(e.to_string()))?
                    .to_table()?;
                diagnostics_report("cohomology", &validate_cohomology(&c))
            } else if v.get("coefficients").is_some() {
                serde_json::from_value::<FunctionalJson>(v).map_err(|e| Error::Parse(e.to_string()))?.to_functional::<Rational>()?;
                Ok(Report { json: pretty(&json!({"kind": "functional", "valid": true, "issues": []})), text: "valid functional\n".into() })
            } else {
                Err(Failure::Usage("input is neither a Betti table, a cohomology table nor a functional".into()))
            }
        }
    }
}

/// The root sequence and index whose cohomology facet has degree sequence
/// `f` and middle position `tau`.
fn facet_roots(f: &DegreeSequence, tau: usize) -> std::result::Result<(RootSequence, usize), Failure> {
    if tau == 0 || tau + 1 >= f.len() {
        return Err(Error::NotAFacet(format!("position {tau} has no neighbors on both sides in {f}")).into());
    }
    let z: Vec<i64> =
        (0..f.len()).filter(|&j| j + 1 != tau && j != tau + 1).map(|j| -f.get(j)).collect();
    let i = z.iter().position(|&r| r == -f.get(tau)).unwrap() + 1;
    let z = RootSequence::new(z)?;
    let (g, t, _) = cohomology_facet_data(&z, i)?;
    if &g != f || t != tau {
        return Err(Error::NotAFacet(format!("entries {} and {} of {f} are not adjacent to entry {tau}", tau - 1, tau + 1)).into());
    }
    Ok((z, i))
}

/// Runs one command line; returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let mode = cli.output;
    let mut inputs = Inputs { stdin, stdin_used: false };
    match dispatch(cli, &mut inputs) {
        Ok(r) => {
            let mut out = String::new();
            if mode != OutputMode::Text {
                out.push_str(&r.json);
                out.push('\n');
            }
            if mode != OutputMode::Json {
                out.push_str(&r.text);
            }
            let _ = stdout.write_all(out.as_bytes());
            0
        }
        Err(f) => {
            let _ = writeln!(stderr, "{}", f.report());
            f.code()
        }
    }
}
