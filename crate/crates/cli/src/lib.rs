//! Command-line front end for `latreg-core`.
//!
//! [`run`] parses an argument vector, dispatches to the library and returns
//! the exit code together with everything that would be printed, so the
//! binary is a thin wrapper and tests can drive it in-process.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use latreg_core::ffvanish::{
    enumerate_degenerate_torus, enumerate_parameterized, hilbert_function_points_table, regularity_points,
};
use latreg_core::gb::buchberger;
use latreg_core::graph::{edge_point_set, reg_bipartite_blocks, reg_bounds_bipartite, reg_colon_certificate};
use latreg_core::hilbert::{ideal_hilbert, reg_cm, HilbertSeries};
use latreg_core::intlat::{saturate_lattice, torsion_order};
use latreg_core::invariants::{degenerate_torus_invariants, mcurve_degree, mcurve_regularity, prescribe_regularity};
use latreg_core::numsgp::frobenius_number;
use latreg_core::ring::parse_binomial_lines;
use latreg_core::{
    BinomialIdeal, CurveSpec, Error, Grading, Graph, Lattice, MonomialOrder, NumericalSemigroup, PointSet, PrimeField,
    TorusSpec,
};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "latreg", about = "Regularity, degree and Hilbert series of lattice and vanishing ideals")]
struct Cli {
    /// Emit a single JSON object instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Frobenius number of the semigroup generated by the arguments.
    Frobenius {
        #[arg(required = true)]
        generators: Vec<u64>,
    },
    /// Integer lattice operations on a lattice JSON file.
    Lattice {
        #[arg(value_enum)]
        op: LatticeOp,
        file: PathBuf,
    },
    /// Reduced Gröbner basis of a binomial ideal.
    Gb {
        #[arg(long, value_enum, default_value = "grevlex")]
        order: OrderArg,
        #[command(flatten)]
        weights: WeightsArg,
        /// Binomials, or files with one binomial per line.
        #[arg(required = true)]
        inputs: Vec<String>,
    },
    /// Hilbert series of S/I for an ideal file.
    Hilbert {
        #[command(flatten)]
        weights: WeightsArg,
        /// Last degree of the printed Hilbert function.
        #[arg(long)]
        terms: Option<usize>,
        file: PathBuf,
    },
    /// Regularity and degree of the monomial curve with the given exponents.
    Mcurve {
        #[arg(required = true)]
        exponents: Vec<u32>,
    },
    /// Regularity and degree of a degenerate torus over F_q.
    Torus {
        #[arg(long)]
        q: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        v: Vec<u64>,
    },
    /// Degenerate torus whose regularity and degree match the given curve.
    Prescribe {
        #[arg(required = true)]
        exponents: Vec<u32>,
    },
    /// Hilbert function and regularity of a parameterized point set.
    Vanish {
        #[arg(long)]
        q: u64,
        /// Degenerate torus exponents.
        #[arg(long, value_delimiter = ',', conflicts_with = "monomials", required_unless_present = "monomials")]
        torus: Option<Vec<u32>>,
        /// JSON list of exponent vectors, one per coordinate.
        #[arg(long)]
        monomials: Option<String>,
    },
    /// Regularity of the edge point set of a bipartite graph.
    #[command(name = "graph-reg")]
    GraphReg {
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value = "blocks")]
        method: Method,
        file: PathBuf,
    },
    /// Print the version.
    Version,
}

#[derive(Args, Debug)]
struct WeightsArg {
    /// Comma-separated positive weights; standard grading when omitted.
    #[arg(long, value_delimiter = ',')]
    weights: Option<Vec<u32>>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum LatticeOp {
    Snf,
    Torsion,
    Saturate,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Method {
    Blocks,
    Oracle,
    Colon,
    Bounds,
}

/// `{"ambient": s, "generators": [[…], …]}`.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct LatticeJson {
    pub ambient: usize,
    pub generators: Vec<Vec<i64>>,
}

/// `{"n": 7, "edges": [[1, 2], …]}` with 1-based vertices.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Usage(format!("{}: {e}", e.name())),
            e => Failure::Domain(e),
        }
    }
}

type Res<T> = std::result::Result<T, Failure>;

/// A command result as text lines and as a JSON object.
struct Report {
    text: String,
    json: Value,
}

impl Report {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Report { text: text.into(), json }
    }
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (rendered, String::new()) } else { (String::new(), rendered) };
            return Output { code, stdout, stderr };
        }
    };
    match dispatch(&cli.command) {
        Ok(r) => {
            let mut stdout =
                if cli.json { serde_json::to_string(&r.json).expect("JSON values serialize") } else { r.text };
            stdout.push('\n');
            Output { code: 0, stdout, stderr: String::new() }
        }
        Err(Failure::Usage(msg)) => Output { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Domain(e)) => {
            Output { code: 1, stdout: String::new(), stderr: format!("error: {}: {e}\n", e.name()) }
        }
    }
}

fn dispatch(cmd: &Command) -> Res<Report> {
    match cmd {
        Command::Frobenius { generators } => {
            let g = frobenius_number(&NumericalSemigroup::new(generators)?);
            Ok(Report::new(g.to_string(), json!({ "generators": generators, "frobenius": g })))
        }
        Command::Lattice { op, file } => lattice(*op, file),
        Command::Gb { order, weights, inputs } => gb(*order, weights.weights.as_deref(), inputs),
        Command::Hilbert { weights, terms, file } => hilbert(weights.weights.as_deref(), *terms, file),
        Command::Mcurve { exponents } => {
            let spec = CurveSpec::from_exponents(exponents)?;
            let (reg, deg) = (mcurve_regularity(&spec)?, mcurve_degree(&spec)?);
            Ok(Report::new(format!("reg={reg} deg={deg}"), json!({ "d": exponents, "reg": reg, "deg": deg })))
        }
        Command::Torus { q, v } => {
            let spec = TorusSpec::new(*q, v.clone())?;
            let (reg, deg) = degenerate_torus_invariants(&spec)?;
            let d = spec.d().weights().to_vec();
            Ok(Report::new(
                format!("d={} reg={reg} deg={deg}", join(&d, ",")),
                json!({ "q": q, "v": v, "d": d, "reg": reg, "deg": deg }),
            ))
        }
        Command::Prescribe { exponents } => {
            let t = prescribe_regularity(&Grading::new(exponents.clone())?)?;
            Ok(Report::new(
                format!("q={} v={}", t.q(), join(t.v(), ",")),
                json!({ "d": exponents, "q": t.q(), "v": t.v() }),
            ))
        }
        Command::Vanish { q, torus, monomials } => vanish(*q, torus.as_deref(), monomials.as_deref()),
        Command::GraphReg { q, method, file } => graph_reg(*q, *method, file),
        Command::Version => Ok(Report::new(format!("latreg {VERSION}"), json!({ "version": VERSION }))),
    }
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn read(path: &Path) -> Res<String> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Res<T> {
    let text = read(path)?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn grading_for(weights: Option<&[u32]>, num_vars: usize) -> Res<Grading> {
    match weights {
        Some(w) => {
            if w.len() < num_vars {
                return Err(Failure::Usage(format!("{} weights given for {num_vars} variables", w.len())));
            }
            Ok(Grading::new(w.to_vec())?)
        }
        None => Ok(Grading::standard(num_vars)),
    }
}

/// Reads an ideal file: one binomial per line, blank lines and `#`
/// comments ignored. `num_vars` fixes the ring when given.
pub fn parse_ideal_file(path: &Path, num_vars: Option<usize>) -> Result<BinomialIdeal, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    parse_ideal_text(&text, num_vars)
}

fn parse_ideal_text(text: &str, num_vars: Option<usize>) -> Result<BinomialIdeal, Error> {
    let (bins, n) = parse_binomial_lines(text, num_vars)?;
    BinomialIdeal::new(n, bins, None)
}

fn lattice(op: LatticeOp, file: &Path) -> Res<Report> {
    let spec: LatticeJson = read_json(file)?;
    let l = Lattice::from_rows(spec.ambient, &spec.generators)?;
    Ok(match op {
        LatticeOp::Snf => {
            let inv: Vec<String> = l.smith_invariants().iter().map(ToString::to_string).collect();
            let torsion = torsion_order(&l).to_string();
            Report::new(
                format!("invariants: {}\nrank: {}\ntorsion: {torsion}", inv.join(" "), l.rank()),
                json!({ "invariants": inv, "rank": l.rank(), "torsion": torsion }),
            )
        }
        LatticeOp::Torsion => {
            let t = torsion_order(&l).to_string();
            Report::new(t.clone(), json!({ "torsion": t }))
        }
        LatticeOp::Saturate => {
            let rows = saturate_lattice(&l).basis().to_i64_rows()?;
            let text = rows.iter().map(|r| format!("[{}]", join(r, ", "))).collect::<Vec<_>>().join("\n");
            let out = LatticeJson { ambient: spec.ambient, generators: rows };
            Report::new(text, serde_json::to_value(out).expect("lattice serializes"))
        }
    })
}

fn gb(order: OrderArg, weights: Option<&[u32]>, inputs: &[String]) -> Res<Report> {
    let mut text = String::new();
    for input in inputs {
        let p = Path::new(input);
        if p.is_file() {
            text.push_str(&read(p)?);
        } else {
            text.push_str(input);
        }
        text.push('\n');
    }
    let (_, found) = parse_binomial_lines(&text, None)?;
    let n = weights.map_or(found, |w| w.len().max(found));
    let g = grading_for(weights, n)?;
    let ideal = parse_ideal_text(&text, Some(n))?;
    let (name, mo) = match order {
        OrderArg::Grevlex => ("grevlex", MonomialOrder::WeightedGrevlex(g)),
        OrderArg::Lex => ("lex", MonomialOrder::Lex),
    };
    let basis = buchberger(&ideal, &mo)?;
    let elems: Vec<String> = basis.elements().iter().map(ToString::to_string).collect();
    Ok(Report::new(elems.join("\n"), json!({ "order": name, "num_vars": n, "basis": elems })))
}

fn hilbert(weights: Option<&[u32]>, terms: Option<usize>, file: &Path) -> Res<Report> {
    let text = read(file)?;
    let (_, found) = parse_binomial_lines(&text, None)?;
    let n = weights.map_or(found, |w| w.len().max(found));
    let g = grading_for(weights, n)?;
    let ideal = parse_ideal_text(&text, Some(n))?.with_grading(g.clone())?;
    let f = ideal_hilbert(&ideal, &ideal.default_order(), &g)?;
    let a = f.a_invariant()?;
    let dim = f.dimension()?;
    let reg = cm_regularity(&f, n, dim)?;
    let upto = terms.unwrap_or_else(|| (a + 2).max(reg.unwrap_or(0) + 2).max(10) as usize);
    let values: Vec<String> = f.expand(upto)?.iter().map(ToString::to_string).collect();
    let reg_text = reg.map_or_else(|| format!("n/a (dimension {dim})"), |r| r.to_string());
    let numerator = f.numerator().to_string();
    Ok(Report::new(
        format!(
            "numerator: {numerator}\nseries: {f}\na-invariant: {a}\nH(0..{upto}): {}\nreg (CM dim 1): {reg_text}",
            values.join(" ")
        ),
        json!({
            "weights": g.weights(),
            "numerator": numerator,
            "a_invariant": a,
            "dimension": dim,
            "hilbert_function": values,
            "reg": reg,
        }),
    ))
}

fn cm_regularity(f: &HilbertSeries, n: usize, dim: usize) -> Res<Option<i64>> {
    if dim != 1 {
        return Ok(None);
    }
    Ok(Some(reg_cm(f, n - 1)?))
}

fn field(q: u64) -> Res<PrimeField> {
    let f = PrimeField::new(q)?;
    if q < 3 {
        return Err(Failure::Domain(Error::UnsupportedField(q)));
    }
    Ok(f)
}

fn point_report(x: &PointSet, extra: Value) -> Res<Report> {
    let reg = regularity_points(x)?;
    let table = hilbert_function_points_table(x, reg + 1);
    let mut json = json!({ "num_points": x.len(), "hilbert_function": table, "reg": reg });
    if let (Value::Object(m), Value::Object(e)) = (&mut json, extra) {
        m.extend(e);
    }
    Ok(Report::new(format!("|X|={}\nH(0..{}): {}\nreg={reg}", x.len(), reg + 1, join(&table, " ")), json))
}

fn vanish(q: u64, torus: Option<&[u32]>, monomials: Option<&str>) -> Res<Report> {
    let f = field(q)?;
    let x = match (torus, monomials) {
        (Some(v), _) => enumerate_degenerate_torus(&f, v)?,
        (None, Some(m)) => {
            let vs: Vec<Vec<u32>> = serde_json::from_str(m).map_err(|e| Failure::Usage(format!("--monomials: {e}")))?;
            enumerate_parameterized(&f, &vs)?
        }
        (None, None) => return Err(Failure::Usage("one of --torus or --monomials is required".into())),
    };
    point_report(&x, json!({ "q": q }))
}

fn graph_reg(q: u64, method: Method, file: &Path) -> Res<Report> {
    let spec: GraphJson = read_json(file)?;
    let g = Graph::from_one_based(spec.n, &spec.edges)?;
    let f = field(q)?;
    Ok(match method {
        Method::Blocks => {
            let reg = reg_bipartite_blocks(&g, &f)?;
            Report::new(format!("reg={reg}"), json!({ "method": "blocks", "reg": reg }))
        }
        Method::Oracle => {
            let x = edge_point_set(&g, &f)?;
            let reg = regularity_points(&x)?;
            Report::new(
                format!("reg={reg} |X|={}", x.len()),
                json!({ "method": "oracle", "reg": reg, "num_points": x.len() }),
            )
        }
        Method::Colon => {
            let c = reg_colon_certificate(&g, &f)?;
            Report::new(
                format!("reg={} N={} |a|={} i0={} |X|={}", c.regularity, c.power, c.degree_a, c.i0, c.num_points),
                json!({
                    "method": "colon",
                    "reg": c.regularity,
                    "power": c.power,
                    "degree_a": c.degree_a,
                    "i0": c.i0,
                    "num_points": c.num_points,
                }),
            )
        }
        Method::Bounds => {
            let (lo, hi) = reg_bounds_bipartite(&g, &f)?;
            Report::new(format!("lower={lo} upper={hi}"), json!({ "method": "bounds", "lower": lo, "upper": hi }))
        }
    })
}
