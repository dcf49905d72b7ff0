//! Command-line interface tying the corona toolkit together: count coronas
//! by any of the three methods, cross-verify the methods against each other,
//! expand the generating functions, tabulate totals, and render coronas to
//! SVG files.
//!
//! Exit codes: 0 on success, 1 on verification mismatch, 2 on invalid
//! arguments.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;

use corona::bruteforce::{enumerate_coronas, enumerate_count_only};
use corona::closedform;
use corona::lattice::{build_region, Shape};
use corona::render::{render_corona, StyleConfig};
use corona::transfer;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest accepted side length. Keeps every per-size count below 2^127 so
/// the JSON reports can carry counts as plain integers.
const MAX_SIDE: u32 = 2_000_000;

#[derive(Parser)]
#[command(
    name = "corona",
    version,
    about = "Count, verify, and draw coronas (boundary lozenge tilings) of hexagons and diamonds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count coronas of one region with a single method.
    Count(CountArgs),
    /// Run several methods and check that their breakdowns agree.
    Verify(VerifyArgs),
    /// Expand the generating function of the totals.
    Gf(GfArgs),
    /// Tabulate totals for all side-length tuples up to a bound.
    Table(TableArgs),
    /// Write SVG files for coronas in canonical enumeration order.
    Render(RenderArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum ShapeKind {
    Hexagon,
    Diamond,
    GenHexagon,
    GenDiamond,
}

impl ShapeKind {
    fn arity(self) -> usize {
        match self {
            ShapeKind::Hexagon | ShapeKind::Diamond => 1,
            ShapeKind::GenDiamond => 2,
            ShapeKind::GenHexagon => 3,
        }
    }

    fn name(self) -> &'static str {
        match self {
            ShapeKind::Hexagon => "hexagon",
            ShapeKind::Diamond => "diamond",
            ShapeKind::GenHexagon => "gen-hexagon",
            ShapeKind::GenDiamond => "gen-diamond",
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum Method {
    Closed,
    Transfer,
    Brute,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Transfer => "transfer",
            Method::Brute => "brute",
        }
    }
}

#[derive(Args)]
struct CountArgs {
    #[arg(long, value_enum)]
    shape: ShapeKind,
    /// Side lengths, comma separated (1, 2, or 3 values depending on shape).
    #[arg(long, value_delimiter = ',', required = true)]
    sides: Vec<u32>,
    #[arg(long, value_enum)]
    method: Method,
    /// Emit the report as JSON.
    #[arg(long)]
    json: bool,
    /// Run brute-force enumeration even above the perimeter ceiling.
    #[arg(long)]
    force: bool,
    /// Perimeter ceiling for brute-force enumeration.
    #[arg(long, default_value_t = 30)]
    max_perimeter: u64,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    shape: ShapeKind,
    #[arg(long, value_delimiter = ',', required = true)]
    sides: Vec<u32>,
    /// Methods to run and compare, comma separated.
    #[arg(long, value_enum, value_delimiter = ',', required = true)]
    methods: Vec<Method>,
    #[arg(long)]
    force: bool,
    #[arg(long, default_value_t = 30)]
    max_perimeter: u64,
}

#[derive(Args)]
struct GfArgs {
    /// Only hexagon and diamond have a single-parameter series.
    #[arg(long, value_enum)]
    shape: ShapeKind,
    /// Number of leading coefficients to print.
    #[arg(long, value_parser = clap::value_parser!(usize))]
    terms: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    shape: ShapeKind,
    /// Largest side length; every tuple with entries 1..=max is listed.
    #[arg(long)]
    max: u32,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long, value_enum)]
    shape: ShapeKind,
    #[arg(long, value_delimiter = ',', required = true)]
    sides: Vec<u32>,
    /// Output directory for the SVG files.
    #[arg(long)]
    out: PathBuf,
    /// Render only the first K coronas.
    #[arg(long)]
    limit: Option<usize>,
    #[arg(long)]
    force: bool,
    #[arg(long, default_value_t = 30)]
    max_perimeter: u64,
}

/// Parses `argv` and runs the selected subcommand, returning the process
/// exit code. Output goes to stdout, diagnostics to stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = err.print();
            return code;
        }
    };

    let outcome = match cli.command {
        Command::Count(args) => cmd_count(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Gf(args) => cmd_gf(args),
        Command::Table(args) => cmd_table(args),
        Command::Render(args) => cmd_render(args),
    };
    match outcome {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            EXIT_USAGE
        }
    }
}

fn resolve_shape(kind: ShapeKind, sides: &[u32]) -> Result<Shape, String> {
    if sides.len() != kind.arity() {
        return Err(format!(
            "{} takes {} side length(s), got {}",
            kind.name(),
            kind.arity(),
            sides.len()
        ));
    }
    for &side in sides {
        if side < 1 {
            return Err("side lengths must be at least 1".to_string());
        }
        if side > MAX_SIDE {
            return Err(format!("side lengths above {MAX_SIDE} are not supported"));
        }
    }
    Ok(match kind {
        ShapeKind::Hexagon => Shape::Hexagon(sides[0]),
        ShapeKind::Diamond => Shape::Diamond(sides[0]),
        ShapeKind::GenHexagon => Shape::GenHexagon(sides[0], sides[1], sides[2]),
        ShapeKind::GenDiamond => Shape::GenDiamond(sides[0], sides[1]),
    })
}

fn guard_brute(shape: Shape, max_perimeter: u64, force: bool, what: &str) -> Result<(), String> {
    if shape.perimeter() > max_perimeter && !force {
        return Err(format!(
            "{} for {} with perimeter {} exceeds the ceiling of {}; raise --max-perimeter or pass --force",
            what,
            shape.name(),
            shape.perimeter(),
            max_perimeter
        ));
    }
    Ok(())
}

/// A method's result in comparable form: per-size counts plus timing.
#[derive(Debug, Clone, PartialEq, Eq)]
struct MethodOutput {
    sizes: Vec<u64>,
    counts: Vec<BigUint>,
    total: BigUint,
    elapsed_ms: u128,
}

impl MethodOutput {
    fn to_polynomial(&self) -> corona::Polynomial {
        corona::Polynomial::from_terms(
            self.sizes
                .iter()
                .zip(&self.counts)
                .map(|(&size, count)| (size, count.clone().into())),
        )
    }
}

fn compute(shape: Shape, method: Method) -> MethodOutput {
    let start = Instant::now();
    let (sizes, counts): (Vec<u64>, Vec<BigUint>) = match method {
        Method::Closed => {
            let breakdown = match shape {
                Shape::Hexagon(n) => closedform::hexagon_counts(n.into()),
                Shape::Diamond(n) => closedform::diamond_counts(n.into()),
                Shape::GenHexagon(a, b, c) => {
                    closedform::gen_hexagon_counts(a.into(), b.into(), c.into())
                }
                Shape::GenDiamond(a, b) => closedform::gen_diamond_counts(a.into(), b.into()),
            };
            breakdown.pairs().into_iter().unzip()
        }
        Method::Transfer => {
            let trace = match shape {
                Shape::Hexagon(n) => transfer::hexagon_trace(n),
                Shape::Diamond(n) => transfer::diamond_trace(n),
                Shape::GenHexagon(a, b, c) => transfer::gen_hexagon_trace(a, b, c),
                Shape::GenDiamond(a, b) => transfer::gen_diamond_trace(a, b),
            }
            .expect("side lengths are validated before dispatch");
            trace
                .terms()
                .map(|(exp, coeff)| {
                    let count = coeff
                        .to_biguint()
                        .expect("counting coefficients are non-negative");
                    (exp, count)
                })
                .unzip()
        }
        Method::Brute => {
            let region = build_region(shape).expect("side lengths are validated before dispatch");
            let histogram = enumerate_count_only(&region);
            histogram
                .by_size()
                .iter()
                .map(|(&size, count)| (size, count.clone()))
                .unzip()
        }
    };
    let total = counts.iter().sum();
    MethodOutput {
        sizes,
        counts,
        total,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

#[derive(Serialize)]
struct CountReport {
    shape: String,
    sides: Vec<u32>,
    method: String,
    sizes: Vec<u64>,
    counts: Vec<u128>,
    total: String,
    elapsed_ms: u128,
}

impl CountReport {
    fn new(shape: Shape, sides: &[u32], method: &str, output: &MethodOutput) -> CountReport {
        CountReport {
            shape: shape.name().to_string(),
            sides: sides.to_vec(),
            method: method.to_string(),
            sizes: output.sizes.clone(),
            counts: output
                .counts
                .iter()
                .map(|c| u128::try_from(c).expect("counts fit u128 for supported side lengths"))
                .collect(),
            total: output.total.to_string(),
            elapsed_ms: output.elapsed_ms,
        }
    }
}

fn print_breakdown(output: &MethodOutput) {
    for (size, count) in output.sizes.iter().zip(&output.counts) {
        println!("  {size} lozenges: {count}");
    }
    println!("total: {}", output.total);
}

fn cmd_count(args: CountArgs) -> Result<i32, String> {
    let shape = resolve_shape(args.shape, &args.sides)?;
    if args.method == Method::Brute {
        guard_brute(shape, args.max_perimeter, args.force, "brute-force count")?;
    }
    let output = compute(shape, args.method);
    if args.json {
        let report = CountReport::new(shape, &args.sides, args.method.name(), &output);
        println!("{}", serde_json::to_string(&report).expect("report serializes"));
    } else {
        println!(
            "shape: {}  sides: {}  method: {}",
            shape.name(),
            join_sides(&args.sides),
            args.method.name()
        );
        if args.method == Method::Transfer {
            // Histogram lines read upward; the trace polynomial is the
            // conventional descending rendering of the same data.
            println!("trace: {}", output.to_polynomial().format_terms(false));
        }
        print_breakdown(&output);
        println!("elapsed: {} ms", output.elapsed_ms);
    }
    Ok(EXIT_OK)
}

/// Human-readable differences between two method outputs; empty when the
/// breakdowns agree exactly.
fn diff_outputs(
    name_a: &str,
    a: &MethodOutput,
    name_b: &str,
    b: &MethodOutput,
) -> Vec<String> {
    let mut diffs = Vec::new();
    if a.sizes != b.sizes {
        diffs.push(format!(
            "sizes differ: {name_a} reports {:?}, {name_b} reports {:?}",
            a.sizes, b.sizes
        ));
        return diffs;
    }
    for ((size, ca), cb) in a.sizes.iter().zip(&a.counts).zip(&b.counts) {
        if ca != cb {
            diffs.push(format!(
                "count at {size} lozenges differs: {name_a}={ca}, {name_b}={cb}"
            ));
        }
    }
    if a.total != b.total {
        diffs.push(format!(
            "totals differ: {name_a}={}, {name_b}={}",
            a.total, b.total
        ));
    }
    diffs
}

fn cmd_verify(args: VerifyArgs) -> Result<i32, String> {
    let shape = resolve_shape(args.shape, &args.sides)?;
    if args.methods.is_empty() {
        return Err("--methods must name at least one method".to_string());
    }
    if args.methods.contains(&Method::Brute) {
        guard_brute(shape, args.max_perimeter, args.force, "brute-force verification")?;
    }

    let outputs: Vec<(&'static str, MethodOutput)> = args
        .methods
        .iter()
        .map(|&m| (m.name(), compute(shape, m)))
        .collect();

    for (name, output) in &outputs {
        println!(
            "{name:>8}: total {} in {} ms",
            output.total, output.elapsed_ms
        );
    }

    let (reference_name, reference) = &outputs[0];
    let mut all_diffs = Vec::new();
    for (name, output) in &outputs[1..] {
        all_diffs.extend(diff_outputs(reference_name, reference, name, output));
    }

    if all_diffs.is_empty() {
        let mut summary = String::new();
        for (size, count) in reference.sizes.iter().zip(&reference.counts) {
            let _ = write!(summary, "{}{size}:{count}", if summary.is_empty() { "" } else { ", " });
        }
        println!(
            "agreement: {} methods report {{{summary}}} on {} {}",
            outputs.len(),
            shape.name(),
            join_sides(&args.sides)
        );
        Ok(EXIT_OK)
    } else {
        for diff in &all_diffs {
            println!("mismatch: {diff}");
        }
        Ok(EXIT_MISMATCH)
    }
}

#[derive(Serialize)]
struct GfReport {
    shape: String,
    terms: usize,
    coefficients: Vec<String>,
}

fn cmd_gf(args: GfArgs) -> Result<i32, String> {
    if args.terms < 1 {
        return Err("--terms must be at least 1".to_string());
    }
    let coefficients = match args.shape {
        ShapeKind::Hexagon => closedform::hexagon_gf_series(args.terms),
        ShapeKind::Diamond => closedform::diamond_gf_series(args.terms),
        other => {
            return Err(format!(
                "gf supports hexagon and diamond only, got {}",
                other.name()
            ));
        }
    };
    if args.json {
        let report = GfReport {
            shape: args.shape.name().to_string(),
            terms: args.terms,
            coefficients: coefficients.iter().map(BigUint::to_string).collect(),
        };
        println!("{}", serde_json::to_string(&report).expect("report serializes"));
    } else {
        for coefficient in &coefficients {
            println!("{coefficient}");
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct TableRow {
    sides: Vec<u32>,
    total: String,
}

fn side_tuples(kind: ShapeKind, max: u32) -> Vec<Vec<u32>> {
    let range = 1..=max;
    match kind.arity() {
        1 => range.map(|n| vec![n]).collect(),
        2 => range
            .clone()
            .flat_map(|a| range.clone().map(move |b| vec![a, b]))
            .collect(),
        _ => range
            .clone()
            .flat_map(|a| {
                let range = range.clone();
                range.clone().flat_map(move |b| {
                    let range = range.clone();
                    range.map(move |c| vec![a, b, c])
                })
            })
            .collect(),
    }
}

fn cmd_table(args: TableArgs) -> Result<i32, String> {
    if args.max < 1 {
        return Err("--max must be at least 1".to_string());
    }
    if args.max > MAX_SIDE {
        return Err(format!("--max above {MAX_SIDE} is not supported"));
    }
    let rows: Vec<TableRow> = side_tuples(args.shape, args.max)
        .into_iter()
        .map(|sides| {
            let shape = resolve_shape(args.shape, &sides).expect("tuples are well-formed");
            let output = compute(shape, Method::Closed);
            TableRow {
                sides,
                total: output.total.to_string(),
            }
        })
        .collect();

    if args.json {
        println!("{}", serde_json::to_string(&rows).expect("rows serialize"));
    } else {
        println!("{:<16} total", "sides");
        for row in &rows {
            println!("{:<16} {}", join_sides(&row.sides), row.total);
        }
    }
    Ok(EXIT_OK)
}

fn cmd_render(args: RenderArgs) -> Result<i32, String> {
    let shape = resolve_shape(args.shape, &args.sides)?;
    guard_brute(shape, args.max_perimeter, args.force, "rendering")?;
    let region = build_region(shape).expect("side lengths are validated before dispatch");
    std::fs::create_dir_all(&args.out)
        .map_err(|e| format!("cannot create {}: {e}", args.out.display()))?;

    let style = StyleConfig::default();
    let prefix = format!("{}_{}", shape.name(), args.sides_label());
    let mut written = 0usize;
    let mut index = 0usize;
    let mut io_error: Option<String> = None;
    enumerate_coronas(&region, |corona| {
        let within_limit = args.limit.is_none_or(|k| index < k);
        if within_limit && io_error.is_none() {
            let svg = render_corona(&region, corona, &style)
                .expect("enumerated coronas are valid by construction");
            let path = args.out.join(format!("{prefix}_{index:05}.svg"));
            match std::fs::write(&path, svg) {
                Ok(()) => written += 1,
                Err(e) => io_error = Some(format!("cannot write {}: {e}", path.display())),
            }
        }
        index += 1;
    });
    if let Some(message) = io_error {
        eprintln!("error: {message}");
        return Ok(EXIT_MISMATCH);
    }
    println!(
        "wrote {written} of {index} coronas to {}",
        args.out.display()
    );
    Ok(EXIT_OK)
}

impl RenderArgs {
    fn sides_label(&self) -> String {
        self.sides
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join("-")
    }
}

fn join_sides(sides: &[u32]) -> String {
    sides
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}
