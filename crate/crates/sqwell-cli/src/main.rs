//! Command-line front end: solve single wells, emit the benchmark error
//! table, and emit the error-versus-level figure dataset.

mod format;

use clap::{Args, Parser, Subcommand};
use format::sig;
use sqwell::analysis::{
    asym_garrett, build_figure_data, build_table, error_row, lowest_order_series, ErrorRow,
    FigureSeries,
};
use sqwell::dimensionless::{
    energy_from_k, n_max_asymmetric, n_max_symmetric, well_strength_from_physical, AsymmetricWell,
    LevelIndex, PhysicalWell, UnitSystem, WellStrength,
};
use sqwell::garrett::{y_consistent, y_two_iteration, Variant};
use sqwell::reference::{barker_k, solve_exact_asymmetric, solve_exact_symmetric};
use std::f64::consts::PI;
use std::fmt::Write as _;
use std::process::ExitCode;

const EXIT_HELP: &str =
    "Exit codes:\n  0  success\n  2  usage or domain error\n  3  output could not be written";

#[derive(Parser)]
#[command(
    name = "sqwell",
    version,
    about = "Bound-state spectra of finite rectangular quantum wells",
    after_help = EXIT_HELP
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve bound states of one well and print per-variant records
    Solve(SolveArgs),
    /// Emit the benchmark error table as CSV
    Table(TableArgs),
    /// Emit the error-versus-level figure dataset as long-format CSV
    Figure(FigureArgs),
}

#[derive(Args)]
struct SolveArgs {
    /// Symmetric well strength P
    #[arg(long = "P", value_name = "REAL", conflicts_with_all = ["p3", "p1", "units"])]
    p: Option<f64>,
    /// Left wall strength of an asymmetric well
    #[arg(long = "P3", value_name = "REAL", requires = "p1")]
    p3: Option<f64>,
    /// Right wall strength of an asymmetric well
    #[arg(long = "P1", value_name = "REAL", requires = "p3")]
    p1: Option<f64>,
    /// Unit system for physical input: si (kg, J, m) or evnm (electron
    /// masses, eV, nm); adds an E column with level energies
    #[arg(long, value_name = "SYSTEM", conflicts_with_all = ["p3", "p1"])]
    units: Option<String>,
    /// Particle mass, in the chosen unit system
    #[arg(long, value_name = "REAL", requires = "units")]
    mass: Option<f64>,
    /// Well depth, in the chosen unit system
    #[arg(long, value_name = "REAL", requires = "units")]
    depth: Option<f64>,
    /// Well width, in the chosen unit system
    #[arg(long, value_name = "REAL", requires = "units")]
    width: Option<f64>,
    /// Level index, or 'all' for every bound level
    #[arg(long, value_name = "N|all", default_value = "all")]
    n: String,
    /// exact|g4|g0|g2|barker|all for symmetric wells,
    /// exact|composite|all for asymmetric ones
    #[arg(long, value_name = "VARIANT", default_value = "all")]
    variant: String,
    /// Output syntax
    #[arg(long, value_name = "FMT", default_value = "csv", value_parser = ["csv", "json"])]
    format: String,
    /// Significant digits for floating output (default 6, or SQW_DIGITS)
    #[arg(long, value_name = "1..17")]
    digits: Option<u8>,
}

#[derive(Args)]
struct TableArgs {
    /// Strength range lo:hi, stepped by 1, both ends included
    #[arg(long = "P-range", value_name = "LO:HI", conflicts_with = "p_list")]
    p_range: Option<String>,
    /// Comma-separated strengths
    #[arg(long = "P-list", value_name = "LIST")]
    p_list: Option<String>,
    /// Output path, or - for stdout
    #[arg(long, value_name = "PATH", default_value = "-")]
    out: String,
    /// Evaluate wells across threads; the output bytes are identical
    #[arg(long)]
    parallel: bool,
    /// Significant digits for floating output (default 6, or SQW_DIGITS)
    #[arg(long, value_name = "1..17")]
    digits: Option<u8>,
}

#[derive(Args)]
struct FigureArgs {
    /// Symmetric well strength for the per-variant series
    #[arg(long = "P", value_name = "REAL", default_value_t = 10.0)]
    p: f64,
    /// Left wall strength for the asymmetric series
    #[arg(long = "P3", value_name = "REAL", default_value_t = 10.0)]
    p3: f64,
    /// Right wall strength for the asymmetric series
    #[arg(long = "P1", value_name = "REAL", default_value_t = 8.0)]
    p1: f64,
    /// Output path, or - for stdout
    #[arg(long, value_name = "PATH")]
    out: String,
    /// Significant digits for floating output (default 6, or SQW_DIGITS)
    #[arg(long, value_name = "1..17")]
    digits: Option<u8>,
}

enum Failure {
    Usage(String),
    Io(String),
}

fn domain(e: sqwell::Error) -> Failure {
    Failure::Usage(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(a) => cmd_solve(a),
        Command::Table(a) => cmd_table(a),
        Command::Figure(a) => cmd_figure(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn resolve_digits(flag: Option<u8>) -> Result<usize, Failure> {
    let d: i64 = match flag {
        Some(d) => i64::from(d),
        None => match std::env::var("SQW_DIGITS") {
            Ok(s) => s.trim().parse().map_err(|_| {
                Failure::Usage(format!(
                    "SQW_DIGITS must be an integer in 1..=17, got {s:?}"
                ))
            })?,
            Err(_) => 6,
        },
    };
    if !(1..=17).contains(&d) {
        return Err(Failure::Usage(format!("digits must be in 1..=17, got {d}")));
    }
    Ok(d as usize)
}

fn parse_n(s: &str) -> Result<Option<u32>, Failure> {
    if s == "all" {
        return Ok(None);
    }
    match s.parse::<u32>() {
        Ok(n) if n >= 1 => Ok(Some(n)),
        _ => Err(Failure::Usage(format!(
            "--n takes a positive integer or 'all', got {s:?}"
        ))),
    }
}

fn parse_units(s: &str) -> Result<UnitSystem, Failure> {
    match s {
        "si" => Ok(UnitSystem::Si),
        "evnm" => Ok(UnitSystem::EvNm),
        _ => Err(Failure::Usage(format!(
            "--units takes 'si' or 'evnm', got {s:?}"
        ))),
    }
}

fn strength(v: f64, what: &str) -> Result<WellStrength, Failure> {
    WellStrength::new(v).map_err(|_| Failure::Usage(format!("{what} must be positive, got {v}")))
}

fn write_out(path: &str, content: &str) -> Result<(), Failure> {
    if path == "-" {
        use std::io::Write;
        std::io::stdout()
            .write_all(content.as_bytes())
            .map_err(|e| Failure::Io(format!("cannot write to stdout: {e}")))
    } else {
        std::fs::write(path, content).map_err(|e| Failure::Io(format!("cannot write {path}: {e}")))
    }
}

/// One output cell: structurally absent, past the iteration's reach, or a
/// number. Unphysical never leaks as NaN.
#[derive(Clone, Copy)]
enum Cell {
    Absent,
    Unphysical,
    Val(f64),
}

impl Cell {
    fn csv(self, digits: usize) -> String {
        match self {
            Cell::Absent => String::new(),
            Cell::Unphysical => "unphysical".into(),
            Cell::Val(v) => sig(v, digits),
        }
    }

    fn json(self, digits: usize) -> String {
        match self {
            Cell::Absent | Cell::Unphysical => "null".into(),
            Cell::Val(v) => sig(v, digits),
        }
    }

    fn from_option(v: Option<f64>) -> Cell {
        match v {
            Some(v) => Cell::Val(v),
            None => Cell::Unphysical,
        }
    }
}

fn variant_token(v: Variant) -> &'static str {
    match v {
        Variant::Consistent => "g4",
        Variant::TwoIteration => "g2",
        Variant::LowestOrder => "g0",
    }
}

const SYM_VARIANTS: [&str; 5] = ["exact", "g4", "g0", "g2", "barker"];
const ASYM_VARIANTS: [&str; 2] = ["exact", "composite"];

fn cmd_solve(a: SolveArgs) -> Result<(), Failure> {
    let digits = resolve_digits(a.digits)?;
    let n_req = parse_n(&a.n)?;
    if a.p3.is_some() {
        solve_asymmetric(&a, n_req, digits)
    } else {
        solve_symmetric(&a, n_req, digits)
    }
}

struct SymRecord {
    n: u32,
    variant: &'static str,
    unphysical: bool,
    y: Cell,
    k: Cell,
    eps: Cell,
    energy: Option<Cell>,
}

fn solve_symmetric(a: &SolveArgs, n_req: Option<u32>, digits: usize) -> Result<(), Failure> {
    let physical: Option<(PhysicalWell, UnitSystem)> = match (&a.units, a.mass, a.depth, a.width) {
        (None, None, None, None) => None,
        (Some(u), Some(mass), Some(depth), Some(width)) => {
            Some((PhysicalWell { mass, depth, width }, parse_units(u)?))
        }
        _ => {
            return Err(Failure::Usage(
                "--units requires --mass, --depth and --width".into(),
            ))
        }
    };
    let p = match (a.p, &physical) {
        (Some(v), None) => strength(v, "--P")?,
        (None, Some((w, u))) => well_strength_from_physical(w, *u).map_err(domain)?,
        (None, None) => {
            return Err(Failure::Usage(
                "one of --P, --P3/--P1, or --units with --mass/--depth/--width is required".into(),
            ))
        }
        (Some(_), Some(_)) => unreachable!("clap conflict rules"),
    };

    let variants: Vec<&'static str> = match a.variant.as_str() {
        "all" => SYM_VARIANTS.to_vec(),
        v => match SYM_VARIANTS.iter().find(|t| **t == v) {
            Some(t) => vec![t],
            None => {
                return Err(Failure::Usage(format!(
                    "--variant takes exact|g4|g0|g2|barker|all for symmetric wells, got {v:?}"
                )))
            }
        },
    };

    let levels: Vec<u32> = match n_req {
        None => (1..=n_max_symmetric(p)).collect(),
        Some(n) => {
            LevelIndex::for_symmetric(p, n).map_err(domain)?;
            vec![n]
        }
    };

    let mut records = Vec::new();
    for &n in &levels {
        let k_ex = solve_exact_symmetric(p, n).map_err(domain)?.k;
        let eps_of = |k: f64| (k_ex - k) / k_ex;
        for &variant in &variants {
            let (y, k, eps, unphysical) = match variant {
                "exact" => (Cell::Absent, Cell::Val(k_ex), Cell::Val(0.0), false),
                "g4" => {
                    let y = y_consistent(p, n)
                        .map_err(domain)?
                        .y
                        .value()
                        .ok_or_else(|| Failure::Usage("no consistent root".into()))?;
                    let k = n as f64 * PI / (1.0 + y);
                    (Cell::Val(y), Cell::Val(k), Cell::Val(eps_of(k)), false)
                }
                "g0" => {
                    let y = lowest_order_series(p);
                    let k = n as f64 * PI / (1.0 + y);
                    (Cell::Val(y), Cell::Val(k), Cell::Val(eps_of(k)), false)
                }
                "g2" => match y_two_iteration(p, n).y.value() {
                    Some(y) => {
                        let k = n as f64 * PI / (1.0 + y);
                        (Cell::Val(y), Cell::Val(k), Cell::Val(eps_of(k)), false)
                    }
                    None => (Cell::Unphysical, Cell::Unphysical, Cell::Unphysical, true),
                },
                "barker" => {
                    let k = barker_k(p, n).k;
                    (Cell::Absent, Cell::Val(k), Cell::Val(eps_of(k)), false)
                }
                _ => unreachable!("validated above"),
            };
            let energy = match &physical {
                None => None,
                Some((w, u)) => Some(match k {
                    Cell::Val(kv) => Cell::Val(energy_from_k(w, *u, kv).map_err(domain)?),
                    _ => Cell::Unphysical,
                }),
            };
            records.push(SymRecord {
                n,
                variant,
                unphysical,
                y,
                k,
                eps,
                energy,
            });
        }
    }

    let with_energy = physical.is_some();
    let ps = sig(p.value(), digits);
    let mut out = String::new();
    if a.format == "csv" {
        out.push_str("P,n,variant,unphysical,y,K,eps");
        if with_energy {
            out.push_str(",E");
        }
        out.push('\n');
        for r in &records {
            let _ = write!(
                out,
                "{ps},{},{},{},{},{},{}",
                r.n,
                r.variant,
                r.unphysical,
                r.y.csv(digits),
                r.k.csv(digits),
                r.eps.csv(digits)
            );
            if let Some(e) = r.energy {
                let _ = write!(out, ",{}", e.csv(digits));
            }
            out.push('\n');
        }
    } else {
        out.push_str("[\n");
        for (i, r) in records.iter().enumerate() {
            let _ = write!(
                out,
                "  {{\"P\":{ps},\"n\":{},\"variant\":\"{}\",\"unphysical\":{},\"y\":{},\"K\":{},\"eps\":{}",
                r.n,
                r.variant,
                r.unphysical,
                r.y.json(digits),
                r.k.json(digits),
                r.eps.json(digits)
            );
            if let Some(e) = r.energy {
                let _ = write!(out, ",\"E\":{}", e.json(digits));
            }
            out.push('}');
            if i + 1 < records.len() {
                out.push(',');
            }
            out.push('\n');
        }
        out.push_str("]\n");
    }
    write_out("-", &out)
}

struct AsymRecord {
    n: u32,
    variant: &'static str,
    left: Option<&'static str>,
    right: Option<&'static str>,
    y_left: Cell,
    y_right: Cell,
    k: Cell,
    eps: Cell,
}

fn solve_asymmetric(a: &SolveArgs, n_req: Option<u32>, digits: usize) -> Result<(), Failure> {
    if a.mass.is_some() || a.depth.is_some() || a.width.is_some() {
        return Err(Failure::Usage(
            "physical input applies to symmetric wells only".into(),
        ));
    }
    let left = strength(a.p3.expect("dispatch requires --P3"), "--P3")?;
    let right = strength(a.p1.expect("clap requires --P1 with --P3"), "--P1")?;
    let w = AsymmetricWell::new(left, right);

    let variants: Vec<&'static str> = match a.variant.as_str() {
        "all" => ASYM_VARIANTS.to_vec(),
        v => match ASYM_VARIANTS.iter().find(|t| **t == v) {
            Some(t) => vec![t],
            None => {
                return Err(Failure::Usage(format!(
                    "--variant takes exact|composite|all for asymmetric wells, got {v:?}"
                )))
            }
        },
    };

    let levels: Vec<u32> = match n_req {
        None => (1..=n_max_asymmetric(&w)).collect(),
        Some(n) => {
            LevelIndex::for_asymmetric(&w, n).map_err(domain)?;
            vec![n]
        }
    };

    let mut records = Vec::new();
    for &n in &levels {
        for &variant in &variants {
            let rec = match variant {
                "exact" => {
                    let k = solve_exact_asymmetric(&w, n).map_err(domain)?.k;
                    AsymRecord {
                        n,
                        variant,
                        left: None,
                        right: None,
                        y_left: Cell::Absent,
                        y_right: Cell::Absent,
                        k: Cell::Val(k),
                        eps: Cell::Val(0.0),
                    }
                }
                "composite" => {
                    let r = asym_garrett(&w, n).map_err(domain)?;
                    AsymRecord {
                        n,
                        variant,
                        left: Some(variant_token(r.variant_left)),
                        right: Some(variant_token(r.variant_right)),
                        y_left: Cell::Val(r.y_left),
                        y_right: Cell::Val(r.y_right),
                        k: Cell::Val(r.k_approx),
                        eps: Cell::Val(r.eps),
                    }
                }
                _ => unreachable!("validated above"),
            };
            records.push(rec);
        }
    }

    let p3s = sig(left.value(), digits);
    let p1s = sig(right.value(), digits);
    let mut out = String::new();
    if a.format == "csv" {
        out.push_str(
            "P3,P1,n,variant,variant_left,variant_right,unphysical,y_left,y_right,K,eps\n",
        );
        for r in &records {
            let _ = writeln!(
                out,
                "{p3s},{p1s},{},{},{},{},false,{},{},{},{}",
                r.n,
                r.variant,
                r.left.unwrap_or(""),
                r.right.unwrap_or(""),
                r.y_left.csv(digits),
                r.y_right.csv(digits),
                r.k.csv(digits),
                r.eps.csv(digits)
            );
        }
    } else {
        let tok = |t: Option<&str>| match t {
            Some(t) => format!("\"{t}\""),
            None => "null".into(),
        };
        out.push_str("[\n");
        for (i, r) in records.iter().enumerate() {
            let _ = write!(
                out,
                "  {{\"P3\":{p3s},\"P1\":{p1s},\"n\":{},\"variant\":\"{}\",\"variant_left\":{},\"variant_right\":{},\"unphysical\":false,\"y_left\":{},\"y_right\":{},\"K\":{},\"eps\":{}}}",
                r.n,
                r.variant,
                tok(r.left),
                tok(r.right),
                r.y_left.json(digits),
                r.y_right.json(digits),
                r.k.json(digits),
                r.eps.json(digits)
            );
            if i + 1 < records.len() {
                out.push(',');
            }
            out.push('\n');
        }
        out.push_str("]\n");
    }
    write_out("-", &out)
}

fn parse_range(spec: &str) -> Result<Vec<WellStrength>, Failure> {
    let (lo, hi) = spec
        .split_once(':')
        .ok_or_else(|| Failure::Usage(format!("--P-range takes lo:hi, got {spec:?}")))?;
    let lo: f64 = lo
        .trim()
        .parse()
        .map_err(|_| Failure::Usage(format!("--P-range lower bound is not a number: {lo:?}")))?;
    let hi: f64 = hi
        .trim()
        .parse()
        .map_err(|_| Failure::Usage(format!("--P-range upper bound is not a number: {hi:?}")))?;
    if !lo.is_finite() || !hi.is_finite() || lo <= 0.0 || hi < lo {
        return Err(Failure::Usage(format!(
            "--P-range needs 0 < lo <= hi, got {lo}:{hi}"
        )));
    }
    if hi - lo > 10_000.0 {
        return Err(Failure::Usage(format!(
            "--P-range spans {} steps; that is more than intended",
            (hi - lo) as u64
        )));
    }
    let mut ps = Vec::new();
    let mut v = lo;
    // inclusive integer-stepped sweep; slack absorbs accumulated rounding
    while v <= hi + 1e-9 {
        ps.push(strength(v, "--P-range value")?);
        v += 1.0;
    }
    Ok(ps)
}

fn parse_list(spec: &str) -> Result<Vec<WellStrength>, Failure> {
    spec.split(',')
        .map(|tok| {
            let v: f64 = tok
                .trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("--P-list entry is not a number: {tok:?}")))?;
            strength(v, "--P-list entry")
        })
        .collect()
}

fn table_rows(ps: &[WellStrength], parallel: bool) -> Vec<ErrorRow> {
    if !parallel {
        return build_table(ps);
    }
    use rayon::prelude::*;
    let mut sorted = ps.to_vec();
    sorted.sort_by(|a, b| a.value().total_cmp(&b.value()));
    // per-well jobs collected in order, then flattened: same row sequence
    // and the same arithmetic per row as the serial path
    sorted
        .par_iter()
        .map(|&p| {
            (1..=n_max_symmetric(p))
                .map(|n| error_row(p, n).expect("levels run only to capacity"))
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn cmd_table(a: TableArgs) -> Result<(), Failure> {
    let digits = resolve_digits(a.digits)?;
    let ps = match (&a.p_range, &a.p_list) {
        (Some(r), None) => parse_range(r)?,
        (None, Some(l)) => parse_list(l)?,
        (None, None) => {
            return Err(Failure::Usage(
                "one of --P-range or --P-list is required".into(),
            ))
        }
        (Some(_), Some(_)) => unreachable!("clap conflict rules"),
    };
    let rows = table_rows(&ps, a.parallel);
    let mut out = String::from("P,n,eps4,eps0,eps2,y4,y2,epsB\n");
    for r in &rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            sig(r.strength, digits),
            r.n,
            sig(r.eps4, digits),
            sig(r.eps0, digits),
            Cell::from_option(r.eps2).csv(digits),
            sig(r.y4, digits),
            Cell::from_option(r.y2).csv(digits),
            sig(r.eps_b, digits)
        );
    }
    write_out(&a.out, &out)
}

fn series_token(s: FigureSeries) -> &'static str {
    match s {
        FigureSeries::Consistent => "eps4",
        FigureSeries::LowestOrder => "eps0",
        FigureSeries::TwoIteration => "eps2",
        FigureSeries::Asymmetric => "eps_asym",
    }
}

fn cmd_figure(a: FigureArgs) -> Result<(), Failure> {
    let digits = resolve_digits(a.digits)?;
    let p = strength(a.p, "--P")?;
    let w = AsymmetricWell::new(strength(a.p3, "--P3")?, strength(a.p1, "--P1")?);
    let pts = build_figure_data(p, &w).map_err(domain)?;
    let mut out = String::from("series,n,value,value_abs\n");
    for q in &pts {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            series_token(q.series),
            q.n,
            sig(q.value, digits),
            sig(q.magnitude, digits)
        );
    }
    write_out(&a.out, &out)
}
