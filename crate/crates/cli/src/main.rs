use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hecke_lefschetz::epstein::{zeta_constant_terms, EpsteinSpec};
use hecke_lefschetz::lefschetz::{assemble, GeometricData, PairingInterpretation};
use hecke_lefschetz::rootsys::{
    parse_rational, GroupDescriptor, Root, RootSystem, Weight, WeylSubgroup,
};
use hecke_lefschetz::sl2::{self, build_geom_sl2z, calibration, compare, weight_to_mu};
use serde::Serialize;
use serde_json::{json, Value};

/// Lefschetz numbers of Hecke operators on rank-one locally symmetric spaces.
#[derive(Parser, Debug)]
#[command(name = "hecke-lefschetz", version)]
struct RunConfig {
    /// Write the JSON report here; otherwise it goes to stdout and the summary to stderr.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Tolerance for integrality and oracle matching.
    #[arg(long, global = true, default_value_t = 1e-6)]
    tolerance: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Root data.
    Rootsys {
        #[command(subcommand)]
        action: RootsysCmd,
    },
    /// Lefschetz number assembly.
    Lefschetz {
        #[command(subcommand)]
        action: LefschetzCmd,
    },
    /// The SL(2, Z) instantiation and its classical oracles.
    Sl2 {
        #[command(subcommand)]
        action: Sl2Cmd,
    },
    /// Epstein zeta constant terms.
    Epstein {
        #[command(subcommand)]
        action: EpsteinCmd,
    },
}

#[derive(Subcommand, Debug)]
enum RootsysCmd {
    /// Dump the root datum of a group such as `su(2,1)` or `sp(1,1)`.
    Show { group: String },
}

#[derive(Subcommand, Debug)]
enum LefschetzCmd {
    /// Full term-by-term breakdown.
    Assemble(AssembleArgs),
}

#[derive(Args, Debug)]
struct AssembleArgs {
    #[arg(long, default_value = "su(1,1)")]
    group: String,
    /// Highest weight μ, comma separated rationals, e.g. `11/2,-11/2`.
    #[arg(
        long,
        allow_hyphen_values = true,
        conflicts_with = "k",
        required_unless_present = "k"
    )]
    mu: Option<String>,
    /// Weight of the holomorphic discrete series (su(1,1) only).
    #[arg(long)]
    k: Option<i64>,
    /// GeometricData JSON file.
    #[arg(long, conflicts_with = "preset", required_unless_present = "preset")]
    geom: Option<PathBuf>,
    #[arg(long, value_enum)]
    preset: Option<Preset>,
    /// Hecke index for the preset.
    #[arg(long, default_value_t = 1)]
    n: u64,
    #[arg(long, value_enum, default_value_t = Interp::Conjugate)]
    interpretation: Interp,
}

#[derive(Subcommand, Debug)]
enum Sl2Cmd {
    /// Classical values: Eichler–Selberg trace, dim S_k and τ(n).
    Oracle(Sl2Args),
    /// Assembled Lefschetz number against the classical trace.
    Compare(Sl2Args),
    /// GeometricData for Ξ_n, in the same schema accepted by `--geom`.
    Geometry {
        #[arg(long, default_value_t = 1)]
        n: u64,
    },
}

#[derive(Args, Debug)]
struct Sl2Args {
    #[arg(long)]
    k: i64,
    #[arg(long, default_value_t = 1)]
    n: u64,
    #[arg(long, value_enum, default_value_t = Interp::Conjugate)]
    interpretation: Interp,
}

#[derive(Subcommand, Debug)]
enum EpsteinCmd {
    /// Constant term at z = 0 of the zeta function described by an EpsteinSpec JSON file.
    Const {
        #[arg(long)]
        spec: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Preset {
    Sl2z,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Interp {
    Conjugate,
    Identity,
}

impl From<Interp> for PairingInterpretation {
    fn from(i: Interp) -> Self {
        match i {
            Interp::Conjugate => PairingInterpretation::Conjugate,
            Interp::Identity => PairingInterpretation::Identity,
        }
    }
}

const EXIT_VALIDATION: u8 = 1;
const EXIT_MISMATCH: u8 = 2;
const EXIT_NON_INTEGRAL: u8 = 3;

struct Report {
    summary: String,
    json: Value,
    code: u8,
}

impl Report {
    fn ok(summary: String, json: Value) -> Self {
        Report {
            summary,
            json,
            code: 0,
        }
    }
}

type Outcome = Result<Report, String>;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn to_json<T: Serialize>(v: &T) -> Result<Value, String> {
    serde_json::to_value(v).map_err(err)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

#[derive(Serialize)]
struct RootDatum<'a> {
    group: String,
    ambient_dim: usize,
    positive_roots: Vec<&'a Root>,
    simple_roots: Vec<&'a Root>,
    cayley_root: &'a Root,
    rho_g: &'a Weight,
    rho_k: &'a Weight,
    rho_p: &'a Weight,
    dim_p: usize,
    dim_n1: usize,
    dim_n2: usize,
    spinor_dims: (u64, u64),
    weyl_order: usize,
    compact_weyl_order: usize,
}

fn rootsys_show(group: &str) -> Outcome {
    let desc: GroupDescriptor = group.parse().map_err(err)?;
    let rs = RootSystem::new(desc).map_err(err)?;
    let datum = RootDatum {
        group: desc.to_string(),
        ambient_dim: rs.ambient_dim(),
        positive_roots: rs.positive_roots().collect(),
        simple_roots: rs.simple_roots().collect(),
        cayley_root: rs.cayley_root(),
        rho_g: rs.rho_g(),
        rho_k: rs.rho_k(),
        rho_p: rs.rho_p(),
        dim_p: rs.dim_p(),
        dim_n1: rs.dim_n1(),
        dim_n2: rs.dim_n2(),
        spinor_dims: rs.spinor_dims(),
        weyl_order: rs.weyl_group(WeylSubgroup::Full).len(),
        compact_weyl_order: rs.weyl_group(WeylSubgroup::Compact).len(),
    };
    let summary = format!(
        "{}: {} positive roots, rho_g = {}, |W| = {}, |W_k| = {}",
        datum.group,
        datum.positive_roots.len(),
        datum.rho_g,
        datum.weyl_order,
        datum.compact_weyl_order
    );
    Ok(Report::ok(summary, to_json(&datum)?))
}

fn parse_weight(s: &str) -> Result<Weight, String> {
    s.split(',')
        .map(parse_rational)
        .collect::<Result<Vec<_>, _>>()
        .map(Weight)
}

fn lefschetz_assemble(a: &AssembleArgs, tol: f64) -> Outcome {
    let desc: GroupDescriptor = a.group.parse().map_err(err)?;
    let rs = RootSystem::new(desc).map_err(err)?;
    let sl2r = desc == GroupDescriptor::sl2r();
    let mu = match (&a.mu, a.k) {
        (Some(m), _) => parse_weight(m)?,
        (None, Some(k)) if sl2r => weight_to_mu(k)
            .map_err(|e| format!("{e}; k ≥ 4 even is required for the regular discrete series"))?,
        _ => return Err("--k is only meaningful for su(1,1); pass --mu".into()),
    };
    let geom: GeometricData = match (&a.geom, a.preset) {
        (Some(path), _) => read_json(path)?,
        (None, Some(Preset::Sl2z)) if sl2r => build_geom_sl2z(a.n).map_err(err)?,
        _ => return Err("the sl2z preset needs --group su(1,1)".into()),
    };
    let b = assemble(&rs, &mu, &geom, a.interpretation.into()).map_err(err)?;
    let summary = format!(
        "L = {:.9} (central {:.6}, elliptic {:.6}, parabolic I {:.6}, parabolic II {:.6}, residue {:.6})",
        b.total.re, b.central.re, b.elliptic.re, b.parabolic_i.re, b.parabolic_ii.re, b.residue.re
    );
    let mut report = Report::ok(summary, to_json(&b)?);
    // Integrality is only promised for Ξ = Γ, where L is an index.
    let integral_expected = a.preset.is_some() && a.n == 1;
    if integral_expected && (b.rounding_defect > tol || b.total.im.abs() > tol) {
        report.code = EXIT_NON_INTEGRAL;
        report.summary.push_str(&format!(
            "; not integral (defect {:.3e})",
            b.rounding_defect
        ));
    }
    Ok(report)
}

fn sl2_oracle(a: &Sl2Args) -> Outcome {
    let trace = sl2::eichler_selberg(a.k, a.n).map_err(err)?;
    let dim = sl2::dim_cusp_forms(a.k).map_err(err)?;
    let n = usize::try_from(a.n).map_err(err)?;
    let tau = sl2::delta_coeffs(n)[n].clone();
    let summary = format!(
        "Tr T_{} on S_{} = {trace}; dim S_{} = {dim}; tau({}) = {tau}",
        a.n, a.k, a.k, a.n
    );
    let json = json!({
        "k": a.k,
        "n": a.n,
        "eichler_selberg": trace.to_string(),
        "dim_cusp_forms": dim,
        "tau": tau.to_string(),
    });
    Ok(Report::ok(summary, json))
}

fn sl2_compare(a: &Sl2Args, tol: f64) -> Outcome {
    let r = compare(a.k, a.n, a.interpretation.into()).map_err(err)?;
    let matched = r.defect < tol;
    let summary = format!(
        "L = {:.9}, n^({}) Tr T_n = {:.9} (Tr T_n = {}), defect {:.3e}, calibration {}: {}",
        r.lefschetz_value.re,
        r.exponent,
        r.scaled_oracle,
        r.oracle_value,
        r.defect,
        calibration(),
        if matched { "match" } else { "MISMATCH" }
    );
    let mut report = Report::ok(summary, to_json(&r)?);
    if !matched {
        report.code = EXIT_MISMATCH;
    }
    Ok(report)
}

fn sl2_geometry(n: u64) -> Outcome {
    let (_, pool) = sl2::build_geom_uncalibrated(n, sl2::default_bound(n)).map_err(err)?;
    let geom = build_geom_sl2z(n).map_err(err)?;
    let summary = format!(
        "n = {n}: {} central, {} elliptic classes, {} parabolic II entries; {} hyperbolic elements discarded",
        geom.central_classes.len(),
        geom.elliptic_classes.len(),
        geom.parabolic_ii.len(),
        pool.hyperbolic_discarded
    );
    Ok(Report::ok(summary, to_json(&geom)?))
}

fn epstein_const(spec: &Path) -> Outcome {
    let spec: EpsteinSpec = read_json(spec)?;
    let c = zeta_constant_terms(&spec).map_err(err)?;
    let summary = format!(
        "constant term {:.10}, pole order {}",
        c.constant_term, c.pole_order_at_0
    );
    Ok(Report::ok(summary, to_json(&c)?))
}

fn run(cfg: &RunConfig) -> Outcome {
    match &cfg.command {
        Command::Rootsys {
            action: RootsysCmd::Show { group },
        } => rootsys_show(group),
        Command::Lefschetz {
            action: LefschetzCmd::Assemble(a),
        } => lefschetz_assemble(a, cfg.tolerance),
        Command::Sl2 {
            action: Sl2Cmd::Oracle(a),
        } => sl2_oracle(a),
        Command::Sl2 {
            action: Sl2Cmd::Compare(a),
        } => sl2_compare(a, cfg.tolerance),
        Command::Sl2 {
            action: Sl2Cmd::Geometry { n },
        } => sl2_geometry(*n),
        Command::Epstein {
            action: EpsteinCmd::Const { spec },
        } => epstein_const(spec),
    }
}

fn main() -> ExitCode {
    let cfg = RunConfig::parse();
    let report = match run(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_VALIDATION);
        }
    };
    let body = match serde_json::to_string_pretty(&report.json) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_VALIDATION);
        }
    };
    match &cfg.out {
        Some(path) => {
            if let Err(e) = fs::write(path, body + "\n") {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(EXIT_VALIDATION);
            }
            println!("{}", report.summary);
        }
        None => {
            eprintln!("{}", report.summary);
            println!("{body}");
        }
    }
    ExitCode::from(report.code)
}
