//! `toriparam`: every stage of the toric parametrization pipeline as a
//! single-shot command. Output is human-readable by default and JSON with
//! `--json`; the human form is rendered from the JSON value.

mod output;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use toriparam::decompose::{decompose_curve, decompose_with_hints};
use toriparam::group::{render_param_monomial, SubtorusDescription};
use toriparam::param::{
    check_implicit, compose, is_rational_parametrization, is_sigma_irreducible, ComponentJson, ParamSystem, ParamTuple,
    ToricModel,
};
use toriparam::poly::{parse_poly_in, render, VarFamily};
use toriparam::polytope::{Fan, LatticePolytope, PrimitiveCollection};
use toriparam::resolution::{minimal_resolution_2d, resolved_model, virtual_offsets};
use toriparam::{Error, MultiPoly};

use output::ColorChoice;

#[derive(Parser)]
#[command(name = "toriparam", version, about = "Universal rational parametrizations of projective toric varieties")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normal fan of a polytope with a smoothness report.
    Fan { file: PathBuf },
    /// Lattice points of a polytope.
    Points { file: PathBuf },
    /// Δ-monomial of every lattice point.
    Monomials {
        file: PathBuf,
        /// Use the minimal resolution of the normal fan.
        #[arg(long)]
        resolved: bool,
    },
    /// The group G, the character μ_Δ and the stabilizer G_Δ.
    Group {
        file: PathBuf,
        #[arg(long)]
        resolved: bool,
    },
    /// Σ-irreducibility of a tuple; exits 1 when it fails.
    Irreducible {
        file: PathBuf,
        /// Tuple such as "(u*v, 1, u, v, 1)", or @path.
        #[arg(long)]
        tuple: String,
        #[arg(long)]
        resolved: bool,
    },
    /// Composes a system with a tuple and splits off the content.
    Compose {
        file: PathBuf,
        /// "delta", a JSON system, or @path.
        #[arg(long)]
        system: String,
        #[arg(long)]
        tuple: String,
        #[arg(long)]
        resolved: bool,
    },
    /// Recovers F with H = q·c·(P∘F); exits 1 when no preimage is found.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        system: String,
        #[arg(long)]
        target: String,
        /// Irreducible factors of the components, as a tuple.
        #[arg(long)]
        hints: Option<String>,
        #[arg(long)]
        resolved: bool,
    },
    /// Minimal resolution of a plane fan with virtual facet offsets.
    Resolve { file: PathBuf },
    /// Checks R(H) = 0 for a relation R in x1, …, xk; exits 1 when it fails.
    Verify {
        #[arg(long)]
        target: String,
        #[arg(long)]
        relation: String,
    },
}

/// How a command ended, beyond plain success.
enum Failure {
    /// A well-formed question answered "no" (exit 1).
    Verdict(Value),
    /// Bad input (exit 2).
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NoPreimage(_)
            | Error::NeedsAlgebraicScalars(_)
            | Error::NotMonomialSystem
            | Error::MultiParameterUnsupported(_)
            | Error::IncompleteHints(_) => Failure::Verdict(json!({ "error": e.to_string() })),
            other => Failure::Input(other.to_string()),
        }
    }
}

type Outcome = Result<(Value, bool), Failure>;

fn input(msg: impl Into<String>) -> Failure {
    Failure::Input(msg.into())
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))
}

/// Inline text, or the contents of a file for `@path`.
fn arg_text(arg: &str) -> Result<String, Failure> {
    match arg.strip_prefix('@') {
        Some(path) => Ok(read_file(Path::new(path))?.trim().to_string()),
        None => Ok(arg.to_string()),
    }
}

fn load_polytope(path: &Path) -> Result<LatticePolytope, Failure> {
    let text = read_file(path)?;
    LatticePolytope::from_json_str(&text).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn load_model(path: &Path, resolved: bool) -> Result<ToricModel, Failure> {
    let p = load_polytope(path)?;
    Ok(if resolved { resolved_model(&p)? } else { ToricModel::from_polytope(&p) })
}

fn parse_tuple(arg: &str) -> Result<ParamTuple, Failure> {
    Ok(ParamTuple::parse(&arg_text(arg)?)?)
}

/// A system from `delta`, `{"points": […]}`, `{"components": […]}` or a bare
/// component list; returns subset warnings alongside.
fn load_system(model: &ToricModel, arg: &str) -> Result<(ParamSystem, Vec<String>), Failure> {
    let text = arg_text(arg)?;
    if text.trim() == "delta" {
        return Ok((ParamSystem::build_p_delta(model), Vec::new()));
    }
    let value: Value = serde_json::from_str(&text).map_err(|e| input(format!("system: {e}")))?;
    let comps = match &value {
        Value::Array(_) => value.clone(),
        Value::Object(map) => {
            if let Some(points) = map.get("points") {
                let points: Vec<toriparam::IntVec> =
                    serde_json::from_value(points.clone()).map_err(|e| input(format!("system points: {e}")))?;
                let (sys, warnings) = ParamSystem::select_p_a(model, &points)?;
                return Ok((sys, warnings.iter().map(ToString::to_string).collect()));
            }
            map.get("components").cloned().ok_or_else(|| input("system needs \"points\" or \"components\""))?
        }
        _ => return Err(input("system must be \"delta\", a JSON object or a JSON array")),
    };
    let comps: Vec<ComponentJson> = serde_json::from_value(comps).map_err(|e| input(format!("system: {e}")))?;
    Ok((ParamSystem::from_json(model, &comps)?, Vec::new()))
}

fn param(p: &MultiPoly) -> String {
    render(p, VarFamily::Param)
}

fn params(ps: &[MultiPoly]) -> Vec<String> {
    ps.iter().map(param).collect()
}

fn collections(c: &[PrimitiveCollection]) -> Value {
    c.iter()
        .map(|c| {
            let vars: Vec<String> = c.rays.iter().map(|i| format!("x{}", i + 1)).collect();
            json!({ "rays": c.rays.iter().map(|i| i + 1).collect::<Vec<_>>(), "variables": format!("{{{}}}", vars.join(",")) })
        })
        .collect()
}

fn smoothness(fan: &Fan) -> Value {
    let sm = fan.is_smooth();
    let singular: Vec<Value> = sm
        .singular
        .iter()
        .map(|s| {
            json!({
                "cone": s.cone.rays().iter().map(|i| i + 1).collect::<Vec<_>>(),
                "determinant": s.determinant.as_ref().map(ToString::to_string),
            })
        })
        .collect();
    json!({ "smooth": sm.smooth, "singular_cones": singular })
}

fn cmd_fan(file: &Path) -> Outcome {
    let fan = load_polytope(file)?.normal_fan();
    let mut out = serde_json::to_value(fan.to_json()).expect("serializable");
    let sm = smoothness(&fan);
    out["smooth"] = sm["smooth"].clone();
    out["singular_cones"] = sm["singular_cones"].clone();
    out["primitive_collections"] = collections(&fan.minimal_primitive_collections());
    Ok((out, true))
}

fn cmd_points(file: &Path) -> Outcome {
    let pts = load_polytope(file)?.lattice_points();
    Ok((json!({ "count": pts.len(), "points": pts }), true))
}

fn cmd_monomials(file: &Path, resolved: bool) -> Outcome {
    let model = load_model(file, resolved)?;
    let mut rows = Vec::new();
    for m in model.polytope().lattice_points() {
        let e = model.delta_monomial(&m)?;
        let mono = render(&model.delta_monomial_poly(&m)?, VarFamily::Facet);
        rows.push(json!({ "point": m, "exponents": e, "monomial": mono }));
    }
    Ok((json!({ "resolved": resolved, "monomials": rows }), true))
}

fn cmd_group(file: &Path, resolved: bool) -> Outcome {
    let model = load_model(file, resolved)?;
    let g = model.group();
    let chi = model.mu_delta();
    let gd = model.group_delta();
    let key = if resolved { "G_delta_sigma" } else { "G_delta" };
    let mut out = json!({
        "resolved": resolved,
        "G": g.render(),
        "mu_delta": render_param_monomial(&g.parameter_character(&chi)?),
        "mu_delta_exponents": chi.exponents,
    });
    out[key] = Value::String(gd.render());
    out[format!("{key}_as_kernel")] = Value::String(SubtorusDescription::render_as_kernel(&g, &chi)?);
    out["torsion_order"] = Value::String(gd.torsion_order().to_string());
    Ok((out, true))
}

fn cmd_irreducible(file: &Path, tuple: &str, resolved: bool) -> Outcome {
    let model = load_model(file, resolved)?;
    let f = parse_tuple(tuple)?;
    let report = is_sigma_irreducible(f.entries(), model.fan())?;
    let out = json!({ "irreducible": report.irreducible, "violated": collections(&report.violated) });
    Ok((out, report.irreducible))
}

fn cmd_compose(file: &Path, system: &str, tuple: &str, resolved: bool) -> Outcome {
    let model = load_model(file, resolved)?;
    let (sys, warnings) = load_system(&model, system)?;
    let f = parse_tuple(tuple)?;
    let c = compose(&sys, &f)?;
    let out = json!({
        "sigma_irreducible": c.sigma_irreducible,
        "violated": collections(&c.violated),
        "content": param(&c.content),
        "h": params(&c.h),
        "raw": params(&c.raw),
        "warnings": warnings,
    });
    Ok((out, true))
}

fn cmd_decompose(file: &Path, system: &str, target: &str, hints: Option<&str>, resolved: bool) -> Outcome {
    let model = load_model(file, resolved)?;
    let (sys, warnings) = load_system(&model, system)?;
    let h = parse_tuple(target)?;
    let r = match hints {
        Some(hints) => decompose_with_hints(h.entries(), &sys, parse_tuple(hints)?.entries()),
        None => decompose_curve(h.entries(), &sys),
    };
    let r = match r {
        Ok(r) => r,
        Err(e) => match Failure::from(e) {
            Failure::Verdict(mut v) => {
                v["warnings"] = json!(warnings);
                return Err(Failure::Verdict(v));
            }
            other => return Err(other),
        },
    };
    let out = json!({
        "content": param(&r.content),
        "scalar": toriparam::poly::format_rational(&r.scalar),
        "f": r.f.render(),
        "absorbed": r.absorbed,
        "normalization": r.normalization,
        "h": params(&r.reduced(h.entries())),
        "warnings": warnings,
    });
    Ok((out, true))
}

fn cmd_resolve(file: &Path) -> Outcome {
    let p = load_polytope(file)?;
    let fan = p.normal_fan();
    let rf = minimal_resolution_2d(&fan)?;
    let offsets = virtual_offsets(&p, &rf)?;
    let mut out = serde_json::to_value(rf.to_json(&offsets)).expect("serializable");
    out["original"] = smoothness(&fan);
    Ok((out, true))
}

fn cmd_verify(target: &str, relation: &str) -> Outcome {
    let h = parse_tuple(target)?;
    let r = parse_poly_in(&arg_text(relation)?, VarFamily::Facet, h.len())?;
    let holds = check_implicit(h.entries(), &r)?;
    let out = json!({
        "holds": holds,
        "rational_parametrization": is_rational_parametrization(h.entries()),
    });
    Ok((out, holds))
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Fan { file } => cmd_fan(file),
        Command::Points { file } => cmd_points(file),
        Command::Monomials { file, resolved } => cmd_monomials(file, *resolved),
        Command::Group { file, resolved } => cmd_group(file, *resolved),
        Command::Irreducible { file, tuple, resolved } => cmd_irreducible(file, tuple, *resolved),
        Command::Compose { file, system, tuple, resolved } => cmd_compose(file, system, tuple, *resolved),
        Command::Decompose { file, system, target, hints, resolved } => {
            cmd_decompose(file, system, target, hints.as_deref(), *resolved)
        }
        Command::Resolve { file } => cmd_resolve(file),
        Command::Verify { target, relation } => cmd_verify(target, relation),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let color = match ColorChoice::from_env() {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("toriparam: {msg}");
            return ExitCode::from(2);
        }
    };
    let (value, code) = match run(&cli) {
        Ok((v, true)) => (v, 0),
        Ok((v, false)) => (v, 1),
        Err(Failure::Verdict(v)) => (v, 1),
        Err(Failure::Input(msg)) => {
            eprintln!("toriparam: {msg}");
            return ExitCode::from(2);
        }
    };
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
    } else {
        print!("{}", output::render_human(&value, color.enabled()));
    }
    ExitCode::from(code)
}
