//! Command-line front end. Every command prints one JSON document and exits
//! with 0 when all checks pass, 1 when a mathematical check fails and 2 on
//! usage or schema errors.

mod json;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;
use serde_json::{json, Value};

pub use json::{Codec, GroupFormJson, QuadrupleJson, SubspaceJson};

use crate::double::{cybe_residual, diag_intersection, invariance_residual, manin_triple_check, sklyanin_r};
use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Matrix};
use crate::geom::geom_check;
use crate::integrab::{integrability_verdict, GroupForm, Witness};
use crate::lagrange::{construct_l, decompose_l, enumerate_orbit_labels};
use crate::liealg::{build_lie_algebra, LieAlgebra};
use crate::rootsys::build_root_system;

#[derive(Debug, Parser)]
#[command(name = "lagsub", version, about = "Lagrangian subalgebras of g x g: construction, verification, classification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Cartan type, e.g. `A2`, `B2`, `A1xA1`.
    #[arg(long, global = true, default_value = "A1")]
    pub algebra: String,
    /// Adjoin `w = √d` to the Gaussian rationals.
    #[arg(long, global = true)]
    pub field_d: Option<u32>,
    /// Dimension of an abelian center with the identity form.
    #[arg(long, global = true)]
    pub center_dim: Option<usize>,
    /// Center form as a JSON matrix of rational literals, e.g. `[["1","0"],["0","2"]]`.
    #[arg(long, global = true)]
    pub center_form: Option<String>,
    /// JSON input file.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Write JSON here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// `adjoint`, `simply-connected`, or a path to `{"preset": ...}` / `{"lattice": [[...]]}`.
    #[arg(long, global = true, default_value = "adjoint")]
    pub group_form: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that (g x g, g_diag, m) is a Manin triple.
    ManinCheck,
    /// Classical Yang-Baxter residual of the Sklyanin r-matrix.
    Cybe,
    /// Build l from a quadruple (`--input`) and verify it.
    Construct,
    /// Recover the quadruple data of a Lagrangian subalgebra (`--input`).
    Decompose,
    /// Orbit labels with verified representatives (rank at most 2).
    Catalog,
    /// Integrability verdict for a quadruple (`--input`).
    Integrable,
    /// Numerical Poisson checks on X and exact checks of l_g.
    GeomCheck {
        #[arg(long, default_value_t = 100)]
        points: usize,
        #[arg(long, default_value_t = 20)]
        exact_points: usize,
    },
}

struct Outcome {
    doc: Value,
    passed: bool,
}

fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Schema(_)
            | Error::Scalar(_)
            | Error::Io(_)
            | Error::UnknownCartanType(_)
            | Error::RankCap { .. }
            | Error::DimensionMismatch { .. }
            | Error::DegenerateCenterForm
    )
}

fn read_input<T: serde::de::DeserializeOwned>(cli: &Cli) -> Result<T> {
    let path = cli.input.as_ref().ok_or_else(|| Error::Schema("this command needs --input".into()))?;
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Schema(e.to_string()))
}

fn field(cli: &Cli) -> Result<FieldSpec> {
    match cli.field_d {
        None => Ok(FieldSpec::gaussian()),
        Some(d) => Ok(FieldSpec::with_radical(d)?),
    }
}

fn algebra(cli: &Cli) -> Result<LieAlgebra> {
    let rs = build_root_system(&cli.algebra)?;
    let form = match (&cli.center_form, cli.center_dim) {
        (Some(_), Some(_)) => return Err(Error::Schema("give --center-dim or --center-form, not both".into())),
        (Some(text), None) => {
            let rows: Vec<Vec<String>> = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
            let spec = FieldSpec::gaussian();
            let n = rows.len();
            let parsed = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|c| spec.parse(c)?.to_rational().ok_or_else(|| Error::Schema(format!("`{c}` is not rational"))))
                        .collect::<Result<Vec<BigRational>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            if parsed.iter().any(|r| r.len() != n) {
                return Err(Error::Schema("center form must be square".into()));
            }
            Some(Matrix::from_rows(n, parsed))
        }
        (None, Some(0)) | (None, None) => None,
        (None, Some(c)) => Some(Matrix::identity(c)),
    };
    build_lie_algebra(&rs, form)
}

fn group_form(cli: &Cli, codec: &Codec<'_>) -> Result<GroupForm> {
    let g = codec.g;
    match cli.group_form.as_str() {
        "adjoint" | "simply-connected" => GroupForm::preset(g, &cli.group_form, None),
        path => {
            let text = std::fs::read_to_string(path)?;
            let doc: GroupFormJson = serde_json::from_str(&text).map_err(|e| Error::Schema(e.to_string()))?;
            match (doc.preset, doc.lattice) {
                (Some(p), None) => GroupForm::preset(g, &p, None),
                (None, Some(rows)) => {
                    let rows = rows
                        .iter()
                        .map(|r| r.iter().map(|c| codec.rational(c)).collect::<Result<Vec<_>>>())
                        .collect::<Result<Vec<_>>>()?;
                    GroupForm::from_rows(g, rows)
                }
                _ => Err(Error::Schema("group form needs exactly one of `preset` and `lattice`".into())),
            }
        }
    }
}

fn header(cli: &Cli, g: &LieAlgebra) -> BTreeMap<&'static str, Value> {
    BTreeMap::from([("algebra", json!(cli.algebra)), ("basis", json!(g.basis_names())), ("center_dim", json!(g.center_dim()))])
}

fn with_header(cli: &Cli, g: &LieAlgebra, body: Value) -> Value {
    let mut doc = serde_json::Map::new();
    for (k, v) in header(cli, g) {
        doc.insert(k.to_string(), v);
    }
    if let Value::Object(m) = body {
        doc.extend(m);
    }
    Value::Object(doc)
}

fn manin(g: &LieAlgebra) -> Outcome {
    let v = manin_triple_check(g);
    let passed = v.passed();
    Outcome { doc: json!({ "verdict": v, "passed": passed }), passed }
}

fn cybe(g: &LieAlgebra) -> Outcome {
    let r = sklyanin_r(g);
    let residual = cybe_residual(g, &r);
    let max = residual.values().map(BigRational::abs).max().unwrap_or_else(BigRational::zero);
    let invariance = invariance_residual(g, &r.symmetric());
    let passed = residual.is_empty() && invariance == 0;
    Outcome {
        doc: json!({
            "residual": json::rational_str(&max),
            "nonzero_entries": residual.len(),
            "r_sym_invariance_residual": invariance,
            "passed": passed,
        }),
        passed,
    }
}

fn construct(g: &LieAlgebra, codec: &Codec<'_>, q: &QuadrupleJson) -> Result<Outcome> {
    let q = codec.quadruple(q)?;
    let c = construct_l(g, &q)?;
    let meet = diag_intersection(g, &c.l);
    let passed = c.verdict.lagrangian;
    Ok(Outcome {
        doc: json!({
            "lagrangian": c.verdict.lagrangian,
            "isotropic": c.verdict.isotropic,
            "closed": c.verdict.closed,
            "dim": c.verdict.dim,
            "diag_intersection_dim": meet.dim(),
            "bd_transverse": meet.dim() == 0,
            "sigma_preserves_simple_system": c.admissible.sigma_preserves_simple_system,
            "characteristic": c.admissible.nilpotent.h.iter().map(json::rational_str).collect::<Vec<_>>(),
            "l": Codec::subspace_str(&c.l),
        }),
        passed,
    })
}

fn decompose(g: &LieAlgebra, codec: &Codec<'_>, input: &SubspaceJson) -> Result<Outcome> {
    let s = codec.subspace(&input.basis, 2 * g.dim())?;
    let d = decompose_l(g, &s)?;
    let roundtrip = d.rebuild(g) == s;
    let theta: Vec<Vec<String>> = d.theta.to_rows().iter().map(|r| Codec::vector_str(r)).collect();
    Ok(Outcome {
        doc: json!({
            "P": codec.roots(d.par.subset.members()),
            "Pprime": codec.roots(d.par_prime.subset.members()),
            "theta": theta,
            "l0": Codec::subspace_str(&d.l0),
            "sigma": d.sigma.as_ref().map(|s| s.pairs().iter().map(|&(a, b)| (codec.root(a), codec.root(b))).collect::<BTreeMap<_, _>>()),
            "xi_scalars": d.xi_scalars.as_ref().map(|m| m.iter().map(|(&a, c)| (codec.root(a), c.to_string())).collect::<BTreeMap<_, _>>()),
            "conjugated": d.conjugator.is_some(),
            "roundtrip": roundtrip,
        }),
        passed: roundtrip,
    })
}

#[derive(Serialize)]
struct FamilyDoc {
    sign: i32,
    verified: bool,
    bd_transverse: bool,
    samples: usize,
    samples_verified: usize,
    representative: QuadrupleJson,
}

#[derive(Serialize)]
struct LabelDoc {
    #[serde(rename = "P")]
    p: Vec<String>,
    #[serde(rename = "Pprime")]
    p_prime: Vec<String>,
    sigma: BTreeMap<String, String>,
    h: Vec<String>,
    dim_xi: usize,
    dim_xi_linearized: usize,
    n: usize,
    dim_lambda: usize,
    sigma_preserves_simple_system: bool,
    families: Vec<FamilyDoc>,
}

fn catalog(g: &LieAlgebra, codec: &Codec<'_>, seed: u64) -> Result<Outcome> {
    let entries = enumerate_orbit_labels(g, seed)?;
    let mut passed = true;
    let mut labels = Vec::with_capacity(entries.len());
    for e in &entries {
        let mut families = Vec::new();
        for f in &e.families {
            let mut ok = 0;
            for s in &f.samples {
                if construct_l(g, s)?.verdict.lagrangian {
                    ok += 1;
                }
            }
            passed &= f.verdict.lagrangian && ok == f.samples.len();
            families.push(FamilyDoc {
                sign: f.sign,
                verified: f.verdict.lagrangian,
                bd_transverse: f.bd_transverse,
                samples: f.samples.len(),
                samples_verified: ok,
                representative: codec.quadruple_json(&f.representative),
            });
        }
        passed &= e.dim_xi == e.dim_xi_check;
        labels.push(LabelDoc {
            p: e.key.p.iter().map(|&a| codec.root(a)).collect(),
            p_prime: e.key.p_prime.iter().map(|&a| codec.root(a)).collect(),
            sigma: e.key.sigma.iter().map(|&(a, b)| (codec.root(a), codec.root(b))).collect(),
            h: e.key.h.iter().map(json::rational_str).collect(),
            dim_xi: e.dim_xi,
            dim_xi_linearized: e.dim_xi_check,
            n: e.n,
            dim_lambda: e.dim_lambda,
            sigma_preserves_simple_system: e.preserves_simple_system,
            families,
        });
    }
    Ok(Outcome { doc: json!({ "seed": seed, "labels": labels, "passed": passed }), passed })
}

fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Sublattice(rows) => {
            json!({ "sublattice": rows.iter().map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>() })
        }
        Witness::Direction(v) => json!({ "direction": Codec::vector_str(v) }),
    }
}

fn integrable(g: &LieAlgebra, codec: &Codec<'_>, q: &QuadrupleJson, gf: &GroupForm) -> Result<Outcome> {
    let q = codec.quadruple(q)?;
    let c = construct_l(g, &q)?;
    let v = integrability_verdict(g, &c.admissible, gf);
    let consistent = !v.is_algebraic() || v.is_closed();
    Ok(Outcome {
        doc: json!({
            "V": Codec::subspace_str(&v.v),
            "algebraic": v.is_algebraic(),
            "closed": v.is_closed(),
            "witness": { "algebraic": witness_json(&v.algebraic.witness), "closed": witness_json(&v.closed.witness) },
            "V_real": Codec::subspace_str(&v.closed.real_part),
            "lagrangian": c.verdict.lagrangian,
        }),
        passed: consistent && c.verdict.lagrangian,
    })
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let g = algebra(cli)?;
    let codec = Codec::new(&g, field(cli)?);
    let outcome = match &cli.command {
        Command::ManinCheck => manin(&g),
        Command::Cybe => cybe(&g),
        Command::Construct => construct(&g, &codec, &read_input(cli)?)?,
        Command::Decompose => decompose(&g, &codec, &read_input(cli)?)?,
        Command::Catalog => catalog(&g, &codec, cli.seed)?,
        Command::Integrable => {
            let gf = group_form(cli, &codec)?;
            integrable(&g, &codec, &read_input(cli)?, &gf)?
        }
        Command::GeomCheck { points, exact_points } => {
            let r = geom_check(&g, cli.seed, *points, *exact_points)?;
            let passed = r.passed();
            Outcome { doc: json!({ "seed": cli.seed, "report": r, "passed": passed }), passed }
        }
    };
    Ok(Outcome { doc: with_header(cli, &g, outcome.doc), passed: outcome.passed })
}

fn emit(cli: &Cli, doc: &Value) -> std::io::Result<()> {
    let mut text = serde_json::to_string_pretty(doc).expect("values serialize");
    text.push('\n');
    match &cli.output {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: &Cli) -> u8 {
    let (doc, code) = match dispatch(cli) {
        Ok(o) => (o.doc, if o.passed { 0 } else { 1 }),
        Err(e) => {
            eprintln!("lagsub: {e}");
            let kind = if is_usage_error(&e) { "usage" } else { "math" };
            (json!({ "error": e.to_string(), "kind": kind }), if is_usage_error(&e) { 2 } else { 1 })
        }
    };
    if let Err(e) = emit(cli, &doc) {
        eprintln!("lagsub: cannot write output: {e}");
        return 2;
    }
    code
}

pub fn main() -> ExitCode {
    ExitCode::from(run(&Cli::parse()))
}

