//! The `pqsurf` command line. Everything happens in [`run`], which returns
//! the exit code and both output streams, so the binary stays trivial.

use std::ffi::OsString;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactnum::{Fraction, SingularityType};
use crate::pardini::{
    canonical_eigenpieces, deformation_characters, epsilon, generate_relations, natdef_dim, pure_cover_symbols,
    verify_cover_relations, BuildingData, DeformationSymbols,
};
use crate::polyring::smoothing_certificate;
use crate::pqsurface::{invariants, singularities};
use crate::scenario::{load_scenario, Scenario};
use crate::tangentcoh::{h2_theta, ob_rank_and_ext1, resolution_ledger, rr_gap, ObModel};
use crate::verify::verify_paper;

#[derive(Debug, Parser)]
#[command(name = "pqsurf", version, about = "Exact invariants of cyclic product-quotient surfaces")]
pub struct Cli {
    /// Print a single JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hirzebruch-Jung resolution of 1/n(1,q).
    Resolve {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        q: i64,
    },
    /// K2, e, q, pg, chi and the singular set.
    Invariants { scenario: String },
    /// Tangent-sheaf cohomology and, with an obstruction model, Ext1.
    Tangent {
        scenario: String,
        /// Overrides the scenario's z.
        #[arg(long)]
        z: Option<i64>,
    },
    /// Building data, carry table and cover-relation check.
    Pardini { scenario: String },
    /// Dimension of the space of natural deformations.
    Natdef { scenario: String },
    /// Local equations of the cover.
    Relations {
        scenario: String,
        /// Use general deformation coefficients c{psi}_{chi}.
        #[arg(long)]
        natural: bool,
    },
    /// Smoothing certificate for the determinantal family at parameter s.
    SmoothCheck {
        scenario: String,
        #[arg(long, allow_hyphen_values = true)]
        s: Fraction,
    },
    /// Runs the whole claim catalog; exit code 1 if anything fails.
    VerifyPaper {
        /// Only blocks whose name contains this string.
        #[arg(long)]
        filter: Option<String>,
    },
    /// Prints a scenario in canonical JSON.
    Scenario { scenario: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    json: Value,
    text: String,
    ok: bool,
}

impl Report {
    fn ok(json: Value, text: String) -> Self {
        Report { json, text, ok: true }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn error_json(e: &Error) -> String {
    json!({"error": {"kind": e.kind(), "message": e.to_string()}}).to_string()
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: rendered, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: rendered }
            };
        }
    };
    match execute(&cli.command) {
        Ok(r) => {
            let stdout = if cli.json { format!("{}\n", r.json) } else { r.text };
            Outcome { code: if r.ok { 0 } else { 1 }, stdout, stderr: String::new() }
        }
        Err(e) => {
            let code = if matches!(e, Error::Inconsistency(_)) { 1 } else { 2 };
            Outcome { code, stdout: String::new(), stderr: format!("{}\n", error_json(&e)) }
        }
    }
}

fn needs_building_data(sc: &Scenario) -> Result<BuildingData> {
    sc.building_data()?
        .ok_or_else(|| Error::Precondition(format!("scenario {} has no building_data", sc.name)))
}

fn execute(cmd: &Command) -> Result<Report> {
    match cmd {
        Command::Resolve { n, q } => {
            let t = SingularityType::new(*n, *q)?;
            let r = t.resolution();
            let s: Vec<String> = r.string.iter().map(|b| b.to_string()).collect();
            let text = format!("{t}: [{}]  h = {}  e = {}  B = {}\n", s.join(", "), r.h, r.e, r.b);
            Ok(Report::ok(to_value(&r), text))
        }
        Command::Invariants { scenario } => {
            let sc = load_scenario(scenario)?;
            let spec = sc.spec()?;
            let inv = invariants(&spec)?;
            let sing = singularities(&spec)?;
            let mut json = to_value(&inv);
            json["singularities"] = to_value(&sing);
            let h0 = inv.h0_2k.map_or("-".to_string(), |v| v.to_string());
            let text = format!(
                "{}\n  K2 = {}  e = {}  q = {}  pg = {}  chi = {}\n  h0(2K) = {}  minimal certified: {}\n  singularities: {}\n",
                sc.name, inv.k2, inv.e, inv.q, inv.p_g, inv.chi, h0, inv.minimal_certified, sing
            );
            Ok(Report::ok(json, text))
        }
        Command::Tangent { scenario, z } => {
            let sc = load_scenario(scenario)?;
            let spec = sc.spec()?;
            let inv = invariants(&spec)?;
            let h2 = h2_theta(&spec)?;
            let gap = rr_gap(&inv);
            let mut text = format!("{}\n  h2(Theta) = {h2}  10chi - 2K2 = {gap}\n", sc.name);
            let resolution = if inv.rdp_only {
                let l = resolution_ledger(&spec)?;
                text.push_str(&format!(
                    "  resolution: h1(Theta_S) = {}  h2(Theta_S) = {}  h1(Theta_X) = {}  h2(Theta_X) = {}\n",
                    l.h1_s, l.h2_s, l.h1_x, l.h2_x
                ));
                to_value(&l)
            } else {
                Value::Null
            };
            let z = z.or(sc.ob_model.as_ref().map(|o| o.z));
            let ob = match z {
                Some(z) => {
                    let k = sc.ob_model.as_ref().and_then(|o| o.kernels());
                    let l = ob_rank_and_ext1(&ObModel::from_spec(&spec, z, k)?)?;
                    text.push_str(&format!(
                        "  ob: rank = {}  ker = {}  coker = {}  surjective: {}  Ext1 = {}\n",
                        l.ob_rank, l.ker_ob, l.coker_ob, l.surjective, l.ext1
                    ));
                    to_value(&l)
                }
                None => Value::Null,
            };
            let json = json!({"h2_theta": h2, "rr_gap": gap, "resolution": resolution, "ob": ob});
            Ok(Report::ok(json, text))
        }
        Command::Pardini { scenario } => {
            let sc = load_scenario(scenario)?;
            let bd = needs_building_data(&sc)?;
            let n = bd.n;
            let mut text = format!("{} (Z_{n})\n", sc.name);
            for (m, d) in &bd.components {
                text.push_str(&format!("  D{m} = {d}\n"));
            }
            for a in 1..n {
                text.push_str(&format!("  L{a} = {}\n", bd.l(a)));
            }
            let mut eps = Vec::new();
            for &m in bd.components.keys() {
                for a in 0..n {
                    for b in a..n {
                        let e = epsilon(n, m, a, b);
                        eps.push(json!({"m": m, "a": a, "b": b, "epsilon": e}));
                        text.push_str(&format!("  eps^(chi{m})_(chi{a},chi{b}) = {e}\n"));
                    }
                }
            }
            let holds = verify_cover_relations(&bd);
            let pieces = canonical_eigenpieces(&bd);
            text.push_str(&format!("  cover relations hold: {holds}\n  canonical eigenpieces: {pieces:?}\n"));
            let l: serde_json::Map<String, Value> = (1..n).map(|a| (a.to_string(), to_value(&bd.l(a)))).collect();
            let json = json!({
                "n": n,
                "components": to_value(&bd.components),
                "L": l,
                "epsilon": eps,
                "cover_relations_hold": holds,
                "canonical_eigenpieces": pieces,
            });
            Ok(Report { json, text, ok: holds })
        }
        Command::Natdef { scenario } => {
            let sc = load_scenario(scenario)?;
            let r = natdef_dim(&needs_building_data(&sc)?);
            let mut text = format!("{}\n", sc.name);
            for t in &r.terms {
                text.push_str(&format!("  h0(D{} - L{}) = h0{} = {}\n", t.psi, t.chi, t.bidegree, t.h0));
            }
            text.push_str(&format!("  total {}\n", r.total));
            Ok(Report::ok(to_value(&r), text))
        }
        Command::Relations { scenario, natural } => {
            let sc = load_scenario(scenario)?;
            let bd = needs_building_data(&sc)?;
            let syms: DeformationSymbols = if *natural {
                bd.components
                    .keys()
                    .flat_map(|&m| {
                        deformation_characters(bd.n, m).into_iter().map(move |chi| {
                            let name = if chi == 0 { format!("s{m}") } else { format!("c{m}_{chi}") };
                            ((m, chi), name)
                        })
                    })
                    .collect()
            } else {
                pure_cover_symbols(&bd, "s")
            };
            let rels: Vec<String> = generate_relations(&bd, &syms)?.iter().map(|r| r.to_string()).collect();
            let mut text = String::new();
            for r in &rels {
                text.push_str(r);
                text.push('\n');
            }
            Ok(Report::ok(json!({ "relations": rels }), text))
        }
        Command::SmoothCheck { scenario, s } => {
            let sc = load_scenario(scenario)?;
            let r = smoothing_certificate(&needs_building_data(&sc)?, *s)?;
            let minors: Vec<String> = r.minors.iter().map(|m| m.to_string()).collect();
            let text = format!(
                "s = {}\n  matches cover: {}\n  origin on variety: {}\n  Jacobian rank {} (expected {}, {} at s = 0)\n  minors: {}\n  {}\n",
                r.s,
                r.matches_cover,
                r.on_variety,
                r.rank,
                r.expected_rank,
                r.rank_at_zero,
                minors.join(", "),
                if r.passed { "PASS" } else { "FAIL" }
            );
            Ok(Report { json: to_value(&r), text, ok: r.passed })
        }
        Command::VerifyPaper { filter } => {
            let r = verify_paper(filter.as_deref())?;
            let mut text = r.render_table();
            if !r.all_passed {
                text.push_str("failing claims:\n");
                for c in r.failures() {
                    text.push_str(&format!(
                        "  [{}] {} ({}): expected {}, computed {}\n",
                        c.block, c.claim, c.context, c.expected, c.computed
                    ));
                }
            }
            Ok(Report { json: to_value(&r), text, ok: r.all_passed })
        }
        Command::Scenario { scenario } => {
            let sc = load_scenario(scenario)?;
            let text = sc.to_json();
            let json: Value = serde_json::from_str(&text).expect("own output parses");
            Ok(Report::ok(json, format!("{text}\n")))
        }
    }
}
