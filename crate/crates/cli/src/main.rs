use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use primegraph::chartab::{embedded_table, validate_table, verify_fixed_point_claims, EMBEDDED_TABLES};
use primegraph::classifier::Fixture;
use primegraph::graph::chromatic_number_oracle;
use primegraph::group::{builtin, canonical_name, ENUMERATION_CAP};
use primegraph::{classify, construct, eval_prime_graph, realize, Family, Graph, GroupRecipe, PermGroup, Verdict};
use serde_json::json;

// Closed pipes (`| head`) end the output quietly instead of panicking.
macro_rules! out {
    ($($t:tt)*) => {{
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

macro_rules! out_raw {
    ($($t:tt)*) => {{
        let _ = write!(std::io::stdout().lock(), $($t)*);
    }};
}

/// Prime graphs of pseudo T-solvable groups: classify, construct, verify.
#[derive(Parser)]
#[command(name = "primegraph", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a graph for one family, or for all nine with `auto`.
    Classify {
        #[arg(long)]
        family: String,
        #[arg(long)]
        graph: PathBuf,
        /// The file holds the complement rather than the prime graph.
        #[arg(long)]
        complement: bool,
        #[arg(long)]
        json: bool,
    },
    /// Build a witness recipe and prime assignment for an accepted graph.
    Construct {
        #[arg(long)]
        family: String,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        complement: bool,
        /// Also build the group and compare its prime graph.
        #[arg(long)]
        realize: bool,
        #[arg(long, default_value_t = ENUMERATION_CAP)]
        max_order: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Prime graph and complement of a builtin group, group file or recipe file.
    PrimeGraph {
        #[arg(long)]
        group: String,
        #[arg(long)]
        dot: bool,
    },
    /// Validate the embedded character tables and the fixed-point claims.
    VerifyTables,
    /// Print a fixture complement graph as JSON.
    Fixtures {
        #[arg(long)]
        name: String,
    },
    /// Brute-force chromatic number and triangle list of a graph file.
    Oracle {
        #[arg(long)]
        graph: PathBuf,
    },
}

/// Exit 1: a decision went the other way. Exit 2: bad input or data.
enum Failure {
    Reject,
    Data(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Failure {
        Failure::Data(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Reject) => ExitCode::from(1),
        Err(Failure::Data(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Classify { family, graph, complement, json } => cmd_classify(&family, &graph, complement, json),
        Command::Construct { family, graph, complement, realize, max_order, out } => {
            cmd_construct(&family, &graph, complement, realize, max_order, out.as_deref())
        }
        Command::PrimeGraph { group, dot } => cmd_prime_graph(&group, dot),
        Command::VerifyTables => cmd_verify_tables(),
        Command::Fixtures { name } => {
            let f: Fixture = name.parse()?;
            out!("{}", f.graph()?.to_json());
            Ok(())
        }
        Command::Oracle { graph } => {
            let g = read_graph(&graph)?;
            let chi = chromatic_number_oracle(&g)?;
            let triangles: Vec<String> = g.triangles().iter().map(ToString::to_string).collect();
            out!("chromatic number: {chi}");
            out!("triangles: {}", if triangles.is_empty() { "none".into() } else { triangles.join(", ") });
            Ok(())
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))?;
    Ok(Graph::from_json(&text)?)
}

/// Reads Γ, complementing the file contents when they describe Γ̄.
fn read_gamma(path: &Path, complement: bool) -> Result<Graph, Failure> {
    let g = read_graph(path)?;
    Ok(if complement { g.complement() } else { g })
}

fn print_verdict(v: &Verdict) {
    match (&v.certificate, &v.witness) {
        (Some(cert), _) => {
            let classes: Vec<String> = (0..3)
                .map(|c| {
                    let names: Vec<String> = cert.coloring.class(c).iter().map(ToString::to_string).collect();
                    format!("{{{}}}", names.join(","))
                })
                .collect();
            out!("{}: accept; complement coloring {}", v.family, classes.join(" "));
            if let Some(t) = &cert.triangle {
                out!("  triangle a={} b={} c={}", t.a, t.b, t.c);
            }
        }
        (None, Some(w)) => out!("{}: reject; {w}", v.family),
        (None, None) => out!("{}: {:?}", v.family, v.decision),
    }
}

fn cmd_classify(family: &str, path: &Path, complement: bool, as_json: bool) -> Outcome {
    let gamma = read_gamma(path, complement)?;
    let families: Vec<Family> = if family.eq_ignore_ascii_case("auto") {
        Family::ALL.to_vec()
    } else {
        vec![family.parse()?]
    };
    let verdicts: Vec<Verdict> = families.iter().map(|&f| classify(&gamma, f)).collect();
    if as_json {
        let out = if verdicts.len() == 1 {
            serde_json::to_string_pretty(&verdicts[0])?
        } else {
            serde_json::to_string_pretty(&verdicts)?
        };
        out!("{out}");
    } else {
        verdicts.iter().for_each(print_verdict);
    }
    if verdicts.iter().any(Verdict::accepted) {
        Ok(())
    } else {
        Err(Failure::Reject)
    }
}

fn cmd_construct(
    family: &str,
    path: &Path,
    complement: bool,
    do_realize: bool,
    max_order: u64,
    out: Option<&Path>,
) -> Outcome {
    let gamma = read_gamma(path, complement)?;
    let family: Family = family.parse()?;
    let verdict = classify(&gamma, family);
    if !verdict.accepted() {
        print_verdict(&verdict);
        return Err(Failure::Reject);
    }
    let (recipe, assignment) = construct(&gamma, family)?;
    let obligations = recipe.discharge_obligations()?;
    let doc = json!({ "recipe": recipe, "assignment": assignment });
    let text = serde_json::to_string_pretty(&doc)?;
    match out {
        Some(p) => {
            fs::write(p, format!("{text}\n")).map_err(|e| Failure::Data(format!("{}: {e}", p.display())))?;
            eprintln!("wrote {}", p.display());
        }
        None => out!("{text}"),
    }
    for line in &obligations {
        eprintln!("obligation: {line}");
    }
    if do_realize {
        let promised = eval_prime_graph(&recipe)?;
        let real = realize(&recipe, max_order)?;
        let stats = real.stats(max_order)?;
        if real.prime_graph(max_order)? != promised {
            return Err(Failure::Data("realized prime graph differs from the recipe".into()));
        }
        eprintln!("realized {}: order {}, prime graph matches", real.describe(), stats.order);
    }
    Ok(())
}

fn load_group_graph(spec: &str) -> Result<(String, Graph), Failure> {
    if let Ok(name) = canonical_name(spec) {
        return Ok((name.to_string(), builtin(name)?.prime_graph()?));
    }
    let text = fs::read_to_string(spec).map_err(|e| Failure::Data(format!("{spec}: not a builtin group ({e})")))?;
    let value: serde_json::Value = serde_json::from_str(&text)?;
    if value.get("generators").is_some() {
        let g = PermGroup::from_json(&text)?;
        Ok((spec.to_string(), g.prime_graph()?))
    } else {
        let recipe = match value.get("recipe") {
            Some(r) => GroupRecipe::from_json(&r.to_string())?,
            None => GroupRecipe::from_json(&text)?,
        };
        Ok((spec.to_string(), eval_prime_graph(&recipe)?))
    }
}

fn cmd_prime_graph(spec: &str, dot: bool) -> Outcome {
    let (name, gamma) = load_group_graph(spec)?;
    let gbar = gamma.complement();
    if dot {
        out_raw!("{}", gamma.to_dot().replacen("graph {", "graph prime_graph {", 1));
        out_raw!("{}", gbar.to_dot().replacen("graph {", "graph complement {", 1));
    } else {
        let doc = json!({
            "group": name,
            "prime_graph": serde_json::from_str::<serde_json::Value>(&gamma.to_json())?,
            "complement": serde_json::from_str::<serde_json::Value>(&gbar.to_json())?,
        });
        out!("{}", serde_json::to_string_pretty(&doc)?);
    }
    Ok(())
}

fn cmd_verify_tables() -> Outcome {
    let mut ok = true;
    for name in EMBEDDED_TABLES {
        let report = validate_table(&embedded_table(name)?);
        ok &= report.is_ok();
        let status = if report.is_ok() { "PASS" } else { "FAIL" };
        out!("table {name}: {status} ({} rows)", report.rows);
        for f in &report.failures {
            out!("  {f}");
        }
    }
    let claims = verify_fixed_point_claims()?;
    for c in &claims.claims {
        let status = if c.passed { "PASS" } else { "FAIL" };
        out!("claim ({}) {status} [{}] {}: {}", c.id, c.table, c.statement, c.detail);
    }
    if ok && claims.all_passed() {
        Ok(())
    } else {
        Err(Failure::Reject)
    }
}
