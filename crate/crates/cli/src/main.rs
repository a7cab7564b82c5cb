use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use edge_invariants::laws::{property_suite, run_suite};
use edge_invariants::region::{enumerate_cc, enumerate_cstar, enumerate_cstarstar};
use edge_invariants::survey::{
    achieved_tuples, check_corollary, check_theorem_main, load_corpus, random_connected_graphs,
    survey_all, SurveyOptions,
};
use edge_invariants::witness::{checked_witness, split_witness, witness};
use edge_invariants::{graph_betti_table, to_graph6, Error, FieldSpec, Graph, Tuple3};

mod input;

#[derive(Parser)]
#[command(
    name = "edgeinv",
    version,
    about = "Homological invariants of edge ideals of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print dim, depth, reg, pd, deg h and the graph statistics.
    Invariants(InvariantsArgs),
    /// Build a connected graph realizing (dim, depth, reg) = (d, p, r).
    Witness(WitnessArgs),
    /// List the tuples of a feasible region.
    Region(RegionArgs),
    /// Survey every connected graph on n vertices (or a corpus) against the region.
    Verify(VerifyArgs),
    /// Run the structural law suite on one graph or on seeded random graphs.
    Check(CheckArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    Cstarstar,
    Cstar,
    Cc,
}

#[derive(Args)]
struct GraphInput {
    /// Graph in graph6 format.
    graph6: Option<String>,
    /// Edge-list file: one "u v" pair per line, 0-indexed, '#' comments.
    #[arg(long, conflicts_with = "graph6")]
    edges: Option<PathBuf>,
    /// Vertex count for --edges (default: largest label + 1).
    #[arg(long, requires = "edges")]
    vertices: Option<usize>,
}

impl GraphInput {
    fn load(&self) -> Result<Graph, Error> {
        input::load_graph(self.graph6.as_deref(), self.edges.as_deref(), self.vertices)
    }
}

#[derive(Args)]
struct InvariantsArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Also print the graded Betti table.
    #[arg(long)]
    betti: bool,
    /// Coefficient field: q or gf:p.
    #[arg(long, default_value = "q")]
    field: FieldSpec,
}

#[derive(Args)]
struct WitnessArgs {
    n: usize,
    d: usize,
    p: usize,
    r: usize,
    /// Recompute the tuple of the witness with the Betti engine.
    #[arg(long)]
    verify: bool,
    #[arg(long, default_value = "q")]
    field: FieldSpec,
}

#[derive(Args)]
struct RegionArgs {
    n: usize,
    #[arg(long, value_enum, default_value = "cstarstar")]
    variant: Variant,
    /// Regularity parameter for --variant cc.
    #[arg(long, default_value_t = 1)]
    c: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Append a witness graph6 to each row.
    #[arg(long)]
    with_witness: bool,
}

#[derive(Args)]
struct VerifyArgs {
    n: usize,
    /// graph6 file to survey instead of enumerating all labeled graphs.
    #[arg(long)]
    corpus: Option<PathBuf>,
    #[arg(long, default_value = "q")]
    field: FieldSpec,
    /// Worker threads (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Tally disconnected graphs separately.
    #[arg(long)]
    include_disconnected: bool,
    /// text prints the verdicts; json and csv print the survey and send the verdicts to stderr.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Number of seeded random connected graphs to check instead of one input graph.
    #[arg(long, conflicts_with_all = ["graph6", "edges"])]
    random: Option<usize>,
    /// Vertex count of the random graphs.
    #[arg(long = "n", requires = "random", default_value_t = 7)]
    size: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "q")]
    field: FieldSpec,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

/// Exit codes: 1 verification failure, 2 bad input, 3 resource limit, 4 outside the domain.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::Graph6(_)
        | Error::Io(_)
        | Error::VertexOutOfRange { .. }
        | Error::LoopEdge(_)
        | Error::VertexCount { .. }
        | Error::InvalidField(_) => 2,
        Error::SizeLimit { .. } | Error::TooManyVertices { .. } => 3,
        Error::OutsideRegion(_)
        | Error::Domain(_)
        | Error::NotIndependent
        | Error::NoIndependentSet(_) => 4,
        Error::Inconsistent(_) | Error::WitnessMismatch { .. } => 1,
    }
}

type Outcome = Result<bool, Error>;

/// Region rows: the numeric columns and an optional witness.
type Rows = Vec<(Vec<usize>, Option<Graph>)>;

fn invariants(args: &InvariantsArgs) -> Outcome {
    let g = args.input.load()?;
    let table = graph_betti_table(&g, args.field)?;
    let t = edge_invariants::invariants::tuple_from_table(&g, &table)?;
    t.check()?;
    let s = t.stats;
    match args.format {
        Format::Text => {
            println!(
                "n={} dim={} depth={} reg={} pd={} degh={} m={} im={} d={} p={}",
                t.n, t.dim, t.depth, t.reg, t.pd, t.degh, s.m, s.im, s.d, s.p
            );
            if args.betti {
                for ((i, j), b) in table.entries() {
                    println!("beta[{i},{j}]={b}");
                }
            }
        }
        Format::Json => {
            let mut v = json!({
                "n": t.n, "dim": t.dim, "depth": t.depth, "reg": t.reg, "pd": t.pd, "degh": t.degh,
                "m": s.m, "im": s.im, "d": s.d, "p": s.p,
            });
            if args.betti {
                v["betti"] = serde_json::to_value(&table).expect("table serializes");
            }
            println!("{v}");
        }
        Format::Csv => {
            println!("n,dim,depth,reg,pd,degh,m,im,d,p");
            println!(
                "{},{},{},{},{},{},{},{},{},{}",
                t.n, t.dim, t.depth, t.reg, t.pd, t.degh, s.m, s.im, s.d, s.p
            );
            if args.betti {
                println!("i,j,beta");
                for ((i, j), b) in table.entries() {
                    println!("{i},{j},{b}");
                }
            }
        }
    }
    Ok(true)
}

fn witness_cmd(args: &WitnessArgs) -> Outcome {
    let WitnessArgs { n, d, p, r, .. } = *args;
    let g = if args.verify {
        checked_witness(n, d, p, r, args.field)?
    } else {
        witness(n, d, p, r)?
    };
    println!("{}", to_graph6(&g));
    if args.verify {
        println!(
            "verified n={n} (dim, depth, reg)={} over {}",
            Tuple3::new(d, p, r),
            args.field
        );
    }
    Ok(true)
}

fn region(args: &RegionArgs) -> Outcome {
    let n = args.n;
    let (header, rows): (&str, Rows) = match args.variant {
        Variant::Cstarstar => {
            let rows = enumerate_cstarstar(n)?
                .into_iter()
                .map(|t| {
                    let w = args
                        .with_witness
                        .then(|| witness(n, t.d, t.p, t.r))
                        .transpose()?;
                    Ok((vec![n, t.d, t.p, t.r], w))
                })
                .collect::<Result<_, Error>>()?;
            ("n,d,p,r", rows)
        }
        Variant::Cstar | Variant::Cc => {
            let (tuples, lead, header) = if args.variant == Variant::Cstar {
                (enumerate_cstar(n)?, vec![n], "n,d,p")
            } else {
                (enumerate_cc(n, args.c)?, vec![n, args.c], "n,c,d,p")
            };
            let rows = tuples
                .into_iter()
                .map(|t| {
                    let w = args
                        .with_witness
                        .then(|| split_witness(n, t.d, t.p))
                        .transpose()?;
                    Ok(([lead.as_slice(), &[t.d, t.p]].concat(), w))
                })
                .collect::<Result<_, Error>>()?;
            (header, rows)
        }
    };
    match args.format {
        Format::Json => {
            let keys: Vec<&str> = header.split(',').collect();
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|(vals, w)| {
                    let mut obj = serde_json::Map::new();
                    for (k, v) in keys.iter().zip(vals) {
                        obj.insert(k.to_string(), json!(v));
                    }
                    if let Some(g) = w {
                        obj.insert("graph6".into(), json!(to_graph6(g)));
                    }
                    serde_json::Value::Object(obj)
                })
                .collect();
            println!("{}", serde_json::Value::Array(items));
        }
        Format::Text | Format::Csv => {
            println!("{header}{}", if args.with_witness { ",graph6" } else { "" });
            for (vals, w) in &rows {
                let mut line = vals
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(",");
                if let Some(g) = w {
                    line.push(',');
                    line.push_str(&to_graph6(g));
                }
                println!("{line}");
            }
        }
    }
    Ok(true)
}

fn verify(args: &VerifyArgs) -> Outcome {
    let opts = SurveyOptions {
        field: args.field,
        jobs: args.jobs,
        include_disconnected: args.include_disconnected,
    };
    let survey = match &args.corpus {
        Some(path) => achieved_tuples(args.n, &load_corpus(path)?, &opts)?,
        None => survey_all(args.n, &opts)?,
    };
    let main = check_theorem_main(&survey)?;
    let proj = check_corollary(&survey)?;
    let mut report = format!(
        "scanned {} connected graphs on {} vertices over {}\n(dim, depth, reg): {main}\n(dim, depth): {proj}",
        survey.scanned, survey.n, survey.field
    );
    if args.include_disconnected {
        for (t, r) in &survey.disconnected {
            report.push_str(&format!(
                "\ndisconnected {t}: count={} witness {}",
                r.count, r.witness
            ));
        }
    }
    match args.format {
        Format::Text => println!("{report}"),
        Format::Json => {
            println!("{}", survey.to_json());
            eprintln!("{report}");
        }
        Format::Csv => {
            print!("{}", survey.to_csv());
            eprintln!("{report}");
        }
    }
    Ok(main.passed() && proj.passed())
}

fn check(args: &CheckArgs) -> Outcome {
    if let Some(count) = args.random {
        let graphs = random_connected_graphs(count, &[args.size], args.seed)?;
        let summary = run_suite(&graphs, args.field, args.jobs)?;
        if args.format == Format::Json {
            println!(
                "{}",
                serde_json::to_string(&summary).expect("summary serializes")
            );
        } else {
            println!(
                "{} random connected graphs on {} vertices, seed {}",
                summary.graphs, args.size, args.seed
            );
            for law in &summary.laws {
                let status = if law.failures == 0 { "PASS" } else { "FAIL" };
                println!(
                    "{status} {} checked={} failures={}",
                    law.law, law.checked, law.failures
                );
                for c in &law.examples {
                    println!("  {} {}", c.graph6, c.values);
                }
            }
        }
        return Ok(summary.passed());
    }
    let g = args.input.load()?;
    let report = property_suite(&g, args.field)?;
    if args.format == Format::Json {
        println!(
            "{}",
            serde_json::to_string(&report).expect("report serializes")
        );
    } else {
        for law in &report.laws {
            let status = if law.passed() { "PASS" } else { "FAIL" };
            println!("{status} {} checked={}", law.law, law.checked);
            for c in &law.failures {
                let mut at = String::new();
                if let Some(v) = c.vertex {
                    at = format!(" vertex {v}");
                }
                if let Some(s) = &c.subset {
                    at = format!(" S={s:?}");
                }
                println!("  {}{at}: {}", c.graph6, c.values);
            }
        }
    }
    Ok(report.passed())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Invariants(a) => invariants(a),
        Command::Witness(a) => witness_cmd(a),
        Command::Region(a) => region(a),
        Command::Verify(a) => verify(a),
        Command::Check(a) => check(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("edgeinv: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::Graph6("x".into())), 2);
        assert_eq!(
            exit_code(&Error::SizeLimit {
                what: "x",
                n: 30,
                max: 16
            }),
            3
        );
        assert_eq!(exit_code(&Error::OutsideRegion("x".into())), 4);
    }
}
