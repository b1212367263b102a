mod report;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use edgering::audit::{self, Invariant};
use edgering::graph::{parse_edge_list, parse_graph6, to_graph6};
use edgering::{facets, lattice, serre, Error, Family, Graph, Scan};
use rayon::prelude::*;

use report::{ClassifyJson, FacetsJson, FormJson};

const EXIT_INPUT: u8 = 2;
const EXIT_UNSUPPORTED: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

#[derive(Parser)]
#[command(name = "edgering", version, about = "Serre's condition (R1) for edge rings of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    EdgeList,
    Graph6,
}

#[derive(clap::Args)]
struct InputArgs {
    /// Input file, or `-` for stdin
    path: PathBuf,
    /// Input format; by default `.g6` and `.graph6` files are graph6, anything else edge-list
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Decide normality and (R1) for each input graph
    Classify {
        #[command(flatten)]
        input: InputArgs,
        /// Stop at the first (R1) violation instead of listing all of them
        #[arg(long)]
        early_exit: bool,
    },
    /// List the facets of the edge polytope with their support forms
    Facets {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Run the lattice oracle and compare it with the combinatorial criterion
    Oracle {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Cross-check every invariant over many graphs
    Sweep {
        /// Enumerate all labelled graphs on 1..=N vertices (N <= 7)
        #[arg(long, default_value_t = 6)]
        max_vertices: usize,
        /// Read graphs from a graph6 file instead of enumerating
        #[arg(long)]
        source: Option<PathBuf>,
        /// Stop at the first graph that fails a check
        #[arg(long)]
        early_exit: bool,
    },
    /// Write a member of a graph family in edge-list format
    Generate {
        #[arg(value_enum)]
        family: FamilyName,
        /// Bridge count for `bridge`
        #[arg(long)]
        k: Option<usize>,
        /// Vertex count for `cycle` and `complete`
        #[arg(long)]
        n: Option<usize>,
        /// First side for `complete-bipartite`
        #[arg(long)]
        a: Option<usize>,
        /// Second side for `complete-bipartite`
        #[arg(long)]
        b: Option<usize>,
        /// Output file; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    Bridge,
    Cycle,
    Complete,
    CompleteBipartite,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Disconnected | Error::Bipartite => EXIT_UNSUPPORTED,
        Error::Inconsistent(_) | Error::Overflow => EXIT_INTERNAL,
        _ => EXIT_INPUT,
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::new(exit_code_for(&e), e.to_string())
    }
}

fn read_input(path: &Path) -> Result<Vec<u8>, Failure> {
    let mut buf = Vec::new();
    let result = if path == Path::new("-") {
        io::stdin().read_to_end(&mut buf).map(|_| ())
    } else {
        fs::File::open(path).and_then(|mut f| f.read_to_end(&mut buf)).map(|_| ())
    };
    result.map_err(|e| Failure::new(EXIT_INPUT, format!("{}: {e}", path.display())))?;
    Ok(buf)
}

/// Loads graphs with their report labels.
fn load_graphs(args: &InputArgs) -> Result<Vec<(String, Graph)>, Failure> {
    let bytes = read_input(&args.path)?;
    let format = args.format.unwrap_or_else(|| {
        match args.path.extension().and_then(|e| e.to_str()) {
            Some("g6" | "graph6") => Format::Graph6,
            _ => Format::EdgeList,
        }
    });
    let name = args.path.display().to_string();
    let parse_failure = |e: edgering::ParseError| Failure::new(EXIT_INPUT, format!("{name}: {e}"));
    match format {
        Format::EdgeList => {
            let text = String::from_utf8(bytes)
                .map_err(|_| Failure::new(EXIT_INPUT, format!("{name}: not valid UTF-8")))?;
            let g = parse_edge_list(&text).map_err(parse_failure)?;
            Ok(vec![(name, g)])
        }
        Format::Graph6 => {
            let graphs = parse_graph6(&bytes).map_err(parse_failure)?;
            if graphs.len() == 1 {
                return Ok(graphs.into_iter().map(|g| (name.clone(), g)).collect());
            }
            Ok(graphs.into_iter().enumerate().map(|(k, g)| (format!("{name}#{}", k + 1), g)).collect())
        }
    }
}

/// Runs `each` over every input graph, printing reports separated by blank
/// lines. Per-graph failures go to stderr; the worst exit code wins.
fn for_each_graph<F>(args: &InputArgs, mut each: F) -> Result<u8, Failure>
where
    F: FnMut(&str, &Graph) -> Result<String, Failure>,
{
    let graphs = load_graphs(args)?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut code = 0;
    let mut first = true;
    for (name, g) in &graphs {
        let started = Instant::now();
        match each(name, g) {
            Ok(text) => {
                if !first {
                    let _ = writeln!(out);
                }
                first = false;
                let _ = write!(out, "{text}");
                if !text.ends_with('\n') {
                    let _ = writeln!(out);
                }
                if !args.json {
                    eprintln!("{name}: {:.3?}", started.elapsed());
                }
            }
            Err(f) => {
                eprintln!("{name}: {}", f.message);
                code = code.max(f.code);
            }
        }
    }
    Ok(code)
}

fn cmd_classify(args: &InputArgs, early_exit: bool) -> Result<u8, Failure> {
    let scan = if early_exit { Scan::FirstViolation } else { Scan::All };
    for_each_graph(args, |name, g| {
        let r = serre::classify_with(g, scan)?;
        Ok(if args.json {
            report::to_json(&ClassifyJson::new(name, g, &r))
        } else {
            report::classify_text(name, g, &r)
        })
    })
}

fn cmd_facets(args: &InputArgs) -> Result<u8, Failure> {
    for_each_graph(args, |name, g| {
        let facets = facets::facets(g).map_err(|e| match e {
            Error::Bipartite => Failure::new(
                EXIT_UNSUPPORTED,
                "graph is bipartite: its edge ring is normal and the facet description does not apply",
            ),
            Error::Disconnected => Failure::new(EXIT_UNSUPPORTED, "graph is disconnected"),
            other => other.into(),
        })?;
        let rows = facets
            .into_iter()
            .map(|f| facets::support_form(g, f).map(|form| (f, form)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(if args.json {
            report::to_json(&FacetsJson {
                input: name.to_string(),
                d: g.order(),
                n: g.size(),
                facets: rows.iter().map(|(f, form)| FormJson::new(*f, form)).collect(),
            })
        } else {
            report::facets_text(name, &rows)
        })
    })
}

fn cmd_oracle(args: &InputArgs) -> Result<u8, Failure> {
    let mut mismatch = false;
    let code = for_each_graph(args, |name, g| {
        let checks = lattice::oracle_facet_checks(g)?;
        let criterion = serre::satisfies_r1(g)?;
        let json = report::oracle_json(name, g, &checks, &criterion);
        mismatch |= !json.agreement;
        Ok(if args.json {
            report::to_json(&json)
        } else {
            let violations: Vec<_> = checks.iter().filter(|c| !c.passes()).map(|c| c.facet).collect();
            report::oracle_text(name, &checks, &violations, criterion.holds, json.agreement)
        })
    })?;
    if mismatch {
        eprintln!("combinatorial criterion and lattice oracle disagree");
        return Ok(EXIT_INTERNAL);
    }
    Ok(code)
}

#[derive(Default)]
struct SweepTally {
    graphs: usize,
    eligible: usize,
    normal: usize,
    r1: usize,
    facets: usize,
    failed_graphs: usize,
    per_invariant: [usize; Invariant::ALL.len()],
}

const SWEEP_CHUNK: usize = 4096;
const MAX_LABELLED_SWEEP: usize = 7;

fn cmd_sweep(max_vertices: usize, source: Option<&Path>, early_exit: bool) -> Result<u8, Failure> {
    let started = Instant::now();
    let graphs: Box<dyn Iterator<Item = Graph>> = match source {
        Some(path) => {
            let bytes = read_input(path)?;
            let graphs = parse_graph6(&bytes)
                .map_err(|e| Failure::new(EXIT_INPUT, format!("{}: {e}", path.display())))?;
            Box::new(graphs.into_iter())
        }
        None => {
            if max_vertices > MAX_LABELLED_SWEEP {
                return Err(Failure::new(
                    EXIT_INPUT,
                    format!(
                        "labelled sweep supports at most {MAX_LABELLED_SWEEP} vertices; \
                         pass a graph6 corpus with --source for larger graphs"
                    ),
                ));
            }
            Box::new((1..=max_vertices).flat_map(audit::labelled_graphs))
        }
    };

    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut tally = SweepTally::default();
    let mut graphs = graphs.peekable();
    while graphs.peek().is_some() {
        let chunk: Vec<Graph> = graphs.by_ref().take(SWEEP_CHUNK).collect();
        tally.graphs += chunk.len();
        let results: Vec<Option<Result<audit::GraphAudit, Error>>> = chunk
            .par_iter()
            .map(|g| audit::is_connected_nonbipartite(g).then(|| audit::audit_graph(g)))
            .collect();
        for (g, result) in chunk.iter().zip(results) {
            let Some(result) = result else { continue };
            tally.eligible += 1;
            let a = result?;
            tally.normal += a.normal as usize;
            tally.r1 += a.r1 as usize;
            tally.facets += a.facets;
            if a.passed() {
                continue;
            }
            tally.failed_graphs += 1;
            for inv in &a.failures {
                let k = Invariant::ALL.iter().position(|i| i == inv).expect("listed");
                tally.per_invariant[k] += 1;
            }
            let names: Vec<&str> = a.failures.iter().map(|i| i.name()).collect();
            let _ = writeln!(out, "failed: {} [{}]", to_graph6(g), names.join(", "));
            let _ = write!(out, "{}", g.to_edge_list());
            if early_exit {
                break;
            }
        }
        if early_exit && tally.failed_graphs > 0 {
            break;
        }
    }

    let _ = writeln!(out, "graphs: {}", tally.graphs);
    let _ = writeln!(out, "connected nonbipartite: {}", tally.eligible);
    let _ = writeln!(out, "normal: {}", tally.normal);
    let _ = writeln!(out, "r1: {}", tally.r1);
    let _ = writeln!(out, "facets checked: {}", tally.facets);
    for (inv, count) in Invariant::ALL.iter().zip(tally.per_invariant) {
        let _ = writeln!(out, "{inv}: {count} failures");
    }
    let _ = writeln!(out, "disagreements: {}", tally.failed_graphs);
    eprintln!("elapsed: {:.3?}", started.elapsed());
    Ok(if tally.failed_graphs == 0 { 0 } else { EXIT_INTERNAL })
}

fn cmd_generate(
    family: FamilyName,
    params: [Option<usize>; 4],
    out: Option<&Path>,
) -> Result<u8, Failure> {
    let [k, n, a, b] = params;
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| Failure::new(EXIT_INPUT, format!("missing --{flag}")))
    };
    let family = match family {
        FamilyName::Bridge => Family::Bridge(need(k, "k")?),
        FamilyName::Cycle => Family::Cycle(need(n, "n")?),
        FamilyName::Complete => Family::Complete(need(n, "n")?),
        FamilyName::CompleteBipartite => Family::CompleteBipartite(need(a, "a")?, need(b, "b")?),
    };
    let g = family.generate().map_err(|e| Failure::new(EXIT_INPUT, e.to_string()))?;
    let text = g.to_edge_list();
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::new(EXIT_INPUT, format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Classify { input, early_exit } => cmd_classify(input, *early_exit),
        Command::Facets { input } => cmd_facets(input),
        Command::Oracle { input } => cmd_oracle(input),
        Command::Sweep { max_vertices, source, early_exit } => {
            cmd_sweep(*max_vertices, source.as_deref(), *early_exit)
        }
        Command::Generate { family, k, n, a, b, out } => {
            cmd_generate(*family, [*k, *n, *a, *b], out.as_deref())
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
