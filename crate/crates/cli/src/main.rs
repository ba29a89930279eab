//! Command-line driver: constructions, decompositions, realizations,
//! transformation searches and table reproduction.
//!
//! Exit codes: 0 success, 1 domain error, 2 budget exhausted (inconclusive),
//! 64 usage error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use matroidal::alpha::{alpha1, alpha2, alpha3, search_min_dependent, SearchLimits};
use matroidal::clutter::Clutter;
use matroidal::config::{comb_closure_components, irreducibility_tag, Configuration};
use matroidal::error::Error;
use matroidal::forest::{decompose_forest_variety, Collection};
use matroidal::hardness::{fano_route, hardness_pipeline, HardnessOutcome};
use matroidal::hypergraph::{
    ci_model_to_hypergraph, delta_forest, delta_grid, pad_with_big_circuits, Forest, GridShape,
};
use matroidal::io::{
    configuration_id, ClutterJson, DecompositionEntryJson, ForestJson,
    MatrixJson, MatroidJson, TraceStepJson,
};
use matroidal::matroid::Matroid;
use matroidal::oracle::{brute_minimal_dependent, count_grid_types, MatroidCatalog};
use matroidal::ratmat::Rational;
use matroidal::realize::{
    perturb_to_realization, realize_by_plan, realize_forest_matroid,
    realize_grid_unique_minimal, unique_minimal_circuits, BuildPlan, PlanStep,
};
use matroidal::subset::{GroundSet, Subset};

#[derive(Parser)]
#[command(name = "matroidal", version, about = "Matroid-level decomposition of determinantal hypergraph varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Seed for every randomized construction (reports embed it).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Node budget for searches / retry budget for realizations.
    #[arg(long, global = true, default_value_t = 200_000)]
    budget: usize,

    /// Ambient dimension where a command needs one.
    #[arg(long, global = true, default_value_t = 3)]
    d: u32,

    /// Output format.
    #[arg(long, global = true, default_value = "json")]
    format: Format,

    /// Directory for report files (stdout when absent).
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Directory for catalog cache files.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Build one of the hypergraph families.
    Delta {
        #[command(subcommand)]
        which: DeltaCmd,
    },
    /// Minimal dependent matroids by three different routes.
    MinMatroids {
        #[command(subcommand)]
        which: MinCmd,
    },
    /// Irreducible decompositions.
    Decompose {
        #[command(subcommand)]
        which: DecomposeCmd,
    },
    /// Combinatorial-closure component lists of configurations.
    Closure {
        #[command(subcommand)]
        which: ClosureCmd,
    },
    /// Exact rational realizations.
    Realize {
        #[command(subcommand)]
        which: RealizeCmd,
    },
    /// Perturb a closure point into an exact realization.
    Perturb(PerturbArgs),
    /// Apply or search clutter transformations.
    Alpha {
        #[command(subcommand)]
        which: AlphaCmd,
    },
    /// The grid-embedding pipeline (restriction isomorphic to the input).
    Hardness(HardnessArgs),
    /// Combinatorial-type counts for the 2-row grid family.
    GridTypes(GridTypesArgs),
    /// Build or cache the rank-3 matroid catalog.
    Catalog(CatalogArgs),
}

#[derive(Subcommand)]
enum DeltaCmd {
    /// Consecutive forest hypergraph of a forest.
    Forest(ForestArgs),
    /// Grid hypergraph of a k x l grid.
    Grid(GridArgs),
    /// Grid hypergraph with its conditional-independence labels.
    Ci(CiArgs),
}

#[derive(Subcommand)]
enum MinCmd {
    /// Breadth-first closure under the three transformations.
    Alpha(ClutterArgs),
    /// Brute-force enumeration ground truth.
    Oracle(ClutterArgs),
    /// Prime-collection matroids of a forest.
    Forest(ForestArgs),
}

#[derive(Subcommand)]
enum DecomposeCmd {
    Forest(DecomposeForestArgs),
}

#[derive(Subcommand)]
enum ClosureCmd {
    Components(ConfigArgs),
}

#[derive(Subcommand)]
enum RealizeCmd {
    /// Realize the matroid of a collection on a forest.
    Forest(RealizeForestArgs),
    /// Realize the unique minimal grid matroid.
    Grid(GridArgs),
    /// Replay a build plan.
    Plan(PlanArgs),
}

#[derive(Subcommand)]
enum AlphaCmd {
    /// Apply a single transformation.
    Run(AlphaRunArgs),
    /// Search for minimal dependent matroids.
    Search(ClutterArgs),
}

#[derive(Args)]
struct ForestArgs {
    /// Edges as comma-separated pairs: `12,23,34` or `1-2,2-3,3-4`.
    #[arg(long)]
    edges: String,
    /// Vertex count (default: the largest label mentioned).
    #[arg(long)]
    n: Option<u32>,
    /// Write the glued-path graph of each component in DOT form.
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args)]
struct GridArgs {
    #[arg(long)]
    k: u32,
    #[arg(long)]
    l: u32,
    #[arg(long, default_value_t = 3)]
    s: u32,
    #[arg(long, default_value_t = 3)]
    t: u32,
}

#[derive(Args)]
struct CiArgs {
    #[arg(long)]
    k: u32,
    #[arg(long)]
    l: u32,
    #[arg(long, default_value_t = 2)]
    s: u32,
    #[arg(long, default_value_t = 3)]
    t: u32,
}

#[derive(Args)]
struct ClutterArgs {
    /// Edges as comma-separated label groups: `1234,1235` or `1.2.3.4,...`.
    #[arg(long)]
    edges: String,
    #[arg(long)]
    n: u32,
    /// Pad with the implicit (d+1)-subset layer before running.
    #[arg(long, default_value_t = false)]
    pad: bool,
    /// Also report dominated terminal matroids (search only).
    #[arg(long, default_value_t = false)]
    include_nonminimal: bool,
}

#[derive(Args)]
struct DecomposeForestArgs {
    #[command(flatten)]
    forest: ForestArgs,
    /// Attach a verified rational realization to each component.
    #[arg(long, default_value_t = false)]
    realize: bool,
}

#[derive(Args)]
struct ConfigArgs {
    /// Number of points.
    #[arg(long)]
    points: u32,
    /// Lines as comma-separated label groups: `123,145,167`.
    #[arg(long)]
    lines: String,
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args)]
struct RealizeForestArgs {
    #[command(flatten)]
    forest: ForestArgs,
    /// Singleton vertices of the collection: `4,7`.
    #[arg(long, default_value = "")]
    singletons: String,
    /// Pair members of the collection: `34,45`.
    #[arg(long, default_value = "")]
    pairs: String,
}

#[derive(Args)]
struct PlanArgs {
    /// Steps: `loop`, `coloop`, `free3`, `line:a:b`, `parallel:x`, comma-separated.
    #[arg(long)]
    steps: String,
}

#[derive(Args)]
struct PerturbArgs {
    /// Matrix file in the JSON matrix schema.
    #[arg(long)]
    matrix: PathBuf,
    /// Lines of the target configuration: `123,345`.
    #[arg(long)]
    lines: String,
    /// Number of points (default: matrix columns).
    #[arg(long)]
    points: Option<u32>,
    /// Loop points of the target component.
    #[arg(long, default_value = "")]
    loops: String,
    /// Distance bound, e.g. `1/1000`.
    #[arg(long)]
    eps: String,
}

#[derive(Args)]
struct AlphaRunArgs {
    #[arg(long, value_parser = ["a1", "a2", "a3"])]
    op: String,
    #[command(flatten)]
    clutter: ClutterArgs,
    /// First member for a1, e.g. `1234`.
    #[arg(long)]
    a1: Option<String>,
    /// Second member for a1.
    #[arg(long)]
    a2: Option<String>,
}

#[derive(Args)]
struct HardnessArgs {
    /// Circuits of the input matroid: `123` (empty for a free matroid).
    #[arg(long, default_value = "")]
    circuits: String,
    #[arg(long)]
    n: Option<u32>,
    /// Run the 7x7 route whose simplification is the Fano matroid.
    #[arg(long, default_value_t = false)]
    fano: bool,
}

#[derive(Args)]
struct GridTypesArgs {
    #[arg(long)]
    k: u32,
    #[arg(long)]
    l: u32,
}

#[derive(Args)]
struct CatalogArgs {
    #[arg(long)]
    n: u32,
}

// ---------------------------------------------------------------------------
// label parsing
// ---------------------------------------------------------------------------

/// Parse one label group: `123` (single digits), `1.2.13` or `1-2-13`.
fn parse_group(token: &str) -> Result<Vec<u32>, String> {
    let token = token.trim();
    if token.is_empty() {
        return Ok(Vec::new());
    }
    if token.contains('.') || token.contains('-') {
        token
            .split(['.', '-'])
            .map(|t| t.parse::<u32>().map_err(|_| format!("bad label '{t}'")))
            .collect()
    } else if token.chars().all(|c| c.is_ascii_digit()) {
        Ok(token
            .chars()
            .map(|c| c.to_digit(10).expect("digit") )
            .collect())
    } else {
        Err(format!("cannot parse label group '{token}'"))
    }
}

fn parse_groups(groups: &str) -> Result<Vec<Vec<u32>>, String> {
    groups.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(parse_group)
        .collect()
}

fn parse_forest(args: &ForestArgs) -> Result<Forest, CliError> {
    let groups = parse_groups(&args.edges).map_err(CliError::Usage)?;
    let mut edges = Vec::new();
    let mut max_label = 1;
    for g in &groups {
        if g.len() != 2 {
            return Err(CliError::Usage(format!("edge {g:?} is not a pair")));
        }
        edges.push((g[0], g[1]));
        max_label = max_label.max(g[0]).max(g[1]);
    }
    let n = args.n.unwrap_or(max_label);
    Forest::new(n, &edges).map_err(CliError::Domain)
}

fn parse_clutter(args: &ClutterArgs, d: u32) -> Result<Clutter, CliError> {
    let groups = parse_groups(&args.edges).map_err(CliError::Usage)?;
    let ground = GroundSet::new_extended(args.n).map_err(CliError::Domain)?;
    let edges: Vec<Subset> = groups.iter().map(|g| Subset::from_labels(g)).collect();
    let clutter = Clutter::from_family(ground, d, edges);
    if args.pad {
        pad_with_big_circuits(&clutter, d).map_err(CliError::Domain)
    } else {
        Ok(clutter)
    }
}

fn parse_rational(s: &str) -> Result<Rational, CliError> {
    let parse_int = |t: &str| {
        t.parse::<i64>()
            .map_err(|_| CliError::Usage(format!("bad rational '{s}'")))
    };
    match s.split_once('/') {
        Some((a, b)) => Ok(Rational::new(parse_int(a)?.into(), parse_int(b)?.into())),
        None => Ok(Rational::from_integer(parse_int(s)?.into())),
    }
}

// ---------------------------------------------------------------------------
// reports
// ---------------------------------------------------------------------------

enum CliError {
    Usage(String),
    Domain(Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 64,
            CliError::Domain(Error::BudgetExhausted { .. }) => 2,
            CliError::Domain(Error::RetryBudgetExhausted(_)) => 2,
            CliError::Domain(_) => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(m) => format!("usage error: {m}"),
            CliError::Domain(e) => format!("error: {e}"),
        }
    }
}

struct Reporter {
    format: Format,
    out: Option<PathBuf>,
}

impl Reporter {
    fn emit<T: Serialize>(&self, name: &str, value: &T, text: String) -> Result<(), CliError> {
        let body = match self.format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(value).expect("serializable report");
                s.push('\n');
                s
            }
            Format::Text => text,
        };
        match &self.out {
            None => {
                print!("{body}");
                Ok(())
            }
            Some(dir) => {
                std::fs::create_dir_all(dir)
                    .map_err(|e| CliError::Usage(format!("cannot create {dir:?}: {e}")))?;
                let ext = if self.format == Format::Json { "json" } else { "txt" };
                let path = dir.join(format!("{name}.{ext}"));
                let mut f = std::fs::File::create(&path)
                    .map_err(|e| CliError::Usage(format!("cannot write {path:?}: {e}")))?;
                f.write_all(body.as_bytes())
                    .map_err(|e| CliError::Usage(format!("write failed: {e}")))?;
                eprintln!("wrote {path:?}");
                Ok(())
            }
        }
    }
}

#[derive(Serialize)]
struct ClutterReport {
    seed: u64,
    clutter: ClutterJson,
}

#[derive(Serialize)]
struct CiReport {
    seed: u64,
    statements: [String; 2],
    cardinalities: String,
    notes: Vec<String>,
    clutter: ClutterJson,
}

#[derive(Serialize)]
struct MinimalReport {
    seed: u64,
    method: String,
    complete: bool,
    states_explored: Option<usize>,
    minimal: Vec<MatroidJson>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    nonminimal_terminals: Vec<MatroidJson>,
}

#[derive(Serialize)]
struct DecompositionReport {
    seed: u64,
    forest: ForestJson,
    components: Vec<DecompositionEntryJson>,
}

#[derive(Serialize)]
struct ClosureReport {
    seed: u64,
    forest_like: bool,
    irreducibility: String,
    components: Vec<ClosureEntry>,
}

#[derive(Serialize)]
struct ClosureEntry {
    loops: Vec<u32>,
    matroid: MatroidJson,
}

#[derive(Serialize)]
struct RealizationReport {
    seed: u64,
    matroid: MatroidJson,
    matrix: MatrixJson,
    verified: bool,
}

#[derive(Serialize)]
struct HardnessReport {
    seed: u64,
    shape: (u32, u32, u32, u32),
    relabel: Vec<u32>,
    restriction_cells: Vec<u32>,
    matroid: MatroidJson,
    restriction: MatroidJson,
    trace: Vec<TraceStepJson>,
}

#[derive(Serialize)]
struct GridTypesReport {
    seed: u64,
    k: u32,
    l: u32,
    minimal_matroids: usize,
    simplification_types: usize,
    covered_types: usize,
    arrangement_types: usize,
    dependent_arrangement_types: usize,
    interpretation: String,
}

fn matroid_text(m: &Matroid) -> String {
    let circuits: Vec<String> = m.circuits().iter().map(|c| format!("{c}")).collect();
    format!("n={} circuits: {}", m.ground_size(), circuits.join(" "))
}

// ---------------------------------------------------------------------------
// command bodies
// ---------------------------------------------------------------------------

fn run(cli: Cli) -> Result<(), CliError> {
    let reporter = Reporter {
        format: cli.format,
        out: cli.out.clone(),
    };
    let seed = cli.seed;
    match cli.command {
        Command::Delta { which } => match which {
            DeltaCmd::Forest(args) => {
                let forest = parse_forest(&args)?;
                let delta = delta_forest(&forest);
                if let Some(path) = &args.dot {
                    let config_dot = dot_for_forest(&forest);
                    std::fs::write(path, config_dot)
                        .map_err(|e| CliError::Usage(format!("cannot write dot: {e}")))?;
                }
                let text = format!(
                    "delta_forest on {} vertices: {} explicit edges + implicit 4-subset layer\n{}\n",
                    forest.vertex_count(),
                    delta.explicit_edges().len(),
                    delta
                        .explicit_edges()
                        .iter()
                        .map(|e| format!("{e}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                );
                reporter.emit(
                    "delta-forest",
                    &ClutterReport {
                        seed,
                        clutter: (&delta).into(),
                    },
                    text,
                )
            }
            DeltaCmd::Grid(args) => {
                let shape = GridShape::new(args.k, args.l, args.s, args.t)
                    .map_err(CliError::Domain)?;
                let delta = delta_grid(shape);
                let text = format!(
                    "delta_grid({},{},{},{}): {} edges\n",
                    args.k,
                    args.l,
                    args.s,
                    args.t,
                    delta.edge_count()
                );
                reporter.emit(
                    "delta-grid",
                    &ClutterReport {
                        seed,
                        clutter: (&delta).into(),
                    },
                    text,
                )
            }
            DeltaCmd::Ci(args) => {
                let model = ci_model_to_hypergraph(cli.d, args.k, args.l, args.s, args.t)
                    .map_err(CliError::Domain)?;
                let text = format!(
                    "CI model: {} and {}\n{}\nnotes: {}\nedges: {}\n",
                    model.statements[0],
                    model.statements[1],
                    model.cardinalities,
                    model.notes.join("; "),
                    model.clutter.edge_count()
                );
                reporter.emit(
                    "delta-ci",
                    &CiReport {
                        seed,
                        statements: model.statements.clone(),
                        cardinalities: model.cardinalities.clone(),
                        notes: model.notes.clone(),
                        clutter: (&model.clutter).into(),
                    },
                    text,
                )
            }
        },
        Command::MinMatroids { which } => match which {
            MinCmd::Alpha(args) => {
                let clutter = parse_clutter(&args, cli.d)?;
                let limits = SearchLimits {
                    max_states: cli.budget,
                    max_depth: 64,
                };
                let outcome =
                    search_min_dependent(&clutter, limits).map_err(CliError::Domain)?;
                let text = outcome
                    .minimal
                    .iter()
                    .map(matroid_text)
                    .collect::<Vec<_>>()
                    .join("\n")
                    + "\n";
                reporter.emit(
                    "min-matroids-alpha",
                    &MinimalReport {
                        seed,
                        method: "alpha-search".to_string(),
                        complete: outcome.complete,
                        states_explored: Some(outcome.states_explored),
                        minimal: outcome.minimal.iter().map(MatroidJson::from).collect(),
                        nonminimal_terminals: if args.include_nonminimal {
                            outcome
                                .all_terminal
                                .iter()
                                .filter(|m| !outcome.minimal.contains(m))
                                .map(MatroidJson::from)
                                .collect()
                        } else {
                            Vec::new()
                        },
                    },
                    text,
                )
            }
            MinCmd::Oracle(args) => {
                let clutter = parse_clutter(&args, cli.d)?;
                let minimal = brute_minimal_dependent(&clutter).map_err(CliError::Domain)?;
                let text = minimal
                    .iter()
                    .map(matroid_text)
                    .collect::<Vec<_>>()
                    .join("\n")
                    + "\n";
                reporter.emit(
                    "min-matroids-oracle",
                    &MinimalReport {
                        seed,
                        method: "brute-force".to_string(),
                        complete: true,
                        states_explored: None,
                        minimal: minimal.iter().map(MatroidJson::from).collect(),
                        nonminimal_terminals: Vec::new(),
                    },
                    text,
                )
            }
            MinCmd::Forest(args) => {
                let forest = parse_forest(&args)?;
                let comps = decompose_forest_variety(&forest).map_err(CliError::Domain)?;
                let text = comps
                    .iter()
                    .map(|c| matroid_text(&c.matroid))
                    .collect::<Vec<_>>()
                    .join("\n")
                    + "\n";
                reporter.emit(
                    "min-matroids-forest",
                    &MinimalReport {
                        seed,
                        method: "prime-collections".to_string(),
                        complete: true,
                        states_explored: None,
                        minimal: comps.iter().map(|c| MatroidJson::from(&c.matroid)).collect(),
                        nonminimal_terminals: Vec::new(),
                    },
                    text,
                )
            }
        },
        Command::Decompose { which } => match which {
            DecomposeCmd::Forest(args) => {
                let forest = parse_forest(&args.forest)?;
                let comps = decompose_forest_variety(&forest).map_err(CliError::Domain)?;
                let mut entries = Vec::new();
                for (i, comp) in comps.iter().enumerate() {
                    let realization = if args.realize {
                        Some(
                            realize_forest_matroid(
                                &forest,
                                &comp.collection,
                                seed.wrapping_add(i as u64),
                                cli.budget.min(u32::MAX as usize) as u32,
                            )
                            .map_err(CliError::Domain)?,
                        )
                    } else {
                        None
                    };
                    entries.push(DecompositionEntryJson::new(comp, realization.as_ref()));
                }
                let text = comps
                    .iter()
                    .map(|c| {
                        format!(
                            "collection singletons={:?} pairs={:?}: {}",
                            c.collection.singletons.labels(),
                            c.collection.pairs,
                            matroid_text(&c.matroid)
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
                    + "\n";
                reporter.emit(
                    "decompose-forest",
                    &DecompositionReport {
                        seed,
                        forest: (&forest).into(),
                        components: entries,
                    },
                    text,
                )
            }
        },
        Command::Closure { which } => match which {
            ClosureCmd::Components(args) => {
                let groups = parse_groups(&args.lines).map_err(CliError::Usage)?;
                let lines: Vec<Subset> = groups.iter().map(|g| Subset::from_labels(g)).collect();
                let config =
                    Configuration::new(args.points, lines).map_err(CliError::Domain)?;
                if let Some(path) = &args.dot {
                    std::fs::write(path, config.path_graph().to_dot())
                        .map_err(|e| CliError::Usage(format!("cannot write dot: {e}")))?;
                }
                let comps = comb_closure_components(&config).map_err(CliError::Domain)?;
                let tag = irreducibility_tag(&config);
                let text = comps
                    .iter()
                    .map(|c| format!("loops {:?}: {}", c.loops.labels(), matroid_text(&c.matroid)))
                    .collect::<Vec<_>>()
                    .join("\n")
                    + "\n";
                reporter.emit(
                    "closure-components",
                    &ClosureReport {
                        seed,
                        forest_like: config.is_forest_like().0,
                        irreducibility: format!("{tag:?}"),
                        components: comps
                            .iter()
                            .map(|c| ClosureEntry {
                                loops: c.loops.labels(),
                                matroid: (&c.matroid).into(),
                            })
                            .collect(),
                    },
                    text,
                )
            }
        },
        Command::Realize { which } => match which {
            RealizeCmd::Forest(args) => {
                let forest = parse_forest(&args.forest)?;
                let singles = parse_groups(&args.singletons)
                    .map_err(CliError::Usage)?
                    .into_iter()
                    .flatten()
                    .collect::<Vec<_>>();
                let pair_groups = parse_groups(&args.pairs).map_err(CliError::Usage)?;
                let mut pairs = Vec::new();
                for g in pair_groups {
                    if g.len() != 2 {
                        return Err(CliError::Usage(format!("pair {g:?} is not a pair")));
                    }
                    pairs.push((g[0], g[1]));
                }
                let collection = Collection::new(Subset::from_labels(&singles), pairs);
                let matrix = realize_forest_matroid(
                    &forest,
                    &collection,
                    seed,
                    cli.budget.min(u32::MAX as usize) as u32,
                )
                .map_err(CliError::Domain)?;
                let matroid = matroidal::forest::matroid_from_collection(&forest, &collection)
                    .map_err(CliError::Domain)?;
                emit_realization(&reporter, seed, &matroid, &matrix)
            }
            RealizeCmd::Grid(args) => {
                let shape = GridShape::new(args.k, args.l, args.s, args.t)
                    .map_err(CliError::Domain)?;
                let matroid =
                    unique_minimal_circuits(shape, cli.d).map_err(CliError::Domain)?;
                let matrix = realize_grid_unique_minimal(
                    shape,
                    cli.d,
                    seed,
                    cli.budget.min(u32::MAX as usize) as u32,
                )
                .map_err(CliError::Domain)?;
                emit_realization(&reporter, seed, &matroid, &matrix)
            }
            RealizeCmd::Plan(args) => {
                let mut steps = Vec::new();
                for token in args.steps.split(',').filter(|t| !t.trim().is_empty()) {
                    let token = token.trim();
                    let step = if token == "loop" {
                        PlanStep::Loop
                    } else if token == "coloop" {
                        PlanStep::Coloop
                    } else if token == "free3" {
                        PlanStep::FreeToRank3Flat
                    } else if let Some(rest) = token.strip_prefix("line:") {
                        let parts: Vec<&str> = rest.split(':').collect();
                        if parts.len() != 2 {
                            return Err(CliError::Usage(format!("bad step '{token}'")));
                        }
                        PlanStep::FreeToLineThrough(
                            parts[0].parse().map_err(|_| CliError::Usage(format!("bad step '{token}'")))?,
                            parts[1].parse().map_err(|_| CliError::Usage(format!("bad step '{token}'")))?,
                        )
                    } else if let Some(rest) = token.strip_prefix("parallel:") {
                        PlanStep::ParallelTo(
                            rest.parse().map_err(|_| CliError::Usage(format!("bad step '{token}'")))?,
                        )
                    } else {
                        return Err(CliError::Usage(format!("unknown step '{token}'")));
                    };
                    steps.push(step);
                }
                let (matroid, matrix) =
                    realize_by_plan(&BuildPlan { steps }, seed).map_err(CliError::Domain)?;
                emit_realization(&reporter, seed, &matroid, &matrix)
            }
        },
        Command::Perturb(args) => {
            let raw = std::fs::read_to_string(&args.matrix)
                .map_err(|e| CliError::Usage(format!("cannot read {:?}: {e}", args.matrix)))?;
            let matrix_json: MatrixJson = serde_json::from_str(&raw)
                .map_err(|e| CliError::Usage(format!("bad matrix JSON: {e}")))?;
            let matrix = matrix_json.into_matrix().map_err(CliError::Domain)?;
            let groups = parse_groups(&args.lines).map_err(CliError::Usage)?;
            let lines: Vec<Subset> = groups.iter().map(|g| Subset::from_labels(g)).collect();
            let points = args.points.unwrap_or(matrix.cols() as u32);
            let config = Configuration::new(points, lines).map_err(CliError::Domain)?;
            let loops = Subset::from_labels(
                &parse_groups(&args.loops)
                    .map_err(CliError::Usage)?
                    .into_iter()
                    .flatten()
                    .collect::<Vec<_>>(),
            );
            let eps = parse_rational(&args.eps)?;
            let out = perturb_to_realization(&matrix, &config, loops, &eps)
                .map_err(CliError::Domain)?;
            let target = matroidal::config::set_loops(&config, loops);
            emit_realization(&reporter, seed, &target, &out)
        }
        Command::Alpha { which } => match which {
            AlphaCmd::Run(args) => {
                let clutter = parse_clutter(&args.clutter, cli.d)?;
                let next = match args.op.as_str() {
                    "a1" => {
                        let a1 = args
                            .a1
                            .as_deref()
                            .ok_or_else(|| CliError::Usage("a1 needs --a1".to_string()))?;
                        let a2 = args
                            .a2
                            .as_deref()
                            .ok_or_else(|| CliError::Usage("a1 needs --a2".to_string()))?;
                        let a1 = Subset::from_labels(&parse_group(a1).map_err(CliError::Usage)?);
                        let a2 = Subset::from_labels(&parse_group(a2).map_err(CliError::Usage)?);
                        alpha1(&clutter, a1, a2).map_err(CliError::Domain)?
                    }
                    "a2" => alpha2(&clutter),
                    "a3" => alpha3(&clutter),
                    _ => unreachable!("clap validates"),
                };
                let text = format!(
                    "{}\n",
                    next.edges()
                        .iter()
                        .map(|e| format!("{e}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                );
                reporter.emit(
                    "alpha-run",
                    &ClutterReport {
                        seed,
                        clutter: (&next).into(),
                    },
                    text,
                )
            }
            AlphaCmd::Search(args) => {
                let clutter = parse_clutter(&args, cli.d)?;
                let limits = SearchLimits {
                    max_states: cli.budget,
                    max_depth: 64,
                };
                let outcome =
                    search_min_dependent(&clutter, limits).map_err(CliError::Domain)?;
                let text = outcome
                    .minimal
                    .iter()
                    .map(matroid_text)
                    .collect::<Vec<_>>()
                    .join("\n")
                    + "\n";
                reporter.emit(
                    "alpha-search",
                    &MinimalReport {
                        seed,
                        method: "alpha-search".to_string(),
                        complete: outcome.complete,
                        states_explored: Some(outcome.states_explored),
                        minimal: outcome.minimal.iter().map(MatroidJson::from).collect(),
                        nonminimal_terminals: if args.include_nonminimal {
                            outcome
                                .all_terminal
                                .iter()
                                .filter(|m| !outcome.minimal.contains(m))
                                .map(MatroidJson::from)
                                .collect()
                        } else {
                            Vec::new()
                        },
                    },
                    text,
                )
            }
        },
        Command::Hardness(args) => {
            let outcome: HardnessOutcome = if args.fano {
                fano_route().map_err(CliError::Domain)?
            } else {
                let groups = parse_groups(&args.circuits).map_err(CliError::Usage)?;
                let circuits: Vec<Subset> =
                    groups.iter().map(|g| Subset::from_labels(g)).collect();
                let max_label = circuits
                    .iter()
                    .flat_map(|c| c.labels())
                    .max()
                    .unwrap_or(1);
                let n = args.n.unwrap_or(max_label);
                let matroid = Matroid::new(GroundSet::new_extended(n).map_err(CliError::Domain)?, circuits)
                    .map_err(CliError::Domain)?;
                hardness_pipeline(&matroid).map_err(CliError::Domain)?
            };
            let text = format!(
                "grid {}x{} (s={}, t={}), trace {} steps, restriction {}\n",
                outcome.embedding.shape.k,
                outcome.embedding.shape.l,
                outcome.embedding.shape.s,
                outcome.embedding.shape.t,
                outcome.trace.len(),
                matroid_text(&outcome.restriction),
            );
            reporter.emit(
                "hardness",
                &HardnessReport {
                    seed,
                    shape: (
                        outcome.embedding.shape.k,
                        outcome.embedding.shape.l,
                        outcome.embedding.shape.s,
                        outcome.embedding.shape.t,
                    ),
                    relabel: outcome.embedding.relabel.clone(),
                    restriction_cells: outcome.embedding.restriction_cells.labels(),
                    matroid: (&outcome.matroid).into(),
                    restriction: (&outcome.restriction).into(),
                    trace: outcome.trace.iter().map(TraceStepJson::from).collect(),
                },
                text,
            )
        }
        Command::GridTypes(args) => {
            let shape = GridShape::new(args.k, args.l, 2, 3).map_err(CliError::Domain)?;
            let count = count_grid_types(shape).map_err(CliError::Domain)?;
            let text = format!(
                "k={} l={}: {} minimal matroids; types: simplification {}, covered {}, arrangement {}, dependent-arrangement {}\n",
                args.k,
                args.l,
                count.minimal_matroids,
                count.simplification_types,
                count.covered_types,
                count.arrangement_types,
                count.dependent_arrangement_types,
            );
            reporter.emit(
                "grid-types",
                &GridTypesReport {
                    seed,
                    k: args.k,
                    l: args.l,
                    minimal_matroids: count.minimal_matroids,
                    simplification_types: count.simplification_types,
                    covered_types: count.covered_types,
                    arrangement_types: count.arrangement_types,
                    dependent_arrangement_types: count.dependent_arrangement_types,
                    interpretation:
                        "line/junction patterns over dependent matroids (the stable count as l grows)"
                            .to_string(),
                },
                text,
            )
        }
        Command::Catalog(args) => {
            let catalog = MatroidCatalog::build(args.n).map_err(CliError::Domain)?;
            if let Some(dir) = &cli.cache_dir {
                std::fs::create_dir_all(dir)
                    .map_err(|e| CliError::Usage(format!("cannot create {dir:?}: {e}")))?;
                let path = dir.join(format!("rank3-catalog-{}.bin", args.n));
                let mut f = std::fs::File::create(&path)
                    .map_err(|e| CliError::Usage(format!("cannot write {path:?}: {e}")))?;
                matroidal::oracle::write_catalog_cache(&catalog, &mut f)
                    .map_err(|e| CliError::Usage(format!("cache write failed: {e}")))?;
                eprintln!("wrote {path:?}");
            }
            #[derive(Serialize)]
            struct CatalogReport {
                seed: u64,
                n: u32,
                count: usize,
            }
            let text = format!("rank-<=3 matroids on [{}]: {}\n", args.n, catalog.len());
            reporter.emit(
                "catalog",
                &CatalogReport {
                    seed,
                    n: args.n,
                    count: catalog.len(),
                },
                text,
            )
        }
    }
}

fn emit_realization(
    reporter: &Reporter,
    seed: u64,
    matroid: &Matroid,
    matrix: &matroidal::ratmat::RationalMatrix,
) -> Result<(), CliError> {
    let verified =
        matroidal::ratmat::verify_realization(matrix, matroid).map_err(CliError::Domain)?;
    let text = format!(
        "{}\nmatrix {}x{} (config id {}), verified: {verified}\n",
        matroid_text(matroid),
        matrix.rows(),
        matrix.cols(),
        configuration_id(&matroid.simplify().matroid),
    );
    reporter.emit(
        "realization",
        &RealizationReport {
            seed,
            matroid: matroid.into(),
            matrix: matrix.into(),
            verified,
        },
        text,
    )
}

fn dot_for_forest(forest: &Forest) -> String {
    let mut out = String::from("graph forest {\n");
    for v in 1..=forest.vertex_count() {
        out.push_str(&format!("  v{v};\n"));
    }
    for &(a, b) in forest.edges() {
        out.push_str(&format!("  v{a} -- v{b};\n"));
    }
    out.push_str("}\n");
    out
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version requests are successes; everything else is usage
            let code = if e.use_stderr() { 64 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
