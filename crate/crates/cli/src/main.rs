//! `equisurf` command-line tool.
//!
//! Exit codes: 0 when everything checked out, 2 when `analyze --theorem`
//! finds a non-conforming remainder, 1 on any operational error (bad
//! arguments, unreadable files, precondition failures).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use equisurf::bounds::{size_bounds, BoundsReport, Surface};
use equisurf::constructions::{
    amalgam_construction, lower_bound_graph, multiply_subdivide, planar_bipartite_family, union_construction,
    ConstructionResult,
};
use equisurf::equimatch::{
    is_equimatchable_oracle, is_factor_critical, is_randomly_matchable, verify_main_theorem, TheoremCheck,
};
use equisurf::graph::io::{parse_graph, serialize_graph};
use equisurf::graph::{classify_basic, classify_shape, Bipartition, Graph, Shape};
use equisurf::matching::{maximum_matching_size, Matching};
use equisurf::topology::{
    embedding_join, face_trace, min_genus_search, multiply_subdivide_embedding, parse_rotation, serialize_rotation,
    Dart, EmbeddingStats, RotationSystem, SearchMode,
};

/// Version of every JSON document this tool writes.
const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "equisurf", version, about = "Equimatchable graphs, matchings and surface embeddings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a graph and test its matching properties.
    Analyze {
        path: PathBuf,
        /// Check every minimal isolating matching of every vertex.
        #[arg(long)]
        theorem: bool,
        #[arg(long)]
        json: bool,
    },
    /// Build a graph from one of the constructions.
    Generate {
        #[command(subcommand)]
        which: Construction,
    },
    /// Work with rotation systems.
    Embed {
        #[command(subcommand)]
        action: Embed,
    },
    /// Order bounds for equimatchable graphs on a surface.
    Bounds {
        #[arg(long, conflicts_with = "nonorientable", required_unless_present = "nonorientable")]
        genus: Option<u64>,
        /// Number of crosscaps.
        #[arg(long)]
        nonorientable: Option<u64>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct OutArgs {
    /// Graph file to write; the manifest goes to `<out>.json`.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Subcommand)]
enum Construction {
    /// K_(2n+1) of the given genus with k triangles glued at one vertex.
    Amalgam {
        #[arg(long)]
        genus: u64,
        #[arg(long, default_value_t = 2)]
        k: u64,
        #[arg(long)]
        nonorientable: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// K_(n,n) and K_(m+1,m) joined by two edges.
    Union {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Largest union graph of the given genus.
    Lowerbound {
        #[arg(long)]
        genus: u64,
        #[arg(long)]
        nonorientable: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Replace each edge of a 2-connected base graph by l subdivided copies.
    Multisub {
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        l: u64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// K_(k,2).
    Kk2 {
        #[arg(long)]
        k: u64,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    Anneal,
}

#[derive(Subcommand)]
enum Embed {
    /// Trace the faces of a rotation system.
    Trace {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Search for a minimum-genus rotation system of a graph.
    Search {
        graph: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long, required_if_eq("mode", "anneal"))]
        seed: Option<u64>,
        #[arg(long, required_if_eq("mode", "anneal"))]
        budget: Option<u64>,
        /// Rotation file to write.
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Join two embeddings by the edges u-x and v-y.
    Join {
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
        #[arg(long)]
        x: usize,
        #[arg(long)]
        y: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Replace each edge by l subdivided parallel copies.
    Multisub {
        path: PathBuf,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Serialize)]
struct AnalysisReport {
    schema_version: u32,
    vertices: usize,
    edges: usize,
    shape: Shape,
    connected: bool,
    biconnected: bool,
    bipartition: Option<Bipartition>,
    min_degree: usize,
    nu: usize,
    equimatchable: bool,
    /// Maximal matching smaller than `nu`.
    witness: Option<Matching>,
    factor_critical: bool,
    randomly_matchable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    theorem: Option<TheoremCheck>,
}

#[derive(Serialize)]
struct Manifest<'a> {
    schema_version: u32,
    construction: &'a str,
    graph_file: String,
    vertices: usize,
    edges: usize,
    #[serde(flatten)]
    result: &'a ConstructionResult,
}

#[derive(Serialize)]
struct FaceReport {
    darts: Vec<String>,
    vertices: Vec<usize>,
}

#[derive(Serialize)]
struct TraceReport {
    schema_version: u32,
    stats: EmbeddingStats,
    faces: Vec<FaceReport>,
}

#[derive(Serialize)]
struct SearchReport {
    schema_version: u32,
    mode: &'static str,
    seed: Option<u64>,
    budget: Option<u64>,
    genus: u64,
    euler_lower_bound: u64,
    certified_optimal: bool,
    work: u64,
    rotation_file: String,
}

#[derive(Serialize)]
struct TransformReport {
    schema_version: u32,
    operation: &'static str,
    stats: EmbeddingStats,
    rotation_file: String,
}

#[derive(Serialize)]
struct BoundsOutput {
    schema_version: u32,
    #[serde(flatten)]
    report: BoundsReport,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap would exit with 2, which is reserved for theorem violations
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Analyze { path, theorem, json } => analyze(&path, theorem, json),
        Command::Generate { which } => generate(which).map(|()| ExitCode::SUCCESS),
        Command::Embed { action } => embed(action).map(|()| ExitCode::SUCCESS),
        Command::Bounds { genus, nonorientable, json } => {
            let surface = match (genus, nonorientable) {
                (Some(g), None) => Surface::orientable(g),
                (None, Some(h)) => Surface::nonorientable(h)?,
                _ => bail!("give exactly one of --genus and --nonorientable"),
            };
            bounds(surface, json);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_rotation(path: &Path) -> Result<RotationSystem> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_rotation(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
}

fn shape_name(s: Shape) -> String {
    match s {
        Shape::Complete(n) => format!("K_{n}"),
        Shape::CompleteBipartite(a, b) => format!("K_{a},{b}"),
        Shape::Other => "other".into(),
    }
}

fn dart_name(d: Dart) -> String {
    format!("{}{}", d.edge(), if d.is_u_end() { '+' } else { '-' })
}

fn analyze(path: &Path, theorem: bool, json: bool) -> Result<ExitCode> {
    let g = read_graph(path)?;
    let basic = classify_basic(&g);
    let verdict = is_equimatchable_oracle(&g);
    let report = AnalysisReport {
        schema_version: SCHEMA_VERSION,
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        shape: classify_shape(&g),
        connected: basic.connected,
        biconnected: basic.biconnected,
        bipartition: basic.bipartition,
        min_degree: basic.min_degree,
        nu: maximum_matching_size(&g),
        equimatchable: verdict.equimatchable,
        witness: verdict.witness,
        factor_critical: is_factor_critical(&g),
        randomly_matchable: is_randomly_matchable(&g),
        theorem: theorem.then(|| verify_main_theorem(&g)),
    };
    let violated = report.theorem.as_ref().is_some_and(|t| !t.violations.is_empty());
    if json {
        print_json(&report);
    } else {
        println!("vertices: {}", report.vertices);
        println!("edges: {}", report.edges);
        println!("shape: {}", shape_name(report.shape));
        println!("connected: {}", report.connected);
        println!("biconnected: {}", report.biconnected);
        match &report.bipartition {
            Some(b) => println!("bipartition: {:?} | {:?}", b.side_a, b.side_b),
            None => println!("bipartition: none"),
        }
        println!("min degree: {}", report.min_degree);
        println!("matching number: {}", report.nu);
        println!("equimatchable: {}", report.equimatchable);
        if let Some(w) = &report.witness {
            println!("  smaller maximal matching: {:?}", w.edges());
        }
        println!("factor-critical: {}", report.factor_critical);
        println!("randomly matchable: {}", report.randomly_matchable);
        if let Some(t) = &report.theorem {
            let h = &t.hypotheses;
            println!(
                "hypotheses: biconnected={} factor_critical={} equimatchable={}",
                h.biconnected, h.factor_critical, h.equimatchable
            );
            println!("isolating matchings checked: {}", t.checked);
            println!("violations: {}", t.violations.len());
            for r in &t.violations {
                let comps: Vec<String> = r.components.iter().map(|c| shape_name(c.shape)).collect();
                println!("  v={} M={:?} components=[{}]", r.vertex, r.matching.edges(), comps.join(", "));
            }
            if !t.component_flags.is_empty() {
                println!("flagged components: {}", t.component_flags.len());
            }
        }
    }
    Ok(if violated { ExitCode::from(2) } else { ExitCode::SUCCESS })
}

fn generate(which: Construction) -> Result<()> {
    let (name, result, out) = match which {
        Construction::Amalgam { genus, k, nonorientable, out } => {
            ("amalgam", amalgam_construction(genus, k, !nonorientable)?, out)
        }
        Construction::Union { n, m, out } => ("union", union_construction(n, m)?, out),
        Construction::Lowerbound { genus, nonorientable, out } => {
            ("lowerbound", lower_bound_graph(genus, !nonorientable)?, out)
        }
        Construction::Multisub { base, l, out } => ("multisub", multiply_subdivide(&read_graph(&base)?, l)?, out),
        Construction::Kk2 { k, out } => ("kk2", planar_bipartite_family(k)?, out),
    };
    let path = out.out;
    write(&path, &serialize_graph(&result.graph))?;
    let manifest = Manifest {
        schema_version: SCHEMA_VERSION,
        construction: name,
        graph_file: path.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default(),
        vertices: result.graph.vertex_count(),
        edges: result.graph.edge_count(),
        result: &result,
    };
    let manifest_path = manifest_path(&path);
    write(&manifest_path, &(serde_json::to_string_pretty(&manifest)? + "\n"))?;
    println!(
        "wrote {} ({} vertices, {} edges) and {}",
        path.display(),
        manifest.vertices,
        manifest.edges,
        manifest_path.display()
    );
    Ok(())
}

fn manifest_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".json");
    PathBuf::from(s)
}

fn print_stats(s: &EmbeddingStats) {
    println!("vertices: {}", s.p);
    println!("edges: {}", s.q);
    println!("faces: {}", s.r);
    println!("genus: {}", s.genus);
}

fn embed(action: Embed) -> Result<()> {
    match action {
        Embed::Trace { path, json } => {
            let r = read_rotation(&path)?;
            let trace = face_trace(&r)?;
            let faces: Vec<FaceReport> = (0..trace.faces.len())
                .map(|i| FaceReport {
                    darts: trace.faces[i].iter().map(|&d| dart_name(d)).collect(),
                    vertices: trace.face_vertices(&r, i),
                })
                .collect();
            if json {
                print_json(&TraceReport { schema_version: SCHEMA_VERSION, stats: trace.stats, faces });
            } else {
                print_stats(&trace.stats);
                for (i, f) in faces.iter().enumerate() {
                    println!("face {i}: {} | vertices {:?}", f.darts.join(" "), f.vertices);
                }
            }
        }
        Embed::Search { graph, mode, seed, budget, out, json } => {
            let g = read_graph(&graph)?;
            let (name, search_mode) = match mode {
                Mode::Exhaustive => ("exhaustive", SearchMode::Exhaustive),
                Mode::Anneal => {
                    let (Some(seed), Some(budget)) = (seed, budget) else {
                        bail!("anneal mode needs --seed and --budget");
                    };
                    ("anneal", SearchMode::Anneal { seed, budget })
                }
            };
            let outcome = min_genus_search(&g, search_mode)?;
            write(&out, &serialize_rotation(&outcome.rotation))?;
            let report = SearchReport {
                schema_version: SCHEMA_VERSION,
                mode: name,
                seed: matches!(mode, Mode::Anneal).then_some(seed).flatten(),
                budget: matches!(mode, Mode::Anneal).then_some(budget).flatten(),
                genus: outcome.genus,
                euler_lower_bound: outcome.euler_lower_bound,
                certified_optimal: outcome.certified_optimal,
                work: outcome.work,
                rotation_file: out.display().to_string(),
            };
            if json {
                print_json(&report);
            } else {
                println!("genus: {}", report.genus);
                println!("euler lower bound: {}", report.euler_lower_bound);
                println!("certified optimal: {}", report.certified_optimal);
                println!("work: {}", report.work);
                println!("wrote {}", out.display());
            }
        }
        Embed::Join { left, right, u, v, x, y, out, json } => {
            let joined = embedding_join(&read_rotation(&left)?, u, v, &read_rotation(&right)?, x, y)?;
            write(&out, &serialize_rotation(&joined.rotation))?;
            transform_report("join", joined.stats, &out, json);
        }
        Embed::Multisub { path, l, out, json } => {
            let r = multiply_subdivide_embedding(&read_rotation(&path)?, l)?;
            let stats = face_trace(&r)?.stats;
            write(&out, &serialize_rotation(&r))?;
            transform_report("multisub", stats, &out, json);
        }
    }
    Ok(())
}

fn transform_report(operation: &'static str, stats: EmbeddingStats, out: &Path, json: bool) {
    if json {
        print_json(&TransformReport {
            schema_version: SCHEMA_VERSION,
            operation,
            stats,
            rotation_file: out.display().to_string(),
        });
    } else {
        print_stats(&stats);
        println!("wrote {}", out.display());
    }
}

fn bounds(surface: Surface, json: bool) {
    let report = size_bounds(surface);
    if json {
        print_json(&BoundsOutput { schema_version: SCHEMA_VERSION, report });
        return;
    }
    println!("surface: {surface}");
    println!("euler characteristic: {}", report.euler_characteristic);
    println!("randomly matchable bound: {}", report.rm_bound);
    println!("d_star: {}", report.d_star);
    match report.c_star {
        Some(c) => println!("c_star: {c}"),
        None => println!("c_star: none"),
    }
    println!("min degree threshold: {}", report.min_degree_threshold);
    println!("lower: {}", report.lower);
    println!("upper: {}", report.upper);
}
