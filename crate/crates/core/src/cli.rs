//! The `dichoose` command line.
//!
//! Exit status: 0 on success, 1 when a decision command answers negatively
//! (an invalid certificate, no L-colouring, a replay that differs), 2 on
//! usage, parse and runtime errors.

use std::sync::Mutex;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::caps::Caps;
use crate::certificate::{verify_certificate, LowerBoundCertificate};
use crate::constructions;
use crate::dicolour::{self, is_dicolouring};
use crate::error::{Error, Result};
use crate::extraction::{self, KoOptions};
use crate::format::{self, GraphFile};
use crate::graph::{is_star_forest, Digraph, Graph, VertexOrdering};
use crate::listcolour;
use crate::lists::ListAssignment;
use crate::manifest::{sha256_hex, strip_timing, tool_version, InputDigest, RunManifest};
use crate::orientation::random_orientation;
use crate::probability::{self, ColouringMode, ExperimentReport, PipelineOptions, SaturationParams, SearchMode, WitnessOutcome};

#[derive(Debug, Parser)]
#[command(name = "dichoose", version, about = "Dichromatic number, list dicolouring and orientation experiments")]
struct Cli {
    /// Output format; text is canonical.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write the primary output to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Search-cap overrides `key=value,...`, applied after DICHOOSE_CAPS.
    #[arg(long, global = true)]
    caps: Option<String>,
    /// Worker threads for parallel trials. Results do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate graphs and digraphs.
    #[command(subcommand)]
    Gen(GenCmd),
    /// Exact colouring parameters.
    #[command(subcommand)]
    Solve(SolveCmd),
    /// Subgraph extraction.
    #[command(subcommand)]
    Extract(ExtractCmd),
    /// Seeded experiments.
    #[command(subcommand)]
    Experiment(ExperimentCmd),
    /// Closed-form bounds and exact arithmetic checks.
    #[command(subcommand)]
    Bounds(BoundsCmd),
    /// Check certificates, colourings and replays.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Debug, Subcommand)]
enum GenCmd {
    /// The tournament on 2d(d+1) vertices with min(δ⁺, δ⁻) >= d and dichoosability 2.
    Tournament {
        #[arg(long)]
        d: usize,
    },
    /// Complete bipartite graph K_{a,b}; side A is 0..a.
    Knn {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    Complete {
        #[arg(long)]
        n: usize,
    },
    Cycle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        directed: bool,
    },
    Path {
        #[arg(long)]
        n: usize,
    },
    Transitive {
        #[arg(long)]
        n: usize,
    },
    /// Replace every edge of a graph by a digon.
    Bidirected { file: PathBuf },
    /// Uniformly random orientation of a graph.
    Orient {
        #[arg(long)]
        seed: u64,
        file: PathBuf,
    },
    /// G(n, p).
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
    },
    /// Random bipartite graph with sides 0..a and a..a+b.
    RandomBipartite {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
enum SolveCmd {
    /// Exact dichromatic number of a digraph, with an optimal dicolouring.
    Dichromatic { file: PathBuf },
    /// Exact chromatic number of a graph.
    Chromatic { file: PathBuf },
    /// Choosability of a graph, with a hardest list assignment below it.
    Choosability { file: PathBuf },
    /// Dichoosability of a digraph.
    Dichoosability { file: PathBuf },
    /// Maximum dichromatic number over all orientations of a graph.
    OrientationMax { file: PathBuf },
    /// Maximum dichoosability over all orientations of a graph.
    GraphDichoosability {
        /// Also write the lower-bound certificate here.
        #[arg(long)]
        certificate: Option<PathBuf>,
        file: PathBuf,
    },
    /// Decide whether a graph (digraph) has a proper colouring (dicolouring) from the lists.
    Lists {
        #[arg(long)]
        lists: PathBuf,
        file: PathBuf,
    },
    /// Dicolour a digraph through its backedge graph under a vertex order.
    Backedge {
        /// Comma-separated vertex order; defaults to 0, 1, ..., n-1.
        #[arg(long)]
        order: Option<String>,
        file: PathBuf,
    },
}

#[derive(Args, Debug)]
struct SideArgs {
    /// Use the side of the bipartition containing no component's smallest vertex as A.
    #[arg(long)]
    swap: bool,
}

#[derive(Debug, Subcommand)]
enum ExtractCmd {
    /// Bipartite subgraph from a maximum cut (exact for small graphs, local search otherwise).
    Maxcut { file: PathBuf },
    /// The maximal subgraph of minimum degree at least t.
    Core {
        #[arg(long)]
        t: usize,
        file: PathBuf,
    },
    /// Induced bipartite subgraph with A-degrees in [4d, 64d] and |A*| >= Γ/(128d)·|B*|.
    Ko {
        #[arg(long)]
        d: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random subsampling attempts per degree bucket.
        #[arg(long, default_value_t = 32)]
        attempts: usize,
        #[command(flatten)]
        sides: SideArgs,
        file: PathBuf,
    },
    /// A-vertices with at least k same-coloured neighbours and the monochromatic edges.
    Mono {
        #[arg(long)]
        colouring: PathBuf,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        sides: SideArgs,
        file: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Sampled,
}

#[derive(Debug, Subcommand)]
enum ExperimentCmd {
    /// Monte Carlo frequency of acyclic random orientations.
    Acyclic {
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        file: PathBuf,
    },
    /// Exact probability that a random orientation is acyclic.
    AcyclicExact { file: PathBuf },
    /// Fraction of saturated A-vertices under random B-lists.
    Saturation {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Fixed B-lists instead of random ones.
        #[arg(long)]
        lists: Option<PathBuf>,
        #[command(flatten)]
        sides: SideArgs,
        file: PathBuf,
    },
    /// Least number of truly saturated A-vertices over colourings of B.
    TrulySaturated {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        /// B-lists, one `<v>: <colours>` line per B-vertex.
        #[arg(long)]
        lists: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
        mode: ModeArg,
        /// Colourings sampled per trial in sampled mode.
        #[arg(long, default_value_t = 1000)]
        colourings: usize,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        sides: SideArgs,
        file: PathBuf,
    },
    /// Search for an orientation with no L-dicolouring.
    Witness {
        #[arg(long)]
        lists: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
        mode: ModeArg,
        #[arg(long, default_value_t = 1000)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        file: PathBuf,
    },
    /// Max cut, extraction, random lists and witness search end to end.
    Pipeline {
        #[arg(long)]
        r: usize,
        /// Run every stage even when the degree hypotheses fail.
        #[arg(long)]
        relaxed: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 256)]
        budget: usize,
        /// Also write the certificate, if any, here.
        #[arg(long)]
        certificate: Option<PathBuf>,
        file: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
enum BoundsCmd {
    /// exp(-(ε²/2)·n·p).
    Chernoff {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        eps: f64,
    },
    /// ((Γ+1)/2^{Γ/2})^n, from Γ and n or exactly from a graph.
    Acyclic {
        /// Average degree as an integer or fraction `a/b`.
        #[arg(long, requires = "n", conflicts_with = "graph")]
        gamma: Option<String>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// The two binomial inequalities, exactly.
    Prop24(RangeArgs),
    /// The parameter arithmetic of the main chain.
    Chain(RangeArgs),
}

#[derive(Args, Debug)]
struct RangeArgs {
    #[arg(long, conflicts_with_all = ["from", "to"])]
    r: Option<u64>,
    #[arg(long, requires = "to")]
    from: Option<u64>,
    #[arg(long, requires = "from")]
    to: Option<u64>,
}

impl RangeArgs {
    fn range(&self) -> Result<std::ops::RangeInclusive<u64>> {
        match (self.r, self.from, self.to) {
            (Some(r), _, _) => Ok(r..=r),
            (None, Some(a), Some(b)) if a <= b => Ok(a..=b),
            _ => Err(Error::InvalidArgument("give --r or --from <= --to".into())),
        }
    }
}

#[derive(Debug, Subcommand)]
enum VerifyCmd {
    /// Replay a lower-bound certificate. Exit 1 if it is invalid.
    Certificate { file: PathBuf },
    /// Re-run the command recorded in an output's manifest and compare. Exit 1 on any difference.
    Replay { file: PathBuf },
    /// Check that a colouring is a dicolouring. Exit 1 if not.
    Dicolouring {
        #[arg(long)]
        colouring: PathBuf,
        file: PathBuf,
    },
}

/// What a command produced, before rendering.
struct Output {
    text: String,
    json: Value,
    status: i32,
    /// `Some(seed)` when the output must carry a manifest.
    manifest: Option<Option<u64>>,
    /// Extra files to write, each with the manifest prepended.
    side_files: Vec<(PathBuf, String)>,
}

impl Output {
    fn plain(text: String, json: Value) -> Output {
        Output {
            text,
            json,
            status: 0,
            manifest: None,
            side_files: Vec::new(),
        }
    }

    fn seeded(mut self, seed: Option<u64>) -> Output {
        self.manifest = Some(seed);
        self
    }

    fn status(mut self, status: i32) -> Output {
        self.status = status;
        self
    }

    fn report(report: &ExperimentReport) -> Output {
        Output::plain(report.to_text(), serde_json::to_value(report).expect("reports serialize")).seeded(report.seed)
    }
}

struct Context {
    caps: Caps,
    inputs: Mutex<Vec<InputDigest>>,
}

impl Context {
    fn read(&self, path: &Path) -> Result<String> {
        let bytes = std::fs::read(path).map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
        self.inputs.lock().expect("input log").push(InputDigest {
            path: path.display().to_string(),
            sha256: sha256_hex(&bytes),
        });
        String::from_utf8(bytes).map_err(|_| Error::InvalidArgument(format!("{} is not UTF-8", path.display())))
    }

    fn graph_file(&self, path: &Path) -> Result<GraphFile> {
        format::parse_graph_text(&self.read(path)?).map_err(|e| in_file(path, e))
    }

    fn graph(&self, path: &Path) -> Result<Graph> {
        self.graph_file(path)?.into_graph().map_err(|e| in_file(path, e))
    }

    fn digraph(&self, path: &Path) -> Result<Digraph> {
        self.graph_file(path)?.into_digraph().map_err(|e| in_file(path, e))
    }
}

fn in_file(path: &Path, e: Error) -> Error {
    match e {
        Error::Parse { line, message } => Error::Parse {
            line,
            message: format!("{}: {message}", path.display()),
        },
        Error::InvalidArgument(m) => Error::InvalidArgument(format!("{}: {m}", path.display())),
        other => other,
    }
}

enum Failure {
    Usage(clap::Error),
    Runtime(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Runtime(e)
    }
}

struct Produced {
    rendered: String,
    status: i32,
    output: Option<PathBuf>,
    side_files: Vec<(PathBuf, String)>,
}

fn graph_json(g: &Graph) -> Value {
    json!({"kind": "graph", "n": g.n(), "edges": g.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>()})
}

fn digraph_json(d: &Digraph) -> Value {
    json!({"kind": "digraph", "n": d.n(), "arcs": d.arcs().map(|(u, v)| [u, v]).collect::<Vec<_>>()})
}

fn lists_json(l: &ListAssignment) -> Value {
    json!(l.lists().iter().map(|s| s.iter().copied().collect::<Vec<u32>>()).collect::<Vec<_>>())
}

fn graph_output(g: &Graph) -> Output {
    Output::plain(format::write_graph(g), graph_json(g))
}

fn digraph_output(d: &Digraph) -> Output {
    Output::plain(format::write_digraph(d), digraph_json(d))
}

fn sides(g: &Graph, swap: bool) -> Result<(Vec<usize>, Vec<usize>)> {
    let side = g
        .bipartition()
        .ok_or_else(|| Error::InvalidArgument("the graph is not bipartite".into()))?;
    let (mut a, mut b) = (Vec::new(), Vec::new());
    for (v, s) in side.into_iter().enumerate() {
        if s == swap {
            a.push(v);
        } else {
            b.push(v);
        }
    }
    Ok((a, b))
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn gen(cmd: &GenCmd, ctx: &Context) -> Result<Output> {
    Ok(match cmd {
        GenCmd::Tournament { d } => digraph_output(&constructions::rambaud_tournament(*d)?),
        GenCmd::Knn { a, b } => graph_output(&constructions::complete_bipartite(*a, *b)),
        GenCmd::Complete { n } => graph_output(&constructions::complete_graph(*n)),
        GenCmd::Cycle { n, directed: true } => digraph_output(&constructions::directed_cycle(*n)?),
        GenCmd::Cycle { n, directed: false } => graph_output(&constructions::cycle_graph(*n)?),
        GenCmd::Path { n } => graph_output(&constructions::path_graph(*n)),
        GenCmd::Transitive { n } => digraph_output(&constructions::transitive_tournament(*n)),
        GenCmd::Bidirected { file } => digraph_output(&constructions::bidirected(&ctx.graph(file)?)),
        GenCmd::Orient { seed, file } => digraph_output(&random_orientation(&ctx.graph(file)?, *seed)).seeded(Some(*seed)),
        GenCmd::Random { n, p, seed } => graph_output(&constructions::random_graph(*n, *p, *seed)?).seeded(Some(*seed)),
        GenCmd::RandomBipartite { a, b, p, seed } => {
            graph_output(&constructions::random_bipartite(*a, *b, *p, *seed)?).seeded(Some(*seed))
        }
    })
}

fn choice_output(name: &str, answer: &listcolour::ChoiceNumber) -> Output {
    let mut text = format!("{name} = {}\n", answer.value);
    if let Some(w) = &answer.witness {
        text += "[witness]\n";
        text += &format::write_lists(w);
    }
    Output::plain(
        text,
        json!({name: answer.value, "witness": answer.witness.as_ref().map(lists_json)}),
    )
}

fn solve(cmd: &SolveCmd, ctx: &Context) -> Result<Output> {
    let caps = &ctx.caps;
    Ok(match cmd {
        SolveCmd::Dichromatic { file } => {
            let d = ctx.digraph(file)?;
            let s = dicolour::dichromatic_number(&d, caps)?;
            Output::plain(
                format!("chi_vec = {}\n{}", s.value, format::write_colouring(s.witness.colours())),
                json!({"chi_vec": s.value, "witness": s.witness.colours()}),
            )
        }
        SolveCmd::Chromatic { file } => {
            let g = ctx.graph(file)?;
            let s = dicolour::chromatic_number(&g, caps)?;
            Output::plain(
                format!("chi = {}\n{}", s.value, format::write_colouring(s.witness.colours())),
                json!({"chi": s.value, "witness": s.witness.colours()}),
            )
        }
        SolveCmd::Choosability { file } => choice_output("chi_l", &listcolour::choosability(&ctx.graph(file)?, caps)?),
        SolveCmd::Dichoosability { file } => {
            choice_output("dichoosability", &listcolour::dichoosability(&ctx.digraph(file)?, caps)?)
        }
        SolveCmd::OrientationMax { file } => {
            let (value, d) = dicolour::max_dichromatic_over_orientations(&ctx.graph(file)?, caps)?;
            Output::plain(
                format!("max_chi_vec = {value}\n{}", format::write_digraph(&d)),
                json!({"max_chi_vec": value, "orientation": digraph_json(&d)}),
            )
        }
        SolveCmd::GraphDichoosability { certificate, file } => {
            let g = ctx.graph(file)?;
            let answer = listcolour::dichoosability_of_graph(&g, caps)?;
            let mut out = Output::plain(
                format!("dic_l = {}\n{}", answer.value, format::write_digraph(&answer.orientation)),
                json!({
                    "dic_l": answer.value,
                    "orientation": digraph_json(&answer.orientation),
                    "certificate": answer.certificate.as_ref().map(LowerBoundCertificate::to_text),
                }),
            );
            if let (Some(path), Some(cert)) = (certificate, &answer.certificate) {
                out.side_files.push((path.clone(), cert.to_text()));
            }
            out
        }
        SolveCmd::Lists { lists, file } => {
            let lists = format::parse_lists_text(&ctx.read(lists)?).map_err(|e| in_file(lists, e))?;
            let found = match ctx.graph_file(file)? {
                GraphFile::Graph(g) => listcolour::exists_l_proper_colouring(&g, &lists, caps)?,
                GraphFile::Digraph(d) => listcolour::exists_l_dicolouring(&d, &lists, caps)?.map(|c| c.colours().to_vec()),
            };
            match found {
                Some(c) => Output::plain(
                    format!("colourable = yes\n{}", format::write_colouring(&c)),
                    json!({"colourable": true, "colouring": c}),
                ),
                None => Output::plain("colourable = no\n".into(), json!({"colourable": false})).status(1),
            }
        }
        SolveCmd::Backedge { order, file } => {
            let d = ctx.digraph(file)?;
            let ordering = match order {
                None => VertexOrdering::identity(d.n()),
                Some(s) => VertexOrdering::new(
                    s.split(',')
                        .map(|t| {
                            t.trim()
                                .parse()
                                .map_err(|_| Error::InvalidArgument(format!("bad vertex `{t}` in --order")))
                        })
                        .collect::<Result<Vec<usize>>>()?,
                )?,
            };
            let back = d.backedge_graph(&ordering)?;
            let c = dicolour::dicolour_via_backedge(&d, &ordering, caps)?;
            let star = is_star_forest(&back);
            Output::plain(
                format!(
                    "colours = {}\nbackedge_edges = {}\nbackedge_star_forest = {star}\n{}",
                    c.colour_count(),
                    back.edge_count(),
                    format::write_colouring(c.colours())
                ),
                json!({
                    "colours": c.colour_count(),
                    "backedge": graph_json(&back),
                    "backedge_star_forest": star,
                    "colouring": c.colours(),
                }),
            )
        }
    })
}

fn extract(cmd: &ExtractCmd, ctx: &Context) -> Result<Output> {
    Ok(match cmd {
        ExtractCmd::Maxcut { file } => {
            let g = ctx.graph(file)?;
            let w = extraction::max_cut_bipartite(&g, &ctx.caps)?;
            let cut = Graph::from_edges(g.n(), w.cross_edges())?;
            let ad = w.subgraph().graph.average_degree()?;
            Output::plain(
                format!(
                    "cut_edges = {}\nedges = {}\naverage_degree = {ad}\nside_a = {}\nside_b = {}\n{}",
                    cut.edge_count(),
                    g.edge_count(),
                    join(&w.side_a),
                    join(&w.side_b),
                    format::write_graph(&cut)
                ),
                json!({
                    "cut_edges": cut.edge_count(),
                    "edges": g.edge_count(),
                    "average_degree": ad.to_string(),
                    "side_a": w.side_a,
                    "side_b": w.side_b,
                    "graph": graph_json(&cut),
                }),
            )
        }
        ExtractCmd::Core { t, file } => {
            let g = ctx.graph(file)?;
            let core = extraction::min_degree_core(&g, *t);
            Output::plain(
                format!(
                    "core_vertices = {}\nindex_map = {}\n{}",
                    core.index_map.len(),
                    join(&core.index_map),
                    format::write_graph(&core.graph)
                ),
                json!({"index_map": core.index_map, "graph": graph_json(&core.graph)}),
            )
        }
        ExtractCmd::Ko {
            d,
            seed,
            attempts,
            sides: s,
            file,
        } => {
            let g = ctx.graph(file)?;
            let (a, b) = sides(&g, s.swap)?;
            let options = KoOptions {
                attempts_per_bucket: *attempts,
                seed: *seed,
                try_swapped: true,
            };
            let w = extraction::kuhn_osthus_extract(&g, &a, &b, *d, &options)?;
            let au = &w.audit;
            let text = format!(
                "side_a = {}\nside_b = {}\nroute = {}\ncandidates = {}\n[audit]\ngamma = {}\nd = {}\nsize_a = {}\nsize_b = {}\nrequired_ratio = {}\nmin_degree = {}\nmax_degree = {}\nratio_ok = {}\ndegrees_ok = {}\npassed = {}\n",
                join(&w.witness.side_a),
                join(&w.witness.side_b),
                w.route,
                w.candidates,
                au.gamma,
                au.d,
                au.a_size,
                au.b_size,
                au.required_ratio(),
                au.min_degree.map_or("none".into(), |x| x.to_string()),
                au.max_degree.map_or("none".into(), |x| x.to_string()),
                au.ratio_ok,
                au.degrees_ok,
                au.passed()
            );
            let json = json!({
                "side_a": w.witness.side_a,
                "side_b": w.witness.side_b,
                "route": w.route,
                "candidates": w.candidates,
                "audit": {
                    "gamma": au.gamma.to_string(),
                    "d": au.d.to_string(),
                    "size_a": au.a_size,
                    "size_b": au.b_size,
                    "required_ratio": au.required_ratio().to_string(),
                    "min_degree": au.min_degree,
                    "max_degree": au.max_degree,
                    "ratio_ok": au.ratio_ok,
                    "degrees_ok": au.degrees_ok,
                    "passed": au.passed(),
                },
            });
            Output::plain(text, json).seeded(Some(*seed))
        }
        ExtractCmd::Mono {
            colouring,
            k,
            sides: s,
            file,
        } => {
            let g = ctx.graph(file)?;
            let colours = format::parse_colouring_text(&ctx.read(colouring)?).map_err(|e| in_file(colouring, e))?;
            let (a, b) = sides(&g, s.swap)?;
            let m = extraction::monochromatic_subgraph(&g, &a, &b, colours.colours(), *k)?;
            Output::plain(
                format!(
                    "a_prime = {}\nindex_map = {}\n{}",
                    join(&m.a_prime),
                    join(&m.subgraph.index_map),
                    format::write_graph(&m.subgraph.graph)
                ),
                json!({"a_prime": m.a_prime, "index_map": m.subgraph.index_map, "graph": graph_json(&m.subgraph.graph)}),
            )
        }
    })
}

fn mode(m: ModeArg, colourings: usize) -> ColouringMode {
    match m {
        ModeArg::Exhaustive => ColouringMode::Exhaustive,
        ModeArg::Sampled => ColouringMode::Sampled { colourings },
    }
}

fn experiment(cmd: &ExperimentCmd, ctx: &Context) -> Result<Output> {
    let caps = &ctx.caps;
    Ok(match cmd {
        ExperimentCmd::Acyclic { trials, seed, file } => {
            Output::report(&probability::mc_acyclic_probability(&ctx.graph(file)?, *trials, *seed)?.report)
        }
        ExperimentCmd::AcyclicExact { file } => {
            let g = ctx.graph(file)?;
            let p = probability::exact_acyclic_probability(&g, caps)?;
            let bound = probability::acyclic_orientation_bound_exact(&g)?;
            let routes: Vec<String> = p.routes.iter().map(|(r, c)| format!("{}:{c}", r.as_str())).collect();
            let within = p.probability <= bound;
            Output::plain(
                format!(
                    "acyclic_orientations = {}\nprobability = {}\napprox = {:e}\nroutes = {}\nroutes_agree = {}\nbound = {}\nbound_approx = {:e}\nwithin_bound = {within}\n",
                    p.acyclic_orientations,
                    p.probability,
                    probability::approx(&p.probability),
                    routes.join(" "),
                    p.routes_agree(),
                    bound,
                    probability::approx(&bound)
                ),
                json!({
                    "acyclic_orientations": p.acyclic_orientations.to_string(),
                    "probability": p.probability.to_string(),
                    "routes": routes,
                    "routes_agree": p.routes_agree(),
                    "bound": bound.to_string(),
                    "within_bound": within,
                }),
            )
        }
        ExperimentCmd::Saturation {
            r,
            k,
            trials,
            seed,
            lists,
            sides: s,
            file,
        } => {
            let g = ctx.graph(file)?;
            let (a, b) = sides(&g, s.swap)?;
            let injected = match lists {
                Some(p) => Some(format::parse_side_lists_text(&ctx.read(p)?).map_err(|e| in_file(p, e))?),
                None => None,
            };
            let params = SaturationParams::new(*r, *k)?;
            let out = probability::saturation_experiment(&g, &a, &b, &params, *trials, *seed, injected.as_ref(), caps)?;
            Output::report(&out.report)
        }
        ExperimentCmd::TrulySaturated {
            r,
            k,
            lists,
            mode: m,
            colourings,
            trials,
            seed,
            sides: s,
            file,
        } => {
            let g = ctx.graph(file)?;
            let (a, b) = sides(&g, s.swap)?;
            let lists_b = format::parse_side_lists_text(&ctx.read(lists)?).map_err(|e| in_file(lists, e))?;
            let params = SaturationParams::new(*r, *k)?;
            let out = probability::truly_saturated_experiment(&g, &a, &b, &params, &lists_b, mode(*m, *colourings), *trials, *seed, caps)?;
            Output::report(&out.report)
        }
        ExperimentCmd::Witness {
            lists,
            mode: m,
            budget,
            seed,
            file,
        } => {
            let g = ctx.graph(file)?;
            let lists = format::parse_lists_text(&ctx.read(lists)?).map_err(|e| in_file(lists, e))?;
            let search = match m {
                ModeArg::Exhaustive => SearchMode::Exhaustive,
                ModeArg::Sampled => SearchMode::Sampled { budget: *budget },
            };
            let outcome = probability::witness_orientation_search(&g, &lists, search, *seed, caps)?;
            let tried = match &outcome {
                WitnessOutcome::Found { tried, .. }
                | WitnessOutcome::NoneExists { tried }
                | WitnessOutcome::NotFoundWithinBudget { tried } => *tried,
            };
            let out = match outcome.certificate() {
                Some(cert) => Output::plain(
                    format!("# witness = found\n# orientations_tried = {tried}\n{}", cert.to_text()),
                    json!({"witness": "found", "orientations_tried": tried, "certificate": cert.to_text()}),
                ),
                None => Output::plain(
                    format!("witness = {}\norientations_tried = {tried}\n", outcome.status()),
                    json!({"witness": outcome.status(), "orientations_tried": tried}),
                )
                .status(1),
            };
            out.seeded(Some(*seed))
        }
        ExperimentCmd::Pipeline {
            r,
            relaxed,
            seed,
            budget,
            certificate,
            file,
        } => {
            let g = ctx.graph(file)?;
            let options = PipelineOptions {
                witness_budget: *budget,
                ..PipelineOptions::new(*r, *relaxed, *seed)
            };
            let out = probability::pipeline_run(&g, &options, caps)?;
            let mut o = Output::report(&out.report);
            if let (Some(path), Some(cert)) = (certificate, &out.certificate) {
                o.side_files.push((path.clone(), cert.to_text()));
            }
            o
        }
    })
}

fn bounds(cmd: &BoundsCmd, ctx: &Context) -> Result<Output> {
    Ok(match cmd {
        BoundsCmd::Chernoff { n, p, eps } => {
            let b = probability::chernoff_bound(*n, *p, *eps)?;
            Output::plain(format!("chernoff = {b:e}\n"), json!({"chernoff": b}))
        }
        BoundsCmd::Acyclic { gamma, n, graph } => match (gamma, n, graph) {
            (Some(gamma), Some(n), None) => {
                let g: BigRational = gamma
                    .parse()
                    .map_err(|_| Error::InvalidArgument(format!("bad rational `{gamma}`")))?;
                let b = probability::acyclic_orientation_bound(&g, *n);
                Output::plain(format!("bound = {b:e}\n"), json!({"bound": b}))
            }
            (None, None, Some(path)) => {
                let g = ctx.graph(path)?;
                let exact = probability::acyclic_orientation_bound_exact(&g)?;
                Output::plain(
                    format!("bound = {exact}\nbound_approx = {:e}\n", probability::approx(&exact)),
                    json!({"bound": exact.to_string()}),
                )
            }
            _ => return Err(Error::InvalidArgument("give --gamma with --n, or --graph".into())),
        },
        BoundsCmd::Prop24(range) => {
            let mut text = String::new();
            let mut rows = Vec::new();
            for r in range.range()? {
                let p = probability::verify_prop_2_4(r)?;
                text += &format!(
                    "r = {r}: first = {} ({} <= {}), second = {} (ratio = {} ~ {:e}, threshold = {})\n",
                    p.first_holds,
                    p.central_binomial,
                    p.two_pow_r,
                    p.second_holds,
                    p.ratio,
                    probability::approx(&p.ratio),
                    p.threshold
                );
                rows.push(json!({
                    "r": r,
                    "first": p.first_holds,
                    "central_binomial": p.central_binomial.to_string(),
                    "second": p.second_holds,
                    "ratio": p.ratio.to_string(),
                    "threshold": p.threshold.to_string(),
                }));
            }
            Output::plain(text, Value::Array(rows))
        }
        BoundsCmd::Chain(range) => {
            let mut text = String::new();
            let mut rows = Vec::new();
            for r in range.range()? {
                let c = probability::verify_parameter_chain(r)?;
                text += &format!(
                    "r = {r}: (i) {} (ii) {} (iii) {} (iv) {} [ln lhs in [{:.6}, {:.6}], ln rhs in [{:.6}, {:.6}]] all = {}\n",
                    c.gamma_exceeds_16d,
                    c.ratio_exact,
                    c.degree_met,
                    c.saturation_degree.as_str(),
                    c.ln_available.lo,
                    c.ln_available.hi,
                    c.ln_required.lo,
                    c.ln_required.hi,
                    c.all_hold()
                );
                rows.push(json!({
                    "r": r,
                    "gamma_exceeds_16d": c.gamma_exceeds_16d,
                    "ratio_exact": c.ratio_exact,
                    "ratio": c.ratio.to_string(),
                    "degree_met": c.degree_met,
                    "saturation_degree": c.saturation_degree.as_str(),
                    "ln_available": [c.ln_available.lo, c.ln_available.hi],
                    "ln_required": [c.ln_required.lo, c.ln_required.hi],
                    "all_hold": c.all_hold(),
                }));
            }
            Output::plain(text, Value::Array(rows))
        }
    })
}

fn verify(cmd: &VerifyCmd, ctx: &Context) -> Result<Output> {
    Ok(match cmd {
        VerifyCmd::Certificate { file } => {
            let cert = LowerBoundCertificate::parse(&ctx.read(file)?).map_err(|e| in_file(file, e))?;
            let verdict = verify_certificate(&cert, &ctx.caps)?;
            match &verdict.failed {
                None => Output::plain(
                    format!(
                        "certificate = valid\ndichoosability >= {}\nreplayed = {}\n",
                        cert.claimed_bound, verdict.replayed
                    ),
                    json!({"valid": true, "bound": cert.claimed_bound, "replayed": verdict.replayed.to_string()}),
                ),
                Some(f) => Output::plain(
                    format!("certificate = invalid\nreason = {f}\n"),
                    json!({"valid": false, "reason": f.to_string()}),
                )
                .status(1),
            }
        }
        VerifyCmd::Dicolouring { colouring, file } => {
            let d = ctx.digraph(file)?;
            let c = format::parse_colouring_text(&ctx.read(colouring)?).map_err(|e| in_file(colouring, e))?;
            let ok = is_dicolouring(&d, &c)?;
            Output::plain(format!("dicolouring = {}\n", if ok { "valid" } else { "invalid" }), json!({"valid": ok}))
                .status(if ok { 0 } else { 1 })
        }
        VerifyCmd::Replay { file } => replay(file, ctx)?,
    })
}

fn replay(file: &Path, ctx: &Context) -> Result<Output> {
    let original = ctx.read(file)?;
    let manifest = RunManifest::extract(&original)?;
    let mut problems = Vec::new();
    if manifest.tool != tool_version() {
        problems.push(format!("recorded with {}, replaying with {}", manifest.tool, tool_version()));
    }
    for input in &manifest.inputs {
        match std::fs::read(&input.path) {
            Ok(bytes) if sha256_hex(&bytes) == input.sha256 => {}
            Ok(_) => problems.push(format!("input {} has changed", input.path)),
            Err(e) => problems.push(format!("input {} unreadable: {e}", input.path)),
        }
    }
    if problems.is_empty() {
        match produce(&manifest.argv) {
            Ok(p) => {
                let (a, b) = (strip_timing(&original), strip_timing(&p.rendered));
                if a != b {
                    let line = a.lines().zip(b.lines()).position(|(x, y)| x != y).unwrap_or(a.lines().count().min(b.lines().count()));
                    problems.push(format!("output differs from line {}", line + 1));
                }
            }
            Err(Failure::Usage(e)) => problems.push(format!("recorded arguments no longer parse: {e}")),
            Err(Failure::Runtime(e)) => problems.push(format!("replay failed: {e}")),
        }
    }
    let identical = problems.is_empty();
    let mut text = format!("replay = {}\n", if identical { "identical" } else { "different" });
    for p in &problems {
        text += &format!("problem = {p}\n");
    }
    Ok(Output::plain(text, json!({"identical": identical, "problems": problems})).status(if identical { 0 } else { 1 }))
}

fn execute(cli: &Cli, ctx: &Context) -> Result<Output> {
    match &cli.command {
        Command::Gen(c) => gen(c, ctx),
        Command::Solve(c) => solve(c, ctx),
        Command::Extract(c) => extract(c, ctx),
        Command::Experiment(c) => experiment(c, ctx),
        Command::Bounds(c) => bounds(c, ctx),
        Command::Verify(c) => verify(c, ctx),
    }
}

/// Parses and executes `argv` (without the program name) and renders the
/// primary output; nothing is written.
fn produce(argv: &[String]) -> std::result::Result<Produced, Failure> {
    let cli = Cli::try_parse_from(std::iter::once("dichoose".to_string()).chain(argv.iter().cloned())).map_err(Failure::Usage)?;
    let mut caps = Caps::from_env()?;
    if let Some(spec) = &cli.caps {
        caps = caps.with_overrides(spec)?;
    }
    let ctx = Context {
        caps,
        inputs: Mutex::new(Vec::new()),
    };
    let start = Instant::now();
    let output = match cli.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("cannot start {t} threads: {e}")))?
            .install(|| execute(&cli, &ctx))?,
        None => execute(&cli, &ctx)?,
    };
    let manifest = output.manifest.map(|seed| RunManifest {
        tool: tool_version(),
        argv: argv.to_vec(),
        seed,
        inputs: ctx.inputs.lock().expect("input log").clone(),
        elapsed_ms: start.elapsed().as_millis() as u64,
    });
    let rendered = match (cli.format, &manifest) {
        (Format::Text, None) => output.text,
        (Format::Text, Some(m)) => m.to_comment_lines() + &output.text,
        (Format::Json, None) => serde_json::to_string_pretty(&output.json).expect("values serialize") + "\n",
        (Format::Json, Some(m)) => {
            serde_json::to_string_pretty(&json!({"manifest": m.to_json(), "result": output.json})).expect("values serialize") + "\n"
        }
    };
    let header = manifest.as_ref().map(RunManifest::to_comment_lines).unwrap_or_default();
    Ok(Produced {
        rendered,
        status: output.status,
        output: cli.output,
        side_files: output.side_files.into_iter().map(|(p, body)| (p, header.clone() + &body)).collect(),
    })
}

/// Runs the command line `args` (including the program name), writing the
/// primary output to `out` (or `--output`) and diagnostics to `err`.
/// Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let argv: Vec<String> = args
        .into_iter()
        .skip(1)
        .map(|a| a.into().to_string_lossy().into_owned())
        .collect();
    match produce(&argv) {
        Ok(p) => {
            for (path, body) in &p.side_files {
                if let Err(e) = std::fs::write(path, body) {
                    let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                    return 2;
                }
            }
            let written = match &p.output {
                Some(path) => std::fs::write(path, &p.rendered).map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => out.write_all(p.rendered.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => p.status,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    2
                }
            }
        }
        Err(Failure::Usage(e)) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                0
            } else {
                let _ = write!(err, "{e}");
                2
            }
        }
        Err(Failure::Runtime(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("dichoose").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn gen_tournament_d1() {
        let (code, out, _) = run_args(&["gen", "tournament", "--d", "1"]);
        assert_eq!(code, 0);
        let d = format::parse_graph_text(&out).unwrap().into_digraph().unwrap();
        assert_eq!((d.n(), d.arc_count()), (4, 6));
        assert!(!out.contains("manifest"));
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_args(&["gen", "tournament"]).0, 2);
        assert_eq!(run_args(&["frobnicate"]).0, 2);
        assert_eq!(run_args(&["gen", "tournament", "--d", "1", "--bogus"]).0, 2);
        assert_eq!(run_args(&["--help"]).0, 0);
    }

    #[test]
    fn bounds_without_files() {
        let (code, out, _) = run_args(&["bounds", "chain", "--r", "20"]);
        assert_eq!(code, 0);
        assert!(out.contains("(iv) fails"));
        let (_, out, _) = run_args(&["bounds", "acyclic", "--gamma", "8", "--n", "9"]);
        assert!(out.starts_with("bound = 5.6"));
    }
}
