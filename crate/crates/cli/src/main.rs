use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coxbraid_core::bridge::{check_hypotheses, median_via_majority, property_suite, BraidContext, Mode, Status};
use coxbraid_core::lab::{export_commutation_data, export_embeddings, run_sweep, InstanceSpec, SweepFile};
use coxbraid_core::{
    braid_class, is_reduced, matsumoto_graph, reduce, shadows, CoxeterSystem, Error, LabeledBraidGraph, Word,
};
use coxbraid_graph::{is_median_graph, MedianVerdict};
use serde::Serialize;

const EXIT_USAGE: u8 = 1;
const EXIT_COUNTEREXAMPLE: u8 = 2;
const EXIT_INVARIANT: u8 = 3;
const EXIT_BUDGET: u8 = 4;

#[derive(Parser)]
#[command(name = "coxbraid", version, about = "Braid classes and braid graphs of reduced words in simply-laced Coxeter systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structure of one word: shadows, links, signature, braid graph stats.
    Analyze {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
    },
    /// Write the braid graph or Matsumoto graph of a word.
    Graph {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = GraphKind::Braid)]
        kind: GraphKind,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
        /// Output file; stdout when absent.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Median of three braid-equivalent words by the majority rule.
    Median {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long = "word", num_args = 1, required = true)]
        words: Vec<String>,
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
    },
    /// Run every braid-graph check on the class of a word.
    Verify {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
    },
    /// Run a sweep described by a JSON configuration file.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        /// JSON report path; a summary goes to stdout either way.
        #[arg(long, short)]
        output: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        explore: bool,
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
    },
    /// Raw data for manual study: commutation moves on links, or hypercube
    /// coordinates of braid graphs.
    Export {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, value_enum)]
        what: ExportKind,
        #[arg(long = "max-len")]
        max_len: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(id = "source", required = true, multiple = false)]
struct SystemSource {
    /// Named system such as D:4 or affA:3, or an inline spec "n=3; 3: (1,2)(2,3)".
    #[arg(long)]
    system: Option<String>,
    /// File holding a system spec.
    #[arg(long = "system-file")]
    system_file: Option<PathBuf>,
}

#[derive(Args)]
struct SystemArgs {
    #[command(flatten)]
    source: SystemSource,
    /// Closure node budget; overrides COXBRAID_BUDGET.
    #[arg(long)]
    budget: Option<usize>,
    /// Run checks on systems with bond-3 triangles, reporting observations.
    #[arg(long)]
    explore: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum TextOrJson {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphKind {
    Braid,
    Matsumoto,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportKind {
    Commutation,
    Embedding,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
}

enum Failure {
    Usage(String),
    Core(Error),
    Code(u8),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type CmdResult = Result<(), Failure>;

fn budget_override(flag: Option<usize>) -> Result<Option<usize>, Failure> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var("COXBRAID_BUDGET") {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Failure::Usage(format!("COXBRAID_BUDGET={v:?} is not a number"))),
        Err(_) => Ok(None),
    }
}

impl SystemArgs {
    fn resolve(&self) -> Result<CoxeterSystem, Failure> {
        let mut sys = match (&self.source.system, &self.source.system_file) {
            (Some(s), None) => CoxeterSystem::resolve(s)?,
            (None, Some(p)) => {
                let text = fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
                CoxeterSystem::parse(&text)?
            }
            _ => return Err(Failure::Usage("give exactly one of --system and --system-file".into())),
        };
        if let Some(b) = budget_override(self.budget)? {
            sys = sys.with_budget(b);
        }
        Ok(sys)
    }

    fn mode(&self) -> Mode {
        if self.explore {
            Mode::Explore
        } else {
            Mode::Enforce
        }
    }
}

fn emit(output: &Option<PathBuf>, text: &str) -> CmdResult {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .map_err(|e| Failure::Usage(format!("stdout: {e}")))
        }
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct GraphStats {
    vertices: usize,
    edges: usize,
    diameter: usize,
    dim_i: Option<usize>,
    median: bool,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Analysis {
    system: String,
    word: String,
    reduced: bool,
    length: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    reduced_form: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    shadows: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    class_shadows: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dimension: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    link: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    factorization: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    signature: Option<Vec<u8>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    class_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    graph: Option<GraphStats>,
    /// Set when results are observations outside the triangle-free hypothesis.
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

fn analyze(sys: &CoxeterSystem, word: &Word, mode: Mode) -> Result<Analysis, Failure> {
    check_hypotheses(sys, mode)?;
    let mut a = Analysis {
        system: sys.label(),
        word: word.literal(sys),
        reduced: is_reduced(sys, word)?,
        length: word.len(),
        reduced_form: None,
        shadows: None,
        class_shadows: None,
        dimension: None,
        link: None,
        factorization: None,
        signature: None,
        class_size: None,
        graph: None,
        note: (!sys.is_triangle_free())
            .then(|| "system has a bond-3 triangle; results are observations only".to_string()),
    };
    if !a.reduced {
        a.reduced_form = Some(reduce(sys, word)?.literal(sys));
        return Ok(a);
    }
    let class = braid_class(sys, word)?;
    a.shadows = Some(shadows(sys, word)?.iter().map(|s| s.to_string()).collect());
    a.class_shadows = Some(class.shadows().iter().map(|s| s.to_string()).collect());
    a.dimension = Some(class.dimension());
    a.signature = Some(class.signature(word).entries().to_vec());
    a.class_size = Some(class.len());
    if word.is_empty() {
        a.link = Some(false);
        a.factorization = Some("e".into());
    } else {
        a.link = Some(class.is_link()?);
        a.factorization = Some(class.factorization(sys, word)?.display(sys));
    }
    let graph = LabeledBraidGraph::new(sys, class)?;
    let ctx = BraidContext::new(sys, &graph, mode)?;
    let median = matches!(is_median_graph(&ctx.metric, true).map_err(Error::from)?, MedianVerdict::Median);
    a.graph = Some(GraphStats {
        vertices: ctx.stats().vertices,
        edges: ctx.stats().edges,
        diameter: ctx.stats().diam,
        dim_i: ctx.stats().dim_i,
        median,
    });
    Ok(a)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn analysis_text(a: &Analysis) -> String {
    let mut out = String::new();
    let mut line = |k: &str, v: String| out.push_str(&format!("{k}: {v}\n"));
    line("system", a.system.clone());
    line("word", a.word.clone());
    line("reduced", yes(a.reduced).into());
    line("length", a.length.to_string());
    if let Some(r) = &a.reduced_form {
        line("reduced form", r.clone());
    }
    if let Some(s) = &a.shadows {
        line("shadows", format!("{{{}}}", s.join(",")));
    }
    if let Some(s) = &a.class_shadows {
        line("class shadows", format!("{{{}}}", s.join(",")));
    }
    if let Some(d) = a.dimension {
        line("dim", d.to_string());
    }
    if let Some(l) = a.link {
        line("link", yes(l).into());
    }
    if let Some(f) = &a.factorization {
        line("factorization", f.clone());
    }
    if let Some(s) = &a.signature {
        let parts: Vec<String> = s.iter().map(u8::to_string).collect();
        line("signature", format!("({})", parts.join(",")));
    }
    if let Some(c) = a.class_size {
        line("class size", c.to_string());
    }
    if let Some(g) = &a.graph {
        line("vertices", g.vertices.to_string());
        line("edges", g.edges.to_string());
        line("diameter", g.diameter.to_string());
        line("dim_I", g.dim_i.map_or("not a partial cube".into(), |d| d.to_string()));
        line("median", yes(g.median).into());
    }
    if let Some(n) = &a.note {
        line("note", n.clone());
    }
    out
}

fn cmd_graph(sys: &CoxeterSystem, word: &Word, kind: GraphKind, format: GraphFormat) -> Result<String, Failure> {
    Ok(match kind {
        GraphKind::Braid => {
            let g = coxbraid_core::braid_graph(sys, word)?;
            match format {
                GraphFormat::Dot => g.to_dot(sys),
                GraphFormat::Json => g.to_document(sys).to_json() + "\n",
                GraphFormat::Text => {
                    let mut s = String::new();
                    for (i, w) in g.vertices().iter().enumerate() {
                        s.push_str(&format!("v {i} {}\n", w.literal(sys)));
                    }
                    for &(i, j, l) in g.edges() {
                        s.push_str(&format!("e {i} {j} {l}\n"));
                    }
                    s
                }
            }
        }
        GraphKind::Matsumoto => {
            let g = matsumoto_graph(sys, word)?;
            match format {
                GraphFormat::Dot => g.to_dot(sys),
                GraphFormat::Json => g.to_document(sys).to_json() + "\n",
                GraphFormat::Text => {
                    let mut s = String::new();
                    for (i, w) in g.vertices().iter().enumerate() {
                        s.push_str(&format!("v {i} {}\n", w.literal(sys)));
                    }
                    for &(i, j, k) in g.edges() {
                        s.push_str(&format!("e {i} {j} {}\n", k.name()));
                    }
                    s
                }
            }
        }
    })
}

#[derive(Serialize)]
struct MedianOut {
    median: String,
    signature: Vec<u8>,
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Analyze { sys, word, format } => {
            let system = sys.resolve()?;
            let w = Word::parse(&word, &system)?;
            let a = analyze(&system, &w, sys.mode())?;
            let text = match format {
                TextOrJson::Text => analysis_text(&a),
                TextOrJson::Json => json(&a),
            };
            emit(&None, &text)
        }
        Command::Graph {
            sys,
            word,
            kind,
            format,
            output,
        } => {
            let system = sys.resolve()?;
            let w = Word::parse(&word, &system)?;
            let text = cmd_graph(&system, &w, kind, format)?;
            emit(&output, &text)
        }
        Command::Median { sys, words, format } => {
            if words.len() != 3 {
                return Err(Failure::Usage(format!("median needs exactly three words, got {}", words.len())));
            }
            let system = sys.resolve()?;
            let ws: Vec<Word> = words.iter().map(|w| Word::parse(w, &system)).collect::<Result<_, _>>()?;
            let m = median_via_majority(&system, &ws[0], &ws[1], &ws[2], sys.mode())?;
            let out = MedianOut {
                median: m.median.literal(&system),
                signature: m.majority.entries().to_vec(),
            };
            let text = match format {
                TextOrJson::Text => format!("median: {}\nsignature: {}\n", out.median, m.majority),
                TextOrJson::Json => json(&out),
            };
            emit(&None, &text)
        }
        Command::Verify {
            sys,
            word,
            seed,
            format,
        } => {
            let system = sys.resolve()?;
            let w = Word::parse(&word, &system)?;
            let reports = property_suite(&system, braid_class(&system, &w)?, sys.mode(), seed)?;
            let text = match format {
                TextOrJson::Json => json(&reports),
                TextOrJson::Text => {
                    let mut s = String::new();
                    for r in &reports {
                        let status = serde_json::to_value(r.status).expect("status serializes");
                        s.push_str(&format!("{:<20} {}\n", r.check, status.as_str().unwrap_or("?")));
                        for wit in &r.witnesses {
                            s.push_str(&format!("  {}\n", serde_json::to_string(wit).expect("witness serializes")));
                        }
                    }
                    s
                }
            };
            emit(&None, &text)?;
            if reports.iter().any(|r| r.status == Status::Fail) {
                return Err(Failure::Code(EXIT_INVARIANT));
            }
            Ok(())
        }
        Command::Sweep {
            config,
            output,
            csv,
            explore,
            budget,
            format,
        } => {
            let text = fs::read_to_string(&config)
                .map_err(|e| Failure::Usage(format!("{}: {e}", config.display())))?;
            let mut file = SweepFile::from_json(&text)?;
            file.explore |= explore;
            let mut cfg = file.into_config()?;
            if let Some(b) = budget_override(budget)? {
                cfg.spec.system = cfg.spec.system.with_budget(b);
            }
            let report = run_sweep(&cfg)?;
            if let Some(p) = &output {
                emit(&Some(p.clone()), &report.to_json())?;
            }
            if let Some(p) = &csv {
                let mut wtr = csv::Writer::from_path(p)
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display())))?;
                for row in report.rows() {
                    wtr.serialize(row).map_err(|e| Failure::Usage(e.to_string()))?;
                }
                wtr.flush().map_err(|e| Failure::Usage(e.to_string()))?;
            }
            let summary = match format {
                TextOrJson::Json if output.is_none() => report.to_json() + "\n",
                _ => {
                    let mut s = format!("system: {}\ninstances: {}\n", report.system, report.instances.len());
                    for (check, t) in &report.counts {
                        s.push_str(&format!(
                            "{check}: {} hold, {} counterexamples, {} not applicable\n",
                            t.holds, t.counterexamples, t.not_applicable
                        ));
                    }
                    s.push_str(&format!("invariant violations: {}\n", report.violations.len()));
                    for c in &report.counterexamples {
                        s.push_str(&format!("counterexample {} {}: {}\n", c.check.name(), c.word, c.detail));
                    }
                    for v in &report.violations {
                        s.push_str(&format!("violation {} {}: {}\n", v.check, v.word, v.detail));
                    }
                    s
                }
            };
            emit(&None, &summary)?;
            match report.exit_code() {
                0 => Ok(()),
                2 => Err(Failure::Code(EXIT_COUNTEREXAMPLE)),
                _ => Err(Failure::Code(EXIT_INVARIANT)),
            }
        }
        Command::Export {
            sys,
            what,
            max_len,
            format,
            output,
        } => {
            let system = sys.resolve()?;
            check_hypotheses(&system, sys.mode())?;
            let spec = InstanceSpec::exhaustive(system, max_len);
            let text = match what {
                ExportKind::Commutation => table(&export_commutation_data(&spec)?, format)?,
                ExportKind::Embedding => match format {
                    TableFormat::Json => json(&export_embeddings(&spec)?),
                    TableFormat::Csv => {
                        let rows: Vec<_> = export_embeddings(&spec)?
                            .into_iter()
                            .map(|r| FlatEmbedding {
                                word: r.word,
                                dim: r.dim,
                                link: r.link,
                                vertices: r.vertices.join(" "),
                                coordinates: r.coordinates.join(" "),
                            })
                            .collect();
                        table(&rows, format)?
                    }
                },
            };
            emit(&output, &text)
        }
    }
}

#[derive(Serialize)]
struct FlatEmbedding {
    word: String,
    dim: usize,
    link: bool,
    vertices: String,
    coordinates: String,
}

fn table<T: Serialize>(rows: &[T], format: TableFormat) -> Result<String, Failure> {
    match format {
        TableFormat::Json => Ok(json(&rows)),
        TableFormat::Csv => {
            let mut wtr = csv::Writer::from_writer(Vec::new());
            for r in rows {
                wtr.serialize(r).map_err(|e| Failure::Usage(e.to_string()))?;
            }
            let bytes = wtr.into_inner().map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("csv is utf-8"))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Budget { .. } => EXIT_BUDGET,
        Error::Invariant(_) => EXIT_INVARIANT,
        _ => EXIT_USAGE,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Code(c)) => ExitCode::from(c),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
