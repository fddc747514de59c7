//! Command-line front end for the `diffcolor` library.
//!
//! `run` parses arguments, executes one subcommand and returns the process
//! exit code: 0 on success, 1 on I/O failure, 2 on usage or validation
//! errors, 3 when the exact oracle refuses (size limit or timeout).

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use diffcolor::dot::to_dot;
use diffcolor::generate;
use diffcolor::schemes::label_general_caterpillar;
use diffcolor::{
    differential_value, label_auto, label_with, mp_value, parse_graph, recognize_caterpillar, upper_bound_report,
    BoundError, Graph, GraphError, Labeling, LabelingError, LabelingRecord, Oracle, OracleConfig, OracleError, Scheme,
    SchemeError, SchemeResult, ShapeError,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("output: {0}")]
    Output(#[from] std::io::Error),
    #[error("{path}: {source}")]
    Graph { path: String, source: GraphError },
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error(transparent)]
    Scheme(#[from] SchemeError),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("labeling file: {0}")]
    LabelingFormat(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Output(_) => 1,
            CliError::Oracle(OracleError::TooLarge { .. } | OracleError::Timeout { .. }) => 3,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "diffcolor", version, about = "Maximum differential coloring of caterpillars and spiders")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a generated tree in graph file format.
    Gen {
        family: Family,
        #[command(flatten)]
        spec: GenSpec,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Label a tree with a construction scheme.
    Label {
        #[command(flatten)]
        input: InputArgs,
        /// regular-cat, spider-even, spider-odd, general-cat or auto.
        #[arg(long, default_value = "auto")]
        scheme: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Evaluate a given labeling.
    Eval {
        #[command(flatten)]
        input: InputArgs,
        /// Labeling as JSON (`{"n", "labels"}`) or `vertex label` lines.
        #[arg(long, value_name = "FILE")]
        labeling: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Report the applicable upper bounds.
    Bound {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compute the exact differential chromatic number by search.
    Exact {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        oracle: OracleArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compare the bipartition value with the general caterpillar scheme.
    CompareMp {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Write DOT with labels as node text.
    Export {
        #[command(flatten)]
        input: InputArgs,
        /// Use this labeling instead of running a scheme.
        #[arg(long, value_name = "FILE")]
        labeling: Option<PathBuf>,
        #[arg(long, default_value = "auto")]
        scheme: String,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// `--spine S --legs D`
    RegularCat,
    /// `--leg-list 1,0,2`
    Caterpillar,
    /// `--paths 2,3,1`
    Spider,
    /// `--k K --delta D`: 2k+1 spine vertices, 1 and D legs alternating
    Sec53,
    /// `--seed N [--spine MAX] [--legs MAX]`
    RandomCat,
}

#[derive(Debug, Clone, Default, Args)]
struct GenSpec {
    #[arg(long)]
    spine: Option<usize>,
    #[arg(long)]
    legs: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    leg_list: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',')]
    paths: Option<Vec<usize>>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Debug, Clone, Args)]
struct InputArgs {
    /// Graph file; omit to use a generator via --family.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
    #[arg(long)]
    family: Option<Family>,
    #[command(flatten)]
    spec: GenSpec,
}

#[derive(Debug, Clone, Args)]
struct OracleArgs {
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[arg(long, default_value_t = diffcolor::oracle::DEFAULT_MAX_N)]
    limit_n: usize,
    #[arg(long)]
    timeout_ms: Option<u64>,
}

#[derive(Debug, Clone, Args)]
struct OutputArgs {
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    #[arg(long)]
    format: Option<Format>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Plain,
}

/// Parses `args` (without the program name) and runs one subcommand.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let argv = std::iter::once(OsString::from("diffcolor")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Gen { family, spec, output } => {
            let g = generate_family(family, &spec)?;
            let text = match output.format.unwrap_or(Format::Plain) {
                Format::Plain => g.to_string(),
                Format::Dot => to_dot(&g, None),
                Format::Json => {
                    json(&GraphJson { n: g.n(), edges: g.edges().iter().map(|&(u, v)| [u + 1, v + 1]).collect() })?
                }
            };
            emit(&output, out, &text)
        }
        Command::Label { input, scheme, output } => {
            let g = load(&input)?;
            let result = run_scheme(&g, &scheme)?;
            let text = match output.format.unwrap_or(Format::Json) {
                Format::Json => json(&SchemeJson::from(&result))?,
                Format::Plain => plain_labels(result.labels()),
                Format::Dot => to_dot(&g, Some(result.labels())),
            };
            emit(&output, out, &text)
        }
        Command::Eval { input, labeling, output } => {
            let g = load(&input)?;
            let labeling = read_labeling(&labeling)?;
            let value = differential_value(&g, labeling.labels())?;
            let text = match output.format.unwrap_or(Format::Json) {
                Format::Json => {
                    json(&LabelingRecord { n: g.n(), labels: labeling.labels().to_vec(), value: Some(value) })?
                }
                Format::Plain => format!("{value}\n"),
                Format::Dot => to_dot(&g, Some(labeling.labels())),
            };
            emit(&output, out, &text)
        }
        Command::Bound { input, output } => {
            let g = load(&input)?;
            let report = upper_bound_report(&g)?;
            let bounds: BTreeMap<&str, usize> = report.entries.iter().map(|&(k, v)| (k.key(), v)).collect();
            let text = match output.format.unwrap_or(Format::Json) {
                Format::Json => json(&BoundJson { bounds, best: report.best })?,
                Format::Plain => {
                    let mut text: String = bounds.iter().map(|(k, v)| format!("{k} {v}\n")).collect();
                    text.push_str(&format!("best {}\n", report.best));
                    text
                }
                Format::Dot => return Err(CliError::Usage("bound has no DOT output".into())),
            };
            emit(&output, out, &text)
        }
        Command::Exact { input, oracle, output } => {
            let g = load(&input)?;
            let config = OracleConfig {
                max_n: oracle.limit_n,
                timeout: oracle.timeout_ms.map(Duration::from_millis),
                threads: oracle.threads.max(1),
                class_bounds: true,
            };
            let result = Oracle::new(config).solve(&g)?;
            let labels = result.witness.labels();
            let text = match output.format.unwrap_or(Format::Json) {
                Format::Json => json(&ExactJson {
                    dc: result.dc,
                    nodes: result.stats.nodes,
                    millis: result.stats.elapsed.as_millis(),
                    labels: labels.to_vec(),
                })?,
                Format::Plain => plain_labels(labels),
                Format::Dot => to_dot(&g, Some(labels)),
            };
            emit(&output, out, &text)
        }
        Command::CompareMp { input, output } => {
            let g = load(&input)?;
            let shape = recognize_caterpillar(&g)
                .map_err(|source| CliError::Graph { path: input_name(&input), source })?
                .ok_or(SchemeError::WrongClass("caterpillar"))?;
            let result = label_general_caterpillar(&shape)?;
            let report = CompareJson {
                n: g.n(),
                delta: shape.max_legs(),
                mp: mp_value(&g).map_err(|source| CliError::Graph { path: input_name(&input), source })?,
                scheme_value: result.value(),
                guarantee: result.guarantee,
                bound: upper_bound_report(&g)?.best,
            };
            let text = match output.format.unwrap_or(Format::Json) {
                Format::Json => json(&report)?,
                Format::Plain => format!(
                    "n {}\ndelta {}\nmp {}\nscheme_value {}\nguarantee {}\nbound {}\n",
                    report.n, report.delta, report.mp, report.scheme_value, report.guarantee, report.bound
                ),
                Format::Dot => to_dot(&g, Some(result.labels())),
            };
            emit(&output, out, &text)
        }
        Command::Export { input, labeling, scheme, output } => {
            let g = load(&input)?;
            if output.format.is_some_and(|f| f != Format::Dot) {
                return Err(CliError::Usage("export only writes DOT".into()));
            }
            let labels = match labeling {
                Some(path) => read_labeling(&path)?.into_labels(),
                None => run_scheme(&g, &scheme)?.labels().to_vec(),
            };
            if labels.len() != g.n() {
                return Err(LabelingError::LengthMismatch { expected: g.n(), found: labels.len() }.into());
            }
            emit(&output, out, &to_dot(&g, Some(&labels)))
        }
    }
}

#[derive(Serialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

#[derive(Serialize)]
struct SchemeJson {
    scheme: String,
    labels: Vec<usize>,
    value: usize,
    guarantee: i64,
    optimal: &'static str,
}

impl From<&SchemeResult> for SchemeJson {
    fn from(r: &SchemeResult) -> Self {
        SchemeJson {
            scheme: r.scheme.name().to_string(),
            labels: r.labels().to_vec(),
            value: r.value(),
            guarantee: r.guarantee,
            optimal: r.optimal.as_str(),
        }
    }
}

#[derive(Serialize)]
struct BoundJson<'a> {
    bounds: BTreeMap<&'a str, usize>,
    best: usize,
}

#[derive(Serialize)]
struct ExactJson {
    dc: usize,
    nodes: u64,
    millis: u128,
    labels: Vec<usize>,
}

#[derive(Serialize)]
struct CompareJson {
    n: usize,
    delta: usize,
    mp: usize,
    scheme_value: usize,
    guarantee: i64,
    bound: usize,
}

fn json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut text = serde_json::to_string(value).map_err(|e| CliError::Output(e.into()))?;
    text.push('\n');
    Ok(text)
}

fn plain_labels(labels: &[usize]) -> String {
    labels.iter().enumerate().map(|(v, l)| format!("{} {l}\n", v + 1)).collect()
}

fn emit(output: &OutputArgs, out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    match &output.out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io { path: path.clone(), source }),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

fn run_scheme(g: &Graph, name: &str) -> Result<SchemeResult, CliError> {
    if name == "auto" {
        return Ok(label_auto(g)?);
    }
    let scheme: Scheme = name.parse().map_err(CliError::Usage)?;
    Ok(label_with(g, scheme)?)
}

fn input_name(input: &InputArgs) -> String {
    match &input.input {
        Some(path) => path.display().to_string(),
        None => "<generated>".to_string(),
    }
}

fn load(input: &InputArgs) -> Result<Graph, CliError> {
    match (&input.input, input.family) {
        (Some(path), None) => {
            let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.clone(), source })?;
            parse_graph(&text).map_err(|source| CliError::Graph { path: path.display().to_string(), source })
        }
        (None, Some(family)) => generate_family(family, &input.spec),
        (Some(_), Some(_)) => Err(CliError::Usage("give either --in or --family, not both".into())),
        (None, None) => Err(CliError::Usage("an input is required: --in FILE or --family NAME".into())),
    }
}

fn required<T: Copy>(value: Option<T>, flag: &str, family: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("{family} needs --{flag}")))
}

fn generate_family(family: Family, spec: &GenSpec) -> Result<Graph, CliError> {
    let g = match family {
        Family::RegularCat => {
            let spine = required(spec.spine, "spine", "regular-cat")?;
            let legs = required(spec.legs, "legs", "regular-cat")?;
            generate::regular_caterpillar(spine, legs)?.0
        }
        Family::Caterpillar => {
            let legs = spec.leg_list.as_ref().ok_or_else(|| CliError::Usage("caterpillar needs --leg-list".into()))?;
            generate::caterpillar(legs)?.0
        }
        Family::Spider => {
            let paths = spec.paths.as_ref().ok_or_else(|| CliError::Usage("spider needs --paths".into()))?;
            generate::spider(paths)?.0
        }
        Family::Sec53 => {
            let k = required(spec.k, "k", "sec53")?;
            let delta = required(spec.delta, "delta", "sec53")?;
            if delta == 0 {
                return Err(ShapeError::Zero("delta").into());
            }
            generate::alternating_caterpillar(k, delta)?.0
        }
        Family::RandomCat => {
            let seed = required(spec.seed, "seed", "random-cat")?;
            let max_spine = spec.spine.unwrap_or(30);
            let max_legs = spec.legs.unwrap_or(8);
            if max_spine == 0 || max_legs == 0 {
                return Err(CliError::Usage("random-cat needs --spine and --legs of at least 1".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            generate::random_caterpillar(&mut rng, max_spine, max_legs).0
        }
    };
    Ok(g)
}

/// Reads a labeling as JSON with a `labels` array (labeling records and
/// scheme results both qualify) or as `vertex label` lines, 1-based.
fn read_labeling(path: &Path) -> Result<Labeling, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    let labels = if text.trim_start().starts_with('{') {
        #[derive(serde::Deserialize)]
        struct Labels {
            labels: Vec<usize>,
        }
        serde_json::from_str::<Labels>(&text).map_err(|e| CliError::LabelingFormat(e.to_string()))?.labels
    } else {
        let mut pairs = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parsed = match fields.as_slice() {
                [] => continue,
                [v, l] => v.parse::<usize>().ok().zip(l.parse::<usize>().ok()),
                _ => None,
            };
            let (v, l) =
                parsed.ok_or_else(|| CliError::LabelingFormat(format!("line {}: expected \"vertex label\"", i + 1)))?;
            pairs.push((v, l));
        }
        let mut labels = vec![0; pairs.len()];
        for (v, l) in pairs {
            if v == 0 || v > labels.len() || labels[v - 1] != 0 {
                return Err(CliError::LabelingFormat(format!("vertex {v} missing, repeated or out of range")));
            }
            labels[v - 1] = l;
        }
        labels
    };
    Ok(Labeling::new(labels)?)
}
