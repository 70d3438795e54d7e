//! The `snakes` command-line front end.
//!
//! Exit codes: 0 on success, 1 on negative domain verdicts (invalid word,
//! not equivalent, violated precondition), 2 on usage and I/O errors.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::classify::{default_clusters, weakly_equivalent, ClusterPartition, DecoratedSnake};
use crate::diagram::LinkDiagram;
use crate::enumerate::{
    brute_force_binary, cache_load, cache_save, count_table, count_total, generate_ab,
    DEFAULT_BRUTE_FORCE_BOUND,
};
use crate::error::SnakeError;
use crate::model::{parse_exponent, segment_pair_classes, structure, Exponents, ModelSnake};
use crate::names::{self, VerdictKind};
use crate::tableau::{inversions, syt_of, word_of, YoungTableau2};
use crate::word::{Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnumMethod {
    Brute,
    Ab,
    RecursionCount,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DiagramFormat {
    Dot,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "snakes", version, about = "Combinatorics of snake names")]
struct Cli {
    /// Output format for every subcommand except `diagram`.
    #[arg(long, value_enum, global = true, default_value = "text")]
    output: OutputFormat,

    /// Shorthand for `--output json`.
    #[arg(long, global = true)]
    json: bool,

    /// Hölder exponent of the model snake.
    #[arg(long, global = true, default_value = "1")]
    beta: String,

    /// Exponent used for the extra term of non-entry δ arcs; must exceed beta.
    #[arg(long, global = true, default_value = "2")]
    alpha: String,

    /// Largest m accepted by brute-force enumeration.
    #[arg(long, global = true, env = "SNAKES_BRUTE_BOUND", default_value_t = DEFAULT_BRUTE_FORCE_BOUND)]
    bound: usize,

    /// Enumeration cache: `enum` reads words for m from it when present and
    /// appends freshly computed words otherwise.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify a word as snake name, spiral word or invalid.
    Validate { word: String },
    /// Canonical relabelling of a word.
    Canon { word: String },
    /// Binary reduction by one letter, or full reduction when no letter is given.
    Reduce {
        word: String,
        #[arg(long)]
        letter: Option<String>,
    },
    /// Parameters (j, k) of a binary snake name.
    Params { word: String },
    /// Enumerate binary snake names of length 2m.
    Enum {
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value = "ab")]
        method: EnumMethod,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Number of binary snake names of length 2m from the recursion.
    Count {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        table: bool,
    },
    /// Standard Young tableau of a binary snake name.
    Syt { word: String },
    /// Inversion-free binary snake name of a tableau given as "1,3;2,4".
    WordOfSyt {
        #[arg(long, allow_hyphen_values = true)]
        rows: String,
    },
    /// Inversions of a binary word.
    Inversions { word: String },
    /// Matrix of tangency orders between named arcs of the model snake.
    Tord { word: String },
    /// Nodal zones, nodes, segments and spectra.
    Structure { word: String },
    /// Segments grouped by the pair of letters they join.
    Pairs { word: String },
    /// Weak outer Lipschitz equivalence of two decorated snakes.
    Equiv {
        word_a: String,
        #[arg(long)]
        clusters_a: Option<String>,
        word_b: String,
        #[arg(long)]
        clusters_b: Option<String>,
    },
    /// Graph of the link as DOT or JSON.
    Diagram {
        word: String,
        #[arg(long, value_enum, default_value = "dot")]
        format: DiagramFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Settings shared by all subcommands.
#[derive(Debug, Clone)]
pub struct Config {
    pub brute_force_bound: usize,
    pub exponents: Exponents,
    pub output_format: OutputFormat,
    pub cache_path: Option<PathBuf>,
}

enum Failure {
    /// Negative verdict or violated precondition; exit 1.
    Domain(String),
    /// Usage or I/O problem; exit 2.
    Usage(String),
}

impl From<SnakeError> for Failure {
    fn from(e: SnakeError) -> Self {
        match e {
            SnakeError::Io(_) | SnakeError::Parse { .. } | SnakeError::BadExponents { .. } => {
                Failure::Usage(e.to_string())
            }
            SnakeError::BoundExceeded { .. } | SnakeError::CorruptCache { .. } => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Successful output plus the exit code (0, or 1 for negative verdicts that
/// still print a result).
struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

fn parse_word(s: &str) -> Result<Word, Failure> {
    Ok(s.parse::<Word>()?)
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("output serializes")
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().map(|l| l + "\n").collect()
}

/// Runs the CLI on `argv` (including the program name), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let exponents = parse_exponent(&cli.beta)
        .and_then(|b| parse_exponent(&cli.alpha).map(|a| (b, a)))
        .and_then(|(b, a)| Exponents::new(b, a));
    let exponents = match exponents {
        Ok(e) => e,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    if cli.bound == 0 {
        let _ = writeln!(err, "error: --bound must be at least 1");
        return 2;
    }
    let config = Config {
        brute_force_bound: cli.bound,
        exponents,
        output_format: if cli.json {
            OutputFormat::Json
        } else {
            cli.output
        },
        cache_path: cli.cache.clone(),
    };
    match execute(cli.command, &config) {
        Ok(output) => {
            let _ = out.write_all(output.text.as_bytes());
            output.code
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn execute(command: Command, config: &Config) -> Result<Output, Failure> {
    let as_json = config.output_format == OutputFormat::Json;
    match command {
        Command::Validate { word } => {
            let w = parse_word(&word)?;
            let verdict = names::validate(&w);
            let text = if as_json {
                json(&verdict) + "\n"
            } else {
                format!("{verdict}\n")
            };
            let code = i32::from(verdict.kind == VerdictKind::Invalid);
            Ok(Output { text, code })
        }
        Command::Canon { word } => {
            let w = parse_word(&word)?;
            let c = w.canonicalize();
            Ok(Output::ok(if as_json {
                json(&serde_json::json!({ "word": w, "canonical": c })) + "\n"
            } else {
                format!("{c}\n")
            }))
        }
        Command::Reduce { word, letter } => {
            let w = parse_word(&word)?;
            let result = match &letter {
                Some(l) => names::binary_reduce(&w, Letter::parse(l)?)?,
                None => names::full_binary_reduction(&w)?,
            };
            Ok(Output::ok(if as_json {
                json(&serde_json::json!({ "word": w, "letter": letter, "result": result })) + "\n"
            } else {
                format!("{result}\n")
            }))
        }
        Command::Params { word } => {
            let p = names::parameters(&parse_word(&word)?)?;
            Ok(Output::ok(if as_json {
                json(&p) + "\n"
            } else {
                format!("j={} k={}\n", p.j, p.k)
            }))
        }
        Command::Enum { m, method, out } => enumerate(m, method, out, config),
        Command::Count { m, table } => {
            if table {
                let t = count_table(m)?;
                Ok(Output::ok(if as_json {
                    json(&t) + "\n"
                } else {
                    let mut rows: Vec<String> = t
                        .cells
                        .iter()
                        .map(|(p, c)| format!("{},{} {c}", p.j, p.k))
                        .collect();
                    rows.push(format!("total {}", t.total));
                    lines(rows)
                }))
            } else {
                let total = count_total(m)?;
                Ok(Output::ok(if as_json {
                    json(&serde_json::json!({ "m": m, "total": total })) + "\n"
                } else {
                    format!("{total}\n")
                }))
            }
        }
        Command::Syt { word } => {
            let t = syt_of(&parse_word(&word)?)?;
            Ok(Output::ok(if as_json {
                json(&t) + "\n"
            } else {
                format!("{t}\n")
            }))
        }
        Command::WordOfSyt { rows } => {
            let t = YoungTableau2::parse(&rows)?;
            let w = word_of(&t)?;
            Ok(Output::ok(if as_json {
                json(&serde_json::json!({ "tableau": t, "word": w })) + "\n"
            } else {
                format!("{w}\n")
            }))
        }
        Command::Inversions { word } => {
            let pairs: Vec<(String, String)> = inversions(&parse_word(&word)?)?
                .into_iter()
                .map(|(x, y)| (x.to_string(), y.to_string()))
                .collect();
            Ok(Output::ok(if as_json {
                json(&pairs) + "\n"
            } else {
                lines(pairs.into_iter().map(|(x, y)| format!("{x},{y}")))
            }))
        }
        Command::Tord { word } => {
            let model = ModelSnake::build(&parse_word(&word)?, config.exponents)?;
            let matrix = model.tord_matrix();
            Ok(Output::ok(if as_json {
                json(&matrix) + "\n"
            } else {
                matrix.to_string()
            }))
        }
        Command::Structure { word } => {
            let s = structure(&parse_word(&word)?, config.exponents)?;
            Ok(Output::ok(if as_json {
                json(&s) + "\n"
            } else {
                let segments: Vec<String> =
                    s.segments.iter().map(|(a, b)| format!("{a}-{b}")).collect();
                let spectra: Vec<String> = s
                    .spectrum_per_node
                    .iter()
                    .map(|sp| format!("{{{}}}", sp.join(",")))
                    .collect();
                lines([
                    format!("nodal zones: {}", s.nodal_zone_count),
                    format!("nodes: {}", s.nodes),
                    format!("segments: {}", segments.join(" ")),
                    format!(
                        "boundary nodal zones: {},{}",
                        s.boundary_nodal_zones.0, s.boundary_nodal_zones.1
                    ),
                    format!("spectra: {}", spectra.join(" ")),
                ])
            }))
        }
        Command::Pairs { word } => {
            let classes: BTreeMap<String, Vec<usize>> = segment_pair_classes(&parse_word(&word)?)?
                .into_iter()
                .map(|((x, y), segs)| (format!("{x},{y}"), segs))
                .collect();
            Ok(Output::ok(if as_json {
                json(&classes) + "\n"
            } else {
                lines(classes.into_iter().map(|(pair, segs)| {
                    let segs: Vec<String> = segs.iter().map(usize::to_string).collect();
                    format!("{pair}: {}", segs.join(","))
                }))
            }))
        }
        Command::Equiv {
            word_a,
            clusters_a,
            word_b,
            clusters_b,
        } => {
            let decorate =
                |word: &str, clusters: &Option<String>| -> Result<DecoratedSnake, Failure> {
                    let w = parse_word(word)?;
                    let c = match clusters {
                        Some(s) => ClusterPartition::parse(s)?,
                        None => default_clusters(&w)?,
                    };
                    Ok(DecoratedSnake::new(w, c)?)
                };
            let a = decorate(&word_a, &clusters_a)?;
            let b = decorate(&word_b, &clusters_b)?;
            let witness = weakly_equivalent(&a, &b);
            let code = i32::from(witness.is_none());
            let text = if as_json {
                json(&serde_json::json!({ "equivalent": witness.is_some(), "witness": witness }))
                    + "\n"
            } else {
                match &witness {
                    Some(wit) => {
                        let orientations: Vec<String> = wit
                            .orientations
                            .iter()
                            .map(|o| format!("{o:?}").to_lowercase())
                            .collect();
                        format!("equivalent ({})\n", orientations.join(", "))
                    }
                    None => "not equivalent\n".to_string(),
                }
            };
            Ok(Output { text, code })
        }
        Command::Diagram { word, format, out } => {
            let d = LinkDiagram::new(&parse_word(&word)?)?;
            let body = match format {
                DiagramFormat::Dot => d.to_dot(),
                DiagramFormat::Json => json(&d) + "\n",
            };
            match out {
                Some(path) => {
                    fs::write(&path, body)?;
                    Ok(Output::ok(String::new()))
                }
                None => Ok(Output::ok(body)),
            }
        }
    }
}

fn enumerate(
    m: usize,
    method: EnumMethod,
    out: Option<PathBuf>,
    config: &Config,
) -> Result<Output, Failure> {
    let as_json = config.output_format == OutputFormat::Json;
    if method == EnumMethod::RecursionCount {
        if out.is_some() {
            return Err(Failure::Usage(
                "--out needs a method that lists words".into(),
            ));
        }
        let total = count_total(m)?;
        return Ok(Output::ok(if as_json {
            json(&serde_json::json!({ "m": m, "method": "recursion-count", "count": total })) + "\n"
        } else {
            format!("{total}\n")
        }));
    }
    let cached: Option<Vec<Word>> = match &config.cache_path {
        Some(path) if path.exists() => {
            let words: Vec<Word> = cache_load(path)?
                .into_iter()
                .filter(|w| w.len() == 2 * m)
                .collect();
            (!words.is_empty()).then_some(words)
        }
        _ => None,
    };
    let words = match cached {
        Some(mut words) => {
            words.sort();
            words.dedup();
            words
        }
        None => {
            let words = match method {
                EnumMethod::Brute => brute_force_binary(m, config.brute_force_bound)?,
                _ => {
                    if m == 0 {
                        return Err(SnakeError::TooShort { len: 0, min: 2 }.into());
                    }
                    generate_ab(m)
                }
            };
            if let Some(path) = &config.cache_path {
                append_cache(path, &words)?;
            }
            words
        }
    };
    if let Some(path) = out {
        cache_save(path, &words)?;
    }
    let method_name = match method {
        EnumMethod::Brute => "brute",
        _ => "ab",
    };
    Ok(Output::ok(if as_json {
        json(&serde_json::json!({
            "m": m,
            "method": method_name,
            "count": words.len(),
            "words": words,
        })) + "\n"
    } else {
        lines(words.iter().map(Word::to_string))
    }))
}

fn append_cache(path: &PathBuf, words: &[Word]) -> Result<(), Failure> {
    let mut existing = if path.exists() {
        cache_load(path)?
    } else {
        Vec::new()
    };
    existing.extend_from_slice(words);
    cache_save(path, &existing)?;
    Ok(())
}
