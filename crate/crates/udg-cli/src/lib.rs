//! The `udg` command line tool. Graphs travel as graph6 lines, embeddings
//! and reports as single JSON documents; diagnostics go to stderr.
//!
//! Exit codes: 0 ok, 1 negative result (verification failed, not a member,
//! obstruction found, search inconclusive), 2 usage or input error,
//! 3 internal failure.

pub mod svg;

use std::fs;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use udg_catalog::{detect_forbidden, generate_family, Family};
use udg_embed::{
    default_epsilon, embed_class_x_complement, embed_decomposition_star, embed_lobster_star, tau_transform, EmbedError,
    Spacing,
};
use udg_graph::{edgelist, graph6, Embedding, Graph};
use udg_search::{minimality_check, search_embedding, Method, SearchConfig};
use udg_structure::{generate_random_member, recognize_class_x, Piece, Recognition};
use udg_verify::{check_convexity_constraints, check_strip_conditions, verify_embedding, DEFAULT_SLACK};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Edgelist,
}

#[derive(Debug, Parser)]
#[command(name = "udg", version, about = "Unit disk graph constructions and checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, clap::Args)]
pub struct GraphIn {
    /// input file, `-` for stdin
    #[arg(default_value = "-")]
    pub input: String,
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Scan for catalogued obstructions and forbidden family members
    Detect {
        #[command(flatten)]
        graph: GraphIn,
        #[arg(long, default_value_t = 8)]
        max_k: usize,
    },
    /// Decompose a class member or report a forbidden witness
    Recognize {
        #[command(flatten)]
        graph: GraphIn,
    },
    /// Star representation of a class member
    EmbedStar {
        #[command(flatten)]
        graph: GraphIn,
        /// starting block parameter; halved until the result certifies
        #[arg(long)]
        epsilon: Option<f64>,
    },
    /// Representation of the complement of a class member
    EmbedComplement {
        #[command(flatten)]
        graph: GraphIn,
    },
    /// Four-line representation of the star of a lobster
    EmbedLobster {
        #[command(flatten)]
        graph: GraphIn,
        #[arg(long)]
        mu: Option<f64>,
    },
    /// Check an embedding against its target or a given graph
    Verify {
        /// embedding JSON, `-` for stdin
        #[arg(default_value = "-")]
        embedding: String,
        /// graph to check against instead of the embedded target
        #[arg(long)]
        graph: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_SLACK)]
        slack: f64,
        /// band half-width for the strip check (defaults to the recorded one)
        #[arg(long)]
        sigma: Option<f64>,
        #[arg(long)]
        convexity: bool,
    },
    /// Apply the polar map to a strip embedding
    Tau {
        #[arg(default_value = "-")]
        embedding: String,
    },
    /// Member of a forbidden family as graph6
    GenFamily { family: String, k: usize },
    /// Random class member as graph6
    GenMember {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 30)]
        size: usize,
    },
    /// Numerical search; failure is inconclusive
    Search {
        #[command(flatten)]
        graph: GraphIn,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// number of restarts
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long)]
        slack: Option<f64>,
    },
    /// Certify every single-vertex deletion
    Minimality {
        #[command(flatten)]
        graph: GraphIn,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Draw an embedding as SVG
    Plot {
        #[arg(default_value = "-")]
        embedding: String,
        #[arg(long)]
        circles: bool,
    },
}

/// Failure with its exit code.
#[derive(Debug)]
pub enum Failure {
    Negative(String),
    Usage(String),
    Internal(String),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Negative(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Negative(m) | Failure::Usage(m) | Failure::Internal(m) => m,
        }
    }
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn read_source(path: &str, stdin: &mut dyn Read) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(|e| usage(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))
    }
}

fn parse_graph(text: &str, format: Format, origin: &str) -> Result<Graph, Failure> {
    match format {
        Format::Graph6 => {
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .ok_or_else(|| usage(format!("{origin}: no graph6 line")))?;
            graph6::decode(line).map_err(|e| usage(format!("{origin}: {e}")))
        }
        Format::Edgelist => edgelist::parse(text).map_err(|e| usage(format!("{origin}: {e}"))),
    }
}

fn read_graph(g: &GraphIn, stdin: &mut dyn Read) -> Result<Graph, Failure> {
    let text = read_source(&g.input, stdin)?;
    parse_graph(&text, g.format, &g.input)
}

fn read_embedding(path: &str, stdin: &mut dyn Read) -> Result<Embedding, Failure> {
    let text = read_source(path, stdin)?;
    Embedding::from_json(text.trim()).map_err(|e| usage(format!("{path}: {e}")))
}

fn json<T: Serialize>(v: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(v).map_err(|e| Failure::Internal(e.to_string()))
}

fn embed_failure(stage: &str, e: EmbedError) -> Failure {
    match e {
        EmbedError::NotMember(w) => Failure::Negative(format!(
            "{stage}: not a class member, witness {}",
            serde_json::to_string(&w).unwrap_or_default()
        )),
        EmbedError::Parameter(m) => Failure::Usage(format!("{stage}: {m}")),
        e => Failure::Internal(format!("{stage}: {e}")),
    }
}

fn search_config(seed: u64, budget: Option<usize>, slack: Option<f64>) -> Result<SearchConfig, Failure> {
    let mut cfg = SearchConfig {
        seed,
        ..Default::default()
    };
    if let Some(b) = budget {
        cfg.restarts = b;
    }
    if let Some(s) = slack {
        cfg.target_slack = s;
    }
    cfg.validate().map_err(usage)?;
    Ok(cfg)
}

/// Runs one command; the returned text goes to stdout.
pub fn execute(cmd: Command, stdin: &mut dyn Read) -> Result<String, Failure> {
    match cmd {
        Command::Detect { graph, max_k } => {
            let g = read_graph(&graph, stdin)?;
            let r = detect_forbidden(&g, max_k);
            let out = json(&r)?;
            if r.is_clean() {
                Ok(out)
            } else {
                Err(Failure::Negative(out))
            }
        }
        Command::Recognize { graph } => {
            let g = read_graph(&graph, stdin)?;
            match recognize_class_x(&g).map_err(|e| Failure::Negative(format!("recognize: {e}")))? {
                Recognition::Member(d) => Ok(d.to_json()),
                Recognition::Forbidden(w) => Err(Failure::Negative(json(&w)?)),
            }
        }
        Command::EmbedStar { graph, epsilon } => {
            let g = read_graph(&graph, stdin)?;
            let d = match recognize_class_x(&g).map_err(|e| Failure::Negative(format!("recognize: {e}")))? {
                Recognition::Member(d) => d,
                Recognition::Forbidden(w) => return Err(Failure::Negative(json(&w)?)),
            };
            let eps = epsilon.unwrap_or_else(|| default_epsilon(g.n()));
            let (e, _) =
                embed_decomposition_star(&g, &d, eps, Spacing::Adaptive).map_err(|e| embed_failure("embed-star", e))?;
            Ok(e.to_json())
        }
        Command::EmbedComplement { graph } => {
            let g = read_graph(&graph, stdin)?;
            let (e, _) = embed_class_x_complement(&g).map_err(|e| embed_failure("embed-complement", e))?;
            Ok(e.to_json())
        }
        Command::EmbedLobster { graph, mu } => {
            let g = read_graph(&graph, stdin)?;
            let d = match recognize_class_x(&g).map_err(|e| Failure::Negative(format!("recognize: {e}")))? {
                Recognition::Member(d) => d,
                Recognition::Forbidden(w) => return Err(Failure::Negative(json(&w)?)),
            };
            let lob = match d.components.as_slice() {
                [c] if d.collapsed.is_empty() && c.pendants.is_empty() => match c.pieces.as_slice() {
                    [Piece::Lobster(l)] => l.clone(),
                    _ => return Err(Failure::Negative("embed-lobster: input is not a single lobster".into())),
                },
                _ => {
                    return Err(Failure::Negative(
                        "embed-lobster: input is not a single lobster without pendant twins".into(),
                    ))
                }
            };
            let mu = mu.unwrap_or(1.0 / (2.0 * lob.spine.len() as f64));
            let e = embed_lobster_star(&lob, mu).map_err(|e| embed_failure("embed-lobster", e))?;
            Ok(e.to_json())
        }
        Command::Verify {
            embedding,
            graph,
            format,
            slack,
            sigma,
            convexity,
        } => {
            let emb = read_embedding(&embedding, stdin)?;
            let g = match graph {
                Some(p) => parse_graph(
                    &fs::read_to_string(&p).map_err(|e| usage(format!("{p}: {e}")))?,
                    format,
                    &p,
                )?,
                None => emb.target.clone(),
            };
            let mut r = verify_embedding(&g, &emb, slack).map_err(usage)?;
            let sigma = sigma.or(emb.params.sigma);
            if let (Some(s), Some(d), Some(q), Some(_)) =
                (sigma, emb.params.delta, emb.params.q_dprime, emb.parts.as_ref())
            {
                r.strip_ok = Some(check_strip_conditions(&emb, d, s, q).map_err(usage)?.ok);
            }
            if convexity {
                r.convexity_ok = Some(check_convexity_constraints(&g, &emb).ok);
            }
            let out = r.to_json();
            if r.ok && r.strip_ok != Some(false) && r.convexity_ok != Some(false) {
                Ok(out)
            } else {
                Err(Failure::Negative(out))
            }
        }
        Command::Tau { embedding } => {
            let emb = read_embedding(&embedding, stdin)?;
            match tau_transform(&emb) {
                Ok(e) => Ok(e.to_json()),
                Err(EmbedError::Hypothesis(c)) => Err(Failure::Negative(json(&c)?)),
                Err(e) => Err(embed_failure("tau", e)),
            }
        }
        Command::GenFamily { family, k } => {
            let f = Family::parse(&family).map_err(usage)?;
            let g = generate_family(f, k).map_err(usage)?;
            Ok(graph6::encode(&g))
        }
        Command::GenMember { seed, size } => Ok(graph6::encode(&generate_random_member(seed, size))),
        Command::Search {
            graph,
            seed,
            budget,
            slack,
        } => {
            let g = read_graph(&graph, stdin)?;
            let cfg = search_config(seed, budget, slack)?;
            let r = search_embedding(&g, &cfg).map_err(usage)?;
            match r.embedding {
                Some(e) => Ok(e.to_json()),
                None => Err(Failure::Negative(format!(
                    "{{\"method\": \"inconclusive\", \"best_potential\": {:e}, \"restart\": {}}}",
                    r.best_potential, r.restart
                ))),
            }
        }
        Command::Minimality { graph, seed, budget } => {
            let g = read_graph(&graph, stdin)?;
            let cfg = search_config(seed, budget, None)?;
            let r = minimality_check(&g, &cfg);
            let out = json(&r)?;
            if r.all_deletions_embed && r.whole_graph == Method::Inconclusive {
                Ok(out)
            } else {
                Err(Failure::Negative(out))
            }
        }
        Command::Plot { embedding, circles } => {
            let emb = read_embedding(&embedding, stdin)?;
            Ok(svg::render(&emb, svg::PlotOptions { circles }))
        }
    }
}

/// Parses `args`, runs, writes output, and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 {
                write!(stdout, "{e}")
            } else {
                write!(stderr, "{e}")
            };
            return code;
        }
    };
    match execute(cli.command, stdin) {
        Ok(out) => {
            let _ = writeln!(stdout, "{}", out.trim_end());
            0
        }
        Err(f) => {
            // negative results still carry their report on stdout
            if let Failure::Negative(m) = &f {
                if m.starts_with('{') {
                    let _ = writeln!(stdout, "{m}");
                } else {
                    let _ = writeln!(stderr, "udg: {m}");
                }
            } else {
                let _ = writeln!(stderr, "udg: {}", f.message());
            }
            f.code()
        }
    }
}
