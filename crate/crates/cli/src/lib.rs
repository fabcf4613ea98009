//! The `freeknot` command line, as a library so tests can drive it without
//! spawning processes.

use std::fmt::Write as _;
use std::fs;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use freeknot_core::analysis::{
    bfs_explore, lower_bound_knot, lower_bound_link2, random_diagram, random_moves, realizable, SearchBudget,
    SearchReport,
};
use freeknot_core::diagram::label_name;
use freeknot_core::error::AnalysisError;
use freeknot_core::graph::SimpleGraph;
use freeknot_core::parity::{interlacement, parity, source_sink_orientable, ParityRule};
use freeknot_core::{
    alex_bracket, canonicalize, delta, enumerate_codes, kauffman_bracket, kdelta, reduce_r2, to_framed, FormalSum,
    GaussCode,
};

#[derive(Parser, Debug)]
#[command(name = "freeknot", version, about = "Free knots and links: moves, parity brackets, minimality")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Read the input from a file instead of the argument.
    #[arg(long, global = true)]
    file: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, global = true, value_enum, default_value_t = Rule::Gaussian)]
    rule: Rule,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true)]
    max_vertices: Option<usize>,
    #[arg(long, global = true)]
    max_depth: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse a Gauss code and report its size.
    Parse { code: Option<String> },
    /// Print the canonical form.
    Canon { code: Option<String> },
    /// Number of unicursal components.
    Components { code: Option<String> },
    /// Reduce by decreasing second moves.
    Reduce { code: Option<String> },
    /// Parity of each chord (`--rule gaussian|component`).
    Parity { code: Option<String> },
    /// Whether a source-sink orientation exists.
    Orientable { code: Option<String> },
    /// Interlacement graph of a one-component code (`--format dot` supported).
    Interlacement { code: Option<String> },
    /// Turaev cobracket of a one-component code.
    Delta { code: Option<String> },
    /// Alexander-like parity bracket of a one-component code.
    Abracket { code: Option<String> },
    /// Kauffman-like parity bracket of a two-component code.
    Kbracket { code: Option<String> },
    /// Kauffman-like bracket applied to the cobracket.
    Kdelta { code: Option<String> },
    /// Lower bound on the crossing number.
    Bound { code: Option<String> },
    /// Find a chord diagram with the given interlacement graph (`u: v w` lines).
    Realizable { graph: Option<String> },
    /// Breadth-first search of the move graph, optionally towards a target.
    Bfs { code: Option<String>, target: Option<String> },
    /// All classes with the given chord and component counts.
    Enumerate {
        chords: usize,
        #[arg(default_value_t = 1)]
        components: usize,
    },
    /// A seeded random diagram, optionally followed by random moves.
    Random {
        chords: usize,
        #[arg(default_value_t = 1)]
        components: usize,
        #[arg(long, default_value_t = 0)]
        moves: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Rule {
    Gaussian,
    Component,
}

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Precondition(String),
    Budget(String),
}

impl Failure {
    fn status(&self) -> i32 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Precondition(_) => 2,
            Failure::Budget(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Precondition(m) | Failure::Budget(m) => m,
        }
    }
}

impl From<AnalysisError> for Failure {
    fn from(e: AnalysisError) -> Self {
        match e {
            AnalysisError::TooLarge(..) => Failure::Budget(e.to_string()),
            AnalysisError::Infeasible { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Precondition(e.to_string()),
        }
    }
}

impl From<freeknot_core::error::ComponentCountError> for Failure {
    fn from(e: freeknot_core::error::ComponentCountError) -> Self {
        Failure::Precondition(e.to_string())
    }
}

struct Ctx {
    file: Option<String>,
    format: Format,
}

impl Ctx {
    fn input(&self, arg: Option<String>) -> Result<String, Failure> {
        match (arg, &self.file) {
            (Some(_), Some(_)) => Err(Failure::Usage("give either an argument or --file, not both".into())),
            (Some(a), None) => Ok(a),
            (None, Some(path)) => fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}"))),
            (None, None) => Err(Failure::Usage("missing input: pass a code or --file PATH".into())),
        }
    }

    fn code(&self, arg: Option<String>) -> Result<(GaussCode, Vec<String>), Failure> {
        let text = self.input(arg)?;
        // files may hold comment lines; use the first code line
        let line = text
            .lines()
            .map(|l| l.split('#').next().unwrap().trim())
            .find(|l| !l.is_empty())
            .unwrap_or("");
        GaussCode::parse_with_names(line).map_err(|e| Failure::Usage(e.to_string()))
    }

    fn no_dot(&self) -> Result<(), Failure> {
        if self.format == Format::Dot {
            return Err(Failure::Usage("--format dot is only supported by `interlacement`".into()));
        }
        Ok(())
    }

    fn emit(&self, text: String, value: Value) -> Result<String, Failure> {
        self.no_dot()?;
        Ok(match self.format {
            Format::Json => format!("{}\n", serde_json::to_string_pretty(&value).unwrap()),
            _ => text,
        })
    }

    fn sum(&self, s: &FormalSum) -> Result<String, Failure> {
        self.emit(format!("{}\n", s.to_text()), s.to_json())
    }
}

fn name_of(names: &[String], l: u32) -> String {
    names.get(l as usize).cloned().unwrap_or_else(|| label_name(l))
}

fn search_text(r: &SearchReport) -> String {
    let mut out = String::new();
    writeln!(out, "start: {}", r.start).unwrap();
    if let Some(t) = &r.target {
        writeln!(out, "target: {t}").unwrap();
        writeln!(out, "reached: {}", r.reached).unwrap();
    }
    if let Some(d) = r.depth {
        writeln!(out, "depth: {d}").unwrap();
    }
    writeln!(out, "explored: {}", r.explored).unwrap();
    writeln!(out, "min_vertices: {} ({})", r.min_vertices, r.min_vertex_diagram).unwrap();
    for step in r.path.iter().flatten() {
        writeln!(out, "  {} -> {}", step.kind, step.diagram).unwrap();
    }
    writeln!(out, "exhausted: {}", r.exhausted).unwrap();
    out
}

fn execute(cli: Cli) -> Result<(String, i32), Failure> {
    let ctx = Ctx {
        file: cli.file.clone(),
        format: cli.format,
    };
    let out = match cli.command {
        Command::Parse { code } => {
            let (c, _) = ctx.code(code)?;
            let text = format!(
                "{c}\ncomponents: {}\nchords: {}\nfree_loops: {}\n",
                c.component_count(),
                c.chord_count(),
                c.free_loops()
            );
            let value = json!({
                "code": c.to_string(),
                "components": c.component_count(),
                "chords": c.chord_count(),
                "free_loops": c.free_loops(),
            });
            ctx.emit(text, value)?
        }
        Command::Canon { code } => {
            let c = canonicalize(&ctx.code(code)?.0);
            ctx.emit(format!("{c}\n"), json!({ "canonical": c.to_string() }))?
        }
        Command::Components { code } => {
            let n = ctx.code(code)?.0.component_count();
            ctx.emit(format!("{n}\n"), json!({ "components": n }))?
        }
        Command::Reduce { code } => {
            let (c, saw) = reduce_r2(&ctx.code(code)?.0);
            ctx.emit(
                format!("{c}\nsaw_free_loop: {saw}\n"),
                json!({ "reduced": c.to_string(), "saw_free_loop": saw }),
            )?
        }
        Command::Parity { code } => {
            let (c, names) = ctx.code(code)?;
            let rule = match cli.rule {
                Rule::Gaussian => ParityRule::Gaussian,
                Rule::Component => ParityRule::Component,
            };
            let p = parity(&c, rule)?;
            let word = |odd: bool| if odd { "odd" } else { "even" };
            let mut text = String::new();
            let mut map = serde_json::Map::new();
            for (&l, &odd) in &p.odd {
                writeln!(text, "{} {}", name_of(&names, l), word(odd)).unwrap();
                map.insert(name_of(&names, l), json!(word(odd)));
            }
            let rule_name = if rule == ParityRule::Gaussian { "gaussian" } else { "component" };
            ctx.emit(text, json!({ "rule": rule_name, "parity": map }))?
        }
        Command::Orientable { code } => {
            let o = source_sink_orientable(&to_framed(&ctx.code(code)?.0));
            ctx.emit(format!("{o}\n"), json!({ "orientable": o }))?
        }
        Command::Interlacement { code } => {
            let (c, names) = ctx.code(code)?;
            let g = freeknot_core::analysis::intersection_graph(&c)?;
            let vertices: Vec<String> = g.labels.iter().map(|&l| name_of(&names, l)).collect();
            let edges: Vec<[String; 2]> =
                g.edges().into_iter().map(|(a, b)| [name_of(&names, a), name_of(&names, b)]).collect();
            match ctx.format {
                Format::Dot => {
                    let mut dot = String::from("graph interlacement {\n");
                    for v in &vertices {
                        writeln!(dot, "  {v};").unwrap();
                    }
                    for [a, b] in &edges {
                        writeln!(dot, "  {a} -- {b};").unwrap();
                    }
                    dot.push_str("}\n");
                    dot
                }
                _ => {
                    let mut text = String::new();
                    for [a, b] in &edges {
                        writeln!(text, "{a} {b}").unwrap();
                    }
                    ctx.emit(text, json!({ "vertices": vertices, "edges": edges }))?
                }
            }
        }
        Command::Delta { code } => ctx.sum(&delta(&ctx.code(code)?.0)?)?,
        Command::Abracket { code } => ctx.sum(&alex_bracket(&ctx.code(code)?.0)?)?,
        Command::Kbracket { code } => ctx.sum(&kauffman_bracket(&ctx.code(code)?.0)?)?,
        Command::Kdelta { code } => ctx.sum(&kdelta(&ctx.code(code)?.0)?)?,
        Command::Bound { code } => {
            let c = ctx.code(code)?.0;
            let cert = match c.component_count() {
                1 => lower_bound_knot(&c)?,
                2 => lower_bound_link2(&c)?,
                n => return Err(Failure::Precondition(format!("bound needs 1 or 2 components, found {n}"))),
            };
            let witness = cert.witness.term.as_ref().map_or("0".to_string(), |t| t.to_string());
            let text = format!(
                "bound: {}\nvertices: {}\ntight: {}\nwitness: {} {}\n",
                cert.bound,
                cert.vertices,
                cert.tight,
                serde_json::to_value(cert.witness.invariant).unwrap().as_str().unwrap(),
                witness
            );
            ctx.emit(text, serde_json::to_value(&cert).unwrap())?
        }
        Command::Realizable { graph } => {
            let text = ctx.input(graph)?.replace(';', "\n");
            let (g, names): (SimpleGraph, Vec<String>) =
                SimpleGraph::parse_adjacency(&text).map_err(Failure::Usage)?;
            let found = realizable(&g)?;
            let mut value = json!({ "realizable": found.is_some(), "witness": null });
            let text = match &found {
                Some(w) => {
                    // name the witness chords after the graph's vertices
                    let iso = interlacement(w).graph.isomorphism(&g).expect("witness is isomorphic");
                    let mut renamed = String::new();
                    for (i, word) in w.words().iter().enumerate() {
                        if i > 0 {
                            renamed.push_str(" | ");
                        }
                        let toks: Vec<&str> = word.iter().map(|&l| names[iso[l as usize]].as_str()).collect();
                        renamed.push_str(&toks.join(" "));
                    }
                    value["witness"] = json!(renamed);
                    format!("{renamed}\n")
                }
                None => "not realizable\n".to_string(),
            };
            ctx.emit(text, value)?
        }
        Command::Bfs { code, target } => {
            let start = ctx.code(code)?.0;
            let target = target
                .map(|t| GaussCode::parse(&t).map_err(|e| Failure::Usage(e.to_string())))
                .transpose()?;
            if let Some(t) = &target {
                if t.component_count() != start.component_count() {
                    return Err(Failure::Precondition(format!(
                        "start has {} components, target has {}",
                        start.component_count(),
                        t.component_count()
                    )));
                }
            }
            let budget = SearchBudget {
                max_vertices: cli.max_vertices.unwrap_or(start.chord_count() + 2),
                max_depth: cli.max_depth.unwrap_or(3),
            };
            let r = bfs_explore(&start, target.as_ref(), budget);
            let out = ctx.emit(search_text(&r), serde_json::to_value(&r).unwrap())?;
            if target.is_some() && !r.reached && r.exhausted {
                return Ok((out, 3));
            }
            out
        }
        Command::Enumerate { chords, components } => {
            if chords > 8 {
                return Err(Failure::Budget(format!("enumeration is limited to 8 chords, asked for {chords}")));
            }
            let codes: Vec<String> = enumerate_codes(chords, components).iter().map(|c| c.to_string()).collect();
            let text: String = codes.iter().map(|c| format!("{c}\n")).collect();
            ctx.emit(text, json!(codes))?
        }
        Command::Random { chords, components, moves } => {
            let seed = cli.seed.ok_or_else(|| Failure::Usage("random requires --seed N".into()))?;
            let mut c = random_diagram(chords, components, seed)?;
            if moves > 0 {
                let max = cli.max_vertices.unwrap_or(chords + 2);
                c = random_moves(&c, moves, max, seed);
            }
            ctx.emit(format!("{c}\n"), json!({ "code": c.to_string() }))?
        }
    };
    Ok((out, 0))
}

/// Runs one invocation. `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Output {
                    status: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Output {
                    status: 1,
                    stdout: String::new(),
                    stderr: format!("error: {}\n", first_line(&text)),
                },
            };
        }
    };
    match execute(cli) {
        Ok((stdout, status)) => Output {
            status,
            stderr: if status == 3 {
                "error: search budget exhausted before reaching the target\n".into()
            } else {
                String::new()
            },
            stdout,
        },
        Err(f) => Output {
            status: f.status(),
            stdout: String::new(),
            stderr: format!("error: {}\n", first_line(f.message())),
        },
    }
}

fn first_line(s: &str) -> &str {
    let s = s.trim().trim_start_matches("error: ");
    s.lines().next().unwrap_or("")
}
