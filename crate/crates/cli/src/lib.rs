//! Argument parsing and command execution for the `ngon` binary.
//!
//! [`dispatch`] runs one command and returns its exit code and output
//! instead of touching the process, so it can be tested directly. Output
//! files named by `-o` / `--log` are still written.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use ngon_core::builder::grow_with;
use ngon_core::graph::{
    is_generalized_ngon, parse_document, write_document, BipartiteGraph, GraphDocument, VertexId,
    VertexSet,
};
use ngon_core::group::{
    automorphism_group, cycle_extension_criterion, fano_plane, gq22, is_moufang,
    is_strongly_transitive, stabilizer_transitivity_degree, PermGroup,
};
use ngon_core::kmu::{in_class, KmuOptions, MuFunction};
use ngon_core::predim::{closure, d_min, delta, is_strong};
use ngon_core::witness::{
    make_cl_witness, make_cycle, make_double_path, make_gamma, make_path, make_star_path,
};
use ngon_core::zero_alg::{
    enumerate_zero_min_pairs, is_zero_algebraic, is_zero_minimally_algebraic,
};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Parse { path: PathBuf, message: String },
    #[error("unknown subset or vertex list `{0}`")]
    UnknownSubset(String),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    /// Plain report lines.
    #[default]
    Plain,
    /// `kind=<record> key=value ...` lines.
    Structured,
}

#[derive(Debug, Parser)]
#[command(
    name = "ngon",
    version,
    about = "Predimension, class membership and polygon group checks"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct SubsetArgs {
    /// Graph file.
    pub file: PathBuf,
    /// Name of a stored subset, or a comma-separated list of vertex ids.
    pub subset: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print δ of a subset.
    Delta(SubsetArgs),
    /// Test whether a subset is strong in the whole graph.
    Strong(SubsetArgs),
    /// Print the closure of a subset.
    Closure(SubsetArgs),
    /// Print d of a subset: the least δ over its supersets.
    Dmin(SubsetArgs),
    /// Test a base/body pair, or enumerate 0-minimally algebraic pairs.
    Zeroalg {
        file: PathBuf,
        #[arg(long, required_unless_present = "enumerate", requires = "body")]
        base: Option<String>,
        #[arg(long, requires = "base")]
        body: Option<String>,
        #[arg(long, conflicts_with_all = ["base", "body"])]
        enumerate: bool,
        /// Largest body size searched (default 12(n-2)).
        #[arg(long)]
        max_body: Option<usize>,
    },
    /// Check membership in the class K^μ.
    Kmu {
        file: PathBuf,
        /// μ file; otherwise `mu-*` lines in the graph file, otherwise the default.
        #[arg(long)]
        mu: Option<PathBuf>,
        /// Longest cycle examined for the long-cycle condition (default 2n+6).
        #[arg(long)]
        horizon: Option<usize>,
        /// Largest body examined for copy counting (default 12(n-2)).
        #[arg(long)]
        max_body: Option<usize>,
    },
    /// Write a witness graph.
    Witness {
        #[command(subcommand)]
        kind: WitnessKind,
        /// Output file; standard output if absent.
        #[arg(short = 'o', long = "output", global = true)]
        output: Option<PathBuf>,
    },
    /// Grow a class member by random free amalgamation.
    Grow {
        seedfile: PathBuf,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        mu: Option<PathBuf>,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
        #[arg(long)]
        log: PathBuf,
        #[arg(long)]
        horizon: Option<usize>,
        #[arg(long)]
        max_body: Option<usize>,
    },
    /// Check the generalized n-gon axioms.
    VerifyNgon {
        file: PathBuf,
        /// Also require every valency to be at least 3.
        #[arg(long)]
        thick: bool,
    },
    /// Print the automorphism group.
    Aut {
        file: PathBuf,
        #[arg(long)]
        type_preserving: bool,
    },
    /// Test strong transitivity of the automorphism group.
    Strans {
        file: PathBuf,
        #[arg(long)]
        type_preserving: bool,
    },
    /// Test the Moufang condition for the automorphism group.
    Moufang {
        file: PathBuf,
        #[arg(long)]
        type_preserving: bool,
    },
    /// Transitivity degree of a vertex stabilizer on the neighbours.
    Transdeg {
        file: PathBuf,
        vertex: u32,
        #[arg(long)]
        type_preserving: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum WitnessKind {
    /// Simple path with `length` edges.
    Path {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        length: usize,
    },
    /// Cycle with `length` edges.
    Cycle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        length: usize,
    },
    /// Path of length n with a pendant vertex at x_{n-1}, with prefixes.
    Gamma {
        #[arg(long)]
        n: usize,
    },
    /// Six-vertex configuration: a path of length 3 with two leaves at one end.
    Star {
        #[arg(long)]
        n: usize,
    },
    /// Spoked cycle of length 4ℓ(n-2) over a four-vertex base.
    Cl {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        windings: usize,
        #[arg(long)]
        with_b: bool,
    },
    /// Two internally disjoint paths of length n-1 with common ends.
    DoublePath {
        #[arg(long)]
        n: usize,
    },
    /// Incidence graph of the Fano plane.
    Fano,
    /// Incidence graph of the generalized quadrangle of order 2.
    Gq22,
}

/// Exit code and rendered output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Record {
    kind: &'static str,
    plain: String,
    fields: Vec<(&'static str, String)>,
}

fn rec(
    kind: &'static str,
    plain: impl Into<String>,
    fields: Vec<(&'static str, String)>,
) -> Record {
    Record {
        kind,
        plain: plain.into(),
        fields,
    }
}

/// A one-field record whose plain form is just the value.
fn value(kind: &'static str, v: impl ToString) -> Record {
    let v = v.to_string();
    rec(kind, v.clone(), vec![("value", v)])
}

/// A one-field record printed as `<kind> <value>`.
fn labelled(kind: &'static str, v: impl ToString) -> Record {
    let v = v.to_string();
    rec(kind, format!("{kind} {v}"), vec![("value", v)])
}

struct Outcome {
    code: i32,
    out: Vec<Record>,
    err: Vec<Record>,
}

impl Outcome {
    fn new(holds: bool, out: Vec<Record>, err: Vec<Record>) -> Self {
        Outcome {
            code: if holds { EXIT_HOLDS } else { EXIT_FAILS },
            out,
            err,
        }
    }
}

fn render(records: &[Record], format: Format) -> String {
    let mut s = String::new();
    for r in records {
        match format {
            Format::Plain => s.push_str(&r.plain),
            Format::Structured => {
                s.push_str("kind=");
                s.push_str(r.kind);
                for (k, v) in &r.fields {
                    s.push_str(&format!(" {k}={v}"));
                }
            }
        }
        s.push('\n');
    }
    s
}

fn join_ids(ids: &[VertexId]) -> String {
    if ids.is_empty() {
        return "-".to_string();
    }
    ids.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load(path: &Path) -> Result<GraphDocument, CliError> {
    parse_document(&read(path)?).map_err(|e| CliError::Parse {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

/// A stored subset by name, else a comma-separated id list (`-` is empty).
fn resolve(doc: &GraphDocument, spec: &str) -> Result<VertexSet, CliError> {
    if let Some(s) = doc.subset(spec) {
        return Ok(s.clone());
    }
    if spec == "-" {
        return Ok(doc.graph.empty_set());
    }
    let ids: Option<Vec<VertexId>> = spec
        .split(',')
        .map(|t| t.trim().parse().ok().map(VertexId))
        .collect();
    ids.and_then(|ids| doc.graph.set_from_ids(&ids).ok())
        .ok_or_else(|| CliError::UnknownSubset(spec.to_string()))
}

fn load_mu(doc: &GraphDocument, path: Option<&Path>) -> Result<MuFunction, CliError> {
    let n = doc.graph.n();
    let mu = match path {
        Some(p) => MuFunction::parse(&read(p)?).map_err(|e| CliError::Parse {
            path: p.to_path_buf(),
            message: e.to_string(),
        })?,
        None if !doc.mu_lines.is_empty() => {
            MuFunction::from_lines(n, doc.mu_lines.iter().map(String::as_str))
                .map_err(|e| CliError::Invalid(format!("embedded μ lines: {e}")))?
        }
        None => MuFunction::default_mu(n),
    };
    if mu.n() != n {
        return Err(CliError::Invalid(format!(
            "μ-function is for n = {}, graph has n = {n}",
            mu.n()
        )));
    }
    Ok(mu)
}

fn kmu_options(n: usize, horizon: Option<usize>, max_body: Option<usize>) -> KmuOptions {
    let mut opts = KmuOptions::for_n(n);
    if let Some(h) = horizon {
        opts.horizon = h;
    }
    if let Some(b) = max_body {
        opts.body_cap = b;
    }
    opts
}

fn group_of(g: &BipartiteGraph, type_preserving: bool) -> PermGroup {
    automorphism_group(g, type_preserving)
}

fn group_records(g: &BipartiteGraph, grp: &PermGroup) -> Vec<Record> {
    let mut out = vec![labelled("order", grp.order())];
    for p in grp.generators() {
        let c = p.cycle_notation(|v| g.id(v).to_string());
        out.push(rec(
            "generator",
            c.clone(),
            vec![("cycles", c.replace(' ', ","))],
        ));
    }
    out
}

fn run(cmd: Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Delta(a) => {
            let doc = load(&a.file)?;
            let s = resolve(&doc, &a.subset)?;
            Ok(Outcome::new(
                true,
                vec![value("delta", delta(&doc.graph, &s))],
                vec![],
            ))
        }
        Command::Dmin(a) => {
            let doc = load(&a.file)?;
            let s = resolve(&doc, &a.subset)?;
            Ok(Outcome::new(
                true,
                vec![value("dmin", d_min(&doc.graph, &s))],
                vec![],
            ))
        }
        Command::Closure(a) => {
            let doc = load(&a.file)?;
            let s = resolve(&doc, &a.subset)?;
            let cl = doc.graph.ids_of(&closure(&doc.graph, &s));
            Ok(Outcome::new(
                true,
                vec![value("closure", join_ids(&cl))],
                vec![],
            ))
        }
        Command::Strong(a) => {
            let doc = load(&a.file)?;
            let s = resolve(&doc, &a.subset)?;
            let rep = is_strong(&doc.graph, &s, &doc.graph.full_set())
                .map_err(|e| CliError::Invalid(e.to_string()))?;
            let err = rep
                .witness
                .iter()
                .map(|w| {
                    let ids = join_ids(&doc.graph.ids_of(w));
                    let d = delta(&doc.graph, w);
                    rec(
                        "witness",
                        format!("WITNESS {ids} {d}"),
                        vec![("set", ids), ("delta", d.to_string())],
                    )
                })
                .collect();
            Ok(Outcome::new(
                rep.holds,
                vec![labelled("strong", rep.holds)],
                err,
            ))
        }
        Command::Zeroalg {
            file,
            base,
            body,
            enumerate,
            max_body,
        } => {
            let doc = load(&file)?;
            let g = &doc.graph;
            if enumerate {
                let cap = max_body.unwrap_or_else(|| ngon_core::zero_alg::default_body_cap(g.n()));
                let en = enumerate_zero_min_pairs(g, cap);
                let mut out = vec![labelled("max_body", en.body_cap)];
                for p in &en.pairs {
                    let (a, b) = (join_ids(&g.ids_of(&p.base)), join_ids(&g.ids_of(&p.body)));
                    out.push(rec(
                        "pair",
                        format!("PAIR base={a} body={b}"),
                        vec![("base", a), ("body", b)],
                    ));
                }
                out.push(labelled("pairs", en.pairs.len()));
                return Ok(Outcome::new(true, out, vec![]));
            }
            let a = resolve(&doc, base.as_deref().unwrap_or_default())?;
            let b = resolve(&doc, body.as_deref().unwrap_or_default())?;
            let alg = is_zero_algebraic(g, &a, &b).map_err(|e| CliError::Invalid(e.to_string()))?;
            let min = is_zero_minimally_algebraic(g, &a, &b)
                .map_err(|e| CliError::Invalid(e.to_string()))?;
            let out = vec![
                labelled("delta_rel", ngon_core::predim::delta_rel(g, &b, &a)),
                labelled("zero_algebraic", alg),
                labelled("minimally_algebraic", min),
            ];
            Ok(Outcome::new(min, out, vec![]))
        }
        Command::Kmu {
            file,
            mu,
            horizon,
            max_body,
        } => {
            let doc = load(&file)?;
            let mu = load_mu(&doc, mu.as_deref())?;
            let opts = kmu_options(doc.graph.n(), horizon, max_body);
            let rep = in_class(&doc.graph, &mu, opts);
            let mut out = vec![
                labelled("member", rep.member),
                labelled("horizon", opts.horizon),
                labelled("max_body", opts.body_cap),
            ];
            for v in &rep.violations {
                out.push(rec(
                    "violation",
                    v.to_string(),
                    vec![
                        ("condition", v.condition.to_string()),
                        ("witness", v.witness.to_string()),
                        ("value", v.value.to_string()),
                        ("bound", v.bound.to_string()),
                    ],
                ));
            }
            Ok(Outcome::new(rep.member, out, vec![]))
        }
        Command::Witness { kind, output } => {
            let doc = match kind {
                WitnessKind::Path { n, length } => make_path(n, length),
                WitnessKind::Cycle { n, length } => make_cycle(n, length),
                WitnessKind::Gamma { n } => make_gamma(n),
                WitnessKind::Star { n } => make_star_path(n),
                WitnessKind::Cl {
                    n,
                    windings,
                    with_b,
                } => make_cl_witness(n, windings, with_b),
                WitnessKind::DoublePath { n } => make_double_path(n),
                WitnessKind::Fano => Ok(GraphDocument::new(fano_plane())),
                WitnessKind::Gq22 => Ok(GraphDocument::new(gq22())),
            }
            .map_err(|e| CliError::Invalid(e.to_string()))?;
            let text = write_document(&doc);
            match output {
                Some(p) => {
                    write(&p, &text)?;
                    let out = vec![
                        labelled("vertices", doc.graph.vertex_count()),
                        labelled("edges", doc.graph.edge_count()),
                    ];
                    Ok(Outcome::new(true, out, vec![]))
                }
                None => Ok(Outcome::new(
                    true,
                    vec![rec("graph", text.trim_end(), vec![])],
                    vec![],
                )),
            }
        }
        Command::Grow {
            seedfile,
            steps,
            seed,
            mu,
            output,
            log,
            horizon,
            max_body,
        } => {
            let doc = load(&seedfile)?;
            let mu = load_mu(&doc, mu.as_deref())?;
            let opts = kmu_options(doc.graph.n(), horizon, max_body);
            let res = grow_with(&doc.graph, steps, seed, &mu, opts)
                .map_err(|e| CliError::Invalid(e.to_string()))?;
            let mut grown = GraphDocument::new(res.graph.clone());
            grown.mu_lines = mu.to_lines();
            write(&output, &write_document(&grown))?;
            let log_text: String = res.log.iter().map(|l| format!("{l}\n")).collect();
            write(&log, &log_text)?;
            let accepted = res
                .log
                .iter()
                .filter(|l| l.outcome == ngon_core::builder::StepOutcome::Accepted)
                .count();
            let out = vec![
                labelled("vertices", res.graph.vertex_count()),
                labelled("edges", res.graph.edge_count()),
                labelled("accepted", accepted),
                labelled("rejected", res.log.len() - accepted),
            ];
            Ok(Outcome::new(true, out, vec![]))
        }
        Command::VerifyNgon { file, thick } => {
            let doc = load(&file)?;
            let rep = is_generalized_ngon(&doc.graph, thick);
            let err = rep
                .violation
                .iter()
                .map(|v| {
                    rec(
                        "violation",
                        format!("VIOLATION {v}"),
                        vec![("reason", v.to_string().replace(' ', ","))],
                    )
                })
                .collect();
            Ok(Outcome::new(
                rep.holds,
                vec![labelled("ngon", rep.holds)],
                err,
            ))
        }
        Command::Aut {
            file,
            type_preserving,
        } => {
            let doc = load(&file)?;
            let grp = group_of(&doc.graph, type_preserving);
            Ok(Outcome::new(true, group_records(&doc.graph, &grp), vec![]))
        }
        Command::Strans {
            file,
            type_preserving,
        } => {
            let doc = load(&file)?;
            let g = &doc.graph;
            let grp = group_of(g, type_preserving);
            let invalid = |e: ngon_core::group::ActionError| CliError::Invalid(e.to_string());
            let st = is_strongly_transitive(g, &grp).map_err(invalid)?;
            let ce = cycle_extension_criterion(g, &grp).map_err(invalid)?;
            let out = vec![
                labelled("order", grp.order()),
                labelled("strongly_transitive", st.holds),
                labelled("path_form", st.path_form),
                labelled("cycle_form", st.cycle_form),
                labelled("long_cycles", ce.long_cycles),
                labelled("short_cycles_and_pairs", ce.right_side()),
                labelled("cycle_equivalence", ce.equivalence_holds()),
            ];
            let err = st
                .counterexample
                .iter()
                .map(|c| labelled("counterexample", join_ids(c)))
                .collect();
            Ok(Outcome::new(st.holds, out, err))
        }
        Command::Moufang {
            file,
            type_preserving,
        } => {
            let doc = load(&file)?;
            let grp = group_of(&doc.graph, type_preserving);
            let rep = is_moufang(&doc.graph, &grp).map_err(|e| CliError::Invalid(e.to_string()))?;
            let err = rep
                .failing_path
                .iter()
                .map(|p| labelled("failing_path", join_ids(p)))
                .collect();
            Ok(Outcome::new(
                rep.holds,
                vec![labelled("moufang", rep.holds)],
                err,
            ))
        }
        Command::Transdeg {
            file,
            vertex,
            type_preserving,
        } => {
            let doc = load(&file)?;
            let grp = group_of(&doc.graph, type_preserving);
            let t = stabilizer_transitivity_degree(&doc.graph, &grp, VertexId(vertex))
                .map_err(|e| CliError::Invalid(e.to_string()))?;
            Ok(Outcome::new(true, vec![value("transdeg", t)], vec![]))
        }
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn dispatch<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CommandResult {
                    code: EXIT_HOLDS,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => CommandResult {
                    code: EXIT_INPUT,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    match run(cli.command) {
        Ok(o) => CommandResult {
            code: o.code,
            stdout: render(&o.out, cli.format),
            stderr: render(&o.err, cli.format),
        },
        Err(e) => CommandResult {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
