//! Command-line front end. Results go to stdout as graph6 or `key: value`
//! lines; commentary goes to stderr.
//!
//! Exit codes: 0 success or member, 1 non-member or failed check, 2 input
//! error, 3 search budget exhausted.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};

use crate::arrowing::{folkman_membership_with, minimize_with, ArrowSpec};
use crate::battery::{battery_passed, run_battery, BatteryOptions, Status};
use crate::constructions::{
    max_degree_vertex, theorem3_graph, theorem4_subgraph, theorem7_graph, theorem8_construction, BaseWitnesses,
    ConstructionRecord, Theorem8Config, VerifyConfig,
};
use crate::error::{Error, Result};
use crate::graph::{circulant, compose, cycle, grotzsch, q_graph, turan, Graph};
use crate::graph6::{parse_graph6, to_graph6};
use crate::invariants::{chromatic_number_with, chromatic_partition, clique_number, set_chromatic_number_with};
use crate::search::{SearchLimits, WORKERS_ENV};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INDETERMINATE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "folkman", version, about = "Build and verify chromatic vertex Folkman graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Budget {
    /// Stop a search after this many nodes.
    #[arg(long)]
    pub max_nodes: Option<u64>,
    /// Stop a search after this many seconds.
    #[arg(long)]
    pub max_seconds: Option<f64>,
    /// Worker threads for the arrowing search.
    #[arg(long, env = WORKERS_ENV, default_value_t = 1)]
    pub workers: usize,
}

impl Budget {
    fn limits(&self) -> SearchLimits {
        SearchLimits {
            max_nodes: self.max_nodes,
            max_time: self.max_seconds.map(Duration::from_secs_f64),
            workers: self.workers,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the graph6 of a named graph.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        #[arg(short, long, global = true)]
        out: Option<PathBuf>,
    },
    /// Decide Folkman-set membership and print a certificate.
    Check {
        graph: PathBuf,
        /// Clique sizes per color, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        arrow: Vec<usize>,
        /// Forbidden clique order.
        #[arg(long)]
        s: usize,
        /// Also require chromatic number m.
        #[arg(long)]
        chromatic: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        budget: Budget,
    },
    /// Exact chromatic number with an optimal coloring.
    Chi {
        graph: PathBuf,
        #[command(flatten)]
        budget: Budget,
    },
    /// Exact clique number with a maximum clique.
    Clique { graph: PathBuf },
    /// Lexicographic product G[H].
    Compose {
        g: PathBuf,
        h: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Canonical partition into chromatic-number many independent classes.
    Partition { graph: PathBuf },
    /// r-fold set chromatic number.
    Setchrom {
        graph: PathBuf,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        budget: Budget,
    },
    /// Run a construction and write its record.
    Construct {
        #[command(subcommand)]
        which: ConstructKind,
        /// Write PREFIX.g6, PREFIX.parts and PREFIX.cert instead of stdout.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
        /// Largest order for which arrowing is verified by search.
        #[arg(long, global = true, default_value_t = 40)]
        arrow_max_order: usize,
        #[command(flatten)]
        budget: Budget,
    },
    /// Greedily delete vertices, then edges, while arrowing survives.
    Minimize {
        graph: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        arrow: Vec<usize>,
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        budget: Budget,
    },
    /// Run the reproduction battery and print one line per fact.
    VerifyPaper {
        #[arg(long)]
        skip_slow: bool,
        #[arg(long)]
        extended: bool,
        /// Use this graph in place of the built-in Grötzsch graph.
        #[arg(long)]
        grotzsch: Option<PathBuf>,
        #[command(flatten)]
        budget: Budget,
    },
}

#[derive(Subcommand, Debug)]
pub enum GenKind {
    Circulant {
        n: usize,
        #[arg(value_delimiter = ',')]
        arcs: Vec<usize>,
    },
    Turan {
        n: usize,
        r: usize,
    },
    Grotzsch,
    Q,
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum ConstructKind {
    /// Recursive G(r, s).
    T3 {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        /// Base witness as R:FILE for F^χ(R,2,3), or R,A:FILE for F^χ(R,A,A+1).
        #[arg(long = "base")]
        bases: Vec<String>,
    },
    /// Truncation of a member of F^χ(s,s;s+1) to (a,b).
    T4 {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        s: usize,
    },
    /// Composition C_{4s-1}[H].
    T7 {
        #[arg(long)]
        h: PathBuf,
        #[arg(long)]
        s: usize,
    },
    /// Apex construction on a minimal (s,s;s+1) arrowing graph.
    T8 {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        s: usize,
        /// Vertex to replace; defaults to the lowest-index vertex of maximum degree.
        #[arg(long)]
        u0: Option<usize>,
        #[arg(long, default_value_t = 100_000)]
        max_subsets: u64,
    },
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path)?
    };
    let line = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| Error::parse(0, format!("{} holds no graph", path.display())))?;
    parse_graph6(line)
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn parse_base(spec: &str) -> Result<(usize, usize, Graph)> {
    let (key, file) = spec
        .split_once(':')
        .ok_or_else(|| Error::param(format!("base {spec:?} is not R:FILE or R,A:FILE")))?;
    let nums: Vec<usize> = key
        .split(',')
        .map(|x| x.trim().parse())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::param(format!("bad base key {key:?}")))?;
    let (r, a) = match nums[..] {
        [r] => (r, 2),
        [r, a] => (r, a),
        _ => return Err(Error::param(format!("bad base key {key:?}"))),
    };
    Ok((r, a, read_graph(Path::new(file))?))
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Indeterminate { .. } => EXIT_INDETERMINATE,
        Error::Construction(_) => EXIT_NO,
        _ => EXIT_INPUT,
    }
}

fn write_record(rec: &ConstructionRecord, out: Option<&Path>) -> Result<()> {
    match out {
        Some(prefix) => {
            let with = |ext: &str| {
                let mut p = prefix.as_os_str().to_owned();
                p.push(ext);
                PathBuf::from(p)
            };
            fs::write(with(".g6"), format!("{}\n", to_graph6(&rec.graph)))?;
            fs::write(with(".parts"), rec.to_text())?;
            fs::write(with(".cert"), rec.verification_text())?;
        }
        None => {
            let mut stdout = io::stdout();
            stdout.write_all(rec.to_text().as_bytes())?;
            stdout.write_all(rec.verification_text().as_bytes())?;
        }
    }
    Ok(())
}

fn gen(kind: &GenKind) -> Result<Graph> {
    match kind {
        GenKind::Circulant { n, arcs } => circulant(*n, arcs),
        GenKind::Turan { n, r } => turan(*n, *r),
        GenKind::Grotzsch => Ok(grotzsch()),
        GenKind::Q => Ok(q_graph()),
        GenKind::Cycle { n } => cycle(*n),
        GenKind::Complete { n } => Ok(Graph::complete(*n)),
    }
}

fn construct(which: &ConstructKind, config: &VerifyConfig) -> Result<ConstructionRecord> {
    match which {
        ConstructKind::T3 { r, s, bases } => {
            let mut witnesses = BaseWitnesses::with_defaults();
            for b in bases {
                let (br, ba, g) = parse_base(b)?;
                witnesses.insert(br, ba, g);
            }
            theorem3_graph(*r, *s, &witnesses, config)
        }
        ConstructKind::T4 { graph, a, b, s } => theorem4_subgraph(&read_graph(graph)?, *a, *b, *s, config),
        ConstructKind::T7 { h, s } => theorem7_graph(&read_graph(h)?, *s, config),
        ConstructKind::T8 {
            graph,
            s,
            u0,
            max_subsets,
        } => {
            let h = read_graph(graph)?;
            let u0 = match u0 {
                Some(u) => *u,
                None => max_degree_vertex(&h).ok_or_else(|| Error::param("empty graph"))?,
            };
            let cfg = Theorem8Config {
                max_subsets: *max_subsets,
                verify: config.clone(),
            };
            theorem8_construction(&h, *s, u0, &cfg)
        }
    }
}

fn run(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Gen { kind, out } => {
            let g = gen(kind)?;
            emit(out.as_deref(), &format!("{}\n", to_graph6(&g)))?;
            Ok(EXIT_OK)
        }
        Command::Check {
            graph,
            arrow,
            s,
            chromatic,
            out,
            budget,
        } => {
            let g = read_graph(graph)?;
            let spec = ArrowSpec::new(arrow.clone(), *s)?;
            let start = Instant::now();
            let cert = folkman_membership_with(&g, &spec, *chromatic, &budget.limits())?;
            eprintln!("{} in {:.3}s after {} nodes", cert.kind, start.elapsed().as_secs_f64(), cert.nodes);
            emit(out.as_deref(), &cert.to_text())?;
            Ok(if cert.is_member() { EXIT_OK } else { EXIT_NO })
        }
        Command::Chi { graph, budget } => {
            let g = read_graph(graph)?;
            let r = chromatic_number_with(&g, &budget.limits())?;
            let colors: Vec<String> = r.coloring.colors().iter().map(|c| (c + 1).to_string()).collect();
            println!("chromatic_number: {}", r.chi);
            println!("coloring: {}", colors.join(" "));
            Ok(EXIT_OK)
        }
        Command::Clique { graph } => {
            let g = read_graph(graph)?;
            let (w, members) = clique_number(&g);
            let members: Vec<String> = members.iter().map(|v| v.to_string()).collect();
            println!("clique_number: {w}");
            println!("members: {}", members.join(" "));
            Ok(EXIT_OK)
        }
        Command::Compose { g, h, out } => {
            let product = compose(&read_graph(g)?, &read_graph(h)?);
            emit(out.as_deref(), &format!("{}\n", to_graph6(&product)))?;
            Ok(EXIT_OK)
        }
        Command::Partition { graph } => {
            let g = read_graph(graph)?;
            for class in chromatic_partition(&g).classes() {
                let vs: Vec<String> = class.iter().map(|v| v.to_string()).collect();
                println!("class: {}", vs.join(" "));
            }
            Ok(EXIT_OK)
        }
        Command::Setchrom { graph, r, budget } => {
            let g = read_graph(graph)?;
            println!("set_chromatic_number: {}", set_chromatic_number_with(&g, *r, &budget.limits())?);
            Ok(EXIT_OK)
        }
        Command::Construct {
            which,
            out,
            arrow_max_order,
            budget,
        } => {
            let config = VerifyConfig {
                arrow_max_order: *arrow_max_order,
                limits: budget.limits(),
            };
            let start = Instant::now();
            let rec = construct(which, &config)?;
            eprintln!(
                "constructed {} on {} vertices in {:.3}s",
                rec.graph.label().unwrap_or("graph"),
                rec.graph.order(),
                start.elapsed().as_secs_f64()
            );
            write_record(&rec, out.as_deref())?;
            Ok(EXIT_OK)
        }
        Command::Minimize {
            graph,
            arrow,
            out,
            budget,
        } => {
            let g = read_graph(graph)?;
            let m = minimize_with(&g, arrow, &budget.limits())?;
            eprintln!("minimized {} -> {} vertices, {} -> {} edges", g.order(), m.order(), g.size(), m.size());
            emit(out.as_deref(), &format!("{}\n", to_graph6(&m)))?;
            Ok(EXIT_OK)
        }
        Command::VerifyPaper {
            skip_slow,
            extended,
            grotzsch,
            budget,
        } => {
            let opts = BatteryOptions {
                skip_slow: *skip_slow,
                extended: *extended,
                limits: budget.limits(),
                grotzsch: grotzsch.as_deref().map(read_graph).transpose()?,
            };
            let start = Instant::now();
            let facts = run_battery(&opts);
            for f in &facts {
                println!("{f}");
            }
            let count = |s: Status| facts.iter().filter(|f| f.status == s).count();
            eprintln!(
                "{} PASS, {} FAIL, {} UNVERIFIED in {:.1}s",
                count(Status::Pass),
                count(Status::Fail),
                count(Status::Unverified),
                start.elapsed().as_secs_f64()
            );
            Ok(if battery_passed(&facts) { EXIT_OK } else { EXIT_NO })
        }
    }
}

/// Parses `args` and runs the command, returning the process exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
