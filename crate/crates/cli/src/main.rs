//! `trifree`: generate graphs, compute and verify triangle-free colorings,
//! and run the NAE-SAT reductions.
//!
//! Exit status: 0 on success, 1 when a decision query is infeasible or a
//! coloring fails verification, 2 on malformed input or usage errors.

mod input;
mod output;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use trifree::classes::{class_chi3, ClassHint, GraphClass};
use trifree::dimacs::{write_dimacs, write_dot};
use trifree::gadgets::{
    complete, cycle, gen_clover, gen_cycle_clique, gen_mycielski, gen_polar_gadget, gen_polar_triangle,
};
use trifree::reductions::{
    reduce_nae4_to_polar, reduce_nae_to_k4free, reduce_q_to_q1, reduce_sat4_to_nae4, write_dimacs_cnf,
    write_polar_instance,
};
use trifree::solvers::{decide_tf_q_with, exact_chi3, fpt_tf_q_coloring, SearchOptions, StructuralParams};
use trifree::{verify_proper, verify_triangle_free, Color, Coloring, Graph};

use input::{read_coloring, read_graph_and_polar, read_text};
use output::{print_json, Decision, Optimum, VerifyReport};

#[derive(Parser)]
#[command(name = "trifree", version, about = "Triangle-free graph coloring workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a generated graph as DIMACS (or DOT).
    Gen {
        family: Family,
        /// Family parameter: joint size, Mycielski steps, or vertex count.
        #[arg(long)]
        k: Option<usize>,
        /// Emit Graphviz DOT instead of DIMACS.
        #[arg(long)]
        dot: bool,
    },
    /// Compute chi3, or decide triangle-free q-colorability with --q.
    Solve {
        /// DIMACS graph file; standard input when omitted or `-`.
        graph: Option<PathBuf>,
        #[arg(long)]
        q: Option<Color>,
        /// Polar edges: either a full polar instance file, or `s u v` lines
        /// applied to GRAPH.
        #[arg(long)]
        polar: Option<PathBuf>,
        #[arg(long, value_parser = parse_class)]
        class: Option<GraphClass>,
        /// Use the vertex-cover parameterized algorithm.
        #[arg(long)]
        fpt: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Check a coloring against a graph.
    Verify {
        graph: Option<PathBuf>,
        /// JSON file: `{"k":..,"colors":[..]}` or the output of `solve`.
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        polar: Option<PathBuf>,
    },
    /// Transform an instance along one of the reductions.
    Reduce {
        /// CNF or graph input; standard input when omitted or `-`.
        input: Option<PathBuf>,
        #[arg(long)]
        from: Source,
        #[arg(long)]
        to: Target,
        /// Palette size of the source for `--from tf-q`.
        #[arg(long)]
        q: Option<Color>,
        /// Write the source-to-target correspondence here as JSON.
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Report omega, chi, chi3, vertex cover number and max degree.
    Params {
        graph: Option<PathBuf>,
        /// Refuse graphs with more vertices than this; the oracles are
        /// exponential.
        #[arg(long, default_value_t = 64)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    CycleClique,
    Clover,
    PolarGadget,
    #[value(alias = "polar-triangle")]
    Theorem9,
    Mycielski,
    Complete,
    Cycle,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Source {
    Sat4,
    Nae,
    Nae4,
    TfQ,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Nae4,
    K4free,
    Polar,
    #[value(name = "q+1")]
    QPlus1,
}

fn parse_class(s: &str) -> Result<GraphClass, String> {
    s.parse()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Gen { family, k, dot } => gen(family, k, dot),
        Command::Solve {
            graph,
            q,
            polar,
            class,
            fpt,
            jobs,
            seed,
        } => solve(graph, q, polar, class, fpt, SearchOptions { seed, jobs }),
        Command::Verify { graph, coloring, polar } => verify(graph, coloring, polar),
        Command::Reduce {
            input,
            from,
            to,
            q,
            map,
        } => reduce(input, from, to, q, map),
        Command::Params { graph, max_n } => params(graph, max_n),
    }
}

fn gen(family: Family, k: Option<usize>, dot: bool) -> Result<ExitCode> {
    let need = || k.context("this family needs --k");
    let mut header = String::new();
    let graph: Graph = match family {
        Family::CycleClique => gen_cycle_clique(need()?)?.graph,
        Family::Clover => gen_clover(need()?)?.graph,
        Family::PolarGadget => {
            let gadget = gen_polar_gadget();
            header = format!("c polar edge u={} v={}\n", gadget.u + 1, gadget.v + 1);
            gadget.graph
        }
        Family::Theorem9 => gen_polar_triangle(),
        Family::Mycielski => gen_mycielski(need()?),
        Family::Complete => complete(need()?),
        Family::Cycle => cycle(need()?)?,
    };
    let text = if dot {
        write_dot(&graph, None)
    } else {
        header + &write_dimacs(&graph)
    };
    std::io::stdout().write_all(text.as_bytes())?;
    Ok(ExitCode::SUCCESS)
}

fn solve(
    graph: Option<PathBuf>,
    q: Option<Color>,
    polar: Option<PathBuf>,
    class: Option<GraphClass>,
    fpt: bool,
    options: SearchOptions,
) -> Result<ExitCode> {
    let (g, polar) = read_graph_and_polar(graph.as_deref(), polar.as_deref())?;
    let polar = (!polar.is_empty()).then_some(polar);
    if polar.is_some() && (fpt || class.is_some_and(|c| c != GraphClass::General)) {
        bail!("polar edges are only supported by the general search");
    }
    if fpt && class.is_some() {
        bail!("--fpt and --class are mutually exclusive");
    }
    let class = class.filter(|&c| c != GraphClass::General);

    if let Some(q) = q {
        let found = if fpt {
            fpt_tf_q_coloring(&g, q)
        } else if let Some(class) = class {
            let (k, c) = class_chi3(&g, ClassHint::new(class), &options)?;
            (k <= q).then(|| c.with_budget(q))
        } else {
            check_search_budget(&g, q, polar.is_some())?;
            decide_tf_q_with(&g, q, polar.as_deref(), &options)
        };
        return Ok(match found {
            Some(c) => {
                print_json(&Decision::feasible(q, &c))?;
                ExitCode::SUCCESS
            }
            None => {
                print_json(&Decision::infeasible())?;
                ExitCode::from(1)
            }
        });
    }

    let (k, c) = if fpt {
        if g.n() == 0 {
            (0, Coloring::monochromatic(0))
        } else {
            (1..)
                .find_map(|q| fpt_tf_q_coloring(&g, q).map(|c| (q, c)))
                .expect("n colors always suffice")
        }
    } else if let Some(class) = class {
        class_chi3(&g, ClassHint::new(class), &options)?
    } else {
        exact_chi3(&g, polar.as_deref(), &options)
    };
    print_json(&Optimum::new(k, &c))?;
    Ok(ExitCode::SUCCESS)
}

/// The search represents palettes as 64-bit masks; larger palettes are
/// only answerable when they are trivially large.
fn check_search_budget(g: &Graph, q: Color, polar: bool) -> Result<()> {
    let trivial = if polar { g.n() } else { g.n().div_ceil(2) };
    if q as usize >= trivial || q <= trifree::solvers::MAX_SEARCH_COLORS {
        return Ok(());
    }
    bail!(
        "--q {q} exceeds the supported search palette of {}",
        trifree::solvers::MAX_SEARCH_COLORS
    )
}

fn verify(graph: Option<PathBuf>, coloring: PathBuf, polar: Option<PathBuf>) -> Result<ExitCode> {
    let (g, polar) = read_graph_and_polar(graph.as_deref(), polar.as_deref())?;
    let c = read_coloring(&coloring)?;
    let proper = verify_proper(&g, &c)?;
    let triangle_free = verify_triangle_free(&g, &c, None)?;
    // Sizes already match, checked by the calls above.
    let polar_respected = polar.iter().all(|&(u, v)| c.color(u) != c.color(v));
    let report = VerifyReport {
        valid: triangle_free && polar_respected,
        k: c.k(),
        colors_used: c.used_colors(),
        proper,
        triangle_free,
        polar_respected,
    };
    print_json(&report)?;
    Ok(if report.valid {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn reduce(
    input: Option<PathBuf>,
    from: Source,
    to: Target,
    q: Option<Color>,
    map: Option<PathBuf>,
) -> Result<ExitCode> {
    let text = read_text(input.as_deref())?;
    let (instance, map_json) = match (from, to) {
        (Source::Sat4, Target::Nae4) => {
            let r = reduce_sat4_to_nae4(&trifree::reductions::parse_dimacs_cnf(&text)?)?;
            (write_dimacs_cnf(&r.instance), serde_json::to_string_pretty(&r.map)?)
        }
        (Source::Nae, Target::K4free) => {
            let r = reduce_nae_to_k4free(&trifree::reductions::parse_dimacs_cnf(&text)?)?;
            (write_dimacs(&r.graph), serde_json::to_string_pretty(&r.map)?)
        }
        (Source::Nae4, Target::Polar) => {
            let r = reduce_nae4_to_polar(&trifree::reductions::parse_dimacs_cnf(&text)?)?;
            (write_polar_instance(&r.instance), serde_json::to_string_pretty(&r.map)?)
        }
        (Source::TfQ, Target::QPlus1) => {
            let q = q.context("--from tf-q needs --q")?;
            let r = reduce_q_to_q1(&trifree::dimacs::parse_dimacs(&text)?, q)?;
            (write_dimacs(&r.graph), serde_json::to_string_pretty(&r.map)?)
        }
        _ => bail!("unsupported reduction; use sat4->nae4, nae->k4free, nae4->polar or tf-q->q+1"),
    };
    if let Some(path) = map {
        fs::write(&path, map_json + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    std::io::stdout().write_all(instance.as_bytes())?;
    Ok(ExitCode::SUCCESS)
}

fn params(graph: Option<PathBuf>, max_n: usize) -> Result<ExitCode> {
    let (g, _) = read_graph_and_polar(graph.as_deref(), None)?;
    if g.n() > max_n {
        bail!("graph has {} vertices, more than --max-n {max_n}", g.n());
    }
    print_json(&StructuralParams::compute(&g))?;
    Ok(ExitCode::SUCCESS)
}
