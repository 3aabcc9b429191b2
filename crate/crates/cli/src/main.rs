//! `backbones`: command-line front end for the tree-backbones library.

mod input;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use tree_backbones::enumeration::{shard_count, DEFAULT_ENUMERATION_CAP, RNG_ALGORITHM};
use tree_backbones::formulas::finite_size_fraction_exact;
use tree_backbones::kernel::{kernel_check, DEFAULT_KERNEL_CAP};
use tree_backbones::oracle::DEFAULT_ORACLE_CAP;
use tree_backbones::series::{color_series, cover_series, matching_series, tree_function, DEFAULT_ORDER};
use tree_backbones::{
    asymptotic_constants, backbone_from_coloring, bcolor, closed_form_color_total, enumerate_parallel,
    monte_carlo_fractions, sample_random_tree, summarize, Color, EnumerationTotals, Error, ErrorKind, Oracle, Series,
};

use input::TreeInput;

/// Enumerations from this size on walk at least 9^7 trees and need `--yes-long`.
const LONG_ENUMERATION: usize = 9;

#[derive(Debug, Parser)]
#[command(name = "backbones", version, about = "b-colorings, backbones and enumerative counts for labeled trees")]
struct Cli {
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ColorArg {
    Brown,
    Red,
    Green,
}

impl From<ColorArg> for Color {
    fn from(c: ColorArg) -> Self {
        match c {
            ColorArg::Brown => Color::Brown,
            ColorArg::Red => Color::Red,
            ColorArg::Green => Color::Green,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    /// Total minimum vertex covers.
    Vc,
    /// Total maximum matchings.
    M,
    Brown,
    Red,
    Green,
    /// Rooted labeled trees, `n^(n-1)`.
    T,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// b-coloring of a tree and the backbones it determines.
    Color {
        #[command(flatten)]
        input: TreeInput,
    },
    /// Optimum sizes, optimum counts and color counts of a tree.
    Count {
        #[command(flatten)]
        input: TreeInput,
    },
    /// Exact totals over every labeled tree on n vertices.
    Enumerate {
        n: usize,
        /// Worker threads; the output does not depend on this.
        #[arg(long, default_value_t = default_jobs())]
        jobs: usize,
        /// Allow n >= 9 (n = 10 walks 10^8 trees).
        #[arg(long)]
        yes_long: bool,
        /// No progress on stderr.
        #[arg(long)]
        quiet: bool,
        #[arg(long, env = "BACKBONES_ENUM_CAP", default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
    },
    /// Counts read off a generating function, one `n count` line per n.
    Series {
        #[arg(value_enum)]
        which: Which,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        /// Print the exact coefficients `k num/den` instead of counts.
        #[arg(long)]
        rational: bool,
    },
    /// Large-n color fractions and the minimum-cover fraction.
    Asymptotics {
        #[arg(long, default_value_t = 1e-15)]
        tolerance: f64,
    },
    /// Total count of one color over all trees on n vertices, from the closed form.
    ClosedForm {
        #[arg(long, value_enum)]
        color: ColorArg,
        #[arg(long)]
        n: usize,
    },
    /// Adjacency kernel dimension and support, checked against the coloring.
    Kernel {
        #[command(flatten)]
        input: TreeInput,
        #[arg(long, env = "BACKBONES_KERNEL_CAP", default_value_t = DEFAULT_KERNEL_CAP)]
        cap: usize,
    },
    /// Uniform random trees: color fractions over many samples, or one tree.
    Sample {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Print the single tree drawn with this seed as an edge list.
        #[arg(long)]
        tree: bool,
    },
    /// Every minimum cover and maximum matching, by exhaustive search.
    Oracle {
        #[command(flatten)]
        input: TreeInput,
        #[arg(long, env = "BACKBONES_ORACLE_CAP", default_value_t = DEFAULT_ORACLE_CAP)]
        cap: usize,
    },
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |p| p.get())
}

/// A failed run: message plus exit code.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn input(message: String) -> Self {
        Failure { code: 2, message }
    }

    pub fn lib(e: Error, source: Option<&str>) -> Self {
        let code = match e.kind() {
            ErrorKind::InvalidInput => 2,
            ErrorKind::CapExceeded => 3,
            ErrorKind::Internal => 4,
        };
        let message = match source {
            Some(s) => format!("{s}: {e}"),
            None => e.to_string(),
        };
        Failure { code, message }
    }

    fn inconsistency(message: String) -> Self {
        Failure { code: 4, message }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::lib(e, None)
    }
}

fn to_json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output types serialize");
    s.push('\n');
    s
}

fn unsupported(format: Format, command: &str) -> Failure {
    Failure::input(format!("format {format:?} is not available for {command}").to_lowercase())
}

fn set_list<'a>(items: impl IntoIterator<Item = &'a usize>) -> String {
    let items: Vec<String> = items.into_iter().map(usize::to_string).collect();
    if items.is_empty() {
        "-".into()
    } else {
        items.join(",")
    }
}

fn edge_list<'a>(edges: impl IntoIterator<Item = &'a (usize, usize)>) -> String {
    let items: Vec<String> = edges.into_iter().map(|(u, v)| format!("{u}-{v}")).collect();
    if items.is_empty() {
        "-".into()
    } else {
        items.join(",")
    }
}

fn cmd_color(input: &TreeInput, format: Format) -> Result<String, Failure> {
    let tree = input.load()?;
    let coloring = bcolor(&tree);
    let report = backbone_from_coloring(&coloring);
    Ok(match format {
        Format::Json => to_json(&json!({ "coloring": coloring, "backbones": report })),
        Format::Csv => {
            let mut out = String::from("vertex,color\n");
            for v in 1..=coloring.n() {
                writeln!(out, "{v},{}", coloring.color(v)).unwrap();
            }
            out
        }
        Format::Text => {
            let mut out = coloring.to_text();
            out.push('\n');
            writeln!(out, "vc_positive {}", set_list(&report.vc_positive)).unwrap();
            writeln!(out, "vc_negative {}", set_list(&report.vc_negative)).unwrap();
            writeln!(out, "exclusive_edges {}", edge_list(&report.exclusive_edges)).unwrap();
            writeln!(out, "mm_positive_edges {}", edge_list(&report.mm_positive_edges)).unwrap();
            writeln!(out, "optional_vertices {}", set_list(&report.optional_vertices)).unwrap();
            writeln!(out, "unavoidable_vertices {}", set_list(&report.unavoidable_vertices)).unwrap();
            out
        }
    })
}

fn cmd_count(input: &TreeInput, format: Format) -> Result<String, Failure> {
    let s = summarize(&input.load()?)?;
    let fields = [
        ("vc_size", s.vc_size.to_string()),
        ("vc_count", s.vc_count.to_string()),
        ("mm_size", s.mm_size.to_string()),
        ("mm_count", s.mm_count.to_string()),
        ("n_brown", s.n_brown.to_string()),
        ("n_red", s.n_red.to_string()),
        ("n_green", s.n_green.to_string()),
    ];
    Ok(match format {
        Format::Json => to_json(&s),
        Format::Csv => {
            let header: Vec<&str> = fields.iter().map(|f| f.0).collect();
            let row: Vec<&str> = fields.iter().map(|f| f.1.as_str()).collect();
            format!("{}\n{}\n", header.join(","), row.join(","))
        }
        Format::Text => fields.iter().map(|(k, v)| format!("{k} {v}\n")).collect(),
    })
}

fn cmd_enumerate(
    n: usize,
    jobs: usize,
    yes_long: bool,
    quiet: bool,
    cap: usize,
    format: Format,
) -> Result<String, Failure> {
    if n >= LONG_ENUMERATION && !yes_long {
        return Err(Failure {
            code: 3,
            message: format!("enumerating n = {n} walks {n}^{} trees; pass --yes-long to run it", n.saturating_sub(2)),
        });
    }
    let shards = shard_count(n.max(1));
    let totals = enumerate_parallel(n, jobs, cap, |done| {
        if !quiet {
            eprintln!("enumerate n={n}: shard {done}/{shards} done");
        }
    })?;
    Ok(match format {
        Format::Csv => format!("{}\n{}\n", EnumerationTotals::CSV_HEADER, totals.csv_row()),
        Format::Json => to_json(&totals),
        Format::Text => {
            let rows = [
                ("n", totals.n.to_string()),
                ("trees", totals.trees.to_string()),
                ("brown", totals.total_brown.to_string()),
                ("red", totals.total_red.to_string()),
                ("green", totals.total_green.to_string()),
                ("vc", totals.total_vc_count.to_string()),
                ("mm", totals.total_mm_count.to_string()),
            ];
            rows.iter().map(|(k, v)| format!("{k:<6}{v:>24}\n")).collect()
        }
    })
}

fn series_for(which: Which, order: usize) -> Result<Series, Error> {
    match which {
        Which::Vc => cover_series(order),
        Which::M => matching_series(order),
        Which::Brown => color_series(Color::Brown, order),
        Which::Red => color_series(Color::Red, order),
        Which::Green => color_series(Color::Green, order),
        Which::T => Ok(tree_function(order)),
    }
}

fn cmd_series(which: Which, order: usize, rational: bool, format: Format) -> Result<String, Failure> {
    if order == 0 {
        return Err(Failure::input("order must be at least 1".into()));
    }
    let series = series_for(which, order)?;
    let rows: Vec<(usize, String)> = if rational {
        (0..=order).map(|k| (k, series.coeff(k).to_string())).collect()
    } else {
        let counts = series.egf_counts()?;
        (1..=order).map(|n| (n, counts[n].to_string())).collect()
    };
    let label = if rational { "coefficient" } else { "count" };
    Ok(match format {
        Format::Text => rows.iter().map(|(k, v)| format!("{k} {v}\n")).collect(),
        Format::Csv => {
            let mut out = format!("n,{label}\n");
            rows.iter().for_each(|(k, v)| writeln!(out, "{k},{v}").unwrap());
            out
        }
        Format::Json => {
            let terms: Vec<_> = rows.iter().map(|(k, v)| json!({ "n": k, label: v })).collect();
            to_json(&json!({ "series": format!("{which:?}").to_lowercase(), "order": order, "terms": terms }))
        }
    })
}

fn cmd_asymptotics(tolerance: f64, format: Format) -> Result<String, Failure> {
    let c = asymptotic_constants(tolerance)?;
    let rows = [("brown", c.brown_frac), ("red", c.red_frac), ("green", c.green_frac), ("cover", c.cover_frac)];
    Ok(match format {
        Format::Text => rows.iter().map(|(k, v)| format!("{k:<6}{v:.10}\n")).collect(),
        Format::Csv => {
            let mut out = String::from("quantity,value\n");
            rows.iter().for_each(|(k, v)| writeln!(out, "{k},{v:.15}").unwrap());
            out
        }
        Format::Json => to_json(&c),
    })
}

fn cmd_closed_form(color: Color, n: usize, format: Format) -> Result<String, Failure> {
    let total = closed_form_color_total(color, n)?;
    let fraction = finite_size_fraction_exact(color, n)?;
    Ok(match format {
        Format::Text => format!("{total}\n"),
        Format::Csv => format!("color,n,total,fraction\n{color},{n},{total},{fraction}\n"),
        Format::Json => to_json(&json!({
            "color": color,
            "n": n,
            "total": total.to_string(),
            "fraction": fraction.to_string(),
        })),
    })
}

fn cmd_kernel(input: &TreeInput, cap: usize, format: Format) -> Result<String, Failure> {
    let check = kernel_check(&input.load()?, cap)?;
    let verdict = if check.pass { "pass" } else { "fail" };
    let out = match format {
        Format::Text => {
            format!("dim={} support={} check={verdict}\n", check.kernel.dimension, set_list(&check.kernel.support))
        }
        Format::Json => to_json(&check),
        Format::Csv => return Err(unsupported(format, "kernel")),
    };
    if check.pass {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::inconsistency("kernel does not match the b-coloring".into()))
    }
}

fn cmd_sample(n: usize, seed: u64, samples: usize, tree: bool, format: Format) -> Result<String, Failure> {
    if tree {
        let t = sample_random_tree(n, seed)?;
        return match format {
            Format::Text => Ok(t.to_edge_text()),
            Format::Json => Ok(to_json(&json!({ "n": n, "seed": seed, "edges": t.edges() }))),
            Format::Csv => Err(unsupported(format, "sample --tree")),
        };
    }
    let f = monte_carlo_fractions(n, samples, seed)?;
    let rows = [("brown", f.brown), ("red", f.red), ("green", f.green)];
    Ok(match format {
        Format::Text => {
            let mut out = format!("# n={n} samples={samples} seed={seed} rng={RNG_ALGORITHM}\n");
            rows.iter().for_each(|(k, e)| writeln!(out, "{k:<6}{:.6} {:.6}", e.mean, e.std_err).unwrap());
            out
        }
        Format::Csv => {
            let mut out = String::from("color,mean,std_err\n");
            rows.iter().for_each(|(k, e)| writeln!(out, "{k},{},{}", e.mean, e.std_err).unwrap());
            out
        }
        Format::Json => to_json(&json!({ "rng": RNG_ALGORITHM, "fractions": f })),
    })
}

fn cmd_oracle(input: &TreeInput, cap: usize, format: Format) -> Result<String, Failure> {
    let tree = input.load()?;
    let oracle = Oracle::with_cap(cap);
    let covers = oracle.all_minimal_vertex_covers(&tree)?;
    let matchings = oracle.all_maximal_matchings(&tree)?;
    let from_covers = oracle.coloring_from_covers(&tree)?;
    let from_matchings = oracle.coloring_from_matchings(&tree)?;
    let fast = bcolor(&tree);
    let agree = from_covers == fast && from_matchings == fast;
    let out = match format {
        Format::Text => {
            let mut out = String::new();
            covers.iter().for_each(|c| writeln!(out, "cover {}", set_list(c)).unwrap());
            matchings.iter().for_each(|m| writeln!(out, "matching {}", edge_list(m)).unwrap());
            writeln!(out, "colorings {}", if agree { "agree" } else { "differ" }).unwrap();
            out
        }
        Format::Json => to_json(&json!({
            "covers": covers,
            "matchings": matchings,
            "coloring_from_covers": from_covers,
            "coloring_from_matchings": from_matchings,
            "agree": agree,
        })),
        Format::Csv => return Err(unsupported(format, "oracle")),
    };
    if agree {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::inconsistency("oracle colorings differ from the b-coloring".into()))
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    let fmt = |default| cli.format.unwrap_or(default);
    match cli.command {
        Command::Color { ref input } => cmd_color(input, fmt(Format::Text)),
        Command::Count { ref input } => cmd_count(input, fmt(Format::Json)),
        Command::Enumerate { n, jobs, yes_long, quiet, cap } => {
            cmd_enumerate(n, jobs, yes_long, quiet, cap, fmt(Format::Csv))
        }
        Command::Series { which, order, rational } => cmd_series(which, order, rational, fmt(Format::Text)),
        Command::Asymptotics { tolerance } => cmd_asymptotics(tolerance, fmt(Format::Text)),
        Command::ClosedForm { color, n } => cmd_closed_form(color.into(), n, fmt(Format::Text)),
        Command::Kernel { ref input, cap } => cmd_kernel(input, cap, fmt(Format::Text)),
        Command::Sample { n, seed, samples, tree } => cmd_sample(n, seed, samples, tree, fmt(Format::Text)),
        Command::Oracle { ref input, cap } => cmd_oracle(input, cap, fmt(Format::Text)),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
