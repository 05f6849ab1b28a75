//! Command-line front end: counting tables, enumeration streams, codec
//! round-trips, recognition, bijection application, and the consistency
//! suite. Exit status is 0 for success, 1 for domain or verification
//! failures, 2 for usage or parse errors.

use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use caterpillar::bijections::{
    decrement_middle, halve, increment_middle, merge_middle, mirror, split_middle,
    BijectionDomainError,
};
use caterpillar::counting::{caterpillar_count_closed, caterpillar_count_sum, symmetric_class_order};
use caterpillar::enumeration::{canonical_spines, compositions, enumerate_caterpillars};
use caterpillar::formats::{from_graph6, parse_edge_list_stream, to_dot, to_edge_list, to_graph6};
use caterpillar::graph::{encode, iso_certificate, recognize, Classification, Graph};
use caterpillar::oracle::{free_tree_census, symmetric_bruteforce, DEFAULT_CENSUS_CEILING, MAX_CENSUS_VERTICES};
use caterpillar::{BigCount, Spine, SpineClassParams};

#[derive(Parser)]
#[command(
    name = "caterpillar",
    version,
    about = "Count, enumerate, encode, and verify non-isomorphic caterpillar trees"
)]
struct Cli {
    /// Worker threads for parallel work (default: one per CPU)
    #[arg(long, global = true, value_name = "COUNT")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print how many non-isomorphic caterpillars have N vertices
    Count {
        /// Vertex count N (at least 3)
        n: usize,
        /// Also count every vertex total up to this bound, one row per N
        #[arg(long, value_name = "N_END")]
        to: Option<usize>,
        /// Print the full per-spine-length table instead of one number
        #[arg(long)]
        breakdown: bool,
        /// Key-value output: vertex count and closed-form count
        #[arg(long)]
        machine: bool,
        /// Write to this file instead of standard output
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Stream every non-isomorphic caterpillar on N vertices
    Enumerate {
        /// Vertex count N (at least 3)
        n: usize,
        #[arg(long, value_enum, default_value_t = StreamFormat::Spine)]
        format: StreamFormat,
        /// Write to this file instead of standard output
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Read graphs and print each one's canonical spine
    Encode {
        /// Input file (standard input when omitted)
        path: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = GraphInFormat::Edgelist)]
        format: GraphInFormat,
    },
    /// Build the caterpillar a spine literal describes
    Decode {
        /// Spine literal, e.g. 2,1,3
        spine: String,
        #[arg(long, value_enum, default_value_t = GraphOutFormat::Edgelist)]
        format: GraphOutFormat,
        /// Write to this file instead of standard output
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Classify graphs: caterpillar, other tree, or not a tree
    Recognize {
        /// Input file (standard input when omitted)
        path: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = GraphInFormat::Edgelist)]
        format: GraphInFormat,
    },
    /// Apply one of the maps between symmetric spine classes
    Bijection {
        name: MapName,
        /// Spine literal in the map's domain
        spine: String,
    },
    /// Count the palindromic spines of class (N, k)
    Symmetric {
        /// Vertex count N
        n: usize,
        /// Spine length k (between 1 and N-2)
        k: usize,
        /// List the palindromic spines, one per line, instead of counting
        #[arg(long)]
        list: bool,
        /// Write to this file instead of standard output
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Cross-check every counting route up to N; nonzero exit on mismatch
    Verify {
        /// Largest vertex count to verify (at least 3)
        n_max: usize,
        /// Census ceiling override, 3..=10 (default 9)
        #[arg(long, value_name = "N")]
        oracle_max: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StreamFormat {
    Spine,
    Graph6,
    Edgelist,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphInFormat {
    Edgelist,
    Graph6,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphOutFormat {
    Edgelist,
    Graph6,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapName {
    /// Halve a palindrome (even N, even k)
    F,
    /// Mirror a spine back to a palindrome
    #[value(name = "f-inv")]
    FInv,
    /// Merge the middle pair (even N, even k)
    G,
    /// Split an even middle component (odd N, odd k)
    #[value(name = "g-inv")]
    GInv,
    /// Add one to the middle (odd N, odd k)
    H,
    /// Subtract one from the middle (even N, odd k)
    #[value(name = "h-inv")]
    HInv,
}

enum Failure {
    Usage(String),
    Domain(String),
    BrokenPipe,
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            Failure::BrokenPipe
        } else {
            Failure::Domain(format!("i/o failed: {e}"))
        }
    }
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn domain(e: impl std::fmt::Display) -> Failure {
    Failure::Domain(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(Failure::BrokenPipe) => ExitCode::SUCCESS,
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Failure> {
    match command {
        Command::Count {
            n,
            to,
            breakdown,
            machine,
            out,
        } => {
            let mut writer = open_out(out.as_deref())?;
            cmd_count(n, to, breakdown, machine, &mut writer)?;
            writer.flush()?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { n, format, out } => {
            let mut writer = open_out(out.as_deref())?;
            cmd_enumerate(n, format, &mut writer)?;
            writer.flush()?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Encode { path, format } => {
            let mut writer = stdout_writer();
            cmd_encode(path.as_deref(), format, &mut writer)?;
            writer.flush()?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Decode { spine, format, out } => {
            let mut writer = open_out(out.as_deref())?;
            cmd_decode(&spine, format, &mut writer)?;
            writer.flush()?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Recognize { path, format } => {
            let mut writer = stdout_writer();
            let all_caterpillars = cmd_recognize(path.as_deref(), format, &mut writer)?;
            writer.flush()?;
            Ok(if all_caterpillars {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Bijection { name, spine } => {
            let mut writer = stdout_writer();
            cmd_bijection(name, &spine, &mut writer)?;
            writer.flush()?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Symmetric { n, k, list, out } => {
            let mut writer = open_out(out.as_deref())?;
            cmd_symmetric(n, k, list, &mut writer)?;
            writer.flush()?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { n_max, oracle_max } => {
            let mut writer = stdout_writer();
            let all_pass = cmd_verify(n_max, oracle_max, &mut writer)?;
            writer.flush()?;
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn stdout_writer() -> Box<dyn Write> {
    Box::new(BufWriter::new(io::stdout()))
}

fn open_out(path: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    match path {
        None => Ok(stdout_writer()),
        Some(p) => {
            let file = File::create(p)
                .map_err(|e| Failure::Domain(format!("cannot write {}: {e}", p.display())))?;
            Ok(Box::new(BufWriter::new(file)))
        }
    }
}

fn read_input(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        None => {
            let mut text = String::new();
            io::Read::read_to_string(&mut io::stdin(), &mut text)
                .map_err(|e| Failure::Domain(format!("cannot read standard input: {e}")))?;
            Ok(text)
        }
        Some(p) => fs::read_to_string(p)
            .map_err(|e| Failure::Domain(format!("cannot read {}: {e}", p.display()))),
    }
}

fn parse_spine(literal: &str) -> Result<Spine, Failure> {
    literal.parse::<Spine>().map_err(usage)
}

fn read_graphs(path: Option<&Path>, format: GraphInFormat) -> Result<Vec<Graph>, Failure> {
    let text = read_input(path)?;
    let graphs = match format {
        GraphInFormat::Edgelist => parse_edge_list_stream(&text).map_err(usage)?,
        GraphInFormat::Graph6 => text
            .lines()
            .enumerate()
            .filter(|(_, line)| !line.trim().is_empty())
            .map(|(index, line)| {
                from_graph6(line).map_err(|e| usage(format!("line {}: {e}", index + 1)))
            })
            .collect::<Result<Vec<_>, _>>()?,
    };
    if graphs.is_empty() {
        return Err(Failure::Usage("input contains no graphs".to_string()));
    }
    Ok(graphs)
}

fn cmd_count(
    n: usize,
    to: Option<usize>,
    breakdown: bool,
    machine: bool,
    writer: &mut dyn Write,
) -> Result<(), Failure> {
    let end = to.unwrap_or(n);
    if end < n {
        return Err(Failure::Usage(format!("--to {end} is below the start {n}")));
    }
    for current in n..=end {
        if breakdown {
            let report = caterpillar_count_sum(current).map_err(usage)?;
            if current > n {
                writeln!(writer)?;
            }
            writeln!(writer, "n\t{current}")?;
            write!(writer, "{}", report.to_tsv())?;
        } else {
            let count = caterpillar_count_closed(current).map_err(usage)?;
            if to.is_some() {
                writeln!(writer, "{current}\t{count}")?;
            } else if machine {
                writeln!(writer, "n\t{current}")?;
                writeln!(writer, "closed_form\t{count}")?;
            } else {
                writeln!(writer, "{count}")?;
            }
        }
    }
    Ok(())
}

fn cmd_enumerate(n: usize, format: StreamFormat, writer: &mut dyn Write) -> Result<(), Failure> {
    if matches!(format, StreamFormat::Graph6) && n > 62 {
        return Err(Failure::Usage(format!(
            "graph6 output supports at most 62 vertices, got {n}"
        )));
    }
    let stream = enumerate_caterpillars(n).map_err(usage)?;
    for (index, (spine, tree)) in stream.enumerate() {
        match format {
            StreamFormat::Spine => writeln!(writer, "{spine}")?,
            StreamFormat::Graph6 => {
                let line = to_graph6(&tree).map_err(domain)?;
                writeln!(writer, "{line}")?;
            }
            StreamFormat::Edgelist => {
                if index > 0 {
                    writeln!(writer)?;
                }
                write!(writer, "{}", to_edge_list(&tree))?;
            }
            StreamFormat::Dot => {
                if index > 0 {
                    writeln!(writer)?;
                }
                write!(writer, "{}", to_dot(&tree))?;
            }
        }
    }
    Ok(())
}

fn cmd_encode(
    path: Option<&Path>,
    format: GraphInFormat,
    writer: &mut dyn Write,
) -> Result<(), Failure> {
    for (index, graph) in read_graphs(path, format)?.iter().enumerate() {
        let spine = encode(graph).map_err(|e| domain(format!("graph {}: {e}", index + 1)))?;
        writeln!(writer, "{spine}")?;
    }
    Ok(())
}

fn cmd_decode(
    literal: &str,
    format: GraphOutFormat,
    writer: &mut dyn Write,
) -> Result<(), Failure> {
    let spine = parse_spine(literal)?;
    let tree = caterpillar::graph::decode(&spine);
    match format {
        GraphOutFormat::Edgelist => write!(writer, "{}", to_edge_list(&tree))?,
        GraphOutFormat::Graph6 => {
            let line = to_graph6(&tree).map_err(usage)?;
            writeln!(writer, "{line}")?;
        }
        GraphOutFormat::Dot => write!(writer, "{}", to_dot(&tree))?,
    }
    Ok(())
}

fn cmd_recognize(
    path: Option<&Path>,
    format: GraphInFormat,
    writer: &mut dyn Write,
) -> Result<bool, Failure> {
    let mut all_caterpillars = true;
    for graph in read_graphs(path, format)? {
        let classification = recognize(&graph);
        if !matches!(classification, Classification::Caterpillar(_)) {
            all_caterpillars = false;
        }
        writeln!(writer, "{classification}")?;
    }
    Ok(all_caterpillars)
}

fn cmd_bijection(name: MapName, literal: &str, writer: &mut dyn Write) -> Result<(), Failure> {
    let spine = parse_spine(literal)?;
    let image = apply_map(name, &spine).map_err(|e| domain(format!("domain error: {e}")))?;
    let params = image.class_params();
    writeln!(
        writer,
        "{image} (N={}, k={})",
        params.n_vertices(),
        params.spine_len()
    )?;
    Ok(())
}

fn apply_map(name: MapName, spine: &Spine) -> Result<Spine, BijectionDomainError> {
    match name {
        MapName::F => halve(spine),
        MapName::FInv => Ok(mirror(spine)),
        MapName::G => merge_middle(spine),
        MapName::GInv => split_middle(spine),
        MapName::H => increment_middle(spine),
        MapName::HInv => decrement_middle(spine),
    }
}

fn cmd_symmetric(n: usize, k: usize, list: bool, writer: &mut dyn Write) -> Result<(), Failure> {
    let params = SpineClassParams::new(n, k).map_err(usage)?;
    if list {
        for spine in compositions(params).filter(Spine::is_symmetric) {
            writeln!(writer, "{spine}")?;
        }
    } else {
        writeln!(writer, "{}", symmetric_class_order(params))?;
    }
    Ok(())
}

/// Ceilings for the expensive verification stages; the cheap closed-form
/// comparison runs all the way to the requested bound.
const STREAM_CHECK_CEILING: usize = 20;
const BIJECTION_CHECK_CEILING: usize = 16;

fn cmd_verify(
    n_max: usize,
    oracle_max: Option<usize>,
    writer: &mut dyn Write,
) -> Result<bool, Failure> {
    if n_max < 3 {
        return Err(Failure::Usage(format!(
            "verification starts at 3 vertices, got {n_max}"
        )));
    }
    let ceiling = oracle_max.unwrap_or(DEFAULT_CENSUS_CEILING);
    if !(3..=MAX_CENSUS_VERTICES).contains(&ceiling) {
        return Err(Failure::Usage(format!(
            "--oracle-max must be within 3..={MAX_CENSUS_VERTICES}, got {ceiling}"
        )));
    }
    let mut all_pass = true;
    let mut report = |line: String, writer: &mut dyn Write| -> Result<(), Failure> {
        if line.starts_with("FAIL") {
            all_pass = false;
        }
        writeln!(writer, "{line}")?;
        Ok(())
    };

    report(check_closed_form_vs_sum(n_max), writer)?;
    report(check_stream_counts(n_max.min(STREAM_CHECK_CEILING)), writer)?;
    report(check_bijections(n_max.min(BIJECTION_CHECK_CEILING)), writer)?;
    let (census_rows, census_line) = check_census(n_max.min(ceiling));
    write!(writer, "{census_rows}")?;
    report(census_line, writer)?;
    Ok(all_pass)
}

fn check_closed_form_vs_sum(n_max: usize) -> String {
    for n in 3..=n_max {
        let report = caterpillar_count_sum(n).expect("range starts at 3");
        if report.total_by_sum != report.total_closed_form {
            return format!(
                "FAIL closed_form_vs_burnside_sum at N={n}: sum={} closed_form={}",
                report.total_by_sum, report.total_closed_form
            );
        }
    }
    format!("PASS closed_form_vs_burnside_sum N=3..={n_max}")
}

fn check_stream_counts(n_max: usize) -> String {
    use caterpillar::counting::{orbit_count, spine_class_order};
    for n in 3..=n_max {
        for k in 1..=n - 2 {
            let p = SpineClassParams::new(n, k).expect("k stays in range");
            let class = compositions(p).count();
            if BigCount::from(class) != spine_class_order(p) {
                return format!(
                    "FAIL stream_counts_vs_class_formulas at N={n} k={k}: stream={class} formula={}",
                    spine_class_order(p)
                );
            }
            let palindromic = compositions(p).filter(|s| s.is_symmetric()).count();
            if BigCount::from(palindromic) != symmetric_class_order(p)
                || palindromic != symmetric_bruteforce(p)
            {
                return format!(
                    "FAIL stream_counts_vs_class_formulas at N={n} k={k}: palindromes={palindromic} formula={} scan={}",
                    symmetric_class_order(p),
                    symmetric_bruteforce(p)
                );
            }
            let orbits = canonical_spines(p).count();
            if BigCount::from(orbits) != orbit_count(p) {
                return format!(
                    "FAIL stream_counts_vs_class_formulas at N={n} k={k}: orbits={orbits} formula={}",
                    orbit_count(p)
                );
            }
        }
    }
    format!("PASS stream_counts_vs_class_formulas N=3..={n_max}")
}

fn check_bijections(n_max: usize) -> String {
    let symmetric_members = |n: usize, k: usize| {
        compositions(SpineClassParams::new(n, k).expect("k stays in range"))
            .filter(Spine::is_symmetric)
    };
    for n in (4..=n_max).step_by(2) {
        for k in (2..=n - 2).step_by(2) {
            let mut domain_size = 0usize;
            for s in symmetric_members(n, k) {
                domain_size += 1;
                let halved = match halve(&s) {
                    Ok(h) => h,
                    Err(e) => return format!("FAIL bijection_round_trips at N={n} k={k} spine {s}: {e}"),
                };
                let image = halved.class_params();
                if (image.n_vertices(), image.spine_len()) != (n / 2 + 1, k / 2)
                    || mirror(&halved) != s
                {
                    return format!("FAIL bijection_round_trips at N={n} k={k}: halve/mirror broke on {s}");
                }
                let merged = match merge_middle(&s) {
                    Ok(m) => m,
                    Err(e) => return format!("FAIL bijection_round_trips at N={n} k={k} spine {s}: {e}"),
                };
                let image = merged.class_params();
                if (image.n_vertices(), image.spine_len()) != (n - 1, k - 1)
                    || !merged.is_symmetric()
                    || split_middle(&merged) != Ok(s.clone())
                {
                    return format!("FAIL bijection_round_trips at N={n} k={k}: merge/split broke on {s}");
                }
            }
            let image_class = SpineClassParams::new(n / 2 + 1, k / 2).expect("half class is valid");
            let image_size = compositions(image_class).count();
            if domain_size != image_size {
                return format!(
                    "FAIL bijection_round_trips at N={n} k={k}: domain {domain_size} image {image_size}"
                );
            }
        }
    }
    for n in (5..=n_max).step_by(2) {
        for k in (1..=n - 2).step_by(2) {
            for z in symmetric_members(n, k) {
                let bumped = match increment_middle(&z) {
                    Ok(b) => b,
                    Err(e) => return format!("FAIL bijection_round_trips at N={n} k={k} spine {z}: {e}"),
                };
                let image = bumped.class_params();
                if (image.n_vertices(), image.spine_len()) != (n + 1, k)
                    || !bumped.is_symmetric()
                    || decrement_middle(&bumped) != Ok(z.clone())
                {
                    return format!("FAIL bijection_round_trips at N={n} k={k}: middle step broke on {z}");
                }
            }
        }
    }
    format!("PASS bijection_round_trips N<={n_max}")
}

fn check_census(n_max: usize) -> (String, String) {
    let mut rows = String::new();
    for n in 3..=n_max {
        let census = free_tree_census(n).expect("census range was validated");
        rows.push_str(&format!(
            "{n}\t{}\t{}\n",
            census.free_tree_count, census.caterpillar_count
        ));
        let closed = caterpillar_count_closed(n).expect("range starts at 3");
        if BigCount::from(census.caterpillar_count) != closed {
            return (
                rows,
                format!(
                    "FAIL census_vs_enumeration at N={n}: census {} closed_form {closed}",
                    census.caterpillar_count
                ),
            );
        }
        let enumerated: std::collections::BTreeSet<_> = enumerate_caterpillars(n)
            .expect("range starts at 3")
            .map(|(_, tree)| iso_certificate(&tree).expect("decoded spines are trees"))
            .collect();
        if enumerated != census.caterpillar_certificates {
            return (
                rows,
                format!(
                    "FAIL census_vs_enumeration at N={n}: certificate sets differ ({} enumerated, {} censused)",
                    enumerated.len(),
                    census.caterpillar_certificates.len()
                ),
            );
        }
    }
    (rows, format!("PASS census_vs_enumeration N=3..={n_max}"))
}
