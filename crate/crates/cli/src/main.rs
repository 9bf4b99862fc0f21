use std::io::{self, BufWriter, Write};
use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use switchrecon::cycles::{dist_set, find_w, CycleOrientation, Rotation};
use switchrecon::decks::t_deck;
use switchrecon::enumerate::{
    gen_all_oriented, gen_oriented_cycles, gen_oriented_maxdeg2, gen_oriented_paths, gen_tournaments,
    gen_underlying_graphs,
};
use switchrecon::figures::verify_figures;
use switchrecon::search::{
    check_bounds, merge_reports, run_census_with, verify_disconnected_dichotomy, CensusOptions, GraphClass,
    SearchReport, Shard, TRange,
};
use switchrecon::stability::{
    classify_stable_connected, gamma_group, gamma_index_parts, is_switching_stable, is_switching_stable_set,
};
use switchrecon::{format_digraph6, parse_digraph6, Digraph, Error};

#[derive(Parser)]
#[command(name = "switchrecon", version, about = "Switching decks of digraphs: generation, decks and family censuses")]
struct Cli {
    /// Worker threads (default: all cores)
    #[arg(long, global = true, env = "THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one representative per isomorphism class, as digraph6
    Gen {
        /// paths, cycles, digon-cycles, maxdeg2, tournaments, all-oriented or underlying
        class: String,
        n: usize,
        /// Print only the number of classes
        #[arg(long)]
        count: bool,
        #[arg(long)]
        heavy: bool,
    },
    /// Print the t-deck of a digraph6 graph
    Deck {
        graph: String,
        #[arg(short, long, default_value_t = 0, allow_hyphen_values = true)]
        t: i64,
    },
    /// Find all families sharing a t-deck in a graph class
    Families {
        class: String,
        /// Orders, e.g. 3..8
        n_range: String,
        /// t values, e.g. -1..n
        #[arg(allow_hyphen_values = true)]
        t_range: String,
        #[command(flatten)]
        census: CensusFlags,
    },
    /// Check switching-stability of graphs, or list the connected stable graphs
    Stable {
        graphs: Vec<String>,
        /// List every connected stable oriented graph up to this order
        #[arg(long, conflicts_with = "graphs")]
        max_order: Option<usize>,
        #[arg(long)]
        heavy: bool,
    },
    /// Sizes of Aut(D) and of the permutations realizable by switching
    Gamma {
        graph: String,
        /// Also list the elements
        #[arg(long)]
        elements: bool,
    },
    /// Families of oriented cycles, or W for one cycle and rotation
    Cycles {
        n_range: Option<String>,
        #[arg(allow_hyphen_values = true)]
        t_range: Option<String>,
        /// Allow digons
        #[arg(long)]
        digons: bool,
        /// Report W and its distances for this cycle instead
        #[arg(long, conflicts_with_all = ["n_range", "t_range"], requires = "rotate")]
        graph: Option<String>,
        #[arg(long)]
        rotate: Option<usize>,
        #[command(flatten)]
        census: CensusFlags,
    },
    /// Check the bundled example families
    VerifyFigures {
        #[arg(long)]
        json: bool,
    },
    /// Merge JSON reports of shards of one census
    Merge {
        #[arg(required = true)]
        files: Vec<String>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct CensusFlags {
    #[arg(long)]
    heavy: bool,
    #[arg(long)]
    json: bool,
    /// Run only part i of k (0-based), e.g. 2/8
    #[arg(long)]
    shard: Option<String>,
    /// Report progress on standard error
    #[arg(long)]
    progress: bool,
}

enum Failure {
    Lib(Error),
    Usage(String),
    Mismatch(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let code = match run(cli.command) {
        Ok(()) => 0,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            1
        }
        Err(Failure::Mismatch(m)) => {
            eprintln!("{m}");
            1
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            2
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::HeavyFlagRequired(_) => 3,
                Error::CardAbsent => 4,
                Error::DichotomyViolated(_) => 5,
                _ => 2,
            }
        }
    };
    ExitCode::from(code)
}

fn run(cmd: Command) -> Outcome {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cmd {
        Command::Gen { class, n, count, heavy } => gen(&mut out, &class, n, count, heavy)?,
        Command::Deck { graph, t } => {
            let g = parse_graph(&graph)?;
            write!(out, "{}", t_deck(&g, t)?)?;
        }
        Command::Families { class, n_range, t_range, census } => {
            let class: GraphClass = class.parse()?;
            let report = census_report(class, &n_range, &t_range, &census)?;
            emit_report(&mut out, &report, census.json)?;
        }
        Command::Stable { graphs, max_order, heavy } => stable(&mut out, &graphs, max_order, heavy)?,
        Command::Gamma { graph, elements } => {
            let d = parse_graph(&graph)?;
            let group = gamma_group(&d)?;
            let (aut, pairs) = gamma_index_parts(&d)?;
            writeln!(out, "aut {aut}")?;
            writeln!(out, "gamma {}", group.order())?;
            writeln!(out, "switching pairs {pairs}")?;
            if elements {
                for p in group.elements() {
                    let images: Vec<String> = (0..p.len()).map(|v| p.apply(v).to_string()).collect();
                    writeln!(out, "[{}]", images.join(" "))?;
                }
            }
        }
        Command::Cycles { n_range, t_range, digons, graph, rotate, census } => {
            if let Some(graph) = graph {
                let c = CycleOrientation::from_digraph(&parse_graph(&graph)?)?;
                let delta = Rotation::new(c.n(), rotate.expect("required by clap"));
                match find_w(&c, &delta)? {
                    Some(w) => {
                        let w: Vec<String> = w.iter().map(|v| v.to_string()).collect();
                        let d: Vec<String> = dist_set(&c, &delta)?.iter().map(|v| v.to_string()).collect();
                        writeln!(out, "W {{{}}}", w.join(", "))?;
                        writeln!(out, "dist {{{}}}", d.join(", "))?;
                    }
                    None => writeln!(out, "W undefined")?,
                }
            } else {
                let class = if digons { GraphClass::DigonCycles } else { GraphClass::Cycles };
                let n_range = n_range.ok_or_else(|| Failure::Usage("cycles needs an order range or --graph".into()))?;
                let t_range = t_range.unwrap_or_else(|| "-1..n".to_string());
                let report = census_report(class, &n_range, &t_range, &census)?;
                emit_report(&mut out, &report, census.json)?;
            }
        }
        Command::VerifyFigures { json } => {
            let checks = verify_figures();
            if json {
                let rows: Vec<serde_json::Value> = checks
                    .iter()
                    .map(|c| {
                        serde_json::json!({
                            "name": c.name, "check": c.check.to_string(), "members": c.members,
                            "passed": c.passed, "detail": c.detail,
                        })
                    })
                    .collect();
                writeln!(out, "{}", serde_json::to_string_pretty(&rows).expect("serializable"))?;
            } else {
                for c in &checks {
                    let mark = if c.passed { "PASS" } else { "FAIL" };
                    writeln!(out, "{mark}  {:<18} {:<7} {:>2}  {}", c.name, c.check.to_string(), c.members, c.detail)?;
                }
            }
            out.flush()?;
            let failed = checks.iter().filter(|c| !c.passed).count();
            if failed > 0 {
                return Err(Failure::Mismatch(format!("{failed} figure check(s) failed")));
            }
        }
        Command::Merge { files, json } => {
            let mut reports = Vec::new();
            for f in &files {
                let text = std::fs::read_to_string(f)?;
                let r: SearchReport =
                    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{f}: {e}")))?;
                reports.push(r);
            }
            emit_report(&mut out, &merge_reports(reports)?, json)?;
        }
    }
    out.flush()?;
    Ok(())
}

fn parse_graph(s: &str) -> Result<Digraph, Failure> {
    parse_digraph6(s).map_err(|e| Failure::Usage(format!("{s:?}: {e}")))
}

fn parse_n_range(s: &str) -> Result<RangeInclusive<usize>, Failure> {
    let bad = || Failure::Usage(format!("bad order range {s:?}; expected a..b or n"));
    match s.split_once("..") {
        Some((a, b)) => Ok(a.trim().parse().map_err(|_| bad())?..=b.trim().parse().map_err(|_| bad())?),
        None => {
            let n = s.trim().parse().map_err(|_| bad())?;
            Ok(n..=n)
        }
    }
}

fn parse_shard(s: &str) -> Result<Shard, Failure> {
    let bad = || Failure::Usage(format!("bad shard {s:?}; expected i/k with i < k"));
    let (i, k) = s.split_once('/').ok_or_else(bad)?;
    let shard = Shard { index: i.parse().map_err(|_| bad())?, count: k.parse().map_err(|_| bad())? };
    if shard.count == 0 || shard.index >= shard.count {
        return Err(bad());
    }
    Ok(shard)
}

fn census_report(class: GraphClass, n_range: &str, t_range: &str, flags: &CensusFlags) -> Result<SearchReport, Failure> {
    let n_range = parse_n_range(n_range)?;
    let t_range: TRange = t_range.parse()?;
    let shard = flags.shard.as_deref().map(parse_shard).transpose()?.unwrap_or_default();
    let opts = CensusOptions { heavy: flags.heavy, shard, progress: flags.progress, ..Default::default() };
    let report = run_census_with(class, n_range, t_range, &opts)?;
    for f in &report.families {
        if f.t() == 0 && !f.graphs()[0].is_weakly_connected() {
            verify_disconnected_dichotomy(f)?;
        }
    }
    Ok(report)
}

fn emit_report(out: &mut impl Write, r: &SearchReport, json: bool) -> io::Result<()> {
    if json {
        return writeln!(out, "{}", serde_json::to_string_pretty(r).expect("serializable"));
    }
    for f in &r.families {
        let members: Vec<String> = f.members().iter().map(|c| c.to_digraph6()).collect();
        writeln!(out, "n={} t={} size={}: {}", f.n(), f.t(), f.len(), members.join(" "))?;
    }
    for (n, c) in &r.counts {
        writeln!(
            out,
            "# n={n}: {} classes, {} families, {} graphs in families, {} pairs",
            c.classes, c.families, c.graphs_in_families, c.pairs
        )?;
    }
    writeln!(
        out,
        "# total: {} families, {} graphs, {} pairs",
        r.families.len(),
        r.total_graphs(),
        r.total_pairs()
    )
}

fn gen(out: &mut impl Write, class: &str, n: usize, count: bool, heavy: bool) -> Outcome {
    let graphs: Box<dyn Iterator<Item = Digraph>> = if class == "underlying" {
        Box::new(gen_underlying_graphs(n)?.into_iter().map(|u| u.as_digraph()))
    } else {
        let class: GraphClass = class.parse()?;
        check_bounds(class, &(n..=n), heavy)?;
        match class {
            GraphClass::Paths => Box::new(gen_oriented_paths(n)?),
            GraphClass::Cycles => Box::new(gen_oriented_cycles(n, false)?),
            GraphClass::DigonCycles => Box::new(gen_oriented_cycles(n, true)?),
            GraphClass::Maxdeg2 => Box::new(gen_oriented_maxdeg2(n)?),
            GraphClass::Tournaments => Box::new(gen_tournaments(n)?.into_iter()),
            GraphClass::AllOriented => gen_all_oriented(n)?,
        }
    };
    if count {
        writeln!(out, "{}", graphs.count())?;
    } else {
        for g in graphs {
            writeln!(out, "{}", format_digraph6(&g))?;
        }
    }
    Ok(())
}

fn stable(out: &mut impl Write, graphs: &[String], max_order: Option<usize>, heavy: bool) -> Outcome {
    if let Some(n) = max_order {
        if n >= 8 && !heavy {
            return Err(Error::HeavyFlagRequired(format!("stable classification at n = {n}")).into());
        }
        for g in classify_stable_connected(n)? {
            writeln!(out, "{}", format_digraph6(&g))?;
        }
        return Ok(());
    }
    if graphs.is_empty() {
        return Err(Failure::Usage("give graphs or --max-order".into()));
    }
    let gs = graphs.iter().map(|s| parse_graph(s)).collect::<Result<Vec<_>, _>>()?;
    for (s, g) in graphs.iter().zip(&gs) {
        writeln!(out, "{s} {}", if is_switching_stable(g) { "stable" } else { "not stable" })?;
    }
    if gs.len() > 1 {
        let set = is_switching_stable_set(&gs)?;
        writeln!(out, "set {}", if set { "stable" } else { "not stable" })?;
    }
    Ok(())
}
