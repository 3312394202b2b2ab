//! Command-line front end: analysis, construction, enumeration and
//! verification sweeps. Standard output carries exactly one graph6 string
//! or one JSON object per line (the machine contract; `--format table` is
//! a human-readable best effort); prose and progress go to standard
//! error. Exit codes: 0 = verified or scan completed, 1 = counterexample
//! to an asserted claim, 2 = usage error.

use clap::{Parser, Subcommand, ValueEnum};
use cyclespec::enumerate::{self, max_edges, EnumFilter};
use cyclespec::graph::Graph;
use cyclespec::harness::{self, SweepOptions, VerificationReport};
use cyclespec::spectrum::{classify_pancyclicity, cycle_spectrum};
use cyclespec::{construct, graph::iter_bits};
use std::io::{BufRead, BufReader, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "cyclespec", version, about = "Exact cycle spectra, pancyclicity reports and exhaustive verification sweeps for small graphs")]
struct Cli {
    /// Worker threads for sweeps; 0 means one per core.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    /// Output format on stdout: json is the machine contract, table is
    /// for eyeballs.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Cycle spectra and pancyclicity classification of graph6 input,
    /// one report per line.
    Analyze {
        /// Include the per-vertex cycle-length sets in each report.
        #[arg(long)]
        vertex_spectra: bool,
        /// File of graph6 lines, or "-" for standard input.
        #[arg(default_value = "-")]
        input: String,
    },
    /// Print a named family member as graph6.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Stream or count isomorphism classes of a given order.
    Enumerate {
        /// Number of vertices (exhaustive runs are practical to about 10).
        #[arg(long)]
        n: usize,
        /// Edge-count window MIN:MAX (default: all sizes).
        #[arg(long)]
        edges: Option<String>,
        /// Keep only graphs containing an odd cycle.
        #[arg(long)]
        nonbipartite: bool,
        /// Keep only connected graphs.
        #[arg(long)]
        connected: bool,
        /// Print the class count as a JSON object.
        #[arg(long)]
        count: bool,
        /// Print one graph6 line per class.
        #[arg(long, conflicts_with = "count")]
        emit: bool,
    },
    /// Exhaustively verify one of the numbered claims at order N.
    Verify {
        #[command(subcommand)]
        claim: Claim,
    },
    /// Determine f(n): the least size forcing a weakly pancyclic vertex
    /// in nonbipartite graphs of order n.
    SearchF {
        #[arg(long)]
        n: usize,
        /// Checkpoint directory; finished work found there is not redone.
        #[arg(long)]
        resume: Option<PathBuf>,
    },
    /// Scan for conjecture counterexamples (reported, never asserted).
    Conjecture {
        #[command(subcommand)]
        which: ConjectureKind,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Complete bipartite graph with one edge identified with a triangle.
    Bt {
        #[arg(long)]
        n: usize,
    },
    /// The sharpness witness with exactly three weakly pancyclic vertices.
    Gn {
        #[arg(long)]
        n: usize,
    },
    /// Complete bipartite graph K_{s,t}.
    Kst {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
    },
    /// The k-cycle.
    Cycle {
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand)]
#[allow(clippy::enum_variant_names)]
enum Claim {
    /// Hamiltonian nonbipartite graphs of size >= b(n) are pancyclic.
    Thm1 {
        #[arg(long)]
        n: usize,
    },
    /// Nonbipartite graphs of size >= b(n) are weakly pancyclic, girth 3.
    Thm2 {
        #[arg(long)]
        n: usize,
    },
    /// Such graphs have three weakly pancyclic vertices, except bt(n).
    Thm3 {
        #[arg(long)]
        n: usize,
    },
    /// gn(n) realizes exactly three weakly pancyclic vertices at size b(n).
    Thm4 {
        #[arg(long)]
        n: usize,
    },
    /// Longest cycles of nonhamiltonian graphs miss a small vertex.
    Lemma5 {
        #[arg(long)]
        n: usize,
    },
    /// Dense balanced bipartite path lengths; --n is the half-order k.
    Lemma7 {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum ConjectureKind {
    /// Hamiltonian nonbipartite graphs of size >= b(n), minus bt(n) for
    /// odd n, should contain a pancyclic edge.
    PancyclicEdge {
        #[arg(long)]
        n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = SweepOptions {
        jobs: cli.jobs,
        verbose: true,
    };
    match run(cli.command, cli.format, &opts) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, format: Format, opts: &SweepOptions) -> Result<ExitCode, String> {
    match command {
        Command::Analyze { vertex_spectra, input } => analyze(&input, vertex_spectra, format),
        Command::Construct { family } => {
            let g = match family {
                Family::Bt { n } => construct::bt(n),
                Family::Gn { n } => construct::gn(n),
                Family::Kst { s, t } => construct::complete_bipartite(s, t),
                Family::Cycle { k } => construct::cycle_graph(k),
            }
            .map_err(|e| e.to_string())?;
            println!("{}", g.to_graph6());
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate {
            n,
            edges,
            nonbipartite,
            connected,
            count,
            emit,
        } => enumerate_cmd(n, edges.as_deref(), nonbipartite, connected, count, emit, opts),
        Command::Verify { claim } => {
            let report = match claim {
                Claim::Thm1 { n } => harness::verify_theorem1(n, opts),
                Claim::Thm2 { n } => harness::verify_theorem2(n, opts),
                Claim::Thm3 { n } => harness::verify_theorem3(n, opts),
                Claim::Thm4 { n } => harness::verify_theorem4(n, opts),
                Claim::Lemma5 { n } => harness::verify_lemma5(n, opts),
                Claim::Lemma7 { n } => harness::verify_lemma7(n, opts),
            }
            .map_err(|e| e.to_string())?;
            print_report(&report, format);
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::SearchF { n, resume } => {
            let record = harness::compute_f(n, opts, resume.as_deref()).map_err(|e| e.to_string())?;
            match format {
                Format::Json => println!("{}", record.to_json()),
                Format::Table => {
                    println!(
                        "f({}) = {}  b({}) = {}  witnesses at size {}: {}  [{} classes scanned, {} ms]",
                        record.n,
                        record.f_value,
                        record.n,
                        record.b_value,
                        record.witness_size.map_or("-".into(), |s| s.to_string()),
                        record.witnesses.join(" "),
                        record.scanned,
                        record.elapsed_ms
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Conjecture { which } => {
            let ConjectureKind::PancyclicEdge { n } = which;
            let report = harness::scan_conjecture1(n, opts).map_err(|e| e.to_string())?;
            print_report(&report, format);
            if !report.counterexamples.is_empty() {
                eprintln!(
                    "conjecture scan found {} hypothesis graph(s) with no pancyclic edge — research finding, exit stays 0",
                    report.counterexamples.len()
                );
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn print_report(report: &VerificationReport, format: Format) {
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Table => {
            println!(
                "claim {:10} n={:2}  scanned={:8}  in_hypothesis={:8}  counterexamples={}  elapsed={} ms{}",
                report.claim,
                report.n,
                report.scanned,
                report.in_hypothesis,
                report.counterexamples.len(),
                report.elapsed_ms,
                report
                    .bt_wp_vertices
                    .map_or(String::new(), |c| format!("  bt_wp_vertices={c}"))
            );
            for c in &report.counterexamples {
                println!("counterexample {c}");
            }
        }
    }
}

fn analyze(input: &str, vertex_spectra: bool, format: Format) -> Result<ExitCode, String> {
    let reader: Box<dyn Read> = if input == "-" {
        Box::new(std::io::stdin().lock())
    } else {
        Box::new(std::fs::File::open(input).map_err(|e| format!("{input}: {e}"))?)
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for (idx, line) in BufReader::new(reader).lines().enumerate() {
        let line = line.map_err(|e| format!("line {}: {e}", idx + 1))?;
        if line.trim().is_empty() {
            continue;
        }
        let g = Graph::from_graph6(&line).map_err(|e| format!("line {}: {e}", idx + 1))?;
        write_analysis(&mut out, &g, vertex_spectra, format).map_err(|e| e.to_string())?;
    }
    Ok(ExitCode::SUCCESS)
}

fn mask_to_vec(mask: u32) -> Vec<usize> {
    iter_bits(mask).collect()
}

fn write_analysis(out: &mut impl Write, g: &Graph, vertex_spectra: bool, format: Format) -> std::io::Result<()> {
    let spectrum = cycle_spectrum(g);
    let report = classify_pancyclicity(g);
    match format {
        Format::Json => {
            let mut obj = serde_json::json!({
                "graph6": g.to_graph6(),
                "girth": spectrum.girth(),
                "circumference": spectrum.circumference(),
                "wp_vertices": mask_to_vec(report.weakly_pancyclic_vertices()),
                "pancyclic_vertices": mask_to_vec(report.pancyclic_vertices()),
                "pancyclic_edges": report.pancyclic_edges(),
            });
            if vertex_spectra {
                obj["per_vertex_lengths"] = serde_json::json!(g
                    .vertices()
                    .map(|v| spectrum.vertex_lengths(v).to_vec())
                    .collect::<Vec<_>>());
            }
            writeln!(out, "{obj}")
        }
        Format::Table => {
            let fmt_opt = |o: Option<usize>| o.map_or("-".to_string(), |v| v.to_string());
            write!(
                out,
                "{}  n={} e={} girth={} circ={} wp={:?} pancyclic={:?} pancyclic_edges={:?}",
                g.to_graph6(),
                g.order(),
                g.size(),
                fmt_opt(spectrum.girth()),
                fmt_opt(spectrum.circumference()),
                mask_to_vec(report.weakly_pancyclic_vertices()),
                mask_to_vec(report.pancyclic_vertices()),
                report.pancyclic_edges(),
            )?;
            if vertex_spectra {
                let per: Vec<Vec<usize>> = g.vertices().map(|v| spectrum.vertex_lengths(v).to_vec()).collect();
                write!(out, " per_vertex={per:?}")?;
            }
            writeln!(out)
        }
    }
}

fn enumerate_cmd(
    n: usize,
    edges: Option<&str>,
    nonbipartite: bool,
    connected: bool,
    count: bool,
    emit: bool,
    opts: &SweepOptions,
) -> Result<ExitCode, String> {
    if n > cyclespec::MAX_ORDER {
        return Err(format!("--n {n} exceeds the maximum order {}", cyclespec::MAX_ORDER));
    }
    if count == emit {
        return Err("pass exactly one of --count or --emit".into());
    }
    let (lo, hi) = match edges {
        None => (0, max_edges(n)),
        Some(spec) => {
            let (a, b) = spec
                .split_once(':')
                .ok_or_else(|| format!("--edges wants MIN:MAX, got {spec}"))?;
            let lo: usize = a.parse().map_err(|_| format!("bad edge bound {a}"))?;
            let hi: usize = b.parse().map_err(|_| format!("bad edge bound {b}"))?;
            if lo > hi || hi > max_edges(n) {
                return Err(format!("--edges {lo}:{hi} is not within 0..={}", max_edges(n)));
            }
            (lo, hi)
        }
    };
    let mut filter = EnumFilter::new(n).size_range(lo, hi);
    if nonbipartite {
        filter = filter.nonbipartite_only();
    }
    if connected {
        filter = filter.connected_only();
    }
    if count {
        let pool = rayon_pool(opts.jobs)?;
        let classes = pool.install(|| enumerate::par_mapreduce(filter, &|_| 1u64, &|a, b| a + b, 0));
        println!(
            "{}",
            serde_json::json!({
                "n": n,
                "size_min": lo,
                "size_max": hi,
                "nonbipartite": nonbipartite,
                "connected": connected,
                "classes": classes,
            })
        );
    } else {
        let stdout = std::io::stdout();
        let mut out = stdout.lock();
        enumerate::for_each_class(filter, |g| {
            writeln!(out, "{}", g.to_graph6()).expect("stdout");
        });
    }
    Ok(ExitCode::SUCCESS)
}

fn rayon_pool(jobs: usize) -> Result<rayon::ThreadPool, String> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| e.to_string())
}
