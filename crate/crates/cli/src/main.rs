//! `effsum` binary: verdicts, efficient sets, property audits, derivation
//! traces, seeded instance generation and a small oracle-vs-rules timing
//! comparison.
//!
//! Exit codes: 0 on success, 1 when a verdict disagrees with the oracle,
//! 2 on malformed input.

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use effsum_cli::generate::{generate_file, Family, GenConfig};
use effsum_cli::{parse_instance, run_trace, run_verdict, CliError, CliResult, Instance};
use effsum_core::{efficient_set, minkowski_sum_many, run_audits, theorem_verdict, FiniteSet};

#[derive(Parser)]
#[command(
    name = "effsum",
    about = "Efficient points of finite sets and Minkowski sums over groups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WhichSet {
    A,
    B,
    Sum,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the efficient set survives translation by the
    /// summand set, with rule justification and oracle cross-check.
    Verdict {
        /// Instance file (JSON).
        instance: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Print an efficient set of the instance.
    Efficient {
        instance: PathBuf,
        /// Which set to reduce: the base set, the summand set, or their sum.
        #[arg(long, value_enum, default_value = "a")]
        set: WhichSet,
    },
    /// Audit the relation properties the verdict rules rely on.
    Audit {
        instance: PathBuf,
        /// Probe closure depth.
        #[arg(long)]
        depth: Option<u32>,
        /// Probe size cap.
        #[arg(long)]
        cap: Option<usize>,
        /// Maximum summand multiplicity for the repetition properties.
        #[arg(long)]
        mult: Option<u64>,
    },
    /// Derive and replay a contradiction trace (or print a witness).
    Trace { instance: PathBuf },
    /// Generate seeded instance files.
    Gen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "random")]
        family: Family,
        /// Number of consecutive seeds to generate.
        #[arg(long, default_value_t = 1)]
        count: u64,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 8)]
        a_size: usize,
        #[arg(long, default_value_t = 3)]
        b_size: usize,
        #[arg(long, default_value_t = 5)]
        bound: i64,
        /// Output directory; stdout when omitted (single instance only).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time the full oracle against the rule engine on seeded instances.
    Bench {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        count: u64,
        #[arg(long, default_value_t = 10)]
        a_size: usize,
        #[arg(long, default_value_t = 4)]
        b_size: usize,
    },
}

fn configure_threads() {
    if let Ok(v) = std::env::var("EFFSUM_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
        }
    }
}

fn combined_b(inst: &Instance) -> CliResult<FiniteSet> {
    let first = &inst.b_list[0];
    Ok(minkowski_sum_many(first, &inst.b_list[1..], &inst.group)?)
}

fn cmd_verdict(path: &PathBuf, format: OutputFormat) -> CliResult<bool> {
    let inst = parse_instance(path)?;
    let (report, verdict, _) = run_verdict(&inst)?;
    match format {
        OutputFormat::Json => print!("{}", report.to_json()),
        OutputFormat::Text => print!("{}", report.to_text()),
    }
    Ok(verdict.consistent)
}

fn cmd_efficient(path: &PathBuf, which: WhichSet) -> CliResult<()> {
    let inst = parse_instance(path)?;
    let set = match which {
        WhichSet::A => inst.a.clone(),
        WhichSet::B => combined_b(&inst)?,
        WhichSet::Sum => {
            let b = combined_b(&inst)?;
            effsum_core::minkowski_sum(&inst.a, &b, &inst.group)?
        }
    };
    let partition = efficient_set(&set, &inst.relation)?;
    for e in &partition.efficient {
        println!("{e}");
    }
    Ok(())
}

fn cmd_audit(
    path: &PathBuf,
    depth: Option<u32>,
    cap: Option<usize>,
    mult: Option<u64>,
) -> CliResult<()> {
    let mut inst = parse_instance(path)?;
    if depth.is_some() {
        inst.audit.depth = depth;
    }
    if cap.is_some() {
        inst.audit.cap = cap;
    }
    if mult.is_some() {
        inst.audit.max_multiplicity = mult;
    }
    let cfg = inst.audit_config();
    let b = combined_b(&inst)?;
    let report = run_audits(&inst.relation, &inst.group, &inst.a, &b, &cfg)?;
    for (prop, status) in &report.statuses {
        println!("{prop:<5} {status}");
    }
    // show which rule the audited basis licenses, without the oracle run
    let theorem = theorem_verdict(&inst.a, &b, &inst.group, &inst.relation, &report)?;
    println!(
        "rule  {} ({}{})",
        theorem.rule,
        theorem.direction,
        if theorem.conditional { ", conditional" } else { "" }
    );
    Ok(())
}

fn cmd_trace(path: &PathBuf) -> CliResult<()> {
    let inst = parse_instance(path)?;
    let output = run_trace(&inst)?;
    print!("{}", output.render());
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_gen(
    seed: u64,
    family: Family,
    count: u64,
    cfg: GenConfig,
    out: Option<PathBuf>,
) -> CliResult<()> {
    if count > 1 && out.is_none() {
        return Err(CliError::Validation(
            "--count > 1 requires --out".into(),
        ));
    }
    for s in seed..seed + count {
        let file = generate_file(s, family, &cfg);
        let text = format!("{}\n", serde_json::to_string_pretty(&file).unwrap());
        match &out {
            None => print!("{text}"),
            Some(dir) => {
                std::fs::create_dir_all(dir)?;
                let name = format!("{}_{s}.json", family.as_str());
                let mut f = std::fs::File::create(dir.join(&name))?;
                f.write_all(text.as_bytes())?;
            }
        }
    }
    Ok(())
}

fn cmd_bench(seed: u64, count: u64, a_size: usize, b_size: usize) -> CliResult<()> {
    let cfg = GenConfig {
        dim: 2,
        a_size,
        b_size,
        coord_bound: 5,
    };
    println!(
        "{:<24} {:>9} {:>12} {:>12}",
        "family", "instances", "oracle_us", "rules_us"
    );
    for family in Family::ALL {
        let mut oracle_ns = 0u128;
        let mut rules_ns = 0u128;
        for s in seed..seed + count {
            let (a, b) = effsum_cli::generate::generate_sets(s, family, &cfg);
            let g = effsum_core::GroupContext::IntVec { dim: 2 };
            let rel = effsum_core::RelationOracle::ProductOrder;
            let audit_cfg = effsum_core::AuditConfig::defaults_for(&a, &b);

            let t = Instant::now();
            let _ = effsum_core::oracle_verdict(&a, &b, &g, &rel)?;
            oracle_ns += t.elapsed().as_nanos();

            let t = Instant::now();
            let report = run_audits(&rel, &g, &a, &b, &audit_cfg)?;
            let _ = theorem_verdict(&a, &b, &g, &rel, &report)?;
            rules_ns += t.elapsed().as_nanos();
        }
        println!(
            "{:<24} {:>9} {:>12} {:>12}",
            family.as_str(),
            count,
            oracle_ns / 1000,
            rules_ns / 1000
        );
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult<bool> {
    match cli.command {
        Command::Verdict { instance, format } => cmd_verdict(&instance, format),
        Command::Efficient { instance, set } => cmd_efficient(&instance, set).map(|_| true),
        Command::Audit {
            instance,
            depth,
            cap,
            mult,
        } => cmd_audit(&instance, depth, cap, mult).map(|_| true),
        Command::Trace { instance } => cmd_trace(&instance).map(|_| true),
        Command::Gen {
            seed,
            family,
            count,
            dim,
            a_size,
            b_size,
            bound,
            out,
        } => cmd_gen(
            seed,
            family,
            count,
            GenConfig {
                dim,
                a_size,
                b_size,
                coord_bound: bound,
            },
            out,
        )
        .map(|_| true),
        Command::Bench {
            seed,
            count,
            a_size,
            b_size,
        } => cmd_bench(seed, count, a_size, b_size).map(|_| true),
    }
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("warning: rule verdict disagrees with the oracle");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
