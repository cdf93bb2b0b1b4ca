//! Command-line front door: build tables, run censuses and verification,
//! index word lists, query, and benchmark.
//!
//! Exit codes: 0 success, 1 verification below threshold, 2 I/O error,
//! 3 bad arguments.

use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use fuzzyfind::ffd::{self, build_entry, neighbors_within_2, FfdRecord};
use fuzzyfind::lexicon::{fuzzy_lookup, scan_lookup, LetterMap, PostingStore};
use fuzzyfind::report::RunReport;
use fuzzyfind::table::{build_table, case_census_from_table, FfdTable};
use fuzzyfind::{GolayCodec, Vector23};

const EXIT_VERIFY: u8 = 1;
const EXIT_IO: u8 = 2;
const EXIT_ARGS: u8 = 3;

#[derive(Parser)]
#[command(name = "ffd", version, about = "FuzzyFind Dictionary over 23-bit keys")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the full precomputed table file (2^23 records, 512 MiB).
    Build {
        /// Output path for the table file.
        #[arg(long)]
        out: PathBuf,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
    /// Entry-kind census with exact counts and percentages.
    Stats {
        /// Census an existing table file instead of recomputing
        /// (defaults to $FFD_TABLE when set).
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Shared-address verification over 277-vector neighborhoods.
    Verify {
        /// Number of seeded-random center indices (the fixed index 1000 is
        /// always added; 0 checks only the fixed 1000/480 pair).
        #[arg(long, default_value_t = 1000, conflicts_with = "exhaustive")]
        samples: u64,
        /// Check every one of the 2^23 centers (long; needs ~600 MiB RAM).
        #[arg(long)]
        exhaustive: bool,
        /// RNG seed for center sampling.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Pass-rate gate in percent; below it the exit code is 1.
        #[arg(long, default_value_t = 99.9)]
        min_pass_rate: f64,
        /// Suppress the per-pair failure lines.
        #[arg(long)]
        quiet: bool,
    },
    /// Index a word list (one word per line, UTF-8) into a posting store.
    Index {
        /// Word list path.
        #[arg(long)]
        words: PathBuf,
        /// Output path for the posting store.
        #[arg(long)]
        out: PathBuf,
        /// Letter map file (`letter position` lines); default built-in map.
        #[arg(long)]
        mapping: Option<PathBuf>,
    },
    /// Fuzzy-query a posting store.
    Query {
        /// Posting store path.
        #[arg(long)]
        index: PathBuf,
        /// Query word.
        #[arg(long)]
        word: String,
        /// Maximum signature Hamming distance (0..=2).
        #[arg(long, default_value_t = 2)]
        max_hd: u32,
        /// Maximum number of results.
        #[arg(long, default_value_t = 10)]
        limit: usize,
        /// Letter map file; must match the one used at index time.
        #[arg(long)]
        mapping: Option<PathBuf>,
    },
    /// Benchmark dictionary lookups against a linear scan.
    Bench {
        /// Posting store path.
        #[arg(long)]
        index: PathBuf,
        /// Query list path (one query per line).
        #[arg(long)]
        queries: PathBuf,
        /// Letter map file; must match the one used at index time.
        #[arg(long)]
        mapping: Option<PathBuf>,
    },
}

/// Command failure carrying its exit code.
enum CmdError {
    Io(String),
    Args(String),
}

impl CmdError {
    fn io(err: impl std::fmt::Display) -> Self {
        CmdError::Io(err.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => match err.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                print!("{err}");
                return ExitCode::SUCCESS;
            }
            _ => {
                eprint!("{err}");
                return ExitCode::from(EXIT_ARGS);
            }
        },
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(CmdError::Io(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_IO)
        }
        Err(CmdError::Args(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_ARGS)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, CmdError> {
    match command {
        Command::Build { out, threads } => cmd_build(&out, threads),
        Command::Stats { table } => cmd_stats(table),
        Command::Verify { samples, exhaustive, seed, min_pass_rate, quiet } => {
            cmd_verify(samples, exhaustive, seed, min_pass_rate, quiet)
        }
        Command::Index { words, out, mapping } => cmd_index(&words, &out, mapping.as_deref()),
        Command::Query { index, word, max_hd, limit, mapping } => {
            cmd_query(&index, &word, max_hd, limit, mapping.as_deref())
        }
        Command::Bench { index, queries, mapping } => {
            cmd_bench(&index, &queries, mapping.as_deref())
        }
    }
}

fn cmd_build(out: &Path, threads: usize) -> Result<ExitCode, CmdError> {
    let codec = GolayCodec::new();
    let built = build_table(&codec, out, threads).map_err(CmdError::io)?;
    let mut report = RunReport::new("build");
    report
        .push("out", out.display())
        .push("records_written", built.records)
        .push("bytes", built.bytes)
        .push("sha256", &built.sha256)
        .push("threads", built.threads)
        .push("generator", format!("{:#05x}", codec.generator()))
        .push_duration("wall", built.elapsed);
    report.print();
    Ok(ExitCode::SUCCESS)
}

fn cmd_stats(table: Option<PathBuf>) -> Result<ExitCode, CmdError> {
    let codec = GolayCodec::new();
    let table = table.or_else(|| std::env::var_os("FFD_TABLE").map(PathBuf::from));
    let start = Instant::now();
    let (census, source) = match &table {
        Some(path) => {
            let table = FfdTable::open(path).map_err(CmdError::io)?;
            let census = case_census_from_table(&codec, &table).map_err(CmdError::io)?;
            (census, format!("{}", path.display()))
        }
        None => (ffd::case_census(&codec), "recomputed".to_string()),
    };
    let mut report = RunReport::new("stats");
    report
        .push("source", source)
        .push("total", census.total())
        .push("count_six", census.six_labels)
        .push("count_recovered", census.recovered)
        .push("count_single", census.single)
        .push("percent_six", format!("{:.2}", census.percent_six()))
        .push("percent_recovered", format!("{:.2}", census.percent_recovered()))
        .push("percent_single", format!("{:.2}", census.percent_single()))
        .push("percent_sixteen_addresses", format!("{:.2}", census.percent_sixteen_addresses()))
        .push_duration("wall", start.elapsed());
    report.print();
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    samples: u64,
    exhaustive: bool,
    seed: u64,
    min_pass_rate: f64,
    quiet: bool,
) -> Result<ExitCode, CmdError> {
    if !(0.0..=100.0).contains(&min_pass_rate) {
        return Err(CmdError::Args(format!(
            "--min-pass-rate must be within 0..=100, got {min_pass_rate}"
        )));
    }
    let codec = GolayCodec::new();
    let start = Instant::now();

    // The worked pair: indices 1000 and 480 are at Hamming distance 2 and
    // must share an address.
    let fixed_center = Vector23::new(1000).unwrap();
    let fixed_neighbor = Vector23::new(480).unwrap();
    let fixed_pair_ok = build_entry(&codec, fixed_center)
        .record()
        .shares_address(&build_entry(&codec, fixed_neighbor).record());

    let (checked, failures) = if exhaustive {
        verify_exhaustive(&codec, quiet)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut centers: Vec<Vector23> = (0..samples)
            .map(|_| Vector23::new(rng.gen_range(0..Vector23::DOMAIN)).unwrap())
            .collect();
        if samples > 0 {
            centers.push(fixed_center);
        }
        let reports: Vec<ffd::NeighborhoodReport> = centers
            .par_iter()
            .map(|&center| ffd::verify_neighborhood(&codec, center))
            .collect();
        let checked: u64 = reports.iter().map(|r| r.checked as u64).sum();
        let mut failures = 0u64;
        for report in &reports {
            failures += report.failures.len() as u64;
            if !quiet {
                let center_record = build_entry(&codec, report.center).record();
                for &neighbor in &report.failures {
                    print_failure(&codec, report.center, &center_record, neighbor);
                }
            }
        }
        (checked, failures)
    };

    let pass_rate = if checked == 0 {
        100.0
    } else {
        100.0 * (checked - failures) as f64 / checked as f64
    };
    let ok = pass_rate >= min_pass_rate && fixed_pair_ok;

    let mut report = RunReport::new("verify");
    report
        .push("mode", if exhaustive { "exhaustive".into() } else { format!("samples={samples}") })
        .push("seed", seed)
        .push("pairs_checked", checked)
        .push("pairs_failed", failures)
        .push_f64("pass_rate_percent", pass_rate)
        .push_f64("min_pass_rate_percent", min_pass_rate)
        .push("pair_1000_480", if fixed_pair_ok { "pass" } else { "fail" })
        .push("verdict", if ok { "pass" } else { "fail" })
        .push_duration("wall", start.elapsed());
    report.print();

    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(EXIT_VERIFY) })
}

fn print_failure(codec: &GolayCodec, center: Vector23, center_record: &FfdRecord, neighbor: Vector23) {
    let neighbor_record = build_entry(codec, neighbor).record();
    let fmt = |record: &FfdRecord| {
        record
            .addresses()
            .map(|a| a.bits().to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    println!(
        "fail center={} neighbor={} center_addresses=[{}] neighbor_addresses=[{}]",
        center,
        neighbor,
        fmt(center_record),
        fmt(&neighbor_record)
    );
}

/// Exhaustive mode: materialize all 2^23 records (512 MiB), then check
/// every center against its 277 neighbors.
fn verify_exhaustive(codec: &GolayCodec, quiet: bool) -> (u64, u64) {
    let records: Vec<FfdRecord> = (0..Vector23::DOMAIN)
        .into_par_iter()
        .with_min_len(1 << 14)
        .map(|bits| build_entry(codec, Vector23::new(bits).unwrap()).record())
        .collect();

    let failures: u64 = (0..Vector23::DOMAIN)
        .into_par_iter()
        .with_min_len(1 << 12)
        .map(|bits| {
            let center = Vector23::new(bits).unwrap();
            let center_record = &records[bits as usize];
            let mut failed = 0u64;
            for neighbor in neighbors_within_2(center) {
                let neighbor_record = &records[neighbor.bits() as usize];
                if !center_record.shares_address(neighbor_record) {
                    failed += 1;
                    if !quiet {
                        print_failure(codec, center, center_record, neighbor);
                    }
                }
            }
            failed
        })
        .sum();

    (Vector23::DOMAIN as u64 * ffd::NEIGHBORHOOD_SIZE as u64, failures)
}

fn load_map(mapping: Option<&Path>) -> Result<LetterMap, CmdError> {
    match mapping {
        Some(path) => LetterMap::from_file(path).map_err(CmdError::io),
        None => Ok(LetterMap::default_map()),
    }
}

fn read_lines(path: &Path) -> Result<Vec<String>, CmdError> {
    let file = File::open(path).map_err(|e| CmdError::Io(format!("{}: {e}", path.display())))?;
    BufReader::new(file)
        .lines()
        .collect::<Result<Vec<_>, _>>()
        .map_err(CmdError::io)
}

fn cmd_index(words: &Path, out: &Path, mapping: Option<&Path>) -> Result<ExitCode, CmdError> {
    let codec = GolayCodec::new();
    let map = load_map(mapping)?;
    let start = Instant::now();
    let lines = read_lines(words)?;
    let store = PostingStore::build(&codec, &map, lines);
    store.save(out).map_err(CmdError::io)?;

    let mut report = RunReport::new("index");
    report
        .push("words_file", words.display())
        .push("out", out.display())
        .push("words", store.word_count())
        .push("postings", store.posting_count())
        .push_f64(
            "postings_per_word",
            store.posting_count() as f64 / store.word_count().max(1) as f64,
        )
        .push("generator", format!("{:#05x}", store.generator()))
        .push_duration("wall", start.elapsed());
    report.print();
    Ok(ExitCode::SUCCESS)
}

fn cmd_query(
    index: &Path,
    word: &str,
    max_hd: u32,
    limit: usize,
    mapping: Option<&Path>,
) -> Result<ExitCode, CmdError> {
    if max_hd > 2 {
        return Err(CmdError::Args(format!(
            "--max-hd must be within 0..=2, got {max_hd} (the fan-out guarantees nothing past 2)"
        )));
    }
    let codec = GolayCodec::new();
    let map = load_map(mapping)?;
    let store = PostingStore::load(index).map_err(CmdError::io)?;
    let start = Instant::now();
    let matches = fuzzy_lookup(&codec, &map, &store, word, max_hd, limit).map_err(CmdError::io)?;

    let mut report = RunReport::new("query");
    report
        .push("word", word)
        .push("max_hd", max_hd)
        .push("limit", limit)
        .push("results", matches.len())
        .push_duration("wall", start.elapsed());
    report.print();
    for m in &matches {
        println!("match={} distance={}", m.word, m.distance);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_bench(index: &Path, queries: &Path, mapping: Option<&Path>) -> Result<ExitCode, CmdError> {
    let codec = GolayCodec::new();
    let map = load_map(mapping)?;
    let store = PostingStore::load(index).map_err(CmdError::io)?;
    let queries: Vec<String> = read_lines(queries)?
        .into_iter()
        .map(|l| l.trim().to_string())
        .filter(|l| !l.is_empty())
        .collect();
    if queries.is_empty() {
        return Err(CmdError::Args("query file has no queries".into()));
    }

    let start = Instant::now();
    let mut fuzzy_hits = 0usize;
    for query in &queries {
        fuzzy_hits += fuzzy_lookup(&codec, &map, &store, query, 2, usize::MAX)
            .map_err(CmdError::io)?
            .len();
    }
    let fuzzy_time = start.elapsed();

    let start = Instant::now();
    let mut scan_hits = 0usize;
    for query in &queries {
        scan_hits += scan_lookup(&map, &store, query, 2, usize::MAX).len();
    }
    let scan_time = start.elapsed();

    let per_sec = |n: usize, secs: f64| if secs > 0.0 { n as f64 / secs } else { f64::INFINITY };
    let mut report = RunReport::new("bench");
    report
        .push("index", index.display())
        .push("queries", queries.len())
        .push("words", store.word_count())
        .push("ffd_hits", fuzzy_hits)
        .push("scan_hits", scan_hits)
        .push_f64("ffd_lookups_per_sec", per_sec(queries.len(), fuzzy_time.as_secs_f64()))
        .push_f64("scan_lookups_per_sec", per_sec(queries.len(), scan_time.as_secs_f64()))
        .push_f64("speedup", scan_time.as_secs_f64() / fuzzy_time.as_secs_f64().max(f64::MIN_POSITIVE))
        .push_duration("ffd_wall", fuzzy_time)
        .push_duration("scan_wall", scan_time);
    report.print();
    Ok(ExitCode::SUCCESS)
}
