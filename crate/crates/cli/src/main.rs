//! Command-line driver: reproducible analyses over code files with a strict
//! exit-code contract. Exit 0 when the checked property holds, 1 when it
//! fails (the witness goes to stdout in the canonical word format), 2 on
//! usage, parse, or precondition errors (reported on stderr).

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use perfcode::distrib::Rational64;
use sha2::{Digest, Sha256};

use perfcode::error::{Error, Verdict};
use perfcode::generators::{GeneratorOutput, GeneratorSpec, GroupStructure};
use perfcode::io::{
    format_binary_code, format_quaternary_code, read_binary_code, read_code, read_multiset_code,
    read_quaternary_code, write_partition, ParsedCode,
};
use perfcode::mds::{
    complete_latin, double_mds_seed_pipeline, from_latin, is_double_mds, is_mds, search_double_mds,
    split_double_mds, to_latin, CompletionOutcome, MdsSplit, SearchOptions,
};
use perfcode::partition::{
    check_distribution_relations, compute_parameters, derive_partition, four_part_parameters,
    ParametersOutcome,
};
use perfcode::perfect::{
    build_b, build_d, is_1perfect_with, is_twofold_1perfect_with, lengthen, split_twofold,
    suffix_flip_closed, SweepOptions, TwofoldSplit, TwofoldVariant,
};
use perfcode::splitgraph::{
    build_graph, component_stats, enumerate_splits, split_code, SplitResult,
};
use perfcode::sts::{check_embedded_example, verify_triple_system, TripleSystem};
use perfcode::DEFAULT_SPACE_BUDGET;

/// Analyses of optimal distance-3 codes: derived hypercube partitions,
/// splittability, lengthening to 1-perfect codes, twofold covers, triple
/// systems, and quaternary MDS machinery.
#[derive(Parser)]
#[command(name = "perfcode", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Worker threads for exhaustive sweeps (output is independent of this).
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Derive the four-part partition of a seed code and report parameters,
    /// part sizes, mean distance distributions, and the fixed-value checks.
    Analyze(AnalyzeArgs),
    /// Split a code into two distance-3 codes via its distance graph.
    Split(SplitArgs),
    /// Lengthen a seed code by two coordinates into 1-perfect codes.
    Lengthen(LengthenArgs),
    /// Build a twofold 1-perfect cover of the seed code.
    Twofold(TwofoldArgs),
    /// Verify that a code is 1-perfect (or a multiset twofold 1-perfect).
    Verify(VerifyArgs),
    /// Verify triple systems; `--paper-example` runs the embedded 15-point
    /// unsplittable twofold system.
    Sts(StsArgs),
    /// Quaternary MDS machinery.
    #[command(subcommand)]
    Mds(MdsCommand),
    /// Generate canonical inputs.
    Gen(GenArgs),
    /// Check the exact distance-distribution relations of a seed code.
    Relations(RelationsArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Seed code file with parameters (2^m−3, 2^(n−m), 3).
    code: PathBuf,
    /// Write the four parts as <PREFIX>.c1.code … <PREFIX>.c4.code.
    #[arg(long)]
    parts_prefix: Option<String>,
    /// Write the partition in the single-file format.
    #[arg(long)]
    write_partition: Option<PathBuf>,
}

#[derive(Args)]
struct SplitArgs {
    /// Code file to split (a plain code or a multiset).
    code: PathBuf,
    /// Comma-separated distance set of the conflict graph.
    #[arg(long, default_value = "1,2")]
    distances: String,
    /// Output prefix; parts go to <PREFIX>.partA and <PREFIX>.partB.
    #[arg(long)]
    out_prefix: Option<String>,
}

#[derive(Args)]
struct LengthenArgs {
    /// Seed code file.
    code: PathBuf,
    /// Enumerate lengthenings instead of producing a single code.
    #[arg(long)]
    all: bool,
    /// Cap on the number of enumerated codes.
    #[arg(long, default_value_t = 64)]
    cap: u64,
    /// Output path (single) or prefix (with --all).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TwofoldArgs {
    /// Seed code file.
    code: PathBuf,
    /// Which cover to build.
    #[arg(long, value_enum)]
    variant: VariantArg,
    /// Write the cover here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also split the cover into two 1-perfect halves.
    #[arg(long)]
    split: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    /// Doubled ends.
    B,
    /// Multiplicity-free, closed under flipping the last two coordinates.
    D,
}

#[derive(Args)]
struct VerifyArgs {
    /// Code file.
    code: PathBuf,
    /// Verify the twofold (exactly-twice) covering property instead.
    #[arg(long)]
    twofold: bool,
}

#[derive(Args)]
struct StsArgs {
    /// Block file (weight-3 words, multiplicities allowed).
    blocks: Option<PathBuf>,
    /// Run the embedded 15-point example instead of reading a file.
    #[arg(long)]
    paper_example: bool,
    /// Covering fold to verify (defaults to 2 when the file carries
    /// multiplicities, 1 otherwise).
    #[arg(long)]
    fold: Option<u32>,
    /// Attempt to split a twofold system into two systems.
    #[arg(long)]
    split: bool,
}

#[derive(Subcommand)]
enum MdsCommand {
    /// Check the exactly-once (or, with --double, exactly-twice) line
    /// property.
    Check(MdsCheckArgs),
    /// Split a double-MDS code into two MDS codes.
    Split(MdsSplitArgs),
    /// Convert to a latin hypercuboid; optionally complete it to a hypercube.
    Latin(MdsLatinArgs),
    /// Enumerate double-MDS codes and probe the splittability conjecture.
    Search(MdsSearchArgs),
    /// Run the seed-code pipeline driven by a double-MDS code.
    Pipeline(MdsPipelineArgs),
}

#[derive(Args)]
struct MdsCheckArgs {
    code: PathBuf,
    /// Expect two codewords per line instead of one.
    #[arg(long)]
    double: bool,
}

#[derive(Args)]
struct MdsSplitArgs {
    code: PathBuf,
    /// Output prefix; parts go to <PREFIX>.partA and <PREFIX>.partB.
    #[arg(long)]
    out_prefix: Option<String>,
}

#[derive(Args)]
struct MdsLatinArgs {
    code: PathBuf,
    /// Complete a two-layer cuboid to four layers.
    #[arg(long)]
    complete: bool,
}

#[derive(Args)]
struct MdsSearchArgs {
    /// Dimension of the quaternary cube (2 or 3).
    #[arg(long)]
    m: u32,
    /// Backtracking node budget.
    #[arg(long, default_value_t = 1_000_000)]
    budget: u64,
    /// Fix the first line's symbols to {0,1} (scale factor 6).
    #[arg(long)]
    reduce: bool,
    /// Append one JSON record per counterexample here.
    #[arg(long)]
    log: Option<PathBuf>,
    /// Write each counterexample as <PREFIX><i>.code.
    #[arg(long)]
    hit_prefix: Option<String>,
}

#[derive(Args)]
struct MdsPipelineArgs {
    /// Double-MDS driver code in Q^(2^(k−2)−1).
    code: PathBuf,
    #[arg(long)]
    k: u32,
    /// Write the produced seed code here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_enum)]
    kind: GenKind,
    /// Construction parameter m.
    #[arg(long)]
    m: u32,
    /// Seed for symbol permutations (permuted-mds, phelps).
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Symbol group for MDS constructions.
    #[arg(long, value_enum, default_value_t = StructureArg::Z4)]
    structure: StructureArg,
    /// Shortening coordinates "a,b" for ds-hamming.
    #[arg(long)]
    coords: Option<String>,
    /// Output file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Hamming,
    DsHamming,
    LinearMds,
    PermutedMds,
    Phelps,
}

#[derive(Clone, Copy, ValueEnum)]
enum StructureArg {
    Z4,
    Z2z2,
}

#[derive(Args)]
struct RelationsArgs {
    /// Seed code file.
    code: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let sweep = match sweep_options(cli.threads) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let outcome = match cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Split(args) => cmd_split(args),
        Command::Lengthen(args) => cmd_lengthen(args, &sweep),
        Command::Twofold(args) => cmd_twofold(args, &sweep),
        Command::Verify(args) => cmd_verify(args, &sweep),
        Command::Sts(args) => cmd_sts(args),
        Command::Mds(command) => cmd_mds(command, &sweep),
        Command::Gen(args) => cmd_gen(args),
        Command::Relations(args) => cmd_relations(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn sweep_options(threads: usize) -> Result<SweepOptions, Error> {
    let budget = match std::env::var("PERFCODE_BUDGET") {
        Ok(v) => v
            .parse::<u64>()
            .map_err(|_| Error::Usage(format!("PERFCODE_BUDGET must be an integer, got {v:?}")))?,
        Err(_) => DEFAULT_SPACE_BUDGET,
    };
    Ok(SweepOptions { budget, threads })
}

fn input_header(path: &Path, construction: &str) -> Result<Vec<String>, Error> {
    let bytes = std::fs::read(path)?;
    let hash = Sha256::digest(&bytes);
    let hex: String = hash.iter().take(8).fold(String::new(), |mut acc, b| {
        let _ = write!(acc, "{b:02x}");
        acc
    });
    Ok(vec![
        format!("perfcode {construction}"),
        format!("input {} sha256:{hex}", path.display()),
    ])
}

fn rational_str(r: &Rational64) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<u8, Error> {
    let code = read_binary_code(&args.code)?;
    let partition = derive_partition(&code)?;
    let n = code.length();
    println!(
        "code: n={n} M={} d={}",
        code.len(),
        code.code_distance().map_or(0, |d| d)
    );
    let sizes: Vec<String> = partition
        .parts()
        .iter()
        .map(|p| p.len().to_string())
        .collect();
    println!("parts: {}", sizes.join(" "));
    let mut ok = true;
    match compute_parameters(&partition) {
        ParametersOutcome::Equitable(matrix) => {
            println!("matrix:");
            print!("{matrix}");
            if matrix != four_part_parameters(n) {
                println!("MATRIX: UNEXPECTED");
                ok = false;
            }
        }
        ParametersOutcome::NotEquitable(w) => {
            println!("NOT EQUITABLE: {w}");
            ok = false;
        }
    }
    let report = check_distribution_relations(&code)?;
    for i in 0..4 {
        for j in 0..4 {
            let row: Vec<String> = report.bundle.means[i][j].iter().map(rational_str).collect();
            println!("abar {} {}: {}", i + 1, j + 1, row.join(" "));
        }
    }
    print!("{report}");
    ok &= report.all_ok();
    if let Some(prefix) = &args.parts_prefix {
        for (k, part) in partition.parts().iter().enumerate() {
            let path = format!("{prefix}.c{}.code", k + 1);
            let header = input_header(&args.code, &format!("analyze part {}", k + 1))?;
            perfcode::io::write_binary_code(part, &path, &header)?;
        }
    }
    if let Some(path) = &args.write_partition {
        let header = input_header(&args.code, "analyze partition")?;
        write_partition(&partition, path, &header)?;
    }
    println!("VERDICT: {}", if ok { "OK" } else { "FAIL" });
    Ok(if ok { 0 } else { 1 })
}

fn parse_distances(spec: &str) -> Result<Vec<u32>, Error> {
    spec.split(',')
        .map(|s| {
            s.trim()
                .parse::<u32>()
                .map_err(|_| Error::Usage(format!("invalid distance {s:?}")))
        })
        .collect()
}

fn cmd_split(args: SplitArgs) -> Result<u8, Error> {
    let distances = parse_distances(&args.distances)?;
    let parsed = read_code(&args.code)?;
    let default_distances = distances == [1, 2];
    let stats;
    let result = match &parsed {
        ParsedCode::Binary(code) if default_distances => {
            stats = component_stats(&build_graph(code, &distances)?);
            split_code(code)?
        }
        ParsedCode::Binary(code) => {
            let graph = build_graph(code, &distances)?;
            stats = component_stats(&graph);
            perfcode::splitgraph::bipartition(&graph)
        }
        ParsedCode::Multiset(code) => {
            let graph = build_graph(code, &distances)?;
            stats = component_stats(&graph);
            perfcode::splitgraph::bipartition(&graph)
        }
    };
    println!(
        "components {} min {} histogram {:?}",
        stats.nu, stats.min_size, stats.histogram
    );
    match result {
        SplitResult::Split(split) => {
            println!("nu {}", split.nu);
            println!("partA {}", split.part_a.len());
            println!("partB {}", split.part_b.len());
            let prefix = args
                .out_prefix
                .unwrap_or_else(|| args.code.display().to_string());
            let header = input_header(&args.code, "split")?;
            perfcode::io::write_binary_code(&split.part_a, format!("{prefix}.partA"), &header)?;
            perfcode::io::write_binary_code(&split.part_b, format!("{prefix}.partB"), &header)?;
            Ok(0)
        }
        SplitResult::OddCycle(cycle) => {
            print!("{cycle}");
            Ok(1)
        }
    }
}

fn cmd_lengthen(args: LengthenArgs, sweep: &SweepOptions) -> Result<u8, Error> {
    let seed = read_binary_code(&args.code)?;
    let partition = derive_partition(&seed)?;
    let c4 = partition.part(3);
    match split_code(c4)? {
        SplitResult::OddCycle(cycle) => {
            print!("{cycle}");
            Ok(1)
        }
        SplitResult::Split(split) => {
            let header = input_header(&args.code, "lengthen")?;
            if args.all {
                let enumeration = enumerate_splits(c4, args.cap)?;
                println!("nu {}", enumeration.nu());
                println!("total {}", enumeration.total());
                let prefix = args
                    .out
                    .map(|p| p.display().to_string())
                    .unwrap_or_else(|| format!("{}.lengthened", args.code.display()));
                let mut written = 0u64;
                for (i, (a, b)) in enumeration.enumerate() {
                    let code = lengthen(&seed, &a, &b)?;
                    if !is_1perfect_with(&code, sweep)?.holds() {
                        return Err(Error::Internal("lengthened code failed its sweep".into()));
                    }
                    perfcode::io::write_binary_code(&code, format!("{prefix}.{i}.code"), &header)?;
                    written += 1;
                }
                println!("written {written}");
                Ok(0)
            } else {
                let code = lengthen(&seed, &split.part_a, &split.part_b)?;
                if !is_1perfect_with(&code, sweep)?.holds() {
                    return Err(Error::Internal("lengthened code failed its sweep".into()));
                }
                println!("nu {}", split.nu);
                println!("length {} size {}", code.length(), code.len());
                let out = args.out.unwrap_or_else(|| {
                    PathBuf::from(format!("{}.lengthened.code", args.code.display()))
                });
                perfcode::io::write_binary_code(&code, &out, &header)?;
                Ok(0)
            }
        }
    }
}

fn cmd_twofold(args: TwofoldArgs, sweep: &SweepOptions) -> Result<u8, Error> {
    let seed = read_binary_code(&args.code)?;
    let variant = match args.variant {
        VariantArg::B => TwofoldVariant::B,
        VariantArg::D => TwofoldVariant::D,
    };
    let cover = match variant {
        TwofoldVariant::B => build_b(&seed)?,
        TwofoldVariant::D => build_d(&seed)?,
    };
    let mut ok = true;
    let twofold = is_twofold_1perfect_with(&cover, sweep)?;
    println!("TWOFOLD: {}", verdict_str(&twofold));
    ok &= twofold.holds();
    let antipodal = cover.is_antipodal();
    println!("ANTIPODAL: {}", verdict_str(&antipodal));
    ok &= antipodal.holds();
    let closed = suffix_flip_closed(&cover, matches!(variant, TwofoldVariant::D));
    println!("SUFFIX_FLIP_CLOSED: {}", verdict_str(&closed));
    ok &= closed.holds();
    if let Some(out) = &args.out {
        let header = input_header(&args.code, "twofold")?;
        perfcode::io::write_multiset_code(&cover, out, &header)?;
    }
    if args.split {
        match split_twofold(&cover, &seed, variant)? {
            TwofoldSplit::Split { half_a, half_b } => {
                println!("SPLITTABLE: YES ({} + {})", half_a.len(), half_b.len());
                if let Some(out) = &args.out {
                    let header = input_header(&args.code, "twofold split")?;
                    perfcode::io::write_binary_code(
                        &half_a,
                        format!("{}.partA", out.display()),
                        &header,
                    )?;
                    perfcode::io::write_binary_code(
                        &half_b,
                        format!("{}.partB", out.display()),
                        &header,
                    )?;
                }
            }
            TwofoldSplit::Unsplittable { cover_cycle, .. } => {
                println!("SPLITTABLE: NO");
                print!("{cover_cycle}");
                ok = false;
            }
        }
    }
    Ok(if ok { 0 } else { 1 })
}

fn verdict_str<W>(v: &Verdict<W>) -> &'static str {
    if v.holds() {
        "OK"
    } else {
        "FAIL"
    }
}

fn cmd_verify(args: VerifyArgs, sweep: &SweepOptions) -> Result<u8, Error> {
    if args.twofold {
        let code = read_multiset_code(&args.code)?;
        match is_twofold_1perfect_with(&code, sweep)? {
            Verdict::Holds => {
                println!("TWOFOLD_1PERFECT: OK");
                Ok(0)
            }
            Verdict::Fails(w) => {
                println!("TWOFOLD_1PERFECT: FAIL");
                println!("{w}");
                println!("{}", w.vertex);
                Ok(1)
            }
        }
    } else {
        let code = read_binary_code(&args.code)?;
        match is_1perfect_with(&code, sweep)? {
            Verdict::Holds => {
                println!("1PERFECT: OK");
                Ok(0)
            }
            Verdict::Fails(w) => {
                println!("1PERFECT: FAIL");
                println!("{w}");
                println!("{}", w.vertex);
                Ok(1)
            }
        }
    }
}

fn cmd_sts(args: StsArgs) -> Result<u8, Error> {
    if args.paper_example {
        let report = check_embedded_example()?;
        print!("{report}");
        return Ok(if report.all_expected() { 0 } else { 1 });
    }
    let Some(path) = &args.blocks else {
        return Err(Error::Usage(
            "provide a block file or --paper-example".into(),
        ));
    };
    let blocks = read_multiset_code(path)?;
    let fold = args.fold.unwrap_or_else(|| {
        if blocks.entries().iter().any(|&(_, m)| m > 1) {
            2
        } else {
            1
        }
    });
    let system = TripleSystem::new(blocks.length(), blocks, fold)?;
    let mut ok = true;
    match verify_triple_system(&system) {
        Verdict::Holds => println!(
            "TRIPLE_SYSTEM: OK (fold={} blocks={})",
            system.fold(),
            system.block_count()
        ),
        Verdict::Fails(w) => {
            println!("TRIPLE_SYSTEM: FAIL");
            println!("{w}");
            ok = false;
        }
    }
    if args.split {
        match perfcode::sts::split_triple_system(&system)? {
            SplitResult::Split(split) => {
                println!(
                    "SPLITTABLE: YES ({} + {})",
                    split.part_a.len(),
                    split.part_b.len()
                )
            }
            SplitResult::OddCycle(cycle) => {
                println!("SPLITTABLE: NO");
                print!("{cycle}");
                ok = false;
            }
        }
    }
    Ok(if ok { 0 } else { 1 })
}

fn cmd_mds(command: MdsCommand, sweep: &SweepOptions) -> Result<u8, Error> {
    match command {
        MdsCommand::Check(args) => {
            let code = read_quaternary_code(&args.code)?;
            let verdict = if args.double {
                is_double_mds(&code)
            } else {
                is_mds(&code)
            };
            let label = if args.double { "DOUBLE_MDS" } else { "MDS" };
            match verdict {
                Verdict::Holds => {
                    println!("{label}: OK");
                    Ok(0)
                }
                Verdict::Fails(w) => {
                    println!("{label}: FAIL");
                    println!("{w}");
                    Ok(1)
                }
            }
        }
        MdsCommand::Split(args) => {
            let code = read_quaternary_code(&args.code)?;
            match split_double_mds(&code)? {
                MdsSplit::Split(a, b) => {
                    println!("partA {}", a.len());
                    println!("partB {}", b.len());
                    let prefix = args
                        .out_prefix
                        .unwrap_or_else(|| args.code.display().to_string());
                    let header = input_header(&args.code, "mds split")?;
                    perfcode::io::write_quaternary_code(&a, format!("{prefix}.partA"), &header)?;
                    perfcode::io::write_quaternary_code(&b, format!("{prefix}.partB"), &header)?;
                    Ok(0)
                }
                MdsSplit::OddCycle(cycle) => {
                    println!("ODD_CYCLE {}", cycle.len());
                    for w in &cycle {
                        println!("{w}");
                    }
                    Ok(1)
                }
            }
        }
        MdsCommand::Latin(args) => {
            let code = read_quaternary_code(&args.code)?;
            let cuboid = to_latin(&code)?;
            println!(
                "latin cuboid: {} quaternary indices, {} layers",
                cuboid.index_length(),
                cuboid.layers()
            );
            if args.complete {
                match complete_latin(&cuboid)? {
                    CompletionOutcome::Completed(full) => {
                        println!("COMPLETABLE: YES");
                        let added = from_latin(&full)?;
                        println!("hypercube cells {}", added.len());
                        Ok(0)
                    }
                    CompletionOutcome::Incompletable(cycle) => {
                        println!("COMPLETABLE: NO");
                        println!("ODD_CYCLE {}", cycle.len());
                        for w in &cycle {
                            println!("{w}");
                        }
                        Ok(1)
                    }
                }
            } else {
                Ok(0)
            }
        }
        MdsCommand::Search(args) => {
            let outcome = search_double_mds(
                args.m,
                &SearchOptions {
                    budget: args.budget,
                    reduce: args.reduce,
                },
            )?;
            println!("nodes {}", outcome.stats.nodes);
            println!("enumerated {}", outcome.stats.enumerated);
            println!("scale {}", outcome.stats.scale);
            println!(
                "complete {}",
                if outcome.stats.complete {
                    "yes"
                } else {
                    "no (budget exhausted)"
                }
            );
            println!("hits {}", outcome.hits.len());
            if let Some(log) = &args.log {
                let mut lines = String::new();
                for hit in &outcome.hits {
                    let words: Vec<String> =
                        hit.code.words().iter().map(|w| w.to_string()).collect();
                    let record = serde_json::json!({
                        "m": args.m,
                        "words": words,
                        "splittable": hit.splittable,
                        "complement_splittable": hit.complement_splittable,
                    });
                    lines.push_str(&record.to_string());
                    lines.push('\n');
                }
                std::fs::write(log, lines)?;
            }
            if let Some(prefix) = &args.hit_prefix {
                for (i, hit) in outcome.hits.iter().enumerate() {
                    perfcode::io::write_quaternary_code(
                        &hit.code,
                        format!("{prefix}{i}.code"),
                        &[format!("perfcode mds search hit {i}")],
                    )?;
                }
            }
            Ok(if outcome.hits.is_empty() { 0 } else { 1 })
        }
        MdsCommand::Pipeline(args) => {
            let driver = read_quaternary_code(&args.code)?;
            let report = double_mds_seed_pipeline(&driver, args.k, sweep)?;
            println!("k {}", report.k);
            println!("driver splittable: {}", report.m1_splittable);
            println!("hypothesis met: {}", report.hypothesis_met);
            println!(
                "seed: n={} M={} d={}",
                report.seed.length(),
                report.seed.len(),
                report.seed_distance.map_or(0, |d| d)
            );
            println!(
                "seed size expected {}: {}",
                report.seed_size_expected, report.seed_size_ok
            );
            println!("seed embeds in cover: {}", report.seed_embeds_in_cover);
            println!("cover twofold: {}", report.cover_twofold);
            println!(
                "cover closed under suffix flip: {}",
                report.cover_closed_under_suffix_flip
            );
            print!("{}", report.equivalence);
            for note in &report.notes {
                println!("note: {note}");
            }
            if let Some(out) = &args.out {
                let header = input_header(&args.code, "mds pipeline seed")?;
                perfcode::io::write_binary_code(&report.seed, out, &header)?;
            }
            let ok = report.seed_size_ok
                && report.seed_distance.map_or(false, |d| d >= 3)
                && report.seed_embeds_in_cover
                && report.cover_twofold
                && report.cover_closed_under_suffix_flip;
            Ok(if ok { 0 } else { 1 })
        }
    }
}

fn cmd_gen(args: GenArgs) -> Result<u8, Error> {
    let structure = match args.structure {
        StructureArg::Z4 => GroupStructure::Z4,
        StructureArg::Z2z2 => GroupStructure::Z2xZ2,
    };
    let spec = match args.kind {
        GenKind::Hamming => GeneratorSpec::Hamming { m: args.m },
        GenKind::DsHamming => {
            let coords = match &args.coords {
                None => None,
                Some(spec) => {
                    let parts = parse_distances(spec)?;
                    if parts.len() != 2 {
                        return Err(Error::Usage("--coords wants two coordinates".into()));
                    }
                    Some((parts[0], parts[1]))
                }
            };
            GeneratorSpec::DoubleShortenedHamming { m: args.m, coords }
        }
        GenKind::LinearMds => GeneratorSpec::LinearMds {
            m: args.m,
            structure,
        },
        GenKind::PermutedMds => GeneratorSpec::PermutedMds {
            m: args.m,
            structure,
            seed: args.seed,
        },
        GenKind::Phelps => GeneratorSpec::PhelpsPerfect {
            m: args.m,
            seed: args.seed,
        },
    };
    let header = vec![format!("perfcode gen {}", spec.describe())];
    let text = match spec.build()? {
        GeneratorOutput::Binary(code) => format_binary_code(&code, &header),
        GeneratorOutput::Quaternary(code) => format_quaternary_code(&code, &header),
    };
    match &args.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(0)
}

fn cmd_relations(args: RelationsArgs) -> Result<u8, Error> {
    let code = read_binary_code(&args.code)?;
    let report = check_distribution_relations(&code)?;
    print!("{report}");
    println!("VERDICT: {}", if report.all_ok() { "OK" } else { "FAIL" });
    Ok(if report.all_ok() { 0 } else { 1 })
}
