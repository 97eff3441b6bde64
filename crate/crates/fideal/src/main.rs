use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use fideal::{
    read_ideal_with_limit, run_census, write_catalog, CensusParams, CensusRow, Error, Ideal,
    TheoremReport, DEFAULT_AMBIENT_LIMIT,
};

/// Exit codes: 0 success or affirmative verdict, 1 negative verdict,
/// 2 usage or input error, 3 internal invariant violation.
const EXIT_OK: u8 = 0;
const EXIT_NEGATIVE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INVARIANT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "fideal",
    version,
    about = "Square-free monomial ideals: complexes, f-vectors, covers, and the f-ideal test"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify an ideal; exit 0 when it is an f-ideal, 1 when it is not
    Check(IdealArgs),
    /// Print the facet complex and the non-face complex
    Complexes(IdealArgs),
    /// Print the f-vectors of both complexes
    Fvector(IdealArgs),
    /// Print the minimal vertex covers with height and unmixedness
    Primes(IdealArgs),
    /// Enumerate pure ideals, cross-check the degree-2 conditions in bulk
    Census(CensusArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct IdealArgs {
    #[command(flatten)]
    source: InputSource,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Ambient size ceiling (hard cap 30)
    #[arg(long, default_value_t = DEFAULT_AMBIENT_LIMIT)]
    limit: u32,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputSource {
    /// The ideal as text (`"n=3; x1*x2, x2*x3"`) or JSON
    /// (`{"n":3,"generators":[[1,2],[2,3]]}`); `-` reads standard input
    ideal: Option<String>,
    /// Read the ideal from this file instead
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args)]
struct CensusArgs {
    /// Ambient vertex count
    #[arg(long)]
    n: u32,
    /// Generator degree
    #[arg(long)]
    degree: u32,
    /// Draw this many seeded random ideals instead of enumerating
    #[arg(long, requires = "seed")]
    sample: Option<u64>,
    /// RNG seed; required with --sample, no wall-clock fallback
    #[arg(long)]
    seed: Option<u64>,
    /// Cap the worker thread count
    #[arg(long)]
    threads: Option<usize>,
    /// Write a JSONL catalog of every classified ideal to this path
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Check(args) => cmd_check(&args),
        Command::Complexes(args) => cmd_complexes(&args),
        Command::Fvector(args) => cmd_fvector(&args),
        Command::Primes(args) => cmd_primes(&args),
        Command::Census(args) => cmd_census(&args),
    }
}

fn load_ideal(args: &IdealArgs) -> Result<Ideal, Error> {
    let text = match (&args.source.ideal, &args.source.file) {
        (Some(arg), None) if arg == "-" => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            buf
        }
        (Some(arg), None) => arg.clone(),
        (None, Some(path)) => std::fs::read_to_string(path).map_err(|e| Error::Io {
            path: Some(path.clone()),
            source: e,
        })?,
        // clap's arg group guarantees exactly one source
        _ => unreachable!("argument group enforces one input source"),
    };
    read_ideal_with_limit(&text, args.limit)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt_yes_no(b: Option<bool>) -> &'static str {
    b.map_or("n/a", yes_no)
}

fn print_json<T: Serialize>(doc: &T) -> Result<(), Error> {
    println!("{}", serde_json::to_string(doc)?);
    Ok(())
}

fn cmd_check(args: &IdealArgs) -> Result<u8, Error> {
    let ideal = load_ideal(args)?;
    let report = ideal.theorem_classify();
    match args.format {
        Format::Json => print_json(&report)?,
        Format::Text => print_report(&ideal, &report),
    }
    Ok(if report.f_ideal { EXIT_OK } else { EXIT_NEGATIVE })
}

fn print_report(ideal: &Ideal, report: &TheoremReport) {
    println!("ideal: {ideal}");
    println!("pure of degree 2: {}", yes_no(report.pure_degree2));
    println!("height: {}", report.height);
    println!("unmixed: {}", yes_no(report.unmixed));
    println!("(i)   unmixed with height n-2: {}", opt_yes_no(report.cond_i));
    println!("(ii)  C(n,2) even:             {}", opt_yes_no(report.cond_ii));
    println!("(iii) m = C(n,2)/2:            {}", opt_yes_no(report.cond_iii));
    println!("f-vector of facet complex:    {}", report.f_facet);
    println!("f-vector of non-face complex: {}", report.f_nonface);
    println!("f-ideal: {}", yes_no(report.f_ideal));
}

fn cmd_complexes(args: &IdealArgs) -> Result<u8, Error> {
    let ideal = load_ideal(args)?;
    let facet = ideal.facet_complex();
    let nonface = ideal.nonface_complex();
    match args.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                facet_complex: &'a fideal::SimplicialComplex,
                nonface_complex: &'a fideal::SimplicialComplex,
            }
            print_json(&Doc {
                facet_complex: &facet,
                nonface_complex: &nonface,
            })?;
        }
        Format::Text => {
            println!("facet complex:    {facet} on n={}", facet.n());
            println!("non-face complex: {nonface} on n={}", nonface.n());
        }
    }
    Ok(EXIT_OK)
}

fn cmd_fvector(args: &IdealArgs) -> Result<u8, Error> {
    let ideal = load_ideal(args)?;
    let pair = ideal.f_vectors();
    match args.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                f_facet: &'a fideal::FVector,
                f_nonface: &'a fideal::FVector,
            }
            print_json(&Doc {
                f_facet: &pair.facet,
                f_nonface: &pair.nonface,
            })?;
        }
        Format::Text => {
            println!("facet:    {}", pair.facet);
            println!("non-face: {}", pair.nonface);
        }
    }
    Ok(EXIT_OK)
}

fn cmd_primes(args: &IdealArgs) -> Result<u8, Error> {
    let ideal = load_ideal(args)?;
    let decomposition = ideal.minimal_vertex_covers();
    match args.format {
        Format::Json => print_json(&decomposition)?,
        Format::Text => {
            let covers: Vec<String> = decomposition
                .covers()
                .iter()
                .map(|c| c.to_string())
                .collect();
            println!("covers: {}", covers.join(" "));
            println!("height: {}", decomposition.height());
            println!("unmixed: {}", yes_no(decomposition.unmixed()));
        }
    }
    Ok(EXIT_OK)
}

fn cmd_census(args: &CensusArgs) -> Result<u8, Error> {
    let params = CensusParams {
        n: args.n,
        degree: args.degree,
        sample: args
            .sample
            .map(|count| fideal::Sampling {
                count,
                // clap enforces `--sample requires --seed`
                seed: args.seed.expect("seed is required with sample"),
            }),
        generator_count: None,
    };
    let run_it = || -> Result<CensusRow, Error> {
        match &args.out {
            Some(path) => write_catalog(&params, path),
            None => run_census(&params),
        }
    };
    let row = match args.threads {
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::Io {
                path: None,
                source: std::io::Error::other(e),
            })?
            .install(run_it),
        None => run_it(),
    }?;

    match args.format {
        Format::Json => print_json(&row)?,
        Format::Text => {
            let mode = match row.mode {
                fideal::CensusMode::Exhaustive => "exhaustive".to_string(),
                fideal::CensusMode::Sample => format!(
                    "sample={} seed={}",
                    row.sample.unwrap_or(0),
                    row.seed.unwrap_or(0)
                ),
            };
            println!("census n={} degree={} ({mode})", row.n, row.degree);
            println!("total pure ideals:  {}", row.total_pure);
            println!("f-ideals:           {}", row.f_ideal_count);
            println!("theorem agreements: {}", row.theorem_agreements);
            println!("mismatches:         {}", row.mismatches.len());
            for ideal in &row.mismatches {
                println!("mismatch: {ideal}");
            }
        }
    }
    Ok(if row.mismatches.is_empty() {
        EXIT_OK
    } else {
        EXIT_INVARIANT
    })
}
