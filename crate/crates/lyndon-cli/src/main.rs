use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use lyndon::{cfl_duval, cfl_duval_lcp, cfl_rle, cfl_skip, lr_to_cfl, Factorization, RleString};
use lyndon_cli::{bench, gen, io as cli_io, verify};
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "lyndon",
    version,
    about = "Lyndon factorization toolkit: four engines, an RLE codec, random text, verification, and benchmarks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Engine {
    /// Classic linear-time scan.
    Duval,
    /// Scan driven by longest-common-prefix jumps.
    Lcp,
    /// Character-skipping engine for words with runs of the smallest symbol.
    Skip,
    /// Run-length engine; works on the encoding, linear in the run count.
    Rle,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Default)]
enum Format {
    /// Raw bytes.
    #[default]
    Raw,
    /// FASTA: header lines dropped, sequence whitespace stripped.
    Fasta,
    /// RLE text format: one "SYMBOL LENGTH" pair per line.
    Rle,
}

#[derive(Subcommand)]
enum Command {
    /// Factorize a word and print one "start<TAB>end" line per factor.
    Factorize {
        /// Input file; stdin when omitted or "-".
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Engine::Duval)]
        engine: Engine,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Also print each factor's bytes after the interval.
        #[arg(long)]
        show_factors: bool,
    },
    /// Run-length encode raw input into the RLE text format.
    Encode {
        input: Option<PathBuf>,
    },
    /// Decode the RLE text format back to raw bytes.
    Decode {
        input: Option<PathBuf>,
    },
    /// Emit a deterministic random word.
    Gen {
        #[arg(long)]
        length: usize,
        /// Alphabet size, 2 to 256; symbols start at byte 'a' and wrap.
        #[arg(long)]
        sigma: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run every engine on the input and check the outputs are identical.
    Verify {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Time the baseline and skipping engines on random texts, or the RLE
    /// engine under run-length scaling.
    Bench {
        /// Comma-separated alphabet sizes.
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "2,3,4,5,6,8,10,12,15,20,25,30"
        )]
        sigma: Vec<u32>,
        #[arg(long, default_value_t = 5_000_000)]
        length: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Write machine-readable results (sigma,engine,length,median_seconds).
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Fix the run count and scale run lengths instead of timing on
        /// random texts.
        #[arg(long)]
        rle_scaling: bool,
        /// Run count for --rle-scaling.
        #[arg(long, default_value_t = 10_000)]
        rho: usize,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(2);
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Factorize {
            input,
            engine,
            format,
            show_factors,
        } => {
            let (word, rle) = load_word(input.as_deref(), format)?;
            let (factors, word) = factorize(engine, word, rle);
            print_factors(&factors, &word, show_factors)?;
            Ok(0)
        }
        Command::Encode { input } => {
            let bytes = cli_io::read_input(input.as_deref())?;
            let out = cli_io::format_rle_text(&RleString::encode(&bytes));
            std::io::stdout().write_all(out.as_bytes())?;
            Ok(0)
        }
        Command::Decode { input } => {
            let bytes = cli_io::read_input(input.as_deref())?;
            let rle = cli_io::parse_rle_text(&bytes)?;
            std::io::stdout().write_all(&rle.decode())?;
            Ok(0)
        }
        Command::Gen {
            length,
            sigma,
            seed,
        } => {
            if !(2..=256).contains(&sigma) {
                bail!("sigma must be between 2 and 256, got {sigma}");
            }
            std::io::stdout().write_all(&gen::gen_word(length, sigma, seed))?;
            Ok(0)
        }
        Command::Verify { input, format } => {
            let (word, rle) = load_word(input.as_deref(), format)?;
            let word = match (word, rle) {
                (Some(w), _) => w,
                (None, Some(r)) => r.decode(),
                (None, None) => unreachable!(),
            };
            match verify::verify_word(&word) {
                Ok(factors) => {
                    println!("OK (4 engines agree, {factors} factors)");
                    Ok(0)
                }
                Err(divergence) => {
                    println!("{divergence}");
                    Ok(1)
                }
            }
        }
        Command::Bench {
            sigma,
            length,
            seed,
            csv,
            rle_scaling,
            rho,
        } => {
            let reps = bench::repetitions();
            if rle_scaling {
                run_rle_scaling_bench(rho, seed, reps);
                return Ok(0);
            }
            println!("length {length}, median of {reps} runs");
            println!("{:>6} {:>12} {:>12} {:>9}", "sigma", "duval_s", "skip_s", "speedup");
            let rows = bench::measure_speedups(&sigma, length, seed, reps);
            for row in &rows {
                println!(
                    "{:>6} {:>12.6} {:>12.6} {:>9.2}",
                    row.sigma,
                    row.duval_secs,
                    row.skip_secs,
                    row.speedup()
                );
            }
            if let Some(path) = csv {
                std::fs::write(&path, bench::speedup_csv(&rows))
                    .with_context(|| format!("cannot write {}", path.display()))?;
            }
            Ok(0)
        }
    }
}

/// Loads the input word according to `format`. Returns the decoded word,
/// plus the parsed RLE string when the input was already run-length
/// encoded (so the RLE engine can skip re-encoding).
fn load_word(
    input: Option<&std::path::Path>,
    format: Format,
) -> Result<(Option<Vec<u8>>, Option<RleString>)> {
    let bytes = cli_io::read_input(input)?;
    match format {
        Format::Raw => Ok((Some(bytes), None)),
        Format::Fasta => Ok((Some(cli_io::parse_fasta(&bytes)?), None)),
        Format::Rle => Ok((None, Some(cli_io::parse_rle_text(&bytes)?))),
    }
}

fn factorize(
    engine: Engine,
    word: Option<Vec<u8>>,
    rle: Option<RleString>,
) -> (Factorization, Vec<u8>) {
    match engine {
        Engine::Rle => {
            let rle = rle.unwrap_or_else(|| RleString::encode(word.as_deref().unwrap()));
            let factors = lr_to_cfl(&cfl_rle(&rle), &rle);
            let word = word.unwrap_or_else(|| rle.decode());
            (factors, word)
        }
        _ => {
            let word = word.unwrap_or_else(|| rle.unwrap().decode());
            let factors = match engine {
                Engine::Duval => cfl_duval(&word),
                Engine::Lcp => cfl_duval_lcp(&word),
                Engine::Skip => cfl_skip(&word),
                Engine::Rle => unreachable!(),
            };
            (factors, word)
        }
    }
}

fn print_factors(factors: &Factorization, word: &[u8], show_factors: bool) -> Result<()> {
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    for f in factors {
        write!(out, "{}\t{}", f.start, f.end)?;
        if show_factors {
            out.write_all(b"\t")?;
            out.write_all(f.bytes(word))?;
        }
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

fn run_rle_scaling_bench(rho: usize, seed: u64, reps: usize) {
    let scale = 10;
    // repeat the factorization inside each timed run so that small run
    // counts are not lost in clock granularity
    let inner_loops = (2_000_000 / rho.max(1)).max(1);
    let report = bench::measure_rle_scaling(rho, 4, 10, scale, seed, reps, inner_loops);
    println!(
        "rle scaling: rho {}, lengths x{}, median of {reps} runs ({} factorizations each)",
        report.rho, report.scale, inner_loops
    );
    println!(
        "{:>20} {:>14} {:>14} {:>12}",
        "decoded_length", "seconds", "iterations", ""
    );
    println!(
        "{:>20} {:>14.6} {:>14} {:>12}",
        report.base_decoded_len, report.base_secs, report.base_iterations, "base"
    );
    println!(
        "{:>20} {:>14.6} {:>14} {:>12}",
        report.scaled_decoded_len, report.scaled_secs, report.scaled_iterations, "scaled"
    );
    println!("time ratio scaled/base: {:.3}", report.time_ratio());
}
