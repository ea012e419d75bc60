//! `ghseq` command-line front end.

use std::env;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use num_rational::Ratio;

use ghseq::gh::theorem_sweep;
use ghseq::harness::{
    fixture_deviations, parse_offsets, parse_usize_list, write_ccf, write_table1, ConfigFile,
    ExperimentConfig, ExperimentKind, GH_PEAK_TARGET, TABLE1_CSV_HEADER,
};
use ghseq::lfsr::DEFAULT_POLY;
use ghseq::{
    b_sequence, classify_prime, composite_bound_sweep, format_ratio, pn_fragment,
    verify_period_theorem, BinaryPolynomial, Error, PeriodReport, Result, Seed,
};

#[derive(Parser, Debug)]
#[command(
    name = "ghseq",
    version,
    about = "GH sequences, LFSR PN sequences and CCF experiments"
)]
struct Cli {
    /// `key = value` file with defaults for any flag (flags win).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Period of the GH residues modulo M as a CSV row.
    Period(PeriodArgs),
    /// Checks the composite bound and prime period classes up to M.
    Sweep(SweepArgs),
    /// Prints the first N values of B(n).
    Bn(BnArgs),
    /// Prints a bipolar LFSR fragment.
    Pn(PnArgs),
    /// Writes the CCF series of one experiment.
    Ccf(CcfArgs),
    /// Writes the peak CCF comparison table.
    Table1(Table1Args),
}

#[derive(Args, Debug)]
struct PeriodArgs {
    #[arg(long)]
    modulus: Option<u64>,
    #[arg(long)]
    seed_a: Option<u64>,
    #[arg(long)]
    seed_b: Option<u64>,
    /// Print the CSV header line first.
    #[arg(long)]
    header: bool,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long)]
    max: Option<u64>,
}

#[derive(Args, Debug)]
struct BnArgs {
    #[arg(long)]
    count: Option<usize>,
}

#[derive(Args, Debug)]
struct PnArgs {
    /// Descending exponents, e.g. `45,4,3,1,0`.
    #[arg(long)]
    poly: Option<String>,
    /// Binary seed, first stage first. Defaults to `00..01`.
    #[arg(long)]
    seed: Option<String>,
    #[arg(long)]
    offset: Option<u64>,
    #[arg(long)]
    length: Option<usize>,
}

/// Flags shared by `ccf` and `table1`.
#[derive(Args, Debug)]
struct ExperimentArgs {
    /// Polynomial for pn-same and the first pn-diff stream.
    #[arg(long)]
    poly: Option<String>,
    /// Second pn-diff polynomial.
    #[arg(long)]
    poly2: Option<String>,
    /// Seed for the first LFSR stream.
    #[arg(long)]
    seed: Option<String>,
    /// Seed for the second pn-diff stream.
    #[arg(long)]
    seed2: Option<String>,
    /// Output directory. Falls back to the config file, then `GHSEQ_OUT`, then `.`.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write an SVG plot.
    #[arg(long)]
    svg: bool,
}

#[derive(Args, Debug)]
struct CcfArgs {
    #[arg(long)]
    kind: Option<String>,
    #[arg(long)]
    length: Option<usize>,
    /// Fragment offsets `A,B`.
    #[arg(long)]
    offsets: Option<String>,
    #[command(flatten)]
    common: ExperimentArgs,
}

#[derive(Args, Debug)]
struct Table1Args {
    #[arg(long)]
    lengths: Option<String>,
    /// B(n) window offsets `A,B` for every length.
    #[arg(long)]
    gh_offsets: Option<String>,
    /// LFSR window offsets `A,B` for every length.
    #[arg(long)]
    pn_offsets: Option<String>,
    #[command(flatten)]
    common: ExperimentArgs,
}

/// Flag value, else config-file value, else `None`.
struct Settings {
    file: ConfigFile,
}

impl Settings {
    fn get<T: FromStr>(&self, flag: Option<T>, key: &str) -> Result<Option<T>> {
        match flag {
            Some(v) => Ok(Some(v)),
            None => self.file.parse_value(key),
        }
    }

    fn require<T: FromStr>(&self, flag: Option<T>, key: &str) -> Result<T> {
        self.get(flag, key)?
            .ok_or_else(|| Error::InvalidConfig(format!("missing required --{key}")))
    }

    fn flag(&self, flag: bool, key: &str) -> Result<bool> {
        Ok(flag || self.file.flag(key)?)
    }

    fn out_dir(&self, flag: Option<PathBuf>) -> Result<PathBuf> {
        if let Some(dir) = self.get(flag, "out")? {
            return Ok(dir);
        }
        Ok(env::var_os("GHSEQ_OUT").map_or_else(|| PathBuf::from("."), PathBuf::from))
    }
}

fn ratio(r: Ratio<i64>) -> String {
    format_ratio(*r.numer(), *r.denom(), 6)
}

fn parse<T: FromStr<Err = Error>>(s: Option<String>) -> Result<Option<T>> {
    s.map(|s| s.parse()).transpose()
}

fn period(args: PeriodArgs, s: &Settings) -> Result<()> {
    let modulus = s.require(args.modulus, "modulus")?;
    let seed = (
        s.get(args.seed_a, "seed-a")?.unwrap_or(1),
        s.get(args.seed_b, "seed-b")?.unwrap_or(1),
    );
    let report = if classify_prime(modulus).is_ok() {
        verify_period_theorem(modulus, seed)?
    } else {
        PeriodReport::compute(modulus, seed)?
    };
    if s.flag(args.header, "header")? {
        println!("{}", ghseq::gh::PERIOD_CSV_HEADER);
    }
    println!("{}", report.to_csv_row());
    Ok(())
}

fn sweep(args: SweepArgs, s: &Settings) -> Result<()> {
    let max = s.require(args.max, "max")?;
    let reports = composite_bound_sweep(max)?;
    let tight: Vec<String> = reports
        .iter()
        .filter(|r| r.bound_tight)
        .map(|r| r.modulus.to_string())
        .collect();
    println!("moduli=2..{max} bound=ok tight={}", tight.join(","));
    let primes = theorem_sweep(max)?;
    println!("primes={} theorem=ok", primes.len());
    Ok(())
}

fn bn(args: BnArgs, s: &Settings) -> Result<()> {
    let count = s.require(args.count, "count")?;
    println!("{}", b_sequence(count)?);
    Ok(())
}

fn seed_or_default(seed: Option<String>, poly: &BinaryPolynomial) -> Result<Seed> {
    match seed {
        Some(text) => text.parse(),
        None => Seed::single_one(poly.degree()),
    }
}

fn pn(args: PnArgs, s: &Settings) -> Result<()> {
    let poly: BinaryPolynomial = s
        .get(args.poly, "poly")?
        .unwrap_or_else(|| DEFAULT_POLY.to_string())
        .parse()?;
    let seed = seed_or_default(s.get(args.seed, "seed")?, &poly)?;
    let offset = s.get(args.offset, "offset")?.unwrap_or(0);
    let length = s.require(args.length, "length")?;
    println!("{}", pn_fragment(&poly, &seed, offset, length)?);
    Ok(())
}

/// Applies the shared experiment flags to the default configuration.
fn experiment_config(args: ExperimentArgs, s: &Settings) -> Result<(ExperimentConfig, bool)> {
    let mut config = ExperimentConfig::default();
    if let Some(poly) = parse::<BinaryPolynomial>(s.get(args.poly, "poly")?)? {
        config.pn_same_poly = poly;
        config.pn_diff_polys.0 = poly;
    }
    if let Some(poly) = parse::<BinaryPolynomial>(s.get(args.poly2, "poly2")?)? {
        config.pn_diff_polys.1 = poly;
    }
    config.seeds = (
        parse(s.get(args.seed, "seed")?)?,
        parse(s.get(args.seed2, "seed2")?)?,
    );
    config.output_dir = s.out_dir(args.out)?;
    let svg = s.flag(args.svg, "svg")?;
    config.validate()?;
    Ok((config, svg))
}

fn offsets(flag: Option<String>, key: &str, s: &Settings) -> Result<Option<(u64, u64)>> {
    s.get(flag, key)?
        .map(|v: String| parse_offsets(&v))
        .transpose()
}

fn to_usize_pair((a, b): (u64, u64)) -> Result<(usize, usize)> {
    let conv = |v: u64| {
        usize::try_from(v).map_err(|_| Error::InvalidConfig(format!("offset {v} too large")))
    };
    Ok((conv(a)?, conv(b)?))
}

fn ccf_cmd(args: CcfArgs, s: &Settings) -> Result<()> {
    let kind: ExperimentKind = s.require(args.kind, "kind")?.parse()?;
    let length = s.require(args.length, "length")?;
    let offsets = offsets(args.offsets, "offsets", s)?;
    let (mut config, svg) = experiment_config(args.common, s)?;
    config.lengths = vec![length];
    match kind {
        ExperimentKind::Gh => config.gh_offsets = offsets.map(to_usize_pair).transpose()?,
        _ => config.pn_same_offsets = offsets,
    }
    let dir = config.output_dir.clone();
    let out = write_ccf(kind, length, &config, &dir, svg)?;
    println!("csv={}", out.csv.display());
    if let Some(path) = &out.svg {
        println!("svg={}", path.display());
    }
    println!("peak={}", ratio(out.peak_with_zero_lag));
    println!("peak_excluding_lag0={}", ratio(out.peak_without_zero_lag));
    println!("randomness={}", ratio(out.randomness));
    Ok(())
}

fn table1(args: Table1Args, s: &Settings) -> Result<()> {
    let lengths = s
        .get(args.lengths, "lengths")?
        .map(|v: String| parse_usize_list(&v))
        .transpose()?;
    let gh_offsets = offsets(args.gh_offsets, "gh-offsets", s)?;
    let pn_offsets = offsets(args.pn_offsets, "pn-offsets", s)?;
    let (mut config, svg) = experiment_config(args.common, s)?;
    if let Some(lengths) = lengths {
        config.lengths = lengths;
    }
    config.gh_offsets = gh_offsets.map(to_usize_pair).transpose()?;
    config.pn_same_offsets = pn_offsets;
    config.validate()?;
    let dir = config.output_dir.clone();
    let out = write_table1(&config, &dir, svg)?;
    println!("{TABLE1_CSV_HEADER}");
    for row in &out.rows {
        println!("{}", row.to_csv_row());
    }
    for dev in fixture_deviations(&out.rows) {
        println!(
            "# deviation length={} gh={:.6} pn_same={:.6} pn_diff={:.6}",
            dev.length, dev.gh, dev.pn_same, dev.pn_diff
        );
        if !dev.gh_in_target {
            println!(
                "# warning: gh_peak at length {} outside [{}, {}]",
                dev.length, GH_PEAK_TARGET.0, GH_PEAK_TARGET.1
            );
        }
    }
    for row in &out.rows {
        if row.length >= 50 && row.gh_peak >= row.pn_same_peak {
            println!(
                "# warning: gh_peak >= pn_same_peak at length {}",
                row.length
            );
        }
    }
    println!("# csv={}", out.csv.display());
    if let Some(path) = &out.svg {
        println!("# svg={}", path.display());
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    let file = match &cli.config {
        Some(path) => ConfigFile::load(Path::new(path))?,
        None => ConfigFile::default(),
    };
    let s = Settings { file };
    match cli.command {
        Command::Period(a) => period(a, &s),
        Command::Sweep(a) => sweep(a, &s),
        Command::Bn(a) => bn(a, &s),
        Command::Pn(a) => pn(a, &s),
        Command::Ccf(a) => ccf_cmd(a, &s),
        Command::Table1(a) => table1(a, &s),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_invariant_violation() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
