use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use selfpower::counts::{self, Kind};
use selfpower::oracle::{self, OracleOptions, RangeSpec, DEFAULT_BUDGET};
use selfpower::verify::{self, CountReport, GridPoint};
use selfpower::{Error, ModulusContext, PolySpec};

mod output;

use output::{CountOutput, Format, SweepOutput};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

/// Fixed points and two-cycles of x -> x^(x^n) modulo prime powers.
#[derive(Parser, Debug)]
#[command(name = "selfpower-cli", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,

    /// Maximum number of congruence evaluations the oracle may perform.
    #[arg(long, global = true, env = "SELFPOWER_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    /// Worker threads for enumeration and sweeps (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Seed for sampled property checks (`sweep --self-test`).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Report elapsed times as 0 so that output is reproducible.
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Args, Debug, Clone, Copy)]
struct Instance {
    /// The prime p.
    #[arg(long)]
    p: u64,
    /// The exponent e of the modulus p^e.
    #[arg(long)]
    e: u32,
    /// The exponent n in x^(x^n).
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
}

impl Instance {
    fn context(&self) -> Result<ModulusContext, Error> {
        ModulusContext::new(self.p, self.e)
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum KindArg {
    Fixed,
    TwoCycles,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum KindsArg {
    Fixed,
    TwoCycles,
    All,
}

impl KindsArg {
    fn kinds(self) -> Vec<Kind> {
        match self {
            KindsArg::Fixed => vec![Kind::Fixed],
            KindsArg::TwoCycles => vec![Kind::TwoCycle],
            KindsArg::All => vec![Kind::Fixed, Kind::TwoCycle],
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum RangeArg {
    Full,
    Reduced,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closed-form fixed-point count.
    CountFixed {
        #[command(flatten)]
        instance: Instance,
        /// CSV: one row per class instead of the summary row.
        #[arg(long)]
        per_class: bool,
    },
    /// Closed-form two-cycle count.
    CountTwoCycles {
        #[command(flatten)]
        instance: Instance,
        /// CSV: one row per class instead of the summary row.
        #[arg(long)]
        per_class: bool,
    },
    /// List solutions by brute force.
    Enumerate {
        #[arg(value_enum)]
        kind: KindArg,
        #[command(flatten)]
        instance: Instance,
        #[arg(long, value_enum, default_value_t = RangeArg::Full)]
        range: RangeArg,
        /// Print at most this many solutions.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Compare the closed form with enumeration.
    Verify {
        #[arg(value_enum)]
        kind: KindsArg,
        #[command(flatten)]
        instance: Instance,
        /// CSV: one row per class instead of one per report.
        #[arg(long)]
        per_class: bool,
    },
    /// Verify every point of a grid of primes, exponents and n.
    Sweep {
        #[arg(long)]
        p_max: u64,
        #[arg(long)]
        e_max: u32,
        #[arg(long)]
        n_max: u32,
        #[arg(long, value_enum, default_value_t = KindsArg::All)]
        kinds: KindsArg,
        /// Also run the identity checks and sampled p-adic properties.
        #[arg(long)]
        self_test: bool,
        /// Number of sampled p-adic cases in self-test mode.
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        /// CSV: one row per class instead of one per report.
        #[arg(long)]
        per_class: bool,
    },
    /// Fraction of solutions that lie in {1, ..., p^e}.
    Heuristic {
        #[command(flatten)]
        instance: Instance,
        #[arg(long, value_enum, default_value_t = KindsArg::Fixed)]
        kind: KindsArg,
    },
}

/// A failure that ends the run with a specific exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::BudgetExceeded { .. } => EXIT_BUDGET,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(err: io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: err.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = run(&cli, &mut out).and_then(|code| {
        out.flush()?;
        Ok(code)
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: &Cli, out: &mut impl Write) -> Result<u8, Failure> {
    let opts = OracleOptions {
        budget: cli.budget,
        workers: cli.workers,
    };
    let timing = |r: CountReport| if cli.no_timing { r.without_timing() } else { r };
    match &cli.command {
        Command::CountFixed {
            instance,
            per_class,
        } => {
            let ctx = instance.context()?;
            let breakdown = counts::fp_count_total(&ctx, instance.n)?;
            let result = CountOutput::new(Kind::Fixed, &ctx, instance.n, &breakdown);
            output::write_count(out, cli.format, &result, *per_class)?;
            Ok(0)
        }
        Command::CountTwoCycles {
            instance,
            per_class,
        } => {
            let ctx = instance.context()?;
            let breakdown = counts::tc_count_total(&ctx, instance.n)?;
            let result = CountOutput::new(Kind::TwoCycle, &ctx, instance.n, &breakdown);
            output::write_count(out, cli.format, &result, *per_class)?;
            Ok(0)
        }
        Command::Enumerate {
            kind,
            instance,
            range,
            limit,
        } => {
            let ctx = instance.context()?;
            let g = PolySpec::power(instance.n);
            let range = match range {
                RangeArg::Full => RangeSpec::Full,
                RangeArg::Reduced => RangeSpec::Reduced,
            };
            let mut records = match kind {
                KindArg::Fixed => oracle::enumerate_fixed_points(&ctx, &g, range, &opts)?,
                KindArg::TwoCycles => oracle::enumerate_two_cycles(&ctx, &g, range, &opts)?,
            };
            if let Some(k) = limit {
                records.truncate(*k);
            }
            output::write_records(out, cli.format, &records)?;
            Ok(0)
        }
        Command::Verify {
            kind,
            instance,
            per_class,
        } => {
            let ctx = instance.context()?;
            let reports = kind
                .kinds()
                .into_iter()
                .map(|k| verify::verify(k, &ctx, instance.n, &opts).map(timing))
                .collect::<Result<Vec<_>, _>>()?;
            output::write_reports(out, cli.format, &reports, *per_class)?;
            Ok(if reports.iter().all(|r| r.matched) {
                0
            } else {
                EXIT_MISMATCH
            })
        }
        Command::Sweep {
            p_max,
            e_max,
            n_max,
            kinds,
            self_test,
            samples,
            per_class,
        } => {
            let points: Vec<GridPoint> = verify::grid(*p_max, *e_max, *n_max);
            let progress = |r: &CountReport| {
                if cli.format == Format::Human {
                    eprintln!("done {} p={} e={} n={}", r.kind, r.p, r.e, r.n);
                }
            };
            let reports: Vec<CountReport> =
                verify::sweep(&points, &kinds.kinds(), &opts, Some(&progress))
                    .into_iter()
                    .map(timing)
                    .collect();
            let self_test = if *self_test {
                let identities = verify::self_test(*p_max, *n_max)?;
                let properties =
                    opts.install(|| verify::padic_properties_sampled(*samples, 8, cli.seed));
                Some((identities, properties))
            } else {
                None
            };
            let result = SweepOutput::new(reports, self_test);
            output::write_sweep(out, cli.format, &result, *per_class)?;
            let budget_hit = result
                .reports
                .iter()
                .any(|r| r.error.as_deref().is_some_and(|e| e.contains("budget")));
            Ok(if budget_hit {
                EXIT_BUDGET
            } else if result.all_passed() {
                0
            } else {
                EXIT_MISMATCH
            })
        }
        Command::Heuristic { instance, kind } => {
            let ctx = instance.context()?;
            let reports = kind
                .kinds()
                .into_iter()
                .map(|k| verify::heuristic_ratio(&ctx, instance.n, k, &opts))
                .collect::<Result<Vec<_>, _>>()?;
            output::write_ratios(out, cli.format, &reports)?;
            Ok(0)
        }
    }
}
