//! `zpr`: Gröbner bases, p-bases, PLM checks and shortest recurrences over Z/p^r.
//!
//! Exit codes: 0 success, 2 invalid input, 3 completion limit exceeded,
//! 4 enumeration too large, 5 property check failed, 1 anything else.

use std::fmt::Write as _;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use zpr_core::doc::{self, CheckDocument, CriterionDoc, GbDocument, LrrDocument, PBasisDocument};
use zpr_core::groebner::{
    buchberger_with, check_plm, criterion_witness, reduce_step, GroebnerConfig, PlmReport,
    ReduceStep, DEFAULT_MAX_REDUCTIONS,
};
use zpr_core::lrr::{enumerate_shortest, shortest_lrr_with, Sequence, DEFAULT_ENUMERATION_CAP};
use zpr_core::pbasis::{build_p_basis, check_p_plm, order_differences};
use zpr_core::text;
use zpr_core::{Error, GroebnerBasis, MonomialOrder, PBasis, PolyVec, RingParams};

const EXIT_INTERNAL: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_CAP: u8 = 3;
const EXIT_ENUMERATION: u8 = 4;
const EXIT_PROPERTY: u8 = 5;

#[derive(Parser, Debug)]
#[command(name = "zpr", version, about = "Exact module computations over Z/p^r")]
struct Cli {
    #[command(flatten)]
    ring: RingArgs,

    /// Monomial order.
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Top)]
    order: OrderArg,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,

    /// Maximum number of completion pairs processed.
    #[arg(long, global = true, env = "ZPR_MAX_REDUCTIONS", default_value_t = DEFAULT_MAX_REDUCTIONS)]
    max_reductions: u64,

    /// Maximum number of candidates an enumeration may visit.
    #[arg(long, global = true, env = "ZPR_ENUM_CAP", default_value_t = DEFAULT_ENUMERATION_CAP)]
    enum_cap: u128,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct RingArgs {
    /// Ring size p^r, e.g. 9 or 3^2.
    #[arg(long, global = true, conflicts_with_all = ["p", "r"])]
    ring: Option<String>,

    /// Prime p (with --r).
    #[arg(long, global = true, requires = "r")]
    p: Option<u64>,

    /// Exponent r (with --p).
    #[arg(long, global = true, requires = "p")]
    r: Option<u32>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderArg {
    Top,
    Pot,
}

impl From<OrderArg> for MonomialOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Top => MonomialOrder::Top,
            OrderArg::Pot => MonomialOrder::Pot,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimal Gröbner basis of the rows of a matrix file.
    Gb {
        /// Matrix file, one vector per line; `-` reads stdin.
        file: String,
    },
    /// Minimal Gröbner p-basis of the rows of a matrix file.
    Pbasis { file: String },
    /// Shortest linear recurrence relations of a sequence.
    Lrr {
        /// Comma-separated values, first term first.
        #[arg(long, allow_hyphen_values = true)]
        seq: String,
        /// Also list non-monic solutions (every unit leading coefficient).
        #[arg(long)]
        all: bool,
    },
    /// Checks that the rows form a minimal Gröbner basis with the (p-)PLM property.
    Check {
        file: String,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

/// A failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotPrime(_)
            | Error::PrimeTooLarge(_)
            | Error::ZeroExponent
            | Error::ModulusOverflow { .. }
            | Error::NotPrimePower(_)
            | Error::Parse(_)
            | Error::DimensionMismatch { .. }
            | Error::MixedRings
            | Error::NoGenerators
            | Error::ZeroVector => EXIT_INPUT,
            Error::IterationLimitExceeded(_) => EXIT_CAP,
            Error::EnumerationTooLarge { .. } => EXIT_ENUMERATION,
            _ => EXIT_INTERNAL,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_failure(message: String) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message,
    }
}

fn parse_ring(args: &RingArgs) -> Result<RingParams, Failure> {
    match (&args.ring, args.p, args.r) {
        (Some(s), _, _) => {
            let s = s.trim();
            if let Some((p, r)) = s.split_once('^') {
                let p = p
                    .trim()
                    .parse()
                    .map_err(|_| input_failure(format!("invalid ring `{s}`")))?;
                let r = r
                    .trim()
                    .parse()
                    .map_err(|_| input_failure(format!("invalid ring `{s}`")))?;
                Ok(RingParams::new(p, r)?)
            } else {
                let n = s
                    .parse()
                    .map_err(|_| input_failure(format!("invalid ring `{s}`")))?;
                Ok(RingParams::from_prime_power(n)?)
            }
        }
        (None, Some(p), Some(r)) => Ok(RingParams::new(p, r)?),
        _ => Err(input_failure(
            "a ring is required: --ring N or --p P --r R".into(),
        )),
    }
}

fn read_input(file: &str) -> Result<String, Failure> {
    let mut s = String::new();
    if file == "-" {
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| input_failure(format!("reading stdin: {e}")))?;
    } else {
        s = std::fs::read_to_string(file).map_err(|e| input_failure(format!("{file}: {e}")))?;
    }
    Ok(s)
}

fn read_matrix(file: &str, ring: RingParams) -> Result<Vec<PolyVec>, Failure> {
    Ok(text::parse_matrix(ring, &read_input(file)?)?)
}

fn short_ring(ring: RingParams) -> String {
    format!("Z_{}", ring.modulus())
}

fn render_gb(gb: &GroebnerBasis) -> String {
    let mut out = String::new();
    let betas = order_differences(gb);
    let _ = writeln!(
        out,
        "# minimal Groebner basis over {} order={} m={} betas={}",
        short_ring(gb.ring()),
        gb.order(),
        gb.len(),
        betas
    );
    out.push_str(&text::format_matrix(gb.elements()));
    let _ = writeln!(out, "#");
    let _ = writeln!(
        out,
        "# {:>3}  {:<12} {:>6} {:>5} {:>5} {:>5}",
        "i", "lm", "lc", "lpos", "deg", "ord"
    );
    for (i, l) in gb.leading().iter().enumerate() {
        let _ = writeln!(
            out,
            "# {:>3}  {:<12} {:>6} {:>5} {:>5} {:>5}",
            i + 1,
            l.lm.to_string(),
            l.lc.value(),
            l.lpos(),
            l.deg(),
            l.ord
        );
    }
    out
}

fn render_pbasis(pb: &PBasis) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# betas={} N={} order={} ring={}",
        pb.betas(),
        pb.p_dim(),
        pb.order(),
        short_ring(pb.ring())
    );
    let rows: Vec<String> = pb
        .vectors()
        .iter()
        .map(|v| text::format_vector(&v.vector))
        .collect();
    let width = rows.iter().map(String::len).max().unwrap_or(0);
    for (row, v) in rows.iter().zip(pb.vectors()) {
        let _ = writeln!(out, "{row:<width$}  # {}", v.provenance(pb.ring()));
    }
    out
}

fn cmd_gb(cli: &Cli, ring: RingParams, file: &str) -> Result<String, Failure> {
    let rows = read_matrix(file, ring)?;
    let config = GroebnerConfig {
        max_reductions: cli.max_reductions,
    };
    let gb = buchberger_with(&rows, cli.order.into(), &config)?;
    Ok(match cli.format {
        Format::Human => render_gb(&gb),
        Format::Json => doc::to_json(&GbDocument::from_basis(&gb)),
    })
}

fn cmd_pbasis(cli: &Cli, ring: RingParams, file: &str) -> Result<String, Failure> {
    let rows = read_matrix(file, ring)?;
    let config = GroebnerConfig {
        max_reductions: cli.max_reductions,
    };
    let gb = buchberger_with(&rows, cli.order.into(), &config)?;
    let pb = build_p_basis(&gb)?;
    Ok(match cli.format {
        Format::Human => render_pbasis(&pb),
        Format::Json => doc::to_json(&PBasisDocument::from_p_basis(&pb)),
    })
}

/// Returns the report and, when enumeration failed, the failure to exit with.
fn cmd_lrr(
    cli: &Cli,
    ring: RingParams,
    seq: &str,
    all: bool,
) -> Result<(String, Option<Failure>), Failure> {
    let sequence = Sequence::parse(ring, seq)?;
    let config = GroebnerConfig {
        max_reductions: cli.max_reductions,
    };
    let sol = shortest_lrr_with(&sequence, &config)?;
    let monic_only = !all;
    let enumerated = enumerate_shortest(&sol, monic_only, cli.enum_cap);

    let mut document = LrrDocument::from_solution(sequence.values(), &sol);
    document.monic_only = monic_only;
    let mut failure = None;
    match &enumerated {
        Ok(list) => document.solutions = Some(list.iter().map(|f| f.to_string()).collect()),
        Err(e) => {
            document.enumeration_error = Some(e.to_string());
            failure = Some(Failure::from(e.clone()));
        }
    }
    let out = match cli.format {
        Format::Json => doc::to_json(&document),
        Format::Human => {
            let mut out = String::new();
            let _ = writeln!(out, "sequence: {} over {}", sequence, short_ring(ring));
            let _ = writeln!(out, "length: {}", sol.length());
            let _ = writeln!(out, "shortest: {}", sol.shortest());
            let pivot = &sol.p_basis().vectors()[sol.pivot()].vector;
            let _ = writeln!(
                out,
                "pivot: {} = {}",
                sol.pivot_provenance(),
                text::format_vector(pivot)
            );
            let _ = writeln!(out, "companion: {}", sol.companion());
            let _ = writeln!(out, "parametrization: {}", sol.template());
            let _ = writeln!(
                out,
                "  t0 in {{1..{}}}, every other digit in {{0..{}}}",
                ring.p() - 1,
                ring.p() - 1
            );
            if let Some(list) = &document.solutions {
                let kind = if monic_only {
                    "monic solutions"
                } else {
                    "solutions"
                };
                let _ = writeln!(out, "{kind} ({}):", list.len());
                for f in list {
                    let _ = writeln!(out, "  {f}");
                }
            }
            out
        }
    };
    Ok((out, failure))
}

/// Index of the first element reducible by the others, if any.
fn first_reducible(rows: &[PolyVec], order: MonomialOrder) -> Result<Option<usize>, Failure> {
    for (i, g) in rows.iter().enumerate() {
        let others: Vec<PolyVec> = rows
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, h)| h.clone())
            .collect();
        if matches!(reduce_step(g, &others, order)?, ReduceStep::Reduced(_)) {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

fn cmd_check(
    cli: &Cli,
    ring: RingParams,
    file: &str,
    trials: usize,
    seed: u64,
) -> Result<(String, bool), Failure> {
    let order: MonomialOrder = cli.order.into();
    let rows = read_matrix(file, ring)?;
    if rows.iter().any(PolyVec::is_zero) {
        return Err(Error::ZeroVector.into());
    }
    let failure = criterion_witness(&rows, order)?;
    let reducible = first_reducible(&rows, order)?;
    let property = if ring.is_field() { "PLM" } else { "p-PLM" };
    let mut document = CheckDocument {
        ring,
        order,
        groebner: failure.is_none(),
        criterion_failure: failure.as_ref().map(CriterionDoc::from),
        minimal: reducible.is_none(),
        property: property.into(),
        trials,
        checked: 0,
        seed,
        passed: false,
        witness: None,
    };

    // The property is only defined for minimal Gröbner bases, except that
    // over a field the raw rows can still be sampled for a counterexample.
    let report: Option<PlmReport> = if document.groebner && document.minimal {
        let gb = GroebnerBasis::from_minimal(rows.clone(), order)?;
        Some(if ring.is_field() {
            check_plm(gb.elements(), order, trials, seed)?
        } else {
            check_p_plm(&build_p_basis(&gb)?, trials, seed)?
        })
    } else if ring.is_field() {
        Some(check_plm(&rows, order, trials, seed)?)
    } else {
        None
    };
    if let Some(report) = &report {
        document.set_report(report);
    }

    let out = match cli.format {
        Format::Json => doc::to_json(&document),
        Format::Human => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "ring: {}  order: {}  rows: {}",
                short_ring(ring),
                order,
                rows.len()
            );
            match &document.criterion_failure {
                None => {
                    let _ = writeln!(out, "groebner: yes");
                }
                Some(f) => {
                    let _ = writeln!(
                        out,
                        "groebner: no (witness: {} reduces to {}, not 0)",
                        f.pair, f.remainder
                    );
                }
            }
            match reducible {
                None => {
                    let _ = writeln!(out, "minimal: yes");
                }
                Some(i) => {
                    let _ = writeln!(
                        out,
                        "minimal: no (row {} is reducible by the others)",
                        i + 1
                    );
                }
            }
            match &report {
                Some(r) => {
                    let _ = writeln!(
                        out,
                        "{property}: {} ({} trials, {} checked, seed {seed})",
                        if r.passed() { "pass" } else { "fail" },
                        r.trials,
                        r.checked
                    );
                }
                None => {
                    let _ = writeln!(
                        out,
                        "{property}: not checked (input is not a minimal Groebner basis)"
                    );
                }
            }
            if let Some(w) = &document.witness {
                let _ = writeln!(out, "witness:");
                let _ = writeln!(out, "  coefficients: {}", w.coefficients.join(", "));
                let _ = writeln!(out, "  combination: {}", w.combination);
                let _ = writeln!(out, "  predicted lm: {}", w.predicted);
                let _ = writeln!(
                    out,
                    "  actual lm: {}",
                    w.actual.as_deref().unwrap_or("none (zero vector)")
                );
            }
            let _ = writeln!(
                out,
                "result: {}",
                if document.passed { "pass" } else { "fail" }
            );
            out
        }
    };
    Ok((out, document.passed))
}

fn run(cli: &Cli) -> Result<(String, u8, Option<String>), Failure> {
    let ring = parse_ring(&cli.ring)?;
    match &cli.command {
        Command::Gb { file } => Ok((cmd_gb(cli, ring, file)?, 0, None)),
        Command::Pbasis { file } => Ok((cmd_pbasis(cli, ring, file)?, 0, None)),
        Command::Lrr { seq, all } => {
            let (out, failure) = cmd_lrr(cli, ring, seq, *all)?;
            Ok(match failure {
                None => (out, 0, None),
                Some(f) => (out, f.code, Some(f.message)),
            })
        }
        Command::Check { file, trials, seed } => {
            let (out, passed) = cmd_check(cli, ring, file, *trials, *seed)?;
            Ok(if passed {
                (out, 0, None)
            } else {
                (out, EXIT_PROPERTY, Some("property check failed".into()))
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, code, diagnostic)) => {
            print!("{out}");
            if let Some(msg) = diagnostic {
                eprintln!("zpr: {msg}");
            }
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("zpr: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
