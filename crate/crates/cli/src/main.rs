use std::collections::BTreeSet;
use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use wilf_core::enumeration::{count_avoiders, for_each, BaseClass, ClassSpec, Limits};
use wilf_core::fillings::{chi, chi_inv};
use wilf_core::matchings::{phi, phi_inv};
use wilf_core::paths::{psi, psi_inv, psibar, psibar_inv, theta, theta_inv};
use wilf_core::pipeline::{phi_cap, phi_cap_inv, phi_involution, phi_involution_inv, psi_cap, psi_cap_inv, psi_cap_trace};
use wilf_core::tableaux::{gamma, gamma_inv, west_f, west_f_inv};
use wilf_core::verify::{verify_target, Target};
use wilf_core::{DyckPair, Matching, OscillatingTableau, Permutation, Transversal};

#[derive(Parser)]
#[command(name = "wilf", version, about = "Pattern-avoiding involutions: counts, bijections and exhaustive checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the members of a class.
    Count(ClassArgs),
    /// List the members of a class in lexicographic order.
    Enumerate {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Apply one bijection to a JSON object read from a file (`-` for stdin).
    Map {
        #[arg(long, value_enum)]
        bijection: Bijection,
        #[arg(long)]
        input: String,
        /// Pattern `τ` for Phi.
        #[arg(long)]
        tau: Option<Permutation>,
        /// Length of the increasing pattern for West's bijection.
        #[arg(long, default_value_t = 4)]
        k: usize,
        /// For Psi: print every intermediate object.
        #[arg(long)]
        trace: bool,
    },
    /// Run one verification target and print its JSON report.
    Verify {
        name: Target,
        #[arg(long)]
        max_n: Option<usize>,
        /// Accept the larger sizes of the slow tier.
        #[arg(long)]
        slow: bool,
    },
    /// Run every verification target at its default size.
    Selftest {
        #[arg(long)]
        slow: bool,
    },
}

#[derive(Args)]
struct ClassArgs {
    #[arg(long, value_enum)]
    class: ClassArg,
    #[arg(long)]
    length: usize,
    #[arg(long = "avoid")]
    avoid: Vec<Permutation>,
    /// Fixed value, `POS=VAL` (1-indexed).
    #[arg(long = "fixed", value_parser = parse_fixed)]
    fixed: Vec<(usize, u32)>,
    /// Exact descent set, comma separated; an empty string means none.
    #[arg(long, value_parser = parse_descents)]
    descents: Option<BTreeSet<usize>>,
    /// Lift the desk-scale size limits.
    #[arg(long)]
    no_limit: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Inv,
    Ai,
    Rai,
    Perm,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Bijection {
    F,
    FInv,
    Gamma,
    GammaInv,
    Chi,
    ChiInv,
    Phi,
    PhiInv,
    Psi,
    PsiInv,
    Psibar,
    PsibarInv,
    Theta,
    ThetaInv,
    #[value(name = "Psi", alias = "psi-cap")]
    PsiCap,
    #[value(name = "Psi-inv", alias = "psi-cap-inv")]
    PsiCapInv,
    #[value(name = "Phi", alias = "phi-cap")]
    PhiCap,
    #[value(name = "Phi-inv", alias = "phi-cap-inv")]
    PhiCapInv,
}

fn parse_fixed(s: &str) -> Result<(usize, u32), String> {
    let (pos, val) = s.split_once('=').ok_or("expected POS=VAL")?;
    Ok((pos.trim().parse().map_err(|e| format!("{e}"))?, val.trim().parse().map_err(|e| format!("{e}"))?))
}

fn parse_descents(s: &str) -> Result<BTreeSet<usize>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|e| format!("{t}: {e}")))
        .collect()
}

impl ClassArgs {
    fn spec(&self) -> Result<ClassSpec, wilf_core::Error> {
        let base = match self.class {
            ClassArg::Inv => BaseClass::I,
            ClassArg::Ai => BaseClass::AI,
            ClassArg::Rai => BaseClass::RAI,
            ClassArg::Perm => BaseClass::S,
        };
        let mut spec = ClassSpec::new(base, self.length);
        spec.avoid = self.avoid.clone();
        spec.fixed = self.fixed.clone();
        spec.descents = self.descents.clone();
        let limits = if self.no_limit { Limits::unbounded() } else { Limits::default() };
        spec.check_feasible(&limits)?;
        Ok(spec)
    }
}

type Failure = (u8, String);

fn user_error(e: impl std::fmt::Display) -> Failure {
    (2, e.to_string())
}

fn read_input(path: &str) -> Result<Value, Failure> {
    let text = if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(user_error)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| user_error(format!("{path}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| user_error(format!("{path}: {e}")))
}

fn decode<T: serde::de::DeserializeOwned>(v: Value) -> Result<T, Failure> {
    serde_json::from_value(v).map_err(user_error)
}

fn encode<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types serialize")
}

fn run_map(bijection: Bijection, input: Value, tau: Option<Permutation>, k: usize, trace: bool) -> Result<Value, Failure> {
    use Bijection as B;
    let out = match bijection {
        B::F => encode(&west_f(&decode(input)?, k).map_err(user_error)?),
        B::FInv => encode(&west_f_inv(&decode(input)?, k).map_err(user_error)?),
        B::Gamma => encode(&gamma(&decode(input)?).map_err(user_error)?),
        B::GammaInv => encode(&gamma_inv(&decode(input)?).map_err(user_error)?),
        B::Chi => encode(&chi(&decode::<Transversal>(input)?)),
        B::ChiInv => encode(&chi_inv(&decode::<Matching>(input)?).map_err(user_error)?),
        B::Phi => encode(&phi(&decode::<Matching>(input)?)),
        B::PhiInv => encode(&phi_inv(&decode::<OscillatingTableau>(input)?).map_err(user_error)?),
        B::Psi => encode(&psi(&decode::<OscillatingTableau>(input)?).map_err(user_error)?),
        B::PsiInv => encode(&psi_inv(&decode::<DyckPair>(input)?).map_err(user_error)?),
        B::Psibar => encode(&psibar(&decode::<OscillatingTableau>(input)?).map_err(user_error)?),
        B::PsibarInv => encode(&psibar_inv(&decode::<DyckPair>(input)?).map_err(user_error)?),
        B::Theta => encode(&theta(&decode::<DyckPair>(input)?).map_err(user_error)?),
        B::ThetaInv => encode(&theta_inv(&decode::<DyckPair>(input)?).map_err(user_error)?),
        B::PsiCap => {
            let t = transversal_or_involution(input)?;
            if trace {
                encode(&psi_cap_trace(&t).map_err(user_error)?)
            } else {
                encode(&psi_cap(&t).map_err(user_error)?)
            }
        }
        B::PsiCapInv => encode(&psi_cap_inv(&transversal_or_involution(input)?).map_err(user_error)?),
        B::PhiCap | B::PhiCapInv => {
            let tau = tau.ok_or_else(|| user_error("Phi needs --tau"))?;
            let forward = matches!(bijection, B::PhiCap);
            if input.is_array() {
                let p: Permutation = decode(input)?;
                let r = if forward { phi_involution(&p, &tau) } else { phi_involution_inv(&p, &tau) };
                encode(&r.map_err(user_error)?)
            } else {
                let t: Transversal = decode(input)?;
                let r = if forward { phi_cap(&t, &tau) } else { phi_cap_inv(&t, &tau) };
                encode(&r.map_err(user_error)?)
            }
        }
    };
    Ok(out)
}

/// A bare array is read as an involution on the square diagram.
fn transversal_or_involution(input: Value) -> Result<Transversal, Failure> {
    if input.is_array() {
        Ok(Transversal::from_permutation(&decode::<Permutation>(input)?))
    } else {
        decode(input)
    }
}

fn selftest_max(t: Target, slow: bool) -> usize {
    if slow {
        (t.default_max() + 1).min(t.limit(true))
    } else {
        t.default_max()
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let io_err = |e: io::Error| (2, e.to_string());
    match cli.command {
        Command::Count(args) => {
            let spec = args.spec().map_err(user_error)?;
            writeln!(out, "{}", count_avoiders(&spec)).map_err(io_err)?;
        }
        Command::Enumerate { class, format } => {
            let spec = class.spec().map_err(user_error)?;
            let mut failed = None;
            if format == Format::Json {
                write!(out, "[").map_err(io_err)?;
            }
            let mut first = true;
            for_each(&spec, |p| {
                let line = match format {
                    Format::Json => format!("{}{}", if first { "" } else { "," }, encode(p)),
                    Format::Csv => {
                        let cells: Vec<String> = p.word().iter().map(u32::to_string).collect();
                        format!("{}\n", cells.join(","))
                    }
                };
                first = false;
                match out.write_all(line.as_bytes()) {
                    Ok(()) => std::ops::ControlFlow::Continue(()),
                    Err(e) => {
                        failed = Some(e);
                        std::ops::ControlFlow::Break(())
                    }
                }
            });
            if let Some(e) = failed {
                return Err(io_err(e));
            }
            if format == Format::Json {
                writeln!(out, "]").map_err(io_err)?;
            }
        }
        Command::Map { bijection, input, tau, k, trace } => {
            let value = run_map(bijection, read_input(&input)?, tau, k, trace)?;
            writeln!(out, "{value}").map_err(io_err)?;
        }
        Command::Verify { name, max_n, slow } => {
            let report = verify_target(name, max_n.unwrap_or(name.default_max()), slow).map_err(user_error)?;
            let text = serde_json::to_string_pretty(&report).expect("report serializes");
            writeln!(out, "{text}").map_err(io_err)?;
            return Ok(report.pass);
        }
        Command::Selftest { slow } => {
            let mut all = true;
            for t in Target::ALL {
                let max_n = selftest_max(t, slow);
                let report = verify_target(t, max_n, slow).map_err(user_error)?;
                all &= report.pass;
                let verdict = if report.pass { "PASS" } else { "FAIL" };
                writeln!(out, "{verdict} {t} (max_n = {max_n}, {} rows, {} ms)", report.rows.len(), report.wall_time_ms)
                    .map_err(io_err)?;
                for row in report.failures() {
                    writeln!(out, "    n = {}: {} expected {} computed {}", row.n, row.label, row.expected, row.computed)
                        .map_err(io_err)?;
                }
            }
            return Ok(all);
        }
    }
    Ok(true)
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("WILF_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .map_err(|_| user_error(format!("WILF_THREADS must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n.max(1))
        .build_global()
        .map_err(user_error)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_threads().and_then(|()| run(cli)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
