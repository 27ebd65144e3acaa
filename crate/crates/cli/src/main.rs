//! `germinv`: local invariants of isolated singularity germs.
//!
//! Exit codes: 0 success, 1 malformed input, 2 non-isolated or non-ICIS germ,
//! 3 genericity failure, 4 failed identity check or expected-value mismatch.
//! Every failure writes one line `error[<reason>]: <message>` to stderr.

mod files;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use germinv::invariants::GenericityConfig;
use germinv::stdbasis::StdBasisError;
use germinv::{
    euler_obstruction, milnor_hypersurface, seeded_rng, verify_morsification, InvariantError,
    MonomialCurve, MorsifyError, OracleConfig, VarTable,
};
use serde::Serialize;

use report::Settings;

#[derive(Parser)]
#[command(
    name = "germinv",
    version,
    about = "Exact local invariants of singularity germs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Milnor number of an isolated hypersurface singularity.
    Mu {
        /// Polynomial, e.g. "x^2 - y^3".
        #[arg(long = "f")]
        f: String,
        /// Comma-separated variable names.
        #[arg(long)]
        vars: String,
        #[arg(long)]
        json: bool,
    },
    /// Invariant tower and identity checks for a germ file.
    Eu {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        sampling: Sampling,
        #[arg(long)]
        json: bool,
    },
    /// Euler obstruction from a stratification table.
    Strata {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Morse count on the curve x^p = y^q against the Euler obstruction.
    OracleCurve {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        /// Function in the variables x, y.
        #[arg(long = "f")]
        f: String,
        #[command(flatten)]
        sampling: Sampling,
        #[arg(long)]
        json: bool,
    },
}

/// Overrides for the generic-form sampler.
#[derive(Args)]
struct Sampling {
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    bound: Option<i64>,
}

impl Sampling {
    fn resolve(&self, seed: Option<u64>, samples: Option<usize>, bound: Option<i64>) -> Settings {
        let d = GenericityConfig::default();
        Settings {
            seed: self.seed.or(seed).unwrap_or(0),
            samples: self.samples.or(samples).unwrap_or(d.samples),
            bound: self.bound.or(bound).unwrap_or(d.bound),
        }
    }
}

fn genericity(s: &Settings) -> Result<GenericityConfig, Failure> {
    if s.samples == 0 || s.bound < 1 {
        return Err(Failure::input(
            "invalid-settings",
            "samples and bound must be positive".into(),
        ));
    }
    Ok(GenericityConfig {
        samples: s.samples,
        bound: s.bound,
        ..GenericityConfig::default()
    })
}

/// A terminal error: exit code plus a stable reason tag.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    reason: &'static str,
    message: String,
}

impl Failure {
    fn new(code: u8, reason: &'static str, message: String) -> Self {
        Failure {
            code,
            reason,
            message,
        }
    }

    pub fn input(reason: &'static str, message: String) -> Self {
        Self::new(1, reason, message)
    }
}

const STRATA_HINT: &str = "use `germinv strata` with stratification data instead";

pub fn invariant_failure(e: InvariantError) -> Failure {
    let msg = e.to_string();
    match e {
        InvariantError::InvalidGerm(_) => Failure::input("invalid-germ", msg),
        InvariantError::NonIsolated | InvariantError::NonIcis { .. } => {
            Failure::new(2, "non-icis", format!("{msg}; {STRATA_HINT}"))
        }
        InvariantError::FunctionNotIsolated(_) => Failure::new(2, "non-isolated", msg),
        InvariantError::GenericityFailure { .. } => Failure::new(3, "genericity", msg),
        InvariantError::PathMismatch { .. } => Failure::new(4, "cross-check", msg),
        InvariantError::Algebra(StdBasisError::ResourceLimit(_)) => {
            Failure::input("resource-limit", msg)
        }
        InvariantError::Algebra(_) => Failure::input("algebra", msg),
    }
}

fn morsify_failure(e: MorsifyError) -> Failure {
    let msg = e.to_string();
    match e {
        MorsifyError::InvalidCurve { .. } => Failure::input("invalid-curve", msg),
        MorsifyError::NotPlanar | MorsifyError::NonVanishing => {
            Failure::input("invalid-function", msg)
        }
        MorsifyError::ZeroDerivative => Failure::new(2, "non-isolated", msg),
        MorsifyError::ZeroPerturbation
        | MorsifyError::NoGeneralPerturbation(_)
        | MorsifyError::PerturbationDisagreement(_) => Failure::new(3, "genericity", msg),
        MorsifyError::Invariant(e) => invariant_failure(e),
    }
}

fn print_json<T: Serialize>(doc: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(doc).expect("report serializes")
    );
}

fn cmd_mu(f: &str, vars: &str, json: bool) -> Result<(), Failure> {
    let table =
        VarTable::from_csv(vars).map_err(|e| Failure::input("invalid-vars", e.to_string()))?;
    let poly = files::parse_expr(f, &table, "f")?;
    let mu = match milnor_hypersurface(&poly) {
        Ok(mu) => mu,
        Err(InvariantError::NonIsolated) => {
            return Err(Failure::new(
                2,
                "non-isolated",
                "non-isolated singularity: Jacobian ideal has infinite colength".into(),
            ))
        }
        Err(e) => return Err(invariant_failure(e)),
    };
    if json {
        print_json(&report::MuDoc {
            command: "mu",
            vars: table.names().to_vec(),
            f: poly.display_with(table.names()).to_string(),
            mu,
        });
    } else {
        println!("{mu}");
    }
    Ok(())
}

fn cmd_eu(input: &std::path::Path, sampling: &Sampling, json: bool) -> Result<(), Failure> {
    let loaded = files::load_germ(input)?;
    let settings = sampling.resolve(loaded.file.seed, loaded.file.samples, loaded.file.bound);
    let cfg = genericity(&settings)?;
    let mut rng = seeded_rng(settings.seed);
    let r = euler_obstruction(&loaded.germ, &mut rng, &cfg).map_err(invariant_failure)?;
    let names = loaded.vars.names();
    if json {
        let render = |p: &germinv::Polynomial| p.display_with(names).to_string();
        print_json(&report::EuDoc {
            command: "eu",
            inputs: report::GermInputs {
                vars: names.to_vec(),
                defining: loaded.germ.defining().iter().map(render).collect(),
                function: render(loaded.germ.func()),
            },
            settings,
            report: report::report_doc(&r, names),
        });
    } else {
        print!("{}", report::report_table(&r, names));
    }
    if r.all_passed() {
        Ok(())
    } else {
        let failed: Vec<&str> = r.failed_checks().map(|c| c.name).collect();
        Err(Failure::new(
            4,
            "check-failed",
            format!("failed checks: {}", failed.join(", ")),
        ))
    }
}

fn cmd_strata(input: &std::path::Path, json: bool) -> Result<(), Failure> {
    let (table, expected) = files::load_strata(input)?;
    let eu = table
        .euler_obstruction()
        .map_err(|e| Failure::input("malformed-file", e.to_string()))?;
    let doc = report::strata_doc(&table, eu, expected);
    if json {
        print_json(&doc);
    } else {
        print!("{}", report::strata_table(&doc));
    }
    match expected {
        Some(e) if e != eu => Err(Failure::new(
            4,
            "expected-mismatch",
            format!("Eu_f = {eu}, expected {e}"),
        )),
        _ => Ok(()),
    }
}

fn cmd_oracle(p: u32, q: u32, f: &str, sampling: &Sampling, json: bool) -> Result<(), Failure> {
    let curve = MonomialCurve::new(p, q).map_err(morsify_failure)?;
    let vars = VarTable::new(["x", "y"]).expect("valid names");
    let poly = files::parse_expr(f, &vars, "f")?;
    let settings = sampling.resolve(None, None, None);
    let cfg = OracleConfig {
        bound: settings.bound,
        genericity: genericity(&settings)?,
        ..OracleConfig::default()
    };
    let mut rng = seeded_rng(settings.seed);
    let r = verify_morsification(&curve, &poly, &mut rng, &cfg).map_err(morsify_failure)?;
    let doc = report::oracle_doc(&r, &poly, settings, vars.names());
    if json {
        print_json(&doc);
    } else {
        print!("{}", report::oracle_table(&doc));
    }
    if r.passed {
        Ok(())
    } else {
        Err(Failure::new(
            4,
            "oracle-mismatch",
            format!("morse_count {} but Eu_f = {}", r.morse_count, r.eu_f),
        ))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Mu { f, vars, json } => cmd_mu(&f, &vars, json),
        Command::Eu {
            input,
            sampling,
            json,
        } => cmd_eu(&input, &sampling, json),
        Command::Strata { input, json } => cmd_strata(&input, json),
        Command::OracleCurve {
            p,
            q,
            f,
            sampling,
            json,
        } => cmd_oracle(p, q, &f, &sampling, json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("invalid arguments");
            eprintln!("error[usage]: {}", first.trim_start_matches("error: "));
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error[{}]: {}", f.reason, f.message);
            ExitCode::from(f.code)
        }
    }
}
