use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cdlat::commands::{cmd_cd, cmd_lattice, cmd_verify, CdArgs, LatticeArgs};
use cdlat::config::{RunConfig, Suite, DEFAULT_MAX_ORDER};
use cdlat_core::cd::FAMILY_CAP;
use cdlat_core::group::ORACLE_BOUND;
use cdlat_core::lattice::ISO_BUDGET;

const SPEC_HELP: &str = "\
Group specs:
  trivial  cyclic(n)  elemab(p,k)  sym(n)  dih(n)  q8  qd16
  extraspecial(p,plus|minus)  ut(p,n)  brewster  s0
  prop9(p,n)  minimal(p)
  prod(a,b,...)                direct product
  sdp(n;aut)                   holomorph-style [N]Aut(N)
  sdp(n;t;action=aut|trivial)  [N]T, T acting through Aut(N)
  quot(g;center|derived)       quotient by a named subgroup
  thm2(c1;c2;c3)               subdirect product of three components

Exit codes: 0 ok, 1 failed claims, 2 parse or precondition error,
3 capacity bound exceeded, 4 internal error or oracle disagreement.";

#[derive(Parser)]
#[command(name = "cdlat", version, about = "Chermak-Delgado lattices of finite groups", after_help = SPEC_HELP)]
struct Cli {
    /// Largest group order for exhaustive subgroup enumeration.
    #[arg(long, global = true, default_value_t = ORACLE_BOUND)]
    oracle_bound: usize,
    /// Cap on the centralizer-closure family.
    #[arg(long, global = true, default_value_t = FAMILY_CAP)]
    family_cap: usize,
    /// Node budget for lattice isomorphism searches.
    #[arg(long, global = true, default_value_t = ISO_BUDGET)]
    iso_budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute CD(G) for a group spec.
    Cd {
        spec: String,
        /// Cross-check against exhaustive subgroup enumeration.
        #[arg(long)]
        oracle: bool,
        /// Write the Hasse diagram in DOT format.
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
        /// Write the lattice as JSON.
        #[arg(long, value_name = "FILE")]
        json: Option<PathBuf>,
        /// Include member bitsets in the JSON output.
        #[arg(long, requires = "json")]
        full_membership: bool,
    },
    /// Analyse a lattice written by `cd --json`.
    Lattice {
        json: PathBuf,
        #[arg(long)]
        modular: bool,
        #[arg(long)]
        selfdual: bool,
        #[arg(long)]
        factorize: bool,
    },
    /// Run the verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
        /// Defaults to the number of available cores.
        #[arg(long, env = "CDLAT_THREADS")]
        threads: Option<usize>,
        /// Write the JSON report here.
        #[arg(long, value_name = "FILE")]
        report: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut cfg = RunConfig {
        oracle_bound: cli.oracle_bound,
        family_cap: cli.family_cap,
        iso_budget: cli.iso_budget,
        ..RunConfig::default()
    };
    let mut stdout = std::io::stdout().lock();
    let result = match cli.command {
        Command::Cd {
            spec,
            oracle,
            dot,
            json,
            full_membership,
        } => {
            let args = CdArgs {
                spec,
                oracle,
                dot,
                json,
                full_membership,
            };
            cmd_cd(&args, &cfg, &mut stdout)
        }
        Command::Lattice {
            json,
            modular,
            selfdual,
            factorize,
        } => {
            let args = LatticeArgs {
                path: json,
                modular,
                selfdual,
                factorize,
            };
            cmd_lattice(&args, &cfg, &mut stdout)
        }
        Command::Verify {
            suite,
            max_order,
            threads,
            report,
        } => {
            cfg.suite = suite;
            cfg.max_order = max_order;
            cfg.threads = threads.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            cfg.report = report;
            cmd_verify(&cfg, &mut stdout).map(|_| ())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("cdlat: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
