//! The `cd`, `lattice` and `verify` subcommands.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use cdlat_core::cd::{cd_lattice_capped, cd_lattice_oracle};
use cdlat_core::lattice::{factorize, is_modular, is_self_dual_within, quasi_antichain_width, AbstractLattice};
use cdlat_core::zoo::parse_spec;

use crate::config::RunConfig;
use crate::export::{to_dot, to_json, LatticeJson};
use crate::report::Report;
use crate::suites::run_suites;
use crate::CliError;

pub type CmdResult = Result<(), CliError>;

#[derive(Clone, Debug, Default)]
pub struct CdArgs {
    pub spec: String,
    pub oracle: bool,
    pub dot: Option<PathBuf>,
    pub json: Option<PathBuf>,
    pub full_membership: bool,
}

#[derive(Clone, Debug, Default)]
pub struct LatticeArgs {
    pub path: PathBuf,
    pub modular: bool,
    pub selfdual: bool,
    pub factorize: bool,
}

fn write_file(path: &Path, text: &str) -> CmdResult {
    fs::write(path, text).map_err(|e| CliError::io(path, e))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn width_text(l: &AbstractLattice) -> String {
    match quasi_antichain_width(l) {
        Some(w) => format!("M{w}"),
        None => "not a quasi-antichain".into(),
    }
}

// Output errors on stdout are not worth a distinct exit code.
macro_rules! out {
    ($w:expr, $($arg:tt)*) => {
        {
            let _ = writeln!($w, $($arg)*);
        }
    };
}

pub fn cmd_cd(args: &CdArgs, cfg: &RunConfig, w: &mut impl Write) -> CmdResult {
    let spec = parse_spec(&args.spec).map_err(|e| CliError::Parse(format!("{}: {e}", args.spec)))?;
    let g = spec.eval()?.group;
    let l = cd_lattice_capped(&g, cfg.family_cap)?;
    if args.oracle {
        let slow = cd_lattice_oracle(&g, cfg.oracle_bound)?;
        if !l.same_members(&slow) {
            return Err(CliError::Mismatch(format!(
                "{spec}: fast {} members, oracle {} members",
                l.len(),
                slow.len()
            )));
        }
    }
    let abs = l.to_abstract();
    out!(w, "group        {spec}");
    out!(w, "order        {}", g.order());
    out!(w, "m*           {}", l.mstar());
    out!(w, "members      {}", l.len());
    out!(w, "CD subgroup  order {}", l.bottom().order());
    out!(w, "atoms        {}", l.atoms().len());
    out!(w, "coatoms      {}", l.coatoms().len());
    out!(w, "width        {}", width_text(&abs));
    out!(w, "CD-simple    {}", yes_no(l.is_cd_simple()));
    out!(w, "CD-minimal   {}", yes_no(l.is_cd_minimal()?));
    if args.oracle {
        out!(w, "oracle       agrees");
    }
    if let Some(path) = &args.dot {
        write_file(path, &to_dot(&spec.to_string(), &l))?;
    }
    if let Some(path) = &args.json {
        let j = to_json(&spec.to_string(), &l, args.full_membership);
        let text = serde_json::to_string_pretty(&j).map_err(|e| CliError::Parse(e.to_string()))?;
        write_file(path, &text)?;
    }
    Ok(())
}

pub fn read_lattice(path: &Path) -> Result<(LatticeJson, AbstractLattice), CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let j: LatticeJson =
        serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    let l = j.to_lattice()?;
    Ok((j, l))
}

/// Runs every analysis when no flag is given.
pub fn cmd_lattice(args: &LatticeArgs, cfg: &RunConfig, w: &mut impl Write) -> CmdResult {
    let (j, l) = read_lattice(&args.path)?;
    let all = !(args.modular || args.selfdual || args.factorize);
    out!(w, "group        {} (order {})", j.group.spec, j.group.order);
    out!(w, "elements     {}", l.len());
    out!(w, "length       {}", l.height(l.top()));
    out!(w, "width        {}", width_text(&l));
    if all || args.modular {
        match is_modular(&l) {
            Ok(()) => out!(w, "modular      yes"),
            Err((a, b, c)) => out!(w, "modular      no (violating triple {a}, {b}, {c})"),
        }
    }
    if all || args.selfdual {
        let d = is_self_dual_within(&l, cfg.iso_budget)?;
        out!(w, "self-dual    {}", yes_no(d.is_some()));
    }
    if all || args.factorize {
        let fs = factorize(&l)?;
        let parts: Vec<String> = fs
            .iter()
            .map(|f| match quasi_antichain_width(f) {
                Some(w) => format!("M{w}"),
                None => format!("L{}", f.len()),
            })
            .collect();
        let text = if parts.is_empty() { "trivial".to_string() } else { parts.join(" x ") };
        out!(w, "factors      {text}");
    }
    Ok(())
}

pub fn cmd_verify(cfg: &RunConfig, w: &mut impl Write) -> Result<Report, CliError> {
    cfg.validate().map_err(CliError::Parse)?;
    let start = Instant::now();
    let results = run_suites(cfg);
    let report = Report::new(cfg.clone(), results, start.elapsed().as_micros() as u64);
    let _ = write!(w, "{}", report.table());
    if let Some(path) = &cfg.report {
        let text = report.to_json().map_err(|e| CliError::Parse(e.to_string()))?;
        write_file(path, &text)?;
    }
    if report.failed() {
        return Err(CliError::ClaimsFailed(report.summary.fail));
    }
    Ok(report)
}
