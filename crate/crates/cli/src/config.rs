use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use cdlat_core::cd::FAMILY_CAP;
use cdlat_core::group::ORACLE_BOUND;
use cdlat_core::lattice::ISO_BUDGET;

/// Default corpus bound; large enough to include `S0`.
pub const DEFAULT_MAX_ORDER: usize = 20736;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Core,
    Paper,
    Table12,
    All,
}

impl Suite {
    pub fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "core" => Ok(Suite::Core),
            "paper" => Ok(Suite::Paper),
            "table12" => Ok(Suite::Table12),
            "all" => Ok(Suite::All),
            _ => Err(format!("unknown suite '{s}' (expected core, paper, table12 or all)")),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Core => "core",
            Suite::Paper => "paper",
            Suite::Table12 => "table12",
            Suite::All => "all",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    /// Groups up to this order are cross-checked against the exhaustive
    /// oracle and get the subgroup-level audits.
    pub oracle_bound: usize,
    /// Cap on the centralizer-closure family.
    pub family_cap: usize,
    /// Node budget for lattice isomorphism searches.
    pub iso_budget: u64,
    pub suite: Suite,
    /// Corpus groups above this order are left out.
    pub max_order: usize,
    pub threads: usize,
    pub report: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            oracle_bound: ORACLE_BOUND,
            family_cap: FAMILY_CAP,
            iso_budget: ISO_BUDGET,
            suite: Suite::All,
            max_order: DEFAULT_MAX_ORDER,
            threads: 1,
            report: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.oracle_bound == 0 || self.family_cap == 0 || self.iso_budget == 0 {
            return Err("bounds must be positive".into());
        }
        if self.max_order == 0 {
            return Err("--max-order must be positive".into());
        }
        if self.threads == 0 {
            return Err("thread count must be positive".into());
        }
        Ok(())
    }
}
