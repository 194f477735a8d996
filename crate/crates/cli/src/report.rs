use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use cdlat_core::cd::{ClaimResult, ClaimStatus};

use crate::config::RunConfig;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub wall_time_us: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub config: RunConfig,
    pub summary: Summary,
    pub results: Vec<ClaimResult>,
}

impl Report {
    pub fn new(config: RunConfig, results: Vec<ClaimResult>, wall_time_us: u64) -> Self {
        let mut summary = Summary {
            wall_time_us,
            ..Summary::default()
        };
        for r in &results {
            match r.status {
                ClaimStatus::Pass => summary.pass += 1,
                ClaimStatus::Fail => summary.fail += 1,
                ClaimStatus::Skipped => summary.skipped += 1,
            }
        }
        Report {
            config,
            summary,
            results,
        }
    }

    pub fn failed(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// One line per claim followed by the totals.
    pub fn table(&self) -> String {
        let mut out = String::new();
        let width = self.results.iter().map(|r| r.id.len()).max().unwrap_or(0).max(5);
        writeln!(out, "{:<7}  {:<width$}  {:>10}  evidence", "status", "claim", "time").unwrap();
        for r in &self.results {
            writeln!(
                out,
                "{:<7}  {:<width$}  {:>8.1}ms  {}",
                r.status.to_string(),
                r.id,
                r.wall_time_us as f64 / 1000.0,
                r.evidence
            )
            .unwrap();
        }
        let s = &self.summary;
        writeln!(
            out,
            "{} passed, {} failed, {} skipped in {:.1}s",
            s.pass,
            s.fail,
            s.skipped,
            s.wall_time_us as f64 / 1e6
        )
        .unwrap();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_round_trip() {
        let results = vec![
            ClaimResult::pass("a", "ok"),
            ClaimResult::fail("b", "bad"),
            ClaimResult::skipped("c", "bound"),
        ];
        let r = Report::new(RunConfig::default(), results, 12);
        assert_eq!((r.summary.pass, r.summary.fail, r.summary.skipped), (1, 1, 1));
        assert!(r.failed());
        assert_eq!(Report::from_json(&r.to_json().unwrap()).unwrap(), r);
        assert!(r.table().contains("1 passed, 1 failed, 1 skipped"));
    }
}
