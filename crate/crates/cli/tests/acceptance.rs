//! The ten acceptance criteria, one pass/fail line each.

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use cdlat::config::RunConfig;
use cdlat::suites::{criterion, CRITERIA};
use cdlat_core::cd::{ClaimResult, ClaimStatus};

const LIMITS_S: [u64; CRITERIA] = [60, 1, 5, 120, 10, 120, 300, 120, 30, 600];

fn with_prefix<'a>(rs: &'a [ClaimResult], prefix: &'a str) -> impl Iterator<Item = &'a ClaimResult> {
    rs.iter().filter(move |r| r.id.starts_with(prefix))
}

/// Requirements beyond "no claim failed".
fn extra_checks(n: usize, rs: &[ClaimResult]) -> Result<(), String> {
    let all_pass = |rs: &[ClaimResult]| match rs.iter().find(|r| r.status != ClaimStatus::Pass) {
        Some(r) => Err(format!("{r}")),
        None => Ok(()),
    };
    let need = |prefix: &str, at_least: usize| {
        let k = with_prefix(rs, prefix).filter(|r| r.status == ClaimStatus::Pass).count();
        if k >= at_least {
            Ok(())
        } else {
            Err(format!("{k} passing {prefix} claims, need {at_least}"))
        }
    };
    match n {
        1 => {
            all_pass(rs)?;
            need("oracle[", 25)
        }
        2..=9 => {
            all_pass(rs)?;
            match n {
                3 => need("extraspecial[", 4),
                4 => need("ut-width[", 5),
                5 => need("prop9[", 2),
                8 => need("thm2[", 18),
                9 => need("table12-distinct", 1),
                _ => Ok(()),
            }
        }
        _ => {
            // Skips are allowed only where a claim needs the full subgroup
            // list of a group above the oracle bound.
            if let Some(r) = rs
                .iter()
                .find(|r| r.status == ClaimStatus::Skipped && !r.evidence.contains("above oracle bound"))
            {
                return Err(format!("unexpected skip: {r}"));
            }
            need("prop4[", 10)?;
            need("thm1-split[prod(sym(4),sym(4))]", 1)?;
            let cd_count = with_prefix(rs, "modular[").count();
            need("self-dual[", cd_count)?;
            need("lemma1[", cd_count)
        }
    }
}

#[test]
fn acceptance() {
    let cfg = RunConfig {
        threads: std::thread::available_parallelism().map_or(1, |n| n.get()),
        ..RunConfig::default()
    };
    // Written to stderr directly so the lines survive output capture.
    let mut log = std::io::stderr();
    let mut failed = Vec::new();
    for n in 1..=CRITERIA {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(|| criterion(n, &cfg)));
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(LIMITS_S[n - 1]);
        let verdict = match outcome {
            Err(_) => Err("panicked".to_string()),
            Ok(rs) => match rs.iter().find(|r| r.is_fail()) {
                Some(r) => Err(format!("{r}")),
                None => extra_checks(n, &rs).map(|()| rs.len()),
            },
        }
        .and_then(|k| {
            if elapsed <= limit {
                Ok(k)
            } else {
                Err(format!("took {:.1}s, limit {}s", elapsed.as_secs_f64(), limit.as_secs()))
            }
        });
        match verdict {
            Ok(k) => {
                let _ = writeln!(log, "criterion {n}: pass ({k} claims, {:.2}s)", elapsed.as_secs_f64());
            }
            Err(why) => {
                let _ = writeln!(log, "criterion {n}: FAIL {why}");
                failed.push(n);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
