//! The group corpus the verification suites run over.

use std::sync::Arc;

use cdlat_core::group::FiniteGroup;
use cdlat_core::zoo::{parse_spec, Evaluated};
use cdlat_core::Result;

/// Named groups of order at most 128.
pub const NAMED: &[&str] = &[
    "trivial",
    "cyclic(2)",
    "cyclic(3)",
    "cyclic(4)",
    "cyclic(6)",
    "cyclic(8)",
    "cyclic(12)",
    "cyclic(64)",
    "elemab(2,2)",
    "elemab(2,3)",
    "elemab(2,4)",
    "elemab(3,2)",
    "elemab(3,3)",
    "elemab(5,2)",
    "sym(3)",
    "sym(4)",
    "sym(5)",
    "dih(4)",
    "dih(5)",
    "dih(6)",
    "dih(8)",
    "dih(12)",
    "dih(32)",
    "q8",
    "qd16",
    "extraspecial(2,plus)",
    "extraspecial(2,minus)",
    "extraspecial(3,plus)",
    "extraspecial(3,minus)",
    "extraspecial(5,plus)",
    "extraspecial(5,minus)",
    "ut(2,1)",
    "ut(3,1)",
    "ut(2,2)",
    "ut(5,1)",
    "minimal(2)",
    "sdp(cyclic(7);aut)",
    "sdp(elemab(2,2);aut)",
    "sdp(cyclic(5);cyclic(4);action=aut)",
    "quot(ut(3,1);center)",
    "quot(prod(q8,q8);center)",
];

/// Factors combined pairwise into direct products.
pub const PRODUCT_BASE: &[&str] = &[
    "cyclic(2)",
    "cyclic(3)",
    "cyclic(4)",
    "sym(3)",
    "dih(4)",
    "q8",
    "dih(5)",
    "dih(6)",
    "qd16",
    "sym(4)",
    "extraspecial(3,plus)",
    "extraspecial(3,minus)",
];

/// Largest order of a pairwise product in the corpus.
pub const PRODUCT_LIMIT: usize = 1024;

/// Larger groups from the constructions.
pub const LARGE: &[&str] = &["ut(2,3)", "ut(3,2)", "prop9(2,2)", "brewster", "prop9(3,2)", "s0"];

/// Products of groups with trivial Chermak-Delgado subgroup, beyond the
/// pairwise range, given as their factor specs.
pub const SPLIT: &[&[&str]] = &[&["sym(4)", "sym(5)"], &["sym(4)", "sym(4)", "sym(4)"]];

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub spec: String,
    pub group: Arc<FiniteGroup>,
    /// Direct factors when the entry is a product built for the corpus.
    pub factors: Vec<Arc<FiniteGroup>>,
}

fn eval(spec: &str) -> Result<Evaluated> {
    parse_spec(spec)
        .map_err(|e| cdlat_core::Error::Precondition(format!("corpus spec {spec}: {e}")))?
        .eval()
}

/// The group of `spec`, named by the spec text so claim ids are unique.
fn named(spec: &str) -> Result<Arc<FiniteGroup>> {
    let g = eval(spec)?.group;
    Ok(Arc::new(FiniteGroup::clone(&g).with_name(spec)))
}

/// Named groups, pairwise products of [`PRODUCT_BASE`], [`LARGE`] and
/// [`SPLIT`], restricted to order at most `max_order`.
pub fn corpus(max_order: usize) -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for spec in NAMED.iter().chain(LARGE) {
        let group = named(spec)?;
        if group.order() <= max_order {
            out.push(CorpusEntry {
                spec: spec.to_string(),
                group,
                factors: Vec::new(),
            });
        }
    }
    out.extend(products(max_order.min(PRODUCT_LIMIT))?);
    for parts in SPLIT {
        let factors: Vec<Arc<FiniteGroup>> = parts.iter().map(|s| Ok(eval(s)?.group)).collect::<Result<_>>()?;
        if factors.iter().map(|f| f.order()).product::<usize>() <= max_order {
            let spec = format!("prod({})", parts.join(","));
            let group = named(&spec)?;
            out.push(CorpusEntry { spec, group, factors });
        }
    }
    Ok(out)
}

/// Unordered pairs from [`PRODUCT_BASE`] with order at most `max_order`.
pub fn products(max_order: usize) -> Result<Vec<CorpusEntry>> {
    let base: Vec<Arc<FiniteGroup>> = PRODUCT_BASE.iter().map(|s| Ok(eval(s)?.group)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for i in 0..base.len() {
        for j in i..base.len() {
            if base[i].order() * base[j].order() > max_order {
                continue;
            }
            let spec = format!("prod({},{})", PRODUCT_BASE[i], PRODUCT_BASE[j]);
            let group = named(&spec)?;
            out.push(CorpusEntry {
                spec,
                group,
                factors: vec![base[i].clone(), base[j].clone()],
            });
        }
    }
    Ok(out)
}
