//! Structural claims about `CD(G)` evaluated on a concrete lattice.

use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::group::{
    all_subgroups, center, core, is_abelian, is_directly_indecomposable, is_normal, normal_closure, normalizes,
    product_subset, FiniteGroup, Subgroup,
};
use crate::lattice::{complemented_elements, is_modular, is_self_dual};

use super::{cd_lattice, CdLattice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimStatus::Pass => "pass",
            ClaimStatus::Fail => "FAIL",
            ClaimStatus::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub id: String,
    pub status: ClaimStatus,
    pub evidence: String,
    pub wall_time_us: u64,
}

impl ClaimResult {
    pub fn new(id: impl Into<String>, status: ClaimStatus, evidence: impl Into<String>) -> Self {
        ClaimResult {
            id: id.into(),
            status,
            evidence: evidence.into(),
            wall_time_us: 0,
        }
    }

    pub fn pass(id: impl Into<String>, evidence: impl Into<String>) -> Self {
        Self::new(id, ClaimStatus::Pass, evidence)
    }

    pub fn fail(id: impl Into<String>, evidence: impl Into<String>) -> Self {
        Self::new(id, ClaimStatus::Fail, evidence)
    }

    pub fn skipped(id: impl Into<String>, reason: impl Into<String>) -> Self {
        Self::new(id, ClaimStatus::Skipped, reason)
    }

    /// Pass when `failure` is `None`.
    pub fn check(id: impl Into<String>, failure: Option<String>, evidence: impl Into<String>) -> Self {
        match failure {
            None => Self::pass(id, evidence),
            Some(why) => Self::fail(id, why),
        }
    }

    /// Runs `f` and records its wall time.
    pub fn timed(f: impl FnOnce() -> ClaimResult) -> ClaimResult {
        let start = Instant::now();
        let mut r = f();
        r.wall_time_us = start.elapsed().as_micros() as u64;
        r
    }

    pub fn is_fail(&self) -> bool {
        self.status == ClaimStatus::Fail
    }
}

impl fmt::Display for ClaimResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<8} {:<28} {}", self.status, self.id, self.evidence)
    }
}

fn distinct_primes(mut n: usize) -> usize {
    let mut count = 0;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            count += 1;
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    count + usize::from(n > 1)
}

fn is_p_group(n: usize) -> bool {
    distinct_primes(n) == 1
}

fn first_failure<T>(items: impl IntoIterator<Item = T>, bad: impl Fn(&T) -> Option<String>) -> Option<String> {
    items.into_iter().find_map(|x| bad(&x))
}

/// Runs every claim that applies to `CD(G)`. Claims that need the full
/// subgroup list are skipped when `|G| > oracle_bound`.
pub fn property_audit(l: &CdLattice, oracle_bound: usize) -> Vec<ClaimResult> {
    let g = l.group().clone();
    let name = g.name().to_string();
    let tag = |id: &str| format!("{id}[{name}]");
    let members: Vec<&Subgroup> = l.subgroups().collect();
    let top = l.len() - 1;
    let whole = Subgroup::whole(&g);
    let trivial_bottom = l.has_trivial_bottom();
    let subgroups = (g.order() <= oracle_bound).then(|| all_subgroups(&g, oracle_bound).ok()).flatten();
    let mut out = Vec::new();

    out.push(ClaimResult::timed(|| match &subgroups {
        None => ClaimResult::skipped(tag("prop1-cor1"), format!("|G| = {} above oracle bound", g.order())),
        Some(subs) => {
            let failure = first_failure(members.iter().flat_map(|h| subs.iter().map(move |k| (*h, k))), |(h, k)| {
                let hk = normal_closure(&g, h, k.bits());
                if k.is_subgroup_of(&hk) && !k.is_subgroup_of(h) {
                    return Some(format!("K of order {} lies in H^K but not in H", k.order()));
                }
                if h.is_subgroup_of(k) && h != k && hk.order() >= k.order() {
                    return Some(format!("H < K of order {} but H^K is not proper", k.order()));
                }
                None
            });
            ClaimResult::check(
                tag("prop1-cor1"),
                failure,
                format!("{} members x {} subgroups", members.len(), subs.len()),
            )
        }
    }));

    out.push(ClaimResult::timed(|| {
        let zg = center(&g);
        let failure = first_failure(members.iter(), |h| {
            if h.order() < g.order() && normal_closure(&g, h, whole.bits()).order() >= g.order() {
                return Some(format!("H^G = G for a proper member of order {}", h.order()));
            }
            if zg.is_subgroup_of(h) && zg.order() < h.order() {
                let c = core(&g, h, whole.bits());
                if c.order() <= zg.order() {
                    return Some(format!("core_G(K) = Z(G) for K of order {}", h.order()));
                }
            }
            None
        });
        ClaimResult::check(tag("prop2"), failure, format!("{} members", members.len()))
    }));

    out.push(ClaimResult::timed(|| {
        let failure = first_failure(l.covers().iter(), |&&(i, j)| {
            (!normalizes(&g, members[j], members[i]))
                .then(|| format!("cover {} < {} is not normal", members[i].order(), members[j].order()))
        });
        ClaimResult::check(tag("prop3"), failure, format!("{} covering pairs", l.covers().len()))
    }));

    out.push(ClaimResult::timed(|| {
        if l.top().order() != g.order() {
            return ClaimResult::pass(tag("cor2"), "vacuous: G not in CD(G)");
        }
        let ends: Vec<usize> = l.atoms().into_iter().chain(l.coatoms()).collect();
        let failure = first_failure(ends.iter(), |&&i| {
            (!is_normal(&g, members[i])).then(|| format!("atom/coatom of order {} not normal", members[i].order()))
        });
        ClaimResult::check(tag("cor2"), failure, format!("{} atoms/coatoms", ends.len()))
    }));

    out.push(ClaimResult::timed(|| {
        let ms = l.members();
        let failure = first_failure((0..l.len()).flat_map(|i| (0..l.len()).map(move |j| (i, j))), |&(k, h)| {
            if k == h || !l.leq(k, h) {
                return None;
            }
            let (hk, ck, ch) = (
                ms[h].order() / ms[k].order(),
                ms[k].centralizer.order(),
                ms[h].centralizer.order(),
            );
            (ms[h].order() % ms[k].order() != 0 || ck % ch != 0 || ck / ch != hk)
                .then(|| format!("|H:K| ≠ |C(K):C(H)| for orders {} ≥ {}", ms[h].order(), ms[k].order()))
        });
        ClaimResult::check(tag("lemma1"), failure, "all nested pairs")
    }));

    out.push(ClaimResult::timed(|| {
        let ms = l.members();
        let failure = first_failure((0..l.len()).flat_map(|i| (i + 1..l.len()).map(move |j| (i, j))), |&(i, j)| {
            let meet = members[i].intersection(members[j]);
            let Some(mi) = l.index_of(&meet) else {
                return Some("meet is not a member".to_string());
            };
            let (ci, cj) = (l.centralizer_index(i), l.centralizer_index(j));
            // C(H ∩ K) = C(H)C(K): the product of two members with the
            // right order is their join.
            let c_meet = &ms[l.centralizer_index(mi)].subgroup;
            let (a, b) = (&ms[ci].subgroup, &ms[cj].subgroup);
            let ab = a.order() * b.order() / a.intersection(b).order();
            (!(a.is_subgroup_of(c_meet) && b.is_subgroup_of(c_meet) && ab == c_meet.order()))
                .then(|| "C(H ∩ K) ≠ C(H)C(K)".to_string())
        });
        ClaimResult::check(tag("sublattice-laws"), failure, "meets, joins and centralizers")
    }));

    let lattice = l.to_abstract();
    out.push(ClaimResult::timed(|| match is_modular(&lattice) {
        Ok(()) => ClaimResult::pass(tag("modular"), format!("{} elements", lattice.len())),
        Err(t) => ClaimResult::fail(tag("modular"), format!("violating triple {t:?}")),
    }));
    out.push(ClaimResult::timed(|| match is_self_dual(&lattice) {
        Ok(Some(_)) => ClaimResult::pass(tag("self-dual"), "anti-automorphism found"),
        Ok(None) => ClaimResult::fail(tag("self-dual"), "no anti-automorphism"),
        Err(e) => ClaimResult::skipped(tag("self-dual"), e.to_string()),
    }));

    if !trivial_bottom {
        return out;
    }

    out.push(ClaimResult::timed(|| {
        let failure = first_failure(members.iter().filter(|h| !h.is_trivial()), |h| {
            is_p_group(h.order()).then(|| format!("member of order {} is a p-group", h.order()))
        });
        ClaimResult::check(tag("cor7"), failure, "no nontrivial p-group members")
    }));
    out.push(ClaimResult::timed(|| {
        let failure = first_failure(members.iter().filter(|h| h.order() < g.order()), |h| {
            let index = g.order() / h.order();
            (distinct_primes(index) < 2).then(|| format!("member of index {index}"))
        });
        ClaimResult::check(tag("cor8"), failure, "proper members have index with two primes")
    }));
    out.push(ClaimResult::timed(|| {
        let failure = first_failure(members.iter().filter(|h| !h.is_trivial()), |h| {
            h.elements()
                .any(|x| g.element_order(x) == h.order())
                .then(|| format!("cyclic member of order {}", h.order()))
        });
        ClaimResult::check(tag("no-cyclic"), failure, "no nontrivial cyclic members")
    }));
    out.push(ClaimResult::timed(|| match &subgroups {
        _ if g.order() == 1 => ClaimResult::pass(tag("cor4"), "trivial group"),
        None => ClaimResult::skipped(tag("cor4"), format!("|G| = {} above oracle bound", g.order())),
        Some(subs) => {
            let abelian: Vec<&Subgroup> = subs.iter().filter(|a| is_abelian(&g, a)).collect();
            let failure = first_failure(
                abelian
                    .iter()
                    .enumerate()
                    .flat_map(|(i, a)| abelian[i..].iter().map(move |b| (*a, *b))),
                |(a, b)| {
                    (a.order() * b.order() == g.order() * a.intersection(b).order())
                        .then(|| format!("G = AB with abelian A, B of orders {}, {}", a.order(), b.order()))
                },
            );
            ClaimResult::check(tag("cor4"), failure, format!("{} abelian subgroups", abelian.len()))
        }
    }));

    let indecomposable = is_directly_indecomposable(&g);
    let factors = crate::lattice::factorize(&lattice);
    out.push(ClaimResult::timed(|| match (&indecomposable, &factors) {
        (Ok(ind), Ok(fs)) => {
            let lat_ind = fs.len() <= 1;
            if *ind != lat_ind {
                ClaimResult::fail(tag("cor5"), format!("group indecomposable = {ind}, lattice = {lat_ind}"))
            } else {
                ClaimResult::pass(tag("cor5"), format!("indecomposable = {ind}"))
            }
        }
        (Err(e), _) | (_, Err(e)) => ClaimResult::skipped(tag("cor5"), e.to_string()),
    }));

    if let Ok(fs) = &factors {
        if fs.len() <= 1 && lattice.len() > 1 {
            out.push(ClaimResult::timed(|| {
                let comp = complemented_elements(&lattice);
                let expected = if lattice.len() == 1 { vec![0] } else { vec![0, top] };
                ClaimResult::check(
                    tag("complemented"),
                    (comp != expected).then(|| format!("complemented elements {comp:?}")),
                    "only top and bottom",
                )
            }));
        }
    }

    let minimal_not_simple = matches!(indecomposable, Ok(true)) && !l.is_cd_simple();
    if !minimal_not_simple {
        return out;
    }
    let atoms = l.atoms();
    let coatoms = l.coatoms();
    out.push(ClaimResult::timed(|| {
        let failure = first_failure(atoms.iter().flat_map(|&a| coatoms.iter().map(move |&b| (a, b))), |&(a, b)| {
            (!l.leq(a, b)).then(|| format!("atom {} not below coatom {}", members[a].order(), members[b].order()))
        });
        ClaimResult::check(tag("prop6"), failure, format!("{} atoms, {} coatoms", atoms.len(), coatoms.len()))
    }));
    out.push(ClaimResult::timed(|| {
        let failure = first_failure(atoms.iter(), |&&a| {
            let h = members[a];
            if !is_abelian(&g, h) {
                Some(format!("atom of order {} not abelian", h.order()))
            } else if !is_normal(&g, h) {
                Some(format!("atom of order {} not normal", h.order()))
            } else if distinct_primes(h.order()) < 2 {
                Some(format!("atom of prime-power order {}", h.order()))
            } else {
                None
            }
        });
        ClaimResult::check(tag("prop7"), failure, format!("atom orders {:?}", atoms.iter().map(|&a| members[a].order()).collect::<Vec<_>>()))
    }));
    out.push(ClaimResult::timed(|| {
        let failure = first_failure(coatoms.iter(), |&&b| {
            let h = members[b];
            let c = &l.members()[b].centralizer;
            if !c.is_subgroup_of(h) {
                Some(format!("coatom of order {} does not contain its centralizer", h.order()))
            } else if !is_normal(&g, h) {
                Some(format!("coatom of order {} not normal", h.order()))
            } else if distinct_primes(g.order() / h.order()) < 2 {
                Some(format!("coatom of index {}", g.order() / h.order()))
            } else {
                None
            }
        });
        ClaimResult::check(tag("cor6"), failure, format!("{} coatoms", coatoms.len()))
    }));
    out
}

/// `CD(G1 × ... × Gn)` equals the set of products of members, and
/// `1 ∈ CD(product)` iff `1 ∈ CD(Gi)` for each `i`.
pub fn product_claims(product: &CdLattice, factors: &[Arc<FiniteGroup>]) -> Vec<ClaimResult> {
    let name = product.group().name().to_string();
    let mut out = Vec::new();
    let lattices: Vec<CdLattice> = match factors.iter().map(cd_lattice).collect() {
        Ok(v) => v,
        Err(e) => return vec![ClaimResult::skipped(format!("prop4[{name}]"), e.to_string())],
    };
    out.push(ClaimResult::timed(|| {
        let orders: Vec<usize> = factors.iter().map(|f| f.order()).collect();
        let mut expected: Vec<Subgroup> = vec![];
        let mut pick = vec![0usize; lattices.len()];
        'outer: loop {
            let parts: Vec<&crate::bitset::BitSet> = pick
                .iter()
                .zip(&lattices)
                .map(|(&i, l)| l.members()[i].subgroup.bits())
                .collect();
            expected.push(Subgroup::from_bits_unchecked(product_subset(&orders, &parts)));
            for (k, l) in lattices.iter().enumerate() {
                pick[k] += 1;
                if pick[k] < l.len() {
                    continue 'outer;
                }
                pick[k] = 0;
            }
            break;
        }
        expected.sort();
        let actual: Vec<Subgroup> = product.subgroups().cloned().collect();
        let mstar: u64 = lattices.iter().map(|l| l.mstar()).product();
        ClaimResult::check(
            format!("prop4[{name}]"),
            (expected != actual || mstar != product.mstar())
                .then(|| format!("{} members expected, {} found", expected.len(), actual.len())),
            format!("{} members = product of factor lattices", actual.len()),
        )
    }));
    out.push(ClaimResult::timed(|| {
        let each = lattices.iter().all(|l| l.has_trivial_bottom());
        ClaimResult::check(
            format!("cor3[{name}]"),
            (each != product.has_trivial_bottom()).then(|| "bottom triviality differs".to_string()),
            format!("1 in CD = {each}"),
        )
    }));
    out
}
