//! The verification suites behind `cdlat verify`, organised by acceptance
//! criterion.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};

use rayon::prelude::*;

use cdlat_core::bitset::BitSet;
use cdlat_core::cd::{
    cd_lattice, cd_lattice_capped, cd_lattice_oracle, cd_subgroup, product_claims, property_audit, split_from_lattice,
    CdLattice, ClaimResult,
};
use cdlat_core::group::{
    all_subgroups, center, find_isomorphism, is_abelian, product_subset, subgroup_as_group, FiniteGroup,
};
use cdlat_core::lattice::{
    adjoin_bounds, atoms, cartesian, coatoms, complemented_elements, factorize, is_isomorphic_within, is_modular,
    is_self_dual_within, mk_quasi_antichain, quasi_antichain_width, AbstractLattice,
};
use cdlat_core::zoo::{
    brewster, brewster_quotient, center_action, extraspecial, hypothesis_check, minimal, prop9_action, q8, qd16, s0,
    sym, theorem2_order, unitriangular, Component, Extraspecial,
};
use cdlat_core::Error;

use crate::config::{RunConfig, Suite};
use crate::corpus::{corpus, CorpusEntry};

/// Largest group order covered by the oracle-equivalence criterion.
pub const ORACLE_CORPUS_ORDER: usize = 128;

/// Number of acceptance criteria.
pub const CRITERIA: usize = 10;

/// Why a claim did not pass.
enum Failure {
    Claim(String),
    Error(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

type Outcome = Result<String, Failure>;

fn ensure(cond: bool, why: impl FnOnce() -> String) -> Result<(), Failure> {
    if cond {
        Ok(())
    } else {
        Err(Failure::Claim(why()))
    }
}

/// Runs one claim; capacity errors mark it skipped, other errors fail it.
fn claim(id: impl Into<String>, f: impl FnOnce() -> Outcome) -> ClaimResult {
    let id = id.into();
    ClaimResult::timed(|| match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(evidence)) => ClaimResult::pass(id, evidence),
        Ok(Err(Failure::Claim(why))) => ClaimResult::fail(id, why),
        Ok(Err(Failure::Error(e @ Error::Capacity { .. }))) => ClaimResult::skipped(id, e.to_string()),
        Ok(Err(Failure::Error(e))) => ClaimResult::fail(id, format!("error: {e}")),
        Err(_) => ClaimResult::fail(id, "panicked"),
    })
}

type Task<'a> = Box<dyn FnOnce() -> Vec<ClaimResult> + Send + 'a>;

fn run_tasks(tasks: Vec<Task<'_>>, threads: usize) -> Vec<ClaimResult> {
    let run = |tasks: Vec<Task<'_>>| -> Vec<ClaimResult> {
        tasks
            .into_par_iter()
            .map(|t| {
                catch_unwind(AssertUnwindSafe(t))
                    .unwrap_or_else(|_| vec![ClaimResult::fail("task", "a verification task panicked")])
            })
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    };
    let mut out = match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(|| run(tasks)),
        Err(_) => run(tasks),
    };
    out.sort_by(|a, b| a.id.cmp(&b.id));
    out
}

/// Runs the suites selected by `cfg`, sorted by claim id.
pub fn run_suites(cfg: &RunConfig) -> Vec<ClaimResult> {
    let mut tasks: Vec<Task<'_>> = Vec::new();
    if cfg.suite.includes(Suite::Core) {
        match corpus(cfg.max_order) {
            Ok(entries) => {
                for e in entries {
                    tasks.push(Box::new(move || entry_claims(&e, cfg, true, true)));
                }
            }
            Err(e) => tasks.push(Box::new(move || vec![ClaimResult::fail("corpus", e.to_string())])),
        }
    }
    if cfg.suite.includes(Suite::Paper) {
        for n in 2..=8 {
            tasks.push(Box::new(move || single_criterion(n, cfg)));
        }
    }
    if cfg.suite.includes(Suite::Table12) {
        tasks.push(Box::new(move || single_criterion(9, cfg)));
    }
    run_tasks(tasks, cfg.threads)
}

/// The claims making up acceptance criterion `n` (1 to [`CRITERIA`]).
pub fn criterion(n: usize, cfg: &RunConfig) -> Vec<ClaimResult> {
    match n {
        1 | 10 => {
            let bound = if n == 1 { ORACLE_CORPUS_ORDER } else { cfg.max_order };
            let entries = match corpus(bound) {
                Ok(e) => e,
                Err(e) => return vec![ClaimResult::fail("corpus", e.to_string())],
            };
            let tasks: Vec<Task<'_>> = entries
                .into_iter()
                .map(|e| -> Task<'_> { Box::new(move || entry_claims(&e, cfg, n == 1, n == 10)) })
                .collect();
            run_tasks(tasks, cfg.threads)
        }
        _ => single_criterion(n, cfg),
    }
}

fn single_criterion(n: usize, cfg: &RunConfig) -> Vec<ClaimResult> {
    match n {
        2 => vec![s4_claim()],
        3 => extraspecial_claims(),
        4 => ut_claims(cfg),
        5 => prop9_claims(),
        6 => vec![brewster_claim(cfg)],
        7 => vec![s0_claim(cfg)],
        8 => theorem2_claims(cfg),
        9 => table12_claims(cfg),
        _ => vec![ClaimResult::fail(format!("criterion{n}"), "no such criterion")],
    }
}

/// Oracle comparison and/or the property audits for one corpus group.
fn entry_claims(e: &CorpusEntry, cfg: &RunConfig, oracle: bool, properties: bool) -> Vec<ClaimResult> {
    let spec = &e.spec;
    let l = match cd_lattice_capped(&e.group, cfg.family_cap) {
        Ok(l) => l,
        Err(err @ Error::Capacity { .. }) => return vec![ClaimResult::skipped(format!("cd[{spec}]"), err.to_string())],
        Err(err) => return vec![ClaimResult::fail(format!("cd[{spec}]"), err.to_string())],
    };
    let mut out = Vec::new();
    if oracle {
        out.push(if e.group.order() > cfg.oracle_bound {
            ClaimResult::skipped(format!("oracle[{spec}]"), format!("|G| = {} above oracle bound", e.group.order()))
        } else {
            claim(format!("oracle[{spec}]"), || {
                let slow = cd_lattice_oracle(&e.group, cfg.oracle_bound)?;
                ensure(l.same_members(&slow), || {
                    format!("fast {} members, oracle {} members", l.len(), slow.len())
                })?;
                Ok(format!("|G| = {}, {} members, m* = {}", e.group.order(), l.len(), l.mstar()))
            })
        });
    }
    if properties {
        out.extend(property_audit(&l, cfg.oracle_bound));
        if !e.factors.is_empty() {
            out.extend(product_claims(&l, &e.factors));
        }
        if l.has_trivial_bottom() && (!e.factors.is_empty() || l.len() > 2) {
            out.push(claim(format!("thm1-split[{spec}]"), || split_claim(&l, cfg, !e.factors.is_empty())));
        }
    }
    out
}

/// Recovers `G = H × K` from the lattice and checks `CD(H)` and `CD(K)`
/// against the intervals below `H` and `K`.
fn split_claim(l: &CdLattice, cfg: &RunConfig, must_split: bool) -> Outcome {
    let Some((h, k)) = split_from_lattice(l)? else {
        ensure(!must_split, || "product with 1 in CD(G) did not split".into())?;
        return Ok("indecomposable lattice".into());
    };
    ensure(!h.is_trivial() && !k.is_trivial(), || "trivial factor".into())?;
    let g = l.group();
    let lat = l.to_abstract();
    for (name, x) in [("H", &h), ("K", &k)] {
        let idx = l.index_of(x).ok_or_else(|| Failure::Claim(format!("{name} not a member")))?;
        let (interval, _) = lat.lower_interval(idx)?;
        let (as_group, _) = subgroup_as_group(g, x, name)?;
        let sub = cd_lattice_capped(&as_group, cfg.family_cap)?.to_abstract();
        ensure(is_isomorphic_within(&sub, &interval, cfg.iso_budget)?.is_some(), || {
            format!("CD({name}) differs from [1, {name}]")
        })?;
    }
    Ok(format!("G = H x K with |H| = {}, |K| = {}", h.order(), k.order()))
}

fn member_bits(l: &CdLattice) -> BTreeSet<BitSet> {
    l.subgroups().map(|h| h.bits().clone()).collect()
}

/// Subgroups of `g` containing `Z(g)`, by exhaustive enumeration.
fn above_center(g: &FiniteGroup, bound: usize) -> cdlat_core::Result<BTreeSet<BitSet>> {
    let z = center(g);
    Ok(all_subgroups(g, bound)?
        .into_iter()
        .filter(|h| z.is_subgroup_of(h))
        .map(|h| h.into_bits())
        .collect())
}

fn orders(l: &CdLattice) -> Vec<usize> {
    l.members().iter().map(|m| m.order()).collect()
}

fn s4_claim() -> ClaimResult {
    claim("s4-two-chain", || {
        let l = cd_lattice(&sym(4)?)?;
        ensure(orders(&l) == [1, 24], || format!("member orders {:?}", orders(&l)))?;
        ensure(l.is_cd_simple(), || "not CD-simple".into())?;
        Ok("CD(S4) = {1, S4}".into())
    })
}

fn extraspecial_claims() -> Vec<ClaimResult> {
    let mut out = vec![claim("q8-width3", || {
        let g = q8();
        let l = cd_lattice(&g)?;
        ensure(l.len() == 5, || format!("{} members", l.len()))?;
        ensure(member_bits(&l) == above_center(&g, 8)?, || "members differ from subgroups above Z".into())?;
        let w = quasi_antichain_width(&l.to_abstract());
        ensure(w == Some(3), || format!("width {w:?}"))?;
        Ok("5 members above Z(Q8), M3".into())
    })];
    for (p, kind, width) in [
        (2, Extraspecial::Plus, 3),
        (2, Extraspecial::Minus, 3),
        (3, Extraspecial::Plus, 4),
        (3, Extraspecial::Minus, 4),
    ] {
        let id = format!("extraspecial[{}^3,{}]", p, if kind == Extraspecial::Plus { "plus" } else { "minus" });
        out.push(claim(id, || {
            let g = extraspecial(p, kind)?;
            let l = cd_lattice(&g)?;
            let expected = above_center(&g, g.order())?;
            ensure(member_bits(&l) == expected, || {
                format!("{} members, {} subgroups above Z", l.len(), expected.len())
            })?;
            let w = quasi_antichain_width(&l.to_abstract());
            ensure(w == Some(width), || format!("width {w:?}, expected {width}"))?;
            Ok(format!("{} members, width {width}", l.len()))
        }));
    }
    out
}

fn ut_claims(cfg: &RunConfig) -> Vec<ClaimResult> {
    [(2u32, 1u32), (3, 1), (2, 2), (5, 1), (3, 2)]
        .into_par_iter()
        .map(|(p, n)| {
            claim(format!("ut-width[{p},{n}]"), || {
                let q = p.pow(n) as usize;
                let g = unitriangular(p, n)?;
                ensure(g.order() == q * q * q, || format!("|G| = {}", g.order()))?;
                let l = cd_lattice_capped(&g, cfg.family_cap)?;
                let w = quasi_antichain_width(&l.to_abstract());
                ensure(w == Some(q + 1), || format!("width {w:?}, expected {}", q + 1))?;
                for m in &l.members()[1..l.len() - 1] {
                    ensure(is_abelian(&g, &m.subgroup), || format!("nonabelian middle member of order {}", m.order()))?;
                }
                Ok(format!("M{} with abelian middles", q + 1))
            })
        })
        .collect()
}

fn prop9_claims() -> Vec<ClaimResult> {
    let faithful = |c: &Component| -> Result<(), Failure> {
        let a = center_action(c);
        ensure(a.faithful && a.irreducible, || {
            format!("faithful = {}, irreducible = {}", a.faithful, a.irreducible)
        })
    };
    vec![
        claim("prop9[2,2]", || {
            let c = prop9_action(2, 2)?;
            ensure(c.t().order() == 6, || format!("|T| = {}", c.t().order()))?;
            ensure(find_isomorphism(c.t(), &*sym(3)?).is_some(), || "T not isomorphic to S3".into())?;
            faithful(&c)?;
            Ok("T = S3, faithful and irreducible on Z(P)".into())
        }),
        claim("prop9[3,2]", || {
            let c = prop9_action(3, 2)?;
            let t = c.t();
            ensure(t.order() == 16, || format!("|T| = {}", t.order()))?;
            ensure(find_isomorphism(t, &qd16()).is_some(), || "T not isomorphic to QD16".into())?;
            let (r, s) = (c.h_gen, c.k_gen);
            ensure(
                t.element_order(r) == 8 && t.pow(s, 2) == 0 && t.mul(t.mul(s, r), s) == t.pow(r, 3),
                || "presentation r^8 = s^2 = 1, srs = r^3 fails".into(),
            )?;
            faithful(&c)?;
            Ok("T = QD16, faithful and irreducible on Z(P)".into())
        }),
    ]
}

fn m3_cubed() -> cdlat_core::Result<AbstractLattice> {
    let m3 = mk_quasi_antichain(3)?;
    cartesian(&cartesian(&m3, &m3)?, &m3)
}

fn brewster_claim(cfg: &RunConfig) -> ClaimResult {
    claim("brewster", || {
        let c = brewster()?;
        let p = c.p();
        ensure(p.order() == 256, || format!("|P| = {}", p.order()))?;
        let l = cd_lattice_capped(p, cfg.family_cap)?;
        ensure(l.len() == 125, || format!("{} members", l.len()))?;

        let (_, proj) = brewster_quotient()?;
        let q = cd_lattice(&q8())?;
        let qm: Vec<&BitSet> = q.subgroups().map(|h| h.bits()).collect();
        let mut expected = BTreeSet::new();
        for x in &qm {
            for y in &qm {
                for z in &qm {
                    expected.insert(proj.image_of(&product_subset(&[8, 8, 8], &[x, y, z])));
                }
            }
        }
        ensure(member_bits(&l) == expected, || "members differ from (X x Y x Z)/D".into())?;

        let abs = l.to_abstract();
        ensure(is_isomorphic_within(&abs, &m3_cubed()?, cfg.iso_budget)?.is_some(), || {
            "not isomorphic to M3^3".into()
        })?;
        let fs = factorize(&abs)?;
        ensure(fs.len() == 3 && fs.iter().all(|f| quasi_antichain_width(f) == Some(3)), || {
            format!("factor sizes {:?}", fs.iter().map(|f| f.len()).collect::<Vec<_>>())
        })?;
        Ok("125 members = (X x Y x Z)/D, M3 x M3 x M3".into())
    })
}

/// `adjoin_bounds(L1 × L2 × L3)`.
fn predicted(ls: [&AbstractLattice; 3]) -> cdlat_core::Result<AbstractLattice> {
    Ok(adjoin_bounds(&cartesian(&cartesian(ls[0], ls[1])?, ls[2])?))
}

fn s0_claim(cfg: &RunConfig) -> ClaimResult {
    claim("thm2-s0", || {
        let s = s0()?;
        let g = &s.group;
        ensure(g.order() == 20736 && g.order() == (1 << 8) * 81, || format!("|S0| = {}", g.order()))?;
        let l = cd_lattice_capped(g, cfg.family_cap)?;
        ensure(orders(&l) == [1, 144, 20736], || format!("member orders {:?}", orders(&l)))?;
        ensure(l.mstar() == 20736, || format!("m* = {}", l.mstar()))?;
        let a = &l.members()[1].subgroup;
        ensure(is_abelian(g, a), || "A is not abelian".into())?;
        ensure(*a == s.p_product(), || "A differs from P1 x P2 x P3".into())?;
        ensure(cd_subgroup(g)?.is_trivial(), || "CD subgroup is not trivial".into())?;
        ensure(l.is_cd_minimal()?, || "not CD-minimal".into())?;
        ensure(!l.is_cd_simple(), || "CD-simple".into())?;
        let abs = l.to_abstract();
        ensure(quasi_antichain_width(&abs) == Some(1), || "not M1".into())?;
        ensure(factorize(&abs)?.len() == 1, || "lattice decomposes".into())?;
        let parts: Vec<AbstractLattice> = s
            .components
            .iter()
            .map(|c| Ok(cd_lattice(c.p())?.to_abstract()))
            .collect::<cdlat_core::Result<_>>()?;
        let expect = predicted([&parts[0], &parts[1], &parts[2]])?;
        ensure(is_isomorphic_within(&abs, &expect, cfg.iso_budget)?.is_some(), || {
            "differs from the predicted lattice".into()
        })?;
        Ok("CD(S0) = {1, A, S0}, |A| = 144, M1".into())
    })
}

fn exponent_of(n: usize, p: usize) -> Option<u32> {
    let (mut n, mut e) = (n, 0);
    while n > 1 && n % p == 0 {
        n /= p;
        e += 1;
    }
    (n == 1).then_some(e)
}

struct Prepared {
    component: Component,
    hypotheses: Result<(), String>,
    lattice: AbstractLattice,
}

fn prepare(c: cdlat_core::Result<Component>, cfg: &RunConfig) -> cdlat_core::Result<Prepared> {
    let component = c?;
    let report = hypothesis_check(&component, component.prime, 2);
    let hypotheses = if report.passed() { Ok(()) } else { Err(report.to_string()) };
    let lattice = cd_lattice_capped(component.p(), cfg.family_cap)?.to_abstract();
    Ok(Prepared {
        component,
        hypotheses,
        lattice,
    })
}

/// Every triple from {minimal(2), prop9(2,2), brewster}² × {minimal(3),
/// prop9(3,2)}, checked at the component level with the predicted lattice.
fn theorem2_claims(cfg: &RunConfig) -> Vec<ClaimResult> {
    type Build = fn() -> cdlat_core::Result<Component>;
    let builders: [(Build, usize); 5] = [
        (|| minimal(2), 0),
        (|| prop9_action(2, 2), 5),
        (brewster, 0),
        (|| minimal(3), 0),
        (|| prop9_action(3, 2), 10),
    ];
    let prepared: Vec<cdlat_core::Result<Prepared>> =
        builders.par_iter().map(|(b, _)| prepare(b(), cfg)).collect();

    let mut out = vec![claim("thm2-components", || {
        let mut names = Vec::new();
        for (p, (_, width)) in prepared.iter().zip(&builders) {
            let p = p.as_ref().map_err(|e| Failure::Claim(e.to_string()))?;
            let name = &p.component.name;
            let l = &p.lattice;
            let ok = if p.component.name == "brewster" {
                is_isomorphic_within(l, &m3_cubed()?, cfg.iso_budget)?.is_some()
            } else if *width == 0 {
                l.len() == 1
            } else {
                quasi_antichain_width(l) == Some(*width)
            };
            ensure(ok, || format!("CD(P) of {name} has {} elements", l.len()))?;
            names.push(name.clone());
        }
        Ok(format!("CD(P) shapes for {}", names.join(", ")))
    })];

    let twos = [0usize, 1, 2];
    let threes = [3usize, 4];
    for &i in &twos {
        for &j in &twos {
            for &k in &threes {
                let triple = [&prepared[i], &prepared[j], &prepared[k]];
                let names: Vec<String> = triple
                    .iter()
                    .map(|p| p.as_ref().map(|p| p.component.name.clone()).unwrap_or_else(|_| "?".into()))
                    .collect();
                out.push(claim(format!("thm2[{}]", names.join(";")), || {
                    let ps: Vec<&Prepared> = triple
                        .iter()
                        .map(|p| p.as_ref().map_err(|e| Failure::Claim(e.to_string())))
                        .collect::<Result<_, _>>()?;
                    for p in &ps {
                        if let Err(why) = &p.hypotheses {
                            return Err(Failure::Claim(format!("hypotheses: {why}")));
                        }
                    }
                    let e = |p: &Prepared, q: usize| {
                        exponent_of(p.component.p().order(), q)
                            .ok_or_else(|| Failure::Claim(format!("|P| of {} not a {q}-power", p.component.name)))
                    };
                    let (a, b, c) = (e(ps[0], 2)?, e(ps[1], 2)?, e(ps[2], 3)?);
                    let order = theorem2_order([&ps[0].component, &ps[1].component, &ps[2].component]);
                    let formula = 2u64.pow(a + b + 4) * 3u64.pow(c + 2);
                    ensure(order == formula, || format!("|S| = {order}, formula gives {formula}"))?;

                    let l = predicted([&ps[0].lattice, &ps[1].lattice, &ps[2].lattice])?;
                    let inner = ps.iter().map(|p| p.lattice.len()).product::<usize>();
                    ensure(l.len() == inner + 2, || format!("predicted lattice has {} elements", l.len()))?;
                    ensure(is_modular(&l).is_ok(), || "predicted lattice not modular".into())?;
                    ensure(atoms(&l).len() == 1 && coatoms(&l).len() == 1, || {
                        "predicted lattice has several atoms or coatoms".into()
                    })?;
                    ensure(factorize(&l)?.len() == 1, || "predicted lattice decomposes".into())?;
                    ensure(complemented_elements(&l) == [0, l.len() - 1], || {
                        "complemented elements beyond top and bottom".into()
                    })?;
                    Ok(format!("|S| = 2^{} 3^{} = {order}, |CD(S)| = {}", a + b + 4, c + 2, l.len()))
                }));
            }
        }
    }
    out
}

/// The 12 predicted lattices, rows in table order: `P3` outermost, then
/// unordered pairs `(P1, P2)` from `M0`, `M5`, `M3^3`.
pub fn table12_lattices() -> cdlat_core::Result<Vec<AbstractLattice>> {
    let twos = [mk_quasi_antichain(0)?, mk_quasi_antichain(5)?, m3_cubed()?];
    let threes = [mk_quasi_antichain(0)?, mk_quasi_antichain(10)?];
    let mut out = Vec::new();
    for p3 in &threes {
        for i in 0..twos.len() {
            for p2 in &twos[i..] {
                out.push(predicted([&twos[i], p2, p3])?);
            }
        }
    }
    Ok(out)
}

/// Sizes of the 12 predicted lattices: `|L1||L2||L3| + 2`.
pub const TABLE12_SIZES: [usize; 12] = [3, 9, 127, 51, 877, 15627, 14, 86, 1502, 590, 10502, 187502];

fn table12_claims(cfg: &RunConfig) -> Vec<ClaimResult> {
    let lattices = table12_lattices();
    vec![
        claim("table12-sizes", || {
            let ls = lattices.as_ref().map_err(|e| Failure::Claim(e.to_string()))?;
            let sizes: Vec<usize> = ls.iter().map(|l| l.len()).collect();
            ensure(sizes == TABLE12_SIZES, || format!("sizes {sizes:?}"))?;
            for (i, l) in ls.iter().enumerate() {
                ensure(is_modular(l).is_ok(), || format!("row {} not modular", i + 1))?;
                ensure(atoms(l).len() == 1, || format!("row {} has several atoms", i + 1))?;
            }
            Ok(format!("sizes {sizes:?}"))
        }),
        claim("table12-distinct", || {
            let ls = lattices.as_ref().map_err(|e| Failure::Claim(e.to_string()))?;
            let mut pairs = 0;
            for i in 0..ls.len() {
                for j in i + 1..ls.len() {
                    ensure(is_isomorphic_within(&ls[i], &ls[j], cfg.iso_budget)?.is_none(), || {
                        format!("rows {} and {} are isomorphic", i + 1, j + 1)
                    })?;
                    pairs += 1;
                }
            }
            Ok(format!("{pairs} pairs non-isomorphic"))
        }),
        claim("table12-self-dual", || {
            let ls = lattices.as_ref().map_err(|e| Failure::Claim(e.to_string()))?;
            let mut checked = 0;
            for (i, l) in ls.iter().enumerate() {
                match is_self_dual_within(l, cfg.iso_budget) {
                    Ok(Some(_)) => checked += 1,
                    Ok(None) => return Err(Failure::Claim(format!("row {} not self-dual", i + 1))),
                    Err(Error::Capacity { .. }) => {}
                    Err(e) => return Err(e.into()),
                }
            }
            Ok(format!("{checked} rows within search range are self-dual"))
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn criterion_numbering() {
        let cfg = RunConfig::default();
        let r = criterion(2, &cfg);
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].id, "s4-two-chain");
        assert!(criterion(11, &cfg)[0].is_fail());
    }

    #[test]
    fn errors_and_panics_become_results() {
        let r = claim("x", || Err(Error::capacity("thing", 3).into()));
        assert_eq!(r.status, cdlat_core::cd::ClaimStatus::Skipped);
        let r = claim("x", || Err(Error::Internal("bad".into()).into()));
        assert!(r.is_fail());
        let r = claim("x", || panic!("boom"));
        assert!(r.is_fail());
    }

    #[test]
    fn table_rows_have_predicted_sizes() {
        let sizes: Vec<usize> = table12_lattices().unwrap().iter().map(|l| l.len()).collect();
        assert_eq!(sizes, TABLE12_SIZES);
    }
}
