//! Actions `T = [H]K` on `p`-groups `P` used as inputs to the subdirect
//! construction, and the construction itself.
//!
//! A [`Component`] bundles `P`, the acting group `T`, its action, the
//! normal subgroup `H` and complement `K`, and the semidirect product
//! `[P]T` (index `t·|P| + n`).

use std::fmt;
use std::sync::Arc;

use crate::bitset::BitSet;
use crate::cd::cd_lattice;
use crate::error::{Error, Result};
use crate::group::{
    automorphism_group, center, closure, direct_product, generated_action, is_normal, product_subset,
    quotient_named, semidirect_product, subgroup_as_group, sylow_subgroup, Elem, FiniteGroup, GroupAction,
    GroupMap, Subgroup, AUTOMORPHISM_BOUND, ORACLE_BOUND,
};

use super::field::{is_prime, make_field};
use super::named::{elemab, q8, sym};
use super::unitriangular::{unitriangular_over, UtElement};

/// Upper bound on `|G1||G2||G3|` for [`theorem2_build`], which filters the
/// full direct product.
pub const THEOREM2_CANDIDATE_LIMIT: u64 = 1 << 21;

#[derive(Clone, Debug)]
pub struct Component {
    pub name: String,
    pub prime: u32,
    pub action: GroupAction,
    /// `⟨h_gen⟩ = H`, normal in `T`.
    pub h: Subgroup,
    pub h_gen: Elem,
    /// `⟨k_gen⟩ = K`, a complement to `H`.
    pub k: Subgroup,
    pub k_gen: Elem,
    /// `[P]T`.
    pub semidirect: Arc<FiniteGroup>,
}

impl Component {
    fn new(name: String, prime: u32, action: GroupAction, h_gen: Elem, k_gen: Elem) -> Result<Self> {
        let t = action.acting().clone();
        let h = closure(&t, &[h_gen as usize])?;
        let k = closure(&t, &[k_gen as usize])?;
        let semidirect = semidirect_product(&action)?;
        Ok(Component {
            name,
            prime,
            action,
            h,
            h_gen,
            k,
            k_gen,
            semidirect,
        })
    }

    pub fn p(&self) -> &Arc<FiniteGroup> {
        self.action.target()
    }

    pub fn t(&self) -> &Arc<FiniteGroup> {
        self.action.acting()
    }

    /// `[P]H` inside `[P]T`.
    pub fn ph(&self) -> Subgroup {
        let np = self.p().order();
        let bits = BitSet::from_indices(
            self.semidirect.order(),
            self.h.elements().flat_map(|t| (0..np).map(move |n| t as usize * np + n)),
        );
        Subgroup::from_bits_unchecked(bits)
    }

    /// `P` inside `[P]T`.
    pub fn p_in_semidirect(&self) -> Subgroup {
        let bits = BitSet::from_indices(self.semidirect.order(), 0..self.p().order());
        Subgroup::from_bits_unchecked(bits)
    }

    /// The order-2 quotient `[P]T → T/H`; true off `[P]H`.
    #[inline]
    pub fn phi(&self, x: Elem) -> bool {
        !self.h.contains(x / self.p().order() as u32)
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

fn index_of_table(action: &GroupAction, table: &[Elem]) -> Result<Elem> {
    action
        .tables()
        .iter()
        .position(|m| m.as_slice() == table)
        .map(|i| i as Elem)
        .ok_or_else(|| Error::Internal("generator missing from generated action".into()))
}

/// `UT(3, p^n)` with `T = [⟨r⟩]⟨s⟩`, where `r: (a,b,c) ↦ (xa, xb, c)` for a
/// generator `x` of the unit group and `s` is the coordinatewise Frobenius
/// map. `|T| = n(p^n - 1)`, `r` has order `p^n - 1`, `s` has order `n` and
/// `s^{-1} r s = r^p`.
pub fn prop9_action(p: u32, n: u32) -> Result<Component> {
    let field = Arc::new(make_field(p, n)?);
    let q = field.order();
    let x = field.generator();
    let pg = Arc::new(unitriangular_over(field.clone())?);
    let r_table: Vec<Elem> = pg
        .elements()
        .map(|e| {
            let u = UtElement::from_index(e, q);
            UtElement {
                a: field.mul(x, u.a),
                b: field.mul(x, u.b),
                c: u.c,
            }
            .index(q)
        })
        .collect();
    let s_table: Vec<Elem> = pg
        .elements()
        .map(|e| {
            let u = UtElement::from_index(e, q);
            UtElement {
                a: field.frobenius(u.a),
                b: field.frobenius(u.b),
                c: field.frobenius(u.c),
            }
            .index(q)
        })
        .collect();
    let action = generated_action(&pg, &[r_table.clone(), s_table.clone()], format!("T{p},{n}"))?;
    let t = action.acting().clone();
    let (r, s) = (index_of_table(&action, &r_table)?, index_of_table(&action, &s_table)?);
    if t.order() != (n * (q - 1)) as usize
        || t.element_order(r) != (q - 1) as usize
        || t.element_order(s) != n as usize
        || t.conj(r, s) != t.pow(r, p as u64)
    {
        return Err(Error::Internal(format!("prop9({p},{n}) relations fail")));
    }
    let c = Component::new(format!("prop9({p},{n})"), p, action, r, s)?;
    let report = center_action(&c);
    if !(report.faithful && report.irreducible) {
        return Err(Error::Internal(format!("prop9({p},{n}) does not act faithfully and irreducibly")));
    }
    Ok(c)
}

/// The projection `Q8 × Q8 × Q8 → P` onto the Brewster group, with its
/// source (index `64a + 8b + c`).
pub fn brewster_quotient() -> Result<(Arc<FiniteGroup>, GroupMap)> {
    let q = q8();
    let (cube, _) = direct_product(&[q.clone(), q.clone(), q])?;
    // -1 has index 2 in Q8; (−1,−1,−1) = 2·64 + 2·8 + 2.
    let d = closure(&cube, &[2 * 64 + 2 * 8 + 2])?;
    let (_, proj) = quotient_named(&cube, &d, "Brewster")?;
    Ok((cube, proj))
}

/// `P = (Q8 × Q8 × Q8)/D` with `D = {(z,z,z) : z ∈ Z(Q8)}` and `T = S3`
/// permuting coordinates, `(σx)_i = x_{σ^{-1}(i)}`. `H = A3`, `K = ⟨(0 1)⟩`.
pub fn brewster() -> Result<Component> {
    let (_, proj) = brewster_quotient()?;
    let pg = proj.target().clone();
    let s3 = sym(3)?;
    let reps: Vec<Elem> = pg
        .elements()
        .map(|c| match pg.label(c) {
            crate::group::Label::Coset(r) => *r,
            _ => unreachable!(),
        })
        .collect();
    let maps = s3
        .elements()
        .map(|sigma| {
            let perm = match s3.label(sigma) {
                crate::group::Label::Perm(p) => p.clone(),
                _ => unreachable!(),
            };
            let mut inv = [0usize; 3];
            for (i, &v) in perm.iter().enumerate() {
                inv[v as usize] = i;
            }
            reps.iter()
                .map(|&r| {
                    let coords = [r / 64, (r / 8) % 8, r % 8];
                    let moved: Vec<u32> = (0..3).map(|i| coords[inv[i]]).collect();
                    proj.apply(moved[0] * 64 + moved[1] * 8 + moved[2])
                })
                .collect()
        })
        .collect();
    let action = GroupAction::new(s3.clone(), pg, maps)?;
    let a3 = s3
        .elements()
        .find(|&x| s3.element_order(x) == 3)
        .ok_or_else(|| Error::Internal("S3 has no 3-cycle".into()))?;
    let swap01 = s3
        .elements()
        .find(|&x| matches!(s3.label(x), crate::group::Label::Perm(p) if p.as_slice() == [1, 0, 2]))
        .ok_or_else(|| Error::Internal("S3 has no (0 1)".into()))?;
    Component::new("brewster".into(), 2, action, a3, swap01)
}

/// The smallest choices: `P = Z2 × Z2` with `T = Aut(P) ≅ S3`, or
/// `P = Z3 × Z3` with `T` a Sylow 2-subgroup of `Aut(P)` (≅ QD16).
pub fn minimal(p: u32) -> Result<Component> {
    let pg = elemab(p as usize, 2)?;
    let aut = automorphism_group(&pg, AUTOMORPHISM_BOUND)?;
    match p {
        2 => {
            let t = aut.acting().clone();
            let h_gen = t.elements().find(|&x| t.element_order(x) == 3).unwrap();
            let k_gen = t.elements().find(|&x| t.element_order(x) == 2).unwrap();
            Component::new("minimal(2)".into(), 2, aut, h_gen, k_gen)
        }
        3 => {
            let full = aut.acting().clone();
            let syl = sylow_subgroup(&full, 2, ORACLE_BOUND)?;
            let (t, incl) = subgroup_as_group(&full, &syl, "Syl2(Aut(E3^2))")?;
            let action = aut.restrict_acting(&t, &incl)?;
            let h_gen = t
                .elements()
                .find(|&x| t.element_order(x) == 8)
                .ok_or_else(|| Error::Internal("Sylow 2-subgroup has no element of order 8".into()))?;
            let h = closure(&t, &[h_gen as usize])?;
            let k_gen = t
                .elements()
                .find(|&x| t.element_order(x) == 2 && !h.contains(x))
                .ok_or_else(|| Error::Internal("no complement of order 2".into()))?;
            Component::new("minimal(3)".into(), 3, action, h_gen, k_gen)
        }
        _ => Err(Error::Precondition(format!("minimal({p}) is defined for p = 2, 3"))),
    }
}

/// Faithfulness and irreducibility of `T` on `Z(P)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterAction {
    pub center_order: usize,
    pub faithful: bool,
    pub irreducible: bool,
}

/// A nontrivial `T`-invariant subgroup of `Z(P)` contains the invariant
/// closure of each of its nonidentity elements, so irreducibility is
/// decided by checking that every such closure is all of `Z(P)`.
pub fn center_action(c: &Component) -> CenterAction {
    let pg = c.p();
    let z = center(pg);
    let faithful = c.action.kernel_on(z.bits()).order() == 1;
    let t = c.t();
    let irreducible = z.order() > 1
        && z.elements().skip(1).all(|x| {
            let orbit: Vec<usize> = t.elements().map(|s| c.action.apply(s, x) as usize).collect();
            closure(pg, &orbit).map(|s| s.order() == z.order()).unwrap_or(false)
        });
    CenterAction {
        center_order: z.order(),
        faithful,
        irreducible,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clause {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of [`hypothesis_check`], one entry per hypothesis clause.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisReport {
    pub component: String,
    pub clauses: Vec<Clause>,
}

impl HypothesisReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for HypothesisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.component)?;
        for c in &self.clauses {
            write!(f, " {}={}", c.name, if c.passed { "ok" } else { "FAIL" })?;
        }
        Ok(())
    }
}

fn prime_power_exponent(n: usize, p: usize) -> Option<u32> {
    let (mut n, mut e) = (n, 0);
    while n > 1 && n % p == 0 {
        n /= p;
        e += 1;
    }
    (n == 1).then_some(e)
}

/// Expected `(|H|, |K|)` for each prime.
pub fn expected_hk(p: u32) -> Option<(usize, usize)> {
    match p {
        2 => Some((3, 2)),
        3 => Some((8, 2)),
        _ => None,
    }
}

/// Checks the component hypotheses: `P` a `p`-group with `P ∈ CD(P)`,
/// `Z(P)` elementary abelian of the given rank, `T = [H]K` with the
/// expected orders, and `T` faithful and irreducible on `Z(P)`.
pub fn hypothesis_check(c: &Component, expected_prime: u32, expected_center_rank: u32) -> HypothesisReport {
    let mut clauses = Vec::new();
    let mut push = |name, passed, detail: String| clauses.push(Clause { name, passed, detail });
    let pg = c.p();
    let p = expected_prime as usize;

    let exp = prime_power_exponent(pg.order(), p);
    push("p-group", is_prime(p as u64) && exp.is_some(), format!("|P| = {}", pg.order()));

    match cd_lattice(pg) {
        Ok(l) => push(
            "P in CD(P)",
            l.top().subgroup.order() == pg.order(),
            format!("m*(P) = {}, |P||Z(P)| = {}", l.mstar(), pg.order() * center(pg).order()),
        ),
        Err(e) => push("P in CD(P)", false, format!("CD(P) not computed: {e}")),
    }

    let z = center(pg);
    let elementary = z.elements().all(|x| pg.element_order(x) <= p);
    let rank = prime_power_exponent(z.order(), p);
    push(
        "center elementary abelian",
        elementary && rank == Some(expected_center_rank),
        format!("|Z(P)| = {}, expected {}^{}", z.order(), p, expected_center_rank),
    );

    let t = c.t();
    let (h, k) = (&c.h, &c.k);
    let orders_ok = expected_hk(expected_prime) == Some((h.order(), k.order()));
    let split = is_normal(t, h) && h.intersection(k).is_trivial() && h.order() * k.order() == t.order();
    push(
        "T = [H]K",
        orders_ok && split,
        format!("|T| = {}, |H| = {}, |K| = {}", t.order(), h.order(), k.order()),
    );

    let ca = center_action(c);
    push("faithful on Z(P)", ca.faithful, format!("kernel order {}", c.action.kernel_on(z.bits()).order()));
    push("irreducible on Z(P)", ca.irreducible, String::new());

    HypothesisReport {
        component: c.name.clone(),
        clauses,
    }
}

/// `|S| = |G1||G2||G3| / 4`.
pub fn theorem2_order(c: [&Component; 3]) -> u64 {
    c.iter().map(|x| x.semidirect.order() as u64).product::<u64>() / 4
}

/// The realized subdirect product and its embedding data.
#[derive(Clone, Debug)]
pub struct Theorem2Group {
    pub group: Arc<FiniteGroup>,
    /// `G1 × G2 × G3`.
    pub ambient: Arc<FiniteGroup>,
    /// `S → G1 × G2 × G3`.
    pub inclusion: GroupMap,
    pub components: [Component; 3],
}

impl Theorem2Group {
    /// `P1 × P2 × P3` as a subgroup of `S`.
    pub fn p_product(&self) -> Subgroup {
        let orders: Vec<usize> = self.components.iter().map(|c| c.semidirect.order()).collect();
        let ps: Vec<BitSet> = self.components.iter().map(|c| c.p_in_semidirect().into_bits()).collect();
        let bits = product_subset(&orders, &ps.iter().collect::<Vec<_>>());
        self.pull_back(&bits)
    }

    /// `X1 × X2 × X3` (subgroups of the `P_i`) as a subgroup of `S`.
    pub fn product_of(&self, parts: [&BitSet; 3]) -> Subgroup {
        let orders: Vec<usize> = self.components.iter().map(|c| c.semidirect.order()).collect();
        let bits = product_subset(&orders, &parts);
        self.pull_back(&bits)
    }

    fn pull_back(&self, ambient_bits: &BitSet) -> Subgroup {
        let bits = BitSet::from_indices(
            self.group.order(),
            self.group
                .elements()
                .filter(|&x| ambient_bits.contains(self.inclusion.apply(x) as usize))
                .map(|x| x as usize),
        );
        Subgroup::from_bits_unchecked(bits)
    }
}

/// `S = {(g1,g2,g3) : φ1(g1) = φ2(g2) = φ3(g3)}` where `φ_i` is the
/// order-2 quotient of `G_i = [P_i]T_i` with kernel `[P_i]H_i`.
///
/// Verifies `π_i(S) = G_i` and `S ∩ G_i = [P_i]H_i`.
pub fn theorem2_build(components: [Component; 3]) -> Result<Theorem2Group> {
    let name = format!(
        "thm2({};{};{})",
        components[0].name, components[1].name, components[2].name
    );
    theorem2_build_named(components, name)
}

fn theorem2_build_named(components: [Component; 3], name: String) -> Result<Theorem2Group> {
    for c in &components {
        let t = c.t();
        if c.h.order() * 2 != t.order() || !is_normal(t, &c.h) {
            return Err(Error::Precondition(format!("{}: H is not of index 2 in T", c.name)));
        }
    }
    let candidates: u64 = components.iter().map(|c| c.semidirect.order() as u64).product();
    if candidates > THEOREM2_CANDIDATE_LIMIT {
        return Err(Error::capacity("subdirect product candidates", THEOREM2_CANDIDATE_LIMIT));
    }
    let gs: Vec<Arc<FiniteGroup>> = components.iter().map(|c| c.semidirect.clone()).collect();
    let (ambient, projections) = direct_product(&gs)?;
    let members = BitSet::from_indices(
        ambient.order(),
        ambient.elements().filter_map(|x| {
            let phis: Vec<bool> = components
                .iter()
                .zip(&projections)
                .map(|(c, pr)| c.phi(pr.apply(x)))
                .collect();
            (phis[0] == phis[1] && phis[1] == phis[2]).then_some(x as usize)
        }),
    );
    let sub = Subgroup::from_bits_unchecked(members);
    let (group, inclusion) = subgroup_as_group(&ambient, &sub, name)?;

    for (i, (c, pr)) in components.iter().zip(&projections).enumerate() {
        let image = pr.image_of(sub.bits());
        if image.count() != c.semidirect.order() {
            return Err(Error::Internal(format!("S does not project onto G{}", i + 1)));
        }
        let inside: Vec<usize> = sub
            .elements()
            .filter(|&x| projections.iter().enumerate().all(|(j, q)| j == i || q.apply(x) == 0))
            .map(|x| pr.apply(x) as usize)
            .collect();
        let inside = BitSet::from_indices(c.semidirect.order(), inside);
        if &inside != c.ph().bits() {
            return Err(Error::Internal(format!("S ∩ G{} differs from [P]H", i + 1)));
        }
    }
    Ok(Theorem2Group {
        group,
        ambient,
        inclusion,
        components,
    })
}

/// `S0`, built from `minimal(2)`, `minimal(2)`, `minimal(3)`.
pub fn s0() -> Result<Theorem2Group> {
    theorem2_build_named([minimal(2)?, minimal(2)?, minimal(3)?], "S0".into())
}
