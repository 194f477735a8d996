//! Chermak-Delgado measure and lattice.
//!
//! `m_G(H) = |H||C_G(H)|`. Every subgroup of maximum measure satisfies
//! `H = C_G(C_G(H))` and is therefore an intersection of element
//! centralizers, so `CD(G)` is read off the intersection-closure of
//! `{C_G(g)} ∪ {G}` without enumerating subgroups.

mod audit;

use std::collections::HashMap;
use std::sync::Arc;

pub use audit::{product_claims, property_audit, ClaimResult, ClaimStatus};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::{
    all_subgroups, center, centralizer_of_subgroup, is_abelian, is_directly_indecomposable, is_normal, Elem,
    FiniteGroup, Subgroup,
};
use crate::lattice::{abstract_of, AbstractLattice};

/// Default cap on the size of the centralizer family.
pub const FAMILY_CAP: usize = 200_000;

/// Largest group order for which measures are guaranteed to fit in 64 bits.
pub const MAX_MEASURED_ORDER: usize = 1 << 31;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeasuredSubgroup {
    pub subgroup: Subgroup,
    pub centralizer: Subgroup,
    pub measure: u64,
}

impl MeasuredSubgroup {
    fn new(subgroup: Subgroup, centralizer: Subgroup) -> Self {
        let measure = subgroup.order() as u64 * centralizer.order() as u64;
        MeasuredSubgroup {
            subgroup,
            centralizer,
            measure,
        }
    }

    pub fn order(&self) -> usize {
        self.subgroup.order()
    }
}

fn guard_order(g: &FiniteGroup) -> Result<()> {
    if g.order() > MAX_MEASURED_ORDER {
        return Err(Error::capacity("group order for measure arithmetic", MAX_MEASURED_ORDER as u64));
    }
    Ok(())
}

pub fn measure(g: &FiniteGroup, h: &Subgroup) -> MeasuredSubgroup {
    MeasuredSubgroup::new(h.clone(), centralizer_of_subgroup(g, h))
}

/// Distinct element centralizers `D` with their fibers `{g : C_G(g) = D}`.
struct Fibers {
    cents: Vec<BitSet>,
    fibers: Vec<Vec<Elem>>,
}

impl Fibers {
    fn new(g: &FiniteGroup) -> Self {
        let mut index: HashMap<BitSet, usize> = HashMap::new();
        let mut cents = Vec::new();
        let mut fibers: Vec<Vec<Elem>> = Vec::new();
        for x in g.elements() {
            let c = g.element_centralizer(x);
            match index.get(&c) {
                Some(&i) => fibers[i].push(x),
                None => {
                    index.insert(c.clone(), cents.len());
                    cents.push(c);
                    fibers.push(vec![x]);
                }
            }
        }
        Fibers { cents, fibers }
    }

    /// `|C_G(X)|`: the elements whose centralizer contains `X`.
    fn centralizer_order(&self, x: &BitSet) -> usize {
        self.cents
            .iter()
            .zip(&self.fibers)
            .filter(|(d, _)| x.is_subset(d))
            .map(|(_, f)| f.len())
            .sum()
    }

    fn centralizer(&self, x: &BitSet) -> Subgroup {
        let mut bits = BitSet::new(x.len());
        for (d, f) in self.cents.iter().zip(&self.fibers) {
            if x.is_subset(d) {
                for &y in f {
                    bits.insert(y as usize);
                }
            }
        }
        Subgroup::from_bits_unchecked(bits)
    }
}

fn closure_under_intersection(g: &FiniteGroup, fibers: &Fibers, cap: usize) -> Result<Vec<BitSet>> {
    let mut seen: HashMap<BitSet, ()> = HashMap::new();
    let whole = BitSet::full(g.order());
    seen.insert(whole.clone(), ());
    let mut members = vec![whole];
    let mut i = 0;
    while i < members.len() {
        for d in &fibers.cents {
            if members[i].is_subset(d) {
                continue;
            }
            let y = members[i].intersection(d);
            if seen.contains_key(&y) {
                continue;
            }
            if members.len() >= cap {
                return Err(Error::capacity("centralizer family", cap as u64));
            }
            seen.insert(y.clone(), ());
            members.push(y);
        }
        i += 1;
    }
    Ok(members)
}

/// The intersection-closure of `{C_G(g) : g ∈ G} ∪ {G}`, sorted by
/// `(order, bitset)`.
pub fn centralizer_family(g: &FiniteGroup) -> Result<Vec<Subgroup>> {
    centralizer_family_capped(g, FAMILY_CAP)
}

pub fn centralizer_family_capped(g: &FiniteGroup, cap: usize) -> Result<Vec<Subgroup>> {
    let fibers = Fibers::new(g);
    let mut out: Vec<Subgroup> = closure_under_intersection(g, &fibers, cap)?
        .into_iter()
        .map(Subgroup::from_bits_unchecked)
        .collect();
    out.sort();
    Ok(out)
}

/// `CD(G)` with its inclusion order. Members are sorted by
/// `(order, bitset)`, so the least member is first and the greatest last.
#[derive(Clone, Debug)]
pub struct CdLattice {
    group: Arc<FiniteGroup>,
    members: Vec<MeasuredSubgroup>,
    mstar: u64,
    /// `up[i]` holds every `j` with `members[i] ⊆ members[j]`.
    up: Vec<BitSet>,
    covers: Vec<(usize, usize)>,
    centralizer_index: Vec<usize>,
}

impl CdLattice {
    /// Orders the members and verifies the lattice invariants.
    fn build(group: Arc<FiniteGroup>, mut members: Vec<MeasuredSubgroup>, center: &Subgroup) -> Result<Self> {
        let gname = group.name().to_string();
        let bad = |what: String| Err(Error::Internal(format!("CD({gname}): {what}")));
        if members.is_empty() {
            return bad("no members".into());
        }
        members.sort_by(|a, b| a.subgroup.cmp(&b.subgroup));
        let mstar = members[0].measure;
        if let Some(m) = members.iter().find(|m| m.measure != mstar) {
            return bad(format!("member of order {} has measure {} ≠ {}", m.order(), m.measure, mstar));
        }
        let m = members.len();
        let index: HashMap<&BitSet, usize> = members
            .iter()
            .enumerate()
            .map(|(i, x)| (x.subgroup.bits(), i))
            .collect();
        let mut up = vec![BitSet::new(m); m];
        for i in 0..m {
            for j in 0..m {
                if members[i].subgroup.is_subgroup_of(&members[j].subgroup) {
                    up[i].insert(j);
                }
            }
        }
        let mut centralizer_index = Vec::with_capacity(m);
        for x in &members {
            match index.get(x.centralizer.bits()) {
                Some(&j) => centralizer_index.push(j),
                None => return bad(format!("centralizer of a member of order {} is not a member", x.order())),
            }
        }
        for (i, &j) in centralizer_index.iter().enumerate() {
            if centralizer_index[j] != i {
                return bad("C(C(H)) ≠ H".into());
            }
        }
        for i in 0..m {
            for j in i + 1..m {
                let (h, k) = (&members[i].subgroup, &members[j].subgroup);
                let meet = h.intersection(k);
                if !index.contains_key(meet.bits()) {
                    return bad("not closed under intersection".into());
                }
                // The least common upper bound must be exactly HK.
                let uppers = up[i].intersection(&up[j]);
                let join = uppers.iter().min_by_key(|&u| members[u].order());
                let ok = join.is_some_and(|u| {
                    uppers.is_subset(&up[u]) && members[u].order() * meet.order() == h.order() * k.order()
                });
                if !ok {
                    return bad("not closed under products".into());
                }
            }
        }
        let mut covers = Vec::new();
        for i in 0..m {
            for j in up[i].iter().filter(|&j| j != i) {
                let between = up[i].iter().any(|k| k != i && k != j && up[k].contains(j));
                if !between {
                    covers.push((i, j));
                }
            }
        }
        let lat = CdLattice {
            group,
            members,
            mstar,
            up,
            covers,
            centralizer_index,
        };
        let g = &lat.group;
        let bottom = &lat.bottom().subgroup;
        if !center.is_subgroup_of(bottom) {
            return bad("least member does not contain Z(G)".into());
        }
        if !is_abelian(g, bottom) || !is_normal(g, bottom) {
            return bad("least member is not abelian and normal".into());
        }
        Ok(lat)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn members(&self) -> &[MeasuredSubgroup] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn mstar(&self) -> u64 {
        self.mstar
    }

    /// The Chermak-Delgado subgroup.
    pub fn bottom(&self) -> &MeasuredSubgroup {
        &self.members[0]
    }

    pub fn top(&self) -> &MeasuredSubgroup {
        &self.members[self.members.len() - 1]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    /// Covering pairs `(i, j)`: `members[i] < members[j]` with nothing
    /// strictly between.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Index of `C_G(members[i])`.
    pub fn centralizer_index(&self, i: usize) -> usize {
        self.centralizer_index[i]
    }

    pub fn index_of(&self, h: &Subgroup) -> Option<usize> {
        self.members.binary_search_by(|m| m.subgroup.cmp(h)).ok()
    }

    pub fn contains(&self, h: &Subgroup) -> bool {
        self.index_of(h).is_some()
    }

    pub fn subgroups(&self) -> impl Iterator<Item = &Subgroup> {
        self.members.iter().map(|m| &m.subgroup)
    }

    pub fn atoms(&self) -> Vec<usize> {
        self.covers.iter().filter(|c| c.0 == 0).map(|c| c.1).collect()
    }

    pub fn coatoms(&self) -> Vec<usize> {
        let top = self.len() - 1;
        self.covers.iter().filter(|c| c.1 == top).map(|c| c.0).collect()
    }

    /// `CD(G) = {1, G}`; true for the trivial group.
    pub fn is_cd_simple(&self) -> bool {
        let n = self.group.order();
        if n == 1 {
            return true;
        }
        self.len() == 2 && self.bottom().order() == 1 && self.top().order() == n
    }

    pub fn has_trivial_bottom(&self) -> bool {
        self.bottom().order() == 1
    }

    /// `1 ∈ CD(G)` and `G` directly indecomposable.
    pub fn is_cd_minimal(&self) -> Result<bool> {
        Ok(self.has_trivial_bottom() && is_directly_indecomposable(&self.group)?)
    }

    pub fn same_members(&self, other: &CdLattice) -> bool {
        self.mstar == other.mstar
            && self.len() == other.len()
            && self.subgroups().zip(other.subgroups()).all(|(a, b)| a == b)
    }

    pub fn to_abstract(&self) -> AbstractLattice {
        abstract_of(self)
    }
}

/// `CD(G)` from the centralizer family.
pub fn cd_lattice(g: &Arc<FiniteGroup>) -> Result<CdLattice> {
    cd_lattice_capped(g, FAMILY_CAP)
}

pub fn cd_lattice_capped(g: &Arc<FiniteGroup>, cap: usize) -> Result<CdLattice> {
    guard_order(g)?;
    let fibers = Fibers::new(g);
    let family = closure_under_intersection(g, &fibers, cap)?;
    let measured: Vec<(u64, &BitSet)> = family
        .iter()
        .map(|x| (x.count() as u64 * fibers.centralizer_order(x) as u64, x))
        .collect();
    let mstar = measured.iter().map(|m| m.0).max().unwrap_or(0);
    let members = measured
        .into_iter()
        .filter(|m| m.0 == mstar)
        .map(|(_, x)| MeasuredSubgroup::new(Subgroup::from_bits_unchecked(x.clone()), fibers.centralizer(x)))
        .collect();
    let center = fibers.centralizer(&BitSet::full(g.order()));
    CdLattice::build(g.clone(), members, &center)
}

/// `CD(G)` by measuring every subgroup. Refuses groups above `bound`.
pub fn cd_lattice_oracle(g: &Arc<FiniteGroup>, bound: usize) -> Result<CdLattice> {
    guard_order(g)?;
    let measured: Vec<MeasuredSubgroup> = all_subgroups(g, bound)?
        .into_iter()
        .map(|h| measure(g, &h))
        .collect();
    let mstar = measured.iter().map(|m| m.measure).max().unwrap_or(0);
    let members = measured.into_iter().filter(|m| m.measure == mstar).collect();
    CdLattice::build(g.clone(), members, &center(g))
}

pub fn cd_subgroup(g: &Arc<FiniteGroup>) -> Result<Subgroup> {
    Ok(cd_lattice(g)?.bottom().subgroup.clone())
}

pub fn is_cd_simple(g: &Arc<FiniteGroup>) -> Result<bool> {
    Ok(cd_lattice(g)?.is_cd_simple())
}

pub fn is_cd_minimal(g: &Arc<FiniteGroup>) -> Result<bool> {
    cd_lattice(g)?.is_cd_minimal()
}

/// A direct decomposition `G = H × K` read off a Cartesian factorization
/// of `CD(G)`: `H` and `K` are the members sent to `(top, bottom)` and
/// `(bottom, top)`. Requires `1 ∈ CD(G)`. `None` when the lattice is
/// indecomposable.
pub fn split_from_lattice(l: &CdLattice) -> Result<Option<(Subgroup, Subgroup)>> {
    if !l.has_trivial_bottom() {
        return Err(Error::Precondition("split_from_lattice needs 1 ∈ CD(G)".into()));
    }
    let lat = l.to_abstract();
    let Some((a, b)) = lat.central_pair() else {
        return Ok(None);
    };
    let (h, k) = (l.members[a].subgroup.clone(), l.members[b].subgroup.clone());
    let g = &l.group;
    if !(h.intersection(&k).is_trivial()
        && h.order() * k.order() == g.order()
        && is_normal(g, &h)
        && is_normal(g, &k))
    {
        return Err(Error::Internal("lattice factorization does not split the group".into()));
    }
    Ok(Some((h, k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo::{cyclic, dih, q8, sym};

    #[test]
    fn abelian_lattice_is_a_point() {
        let g = cyclic(6).unwrap();
        let l = cd_lattice(&g).unwrap();
        assert_eq!(l.len(), 1);
        assert_eq!(l.mstar(), 36);
        assert_eq!(centralizer_family(&g).unwrap().len(), 1);
    }

    #[test]
    fn q8_family_and_lattice() {
        let g = q8();
        let fam = centralizer_family(&g).unwrap();
        assert_eq!(fam.iter().map(|h| h.order()).collect::<Vec<_>>(), vec![2, 4, 4, 4, 8]);
        let l = cd_lattice(&g).unwrap();
        assert_eq!(l.len(), 5);
        assert_eq!(l.bottom().order(), 2);
        assert_eq!(l.mstar(), 16);
        assert_eq!(measure(&g, &crate::group::closure(&g, &[1]).unwrap()).measure, 16);
    }

    #[test]
    fn s4_is_cd_simple() {
        let g = sym(4).unwrap();
        let l = cd_lattice(&g).unwrap();
        assert!(l.is_cd_simple());
        assert!(l.is_cd_minimal().unwrap());
        assert_eq!(l.mstar(), 24);
        assert!(centralizer_family(&g).unwrap()[0].is_trivial());
        assert!(split_from_lattice(&l).unwrap().is_none());
    }

    #[test]
    fn d8_oracle_agrees() {
        let g = dih(4).unwrap();
        let fast = cd_lattice(&g).unwrap();
        let slow = cd_lattice_oracle(&g, 512).unwrap();
        assert!(fast.same_members(&slow));
        assert_eq!(fast.len(), 5);
    }

    #[test]
    fn family_cap_is_reported() {
        let g = sym(4).unwrap();
        assert!(matches!(centralizer_family_capped(&g, 2), Err(Error::Capacity { .. })));
    }
}
