use std::collections::HashMap;
use std::sync::Arc;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

use super::{
    strides_for, Closure, Elem, FiniteGroup, GroupAction, GroupMap, Label, Law, Subgroup, ABSENT,
    TABLE_LIMIT,
};

/// Default bound for exhaustive subgroup enumeration.
pub const ORACLE_BOUND: usize = 512;

/// Default bound for automorphism search.
pub const AUTOMORPHISM_BOUND: usize = 64;

/// Default cap on the number of normal subgroups enumerated.
pub const NORMAL_SUBGROUP_CAP: usize = 100_000;

/// Smallest subgroup containing `seed`.
pub fn closure(g: &FiniteGroup, seed: &[usize]) -> Result<Subgroup> {
    let mut c = Closure::new(g);
    for &x in seed {
        c.add(g.check_index(x)?);
    }
    Ok(c.into_subgroup())
}

/// A short generating set, preferring elements of large order.
pub fn generators(g: &FiniteGroup, h: &Subgroup) -> Vec<Elem> {
    let mut by_order: Vec<(usize, Elem)> = h.elements().map(|x| (g.element_order(x), x)).collect();
    by_order.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut c = Closure::new(g);
    for (_, x) in by_order {
        c.add(x);
        if c.order() == h.order() {
            break;
        }
    }
    c.into_parts().1
}

/// Generating set found by scanning in index order; cheaper than
/// [`generators`] on large subgroups.
pub fn generators_fast(g: &FiniteGroup, h: &Subgroup) -> Vec<Elem> {
    let mut c = Closure::new(g);
    for x in h.elements() {
        c.add(x);
        if c.order() == h.order() {
            break;
        }
    }
    c.into_parts().1
}

/// `C_G(S) = { g : gs = sg for all s in S }`.
pub fn centralizer(g: &FiniteGroup, s: &BitSet) -> Subgroup {
    let mut c = Closure::new(g);
    for x in s.iter() {
        c.add(x as Elem);
    }
    centralizer_of_generators(g, c.generators())
}

pub fn centralizer_of_generators(g: &FiniteGroup, gens: &[Elem]) -> Subgroup {
    let mut bits = BitSet::full(g.order());
    for &x in gens {
        bits.intersect_with(&g.element_centralizer(x));
    }
    Subgroup::from_bits_unchecked(bits)
}

pub fn centralizer_of_subgroup(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    centralizer_of_generators(g, &generators_fast(g, h))
}

pub fn center(g: &FiniteGroup) -> Subgroup {
    centralizer_of_subgroup(g, &Subgroup::whole(g))
}

pub fn is_abelian(g: &FiniteGroup, h: &Subgroup) -> bool {
    let gens = generators_fast(g, h);
    gens.iter()
        .enumerate()
        .all(|(i, &a)| gens[i + 1..].iter().all(|&b| g.commutes(a, b)))
}

/// `S^x = { x^{-1} s x }`.
pub fn conjugate_set(g: &FiniteGroup, s: &BitSet, x: Elem) -> BitSet {
    BitSet::from_indices(g.order(), s.iter().map(|y| g.conj(y as Elem, x) as usize))
}

/// `H^X = <H^x : x in X>`; the empty `X` gives the trivial subgroup.
pub fn normal_closure(g: &FiniteGroup, h: &Subgroup, x: &BitSet) -> Subgroup {
    let hg = generators_fast(g, h);
    let mut c = Closure::new(g);
    for t in x.iter() {
        for &s in &hg {
            c.add(g.conj(s, t as Elem));
        }
    }
    c.into_subgroup()
}

/// `core_X(H)`, the intersection of the conjugates `H^x` for `x in X`.
/// The empty `X` gives `G`.
pub fn core(g: &FiniteGroup, h: &Subgroup, x: &BitSet) -> Subgroup {
    let mut bits = BitSet::full(g.order());
    let mut seen: Vec<BitSet> = Vec::new();
    for t in x.iter() {
        let conj = conjugate_set(g, h.bits(), t as Elem);
        if !seen.contains(&conj) {
            bits.intersect_with(&conj);
            seen.push(conj);
        }
    }
    Subgroup::from_bits_unchecked(bits)
}

/// Smallest normal subgroup of `g` containing `seed`.
pub fn normal_closure_of_set(g: &FiniteGroup, seed: &BitSet) -> Subgroup {
    let ggens = generators_fast(g, &Subgroup::whole(g));
    let mut c = Closure::new(g);
    c.add_all(seed.iter().map(|x| x as Elem));
    let mut i = 0;
    while i < c.generators().len() {
        let s = c.generators()[i];
        for &t in &ggens {
            c.add(g.conj(s, t));
        }
        i += 1;
    }
    c.into_subgroup()
}

pub fn is_normal(g: &FiniteGroup, h: &Subgroup) -> bool {
    let hg = generators_fast(g, h);
    let ggens = generators_fast(g, &Subgroup::whole(g));
    ggens
        .iter()
        .all(|&t| hg.iter().all(|&s| h.contains(g.conj(s, t))))
}

/// Whether `h` is normalized by every element of `k`.
pub fn normalizes(g: &FiniteGroup, k: &Subgroup, h: &Subgroup) -> bool {
    let hg = generators_fast(g, h);
    let kg = generators_fast(g, k);
    kg.iter().all(|&t| hg.iter().all(|&s| h.contains(g.conj(s, t))))
}

pub fn derived_subgroup(g: &FiniteGroup) -> Subgroup {
    let gens = generators_fast(g, &Subgroup::whole(g));
    let mut seed = BitSet::new(g.order());
    for &a in &gens {
        for &b in &gens {
            let comm = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
            seed.insert(comm as usize);
        }
    }
    normal_closure_of_set(g, &seed)
}

/// The product set `HK` and whether it is a subgroup (`HK = KH`).
#[derive(Clone, Debug)]
pub struct SubsetProduct {
    pub set: BitSet,
    pub is_subgroup: bool,
}

pub fn subgroup_product(g: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> SubsetProduct {
    let n = g.order();
    let mut hk = BitSet::new(n);
    for x in h.elements() {
        if hk.contains(x as usize) {
            continue;
        }
        for y in k.elements() {
            hk.insert(g.mul(x, y) as usize);
        }
    }
    let mut kh = BitSet::new(n);
    for y in k.elements() {
        if kh.contains(y as usize) {
            continue;
        }
        for x in h.elements() {
            kh.insert(g.mul(y, x) as usize);
        }
    }
    let is_subgroup = hk == kh;
    SubsetProduct { set: hk, is_subgroup }
}

/// `G/N` on coset labels plus the projection. Cosets are ordered and
/// labeled by their least member index.
pub fn quotient(g: &Arc<FiniteGroup>, n: &Subgroup) -> Result<(Arc<FiniteGroup>, GroupMap)> {
    quotient_named(g, n, format!("{}/N", g.name()))
}

/// [`quotient`] with an explicit name for the result.
pub fn quotient_named(
    g: &Arc<FiniteGroup>,
    n: &Subgroup,
    name: impl Into<String>,
) -> Result<(Arc<FiniteGroup>, GroupMap)> {
    if n.bits().len() != g.order() {
        return Err(Error::Domain("subgroup belongs to a different group".into()));
    }
    if !is_normal(g, n) {
        return Err(Error::Precondition("quotient by a subgroup that is not normal".into()));
    }
    let m = g.order() / n.order();
    if m > TABLE_LIMIT {
        return Err(Error::capacity("quotient order exceeds table limit", TABLE_LIMIT as u64));
    }
    let mut coset_of = vec![ABSENT; g.order()];
    let mut reps = Vec::with_capacity(m);
    for x in g.elements() {
        if coset_of[x as usize] != ABSENT {
            continue;
        }
        let k = reps.len() as u32;
        for y in n.elements() {
            coset_of[g.mul(x, y) as usize] = k;
        }
        reps.push(x);
    }
    let mut table = vec![0u32; m * m];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            table[i * m + j] = coset_of[g.mul(a, b) as usize];
        }
    }
    let labels = reps.iter().map(|&r| Label::Coset(r)).collect();
    let q = Arc::new(FiniteGroup::from_table(name, table, labels)?);
    let proj = GroupMap::new_unchecked(g.clone(), q.clone(), coset_of)?;
    Ok((q, proj))
}

/// Direct product with component-tuple elements and the projections.
pub fn direct_product(groups: &[Arc<FiniteGroup>]) -> Result<(Arc<FiniteGroup>, Vec<GroupMap>)> {
    if groups.is_empty() {
        return Err(Error::Precondition("direct product of an empty list".into()));
    }
    let orders: Vec<usize> = groups.iter().map(|g| g.order()).collect();
    let total = orders
        .iter()
        .try_fold(1usize, |acc, &o| acc.checked_mul(o))
        .filter(|&t| t < u32::MAX as usize)
        .ok_or_else(|| Error::capacity("direct product order", u32::MAX as u64))?;
    let strides = strides_for(&orders);
    let labels = (0..total)
        .map(|x| Label::Tuple(strides.iter().zip(&orders).map(|(&s, &o)| ((x / s) % o) as u32).collect()))
        .collect();
    let name = format!(
        "prod({})",
        groups.iter().map(|g| g.name().to_string()).collect::<Vec<_>>().join(",")
    );
    let law = Law::Product {
        factors: groups.to_vec(),
        strides: strides.clone(),
    };
    let prod = Arc::new(FiniteGroup::from_law(name, law, total, labels));
    let projections = groups
        .iter()
        .enumerate()
        .map(|(i, gi)| {
            let image = (0..total).map(|x| ((x / strides[i]) % orders[i]) as Elem).collect();
            GroupMap::new_unchecked(prod.clone(), gi.clone(), image)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((prod, projections))
}

/// Subset `X_1 × ... × X_k` of a direct product built by [`direct_product`].
pub fn product_subset(orders: &[usize], parts: &[&BitSet]) -> BitSet {
    let strides = strides_for(orders);
    let total: usize = orders.iter().product();
    let mut codes = vec![0usize];
    for (part, &s) in parts.iter().zip(&strides) {
        codes = codes
            .iter()
            .flat_map(|&c| part.iter().map(move |x| c + x * s))
            .collect();
    }
    BitSet::from_indices(total, codes)
}

/// `[N]T` for an action of `T` on `N`; `(n1,t1)(n2,t2) = (n1 · t1(n2), t1 t2)`.
/// `N` occupies indices `0..|N|` and `T` the multiples of `|N|`.
pub fn semidirect_product(action: &GroupAction) -> Result<Arc<FiniteGroup>> {
    let (n, t) = (action.target().clone(), action.acting().clone());
    let total = n
        .order()
        .checked_mul(t.order())
        .filter(|&v| v < u32::MAX as usize)
        .ok_or_else(|| Error::capacity("semidirect product order", u32::MAX as u64))?;
    let nn = n.order();
    let labels = (0..total)
        .map(|x| Label::Pair((x % nn) as u32, (x / nn) as u32))
        .collect();
    let name = format!("sdp({};{})", n.name(), t.name());
    let law = Law::Semidirect {
        normal: n,
        acting: t,
        maps: action.tables().clone(),
    };
    Ok(Arc::new(FiniteGroup::from_law(name, law, total, labels)))
}

/// The subgroup `h` as a group in its own right, with its inclusion map.
pub fn subgroup_as_group(
    g: &Arc<FiniteGroup>,
    h: &Subgroup,
    name: impl Into<String>,
) -> Result<(Arc<FiniteGroup>, GroupMap)> {
    let to_parent: Vec<Elem> = h.elements().collect();
    let mut from_parent = vec![ABSENT; g.order()];
    for (i, &p) in to_parent.iter().enumerate() {
        from_parent[p as usize] = i as u32;
    }
    let labels = to_parent.iter().map(|&p| g.label(p).clone()).collect();
    let order = to_parent.len();
    let law = Law::Sub {
        parent: g.clone(),
        to_parent: to_parent.clone(),
        from_parent,
    };
    let sub = Arc::new(FiniteGroup::from_law(name, law, order, labels));
    let inclusion = GroupMap::new_unchecked(sub.clone(), g.clone(), to_parent)?;
    Ok((sub, inclusion))
}

fn cyclic_bits(g: &FiniteGroup, x: Elem) -> BitSet {
    let mut bits = BitSet::new(g.order());
    let mut y = 0;
    loop {
        bits.insert(y as usize);
        y = g.mul(y, x);
        if y == 0 {
            break;
        }
    }
    bits
}

/// Every subgroup of `g` contained in `within`, each exactly once, sorted
/// by `(order, bitset)`. Built bottom-up: cyclic subgroups first, then
/// each known subgroup is extended by one cyclic generator at a time
/// until a fixpoint.
pub fn subgroups_within(g: &FiniteGroup, within: &Subgroup) -> Vec<Subgroup> {
    let mut cyclic_gens: Vec<Elem> = Vec::new();
    let mut seen: HashMap<BitSet, ()> = HashMap::new();
    let mut list: Vec<(Subgroup, Vec<Elem>)> = Vec::new();
    let trivial = Subgroup::trivial(g);
    seen.insert(trivial.bits().clone(), ());
    list.push((trivial, Vec::new()));
    for x in within.elements() {
        let bits = cyclic_bits(g, x);
        if seen.contains_key(&bits) {
            continue;
        }
        seen.insert(bits.clone(), ());
        cyclic_gens.push(x);
        list.push((Subgroup::from_bits_unchecked(bits), vec![x]));
    }
    let mut i = 1;
    while i < list.len() {
        for &c in &cyclic_gens {
            let (h, hg) = &list[i];
            if h.contains(c) {
                continue;
            }
            let mut cl = Closure::from_subgroup(g, h, hg.clone());
            cl.add(c);
            if seen.contains_key(cl.bits()) {
                continue;
            }
            let (k, kg) = cl.into_parts();
            seen.insert(k.bits().clone(), ());
            list.push((k, kg));
        }
        i += 1;
    }
    let mut out: Vec<Subgroup> = list.into_iter().map(|(h, _)| h).collect();
    out.sort();
    out
}

/// Exhaustive subgroup list; refuses groups above `bound`.
pub fn all_subgroups(g: &FiniteGroup, bound: usize) -> Result<Vec<Subgroup>> {
    if g.order() > bound {
        return Err(Error::capacity(
            format!("subgroup enumeration of a group of order {}", g.order()),
            bound as u64,
        ));
    }
    Ok(subgroups_within(g, &Subgroup::whole(g)))
}

/// Conjugacy classes, each sorted, ordered by least member.
pub fn conjugacy_classes(g: &FiniteGroup) -> Vec<Vec<Elem>> {
    let gens = generators_fast(g, &Subgroup::whole(g));
    let mut assigned = BitSet::new(g.order());
    let mut classes = Vec::new();
    for x in g.elements() {
        if assigned.contains(x as usize) {
            continue;
        }
        assigned.insert(x as usize);
        let mut class = vec![x];
        let mut head = 0;
        while head < class.len() {
            let y = class[head];
            head += 1;
            for &t in &gens {
                let z = g.conj(y, t);
                if assigned.insert(z as usize) {
                    class.push(z);
                }
            }
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes
}

/// All normal subgroups, as joins of normal closures of conjugacy classes.
/// Sorted by `(order, bitset)`.
pub fn normal_subgroups(g: &FiniteGroup, cap: usize) -> Result<Vec<Subgroup>> {
    let mut seen: HashMap<BitSet, usize> = HashMap::new();
    let mut list: Vec<(Subgroup, Vec<Elem>)> = Vec::new();
    let trivial = Subgroup::trivial(g);
    seen.insert(trivial.bits().clone(), 0);
    list.push((trivial, Vec::new()));
    let mut base: Vec<usize> = Vec::new();
    for class in conjugacy_classes(g) {
        if class[0] == 0 {
            continue;
        }
        let mut c = Closure::new(g);
        c.add_all(class.iter().copied());
        if let Some(&idx) = seen.get(c.bits()) {
            if !base.contains(&idx) {
                base.push(idx);
            }
            continue;
        }
        let (k, kg) = c.into_parts();
        seen.insert(k.bits().clone(), list.len());
        base.push(list.len());
        list.push((k, kg));
    }
    let mut i = 0;
    while i < list.len() {
        for bi in 0..base.len() {
            let b = base[bi];
            let (h, hg) = &list[i];
            if list[b].0.is_subgroup_of(h) {
                continue;
            }
            let mut cl = Closure::from_subgroup(g, h, hg.clone());
            cl.add_all(list[b].1.iter().copied());
            if seen.contains_key(cl.bits()) {
                continue;
            }
            if list.len() >= cap {
                return Err(Error::capacity("normal subgroup enumeration", cap as u64));
            }
            let (k, kg) = cl.into_parts();
            seen.insert(k.bits().clone(), list.len());
            list.push((k, kg));
        }
        i += 1;
    }
    let mut out: Vec<Subgroup> = list.into_iter().map(|(h, _)| h).collect();
    out.sort();
    Ok(out)
}

/// A pair of nontrivial normal subgroups `(N1, N2)` with `N1 ∩ N2 = 1` and
/// `N1 N2 = G`, if one exists.
pub fn direct_decomposition(g: &FiniteGroup) -> Result<Option<(Subgroup, Subgroup)>> {
    let n = g.order();
    let normals = normal_subgroups(g, NORMAL_SUBGROUP_CAP)?;
    for (i, a) in normals.iter().enumerate() {
        if a.is_trivial() || a.order() == n || n % a.order() != 0 {
            continue;
        }
        let want = n / a.order();
        if want < a.order() {
            continue;
        }
        for b in &normals[i + 1..] {
            if b.order() == want && a.bits().intersection_count(b.bits()) == 1 {
                return Ok(Some((a.clone(), b.clone())));
            }
        }
    }
    Ok(None)
}

pub fn is_directly_indecomposable(g: &FiniteGroup) -> Result<bool> {
    Ok(direct_decomposition(g)?.is_none())
}

/// Extends `gens[i] -> imgs[i]` to a homomorphism along the Cayley graph,
/// or reports an inconsistency.
fn extend_hom(src: &FiniteGroup, tgt: &FiniteGroup, gens: &[Elem], imgs: &[Elem]) -> Option<Vec<Elem>> {
    let mut map = vec![ABSENT; src.order()];
    map[0] = 0;
    let mut queue = vec![0u32];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (&s, &si) in gens.iter().zip(imgs) {
            let y = src.mul(x, s);
            let im = tgt.mul(map[x as usize], si);
            match map[y as usize] {
                ABSENT => {
                    map[y as usize] = im;
                    queue.push(y);
                }
                v if v != im => return None,
                _ => {}
            }
        }
    }
    Some(map)
}

/// Visits every bijective homomorphism `a -> b` extending an assignment of
/// generator images; `visit` returns false to stop.
fn search_isomorphisms(a: &FiniteGroup, b: &FiniteGroup, mut visit: impl FnMut(Vec<Elem>) -> bool) {
    if a.order() != b.order() {
        return;
    }
    let gens = generators(a, &Subgroup::whole(a));
    let mut by_order: HashMap<usize, Vec<Elem>> = HashMap::new();
    for y in b.elements() {
        by_order.entry(b.element_order(y)).or_default().push(y);
    }
    let cands: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&x| by_order.get(&a.element_order(x)).cloned().unwrap_or_default())
        .collect();
    if cands.iter().any(|c| c.is_empty()) {
        return;
    }
    let mut pick = vec![0usize; gens.len()];
    loop {
        let imgs: Vec<Elem> = pick.iter().zip(&cands).map(|(&i, c)| c[i]).collect();
        if let Some(map) = extend_hom(a, b, &gens, &imgs) {
            let mut seen = BitSet::new(b.order());
            if map.iter().all(|&y| seen.insert(y as usize)) && !visit(map) {
                return;
            }
        }
        let mut k = 0;
        loop {
            if k == pick.len() {
                return;
            }
            pick[k] += 1;
            if pick[k] < cands[k].len() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
    }
}

/// An isomorphism `a -> b` as an image table, if one exists.
pub fn find_isomorphism(a: &FiniteGroup, b: &FiniteGroup) -> Option<Vec<Elem>> {
    let mut found = None;
    search_isomorphisms(a, b, |m| {
        found = Some(m);
        false
    });
    found
}

/// Every automorphism of `g`, identity first.
pub fn automorphisms(g: &Arc<FiniteGroup>, bound: usize) -> Result<Vec<GroupMap>> {
    if g.order() > bound {
        return Err(Error::capacity(
            format!("automorphism search on a group of order {}", g.order()),
            bound as u64,
        ));
    }
    let mut out = Vec::new();
    search_isomorphisms(g, g, |m| {
        out.push(m);
        true
    });
    out.sort();
    out.into_iter()
        .map(|m| GroupMap::new_unchecked(g.clone(), g.clone(), m))
        .collect()
}

/// `Aut(g)` as a concrete group (composition `a·b = a ∘ b`) together with
/// its natural action on `g`.
pub fn automorphism_group(g: &Arc<FiniteGroup>, bound: usize) -> Result<GroupAction> {
    let auts = automorphisms(g, bound)?;
    let tables: Vec<Vec<Elem>> = auts.iter().map(|m| m.images().to_vec()).collect();
    permutation_action(g, tables, format!("Aut({})", g.name()))
}

/// Builds the group generated by a closed family of automorphism tables of
/// `g` (first entry must be the identity) and its action on `g`.
pub(crate) fn permutation_action(
    g: &Arc<FiniteGroup>,
    tables: Vec<Vec<Elem>>,
    name: String,
) -> Result<GroupAction> {
    let index: HashMap<Vec<Elem>, u32> = tables
        .iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), i as u32))
        .collect();
    let m = tables.len();
    if m > TABLE_LIMIT {
        return Err(Error::capacity("automorphism family exceeds table limit", TABLE_LIMIT as u64));
    }
    let mut table = vec![0u32; m * m];
    for (i, a) in tables.iter().enumerate() {
        for (j, b) in tables.iter().enumerate() {
            let c: Vec<Elem> = b.iter().map(|&x| a[x as usize]).collect();
            table[i * m + j] = *index
                .get(&c)
                .ok_or_else(|| Error::Precondition("automorphism family is not closed".into()))?;
        }
    }
    let labels = (0..m).map(|i| Label::Word(format!("a{i}"))).collect();
    let acting = Arc::new(FiniteGroup::from_table(name, table, labels)?);
    GroupAction::new(acting, g.clone(), tables)
}

/// Group generated by the given automorphism tables of `g`, with its
/// action. Elements are enumerated breadth-first from the identity.
pub fn generated_action(g: &Arc<FiniteGroup>, gens: &[Vec<Elem>], name: impl Into<String>) -> Result<GroupAction> {
    let id: Vec<Elem> = g.elements().collect();
    let mut tables = vec![id.clone()];
    let mut seen: HashMap<Vec<Elem>, ()> = HashMap::new();
    seen.insert(id, ());
    let mut head = 0;
    while head < tables.len() {
        let x = tables[head].clone();
        head += 1;
        for s in gens {
            let y: Vec<Elem> = s.iter().map(|&v| x[v as usize]).collect();
            if !seen.contains_key(&y) {
                if tables.len() >= TABLE_LIMIT {
                    return Err(Error::capacity("generated automorphism group", TABLE_LIMIT as u64));
                }
                seen.insert(y.clone(), ());
                tables.push(y);
            }
        }
    }
    permutation_action(g, tables, name.into())
}

/// A Sylow `p`-subgroup (the first in canonical subgroup order).
pub fn sylow_subgroup(g: &FiniteGroup, p: usize, bound: usize) -> Result<Subgroup> {
    let mut pk = 1;
    while g.order() % (pk * p) == 0 {
        pk *= p;
    }
    all_subgroups(g, bound)?
        .into_iter()
        .find(|h| h.order() == pk)
        .ok_or_else(|| Error::Internal(format!("no subgroup of order {pk}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> Arc<FiniteGroup> {
        let table = (0..n * n).map(|i| ((i / n + i % n) % n) as u32).collect();
        let labels = (0..n as u64).map(Label::Int).collect();
        Arc::new(FiniteGroup::from_table(format!("Z{n}"), table, labels).unwrap())
    }

    #[test]
    fn closure_of_nothing_is_trivial() {
        let g = cyclic(6);
        assert_eq!(closure(&g, &[]).unwrap().order(), 1);
        assert!(matches!(closure(&g, &[6]), Err(Error::Domain(_))));
    }

    #[test]
    fn cyclic_subgroup_counts() {
        // Z12 has one subgroup per divisor.
        let g = cyclic(12);
        let subs = all_subgroups(&g, ORACLE_BOUND).unwrap();
        assert_eq!(subs.len(), 6);
        assert!(all_subgroups(&cyclic(13), 12).is_err());
    }

    #[test]
    fn product_of_coprime_cyclics_is_cyclic() {
        let (p, projs) = direct_product(&[cyclic(2), cyclic(3)]).unwrap();
        assert_eq!(p.order(), 6);
        assert!(p.elements().any(|x| p.element_order(x) == 6));
        assert!(projs.iter().all(|m| m.is_surjective()));
        assert!(!is_directly_indecomposable(&p).unwrap());
    }

    #[test]
    fn core_over_empty_set_is_whole_group() {
        let g = cyclic(4);
        let h = closure(&g, &[2]).unwrap();
        let empty = BitSet::new(4);
        assert_eq!(core(&g, &h, &empty).order(), 4);
        assert_eq!(normal_closure(&g, &h, &empty).order(), 1);
    }
}
