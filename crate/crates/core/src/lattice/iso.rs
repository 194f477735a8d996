use std::collections::BTreeMap;

use crate::error::{Error, Result};

use super::AbstractLattice;

/// Lattices larger than this are not fingerprinted.
pub const ISO_SIZE_LIMIT: usize = 250_000;
/// Backtracking is attempted only below this size.
pub const ISO_BACKTRACK_LIMIT: usize = 5000;
/// Node budget for one isomorphism search.
pub const ISO_BUDGET: u64 = 250_000;

/// Isomorphism invariants. Equal fingerprints are necessary for
/// isomorphism, not sufficient.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fingerprint {
    pub size: usize,
    pub length: usize,
    /// Count of each `(height, depth, lower covers, upper covers)` profile.
    pub profile: Vec<((usize, usize, usize, usize), usize)>,
}

struct View {
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
    key: Vec<(usize, usize, usize, usize)>,
}

fn view(l: &AbstractLattice) -> Result<View> {
    if l.len() > ISO_SIZE_LIMIT {
        return Err(Error::capacity("lattice size for isomorphism invariants", ISO_SIZE_LIMIT as u64));
    }
    let n = l.len();
    let mut lower = Vec::with_capacity(n);
    let mut upper = Vec::with_capacity(n);
    let mut key = Vec::with_capacity(n);
    for x in 0..n {
        let lo = l.lower_covers(x);
        let up = l.upper_covers(x);
        key.push((l.height(x), l.depth(x), lo.len(), up.len()));
        lower.push(lo);
        upper.push(up);
    }
    Ok(View { lower, upper, key })
}

fn fingerprint_of(v: &View) -> Fingerprint {
    let mut counts: BTreeMap<(usize, usize, usize, usize), usize> = BTreeMap::new();
    for k in &v.key {
        *counts.entry(*k).or_default() += 1;
    }
    Fingerprint {
        size: v.key.len(),
        length: v.key.iter().map(|k| k.0).max().unwrap_or(0),
        profile: counts.into_iter().collect(),
    }
}

pub fn fingerprint(l: &AbstractLattice) -> Result<Fingerprint> {
    Ok(fingerprint_of(&view(l)?))
}

/// An isomorphism `a → b` as an index map, `None` when none exists.
///
/// Errors with a capacity error when the invariants agree but the search is
/// out of reach.
pub fn is_isomorphic(a: &AbstractLattice, b: &AbstractLattice) -> Result<Option<Vec<usize>>> {
    is_isomorphic_within(a, b, ISO_BUDGET)
}

/// [`is_isomorphic`] with an explicit node budget.
pub fn is_isomorphic_within(a: &AbstractLattice, b: &AbstractLattice, budget: u64) -> Result<Option<Vec<usize>>> {
    if a.len() != b.len() {
        return Ok(None);
    }
    let (va, vb) = (view(a)?, view(b)?);
    if fingerprint_of(&va) != fingerprint_of(&vb) {
        return Ok(None);
    }
    if a.len() > ISO_BACKTRACK_LIMIT {
        return Err(Error::capacity("lattice size for isomorphism search", ISO_BACKTRACK_LIMIT as u64));
    }
    let n = a.len();
    // Lower covers are placed before the elements above them.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (va.key[x].0, x));
    let mut search = Search {
        va: &va,
        vb: &vb,
        order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
        steps: 0,
        budget,
    };
    if search.extend(0)? {
        Ok(Some(search.map))
    } else {
        Ok(None)
    }
}

/// An order-reversing bijection `l → l`, `None` when none exists.
pub fn is_self_dual(l: &AbstractLattice) -> Result<Option<Vec<usize>>> {
    is_isomorphic(l, &l.dual())
}

pub fn is_self_dual_within(l: &AbstractLattice, budget: u64) -> Result<Option<Vec<usize>>> {
    is_isomorphic_within(l, &l.dual(), budget)
}

struct Search<'a> {
    va: &'a View,
    vb: &'a View,
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
    steps: u64,
    budget: u64,
}

impl Search<'_> {
    fn extend(&mut self, pos: usize) -> Result<bool> {
        if pos == self.order.len() {
            return Ok(true);
        }
        self.steps += 1;
        if self.steps > self.budget {
            return Err(Error::capacity("isomorphism search steps", self.budget));
        }
        let x = self.order[pos];
        let candidates: Vec<usize> = match self.va.lower[x].first() {
            None => (0..self.vb.key.len()).collect(),
            Some(&y) => self.vb.upper[self.map[y]].clone(),
        };
        for c in candidates {
            if self.used[c] || self.va.key[x] != self.vb.key[c] {
                continue;
            }
            let consistent = self.va.lower[x].iter().all(|&y| self.vb.lower[c].contains(&self.map[y]));
            if !consistent {
                continue;
            }
            self.map[x] = c;
            self.used[c] = true;
            if self.extend(pos + 1)? {
                return Ok(true);
            }
            self.used[c] = false;
            self.map[x] = usize::MAX;
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{adjoin_bounds, cartesian, mk_chain, mk_quasi_antichain};
    use super::*;

    fn check_iso(a: &AbstractLattice, b: &AbstractLattice, f: &[usize]) {
        for x in 0..a.len() {
            for y in 0..a.len() {
                assert_eq!(a.leq(x, y), b.leq(f[x], f[y]));
            }
        }
    }

    #[test]
    fn relabelled_lattices_are_isomorphic() {
        let m3 = mk_quasi_antichain(3).unwrap();
        let c3 = mk_chain(3).unwrap();
        let ab = cartesian(&m3, &c3).unwrap();
        let ba = cartesian(&c3, &m3).unwrap();
        let f = is_isomorphic(&ab, &ba).unwrap().unwrap();
        check_iso(&ab, &ba, &f);
        let dense = ab.to_dense().unwrap();
        let f = is_isomorphic(&dense, &ba).unwrap().unwrap();
        check_iso(&dense, &ba, &f);
    }

    #[test]
    fn distinct_lattices_are_not_isomorphic() {
        let m2 = mk_quasi_antichain(2).unwrap();
        let b2 = cartesian(&mk_chain(2).unwrap(), &mk_chain(2).unwrap()).unwrap();
        assert!(is_isomorphic(&m2, &b2).unwrap().is_some());
        let m3 = mk_quasi_antichain(3).unwrap();
        assert!(is_isomorphic(&m3, &b2).unwrap().is_none());
        let n5 = AbstractLattice::from_covers(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap();
        assert!(is_isomorphic(&n5, &m3).unwrap().is_none());
    }

    #[test]
    fn exhausted_budget_is_a_capacity_error() {
        let m3 = mk_quasi_antichain(3).unwrap();
        let sq = cartesian(&m3, &m3).unwrap();
        let e = is_isomorphic_within(&sq, &sq.to_dense().unwrap(), 3).unwrap_err();
        assert!(matches!(e, Error::Capacity { .. }));
    }

    #[test]
    fn self_duality() {
        let m3 = mk_quasi_antichain(3).unwrap();
        let big = adjoin_bounds(&cartesian(&cartesian(&m3, &m3).unwrap(), &m3).unwrap());
        let f = is_self_dual(&big).unwrap().unwrap();
        let d = big.dual();
        check_iso(&big, &d, &f);
        let n5 = AbstractLattice::from_covers(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap();
        assert!(is_self_dual(&n5).unwrap().is_some());
        // A chain with a side branch at the bottom is not self-dual.
        let l = AbstractLattice::from_covers(5, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
        assert!(is_self_dual(&l).unwrap().is_none());
    }
}
