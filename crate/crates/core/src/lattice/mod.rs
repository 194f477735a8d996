//! Finite bounded lattices decoupled from groups.
//!
//! Small lattices are stored densely as up-set bitsets. Cartesian products,
//! adjoined bounds and duals are kept structural so that lattices with
//! hundreds of thousands of elements cost no more than their parts.

mod analysis;
mod iso;

use std::fmt;
use std::sync::Arc;

use crate::bitset::BitSet;
use crate::cd::CdLattice;
use crate::error::{Error, Result};

pub use analysis::{
    adjoin_bounds, atoms, cartesian, coatoms, complemented_elements, factorize, is_modular, mk_chain,
    mk_quasi_antichain, quasi_antichain_width,
};
pub use iso::{
    fingerprint, is_isomorphic, is_isomorphic_within, is_self_dual, is_self_dual_within, Fingerprint, ISO_BACKTRACK_LIMIT, ISO_BUDGET, ISO_SIZE_LIMIT};

/// Largest lattice stored with an explicit order relation.
pub const DENSE_LIMIT: usize = 8192;

/// Meet and join tables are cached up to this size.
const TABLE_CACHE_LIMIT: usize = 2048;

#[derive(Clone)]
struct Dense {
    up: Vec<BitSet>,
    down: Vec<BitSet>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    height: Vec<usize>,
    depth: Vec<usize>,
    bottom: usize,
    top: usize,
    meet: Option<Vec<u32>>,
    join: Option<Vec<u32>>,
}

#[derive(Clone)]
enum Repr {
    Dense(Arc<Dense>),
    /// Mixed radix, first factor most significant.
    Product {
        factors: Vec<AbstractLattice>,
        strides: Vec<usize>,
    },
    /// Index 0 is the new bottom, `i + 1` is inner `i`, and `len - 1` the
    /// new top.
    Adjoined(Box<AbstractLattice>),
    Dual(Box<AbstractLattice>),
}

/// A finite bounded lattice on `0..len()`.
#[derive(Clone)]
pub struct AbstractLattice {
    repr: Repr,
    len: usize,
}

impl fmt::Debug for AbstractLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Dense(_) => write!(f, "Lattice({})", self.len),
            Repr::Product { factors, .. } => {
                write!(f, "Product[")?;
                for (i, x) in factors.iter().enumerate() {
                    if i > 0 {
                        write!(f, " x ")?;
                    }
                    write!(f, "{x:?}")?;
                }
                write!(f, "]")
            }
            Repr::Adjoined(inner) => write!(f, "Adjoined({inner:?})"),
            Repr::Dual(inner) => write!(f, "Dual({inner:?})"),
        }
    }
}

fn dense_error(what: impl Into<String>) -> Error {
    Error::Precondition(format!("not a bounded lattice: {}", what.into()))
}

impl AbstractLattice {
    /// Builds a lattice from its order relation; validates that it is a
    /// partial order with all meets and joins.
    pub fn from_leq(m: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        if m == 0 {
            return Err(dense_error("empty"));
        }
        if m > DENSE_LIMIT {
            return Err(Error::capacity("dense lattice size", DENSE_LIMIT as u64));
        }
        let mut up = vec![BitSet::new(m); m];
        let mut down = vec![BitSet::new(m); m];
        for i in 0..m {
            for j in 0..m {
                if leq(i, j) {
                    up[i].insert(j);
                    down[j].insert(i);
                }
            }
        }
        Self::from_up_sets(up, down)
    }

    /// Builds a lattice from its covering pairs `(lower, upper)`.
    pub fn from_covers(m: usize, covers: &[(usize, usize)]) -> Result<Self> {
        if m == 0 {
            return Err(dense_error("empty"));
        }
        if m > DENSE_LIMIT {
            return Err(Error::capacity("dense lattice size", DENSE_LIMIT as u64));
        }
        let mut upper = vec![Vec::new(); m];
        let mut indeg = vec![0usize; m];
        for &(a, b) in covers {
            if a >= m || b >= m || a == b {
                return Err(dense_error(format!("bad covering pair ({a},{b})")));
            }
            upper[a].push(b);
            indeg[b] += 1;
        }
        // Topological order from the minimal elements.
        let mut order: Vec<usize> = (0..m).filter(|&i| indeg[i] == 0).collect();
        let mut head = 0;
        while head < order.len() {
            let x = order[head];
            head += 1;
            for &y in &upper[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    order.push(y);
                }
            }
        }
        if order.len() != m {
            return Err(dense_error("covering relation has a cycle"));
        }
        let mut up = vec![BitSet::new(m); m];
        for &x in order.iter().rev() {
            let mut s = BitSet::new(m);
            s.insert(x);
            for &y in &upper[x] {
                s.union_with(&up[y]);
            }
            up[x] = s;
        }
        let mut down = vec![BitSet::new(m); m];
        for (i, u) in up.iter().enumerate() {
            for j in u.iter() {
                down[j].insert(i);
            }
        }
        Self::from_up_sets(up, down)
    }

    fn from_up_sets(up: Vec<BitSet>, down: Vec<BitSet>) -> Result<Self> {
        let m = up.len();
        for i in 0..m {
            if !up[i].contains(i) {
                return Err(dense_error(format!("{i} ≰ {i}")));
            }
            for j in up[i].iter() {
                if j != i && up[j].contains(i) {
                    return Err(dense_error(format!("{i} and {j} are mutually below each other")));
                }
                if !up[j].is_subset(&up[i]) {
                    return Err(dense_error("relation is not transitive"));
                }
            }
        }
        let bottom = (0..m)
            .find(|&i| up[i].count() == m)
            .ok_or_else(|| dense_error("no least element"))?;
        let top = (0..m)
            .find(|&i| down[i].count() == m)
            .ok_or_else(|| dense_error("no greatest element"))?;
        let mut upper = vec![Vec::new(); m];
        let mut lower = vec![Vec::new(); m];
        for i in 0..m {
            for j in up[i].iter() {
                if j == i {
                    continue;
                }
                // j covers i iff nothing lies strictly between.
                let between = up[i].intersection(&down[j]).count();
                if between == 2 {
                    upper[i].push(j);
                    lower[j].push(i);
                }
            }
        }
        let mut by_rank: Vec<usize> = (0..m).collect();
        by_rank.sort_by_key(|&i| down[i].count());
        let mut height = vec![0usize; m];
        for &x in &by_rank {
            height[x] = lower[x].iter().map(|&y| height[y] + 1).max().unwrap_or(0);
        }
        let mut depth = vec![0usize; m];
        for &x in by_rank.iter().rev() {
            depth[x] = upper[x].iter().map(|&y| depth[y] + 1).max().unwrap_or(0);
        }
        let mut d = Dense {
            up,
            down,
            upper,
            lower,
            height,
            depth,
            bottom,
            top,
            meet: None,
            join: None,
        };
        let bound = |sets: &[BitSet], rank: &[usize], a: usize, b: usize| -> Option<usize> {
            let common = sets[a].intersection(&sets[b]);
            let best = common.iter().max_by_key(|&c| rank[c])?;
            (sets[best].count() > 0 && common.is_subset(&sets[best])).then_some(best)
        };
        // meet(a,b): the greatest common lower bound; its down-set contains
        // every common lower bound.
        let mut meet = Vec::new();
        let mut join = Vec::new();
        let cache = m <= TABLE_CACHE_LIMIT;
        for a in 0..m {
            for b in 0..m {
                let mt = bound(&d.down, &d.height, a, b)
                    .filter(|&c| d.down[a].intersection(&d.down[b]).is_subset(&d.down[c]))
                    .ok_or_else(|| dense_error(format!("{a} and {b} have no meet")))?;
                let jn = bound(&d.up, &d.depth, a, b)
                    .filter(|&c| d.up[a].intersection(&d.up[b]).is_subset(&d.up[c]))
                    .ok_or_else(|| dense_error(format!("{a} and {b} have no join")))?;
                if cache {
                    meet.push(mt as u32);
                    join.push(jn as u32);
                }
            }
        }
        if cache {
            d.meet = Some(meet);
            d.join = Some(join);
        }
        Ok(AbstractLattice {
            len: m,
            repr: Repr::Dense(Arc::new(d)),
        })
    }

    pub(crate) fn product(factors: Vec<AbstractLattice>) -> Result<Self> {
        let mut flat = Vec::new();
        for f in factors {
            match f.repr {
                Repr::Product { factors: inner, .. } => flat.extend(inner),
                _ => flat.push(f),
            }
        }
        let orders: Vec<usize> = flat.iter().map(|f| f.len).collect();
        let len = orders
            .iter()
            .try_fold(1usize, |acc, &o| acc.checked_mul(o))
            .filter(|&t| t <= u32::MAX as usize)
            .ok_or_else(|| Error::capacity("lattice product size", u32::MAX as u64))?;
        let strides = crate::group::strides_for(&orders);
        if flat.len() == 1 {
            return Ok(flat.pop().unwrap());
        }
        Ok(AbstractLattice {
            repr: Repr::Product { factors: flat, strides },
            len,
        })
    }

    pub(crate) fn adjoined(inner: AbstractLattice) -> Self {
        let len = inner.len + 2;
        AbstractLattice {
            repr: Repr::Adjoined(Box::new(inner)),
            len,
        }
    }

    /// The same elements with the order reversed.
    pub fn dual(&self) -> AbstractLattice {
        match &self.repr {
            Repr::Dual(inner) => (**inner).clone(),
            _ => AbstractLattice {
                repr: Repr::Dual(Box::new(self.clone())),
                len: self.len,
            },
        }
    }

    /// An explicit copy of the order relation.
    pub fn to_dense(&self) -> Result<AbstractLattice> {
        if let Repr::Dense(_) = self.repr {
            return Ok(self.clone());
        }
        AbstractLattice::from_leq(self.len, |a, b| self.leq(a, b))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_structured(&self) -> bool {
        !matches!(self.repr, Repr::Dense(_))
    }

    fn digits(&self, x: usize) -> Vec<usize> {
        match &self.repr {
            Repr::Product { factors, strides } => {
                factors.iter().zip(strides).map(|(f, &s)| (x / s) % f.len).collect()
            }
            _ => unreachable!(),
        }
    }

    fn undigits(strides: &[usize], ds: &[usize]) -> usize {
        ds.iter().zip(strides).map(|(d, s)| d * s).sum()
    }

    pub fn bottom(&self) -> usize {
        match &self.repr {
            Repr::Dense(d) => d.bottom,
            Repr::Product { factors, strides } => {
                factors.iter().zip(strides).map(|(f, s)| f.bottom() * s).sum()
            }
            Repr::Adjoined(_) => 0,
            Repr::Dual(inner) => inner.top(),
        }
    }

    pub fn top(&self) -> usize {
        match &self.repr {
            Repr::Dense(d) => d.top,
            Repr::Product { factors, strides } => factors.iter().zip(strides).map(|(f, s)| f.top() * s).sum(),
            Repr::Adjoined(_) => self.len - 1,
            Repr::Dual(inner) => inner.bottom(),
        }
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        match &self.repr {
            Repr::Dense(d) => d.up[a].contains(b),
            Repr::Product { factors, .. } => {
                let (da, db) = (self.digits(a), self.digits(b));
                factors.iter().enumerate().all(|(i, f)| f.leq(da[i], db[i]))
            }
            Repr::Adjoined(inner) => {
                let top = self.len - 1;
                a == 0 || b == top || (a != top && b != 0 && inner.leq(a - 1, b - 1))
            }
            Repr::Dual(inner) => inner.leq(b, a),
        }
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        match &self.repr {
            Repr::Dense(d) => match &d.meet {
                Some(t) => t[a * self.len + b] as usize,
                None => {
                    let common = d.down[a].intersection(&d.down[b]);
                    common.iter().max_by_key(|&c| d.height[c]).unwrap()
                }
            },
            Repr::Product { factors, strides } => {
                let (da, db) = (self.digits(a), self.digits(b));
                let ds: Vec<usize> = factors.iter().enumerate().map(|(i, f)| f.meet(da[i], db[i])).collect();
                Self::undigits(strides, &ds)
            }
            Repr::Adjoined(inner) => {
                let top = self.len - 1;
                match (a, b) {
                    (0, _) | (_, 0) => 0,
                    (x, y) if x == top => y,
                    (x, y) if y == top => x,
                    (x, y) => inner.meet(x - 1, y - 1) + 1,
                }
            }
            Repr::Dual(inner) => inner.join(a, b),
        }
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        match &self.repr {
            Repr::Dense(d) => match &d.join {
                Some(t) => t[a * self.len + b] as usize,
                None => {
                    let common = d.up[a].intersection(&d.up[b]);
                    common.iter().max_by_key(|&c| d.depth[c]).unwrap()
                }
            },
            Repr::Product { factors, strides } => {
                let (da, db) = (self.digits(a), self.digits(b));
                let ds: Vec<usize> = factors.iter().enumerate().map(|(i, f)| f.join(da[i], db[i])).collect();
                Self::undigits(strides, &ds)
            }
            Repr::Adjoined(inner) => {
                let top = self.len - 1;
                match (a, b) {
                    (x, _) | (_, x) if x == top => top,
                    (0, y) => y,
                    (x, 0) => x,
                    (x, y) => inner.join(x - 1, y - 1) + 1,
                }
            }
            Repr::Dual(inner) => inner.meet(a, b),
        }
    }

    /// Elements covering `x`.
    pub fn upper_covers(&self, x: usize) -> Vec<usize> {
        match &self.repr {
            Repr::Dense(d) => d.upper[x].clone(),
            Repr::Product { factors, strides } => {
                let dx = self.digits(x);
                let mut out = Vec::new();
                for (i, f) in factors.iter().enumerate() {
                    for c in f.upper_covers(dx[i]) {
                        out.push(x - dx[i] * strides[i] + c * strides[i]);
                    }
                }
                out.sort_unstable();
                out
            }
            Repr::Adjoined(inner) => {
                let top = self.len - 1;
                if x == 0 {
                    vec![inner.bottom() + 1]
                } else if x == top {
                    vec![]
                } else if x - 1 == inner.top() {
                    vec![top]
                } else {
                    inner.upper_covers(x - 1).into_iter().map(|y| y + 1).collect()
                }
            }
            Repr::Dual(inner) => inner.lower_covers(x),
        }
    }

    /// Elements covered by `x`.
    pub fn lower_covers(&self, x: usize) -> Vec<usize> {
        match &self.repr {
            Repr::Dense(d) => d.lower[x].clone(),
            Repr::Product { factors, strides } => {
                let dx = self.digits(x);
                let mut out = Vec::new();
                for (i, f) in factors.iter().enumerate() {
                    for c in f.lower_covers(dx[i]) {
                        out.push(x - dx[i] * strides[i] + c * strides[i]);
                    }
                }
                out.sort_unstable();
                out
            }
            Repr::Adjoined(inner) => {
                let top = self.len - 1;
                if x == 0 {
                    vec![]
                } else if x == top {
                    vec![inner.top() + 1]
                } else if x - 1 == inner.bottom() {
                    vec![0]
                } else {
                    inner.lower_covers(x - 1).into_iter().map(|y| y + 1).collect()
                }
            }
            Repr::Dual(inner) => inner.upper_covers(x),
        }
    }

    /// Length of the longest chain from the bottom to `x`.
    pub fn height(&self, x: usize) -> usize {
        match &self.repr {
            Repr::Dense(d) => d.height[x],
            Repr::Product { factors, .. } => {
                let dx = self.digits(x);
                factors.iter().enumerate().map(|(i, f)| f.height(dx[i])).sum()
            }
            Repr::Adjoined(inner) => {
                if x == 0 {
                    0
                } else if x == self.len - 1 {
                    inner.height(inner.top()) + 2
                } else {
                    inner.height(x - 1) + 1
                }
            }
            Repr::Dual(inner) => inner.depth(x),
        }
    }

    /// Length of the longest chain from `x` to the top.
    pub fn depth(&self, x: usize) -> usize {
        match &self.repr {
            Repr::Dense(d) => d.depth[x],
            Repr::Product { factors, .. } => {
                let dx = self.digits(x);
                factors.iter().enumerate().map(|(i, f)| f.depth(dx[i])).sum()
            }
            Repr::Adjoined(inner) => {
                if x == self.len - 1 {
                    0
                } else if x == 0 {
                    inner.depth(inner.bottom()) + 2
                } else {
                    inner.depth(x - 1) + 1
                }
            }
            Repr::Dual(inner) => inner.height(x),
        }
    }

    /// Every covering pair `(lower, upper)`.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len)
            .flat_map(|x| self.upper_covers(x).into_iter().map(move |y| (x, y)))
            .collect()
    }

    /// The interval `[bottom, a]` as a lattice, with the map from its
    /// indices back to this lattice.
    pub fn lower_interval(&self, a: usize) -> Result<(AbstractLattice, Vec<usize>)> {
        let elems: Vec<usize> = (0..self.len).filter(|&x| self.leq(x, a)).collect();
        let l = AbstractLattice::from_leq(elems.len(), |i, j| self.leq(elems[i], elems[j]))?;
        Ok((l, elems))
    }

    /// A pair `(a, b)` with `x ↦ (x ∧ a, x ∧ b)` an isomorphism onto
    /// `[bottom, a] × [bottom, b]`, both factors nontrivial.
    pub fn central_pair(&self) -> Option<(usize, usize)> {
        match &self.repr {
            Repr::Product { factors, strides } => {
                let tops: Vec<usize> = factors.iter().map(|f| f.top()).collect();
                let bots: Vec<usize> = factors.iter().map(|f| f.bottom()).collect();
                let mut a = bots.clone();
                a[0] = tops[0];
                let mut b = tops;
                b[0] = bots[0];
                Some((Self::undigits(strides, &a), Self::undigits(strides, &b)))
            }
            Repr::Adjoined(_) => None,
            Repr::Dual(_) | Repr::Dense(_) => self.search_central_pair(),
        }
    }

    fn search_central_pair(&self) -> Option<(usize, usize)> {
        let (bot, top) = (self.bottom(), self.top());
        let m = self.len;
        let below: Vec<usize> = (0..m).map(|a| (0..m).filter(|&x| self.leq(x, a)).count()).collect();
        let mut cands: Vec<usize> = (0..m).filter(|&a| a != bot && a != top).collect();
        cands.sort_by_key(|&a| (below[a], a));
        for &a in &cands {
            if m % below[a] != 0 {
                continue;
            }
            for b in 0..m {
                if b == bot || b == top || below[a] * below[b] != m {
                    continue;
                }
                if self.meet(a, b) != bot || self.join(a, b) != top {
                    continue;
                }
                if (0..m).all(|x| self.join(self.meet(x, a), self.meet(x, b)) == x) {
                    return Some((a, b));
                }
            }
        }
        None
    }
}

/// `CD(G)` as an abstract lattice with the same indexing as its members.
pub fn abstract_of(cd: &CdLattice) -> AbstractLattice {
    let covers = cd.covers().to_vec();
    AbstractLattice::from_covers(cd.len(), &covers).expect("CD lattices are verified on construction")
}
