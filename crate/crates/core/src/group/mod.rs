//! Concrete finite groups on an index domain `0..n`.
//!
//! Every group stores its elements as indices with identity `0`. Small
//! groups (`n <= TABLE_LIMIT`) carry a full Cayley table; larger ones keep a
//! structured law (direct product, restriction to a subgroup of a parent,
//! semidirect product, permutation composition) so multiplication stays
//! proportional to the label size.

mod map;
mod ops;
mod subgroup;

pub use map::{GroupAction, GroupMap};
pub use ops::*;
pub use subgroup::{Closure, Subgroup};

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Element index inside a [`FiniteGroup`].
pub type Elem = u32;

/// Groups up to this order get a materialized Cayley table.
pub const TABLE_LIMIT: usize = 4096;

/// Associativity is checked exhaustively up to this order, sampled above.
pub const EXHAUSTIVE_AXIOM_LIMIT: usize = 512;

const ABSENT: u32 = u32::MAX;

/// Structured element label. Labels are informational; all arithmetic runs
/// on indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    Int(u64),
    Perm(Vec<u16>),
    /// Component indices of a direct-product element.
    Tuple(Vec<u32>),
    /// Field-element codes, e.g. the `(a, b, c)` entries of a unitriangular
    /// matrix.
    Matrix(Vec<u32>),
    /// `(n, t)` in a semidirect product `[N]T`.
    Pair(u32, u32),
    /// Coset of a quotient, named by its least member index.
    Coset(u32),
    Word(String),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, xs: &[T]) -> fmt::Result {
            write!(f, "(")?;
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")
        }
        match self {
            Label::Int(v) => write!(f, "{v}"),
            Label::Perm(p) => {
                write!(f, "[")?;
                for (i, x) in p.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, "]")
            }
            Label::Tuple(t) => list(f, t),
            Label::Matrix(m) => list(f, m),
            Label::Pair(n, t) => write!(f, "<{n};{t}>"),
            Label::Coset(c) => write!(f, "{c}N"),
            Label::Word(w) => f.write_str(w),
        }
    }
}

#[derive(Clone)]
pub(crate) enum Law {
    Table(Vec<u32>),
    Perm {
        perms: Vec<Vec<u16>>,
        index: HashMap<Vec<u16>, u32>,
    },
    /// Full direct product; the first factor is the most significant digit.
    Product {
        factors: Vec<Arc<FiniteGroup>>,
        strides: Vec<usize>,
    },
    /// A subgroup of `parent` re-indexed in increasing parent order.
    Sub {
        parent: Arc<FiniteGroup>,
        to_parent: Vec<u32>,
        from_parent: Vec<u32>,
    },
    /// Arbitrary structured law on labels encoded as indices.
    Func(Arc<dyn Fn(Elem, Elem) -> Elem + Send + Sync>),
    /// `[N]T` with index `t * |N| + n`.
    Semidirect {
        normal: Arc<FiniteGroup>,
        acting: Arc<FiniteGroup>,
        maps: Arc<Vec<Vec<u32>>>,
    },
}

/// A finite group on the index domain `0..order` with identity `0`.
#[derive(Clone)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    law: Law,
    inverse: Vec<u32>,
    labels: Vec<Label>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish()
    }
}

impl FiniteGroup {
    /// Builds a group from a Cayley table whose identity is index `0`.
    pub fn from_table(name: impl Into<String>, table: Vec<u32>, labels: Vec<Label>) -> Result<Self> {
        let n = labels.len();
        if n == 0 || table.len() != n * n {
            return Err(Error::Precondition(format!(
                "table of {} cells does not match {} labels",
                table.len(),
                n
            )));
        }
        if table.iter().any(|&v| v as usize >= n) {
            return Err(Error::Domain("table entry out of range".into()));
        }
        for x in 0..n {
            if table[x] as usize != x || table[x * n] as usize != x {
                return Err(Error::Precondition("index 0 is not a two-sided identity".into()));
            }
        }
        let mut inverse = vec![ABSENT; n];
        for x in 0..n {
            for y in 0..n {
                if table[x * n + y] == 0 {
                    inverse[x] = y as u32;
                    break;
                }
            }
            if inverse[x] == ABSENT {
                return Err(Error::Precondition(format!("element {x} has no inverse")));
            }
        }
        Ok(FiniteGroup {
            name: name.into(),
            order: n,
            law: Law::Table(table),
            inverse,
            labels,
        })
    }

    /// Enumerates the group generated by `gens` under `mul` breadth-first
    /// from `identity`, right-multiplying by generators in the given order.
    pub fn from_generators<L, M, F>(
        name: impl Into<String>,
        identity: L,
        gens: &[L],
        mul: M,
        label: F,
    ) -> Result<Self>
    where
        L: Clone + Eq + Hash,
        M: Fn(&L, &L) -> L,
        F: Fn(&L) -> Label,
    {
        let mut elems = vec![identity.clone()];
        let mut index: HashMap<L, u32> = HashMap::new();
        index.insert(identity, 0);
        let mut head = 0;
        while head < elems.len() {
            let x = elems[head].clone();
            head += 1;
            for s in gens {
                let y = mul(&x, s);
                if !index.contains_key(&y) {
                    if elems.len() >= TABLE_LIMIT {
                        return Err(Error::capacity("generated group exceeds table limit", TABLE_LIMIT as u64));
                    }
                    index.insert(y.clone(), elems.len() as u32);
                    elems.push(y);
                }
            }
        }
        let n = elems.len();
        let mut table = vec![0u32; n * n];
        for (i, x) in elems.iter().enumerate() {
            for (j, y) in elems.iter().enumerate() {
                table[i * n + j] = index[&mul(x, y)];
            }
        }
        let labels = elems.iter().map(label).collect();
        FiniteGroup::from_table(name, table, labels)
    }

    /// Permutation group on `degree` points without a Cayley table.
    /// Composition is `(a * b)(i) = a(b(i))`.
    pub(crate) fn from_permutations_untabled(
        name: impl Into<String>,
        degree: usize,
        gens: &[Vec<u16>],
    ) -> Result<Self> {
        let id: Vec<u16> = (0..degree as u16).collect();
        let mut perms = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id, 0u32);
        let mut head = 0;
        while head < perms.len() {
            let x = perms[head].clone();
            head += 1;
            for s in gens {
                let y = compose(&x, s);
                if !index.contains_key(&y) {
                    index.insert(y.clone(), perms.len() as u32);
                    perms.push(y);
                }
            }
        }
        let inverse = perms
            .iter()
            .map(|p| {
                let mut inv = vec![0u16; p.len()];
                for (i, &v) in p.iter().enumerate() {
                    inv[v as usize] = i as u16;
                }
                index[&inv]
            })
            .collect();
        let labels = perms.iter().map(|p| Label::Perm(p.clone())).collect();
        Ok(FiniteGroup {
            name: name.into(),
            order: perms.len(),
            law: Law::Perm { perms, index },
            inverse,
            labels,
        })
    }

    /// Wraps a structured law, materializing a Cayley table when small.
    pub(crate) fn from_law(name: impl Into<String>, law: Law, order: usize, labels: Vec<Label>) -> Self {
        let mut g = FiniteGroup {
            name: name.into(),
            order,
            law,
            inverse: Vec::new(),
            labels,
        };
        g.inverse = (0..order as u32).map(|x| g.law_inverse(x)).collect();
        g.materialize_table();
        g
    }

    /// Group given by a multiplication closure on `0..order` with identity
    /// `0` and a matching inverse closure.
    pub fn from_fn<M, I>(name: impl Into<String>, labels: Vec<Label>, mul: M, inv: I) -> Self
    where
        M: Fn(Elem, Elem) -> Elem + Send + Sync + 'static,
        I: Fn(Elem) -> Elem,
    {
        let order = labels.len();
        let inverse: Vec<Elem> = (0..order as u32).map(inv).collect();
        let mut g = FiniteGroup {
            name: name.into(),
            order,
            law: Law::Func(Arc::new(mul)),
            inverse,
            labels,
        };
        g.materialize_table();
        g
    }

    fn materialize_table(&mut self) {
        let order = self.order;
        if order <= TABLE_LIMIT && !matches!(self.law, Law::Table(_)) {
            let mut table = vec![0u32; order * order];
            for a in 0..order as u32 {
                for b in 0..order as u32 {
                    table[a as usize * order + b as usize] = self.mul(a, b);
                }
            }
            self.law = Law::Table(table);
        }
    }

    fn law_inverse(&self, x: Elem) -> Elem {
        match &self.law {
            Law::Table(t) => {
                let n = self.order;
                (0..n as u32).find(|&y| t[x as usize * n + y as usize] == 0).unwrap()
            }
            Law::Perm { perms, index } => {
                let p = &perms[x as usize];
                let mut inv = vec![0u16; p.len()];
                for (i, &v) in p.iter().enumerate() {
                    inv[v as usize] = i as u16;
                }
                index[&inv]
            }
            Law::Product { factors, strides } => {
                let mut code = 0usize;
                let mut rest = x as usize;
                for (f, &s) in factors.iter().zip(strides) {
                    let c = rest / s;
                    rest %= s;
                    code += f.inv(c as u32) as usize * s;
                }
                code as u32
            }
            Law::Sub {
                parent,
                to_parent,
                from_parent,
            } => from_parent[parent.inv(to_parent[x as usize]) as usize],
            Law::Func(_) => unreachable!("function laws carry explicit inverses"),
            Law::Semidirect { normal, acting, maps } => {
                let nn = normal.order() as u32;
                let (t, n) = (x / nn, x % nn);
                let ti = acting.inv(t);
                let ni = maps[ti as usize][normal.inv(n) as usize];
                ti * nn + ni
            }
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> Elem {
        0
    }

    pub fn has_table(&self) -> bool {
        matches!(self.law, Law::Table(_))
    }

    pub fn label(&self, x: Elem) -> &Label {
        &self.labels[x as usize]
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order as u32
    }

    #[inline]
    pub fn inv(&self, x: Elem) -> Elem {
        self.inverse[x as usize]
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.law {
            Law::Table(t) => t[a as usize * self.order + b as usize],
            Law::Perm { perms, index } => {
                index[&compose(&perms[a as usize], &perms[b as usize])]
            }
            Law::Product { factors, strides } => {
                let (mut ra, mut rb) = (a as usize, b as usize);
                let mut code = 0usize;
                for (f, &s) in factors.iter().zip(strides) {
                    let (ca, cb) = (ra / s, rb / s);
                    ra %= s;
                    rb %= s;
                    code += f.mul(ca as u32, cb as u32) as usize * s;
                }
                code as u32
            }
            Law::Sub {
                parent,
                to_parent,
                from_parent,
            } => from_parent[parent.mul(to_parent[a as usize], to_parent[b as usize]) as usize],
            Law::Func(f) => f(a, b),
            Law::Semidirect { normal, acting, maps } => {
                let nn = normal.order() as u32;
                let (t1, n1) = (a / nn, a % nn);
                let (t2, n2) = (b / nn, b % nn);
                let n = normal.mul(n1, maps[t1 as usize][n2 as usize]);
                acting.mul(t1, t2) * nn + n
            }
        }
    }

    /// `x^{-1} a x`.
    #[inline]
    pub fn conj(&self, a: Elem, x: Elem) -> Elem {
        self.mul(self.mul(self.inv(x), a), x)
    }

    pub fn pow(&self, x: Elem, mut e: u64) -> Elem {
        let mut base = x;
        let mut acc = 0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: Elem) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    #[inline]
    pub fn commutes(&self, a: Elem, b: Elem) -> bool {
        match &self.law {
            Law::Product { factors, strides } => {
                let (mut ra, mut rb) = (a as usize, b as usize);
                for (f, &s) in factors.iter().zip(strides) {
                    let (ca, cb) = (ra / s, rb / s);
                    ra %= s;
                    rb %= s;
                    if !f.commutes(ca as u32, cb as u32) {
                        return false;
                    }
                }
                true
            }
            Law::Sub { parent, to_parent, .. } => {
                parent.commutes(to_parent[a as usize], to_parent[b as usize])
            }
            _ => self.mul(a, b) == self.mul(b, a),
        }
    }

    /// Elements commuting with `g`, in increasing index order.
    pub fn element_centralizer_list(&self, g: Elem) -> Vec<Elem> {
        match &self.law {
            Law::Product { factors, strides } => {
                let mut rest = g as usize;
                let mut lists = Vec::with_capacity(factors.len());
                for (f, &s) in factors.iter().zip(strides) {
                    let c = rest / s;
                    rest %= s;
                    lists.push(f.element_centralizer_list(c as u32));
                }
                let mut out = vec![0u32];
                for (list, &s) in lists.iter().zip(strides) {
                    let mut next = Vec::with_capacity(out.len() * list.len());
                    for &o in &out {
                        for &c in list {
                            next.push(o + c * s as u32);
                        }
                    }
                    out = next;
                }
                out
            }
            Law::Sub {
                parent,
                to_parent,
                from_parent,
            } => parent
                .element_centralizer_list(to_parent[g as usize])
                .into_iter()
                .filter_map(|p| {
                    let x = from_parent[p as usize];
                    (x != ABSENT).then_some(x)
                })
                .collect(),
            _ => self.elements().filter(|&x| self.commutes(g, x)).collect(),
        }
    }

    /// `C_G(g)` as a bitset.
    pub fn element_centralizer(&self, g: Elem) -> BitSet {
        BitSet::from_indices(self.order, self.element_centralizer_list(g).into_iter().map(|x| x as usize))
    }

    pub fn check_index(&self, x: usize) -> Result<Elem> {
        if x < self.order {
            Ok(x as Elem)
        } else {
            Err(Error::Domain(format!(
                "element index {x} out of range for group of order {}",
                self.order
            )))
        }
    }

    /// Checks the group axioms: identity, inverses, Latin-square rows and
    /// associativity (exhaustive up to [`EXHAUSTIVE_AXIOM_LIMIT`], otherwise
    /// `10 n` sampled triples and 64 sampled rows).
    pub fn verify_axioms(&self) -> Result<()> {
        let n = self.order;
        let fail = |m: String| Err(Error::Internal(format!("{}: {m}", self.name)));
        for x in self.elements() {
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return fail(format!("identity law fails at {x}"));
            }
            if self.mul(x, self.inv(x)) != 0 || self.mul(self.inv(x), x) != 0 {
                return fail(format!("inverse law fails at {x}"));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0f_a11);
        let rows: Vec<Elem> = if n <= TABLE_LIMIT {
            self.elements().collect()
        } else {
            (0..64).map(|_| rng.gen_range(0..n as u32)).collect()
        };
        for &x in &rows {
            let mut seen = BitSet::new(n);
            for y in self.elements() {
                if !seen.insert(self.mul(x, y) as usize) {
                    return fail(format!("row {x} is not a bijection"));
                }
            }
        }
        if n <= EXHAUSTIVE_AXIOM_LIMIT {
            for x in self.elements() {
                for y in self.elements() {
                    let xy = self.mul(x, y);
                    for z in self.elements() {
                        if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                            return fail(format!("associativity fails at ({x},{y},{z})"));
                        }
                    }
                }
            }
        } else {
            for _ in 0..10 * n {
                let (x, y, z) = (
                    rng.gen_range(0..n as u32),
                    rng.gen_range(0..n as u32),
                    rng.gen_range(0..n as u32),
                );
                if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
                    return fail(format!("associativity fails at ({x},{y},{z})"));
                }
            }
        }
        Ok(())
    }
}

/// `(a * b)(i) = a(b(i))`.
pub(crate) fn compose(a: &[u16], b: &[u16]) -> Vec<u16> {
    b.iter().map(|&i| a[i as usize]).collect()
}

/// Positions of a mixed-radix code, most significant first.
pub(crate) fn strides_for(orders: &[usize]) -> Vec<usize> {
    let mut strides = vec![1usize; orders.len()];
    for i in (0..orders.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * orders[i + 1];
    }
    strides
}
