use crate::bitset::BitSet;
use crate::error::{Error, Result};

use super::{Elem, FiniteGroup};

/// A subgroup of some ambient [`FiniteGroup`], stored as a membership
/// bitset. The ambient group is not referenced; operations take it
/// explicitly.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Subgroup {
    // Field order gives the derived `Ord` as `(order, bits)`.
    order: usize,
    bits: BitSet,
}

impl Subgroup {
    pub fn trivial(g: &FiniteGroup) -> Self {
        let mut bits = BitSet::new(g.order());
        bits.insert(0);
        Subgroup { bits, order: 1 }
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Subgroup {
            bits: BitSet::full(g.order()),
            order: g.order(),
        }
    }

    /// Wraps a bitset already known to be a subgroup.
    pub(crate) fn from_bits_unchecked(bits: BitSet) -> Self {
        let order = bits.count();
        Subgroup { bits, order }
    }

    /// Validates that `bits` is closed under the group law.
    pub fn from_bits(g: &FiniteGroup, bits: BitSet) -> Result<Self> {
        if bits.len() != g.order() {
            return Err(Error::Domain("bitset width differs from group order".into()));
        }
        if !bits.contains(0) {
            return Err(Error::Precondition("subset does not contain the identity".into()));
        }
        let mut c = Closure::new(g);
        for x in bits.iter() {
            c.add(x as Elem);
            if !c.bits().is_subset(&bits) {
                return Err(Error::Precondition("subset is not closed under multiplication".into()));
            }
        }
        Ok(Subgroup::from_bits_unchecked(bits))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    pub fn into_bits(self) -> BitSet {
        self.bits
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.bits.contains(x as usize)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        self.bits.iter().map(|x| x as Elem)
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order <= other.order && self.bits.is_subset(&other.bits)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup::from_bits_unchecked(self.bits.intersection(&other.bits))
    }
}

/// Incremental subgroup closure.
///
/// Adding an element `x` outside the current subgroup `H` enumerates the
/// right cosets `H r` of the enlarged subgroup by a breadth-first walk on
/// representatives, so each new element is produced exactly once.
pub struct Closure<'g> {
    g: &'g FiniteGroup,
    bits: BitSet,
    elems: Vec<Elem>,
    gens: Vec<Elem>,
}

impl<'g> Closure<'g> {
    pub fn new(g: &'g FiniteGroup) -> Self {
        let mut bits = BitSet::new(g.order());
        bits.insert(0);
        Closure {
            g,
            bits,
            elems: vec![0],
            gens: Vec::new(),
        }
    }

    /// Starts from a known subgroup with a known generating set.
    pub fn from_subgroup(g: &'g FiniteGroup, h: &Subgroup, gens: Vec<Elem>) -> Self {
        Closure {
            g,
            bits: h.bits().clone(),
            elems: h.elements().collect(),
            gens,
        }
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.bits.contains(x as usize)
    }

    /// Returns true if `x` enlarged the subgroup.
    pub fn add(&mut self, x: Elem) -> bool {
        if self.bits.contains(x as usize) {
            return false;
        }
        let g = self.g;
        self.gens.push(x);
        let base: Vec<Elem> = self.elems.clone();
        let mut reps: Vec<Elem> = vec![0];
        let mut head = 0;
        while head < reps.len() {
            let r = reps[head];
            head += 1;
            for gi in 0..self.gens.len() {
                let y = g.mul(r, self.gens[gi]);
                if !self.bits.contains(y as usize) {
                    for &h in &base {
                        let z = g.mul(h, y);
                        self.bits.insert(z as usize);
                        self.elems.push(z);
                    }
                    reps.push(y);
                }
            }
        }
        true
    }

    pub fn add_all<I: IntoIterator<Item = Elem>>(&mut self, it: I) {
        for x in it {
            self.add(x);
        }
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    /// The non-redundant generators added so far.
    pub fn generators(&self) -> &[Elem] {
        &self.gens
    }

    pub fn into_subgroup(self) -> Subgroup {
        Subgroup {
            order: self.elems.len(),
            bits: self.bits,
        }
    }

    pub fn into_parts(self) -> (Subgroup, Vec<Elem>) {
        (
            Subgroup {
                order: self.elems.len(),
                bits: self.bits,
            },
            self.gens,
        )
    }
}
