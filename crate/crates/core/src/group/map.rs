use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

use super::{Elem, FiniteGroup, Subgroup, EXHAUSTIVE_AXIOM_LIMIT};

/// A homomorphism between two concrete groups, given by its image table.
#[derive(Clone, Debug)]
pub struct GroupMap {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    image: Vec<Elem>,
}

impl GroupMap {
    /// Checks the homomorphism law (exhaustive for small sources, sampled
    /// otherwise) before wrapping the table.
    pub fn new(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, image: Vec<Elem>) -> Result<Self> {
        let m = GroupMap::new_unchecked(source, target, image)?;
        m.check_homomorphism()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, image: Vec<Elem>) -> Result<Self> {
        if image.len() != source.order() {
            return Err(Error::Precondition("image table length differs from source order".into()));
        }
        if image.iter().any(|&y| y as usize >= target.order()) {
            return Err(Error::Domain("image index out of range".into()));
        }
        Ok(GroupMap { source, target, image })
    }

    pub fn identity(g: Arc<FiniteGroup>) -> Self {
        let image = g.elements().collect();
        GroupMap {
            source: g.clone(),
            target: g,
            image,
        }
    }

    fn check_homomorphism(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        let bad = |x, y| {
            Err(Error::Precondition(format!(
                "map {} -> {} is not a homomorphism at ({x},{y})",
                s.name(),
                t.name()
            )))
        };
        if s.order() <= EXHAUSTIVE_AXIOM_LIMIT {
            for x in s.elements() {
                for y in s.elements() {
                    if self.apply(s.mul(x, y)) != t.mul(self.apply(x), self.apply(y)) {
                        return bad(x, y);
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0xa11_0f_5eed);
            let n = s.order() as u32;
            for _ in 0..10 * s.order() {
                let (x, y) = (rng.gen_range(0..n), rng.gen_range(0..n));
                if self.apply(s.mul(x, y)) != t.mul(self.apply(x), self.apply(y)) {
                    return bad(x, y);
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn images(&self) -> &[Elem] {
        &self.image
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.image[x as usize]
    }

    pub fn is_bijective(&self) -> bool {
        if self.source.order() != self.target.order() {
            return false;
        }
        let mut seen = BitSet::new(self.target.order());
        self.image.iter().all(|&y| seen.insert(y as usize))
    }

    pub fn is_automorphism(&self) -> bool {
        Arc::ptr_eq(&self.source, &self.target) && self.is_bijective()
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = BitSet::new(self.target.order());
        for &y in &self.image {
            seen.insert(y as usize);
        }
        seen.count() == self.target.order()
    }

    pub fn kernel(&self) -> Subgroup {
        Subgroup::from_bits_unchecked(BitSet::from_indices(
            self.source.order(),
            self.source.elements().filter(|&x| self.apply(x) == 0).map(|x| x as usize),
        ))
    }

    /// Image of a subset of the source.
    pub fn image_of(&self, xs: &BitSet) -> BitSet {
        BitSet::from_indices(self.target.order(), xs.iter().map(|x| self.image[x] as usize))
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &GroupMap) -> Result<GroupMap> {
        if !Arc::ptr_eq(other.target(), &self.source) {
            return Err(Error::Precondition("maps are not composable".into()));
        }
        Ok(GroupMap {
            source: other.source.clone(),
            target: self.target.clone(),
            image: other.image.iter().map(|&x| self.image[x as usize]).collect(),
        })
    }
}

/// An action of `acting` on `target` by automorphisms, stored as one image
/// table per acting element. `action(t1 t2) = action(t1) ∘ action(t2)`.
#[derive(Clone, Debug)]
pub struct GroupAction {
    acting: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    maps: Arc<Vec<Vec<Elem>>>,
}

impl GroupAction {
    /// Validates that every table is an automorphism and that the
    /// assignment is a homomorphism into `Aut(target)`.
    pub fn new(acting: Arc<FiniteGroup>, target: Arc<FiniteGroup>, maps: Vec<Vec<Elem>>) -> Result<Self> {
        if maps.len() != acting.order() {
            return Err(Error::Precondition("one automorphism per acting element is required".into()));
        }
        let a = GroupAction {
            acting,
            target,
            maps: Arc::new(maps),
        };
        a.validate()?;
        Ok(a)
    }

    pub fn trivial(acting: Arc<FiniteGroup>, target: Arc<FiniteGroup>) -> Self {
        let id: Vec<Elem> = target.elements().collect();
        let maps = vec![id; acting.order()];
        GroupAction {
            acting,
            target,
            maps: Arc::new(maps),
        }
    }

    fn validate(&self) -> Result<()> {
        let n = &self.target;
        for (t, m) in self.maps.iter().enumerate() {
            let map = GroupMap::new_unchecked(n.clone(), n.clone(), m.clone())?;
            if !map.is_bijective() {
                return Err(Error::Precondition(format!("action of {t} is not a bijection")));
            }
            map.check_homomorphism()?;
        }
        if self.maps[0].iter().enumerate().any(|(i, &v)| v as usize != i) {
            return Err(Error::Precondition("identity does not act trivially".into()));
        }
        let t = &self.acting;
        for t1 in t.elements() {
            for t2 in t.elements() {
                let lhs = &self.maps[t.mul(t1, t2) as usize];
                let (m1, m2) = (&self.maps[t1 as usize], &self.maps[t2 as usize]);
                if lhs.iter().zip(m2).any(|(&l, &y)| l != m1[y as usize]) {
                    return Err(Error::Precondition(format!(
                        "action is not a homomorphism at ({t1},{t2})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn acting(&self) -> &Arc<FiniteGroup> {
        &self.acting
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub(crate) fn tables(&self) -> &Arc<Vec<Vec<Elem>>> {
        &self.maps
    }

    #[inline]
    pub fn apply(&self, t: Elem, n: Elem) -> Elem {
        self.maps[t as usize][n as usize]
    }

    pub fn automorphism(&self, t: Elem) -> GroupMap {
        GroupMap {
            source: self.target.clone(),
            target: self.target.clone(),
            image: self.maps[t as usize].clone(),
        }
    }

    /// Acting elements that fix every element of `s` (a subset of the target).
    pub fn kernel_on(&self, s: &BitSet) -> Subgroup {
        let bits = BitSet::from_indices(
            self.acting.order(),
            self.acting
                .elements()
                .filter(|&t| s.iter().all(|x| self.apply(t, x as Elem) as usize == x))
                .map(|t| t as usize),
        );
        Subgroup::from_bits_unchecked(bits)
    }

    /// Whether `s` is mapped into itself by every acting element.
    pub fn is_invariant(&self, s: &BitSet) -> bool {
        self.maps
            .iter()
            .all(|m| s.iter().all(|x| s.contains(m[x] as usize)))
    }

    /// Restriction to a subgroup of the acting group, re-indexed on the
    /// subgroup's own group structure.
    pub fn restrict_acting(&self, sub: &Arc<FiniteGroup>, inclusion: &GroupMap) -> Result<GroupAction> {
        let maps = sub
            .elements()
            .map(|t| self.maps[inclusion.apply(t) as usize].clone())
            .collect();
        GroupAction::new(sub.clone(), self.target.clone(), maps)
    }
}
