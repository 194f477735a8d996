use crate::error::Result;

use super::iso::fingerprint;
use super::{AbstractLattice, Repr};

/// The chain with `k` elements.
pub fn mk_chain(k: usize) -> Result<AbstractLattice> {
    AbstractLattice::from_leq(k, |a, b| a <= b)
}

/// `M_n`: a bottom, `n` pairwise incomparable atoms and a top.
///
/// `M_0` is a single point and `M_1` the three-element chain.
pub fn mk_quasi_antichain(n: usize) -> Result<AbstractLattice> {
    if n == 0 {
        return mk_chain(1);
    }
    let top = n + 1;
    AbstractLattice::from_leq(n + 2, |a, b| a == b || a == 0 || b == top)
}

pub fn cartesian(a: &AbstractLattice, b: &AbstractLattice) -> Result<AbstractLattice> {
    AbstractLattice::product(vec![a.clone(), b.clone()])
}

/// A new least and a new greatest element around `l`.
pub fn adjoin_bounds(l: &AbstractLattice) -> AbstractLattice {
    AbstractLattice::adjoined(l.clone())
}

pub fn atoms(l: &AbstractLattice) -> Vec<usize> {
    if l.len() == 1 {
        return Vec::new();
    }
    l.upper_covers(l.bottom())
}

pub fn coatoms(l: &AbstractLattice) -> Vec<usize> {
    if l.len() == 1 {
        return Vec::new();
    }
    l.lower_covers(l.top())
}

/// `Some(n)` when `l` is `M_n`; the two-element chain is not of this form.
pub fn quasi_antichain_width(l: &AbstractLattice) -> Option<usize> {
    match l.len() {
        1 => Some(0),
        2 => None,
        m => {
            let at = atoms(l);
            let co = coatoms(l);
            (at.len() == m - 2 && co.len() == m - 2).then_some(m - 2)
        }
    }
}

/// Checks the modular law; on failure returns `(a, b, c)` with `a ≤ c` and
/// `a ∨ (b ∧ c) ≠ (a ∨ b) ∧ c`.
pub fn is_modular(l: &AbstractLattice) -> std::result::Result<(), (usize, usize, usize)> {
    match &l.repr {
        Repr::Product { factors, strides } => {
            let bots: Vec<usize> = factors.iter().map(|f| f.bottom()).collect();
            for (i, f) in factors.iter().enumerate() {
                if let Err((a, b, c)) = is_modular(f) {
                    let lift = |x: usize| {
                        let mut ds = bots.clone();
                        ds[i] = x;
                        AbstractLattice::undigits(strides, &ds)
                    };
                    return Err((lift(a), lift(b), lift(c)));
                }
            }
            Ok(())
        }
        // New bounds never break the law.
        Repr::Adjoined(inner) => is_modular(inner).map_err(|(a, b, c)| (a + 1, b + 1, c + 1)),
        Repr::Dual(inner) => is_modular(inner).map_err(|(a, b, c)| (c, b, a)),
        Repr::Dense(_) => {
            // A finite lattice is modular iff its height function is a rank
            // function with h(x) + h(y) = h(x∧y) + h(x∨y).
            let m = l.len();
            let graded = (0..m).all(|x| l.upper_covers(x).iter().all(|&y| l.height(y) == l.height(x) + 1));
            let ranked = graded
                && (0..m).all(|x| {
                    (x + 1..m).all(|y| l.height(x) + l.height(y) == l.height(l.meet(x, y)) + l.height(l.join(x, y)))
                });
            if ranked {
                return Ok(());
            }
            for a in 0..m {
                for c in 0..m {
                    if a == c || !l.leq(a, c) {
                        continue;
                    }
                    for b in 0..m {
                        if l.join(a, l.meet(b, c)) != l.meet(l.join(a, b), c) {
                            return Err((a, b, c));
                        }
                    }
                }
            }
            unreachable!("a lattice failing the rank identity contains a pentagon")
        }
    }
}

/// Elements with a complement, in increasing index order.
pub fn complemented_elements(l: &AbstractLattice) -> Vec<usize> {
    match &l.repr {
        Repr::Product { factors, .. } => {
            let per: Vec<Vec<bool>> = factors
                .iter()
                .map(|f| {
                    let mut v = vec![false; f.len()];
                    for x in complemented_elements(f) {
                        v[x] = true;
                    }
                    v
                })
                .collect();
            (0..l.len())
                .filter(|&x| l.digits(x).iter().enumerate().all(|(i, &d)| per[i][d]))
                .collect()
        }
        Repr::Adjoined(_) => vec![0, l.len() - 1],
        Repr::Dual(inner) => complemented_elements(inner),
        Repr::Dense(_) => {
            let (bot, top) = (l.bottom(), l.top());
            (0..l.len())
                .filter(|&x| (0..l.len()).any(|y| l.meet(x, y) == bot && l.join(x, y) == top))
                .collect()
        }
    }
}

/// Splits `l` into directly indecomposable factors, sorted by size and
/// then by fingerprint. The one-element lattice has no factors.
pub fn factorize(l: &AbstractLattice) -> Result<Vec<AbstractLattice>> {
    let mut out = Vec::new();
    collect_factors(l, &mut out)?;
    let mut keyed = Vec::with_capacity(out.len());
    for f in out {
        keyed.push((f.len(), fingerprint(&f)?, f));
    }
    keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    Ok(keyed.into_iter().map(|(_, _, f)| f).collect())
}

fn collect_factors(l: &AbstractLattice, out: &mut Vec<AbstractLattice>) -> Result<()> {
    if l.len() == 1 {
        return Ok(());
    }
    match &l.repr {
        Repr::Product { factors, .. } => {
            for f in factors {
                collect_factors(f, out)?;
            }
            Ok(())
        }
        // A unique atom rules out any nontrivial product.
        Repr::Adjoined(_) => {
            out.push(l.clone());
            Ok(())
        }
        Repr::Dual(inner) => {
            let mut inner_factors = Vec::new();
            collect_factors(inner, &mut inner_factors)?;
            out.extend(inner_factors.iter().map(|f| f.dual()));
            Ok(())
        }
        Repr::Dense(_) => match l.central_pair() {
            None => {
                out.push(l.clone());
                Ok(())
            }
            Some((a, b)) => {
                let (la, _) = l.lower_interval(a)?;
                let (lb, _) = l.lower_interval(b)?;
                collect_factors(&la, out)?;
                collect_factors(&lb, out)
            }
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n5() -> AbstractLattice {
        // 0 < a < b < 1, 0 < c < 1
        AbstractLattice::from_covers(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap()
    }

    #[test]
    fn chains_and_quasi_antichains() {
        assert_eq!(mk_chain(1).unwrap().len(), 1);
        assert_eq!(quasi_antichain_width(&mk_chain(1).unwrap()), Some(0));
        assert_eq!(quasi_antichain_width(&mk_chain(2).unwrap()), None);
        assert_eq!(quasi_antichain_width(&mk_chain(3).unwrap()), Some(1));
        assert_eq!(quasi_antichain_width(&mk_chain(4).unwrap()), None);
        for n in 0..6 {
            let m = mk_quasi_antichain(n).unwrap();
            assert_eq!(quasi_antichain_width(&m), Some(n));
            assert!(is_modular(&m).is_ok());
        }
    }

    #[test]
    fn pentagon_is_not_modular() {
        let l = n5();
        let (a, b, c) = is_modular(&l).unwrap_err();
        assert!(l.leq(a, c));
        assert_ne!(l.join(a, l.meet(b, c)), l.meet(l.join(a, b), c));
        assert!(is_modular(&adjoin_bounds(&l)).is_err());
        assert!(is_modular(&l.dual()).is_err());
    }

    #[test]
    fn non_lattices_are_rejected() {
        // Two incomparable maximal elements.
        assert!(AbstractLattice::from_covers(3, &[(0, 1), (0, 2)]).is_err());
        // Two minimal upper bounds of a pair.
        let bowtie = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)];
        assert!(AbstractLattice::from_covers(6, &bowtie).is_err());
        assert!(AbstractLattice::from_covers(2, &[(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn product_sizes_and_structure() {
        let m3 = mk_quasi_antichain(3).unwrap();
        let sq = cartesian(&m3, &m3).unwrap();
        assert_eq!(sq.len(), 25);
        assert_eq!(atoms(&sq).len(), 6);
        let cube = cartesian(&sq, &m3).unwrap();
        let big = adjoin_bounds(&cube);
        assert_eq!(big.len(), 127);
        assert_eq!(atoms(&big).len(), 1);
        assert_eq!(coatoms(&big).len(), 1);
        assert!(is_modular(&big).is_ok());
        assert_eq!(complemented_elements(&big), vec![0, 126]);
        assert_eq!(complemented_elements(&sq).len(), 25);
        // The structural and dense views agree.
        let dense = sq.to_dense().unwrap();
        for x in 0..25 {
            for y in 0..25 {
                assert_eq!(sq.leq(x, y), dense.leq(x, y));
                assert_eq!(sq.meet(x, y), dense.meet(x, y));
                assert_eq!(sq.join(x, y), dense.join(x, y));
            }
        }
    }

    #[test]
    fn dense_factorization() {
        let m3 = mk_quasi_antichain(3).unwrap();
        let c3 = mk_chain(3).unwrap();
        let p = cartesian(&m3, &c3).unwrap().to_dense().unwrap();
        let fs = factorize(&p).unwrap();
        assert_eq!(fs.iter().map(|f| f.len()).collect::<Vec<_>>(), vec![3, 5]);
        assert_eq!(quasi_antichain_width(&fs[0]), Some(1));
        assert_eq!(quasi_antichain_width(&fs[1]), Some(3));
        // Chains are indecomposable.
        assert_eq!(factorize(&mk_chain(4).unwrap()).unwrap().len(), 1);
        let b3 = cartesian(&mk_chain(2).unwrap(), &cartesian(&mk_chain(2).unwrap(), &mk_chain(2).unwrap()).unwrap())
            .unwrap()
            .to_dense()
            .unwrap();
        assert_eq!(factorize(&b3).unwrap().len(), 3);
        assert!(factorize(&mk_chain(1).unwrap()).unwrap().is_empty());
        assert_eq!(factorize(&n5()).unwrap().len(), 1);
    }
}
