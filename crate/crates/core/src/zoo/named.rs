//! Small named groups with documented element indexing.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, Label, TABLE_LIMIT};

use super::field::is_prime;
use super::unitriangular::unitriangular_group;

/// Upper bound on the order of a cyclic or elementary abelian atom.
pub const MAX_ATOM_ORDER: usize = 1 << 20;

/// Largest `n` accepted by [`sym`].
pub const MAX_SYM_DEGREE: usize = 8;

pub fn trivial() -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::from_fn("trivial", vec![Label::Int(0)], |_, _| 0, |_| 0))
}

/// `Z_k` on residues `0..k`.
pub fn cyclic(k: usize) -> Result<Arc<FiniteGroup>> {
    if k == 0 {
        return Err(Error::Precondition("cyclic group of order 0".into()));
    }
    if k > MAX_ATOM_ORDER {
        return Err(Error::capacity("cyclic group order", MAX_ATOM_ORDER as u64));
    }
    let m = k as u32;
    let labels = (0..k as u64).map(Label::Int).collect();
    Ok(Arc::new(FiniteGroup::from_fn(
        format!("Z{k}"),
        labels,
        move |a, b| (a + b) % m,
        move |a| (m - a) % m,
    )))
}

/// `(Z_p)^k`; the index is the base-`p` number whose digit `i` (least
/// significant first) is coordinate `i`.
pub fn elemab(p: usize, k: usize) -> Result<Arc<FiniteGroup>> {
    if !is_prime(p as u64) {
        return Err(Error::Precondition(format!("{p} is not prime")));
    }
    let order = (p as u64)
        .checked_pow(k as u32)
        .filter(|&o| o <= MAX_ATOM_ORDER as u64)
        .ok_or_else(|| Error::capacity("elementary abelian order", MAX_ATOM_ORDER as u64))? as usize;
    let digits = move |mut x: u32| {
        let mut out = Vec::with_capacity(k);
        for _ in 0..k {
            out.push(x % p as u32);
            x /= p as u32;
        }
        out
    };
    let labels = (0..order as u32).map(|x| Label::Tuple(digits(x))).collect();
    let pu = p as u32;
    let op = move |a: u32, b: u32, sign: bool| {
        let (mut a, mut b) = (a, b);
        let (mut out, mut scale) = (0u32, 1u32);
        for _ in 0..k {
            let (da, db) = (a % pu, b % pu);
            let d = if sign { (da + db) % pu } else { (pu - da) % pu };
            out += d * scale;
            scale *= pu;
            a /= pu;
            b /= pu;
        }
        out
    };
    Ok(Arc::new(FiniteGroup::from_fn(
        format!("E{p}^{k}"),
        labels,
        move |a, b| op(a, b, true),
        move |a| op(a, 0, false),
    )))
}

/// `S_n` acting on `0..n`, generated by `(0 1)` and `(0 1 ... n-1)` and
/// enumerated breadth-first. A Cayley table is kept for `n ≤ 6`.
pub fn sym(n: usize) -> Result<Arc<FiniteGroup>> {
    if n == 0 || n > MAX_SYM_DEGREE {
        return Err(Error::Precondition(format!("sym({n}) is outside 1..={MAX_SYM_DEGREE}")));
    }
    let mut transposition: Vec<u16> = (0..n as u16).collect();
    if n > 1 {
        transposition.swap(0, 1);
    }
    let cycle: Vec<u16> = (0..n as u16).map(|i| (i + 1) % n as u16).collect();
    let gens = vec![transposition, cycle];
    let name = format!("S{n}");
    if n <= 6 {
        let id: Vec<u16> = (0..n as u16).collect();
        let compose = |a: &Vec<u16>, b: &Vec<u16>| b.iter().map(|&i| a[i as usize]).collect::<Vec<u16>>();
        Ok(Arc::new(FiniteGroup::from_generators(name, id, &gens, compose, |p| {
            Label::Perm(p.clone())
        })?))
    } else {
        Ok(Arc::new(FiniteGroup::from_permutations_untabled(name, n, &gens)?))
    }
}

/// Dihedral group of order `2n`: index `a·n + i` is `r^i s^a` with
/// `s r s = r^{-1}`.
pub fn dih(n: usize) -> Result<Arc<FiniteGroup>> {
    dih_group(n).map(Arc::new)
}

fn dih_group(n: usize) -> Result<FiniteGroup> {
    if n == 0 || 2 * n > TABLE_LIMIT {
        return Err(Error::Precondition(format!("dih({n}) needs 1 ≤ 2n ≤ {TABLE_LIMIT}")));
    }
    let m = n as u32;
    let labels = (0..2 * m)
        .map(|x| Label::Word(if x < m { format!("r{}", x) } else { format!("r{}s", x - m) }))
        .collect();
    let mul = move |x: u32, y: u32| {
        let (i, a) = (x % m, x / m);
        let (k, b) = (y % m, y / m);
        let k = if a == 1 { (m - k) % m } else { k };
        ((a + b) % 2) * m + (i + k) % m
    };
    let inv = move |x: u32| if x < m { (m - x) % m } else { x };
    Ok(FiniteGroup::from_fn(format!("D{}", 2 * n), labels, mul, inv))
}

/// Quaternion group. Index `4b + a` is `i^a j^b`, labelled
/// `1, i, -1, -i, j, k, -j, -k`. The central involution `-1` has index 2.
pub fn q8() -> Arc<FiniteGroup> {
    let names = ["1", "i", "-1", "-i", "j", "k", "-j", "-k"];
    let labels = names.iter().map(|s| Label::Word(s.to_string())).collect();
    let mul = |x: u32, y: u32| {
        let (a, b) = (x % 4, x / 4);
        let (c, d) = (y % 4, y / 4);
        match (b, d) {
            (0, _) => d * 4 + (a + c) % 4,
            (1, 0) => 4 + (a + 4 - c) % 4,
            _ => (a + 6 - c) % 4,
        }
    };
    let inv = |x: u32| if x < 4 { (4 - x) % 4 } else { 4 + (x + 2) % 4 };
    Arc::new(FiniteGroup::from_fn("Q8", labels, mul, inv))
}

/// Index of `r` and `s` in [`qd16`].
pub const QD16_R: Elem = 1;
pub const QD16_S: Elem = 8;

/// Quasidihedral group `<r, s | r^8 = s^2 = 1, srs = r^3>`. Index `8a + i`
/// is `r^i s^a`.
pub fn qd16() -> Arc<FiniteGroup> {
    let labels = (0..16u32)
        .map(|x| Label::Word(if x < 8 { format!("r{x}") } else { format!("r{}s", x - 8) }))
        .collect();
    // s r^k = r^{3k} s
    let mul = |x: u32, y: u32| {
        let (i, a) = (x % 8, x / 8);
        let (k, b) = (y % 8, y / 8);
        let k = if a == 1 { (3 * k) % 8 } else { k };
        ((a + b) % 2) * 8 + (i + k) % 8
    };
    let inv = move |x: u32| (0..16).find(|&y| mul(x, y) == 0).unwrap();
    Arc::new(FiniteGroup::from_fn("QD16", labels, mul, inv))
}

/// The two isomorphism types of extraspecial group of order `p^3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Extraspecial {
    /// `D8` for `p = 2`; the Heisenberg group of exponent `p` otherwise.
    Plus,
    /// `Q8` for `p = 2`; `Z_{p^2} ⋊ Z_p` with `x ↦ (1+p)x` otherwise.
    Minus,
}

pub fn extraspecial(p: usize, kind: Extraspecial) -> Result<Arc<FiniteGroup>> {
    if !is_prime(p as u64) {
        return Err(Error::Precondition(format!("{p} is not prime")));
    }
    if p * p * p > TABLE_LIMIT {
        return Err(Error::capacity("extraspecial order", TABLE_LIMIT as u64));
    }
    let g = match (p, kind) {
        (2, Extraspecial::Plus) => dih_group(4)?,
        (2, Extraspecial::Minus) => return Ok(q8()),
        (_, Extraspecial::Plus) => unitriangular_group(p as u32, 1)?.with_name(format!("{p}^1+2_+")),
        (_, Extraspecial::Minus) => {
            // (x, t) with x mod p^2 and t mod p; index t·p^2 + x.
            let pp = (p * p) as u32;
            let pu = p as u32;
            let mut pow = vec![1u32; p];
            for t in 1..p {
                pow[t] = pow[t - 1] * (1 + pu) % pp;
            }
            let labels = (0..pp * pu).map(|z| Label::Tuple(vec![z % pp, z / pp])).collect();
            let mul = move |a: u32, b: u32| {
                let (x1, t1) = (a % pp, a / pp);
                let (x2, t2) = (b % pp, b / pp);
                ((t1 + t2) % pu) * pp + (x1 + pow[t1 as usize] * x2) % pp
            };
            let order = pp * pu;
            let m = mul.clone();
            let inv = move |a: u32| (0..order).find(|&b| m(a, b) == 0).unwrap();
            FiniteGroup::from_fn(format!("{p}^1+2_-"), labels, mul, inv)
        }
    };
    Ok(Arc::new(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{all_subgroups, center, closure, is_abelian, ORACLE_BOUND};

    #[test]
    fn orders() {
        assert_eq!(cyclic(7).unwrap().order(), 7);
        assert_eq!(elemab(3, 2).unwrap().order(), 9);
        assert_eq!(sym(4).unwrap().order(), 24);
        assert_eq!(sym(7).unwrap().order(), 5040);
        assert_eq!(dih(4).unwrap().order(), 8);
        assert_eq!(q8().order(), 8);
        assert_eq!(qd16().order(), 16);
        assert!(sym(9).is_err());
        assert!(elemab(4, 2).is_err());
    }

    #[test]
    fn axioms_hold() {
        for g in [
            trivial(),
            cyclic(12).unwrap(),
            elemab(2, 3).unwrap(),
            sym(3).unwrap(),
            sym(5).unwrap(),
            dih(5).unwrap(),
            q8(),
            qd16(),
            extraspecial(3, Extraspecial::Minus).unwrap(),
            extraspecial(5, Extraspecial::Plus).unwrap(),
        ] {
            g.verify_axioms().unwrap();
        }
    }

    #[test]
    fn s4_has_trivial_center() {
        let g = sym(4).unwrap();
        assert_eq!(center(&g).order(), 1);
    }

    #[test]
    fn qd16_presentation() {
        let g = qd16();
        let (r, s) = (QD16_R, QD16_S);
        assert_eq!(g.element_order(r), 8);
        assert_eq!(g.element_order(s), 2);
        assert_eq!(g.mul(g.mul(s, r), s), g.pow(r, 3));
        assert_eq!(closure(&g, &[r as usize, s as usize]).unwrap().order(), 16);
    }

    #[test]
    fn q8_structure() {
        let g = q8();
        assert_eq!(closure(&g, &[1]).unwrap().order(), 4);
        let z = center(&g);
        assert_eq!(z.elements().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(all_subgroups(&g, ORACLE_BOUND).unwrap().len(), 6);
        // i j = k
        assert_eq!(g.mul(1, 4), 5);
    }

    #[test]
    fn extraspecial_order_27() {
        for kind in [Extraspecial::Plus, Extraspecial::Minus] {
            let g = extraspecial(3, kind).unwrap();
            assert_eq!(g.order(), 27);
            let z = center(&g);
            assert_eq!(z.order(), 3);
            assert!(!is_abelian(&g, &crate::group::Subgroup::whole(&g)));
            let exponent_3 = g.elements().all(|x| g.element_order(x) <= 3);
            assert_eq!(exponent_3, kind == Extraspecial::Plus);
            let (quot, _) = crate::group::quotient(&g, &z).unwrap();
            assert_eq!(quot.order(), 9);
            assert!(quot.elements().all(|x| quot.element_order(x) <= 3));
        }
    }
}
