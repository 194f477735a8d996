use std::collections::BTreeSet;

use cdlat_core::bitset::BitSet;
use cdlat_core::cd::{cd_lattice, cd_lattice_oracle, cd_subgroup};
use cdlat_core::group::{
    all_subgroups, center, find_isomorphism, is_abelian, is_normal, product_subset, FiniteGroup, Subgroup,
    ORACLE_BOUND,
};
use cdlat_core::lattice::{
    adjoin_bounds, cartesian, factorize, is_isomorphic, is_modular, mk_quasi_antichain, quasi_antichain_width,
};
use cdlat_core::zoo::*;

/// Subgroups of `g` containing `Z(g)`, by exhaustive enumeration.
fn above_center(g: &FiniteGroup) -> BTreeSet<BitSet> {
    let z = center(g);
    all_subgroups(g, ORACLE_BOUND)
        .unwrap()
        .into_iter()
        .filter(|h| z.is_subgroup_of(h))
        .map(Subgroup::into_bits)
        .collect()
}

fn member_bits(l: &cdlat_core::cd::CdLattice) -> BTreeSet<BitSet> {
    l.subgroups().map(|h| h.bits().clone()).collect()
}

#[test]
fn s4_is_a_two_chain() {
    let g = sym(4).unwrap();
    let l = cd_lattice(&g).unwrap();
    let orders: Vec<usize> = l.members().iter().map(|m| m.order()).collect();
    assert_eq!(orders, vec![1, 24]);
    assert!(l.is_cd_simple());
    assert_eq!(quasi_antichain_width(&l.to_abstract()), None);
}

#[test]
fn extraspecial_groups_are_subgroups_above_center() {
    for (p, kind, width) in [
        (2, Extraspecial::Plus, 3),
        (2, Extraspecial::Minus, 3),
        (3, Extraspecial::Plus, 4),
        (3, Extraspecial::Minus, 4),
    ] {
        let g = extraspecial(p, kind).unwrap();
        let l = cd_lattice(&g).unwrap();
        assert_eq!(member_bits(&l), above_center(&g), "{p} {kind:?}");
        assert_eq!(quasi_antichain_width(&l.to_abstract()), Some(width));
    }
    let q = cd_lattice(&q8()).unwrap();
    assert_eq!(q.len(), 5);
    assert_eq!(member_bits(&q), above_center(&q8()));
}

#[test]
fn unitriangular_lattices_are_quasi_antichains() {
    for (p, n) in [(2u32, 1u32), (3, 1), (2, 2), (5, 1), (3, 2)] {
        let q = p.pow(n) as usize;
        let g = unitriangular(p, n).unwrap();
        assert_eq!(g.order(), q * q * q);
        let l = cd_lattice(&g).unwrap();
        assert_eq!(quasi_antichain_width(&l.to_abstract()), Some(q + 1), "UT(3,{q})");
        assert_eq!(l.top().order(), g.order());
        assert_eq!(l.bottom().subgroup, center(&g));
        for m in &l.members()[1..l.len() - 1] {
            assert!(is_abelian(&g, &m.subgroup));
            assert_eq!(m.order(), q * q);
        }
        if g.order() <= ORACLE_BOUND {
            assert!(l.same_members(&cd_lattice_oracle(&g, ORACLE_BOUND).unwrap()));
        }
    }
}

#[test]
fn prop9_acting_groups() {
    let c = prop9_action(2, 2).unwrap();
    assert_eq!(c.t().order(), 6);
    assert!(find_isomorphism(c.t(), &sym(3).unwrap()).is_some());

    let c = prop9_action(3, 2).unwrap();
    let t = c.t();
    assert_eq!(t.order(), 16);
    assert!(find_isomorphism(t, &qd16()).is_some());
    let (r, s) = (c.h_gen, c.k_gen);
    assert_eq!(t.pow(r, 8), 0);
    assert_eq!(t.pow(s, 2), 0);
    assert_eq!(t.mul(t.mul(s, r), s), t.pow(r, 3));
    assert_eq!(t.element_order(r), 8);

    for c in [prop9_action(2, 2).unwrap(), prop9_action(3, 2).unwrap()] {
        let a = center_action(&c);
        assert!(a.faithful && a.irreducible, "{}", c.name);
        assert_eq!(a.center_order, (c.prime * c.prime) as usize);
    }
}

#[test]
fn brewster_lattice_is_m3_cubed() {
    let c = brewster().unwrap();
    let p = c.p();
    assert_eq!(p.order(), 256);
    let l = cd_lattice(p).unwrap();
    assert_eq!(l.len(), 125);

    let (cube, proj) = brewster_quotient().unwrap();
    assert_eq!(cube.order(), 512);
    let q = cd_lattice(&q8()).unwrap();
    let qm: Vec<&BitSet> = q.subgroups().map(|h| h.bits()).collect();
    let mut expected = BTreeSet::new();
    for x in &qm {
        for y in &qm {
            for z in &qm {
                let prod = product_subset(&[8, 8, 8], &[x, y, z]);
                expected.insert(proj.image_of(&prod));
            }
        }
    }
    assert_eq!(expected.len(), 125);
    assert_eq!(member_bits(&l), expected);

    let m3 = mk_quasi_antichain(3).unwrap();
    let m3_cubed = cartesian(&cartesian(&m3, &m3).unwrap(), &m3).unwrap();
    let abs = l.to_abstract();
    assert!(is_isomorphic(&abs, &m3_cubed).unwrap().is_some());
    let fs = factorize(&abs).unwrap();
    assert_eq!(fs.len(), 3);
    for f in &fs {
        assert_eq!(quasi_antichain_width(f), Some(3));
    }
}

#[test]
fn flagship_subdirect_product() {
    let s = s0().unwrap();
    let g = &s.group;
    assert_eq!(g.order(), 20736);
    assert_eq!(g.order(), (1 << 8) * 81);
    let l = cd_lattice(g).unwrap();
    let orders: Vec<usize> = l.members().iter().map(|m| m.order()).collect();
    assert_eq!(orders, vec![1, 144, 20736]);
    assert_eq!(l.mstar(), 20736);
    let a = &l.members()[1].subgroup;
    assert!(is_abelian(g, a));
    assert!(is_normal(g, a));
    assert_eq!(*a, s.p_product());
    assert!(cd_subgroup(g).unwrap().is_trivial());
    assert!(!l.is_cd_simple());
    assert!(l.is_cd_minimal().unwrap());
    let abs = l.to_abstract();
    assert_eq!(quasi_antichain_width(&abs), Some(1));
    assert_eq!(factorize(&abs).unwrap().len(), 1);
}

fn exponent(n: usize, p: usize) -> u32 {
    let (mut n, mut e) = (n, 0);
    while n % p == 0 {
        n /= p;
        e += 1;
    }
    assert_eq!(n, 1);
    e
}

#[test]
fn theorem2_hypotheses_and_orders() {
    let twos = [minimal(2).unwrap(), prop9_action(2, 2).unwrap(), brewster().unwrap()];
    let threes = [minimal(3).unwrap(), prop9_action(3, 2).unwrap()];
    for c in twos.iter().chain(&threes) {
        let r = hypothesis_check(c, c.prime, 2);
        assert!(r.passed(), "{r}");
    }
    let bad = hypothesis_check(&twos[0], 3, 2);
    assert!(!bad.passed());
    for c1 in &twos {
        for c2 in &twos {
            for c3 in &threes {
                let (a, b, c) = (exponent(c1.p().order(), 2), exponent(c2.p().order(), 2), exponent(c3.p().order(), 3));
                let expect = 2u64.pow(a + b + 4) * 3u64.pow(c + 2);
                assert_eq!(theorem2_order([c1, c2, c3]), expect);
            }
        }
    }
}

#[test]
fn theorem2_rejects_oversized_builds() {
    let e = theorem2_build([brewster().unwrap(), brewster().unwrap(), prop9_action(3, 2).unwrap()]).unwrap_err();
    assert!(matches!(e, cdlat_core::Error::Capacity { .. }));
}

#[test]
fn predicted_table_lattices() {
    let m = |n| mk_quasi_antichain(n).unwrap();
    let m3_cubed = cartesian(&cartesian(&m(3), &m(3)).unwrap(), &m(3)).unwrap();
    let twos = [m(0), m(5), m3_cubed];
    let threes = [m(0), m(10)];
    let mut sizes = Vec::new();
    for p3 in &threes {
        for (i, p1) in twos.iter().enumerate() {
            for p2 in &twos[i..] {
                let l = adjoin_bounds(&cartesian(&cartesian(p1, p2).unwrap(), p3).unwrap());
                assert!(is_modular(&l).is_ok());
                sizes.push(l.len());
            }
        }
    }
    // (|L1||L2| |L3|) + 2 with |M_n| = n + 2 and |M_0| = 1.
    let expect: Vec<usize> = [1usize, 12]
        .iter()
        .flat_map(|&c| {
            [(1usize, 1usize), (1, 7), (1, 125), (7, 7), (7, 125), (125, 125)]
                .into_iter()
                .map(move |(a, b)| a * b * c + 2)
        })
        .collect();
    assert_eq!(sizes, expect);
    assert_eq!(sizes, vec![3, 9, 127, 51, 877, 15627, 14, 86, 1502, 590, 10502, 187502]);
}
