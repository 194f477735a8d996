use std::sync::Arc;

use proptest::prelude::*;

use cdlat_core::cd::{
    cd_lattice, cd_lattice_oracle, measure, product_claims, property_audit, split_from_lattice, ClaimStatus,
};
use cdlat_core::group::{all_subgroups, direct_product, is_normal, FiniteGroup, ORACLE_BOUND};
use cdlat_core::lattice::{
    adjoin_bounds, cartesian, factorize, is_isomorphic, is_modular, is_self_dual, mk_chain, mk_quasi_antichain,
    AbstractLattice,
};
use cdlat_core::zoo::*;

fn small_group(i: usize) -> Arc<FiniteGroup> {
    match i {
        0 => cyclic(1).unwrap(),
        1 => cyclic(4).unwrap(),
        2 => cyclic(6).unwrap(),
        3 => elemab(2, 2).unwrap(),
        4 => elemab(3, 2).unwrap(),
        5 => sym(3).unwrap(),
        6 => dih(4).unwrap(),
        7 => dih(5).unwrap(),
        8 => q8(),
        9 => qd16(),
        10 => extraspecial(3, Extraspecial::Minus).unwrap(),
        11 => unitriangular(2, 1).unwrap(),
        12 => sym(4).unwrap(),
        _ => dih(6).unwrap(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn fast_algorithm_matches_oracle(i in 0usize..14, j in 0usize..14) {
        let (a, b) = (small_group(i), small_group(j));
        let g = if a.order() * b.order() <= 128 {
            direct_product(&[a, b]).unwrap().0
        } else {
            a
        };
        let fast = cd_lattice(&g).unwrap();
        let slow = cd_lattice_oracle(&g, ORACLE_BOUND).unwrap();
        prop_assert!(fast.same_members(&slow));
        // No subgroup beats m*.
        for h in all_subgroups(&g, ORACLE_BOUND).unwrap() {
            prop_assert!(measure(&g, &h).measure <= fast.mstar());
        }
        for m in fast.members() {
            prop_assert_eq!(m.measure, fast.mstar());
        }
    }

    #[test]
    fn audits_have_no_failures(i in 0usize..14, j in 0usize..14) {
        let (a, b) = (small_group(i), small_group(j));
        if a.order() * b.order() <= 192 {
            let g = direct_product(&[a.clone(), b.clone()]).unwrap().0;
            let l = cd_lattice(&g).unwrap();
            for r in property_audit(&l, ORACLE_BOUND).into_iter().chain(product_claims(&l, &[a, b])) {
                prop_assert!(r.status != ClaimStatus::Fail, "{}", r);
            }
        }
    }
}

/// Random bounded lattices built from chains and quasi-antichains.
fn arb_lattice() -> impl Strategy<Value = AbstractLattice> {
    let leaf = prop_oneof![
        (1usize..5).prop_map(|k| mk_chain(k).unwrap()),
        (0usize..5).prop_map(|n| mk_quasi_antichain(n).unwrap()),
    ];
    leaf.prop_recursive(3, 60, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_filter_map("too large", |(a, b)| {
                (a.len() * b.len() <= 200).then(|| cartesian(&a, &b).unwrap())
            }),
            inner.prop_map(|a| adjoin_bounds(&a)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn factorization_recomposes(l in arb_lattice()) {
        let dense = l.to_dense().unwrap();
        let fs = factorize(&dense).unwrap();
        let mut rebuilt = mk_chain(1).unwrap();
        for f in &fs {
            rebuilt = cartesian(&rebuilt, f).unwrap();
        }
        prop_assert!(is_isomorphic(&dense, &rebuilt).unwrap().is_some());
        // Structural and dense factorizations agree in shape.
        let sizes = |v: &[AbstractLattice]| v.iter().map(|f| f.len()).collect::<Vec<_>>();
        prop_assert_eq!(sizes(&fs), sizes(&factorize(&l).unwrap()));
    }

    #[test]
    fn built_lattices_are_modular_and_self_dual(l in arb_lattice()) {
        prop_assert!(is_modular(&l).is_ok());
        let f = is_self_dual(&l).unwrap().unwrap();
        let d = l.dual();
        for x in 0..l.len() {
            for y in 0..l.len() {
                prop_assert_eq!(l.leq(x, y), d.leq(f[x], f[y]));
            }
        }
    }

    #[test]
    fn meets_and_joins_are_bounds(l in arb_lattice(), seed in any::<u64>()) {
        let n = l.len();
        let (x, y) = ((seed as usize) % n, (seed as usize / n) % n);
        let (m, j) = (l.meet(x, y), l.join(x, y));
        prop_assert!(l.leq(m, x) && l.leq(m, y) && l.leq(x, j) && l.leq(y, j));
        for z in 0..n {
            if l.leq(z, x) && l.leq(z, y) {
                prop_assert!(l.leq(z, m));
            }
            if l.leq(x, z) && l.leq(y, z) {
                prop_assert!(l.leq(j, z));
            }
        }
    }
}

#[test]
fn splitting_recovers_direct_factors() {
    let s4 = sym(4).unwrap();
    let (g, _) = direct_product(&[s4.clone(), s4.clone()]).unwrap();
    let l = cd_lattice(&g).unwrap();
    assert_eq!(l.len(), 4);
    let (h, k) = split_from_lattice(&l).unwrap().unwrap();
    assert_eq!((h.order(), k.order()), (24, 24));
    assert!(h.intersection(&k).is_trivial());
    assert!(is_normal(&g, &h) && is_normal(&g, &k));

    let l = cd_lattice(&s4).unwrap();
    assert!(split_from_lattice(&l).unwrap().is_none());
    assert!(split_from_lattice(&cd_lattice(&q8()).unwrap()).is_err());
}
