use sergeev_core::fusion::{
    inversion_identity, verify_projection_identity, verify_resolvent_identities,
};
use sergeev_core::idempotents::{
    verify_flip_relations, verify_idempotent_system_with, verify_intertwiner_relations,
    verify_intertwining_property, verify_spectral_identity, zeta_basis_rank, IdempotentTree,
    Intertwiners,
};
use sergeev_core::repmodules::{
    seminormal_module, spin_module, uhat_module, verify_module_relations, verify_spin_in_uhat,
};
use sergeev_core::suites::{fusion_spot, suite_dimensions, suite_zeta, theta_word_checks};
use sergeev_core::tableaux::{enumerate_standard_tableaux, enumerate_strict_partitions};
use sergeev_core::{Permutation, Scalar, ShiftedTableau, StrictPartition};

fn tab(s: &str) -> ShiftedTableau {
    s.parse().unwrap()
}

#[test]
fn products_of_idempotents_at_n_4() {
    let tree = IdempotentTree::new(4).unwrap();
    let level: Vec<_> = tree.level(4).iter().collect();
    assert_eq!(level.len(), 8 + 8);
    for (u, eu) in &level {
        for (v, ev) in &level {
            let p = *eu * *ev;
            if u == v {
                assert_eq!(&p, *ev, "e_U^2 for {}", u);
            } else {
                assert!(p.is_zero(), "e_U e_V for {} {}", u, v);
            }
        }
    }
}

#[test]
fn idempotent_systems_up_to_four() {
    for n in 1..=4 {
        let tree = IdempotentTree::new(n).unwrap();
        let r = verify_idempotent_system_with(&tree).unwrap();
        assert!(r.passed(), "{}", r);
        assert!(verify_spectral_identity(&tree).unwrap());
        assert!(verify_flip_relations(&tree).unwrap());
    }
}

#[test]
fn intertwiners_up_to_four() {
    for n in 2..=4 {
        let tree = IdempotentTree::new(n).unwrap();
        let phis = Intertwiners::new(tree.sergeev()).unwrap();
        let r = verify_intertwiner_relations(&phis).unwrap();
        assert!(r.passed(), "{}", r);
        let r = verify_intertwining_property(&tree, &phis).unwrap();
        assert!(r.passed(), "{}", r);
    }
}

#[test]
fn star_of_phi_w_on_sym_3_but_not_beyond() {
    let tree = IdempotentTree::new(3).unwrap();
    let phis = Intertwiners::new(tree.sergeev()).unwrap();
    for w in Permutation::all(3) {
        assert_eq!(phis.phi_w(&w).unwrap().star(), phis.phi_star_w(&w).unwrap());
    }
    let tree = IdempotentTree::new(4).unwrap();
    let phis = Intertwiners::new(tree.sergeev()).unwrap();
    let s3 = Permutation::simple(4, 3);
    assert_ne!(phis.phi_w(&s3).unwrap().star(), phis.phi_w(&s3).unwrap());
}

#[test]
fn zeta_ranks() {
    assert_eq!(zeta_basis_rank(2).unwrap().0, 8);
    assert_eq!(zeta_basis_rank(3).unwrap().0, 48);
    let r = suite_zeta(3).unwrap();
    assert!(r.passed(), "{}", r);
}

#[test]
fn dimension_identities_up_to_ten() {
    let r = suite_dimensions(10).unwrap();
    assert!(r.passed(), "{}", r);
    let total: usize = enumerate_strict_partitions(6)
        .iter()
        .map(|l| enumerate_standard_tableaux(l, true).len())
        .sum();
    let formula: u64 = enumerate_strict_partitions(6)
        .iter()
        .map(|l| l.g_lambda_formula().unwrap() << (6 - l.len()))
        .sum();
    assert_eq!(total as u64, formula);
}

#[test]
fn modules_up_to_five() {
    for n in 1..=5 {
        for l in enumerate_strict_partitions(n) {
            for rep in [seminormal_module(&l).unwrap(), spin_module(&l).unwrap()] {
                let r = verify_module_relations(&rep).unwrap();
                assert!(r.passed(), "{:?} {}: {}", rep.flavor, l, r);
            }
            if n <= 4 {
                let r = verify_module_relations(&uhat_module(&l).unwrap()).unwrap();
                assert!(r.passed(), "uhat {}: {}", l, r);
            }
        }
    }
}

#[test]
fn spin_vectors_inside_uhat() {
    for parts in [vec![2, 1], vec![3, 1], vec![3], vec![4]] {
        let l = StrictPartition::new(parts).unwrap();
        let r = verify_spin_in_uhat(&l).unwrap();
        assert!(r.passed(), "{}", r);
        let r = theta_word_checks(&l).unwrap();
        assert!(r.passed(), "{}", r);
    }
}

#[test]
fn projection_identity_for_small_tableaux() {
    let tree = IdempotentTree::new(3).unwrap();
    for v in ["1,2", "1,2b"] {
        let r = verify_projection_identity(&tree, &tab(v)).unwrap();
        assert!(r.passed(), "{}", r);
    }
    let tree = IdempotentTree::new(4).unwrap();
    for v in tree.level(3).keys() {
        assert!(
            verify_projection_identity(&tree, v).unwrap().passed(),
            "{}",
            v
        );
    }
}

#[test]
fn rational_identities_for_small_shapes() {
    for (v, w) in [("1,2", "1,2/3"), ("1", "1,2"), ("1,2,3", "1,2,3,4")] {
        let n = tab(w).n();
        let tree = IdempotentTree::new(n).unwrap();
        let r = verify_resolvent_identities(&tree, &tab(v), &tab(w)).unwrap();
        assert!(r.passed(), "{} -> {}: {}", v, w, r);
    }
}

#[test]
fn phi_times_reversed_phi_is_scalar() {
    let tree = IdempotentTree::new(3).unwrap();
    for v in [
        Scalar::from_int(0),
        Scalar::sqrt_int(2),
        -Scalar::sqrt_int(6),
    ] {
        for (a, b) in [(1, 2), (2, 3), (3, 1)] {
            assert!(inversion_identity(tree.sergeev(), a, b, &v).unwrap());
        }
    }
}

#[test]
fn fusion_spot_checks_at_five() {
    let r = fusion_spot(&["1,2,3,4,5", "1,2b,4/3,5", "1,2,3b/4,5b"]).unwrap();
    assert!(r.passed(), "{}", r);
}
