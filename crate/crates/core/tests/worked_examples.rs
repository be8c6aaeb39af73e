use sergeev_core::fusion::{fusion_evaluate, phi_value, simultaneous_evaluate};
use sergeev_core::idempotents::{
    clifford_idempotents, idempotent_in, refined_idempotent, IdempotentTree,
};
use sergeev_core::repmodules::{normalization_b, spin_module, Flavor};
use sergeev_core::suites::{
    example_one_row_fusion, example_spin_three_one, example_three_box_idempotents,
};
use sergeev_core::tableaux::{
    all_barred_tableaux, enumerate_standard_tableaux, inversion_counts, permutation_d,
    reduced_word, row_tableau,
};
use sergeev_core::{AlgebraElement, Permutation, Scalar, Sergeev, ShiftedTableau, StrictPartition};

fn tab(s: &str) -> ShiftedTableau {
    s.parse().unwrap()
}

fn shape(parts: &[usize]) -> StrictPartition {
    StrictPartition::new(parts.to_vec()).unwrap()
}

fn int(v: i64) -> Scalar {
    Scalar::from_int(v)
}

#[test]
fn six_barred_tableaux_at_n_3() {
    assert_eq!(all_barred_tableaux(3).len(), 6);
    assert_eq!(enumerate_standard_tableaux(&shape(&[3]), true).len(), 4);
    assert_eq!(enumerate_standard_tableaux(&shape(&[3, 1]), false).len(), 2);
}

#[test]
fn idempotents_at_n_3_have_the_listed_form() {
    let r = example_three_box_idempotents().unwrap();
    assert!(r.passed(), "{}", r);
}

#[test]
fn first_and_last_idempotent_at_n_3() {
    let g = Sergeev::new(3).unwrap();
    let x2 = g.jm_x(2).unwrap();
    let x3 = g.jm_x(3).unwrap();
    let r2 = g.scalar(Scalar::sqrt_int(2));
    let r6 = g.scalar(Scalar::sqrt_int(6));
    let c = (&int(2) * &Scalar::sqrt_int(2)).inverse().unwrap();
    let first = (&r2 + &x2).scale(&c);
    let last = (&r2 - &x2).scale(&c);
    let row = &first * &(&x3 * &(&x3 + &r6)).scale(&Scalar::ratio(1, 12).unwrap());
    let hook = &last * &(&g.scalar(int(6)) - &(&x3 * &x3)).scale(&Scalar::ratio(1, 6).unwrap());
    assert_eq!(idempotent_in(&g, &tab("1,2,3")).unwrap(), row);
    assert_eq!(idempotent_in(&g, &tab("1,2b/3")).unwrap(), hook);
    assert_eq!(&x2 * &x2, g.scalar(int(2)));
    assert_eq!(&(&x3 * &x3) * &x3, x3.scale(&int(6)));
}

#[test]
fn six_idempotents_sum_to_one() {
    let tree = IdempotentTree::new(3).unwrap();
    assert_eq!(tree.level(3).len(), 6);
    let g = tree.sergeev();
    let sum = tree.level(3).values().fold(g.zero(), |acc, e| &acc + e);
    assert_eq!(sum, g.one());
    let x3 = tree.level(3).iter().fold(g.zero(), |acc, (u, e)| {
        &acc + &e.scale(&u.signed_content(3))
    });
    assert_eq!(x3, g.jm_x(3).unwrap());
}

#[test]
fn spectral_identity_at_n_2() {
    let g = Sergeev::new(2).unwrap();
    let r2 = Scalar::sqrt_int(2);
    let plus = idempotent_in(&g, &tab("1,2")).unwrap();
    let minus = idempotent_in(&g, &tab("1,2b")).unwrap();
    assert_eq!(g.jm_x(2).unwrap(), &plus.scale(&r2) - &minus.scale(&r2));
}

#[test]
fn inversion_counts_for_three_one() {
    let t = tab("1,2,4/3");
    assert_eq!(t.row_word(), vec![1, 2, 4, 3]);
    assert_eq!(inversion_counts(&t), vec![0, 0, 1]);
    assert_eq!(reduced_word(&t), vec![3]);
    assert_eq!(permutation_d(&t), Permutation::transposition(4, 3, 4));
    assert_eq!(row_tableau(&shape(&[3, 1]), &[]).unwrap(), tab("1,2,3/4"));
}

#[test]
fn normalization_for_three_one() {
    assert_eq!(normalization_b(&tab("1,2,3/4")).unwrap(), int(1));
    assert_eq!(
        normalization_b(&tab("1,2,4/3")).unwrap(),
        &int(2) * &Scalar::sqrt_int(6)
    );
}

#[test]
fn normalization_is_nonzero_up_to_six() {
    for n in 1..=6 {
        for l in sergeev_core::tableaux::enumerate_strict_partitions(n) {
            for t in enumerate_standard_tableaux(&l, false) {
                assert!(!normalization_b(&t).unwrap().is_zero(), "b_T = 0 for {}", t);
            }
        }
    }
}

#[test]
fn spin_action_for_three_one() {
    let r = example_spin_three_one().unwrap();
    assert!(r.passed(), "{}", r);
    let rep = spin_module(&shape(&[3, 1])).unwrap();
    assert_eq!(rep.flavor, Flavor::Spin);
    assert_eq!(rep.dim(), 4);
    for g in &rep.generators {
        assert_eq!((g.matrix.rows(), g.matrix.cols()), (4, 4));
    }
}

#[test]
fn fusion_value_for_two_one() {
    let g = Sergeev::new(3).unwrap();
    let t = |a, b| g.gen_t_ab(a, b).unwrap();
    let c2 = g.gen_c(2).unwrap();
    let one = g.one();
    let value = &(&one + &(&t(1, 2) * &c2)) * &(&one + &(&c2 * &(&t(1, 3) - &t(2, 3))));
    let u = tab("1,2/3");
    assert_eq!(fusion_evaluate(&u).unwrap(), value);
    assert_eq!(value, idempotent_in(&g, &u).unwrap().scale(&int(6)));
    assert_eq!(
        phi_value(&g, 1, 2, &int(0), &Scalar::sqrt_int(2)).unwrap(),
        &one + &(&t(1, 2) * &c2)
    );
}

#[test]
fn simultaneous_evaluation_for_one_row() {
    for n in 1..=5 {
        let r = example_one_row_fusion(n).unwrap();
        assert!(r.passed(), "{}", r);
    }
    let g = Sergeev::new(3).unwrap();
    let u = tab("1,2,3");
    let kappa = [int(0), Scalar::sqrt_int(2), Scalar::sqrt_int(6)];
    assert_eq!(
        simultaneous_evaluate(&g, &kappa).unwrap(),
        idempotent_in(&g, &u).unwrap().scale(&int(6))
    );
}

#[test]
fn clifford_idempotents_for_two_diagonals() {
    let g = Sergeev::new(3).unwrap();
    let u = tab("1,2b/3");
    let family = clifford_idempotents(&g, &u);
    assert_eq!(family.len(), 2);
    let c13 = &g.gen_c(1).unwrap() * &g.gen_c(3).unwrap();
    let half = Scalar::ratio(1, 2).unwrap();
    let ic = c13.scale(&Scalar::i());
    assert_eq!(family[0].element, (&g.one() + &ic).scale(&half));
    assert_eq!(family[1].element, (&g.one() - &ic).scale(&half));
    let eu = idempotent_in(&g, &u).unwrap();
    let sum: AlgebraElement =
        &refined_idempotent(&g, &u, &eu, 1).unwrap() + &refined_idempotent(&g, &u, &eu, 2).unwrap();
    assert_eq!(sum, eu);
}

#[test]
fn clifford_idempotents_for_three_diagonals() {
    let g = Sergeev::new(6).unwrap();
    let u = row_tableau(&shape(&[3, 2, 1]), &[]).unwrap();
    let family = clifford_idempotents(&g, &u);
    assert_eq!(family.len(), 2);
    let (a, b) = (&family[0].element, &family[1].element);
    assert_eq!(a * a, *a);
    assert_eq!(b * b, *b);
    assert!((a * b).is_zero());
    assert_eq!(a + b, g.one());
}
