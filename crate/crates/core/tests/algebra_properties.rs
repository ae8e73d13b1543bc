use std::sync::{Arc, OnceLock};

use cwalg::algebra::{AlgebraElement, CwAlgebra, HeckeAlgebra, Parameters};
use cwalg::coxeter::{CoxeterSystem, CoxeterType};
use cwalg::lattice::{Flavor, SubgroupLattice};
use cwalg::specializations::{psi_generator, psi_inverse, psi_word, LambdaParams};
use cwalg_exact::{Laurent, MultiRational, Rational, Scalar, SparseVector};
use proptest::prelude::*;

fn algebra(ty: CoxeterType, flavor: Flavor, u: &[i64]) -> CwAlgebra<Rational> {
    let g = Arc::new(CoxeterSystem::new(ty).unwrap());
    let l = SubgroupLattice::enumerate(g.roots_arc()).unwrap();
    let params = Parameters::field(u.iter().map(|&x| Rational::from_int(x)).collect());
    CwAlgebra::new(g, &l, flavor, params).unwrap()
}

fn b2() -> &'static CwAlgebra<Rational> {
    static ALG: OnceLock<CwAlgebra<Rational>> = OnceLock::new();
    ALG.get_or_init(|| algebra(CoxeterType::B(2), Flavor::Full, &[3, 5]))
}

fn a3_parabolic() -> &'static CwAlgebra<Rational> {
    static ALG: OnceLock<CwAlgebra<Rational>> = OnceLock::new();
    ALG.get_or_init(|| algebra(CoxeterType::A(3), Flavor::Parabolic, &[7]))
}

fn element(dim: usize) -> impl Strategy<Value = AlgebraElement<Rational>> {
    prop::collection::vec((0..dim, -4i64..=4), 1..5)
        .prop_map(|t| SparseVector::from_pairs(t.into_iter().map(|(i, c)| (i, Rational::from_int(c)))))
}

fn word(rank: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..rank, 0..8)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn associative_b2(x in element(64), y in element(64), z in element(64)) {
        let a = b2();
        prop_assert_eq!(a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z)));
    }

    #[test]
    fn associative_a3_parabolic(x in element(360), y in element(360), z in element(360)) {
        let a = a3_parabolic();
        prop_assert_eq!(a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z)));
    }

    #[test]
    fn one_is_neutral(x in element(64)) {
        let a = b2();
        prop_assert_eq!(a.mul(&a.one(), &x), x.clone());
        prop_assert_eq!(a.mul(&x, &a.one()), x);
    }

    #[test]
    fn right_operators_agree_with_product(x in element(64), s in 0usize..2, t in 0usize..4) {
        let a = b2();
        prop_assert_eq!(a.right_g(s, &x), a.mul(&x, &a.g(s)));
        prop_assert_eq!(a.right_e(t, &x), a.mul(&x, &a.e(t)));
    }

    #[test]
    fn g_inverse_both_sides(x in element(64), s in 0usize..2) {
        let a = b2();
        let y = a.left_g_inv(s, &a.left_g(s, &x)).unwrap();
        prop_assert_eq!(y, x.clone());
        let y = a.right_g(s, &a.right_g_inv(s, &x).unwrap());
        prop_assert_eq!(y, x);
    }

    #[test]
    fn hecke_projection_is_multiplicative(x in element(64), y in element(64)) {
        let a = b2();
        let h = HeckeAlgebra::new(a.group_arc(), a.params());
        prop_assert_eq!(a.hecke_project(&a.mul(&x, &y)), h.mul(&a.hecke_project(&x), &a.hecke_project(&y)));
    }

    #[test]
    fn psi_multiplicative_b2(w1 in word(2), w2 in word(2), l in -3i64..=3) {
        let a = b2();
        let lam = LambdaParams::per_class(vec![Rational::from_int(l), Rational::new(1, 2)]);
        let joined: Vec<usize> = w1.iter().chain(&w2).copied().collect();
        prop_assert_eq!(psi_word(a, &joined, &lam), a.mul(&psi_word(a, &w1, &lam), &psi_word(a, &w2, &lam)));
    }

    #[test]
    fn psi_multiplicative_a2(w1 in word(2), w2 in word(2)) {
        let a = algebra(CoxeterType::A(2), Flavor::Full, &[4]);
        let lam = LambdaParams::uniform(&a, Rational::from_int(-1));
        let joined: Vec<usize> = w1.iter().chain(&w2).copied().collect();
        prop_assert_eq!(psi_word(&a, &joined, &lam), a.mul(&psi_word(&a, &w1, &lam), &psi_word(&a, &w2, &lam)));
    }
}

#[test]
fn psi_satisfies_braid_relations() {
    let a = b2();
    let lam = LambdaParams::per_class(vec![Rational::from_int(2), Rational::new(-1, 3)]);
    assert_eq!(psi_word(a, &[0, 1, 0, 1], &lam), psi_word(a, &[1, 0, 1, 0], &lam));
}

#[test]
fn psi_inverse_symbolic_a2() {
    let g = Arc::new(CoxeterSystem::new(CoxeterType::A(2)).unwrap());
    let l = SubgroupLattice::enumerate(g.roots_arc()).unwrap();
    let u = MultiRational::from_ring(Laurent::var(0));
    let alg = CwAlgebra::new(g.clone(), &l, Flavor::Full, Parameters::field_uniform(g.roots(), u)).unwrap();
    let lam = LambdaParams::uniform(&alg, MultiRational::from_ring(Laurent::var(3)));
    for s in 0..2 {
        let inv = psi_inverse(&alg, s, &lam).unwrap();
        assert_eq!(alg.mul(&inv, &psi_generator(&alg, s, &lam)), alg.one());
        assert_eq!(alg.mul(&psi_generator(&alg, s, &lam), &inv), alg.one());
    }
}

#[test]
fn a1_inverse_at_lambda_zero() {
    let g = Arc::new(CoxeterSystem::new(CoxeterType::A(1)).unwrap());
    let l = SubgroupLattice::enumerate(g.roots_arc()).unwrap();
    let alg = CwAlgebra::new(g.clone(), &l, Flavor::Full, Parameters::symbolic(g.roots())).unwrap();
    let k = Laurent::var_pow(0, -1).sub(&Laurent::one());
    let expected = alg.g(0).add(&alg.e(0).scale(&k)).add(&alg.mul(&alg.e(0), &alg.g(0)).scale(&k));
    assert_eq!(alg.g_inv(0).unwrap(), expected);
}
