//! Braid morphisms `Ψ_λ : s ↦ g_s + λ_s g_s e_s` and the computations built
//! on them.

mod braid_dim;
mod ishii;
mod monoid;
mod semisimple;
mod spectrum;

use cwalg_exact::{Field, Scalar};

use crate::algebra::{AlgebraElement, CwAlgebra};
use crate::error::{Error, Result};

pub use braid_dim::{braid_image_dimension, braid_image_dimension_fp, BraidDimOptions, DEFAULT_DIM_CAP};
pub use ishii::{ishii_check, IshiiReport};
pub use monoid::{MonoidAlgebra, MonoidReport};
pub use semisimple::{semisimplicity_u1, SemisimplicityReport, DEFAULT_SS_CAP};
pub use spectrum::{a1_discriminant, a1_spectrum, closed_form_discriminant, A1Spectrum, DiscriminantReport};

/// `λ_c` per conjugacy class of reflections.
#[derive(Clone, Debug)]
pub struct LambdaParams<S> {
    per_class: Vec<S>,
}

impl<S: Scalar> LambdaParams<S> {
    pub fn per_class(per_class: Vec<S>) -> Self {
        LambdaParams { per_class }
    }

    pub fn uniform<T: Scalar>(alg: &CwAlgebra<T>, lambda: S) -> Self {
        LambdaParams { per_class: vec![lambda; alg.group().roots().num_classes()] }
    }

    /// `λ_s` for a simple index.
    pub fn for_simple<T: Scalar>(&self, alg: &CwAlgebra<T>, s: usize) -> &S {
        &self.per_class[alg.group().roots().simple_class()[s]]
    }
}

/// `Ψ(s) = g_s + λ_s g_s e_s`.
pub fn psi_generator<S: Scalar>(alg: &CwAlgebra<S>, s: usize, lambda: &LambdaParams<S>) -> AlgebraElement<S> {
    let g = alg.g(s);
    let ge = alg.right_e(s, &g);
    g.add(&ge.scale(lambda.for_simple(alg, s)))
}

/// Left multiplication by `Ψ(s)`, i.e. `x ↦ g_s (x + λ_s e_s x)`.
pub fn apply_psi<S: Scalar>(alg: &CwAlgebra<S>, s: usize, lambda: &S, x: &AlgebraElement<S>) -> AlgebraElement<S> {
    let inner = if lambda.is_zero() { x.clone() } else { x.add(&alg.left_e(s, x).scale(lambda)) };
    alg.left_g(s, &inner)
}

/// Image of a positive braid word.
pub fn psi_word<S: Scalar>(alg: &CwAlgebra<S>, word: &[usize], lambda: &LambdaParams<S>) -> AlgebraElement<S> {
    word.iter().rev().fold(alg.one(), |acc, &s| apply_psi(alg, s, lambda.for_simple(alg, s), &acc))
}

/// `Ψ(s)⁻¹ = (1 − λ_s/(1+λ_s) e_s) g_s⁻¹`, defined when `λ_s ≠ −1`.
pub fn psi_inverse<S: Field>(alg: &CwAlgebra<S>, s: usize, lambda: &LambdaParams<S>) -> Result<AlgebraElement<S>> {
    let l = lambda.for_simple(alg, s);
    let k = l.add(&S::one()).inv().ok_or(Error::NonInvertibleLambda)?.mul(l);
    let ginv = alg.g_inv(s)?;
    Ok(ginv.sub(&alg.left_e(s, &ginv).scale(&k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Parameters;
    use crate::coxeter::CoxeterSystem;
    use crate::lattice::{Flavor, SubgroupLattice};
    use cwalg_exact::{Laurent, Rational};
    use std::sync::Arc;

    #[test]
    fn lambda_zero_is_g() {
        let g = Arc::new(CoxeterSystem::new("A2".parse().unwrap()).unwrap());
        let l = SubgroupLattice::enumerate(g.roots_arc()).unwrap();
        let alg = CwAlgebra::new(g.clone(), &l, Flavor::Full, Parameters::symbolic(g.roots())).unwrap();
        let lam = LambdaParams::uniform(&alg, Laurent::zero());
        assert_eq!(psi_generator(&alg, 0, &lam), alg.g(0));
    }

    #[test]
    fn minus_one_is_rejected() {
        let g = Arc::new(CoxeterSystem::new("A1".parse().unwrap()).unwrap());
        let l = SubgroupLattice::enumerate(g.roots_arc()).unwrap();
        let params = Parameters::field_uniform(g.roots(), Rational::from_int(5));
        let alg = CwAlgebra::new(g, &l, Flavor::Full, params).unwrap();
        let lam = LambdaParams::uniform(&alg, Rational::from_int(-1));
        assert_eq!(psi_inverse(&alg, 0, &lam), Err(Error::NonInvertibleLambda));
        let lam = LambdaParams::uniform(&alg, Rational::new(2, 3));
        let inv = psi_inverse(&alg, 0, &lam).unwrap();
        assert_eq!(alg.mul(&inv, &psi_generator(&alg, 0, &lam)), alg.one());
    }
}
