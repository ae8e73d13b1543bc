use std::collections::VecDeque;

use cwalg_exact::{DenseEchelonFp, Field, Fp, RowEchelonBasis};

use super::{apply_psi, LambdaParams};
use crate::algebra::{AlgebraElement, CwAlgebra};
use crate::error::{Error, Result};

pub const DEFAULT_DIM_CAP: usize = 20_000;

#[derive(Clone, Copy, Debug)]
pub struct BraidDimOptions {
    /// Also close under `Ψ(s)⁻¹`. Ignored for classes with `λ_s = −1`,
    /// where the generator is not invertible.
    pub include_inverses: bool,
    pub cap: usize,
}

impl Default for BraidDimOptions {
    fn default() -> Self {
        BraidDimOptions { include_inverses: true, cap: DEFAULT_DIM_CAP }
    }
}

type Operator<'a, S> = Box<dyn Fn(&AlgebraElement<S>) -> Result<AlgebraElement<S>> + 'a>;

fn generators<'a, S: Field>(
    alg: &'a CwAlgebra<S>,
    lambda: &LambdaParams<S>,
    opts: BraidDimOptions,
) -> Vec<Operator<'a, S>> {
    let mut ops: Vec<Operator<'a, S>> = Vec::new();
    for s in 0..alg.group().rank() {
        let l = lambda.for_simple(alg, s).clone();
        let inverse_factor = l.add(&S::one()).inv().map(|d| d.mul(&l));
        ops.push(Box::new(move |x| Ok(apply_psi(alg, s, &l, x))));
        if let (true, Some(k)) = (opts.include_inverses, inverse_factor) {
            ops.push(Box::new(move |x| {
                let y = alg.left_g_inv(s, x)?;
                Ok(y.sub(&alg.left_e(s, &y).scale(&k)))
            }));
        }
    }
    ops
}

/// FIFO span closure of the identity under the generator operators.
fn span_closure<S: Field>(
    alg: &CwAlgebra<S>,
    lambda: &LambdaParams<S>,
    opts: BraidDimOptions,
    mut insert: impl FnMut(&AlgebraElement<S>) -> bool,
) -> Result<usize> {
    let ops = generators(alg, lambda, opts);
    let mut queue = VecDeque::new();
    let mut rank = 0;
    let one = alg.one();
    if insert(&one) {
        rank += 1;
        queue.push_back(one);
    }
    while let Some(v) = queue.pop_front() {
        for op in &ops {
            let w = op(&v)?;
            if insert(&w) {
                rank += 1;
                if rank > opts.cap {
                    return Err(Error::BudgetExceeded(format!("braid image dimension exceeds {}", opts.cap)));
                }
                queue.push_back(w);
            }
        }
    }
    Ok(rank)
}

/// Dimension of the subalgebra generated by the images `Ψ(s)` (and their
/// inverses), using sparse elimination over `S`.
pub fn braid_image_dimension<S: Field>(
    alg: &CwAlgebra<S>,
    lambda: &LambdaParams<S>,
    opts: BraidDimOptions,
) -> Result<usize> {
    let mut basis = RowEchelonBasis::new();
    span_closure(alg, lambda, opts, |v| basis.reduce_insert(v))
}

/// Same as [`braid_image_dimension`] over `Z/PZ` with dense elimination,
/// which is much faster once the rank reaches the thousands.
pub fn braid_image_dimension_fp<const P: u64>(
    alg: &CwAlgebra<Fp<P>>,
    lambda: &LambdaParams<Fp<P>>,
    opts: BraidDimOptions,
) -> Result<usize> {
    let mut basis = DenseEchelonFp::<P>::new(alg.dim());
    span_closure(alg, lambda, opts, |v| {
        let dense = basis.sparse_to_dense(v);
        basis.reduce_insert(dense)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Parameters;
    use crate::coxeter::CoxeterSystem;
    use crate::lattice::{Flavor, SubgroupLattice};
    use cwalg_exact::{Fp31, RatFunc, Scalar};
    use std::sync::Arc;

    fn algebra<S: Field>(ty: &str, u: S) -> CwAlgebra<S> {
        let g = Arc::new(CoxeterSystem::new(ty.parse().unwrap()).unwrap());
        let l = SubgroupLattice::enumerate(g.roots_arc()).unwrap();
        let params = Parameters::field_uniform(g.roots(), u);
        CwAlgebra::new(g, &l, Flavor::Full, params).unwrap()
    }

    #[test]
    fn a1_is_three() {
        let alg = algebra("A1", Fp31::from_int(17));
        let lam = LambdaParams::uniform(&alg, Fp31::zero());
        assert_eq!(braid_image_dimension_fp(&alg, &lam, BraidDimOptions::default()).unwrap(), 3);
        assert_eq!(braid_image_dimension(&alg, &lam, BraidDimOptions::default()).unwrap(), 3);
    }

    #[test]
    fn a2_generic_is_twenty_with_or_without_inverses() {
        let alg = algebra("A2", RatFunc::var());
        let lam = LambdaParams::uniform(&alg, RatFunc::zero());
        for include_inverses in [true, false] {
            let opts = BraidDimOptions { include_inverses, ..Default::default() };
            assert_eq!(braid_image_dimension(&alg, &lam, opts).unwrap(), 20);
        }
    }

    #[test]
    fn generic_lambda_generates_everything() {
        let alg = algebra("A2", Fp31::from_int(17));
        let lam = LambdaParams::uniform(&alg, Fp31::from_int(5));
        assert_eq!(braid_image_dimension_fp(&alg, &lam, BraidDimOptions::default()).unwrap(), 30);
    }

    #[test]
    fn cap_is_enforced() {
        let alg = algebra("A2", Fp31::from_int(17));
        let lam = LambdaParams::uniform(&alg, Fp31::zero());
        let opts = BraidDimOptions { cap: 10, ..Default::default() };
        assert!(matches!(braid_image_dimension_fp(&alg, &lam, opts), Err(Error::BudgetExceeded(_))));
    }
}
