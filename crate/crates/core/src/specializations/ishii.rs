use std::sync::Arc;

use cwalg_exact::Scalar;

use crate::algebra::{AlgebraElement, CwAlgebra, Parameters};
use crate::coxeter::{CoxeterSystem, CoxeterType};
use crate::error::{Error, Result};
use crate::lattice::{Flavor, SubgroupLattice};

/// Results of evaluating Ishii's two skein relations and the cubic relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IshiiReport {
    pub relation1: bool,
    /// Second relation with `(t_0, t_1) = (1, u)`.
    pub relation2: bool,
    /// Second relation with `(t_0, t_1) = (u, 1)`.
    pub relation2_swapped: bool,
    /// `(g_s − 1)(g_s + 1)(g_s − u) = 0` for every simple `s`.
    pub cubic: bool,
}

impl IshiiReport {
    pub fn holds(&self) -> bool {
        self.relation1 && self.relation2 && self.relation2_swapped && self.cubic
    }
}

/// Evaluates the relations in `C_{A_k}(u)` with `σ_i ↦ g_i`, on the first two
/// strands. `u` and `u_inv` must be mutually inverse.
pub fn ishii_check<S: Scalar>(k: usize, u: S, u_inv: S) -> Result<IshiiReport> {
    if k < 2 {
        return Err(Error::InvalidArgument("the relations need at least three strands".into()));
    }
    if !u.mul(&u_inv).is_one() {
        return Err(Error::InvalidArgument("u_inv is not the inverse of u".into()));
    }
    let group = Arc::new(CoxeterSystem::new(CoxeterType::A(k))?);
    let lattice = SubgroupLattice::enumerate(group.roots_arc())?;
    let n = group.roots().num_classes();
    let params = Parameters::per_class(vec![u.clone(); n]).with_inverses(vec![u_inv; n]);
    let alg = CwAlgebra::new(group, &lattice, Flavor::Full, params)?;

    let s = [alg.g(0), alg.g(1)];
    let si = [alg.g_inv(0)?, alg.g_inv(1)?];
    // letters: 1, 2 for s_1, s_2 and -1, -2 for their inverses
    let word = |w: &[i8]| -> AlgebraElement<S> {
        let factors: Vec<&AlgebraElement<S>> =
            w.iter().map(|&l| if l > 0 { &s[l as usize - 1] } else { &si[(-l) as usize - 1] }).collect();
        alg.product(factors)
    };
    let sum = |ws: &[&[i8]]| -> AlgebraElement<S> { ws.iter().fold(alg.zero(), |acc, w| acc.add(&word(w))) };

    let lhs1 = sum(&[&[1, 2, -1], &[-1, -2, 1], &[1, 2], &[-1, -2], &[2, -1], &[-2, 1]]);
    let rhs1 = sum(&[&[1, -2, -1], &[-1, 2, 1], &[1, -2], &[-1, 2], &[-2, -1], &[2, 1]]);

    let relation2 = |t0: &S, t1: &S| -> bool {
        let t = t0.mul(t1);
        let lhs = word(&[1, -2, 1])
            .sub(&word(&[2, -1, 2]))
            .add(&word(&[-2, 1, -2]).scale(&t))
            .sub(&word(&[-1, 2, -1]).scale(&t));
        let bracket = sum(&[&[-2, 1], &[1, -2], &[1], &[-2]]).sub(&sum(&[&[-1, 2], &[2, -1], &[2], &[-1]]));
        let k = t0.sub(&S::one()).mul(&t1.sub(&S::one())).neg();
        lhs == bracket.scale(&k)
    };

    let one = alg.one();
    let cubic = (0..alg.group().rank()).all(|i| {
        let g = alg.g(i);
        let f = alg.product([&g.sub(&one), &g.add(&one), &g.sub(&one.scale(&u))]);
        f.is_empty()
    });

    Ok(IshiiReport {
        relation1: lhs1 == rhs1,
        relation2: relation2(&S::one(), &u),
        relation2_swapped: relation2(&u, &S::one()),
        cubic,
    })
}
