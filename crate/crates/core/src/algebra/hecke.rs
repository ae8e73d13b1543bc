use std::sync::Arc;

use cwalg_exact::{Accumulator, Scalar, SparseVector};

use super::{AlgebraElement, CwAlgebra, Parameters};
use crate::coxeter::{CoxeterSystem, Elem};
use crate::error::{Error, Result};

/// Elements of the Iwahori–Hecke algebra in the basis `T_w`, indexed by element id.
pub type HeckeElement<S> = SparseVector<S>;

/// The Iwahori–Hecke algebra `H_W(u)` with `T_s² = (u_s − 1) T_s + u_s`,
/// implemented directly on the `T_w` basis.
#[derive(Clone, Debug)]
pub struct HeckeAlgebra<S> {
    group: Arc<CoxeterSystem>,
    u: Vec<S>,
    uinv: Option<Vec<S>>,
}

impl<S: Scalar> HeckeAlgebra<S> {
    pub fn new(group: Arc<CoxeterSystem>, params: &Parameters<S>) -> Self {
        let per_simple = |v: &[S]| -> Vec<S> { group.roots().simple_class().iter().map(|&c| v[c].clone()).collect() };
        let u = per_simple(params.values());
        let uinv = params.inverses().map(per_simple);
        HeckeAlgebra { group, u, uinv }
    }

    pub fn group(&self) -> &CoxeterSystem {
        &self.group
    }

    pub fn t(&self, w: Elem) -> HeckeElement<S> {
        SparseVector::unit(w as usize)
    }

    pub fn one(&self) -> HeckeElement<S> {
        self.t(0)
    }

    /// Left multiplication by `T_s`.
    pub fn left_t(&self, s: usize, x: &HeckeElement<S>) -> HeckeElement<S> {
        let g = &self.group;
        let mut acc = Accumulator::new();
        for (w, c) in x.iter() {
            let w = *w as Elem;
            let sw = g.left_mul(s, w);
            if g.length(sw) > g.length(w) {
                acc.add(sw as usize, c);
            } else {
                acc.add(w as usize, &c.mul(&self.u[s].sub(&S::one())));
                acc.add(sw as usize, &c.mul(&self.u[s]));
            }
        }
        acc.finish()
    }

    pub fn mul(&self, x: &HeckeElement<S>, y: &HeckeElement<S>) -> HeckeElement<S> {
        let mut acc = Accumulator::new();
        for (w, c) in x.iter() {
            let word = self.group.reduced_word(*w as Elem);
            let ty = word.iter().rev().fold(y.clone(), |v, &s| self.left_t(s, &v));
            acc.add_vector(&ty, c);
        }
        acc.finish()
    }

    /// `T_s⁻¹ = u_s⁻¹ T_s + (u_s⁻¹ − 1)`.
    pub fn t_inv(&self, s: usize) -> Result<HeckeElement<S>> {
        let inv =
            self.uinv.as_ref().ok_or_else(|| Error::InvalidArgument("inverse parameters are not available".into()))?;
        let ui = &inv[s];
        Ok(SparseVector::from_pairs([(self.group.simple(s) as usize, ui.clone()), (0, ui.sub(&S::one()))]))
    }
}

impl<S: Scalar> CwAlgebra<S> {
    /// The projection `g_s ↦ T_s`, `e_t ↦ 1`: sums coefficients over classes.
    pub fn hecke_project(&self, x: &AlgebraElement<S>) -> HeckeElement<S> {
        let mut acc = Accumulator::new();
        for (i, c) in x.iter() {
            acc.add(self.split_index(*i).1 as usize, c);
        }
        acc.finish()
    }

    /// The splitting `T_w ↦ g_w e_W`.
    pub fn hecke_split(&self, w: Elem) -> AlgebraElement<S> {
        self.mul(&self.g_elem(w), &self.e_full())
    }

    /// Linear extension of [`CwAlgebra::hecke_split`].
    pub fn hecke_split_element(&self, h: &HeckeElement<S>) -> AlgebraElement<S> {
        let mut acc = Accumulator::new();
        for (w, c) in h.iter() {
            acc.add_vector(&self.hecke_split(*w as Elem), c);
        }
        acc.finish()
    }
}

/// Outcome of [`CwAlgebra::check_hecke_tower`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeTowerReport {
    pub pairs: usize,
    /// `p(xy) = p(x) p(y)` on every sampled pair.
    pub multiplicative: bool,
    /// `p(q(T_w)) = T_w` for every `w`.
    pub splitting: bool,
}

impl HeckeTowerReport {
    pub fn holds(&self) -> bool {
        self.multiplicative && self.splitting
    }
}

impl<S: Scalar> CwAlgebra<S> {
    /// Compares the projection with an independently implemented Hecke
    /// algebra on `pairs` random pairs of short elements with small integer
    /// coefficients, and checks the splitting on every `T_w`.
    pub fn check_hecke_tower(&self, pairs: usize, seed: u64) -> HeckeTowerReport {
        use rand::{Rng, SeedableRng};
        let h = HeckeAlgebra::new(self.group_arc(), self.params());
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let dim = self.dim();
        let mut random = || -> AlgebraElement<S> {
            let terms = rng.gen_range(1..=4);
            SparseVector::from_pairs((0..terms).map(|_| (rng.gen_range(0..dim), S::from_int(rng.gen_range(-3..=3)))))
        };
        let multiplicative = (0..pairs).all(|_| {
            let (x, y) = (random(), random());
            self.hecke_project(&self.mul(&x, &y)) == h.mul(&self.hecke_project(&x), &self.hecke_project(&y))
        });
        let splitting = (0..self.order() as Elem).all(|w| self.hecke_project(&self.hecke_split(w)) == h.t(w));
        HeckeTowerReport { pairs, multiplicative, splitting }
    }
}
