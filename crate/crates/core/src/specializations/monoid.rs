use std::sync::Arc;

use cwalg_exact::{Accumulator, Scalar, SparseVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::FlavorTable;
use crate::coxeter::{CoxeterSystem, Elem};
use crate::error::Result;
use crate::lattice::{Flavor, SubgroupLattice};

/// The `λ = −1` specialization, where `Ψ(s) = b_s = g_s − g_s e_s` no longer
/// depends on `u` and acts on the basis by signed permutation-like moves.
#[derive(Clone, Debug)]
pub struct MonoidAlgebra {
    group: Arc<CoxeterSystem>,
    table: Arc<FlavorTable>,
    /// `(−1)^{rk [J]}` per flavor class, `rk` the parabolic rank.
    odd_rank: Vec<bool>,
}

/// Summary of the monoid checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidReport {
    /// `b_s³ = b_s` for every simple `s`.
    pub cube: bool,
    /// `b_s² b_t³ b_s² = b_s b_t b_s b_t b_s` for the first two simple generators.
    pub braid_identity: Option<bool>,
    /// Sign conjugation carries the x-form operators to the y-form ones.
    pub sign_conjugation: bool,
    /// Number of random positive words applied to `y_{[∅],1}`.
    pub words_checked: usize,
    /// Every such word produced only nonnegative coefficients.
    pub positive: bool,
}

impl MonoidReport {
    pub fn holds(&self) -> bool {
        self.cube && self.braid_identity != Some(false) && self.sign_conjugation && self.positive
    }
}

impl MonoidAlgebra {
    pub fn new(group: Arc<CoxeterSystem>, lattice: &SubgroupLattice, flavor: Flavor) -> Result<Self> {
        let table = Arc::new(FlavorTable::new(lattice, flavor)?);
        let odd_rank =
            (0..table.len() as u32).map(|f| lattice.parabolic_rank(table.representative(f)) % 2 == 1).collect();
        Ok(MonoidAlgebra { group, table, odd_rank })
    }

    pub fn group(&self) -> &CoxeterSystem {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.table.len() * self.group.order()
    }

    pub fn index(&self, f: u32, w: Elem) -> usize {
        f as usize * self.group.order() + w as usize
    }

    fn split(&self, i: usize) -> (u32, Elem) {
        let n = self.group.order();
        ((i / n) as u32, (i % n) as Elem)
    }

    /// The seed vector `x_{[∅],1} = y_{[∅],1}`.
    pub fn seed<S: Scalar>(&self) -> SparseVector<S> {
        SparseVector::unit(self.index(self.table.trivial(), self.group.identity()))
    }

    /// `b_s x_{J,w} = x_{sJs,sw} − x_{sJs ∪ s,sw}`.
    pub fn b_x<S: Scalar>(&self, s: usize, x: &SparseVector<S>) -> SparseVector<S> {
        let mut acc = Accumulator::new();
        for (i, c) in x.iter() {
            let (f, w) = self.split(*i);
            let sw = self.group.left_mul(s, w);
            let sf = self.table.conj_simple(s, f);
            acc.add(self.index(sf, sw), c);
            acc.add(self.index(self.table.join_reflection(sf, s), sw), &c.neg());
        }
        acc.finish()
    }

    /// Positive form: `b_s y_{[J],w} = y_{[sJs],sw} + y_{[sJs ∪ s],sw}` when
    /// `s ∉ [J]`, and `0` otherwise.
    pub fn b_y<S: Scalar>(&self, s: usize, y: &SparseVector<S>) -> SparseVector<S> {
        let mut acc = Accumulator::new();
        for (i, c) in y.iter() {
            let (f, w) = self.split(*i);
            if self.table.join_reflection(f, s) == f {
                continue;
            }
            let sw = self.group.left_mul(s, w);
            let sf = self.table.conj_simple(s, f);
            acc.add(self.index(sf, sw), c);
            acc.add(self.index(self.table.join_reflection(sf, s), sw), c);
        }
        acc.finish()
    }

    /// Changes coordinates between the x- and y-bases (an involution).
    pub fn sign_flip<S: Scalar>(&self, v: &SparseVector<S>) -> SparseVector<S> {
        let flip = |i: usize, c: &S| if self.odd_rank[self.split(i).0 as usize] { c.neg() } else { c.clone() };
        SparseVector::from_sorted_unchecked(v.iter().map(|(i, c)| (*i, flip(*i, c))).collect())
    }

    /// Applies `b_{s_1} ⋯ b_{s_k}` in the x-form.
    pub fn word_x<S: Scalar>(&self, word: &[usize], x: &SparseVector<S>) -> SparseVector<S> {
        word.iter().rev().fold(x.clone(), |acc, &s| self.b_x(s, &acc))
    }

    /// Applies `b_{s_1} ⋯ b_{s_k}` in the y-form.
    pub fn word_y<S: Scalar>(&self, word: &[usize], y: &SparseVector<S>) -> SparseVector<S> {
        word.iter().rev().fold(y.clone(), |acc, &s| self.b_y(s, &acc))
    }

    /// The y-coordinates of `b_{s_1} ⋯ b_{s_k} · y_{[∅],1}`.
    pub fn positive_form<S: Scalar>(&self, word: &[usize]) -> SparseVector<S> {
        self.word_y(word, &self.seed())
    }

    fn operators_agree<S: Scalar>(&self, lhs: &[usize], rhs: &[usize]) -> bool {
        (0..self.dim()).all(|i| {
            let v = SparseVector::<S>::unit(i);
            self.word_x(lhs, &v) == self.word_x(rhs, &v)
        })
    }

    /// Runs the monoid checks, using `words` random positive words of length
    /// up to `max_len` drawn from a seeded generator.
    pub fn report<S: Scalar + PartialOrd>(&self, words: usize, max_len: usize, seed: u64) -> MonoidReport {
        let rank = self.group.rank();
        let cube = (0..rank).all(|s| self.operators_agree::<S>(&[s, s, s], &[s]));
        let braid_identity = (rank >= 2).then(|| self.operators_agree::<S>(&[0, 0, 1, 1, 1, 0, 0], &[0, 1, 0, 1, 0]));
        let sign_conjugation = (0..self.dim()).all(|i| {
            let v = SparseVector::<S>::unit(i);
            (0..rank).all(|s| self.sign_flip(&self.b_x(s, &self.sign_flip(&v))) == self.b_y(s, &v))
        });
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut positive = true;
        for _ in 0..if rank == 0 { 0 } else { words } {
            let len = rng.gen_range(1..=max_len.max(1));
            let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..rank)).collect();
            let v: SparseVector<S> = self.positive_form(&word);
            positive &= v.iter().all(|(_, c)| *c >= S::zero());
        }
        MonoidReport { cube, braid_identity, sign_conjugation, words_checked: words, positive }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{CwAlgebra, Parameters};
    use cwalg_exact::{Laurent, Rational};

    fn setup(ty: &str, flavor: Flavor) -> (Arc<CoxeterSystem>, SubgroupLattice, MonoidAlgebra) {
        let g = Arc::new(CoxeterSystem::new(ty.parse().unwrap()).unwrap());
        let l = SubgroupLattice::enumerate(g.roots_arc()).unwrap();
        let m = MonoidAlgebra::new(g.clone(), &l, flavor).unwrap();
        (g, l, m)
    }

    #[test]
    fn b_matches_g_minus_ge() {
        let (g, l, m) = setup("B2", Flavor::Full);
        let alg = CwAlgebra::new(g.clone(), &l, Flavor::Full, Parameters::symbolic(g.roots())).unwrap();
        for i in 0..alg.dim() {
            let v = SparseVector::<Laurent>::unit(i);
            for s in 0..2 {
                let expect = alg.left_g(s, &v).sub(&alg.left_g(s, &alg.left_e(s, &v)));
                assert_eq!(m.b_x(s, &v), expect);
            }
        }
    }

    #[test]
    fn a2_report() {
        let (_, _, m) = setup("A2", Flavor::Parabolic);
        let r = m.report::<Rational>(50, 15, 7);
        assert!(r.holds(), "{r:?}");
    }

    #[test]
    fn cube_in_b3() {
        let (_, _, m) = setup("B3", Flavor::Parabolic);
        assert!(m.operators_agree::<Rational>(&[2, 2, 2], &[2]));
    }
}
