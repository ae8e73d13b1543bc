//! The algebra `C_W(u)` realized on its faithful module with basis
//! `v_{J,w}`, where `J` runs over the classes of a flavor and `w` over `W`.
//!
//! The element `e_J g_w` is identified with its image `v_{J,w}` of the
//! cyclic vector `v_{∅,1}`, so elements and module vectors share one
//! representation: a sparse vector indexed by `class · |W| + w`.

mod bar;
mod hecke;
mod rank;
mod relations;

use std::sync::Arc;

use cwalg_exact::{Accumulator, Field, Laurent, Scalar, SparseVector};

use crate::coxeter::{CoxeterSystem, Elem, RootSystem};
use crate::error::{Error, Result};
use crate::lattice::{bits, ClassId, Flavor, SubgroupLattice};

pub use bar::{bar_laurent, check_bar, hecke_bar, BarReport};
pub use hecke::{HeckeAlgebra, HeckeElement, HeckeTowerReport};
pub use relations::{RelationFailure, RelationReport};

/// Elements of `C_W(u)` in the basis `e_J g_w`.
pub type AlgebraElement<S> = SparseVector<S>;

/// Parameters `u_c`, one per conjugacy class of reflections, together with
/// their inverses when known.
#[derive(Clone, Debug)]
pub struct Parameters<S> {
    values: Vec<S>,
    inverses: Option<Vec<S>>,
}

impl<S: Scalar> Parameters<S> {
    /// One value per reflection class (see [`RootSystem::reflection_class`]).
    pub fn per_class(values: Vec<S>) -> Self {
        Parameters { values, inverses: None }
    }

    pub fn uniform(roots: &RootSystem, u: S) -> Self {
        Self::per_class(vec![u; roots.num_classes()])
    }

    pub fn with_inverses(mut self, inverses: Vec<S>) -> Self {
        assert_eq!(inverses.len(), self.values.len());
        self.inverses = Some(inverses);
        self
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn inverses(&self) -> Option<&[S]> {
        self.inverses.as_deref()
    }
}

impl<S: Field> Parameters<S> {
    /// Parameters over a field; inverses are filled in when every value is nonzero.
    pub fn field(values: Vec<S>) -> Self {
        let inv: Option<Vec<S>> = values.iter().map(|x| x.inv()).collect();
        Parameters { values, inverses: inv }
    }

    pub fn field_uniform(roots: &RootSystem, u: S) -> Self {
        Self::field(vec![u; roots.num_classes()])
    }
}

impl Parameters<Laurent> {
    /// `u_c` is the Laurent variable with label `c`.
    pub fn symbolic(roots: &RootSystem) -> Self {
        Self::symbolic_power(roots, 1)
    }

    /// `u_c = v_c²` with `v_c` the Laurent variable with label `c`.
    pub fn symbolic_squares(roots: &RootSystem) -> Self {
        Self::symbolic_power(roots, 2)
    }

    fn symbolic_power(roots: &RootSystem, k: i32) -> Self {
        let n = roots.num_classes();
        let values = (0..n).map(|c| Laurent::var_pow(c as u8, k)).collect();
        let inverses = (0..n).map(|c| Laurent::var_pow(c as u8, -k)).collect();
        Parameters { values, inverses: Some(inverses) }
    }
}

/// Classes of a flavor with the join, conjugation and projection tables the
/// operators need.
#[derive(Debug)]
pub struct FlavorTable {
    flavor: Flavor,
    n_refl: usize,
    rank: usize,
    reps: Vec<ClassId>,
    sets: Vec<u64>,
    proj: Vec<u32>,
    join: Vec<u32>,
    conj: Vec<Vec<u32>>,
    class_join: Option<Vec<u32>>,
}

const CLASS_JOIN_LIMIT: usize = 1024;

impl FlavorTable {
    /// Builds the tables and checks that the flavor map is compatible with
    /// joins and conjugation: `p(J ∨ t) = p(p(J) ∨ t)` and `p(sJs) = s p(J) s`.
    pub fn new(lattice: &SubgroupLattice, flavor: Flavor) -> Result<Self> {
        let n_refl = lattice.roots().num_reflections();
        let rank = lattice.roots().rank();
        let map: Vec<ClassId> = match flavor {
            Flavor::Full => (0..lattice.len() as ClassId).collect(),
            _ => lattice
                .flavor_map(flavor)
                .ok_or_else(|| {
                    Error::UnsupportedType(format!("{flavor} flavor is not defined for {}", lattice.coxeter_type()))
                })?
                .to_vec(),
        };
        let mut reps: Vec<ClassId> = map.clone();
        reps.sort_unstable();
        reps.dedup();
        let mut pos = vec![u32::MAX; lattice.len()];
        for (i, &r) in reps.iter().enumerate() {
            pos[r as usize] = i as u32;
        }
        let proj: Vec<u32> = map.iter().map(|&c| pos[c as usize]).collect();
        let mut join = Vec::with_capacity(reps.len() * n_refl);
        for &r in &reps {
            for t in 0..n_refl {
                join.push(proj[lattice.join_reflection(r, t) as usize]);
            }
        }
        let conj: Vec<Vec<u32>> =
            (0..rank).map(|s| reps.iter().map(|&r| proj[lattice.conj_simple(s, r) as usize]).collect()).collect();
        for c in 0..lattice.len() as ClassId {
            let f = proj[c as usize] as usize;
            for t in 0..n_refl {
                if proj[lattice.join_reflection(c, t) as usize] != join[f * n_refl + t] {
                    return Err(Error::InvalidArgument(format!("{flavor} flavor map is not compatible with joins")));
                }
            }
            for (s, row) in conj.iter().enumerate() {
                if proj[lattice.conj_simple(s, c) as usize] != row[f] {
                    return Err(Error::InvalidArgument(format!("{flavor} flavor map is not W-equivariant")));
                }
            }
        }
        let sets = reps.iter().map(|&r| lattice.set(r)).collect();
        let mut table = FlavorTable { flavor, n_refl, rank, reps, sets, proj, join, conj, class_join: None };
        if table.reps.len() <= CLASS_JOIN_LIMIT {
            let n = table.reps.len();
            let mut cj = Vec::with_capacity(n * n);
            for a in 0..n as u32 {
                for b in 0..n as u32 {
                    cj.push(table.class_join_slow(a, b));
                }
            }
            table.class_join = Some(cj);
        }
        Ok(table)
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Lattice class id representing flavor class `f`.
    pub fn representative(&self, f: u32) -> ClassId {
        self.reps[f as usize]
    }

    /// Reflection set of the representative of `f`.
    pub fn bits(&self, f: u32) -> u64 {
        self.sets[f as usize]
    }

    /// Flavor class of a lattice class.
    pub fn project(&self, c: ClassId) -> u32 {
        self.proj[c as usize]
    }

    pub fn trivial(&self) -> u32 {
        self.proj[0]
    }

    pub fn full(&self) -> u32 {
        *self.proj.last().expect("lattice is nonempty")
    }

    #[inline]
    pub fn join_reflection(&self, f: u32, t: usize) -> u32 {
        self.join[f as usize * self.n_refl + t]
    }

    #[inline]
    pub fn conj_simple(&self, s: usize, f: u32) -> u32 {
        self.conj[s][f as usize]
    }

    fn class_join_slow(&self, a: u32, b: u32) -> u32 {
        bits(self.sets[b as usize]).fold(a, |f, t| self.join_reflection(f, t))
    }

    /// Flavor class of `p(J ∨ K)`.
    #[inline]
    pub fn class_join(&self, a: u32, b: u32) -> u32 {
        match &self.class_join {
            Some(t) => t[a as usize * self.reps.len() + b as usize],
            None => self.class_join_slow(a, b),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

/// `C_W(u)` or one of its flavor quotients over the scalar ring `S`.
#[derive(Clone, Debug)]
pub struct CwAlgebra<S> {
    group: Arc<CoxeterSystem>,
    table: Arc<FlavorTable>,
    params: Parameters<S>,
    u: Vec<S>,
    um1: Vec<S>,
    uinv_m1: Option<Vec<S>>,
}

impl<S: Scalar> CwAlgebra<S> {
    pub fn new(
        group: Arc<CoxeterSystem>,
        lattice: &SubgroupLattice,
        flavor: Flavor,
        params: Parameters<S>,
    ) -> Result<Self> {
        let table = Arc::new(FlavorTable::new(lattice, flavor)?);
        Self::with_table(group, table, params)
    }

    pub fn with_table(group: Arc<CoxeterSystem>, table: Arc<FlavorTable>, params: Parameters<S>) -> Result<Self> {
        let roots = group.roots();
        if params.values().len() != roots.num_classes() {
            return Err(Error::InvalidArgument(format!(
                "{} needs {} parameters, got {}",
                group.coxeter_type(),
                roots.num_classes(),
                params.values().len()
            )));
        }
        let one = S::one();
        let per_simple = |v: &[S]| -> Vec<S> { roots.simple_class().iter().map(|&c| v[c].clone()).collect() };
        let u = per_simple(params.values());
        let um1 = u.iter().map(|x| x.sub(&one)).collect();
        let uinv_m1 = params.inverses().map(|inv| per_simple(inv).iter().map(|x| x.sub(&one)).collect());
        Ok(CwAlgebra { group, table, params, u, um1, uinv_m1 })
    }

    /// The same algebra over the same tables with other parameters.
    pub fn with_params<T: Scalar>(&self, params: Parameters<T>) -> Result<CwAlgebra<T>> {
        CwAlgebra::with_table(Arc::clone(&self.group), Arc::clone(&self.table), params)
    }

    pub fn group(&self) -> &CoxeterSystem {
        &self.group
    }

    pub fn group_arc(&self) -> Arc<CoxeterSystem> {
        Arc::clone(&self.group)
    }

    pub fn table(&self) -> &FlavorTable {
        &self.table
    }

    pub fn table_arc(&self) -> Arc<FlavorTable> {
        Arc::clone(&self.table)
    }

    pub fn params(&self) -> &Parameters<S> {
        &self.params
    }

    /// `u_s` for a simple index.
    pub fn u(&self, s: usize) -> &S {
        &self.u[s]
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn num_classes(&self) -> usize {
        self.table.len()
    }

    /// Rank of the algebra as a free module, `|W| · #classes`.
    pub fn dim(&self) -> usize {
        self.order() * self.num_classes()
    }

    #[inline]
    pub fn index(&self, f: u32, w: Elem) -> usize {
        f as usize * self.order() + w as usize
    }

    #[inline]
    pub fn split_index(&self, i: usize) -> (u32, Elem) {
        ((i / self.order()) as u32, (i % self.order()) as Elem)
    }

    /// The basis element `e_J g_w` for flavor class `f`.
    pub fn basis(&self, f: u32, w: Elem) -> AlgebraElement<S> {
        SparseVector::unit(self.index(f, w))
    }

    pub fn one(&self) -> AlgebraElement<S> {
        self.basis(self.table.trivial(), 0)
    }

    pub fn zero(&self) -> AlgebraElement<S> {
        SparseVector::new()
    }

    /// `g_w`.
    pub fn g_elem(&self, w: Elem) -> AlgebraElement<S> {
        self.basis(self.table.trivial(), w)
    }

    /// `g_s` for a simple index.
    pub fn g(&self, s: usize) -> AlgebraElement<S> {
        self.g_elem(self.group.simple(s))
    }

    /// `e_t` for a reflection index.
    pub fn e(&self, t: usize) -> AlgebraElement<S> {
        self.basis(self.table.join_reflection(self.table.trivial(), t), 0)
    }

    /// `e_J` for a flavor class.
    pub fn e_class(&self, f: u32) -> AlgebraElement<S> {
        self.basis(f, 0)
    }

    /// `e_W`.
    pub fn e_full(&self) -> AlgebraElement<S> {
        self.e_class(self.table.full())
    }

    fn map_terms<F: FnMut(u32, Elem, &S, &mut Accumulator<S>)>(
        &self,
        x: &AlgebraElement<S>,
        mut f: F,
    ) -> AlgebraElement<S> {
        let mut acc = Accumulator::new();
        for (i, c) in x.iter() {
            let (cls, w) = self.split_index(*i);
            f(cls, w, c, &mut acc);
        }
        acc.finish()
    }

    /// `G_s`: left multiplication by `g_s`.
    pub fn left_g(&self, s: usize, x: &AlgebraElement<S>) -> AlgebraElement<S> {
        let g = &self.group;
        self.map_terms(x, |f, w, c, acc| {
            let sw = g.left_mul(s, w);
            let sf = self.table.conj_simple(s, f);
            acc.add(self.index(sf, sw), c);
            if g.length(sw) < g.length(w) {
                let fs = self.table.join_reflection(sf, s);
                let k = c.mul(&self.um1[s]);
                acc.add(self.index(fs, sw), &k);
                acc.add(self.index(fs, w), &k);
            }
        })
    }

    /// `E_t`: left multiplication by `e_t` for any reflection `t`.
    pub fn left_e(&self, t: usize, x: &AlgebraElement<S>) -> AlgebraElement<S> {
        self.map_terms(x, |f, w, c, acc| acc.add(self.index(self.table.join_reflection(f, t), w), c))
    }

    /// Left multiplication by `e_K` for a flavor class `K`.
    pub fn left_e_class(&self, k: u32, x: &AlgebraElement<S>) -> AlgebraElement<S> {
        self.map_terms(x, |f, w, c, acc| acc.add(self.index(self.table.class_join(f, k), w), c))
    }

    /// `G'_s`: right multiplication by `g_s`.
    pub fn right_g(&self, s: usize, x: &AlgebraElement<S>) -> AlgebraElement<S> {
        let g = &self.group;
        self.map_terms(x, |f, w, c, acc| {
            let ws = g.right_mul(w, s);
            acc.add(self.index(f, ws), c);
            if g.length(ws) < g.length(w) {
                let fj = self.table.join_reflection(f, g.conjugate_reflection(w, s));
                let k = c.mul(&self.um1[s]);
                acc.add(self.index(fj, ws), &k);
                acc.add(self.index(fj, w), &k);
            }
        })
    }

    /// `E'_t`: right multiplication by `e_t`, using `e_J g_w e_t = e_{J ∪ wtw⁻¹} g_w`.
    pub fn right_e(&self, t: usize, x: &AlgebraElement<S>) -> AlgebraElement<S> {
        let g = &self.group;
        self.map_terms(x, |f, w, c, acc| {
            acc.add(self.index(self.table.join_reflection(f, g.conjugate_reflection(w, t)), w), c)
        })
    }

    fn uinv_m1(&self, s: usize) -> Result<&S> {
        self.uinv_m1
            .as_ref()
            .map(|v| &v[s])
            .ok_or_else(|| Error::InvalidArgument("inverse parameters are not available".into()))
    }

    /// Left multiplication by `g_s⁻¹ = g_s + (u⁻¹−1) e_s + (u⁻¹−1) e_s g_s`.
    pub fn left_g_inv(&self, s: usize, x: &AlgebraElement<S>) -> Result<AlgebraElement<S>> {
        let k = self.uinv_m1(s)?;
        let gx = self.left_g(s, x);
        let e_x = self.left_e(s, x);
        let e_gx = self.left_e(s, &gx);
        Ok(gx.add(&e_x.add(&e_gx).scale(k)))
    }

    /// Right multiplication by `g_s⁻¹`.
    pub fn right_g_inv(&self, s: usize, x: &AlgebraElement<S>) -> Result<AlgebraElement<S>> {
        let k = self.uinv_m1(s)?;
        let xg = self.right_g(s, x);
        let xe = self.right_e(s, x);
        let xeg = self.right_g(s, &xe);
        Ok(xg.add(&xe.add(&xeg).scale(k)))
    }

    /// `g_s⁻¹` as an element.
    pub fn g_inv(&self, s: usize) -> Result<AlgebraElement<S>> {
        self.left_g_inv(s, &self.one())
    }

    /// Left multiplication by `g_w`, applying the reduced word right to left.
    pub fn left_g_elem(&self, w: Elem, x: &AlgebraElement<S>) -> AlgebraElement<S> {
        self.group.reduced_word(w).iter().rev().fold(x.clone(), |acc, &s| self.left_g(s, &acc))
    }

    /// Product `x · y`.
    pub fn mul(&self, x: &AlgebraElement<S>, y: &AlgebraElement<S>) -> AlgebraElement<S> {
        // x = Σ c e_J g_w acts on y as E_J G_w; group x's terms by w
        let mut by_w: Vec<(Elem, Vec<(u32, S)>)> = Vec::new();
        let mut entries: Vec<(Elem, u32, S)> = x
            .iter()
            .map(|(i, c)| {
                let (f, w) = self.split_index(*i);
                (w, f, c.clone())
            })
            .collect();
        entries.sort_by_key(|e| (e.0, e.1));
        for (w, f, c) in entries {
            match by_w.last_mut() {
                Some((lw, v)) if *lw == w => v.push((f, c)),
                _ => by_w.push((w, vec![(f, c)])),
            }
        }
        let mut acc = Accumulator::new();
        for (w, terms) in by_w {
            let gy = self.left_g_elem(w, y);
            for (f, c) in terms {
                for (i, d) in gy.iter() {
                    let (h, v) = self.split_index(*i);
                    acc.add(self.index(self.table.class_join(h, f), v), &d.mul(&c));
                }
            }
        }
        acc.finish()
    }

    /// Product of a sequence of elements, left to right.
    pub fn product<'a, I: IntoIterator<Item = &'a AlgebraElement<S>>>(&self, xs: I) -> AlgebraElement<S>
    where
        S: 'a,
    {
        xs.into_iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    /// `g_{s_1} ⋯ g_{s_k}` for an arbitrary (not necessarily reduced) word.
    pub fn g_word(&self, word: &[usize]) -> AlgebraElement<S> {
        word.iter().rev().fold(self.one(), |acc, &s| self.left_g(s, &acc))
    }

    /// Image of an element in another flavor quotient of the same lattice.
    ///
    /// `target` must be a coarser flavor, i.e. factor through `self`.
    pub fn push_to(&self, x: &AlgebraElement<S>, target: &CwAlgebra<S>) -> AlgebraElement<S> {
        let mut acc = Accumulator::new();
        for (i, c) in x.iter() {
            let (f, w) = self.split_index(*i);
            let lattice_class = self.table.representative(f);
            acc.add(target.index(target.table.project(lattice_class), w), c);
        }
        acc.finish()
    }
}
