//! The Yokonuma–Hecke algebra `Y_{d,n}(u)` of type A, built directly on its
//! monomial basis `t^a g_w` with `a ∈ (Z/d)^n` and `w ∈ S_n`.
//!
//! Strands are numbered from 0; `g_i` crosses strands `i` and `i+1`.

use std::collections::{HashMap, VecDeque};

use cwalg_exact::{Accumulator, Field, RowEchelonBasis, SparseVector};

use crate::algebra::{RelationFailure, RelationReport};
use crate::error::{Error, Result};

pub type YElement<S> = SparseVector<S>;

/// Permutations of `n` letters with left multiplication by adjacent
/// transpositions, lengths and reduced words.
#[derive(Clone, Debug)]
struct Permutations {
    perms: Vec<Vec<u8>>,
    left: Vec<Vec<u32>>,
    length: Vec<u32>,
    words: Vec<Vec<usize>>,
}

fn all_permutations(n: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for k in 0..n as u8 {
        let mut next = Vec::new();
        for p in &out {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, k);
                next.push(q);
            }
        }
        out = next;
    }
    out.sort();
    out
}

fn inversions(p: &[u8]) -> u32 {
    let mut c = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            c += u32::from(p[i] > p[j]);
        }
    }
    c
}

impl Permutations {
    fn new(n: usize) -> Self {
        let perms = all_permutations(n);
        let id: HashMap<Vec<u8>, u32> = perms.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();
        let swap = |i: usize, x: u8| -> u8 {
            if x as usize == i {
                x + 1
            } else if x as usize == i + 1 {
                x - 1
            } else {
                x
            }
        };
        let left: Vec<Vec<u32>> = (0..n.saturating_sub(1))
            .map(|i| perms.iter().map(|p| id[&p.iter().map(|&x| swap(i, x)).collect::<Vec<u8>>()]).collect())
            .collect();
        let length: Vec<u32> = perms.iter().map(|p| inversions(p)).collect();
        let mut words: Vec<Vec<usize>> = vec![Vec::new(); perms.len()];
        let mut order: Vec<usize> = (0..perms.len()).collect();
        order.sort_by_key(|&w| length[w]);
        for w in order {
            if let Some(i) = (0..left.len()).find(|&i| length[left[i][w] as usize] < length[w]) {
                let mut word = vec![i];
                word.extend_from_slice(&words[left[i][w] as usize]);
                words[w] = word;
            }
        }
        Permutations { perms, left, length, words }
    }
}

/// `Y_{d,n}(u)` over a field in which `d` is invertible.
#[derive(Clone, Debug)]
pub struct YokonumaAlgebra<S> {
    d: usize,
    n: usize,
    u: S,
    u_inv: Option<S>,
    d_inv: S,
    perms: Permutations,
    /// `d^j` for each strand.
    place: Vec<usize>,
}

impl<S: Field> YokonumaAlgebra<S> {
    pub fn new(d: usize, n: usize, u: S) -> Result<Self> {
        if d == 0 || n == 0 {
            return Err(Error::InvalidArgument("d and n must be positive".into()));
        }
        if n > 8 {
            return Err(Error::BudgetExceeded(format!("S_{n} is too large")));
        }
        let d_inv = S::from_int(d as i64).inv().ok_or(Error::DNotInvertible(d as u32))?;
        let place: Vec<usize> = (0..n).map(|j| d.pow(j as u32)).collect();
        let u_inv = u.inv();
        Ok(YokonumaAlgebra { d, n, u, u_inv, d_inv, perms: Permutations::new(n), place })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    fn order(&self) -> usize {
        self.perms.perms.len()
    }

    pub fn dim(&self) -> usize {
        self.d.pow(self.n as u32) * self.order()
    }

    fn index(&self, a: usize, w: usize) -> usize {
        a * self.order() + w
    }

    fn split(&self, i: usize) -> (usize, usize) {
        (i / self.order(), i % self.order())
    }

    fn digit(&self, a: usize, j: usize) -> usize {
        a / self.place[j] % self.d
    }

    /// Adds `k` to the exponent of `t_j`.
    fn shift(&self, a: usize, j: usize, k: usize) -> usize {
        let old = self.digit(a, j);
        a - old * self.place[j] + (old + k) % self.d * self.place[j]
    }

    fn swap_digits(&self, a: usize, i: usize) -> usize {
        let (x, y) = (self.digit(a, i), self.digit(a, i + 1));
        a - x * self.place[i] - y * self.place[i + 1] + y * self.place[i] + x * self.place[i + 1]
    }

    pub fn one(&self) -> YElement<S> {
        SparseVector::unit(0)
    }

    /// The basis element `t^a g_w`, `w` given as the image of each letter.
    pub fn basis(&self, a: &[usize], w: &[u8]) -> Option<YElement<S>> {
        let w = self.perms.perms.iter().position(|p| p == w)?;
        let code = a.iter().enumerate().map(|(j, &x)| (x % self.d) * self.place[j]).sum();
        Some(SparseVector::unit(self.index(code, w)))
    }

    /// Left multiplication by `t_j^k`.
    pub fn left_t(&self, j: usize, k: usize, x: &YElement<S>) -> YElement<S> {
        let mut acc = Accumulator::new();
        for (i, c) in x.iter() {
            let (a, w) = self.split(*i);
            acc.add(self.index(self.shift(a, j, k), w), c);
        }
        acc.finish()
    }

    /// Left multiplication by `e_{j,k} = (1/d) Σ_s t_j^s t_k^{−s}`.
    pub fn left_e(&self, j: usize, k: usize, x: &YElement<S>) -> YElement<S> {
        let mut acc = Accumulator::new();
        for (i, c) in x.iter() {
            let (a, w) = self.split(*i);
            let c = c.mul(&self.d_inv);
            for s in 0..self.d {
                let b = self.shift(self.shift(a, j, s), k, self.d - s);
                acc.add(self.index(b, w), &c);
            }
        }
        acc.finish()
    }

    /// Left multiplication by `g_i`.
    pub fn left_g(&self, i: usize, x: &YElement<S>) -> YElement<S> {
        let um1 = self.u.sub(&S::one());
        let mut acc = Accumulator::new();
        for (idx, c) in x.iter() {
            let (a, w) = self.split(*idx);
            let a2 = self.swap_digits(a, i);
            let sw = self.perms.left[i][w] as usize;
            acc.add(self.index(a2, sw), c);
            if self.perms.length[sw] < self.perms.length[w] {
                // g_i g_w = g_{sw} + (u−1) e_i (g_{sw} + g_w)
                let k = c.mul(&um1).mul(&self.d_inv);
                for s in 0..self.d {
                    let b = self.shift(self.shift(a2, i, s), i + 1, self.d - s);
                    acc.add(self.index(b, sw), &k);
                    acc.add(self.index(b, w), &k);
                }
            }
        }
        acc.finish()
    }

    /// Left multiplication by `g_i⁻¹ = g_i + (u⁻¹−1) e_i + (u⁻¹−1) e_i g_i`.
    pub fn left_g_inv(&self, i: usize, x: &YElement<S>) -> Result<YElement<S>> {
        let k = self.u_inv.as_ref().ok_or(Error::InvalidArgument("u is not invertible".into()))?.sub(&S::one());
        let gx = self.left_g(i, x);
        let inner = self.left_e(i, i + 1, x).add(&self.left_e(i, i + 1, &gx));
        Ok(gx.add(&inner.scale(&k)))
    }

    pub fn g(&self, i: usize) -> YElement<S> {
        self.left_g(i, &self.one())
    }

    pub fn t(&self, j: usize) -> YElement<S> {
        self.left_t(j, 1, &self.one())
    }

    pub fn e(&self, j: usize, k: usize) -> YElement<S> {
        self.left_e(j, k, &self.one())
    }

    pub fn g_inv(&self, i: usize) -> Result<YElement<S>> {
        self.left_g_inv(i, &self.one())
    }

    /// Product `x · y`: each term `t^a g_w` of `x` acts as `T^a G_w`.
    pub fn mul(&self, x: &YElement<S>, y: &YElement<S>) -> YElement<S> {
        let mut acc = Accumulator::new();
        for (idx, c) in x.iter() {
            let (a, w) = self.split(*idx);
            let mut v = self.perms.words[w].iter().rev().fold(y.clone(), |v, &i| self.left_g(i, &v));
            for j in 0..self.n {
                let k = self.digit(a, j);
                if k != 0 {
                    v = self.left_t(j, k, &v);
                }
            }
            acc.add_vector(&v, c);
        }
        acc.finish()
    }

    fn s_apply(i: usize, j: usize) -> usize {
        if j == i {
            i + 1
        } else if j == i + 1 {
            i
        } else {
            j
        }
    }

    /// Checks relations (1)–(8) as operator identities on every basis vector.
    pub fn check_relations(&self) -> YRelationReport {
        let mut report = YRelationReport::default();
        let n = self.n;
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|j| (0..n).filter(move |&k| k != j).map(move |k| (j, k))).collect();
        for idx in 0..self.dim() {
            let v: YElement<S> = SparseVector::unit(idx);
            let at = || format!("on basis vector {idx}");
            let gv: Vec<YElement<S>> = (0..n - 1).map(|i| self.left_g(i, &v)).collect();
            let tv: Vec<YElement<S>> = (0..n).map(|j| self.left_t(j, 1, &v)).collect();
            for i in 0..n - 1 {
                for j in i + 1..n - 1 {
                    let (lhs, rhs) = if j == i + 1 {
                        (self.left_g(i, &self.left_g(j, &gv[i])), self.left_g(j, &self.left_g(i, &gv[j])))
                    } else {
                        (self.left_g(i, &gv[j]), self.left_g(j, &gv[i]))
                    };
                    report.record(1, lhs == rhs, || format!("g_{i}, g_{j} {}", at()));
                }
            }
            for i in 0..n {
                for j in 0..n {
                    let ok = self.left_t(i, 1, &tv[j]) == self.left_t(j, 1, &tv[i]);
                    report.record(2, ok, || format!("t_{i} t_{j} {}", at()));
                }
            }
            for i in 0..n - 1 {
                for j in 0..n {
                    let ok = self.left_g(i, &tv[j]) == self.left_t(Self::s_apply(i, j), 1, &gv[i]);
                    report.record(2, ok, || format!("g_{i} t_{j} {}", at()));
                }
            }
            for j in 0..n {
                report.record(3, self.left_t(j, self.d, &v) == v, || format!("t_{j}^d {}", at()));
            }
            for i in 0..n - 1 {
                let lhs = self.left_g(i, &gv[i]);
                let inner = self.left_e(i, i + 1, &v.add(&gv[i]));
                let rhs = v.add(&inner.scale(&self.u.sub(&S::one())));
                report.record(4, lhs == rhs, || format!("g_{i}^2 {}", at()));
            }
            let ev: HashMap<(usize, usize), YElement<S>> =
                pairs.iter().map(|&(j, k)| ((j, k), self.left_e(j, k, &v))).collect();
            for &(j, k) in &pairs {
                report.record(5, ev[&(j, k)] == ev[&(k, j)], || format!("e_{j}{k} = e_{k}{j} {}", at()));
                report.record(8, self.left_e(j, k, &ev[&(j, k)]) == ev[&(j, k)], || format!("e_{j}{k}^2 {}", at()));
                for &(p, q) in &pairs {
                    let ok = self.left_e(j, k, &ev[&(p, q)]) == self.left_e(p, q, &ev[&(j, k)]);
                    report.record(6, ok, || format!("e_{j}{k} e_{p}{q} {}", at()));
                }
                for i in 0..n - 1 {
                    let lhs = self.left_g(i, &ev[&(j, k)]);
                    let rhs = self.left_e(Self::s_apply(i, j), Self::s_apply(i, k), &gv[i]);
                    report.record(7, lhs == rhs, || format!("g_{i} e_{j}{k} {}", at()));
                }
            }
        }
        report
    }

    /// Checks the defining relations of `C_{A_{n−1}}(u)` on the elements
    /// `g_i` and `e_{j,k}` of `Y_{d,n}(u)`, reflections being transpositions.
    pub fn check_cw_relations(&self) -> RelationReport {
        let n = self.n;
        let refl: Vec<(usize, usize)> = (0..n).flat_map(|j| (j + 1..n).map(move |k| (j, k))).collect();
        let conj = |t: (usize, usize), r: (usize, usize)| -> usize {
            let f = |x: usize| {
                if x == t.0 {
                    t.1
                } else if x == t.1 {
                    t.0
                } else {
                    x
                }
            };
            let (a, b) = (f(r.0), f(r.1));
            refl.iter().position(|&p| p == (a.min(b), a.max(b))).expect("transposition")
        };
        let mut report = RelationReport::default();
        let mut record = |rel: u8, ok: bool, detail: &dyn Fn() -> String| {
            report.checked[rel as usize - 1] += 1;
            if !ok && !report.failures.iter().any(|f| f.relation == rel) {
                report.failures.push(RelationFailure { relation: rel, detail: detail() });
            }
        };
        for idx in 0..self.dim() {
            let v: YElement<S> = SparseVector::unit(idx);
            let gv: Vec<YElement<S>> = (0..n - 1).map(|i| self.left_g(i, &v)).collect();
            let ev: Vec<YElement<S>> = refl.iter().map(|&(j, k)| self.left_e(j, k, &v)).collect();
            let e = |t: usize, x: &YElement<S>| self.left_e(refl[t].0, refl[t].1, x);
            for i in 0..n.saturating_sub(2) {
                let lhs = self.left_g(i, &self.left_g(i + 1, &gv[i]));
                let rhs = self.left_g(i + 1, &self.left_g(i, &gv[i + 1]));
                record(1, lhs == rhs, &|| format!("braid s{i} on {idx}"));
            }
            for t in 0..refl.len() {
                record(2, e(t, &ev[t]) == ev[t], &|| format!("e_{t}^2 on {idx}"));
                for r in 0..refl.len() {
                    let er = e(t, &ev[r]);
                    record(3, er == e(r, &ev[t]), &|| format!("e_{t} e_{r} on {idx}"));
                    let trt = conj(refl[t], refl[r]);
                    record(4, er == e(t, &ev[trt]), &|| format!("e_{t} e_{r} on {idx}"));
                }
            }
            for i in 0..n - 1 {
                let s = refl.iter().position(|&p| p == (i, i + 1)).expect("simple transposition");
                for t in 0..refl.len() {
                    let lhs = self.left_g(i, &ev[t]);
                    let rhs = e(conj(refl[s], refl[t]), &gv[i]);
                    record(5, lhs == rhs, &|| format!("g_{i} e_{t} on {idx}"));
                }
                let lhs = self.left_g(i, &gv[i]);
                let rhs = v.add(&ev[s].add(&e(s, &gv[i])).scale(&self.u.sub(&S::one())));
                record(6, lhs == rhs, &|| format!("quadratic s{i} on {idx}"));
            }
        }
        report
    }

    /// Dimension of the unital subalgebra generated by the `g_i` and `e_i`.
    pub fn braids_ties_dimension(&self, cap: usize) -> Result<usize> {
        let mut basis = RowEchelonBasis::new();
        let mut queue = VecDeque::new();
        let one = self.one();
        basis.reduce_insert(&one);
        queue.push_back(one);
        while let Some(v) = queue.pop_front() {
            for i in 0..self.n - 1 {
                for w in [self.left_g(i, &v), self.left_e(i, i + 1, &v)] {
                    if basis.reduce_insert(&w) {
                        if basis.rank() > cap {
                            return Err(Error::BudgetExceeded(format!("braids and ties dimension exceeds {cap}")));
                        }
                        queue.push_back(w);
                    }
                }
            }
        }
        Ok(basis.rank())
    }
}

/// Outcome of checking relations (1)–(8) of `Y_{d,n}(u)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct YRelationReport {
    pub checked: [usize; 8],
    pub failures: Vec<RelationFailure>,
}

impl YRelationReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, relation: u8, ok: bool, detail: impl FnOnce() -> String) {
        self.checked[relation as usize - 1] += 1;
        if !ok && !self.failures.iter().any(|f| f.relation == relation) {
            self.failures.push(RelationFailure { relation, detail: detail() });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use cwalg_exact::{Fp, RatFunc, Rational, Scalar};

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn permutation_tables() {
        let p = Permutations::new(4);
        assert_eq!(p.perms.len(), 24);
        assert_eq!(p.length.iter().max(), Some(&6));
        for (w, word) in p.words.iter().enumerate() {
            assert_eq!(word.len() as u32, p.length[w]);
            let back = word.iter().rev().fold(0usize, |x, &i| p.left[i][x] as usize);
            assert_eq!(back, w);
        }
    }

    #[test]
    fn d_one_is_hecke() {
        let y = YokonumaAlgebra::new(1, 3, q(5)).unwrap();
        assert_eq!(y.e(0, 1), y.one());
        let g = y.g(0);
        assert_eq!(y.mul(&g, &g), y.one().scale(&q(5)).add(&g.scale(&q(4))));
        assert_eq!(y.braids_ties_dimension(100).unwrap(), 6);
    }

    #[test]
    fn inverse_in_y22() {
        let y = YokonumaAlgebra::new(2, 2, q(3)).unwrap();
        assert_eq!(y.mul(&y.g_inv(0).unwrap(), &y.g(0)), y.one());
        assert_eq!(y.mul(&y.g(0), &y.g_inv(0).unwrap()), y.one());
    }

    #[test]
    fn relations_small() {
        let y = YokonumaAlgebra::new(2, 3, RatFunc::var()).unwrap();
        let r = y.check_relations();
        assert!(r.holds(), "{r:?}");
        let y = YokonumaAlgebra::new(3, 2, q(7)).unwrap();
        assert!(y.check_relations().holds());
    }

    #[test]
    fn basis_element_product() {
        let y = YokonumaAlgebra::new(3, 3, q(2)).unwrap();
        let x = y.basis(&[1, 2, 0], &[1, 0, 2]).unwrap();
        assert_eq!(y.mul(&y.t(0), &y.mul(&y.t(1), &y.mul(&y.t(1), &y.g(0)))), x);
    }

    #[test]
    fn d_not_invertible() {
        let r = YokonumaAlgebra::<Fp<3>>::new(3, 2, Fp::<3>::new(2));
        assert!(matches!(r, Err(Error::DNotInvertible(3))));
    }
}
