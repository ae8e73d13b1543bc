use std::collections::VecDeque;
use std::sync::Arc;

use rustc_hash::FxHashMap;

use super::roots::RootSystem;
use super::types::CoxeterType;
use crate::error::{Error, Result};

/// Default cap on the number of stored group elements.
pub const DEFAULT_ELEMENT_CAP: u64 = 3_000_000;

/// Dense id of a group element; `0` is the identity.
pub type Elem = u32;

/// A finite Coxeter group with every element stored as the image of the
/// positive roots.
///
/// Element ids follow breadth-first order from the identity, expanding
/// `s·w` with the smallest generator first.
#[derive(Debug)]
pub struct CoxeterSystem {
    roots: Arc<RootSystem>,
    images: Vec<u8>,
    length: Vec<u32>,
    left: Vec<Vec<Elem>>,
    right: Vec<Vec<Elem>>,
    inverse: Vec<Elem>,
    lookup: FxHashMap<Box<[u8]>, Elem>,
}

impl CoxeterSystem {
    pub fn new(ty: CoxeterType) -> Result<Self> {
        Self::with_cap(ty, DEFAULT_ELEMENT_CAP)
    }

    pub fn with_cap(ty: CoxeterType, cap: u64) -> Result<Self> {
        let ty = ty.validate()?;
        if ty.group_order() > cap {
            return Err(Error::UnsupportedType(format!(
                "{ty} has {} elements, above the cap of {cap}",
                ty.group_order()
            )));
        }
        Ok(Self::from_roots(Arc::new(RootSystem::new(ty))))
    }

    pub fn from_roots(roots: Arc<RootSystem>) -> Self {
        let n = roots.num_reflections();
        assert!(2 * n <= 256, "root indices must fit in a byte");
        let rank = roots.rank();
        let order = roots.coxeter_type().group_order() as usize;

        let mut images: Vec<u8> = Vec::with_capacity(order * n);
        images.extend((0..n).map(|k| k as u8));
        let mut lookup: FxHashMap<Box<[u8]>, Elem> = FxHashMap::default();
        lookup.insert(images.clone().into_boxed_slice(), 0);
        let mut left = vec![Vec::with_capacity(order); rank];
        let mut inverse: Vec<Elem> = vec![0];
        let mut queue = VecDeque::from([0usize]);
        let mut buf = vec![0u8; n];
        while let Some(w) = queue.pop_front() {
            for (s, row) in left.iter_mut().enumerate() {
                for k in 0..n {
                    buf[k] = roots.reflect_root(s, images[w * n + k] as usize) as u8;
                }
                let id = match lookup.get(buf.as_slice()) {
                    Some(&id) => id,
                    None => {
                        let id = lookup.len() as Elem;
                        lookup.insert(buf.clone().into_boxed_slice(), id);
                        images.extend_from_slice(&buf);
                        queue.push_back(id as usize);
                        // (s w)^{-1} = w^{-1} s; filled once right-multiplication is known
                        inverse.push(Elem::MAX);
                        id
                    }
                };
                debug_assert_eq!(row.len(), w);
                row.push(id);
            }
        }
        let size = lookup.len();
        debug_assert_eq!(size, order);

        let length: Vec<u32> =
            (0..size).map(|w| images[w * n..(w + 1) * n].iter().filter(|&&r| r as usize >= n).count() as u32).collect();

        let mut right = vec![vec![0 as Elem; size]; rank];
        for (s, row) in right.iter_mut().enumerate() {
            for (w, slot) in row.iter_mut().enumerate() {
                for k in 0..n {
                    let r = roots.reflect_root(s, k);
                    buf[k] = apply(&images[w * n..(w + 1) * n], n, r) as u8;
                }
                *slot = lookup[buf.as_slice()];
            }
        }

        // inverse along BFS parents: w = s·p  ⇒  w⁻¹ = p⁻¹·s
        for w in 1..size {
            let (s, p) = (0..rank)
                .find_map(|s| {
                    let p = left[s][w] as usize;
                    (length[p] < length[w]).then_some((s, p))
                })
                .expect("non-identity element has a left descent");
            inverse[w] = right[s][inverse[p] as usize];
        }

        CoxeterSystem { roots, images, length, left, right, inverse, lookup }
    }

    pub fn roots(&self) -> &RootSystem {
        &self.roots
    }

    pub fn roots_arc(&self) -> Arc<RootSystem> {
        Arc::clone(&self.roots)
    }

    pub fn coxeter_type(&self) -> CoxeterType {
        self.roots.coxeter_type()
    }

    pub fn rank(&self) -> usize {
        self.roots.rank()
    }

    pub fn num_reflections(&self) -> usize {
        self.roots.num_reflections()
    }

    pub fn order(&self) -> usize {
        self.length.len()
    }

    pub fn identity(&self) -> Elem {
        0
    }

    pub fn simple(&self, s: usize) -> Elem {
        self.left[s][0]
    }

    #[inline]
    pub fn length(&self, w: Elem) -> u32 {
        self.length[w as usize]
    }

    /// `s·w`.
    #[inline]
    pub fn left_mul(&self, s: usize, w: Elem) -> Elem {
        self.left[s][w as usize]
    }

    /// `w·s`.
    #[inline]
    pub fn right_mul(&self, w: Elem, s: usize) -> Elem {
        self.right[s][w as usize]
    }

    #[inline]
    pub fn inverse(&self, w: Elem) -> Elem {
        self.inverse[w as usize]
    }

    pub fn multiply(&self, a: Elem, b: Elem) -> Elem {
        let n = self.num_reflections();
        let ia = self.image_slice(a);
        let buf: Vec<u8> = self.image_slice(b).iter().map(|&r| apply(ia, n, r as usize) as u8).collect();
        self.lookup[buf.as_slice()]
    }

    /// Index in `0..2N` of `w(α_r)` for a root index `r`.
    #[inline]
    pub fn act_on_root(&self, w: Elem, r: usize) -> usize {
        apply(self.image_slice(w), self.num_reflections(), r)
    }

    /// Index of the reflection `w t w⁻¹`.
    #[inline]
    pub fn conjugate_reflection(&self, w: Elem, t: usize) -> usize {
        self.image_slice(w)[t] as usize % self.num_reflections()
    }

    /// Element id of the reflection with index `t`.
    pub fn reflection_element(&self, t: usize) -> Elem {
        let n = self.num_reflections();
        let buf: Vec<u8> = (0..n).map(|k| self.roots.reflect_root(t, k) as u8).collect();
        self.lookup[buf.as_slice()]
    }

    /// Whether `s` is a left descent of `w`, i.e. `ℓ(sw) < ℓ(w)`.
    #[inline]
    pub fn is_left_descent(&self, s: usize, w: Elem) -> bool {
        self.length(self.left_mul(s, w)) < self.length(w)
    }

    #[inline]
    pub fn is_right_descent(&self, w: Elem, s: usize) -> bool {
        self.length(self.right_mul(w, s)) < self.length(w)
    }

    /// Left-greedy reduced word: repeatedly strip the smallest left descent.
    pub fn reduced_word(&self, mut w: Elem) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length(w) as usize);
        while w != 0 {
            let s = (0..self.rank()).find(|&s| self.is_left_descent(s, w)).expect("descent exists");
            word.push(s);
            w = self.left_mul(s, w);
        }
        word
    }

    /// Product of simple generators `s_{i1}·…·s_{ik}`.
    pub fn from_word(&self, word: &[usize]) -> Elem {
        word.iter().fold(0, |w, &s| self.right_mul(w, s))
    }

    pub fn longest_element(&self) -> Elem {
        (0..self.order() as Elem).max_by_key(|&w| self.length(w)).unwrap_or(0)
    }

    fn image_slice(&self, w: Elem) -> &[u8] {
        let n = self.num_reflections();
        &self.images[w as usize * n..(w as usize + 1) * n]
    }
}

#[inline]
fn apply(images: &[u8], n: usize, r: usize) -> usize {
    if r < n {
        images[r] as usize
    } else {
        let x = images[r - n] as usize;
        if x < n {
            x + n
        } else {
            x - n
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> CoxeterSystem {
        CoxeterSystem::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn orders_and_longest() {
        for s in ["A1", "A3", "B3", "D4", "G2", "H3", "I2:7", "F4"] {
            let w = build(s);
            assert_eq!(w.order() as u64, w.coxeter_type().group_order(), "{s}");
            assert_eq!(w.length(w.longest_element()) as usize, w.num_reflections(), "{s}");
        }
    }

    #[test]
    fn a2_basics() {
        let w = build("A2");
        let (s, t) = (w.simple(0), w.simple(1));
        assert_eq!(w.length(w.multiply(s, t)), 2);
        assert_eq!(w.multiply(s, w.multiply(t, s)), w.multiply(t, w.multiply(s, t)));
        assert_eq!(w.reduced_word(w.longest_element()).len(), 3);
        assert!(w.reduced_word(0).is_empty());
        assert_eq!(w.reduced_word(s), vec![0]);
        let third = w.conjugate_reflection(s, 1);
        assert!(third != 0 && third != 1);
    }

    #[test]
    fn inverses_and_words() {
        let w = build("H3");
        for x in 0..w.order() as Elem {
            assert_eq!(w.multiply(x, w.inverse(x)), 0);
            assert_eq!(w.from_word(&w.reduced_word(x)), x);
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(CoxeterSystem::with_cap(CoxeterType::E6, 1000).is_err());
    }
}
