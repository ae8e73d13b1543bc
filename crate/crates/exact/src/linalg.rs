//! Sparse vectors and incremental echelon bases.

use std::collections::BTreeMap;

use crate::prime::Fp;
use crate::scalar::{Field, Scalar};

/// Sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, PartialEq, Debug)]
pub struct SparseVector<S> {
    entries: Vec<(usize, S)>,
}

impl<S> Default for SparseVector<S> {
    fn default() -> Self {
        SparseVector { entries: Vec::new() }
    }
}

impl<S: Scalar> SparseVector<S> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(index: usize) -> Self {
        SparseVector { entries: vec![(index, S::one())] }
    }

    pub fn single(index: usize, c: S) -> Self {
        if c.is_zero() {
            Self::default()
        } else {
            SparseVector { entries: vec![(index, c)] }
        }
    }

    /// Builds from arbitrary pairs, merging duplicates and dropping zeros.
    pub fn from_pairs<I: IntoIterator<Item = (usize, S)>>(pairs: I) -> Self {
        let mut acc = Accumulator::new();
        for (i, c) in pairs {
            acc.add(i, &c);
        }
        acc.finish()
    }

    /// Builds from pairs that are already sorted, distinct and nonzero.
    pub fn from_sorted_unchecked(entries: Vec<(usize, S)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, c)| !c.is_zero()));
        SparseVector { entries }
    }

    pub fn entries(&self) -> &[(usize, S)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, S)> {
        self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, S)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&S> {
        self.entries.binary_search_by_key(&index, |(i, _)| *i).ok().map(|k| &self.entries[k].1)
    }

    pub fn leading(&self) -> Option<(usize, &S)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::default();
        }
        Self::from_pairs(self.entries.iter().map(|(i, x)| (*i, x.mul(c))))
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, other: &Self, c: &S) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (0, 0);
        while a < self.entries.len() || b < other.entries.len() {
            let ia = self.entries.get(a).map(|e| e.0);
            let ib = other.entries.get(b).map(|e| e.0);
            match (ia, ib) {
                (Some(x), Some(y)) if x == y => {
                    let v = self.entries[a].1.add(&other.entries[b].1.mul(c));
                    if !v.is_zero() {
                        out.push((x, v));
                    }
                    a += 1;
                    b += 1;
                }
                (Some(x), Some(y)) if x < y => {
                    out.push(self.entries[a].clone());
                    a += 1;
                }
                (Some(_), None) => {
                    out.push(self.entries[a].clone());
                    a += 1;
                }
                (_, Some(y)) => {
                    let v = other.entries[b].1.mul(c);
                    if !v.is_zero() {
                        out.push((y, v));
                    }
                    b += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        SparseVector { entries: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(other, &S::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(other, &S::one().neg())
    }

    /// Applies `f` to every coefficient, dropping results that vanish.
    pub fn map_coeffs<T: Scalar, F: Fn(&S) -> T>(&self, f: F) -> SparseVector<T> {
        SparseVector::from_sorted_unchecked(
            self.entries
                .iter()
                .filter_map(|(i, c)| {
                    let v = f(c);
                    (!v.is_zero()).then_some((*i, v))
                })
                .collect(),
        )
    }
}

/// Order-independent builder for sparse vectors.
#[derive(Clone, Debug)]
pub struct Accumulator<S> {
    map: BTreeMap<usize, S>,
}

impl<S: Scalar> Default for Accumulator<S> {
    fn default() -> Self {
        Accumulator { map: BTreeMap::new() }
    }
}

impl<S: Scalar> Accumulator<S> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, index: usize, c: &S) {
        if c.is_zero() {
            return;
        }
        match self.map.get_mut(&index) {
            Some(x) => {
                x.add_assign(c);
                if x.is_zero() {
                    self.map.remove(&index);
                }
            }
            None => {
                self.map.insert(index, c.clone());
            }
        }
    }

    pub fn add_vector(&mut self, v: &SparseVector<S>, c: &S) {
        for (i, x) in v.iter() {
            self.add(*i, &x.mul(c));
        }
    }

    pub fn finish(self) -> SparseVector<S> {
        SparseVector { entries: self.map.into_iter().collect() }
    }
}

/// Incremental row-echelon structure: every stored row has leading
/// coefficient one at a pivot column no other row leads at.
#[derive(Clone, Debug)]
pub struct RowEchelonBasis<S> {
    rows: Vec<SparseVector<S>>,
    pivots: BTreeMap<usize, usize>,
}

impl<S: Field> Default for RowEchelonBasis<S> {
    fn default() -> Self {
        RowEchelonBasis { rows: Vec::new(), pivots: BTreeMap::new() }
    }
}

impl<S: Field> RowEchelonBasis<S> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVector<S>] {
        &self.rows
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Remainder of `v` modulo the span of the stored rows.
    pub fn reduce(&self, v: &SparseVector<S>) -> SparseVector<S> {
        let mut work: BTreeMap<usize, S> = v.iter().cloned().collect();
        let mut cursor = 0usize;
        loop {
            let Some((&col, c)) = work.range(cursor..).next() else { break };
            cursor = col + 1;
            let Some(&r) = self.pivots.get(&col) else { continue };
            let c = c.clone();
            for (j, x) in self.rows[r].iter() {
                let delta = x.mul(&c);
                match work.get_mut(j) {
                    Some(y) => {
                        *y = y.sub(&delta);
                        if y.is_zero() {
                            work.remove(j);
                        }
                    }
                    None => {
                        work.insert(*j, delta.neg());
                    }
                }
            }
        }
        SparseVector { entries: work.into_iter().collect() }
    }

    pub fn contains(&self, v: &SparseVector<S>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Reduces `v` and stores the normalized remainder if it is nonzero.
    /// Returns whether the span grew.
    pub fn reduce_insert(&mut self, v: &SparseVector<S>) -> bool {
        let r = self.reduce(v);
        let Some((col, lead)) = r.leading() else { return false };
        let inv = lead.inv().expect("nonzero leading coefficient");
        let row = r.scale(&inv);
        self.pivots.insert(col, self.rows.len());
        self.rows.push(row);
        true
    }
}

/// Rank of a dense matrix by Gaussian elimination.
pub fn gram_rank<S: Field>(matrix: &[Vec<S>]) -> usize {
    let mut m: Vec<Vec<S>> = matrix.to_vec();
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, p);
        let inv = m[rank][col].inv().unwrap();
        for r in (rank + 1)..nrows {
            if m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].mul(&inv);
            for c in col..ncols {
                let t = m[r][c].sub(&f.mul(&m[rank][c]));
                m[r][c] = t;
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Dense echelon basis over Z/PZ for large rank computations. Rows are kept
/// from their pivot column onward only.
#[derive(Clone, Debug)]
pub struct DenseEchelonFp<const P: u64> {
    dim: usize,
    rows: Vec<Vec<u64>>,
    pivot_row: Vec<u32>,
}

const NO_ROW: u32 = u32::MAX;

impl<const P: u64> DenseEchelonFp<P> {
    pub fn new(dim: usize) -> Self {
        DenseEchelonFp { dim, rows: Vec::new(), pivot_row: vec![NO_ROW; dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces a dense vector in place.
    pub fn reduce_in_place(&self, v: &mut [u64]) {
        debug_assert_eq!(v.len(), self.dim);
        for col in 0..self.dim {
            let c = v[col];
            if c == 0 {
                continue;
            }
            let r = self.pivot_row[col];
            if r == NO_ROW {
                continue;
            }
            let row = &self.rows[r as usize];
            let m = P - c;
            let tail = &mut v[col..];
            if P < (1 << 32) {
                for (x, &y) in tail.iter_mut().zip(row.iter()) {
                    *x = (*x + m * y) % P;
                }
            } else {
                for (x, &y) in tail.iter_mut().zip(row.iter()) {
                    *x = ((*x as u128 + m as u128 * y as u128) % P as u128) as u64;
                }
            }
        }
    }

    /// Reduces and inserts; returns whether the rank grew.
    pub fn reduce_insert(&mut self, mut v: Vec<u64>) -> bool {
        self.reduce_in_place(&mut v);
        let Some(col) = v.iter().position(|&x| x != 0) else { return false };
        let inv = Fp::<P>::new(v[col]).inv().unwrap().value();
        let row: Vec<u64> = v[col..].iter().map(|&x| Fp::<P>::mul_raw(x, inv)).collect();
        self.pivot_row[col] = self.rows.len() as u32;
        self.rows.push(row);
        true
    }

    pub fn sparse_to_dense(&self, v: &SparseVector<Fp<P>>) -> Vec<u64> {
        let mut out = vec![0u64; self.dim];
        for (i, c) in v.iter() {
            out[*i] = c.value();
        }
        out
    }
}
