//! Reflection subgroups as closed reflection sets, their conjugation action
//! and the parabolic and root-closure flavor maps.

pub mod cache;
mod closure;

use std::collections::VecDeque;
use std::sync::{Arc, OnceLock};

use rustc_hash::FxHashMap;

use crate::coxeter::{CoxeterType, Golden, RootSystem};
use crate::error::{Error, Result};

pub use closure::{bits, bits_from, conjugate_set, dyer_closure, extend_closure, BitIter, Bits};

/// Class id of a closed reflection set inside a [`SubgroupLattice`].
pub type ClassId = u32;

/// Default cap on the number of closed sets an enumeration may visit.
pub const DEFAULT_STATE_CAP: usize = 2_000_000;

/// Which quotient of the subgroup lattice indexes the algebra basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// All reflection subgroups.
    Full,
    /// Parabolic subgroups only.
    Parabolic,
    /// Closed symmetric root subsystems (crystallographic types).
    Closed,
}

impl std::str::FromStr for Flavor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "full" | "cw" => Ok(Flavor::Full),
            "parabolic" | "p" => Ok(Flavor::Parabolic),
            "closed" | "root" | "r" => Ok(Flavor::Closed),
            _ => Err(Error::InvalidArgument(format!("unknown flavor `{s}`"))),
        }
    }
}

impl std::fmt::Display for Flavor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Flavor::Full => "full",
            Flavor::Parabolic => "parabolic",
            Flavor::Closed => "closed",
        })
    }
}

/// All reflection subgroups of a finite Coxeter group.
///
/// Class ids sort the canonical bitsets numerically, so `0` is the trivial
/// subgroup, the last id is the whole group and `J ⊆ K` implies `id(J) ≤ id(K)`.
#[derive(Debug)]
pub struct SubgroupLattice {
    roots: Arc<RootSystem>,
    sets: Vec<Bits>,
    index: FxHashMap<Bits, ClassId>,
    conj: Vec<Vec<ClassId>>,
    orbit: Vec<u32>,
    orbit_sizes: Vec<u64>,
    parabolics: Vec<ClassId>,
    parabolic_rank: Vec<Option<u8>>,
    join: OnceLock<Vec<ClassId>>,
    parabolic_closure: OnceLock<Vec<ClassId>>,
    root_closure: OnceLock<Option<Vec<ClassId>>>,
}

impl SubgroupLattice {
    pub fn enumerate(roots: Arc<RootSystem>) -> Result<Self> {
        Self::enumerate_with_cap(roots, DEFAULT_STATE_CAP)
    }

    /// Breadth-first enumeration: every closed set is extended by one
    /// reflection and closed again until no new set appears.
    pub fn enumerate_with_cap(roots: Arc<RootSystem>, cap: usize) -> Result<Self> {
        let n = roots.num_reflections();
        if n > Bits::BITS as usize {
            return Err(Error::UnsupportedType(format!("{} has more than 64 reflections", roots.coxeter_type())));
        }
        let mut found: Vec<Bits> = vec![0];
        let mut ids: FxHashMap<Bits, u32> = FxHashMap::default();
        ids.insert(0, 0);
        let mut join: Vec<u32> = Vec::new();
        let mut queue = VecDeque::from([0u32]);
        while let Some(c) = queue.pop_front() {
            let set = found[c as usize];
            for t in 0..n {
                let next = if set >> t & 1 == 1 { set } else { extend_closure(&roots, set, 1 << t) };
                let id = *ids.entry(next).or_insert_with(|| {
                    found.push(next);
                    queue.push_back(found.len() as u32 - 1);
                    found.len() as u32 - 1
                });
                join.push(id);
            }
            if found.len() > cap {
                return Err(Error::BudgetExceeded(format!(
                    "more than {cap} reflection subgroups in {}",
                    roots.coxeter_type()
                )));
            }
        }
        let mut order: Vec<u32> = (0..found.len() as u32).collect();
        order.sort_unstable_by_key(|&i| found[i as usize]);
        let mut rank_of = vec![0u32; found.len()];
        for (new, &old) in order.iter().enumerate() {
            rank_of[old as usize] = new as u32;
        }
        let mut sorted_join = vec![0u32; join.len()];
        for (old, chunk) in join.chunks(n.max(1)).enumerate() {
            let new = rank_of[old] as usize;
            for (t, &j) in chunk.iter().enumerate() {
                sorted_join[new * n + t] = rank_of[j as usize];
            }
        }
        let sets: Vec<Bits> = order.iter().map(|&i| found[i as usize]).collect();
        let lattice = Self::from_sets(roots, sets)?;
        let _ = lattice.join.set(sorted_join);
        Ok(lattice)
    }

    /// Rebuilds the lattice structure from a complete, sorted list of closed
    /// sets (for instance read back from a cache file).
    pub fn from_sets(roots: Arc<RootSystem>, sets: Vec<Bits>) -> Result<Self> {
        let rank = roots.rank();
        if sets.first() != Some(&0) || sets.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument("closed sets must be sorted and start with the empty set".into()));
        }
        let index: FxHashMap<Bits, ClassId> = sets.iter().enumerate().map(|(i, &b)| (b, i as ClassId)).collect();
        let lookup = |b: Bits| -> Result<ClassId> {
            index.get(&b).copied().ok_or_else(|| Error::InvalidArgument("closed-set list is incomplete".into()))
        };

        let mut conj = vec![Vec::with_capacity(sets.len()); rank];
        for (s, row) in conj.iter_mut().enumerate() {
            for &b in &sets {
                row.push(lookup(conjugate_set(&roots, s, b))?);
            }
        }

        let mut orbit = vec![u32::MAX; sets.len()];
        let mut orbit_sizes = Vec::new();
        for start in 0..sets.len() {
            if orbit[start] != u32::MAX {
                continue;
            }
            let o = orbit_sizes.len() as u32;
            orbit[start] = o;
            let mut stack = vec![start];
            let mut size = 0u64;
            while let Some(c) = stack.pop() {
                size += 1;
                for row in &conj {
                    let d = row[c] as usize;
                    if orbit[d] == u32::MAX {
                        orbit[d] = o;
                        stack.push(d);
                    }
                }
            }
            orbit_sizes.push(size);
        }

        // W-orbits of the standard parabolic subgroups
        let mut parabolic_rank: Vec<Option<u8>> = vec![None; sets.len()];
        for subset in 0u64..(1 << rank) {
            let c = lookup(dyer_closure(&roots, subset))?;
            if parabolic_rank[c as usize].is_some() {
                continue;
            }
            let r = subset.count_ones() as u8;
            let o = orbit[c as usize];
            for (d, slot) in parabolic_rank.iter_mut().enumerate() {
                if orbit[d] == o {
                    *slot = Some(r);
                }
            }
        }
        let parabolics = (0..sets.len() as ClassId).filter(|&c| parabolic_rank[c as usize].is_some()).collect();

        Ok(SubgroupLattice {
            roots,
            sets,
            index,
            conj,
            orbit,
            orbit_sizes,
            parabolics,
            parabolic_rank,
            join: OnceLock::new(),
            parabolic_closure: OnceLock::new(),
            root_closure: OnceLock::new(),
        })
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

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[Bits] {
        &self.sets
    }

    pub fn set(&self, c: ClassId) -> Bits {
        self.sets[c as usize]
    }

    pub fn class_of(&self, closed: Bits) -> Option<ClassId> {
        self.index.get(&closed).copied()
    }

    /// Class of the subgroup generated by an arbitrary set of reflections.
    pub fn class_of_generated(&self, set: Bits) -> ClassId {
        self.index[&dyer_closure(&self.roots, set)]
    }

    pub fn trivial(&self) -> ClassId {
        0
    }

    pub fn full(&self) -> ClassId {
        self.sets.len() as ClassId - 1
    }

    pub fn contains(&self, big: ClassId, small: ClassId) -> bool {
        let (b, s) = (self.set(big), self.set(small));
        b & s == s
    }

    fn join_table(&self) -> &[ClassId] {
        self.join.get_or_init(|| {
            let n = self.roots.num_reflections();
            let mut table = Vec::with_capacity(self.sets.len() * n);
            for &b in &self.sets {
                for t in 0..n {
                    table.push(self.index[&extend_closure(&self.roots, b, 1 << t)]);
                }
            }
            table
        })
    }

    /// Class of `⟨J, t⟩`.
    #[inline]
    pub fn join_reflection(&self, c: ClassId, t: usize) -> ClassId {
        self.join_table()[c as usize * self.roots.num_reflections() + t]
    }

    /// Class of `⟨J, K⟩`.
    pub fn join(&self, a: ClassId, b: ClassId) -> ClassId {
        bits(self.set(b) & !self.set(a)).fold(a, |c, t| self.join_reflection(c, t))
    }

    /// Class of `s J s` for a simple index `s`.
    #[inline]
    pub fn conj_simple(&self, s: usize, c: ClassId) -> ClassId {
        self.conj[s][c as usize]
    }

    /// Class of `r J r` for an arbitrary reflection `r`.
    pub fn conj_reflection(&self, r: usize, c: ClassId) -> ClassId {
        self.index[&conjugate_set(&self.roots, r, self.set(c))]
    }

    pub fn orbit_of(&self, c: ClassId) -> u32 {
        self.orbit[c as usize]
    }

    pub fn orbit_sizes(&self) -> &[u64] {
        &self.orbit_sizes
    }

    pub fn num_orbits(&self) -> usize {
        self.orbit_sizes.len()
    }

    /// Order of the normalizer `N_W(⟨J⟩)`, i.e. `|W|` over the orbit size.
    pub fn normalizer_order(&self, c: ClassId) -> u64 {
        self.roots.coxeter_type().group_order() / self.orbit_sizes[self.orbit[c as usize] as usize]
    }

    pub fn is_parabolic(&self, c: ClassId) -> bool {
        self.parabolic_rank[c as usize].is_some()
    }

    pub fn parabolic_ids(&self) -> &[ClassId] {
        &self.parabolics
    }

    /// Rank of the parabolic closure of `c`: the number of simple
    /// generators of a standard parabolic conjugate to it.
    pub fn parabolic_rank(&self, c: ClassId) -> u8 {
        self.parabolic_rank[self.parabolic_closure(c) as usize].expect("closure is parabolic")
    }

    /// The smallest parabolic subgroup containing `c`.
    pub fn parabolic_closure(&self, c: ClassId) -> ClassId {
        self.parabolic_closure_map()[c as usize]
    }

    pub fn parabolic_closure_map(&self) -> &[ClassId] {
        self.parabolic_closure.get_or_init(|| {
            // parabolics are closed under intersection, so the smallest one
            // containing a set is the unique minimal one
            let mut by_size = self.parabolics.clone();
            by_size.sort_by_key(|&p| (self.set(p).count_ones(), p));
            let words = by_size.len().div_ceil(64);
            let n = self.roots.num_reflections();
            let mut slices = vec![vec![0u64; words]; n];
            for (pos, &p) in by_size.iter().enumerate() {
                for t in bits(self.set(p)) {
                    slices[t][pos / 64] |= 1 << (pos % 64);
                }
            }
            let mut acc = vec![0u64; words];
            self.sets
                .iter()
                .map(|&b| {
                    acc.fill(u64::MAX);
                    for t in bits(b) {
                        for (a, s) in acc.iter_mut().zip(&slices[t]) {
                            *a &= s;
                        }
                    }
                    let (w, word) = acc.iter().enumerate().find(|(_, w)| **w != 0).expect("W is parabolic");
                    by_size[w * 64 + word.trailing_zeros() as usize]
                })
                .collect()
        })
    }

    /// The closed-subsystem closure of `c`; `None` for non-crystallographic types.
    pub fn root_closure(&self, c: ClassId) -> Option<ClassId> {
        self.root_closure_map().map(|m| m[c as usize])
    }

    pub fn root_closure_map(&self) -> Option<&[ClassId]> {
        self.root_closure
            .get_or_init(|| {
                let sums = RootSums::new(&self.roots)?;
                Some(self.sets.iter().map(|&b| self.index[&sums.close(&self.roots, b)]).collect())
            })
            .as_deref()
    }

    /// Whether the class is a closed symmetric subsystem.
    pub fn is_root_closed(&self, c: ClassId) -> Option<bool> {
        self.root_closure(c).map(|r| r == c)
    }

    /// Closure map of a flavor, `None` for [`Flavor::Full`] or when the
    /// flavor does not apply to the type.
    pub fn flavor_map(&self, flavor: Flavor) -> Option<&[ClassId]> {
        match flavor {
            Flavor::Full => None,
            Flavor::Parabolic => Some(self.parabolic_closure_map()),
            Flavor::Closed => self.root_closure_map(),
        }
    }

    /// Number of distinct classes in the image of a flavor map.
    pub fn flavor_count(&self, flavor: Flavor) -> Option<usize> {
        match flavor {
            Flavor::Full => Some(self.len()),
            Flavor::Parabolic => Some(self.parabolics.len()),
            Flavor::Closed => {
                let m = self.root_closure_map()?;
                Some(m.iter().enumerate().filter(|&(i, &c)| i == c as usize).count())
            }
        }
    }
}

/// Which sums and differences of positive roots are again roots.
struct RootSums {
    n: usize,
    plus: Vec<Option<u8>>,
    minus: Vec<Option<u8>>,
}

impl RootSums {
    fn new(roots: &RootSystem) -> Option<Self> {
        if !roots.coxeter_type().is_crystallographic() {
            return None;
        }
        let coords = roots.positive_roots()?;
        let n = coords.len();
        let mut lookup: FxHashMap<Vec<Golden>, u8> = FxHashMap::default();
        for (k, c) in coords.iter().enumerate() {
            lookup.insert(c.clone(), k as u8);
            lookup.insert(c.iter().map(|x| -*x).collect(), k as u8);
        }
        let mut plus = vec![None; n * n];
        let mut minus = vec![None; n * n];
        for a in 0..n {
            for b in 0..n {
                let s: Vec<Golden> = coords[a].iter().zip(&coords[b]).map(|(x, y)| *x + *y).collect();
                let d: Vec<Golden> = coords[a].iter().zip(&coords[b]).map(|(x, y)| *x - *y).collect();
                plus[a * n + b] = lookup.get(&s).copied();
                minus[a * n + b] = lookup.get(&d).copied();
            }
        }
        Some(RootSums { n, plus, minus })
    }

    /// Smallest Dyer-closed set containing `set` whose roots are closed
    /// under sums. Root signs are irrelevant since every set is symmetric.
    fn close(&self, roots: &RootSystem, mut set: Bits) -> Bits {
        loop {
            let mut extra = 0;
            for a in bits(set) {
                for b in bits(set) {
                    for t in [self.plus[a * self.n + b], self.minus[a * self.n + b]].into_iter().flatten() {
                        extra |= 1 << t;
                    }
                }
            }
            extra &= !set;
            if extra == 0 {
                return set;
            }
            set = extend_closure(roots, set, extra);
        }
    }
}

/// Bell numbers of a Coxeter type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BellReport {
    pub coxeter_type: CoxeterType,
    pub group_order: u64,
    pub bell_full: u64,
    pub bell_parabolic: u64,
    /// Closed symmetric subsystems; absent for non-crystallographic types.
    pub bell_closed: Option<u64>,
    /// `|W| · bell_full`, the rank of the algebra.
    pub algebra_rank: u128,
}

impl BellReport {
    pub fn from_lattice(lattice: &SubgroupLattice) -> Self {
        let ty = lattice.coxeter_type();
        let order = ty.group_order();
        BellReport {
            coxeter_type: ty,
            group_order: order,
            bell_full: lattice.len() as u64,
            bell_parabolic: lattice.parabolic_ids().len() as u64,
            bell_closed: lattice.flavor_count(Flavor::Closed).map(|c| c as u64),
            algebra_rank: order as u128 * lattice.len() as u128,
        }
    }
}

/// Enumerates the lattice of `ty` and summarizes its Bell numbers.
pub fn bell_report(ty: CoxeterType) -> Result<BellReport> {
    let roots = Arc::new(RootSystem::new(ty.validate()?));
    Ok(BellReport::from_lattice(&SubgroupLattice::enumerate(roots)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lattice(s: &str) -> SubgroupLattice {
        SubgroupLattice::enumerate(Arc::new(RootSystem::new(s.parse().unwrap()))).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(lattice("A3").len(), 15);
        assert_eq!(lattice("G2").len(), 13);
        assert_eq!(lattice("A0").len(), 1);
    }

    #[test]
    fn normalizers() {
        let l = lattice("A3");
        assert_eq!(l.normalizer_order(l.trivial()), 24);
        assert_eq!(l.normalizer_order(l.full()), 24);
        let a2 = l.class_of_generated(0b011);
        assert_eq!(l.normalizer_order(a2), 6);
    }

    #[test]
    fn join_matches_closure() {
        let l = lattice("B3");
        for c in 0..l.len() as ClassId {
            for d in 0..l.len() as ClassId {
                let j = l.join(c, d);
                assert_eq!(l.set(j), dyer_closure(l.roots(), l.set(c) | l.set(d)));
            }
        }
    }
}
