use std::collections::VecDeque;
use std::hash::Hash;

use rustc_hash::FxHashMap;

use super::golden::Golden;
use super::types::CoxeterType;

/// A root model: a set of root labels with simple roots, the simple
/// reflections acting on them and negation.
trait RootModel {
    type Root: Clone + Eq + Hash;
    fn rank(&self) -> usize;
    fn simple(&self, i: usize) -> Self::Root;
    fn reflect(&self, i: usize, r: &Self::Root) -> Self::Root;
    fn negate(&self, r: &Self::Root) -> Self::Root;
}

/// Roots in simple-root coordinates, reflected through a generalized Cartan
/// matrix with entries in Z[φ]: `s_i(β) = β − ⟨β, α_i^∨⟩ α_i`.
struct CartanModel {
    cartan: Vec<Vec<Golden>>,
}

impl RootModel for CartanModel {
    type Root = Vec<Golden>;

    fn rank(&self) -> usize {
        self.cartan.len()
    }

    fn simple(&self, i: usize) -> Vec<Golden> {
        let mut v = vec![Golden::ZERO; self.rank()];
        v[i] = Golden::ONE;
        v
    }

    fn reflect(&self, i: usize, r: &Vec<Golden>) -> Vec<Golden> {
        let mut pairing = Golden::ZERO;
        for (j, c) in r.iter().enumerate() {
            pairing = pairing + *c * self.cartan[j][i];
        }
        let mut out = r.clone();
        out[i] = out[i] - pairing;
        out
    }

    fn negate(&self, r: &Vec<Golden>) -> Vec<Golden> {
        r.iter().map(|c| -*c).collect()
    }
}

/// Dihedral roots labelled by `k ∈ Z/2m`, the root at angle `kπ/m`.
struct DihedralModel {
    m: u32,
}

impl RootModel for DihedralModel {
    type Root = u32;

    fn rank(&self) -> usize {
        2
    }

    fn simple(&self, i: usize) -> u32 {
        if i == 0 {
            0
        } else {
            self.m - 1
        }
    }

    fn reflect(&self, i: usize, k: &u32) -> u32 {
        let j = self.simple(i);
        let two_m = 2 * self.m;
        (2 * j + self.m + two_m - k % two_m) % two_m
    }

    fn negate(&self, k: &u32) -> u32 {
        (k + self.m) % (2 * self.m)
    }
}

fn cartan_matrix(ty: CoxeterType) -> Vec<Vec<Golden>> {
    let n = ty.rank();
    let mut c = vec![vec![Golden::ZERO; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = Golden::int(2);
    }
    let mut bond = |i: usize, j: usize, cij: Golden, cji: Golden| {
        c[i][j] = cij;
        c[j][i] = cji;
    };
    let one = Golden::int(-1);
    let phi = -Golden::PHI;
    match ty {
        CoxeterType::A(n) => {
            for i in 1..n {
                bond(i - 1, i, one, one);
            }
        }
        CoxeterType::B(n) => {
            for i in 1..n - 1 {
                bond(i - 1, i, one, one);
            }
            // last simple root is short
            bond(n - 1, n - 2, one, Golden::int(-2));
        }
        CoxeterType::D(n) => {
            for i in 1..n - 1 {
                bond(i - 1, i, one, one);
            }
            if n >= 3 {
                bond(n - 3, n - 1, one, one);
            }
        }
        CoxeterType::E6 | CoxeterType::E7 => {
            bond(0, 2, one, one);
            bond(1, 3, one, one);
            for i in 3..n {
                bond(i - 1, i, one, one);
            }
        }
        CoxeterType::F4 => {
            bond(0, 1, one, one);
            bond(1, 2, Golden::int(-2), one);
            bond(2, 3, one, one);
        }
        CoxeterType::H3 | CoxeterType::H4 => {
            bond(0, 1, phi, phi);
            for i in 2..n {
                bond(i - 1, i, one, one);
            }
        }
        CoxeterType::I2(6) => {
            // node 0 short, node 1 long
            bond(0, 1, one, Golden::int(-3));
        }
        CoxeterType::I2(_) => unreachable!("non-crystallographic dihedral types use DihedralModel"),
    }
    c
}

/// Positive roots, reflections and the signed permutation action of every
/// reflection on the set of all roots.
///
/// Roots are indexed `0..2N`: index `k < N` is the positive root `α_k` (with
/// the simple roots first) and `k + N` is `−α_k`. Reflection `k` is the
/// reflection in `α_k`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    ty: CoxeterType,
    rank: usize,
    coords: Option<Vec<Vec<Golden>>>,
    perms: Vec<Vec<u16>>,
    coxeter_matrix: Vec<Vec<u32>>,
    reflection_class: Vec<usize>,
    simple_class: Vec<usize>,
    n_classes: usize,
}

fn build_roots<M: RootModel>(model: &M) -> (Vec<M::Root>, Vec<Vec<u16>>) {
    let rank = model.rank();
    let mut roots: Vec<M::Root> = (0..rank).map(|i| model.simple(i)).collect();
    let mut index: FxHashMap<M::Root, usize> = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; rank];
    let mut queue: VecDeque<usize> = (0..rank).collect();
    while let Some(k) = queue.pop_front() {
        for i in 0..rank {
            if k == i {
                continue;
            }
            let image = model.reflect(i, &roots[k]);
            if !index.contains_key(&image) {
                index.insert(image.clone(), roots.len());
                parent.push(Some((i, k)));
                queue.push_back(roots.len());
                roots.push(image);
            }
        }
    }
    let n = roots.len();
    let all: Vec<M::Root> = roots.iter().cloned().chain(roots.iter().map(|r| model.negate(r))).collect();
    for (k, r) in all.iter().enumerate().skip(n) {
        index.insert(r.clone(), k);
    }
    let mut perms: Vec<Vec<u16>> = Vec::with_capacity(n);
    for i in 0..rank {
        perms.push(all.iter().map(|r| index[&model.reflect(i, r)] as u16).collect());
    }
    for k in rank..n {
        let (i, j) = parent[k].expect("non-simple root has a parent");
        let (si, sj) = (&perms[i], &perms[j]);
        let p: Vec<u16> = (0..2 * n).map(|r| si[sj[si[r] as usize] as usize]).collect();
        perms.push(p);
    }
    (roots, perms)
}

impl RootSystem {
    pub fn new(ty: CoxeterType) -> Self {
        let rank = ty.rank();
        let (coords, perms) = match ty {
            CoxeterType::I2(m) if m != 6 => {
                let (_, perms) = build_roots(&DihedralModel { m });
                (None, perms)
            }
            _ => {
                let (roots, perms) = build_roots(&CartanModel { cartan: cartan_matrix(ty) });
                (Some(roots), perms)
            }
        };
        let n = perms.len();
        debug_assert_eq!(n, ty.num_reflections());

        let mut coxeter_matrix = vec![vec![1u32; rank]; rank];
        for i in 0..rank {
            for j in 0..rank {
                if i != j {
                    coxeter_matrix[i][j] = product_order(&perms[i], &perms[j]);
                }
            }
        }

        // W-orbits on reflections under conjugation by simple reflections
        let mut reflection_class = vec![usize::MAX; n];
        let mut n_classes = 0;
        for start in 0..n {
            if reflection_class[start] != usize::MAX {
                continue;
            }
            reflection_class[start] = n_classes;
            let mut stack = vec![start];
            while let Some(t) = stack.pop() {
                for p in perms.iter().take(rank) {
                    let c = p[t] as usize % n;
                    if reflection_class[c] == usize::MAX {
                        reflection_class[c] = n_classes;
                        stack.push(c);
                    }
                }
            }
            n_classes += 1;
        }
        let simple_class = reflection_class[..rank].to_vec();

        RootSystem { ty, rank, coords, perms, coxeter_matrix, reflection_class, simple_class, n_classes }
    }

    pub fn coxeter_type(&self) -> CoxeterType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of reflections, equal to the number of positive roots.
    pub fn num_reflections(&self) -> usize {
        self.perms.len()
    }

    pub fn coxeter_matrix(&self) -> &[Vec<u32>] {
        &self.coxeter_matrix
    }

    /// Simple-root coordinates of the positive roots; `None` for dihedral
    /// types built combinatorially.
    pub fn positive_roots(&self) -> Option<&[Vec<Golden>]> {
        self.coords.as_deref()
    }

    /// Image of root `r` (in `0..2N`) under reflection `k`.
    #[inline]
    pub fn reflect_root(&self, k: usize, r: usize) -> usize {
        self.perms[k][r] as usize
    }

    /// Index of the reflection `r t r`.
    #[inline]
    pub fn conj(&self, r: usize, t: usize) -> usize {
        self.perms[r][t] as usize % self.perms.len()
    }

    /// Index of the negated root.
    #[inline]
    pub fn negate(&self, r: usize) -> usize {
        let n = self.perms.len();
        if r < n {
            r + n
        } else {
            r - n
        }
    }

    /// Conjugacy class id of each reflection.
    pub fn reflection_class(&self) -> &[usize] {
        &self.reflection_class
    }

    /// Conjugacy class id of each simple reflection.
    pub fn simple_class(&self) -> &[usize] {
        &self.simple_class
    }

    pub fn num_classes(&self) -> usize {
        self.n_classes
    }

    /// Partition of the simple indices into W-conjugacy classes.
    pub fn simple_conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); self.n_classes];
        for (i, &c) in self.simple_class.iter().enumerate() {
            out[c].push(i);
        }
        out.retain(|c| !c.is_empty());
        out
    }
}

fn product_order(a: &[u16], b: &[u16]) -> u32 {
    let len = a.len();
    let mut cur: Vec<u16> = (0..len as u16).collect();
    let mut order = 0;
    loop {
        cur = cur.iter().map(|&r| a[b[r as usize] as usize]).collect();
        order += 1;
        if cur.iter().enumerate().all(|(i, &r)| r as usize == i) {
            return order;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn reflection_counts() {
        for (s, n) in [
            ("A3", 6),
            ("B3", 9),
            ("D4", 12),
            ("F4", 24),
            ("E6", 36),
            ("E7", 63),
            ("H3", 15),
            ("H4", 60),
            ("G2", 6),
            ("I2:7", 7),
        ] {
            assert_eq!(sys(s).num_reflections(), n, "{s}");
        }
    }

    #[test]
    fn coxeter_matrices() {
        assert_eq!(sys("B2").coxeter_matrix()[0][1], 4);
        assert_eq!(sys("G2").coxeter_matrix()[0][1], 6);
        assert_eq!(sys("I2:7").coxeter_matrix()[1][0], 7);
        let h3 = sys("H3");
        assert_eq!(h3.coxeter_matrix()[0][1], 5);
        assert_eq!(h3.coxeter_matrix()[0][2], 2);
        let e6 = sys("E6");
        assert_eq!(e6.coxeter_matrix()[1][3], 3);
        assert_eq!(e6.coxeter_matrix()[1][2], 2);
    }

    #[test]
    fn conjugation_is_involutive() {
        for s in ["B3", "H3", "I2:8", "F4"] {
            let r = sys(s);
            let n = r.num_reflections();
            for a in 0..n {
                for t in 0..n {
                    assert_eq!(r.conj(a, r.conj(a, t)), t);
                }
            }
        }
    }

    #[test]
    fn simple_classes() {
        for (s, k) in
            [("A4", 1), ("D5", 1), ("E6", 1), ("H4", 1), ("I2:5", 1), ("B3", 2), ("F4", 2), ("I2:6", 2), ("I2:8", 2)]
        {
            assert_eq!(sys(s).simple_conjugacy_classes().len(), k, "{s}");
        }
    }
}
