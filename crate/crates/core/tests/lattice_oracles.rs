//! Reflection subgroups of A_n, B_n and D_n recomputed by brute force in the
//! signed-permutation model and compared with the root-system lattice.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use cwalg::coxeter::{CoxeterSystem, CoxeterType};
use cwalg::lattice::{Flavor, SubgroupLattice};

/// Signed permutation: `img[i] = ±(j+1)` means `e_i ↦ ±e_j`.
type Signed = Vec<i8>;

fn compose(a: &Signed, b: &Signed) -> Signed {
    // (a ∘ b)(e_i) = a(b(e_i))
    b.iter()
        .map(|&x| {
            let j = x.unsigned_abs() as usize - 1;
            a[j] * x.signum()
        })
        .collect()
}

fn inverse(a: &Signed) -> Signed {
    let mut out = vec![0i8; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x.unsigned_abs() as usize - 1] = (i as i8 + 1) * x.signum();
    }
    out
}

fn reflections(family: char, n: usize) -> Vec<Signed> {
    let id: Signed = (1..=n as i8).collect();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut t = id.clone();
            t.swap(i, j);
            out.push(t.clone());
            if family != 'A' {
                t[i] = -t[i];
                t[j] = -t[j];
                out.push(t);
            }
        }
        if family == 'B' {
            let mut t = id.clone();
            t[i] = -t[i];
            out.push(t);
        }
    }
    out
}

fn generate(gens: &[Signed], n: usize) -> BTreeSet<Signed> {
    let id: Signed = (1..=n as i8).collect();
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = compose(g, &x);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// For every reflection subgroup: (number of reflections, normalizer order).
fn brute_force(family: char, n: usize) -> Vec<(u32, u64)> {
    let refl = reflections(family, n);
    let index: HashMap<Signed, usize> = refl.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
    let group: Vec<Signed> = generate(&refl, n).into_iter().collect();
    let mut subgroups: HashSet<u64> = HashSet::new();
    for mask in 0u64..(1 << refl.len()) {
        let gens: Vec<Signed> = (0..refl.len()).filter(|i| mask >> i & 1 == 1).map(|i| refl[i].clone()).collect();
        let h = generate(&gens, n);
        let bits = h.iter().filter_map(|x| index.get(x)).fold(0u64, |acc, &i| acc | 1 << i);
        subgroups.insert(bits);
    }
    let conj = |g: &Signed, bits: u64| -> u64 {
        let gi = inverse(g);
        (0..refl.len())
            .filter(|i| bits >> i & 1 == 1)
            .fold(0u64, |acc, i| acc | 1 << index[&compose(g, &compose(&refl[i], &gi))])
    };
    let mut out: Vec<(u32, u64)> = subgroups
        .iter()
        .map(|&bits| (bits.count_ones(), group.iter().filter(|g| conj(g, bits) == bits).count() as u64))
        .collect();
    out.sort_unstable();
    out
}

fn from_lattice(ty: CoxeterType) -> Vec<(u32, u64)> {
    let g = CoxeterSystem::new(ty).unwrap();
    let l = SubgroupLattice::enumerate(g.roots_arc()).unwrap();
    let mut out: Vec<(u32, u64)> =
        (0..l.len() as u32).map(|c| (l.set(c).count_ones(), l.normalizer_order(c))).collect();
    out.sort_unstable();
    out
}

#[test]
fn symmetric_group_s4() {
    let brute = brute_force('A', 4);
    assert_eq!(brute.len(), 15);
    assert_eq!(brute, from_lattice(CoxeterType::A(3)));
    // S_3 ⊂ S_4 is self-normalizing
    assert!(brute.contains(&(3, 6)));
}

#[test]
fn hyperoctahedral_b3() {
    let brute = brute_force('B', 3);
    assert_eq!(brute.len(), 38);
    assert_eq!(brute, from_lattice(CoxeterType::B(3)));
}

#[test]
fn even_signed_d4() {
    let brute = brute_force('D', 4);
    assert_eq!(brute.len(), 75);
    assert_eq!(brute, from_lattice(CoxeterType::D(4)));
}

#[test]
fn b2_flavors_nest() {
    let g = CoxeterSystem::new(CoxeterType::B(2)).unwrap();
    let l = SubgroupLattice::enumerate(g.roots_arc()).unwrap();
    let counts: Vec<Option<usize>> =
        [Flavor::Parabolic, Flavor::Closed, Flavor::Full].iter().map(|&f| l.flavor_count(f)).collect();
    assert_eq!(counts, vec![Some(6), Some(7), Some(8)]);
}

#[test]
fn bell_numbers_of_type_a_are_set_partitions() {
    // Stirling recursion, independent of the Bell triangle used elsewhere
    let bell = |n: usize| -> u64 {
        let mut s = vec![vec![0u64; n + 1]; n + 1];
        s[0][0] = 1;
        for i in 1..=n {
            for k in 1..=i {
                s[i][k] = k as u64 * s[i - 1][k] + s[i - 1][k - 1];
            }
        }
        s[n].iter().sum()
    };
    for n in 1..=6 {
        let g = CoxeterSystem::new(CoxeterType::A(n)).unwrap();
        let l = SubgroupLattice::enumerate(g.roots_arc()).unwrap();
        assert_eq!(l.len() as u64, bell(n + 1), "A{n}");
    }
}
