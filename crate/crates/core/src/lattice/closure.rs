use crate::coxeter::RootSystem;

/// Bitset over reflection indices (at most 64 reflections).
pub type Bits = u64;

/// Iterator over the set bits of a [`Bits`] value, lowest first.
#[derive(Clone, Copy)]
pub struct BitIter(Bits);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

#[inline]
pub fn bits(b: Bits) -> BitIter {
    BitIter(b)
}

pub fn bits_from<I: IntoIterator<Item = usize>>(it: I) -> Bits {
    it.into_iter().fold(0, |acc, t| acc | (1 << t))
}

/// Smallest set of reflections containing `closed ∪ extra` that is stable
/// under `(t, r) ↦ r t r`, assuming `closed` already is.
///
/// By Dyer's theorem this is the reflection set of the subgroup generated.
pub fn extend_closure(roots: &RootSystem, mut closed: Bits, extra: Bits) -> Bits {
    let mut pending = extra & !closed;
    while pending != 0 {
        let t = pending.trailing_zeros() as usize;
        pending &= pending - 1;
        if closed >> t & 1 == 1 {
            continue;
        }
        let mut add = 0;
        for r in bits(closed) {
            add |= 1 << roots.conj(r, t);
            add |= 1 << roots.conj(t, r);
        }
        closed |= 1 << t;
        pending |= add & !closed;
    }
    closed
}

/// Dyer closure of an arbitrary set of reflections.
pub fn dyer_closure(roots: &RootSystem, set: Bits) -> Bits {
    extend_closure(roots, 0, set)
}

/// Image of a reflection set under conjugation by reflection `r`.
#[inline]
pub fn conjugate_set(roots: &RootSystem, r: usize, set: Bits) -> Bits {
    bits(set).fold(0, |acc, t| acc | 1 << roots.conj(r, t))
}
