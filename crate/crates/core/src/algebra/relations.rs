use std::fmt;

use cwalg_exact::Scalar;

use super::{AlgebraElement, CwAlgebra};

/// A defining relation that failed on some basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationFailure {
    /// Number of the relation family, 1 to 6.
    pub relation: u8,
    pub detail: String,
}

/// Outcome of checking the defining relations as operator identities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationReport {
    /// Number of operator identities evaluated, per relation family.
    pub checked: [usize; 6],
    /// First failure found in each failing family.
    pub failures: Vec<RelationFailure>,
}

impl RelationReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn total_checked(&self) -> usize {
        self.checked.iter().sum()
    }

    fn record(&mut self, relation: u8, ok: bool, detail: impl FnOnce() -> String) {
        self.checked[relation as usize - 1] += 1;
        if !ok && !self.failures.iter().any(|f| f.relation == relation) {
            self.failures.push(RelationFailure { relation, detail: detail() });
        }
    }
}

impl fmt::Display for RelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.holds() {
            write!(f, "all relations hold ({} identities)", self.total_checked())
        } else {
            let list: Vec<String> = self.failures.iter().map(|x| format!("({}) {}", x.relation, x.detail)).collect();
            write!(f, "failed: {}", list.join("; "))
        }
    }
}

impl<S: Scalar> CwAlgebra<S> {
    /// Applies `G_{a} G_{b} G_{a} ⋯` (`len` factors, rightmost first).
    fn alternating(&self, a: usize, b: usize, len: u32, x: &AlgebraElement<S>) -> AlgebraElement<S> {
        let mut word: Vec<usize> = (0..len).map(|i| if i % 2 == 0 { a } else { b }).collect();
        word.reverse();
        word.iter().fold(x.clone(), |acc, &s| self.left_g(s, &acc))
    }

    /// Checks relations (1)–(6) on every basis vector:
    /// braid relations, `e_t² = e_t`, commuting idempotents,
    /// `e_t e_r = e_t e_{trt}`, `g_s e_t = e_{sts} g_s` and the quadratic relation.
    pub fn check_defining_relations(&self) -> RelationReport {
        let mut report = RelationReport::default();
        let group = self.group();
        let roots = group.roots();
        let rank = group.rank();
        let n = group.num_reflections();
        let m = roots.coxeter_matrix();
        for i in 0..self.dim() {
            let v: AlgebraElement<S> = cwalg_exact::SparseVector::unit(i);
            let (f, w) = self.split_index(i);
            let at = || format!("on v(class {f}, w {w})");

            for s in 0..rank {
                for t in s + 1..rank {
                    let lhs = self.alternating(s, t, m[s][t], &v);
                    let rhs = self.alternating(t, s, m[s][t], &v);
                    report.record(1, lhs == rhs, || format!("braid relation for s{s}, s{t} {}", at()));
                }
            }

            let ev: Vec<AlgebraElement<S>> = (0..n).map(|t| self.left_e(t, &v)).collect();
            for t in 0..n {
                report.record(2, self.left_e(t, &ev[t]) == ev[t], || format!("e_{t}^2 {}", at()));
                for r in 0..n {
                    let er = self.left_e(t, &ev[r]);
                    let re = self.left_e(r, &ev[t]);
                    report.record(3, er == re, || format!("e_{t} e_{r} {}", at()));
                    let trt = roots.conj(t, r);
                    report
                        .record(4, er == self.left_e(t, &ev[trt]), || format!("e_{t} e_{r} vs e_{t} e_{trt} {}", at()));
                }
            }

            for s in 0..rank {
                let gv = self.left_g(s, &v);
                for t in 0..n {
                    let lhs = self.left_g(s, &ev[t]);
                    let rhs = self.left_e(roots.conj(s, t), &gv);
                    report.record(5, lhs == rhs, || format!("g_{s} e_{t} {}", at()));
                }
                let lhs = self.left_g(s, &gv);
                let inner = ev[s].add(&self.left_e(s, &gv));
                let rhs = v.add(&inner.scale(&self.u(s).sub(&S::one())));
                report.record(6, lhs == rhs, || format!("quadratic relation for s{s} {}", at()));
            }
        }
        report
    }
}
