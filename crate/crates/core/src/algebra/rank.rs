use std::collections::VecDeque;

use cwalg_exact::{Field, RowEchelonBasis};

use super::{AlgebraElement, CwAlgebra};

impl<S: Field> CwAlgebra<S> {
    /// Dimension of the cyclic submodule generated by `v_{∅,1}` under the
    /// operators `G_s` and `E_t`.
    ///
    /// This equals the number of basis vectors exactly when the module is
    /// cyclic and the algebra acts with the expected rank.
    pub fn cyclic_span_dimension(&self) -> usize {
        let group = self.group();
        let mut basis = RowEchelonBasis::new();
        let mut queue: VecDeque<AlgebraElement<S>> = VecDeque::new();
        let seed = self.one();
        basis.reduce_insert(&seed);
        queue.push_back(seed);
        while let Some(v) = queue.pop_front() {
            let images = (0..group.rank())
                .map(|s| self.left_g(s, &v))
                .chain((0..group.num_reflections()).map(|t| self.left_e(t, &v)));
            for w in images {
                if basis.reduce_insert(&w) {
                    queue.push_back(w);
                }
            }
        }
        basis.rank()
    }
}
