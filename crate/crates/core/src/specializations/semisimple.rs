use std::sync::Arc;

use cwalg_exact::{Rational, RowEchelonBasis, Scalar, SparseVector};

use crate::algebra::{AlgebraElement, CwAlgebra, FlavorTable, Parameters};
use crate::coxeter::CoxeterSystem;
use crate::error::{Error, Result};
use crate::lattice::{Flavor, SubgroupLattice};

pub const DEFAULT_SS_CAP: usize = 512;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemisimplicityReport {
    pub dimension: usize,
    /// Rank of the trace form `(x, y) ↦ tr(L_{xy})`.
    pub gram_rank: usize,
    pub semisimple: bool,
    /// `Σ_O |O|² · |N_W(J_O)|` over W-orbits of classes.
    pub orbit_sum: u64,
}

impl SemisimplicityReport {
    pub fn block_identity_holds(&self) -> bool {
        self.orbit_sum == self.dimension as u64
    }
}

fn orbit_sizes(table: &FlavorTable) -> Vec<u64> {
    let n = table.len();
    let mut seen = vec![false; n];
    let mut sizes = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start as u32];
        let mut size = 0u64;
        while let Some(f) = stack.pop() {
            size += 1;
            for s in 0..table.rank() {
                let g = table.conj_simple(s, f);
                if !seen[g as usize] {
                    seen[g as usize] = true;
                    stack.push(g);
                }
            }
        }
        sizes.push(size);
    }
    sizes
}

/// Tests semisimplicity of the flavor quotient at `u = 1` over Q through
/// nondegeneracy of the regular trace form.
pub fn semisimplicity_u1(
    group: Arc<CoxeterSystem>,
    lattice: &SubgroupLattice,
    flavor: Flavor,
    cap: usize,
) -> Result<SemisimplicityReport> {
    let params = Parameters::field_uniform(group.roots(), Rational::one());
    let order = group.order() as u64;
    let alg = CwAlgebra::new(group, lattice, flavor, params)?;
    let dim = alg.dim();
    if dim > cap {
        return Err(Error::BudgetExceeded(format!("algebra dimension {dim} exceeds the cap {cap}")));
    }
    let basis: Vec<AlgebraElement<Rational>> = (0..dim).map(SparseVector::unit).collect();
    let products: Vec<Vec<AlgebraElement<Rational>>> =
        basis.iter().map(|x| basis.iter().map(|y| alg.mul(x, y)).collect()).collect();
    let trace: Vec<Rational> = (0..dim)
        .map(|k| (0..dim).fold(Rational::zero(), |acc, m| acc.add(products[k][m].get(m).unwrap_or(&Rational::zero()))))
        .collect();
    let tau = |z: &AlgebraElement<Rational>| z.iter().fold(Rational::zero(), |acc, (k, c)| acc.add(&c.mul(&trace[*k])));

    let mut echelon = RowEchelonBasis::new();
    for row in &products {
        let gram_row = SparseVector::from_pairs(row.iter().enumerate().map(|(j, z)| (j, tau(z))));
        echelon.reduce_insert(&gram_row);
    }
    let gram_rank = echelon.rank();
    let orbit_sum = orbit_sizes(alg.table()).iter().map(|&o| o * o * (order / o)).sum();
    Ok(SemisimplicityReport { dimension: dim, gram_rank, semisimple: gram_rank == dim, orbit_sum })
}
