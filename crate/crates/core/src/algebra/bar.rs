use cwalg_exact::{Accumulator, Laurent};

use super::{AlgebraElement, CwAlgebra, HeckeAlgebra, HeckeElement};
use crate::coxeter::Elem;
use crate::error::Result;

/// The bar involution over `Z[v^{±1}]` with `u_s = v_s²`: coefficients
/// `v ↦ v⁻¹`, `g_w ↦ g_{s_1}⁻¹ ⋯ g_{s_k}⁻¹` for a reduced word of `w`, and
/// every `e_J` fixed.
///
/// Since `H_s = −v_s⁻¹ g_s`, this is the map `H_w ↦ (H_{w⁻¹})⁻¹`.
pub fn bar_laurent(alg: &CwAlgebra<Laurent>, x: &AlgebraElement<Laurent>) -> Result<AlgebraElement<Laurent>> {
    let mut acc = Accumulator::new();
    for (i, c) in x.iter() {
        let (f, w) = alg.split_index(*i);
        let mut y = alg.e_class(f);
        for s in alg.group().reduced_word(w) {
            y = alg.right_g_inv(s, &y)?;
        }
        acc.add_vector(&y, &c.bar());
    }
    Ok(acc.finish())
}

/// Lusztig's involution on the Hecke algebra: `T_w ↦ T_{s_1}⁻¹ ⋯ T_{s_k}⁻¹`
/// and `v ↦ v⁻¹` on coefficients.
pub fn hecke_bar(h: &HeckeAlgebra<Laurent>, x: &HeckeElement<Laurent>) -> Result<HeckeElement<Laurent>> {
    let mut acc = Accumulator::new();
    for (w, c) in x.iter() {
        let mut y = h.one();
        for s in h.group().reduced_word(*w as Elem) {
            y = h.mul(&y, &h.t_inv(s)?);
        }
        acc.add_vector(&y, &c.bar());
    }
    Ok(acc.finish())
}

/// Outcome of [`check_bar`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarReport {
    pub involutive: bool,
    pub multiplicative: bool,
    /// `p(bar x) = bar p(x)` with Lusztig's involution on the Hecke side.
    pub commutes_with_hecke: bool,
}

impl BarReport {
    pub fn holds(&self) -> bool {
        self.involutive && self.multiplicative && self.commutes_with_hecke
    }
}

/// Checks the bar involution on all basis elements and all pairs of basis
/// elements. Parameters must be `u_s = v_s²` with inverses available.
pub fn check_bar(alg: &CwAlgebra<Laurent>) -> Result<BarReport> {
    let h = HeckeAlgebra::new(alg.group_arc(), alg.params());
    let basis: Vec<AlgebraElement<Laurent>> = (0..alg.dim()).map(AlgebraElement::unit).collect();
    let bars = basis.iter().map(|b| bar_laurent(alg, b)).collect::<Result<Vec<_>>>()?;
    let mut report = BarReport { involutive: true, multiplicative: true, commutes_with_hecke: true };
    for (i, b) in basis.iter().enumerate() {
        report.involutive &= bar_laurent(alg, &bars[i])? == *b;
        report.commutes_with_hecke &= alg.hecke_project(&bars[i]) == hecke_bar(&h, &alg.hecke_project(b))?;
        for (j, c) in basis.iter().enumerate() {
            report.multiplicative &= bar_laurent(alg, &alg.mul(b, c))? == alg.mul(&bars[i], &bars[j]);
        }
    }
    Ok(report)
}
