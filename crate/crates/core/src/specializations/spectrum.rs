use std::sync::Arc;

use cwalg_exact::{Laurent, Rational, Scalar};

use super::apply_psi;
use crate::algebra::{AlgebraElement, CwAlgebra, Parameters};
use crate::coxeter::{CoxeterSystem, CoxeterType};
use crate::error::{Error, Result};
use crate::lattice::{Flavor, SubgroupLattice};

/// Eigenbasis of `g + λ g e` in `C_{A_1}(u)`.
#[derive(Clone, Debug)]
pub struct A1Spectrum<S> {
    pub eigenvectors: [AlgebraElement<S>; 4],
    pub eigenvalues: [S; 4],
    /// Eigenvalues of left multiplication by `e` and by `g`, in the same order.
    pub e_eigenvalues: [S; 4],
    pub g_eigenvalues: [S; 4],
}

fn a1_algebra<S: Scalar>(u: S) -> Result<CwAlgebra<S>> {
    let group = Arc::new(CoxeterSystem::new(CoxeterType::A(1))?);
    let lattice = SubgroupLattice::enumerate(group.roots_arc())?;
    let params = Parameters::uniform(group.roots(), u);
    CwAlgebra::new(group, &lattice, Flavor::Full, params)
}

/// Computes `a_0 = (1+g)(1−e)`, `a_1 = e(1+g)`, `a_2 = (g−1)(1−e)`,
/// `a_3 = (g−u)e` and checks every eigen-equation before returning them.
pub fn a1_spectrum<S: Scalar>(lambda: S, u: S) -> Result<A1Spectrum<S>> {
    let two_u1 = S::from_int(2).mul(&u.add(&S::one()));
    if two_u1.is_zero() {
        return Err(Error::DegenerateParameters("2(u+1) vanishes".into()));
    }
    let alg = a1_algebra(u.clone())?;
    let one = alg.one();
    let g = alg.g(0);
    let e = alg.e(0);
    let one_m_e = one.sub(&e);
    let eigenvectors = [
        alg.mul(&one.add(&g), &one_m_e),
        alg.mul(&e, &one.add(&g)),
        alg.mul(&g.sub(&one), &one_m_e),
        alg.mul(&g.sub(&one.scale(&u)), &e),
    ];
    let l1 = lambda.add(&S::one());
    let eigenvalues = [S::one(), u.mul(&l1), S::one().neg(), l1.neg()];
    let e_eigenvalues = [S::zero(), S::one(), S::zero(), S::one()];
    let g_eigenvalues = [S::one(), u.clone(), S::one().neg(), S::one().neg()];
    for (i, a) in eigenvectors.iter().enumerate() {
        let checks = [
            (apply_psi(&alg, 0, &lambda, a), &eigenvalues[i], "g + λge"),
            (alg.left_e(0, a), &e_eigenvalues[i], "e"),
            (alg.left_g(0, a), &g_eigenvalues[i], "g"),
        ];
        for (image, mu, op) in checks {
            if image != a.scale(mu) {
                return Err(Error::DegenerateParameters(format!("a_{i} is not an eigenvector of {op}")));
            }
        }
    }
    Ok(A1Spectrum { eigenvectors, eigenvalues, e_eigenvalues, g_eigenvalues })
}

/// Laurent label used for `u`.
pub const U_VAR: u8 = 0;
/// Laurent label used for `λ`.
pub const LAMBDA_VAR: u8 = 3;

/// Outcome of the discriminant cross-check in `Q[u, λ]`.
#[derive(Clone, Debug)]
pub struct DiscriminantReport {
    /// Characteristic polynomial of left multiplication by `g + λge`,
    /// coefficients from degree 0 upwards.
    pub char_poly: Vec<Laurent>,
    /// Whether `char_poly` equals `∏ (X − μ_i)` over the eigenvalues.
    pub char_poly_matches_eigenvalues: bool,
    /// `Res(f, f')` from the 7×7 Sylvester determinant.
    pub resultant: Laurent,
    /// The discriminant `∏_{i<j} (μ_i − μ_j)²`.
    pub from_roots: Laurent,
    pub closed_form: Laurent,
    /// `c` with `resultant = c · closed_form`, if such a rational constant exists.
    pub normalization: Option<Rational>,
}

impl DiscriminantReport {
    pub fn matches(&self) -> bool {
        self.char_poly_matches_eigenvalues && self.from_roots == self.closed_form && self.normalization.is_some()
    }
}

fn lin(c: i64, terms: &[(i64, &Laurent)]) -> Laurent {
    terms.iter().fold(Laurent::from_int(c), |acc, (k, x)| acc.add(&x.mul(&Laurent::from_int(*k))))
}

/// `Q(λ,u) = 4(λ+2)²(λu+u−1)²(1+u)²(1+λ)²(λu+1+u)²λ²`.
pub fn closed_form_discriminant() -> Laurent {
    let u = Laurent::var(U_VAR);
    let l = Laurent::var(LAMBDA_VAR);
    let lu = l.mul(&u);
    let factors = [
        lin(2, &[(1, &l)]),
        lin(-1, &[(1, &lu), (1, &u)]),
        lin(1, &[(1, &u)]),
        lin(1, &[(1, &l)]),
        lin(1, &[(1, &lu), (1, &u)]),
        l.clone(),
    ];
    factors.iter().fold(Laurent::from_int(4), |acc, f| acc.mul(&f.mul(f)))
}

/// Faddeev–LeVerrier: coefficients `c_0, …, c_n` of `det(X − M)`.
fn char_poly(m: &[Vec<Laurent>]) -> Vec<Laurent> {
    let n = m.len();
    let matmul = |a: &[Vec<Laurent>], b: &[Vec<Laurent>]| -> Vec<Vec<Laurent>> {
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).fold(Laurent::zero(), |acc, k| acc.add(&a[i][k].mul(&b[k][j])))).collect())
            .collect()
    };
    let mut coeffs = vec![Laurent::zero(); n + 1];
    coeffs[n] = Laurent::one();
    let mut mk: Vec<Vec<Laurent>> = vec![vec![Laurent::zero(); n]; n];
    for k in 1..=n {
        // M_k = M (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k
        let mut prev = mk.clone();
        for (i, row) in prev.iter_mut().enumerate() {
            row[i] = row[i].add(&coeffs[n - k + 1]);
        }
        mk = matmul(m, &prev);
        let tr = (0..n).fold(Laurent::zero(), |acc, i| acc.add(&mk[i][i]));
        coeffs[n - k] = tr.mul(&Laurent::constant(Rational::new(-1, k as i64)));
    }
    coeffs
}

/// Determinant by expansion over column subsets, row by row.
fn determinant(m: &[Vec<Laurent>]) -> Laurent {
    let n = m.len();
    let mut dp: Vec<Laurent> = vec![Laurent::zero(); 1 << n];
    dp[0] = Laurent::one();
    for mask in 0usize..(1 << n) {
        if dp[mask].is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        if row == n {
            continue;
        }
        for col in 0..n {
            if mask & (1 << col) != 0 || m[row][col].is_zero() {
                continue;
            }
            let above = (mask >> (col + 1)).count_ones();
            let mut term = dp[mask].mul(&m[row][col]);
            if above % 2 == 1 {
                term = term.neg();
            }
            let next = mask | (1 << col);
            dp[next] = dp[next].add(&term);
        }
    }
    dp[(1 << n) - 1].clone()
}

fn resultant(f: &[Laurent], g: &[Laurent]) -> Laurent {
    let (df, dg) = (f.len() - 1, g.len() - 1);
    let size = df + dg;
    let mut rows = Vec::with_capacity(size);
    for (shifts, p, d) in [(dg, f, df), (df, g, dg)] {
        for k in 0..shifts {
            let mut row = vec![Laurent::zero(); size];
            for j in 0..=d {
                row[k + j] = p[d - j].clone();
            }
            rows.push(row);
        }
    }
    determinant(&rows)
}

/// Rational `c` with `a = c · b`, when one exists.
fn constant_ratio(a: &Laurent, b: &Laurent) -> Option<Rational> {
    let (m, cb) = b.terms().next()?;
    let ca = a.terms().find(|(ma, _)| *ma == m).map(|(_, c)| c.clone())?;
    let c = cwalg_exact::Field::div(&ca, cb)?;
    (a == &b.mul(&Laurent::constant(c.clone()))).then_some(c)
}

/// Recomputes the discriminant of the characteristic polynomial of
/// `g + λge` on `C_{A_1}(u)` from scratch and compares it with `Q(λ,u)`.
pub fn a1_discriminant() -> Result<DiscriminantReport> {
    let u = Laurent::var(U_VAR);
    let lambda = Laurent::var(LAMBDA_VAR);
    let alg = a1_algebra(u.clone())?;
    let dim = alg.dim();
    let mut matrix = vec![vec![Laurent::zero(); dim]; dim];
    for j in 0..dim {
        let image = apply_psi(&alg, 0, &lambda, &AlgebraElement::unit(j));
        for (i, c) in image.iter() {
            matrix[*i][j] = c.clone();
        }
    }
    let cp = char_poly(&matrix);

    let spectrum = a1_spectrum(lambda, u)?;
    let mu = &spectrum.eigenvalues;
    let mut expected = vec![Laurent::one()];
    for m in mu {
        let mut next = vec![Laurent::zero(); expected.len() + 1];
        for (k, c) in expected.iter().enumerate() {
            next[k + 1] = next[k + 1].add(c);
            next[k] = next[k].sub(&c.mul(m));
        }
        expected = next;
    }
    let mut from_roots = Laurent::one();
    for i in 0..4 {
        for j in i + 1..4 {
            let d = mu[i].sub(&mu[j]);
            from_roots = from_roots.mul(&d.mul(&d));
        }
    }

    let deriv: Vec<Laurent> = (1..cp.len()).map(|k| cp[k].mul(&Laurent::from_int(k as i64))).collect();
    let res = resultant(&cp, &deriv);
    let closed = closed_form_discriminant();
    let normalization = constant_ratio(&res, &closed);
    Ok(DiscriminantReport {
        char_poly_matches_eigenvalues: cp == expected,
        char_poly: cp,
        resultant: res,
        from_roots,
        closed_form: closed,
        normalization,
    })
}
