//! Acceptance suite: one line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use cwalg::algebra::{bar_laurent, hecke_bar, AlgebraElement, CwAlgebra, HeckeAlgebra, Parameters};
use cwalg::coxeter::{CoxeterSystem, CoxeterType};
use cwalg::lattice::{bell_report, Flavor, SubgroupLattice};
use cwalg::specializations::{
    a1_discriminant, a1_spectrum, braid_image_dimension, braid_image_dimension_fp, ishii_check, semisimplicity_u1,
    BraidDimOptions, LambdaParams, MonoidAlgebra, DEFAULT_SS_CAP,
};
use cwalg::yokonuma::YokonumaAlgebra;
use cwalg_exact::{Fp31, Laurent, RatFunc, Rational, Scalar, SparseVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;

fn ty(s: &str) -> CoxeterType {
    s.parse().expect("valid type")
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Outcome {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn setup(name: &str) -> (Arc<CoxeterSystem>, SubgroupLattice) {
    let g = Arc::new(CoxeterSystem::new(ty(name)).expect("group"));
    let l = SubgroupLattice::enumerate(g.roots_arc()).expect("lattice");
    (g, l)
}

/// Bell numbers `B_0, …, B_n` from the Bell triangle.
fn bell_numbers(n: usize) -> Vec<u64> {
    let mut bells = vec![1u64];
    let mut row = vec![1u64];
    while bells.len() <= n {
        bells.push(*row.last().unwrap());
        let mut next = vec![*row.last().unwrap()];
        for x in &row {
            next.push(next.last().unwrap() + x);
        }
        row = next;
    }
    bells
}

fn divisor_sum(m: u64) -> u64 {
    (1..=m).filter(|d| m.is_multiple_of(*d)).sum()
}

fn bell_classical() -> Outcome {
    let bells = bell_numbers(8);
    for n in 0..=6 {
        let r = bell_report(CoxeterType::A(n)).map_err(|e| e.to_string())?;
        expect(&format!("Bell(A{n})"), r.bell_full, bells[n + 1])?;
    }
    let full_b = [8, 38, 218, 1430, 10514];
    let par_b = [6, 24, 116, 648];
    let closed_b = [7, 31, 164, 999];
    for n in 2..=6 {
        let r = bell_report(CoxeterType::B(n)).map_err(|e| e.to_string())?;
        expect(&format!("Bell(B{n})"), r.bell_full, full_b[n - 2])?;
        if n <= 5 {
            expect(&format!("Bell^p(B{n})"), r.bell_parabolic, par_b[n - 2])?;
            expect(&format!("Bell^R(B{n})"), r.bell_closed, Some(closed_b[n - 2]))?;
        }
    }
    let full_d = [4, 15, 75, 428];
    let par_d = [4, 15, 72, 403];
    for n in 2..=5 {
        let r = bell_report(CoxeterType::D(n)).map_err(|e| e.to_string())?;
        expect(&format!("Bell(D{n})"), r.bell_full, full_d[n - 2])?;
        expect(&format!("Bell^p(D{n})"), r.bell_parabolic, par_d[n - 2])?;
    }
    let r = bell_report(CoxeterType::B(7)).map_err(|e| e.to_string())?;
    expect("Bell(B7)", r.bell_full, 85202)
}

fn bell_exceptional() -> Outcome {
    // (type, parabolic, closed, full, rank)
    let rows: [(&str, u64, Option<u64>, u64, u128); 6] = [
        ("G2", 8, Some(12), 13, 156),
        ("H3", 48, None, 53, 6360),
        ("F4", 268, Some(447), 637, 733_824),
        ("H4", 2104, None, 2760, 39_744_000),
        ("E6", 4598, Some(5079), 5079, 263_295_360),
        ("E7", 90408, Some(107_911), 107_911, 2_903_040 * 107_911),
    ];
    for (name, p, c, f, rank) in rows {
        let r = bell_report(ty(name)).map_err(|e| e.to_string())?;
        expect(
            &format!("{name} row"),
            (r.bell_parabolic, r.bell_closed, r.bell_full, r.algebra_rank),
            (p, c, f, rank),
        )?;
    }
    Ok(())
}

fn dihedral() -> Outcome {
    for m in 3..=50u32 {
        let r = bell_report(CoxeterType::I2(m)).map_err(|e| e.to_string())?;
        expect(&format!("Bell(I2({m}))"), r.bell_full, 1 + divisor_sum(m as u64))?;
    }
    Ok(())
}

const SIX: [&str; 6] = ["A1", "A2", "A3", "B2", "G2", "I2:5"];

fn flavors(l: &SubgroupLattice) -> Vec<Flavor> {
    [Flavor::Full, Flavor::Parabolic, Flavor::Closed].into_iter().filter(|&f| l.flavor_count(f).is_some()).collect()
}

fn defining_relations() -> Outcome {
    for name in SIX {
        let (g, l) = setup(name);
        for flavor in flavors(&l) {
            let alg =
                CwAlgebra::new(g.clone(), &l, flavor, Parameters::symbolic(g.roots())).map_err(|e| e.to_string())?;
            let report = alg.check_defining_relations();
            if !report.holds() {
                return Err(format!("{name} {flavor}: {report}"));
            }
        }
    }
    Ok(())
}

fn rank_certification() -> Outcome {
    for name in SIX {
        let (g, l) = setup(name);
        let classes = g.roots().num_classes();
        let values: Vec<Fp31> = [17, 127].iter().cycle().take(classes).map(|&x| Fp31::from_int(x)).collect();
        for flavor in flavors(&l) {
            let alg =
                CwAlgebra::new(g.clone(), &l, flavor, Parameters::field(values.clone())).map_err(|e| e.to_string())?;
            let expected = g.order() * l.flavor_count(flavor).unwrap();
            expect(&format!("{name} {flavor} cyclic span"), alg.cyclic_span_dimension(), expected)?;
        }
    }
    Ok(())
}

fn random_element(alg: &CwAlgebra<Laurent>, rng: &mut ChaCha8Rng) -> AlgebraElement<Laurent> {
    let terms = rng.gen_range(1..=4);
    SparseVector::from_pairs(
        (0..terms).map(|_| (rng.gen_range(0..alg.dim()), Laurent::from_int(rng.gen_range(-3..=3)))),
    )
}

fn hecke_tower() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for name in ["A2", "B2"] {
        let (g, l) = setup(name);
        let params = Parameters::symbolic(g.roots());
        let h = HeckeAlgebra::new(g.clone(), &params);
        let alg = CwAlgebra::new(g.clone(), &l, Flavor::Full, params).map_err(|e| e.to_string())?;
        for _ in 0..100 {
            let (x, y) = (random_element(&alg, &mut rng), random_element(&alg, &mut rng));
            let lhs = alg.hecke_project(&alg.mul(&x, &y));
            let rhs = h.mul(&alg.hecke_project(&x), &alg.hecke_project(&y));
            if lhs != rhs {
                return Err(format!("{name}: projection not multiplicative"));
            }
        }
        for w in 0..g.order() as u32 {
            if alg.hecke_project(&alg.hecke_split(w)) != h.t(w) {
                return Err(format!("{name}: p(q(T_{w})) != T_{w}"));
            }
        }
    }
    Ok(())
}

fn bar_involution() -> Outcome {
    for name in ["A1", "A2"] {
        let (g, l) = setup(name);
        let params = Parameters::symbolic_squares(g.roots());
        let h = HeckeAlgebra::new(g.clone(), &params);
        let alg = CwAlgebra::new(g.clone(), &l, Flavor::Full, params).map_err(|e| e.to_string())?;
        let bar = |x: &AlgebraElement<Laurent>| bar_laurent(&alg, x).map_err(|e| e.to_string());
        let basis: Vec<AlgebraElement<Laurent>> = (0..alg.dim()).map(SparseVector::unit).collect();
        let bars: Vec<AlgebraElement<Laurent>> = basis.iter().map(bar).collect::<Result<_, _>>()?;
        for (i, (b, bb)) in basis.iter().zip(&bars).enumerate() {
            if bar(bb)? != *b {
                return Err(format!("{name}: bar is not involutive on basis vector {i}"));
            }
            let via_hecke = hecke_bar(&h, &alg.hecke_project(b)).map_err(|e| e.to_string())?;
            if alg.hecke_project(bb) != via_hecke {
                return Err(format!("{name}: square with the Hecke involution fails on {i}"));
            }
            for (j, c) in basis.iter().enumerate() {
                if bar(&alg.mul(b, c))? != alg.mul(bb, &bars[j]) {
                    return Err(format!("{name}: bar not multiplicative on ({i}, {j})"));
                }
            }
        }
    }
    Ok(())
}

fn braid_dimensions() -> Outcome {
    let opts = BraidDimOptions::default();
    for (name, want) in [("A1", 3), ("A2", 20)] {
        let (g, l) = setup(name);
        let alg = CwAlgebra::new(g.clone(), &l, Flavor::Full, Parameters::field_uniform(g.roots(), RatFunc::var()))
            .map_err(|e| e.to_string())?;
        let lam = LambdaParams::uniform(&alg, RatFunc::zero());
        expect(
            &format!("{name} over Q(u)"),
            braid_image_dimension(&alg, &lam, opts).map_err(|e| e.to_string())?,
            want,
        )?;
    }
    for (name, u, want) in [("A3", 17, 217), ("A3", 127, 217), ("A4", 17, 3364)] {
        let (g, l) = setup(name);
        let params = Parameters::field_uniform(g.roots(), Fp31::from_int(u));
        let alg = CwAlgebra::new(g, &l, Flavor::Full, params).map_err(|e| e.to_string())?;
        let lam = LambdaParams::uniform(&alg, Fp31::zero());
        let got = braid_image_dimension_fp(&alg, &lam, opts).map_err(|e| e.to_string())?;
        expect(&format!("{name} at u = {u} mod p"), got, want)?;
    }
    Ok(())
}

fn ishii() -> Outcome {
    let r = ishii_check(2, Laurent::var(0), Laurent::var_pow(0, -1)).map_err(|e| e.to_string())?;
    if r.holds() {
        Ok(())
    } else {
        Err(format!("{r:?}"))
    }
}

fn a1_spectrum_check() -> Outcome {
    a1_spectrum(Laurent::var(3), Laurent::var(0)).map_err(|e| e.to_string())?;
    let d = a1_discriminant().map_err(|e| e.to_string())?;
    if !d.char_poly_matches_eigenvalues {
        return Err("characteristic polynomial differs from the eigenvalue product".into());
    }
    expect("discriminant from roots", &d.from_roots, &d.closed_form)?;
    expect("normalization constant", d.normalization, Some(Rational::one()))
}

fn monoid() -> Outcome {
    let (g, l) = setup("A2");
    let m = MonoidAlgebra::new(g, &l, Flavor::Parabolic).map_err(|e| e.to_string())?;
    let r = m.report::<Rational>(500, 20, 11);
    if r.holds() && r.braid_identity == Some(true) {
        Ok(())
    } else {
        Err(format!("{r:?}"))
    }
}

fn semisimplicity() -> Outcome {
    for (name, dim) in [("A2", 30), ("B2", 64), ("A3", 360)] {
        let (g, l) = setup(name);
        let r = semisimplicity_u1(g, &l, Flavor::Full, DEFAULT_SS_CAP).map_err(|e| e.to_string())?;
        expect(&format!("{name} (dimension, gram rank)"), (r.dimension, r.gram_rank), (dim, dim))?;
        if name == "A3" && !r.block_identity_holds() {
            return Err(format!("A3 orbit sum {} != {}", r.orbit_sum, r.dimension));
        }
    }
    Ok(())
}

fn yokonuma() -> Outcome {
    let u = Rational::from_int(17);
    for (d, n) in [(2, 3), (3, 3), (3, 2)] {
        let y = YokonumaAlgebra::new(d, n, u.clone()).map_err(|e| e.to_string())?;
        let r = y.check_relations();
        if !r.holds() {
            return Err(format!("Y_{{{d},{n}}}: {:?}", r.failures));
        }
    }
    let bells = bell_numbers(4);
    for (d, n) in [(3usize, 3usize), (4, 4)] {
        let y = YokonumaAlgebra::new(d, n, u.clone()).map_err(|e| e.to_string())?;
        let fact: u64 = (1..=n as u64).product();
        let dim = y.braids_ties_dimension(10_000).map_err(|e| e.to_string())?;
        expect(&format!("braids and ties ({d},{n})"), dim as u64, fact * bells[n])?;
        let r = y.check_cw_relations();
        if !r.holds() {
            return Err(format!("Y_{{{d},{n}}} C-relations: {r}"));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("Bell tables, classical", bell_classical),
        ("Bell tables, exceptional", bell_exceptional),
        ("I2(m) Bell numbers", dihedral),
        ("defining relations", defining_relations),
        ("rank certification", rank_certification),
        ("Hecke tower", hecke_tower),
        ("bar involution", bar_involution),
        ("braid image dimensions", braid_dimensions),
        ("Ishii relations", ishii),
        ("A1 spectrum and discriminant", a1_spectrum_check),
        ("monoid representation", monoid),
        ("semisimplicity at u = 1", semisimplicity),
        ("Yokonuma oracle", yokonuma),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS {:>2}. {name} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2}. {name} ({secs:.1}s): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
