use std::fmt;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex};
use std::time::Instant;

use cwalg::algebra::{check_bar, CwAlgebra, Parameters, RelationReport};
use cwalg::coxeter::{CoxeterSystem, CoxeterType, RootSystem};
use cwalg::lattice::{cache, BellReport, Flavor, SubgroupLattice};
use cwalg::specializations::{
    a1_discriminant, a1_spectrum, braid_image_dimension, braid_image_dimension_fp, ishii_check, semisimplicity_u1,
    BraidDimOptions, LambdaParams, MonoidAlgebra,
};
use cwalg::yokonuma::YokonumaAlgebra;
use cwalg_exact::{Field, Fp, Laurent, RatFunc, Rational, Scalar, P31, P61};
use serde_json::{json, Map, Value};

use crate::output::Report;
use crate::{
    CheckCommand, Cli, Command, DimArgs, Global, PrimeArg, ScalarArgs, ScalarKind, CACHE_ENV, EXIT_BAD_CONFIG,
    EXIT_BUDGET,
};

#[derive(Debug)]
pub enum CliError {
    Core(cwalg::Error),
    Config(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(cwalg::Error::BudgetExceeded(_)) => EXIT_BUDGET,
            _ => EXIT_BAD_CONFIG,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Config(s) => write!(f, "{s}"),
        }
    }
}

impl From<cwalg::Error> for CliError {
    fn from(e: cwalg::Error) -> Self {
        CliError::Core(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn config(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

/// The type as the user wrote it, so that `G2` is not reported as `I2:6`.
fn label(ty: &str) -> String {
    ty.trim().to_string()
}

pub fn parse_type(s: &str) -> Result<CoxeterType> {
    if s.trim().eq_ignore_ascii_case("E8") {
        return Err(cwalg::Error::BudgetExceeded("E8 is beyond the supported budget".into()).into());
    }
    Ok(s.parse()?)
}

/// A parameter literal: `symbolic` or a rational number.
#[derive(Clone, Debug, PartialEq)]
enum Param {
    Symbolic,
    Value(Rational),
}

fn parse_param(name: &str, s: &str) -> Result<Param> {
    if s.eq_ignore_ascii_case("symbolic") {
        return Ok(Param::Symbolic);
    }
    s.parse()
        .map(Param::Value)
        .map_err(|_| config(format!("--{name}: expected an integer, a fraction or `symbolic`, got `{s}`")))
}

fn literal(name: &str, s: &str) -> Result<Rational> {
    match parse_param(name, s)? {
        Param::Value(q) => Ok(q),
        Param::Symbolic => Err(config(format!("--{name} must be a number here"))),
    }
}

fn to_fp<const P: u64>(q: &Rational) -> Result<Fp<P>> {
    Fp::from_rational(q).ok_or_else(|| config(format!("{q} is not defined modulo the chosen prime")))
}

fn cache_dir(global: &Global) -> Option<PathBuf> {
    global.cache_dir.clone().or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
}

/// Loads the lattice from the cache or enumerates (and stores) it.
fn lattice(roots: Arc<RootSystem>, global: &Global) -> Result<(SubgroupLattice, bool)> {
    let ty = roots.coxeter_type();
    let dir = cache_dir(global);
    if let Some(l) = dir.as_deref().and_then(|d| cache::load(d, ty)) {
        if l.len() <= global.max_classes {
            return Ok((l, true));
        }
    }
    let l = SubgroupLattice::enumerate_with_cap(roots, global.max_classes)?;
    if let Some(d) = dir {
        if let Err(e) = cache::store(&d, &l) {
            eprintln!("warning: could not write the lattice cache: {e}");
        }
    }
    Ok((l, false))
}

struct Setup {
    ty: String,
    group: Arc<CoxeterSystem>,
    lattice: SubgroupLattice,
    cache_hit: bool,
}

fn setup(ty: &str, global: &Global) -> Result<Setup> {
    let parsed = parse_type(ty)?;
    let group = Arc::new(CoxeterSystem::with_cap(parsed, global.max_elements)?);
    let (lattice, cache_hit) = lattice(group.roots_arc(), global)?;
    Ok(Setup { ty: label(ty), group, lattice, cache_hit })
}

struct Job {
    command: &'static str,
    ty: Option<String>,
    params: Map<String, Value>,
    cache_hit: bool,
}

impl Job {
    fn new(command: &'static str, ty: Option<String>) -> Self {
        Job { command, ty, params: Map::new(), cache_hit: false }
    }

    fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    fn finish(self, start: Instant, global: &Global, result: Value, passed: bool) -> Report {
        let elapsed_ms = if global.timing { start.elapsed().as_millis() as u64 } else { 0 };
        Report {
            command: self.command,
            ty: self.ty,
            params: self.params,
            result,
            elapsed_ms,
            cache_hit: self.cache_hit,
            passed,
        }
    }
}

pub fn run(cli: &Cli) -> Result<Vec<Report>> {
    if cli.global.jobs == 0 {
        return Err(config("--jobs must be at least 1"));
    }
    let g = &cli.global;
    match &cli.command {
        Command::Bell { types } => bell(types, g),
        Command::Check { what } => check(what, g).map(|r| vec![r]),
        Command::Dim(args) => dim(args, g).map(|r| vec![r]),
        Command::Ishii { u, symbolic, k } => ishii(if *symbolic { "symbolic" } else { u }, *k, g).map(|r| vec![r]),
        Command::Monoid { r#type, flavor, words, max_len, seed } => {
            let start = Instant::now();
            let s = setup(r#type, g)?;
            let flavor: Flavor = (*flavor).into();
            let m = MonoidAlgebra::new(s.group.clone(), &s.lattice, flavor)?;
            let r = m.report::<Rational>(*words, *max_len, *seed);
            let result = json!({
                "dimension": m.dim(),
                "cube": r.cube,
                "braid_identity": r.braid_identity,
                "sign_conjugation": r.sign_conjugation,
                "words_checked": r.words_checked,
                "positive": r.positive,
            });
            let mut job = Job::new("monoid", Some(s.ty.clone()))
                .param("flavor", flavor.to_string())
                .param("words", *words)
                .param("max_len", *max_len)
                .param("seed", *seed);
            job.cache_hit = s.cache_hit;
            Ok(vec![job.finish(start, g, result, r.holds())])
        }
        Command::Ss { r#type, flavor, cap } => {
            let start = Instant::now();
            let s = setup(r#type, g)?;
            let flavor: Flavor = (*flavor).into();
            let r = semisimplicity_u1(s.group.clone(), &s.lattice, flavor, *cap)?;
            let result = json!({
                "dimension": r.dimension,
                "gram_rank": r.gram_rank,
                "semisimple": r.semisimple,
                "orbit_sum": r.orbit_sum,
                "block_identity": r.block_identity_holds(),
            });
            let mut job = Job::new("ss", Some(s.ty.clone())).param("flavor", flavor.to_string()).param("cap", *cap);
            job.cache_hit = s.cache_hit;
            Ok(vec![job.finish(start, g, result, r.semisimple && r.block_identity_holds())])
        }
        Command::Spectrum { lambda, u } => spectrum(lambda, u, g).map(|r| vec![r]),
    }
}

fn bell_one(name: &str, g: &Global) -> Result<Report> {
    let start = Instant::now();
    let ty = parse_type(name)?;
    let (l, hit) = lattice(Arc::new(RootSystem::new(ty)), g)?;
    let r = BellReport::from_lattice(&l);
    let rank: Value =
        u64::try_from(r.algebra_rank).map(Value::from).unwrap_or_else(|_| r.algebra_rank.to_string().into());
    let result = json!({
        "group_order": r.group_order,
        "bell_full": r.bell_full,
        "bell_parabolic": r.bell_parabolic,
        "bell_closed": r.bell_closed,
        "algebra_rank": rank,
    });
    let mut job = Job::new("bell", Some(label(name)));
    job.cache_hit = hit;
    Ok(job.finish(start, g, result, true))
}

fn bell(types: &[String], g: &Global) -> Result<Vec<Report>> {
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<Result<Report>>>> = Mutex::new((0..types.len()).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..g.jobs.min(types.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= types.len() {
                    break;
                }
                let r = bell_one(&types[i], g);
                slots.lock().expect("no panics while holding the lock")[i] = Some(r);
            });
        }
    });
    slots.into_inner().expect("workers finished").into_iter().map(|r| r.expect("every slot filled")).collect()
}

fn scalar_kind(args: &ScalarArgs) -> Result<(ScalarKind, Param)> {
    let u = parse_param("u", &args.u)?;
    let kind = if args.mod_p {
        ScalarKind::ModP
    } else {
        args.scalar.or(args.kind).unwrap_or(if u == Param::Symbolic {
            ScalarKind::Symbolic
        } else {
            ScalarKind::Rational
        })
    };
    match (kind, &u) {
        (ScalarKind::Symbolic, Param::Value(_)) => Err(config("the symbolic scalar needs --u symbolic")),
        (ScalarKind::Rational | ScalarKind::ModP, Param::Symbolic) => {
            Err(config("a numeric scalar needs a numeric --u"))
        }
        _ => Ok((kind, u)),
    }
}

fn scalar_params(job: Job, kind: ScalarKind, args: &ScalarArgs) -> Job {
    let name = match kind {
        ScalarKind::Symbolic => "symbolic",
        ScalarKind::Rational => "rational",
        ScalarKind::ModP => "mod-p",
    };
    let job = job.param("scalar", name).param("u", args.u.clone());
    if kind == ScalarKind::ModP {
        job.param("prime", if args.prime == PrimeArg::P31 { "2^31-1" } else { "2^61-1" })
    } else {
        job
    }
}

fn relation_json(r: &RelationReport) -> Value {
    let failures: Vec<String> = r.failures.iter().map(|f| format!("({}) {}", f.relation, f.detail)).collect();
    json!({"holds": r.holds(), "identities": r.total_checked(), "failures": failures})
}

/// Runs `f` on an algebra over the scalar ring selected by `args`.
macro_rules! with_algebra {
    ($s:expr, $flavor:expr, $kind:expr, $u:expr, $args:expr, |$alg:ident| $body:expr) => {{
        let (group, lattice) = (&$s.group, &$s.lattice);
        match ($kind, $u) {
            (ScalarKind::Symbolic, _) => {
                let $alg = CwAlgebra::new(group.clone(), lattice, $flavor, Parameters::symbolic(group.roots()))?;
                $body
            }
            (ScalarKind::Rational, Param::Value(q)) => {
                let $alg = CwAlgebra::new(
                    group.clone(),
                    lattice,
                    $flavor,
                    Parameters::field_uniform(group.roots(), q.clone()),
                )?;
                $body
            }
            (ScalarKind::ModP, Param::Value(q)) if $args.prime == PrimeArg::P31 => {
                let p = Parameters::field_uniform(group.roots(), to_fp::<P31>(q)?);
                let $alg = CwAlgebra::new(group.clone(), lattice, $flavor, p)?;
                $body
            }
            (ScalarKind::ModP, Param::Value(q)) => {
                let p = Parameters::field_uniform(group.roots(), to_fp::<P61>(q)?);
                let $alg = CwAlgebra::new(group.clone(), lattice, $flavor, p)?;
                $body
            }
            _ => unreachable!("scalar kind validated"),
        }
    }};
}

fn check(what: &CheckCommand, g: &Global) -> Result<Report> {
    let start = Instant::now();
    match what {
        CheckCommand::Cw { r#type, scalar, flavor } => {
            let (kind, u) = scalar_kind(scalar)?;
            let s = setup(r#type, g)?;
            let flavors: Vec<Flavor> = match flavor {
                Some(f) => vec![(*f).into()],
                None => [Flavor::Full, Flavor::Parabolic, Flavor::Closed]
                    .into_iter()
                    .filter(|&f| s.lattice.flavor_count(f).is_some())
                    .collect(),
            };
            let mut result = Map::new();
            let mut passed = true;
            for f in flavors {
                let report = with_algebra!(s, f, kind, &u, scalar, |alg| alg.check_defining_relations());
                passed &= report.holds();
                result.insert(f.to_string(), relation_json(&report));
            }
            let mut job = scalar_params(Job::new("check-cw", Some(s.ty.clone())), kind, scalar);
            job.cache_hit = s.cache_hit;
            Ok(job.finish(start, g, Value::Object(result), passed))
        }
        CheckCommand::Hecke { r#type, scalar, pairs, seed } => {
            let (kind, u) = scalar_kind(scalar)?;
            let s = setup(r#type, g)?;
            let r = with_algebra!(s, Flavor::Full, kind, &u, scalar, |alg| alg.check_hecke_tower(*pairs, *seed));
            let result = json!({"pairs": r.pairs, "multiplicative": r.multiplicative, "splitting": r.splitting});
            let mut job = scalar_params(Job::new("check-hecke", Some(s.ty.clone())), kind, scalar).param("seed", *seed);
            job.cache_hit = s.cache_hit;
            Ok(job.finish(start, g, result, r.holds()))
        }
        CheckCommand::Bar { r#type, cap } => {
            let s = setup(r#type, g)?;
            let params = Parameters::symbolic_squares(s.group.roots());
            let alg = CwAlgebra::new(s.group.clone(), &s.lattice, Flavor::Full, params)?;
            if alg.dim() > *cap {
                return Err(
                    cwalg::Error::BudgetExceeded(format!("dimension {} exceeds the cap {cap}", alg.dim())).into()
                );
            }
            let r = check_bar(&alg)?;
            let result = json!({
                "dimension": alg.dim(),
                "involutive": r.involutive,
                "multiplicative": r.multiplicative,
                "commutes_with_hecke": r.commutes_with_hecke,
            });
            let mut job = Job::new("check-bar", Some(s.ty.clone())).param("scalar", "laurent").param("u", "v^2");
            job.cache_hit = s.cache_hit;
            Ok(job.finish(start, g, result, r.holds()))
        }
        CheckCommand::Y { d, n, u } => {
            let job = Job::new("check-y", None).param("d", *d).param("n", *n).param("u", u.clone());
            let result = match parse_param("u", u)? {
                Param::Symbolic => yokonuma(YokonumaAlgebra::new(*d, *n, RatFunc::var())?, g)?,
                Param::Value(q) => yokonuma(YokonumaAlgebra::new(*d, *n, q)?, g)?,
            };
            let passed = result["relations"]["holds"] == true
                && result["cw_relations"]["holds"] == true
                && (d < n || result["dimension_matches"] == true);
            Ok(job.finish(start, g, result, passed))
        }
    }
}

const Y_CAP: usize = 50_000;

fn yokonuma<S: Field>(y: YokonumaAlgebra<S>, g: &Global) -> Result<Value> {
    if y.dim() > Y_CAP {
        return Err(cwalg::Error::BudgetExceeded(format!("Y has dimension {} > {Y_CAP}", y.dim())).into());
    }
    let n = y.strands();
    let rel = y.check_relations();
    let cw = y.check_cw_relations();
    let dim = y.braids_ties_dimension(Y_CAP)?;
    let (lattice, _) = lattice(Arc::new(RootSystem::new(CoxeterType::A(n - 1))), g)?;
    let factorial: usize = (1..=n).product();
    let expected = factorial * lattice.len();
    let failures: Vec<String> = rel.failures.iter().map(|f| format!("({}) {}", f.relation, f.detail)).collect();
    Ok(json!({
        "relations": {"holds": rel.holds(), "identities": rel.checked.iter().sum::<usize>(), "failures": failures},
        "cw_relations": relation_json(&cw),
        "braids_ties_dimension": dim,
        "n_factorial_bell_n": expected,
        "dimension_matches": dim == expected,
    }))
}

fn dim(args: &DimArgs, g: &Global) -> Result<Report> {
    let start = Instant::now();
    let (kind, u) = scalar_kind(&args.scalar)?;
    let lambda = literal("lambda", &args.lambda)?;
    let s = setup(&args.r#type, g)?;
    let flavor: Flavor = args.flavor.into();
    let opts = BraidDimOptions { include_inverses: !args.no_inverses, cap: args.cap };
    let (dimension, ambient) = match (kind, &u) {
        (ScalarKind::Symbolic, _) => {
            let params = Parameters::field_uniform(s.group.roots(), RatFunc::var());
            let alg = CwAlgebra::new(s.group.clone(), &s.lattice, flavor, params)?;
            let lam = LambdaParams::uniform(&alg, RatFunc::from_rational(lambda.clone()));
            (braid_image_dimension(&alg, &lam, opts)?, alg.dim())
        }
        (ScalarKind::Rational, Param::Value(q)) => {
            let alg = CwAlgebra::new(
                s.group.clone(),
                &s.lattice,
                flavor,
                Parameters::field_uniform(s.group.roots(), q.clone()),
            )?;
            let lam = LambdaParams::uniform(&alg, lambda.clone());
            (braid_image_dimension(&alg, &lam, opts)?, alg.dim())
        }
        (ScalarKind::ModP, Param::Value(q)) if args.scalar.prime == PrimeArg::P31 => {
            let alg = CwAlgebra::new(
                s.group.clone(),
                &s.lattice,
                flavor,
                Parameters::field_uniform(s.group.roots(), to_fp::<P31>(q)?),
            )?;
            let lam = LambdaParams::uniform(&alg, to_fp::<P31>(&lambda)?);
            (braid_image_dimension_fp(&alg, &lam, opts)?, alg.dim())
        }
        (ScalarKind::ModP, Param::Value(q)) => {
            let alg = CwAlgebra::new(
                s.group.clone(),
                &s.lattice,
                flavor,
                Parameters::field_uniform(s.group.roots(), to_fp::<P61>(q)?),
            )?;
            let lam = LambdaParams::uniform(&alg, to_fp::<P61>(&lambda)?);
            (braid_image_dimension_fp(&alg, &lam, opts)?, alg.dim())
        }
        _ => unreachable!("scalar kind validated"),
    };
    let monoid = lambda == Rational::from_int(-1);
    let mut job = scalar_params(Job::new("dim", Some(s.ty.clone())), kind, &args.scalar)
        .param("lambda", args.lambda.clone())
        .param("flavor", flavor.to_string())
        .param("inverses", opts.include_inverses && !monoid);
    job.cache_hit = s.cache_hit;
    Ok(job.finish(start, g, json!({"dimension": dimension, "algebra_dimension": ambient}), true))
}

fn ishii(u: &str, k: usize, g: &Global) -> Result<Report> {
    let start = Instant::now();
    let r = match parse_param("u", u)? {
        Param::Symbolic => ishii_check(k, Laurent::var(0), Laurent::var_pow(0, -1))?,
        Param::Value(q) => {
            let inv = q.inv().ok_or_else(|| config("u must be invertible"))?;
            ishii_check(k, q, inv)?
        }
    };
    let result = json!({
        "relation1": r.relation1,
        "relation2": r.relation2,
        "relation2_swapped": r.relation2_swapped,
        "cubic": r.cubic,
    });
    let job = Job::new("ishii", Some(CoxeterType::A(k).to_string())).param("u", u).param("k", k);
    Ok(job.finish(start, g, result, r.holds()))
}

fn spectrum(lambda: &str, u: &str, g: &Global) -> Result<Report> {
    let start = Instant::now();
    let as_laurent = |p: Param, var: u8| match p {
        Param::Symbolic => Laurent::var(var),
        Param::Value(q) => Laurent::constant(q),
    };
    let (lp, up) = (parse_param("lambda", lambda)?, parse_param("u", u)?);
    let symbolic = lp == Param::Symbolic && up == Param::Symbolic;
    let sp = a1_spectrum(as_laurent(lp, 3), as_laurent(up, 0))?;
    let show = |xs: &[Laurent]| -> Vec<String> { xs.iter().map(|x| x.to_string()).collect() };
    let mut result = Map::new();
    result.insert("eigenvalues".into(), json!(show(&sp.eigenvalues)));
    result.insert("e_eigenvalues".into(), json!(show(&sp.e_eigenvalues)));
    result.insert("g_eigenvalues".into(), json!(show(&sp.g_eigenvalues)));
    let mut passed = true;
    if symbolic {
        let d = a1_discriminant()?;
        passed = d.matches();
        result.insert(
            "discriminant".into(),
            json!({
                "char_poly_matches_eigenvalues": d.char_poly_matches_eigenvalues,
                "matches_closed_form": d.from_roots == d.closed_form,
                "normalization": d.normalization.map(|c| c.to_string()),
            }),
        );
    }
    let job = Job::new("spectrum", Some("A1".into())).param("lambda", lambda).param("u", u);
    Ok(job.finish(start, g, Value::Object(result), passed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e8_is_a_budget_error() {
        let e = parse_type("E8").unwrap_err();
        assert_eq!(e.exit_code(), EXIT_BUDGET);
        assert_eq!(parse_type("X9").unwrap_err().exit_code(), EXIT_BAD_CONFIG);
    }

    #[test]
    fn params() {
        assert_eq!(parse_param("u", "Symbolic").unwrap(), Param::Symbolic);
        assert_eq!(parse_param("u", "-3/4").unwrap(), Param::Value(Rational::new(-3, 4)));
        assert!(parse_param("u", "x").is_err());
    }
}
