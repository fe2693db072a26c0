//! Verification suites behind the `verify` binary.
//!
//! Each suite runs a fixed battery of checks and returns a [`SuiteReport`].
//! Randomized checks draw from a ChaCha stream seeded by `seed` and the suite
//! name, so `all` reproduces every individual suite exactly.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt::Display;
use std::path::PathBuf;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::abelian_hecke::{
    elliptic, gram_matrix, hecke_eigenvalue, symmetric_power_eval, verify_eigenfunction, write_eigenvalue_csv,
    EigenvalueRow,
};
use crate::complex::format_complex;
use crate::connections::{
    connection_from_class, diffop_eigenvalues, finite_difference_check, holonomy, monodromy_generators,
    spectrum_scan, split_real_predicate, torus_oper_from_class, write_spectrum_csv, SpectrumRow, TorusPath,
};
use crate::finite_models::{
    example2_cover, fiber_catalog, fq_hecke_apply, verify_hecke_relations, BundleDescriptor, CatalogReport,
    LineBundle, PrimeField,
};
use crate::fundamental_group::{
    complete_to_sl2, fixed_variant_character, fixed_variant_from_matrix, gcd_normal_form, reachability_search,
    well_definedness_audit,
};
use crate::torus_geometry::{
    line_integral, period_pairing, solve_harmonic, CohomologyClass, Cycle, JacobianPoint, RiemannMatrix,
};
use crate::torus_groups::{
    t_harmonic_eval, t_hecke_apply, t_hecke_eigenvalue, t_monodromy_generators, t_orthogonality_check, BunTPoint,
    TCohomologyClass, TorusData,
};
use crate::{Error, Result};

pub const SUITES: [&str; 8] = ["elliptic", "jacobian", "connections", "torus", "finite-hecke", "fiber", "biject", "all"];

/// One named comparison.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub observed: String,
    pub residual: f64,
    pub pass: bool,
}

impl Check {
    /// Passes when `residual <= tol`.
    pub fn within(name: impl Into<String>, tol: f64, residual: f64) -> Self {
        Self {
            name: name.into(),
            expected: format!("<= {tol:e}"),
            observed: format!("{residual:e}"),
            residual,
            pass: residual <= tol,
        }
    }

    /// Passes when the two renderings agree.
    pub fn equal(name: impl Into<String>, expected: impl Display, observed: impl Display) -> Self {
        let (expected, observed) = (expected.to_string(), observed.to_string());
        let pass = expected == observed;
        Self {
            name: name.into(),
            expected,
            observed,
            residual: if pass { 0.0 } else { 1.0 },
            pass,
        }
    }

    pub fn holds(name: impl Into<String>, pass: bool) -> Self {
        Self::equal(name, true, pass)
    }

    fn failed(name: impl Into<String>, err: &Error) -> Self {
        Self {
            name: name.into(),
            expected: "no error".into(),
            observed: err.to_string(),
            residual: f64::INFINITY,
            pass: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite_name: String,
    pub parameters: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub overall_pass: bool,
}

impl SuiteReport {
    fn new(suite_name: &str, parameters: BTreeMap<String, String>, mut checks: Vec<Check>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        Self {
            suite_name: suite_name.to_string(),
            parameters,
            overall_pass: checks.iter().all(|c| c.pass),
            checks,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Flags shared by all suites; `None` selects the suite default.
#[derive(Debug, Clone, Default)]
pub struct SuiteParams {
    pub tau: Option<Complex64>,
    pub omega: Option<RiemannMatrix>,
    pub gamma: Option<Vec<i64>>,
    pub q: Option<u64>,
    pub grid: Option<usize>,
    pub max_mode: Option<i64>,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub csv: Option<PathBuf>,
}

impl SuiteParams {
    fn seed(&self) -> u64 {
        self.seed.unwrap_or(0)
    }

    fn samples(&self) -> usize {
        self.samples.unwrap_or(20)
    }

    fn grid(&self) -> usize {
        self.grid.unwrap_or(64)
    }

    fn max_mode(&self, default: i64) -> i64 {
        self.max_mode.unwrap_or(default)
    }

    fn rng(&self, suite: &str) -> ChaCha8Rng {
        let salt = suite.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3));
        ChaCha8Rng::seed_from_u64(self.seed() ^ salt)
    }

    fn elliptic_lattices(&self) -> Result<Vec<RiemannMatrix>> {
        match self.tau {
            Some(tau) => Ok(vec![RiemannMatrix::elliptic(tau)?]),
            None => [Complex64::new(0.0, 1.0), Complex64::new(0.3, 1.2)]
                .into_iter()
                .map(RiemannMatrix::elliptic)
                .collect(),
        }
    }

    /// The genus-one lattices and the `--omega` lattice, restricted to the
    /// genus of `--gamma` when it is given.
    fn all_lattices(&self) -> Result<Vec<RiemannMatrix>> {
        let mut lattices = self.elliptic_lattices()?;
        lattices.push(self.jacobian_lattice()?);
        if let Some(flat) = &self.gamma {
            let genus = flat.len() / 2;
            lattices.retain(|l| l.genus() == genus);
            if lattices.is_empty() {
                return Err(Error::BadFlag(format!("--gamma has {} entries, matching no lattice", flat.len())));
            }
        }
        Ok(lattices)
    }

    /// `--omega` if given, otherwise a genus-two matrix drawn from the seed.
    fn jacobian_lattice(&self) -> Result<RiemannMatrix> {
        match &self.omega {
            Some(omega) => Ok(omega.clone()),
            None => RiemannMatrix::random(2, &mut self.rng("omega")),
        }
    }

    fn classes(&self, genus: usize, bound: i64) -> Result<Vec<CohomologyClass>> {
        match &self.gamma {
            Some(flat) => {
                let gamma = CohomologyClass::from_flat(flat)?;
                if gamma.genus() != genus {
                    return Err(Error::GenusMismatch {
                        expected: genus,
                        actual: gamma.genus(),
                    });
                }
                Ok(vec![gamma])
            }
            None => Ok(CohomologyClass::box_enumerate(genus, bound)),
        }
    }

    fn describe(&self, suite: &str) -> BTreeMap<String, String> {
        let mut map = BTreeMap::new();
        let mut put = |k: &str, v: String| {
            map.insert(k.to_string(), v);
        };
        put("seed", self.seed().to_string());
        put("samples", self.samples().to_string());
        let uses = |names: &[&str]| names.contains(&suite) || suite == "all";
        if uses(&["elliptic", "jacobian", "connections", "torus"]) {
            put("grid", self.grid().to_string());
            if let Some(m) = self.max_mode {
                put("max_mode", m.to_string());
            }
            if let Some(tau) = self.tau {
                put("tau", format_complex(tau));
            }
            if let Some(g) = &self.gamma {
                put("gamma", g.iter().map(i64::to_string).collect::<Vec<_>>().join(","));
            }
            if let Ok(omega) = self.jacobian_lattice() {
                if uses(&["jacobian", "connections", "torus"]) {
                    put(
                        "omega",
                        omega.omega().transpose().iter().map(|z| format_complex(*z)).collect::<Vec<_>>().join(";"),
                    );
                }
            }
        }
        if let Some(q) = self.q {
            put("q", q.to_string());
        }
        map
    }
}

/// Runs suite `name`. Unknown names are [`Error::UnknownSuite`].
pub fn run_suite(name: &str, params: &SuiteParams) -> Result<SuiteReport> {
    let checks = match name {
        "elliptic" => elliptic_suite(params)?,
        "jacobian" => jacobian_suite(params)?,
        "connections" => connections_suite(params)?,
        "torus" => torus_suite(params)?,
        "finite-hecke" => finite_hecke_suite(params)?,
        "fiber" => fiber_suite(params)?,
        "biject" => biject_suite(params)?,
        "all" => {
            if params.gamma.is_some() {
                return Err(Error::BadFlag("--gamma needs a single suite".into()));
            }
            let mut all = Vec::new();
            for suite in SUITES.iter().filter(|s| **s != "all") {
                let part = if *suite == "elliptic" {
                    elliptic_suite(params)?
                } else {
                    let quiet = SuiteParams {
                        csv: None,
                        ..params.clone()
                    };
                    run_suite(suite, &quiet)?.checks
                };
                all.extend(part.into_iter().map(|c| Check {
                    name: format!("{suite}/{}", c.name),
                    ..c
                }));
            }
            all
        }
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    Ok(SuiteReport::new(name, params.describe(name), checks))
}

fn lattice_tag(lattice: &RiemannMatrix) -> String {
    match lattice.tau() {
        Ok(tau) => format!("tau={}", format_complex(tau)),
        Err(_) => format!("g={}", lattice.genus()),
    }
}

fn write_csv<F>(params: &SuiteParams, write: F) -> Result<()>
where
    F: FnOnce(std::fs::File) -> Result<()>,
{
    if let Some(path) = &params.csv {
        let file = std::fs::File::create(path).map_err(|e| Error::BadFlag(format!("--csv {}: {e}", path.display())))?;
        write(file)?;
    }
    Ok(())
}

fn elliptic_suite(params: &SuiteParams) -> Result<Vec<Check>> {
    let mut rng = params.rng("elliptic");
    let grid = params.grid();
    let max_mode = params.max_mode(3);
    let mut checks = Vec::new();
    let mut rows = Vec::new();
    for lattice in params.elliptic_lattices()? {
        let tag = lattice_tag(&lattice);
        let tau = lattice.tau()?;
        let points: Vec<JacobianPoint> = (0..params.samples()).map(|_| lattice.random_point(&mut rng)).collect();
        let classes = params.classes(1, max_mode)?;
        let (mut eigen_res, mut closed_res) = (0.0f64, 0.0f64);
        for gamma in &classes {
            let (m, n) = (gamma.a[0], gamma.b[0]);
            for p in &points {
                let residual = verify_eigenfunction(gamma, p, &lattice, grid)?;
                let record = hecke_eigenvalue(gamma, p, &lattice)?;
                eigen_res = eigen_res.max(residual);
                closed_res = closed_res.max((record.value - elliptic::eigenvalue(m, n, tau, p.z())).norm());
                rows.push(EigenvalueRow::new(&record, &lattice, residual));
            }
        }
        checks.push(Check::within(format!("eigen-residual {tag}"), 1e-10, eigen_res));
        checks.push(Check::within(format!("closed-form-eigenvalue {tag}"), 1e-12, closed_res));
        checks.push(orthogonality(&lattice, max_mode.min(3), grid, &tag));
    }
    write_csv(params, |f| write_eigenvalue_csv(f, &rows))?;
    Ok(checks)
}

fn orthogonality(lattice: &RiemannMatrix, max_mode: i64, grid: usize, tag: &str) -> Check {
    let name = format!("orthogonality {tag} N={grid}");
    let classes = CohomologyClass::box_enumerate(lattice.genus(), max_mode);
    match gram_matrix(&classes, lattice, grid) {
        Ok(gram) => {
            let k = classes.len();
            let worst = (0..k)
                .flat_map(|i| (0..k).map(move |j| (i, j)))
                .map(|(i, j)| (gram[(i, j)] - if i == j { 1.0 } else { 0.0 }).norm())
                .fold(0.0, f64::max);
            Check::within(name, 1e-12, worst)
        }
        Err(e) => Check::failed(name, &e),
    }
}

fn jacobian_suite(params: &SuiteParams) -> Result<Vec<Check>> {
    let mut rng = params.rng("jacobian");
    let lattice = params.jacobian_lattice()?;
    let g = lattice.genus();
    let max_mode = params.max_mode(if g <= 2 { 3 } else { 1 });
    let classes = params.classes(g, max_mode)?;
    let (mut invariant, mut integrality) = (0.0f64, 0.0f64);
    for gamma in &classes {
        let form = solve_harmonic(gamma, &lattice)?;
        invariant = invariant.max(form.invariant_residual(&lattice));
        for (k, &expected) in gamma.flat().iter().enumerate() {
            let period = period_pairing(&form, &Cycle::basis(g, k), &lattice);
            integrality = integrality.max((period - expected as f64).abs());
        }
    }
    let mut factorization = 0.0f64;
    let mut rows = Vec::new();
    for _ in 0..params.samples() {
        let triple: Vec<JacobianPoint> = (0..3).map(|_| lattice.random_point(&mut rng)).collect();
        for gamma in &classes {
            factorization = factorization.max(symmetric_power_eval(gamma, &triple, &lattice)?.discrepancy());
        }
        let gamma = &classes[rng.gen_range(0..classes.len())];
        let record = hecke_eigenvalue(gamma, &triple[0], &lattice)?;
        rows.push(EigenvalueRow::new(&record, &lattice, verify_eigenfunction(gamma, &triple[0], &lattice, 4)?));
    }
    write_csv(params, |f| write_eigenvalue_csv(f, &rows))?;
    Ok(vec![
        Check::within("harmonic-invariants", 1e-10, invariant),
        Check::within("period-integrality", 1e-10, integrality),
        Check::within("symmetric-power-factorization", 1e-10, factorization),
        orthogonality(&lattice, max_mode.min(3), params.grid(), &format!("g={g}")),
    ])
}

fn connections_suite(params: &SuiteParams) -> Result<Vec<Check>> {
    let mut rng = params.rng("connections");
    let lattices = params.all_lattices()?;
    let mut checks = Vec::new();
    for lattice in &lattices {
        let tag = lattice_tag(lattice);
        let g = lattice.genus();
        let classes = params.classes(g, params.max_mode(if g <= 2 { 5 } else { 2 }))?;
        let points: Vec<JacobianPoint> = (0..params.samples()).map(|_| lattice.random_point(&mut rng)).collect();
        let (mut trivial, mut agree, mut path) = (0.0f64, 0.0f64, 0.0f64);
        for gamma in &classes {
            let conn = connection_from_class(gamma, lattice)?;
            for w in monodromy_generators(&conn, lattice) {
                trivial = trivial.max((w - 1.0).norm());
            }
            let form = solve_harmonic(gamma, lattice)?;
            for p in &points {
                let hol = holonomy(&conn, &TorusPath::from_origin(p.coords.clone()));
                let lambda = crate::complex::unit_phase(line_integral(&form, &p.coords));
                agree = agree.max((hol - lambda).norm());
            }
        }
        // straight lift versus a detour through a second point
        for pair in points.windows(2) {
            let (p, w) = (&pair[0].coords, &pair[1].coords);
            let conn = connection_from_class(&classes[rng.gen_range(0..classes.len())], lattice)?;
            let direct = holonomy(&conn, &TorusPath::from_origin(p.clone()));
            let detour = holonomy(&conn, &TorusPath::from_origin(w.clone())) * holonomy(&conn, &TorusPath::new(w.clone(), p.clone())?);
            path = path.max((direct - detour).norm());
        }
        checks.push(Check::within(format!("trivial-monodromy {tag}"), 1e-10, trivial));
        checks.push(Check::within(format!("holonomy-equals-eigenvalue {tag}"), 1e-12, agree));
        checks.push(Check::within(format!("path-independence {tag}"), 1e-12, path));
    }
    checks.extend(spectrum_checks(params, &mut rng)?);
    Ok(checks)
}

fn spectrum_checks(params: &SuiteParams, rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let square = RiemannMatrix::elliptic(Complex64::new(0.0, 1.0))?;
    let mut worst = 0.0f64;
    let mut mismatched = 0usize;
    for gamma in CohomologyClass::box_enumerate(1, 5) {
        let (m, n) = (gamma.a[0], gamma.b[0]);
        let lambda = torus_oper_from_class(&gamma, &square)?[0];
        let scaled = lambda / PI;
        worst = worst.max((scaled - Complex64::new(n as f64, m as f64)).norm());
        if (scaled.re.round() as i64, scaled.im.round() as i64) != (n, m) {
            mismatched += 1;
        }
        let (lz, _) = diffop_eigenvalues(m, n, square.tau()?)?;
        worst = worst.max((lz - lambda).norm() / PI);
    }
    let scan = spectrum_scan(&square, -2.0 * PI, 2.0 * PI, 41)?;
    let disagreements = scan
        .iter()
        .filter(|oper| {
            let scaled = oper.lambda / PI;
            let on_lattice = (scaled.re - scaled.re.round()).abs() <= 1e-9 && (scaled.im - scaled.im.round()).abs() <= 1e-9;
            split_real_predicate(oper) != on_lattice
        })
        .count();
    let rows: Vec<SpectrumRow> = scan.iter().map(SpectrumRow::new).collect();
    write_csv(params, |f| write_spectrum_csv(f, &rows))?;
    let mut fd = 0.0f64;
    for gamma in CohomologyClass::box_enumerate(1, params.max_mode(3).min(3)) {
        fd = fd.max(finite_difference_check(gamma.a[0], gamma.b[0], square.tau()?, 1e-4, params.samples(), rng)?);
    }
    Ok(vec![
        Check::within("oper-spectrum tau=i", 1e-10, worst),
        Check::equal("oper-spectrum-integer-match tau=i", 0, mismatched),
        Check::equal("split-real-scan-41x41", 0, disagreements),
        Check::within("finite-difference h=1e-4", 1e-6, fd),
    ])
}

fn random_class<R: Rng>(genus: usize, bound: i64, rng: &mut R) -> CohomologyClass {
    let flat: Vec<i64> = (0..2 * genus).map(|_| rng.gen_range(-bound..=bound)).collect();
    CohomologyClass::from_flat(&flat).expect("even length")
}

fn torus_suite(params: &SuiteParams) -> Result<Vec<Check>> {
    let mut rng = params.rng("torus");
    let mut lattices = params.elliptic_lattices()?;
    lattices.push(params.jacobian_lattice()?);
    let tori = [("split", TorusData::split(2)), ("twisted", TorusData::new(vec![vec![2, 1], vec![1, 1]])?)];
    let mut checks = Vec::new();
    for lattice in &lattices {
        let g = lattice.genus();
        let grid = match g {
            1 => params.grid(),
            2 => 16,
            _ => 8,
        };
        for (label, torus) in &tori {
            let tag = format!("{} {label}", lattice_tag(lattice));
            let (mut eigen, mut mono, mut ortho) = (0.0f64, 0.0f64, 0.0f64);
            for _ in 0..params.samples() {
                let gamma = TCohomologyClass::new(vec![random_class(g, 2, &mut rng), random_class(g, 2, &mut rng)])?;
                let mu: Vec<i64> = (0..2).map(|_| rng.gen_range(-2..=2)).collect();
                let p = lattice.random_point(&mut rng);
                let point = BunTPoint {
                    components: vec![lattice.random_point(&mut rng), lattice.random_point(&mut rng)],
                };
                let f = |x: &BunTPoint| t_harmonic_eval(&gamma, x, torus, lattice);
                let shifted = t_hecke_apply(f, &p, &mu, lattice)(&point)?;
                let lambda = t_hecke_eigenvalue(&gamma, &mu, &p, lattice, torus)?;
                eigen = eigen.max((shifted - lambda * t_harmonic_eval(&gamma, &point, torus, lattice)?).norm());
                for w in t_monodromy_generators(&gamma, lattice)?.into_iter().flatten() {
                    mono = mono.max((w - 1.0).norm());
                }
                let small = |rng: &mut ChaCha8Rng| -> Result<TCohomologyClass> {
                    TCohomologyClass::new(vec![random_class(g, 1, rng), random_class(g, 1, rng)])
                };
                let (a, b) = (small(&mut rng)?, small(&mut rng)?);
                let expected = if a == b { 1.0 } else { 0.0 };
                ortho = ortho.max((t_orthogonality_check(&a, &b, torus, lattice, grid)? - expected).norm());
            }
            checks.push(Check::within(format!("t-eigenfunction {tag}"), 1e-10, eigen));
            checks.push(Check::within(format!("t-trivial-monodromy {tag}"), 1e-10, mono));
            checks.push(Check::within(format!("t-orthogonality {tag} N={grid}"), 1e-12, ortho));
        }
    }
    Ok(checks)
}

fn finite_hecke_suite(params: &SuiteParams) -> Result<Vec<Check>> {
    let qs = match params.q {
        Some(q) => vec![q],
        None => vec![2, 3, 5, 7, 11],
    };
    let mut checks = Vec::new();
    for q in qs {
        let report = verify_hecke_relations(PrimeField::new(q)?);
        checks.extend(report.checks.into_iter().map(|c| Check::holds(format!("q={q} {}", c.name), c.pass)));
    }
    Ok(checks)
}

/// The catalogued bundles.
pub fn catalog_examples() -> Vec<(&'static str, BundleDescriptor)> {
    let o = LineBundle::trivial();
    vec![
        ("O(x)⊕O", BundleDescriptor::decomposable(o.twisted(1), o.clone())),
        ("O(2x)⊕O", BundleDescriptor::decomposable(o.twisted(2), o.clone())),
        ("F2(x)", BundleDescriptor::f2_of_x()),
        ("L⊕L(x)", BundleDescriptor::decomposable(LineBundle::new("L", 0), LineBundle::new("L", 0).twisted(1))),
        ("L1⊕L2", BundleDescriptor::decomposable(LineBundle::new("L1", 0), LineBundle::new("L2", 0))),
    ]
}

fn fiber_suite(params: &SuiteParams) -> Result<Vec<Check>> {
    let mut rng = params.rng("fiber");
    let mut checks = Vec::new();
    for (name, m) in catalog_examples() {
        let report = CatalogReport::new(&m)?;
        checks.push(Check::equal(format!("stratum-sum {name}"), "q+1", report.total_check));
    }
    let qs: Vec<u64> = match params.q {
        Some(q) => vec![q],
        None => vec![2, 3, 5, 7, 11],
    };
    let o = LineBundle::trivial();
    let l = LineBundle::new("L", 0);
    let ex1 = BundleDescriptor::decomposable(o.twisted(2), o.clone());
    let ex1_targets = (
        BundleDescriptor::decomposable(o.twisted(1), o.clone()),
        BundleDescriptor::decomposable(o.twisted(2), o.twisted(-1)),
    );
    let ex3 = BundleDescriptor::decomposable(l.clone(), l.twisted(1));
    let ex3_targets = (
        BundleDescriptor::decomposable(l.clone(), l.clone()),
        BundleDescriptor::decomposable(l.twisted(-1), l.twisted(1)),
        BundleDescriptor::IndecomposableF2 { twist: l.clone() },
    );
    for q in qs {
        let mut values = BTreeMap::new();
        for m in [&ex1, &ex3] {
            for s in fiber_catalog(m)? {
                values.entry(s.target).or_insert_with(|| rng.gen_range(-1000..=1000i64));
            }
        }
        let f = |b: &BundleDescriptor| values.get(b).copied().unwrap_or(0);
        let qi = q as i64;
        let got1 = fq_hecke_apply(f, &ex1, q)?;
        let want1 = qi * f(&ex1_targets.0) + f(&ex1_targets.1);
        checks.push(Check::equal(format!("example1-hecke q={q}"), want1, got1));
        let got3 = fq_hecke_apply(f, &ex3, q)?;
        let want3 = f(&ex3_targets.0) + f(&ex3_targets.1) + (qi - 1) * f(&ex3_targets.2);
        checks.push(Check::equal(format!("example3-hecke q={q}"), want3, got3));
    }
    for lattice in params.elliptic_lattices()? {
        let mut odd = 0usize;
        for _ in 0..100 {
            let a = lattice.random_point(&mut rng);
            let minus = JacobianPoint { coords: -&a.coords };
            if !example2_cover(&a, &lattice)?.same_as(&example2_cover(&minus, &lattice)?, &lattice, 1e-10) {
                odd += 1;
            }
        }
        checks.push(Check::equal(format!("example2-cover-even {}", lattice_tag(&lattice)), 0, odd));
    }
    Ok(checks)
}

fn biject_suite(_params: &SuiteParams) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let witness = well_definedness_audit(2, 4, [0, 1])?;
    checks.push(Check::equal("audit (2,4) x in {0,1}", 2, witness.characters.len()));
    let mut violations = 0usize;
    let mut dependent = 0usize;
    for k in -12i64..=12 {
        for l in -12i64..=12 {
            if (k, l) == (0, 0) {
                continue;
            }
            let nf = gcd_normal_form(k, l)?;
            let audit = well_definedness_audit(k, l, 0..=nf.k_prime)?;
            if audit.well_defined != (nf.k_prime == 1) {
                violations += 1;
            }
            let base = complete_to_sl2(nf.alpha, nf.beta)?;
            if (0..=nf.k_prime).any(|x| fixed_variant_from_matrix(&base.family_member(x), nf.k_prime) != fixed_variant_character(k, l)) {
                dependent += 1;
            }
        }
    }
    checks.push(Check::equal("dichotomy |k|,|l|<=12", 0, violations));
    checks.push(Check::equal("fixed-variant completion independence", 0, dependent));
    let reach = reachability_search(40, 6);
    checks.push(Check::holds("fixed-variant unreached element |k|,|l|<=40", !reach.unreached.is_empty()));
    checks.push(Check::holds("fixed-variant collision |k|,|l|<=40", reach.collision.is_some()));
    Ok(checks)
}

/// Exit code for a suite run: 0 pass, 1 fail, 2 for any input error.
pub fn exit_code(result: &Result<SuiteReport>) -> i32 {
    match result {
        Ok(r) if r.overall_pass => 0,
        Ok(_) => 1,
        Err(_) => 2,
    }
}
