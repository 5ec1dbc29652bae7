//! Exhaustive and seeded checks of the interpolation constructions, plus the
//! corpus-wide suite runner.
//!
//! Every check produces a [`CheckReport`]. The suite also encodes the known
//! counterexamples on the non-distributive poset as expected failures: such a
//! report passes when the underlying check fails with the documented witness.

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::boolean::BooleanAlgebra;
use crate::corpus;
use crate::interp::{
    eval_term, interpolate_boolean_algebra, interpolate_boolean_algebra_sum, interpolate_complemented_poset,
    interpolate_ring, lagrange_field, sdiff_poset, EvalError, InterpError, Interpolant, Model,
    SupportFunction, Value,
};
use crate::poset::{FinitePoset, Property};
use crate::ring::UnitaryRing;
use crate::structure::Structure;
use crate::subset::Subset;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("support size {n} out of range 1..={len}")]
    SupportSize { n: usize, len: usize },
    #[error("invalid suite configuration: {0}")]
    Config(String),
    #[error("{0} requires a bounded poset with a complementation")]
    NeedsComplement(&'static str),
    #[error("{0} requires a poset")]
    NeedsPoset(&'static str),
    #[error(transparent)]
    Interp(#[from] InterpError),
}

/// One compared value inside a check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseResult {
    pub label: String,
    pub expected: String,
    pub got: String,
    pub ok: bool,
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub check: String,
    pub structure: String,
    pub passed: bool,
    pub cases: Vec<CaseResult>,
    pub witness: Option<String>,
    /// `(element, value)` of the interpolant away from its support. Logged,
    /// never asserted.
    pub off_support: Vec<(String, String)>,
    pub elapsed: Duration,
}

impl CheckReport {
    fn new(check: impl Into<String>, structure: &str) -> Self {
        CheckReport {
            check: check.into(),
            structure: structure.to_string(),
            passed: true,
            cases: Vec::new(),
            witness: None,
            off_support: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    fn case(&mut self, label: String, expected: String, got: String, ok: bool) {
        if !ok && self.passed {
            self.passed = false;
            self.witness = Some(format!("{label}={got}, expected {expected}"));
        }
        self.cases.push(CaseResult {
            label,
            expected,
            got,
            ok,
        });
    }

    fn fail(&mut self, witness: String) {
        if self.passed {
            self.passed = false;
            self.witness = Some(witness);
        }
    }

    fn absorb(&mut self, other: CheckReport, context: &str) {
        if !other.passed && self.passed {
            self.passed = false;
            self.witness = other.witness.map(|w| format!("{context}: {w}"));
        }
        self.cases.extend(other.cases);
        self.elapsed += other.elapsed;
    }

    /// Qualified name used in suite output, `structure/check`.
    pub fn id(&self) -> String {
        format!("{}/{}", self.structure, self.check)
    }

    /// `CHECK <name> PASS|FAIL <witness?>`
    pub fn porcelain(&self) -> String {
        match (&self.witness, self.passed) {
            (Some(w), _) => format!("CHECK {} {} {}", self.id(), self.status(), w),
            (None, _) => format!("CHECK {} {}", self.id(), self.status()),
        }
    }

    pub fn status(&self) -> &'static str {
        if self.passed {
            "PASS"
        } else {
            "FAIL"
        }
    }

    fn timed(mut self, start: Instant) -> Self {
        self.elapsed = start.elapsed();
        self
    }
}

fn mix(seed: u64, name: &str, salt: u64) -> u64 {
    // FNV-1a keeps per-structure streams stable across runs and platforms.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325 ^ seed;
    for b in name.bytes().chain(salt.to_le_bytes()) {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

fn draw_support(rng: &mut ChaCha8Rng, names: &[String], n: usize) -> Result<SupportFunction, VerifyError> {
    let len = names.len();
    if n == 0 || n > len {
        return Err(VerifyError::SupportSize { n, len });
    }
    let points = sample(rng, len, n)
        .into_iter()
        .map(|a| (a, rng.gen_range(0..len)))
        .collect();
    Ok(SupportFunction::new(points, names)?)
}

/// `n` distinct points drawn without replacement, values drawn
/// independently; identical for identical seeds.
pub fn random_support(structure: &Structure, n: usize, seed: u64) -> Result<SupportFunction, VerifyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    draw_support(&mut rng, structure.names(), n)
}

/// Interpolation routes tried for a structure.
fn build_routes(structure: &Structure, support: &SupportFunction) -> Result<Vec<(&'static str, Interpolant)>, InterpError> {
    Ok(match structure {
        Structure::Ring(r) => {
            let mut routes = vec![("ring", interpolate_ring(r, support)?)];
            if r.is_field() {
                routes.push(("lagrange", lagrange_field(r, support)?));
            }
            routes
        }
        Structure::Algebra(a) => vec![("algebra", interpolate_boolean_algebra(a, support)?)],
        Structure::Poset(p) => vec![("poset", interpolate_complemented_poset(p, support)?)],
    })
}

fn show(names: &[String], r: &Result<Value, EvalError>) -> String {
    match r {
        Ok(v) => v.display(names).to_string(),
        Err(e) => format!("<{e}>"),
    }
}

fn eval_value(model: Model<'_>, term: &crate::term::Term, x: usize) -> Result<Value, EvalError> {
    eval_term(model, term, x).map(|r| r.value)
}

/// Builds the interpolant and checks `p(a_k) = f(a_k)` on every support point.
pub fn check_interpolation(structure: &Structure, support: &SupportFunction) -> Result<CheckReport, VerifyError> {
    let start = Instant::now();
    let names = structure.names();
    let model = structure.model();
    let mut report = CheckReport::new("interpolation", structure.name());
    let routes = build_routes(structure, support)?;
    for (route, ip) in &routes {
        let tag = if routes.len() > 1 { format!("{route} ") } else { String::new() };
        for &(a, v) in support.points() {
            let got = eval_value(model, &ip.poly, a);
            let ok = matches!(got, Ok(g) if g == Value::Element(v));
            report.case(format!("{tag}p({})", names[a]), names[v].clone(), show(names, &got), ok);
        }
    }
    if let Some((_, ip)) = routes.first() {
        for x in (0..names.len()).filter(|x| !support.points().iter().any(|&(a, _)| a == *x)) {
            report
                .off_support
                .push((names[x].clone(), show(names, &eval_value(model, &ip.poly, x))));
        }
    }
    Ok(report.timed(start))
}

fn unit_values(structure: &Structure) -> (usize, usize) {
    match structure {
        Structure::Ring(r) => (r.zero(), r.one()),
        Structure::Algebra(a) => (a.zero(), a.one()),
        Structure::Poset(p) => (p.bottom().unwrap_or(0), p.top().unwrap_or(0)),
    }
}

/// Checks `p_i(a_k) = δ_ik` for every pair of support indices.
pub fn check_kronecker(structure: &Structure, support: &SupportFunction) -> Result<CheckReport, VerifyError> {
    let start = Instant::now();
    let names = structure.names();
    let model = structure.model();
    let (zero, one) = unit_values(structure);
    let mut report = CheckReport::new("kronecker", structure.name());
    let routes = build_routes(structure, support)?;
    for (route, ip) in &routes {
        let tag = if routes.len() > 1 { format!("{route} ") } else { String::new() };
        for (i, basis) in ip.basis.iter().enumerate() {
            for (k, &(a, _)) in support.points().iter().enumerate() {
                let expected = if i == k { one } else { zero };
                let got = eval_value(model, basis, a);
                let ok = matches!(got, Ok(g) if g == Value::Element(expected));
                report.case(
                    format!("{tag}p_{}({})", i + 1, names[a]),
                    names[expected].clone(),
                    show(names, &got),
                    ok,
                );
            }
        }
    }
    Ok(report.timed(start))
}

fn complemented<'a>(structure: &'a Structure, check: &'static str) -> Result<&'a FinitePoset, VerifyError> {
    let p = structure.poset().ok_or(VerifyError::NeedsPoset(check))?;
    if !p.is_bounded() || p.complement().is_none() {
        return Err(VerifyError::NeedsComplement(check));
    }
    Ok(p)
}

/// `a + b = {0}` exactly when `a = b`, over all pairs.
pub fn check_prop1(structure: &Structure) -> Result<CheckReport, VerifyError> {
    let start = Instant::now();
    let p = complemented(structure, "prop1")?;
    let names = p.names();
    let bottom = Subset::singleton(p.bottom().expect("bounded"));
    let mut report = CheckReport::new("prop1", structure.name());
    for a in 0..p.len() {
        for b in 0..p.len() {
            let sum = sdiff_poset(p, a, b).map_err(|_| VerifyError::NeedsComplement("prop1"))?;
            let is_zero = sum == bottom;
            let ok = is_zero == (a == b);
            let label = format!("{}+{}", names[a], names[b]);
            if !ok {
                let w = if is_zero {
                    format!("{label}={{{}}} but {}≠{}", names[p.bottom().unwrap()], names[a], names[b])
                } else {
                    format!("{label}={} but {}={}", sum.display(names), names[a], names[b])
                };
                report.fail(w);
            }
            report.cases.push(CaseResult {
                label,
                expected: if a == b { "{0}".into() } else { "≠{0}".into() },
                got: sum.display(names).to_string(),
                ok,
            });
        }
    }
    Ok(report.timed(start))
}

const IDENTITIES: [&str; 4] = [
    "L(U(x,y),z) = LU(L(x,z),L(y,z))",
    "UL(U(x,y),z) = U(L(x,z),L(y,z))",
    "U(L(x,y),z) = UL(U(x,z),U(y,z))",
    "LU(L(x,y),z) = L(U(x,z),U(y,z))",
];

fn triple(names: &[String], t: [usize; 3]) -> String {
    format!("({}, {}, {})", names[t[0]], names[t[1]], names[t[2]])
}

/// The poset is distributive: all four cone identities hold on all triples.
pub fn check_distributivity(structure: &Structure) -> Result<CheckReport, VerifyError> {
    let start = Instant::now();
    let p = structure.poset().ok_or(VerifyError::NeedsPoset("distributivity"))?;
    let names = p.names();
    let d = p.distributivity();
    let mut report = CheckReport::new("distributivity", structure.name());
    for (k, ok) in d.per_identity.iter().enumerate() {
        let got = match d.witnesses[k] {
            Some(t) => format!("fails at {}", triple(names, t)),
            None => "holds".into(),
        };
        report.case(IDENTITIES[k].to_string(), "holds".into(), got, *ok);
    }
    if let Some((k, t)) = d.witnesses.iter().enumerate().find_map(|(k, w)| w.map(|t| (k, t))) {
        report.witness = Some(format!("{} fails at {}", IDENTITIES[k], triple(names, t)));
    }
    Ok(report.timed(start))
}

/// The four identities give the same verdict.
pub fn check_distributivity_agreement(structure: &Structure) -> Result<CheckReport, VerifyError> {
    let start = Instant::now();
    let p = structure.poset().ok_or(VerifyError::NeedsPoset("distributivity"))?;
    let d = p.distributivity();
    let mut report = CheckReport::new("distributivity-agreement", structure.name());
    let verdicts: Vec<String> = d.per_identity.iter().map(|b| b.to_string()).collect();
    if !d.identities_agree() {
        report.fail(format!("verdicts {}", verdicts.join(",")));
    }
    report.cases.push(CaseResult {
        label: "verdicts".into(),
        expected: "all equal".into(),
        got: verdicts.join(","),
        ok: d.identities_agree(),
    });
    Ok(report.timed(start))
}

/// Complementation is unique, an involution and antitone.
pub fn check_complement_laws(structure: &Structure) -> Result<CheckReport, VerifyError> {
    let start = Instant::now();
    let p = structure.poset().ok_or(VerifyError::NeedsPoset("complement-laws"))?;
    let names = p.names();
    let mut report = CheckReport::new("complement-laws", structure.name());
    let complements = match p.find_complements() {
        Ok(c) => c,
        Err(e) => {
            report.fail(e.to_string());
            return Ok(report.timed(start));
        }
    };
    let unique = complements.unique_map();
    report.case("unique".into(), "true".into(), unique.is_some().to_string(), unique.is_some());
    if let Some(map) = unique {
        let inv = p.involution_violation(&map);
        report.case(
            "involution".into(),
            "holds".into(),
            inv.map_or("holds".into(), |x| format!("fails at {}", names[x])),
            inv.is_none(),
        );
        let anti = p.antitone_violation(&map);
        report.case(
            "antitone".into(),
            "holds".into(),
            anti.map_or("holds".into(), |(x, y)| format!("fails at {} <= {}", names[x], names[y])),
            anti.is_none(),
        );
    }
    Ok(report.timed(start))
}

/// What a corpus entry is expected to be.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expect {
    Ring,
    Field,
    BooleanAlgebra,
    BooleanPoset,
    /// Bounded and complemented but not distributive.
    ComplementedNonDistributive,
    /// Any poset; only order-level checks run.
    Poset,
}

impl Expect {
    fn label(self) -> &'static str {
        match self {
            Expect::Ring => "ring",
            Expect::Field => "field",
            Expect::BooleanAlgebra => "boolean_algebra",
            Expect::BooleanPoset => "boolean_poset",
            Expect::ComplementedNonDistributive => "complemented non-distributive poset",
            Expect::Poset => "poset",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub structure: Structure,
    pub expect: Expect,
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub corpus: Vec<CorpusEntry>,
    pub trials: usize,
    pub max_support: usize,
    pub seed: u64,
}

impl SuiteConfig {
    /// The bundled corpus: the three figure structures, a few small
    /// non-distributive posets, powerset algebras of 1..4 atoms, `Z_n` for
    /// `n = 2..12` and the 2x2 matrix ring over `Z_2`.
    pub fn default_corpus() -> Vec<CorpusEntry> {
        let mut corpus = Vec::new();
        let file = |name: &str, expect| CorpusEntry {
            structure: corpus::load(name).expect("bundled").promote(),
            expect,
        };
        corpus.push(file("fig1.struct", Expect::BooleanAlgebra));
        corpus.push(file("fig2.struct", Expect::ComplementedNonDistributive));
        corpus.push(file("fig3.struct", Expect::BooleanPoset));
        corpus.push(file("pentagon.struct", Expect::ComplementedNonDistributive));
        corpus.push(file("diamond.struct", Expect::ComplementedNonDistributive));
        corpus.push(file("chain3.struct", Expect::Poset));
        corpus.push(file("crown.struct", Expect::Poset));
        for n in 1..=4 {
            corpus.push(CorpusEntry {
                structure: Structure::Algebra(BooleanAlgebra::powerset(n).expect("small powerset")),
                expect: Expect::BooleanAlgebra,
            });
        }
        for n in 2..=12 {
            let r = UnitaryRing::zmod(n).expect("small zmod");
            let expect = if r.is_field() { Expect::Field } else { Expect::Ring };
            corpus.push(CorpusEntry {
                structure: Structure::Ring(r),
                expect,
            });
        }
        corpus.push(CorpusEntry {
            structure: Structure::Ring(UnitaryRing::matring2()),
            expect: Expect::Ring,
        });
        corpus
    }

    pub fn validate(&self) -> Result<(), VerifyError> {
        if self.trials == 0 {
            return Err(VerifyError::Config("trials must be at least 1".into()));
        }
        if self.max_support == 0 {
            return Err(VerifyError::Config("max support size must be at least 1".into()));
        }
        if self.corpus.is_empty() {
            return Err(VerifyError::Config("corpus is empty".into()));
        }
        Ok(())
    }
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            corpus: Self::default_corpus(),
            trials: 100,
            max_support: 5,
            seed: 42,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub reports: Vec<CheckReport>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn porcelain(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            let _ = writeln!(out, "{}", r.porcelain());
        }
        out
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            let _ = write!(out, "{:<4} {:<40} {:>5} cases", r.status(), r.id(), r.cases.len());
            if let Some(w) = &r.witness {
                let _ = write!(out, "  [{w}]");
            }
            out.push('\n');
        }
        let failed = self.reports.iter().filter(|r| !r.passed).count();
        let _ = writeln!(
            out,
            "{} checks, {} passed, {} failed",
            self.reports.len(),
            self.reports.len() - failed,
            failed
        );
        out
    }

    pub fn get(&self, id: &str) -> Option<&CheckReport> {
        self.reports.iter().find(|r| r.id() == id)
    }
}

fn classification_report(entry: &CorpusEntry) -> CheckReport {
    let start = Instant::now();
    let s = &entry.structure;
    let mut report = CheckReport::new("classify", s.name());
    let names = s.names();
    let missing = |p: &FinitePoset, required: &[Property]| {
        let cls = p.classify();
        match required.iter().find(|&&prop| !cls.flag(prop)) {
            None => Ok(cls),
            Some(&prop) => {
                let w: Vec<&str> = cls
                    .witness(prop)
                    .unwrap_or_default()
                    .iter()
                    .map(|&i| names[i].as_str())
                    .collect();
                Err(format!("not {} ({})", prop.label(), w.join(", ")))
            }
        }
    };
    use Property::*;
    let verdict: Result<(), String> = match (entry.expect, s) {
        (Expect::Ring, Structure::Ring(r)) if !r.is_trivial() => Ok(()),
        (Expect::Field, Structure::Ring(r)) if r.is_field() => Ok(()),
        (Expect::Ring | Expect::Field, Structure::Ring(_)) => Err("ring flags differ from expectation".into()),
        (Expect::Ring | Expect::Field, _) => Err("not a ring".into()),
        (_, Structure::Ring(_)) => Err("expected an ordered structure, got a ring".into()),
        (expect, _) => {
            let p = s.poset().expect("ordered");
            match expect {
                Expect::BooleanAlgebra => missing(p, &[Bounded, Complemented, Distributive, Lattice]).map(drop),
                Expect::BooleanPoset => missing(p, &[Bounded, Complemented, Distributive]).map(drop),
                Expect::ComplementedNonDistributive => match missing(p, &[Bounded, Complemented]) {
                    Ok(cls) if cls.is_distributive => Err("distributive".into()),
                    other => other.map(drop),
                },
                _ => Ok(()),
            }
        }
    };
    if let Err(why) = verdict {
        report.fail(format!("expected {}: {why}", entry.expect.label()));
    }
    report.timed(start)
}

fn is_boolean_poset(s: &Structure) -> bool {
    match s {
        Structure::Algebra(_) => true,
        Structure::Poset(p) => p.complement().is_some() && p.classify().is_boolean_poset,
        Structure::Ring(_) => false,
    }
}

/// Runs `check` over `trials` seeded supports for every size in `sizes`,
/// merging the results into one report named `name`. Sizes beyond the
/// carrier are skipped.
pub fn sweep(
    name: &str,
    structure: &Structure,
    trials: usize,
    sizes: RangeInclusive<usize>,
    seed: u64,
    mut check: impl FnMut(&SupportFunction) -> Result<CheckReport, VerifyError>,
) -> CheckReport {
    let start = Instant::now();
    let names = structure.names();
    let mut report = CheckReport::new(name, structure.name());
    for size in sizes.filter(|&n| n >= 1 && n <= names.len()) {
        let mut rng = ChaCha8Rng::seed_from_u64(mix(seed, structure.name(), size as u64));
        for _ in 0..trials {
            let support = draw_support(&mut rng, names, size).expect("size within carrier");
            match check(&support) {
                Ok(r) => report.absorb(r, &support.display(names)),
                Err(e) => report.fail(format!("{}: {e}", support.display(names))),
            }
        }
    }
    report.timed(start)
}

fn suite_sweep(
    name: &str,
    structure: &Structure,
    config: &SuiteConfig,
    check: impl FnMut(&SupportFunction) -> Result<CheckReport, VerifyError>,
) -> CheckReport {
    sweep(name, structure, config.trials, 1..=config.max_support, config.seed, check)
}

/// Two routes agree on every support point.
fn route_agreement(
    check: &str,
    names: &[String],
    support: &SupportFunction,
    left: (Model<'_>, &Interpolant),
    right: (Model<'_>, &Interpolant),
    structure: &str,
) -> CheckReport {
    let mut report = CheckReport::new(check, structure);
    for &(a, _) in support.points() {
        let l = eval_value(left.0, &left.1.poly, a);
        let r = eval_value(right.0, &right.1.poly, a);
        let ok = matches!((&l, &r), (Ok(x), Ok(y)) if x == y);
        report.case(format!("p({})", names[a]), show(names, &l), show(names, &r), ok);
    }
    report
}

fn algebra_sweeps(a: &BooleanAlgebra, config: &SuiteConfig, out: &mut Vec<CheckReport>) {
    let s = Structure::Algebra(a.clone());
    let names = a.names();
    out.push(suite_sweep("sum-form", &s, config, |support| {
        let join = interpolate_boolean_algebra(a, support)?;
        let sum = interpolate_boolean_algebra_sum(a, support)?;
        Ok(route_agreement("sum-form", names, support, (a.into(), &join), (a.into(), &sum), a.name()))
    }));

    let poset = Structure::Poset(a.poset().clone());
    out.push(suite_sweep("poset-route", &s, config, |support| {
        let mut r = check_interpolation(&poset, support)?;
        r.absorb(check_kronecker(&poset, support)?, "kronecker");
        let alg = interpolate_boolean_algebra(a, support)?;
        let pos = interpolate_complemented_poset(a.poset(), support)?;
        r.absorb(
            route_agreement("agree", names, support, (a.into(), &alg), (a.poset().into(), &pos), a.name()),
            "agreement",
        );
        Ok(r)
    }));

    let ring = a.boolean_ring();
    out.push(suite_sweep("ring-bridge", &s, config, |support| {
        let mut r = CheckReport::new("ring-bridge", a.name());
        r.case(
            "boolean ring".into(),
            "true".into(),
            ring.is_boolean_ring().to_string(),
            ring.is_boolean_ring(),
        );
        let alg = interpolate_boolean_algebra(a, support)?;
        let rp = interpolate_ring(&ring, support)?;
        r.absorb(
            route_agreement("agree", names, support, (a.into(), &alg), ((&ring).into(), &rp), a.name()),
            "agreement",
        );
        Ok(r)
    }));
}

fn index(s: &Structure, name: &str) -> usize {
    s.index_of(name)
        .unwrap_or_else(|| panic!("`{name}` missing from {}", s.name()))
}

fn support_of(s: &Structure, pairs: &[(&str, &str)]) -> SupportFunction {
    let points = pairs.iter().map(|&(a, v)| (index(s, a), index(s, v))).collect();
    SupportFunction::new(points, s.names()).expect("golden supports are valid")
}

fn golden(s: &Structure, out: &mut Vec<CheckReport>) {
    let checked = |check: &str, r: Result<CheckReport, VerifyError>| {
        let mut r = r.unwrap_or_else(|e| {
            let mut f = CheckReport::new(check, s.name());
            f.fail(e.to_string());
            f
        });
        r.check = check.to_string();
        r
    };
    match s.name() {
        "fig1" => {
            let sup = support_of(s, &[("a", "c'"), ("g", "a'"), ("b'", "h"), ("1", "e'")]);
            out.push(checked("golden", check_interpolation(s, &sup)));
        }
        "fig3" => {
            let sup = support_of(s, &[("0", "a"), ("a", "c"), ("b", "d'"), ("c'", "1")]);
            let mut r = checked("golden", check_interpolation(s, &sup));
            if let Ok(k) = check_kronecker(s, &sup) {
                r.absorb(k, "kronecker");
            }
            out.push(r);

            let p = s.poset().expect("poset");
            let mut r = CheckReport::new("golden-sdiff", s.name());
            let expect = Subset::singleton(index(s, "b'")).with(index(s, "c'"));
            match sdiff_poset(p, index(s, "b"), index(s, "c'")) {
                Ok(got) => r.case(
                    "b+cprime".into(),
                    expect.display(p.names()).to_string(),
                    got.display(p.names()).to_string(),
                    got == expect,
                ),
                Err(e) => r.fail(e.to_string()),
            }
            out.push(r);
        }
        "fig2" => fig2_expected_failures(s, out),
        "Z5" => {
            let mut r = CheckReport::new("golden-lagrange", s.name());
            if let Structure::Ring(f) = s {
                let sup = support_of(s, &[("1", "2"), ("2", "4")]);
                match lagrange_field(f, &sup) {
                    Ok(ip) => {
                        for x in 0..5 {
                            let got = eval_value(f.into(), &ip.poly, x);
                            let want = (2 * x) % 5;
                            let ok = matches!(got, Ok(g) if g == Value::Element(want));
                            r.case(format!("p({x})"), want.to_string(), show(f.names(), &got), ok);
                        }
                    }
                    Err(e) => r.fail(e.to_string()),
                }
            }
            out.push(r);
        }
        "Z6" => {
            let sup = support_of(s, &[("2", "3"), ("5", "1")]);
            let mut r = checked("golden", check_interpolation(s, &sup));
            if let Ok(k) = check_kronecker(s, &sup) {
                r.absorb(k, "kronecker");
            }
            out.push(r);
        }
        _ => {}
    }
}

/// The non-distributive poset must fail exactly as documented.
fn fig2_expected_failures(s: &Structure, out: &mut Vec<CheckReport>) {
    let names = s.names();
    let (a, b, c) = (index(s, "a"), index(s, "b"), index(s, "c"));

    let mut r = CheckReport::new("expected-failure-distributivity", s.name());
    let d = s.poset().expect("poset").distributivity();
    match d.witnesses[0] {
        Some(w) if w == [a, b, c] && !d.verdict() => r.witness = Some(format!("witness {}", triple(names, w))),
        other => r.fail(format!("expected witness (a, b, c), got {other:?}")),
    }
    out.push(r);

    let mut r = CheckReport::new("expected-failure-prop1", s.name());
    match check_prop1(s) {
        Ok(p1) if !p1.passed && p1.witness.as_deref() == Some("b+c={0} but b≠c") => r.witness = p1.witness,
        Ok(p1) => r.fail(format!("expected witness b+c={{0}} but b≠c, got {:?}", p1.witness)),
        Err(e) => r.fail(e.to_string()),
    }
    out.push(r);

    let sup = support_of(s, &[("b", "a"), ("c", "d")]);
    let mut r = CheckReport::new("expected-failure-interpolation", s.name());
    match check_interpolation(s, &sup) {
        Ok(ip) if !ip.passed && ip.cases.first().is_some_and(|c| c.label == "p(b)" && c.got == "0") => {
            r.witness = ip.witness
        }
        Ok(ip) => r.fail(format!("expected p(b)={{0}}, got {:?}", ip.cases.first())),
        Err(e) => r.fail(e.to_string()),
    }
    out.push(r);

    let mut r = CheckReport::new("expected-failure-kronecker", s.name());
    match check_kronecker(s, &sup) {
        Ok(k) if !k.passed && k.cases.first().is_some_and(|c| c.label == "p_1(b)" && c.got == "0") => {
            r.witness = k.witness
        }
        Ok(k) => r.fail(format!("expected p_1(b)=0, got {:?}", k.cases.first())),
        Err(e) => r.fail(e.to_string()),
    }
    out.push(r);
}

/// Runs every corpus check. Reports come out in corpus order, then check
/// order, independent of timing.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteOutcome, VerifyError> {
    config.validate()?;
    let mut reports = Vec::new();
    for entry in &config.corpus {
        let s = &entry.structure;
        let cls = classification_report(entry);
        let valid = cls.passed;
        reports.push(cls);

        if s.poset().is_some() {
            reports.push(check_distributivity_agreement(s)?);
        }
        if !valid {
            continue;
        }
        if is_boolean_poset(s) {
            reports.push(check_complement_laws(s)?);
            reports.push(check_prop1(s)?);
        }
        let sweeps = matches!(
            (entry.expect, s),
            (Expect::Ring | Expect::Field, Structure::Ring(_)) | (Expect::BooleanAlgebra | Expect::BooleanPoset, _)
        );
        if sweeps {
            reports.push(suite_sweep("interpolation", s, config, |sup| check_interpolation(s, sup)));
            reports.push(suite_sweep("kronecker", s, config, |sup| check_kronecker(s, sup)));
            if let Structure::Algebra(a) = s {
                algebra_sweeps(a, config, &mut reports);
            }
        }
        golden(s, &mut reports);
    }
    Ok(SuiteOutcome { reports })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_support_is_deterministic() {
        let z6 = Structure::Ring(UnitaryRing::zmod(6).unwrap());
        let a = random_support(&z6, 3, 7).unwrap();
        let b = random_support(&z6, 3, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 3);
        let full = random_support(&z6, 6, 1).unwrap();
        let mut args: Vec<usize> = full.points().iter().map(|p| p.0).collect();
        args.sort();
        assert_eq!(args, (0..6).collect::<Vec<_>>());
        assert_eq!(random_support(&z6, 7, 1).unwrap_err(), VerifyError::SupportSize { n: 7, len: 6 });
        assert_eq!(random_support(&z6, 0, 1).unwrap_err(), VerifyError::SupportSize { n: 0, len: 6 });
    }

    #[test]
    fn z6_kronecker_pattern() {
        let z6 = Structure::Ring(UnitaryRing::zmod(6).unwrap());
        let sup = support_of(&z6, &[("2", "3"), ("5", "1")]);
        let k = check_kronecker(&z6, &sup).unwrap();
        assert!(k.passed);
        let got: Vec<(&str, &str)> = k.cases.iter().map(|c| (c.label.as_str(), c.got.as_str())).collect();
        assert_eq!(got, vec![("p_1(2)", "1"), ("p_1(5)", "0"), ("p_2(2)", "0"), ("p_2(5)", "1")]);
        let ip = check_interpolation(&z6, &sup).unwrap();
        assert!(ip.passed);
        assert!(ip.off_support.contains(&("0".into(), "4".into())));
    }

    #[test]
    fn prop1_verdicts() {
        let fig3 = Structure::Poset(corpus::fig3());
        let r = check_prop1(&fig3).unwrap();
        assert!(r.passed);
        assert_eq!(r.cases.len(), 100);
        let fig2 = Structure::Poset(corpus::fig2());
        let r = check_prop1(&fig2).unwrap();
        assert!(!r.passed);
        assert_eq!(r.witness.as_deref(), Some("b+c={0} but b≠c"));
        let b3 = Structure::Algebra(BooleanAlgebra::powerset(3).unwrap());
        let r = check_prop1(&b3).unwrap();
        assert!(r.passed && r.cases.len() == 64);
    }

    #[test]
    fn fig2_documented_failures() {
        let fig2 = Structure::Poset(corpus::fig2());
        let sup = support_of(&fig2, &[("b", "a"), ("c", "d")]);
        let ip = check_interpolation(&fig2, &sup).unwrap();
        assert!(!ip.passed);
        assert_eq!(ip.witness.as_deref(), Some("p(b)=0, expected a"));
        let k = check_kronecker(&fig2, &sup).unwrap();
        assert!(!k.passed);
        assert_eq!(k.witness.as_deref(), Some("p_1(b)=0, expected 1"));
    }

    #[test]
    fn config_errors() {
        let c = SuiteConfig {
            trials: 0,
            ..SuiteConfig::default()
        };
        assert!(matches!(run_suite(&c), Err(VerifyError::Config(_))));
    }

    #[test]
    fn mislabeled_fig2_fails_classification() {
        let config = SuiteConfig {
            corpus: vec![CorpusEntry {
                structure: Structure::Poset(corpus::fig2()),
                expect: Expect::BooleanPoset,
            }],
            trials: 1,
            max_support: 2,
            seed: 1,
        };
        let out = run_suite(&config).unwrap();
        assert_eq!(out.exit_code(), 1);
        let cls = out.get("fig2/classify").unwrap();
        assert!(!cls.passed);
        assert!(cls.witness.as_deref().unwrap().contains("not distributive (a, b, c)"));
    }

    #[test]
    fn small_suite_is_deterministic() {
        let config = SuiteConfig {
            trials: 3,
            ..SuiteConfig::default()
        };
        let a = run_suite(&config).unwrap();
        let b = run_suite(&config).unwrap();
        assert_eq!(a.porcelain(), b.porcelain());
        assert!(a.passed(), "{}", a.summary());
    }
}
