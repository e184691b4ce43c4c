//! Case evaluation and corpus sweeps: compute the full invariant record of
//! an algebra, run every applicable bound check, generate random case
//! families, and emit deterministic JSON/CSV reports.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::bounds::{chain_check, verify_local_bounds, BoundCheck, LocalVerdict};
use crate::casefile::{parse_case, CaseFile, ExpectKey};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hilbert::QuotientPresentation;
use crate::monomial::{monomials_of_degree, Monomial, MonomialOrder};
use crate::noether::{noether_position, parameter_degree_with};
use crate::poly::Polynomial;
use crate::resolve::{depth_and_pd, is_cohen_macaulay, ResolveConfig};
use crate::ring::{PolyRing, RingRc};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy)]
pub struct RunConfig {
    pub seed: u64,
    pub trials: usize,
    pub max_rank: usize,
    pub strict: bool,
}

impl Default for RunConfig {
    fn default() -> RunConfig {
        RunConfig { seed: 0, trials: 16, max_rank: 200, strict: false }
    }
}

impl RunConfig {
    pub fn resolve_config(&self) -> ResolveConfig {
        ResolveConfig { max_rank: self.max_rank }
    }
}

/// Invariants of the ambient algebra A.
#[derive(Debug, Clone)]
pub struct AlgebraProfile {
    pub dim: i64,
    pub depth: usize,
    pub pd: usize,
    pub cm: bool,
    pub e: u64,
    pub n_gens: u64,
    pub paramdeg_upper: u64,
}

pub fn profile_algebra(q: &QuotientPresentation, cfg: &RunConfig) -> Result<AlgebraProfile> {
    if q.is_zero_ring() {
        return Err(Error::Input("defining ideal is the whole ring".to_string()));
    }
    let rcfg = cfg.resolve_config();
    let (pd, depth) = depth_and_pd(q, &rcfg)?;
    let dim = q.dimension();
    let e = q.multiplicity()?;
    let nd = noether_position(&q.ideal, cfg.seed)?;
    let n_gens = nd.n_gens() as u64;
    let (paramdeg, _) = parameter_degree_with(q, &nd, cfg.trials, cfg.seed)?;
    Ok(AlgebraProfile {
        dim,
        depth,
        pd,
        cm: depth as i64 == dim,
        e,
        n_gens,
        paramdeg_upper: paramdeg,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseStatus {
    Pass,
    Fail,
    OutOfHypothesis,
}

impl CaseStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseStatus::Pass => "pass",
            CaseStatus::Fail => "fail",
            CaseStatus::OutOfHypothesis => "out_of_hypothesis",
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExpectResult {
    pub key: &'static str,
    pub expected: i64,
    pub actual: i64,
    pub pass: bool,
}

/// Everything computed for one case.
#[derive(Debug, Clone)]
pub struct CaseRecord {
    pub case_id: String,
    pub field: String,
    pub vars: Vec<String>,
    pub order: String,
    pub profile: AlgebraProfile,
    pub height: Option<u64>,
    pub mu: Option<usize>,
    pub tau: Option<usize>,
    pub quotient_cm: Option<bool>,
    pub out_of_hypothesis_reason: Option<String>,
    pub checks: Vec<BoundCheck>,
    pub expects: Vec<ExpectResult>,
    pub status: CaseStatus,
}

pub fn evaluate_case(case: &CaseFile, cfg: &RunConfig) -> Result<CaseRecord> {
    let q = case.quotient()?;
    let rcfg = cfg.resolve_config();
    let profile = profile_algebra(&q, cfg)?;

    let mut checks = Vec::new();
    // the chain data is already in the profile; no need to renormalize
    let chain = crate::noether::InvariantChain {
        e: profile.e,
        paramdeg_upper: profile.paramdeg_upper,
        n_gens: profile.n_gens,
        cm: profile.cm,
        chain_holds: profile.e <= profile.paramdeg_upper && profile.paramdeg_upper <= profile.n_gens,
        cm_equality: profile.e == profile.paramdeg_upper,
    };
    checks.push(chain_check(&chain));

    let mut height = None;
    let mut mu = None;
    let mut tau = None;
    let mut quotient_cm = None;
    let mut ooh_reason: Option<String> = None;

    if let Some(a_gens) = &case.test_ideal {
        match verify_local_bounds(&q, a_gens, profile.n_gens, &rcfg) {
            Ok(LocalVerdict::Checked { height: h, mu: m, tau: t, checks: cs }) => {
                height = Some(h);
                mu = Some(m);
                tau = t;
                quotient_cm = Some(true);
                checks.extend(cs);
            }
            Ok(LocalVerdict::OutOfHypothesis { height: h, reason }) => {
                height = Some(h);
                quotient_cm = Some(false);
                // mu is still well defined and worth reporting
                mu = Some(crate::resolve::mu_in_quotient(&q, a_gens)?);
                ooh_reason = Some(reason);
            }
            Err(Error::Hypothesis(reason)) => {
                height = q.operational_height(a_gens).ok();
                mu = Some(crate::resolve::mu_in_quotient(&q, a_gens)?);
                ooh_reason = Some(reason);
            }
            Err(other) => return Err(other),
        }
    }

    let mut expects = Vec::new();
    for (key, want) in &case.expects {
        let actual: Option<i64> = match key {
            ExpectKey::Dim => Some(profile.dim),
            ExpectKey::Depth => Some(profile.depth as i64),
            ExpectKey::E => Some(profile.e as i64),
            ExpectKey::N => Some(profile.n_gens as i64),
            ExpectKey::Mu => mu.map(|m| m as i64),
            ExpectKey::Type => tau.map(|t| t as i64),
            ExpectKey::Height => height.map(|h| h as i64),
        };
        let actual = actual.ok_or_else(|| {
            Error::Input(format!(
                "expectation `{}` needs a test ideal with applicable hypotheses",
                key.as_str()
            ))
        })?;
        expects.push(ExpectResult { key: key.as_str(), expected: *want, actual, pass: actual == *want });
    }

    let any_fail = checks.iter().any(|c| !c.pass) || expects.iter().any(|e| !e.pass);
    let status = if any_fail {
        CaseStatus::Fail
    } else if ooh_reason.is_some() {
        CaseStatus::OutOfHypothesis
    } else {
        CaseStatus::Pass
    };

    Ok(CaseRecord {
        case_id: case.id.clone(),
        field: case.ring.field.describe(),
        vars: case.ring.var_names().to_vec(),
        order: case.ring.order.describe(),
        profile,
        height,
        mu,
        tau,
        quotient_cm,
        out_of_hypothesis_reason: ooh_reason,
        checks,
        expects,
        status,
    })
}

// ---------------------------------------------------------------------------
// generated corpora

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseKind {
    /// One random homogeneous form: always Cohen-Macaulay.
    Hypersurface,
    /// Random forms cutting the expected dimension: Cohen-Macaulay.
    CompleteIntersection,
    /// Maximal minors of a random (p+1) x p matrix of linear forms in the
    /// polynomial ring; height-two Cohen-Macaulay test ideal with mu = tau+1.
    Determinantal,
    /// Random monomial ideal kept only when the quotient is Cohen-Macaulay.
    MonomialCm,
    /// x * (all variables) and friends: depth 0 < dim, never Cohen-Macaulay,
    /// with the variable ideal as a height-one test ideal.
    NonCm,
    /// Cohen-Macaulay ambient with one generic linear form as a height-one
    /// test ideal.
    Section1,
    /// Cohen-Macaulay ambient with two generic linear forms as a height-two
    /// test ideal.
    Section2,
    /// Cases the bound classifier must refuse: height three, or a non-CM
    /// quotient.
    OutOfHyp,
}

impl CaseKind {
    pub fn parse(s: &str) -> Option<CaseKind> {
        Some(match s {
            "hyp" => CaseKind::Hypersurface,
            "ci" => CaseKind::CompleteIntersection,
            "det" => CaseKind::Determinantal,
            "mono" => CaseKind::MonomialCm,
            "noncm" => CaseKind::NonCm,
            "sec1" => CaseKind::Section1,
            "sec2" => CaseKind::Section2,
            "ooh" => CaseKind::OutOfHyp,
            _ => return None,
        })
    }

    pub fn tag(&self) -> &'static str {
        match self {
            CaseKind::Hypersurface => "hyp",
            CaseKind::CompleteIntersection => "ci",
            CaseKind::Determinantal => "det",
            CaseKind::MonomialCm => "mono",
            CaseKind::NonCm => "noncm",
            CaseKind::Section1 => "sec1",
            CaseKind::Section2 => "sec2",
            CaseKind::OutOfHyp => "ooh",
        }
    }
}

#[derive(Debug, Clone)]
pub struct GeneratorSpec {
    pub entries: Vec<(CaseKind, usize)>,
}

impl GeneratorSpec {
    /// `"ci=10,hyp=5,det=20"`.
    pub fn parse(s: &str) -> Result<GeneratorSpec> {
        let mut entries = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (kind, count) = part
                .split_once('=')
                .ok_or_else(|| Error::Input(format!("bad generator entry `{part}`; use kind=count")))?;
            let kind = CaseKind::parse(kind.trim())
                .ok_or_else(|| Error::Input(format!("unknown case kind `{kind}`")))?;
            let count: usize = count
                .trim()
                .parse()
                .map_err(|_| Error::Input(format!("bad count in `{part}`")))?;
            entries.push((kind, count));
        }
        if entries.is_empty() {
            return Err(Error::Input("empty generator spec".to_string()));
        }
        Ok(GeneratorSpec { entries })
    }
}

const CORPUS_VARS: [&str; 4] = ["x", "y", "z", "w"];

fn corpus_ring(nvars: usize) -> RingRc {
    PolyRing::named(
        Field::prime(32003).expect("32003 is prime"),
        &CORPUS_VARS[..nvars],
        MonomialOrder::DegRevLex,
    )
    .expect("valid corpus ring")
}

fn random_form(ring: &RingRc, degree: u32, rng: &mut ChaCha8Rng) -> Polynomial {
    loop {
        let mut raw: Vec<(crate::field::Scalar, Monomial)> = Vec::new();
        for m in monomials_of_degree(ring.nvars(), degree) {
            if rng.gen_bool(0.7) {
                raw.push((ring.field.random_nonzero(rng), m));
            }
        }
        if let Ok(f) = Polynomial::from_terms(ring, raw) {
            if !f.is_zero() {
                return f;
            }
        }
    }
}

fn random_linear_form(ring: &RingRc, rng: &mut ChaCha8Rng) -> Polynomial {
    random_form(ring, 1, rng)
}

fn case(id: String, ring: &RingRc, defining: Vec<Polynomial>, test: Option<Vec<Polynomial>>) -> CaseFile {
    CaseFile { id, ring: ring.clone(), defining, test_ideal: test, expects: Vec::new() }
}

/// 2x2 or 3x3 minors of a (p+1) x p matrix of linear forms.
fn maximal_minors(ring: &RingRc, mat: &[Vec<Polynomial>]) -> Vec<Polynomial> {
    let rows = mat.len();
    let cols = mat[0].len();
    debug_assert_eq!(rows, cols + 1);
    (0..rows)
        .map(|skip| {
            let sub: Vec<&Vec<Polynomial>> =
                mat.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, r)| r).collect();
            determinant(ring, &sub)
        })
        .collect()
}

fn determinant(ring: &RingRc, m: &[&Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Polynomial::zero(ring);
    for j in 0..n {
        let rest: Vec<&Vec<Polynomial>> = m[1..].to_vec();
        let minor_rows: Vec<Vec<Polynomial>> = rest
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let refs: Vec<&Vec<Polynomial>> = minor_rows.iter().collect();
        let cof = m[0][j].mul(&determinant(ring, &refs));
        acc = if j % 2 == 0 { acc.add(&cof) } else { acc.sub(&cof) };
    }
    acc
}

fn generate_one(kind: CaseKind, idx: usize, rng: &mut ChaCha8Rng, cfg: &RunConfig) -> Result<CaseFile> {
    let rcfg = cfg.resolve_config();
    let id = format!("gen-{}-{:04}", kind.tag(), idx);
    match kind {
        CaseKind::Hypersurface => {
            let n = rng.gen_range(2..=3);
            let ring = corpus_ring(n);
            let d = rng.gen_range(2..=4);
            Ok(case(id, &ring, vec![random_form(&ring, d, rng)], None))
        }
        CaseKind::CompleteIntersection => loop {
            let n = rng.gen_range(3..=4);
            let ring = corpus_ring(n);
            let c = rng.gen_range(2..=(n - 1));
            let gens: Vec<Polynomial> =
                (0..c).map(|_| random_form(&ring, rng.gen_range(2..=3), rng)).collect();
            let q = QuotientPresentation::new(&ring, gens.clone())?;
            if !q.is_zero_ring() && q.dimension() == (n - c) as i64 {
                return Ok(case(id, &ring, gens, None));
            }
        },
        CaseKind::Determinantal => loop {
            let p = rng.gen_range(2..=3);
            let n = rng.gen_range(3..=4);
            let ring = corpus_ring(n);
            let mat: Vec<Vec<Polynomial>> = (0..p + 1)
                .map(|_| (0..p).map(|_| random_linear_form(&ring, rng)).collect())
                .collect();
            let minors = maximal_minors(&ring, &mat);
            if minors.iter().any(|m| m.is_zero()) {
                continue;
            }
            let q = QuotientPresentation::new(&ring, vec![])?;
            let Ok(h) = q.operational_height(&minors) else { continue };
            if h != 2 {
                continue;
            }
            let qa = q.quotient_by_extra(&minors)?;
            if !is_cohen_macaulay(&qa, &rcfg)? {
                continue;
            }
            return Ok(case(id, &ring, vec![], Some(minors)));
        },
        CaseKind::MonomialCm => loop {
            let n = rng.gen_range(2..=3);
            let ring = corpus_ring(n);
            let g = rng.gen_range(2..=4);
            let gens: Vec<Polynomial> = (0..g)
                .map(|_| {
                    let d = rng.gen_range(1..=4);
                    let monos = monomials_of_degree(n, d);
                    let m = monos[rng.gen_range(0..monos.len())].clone();
                    Polynomial::monomial(&ring, m)
                })
                .collect();
            let q = QuotientPresentation::new(&ring, gens.clone())?;
            if q.is_zero_ring() {
                continue;
            }
            if is_cohen_macaulay(&q, &rcfg)? {
                return Ok(case(id, &ring, gens, None));
            }
        },
        CaseKind::NonCm => {
            // x * (x, y, ...) with random exponents: depth 0, dim n-1 > 0
            let n = rng.gen_range(2..=3);
            let ring = corpus_ring(n);
            let a = rng.gen_range(2..=3);
            let b = rng.gen_range(1..=2);
            let mut gens = vec![Polynomial::monomial(&ring, Monomial::var_pow(0, a, n))];
            for v in 1..n {
                let m = Monomial::var(0, n).mul(&Monomial::var_pow(v, b, n));
                gens.push(Polynomial::monomial(&ring, m));
            }
            let test: Vec<Polynomial> = (0..n).map(|v| Polynomial::var(&ring, v)).collect();
            Ok(case(id, &ring, gens, Some(test)))
        }
        CaseKind::Section1 => loop {
            let n = rng.gen_range(2..=3);
            let ring = corpus_ring(n);
            let hyp = vec![random_form(&ring, rng.gen_range(2..=3), rng)];
            let q = QuotientPresentation::new(&ring, hyp.clone())?;
            if q.is_zero_ring() || q.dimension() < 1 {
                continue;
            }
            let form = vec![random_linear_form(&ring, rng)];
            let Ok(h) = q.operational_height(&form) else { continue };
            if h != 1 {
                continue;
            }
            let qa = q.quotient_by_extra(&form)?;
            if !is_cohen_macaulay(&qa, &rcfg)? {
                continue;
            }
            return Ok(case(id, &ring, hyp, Some(form)));
        },
        CaseKind::Section2 => loop {
            let n = rng.gen_range(3..=4);
            let ring = corpus_ring(n);
            let hyp = vec![random_form(&ring, rng.gen_range(2..=3), rng)];
            let q = QuotientPresentation::new(&ring, hyp.clone())?;
            if q.is_zero_ring() || q.dimension() < 2 {
                continue;
            }
            let forms = vec![random_linear_form(&ring, rng), random_linear_form(&ring, rng)];
            let Ok(h) = q.operational_height(&forms) else { continue };
            if h != 2 {
                continue;
            }
            let qa = q.quotient_by_extra(&forms)?;
            if !is_cohen_macaulay(&qa, &rcfg)? {
                continue;
            }
            return Ok(case(id, &ring, hyp, Some(forms)));
        },
        CaseKind::OutOfHyp => {
            if idx % 2 == 0 {
                // height three
                let ring = corpus_ring(4);
                let test: Vec<Polynomial> = (0..3).map(|v| Polynomial::var(&ring, v)).collect();
                Ok(case(id, &ring, vec![], Some(test)))
            } else {
                // non-CM quotient by the test ideal
                let ring = corpus_ring(3);
                let test = vec![
                    Polynomial::monomial(&ring, Monomial::var_pow(0, 2, 3)),
                    Polynomial::monomial(&ring, Monomial::var(0, 3).mul(&Monomial::var(1, 3))),
                ];
                Ok(case(id, &ring, vec![], Some(test)))
            }
        }
    }
}

pub fn generate_cases(spec: &GeneratorSpec, cfg: &RunConfig) -> Result<Vec<CaseFile>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::new();
    for (kind, count) in &spec.entries {
        for i in 0..*count {
            out.push(generate_one(*kind, i, &mut rng, cfg)?);
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// corpus runner and reports

#[derive(Debug, Clone)]
pub enum CorpusSource {
    Directory(PathBuf),
    Generated(GeneratorSpec),
}

#[derive(Debug, Clone)]
pub struct CorpusReport {
    pub cases: Vec<CaseRecord>,
    pub seed: u64,
    pub pass: usize,
    pub fail: usize,
    pub out_of_hypothesis: usize,
}

pub fn load_cases_from_dir(dir: &Path) -> Result<Vec<CaseFile>> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| Error::Input(format!("cannot read corpus directory {}: {e}", dir.display())))?
        .filter_map(|entry| entry.ok().map(|d| d.path()))
        .filter(|p| p.extension().map(|x| x == "case").unwrap_or(false))
        .collect();
    paths.sort();
    let mut out = Vec::new();
    for p in paths {
        let text = std::fs::read_to_string(&p)
            .map_err(|e| Error::Input(format!("cannot read case file {}: {e}", p.display())))?;
        let id = p
            .file_stem()
            .and_then(|s| s.to_str())
            .unwrap_or("case")
            .to_string();
        let parsed = parse_case(&text, &id)
            .map_err(|e| Error::Input(format!("{}: {e}", p.display())))?;
        out.push(parsed);
    }
    Ok(out)
}

pub fn run_corpus(source: &CorpusSource, cfg: &RunConfig) -> Result<CorpusReport> {
    let cases = match source {
        CorpusSource::Directory(dir) => load_cases_from_dir(dir)?,
        CorpusSource::Generated(spec) => generate_cases(spec, cfg)?,
    };
    let mut records = Vec::with_capacity(cases.len());
    for c in &cases {
        let rec = evaluate_case(c, cfg).map_err(|e| match e {
            Error::Input(msg) => Error::Input(format!("case `{}`: {msg}", c.id)),
            other => other,
        })?;
        records.push(rec);
    }
    records.sort_by(|a, b| a.case_id.cmp(&b.case_id));
    let pass = records.iter().filter(|r| r.status == CaseStatus::Pass).count();
    let fail = records.iter().filter(|r| r.status == CaseStatus::Fail).count();
    let ooh = records.iter().filter(|r| r.status == CaseStatus::OutOfHypothesis).count();
    Ok(CorpusReport { cases: records, seed: cfg.seed, pass, fail, out_of_hypothesis: ooh })
}

fn opt_i64(v: Option<i64>) -> Value {
    match v {
        Some(x) => json!(x),
        None => Value::Null,
    }
}

pub fn case_record_json(rec: &CaseRecord, seed: u64) -> Value {
    let mut inv = Map::new();
    inv.insert("N".to_string(), json!(rec.profile.n_gens));
    inv.insert("cm".to_string(), json!(rec.profile.cm));
    inv.insert("depth".to_string(), json!(rec.profile.depth));
    inv.insert("dim".to_string(), json!(rec.profile.dim));
    inv.insert("e".to_string(), json!(rec.profile.e));
    inv.insert("height".to_string(), opt_i64(rec.height.map(|h| h as i64)));
    inv.insert("mu".to_string(), opt_i64(rec.mu.map(|m| m as i64)));
    inv.insert("paramdeg_upper".to_string(), json!(rec.profile.paramdeg_upper));
    inv.insert("pd".to_string(), json!(rec.profile.pd));
    inv.insert(
        "quotient_cm".to_string(),
        rec.quotient_cm.map(|b| json!(b)).unwrap_or(Value::Null),
    );
    inv.insert("tau".to_string(), opt_i64(rec.tau.map(|t| t as i64)));

    let checks: Vec<Value> = rec
        .checks
        .iter()
        .map(|c| {
            json!({
                "lhs": c.lhs,
                "name": c.name.as_str(),
                "pass": c.pass,
                "rhs": c.rhs,
            })
        })
        .collect();
    let expects: Vec<Value> = rec
        .expects
        .iter()
        .map(|e| {
            json!({
                "actual": e.actual,
                "expected": e.expected,
                "key": e.key,
                "pass": e.pass,
            })
        })
        .collect();

    json!({
        "case_id": rec.case_id,
        "checks": checks,
        "expects": expects,
        "invariants": Value::Object(inv),
        "out_of_hypothesis_reason": rec.out_of_hypothesis_reason.clone().map(Value::String).unwrap_or(Value::Null),
        "ring": {
            "field": rec.field,
            "order": rec.order,
            "vars": rec.vars,
        },
        "seed": seed,
        "status": rec.status.as_str(),
        "version": VERSION,
    })
}

pub fn report_json(report: &CorpusReport) -> Value {
    let cases: Vec<Value> = report.cases.iter().map(|r| case_record_json(r, report.seed)).collect();
    json!({
        "cases": cases,
        "seed": report.seed,
        "summary": {
            "fail": report.fail,
            "out_of_hypothesis": report.out_of_hypothesis,
            "pass": report.pass,
            "total": report.cases.len(),
        },
        "version": VERSION,
    })
}

/// serde_json maps are ordered, so this string is byte-identical across runs
/// with the same seed.
pub fn report_json_string(report: &CorpusReport) -> String {
    let mut s = serde_json::to_string_pretty(&report_json(report)).expect("serializable");
    s.push('\n');
    s
}

const CSV_HEADER: &str = "case_id,status,field,order,vars,dim,depth,pd,cm,e,N,paramdeg_upper,height,mu,quotient_cm,tau,check_name,lhs,rhs,pass";

fn csv_opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(|x| x.to_string()).unwrap_or_default()
}

pub fn report_csv(report: &CorpusReport) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for rec in &report.cases {
        let base = format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            rec.case_id,
            rec.status.as_str(),
            rec.field,
            rec.order,
            rec.vars.join(" "),
            rec.profile.dim,
            rec.profile.depth,
            rec.profile.pd,
            rec.profile.cm,
            rec.profile.e,
            rec.profile.n_gens,
            rec.profile.paramdeg_upper,
            csv_opt(&rec.height),
            csv_opt(&rec.mu),
            csv_opt(&rec.quotient_cm),
            csv_opt(&rec.tau),
        );
        if rec.checks.is_empty() {
            out.push_str(&base);
            out.push_str(",,,,\n");
        } else {
            for c in &rec.checks {
                out.push_str(&format!("{base},{},{},{},{}\n", c.name.as_str(), c.lhs, c.rhs, c.pass));
            }
        }
    }
    out
}

/// Deterministic one-case JSON for the single-case subcommands.
pub fn single_case_json(rec: &CaseRecord, seed: u64) -> String {
    let mut s = serde_json::to_string_pretty(&case_record_json(rec, seed)).expect("serializable");
    s.push('\n');
    s
}

// keep BTreeMap in the public signature surface for deterministic extension
pub type SortedMap = BTreeMap<String, Value>;
