//! Verification suites as lists of JSON check records, shared by the `hb1`
//! command-line tool and the tests.

use serde::Serialize;
use serde_json::{json, Value};

use hb1_core::linalg::Mat;
use hb1_core::nichols::{self as core_nichols, DEFAULT_CAP};
use hb1_core::scalar::GaussRat;

use crate::double::{
    are_isomorphic, census, double, iso_rule_instances, template_module, verify_double_presentation, SimpleLabel,
};
use crate::kashina::{build_dual_generators, build_h, verify_automorphisms, verify_dual_generators, verify_h_structure};
use crate::lifting::{
    bosonize, bosonize_fdhopf, degeneration_check, iso_from_witness, lifting, reference_instances, summarize,
    verify_realized, IsoWitness, LiftingError, LiftingSpec, FAMILIES,
};
use crate::nichols::{
    braided_space, claimed_relations, exclusion_witnesses, factorization_table, growth_evidence, nichols_table,
    pair_factorization, quadratic_relations,
};
use crate::yd::{braiding, catalog_yd, verify_braid_equation, verify_catalog, YdError, YdTag};

pub const SUITES: [&str; 8] = ["verify-h", "verify-double", "census", "yd", "nichols", "bosonize", "lift", "all"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A computed fact that supports a claim without certifying it.
    Evidence,
}

impl Status {
    pub fn from_bool(pass: bool) -> Status {
        if pass {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub suite: String,
    pub name: String,
    pub status: Status,
    pub payload: Value,
}

impl CheckRecord {
    pub fn new(suite: &str, name: impl Into<String>, pass: bool, payload: Value) -> CheckRecord {
        CheckRecord { suite: suite.to_string(), name: name.into(), status: Status::from_bool(pass), payload }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error("unknown suite: {0}")]
    UnknownSuite(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Tag(#[from] YdError),
    #[error(transparent)]
    Lifting(#[from] LiftingError),
}

impl ReportError {
    /// Process exit code: 2 for usage errors, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            ReportError::UnknownSuite(_) | ReportError::Usage(_) | ReportError::Tag(_) => 2,
            ReportError::Lifting(LiftingError::UnknownFamily(_) | LiftingError::ShapeMismatch(_)) => 2,
            ReportError::Lifting(_) => 1,
        }
    }
}

/// Options shared by the suites; each suite reads the ones it needs.
#[derive(Debug, Clone, Default)]
pub struct Options {
    pub max_degree: Option<usize>,
    pub cap: Option<usize>,
    pub tag: Option<String>,
    pub left: Option<String>,
    pub right: Option<String>,
    pub family: Option<String>,
    /// Contents of a parameter file: a full spec or just its `params` object.
    pub params: Option<Value>,
    /// Contents of a witness file: `{"tau": k, "images": {...}, "target": spec?}`.
    pub witness: Option<Value>,
}

/// `0` when no record failed, `1` otherwise.
pub fn exit_code(records: &[CheckRecord]) -> i32 {
    i32::from(records.iter().any(|r| r.status == Status::Fail))
}

/// Runs `suite`, optionally restricted to one `action` such as `series` for `nichols`.
pub fn run_suite(suite: &str, action: Option<&str>, opts: &Options) -> Result<Vec<CheckRecord>, ReportError> {
    match (suite, action) {
        ("verify-h", None) => Ok(verify_h()),
        ("verify-double", None) => Ok(verify_double()),
        ("census", None) => Ok(census_records()),
        ("yd", None | Some("verify")) => Ok(yd_verify()),
        ("yd", Some("braiding")) => yd_braiding(opts),
        ("nichols", None) => Ok(nichols_all()),
        ("nichols", Some("series")) => nichols_series(opts),
        ("nichols", Some("relations")) => nichols_relations(opts),
        ("nichols", Some("factorization")) => nichols_factorization(opts),
        ("bosonize", None) => bosonize_records(opts),
        ("lift", None) if opts.family.is_none() && opts.params.is_none() => lift_all(),
        ("lift", None | Some("build")) => lift_build(opts),
        ("lift", Some("verify")) => lift_verify(opts),
        ("lift", Some("degeneration")) => lift_degeneration(opts),
        ("lift", Some("iso")) => lift_iso(opts),
        ("all", None) => {
            let mut out = Vec::new();
            for s in &SUITES[..SUITES.len() - 1] {
                out.extend(run_suite(s, None, &Options::default())?);
            }
            Ok(out)
        }
        (s, Some(a)) if SUITES.contains(&s) => Err(ReportError::Usage(format!("{s} has no action {a}"))),
        (s, _) => Err(ReportError::UnknownSuite(s.to_string())),
    }
}

fn scalar(c: &GaussRat) -> Value {
    Value::String(c.to_canonical())
}

fn matrix(m: &Mat) -> Value {
    Value::Array((0..m.rows()).map(|r| Value::Array((0..m.cols()).map(|c| scalar(&m[(r, c)])).collect())).collect())
}

fn vectors(vs: &[Vec<GaussRat>]) -> Value {
    Value::Array(vs.iter().map(|v| Value::Array(v.iter().map(scalar).collect())).collect())
}

fn require<'a>(v: &'a Option<String>, flag: &str) -> Result<&'a str, ReportError> {
    v.as_deref().ok_or_else(|| ReportError::Usage(format!("--{flag} is required")))
}

fn verify_h() -> Vec<CheckRecord> {
    const S: &str = "verify-h";
    let h = build_h();
    let mut out: Vec<CheckRecord> =
        verify_h_structure(&h).into_iter().map(|c| CheckRecord::new(S, c.name, c.pass, Value::Null)).collect();
    for c in verify_dual_generators(&h.dual(), &build_dual_generators()) {
        out.push(CheckRecord::new(S, format!("dual {}", c.name), c.pass, Value::Null));
    }
    let auts = verify_automorphisms();
    for (k, e) in auts.entries.iter().enumerate() {
        let payload = e.as_ref().map_or(Value::Null, |v| json!({ "violated": v }));
        out.push(CheckRecord::new(S, format!("tau{} is a Hopf automorphism", k + 1), e.is_none(), payload));
    }
    out.push(CheckRecord::new(S, "automorphisms pairwise distinct", auts.pairwise_distinct, Value::Null));
    out.push(CheckRecord::new(S, "automorphisms closed under composition", auts.closed_under_composition, Value::Null));
    out
}

fn verify_double() -> Vec<CheckRecord> {
    const S: &str = "verify-double";
    let d = &double().hopf;
    let mut out: Vec<CheckRecord> = d
        .verify_hopf_axioms()
        .checks
        .iter()
        .map(|c| CheckRecord::new(S, format!("axiom {}", c.name), c.pass, Value::Null))
        .collect();
    out.push(CheckRecord::new(S, "dim 256", d.dim == 256, json!({ "dim": d.dim })));
    for c in verify_double_presentation(d) {
        out.push(CheckRecord::new(S, format!("relation {}", c.name), c.pass, Value::Null));
    }
    for (p, q) in iso_rule_instances() {
        let ok = are_isomorphic(&template_module(p), &template_module(q));
        out.push(CheckRecord::new(S, format!("{p} ~ {q}"), ok, Value::Null));
    }
    out
}

fn census_records() -> Vec<CheckRecord> {
    const S: &str = "census";
    let r = census();
    let mut out: Vec<CheckRecord> = r
        .entries
        .iter()
        .map(|e| {
            let payload = json!({ "dim": e.dim, "character_hash": e.character_hash, "simple": e.simple });
            CheckRecord::new(S, e.label.clone(), e.is_module && e.simple, payload)
        })
        .collect();
    out.push(CheckRecord::new(
        S,
        "summary",
        r.all_pass(),
        json!({
            "count": r.count,
            "one_dim": r.one_dim,
            "two_dim": r.two_dim,
            "sum_of_squares": r.sum_of_squares,
            "pairwise_non_isomorphic": r.pairwise_non_isomorphic,
            "duplicates": r.duplicates,
        }),
    ));
    out
}

fn yd_verify() -> Vec<CheckRecord> {
    const S: &str = "yd";
    let mut out: Vec<CheckRecord> = verify_catalog()
        .into_iter()
        .map(|e| {
            let pass = e.yd && e.braid_equation && e.matches_double;
            CheckRecord::new(S, e.tag.clone(), pass, serde_json::to_value(&e).expect("plain data"))
        })
        .collect();
    for l in SimpleLabel::catalog() {
        if let SimpleLabel::Char { i, j, l: ll, .. } = l {
            let v = catalog_yd(YdTag::Simple(l)).expect("catalog label");
            let c = braiding(&v, &v)[(0, 0)].clone();
            let want = GaussRat::sign(((i + ll) * j) as i64);
            out.push(CheckRecord::new(S, format!("braiding scalar {l}"), c == want, json!({ "value": scalar(&c) })));
        }
    }
    out
}

fn tag_module(name: &str) -> Result<crate::yd::YDModule, ReportError> {
    Ok(catalog_yd(name.parse()?)?)
}

fn yd_braiding(opts: &Options) -> Result<Vec<CheckRecord>, ReportError> {
    let tag = require(&opts.tag, "tag")?;
    let v = tag_module(tag)?;
    let c = braiding(&v, &v);
    Ok(vec![CheckRecord::new(
        "yd",
        format!("braiding {tag}"),
        verify_braid_equation(&v),
        json!({ "dim": v.dim, "braiding": matrix(&c) }),
    )])
}

fn hilbert(v: &crate::yd::YDModule, maxdeg: usize, cap: usize) -> Result<Vec<usize>, ReportError> {
    core_nichols::hilbert_prefix(&braided_space(v), maxdeg, cap)
        .map(|h| h.dims)
        .map_err(|e| ReportError::Usage(e.to_string()))
}

fn nichols_series(opts: &Options) -> Result<Vec<CheckRecord>, ReportError> {
    let tag = require(&opts.tag, "tag")?;
    let v = tag_module(tag)?;
    let maxdeg = opts.max_degree.unwrap_or(4);
    let dims = hilbert(&v, maxdeg, opts.cap.unwrap_or(DEFAULT_CAP))?;
    let terminated = dims.last() == Some(&0);
    let mut r = CheckRecord::new("nichols", format!("series {tag}"), true, json!({ "dims": dims, "max_degree": maxdeg }));
    if !terminated {
        r.status = Status::Evidence;
        r.payload["status"] = json!(format!("NOT CERTIFIED FINITE - evidence: nonzero component at degree {maxdeg}"));
    }
    Ok(vec![r])
}

fn nichols_relations(opts: &Options) -> Result<Vec<CheckRecord>, ReportError> {
    let tag = require(&opts.tag, "tag")?;
    let t: YdTag = tag.parse()?;
    let v = catalog_yd(t)?;
    let rels = quadratic_relations(&v);
    let (pass, claimed) = match t {
        YdTag::M(n) => {
            let c = claimed_relations(n);
            (hb1_core::linalg::same_span(&rels, &c), Some(vectors(&c)))
        }
        _ => (true, None),
    };
    Ok(vec![CheckRecord::new(
        "nichols",
        format!("relations {tag}"),
        pass,
        json!({ "relations": vectors(&rels), "claimed": claimed }),
    )])
}

fn nichols_factorization(opts: &Options) -> Result<Vec<CheckRecord>, ReportError> {
    let (l, r) = (require(&opts.left, "left")?, require(&opts.right, "right")?);
    let (v, w) = (tag_module(l)?, tag_module(r)?);
    let actual = pair_factorization(&v, &w);
    let expected = factorization_table().into_iter().find(|p| (p.left == l && p.right == r) || (p.left == r && p.right == l));
    let pass = expected.as_ref().map_or(true, |p| p.expected == actual);
    Ok(vec![CheckRecord::new(
        "nichols",
        format!("factorization {l} {r}"),
        pass,
        json!({ "factorizes": actual, "expected": expected.map(|p| p.expected) }),
    )])
}

fn nichols_all() -> Vec<CheckRecord> {
    const S: &str = "nichols";
    let mut out = Vec::new();
    for row in nichols_table() {
        let want: &[usize] = if row.tag.starts_with('M') { &[1, 2, 1, 0, 0] } else { &[1, 1, 0, 0] };
        let pass = row.hilbert == want && row.relations_match != Some(false);
        out.push(CheckRecord::new(S, format!("series {}", row.tag), pass, serde_json::to_value(&row).expect("plain data")));
    }
    for row in exclusion_witnesses() {
        let pass = row.witness.is_some();
        out.push(CheckRecord::new(S, format!("witness {}", row.label), pass, serde_json::to_value(&row).expect("plain data")));
    }
    for row in factorization_table() {
        out.push(CheckRecord::new(
            S,
            format!("factorization {} {}", row.left, row.right),
            row.actual == row.expected,
            serde_json::to_value(&row).expect("plain data"),
        ));
    }
    for m in ["M13", "M17"] {
        let g = growth_evidence(m, 4);
        let mut r = CheckRecord::new(S, format!("growth {}", g.module), g.component_dim > 0, serde_json::to_value(&g).expect("plain data"));
        if g.component_dim > 0 {
            r.status = Status::Evidence;
        }
        out.push(r);
    }
    out
}

fn bosonize_records(opts: &Options) -> Result<Vec<CheckRecord>, ReportError> {
    const S: &str = "bosonize";
    if let Some(tag) = opts.tag.as_deref() {
        let b = bosonize(&tag_module(tag)?)?;
        let s = summarize(tag, &b);
        let pass = s.dim == 16 * s.nichols_hilbert.iter().sum::<usize>();
        return Ok(vec![CheckRecord::new(S, tag.to_string(), pass, serde_json::to_value(&s).expect("plain data"))]);
    }
    let h = bosonize_fdhopf(&tag_module("M1")?)?;
    let rep = h.verify_hopf_axioms();
    let failures: Vec<String> = rep.failures().iter().map(|c| c.name.clone()).collect();
    let mut out = vec![CheckRecord::new(
        S,
        "M1",
        h.dim == 64 && h.antipode.is_some() && rep.all_pass(),
        json!({ "dim": h.dim, "antipode": h.antipode.is_some(), "failures": failures }),
    )];
    let l = lifting(&LiftingSpec::new(crate::lifting::Family::Omega25, &[]))?;
    let f = l.hopf.to_fdhopf()?;
    let rep = f.verify_hopf_axioms();
    let failures: Vec<String> = rep.failures().iter().map(|c| c.name.clone()).collect();
    out.push(CheckRecord::new(S, "Omega25", f.dim == 256 && rep.all_pass(), json!({ "dim": f.dim, "failures": failures })));
    Ok(out)
}

/// The spec named by `--family` and `--params`; a parameter file may hold a
/// full spec or only its `params` object.
pub fn spec_from_options(opts: &Options) -> Result<LiftingSpec, ReportError> {
    let mut v = match &opts.params {
        Some(p) if p.get("params").is_some() || p.get("family").is_some() => p.clone(),
        Some(p) => json!({ "params": p }),
        None => json!({}),
    };
    if let Some(f) = &opts.family {
        v["family"] = json!(f);
    }
    if v.get("family").is_none() {
        return Err(ReportError::Usage("--family or a family in --params is required".into()));
    }
    Ok(LiftingSpec::from_json(&v)?)
}

fn lift_build(opts: &Options) -> Result<Vec<CheckRecord>, ReportError> {
    let spec = spec_from_options(opts)?;
    let l = lifting(&spec)?;
    let p = &l.hopf.alg.pres;
    let rules: Vec<String> =
        p.rules.iter().map(|r| format!("{} = {}", p.word_string(&r.lhs), p.lincomb_string(&r.rhs))).collect();
    let dim = l.hopf.dim();
    Ok(vec![CheckRecord::new(
        "lift",
        format!("build {spec}"),
        dim == spec.expected_dim(),
        json!({
            "spec": spec,
            "dim": dim,
            "expected_dim": spec.expected_dim(),
            "letters": l.hopf.yd_letters(),
            "defining_rules": l.defining_rules,
            "derived": l.hopf.derived,
            "rules": rules,
            "warnings": l.warnings,
        }),
    )])
}

fn stage_records(suite: &str, prefix: &str, stages: &[crate::lifting::StageCheck]) -> Vec<CheckRecord> {
    stages
        .iter()
        .map(|s| CheckRecord::new(suite, format!("{prefix} {}", s.stage), s.pass, json!({ "detail": s.detail })))
        .collect()
}

fn lift_verify(opts: &Options) -> Result<Vec<CheckRecord>, ReportError> {
    let spec = spec_from_options(opts)?;
    let r = verify_realized(&lifting(&spec)?);
    Ok(stage_records("lift", &format!("verify {spec}"), &r.stages))
}

fn lift_degeneration(opts: &Options) -> Result<Vec<CheckRecord>, ReportError> {
    let spec = spec_from_options(opts)?;
    let r = degeneration_check(&spec)?;
    Ok(stage_records("lift", &format!("degeneration {}", spec.zero_params()), &r.checks))
}

fn lift_iso(opts: &Options) -> Result<Vec<CheckRecord>, ReportError> {
    let source = spec_from_options(opts)?;
    let w = opts.witness.as_ref().ok_or_else(|| ReportError::Usage("--witness is required".into()))?;
    let witness: IsoWitness =
        serde_json::from_value(w.clone()).map_err(|e| ReportError::Usage(format!("witness file: {e}")))?;
    let target = match w.get("target") {
        Some(t) => LiftingSpec::from_json(t)?,
        None => source.clone(),
    };
    let (a, b) = (lifting(&source)?, lifting(&target)?);
    let verdict = iso_from_witness(&a, &b, &witness)?;
    Ok(vec![CheckRecord::new(
        "lift",
        format!("iso {source} -> {target}"),
        verdict.holds(),
        serde_json::to_value(&verdict).expect("plain data"),
    )])
}

fn default_multiplicities(f: crate::lifting::Family) -> Vec<usize> {
    vec![1; f.multiplicity_len()]
}

fn lift_all() -> Result<Vec<CheckRecord>, ReportError> {
    let mut out = Vec::new();
    for spec in reference_instances() {
        let r = verify_realized(&lifting(&spec)?);
        out.extend(stage_records("lift", &format!("verify {spec}"), &r.stages));
    }
    for &f in FAMILIES.iter() {
        let spec = LiftingSpec::new(f, &default_multiplicities(f));
        let r = degeneration_check(&spec)?;
        out.extend(stage_records("lift", &format!("degeneration {spec}"), &r.checks));
    }
    Ok(out)
}
