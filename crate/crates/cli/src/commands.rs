use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use matlock_core::catalog;
use matlock_core::locked::{k_locked_oracle, locked_structure, KLockedVerdict, LockedStructure};
use matlock_core::optimize::{format_rational, greedy_max_basis};
use matlock_core::polytope::{
    certify, predicted_facets_bases, predicted_facets_independence, CertificationReport, LemmaKind,
    LinearConstraint,
};
use matlock_core::uniformity::{is_uniform_direct, test_uniformity};
use matlock_core::{ElementSet, GroundSet, Matroid, MatroidError, MatroidFile, WeightFunction};
use serde_json::{json, Map, Value};

/// Results of one command plus whether it ended in a mismatch.
pub struct Outcome {
    pub inputs: Map<String, Value>,
    pub results: Map<String, Value>,
    pub mismatch: bool,
}

impl Outcome {
    fn new(inputs: Map<String, Value>) -> Self {
        Outcome {
            inputs,
            results: Map::new(),
            mismatch: false,
        }
    }

    fn put(&mut self, key: &str, value: impl Into<Value>) {
        self.results.insert(key.to_string(), value.into());
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Polytope {
    Bases,
    Independence,
}

pub fn load(path: &Path) -> Result<(String, Matroid)> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file =
        MatroidFile::from_json(&text).with_context(|| format!("parsing {}", path.display()))?;
    let m = file
        .to_matroid(true)
        .with_context(|| format!("loading {}", path.display()))?;
    Ok((file.name, m))
}

fn file_inputs(path: &Path, name: &str) -> Map<String, Value> {
    let mut inputs = Map::new();
    inputs.insert("file".into(), json!(path.display().to_string()));
    inputs.insert("name".into(), json!(name));
    inputs
}

fn names(ground: &GroundSet, set: ElementSet) -> Value {
    json!(ground.names(set))
}

fn families(ground: &GroundSet, sets: &[ElementSet]) -> Value {
    Value::Array(sets.iter().map(|&s| names(ground, s)).collect())
}

fn rendered(ground: &GroundSet, constraints: &[LinearConstraint]) -> Value {
    Value::Array(
        constraints
            .iter()
            .map(|c| json!(format!("{}  [{}]", c.render(ground), c.origin.tag())))
            .collect(),
    )
}

pub fn info(path: &Path) -> Result<Outcome> {
    let (name, m) = load(path)?;
    let g = m.ground();
    let mut out = Outcome::new(file_inputs(path, &name));
    out.put("elements", m.len());
    out.put("rank", m.rank_value());
    out.put("bases", m.bases().len());
    out.put("connected", m.is_connected());
    out.put("three_connected", m.is_3_connected());
    out.put("loops", names(g, m.loops()));
    out.put("coloops", names(g, m.coloops()));
    out.put("components", families(g, &m.components()));
    Ok(out)
}

fn put_structure(out: &mut Outcome, m: &Matroid, s: &LockedStructure) {
    let g = m.ground();
    out.put("locked_number", s.locked_number());
    out.put("parallel_classes", families(g, &s.parallel));
    out.put("series_classes", families(g, &s.coparallel));
    let locked = s
        .locked
        .iter()
        .map(|l| json!({ "set": names(g, *l), "rank": s.rho[l] }))
        .collect();
    out.put("locked", Value::Array(locked));
}

pub fn locked(path: &Path, k: Option<u32>) -> Result<Outcome> {
    let (name, m) = load(path)?;
    let mut inputs = file_inputs(path, &name);
    inputs.insert("k".into(), json!(k));
    let mut out = Outcome::new(inputs);
    match k {
        None => put_structure(&mut out, &m, &locked_structure(&m)?),
        Some(k) => match k_locked_oracle(&m, k)? {
            KLockedVerdict::No => out.put("verdict", "No"),
            KLockedVerdict::Structure(s) => {
                out.put("verdict", "Structure");
                put_structure(&mut out, &m, &s);
            }
        },
    }
    Ok(out)
}

pub fn facets(path: &Path, polytope: Polytope) -> Result<Outcome> {
    let (name, m) = load(path)?;
    let mut inputs = file_inputs(path, &name);
    let system = match polytope {
        Polytope::Bases => predicted_facets_bases(&m)?,
        Polytope::Independence => predicted_facets_independence(&m)?,
    };
    inputs.insert(
        "polytope".into(),
        json!(match polytope {
            Polytope::Bases => "bases",
            Polytope::Independence => "independence",
        }),
    );
    let g = m.ground();
    let mut out = Outcome::new(inputs);
    out.put("facet_count", system.facets.len());
    out.put(
        "equality",
        system
            .equality
            .as_ref()
            .map(|e| json!(format!("{}  [{}]", e.render(g), e.origin.tag())))
            .unwrap_or(Value::Null),
    );
    out.put("facets", rendered(g, &system.facets));
    if !system.collapsed.is_empty() {
        out.put("collapsed", rendered(g, &system.collapsed));
    }
    Ok(out)
}

fn put_certification(out: &mut Outcome, m: &Matroid, report: &CertificationReport) {
    let g = m.ground();
    out.put("status", if report.passed { "PASS" } else { "FAIL" });
    out.put("dimension", report.dimension);
    out.put("predicted", report.predicted_count);
    out.put("oracle", report.oracle_count);
    out.put("matched", report.matched);
    for kind in [
        LemmaKind::Locked,
        LemmaKind::ParallelClass,
        LemmaKind::ComplementForm,
        LemmaKind::Unexplained,
    ] {
        let count = report.lemma_cases.iter().filter(|c| c.kind == kind).count();
        let key = match kind {
            LemmaKind::Locked => "rank_facets_locked",
            LemmaKind::ParallelClass => "rank_facets_parallel",
            LemmaKind::ComplementForm => "rank_facets_complement",
            LemmaKind::Unexplained => "rank_facets_unexplained",
        };
        out.put(key, count);
    }
    out.put("missing", rendered(g, &report.missing));
    out.put("extra", rendered(g, &report.extra));
    if !report.invalid.is_empty() {
        out.put("invalid", rendered(g, &report.invalid));
    }
    if !report.duplicates.is_empty() {
        out.put("duplicates", rendered(g, &report.duplicates));
    }
    if !report.collapsed.is_empty() {
        out.put(
            "note",
            "degenerate collapse: inequalities over the whole ground set coincide with the equality",
        );
        out.put("collapsed", rendered(g, &report.collapsed));
    }
}

pub fn certify_file(path: &Path) -> Result<Outcome> {
    let (name, m) = load(path)?;
    let mut out = Outcome::new(file_inputs(path, &name));
    let report = match certify(&m) {
        Ok(report) => report,
        Err(MatroidError::CertificationFailed(report)) => *report,
        Err(e) => return Err(e.into()),
    };
    put_certification(&mut out, &m, &report);
    out.mismatch = !report.passed;
    Ok(out)
}

pub fn mwbp(path: &Path, weights: &str) -> Result<Outcome> {
    let (name, m) = load(path)?;
    let c = WeightFunction::parse(weights).map_err(anyhow::Error::msg)?;
    let mut inputs = file_inputs(path, &name);
    inputs.insert(
        "weights".into(),
        json!(c.values().iter().map(format_rational).collect::<Vec<_>>()),
    );
    let result = greedy_max_basis(&m, &c)?;
    let g = m.ground();
    let mut out = Outcome::new(inputs);
    out.put("basis", names(g, result.basis));
    out.put("value", format_rational(&result.value));
    let trace = result
        .trace
        .iter()
        .map(|s| {
            json!({
                "element": g.label(s.element),
                "weight": format_rational(&s.weight),
                "accepted": s.accepted,
            })
        })
        .collect();
    out.put("trace", Value::Array(trace));
    Ok(out)
}

pub fn uniform(path: &Path) -> Result<Outcome> {
    let (name, m) = load(path)?;
    let verdict = test_uniformity(&m)?;
    let direct = is_uniform_direct(&m);
    let mut out = Outcome::new(file_inputs(path, &name));
    out.put("uniform", verdict.uniform);
    out.put(
        "witness",
        verdict
            .witness
            .map(|w| json!(w.to_string()))
            .unwrap_or(Value::Null),
    );
    if let Some(n) = verdict.inputs {
        out.put("locked_number", n.ell);
        out.put("rank", n.rank);
        out.put("parallel_classes", n.parallel_count);
        out.put("series_classes", n.coparallel_count);
    }
    if let Some(note) = verdict.note {
        out.put("note", note);
    }
    out.put("direct_check", direct);
    out.mismatch = direct != verdict.uniform;
    Ok(out)
}

fn write_matroid(out: &Path, name: &str, m: &Matroid) -> Result<()> {
    fs::write(out, MatroidFile::from_matroid(name, m).to_json() + "\n")
        .with_context(|| format!("writing {}", out.display()))
}

fn summary(out: &mut Outcome, m: &Matroid, path: &Path) {
    out.put("elements", m.len());
    out.put("rank", m.rank_value());
    out.put("bases", m.bases().len());
    out.put("output", path.display().to_string());
}

pub fn two_sum(first: &Path, second: &Path, base: &str, output: &Path) -> Result<Outcome> {
    let Some((p1, p2)) = base.split_once(',') else {
        bail!("--base expects two labels separated by a comma, got {base:?}");
    };
    let (n1, m1) = load(first)?;
    let (n2, m2) = load(second)?;
    let sum = catalog::two_sum(&m1, p1.trim(), &m2, p2.trim())?;
    let name = format!("{n1}+{n2}");
    write_matroid(output, &name, &sum)?;
    let mut inputs = Map::new();
    inputs.insert("first".into(), json!(first.display().to_string()));
    inputs.insert("second".into(), json!(second.display().to_string()));
    inputs.insert("base".into(), json!([p1.trim(), p2.trim()]));
    let mut out = Outcome::new(inputs);
    out.put("name", name);
    summary(&mut out, &sum, output);
    Ok(out)
}

pub fn catalog_entry(name: Option<&str>, output: Option<&Path>) -> Result<Outcome> {
    let mut inputs = Map::new();
    inputs.insert("name".into(), json!(name));
    let mut out = Outcome::new(inputs);
    let Some(name) = name else {
        out.put("names", json!(catalog::STANDARD_NAMES));
        return Ok(out);
    };
    let entry = catalog::get(name)?;
    let Some(path) = output else {
        bail!("catalog {name} needs -o <file>");
    };
    write_matroid(path, &entry.name, &entry.matroid)?;
    out.put(
        "expected_locked_number",
        json!(entry.expected_locked_number),
    );
    summary(&mut out, &entry.matroid, path);
    Ok(out)
}
