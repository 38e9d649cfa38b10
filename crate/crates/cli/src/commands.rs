use std::fmt;

use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::{json, Value};

use parthom_core::poset::{PosetError, PosetView, RankSet, ViewSpec};
use parthom_core::reps::{
    self, int_json, AlphaMethod, BetaMethod, Family, RepsError, Suite, MAX_RECURRENCE_N,
};
use parthom_core::symfunc::{hook_schur, Basis, IntPartition, SymFunc};
use parthom_core::topology::{self, TopologyError};

use crate::expr;
use crate::{CheckArgs, HomologyArgs, ModuleArgs, ReportArgs, SeqArgs, SfArgs, TableArgs};

const MAX_EULER_N: usize = 2000;
const MAX_SIMSUN_N: usize = 1000;
const MAX_BI_N: usize = 60;

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or values outside the supported range.
    Input(String),
    /// A computation produced something inconsistent.
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Failure(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Failure(m) => f.write_str(m),
        }
    }
}

impl From<RepsError> for CliError {
    fn from(e: RepsError) -> Self {
        let msg = e.to_string();
        match e {
            RepsError::Poset(_) | RepsError::OutOfBounds { .. } | RepsError::BadParameter(_) => {
                CliError::Input(msg)
            }
            RepsError::Topology(t) => t.into(),
            RepsError::NotAModule { .. } | RepsError::MethodMismatch { .. } => CliError::Failure(msg),
        }
    }
}

impl From<TopologyError> for CliError {
    fn from(e: TopologyError) -> Self {
        match e {
            TopologyError::Poset(_) | TopologyError::TooManySimplices(_) | TopologyError::NotStable(_) => {
                CliError::Input(e.to_string())
            }
            _ => CliError::Failure(e.to_string()),
        }
    }
}

impl From<PosetError> for CliError {
    fn from(e: PosetError) -> Self {
        CliError::Input(e.to_string())
    }
}

fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

fn bounded(what: &str, value: usize, lo: usize, hi: usize) -> Result<usize, CliError> {
    if (lo..=hi).contains(&value) {
        Ok(value)
    } else {
        Err(input(format!("{what} must lie in {lo}..={hi}, got {value}")))
    }
}

fn required(what: &str, v: Option<usize>) -> Result<usize, CliError> {
    v.ok_or_else(|| input(format!("--{what} is required here")))
}

fn basis(s: &str) -> Result<Basis, CliError> {
    s.parse().map_err(|e: parthom_core::symfunc::SymFuncError| input(e.to_string()))
}

fn ranks(s: &str) -> Result<RankSet, CliError> {
    Ok(s.parse::<RankSet>()?)
}

fn get_usize(p: &Value, key: &str) -> Option<usize> {
    p.get(key).and_then(Value::as_u64).map(|v| v as usize)
}

fn get_str<'a>(p: &'a Value, key: &str) -> &'a str {
    p.get(key).and_then(Value::as_str).unwrap_or_default()
}

fn get_ranks(p: &Value) -> RankSet {
    serde_json::from_value(p["S"].clone()).expect("validated rank set")
}

fn rational_json(q: &BigRational) -> Value {
    if q.is_integer() {
        int_json(&q.to_integer())
    } else {
        Value::from(q.to_string())
    }
}

fn sf_json(f: &SymFunc, b: Basis) -> Value {
    serde_json::to_value(f.convert(b)).expect("symmetric functions serialize")
}

// ---- parameters ------------------------------------------------------------

pub fn sf_params(a: &SfArgs) -> Result<Value, CliError> {
    basis(&a.basis)?;
    if let Some(e) = &a.expr {
        expr::parse(e).map_err(input)?;
        return Ok(json!({ "expr": e.trim(), "basis": a.basis }));
    }
    let family = a.family.as_deref().unwrap_or_default();
    let n = required("n", a.n)?;
    let k = match family {
        "lie" | "r-even" => None,
        "whitehouse" | "hook" => Some(required("k", a.k)?),
        _ => return Err(input(format!("unknown family {family:?}; expected lie, whitehouse, r-even or hook"))),
    };
    bounded("n", n, 1, if family == "r-even" { MAX_RECURRENCE_N / 2 } else { MAX_RECURRENCE_N })?;
    Ok(json!({ "family": family, "n": n, "k": k, "basis": a.basis }))
}

const MULTS: [&str; 3] = ["trivial", "prime", "refl"];

pub fn module_params(a: &ModuleArgs, is_beta: bool) -> Result<Value, CliError> {
    basis(&a.basis)?;
    let s = ranks(&a.ranks)?;
    s.check_fits(a.n)?;
    let method = match (&a.method, is_beta) {
        (None, _) => "recurrence".to_string(),
        (Some(m), false) => m.parse::<AlphaMethod>()?.to_string(),
        (Some(m), true) => m.parse::<BetaMethod>()?.to_string(),
    };
    let mult = match &a.mult {
        None => Value::Null,
        Some(list) => {
            let want: Vec<&str> = list.split(',').map(str::trim).filter(|w| !w.is_empty()).collect();
            if let Some(bad) = want.iter().find(|w| !MULTS.contains(w)) {
                return Err(input(format!("unknown multiplicity {bad:?}; expected trivial, prime or refl")));
            }
            json!(MULTS.iter().filter(|m| want.contains(m)).collect::<Vec<_>>())
        }
    };
    Ok(json!({ "n": a.n, "S": s, "method": method, "mult": mult, "basis": a.basis }))
}

pub fn homology_params(a: &HomologyArgs) -> Result<Value, CliError> {
    let spec: ViewSpec = a.poset.parse()?;
    spec.validate(a.n)?;
    Ok(json!({ "n": a.n, "poset": spec.to_string() }))
}

fn seq_range(family: &str, n: Option<usize>, max_n: Option<usize>) -> Result<(usize, usize), CliError> {
    let (lo, hi) = match family {
        "bS" => (2, MAX_RECURRENCE_N),
        "euler" => (0, MAX_EULER_N),
        "simsun" => (1, MAX_SIMSUN_N),
        "bi" => (2, MAX_BI_N),
        _ => return Err(input(format!("unknown table family {family:?}; expected bS, simsun, bi or euler"))),
    };
    match (n, max_n) {
        (Some(n), None) => Ok((bounded("n", n, lo, hi)?, n)),
        (None, Some(m)) => Ok((lo, bounded("max-n", m, lo, hi)?)),
        _ => Err(input("give exactly one of --n and --max-n")),
    }
}

pub fn table_params(a: &TableArgs) -> Result<Value, CliError> {
    let (from, to) = seq_range(&a.family, a.n, a.max_n)?;
    Ok(json!({ "family": a.family, "from": from, "to": to, "i": null }))
}

pub fn seq_params(name: &str, a: &SeqArgs) -> Result<Value, CliError> {
    let (from, to) = seq_range(name, Some(a.n), None)?;
    if name == "euler" && a.k.is_some() {
        return Err(input("euler takes no --k"));
    }
    Ok(json!({ "family": name, "from": from, "to": to, "i": a.k }))
}

pub fn check_params(a: &CheckArgs) -> Result<Value, CliError> {
    let suite: Suite = a.suite.parse()?;
    bounded("max-n", a.max_n, 2, MAX_BI_N)?;
    Ok(json!({ "suite": suite.to_string(), "max_n": a.max_n }))
}

pub fn report_params(a: &ReportArgs) -> Result<Value, CliError> {
    if a.family == "stability" {
        let s = ranks(&a.ranks)?;
        let max_n = a.max_n.unwrap_or(MAX_RECURRENCE_N);
        return Ok(json!({ "family": "stability", "S": s, "k": a.k.unwrap_or(1), "max_n": max_n }));
    }
    let family: Family = a.family.parse()?;
    Ok(json!({
        "family": serde_json::to_value(family).expect("family serializes"),
        "n": required("n", a.n)?,
        "k": required("k", a.k)?,
    }))
}

// ---- computation -----------------------------------------------------------

pub fn compute(name: &str, p: &Value) -> Result<Value, CliError> {
    match name {
        "sf" => compute_sf(p),
        "alpha" | "beta" => compute_module(name == "beta", p),
        "homology" => compute_homology(p),
        "table" | "euler" | "simsun" | "bi" => compute_rows(p),
        "check" => {
            let suite: Suite = get_str(p, "suite").parse()?;
            let report = reps::conjecture_checks(suite, get_usize(p, "max_n").unwrap_or_default())?;
            Ok(serde_json::to_value(report).expect("reports serialize"))
        }
        "report" => compute_report(p),
        _ => unreachable!("unknown command {name}"),
    }
}

fn describe(f: &SymFunc, b: Basis) -> Value {
    let mut out = json!({
        "sf": sf_json(f, b),
        "schur_positive": f.is_schur_positive(),
        "h_positive": f.is_h_positive(),
    });
    if f.is_homogeneous() {
        out["degree"] = json!(f.max_degree().unwrap_or(0));
        out["dimension"] = rational_json(&f.dimension());
    }
    out
}

fn compute_sf(p: &Value) -> Result<Value, CliError> {
    let b = basis(get_str(p, "basis"))?;
    let f = if let Some(e) = p.get("expr").and_then(Value::as_str) {
        expr::parse(e).map_err(input)?
    } else {
        let n = get_usize(p, "n").unwrap_or_default();
        let k = get_usize(p, "k").unwrap_or_default();
        match get_str(p, "family") {
            "lie" => reps::lie_top_homology(n),
            "whitehouse" => reps::whitehouse(n, k)?,
            "r-even" => reps::r_even(n)?,
            "hook" => hook_schur(n, k).map_err(|e| input(e.to_string()))?,
            other => unreachable!("validated family {other}"),
        }
    };
    let mut out = describe(&f, b);
    out["input"] = p.clone();
    Ok(out)
}

fn compute_module(is_beta: bool, p: &Value) -> Result<Value, CliError> {
    let n = get_usize(p, "n").unwrap_or_default();
    let s = get_ranks(p);
    let b = basis(get_str(p, "basis"))?;
    let method = get_str(p, "method");
    let f = if is_beta {
        reps::beta(n, &s, method.parse()?)?
    } else {
        reps::alpha(n, &s, method.parse()?)?
    };
    let mut out = describe(&f, b);
    out["n"] = json!(n);
    out["S"] = json!(s);
    out["method"] = json!(method);
    if let Some(list) = p["mult"].as_array() {
        let hn = SymFunc::h(n);
        let hn1 = SymFunc::h_partition(&[n - 1, 1]);
        let mut m = serde_json::Map::new();
        for w in list.iter().filter_map(Value::as_str) {
            let v = match w {
                "trivial" => f.inner_product(&hn),
                "prime" => f.inner_product(&hn1),
                _ => BigRational::from_integer(reps::schur_multiplicity(&f, &IntPartition::hook(n, 1))),
            };
            m.insert(w.to_string(), rational_json(&v));
        }
        out["multiplicities"] = Value::Object(m);
        out["row"] = bs_row(n, &s)?;
    }
    Ok(out)
}

fn bs_row(n: usize, s: &RankSet) -> Result<Value, CliError> {
    let m = reps::multiplicities(n, s)?;
    let mut row = serde_json::to_value(&m).expect("multiplicities serialize");
    row["n"] = json!(n);
    row["S"] = json!(s);
    Ok(row)
}

fn compute_homology(p: &Value) -> Result<Value, CliError> {
    let n = get_usize(p, "n").unwrap_or_default();
    let spec: ViewSpec = get_str(p, "poset").parse()?;
    let view = PosetView::new(n, spec.clone())?;
    let cc = topology::order_complex(&view)?;
    let h = topology::homology(&cc);
    let mobius = topology::mobius_number(&view)?;
    let character = if view.is_stable_under_symmetric_group() {
        match topology::concentrated_character_with(&view, &h) {
            Ok((d, chi)) => json!({ "degree": d, "frobenius": sf_json(&chi.frobenius(), Basis::S) }),
            Err(e) => json!({ "unavailable": e.to_string() }),
        }
    } else {
        Value::Null
    };
    Ok(json!({
        "n": n,
        "poset": spec.to_string(),
        "elements": view.len(),
        "f_vector": cc.f_vector(),
        "homology": h,
        "mobius": int_json(&mobius),
        "character": character,
    }))
}

fn compute_rows(p: &Value) -> Result<Value, CliError> {
    let family = get_str(p, "family");
    let from = get_usize(p, "from").unwrap_or_default();
    let to = get_usize(p, "to").unwrap_or_default();
    let only_i = get_usize(p, "i");
    let keep = |i: usize| only_i.is_none_or(|j| j == i);
    let rows: Vec<Value> = match family {
        "bS" => {
            let jobs: Vec<(usize, RankSet)> = (from..=to)
                .flat_map(|n| RankSet::all_for(n).into_iter().map(move |s| (n, s)))
                .collect();
            jobs.par_iter()
                .map(|(n, s)| bs_row(*n, s))
                .collect::<Result<_, _>>()?
        }
        "euler" => (from..=to)
            .map(|n| json!({ "n": n, "value": int_json(&reps::euler_number(n)) }))
            .collect(),
        "simsun" => (from..=to)
            .flat_map(|n| {
                reps::simsun_row(n)
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| keep(*i))
                    .map(move |(i, v)| json!({ "n": n, "i": i, "value": int_json(&v) }))
                    .collect::<Vec<_>>()
            })
            .collect(),
        "bi" => (from..=to)
            .flat_map(|n| {
                (2..=n)
                    .filter(|&i| keep(i))
                    .map(move |i| json!({ "n": n, "i": i, "value": int_json(&reps::bi(i, n)) }))
                    .collect::<Vec<_>>()
            })
            .collect(),
        other => unreachable!("validated family {other}"),
    };
    Ok(json!({ "family": family, "rows": rows }))
}

fn compute_report(p: &Value) -> Result<Value, CliError> {
    let report = if get_str(p, "family") == "stability" {
        let k = get_usize(p, "k").unwrap_or(1);
        reps::stability_report(&get_ranks(p), k, get_usize(p, "max_n").unwrap_or_default())?
    } else {
        let family: Family = get_str(p, "family").parse()?;
        let n = get_usize(p, "n").unwrap_or_default();
        reps::subposet_homology_report(family, n, get_usize(p, "k").unwrap_or_default())?
    };
    Ok(serde_json::to_value(report).expect("reports serialize"))
}

/// For reports with failed assertions: the failures and commands that
/// recompute the offending instances.
pub fn failure_witness(v: &Value) -> Option<Value> {
    let failures: Vec<&Value> = v
        .get("assertions")?
        .as_array()?
        .iter()
        .filter(|a| a["passed"] == Value::Bool(false))
        .collect();
    if failures.is_empty() {
        return None;
    }
    let mut reproduce: Vec<String> = failures
        .iter()
        .filter_map(|a| {
            let w = &a["witness"];
            let n = w.get("n")?.as_u64()?;
            let s: RankSet = serde_json::from_value(w.get("S")?.clone()).ok()?;
            Some(format!(
                "parthom beta --n {n} --ranks {} --mult trivial,prime",
                s.to_list_string()
            ))
        })
        .collect();
    reproduce.dedup();
    Some(json!({
        "kind": v["kind"],
        "inputs": v["inputs"],
        "failed": failures.len(),
        "failures": failures,
        "reproduce": reproduce,
    }))
}

/// Integer column value for tables.
pub fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(a) if a.iter().all(Value::is_u64) => {
            let s: Result<RankSet, _> = serde_json::from_value(v.clone());
            match s {
                Ok(s) => s.to_list_string(),
                Err(_) => v.to_string(),
            }
        }
        other => other.to_string(),
    }
}
