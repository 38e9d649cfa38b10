use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::poset::{PosetView, RankSet, ViewSpec};
use crate::symfunc::{Basis, IntPartition, SymFunc};
use crate::topology::{concentrated_character_with, homology, order_complex};

use super::modules::{alpha, beta, schur_multiplicity, trivial_multiplicities, whitehouse};
use super::modules::{AlphaMethod, BetaMethod};
use super::sequences::{bi, simsun};
use super::{int_json, multiplicities, RepsError, MAX_RECURRENCE_N};

/// One checked statement and the data behind the verdict.
#[derive(Clone, Debug, Serialize)]
pub struct Assertion {
    pub name: String,
    pub passed: bool,
    pub witness: Value,
}

/// Outcome of a report or check suite. `observations` are recorded verdicts
/// that do not count towards [`Report::passed`].
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub kind: String,
    pub inputs: Value,
    pub methods: Vec<String>,
    pub results: Value,
    pub assertions: Vec<Assertion>,
    pub observations: Vec<Assertion>,
}

impl Report {
    fn new(kind: &str, inputs: Value, methods: &[&str]) -> Self {
        Report {
            kind: kind.to_string(),
            inputs,
            methods: methods.iter().map(|m| m.to_string()).collect(),
            results: json!({}),
            assertions: Vec::new(),
            observations: Vec::new(),
        }
    }

    fn check(&mut self, name: impl Into<String>, passed: bool, witness: Value) {
        self.assertions.push(Assertion {
            name: name.into(),
            passed,
            witness,
        });
    }

    fn observe(&mut self, name: impl Into<String>, passed: bool, witness: Value) {
        self.observations.push(Assertion {
            name: name.into(),
            passed,
            witness,
        });
    }

    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Assertion> {
        self.assertions.iter().filter(|a| !a.passed)
    }
}

struct Tracked {
    name: &'static str,
    bound: usize,
    values: Vec<(usize, BigInt)>,
}

impl Tracked {
    fn new(name: &'static str, bound: usize) -> Self {
        Tracked {
            name,
            bound,
            values: Vec::new(),
        }
    }

    /// Smallest `n` in the window from which the sequence is constant.
    fn onset(&self) -> Option<usize> {
        let (_, last) = self.values.last()?;
        let mut onset = self.values.last()?.0;
        for (n, v) in self.values.iter().rev() {
            if v != last {
                break;
            }
            onset = *n;
        }
        Some(onset)
    }

    fn stable_from_bound(&self) -> bool {
        let mut tail = self.values.iter().filter(|(n, _)| *n >= self.bound);
        match tail.next() {
            None => true,
            Some((_, first)) => tail.all(|(_, v)| v == first),
        }
    }

    fn value_at(&self, n: usize) -> Option<&BigInt> {
        self.values.iter().find(|(m, _)| *m == n).map(|(_, v)| v)
    }

    fn witness(&self) -> Value {
        json!({
            "bound": self.bound,
            "onset": self.onset(),
            "tested_beyond_bound": self.values.iter().filter(|(n, _)| *n > self.bound).count(),
            "values": self.values.iter().map(|(n, v)| json!([n, int_json(v)])).collect::<Vec<_>>(),
        })
    }
}

fn b_at(n: usize, s: &RankSet) -> Result<BigInt, RepsError> {
    Ok(multiplicities(n, s)?.b)
}

fn a_at(n: usize, s: &RankSet) -> Result<BigInt, RepsError> {
    Ok(multiplicities(n, s)?.a)
}

/// First `n` from which `a_X(n)` and `b_X(n)` are expected to be constant.
fn stable_point(x: &RankSet) -> usize {
    let m = x.max().unwrap_or(0);
    (2 * m).max(m + 2).max(2)
}

fn two_row(n: usize, k: usize) -> Option<IntPartition> {
    (n >= 2 * k).then(|| IntPartition::new(vec![n - k, k]))
}

fn hook(n: usize, k: usize) -> Option<IntPartition> {
    (k < n).then(|| IntPartition::hook(n, k))
}

/// Multiplicities of `α_S(n)` and `β_S(n)` as `n` grows with `S` fixed, the
/// onset of stabilisation of each, and the identities linking the
/// multiplicities for `S` to those of shifted rank sets.
pub fn stability_report(s: &RankSet, k: usize, n_max: usize) -> Result<Report, RepsError> {
    let Some(m) = s.max() else {
        return Err(RepsError::BadParameter("stability needs a nonempty rank set".into()));
    };
    if n_max > MAX_RECURRENCE_N {
        return Err(RepsError::OutOfBounds {
            what: "stability window end",
            value: n_max,
            max: MAX_RECURRENCE_N,
        });
    }
    let lo = m + 2;
    if n_max < lo {
        return Err(RepsError::BadParameter(format!("{s} does not fit inside Π_{n_max}")));
    }
    let mut report = Report::new(
        "stability",
        json!({ "S": s, "k": k, "n_min": lo, "n_max": n_max }),
        &["recurrence"],
    );

    let mut a = Tracked::new("a", 2 * m);
    let mut a_prime = Tracked::new("a_prime", 2 * m + 1);
    let mut b = Tracked::new("b", 2 * m);
    let mut b_prime = Tracked::new("b_prime", 2 * m + 1);
    let mut alpha_two = Tracked::new("alpha_two_row", 2 * m + k);
    let mut beta_two = Tracked::new("beta_two_row", 2 * m + k);
    let mut alpha_hook = Tracked::new("alpha_hook", 2 * m + k);
    let mut beta_hook = Tracked::new("beta_hook", 2 * m + k);
    let mut alpha_refl = Tracked::new("alpha_reflection", 2 * m + 1);
    let mut beta_refl = Tracked::new("beta_reflection", 2 * m + 1);

    for n in lo..=n_max {
        let al = alpha(n, s, AlphaMethod::Recurrence)?;
        let be = beta(n, s, BetaMethod::Recurrence)?;
        let (va, va1) = trivial_multiplicities(&al, n);
        let (vb, vb1) = trivial_multiplicities(&be, n);
        a.values.push((n, va));
        a_prime.values.push((n, va1));
        b.values.push((n, vb));
        b_prime.values.push((n, vb1));
        if let Some(l) = two_row(n, k) {
            alpha_two.values.push((n, schur_multiplicity(&al, &l)));
            beta_two.values.push((n, schur_multiplicity(&be, &l)));
        }
        if let Some(l) = hook(n, k) {
            alpha_hook.values.push((n, schur_multiplicity(&al, &l)));
            beta_hook.values.push((n, schur_multiplicity(&be, &l)));
        }
        let refl = IntPartition::hook(n, 1);
        alpha_refl.values.push((n, schur_multiplicity(&al, &refl)));
        beta_refl.values.push((n, schur_multiplicity(&be, &refl)));
    }

    let tracked = [
        &a, &a_prime, &b, &b_prime, &alpha_two, &beta_two, &alpha_hook, &beta_hook, &alpha_refl,
        &beta_refl,
    ];
    let mut results = serde_json::Map::new();
    for t in tracked {
        results.insert(t.name.to_string(), t.witness());
        report.check(format!("stable:{}", t.name), t.stable_from_bound(), t.witness());
    }

    // a_{{1} ∪ (S+1)}(n+1) = a'_S(n)
    let lifted = s.shift_up(1).with(1);
    for n in lo..n_max {
        let lhs = a_at(n + 1, &lifted)?;
        let rhs = a_prime.value_at(n).expect("computed above").clone();
        report.check(
            "lift:a",
            lhs == rhs,
            json!({ "n": n, "a_lifted(n+1)": int_json(&lhs), "a_prime(n)": int_json(&rhs) }),
        );
    }
    // b'_S(n) = b_{(S+1) ∪ {1}}(n+1) + b_{S+1}(n+1)
    let shifted = s.shift_up(1);
    for n in lo..n_max {
        let lhs = b_prime.value_at(n).expect("computed above").clone();
        let r1 = b_at(n + 1, &lifted)?;
        let r2 = b_at(n + 1, &shifted)?;
        report.check(
            "lift:b_prime",
            lhs == &r1 + &r2,
            json!({
                "n": n,
                "b_prime(n)": int_json(&lhs),
                "b_lifted(n+1)": int_json(&r1),
                "b_shifted(n+1)": int_json(&r2),
            }),
        );
    }
    // b_{S'∪{1}}(n) + b_{S'}(n) = b'_{S'-1}(n-1), S' = S \ {1}
    let s_prime = s.without(1);
    if let Some(down) = s_prime.shift_down(1) {
        for n in lo.max(3)..=n_max {
            if down.check_fits(n - 1).is_err() {
                continue;
            }
            let l1 = b_at(n, &s_prime.with(1))?;
            let l2 = b_at(n, &s_prime)?;
            let r = multiplicities(n - 1, &down)?.b_prime;
            report.check(
                "bridge",
                &l1 + &l2 == r,
                json!({
                    "n": n,
                    "S'": s_prime,
                    "b_{S'∪{1}}(n)": int_json(&l1),
                    "b_{S'}(n)": int_json(&l2),
                    "b'_{S'-1}(n-1)": int_json(&r),
                }),
            );
        }
    }

    // stable reflection multiplicities from stable trivial multiplicities
    let bar_a = |x: &RankSet| a_at(stable_point(x), x);
    let bar_b = |x: &RankSet| b_at(stable_point(x), x);
    let want_alpha = bar_a(&lifted)? - bar_a(s)?;
    let want_beta = bar_b(&lifted)? + bar_b(&shifted)? - bar_b(s)?;
    for (t, want) in [(&alpha_refl, &want_alpha), (&beta_refl, &want_beta)] {
        let tail: Vec<_> = t.values.iter().filter(|(n, _)| *n >= t.bound).collect();
        report.check(
            format!("stable_value:{}", t.name),
            tail.iter().all(|(_, v)| v == want),
            json!({ "predicted": int_json(want), "values": t.witness()["values"] }),
        );
    }
    results.insert("predicted_alpha_reflection".into(), int_json(&want_alpha));
    results.insert("predicted_beta_reflection".into(), int_json(&want_beta));
    report.results = Value::Object(results);
    Ok(report)
}

/// Named check suites over ranges of `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// `b_i(n) <= a_i(2n)`.
    EvenBound,
    /// `h`-positivity of the homology of the top even ranks.
    EvenTopHPositive,
    HhNonvanishing,
    HhBPrime,
    HhVanishing,
    /// All three rank-selection suites.
    Hh,
}

impl FromStr for Suite {
    type Err = RepsError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "even-bound" | "conj-3.9" => Ok(Suite::EvenBound),
            "even-top-h-positive" | "conj-3.7" => Ok(Suite::EvenTopHPositive),
            "hh-nonvanishing" => Ok(Suite::HhNonvanishing),
            "hh-b-prime" => Ok(Suite::HhBPrime),
            "hh-vanishing" => Ok(Suite::HhVanishing),
            "hh" => Ok(Suite::Hh),
            _ => Err(RepsError::BadParameter(format!("unknown suite {s:?}"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::EvenBound => "even-bound",
            Suite::EvenTopHPositive => "even-top-h-positive",
            Suite::HhNonvanishing => "hh-nonvanishing",
            Suite::HhBPrime => "hh-b-prime",
            Suite::HhVanishing => "hh-vanishing",
            Suite::Hh => "hh",
        })
    }
}

/// Length of the initial run `1, 2, ..., r` of `S`.
fn initial_run(s: &RankSet) -> usize {
    s.ranks().iter().enumerate().take_while(|(i, &r)| r == i + 1).count()
}

fn binom2(r: usize) -> usize {
    (r + 2) * (r + 1) / 2
}

/// The vanishing statements for `b_S(n)` that apply to `S`, by label.
fn vanishing_reasons(n: usize, s: &RankSet) -> Vec<&'static str> {
    let mut why = Vec::new();
    let r = initial_run(s);
    if !s.is_empty() && r == s.len() {
        why.push("initial-interval");
    }
    let half = (n + 1) / 2;
    if half >= 1 && r >= half {
        why.push("contains-lower-half");
    }
    if r >= 1 && s.len() == r + 1 {
        let a = s.max().expect("nonempty");
        if a > r && !(binom2(r) <= a && a + r < n) {
            why.push("interval-plus-point");
        }
    }
    if interval_minus_point(n, s).is_some_and(|(r, k)| 2 * k > r) {
        why.push("interval-minus-point");
    }
    why
}

/// `(r, k)` with `S = [1, r] \ {k}`, `2 <= r <= n-2`, `1 <= k <= r`.
fn interval_minus_point(n: usize, s: &RankSet) -> Option<(usize, usize)> {
    (2..=n.saturating_sub(2)).find_map(|r| {
        (1..=r)
            .find(|&k| *s == RankSet::interval(1, r).without(k))
            .map(|k| (r, k))
    })
}

/// The nonvanishing statements for `b_S(n)` that apply to `S`.
fn nonvanishing_reasons(s: &RankSet) -> Vec<&'static str> {
    let mut why = Vec::new();
    if !s.contains(1) {
        why.push("one-not-in-S");
    }
    let r = initial_run(s);
    if r >= 1 && s.len() - r >= r {
        why.push("interval-plus-sparse-tail");
    }
    why
}

/// Runs a check suite for every `n <= n_max` and lists each instance checked.
pub fn conjecture_checks(suite: Suite, n_max: usize) -> Result<Report, RepsError> {
    let mut report = Report::new(
        "check",
        json!({ "suite": suite.to_string(), "max_n": n_max }),
        &["recurrence"],
    );
    match suite {
        Suite::EvenBound => {
            for n in 2..=n_max {
                for i in 2..=n {
                    let (b, a) = (bi(i, n), simsun(i, 2 * n));
                    report.check(
                        "b_i(n) <= a_i(2n)",
                        b <= a,
                        json!({ "i": i, "n": n, "b_i(n)": int_json(&b), "a_i(2n)": int_json(&a) }),
                    );
                }
            }
        }
        Suite::EvenTopHPositive => {
            if 2 * n_max > MAX_RECURRENCE_N {
                return Err(RepsError::OutOfBounds {
                    what: "even-block size 2n",
                    value: 2 * n_max,
                    max: MAX_RECURRENCE_N,
                });
            }
            for n in 2..=n_max {
                for k in 1..n {
                    let ranks = RankSet::new((n - k..n).map(|j| 2 * j).collect())?;
                    let f = beta(2 * n, &ranks, BetaMethod::Recurrence)?;
                    let cert = f.positivity(Basis::H);
                    report.observe(
                        "h-positive",
                        cert.positive,
                        json!({ "2n": 2 * n, "k": k, "S": ranks, "certificate": cert }),
                    );
                }
            }
        }
        Suite::HhNonvanishing | Suite::HhBPrime | Suite::HhVanishing | Suite::Hh => {
            let want = |x: Suite| suite == x || suite == Suite::Hh;
            for n in 2..=n_max {
                for s in RankSet::all_for(n) {
                    let mult = multiplicities(n, &s)?;
                    let w = json!({
                        "n": n,
                        "S": s,
                        "b": int_json(&mult.b),
                        "b_prime": int_json(&mult.b_prime),
                    });
                    if want(Suite::HhNonvanishing) {
                        for why in nonvanishing_reasons(&s) {
                            report.check(format!("nonvanishing:{why}"), !mult.b.is_zero(), w.clone());
                        }
                    }
                    if want(Suite::HhBPrime) {
                        let passed = if s.is_initial_interval() {
                            mult.b_prime.is_one()
                        } else {
                            mult.b_prime > BigInt::one()
                        };
                        report.check("b_prime", passed, w.clone());
                    }
                    if want(Suite::HhVanishing) {
                        for why in vanishing_reasons(n, &s) {
                            report.check(format!("vanishing:{why}"), mult.b.is_zero(), w.clone());
                        }
                        if interval_minus_point(n, &s).is_some_and(|(r, k)| 2 * k > r + 1) {
                            report.observe("vanishing:interval-minus-point-sharp", mult.b.is_zero(), w.clone());
                        }
                    }
                }
            }
        }
    }
    let checked = report.assertions.len() + report.observations.len();
    let failed = report.failures().count() + report.observations.iter().filter(|a| !a.passed).count();
    report.results = json!({ "instances": checked, "failed": failed });
    Ok(report)
}

/// Families of subposets whose homology is compared with Whitehouse modules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Qnk,
    Pnk,
    Le,
    Ne,
}

impl FromStr for Family {
    type Err = RepsError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "qnk" => Ok(Family::Qnk),
            "pnk" => Ok(Family::Pnk),
            "le" => Ok(Family::Le),
            "ne" => Ok(Family::Ne),
            _ => Err(RepsError::BadParameter(format!("unknown family {s:?}"))),
        }
    }
}

impl Family {
    fn spec(self, k: usize) -> ViewSpec {
        match self {
            Family::Qnk => ViewSpec::Qnk(k),
            Family::Pnk => ViewSpec::Pnk(k),
            Family::Le => ViewSpec::BlockSizeAtMost(k),
            Family::Ne => ViewSpec::BlockSizeNot(k),
        }
    }
}

enum Prediction {
    Module { degree: isize, module: SymFunc },
    Concentrated { degree: isize, rank: Option<BigInt> },
    Within(Vec<isize>),
    None,
}

fn predict(family: Family, n: usize, k: usize) -> Result<(Prediction, Option<isize>), RepsError> {
    let d = n as isize - 4;
    let wh = |k| -> Result<_, RepsError> { Ok(Prediction::Module { degree: d, module: whitehouse(n, k)? }) };
    let none = Ok((Prediction::None, None));
    match family {
        Family::Qnk | Family::Pnk => Ok((wh(k)?, None)),
        Family::Le if k >= 3 && n < 2 * k + 2 => Ok((wh(n - 1)?, None)),
        Family::Le if k >= 3 && n == 2 * k + 2 => Ok((
            Prediction::Concentrated {
                degree: 2 * k as isize - 3,
                rank: None,
            },
            None,
        )),
        Family::Ne if k >= 3 && n < 2 * k => Ok((wh(k)?, None)),
        Family::Ne if k >= 3 && n == 2 * k => {
            let dim = whitehouse(n, k)?.dimension();
            Ok((
                Prediction::Concentrated {
                    degree: d,
                    rank: Some(dim.to_integer()),
                },
                None,
            ))
        }
        Family::Ne if k >= 3 && n == 2 * k + 1 => {
            let top = 2 * k as isize - 3;
            Ok((Prediction::Within(vec![top - 1, top]), Some(top)))
        }
        _ => none,
    }
}

/// Homology of a subposet family member, its character when concentrated,
/// and a comparison with the predicted module where one is known.
pub fn subposet_homology_report(family: Family, n: usize, k: usize) -> Result<Report, RepsError> {
    let spec = family.spec(k);
    let view = PosetView::new(n, spec.clone())?;
    let cc = order_complex(&view)?;
    let h = homology(&cc);
    let mut report = Report::new(
        "subposet_homology",
        json!({ "family": family, "n": n, "k": k, "view": spec.to_string() }),
        &["smith_normal_form", "lefschetz"],
    );
    let character = concentrated_character_with(&view, &h)
        .ok()
        .map(|(d, chi)| (d, chi.frobenius().convert(Basis::S)));
    report.results = json!({
        "homology": h,
        "f_vector": cc.f_vector(),
        "character": character.as_ref().map(|(d, f)| json!({ "degree": d, "frobenius": f })),
    });

    let support = h.support();
    let (prediction, conjectured_degree) = predict(family, n, k)?;
    match prediction {
        Prediction::Module { degree, module } => {
            let concentrated = support == vec![degree];
            report.check(
                "concentrated",
                concentrated,
                json!({ "predicted_degree": degree, "support": support }),
            );
            report.check("free", h.is_free(), json!({ "homology": h }));
            let matches = character.as_ref().is_some_and(|(d, f)| *d == degree && *f == module);
            report.check(
                "character",
                matches,
                json!({
                    "predicted": module,
                    "computed": character.as_ref().map(|(_, f)| f),
                }),
            );
        }
        Prediction::Concentrated { degree, rank } => {
            report.check(
                "concentrated",
                support == vec![degree],
                json!({ "predicted_degree": degree, "support": support }),
            );
            if let Some(rank) = rank {
                let betti = BigInt::from(h.betti(degree));
                report.check(
                    "rank",
                    betti == rank,
                    json!({ "predicted": int_json(&rank), "betti": int_json(&betti) }),
                );
            }
        }
        Prediction::Within(degrees) => {
            report.check(
                "support",
                support.iter().all(|d| degrees.contains(d)),
                json!({ "allowed": degrees, "support": support }),
            );
        }
        Prediction::None => {}
    }
    if let Some(d) = conjectured_degree {
        report.observe(
            "concentrated",
            support == vec![d],
            json!({ "expected_degree": d, "support": support, "homology": h }),
        );
    }
    Ok(report)
}
