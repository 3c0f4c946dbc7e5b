//! Verification suites and closed-form-versus-enumeration tables behind the
//! command-line tool.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::combinatorics::{enumerate_unimodal, f_lambda, Partition, Permutation};
use crate::cycle_index::{
    cycle_index, cycle_monomial, cycle_type_prob, deck_size_mixture_check, expected_fixed_points,
    fixed_points_from_series, rsk_shape_prob, unimodal_gf, T_VAR,
};
use crate::error::{Error, Result};
use crate::poly::RationalPoly;
use crate::rational::{self, binomial, from_biguint, int, ratio, Rational};
use crate::rsk::{rsk, rsk_inverse, rsk_permutation, word_to_single_permutation, Scheme, Variant, Word};
use crate::shuffles::{
    closed_form_iterate, exact_distribution, iterate, sample, separation_report, PermDistribution, ShuffleKind,
    ShuffleSpec,
};
use crate::symfun::{
    check_cauchy_identity, eval_extended_schur, eval_schur, eval_schur_jacobi_trudi, eval_stembridge_s, parse_list,
    CauchyKind, ParamVector,
};

/// Output encoding of tables and distributions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::Parse(format!("unknown format {s:?}"))),
        }
    }
}

/// Settings shared by every command. `spec = None` means the command's
/// default specs.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub spec: Option<ShuffleSpec>,
    pub n: usize,
    pub k: usize,
    pub order: usize,
    pub seed: u64,
    pub samples: usize,
    pub format: Format,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { spec: None, n: 4, k: 2, order: 8, seed: 1, samples: 20_000, format: Format::Json }
    }
}

/// Raw spec flags, as typed on the command line.
#[derive(Clone, Debug, Default)]
pub struct SpecArgs {
    pub model: Option<String>,
    pub q: Option<String>,
    pub y: Option<String>,
    pub alpha: Option<String>,
    pub beta: Option<String>,
    pub gamma: Option<String>,
    pub mu: Option<String>,
    pub k: Option<usize>,
    pub reversed: bool,
}

impl SpecArgs {
    /// `None` when no model was given. Lists are comma separated rationals;
    /// a riffle without `q` is the `k`-riffle, and type C without `y` uses
    /// `y = (1/k, .., 1/k)`.
    pub fn build(&self) -> Result<Option<ShuffleSpec>> {
        let Some(model) = self.model.as_deref() else {
            return Ok(None);
        };
        let list = |v: &Option<String>| v.as_deref().map(parse_list).transpose();
        let k = self.k.unwrap_or(2);
        let uniform = |k: usize| {
            if k == 0 {
                Err(Error::Parse("k must be positive".into()))
            } else {
                Ok(vec![ratio(1, k as i64); k])
            }
        };
        let spec = match model {
            "biased-riffle" | "riffle" => ShuffleSpec::biased_riffle(match list(&self.q)? {
                Some(q) => q,
                None => uniform(k)?,
            }),
            "typeC" | "type-c" | "typec" => ShuffleSpec::type_c(match list(&self.y)? {
                Some(y) => y,
                None => uniform(k)?,
            }),
            "abg" => {
                let gamma = self.gamma.as_deref().map(rational::parse).transpose()?.unwrap_or_else(Rational::zero);
                ShuffleSpec::abg(ParamVector::new(
                    list(&self.alpha)?.unwrap_or_default(),
                    list(&self.beta)?.unwrap_or_default(),
                    gamma,
                ))
            }
            "mu" => {
                let raw = self.mu.as_deref().ok_or_else(|| Error::Parse("mu model needs --mu".into()))?;
                let parts = raw
                    .split(',')
                    .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad pile size {t:?}"))))
                    .collect::<Result<Vec<_>>>()?;
                ShuffleSpec::mu(parts)
            }
            "top-to-random" => ShuffleSpec::top_to_random(k),
            other => return Err(Error::Parse(format!("unknown model {other:?}"))),
        };
        let spec = spec.reversed(self.reversed);
        spec.validate()?;
        Ok(Some(spec))
    }
}

/// One named check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// The first discrepancy, for failed checks.
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    fn record(&mut self, name: impl Into<String>, outcome: Result<Option<String>>) {
        let (passed, detail) = match outcome {
            Ok(None) => (true, None),
            Ok(Some(d)) => (false, Some(d)),
            Err(e) => (false, Some(format!("error: {e}"))),
        };
        self.checks.push(Check { name: name.into(), passed, detail });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.detail {
                None => writeln!(f, "{}: PASS", c.name)?,
                Some(d) => writeln!(f, "{}: FAIL ({d})", c.name)?,
            }
        }
        write!(f, "{} checks, {} failed", self.checks.len(), self.failures())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Identities,
    Rsk,
    Shuffles,
    CycleIndex,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "identities" => Ok(Suite::Identities),
            "rsk" => Ok(Suite::Rsk),
            "shuffles" => Ok(Suite::Shuffles),
            "cycle-index" => Ok(Suite::CycleIndex),
            "all" => Ok(Suite::All),
            _ => Err(Error::Parse(format!("unknown suite {s:?}"))),
        }
    }
}

/// Formats a float with 12 significant digits.
pub fn format_float(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

fn mismatch(label: impl fmt::Display, closed: &Rational, enumerated: &Rational) -> Option<String> {
    (closed != enumerated)
        .then(|| format!("{label}: closed form {} vs enumerated {}", rational::format(closed), rational::format(enumerated)))
}

fn first_mismatch(items: impl IntoIterator<Item = Option<String>>) -> Option<String> {
    items.into_iter().flatten().next()
}

fn mass<K: Ord>(m: &BTreeMap<K, Rational>, key: &K) -> Rational {
    m.get(key).cloned().unwrap_or_else(Rational::zero)
}

fn pv(alpha: &[Rational], beta: &[Rational], gamma: Rational) -> ParamVector {
    ParamVector::new(alpha.to_vec(), beta.to_vec(), gamma)
}

/// Specs checked when the user names none.
pub fn default_specs() -> Vec<ShuffleSpec> {
    vec![
        ShuffleSpec::k_riffle(2),
        ShuffleSpec::k_riffle(3),
        ShuffleSpec::k_riffle(2).reversed(true),
        ShuffleSpec::k_riffle(3).reversed(true),
        ShuffleSpec::type_c(vec![int(1)]),
        ShuffleSpec::type_c(vec![ratio(1, 2); 2]),
        ShuffleSpec::abg(pv(&[ratio(1, 2)], &[], ratio(1, 2))),
    ]
}

fn specs(cfg: &RunConfig) -> Vec<ShuffleSpec> {
    cfg.spec.clone().map_or_else(default_specs, |s| vec![s])
}

/// Runs a suite; the report lists every check.
pub fn run_verify(suite: Suite, cfg: &RunConfig) -> Report {
    let mut report = Report::default();
    match suite {
        Suite::Identities => verify_identities(&mut report),
        Suite::Rsk => verify_rsk(&mut report, cfg),
        Suite::Shuffles => verify_shuffles(&mut report, cfg),
        Suite::CycleIndex => verify_cycle_index(&mut report, cfg),
        Suite::All => {
            verify_identities(&mut report);
            verify_rsk(&mut report, cfg);
            verify_shuffles(&mut report, cfg);
            verify_cycle_index(&mut report, cfg);
        }
    }
    report
}

fn verify_identities(report: &mut Report) {
    let params = pv(&[ratio(1, 3)], &[ratio(1, 4)], ratio(5, 12));
    for kind in CauchyKind::ALL {
        let outcome = check_cauchy_identity(kind, 4, 2, 2, Some(&params))
            .map(|ok| (!ok).then(|| "sides differ".to_string()));
        report.record(format!("cauchy-{} deg4", kind.name()), outcome);
    }
    let x = [ratio(1, 2), ratio(1, 3), ratio(1, 6)];
    let outcome = first_mismatch((1..=5).flat_map(Partition::all).map(|l| {
        mismatch(&l, &eval_schur_jacobi_trudi(&l, &x), &eval_schur(&l, &x))
    }));
    report.record("schur jacobi-trudi n<=5", Ok(outcome));
    let y = [int(1)];
    let outcome = mismatch("S_(2)(1)", &eval_stembridge_s(&Partition::row(2), &y), &int(2));
    report.record("stembridge S_(2)(1) = 2", Ok(outcome));
    let a = ratio(1, 3);
    let p = pv(std::slice::from_ref(&a), &[], Rational::one() - &a);
    let outcome = mismatch("s~_(2)", &eval_extended_schur(&Partition::row(2), &p), &((&a * &a + int(1)) / int(2)));
    report.record("extended schur (a^2+1)/2", Ok(outcome));
}

fn verify_rsk(report: &mut Report, cfg: &RunConfig) {
    let n = cfg.n.clamp(1, 5);
    for variant in Variant::ALL {
        let alphabet: Vec<i32> = match variant {
            Variant::Standard => vec![1, 2, 3],
            Variant::TypeC => vec![-2, -1, 1, 2],
            Variant::Brkv => vec![-2, -1, 1, 2],
        };
        let outcome = Word::all(n, &alphabet, variant.order()).map(|words| {
            words.iter().find_map(|w| {
                let back = rsk(w.letters(), variant).and_then(|pair| rsk_inverse(&pair, variant));
                match back {
                    Ok(letters) if letters == w.letters() => None,
                    Ok(letters) => Some(format!("{:?} came back as {letters:?}", w.letters())),
                    Err(e) => Some(format!("{:?}: {e}", w.letters())),
                }
            })
        });
        report.record(format!("rsk-{} round-trip n={n}", variant.name()), outcome);
    }
    let outcome = Word::all(n, &[1, 2, 3], Variant::Standard.order()).map(|words| {
        words.iter().find_map(|w| {
            let q = rsk(w.letters(), Variant::Standard).ok()?.q;
            let perm = word_to_single_permutation(w.letters(), Scheme::Riffle).ok()?;
            (rsk_permutation(&perm).q != q).then(|| format!("recording tableaux differ for {:?}", w.letters()))
        })
    });
    report.record(format!("riffle recording tableau n={n}"), outcome);
    let outcome = Word::all(n, &[-2, -1, 1, 2], Variant::TypeC.order()).map(|words| {
        words.iter().find_map(|w| {
            let q = rsk(w.letters(), Variant::TypeC).ok()?.q;
            let perm = word_to_single_permutation(w.letters(), Scheme::Signed).ok()?;
            (rsk_permutation(&perm).q != q).then(|| format!("recording tableaux differ for {:?}", w.letters()))
        })
    });
    report.record(format!("typeC recording tableau n={n}"), outcome);
}

fn recording_check(spec: &ShuffleSpec, n: usize, expected: impl Fn(&Partition) -> Rational) -> Result<Option<String>> {
    let d = exact_distribution(spec, n)?;
    let law = d.marginal(|w| rsk_permutation(w).q);
    let mut by_tableau = Vec::new();
    for lambda in Partition::all(n) {
        for t in crate::combinatorics::enumerate_syt(&lambda) {
            by_tableau.push(mismatch(format!("Q={t:?}"), &expected(&lambda), &mass(&law, &t)));
        }
    }
    Ok(first_mismatch(by_tableau))
}

fn verify_shuffles(report: &mut Report, cfg: &RunConfig) {
    let n = cfg.n.clamp(1, 5);
    let q = vec![ratio(1, 3), ratio(2, 3)];
    report.record(
        format!("record biased-riffle n={n}"),
        recording_check(&ShuffleSpec::biased_riffle(q.clone()), n, |l| eval_schur(l, &q)),
    );
    let y = vec![ratio(1, 4), ratio(3, 4)];
    let scale = rational::pow(&int(2), n);
    report.record(
        format!("record typeC n={n}"),
        recording_check(&ShuffleSpec::type_c(y.clone()), n, |l| eval_stembridge_s(l, &y) / &scale),
    );
    let p = pv(&[ratio(1, 3)], &[ratio(1, 2)], ratio(1, 6));
    report.record(
        format!("record abg n={n}"),
        recording_check(&ShuffleSpec::abg(p.clone()), n, |l| eval_extended_schur(l, &p)),
    );
    let half = pv(&[ratio(1, 2)], &[], ratio(1, 2));
    let outcome = (1..=4)
        .map(|k| {
            let closed = closed_form_iterate(&ShuffleSpec::abg(half.clone()), k).expect("single alpha");
            Ok((iterate(&ShuffleSpec::abg(half.clone()), k, n)? != exact_distribution(&closed, n)?)
                .then(|| format!("k={k} differs")))
        })
        .collect::<Result<Vec<_>>>()
        .map(first_mismatch);
    report.record(format!("iteration (1/2;;1/2) n={n}"), outcome);
    let outcome = (1..=6)
        .map(|k| {
            let (sep, bound) = separation_report(&half, k, n)?;
            Ok((sep > bound).then(|| {
                format!("k={k}: separation {} above bound {}", rational::format(&sep), rational::format(&bound))
            }))
        })
        .collect::<Result<Vec<_>>>()
        .map(first_mismatch);
    report.record(format!("separation bound n={n}"), outcome);
    let outcome = top_to_random_rows(n, 4).map(|rows| {
        first_mismatch(rows.into_iter().map(|(k, l, closed, enumerated)| mismatch(format!("k={k} {l}"), &closed, &enumerated)))
    });
    report.record(format!("top-to-random shapes n={n}"), outcome);
    let spec = cfg.spec.clone().unwrap_or_else(|| ShuffleSpec::k_riffle(2));
    report.record(format!("sampling {spec} n={}", n.min(4)), sampling_check(&spec, n.min(4), cfg));
}

/// Largest standardized deviation of empirical frequencies; fails above 4.
fn sampling_check(spec: &ShuffleSpec, n: usize, cfg: &RunConfig) -> Result<Option<String>> {
    let exact = exact_distribution(spec, n)?;
    let draws = sample(spec, n, cfg.seed, cfg.samples)?;
    let mut counts: BTreeMap<Permutation, usize> = BTreeMap::new();
    for w in draws {
        *counts.entry(w).or_default() += 1;
    }
    let total = cfg.samples as f64;
    let mut worst: f64 = 0.0;
    for w in Permutation::all(n) {
        let p = rational::to_f64(&exact.get(&w));
        let seen = counts.get(&w).copied().unwrap_or(0) as f64;
        if p == 0.0 {
            if seen > 0.0 {
                return Ok(Some(format!("{w:?} drawn but has probability 0")));
            }
            continue;
        }
        let sd = (total * p * (1.0 - p)).sqrt().max(1e-12);
        worst = worst.max((seen - total * p).abs() / sd);
    }
    Ok((worst > 4.0).then(|| format!("max deviation {} sd", format_float(worst))))
}

/// `(k, λ, closed form, enumerated)` for `k = 1..=kmax` top-to-random moves.
fn top_to_random_rows(n: usize, kmax: usize) -> Result<Vec<(usize, Partition, Rational, Rational)>> {
    let step = exact_distribution(&ShuffleSpec::top_to_random(1), n)?;
    let mut acc = PermDistribution::point_mass(Permutation::identity(n));
    let mut rows = Vec::new();
    for k in 1..=kmax {
        acc = acc.convolve(&step)?;
        let shapes = acc.marginal(|w| rsk_permutation(w).p.shape());
        for lambda in Partition::all(n) {
            let closed = rsk_shape_prob(&ShuffleSpec::top_to_random(k), n, &lambda)?;
            rows.push((k, lambda.clone(), closed, mass(&shapes, &lambda)));
        }
    }
    Ok(rows)
}

fn verify_cycle_index(report: &mut Report, cfg: &RunConfig) {
    let n = cfg.n.clamp(1, 6);
    for spec in specs(cfg) {
        let outcome = (|| {
            if matches!(spec.kind, ShuffleKind::Mu { .. } | ShuffleKind::TopToRandom { .. }) {
                let shapes = exact_distribution(&spec, n)?.marginal(|w| rsk_permutation(w).p.shape());
                return Partition::all(n)
                    .iter()
                    .map(|l| Ok(mismatch(l, &rsk_shape_prob(&spec, n, l)?, &mass(&shapes, l))))
                    .collect::<Result<Vec<_>>>()
                    .map(first_mismatch);
            }
            let masses = exact_distribution(&spec, n)?.marginal(Permutation::cycle_type);
            let ci = cycle_index(&spec, n)?;
            Ok(first_mismatch(
                Partition::all(n).iter().map(|l| mismatch(l, &ci.coefficient(n, &cycle_monomial(l)), &mass(&masses, l))),
            ))
        })();
        report.record(format!("cycle-type {spec} n={n}"), outcome);
    }
    for y in [vec![int(1)], vec![ratio(1, 2); 2]] {
        let spec = ShuffleSpec::type_c(y);
        let outcome = (|| {
            let forward = cycle_index(&spec, 8)?;
            let reversed = cycle_index(&spec.clone().reversed(true), 8)?;
            Ok((forward != reversed).then(|| "coefficients differ".to_string()))
        })();
        report.record(format!("reversal invariance {spec} order 8"), outcome);
    }
    for k in 2..=4 {
        for reversed in [false, true] {
            let spec = ShuffleSpec::k_riffle(k).reversed(reversed);
            let outcome = (1..=10)
                .map(|m| {
                    let closed = expected_fixed_points(&spec, m)?;
                    let partial = (0..m).fold(Rational::zero(), |acc, j| {
                        let term = Rational::one() / rational::pow(&int(k as i64), j);
                        if reversed && j % 2 == 1 {
                            acc - term
                        } else {
                            acc + term
                        }
                    });
                    Ok(mismatch(format!("n={m}"), &closed, &partial))
                })
                .collect::<Result<Vec<_>>>()
                .map(first_mismatch);
            report.record(format!("fixed points {spec} n<=10"), outcome);
        }
    }
    let outcome = unimodal_rows(cfg.order.clamp(1, 9)).map(|rows| {
        rows.into_iter().find_map(|r| (!r.matches).then(|| format!("n={} differs", r.n)))
    });
    report.record("unimodal generating function", outcome);
    for spec in [ShuffleSpec::k_riffle(2).reversed(true), ShuffleSpec::abg(pv(&[ratio(1, 2)], &[], ratio(1, 2)))] {
        let outcome = deck_size_mixture_check(&spec, 6).map(|ok| (!ok).then(|| "sides differ".to_string()));
        report.record(format!("deck-size mixture {spec} order 6"), outcome);
    }
}

struct UnimodalRow {
    n: usize,
    from_series: Rational,
    count: Rational,
    matches: bool,
}

/// Per `n`: the count read off the series at `t = x = 1` (halved), the
/// direct count `2^{n-1}`, and whether every coefficient agrees with
/// enumeration.
fn unimodal_rows(max_n: usize) -> Result<Vec<UnimodalRow>> {
    let gf = unimodal_gf(max_n)?;
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let mut direct = RationalPoly::zero();
        let perms = enumerate_unimodal(n);
        for (w, max) in &perms {
            let mut mono = cycle_monomial(&w.cycle_type());
            for extra in 0..=1u32 {
                mono[T_VAR] = (*max - 1) as u32 + extra;
                direct.add_term(mono.clone(), Rational::one());
            }
        }
        let from_series = gf.coeff(n).sum_of_coefficients() / int(2);
        let count = int(perms.len() as i64);
        rows.push(UnimodalRow { n, matches: gf.coeff(n) == &direct && from_series == count, from_series, count });
    }
    Ok(rows)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    FixedPoints,
    CycleType,
    Shape,
    Separation,
    Unimodal,
}

impl FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fixed-points" => Ok(TableKind::FixedPoints),
            "cycle-type" => Ok(TableKind::CycleType),
            "shape" => Ok(TableKind::Shape),
            "separation" => Ok(TableKind::Separation),
            "unimodal" => Ok(TableKind::Unimodal),
            _ => Err(Error::Parse(format!("unknown table {s:?}"))),
        }
    }
}

/// A table of strings; rationals appear as reduced `p/q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(columns: &[&str]) -> Self {
        Table { columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<Vec<&str>> {
        let i = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[i].as_str()).collect())
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let csv_err = |e: csv::Error| Error::Parse(e.to_string());
        w.write_record(&self.columns).map_err(csv_err)?;
        for r in &self.rows {
            w.write_record(r).map_err(csv_err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("utf-8 input"))
    }

    /// `[{column: value}, ..]`.
    pub fn to_json(&self) -> Result<String> {
        let records: Vec<serde_json::Map<String, serde_json::Value>> = self
            .rows
            .iter()
            .map(|r| self.columns.iter().cloned().zip(r.iter().map(|v| serde_json::Value::String(v.clone()))).collect())
            .collect();
        Ok(serde_json::to_string_pretty(&records)?)
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }
}

fn yes_no(b: bool) -> String {
    if b { "true" } else { "false" }.to_string()
}

fn word_enumeration_ok(spec: &ShuffleSpec, n: usize) -> bool {
    spec.pile_model().is_none_or(|m| m.word_count(n) <= 100_000)
}

/// A closed-form-versus-enumeration table.
pub fn emit_table(kind: TableKind, cfg: &RunConfig) -> Result<Table> {
    match kind {
        TableKind::FixedPoints => {
            let spec = cfg.spec.clone().unwrap_or_else(|| ShuffleSpec::k_riffle(cfg.k));
            let series = cycle_index(&spec, cfg.n)?;
            let mut t = Table::new(&["n", "closed_form", "series", "enumerated", "exact_match"]);
            for n in 1..=cfg.n {
                let closed = expected_fixed_points(&spec, n)?;
                let from_series = fixed_points_from_series(&series, n);
                let enumerated = if word_enumeration_ok(&spec, n) {
                    let d = exact_distribution(&spec, n)?;
                    Some(d.weights().iter().fold(Rational::zero(), |acc, (w, p)| acc + p * int(w.fixed_points() as i64)))
                } else {
                    None
                };
                let matches = from_series == closed && enumerated.as_ref().is_none_or(|e| e == &closed);
                t.push(vec![
                    n.to_string(),
                    rational::format(&closed),
                    rational::format(&from_series),
                    enumerated.as_ref().map(rational::format).unwrap_or_default(),
                    yes_no(matches),
                ]);
            }
            Ok(t)
        }
        TableKind::CycleType => {
            let spec = cfg.spec.clone().unwrap_or_else(|| ShuffleSpec::k_riffle(cfg.k));
            let masses = exact_distribution(&spec, cfg.n)?.marginal(Permutation::cycle_type);
            let mut t = Table::new(&["lambda", "closed_form", "enumerated", "exact_match"]);
            for lambda in Partition::all(cfg.n) {
                let closed = cycle_type_prob(&spec, cfg.n, &lambda)?;
                let enumerated = mass(&masses, &lambda);
                t.push(vec![lambda.to_string(), rational::format(&closed), rational::format(&enumerated), yes_no(closed == enumerated)]);
            }
            Ok(t)
        }
        TableKind::Shape => {
            let spec = cfg.spec.clone().unwrap_or_else(|| ShuffleSpec::top_to_random(cfg.k));
            let mut t = Table::new(&["k", "lambda", "closed_form", "enumerated", "exact_match"]);
            if let ShuffleKind::TopToRandom { k } = spec.kind {
                for (k, lambda, closed, enumerated) in top_to_random_rows(cfg.n, k)? {
                    t.push(vec![k.to_string(), lambda.to_string(), rational::format(&closed), rational::format(&enumerated), yes_no(closed == enumerated)]);
                }
            } else {
                let shapes = exact_distribution(&spec, cfg.n)?.marginal(|w| rsk_permutation(w).p.shape());
                for lambda in Partition::all(cfg.n) {
                    let closed = rsk_shape_prob(&spec, cfg.n, &lambda)?;
                    let enumerated = mass(&shapes, &lambda);
                    t.push(vec!["1".into(), lambda.to_string(), rational::format(&closed), rational::format(&enumerated), yes_no(closed == enumerated)]);
                }
            }
            Ok(t)
        }
        TableKind::Separation => {
            let spec = cfg.spec.clone().unwrap_or_else(|| ShuffleSpec::abg(pv(&[ratio(1, 2)], &[], ratio(1, 2))));
            let p = spec
                .param_vector()
                .filter(|_| !spec.reversed)
                .ok_or_else(|| Error::UnsupportedSpec(format!("separation table for {spec}")))?;
            let mut t = Table::new(&["k", "separation", "bound", "bound_holds"]);
            for k in 1..=cfg.k {
                let (sep, bound) = separation_report(&p, k, cfg.n)?;
                t.push(vec![k.to_string(), rational::format(&sep), rational::format(&bound), yes_no(sep <= bound)]);
            }
            Ok(t)
        }
        TableKind::Unimodal => {
            let mut t = Table::new(&["n", "series_count", "enumerated", "per_max_counts", "exact_match"]);
            for row in unimodal_rows(cfg.order.clamp(1, 10))? {
                let mut per_max = vec![0usize; row.n];
                for (_, max) in enumerate_unimodal(row.n) {
                    per_max[max - 1] += 1;
                }
                let binomials_ok = per_max.iter().enumerate().all(|(i, &c)| binomial(row.n - 1, i) == c.into());
                t.push(vec![
                    row.n.to_string(),
                    rational::format(&row.from_series),
                    rational::format(&row.count),
                    per_max.iter().map(usize::to_string).collect::<Vec<_>>().join(" "),
                    yes_no(row.matches && binomials_ok),
                ]);
            }
            Ok(t)
        }
    }
}

/// Plancherel mass `f_λ² / n!`, the uniform shape law.
pub fn plancherel(lambda: &Partition) -> Rational {
    rational::pow(&from_biguint(&f_lambda(lambda)), 2) / from_biguint(&rational::factorial(lambda.size()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_report_contains_contract_line() {
        let report = run_verify(Suite::Identities, &RunConfig::default());
        assert!(report.passed(), "{report}");
        assert!(report.to_string().contains("cauchy-classic deg4: PASS"));
    }

    #[test]
    fn every_suite_passes_and_is_deterministic() {
        let cfg = RunConfig { n: 4, seed: 7, samples: 8000, ..RunConfig::default() };
        let first = run_verify(Suite::All, &cfg);
        assert!(first.passed(), "{first}");
        assert_eq!(first, run_verify(Suite::All, &cfg));
    }

    #[test]
    fn failures_carry_discrepancies() {
        let mut report = Report::default();
        report.record("demo", Ok(mismatch("x", &ratio(1, 2), &ratio(1, 3))));
        assert!(!report.passed());
        assert!(report.to_string().contains("demo: FAIL (x: closed form 1/2 vs enumerated 1/3)"));
    }

    #[test]
    fn spec_flags() {
        let args = SpecArgs { model: Some("abg".into()), alpha: Some("1/2".into()), gamma: Some("1/2".into()), ..Default::default() };
        assert_eq!(args.build().unwrap(), Some(ShuffleSpec::abg(pv(&[ratio(1, 2)], &[], ratio(1, 2)))));
        let riffle = SpecArgs { model: Some("biased-riffle".into()), k: Some(3), reversed: true, ..Default::default() };
        assert_eq!(riffle.build().unwrap(), Some(ShuffleSpec::k_riffle(3).reversed(true)));
        let bad = SpecArgs { model: Some("biased-riffle".into()), q: Some("1/2,1/3".into()), ..Default::default() };
        assert!(matches!(bad.build(), Err(Error::Unnormalized(_))));
        assert_eq!(SpecArgs::default().build().unwrap(), None);
    }

    #[test]
    fn fixed_point_table() {
        let cfg = RunConfig { n: 8, k: 2, ..RunConfig::default() };
        let t = emit_table(TableKind::FixedPoints, &cfg).unwrap();
        assert_eq!(&t.column("closed_form").unwrap()[..3], &["1", "3/2", "7/4"]);
        assert!(t.column("exact_match").unwrap().iter().all(|&m| m == "true"));
    }

    #[test]
    fn separation_and_shape_tables() {
        let cfg = RunConfig { n: 4, k: 10, ..RunConfig::default() };
        let t = emit_table(TableKind::Separation, &cfg).unwrap();
        assert_eq!(t.rows.len(), 10);
        assert!(t.column("bound_holds").unwrap().iter().all(|&m| m == "true"));
        let cfg = RunConfig { n: 4, k: 6, ..RunConfig::default() };
        let t = emit_table(TableKind::Shape, &cfg).unwrap();
        assert!(t.column("exact_match").unwrap().iter().all(|&m| m == "true"));
        for k in 1..=6 {
            let total = t
                .rows
                .iter()
                .filter(|r| r[0] == k.to_string())
                .fold(Rational::zero(), |acc, r| acc + rational::parse(&r[2]).unwrap());
            assert_eq!(total, int(1));
        }
    }

    #[test]
    fn cycle_type_and_unimodal_tables() {
        let cfg = RunConfig { n: 4, order: 8, ..RunConfig::default() };
        for kind in [TableKind::CycleType, TableKind::Unimodal] {
            let t = emit_table(kind, &cfg).unwrap();
            assert!(t.column("exact_match").unwrap().iter().all(|&m| m == "true"));
        }
    }

    #[test]
    fn csv_quotes_partitions() {
        let cfg = RunConfig { n: 3, ..RunConfig::default() };
        let csv = emit_table(TableKind::CycleType, &cfg).unwrap().to_csv().unwrap();
        assert!(csv.starts_with("lambda,closed_form,enumerated,exact_match\n"));
        assert!(csv.contains("\"(2,1)\""));
    }

    #[test]
    fn float_formatting() {
        assert_eq!(format_float(1.0 / 3.0), "0.333333333333");
        assert_eq!(format_float(12.5), "12.5000000000");
    }
}
