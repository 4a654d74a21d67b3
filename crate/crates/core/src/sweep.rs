//! Parameter sweeps over every identity in the crate, with exact pass/fail
//! per tuple and deterministic reports regardless of thread count.

use std::fmt::{self, Display, Write as _};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::corollaries::{
    bounded_jtp_sides, carl_poly_sides, carlitz_sides, false_theta_sides, four_param_sides,
    jacobi_cube_poly_sides, jacobi_cube_series, jtp_series, FourParams,
};
use crate::error::{Error, Result};
use crate::keyid::{
    andrews_recurrence_sides, boundary_value, key_limit_lhs, key_limit_rhs, lhs_g, rhs_p,
    schur_sides, second_order_recurrence_sides, support_violations, KeyParams,
};
use crate::partcomb::{
    for_each_type1, gollnitz_b, gollnitz_c, gollnitz_c_partitions, remark3_transform,
    theorem1_report, transformed_weight, ColoredPartition,
};
use crate::qcomb::{
    binomial_pair_recurrence_sides, qpascal_sides, shifted_trinomial_recurrence_sides,
    trinomial_recurrence_sides,
};
use crate::qcore::LaurentPoly;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    Key,
    Boundary,
    RecurrenceG,
    RecurrenceP,
    RecurrenceAndrews,
    Schur,
    KeyLimit,
    Theorem1,
    Gollnitz,
    Remark3,
    JtpBounded,
    JtpSeries,
    FalseTheta,
    JacobiCubePoly,
    JacobiCubeSeries,
    Carl,
    Carlitz,
    FourParam,
    Qpascal,
    MultinomRec,
    Support,
}

impl Identity {
    pub const ALL: [Identity; 21] = [
        Identity::Key,
        Identity::Boundary,
        Identity::RecurrenceG,
        Identity::RecurrenceP,
        Identity::RecurrenceAndrews,
        Identity::Schur,
        Identity::KeyLimit,
        Identity::Theorem1,
        Identity::Gollnitz,
        Identity::Remark3,
        Identity::JtpBounded,
        Identity::JtpSeries,
        Identity::FalseTheta,
        Identity::JacobiCubePoly,
        Identity::JacobiCubeSeries,
        Identity::Carl,
        Identity::Carlitz,
        Identity::FourParam,
        Identity::Qpascal,
        Identity::MultinomRec,
        Identity::Support,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Key => "key",
            Identity::Boundary => "boundary",
            Identity::RecurrenceG => "recurrence-g",
            Identity::RecurrenceP => "recurrence-p",
            Identity::RecurrenceAndrews => "recurrence-andrews",
            Identity::Schur => "schur",
            Identity::KeyLimit => "key-limit",
            Identity::Theorem1 => "theorem1",
            Identity::Gollnitz => "gollnitz",
            Identity::Remark3 => "remark3",
            Identity::JtpBounded => "jtp-bounded",
            Identity::JtpSeries => "jtp-series",
            Identity::FalseTheta => "false-theta",
            Identity::JacobiCubePoly => "jacobi-cube-poly",
            Identity::JacobiCubeSeries => "jacobi-cube-series",
            Identity::Carl => "carl",
            Identity::Carlitz => "carlitz",
            Identity::FourParam => "four-param",
            Identity::Qpascal => "qpascal",
            Identity::MultinomRec => "multinom-rec",
            Identity::Support => "support",
        }
    }

    /// Swept parameters, in tuple order, with their default ranges.
    pub fn default_ranges(self) -> Vec<(Param, i64, i64)> {
        use Param::*;
        let ijk = |lo, hi| vec![(I, lo, hi), (J, lo, hi), (K, lo, hi)];
        let with = |mut v: Vec<(Param, i64, i64)>, extra: &[(Param, i64, i64)]| {
            v.extend_from_slice(extra);
            v
        };
        match self {
            Identity::Key
            | Identity::RecurrenceG
            | Identity::RecurrenceP
            | Identity::RecurrenceAndrews => with(ijk(0, 3), &[(L, 0, 8), (M, 0, 8)]),
            Identity::Boundary => with(ijk(0, 4), &[(M, 0, 10)]),
            Identity::Schur => vec![(J, 0, 3), (K, 0, 3), (L, 0, 8), (M, 0, 8)],
            Identity::KeyLimit => ijk(0, 3),
            Identity::Theorem1 => with(ijk(0, 3), &[(L, 0, 7)]),
            Identity::Gollnitz | Identity::Remark3 => vec![(N, 0, 60)],
            Identity::JtpBounded => vec![(L, 0, 8)],
            Identity::JacobiCubePoly => vec![(L, 0, 20)],
            Identity::Carl => vec![(L, 0, 10)],
            Identity::Carlitz => vec![(L, 0, 12)],
            Identity::JtpSeries | Identity::FalseTheta | Identity::JacobiCubeSeries => vec![],
            Identity::FourParam => vec![(I, 0, 2), (J, 0, 2), (K, 0, 2), (Ell, 0, 2)],
            Identity::Qpascal => vec![(Top, -6, 10), (Bottom, -6, 10)],
            Identity::MultinomRec => vec![(L, 0, 8), (S, 0, 8), (I, 0, 8), (J, 0, 8)],
            Identity::Support => with(ijk(0, 4), &[(L, 0, 10)]),
        }
    }

    /// Truncation order used when none is given; `None` for exact identities.
    pub fn default_order(self) -> Option<usize> {
        match self {
            Identity::KeyLimit => Some(25),
            Identity::JtpSeries => Some(10),
            Identity::FalseTheta => Some(30),
            Identity::JacobiCubeSeries => Some(50),
            Identity::FourParam => Some(20),
            _ => None,
        }
    }

    /// Tuples outside the identity's hypotheses, skipped by the sweep:
    /// `L >= max(i+j, j+k, k+i)` for the bounded counting theorem and the
    /// support property.
    fn applies(self, t: &Tuple) -> bool {
        match self {
            Identity::Theorem1 | Identity::Support => {
                let (i, j, k, l) = (
                    t.get(Param::I),
                    t.get(Param::J),
                    t.get(Param::K),
                    t.get(Param::L),
                );
                l >= (i + j).max(j + k).max(k + i)
            }
            _ => true,
        }
    }
}

impl Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown identity `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    I,
    J,
    K,
    L,
    M,
    /// The fourth total of the four-parameter identity.
    Ell,
    N,
    S,
    Top,
    Bottom,
}

impl Param {
    pub fn name(self) -> &'static str {
        match self {
            Param::I => "i",
            Param::J => "j",
            Param::K => "k",
            Param::L => "L",
            Param::M => "M",
            Param::Ell => "l",
            Param::N => "n",
            Param::S => "s",
            Param::Top => "top",
            Param::Bottom => "bottom",
        }
    }
}

/// One parameter point, in the identity's parameter order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Tuple(Vec<(Param, i64)>);

impl Tuple {
    pub fn new(values: Vec<(Param, i64)>) -> Self {
        Self(values)
    }

    pub fn get(&self, p: Param) -> i64 {
        self.0
            .iter()
            .find(|(q, _)| *q == p)
            .map(|(_, v)| *v)
            .unwrap_or_else(|| panic!("parameter {} not in tuple", p.name()))
    }

    pub fn values(&self) -> &[(Param, i64)] {
        &self.0
    }
}

impl Serialize for Tuple {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (p, v) in &self.0 {
            map.serialize_entry(p.name(), v)?;
        }
        map.end()
    }
}

impl Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, (p, v)) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}={}", p.name(), v)?;
        }
        Ok(())
    }
}

/// Parses `a..b` (inclusive) or a single integer `a`.
pub fn parse_range(s: &str) -> Result<(i64, i64)> {
    let bad = |reason: &str| Error::Usage(format!("bad range {s:?}: {reason}"));
    let int = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|_| bad("expected an integer"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (int(a)?, int(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = int(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(bad("empty range"));
    }
    Ok((lo, hi))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepSpec {
    pub identity: Identity,
    ranges: Vec<(Param, i64, i64)>,
    pub order: Option<usize>,
    /// Record wall time in the report; off gives byte-identical reports.
    pub timing: bool,
}

impl SweepSpec {
    pub fn new(identity: Identity) -> Self {
        Self {
            identity,
            ranges: identity.default_ranges(),
            order: identity.default_order(),
            timing: true,
        }
    }

    pub fn with_range(mut self, p: Param, lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::Usage(format!(
                "empty range {lo}..{hi} for {}",
                p.name()
            )));
        }
        let slot = self
            .ranges
            .iter_mut()
            .find(|(q, _, _)| *q == p)
            .ok_or_else(|| {
                Error::Usage(format!(
                    "{} does not take parameter {}",
                    self.identity,
                    p.name()
                ))
            })?;
        *slot = (p, lo, hi);
        Ok(self)
    }

    pub fn with_order(mut self, order: usize) -> Result<Self> {
        if self.identity.default_order().is_none() {
            return Err(Error::Usage(format!(
                "{} takes no truncation order",
                self.identity
            )));
        }
        if order == 0 {
            return Err(Error::Usage("order must be at least 1".into()));
        }
        self.order = Some(order);
        Ok(self)
    }

    pub fn without_timing(mut self) -> Self {
        self.timing = false;
        self
    }

    pub fn ranges(&self) -> &[(Param, i64, i64)] {
        &self.ranges
    }

    /// Cartesian product of the ranges, lexicographic in parameter order,
    /// restricted to tuples satisfying the identity's hypotheses.
    pub fn tuples(&self) -> Vec<Tuple> {
        let mut out = vec![Vec::new()];
        for &(p, lo, hi) in &self.ranges {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<(Param, i64)>| {
                    (lo..=hi).map(move |v| {
                        let mut t = prefix.clone();
                        t.push((p, v));
                        t
                    })
                })
                .collect();
        }
        out.into_iter()
            .map(Tuple)
            .filter(|t| self.identity.applies(t))
            .collect()
    }
}

/// Result of evaluating one tuple. Sides are rendered only on failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation {
    pub ok: bool,
    pub lhs: String,
    pub rhs: String,
}

impl Evaluation {
    pub fn judge<T: PartialEq + Display>(lhs: T, rhs: T) -> Self {
        Self::judge_with(lhs, rhs, true)
    }

    /// Passes when the sides agree and `extra` holds.
    pub fn judge_with<T: PartialEq + Display>(lhs: T, rhs: T, extra: bool) -> Self {
        if lhs == rhs && extra {
            Self {
                ok: true,
                lhs: String::new(),
                rhs: String::new(),
            }
        } else {
            Self {
                ok: false,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            }
        }
    }
}

fn key_params(t: &Tuple) -> KeyParams {
    KeyParams::new(
        t.get(Param::I),
        t.get(Param::J),
        t.get(Param::K),
        t.get(Param::L),
        t.get(Param::M),
    )
}

fn joined<T: Display>(items: &[T]) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

fn render_parts(parts: &[Vec<u64>]) -> String {
    let rows: Vec<String> = parts
        .iter()
        .map(|p| {
            format!(
                "({})",
                p.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        })
        .collect();
    rows.join(" ")
}

/// Images under the residue transform of all Type-1 partitions whose image
/// has weight `n`, sorted.
pub fn remark3_images(n: u64) -> Vec<Vec<u64>> {
    let mut images = Vec::new();
    let max_part = (n / 6 + 1) as u32;
    for_each_type1(
        max_part,
        |pre| transformed_weight(pre) > n,
        |parts| {
            if transformed_weight(parts) == n {
                let p = ColoredPartition::new(parts.to_vec());
                images.push(remark3_transform(&p).expect("enumerated partitions are Type-1"));
            }
        },
    );
    images.sort();
    images
}

/// The built-in evaluator behind [`run_sweep`].
pub fn evaluate(identity: Identity, t: &Tuple, order: Option<usize>) -> Result<Evaluation> {
    let order = || order.ok_or_else(|| Error::Usage(format!("{identity} needs an order")));
    Ok(match identity {
        Identity::Key => {
            let p = key_params(t);
            Evaluation::judge(lhs_g(&p), rhs_p(&p))
        }
        Identity::Boundary => {
            let (i, j, k, m) = (
                t.get(Param::I),
                t.get(Param::J),
                t.get(Param::K),
                t.get(Param::M),
            );
            Evaluation::judge(
                lhs_g(&KeyParams::new(i, j, k, i + j - 1, m)),
                boundary_value(i, j, k, m),
            )
        }
        Identity::RecurrenceG => {
            let (l, r) = second_order_recurrence_sides(lhs_g, &key_params(t));
            Evaluation::judge(l, r)
        }
        Identity::RecurrenceP => {
            let (l, r) = second_order_recurrence_sides(rhs_p, &key_params(t));
            Evaluation::judge(l, r)
        }
        Identity::RecurrenceAndrews => {
            let (l, r) = andrews_recurrence_sides(&key_params(t));
            Evaluation::judge(l, r)
        }
        Identity::Schur => {
            let (j, k, l, m) = (
                t.get(Param::J),
                t.get(Param::K),
                t.get(Param::L),
                t.get(Param::M),
            );
            let (lhs, rhs) = schur_sides(j, k, l, m);
            let p = KeyParams::new(0, j, k, l, m);
            let extra = lhs == lhs_g(&p) && rhs == rhs_p(&p);
            Evaluation::judge_with(lhs, rhs, extra)
        }
        Identity::KeyLimit => {
            let (i, j, k) = (t.get(Param::I), t.get(Param::J), t.get(Param::K));
            Evaluation::judge(
                key_limit_lhs(i, j, k, order()?)?,
                key_limit_rhs(i, j, k, order()?)?,
            )
        }
        Identity::Theorem1 => {
            let r = theorem1_report(
                t.get(Param::L),
                t.get(Param::I),
                t.get(Param::J),
                t.get(Param::K),
            )?;
            let poly = |c: &std::collections::BTreeMap<u64, u64>| {
                LaurentPoly::from_terms(c.iter().map(|(&n, &v)| (n as i64, v as i64)))
            };
            Evaluation::judge_with(poly(&r.g_counts), poly(&r.p_counts), r.holds())
        }
        Identity::Gollnitz => {
            let n = t.get(Param::N).max(0) as u64;
            Evaluation::judge(gollnitz_b(n), gollnitz_c(n))
        }
        Identity::Remark3 => {
            let n = t.get(Param::N).max(0) as u64;
            let mut targets = gollnitz_c_partitions(n);
            targets.sort();
            Evaluation::judge(render_parts(&remark3_images(n)), render_parts(&targets))
        }
        Identity::JtpBounded => {
            let (l, r) = bounded_jtp_sides(t.get(Param::L));
            Evaluation::judge(l, r)
        }
        Identity::JtpSeries => {
            let (l, r) = jtp_series(order()?)?;
            Evaluation::judge(l, r)
        }
        Identity::FalseTheta => {
            let (l, r) = false_theta_sides(order()?)?;
            Evaluation::judge(l, r)
        }
        Identity::JacobiCubePoly => {
            let (l, r) = jacobi_cube_poly_sides(t.get(Param::L));
            Evaluation::judge(l, r)
        }
        Identity::JacobiCubeSeries => {
            let (l, r) = jacobi_cube_series(order()?)?;
            Evaluation::judge(l, r)
        }
        Identity::Carl => {
            let (l, r) = carl_poly_sides(t.get(Param::L));
            Evaluation::judge(l, r)
        }
        Identity::Carlitz => {
            let big_l = t.get(Param::L);
            let (l, r) = carlitz_sides(big_l);
            let collapse = LaurentPoly::constant(big_l + 1);
            let extra = l.substitute_one() == collapse && r.substitute_one() == collapse;
            Evaluation::judge_with(l, r, extra)
        }
        Identity::FourParam => {
            let p = FourParams::new(
                t.get(Param::I),
                t.get(Param::J),
                t.get(Param::K),
                t.get(Param::Ell),
            );
            let (l, r) = four_param_sides(&p, order()?)?;
            Evaluation::judge(l, r)
        }
        Identity::Qpascal => {
            let (l, r) = qpascal_sides(t.get(Param::Top), t.get(Param::Bottom));
            Evaluation::judge(l, r)
        }
        Identity::MultinomRec => {
            let (l, s, i, j) = (
                t.get(Param::L),
                t.get(Param::S),
                t.get(Param::I),
                t.get(Param::J),
            );
            let sides = [
                trinomial_recurrence_sides(l, s, i, j),
                shifted_trinomial_recurrence_sides(l, s, i, j),
                binomial_pair_recurrence_sides(l, i, j),
            ];
            let ok = sides.iter().all(|(a, b)| a == b);
            let lhs: Vec<_> = sides.iter().map(|(a, _)| a.clone()).collect();
            let rhs: Vec<_> = sides.iter().map(|(_, b)| b.clone()).collect();
            Evaluation::judge_with(joined(&lhs), joined(&rhs), ok)
        }
        Identity::Support => {
            let bad = support_violations(
                t.get(Param::I),
                t.get(Param::J),
                t.get(Param::K),
                t.get(Param::L),
            );
            Evaluation::judge(bad.len(), 0)
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub params: Tuple,
    pub lhs: String,
    pub rhs: String,
}

/// Field order is the JSON key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub identity: String,
    pub total: usize,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u64,
    pub version: String,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs the sweep with the built-in evaluator on `jobs` worker threads.
pub fn run_sweep(spec: &SweepSpec, jobs: usize) -> Result<SweepReport> {
    run_sweep_with(spec, jobs, evaluate)
}

/// Runs the sweep with a caller-supplied evaluator.
pub fn run_sweep_with<F>(spec: &SweepSpec, jobs: usize, eval: F) -> Result<SweepReport>
where
    F: Fn(Identity, &Tuple, Option<usize>) -> Result<Evaluation> + Sync,
{
    let start = Instant::now();
    let tuples = spec.tuples();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Usage(e.to_string()))?;
    let results: Vec<Result<Evaluation>> = pool.install(|| {
        tuples
            .par_iter()
            .map(|t| eval(spec.identity, t, spec.order))
            .collect()
    });
    let mut failures = Vec::new();
    for (t, r) in tuples.iter().zip(results) {
        let e = r?;
        if !e.ok {
            failures.push(Failure {
                params: t.clone(),
                lhs: e.lhs,
                rhs: e.rhs,
            });
        }
    }
    failures.sort_by(|x, y| x.params.cmp(&y.params));
    Ok(SweepReport {
        identity: spec.identity.name().to_string(),
        total: tuples.len(),
        failures,
        elapsed_ms: if spec.timing {
            start.elapsed().as_millis() as u64
        } else {
            0
        },
        version: VERSION.to_string(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(Error::Usage(format!("unknown format `{s}`"))),
        }
    }
}

pub fn render_report(r: &SweepReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(r).expect("report serializes"),
        Format::Text => render_text(r),
    }
}

fn render_text(r: &SweepReport) -> String {
    let mut out = String::new();
    let status = if r.passed() { "ok" } else { "FAILED" };
    let _ = writeln!(out, "{:<10}{}", "identity", r.identity);
    let _ = writeln!(out, "{:<10}{}", "version", r.version);
    let _ = writeln!(out, "{:<10}{}", "tuples", r.total);
    let _ = writeln!(out, "{:<10}{}", "failures", r.failures.len());
    let _ = writeln!(out, "{:<10}{} ms", "elapsed", r.elapsed_ms);
    let _ = writeln!(out, "{:<10}{}", "status", status);
    if r.failures.is_empty() {
        return out;
    }
    let rows: Vec<(String, &str, &str)> = r
        .failures
        .iter()
        .map(|f| (f.params.to_string(), f.lhs.as_str(), f.rhs.as_str()))
        .collect();
    let wp = rows
        .iter()
        .map(|r| r.0.len())
        .max()
        .unwrap_or(0)
        .max("params".len());
    let wl = rows
        .iter()
        .map(|r| r.1.len())
        .max()
        .unwrap_or(0)
        .max("lhs".len());
    let _ = writeln!(out);
    let _ = writeln!(out, "{:<wp$} | {:<wl$} | rhs", "params", "lhs");
    let _ = writeln!(
        out,
        "{}-+-{}-+-{}",
        "-".repeat(wp),
        "-".repeat(wl),
        "-".repeat(3)
    );
    for (p, l, rr) in rows {
        let _ = writeln!(out, "{p:<wp$} | {l:<wl$} | {rr}");
    }
    out
}

/// Fixed tuples whose rendered `g` and `p` values form the golden corpus.
pub fn golden_tuples() -> Vec<KeyParams> {
    let mut out = Vec::new();
    for (i, j, k) in [
        (0, 0, 0),
        (1, 0, 0),
        (0, 1, 1),
        (1, 1, 1),
        (2, 1, 0),
        (2, 2, 1),
        (1, 2, 3),
        (-1, 1, 1),
    ] {
        for (l, m) in [(0, 0), (2, 3), (4, 4), (5, 3), (3, 6), (-1, 2)] {
            out.push(KeyParams::new(i, j, k, l, m));
        }
    }
    out
}

/// One line per golden tuple: `i j k L M | g | p`.
pub fn golden_corpus() -> String {
    let mut out = String::new();
    for p in golden_tuples() {
        let _ = writeln!(
            out,
            "{} {} {} {} {} | {} | {}",
            p.i,
            p.j,
            p.k,
            p.l,
            p.m,
            lhs_g(&p),
            rhs_p(&p)
        );
    }
    out
}

/// Lines that differ between a stored corpus and a freshly derived one.
pub fn golden_diff(stored: &str) -> Vec<String> {
    let fresh = golden_corpus();
    let (a, b): (Vec<&str>, Vec<&str>) = (stored.lines().collect(), fresh.lines().collect());
    let mut diff = Vec::new();
    for n in 0..a.len().max(b.len()) {
        match (a.get(n), b.get(n)) {
            (Some(x), Some(y)) if x == y => {}
            (x, y) => diff.push(format!(
                "line {}: stored `{}` derived `{}`",
                n + 1,
                x.unwrap_or(&""),
                y.unwrap_or(&"")
            )),
        }
    }
    diff
}
