//! Six-color Type-1 partitions, the staircase bijection, the bounded
//! counting theorem, and Göllnitz's theorem with its residue transform.
//!
//! Colors are ranked `AB < AC < A < BC < B < C`. A Type-1 partition has
//! parts of distinct sizes, part 1 only in a primary color, and adjacent
//! parts differing by at least 1, where a difference of exactly 1 is allowed
//! only if both parts have the same primary color or the larger part has the
//! higher-ranked color.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::keyid::{closed_form_diag, enumerate_sextuples, lhs_g, KeyParams, Sextuple};
use crate::qcore::LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Color {
    AB,
    AC,
    A,
    BC,
    B,
    C,
}

impl Color {
    /// All colors in rank order.
    pub const ALL: [Color; 6] = [
        Color::AB,
        Color::AC,
        Color::A,
        Color::BC,
        Color::B,
        Color::C,
    ];

    pub fn rank(self) -> usize {
        self as usize
    }

    pub fn is_primary(self) -> bool {
        matches!(self, Color::A | Color::B | Color::C)
    }

    /// Contribution `(di, dj, dk)` of one part of this color to the totals.
    pub fn totals(self) -> (i64, i64, i64) {
        match self {
            Color::A => (1, 0, 0),
            Color::B => (0, 1, 0),
            Color::C => (0, 0, 1),
            Color::AB => (1, 1, 0),
            Color::AC => (1, 0, 1),
            Color::BC => (0, 1, 1),
        }
    }

    /// `d` such that a part `n` of this color becomes `6n - d` under the
    /// residue transform.
    pub fn residue_offset(self) -> u64 {
        6 - self.rank() as u64
    }

    pub fn name(self) -> &'static str {
        match self {
            Color::AB => "AB",
            Color::AC => "AC",
            Color::A => "A",
            Color::BC => "BC",
            Color::B => "B",
            Color::C => "C",
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ColoredPart {
    pub value: u32,
    pub color: Color,
}

impl ColoredPart {
    pub fn new(value: u32, color: Color) -> Self {
        Self { value, color }
    }
}

/// May `smaller` sit directly below `larger` in a Type-1 partition?
fn gap_allowed(larger: ColoredPart, smaller: ColoredPart) -> bool {
    if larger.value < smaller.value {
        return false;
    }
    match larger.value - smaller.value {
        0 => false,
        1 => {
            (larger.color == smaller.color && larger.color.is_primary())
                || larger.color.rank() > smaller.color.rank()
        }
        _ => true,
    }
}

fn part_allowed(p: ColoredPart) -> bool {
    p.value >= 2 || (p.value == 1 && p.color.is_primary())
}

/// Parts kept in descending order of `(value, rank)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ColoredPartition {
    parts: Vec<ColoredPart>,
}

impl ColoredPartition {
    pub fn new(mut parts: Vec<ColoredPart>) -> Self {
        parts.sort_by(|x, y| y.cmp(x));
        Self { parts }
    }

    pub fn from_pairs(pairs: &[(u32, Color)]) -> Self {
        Self::new(pairs.iter().map(|&(v, c)| ColoredPart::new(v, c)).collect())
    }

    pub fn parts(&self) -> &[ColoredPart] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|p| p.value as u64).sum()
    }

    pub fn largest(&self) -> u32 {
        self.parts.first().map_or(0, |p| p.value)
    }

    pub fn frequencies(&self) -> Sextuple {
        let mut f = Sextuple::default();
        for p in &self.parts {
            *match p.color {
                Color::A => &mut f.a,
                Color::B => &mut f.b,
                Color::C => &mut f.c,
                Color::AB => &mut f.ab,
                Color::AC => &mut f.ac,
                Color::BC => &mut f.bc,
            } += 1;
        }
        f
    }
}

impl fmt::Display for ColoredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        for (n, p) in self.parts.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}_{}", p.value, p.color)?;
        }
        Ok(())
    }
}

pub fn is_type1(p: &ColoredPartition) -> bool {
    let parts = p.parts();
    parts.iter().all(|&x| part_allowed(x)) && parts.windows(2).all(|w| gap_allowed(w[0], w[1]))
}

fn require_type1(p: &ColoredPartition) -> Result<()> {
    if is_type1(p) {
        Ok(())
    } else {
        Err(Error::NotType1(p.to_string()))
    }
}

/// Depth-first enumeration of Type-1 partitions with parts `<= max_part`.
///
/// `prune` sees every prefix (largest parts first) and cuts the subtree when
/// it returns true, so it must be monotone under adding smaller parts.
/// `visit` sees every surviving partition, the empty one included.
pub fn for_each_type1<P, V>(max_part: u32, prune: P, mut visit: V)
where
    P: Fn(&[ColoredPart]) -> bool,
    V: FnMut(&[ColoredPart]),
{
    fn go<P, V>(prefix: &mut Vec<ColoredPart>, below: u32, prune: &P, visit: &mut V)
    where
        P: Fn(&[ColoredPart]) -> bool,
        V: FnMut(&[ColoredPart]),
    {
        visit(prefix);
        for v in (1..=below).rev() {
            for color in Color::ALL {
                let part = ColoredPart::new(v, color);
                if !part_allowed(part)
                    || prefix.last().is_some_and(|&last| !gap_allowed(last, part))
                {
                    continue;
                }
                prefix.push(part);
                if !prune(prefix) {
                    go(prefix, v - 1, prune, visit);
                }
                prefix.pop();
            }
        }
    }
    let mut prefix = Vec::new();
    go(&mut prefix, max_part, &prune, &mut visit);
}

fn prefix_totals(parts: &[ColoredPart]) -> (i64, i64, i64) {
    parts.iter().fold((0, 0, 0), |acc, p| {
        let d = p.color.totals();
        (acc.0 + d.0, acc.1 + d.1, acc.2 + d.2)
    })
}

fn prefix_weight(parts: &[ColoredPart]) -> u64 {
    parts.iter().map(|p| p.value as u64).sum()
}

/// All Type-1 partitions with parts `<= max_part` and color totals `(i, j, k)`.
pub fn type1_with_totals(max_part: u32, i: i64, j: i64, k: i64) -> Vec<ColoredPartition> {
    let mut out = Vec::new();
    for_each_type1(
        max_part,
        |pre| {
            let (a, b, c) = prefix_totals(pre);
            a > i || b > j || c > k
        },
        |parts| {
            if prefix_totals(parts) == (i, j, k) {
                out.push(ColoredPartition::new(parts.to_vec()));
            }
        },
    );
    out
}

/// `G_L(n; freq)`: Type-1 partitions of `n` with largest part `<= L` and the
/// given color frequencies, counted exhaustively.
pub fn count_g(l: i64, n: i64, freq: &Sextuple) -> u64 {
    if l < 0 || n < 0 {
        return 0;
    }
    let limit = |c: Color| match c {
        Color::A => freq.a,
        Color::B => freq.b,
        Color::C => freq.c,
        Color::AB => freq.ab,
        Color::AC => freq.ac,
        Color::BC => freq.bc,
    };
    let mut count = 0;
    for_each_type1(
        l as u32,
        |pre| {
            prefix_weight(pre) > n as u64
                || Color::ALL
                    .iter()
                    .any(|&c| pre.iter().filter(|p| p.color == c).count() as i64 > limit(c))
        },
        |parts| {
            if prefix_weight(parts) == n as u64
                && ColoredPartition::new(parts.to_vec()).frequencies() == *freq
            {
                count += 1;
            }
        },
    );
    count
}

/// Three lists of distinct parts in colors `A`, `B`, `C` (each descending).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TriColorPartition {
    pub a: Vec<u32>,
    pub b: Vec<u32>,
    pub c: Vec<u32>,
}

impl TriColorPartition {
    pub fn weight(&self) -> u64 {
        self.a
            .iter()
            .chain(&self.b)
            .chain(&self.c)
            .map(|&v| v as u64)
            .sum()
    }

    /// Distinct parts per color, `i` parts `<= L-k` in `A`, `j` parts
    /// `<= L-i` in `B`, `k` parts `<= L-j` in `C`.
    pub fn satisfies_bounds(&self, l: i64, i: i64, j: i64, k: i64) -> bool {
        let ok = |xs: &[u32], count: i64, bound: i64| {
            xs.len() as i64 == count
                && xs.windows(2).all(|w| w[0] > w[1])
                && xs.iter().all(|&v| v >= 1 && (v as i64) <= bound)
        };
        ok(&self.a, i, l - k) && ok(&self.b, j, l - i) && ok(&self.c, k, l - j)
    }
}

/// Descending `count`-subsets of `{1..=bound}`.
fn distinct_subsets(bound: i64, count: i64) -> Vec<Vec<u32>> {
    fn go(top: u32, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for v in (left as u32..=top).rev() {
            cur.push(v);
            go(v - 1, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if count < 0 || bound < count {
        return out;
    }
    go(
        bound.max(0) as u32,
        count as usize,
        &mut Vec::new(),
        &mut out,
    );
    out
}

pub fn tricolor_partitions(l: i64, i: i64, j: i64, k: i64) -> Vec<TriColorPartition> {
    let (sa, sb, sc) = (
        distinct_subsets(l - k, i),
        distinct_subsets(l - i, j),
        distinct_subsets(l - j, k),
    );
    let mut out = Vec::with_capacity(sa.len() * sb.len() * sc.len());
    for a in &sa {
        for b in &sb {
            for c in &sc {
                out.push(TriColorPartition {
                    a: a.clone(),
                    b: b.clone(),
                    c: c.clone(),
                });
            }
        }
    }
    out
}

/// `P_L(n; i, j, k)`.
pub fn count_p(l: i64, n: i64, i: i64, j: i64, k: i64) -> u64 {
    tricolor_partitions(l, i, j, k)
        .iter()
        .filter(|p| p.weight() as i64 == n)
        .count() as u64
}

fn counts_to_poly(counts: &BTreeMap<u64, u64>) -> LaurentPoly {
    LaurentPoly::from_terms(counts.iter().map(|(&n, &c)| (n as i64, c as i64)))
}

/// Outcome of the bounded counting theorem at one `(L, i, j, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem1Report {
    /// `Σ_freq G_L(n; freq)` per weight `n`.
    pub g_counts: BTreeMap<u64, u64>,
    /// `P_L(n; i, j, k)` per weight `n`.
    pub p_counts: BTreeMap<u64, u64>,
    pub g_matches_lhs: bool,
    pub p_matches_closed_form: bool,
}

impl Theorem1Report {
    pub fn holds(&self) -> bool {
        self.g_counts == self.p_counts && self.g_matches_lhs && self.p_matches_closed_form
    }
}

pub fn theorem1_report(l: i64, i: i64, j: i64, k: i64) -> Result<Theorem1Report> {
    let need = (i + j).max(j + k).max(k + i);
    if l < need || i < 0 || j < 0 || k < 0 {
        return Err(Error::PreconditionViolated(format!(
            "need L >= max(i+j, j+k, k+i) = {need} and i, j, k >= 0; got L = {l}, (i, j, k) = ({i}, {j}, {k})"
        )));
    }
    // G_L(n; freq) for every admissible frequency record, then summed over freq
    let mut per_freq: BTreeMap<(Sextuple, u64), u64> = BTreeMap::new();
    for p in type1_with_totals(l as u32, i, j, k) {
        *per_freq.entry((p.frequencies(), p.weight())).or_default() += 1;
    }
    let admissible = enumerate_sextuples(i, j, k);
    let mut g_counts = BTreeMap::new();
    for ((freq, n), c) in per_freq {
        debug_assert!(admissible.contains(&freq));
        *g_counts.entry(n).or_default() += c;
    }
    let mut p_counts = BTreeMap::new();
    for p in tricolor_partitions(l, i, j, k) {
        *p_counts.entry(p.weight()).or_default() += 1;
    }
    let g_matches_lhs = counts_to_poly(&g_counts) == lhs_g(&KeyParams::new(i, j, k, l, l));
    let p_matches_closed_form = counts_to_poly(&p_counts) == closed_form_diag(i, j, k, l);
    Ok(Theorem1Report {
        g_counts,
        p_counts,
        g_matches_lhs,
        p_matches_closed_form,
    })
}

/// Bounded counting theorem: the Type-1 count refined by `(i, j, k)` equals
/// the three-color count for every weight, and both generating polynomials
/// match the algebraic side.
pub fn check_theorem1(l: i64, i: i64, j: i64, k: i64) -> Result<bool> {
    Ok(theorem1_report(l, i, j, k)?.holds())
}

/// The six monochromatic pieces left after staircase subtraction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct StaircaseImage {
    /// Parts per color, indexed by [`Color::rank`], each in descending order.
    by_color: [Vec<u32>; 6],
    freq: Sextuple,
    t: i64,
}

impl StaircaseImage {
    pub fn new(parts: &[(u32, Color)]) -> Self {
        let mut by_color: [Vec<u32>; 6] = Default::default();
        for &(v, c) in parts {
            by_color[c.rank()].push(v);
        }
        for v in &mut by_color {
            v.sort_unstable_by(|x, y| y.cmp(x));
        }
        let freq = ColoredPartition::from_pairs(parts).frequencies();
        Self {
            by_color,
            t: freq.t(),
            freq,
        }
    }

    pub fn part(&self, color: Color) -> &[u32] {
        &self.by_color[color.rank()]
    }

    pub fn frequencies(&self) -> Sextuple {
        self.freq
    }

    pub fn t(&self) -> i64 {
        self.t
    }

    pub fn weight(&self) -> u64 {
        self.by_color.iter().flatten().map(|&v| v as u64).sum()
    }

    pub fn largest(&self) -> Option<u32> {
        self.by_color.iter().flatten().copied().max()
    }

    /// Every part is at most `L - t`.
    pub fn fits_bound(&self, l: i64) -> bool {
        self.largest().is_none_or(|m| m as i64 <= l - self.t)
    }

    /// Checks the intrinsic image conditions: secondary colors have distinct
    /// parts, `AB` and `AC` parts are positive, and `BC` may contain 0 only
    /// when `A` does.
    pub fn validate(&self) -> Result<()> {
        for c in [Color::AB, Color::AC, Color::BC] {
            if self.part(c).windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidImage(format!("repeated part in color {c}")));
            }
        }
        for c in [Color::AB, Color::AC] {
            if self.part(c).contains(&0) {
                return Err(Error::InvalidImage(format!("color {c} has a zero part")));
            }
        }
        if self.part(Color::BC).contains(&0) && !self.part(Color::A).contains(&0) {
            return Err(Error::InvalidImage(
                "BC has a zero part but A does not".into(),
            ));
        }
        let counted: i64 = self.by_color.iter().map(|v| v.len() as i64).sum();
        if counted != self.t || self.freq.t() != self.t {
            return Err(Error::InvalidImage(
                "frequency record disagrees with parts".into(),
            ));
        }
        Ok(())
    }
}

/// Subtracts 1, 2, ..., t from the parts in increasing order.
pub fn staircase_forward(p: &ColoredPartition) -> Result<StaircaseImage> {
    require_type1(p)?;
    let parts: Vec<(u32, Color)> = p
        .parts()
        .iter()
        .rev()
        .enumerate()
        .map(|(r, x)| (x.value - (r as u32 + 1), x.color))
        .collect();
    Ok(StaircaseImage::new(&parts))
}

/// Inverse of [`staircase_forward`]: parts are ordered by `(value, rank)`
/// and 1, 2, ..., t added back.
pub fn staircase_inverse(img: &StaircaseImage) -> Result<ColoredPartition> {
    img.validate()?;
    let mut parts: Vec<(u32, Color)> = Color::ALL
        .iter()
        .flat_map(|&c| img.part(c).iter().map(move |&v| (v, c)))
        .collect();
    parts.sort_by_key(|&(v, c)| (v, c.rank()));
    let out = ColoredPartition::new(
        parts
            .into_iter()
            .enumerate()
            .map(|(r, (v, c))| ColoredPart::new(v + r as u32 + 1, c))
            .collect(),
    );
    if !is_type1(&out) {
        return Err(Error::InvalidImage(format!(
            "reconstruction {out} is not Type-1"
        )));
    }
    Ok(out)
}

/// Distinct parts from `{n : n mod 6 in {2, 4, 5}}`.
pub fn gollnitz_b_partitions(n: u64) -> Vec<Vec<u64>> {
    fn go(rem: u64, below: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for v in (1..=below.min(rem)).rev() {
            if matches!(v % 6, 2 | 4 | 5) {
                cur.push(v);
                go(rem - v, v - 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Is `parts` (descending) a partition of the difference-condition kind:
/// no part equal to 1 or 3, consecutive differences at least 6, and strictly
/// more than 6 below a part congruent to 0, 1 or 3 mod 6?
pub fn is_c_partition(parts: &[u64]) -> bool {
    parts.iter().all(|&m| m >= 2 && m != 3)
        && parts.windows(2).all(|w| {
            let need = if matches!(w[0] % 6, 0 | 1 | 3) { 7 } else { 6 };
            w[0] >= w[1] + need
        })
}

pub fn gollnitz_c_partitions(n: u64) -> Vec<Vec<u64>> {
    fn go(rem: u64, below: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for v in (2..=below.min(rem)).rev() {
            if v == 3 {
                continue;
            }
            let gap = if matches!(v % 6, 0 | 1 | 3) { 7 } else { 6 };
            cur.push(v);
            go(rem - v, v.saturating_sub(gap), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `B(n)`.
pub fn gollnitz_b(n: u64) -> u64 {
    gollnitz_b_partitions(n).len() as u64
}

/// `C(n)`.
pub fn gollnitz_c(n: u64) -> u64 {
    gollnitz_c_partitions(n).len() as u64
}

/// Maps part `n` of color `X` to `6n - d(X)` with `d = 4, 2, 1, 6, 5, 3` for
/// `A, B, C, AB, AC, BC`. The result is in descending order.
pub fn remark3_transform(p: &ColoredPartition) -> Result<Vec<u64>> {
    require_type1(p)?;
    Ok(p.parts()
        .iter()
        .map(|x| 6 * x.value as u64 - x.color.residue_offset())
        .collect())
}

/// Image weight of a partition under [`remark3_transform`].
pub fn transformed_weight(parts: &[ColoredPart]) -> u64 {
    parts
        .iter()
        .map(|x| 6 * x.value as u64 - x.color.residue_offset())
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use Color::*;

    fn cp(pairs: &[(u32, Color)]) -> ColoredPartition {
        ColoredPartition::from_pairs(pairs)
    }

    #[test]
    fn rank_order_and_primaries() {
        let ranks: Vec<_> = Color::ALL.iter().map(|c| c.rank()).collect();
        assert_eq!(ranks, vec![0, 1, 2, 3, 4, 5]);
        assert!(AB < AC && AC < A && A < BC && BC < B && B < C);
        let primaries: Vec<_> = Color::ALL.into_iter().filter(|c| c.is_primary()).collect();
        assert_eq!(primaries, vec![A, B, C]);
    }

    #[test]
    fn type1_examples() {
        assert!(is_type1(&cp(&[])));
        assert!(is_type1(&cp(&[(2, BC), (1, A)])));
        assert!(!is_type1(&cp(&[(2, AB), (1, C)])));
        assert!(is_type1(&cp(&[(2, A), (1, A)])));
        assert!(!is_type1(&cp(&[(3, BC), (2, BC)])));
        assert!(is_type1(&cp(&[(4, BC), (2, BC)])));
        assert!(!is_type1(&cp(&[(1, AB)])));
        assert!(!is_type1(&cp(&[(3, A), (3, B)])));
    }

    #[test]
    fn staircase_examples() {
        let img = staircase_forward(&cp(&[])).unwrap();
        assert_eq!(img.t(), 0);
        assert_eq!(staircase_inverse(&img).unwrap(), cp(&[]));

        let img = staircase_forward(&cp(&[(2, A)])).unwrap();
        assert_eq!(img.part(A), &[1]);
        assert_eq!(img.t(), 1);
        assert_eq!(staircase_inverse(&img).unwrap(), cp(&[(2, A)]));

        let img = staircase_forward(&cp(&[(3, B), (1, A)])).unwrap();
        assert_eq!(img.part(A), &[0]);
        assert_eq!(img.part(B), &[1]);
        assert_eq!(img.t(), 2);
        assert_eq!(staircase_inverse(&img).unwrap(), cp(&[(3, B), (1, A)]));
    }

    #[test]
    fn staircase_rejects_bad_inputs() {
        assert!(matches!(
            staircase_forward(&cp(&[(2, AB), (1, C)])),
            Err(Error::NotType1(_))
        ));
        let lonely_bc = StaircaseImage::new(&[(0, BC)]);
        assert!(matches!(
            staircase_inverse(&lonely_bc),
            Err(Error::InvalidImage(_))
        ));
        let repeated = StaircaseImage::new(&[(2, AC), (2, AC)]);
        assert!(matches!(
            staircase_inverse(&repeated),
            Err(Error::InvalidImage(_))
        ));
        let zero_ab = StaircaseImage::new(&[(0, AB), (0, A)]);
        assert!(matches!(
            staircase_inverse(&zero_ab),
            Err(Error::InvalidImage(_))
        ));
        let ok = StaircaseImage::new(&[(0, BC), (0, A)]);
        assert_eq!(staircase_inverse(&ok).unwrap(), cp(&[(2, BC), (1, A)]));
    }

    #[test]
    fn count_g_examples() {
        assert_eq!(count_g(1, 1, &Sextuple::new(1, 0, 0, 0, 0, 0)), 1);
        assert_eq!(count_g(4, 0, &Sextuple::default()), 1);
        assert_eq!(count_g(3, 3, &Sextuple::new(0, 0, 0, 0, 0, 1)), 1);
    }

    #[test]
    fn count_p_examples() {
        assert_eq!(count_p(3, 3, 1, 1, 1), 1);
        assert_eq!(count_p(5, 0, 0, 0, 0), 1);
        assert_eq!(count_p(4, 6, 2, 0, 0), 1);
    }

    #[test]
    fn theorem1_examples() {
        assert!(check_theorem1(2, 1, 1, 1).unwrap());
        assert!(check_theorem1(0, 0, 0, 0).unwrap());
        assert!(check_theorem1(5, 2, 1, 1).unwrap());
        assert!(matches!(
            check_theorem1(1, 1, 1, 1),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn gollnitz_examples() {
        assert_eq!((gollnitz_b(6), gollnitz_c(6)), (1, 1));
        assert_eq!((gollnitz_b(0), gollnitz_c(0)), (1, 1));
        assert_eq!(gollnitz_b(11), 2);
        assert_eq!(gollnitz_b_partitions(11), vec![vec![11], vec![5, 4, 2]]);
    }

    #[test]
    fn remark3_examples() {
        assert_eq!(remark3_transform(&cp(&[(1, A)])).unwrap(), vec![2]);
        assert_eq!(remark3_transform(&cp(&[])).unwrap(), Vec::<u64>::new());
        assert!(matches!(
            remark3_transform(&cp(&[(2, AB), (1, B)])),
            Err(Error::NotType1(_))
        ));
        let offsets: Vec<_> = [A, B, C, AB, AC, BC]
            .iter()
            .map(|c| c.residue_offset())
            .collect();
        assert_eq!(offsets, vec![4, 2, 1, 6, 5, 3]);
    }
}
