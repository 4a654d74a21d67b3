//! The doubly bounded key identity `g_{i,j,k}(L,M) = p_{i,j,k}(L,M)`, its
//! recurrences in `L`, the diagonal boundary, the `L = M` closed form, the
//! `i = 0` specialization, and the `L, M → ∞` limit.
//!
//! `g` is a sum over sextuples `(a, b, c, ab, ac, bc)` of nonnegative
//! integers with `i = a+ab+ac`, `j = b+ab+bc`, `k = c+ac+bc`; `ab` is one
//! variable, not a product. `p` is a single finite sum over `s`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qcomb::{qbinom_is_nonzero, qbinom_shared, qfactorial, qmultinom, triangular};
use crate::qcore::{LaurentPoly, TruncSeries};

/// Color-class totals `i, j, k` and part-size bounds `L` (field `l`) and `M` (field `m`).
///
/// Any integers are allowed, negative ones included.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct KeyParams {
    pub i: i64,
    pub j: i64,
    pub k: i64,
    pub l: i64,
    pub m: i64,
}

impl KeyParams {
    pub fn new(i: i64, j: i64, k: i64, l: i64, m: i64) -> Self {
        Self { i, j, k, l, m }
    }

    fn with(self, di: i64, dj: i64, dk: i64, dl: i64, dm: i64) -> Self {
        Self::new(
            self.i + di,
            self.j + dj,
            self.k + dk,
            self.l + dl,
            self.m + dm,
        )
    }
}

/// Frequencies of the six colors `A, B, C, AB, AC, BC` in a Type-1 partition.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Sextuple {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub ab: i64,
    pub ac: i64,
    pub bc: i64,
}

impl Sextuple {
    pub fn new(a: i64, b: i64, c: i64, ab: i64, ac: i64, bc: i64) -> Self {
        Self {
            a,
            b,
            c,
            ab,
            ac,
            bc,
        }
    }

    /// Total number of parts.
    pub fn t(&self) -> i64 {
        self.a + self.b + self.c + self.ab + self.ac + self.bc
    }

    /// The `(i, j, k)` this sextuple contributes to.
    pub fn totals(&self) -> (i64, i64, i64) {
        (
            self.a + self.ab + self.ac,
            self.b + self.ab + self.bc,
            self.c + self.ac + self.bc,
        )
    }
}

/// All sextuples with the given totals, lexicographic in `(ab, ac, bc)`.
pub fn enumerate_sextuples(i: i64, j: i64, k: i64) -> Vec<Sextuple> {
    let mut out = Vec::new();
    if i < 0 || j < 0 || k < 0 {
        return out;
    }
    for ab in 0..=i.min(j) {
        for ac in 0..=(i - ab).min(k) {
            for bc in 0..=(j - ab).min(k - ac) {
                out.push(Sextuple::new(
                    i - ab - ac,
                    j - ab - bc,
                    k - ac - bc,
                    ab,
                    ac,
                    bc,
                ));
            }
        }
    }
    out
}

/// `q^exp · Π [top; bottom]`, short-circuiting on a vanishing factor.
fn binomial_product(exp: i64, factors: &[(i64, i64)]) -> LaurentPoly {
    if !factors.iter().all(|&(t, b)| qbinom_is_nonzero(t, b)) {
        return LaurentPoly::zero();
    }
    let mut acc = LaurentPoly::q_pow(exp);
    for &(t, b) in factors {
        let f = qbinom_shared(t, b);
        if !f.is_one() {
            acc = &acc * &*f;
        }
    }
    acc
}

fn first_factors(p: &KeyParams, s: &Sextuple) -> [(i64, i64); 6] {
    let (l, m, t) = (p.l, p.m, s.t());
    [
        (l - t + s.a, s.a),
        (l - t + s.b, s.b),
        (m - t + s.c, s.c),
        (l - t, s.ab),
        (m - t, s.ac),
        (m - t, s.bc),
    ]
}

fn second_factors(p: &KeyParams, s: &Sextuple) -> [(i64, i64); 6] {
    let (l, m, t) = (p.l, p.m, s.t());
    [
        (l - t + s.a - 1, s.a - 1),
        (l - t + s.b, s.b),
        (m - t + s.c, s.c),
        (l - t, s.ab),
        (m - t, s.ac),
        (m - t, s.bc - 1),
    ]
}

/// Summand of the first sum of `g` at one sextuple.
pub fn first_summand(p: &KeyParams, s: &Sextuple) -> LaurentPoly {
    let exp = triangular(s.t()) + triangular(s.ab) + triangular(s.ac) + triangular(s.bc);
    binomial_product(exp, &first_factors(p, s))
}

/// Summand of the second sum of `g` at one sextuple.
pub fn second_summand(p: &KeyParams, s: &Sextuple) -> LaurentPoly {
    let exp = triangular(s.t()) + triangular(s.ab) + triangular(s.ac) + triangular(s.bc - 1);
    binomial_product(exp, &second_factors(p, s))
}

/// Nonvanishing of the two summands, decided from the binomial supports
/// alone (a product of nonzero Laurent polynomials is nonzero).
pub fn summands_nonzero(p: &KeyParams, s: &Sextuple) -> (bool, bool) {
    let nz = |f: [(i64, i64); 6]| f.iter().all(|&(t, b)| qbinom_is_nonzero(t, b));
    (nz(first_factors(p, s)), nz(second_factors(p, s)))
}

/// The two sums making up `g`, kept apart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LhsParts {
    /// Partitions whose staircase image has no `BC` part equal to 0.
    pub first: LaurentPoly,
    /// Partitions whose staircase image has `0` among both its `A` and `BC` parts.
    pub second: LaurentPoly,
}

impl LhsParts {
    pub fn total(&self) -> LaurentPoly {
        &self.first + &self.second
    }
}

pub fn lhs_g_parts(p: &KeyParams) -> LhsParts {
    let mut first = LaurentPoly::zero();
    let mut second = LaurentPoly::zero();
    for s in enumerate_sextuples(p.i, p.j, p.k) {
        first += first_summand(p, &s);
        second += second_summand(p, &s);
    }
    LhsParts { first, second }
}

/// Left side `g_{i,j,k}(L, M)` of the key identity.
pub fn lhs_g(p: &KeyParams) -> LaurentPoly {
    lhs_g_parts(p).total()
}

/// Right side `p_{i,j,k}(L, M)`:
/// `Σ_s q^(s(M+2) - T_s + T_{i-s} + T_{j-s} + T_{k-s}) [L-s; s, i-s, j-s] [M-i-j; k-s]`.
pub fn rhs_p(p: &KeyParams) -> LaurentPoly {
    let KeyParams { i, j, k, l, m } = *p;
    if i < 0 || j < 0 || k < 0 {
        return LaurentPoly::zero();
    }
    let mut acc = LaurentPoly::zero();
    for s in 0..=i.min(j).min(k) {
        let tail = qbinom_shared(m - i - j, k - s);
        if tail.is_zero() {
            continue;
        }
        let multi = qmultinom(l - s, &[s, i - s, j - s]);
        if multi.is_zero() {
            continue;
        }
        let exp =
            s * (m + 2) - triangular(s) + triangular(i - s) + triangular(j - s) + triangular(k - s);
        acc += (multi * &*tail).shifted(exp);
    }
    acc
}

pub fn check_key(p: &KeyParams) -> bool {
    lhs_g(p) == rhs_p(p)
}

/// Expected value of `g_{i,j,k}(i+j-1, M)`: `δ_{i,0} δ_{j,0} q^(T_k) [M-i-j; k]`.
pub fn boundary_value(i: i64, j: i64, k: i64, m: i64) -> LaurentPoly {
    if i != 0 || j != 0 {
        return LaurentPoly::zero();
    }
    qbinom_shared(m, k).shift(triangular(k))
}

/// Second order recurrence in `L` shared by `g` and `p`:
///
/// ```text
/// f(L,M) = f(L-1,M) + q^L f_{i-1}(L-1,M-1) + q^L f_{j-1}(L-1,M-1)
///        + q^L f_{i-1,j-1}(L-2,M-1) - q^(2L-1) f_{i-1,j-1}(L-2,M-2)
/// ```
pub fn second_order_recurrence_sides<F>(f: F, p: &KeyParams) -> (LaurentPoly, LaurentPoly)
where
    F: Fn(&KeyParams) -> LaurentPoly,
{
    let l = p.l;
    let rhs = f(&p.with(0, 0, 0, -1, 0))
        + f(&p.with(-1, 0, 0, -1, -1)).shifted(l)
        + f(&p.with(0, -1, 0, -1, -1)).shifted(l)
        + f(&p.with(-1, -1, 0, -2, -1)).shifted(l)
        - f(&p.with(-1, -1, 0, -2, -2)).shifted(2 * l - 1);
    (f(p), rhs)
}

pub fn second_order_recurrence_holds<F>(f: F, p: &KeyParams) -> bool
where
    F: Fn(&KeyParams) -> LaurentPoly,
{
    let (lhs, rhs) = second_order_recurrence_sides(f, p);
    lhs == rhs
}

pub fn check_recurrence_g(p: &KeyParams) -> bool {
    second_order_recurrence_holds(lhs_g, p)
}

pub fn check_recurrence_p(p: &KeyParams) -> bool {
    second_order_recurrence_holds(rhs_p, p)
}

/// Both sides of the fourth order (in `L` and `M` jointly) twelve-term
/// recurrence for `g`.
pub fn andrews_recurrence_sides(p: &KeyParams) -> (LaurentPoly, LaurentPoly) {
    let (l, m) = (p.l, p.m);
    let g = |di, dj, dk, d: i64| lhs_g(&p.with(di, dj, dk, -d, -d));
    let one_minus = LaurentPoly::one() - LaurentPoly::q_pow(l - 1);
    let rhs = g(0, 0, 0, 1)
        + g(-1, 0, 0, 1).shifted(l)
        + g(0, -1, 0, 1).shifted(l)
        + g(0, 0, -1, 1).shifted(m)
        + one_minus
            * (g(-1, -1, 0, 2).shifted(l)
                + g(-1, 0, -1, 2).shifted(m)
                + g(0, -1, -1, 2).shifted(m))
        + g(-1, -1, -1, 3).shifted(2 * l + m - 3)
        + g(-2, -1, -1, 3).shifted(l + m - 1)
        + g(-1, -2, -1, 3).shifted(l + m - 1)
        + g(-1, -1, -2, 3).shifted(2 * m - 1)
        + g(-2, -2, -2, 4).shifted(l + 2 * m - 3);
    (lhs_g(p), rhs)
}

pub fn check_recurrence_andrews(p: &KeyParams) -> bool {
    let (lhs, rhs) = andrews_recurrence_sides(p);
    lhs == rhs
}

/// `q^(T_i+T_j+T_k) [L-k; i] [L-i; j] [L-j; k]`, the value of `p_{i,j,k}(L, L)`.
pub fn closed_form_diag(i: i64, j: i64, k: i64, l: i64) -> LaurentPoly {
    binomial_product(
        triangular(i) + triangular(j) + triangular(k),
        &[(l - k, i), (l - i, j), (l - j, k)],
    )
}

/// Both sides of the `i = 0` specialization:
/// `Σ_bc q^(T_{b+c+bc} + T_bc) [L-k; j-bc] [M-j; k-bc] [M-b-c-bc; bc]`
/// and `q^(T_j+T_k) [L; j] [M-j; k]`.
pub fn schur_sides(j: i64, k: i64, l: i64, m: i64) -> (LaurentPoly, LaurentPoly) {
    let mut lhs = LaurentPoly::zero();
    if j >= 0 && k >= 0 {
        for bc in 0..=j.min(k) {
            let (b, c) = (j - bc, k - bc);
            lhs += binomial_product(
                triangular(b + c + bc) + triangular(bc),
                &[(l - k, j - bc), (m - j, k - bc), (m - b - c - bc, bc)],
            );
        }
    }
    let rhs = binomial_product(triangular(j) + triangular(k), &[(l, j), (m - j, k)]);
    (lhs, rhs)
}

/// True iff both sides of the `i = 0` case agree with each other and with
/// `g_{0,j,k}(L,M)` and `p_{0,j,k}(L,M)`.
pub fn check_schur_case(j: i64, k: i64, l: i64, m: i64) -> bool {
    let (lhs, rhs) = schur_sides(j, k, l, m);
    let p = KeyParams::new(0, j, k, l, m);
    lhs == rhs && lhs == lhs_g(&p) && rhs == rhs_p(&p)
}

fn check_order(order: usize) -> Result<()> {
    if order == 0 {
        Err(Error::ZeroOrder)
    } else {
        Ok(())
    }
}

/// `1 / Π (q)_{n}` over the given lengths, modulo `q^order`.
pub(crate) fn inv_qfactorial_product(lengths: &[i64], order: usize) -> Result<TruncSeries> {
    let mut denom = LaurentPoly::one();
    for &n in lengths {
        denom = (denom * qfactorial(n)?).truncate_below(order as i64);
    }
    TruncSeries::from_poly(&denom, order)?.recip()
}

/// Left side of the unbounded key identity modulo `q^order`:
/// `Σ q^(T_t+T_ab+T_ac+T_{bc-1}) (1 - q^a + q^(a+bc)) / ((q)_a (q)_b (q)_c (q)_ab (q)_ac (q)_bc)`.
pub fn key_limit_lhs(i: i64, j: i64, k: i64, order: usize) -> Result<TruncSeries> {
    check_order(order)?;
    let mut acc = TruncSeries::zero(order);
    for s in enumerate_sextuples(i, j, k) {
        let exp = triangular(s.t()) + triangular(s.ab) + triangular(s.ac) + triangular(s.bc - 1);
        // numerator has constant term 1, so the whole summand is O(q^exp)
        if exp >= order as i64 {
            continue;
        }
        let numer = LaurentPoly::one() - LaurentPoly::q_pow(s.a) + LaurentPoly::q_pow(s.a + s.bc);
        let numer = TruncSeries::from_poly(&numer.shift(exp), order)?;
        let inv = inv_qfactorial_product(&[s.a, s.b, s.c, s.ab, s.ac, s.bc], order)?;
        acc = &acc + &(&numer * &inv);
    }
    Ok(acc)
}

/// Right side of the unbounded key identity: `q^(T_i+T_j+T_k) / ((q)_i (q)_j (q)_k)`.
pub fn key_limit_rhs(i: i64, j: i64, k: i64, order: usize) -> Result<TruncSeries> {
    check_order(order)?;
    if i < 0 || j < 0 || k < 0 {
        return Ok(TruncSeries::zero(order));
    }
    let exp = (triangular(i) + triangular(j) + triangular(k)) as usize;
    let mono = TruncSeries::monomial(1, exp, order);
    Ok(&mono * &inv_qfactorial_product(&[i, j, k], order)?)
}

/// Sextuples of `g_{i,j,k}(L, L)` with a nonvanishing summand but `L - t < 0`.
///
/// Empty whenever `L >= max(i+j, j+k, k+i)`.
pub fn support_violations(i: i64, j: i64, k: i64, l: i64) -> Vec<Sextuple> {
    let p = KeyParams::new(i, j, k, l, l);
    enumerate_sextuples(i, j, k)
        .into_iter()
        .filter(|s| {
            let (first, second) = summands_nonzero(&p, s);
            (first || second) && l - s.t() < 0
        })
        .collect()
}
