//! q-combinatorial primitives: triangular numbers, q-Pochhammer products,
//! Gaussian binomial and multinomial coefficients at arbitrary integer
//! arguments, and the recurrences they satisfy.
//!
//! Binomials with `top >= bottom >= 0` come from a shared q-Pascal table
//! that grows row by row on demand. Negative tops are reduced to that table
//! by the reflection
//!
//! ```text
//! [-α; k] = (-1)^k [k+α-1; k] q^(-αk - T(k-1))
//! ```
//!
//! so every value stays a Laurent polynomial and nothing is ever divided.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qcore::LaurentPoly;

/// `n(n+1)/2` for every integer `n`; note `T(-1) = T(0) = 0` and `T(-2) = 1`.
pub fn triangular(n: i64) -> i64 {
    n * (n + 1) / 2
}

/// `(q^k; q)_n = Π_{j=0}^{n-1} (1 - q^(k+j))` for `n >= 0`.
pub fn poch_qpow(k: i64, n: i64) -> Result<LaurentPoly> {
    if n < 0 {
        return Err(Error::NegativeLength(n));
    }
    Ok((0..n)
        .map(|j| LaurentPoly::one() - LaurentPoly::q_pow(k + j))
        .product())
}

/// `(q; q)_n`.
pub fn qfactorial(n: i64) -> Result<LaurentPoly> {
    poch_qpow(1, n)
}

struct BinomTable {
    /// `rows[n][k] = [n; k]` for `0 <= k <= n`.
    rows: Vec<Vec<Arc<LaurentPoly>>>,
    negative: HashMap<(i64, i64), Arc<LaurentPoly>>,
}

static TABLE: LazyLock<RwLock<BinomTable>> = LazyLock::new(|| {
    RwLock::new(BinomTable {
        rows: vec![vec![Arc::new(LaurentPoly::one())]],
        negative: HashMap::new(),
    })
});

static ZERO: LazyLock<Arc<LaurentPoly>> = LazyLock::new(|| Arc::new(LaurentPoly::zero()));

fn nonneg_binom(top: usize, bottom: usize) -> Arc<LaurentPoly> {
    debug_assert!(bottom <= top);
    {
        let table = TABLE.read().unwrap();
        if let Some(row) = table.rows.get(top) {
            return Arc::clone(&row[bottom]);
        }
    }
    let mut table = TABLE.write().unwrap();
    while table.rows.len() <= top {
        let n = table.rows.len();
        let prev = &table.rows[n - 1];
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            // [n; k] = [n-1; k] + q^(n-k) [n-1; k-1]
            let mut v = if k < n {
                (*prev[k]).clone()
            } else {
                LaurentPoly::zero()
            };
            if k > 0 {
                v += prev[k - 1].shift((n - k) as i64);
            }
            row.push(Arc::new(v));
        }
        table.rows.push(row);
    }
    Arc::clone(&table.rows[top][bottom])
}

/// Shared handle to `[top; bottom]`, see [`qbinom`].
pub fn qbinom_shared(top: i64, bottom: i64) -> Arc<LaurentPoly> {
    if bottom < 0 || (top >= 0 && top < bottom) {
        return Arc::clone(&ZERO);
    }
    if top >= 0 {
        return nonneg_binom(top as usize, bottom as usize);
    }
    if let Some(v) = TABLE.read().unwrap().negative.get(&(top, bottom)) {
        return Arc::clone(v);
    }
    let alpha = -top;
    let k = bottom;
    let base = nonneg_binom((k + alpha - 1) as usize, k as usize);
    let mut v = base.shift(-alpha * k - triangular(k - 1));
    if k % 2 == 1 {
        v = -v;
    }
    let v = Arc::new(v);
    TABLE
        .write()
        .unwrap()
        .negative
        .insert((top, bottom), Arc::clone(&v));
    v
}

/// The Gaussian binomial `[top; bottom]` for all integer arguments.
///
/// Zero when `bottom < 0` or `0 <= top < bottom`; a Laurent polynomial with
/// negative exponents when `top < 0 <= bottom`.
pub fn qbinom(top: i64, bottom: i64) -> LaurentPoly {
    (*qbinom_shared(top, bottom)).clone()
}

/// [`qbinom`] with `q` replaced by `q^base_power`.
pub fn qbinom_base(top: i64, bottom: i64, base_power: i64) -> LaurentPoly {
    assert!(base_power > 0, "base power must be positive");
    qbinom_shared(top, bottom).dilate(base_power)
}

/// Ordinary binomial coefficient with the same integer conventions as
/// [`qbinom`]; it equals `qbinom(top, bottom)` evaluated at `q = 1`.
pub fn qbinom_q1(top: i64, bottom: i64) -> BigInt {
    if bottom < 0 || (top >= 0 && top < bottom) {
        return BigInt::zero();
    }
    if top < 0 {
        let v = qbinom_q1(bottom - top - 1, bottom);
        return if bottom % 2 == 1 { -v } else { v };
    }
    let k = bottom.min(top - bottom);
    let mut acc = BigInt::one();
    for r in 0..k {
        acc *= top - r;
        acc /= r + 1;
    }
    acc
}

/// `[total; p1, p2, ...] = [total; p1] [total-p1; p2] ...`.
pub fn qmultinom(total: i64, parts: &[i64]) -> LaurentPoly {
    if parts.iter().any(|&p| p < 0) {
        return LaurentPoly::zero();
    }
    let mut acc = LaurentPoly::one();
    let mut rest = total;
    for &p in parts {
        let b = qbinom_shared(rest, p);
        if b.is_zero() {
            return LaurentPoly::zero();
        }
        acc = &acc * &*b;
        rest -= p;
    }
    acc
}

/// Support of the q-binomial: `[top; bottom] != 0` iff `bottom >= 0` and
/// either `top < 0` or `top >= bottom`.
pub fn qbinom_is_nonzero(top: i64, bottom: i64) -> bool {
    bottom >= 0 && (top < 0 || top >= bottom)
}

/// q-Pascal rule `[n+m; n] = [n+m-1; n] + q^m [n-1+m; n-1]` at `n = bottom`,
/// `m = top - bottom`.
pub fn qpascal_sides(top: i64, bottom: i64) -> (LaurentPoly, LaurentPoly) {
    let m = top - bottom;
    let lhs = qbinom(top, bottom);
    let rhs = qbinom(top - 1, bottom) + qbinom_shared(top - 1, bottom - 1).shift(m);
    (lhs, rhs)
}

pub fn check_qpascal(top: i64, bottom: i64) -> bool {
    let (lhs, rhs) = qpascal_sides(top, bottom);
    lhs == rhs
}

fn q(e: i64) -> LaurentPoly {
    LaurentPoly::q_pow(e)
}

fn one_minus_q(e: i64) -> LaurentPoly {
    LaurentPoly::one() - q(e)
}

/// Recurrence for `[L; s, i, j]` reducing `L` by one or two.
pub fn trinomial_recurrence_sides(l: i64, s: i64, i: i64, j: i64) -> (LaurentPoly, LaurentPoly) {
    let lhs = qmultinom(l, &[s, i, j]);
    let rhs = qmultinom(l - 1, &[s, i, j])
        + q(l - i) * qmultinom(l - 1, &[s, i - 1, j])
        + q(l - j) * qmultinom(l - 1, &[s, i, j - 1])
        + q(l - s - i - j) * qmultinom(l - 1, &[s - 1, i, j])
        + q(l - i - j) * one_minus_q(l - 1) * qmultinom(l - 2, &[s, i - 1, j - 1]);
    (lhs, rhs)
}

pub fn trinomial_recurrence_holds(l: i64, s: i64, i: i64, j: i64) -> bool {
    let (lhs, rhs) = trinomial_recurrence_sides(l, s, i, j);
    lhs == rhs
}

/// The same recurrence written for `[L-s; s, i-s, j-s]`, as used to show
/// that the right side of the key identity obeys the second order recurrence.
pub fn shifted_trinomial_recurrence_sides(
    l: i64,
    s: i64,
    i: i64,
    j: i64,
) -> (LaurentPoly, LaurentPoly) {
    let lhs = qmultinom(l - s, &[s, i - s, j - s]);
    let tail = qmultinom(l - 2 - s, &[s, i - 1 - s, j - 1 - s]);
    let rhs = qmultinom(l - 1 - s, &[s, i - s, j - s])
        + q(l - i) * qmultinom(l - 1 - s, &[s, i - 1 - s, j - s])
        + q(l - j) * qmultinom(l - 1 - s, &[s, i - s, j - 1 - s])
        + q(l - i - j) * qmultinom(l - 1 - s, &[s - 1, i - s, j - s])
        + q(l + s - i - j) * &tail
        - q(2 * l - 1 - i - j) * &tail;
    (lhs, rhs)
}

pub fn shifted_trinomial_recurrence_holds(l: i64, s: i64, i: i64, j: i64) -> bool {
    let (lhs, rhs) = shifted_trinomial_recurrence_sides(l, s, i, j);
    lhs == rhs
}

/// Symmetric recurrence for `[L; i, j]`.
pub fn binomial_pair_recurrence_sides(l: i64, i: i64, j: i64) -> (LaurentPoly, LaurentPoly) {
    let lhs = qmultinom(l, &[i, j]);
    let rhs = qmultinom(l - 1, &[i, j])
        + q(l - i) * qmultinom(l - 1, &[i - 1, j])
        + q(l - j) * qmultinom(l - 1, &[i, j - 1])
        + q(l - i - j) * one_minus_q(l - 1) * qmultinom(l - 2, &[i - 1, j - 1]);
    (lhs, rhs)
}

pub fn binomial_pair_recurrence_holds(l: i64, i: i64, j: i64) -> bool {
    let (lhs, rhs) = binomial_pair_recurrence_sides(l, i, j);
    lhs == rhs
}

/// All three multinomial recurrences at one parameter point.
pub fn check_multinom_recurrence(l: i64, s: i64, i: i64, j: i64) -> bool {
    trinomial_recurrence_holds(l, s, i, j)
        && shifted_trinomial_recurrence_holds(l, s, i, j)
        && binomial_pair_recurrence_holds(l, i, j)
}
