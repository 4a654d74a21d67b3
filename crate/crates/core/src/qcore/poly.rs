//! Sparse Laurent polynomials in `q` with arbitrary-precision integer coefficients.

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A finite sum `Σ c_e q^e` with `e ∈ Z` and `c_e ∈ Z`.
///
/// Zero coefficients are never stored, so two polynomials are equal exactly
/// when their term maps are equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `coeff · q^exp`.
    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let c = coeff.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut map: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_default() += c.into();
        }
        map.retain(|_, c| !c.is_zero());
        Self { terms: map }
    }

    /// Dense constructor: `coeffs[n]` is the coefficient of `q^(min_exp + n)`.
    pub fn from_coeffs(min_exp: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(n, &c)| (min_exp + n as i64, c)),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + ExactSizeIterator {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplication by `q^n`.
    pub fn shift(&self, n: i64) -> Self {
        if n == 0 {
            return self.clone();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + n, c.clone())).collect(),
        }
    }

    /// In-place multiplication by `q^n`.
    pub fn shifted(self, n: i64) -> Self {
        if n == 0 {
            return self;
        }
        Self {
            terms: self.terms.into_iter().map(|(e, c)| (e + n, c)).collect(),
        }
    }

    /// Substitutes `q → q^base`, i.e. maps every exponent `e` to `base·e`.
    pub fn dilate(&self, base: i64) -> Self {
        assert!(base > 0, "dilation base must be positive");
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e * base, c.clone()))
                .collect(),
        }
    }

    /// Drops every term with exponent `>= order`.
    pub fn truncate_below(&self, order: i64) -> Self {
        Self {
            terms: self
                .terms
                .range(..order)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Value at `q = 1`: the sum of all coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// True when no coefficient is negative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn add_scaled_in_place(&mut self, other: &Self, negate: bool) {
        for (e, c) in &other.terms {
            let entry = self.terms.entry(*e).or_default();
            if negate {
                *entry -= c;
            } else {
                *entry += c;
            }
            if entry.is_zero() {
                self.terms.remove(e);
            }
        }
    }
}

/// Returns `Some(v)` with every coefficient as `i64` when all fit.
fn small_coeffs(p: &LaurentPoly) -> Option<(Vec<(i64, i64)>, u64)> {
    let mut out = Vec::with_capacity(p.terms.len());
    let mut max_abs = 0u64;
    for (e, c) in &p.terms {
        let v = c.to_i64()?;
        max_abs = max_abs.max(v.unsigned_abs());
        out.push((*e, v));
    }
    Some((out, max_abs))
}

fn bit_len(x: u64) -> u32 {
    64 - x.leading_zeros()
}

fn mul_polys(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() || b.is_zero() {
        return LaurentPoly::zero();
    }
    if a.terms.len() == 1 {
        let (&e, c) = a.terms.iter().next().unwrap();
        return if c.is_one() {
            b.shift(e)
        } else {
            b.scale(c).shifted(e)
        };
    }
    if b.terms.len() == 1 {
        return mul_polys(b, a);
    }
    let lo = a.min_exp().unwrap() + b.min_exp().unwrap();
    let hi = a.max_exp().unwrap() + b.max_exp().unwrap();
    let span = (hi - lo + 1) as usize;
    let pairs = a.terms.len() * b.terms.len();
    let dense = span <= 4 * pairs + 64;

    // Exact i128 accumulation whenever the worst-case partial sum provably fits.
    if dense {
        if let (Some((sa, ma)), Some((sb, mb))) = (small_coeffs(a), small_coeffs(b)) {
            let count = sa.len().min(sb.len()) as u64;
            if bit_len(ma) + bit_len(mb) + bit_len(count) <= 126 {
                let mut acc = vec![0i128; span];
                for &(ea, ca) in &sa {
                    for &(eb, cb) in &sb {
                        acc[(ea + eb - lo) as usize] += ca as i128 * cb as i128;
                    }
                }
                let terms = acc
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| *c != 0)
                    .map(|(n, c)| (lo + n as i64, BigInt::from(c)))
                    .collect();
                return LaurentPoly { terms };
            }
        }
        let mut acc = vec![BigInt::zero(); span];
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                acc[(ea + eb - lo) as usize] += ca * cb;
            }
        }
        let terms = acc
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| (lo + n as i64, c))
            .collect();
        return LaurentPoly { terms };
    }
    let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
    for (ea, ca) in &a.terms {
        for (eb, cb) in &b.terms {
            *terms.entry(ea + eb).or_default() += ca * cb;
        }
    }
    terms.retain(|_, c| !c.is_zero());
    LaurentPoly { terms }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_scaled_in_place(rhs, false);
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self.add_scaled_in_place(&rhs, false);
        self
    }
}

impl Add<&LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add_scaled_in_place(rhs, false);
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.add_scaled_in_place(rhs, false);
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        if self.is_zero() {
            *self = rhs;
        } else {
            self.add_scaled_in_place(&rhs, false);
        }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_scaled_in_place(rhs, true);
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self.add_scaled_in_place(&rhs, true);
        self
    }
}

impl Sub<&LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add_scaled_in_place(rhs, true);
        self
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.add_scaled_in_place(rhs, true);
    }
}

impl SubAssign for LaurentPoly {
    fn sub_assign(&mut self, rhs: LaurentPoly) {
        self.add_scaled_in_place(&rhs, true);
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        mul_polys(self, rhs)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        mul_polys(&self, &rhs)
    }
}

impl Mul<&LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        mul_polys(&self, rhs)
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| acc * p)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(min: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(min, c)
    }

    #[test]
    fn addition_cancels_and_keeps_canonical_form() {
        assert_eq!(&p(0, &[1, 1]) + &p(0, &[1, -1]), LaurentPoly::constant(2));
        let x = p(-1, &[1, 0, 1]);
        assert_eq!(&x + &LaurentPoly::zero(), x);
        assert_eq!(&LaurentPoly::q_pow(-1) + &LaurentPoly::q_pow(1), x);
        assert_eq!(x.len(), 2);
        assert!((&x - &x).is_zero());
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(&p(0, &[1, -1]) * &p(0, &[1, 1]), p(0, &[1, 0, -1]));
        let x = p(-2, &[3, 0, -7, 1]);
        assert_eq!(&x * &LaurentPoly::one(), x);
        let cubic = &(&p(0, &[1, -1]) * &p(0, &[1, 0, -1])) * &p(0, &[1, 0, 0, -1]);
        assert_eq!(cubic, p(0, &[1, -1, -1, 0, 1, 1, -1]));
    }

    #[test]
    fn multiplication_falls_back_to_bigint() {
        let big =
            LaurentPoly::from_terms([(0, BigInt::from(i64::MAX)), (1, BigInt::from(i64::MAX))]);
        let sq = &big * &big;
        let m = BigInt::from(i64::MAX);
        assert_eq!(sq.coeff(0), &m * &m);
        assert_eq!(sq.coeff(1), BigInt::from(2) * &m * &m);
        assert_eq!(sq.coeff(2), &m * &m);
    }

    #[test]
    fn sparse_multiplication_path() {
        let x = LaurentPoly::from_terms([(0, 1), (100_000, 1)]);
        let y = LaurentPoly::from_terms([(0, 1), (-100_000, -1)]);
        assert_eq!(
            &x * &y,
            LaurentPoly::from_terms([(-100_000, -1), (0, 0), (100_000, 1)])
        );
    }

    #[test]
    fn shifting() {
        assert_eq!(p(0, &[1, 1]).shift(2), p(2, &[1, 1]));
        let x = p(-3, &[1, 2, 3]);
        assert_eq!(x.shift(0), x);
        assert_eq!(LaurentPoly::q_pow(1).shift(-2), LaurentPoly::q_pow(-1));
    }

    #[test]
    fn dilate_and_eval() {
        assert_eq!(p(0, &[1, 1]).dilate(2), p(0, &[1, 0, 1]));
        assert_eq!(p(-1, &[2, -5, 7]).eval_at_one(), BigInt::from(4));
        assert_eq!(p(0, &[1, -1]).pow(3), p(0, &[1, -3, 3, -1]));
    }
}
