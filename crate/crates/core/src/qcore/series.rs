//! Power series in `q` known modulo `q^order`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::LaurentPoly;
use crate::error::{Error, Result};

/// Coefficients of `q^0 .. q^(order-1)`; everything above is unknown.
///
/// Binary operations produce a series of order `min(lhs.order, rhs.order)`,
/// and equality compares coefficients up to the smaller of the two orders.
#[derive(Clone, Debug)]
pub struct TruncSeries {
    coeffs: Vec<BigInt>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        assert!(order >= 1, "truncation order must be at least 1");
        Self {
            coeffs: vec![BigInt::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(1, 0, order)
    }

    /// `coeff · q^exp mod q^order`.
    pub fn monomial(coeff: impl Into<BigInt>, exp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp < order {
            s.coeffs[exp] = coeff.into();
        }
        s
    }

    /// Copies the coefficients of `q^0 .. q^(order-1)` from `p`.
    pub fn from_poly(p: &LaurentPoly, order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        if let Some(e) = p.min_exp().filter(|e| *e < 0) {
            return Err(Error::NegativeExponent(e));
        }
        let mut s = Self::zero(order);
        for (e, c) in p.terms() {
            if (e as usize) < order {
                s.coeffs[e as usize] = c.clone();
            }
        }
        Ok(s)
    }

    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        assert!(!coeffs.is_empty(), "truncation order must be at least 1");
        Self {
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: usize) -> &BigInt {
        &self.coeffs[exp]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order >= 1 && order <= self.order());
        Self {
            coeffs: self.coeffs[..order].to_vec(),
        }
    }

    /// The known part as a polynomial.
    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| (n as i64, c.clone())),
        )
    }

    /// Multiplication by `q^n`, keeping the order.
    pub fn shift(&self, n: usize) -> Self {
        let order = self.order();
        let mut s = Self::zero(order);
        for e in n..order {
            s.coeffs[e] = self.coeffs[e - n].clone();
        }
        s
    }

    /// The multiplicative inverse modulo `q^order`.
    pub fn recip(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if !c0.abs().is_one() {
            return Err(Error::NonUnitConstantTerm(c0.to_string()));
        }
        let order = self.order();
        let mut out: Vec<BigInt> = Vec::with_capacity(order);
        out.push(c0.clone());
        for n in 1..order {
            let mut acc = BigInt::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() && !out[n - k].is_zero() {
                    acc += &self.coeffs[k] * &out[n - k];
                }
            }
            // c0 = ±1 is its own inverse
            out.push(-(acc * c0));
        }
        Ok(Self { coeffs: out })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl PartialEq for TruncSeries {
    fn eq(&self, other: &Self) -> bool {
        let n = self.order().min(other.order());
        self.coeffs[..n] == other.coeffs[..n]
    }
}

impl Add<&TruncSeries> for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.order().min(rhs.order());
        TruncSeries {
            coeffs: (0..n).map(|e| &self.coeffs[e] + &rhs.coeffs[e]).collect(),
        }
    }
}

impl Add for TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: TruncSeries) -> TruncSeries {
        &self + &rhs
    }
}

impl Sub<&TruncSeries> for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.order().min(rhs.order());
        TruncSeries {
            coeffs: (0..n).map(|e| &self.coeffs[e] - &rhs.coeffs[e]).collect(),
        }
    }
}

impl Sub for TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: TruncSeries) -> TruncSeries {
        &self - &rhs
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<&TruncSeries> for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.order().min(rhs.order());
        let mut out = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs[..n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        TruncSeries { coeffs: out }
    }
}

impl Mul for TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: TruncSeries) -> TruncSeries {
        &self * &rhs
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.to_poly();
        if p.is_zero() {
            write!(f, "O(q^{})", self.order())
        } else {
            write!(f, "{p} + O(q^{})", self.order())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64]) -> TruncSeries {
        TruncSeries::from_coeffs(c)
    }

    #[test]
    fn from_poly_truncates() {
        let p = LaurentPoly::from_terms([(0, 1), (5, 1)]);
        assert_eq!(
            TruncSeries::from_poly(&p, 4).unwrap().coeffs(),
            s(&[1, 0, 0, 0]).coeffs()
        );
        assert_eq!(
            TruncSeries::from_poly(&LaurentPoly::zero(), 3)
                .unwrap()
                .coeffs(),
            s(&[0, 0, 0]).coeffs()
        );
        let p = LaurentPoly::from_coeffs(0, &[1, -1, 0, 1]);
        assert_eq!(
            TruncSeries::from_poly(&p, 3).unwrap().coeffs(),
            s(&[1, -1, 0]).coeffs()
        );
    }

    #[test]
    fn from_poly_rejects_negative_exponents() {
        let p = LaurentPoly::q_pow(-2);
        assert_eq!(
            TruncSeries::from_poly(&p, 3),
            Err(Error::NegativeExponent(-2))
        );
        assert_eq!(
            TruncSeries::from_poly(&LaurentPoly::one(), 0),
            Err(Error::ZeroOrder)
        );
    }

    #[test]
    fn multiplication() {
        assert_eq!(&s(&[1, 1, 0]) * &s(&[1, -1, 0]), s(&[1, 0, -1]));
        let x = s(&[3, -1, 4, 1]);
        assert_eq!(&x * &TruncSeries::one(4), x);
        assert_eq!(&s(&[1, 1, 1]) * &s(&[1, 1, 1]), s(&[1, 2, 3]));
        // order of the product is the smaller order
        assert_eq!((&s(&[1, 1, 1, 1]) * &s(&[1, 1])).order(), 2);
    }

    #[test]
    fn reciprocal() {
        assert_eq!(s(&[1, -1, 0, 0]).recip().unwrap(), s(&[1, 1, 1, 1]));
        assert_eq!(TruncSeries::one(5).recip().unwrap(), TruncSeries::one(5));
        assert_eq!(s(&[1, -1, -1, 0, 0]).recip().unwrap(), s(&[1, 1, 2, 3, 5]));
        assert_eq!(s(&[-1, 1, 0]).recip().unwrap(), s(&[-1, -1, -1]));
        assert!(matches!(
            s(&[2, 1]).recip(),
            Err(Error::NonUnitConstantTerm(_))
        ));
        assert!(matches!(
            s(&[0, 1]).recip(),
            Err(Error::NonUnitConstantTerm(_))
        ));
    }

    #[test]
    fn equality_uses_common_order() {
        assert_eq!(s(&[1, 2, 3]), s(&[1, 2]));
        assert_ne!(s(&[1, 2, 3]), s(&[1, 3]));
    }
}
