//! Laurent polynomials in an auxiliary variable with [`LaurentPoly`] coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::LaurentPoly;

/// `Σ_n c_n(q) · A^n` with `n ∈ Z`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivarLaurent {
    terms: BTreeMap<i64, LaurentPoly>,
}

impl BivarLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, LaurentPoly::one())
    }

    /// `coeff(q) · A^aux_exp`.
    pub fn monomial(aux_exp: i64, coeff: LaurentPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(aux_exp, coeff);
        }
        Self { terms }
    }

    /// A polynomial in `q` alone.
    pub fn from_q(coeff: LaurentPoly) -> Self {
        Self::monomial(0, coeff)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, LaurentPoly)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (n, c) in terms {
            out.add_term(n, &c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, aux_exp: i64) -> LaurentPoly {
        self.terms.get(&aux_exp).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending auxiliary exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &LaurentPoly)> {
        self.terms.iter().map(|(n, c)| (*n, c))
    }

    pub fn add_term(&mut self, aux_exp: i64, coeff: &LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(aux_exp).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&aux_exp);
        }
    }

    /// Sets the auxiliary variable to 1.
    pub fn substitute_one(&self) -> LaurentPoly {
        self.terms
            .values()
            .fold(LaurentPoly::zero(), |acc, c| acc + c)
    }

    /// Drops every `q` exponent `>= order` from every coefficient.
    pub fn truncate_q(&self, order: i64) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(n, c)| (*n, c.truncate_below(order))),
        )
    }

    /// Multiplies every coefficient by `p`.
    pub fn scale_q(&self, p: &LaurentPoly) -> Self {
        Self::from_terms(self.terms.iter().map(|(n, c)| (*n, c * p)))
    }
}

impl Add<&BivarLaurent> for &BivarLaurent {
    type Output = BivarLaurent;
    fn add(self, rhs: &BivarLaurent) -> BivarLaurent {
        let mut out = self.clone();
        for (n, c) in &rhs.terms {
            out.add_term(*n, c);
        }
        out
    }
}

impl Add for BivarLaurent {
    type Output = BivarLaurent;
    fn add(self, rhs: BivarLaurent) -> BivarLaurent {
        &self + &rhs
    }
}

impl Neg for &BivarLaurent {
    type Output = BivarLaurent;
    fn neg(self) -> BivarLaurent {
        BivarLaurent {
            terms: self.terms.iter().map(|(n, c)| (*n, -c)).collect(),
        }
    }
}

impl Sub<&BivarLaurent> for &BivarLaurent {
    type Output = BivarLaurent;
    fn sub(self, rhs: &BivarLaurent) -> BivarLaurent {
        self + &(-rhs)
    }
}

impl Sub for BivarLaurent {
    type Output = BivarLaurent;
    fn sub(self, rhs: BivarLaurent) -> BivarLaurent {
        &self - &rhs
    }
}

impl Mul<&BivarLaurent> for &BivarLaurent {
    type Output = BivarLaurent;
    fn mul(self, rhs: &BivarLaurent) -> BivarLaurent {
        let mut out = BivarLaurent::zero();
        for (n, c) in &self.terms {
            for (m, d) in &rhs.terms {
                out.add_term(n + m, &(c * d));
            }
        }
        out
    }
}

impl Mul for BivarLaurent {
    type Output = BivarLaurent;
    fn mul(self, rhs: BivarLaurent) -> BivarLaurent {
        &self * &rhs
    }
}

impl fmt::Display for BivarLaurent {
    /// `(c_n)*A^n` terms in ascending `n`, joined by ` + `; `A^0` is elided.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (n, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            match n {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*A")?,
                n => write!(f, "({c})*A^{n}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: i64) -> BivarLaurent {
        BivarLaurent::monomial(n, LaurentPoly::one())
    }

    fn q(e: i64) -> LaurentPoly {
        LaurentPoly::q_pow(e)
    }

    #[test]
    fn square_of_a_plus_inverse() {
        let x = &a(1) + &a(-1);
        let expected = BivarLaurent::from_terms([
            (2, LaurentPoly::one()),
            (0, LaurentPoly::constant(2)),
            (-2, LaurentPoly::one()),
        ]);
        assert_eq!(&x * &x, expected);
    }

    #[test]
    fn substitute_one_sums_coefficients() {
        let x = BivarLaurent::from_terms([(1, q(1)), (-1, q(1))]);
        assert_eq!(x.substitute_one(), LaurentPoly::monomial(2, 1));
    }

    #[test]
    fn product_of_linear_factors() {
        let left = &BivarLaurent::one() + &BivarLaurent::monomial(1, q(1));
        let right = &BivarLaurent::one() + &BivarLaurent::monomial(-1, q(1));
        let expected = BivarLaurent::from_terms([
            (1, q(1)),
            (0, LaurentPoly::from_coeffs(0, &[1, 0, 1])),
            (-1, q(1)),
        ]);
        assert_eq!(&left * &right, expected);
    }

    #[test]
    fn cancellation_removes_terms() {
        let x = BivarLaurent::monomial(3, q(2));
        assert!((&x - &x).is_zero());
        assert_eq!(x.to_string(), "(q^2)*A^3");
    }
}
