//! Theta-type consequences of the key identity: the bounded Jacobi triple
//! product, a false theta identity, polynomial analogs of Jacobi's cube
//! formula, the Carlitz cycle specialization, and the four-parameter key
//! identity. Every operation returns both sides so callers compare them.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::keyid::inv_qfactorial_product;
use crate::qcomb::{qbinom_base, qbinom_q1, qbinom_shared, triangular};
use crate::qcore::{BivarLaurent, LaurentPoly, TruncSeries};

fn check_order(order: usize) -> Result<()> {
    if order == 0 {
        Err(Error::ZeroOrder)
    } else {
        Ok(())
    }
}

fn sign(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Triples `(i, j, k) >= 0` with `L >= max(i+j, j+k, k+i)`.
fn cycle_triples(l: i64) -> impl Iterator<Item = (i64, i64, i64)> {
    (0..=l.max(-1)).flat_map(move |i| {
        (0..=l - i).flat_map(move |j| (0..=(l - i).min(l - j)).map(move |k| (i, j, k)))
    })
}

/// The binomial cycle `[L-k; i][L-i; j][L-j; k]`.
pub fn binomial_cycle(l: i64, i: i64, j: i64, k: i64) -> LaurentPoly {
    let first = qbinom_shared(l - k, i);
    let second = qbinom_shared(l - i, j);
    let third = qbinom_shared(l - j, k);
    &(&*first * &*second) * &*third
}

fn a_pow(n: i64, coeff: LaurentPoly) -> BivarLaurent {
    BivarLaurent::monomial(n, coeff)
}

/// `Σ_{ℓ=0}^{L} (-1)^(L+ℓ) q^(2(T_L - T_ℓ)) Σ_{n=-ℓ}^{ℓ} A^n q^(n²)`.
pub fn bounded_jtp_lhs(l: i64) -> BivarLaurent {
    let mut out = BivarLaurent::zero();
    for ell in 0..=l {
        let outer = 2 * (triangular(l) - triangular(ell));
        for n in -ell..=ell {
            out.add_term(n, &LaurentPoly::monomial(sign(l + ell), outer + n * n));
        }
    }
    out
}

/// `Σ (-1)^k A^(i-j) q^(2T_i+2T_j+2T_k-i-j) [L-k; i]_{q²} [L-i; j]_{q²} [L-j; k]_{q²}`.
pub fn bounded_jtp_rhs(l: i64) -> BivarLaurent {
    let mut out = BivarLaurent::zero();
    for (i, j, k) in cycle_triples(l) {
        let exp = 2 * (triangular(i) + triangular(j) + triangular(k)) - i - j;
        let cycle = qbinom_base(l - k, i, 2) * qbinom_base(l - i, j, 2) * qbinom_base(l - j, k, 2);
        out.add_term(i - j, &cycle.shifted(exp).scale(&BigInt::from(sign(k))));
    }
    out
}

/// Both sides of the bounded triple product.
pub fn bounded_jtp_sides(l: i64) -> (BivarLaurent, BivarLaurent) {
    (bounded_jtp_lhs(l), bounded_jtp_rhs(l))
}

/// Both sides of the triple product `Σ A^n q^(n²) = Π (1+Aq^(2m-1))(1+A^-1 q^(2m-1))(1-q^(2m))`
/// with every `q`-coefficient reduced modulo `q^order`.
pub fn jtp_series(order: usize) -> Result<(BivarLaurent, BivarLaurent)> {
    check_order(order)?;
    let ord = order as i64;
    let mut lhs = BivarLaurent::zero();
    let mut n = 0;
    while n * n < ord {
        lhs.add_term(n, &LaurentPoly::q_pow(n * n));
        if n > 0 {
            lhs.add_term(-n, &LaurentPoly::q_pow(n * n));
        }
        n += 1;
    }
    let mut rhs = BivarLaurent::one();
    for m in 1..=ord {
        let up = &BivarLaurent::one() + &a_pow(1, LaurentPoly::q_pow(2 * m - 1));
        let down = &BivarLaurent::one() + &a_pow(-1, LaurentPoly::q_pow(2 * m - 1));
        let euler = BivarLaurent::from_q(LaurentPoly::one() - LaurentPoly::q_pow(2 * m));
        rhs = (&rhs * &up).truncate_q(ord);
        rhs = (&rhs * &down).truncate_q(ord);
        rhs = (&rhs * &euler).truncate_q(ord);
    }
    Ok((lhs, rhs))
}

/// `Σ_{ℓ>=0} (-1)^ℓ q^(T_ℓ)` against
/// `Σ_{i,k>=0} (-1)^(i+k) q^(T_i+T_k-ik) [i+k; k] / ((q)_i (q)_k)`, modulo `q^order`.
pub fn false_theta_sides(order: usize) -> Result<(TruncSeries, TruncSeries)> {
    check_order(order)?;
    let ord = order as i64;
    let mut lhs = LaurentPoly::zero();
    let mut ell = 0;
    while triangular(ell) < ord {
        lhs += LaurentPoly::monomial(sign(ell), triangular(ell));
        ell += 1;
    }
    let mut rhs = TruncSeries::zero(order);
    // T_i + T_k - ik = ((i-k)² + i + k) / 2 >= (i+k)/2
    for total in 0..=2 * ord {
        for i in 0..=total {
            let k = total - i;
            let exp = triangular(i) + triangular(k) - i * k;
            if exp >= ord {
                continue;
            }
            let numer = qbinom_shared(i + k, k)
                .shift(exp)
                .scale(&BigInt::from(sign(i + k)));
            let numer = TruncSeries::from_poly(&numer.truncate_below(ord), order)?;
            rhs = &rhs + &(&numer * &inv_qfactorial_product(&[i, k], order)?);
        }
    }
    Ok((TruncSeries::from_poly(&lhs, order)?, rhs))
}

/// `Σ_{ℓ=0}^{L} (-1)^ℓ (2ℓ+1) q^(T_ℓ)` against
/// `Σ (-1)^(i+j+k) q^(T_i+T_j+T_k) [L-k; i][L-i; j][L-j; k]`.
pub fn jacobi_cube_poly_sides(l: i64) -> (LaurentPoly, LaurentPoly) {
    let lhs = (0..=l)
        .map(|ell| LaurentPoly::monomial(sign(ell) * (2 * ell + 1), triangular(ell)))
        .sum();
    let rhs = cycle_triples(l)
        .map(|(i, j, k)| {
            let exp = triangular(i) + triangular(j) + triangular(k);
            binomial_cycle(l, i, j, k)
                .shifted(exp)
                .scale(&BigInt::from(sign(i + j + k)))
        })
        .sum();
    (lhs, rhs)
}

/// `Σ (-1)^ℓ (2ℓ+1) q^(T_ℓ)` against `(q)_∞³`, modulo `q^order`.
pub fn jacobi_cube_series(order: usize) -> Result<(TruncSeries, TruncSeries)> {
    check_order(order)?;
    let ord = order as i64;
    let mut lhs = LaurentPoly::zero();
    let mut ell = 0;
    while triangular(ell) < ord {
        lhs += LaurentPoly::monomial(sign(ell) * (2 * ell + 1), triangular(ell));
        ell += 1;
    }
    let mut euler = LaurentPoly::one();
    for m in 1..=ord {
        euler = (euler * (LaurentPoly::one() - LaurentPoly::q_pow(m))).truncate_below(ord);
    }
    let euler = TruncSeries::from_poly(&euler, order)?;
    let cube = &(&euler * &euler) * &euler;
    Ok((TruncSeries::from_poly(&lhs, order)?, cube))
}

/// `Σ_{ℓ=0}^{L} a^(-ℓ) (1 + a^(2ℓ+1)) / (1 + a) q^(T_ℓ)` against
/// `Σ a^(i-j) (-1)^k q^(T_i+T_j+T_k) [L-k; i][L-i; j][L-j; k]`, as Laurent
/// polynomials in `a`.
///
/// The quotient is expanded as `Σ_{m=0}^{2ℓ} (-1)^m a^(m-ℓ)`.
pub fn carl_poly_sides(l: i64) -> (BivarLaurent, BivarLaurent) {
    let mut lhs = BivarLaurent::zero();
    for ell in 0..=l {
        for m in 0..=2 * ell {
            lhs.add_term(m - ell, &LaurentPoly::monomial(sign(m), triangular(ell)));
        }
    }
    let mut rhs = BivarLaurent::zero();
    for (i, j, k) in cycle_triples(l) {
        let exp = triangular(i) + triangular(j) + triangular(k);
        let term = binomial_cycle(l, i, j, k)
            .shifted(exp)
            .scale(&BigInt::from(sign(k)));
        rhs.add_term(i - j, &term);
    }
    (lhs, rhs)
}

/// The `q = 1` case: `(a^(L+1) - a^(-L-1)) / (a - a^-1) = Σ_{m=0}^{L} a^(L-2m)`
/// against `Σ a^(i-j) (-1)^k C(L-k, i) C(L-i, j) C(L-j, k)`. Coefficients
/// are constants in `q`.
pub fn carlitz_sides(l: i64) -> (BivarLaurent, BivarLaurent) {
    let mut lhs = BivarLaurent::zero();
    for m in 0..=l {
        lhs.add_term(l - 2 * m, &LaurentPoly::one());
    }
    let mut rhs = BivarLaurent::zero();
    for (i, j, k) in cycle_triples(l) {
        let c = qbinom_q1(l - k, i) * qbinom_q1(l - i, j) * qbinom_q1(l - j, k) * sign(k);
        rhs.add_term(i - j, &LaurentPoly::monomial(c, 0));
    }
    (lhs, rhs)
}

/// Totals of the four-parameter identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FourParams {
    pub i: i64,
    pub j: i64,
    pub k: i64,
    pub l: i64,
}

impl FourParams {
    pub fn new(i: i64, j: i64, k: i64, l: i64) -> Self {
        Self { i, j, k, l }
    }
}

/// Summation variables of the four-parameter identity. Two-letter fields
/// are single variables; `q` is the variable shared by all four totals.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Decuple {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub ab: i64,
    pub ac: i64,
    pub ad: i64,
    pub bc: i64,
    pub bd: i64,
    pub cd: i64,
    pub q: i64,
}

impl Decuple {
    /// `a+b+c+d+ab+ac+ad+bc+bd+cd`; `q` is not included.
    pub fn t(&self) -> i64 {
        self.a
            + self.b
            + self.c
            + self.d
            + self.ab
            + self.ac
            + self.ad
            + self.bc
            + self.bd
            + self.cd
    }

    pub fn totals(&self) -> FourParams {
        FourParams {
            i: self.a + self.ab + self.ac + self.ad + self.q,
            j: self.b + self.ab + self.bc + self.bd + self.q,
            k: self.c + self.ac + self.bc + self.cd + self.q,
            l: self.d + self.ad + self.bd + self.cd + self.q,
        }
    }

    fn exponent(&self) -> i64 {
        let t = self.t();
        triangular(t)
            + [self.ab, self.ac, self.ad, self.bc, self.bd, self.cd]
                .iter()
                .map(|&x| triangular(x))
                .sum::<i64>()
            - self.bc
            - self.bd
            - self.cd
            + 4 * triangular(self.q - 1)
            + self.q * (3 + 2 * t)
    }

    fn numerator(&self) -> LaurentPoly {
        let one = LaurentPoly::one;
        let mid = self.a + self.bc + self.bd + self.q;
        (one() - LaurentPoly::q_pow(self.a))
            + (one() - LaurentPoly::q_pow(self.b)).shifted(mid)
            + LaurentPoly::q_pow(mid + self.b + self.cd)
    }
}

/// All decuples with the given totals, lexicographic in
/// `(ab, ac, ad, bc, bd, cd, q)`. Empty if any total is negative.
pub fn enumerate_decuples(p: &FourParams) -> Vec<Decuple> {
    let mut out = Vec::new();
    let FourParams { i, j, k, l } = *p;
    if i < 0 || j < 0 || k < 0 || l < 0 {
        return out;
    }
    for ab in 0..=i.min(j) {
        for ac in 0..=(i - ab).min(k) {
            for ad in 0..=(i - ab - ac).min(l) {
                for bc in 0..=(j - ab).min(k - ac) {
                    for bd in 0..=(j - ab - bc).min(l - ad) {
                        for cd in 0..=(k - ac - bc).min(l - ad - bd) {
                            let a_room = i - ab - ac - ad;
                            let b_room = j - ab - bc - bd;
                            let c_room = k - ac - bc - cd;
                            let d_room = l - ad - bd - cd;
                            for q in 0..=a_room.min(b_room).min(c_room).min(d_room) {
                                out.push(Decuple {
                                    a: a_room - q,
                                    b: b_room - q,
                                    c: c_room - q,
                                    d: d_room - q,
                                    ab,
                                    ac,
                                    ad,
                                    bc,
                                    bd,
                                    cd,
                                    q,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Both sides of the four-parameter key identity modulo `q^order`.
pub fn four_param_sides(p: &FourParams, order: usize) -> Result<(TruncSeries, TruncSeries)> {
    check_order(order)?;
    let ord = order as i64;
    let mut lhs = TruncSeries::zero(order);
    for x in enumerate_decuples(p) {
        let exp = x.exponent();
        if exp >= ord {
            continue;
        }
        let numer = x.numerator().shifted(exp).truncate_below(ord);
        if numer.is_zero() {
            continue;
        }
        let inv = inv_qfactorial_product(
            &[x.a, x.b, x.c, x.d, x.ab, x.ac, x.ad, x.bc, x.bd, x.cd, x.q],
            order,
        )?;
        lhs = &lhs + &(&TruncSeries::from_poly(&numer, order)? * &inv);
    }
    let FourParams { i, j, k, l } = *p;
    let rhs = if i < 0 || j < 0 || k < 0 || l < 0 {
        TruncSeries::zero(order)
    } else {
        let exp = (triangular(i) + triangular(j) + triangular(k) + triangular(l)) as usize;
        &TruncSeries::monomial(1, exp, order) * &inv_qfactorial_product(&[i, j, k, l], order)?
    };
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: i64, p: LaurentPoly) -> BivarLaurent {
        BivarLaurent::monomial(n, p)
    }

    #[test]
    fn bounded_jtp_small() {
        let (l0, r0) = bounded_jtp_sides(0);
        assert_eq!(l0, BivarLaurent::one());
        assert_eq!(r0, BivarLaurent::one());
        let (l1, r1) = bounded_jtp_sides(1);
        let expected = BivarLaurent::from_terms([
            (0, LaurentPoly::from_coeffs(0, &[1, 0, -1])),
            (1, LaurentPoly::q_pow(1)),
            (-1, LaurentPoly::q_pow(1)),
        ]);
        assert_eq!(l1, expected);
        assert_eq!(r1, expected);
    }

    #[test]
    fn jtp_series_small() {
        let (l, r) = jtp_series(1).unwrap();
        assert_eq!((l.clone(), r), (BivarLaurent::one(), BivarLaurent::one()));
        let (l, r) = jtp_series(2).unwrap();
        let expected =
            &(&BivarLaurent::one() + &a(1, LaurentPoly::q_pow(1))) + &a(-1, LaurentPoly::q_pow(1));
        assert_eq!(l, expected);
        assert_eq!(r, expected);
        assert!(matches!(jtp_series(0), Err(Error::ZeroOrder)));
    }

    #[test]
    fn false_theta_small() {
        let (l, r) = false_theta_sides(5).unwrap();
        assert_eq!(l, TruncSeries::from_coeffs(&[1, -1, 0, 1, 0]));
        assert_eq!(l, r);
        let (l, r) = false_theta_sides(1).unwrap();
        assert_eq!(l, TruncSeries::one(1));
        assert_eq!(r, TruncSeries::one(1));
    }

    #[test]
    fn jacobi_cube_small() {
        assert_eq!(
            jacobi_cube_poly_sides(0),
            (LaurentPoly::one(), LaurentPoly::one())
        );
        let (l, r) = jacobi_cube_poly_sides(1);
        assert_eq!(l, LaurentPoly::from_coeffs(0, &[1, -3]));
        assert_eq!(r, l);
        let (l, r) = jacobi_cube_series(2).unwrap();
        assert_eq!(l, TruncSeries::from_coeffs(&[1, -3]));
        assert_eq!(r, l);
    }

    #[test]
    fn carl_small() {
        assert_eq!(
            carl_poly_sides(0),
            (BivarLaurent::one(), BivarLaurent::one())
        );
        let (l, r) = carl_poly_sides(1);
        let expected = BivarLaurent::from_terms([
            (0, LaurentPoly::from_coeffs(0, &[1, -1])),
            (1, LaurentPoly::q_pow(1)),
            (-1, LaurentPoly::q_pow(1)),
        ]);
        assert_eq!(l, expected);
        assert_eq!(r, expected);
    }

    #[test]
    fn carlitz_small() {
        assert_eq!(carlitz_sides(0), (BivarLaurent::one(), BivarLaurent::one()));
        let (l, r) = carlitz_sides(1);
        let expected = &a(1, LaurentPoly::one()) + &a(-1, LaurentPoly::one());
        assert_eq!(l, expected);
        assert_eq!(r, expected);
    }

    #[test]
    fn decuples_are_consistent() {
        let p = FourParams::new(2, 1, 2, 1);
        let all = enumerate_decuples(&p);
        assert!(!all.is_empty());
        assert!(all.iter().all(|x| x.totals() == p));
        let mut sorted = all.clone();
        sorted.sort_by_key(|x| (x.ab, x.ac, x.ad, x.bc, x.bd, x.cd, x.q));
        assert_eq!(sorted, all);
        assert_eq!(
            enumerate_decuples(&FourParams::new(0, 0, 0, 0)),
            vec![Decuple::default()]
        );
    }

    #[test]
    fn four_param_small() {
        let (l, r) = four_param_sides(&FourParams::new(0, 0, 0, 0), 6).unwrap();
        assert_eq!((l.clone(), r), (TruncSeries::one(6), TruncSeries::one(6)));
        let (l, r) = four_param_sides(&FourParams::new(1, 0, 0, 0), 8).unwrap();
        let expected = TruncSeries::from_coeffs(&[0, 1, 1, 1, 1, 1, 1, 1]);
        assert_eq!(l, expected);
        assert_eq!(r, expected);
        let (l, r) = four_param_sides(&FourParams::new(1, 1, 1, 1), 15).unwrap();
        assert_eq!(l, r);
    }
}
