//! Exact value layer: Laurent polynomials in `q`, truncated power series,
//! and Laurent polynomials in one auxiliary variable over `Z[q, q^-1]`.

mod bivar;
mod poly;
mod series;
mod text;

pub use bivar::BivarLaurent;
pub use poly::LaurentPoly;
pub use series::TruncSeries;

/// Sum of two polynomials.
pub fn poly_add(p: &LaurentPoly, r: &LaurentPoly) -> LaurentPoly {
    p + r
}

/// Product of two polynomials.
pub fn poly_mul(p: &LaurentPoly, r: &LaurentPoly) -> LaurentPoly {
    p * r
}

/// `p · q^n`.
pub fn poly_shift(p: &LaurentPoly, n: i64) -> LaurentPoly {
    p.shift(n)
}

pub fn series_from_poly(p: &LaurentPoly, order: usize) -> crate::Result<TruncSeries> {
    TruncSeries::from_poly(p, order)
}

pub fn series_mul(s: &TruncSeries, t: &TruncSeries) -> TruncSeries {
    s * t
}

pub fn series_recip(s: &TruncSeries) -> crate::Result<TruncSeries> {
    s.recip()
}

pub fn bivar_add(x: &BivarLaurent, y: &BivarLaurent) -> BivarLaurent {
    x + y
}

pub fn bivar_mul(x: &BivarLaurent, y: &BivarLaurent) -> BivarLaurent {
    x * y
}

pub fn bivar_substitute_one(x: &BivarLaurent) -> LaurentPoly {
    x.substitute_one()
}
