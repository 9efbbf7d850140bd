//! Exact truncated power series.
//!
//! A [`Series`] holds coefficients `c_0 … c_N` of a formal power series
//! truncated at order `N`, over any coefficient ring implementing [`Coeff`].
//! Two rings are provided: exact rationals ([`TruncatedSeries`]) and exact
//! rational polynomials in `t` ([`BivariateSeries`]), the latter for series
//! refined by the `dist` statistic. All arithmetic is exact; no floating
//! point anywhere.

mod catalog;
mod poly;

pub use catalog::{
    egf_to_counts, gf_catalog, gf_marked_paths, gf_marked_paths_dist, gf_multi_marked_paths_dist,
    gf_multi_slanted_paths, CatalogKind, CatalogSeries, CATALOG_NAMES,
};
pub use poly::TPoly;

use std::fmt;

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Coefficient ring operations needed by the series engine.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Multiplicative inverse, if this element is a unit of the ring.
    fn inverse(&self) -> Option<Self>;
}

impl Coeff for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// A power series truncated at a fixed order: coefficients of `z^0 … z^N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series<C: Coeff> {
    coeffs: Vec<C>, // length = order + 1
}

/// Exact rational univariate series in `z`.
pub type TruncatedSeries = Series<BigRational>;
/// Series in `z` whose coefficients are exact rational polynomials in `t`.
pub type BivariateSeries = Series<TPoly>;

impl<C: Coeff> Series<C> {
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least the constant term");
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![C::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Series::constant(C::one(), order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        let mut coeffs = vec![C::zero(); order + 1];
        coeffs[0] = c;
        Series { coeffs }
    }

    /// Polynomial builder: `terms` lists `(power, coefficient)` pairs.
    pub fn from_terms(order: usize, terms: &[(usize, C)]) -> Self {
        let mut coeffs = vec![C::zero(); order + 1];
        for (power, c) in terms {
            assert!(*power <= order, "term z^{power} beyond order {order}");
            coeffs[*power] = coeffs[*power].add(c);
        }
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Restrict to a lower order (no-op if `order` is not lower).
    pub fn truncate(&self, order: usize) -> Series<C> {
        if order >= self.order() {
            return self.clone();
        }
        Series { coeffs: self.coeffs[..=order].to_vec() }
    }

    fn common_order(&self, rhs: &Series<C>) -> usize {
        self.order().min(rhs.order())
    }

    pub fn add(&self, rhs: &Series<C>) -> Series<C> {
        let order = self.common_order(rhs);
        Series {
            coeffs: (0..=order).map(|i| self.coeffs[i].add(&rhs.coeffs[i])).collect(),
        }
    }

    pub fn sub(&self, rhs: &Series<C>) -> Series<C> {
        let order = self.common_order(rhs);
        Series {
            coeffs: (0..=order).map(|i| self.coeffs[i].sub(&rhs.coeffs[i])).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Series<C> {
        Series { coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect() }
    }

    pub fn neg(&self) -> Series<C> {
        Series::zero(self.order()).sub(self)
    }

    pub fn mul(&self, rhs: &Series<C>) -> Series<C> {
        let order = self.common_order(rhs);
        let mut coeffs = vec![C::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        Series { coeffs }
    }

    /// Exact quotient; requires the constant term of `rhs` to be a unit.
    pub fn div(&self, rhs: &Series<C>) -> Result<Series<C>> {
        let inv0 = rhs.coeffs[0].inverse().ok_or(Error::NonInvertibleConstant)?;
        let order = self.common_order(rhs);
        let mut q = vec![C::zero(); order + 1];
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for k in 1..=n {
                if !rhs.coeffs[k].is_zero() {
                    acc = acc.sub(&rhs.coeffs[k].mul(&q[n - k]));
                }
            }
            q[n] = acc.mul(&inv0);
        }
        Ok(Series { coeffs: q })
    }

    /// The unique square root with constant term 1. Errors unless the
    /// constant term of `self` is 1.
    pub fn sqrt(&self) -> Result<Series<C>> {
        if self.coeffs[0] != C::one() {
            return Err(Error::SqrtConstantTerm);
        }
        let half = C::one().add(&C::one()).inverse().expect("2 is invertible over the rationals");
        let order = self.order();
        let mut s = vec![C::zero(); order + 1];
        s[0] = C::one();
        for n in 1..=order {
            // a_n = 2 s_n + sum_{i=1}^{n-1} s_i s_{n-i}
            let mut acc = self.coeffs[n].clone();
            for i in 1..n {
                acc = acc.sub(&s[i].mul(&s[n - i]));
            }
            s[n] = acc.mul(&half);
        }
        Ok(Series { coeffs: s })
    }

    /// Composition `outer(inner)`; requires `inner` to have constant term 0.
    pub fn compose(&self, inner: &Series<C>) -> Result<Series<C>> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::ComposeConstantTerm);
        }
        let order = self.common_order(inner);
        let mut acc = Series::constant(self.coeffs[order].clone(), order);
        for k in (0..order).rev() {
            acc = acc.mul(inner);
            acc.coeffs[0] = acc.coeffs[0].add(&self.coeffs[k]);
        }
        Ok(acc)
    }

    /// Multiply by `z^k` (order grows by `k`; all coefficients stay exact).
    pub fn shift_up(&self, k: usize) -> Series<C> {
        let mut coeffs = vec![C::zero(); self.coeffs.len() + k];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i + k] = c.clone();
        }
        Series { coeffs }
    }

    /// Divide by `z^k`; the first `k` coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> Result<Series<C>> {
        for i in 0..k {
            if !self.coeffs[i].is_zero() {
                return Err(Error::NotDivisibleByZ { power: k, index: i });
            }
        }
        assert!(self.coeffs.len() > k, "shift_down below the constant term");
        Ok(Series { coeffs: self.coeffs[k..].to_vec() })
    }
}

impl BivariateSeries {
    /// Specialize `t` to a rational value, giving a univariate series.
    pub fn specialize_t(&self, t: &BigRational) -> TruncatedSeries {
        Series { coeffs: self.coeffs.iter().map(|p| p.eval(t)).collect() }
    }
}

impl TruncatedSeries {
    /// Interpret the coefficients as exact nonnegative integer counts.
    pub fn integer_coeffs(&self) -> Result<Vec<u128>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| rational_to_count(c).ok_or_else(|| Error::NonIntegralCoefficient {
                index: i,
                value: c.to_string(),
            }))
            .collect()
    }
}

fn rational_to_count(c: &BigRational) -> Option<u128> {
    if !c.denom().is_one() || c.is_negative() {
        return None;
    }
    c.numer().to_u128()
}

/// Big-rational shorthand used by the catalog and by tests.
pub fn rational(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_series(f, &self.coeffs, |c| c.to_string())
    }
}

impl fmt::Display for BivariateSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_series(f, &self.coeffs, |p| {
            if p.coeffs().iter().filter(|c| !Zero::is_zero(*c)).count() > 1 {
                format!("[{p}]")
            } else {
                p.to_string()
            }
        })
    }
}

fn fmt_series<C: Coeff>(
    f: &mut fmt::Formatter<'_>,
    coeffs: &[C],
    render: impl Fn(&C) -> String,
) -> fmt::Result {
    let mut wrote = false;
    for (n, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if wrote {
            f.write_str(" + ")?;
        }
        wrote = true;
        let cs = render(c);
        match n {
            0 => write!(f, "{cs}")?,
            1 if cs == "1" => write!(f, "z")?,
            1 => write!(f, "{cs}*z")?,
            _ if cs == "1" => write!(f, "z^{n}")?,
            _ => write!(f, "{cs}*z^{n}")?,
        }
    }
    if !wrote {
        f.write_str("0")?;
    }
    Ok(())
}
