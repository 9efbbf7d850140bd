//! Polynomials in `t` with exact rational coefficients: the coefficient ring
//! for bivariate series. Degrees stay bounded by the series order in `z`
//! (the `dist` statistic never exceeds the length), so dense storage is fine.

use std::fmt;

use num::{BigRational, Signed};

use super::Coeff;

/// A dense polynomial in `t` over exact rationals. Trailing zero
/// coefficients are trimmed; the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TPoly {
    coeffs: Vec<BigRational>,
}

impl TPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(num::Zero::is_zero) {
            coeffs.pop();
        }
        TPoly { coeffs }
    }

    pub fn constant(c: BigRational) -> Self {
        TPoly::new(vec![c])
    }

    /// Build from integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        TPoly::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        TPoly::from_ints(&[0, 1])
    }

    /// -1 for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(num::Zero::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Evaluate at a rational point.
    pub fn eval(&self, t: &BigRational) -> BigRational {
        let mut acc: BigRational = num::Zero::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// `u_d = u_{deg+1-d}` for `1 <= d <= deg`, with a zero constant term —
    /// the symmetry satisfied by the `dist` polynomials of `(>,<=)`-avoiders.
    pub fn is_dist_palindromic(&self) -> bool {
        if self.coeffs.is_empty() {
            return true;
        }
        if !num::Zero::is_zero(&self.coeff(0)) {
            return false;
        }
        let top = self.coeffs.len() - 1; // degree
        (1..=top).all(|d| self.coeff(d) == self.coeff(top + 1 - d))
    }
}

impl Coeff for TPoly {
    fn zero() -> Self {
        TPoly { coeffs: Vec::new() }
    }

    fn one() -> Self {
        TPoly::constant(num::One::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        TPoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }

    fn sub(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        TPoly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return <TPoly as Coeff>::zero();
        }
        let mut out = vec![num::Zero::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if num::Zero::is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TPoly::new(out)
    }

    /// Only nonzero constants are units in the polynomial ring.
    fn inverse(&self) -> Option<Self> {
        if self.coeffs.len() == 1 && !num::Zero::is_zero(&self.coeffs[0]) {
            Some(TPoly::constant(self.coeffs[0].recip()))
        } else {
            None
        }
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if num::Zero::is_zero(c) {
                continue;
            }
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
                first = false;
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mag = c.abs();
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !num::One::is_one(&mag) {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
