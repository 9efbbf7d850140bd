//! Closed-form generating functions for the avoidance classes, expanded
//! exactly to a requested order.
//!
//! Univariate entries count avoiders by length (ordinary or exponential);
//! bivariate entries refine by the `dist` statistic, with the coefficient of
//! `z^n` a polynomial in `t`. Names: `catalan`; `ogf_gt_le` (the radical OGF
//! counting `(>,<=)`-avoiders); `egf_ne_ne` and `egf_lt_lt`; and the
//! `I_<r1>_<r2>[_<r3>]` family of `dist` generating functions for the ten
//! triples whose avoiders satisfy a unimodality condition.

use num::BigRational;

use super::{rational, BivariateSeries, Series, TPoly, TruncatedSeries};
use crate::{Error, Result};

/// Whether a catalog entry counts by ordinary or exponential generating
/// function, and whether it carries the `dist` refinement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogKind {
    Ogf,
    Egf,
    Bivariate,
}

/// A named catalog entry expanded to a fixed order.
#[derive(Debug, Clone, PartialEq)]
pub enum CatalogSeries {
    Univariate(CatalogKind, TruncatedSeries),
    Bivariate(BivariateSeries),
}

impl CatalogSeries {
    pub fn kind(&self) -> CatalogKind {
        match self {
            CatalogSeries::Univariate(kind, _) => *kind,
            CatalogSeries::Bivariate(_) => CatalogKind::Bivariate,
        }
    }
}

/// All catalog names, with their kinds.
pub const CATALOG_NAMES: &[(&str, CatalogKind)] = &[
    ("catalan", CatalogKind::Ogf),
    ("ogf_gt_le", CatalogKind::Ogf),
    ("egf_ne_ne", CatalogKind::Egf),
    ("egf_lt_lt", CatalogKind::Egf),
    ("I_lt_dash_lt", CatalogKind::Bivariate),
    ("I_ne_lt", CatalogKind::Bivariate),
    ("I_ne_le", CatalogKind::Bivariate),
    ("I_gt_lt", CatalogKind::Bivariate),
    ("I_gt_le", CatalogKind::Bivariate),
    ("I_gt_ne", CatalogKind::Bivariate),
    ("I_ge_ne", CatalogKind::Bivariate),
    ("I_eq_lt", CatalogKind::Bivariate),
    ("I_eq_le", CatalogKind::Bivariate),
    ("I_ge_le_ne", CatalogKind::Bivariate),
];

/// Expand the named generating function exactly to the given order.
pub fn gf_catalog(name: &str, order: usize) -> Result<CatalogSeries> {
    Ok(match name {
        "catalan" => CatalogSeries::Univariate(CatalogKind::Ogf, catalan_gf(order)?),
        "ogf_gt_le" => CatalogSeries::Univariate(CatalogKind::Ogf, ogf_gt_le(order)?),
        "egf_ne_ne" => CatalogSeries::Univariate(CatalogKind::Egf, egf_ne_ne(order)?),
        "egf_lt_lt" => CatalogSeries::Univariate(CatalogKind::Egf, egf_lt_lt(order)?),
        "I_lt_dash_lt" => CatalogSeries::Bivariate(dist_lt_dash_lt(order)?),
        "I_ne_lt" => CatalogSeries::Bivariate(dist_ne_lt(order)?),
        "I_ne_le" => CatalogSeries::Bivariate(dist_ne_le(order)?),
        "I_gt_lt" => CatalogSeries::Bivariate(dist_gt_lt(order)?),
        "I_gt_le" | "dist_gt_le" => CatalogSeries::Bivariate(dist_gt_le(order)?),
        "I_gt_ne" => CatalogSeries::Bivariate(dist_gt_ne(order)?),
        "I_ge_ne" => CatalogSeries::Bivariate(dist_ge_ne(order)?),
        "I_eq_lt" => CatalogSeries::Bivariate(dist_eq_lt(order)?),
        "I_eq_le" => CatalogSeries::Bivariate(dist_eq_le(order)?),
        "I_ge_le_ne" => CatalogSeries::Bivariate(dist_ge_le_ne(order)?),
        _ => return Err(Error::UnknownName { kind: "series", name: name.into() }),
    })
}

// ---- univariate helpers ----

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn uni(order: usize, terms: &[(usize, i64)]) -> TruncatedSeries {
    let terms: Vec<(usize, BigRational)> = terms.iter().map(|&(p, c)| (p, q(c))).collect();
    Series::from_terms(order, &terms)
}

/// `C(z) = (1 - sqrt(1 - 4z)) / (2z)`, the Catalan OGF.
pub fn catalan_gf(order: usize) -> Result<TruncatedSeries> {
    let root = uni(order + 1, &[(0, 1), (1, -4)]).sqrt()?;
    let num = Series::one(order + 1).sub(&root);
    num.shift_down(1)?.div(&uni(order, &[(0, 2)]))
}

/// `(1 + 2z - sqrt(1 - 4z - 4z^2)) / (4z)`: the OGF counting
/// `(>,<=)`-avoiders, equivalently marked Dyck paths with an unmarked tail.
pub fn ogf_gt_le(order: usize) -> Result<TruncatedSeries> {
    let root = uni(order + 1, &[(0, 1), (1, -4), (2, -4)]).sqrt()?;
    let num = uni(order + 1, &[(0, 1), (1, 2)]).sub(&root);
    num.shift_down(1)?.div(&uni(order, &[(0, 4)]))
}

/// `P(z) = C(z + z^2)`: marked Dyck paths by size (`N` steps weigh 1, `N*`
/// steps weigh 2, `E` steps are free).
pub fn gf_marked_paths(order: usize) -> Result<TruncatedSeries> {
    catalan_gf(order)?.compose(&uni(order, &[(1, 1), (2, 1)]))
}

/// `exp(z + z^2/2)`: the EGF of `(!=,!=)`-avoiders (involutions by length).
pub fn egf_ne_ne(order: usize) -> Result<TruncatedSeries> {
    let exp = exp_series(order);
    let inner = Series::from_terms(order, &[(1, q(1)), (2, rational(1, 2))]);
    exp.compose(&inner)
}

fn exp_series(order: usize) -> TruncatedSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut factorial = BigRational::from_integer(1.into());
    coeffs.push(factorial.clone().recip());
    for n in 1..=order {
        factorial *= BigRational::from_integer(n.into());
        coeffs.push(factorial.clone().recip());
    }
    Series::from_coeffs(coeffs)
}

/// EGF of `(<,<)`-avoiders (no three strictly increasing adjacent entries;
/// equally, permutations with no adjacent triple in decreasing order).
///
/// Expanded as the reciprocal of `sum_k (z^{3k}/(3k)! - z^{3k+1}/(3k+1)!)`,
/// which keeps every coefficient rational; the trigonometric closed form
/// involves irrational constants and is only documentation here.
pub fn egf_lt_lt(order: usize) -> Result<TruncatedSeries> {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut factorial = BigRational::from_integer(1.into());
    for n in 0..=order {
        if n > 0 {
            factorial *= BigRational::from_integer(n.into());
        }
        coeffs.push(match n % 3 {
            0 => factorial.clone().recip(),
            1 => -factorial.clone().recip(),
            _ => BigRational::from_integer(0.into()),
        });
    }
    Series::one(order).div(&Series::from_coeffs(coeffs))
}

/// Multiply the coefficient of `z^n` by `n!`, asserting integrality: turns
/// an EGF into its counting sequence.
pub fn egf_to_counts(s: &TruncatedSeries) -> Result<Vec<u128>> {
    let mut factorial = BigRational::from_integer(1.into());
    let mut scaled = Vec::with_capacity(s.order() + 1);
    for (n, c) in s.coeffs().iter().enumerate() {
        if n > 0 {
            factorial *= BigRational::from_integer((n as i64).into());
        }
        scaled.push(c * &factorial);
    }
    TruncatedSeries::from_coeffs(scaled).integer_coeffs()
}

// ---- bivariate helpers ----

fn tp(coeffs: &[i64]) -> TPoly {
    TPoly::from_ints(coeffs)
}

fn biv(order: usize, terms: &[(usize, &[i64])]) -> BivariateSeries {
    let terms: Vec<(usize, TPoly)> = terms.iter().map(|&(p, c)| (p, tp(c))).collect();
    Series::from_terms(order, &terms)
}

/// `P(z,t)`: marked Dyck paths by size and `dist` (elbows plus non-elbow
/// marked steps). Satisfies `(z + z^2 t) P^2 - (1 + z - zt) P + 1 = 0`.
pub fn gf_marked_paths_dist(order: usize) -> Result<BivariateSeries> {
    let a = biv(order + 1, &[(1, &[1]), (2, &[0, 1])]); // z + z^2 t
    let b = biv(order + 1, &[(0, &[1]), (1, &[1, -1])]); // 1 + z(1 - t)
    let disc = b.mul(&b).sub(&a.scale(&tp(&[4])));
    let num = b.sub(&disc.sqrt()?);
    // 2(z + z^2 t) = 2z (1 + zt)
    num.shift_down(1)?.div(&biv(order, &[(0, &[2]), (1, &[0, 2])]))
}

/// `dist` generating function of `(>,<=)`-avoiders:
/// `(1 + z(3-t) - sqrt(1 - z(2 + 2t - z + 6zt - z t^2))) / (4z)`.
pub fn dist_gt_le(order: usize) -> Result<BivariateSeries> {
    let radicand = biv(order + 1, &[(0, &[1]), (1, &[-2, -2]), (2, &[1, -6, 1])]);
    let num = biv(order + 1, &[(0, &[1]), (1, &[3, -1])]).sub(&radicand.sqrt()?);
    num.shift_down(1)?.div(&biv(order, &[(0, &[4])]))
}

/// `P~(z,t)`: multi-marked Dyck paths by size and `dist`, computed from the
/// fixed-point equation `P~ = 1 / (1 - z(t-1) - (z + z^2 t/(1-z)) P~)`
/// rather than from a printed radical form.
pub fn gf_multi_marked_paths_dist(order: usize) -> Result<BivariateSeries> {
    let one = BivariateSeries::one(order);
    let inv_1mz = one.div(&biv(order, &[(0, &[1]), (1, &[-1])]))?;
    let a = biv(order, &[(1, &[1])]).add(&biv(order, &[(2, &[0, 1])]).mul(&inv_1mz));
    let u = biv(order, &[(1, &[-1, 1])]); // z(t - 1)
    let mut p = one.clone();
    // each iteration fixes one more coefficient
    for _ in 0..=order {
        p = one.div(&one.sub(&u).sub(&a.mul(&p)))?;
    }
    Ok(p)
}

/// `dist` generating function of `(>,<,-)`-avoiders, via the radical form
/// `(1 + z(2-t) - z^2(1-t) - (1-z) sqrt((1+z-zt)^2 - 4z(1-z+zt)/(1-z))) /
/// (2z(2-z))`.
pub fn dist_gt_lt(order: usize) -> Result<BivariateSeries> {
    let one = BivariateSeries::one(order + 1);
    let inv_1mz = one.div(&biv(order + 1, &[(0, &[1]), (1, &[-1])]))?;
    let b = biv(order + 1, &[(0, &[1]), (1, &[1, -1])]); // 1 + z - zt
    let c = biv(order + 1, &[(1, &[4]), (2, &[-4, 4])]); // 4z(1 - z + zt)
    let radicand = b.mul(&b).sub(&c.mul(&inv_1mz));
    let one_minus_z = biv(order + 1, &[(0, &[1]), (1, &[-1])]);
    let num = biv(order + 1, &[(0, &[1]), (1, &[2, -1]), (2, &[-1, 1])])
        .sub(&one_minus_z.mul(&radicand.sqrt()?));
    // 2z(2-z) = 2z * (2 - z)
    num.shift_down(1)?.div(&biv(order, &[(0, &[4]), (1, &[-2])]))
}

/// `dist` generating function of `(>,!=,-)`-avoiders.
pub fn dist_gt_ne(order: usize) -> Result<BivariateSeries> {
    let b = biv(order, &[(0, &[1]), (1, &[1, -1])]); // 1 + z - zt
    let root = b.mul(&b).sub(&biv(order, &[(1, &[4])])).sqrt()?;
    let num = biv(order, &[(0, &[1]), (1, &[-2]), (2, &[1, -2, 1])])
        .add(&biv(order, &[(0, &[1]), (1, &[-1, 1])]).mul(&root));
    let den = biv(order, &[(0, &[2]), (1, &[-2])]).mul(&root);
    num.div(&den)
}

/// `dist` generating function of `(<,-,<)`-avoiders.
pub fn dist_lt_dash_lt(order: usize) -> Result<BivariateSeries> {
    let num = biv(
        order,
        &[(0, &[1]), (1, &[-3, 1]), (2, &[3, -2, 1]), (3, &[-1, 1])],
    );
    let one_minus_z = biv(order, &[(0, &[1]), (1, &[-1])]);
    num.div(&one_minus_z.mul(&one_minus_z).mul(&one_minus_z))
}

/// `dist` generating function of `(!=,<,-)`-avoiders.
pub fn dist_ne_lt(order: usize) -> Result<BivariateSeries> {
    let num = biv(
        order,
        &[
            (0, &[1]),
            (1, &[-4, 1]),
            (2, &[6, -4, 1]),
            (3, &[-4, 5, -1]),
            (4, &[1, -2, 1]),
        ],
    );
    let one_minus_z = biv(order, &[(0, &[1]), (1, &[-1])]);
    let den = one_minus_z
        .mul(&one_minus_z)
        .mul(&biv(order, &[(0, &[1]), (1, &[-2]), (2, &[1, -1])]));
    num.div(&den)
}

/// `dist` generating function of `(!=,<=,-)`-avoiders.
pub fn dist_ne_le(order: usize) -> Result<BivariateSeries> {
    let num = biv(order, &[(0, &[1]), (1, &[-2, 1]), (2, &[1, -2, 1]), (3, &[0, 1])]);
    let den = biv(order, &[(0, &[1]), (1, &[-1])])
        .mul(&biv(order, &[(0, &[1]), (1, &[-1]), (2, &[0, -1])]));
    num.div(&den)
}

/// `dist` generating function of `(>=,!=,-)`-avoiders.
pub fn dist_ge_ne(order: usize) -> Result<BivariateSeries> {
    let num = biv(order, &[(0, &[1]), (1, &[-1, -1]), (2, &[0, 2])]);
    let one_minus_zt = biv(order, &[(0, &[1]), (1, &[0, -1])]);
    let den = biv(order, &[(0, &[1]), (1, &[-1])]).mul(&one_minus_zt).mul(&one_minus_zt);
    num.div(&den)
}

/// `dist` generating function of `(=,<,-)`-avoiders:
/// `(1-z)/(1-z-zt) = 1 + sum_n t(t+1)^{n-1} z^n`.
pub fn dist_eq_lt(order: usize) -> Result<BivariateSeries> {
    biv(order, &[(0, &[1]), (1, &[-1])]).div(&biv(order, &[(0, &[1]), (1, &[-1, -1])]))
}

/// `dist` generating function of `(=,<=,-)`-avoiders: `1/(1 - zt - z^2 t)`.
pub fn dist_eq_le(order: usize) -> Result<BivariateSeries> {
    BivariateSeries::one(order).div(&biv(order, &[(0, &[1]), (1, &[0, -1]), (2, &[0, -1])]))
}

/// `dist` generating function of `(>=,<=,!=)`-avoiders.
pub fn dist_ge_le_ne(order: usize) -> Result<BivariateSeries> {
    let num = biv(order, &[(0, &[1]), (1, &[-1]), (3, &[0, 1])]);
    let den = biv(order, &[(0, &[1]), (1, &[-1])])
        .mul(&biv(order, &[(0, &[1]), (1, &[0, -1]), (2, &[0, -1])]));
    num.div(&den)
}

/// OGF of multi-slanted underdiagonal paths (steps `N`, `E`, `D_t`) ending
/// on `x = n`: `(1 - 3z + 2z^2 - sqrt(1 - 6z + 5z^2)) / (2z^2 (2 - z))`.
pub fn gf_multi_slanted_paths(order: usize) -> Result<TruncatedSeries> {
    let root = uni(order + 2, &[(0, 1), (1, -6), (2, 5)]).sqrt()?;
    let num = uni(order + 2, &[(0, 1), (1, -3), (2, 2)]).sub(&root);
    num.shift_down(2)?.div(&uni(order, &[(0, 4), (1, -2)]))
}
