//! Named verification suites: each check recomputes a quantity along two
//! independent routes (brute force vs closed form, bijection vs direct
//! count, series vs enumeration) and records agreement.
//!
//! The CLI `verify` command runs these; the integration tests reuse them.

use std::collections::{BTreeMap, BTreeSet};

use num::{BigRational, One};
use serde::Serialize;

use crate::bijections as bij;
use crate::core::{InversionSequence, RelationPattern, TriplePattern};
use crate::enumerate::{count_avoiders, count_avoiders_triple, enumerate_all};
use crate::permutations::{for_each_permutation, Permutation, VincularPattern};
use crate::recurrences::{closed_form, rec_eq_eq, rec_ne_ne, rec_refined_generic, rec_refined_gt_ge};
use crate::series::{
    egf_to_counts, gf_catalog, gf_marked_paths_dist, gf_multi_marked_paths_dist, CatalogSeries,
    Series,
};
use crate::{Error, Result};

/// Outcome of one named check.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn from_eq<T: PartialEq + std::fmt::Debug>(name: impl Into<String>, got: T, want: T) -> Check {
        let passed = got == want;
        Check {
            name: name.into(),
            passed,
            detail: if passed {
                format!("value {want:?}")
            } else {
                format!("expected {want:?}, got {got:?}")
            },
        }
    }

    pub fn from_bool(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

/// The verification suites, in the order `all` runs them.
pub const SUITES: &[&str] = &[
    "table1",
    "table2",
    "bijections",
    "series",
    "recurrences",
    "dictionary",
    "dist-symmetry",
];

pub fn run_suite(suite: &str) -> Result<Vec<Check>> {
    Ok(match suite {
        "table1" => suite_table1(),
        "table2" => suite_table2()?,
        "bijections" => suite_bijections(9)?,
        "series" => suite_series()?,
        "recurrences" => suite_recurrences()?,
        "dictionary" => suite_dictionary(8)?,
        "dist-symmetry" => suite_dist_symmetry()?,
        "all" => {
            let mut checks = Vec::new();
            for s in SUITES {
                checks.extend(run_suite(s)?);
            }
            checks
        }
        _ => return Err(Error::UnknownName { kind: "verification suite", name: suite.into() }),
    })
}

/// One row of the avoider-count reference table: the patterns of a Wilf
/// class whose counting sequence matches a known OEIS entry, with the terms
/// for lengths 1 through 9.
pub struct ReferenceRow {
    pub patterns: &'static [&'static str],
    pub oeis_id: &'static str,
    pub description: &'static str,
    pub terms: [u128; 9],
}

/// The 14 pattern classes with known OEIS counterparts (terms for
/// `n = 1..=9`), least avoided first.
pub const TABLE1: &[ReferenceRow] = &[
    ReferenceRow {
        patterns: &["<=,!="],
        oeis_id: "A040000",
        description: "1, then all 2s",
        terms: [1, 2, 2, 2, 2, 2, 2, 2, 2],
    },
    ReferenceRow {
        patterns: &["<=,>="],
        oeis_id: "A000027",
        description: "n",
        terms: [1, 2, 3, 4, 5, 6, 7, 8, 9],
    },
    ReferenceRow {
        patterns: &[">=,!="],
        oeis_id: "A000124",
        description: "C(n,2) + 1 (central polygonal numbers)",
        terms: [1, 2, 4, 7, 11, 16, 22, 29, 37],
    },
    ReferenceRow {
        patterns: &[">=,<="],
        oeis_id: "A000045",
        description: "Fibonacci F(n+1)",
        terms: [1, 2, 3, 5, 8, 13, 21, 34, 55],
    },
    ReferenceRow {
        patterns: &["!=,<="],
        oeis_id: "A000071",
        description: "F(n+2) - 1",
        terms: [1, 2, 4, 7, 12, 20, 33, 54, 88],
    },
    ReferenceRow {
        patterns: &[">=,<", "<,>=", "!=,>="],
        oeis_id: "A000079",
        description: "2^(n-1)",
        terms: [1, 2, 4, 8, 16, 32, 64, 128, 256],
    },
    ReferenceRow {
        patterns: &["!=,!="],
        oeis_id: "A000085",
        description: "involutions of [n]",
        terms: [1, 2, 4, 10, 26, 76, 232, 764, 2620],
    },
    ReferenceRow {
        patterns: &["<=,>"],
        oeis_id: "A000108",
        description: "Catalan numbers",
        terms: [1, 2, 5, 14, 42, 132, 429, 1430, 4862],
    },
    ReferenceRow {
        patterns: &[">,<="],
        oeis_id: "A071356",
        description: "underdiagonal paths with steps N, E, D to x = n",
        terms: [1, 2, 6, 20, 72, 272, 1064, 4272, 17504],
    },
    ReferenceRow {
        patterns: &["=,!="],
        oeis_id: "A003422",
        description: "left factorial 0! + 1! + ... + (n-1)!",
        terms: [1, 2, 4, 10, 34, 154, 874, 5914, 46234],
    },
    ReferenceRow {
        patterns: &[">=,>=", "<,<"],
        oeis_id: "A049774",
        description: "permutations with no adjacent decreasing triple",
        terms: [1, 2, 5, 17, 70, 349, 2017, 13358, 99377],
    },
    ReferenceRow {
        patterns: &["!=,="],
        oeis_id: "A000522",
        description: "sum of (n-1)!/i!",
        terms: [1, 2, 5, 16, 65, 326, 1957, 13700, 109601],
    },
    ReferenceRow {
        patterns: &[">=,>", ">,>="],
        oeis_id: "A200403",
        description: "permutations avoiding the vincular pattern (124)3",
        terms: [1, 2, 6, 23, 107, 584, 3660, 25910, 204564],
    },
    ReferenceRow {
        patterns: &["=,="],
        oeis_id: "A052169",
        description: "((n+1)! - d(n+1)) / n",
        terms: [1, 2, 5, 19, 91, 531, 3641, 28673, 254871],
    },
];

/// One row of the unimodality reference table: a classical triple, the name
/// of its closed counting form (if polynomial/Fibonacci-type), and its
/// `dist` generating function in the series catalog.
pub struct UnimodalRow {
    pub triple: &'static str,
    pub closed_form: Option<&'static str>,
    pub gf_name: &'static str,
}

/// The ten triples whose avoiders are characterized by unimodality
/// conditions.
pub const TABLE2: &[UnimodalRow] = &[
    UnimodalRow { triple: "<,-,<", closed_form: Some("lt_dash_lt"), gf_name: "I_lt_dash_lt" },
    UnimodalRow { triple: "!=,<,-", closed_form: Some("ne_lt_dash"), gf_name: "I_ne_lt" },
    UnimodalRow { triple: "!=,<=,-", closed_form: Some("ne_le_dash"), gf_name: "I_ne_le" },
    UnimodalRow { triple: ">,<,-", closed_form: None, gf_name: "I_gt_lt" },
    UnimodalRow { triple: ">,<=,-", closed_form: None, gf_name: "I_gt_le" },
    UnimodalRow { triple: ">,!=,-", closed_form: Some("gt_ne_dash"), gf_name: "I_gt_ne" },
    UnimodalRow { triple: ">=,!=,-", closed_form: Some("ge_ne_dash"), gf_name: "I_ge_ne" },
    UnimodalRow { triple: "=,<,-", closed_form: Some("eq_lt_dash"), gf_name: "I_eq_lt" },
    UnimodalRow { triple: "=,<=,-", closed_form: Some("eq_le_dash"), gf_name: "I_eq_le" },
    UnimodalRow { triple: ">=,<=,!=", closed_form: Some("ge_le_ne"), gf_name: "I_ge_le_ne" },
];

/// Reference counts of `(>,<,-)`-avoiders for lengths 1..=9 (OEIS A033321,
/// also the number of permutations avoiding 2143, 3142 and 4132), frozen
/// from brute force cross-checked against the radical generating function.
pub const GT_LT_DASH_TERMS: [u128; 9] = [1, 2, 6, 21, 79, 311, 1265, 5275, 22431];

fn pattern(s: &str) -> RelationPattern {
    s.parse().expect("valid pattern literal")
}

fn triple(s: &str) -> TriplePattern {
    s.parse().expect("valid triple literal")
}

// ---- table1 ----

pub fn suite_table1() -> Vec<Check> {
    let mut checks = Vec::new();
    for row in TABLE1 {
        for p in row.patterns {
            let got: Vec<u128> = (1..=9).map(|n| count_avoiders(pattern(p), n).total).collect();
            checks.push(Check::from_eq(
                format!("table1/{}/{}", row.oeis_id, p),
                got,
                row.terms.to_vec(),
            ));
        }
    }
    checks
}

// ---- table2 ----

fn univariate_counts(gf_name: &str, order: usize) -> Result<Vec<u128>> {
    let series = match gf_catalog(gf_name, order)? {
        CatalogSeries::Bivariate(b) => b.specialize_t(&BigRational::one()),
        CatalogSeries::Univariate(_, u) => u,
    };
    series.integer_coeffs()
}

pub fn suite_table2() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for row in TABLE2 {
        let t = triple(row.triple);
        let brute: Vec<u128> = (1..=9)
            .map(|n| count_avoiders_triple(t, n).map(|c| c.total))
            .collect::<Result<_>>()?;
        // reference route: closed form where one exists, otherwise the
        // radical generating function at t = 1
        let reference: Vec<u128> = match row.closed_form {
            Some(name) => (1..=9).map(|n| closed_form(name, n)).collect::<Result<_>>()?,
            None => univariate_counts(row.gf_name, 9)?[1..].to_vec(),
        };
        checks.push(Check::from_eq(format!("table2/{}/counts", row.triple), brute, reference));
    }
    // frozen terms for the one Table-2 class matching an external sequence
    let gt_lt: Vec<u128> = (1..=9)
        .map(|n| count_avoiders_triple(triple(">,<,-"), n).map(|c| c.total))
        .collect::<Result<_>>()?;
    checks.push(Check::from_eq("table2/A033321/terms", gt_lt, GT_LT_DASH_TERMS.to_vec()));
    Ok(checks)
}

// ---- bijections ----

pub fn suite_bijections(n_max: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 0..=n_max {
        checks.extend(check_theta(n)?);
        checks.extend(check_plateau_exchange(n)?);
        checks.extend(check_involutions(n)?);
        checks.extend(check_subsets(n)?);
        checks.extend(check_compositions(n)?);
        checks.extend(check_dyck(n)?);
        checks.extend(check_marked_paths(n)?);
        checks.extend(check_multi_marked_paths(n)?);
    }
    Ok(checks)
}

fn check_theta(n: usize) -> Result<Vec<Check>> {
    let mut round_trip = true;
    for e in enumerate_all(n)? {
        if bij::inversion_sequence_of(&bij::permutation_of(&e)) != e {
            round_trip = false;
        }
    }
    Ok(vec![Check::from_bool(
        format!("bijections/theta/round-trip/n={n}"),
        round_trip,
        "theta(theta_inverse(e)) = e over all of I_n",
    )])
}

fn check_plateau_exchange(n: usize) -> Result<Vec<Check>> {
    let source = pattern(">=,>");
    let target = pattern(">,>=");
    let mut images = BTreeSet::new();
    let mut ok = true;
    let mut by_last_src: BTreeMap<u32, u128> = BTreeMap::new();
    let mut by_last_img: BTreeMap<u32, u128> = BTreeMap::new();
    for e in enumerate_all(n)? {
        if !e.avoids(source) {
            continue;
        }
        let image = bij::raise_plateaus(&e)?;
        ok &= image.avoids(target);
        if n > 0 {
            ok &= image.entry(n) == e.entry(n);
            *by_last_src.entry(e.entry(n)).or_insert(0) += 1;
            *by_last_img.entry(image.entry(n)).or_insert(0) += 1;
        }
        ok &= bij::lower_plateaus(&image)? == e;
        images.insert(image);
    }
    let target_counts = count_avoiders(target, n);
    let mut checks = vec![
        Check::from_bool(
            format!("bijections/plateau-exchange/round-trip/n={n}"),
            ok,
            "image avoids (>,>=), preserves the last entry, and maps back",
        ),
        Check::from_eq(
            format!("bijections/plateau-exchange/image-count/n={n}"),
            images.len() as u128,
            target_counts.total,
        ),
    ];
    if n > 0 {
        // last entries are preserved, so each restriction to a fixed last
        // entry k is itself a bijection between the two refined classes
        checks.push(Check::from_bool(
            format!("bijections/plateau-exchange/by-last-entry/n={n}"),
            by_last_img == by_last_src && by_last_src == target_counts.by_last_entry,
            "per-last-entry counts of the two classes coincide",
        ));
    }
    Ok(checks)
}

fn check_involutions(n: usize) -> Result<Vec<Check>> {
    let mut images = BTreeSet::new();
    let mut ok = true;
    for e in enumerate_all(n)? {
        if !e.avoids(pattern("!=,!=")) {
            continue;
        }
        let pi = bij::to_involution(&e)?;
        ok &= pi.is_involution();
        ok &= bij::from_involution(&pi)? == e;
        images.insert(pi);
    }
    let mut involutions = BTreeSet::new();
    for_each_permutation(n, |pi| {
        if pi.is_involution() {
            involutions.insert(pi.clone());
        }
    });
    Ok(vec![
        Check::from_bool(
            format!("bijections/involution/round-trip/n={n}"),
            ok,
            "images are involutions and map back",
        ),
        Check::from_bool(
            format!("bijections/involution/image/n={n}"),
            images == involutions,
            format!("image is exactly the {} involutions", involutions.len()),
        ),
    ])
}

fn check_subsets(n: usize) -> Result<Vec<Check>> {
    let mut images = BTreeSet::new();
    let mut ok = true;
    for e in enumerate_all(n)? {
        if !e.avoids(pattern(">=,!=")) {
            continue;
        }
        let set = bij::to_subset(&e)?;
        ok &= bij::from_subset(&set, n)? == e;
        images.insert(set);
    }
    let mut expected = BTreeSet::new();
    expected.insert(BTreeSet::new());
    if n >= 2 {
        for a in 0..=(n as u32 - 2) {
            expected.insert(BTreeSet::from([a]));
            for b in 0..a {
                expected.insert(BTreeSet::from([a, b]));
            }
        }
    }
    Ok(vec![
        Check::from_bool(format!("bijections/subset/round-trip/n={n}"), ok, "subset encoding maps back"),
        Check::from_bool(
            format!("bijections/subset/image/n={n}"),
            images == expected,
            format!("image is exactly the {} subsets of size <= 2", expected.len()),
        ),
    ])
}

fn check_compositions(n: usize) -> Result<Vec<Check>> {
    let mut images = BTreeSet::new();
    let mut ok = true;
    for e in enumerate_all(n)? {
        if !e.avoids(pattern(">=,<=")) {
            continue;
        }
        let parts = bij::to_composition(&e)?;
        ok &= parts.iter().map(|&p| p as usize).sum::<usize>() == n;
        ok &= parts.iter().all(|&p| p == 1 || p == 2);
        ok &= bij::from_composition(&parts)? == e;
        images.insert(parts);
    }
    let expected = compositions_of(n);
    Ok(vec![
        Check::from_bool(format!("bijections/composition/round-trip/n={n}"), ok, "composition encoding maps back"),
        Check::from_bool(
            format!("bijections/composition/image/n={n}"),
            images == expected,
            format!("image is exactly the {} compositions with parts 1,2", expected.len()),
        ),
    ])
}

fn compositions_of(n: usize) -> BTreeSet<Vec<u32>> {
    let mut out = BTreeSet::new();
    let mut stack: Vec<(usize, Vec<u32>)> = vec![(0, Vec::new())];
    while let Some((sum, parts)) = stack.pop() {
        if sum == n {
            out.insert(parts);
            continue;
        }
        for part in 1..=2u32 {
            if sum + part as usize <= n {
                let mut next = parts.clone();
                next.push(part);
                stack.push((sum + part as usize, next));
            }
        }
    }
    out
}

fn check_dyck(n: usize) -> Result<Vec<Check>> {
    let mut images = BTreeSet::new();
    let mut ok = true;
    for e in enumerate_all(n)? {
        if !e.avoids(pattern("<=,>")) {
            continue;
        }
        let path = bij::to_dyck_path(&e)?;
        ok &= bij::from_dyck_path(&path)? == e;
        images.insert(path.to_string());
    }
    let expected: BTreeSet<String> = bij::enumerate_dyck(n).iter().map(|p| p.to_string()).collect();
    Ok(vec![
        Check::from_bool(format!("bijections/dyck/round-trip/n={n}"), ok, "Dyck encoding maps back"),
        Check::from_bool(
            format!("bijections/dyck/image/n={n}"),
            images == expected,
            format!("image is exactly the {} Dyck paths", expected.len()),
        ),
    ])
}

fn check_marked_paths(n: usize) -> Result<Vec<Check>> {
    let t = triple(">,<=,-");
    let mut marked_images = BTreeSet::new();
    let mut slanted_images = BTreeSet::new();
    let mut ok = true;
    let mut dist_ok = true;
    for e in enumerate_all(n)? {
        if !e.avoids_triple(t) {
            continue;
        }
        let path = bij::to_marked_path(&e)?;
        ok &= bij::from_marked_path(&path)? == e;
        dist_ok &= path.dist() == e.dist();
        marked_images.insert(path.to_string());
        if n >= 1 {
            let slanted = bij::to_slanted_path(&e)?;
            ok &= slanted.extent() == n - 1;
            ok &= bij::from_slanted_path(&slanted)? == e;
            slanted_images.insert(slanted.to_string());
        }
    }
    let expected_marked: BTreeSet<String> =
        bij::enumerate_marked(n, true).iter().map(|p| p.to_string()).collect();
    let mut checks = vec![
        Check::from_bool(
            format!("bijections/marked-path/round-trip/n={n}"),
            ok,
            "marked-path and slanted-path encodings map back",
        ),
        Check::from_bool(
            format!("bijections/marked-path/dist/n={n}"),
            dist_ok,
            "dist(e) equals the path statistic",
        ),
        Check::from_bool(
            format!("bijections/marked-path/image/n={n}"),
            marked_images == expected_marked,
            format!("image is exactly the {} unmarked-tail paths", expected_marked.len()),
        ),
    ];
    if n >= 1 {
        let expected_slanted: BTreeSet<String> =
            bij::enumerate_slanted(n - 1, true).iter().map(|p| p.to_string()).collect();
        checks.push(Check::from_bool(
            format!("bijections/slanted-path/image/n={n}"),
            slanted_images == expected_slanted,
            format!("image is exactly the {} binary slanted paths of extent n-1", expected_slanted.len()),
        ));
    }
    Ok(checks)
}

fn check_multi_marked_paths(n: usize) -> Result<Vec<Check>> {
    let t = triple(">,<,-");
    let mut marked_images = BTreeSet::new();
    let mut slanted_images = BTreeSet::new();
    let mut ok = true;
    let mut dist_ok = true;
    for e in enumerate_all(n)? {
        if !e.avoids_triple(t) {
            continue;
        }
        let path = bij::to_multi_marked_path(&e)?;
        ok &= bij::from_multi_marked_path(&path)? == e;
        dist_ok &= path.dist() == e.dist();
        marked_images.insert(path.to_string());
        if n >= 1 {
            let slanted = bij::to_multi_slanted_path(&e)?;
            ok &= slanted.extent() == n - 1;
            ok &= bij::from_multi_slanted_path(&slanted)? == e;
            slanted_images.insert(slanted.to_string());
        }
    }
    let expected_marked: BTreeSet<String> =
        bij::enumerate_multi_marked(n, true).iter().map(|p| p.to_string()).collect();
    let mut checks = vec![
        Check::from_bool(
            format!("bijections/multi-marked-path/round-trip/n={n}"),
            ok,
            "multi-marked and multi-slanted encodings map back",
        ),
        Check::from_bool(
            format!("bijections/multi-marked-path/dist/n={n}"),
            dist_ok,
            "dist(e) equals the path statistic",
        ),
        Check::from_bool(
            format!("bijections/multi-marked-path/image/n={n}"),
            marked_images == expected_marked,
            format!("image is exactly the {} unmarked-tail multi-marked paths", expected_marked.len()),
        ),
    ];
    if n >= 1 {
        let expected_slanted: BTreeSet<String> =
            bij::enumerate_slanted(n - 1, false).iter().map(|p| p.to_string()).collect();
        checks.push(Check::from_bool(
            format!("bijections/multi-slanted-path/image/n={n}"),
            slanted_images == expected_slanted,
            format!("image is exactly the {} slanted paths of extent n-1", expected_slanted.len()),
        ));
    }
    Ok(checks)
}

// ---- series ----

pub fn suite_series() -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    // catalog OGFs against brute force
    let catalan_counts = univariate_counts("catalan", 10)?;
    let le_gt: Vec<u128> = (0..=10).map(|n| count_avoiders(pattern("<=,>"), n).total).collect();
    checks.push(Check::from_eq("series/catalan/vs-brute-force", catalan_counts, le_gt));

    let radical = univariate_counts("ogf_gt_le", 11)?;
    let gt_le: Vec<u128> = (0..=11)
        .map(|n| count_avoiders_triple(triple(">,<=,-"), n).map(|c| c.total))
        .collect::<Result<_>>()?;
    checks.push(Check::from_eq("series/ogf_gt_le/vs-brute-force", radical, gt_le));

    let involutions = match gf_catalog("egf_ne_ne", 10)? {
        CatalogSeries::Univariate(_, s) => egf_to_counts(&s)?,
        _ => unreachable!(),
    };
    let ne_ne: Vec<u128> = (0..=10).map(|n| count_avoiders(pattern("!=,!="), n).total).collect();
    checks.push(Check::from_eq("series/egf_ne_ne/vs-brute-force", involutions, ne_ne));

    let no_triple_rise = match gf_catalog("egf_lt_lt", 10)? {
        CatalogSeries::Univariate(_, s) => egf_to_counts(&s)?,
        _ => unreachable!(),
    };
    let lt_lt: Vec<u128> = (0..=10).map(|n| count_avoiders(pattern("<,<"), n).total).collect();
    checks.push(Check::from_eq("series/egf_lt_lt/vs-brute-force", no_triple_rise, lt_lt));

    // bivariate catalog against brute-force joint (length, dist) counts
    for row in TABLE2 {
        checks.push(check_joint_distribution(row.gf_name, row.triple, 9)?);
    }

    // functional equations for the path generating functions
    checks.extend(check_functional_equations(10)?);

    // t = 1 specializations against the closed forms, further out
    for row in TABLE2 {
        let counts = univariate_counts(row.gf_name, 12)?;
        let reference: Vec<u128> = match row.closed_form {
            Some(name) => {
                let mut v = vec![1u128];
                for n in 1..=12 {
                    v.push(closed_form(name, n)?);
                }
                v
            }
            None => continue, // the two radical rows are covered below
        };
        checks.push(Check::from_eq(format!("series/{}/t=1-closed-form", row.gf_name), counts, reference));
    }
    let gt_lt_direct = crate::series::gf_catalog("I_gt_lt", 12)?;
    let gt_lt_counts = match gt_lt_direct {
        CatalogSeries::Bivariate(b) => b.specialize_t(&BigRational::one()).integer_coeffs()?,
        _ => unreachable!(),
    };
    checks.push(Check::from_eq(
        "series/I_gt_lt/t=1-radical",
        gt_lt_counts.clone(),
        ogf_gt_lt_reference(12)?,
    ));
    let gt_le_counts = univariate_counts("I_gt_le", 12)?;
    checks.push(Check::from_eq("series/I_gt_le/t=1-radical", gt_le_counts, univariate_counts("ogf_gt_le", 12)?));

    // path-family enumeration route: coefficients count the bijection images
    let radical = univariate_counts("ogf_gt_le", 8)?;
    let marked: Vec<u128> = (0..=8).map(|n| bij::enumerate_marked(n, true).len() as u128).collect();
    checks.push(Check::from_eq("series/ogf_gt_le/vs-marked-paths", marked, radical.clone()));
    let slanted: Vec<u128> = (0..=7).map(|n| bij::enumerate_slanted(n, true).len() as u128).collect();
    checks.push(Check::from_eq("series/ogf_gt_le/vs-slanted-paths", slanted, radical[1..].to_vec()));
    let multi_slanted: Vec<u128> =
        (0..=7).map(|n| bij::enumerate_slanted(n, false).len() as u128).collect();
    let multi_gf = crate::series::gf_multi_slanted_paths(7)?.integer_coeffs()?;
    checks.push(Check::from_eq("series/multi-slanted/vs-enumeration", multi_slanted, multi_gf));

    // permutation route for the (>,<,-) class
    let perm_counts: Vec<u128> = (1..=8)
        .map(|n| {
            crate::permutations::count_avoiders_classical(
                &["2143".parse().unwrap(), "3142".parse().unwrap(), "4132".parse().unwrap()],
                n,
            )
        })
        .collect::<Result<_>>()?;
    checks.push(Check::from_eq("series/I_gt_lt/vs-permutations", perm_counts, gt_lt_counts[1..=8].to_vec()));

    Ok(checks)
}

/// `(1 + z - sqrt(1 - 6z + 5z^2)) / (2z(2-z))`: the length-only OGF of
/// `(>,<,-)`-avoiders, expanded directly as an independent route.
fn ogf_gt_lt_reference(order: usize) -> Result<Vec<u128>> {
    let root = Series::from_terms(
        order + 1,
        &[
            (0, BigRational::one()),
            (1, BigRational::from_integer((-6).into())),
            (2, BigRational::from_integer(5.into())),
        ],
    )
    .sqrt()?;
    let num = Series::from_terms(
        order + 1,
        &[(0, BigRational::one()), (1, BigRational::one())],
    )
    .sub(&root);
    let den = Series::from_terms(
        order,
        &[(0, BigRational::from_integer(4.into())), (1, BigRational::from_integer((-2).into()))],
    );
    num.shift_down(1)?.div(&den)?.integer_coeffs()
}

fn check_joint_distribution(gf_name: &str, triple_str: &str, n_max: usize) -> Result<Check> {
    let series = match gf_catalog(gf_name, n_max)? {
        CatalogSeries::Bivariate(b) => b,
        _ => unreachable!("joint distributions are bivariate"),
    };
    let t = triple(triple_str);
    let mut ok = true;
    let mut detail = String::new();
    for n in 0..=n_max {
        let counts = count_avoiders_triple(t, n)?;
        let poly = series.coeff(n);
        let max_d = counts.by_dist.keys().max().copied().unwrap_or(0);
        let degree_ok = poly.degree() <= max_d as isize;
        let coeffs_ok = (0..=max_d.max(poly.degree().max(0) as u32)).all(|d| {
            let want = counts.by_dist.get(&d).copied().unwrap_or(0);
            poly.coeff(d as usize) == BigRational::from_integer(want.into())
        });
        if !(degree_ok && coeffs_ok) {
            ok = false;
            detail = format!("mismatch at n={n}: poly {poly}, counts {:?}", counts.by_dist);
            break;
        }
    }
    if ok {
        detail = format!("joint (length, dist) counts agree for n <= {n_max}");
    }
    Ok(Check::from_bool(format!("series/{gf_name}/joint-dist"), ok, detail))
}

fn check_functional_equations(order: usize) -> Result<Vec<Check>> {
    use crate::series::{BivariateSeries, TPoly};
    let mut checks = Vec::new();

    let p = gf_marked_paths_dist(order)?;
    let one = BivariateSeries::one(order);
    let z = BivariateSeries::from_terms(order, &[(1, TPoly::from_ints(&[1]))]);
    let zt = BivariateSeries::from_terms(order, &[(1, TPoly::t())]);
    let a = BivariateSeries::from_terms(order, &[(1, TPoly::from_ints(&[1])), (2, TPoly::t())]);
    let b = BivariateSeries::from_terms(order, &[(0, TPoly::from_ints(&[1])), (1, TPoly::from_ints(&[1, -1]))]);
    let quad = a.mul(&p).mul(&p).sub(&b.mul(&p)).add(&one);
    checks.push(Check::from_bool(
        "series/marked-paths/quadratic",
        quad == BivariateSeries::zero(order),
        "(z + z^2 t) P^2 - (1 + z - zt) P + 1 = 0",
    ));

    let r = match gf_catalog("I_gt_le", order)? {
        CatalogSeries::Bivariate(b) => b,
        _ => unreachable!(),
    };
    let rhs = one.add(&zt.mul(&p)).add(&z.mul(&p).mul(&r.sub(&one)));
    checks.push(Check::from_bool(
        "series/dist-gt-le/functional-equation",
        r == rhs,
        "R = 1 + zt P + z P (R - 1)",
    ));

    let p_multi = gf_multi_marked_paths_dist(order)?;
    let inv_1mz = one.div(&BivariateSeries::from_terms(
        order,
        &[(0, TPoly::from_ints(&[1])), (1, TPoly::from_ints(&[-1]))],
    ))?;
    let a_multi = z.clone().add(
        &BivariateSeries::from_terms(order, &[(2, TPoly::t())]).mul(&inv_1mz),
    );
    let quad_multi = a_multi.mul(&p_multi).mul(&p_multi).sub(&b.mul(&p_multi)).add(&one);
    checks.push(Check::from_bool(
        "series/multi-marked-paths/quadratic",
        quad_multi == BivariateSeries::zero(order),
        "(z + z^2 t/(1-z)) P~^2 - (1 + z - zt) P~ + 1 = 0",
    ));

    // the closed radical form printed for the (>,<,-) class agrees with the
    // fixed-point route
    let z1mt = BivariateSeries::from_terms(order, &[(1, TPoly::from_ints(&[1, -1]))]);
    let r_from_p = one.sub(&z1mt.mul(&p_multi)).div(&one.sub(&z.mul(&p_multi)))?;
    let r_printed = match gf_catalog("I_gt_lt", order)? {
        CatalogSeries::Bivariate(b) => b,
        _ => unreachable!(),
    };
    checks.push(Check::from_bool(
        "series/dist-gt-lt/fixed-point-vs-radical",
        r_from_p == r_printed,
        "R~ from the fixed-point route equals the printed radical form",
    ));

    Ok(checks)
}

// ---- recurrences ----

pub fn suite_recurrences() -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    let ne_ne = rec_ne_ne(9);
    let brute: Vec<u128> = (1..=9).map(|n| count_avoiders(pattern("!=,!="), n).total).collect();
    checks.push(Check::from_eq("recurrences/ne_ne/vs-brute-force", ne_ne.terms.clone(), brute));

    let eq_eq = rec_eq_eq(9);
    let brute: Vec<u128> = (1..=9).map(|n| count_avoiders(pattern("=,="), n).total).collect();
    checks.push(Check::from_eq("recurrences/eq_eq/vs-brute-force", eq_eq.terms.clone(), brute));

    let special = rec_refined_gt_ge(9);
    let mut ok = true;
    for n in 1..=9 {
        let brute = count_avoiders(pattern(">,>="), n);
        ok &= special.row_sum(n) == brute.total;
        for k in 0..n {
            ok &= special.by_last[n][k] == brute.by_last_entry.get(&(k as u32)).copied().unwrap_or(0);
        }
    }
    checks.push(Check::from_bool(
        "recurrences/refined-gt-ge/vs-brute-force",
        ok,
        "difference recurrences reproduce the by-last-entry triangle, n <= 9",
    ));

    let mut ok = true;
    for p in RelationPattern::all() {
        let table = rec_refined_generic(p, 9)?;
        for n in 1..=9 {
            let brute = count_avoiders(p, n);
            ok &= table.row_sum(n) == brute.total;
            for k in 0..n {
                ok &= table.by_last[n][k] == brute.by_last_entry.get(&(k as u32)).copied().unwrap_or(0);
            }
        }
    }
    checks.push(Check::from_bool(
        "recurrences/refined-generic/vs-brute-force",
        ok,
        "master recurrences reproduce all 36 by-last-entry triangles, n <= 9",
    ));

    let gt_ge = rec_refined_generic(pattern(">,>="), 10)?;
    let ge_gt = rec_refined_generic(pattern(">=,>"), 10)?;
    let mut ok = true;
    for n in 1..=10 {
        for k in 0..n {
            let rhs = if k + 1 < n { ge_gt.by_last_with_r1[n][k + 1] } else { 0 };
            ok &= gt_ge.by_last_with_r1[n][k] == rhs;
        }
    }
    checks.push(Check::from_bool(
        "recurrences/cross-refinement",
        ok,
        "refined counts of (>,>=) at k equal refined counts of (>=,>) at k+1, n <= 10",
    ));

    let mut ok = true;
    for n in 1..=20 {
        let numerator = crate::recurrences::factorial(n + 1) - crate::recurrences::derangement(n + 1);
        ok &= numerator.is_multiple_of(n as u128);
    }
    checks.push(Check::from_bool(
        "recurrences/eq_eq/integrality",
        ok,
        "(n+1)! - d(n+1) is divisible by n for n <= 20",
    ));

    Ok(checks)
}

// ---- dictionary ----

pub fn suite_dictionary(n_max: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    let mut relation_ok = true;
    let mut occurrence_ok = true;
    for n in 1..=n_max.min(8) {
        for_each_permutation(n, |pi| {
            let e = bij::inversion_sequence_of(pi);
            for i in 1..n {
                let ge = e.entry(i) >= e.entry(i + 1);
                relation_ok &= ge == (pi.at(i) < pi.at(i + 1));
                let gt = e.entry(i) > e.entry(i + 1);
                let witness = (1..i).any(|j| pi.at(i) < pi.at(j) && pi.at(j) < pi.at(i + 1));
                relation_ok &= gt == witness;
            }
            let occ_gt_ge = e.occurrence_set(pattern(">,>="));
            let occ_ge_gt = e.occurrence_set(pattern(">=,>"));
            for i in 1..=n.saturating_sub(2) {
                let w2134 = (1..i).any(|j| {
                    pi.at(i) < pi.at(j) && pi.at(j) < pi.at(i + 1) && pi.at(i + 1) < pi.at(i + 2)
                });
                occurrence_ok &= occ_gt_ge.contains(&i) == w2134;
                let w3124 = (1..i).any(|j| {
                    pi.at(i) < pi.at(i + 1) && pi.at(i + 1) < pi.at(j) && pi.at(j) < pi.at(i + 2)
                });
                occurrence_ok &= occ_ge_gt.contains(&i) == w3124;
            }
        });
    }
    checks.push(Check::from_bool(
        "dictionary/adjacent-relations",
        relation_ok,
        "e_i >= e_{i+1} iff pi_i < pi_{i+1}; strict descent iff a middle value precedes",
    ));
    checks.push(Check::from_bool(
        "dictionary/occurrences",
        occurrence_ok,
        "(>,>=) occurrences match 2(134) blocks; (>=,>) occurrences match 3(124) blocks",
    ));

    let v1243: VincularPattern = "(124)3".parse().unwrap();
    let v2134: VincularPattern = "2(134)".parse().unwrap();
    let v4213: VincularPattern = "(421)3".parse().unwrap();
    let v3124: VincularPattern = "3(124)".parse().unwrap();
    let mut ok = true;
    for n in 1..=n_max {
        let gt_ge = count_avoiders(pattern(">,>="), n).total;
        let ge_gt = count_avoiders(pattern(">=,>"), n).total;
        ok &= crate::permutations::count_avoiders_vincular(std::slice::from_ref(&v1243), n)? == gt_ge;
        ok &= crate::permutations::count_avoiders_vincular(std::slice::from_ref(&v2134), n)? == gt_ge;
        ok &= crate::permutations::count_avoiders_vincular(std::slice::from_ref(&v4213), n)? == ge_gt;
        ok &= crate::permutations::count_avoiders_vincular(std::slice::from_ref(&v3124), n)? == ge_gt;
        ok &= gt_ge == ge_gt;
    }
    checks.push(Check::from_bool(
        "dictionary/vincular-counts",
        ok,
        "all four vincular classes count like the (>,>=) avoiders",
    ));

    let v321: VincularPattern = "(321)".parse().unwrap();
    let mut ok = true;
    for n in 1..=n_max {
        let lt_lt = count_avoiders(pattern("<,<"), n).total;
        ok &= crate::permutations::count_avoiders_vincular(std::slice::from_ref(&v321), n)? == lt_lt;
    }
    checks.push(Check::from_bool(
        "dictionary/consecutive-321",
        ok,
        "permutations with no adjacent decreasing triple count like (<,<) avoiders",
    ));

    let mut ok = true;
    for n in 1..=n_max {
        let mut involutions = 0u128;
        for_each_permutation(n, |pi| {
            if pi.is_involution() {
                involutions += 1;
            }
        });
        ok &= involutions == rec_ne_ne(n).term(n);
    }
    checks.push(Check::from_bool(
        "dictionary/involution-counts",
        ok,
        "involution counts satisfy the two-term recurrence",
    ));

    checks.push(check_composite_bijection(n_max.min(8))?);

    Ok(checks)
}

fn check_composite_bijection(n_max: usize) -> Result<Check> {
    let v1243: VincularPattern = "(124)3".parse().unwrap();
    let v4213: VincularPattern = "(421)3".parse().unwrap();
    let mut ok = true;
    for n in 1..=n_max {
        let mut domain: Vec<Permutation> = Vec::new();
        let mut codomain: BTreeSet<Permutation> = BTreeSet::new();
        for_each_permutation(n, |pi| {
            if pi.avoids_vincular(&v1243) {
                domain.push(pi.clone());
            }
            if pi.avoids_vincular(&v4213) {
                codomain.insert(pi.clone());
            }
        });
        let mut images = BTreeSet::new();
        for pi in &domain {
            let image = bij::vincular_1243_to_4213(pi)?;
            ok &= bij::vincular_4213_to_1243(&image)? == *pi;
            images.insert(image);
        }
        ok &= images == codomain;
        ok &= images.len() == domain.len();
    }
    Ok(Check::from_bool(
        "dictionary/composite-bijection",
        ok,
        "the composite map is a bijection between the two vincular classes",
    ))
}

// ---- dist symmetry ----

pub fn suite_dist_symmetry() -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    let series = match gf_catalog("I_gt_le", 11)? {
        CatalogSeries::Bivariate(b) => b,
        _ => unreachable!(),
    };
    let mut ok = true;
    for n in 1..=11 {
        ok &= series.coeff(n).is_dist_palindromic();
    }
    checks.push(Check::from_bool(
        "dist-symmetry/palindromic",
        ok,
        "dist distribution on (>,<=)-avoiders is symmetric for n <= 11",
    ));

    checks.push(check_joint_distribution("I_gt_le", ">,<=,-", 10)?);

    // brute-force route to the symmetry, independent of the series
    let mut ok = true;
    for n in 1..=9 {
        let by_dist = count_avoiders_triple(triple(">,<=,-"), n)?.by_dist;
        for d in 1..=n as u32 {
            let lhs = by_dist.get(&d).copied().unwrap_or(0);
            let rhs = by_dist.get(&(n as u32 + 1 - d)).copied().unwrap_or(0);
            ok &= lhs == rhs;
        }
    }
    checks.push(Check::from_bool(
        "dist-symmetry/brute-force",
        ok,
        "counts with dist d and dist n+1-d agree for n <= 9",
    ));

    // the only other unimodality class with a symmetric dist distribution
    let eq_lt = match gf_catalog("I_eq_lt", 9)? {
        CatalogSeries::Bivariate(b) => b,
        _ => unreachable!(),
    };
    let mut symmetric = true;
    for n in 1..=9 {
        symmetric &= eq_lt.coeff(n).is_dist_palindromic();
    }
    checks.push(Check::from_bool(
        "dist-symmetry/eq-lt-also-symmetric",
        symmetric,
        "dist distribution on (=,<,-)-avoiders is symmetric too",
    ));

    Ok(checks)
}

/// Check used by the CLI `classify` regression gate and the tests: the five
/// non-singleton classes and the class counts of the established
/// classification, plus the witness separating strong from Wilf equivalence.
pub fn check_classification(n_max: usize) -> Result<Vec<Check>> {
    use crate::enumerate::{baseline_partition, classify, occurrence_profile, EquivLevel};
    let mut checks = Vec::new();

    let wilf = classify(EquivLevel::Wilf, n_max)?;
    checks.push(Check::from_eq("classification/wilf-classes", wilf.classes.len(), 30));
    let strong = classify(EquivLevel::Strong, n_max)?;
    checks.push(Check::from_eq("classification/strong-classes", strong.classes.len(), 31));
    let ss = classify(EquivLevel::SuperStrong, n_max)?;
    checks.push(Check::from_bool(
        "classification/superstrong-equals-strong",
        ss.classes == strong.classes,
        "the strong and super-strong partitions coincide",
    ));
    checks.push(Check::from_bool(
        "classification/wilf-partition",
        wilf.classes == baseline_partition(EquivLevel::Wilf),
        "Wilf partition matches the established classification",
    ));
    checks.push(Check::from_bool(
        "classification/strong-partition",
        strong.classes == baseline_partition(EquivLevel::Strong),
        "strong partition matches the established classification",
    ));

    // witness: 0100 realizes (!=,>=) at {1,2}, nothing realizes (<,>=) there
    let ne_ge = occurrence_profile(pattern("!=,>="), 4)?;
    let lt_ge = occurrence_profile(pattern("<,>="), 4)?;
    let witness: InversionSequence = "0100".parse().unwrap();
    checks.push(Check::from_bool(
        "classification/witness-0100",
        witness.occurrence_set(pattern("!=,>=")) == vec![1, 2]
            && ne_ge.count_for(&[1, 2]) >= 1
            && lt_ge.count_for(&[1, 2]) == 0,
        "two overlapping occurrences exist for (!=,>=) but not for (<,>=)",
    ));

    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table1_suite_passes() {
        let checks = suite_table1();
        assert_eq!(checks.len(), 18); // 14 rows, 18 patterns
        for c in &checks {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn small_bijection_suite_passes() {
        for c in suite_bijections(5).unwrap() {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn small_dictionary_suite_passes() {
        for c in suite_dictionary(5).unwrap() {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn classification_checks_pass_at_small_depth() {
        // n_max = 6 already separates everything except the genuine classes?
        // No: only assert structure at the verified depth in the acceptance
        // suite; here just exercise the witness machinery.
        let checks = check_classification(6).unwrap();
        let witness = checks.iter().find(|c| c.name.contains("witness")).unwrap();
        assert!(witness.passed, "{}", witness.detail);
    }

    #[test]
    fn unknown_suite_errors() {
        assert!(run_suite("nope").is_err());
    }
}
