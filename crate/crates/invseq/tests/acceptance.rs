//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Everything here is exact — integer equality or coefficient-wise equality
//! of exact rationals; there are no tolerances to tune.

use num::{BigRational, One};

use invseq::bijections as bij;
use invseq::checks::{self, all_passed, Check};
use invseq::core::{InversionSequence, RelationPattern, TriplePattern};
use invseq::enumerate::{
    baseline_partition, classify, count_avoiders, count_avoiders_triple, enumerate_all,
    occurrence_profile, EquivLevel,
};
use invseq::permutations::{for_each_permutation, VincularPattern};
use invseq::series::{gf_catalog, CatalogSeries};

fn pattern(s: &str) -> RelationPattern {
    s.parse().unwrap()
}

fn triple(s: &str) -> TriplePattern {
    s.parse().unwrap()
}

fn report(criterion: &str, checks: &[Check]) {
    let ok = all_passed(checks);
    println!(
        "acceptance {criterion}: {} ({} checks)",
        if ok { "PASS" } else { "FAIL" },
        checks.len()
    );
    if !ok {
        for c in checks.iter().filter(|c| !c.passed) {
            println!("  FAIL {} — {}", c.name, c.detail);
        }
        panic!("acceptance criterion failed: {criterion}");
    }
}

/// Criterion 1: the 14 reference rows reproduce exactly for n = 1..9.
#[test]
fn criterion_1_reference_table_counts() {
    report("1 (reference count table, n <= 9)", &checks::suite_table1());
}

/// Criterion 2: 30 Wilf classes at n_max = 10; strong and super-strong both
/// have 31 identical classes; the five multi-pattern groups are exactly the
/// established ones; and the 0100 witness separates (!=,>=) from (<,>=).
#[test]
fn criterion_2_classification() {
    let mut checks = checks::check_classification(10).unwrap();

    // the five multi-pattern groups, verbatim
    let strong = classify(EquivLevel::Strong, 10).unwrap();
    let groups: Vec<Vec<String>> = strong
        .classes
        .iter()
        .filter(|c| c.len() > 1)
        .map(|c| c.iter().map(|p| p.to_string()).collect())
        .collect();
    let expected: Vec<Vec<String>> = baseline_partition(EquivLevel::Strong)
        .iter()
        .filter(|c| c.len() > 1)
        .map(|c| c.iter().map(|p| p.to_string()).collect())
        .collect();
    checks.push(Check::from_eq("classification/multi-pattern-groups", groups, expected));

    let wilf = classify(EquivLevel::Wilf, 10).unwrap();
    let wilf_groups: usize = wilf.classes.iter().filter(|c| c.len() > 1).count();
    checks.push(Check::from_eq("classification/wilf-group-count", wilf_groups, 5));

    report("2 (classification at n_max = 10)", &checks);
}

/// Criterion 3: the radical OGF matches brute-force counts of the
/// `(>,<=,-)`-avoiders for n = 0..11.
#[test]
fn criterion_3_radical_ogf() {
    let series = match gf_catalog("ogf_gt_le", 11).unwrap() {
        CatalogSeries::Univariate(_, s) => s,
        _ => unreachable!(),
    };
    let coefficients = series.integer_coeffs().unwrap();
    let brute: Vec<u128> = (0..=11)
        .map(|n| count_avoiders_triple(triple(">,<=,-"), n).unwrap().total)
        .collect();
    report(
        "3 (radical OGF vs brute force, n <= 11)",
        &[Check::from_eq("ogf_gt_le/coefficients", coefficients, brute)],
    );
}

/// Criterion 5: all ten `dist` generating functions match brute-force joint
/// distributions for n <= 9, and their t = 1 specializations match every
/// closed form for n <= 12.
#[test]
fn criterion_5_unimodal_family() {
    let mut checks = checks::suite_table2().unwrap();
    checks.extend(
        checks::suite_series()
            .unwrap()
            .into_iter()
            .filter(|c| c.name.contains("joint-dist") || c.name.contains("t=1")),
    );
    report("5 (ten dist generating functions)", &checks);
}

/// Criterion 6: exhaustive round trips and exact image characterizations for
/// every bijection, n <= 9, including dist preservation.
#[test]
fn criterion_6_bijections() {
    report("6 (bijection suite, n <= 9)", &checks::suite_bijections(9).unwrap());
}

/// Criterion 7: the four vincular classes all count like the `(>,>=)`
/// avoiders (1, 2, 6, 23, 107, 584, 3660, 25910, 204564 for n <= 9), and the
/// composite bijection is verified for n <= 8.
#[test]
fn criterion_7_vincular() {
    let expected: [u128; 9] = [1, 2, 6, 23, 107, 584, 3660, 25910, 204564];
    let patterns = ["(124)3", "2(134)", "(421)3", "3(124)"];
    let mut checks = Vec::new();
    for p in patterns {
        let v: VincularPattern = p.parse().unwrap();
        let counts: Vec<u128> = (1..=9)
            .map(|n| invseq::permutations::count_avoiders_vincular(std::slice::from_ref(&v), n).unwrap())
            .collect();
        checks.push(Check::from_eq(format!("vincular/{p}"), counts, expected.to_vec()));
    }
    for (p, s) in [(">,>=", "gt_ge"), (">=,>", "ge_gt")] {
        let counts: Vec<u128> = (1..=9).map(|n| count_avoiders(pattern(p), n).total).collect();
        checks.push(Check::from_eq(format!("vincular/{s}-side"), counts, expected.to_vec()));
    }

    // composite bijection, exhaustive for n <= 8
    let v1243: VincularPattern = "(124)3".parse().unwrap();
    let v4213: VincularPattern = "(421)3".parse().unwrap();
    let mut composite_ok = true;
    for n in 1..=8 {
        let mut domain = Vec::new();
        let mut codomain = std::collections::BTreeSet::new();
        for_each_permutation(n, |pi| {
            if pi.avoids_vincular(&v1243) {
                domain.push(pi.clone());
            }
            if pi.avoids_vincular(&v4213) {
                codomain.insert(pi.clone());
            }
        });
        let mut images = std::collections::BTreeSet::new();
        for pi in &domain {
            let image = bij::vincular_1243_to_4213(pi).unwrap();
            composite_ok &= bij::vincular_4213_to_1243(&image).unwrap() == *pi;
            images.insert(image);
        }
        composite_ok &= images == codomain;
    }
    checks.push(Check::from_bool(
        "vincular/composite-bijection",
        composite_ok,
        "composite map is a bijection for n <= 8",
    ));

    report("7 (vincular correspondence)", &checks);
}

/// Criterion 8: recurrences agree with brute force for n <= 9, including the
/// generic refined recurrences for all 36 patterns and the cross-refinement
/// identity up to n = 10.
#[test]
fn criterion_8_recurrences() {
    report("8 (recurrences vs brute force)", &checks::suite_recurrences().unwrap());
}

/// Criterion 9: pruned DFS counts equal full-enumeration counts for all 36
/// patterns and all ten unimodality triples at n <= 8.
#[test]
fn criterion_9_oracle_equivalence() {
    let mut checks = Vec::new();
    for n in 0..=8usize {
        let mut pair_ok = true;
        for p in RelationPattern::all() {
            let full = enumerate_all(n).unwrap().filter(|e| e.avoids(p)).count() as u128;
            pair_ok &= count_avoiders(p, n).total == full;
        }
        checks.push(Check::from_bool(
            format!("oracle/pairs/n={n}"),
            pair_ok,
            "pruned DFS equals full enumeration for all 36 patterns",
        ));
    }
    for row in checks::TABLE2 {
        let t = triple(row.triple);
        let mut ok = true;
        for n in 0..=8usize {
            let full = enumerate_all(n).unwrap().filter(|e| e.avoids_triple(t)).count() as u128;
            ok &= count_avoiders_triple(t, n).unwrap().total == full;
        }
        checks.push(Check::from_bool(
            format!("oracle/triple/{}", row.triple),
            ok,
            "pruned DFS equals full enumeration for n <= 8",
        ));
    }
    report("9 (pruned vs full enumeration)", &checks);
}

/// Witness detail for criterion 2 pinned separately: occurrence profiles at
/// n = 4 distinguish (!=,>=) from (<,>=).
#[test]
fn criterion_2_witness_profile() {
    let ne_ge = occurrence_profile(pattern("!=,>="), 4).unwrap();
    let lt_ge = occurrence_profile(pattern("<,>="), 4).unwrap();
    let witness: InversionSequence = "0100".parse().unwrap();
    let checks = [
        Check::from_eq("witness/occurrence-set", witness.occurrence_set(pattern("!=,>=")), vec![1, 2]),
        Check::from_bool(
            "witness/ne-ge-count",
            ne_ge.count_for(&[1, 2]) >= 1,
            "some sequence realizes (!=,>=) at both positions",
        ),
        Check::from_eq("witness/lt-ge-count", lt_ge.count_for(&[1, 2]), 0),
    ];
    report("2w (witness profile)", &checks);
}

/// Criterion 4: the bivariate series refining the `(>,<=,-)` count by `dist`
/// matches the brute-force joint distribution for n <= 10, its coefficient
/// polynomials are palindromic for n <= 11, and t = 1 recovers the OGF.
#[test]
fn criterion_4_bivariate_dist() {
    let series = match gf_catalog("I_gt_le", 11).unwrap() {
        CatalogSeries::Bivariate(b) => b,
        _ => unreachable!(),
    };
    let mut checks = Vec::new();

    let t = triple(">,<=,-");
    let mut joint_ok = true;
    for n in 0..=10usize {
        let by_dist = count_avoiders_triple(t, n).unwrap().by_dist;
        let poly = series.coeff(n);
        let max_d = by_dist.keys().max().copied().unwrap_or(0) as usize;
        joint_ok &= poly.degree().max(0) as usize <= max_d || by_dist.is_empty();
        for d in 0..=max_d {
            let want = by_dist.get(&(d as u32)).copied().unwrap_or(0);
            joint_ok &= poly.coeff(d) == BigRational::from_integer(want.into());
        }
    }
    checks.push(Check::from_bool(
        "bivariate/joint-dist/n<=10",
        joint_ok,
        "coefficient polynomials equal the brute-force (length, dist) counts",
    ));

    let mut palindromic = true;
    for n in 1..=11usize {
        palindromic &= series.coeff(n).is_dist_palindromic();
    }
    checks.push(Check::from_bool(
        "bivariate/palindromic/n<=11",
        palindromic,
        "u_{d,n} = u_{n+1-d,n}",
    ));

    // t = 1 recovers the univariate radical OGF
    let at_one = series.specialize_t(&BigRational::one());
    let radical = match gf_catalog("ogf_gt_le", 11).unwrap() {
        CatalogSeries::Univariate(_, s) => s,
        _ => unreachable!(),
    };
    checks.push(Check::from_bool("bivariate/t=1", at_one == radical, "specialization matches the OGF"));

    report("4 (bivariate dist series)", &checks);
}
