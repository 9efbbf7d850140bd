//! Closed forms and recurrences for the avoider-counting sequences, computed
//! independently of brute-force enumeration so the two routes cross-check
//! each other.
//!
//! Counts use `u128`; the largest intermediate here is a factorial, so
//! lengths beyond 30 would overflow long after the enumerative side has
//! become intractable anyway.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::core::{relation_holds, RelationPattern};
use crate::{Error, Result};

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out: u128 = 1;
    for i in 0..k {
        out = out * (n - i) as u128 / (i + 1) as u128;
    }
    out
}

/// Fibonacci numbers with `F_0 = 0`, `F_1 = 1`.
pub fn fibonacci(n: usize) -> u128 {
    let (mut a, mut b) = (0u128, 1u128);
    for _ in 0..n {
        let next = a + b;
        a = b;
        b = next;
    }
    a
}

pub fn catalan(n: usize) -> u128 {
    binomial(2 * n, n) / (n as u128 + 1)
}

/// Derangement numbers via `d_n = (n-1)(d_{n-1} + d_{n-2})`, `d_0 = 1`,
/// `d_1 = 0`.
pub fn derangement(n: usize) -> u128 {
    let (mut a, mut b) = (1u128, 0u128); // d_0, d_1
    if n == 0 {
        return a;
    }
    for k in 2..=n {
        let next = (k as u128 - 1) * (a + b);
        a = b;
        b = next;
    }
    b
}

/// A named counting sequence with terms `a_1 … a_N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceTable {
    pub name: String,
    #[serde(serialize_with = "ser_counts")]
    pub terms: Vec<u128>,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    ClosedForm,
    Recurrence,
}

fn ser_counts<S: serde::Serializer>(v: &[u128], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for c in v {
        seq.serialize_element(&c.to_string())?;
    }
    seq.end()
}

impl SequenceTable {
    /// Term for length `n` (1-based).
    pub fn term(&self, n: usize) -> u128 {
        self.terms[n - 1]
    }
}

/// Names accepted by [`closed_form`]. Pair patterns use `r1_r2`; classical
/// triples append the third symbol (`dash` for `-`).
pub const CLOSED_FORM_NAMES: &[&str] = &[
    "le_ne",
    "le_ge",
    "ge_ne",
    "ge_le",
    "ne_le",
    "ge_lt",
    "lt_ge",
    "ne_ge",
    "le_gt",
    "eq_ne",
    "ne_eq",
    "eq_eq",
    "lt_dash_lt",
    "ne_lt_dash",
    "ne_le_dash",
    "gt_ne_dash",
    "ge_ne_dash",
    "eq_lt_dash",
    "eq_le_dash",
    "ge_le_ne",
];

/// Exact closed-form value for length `n >= 1` of one of the cataloged
/// counting sequences.
pub fn closed_form(name: &str, n: usize) -> Result<u128> {
    if n == 0 {
        return Ok(1); // every avoidance class contains the empty sequence
    }
    Ok(match name {
        // pair patterns
        "le_ne" => {
            if n == 1 {
                1
            } else {
                2
            }
        }
        "le_ge" => n as u128,
        "ge_ne" => binomial(n, 2) + 1,
        "ge_le" => fibonacci(n + 1),
        "ne_le" => fibonacci(n + 2) - 1,
        "ge_lt" | "lt_ge" | "ne_ge" => 1 << (n - 1),
        "le_gt" => catalan(n),
        "eq_ne" => (0..n).map(factorial).sum(),
        "ne_eq" => (0..n).map(|i| factorial(n - 1) / factorial(i)).sum(),
        "eq_eq" => {
            let numerator = factorial(n + 1) - derangement(n + 1);
            assert_eq!(numerator % n as u128, 0, "(n+1)! - d_(n+1) must be divisible by n");
            numerator / n as u128
        }
        // classical triples with unimodality characterizations
        "lt_dash_lt" | "ge_ne_dash" => binomial(n, 2) + 1,
        "ne_lt_dash" => (1u128 << n) - n as u128,
        "ne_le_dash" | "ge_le_ne" => fibonacci(n + 2) - 1,
        "gt_ne_dash" => 1 + (1..n).map(|i| binomial(2 * i, i - 1)).sum::<u128>(),
        "eq_lt_dash" => 1 << (n - 1),
        "eq_le_dash" => fibonacci(n + 1),
        _ => return Err(Error::UnknownName { kind: "closed form", name: name.into() }),
    })
}

/// Closed-form table for lengths `1 … n_max`.
pub fn closed_form_table(name: &str, n_max: usize) -> Result<SequenceTable> {
    let terms = (1..=n_max).map(|n| closed_form(name, n)).collect::<Result<_>>()?;
    Ok(SequenceTable { name: name.into(), terms, provenance: Provenance::ClosedForm })
}

/// `a_n = a_{n-1} + (n-1) a_{n-2}` with `a_0 = a_1 = 1`: the number of
/// `(!=,!=)`-avoiders, which is also the number of involutions of `[n]`.
pub fn rec_ne_ne(n_max: usize) -> SequenceTable {
    let mut terms = Vec::with_capacity(n_max);
    let (mut prev2, mut prev) = (1u128, 1u128); // a_0, a_1
    for n in 1..=n_max {
        if n == 1 {
            terms.push(prev);
            continue;
        }
        let next = prev + (n as u128 - 1) * prev2;
        prev2 = prev;
        prev = next;
        terms.push(next);
    }
    SequenceTable { name: "ne_ne".into(), terms, provenance: Provenance::Recurrence }
}

/// `a_n = (n-1) a_{n-1} + (n-2) a_{n-2}` with `a_1 = 1`, `a_2 = 2`: the
/// number of `(=,=)`-avoiders.
pub fn rec_eq_eq(n_max: usize) -> SequenceTable {
    let mut terms = Vec::with_capacity(n_max);
    let (mut prev2, mut prev) = (1u128, 2u128); // a_1, a_2
    for n in 1..=n_max {
        match n {
            1 => terms.push(prev2),
            2 => terms.push(prev),
            _ => {
                let next = (n as u128 - 1) * prev + (n as u128 - 2) * prev2;
                prev2 = prev;
                prev = next;
                terms.push(next);
            }
        }
    }
    SequenceTable { name: "eq_eq".into(), terms, provenance: Provenance::Recurrence }
}

/// Triangular refinements of an avoider count by last entry.
///
/// `by_last[n][k]` is the number of avoiders of length `n` ending with entry
/// `k`, and `by_last_with_r1[n][k]` additionally requires the last adjacent
/// pair to satisfy `e_{n-1} R1 e_n`. Entries with `k >= n` are zero; row `0`
/// is empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RefinedTable {
    #[serde(serialize_with = "ser_pattern")]
    pub pattern: RelationPattern,
    #[serde(serialize_with = "ser_triangle")]
    pub by_last: Vec<Vec<u128>>,
    #[serde(serialize_with = "ser_triangle")]
    pub by_last_with_r1: Vec<Vec<u128>>,
}

fn ser_pattern<S: serde::Serializer>(p: &RelationPattern, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

fn ser_triangle<S: serde::Serializer>(t: &[Vec<u128>], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(t.len()))?;
    for row in t {
        let row: Vec<String> = row.iter().map(u128::to_string).collect();
        seq.serialize_element(&row)?;
    }
    seq.end()
}

impl RefinedTable {
    pub fn row_sum(&self, n: usize) -> u128 {
        self.by_last[n].iter().sum()
    }

    /// Row sums for `n = 1 … n_max` as a sequence table.
    pub fn totals(&self) -> SequenceTable {
        let terms = (1..self.by_last.len()).map(|n| self.row_sum(n)).collect();
        SequenceTable {
            name: self.pattern.to_string(),
            terms,
            provenance: Provenance::Recurrence,
        }
    }
}

/// The two difference recurrences special to `(>,>=)`:
///
/// * `|I_{n,n-1}| = |I_{n-1}|` and `|I_{n,k}| = |I_{n,k+1}| - |I^>_{n-1,k}|`
///   for `k <= n-2`;
/// * `|I^>_{n,n-1}| = 0` and
///   `|I^>_{n,k}| = |I^>_{n,k+1}| - |I^>_{n-1,k+1}| + |I_{n-1,k+1}|`.
///
/// Each row is filled from `k = n-1` downward, so an entry only uses entries
/// to its right in the same row and the previous row.
pub fn rec_refined_gt_ge(n_max: usize) -> RefinedTable {
    let pattern: RelationPattern = ">,>=".parse().unwrap();
    let mut by_last: Vec<Vec<u128>> = vec![Vec::new()];
    let mut with_r1: Vec<Vec<u128>> = vec![Vec::new()];
    let mut prev_total = 1u128; // |I_0| = 1

    for n in 1..=n_max {
        let mut row = vec![0u128; n];
        let mut row_r1 = vec![0u128; n];
        if n == 1 {
            row[0] = 1;
        } else {
            for k in (0..n).rev() {
                row[k] = if k == n - 1 {
                    prev_total
                } else {
                    row[k + 1] - with_r1[n - 1].get(k).copied().unwrap_or(0)
                };
                row_r1[k] = if k == n - 1 {
                    0
                } else {
                    // add before subtracting: |I_{n-1,k+1}| >= |I^>_{n-1,k+1}|
                    row_r1[k + 1] + by_last[n - 1].get(k + 1).copied().unwrap_or(0)
                        - with_r1[n - 1].get(k + 1).copied().unwrap_or(0)
                };
            }
        }
        prev_total = row.iter().sum();
        by_last.push(row);
        with_r1.push(row_r1);
    }
    RefinedTable { pattern, by_last, by_last_with_r1: with_r1 }
}

/// Resource guard for the generic refined recurrences (quadratic sums per
/// entry, cubic per row — cheap, but counts overflow little beyond this).
pub const MAX_REFINED_N: usize = 14;

/// The unsimplified master recurrences valid for every pattern `(R1,R2)`:
///
/// * `|I_{n,k}| = |I_{n-1}| - sum over j R2 k of |I^{R1}_{n-1,j}|`
/// * `|I^{R1}_{n,k}| = sum over j R1 k of |I_{n-1,j}|
///    - sum over j R1 k and j R2 k of |I^{R1}_{n-1,j}|`
///
/// with `|I_{1,0}| = 1` and `|I^{R1}_{1,k}| = 0`. The sums run over
/// `0 <= j <= n-2`.
pub fn rec_refined_generic(pattern: RelationPattern, n_max: usize) -> Result<RefinedTable> {
    if n_max > MAX_REFINED_N {
        return Err(Error::ResourceLimit { what: "rec_refined_generic", n: n_max, max: MAX_REFINED_N });
    }
    let r1 = pattern.r1();
    let r2 = pattern.r2();
    let mut by_last: Vec<Vec<u128>> = vec![Vec::new()];
    let mut with_r1: Vec<Vec<u128>> = vec![Vec::new()];
    let mut prev_total = 1u128;

    for n in 1..=n_max {
        let mut row = vec![0u128; n];
        let mut row_r1 = vec![0u128; n];
        for k in 0..n {
            if n == 1 {
                row[k] = 1;
                continue;
            }
            let mut avoid = prev_total;
            let mut ext = 0u128;
            let mut ext_minus = 0u128;
            for j in 0..=n - 2 {
                let holds1 = relation_holds(r1, j as i64, k as i64);
                let holds2 = relation_holds(r2, j as i64, k as i64);
                if holds2 {
                    avoid -= with_r1[n - 1][j];
                }
                if holds1 {
                    ext += by_last[n - 1][j];
                    if holds2 {
                        ext_minus += with_r1[n - 1][j];
                    }
                }
            }
            row[k] = avoid;
            row_r1[k] = ext - ext_minus;
        }
        prev_total = row.iter().sum();
        by_last.push(row);
        with_r1.push(row_r1);
    }
    Ok(RefinedTable { pattern, by_last, by_last_with_r1: with_r1 })
}

/// CSV rows `(n, k, count, count_with_r1)` for a refined table.
pub fn refined_table_csv(table: &RefinedTable) -> String {
    let mut out = String::from("n,k,count,count_with_r1\n");
    for n in 1..table.by_last.len() {
        for k in 0..n {
            out.push_str(&format!(
                "{n},{k},{},{}\n",
                table.by_last[n][k], table.by_last_with_r1[n][k]
            ));
        }
    }
    out
}

/// Extra sequences used by the OEIS fixtures: map `n -> |I_n(>,<,-)|`
/// computed via the refined recurrence route is not available (triple), so
/// callers use series or brute force for that one.
pub fn closed_form_map(name: &str, n_max: usize) -> Result<BTreeMap<usize, u128>> {
    let mut out = BTreeMap::new();
    for n in 1..=n_max {
        out.insert(n, closed_form(name, n)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{count_avoiders, count_avoiders_triple};

    #[test]
    fn helpers() {
        assert_eq!(factorial(0), 1);
        assert_eq!(factorial(10), 3628800);
        assert_eq!(binomial(9, 2), 36);
        assert_eq!(fibonacci(10), 55);
        assert_eq!(catalan(5), 42);
        assert_eq!(derangement(4), 9);
        assert_eq!(derangement(10), 1334961);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form("ge_ne", 9).unwrap(), 37);
        assert_eq!(closed_form("eq_eq", 9).unwrap(), 254871);
        assert_eq!(closed_form("ne_eq", 1).unwrap(), 1);
        assert_eq!(closed_form("eq_ne", 9).unwrap(), 46234);
        assert_eq!(closed_form("ne_eq", 9).unwrap(), 109601);
        assert_eq!(closed_form("le_gt", 9).unwrap(), 4862);
        assert!(closed_form("bogus", 3).is_err());
    }

    #[test]
    fn eq_eq_closed_form_is_integral() {
        for n in 1..=20 {
            let numerator = factorial(n + 1) - derangement(n + 1);
            assert_eq!(numerator % n as u128, 0, "n={n}");
        }
    }

    #[test]
    fn rec_ne_ne_values() {
        let t = rec_ne_ne(10);
        assert_eq!(t.term(1), 1);
        assert_eq!(t.term(4), 10);
        assert_eq!(t.term(8), 764);
        assert_eq!(t.terms, [1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496]);
    }

    #[test]
    fn rec_eq_eq_values() {
        let t = rec_eq_eq(9);
        assert_eq!(t.term(2), 2);
        assert_eq!(t.term(3), 5);
        assert_eq!(t.term(7), 3641);
        assert_eq!(t.terms, [1, 2, 5, 19, 91, 531, 3641, 28673, 254871]);
        // agrees with the closed form
        for n in 1..=9 {
            assert_eq!(t.term(n), closed_form("eq_eq", n).unwrap());
        }
    }

    #[test]
    fn refined_gt_ge_row_sums() {
        let t = rec_refined_gt_ge(9);
        let expected = [1u128, 2, 6, 23, 107, 584, 3660, 25910, 204564];
        for (n, &want) in expected.iter().enumerate() {
            assert_eq!(t.row_sum(n + 1), want, "n={}", n + 1);
        }
        // boundary cases of the recurrences
        for n in 2..=9 {
            assert_eq!(t.by_last[n][n - 1], t.row_sum(n - 1));
            assert_eq!(t.by_last_with_r1[n][n - 1], 0);
        }
        assert!(t.by_last_with_r1[1].iter().all(|&v| v == 0));
    }

    #[test]
    fn generic_matches_brute_force_by_last_entry() {
        for p in RelationPattern::all() {
            let table = rec_refined_generic(p, 7).unwrap();
            for n in 1..=7 {
                let brute = count_avoiders(p, n);
                assert_eq!(table.row_sum(n), brute.total, "p={p} n={n}");
                for k in 0..n {
                    let want = brute.by_last_entry.get(&(k as u32)).copied().unwrap_or(0);
                    assert_eq!(table.by_last[n][k], want, "p={p} n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn generic_specializes_to_gt_ge() {
        let generic = rec_refined_generic(">,>=".parse().unwrap(), 10).unwrap();
        let special = rec_refined_gt_ge(10);
        assert_eq!(generic.by_last, special.by_last);
        assert_eq!(generic.by_last_with_r1, special.by_last_with_r1);
    }

    #[test]
    fn cross_refinement_identity() {
        // |I^>_{n,k}(>,>=)| = |I^>=_{n,k+1}(>=,>)|
        let gt_ge = rec_refined_generic(">,>=".parse().unwrap(), 10).unwrap();
        let ge_gt = rec_refined_generic(">=,>".parse().unwrap(), 10).unwrap();
        for n in 1..=10 {
            for k in 0..n {
                let rhs = if k + 1 < n { ge_gt.by_last_with_r1[n][k + 1] } else { 0 };
                assert_eq!(gt_ge.by_last_with_r1[n][k], rhs, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn closed_forms_match_brute_force() {
        let pair_cases = [
            ("le_ne", "<=,!="),
            ("le_ge", "<=,>="),
            ("ge_ne", ">=,!="),
            ("ge_le", ">=,<="),
            ("ne_le", "!=,<="),
            ("ge_lt", ">=,<"),
            ("lt_ge", "<,>="),
            ("ne_ge", "!=,>="),
            ("le_gt", "<=,>"),
            ("eq_ne", "=,!="),
            ("ne_eq", "!=,="),
            ("eq_eq", "=,="),
        ];
        for (name, p) in pair_cases {
            let p: RelationPattern = p.parse().unwrap();
            for n in 1..=8 {
                assert_eq!(closed_form(name, n).unwrap(), count_avoiders(p, n).total, "{name} n={n}");
            }
        }
        let triple_cases = [
            ("lt_dash_lt", "<,-,<"),
            ("ne_lt_dash", "!=,<,-"),
            ("ne_le_dash", "!=,<=,-"),
            ("gt_ne_dash", ">,!=,-"),
            ("ge_ne_dash", ">=,!=,-"),
            ("eq_lt_dash", "=,<,-"),
            ("eq_le_dash", "=,<=,-"),
            ("ge_le_ne", ">=,<=,!="),
        ];
        for (name, t) in triple_cases {
            let t: crate::core::TriplePattern = t.parse().unwrap();
            for n in 1..=8 {
                assert_eq!(
                    closed_form(name, n).unwrap(),
                    count_avoiders_triple(t, n).unwrap().total,
                    "{name} n={n}"
                );
            }
        }
    }

    #[test]
    fn csv_export_has_header_and_rows() {
        let t = rec_refined_gt_ge(3);
        let csv = refined_table_csv(&t);
        assert!(csv.starts_with("n,k,count,count_with_r1\n"));
        assert_eq!(csv.lines().count(), 1 + 1 + 2 + 3);
    }

    #[test]
    fn json_export_uses_decimal_strings() {
        let t = rec_refined_gt_ge(3);
        let json = serde_json::to_value(&t).unwrap();
        assert_eq!(json["pattern"], ">,>=");
        assert_eq!(json["by_last"][3][2], "2");
        let s = serde_json::to_value(rec_ne_ne(4)).unwrap();
        assert_eq!(s["terms"], serde_json::json!(["1", "2", "4", "10"]));
        assert_eq!(s["provenance"], "recurrence");
    }
}
