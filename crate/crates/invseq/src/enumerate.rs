//! Generation and counting of inversion sequences under avoidance
//! constraints, and the classification of the 36 consecutive patterns of
//! relations into generalized Wilf equivalence classes.
//!
//! Counting uses a pruned depth-first extension: appending an entry can only
//! create an occurrence in the last window (for pair patterns) or in triples
//! ending at the new entry (for classical triples), so a partial sequence is
//! extended only while it still avoids the pattern. Prefixes of avoiders are
//! avoiders, which makes the pruning sound and the node count proportional to
//! the number of avoiding prefixes.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::core::{cmp_code, extension_avoids_triple, InversionSequence, RelationPattern, TriplePattern};
use crate::{Error, Result};

/// Full enumeration guard: 12! is just under half a billion sequences.
pub const MAX_ENUMERATE_N: usize = 12;
/// Occurrence profiles keep a map keyed by subsets of up to `n - 2` positions.
pub const MAX_PROFILE_N: usize = 10;
/// Classification scans every sequence once per length.
pub const MAX_CLASSIFY_N: usize = 10;
/// Full scans for classical triples.
pub const MAX_TRIPLE_N: usize = 12;
/// Triples with a known unimodality characterization prune to the avoider
/// count itself, which stays manageable a bit longer. Runtime is proportional
/// to the number of avoiders, so this is still exponential for some triples.
pub const MAX_TRIPLE_UNIMODAL_N: usize = 20;

/// All `n!` inversion sequences of length `n`, in lexicographic order.
pub fn enumerate_all(n: usize) -> Result<impl Iterator<Item = InversionSequence>> {
    if n > MAX_ENUMERATE_N {
        return Err(Error::ResourceLimit { what: "enumerate_all", n, max: MAX_ENUMERATE_N });
    }
    Ok(Odometer::new(n).map(|entries| {
        InversionSequence::new(entries).expect("odometer yields valid sequences")
    }))
}

struct Odometer {
    next: Option<Vec<u32>>,
}

impl Odometer {
    fn new(n: usize) -> Self {
        Odometer { next: Some(vec![0; n]) }
    }
}

impl Iterator for Odometer {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // increment rightmost position that is below its bound e_i <= i-1
        let mut i = succ.len();
        loop {
            if i == 0 {
                self.next = None;
                break;
            }
            if succ[i - 1] < (i - 1) as u32 {
                succ[i - 1] += 1;
                for v in succ[i..].iter_mut() {
                    *v = 0;
                }
                self.next = Some(succ);
                break;
            }
            i -= 1;
        }
        Some(current)
    }
}

/// Exact avoider count for one length, refined by last entry and by the
/// `dist` statistic (number of distinct entries).
///
/// For `n = 0` the single empty sequence counts as an avoider: `total = 1`,
/// `by_last_entry` is empty and `by_dist = {0: 1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AvoiderCount {
    pub n: usize,
    #[serde(serialize_with = "crate::enumerate::ser_count")]
    pub total: u128,
    #[serde(serialize_with = "crate::enumerate::ser_count_map")]
    pub by_last_entry: BTreeMap<u32, u128>,
    #[serde(serialize_with = "crate::enumerate::ser_count_map")]
    pub by_dist: BTreeMap<u32, u128>,
}

pub(crate) fn ser_count<S: serde::Serializer>(v: &u128, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub(crate) fn ser_count_map<S: serde::Serializer>(
    m: &BTreeMap<u32, u128>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut map = s.serialize_map(Some(m.len()))?;
    for (k, v) in m {
        map.serialize_entry(&k.to_string(), &v.to_string())?;
    }
    map.end()
}

impl AvoiderCount {
    fn empty(n: usize) -> Self {
        let mut by_dist = BTreeMap::new();
        if n == 0 {
            by_dist.insert(0, 1);
        }
        AvoiderCount {
            n,
            total: if n == 0 { 1 } else { 0 },
            by_last_entry: BTreeMap::new(),
            by_dist,
        }
    }

    fn record(&mut self, last: u32, dist: u32) {
        self.total += 1;
        *self.by_last_entry.entry(last).or_insert(0) += 1;
        *self.by_dist.entry(dist).or_insert(0) += 1;
    }
}

/// Count the inversion sequences of length `n` avoiding the consecutive
/// pattern `p`, by pruned depth-first search. Runtime is proportional to the
/// number of avoiding prefixes, so lengths up to about 12 are practical for
/// every pattern.
pub fn count_avoiders(p: RelationPattern, n: usize) -> AvoiderCount {
    let mut out = AvoiderCount::empty(n);
    if n == 0 {
        return out;
    }
    let table = p.window_table();
    let mut entries = vec![0u32; n];
    // seen[v] tracks how large the running dist is via a bitmask
    dfs_pair(table, &mut entries, 1, 1u64, &mut out);
    out
}

fn dfs_pair(table: u16, entries: &mut Vec<u32>, depth: usize, seen: u64, out: &mut AvoiderCount) {
    let n = entries.len();
    for v in 0..=(depth - 1) as u32 {
        if depth >= 3 {
            let idx = cmp_code(entries[depth - 3], entries[depth - 2]) * 3
                + cmp_code(entries[depth - 2], v);
            if (table >> idx) & 1 == 1 {
                continue;
            }
        }
        entries[depth - 1] = v;
        let seen = seen | (1 << v);
        if depth == n {
            out.record(v, seen.count_ones());
        } else {
            dfs_pair(table, entries, depth + 1, seen, out);
        }
    }
}

/// The ten triples whose avoiders are characterized by a unimodality
/// condition; their pruned search visits only avoiding prefixes.
pub fn is_unimodal_triple(t: TriplePattern) -> bool {
    use crate::core::RelationSymbol::*;
    matches!(
        (t.r1, t.r2, t.r3),
        (Lt, Dash, Lt)
            | (Ne, Lt, Dash)
            | (Ne, Le, Dash)
            | (Gt, Lt, Dash)
            | (Gt, Le, Dash)
            | (Gt, Ne, Dash)
            | (Ge, Ne, Dash)
            | (Eq, Lt, Dash)
            | (Eq, Le, Dash)
            | (Ge, Le, Ne)
    )
}

/// Count the inversion sequences of length `n` avoiding the classical triple
/// `t`. Guarded at length 12 in general; the ten unimodality-characterized
/// triples are allowed up to length 20 (runtime stays proportional to the
/// avoider count, which for the two radical-OGF families grows too fast well
/// before 20 — the guard is a ceiling, not a promise of speed).
pub fn count_avoiders_triple(t: TriplePattern, n: usize) -> Result<AvoiderCount> {
    let max = if is_unimodal_triple(t) { MAX_TRIPLE_UNIMODAL_N } else { MAX_TRIPLE_N };
    if n > max {
        return Err(Error::ResourceLimit { what: "count_avoiders_triple", n, max });
    }
    Ok(count_avoiders_triple_unguarded(t, n))
}

/// As [`count_avoiders_triple`] but without the resource guard.
pub fn count_avoiders_triple_unguarded(t: TriplePattern, n: usize) -> AvoiderCount {
    let mut out = AvoiderCount::empty(n);
    if n == 0 {
        return out;
    }
    let mut entries: Vec<u32> = Vec::with_capacity(n);
    dfs_triple(t, &mut entries, n, 1u64, &mut out);
    out
}

fn dfs_triple(t: TriplePattern, entries: &mut Vec<u32>, n: usize, seen: u64, out: &mut AvoiderCount) {
    let depth = entries.len() + 1;
    for v in 0..=(depth - 1) as u32 {
        if !extension_avoids_triple(entries, v, t) {
            continue;
        }
        let seen = seen | (1 << v);
        if depth == n {
            out.record(v, seen.count_ones());
        } else {
            entries.push(v);
            dfs_triple(t, entries, n, seen, out);
            entries.pop();
        }
    }
}

/// Joint distribution of occurrence-position sets over all of `I_n`:
/// `per_set[S]` counts the sequences whose occurrence set is exactly `S`.
/// Subsets of `{1, …, n-2}` are encoded as bitmasks with bit `i - 1` for
/// position `i`; absent keys mean zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OccurrenceProfile {
    pub n: usize,
    pub per_set: BTreeMap<u32, u128>,
}

impl OccurrenceProfile {
    /// Count of sequences whose occurrence set is exactly the given 1-based
    /// position set.
    pub fn count_for(&self, positions: &[usize]) -> u128 {
        let mask = positions.iter().fold(0u32, |m, &i| m | (1 << (i - 1)));
        self.per_set.get(&mask).copied().unwrap_or(0)
    }

    /// Number of sequences avoiding the pattern (the empty occurrence set).
    pub fn avoider_count(&self) -> u128 {
        self.per_set.get(&0).copied().unwrap_or(0)
    }

    /// Marginal by number of occurrences: `m -> count`.
    pub fn by_occurrence_count(&self) -> BTreeMap<u32, u128> {
        let mut out = BTreeMap::new();
        for (&mask, &c) in &self.per_set {
            *out.entry(mask.count_ones()).or_insert(0) += c;
        }
        out
    }

    /// Decode a bitmask key into 1-based positions.
    pub fn positions(mask: u32) -> Vec<usize> {
        (0..32).filter(|b| (mask >> b) & 1 == 1).map(|b| b + 1).collect()
    }
}

/// Exact per-set occurrence counts for `p` over all of `I_n`, by full
/// enumeration.
pub fn occurrence_profile(p: RelationPattern, n: usize) -> Result<OccurrenceProfile> {
    if n > MAX_PROFILE_N {
        return Err(Error::ResourceLimit { what: "occurrence_profile", n, max: MAX_PROFILE_N });
    }
    let table = p.window_table();
    let mut per_set: BTreeMap<u32, u128> = BTreeMap::new();
    for_each_window_codes(n, |codes| {
        let mut mask = 0u32;
        for (i, &idx) in codes.iter().enumerate() {
            mask |= (((table >> idx) & 1) as u32) << i;
        }
        *per_set.entry(mask).or_insert(0) += 1;
    });
    Ok(OccurrenceProfile { n, per_set })
}

/// Run `f` once per sequence in `I_n` with the window comparison codes
/// (`c1 * 3 + c2` per window, `n - 2` of them). Shared by the profile and
/// classification scans so the expensive full enumeration is written once.
fn for_each_window_codes(n: usize, mut f: impl FnMut(&[u8])) {
    if n < 3 {
        // no windows; n! sequences all have the empty code vector
        let mut count: u128 = 1;
        for k in 1..=n {
            count *= k as u128;
        }
        for _ in 0..count {
            f(&[]);
        }
        return;
    }
    let mut entries = vec![0u32; n];
    let mut codes = vec![0u8; n - 2];
    fn rec(entries: &mut [u32], codes: &mut [u8], depth: usize, f: &mut impl FnMut(&[u8])) {
        let n = entries.len();
        for v in 0..=(depth - 1) as u32 {
            entries[depth - 1] = v;
            if depth >= 3 {
                codes[depth - 3] =
                    cmp_code(entries[depth - 3], entries[depth - 2]) * 3 + cmp_code(entries[depth - 2], v);
            }
            if depth == n {
                f(codes);
            } else {
                rec(entries, codes, depth + 1, f);
            }
        }
    }
    rec(&mut entries, &mut codes, 1, &mut f);
}

/// The three generalized Wilf equivalence notions, from coarsest to finest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EquivLevel {
    /// Equal avoider counts for every length.
    Wilf,
    /// Equal counts of sequences with `m` occurrences, for every `n` and `m`.
    Strong,
    /// Equal counts for every exact set of occurrence positions.
    SuperStrong,
}

impl std::str::FromStr for EquivLevel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "wilf" => EquivLevel::Wilf,
            "strong" => EquivLevel::Strong,
            "superstrong" | "super-strong" => EquivLevel::SuperStrong,
            _ => return Err(Error::UnknownName { kind: "equivalence level", name: s.into() }),
        })
    }
}

impl std::fmt::Display for EquivLevel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            EquivLevel::Wilf => "wilf",
            EquivLevel::Strong => "strong",
            EquivLevel::SuperStrong => "superstrong",
        })
    }
}

/// Partition of the 36 patterns into equivalence classes, as verified by
/// exhaustive scans of `I_n` for all `n <= n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub level: EquivLevel,
    pub n_max: usize,
    /// Each class lists its patterns in the fixed pattern order; classes are
    /// ordered by their first member.
    pub classes: Vec<Vec<RelationPattern>>,
}

impl EquivalenceReport {
    /// True if every class of `self` is a union of classes of `finer`.
    pub fn is_coarsening_of(&self, finer: &EquivalenceReport) -> bool {
        finer.classes.iter().all(|fine| {
            self.classes
                .iter()
                .any(|coarse| fine.iter().all(|p| coarse.contains(p)))
        })
    }
}

/// Classify all 36 patterns by comparing exact occurrence data over every
/// length up to `n_max`. Wilf level compares avoider counts, strong level
/// compares the `m -> count` marginals, super-strong level compares the full
/// per-set maps.
pub fn classify(level: EquivLevel, n_max: usize) -> Result<EquivalenceReport> {
    if n_max > MAX_CLASSIFY_N {
        return Err(Error::ResourceLimit { what: "classify", n: n_max, max: MAX_CLASSIFY_N });
    }
    let patterns = RelationPattern::all();
    let tables: Vec<u16> = patterns.iter().map(|p| p.window_table()).collect();

    // data[p] = concatenated per-length statistics, compared for exact equality
    let mut data: Vec<Vec<u128>> = vec![Vec::new(); patterns.len()];
    for n in 3..=n_max {
        let windows = n - 2;
        let mut per_set: Vec<Vec<u128>> = vec![vec![0; 1 << windows]; patterns.len()];
        for_each_window_codes(n, |codes| {
            for (t, sets) in tables.iter().zip(per_set.iter_mut()) {
                let mut mask = 0usize;
                for (i, &idx) in codes.iter().enumerate() {
                    mask |= (((t >> idx) & 1) as usize) << i;
                }
                sets[mask] += 1;
            }
        });
        for (p, sets) in per_set.into_iter().enumerate() {
            match level {
                EquivLevel::Wilf => data[p].push(sets[0]),
                EquivLevel::Strong => {
                    let mut hist = vec![0u128; windows + 1];
                    for (mask, c) in sets.iter().enumerate() {
                        hist[mask.count_ones() as usize] += c;
                    }
                    data[p].extend(hist);
                }
                EquivLevel::SuperStrong => data[p].extend(sets),
            }
        }
    }

    let mut groups: BTreeMap<Vec<u128>, Vec<RelationPattern>> = BTreeMap::new();
    for (p, key) in patterns.iter().zip(data) {
        groups.entry(key).or_default().push(*p);
    }
    let mut classes: Vec<Vec<RelationPattern>> = groups.into_values().collect();
    for class in &mut classes {
        class.sort();
    }
    classes.sort();
    Ok(EquivalenceReport { level, n_max, classes })
}

/// The established classification of the 36 patterns (verified by exhaustive
/// search up to length 10): five non-singleton groups, all remaining patterns
/// singletons. At the Wilf level the first group has three members; at the
/// strong and super-strong levels `(!=,>=)` splits off into its own class.
pub fn baseline_partition(level: EquivLevel) -> Vec<Vec<RelationPattern>> {
    use crate::core::RelationSymbol::*;
    let pat = |a, b| RelationPattern::new(a, b).unwrap();
    let mut groups: Vec<Vec<RelationPattern>> = match level {
        EquivLevel::Wilf => vec![vec![pat(Ge, Lt), pat(Lt, Ge), pat(Ne, Ge)]],
        EquivLevel::Strong | EquivLevel::SuperStrong => {
            vec![vec![pat(Ge, Lt), pat(Lt, Ge)], vec![pat(Ne, Ge)]]
        }
    };
    groups.push(vec![pat(Ge, Ge), pat(Lt, Lt)]);
    groups.push(vec![pat(Ge, Eq), pat(Eq, Ge)]);
    groups.push(vec![pat(Ge, Gt), pat(Gt, Ge)]);
    groups.push(vec![pat(Gt, Eq), pat(Eq, Gt)]);
    let mut classes = groups.clone();
    for p in RelationPattern::all() {
        if !groups.iter().any(|g| g.contains(&p)) {
            classes.push(vec![p]);
        }
    }
    for class in &mut classes {
        class.sort();
    }
    classes.sort();
    classes
}
