//! Explicit bijections between avoidance classes of inversion sequences and
//! other combinatorial families: permutations, involutions, small subsets,
//! `{1,2}`-compositions, Dyck paths and (multi-)marked Dyck paths.
//!
//! Every map validates its domain up front and has an explicit inverse, so
//! round trips and image characterizations can be tested exhaustively.

mod paths;

pub use paths::{
    enumerate_dyck, enumerate_marked, enumerate_multi_marked, enumerate_slanted, MarkedDyckPath,
    MultiMarkedDyckPath, PathStep, SlantedPath, SlantedStep,
};

use std::collections::BTreeSet;

use crate::core::{InversionSequence, RelationPattern};
use crate::permutations::Permutation;
use crate::{Error, Result};

fn domain_err(map: &'static str, reason: impl Into<String>) -> Error {
    Error::DomainViolation { map, reason: reason.into() }
}

fn require_avoids(map: &'static str, e: &InversionSequence, pattern: &str) -> Result<()> {
    let p: RelationPattern = pattern.parse().expect("valid pattern literal");
    if !e.avoids(p) {
        return Err(domain_err(map, format!("{e} contains ({pattern})")));
    }
    Ok(())
}

/// The inversion sequence of a permutation:
/// `e_i = #{j < i : pi_j > pi_i}`.
pub fn inversion_sequence_of(pi: &Permutation) -> InversionSequence {
    let v = pi.values();
    let entries = (0..v.len())
        .map(|i| (0..i).filter(|&j| v[j] > v[i]).count() as u32)
        .collect();
    InversionSequence::new(entries).expect("inversion counts satisfy the bounds")
}

/// Inverse of [`inversion_sequence_of`]: scanning right to left, `pi_i` is
/// the `(e_i + 1)`-th largest value not yet used.
pub fn permutation_of(e: &InversionSequence) -> Permutation {
    let n = e.len();
    let mut avail: Vec<u8> = (1..=n as u8).collect();
    let mut values = vec![0u8; n];
    for i in (1..=n).rev() {
        let idx = avail.len() - 1 - e.entry(i) as usize;
        values[i - 1] = avail.remove(idx);
    }
    Permutation::new(values).expect("decoded values form a permutation")
}

/// The three occurrence-exchange families. Each maps sequences whose
/// occurrence set of the source pattern contains `S` to sequences whose
/// occurrence set of the target pattern contains `S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SwapVariant {
    /// `(=,>)` to `(>,=)`: shift each marked occurrence left by one entry.
    EqGtToGtEq,
    /// `(=,>=)` to `(>=,=)`: per block of consecutive positions, lower the
    /// plateau onto the following value when the final step is strict.
    EqGeToGeEq,
    /// `(>=,>)` to `(>,>=)`: per block, shift entries left when the block
    /// opens with an equality.
    GeGtToGtGe,
}

impl SwapVariant {
    pub fn source(self) -> RelationPattern {
        let s = match self {
            SwapVariant::EqGtToGtEq => "=,>",
            SwapVariant::EqGeToGeEq => "=,>=",
            SwapVariant::GeGtToGtGe => ">=,>",
        };
        s.parse().unwrap()
    }

    pub fn target(self) -> RelationPattern {
        let s = match self {
            SwapVariant::EqGtToGtEq => ">,=",
            SwapVariant::EqGeToGeEq => ">=,=",
            SwapVariant::GeGtToGtGe => ">,>=",
        };
        s.parse().unwrap()
    }
}

/// Maximal runs of consecutive integers in a sorted position set.
fn blocks(s: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &i in s {
        match out.last_mut() {
            Some((_, end)) if *end + 1 == i => *end = i,
            _ => out.push((i, i)),
        }
    }
    out
}

fn check_positions(map: &'static str, e: &InversionSequence, s: &[usize], p: RelationPattern) -> Result<Vec<usize>> {
    let mut sorted = s.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let occ = e.occurrence_set(p);
    for &i in &sorted {
        if !occ.contains(&i) {
            return Err(domain_err(map, format!("position {i} is not an occurrence of ({p}) in {e}")));
        }
    }
    Ok(sorted)
}

/// Replace the occurrences of the variant's source pattern at the positions
/// `S` with occurrences of its target pattern. `S` must be contained in the
/// source occurrence set.
pub fn swap_occurrences(e: &InversionSequence, s: &[usize], variant: SwapVariant) -> Result<InversionSequence> {
    let sorted = check_positions("swap_occurrences", e, s, variant.source())?;
    let v = e.entries();
    let mut out = v.to_vec();
    match variant {
        SwapVariant::EqGtToGtEq => {
            // e'_j = e_{j+1} when j-1 in S (0-based: out[i] = v[i+1] for i in S)
            for &i in &sorted {
                out[i] = v[i + 1];
            }
        }
        SwapVariant::EqGeToGeEq => {
            for (start, end) in blocks(&sorted) {
                // e_start = ... = e_{end+1} >= e_{end+2} (1-based)
                if v[end] > v[end + 1] {
                    for item in out.iter_mut().take(end + 1).skip(start) {
                        *item = v[end + 1];
                    }
                }
            }
        }
        SwapVariant::GeGtToGtGe => {
            for (start, end) in blocks(&sorted) {
                if v[start - 1] == v[start] {
                    for (i, item) in out.iter_mut().enumerate().take(end + 1).skip(start) {
                        *item = v[i + 1];
                    }
                }
            }
        }
    }
    InversionSequence::new(out).map_err(|_| domain_err("swap_occurrences", "image violates entry bounds"))
}

/// Inverse of [`swap_occurrences`]: `S` must be contained in the occurrence
/// set of the variant's target pattern.
pub fn swap_occurrences_inverse(
    e: &InversionSequence,
    s: &[usize],
    variant: SwapVariant,
) -> Result<InversionSequence> {
    let sorted = check_positions("swap_occurrences_inverse", e, s, variant.target())?;
    let v = e.entries();
    let mut out = v.to_vec();
    match variant {
        SwapVariant::EqGtToGtEq => {
            // e_j = e'_{j-1} when j-1 in S (0-based: out[i] = v[i-1] for i in S)
            for &i in &sorted {
                out[i] = v[i - 1];
            }
        }
        SwapVariant::EqGeToGeEq => {
            for (start, end) in blocks(&sorted) {
                if v[start - 1] > v[start] {
                    for item in out.iter_mut().take(end + 1).skip(start) {
                        *item = v[start - 1];
                    }
                }
            }
        }
        SwapVariant::GeGtToGtGe => {
            for (start, end) in blocks(&sorted) {
                if v[end] == v[end + 1] {
                    for (i, item) in out.iter_mut().enumerate().take(end + 1).skip(start) {
                        *item = v[i - 1];
                    }
                }
            }
        }
    }
    InversionSequence::new(out).map_err(|_| domain_err("swap_occurrences_inverse", "image violates entry bounds"))
}

/// Last-entry-preserving bijection from `(>=,>)`-avoiders to
/// `(>,>=)`-avoiders: each maximal drop-then-plateau `b v^r` (a strict drop
/// followed by `r >= 2` equal entries) becomes the plateau-then-drop
/// `b^r v`.
pub fn raise_plateaus(e: &InversionSequence) -> Result<InversionSequence> {
    require_avoids("raise_plateaus", e, ">=,>")?;
    let v = e.entries();
    let n = v.len();
    let mut out = v.to_vec();
    let mut j = 0; // 0-based index of a potential drop position
    while j + 1 < n {
        if v[j] > v[j + 1] {
            let mut r = 1;
            while j + r + 1 < n && v[j + r + 1] == v[j + 1] {
                r += 1;
            }
            if r >= 2 {
                // positions j+1 .. j+r-1 take the high value; j+r keeps the low
                for item in out.iter_mut().take(j + r).skip(j + 1) {
                    *item = v[j];
                }
            }
            j += r;
        } else {
            j += 1;
        }
    }
    InversionSequence::new(out).map_err(|_| domain_err("raise_plateaus", "image violates entry bounds"))
}

/// Inverse of [`raise_plateaus`]: from `(>,>=)`-avoiders to
/// `(>=,>)`-avoiders, turning each maximal plateau-then-drop `b^r v`
/// (`r >= 2`) back into `b v^r`.
pub fn lower_plateaus(e: &InversionSequence) -> Result<InversionSequence> {
    require_avoids("lower_plateaus", e, ">,>=")?;
    let v = e.entries();
    let n = v.len();
    let mut out = v.to_vec();
    let mut j = 0;
    while j < n {
        // maximal equal run starting at j
        let mut r = 1;
        while j + r < n && v[j + r] == v[j] {
            r += 1;
        }
        if r >= 2 && j + r < n && v[j + r] < v[j] {
            // positions j+1 .. j+r take the low value
            for item in out.iter_mut().take(j + r).skip(j + 1) {
                *item = v[j + r];
            }
        }
        j += r;
    }
    InversionSequence::new(out).map_err(|_| domain_err("lower_plateaus", "image violates entry bounds"))
}

/// Encode a `(!=,!=)`-avoider as an involution. The recursion inspects
/// `i = (e_n - e_{n-1}) mod n` (taken in `1..=n`): `i = n` appends the fixed
/// point `n`; otherwise `n` and `i` form a 2-cycle wrapped around the
/// encoding of the first `n - 2` entries.
pub fn to_involution(e: &InversionSequence) -> Result<Permutation> {
    require_avoids("to_involution", e, "!=,!=")?;
    Ok(upsilon(e.entries()))
}

fn upsilon(entries: &[u32]) -> Permutation {
    let n = entries.len();
    match n {
        0 => return Permutation::identity(0),
        1 => return Permutation::identity(1),
        _ => {}
    }
    let diff = (entries[n - 1] as i64 - entries[n - 2] as i64).rem_euclid(n as i64) as usize;
    let i = if diff == 0 { n } else { diff };
    if i == n {
        let sigma = upsilon(&entries[..n - 1]);
        let mut values = sigma.values().to_vec();
        values.push(n as u8);
        Permutation::new(values).expect("appending a fixed point keeps a permutation")
    } else {
        let tau = upsilon(&entries[..n - 2]);
        // sigma: the permutation of {1..n-1} minus {i} with reduction tau
        let support: Vec<u8> = (1..n as u8).filter(|&v| v as usize != i).collect();
        let sigma: Vec<u8> = tau.values().iter().map(|&k| support[k as usize - 1]).collect();
        let mut values = Vec::with_capacity(n);
        values.extend_from_slice(&sigma[..i - 1]);
        values.push(n as u8);
        values.extend_from_slice(&sigma[i - 1..]);
        values.push(i as u8);
        Permutation::new(values).expect("wrapping a 2-cycle keeps a permutation")
    }
}

/// Inverse of [`to_involution`].
pub fn from_involution(pi: &Permutation) -> Result<InversionSequence> {
    if !pi.is_involution() {
        return Err(domain_err("from_involution", format!("{pi} is not an involution")));
    }
    let entries = upsilon_inverse(pi.values())?;
    InversionSequence::new(entries).map_err(|_| domain_err("from_involution", "decoded entries out of bounds"))
}

fn upsilon_inverse(values: &[u8]) -> Result<Vec<u32>> {
    let n = values.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        return Ok(vec![0]);
    }
    let last = values[n - 1] as usize;
    if last == n {
        let mut entries = upsilon_inverse(&values[..n - 1])?;
        let repeat = entries[n - 2];
        entries.push(repeat);
        Ok(entries)
    } else {
        let i = last;
        // drop position i (holding the value n) and the final entry
        let sigma: Vec<u8> = values[..n - 1]
            .iter()
            .enumerate()
            .filter(|&(pos, _)| pos != i - 1)
            .map(|(_, &v)| v)
            .collect();
        if values[i - 1] as usize != n {
            return Err(domain_err("from_involution", "2-cycle structure does not match"));
        }
        // reduce sigma onto 1..n-2
        let mut sorted: Vec<u8> = sigma.clone();
        sorted.sort_unstable();
        let tau: Vec<u8> = sigma
            .iter()
            .map(|v| (sorted.binary_search(v).unwrap() + 1) as u8)
            .collect();
        let tau = Permutation::new(tau).expect("reduction of a partial permutation");
        if !tau.is_involution() {
            return Err(domain_err("from_involution", "reduced inner permutation is not an involution"));
        }
        let mut entries = upsilon_inverse(tau.values())?;
        let prev = if n == 2 { 0 } else { entries[n - 3] };
        entries.push(prev); // e_{n-1} = e_{n-2}
        entries.push(((prev as usize + i) % n) as u32);
        Ok(entries)
    }
}

/// Encode a `(>=,!=)`-avoider (a strict ramp followed by a constant run) as
/// a subset of `{0, …, n-2}` of size at most 2: `{max entry, last entry}`
/// when the last entry is below `n - 1`, empty otherwise.
pub fn to_subset(e: &InversionSequence) -> Result<BTreeSet<u32>> {
    require_avoids("to_subset", e, ">=,!=")?;
    let n = e.len();
    if n == 0 {
        return Ok(BTreeSet::new());
    }
    let last = e.entry(n);
    if last == n as u32 - 1 {
        return Ok(BTreeSet::new());
    }
    let max = e.entries().iter().copied().max().unwrap();
    Ok(BTreeSet::from([max, last]))
}

/// Inverse of [`to_subset`].
pub fn from_subset(set: &BTreeSet<u32>, n: usize) -> Result<InversionSequence> {
    let entries: Vec<u32> = match set.len() {
        0 => (0..n as u32).collect(),
        1 => {
            let a = *set.iter().next().unwrap();
            build_ramp(n, a, a)?
        }
        2 => {
            let mut it = set.iter();
            let b = *it.next().unwrap(); // BTreeSet iterates ascending: b < a
            let a = *it.next().unwrap();
            build_ramp(n, a, b)?
        }
        _ => return Err(domain_err("from_subset", "subsets of size > 2 are not in the image")),
    };
    InversionSequence::new(entries).map_err(|_| domain_err("from_subset", "subset elements out of range"))
}

fn build_ramp(n: usize, a: u32, b: u32) -> Result<Vec<u32>> {
    if a as usize > n.saturating_sub(2) {
        return Err(domain_err("from_subset", format!("element {a} exceeds n-2")));
    }
    let mut entries: Vec<u32> = (0..=a).collect();
    entries.resize(n, b);
    Ok(entries)
}

/// Encode a `(>=,<=)`-avoider (strictly unimodal) as a composition of `n`
/// with parts in `{1, 2}`: part `i` counts the entries equal to `i - 1`.
pub fn to_composition(e: &InversionSequence) -> Result<Vec<u32>> {
    require_avoids("to_composition", e, ">=,<=")?;
    let v = e.entries();
    let n = v.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut j = n; // length of the strictly increasing ramp
    for i in 0..n - 1 {
        if v[i] >= v[i + 1] {
            j = i + 1;
            break;
        }
    }
    let mut parts = vec![0u32; j];
    for &value in v {
        parts[value as usize] += 1;
    }
    debug_assert!(parts.iter().all(|&p| p == 1 || p == 2));
    Ok(parts)
}

/// Inverse of [`to_composition`]: rebuild the ramp `0, 1, …, j-1`, then let
/// `i` run left to right and send each part of size 2 to the rightmost
/// unfilled position.
pub fn from_composition(parts: &[u32]) -> Result<InversionSequence> {
    if parts.iter().any(|&p| p != 1 && p != 2) {
        return Err(domain_err("from_composition", "parts must be 1 or 2"));
    }
    let n: usize = parts.iter().map(|&p| p as usize).sum();
    let j = parts.len();
    let mut entries = vec![u32::MAX; n];
    for (i, slot) in entries.iter_mut().enumerate().take(j) {
        *slot = i as u32;
    }
    let mut right = n;
    for (i, &p) in parts.iter().enumerate() {
        if p == 2 {
            right -= 1;
            entries[right] = i as u32;
        }
    }
    InversionSequence::new(entries).map_err(|_| domain_err("from_composition", "composition too long"))
}

/// Encode a `(<=,>)`-avoider (weakly increasing) as a Dyck path of
/// semilength `n`: an `E` step at each entry's height, with `N` steps in
/// between and `n - e_n` final `N` steps. The result carries no marks.
pub fn to_dyck_path(e: &InversionSequence) -> Result<MarkedDyckPath> {
    require_avoids("to_dyck_path", e, "<=,>")?;
    let v = e.entries();
    let n = v.len();
    let mut steps = Vec::with_capacity(2 * n);
    let mut height = 0u32;
    for &value in v {
        for _ in height..value {
            steps.push(PathStep::N);
        }
        height = value;
        steps.push(PathStep::E);
    }
    for _ in 0..(n as u32 - height) {
        steps.push(PathStep::N);
    }
    MarkedDyckPath::new(steps).map_err(|_| domain_err("to_dyck_path", "constructed path invalid"))
}

/// Inverse of [`to_dyck_path`].
pub fn from_dyck_path(p: &MarkedDyckPath) -> Result<InversionSequence> {
    if p.has_marks() {
        return Err(domain_err("from_dyck_path", "Dyck paths carry no marks"));
    }
    let mut entries = Vec::with_capacity(p.size());
    let mut height = 0u32;
    for &s in p.steps() {
        match s {
            PathStep::E => entries.push(height),
            _ => height += 1,
        }
    }
    InversionSequence::new(entries).map_err(|_| domain_err("from_dyck_path", "decoded entries out of bounds"))
}

/// Shape check shared by the path bijections: the position `j` (1-based) of
/// the first strict descent, or `n` if none.
fn first_descent(v: &[u32]) -> usize {
    for i in 0..v.len().saturating_sub(1) {
        if v[i] > v[i + 1] {
            return i + 1;
        }
    }
    v.len()
}

fn check_unimodal(map: &'static str, v: &[u32], strict_tail: bool) -> Result<usize> {
    let j = first_descent(v);
    for i in j..v.len().saturating_sub(1) {
        let ok = if strict_tail { v[i] > v[i + 1] } else { v[i] >= v[i + 1] };
        if !ok {
            return Err(domain_err(map, "sequence is not of the required unimodal shape"));
        }
    }
    Ok(j)
}

/// Encode an avoider of the classical triple `(>,<=,-)` (weakly increasing,
/// then strictly decreasing) as a marked Dyck path with an unmarked tail:
/// each descending entry `v` marks the ascending `N` step from height `v`,
/// the descending part is erased, and `j - e_j` final `N` steps close the
/// path.
pub fn to_marked_path(e: &InversionSequence) -> Result<MarkedDyckPath> {
    let steps = build_marked_steps("to_marked_path", e.entries(), true)?;
    MarkedDyckPath::new(steps).map_err(|_| domain_err("to_marked_path", "constructed path invalid"))
}

/// Encode an avoider of the classical triple `(>,<,-)` (weakly increasing,
/// then weakly decreasing) as a multi-marked Dyck path with an unmarked
/// tail: a maximal run of `t - 1` equal descending entries `v` marks the
/// ascending `N` step from height `v` with arity `t`.
pub fn to_multi_marked_path(e: &InversionSequence) -> Result<MultiMarkedDyckPath> {
    let steps = build_marked_steps("to_multi_marked_path", e.entries(), false)?;
    MultiMarkedDyckPath::new(steps).map_err(|_| domain_err("to_multi_marked_path", "constructed path invalid"))
}

fn build_marked_steps(map: &'static str, v: &[u32], strict_tail: bool) -> Result<Vec<PathStep>> {
    let n = v.len();
    let j = check_unimodal(map, v, strict_tail)?;
    let mut steps = Vec::new();
    let mut vertical_index = Vec::new(); // index in steps of the N step h -> h+1
    let mut height = 0u32;
    for &value in &v[..j] {
        for _ in height..value {
            vertical_index.push(steps.len());
            steps.push(PathStep::N);
        }
        height = value;
        steps.push(PathStep::E);
    }
    // group the descending part into maximal runs of equal entries
    let mut i = j;
    while i < n {
        let mut run = 1;
        while i + run < n && v[i + run] == v[i] {
            run += 1;
        }
        let arity = run as u32 + 1;
        steps[vertical_index[v[i] as usize]] = PathStep::Marked(arity);
        i += run;
    }
    if n > 0 {
        for _ in 0..(j as u32 - v[j - 1]) {
            steps.push(PathStep::N);
        }
    }
    Ok(steps)
}

/// Inverse of [`to_marked_path`].
pub fn from_marked_path(p: &MarkedDyckPath) -> Result<InversionSequence> {
    decode_marked("from_marked_path", p.as_multi())
}

/// Inverse of [`to_multi_marked_path`].
pub fn from_multi_marked_path(p: &MultiMarkedDyckPath) -> Result<InversionSequence> {
    decode_marked("from_multi_marked_path", p)
}

fn decode_marked(map: &'static str, p: &MultiMarkedDyckPath) -> Result<InversionSequence> {
    if !p.has_unmarked_tail() {
        return Err(domain_err(map, "path has a marked tail"));
    }
    let mut entries = Vec::with_capacity(p.size());
    let mut marks: Vec<(u32, u32)> = Vec::new(); // (height, arity)
    let mut height = 0u32;
    for &s in p.steps() {
        match s {
            PathStep::E => entries.push(height),
            PathStep::N => height += 1,
            PathStep::Marked(t) => {
                marks.push((height, t));
                height += 1;
            }
        }
    }
    // descending part: runs of t-1 copies of each marked height, largest first
    marks.sort_unstable_by_key(|&(h, _)| std::cmp::Reverse(h));
    for (h, t) in marks {
        for _ in 1..t {
            entries.push(h);
        }
    }
    InversionSequence::new(entries).map_err(|_| domain_err(map, "decoded entries out of bounds"))
}

/// Encode a `(>,<=,-)`-avoider of length `n >= 1` as a slanted path of
/// extent `n - 1` with binary slants: in its marked Dyck path, each mark
/// becomes a `D` step and the final `E N^k` tail is removed.
pub fn to_slanted_path(e: &InversionSequence) -> Result<SlantedPath> {
    let marked = to_marked_path(e)?;
    flatten_to_slanted("to_slanted_path", marked.as_multi())
}

/// Encode a `(>,<,-)`-avoider of length `n >= 1` as a slanted path of
/// extent `n - 1`, with a `D(t)` step per arity-`t` mark.
pub fn to_multi_slanted_path(e: &InversionSequence) -> Result<SlantedPath> {
    let marked = to_multi_marked_path(e)?;
    flatten_to_slanted("to_multi_slanted_path", &marked)
}

fn flatten_to_slanted(map: &'static str, p: &MultiMarkedDyckPath) -> Result<SlantedPath> {
    let steps = p.steps();
    if steps.is_empty() {
        return Err(domain_err(map, "defined for lengths >= 1"));
    }
    // strip the final run of plain N steps and the E immediately before it
    let mut end = steps.len();
    while end > 0 && steps[end - 1] == PathStep::N {
        end -= 1;
    }
    debug_assert!(end > 0 && steps[end - 1] == PathStep::E, "unmarked tail is preceded by an E");
    let slanted: Vec<SlantedStep> = steps[..end - 1]
        .iter()
        .map(|&s| match s {
            PathStep::E => SlantedStep::E,
            PathStep::N => SlantedStep::N,
            PathStep::Marked(t) => SlantedStep::D(t),
        })
        .collect();
    SlantedPath::new(slanted).map_err(|_| domain_err(map, "flattened path invalid"))
}

/// Inverse of [`to_slanted_path`]; the path must have binary slants.
pub fn from_slanted_path(p: &SlantedPath) -> Result<InversionSequence> {
    if !p.is_binary() {
        return Err(domain_err("from_slanted_path", "slants of arity > 2 are not in the image"));
    }
    let marked = unflatten("from_slanted_path", p)?;
    decode_marked("from_slanted_path", &marked)
}

/// Inverse of [`to_multi_slanted_path`].
pub fn from_multi_slanted_path(p: &SlantedPath) -> Result<InversionSequence> {
    let marked = unflatten("from_multi_slanted_path", p)?;
    decode_marked("from_multi_slanted_path", &marked)
}

fn unflatten(map: &'static str, p: &SlantedPath) -> Result<MultiMarkedDyckPath> {
    // contract each D(t) to a unit marked step (this preserves y - x at
    // every step endpoint), then close with E N^k back to the diagonal
    let mut steps: Vec<PathStep> = Vec::with_capacity(p.steps().len() + 2);
    let (mut x, mut y) = (0usize, 0usize);
    for &s in p.steps() {
        steps.push(match s {
            SlantedStep::E => {
                x += 1;
                PathStep::E
            }
            SlantedStep::N => {
                y += 1;
                PathStep::N
            }
            SlantedStep::D(t) => {
                y += 1;
                PathStep::Marked(t)
            }
        });
    }
    steps.push(PathStep::E);
    x += 1;
    for _ in y..x {
        steps.push(PathStep::N);
    }
    MultiMarkedDyckPath::new(steps).map_err(|_| domain_err(map, "contracted path invalid"))
}

/// One direction of the vincular correspondence: maps a permutation
/// avoiding the vincular pattern `(124)3` to one avoiding `(421)3`, via
/// reverse-complement, the inversion-sequence encoding, the
/// plateau-exchange bijection and reversal.
pub fn vincular_1243_to_4213(pi: &Permutation) -> Result<Permutation> {
    let e = inversion_sequence_of(&pi.reverse_complement());
    Ok(permutation_of(&lower_plateaus(&e)?).reverse())
}

/// Inverse of [`vincular_1243_to_4213`].
pub fn vincular_4213_to_1243(pi: &Permutation) -> Result<Permutation> {
    let e = inversion_sequence_of(&pi.reverse());
    Ok(permutation_of(&raise_plateaus(&e)?).reverse_complement())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> InversionSequence {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn theta_examples() {
        assert_eq!(inversion_sequence_of(&perm("42513")), seq("01032"));
        assert_eq!(inversion_sequence_of(&Permutation::identity(5)), seq("00000"));
        assert_eq!(inversion_sequence_of(&perm("54321")), seq("01234"));
        assert_eq!(permutation_of(&seq("01032")), perm("42513"));
        assert_eq!(permutation_of(&seq("00000")), Permutation::identity(5));
        // theta_inverse of 00114 (derived by the insertion rule)
        assert_eq!(permutation_of(&seq("00114")), perm("25341"));
        assert_eq!(inversion_sequence_of(&perm("25341")), seq("00114"));
    }

    #[test]
    fn theta_round_trip_exhaustive() {
        for n in 0..=6 {
            crate::permutations::for_each_permutation(n, |pi| {
                assert_eq!(permutation_of(&inversion_sequence_of(pi)), *pi);
            });
            for e in crate::enumerate::enumerate_all(n).unwrap() {
                assert_eq!(inversion_sequence_of(&permutation_of(&e)), e);
            }
        }
    }

    #[test]
    fn swap_examples() {
        let e = seq("0110");
        assert_eq!(swap_occurrences(&e, &[2], SwapVariant::EqGtToGtEq).unwrap(), seq("0100"));
        assert_eq!(swap_occurrences(&e, &[2], SwapVariant::GeGtToGtGe).unwrap(), seq("0100"));
        assert_eq!(swap_occurrences(&e, &[], SwapVariant::EqGeToGeEq).unwrap(), e);
        // not an occurrence position
        assert!(swap_occurrences(&e, &[1], SwapVariant::EqGtToGtEq).is_err());
    }

    #[test]
    fn swap_round_trip_exhaustive() {
        for variant in [SwapVariant::EqGtToGtEq, SwapVariant::EqGeToGeEq, SwapVariant::GeGtToGtGe] {
            for n in 3..=7 {
                for e in crate::enumerate::enumerate_all(n).unwrap() {
                    let occ = e.occurrence_set(variant.source());
                    // every subset of the occurrence set
                    for mask in 0..(1u32 << occ.len()) {
                        let s: Vec<usize> = occ
                            .iter()
                            .enumerate()
                            .filter(|(b, _)| (mask >> b) & 1 == 1)
                            .map(|(_, &p)| p)
                            .collect();
                        let image = swap_occurrences(&e, &s, variant).unwrap();
                        let target_occ = image.occurrence_set(variant.target());
                        assert!(
                            s.iter().all(|p| target_occ.contains(p)),
                            "variant={variant:?} e={e} S={s:?} image={image}"
                        );
                        let back = swap_occurrences_inverse(&image, &s, variant).unwrap();
                        assert_eq!(back, e, "variant={variant:?} e={e} S={s:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn plateau_exchange_examples() {
        assert_eq!(raise_plateaus(&seq("0100")).unwrap(), seq("0110"));
        assert_eq!(lower_plateaus(&seq("0110")).unwrap(), seq("0100"));
        let ramp = seq("0123");
        assert_eq!(raise_plateaus(&ramp).unwrap(), ramp);
        assert_eq!(raise_plateaus(&seq("0000")).unwrap(), seq("0000"));
        // 0110 contains (>=,>) at position 2, so it is outside the domain
        assert!(raise_plateaus(&seq("0110")).is_err());
    }

    #[test]
    fn involution_examples() {
        assert_eq!(to_involution(&seq("00114")).unwrap(), perm("42513"));
        assert_eq!(to_involution(&seq("001")).unwrap(), perm("321"));
        assert_eq!(to_involution(&seq("0")).unwrap(), perm("1"));
        assert_eq!(from_involution(&perm("42513")).unwrap(), seq("00114"));
        assert!(to_involution(&seq("010")).is_err()); // contains (!=,!=)
        assert!(from_involution(&perm("231")).is_err());
    }

    #[test]
    fn subset_examples() {
        assert_eq!(to_subset(&seq("012322")).unwrap(), BTreeSet::from([3, 2]));
        assert_eq!(to_subset(&seq("012344")).unwrap(), BTreeSet::from([4]));
        assert_eq!(to_subset(&seq("012345")).unwrap(), BTreeSet::new());
        assert_eq!(from_subset(&BTreeSet::from([3, 2]), 6).unwrap(), seq("012322"));
        assert_eq!(from_subset(&BTreeSet::new(), 6).unwrap(), seq("012345"));
    }

    #[test]
    fn composition_examples() {
        assert_eq!(to_composition(&seq("012210")).unwrap(), vec![2, 2, 2]);
        assert_eq!(to_composition(&seq("012310")).unwrap(), vec![2, 2, 1, 1]);
        assert_eq!(to_composition(&seq("0123")).unwrap(), vec![1, 1, 1, 1]);
        assert_eq!(from_composition(&[2, 2, 2]).unwrap(), seq("012210"));
        assert_eq!(from_composition(&[2, 2, 1, 1]).unwrap(), seq("012310"));
        assert!(from_composition(&[3]).is_err());
    }

    #[test]
    fn dyck_path_examples() {
        // E steps at heights 0,0,1,1,2,3 plus a 3-step tail
        assert_eq!(to_dyck_path(&seq("001123")).unwrap().to_string(), "EENEENENENNN");
        assert_eq!(to_dyck_path(&seq("000")).unwrap().to_string(), "EEENNN");
        assert_eq!(to_dyck_path(&seq("012")).unwrap().to_string(), "ENENEN");
        let p = to_dyck_path(&seq("001123")).unwrap();
        assert_eq!(from_dyck_path(&p).unwrap(), seq("001123"));
        assert!(to_dyck_path(&seq("010")).is_err());
    }

    #[test]
    fn marked_path_examples() {
        let e = seq("011344421");
        let p = to_marked_path(&e).unwrap();
        assert_eq!(p.to_string(), "ENEEN*N*ENEEENNN");
        assert_eq!(p.dist(), 5);
        assert_eq!(e.dist(), 5);
        assert_eq!(from_marked_path(&p).unwrap(), e);

        assert_eq!(to_marked_path(&seq("0000")).unwrap().to_string(), "EEEENNNN");
        assert_eq!(to_marked_path(&seq("010")).unwrap().to_string(), "EN*EN");
        // weakly decreasing tail is outside the strict domain
        assert!(to_marked_path(&seq("01100")).is_err());
    }

    #[test]
    fn slanted_path_examples() {
        assert_eq!(to_slanted_path(&seq("011344421")).unwrap().to_string(), "ENEEDDENEE");
        assert_eq!(to_slanted_path(&seq("0000")).unwrap().to_string(), "EEE");
        assert_eq!(to_slanted_path(&seq("010")).unwrap().to_string(), "ED");
        let p = to_slanted_path(&seq("011344421")).unwrap();
        assert_eq!(p.extent(), 8);
        assert_eq!(from_slanted_path(&p).unwrap(), seq("011344421"));
    }

    #[test]
    fn multi_marked_path_examples() {
        let e = seq("011345442111");
        let p = to_multi_marked_path(&e).unwrap();
        // arity-2 marks print as the bare N* token
        assert_eq!(p, "ENEEN*4N*2ENEN*3EN".parse().unwrap());
        assert_eq!(p.to_string(), "ENEEN*4N*ENEN*3EN");
        assert_eq!(from_multi_marked_path(&p).unwrap(), e);
        assert_eq!(p.dist(), e.dist());

        let r = to_multi_slanted_path(&e).unwrap();
        assert_eq!(r, "ENEED4D2ENED3".parse().unwrap());
        assert_eq!(r.to_string(), "ENEED4DENED3");
        assert_eq!(r.extent(), 11);
        assert_eq!(from_multi_slanted_path(&r).unwrap(), e);

        // strictly-decreasing-tail avoiders embed with binary marks
        let strict = seq("011344421");
        assert_eq!(to_multi_marked_path(&strict).unwrap().to_string(), "ENEEN*N*ENEEENNN");
        assert_eq!(to_multi_slanted_path(&seq("010")).unwrap().to_string(), "ED");
    }

    #[test]
    fn path_map_domains_equal_triple_avoidance() {
        for n in 0..=7 {
            for e in crate::enumerate::enumerate_all(n).unwrap() {
                let strict = e.avoids_triple(">,<=,-".parse().unwrap());
                assert_eq!(to_marked_path(&e).is_ok(), strict, "e={e}");
                let weak = e.avoids_triple(">,<,-".parse().unwrap());
                assert_eq!(to_multi_marked_path(&e).is_ok(), weak, "e={e}");
            }
        }
    }

    #[test]
    fn vincular_composite_examples() {
        // 1342 avoids (124)3; its image must avoid (421)3
        let image = vincular_1243_to_4213(&perm("1342")).unwrap();
        assert_eq!(image, perm("4312"));
        assert_eq!(vincular_4213_to_1243(&image).unwrap(), perm("1342"));
    }
}
