//! Permutations, vincular pattern avoidance and the symmetries used to
//! transfer results between permutations and inversion sequences.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A permutation of `{1, …, n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    values: Vec<u8>,
}

impl Permutation {
    pub fn new(values: Vec<u8>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::Parse(format!("not a permutation of 1..{n}: {values:?}")));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { values })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { values: (1..=n as u8).collect() }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    /// Value at 1-based position `i`.
    pub fn at(&self, i: usize) -> u8 {
        self.values[i - 1]
    }

    /// `pi^R_i = pi_{n+1-i}`.
    pub fn reverse(&self) -> Permutation {
        let mut values = self.values.clone();
        values.reverse();
        Permutation { values }
    }

    /// `pi^RC_i = n + 1 - pi^R_i`.
    pub fn reverse_complement(&self) -> Permutation {
        let n = self.values.len() as u8;
        let values = self.values.iter().rev().map(|&v| n + 1 - v).collect();
        Permutation { values }
    }

    /// True iff `pi` composed with itself is the identity.
    pub fn is_involution(&self) -> bool {
        self.values
            .iter()
            .enumerate()
            .all(|(idx, &v)| self.values[v as usize - 1] as usize == idx + 1)
    }

    pub fn avoids_vincular(&self, v: &VincularPattern) -> bool {
        !contains_vincular(&self.values, v)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.values.iter().all(|&v| v < 10) {
            for &v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.values.iter().map(u8::to_string).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values: Vec<u8> = if s.is_empty() {
            Vec::new()
        } else if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse::<u8>().map_err(|e| Error::Parse(format!("bad value {p:?}: {e}"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or_else(|| Error::Parse(format!("bad digit {c:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(values)
    }
}

/// A vincular permutation pattern: one-line letters `1..r` plus a set of
/// adjacency constraints. Adjacency `i` (with `1 <= i <= r-1`) requires the
/// letters at positions `i` and `i+1` to be adjacent in an occurrence. Full
/// adjacency gives a consecutive pattern, empty adjacency a classical one.
///
/// Textual form: digits with parenthesized adjacent blocks, e.g. `(124)3`
/// for the pattern whose first three letters must be adjacent, or `2(134)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VincularPattern {
    letters: Vec<u8>,
    adjacency: Vec<bool>, // adjacency[i] for positions i+1, i+2 (0-based)
}

impl VincularPattern {
    pub fn new(letters: Vec<u8>, adjacent_positions: &[usize]) -> Result<Self> {
        let perm = Permutation::new(letters)?;
        let r = perm.len();
        let mut adjacency = vec![false; r.saturating_sub(1)];
        for &i in adjacent_positions {
            if i == 0 || i >= r {
                return Err(Error::Parse(format!("adjacency position {i} out of range 1..{}", r - 1)));
            }
            adjacency[i - 1] = true;
        }
        Ok(VincularPattern { letters: perm.values, adjacency })
    }

    /// A classical pattern: no adjacency constraints.
    pub fn classical(letters: Vec<u8>) -> Result<Self> {
        VincularPattern::new(letters, &[])
    }

    /// A consecutive pattern: all positions adjacent.
    pub fn consecutive(letters: Vec<u8>) -> Result<Self> {
        let r = letters.len();
        VincularPattern::new(letters, &(1..r).collect::<Vec<_>>())
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    /// 1-based positions `i` such that letters `i` and `i+1` must be adjacent.
    pub fn adjacent_positions(&self) -> Vec<usize> {
        self.adjacency
            .iter()
            .enumerate()
            .filter(|(_, &a)| a)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

impl fmt::Display for VincularPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut i = 0;
        while i < self.letters.len() {
            // extend a maximal adjacent block starting at i
            let mut j = i;
            while j < self.adjacency.len() && self.adjacency[j] {
                j += 1;
            }
            if j > i {
                write!(f, "(")?;
                for k in i..=j {
                    write!(f, "{}", self.letters[k])?;
                }
                write!(f, ")")?;
                i = j + 1;
            } else {
                write!(f, "{}", self.letters[i])?;
                i += 1;
            }
        }
        Ok(())
    }
}

impl FromStr for VincularPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut letters: Vec<u8> = Vec::new();
        let mut adjacency: Vec<bool> = Vec::new();
        let mut in_block = false;
        let mut block_len = 0usize;
        for c in s.trim().chars() {
            match c {
                '(' => {
                    if in_block {
                        return Err(Error::Parse(format!("nested '(' in {s:?}")));
                    }
                    in_block = true;
                    block_len = 0;
                }
                ')' => {
                    if !in_block {
                        return Err(Error::Parse(format!("unmatched ')' in {s:?}")));
                    }
                    if block_len < 2 {
                        return Err(Error::Parse(format!("block needs at least two letters in {s:?}")));
                    }
                    in_block = false;
                }
                c if c.is_ascii_digit() => {
                    let d = c.to_digit(10).unwrap() as u8;
                    if !letters.is_empty() {
                        // adjacent to the previous letter iff both sit in the
                        // same parenthesized block
                        adjacency.push(in_block && block_len >= 1);
                    }
                    letters.push(d);
                    if in_block {
                        block_len += 1;
                    }
                }
                c if c.is_whitespace() => {}
                _ => return Err(Error::Parse(format!("bad character {c:?} in {s:?}"))),
            }
        }
        if in_block {
            return Err(Error::Parse(format!("unclosed '(' in {s:?}")));
        }
        let perm = Permutation::new(letters)?;
        Ok(VincularPattern { letters: perm.values, adjacency })
    }
}

/// Occurrence search: choose positions left to right, pruning on order
/// compatibility and on the adjacency constraints.
fn contains_vincular(values: &[u8], pattern: &VincularPattern) -> bool {
    let r = pattern.letters.len();
    if r == 0 {
        return true;
    }
    if values.len() < r {
        return false;
    }
    let mut chosen: Vec<usize> = Vec::with_capacity(r);
    search(values, pattern, &mut chosen)
}

fn search(values: &[u8], pattern: &VincularPattern, chosen: &mut Vec<usize>) -> bool {
    let k = chosen.len();
    if k == pattern.letters.len() {
        return true;
    }
    let start = if k == 0 {
        0
    } else if pattern.adjacency[k - 1] {
        // must take exactly the next position
        let pos = chosen[k - 1] + 1;
        if pos >= values.len() || !compatible(values, pattern, chosen, pos) {
            return false;
        }
        chosen.push(pos);
        if search(values, pattern, chosen) {
            return true;
        }
        chosen.pop();
        return false;
    } else {
        chosen[k - 1] + 1
    };
    for pos in start..values.len() {
        // not enough room for the remaining letters
        if values.len() - pos < pattern.letters.len() - k {
            break;
        }
        if compatible(values, pattern, chosen, pos) {
            chosen.push(pos);
            if search(values, pattern, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Would appending `pos` keep the chosen subsequence order-isomorphic to the
/// pattern prefix?
fn compatible(values: &[u8], pattern: &VincularPattern, chosen: &[usize], pos: usize) -> bool {
    let k = chosen.len();
    let new_letter = pattern.letters[k];
    for (i, &p) in chosen.iter().enumerate() {
        let ord_vals = values[p].cmp(&values[pos]);
        let ord_pat = pattern.letters[i].cmp(&new_letter);
        if ord_vals != ord_pat {
            return false;
        }
    }
    true
}

/// Run `f` on every permutation of `{1, …, n}` in lexicographic order.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&Permutation)) {
    let mut values: Vec<u8> = (1..=n as u8).collect();
    loop {
        f(&Permutation { values: values.clone() });
        if !next_permutation(&mut values) {
            return;
        }
    }
}

fn next_permutation(values: &mut [u8]) -> bool {
    let n = values.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && values[i - 1] >= values[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while values[j] <= values[i - 1] {
        j -= 1;
    }
    values.swap(i - 1, j);
    values[i..].reverse();
    true
}

/// Guard for full scans of `S_n`.
pub const MAX_SCAN_N: usize = 9;

/// Count the permutations of `{1, …, n}` avoiding all the given vincular
/// patterns, by full scan.
pub fn count_avoiders_vincular(patterns: &[VincularPattern], n: usize) -> Result<u128> {
    if n > MAX_SCAN_N {
        return Err(Error::ResourceLimit { what: "count_avoiders_vincular", n, max: MAX_SCAN_N });
    }
    let mut count = 0u128;
    for_each_permutation(n, |pi| {
        if patterns.iter().all(|v| pi.avoids_vincular(v)) {
            count += 1;
        }
    });
    Ok(count)
}

/// Count the permutations avoiding all the given classical patterns.
pub fn count_avoiders_classical(patterns: &[Permutation], n: usize) -> Result<u128> {
    let vincular: Vec<VincularPattern> = patterns
        .iter()
        .map(|p| VincularPattern::classical(p.values.clone()))
        .collect::<Result<_>>()?;
    count_avoiders_vincular(&vincular, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn vinc(s: &str) -> VincularPattern {
        s.parse().unwrap()
    }

    #[test]
    fn construction_and_parse() {
        assert!(Permutation::new(vec![2, 1, 3]).is_ok());
        assert!(Permutation::new(vec![2, 2, 3]).is_err());
        assert!(Permutation::new(vec![0]).is_err());
        assert_eq!(perm("42513").to_string(), "42513");
        assert_eq!(Permutation::identity(0).len(), 0);
    }

    #[test]
    fn symmetries() {
        assert_eq!(perm("123").reverse(), perm("321"));
        assert_eq!(perm("42513").reverse_complement(), perm("35142"));
        assert_eq!(perm("35142").reverse_complement(), perm("42513"));
        let id = Permutation::identity(6);
        assert_eq!(id.reverse_complement(), id);
        for n in 0..=5 {
            for_each_permutation(n, |pi| {
                assert_eq!(pi.reverse().reverse(), *pi);
                assert_eq!(pi.reverse_complement().reverse_complement(), *pi);
            });
        }
    }

    #[test]
    fn involutions() {
        assert!(perm("42513").is_involution());
        assert!(!perm("231").is_involution());
        let mut count = 0;
        for_each_permutation(4, |pi| {
            if pi.is_involution() {
                count += 1;
            }
        });
        assert_eq!(count, 10);
    }

    #[test]
    fn vincular_parse_and_display() {
        let p = vinc("(124)3");
        assert_eq!(p.letters(), &[1, 2, 4, 3]);
        assert_eq!(p.adjacent_positions(), vec![1, 2]);
        assert_eq!(p.to_string(), "(124)3");
        let q = vinc("2(134)");
        assert_eq!(q.adjacent_positions(), vec![2, 3]);
        assert_eq!(q.to_string(), "2(134)");
        let c = vinc("(321)");
        assert_eq!(c.adjacent_positions(), vec![1, 2]);
        assert!("(1)2".parse::<VincularPattern>().is_err());
        assert!("(12".parse::<VincularPattern>().is_err());
        assert_eq!(vinc("213").adjacent_positions(), Vec::<usize>::new());
    }

    #[test]
    fn vincular_avoidance_counts() {
        assert_eq!(count_avoiders_vincular(&[vinc("(124)3")], 6).unwrap(), 584);
        assert!(Permutation::identity(3).avoids_vincular(&vinc("(321)")));
        assert_eq!(count_avoiders_vincular(&[vinc("(321)")], 5).unwrap(), 70);
    }

    #[test]
    fn classical_avoidance_counts() {
        assert_eq!(count_avoiders_classical(&[perm("213"), perm("321")], 6).unwrap(), 16);
        assert_eq!(
            count_avoiders_classical(&[perm("2143"), perm("3142"), perm("4132")], 4).unwrap(),
            21
        );
        assert_eq!(count_avoiders_classical(&[perm("12")], 1).unwrap(), 1);
        assert!(count_avoiders_classical(&[perm("12")], 10).is_err());
    }

    #[test]
    fn consecutive_block_must_be_adjacent() {
        // 1324 contains classical 123 (1,3,4) but no adjacent increasing triple
        let consec = VincularPattern::consecutive(vec![1, 2, 3]).unwrap();
        let class = VincularPattern::classical(vec![1, 2, 3]).unwrap();
        let p = perm("1324");
        assert!(!p.avoids_vincular(&class));
        assert!(p.avoids_vincular(&consec));
    }

    #[test]
    fn vincular_matches_naive_on_s5() {
        // backtracking search agrees with a naive all-subsequences scan
        let patterns = [vinc("(124)3"), vinc("2(134)"), vinc("(421)3"), vinc("3(124)"), vinc("(321)")];
        for_each_permutation(5, |pi| {
            for p in &patterns {
                let naive = naive_contains(pi.values(), p);
                assert_eq!(!pi.avoids_vincular(p), naive, "pi={pi} p={p}");
            }
        });
    }

    fn naive_contains(values: &[u8], p: &VincularPattern) -> bool {
        let r = p.len();
        let n = values.len();
        if r > n {
            return false;
        }
        // iterate over all r-subsets of positions
        let mut idx: Vec<usize> = (0..r).collect();
        loop {
            let adj_ok = p
                .adjacent_positions()
                .iter()
                .all(|&i| idx[i] == idx[i - 1] + 1);
            if adj_ok {
                let ok = (0..r).all(|a| {
                    (0..r).all(|b| values[idx[a]].cmp(&values[idx[b]]) == p.letters()[a].cmp(&p.letters()[b]))
                });
                if ok {
                    return true;
                }
            }
            // next combination
            let mut i = r;
            loop {
                if i == 0 {
                    return false;
                }
                i -= 1;
                if idx[i] != i + n - r {
                    idx[i] += 1;
                    for j in i + 1..r {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
}
