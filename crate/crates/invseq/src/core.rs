//! Inversion sequences, relation symbols, patterns and occurrence detection.
//!
//! Everything here is a pure function over immutable values. Positions in
//! occurrence sets are 1-based, matching the usual convention for inversion
//! sequences; entry storage is 0-based and hidden behind accessors.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// One of the binary relations `<=, >=, <, >, =, !=` or the trivial
/// relation `-` that holds for every pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelationSymbol {
    Le,
    Ge,
    Lt,
    Gt,
    Eq,
    Ne,
    Dash,
}

impl RelationSymbol {
    /// The six non-trivial symbols, in display order.
    pub const PROPER: [RelationSymbol; 6] = [
        RelationSymbol::Le,
        RelationSymbol::Ge,
        RelationSymbol::Lt,
        RelationSymbol::Gt,
        RelationSymbol::Eq,
        RelationSymbol::Ne,
    ];

    pub fn token(self) -> &'static str {
        match self {
            RelationSymbol::Le => "<=",
            RelationSymbol::Ge => ">=",
            RelationSymbol::Lt => "<",
            RelationSymbol::Gt => ">",
            RelationSymbol::Eq => "=",
            RelationSymbol::Ne => "!=",
            RelationSymbol::Dash => "-",
        }
    }

    /// Bitmask over the three comparison outcomes (bit 0 = `<`, bit 1 = `=`,
    /// bit 2 = `>`) accepted by this relation.
    #[inline]
    pub(crate) fn cmp_mask(self) -> u8 {
        match self {
            RelationSymbol::Le => 0b011,
            RelationSymbol::Ge => 0b110,
            RelationSymbol::Lt => 0b001,
            RelationSymbol::Gt => 0b100,
            RelationSymbol::Eq => 0b010,
            RelationSymbol::Ne => 0b101,
            RelationSymbol::Dash => 0b111,
        }
    }
}

impl fmt::Display for RelationSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for RelationSymbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "<=" => RelationSymbol::Le,
            ">=" => RelationSymbol::Ge,
            "<" => RelationSymbol::Lt,
            ">" => RelationSymbol::Gt,
            "=" => RelationSymbol::Eq,
            "!=" => RelationSymbol::Ne,
            "-" => RelationSymbol::Dash,
            _ => return Err(Error::Parse(format!("unknown relation token {s:?}"))),
        })
    }
}

/// Comparison code of a pair of integers: 0 for `<`, 1 for `=`, 2 for `>`.
#[inline]
pub(crate) fn cmp_code(a: u32, b: u32) -> u8 {
    use std::cmp::Ordering::*;
    match a.cmp(&b) {
        Less => 0,
        Equal => 1,
        Greater => 2,
    }
}

/// Does `a r b` hold? The trivial relation `-` relates every pair.
#[inline]
pub fn relation_holds(r: RelationSymbol, a: i64, b: i64) -> bool {
    match r {
        RelationSymbol::Le => a <= b,
        RelationSymbol::Ge => a >= b,
        RelationSymbol::Lt => a < b,
        RelationSymbol::Gt => a > b,
        RelationSymbol::Eq => a == b,
        RelationSymbol::Ne => a != b,
        RelationSymbol::Dash => true,
    }
}

/// A consecutive pattern of relations `(R1, R2)`: an inversion sequence
/// contains it if `e_i R1 e_{i+1}` and `e_{i+1} R2 e_{i+2}` for some `i`.
/// The trivial relation is excluded, so there are exactly 36 patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RelationPattern {
    r1: RelationSymbol,
    r2: RelationSymbol,
}

impl RelationPattern {
    pub fn new(r1: RelationSymbol, r2: RelationSymbol) -> Result<Self> {
        if r1 == RelationSymbol::Dash || r2 == RelationSymbol::Dash {
            return Err(Error::DashNotAllowed);
        }
        Ok(RelationPattern { r1, r2 })
    }

    pub fn r1(self) -> RelationSymbol {
        self.r1
    }

    pub fn r2(self) -> RelationSymbol {
        self.r2
    }

    /// All 36 patterns, in a fixed deterministic order.
    pub fn all() -> Vec<RelationPattern> {
        let mut out = Vec::with_capacity(36);
        for r1 in RelationSymbol::PROPER {
            for r2 in RelationSymbol::PROPER {
                out.push(RelationPattern { r1, r2 });
            }
        }
        out
    }

    /// 9-bit occurrence table indexed by `c1 * 3 + c2` where `c1`, `c2` are
    /// the comparison codes of the two adjacent pairs of a window.
    #[inline]
    pub(crate) fn window_table(self) -> u16 {
        let m1 = self.r1.cmp_mask();
        let m2 = self.r2.cmp_mask();
        let mut table = 0u16;
        for c1 in 0..3u8 {
            for c2 in 0..3u8 {
                if (m1 >> c1) & 1 == 1 && (m2 >> c2) & 1 == 1 {
                    table |= 1 << (c1 * 3 + c2);
                }
            }
        }
        table
    }
}

impl fmt::Display for RelationPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.r1, self.r2)
    }
}

impl FromStr for RelationPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 2 {
            return Err(Error::Parse(format!("expected \"R1,R2\", got {s:?}")));
        }
        RelationPattern::new(parts[0].parse()?, parts[1].parse()?)
    }
}

/// A classical (non-consecutive) pattern of relations `(R1, R2, R3)`: an
/// inversion sequence contains it if some `i < j < k` satisfies
/// `e_i R1 e_j`, `e_j R2 e_k` and `e_i R3 e_k`. `-` is allowed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TriplePattern {
    pub r1: RelationSymbol,
    pub r2: RelationSymbol,
    pub r3: RelationSymbol,
}

impl TriplePattern {
    pub fn new(r1: RelationSymbol, r2: RelationSymbol, r3: RelationSymbol) -> Self {
        TriplePattern { r1, r2, r3 }
    }
}

impl fmt::Display for TriplePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.r1, self.r2, self.r3)
    }
}

impl FromStr for TriplePattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!("expected \"R1,R2,R3\", got {s:?}")));
        }
        Ok(TriplePattern::new(parts[0].parse()?, parts[1].parse()?, parts[2].parse()?))
    }
}

/// A reduced word over `{0, …, r-1}`: any value `j > 0` appearing in it is
/// preceded (somewhere) by `j - 1`. Used for consecutive word patterns such
/// as 000, 012, 100, 110, 210.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WordPattern {
    letters: Vec<u32>,
}

impl WordPattern {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if reduction(&letters) != letters {
            return Err(Error::NotReduced(letters));
        }
        Ok(WordPattern { letters })
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The 13 reduced words of length 3.
    pub fn all_of_length_3() -> Vec<WordPattern> {
        let mut out = Vec::new();
        for a in 0..3u32 {
            for b in 0..3u32 {
                for c in 0..3u32 {
                    let w = vec![a, b, c];
                    if reduction(&w) == w {
                        out.push(WordPattern { letters: w });
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for WordPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&encode_word(&self.letters))
    }
}

impl FromStr for WordPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        WordPattern::new(parse_word(s)?)
    }
}

/// Replace all occurrences of the i-th smallest entry of `word` with `i - 1`.
/// The reduction of the empty word is the empty word.
pub fn reduction(word: &[u32]) -> Vec<u32> {
    let mut values: Vec<u32> = word.to_vec();
    values.sort_unstable();
    values.dedup();
    word.iter()
        .map(|v| values.binary_search(v).expect("value present") as u32)
        .collect()
}

/// An inversion sequence: entries `e_1 … e_n` with `0 <= e_i < i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InversionSequence {
    entries: Vec<u32>,
}

impl InversionSequence {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        for (idx, &v) in entries.iter().enumerate() {
            if v as usize > idx {
                return Err(Error::InvalidEntry { position: idx + 1, value: v });
            }
        }
        Ok(InversionSequence { entries })
    }

    pub fn empty() -> Self {
        InversionSequence { entries: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Entry at 1-based position `i`.
    pub fn entry(&self, i: usize) -> u32 {
        self.entries[i - 1]
    }

    /// 1-based positions `i` with `e_i R1 e_{i+1}` and `e_{i+1} R2 e_{i+2}`.
    pub fn occurrence_set(&self, p: RelationPattern) -> Vec<usize> {
        occurrences_in(&self.entries, p)
    }

    pub fn avoids(&self, p: RelationPattern) -> bool {
        avoids_in(&self.entries, p)
    }

    /// True iff no window of length `|p|` has reduction `p`.
    pub fn avoids_word(&self, p: &WordPattern) -> bool {
        word_occurrences_in(&self.entries, p).is_empty()
    }

    /// 1-based positions of windows whose reduction is `p`.
    pub fn word_occurrence_set(&self, p: &WordPattern) -> Vec<usize> {
        word_occurrences_in(&self.entries, p)
    }

    /// True iff no `i < j < k` (not necessarily adjacent) satisfies all of
    /// `e_i R1 e_j`, `e_j R2 e_k`, `e_i R3 e_k`.
    pub fn avoids_triple(&self, t: TriplePattern) -> bool {
        avoids_triple_in(&self.entries, t)
    }

    /// The complement `e^C_i = i - 1 - e_i`, an involution on inversion
    /// sequences.
    pub fn complement(&self) -> InversionSequence {
        let entries = self
            .entries
            .iter()
            .enumerate()
            .map(|(idx, &v)| idx as u32 - v)
            .collect();
        InversionSequence { entries }
    }

    /// Number of distinct entry values; 0 for the empty sequence.
    pub fn dist(&self) -> u32 {
        dist_of(&self.entries)
    }
}

impl fmt::Display for InversionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&encode_word(&self.entries))
    }
}

impl FromStr for InversionSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        InversionSequence::new(parse_word(s)?)
    }
}

/// Textual encoding shared by sequences and words: concatenated digits when
/// all entries are below 10, comma-separated integers otherwise.
pub(crate) fn encode_word(word: &[u32]) -> String {
    if word.iter().all(|&v| v < 10) {
        word.iter().map(|v| char::from(b'0' + *v as u8)).collect()
    } else {
        word.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    }
}

pub(crate) fn parse_word(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if s.contains(',') {
        s.split(',')
            .map(|part| {
                part.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad entry {part:?}: {e}")))
            })
            .collect()
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| Error::Parse(format!("bad digit {c:?} in {s:?}")))
            })
            .collect()
    }
}

// Slice-level checks. These work on arbitrary integer words; the
// `InversionSequence` methods defer to them, and the enumeration code uses
// them on partial sequences.

pub(crate) fn occurrences_in(entries: &[u32], p: RelationPattern) -> Vec<usize> {
    let table = p.window_table();
    let mut out = Vec::new();
    for i in 0..entries.len().saturating_sub(2) {
        let idx = cmp_code(entries[i], entries[i + 1]) * 3 + cmp_code(entries[i + 1], entries[i + 2]);
        if (table >> idx) & 1 == 1 {
            out.push(i + 1);
        }
    }
    out
}

pub(crate) fn avoids_in(entries: &[u32], p: RelationPattern) -> bool {
    let table = p.window_table();
    for i in 0..entries.len().saturating_sub(2) {
        let idx = cmp_code(entries[i], entries[i + 1]) * 3 + cmp_code(entries[i + 1], entries[i + 2]);
        if (table >> idx) & 1 == 1 {
            return false;
        }
    }
    true
}

pub(crate) fn word_occurrences_in(entries: &[u32], p: &WordPattern) -> Vec<usize> {
    let r = p.len();
    let mut out = Vec::new();
    if r == 0 || entries.len() < r {
        return out;
    }
    for i in 0..=entries.len() - r {
        if reduction(&entries[i..i + r]) == p.letters() {
            out.push(i + 1);
        }
    }
    out
}

pub(crate) fn avoids_triple_in(entries: &[u32], t: TriplePattern) -> bool {
    let n = entries.len();
    for k in 2..n {
        if !extension_avoids_triple(&entries[..k], entries[k], t) {
            return false;
        }
    }
    true
}

/// Check only the triples `(i, j, k)` whose last index is the new entry;
/// prefixes of avoiders are avoiders, so this is the whole incremental test.
#[inline]
pub(crate) fn extension_avoids_triple(prefix: &[u32], new: u32, t: TriplePattern) -> bool {
    let m1 = t.r1.cmp_mask();
    let m2 = t.r2.cmp_mask();
    let m3 = t.r3.cmp_mask();
    for j in 1..prefix.len() {
        let ej = prefix[j];
        if (m2 >> cmp_code(ej, new)) & 1 == 0 {
            continue;
        }
        for &ei in &prefix[..j] {
            if (m1 >> cmp_code(ei, ej)) & 1 == 1 && (m3 >> cmp_code(ei, new)) & 1 == 1 {
                return false;
            }
        }
    }
    true
}

pub(crate) fn dist_of(entries: &[u32]) -> u32 {
    let mut seen = 0u64;
    for &v in entries {
        seen |= 1 << v;
    }
    seen.count_ones()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq(s: &str) -> InversionSequence {
        s.parse().unwrap()
    }

    fn pat(s: &str) -> RelationPattern {
        s.parse().unwrap()
    }

    fn word(s: &str) -> WordPattern {
        s.parse().unwrap()
    }

    #[test]
    fn reduction_examples() {
        assert_eq!(reduction(&[4, 2, 4]), vec![1, 0, 1]);
        assert_eq!(reduction(&[0, 0, 0]), vec![0, 0, 0]);
        // rank each distinct value of 3,1,4,1,5 by sorting: 1->0, 3->1, 4->2, 5->3
        assert_eq!(reduction(&[3, 1, 4, 1, 5]), vec![1, 0, 2, 0, 3]);
        assert_eq!(reduction(&[]), Vec::<u32>::new());
    }

    #[test]
    fn relation_holds_examples() {
        assert!(relation_holds(RelationSymbol::Ge, 2, 2));
        assert!(relation_holds(RelationSymbol::Dash, 7, 0));
        assert!(!relation_holds(RelationSymbol::Ne, 3, 3));
    }

    #[test]
    fn validity() {
        assert!(InversionSequence::new(vec![0, 1, 2, 3]).is_ok());
        assert!(InversionSequence::new(vec![0, 0, 3]).is_err());
        assert!(InversionSequence::new(vec![1]).is_err());
        assert!("0014224".parse::<InversionSequence>().is_err()); // e_4 = 4 > 3
        assert_eq!(seq("").len(), 0);
    }

    #[test]
    fn occurrence_set_examples() {
        let e = seq("002241250");
        assert_eq!(e.occurrence_set(pat(">,<")), vec![5]);
        assert_eq!(e.occurrence_set(pat("=,>")), Vec::<usize>::new());
        assert!(e.avoids(pat("=,>")));
        let e = seq("0100");
        assert_eq!(e.occurrence_set(pat("!=,>=")), vec![1, 2]);
        assert_eq!(e.occurrence_set(pat("<,>=")), vec![1]);
    }

    #[test]
    fn avoids_short_sequences() {
        for p in RelationPattern::all() {
            assert!(seq("0").avoids(p));
            assert!(seq("01").avoids(p));
            assert!(InversionSequence::empty().avoids(p));
        }
    }

    #[test]
    fn avoids_scan_on_plain_words() {
        // 0014224 is not a valid inversion sequence (e_4 = 4), but the window
        // scan is defined on any word: 4,2,2 at position 4 realizes (>,=).
        assert_eq!(occurrences_in(&[0, 0, 1, 4, 2, 2, 4], pat(">,=")), vec![4]);
        assert!(!avoids_in(&[0, 0, 1, 4, 2, 2, 4], pat(">,=")));
    }

    #[test]
    fn word_pattern_examples() {
        let e = seq("002241250");
        assert!(e.avoids_word(&word("210")));
        assert!(!e.avoids_word(&word("201")));
        assert_eq!(e.word_occurrence_set(&word("201")), vec![5]);
        assert!(seq("00").avoids_word(&word("000")));
        assert!(WordPattern::new(vec![0, 2]).is_err());
        assert_eq!(WordPattern::all_of_length_3().len(), 13);
    }

    #[test]
    fn triple_pattern_examples() {
        let t: TriplePattern = ">=,<=,<=".parse().unwrap();
        assert!(!avoids_triple_in(&[0, 0, 1, 4, 2, 2, 4], t));
        assert!(seq("0").avoids_triple(t));
        assert!(seq("012").avoids_triple(">,<=,-".parse().unwrap()));
        // Non-adjacent occurrence: 01001 contains (>,<,-) via (e_2,e_3,e_5)
        // but has no adjacent window realizing it.
        let e = seq("01001");
        assert!(!e.avoids_triple(">,<,-".parse().unwrap()));
        assert!(e.avoids(pat(">,<")));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(seq("0").complement(), seq("0"));
        assert_eq!(seq("012").complement(), seq("000"));
        // entrywise i-1-e_i
        assert_eq!(seq("002241250").complement(), seq("010104428"));
    }

    #[test]
    fn dist_examples() {
        assert_eq!(seq("011344421").dist(), 5);
        assert_eq!(seq("00000").dist(), 1);
        assert_eq!(seq("01032").dist(), 4);
        assert_eq!(InversionSequence::empty().dist(), 0);
    }

    #[test]
    fn pattern_count_and_parse() {
        assert_eq!(RelationPattern::all().len(), 36);
        assert!(RelationPattern::new(RelationSymbol::Dash, RelationSymbol::Le).is_err());
        assert!("-,<".parse::<RelationPattern>().is_err());
        let p = pat(">=,!=");
        assert_eq!(p.to_string(), ">=,!=");
        assert_eq!(">,<=,-".parse::<TriplePattern>().unwrap().to_string(), ">,<=,-");
    }

    #[test]
    fn encoding_round_trip() {
        let e = InversionSequence::new(vec![0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10]).unwrap();
        assert_eq!(e.to_string(), "0,1,2,3,4,5,6,7,8,9,10");
        assert_eq!(e.to_string().parse::<InversionSequence>().unwrap(), e);
        assert_eq!(seq("002241250").to_string(), "002241250");
    }

    /// Occurrences of (R1,R2) are exactly the windows realizing one of the
    /// length-3 reduced words compatible with (R1,R2).
    #[test]
    fn occurrence_set_is_union_of_word_occurrences() {
        let words = WordPattern::all_of_length_3();
        for e in crate::enumerate::enumerate_all(6).unwrap() {
            for p in RelationPattern::all() {
                let mut union: Vec<usize> = words
                    .iter()
                    .filter(|w| {
                        relation_holds(p.r1(), w.letters()[0] as i64, w.letters()[1] as i64)
                            && relation_holds(p.r2(), w.letters()[1] as i64, w.letters()[2] as i64)
                    })
                    .flat_map(|w| e.word_occurrence_set(w))
                    .collect();
                union.sort_unstable();
                assert_eq!(e.occurrence_set(p), union, "e={e} p={p}");
            }
        }
    }

    #[test]
    fn word_equivalents_of_monotone_patterns() {
        let cases = [("<,<", "012"), ("=,=", "000"), (">,>", "210")];
        for e in crate::enumerate::enumerate_all(6).unwrap() {
            for (p, w) in cases {
                assert_eq!(e.avoids(pat(p)), e.avoids_word(&word(w)), "e={e}");
            }
            // I_n(<,>=) = I_n(!=,>=) as sets
            assert_eq!(e.avoids(pat("<,>=")), e.avoids(pat("!=,>=")), "e={e}");
        }
    }

    #[test]
    fn complement_exchanges_patterns() {
        for e in crate::enumerate::enumerate_all(6).unwrap() {
            let c = e.complement();
            assert_eq!(e.occurrence_set(pat(">=,<")), c.occurrence_set(pat("<,>=")), "e={e}");
            assert_eq!(e.occurrence_set(pat(">=,>=")), c.occurrence_set(pat("<,<")), "e={e}");
        }
    }

    proptest! {
        #[test]
        fn complement_is_an_involution(raw in proptest::collection::vec(0u32..64, 0..20)) {
            let entries: Vec<u32> = raw
                .iter()
                .enumerate()
                .map(|(idx, &v)| v.min(idx as u32))
                .collect();
            let e = InversionSequence::new(entries).unwrap();
            prop_assert_eq!(e.complement().complement(), e);
        }

        #[test]
        fn reduction_is_idempotent(word in proptest::collection::vec(0u32..12, 0..12)) {
            let r = reduction(&word);
            prop_assert_eq!(reduction(&r), r);
        }

        #[test]
        fn display_parse_round_trip(raw in proptest::collection::vec(0u32..64, 0..30)) {
            let entries: Vec<u32> = raw
                .iter()
                .enumerate()
                .map(|(idx, &v)| v.min(idx as u32))
                .collect();
            let e = InversionSequence::new(entries).unwrap();
            prop_assert_eq!(e.to_string().parse::<InversionSequence>().unwrap(), e);
        }
    }
}
