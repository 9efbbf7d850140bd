//! Lattice paths that serve as bijection images: (multi-)marked Dyck paths
//! and slanted underdiagonal paths.
//!
//! Textual encoding (round-trips the usual figure notation): `E`, `N`, `N*`
//! (a mark of arity 2), `N*k` for arity `k >= 2`, and for slanted paths `D`
//! (= `D2`) or `Dk` for the step `(k-1, k)`.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// One step of a (multi-)marked Dyck path. `E = (1,0)`; `N` and `Marked(t)`
/// are both unit vertical steps `(0,1)`, the latter carrying an arity label
/// `t >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathStep {
    E,
    N,
    Marked(u32),
}

impl PathStep {
    pub fn is_vertical(self) -> bool {
        !matches!(self, PathStep::E)
    }

    pub fn is_marked(self) -> bool {
        matches!(self, PathStep::Marked(_))
    }
}

/// A multi-marked Dyck path: an underdiagonal path from the origin to a
/// point on the diagonal with steps `E` and unit vertical steps, some of
/// which are marked with an arity `t >= 2`. The size counts `E` steps plus
/// `t - 1` per marked step (equivalently `N` steps plus `t` per marked
/// step).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiMarkedDyckPath {
    steps: Vec<PathStep>,
}

impl MultiMarkedDyckPath {
    pub fn new(steps: Vec<PathStep>) -> Result<Self> {
        let (mut x, mut y) = (0usize, 0usize);
        for &s in &steps {
            match s {
                PathStep::E => x += 1,
                PathStep::N => y += 1,
                PathStep::Marked(t) => {
                    if t < 2 {
                        return Err(Error::Parse(format!("mark arity {t} below 2")));
                    }
                    y += 1;
                }
            }
            if y > x {
                return Err(Error::Parse("path rises above the diagonal".into()));
            }
        }
        if y != x {
            return Err(Error::Parse("path does not end on the diagonal".into()));
        }
        Ok(MultiMarkedDyckPath { steps })
    }

    pub fn steps(&self) -> &[PathStep] {
        &self.steps
    }

    pub fn count_e(&self) -> usize {
        self.steps.iter().filter(|s| !s.is_vertical()).count()
    }

    /// `#E + sum (t - 1)` over marked steps.
    pub fn size(&self) -> usize {
        self.steps
            .iter()
            .map(|s| match s {
                PathStep::E => 1,
                PathStep::N => 0,
                PathStep::Marked(t) => *t as usize - 1,
            })
            .sum()
    }

    /// True if the last maximal run of vertical steps contains no mark (and
    /// vacuously for the empty path).
    pub fn has_unmarked_tail(&self) -> bool {
        self.steps
            .iter()
            .rev()
            .take_while(|s| s.is_vertical())
            .all(|s| !s.is_marked())
    }

    /// Elbows (an `E` immediately followed by a vertical step) plus marked
    /// steps that are not part of an elbow. Under the path bijections this
    /// equals the `dist` statistic of the encoded inversion sequence.
    pub fn dist(&self) -> u32 {
        let mut total = 0;
        for (i, &s) in self.steps.iter().enumerate() {
            if s.is_vertical() {
                let after_e = i > 0 && self.steps[i - 1] == PathStep::E;
                if after_e || s.is_marked() {
                    total += 1;
                }
            }
        }
        total
    }
}

impl fmt::Display for MultiMarkedDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.steps {
            match s {
                PathStep::E => f.write_str("E")?,
                PathStep::N => f.write_str("N")?,
                PathStep::Marked(2) => f.write_str("N*")?,
                PathStep::Marked(t) => write!(f, "N*{t}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for MultiMarkedDyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MultiMarkedDyckPath::new(parse_marked_steps(s)?)
    }
}

fn parse_marked_steps(s: &str) -> Result<Vec<PathStep>> {
    let mut steps = Vec::new();
    let chars: Vec<char> = s.trim().chars().collect();
    let mut i = 0;
    while i < chars.len() {
        match chars[i] {
            'E' => {
                steps.push(PathStep::E);
                i += 1;
            }
            'N' => {
                i += 1;
                if i < chars.len() && chars[i] == '*' {
                    i += 1;
                    let start = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let arity = if start == i {
                        2
                    } else {
                        chars[start..i]
                            .iter()
                            .collect::<String>()
                            .parse::<u32>()
                            .map_err(|e| Error::Parse(e.to_string()))?
                    };
                    steps.push(PathStep::Marked(arity));
                } else {
                    steps.push(PathStep::N);
                }
            }
            c if c.is_whitespace() => i += 1,
            c => return Err(Error::Parse(format!("bad path character {c:?}"))),
        }
    }
    Ok(steps)
}

/// A marked Dyck path: all marks have arity exactly 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkedDyckPath {
    inner: MultiMarkedDyckPath,
}

impl MarkedDyckPath {
    pub fn new(steps: Vec<PathStep>) -> Result<Self> {
        let inner = MultiMarkedDyckPath::new(steps)?;
        if let Some(bad) = inner.steps.iter().find(|s| matches!(s, PathStep::Marked(t) if *t != 2)) {
            return Err(Error::Parse(format!("marked Dyck paths only carry arity-2 marks, got {bad:?}")));
        }
        Ok(MarkedDyckPath { inner })
    }

    pub fn steps(&self) -> &[PathStep] {
        self.inner.steps()
    }

    pub fn size(&self) -> usize {
        self.inner.size()
    }

    pub fn count_e(&self) -> usize {
        self.inner.count_e()
    }

    pub fn has_unmarked_tail(&self) -> bool {
        self.inner.has_unmarked_tail()
    }

    pub fn has_marks(&self) -> bool {
        self.inner.steps.iter().any(|s| s.is_marked())
    }

    pub fn dist(&self) -> u32 {
        self.inner.dist()
    }

    pub fn as_multi(&self) -> &MultiMarkedDyckPath {
        &self.inner
    }
}

impl From<MarkedDyckPath> for MultiMarkedDyckPath {
    fn from(p: MarkedDyckPath) -> Self {
        p.inner
    }
}

impl fmt::Display for MarkedDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.inner.fmt(f)
    }
}

impl FromStr for MarkedDyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MarkedDyckPath::new(parse_marked_steps(s)?)
    }
}

/// One step of a slanted path: `E = (1,0)`, `N = (0,1)` or `D(t) = (t-1, t)`
/// for `t >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SlantedStep {
    E,
    N,
    D(u32),
}

/// An underdiagonal path from the origin built from `E`, `N` and `D(t)`
/// steps; underdiagonality is checked at every step endpoint. Its extent is
/// its total horizontal displacement, so the path ends on the line
/// `x = extent`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SlantedPath {
    steps: Vec<SlantedStep>,
}

impl SlantedPath {
    pub fn new(steps: Vec<SlantedStep>) -> Result<Self> {
        let (mut x, mut y) = (0i64, 0i64);
        for &s in &steps {
            match s {
                SlantedStep::E => x += 1,
                SlantedStep::N => y += 1,
                SlantedStep::D(t) => {
                    if t < 2 {
                        return Err(Error::Parse(format!("slant arity {t} below 2")));
                    }
                    x += t as i64 - 1;
                    y += t as i64;
                }
            }
            if y > x {
                return Err(Error::Parse("slanted path rises above the diagonal".into()));
            }
        }
        Ok(SlantedPath { steps })
    }

    pub fn steps(&self) -> &[SlantedStep] {
        &self.steps
    }

    /// Total horizontal displacement.
    pub fn extent(&self) -> usize {
        self.steps
            .iter()
            .map(|s| match s {
                SlantedStep::E => 1,
                SlantedStep::N => 0,
                SlantedStep::D(t) => *t as usize - 1,
            })
            .sum()
    }

    /// True if every slant has arity 2.
    pub fn is_binary(&self) -> bool {
        self.steps.iter().all(|s| !matches!(s, SlantedStep::D(t) if *t != 2))
    }
}

impl fmt::Display for SlantedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.steps {
            match s {
                SlantedStep::E => f.write_str("E")?,
                SlantedStep::N => f.write_str("N")?,
                SlantedStep::D(2) => f.write_str("D")?,
                SlantedStep::D(t) => write!(f, "D{t}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for SlantedPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut steps = Vec::new();
        let chars: Vec<char> = s.trim().chars().collect();
        let mut i = 0;
        while i < chars.len() {
            match chars[i] {
                'E' => {
                    steps.push(SlantedStep::E);
                    i += 1;
                }
                'N' => {
                    steps.push(SlantedStep::N);
                    i += 1;
                }
                'D' => {
                    i += 1;
                    let start = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let arity = if start == i {
                        2
                    } else {
                        chars[start..i]
                            .iter()
                            .collect::<String>()
                            .parse::<u32>()
                            .map_err(|e| Error::Parse(e.to_string()))?
                    };
                    steps.push(SlantedStep::D(arity));
                }
                c if c.is_whitespace() => i += 1,
                c => return Err(Error::Parse(format!("bad path character {c:?}"))),
            }
        }
        SlantedPath::new(steps)
    }
}

/// All multi-marked Dyck paths of the given size; optionally only those with
/// an unmarked tail. Exhaustive search, intended for sizes up to ~10.
pub fn enumerate_multi_marked(size: usize, unmarked_tail_only: bool) -> Vec<MultiMarkedDyckPath> {
    let mut out = Vec::new();
    let mut steps = Vec::new();
    rec_marked(&mut steps, 0, 0, 0, size, false, unmarked_tail_only, &mut out);
    out
}

/// All marked Dyck paths (arity-2 marks) of the given size.
pub fn enumerate_marked(size: usize, unmarked_tail_only: bool) -> Vec<MarkedDyckPath> {
    let mut out = Vec::new();
    let mut steps = Vec::new();
    rec_marked(&mut steps, 0, 0, 0, size, true, unmarked_tail_only, &mut out);
    out.into_iter()
        .map(|p| MarkedDyckPath { inner: p })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn rec_marked(
    steps: &mut Vec<PathStep>,
    x: usize,
    y: usize,
    weight: usize,
    size: usize,
    binary_only: bool,
    unmarked_tail_only: bool,
    out: &mut Vec<MultiMarkedDyckPath>,
) {
    if x == y && weight == size {
        let path = MultiMarkedDyckPath { steps: steps.clone() };
        if !unmarked_tail_only || path.has_unmarked_tail() {
            out.push(path);
        }
        return; // any further step would overshoot the size or the diagonal
    }
    if weight < size {
        steps.push(PathStep::E);
        rec_marked(steps, x + 1, y, weight + 1, size, binary_only, unmarked_tail_only, out);
        steps.pop();
    }
    if y < x {
        steps.push(PathStep::N);
        rec_marked(steps, x, y + 1, weight, size, binary_only, unmarked_tail_only, out);
        steps.pop();
        let max_arity = if binary_only { 2 } else { size + 1 - weight };
        for t in 2..=max_arity.max(1) {
            if weight + (t - 1) > size {
                break;
            }
            steps.push(PathStep::Marked(t as u32));
            rec_marked(steps, x, y + 1, weight + t - 1, size, binary_only, unmarked_tail_only, out);
            steps.pop();
        }
    }
}

/// All slanted paths of the given extent; `binary_only` restricts slants to
/// arity 2.
pub fn enumerate_slanted(extent: usize, binary_only: bool) -> Vec<SlantedPath> {
    let mut out = Vec::new();
    let mut steps = Vec::new();
    rec_slanted(&mut steps, 0, 0, extent, binary_only, &mut out);
    out
}

fn rec_slanted(
    steps: &mut Vec<SlantedStep>,
    x: usize,
    y: usize,
    extent: usize,
    binary_only: bool,
    out: &mut Vec<SlantedPath>,
) {
    if x == extent {
        out.push(SlantedPath { steps: steps.clone() });
    }
    if x < extent {
        steps.push(SlantedStep::E);
        rec_slanted(steps, x + 1, y, extent, binary_only, out);
        steps.pop();
    }
    if y < x {
        steps.push(SlantedStep::N);
        rec_slanted(steps, x, y + 1, extent, binary_only, out);
        steps.pop();
        let max_arity = if binary_only { 2usize } else { extent + 1 - x };
        for t in 2..=max_arity.max(1) {
            if x + t - 1 > extent {
                break;
            }
            steps.push(SlantedStep::D(t as u32));
            rec_slanted(steps, x + t - 1, y + t, extent, binary_only, out);
            steps.pop();
        }
    }
}

/// All plain Dyck paths of semilength `n`, as mark-free marked Dyck paths.
pub fn enumerate_dyck(n: usize) -> Vec<MarkedDyckPath> {
    enumerate_marked(n, false)
        .into_iter()
        .filter(|p| !p.has_marks())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["", "EN", "EN*EN", "ENEEN*N*ENEEENNN", "EEN*3NEN"] {
            let p: MultiMarkedDyckPath = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
        for s in ["", "ED", "ENEEDDENEE", "ENEED4D2ENED3"] {
            let p: SlantedPath = s.parse().unwrap();
            let back: SlantedPath = p.to_string().parse().unwrap();
            assert_eq!(p, back);
        }
        // D2 displays as bare D
        assert_eq!("ED2".parse::<SlantedPath>().unwrap().to_string(), "ED");
    }

    #[test]
    fn validity_checks() {
        assert!("N".parse::<MultiMarkedDyckPath>().is_err()); // above diagonal
        assert!("E".parse::<MultiMarkedDyckPath>().is_err()); // off diagonal
        assert!("EN*1".parse::<MultiMarkedDyckPath>().is_err()); // arity 1
        assert!("EN*3".parse::<MarkedDyckPath>().is_err()); // arity 3 not binary
        let p: MultiMarkedDyckPath = "EN*3".parse().unwrap();
        assert_eq!(p.size(), 3);
        assert!(!p.has_unmarked_tail());
    }

    #[test]
    fn sizes_and_tails() {
        let p: MultiMarkedDyckPath = "ENEEN*N*ENEEENNN".parse().unwrap();
        assert_eq!(p.size(), 9);
        assert_eq!(p.count_e(), 7);
        assert!(p.has_unmarked_tail());
        assert_eq!(p.dist(), 5);

        let marked_tail: MultiMarkedDyckPath = "ENEN*".parse().unwrap();
        assert_eq!(marked_tail.size(), 3);
        assert!(!marked_tail.has_unmarked_tail());

        let multi: MultiMarkedDyckPath = "ENEEN*4N*2ENEN*3EN".parse().unwrap();
        assert_eq!(multi.size(), 12);
        assert!(multi.has_unmarked_tail());
    }

    #[test]
    fn dist_boundary_examples() {
        let square: MultiMarkedDyckPath = "EEEENNNN".parse().unwrap();
        assert_eq!(square.dist(), 1);
        let staircase: MultiMarkedDyckPath = "ENENENEN".parse().unwrap();
        assert_eq!(staircase.dist(), 4);
    }

    #[test]
    fn enumeration_counts_match_generating_functions() {
        // marked Dyck paths by size: 1, 1, 3, 9, 31
        let sizes: Vec<usize> = (0..=4).map(|n| enumerate_marked(n, false).len()).collect();
        assert_eq!(sizes, [1, 1, 3, 9, 31]);
        // unmarked-tail counts: 1, 1, 2, 6, 20, 72
        let tails: Vec<usize> = (0..=5).map(|n| enumerate_marked(n, true).len()).collect();
        assert_eq!(tails, [1, 1, 2, 6, 20, 72]);
        // Dyck paths: Catalan
        let dyck: Vec<usize> = (0..=5).map(|n| enumerate_dyck(n).len()).collect();
        assert_eq!(dyck, [1, 1, 2, 5, 14, 42]);
        // binary slanted paths of extent n: 1, 2, 6, 20, 72
        let slanted: Vec<usize> = (0..=4).map(|n| enumerate_slanted(n, true).len()).collect();
        assert_eq!(slanted, [1, 2, 6, 20, 72]);
        // multi-marked with unmarked tail: matches |I_n(>,<,-)| = 1, 1, 2, 6, 21, 79
        let multi: Vec<usize> = (0..=5).map(|n| enumerate_multi_marked(n, true).len()).collect();
        assert_eq!(multi, [1, 1, 2, 6, 21, 79]);
        // multi slanted paths of extent n: 1, 2, 6, 21, 79 shifted: extent n counts R~'_n
        let ms: Vec<usize> = (0..=3).map(|n| enumerate_slanted(n, false).len()).collect();
        assert_eq!(ms, [1, 2, 6, 21]);
    }
}
