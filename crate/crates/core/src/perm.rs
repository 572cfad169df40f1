//! Permutations in one-line notation, classical pattern containment, the
//! dihedral symmetries and the peak/descent statistics.
//!
//! Positions and values are 1-indexed everywhere in the public API: the word
//! `5 4 7` has value 5 at position 1.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation {
    word: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    Reverse,
    Complement,
    ReverseComplement,
    Inverse,
}

impl FromStr for Symmetry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Symmetry> {
        match s {
            "reverse" | "r" => Ok(Symmetry::Reverse),
            "complement" | "c" => Ok(Symmetry::Complement),
            "reverse_complement" | "reverse-complement" | "rc" => Ok(Symmetry::ReverseComplement),
            "inverse" | "inv" => Ok(Symmetry::Inverse),
            other => Err(Error::Parse {
                input: other.to_string(),
                reason: "expected reverse|complement|reverse_complement|inverse".into(),
            }),
        }
    }
}

/// Peak, descent and ascent index sets of a permutation.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct StatReport {
    pub peaks: BTreeSet<usize>,
    pub descents: BTreeSet<usize>,
    pub ascents: BTreeSet<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Classification {
    pub involution: bool,
    pub alternating: bool,
    pub reverse_alternating: bool,
}

impl Permutation {
    pub fn new(word: Vec<u32>) -> Result<Permutation> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            let idx = v as usize;
            if idx == 0 || idx > n {
                return Err(Error::NotAPermutation(format!(
                    "value {v} outside 1..={n} in {word:?}"
                )));
            }
            if seen[idx] {
                return Err(Error::NotAPermutation(format!("value {v} repeated in {word:?}")));
            }
            seen[idx] = true;
        }
        Ok(Permutation { word })
    }

    /// Caller guarantees `word` is a rearrangement of `1..=n`.
    pub(crate) fn from_vec_unchecked(word: Vec<u32>) -> Permutation {
        debug_assert!(Permutation::new(word.clone()).is_ok(), "{word:?}");
        Permutation { word }
    }

    pub fn empty() -> Permutation {
        Permutation { word: Vec::new() }
    }

    /// `I_n = 1 2 … n`.
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            word: (1..=n as u32).collect(),
        }
    }

    /// `J_n = n … 2 1`.
    pub fn decreasing(n: usize) -> Permutation {
        Permutation {
            word: (1..=n as u32).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn into_word(self) -> Vec<u32> {
        self.word
    }

    /// Value at 1-indexed position `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.word[i - 1]
    }

    pub fn contains(&self, pattern: &Permutation) -> bool {
        contains_pattern(&self.word, &pattern.word)
    }

    pub fn avoids(&self, pattern: &Permutation) -> bool {
        !self.contains(pattern)
    }

    /// 1-indexed positions of the first occurrence of `pattern` in
    /// lexicographic order of position tuples.
    pub fn find_pattern(&self, pattern: &Permutation) -> Option<Vec<usize>> {
        find_occurrence(&self.word, &pattern.word).map(|v| v.into_iter().map(|p| p + 1).collect())
    }

    /// Error carrying a witness when `pattern` occurs.
    pub fn require_avoids(&self, pattern: &Permutation) -> Result<()> {
        match self.find_pattern(pattern) {
            None => Ok(()),
            Some(positions) => Err(Error::PatternPresent {
                pattern: pattern.clone(),
                positions,
            }),
        }
    }

    pub fn stats(&self) -> StatReport {
        let n = self.len();
        let mut report = StatReport::default();
        for i in 1..n {
            if self.word[i - 1] > self.word[i] {
                report.descents.insert(i);
            } else {
                report.ascents.insert(i);
            }
        }
        report.peaks = self.peaks();
        report
    }

    pub fn peaks(&self) -> BTreeSet<usize> {
        let w = &self.word;
        (2..w.len())
            .filter(|&i| w[i - 2] < w[i - 1] && w[i - 1] > w[i])
            .collect()
    }

    pub fn descents(&self) -> BTreeSet<usize> {
        descent_set(&self.word)
    }

    pub fn symmetry(&self, which: Symmetry) -> Permutation {
        match which {
            Symmetry::Reverse => self.reverse(),
            Symmetry::Complement => self.complement(),
            Symmetry::ReverseComplement => self.reverse_complement(),
            Symmetry::Inverse => self.inverse(),
        }
    }

    pub fn reverse(&self) -> Permutation {
        Permutation {
            word: self.word.iter().rev().copied().collect(),
        }
    }

    pub fn complement(&self) -> Permutation {
        let n1 = self.len() as u32 + 1;
        Permutation {
            word: self.word.iter().map(|&v| n1 - v).collect(),
        }
    }

    pub fn reverse_complement(&self) -> Permutation {
        let n1 = self.len() as u32 + 1;
        Permutation {
            word: self.word.iter().rev().map(|&v| n1 - v).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Permutation { word: inv }
    }

    /// `self ⊕ other`: `other` placed after `self` with values shifted up.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let shift = self.len() as u32;
        let mut word = self.word.clone();
        word.extend(other.word.iter().map(|&v| v + shift));
        Permutation { word }
    }

    pub fn is_involution(&self) -> bool {
        self.word
            .iter()
            .enumerate()
            .all(|(i, &v)| self.word[v as usize - 1] as usize == i + 1)
    }

    /// `π₁ < π₂ > π₃ < ⋯`.
    pub fn is_alternating(&self) -> bool {
        self.word
            .windows(2)
            .enumerate()
            .all(|(i, w)| (w[0] < w[1]) == (i % 2 == 0))
    }

    /// `π₁ > π₂ < π₃ > ⋯`.
    pub fn is_reverse_alternating(&self) -> bool {
        self.word
            .windows(2)
            .enumerate()
            .all(|(i, w)| (w[0] > w[1]) == (i % 2 == 0))
    }

    pub fn classify(&self) -> Classification {
        Classification {
            involution: self.is_involution(),
            alternating: self.is_alternating(),
            reverse_alternating: self.is_reverse_alternating(),
        }
    }
}

pub fn descent_set(word: &[u32]) -> BTreeSet<usize> {
    word.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i + 1)
        .collect()
}

/// The unique permutation order-isomorphic to a word of distinct entries.
pub fn standardize<T: Ord + Copy + Into<i64>>(word: &[T]) -> Result<Permutation> {
    let mut order: Vec<usize> = (0..word.len()).collect();
    order.sort_by_key(|&i| word[i]);
    for pair in order.windows(2) {
        if word[pair[0]] == word[pair[1]] {
            return Err(Error::DuplicateEntry(word[pair[0]].into()));
        }
    }
    let mut out = vec![0u32; word.len()];
    for (rank, &i) in order.iter().enumerate() {
        out[i] = rank as u32 + 1;
    }
    Ok(Permutation { word: out })
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(word: Vec<u32>) -> Result<Permutation> {
        Permutation::new(word)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Vec<u32> {
        p.word
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &v in &self.word {
            if v >= 10 {
                write!(f, "({v})")?;
            } else {
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// One-line notation. Single digits stand for themselves and multi-digit
/// values are parenthesised, as in `(10)1923…`. Comma- or space-separated
/// lists are accepted too. The empty string is the empty permutation.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(input: &str) -> Result<Permutation> {
        let s = input.trim();
        let parse_err = |reason: &str| Error::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let mut word = Vec::new();
        if s.contains(',') || s.contains(char::is_whitespace) {
            for tok in s.split(|c: char| c == ',' || c.is_whitespace()) {
                if tok.is_empty() {
                    continue;
                }
                word.push(tok.parse::<u32>().map_err(|_| parse_err("bad list entry"))?);
            }
        } else {
            let mut chars = s.chars();
            while let Some(c) = chars.next() {
                match c {
                    '0'..='9' => word.push(c as u32 - '0' as u32),
                    '(' => {
                        let mut digits = String::new();
                        loop {
                            match chars.next() {
                                Some(')') => break,
                                Some(d @ '0'..='9') => digits.push(d),
                                Some(_) => return Err(parse_err("non-digit inside parentheses")),
                                None => return Err(parse_err("unclosed parenthesis")),
                            }
                        }
                        if digits.is_empty() {
                            return Err(parse_err("empty parentheses"));
                        }
                        word.push(digits.parse::<u32>().map_err(|_| parse_err("value out of range"))?);
                    }
                    _ => return Err(parse_err("unexpected character")),
                }
            }
        }
        Permutation::new(word).map_err(|e| parse_err(&e.to_string()))
    }
}

/// Order-relation plan for a pattern: for each pattern index, the earlier
/// indices holding the next-smaller and next-larger values.
pub(crate) struct PatternPlan {
    lower: Vec<Option<usize>>,
    upper: Vec<Option<usize>>,
}

impl PatternPlan {
    pub(crate) fn new(pattern: &[u32]) -> PatternPlan {
        let m = pattern.len();
        let mut lower = vec![None; m];
        let mut upper = vec![None; m];
        for k in 0..m {
            for j in 0..k {
                if pattern[j] < pattern[k] {
                    if lower[k].is_none_or(|l: usize| pattern[l] < pattern[j]) {
                        lower[k] = Some(j);
                    }
                } else if upper[k].is_none_or(|u: usize| pattern[u] > pattern[j]) {
                    upper[k] = Some(j);
                }
            }
        }
        PatternPlan { lower, upper }
    }

    pub(crate) fn len(&self) -> usize {
        self.lower.len()
    }

    /// Whether value `v` may be placed at pattern index `k` given the
    /// values already chosen for indices `0..k`.
    #[inline]
    pub(crate) fn fits(&self, k: usize, v: u32, chosen_values: &[u32]) -> bool {
        if let Some(j) = self.lower[k] {
            if v <= chosen_values[j] {
                return false;
            }
        }
        if let Some(j) = self.upper[k] {
            if v >= chosen_values[j] {
                return false;
            }
        }
        true
    }
}

/// Backtracking subsequence search; returns 0-indexed positions.
pub(crate) fn find_occurrence(text: &[u32], pattern: &[u32]) -> Option<Vec<usize>> {
    let m = pattern.len();
    if m > text.len() {
        return None;
    }
    let plan = PatternPlan::new(pattern);
    let mut positions = Vec::with_capacity(m);
    let mut values = Vec::with_capacity(m);
    if search(text, &plan, 0, &mut positions, &mut values) {
        Some(positions)
    } else {
        None
    }
}

fn search(
    text: &[u32],
    plan: &PatternPlan,
    start: usize,
    positions: &mut Vec<usize>,
    values: &mut Vec<u32>,
) -> bool {
    let k = positions.len();
    let m = plan.len();
    if k == m {
        return true;
    }
    let last = text.len() - (m - k);
    for pos in start..=last {
        let v = text[pos];
        if !plan.fits(k, v, values) {
            continue;
        }
        positions.push(pos);
        values.push(v);
        if search(text, plan, pos + 1, positions, values) {
            return true;
        }
        positions.pop();
        values.pop();
    }
    false
}

pub fn contains_pattern(text: &[u32], pattern: &[u32]) -> bool {
    find_occurrence(text, pattern).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn containment_examples() {
        let pi = p("547983612");
        assert!(!pi.contains(&p("1234")));
        assert!(pi.contains(&p("4321")));
        assert!(p("1").contains(&p("1")));
        let q = p("45381627");
        assert_eq!(q.find_pattern(&p("123")), Some(vec![1, 2, 4]));
        assert!(pi.contains(&Permutation::empty()));
        assert!(!p("12").contains(&p("123")));
    }

    #[test]
    fn stats_examples() {
        let s = p("547983612").stats();
        assert_eq!(s.peaks, BTreeSet::from([4, 7]));
        assert_eq!(s.descents, BTreeSet::from([1, 4, 5, 7]));
        assert_eq!(s.ascents, BTreeSet::from([2, 3, 6, 8]));
        let id = Permutation::identity(6).stats();
        assert!(id.peaks.is_empty() && id.descents.is_empty());
    }

    #[test]
    fn symmetry_examples() {
        let pi = p("547983612");
        assert_eq!(pi.reverse_complement(), p("894721365"));
        assert_eq!(pi.reverse(), p("216389745"));
        assert_eq!(pi.complement(), p("563127498"));
        assert_eq!(p("2431").symmetry(Symmetry::Inverse), p("4132"));
        let involution = p("6482(10)19375");
        assert_eq!(involution.inverse(), involution);
    }

    #[test]
    fn direct_sums() {
        assert_eq!(p("123").direct_sum(&p("21")), p("12354"));
        assert_eq!(p("321").direct_sum(&p("1")), p("3214"));
        assert_eq!(p("312").direct_sum(&Permutation::empty()), p("312"));
    }

    #[test]
    fn standardization() {
        assert_eq!(standardize(&[5u32, 2, 9]).unwrap(), p("213"));
        assert_eq!(standardize(&[3u32, 1, 2]).unwrap(), p("312"));
        assert_eq!(standardize(&[10u32, 3, 7, 5]).unwrap(), p("4132"));
        assert_eq!(standardize(&[4u32, 4]), Err(Error::DuplicateEntry(4)));
    }

    #[test]
    fn classification() {
        let c = p("45381627").classify();
        assert!(c.alternating && !c.involution && !c.reverse_alternating);
        let c = p("6482(10)19375").classify();
        assert!(c.reverse_alternating && c.involution && !c.alternating);
        let c = p("1").classify();
        assert!(c.involution && c.alternating && c.reverse_alternating);
    }

    #[test]
    fn parsing() {
        assert_eq!(p("6482(10)19375").word(), &[6, 4, 8, 2, 10, 1, 9, 3, 7, 5]);
        assert!("(10)1923".parse::<Permutation>().is_err());
        assert_eq!(p("3, 1, 2"), p("312"));
        assert_eq!(p(""), Permutation::empty());
        assert!("12(3".parse::<Permutation>().is_err());
        assert!("1224".parse::<Permutation>().is_err());
        assert!("a".parse::<Permutation>().is_err());
        let long = Permutation::new((1..=12).rev().collect()).unwrap();
        assert_eq!(long.to_string().parse::<Permutation>().unwrap(), long);
    }

    #[test]
    fn json_is_a_plain_array() {
        let pi = p("547983612");
        assert_eq!(serde_json::to_string(&pi).unwrap(), "[5,4,7,9,8,3,6,1,2]");
        let back: Permutation = serde_json::from_str("[5,4,7,9,8,3,6,1,2]").unwrap();
        assert_eq!(back, pi);
        assert!(serde_json::from_str::<Permutation>("[1,1]").is_err());
    }
}
