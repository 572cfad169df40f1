//! Young diagrams in English notation, transversals (01-fillings with one 1
//! per row and column), filling pattern containment, and the map `χ` to
//! matchings.
//!
//! Squares are addressed as `(column, row)`, both 1-indexed, with rows
//! counted from the top. A transversal stores `t_i`, the row holding the 1 of
//! column `i`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matchings::Matching;
use crate::perm::{Permutation, PatternPlan};
use crate::step::{Step, StepWord};
use crate::tableaux::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct YoungDiagram {
    rows: Vec<u32>,
}

impl YoungDiagram {
    pub fn new(row_lengths: Vec<u32>) -> Result<YoungDiagram> {
        Partition::new(row_lengths.clone()).map_err(|e| Error::InvalidFilling(e.to_string()))?;
        Ok(YoungDiagram { rows: row_lengths })
    }

    pub fn square(n: usize) -> YoungDiagram {
        YoungDiagram {
            rows: vec![n as u32; n],
        }
    }

    pub fn row_lengths(&self) -> &[u32] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.rows.first().copied().unwrap_or(0) as usize
    }

    /// `c_i` for `i = 1..=num_cols`, returned 0-indexed.
    pub fn column_heights(&self) -> Vec<u32> {
        (1..=self.num_cols() as u32)
            .map(|c| self.rows.iter().filter(|&&r| r >= c).count() as u32)
            .collect()
    }

    pub fn conjugate(&self) -> YoungDiagram {
        YoungDiagram {
            rows: self.column_heights(),
        }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.column_heights() == self.rows
    }

    /// Whether square `(col, row)` lies inside the diagram.
    #[inline]
    pub fn contains(&self, col: u32, row: u32) -> bool {
        col >= 1 && row >= 1 && (row as usize) <= self.rows.len() && self.rows[row as usize - 1] >= col
    }

    /// Right boundary traced from the bottom-left corner: `U` per east step,
    /// `D` per north step.
    pub fn type_word(&self) -> StepWord {
        let mut word = Vec::with_capacity(self.num_cols() + self.num_rows());
        let mut width = 0;
        for &len in self.rows.iter().rev() {
            word.extend(std::iter::repeat_n(Step::U, (len - width) as usize));
            width = len;
            word.push(Step::D);
        }
        StepWord(word)
    }

    /// Inverse of [`YoungDiagram::type_word`]. Row `j` from the top has as
    /// many cells as there are `U`s before the `j`-th `D` from the right.
    pub fn from_type_word(word: &StepWord) -> Result<YoungDiagram> {
        if word.steps().first() == Some(&Step::D) {
            return Err(Error::InvalidFilling("type word starts with D (empty row)".into()));
        }
        if word.steps().last() == Some(&Step::U) {
            return Err(Error::InvalidFilling("type word ends with U (empty column)".into()));
        }
        let mut ups = 0;
        let mut rows = Vec::new();
        for s in word.steps() {
            match s {
                Step::U => ups += 1,
                Step::D => rows.push(ups),
            }
        }
        rows.reverse();
        Ok(YoungDiagram { rows })
    }

    /// All self-conjugate diagrams with at most `max_cols` columns, including
    /// the empty one, ordered by size then lexicographically.
    pub fn self_conjugate_up_to(max_cols: usize) -> Vec<YoungDiagram> {
        let mut out = Vec::new();
        let mut rows = Vec::new();
        partitions_in_box(max_cols as u32, max_cols, &mut rows, &mut out);
        out.retain(YoungDiagram::is_self_conjugate);
        out.sort_by(|a, b| (a.rows.iter().sum::<u32>(), &a.rows).cmp(&(b.rows.iter().sum::<u32>(), &b.rows)));
        out
    }
}

fn partitions_in_box(max_part: u32, rows_left: usize, rows: &mut Vec<u32>, out: &mut Vec<YoungDiagram>) {
    out.push(YoungDiagram { rows: rows.clone() });
    if rows_left == 0 {
        return;
    }
    for part in 1..=max_part {
        rows.push(part);
        partitions_in_box(part, rows_left - 1, rows, out);
        rows.pop();
    }
}

impl TryFrom<Vec<u32>> for YoungDiagram {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<YoungDiagram> {
        YoungDiagram::new(v)
    }
}

impl From<YoungDiagram> for Vec<u32> {
    fn from(d: YoungDiagram) -> Vec<u32> {
        d.rows
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TransversalJson", into = "TransversalJson")]
pub struct Transversal {
    diagram: YoungDiagram,
    t: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct TransversalJson {
    rows: Vec<u32>,
    ones: Vec<[u32; 2]>,
}

impl TryFrom<TransversalJson> for Transversal {
    type Error = Error;
    fn try_from(raw: TransversalJson) -> Result<Transversal> {
        let diagram = YoungDiagram::new(raw.rows)?;
        let k = diagram.num_cols();
        let mut t = vec![0; k];
        for [c, r] in raw.ones {
            if c == 0 || c as usize > k {
                return Err(Error::InvalidFilling(format!("column {c} outside 1..={k}")));
            }
            if t[c as usize - 1] != 0 {
                return Err(Error::InvalidFilling(format!("column {c} holds two 1s")));
            }
            t[c as usize - 1] = r;
        }
        Transversal::new(diagram, t)
    }
}

impl From<Transversal> for TransversalJson {
    fn from(tr: Transversal) -> TransversalJson {
        TransversalJson {
            ones: tr.t.iter().enumerate().map(|(i, &r)| [i as u32 + 1, r]).collect(),
            rows: tr.diagram.rows,
        }
    }
}

impl Transversal {
    pub fn new(diagram: YoungDiagram, t: Vec<u32>) -> Result<Transversal> {
        let k = diagram.num_cols();
        if diagram.num_rows() != k || t.len() != k {
            return Err(Error::InvalidFilling(format!(
                "{} rows, {} columns and {} ones cannot form a transversal",
                diagram.num_rows(),
                k,
                t.len()
            )));
        }
        let mut used = vec![false; k + 1];
        for (i, &r) in t.iter().enumerate() {
            if r == 0 || r as usize > k || used[r as usize] {
                return Err(Error::InvalidFilling(format!("row {r} used twice or out of range")));
            }
            used[r as usize] = true;
            if !diagram.contains(i as u32 + 1, r) {
                return Err(Error::InvalidFilling(format!("square ({}, {r}) lies outside the diagram", i + 1)));
            }
        }
        Ok(Transversal { diagram, t })
    }

    pub(crate) fn new_unchecked(diagram: YoungDiagram, t: Vec<u32>) -> Transversal {
        debug_assert!(Transversal::new(diagram.clone(), t.clone()).is_ok());
        Transversal { diagram, t }
    }

    /// The permutation matrix of `p` on the `n × n` square.
    pub fn from_permutation(p: &Permutation) -> Transversal {
        Transversal {
            diagram: YoungDiagram::square(p.len()),
            t: p.word().to_vec(),
        }
    }

    pub fn diagram(&self) -> &YoungDiagram {
        &self.diagram
    }

    /// `t_1, …, t_k`.
    pub fn ones(&self) -> &[u32] {
        &self.t
    }

    pub fn size(&self) -> usize {
        self.t.len()
    }

    /// Whether `(i, j)` filled ⇔ `(j, i)` filled on a self-conjugate diagram.
    pub fn is_symmetric(&self) -> bool {
        self.diagram.is_self_conjugate() && self.t.iter().enumerate().all(|(i, &r)| self.t[r as usize - 1] as usize == i + 1)
    }

    /// The word `t` read as a permutation (meaningful on any diagram).
    pub fn as_permutation(&self) -> Permutation {
        Permutation::from_vec_unchecked(self.t.clone())
    }
}

pub fn type_of(t: &Transversal) -> StepWord {
    t.diagram.type_word()
}

pub fn transversal_contains(t: &Transversal, pat: &Permutation) -> bool {
    find_in_region(t, pat, 0, 0).is_some()
}

/// Columns of one occurrence of `pat` in `t`.
pub fn transversal_find(t: &Transversal, pat: &Permutation) -> Option<Vec<usize>> {
    find_in_region(t, pat, 0, 0)
}

/// Occurrence of `pat` using only 1s in columns `> col` and rows `> row`.
/// Every square of the occurrence's submatrix must lie inside the diagram,
/// which for a Young diagram reduces to its south-east corner.
pub fn find_in_region(t: &Transversal, pat: &Permutation, col: u32, row: u32) -> Option<Vec<usize>> {
    let plan = PatternPlan::new(pat.word());
    let candidates: Vec<usize> = (col as usize..t.size()).filter(|&c| t.t[c] > row).collect();
    let mut cols = Vec::with_capacity(pat.len());
    let mut vals = Vec::with_capacity(pat.len());
    if region_search(t, &plan, &candidates, 0, 0, &mut cols, &mut vals) {
        Some(cols.into_iter().map(|c| c + 1).collect())
    } else {
        None
    }
}

fn region_search(
    t: &Transversal,
    plan: &PatternPlan,
    candidates: &[usize],
    start: usize,
    max_row: u32,
    cols: &mut Vec<usize>,
    vals: &mut Vec<u32>,
) -> bool {
    let k = cols.len();
    if k == plan.len() {
        return true;
    }
    let need = plan.len() - k;
    if candidates.len() < start + need {
        return false;
    }
    for idx in start..=candidates.len() - need {
        let c = candidates[idx];
        let v = t.t[c];
        if !plan.fits(k, v, vals) {
            continue;
        }
        let bottom = max_row.max(v);
        // The corner (current column, lowest row so far) must already be
        // inside; later choices only move it further out.
        if !t.diagram.contains(c as u32 + 1, bottom) {
            continue;
        }
        cols.push(c);
        vals.push(v);
        if region_search(t, plan, candidates, idx + 1, bottom, cols, vals) {
            return true;
        }
        cols.pop();
        vals.pop();
    }
    false
}

/// Columns `i` with `c_{i−1} = c_i = c_{i+1}` and `t_{i−1} < t_i > t_{i+1}`.
pub fn transversal_peaks(t: &Transversal) -> BTreeSet<usize> {
    let h = t.diagram.column_heights();
    let w = &t.t;
    (2..w.len())
        .filter(|&i| h[i - 2] == h[i - 1] && h[i - 1] == h[i] && w[i - 2] < w[i - 1] && w[i - 1] > w[i])
        .collect()
}

/// Arc between the `i`-th opener from the left and the `t_i`-th closer from
/// the right, on the diagram's type word.
pub fn chi(t: &Transversal) -> Matching {
    let word = t.diagram.type_word();
    let mut openers = Vec::new();
    let mut closers = Vec::new();
    for (pos, s) in word.steps().iter().enumerate() {
        match s {
            Step::U => openers.push(pos as u32 + 1),
            Step::D => closers.push(pos as u32 + 1),
        }
    }
    closers.reverse();
    let arcs = t
        .t
        .iter()
        .enumerate()
        .map(|(i, &r)| (openers[i], closers[r as usize - 1]))
        .collect();
    Matching::new_unchecked(arcs)
}

/// Inverse of [`chi`]: the diagram is rebuilt from the matching's type word.
pub fn chi_inv(m: &Matching) -> Result<Transversal> {
    let word = m.type_word();
    let diagram = YoungDiagram::from_type_word(&word)?;
    let n2 = word.len();
    let mut opener_rank = vec![0u32; n2 + 1];
    let mut closer_rank = vec![0u32; n2 + 1];
    let mut seen_open = 0;
    for (pos, s) in word.steps().iter().enumerate() {
        if *s == Step::U {
            seen_open += 1;
            opener_rank[pos + 1] = seen_open;
        }
    }
    let mut seen_close = 0;
    for (pos, s) in word.steps().iter().enumerate().rev() {
        if *s == Step::D {
            seen_close += 1;
            closer_rank[pos + 1] = seen_close;
        }
    }
    let mut t = vec![0; diagram.num_cols()];
    for &(i, j) in m.arcs() {
        t[opener_rank[i as usize] as usize - 1] = closer_rank[j as usize];
    }
    Transversal::new(diagram, t)
}

/// Every symmetric transversal of a self-conjugate diagram, lexicographic in `t`.
pub fn symmetric_transversals(d: &YoungDiagram) -> Vec<Transversal> {
    let mut out = Vec::new();
    if !d.is_self_conjugate() {
        return out;
    }
    let k = d.num_cols();
    let mut t = vec![0u32; k];
    sym_fill(d, 0, &mut t, &mut out);
    out
}

fn sym_fill(d: &YoungDiagram, from: usize, t: &mut Vec<u32>, out: &mut Vec<Transversal>) {
    let k = t.len();
    let Some(i) = (from..k).find(|&i| t[i] == 0) else {
        out.push(Transversal {
            diagram: d.clone(),
            t: t.clone(),
        });
        return;
    };
    let col = i as u32 + 1;
    if d.contains(col, col) {
        t[i] = col;
        sym_fill(d, i + 1, t, out);
        t[i] = 0;
    }
    for j in i + 1..k {
        let row = j as u32 + 1;
        if t[j] == 0 && d.contains(col, row) {
            t[i] = row;
            t[j] = col;
            sym_fill(d, i + 1, t, out);
            t[i] = 0;
            t[j] = 0;
        }
    }
}

/// Every transversal of a diagram, lexicographic in `t`.
pub fn all_transversals(d: &YoungDiagram) -> Vec<Transversal> {
    let mut out = Vec::new();
    let k = d.num_cols();
    if d.num_rows() != k {
        return out;
    }
    let mut t = Vec::with_capacity(k);
    let mut used = vec![false; k + 1];
    fill_all(d, &mut t, &mut used, &mut out);
    out
}

fn fill_all(d: &YoungDiagram, t: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<Transversal>) {
    let k = d.num_cols();
    if t.len() == k {
        out.push(Transversal {
            diagram: d.clone(),
            t: t.clone(),
        });
        return;
    }
    let col = t.len() as u32 + 1;
    for r in 1..=k as u32 {
        if !used[r as usize] && d.contains(col, r) {
            used[r as usize] = true;
            t.push(r);
            fill_all(d, t, used, out);
            t.pop();
            used[r as usize] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn figure3() -> Transversal {
        Transversal::new(
            YoungDiagram::new(vec![8, 8, 8, 8, 8, 5, 5, 5]).unwrap(),
            vec![6, 2, 8, 4, 7, 1, 5, 3],
        )
        .unwrap()
    }

    #[test]
    fn type_words() {
        assert_eq!(figure3().diagram().type_word().to_string(), "UUUUUDDDUUUDDDDD");
        assert_eq!(YoungDiagram::square(3).type_word().to_string(), "UUUDDD");
        assert_eq!(YoungDiagram::new(vec![2, 1]).unwrap().type_word().to_string(), "UDUD");
        let d = figure3().diagram().clone();
        assert_eq!(YoungDiagram::from_type_word(&d.type_word()).unwrap(), d);
        assert!(YoungDiagram::from_type_word(&"DU".parse().unwrap()).is_err());
    }

    #[test]
    fn figure3_patterns_and_peaks() {
        let t = figure3();
        assert!(transversal_contains(&t, &"123".parse().unwrap()));
        assert!(!transversal_contains(&t, &"321".parse().unwrap()));
        assert!(transversal_contains(&t, &"1".parse().unwrap()));
        assert_eq!(transversal_peaks(&t), BTreeSet::from([3, 7]));
        let fig13 = Transversal::new(t.diagram().clone(), vec![6, 4, 8, 2, 7, 1, 5, 3]).unwrap();
        assert_eq!(transversal_peaks(&fig13), BTreeSet::from([3, 7]));
        assert!(t.is_symmetric() && fig13.is_symmetric());
    }

    #[test]
    fn chi_examples() {
        let m = chi(&figure3());
        assert_eq!(
            m.arcs(),
            &[(1, 8), (2, 15), (3, 6), (4, 13), (5, 7), (9, 16), (10, 12), (11, 14)]
        );
        assert_eq!(chi_inv(&m).unwrap(), figure3());
        let nest = Matching::new(vec![(1, 4), (2, 3)]).unwrap();
        let t = chi_inv(&nest).unwrap();
        assert_eq!(t.diagram(), &YoungDiagram::square(2));
        assert_eq!(t.ones(), &[1, 2]);
        let id3 = chi(&Transversal::from_permutation(&Permutation::identity(3)));
        assert_eq!(id3.arcs(), &[(1, 6), (2, 5), (3, 4)]);
    }

    #[test]
    fn validation_and_json() {
        let d = YoungDiagram::new(vec![2, 1]).unwrap();
        assert!(Transversal::new(d.clone(), vec![2, 1]).is_ok());
        assert!(Transversal::new(d.clone(), vec![1, 2]).is_err());
        assert!(Transversal::new(d, vec![1, 1]).is_err());
        let json = serde_json::to_string(&figure3()).unwrap();
        assert!(json.starts_with(r#"{"rows":[8,8,8,8,8,5,5,5],"ones":[[1,6],[2,2]"#));
        let back: Transversal = serde_json::from_str(&json).unwrap();
        assert_eq!(back, figure3());
        assert!(serde_json::from_str::<Transversal>(r#"{"rows":[1],"ones":[[1,1],[1,1]]}"#).is_err());
    }

    #[test]
    fn generator_counts() {
        // Involutions of [n] are the symmetric transversals of the square.
        let counts: Vec<usize> = (1..=6).map(|n| symmetric_transversals(&YoungDiagram::square(n)).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 10, 26, 76]);
        assert_eq!(all_transversals(&YoungDiagram::square(4)).len(), 24);
        // Diagonal hooks of a self-conjugate shape in a k×k box are distinct
        // odd numbers below 2k, so there are 2^k such shapes.
        let sc: Vec<usize> = (0..=5).map(|k| YoungDiagram::self_conjugate_up_to(k).len()).collect();
        assert_eq!(sc, vec![1, 2, 4, 8, 16, 32]);
        let staircase = YoungDiagram::new(vec![2, 1]).unwrap();
        assert_eq!(all_transversals(&staircase).len(), 1);
    }
}
