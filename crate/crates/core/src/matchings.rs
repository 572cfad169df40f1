//! Perfect matchings of `[2n]`, their crossing and nesting numbers, valleys,
//! and the bijection `φ` to oscillating tableaux.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::step::{Step, StepWord};
use crate::tableaux::{reverse_bump, row_insert, Partition};

/// Arcs `(i, j)` with `i < j`, kept sorted by left endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<(u32, u32)>", into = "Vec<(u32, u32)>")]
pub struct Matching {
    arcs: Vec<(u32, u32)>,
}

impl Matching {
    pub fn new(mut arcs: Vec<(u32, u32)>) -> Result<Matching> {
        let n2 = 2 * arcs.len();
        let mut seen = vec![false; n2 + 1];
        for &(i, j) in &arcs {
            if i >= j {
                return Err(Error::InvalidMatching(format!("arc ({i}, {j}) is not increasing")));
            }
            for v in [i, j] {
                if v == 0 || v as usize > n2 || seen[v as usize] {
                    return Err(Error::InvalidMatching(format!(
                        "point {v} repeated or outside 1..={n2}"
                    )));
                }
                seen[v as usize] = true;
            }
        }
        arcs.sort_unstable();
        Ok(Matching { arcs })
    }

    pub(crate) fn new_unchecked(mut arcs: Vec<(u32, u32)>) -> Matching {
        arcs.sort_unstable();
        debug_assert!(Matching::new(arcs.clone()).is_ok(), "{arcs:?}");
        Matching { arcs }
    }

    pub fn arcs(&self) -> &[(u32, u32)] {
        &self.arcs
    }

    /// Number of arcs.
    pub fn size(&self) -> usize {
        self.arcs.len()
    }

    /// Partner of each point, indexed by point; index 0 unused.
    pub fn partners(&self) -> Vec<u32> {
        let mut out = vec![0; 2 * self.arcs.len() + 1];
        for &(i, j) in &self.arcs {
            out[i as usize] = j;
            out[j as usize] = i;
        }
        out
    }

    /// `U` at openers, `D` at closers.
    pub fn type_word(&self) -> StepWord {
        let mut word = vec![Step::D; 2 * self.arcs.len()];
        for &(i, _) in &self.arcs {
            word[i as usize - 1] = Step::U;
        }
        StepWord(word)
    }

    pub fn reflect(&self) -> Matching {
        let m = 2 * self.arcs.len() as u32 + 1;
        Matching::new_unchecked(self.arcs.iter().map(|&(i, j)| (m - j, m - i)).collect())
    }

    pub fn is_bilaterally_symmetric(&self) -> bool {
        self.reflect() == *self
    }
}

impl TryFrom<Vec<(u32, u32)>> for Matching {
    type Error = Error;
    fn try_from(arcs: Vec<(u32, u32)>) -> Result<Matching> {
        Matching::new(arcs)
    }
}

impl From<Matching> for Vec<(u32, u32)> {
    fn from(m: Matching) -> Vec<(u32, u32)> {
        m.arcs
    }
}

/// `(cr, ne)`: the largest crossing and nesting.
///
/// Every arc of a k-crossing or k-nesting spans the gap just after the
/// last left endpoint, so it suffices to scan cut points and take the
/// longest increasing (resp. decreasing) run of right endpoints among the
/// arcs spanning each cut.
pub fn crossing_nesting(m: &Matching) -> (usize, usize) {
    let n2 = 2 * m.size() as u32;
    let (mut cr, mut ne) = (0, 0);
    for x in 1..n2 {
        let rights: Vec<u32> = m.arcs.iter().filter(|&&(i, j)| i <= x && x < j).map(|&(_, j)| j).collect();
        cr = cr.max(longest_increasing(&rights));
        let rev: Vec<u32> = rights.iter().rev().copied().collect();
        ne = ne.max(longest_increasing(&rev));
    }
    (cr, ne)
}

fn longest_increasing(w: &[u32]) -> usize {
    let mut tails: Vec<u32> = Vec::new();
    for &v in w {
        let k = tails.partition_point(|&t| t < v);
        if k == tails.len() {
            tails.push(v);
        } else {
            tails[k] = v;
        }
    }
    tails.len()
}

/// `(Val, Ṽal)`: valley indices and their opener ordinals.
pub fn valleys(m: &Matching) -> (BTreeSet<usize>, BTreeSet<usize>) {
    let partner = m.partners();
    let n2 = partner.len() - 1;
    let is_opener = |p: usize| partner[p] as usize > p;
    let mut val = BTreeSet::new();
    let mut tilde = BTreeSet::new();
    let mut ordinal = 0;
    for p in 1..=n2 {
        if !is_opener(p) {
            continue;
        }
        ordinal += 1;
        if p >= 2
            && p < n2
            && is_opener(p - 1)
            && is_opener(p + 1)
            && partner[p - 1] > partner[p]
            && partner[p] < partner[p + 1]
        {
            val.insert(p);
            tilde.insert(ordinal);
        }
    }
    (val, tilde)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Partition>", into = "Vec<Partition>")]
pub struct OscillatingTableau {
    shapes: Vec<Partition>,
}

/// A single step between consecutive shapes; rows and columns 1-indexed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShapeChange {
    Add { row: usize, col: usize },
    Remove { row: usize, col: usize },
}

fn shape_change(a: &Partition, b: &Partition) -> Option<ShapeChange> {
    let (pa, pb) = (a.parts(), b.parts());
    let len = pa.len().max(pb.len());
    let mut diff = None;
    for r in 0..len {
        let x = pa.get(r).copied().unwrap_or(0) as i64;
        let y = pb.get(r).copied().unwrap_or(0) as i64;
        match y - x {
            0 => {}
            1 if diff.is_none() => diff = Some(ShapeChange::Add { row: r + 1, col: y as usize }),
            -1 if diff.is_none() => diff = Some(ShapeChange::Remove { row: r + 1, col: x as usize }),
            _ => return None,
        }
    }
    diff
}

impl OscillatingTableau {
    pub fn new(shapes: Vec<Partition>) -> Result<OscillatingTableau> {
        if shapes.is_empty() || !shapes[0].is_empty() || !shapes[shapes.len() - 1].is_empty() {
            return Err(Error::InvalidOscillating("must start and end with the empty shape".into()));
        }
        for (i, w) in shapes.windows(2).enumerate() {
            if shape_change(&w[0], &w[1]).is_none() {
                return Err(Error::InvalidOscillating(format!(
                    "shapes {} and {} differ by more than one square",
                    i,
                    i + 1
                )));
            }
        }
        Ok(OscillatingTableau { shapes })
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    /// Number of steps, `2n`.
    pub fn len(&self) -> usize {
        self.shapes.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Change performed by step `i` (1-indexed), from `λ^{i−1}` to `λ^i`.
    pub fn change(&self, i: usize) -> ShapeChange {
        shape_change(&self.shapes[i - 1], &self.shapes[i]).expect("validated on construction")
    }

    pub fn type_word(&self) -> StepWord {
        StepWord(
            (1..=self.len())
                .map(|i| match self.change(i) {
                    ShapeChange::Add { .. } => Step::U,
                    ShapeChange::Remove { .. } => Step::D,
                })
                .collect(),
        )
    }

    pub fn reversed(&self) -> OscillatingTableau {
        OscillatingTableau {
            shapes: self.shapes.iter().rev().cloned().collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.shapes.iter().eq(self.shapes.iter().rev())
    }

    pub fn max_rows(&self) -> usize {
        self.shapes.iter().map(Partition::num_rows).max().unwrap_or(0)
    }

    pub fn max_cols(&self) -> usize {
        self.shapes.iter().map(Partition::num_cols).max().unwrap_or(0)
    }

    /// Indices `1 < i < 2n` where step `i−1` adds, step `i` adds in row 1 and
    /// step `i+1` adds in row 2. `None` unless every shape has ≤ 2 rows.
    pub fn valleys(&self) -> Option<BTreeSet<usize>> {
        if self.max_rows() > 2 {
            return None;
        }
        let adds_in_row = |i: usize, want: Option<usize>| {
            matches!(self.change(i), ShapeChange::Add { row, .. } if want.is_none_or(|w| w == row))
        };
        Some(
            (2..self.len())
                .filter(|&i| adds_in_row(i - 1, None) && adds_in_row(i, Some(1)) && adds_in_row(i + 1, Some(2)))
                .collect(),
        )
    }

    /// Indices `1 < i < 2n` where step `i−1` adds in column 1, step `i` adds
    /// in column 2 and step `i+1` adds. `None` unless every shape has ≤ 2
    /// columns.
    pub fn peaks(&self) -> Option<BTreeSet<usize>> {
        if self.max_cols() > 2 {
            return None;
        }
        let adds_in_col = |i: usize, want: Option<usize>| {
            matches!(self.change(i), ShapeChange::Add { col, .. } if want.is_none_or(|w| w == col))
        };
        Some(
            (2..self.len())
                .filter(|&i| adds_in_col(i - 1, Some(1)) && adds_in_col(i, Some(2)) && adds_in_col(i + 1, None))
                .collect(),
        )
    }
}

impl TryFrom<Vec<Partition>> for OscillatingTableau {
    type Error = Error;
    fn try_from(shapes: Vec<Partition>) -> Result<OscillatingTableau> {
        OscillatingTableau::new(shapes)
    }
}

impl From<OscillatingTableau> for Vec<Partition> {
    fn from(o: OscillatingTableau) -> Vec<Partition> {
        o.shapes
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OscFeatures {
    #[serde(rename = "type")]
    pub type_word: StepWord,
    pub val: Option<BTreeSet<usize>>,
    pub peak: Option<BTreeSet<usize>>,
    pub symmetric: bool,
}

pub fn osc_features(o: &OscillatingTableau) -> OscFeatures {
    OscFeatures {
        type_word: o.type_word(),
        val: o.valleys(),
        peak: o.peaks(),
        symmetric: o.is_symmetric(),
    }
}

/// Intermediate tableaux `T_0, …, T_{2n}` of `φ` as row lists.
pub fn phi_tableaux(m: &Matching) -> Vec<Vec<Vec<u32>>> {
    let n2 = 2 * m.size();
    let partner = m.partners();
    let mut tabs = vec![Vec::new(); n2 + 1];
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for j in (1..=n2).rev() {
        let other = partner[j];
        if (other as usize) < j {
            row_insert(&mut rows, other);
        } else {
            let r = rows
                .iter()
                .position(|row| row.last() == Some(&(j as u32)))
                .expect("an opener is present when it is reached");
            assert!(
                rows.iter().flatten().all(|&v| v <= j as u32),
                "opener {j} is not the maximum entry"
            );
            assert!(
                rows.get(r + 1).is_none_or(|below| below.len() < rows[r].len()),
                "opener {j} does not sit in a corner"
            );
            rows[r].pop();
            if rows[r].is_empty() {
                rows.pop();
            }
        }
        tabs[j - 1] = rows.clone();
    }
    tabs
}

/// Reads `j = 2n, …, 1`, inserting `i` at each closer `j` of `(i, j)` and
/// deleting `j` at each opener; the shapes of the tableaux form the result.
pub fn phi(m: &Matching) -> OscillatingTableau {
    OscillatingTableau {
        shapes: phi_tableaux(m).iter().map(|rows| Partition::of_rows(rows)).collect(),
    }
}

/// Forward replay of [`phi`]: a new square receives `j`; a deleted square in
/// row `r` is reverse-bumped out, and the ejected value `a` closes arc `(a, j)`.
pub fn phi_inv(o: &OscillatingTableau) -> Result<Matching> {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    let mut arcs = Vec::with_capacity(o.len() / 2);
    for j in 1..=o.len() {
        match o.change(j) {
            ShapeChange::Add { row, col } => {
                if row > rows.len() {
                    rows.push(Vec::new());
                }
                debug_assert_eq!(rows[row - 1].len() + 1, col);
                rows[row - 1].push(j as u32);
            }
            ShapeChange::Remove { row, .. } => {
                let a = reverse_bump(&mut rows, row - 1);
                arcs.push((a, j as u32));
            }
        }
    }
    if o.len() % 2 == 1 {
        return Err(Error::InvalidOscillating("odd number of steps".into()));
    }
    Matching::new(arcs)
}

/// All matchings of `[2n]`, lexicographic by the partner of the smallest
/// unmatched point.
pub fn all_matchings(n: usize) -> Vec<Matching> {
    let mut out = Vec::new();
    let mut partner = vec![0u32; 2 * n + 1];
    match_rec(&mut partner, 1, &mut out);
    out
}

fn match_rec(partner: &mut Vec<u32>, from: usize, out: &mut Vec<Matching>) {
    let n2 = partner.len() - 1;
    let Some(i) = (from..=n2).find(|&i| partner[i] == 0) else {
        let arcs = (1..=n2).filter(|&i| partner[i] as usize > i).map(|i| (i as u32, partner[i])).collect();
        out.push(Matching { arcs });
        return;
    };
    for j in i + 1..=n2 {
        if partner[j] == 0 {
            partner[i] = j as u32;
            partner[j] = i as u32;
            match_rec(partner, i + 1, out);
            partner[i] = 0;
            partner[j] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn figure4() -> Matching {
        Matching::new(vec![(1, 8), (2, 15), (3, 6), (4, 13), (5, 7), (9, 16), (10, 12), (11, 14)]).unwrap()
    }

    fn shapes(parts: &[&[u32]]) -> OscillatingTableau {
        OscillatingTableau::new(parts.iter().map(|p| Partition::new(p.to_vec()).unwrap()).collect()).unwrap()
    }

    pub(crate) fn table2() -> OscillatingTableau {
        shapes(&[
            &[],
            &[1],
            &[1, 1],
            &[2, 1],
            &[2, 2],
            &[3, 2],
            &[3, 1],
            &[2, 1],
            &[2],
            &[2, 1],
            &[3, 1],
            &[3, 2],
            &[2, 2],
            &[2, 1],
            &[1, 1],
            &[1],
            &[],
        ])
    }

    #[test]
    fn statistics() {
        let crossing = Matching::new(vec![(1, 3), (2, 4)]).unwrap();
        assert_eq!(crossing_nesting(&crossing), (2, 1));
        let nest = Matching::new(vec![(1, 6), (2, 5), (3, 4)]).unwrap();
        assert_eq!(crossing_nesting(&nest), (1, 3));
        assert_eq!(crossing_nesting(&figure4()), (2, 3));
        assert_eq!(crossing_nesting(&Matching::default()), (0, 0));
    }

    #[test]
    fn valley_examples() {
        let (val, tilde) = valleys(&figure4());
        assert_eq!(val, BTreeSet::from([3, 10]));
        assert_eq!(tilde, BTreeSet::from([3, 7]));
        assert_eq!(valleys(&Matching::new(vec![(1, 2)]).unwrap()).0, BTreeSet::new());
        assert_eq!(valleys(&Matching::new(vec![(1, 4), (2, 3)]).unwrap()).0, BTreeSet::new());
    }

    #[test]
    fn reflection() {
        assert!(figure4().is_bilaterally_symmetric());
        assert!(Matching::new(vec![(1, 2), (3, 4)]).unwrap().is_bilaterally_symmetric());
        let m = Matching::new(vec![(1, 2), (3, 6), (4, 5)]).unwrap();
        assert_eq!(m.reflect().arcs(), &[(1, 4), (2, 3), (5, 6)]);
        assert!(!m.is_bilaterally_symmetric());
    }

    #[test]
    fn phi_table2() {
        let o = phi(&figure4());
        assert_eq!(o, table2());
        assert_eq!(phi_inv(&o).unwrap(), figure4());
        assert_eq!(o.type_word(), figure4().type_word());
        assert_eq!(o.valleys(), Some(BTreeSet::from([3, 10])));
        assert_eq!(o.peaks(), None);
        let single = phi(&Matching::new(vec![(1, 2)]).unwrap());
        assert_eq!(single, shapes(&[&[], &[1], &[]]));
        let f = osc_features(&single);
        assert_eq!((f.val, f.peak, f.symmetric), (Some(BTreeSet::new()), Some(BTreeSet::new()), true));
    }

    pub(crate) fn table3() -> OscillatingTableau {
        shapes(&[
            &[],
            &[1],
            &[1, 1],
            &[2, 1],
            &[2, 1, 1],
            &[2, 2, 1],
            &[2, 1, 1],
            &[1, 1, 1],
            &[1, 1],
            &[1, 1, 1],
            &[2, 1, 1],
            &[2, 2, 1],
            &[2, 1, 1],
            &[2, 1],
            &[1, 1],
            &[1],
            &[],
        ])
    }

    #[test]
    fn phi_table3() {
        let m = Matching::new(vec![(1, 8), (2, 13), (3, 6), (4, 15), (5, 7), (9, 16), (10, 12), (11, 14)]).unwrap();
        let o = phi(&m);
        assert_eq!(o, table3());
        assert_eq!(o.peaks(), Some(BTreeSet::from([3, 10])));
        assert_eq!(o.valleys(), None);
        assert_eq!(phi_inv(&o).unwrap(), m);
    }

    #[test]
    fn intermediate_tableaux_of_table2() {
        let tabs = phi_tableaux(&figure4());
        assert_eq!(tabs[6], vec![vec![1, 4, 5], vec![2]]);
        assert_eq!(tabs[9], vec![vec![2, 4], vec![9]]);
        assert_eq!(tabs[13], vec![vec![2, 11], vec![9]]);
        assert!(tabs[16].is_empty() && tabs[0].is_empty());
    }

    #[test]
    fn oscillating_validation() {
        let bad = vec![Partition::empty(), Partition::new(vec![2]).unwrap(), Partition::empty()];
        assert!(OscillatingTableau::new(bad).is_err());
        let open = vec![Partition::empty(), Partition::new(vec![1]).unwrap()];
        assert!(OscillatingTableau::new(open).is_err());
        let json = serde_json::to_string(&table2()).unwrap();
        assert!(json.starts_with("[[],[1],[1,1],[2,1]"));
        assert_eq!(serde_json::from_str::<OscillatingTableau>(&json).unwrap(), table2());
    }

    #[test]
    fn matching_counts() {
        let counts: Vec<usize> = (0..=5).map(|n| all_matchings(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 15, 105, 945]);
        assert!(Matching::new(vec![(2, 1)]).is_err());
        assert!(Matching::new(vec![(1, 3)]).is_err());
    }
}
