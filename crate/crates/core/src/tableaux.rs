//! Partitions, standard Young tableaux, Schensted row insertion, West's rank
//! bijection `f`, and the three-cell extension `η` with its conjugate `γ`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::enumeration::Family;
use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Partition> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    pub fn num_cols(&self) -> usize {
        self.0.first().copied().unwrap_or(0) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.num_cols();
        Partition(
            (1..=cols as u32)
                .map(|c| self.0.iter().filter(|&&r| r >= c).count() as u32)
                .collect(),
        )
    }

    /// Row lengths of a tableau-like row list.
    pub(crate) fn of_rows<T>(rows: &[Vec<T>]) -> Partition {
        Partition(rows.iter().map(|r| r.len() as u32).filter(|&l| l > 0).collect())
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Partition> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

/// Row-major SYT; row 0 is the top row.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct StandardYoungTableau {
    rows: Vec<Vec<u32>>,
}

impl StandardYoungTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<StandardYoungTableau> {
        let rows: Vec<Vec<u32>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidTableau("row lengths must weakly decrease".into()));
        }
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for &v in rows.iter().flatten() {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidTableau(format!("entries must be exactly 1..={n}")));
            }
            seen[v] = true;
        }
        for (r, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau(format!("row {} not increasing", r + 1)));
            }
            if r > 0 && row.iter().zip(&rows[r - 1]).any(|(below, above)| below <= above) {
                return Err(Error::InvalidTableau(format!("column strictness fails in row {}", r + 1)));
            }
        }
        Ok(StandardYoungTableau { rows })
    }

    pub fn empty() -> StandardYoungTableau {
        StandardYoungTableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::of_rows(&self.rows)
    }

    pub fn num_cols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// 0-indexed row of each value, indexed by value.
    fn row_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.size() + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                out[v as usize] = r;
            }
        }
        out
    }

    pub fn descents(&self) -> BTreeSet<usize> {
        let row = self.row_of();
        (1..self.size()).filter(|&k| row[k + 1] > row[k]).collect()
    }

    pub fn ascents(&self) -> BTreeSet<usize> {
        let des = self.descents();
        (1..self.size()).filter(|k| !des.contains(k)).collect()
    }

    /// Column `c` (0-indexed) read top to bottom.
    pub fn column(&self, c: usize) -> Vec<u32> {
        self.rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect()
    }
}

impl TryFrom<Vec<Vec<u32>>> for StandardYoungTableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<u32>>) -> Result<StandardYoungTableau> {
        StandardYoungTableau::new(rows)
    }
}

impl From<StandardYoungTableau> for Vec<Vec<u32>> {
    fn from(t: StandardYoungTableau) -> Vec<Vec<u32>> {
        t.rows
    }
}

pub fn syt_descents(t: &StandardYoungTableau) -> BTreeSet<usize> {
    t.descents()
}

/// Cells `(row, col)`, 0-indexed, touched by one row insertion; the last one
/// is the newly created cell.
pub type InsertionPath = Vec<(usize, usize)>;

/// Schensted row insertion of `x` into rows of distinct entries: `x` bumps
/// the smallest entry strictly larger than it, which moves to the next row.
pub fn row_insert(rows: &mut Vec<Vec<u32>>, mut x: u32) -> InsertionPath {
    let mut path = Vec::new();
    for r in 0.. {
        if r == rows.len() {
            rows.push(Vec::new());
        }
        let row = &mut rows[r];
        let c = row.partition_point(|&y| y < x);
        path.push((r, c));
        if c == row.len() {
            row.push(x);
            return path;
        }
        std::mem::swap(&mut row[c], &mut x);
    }
    unreachable!()
}

/// Inverse of [`row_insert`]: delete the last cell of row `r` and bump its
/// entry upward, each time replacing the largest entry strictly smaller.
/// Returns the value ejected from the top row.
pub fn reverse_bump(rows: &mut Vec<Vec<u32>>, r: usize) -> u32 {
    let mut x = rows[r].pop().expect("reverse bump from an empty row");
    if rows[r].is_empty() {
        debug_assert_eq!(r + 1, rows.len(), "removed cell was not a corner");
        rows.pop();
    }
    for above in (0..r).rev() {
        let row = &mut rows[above];
        let c = row.partition_point(|&y| y < x);
        debug_assert!(c > 0, "no smaller entry to bump in row {above}");
        std::mem::swap(&mut row[c - 1], &mut x);
    }
    x
}

/// Per-position ranks of a permutation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankProfile {
    pub ranks: Vec<u32>,
    /// rank → 1-indexed positions, increasing.
    pub rank_classes: BTreeMap<u32, Vec<usize>>,
}

impl RankProfile {
    pub fn max_rank(&self) -> u32 {
        self.ranks.iter().copied().max().unwrap_or(0)
    }
}

/// Length of the longest increasing subsequence ending at each entry.
pub fn rank_sequence(p: &Permutation) -> RankProfile {
    let mut tails: Vec<u32> = Vec::new();
    let mut ranks = Vec::with_capacity(p.len());
    let mut rank_classes: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (i, &v) in p.word().iter().enumerate() {
        let k = tails.partition_point(|&t| t < v);
        if k == tails.len() {
            tails.push(v);
        } else {
            tails[k] = v;
        }
        let rank = k as u32 + 1;
        ranks.push(rank);
        rank_classes.entry(rank).or_default().push(i + 1);
    }
    RankProfile { ranks, rank_classes }
}

fn check_k(k: usize) -> Result<()> {
    if k < 3 {
        return Err(Error::Precondition(format!("west_f needs k >= 3, got {k}")));
    }
    Ok(())
}

/// West's bijection `S_n(I_k) → S_n(I_{k−2} ⊕ 21)`.
pub fn west_f(p: &Permutation, k: usize) -> Result<Permutation> {
    check_k(k)?;
    p.require_avoids(&Permutation::identity(k))?;
    let prof = rank_sequence(p);
    let top = k as u32 - 1;
    let w = p.word();
    let Some(positions) = prof.rank_classes.get(&top) else {
        return Ok(p.clone());
    };
    let mut unused: BTreeSet<u32> = positions.iter().map(|&i| w[i - 1]).collect();
    let mut out = w.to_vec();
    for &i in positions {
        let anchor = (0..i - 1)
            .rev()
            .find(|&j| prof.ranks[j] == top - 1)
            .map(|j| w[j])
            .expect("a top-rank entry always has a rank k-2 entry to its left");
        let e = *unused
            .range(anchor + 1..)
            .next()
            .expect("an unused element of E above the anchor always exists");
        unused.remove(&e);
        out[i - 1] = e;
    }
    Ok(Permutation::from_vec_unchecked(out))
}

/// Inverse of [`west_f`]: entries of rank at least `k−1` are rewritten in
/// decreasing order over their positions.
pub fn west_f_inv(p: &Permutation, k: usize) -> Result<Permutation> {
    check_k(k)?;
    let forbidden = Permutation::identity(k - 2).direct_sum(&Permutation::decreasing(2));
    p.require_avoids(&forbidden)?;
    let prof = rank_sequence(p);
    let positions: Vec<usize> = (0..p.len()).filter(|&i| prof.ranks[i] as usize >= k - 1).collect();
    let mut values: Vec<u32> = positions.iter().map(|&i| p.word()[i]).collect();
    values.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = p.word().to_vec();
    for (&i, v) in positions.iter().zip(values) {
        out[i] = v;
    }
    Ok(Permutation::from_vec_unchecked(out))
}

/// The RSK tableau of an involution, whose insertion and recording
/// tableaux coincide.
pub fn rsk_involution(p: &Permutation) -> Result<StandardYoungTableau> {
    if !p.is_involution() {
        return Err(Error::Precondition(format!("{p} is not an involution")));
    }
    let (insertion, _) = rsk_with_paths(p);
    Ok(StandardYoungTableau { rows: insertion })
}

/// Insertion tableau rows plus the insertion path of every entry.
pub fn rsk_with_paths(p: &Permutation) -> (Vec<Vec<u32>>, Vec<InsertionPath>) {
    let mut rows = Vec::new();
    let paths = p.word().iter().map(|&v| row_insert(&mut rows, v)).collect();
    (rows, paths)
}

/// Inverse RSK on the pair `(T, T)`.
pub fn rsk_involution_inv(t: &StandardYoungTableau) -> Permutation {
    let n = t.size();
    let row_of = t.row_of();
    let mut p = t.rows.clone();
    let mut word = vec![0; n];
    for k in (1..=n).rev() {
        word[k - 1] = reverse_bump(&mut p, row_of[k]);
    }
    Permutation::from_vec_unchecked(word)
}

/// Adds `m+1`, `m+2`, `m+3` at the bottoms of columns 1, 2, 3.
pub fn eta(t: &StandardYoungTableau) -> Result<StandardYoungTableau> {
    if t.size() == 0 {
        return Err(Error::Precondition("eta needs a nonempty tableau".into()));
    }
    if t.num_cols() > 3 {
        return Err(Error::Precondition(format!("eta needs at most 3 columns, got {}", t.num_cols())));
    }
    let m = t.size() as u32;
    let heights: Vec<usize> = (0..3).map(|c| t.column(c).len()).collect();
    let mut rows = t.rows.clone();
    for (c, &h) in heights.iter().enumerate() {
        if h == rows.len() {
            rows.push(Vec::new());
        }
        debug_assert_eq!(rows[h].len(), c);
        rows[h].push(m + 1 + c as u32);
    }
    Ok(StandardYoungTableau { rows })
}

pub fn eta_inv(t: &StandardYoungTableau) -> Result<StandardYoungTableau> {
    let m = t.size() as u32;
    if m <= 3 || t.num_cols() != 3 {
        return Err(Error::Precondition("not in the image of eta".into()));
    }
    let mut rows = t.rows.clone();
    for c in (0..3).rev() {
        let h = rows.iter().take_while(|r| r.len() > c).count();
        let expected = m - 2 + c as u32;
        let row = &mut rows[h - 1];
        if row.len() != c + 1 || row[c] != expected {
            return Err(Error::Precondition(format!(
                "bottom of column {} does not hold {expected}",
                c + 1
            )));
        }
        row.pop();
        if row.is_empty() {
            rows.pop();
        }
    }
    Ok(StandardYoungTableau { rows })
}

/// `RSK⁻¹ ∘ η ∘ RSK`, sending `𝒫_{2n−2}` onto `ℛʳᶜ_{2n+1}`.
pub fn gamma(p: &Permutation) -> Result<Permutation> {
    if p.len() < 2 || p.len() % 2 == 1 || !Family::P.contains(p) {
        return Err(Error::Precondition(format!("{p} is not in the family P")));
    }
    let t = eta(&rsk_involution(p)?)?;
    Ok(rsk_involution_inv(&t))
}

pub fn gamma_inv(s: &Permutation) -> Result<Permutation> {
    if s.len() < 5 || s.len().is_multiple_of(2) || !Family::Rrc.contains(s) {
        return Err(Error::Precondition(format!("{s} is not in the family Rrc")));
    }
    let t = eta_inv(&rsk_involution(s)?)?;
    Ok(rsk_involution_inv(&t))
}

/// All standard Young tableaux with `n` cells and at most `max_cols` columns.
pub fn all_syt(n: usize, max_cols: usize) -> Vec<StandardYoungTableau> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u32>> = Vec::new();
    grow_syt(1, n, max_cols, &mut rows, &mut out);
    out
}

fn grow_syt(v: usize, n: usize, max_cols: usize, rows: &mut Vec<Vec<u32>>, out: &mut Vec<StandardYoungTableau>) {
    if v > n {
        out.push(StandardYoungTableau { rows: rows.clone() });
        return;
    }
    for r in 0..=rows.len() {
        let len = rows.get(r).map_or(0, Vec::len);
        let above = if r == 0 { max_cols } else { rows[r - 1].len() };
        if len >= above {
            continue;
        }
        if r == rows.len() {
            rows.push(Vec::new());
        }
        rows[r].push(v as u32);
        grow_syt(v + 1, n, max_cols, rows, out);
        rows[r].pop();
        if rows[r].is_empty() {
            rows.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn ranks_of_the_worked_example() {
        let prof = rank_sequence(&p("6482(10)19375"));
        assert_eq!(prof.rank_classes[&3], vec![5, 7, 9, 10]);
        assert_eq!(prof.rank_classes[&1], vec![1, 2, 4, 6]);
        assert_eq!(rank_sequence(&Permutation::identity(4)).ranks, vec![1, 2, 3, 4]);
        assert_eq!(rank_sequence(&Permutation::decreasing(4)).ranks, vec![1, 1, 1, 1]);
    }

    #[test]
    fn west_examples() {
        let pi = p("6482(10)19375");
        let sigma = p("648291(10)357");
        assert_eq!(west_f(&pi, 4).unwrap(), sigma);
        assert_eq!(west_f_inv(&sigma, 4).unwrap(), pi);
        assert_eq!(west_f(&p("321"), 4).unwrap(), p("321"));
        match west_f(&p("1234"), 4) {
            Err(Error::PatternPresent { positions, .. }) => assert_eq!(positions, vec![1, 2, 3, 4]),
            other => panic!("{other:?}"),
        }
        assert!(west_f_inv(&p("1243"), 4).is_err());
        assert!(west_f(&p("21"), 2).is_err());
    }

    #[test]
    fn rsk_examples() {
        let t = rsk_involution(&p("321546")).unwrap();
        assert_eq!(t.rows(), &[vec![1, 4, 6], vec![2, 5], vec![3]]);
        assert_eq!(rsk_involution_inv(&t), p("321546"));
        assert_eq!(rsk_involution(&Permutation::identity(4)).unwrap().rows(), &[vec![1, 2, 3, 4]]);
        assert_eq!(rsk_involution(&Permutation::decreasing(3)).unwrap().rows().len(), 3);
        assert!(rsk_involution(&p("231")).is_err());
    }

    #[test]
    fn insertion_paths() {
        let mut rows = vec![vec![1, 3, 5], vec![2, 6]];
        let path = row_insert(&mut rows, 4);
        assert_eq!(path, vec![(0, 2), (1, 1), (2, 0)]);
        assert_eq!(rows, vec![vec![1, 3, 4], vec![2, 5], vec![6]]);
        assert_eq!(reverse_bump(&mut rows, 2), 4);
        assert_eq!(rows, vec![vec![1, 3, 5], vec![2, 6]]);
    }

    #[test]
    fn descents_of_tableaux() {
        let t = StandardYoungTableau::new(vec![vec![1, 2, 5, 8], vec![3, 4, 7], vec![6, 9], vec![10, 11]]).unwrap();
        assert_eq!(t.shape().parts(), &[4, 3, 2, 2]);
        assert_eq!(t.descents(), BTreeSet::from([2, 5, 8, 9]));
        let col = StandardYoungTableau::new(vec![vec![1], vec![2], vec![3]]).unwrap();
        assert_eq!(col.descents(), BTreeSet::from([1, 2]));
    }

    #[test]
    fn eta_and_gamma() {
        let t = rsk_involution(&p("321546")).unwrap();
        let t2 = eta(&t).unwrap();
        assert_eq!(t2.rows(), &[vec![1, 4, 6], vec![2, 5, 9], vec![3, 8], vec![7]]);
        assert_eq!(eta_inv(&t2).unwrap(), t);
        assert_eq!(gamma(&p("321546")).unwrap(), p("732859146"));
        assert_eq!(gamma_inv(&p("732859146")).unwrap(), p("321546"));
        assert!(eta(&StandardYoungTableau::empty()).is_err());
        assert!(eta(&StandardYoungTableau::new(vec![vec![1, 2, 3, 4]]).unwrap()).is_err());
    }

    #[test]
    fn syt_validation() {
        assert!(StandardYoungTableau::new(vec![vec![1, 3], vec![2]]).is_ok());
        assert!(StandardYoungTableau::new(vec![vec![2, 1]]).is_err());
        assert!(StandardYoungTableau::new(vec![vec![1], vec![2, 3]]).is_err());
        assert!(StandardYoungTableau::new(vec![vec![1, 2], vec![4]]).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![3, 1]).unwrap().conjugate().parts(), &[2, 1, 1]);
    }

    #[test]
    fn syt_counts() {
        // Number of SYT with n cells equals the number of involutions of [n].
        let counts: Vec<usize> = (0..=7).map(|n| all_syt(n, usize::MAX).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 10, 26, 76, 232]);
    }
}
