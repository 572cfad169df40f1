//! Lattice paths, noncrossing Dyck pairs and the maps between them and
//! two-row / two-column oscillating tableaux, plus the block rewrites `α`
//! and `β` and the bijection `θ` on symmetric pairs built from them.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matchings::OscillatingTableau;
use crate::step::{Step, StepWord};
use crate::tableaux::Partition;

/// A path of `U`/`D` steps starting at height `start`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticePath {
    pub start: i32,
    pub steps: StepWord,
}

impl LatticePath {
    pub fn new(start: i32, steps: StepWord) -> LatticePath {
        LatticePath { start, steps }
    }

    pub fn heights(&self) -> Vec<i32> {
        self.steps.heights(self.start)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn end(&self) -> i32 {
        self.start + self.steps.steps().iter().map(|s| s.delta()).sum::<i32>()
    }
}

/// A pair of paths of equal length with `P` never below `Q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PairJson", into = "PairJson")]
pub struct DyckPair {
    p: StepWord,
    q: StepWord,
}

#[derive(Serialize, Deserialize)]
struct PairJson {
    #[serde(rename = "P")]
    p: StepWord,
    #[serde(rename = "Q")]
    q: StepWord,
}

impl TryFrom<PairJson> for DyckPair {
    type Error = Error;
    fn try_from(raw: PairJson) -> Result<DyckPair> {
        DyckPair::new(raw.p, raw.q)
    }
}

impl From<DyckPair> for PairJson {
    fn from(pair: DyckPair) -> PairJson {
        PairJson { p: pair.p, q: pair.q }
    }
}

impl DyckPair {
    /// Both words must be Dyck paths of the same length with `P ≥ Q`.
    pub fn new(p: StepWord, q: StepWord) -> Result<DyckPair> {
        if p.len() != q.len() {
            return Err(Error::InvalidPath(format!("lengths {} and {} differ", p.len(), q.len())));
        }
        if !p.is_dyck() || !q.is_dyck() {
            return Err(Error::InvalidPath("both paths must be Dyck paths".into()));
        }
        let (hp, hq) = (p.heights(0), q.heights(0));
        if let Some(x) = (0..hp.len()).find(|&x| hp[x] < hq[x]) {
            return Err(Error::InvalidPath(format!("P goes below Q at x = {x}")));
        }
        Ok(DyckPair { p, q })
    }

    pub fn p(&self) -> &StepWord {
        &self.p
    }

    pub fn q(&self) -> &StepWord {
        &self.q
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    /// Both paths fixed by reflection about the vertical centre line.
    pub fn is_symmetric(&self) -> bool {
        self.p.mirrored() == self.p && self.q.mirrored() == self.q
    }
}

/// `(A, B)`: the `1 < i < n` where `p_{i−1}p_i p_{i+1} = UUU` and,
/// respectively, `q_i q_{i+1} = UD` or `q_{i−1} q_i = UD`.
pub fn ab_sets(p: &StepWord, q: &StepWord) -> (BTreeSet<usize>, BTreeSet<usize>) {
    let n = p.len().min(q.len());
    let (p, q) = (p.steps(), q.steps());
    // Word letters are 1-indexed in the definitions.
    let l = |w: &[Step], i: usize| w[i - 1];
    let mut a = BTreeSet::new();
    let mut b = BTreeSet::new();
    for i in 2..n {
        if !(l(p, i - 1) == Step::U && l(p, i) == Step::U && l(p, i + 1) == Step::U) {
            continue;
        }
        if l(q, i) == Step::U && l(q, i + 1) == Step::D {
            a.insert(i);
        }
        if l(q, i - 1) == Step::U && l(q, i) == Step::D {
            b.insert(i);
        }
    }
    (a, b)
}

pub fn pair_ab_sets(pair: &DyckPair) -> (BTreeSet<usize>, BTreeSet<usize>) {
    ab_sets(&pair.p, &pair.q)
}

fn pair_from_two_rows(shapes: &[(i32, i32)]) -> DyckPair {
    let hp: Vec<i32> = shapes.iter().map(|&(x, y)| x + y).collect();
    let hq: Vec<i32> = shapes.iter().map(|&(x, y)| x - y).collect();
    DyckPair {
        p: StepWord::from_heights(&hp).expect("one square per step"),
        q: StepWord::from_heights(&hq).expect("one square per step"),
    }
}

fn two_parts(part: &Partition, what: &str) -> Result<(i32, i32)> {
    match *part.parts() {
        [] => Ok((0, 0)),
        [x] => Ok((x as i32, 0)),
        [x, y] => Ok((x as i32, y as i32)),
        _ => Err(Error::InvalidOscillating(format!("shape {:?} has more than two {what}", part.parts()))),
    }
}

/// Heights `x+y` and `x−y` of each shape `(x, y)`.
pub fn psi(o: &OscillatingTableau) -> Result<DyckPair> {
    let xy = o.shapes().iter().map(|s| two_parts(s, "rows")).collect::<Result<Vec<_>>>()?;
    Ok(pair_from_two_rows(&xy))
}

/// As [`psi`] on conjugate shapes.
pub fn psibar(o: &OscillatingTableau) -> Result<DyckPair> {
    let xy = o
        .shapes()
        .iter()
        .map(|s| two_parts(&s.conjugate(), "columns"))
        .collect::<Result<Vec<_>>>()?;
    Ok(pair_from_two_rows(&xy))
}

fn shapes_from_pair(pair: &DyckPair) -> Result<Vec<(u32, u32)>> {
    let (hp, hq) = (pair.p.heights(0), pair.q.heights(0));
    hp.iter()
        .zip(&hq)
        .map(|(&a, &b)| {
            if (a + b) % 2 != 0 || a < b || b < 0 {
                return Err(Error::InvalidPath(format!("heights ({a}, {b}) do not encode a shape")));
            }
            Ok((((a + b) / 2) as u32, ((a - b) / 2) as u32))
        })
        .collect()
}

fn part(x: u32, y: u32) -> Partition {
    Partition::new([x, y].into_iter().filter(|&v| v > 0).collect()).expect("x >= y >= 0")
}

pub fn psi_inv(pair: &DyckPair) -> Result<OscillatingTableau> {
    let shapes = shapes_from_pair(pair)?.into_iter().map(|(x, y)| part(x, y)).collect();
    OscillatingTableau::new(shapes)
}

pub fn psibar_inv(pair: &DyckPair) -> Result<OscillatingTableau> {
    let shapes = shapes_from_pair(pair)?
        .into_iter()
        .map(|(x, y)| part(x, y).conjugate())
        .collect();
    OscillatingTableau::new(shapes)
}

fn check_block(start: i32, s_start: i32, steps: &StepWord) -> Result<()> {
    let h = steps.heights(start);
    if let Some(k) = (0..h.len()).find(|&k| h[k] < 0 || h[k] > s_start + k as i32) {
        return Err(Error::InvalidPath(format!(
            "segment leaves the region between the axis and S at offset {k}"
        )));
    }
    Ok(())
}

fn rotate_left(w: &[Step]) -> Vec<Step> {
    let mut out = w[1..].to_vec();
    out.push(w[0]);
    out
}

fn rotate_right(w: &[Step]) -> Vec<Step> {
    let mut out = vec![w[w.len() - 1]];
    out.extend_from_slice(&w[..w.len() - 1]);
    out
}

/// `α(R)` for a segment `R` starting at height `start`, lying between the
/// x-axis and a rising chain `S` that starts at height `s_start`.
pub fn alpha(s_start: i32, start: i32, r: &StepWord) -> Result<StepWord> {
    check_block(start, s_start, r)?;
    Ok(alpha_word(start, r))
}

pub(crate) fn alpha_word(start: i32, r: &StepWord) -> StepWord {
    let w = r.steps();
    if w.is_empty() {
        return r.clone();
    }
    let h = r.heights(start);
    if w[0] == Step::D {
        return StepWord(rotate_left(w));
    }
    match (1..h.len()).find(|&k| h[k] == 0) {
        None => StepWord(rotate_left(w)),
        Some(l) => {
            let mut v = w.to_vec();
            v[0] = Step::D;
            v[l - 1] = Step::U;
            StepWord(rotate_left(&v))
        }
    }
}

/// Inverse of [`alpha`]. The zero test in the third case reads the heights
/// of the input path.
pub fn beta(s_start: i32, start: i32, r: &StepWord) -> Result<StepWord> {
    check_block(start, s_start, r)?;
    Ok(beta_word(start, r))
}

pub(crate) fn beta_word(start: i32, r: &StepWord) -> StepWord {
    let v = r.steps();
    let m = v.len();
    if m == 0 {
        return r.clone();
    }
    if v[m - 1] == Step::U {
        return StepWord(rotate_right(v));
    }
    let h = r.heights(start);
    match (0..m).rev().find(|&k| h[k] == 0) {
        None => StepWord(rotate_right(v)),
        Some(l) => {
            let mut w = v.to_vec();
            w[m - 1] = Step::U;
            w[l] = Step::D;
            StepWord(rotate_right(&w))
        }
    }
}

/// A maximal run of equal steps of `P`, spanning `[from, to)` in step
/// positions (0-indexed), equivalently abscissas `from..=to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Chain {
    pub step: Step,
    pub from: usize,
    pub to: usize,
}

pub fn chain_decomposition(p: &StepWord) -> Vec<Chain> {
    let mut out: Vec<Chain> = Vec::new();
    for (i, &s) in p.steps().iter().enumerate() {
        match out.last_mut() {
            Some(c) if c.step == s => c.to = i + 1,
            _ => out.push(Chain { step: s, from: i, to: i + 1 }),
        }
    }
    out
}

fn check_symmetric(pair: &DyckPair) -> Result<()> {
    if !pair.is_symmetric() {
        return Err(Error::InvalidPath("theta needs a symmetric pair".into()));
    }
    Ok(())
}

fn blockwise(pair: &DyckPair, rewrite: fn(i32, &StepWord) -> StepWord) -> DyckPair {
    let chains = chain_decomposition(&pair.p);
    let hq = pair.q.heights(0);
    let q = pair.q.steps();
    let ups: Vec<&Chain> = chains.iter().filter(|c| c.step == Step::U).collect();
    let rewritten: Vec<StepWord> = ups
        .iter()
        .map(|c| rewrite(hq[c.from], &StepWord(q[c.from..c.to].to_vec())))
        .collect();
    let k = ups.len();
    let mut out = Vec::with_capacity(q.len());
    for (i, word) in rewritten.iter().enumerate() {
        out.extend_from_slice(word.steps());
        out.extend_from_slice(rewritten[k - 1 - i].mirrored().steps());
    }
    DyckPair {
        p: pair.p.clone(),
        q: StepWord(out),
    }
}

/// `Q' = α(U_1)V'_1 ⋯ α(U_k)V'_k`, with `V'_i` the mirror image of
/// `α(U_{k+1−i})`; `P` is kept.
pub fn theta(pair: &DyckPair) -> Result<DyckPair> {
    check_symmetric(pair)?;
    let out = blockwise(pair, alpha_word);
    debug_assert!(DyckPair::new(out.p.clone(), out.q.clone()).is_ok());
    Ok(out)
}

pub fn theta_inv(pair: &DyckPair) -> Result<DyckPair> {
    check_symmetric(pair)?;
    Ok(blockwise(pair, beta_word))
}

/// Dyck paths of length `2n` in lexicographic order (`U < D`).
pub fn dyck_paths(n: usize) -> Vec<StepWord> {
    let mut out = Vec::new();
    let mut w = Vec::with_capacity(2 * n);
    fn rec(n2: usize, h: usize, w: &mut Vec<Step>, out: &mut Vec<StepWord>) {
        if w.len() == n2 {
            out.push(StepWord(w.clone()));
            return;
        }
        if h < n2 - w.len() {
            w.push(Step::U);
            rec(n2, h + 1, w, out);
            w.pop();
        }
        if h > 0 {
            w.push(Step::D);
            rec(n2, h - 1, w, out);
            w.pop();
        }
    }
    rec(2 * n, 0, &mut w, &mut out);
    out
}

/// Nonnegative paths of `n` steps from height 0 (any end height).
fn nonneg_prefixes(n: usize) -> Vec<StepWord> {
    let mut out = Vec::new();
    fn rec(n: usize, h: i32, w: &mut Vec<Step>, out: &mut Vec<StepWord>) {
        if w.len() == n {
            out.push(StepWord(w.clone()));
            return;
        }
        w.push(Step::U);
        rec(n, h + 1, w, out);
        w.pop();
        if h > 0 {
            w.push(Step::D);
            rec(n, h - 1, w, out);
            w.pop();
        }
    }
    rec(n, 0, &mut Vec::new(), &mut out);
    out
}

fn symmetric_closure(half: &StepWord) -> StepWord {
    let mut w = half.0.clone();
    w.extend_from_slice(half.mirrored().steps());
    StepWord(w)
}

/// All symmetric noncrossing Dyck pairs of length `2n`.
pub fn symmetric_pairs(n: usize) -> Vec<DyckPair> {
    let halves = nonneg_prefixes(n);
    let heights: Vec<Vec<i32>> = halves.iter().map(|h| h.heights(0)).collect();
    let mut out = Vec::new();
    for (i, p) in halves.iter().enumerate() {
        for (j, q) in halves.iter().enumerate() {
            if heights[i].iter().zip(&heights[j]).all(|(a, b)| a >= b) {
                out.push(DyckPair {
                    p: symmetric_closure(p),
                    q: symmetric_closure(q),
                });
            }
        }
    }
    out
}

/// All noncrossing Dyck pairs of length `2n`.
pub fn all_pairs(n: usize) -> Vec<DyckPair> {
    let paths = dyck_paths(n);
    let heights: Vec<Vec<i32>> = paths.iter().map(|p| p.heights(0)).collect();
    let mut out = Vec::new();
    for (i, p) in paths.iter().enumerate() {
        for (j, q) in paths.iter().enumerate() {
            if heights[i].iter().zip(&heights[j]).all(|(a, b)| a >= b) {
                out.push(DyckPair { p: p.clone(), q: q.clone() });
            }
        }
    }
    out
}
