//! Exhaustive generators for involution classes and the Motzkin numbers
//! they are counted by.
//!
//! Involutions are built natively, one position at a time: each open
//! position either becomes a fixed point or opens a 2-cycle with a later
//! open position. Zigzag and descent-set constraints are checked on each
//! adjacent pair as soon as both values are known, and pattern avoidance
//! is checked on every prefix, so dead branches are cut early.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{PatternPlan, Permutation};

/// `M_n` from the closed form `Σ_k n! / (k! (k+1)! (n−2k)!)`.
pub fn motzkin(n: usize) -> BigUint {
    let mut fact = vec![BigUint::one()];
    for i in 1..=n + 1 {
        let next = &fact[i - 1] * BigUint::from(i);
        fact.push(next);
    }
    let total = (0..=n / 2)
        .map(|k| &fact[n] / (&fact[k] * &fact[k + 1] * &fact[n - 2 * k]))
        .sum();
    debug_assert!(n > 40 || total == motzkin_recurrence(n)[n]);
    total
}

/// `M_0..=M_n` from `M_{m+1} = M_m + Σ_{k<m} M_k M_{m−1−k}`.
pub fn motzkin_recurrence(n: usize) -> Vec<BigUint> {
    let mut m = vec![BigUint::one()];
    for i in 0..n {
        let mut next = m[i].clone();
        for k in 0..i {
            next += &m[k] * &m[i - 1 - k];
        }
        m.push(next);
    }
    m
}

/// `M_i` as a signed integer, zero for negative `i`, so that formulas such
/// as `M_{n+1} − 2M_{n−1} + M_{n−3}` can be evaluated for small `n`.
pub fn motzkin_at(i: i64) -> BigInt {
    if i < 0 {
        BigInt::zero()
    } else {
        BigInt::from(motzkin(i as usize))
    }
}

/// Number of involutions of `[n]`, `i(n) = i(n−1) + (n−1) i(n−2)`.
pub fn involution_count(n: usize) -> BigUint {
    let (mut a, mut b) = (BigUint::one(), BigUint::one());
    for k in 2..=n {
        let c = &b + BigUint::from(k - 1) * &a;
        a = b;
        b = c;
    }
    b
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BaseClass {
    /// All involutions.
    I,
    /// Alternating involutions, `π₁ < π₂ > π₃ < ⋯`.
    AI,
    /// Reverse alternating involutions, `π₁ > π₂ < π₃ > ⋯`.
    RAI,
    /// All permutations.
    S,
}

impl BaseClass {
    pub fn is_involutive(self) -> bool {
        self != BaseClass::S
    }
}

impl fmt::Display for BaseClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BaseClass::I => "I",
            BaseClass::AI => "AI",
            BaseClass::RAI => "RAI",
            BaseClass::S => "S",
        };
        f.write_str(s)
    }
}

impl FromStr for BaseClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<BaseClass> {
        match s.to_ascii_lowercase().as_str() {
            "i" | "inv" => Ok(BaseClass::I),
            "ai" => Ok(BaseClass::AI),
            "rai" => Ok(BaseClass::RAI),
            "s" | "perm" => Ok(BaseClass::S),
            _ => Err(Error::Parse {
                input: s.into(),
                reason: "expected one of inv, ai, rai, perm".into(),
            }),
        }
    }
}

/// A set of permutations of one length: a base class, forbidden patterns,
/// fixed values `π_pos = val` and optionally an exact descent set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSpec {
    pub base: BaseClass,
    pub n: usize,
    pub avoid: Vec<Permutation>,
    pub fixed: Vec<(usize, u32)>,
    pub descents: Option<BTreeSet<usize>>,
}

impl ClassSpec {
    pub fn new(base: BaseClass, n: usize) -> ClassSpec {
        ClassSpec {
            base,
            n,
            avoid: Vec::new(),
            fixed: Vec::new(),
            descents: None,
        }
    }

    pub fn avoiding(mut self, pattern: Permutation) -> ClassSpec {
        self.avoid.push(pattern);
        self
    }

    pub fn with_fixed(mut self, pos: usize, val: u32) -> ClassSpec {
        self.fixed.push((pos, val));
        self
    }

    pub fn with_descents(mut self, des: BTreeSet<usize>) -> ClassSpec {
        self.descents = Some(des);
        self
    }

    /// Membership test, independent of the generator.
    pub fn admits(&self, p: &Permutation) -> bool {
        if p.len() != self.n {
            return false;
        }
        let base_ok = match self.base {
            BaseClass::S => true,
            BaseClass::I => p.is_involution(),
            BaseClass::AI => p.is_involution() && p.is_alternating(),
            BaseClass::RAI => p.is_involution() && p.is_reverse_alternating(),
        };
        base_ok
            && self
                .fixed
                .iter()
                .all(|&(pos, val)| pos >= 1 && pos <= self.n && p.at(pos) == val)
            && self.descents.as_ref().is_none_or(|d| p.descents() == *d)
            && self.avoid.iter().all(|pat| p.avoids(pat))
    }

    /// Rejects classes beyond the desk-scale limits.
    pub fn check_feasible(&self, limits: &Limits) -> Result<()> {
        let (limit, estimate) = if self.base.is_involutive() {
            (limits.max_involution_len, format!("i({}) = {} involutions", self.n, involution_count(self.n)))
        } else {
            (limits.max_permutation_len, format!("{}! = {} permutations", self.n, factorial(self.n)))
        };
        if self.n > limit {
            return Err(Error::Infeasible {
                name: format!("{}_{}", self.base, self.n),
                requested: self.n as u32,
                limit: limit as u32,
                estimate,
            });
        }
        Ok(())
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.base, self.n)?;
        if !self.avoid.is_empty() {
            let pats: Vec<String> = self.avoid.iter().map(ToString::to_string).collect();
            write!(f, "({})", pats.join(","))?;
        }
        for (pos, val) in &self.fixed {
            write!(f, " π{pos}={val}")?;
        }
        if let Some(d) = &self.descents {
            write!(f, " Des={d:?}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_involution_len: usize,
    pub max_permutation_len: usize,
}

impl Default for Limits {
    fn default() -> Limits {
        Limits {
            max_involution_len: 16,
            max_permutation_len: 12,
        }
    }
}

impl Limits {
    pub fn unbounded() -> Limits {
        Limits {
            max_involution_len: usize::MAX,
            max_permutation_len: usize::MAX,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Rel {
    Any,
    Asc,
    Desc,
}

struct Search {
    n: usize,
    involutive: bool,
    rel: Vec<Rel>,
    want: Vec<Option<u32>>,
    plans: Vec<PatternPlan>,
    word: Vec<u32>,
    used: Vec<bool>,
}

impl Search {
    /// `None` when the constraints are contradictory and the set is empty.
    fn new(spec: &ClassSpec) -> Option<Search> {
        let n = spec.n;
        let mut rel = vec![Rel::Any; n];
        // rel[i] relates positions i and i + 1 (0-indexed), i.e. descent i + 1.
        for (i, r) in rel.iter_mut().enumerate().take(n.saturating_sub(1)) {
            *r = match spec.base {
                BaseClass::AI if i % 2 == 0 => Rel::Asc,
                BaseClass::AI => Rel::Desc,
                BaseClass::RAI if i % 2 == 0 => Rel::Desc,
                BaseClass::RAI => Rel::Asc,
                _ => Rel::Any,
            };
        }
        if let Some(des) = &spec.descents {
            if des.iter().any(|&d| d == 0 || d >= n) {
                return None;
            }
            for (i, slot) in rel.iter_mut().enumerate().take(n.saturating_sub(1)) {
                let r = if des.contains(&(i + 1)) { Rel::Desc } else { Rel::Asc };
                if *slot != Rel::Any && *slot != r {
                    return None;
                }
                *slot = r;
            }
        }
        let mut want = vec![None; n];
        for &(pos, val) in &spec.fixed {
            if pos == 0 || pos > n || val == 0 || val as usize > n {
                return None;
            }
            match want[pos - 1] {
                Some(w) if w != val => return None,
                _ => want[pos - 1] = Some(val),
            }
        }
        if spec.avoid.iter().any(|p| p.is_empty()) {
            return None;
        }
        let plans = spec.avoid.iter().map(|p| PatternPlan::new(p.word())).collect();
        Some(Search {
            n,
            involutive: spec.base.is_involutive(),
            rel,
            want,
            plans,
            word: vec![0; n],
            used: vec![false; n + 1],
        })
    }

    fn pair_ok(&self, i: usize) -> bool {
        let (a, b) = (self.word[i], self.word[i + 1]);
        if a == 0 || b == 0 {
            return true;
        }
        match self.rel[i] {
            Rel::Any => true,
            Rel::Asc => a < b,
            Rel::Desc => a > b,
        }
    }

    /// Checks position `i` once the prefix `word[..=i]` is complete.
    fn prefix_ok(&self, i: usize) -> bool {
        if i > 0 && !self.pair_ok(i - 1) {
            return false;
        }
        let prefix = &self.word[..=i];
        !self.plans.iter().any(|plan| occurs_ending_at_last(prefix, plan))
    }

    /// Candidate values for open position `i`, ascending.
    fn candidates(&self, i: usize) -> Vec<u32> {
        let free = |v: u32| match self.want[i] {
            Some(w) => w == v,
            None => true,
        };
        if self.involutive {
            let mut out = Vec::new();
            for j in i..self.n {
                if self.word[j] != 0 {
                    continue;
                }
                let v = j as u32 + 1;
                let partner_ok = j == i || self.want[j].is_none_or(|w| w == i as u32 + 1);
                if free(v) && partner_ok {
                    out.push(v);
                }
            }
            out
        } else {
            (1..=self.n as u32).filter(|&v| !self.used[v as usize] && free(v)).collect()
        }
    }

    fn place(&mut self, i: usize, v: u32) -> bool {
        self.word[i] = v;
        if self.involutive {
            let j = v as usize - 1;
            self.word[j] = i as u32 + 1;
            // An early look at the partner's neighbours.
            if j > i && ((j > 0 && !self.pair_ok(j - 1)) || (j + 1 < self.n && !self.pair_ok(j))) {
                return false;
            }
        } else {
            self.used[v as usize] = true;
        }
        true
    }

    fn unplace(&mut self, i: usize, v: u32) {
        self.word[i] = 0;
        if self.involutive {
            self.word[v as usize - 1] = 0;
        } else {
            self.used[v as usize] = false;
        }
    }

    fn run<F>(&mut self, i: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[u32]) -> ControlFlow<()>,
    {
        if i == self.n {
            return visit(&self.word);
        }
        if self.word[i] != 0 {
            if self.prefix_ok(i) {
                return self.run(i + 1, visit);
            }
            return ControlFlow::Continue(());
        }
        for v in self.candidates(i) {
            if self.place(i, v) && self.prefix_ok(i) {
                if let ControlFlow::Break(()) = self.run(i + 1, visit) {
                    self.unplace(i, v);
                    return ControlFlow::Break(());
                }
            }
            self.unplace(i, v);
        }
        ControlFlow::Continue(())
    }

    /// Runs the subtree where position 1 takes value `first`.
    fn run_from<F>(&mut self, first: u32, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[u32]) -> ControlFlow<()>,
    {
        let flow = if self.place(0, first) && self.prefix_ok(0) {
            self.run(1, visit)
        } else {
            ControlFlow::Continue(())
        };
        self.unplace(0, first);
        flow
    }
}

/// Whether `text` has an occurrence of the planned pattern that uses its
/// last entry.
fn occurs_ending_at_last(text: &[u32], plan: &PatternPlan) -> bool {
    let m = plan.len();
    if m > text.len() {
        return false;
    }
    let last = text.len() - 1;
    let mut values = Vec::with_capacity(m);
    extend(text, plan, 0, last, &mut values)
}

fn extend(text: &[u32], plan: &PatternPlan, start: usize, last: usize, values: &mut Vec<u32>) -> bool {
    let k = values.len();
    let m = plan.len();
    if k == m - 1 {
        return plan.fits(k, text[last], values);
    }
    let stop = last - (m - 1 - k);
    for pos in start..=stop {
        let v = text[pos];
        if !plan.fits(k, v, values) {
            continue;
        }
        values.push(v);
        if extend(text, plan, pos + 1, last, values) {
            return true;
        }
        values.pop();
    }
    false
}

/// Streams the members of `spec` in lexicographic order until `visit`
/// breaks.
pub fn for_each<F>(spec: &ClassSpec, mut visit: F)
where
    F: FnMut(&Permutation) -> ControlFlow<()>,
{
    let Some(mut search) = Search::new(spec) else {
        return;
    };
    let mut adapter = |w: &[u32]| visit(&Permutation::from_vec_unchecked(w.to_vec()));
    let _ = search.run(0, &mut adapter);
}

/// All members of `spec`, in lexicographic order.
pub fn generate(spec: &ClassSpec) -> Vec<Permutation> {
    let mut out = Vec::new();
    for_each(spec, |p| {
        out.push(p.clone());
        ControlFlow::Continue(())
    });
    out
}

fn shards(spec: &ClassSpec) -> Option<(Search, Vec<u32>)> {
    let search = Search::new(spec)?;
    if spec.n == 0 {
        return Some((search, Vec::new()));
    }
    let firsts = search.candidates(0);
    Some((search, firsts))
}

/// Same output as [`generate`], computed with one worker per value of
/// `π₁`; shards are concatenated in order.
pub fn generate_par(spec: &ClassSpec) -> Vec<Permutation> {
    if spec.n == 0 {
        return generate(spec);
    }
    let Some((_, firsts)) = shards(spec) else {
        return Vec::new();
    };
    let parts: Vec<Vec<Permutation>> = firsts
        .par_iter()
        .map(|&first| {
            let mut search = Search::new(spec).expect("constraints already checked");
            let mut out = Vec::new();
            let _ = search.run_from(first, &mut |w: &[u32]| {
                out.push(Permutation::from_vec_unchecked(w.to_vec()));
                ControlFlow::Continue(())
            });
            out
        })
        .collect();
    parts.into_iter().flatten().collect()
}

/// `|spec|` without materialising the set.
pub fn count_avoiders(spec: &ClassSpec) -> BigUint {
    let Some((mut search, firsts)) = shards(spec) else {
        return BigUint::zero();
    };
    if spec.n == 0 {
        let mut c = 0u64;
        let _ = search.run(0, &mut |_: &[u32]| {
            c += 1;
            ControlFlow::Continue(())
        });
        return BigUint::from(c);
    }
    firsts
        .par_iter()
        .map(|&first| {
            let mut search = Search::new(spec).expect("constraints already checked");
            let mut c = 0u64;
            let _ = search.run_from(first, &mut |_: &[u32]| {
                c += 1;
                ControlFlow::Continue(())
            });
            BigUint::from(c)
        })
        .sum()
}

/// The auxiliary families of 1234-avoiding involutions used to count
/// `RAI_{2n}(1234)` by the position of its maximum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `𝒫_{2n−2}`: length `2n−2`, `Des = {1} ∪ {2,4,…,2n−4}`.
    P,
    /// `𝒬_{2n}`: length `2n`, `Des = {1} ∪ {4,6,…,2n−2}`.
    Q,
    /// `ℛ_{2n+1}`: length `2n+1`, `Des = {3,5,…,2n−1} ∪ {2n}`.
    R,
    /// `ℛʳᶜ_{2n+1}`: length `2n+1`, `Des = {1} ∪ {2,4,…,2n−2}`.
    Rrc,
    /// `𝒪_{2n}`: `RAI_{2n}(1234)` with `π₃ = 2n`.
    O,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::P, Family::Q, Family::R, Family::Rrc, Family::O];

    pub fn name(self) -> &'static str {
        match self {
            Family::P => "P",
            Family::Q => "Q",
            Family::R => "R",
            Family::Rrc => "Rrc",
            Family::O => "O",
        }
    }

    /// Permutation length for index `n`.
    pub fn length(self, n: usize) -> usize {
        match self {
            Family::P => (2 * n).saturating_sub(2),
            Family::Q | Family::O => 2 * n,
            Family::R | Family::Rrc => 2 * n + 1,
        }
    }

    /// The index `n` whose members have length `len`.
    pub fn index_of_length(self, len: usize) -> Option<usize> {
        match self {
            Family::P if len.is_multiple_of(2) => Some(len / 2 + 1),
            Family::Q | Family::O if len.is_multiple_of(2) => Some(len / 2),
            Family::R | Family::Rrc if len % 2 == 1 => Some((len - 1) / 2),
            _ => None,
        }
    }

    pub fn spec(self, n: usize) -> ClassSpec {
        let len = self.length(n);
        let base = if self == Family::O { BaseClass::RAI } else { BaseClass::I };
        let spec = ClassSpec::new(base, len).avoiding(Permutation::identity(4));
        let evens = |from: usize, to: usize| (from..=to).filter(|d| d % 2 == 0).collect::<BTreeSet<usize>>();
        let odds = |from: usize, to: usize| (from..=to).filter(|d| d % 2 == 1).collect::<BTreeSet<usize>>();
        let des = match self {
            Family::P => {
                let mut d = evens(2, (2 * n).saturating_sub(4));
                d.insert(1);
                d
            }
            Family::Q => {
                let mut d = evens(4, (2 * n).saturating_sub(2));
                d.insert(1);
                d
            }
            Family::R => {
                let mut d = odds(3, (2 * n).saturating_sub(1));
                d.insert(2 * n);
                d
            }
            Family::Rrc => {
                let mut d = evens(2, (2 * n).saturating_sub(2));
                d.insert(1);
                d
            }
            Family::O => return spec.with_fixed(3, len as u32),
        };
        spec.with_descents(des)
    }

    pub fn contains(self, p: &Permutation) -> bool {
        self.index_of_length(p.len())
            .is_some_and(|n| self.spec(n).admits(p))
    }

    /// Closed-form cardinality at index `n`.
    pub fn expected(self, n: usize) -> BigInt {
        let n = n as i64;
        match self {
            Family::P | Family::R | Family::Rrc => motzkin_at(n) - motzkin_at(n - 1) - motzkin_at(n - 2),
            Family::Q => motzkin_at(n - 1),
            Family::O => motzkin_at(n) - motzkin_at(n - 1),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse {
                input: s.into(),
                reason: "expected one of P, Q, R, Rrc, O".into(),
            })
    }
}
