//! Exhaustive verification targets: each computes both sides of a family of
//! identities or bijection claims for every size up to `max_n` and reports
//! them row by row.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use serde_json::json;

use crate::enumeration::{count_avoiders, generate_par, motzkin_at, BaseClass, ClassSpec, Family};
use crate::error::{Error, Result};
use crate::fillings::{symmetric_transversals, transversal_contains, transversal_peaks, Transversal, YoungDiagram};
use crate::matchings::{all_matchings, crossing_nesting, phi, phi_inv, valleys};
use crate::paths::{ab_sets, alpha, beta, pair_ab_sets, symmetric_pairs, theta, theta_inv, DyckPair};
use crate::perm::{standardize, Permutation};
use crate::pipeline::{phi_involution, phi_involution_inv, psi_cap, psi_cap_inv};
use crate::step::{Step, StepWord};
use crate::tableaux::{gamma, gamma_inv, west_f, west_f_inv};

fn big<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match i64::try_from(v) {
        Ok(x) => s.serialize_i64(x),
        Err(_) => s.serialize_str(&v.to_string()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub n: usize,
    pub label: String,
    #[serde(serialize_with = "big")]
    pub expected: BigInt,
    #[serde(serialize_with = "big")]
    pub computed: BigInt,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub name: String,
    pub parameters: serde_json::Value,
    pub rows: Vec<ReportRow>,
    pub pass: bool,
    pub wall_time_ms: u128,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &ReportRow> {
        self.rows.iter().filter(|r| !r.pass)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    Table1,
    Conj1,
    Conj2,
    Conj3,
    LemmaF,
    LemmaR,
    LemmaP,
    LemmaQ,
    EqO,
    PsiBijection,
    PhiBijection,
    MatchingSuite,
    PathSuite,
}

impl Target {
    pub const ALL: [Target; 13] = [
        Target::Table1,
        Target::Conj1,
        Target::Conj2,
        Target::Conj3,
        Target::LemmaF,
        Target::LemmaR,
        Target::LemmaP,
        Target::LemmaQ,
        Target::EqO,
        Target::PsiBijection,
        Target::PhiBijection,
        Target::MatchingSuite,
        Target::PathSuite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::Table1 => "table1",
            Target::Conj1 => "conj1",
            Target::Conj2 => "conj2",
            Target::Conj3 => "conj3",
            Target::LemmaF => "lemma_f",
            Target::LemmaR => "lemma_R",
            Target::LemmaP => "lemma_P",
            Target::LemmaQ => "lemma_Q",
            Target::EqO => "eq_O",
            Target::PsiBijection => "psi_bijection",
            Target::PhiBijection => "phi_bijection",
            Target::MatchingSuite => "matching_suite",
            Target::PathSuite => "path_suite",
        }
    }

    /// What `max_n` measures for this target.
    pub fn parameter(self) -> &'static str {
        match self {
            Target::Conj3 | Target::PhiBijection => "permutation length n",
            Target::PsiBijection => "number of columns",
            Target::MatchingSuite => "matchings of [2n]",
            Target::PathSuite => "pairs of length 2n",
            _ => "Motzkin index n",
        }
    }

    /// `max_n` used by `selftest` and the acceptance run.
    pub fn default_max(self) -> usize {
        match self {
            Target::Table1 | Target::Conj1 | Target::LemmaF => 6,
            Target::Conj2 => 5,
            Target::Conj3 => 12,
            Target::LemmaR | Target::LemmaP | Target::LemmaQ | Target::EqO => 6,
            Target::PsiBijection => 7,
            Target::PhiBijection => 10,
            Target::MatchingSuite => 5,
            Target::PathSuite => 8,
        }
    }

    /// Largest accepted `max_n`, without and with `--slow`.
    pub fn limit(self, slow: bool) -> usize {
        let (fast, slow_limit) = match self {
            Target::Table1 => (7, 8),
            Target::Conj1 => (7, 8),
            Target::Conj2 => (6, 7),
            Target::Conj3 => (14, 16),
            Target::LemmaF => (8, 8),
            Target::LemmaR | Target::LemmaP | Target::LemmaQ | Target::EqO => (7, 8),
            Target::PsiBijection => (8, 9),
            Target::PhiBijection => (10, 12),
            Target::MatchingSuite => (5, 6),
            Target::PathSuite => (9, 10),
        };
        if slow {
            slow_limit
        } else {
            fast
        }
    }

    fn estimate(self, max_n: usize) -> String {
        let n = max_n;
        match self {
            Target::Table1 => format!("alternating involutions up to length {}", 2 * n + 2),
            Target::Conj3 | Target::PhiBijection => {
                format!("i({n}) = {} involutions per pattern", crate::enumeration::involution_count(n))
            }
            Target::PsiBijection => format!("{} self-conjugate diagrams, largest {n}x{n}", 1u64 << n.min(63)),
            Target::MatchingSuite => format!("(2n−1)!! = {} matchings", (1..=n).map(|k| 2 * k as u128 - 1).product::<u128>()),
            Target::PathSuite => format!("symmetric pairs of length {}", 2 * n),
            _ => format!("involutions up to length {}", 2 * n + 1),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Target> {
        Target::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownTarget(s.into()))
    }
}

pub fn verify(name: &str, max_n: usize) -> Result<VerificationReport> {
    verify_target(name.parse()?, max_n, false)
}

pub fn verify_target(target: Target, max_n: usize, slow: bool) -> Result<VerificationReport> {
    let limit = target.limit(slow);
    if max_n > limit {
        return Err(Error::Infeasible {
            name: target.name().into(),
            requested: max_n as u32,
            limit: limit as u32,
            estimate: target.estimate(max_n),
        });
    }
    let start = Instant::now();
    let rows = match target {
        Target::Table1 => table1(max_n),
        Target::Conj1 => conj1(max_n),
        Target::Conj2 => conj2(max_n),
        Target::Conj3 => conj3(max_n),
        Target::LemmaF => lemma_f(max_n),
        Target::LemmaR => lemma_r(max_n),
        Target::LemmaP => lemma_p(max_n),
        Target::LemmaQ => family_rows(Family::Q, 1, max_n),
        Target::EqO => eq_o(max_n),
        Target::PsiBijection => psi_bijection(max_n),
        Target::PhiBijection => phi_bijection(max_n),
        Target::MatchingSuite => matching_suite(max_n),
        Target::PathSuite => path_suite(max_n),
    };
    let pass = rows.iter().all(|r| r.pass);
    Ok(VerificationReport {
        name: target.name().into(),
        parameters: json!({ "max_n": max_n, "measures": target.parameter(), "slow": slow }),
        rows,
        pass,
        wall_time_ms: start.elapsed().as_millis(),
    })
}

fn row(n: usize, label: impl Into<String>, expected: impl Into<BigInt>, computed: impl Into<BigInt>) -> ReportRow {
    let (expected, computed) = (expected.into(), computed.into());
    ReportRow {
        n,
        label: label.into(),
        pass: expected == computed,
        expected,
        computed,
    }
}

/// `computed` counts the inputs satisfying a property; all must.
fn all_row(n: usize, label: impl Into<String>, total: usize, good: usize) -> ReportRow {
    row(n, label, total, good)
}

/// Image-set equality for a map: `computed` is the number of distinct
/// images, and the row passes only if they are exactly `target` and the map
/// is injective on `sources`.
fn image_row<T: Ord + Clone>(n: usize, label: impl Into<String>, sources: usize, images: &[T], target: &BTreeSet<T>) -> ReportRow {
    let distinct: BTreeSet<T> = images.iter().cloned().collect();
    let mut r = row(n, label, target.len(), distinct.len());
    r.pass = images.len() == sources && distinct.len() == sources && distinct == *target;
    r
}

fn p(s: &str) -> Permutation {
    s.parse().expect("literal pattern")
}

fn class_count(base: BaseClass, len: usize, pat: &Permutation) -> BigInt {
    BigInt::from(count_avoiders(&ClassSpec::new(base, len).avoiding(pat.clone())))
}

type Formula = fn(i64) -> BigInt;

fn m(n: i64) -> BigInt {
    motzkin_at(n)
}

/// One displayed identity: classes `base_{2n+d}(pattern)` sharing a formula.
struct Identity {
    classes: &'static [(BaseClass, i64, &'static str)],
    formula: Formula,
    formula_text: &'static str,
    first_n: usize,
}

fn identity_rows(ids: &[Identity], max_n: usize) -> Vec<ReportRow> {
    let mut rows = Vec::new();
    for id in ids {
        for n in id.first_n..=max_n {
            let expected = (id.formula)(n as i64);
            for &(base, d, pat) in id.classes {
                let len = (2 * n as i64 + d) as usize;
                let computed = class_count(base, len, &p(pat));
                let label = format!("|{base}_{len}({pat})| = {}", id.formula_text);
                rows.push(row(n, label, expected.clone(), computed));
            }
        }
    }
    rows
}

use BaseClass::{AI, RAI};

fn table1(max_n: usize) -> Vec<ReportRow> {
    let ids = [
        Identity {
            classes: &[(RAI, 0, "4321"), (AI, 0, "1234")],
            formula: |n| m(n),
            formula_text: "M_n",
            first_n: 1,
        },
        Identity {
            classes: &[(RAI, -1, "1234"), (AI, -1, "4321"), (RAI, -1, "4321"), (AI, -1, "1234")],
            formula: |n| m(n) - m(n - 2),
            formula_text: "M_n - M_{n-2}",
            first_n: 1,
        },
        // At n = 1 both classes hold one permutation while the formula
        // gives 0, so this identity is read from n = 2.
        Identity {
            classes: &[(RAI, 0, "1234"), (AI, 0, "4321")],
            formula: |n| m(n + 1) - 2 * m(n - 1) + m(n - 3),
            formula_text: "M_{n+1} - 2M_{n-1} + M_{n-3}",
            first_n: 2,
        },
        Identity {
            classes: &[(RAI, 0, "3412"), (AI, 2, "3412"), (AI, 1, "3412"), (RAI, 1, "3412")],
            formula: |n| m(n),
            formula_text: "M_n",
            first_n: 1,
        },
        Identity {
            classes: &[(AI, 0, "1243"), (AI, 0, "2143"), (AI, 0, "2134")],
            formula: |n| m(n),
            formula_text: "M_n",
            first_n: 1,
        },
        Identity {
            classes: &[(AI, -1, "2134"), (RAI, -1, "1243")],
            formula: |n| m(n) - m(n - 2),
            formula_text: "M_n - M_{n-2}",
            first_n: 1,
        },
        Identity {
            classes: &[(AI, 1, "1243"), (AI, 1, "2143"), (RAI, 1, "2143"), (RAI, 1, "2134")],
            formula: |n| m(n),
            formula_text: "M_n",
            first_n: 1,
        },
        Identity {
            classes: &[(RAI, 0, "2143")],
            formula: |n| m(n - 1),
            formula_text: "M_{n-1}",
            first_n: 1,
        },
    ];
    identity_rows(&ids, max_n)
}

fn conj1(max_n: usize) -> Vec<ReportRow> {
    let ids = [Identity {
        classes: &[(RAI, 0, "1243"), (RAI, 0, "2134")],
        formula: |n| m(n),
        formula_text: "M_n",
        first_n: 1,
    }];
    identity_rows(&ids, max_n)
}

fn conj2(max_n: usize) -> Vec<ReportRow> {
    let ids = [
        Identity {
            classes: &[(AI, 0, "1432"), (AI, 0, "3214")],
            formula: |n| m(n),
            formula_text: "M_n",
            first_n: 1,
        },
        Identity {
            classes: &[(AI, -1, "3214"), (RAI, -1, "1432")],
            formula: |n| m(n) - m(n - 2),
            formula_text: "M_n - M_{n-2}",
            first_n: 1,
        },
        Identity {
            classes: &[(RAI, 0, "1432"), (RAI, 0, "3214")],
            formula: |n| m(n),
            formula_text: "M_n",
            first_n: 1,
        },
        Identity {
            classes: &[(AI, 1, "1432"), (RAI, 1, "3214")],
            formula: |n| m(n),
            formula_text: "M_n",
            first_n: 1,
        },
    ];
    identity_rows(&ids, max_n)
}

/// The nonempty patterns `τ` exercised by the prefix-exchange checks.
pub const PREFIX_TAUS: [&str; 5] = ["1", "12", "21", "132", "213"];

fn set_of(base: BaseClass, n: usize, pat: &Permutation) -> Vec<Permutation> {
    generate_par(&ClassSpec::new(base, n).avoiding(pat.clone()))
}

fn map_all<F>(sources: &[Permutation], f: F) -> Vec<Option<Permutation>>
where
    F: Fn(&Permutation) -> Result<Permutation> + Sync,
{
    sources.par_iter().map(|s| f(s).ok()).collect()
}

/// Runs `Φ` over `base_n(321⊕τ)` and compares with `base_n(123⊕τ)`.
fn phi_rows(base: BaseClass, n: usize, tau_text: &str, rows: &mut Vec<ReportRow>) {
    let tau = p(tau_text);
    let from_pat = Permutation::decreasing(3).direct_sum(&tau);
    let to_pat = Permutation::identity(3).direct_sum(&tau);
    let sources = set_of(base, n, &from_pat);
    let target: BTreeSet<Permutation> = set_of(base, n, &to_pat).into_iter().collect();
    let mapped = map_all(&sources, |s| phi_involution(s, &tau));
    let images: Vec<Permutation> = mapped.iter().flatten().cloned().collect();
    rows.push(image_row(n, format!("Φ: {base}_{n}({from_pat}) → {base}_{n}({to_pat})"), sources.len(), &images, &target));
    let peaks_kept = sources
        .iter()
        .zip(&mapped)
        .filter(|(s, img)| img.as_ref().is_some_and(|i| i.peaks() == s.peaks()))
        .count();
    rows.push(all_row(n, format!("Φ keeps Peak on {base}_{n}({from_pat})"), sources.len(), peaks_kept));
    let src_peaks: BTreeMap<BTreeSet<usize>, usize> = multiset(sources.iter().map(Permutation::peaks));
    let tgt_peaks: BTreeMap<BTreeSet<usize>, usize> = multiset(target.iter().map(Permutation::peaks));
    let mut r = row(n, format!("peak multiset of {base}_{n}({from_pat}) = {base}_{n}({to_pat})"), target.len(), sources.len());
    r.pass = r.pass && src_peaks == tgt_peaks;
    rows.push(r);
    let back = images
        .par_iter()
        .zip(sources.par_iter())
        .filter(|(img, s)| phi_involution_inv(img, &tau).ok().as_ref() == Some(*s))
        .count();
    rows.push(all_row(n, format!("Φ⁻¹∘Φ = id on {base}_{n}({from_pat})"), sources.len(), back));
}

fn multiset<T: Ord>(items: impl Iterator<Item = T>) -> BTreeMap<T, usize> {
    let mut out = BTreeMap::new();
    for it in items {
        *out.entry(it).or_insert(0) += 1;
    }
    out
}

fn conj3(max_n: usize) -> Vec<ReportRow> {
    let mut rows = Vec::new();
    for tau_text in PREFIX_TAUS {
        let tau = p(tau_text);
        let inc = Permutation::identity(3).direct_sum(&tau);
        let dec = Permutation::decreasing(3).direct_sum(&tau);
        for n in 1..=max_n {
            let expected = class_count(AI, n, &inc);
            let computed = class_count(AI, n, &dec);
            rows.push(row(n, format!("|AI_{n}({dec})| = |AI_{n}({inc})|"), expected, computed));
            phi_rows(AI, n, tau_text, &mut rows);
        }
    }
    rows
}

fn phi_bijection(max_n: usize) -> Vec<ReportRow> {
    let mut rows = Vec::new();
    for tau_text in PREFIX_TAUS {
        for n in 1..=max_n {
            phi_rows(BaseClass::I, n, tau_text, &mut rows);
        }
    }
    rows
}

fn lemma_f(max_n: usize) -> Vec<ReportRow> {
    let mut rows = Vec::new();
    let (p1234, p1243) = (p("1234"), p("1243"));
    for n in 1..=max_n {
        let len = 2 * n;
        let sources = set_of(RAI, len, &p1243);
        let top_first = generate_par(&ClassSpec::new(RAI, len).avoiding(p1234.clone()).with_fixed(1, len as u32));
        let top_third = generate_par(&ClassSpec::new(RAI, len).avoiding(p1234.clone()).with_fixed(3, len as u32));
        let target: BTreeSet<Permutation> = top_first.iter().chain(&top_third).cloned().collect();
        let images: Vec<Permutation> = map_all(&sources, |s| west_f_inv(s, 4)).into_iter().flatten().collect();
        rows.push(image_row(n, format!("f⁻¹: RAI_{len}(1243) → {{π ∈ RAI_{len}(1234) : π1 = {len} or π3 = {len}}}"), sources.len(), &images, &target));
        let back = images.par_iter().filter(|img| west_f(img, 4).is_ok_and(|b| sources.binary_search(&b).is_ok())).count();
        rows.push(all_row(n, format!("f maps the image back into RAI_{len}(1243)"), images.len(), back));
        rows.push(row(n, format!("|RAI_{len}(1234), π1 = {len}| = M_{{n-1}}"), m(n as i64 - 1), top_first.len()));
        rows.push(row(n, format!("|RAI_{len}(1234), π3 = {len}| = M_n - M_{{n-1}}"), m(n as i64) - m(n as i64 - 1), top_third.len()));
        rows.push(row(n, format!("|RAI_{len}(1243)| = M_n"), m(n as i64), sources.len()));
        if len <= 12 {
            let inv_src = set_of(BaseClass::I, len, &p1234);
            let inv_tgt: BTreeSet<Permutation> = set_of(BaseClass::I, len, &p1243).into_iter().collect();
            let imgs: Vec<Permutation> = map_all(&inv_src, |s| west_f(s, 4)).into_iter().flatten().collect();
            rows.push(image_row(n, format!("f: I_{len}(1234) → I_{len}(1243)"), inv_src.len(), &imgs, &inv_tgt));
        }
    }
    rows
}

fn family_rows(fam: Family, first_n: usize, max_n: usize) -> Vec<ReportRow> {
    (first_n..=max_n)
        .map(|n| {
            let computed = BigInt::from(count_avoiders(&fam.spec(n)));
            let formula = match fam {
                Family::Q => "M_{n-1}",
                Family::O => "M_n - M_{n-1}",
                _ => "M_n - M_{n-1} - M_{n-2}",
            };
            row(n, format!("|{}_{}| = {formula}", fam.name(), fam.length(n)), fam.expected(n), computed)
        })
        .collect()
}

/// The closed forms for P, R and Rʳᶜ are checked from n = 3: at n = 2 each
/// family has one member while `M_2 − M_1 − M_0 = 0`.
const FAMILY_FIRST_N: usize = 3;

fn lemma_r(max_n: usize) -> Vec<ReportRow> {
    let mut rows = family_rows(Family::R, FAMILY_FIRST_N, max_n);
    rows.extend(family_rows(Family::Rrc, FAMILY_FIRST_N, max_n));
    for n in 1..=max_n {
        let r = generate_par(&Family::R.spec(n));
        let rrc: BTreeSet<Permutation> = generate_par(&Family::Rrc.spec(n)).into_iter().collect();
        let images: Vec<Permutation> = r.iter().map(Permutation::reverse_complement).collect();
        rows.push(image_row(n, format!("rc: R_{0} → Rrc_{0}", 2 * n + 1), r.len(), &images, &rrc));
    }
    rows
}

fn lemma_p(max_n: usize) -> Vec<ReportRow> {
    let mut rows = family_rows(Family::P, FAMILY_FIRST_N, max_n);
    for n in 2..=max_n {
        let src = generate_par(&Family::P.spec(n));
        let tgt: BTreeSet<Permutation> = generate_par(&Family::Rrc.spec(n)).into_iter().collect();
        let images: Vec<Permutation> = map_all(&src, gamma).into_iter().flatten().collect();
        rows.push(image_row(n, format!("γ: P_{} → Rrc_{}", 2 * n - 2, 2 * n + 1), src.len(), &images, &tgt));
        let back = images
            .par_iter()
            .zip(src.par_iter())
            .filter(|(img, s)| gamma_inv(img).ok().as_ref() == Some(*s))
            .count();
        rows.push(all_row(n, format!("γ⁻¹∘γ = id on P_{}", 2 * n - 2), src.len(), back));
    }
    rows
}

/// Deletes the values `2n` and `3` from a member of `𝒪_{2n}`.
fn shrink_o(pi: &Permutation) -> Permutation {
    let top = pi.len() as u32;
    let rest: Vec<u32> = pi.word().iter().copied().filter(|&v| v != top && v != 3).collect();
    standardize(&rest).expect("distinct values")
}

fn eq_o(max_n: usize) -> Vec<ReportRow> {
    let mut rows = family_rows(Family::O, 1, max_n);
    for n in FAMILY_FIRST_N..=max_n {
        let o = generate_par(&Family::O.spec(n));
        let mut target: BTreeSet<Permutation> = generate_par(&Family::P.spec(n)).into_iter().collect();
        target.extend(generate_par(&Family::Q.spec(n - 1)));
        let images: Vec<Permutation> = o.iter().map(shrink_o).collect();
        rows.push(image_row(n, format!("delete {{{}, 3}}: O_{} → P_{} ∪ Q_{}", 2 * n, 2 * n, 2 * n - 2, 2 * n - 2), o.len(), &images, &target));
    }
    rows
}

fn psi_bijection(max_cols: usize) -> Vec<ReportRow> {
    let mut by_cols: BTreeMap<usize, Vec<YoungDiagram>> = BTreeMap::new();
    for d in YoungDiagram::self_conjugate_up_to(max_cols) {
        by_cols.entry(d.num_cols()).or_default().push(d);
    }
    let (j3, i3) = (Permutation::decreasing(3), Permutation::identity(3));
    let mut rows = Vec::new();
    for (k, diagrams) in by_cols {
        let results: Vec<(usize, bool, usize, usize)> = diagrams
            .par_iter()
            .map(|d| {
                let all = symmetric_transversals(d);
                let src: Vec<&Transversal> = all.iter().filter(|t| !transversal_contains(t, &j3)).collect();
                let tgt: BTreeSet<Transversal> = all.iter().filter(|t| !transversal_contains(t, &i3)).cloned().collect();
                let images: Vec<Option<Transversal>> = src.iter().map(|t| psi_cap(t).ok()).collect();
                let image_set: BTreeSet<Transversal> = images.iter().flatten().cloned().collect();
                let bijective = images.iter().all(Option::is_some) && image_set.len() == src.len() && image_set == tgt;
                let peaks = src
                    .iter()
                    .zip(&images)
                    .filter(|(t, img)| img.as_ref().is_some_and(|i| transversal_peaks(i) == transversal_peaks(t)))
                    .count();
                let back = src
                    .iter()
                    .zip(&images)
                    .filter(|(t, img)| img.as_ref().is_some_and(|i| psi_cap_inv(i).ok().as_ref() == Some(**t)))
                    .count();
                (src.len(), bijective, peaks, back)
            })
            .collect();
        let total: usize = results.iter().map(|r| r.0).sum();
        let good_diagrams = results.iter().filter(|r| r.1).count();
        rows.push(all_row(k, format!("Ψ bijective ST(321) → ST(123) on self-conjugate diagrams with {k} columns"), diagrams.len(), good_diagrams));
        rows.push(all_row(k, format!("Ψ keeps Peak ({k} columns)"), total, results.iter().map(|r| r.2).sum()));
        rows.push(all_row(k, format!("Ψ⁻¹∘Ψ = id ({k} columns)"), total, results.iter().map(|r| r.3).sum()));
    }
    rows
}

fn matching_suite(max_n: usize) -> Vec<ReportRow> {
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let all = all_matchings(n);
        let tally = all
            .par_iter()
            .map(|mt| {
                let o = phi(mt);
                let (cr, ne) = crossing_nesting(mt);
                let mut flags = [
                    phi_inv(&o).ok().as_ref() == Some(mt),
                    o.type_word() == mt.type_word(),
                    cr == o.max_rows(),
                    ne == o.max_cols(),
                    phi(&mt.reflect()) == o.reversed(),
                    true,
                    true,
                ];
                if mt.is_bilaterally_symmetric() {
                    let val = valleys(mt).0;
                    if cr <= 2 {
                        flags[5] = o.valleys().as_ref() == Some(&val);
                    }
                    if ne <= 2 {
                        flags[6] = o.peaks().as_ref() == Some(&val);
                    }
                }
                flags.map(usize::from)
            })
            .reduce(|| [0; 7], |a, b| std::array::from_fn(|i| a[i] + b[i]));
        let labels = [
            "φ⁻¹∘φ = id",
            "type(φ(M)) = type(M)",
            "cr(M) = max rows of φ(M)",
            "ne(M) = max columns of φ(M)",
            "φ(reflect M) = reverse φ(M)",
            "Val(M) = Val(φ(M)) on symmetric 3-noncrossing M",
            "Val(M) = Peak(φ(M)) on symmetric 3-nonnesting M",
        ];
        for (label, good) in labels.iter().zip(tally) {
            rows.push(all_row(n, format!("{label}, n = {n}"), all.len(), good));
        }
    }
    rows
}

/// Block words of `m` steps between the axis and a rising `S`, as
/// `(s_start, start, word)`.
fn blocks(m: usize) -> Vec<(i32, i32, StepWord)> {
    let mut out = Vec::new();
    for s_start in 0..=m as i32 {
        for start in 0..=s_start {
            for bits in 0..(1u32 << m) {
                let w = StepWord((0..m).map(|i| if bits >> (m - 1 - i) & 1 == 0 { Step::U } else { Step::D }).collect());
                let h = w.heights(start);
                if h.iter().enumerate().all(|(k, &y)| y >= 0 && y <= s_start + k as i32) {
                    out.push((s_start, start, w));
                }
            }
        }
    }
    out
}

fn path_suite(max_n: usize) -> Vec<ReportRow> {
    let mut rows = Vec::new();
    for m in 1..=(2 * max_n).min(10) {
        let all = blocks(m);
        let s_word = StepWord(vec![Step::U; m]);
        let tally = all
            .par_iter()
            .map(|(s0, y0, r)| {
                let lemma = alpha(*s0, *y0, r).is_ok_and(|r2| {
                    let (h, h2) = (r.heights(*y0), r2.heights(*y0));
                    h.last() == h2.last()
                        && h2.iter().enumerate().all(|(k, &y)| y >= 0 && y <= s0 + k as i32)
                        && ab_sets(&s_word, r).0 == ab_sets(&s_word, &r2).1
                });
                let ba = alpha(*s0, *y0, r).and_then(|r2| beta(*s0, *y0, &r2)).ok().as_ref() == Some(r);
                let ab = beta(*s0, *y0, r).and_then(|r2| alpha(*s0, *y0, &r2)).ok().as_ref() == Some(r);
                [usize::from(lemma), usize::from(ba), usize::from(ab)]
            })
            .reduce(|| [0; 3], |a, b| std::array::from_fn(|i| a[i] + b[i]));
        let labels = ["α keeps endpoints, stays in the region, A(S,R) = B(S,α(R))", "β∘α = id", "α∘β = id"];
        for (label, good) in labels.iter().zip(tally) {
            rows.push(all_row(m, format!("{label}, {m} steps"), all.len(), good));
        }
    }
    for n in 1..=max_n {
        let pairs = symmetric_pairs(n);
        let tally = pairs
            .par_iter()
            .map(|pair| {
                let Ok(out) = theta(pair) else {
                    return [0; 5];
                };
                let valid = DyckPair::new(out.p().clone(), out.q().clone()).is_ok();
                [
                    usize::from(theta_inv(&out).ok().as_ref() == Some(pair)),
                    usize::from(theta_inv(pair).and_then(|b| theta(&b)).ok().as_ref() == Some(pair)),
                    usize::from(out.p() == pair.p()),
                    usize::from(valid && out.is_symmetric()),
                    usize::from(pair_ab_sets(pair).0 == pair_ab_sets(&out).1),
                ]
            })
            .reduce(|| [0; 5], |a, b| std::array::from_fn(|i| a[i] + b[i]));
        let labels = ["θ⁻¹∘θ = id", "θ∘θ⁻¹ = id", "θ fixes P", "θ(P,Q) is a symmetric noncrossing pair", "A(P,Q) = B(P,Q′)"];
        for (label, good) in labels.iter().zip(tally) {
            rows.push(all_row(n, format!("{label}, length {}", 2 * n), pairs.len(), good));
        }
    }
    rows
}
