//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use wilf_core::enumeration::{motzkin, motzkin_recurrence};
use wilf_core::pipeline::{phi_involution, psi_cap, psi_cap_inv, psi_cap_trace};
use wilf_core::verify::{verify, VerificationReport};
use wilf_core::{Matching, OscillatingTableau, Partition, Permutation, Transversal, YoungDiagram};

type Criterion = Box<dyn FnOnce() -> Outcome>;

struct Outcome {
    pass: bool,
    detail: String,
}

fn report(name: &str, max_n: usize) -> (bool, String) {
    match verify(name, max_n) {
        Ok(r) => (r.pass, summary(&r)),
        Err(e) => (false, format!("{name}: {e}")),
    }
}

fn summary(r: &VerificationReport) -> String {
    let failed: Vec<String> = r
        .failures()
        .take(3)
        .map(|row| format!("[n={} {}: expected {} got {}]", row.n, row.label, row.expected, row.computed))
        .collect();
    let mut s = format!("{} {}/{} rows in {} ms", r.name, r.rows.len() - r.failures().count(), r.rows.len(), r.wall_time_ms);
    if !failed.is_empty() {
        s.push_str(&format!(" failures: {}", failed.join(" ")));
    }
    s
}

fn timed(budget: Duration, run: impl FnOnce() -> Vec<(bool, String)>) -> Outcome {
    let start = Instant::now();
    let parts = run();
    let elapsed = start.elapsed();
    let in_budget = elapsed <= budget;
    let mut detail: Vec<String> = parts.iter().map(|(_, d)| d.clone()).collect();
    detail.push(format!("{:.2} s (budget {} s)", elapsed.as_secs_f64(), budget.as_secs()));
    Outcome {
        pass: in_budget && parts.iter().all(|(ok, _)| *ok),
        detail: detail.join("; "),
    }
}

fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn shapes(parts: &[&[u32]]) -> OscillatingTableau {
    OscillatingTableau::new(parts.iter().map(|q| Partition::new(q.to_vec()).unwrap()).collect()).unwrap()
}

fn start_filling() -> Transversal {
    Transversal::new(YoungDiagram::new(vec![8, 8, 8, 8, 8, 5, 5, 5]).unwrap(), vec![6, 2, 8, 4, 7, 1, 5, 3]).unwrap()
}

/// The worked 8-column example, checked at every intermediate object.
fn worked_chain() -> (bool, String) {
    let trace = match psi_cap_trace(&start_filling()) {
        Ok(t) => t,
        Err(e) => return (false, format!("worked chain: {e}")),
    };
    let start_matching = Matching::new(vec![(1, 8), (2, 15), (3, 6), (4, 13), (5, 7), (9, 16), (10, 12), (11, 14)]).unwrap();
    let start_tableau = shapes(&[
        &[], &[1], &[1, 1], &[2, 1], &[2, 2], &[3, 2], &[3, 1], &[2, 1], &[2],
        &[2, 1], &[3, 1], &[3, 2], &[2, 2], &[2, 1], &[1, 1], &[1], &[],
    ]);
    let end_tableau = shapes(&[
        &[], &[1], &[1, 1], &[2, 1], &[2, 1, 1], &[2, 2, 1], &[2, 1, 1], &[1, 1, 1], &[1, 1],
        &[1, 1, 1], &[2, 1, 1], &[2, 2, 1], &[2, 1, 1], &[2, 1], &[1, 1], &[1], &[],
    ]);
    let end_matching =
        Matching::new(vec![(1, 8), (2, 13), (3, 6), (4, 15), (5, 7), (9, 16), (10, 12), (11, 14)]).unwrap();
    let end_filling =
        Transversal::new(start_filling().diagram().clone(), vec![6, 4, 8, 2, 7, 1, 5, 3]).unwrap();
    let stages = [
        ("χ matching", trace.matching == start_matching),
        ("φ oscillating tableau", trace.tableau == start_tableau),
        ("ψ path P", trace.pair.p().to_string() == "UUUUUDDDUUUDDDDD"),
        ("ψ path Q", trace.pair.q().to_string() == "UDUDUUDUDUDDUDUD"),
        ("θ path Q′", trace.pair_prime.q().to_string() == "UUDUDUUDUDDUDUDD"),
        ("θ keeps P", trace.pair_prime.p() == trace.pair.p()),
        ("ψ̄⁻¹ oscillating tableau", trace.tableau_prime == end_tableau),
        ("φ⁻¹ matching", trace.matching_prime == end_matching),
        ("χ⁻¹ filling", trace.transversal_prime == end_filling),
        ("Ψ⁻¹ returns the start", psi_cap_inv(&end_filling).ok() == Some(start_filling())),
    ];
    let bad: Vec<&str> = stages.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
    if bad.is_empty() {
        (true, format!("worked chain: {} stages match", stages.len()))
    } else {
        (false, format!("worked chain mismatches: {}", bad.join(", ")))
    }
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, Criterion)> = vec![
        (
            "Motzkin closed form equals recurrence, n <= 30",
            Box::new(|| {
                timed(Duration::from_secs(1), || {
                    let rec = motzkin_recurrence(30);
                    let bad = (0..=30).filter(|&n| motzkin(n) != rec[n]).count();
                    vec![(bad == 0, format!("M_30 = {}, {bad} mismatches", rec[30]))]
                })
            }),
        ),
        (
            "alternating involution count identities, n = 1..6",
            Box::new(|| timed(Duration::from_secs(30), || vec![report("table1", 6)])),
        ),
        (
            "RAI(1243) and RAI(2134) counted by M_n, n = 1..6",
            Box::new(|| timed(Duration::from_secs(60), || vec![report("conj1", 6)])),
        ),
        (
            "AI and RAI classes avoiding 1432 or 3214, n = 1..5",
            Box::new(|| timed(Duration::from_secs(60), || vec![report("conj2", 5)])),
        ),
        (
            "image of f⁻¹ and the P, Q, R, Rrc, O counts, n <= 6",
            Box::new(|| {
                timed(Duration::from_secs(120), || {
                    ["lemma_f", "lemma_P", "lemma_Q", "lemma_R", "eq_O"]
                        .iter()
                        .map(|name| report(name, 6))
                        .collect()
                })
            }),
        ),
        (
            "φ suite on all matchings, n <= 5",
            Box::new(|| timed(Duration::from_secs(10), || vec![report("matching_suite", 5)])),
        ),
        (
            "path suite: α/β up to 10 steps, θ on symmetric pairs up to length 16",
            Box::new(|| timed(Duration::from_secs(60), || vec![report("path_suite", 8)])),
        ),
        (
            "Ψ suite up to 7 columns and the worked chain",
            Box::new(|| timed(Duration::from_secs(120), || vec![report("psi_bijection", 7), worked_chain()])),
        ),
        (
            "Φ suite n <= 10 and AI count equality n <= 12",
            Box::new(|| {
                timed(Duration::from_secs(300), || vec![report("phi_bijection", 10), report("conj3", 12)])
            }),
        ),
        (
            "hand-derived anchors",
            Box::new(|| {
                timed(Duration::from_secs(1), || {
                    let phi = phi_involution(&p("1234"), &p("1")).ok();
                    let id3 = Transversal::from_permutation(&Permutation::identity(3));
                    let psi = psi_cap(&id3).ok().map(|t| t.as_permutation());
                    vec![
                        (phi == Some(p("3214")), format!("Φ(1234, τ=1) = {phi:?}")),
                        (psi == Some(p("321")), format!("Ψ(id₃) = {psi:?}")),
                    ]
                })
            }),
        ),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        let outcome = run();
        all &= outcome.pass;
        let verdict = if outcome.pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {verdict}: {name} ({})", i + 1, outcome.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
