use proptest::prelude::*;

use wilf_core::enumeration::{generate, generate_par, BaseClass, ClassSpec};
use wilf_core::fillings::{chi, chi_inv, type_of, transversal_peaks};
use wilf_core::matchings::{crossing_nesting, phi, phi_inv};
use wilf_core::paths::{pair_ab_sets, symmetric_pairs, theta, theta_inv};
use wilf_core::pipeline::{phi_involution, phi_involution_inv, psi_cap, psi_cap_inv};
use wilf_core::tableaux::{rsk_involution, rsk_involution_inv, syt_descents, west_f, west_f_inv};
use wilf_core::{DyckPair, Matching, Permutation, Transversal, YoungDiagram};

fn perm_strategy(max: usize) -> impl Strategy<Value = Permutation> {
    (0..=max)
        .prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<u32>>()).prop_shuffle())
        .prop_map(|w| Permutation::new(w).unwrap())
}

/// Walks a shuffled word, making each entry a fixed point or pairing it with
/// the next one according to `flags`.
fn involution_strategy(max: usize) -> impl Strategy<Value = Permutation> {
    (0..=max)
        .prop_flat_map(|n| {
            (
                Just((1..=n as u32).collect::<Vec<u32>>()).prop_shuffle(),
                proptest::collection::vec(any::<bool>(), n),
            )
        })
        .prop_map(|(w, flags)| {
            let mut word = vec![0u32; w.len()];
            let mut i = 0;
            while i < w.len() {
                if flags[i] || i + 1 == w.len() {
                    word[w[i] as usize - 1] = w[i];
                    i += 1;
                } else {
                    word[w[i] as usize - 1] = w[i + 1];
                    word[w[i + 1] as usize - 1] = w[i];
                    i += 2;
                }
            }
            Permutation::new(word).unwrap()
        })
}

fn matching_strategy(max: usize) -> impl Strategy<Value = Matching> {
    (0..=max)
        .prop_flat_map(|n| Just((1..=2 * n as u32).collect::<Vec<u32>>()).prop_shuffle())
        .prop_map(|w| Matching::new(w.chunks(2).map(|c| (c[0].min(c[1]), c[0].max(c[1]))).collect()).unwrap())
}

/// The smallest diagram holding the 1s of `p`, read as `t_c = p_c`.
fn tight_transversal(p: &Permutation) -> Transversal {
    let n = p.len();
    let mut col_of_row = vec![0u32; n + 1];
    for c in 1..=n {
        col_of_row[p.at(c) as usize] = c as u32;
    }
    let mut rows = vec![0u32; n];
    let mut best = 0;
    for r in (1..=n).rev() {
        best = best.max(col_of_row[r]);
        rows[r - 1] = best;
    }
    Transversal::new(YoungDiagram::new(rows).unwrap(), p.word().to_vec()).unwrap()
}

const TAUS: [&str; 5] = ["1", "12", "21", "132", "213"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn symmetries_are_involutive(p in perm_strategy(9)) {
        prop_assert_eq!(p.reverse().reverse(), p.clone());
        prop_assert_eq!(p.complement().complement(), p.clone());
        prop_assert_eq!(p.inverse().inverse(), p.clone());
        prop_assert_eq!(p.reverse_complement(), p.reverse().complement());
    }

    #[test]
    fn containment_respects_symmetries(p in perm_strategy(8), q in perm_strategy(4)) {
        prop_assert_eq!(p.contains(&q), p.reverse().contains(&q.reverse()));
        prop_assert_eq!(p.contains(&q), p.complement().contains(&q.complement()));
        prop_assert_eq!(p.contains(&q), p.inverse().contains(&q.inverse()));
        let s = p.direct_sum(&q);
        prop_assert!(s.contains(&p) && s.contains(&q));
        if let Some(pos) = p.find_pattern(&q) {
            let sub: Vec<u32> = pos.iter().map(|&i| p.at(i)).collect();
            prop_assert_eq!(wilf_core::perm::standardize(&sub).unwrap(), q);
        }
    }

    #[test]
    fn reverse_complement_swaps_odd_zigzags(p in involution_strategy(11)) {
        let rc = p.reverse_complement();
        prop_assert!(rc.is_involution());
        if p.len() % 2 == 1 && p.is_alternating() {
            prop_assert!(rc.is_reverse_alternating());
        }
    }

    #[test]
    fn rsk_round_trip_and_descents(p in involution_strategy(10)) {
        let t = rsk_involution(&p).unwrap();
        prop_assert_eq!(rsk_involution_inv(&t), p.clone());
        prop_assert_eq!(syt_descents(&t), p.descents());
    }

    #[test]
    fn west_round_trip(p in perm_strategy(9), k in 3usize..=4) {
        if p.avoids(&Permutation::identity(k)) {
            let q = west_f(&p, k).unwrap();
            let forbidden = Permutation::identity(k - 2).direct_sum(&Permutation::decreasing(2));
            prop_assert!(q.avoids(&forbidden));
            prop_assert_eq!(west_f_inv(&q, k).unwrap(), p.clone());
            prop_assert_eq!(q.is_involution(), p.is_involution());
        } else {
            prop_assert!(west_f(&p, k).is_err());
        }
    }

    #[test]
    fn phi_on_matchings(m in matching_strategy(7)) {
        let o = phi(&m);
        prop_assert_eq!(phi_inv(&o).unwrap(), m.clone());
        prop_assert_eq!(o.type_word(), m.type_word());
        let (cr, ne) = crossing_nesting(&m);
        prop_assert_eq!(cr, o.max_rows());
        prop_assert_eq!(ne, o.max_cols());
        prop_assert_eq!(phi(&m.reflect()), o.reversed());
    }

    #[test]
    fn chi_round_trip(p in perm_strategy(9)) {
        let t = tight_transversal(&p);
        let m = chi(&t);
        prop_assert_eq!(m.type_word(), type_of(&t));
        prop_assert_eq!(chi_inv(&m).unwrap(), t);
    }

    #[test]
    fn generator_matches_filter(
        n in 0usize..=7,
        base in prop_oneof![Just(BaseClass::I), Just(BaseClass::AI), Just(BaseClass::RAI), Just(BaseClass::S)],
        pat in (3usize..=4).prop_flat_map(|k| Just((1..=k as u32).collect::<Vec<u32>>()).prop_shuffle()),
        fixed in proptest::option::of((1usize..=7, 1u32..=7)),
    ) {
        let mut spec = ClassSpec::new(base, n).avoiding(Permutation::new(pat).unwrap());
        if let Some((pos, val)) = fixed {
            spec = spec.with_fixed(pos, val);
        }
        let brute: Vec<Permutation> = generate(&ClassSpec::new(BaseClass::S, n))
            .into_iter()
            .filter(|p| spec.admits(p))
            .collect();
        let fast = generate(&spec);
        prop_assert_eq!(&fast, &brute);
        prop_assert_eq!(generate_par(&spec), fast);
    }

    #[test]
    fn phi_transports_peaks(p in involution_strategy(9), which in 0usize..TAUS.len()) {
        let tau: Permutation = TAUS[which].parse().unwrap();
        let from = Permutation::decreasing(3).direct_sum(&tau);
        let to = Permutation::identity(3).direct_sum(&tau);
        if p.avoids(&from) {
            let q = phi_involution(&p, &tau).unwrap();
            prop_assert!(q.is_involution() && q.avoids(&to));
            prop_assert_eq!(q.peaks(), p.peaks());
            prop_assert_eq!(phi_involution_inv(&q, &tau).unwrap(), p);
        }
    }

    #[test]
    fn psi_on_tight_diagrams(p in involution_strategy(10)) {
        let t = tight_transversal(&p);
        if p.avoids(&Permutation::decreasing(3)) {
            let out = psi_cap(&t).unwrap();
            prop_assert_eq!(out.diagram(), t.diagram());
            prop_assert!(out.is_symmetric());
            prop_assert_eq!(transversal_peaks(&out), transversal_peaks(&t));
            prop_assert_eq!(psi_cap_inv(&out).unwrap(), t);
        }
    }

    #[test]
    fn theta_on_sampled_pairs(n in 1usize..=7, pick in any::<prop::sample::Index>()) {
        let pairs = symmetric_pairs(n);
        let pair = pick.get(&pairs).clone();
        let out = theta(&pair).unwrap();
        prop_assert_eq!(out.p(), pair.p());
        prop_assert!(out.is_symmetric());
        prop_assert!(DyckPair::new(out.p().clone(), out.q().clone()).is_ok());
        prop_assert_eq!(pair_ab_sets(&pair).0, pair_ab_sets(&out).1);
        prop_assert_eq!(theta_inv(&out).unwrap(), pair);
    }

    #[test]
    fn json_round_trips(p in involution_strategy(9), m in matching_strategy(5)) {
        let pj = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Permutation>(&pj).unwrap(), p.clone());
        let t = tight_transversal(&p);
        let tj = serde_json::to_string(&t).unwrap();
        prop_assert_eq!(serde_json::from_str::<Transversal>(&tj).unwrap(), t);
        let mj = serde_json::to_string(&m).unwrap();
        prop_assert_eq!(serde_json::from_str::<Matching>(&mj).unwrap(), m.clone());
        let o = phi(&m);
        let oj = serde_json::to_string(&o).unwrap();
        prop_assert_eq!(serde_json::from_str::<wilf_core::OscillatingTableau>(&oj).unwrap(), o);
    }
}
