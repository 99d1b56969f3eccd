//! Randomized cross-module properties.
//!
//! The unit tests inside each module pin goldens and sweep small families
//! exhaustively; these properties hit the same identities from randomly
//! generated step sequences, including slopes and sizes the exhaustive
//! sweeps skip.

use proptest::prelude::*;

use rdk_core::bintree::{build_bqp, omega1, omega2};
use rdk_core::orders::{young_covers, young_leq};
use rdk_core::paren::{alpha_ii, alpha_star, alpha_star_inverse, gamma_ii};
use rdk_core::paths::{
    enumerate_paths, height_seq_to_word, highest_path, lowest_path, step_seq_to_word,
    word_to_height_seq, word_to_step_seq,
};
use rdk_core::stirling::{avoids_312, zeta, zeta_inverse};
use rdk_core::strips::{delta, enlarge, interleave_extract, mu, theta, u_prime, QChoice};
use rdk_core::trees::{xi, xi_inverse};
use rdk_core::{DyckWord, Slope, Step, StepSeq};

const SLOPES: &[(u64, u64)] = &[(1, 1), (1, 2), (2, 3), (3, 2), (1, 3), (2, 5), (3, 4)];

fn seq_from_seeds(slope: Slope, seeds: &[u64]) -> StepSeq {
    let (a, b) = (slope.a(), slope.b());
    let mut u = Vec::with_capacity(seeds.len());
    let mut prev = 0u64;
    for (k, seed) in seeds.iter().enumerate() {
        let cap = b * k as u64 / a;
        let pick = prev + seed % (cap - prev + 1);
        u.push(pick);
        prev = pick;
    }
    StepSeq::new(slope, u).expect("seeded entries stay within the staircase bounds")
}

fn arb_path() -> impl Strategy<Value = DyckWord> {
    (0..SLOPES.len(), 1u64..=3).prop_flat_map(|(s, n)| {
        let slope = Slope::new(SLOPES[s].0, SLOPES[s].1).expect("fixed coprime pairs");
        let len = (slope.a() * n) as usize;
        proptest::collection::vec(any::<u64>(), len)
            .prop_map(move |seeds| step_seq_to_word(&seq_from_seeds(slope, &seeds)))
    })
}

fn arb_unit_path() -> impl Strategy<Value = (u64, DyckWord)> {
    (1u64..=3, 1u64..=4).prop_flat_map(|(m, n)| {
        let slope = Slope::new(1, m).expect("1 is coprime to everything");
        proptest::collection::vec(any::<u64>(), n as usize)
            .prop_map(move |seeds| (m, step_seq_to_word(&seq_from_seeds(slope, &seeds))))
    })
}

fn arb_comparable_pair() -> impl Strategy<Value = (DyckWord, DyckWord)> {
    arb_path().prop_flat_map(|p| {
        let len = word_to_step_seq(&p).entries().len();
        proptest::collection::vec(any::<u64>(), len).prop_map(move |seeds| {
            let below = word_to_step_seq(&p).entries().to_vec();
            let mut u = Vec::with_capacity(below.len());
            let mut prev = 0u64;
            for (cap, seed) in below.iter().zip(&seeds) {
                let pick = prev + seed % (cap - prev + 1);
                u.push(pick);
                prev = pick;
            }
            let q = step_seq_to_word(
                &StepSeq::new(p.slope(), u).expect("entrywise below a valid sequence"),
            );
            (q, p.clone())
        })
    })
}

proptest! {
    #[test]
    fn step_and_height_sequences_round_trip(p in arb_path()) {
        prop_assert_eq!(step_seq_to_word(&word_to_step_seq(&p)), p.clone());
        prop_assert_eq!(height_seq_to_word(&word_to_height_seq(&p)), p);
    }

    #[test]
    fn every_prefix_stays_above_the_line(p in arb_path()) {
        let (a, b) = (p.slope().a(), p.slope().b());
        let mut norths = 0u64;
        let mut easts = 0u64;
        for &s in p.steps() {
            match s {
                Step::N => norths += 1,
                Step::E => easts += 1,
            }
            prop_assert!(b * norths >= a * easts);
        }
    }

    #[test]
    fn sharp_is_an_involution_into_the_dual_family(p in arb_path()) {
        let d = p.sharp();
        prop_assert_eq!(d.slope().a(), p.slope().b());
        prop_assert_eq!(d.slope().b(), p.slope().a());
        prop_assert_eq!(d.n(), p.n());
        prop_assert_eq!(d.sharp(), p);
    }

    #[test]
    fn every_path_sits_between_the_extremes(p in arb_path()) {
        let low = lowest_path(p.slope(), p.n());
        let high = highest_path(p.slope(), p.n());
        prop_assert!(young_leq(&low, &p));
        prop_assert!(young_leq(&p, &high));
    }

    #[test]
    fn young_covers_delete_one_box(p in arb_path()) {
        let total: u64 = word_to_step_seq(&p).entries().iter().sum();
        for q in young_covers(&p) {
            let above: u64 = word_to_step_seq(&q).entries().iter().sum();
            prop_assert_eq!(above + 1, total);
            prop_assert!(young_leq(&p, &q));
        }
    }

    #[test]
    fn stirling_and_tree_maps_round_trip((m, p) in arb_unit_path()) {
        let u = word_to_step_seq(&p);
        let pi = zeta(u.entries(), m).unwrap();
        prop_assert!(avoids_312(&pi));
        prop_assert_eq!(zeta_inverse(&pi), u.entries().to_vec());
        prop_assert_eq!(xi_inverse(&xi(&pi)), pi.clone());
        prop_assert_eq!(alpha_star_inverse(&alpha_star(&pi)), pi);
    }

    #[test]
    fn global_star_labels_split_like_the_ceiling_recursion((m, p) in arb_unit_path()) {
        let u = word_to_step_seq(&p);
        let pi = zeta(u.entries(), m).unwrap();
        let t = gamma_ii(u.entries(), m).unwrap();
        prop_assert_eq!(alpha_ii(&pi), t.clone());
        let mut sums = vec![0u64; u.entries().len()];
        for w in t.components() {
            for (s, e) in sums.iter_mut().zip(word_to_step_seq(w).entries()) {
                *s += e;
            }
        }
        prop_assert_eq!(sums, u.entries().to_vec());
    }

    #[test]
    fn pair_trees_read_back_both_paths((q, p) in arb_comparable_pair()) {
        let t = build_bqp(&q, &p).unwrap();
        prop_assert_eq!(omega1(&t).unwrap(), q);
        prop_assert_eq!(omega2(&t).unwrap(), p);
    }

    #[test]
    fn mu_is_the_scaled_insertion_image(p in arb_path()) {
        for q in [QChoice::Lowest, QChoice::Highest] {
            let expected =
                rdk_core::stirling::zeta_g(&u_prime(&p, q), p.slope().a(), 1, p.slope().b())
                    .unwrap();
            prop_assert_eq!(mu(&p, q), expected);
        }
    }

    #[test]
    fn enlarged_paths_interleave_the_strip_components(p in arb_path()) {
        let wide = enlarge(&p);
        prop_assert_eq!(interleave_extract(&wide, p.slope().b()).unwrap(), delta(&p));
        prop_assert_eq!(interleave_extract(&wide, p.slope().a()).unwrap(), theta(&p));
    }
}

#[test]
fn enumeration_streams_restart_identically() {
    for &(a, b) in SLOPES {
        let slope = Slope::new(a, b).unwrap();
        let first: Vec<String> = enumerate_paths(slope, 2).map(|p| p.to_ascii()).collect();
        let second: Vec<String> = enumerate_paths(slope, 2).map(|p| p.to_ascii()).collect();
        assert_eq!(first, second);
        let mut unique = first.clone();
        unique.sort();
        unique.dedup();
        assert_eq!(unique.len(), first.len());
    }
}
