//! Cross-module invariants that no single module can check alone.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use corepath::bijections::{core_to_path, phi};
use corepath::counting::{count_freemotz, count_mainprop};
use corepath::oracle::{enumerate_cores, exhaustive_gen_dyck, exhaustive_rational_motzkin};
use corepath::paths::{enumerate_gen_dyck, enumerate_rational_motzkin, is_symmetric_gen_dyck};
use corepath::{BoundaryProfile, CoreFamily, Partition, Step, StepWord};

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

/// The moduli `s, s+d, ..., s+pd` of a family.
fn moduli(s: u32, d: u32, p: u32) -> Vec<u64> {
    (0..=p).map(|i| (s + i * d) as u64).collect()
}

fn coprime_pairs(smax: u32, dmax: u32) -> Vec<(u32, u32)> {
    let mut pairs = Vec::new();
    for s in 1..=smax {
        for d in 1..=dmax {
            if num_integer::gcd(s, d) == 1 {
                pairs.push((s, d));
            }
        }
    }
    pairs
}

/// The profile shape test and the hook predicate must agree about which
/// extensions of a two-modulus core remain cores of longer progressions.
#[test]
fn profile_verification_tracks_the_core_predicate() {
    for (s, d) in coprime_pairs(6, 3) {
        for lambda in enumerate_cores(&moduli(s, d, 1)).unwrap() {
            let profile = BoundaryProfile::compute(&lambda, s, d).unwrap();
            for p in 2..=5 {
                assert_eq!(
                    profile.verify(p),
                    lambda.is_simultaneous_core(&moduli(s, d, p)),
                    "partition {lambda}, family ({s},{d},{p})"
                );
            }
        }
    }
}

/// The library's path enumerators and the oracle's letter-by-letter scans
/// must produce identical sets.
#[test]
fn path_enumerators_agree_with_the_oracle_scans() {
    for (s, d) in coprime_pairs(6, 4) {
        for p in 2..=4 {
            let fast: BTreeSet<String> = enumerate_rational_motzkin(s, d, p)
                .unwrap()
                .iter()
                .map(|path| path.to_string())
                .collect();
            let slow: BTreeSet<String> = exhaustive_rational_motzkin(s, d, p)
                .unwrap()
                .iter()
                .map(|word| word.to_string())
                .collect();
            assert_eq!(fast, slow, "type ({s},{d}), p={p}");
        }
    }
    for s in 0..=8u32 {
        for p in 2..=4 {
            // Same order, not just the same set.
            assert_eq!(enumerate_gen_dyck(s, p), exhaustive_gen_dyck(s, p).unwrap(), "({s},{p})");
        }
    }
}

/// Rational Motzkin paths with exactly `k` up steps are counted by the
/// closed trinomial formula when no rise pattern is forbidden.
#[test]
fn up_step_histogram_matches_the_free_formula() {
    for (s, d) in coprime_pairs(8, 5) {
        let paths = enumerate_rational_motzkin(s, d, 2).unwrap();
        for k in 0..=s / 2 + 1 {
            let observed = paths.iter().filter(|path| path.up_count() == k as usize).count();
            assert_eq!(count_freemotz(s, d, k).unwrap(), big(observed as u64), "({s},{d}) k={k}");
        }
    }
}

/// With rise patterns forbidden (`p >= 3`), the per-`k` counts follow the
/// restricted formula instead.
#[test]
fn up_step_histogram_matches_the_restricted_formula() {
    for (s, d) in coprime_pairs(7, 3) {
        for p in 3..=4 {
            let paths = enumerate_rational_motzkin(s, d, p).unwrap();
            for k in 1..=s / 2 + 1 {
                let observed = paths.iter().filter(|path| path.up_count() == k as usize).count();
                assert_eq!(
                    count_mainprop(s, d, p, k).unwrap(),
                    big(observed as u64),
                    "({s},{d},{p}) k={k}"
                );
            }
            // Paths with no up step never contain a pattern, so their count
            // is the k = 0 trinomial term.
            let flat = paths.iter().filter(|path| path.up_count() == 0).count();
            assert_eq!(count_freemotz(s, d, 0).unwrap(), big(flat as u64), "({s},{d},{p})");
        }
    }
}

/// For `d = 1` families, conjugation symmetry of a core shows up as
/// reflection symmetry of its generalized Dyck path: the two subsets are
/// equinumerous family by family.
#[test]
fn self_conjugate_cores_match_symmetric_paths_in_number() {
    for s in 1..=8u32 {
        for p in 2..=4 {
            let family = CoreFamily::new(s, 1, p).unwrap();
            let mut self_conjugate = 0u64;
            let mut symmetric_images = 0u64;
            for lambda in enumerate_cores(&moduli(s, 1, p)).unwrap() {
                if lambda.is_self_conjugate() {
                    self_conjugate += 1;
                }
                // A type (s+1, -1) path always ends with a descent from
                // height zero; stripping it leaves a Motzkin word.
                let word = core_to_path(&lambda, family).unwrap().into_word();
                let steps = word.steps();
                assert_eq!(steps.last(), Some(&Step::Down), "partition {lambda}");
                let motzkin = StepWord::new(steps[..steps.len() - 1].to_vec());
                let image = phi(&motzkin, p).unwrap_or_else(|error| {
                    panic!("image of {lambda} is outside the phi domain: {error}")
                });
                if is_symmetric_gen_dyck(&image) {
                    symmetric_images += 1;
                }
            }
            assert_eq!(self_conjugate, symmetric_images, "s={s} p={p}");
        }
    }
}

/// The oracle's own outputs are internally coherent: sorted as documented
/// and closed under conjugation.
#[test]
fn oracle_output_is_sorted_and_conjugation_closed() {
    for ts in [vec![3, 5, 7], vec![4, 5, 6], vec![5, 7], vec![5, 8, 11]] {
        let cores = enumerate_cores(&ts).unwrap();
        for window in cores.windows(2) {
            let ordered = (window[0].size(), window[0].parts())
                < (window[1].size(), window[1].parts());
            assert!(ordered, "{} then {} in {ts:?}", window[0], window[1]);
        }
        // Hook multisets are conjugation-invariant, so the conjugate of a
        // family core is again one.
        let as_set: BTreeSet<Partition> = cores.iter().cloned().collect();
        for lambda in &cores {
            assert!(as_set.contains(&lambda.conjugate()), "{lambda} in {ts:?}");
        }
    }
}
