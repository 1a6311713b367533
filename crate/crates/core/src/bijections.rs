//! Bijections between core partitions and lattice paths.
//!
//! Two pairs of maps do the work:
//!
//! * [`core_to_path`] reads a partition's boundary profile off the extended
//!   abacus and emits a rational Motzkin path; [`path_to_core`] rebuilds the
//!   bead set from the path's heights and turns it back into a partition.
//! * [`phi`] cuts a restricted Motzkin path into units and renames each unit
//!   as a generalized Dyck step; [`phi_inverse`] expands the steps back.
//!
//! Each pair is mutually inverse on its stated domain; the tests check this
//! exhaustively on small parameter grids. [`corners_equal_upsteps`] exposes
//! the statistic the first pair transports: for `d = 1` families, the number
//! of corners of the partition equals the number of up steps of its path.

use crate::abacus::{first_nonnegative_row, BoundaryProfile};
use crate::partition::{BetaSet, CoreFamily, Partition};
use crate::paths::{
    has_forbidden_pattern, GenDyckPath, GenStep, RationalMotzkinPath, Step, StepWord,
};

/// Error produced when a bijection's precondition fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BijectionError {
    /// The partition has a hook length divisible by a family modulus.
    NotAFamilyCore { modulus: u64 },
    /// The path's type parameters disagree with the family's.
    FamilyMismatch { path_s: u32, path_d: u32, family_s: u32, family_d: u32 },
    /// The word contains a factor `U F^i U` with `i <= p - 3`.
    ForbiddenPattern { p: u32 },
    /// The word dips below height zero or does not end at height zero.
    NotMotzkin,
    /// Path-valued maps need `p >= 2`.
    PTooSmall { p: u32 },
    /// The corner/up-step comparison is stated only for `d = 1` families.
    DNotOne { d: u32 },
}

impl std::fmt::Display for BijectionError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BijectionError::NotAFamilyCore { modulus } => {
                write!(f, "partition has a hook of length {modulus}, so it is not a family core")
            }
            BijectionError::FamilyMismatch { path_s, path_d, family_s, family_d } => write!(
                f,
                "path of type ({}, -{path_d}) does not match family parameters ({}, -{family_d})",
                path_s + path_d,
                family_s + family_d,
            ),
            BijectionError::ForbiddenPattern { p } => {
                write!(f, "word contains a rise pattern U F^i U with i <= {}", *p as i64 - 3)
            }
            BijectionError::NotMotzkin => write!(f, "word is not a Motzkin path"),
            BijectionError::PTooSmall { p } => {
                write!(f, "path bijections need p >= 2, got p = {p}")
            }
            BijectionError::DNotOne { d } => {
                write!(f, "corner comparison applies to d = 1 families, got d = {d}")
            }
        }
    }
}

impl std::error::Error for BijectionError {}

/// Maps a family core to its rational Motzkin path by reading the unit steps
/// of the boundary profile left to right.
///
/// Validates that `lambda` really is a core for every family modulus; a
/// non-core input would silently produce a non-rational or pattern-violating
/// word, so it is rejected instead of coerced.
pub fn core_to_path(
    lambda: &Partition,
    family: CoreFamily,
) -> Result<RationalMotzkinPath, BijectionError> {
    if family.p() < 2 {
        return Err(BijectionError::PTooSmall { p: family.p() });
    }
    for modulus in family.moduli() {
        if !lambda.is_t_core(modulus) {
            return Err(BijectionError::NotAFamilyCore { modulus });
        }
    }
    let profile = BoundaryProfile::compute(lambda, family.s(), family.d())
        .expect("family construction guarantees coprime positive parameters");
    debug_assert!(profile.verify(family.p()));
    let word = profile.step_word().expect("the profile of a family core moves by unit steps");
    let path = RationalMotzkinPath::new(word, family.s(), family.d())
        .expect("the profile of a family core stays weakly above the boundary");
    debug_assert!(!has_forbidden_pattern(path.word(), family.p(), false));
    Ok(path)
}

/// Maps a rational Motzkin path back to its family core by rebuilding the
/// bead set column by column.
///
/// Column `j` of the extended abacus holds beads on the rows from the first
/// nonnegative label up to (excluding) the boundary height `f(j)`; collecting
/// their labels yields the beta-set of the partition.
pub fn path_to_core(
    path: &RationalMotzkinPath,
    family: CoreFamily,
) -> Result<Partition, BijectionError> {
    if family.p() < 2 {
        return Err(BijectionError::PTooSmall { p: family.p() });
    }
    if path.s() != family.s() || path.d() != family.d() {
        return Err(BijectionError::FamilyMismatch {
            path_s: path.s(),
            path_d: path.d(),
            family_s: family.s(),
            family_d: family.d(),
        });
    }
    if has_forbidden_pattern(path.word(), family.p(), false) {
        return Err(BijectionError::ForbiddenPattern { p: family.p() });
    }
    let (s, d) = (family.s(), family.d());
    let n = (s + d) as i64;
    let heights = path.word().heights();
    let mut beta = Vec::new();
    // The final column duplicates column 0, so beads live in columns 0..s+d.
    for col in 0..s + d {
        let boundary = heights[col as usize];
        let mut row = first_nonnegative_row(col, s, d);
        while row < boundary {
            let label = n * row + d as i64 * col as i64;
            debug_assert!(label >= 1, "rationality keeps bead labels positive");
            beta.push(label as u64);
            row += 1;
        }
    }
    Ok(BetaSet::new(beta).to_partition())
}

/// Maps a Motzkin path avoiding `U F^i U` (`i <= p-3`) to a generalized Dyck
/// path by cutting it into units and renaming each unit:
///
/// * `U F^{p-2}` becomes the up step `U_p` (greedy: a rise followed by at
///   least `p-2` flats always consumes exactly `p-2` of them);
/// * `U F^{j} D` with `j <= p-3` becomes the flat step `F_{j+2}`;
/// * a bare flat becomes `F_1` and a bare descent becomes `D_p`.
///
/// The pattern restriction is exactly what makes the cut unambiguous: after
/// a rise with fewer than `p-2` trailing flats the next letter must be a
/// descent.
pub fn phi(word: &StepWord, p: u32) -> Result<GenDyckPath, BijectionError> {
    if p < 2 {
        return Err(BijectionError::PTooSmall { p });
    }
    if !word.is_motzkin() {
        return Err(BijectionError::NotMotzkin);
    }
    if has_forbidden_pattern(word, p, false) {
        return Err(BijectionError::ForbiddenPattern { p });
    }
    let steps = word.steps();
    let mut out = Vec::new();
    let mut i = 0;
    while i < steps.len() {
        match steps[i] {
            Step::Flat => {
                out.push(GenStep::Flat(1));
                i += 1;
            }
            Step::Down => {
                out.push(GenStep::Down);
                i += 1;
            }
            Step::Up => {
                let flats = steps[i + 1..].iter().take_while(|&&s| s == Step::Flat).count();
                if flats >= (p - 2) as usize {
                    out.push(GenStep::Up);
                    i += 1 + (p - 2) as usize;
                } else {
                    // Fewer than p-2 flats: the run cannot end the word (the
                    // height would stay positive) and cannot hit a rise (the
                    // pattern check rejected U F^j U), so a descent follows.
                    debug_assert_eq!(steps.get(i + 1 + flats), Some(&Step::Down));
                    out.push(GenStep::Flat(flats as u32 + 2));
                    i += flats + 2;
                }
            }
        }
    }
    let s = u32::try_from(word.len()).expect("word length fits in u32");
    Ok(GenDyckPath::new(out, s, p).expect("unit renaming lands weakly above the diagonal"))
}

/// Expands every generalized Dyck step back into its Motzkin unit:
/// `U_p -> U F^{p-2}`, `F_1 -> F`, `F_i -> U F^{i-2} D`, `D_p -> D`.
pub fn phi_inverse(path: &GenDyckPath) -> StepWord {
    let p = path.p();
    let mut steps = Vec::new();
    for step in path.steps() {
        match *step {
            GenStep::Up => {
                steps.push(Step::Up);
                steps.extend(std::iter::repeat(Step::Flat).take((p - 2) as usize));
            }
            GenStep::Flat(1) => steps.push(Step::Flat),
            GenStep::Flat(i) => {
                steps.push(Step::Up);
                steps.extend(std::iter::repeat(Step::Flat).take((i - 2) as usize));
                steps.push(Step::Down);
            }
            GenStep::Down => steps.push(Step::Down),
        }
    }
    StepWord::new(steps)
}

/// The two sides of the corner/up-step comparison for a `d = 1` family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CornerComparison {
    /// Number of corners (distinct part sizes) of the partition.
    pub corners: usize,
    /// Number of up steps in the partition's Motzkin path.
    pub up_steps: usize,
}

impl CornerComparison {
    /// Whether the two statistics agree. They always do for `d = 1`: equal
    /// parts become consecutive beads on the abacus, so corners match runs
    /// of beads, which match the rises of the boundary profile.
    pub fn agrees(&self) -> bool {
        self.corners == self.up_steps
    }
}

/// Compares the corner count of a `d = 1` family core against the up-step
/// count of its Motzkin path.
///
/// The equality is only known for `d = 1`; other families are rejected so
/// that callers cannot mistake an unverified comparison for an identity.
pub fn corners_equal_upsteps(
    lambda: &Partition,
    family: CoreFamily,
) -> Result<CornerComparison, BijectionError> {
    if family.d() != 1 {
        return Err(BijectionError::DNotOne { d: family.d() });
    }
    let path = core_to_path(lambda, family)?;
    Ok(CornerComparison { corners: lambda.corner_count(), up_steps: path.up_count() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::{enumerate_gen_dyck, enumerate_rational_motzkin};
    use crate::test_util::{gd, pt, w};
    use std::collections::BTreeSet;

    /// All `3^len` words over `{U, F, D}`, for brute-force domain sweeps.
    fn all_words(len: usize) -> Vec<StepWord> {
        let mut words = vec![Vec::new()];
        for _ in 0..len {
            words = words
                .into_iter()
                .flat_map(|prefix| {
                    [Step::Up, Step::Flat, Step::Down].into_iter().map(move |s| {
                        let mut next = prefix.clone();
                        next.push(s);
                        next
                    })
                })
                .collect();
        }
        words.into_iter().map(StepWord::new).collect()
    }

    #[test]
    fn maps_the_worked_core_to_its_path() {
        let family = CoreFamily::new(5, 3, 3).unwrap();
        let path = core_to_path(&pt(&[9, 5, 3, 2, 2, 1, 1, 1, 1]), family).unwrap();
        assert_eq!(path.to_string(), "UFUDDDDD");
    }

    #[test]
    fn maps_the_empty_partition_along_the_boundary() {
        let family = CoreFamily::new(3, 2, 2).unwrap();
        let path = core_to_path(&Partition::empty(), family).unwrap();
        assert_eq!(path.to_string(), "FFDFD");
    }

    #[test]
    fn maps_a_two_modulus_core_to_its_path() {
        let family = CoreFamily::new(5, 3, 2).unwrap();
        let path = core_to_path(&pt(&[6, 4, 3, 1, 1, 1, 1]), family).unwrap();
        assert_eq!(path.to_string(), "UDUFDDDD");
    }

    #[test]
    fn rejects_a_partition_with_a_family_hook() {
        let family = CoreFamily::new(5, 3, 3).unwrap();
        // (5) has a hook of length 5, the first family modulus.
        assert_eq!(
            core_to_path(&pt(&[5]), family).unwrap_err(),
            BijectionError::NotAFamilyCore { modulus: 5 }
        );
        // (5, 1, 1, 1) is a 5-core but has a hook of length 8 = s + d.
        assert_eq!(
            core_to_path(&pt(&[5, 1, 1, 1]), family).unwrap_err(),
            BijectionError::NotAFamilyCore { modulus: 8 }
        );
    }

    #[test]
    fn rebuilds_the_worked_core_from_its_path() {
        let family = CoreFamily::new(5, 3, 3).unwrap();
        let path = RationalMotzkinPath::new(w("UFUDDDDD"), 5, 3).unwrap();
        assert_eq!(path_to_core(&path, family).unwrap(), pt(&[9, 5, 3, 2, 2, 1, 1, 1, 1]));
    }

    #[test]
    fn rebuilds_the_empty_partition_from_the_boundary_path() {
        let family = CoreFamily::new(3, 2, 2).unwrap();
        let path = RationalMotzkinPath::new(w("FFDFD"), 3, 2).unwrap();
        assert_eq!(path_to_core(&path, family).unwrap(), Partition::empty());
    }

    #[test]
    fn the_six_smallest_family_paths_map_onto_the_six_cores() {
        let family = CoreFamily::new(3, 2, 2).unwrap();
        let cores: BTreeSet<Partition> = enumerate_rational_motzkin(3, 2, 2)
            .unwrap()
            .iter()
            .map(|path| path_to_core(path, family).unwrap())
            .collect();
        let expected: BTreeSet<Partition> =
            [&[][..], &[1], &[1, 1], &[2], &[2, 1, 1], &[3, 1]].iter().map(|p| pt(p)).collect();
        assert_eq!(cores, expected);
    }

    #[test]
    fn rejects_a_path_whose_type_disagrees_with_the_family() {
        let family = CoreFamily::new(5, 3, 3).unwrap();
        let path = RationalMotzkinPath::new(w("FFDFD"), 3, 2).unwrap();
        assert_eq!(
            path_to_core(&path, family).unwrap_err(),
            BijectionError::FamilyMismatch { path_s: 3, path_d: 2, family_s: 5, family_d: 3 }
        );
    }

    #[test]
    fn rejects_a_path_with_a_forbidden_rise_pattern() {
        // Rational for (5, 3) but contains UU, which p = 3 forbids.
        let path = RationalMotzkinPath::new(w("UUDDDFDD"), 5, 3).unwrap();
        assert_eq!(
            path_to_core(&path, CoreFamily::new(5, 3, 3).unwrap()).unwrap_err(),
            BijectionError::ForbiddenPattern { p: 3 }
        );
        assert!(path_to_core(&path, CoreFamily::new(5, 3, 2).unwrap()).is_ok());
    }

    #[test]
    fn round_trips_from_the_path_side_on_small_families() {
        for (s, d, p) in [(3, 2, 2), (5, 3, 3), (4, 1, 3), (5, 2, 4), (1, 4, 2)] {
            let family = CoreFamily::new(s, d, p).unwrap();
            for path in enumerate_rational_motzkin(s, d, p).unwrap() {
                let lambda = path_to_core(&path, family).unwrap();
                let back = core_to_path(&lambda, family).unwrap();
                assert_eq!(back, path, "family {family}, partition {lambda}");
            }
        }
    }

    #[test]
    fn renames_units_in_the_worked_example() {
        let image = phi(&w("UFFUFFFUDDUFDUFFDD"), 4).unwrap();
        assert_eq!(image.to_string(), "U4 U4 F1 F2 D4 F3 U4 D4 D4");
    }

    #[test]
    fn each_letter_is_its_own_unit_when_p_is_two() {
        assert_eq!(phi(&w("FFFF"), 2).unwrap().to_string(), "F1 F1 F1 F1");
        assert_eq!(phi(&w("UDF"), 2).unwrap().to_string(), "U2 D2 F1");
    }

    #[test]
    fn greedy_cut_prefers_the_up_unit() {
        assert_eq!(phi(&w("UFUDD"), 3).unwrap().to_string(), "U3 F2 D3");
    }

    #[test]
    fn phi_rejects_inputs_outside_its_domain() {
        assert_eq!(phi(&w("UUDD"), 3).unwrap_err(), BijectionError::ForbiddenPattern { p: 3 });
        assert_eq!(phi(&w("DU"), 3).unwrap_err(), BijectionError::NotMotzkin);
        assert_eq!(phi(&w("UF"), 3).unwrap_err(), BijectionError::NotMotzkin);
        assert_eq!(phi(&w("UD"), 1).unwrap_err(), BijectionError::PTooSmall { p: 1 });
        // The rise pattern is only forbidden from p = 3 on.
        assert!(phi(&w("UUDD"), 2).is_ok());
    }

    #[test]
    fn expands_generalized_steps_back_to_motzkin_letters() {
        let path = gd("U4 U4 F1 F2 D4 F3 U4 D4 D4", 4);
        assert_eq!(phi_inverse(&path).to_string(), "UFFUFFFUDDUFDUFFDD");
        assert_eq!(phi_inverse(&gd("F1 F1 F1", 2)).to_string(), "FFF");
        assert_eq!(phi_inverse(&gd("U3 F2 D3", 3)).to_string(), "UFUDD");
    }

    #[test]
    fn phi_is_a_bijection_between_its_enumerated_domains() {
        for p in 2..=4 {
            for len in 0..=7usize {
                let domain: Vec<StepWord> = all_words(len)
                    .into_iter()
                    .filter(|word| word.is_motzkin() && !has_forbidden_pattern(word, p, false))
                    .collect();
                let mut images = BTreeSet::new();
                for word in &domain {
                    let image = phi(word, p).unwrap();
                    assert_eq!(phi_inverse(&image), *word, "phi is injective on {word}");
                    images.insert(image.to_string());
                }
                let codomain = enumerate_gen_dyck(len as u32, p);
                assert_eq!(images.len(), codomain.len(), "len={len} p={p}");
                for path in &codomain {
                    assert_eq!(phi(&phi_inverse(path), p).unwrap(), *path);
                }
            }
        }
    }

    #[test]
    fn phi_conserves_rises_across_the_unit_cut() {
        for word in all_words(6) {
            if !word.is_motzkin() || has_forbidden_pattern(&word, 4, false) {
                continue;
            }
            let image = phi(&word, 4).unwrap();
            // Every rise heads either an up unit or a flat unit U F^j D, and
            // every descent closes either a down unit or a flat unit.
            let tall_flats = image
                .steps()
                .iter()
                .filter(|step| matches!(step, GenStep::Flat(i) if *i >= 2))
                .count();
            let downs =
                image.steps().iter().filter(|&&step| step == GenStep::Down).count();
            assert_eq!(image.up_count() + tall_flats, word.count(Step::Up), "{word}");
            assert_eq!(downs + tall_flats, word.count(Step::Down), "{word}");
        }
    }

    #[test]
    fn corner_count_matches_up_steps_in_the_worked_example() {
        let family = CoreFamily::new(7, 1, 2).unwrap();
        let comparison = corners_equal_upsteps(&pt(&[9, 3, 3, 3, 1]), family).unwrap();
        assert!(comparison.agrees());
        assert_eq!((comparison.corners, comparison.up_steps), (3, 3));
    }

    #[test]
    fn corner_count_of_the_empty_partition_is_zero() {
        let family = CoreFamily::new(4, 1, 2).unwrap();
        let comparison = corners_equal_upsteps(&Partition::empty(), family).unwrap();
        assert_eq!((comparison.corners, comparison.up_steps), (0, 0));
    }

    #[test]
    fn corner_count_matches_up_steps_for_every_small_family_core() {
        let family = CoreFamily::new(4, 1, 2).unwrap();
        let paths = enumerate_rational_motzkin(4, 1, 2).unwrap();
        assert_eq!(paths.len(), 9);
        for path in paths {
            let lambda = path_to_core(&path, family).unwrap();
            let comparison = corners_equal_upsteps(&lambda, family).unwrap();
            assert!(comparison.agrees(), "partition {lambda}");
        }
    }

    #[test]
    fn corner_comparison_rejects_other_families_and_non_cores() {
        let wide = CoreFamily::new(5, 3, 2).unwrap();
        assert_eq!(
            corners_equal_upsteps(&Partition::empty(), wide).unwrap_err(),
            BijectionError::DNotOne { d: 3 }
        );
        let family = CoreFamily::new(4, 1, 2).unwrap();
        assert_eq!(
            corners_equal_upsteps(&pt(&[4]), family).unwrap_err(),
            BijectionError::NotAFamilyCore { modulus: 4 }
        );
    }
}
