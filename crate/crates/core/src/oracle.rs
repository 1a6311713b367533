//! Brute-force ground truth for the rest of the crate.
//!
//! Everything here is deliberately dumb: core partitions are enumerated by
//! sweeping residue-count vectors and checking the core conditions element by
//! element, and paths are generated letter by letter over the raw step
//! alphabets with the constraints spelled out inline. None of it calls into
//! [`crate::bijections`] or [`crate::counting`] — the whole point of this
//! module is to disagree with them if they are wrong.

use rayon::prelude::*;

use crate::partition::Partition;
use crate::paths::{GenDyckPath, GenStep, Step, StepWord};

/// Error produced when an enumeration request is out of domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    /// Fewer than two moduli cannot guarantee a finite enumeration.
    TooFewModuli,
    /// The first two moduli share a factor, so there are infinitely many
    /// simultaneous cores.
    NotCoprime { a: u64, b: u64 },
    /// The request is beyond the desk-scale cap of a generator.
    CapExceeded { size: u64, cap: u64 },
}

impl std::fmt::Display for OracleError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OracleError::TooFewModuli => {
                write!(f, "need at least two moduli to bound the enumeration")
            }
            OracleError::NotCoprime { a, b } => {
                write!(f, "moduli {a} and {b} share a factor, so the core set is infinite")
            }
            OracleError::CapExceeded { size, cap } => {
                write!(f, "size {size} exceeds the brute-force cap {cap}")
            }
        }
    }
}

impl std::error::Error for OracleError {}

/// Counts of beta-set elements per nonzero residue class mod `s`.
///
/// Entry `r - 1` says how many of `r, r + s, r + 2s, ...` belong to the
/// beta-set. Downward closure within each class makes the encoded partition
/// an `s`-core by construction, and every `s`-core arises this way.
struct ResidueVector<'a> {
    counts: &'a [u64],
    s: u64,
}

impl ResidueVector<'_> {
    /// Whether `x` belongs to the encoded beta-set.
    fn contains(&self, x: u64) -> bool {
        let r = x % self.s;
        r != 0 && (x - r) / self.s < self.counts[(r - 1) as usize]
    }

    /// Whether the encoded beta-set satisfies the `t`-core condition:
    /// `t` is absent and every element above `t` has its `t`-predecessor.
    fn is_core_for(&self, t: u64) -> bool {
        if self.contains(t) {
            return false;
        }
        for (index, &count) in self.counts.iter().enumerate() {
            let r = index as u64 + 1;
            for m in 0..count {
                let x = r + m * self.s;
                if x > t && !self.contains(x - t) {
                    return false;
                }
            }
        }
        true
    }

    /// The encoded partition.
    fn to_partition(&self) -> Partition {
        let mut beta: Vec<u64> = Vec::new();
        for (index, &count) in self.counts.iter().enumerate() {
            let r = index as u64 + 1;
            beta.extend((0..count).map(|m| r + m * self.s));
        }
        beta.sort_unstable_by(|a, b| b.cmp(a));
        let l = beta.len() as u64;
        Partition::new(beta.iter().enumerate().map(|(i, &x)| x - (l - 1 - i as u64)).collect())
    }
}

/// Advances `counts` as an odometer in `0..=cap` per digit, starting from
/// `from`. Returns false once every combination has been visited.
fn advance(counts: &mut [u64], cap: u64, from: usize) -> bool {
    for digit in counts[from..].iter_mut() {
        if *digit < cap {
            *digit += 1;
            return true;
        }
        *digit = 0;
    }
    false
}

/// All partitions that are simultaneous `t`-cores for every `t` in `ts`,
/// sorted by size and then lexicographically by parts.
///
/// Sweeps every residue-count vector for the first modulus with each count
/// capped by the second modulus (so beta elements stay below `ts[0] * ts[1]`)
/// and keeps the vectors satisfying the remaining core conditions.
///
/// Panics unless `ts` is nonempty, positive, and sorted ascending.
pub fn enumerate_cores(ts: &[u64]) -> Result<Vec<Partition>, OracleError> {
    enumerate_cores_with_cap(ts, None)
}

/// [`enumerate_cores`] with an explicit per-residue cap override; the tests
/// use it to confirm that enlarging the default bound finds nothing new.
fn enumerate_cores_with_cap(ts: &[u64], cap: Option<u64>) -> Result<Vec<Partition>, OracleError> {
    assert!(ts.iter().all(|&t| t >= 1), "moduli must be positive");
    assert!(ts.windows(2).all(|w| w[0] <= w[1]), "moduli must be sorted ascending");
    if ts.len() < 2 {
        return Err(OracleError::TooFewModuli);
    }
    let (s, t) = (ts[0], ts[1]);
    if num_integer::gcd(s, t) != 1 {
        return Err(OracleError::NotCoprime { a: s, b: t });
    }
    let cap = cap.unwrap_or(t);
    let digits = (s - 1) as usize;
    let mut found: Vec<Partition> = if digits == 0 {
        // s = 1: the only 1-core is the empty partition.
        let vector = ResidueVector { counts: &[], s };
        ts[1..].iter().all(|&t| vector.is_core_for(t)).then(|| vector.to_partition()).into_iter().collect()
    } else {
        (0..=cap)
            .into_par_iter()
            .flat_map_iter(|first| CoreScan::new(first, digits, cap, s, &ts[1..]))
            .collect()
    };
    found.sort_unstable_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
    Ok(found)
}

/// Sequential scan over all residue-count vectors with a fixed first digit;
/// one of these runs per parallel worker.
struct CoreScan<'a> {
    counts: Vec<u64>,
    cap: u64,
    s: u64,
    rest: &'a [u64],
    done: bool,
}

impl<'a> CoreScan<'a> {
    fn new(first: u64, digits: usize, cap: u64, s: u64, rest: &'a [u64]) -> Self {
        let mut counts = vec![0; digits];
        counts[0] = first;
        CoreScan { counts, cap, s, rest, done: false }
    }
}

impl Iterator for CoreScan<'_> {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        while !self.done {
            let vector = ResidueVector { counts: &self.counts, s: self.s };
            let hit =
                self.rest.iter().all(|&t| vector.is_core_for(t)).then(|| vector.to_partition());
            // Keep the first digit fixed; it belongs to the worker.
            self.done = !advance(&mut self.counts, self.cap, 1);
            if hit.is_some() {
                return hit;
            }
        }
        None
    }
}

/// The self-conjugate members of [`enumerate_cores`], in the same order.
pub fn enumerate_sc_cores(ts: &[u64]) -> Result<Vec<Partition>, OracleError> {
    Ok(enumerate_cores(ts)?.into_iter().filter(Partition::is_self_conjugate).collect())
}

/// Longest word length the letter-by-letter generators accept.
const WORD_CAP: u64 = 14;

/// Depth-first generation of every word over `alphabet` of length `len`
/// whose prefixes all pass `prefix_ok` and which passes `complete_ok`.
fn search_words(
    alphabet: &[Step],
    len: usize,
    prefix_ok: &dyn Fn(&[Step]) -> bool,
    complete_ok: &dyn Fn(&[Step]) -> bool,
) -> Vec<StepWord> {
    fn recurse(
        alphabet: &[Step],
        len: usize,
        prefix: &mut Vec<Step>,
        prefix_ok: &dyn Fn(&[Step]) -> bool,
        complete_ok: &dyn Fn(&[Step]) -> bool,
        found: &mut Vec<StepWord>,
    ) {
        if prefix.len() == len {
            if complete_ok(prefix) {
                found.push(StepWord::new(prefix.clone()));
            }
            return;
        }
        for &step in alphabet {
            prefix.push(step);
            if prefix_ok(prefix) {
                recurse(alphabet, len, prefix, prefix_ok, complete_ok, found);
            }
            prefix.pop();
        }
    }
    let mut found = Vec::new();
    recurse(alphabet, len, &mut Vec::with_capacity(len), prefix_ok, complete_ok, &mut found);
    found
}

/// Net height of a word: rises minus descents.
fn net_height(steps: &[Step]) -> i64 {
    steps
        .iter()
        .map(|step| match step {
            Step::Up => 1,
            Step::Flat => 0,
            Step::Down => -1,
        })
        .sum()
}

/// Whether two rises are separated only by `i <= p - 3` flats. Only adjacent
/// rises can have an all-flat gap, so consecutive pairs suffice.
fn has_close_rise_pair(steps: &[Step], p: u32) -> bool {
    if p <= 2 {
        return false;
    }
    let rises: Vec<usize> =
        steps.iter().enumerate().filter(|(_, &s)| s == Step::Up).map(|(i, _)| i).collect();
    rises.windows(2).any(|pair| {
        pair[1] - pair[0] - 1 <= (p - 3) as usize
            && steps[pair[0] + 1..pair[1]].iter().all(|&s| s == Step::Flat)
    })
}

/// Whether the word equals its reversal with rises and descents exchanged.
fn is_palindromic_under_swap(steps: &[Step]) -> bool {
    steps.iter().zip(steps.iter().rev()).all(|(a, b)| match (a, b) {
        (Step::Up, Step::Down) | (Step::Down, Step::Up) | (Step::Flat, Step::Flat) => true,
        _ => false,
    })
}

/// Number of positions where a rise immediately follows a rise.
pub fn uu_factor_count(word: &StepWord) -> usize {
    word.steps().windows(2).filter(|pair| pair == &[Step::Up, Step::Up]).count()
}

fn check_cap(len: u64) -> Result<(), OracleError> {
    if len > WORD_CAP {
        return Err(OracleError::CapExceeded { size: len, cap: WORD_CAP });
    }
    Ok(())
}

/// All Motzkin words of length `len`: never below height zero, ending at
/// height zero.
pub fn exhaustive_motzkin(len: u64) -> Result<Vec<StepWord>, OracleError> {
    check_cap(len)?;
    Ok(search_words(
        &[Step::Up, Step::Flat, Step::Down],
        len as usize,
        &|prefix| net_height(prefix) >= 0,
        &|steps| net_height(steps) == 0,
    ))
}

/// The symmetric members of [`exhaustive_motzkin`].
pub fn exhaustive_symmetric_motzkin(len: u64) -> Result<Vec<StepWord>, OracleError> {
    Ok(exhaustive_motzkin(len)?
        .into_iter()
        .filter(|word| is_palindromic_under_swap(word.steps()))
        .collect())
}

/// All rational Motzkin words of type `(s+d, -d)` avoiding close rise pairs
/// for `p`: length `s + d`, every lattice point label `(s+d)h + dx`
/// nonnegative, final height `-d`, and no `U F^i U` with `i <= p - 3`.
pub fn exhaustive_rational_motzkin(s: u32, d: u32, p: u32) -> Result<Vec<StepWord>, OracleError> {
    let n = (s + d) as i64;
    check_cap(n as u64)?;
    Ok(search_words(
        &[Step::Up, Step::Flat, Step::Down],
        n as usize,
        &|prefix| n * net_height(prefix) + d as i64 * prefix.len() as i64 >= 0,
        &|steps| net_height(steps) == -(d as i64) && !has_close_rise_pair(steps, p),
    ))
}

/// All words of length `s + d` with final height `-d` and no other
/// constraint; the raw material for rotation arguments.
pub fn exhaustive_free_endpoint(s: u32, d: u32) -> Result<Vec<StepWord>, OracleError> {
    let n = (s + d) as u64;
    check_cap(n)?;
    Ok(search_words(
        &[Step::Up, Step::Flat, Step::Down],
        n as usize,
        &|_| true,
        &|steps| net_height(steps) == -(d as i64),
    ))
}

/// Longest semilength the two-letter Dyck generators accept.
const DYCK_CAP: u64 = 10;

/// All Dyck words of semilength `k`: rises and descents only, never below
/// height zero, ending at height zero.
pub fn exhaustive_dyck(k: u64) -> Result<Vec<StepWord>, OracleError> {
    if k > DYCK_CAP {
        return Err(OracleError::CapExceeded { size: k, cap: DYCK_CAP });
    }
    Ok(search_words(
        &[Step::Up, Step::Down],
        (2 * k) as usize,
        &|prefix| net_height(prefix) >= 0,
        &|steps| net_height(steps) == 0,
    ))
}

/// The symmetric members of [`exhaustive_dyck`].
pub fn exhaustive_symmetric_dyck(k: u64) -> Result<Vec<StepWord>, OracleError> {
    Ok(exhaustive_dyck(k)?
        .into_iter()
        .filter(|word| is_palindromic_under_swap(word.steps()))
        .collect())
}

/// Longest semilength the generalized Dyck generator accepts.
const GEN_DYCK_CAP: u64 = 20;

/// All generalized Dyck paths of order `(s, p)`, generated token by token:
/// from `(0, 0)` to `(s, s)` via `U_p = (0, p)`, `F_i = (i, i)`,
/// `D_p = (p, 0)`, staying weakly above the diagonal.
pub fn exhaustive_gen_dyck(s: u32, p: u32) -> Result<Vec<GenDyckPath>, OracleError> {
    assert!(p >= 2, "generalized Dyck paths need p >= 2");
    if s as u64 > GEN_DYCK_CAP {
        return Err(OracleError::CapExceeded { size: s as u64, cap: GEN_DYCK_CAP });
    }
    let mut alphabet = vec![GenStep::Up];
    alphabet.extend((1..p).map(GenStep::Flat));
    alphabet.push(GenStep::Down);
    let mut found = Vec::new();
    let mut prefix = Vec::new();
    gen_dyck_recurse(&alphabet, s as u64, p as u64, (0, 0), &mut prefix, &mut found);
    Ok(found.into_iter().map(|steps| {
        GenDyckPath::new(steps, s, p).expect("the scan only keeps valid paths")
    }).collect())
}

fn gen_dyck_recurse(
    alphabet: &[GenStep],
    s: u64,
    p: u64,
    at: (u64, u64),
    prefix: &mut Vec<GenStep>,
    found: &mut Vec<Vec<GenStep>>,
) {
    let (x, y) = at;
    if x == s && y == s {
        found.push(prefix.clone());
    }
    for &step in alphabet {
        let (dx, dy) = match step {
            GenStep::Up => (0, p),
            GenStep::Flat(i) => (i as u64, i as u64),
            GenStep::Down => (p, 0),
        };
        let (nx, ny) = (x + dx, y + dy);
        if ny >= nx && nx <= s && ny <= s {
            prefix.push(step);
            gen_dyck_recurse(alphabet, s, p, (nx, ny), prefix, found);
            prefix.pop();
        }
    }
}

/// The members of [`exhaustive_gen_dyck`] equal to their own reversal with
/// up and down steps exchanged.
pub fn exhaustive_symmetric_gen_dyck(s: u32, p: u32) -> Result<Vec<GenDyckPath>, OracleError> {
    Ok(exhaustive_gen_dyck(s, p)?
        .into_iter()
        .filter(|path| {
            path.steps().iter().zip(path.steps().iter().rev()).all(|(a, b)| match (a, b) {
                (GenStep::Up, GenStep::Down) | (GenStep::Down, GenStep::Up) => true,
                (GenStep::Flat(i), GenStep::Flat(j)) => i == j,
                _ => false,
            })
        })
        .collect())
}
