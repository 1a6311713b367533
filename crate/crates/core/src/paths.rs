//! Rational Motzkin paths, their label vectors, and generalized Dyck paths.
//!
//! A word over `U = (1,1)`, `F = (1,0)`, `D = (1,-1)` of length `s+d` ending
//! at height `-d` is a *free* path of type `(s+d, -d)`; it is *rational* when
//! it stays weakly above the line `y = -dx/(s+d)`. The label vector attaches
//! `(s+d) * height + d * x` to each lattice point, so rationality is simply
//! "all labels nonnegative", and for coprime `s`, `d` exactly one cyclic
//! rotation of any free path is rational.
//!
//! Generalized Dyck paths of order `(s, p)` run from `(0,0)` to `(s,s)` with
//! steps `U_p = (0,p)`, `D_p = (p,0)`, and `F_i = (i,i)` for `1 <= i <= p-1`,
//! staying weakly above the diagonal.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// A Motzkin step. The variant order gives the lexicographic enumeration
/// order `U < F < D`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Step {
    Up,
    Flat,
    Down,
}

impl Step {
    pub fn char(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Flat => 'F',
            Step::Down => 'D',
        }
    }

    /// Height change of the step.
    pub fn rise(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Flat => 0,
            Step::Down => -1,
        }
    }

    /// The step of the reversed path: swaps `U` and `D`.
    pub fn swapped(self) -> Step {
        match self {
            Step::Up => Step::Down,
            Step::Flat => Step::Flat,
            Step::Down => Step::Up,
        }
    }
}

/// A word over the Motzkin alphabet, e.g. `UFUDDDDD`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct StepWord(Vec<Step>);

impl StepWord {
    pub fn new(steps: Vec<Step>) -> Self {
        StepWord(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, step: Step) -> usize {
        self.0.iter().filter(|&&s| s == step).count()
    }

    /// Heights after 0, 1, ..., len steps (starts at 0).
    pub fn heights(&self) -> Vec<i64> {
        let mut h = 0;
        std::iter::once(0)
            .chain(self.0.iter().map(move |s| {
                h += s.rise();
                h
            }))
            .collect()
    }

    /// Height after the final step.
    pub fn final_height(&self) -> i64 {
        self.0.iter().map(|s| s.rise()).sum()
    }

    /// Whether the word is a Motzkin path: never below height 0 and ending
    /// at height 0.
    pub fn is_motzkin(&self) -> bool {
        let mut h = 0;
        for step in &self.0 {
            h += step.rise();
            if h < 0 {
                return false;
            }
        }
        h == 0
    }

    /// The reversed word with `U` and `D` exchanged.
    pub fn reverse_swap(&self) -> StepWord {
        StepWord(self.0.iter().rev().map(|s| s.swapped()).collect())
    }
}

impl fmt::Display for StepWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.0 {
            write!(f, "{}", step.char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for StepWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for StepWord {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| match c {
                'U' => Ok(Step::Up),
                'F' => Ok(Step::Flat),
                'D' => Ok(Step::Down),
                other => Err(PathError::Malformed(format!(
                    "unexpected character {other:?} in step word {s:?}"
                ))),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(StepWord)
    }
}

/// Error produced when a path fails validation or parsing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathError {
    LengthMismatch { expected: usize, got: usize },
    EndpointMismatch { expected: i64, got: i64 },
    BelowBoundary { index: usize },
    NotCoprime { s: u32, d: u32 },
    ZeroParameter,
    PTooSmall { p: u32 },
    FlatStepOutOfRange { i: u32, p: u32 },
    DiagonalViolated { index: usize },
    WrongDestination { x: u64, y: u64, s: u32 },
    Malformed(String),
}

impl fmt::Display for PathError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathError::LengthMismatch { expected, got } => {
                write!(f, "path must have {expected} steps, got {got}")
            }
            PathError::EndpointMismatch { expected, got } => {
                write!(f, "path must end at height {expected}, ends at {got}")
            }
            PathError::BelowBoundary { index } => {
                write!(f, "path dips below the boundary line after step {index}")
            }
            PathError::NotCoprime { s, d } => write!(f, "s = {s} and d = {d} must be coprime"),
            PathError::ZeroParameter => write!(f, "path parameters must be positive"),
            PathError::PTooSmall { p } => write!(f, "p = {p} is too small, need p >= 2"),
            PathError::FlatStepOutOfRange { i, p } => {
                write!(f, "flat step F{i} out of range for p = {p} (need 1 <= i <= p-1)")
            }
            PathError::DiagonalViolated { index } => {
                write!(f, "path dips below the diagonal after step {index}")
            }
            PathError::WrongDestination { x, y, s } => {
                write!(f, "path ends at ({x},{y}) instead of ({s},{s})")
            }
            PathError::Malformed(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for PathError {}

/// The labels `(s+d) * height + d * x` along a path of type `(s+d, -d)`.
///
/// For a free path the first and last entries are both 0; for coprime `s`,
/// `d` the interior entries are distinct and nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelVector {
    values: Vec<i64>,
}

impl LabelVector {
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn min(&self) -> i64 {
        self.values.iter().copied().min().expect("label vector is never empty")
    }

    /// Index of the minimum among entries `0..len-1`; the final entry
    /// duplicates the first and is ignored. This is the rotation that makes
    /// a free path rational.
    pub fn min_index(&self) -> usize {
        let interior = &self.values[..self.values.len() - 1];
        let (idx, _) = interior
            .iter()
            .enumerate()
            .min_by_key(|&(_, v)| v)
            .expect("label vector is never empty");
        idx
    }
}

impl fmt::Display for LabelVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// The label vector of `word` as a path of type `(s+d, -d)`.
///
/// Panics unless the word has exactly `s + d` steps.
pub fn label_vector(word: &StepWord, s: u32, d: u32) -> LabelVector {
    let n = (s + d) as usize;
    assert_eq!(word.len(), n, "word must have s + d = {n} steps");
    let values = word
        .heights()
        .into_iter()
        .enumerate()
        .map(|(x, h)| n as i64 * h + d as i64 * x as i64)
        .collect();
    LabelVector { values }
}

/// Whether the free path stays weakly above `y = -dx/(s+d)`, i.e. whether
/// all labels are nonnegative.
///
/// Panics unless the word has `s + d` steps ending at height `-d`.
pub fn is_rational(word: &StepWord, s: u32, d: u32) -> bool {
    assert_eq!(
        word.final_height(),
        -(d as i64),
        "free path of type ({}, -{d}) must end at height -{d}",
        s + d
    );
    label_vector(word, s, d).min() >= 0
}

/// Whether the word contains a factor `U F^i U` with `0 <= i <= p-3`.
///
/// With `cyclic` set, factors may wrap around the end of the word. For
/// `p = 2` there are no forbidden factors.
pub fn has_forbidden_pattern(word: &StepWord, p: u32, cyclic: bool) -> bool {
    assert!(p >= 2, "pattern parameter needs p >= 2");
    let steps = word.steps();
    let n = steps.len();
    if p == 2 || n == 0 {
        return false;
    }
    let max_gap = (p - 2) as usize;
    for i in 0..n {
        if steps[i] != Step::Up {
            continue;
        }
        for t in 1..=max_gap.min(n - 1) {
            let next = if cyclic {
                steps[(i + t) % n]
            } else if i + t < n {
                steps[i + t]
            } else {
                break;
            };
            match next {
                Step::Flat => continue,
                Step::Up => return true,
                Step::Down => break,
            }
        }
    }
    false
}

/// The rotation sending `P_1 ... P_n` to `P_{j+1} ... P_n P_1 ... P_j`.
///
/// Panics if `j` is out of range (`j = 0` is always allowed).
pub fn cyclic_shift(word: &StepWord, j: usize) -> StepWord {
    if j == 0 {
        return word.clone();
    }
    assert!(j < word.len(), "shift {j} out of range for word of length {}", word.len());
    let mut steps = word.steps().to_vec();
    steps.rotate_left(j);
    StepWord(steps)
}

/// A path of type `(s+d, -d)` constrained only at its endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeRationalMotzkinPath {
    word: StepWord,
    s: u32,
    d: u32,
}

impl FreeRationalMotzkinPath {
    pub fn new(word: StepWord, s: u32, d: u32) -> Result<Self, PathError> {
        if s == 0 || d == 0 {
            return Err(PathError::ZeroParameter);
        }
        let n = (s + d) as usize;
        if word.len() != n {
            return Err(PathError::LengthMismatch { expected: n, got: word.len() });
        }
        let endpoint = word.final_height();
        if endpoint != -(d as i64) {
            return Err(PathError::EndpointMismatch { expected: -(d as i64), got: endpoint });
        }
        Ok(FreeRationalMotzkinPath { word, s, d })
    }

    pub fn word(&self) -> &StepWord {
        &self.word
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn d(&self) -> u32 {
        self.d
    }
}

/// A rational Motzkin path of type `(s+d, -d)`: a free path that stays
/// weakly above `y = -dx/(s+d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalMotzkinPath {
    word: StepWord,
    s: u32,
    d: u32,
}

impl RationalMotzkinPath {
    pub fn new(word: StepWord, s: u32, d: u32) -> Result<Self, PathError> {
        let free = FreeRationalMotzkinPath::new(word, s, d)?;
        let labels = label_vector(&free.word, s, d);
        if let Some(index) = labels.values().iter().position(|&v| v < 0) {
            return Err(PathError::BelowBoundary { index });
        }
        Ok(RationalMotzkinPath { word: free.word, s, d })
    }

    pub fn word(&self) -> &StepWord {
        &self.word
    }

    pub fn into_word(self) -> StepWord {
        self.word
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn up_count(&self) -> usize {
        self.word.count(Step::Up)
    }
}

impl fmt::Display for RationalMotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word.fmt(f)
    }
}

/// The unique rational rotation of a free path, together with the rotation
/// index: the label vector's minimum marks where the rational path starts.
///
/// Panics unless `gcd(s, d) = 1`, which is what makes the rotation unique.
pub fn canonicalize(path: &FreeRationalMotzkinPath) -> (usize, RationalMotzkinPath) {
    assert_eq!(
        num_integer::gcd(path.s, path.d),
        1,
        "canonical rotation needs coprime s, d"
    );
    let labels = label_vector(&path.word, path.s, path.d);
    let j = labels.min_index();
    let rotated = cyclic_shift(&path.word, j);
    let rational = RationalMotzkinPath::new(rotated, path.s, path.d)
        .expect("rotation to the label minimum is rational");
    (j, rational)
}

/// All rational Motzkin paths of type `(s+d, -d)` avoiding `U F^i U` for
/// `0 <= i <= p-3`, in lexicographic order with `U < F < D`.
pub fn enumerate_rational_motzkin(
    s: u32,
    d: u32,
    p: u32,
) -> Result<Vec<RationalMotzkinPath>, PathError> {
    if s == 0 || d == 0 {
        return Err(PathError::ZeroParameter);
    }
    if num_integer::gcd(s, d) != 1 {
        return Err(PathError::NotCoprime { s, d });
    }
    if p < 2 {
        return Err(PathError::PTooSmall { p });
    }
    let n = (s + d) as usize;
    let target = -(d as i64);
    let mut out = Vec::new();
    let mut word: Vec<Step> = Vec::with_capacity(n);
    // `flats_since_up` is Some(f) when the last non-flat step was U, with f
    // flats after it; placing U then would create U F^f U.
    fn rec(
        word: &mut Vec<Step>,
        height: i64,
        flats_since_up: Option<u32>,
        n: usize,
        s: u32,
        d: u32,
        p: u32,
        target: i64,
        out: &mut Vec<RationalMotzkinPath>,
    ) {
        let x = word.len();
        if x == n {
            out.push(RationalMotzkinPath {
                word: StepWord(word.clone()),
                s,
                d,
            });
            return;
        }
        let remaining = (n - x - 1) as i64;
        for step in [Step::Up, Step::Flat, Step::Down] {
            let h = height + step.rise();
            if n as i64 * h + d as i64 * (x as i64 + 1) < 0 {
                continue;
            }
            if (h - target).abs() > remaining {
                continue;
            }
            if step == Step::Up {
                if let Some(f) = flats_since_up {
                    if p >= 3 && f <= p - 3 {
                        continue;
                    }
                }
            }
            let next_flats = match step {
                Step::Up => Some(0),
                Step::Flat => flats_since_up.map(|f| f + 1),
                Step::Down => None,
            };
            word.push(step);
            rec(word, h, next_flats, n, s, d, p, target, out);
            word.pop();
        }
    }
    rec(&mut word, 0, None, n, s, d, p, target, &mut out);
    Ok(out)
}

/// A generalized Dyck step for order parameter `p`. The variant order gives
/// the lexicographic enumeration order `U_p < F_1 < ... < F_{p-1} < D_p`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GenStep {
    Up,
    Flat(u32),
    Down,
}

impl GenStep {
    /// Displacement `(dx, dy)` for order parameter `p`.
    fn displacement(self, p: u32) -> (u64, u64) {
        match self {
            GenStep::Up => (0, p as u64),
            GenStep::Flat(i) => (i as u64, i as u64),
            GenStep::Down => (p as u64, 0),
        }
    }
}

/// A generalized Dyck path of order `(s, p)`: from `(0,0)` to `(s,s)` by
/// steps `U_p`, `D_p`, `F_i`, staying weakly above the diagonal.
///
/// Serialized as space-separated tokens, e.g. `U4 F1 F2 D4`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GenDyckPath {
    steps: Vec<GenStep>,
    s: u32,
    p: u32,
}

impl GenDyckPath {
    pub fn new(steps: Vec<GenStep>, s: u32, p: u32) -> Result<Self, PathError> {
        if p < 2 {
            return Err(PathError::PTooSmall { p });
        }
        let (mut x, mut y) = (0u64, 0u64);
        for (index, step) in steps.iter().enumerate() {
            if let GenStep::Flat(i) = step {
                if *i == 0 || *i >= p {
                    return Err(PathError::FlatStepOutOfRange { i: *i, p });
                }
            }
            let (dx, dy) = step.displacement(p);
            x += dx;
            y += dy;
            if y < x {
                return Err(PathError::DiagonalViolated { index });
            }
        }
        if x != s as u64 || y != s as u64 {
            return Err(PathError::WrongDestination { x, y, s });
        }
        Ok(GenDyckPath { steps, s, p })
    }

    pub fn steps(&self) -> &[GenStep] {
        &self.steps
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn up_count(&self) -> usize {
        self.steps.iter().filter(|s| matches!(s, GenStep::Up)).count()
    }

    /// Parses space-separated tokens like `U4 F1 F2 D4`; the numeric suffix
    /// of every `U`/`D` token must equal `p`.
    pub fn parse(text: &str, p: u32) -> Result<Self, PathError> {
        let mut steps = Vec::new();
        let (mut x, mut y) = (0u64, 0u64);
        for token in text.split_whitespace() {
            let (kind, num) = token
                .split_at_checked(1)
                .ok_or_else(|| PathError::Malformed(format!("bad path token {token:?}")))?;
            let value: u32 = num
                .parse()
                .map_err(|_| PathError::Malformed(format!("bad path token {token:?}")))?;
            let step = match kind {
                "U" | "D" => {
                    if value != p {
                        return Err(PathError::Malformed(format!(
                            "token {token:?} disagrees with p = {p}"
                        )));
                    }
                    if kind == "U" {
                        GenStep::Up
                    } else {
                        GenStep::Down
                    }
                }
                "F" => GenStep::Flat(value),
                _ => return Err(PathError::Malformed(format!("bad path token {token:?}"))),
            };
            let (dx, dy) = step.displacement(p);
            x += dx;
            y += dy;
            steps.push(step);
        }
        let s32: u32 = u32::try_from(x.max(y))
            .map_err(|_| PathError::Malformed("path destination too large".into()))?;
        GenDyckPath::new(steps, s32, p)
    }
}

impl fmt::Display for GenDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, step) in self.steps.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match step {
                GenStep::Up => write!(f, "U{}", self.p)?,
                GenStep::Flat(k) => write!(f, "F{k}")?,
                GenStep::Down => write!(f, "D{}", self.p)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GenDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// All generalized Dyck paths of order `(s, p)`, in lexicographic order with
/// `U_p < F_1 < ... < F_{p-1} < D_p`.
pub fn enumerate_gen_dyck(s: u32, p: u32) -> Vec<GenDyckPath> {
    assert!(p >= 2, "generalized Dyck paths need p >= 2");
    let mut alphabet = vec![GenStep::Up];
    alphabet.extend((1..p).map(GenStep::Flat));
    alphabet.push(GenStep::Down);
    let mut out = Vec::new();
    let mut steps = Vec::new();
    fn rec(
        steps: &mut Vec<GenStep>,
        x: u64,
        y: u64,
        s: u64,
        p: u32,
        alphabet: &[GenStep],
        out: &mut Vec<GenDyckPath>,
    ) {
        if x == s && y == s {
            out.push(GenDyckPath { steps: steps.clone(), s: s as u32, p });
            return;
        }
        for &step in alphabet {
            let (dx, dy) = step.displacement(p);
            let (nx, ny) = (x + dx, y + dy);
            if nx > s || ny > s || ny < nx {
                continue;
            }
            steps.push(step);
            rec(steps, nx, ny, s, p, alphabet, out);
            steps.pop();
        }
    }
    rec(&mut steps, 0, 0, s as u64, p, &alphabet, &mut out);
    out
}

/// Whether a Motzkin path equals its reverse with `U` and `D` exchanged.
pub fn is_symmetric_motzkin(word: &StepWord) -> bool {
    word.reverse_swap() == *word
}

/// Whether a generalized Dyck path equals its reflection across the
/// anti-diagonal: reverse the steps and exchange `U_p` with `D_p`.
pub fn is_symmetric_gen_dyck(path: &GenDyckPath) -> bool {
    let reflected: Vec<GenStep> = path
        .steps
        .iter()
        .rev()
        .map(|&step| match step {
            GenStep::Up => GenStep::Down,
            GenStep::Down => GenStep::Up,
            flat => flat,
        })
        .collect();
    reflected == path.steps
}

/// Number of generalized Dyck paths of order `(s, p)` by the convolution
/// `C_s = sum_{k=1..s} C_{k-p} * C_{s-k}`, with `C_s = 1` for `s <= 0`.
///
/// Values are memoized per `p`; concurrent calls are safe.
pub fn gen_dyck_count_recurrence(s: i64, p: u32) -> BigUint {
    assert!(p >= 2, "generalized Dyck paths need p >= 2");
    if s <= 0 {
        return BigUint::one();
    }
    static MEMO: OnceLock<Mutex<HashMap<u32, Vec<BigUint>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    let mut table = memo.lock().expect("count memo poisoned");
    let counts = table.entry(p).or_insert_with(|| vec![BigUint::one()]);
    while counts.len() <= s as usize {
        let n = counts.len() as i64;
        let mut total = BigUint::zero();
        for k in 1..=n {
            let left = if k - p as i64 >= 0 {
                counts[(k - p as i64) as usize].clone()
            } else {
                BigUint::one()
            };
            total += left * &counts[(n - k) as usize];
        }
        counts.push(total);
    }
    counts[s as usize].clone()
}
