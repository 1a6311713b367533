//! Integer partitions, hook lengths, beta-sets, and core predicates.
//!
//! The central fact used throughout: a partition with `l` parts corresponds to
//! the set of its first-column hook lengths `{ part_i + l - i }` (its
//! *beta-set*), and removing a `t`-hook from the partition is the same as
//! replacing some beta-set element `x` by `x - t`. Hence a partition is a
//! `t`-core exactly when its beta-set is closed under subtracting `t`.

use std::fmt;
use std::str::FromStr;

/// An integer partition: a non-increasing sequence of positive parts.
///
/// The empty partition is allowed and written `[]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Creates a partition from its parts.
    ///
    /// Panics if the parts are not non-increasing or contain a zero; use
    /// [`Partition::from_str`] for fallible construction from text.
    pub fn new(parts: Vec<u64>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be non-increasing: {parts:?}"
        );
        assert!(!parts.contains(&0), "partition parts must be positive: {parts:?}");
        Partition { parts }
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes, i.e. the sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// The hook length of every box, row by row.
    ///
    /// The box in row `i`, column `j` (both 0-based) has hook length
    /// `part_i - j + conj_j - i - 1` where `conj` is the conjugate partition.
    pub fn hook_lengths(&self) -> Vec<Vec<u64>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &part)| {
                (0..part as usize)
                    .map(|j| part - j as u64 + conj.parts[j] - i as u64 - 1)
                    .collect()
            })
            .collect()
    }

    /// The conjugate (transposed Young diagram).
    pub fn conjugate(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=first)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count() as u64)
            .collect();
        Partition { parts }
    }

    /// The set of first-column hook lengths `{ part_i + l - i }` (1-based `i`).
    pub fn beta_set(&self) -> BetaSet {
        let l = self.parts.len() as u64;
        BetaSet::new(
            self.parts
                .iter()
                .enumerate()
                .map(|(i, &part)| part + l - 1 - i as u64)
                .collect(),
        )
    }

    /// Whether no hook length equals `t`.
    ///
    /// Computed on the beta-set: `t` must not be an element, and every element
    /// `x > t` must have `x - t` as an element.
    pub fn is_t_core(&self, t: u64) -> bool {
        assert!(t >= 1, "core modulus must be positive");
        self.beta_set().is_core_for(t)
    }

    /// Whether the partition is a `t`-core for every `t` in `ts`.
    pub fn is_simultaneous_core(&self, ts: &[u64]) -> bool {
        assert!(!ts.is_empty(), "need at least one modulus");
        let beta = self.beta_set();
        ts.iter().all(|&t| {
            assert!(t >= 1, "core modulus must be positive");
            beta.is_core_for(t)
        })
    }

    /// Number of corners (removable boxes), i.e. the number of distinct parts.
    pub fn corner_count(&self) -> usize {
        let mut distinct = 0;
        let mut prev = 0;
        for &part in &self.parts {
            if part != prev {
                distinct += 1;
                prev = part;
            }
        }
        distinct
    }

    /// Whether the partition equals its conjugate.
    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// All partitions of `n`, in decreasing lexicographic order of parts.
    pub fn all_of_size(n: u64) -> Vec<Partition> {
        fn rec(n: u64, max: u64, prefix: &mut Vec<u64>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            for first in (1..=n.min(max)).rev() {
                prefix.push(first);
                rec(n - first, first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n.max(1), &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    /// Renders as `[5,4,2,1]`; the empty partition is `[]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Error produced when parsing a partition from text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsePartitionError {
    /// Input is not of the form `[a,b,c]`.
    Malformed(String),
    /// Parts are not a non-increasing sequence of positive integers.
    NotCanonical(String),
}

impl fmt::Display for ParsePartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParsePartitionError::Malformed(s) => {
                write!(f, "malformed partition {s:?}: expected e.g. [5,4,2,1] or []")
            }
            ParsePartitionError::NotCanonical(s) => {
                write!(f, "partition {s:?} must list positive parts in non-increasing order")
            }
        }
    }
}

impl std::error::Error for ParsePartitionError {}

impl FromStr for Partition {
    type Err = ParsePartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|rest| rest.strip_suffix(']'))
            .ok_or_else(|| ParsePartitionError::Malformed(s.to_string()))?;
        let mut parts = Vec::new();
        if !inner.trim().is_empty() {
            for piece in inner.split(',') {
                let part: u64 = piece
                    .trim()
                    .parse()
                    .map_err(|_| ParsePartitionError::Malformed(s.to_string()))?;
                parts.push(part);
            }
        }
        let canonical =
            parts.windows(2).all(|w| w[0] >= w[1]) && !parts.contains(&0);
        if !canonical {
            return Err(ParsePartitionError::NotCanonical(s.to_string()));
        }
        Ok(Partition { parts })
    }
}

/// A finite set of distinct positive integers, viewed as first-column hook
/// lengths of a partition.
///
/// Every such set is the beta-set of exactly one partition, recovered by
/// [`BetaSet::to_partition`].
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BetaSet {
    /// Sorted ascending.
    elems: Vec<u64>,
}

impl BetaSet {
    /// Creates a beta-set from its elements (any order).
    ///
    /// Panics if an element is zero or repeated.
    pub fn new(mut elems: Vec<u64>) -> Self {
        elems.sort_unstable();
        assert!(!elems.contains(&0), "beta-set elements must be positive");
        assert!(
            elems.windows(2).all(|w| w[0] < w[1]),
            "beta-set elements must be distinct: {elems:?}"
        );
        BetaSet { elems }
    }

    /// Elements in ascending order.
    pub fn elems(&self) -> &[u64] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elems.binary_search(&x).is_ok()
    }

    /// The `t`-core condition: `t` is absent and the set is closed under
    /// subtracting `t` from elements larger than `t`.
    pub fn is_core_for(&self, t: u64) -> bool {
        !self.contains(t)
            && self.elems.iter().all(|&x| x <= t || self.contains(x - t))
    }

    /// The unique partition whose beta-set this is: sorting the elements
    /// decreasingly as `x_1 > ... > x_l`, part `i` is `x_i - (l - i)`.
    pub fn to_partition(&self) -> Partition {
        let l = self.elems.len() as u64;
        let parts = self
            .elems
            .iter()
            .rev()
            .enumerate()
            .map(|(i, &x)| x - (l - 1 - i as u64))
            .collect();
        Partition::new(parts)
    }
}

impl fmt::Display for BetaSet {
    /// Renders elements in decreasing order, e.g. `{8,6,3,1}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.elems.iter().rev().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The arithmetic progression of core moduli `s, s+d, ..., s+pd`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct CoreFamily {
    s: u32,
    d: u32,
    p: u32,
}

/// Error produced when a core family's parameters are out of domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoreFamilyError {
    /// `s` and `d` share a factor, so the progression is not coprime.
    NotCoprime { s: u32, d: u32 },
    /// One of `s`, `d`, `p` is zero.
    ZeroParameter,
}

impl fmt::Display for CoreFamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreFamilyError::NotCoprime { s, d } => {
                write!(f, "s = {s} and d = {d} must be coprime")
            }
            CoreFamilyError::ZeroParameter => {
                write!(f, "family parameters s, d, p must all be positive")
            }
        }
    }
}

impl std::error::Error for CoreFamilyError {}

impl CoreFamily {
    /// Creates the family `(s, s+d, ..., s+pd)`; requires coprime `s`, `d`
    /// and positive `p`.
    pub fn new(s: u32, d: u32, p: u32) -> Result<Self, CoreFamilyError> {
        if s == 0 || d == 0 || p == 0 {
            return Err(CoreFamilyError::ZeroParameter);
        }
        if num_integer::gcd(s, d) != 1 {
            return Err(CoreFamilyError::NotCoprime { s, d });
        }
        Ok(CoreFamily { s, d, p })
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// The `p + 1` moduli `s, s+d, ..., s+pd` in ascending order.
    pub fn moduli(&self) -> Vec<u64> {
        (0..=self.p)
            .map(|i| self.s as u64 + i as u64 * self.d as u64)
            .collect()
    }
}

impl fmt::Display for CoreFamily {
    /// Renders as `s,d,p`, the same form [`CoreFamily::from_str`] accepts.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.s, self.d, self.p)
    }
}

/// Error produced when parsing a core family from text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseCoreFamilyError {
    Malformed(String),
    Invalid(CoreFamilyError),
}

impl fmt::Display for ParseCoreFamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseCoreFamilyError::Malformed(s) => {
                write!(f, "malformed family {s:?}: expected s,d,p e.g. 5,3,3")
            }
            ParseCoreFamilyError::Invalid(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for ParseCoreFamilyError {}

impl FromStr for CoreFamily {
    type Err = ParseCoreFamilyError;

    /// Parses `"s,d,p"`, e.g. `"5,3,3"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let nums: Vec<u32> = s
            .split(',')
            .map(|piece| piece.trim().parse())
            .collect::<Result<_, _>>()
            .map_err(|_| ParseCoreFamilyError::Malformed(s.to_string()))?;
        let [a, b, c] = nums[..] else {
            return Err(ParseCoreFamilyError::Malformed(s.to_string()));
        };
        CoreFamily::new(a, b, c).map_err(ParseCoreFamilyError::Invalid)
    }
}
