//! The extended `(s+d, d)`-abacus and its boundary profile.
//!
//! Positions form a grid with rows indexed by all integers and columns
//! `0..=s+d`; position `(i, j)` carries the label `(s+d)i + dj`. A bead sits
//! wherever the label belongs to the partition's beta-set. Column `s+d`
//! duplicates column `0` shifted by `d` rows, which is what lets a lattice
//! path wrap around the abacus.
//!
//! For each column, the *boundary profile* records the lowest row at or above
//! the first nonnegative label whose position is a spacer. Reading the
//! profile's unit steps left to right is what turns a core partition into a
//! Motzkin path (see [`crate::bijections`]).

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use crate::partition::{BetaSet, Partition};
use crate::paths::{Step, StepWord};

/// Error produced when abacus parameters are out of domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AbacusError {
    NotCoprime { s: u32, d: u32 },
    ZeroParameter,
}

impl std::fmt::Display for AbacusError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AbacusError::NotCoprime { s, d } => {
                write!(f, "abacus needs coprime parameters, got s = {s}, d = {d}")
            }
            AbacusError::ZeroParameter => write!(f, "abacus parameters must be positive"),
        }
    }
}

impl std::error::Error for AbacusError {}

/// The label `(s+d)i + dj` of position `(i, j)`.
///
/// Panics if the column is outside `0..=s+d`.
pub fn label(row: i64, col: u32, s: u32, d: u32) -> i64 {
    let n = (s + d) as i64;
    assert!(col as i64 <= n, "column {col} out of range 0..={n}");
    n * row + d as i64 * col as i64
}

/// Ceiling of `a / b` for positive `b`.
fn div_ceil(a: i64, b: i64) -> i64 {
    let q = a.div_euclid(b);
    if a.rem_euclid(b) != 0 {
        q + 1
    } else {
        q
    }
}

/// The first row of column `col` whose label is nonnegative.
pub(crate) fn first_nonnegative_row(col: u32, s: u32, d: u32) -> i64 {
    div_ceil(-(d as i64) * col as i64, (s + d) as i64)
}

/// A partition placed on the extended `(s+d, d)`-abacus.
#[derive(Clone, Debug)]
pub struct ExtendedAbacus {
    s: u32,
    d: u32,
    beta: BetaSet,
}

impl ExtendedAbacus {
    pub fn new(lambda: &Partition, s: u32, d: u32) -> Result<Self, AbacusError> {
        if s == 0 || d == 0 {
            return Err(AbacusError::ZeroParameter);
        }
        if num_integer::gcd(s, d) != 1 {
            return Err(AbacusError::NotCoprime { s, d });
        }
        Ok(ExtendedAbacus { s, d, beta: lambda.beta_set() })
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// The label `(s+d)i + dj` of position `(i, j)`.
    pub fn label(&self, row: i64, col: u32) -> i64 {
        label(row, col, self.s, self.d)
    }

    /// Whether position `(i, j)` holds a bead, i.e. its label is a
    /// first-column hook length of the partition.
    pub fn is_bead(&self, row: i64, col: u32) -> bool {
        let label = self.label(row, col);
        label >= 1 && self.beta.contains(label as u64)
    }

    /// Grid coordinates `(row, col)` of every bead, using columns
    /// `0..s+d` only (column `s+d` duplicates column `0`).
    pub fn bead_positions(&self) -> Vec<(i64, u32)> {
        let n = (self.s + self.d) as i64;
        self.beta
            .elems()
            .iter()
            .map(|&x| {
                let col = (0..self.s + self.d)
                    .find(|&j| (x as i64 - self.d as i64 * j as i64).rem_euclid(n) == 0)
                    .expect("every residue class appears among columns 0..s+d");
                let row = (x as i64 - self.d as i64 * col as i64) / n;
                (row, col)
            })
            .collect()
    }

    /// A row range that shows every bead plus the line of label zero.
    pub fn auto_rows(&self) -> RangeInclusive<i64> {
        let rows: Vec<i64> = self.bead_positions().iter().map(|&(i, _)| i).collect();
        let lo = rows.iter().copied().min().unwrap_or(0).min(-(self.d as i64));
        let hi = rows.iter().copied().max().unwrap_or(0).max(0);
        lo - 1..=hi + 1
    }

    /// Fixed-width text grid over the given rows (ascending, top to bottom)
    /// and columns `0..=s+d`. Beads render as `(n)`, spacers as bare `n`.
    pub fn render(&self, rows: RangeInclusive<i64>) -> String {
        render_grid(rows, 0..=self.s + self.d, |row, col| {
            (self.label(row, col), self.is_bead(row, col))
        })
    }

    /// SVG rendering: one circle per bead and the boundary profile overlaid
    /// as a polyline. Column `j` maps to `x = j` and row `i` to `y = i`.
    pub fn to_svg(&self, rows: RangeInclusive<i64>) -> String {
        let n = self.s + self.d;
        let (lo, hi) = (*rows.start(), *rows.end());
        let profile = BoundaryProfile::from_beta(&self.beta, self.s, self.d);
        let mut svg = String::new();
        let (w, h) = (n as i64 + 2, hi - lo + 2);
        let _ = writeln!(
            svg,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="-1 {} {} {}" width="{}" height="{}">"#,
            lo - 1,
            w,
            h,
            w * 40,
            h * 40
        );
        for row in lo..=hi {
            for col in 0..=n {
                if self.is_bead(row, col) {
                    let _ = writeln!(
                        svg,
                        r##"  <circle cx="{col}" cy="{row}" r="0.32" fill="#202020"/>"##
                    );
                }
            }
        }
        let points: Vec<String> =
            profile.values().iter().enumerate().map(|(j, &f)| format!("{j},{f}")).collect();
        let _ = writeln!(
            svg,
            r##"  <polyline fill="none" stroke="#1a6fb0" stroke-width="0.12" points="{}"/>"##,
            points.join(" ")
        );
        svg.push_str("</svg>\n");
        svg
    }
}

/// Fixed-width text grid of the classical `s`-abacus (columns `0..s`,
/// label `si + j`, nonnegative rows only).
pub fn render_s_abacus(lambda: &Partition, s: u32, rows: RangeInclusive<u32>) -> String {
    assert!(s >= 1, "abacus needs at least one column");
    let beta = lambda.beta_set();
    render_grid(
        *rows.start() as i64..=*rows.end() as i64,
        0..=s - 1,
        |row, col| {
            let label = s as i64 * row + col as i64;
            (label, label >= 1 && beta.contains(label as u64))
        },
    )
}

fn render_grid(
    rows: RangeInclusive<i64>,
    cols: RangeInclusive<u32>,
    cell: impl Fn(i64, u32) -> (i64, bool),
) -> String {
    let mut grid: Vec<Vec<String>> = Vec::new();
    for row in rows {
        grid.push(
            cols.clone()
                .map(|col| {
                    let (label, bead) = cell(row, col);
                    if bead {
                        format!("({label})")
                    } else {
                        label.to_string()
                    }
                })
                .collect(),
        );
    }
    let width = grid.iter().flatten().map(|c| c.len()).max().unwrap_or(1);
    grid.iter()
        .map(|cells| {
            cells.iter().map(|c| format!("{c:>width$}")).collect::<Vec<_>>().join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// The per-column boundary of a partition on the extended abacus.
///
/// Entry `j` is the smallest row `i` at or above the first nonnegative label
/// in column `j` such that position `(i, j)` is a spacer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryProfile {
    values: Vec<i64>,
    s: u32,
    d: u32,
}

impl BoundaryProfile {
    /// Scans the abacus of `lambda` column by column.
    pub fn compute(lambda: &Partition, s: u32, d: u32) -> Result<Self, AbacusError> {
        if s == 0 || d == 0 {
            return Err(AbacusError::ZeroParameter);
        }
        if num_integer::gcd(s, d) != 1 {
            return Err(AbacusError::NotCoprime { s, d });
        }
        Ok(Self::from_beta(&lambda.beta_set(), s, d))
    }

    fn from_beta(beta: &BetaSet, s: u32, d: u32) -> Self {
        let values = (0..=s + d)
            .map(|col| {
                let mut row = first_nonnegative_row(col, s, d);
                loop {
                    let label = label(row, col, s, d);
                    if label < 1 || !beta.contains(label as u64) {
                        return row;
                    }
                    row += 1;
                }
            })
            .collect();
        BoundaryProfile { values, s, d }
    }

    /// Wraps raw values without scanning; used to probe [`Self::verify`].
    ///
    /// Panics unless there are exactly `s + d + 1` values.
    pub fn from_values(values: Vec<i64>, s: u32, d: u32) -> Self {
        assert_eq!(values.len(), (s + d) as usize + 1, "profile needs s+d+1 entries");
        BoundaryProfile { values, s, d }
    }

    /// Entries `f(0), ..., f(s+d)`.
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// Checks the shape a profile must have when the partition is an
    /// `(s, s+d, ..., s+pd)`-core:
    ///
    /// 1. endpoints `f(0) = 0` and `f(s+d) = -d`;
    /// 2. consecutive entries differ by at most 1;
    /// 3. when `p >= 3`, a rise `f(j-1) = f(j) - 1` forces
    ///    `f(j-p+1), ..., f(j-2) >= f(j-1)` (indices clipped to `>= 0`).
    pub fn verify(&self, p: u32) -> bool {
        let f = &self.values;
        let n = f.len() - 1;
        if f[0] != 0 || f[n] != -(self.d as i64) {
            return false;
        }
        if f.windows(2).any(|w| (w[1] - w[0]).abs() > 1) {
            return false;
        }
        if p >= 3 {
            for j in 1..=n {
                if f[j - 1] == f[j] - 1 {
                    let lo = (j as i64 - p as i64 + 1).max(0);
                    let hi = j as i64 - 2;
                    if (lo..=hi).any(|m| f[m as usize] < f[j - 1]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The unit steps `f(j) - f(j-1)` read as a word, or `None` if some
    /// difference is not a unit step.
    pub fn step_word(&self) -> Option<StepWord> {
        self.values
            .windows(2)
            .map(|w| match w[1] - w[0] {
                1 => Some(Step::Up),
                0 => Some(Step::Flat),
                -1 => Some(Step::Down),
                _ => None,
            })
            .collect::<Option<Vec<Step>>>()
            .map(StepWord::new)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;
    use crate::test_util::pt;

    #[test]
    fn label_examples() {
        for (s, d) in [(5, 3), (3, 2), (7, 1)] {
            assert_eq!(label(0, 0, s, d), 0);
        }
        assert_eq!(label(-1, 2, 5, 3), -2);
        assert_eq!(label(0, 4, 5, 3), 12);
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn label_rejects_out_of_range_column() {
        label(0, 9, 5, 3);
    }

    #[test]
    fn last_column_duplicates_first_shifted_by_d_rows() {
        for (s, d) in [(5, 3), (3, 2), (4, 1), (2, 5)] {
            for row in -6..=6 {
                assert_eq!(label(row, s + d, s, d), label(row + d as i64, 0, s, d));
            }
        }
    }

    #[test]
    fn labels_are_distinct_across_columns_before_wraparound() {
        for (s, d) in [(5, 3), (3, 2), (7, 4), (1, 6)] {
            let mut seen = std::collections::HashSet::new();
            for row in -6..=6 {
                for col in 0..s + d {
                    assert!(seen.insert(label(row, col, s, d)), "s={s} d={d}");
                }
            }
        }
    }

    #[test]
    fn boundary_profile_examples() {
        let f = BoundaryProfile::compute(&pt(&[6, 4, 3, 1, 1, 1, 1]), 5, 3).unwrap();
        assert_eq!(f.values(), &[0, 1, 0, 1, 1, 0, -1, -2, -3]);

        let f = BoundaryProfile::compute(&pt(&[9, 5, 3, 2, 2, 1, 1, 1, 1]), 5, 3).unwrap();
        assert_eq!(f.values(), &[0, 1, 1, 2, 1, 0, -1, -2, -3]);

        let f = BoundaryProfile::compute(&Partition::empty(), 3, 2).unwrap();
        assert_eq!(f.values(), &[0, 0, 0, -1, -1, -2]);
    }

    #[test]
    fn empty_partition_profile_hugs_the_baseline() {
        for (s, d) in [(3, 2), (5, 3), (4, 1), (1, 4), (7, 2)] {
            let f = BoundaryProfile::compute(&Partition::empty(), s, d).unwrap();
            for (j, &v) in f.values().iter().enumerate() {
                assert_eq!(v, first_nonnegative_row(j as u32, s, d), "s={s} d={d} j={j}");
            }
        }
    }

    #[test]
    fn profile_rejects_non_coprime_parameters() {
        assert_eq!(
            BoundaryProfile::compute(&Partition::empty(), 4, 2),
            Err(AbacusError::NotCoprime { s: 4, d: 2 })
        );
    }

    #[test]
    fn verify_accepts_core_profiles() {
        let f = BoundaryProfile::compute(&pt(&[6, 4, 3, 1, 1, 1, 1]), 5, 3).unwrap();
        assert!(f.verify(2));
        assert!(f.verify(3));
    }

    #[test]
    fn verify_rejects_non_unit_steps() {
        let f = BoundaryProfile::from_values(vec![0, 2, 1, 0, -1, -2], 3, 2);
        assert!(!f.verify(2));
    }

    #[test]
    fn verify_rejects_wrong_endpoints() {
        let f = BoundaryProfile::from_values(vec![0, 0, 0, -1, -1, -1], 3, 2);
        assert!(!f.verify(2));
        let f = BoundaryProfile::from_values(vec![1, 0, 0, -1, -1, -2], 3, 2);
        assert!(!f.verify(2));
    }

    #[test]
    fn verify_enforces_the_rise_window_for_large_p() {
        // Steps U F U D D D: the flat between the rises satisfies p = 3 but
        // p = 4 reaches back one more column to f(0) = 0 < f(2).
        let f = BoundaryProfile::from_values(vec![0, 1, 1, 2, 1, 0, -1], 5, 1);
        assert!(f.verify(2));
        assert!(f.verify(3));
        assert!(!f.verify(4));
    }

    #[test]
    fn step_word_reads_unit_differences() {
        let f = BoundaryProfile::compute(&pt(&[9, 5, 3, 2, 2, 1, 1, 1, 1]), 5, 3).unwrap();
        assert_eq!(f.step_word().unwrap().to_string(), "UFUDDDDD");
        let broken = BoundaryProfile::from_values(vec![0, 2, 1, 0, -1, -2], 3, 2);
        assert!(broken.step_word().is_none());
    }

    #[test]
    fn s_abacus_grid_marks_beads_with_parens() {
        let grid = render_s_abacus(&pt(&[5, 4, 2, 1]), 5, 0..=3);
        let expected = "  0 (1)   2 (3)   4\n  5 (6)   7 (8)   9\n 10  11  12  13  14\n 15  16  17  18  19";
        assert_eq!(grid, expected);
    }

    #[test]
    fn s_abacus_of_empty_partition_has_no_beads() {
        let grid = render_s_abacus(&Partition::empty(), 4, 0..=2);
        assert!(!grid.contains('('));
    }

    #[test]
    fn extended_grid_marks_exactly_the_beta_set() {
        let abacus = ExtendedAbacus::new(&pt(&[6, 4, 3, 1, 1, 1, 1]), 5, 3).unwrap();
        let grid = abacus.render(-3..=3);
        for x in [12, 9, 7, 4, 3, 2, 1] {
            assert!(grid.contains(&format!("({x})")), "missing bead {x}");
        }
        // Columns 0..=8 with rows -3..=3 show beta elements once each, except
        // those that reappear in the duplicated last column.
        let abacus_view_beads = grid.matches('(').count();
        assert_eq!(abacus_view_beads, 7);
    }

    #[test]
    fn bead_positions_cover_the_beta_set_once() {
        let abacus = ExtendedAbacus::new(&pt(&[9, 5, 3, 2, 2, 1, 1, 1, 1]), 5, 3).unwrap();
        let mut labels: Vec<i64> =
            abacus.bead_positions().iter().map(|&(i, j)| abacus.label(i, j)).collect();
        labels.sort_unstable();
        assert_eq!(labels, vec![1, 2, 3, 4, 6, 7, 9, 12, 17]);
    }

    #[test]
    fn svg_contains_beads_and_boundary_polyline() {
        let abacus = ExtendedAbacus::new(&pt(&[6, 4, 3, 1, 1, 1, 1]), 5, 3).unwrap();
        let svg = abacus.to_svg(-3..=3);
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains(r#"points="0,0 1,1 2,0 3,1 4,1 5,0 6,-1 7,-2 8,-3""#));
        // Bead 12 sits at row 0, column 4; bead 2 at row -2, column 6.
        assert!(svg.contains(r#"<circle cx="4" cy="0""#));
        assert!(svg.contains(r#"<circle cx="6" cy="-2""#));
        assert_eq!(svg.matches("<circle").count(), 7);
    }

    #[test]
    fn auto_rows_cover_all_beads_and_the_baseline() {
        let abacus = ExtendedAbacus::new(&pt(&[6, 4, 3, 1, 1, 1, 1]), 5, 3).unwrap();
        let rows = abacus.auto_rows();
        for (row, _) in abacus.bead_positions() {
            assert!(rows.contains(&row));
        }
        assert!(rows.contains(&0) && rows.contains(&-3));
    }
}
