//! Exact counting formulas for core families and path families.
//!
//! Everything is computed in arbitrary-precision integers. The formulas
//! divide binomial sums by small integers; each division is checked to leave
//! no remainder and panics otherwise, since a remainder can only mean the
//! implementation (not the input) is wrong.
//!
//! Counts provided:
//!
//! - [`count_anderson`]: `(s, t)`-cores for coprime pairs
//! - [`count_wang`], [`count_bny`]: `(s, s+d, s+2d)`- and
//!   `(s, s+d, s+2d, s+3d)`-cores
//! - [`count_main`], [`count_mainprop`]: the full progression
//!   `(s, s+d, ..., s+pd)`, totals and by up-step count
//! - [`count_freemotz`]: rational Motzkin paths by up-step count
//! - [`count_corone`], [`count_corners`], [`count_corners_two`]: `d = 1`
//!   families, totals and by corner count
//! - [`count_sc_fms`], [`count_sym_dyck`], [`count_sc_main`]: self-conjugate
//!   and symmetric variants

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Error produced when a formula's parameters are out of domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CountingError {
    NotCoprime { a: u32, b: u32 },
    PTooSmall { p: u32, need: u32 },
    KOutOfRange { k: u32 },
}

impl std::fmt::Display for CountingError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CountingError::NotCoprime { a, b } => write!(f, "{a} and {b} must be coprime"),
            CountingError::PTooSmall { p, need } => {
                write!(f, "p = {p} is too small for this formula, need p >= {need}")
            }
            CountingError::KOutOfRange { k } => write!(f, "k = {k} is out of range"),
        }
    }
}

impl std::error::Error for CountingError {}

/// A count together with the formula and parameters that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountResult {
    pub formula: &'static str,
    pub params: Vec<(&'static str, u64)>,
    pub value: BigUint,
}

/// Binomial coefficient, zero whenever `k < 0`, `n < 0`, or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if k < 0 || n < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let mut result = BigUint::one();
    for i in 1..=k {
        result = result * BigUint::from(n as u64 - k + i) / BigUint::from(i);
    }
    result
}

/// Trinomial coefficient `n! / (a! b! c!)`, zero unless `a + b + c = n`
/// with all arguments nonnegative.
pub fn multinomial(n: i64, a: i64, b: i64, c: i64) -> BigUint {
    if a < 0 || b < 0 || c < 0 || a + b + c != n {
        return BigUint::zero();
    }
    binomial(n, a) * binomial(n - a, b)
}

/// Divides exactly, panicking on any remainder.
fn exact_div(dividend: BigUint, divisor: u64) -> BigUint {
    let (q, r) = dividend.div_rem(&BigUint::from(divisor));
    assert!(
        r.is_zero(),
        "formula division is not exact: {dividend} / {divisor} leaves {r}"
    );
    q
}

fn require_coprime(a: u32, b: u32) -> Result<(), CountingError> {
    if num_integer::gcd(a, b) != 1 {
        return Err(CountingError::NotCoprime { a, b });
    }
    Ok(())
}

/// Number of `(s, t)`-cores for coprime `s`, `t`: `C(s+t, s) / (s+t)`.
pub fn count_anderson(s: u32, t: u32) -> Result<BigUint, CountingError> {
    require_coprime(s, t)?;
    let n = s as i64 + t as i64;
    Ok(exact_div(binomial(n, s as i64), n as u64))
}

/// Number of `(s, s+d, s+2d)`-cores for coprime `s`, `d`:
/// the sum over `k` of `(s+d; k, k+d, s-2k)` trinomials, divided by `s+d`.
pub fn count_wang(s: u32, d: u32) -> Result<BigUint, CountingError> {
    require_coprime(s, d)?;
    let (s, d) = (s as i64, d as i64);
    let mut sum = BigUint::zero();
    for k in 0..=s / 2 {
        sum += multinomial(s + d, k, k + d, s - 2 * k);
    }
    Ok(exact_div(sum, (s + d) as u64))
}

/// Number of `(s, s+d, s+2d, s+3d)`-cores for coprime `s`, `d`.
pub fn count_bny(s: u32, d: u32) -> Result<BigUint, CountingError> {
    require_coprime(s, d)?;
    let (s, d) = (s as i64, d as i64);
    let n = s + d;
    let mut sum = BigUint::zero();
    for k in 0..=s / 2 {
        let weight = binomial(n - k, k) + binomial(n - k - 1, k - 1);
        sum += weight * binomial(n - k, s - 2 * k);
    }
    Ok(exact_div(sum, n as u64))
}

/// The `l`-cap for the `k`-th term: `k - 1`, additionally limited by
/// `(s - 2k) / (p - 2)` when `p >= 3`.
fn ell_cap(s: i64, p: i64, k: i64) -> i64 {
    if p == 2 {
        k - 1
    } else {
        (k - 1).min((s - 2 * k).div_euclid(p - 2))
    }
}

/// The summand counting paths with `k` up steps, before dividing by `k + d`.
fn main_term_numerator(s: i64, d: i64, p: i64, k: i64) -> BigUint {
    let mut sum = BigUint::zero();
    for l in 0..=ell_cap(s, p, k) {
        sum += binomial(k + d, k - l)
            * binomial(k - 1, l)
            * binomial(s + d - l * (p - 2) - 1, 2 * k + d - 1);
    }
    sum
}

/// Number of `(s, s+d, ..., s+pd)`-cores for coprime `s`, `d` and `p >= 2`.
pub fn count_main(s: u32, d: u32, p: u32) -> Result<BigUint, CountingError> {
    require_coprime(s, d)?;
    if p < 2 {
        return Err(CountingError::PTooSmall { p, need: 2 });
    }
    let (s, d, p) = (s as i64, d as i64, p as i64);
    let mut total = exact_div(binomial(s + d, d), (s + d) as u64);
    for k in 1..=s / 2 {
        total += exact_div(main_term_numerator(s, d, p, k), (k + d) as u64);
    }
    Ok(total)
}

/// Number of rational Motzkin paths of type `(s+d, -d)` with `k >= 1` up
/// steps avoiding `U F^i U` for `0 <= i <= p-3`; requires `p >= 3`.
/// Zero when `2k > s`.
pub fn count_mainprop(s: u32, d: u32, p: u32, k: u32) -> Result<BigUint, CountingError> {
    require_coprime(s, d)?;
    if p < 3 {
        return Err(CountingError::PTooSmall { p, need: 3 });
    }
    if k == 0 {
        return Err(CountingError::KOutOfRange { k });
    }
    let (s, d, p, k) = (s as i64, d as i64, p as i64, k as i64);
    Ok(exact_div(main_term_numerator(s, d, p, k), (k + d) as u64))
}

/// Number of rational Motzkin paths of type `(s+d, -d)` with exactly `k` up
/// steps (no pattern restriction): `(s+d; k, k+d, s-2k) / (s+d)`.
/// Zero when `2k > s`.
pub fn count_freemotz(s: u32, d: u32, k: u32) -> Result<BigUint, CountingError> {
    require_coprime(s, d)?;
    let (s, d, k) = (s as i64, d as i64, k as i64);
    Ok(exact_div(multinomial(s + d, k, k + d, s - 2 * k), (s + d) as u64))
}

/// Number of `(s, s+1, ..., s+p)`-cores via the Narayana-weighted binomial
/// sum; agrees with [`count_main`] at `d = 1`.
pub fn count_corone(s: u32, p: u32) -> Result<BigUint, CountingError> {
    if p < 2 {
        return Err(CountingError::PTooSmall { p, need: 2 });
    }
    let (s, p) = (s as i64, p as i64);
    let mut total = BigUint::one();
    for k in 1..=s / 2 {
        for l in 0..=ell_cap(s, p, k) {
            total += narayana_i64(k, l + 1) * binomial(s - l * (p - 2), 2 * k);
        }
    }
    Ok(total)
}

fn narayana_i64(k: i64, m: i64) -> BigUint {
    if k < 1 || m < 1 || m > k {
        return BigUint::zero();
    }
    exact_div(binomial(k, m) * binomial(k, m - 1), k as u64)
}

/// The Narayana number `C(k, m) * C(k, m-1) / k`, zero outside `1 <= m <= k`.
pub fn narayana(k: u32, m: u32) -> BigUint {
    narayana_i64(k as i64, m as i64)
}

/// Number of `(s, s+1, ..., s+p)`-cores with exactly `k` corners, `p >= 2`.
/// By convention `k = 0` counts only the empty partition.
pub fn count_corners(s: u32, p: u32, k: u32) -> Result<BigUint, CountingError> {
    if p < 2 {
        return Err(CountingError::PTooSmall { p, need: 2 });
    }
    if k == 0 {
        return Ok(BigUint::one());
    }
    let (s, p, k) = (s as i64, p as i64, k as i64);
    let mut total = BigUint::zero();
    for l in 0..=ell_cap(s, p, k) {
        total += narayana_i64(k, l + 1) * binomial(s - l * (p - 2), 2 * k);
    }
    Ok(total)
}

/// Number of `(s, s+1)`-cores with exactly `k` corners: the Narayana number
/// `N(s, k+1)`. By convention `k = 0` counts only the empty partition;
/// zero outside `0 <= k <= s-1`.
pub fn count_corners_two(s: u32, k: u32) -> BigUint {
    if k == 0 {
        return BigUint::one();
    }
    narayana_i64(s as i64, k as i64 + 1)
}

/// Number of self-conjugate `(s, t)`-cores for coprime `s`, `t`:
/// `C(floor(s/2) + floor(t/2), floor(s/2))`.
pub fn count_sc_fms(s: u32, t: u32) -> Result<BigUint, CountingError> {
    require_coprime(s, t)?;
    let (s, t) = (s as i64, t as i64);
    Ok(binomial(s / 2 + t / 2, s / 2))
}

/// Number of symmetric Dyck paths of order `k` with exactly `l` `UU`-factors
/// counted on one side: `C(floor((k-1)/2), floor(l/2)) *
/// C(floor(k/2), floor((l+1)/2))`. Zero outside `0 <= l <= k-1`.
pub fn count_sym_dyck(k: u32, l: u32) -> BigUint {
    if k == 0 || l >= k {
        return BigUint::zero();
    }
    let (k, l) = (k as i64, l as i64);
    binomial((k - 1).div_euclid(2), l.div_euclid(2))
        * binomial(k.div_euclid(2), (l + 1).div_euclid(2))
}

/// Number of self-conjugate `(s, s+1, ..., s+p)`-cores, `p >= 2`.
pub fn count_sc_main(s: u32, p: u32) -> Result<BigUint, CountingError> {
    if p < 2 {
        return Err(CountingError::PTooSmall { p, need: 2 });
    }
    let (s, p) = (s as i64, p as i64);
    let mut total = BigUint::one();
    for k in 1..=s / 2 {
        for l in 0..=ell_cap(s, p, k) {
            total += binomial((k - 1).div_euclid(2), l.div_euclid(2))
                * binomial(k.div_euclid(2), (l + 1).div_euclid(2))
                * binomial((s - l * (p - 2)).div_euclid(2), k);
        }
    }
    Ok(total)
}
