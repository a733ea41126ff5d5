//! Integer combinatorics, finite-field arithmetic and subspace linear algebra.

mod field;
mod subsets;
mod subspace;

pub use field::FieldTable;
pub use subsets::{enumerate_k_subsets, subset_from_elements, subset_elements};
pub use subspace::{
    enumerate_k_subspaces, extend_avoiding, find_avoiding_subspace, intersection_dim, rref,
    sum_dim, AvoidanceRequest, Rref, Span, SubspaceRep,
};

use crate::error::{Error, Result};

/// `C(n, k)`, zero outside `0 <= k <= n`.
///
/// Fails with [`Error::Overflow`] instead of wrapping when the value does not
/// fit in a `u64`.
pub fn binomial(n: u64, k: i64) -> Result<u64> {
    if k < 0 || k as u64 > n {
        return Ok(0);
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc = C(n, i) here, and C(n, i) * (n - i) is divisible by i + 1.
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return Err(Error::Overflow(format!("C({n},{k})")));
        }
    }
    Ok(acc as u64)
}

/// Binomial for arguments that are known to be small; panics on overflow.
pub(crate) fn choose(n: usize, k: usize) -> u64 {
    binomial(n as u64, k as i64).expect("binomial overflow")
}

/// Number of `k`-subspaces of `GF(q)^n`, via the product formula
/// `prod_{i<k} (q^(n-i) - 1) / (q^(i+1) - 1)`.
pub fn gaussian_binomial(n: u64, k: u64, q: u64) -> Result<u64> {
    if q < 2 {
        return Err(Error::Invalid(format!("field order q = {q} < 2")));
    }
    if k > n {
        return Err(Error::Invalid(format!("k = {k} > n = {n}")));
    }
    let overflow = || Error::Overflow(format!("[{n} {k}]_{q}"));
    let pow = |e: u64| -> Result<u128> {
        (q as u128).checked_pow(e as u32).ok_or_else(overflow)
    };
    let mut acc: u128 = 1;
    for i in 0..k {
        let num = pow(n - i)? - 1;
        let den = pow(i + 1)? - 1;
        // acc * num is the (i+1)-th partial product times den, so exact.
        acc = acc.checked_mul(num).ok_or_else(overflow)? / den;
        if acc > u64::MAX as u128 {
            return Err(overflow());
        }
    }
    Ok(acc as u64)
}

/// `Some((p, e))` with `q = p^e` when `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            break;
        }
        p += 1;
    }
    if !q.is_multiple_of(p) {
        // q itself is prime
        return Some((q, 1));
    }
    let mut r = q;
    let mut e = 0;
    while r.is_multiple_of(p) {
        r /= p;
        e += 1;
    }
    (r == 1).then_some((p, e))
}

/// `q^e` with overflow reported as an error.
pub fn checked_pow(q: u64, e: u32) -> Result<u64> {
    q.checked_pow(e)
        .ok_or_else(|| Error::Overflow(format!("{q}^{e}")))
}
