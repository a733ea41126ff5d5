use super::binomial;
use crate::error::{Error, Result};

/// All `k`-subsets of `[n] = {1..n}` as bitmasks (element `i` is bit `i - 1`),
/// in colexicographic order. Colex order coincides with increasing mask
/// value, so the position of a subset in the list is its vertex id.
pub fn enumerate_k_subsets(n: usize, k: usize, cap: u64) -> Result<Vec<u64>> {
    if n > 64 {
        return Err(Error::sizing("ground set size", n, 64));
    }
    if k > n {
        return Err(Error::Invalid(format!("k = {k} > n = {n}")));
    }
    let count = binomial(n as u64, k as i64)?;
    if count > cap {
        return Err(Error::sizing("C(n,k)", count, cap));
    }
    let mut out = Vec::with_capacity(count as usize);
    if k == 0 {
        out.push(0);
        return Ok(out);
    }
    let limit: u128 = 1u128 << n;
    let mut x: u64 = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    loop {
        out.push(x);
        if out.len() as u64 == count {
            break;
        }
        // Gosper's hack: next mask with the same popcount
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
        debug_assert!((x as u128) < limit);
    }
    Ok(out)
}

/// Elements of a subset mask, 1-based and increasing.
pub fn subset_elements(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

/// Mask of a list of 1-based elements.
pub fn subset_from_elements(elements: &[usize]) -> u64 {
    elements.iter().fold(0, |m, &e| m | 1 << (e - 1))
}
