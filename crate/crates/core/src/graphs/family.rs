use crate::combin::{binomial, checked_pow, gaussian_binomial, prime_power};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Sorted, deduplicated set of admissible intersection sizes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntersectionSet(Vec<usize>);

impl IntersectionSet {
    pub fn new(mut values: Vec<usize>) -> Self {
        values.sort_unstable();
        values.dedup();
        IntersectionSet(values)
    }

    /// `{0, 1, ..., t}`.
    pub fn up_to(t: usize) -> Self {
        IntersectionSet((0..=t).collect())
    }

    /// `{s, s+1, ..., k-1}`.
    pub fn from_to_below(s: usize, k: usize) -> Self {
        IntersectionSet((s..k).collect())
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    /// `s = min(S)`.
    pub fn min(&self) -> usize {
        self.0[0]
    }

    /// `t = max(S)`.
    pub fn max(&self) -> usize {
        *self.0.last().unwrap()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True for `{a, a+1, ..., b}`.
    pub fn is_interval(&self) -> bool {
        self.0.windows(2).all(|w| w[1] == w[0] + 1)
    }

    /// Bitmask over intersection sizes, for fast membership in builders.
    pub(crate) fn mask(&self) -> u128 {
        self.0.iter().fold(0, |m, &x| m | 1u128 << x)
    }
}

impl fmt::Display for IntersectionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Parameters of one graph family member.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    /// `J_S(n,k)`: `k`-subsets of `[n]`, adjacent when `|u ∩ v| ∈ S`.
    GeneralizedJohnson { n: usize, k: usize, s: IntersectionSet },
    /// `J_{q,S}(n,k)`: `k`-subspaces of `GF(q)^n`, adjacent when
    /// `dim(u ∩ v) ∈ S`.
    GeneralizedGrassmann {
        n: usize,
        k: usize,
        q: usize,
        s: IntersectionSet,
    },
    /// `H(n,q)`: `q`-ary `n`-tuples at Hamming distance one.
    Hamming { n: usize, q: usize },
}

impl FamilySpec {
    pub fn johnson(n: usize, k: usize, s: &[usize]) -> Self {
        FamilySpec::GeneralizedJohnson {
            n,
            k,
            s: IntersectionSet::new(s.to_vec()),
        }
    }

    pub fn grassmann(n: usize, k: usize, q: usize, s: &[usize]) -> Self {
        FamilySpec::GeneralizedGrassmann {
            n,
            k,
            q,
            s: IntersectionSet::new(s.to_vec()),
        }
    }

    pub fn hamming(n: usize, q: usize) -> Self {
        FamilySpec::Hamming { n, q }
    }

    pub fn validate(&self) -> Result<()> {
        let check_s = |k: usize, s: &IntersectionSet| -> Result<()> {
            if s.is_empty() {
                return Err(Error::Invalid("S must be nonempty".into()));
            }
            if s.max() >= k {
                return Err(Error::Invalid(format!("S = {s} is not a subset of {{0..{}}}", k - 1)));
            }
            Ok(())
        };
        match self {
            FamilySpec::GeneralizedJohnson { n, k, s } => {
                if *k < 1 || n < k {
                    return Err(Error::Invalid(format!("need n >= k >= 1, got n={n} k={k}")));
                }
                if *n > 64 {
                    return Err(Error::sizing("ground set size n", n, 64));
                }
                check_s(*k, s)
            }
            FamilySpec::GeneralizedGrassmann { n, k, q, s } => {
                if *k < 1 || n < k {
                    return Err(Error::Invalid(format!("need n >= k >= 1, got n={n} k={k}")));
                }
                if prime_power(*q as u64).is_none() {
                    return Err(Error::NotPrimePower(*q as u64));
                }
                check_s(*k, s)
            }
            FamilySpec::Hamming { n, q } => {
                if *n < 1 || *q < 2 {
                    return Err(Error::Invalid(format!("need n >= 1, q >= 2, got n={n} q={q}")));
                }
                Ok(())
            }
        }
    }

    pub fn vertex_count(&self) -> Result<u64> {
        match self {
            FamilySpec::GeneralizedJohnson { n, k, .. } => binomial(*n as u64, *k as i64),
            FamilySpec::GeneralizedGrassmann { n, k, q, .. } => {
                gaussian_binomial(*n as u64, *k as u64, *q as u64)
            }
            FamilySpec::Hamming { n, q } => checked_pow(*q as u64, *n as u32),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            FamilySpec::GeneralizedJohnson { n, .. }
            | FamilySpec::GeneralizedGrassmann { n, .. }
            | FamilySpec::Hamming { n, .. } => *n,
        }
    }

    pub fn intersection_set(&self) -> Option<&IntersectionSet> {
        match self {
            FamilySpec::GeneralizedJohnson { s, .. } | FamilySpec::GeneralizedGrassmann { s, .. } => {
                Some(s)
            }
            FamilySpec::Hamming { .. } => None,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::GeneralizedJohnson { n, k, s } => write!(f, "J_{s}({n},{k})"),
            FamilySpec::GeneralizedGrassmann { n, k, q, s } => write!(f, "J_{{{q},{s}}}({n},{k})"),
            FamilySpec::Hamming { n, q } => write!(f, "H({n},{q})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(FamilySpec::johnson(5, 2, &[0]).validate().is_ok());
        assert!(FamilySpec::johnson(5, 2, &[2]).validate().is_err());
        assert!(FamilySpec::johnson(5, 2, &[]).validate().is_err());
        assert!(FamilySpec::johnson(2, 3, &[0]).validate().is_err());
        assert!(FamilySpec::grassmann(4, 2, 6, &[1]).validate().is_err());
        assert!(FamilySpec::grassmann(2, 1, 3, &[0]).validate().is_ok());
        assert!(FamilySpec::hamming(0, 2).validate().is_err());
        assert!(FamilySpec::hamming(3, 1).validate().is_err());
    }

    #[test]
    fn serde_shape() {
        let s = FamilySpec::grassmann(4, 2, 2, &[1]);
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"family":"generalized_grassmann","n":4,"k":2,"q":2,"s":[1]}"#);
        let back: FamilySpec = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s);
        assert_eq!(s.to_string(), "J_{2,{1}}(4,2)");
    }
}
