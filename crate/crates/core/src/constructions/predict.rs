use crate::combin::{binomial, gaussian_binomial};
use crate::error::Result;
use crate::graphs::{FamilySpec, IntersectionSet};
use super::hamming::z_hamming;
use serde::{Deserialize, Serialize};

/// A proven statement whose hypotheses the family satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HypothesisTag {
    /// Upper bound `C(n,k) - C(n-2(k-s), s)` for `n >= 2k - s`.
    JohnsonPattern,
    /// Matching Grundy lower bound when `S = {s..k-1}`.
    JohnsonGrundyBound,
    /// Upper bound `C(n,k) - C(2k-2t, k-t)` for `S ⊆ {0..k-2}`,
    /// `n >= max(3k-2t+1, 2k+1)`.
    KneserPattern,
    /// Same bound at `n = 3k - 2t >= 2k + 1`. Not reported for
    /// `t = k - 2`, whose only instances `(6,2,0)` and `(7,3,1)` have a
    /// larger zero forcing number (checked exhaustively).
    KneserEdgePattern,
    /// Z-Grundy lower bound `C(n,k) - C(2k-2t, k-t)` for `S = {0..t}`,
    /// `n >= 2k + 1`.
    KneserZGrundyBound,
    /// Upper bound `[n k]_q - C(2k-2t, k-t)` via coordinate subspaces.
    QKneserPattern,
    /// Lower bound `[n k]_q - C(2k-2t, k-t)` for `S = {0..t}`, `n >= 2k + 1`.
    QKneserZGrundyBound,
    /// `Z(H(n,q)) = (q^n + (q-2)^n) / 2`.
    HammingFormula,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PredictedValue {
    Exact { value: u64 },
    Bounds { lower: Option<u64>, upper: Option<u64> },
    NotCovered,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub value: PredictedValue,
    /// Statements giving the lower bound, strongest first.
    pub lower_from: Vec<HypothesisTag>,
    /// Statements giving the upper bound, strongest first.
    pub upper_from: Vec<HypothesisTag>,
}

impl Prediction {
    pub fn exact(&self) -> Option<u64> {
        match self.value {
            PredictedValue::Exact { value } => Some(value),
            _ => None,
        }
    }

    pub fn lower(&self) -> Option<u64> {
        match self.value {
            PredictedValue::Exact { value } => Some(value),
            PredictedValue::Bounds { lower, .. } => lower,
            PredictedValue::NotCovered => None,
        }
    }

    pub fn upper(&self) -> Option<u64> {
        match self.value {
            PredictedValue::Exact { value } => Some(value),
            PredictedValue::Bounds { upper, .. } => upper,
            PredictedValue::NotCovered => None,
        }
    }

    fn from_bounds(lower: Vec<(u64, HypothesisTag)>, upper: Vec<(u64, HypothesisTag)>) -> Self {
        let best = |mut v: Vec<(u64, HypothesisTag)>, hi: bool| {
            v.sort_by_key(|&(x, _)| if hi { u64::MAX - x } else { x });
            let value = v.first().map(|p| p.0);
            let tags = v.iter().filter(|p| Some(p.0) == value).map(|p| p.1).collect::<Vec<_>>();
            (value, tags)
        };
        let (lo, lower_from) = best(lower, true);
        let (hi, upper_from) = best(upper, false);
        let value = match (lo, hi) {
            (Some(a), Some(b)) if a == b => PredictedValue::Exact { value: a },
            (None, None) => PredictedValue::NotCovered,
            (lower, upper) => PredictedValue::Bounds { lower, upper },
        };
        Prediction { value, lower_from, upper_from }
    }
}

fn c(n: usize, k: usize) -> Result<u64> {
    binomial(n as u64, k as i64)
}

fn johnson(n: usize, k: usize, s: &IntersectionSet) -> Result<Prediction> {
    let (smin, t) = (s.min(), s.max());
    let total = c(n, k)?;
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    if n + smin >= 2 * k {
        let b = total - c(n - 2 * (k - smin), smin)?;
        upper.push((b, HypothesisTag::JohnsonPattern));
        if *s == IntersectionSet::from_to_below(smin, k) {
            lower.push((b, HypothesisTag::JohnsonGrundyBound));
        }
    }
    if t + 2 <= k && n > 2 * k {
        let b = total - c(2 * k - 2 * t, k - t)?;
        if n + 2 * t > 3 * k {
            upper.push((b, HypothesisTag::KneserPattern));
        } else if n + 2 * t == 3 * k && t + 2 < k {
            upper.push((b, HypothesisTag::KneserEdgePattern));
        }
    }
    if n > 2 * k && *s == IntersectionSet::up_to(t) {
        lower.push((total - c(2 * k - 2 * t, k - t)?, HypothesisTag::KneserZGrundyBound));
    }
    Ok(Prediction::from_bounds(lower, upper))
}

fn grassmann(n: usize, k: usize, q: usize, s: &IntersectionSet) -> Result<Prediction> {
    let t = s.max();
    let total = gaussian_binomial(n as u64, k as u64, q as u64)?;
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    if n > 2 * k && t + 2 <= k && n + 2 * t > 3 * k {
        upper.push((total - c(2 * k - 2 * t, k - t)?, HypothesisTag::QKneserPattern));
    }
    if n > 2 * k && *s == IntersectionSet::up_to(t) {
        lower.push((total - c(2 * k - 2 * t, k - t)?, HypothesisTag::QKneserZGrundyBound));
    }
    Ok(Prediction::from_bounds(lower, upper))
}

/// Closed-form value or bounds on `Z` for the given family member, with
/// the statements they come from. Specs outside every covered hypothesis
/// give [`PredictedValue::NotCovered`].
pub fn predicted_zf(spec: &FamilySpec) -> Prediction {
    let not_covered = || Prediction::from_bounds(vec![], vec![]);
    if spec.validate().is_err() {
        return not_covered();
    }
    let p = match spec {
        FamilySpec::GeneralizedJohnson { n, k, s } => johnson(*n, *k, s),
        FamilySpec::GeneralizedGrassmann { n, k, q, s } => grassmann(*n, *k, *q, s),
        FamilySpec::Hamming { n, q } => z_hamming(*n, *q).map(|z| {
            Prediction::from_bounds(
                vec![(z, HypothesisTag::HammingFormula)],
                vec![(z, HypothesisTag::HammingFormula)],
            )
        }),
    };
    p.unwrap_or_else(|_| not_covered())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn johnson_graphs() {
        for (n, k) in [(4, 2), (5, 2), (6, 3), (8, 3)] {
            let p = predicted_zf(&FamilySpec::johnson(n, k, &[k - 1]));
            let expect = c(n, k).unwrap() - c(n - 2, k - 1).unwrap();
            assert_eq!(p.exact(), Some(expect));
        }
    }

    #[test]
    fn hamming_and_kneser() {
        assert_eq!(predicted_zf(&FamilySpec::hamming(4, 3)).exact(), Some(41));
        let p = predicted_zf(&FamilySpec::johnson(7, 2, &[0]));
        assert_eq!(p.exact(), Some(15));
        assert!(p.upper_from.contains(&HypothesisTag::KneserPattern));
        let p = predicted_zf(&FamilySpec::grassmann(7, 2, 2, &[0]));
        assert_eq!(p.exact(), Some(2661));
    }

    #[test]
    fn petersen_gets_bounds_only() {
        let p = predicted_zf(&FamilySpec::johnson(5, 2, &[0]));
        assert_eq!(p.lower(), Some(4));
        assert_eq!(p.exact(), None);
        assert!(!p.upper_from.contains(&HypothesisTag::KneserPattern));
    }

    #[test]
    fn edge_bound_skipped_for_t_k_minus_2() {
        let p = predicted_zf(&FamilySpec::johnson(6, 2, &[0]));
        assert_eq!((p.lower(), p.upper()), (Some(9), Some(14)));
        let p = predicted_zf(&FamilySpec::johnson(9, 3, &[0]));
        assert_eq!(p.exact(), Some(64));
        assert_eq!(p.upper_from, vec![HypothesisTag::KneserEdgePattern]);
    }

    #[test]
    fn uncovered() {
        let p = predicted_zf(&FamilySpec::grassmann(5, 2, 2, &[1]));
        assert_eq!(p.value, PredictedValue::NotCovered);
    }
}
