use super::{hypothesis, Claims, ConstructionResult};
use crate::bitset::VertexSet;
use crate::combin::{choose, enumerate_k_subsets};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::graphs::{FamilySpec, IntersectionSet};
use serde::{Deserialize, Serialize};

/// Mask of `{lo..=hi}` (1-based, empty when `lo > hi`).
pub(crate) fn range_mask(lo: usize, hi: usize) -> u64 {
    (lo..=hi).fold(0, |m, e| m | 1 << (e - 1))
}

/// All `m`-subsets of the elements of `ground`, as masks, in colex order.
fn subsets_of(ground: u64, m: usize) -> Vec<u64> {
    let elems: Vec<usize> = (0..64).filter(|i| ground >> i & 1 == 1).collect();
    enumerate_k_subsets(elems.len(), m, u64::MAX)
        .expect("small ground set")
        .into_iter()
        .map(|c| (0..elems.len()).filter(|j| c >> j & 1 == 1).fold(0, |acc, j| acc | 1 << elems[j]))
        .collect()
}

fn check_s(k: usize, s: &IntersectionSet) -> Result<()> {
    hypothesis(!s.is_empty(), || "S must be nonempty".into())?;
    hypothesis(s.max() < k, || format!("S = {s} must lie in {{0..{}}}", k.saturating_sub(1)))
}

/// Vertex set of `J(n,k)` ids from subset masks.
fn ids_of(n: usize, k: usize, masks: &[u64], caps: &Caps) -> Result<VertexSet> {
    let sets = enumerate_k_subsets(n, k, caps.vertices)?;
    let mut out = VertexSet::new(sets.len());
    for m in masks {
        let id = sets
            .binary_search(m)
            .map_err(|_| Error::Invalid(format!("mask {m:#x} is not a {k}-subset of [{n}]")))?;
        out.insert(id);
    }
    Ok(out)
}

/// White set: supersets of `[k-s]` avoiding `{k-s+1..2(k-s)}`.
pub(crate) fn johnson_white_masks(n: usize, k: usize, s: usize) -> Vec<u64> {
    let d = k - s;
    let free = range_mask(2 * d + 1, n);
    subsets_of(free, s).into_iter().map(|m| m | range_mask(1, d)).collect()
}

/// Leader set of size `C(n,k) - C(n-2(k-s), s)` in `J_S(n,k)`, `s = min(S)`.
pub fn johnson_zfs(n: usize, k: usize, s: &IntersectionSet, caps: &Caps) -> Result<ConstructionResult> {
    check_s(k, s)?;
    let spec = FamilySpec::GeneralizedJohnson { n, k, s: s.clone() };
    spec.validate()?;
    let smin = s.min();
    hypothesis(n + smin >= 2 * k, || format!("n >= 2k - s fails: {n} < {}", 2 * k - smin))?;
    let white = ids_of(n, k, &johnson_white_masks(n, k, smin), caps)?;
    let predicted = choose(n, k) - choose(n - 2 * (k - smin), smin);
    let minimum_known = *s == IntersectionSet::from_to_below(smin, k);
    // J_{0}(2k,k) is a perfect matching
    let matching = s.values() == [0] && n == 2 * k;
    let claims = Claims { zfs: true, total: !matching, connected: !matching, minimum_known };
    Ok(ConstructionResult::from_white(spec, white, predicted, claims))
}

/// The vertices traded by the `n = 3k - 2t` variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeChoice {
    /// Least element of `T \ [2k-t]`.
    pub x: usize,
    /// Least element of `T ∩ [2k-t]`.
    pub y: usize,
    /// `[t+1] ∪ (T ∩ [2k-t])`, moved into the leader set.
    pub to_leader: u64,
    /// `[t] ∪ {t+2} ∪ X ∪ {x}` with `X = (T ∩ [2k-t]) \ {y}`, made white.
    pub to_white: u64,
}

fn t_mask(n: usize, k: usize, t: usize) -> u64 {
    range_mask(n + 2 * t + 2 - 2 * k, n)
}

/// `x`, `y` and the swapped vertices for `n = 3k - 2t`.
pub fn kneser_edge_choice(n: usize, k: usize, t: usize) -> Result<EdgeChoice> {
    hypothesis(t + 2 <= k, || format!("t <= k - 2 fails: t = {t}, k = {k}"))?;
    hypothesis(n + 2 * t == 3 * k, || format!("n = 3k - 2t fails: {n} != {}", 3 * k - 2 * t))?;
    hypothesis(n > 2 * k, || format!("n >= 2k + 1 fails: {n} < {}", 2 * k + 1))?;
    let tm = t_mask(n, k, t);
    let inside = tm & range_mask(1, 2 * k - t);
    let outside = tm & !inside;
    let x = outside.trailing_zeros() as usize + 1;
    let y = inside.trailing_zeros() as usize + 1;
    let big_x = inside & !(1 << (y - 1));
    Ok(EdgeChoice {
        x,
        y,
        to_leader: range_mask(1, t + 1) | inside,
        to_white: range_mask(1, t) | 1 << (t + 1) | big_x | 1 << (x - 1),
    })
}

/// `W_1 ∪ W_2` for `J_{0..t}(n,k)`, optionally with the edge-case swap.
pub(crate) fn kneser_white_masks(n: usize, k: usize, t: usize, edge: bool) -> Result<Vec<u64>> {
    let tm = t_mask(n, k, t);
    let mut white: Vec<u64> = subsets_of(tm, k - t).into_iter().map(|m| m | range_mask(1, t)).collect();
    let rest = range_mask(t + 2, 2 * k - t);
    white.extend(subsets_of(rest, k - t - 1).into_iter().map(|m| m | range_mask(1, t + 1)));
    if edge {
        let c = kneser_edge_choice(n, k, t)?;
        let pos = white
            .iter()
            .position(|&m| m == c.to_leader)
            .ok_or_else(|| Error::Invalid("swapped vertex is not white".into()))?;
        white[pos] = c.to_white;
    }
    white.sort_unstable();
    Ok(white)
}

fn kneser_checks(n: usize, k: usize, s: &IntersectionSet, edge: bool) -> Result<usize> {
    check_s(k, s)?;
    let t = s.max();
    hypothesis(t + 2 <= k, || format!("S ⊆ {{0..k-2}} fails: max(S) = {t}, k = {k}"))?;
    hypothesis(n > 2 * k, || format!("n >= 2k + 1 fails: {n} < {}", 2 * k + 1))?;
    if edge {
        hypothesis(n + 2 * t == 3 * k, || format!("n = 3k - 2t fails: {n} != {}", 3 * k - 2 * t))?;
    } else {
        hypothesis(n + 2 * t > 3 * k, || format!("n >= 3k - 2t + 1 fails: {n} < {}", 3 * k - 2 * t + 1))?;
    }
    Ok(t)
}

fn kneser_result(n: usize, k: usize, s: &IntersectionSet, edge: bool, caps: &Caps) -> Result<ConstructionResult> {
    let t = kneser_checks(n, k, s, edge)?;
    let spec = FamilySpec::GeneralizedJohnson { n, k, s: s.clone() };
    spec.validate()?;
    let white = ids_of(n, k, &kneser_white_masks(n, k, t, edge)?, caps)?;
    let predicted = choose(n, k) - choose(2 * k - 2 * t, k - t);
    let minimum_known = *s == IntersectionSet::up_to(t);
    let claims = Claims { zfs: true, total: true, connected: true, minimum_known };
    Ok(ConstructionResult::from_white(spec, white, predicted, claims))
}

/// Leader set of size `C(n,k) - C(2k-2t, k-t)` in `J_{0..t}(n,k)` for
/// `n >= max(3k-2t+1, 2k+1)`.
pub fn kneser_zfs(n: usize, k: usize, t: usize, caps: &Caps) -> Result<ConstructionResult> {
    kneser_zfs_with(n, k, &IntersectionSet::up_to(t), caps)
}

/// As [`kneser_zfs`] for any `S ⊆ {0..k-2}` with `t = max(S)`.
pub fn kneser_zfs_with(n: usize, k: usize, s: &IntersectionSet, caps: &Caps) -> Result<ConstructionResult> {
    kneser_result(n, k, s, false, caps)
}

/// The swap variant for `n = 3k - 2t`, `S = {0..t}`.
pub fn kneser_zfs_edge(n: usize, k: usize, t: usize, caps: &Caps) -> Result<ConstructionResult> {
    kneser_result(n, k, &IntersectionSet::up_to(t), true, caps)
}
