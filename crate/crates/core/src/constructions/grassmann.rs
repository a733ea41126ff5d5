use super::johnson::kneser_white_masks;
use super::{hypothesis, Claims, ConstructionResult};
use crate::bitset::VertexSet;
use crate::combin::{choose, enumerate_k_subspaces, gaussian_binomial, FieldTable, SubspaceRep};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::graphs::{FamilySpec, IntersectionSet};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

fn ids_of(n: usize, k: usize, f: &FieldTable, white: &[SubspaceRep], caps: &Caps) -> Result<VertexSet> {
    let all = enumerate_k_subspaces(n, k, f, caps.vertices)?;
    let index: HashMap<&SubspaceRep, usize> = all.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut out = VertexSet::new(all.len());
    for w in white {
        let id = index
            .get(w)
            .ok_or_else(|| Error::Invalid(format!("{} is not a {k}-subspace", w.label())))?;
        out.insert(*id);
    }
    Ok(out)
}

/// `⟨a_i : i ∈ mask⟩` for the standard basis `a_1..a_n`.
fn coordinate_space(n: usize, mask: u64, f: &FieldTable) -> SubspaceRep {
    let coords: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
    SubspaceRep::coordinate(n, &coords, f)
}

/// Leader set of size `[n k]_q - C(2k-2t, k-t)` in `J_{q,{0..t}}(n,k)`:
/// the Kneser white pattern with each element `i` replaced by `a_i`.
/// Covers `n >= max(3k-2t+1, 2k+1)` and the swap variant at `n = 3k-2t`.
pub fn grassmann_zfs(n: usize, k: usize, q: usize, t: usize, caps: &Caps) -> Result<ConstructionResult> {
    grassmann_zfs_with(n, k, q, &IntersectionSet::up_to(t), caps)
}

/// As [`grassmann_zfs`] for any `S ⊆ {0..k-2}` with `t = max(S)`.
pub fn grassmann_zfs_with(
    n: usize,
    k: usize,
    q: usize,
    s: &IntersectionSet,
    caps: &Caps,
) -> Result<ConstructionResult> {
    hypothesis(!s.is_empty(), || "S must be nonempty".into())?;
    let t = s.max();
    hypothesis(t + 2 <= k, || format!("S ⊆ {{0..k-2}} fails: max(S) = {t}, k = {k}"))?;
    hypothesis(n > 2 * k, || format!("n >= 2k + 1 fails: {n} < {}", 2 * k + 1))?;
    hypothesis(n + 2 * t >= 3 * k, || format!("n >= 3k - 2t fails: {n} < {}", 3 * k - 2 * t))?;
    let spec = FamilySpec::GeneralizedGrassmann { n, k, q, s: s.clone() };
    spec.validate()?;
    let f = FieldTable::with_modulus(q as u64, None, caps)?;
    let edge = n + 2 * t == 3 * k;
    let white: Vec<SubspaceRep> = kneser_white_masks(n, k, t, edge)?
        .into_iter()
        .map(|m| coordinate_space(n, m, &f))
        .collect();
    let white = ids_of(n, k, &f, &white, caps)?;
    let predicted = gaussian_binomial(n as u64, k as u64, q as u64)? - choose(2 * k - 2 * t, k - t);
    let minimum_known = *s == IntersectionSet::up_to(t);
    let claims = Claims { zfs: true, total: true, connected: true, minimum_known };
    Ok(ConstructionResult::from_white(spec, white, predicted, claims))
}

/// The two leader sets of `J_{2,{1}}(4,2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialSets {
    /// Complement of the six coordinate planes and `⟨a_1+a_2, a_3+a_4⟩`.
    pub small: ConstructionResult,
    /// Complement of `⟨a_1,a_3⟩` and `⟨a_1,a_4⟩`, copied from `J(4,2)`.
    pub johnson_analogue: ConstructionResult,
}

pub fn grassmann_special_set_j2_4_2() -> SpecialSets {
    let caps = Caps::default();
    let f = FieldTable::new(2).expect("GF(2)");
    let spec = FamilySpec::grassmann(4, 2, 2, &[1]);
    let claims = Claims { zfs: true, ..Claims::default() };
    let mut small: Vec<SubspaceRep> = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            small.push(SubspaceRep::coordinate(4, &[i, j], &f));
        }
    }
    small.push(SubspaceRep::spanned_by(&[vec![1, 1, 0, 0], vec![0, 0, 1, 1]], &f).expect("valid generators"));
    let analogue = [
        SubspaceRep::coordinate(4, &[0, 2], &f),
        SubspaceRep::coordinate(4, &[0, 3], &f),
    ];
    let build = |white: &[SubspaceRep]| {
        let w = ids_of(4, 2, &f, white, &caps).expect("fixed instance");
        let size = 35 - white.len() as u64;
        ConstructionResult::from_white(spec.clone(), w, size, claims)
    };
    SpecialSets {
        small: build(&small),
        johnson_analogue: build(&analogue),
    }
}
