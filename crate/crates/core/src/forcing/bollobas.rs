use super::grundy::{footprint_pairs, DominationSequence};
use crate::combin::{binomial, intersection_dim, FieldTable, SubspaceRep};
use crate::error::{Error, Result};
use crate::graphs::{Graph, VertexLabel};
use serde::{Deserialize, Serialize};

/// A family of pairs `(X_i, Y_i)` with a threshold `t`, either of subsets of
/// `[n]` (bitmasks) or of subspaces of one `GF(q)^n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BollobasInstance {
    Sets { pairs: Vec<(u64, u64)>, t: usize },
    Subspaces { q: usize, pairs: Vec<(SubspaceRep, SubspaceRep)>, t: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BollobasVerdict {
    pub m: usize,
    /// `|X_i ∩ Y_i| <= t` for all `i`.
    pub diagonal_ok: bool,
    /// `|X_i ∩ Y_j| >= t + 1` for all `i < j`.
    pub cross_ok: bool,
    pub conditions_hold: bool,
    /// `C(r + s - 2t, r - t)`.
    pub bound: u64,
    pub within_bound: bool,
}

fn verdict(m: usize, r: usize, s: usize, t: usize, meet: impl Fn(usize, usize) -> usize) -> Result<BollobasVerdict> {
    let diagonal_ok = (0..m).all(|i| meet(i, i) <= t);
    let cross_ok = (0..m).all(|i| (i + 1..m).all(|j| meet(i, j) > t));
    let top = r as i64 + s as i64 - 2 * t as i64;
    let bound = if top < 0 { 0 } else { binomial(top as u64, r as i64 - t as i64)? };
    Ok(BollobasVerdict {
        m,
        diagonal_ok,
        cross_ok,
        conditions_hold: diagonal_ok && cross_ok,
        bound,
        within_bound: m as u64 <= bound,
    })
}

fn uniform(sizes: impl Iterator<Item = usize>, what: &str) -> Result<usize> {
    let mut it = sizes;
    let first = it.next().unwrap_or(0);
    if it.any(|x| x != first) {
        return Err(Error::Invalid(format!("{what} sizes are not uniform")));
    }
    Ok(first)
}

/// Evaluates both conditions and the bound on `m`. An empty family holds
/// trivially.
pub fn bollobas_check(inst: &BollobasInstance) -> Result<BollobasVerdict> {
    match inst {
        BollobasInstance::Sets { pairs, t } => {
            let r = uniform(pairs.iter().map(|p| p.0.count_ones() as usize), "X")?;
            let s = uniform(pairs.iter().map(|p| p.1.count_ones() as usize), "Y")?;
            verdict(pairs.len(), r, s, *t, |i, j| (pairs[i].0 & pairs[j].1).count_ones() as usize)
        }
        BollobasInstance::Subspaces { q, pairs, t } => {
            let f = FieldTable::new(*q as u64)?;
            let r = uniform(pairs.iter().map(|p| p.0.dim()), "X")?;
            let s = uniform(pairs.iter().map(|p| p.1.dim()), "Y")?;
            let m = pairs.len();
            let mut meets = vec![0usize; m * m];
            for i in 0..m {
                for j in i..m {
                    meets[i * m + j] = intersection_dim(&pairs[i].0, &pairs[j].1, &f)?;
                }
            }
            verdict(m, r, s, *t, |i, j| meets[i * m + j])
        }
    }
}

/// Pairs each sequence vertex with the least vertex it footprints.
///
/// For subset-labelled graphs `Y_i` is the footprinted set itself or, with
/// `complement_y`, its complement in `[n]`. Subspace-labelled graphs do not
/// support `complement_y`.
pub fn bollobas_from_sequence(
    g: &Graph,
    seq: &DominationSequence,
    n: usize,
    t: usize,
    complement_y: bool,
) -> Result<BollobasInstance> {
    let pairs = footprint_pairs(seq);
    match g.labels().first() {
        None => Ok(BollobasInstance::Sets { pairs: vec![], t }),
        Some(VertexLabel::Subset(_)) => {
            let ground = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
            let mask = |v: usize| match g.label(v) {
                VertexLabel::Subset(m) => Ok(*m),
                _ => Err(Error::Invalid("mixed vertex labels".into())),
            };
            let pairs = pairs
                .into_iter()
                .map(|(v, w)| {
                    let y = mask(w)?;
                    Ok((mask(v)?, if complement_y { ground & !y } else { y }))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(BollobasInstance::Sets { pairs, t })
        }
        Some(VertexLabel::Subspace(first)) => {
            if complement_y {
                return Err(Error::Invalid("complements are only defined for subsets".into()));
            }
            let sp = |v: usize| match g.label(v) {
                VertexLabel::Subspace(s) => Ok(s.clone()),
                _ => Err(Error::Invalid("mixed vertex labels".into())),
            };
            let pairs = pairs
                .into_iter()
                .map(|(v, w)| Ok((sp(v)?, sp(w)?)))
                .collect::<Result<Vec<_>>>()?;
            Ok(BollobasInstance::Subspaces { q: first.field_order(), pairs, t })
        }
        Some(_) => Err(Error::Invalid("vertices carry no set or subspace labels".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Caps;
    use crate::forcing::{grundy_exact, GrundyVariant};
    use crate::graphs::{build, FamilySpec};

    #[test]
    fn empty_instance_holds() {
        let v = bollobas_check(&BollobasInstance::Sets { pairs: vec![], t: 0 }).unwrap();
        assert!(v.conditions_hold && v.within_bound && v.m == 0);
    }

    #[test]
    fn violations_are_detected() {
        // X_1 ∩ Y_2 empty although t + 1 = 1 is required
        let inst = BollobasInstance::Sets {
            pairs: vec![(0b000011, 0b001100), (0b110000, 0b001100)],
            t: 0,
        };
        let v = bollobas_check(&inst).unwrap();
        assert!(v.diagonal_ok && !v.cross_ok && !v.conditions_hold);
        let uneven = BollobasInstance::Sets { pairs: vec![(0b1, 0b10), (0b11, 0b100)], t: 0 };
        assert!(bollobas_check(&uneven).is_err());
    }

    #[test]
    fn classical_extremal_family() {
        // all 2-subsets X of [4] paired with their complements: m = C(4,2)
        let ground = 0b1111u64;
        let xs: Vec<u64> = (0..16u64).filter(|m| m.count_ones() == 2).collect();
        let pairs = xs.iter().map(|&x| (x, ground & !x)).collect();
        let v = bollobas_check(&BollobasInstance::Sets { pairs, t: 0 }).unwrap();
        assert_eq!(v.bound, 6);
        assert!(v.diagonal_ok);
    }

    #[test]
    fn pairing_from_johnson_grundy_sequence() {
        let g = build(&FamilySpec::johnson(5, 2, &[1]), &Caps::default()).unwrap();
        let seq = grundy_exact(&g, GrundyVariant::Grundy, 40).unwrap();
        // n = 5, k = 2, s = 1: t = k - s = 1, bound C(n - 2(k - s), s) = 3
        let inst = bollobas_from_sequence(&g, &seq, 5, 1, true).unwrap();
        let v = bollobas_check(&inst).unwrap();
        assert!(v.conditions_hold);
        assert_eq!(v.bound, 3);
        assert!(v.within_bound);
    }

    #[test]
    fn pairing_from_q_kneser_sequence() {
        let g = build(&FamilySpec::grassmann(4, 2, 2, &[0]), &Caps::default()).unwrap();
        let seq = grundy_exact(&g, GrundyVariant::ZGrundy, 40).unwrap();
        let inst = bollobas_from_sequence(&g, &seq, 4, 0, false).unwrap();
        let v = bollobas_check(&inst).unwrap();
        assert!(v.conditions_hold, "{v:?}");
    }
}
