use super::mask::{Mask, MaskGraph};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graphs::Graph;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GrundyVariant {
    /// Footprints taken from closed neighborhoods.
    Grundy,
    /// Footprints taken from open neighborhoods.
    ZGrundy,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationSequence {
    pub variant: GrundyVariant,
    pub sequence: Vec<usize>,
    /// `footprints[i]` is what `sequence[i]` dominates first.
    pub footprints: Vec<VertexSet>,
}

impl DominationSequence {
    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    /// Recomputes the footprints from scratch and checks they are nonempty,
    /// pairwise disjoint and equal to the stored ones.
    pub fn validate(&self, g: &Graph) -> bool {
        let n = g.v_count();
        if self.footprints.len() != self.sequence.len() {
            return false;
        }
        let mut dominated = VertexSet::new(n);
        for (&v, stored) in self.sequence.iter().zip(&self.footprints) {
            if v >= n {
                return false;
            }
            let mut fp = g.neighbors(v).clone();
            if self.variant == GrundyVariant::Grundy {
                fp.insert(v);
            }
            fp.difference_with(&dominated);
            if fp.is_empty() || &fp != stored {
                return false;
            }
            dominated.union_with(g.neighbors(v));
            dominated.insert(v);
        }
        true
    }
}

/// Depth-first search over sequences, memoized on the set of dominated
/// vertices (which is all a suffix depends on).
struct Solver<'a, M> {
    mg: &'a MaskGraph<M>,
    variant: GrundyVariant,
    memo: HashMap<M, u8>,
    budget: usize,
}

impl<M: Mask> Solver<'_, M> {
    fn reach(&self, v: usize) -> M {
        match self.variant {
            GrundyVariant::Grundy => self.mg.rows[v] | M::bit(v),
            GrundyVariant::ZGrundy => self.mg.rows[v],
        }
    }

    fn longest(&mut self, dominated: M) -> Result<u8> {
        if let Some(&l) = self.memo.get(&dominated) {
            return Ok(l);
        }
        if self.memo.len() >= self.budget {
            return Err(Error::CapExceeded(format!(
                "Grundy search exceeded {} memoized states",
                self.budget
            )));
        }
        let mut best = 0u8;
        for v in 0..self.mg.len() {
            if (self.reach(v) & !dominated).is_zero() {
                continue;
            }
            let next = dominated | self.mg.rows[v] | M::bit(v);
            best = best.max(1 + self.longest(next)?);
        }
        self.memo.insert(dominated, best);
        Ok(best)
    }

    fn sequence(&mut self) -> Result<DominationSequence> {
        let mut dominated = M::ZERO;
        let mut seq = Vec::new();
        let mut footprints = Vec::new();
        let mut left = self.longest(M::ZERO)?;
        while left > 0 {
            for v in 0..self.mg.len() {
                let fp = self.reach(v) & !dominated;
                if fp.is_zero() {
                    continue;
                }
                let next = dominated | self.mg.rows[v] | M::bit(v);
                if 1 + self.longest(next)? == left {
                    seq.push(v);
                    footprints.push(self.mg.to_set(fp));
                    dominated = next;
                    left -= 1;
                    break;
                }
            }
        }
        Ok(DominationSequence {
            variant: self.variant,
            sequence: seq,
            footprints,
        })
    }
}

/// Default bound on memoized dominated-set states.
pub const GRUNDY_STATE_BUDGET: usize = 1 << 24;

/// Maximum-length (Z-)Grundy dominating sequence; the lexicographically
/// least one among those of maximum length.
pub fn grundy_exact(g: &Graph, variant: GrundyVariant, vertex_cap: usize) -> Result<DominationSequence> {
    grundy_exact_with_budget(g, variant, vertex_cap, GRUNDY_STATE_BUDGET)
}

pub fn grundy_exact_with_budget(
    g: &Graph,
    variant: GrundyVariant,
    vertex_cap: usize,
    budget: usize,
) -> Result<DominationSequence> {
    let n = g.v_count();
    if n > vertex_cap {
        return Err(Error::CapExceeded(format!("{n} vertices exceed the search cap {vertex_cap}")));
    }
    macro_rules! solve {
        ($mg:expr) => {{
            let mg = $mg;
            Solver {
                mg: &mg,
                variant,
                memo: HashMap::new(),
                budget,
            }
            .sequence()
        }};
    }
    if let Some(mg) = MaskGraph::<u64>::new(g) {
        solve!(mg)
    } else if let Some(mg) = MaskGraph::<u128>::new(g) {
        solve!(mg)
    } else {
        Err(Error::CapExceeded(format!("{n} vertices exceed the 128-vertex search kernel")))
    }
}

/// `|V| - γ^Z_gr(G)`, which equals the zero forcing number for graphs
/// without isolated vertices.
pub fn zf_from_grundy(g: &Graph, vertex_cap: usize) -> Result<usize> {
    if let Some(v) = (0..g.v_count()).find(|&v| g.degree(v) == 0) {
        return Err(Error::Hypothesis(format!("vertex {v} is isolated")));
    }
    Ok(g.v_count() - grundy_exact(g, GrundyVariant::ZGrundy, vertex_cap)?.len())
}

/// `(v_i, w_i)` pairs where `w_i` is the least vertex footprinted by `v_i`.
pub fn footprint_pairs(seq: &DominationSequence) -> Vec<(usize, usize)> {
    seq.sequence
        .iter()
        .zip(&seq.footprints)
        .map(|(&v, fp)| (v, fp.first().expect("footprints are nonempty")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Caps;
    use crate::graphs::{build, FamilySpec};

    /// Longest sequence by plain recursion over all orderings.
    fn longest_brute(g: &Graph, variant: GrundyVariant, dominated: &VertexSet) -> usize {
        (0..g.v_count())
            .filter_map(|v| {
                let mut fp = g.neighbors(v).clone();
                if variant == GrundyVariant::Grundy {
                    fp.insert(v);
                }
                fp.difference_with(dominated);
                if fp.is_empty() {
                    return None;
                }
                let mut d = dominated.clone();
                d.union_with(g.neighbors(v));
                d.insert(v);
                Some(1 + longest_brute(g, variant, &d))
            })
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn complete_and_cycle() {
        for m in 2..6 {
            let k = Graph::complete(m);
            assert_eq!(grundy_exact(&k, GrundyVariant::Grundy, 40).unwrap().len(), 1);
            assert_eq!(grundy_exact(&k, GrundyVariant::ZGrundy, 40).unwrap().len(), 1);
            assert_eq!(zf_from_grundy(&k, 40).unwrap(), m - 1);
        }
        let c4 = Graph::cycle(4);
        let s = grundy_exact(&c4, GrundyVariant::ZGrundy, 40).unwrap();
        assert_eq!(s.len(), longest_brute(&c4, GrundyVariant::ZGrundy, &VertexSet::new(4)));
        assert_eq!(s.len(), 2);
        assert!(s.validate(&c4));
        assert_eq!(zf_from_grundy(&c4, 40).unwrap(), 2);
    }

    #[test]
    fn against_brute_force() {
        let caps = Caps::default();
        for spec in [FamilySpec::johnson(5, 2, &[0]), FamilySpec::johnson(4, 2, &[1]), FamilySpec::hamming(2, 3)] {
            let g = build(&spec, &caps).unwrap();
            for variant in [GrundyVariant::Grundy, GrundyVariant::ZGrundy] {
                let s = grundy_exact(&g, variant, 40).unwrap();
                assert!(s.validate(&g));
                assert_eq!(s.len(), longest_brute(&g, variant, &VertexSet::new(g.v_count())), "{spec}");
            }
        }
    }

    #[test]
    fn isolated_vertex_is_rejected() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(matches!(zf_from_grundy(&g, 40), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn budget_is_enforced() {
        let g = Graph::cycle(12);
        assert!(matches!(
            grundy_exact_with_budget(&g, GrundyVariant::Grundy, 40, 3),
            Err(Error::CapExceeded(_))
        ));
    }
}
