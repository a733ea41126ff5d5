use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graphs::Graph;
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// Ordered record of forces from an initial black set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForcingTrace {
    pub initial: VertexSet,
    /// `(pivot, forced)` pairs in the order they fired.
    pub steps: Vec<(usize, usize)>,
}

impl ForcingTrace {
    /// Re-runs the recorded forces, checking the color rule at every step.
    /// Returns the final black set.
    pub fn replay(&self, g: &Graph) -> Result<VertexSet> {
        if self.initial.universe() != g.v_count() {
            return Err(Error::DimensionMismatch("trace is for a different vertex count".into()));
        }
        let mut black = self.initial.clone();
        for (i, &(p, w)) in self.steps.iter().enumerate() {
            if p >= g.v_count() || w >= g.v_count() {
                return Err(Error::Invalid(format!("step {i}: vertex out of range")));
            }
            if !black.contains(p) {
                return Err(Error::Invalid(format!("step {i}: pivot {p} is white")));
            }
            if black.contains(w) || !g.is_adjacent(p, w) {
                return Err(Error::Invalid(format!("step {i}: {w} is not a white neighbor of {p}")));
            }
            if g.neighbors(p).difference_count(&black) != 1 {
                return Err(Error::Invalid(format!("step {i}: pivot {p} has several white neighbors")));
            }
            black.insert(w);
        }
        Ok(black)
    }
}

/// Order in which ready pivots are served.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Schedule {
    #[default]
    Fifo,
    Lifo,
}

/// Black set with a white-neighbor counter per vertex. Counters are kept
/// for every vertex; they are only consulted for black ones.
#[derive(Debug, Clone)]
pub struct Coloring<'g> {
    g: &'g Graph,
    black: VertexSet,
    white_nbrs: Vec<u32>,
}

impl<'g> Coloring<'g> {
    pub fn new(g: &'g Graph, black: &VertexSet) -> Self {
        let white_nbrs = (0..g.v_count())
            .map(|v| g.neighbors(v).difference_count(black) as u32)
            .collect();
        Coloring {
            g,
            black: black.clone(),
            white_nbrs,
        }
    }

    pub fn black(&self) -> &VertexSet {
        &self.black
    }

    pub fn white_neighbor_count(&self, v: usize) -> usize {
        self.white_nbrs[v] as usize
    }

    pub fn is_black(&self, v: usize) -> bool {
        self.black.contains(v)
    }

    fn paint(&mut self, w: usize) {
        self.black.insert(w);
        for u in self.g.neighbors(w).iter() {
            self.white_nbrs[u] -= 1;
        }
    }

    /// Runs the color rule to exhaustion. Only vertices in `pivots` (all
    /// vertices when `None`) may force.
    pub fn propagate(&mut self, schedule: Schedule, pivots: Option<&VertexSet>) -> Vec<(usize, usize)> {
        let allowed = |v: usize| pivots.is_none_or(|p| p.contains(v));
        let mut ready: VecDeque<usize> = self
            .black
            .iter()
            .filter(|&v| self.white_nbrs[v] == 1 && allowed(v))
            .collect();
        let mut steps = Vec::new();
        loop {
            let next = match schedule {
                Schedule::Fifo => ready.pop_front(),
                Schedule::Lifo => ready.pop_back(),
            };
            let Some(p) = next else { break };
            if self.white_nbrs[p] != 1 {
                continue;
            }
            let w = self.g.neighbors(p).first_not_in(&self.black).expect("counter says one white");
            self.paint(w);
            steps.push((p, w));
            for u in self.g.neighbors(w).iter() {
                if self.white_nbrs[u] == 1 && self.black.contains(u) && allowed(u) {
                    ready.push_back(u);
                }
            }
            if self.white_nbrs[w] == 1 && allowed(w) {
                ready.push_back(w);
            }
        }
        steps
    }
}

/// Closure of `black` with its forcing trace.
pub fn closure(g: &Graph, black: &VertexSet) -> (VertexSet, ForcingTrace) {
    closure_with(g, black, Schedule::Fifo, None)
}

/// Closure under a given schedule, optionally restricting which vertices
/// may act as pivots.
pub fn closure_with(
    g: &Graph,
    black: &VertexSet,
    schedule: Schedule,
    pivots: Option<&VertexSet>,
) -> (VertexSet, ForcingTrace) {
    let mut c = Coloring::new(g, black);
    let steps = c.propagate(schedule, pivots);
    let trace = ForcingTrace {
        initial: black.clone(),
        steps,
    };
    (c.black, trace)
}

/// Repeated full scans until nothing changes. Kept as a reference for the
/// counter-based engine.
pub fn closure_naive(g: &Graph, black: &VertexSet) -> VertexSet {
    let mut black = black.clone();
    loop {
        let mut changed = false;
        for v in 0..g.v_count() {
            if black.contains(v) && g.neighbors(v).difference_count(&black) == 1 {
                let w = g.neighbors(v).first_not_in(&black).unwrap();
                black.insert(w);
                changed = true;
            }
        }
        if !changed {
            return black;
        }
    }
}

pub fn is_zero_forcing(g: &Graph, black: &VertexSet) -> bool {
    closure(g, black).0.is_full()
}

pub fn is_connected_zfs(g: &Graph, black: &VertexSet) -> bool {
    is_zero_forcing(g, black) && g.induced_subgraph(black).is_connected()
}

pub fn is_total_zfs(g: &Graph, black: &VertexSet) -> bool {
    is_zero_forcing(g, black) && !g.induced_subgraph(black).has_isolated_vertex()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{build, FamilySpec, VertexLabel};
    use crate::combin::subset_from_elements;
    use crate::config::Caps;

    #[test]
    fn closure_examples() {
        let k4 = Graph::complete(4);
        let (all, t) = closure(&k4, &VertexSet::full(4));
        assert!(all.is_full() && t.steps.is_empty());

        let p3 = Graph::path(3);
        let (b, t) = closure(&p3, &VertexSet::from_ids(3, [0]));
        assert!(b.is_full());
        assert_eq!(t.steps, vec![(0, 1), (1, 2)]);
        assert!(t.replay(&p3).unwrap().is_full());

        let c4 = Graph::cycle(4);
        let (b, t) = closure(&c4, &VertexSet::from_ids(4, [0]));
        assert_eq!(b.to_vec(), vec![0]);
        assert!(t.steps.is_empty());
    }

    #[test]
    fn replay_rejects_bad_steps() {
        let p3 = Graph::path(3);
        let bad = ForcingTrace {
            initial: VertexSet::from_ids(3, [1]),
            steps: vec![(1, 0)],
        };
        assert!(bad.replay(&p3).is_err());
        let white_pivot = ForcingTrace {
            initial: VertexSet::from_ids(3, [0]),
            steps: vec![(2, 1)],
        };
        assert!(white_pivot.replay(&p3).is_err());
    }

    #[test]
    fn petersen_three_sets_do_not_force() {
        let p = build(&FamilySpec::johnson(5, 2, &[0]), &Caps::default()).unwrap();
        for a in 0..10 {
            for b in a + 1..10 {
                for c in b + 1..10 {
                    assert!(!is_zero_forcing(&p, &VertexSet::from_ids(10, [a, b, c])));
                }
            }
        }
    }

    #[test]
    fn johnson_4_2_minimum_set() {
        let g = build(&FamilySpec::johnson(4, 2, &[1]), &Caps::default()).unwrap();
        let mut b = VertexSet::full(6);
        for els in [[1, 3], [1, 4]] {
            b.remove(g.vertex_of(&VertexLabel::Subset(subset_from_elements(&els))).unwrap());
        }
        assert!(is_zero_forcing(&g, &b));
        assert!(is_connected_zfs(&g, &b));
        assert!(is_total_zfs(&g, &b));
        let v = VertexSet::full(6);
        assert!(is_zero_forcing(&g, &v) && is_connected_zfs(&g, &v) && is_total_zfs(&g, &v));
    }

    #[test]
    fn schedules_agree_with_rescan() {
        let g = build(&FamilySpec::hamming(2, 3), &Caps::default()).unwrap();
        for mask in 0u32..(1 << 9) {
            let b = VertexSet::from_ids(9, (0..9).filter(|i| mask >> i & 1 == 1));
            let (fifo, tf) = closure_with(&g, &b, Schedule::Fifo, None);
            let (lifo, tl) = closure_with(&g, &b, Schedule::Lifo, None);
            assert_eq!(fifo, lifo);
            assert_eq!(fifo, closure_naive(&g, &b));
            assert_eq!(tf.replay(&g).unwrap(), fifo);
            assert_eq!(tl.replay(&g).unwrap(), lifo);
        }
    }
}
