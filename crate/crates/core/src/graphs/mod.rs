//! Dense bitset graphs and the three vertex-labelled families.

mod build;
mod family;
pub mod io;

pub use build::{
    build, build_generalized_grassmann, build_generalized_johnson, build_hamming,
    build_generalized_grassmann_with, cartesian_product, grassmann_points_route, hamming_index,
    hamming_tuple, GrassmannRoute,
};
pub use family::{FamilySpec, IntersectionSet};

use crate::bitset::VertexSet;
use crate::combin::{subset_elements, SubspaceRep};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{HashSet, VecDeque};

/// What a vertex stands for.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexLabel {
    /// A subset of `[n]`, element `i` at bit `i - 1`.
    Subset(u64),
    Subspace(SubspaceRep),
    /// Coordinates `(a_1, ..., a_n)`.
    Tuple(Vec<u8>),
    /// Anonymous vertex.
    Index(usize),
    Pair(Box<VertexLabel>, Box<VertexLabel>),
}

impl VertexLabel {
    /// Human notation: sorted element lists, RREF rows, digit tuples.
    pub fn display(&self) -> String {
        match self {
            VertexLabel::Subset(m) => {
                let els: Vec<String> = subset_elements(*m).iter().map(|e| e.to_string()).collect();
                format!("{{{}}}", els.join(","))
            }
            VertexLabel::Subspace(s) => s.label(),
            VertexLabel::Tuple(t) => {
                let cs: Vec<String> = t.iter().map(|c| c.to_string()).collect();
                format!("({})", cs.join(","))
            }
            VertexLabel::Index(i) => i.to_string(),
            VertexLabel::Pair(a, b) => format!("<{};{}>", a.display(), b.display()),
        }
    }
}

/// Simple undirected graph with one adjacency bit row per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Vec<VertexLabel>,
    spec: Option<FamilySpec>,
}

impl Graph {
    /// Checked constructor: rows must be square, symmetric and loopless, and
    /// labels distinct.
    pub fn from_parts(
        adj: Vec<VertexSet>,
        labels: Vec<VertexLabel>,
        spec: Option<FamilySpec>,
    ) -> Result<Self> {
        let g = Graph { adj, labels, spec };
        g.check_invariants()?;
        Ok(g)
    }

    pub(crate) fn from_parts_unchecked(
        adj: Vec<VertexSet>,
        labels: Vec<VertexLabel>,
        spec: Option<FamilySpec>,
    ) -> Self {
        let g = Graph { adj, labels, spec };
        debug_assert!(g.check_invariants().is_ok());
        g
    }

    pub fn from_edges(v_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![VertexSet::new(v_count); v_count];
        for &(u, v) in edges {
            if u >= v_count || v >= v_count {
                return Err(Error::Invalid(format!("edge ({u},{v}) out of range")));
            }
            if u == v {
                return Err(Error::Invalid(format!("loop at {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let labels = (0..v_count).map(VertexLabel::Index).collect();
        Ok(Graph {
            adj,
            labels,
            spec: None,
        })
    }

    pub fn complete(m: usize) -> Self {
        let edges: Vec<_> = (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v))).collect();
        Self::from_edges(m, &edges).unwrap()
    }

    pub fn path(m: usize) -> Self {
        let edges: Vec<_> = (1..m).map(|v| (v - 1, v)).collect();
        Self::from_edges(m, &edges).unwrap()
    }

    pub fn cycle(m: usize) -> Self {
        assert!(m >= 3);
        let edges: Vec<_> = (0..m).map(|v| (v, (v + 1) % m)).collect();
        Self::from_edges(m, &edges).unwrap()
    }

    pub fn empty(m: usize) -> Self {
        Self::from_edges(m, &[]).unwrap()
    }

    pub fn check_invariants(&self) -> Result<()> {
        let n = self.adj.len();
        if self.labels.len() != n {
            return Err(Error::Invalid("label table length differs from vertex count".into()));
        }
        for (v, row) in self.adj.iter().enumerate() {
            if row.universe() != n {
                return Err(Error::Invalid(format!("row {v} has width {}", row.universe())));
            }
            if row.contains(v) {
                return Err(Error::Invalid(format!("loop at vertex {v}")));
            }
            if let Some(u) = row.iter().find(|&u| !self.adj[u].contains(v)) {
                return Err(Error::Invalid(format!("edge {v}->{u} is not symmetric")));
            }
        }
        let distinct: HashSet<&VertexLabel> = self.labels.iter().collect();
        if distinct.len() != n {
            return Err(Error::Invalid("vertex labels are not distinct".into()));
        }
        Ok(())
    }

    #[inline]
    pub fn v_count(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.v_count()).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &VertexLabel {
        &self.labels[v]
    }

    pub fn spec(&self) -> Option<&FamilySpec> {
        self.spec.as_ref()
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn vertex_of(&self, label: &VertexLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `G[S]`, re-indexed in increasing id order; labels carry over.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Graph {
        let ids = set.to_vec();
        let m = ids.len();
        let adj = ids
            .iter()
            .map(|&u| {
                VertexSet::from_ids(
                    m,
                    ids.iter()
                        .enumerate()
                        .filter(|(_, &v)| self.is_adjacent(u, v))
                        .map(|(j, _)| j),
                )
            })
            .collect();
        let labels = ids.iter().map(|&u| self.labels[u].clone()).collect();
        Graph {
            adj,
            labels,
            spec: None,
        }
    }

    /// BFS reachability from vertex 0. The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.v_count();
        if n == 0 {
            return true;
        }
        let mut seen = VertexSet::new(n);
        seen.insert(0);
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            for v in self.adj[u].iter() {
                if !seen.contains(v) {
                    seen.insert(v);
                    queue.push_back(v);
                }
            }
        }
        seen.is_full()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(|r| r.is_empty())
    }

    /// Sets every vertex has the same degree.
    pub fn is_regular(&self) -> bool {
        let d = self.degrees();
        d.windows(2).all(|w| w[0] == w[1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connectivity_examples() {
        let k4 = Graph::complete(4);
        assert!(k4.is_connected() && !k4.has_isolated_vertex());
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        let single = Graph::empty(1);
        assert!(single.is_connected() && single.has_isolated_vertex());
    }

    #[test]
    fn induced_subgraph_edges() {
        let c5 = Graph::cycle(5);
        assert_eq!(c5.induced_subgraph(&VertexSet::full(5)), c5);
        assert_eq!(c5.induced_subgraph(&VertexSet::new(5)).v_count(), 0);
        let p = c5.induced_subgraph(&VertexSet::from_ids(5, [0, 1, 2]));
        assert_eq!(p.edge_count(), 2);
    }

    #[test]
    fn invariants_are_checked() {
        let mut rows = vec![VertexSet::new(2); 2];
        rows[0].insert(1);
        let labels = vec![VertexLabel::Index(0), VertexLabel::Index(1)];
        assert!(Graph::from_parts(rows.clone(), labels.clone(), None).is_err());
        rows[1].insert(0);
        assert!(Graph::from_parts(rows.clone(), labels, None).is_ok());
        let dup = vec![VertexLabel::Index(0), VertexLabel::Index(0)];
        assert!(Graph::from_parts(rows, dup, None).is_err());
    }

    #[test]
    fn label_display() {
        assert_eq!(VertexLabel::Subset(0b1010).display(), "{2,4}");
        assert_eq!(VertexLabel::Tuple(vec![0, 2, 1]).display(), "(0,2,1)");
    }
}
