//! Explicit leader sets for the three families and the closed-form values
//! they are expected to attain.
//!
//! Every constructor returns the white set alongside the leader set so the
//! result can be checked by closure without trusting the construction.

mod grassmann;
mod hamming;
mod johnson;
mod predict;

pub use grassmann::{grassmann_special_set_j2_4_2, grassmann_zfs, grassmann_zfs_with, SpecialSets};
pub use hamming::{hamming_core, hamming_trace, hamming_zfs, z_hamming};
pub use johnson::{johnson_zfs, kneser_edge_choice, kneser_zfs, kneser_zfs_edge, kneser_zfs_with, EdgeChoice};
pub use predict::{predicted_zf, HypothesisTag, Prediction, PredictedValue};

use crate::bitset::VertexSet;
use crate::forcing::{is_zero_forcing, closure};
use crate::graphs::{FamilySpec, Graph};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Properties a construction is claimed to have.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Claims {
    pub zfs: bool,
    /// `G[leader]` has no isolated vertex.
    pub total: bool,
    /// `G[leader]` is connected.
    pub connected: bool,
    /// The leader set is known to be minimum.
    pub minimum_known: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionResult {
    pub spec: FamilySpec,
    pub leader: VertexSet,
    pub white: VertexSet,
    pub predicted_size: u64,
    pub claims: Claims,
}

/// Outcome of checking a construction on its graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub partition_ok: bool,
    pub size_ok: bool,
    pub zero_forcing: bool,
    pub total: bool,
    pub connected: bool,
    /// Black vertices after closure.
    pub closure_size: usize,
}

impl Verification {
    /// Every claimed property holds.
    pub fn confirms(&self, claims: &Claims) -> bool {
        self.partition_ok
            && self.size_ok
            && (!claims.zfs || self.zero_forcing)
            && (!claims.total || self.total)
            && (!claims.connected || self.connected)
    }
}

impl ConstructionResult {
    pub(crate) fn from_white(spec: FamilySpec, white: VertexSet, predicted_size: u64, claims: Claims) -> Self {
        ConstructionResult {
            spec,
            leader: white.complement(),
            white,
            predicted_size,
            claims,
        }
    }

    pub fn leader_size(&self) -> usize {
        self.leader.count()
    }

    /// Runs closure and the induced-subgraph checks on `g`.
    pub fn verify(&self, g: &Graph) -> Result<Verification> {
        let n = g.v_count();
        if self.leader.universe() != n || self.white.universe() != n {
            return Err(Error::DimensionMismatch(format!(
                "construction has {} vertices, graph has {n}",
                self.leader.universe()
            )));
        }
        let mut union = self.leader.clone();
        union.union_with(&self.white);
        let partition_ok = union.is_full() && self.leader.intersection_count(&self.white) == 0;
        let (black, _) = closure(g, &self.leader);
        let sub = g.induced_subgraph(&self.leader);
        Ok(Verification {
            partition_ok,
            size_ok: self.leader.count() as u64 == self.predicted_size,
            zero_forcing: black.is_full(),
            total: !sub.has_isolated_vertex(),
            connected: sub.is_connected(),
            closure_size: black.count(),
        })
    }

    /// Only the zero forcing property, skipping the induced subgraph.
    pub fn verify_zfs(&self, g: &Graph) -> bool {
        self.leader.universe() == g.v_count() && is_zero_forcing(g, &self.leader)
    }
}

pub(crate) fn hypothesis(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Hypothesis(what()))
    }
}
