use super::mask::{Mask, MaskGraph};
use super::search::{find_forceable_white, zero_forcing_number_exact, SearchOptions};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graphs::Graph;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum ZfVariant {
    #[default]
    Plain,
    /// `G[B]` has no isolated vertex.
    Total,
    /// `G[B]` is connected.
    Connected,
}

impl ZfVariant {
    pub fn accepts(self, g: &Graph, leader: &VertexSet) -> bool {
        match self {
            ZfVariant::Plain => super::is_zero_forcing(g, leader),
            ZfVariant::Total => super::is_total_zfs(g, leader),
            ZfVariant::Connected => super::is_connected_zfs(g, leader),
        }
    }
}

fn scan<M: Mask>(mg: &MaskGraph<M>, from: usize, variant: ZfVariant) -> Option<(usize, VertexSet)> {
    let n = mg.len();
    for size in from..=n {
        let found = find_forceable_white(mg, n - size, &mut |w| {
            let leader = mg.full & !w;
            match variant {
                ZfVariant::Plain => true,
                ZfVariant::Total => mg.induces_no_isolated(leader),
                ZfVariant::Connected => mg.induces_connected(leader),
            }
        });
        if let Some(w) = found {
            return Some((size, mg.to_set(mg.full & !w)));
        }
    }
    None
}

/// Smallest zero forcing set of the given variant with a certificate, or
/// `None` when no such set exists (for example a total set in a graph with
/// an isolated vertex). The certificate has the lexicographically least
/// white set among the optimal ones.
pub fn variant_number_exact(
    g: &Graph,
    variant: ZfVariant,
    opts: &SearchOptions,
) -> Result<Option<(usize, VertexSet)>> {
    let n = g.v_count();
    if n > opts.vertex_cap {
        return Err(Error::CapExceeded(format!(
            "{n} vertices exceed the search cap {}",
            opts.vertex_cap
        )));
    }
    let base = zero_forcing_number_exact(g, opts)?;
    if !base.exact {
        return Err(Error::CapExceeded(
            base.cutoff.unwrap_or_else(|| "zero forcing search incomplete".into()),
        ));
    }
    if variant == ZfVariant::Plain {
        return Ok(Some((base.upper, base.certificate.unwrap())));
    }
    if let Some(mg) = MaskGraph::<u64>::new(g) {
        Ok(scan(&mg, base.upper, variant))
    } else if let Some(mg) = MaskGraph::<u128>::new(g) {
        Ok(scan(&mg, base.upper, variant))
    } else {
        Err(Error::CapExceeded(format!("{n} vertices exceed the 128-vertex search kernel")))
    }
}
