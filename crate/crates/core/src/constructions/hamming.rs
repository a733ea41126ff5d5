use super::{Claims, ConstructionResult};
use crate::bitset::VertexSet;
use crate::combin::checked_pow;
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::forcing::{closure_with, ForcingTrace, Schedule};
use crate::graphs::{hamming_tuple, FamilySpec, Graph};

/// `z_{n,q} = (q^n + (q-2)^n) / 2`.
pub fn z_hamming(n: usize, q: usize) -> Result<u64> {
    let a = checked_pow(q as u64, n as u32)?;
    let b = checked_pow(q as u64 - 2, n as u32)?;
    a.checked_add(b)
        .map(|s| s / 2)
        .ok_or_else(|| Error::Overflow(format!("z_{{{n},{q}}}")))
}

fn order(n: usize, q: usize, caps: &Caps) -> Result<usize> {
    if n < 1 || q < 2 {
        return Err(Error::Invalid(format!("need n >= 1, q >= 2, got n={n} q={q}")));
    }
    let v = checked_pow(q as u64, n as u32)?;
    if v > caps.vertices {
        return Err(Error::sizing("q^n", v, caps.vertices));
    }
    Ok(v as usize)
}

/// Tuples with every coordinate in `1..=q-2`.
pub fn hamming_core(n: usize, q: usize, caps: &Caps) -> Result<VertexSet> {
    let v = order(n, q, caps)?;
    Ok(VertexSet::from_ids(
        v,
        (0..v).filter(|&id| hamming_tuple(id, n, q).iter().all(|&a| a >= 1 && (a as usize) + 2 <= q)),
    ))
}

/// Leader set of size `z_{n,q}` in `H(n,q)`, containing the core.
///
/// `H(n,q)` is `q` copies of `H(n-1,q)` indexed by the last coordinate.
/// Copies `0..q-2` take the whole leader set of `H(n-1,q)`, copy `q-1`
/// takes it without the core. The base case is `{0..q-2}` in `K_q`.
pub fn hamming_zfs(n: usize, q: usize, caps: &Caps) -> Result<ConstructionResult> {
    let v = order(n, q, caps)?;
    let mut lead: Vec<bool> = (0..q).map(|a| a + 1 < q).collect();
    let mut core: Vec<bool> = (0..q).map(|a| a >= 1 && a + 2 <= q).collect();
    for _ in 1..n {
        let m = lead.len();
        let mut next_lead = Vec::with_capacity(m * q);
        let mut next_core = Vec::with_capacity(m * q);
        for copy in 0..q {
            let in_core = copy >= 1 && copy + 2 <= q;
            for i in 0..m {
                next_lead.push(lead[i] && (copy + 1 < q || !core[i]));
                next_core.push(in_core && core[i]);
            }
        }
        lead = next_lead;
        core = next_core;
    }
    debug_assert_eq!(lead.len(), v);
    let white = VertexSet::from_ids(v, (0..v).filter(|&i| !lead[i]));
    let claims = Claims { zfs: true, total: false, connected: false, minimum_known: true };
    Ok(ConstructionResult::from_white(FamilySpec::hamming(n, q), white, z_hamming(n, q)?, claims))
}

/// A forcing trace for a Hamming leader set in which no core vertex acts
/// as a pivot. Fails if the restricted process stalls.
pub fn hamming_trace(g: &Graph, r: &ConstructionResult) -> Result<ForcingTrace> {
    let FamilySpec::Hamming { n, q } = r.spec else {
        return Err(Error::Invalid("not a Hamming construction".into()));
    };
    let core = hamming_core(n, q, &Caps { vertices: g.v_count() as u64, ..Caps::default() })?;
    let (black, trace) = closure_with(g, &r.leader, Schedule::Fifo, Some(&core.complement()));
    if !black.is_full() {
        return Err(Error::Invalid(format!(
            "forcing without core pivots stalls at {} of {} vertices",
            black.count(),
            g.v_count()
        )));
    }
    Ok(trace)
}
