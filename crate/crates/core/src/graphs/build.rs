use super::{FamilySpec, Graph, IntersectionSet, VertexLabel};
use crate::bitset::VertexSet;
use crate::combin::{
    enumerate_k_subsets, enumerate_k_subspaces, intersection_dim, FieldTable,
    SubspaceRep,
};
use crate::config::Caps;
use crate::error::{Error, Result};
use rayon::prelude::*;

/// Builds the graph described by `spec`.
pub fn build(spec: &FamilySpec, caps: &Caps) -> Result<Graph> {
    spec.validate()?;
    match spec {
        FamilySpec::GeneralizedJohnson { n, k, s } => build_generalized_johnson(*n, *k, s, caps),
        FamilySpec::GeneralizedGrassmann { n, k, q, s } => {
            build_generalized_grassmann(*n, *k, *q, s, caps)
        }
        FamilySpec::Hamming { n, q } => build_hamming(*n, *q, caps),
    }
}

fn check_count(spec: &FamilySpec, caps: &Caps) -> Result<usize> {
    let count = spec.vertex_count()?;
    if count > caps.vertices {
        return Err(Error::sizing("vertex count", count, caps.vertices));
    }
    Ok(count as usize)
}

/// `J_S(n,k)`; vertex ids follow colex order of the subsets.
pub fn build_generalized_johnson(
    n: usize,
    k: usize,
    s: &IntersectionSet,
    caps: &Caps,
) -> Result<Graph> {
    let spec = FamilySpec::GeneralizedJohnson { n, k, s: s.clone() };
    spec.validate()?;
    check_count(&spec, caps)?;
    let sets = enumerate_k_subsets(n, k, caps.vertices)?;
    let allowed = s.mask();
    let v = sets.len();
    let adj: Vec<VertexSet> = sets
        .par_iter()
        .enumerate()
        .map(|(i, &a)| {
            VertexSet::from_ids(
                v,
                sets.iter().enumerate().filter_map(|(j, &b)| {
                    (j != i && allowed >> (a & b).count_ones() & 1 == 1).then_some(j)
                }),
            )
        })
        .collect();
    let labels = sets.into_iter().map(VertexLabel::Subset).collect();
    Ok(Graph::from_parts_unchecked(adj, labels, Some(spec)))
}

/// How pairwise intersection dimensions are computed for Grassmann graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrassmannRoute {
    /// `dim U + dim W - rank[U; W]`.
    Rank,
    /// Each subspace as its set of points; `|U ∩ W| = q^dim(U ∩ W)`.
    Points,
}

/// Point sets are used when `q^n` is at most this.
const POINTS_ROUTE_LIMIT: u64 = 1 << 14;

/// The route [`build_generalized_grassmann`] picks for these parameters.
pub fn grassmann_points_route(n: usize, q: usize) -> GrassmannRoute {
    match (q as u64).checked_pow(n as u32) {
        Some(points) if points <= POINTS_ROUTE_LIMIT => GrassmannRoute::Points,
        _ => GrassmannRoute::Rank,
    }
}

/// `J_{q,S}(n,k)`; vertex ids follow lexicographic order of RREF rows.
pub fn build_generalized_grassmann(
    n: usize,
    k: usize,
    q: usize,
    s: &IntersectionSet,
    caps: &Caps,
) -> Result<Graph> {
    build_generalized_grassmann_with(n, k, q, s, caps, grassmann_points_route(n, q))
}

pub fn build_generalized_grassmann_with(
    n: usize,
    k: usize,
    q: usize,
    s: &IntersectionSet,
    caps: &Caps,
    route: GrassmannRoute,
) -> Result<Graph> {
    let spec = FamilySpec::GeneralizedGrassmann {
        n,
        k,
        q,
        s: s.clone(),
    };
    spec.validate()?;
    check_count(&spec, caps)?;
    let field = FieldTable::with_modulus(q as u64, None, caps)?;
    let spaces = enumerate_k_subspaces(n, k, &field, caps.vertices)?;
    let v = spaces.len();
    let allowed = s.mask();
    let adj: Vec<VertexSet> = match route {
        GrassmannRoute::Rank => spaces
            .par_iter()
            .enumerate()
            .map(|(i, a)| {
                VertexSet::from_ids(
                    v,
                    spaces.iter().enumerate().filter_map(|(j, b)| {
                        let d = intersection_dim(a, b, &field).expect("same ambient space");
                        (j != i && allowed >> d & 1 == 1).then_some(j)
                    }),
                )
            })
            .collect(),
        GrassmannRoute::Points => {
            let points: Vec<VertexSet> = spaces
                .par_iter()
                .map(|sp| point_set(sp, &field))
                .collect();
            // |U ∩ W| = q^d  ->  d
            let mut dim_of = vec![usize::MAX; q.pow(k as u32) + 1];
            for d in 0..=k {
                dim_of[q.pow(d as u32)] = d;
            }
            points
                .par_iter()
                .enumerate()
                .map(|(i, a)| {
                    VertexSet::from_ids(
                        v,
                        points.iter().enumerate().filter_map(|(j, b)| {
                            let d = dim_of[a.intersection_count(b)];
                            (j != i && allowed >> d & 1 == 1).then_some(j)
                        }),
                    )
                })
                .collect()
        }
    };
    let labels = spaces.into_iter().map(VertexLabel::Subspace).collect();
    Ok(Graph::from_parts_unchecked(adj, labels, Some(spec)))
}

/// Every vector of the subspace, as indices into `GF(q)^n`.
fn point_set(sp: &SubspaceRep, f: &FieldTable) -> VertexSet {
    let (n, q, k) = (sp.ambient(), f.order(), sp.dim());
    let total = q.pow(n as u32);
    let mut out = VertexSet::new(total);
    let mut coeffs = vec![0u8; k];
    loop {
        let mut v = vec![0u8; n];
        for (c, row) in coeffs.iter().zip(sp.rows()) {
            for (x, &r) in v.iter_mut().zip(row) {
                *x = f.add(*x, f.mul(*c, r));
            }
        }
        let idx = v.iter().fold(0usize, |acc, &c| acc * q + c as usize);
        out.insert(idx);
        // odometer over coefficient vectors
        let mut i = 0;
        while i < k {
            coeffs[i] += 1;
            if (coeffs[i] as usize) < q {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
        if i == k {
            break;
        }
    }
    out
}

/// Vertex id of a tuple: base-`q` value with the first coordinate least
/// significant, so the last coordinate indexes contiguous copies of
/// `H(n-1,q)`.
pub fn hamming_index(tuple: &[u8], q: usize) -> usize {
    tuple.iter().rev().fold(0, |acc, &c| acc * q + c as usize)
}

pub fn hamming_tuple(mut id: usize, n: usize, q: usize) -> Vec<u8> {
    (0..n)
        .map(|_| {
            let c = (id % q) as u8;
            id /= q;
            c
        })
        .collect()
}

/// `H(n,q)` with ids from [`hamming_index`].
pub fn build_hamming(n: usize, q: usize, caps: &Caps) -> Result<Graph> {
    let spec = FamilySpec::Hamming { n, q };
    spec.validate()?;
    let v = check_count(&spec, caps)?;
    let adj: Vec<VertexSet> = (0..v)
        .into_par_iter()
        .map(|id| {
            let mut row = VertexSet::new(v);
            let mut stride = 1;
            let mut rest = id;
            for coord in 0..n {
                let digit = rest % q;
                rest /= q;
                let base = id - digit * stride;
                if coord == 0 {
                    row.insert_range(base, base + q);
                } else {
                    for c in 0..q {
                        row.insert(base + c * stride);
                    }
                }
                stride *= q;
            }
            row.remove(id);
            row
        })
        .collect();
    let labels = (0..v)
        .map(|id| VertexLabel::Tuple(hamming_tuple(id, n, q)))
        .collect();
    Ok(Graph::from_parts_unchecked(adj, labels, Some(spec)))
}

/// `G □ H`. Vertex `(g, h)` gets id `h * |V(G)| + g`.
pub fn cartesian_product(g: &Graph, h: &Graph, caps: &Caps) -> Result<Graph> {
    let (ng, nh) = (g.v_count(), h.v_count());
    let v = ng
        .checked_mul(nh)
        .filter(|&v| v as u64 <= caps.vertices)
        .ok_or_else(|| Error::sizing("product vertex count", ng as u128 * nh as u128, caps.vertices))?;
    let adj: Vec<VertexSet> = (0..v)
        .into_par_iter()
        .map(|id| {
            let (gi, hi) = (id % ng, id / ng);
            let mut row = VertexSet::new(v);
            for gj in g.neighbors(gi).iter() {
                row.insert(hi * ng + gj);
            }
            for hj in h.neighbors(hi).iter() {
                row.insert(hj * ng + gi);
            }
            row
        })
        .collect();
    let labels = (0..v)
        .map(|id| {
            VertexLabel::Pair(
                Box::new(g.label(id % ng).clone()),
                Box::new(h.label(id / ng).clone()),
            )
        })
        .collect();
    Ok(Graph::from_parts_unchecked(adj, labels, None))
}
