use crate::combin::{extend_avoiding, FieldTable, Span, SubspaceRep};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::graphs::{FamilySpec, Graph, VertexLabel};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// An explicit walk in a host graph together with the length it is meant
/// to realize.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkCertificate {
    pub vertices: Vec<usize>,
    pub claimed_length: usize,
}

impl WalkCertificate {
    pub fn length(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    /// Consecutive vertices adjacent and the length as claimed.
    pub fn validate(&self, g: &Graph) -> bool {
        self.length() == self.claimed_length
            && self.vertices.iter().all(|&v| v < g.v_count())
            && self.vertices.windows(2).all(|w| g.is_adjacent(w[0], w[1]))
    }
}

struct Ctx<'a> {
    g: &'a Graph,
    f: FieldTable,
    k: usize,
    s: usize,
    index: HashMap<&'a SubspaceRep, usize>,
}

impl Ctx<'_> {
    fn id(&self, sp: &SubspaceRep) -> Result<usize> {
        self.index
            .get(sp)
            .copied()
            .ok_or_else(|| Error::Invalid(format!("subspace {} is not a vertex", sp.label())))
    }

    fn rep(&self, span: Span) -> SubspaceRep {
        SubspaceRep::from_span(span, self.f.order())
    }

    /// Basis of `inter` followed by vectors of `outer` completing it.
    fn complete_basis(&self, inter: &SubspaceRep, outer: &SubspaceRep) -> Vec<Vec<u8>> {
        let mut span = inter.to_span();
        let mut extra = Vec::new();
        for r in outer.rows() {
            if span.insert(r, &self.f) {
                extra.push(r.clone());
            }
        }
        extra
    }

    /// A `k`-space meeting `v` exactly in `pi` and `w` exactly in `tau`,
    /// where `pi`, `tau` contain `v ∩ w`.
    fn bridge(&self, v: &SubspaceRep, w: &SubspaceRep, pi: &Span, tau: &Span) -> Result<SubspaceRep> {
        let base = pi.union(tau, &self.f);
        let m = self.k - base.dim();
        let span = extend_avoiding(&base, m, &[v.to_span(), w.to_span()], &self.f)
            .ok_or_else(|| Error::Hypothesis("no avoiding extension exists".into()))?;
        Ok(self.rep(span))
    }

    /// Walk of length at most two from `v` to `w`, assuming
    /// `k + dim(v ∩ w) >= 2s`.
    fn short_walk(&self, v: &SubspaceRep, w: &SubspaceRep) -> Result<Vec<SubspaceRep>> {
        let inter = v.intersection(w, &self.f)?;
        let t = inter.dim();
        if v == w {
            return Ok(vec![v.clone()]);
        }
        if self.g.is_adjacent(self.id(v)?, self.id(w)?) {
            return Ok(vec![v.clone(), w.clone()]);
        }
        let (pi, tau) = if t >= self.s {
            // any s-space inside v ∩ w
            let rows = &inter.rows()[..self.s];
            let sp = Span::from_vectors(inter.ambient(), rows.iter().map(|r| r.as_slice()), &self.f);
            (sp.clone(), sp)
        } else {
            let need = self.s - t;
            let ys = self.complete_basis(&inter, v);
            let zs = self.complete_basis(&inter, w);
            let mk = |extra: &[Vec<u8>]| {
                Span::from_vectors(
                    inter.ambient(),
                    inter.rows().iter().chain(extra).map(|r| r.as_slice()),
                    &self.f,
                )
            };
            (mk(&ys[..need]), mk(&zs[..need]))
        };
        let u = self.bridge(v, w, &pi, &tau)?;
        Ok(vec![v.clone(), u, w.clone()])
    }
}

/// Builds a walk between vertices `v` and `w` of a generalized Grassmann
/// graph with `n >= 2k` whose length equals the closed-form distance.
///
/// Far pairs are first brought within intersection dimension `2s - k` by
/// trading `k - s` basis vectors of `v` for basis vectors of `w` at a time;
/// the last two steps go through a common neighbor meeting both ends in an
/// `s`-space.
pub fn build_distance_walk(g: &Graph, v: usize, w: usize) -> Result<WalkCertificate> {
    let (n, k, q, s_set) = match g.spec() {
        Some(FamilySpec::GeneralizedGrassmann { n, k, q, s }) => (*n, *k, *q, s),
        _ => {
            return Err(Error::Invalid(
                "walk certificates need a generalized Grassmann graph".into(),
            ))
        }
    };
    let spec = g.spec().unwrap();
    if n < 2 * k {
        return Err(Error::Hypothesis(format!("n >= 2k fails: {n} < {}", 2 * k)));
    }
    if v >= g.v_count() || w >= g.v_count() {
        return Err(Error::Invalid("vertex out of range".into()));
    }
    let caps = Caps {
        field_order: q as u64,
        ..Caps::default()
    };
    let f = FieldTable::with_modulus(q as u64, None, &caps)?;
    let mut index = HashMap::new();
    for (i, l) in g.labels().iter().enumerate() {
        if let VertexLabel::Subspace(sp) = l {
            index.insert(sp, i);
        }
    }
    let ctx = Ctx {
        g,
        f,
        k,
        s: s_set.min(),
        index,
    };
    let sub = |i: usize| match g.label(i) {
        VertexLabel::Subspace(sp) => Ok(sp.clone()),
        _ => Err(Error::Invalid("vertex is not labelled by a subspace".into())),
    };
    let (vs, ws) = (sub(v)?, sub(w)?);
    let inter = vs.intersection(&ws, &ctx.f)?;
    let t = inter.dim();
    let claimed = super::grassmann_distance_formula(spec, t)?;
    let s = ctx.s;

    let mut walk = vec![vs.clone()];
    let mut from = vs.clone();
    if t < s && k + t < 2 * s {
        let ys = ctx.complete_basis(&inter, &vs);
        let zs = ctx.complete_basis(&inter, &ws);
        let step = k - s;
        for i in 1..=claimed - 2 {
            let cut = i * step;
            let gens = inter
                .rows()
                .iter()
                .chain(&ys[cut..])
                .chain(&zs[..cut])
                .map(|r| r.as_slice());
            let u = ctx.rep(Span::from_vectors(n, gens, &ctx.f));
            walk.push(u.clone());
            from = u;
        }
    }
    walk.extend(ctx.short_walk(&from, &ws)?.into_iter().skip(1));
    let vertices = walk.iter().map(|sp| ctx.id(sp)).collect::<Result<Vec<_>>>()?;
    Ok(WalkCertificate {
        vertices,
        claimed_length: claimed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::intersection_dim;
    use crate::graphs::build;
    use crate::metrics::bfs_distances;

    fn check_all_pairs(spec: &FamilySpec) {
        let g = build(spec, &Caps::default()).unwrap();
        for v in 0..g.v_count() {
            let d = bfs_distances(&g, v);
            for w in 0..g.v_count() {
                let cert = build_distance_walk(&g, v, w).unwrap();
                assert!(cert.validate(&g), "{spec}: {v} -> {w}: {cert:?}");
                assert_eq!(Some(cert.claimed_length), d[w], "{spec}: {v} -> {w}");
            }
        }
    }

    #[test]
    fn walks_realize_bfs_distance() {
        check_all_pairs(&FamilySpec::grassmann(4, 2, 2, &[1]));
        check_all_pairs(&FamilySpec::grassmann(4, 2, 2, &[0]));
        check_all_pairs(&FamilySpec::grassmann(4, 2, 3, &[1]));
    }

    #[test]
    fn three_step_walk() {
        let spec = FamilySpec::grassmann(6, 3, 2, &[2]);
        let g = build(&spec, &Caps::default()).unwrap();
        let f = FieldTable::new(2).unwrap();
        let a = SubspaceRep::coordinate(6, &[0, 1, 2], &f);
        let b = SubspaceRep::coordinate(6, &[3, 4, 5], &f);
        let ia = g.vertex_of(&VertexLabel::Subspace(a.clone())).unwrap();
        let ib = g.vertex_of(&VertexLabel::Subspace(b.clone())).unwrap();
        assert_eq!(intersection_dim(&a, &b, &f).unwrap(), 0);
        let cert = build_distance_walk(&g, ia, ib).unwrap();
        assert_eq!(cert.claimed_length, 3);
        assert!(cert.validate(&g));
        assert_eq!(bfs_distances(&g, ia)[ib], Some(3));
        let trivial = build_distance_walk(&g, ia, ia).unwrap();
        assert_eq!(trivial.vertices, vec![ia]);
        assert_eq!(trivial.claimed_length, 0);
    }

    #[test]
    fn rejects_small_ambient_space() {
        let g = build(&FamilySpec::grassmann(5, 3, 2, &[1]), &Caps::default()).unwrap();
        assert!(matches!(build_distance_walk(&g, 0, 1), Err(Error::Hypothesis(_))));
    }
}
