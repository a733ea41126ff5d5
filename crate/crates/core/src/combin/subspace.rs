use super::{checked_pow, enumerate_k_subsets, gaussian_binomial, FieldTable};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Decodes the `idx`-th vector of `GF(q)^n`; the first coordinate is the most
/// significant base-`q` digit, so integer order is lexicographic order.
pub(crate) fn vector_from_index(mut idx: u64, n: usize, q: usize) -> Vec<u8> {
    let mut v = vec![0u8; n];
    for c in v.iter_mut().rev() {
        *c = (idx % q as u64) as u8;
        idx /= q as u64;
    }
    v
}

/// A subspace held as the nonzero rows of its reduced row echelon form.
///
/// Insertion keeps the rows canonical, so two spans are equal exactly when
/// they describe the same subspace.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Span {
    n: usize,
    rows: Vec<Vec<u8>>,
    pivots: Vec<usize>,
}

impl Span {
    pub fn new(n: usize) -> Self {
        Span {
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_vectors<'a, I>(n: usize, vectors: I, f: &FieldTable) -> Self
    where
        I: IntoIterator<Item = &'a [u8]>,
    {
        let mut s = Span::new(n);
        for v in vectors {
            s.insert(v, f);
        }
        s
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its projection onto the span along the pivot columns.
    pub fn reduce(&self, v: &[u8], f: &FieldTable) -> Vec<u8> {
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = out[p];
            if c != 0 {
                for (o, &r) in out.iter_mut().zip(row) {
                    *o = f.sub(*o, f.mul(c, r));
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[u8], f: &FieldTable) -> bool {
        self.reduce(v, f).iter().all(|&c| c == 0)
    }

    /// Adds `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: &[u8], f: &FieldTable) -> bool {
        assert_eq!(v.len(), self.n, "vector length does not match ambient dimension");
        let mut r = self.reduce(v, f);
        let Some(p) = r.iter().position(|&c| c != 0) else {
            return false;
        };
        let s = f.inv(r[p]);
        for c in r.iter_mut() {
            *c = f.mul(*c, s);
        }
        for row in self.rows.iter_mut() {
            let c = row[p];
            if c != 0 {
                for (x, &y) in row.iter_mut().zip(&r) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }

    pub fn union(&self, other: &Span, f: &FieldTable) -> Span {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r, f);
        }
        s
    }
}

/// Output of [`rref`]: the canonical form padded with zero rows to the input
/// shape, plus the rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub rows: Vec<Vec<u8>>,
    pub rank: usize,
}

/// Reduced row echelon form over `GF(q)`.
pub fn rref(mat: &[Vec<u8>], f: &FieldTable) -> Rref {
    let n = mat.first().map_or(0, |r| r.len());
    let span = Span::from_vectors(n, mat.iter().map(|r| r.as_slice()), f);
    let rank = span.dim();
    let mut rows = span.rows;
    rows.resize(mat.len(), vec![0; n]);
    Rref { rows, rank }
}

/// A `k`-subspace of `GF(q)^n` in canonical RREF.
///
/// Its vertex id is its position in [`enumerate_k_subspaces`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SubspaceRep {
    q: usize,
    n: usize,
    rows: Vec<Vec<u8>>,
}

impl SubspaceRep {
    pub fn from_span(span: Span, q: usize) -> Self {
        SubspaceRep {
            q,
            n: span.n,
            rows: span.rows,
        }
    }

    /// Span of arbitrary generators; the result is canonical.
    pub fn spanned_by(vectors: &[Vec<u8>], f: &FieldTable) -> Result<Self> {
        let n = vectors.first().map_or(0, |v| v.len());
        if vectors.iter().any(|v| v.len() != n) {
            return Err(Error::DimensionMismatch("generators of unequal length".into()));
        }
        if vectors.iter().flatten().any(|&c| c as usize >= f.order()) {
            return Err(Error::Invalid("entry outside the field".into()));
        }
        Ok(Self::from_span(
            Span::from_vectors(n, vectors.iter().map(|v| v.as_slice()), f),
            f.order(),
        ))
    }

    /// Span of the standard basis vectors `e_i`, `i` in `coords` (0-based).
    pub fn coordinate(n: usize, coords: &[usize], f: &FieldTable) -> Self {
        let vs: Vec<Vec<u8>> = coords
            .iter()
            .map(|&i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        Self::spanned_by(&vs, f).expect("coordinate vectors are valid")
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn field_order(&self) -> usize {
        self.q
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn to_span(&self) -> Span {
        let pivots = self
            .rows
            .iter()
            .map(|r| r.iter().position(|&c| c != 0).unwrap())
            .collect();
        Span {
            n: self.n,
            rows: self.rows.clone(),
            pivots,
        }
    }

    pub fn contains(&self, v: &[u8], f: &FieldTable) -> bool {
        self.to_span().contains(v, f)
    }

    fn check_compatible(&self, other: &SubspaceRep) -> Result<()> {
        if self.n != other.n || self.q != other.q {
            return Err(Error::DimensionMismatch(format!(
                "GF({})^{} vs GF({})^{}",
                self.q, self.n, other.q, other.n
            )));
        }
        Ok(())
    }

    /// `U ∩ W` by the Zassenhaus method: row reduce `[u | u ; w | 0]`; rows
    /// whose left half vanishes carry a basis of the intersection.
    pub fn intersection(&self, other: &SubspaceRep, f: &FieldTable) -> Result<SubspaceRep> {
        self.check_compatible(other)?;
        let n = self.n;
        let mut big = Span::new(2 * n);
        for r in &self.rows {
            let mut v = r.clone();
            v.extend_from_slice(r);
            big.insert(&v, f);
        }
        for r in &other.rows {
            let mut v = r.clone();
            v.extend(std::iter::repeat_n(0, n));
            big.insert(&v, f);
        }
        let rows: Vec<Vec<u8>> = big
            .rows
            .iter()
            .zip(&big.pivots)
            .filter(|(_, &p)| p >= n)
            .map(|(r, _)| r[n..].to_vec())
            .collect();
        SubspaceRep::spanned_by(&rows, f).map(|mut s| {
            s.n = n;
            s
        })
    }

    /// Human-readable rows, e.g. `[[1,0,1],[0,1,1]]`.
    pub fn label(&self) -> String {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let cs: Vec<String> = r.iter().map(|c| c.to_string()).collect();
                format!("[{}]", cs.join(","))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }
}

impl fmt::Debug for SubspaceRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})^{}:{}", self.q, self.n, self.label())
    }
}

/// `dim(U + W)`, the rank of the stacked generator rows.
pub fn sum_dim(u: &SubspaceRep, w: &SubspaceRep, f: &FieldTable) -> Result<usize> {
    u.check_compatible(w)?;
    Ok(u.to_span().union(&w.to_span(), f).dim())
}

/// `dim(U ∩ W) = dim U + dim W - dim(U + W)`.
pub fn intersection_dim(u: &SubspaceRep, w: &SubspaceRep, f: &FieldTable) -> Result<usize> {
    let s = sum_dim(u, w, f)?;
    Ok(u.dim() + w.dim() - s)
}

/// All `k`-subspaces of `GF(q)^n`, sorted lexicographically by the
/// concatenation of their RREF rows.
pub fn enumerate_k_subspaces(
    n: usize,
    k: usize,
    f: &FieldTable,
    cap: u64,
) -> Result<Vec<SubspaceRep>> {
    if k > n {
        return Err(Error::Invalid(format!("k = {k} > n = {n}")));
    }
    let q = f.order();
    let count = gaussian_binomial(n as u64, k as u64, q as u64)?;
    if count > cap {
        return Err(Error::sizing("Gaussian binomial", count, cap));
    }
    let mut out = Vec::with_capacity(count as usize);
    for pivot_mask in enumerate_k_subsets(n, k, u64::MAX)? {
        let pivots: Vec<usize> = (0..n).filter(|i| pivot_mask >> i & 1 == 1).collect();
        // free positions: right of the row's pivot and not in a pivot column
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| {
                let pivots = &pivots;
                (p + 1..n).filter(move |c| !pivots.contains(c)).map(move |c| (r, c))
            })
            .collect();
        let combos = checked_pow(q as u64, free.len() as u32)?;
        for code in 0..combos {
            let vals = vector_from_index(code, free.len(), q);
            let mut rows = vec![vec![0u8; n]; k];
            for (r, &p) in pivots.iter().enumerate() {
                rows[r][p] = 1;
            }
            for (&(r, c), &v) in free.iter().zip(&vals) {
                rows[r][c] = v;
            }
            out.push(SubspaceRep { q, n, rows });
        }
    }
    out.sort_by(|a, b| a.rows.cmp(&b.rows));
    debug_assert_eq!(out.len() as u64, count);
    Ok(out)
}

/// Request for an `m`-space meeting each listed space trivially.
#[derive(Debug, Clone)]
pub struct AvoidanceRequest {
    pub n: usize,
    pub m: usize,
    pub spaces: Vec<SubspaceRep>,
}

/// Greedy extension of `base` by `m` further vectors so that the extension
/// meets every `base + S` trivially modulo `base`.
///
/// Candidates are scanned in integer order of their coordinate encoding; at
/// each step the first vector outside every `current + S` is taken. With an
/// empty `base` this is the basis construction for an `m`-space avoiding all
/// `S`. Returns `None` if the scan runs dry.
pub fn extend_avoiding(base: &Span, m: usize, avoid: &[Span], f: &FieldTable) -> Option<Span> {
    let n = base.ambient();
    let q = f.order();
    let total = (q as u64).checked_pow(n as u32)?;
    let mut current = base.clone();
    let mut blocked: Vec<Span> = avoid.iter().map(|s| s.union(base, f)).collect();
    let mut next = 1u64;
    for _ in 0..m {
        let mut found = None;
        while next < total {
            let v = vector_from_index(next, n, q);
            next += 1;
            let ok = if blocked.is_empty() {
                !current.contains(&v, f)
            } else {
                blocked.iter().all(|b| !b.contains(&v, f))
            };
            if ok {
                found = Some(v);
                break;
            }
        }
        let v = found?;
        current.insert(&v, f);
        for b in blocked.iter_mut() {
            b.insert(&v, f);
        }
        // vectors rejected earlier stay rejected: the blocked spans only grow
    }
    Some(current)
}

/// An `m`-space meeting each given `k`-space trivially, built vector by
/// vector. Requires `n >= k + m` and at most `q^(n-k-m+1)` input spaces.
pub fn find_avoiding_subspace(req: &AvoidanceRequest, f: &FieldTable) -> Result<SubspaceRep> {
    let q = f.order();
    let k = req.spaces.first().map_or(0, |s| s.dim());
    for s in &req.spaces {
        if s.dim() != k || s.ambient() != req.n || s.field_order() != q {
            return Err(Error::DimensionMismatch(
                "avoidance spaces must share dimension, ambient space and field".into(),
            ));
        }
    }
    if req.n < k + req.m {
        return Err(Error::Hypothesis(format!(
            "n >= k + m fails: {} < {} + {}",
            req.n, k, req.m
        )));
    }
    let bound = (q as u128).pow((req.n - k - req.m + 1) as u32);
    if req.spaces.len() as u128 > bound {
        return Err(Error::Hypothesis(format!(
            "a <= q^(n-k-m+1) fails: {} > {}",
            req.spaces.len(),
            bound
        )));
    }
    let avoid: Vec<Span> = req.spaces.iter().map(|s| s.to_span()).collect();
    let span = extend_avoiding(&Span::new(req.n), req.m, &avoid, f)
        .ok_or_else(|| Error::Invalid("greedy avoidance scan found no candidate".into()))?;
    Ok(SubspaceRep::from_span(span, q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> FieldTable {
        FieldTable::new(2).unwrap()
    }

    #[test]
    fn rref_examples() {
        let f = f2();
        let id = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        assert_eq!(rref(&id, &f), Rref { rows: id.clone(), rank: 3 });
        let z = vec![vec![0u8; 3]; 2];
        assert_eq!(rref(&z, &f), Rref { rows: z.clone(), rank: 0 });
        let m = vec![vec![1, 1, 0], vec![0, 1, 1]];
        let r = rref(&m, &f);
        assert_eq!(r.rows, vec![vec![1, 0, 1], vec![0, 1, 1]]);
        assert_eq!(r.rank, 2);
        assert_eq!(rref(&r.rows, &f), r);
    }

    #[test]
    fn rref_over_gf3() {
        let f = FieldTable::new(3).unwrap();
        // third row is row2 - row1
        let m = vec![vec![2, 1, 0], vec![1, 1, 1], vec![2, 0, 1]];
        let r = rref(&m, &f);
        assert_eq!(r.rank, 2);
        assert_eq!(r.rows, vec![vec![1, 0, 2], vec![0, 1, 2], vec![0, 0, 0]]);
        let full = rref(&[vec![2, 1, 0], vec![1, 1, 1], vec![0, 2, 2]], &f);
        assert_eq!(full.rank, 3);
    }

    #[test]
    fn intersection_examples() {
        let f = f2();
        let e12 = SubspaceRep::coordinate(4, &[0, 1], &f);
        let e34 = SubspaceRep::coordinate(4, &[2, 3], &f);
        let e23 = SubspaceRep::coordinate(4, &[1, 2], &f);
        assert_eq!(intersection_dim(&e12, &e12, &f).unwrap(), 2);
        assert_eq!(intersection_dim(&e12, &e34, &f).unwrap(), 0);
        assert_eq!(intersection_dim(&e12, &e23, &f).unwrap(), 1);
        assert_eq!(e12.intersection(&e23, &f).unwrap(), SubspaceRep::coordinate(4, &[1], &f));
        let other = SubspaceRep::coordinate(5, &[0], &f);
        assert!(intersection_dim(&e12, &other, &f).is_err());
    }

    /// Oracle: count common vectors by brute force, `|U ∩ W| = q^dim`.
    fn brute_intersection_dim(u: &SubspaceRep, w: &SubspaceRep, f: &FieldTable) -> usize {
        let (n, q) = (u.ambient(), f.order());
        let common = (0..(q as u64).pow(n as u32))
            .map(|i| vector_from_index(i, n, q))
            .filter(|v| u.contains(v, f) && w.contains(v, f))
            .count();
        (common as f64).log(q as f64).round() as usize
    }

    #[test]
    fn intersection_matches_brute_force() {
        for q in [2u64, 3] {
            let f = FieldTable::new(q).unwrap();
            let all = enumerate_k_subspaces(4, 2, &f, 1 << 20).unwrap();
            for u in all.iter().step_by(3) {
                for w in all.iter().step_by(5) {
                    let d = intersection_dim(u, w, &f).unwrap();
                    assert_eq!(d, brute_intersection_dim(u, w, &f));
                    assert_eq!(u.intersection(w, &f).unwrap().dim(), d);
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        let f = f2();
        let lines = enumerate_k_subspaces(2, 1, &f, 100).unwrap();
        let labels: Vec<_> = lines.iter().map(|s| s.label()).collect();
        assert_eq!(labels, vec!["[[0,1]]", "[[1,0]]", "[[1,1]]"]);
        assert_eq!(enumerate_k_subspaces(4, 2, &f, 100).unwrap().len(), 35);
        let f3 = FieldTable::new(3).unwrap();
        assert_eq!(enumerate_k_subspaces(3, 1, &f3, 100).unwrap().len(), 13);
        assert!(enumerate_k_subspaces(7, 3, &f, 100).is_err());
    }

    #[test]
    fn enumeration_is_exhaustive_for_gf2_4_2() {
        // Oracle: span every pair of nonzero vectors and deduplicate.
        let f = f2();
        let mut seen = std::collections::BTreeSet::new();
        for a in 1..16 {
            for b in 1..16 {
                let va = vector_from_index(a, 4, 2);
                let vb = vector_from_index(b, 4, 2);
                let s = SubspaceRep::spanned_by(&[va, vb], &f).unwrap();
                if s.dim() == 2 {
                    seen.insert(s);
                }
            }
        }
        let listed: std::collections::BTreeSet<_> =
            enumerate_k_subspaces(4, 2, &f, 100).unwrap().into_iter().collect();
        assert_eq!(seen, listed);
    }

    #[test]
    fn avoidance_examples() {
        let f = f2();
        let e12 = SubspaceRep::coordinate(4, &[0, 1], &f);
        let e34 = SubspaceRep::coordinate(4, &[2, 3], &f);
        let req = AvoidanceRequest {
            n: 4,
            m: 2,
            spaces: vec![e12.clone()],
        };
        let x = find_avoiding_subspace(&req, &f).unwrap();
        assert_eq!(x.dim(), 2);
        assert_eq!(intersection_dim(&x, &e12, &f).unwrap(), 0);

        let req = AvoidanceRequest {
            n: 4,
            m: 2,
            spaces: vec![e12.clone(), e34.clone()],
        };
        let x = find_avoiding_subspace(&req, &f).unwrap();
        assert_eq!(intersection_dim(&x, &e12, &f).unwrap(), 0);
        assert_eq!(intersection_dim(&x, &e34, &f).unwrap(), 0);
        // exhaustive oracle: common complements exist among the 35 planes
        let all = enumerate_k_subspaces(4, 2, &f, 100).unwrap();
        let complements = all
            .iter()
            .filter(|s| {
                intersection_dim(s, &e12, &f).unwrap() == 0
                    && intersection_dim(s, &e34, &f).unwrap() == 0
            })
            .count();
        assert!(complements > 0);

        let e1 = SubspaceRep::coordinate(2, &[0], &f);
        let req = AvoidanceRequest {
            n: 2,
            m: 1,
            spaces: vec![e1.clone()],
        };
        let x = find_avoiding_subspace(&req, &f).unwrap();
        assert_ne!(x, e1);
        assert_eq!(x.dim(), 1);
    }

    #[test]
    fn avoidance_hypotheses_enforced() {
        let f = f2();
        let planes = enumerate_k_subspaces(4, 2, &f, 100).unwrap();
        let req = AvoidanceRequest {
            n: 4,
            m: 2,
            spaces: planes[..3].to_vec(),
        };
        assert!(matches!(find_avoiding_subspace(&req, &f), Err(Error::Hypothesis(_))));
        let req = AvoidanceRequest {
            n: 4,
            m: 3,
            spaces: planes[..1].to_vec(),
        };
        assert!(matches!(find_avoiding_subspace(&req, &f), Err(Error::Hypothesis(_))));
    }
}
