//! Distances, diameter and girth by breadth-first search, plus the closed
//! forms for generalized Grassmann graphs that the searches are checked
//! against.

mod walk;

pub use walk::{build_distance_walk, WalkCertificate};

use crate::graphs::{FamilySpec, Graph};
use crate::error::{Error, Result};
use rayon::prelude::*;
use std::collections::VecDeque;

/// BFS layer of every vertex from `source`; `None` when unreachable.
pub fn bfs_distances(g: &Graph, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.v_count()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap() + 1;
        for v in g.neighbors(u).iter() {
            if dist[v].is_none() {
                dist[v] = Some(d);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Eccentricity of `source`, `None` if some vertex is unreachable.
fn eccentricity(g: &Graph, source: usize) -> Option<usize> {
    bfs_distances(g, source)
        .into_iter()
        .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
}

/// `None` stands for infinite diameter (disconnected graph).
pub fn diameter(g: &Graph) -> Option<usize> {
    if g.v_count() == 0 {
        return Some(0);
    }
    (0..g.v_count())
        .into_par_iter()
        .map(|v| eccentricity(g, v))
        .try_reduce(|| 0, |a, b| Some(a.max(b)))
}

/// Shortest cycle through a non-tree edge found by BFS from `root`.
/// The minimum over all roots is the girth.
fn shortest_cycle_from(g: &Graph, root: usize, best: usize) -> Option<usize> {
    let n = g.v_count();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    dist[root] = 0;
    let mut queue = VecDeque::from([root]);
    let mut found: Option<usize> = None;
    while let Some(u) = queue.pop_front() {
        // every cycle found beyond this layer is at least 2 * dist[u] + 1 long
        if 2 * dist[u] + 1 >= found.unwrap_or(best) {
            break;
        }
        for v in g.neighbors(u).iter() {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                parent[v] = u;
                queue.push_back(v);
            } else if parent[u] != v {
                let len = dist[u] + dist[v] + 1;
                found = Some(found.map_or(len, |f| f.min(len)));
            }
        }
    }
    found
}

/// `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    // sequential outer loop so the triangle early exit fires immediately
    for chunk in (0..g.v_count()).collect::<Vec<_>>().chunks(64) {
        let cur = best.unwrap_or(usize::MAX);
        let m = chunk
            .par_iter()
            .filter_map(|&r| shortest_cycle_from(g, r, cur))
            .min();
        if let Some(m) = m {
            best = Some(best.map_or(m, |b| b.min(m)));
        }
        if best == Some(3) {
            break;
        }
    }
    best
}

fn grassmann_params(spec: &FamilySpec) -> Result<(usize, usize, &crate::graphs::IntersectionSet)> {
    match spec {
        FamilySpec::GeneralizedGrassmann { n, k, s, .. } => Ok((*n, *k, s)),
        _ => Err(Error::Invalid(format!("{spec} is not a generalized Grassmann graph"))),
    }
}

fn check_proper(k: usize, s: &crate::graphs::IntersectionSet) -> Result<()> {
    if s.is_empty() || s.values().len() == k {
        return Err(Error::Hypothesis(format!(
            "S = {s} must be a nonempty proper subset of {{0..{}}}",
            k - 1
        )));
    }
    Ok(())
}

/// Distance between two vertices meeting in a `t_int`-space, for
/// `n >= 2k` and proper `S`: `ceil((k - t)/(k - s))` below `s = min S`,
/// `1` on `S`, `2` otherwise, `0` for `t = k`.
pub fn grassmann_distance_formula(spec: &FamilySpec, t_int: usize) -> Result<usize> {
    let (n, k, s_set) = grassmann_params(spec)?;
    check_proper(k, s_set)?;
    if n < 2 * k {
        return Err(Error::Hypothesis(format!("n >= 2k fails: {n} < {}", 2 * k)));
    }
    if t_int > k {
        return Err(Error::Invalid(format!("intersection dimension {t_int} > k = {k}")));
    }
    let s = s_set.min();
    Ok(if t_int == k {
        0
    } else if t_int < s {
        (k - t_int).div_ceil(k - s)
    } else if s_set.contains(t_int) {
        1
    } else {
        2
    })
}

/// Closed-form diameter for proper `S` with `n >= 2k - max S`:
/// `2` when `s` is `0` or `2k - n`, else `ceil(min(k, n - k)/(k - s))`.
pub fn grassmann_diameter_formula(spec: &FamilySpec) -> Result<usize> {
    let (n, k, s_set) = grassmann_params(spec)?;
    check_proper(k, s_set)?;
    let t = s_set.max();
    if n + t < 2 * k {
        return Err(Error::Hypothesis(format!(
            "n >= 2k - max(S) fails: {n} < {}",
            2 * k - t
        )));
    }
    let s = s_set.min();
    if s == 0 || n + s == 2 * k {
        return Ok(2);
    }
    Ok(k.min(n - k).div_ceil(k - s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Caps;
    use crate::graphs::build;

    #[test]
    fn small_distances() {
        let c4 = Graph::cycle(4);
        let d = bfs_distances(&c4, 0);
        assert_eq!(d, vec![Some(0), Some(1), Some(2), Some(1)]);
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(bfs_distances(&two, 0)[2], None);
        assert_eq!(diameter(&two), None);
        assert_eq!(diameter(&Graph::complete(6)), Some(1));
        assert_eq!(diameter(&Graph::empty(1)), Some(0));
    }

    #[test]
    fn petersen_metrics() {
        let p = build(&FamilySpec::johnson(5, 2, &[0]), &Caps::default()).unwrap();
        assert_eq!(diameter(&p), Some(2));
        assert_eq!(girth(&p), Some(5));
        for u in 0..10 {
            let d = bfs_distances(&p, u);
            for v in 0..10 {
                if u != v && !p.is_adjacent(u, v) {
                    assert_eq!(d[v], Some(2));
                }
            }
        }
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&Graph::complete(3)), Some(3));
        assert_eq!(girth(&Graph::cycle(4)), Some(4));
        assert_eq!(girth(&Graph::cycle(7)), Some(7));
        assert_eq!(girth(&Graph::path(5)), None);
        let q3 = build(&FamilySpec::hamming(3, 2), &Caps::default()).unwrap();
        assert_eq!(girth(&q3), Some(4));
        assert_eq!(diameter(&q3), Some(3));
    }

    /// Shortest cycle through edge `uv` is `1 + dist(u, v)` in `G - uv`.
    fn girth_oracle(g: &Graph) -> Option<usize> {
        let edges: Vec<_> = g.edges().collect();
        edges
            .iter()
            .filter_map(|&(u, v)| {
                let rest: Vec<_> = edges.iter().copied().filter(|&e| e != (u, v)).collect();
                let h = Graph::from_edges(g.v_count(), &rest).unwrap();
                bfs_distances(&h, u)[v].map(|d| d + 1)
            })
            .min()
    }

    #[test]
    fn girth_matches_edge_removal_oracle() {
        let caps = Caps::default();
        for spec in [
            FamilySpec::johnson(5, 2, &[0]),
            FamilySpec::johnson(6, 3, &[0]),
            FamilySpec::johnson(5, 2, &[1]),
            FamilySpec::hamming(2, 3),
            FamilySpec::grassmann(3, 1, 2, &[0]),
        ] {
            let g = build(&spec, &caps).unwrap();
            assert_eq!(girth(&g), girth_oracle(&g), "{spec}");
        }
        let prism = crate::graphs::cartesian_product(&Graph::complete(2), &Graph::cycle(5), &caps)
            .unwrap();
        assert_eq!(girth(&prism), girth_oracle(&prism));
    }

    #[test]
    fn distance_formula_values() {
        let s2 = FamilySpec::grassmann(6, 3, 2, &[2]);
        assert_eq!(grassmann_distance_formula(&s2, 0).unwrap(), 3);
        assert_eq!(grassmann_distance_formula(&s2, 2).unwrap(), 1);
        assert_eq!(grassmann_distance_formula(&s2, 3).unwrap(), 0);
        let s1 = FamilySpec::grassmann(6, 3, 2, &[1]);
        assert_eq!(grassmann_distance_formula(&s1, 2).unwrap(), 2);
        assert!(grassmann_distance_formula(&s1, 4).is_err());
        let small = FamilySpec::grassmann(5, 3, 2, &[1]);
        assert!(matches!(grassmann_distance_formula(&small, 0), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn diameter_formula_values() {
        assert_eq!(grassmann_diameter_formula(&FamilySpec::grassmann(4, 2, 2, &[1])).unwrap(), 2);
        assert_eq!(grassmann_diameter_formula(&FamilySpec::grassmann(6, 3, 2, &[2])).unwrap(), 3);
        assert_eq!(grassmann_diameter_formula(&FamilySpec::grassmann(6, 3, 2, &[1])).unwrap(), 2);
        assert_eq!(grassmann_diameter_formula(&FamilySpec::grassmann(5, 3, 2, &[1])).unwrap(), 2);
        assert_eq!(grassmann_diameter_formula(&FamilySpec::grassmann(7, 3, 3, &[0])).unwrap(), 2);
        assert!(grassmann_diameter_formula(&FamilySpec::grassmann(4, 2, 2, &[0, 1])).is_err());
        assert!(grassmann_diameter_formula(&FamilySpec::grassmann(4, 3, 2, &[1])).is_err());
    }

    #[test]
    fn bfs_confirms_small_diameters() {
        let caps = Caps::default();
        let g = build(&FamilySpec::grassmann(4, 2, 2, &[1]), &caps).unwrap();
        assert_eq!(diameter(&g), Some(2));
        let g = build(&FamilySpec::grassmann(5, 3, 2, &[1]), &caps).unwrap();
        assert_eq!(g.v_count(), 155);
        assert_eq!(diameter(&g), Some(2));
        let g = build(&FamilySpec::grassmann(6, 3, 2, &[1]), &caps).unwrap();
        assert_eq!(diameter(&g), Some(2));
        assert_eq!(girth(&g), Some(3));
    }
}
