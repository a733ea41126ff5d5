//! Exact zero forcing numbers by exhaustive search.
//!
//! The search runs over white sets rather than leader sets. If `V \ W` is a
//! zero forcing set then so is `V \ W'` for every `W' ⊆ W` (closure is
//! monotone), so the forceable white sets form a down-set. A depth-first
//! walk in increasing vertex order visits exactly the forceable sets,
//! carries along the candidates that are still individually addable, and
//! cuts a branch as soon as the candidate count cannot beat the best size
//! seen. `Z = |V| - max |W|`.
//!
//! The reported certificate is the lexicographically least maximum white
//! set (as a sorted id list); this does not depend on the worker count.

use super::mask::{bits, Mask, MaskGraph};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graphs::Graph;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SearchOptions {
    /// A known lower bound on `Z`; the search stops once it is met.
    pub lower_hint: Option<usize>,
    /// A known upper bound on `Z`, reported if the search is cut short.
    pub upper_hint: Option<usize>,
    /// Worker threads; `0` uses the global pool.
    pub workers: usize,
    pub max_seconds: Option<f64>,
    /// Graphs with more vertices get bounds only.
    pub vertex_cap: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            lower_hint: None,
            upper_hint: None,
            workers: 0,
            max_seconds: None,
            vertex_cap: crate::config::Caps::default().search_vertices,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZfSearchResult {
    pub lower: usize,
    pub upper: usize,
    /// Leader set of size `upper`, when one is known.
    pub certificate: Option<VertexSet>,
    /// `lower == upper` established by a complete search (or a matching hint).
    pub exact: bool,
    /// Why the search stopped early, if it did.
    pub cutoff: Option<String>,
    pub closures: u64,
}

impl ZfSearchResult {
    pub fn value(&self) -> Option<usize> {
        self.exact.then_some(self.upper)
    }
}

fn run_in_pool<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    if workers == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Invalid(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

struct Shared {
    best: AtomicUsize,
    /// Smallest first vertex of a white set that hit the target size.
    target_root: AtomicUsize,
    abort: AtomicBool,
    closures: AtomicU64,
    deadline: Option<Instant>,
    target: usize,
}

struct Worker<'a, M> {
    mg: &'a MaskGraph<M>,
    shared: &'a Shared,
    root: usize,
    best: (usize, M),
    closures: u64,
}

impl<M: Mask> Worker<'_, M> {
    fn tick(&mut self) -> bool {
        self.closures += 1;
        if self.closures.is_multiple_of(1024) {
            if self.shared.abort.load(Ordering::Relaxed) {
                return false;
            }
            if self.shared.deadline.is_some_and(|d| Instant::now() >= d) {
                self.shared.abort.store(true, Ordering::Relaxed);
                return false;
            }
            if self.shared.target_root.load(Ordering::Relaxed) < self.root {
                return false;
            }
        }
        true
    }

    fn record(&mut self, size: usize, w: M) {
        if size > self.best.0 {
            self.best = (size, w);
            self.shared.best.fetch_max(size, Ordering::Relaxed);
            if size >= self.shared.target {
                self.shared.target_root.fetch_min(self.root, Ordering::Relaxed);
            }
        }
    }

    /// Returns false to stop the whole walk.
    fn dfs(&mut self, w: M, size: usize, cands: M) -> bool {
        let mut viable = M::ZERO;
        for v in bits(cands) {
            if !self.tick() {
                return false;
            }
            if self.mg.white_is_forceable(w | M::bit(v)) {
                viable = viable | M::bit(v);
            }
        }
        let mut rest = viable;
        while !rest.is_zero() {
            let reach = size + rest.ones() as usize;
            if reach <= self.best.0 || reach < self.shared.best.load(Ordering::Relaxed) {
                return true;
            }
            let v = rest.lowest();
            rest = rest ^ M::bit(v);
            let child = w | M::bit(v);
            self.record(size + 1, child);
            if self.best.0 >= self.shared.target {
                return false;
            }
            if !self.dfs(child, size + 1, rest) {
                return false;
            }
        }
        true
    }
}

/// Largest forceable white set, or the best found before the deadline.
/// Returns `(size, set, completed)`.
fn max_white<M: Mask>(mg: &MaskGraph<M>, target: usize, deadline: Option<Instant>) -> (usize, M, bool, u64) {
    let n = mg.len();
    let shared = Shared {
        best: AtomicUsize::new(0),
        target_root: AtomicUsize::new(usize::MAX),
        abort: AtomicBool::new(false),
        closures: AtomicU64::new(0),
        deadline,
        target,
    };
    if target == 0 || n == 0 {
        return (0, M::ZERO, true, 0);
    }
    let results: Vec<(usize, M)> = (0..n)
        .into_par_iter()
        .map(|root| {
            let mut wk = Worker {
                mg,
                shared: &shared,
                root,
                best: (0, M::ZERO),
                closures: 0,
            };
            let w = M::bit(root);
            wk.closures += 1;
            if mg.white_is_forceable(w) {
                wk.record(1, w);
                if wk.best.0 < target {
                    let later = mg.full & !M::low(root + 1);
                    wk.dfs(w, 1, later);
                }
            }
            shared.closures.fetch_add(wk.closures, Ordering::Relaxed);
            wk.best
        })
        .collect();
    let completed = !shared.abort.load(Ordering::Relaxed);
    // first root with the largest size carries the lexicographically least set
    let (size, set) = results
        .into_iter()
        .fold((0, M::ZERO), |acc, r| if r.0 > acc.0 { r } else { acc });
    (size, set, completed, shared.closures.load(Ordering::Relaxed))
}

fn bounds_only(g: &Graph, opts: &SearchOptions, reason: String) -> ZfSearchResult {
    let n = g.v_count();
    let min_deg = g.degrees().into_iter().min().unwrap_or(0);
    let lower = opts.lower_hint.unwrap_or(0).max(min_deg);
    let upper = opts.upper_hint.unwrap_or(n).min(n);
    ZfSearchResult {
        lower,
        upper,
        certificate: (upper == n).then(|| VertexSet::full(n)),
        exact: lower == upper,
        cutoff: Some(reason),
        closures: 0,
    }
}

fn exact_with<M: Mask>(g: &Graph, mg: &MaskGraph<M>, opts: &SearchOptions) -> Result<ZfSearchResult> {
    let n = mg.len();
    let min_deg = mg.min_degree();
    // Z >= min degree: the first pivot has all but one neighbor black
    let lower0 = opts.lower_hint.unwrap_or(0).max(min_deg).min(n);
    let target = n - lower0;
    let deadline = opts
        .max_seconds
        .map(|s| Instant::now() + Duration::from_secs_f64(s.max(0.0)));
    let (size, white, completed, closures) =
        run_in_pool(opts.workers, || max_white(mg, target, deadline))?;
    let upper = n - size;
    let certificate = mg.to_set(mg.full & !white);
    debug_assert!(super::is_zero_forcing(g, &certificate));
    let lower = if completed { upper } else { lower0 };
    let (upper, certificate) = match opts.upper_hint {
        Some(h) if !completed && h < upper => (h, None),
        _ => (upper, Some(certificate)),
    };
    Ok(ZfSearchResult {
        lower,
        upper,
        certificate,
        exact: lower == upper,
        cutoff: (!completed).then(|| "time limit reached".to_string()),
        closures,
    })
}

/// Zero forcing number by exhaustive search; graphs above the vertex cap or
/// runs past the time limit come back as bounds only.
pub fn zero_forcing_number_exact(g: &Graph, opts: &SearchOptions) -> Result<ZfSearchResult> {
    let n = g.v_count();
    if n > opts.vertex_cap {
        return Ok(bounds_only(
            g,
            opts,
            format!("{n} vertices exceed the search cap {}", opts.vertex_cap),
        ));
    }
    if let Some(mg) = MaskGraph::<u64>::new(g) {
        exact_with(g, &mg, opts)
    } else if let Some(mg) = MaskGraph::<u128>::new(g) {
        exact_with(g, &mg, opts)
    } else {
        Ok(bounds_only(g, opts, format!("{n} vertices exceed the 128-vertex search kernel")))
    }
}

/// Outcome of a plain enumeration of every white set of one size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationReport {
    pub white_size: usize,
    pub examined: u64,
    pub forceable: u64,
    /// Lexicographically least forceable white set, if any.
    pub first: Option<VertexSet>,
}

fn enumerate_rec<M: Mask>(
    mg: &MaskGraph<M>,
    w: M,
    next: usize,
    left: usize,
    acc: &mut (u64, u64, Option<M>),
) {
    if left == 0 {
        acc.0 += 1;
        if mg.white_is_forceable(w) {
            acc.1 += 1;
            if acc.2.is_none() {
                acc.2 = Some(w);
            }
        }
        return;
    }
    for v in next..=mg.len() - left {
        enumerate_rec(mg, w | M::bit(v), v + 1, left - 1, acc);
    }
}

fn enumerate_with<M: Mask>(mg: &MaskGraph<M>, size: usize) -> EnumerationReport {
    let n = mg.len();
    let parts: Vec<(u64, u64, Option<M>)> = if size == 0 {
        let mut acc = (0, 0, None);
        enumerate_rec(mg, M::ZERO, 0, 0, &mut acc);
        vec![acc]
    } else {
        (0..=n.saturating_sub(size))
            .into_par_iter()
            .map(|first| {
                let mut acc = (0, 0, None);
                enumerate_rec(mg, M::bit(first), first + 1, size - 1, &mut acc);
                acc
            })
            .collect()
    };
    let first = parts.iter().find_map(|p| p.2).map(|m| mg.to_set(m));
    EnumerationReport {
        white_size: size,
        examined: parts.iter().map(|p| p.0).sum(),
        forceable: parts.iter().map(|p| p.1).sum(),
        first,
    }
}

/// Tests every white set of the given size, without pruning.
pub fn enumerate_white_sets(g: &Graph, size: usize) -> Result<EnumerationReport> {
    if size > g.v_count() {
        return Err(Error::Invalid(format!("white set size {size} > {}", g.v_count())));
    }
    if let Some(mg) = MaskGraph::<u64>::new(g) {
        Ok(enumerate_with(&mg, size))
    } else if let Some(mg) = MaskGraph::<u128>::new(g) {
        Ok(enumerate_with(&mg, size))
    } else {
        Err(Error::CapExceeded(format!(
            "{} vertices exceed the 128-vertex search kernel",
            g.v_count()
        )))
    }
}

/// Visits forceable white sets of exactly `size` in lexicographic order until
/// `f` returns true; returns the accepted set.
pub(crate) fn find_forceable_white<M: Mask>(
    mg: &MaskGraph<M>,
    size: usize,
    f: &mut impl FnMut(M) -> bool,
) -> Option<M> {
    fn rec<M: Mask>(
        mg: &MaskGraph<M>,
        w: M,
        have: usize,
        size: usize,
        cands: M,
        f: &mut impl FnMut(M) -> bool,
    ) -> Option<M> {
        if have == size {
            return f(w).then_some(w);
        }
        let viable = bits(cands)
            .filter(|&v| mg.white_is_forceable(w | M::bit(v)))
            .fold(M::ZERO, |m, v| m | M::bit(v));
        let mut rest = viable;
        while have + (rest.ones() as usize) >= size && !rest.is_zero() {
            let v = rest.lowest();
            rest = rest ^ M::bit(v);
            if let Some(found) = rec(mg, w | M::bit(v), have + 1, size, rest, f) {
                return Some(found);
            }
        }
        None
    }
    rec(mg, M::ZERO, 0, size, mg.full, f)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HeuristicResult {
    /// Leader set found.
    pub leader: VertexSet,
    pub rounds: u64,
    pub reached_target: bool,
}

/// Randomized search for a large forceable white set: greedy growth in a
/// random order, then repeated removal of a few members and regrowth,
/// keeping changes that do not shrink the set.
pub fn heuristic_white_search(
    g: &Graph,
    target_white: usize,
    seed: u64,
    max_seconds: f64,
) -> Result<HeuristicResult> {
    let mg = MaskGraph::<u128>::new(g).ok_or_else(|| {
        Error::CapExceeded(format!("{} vertices exceed the 128-vertex search kernel", g.v_count()))
    })?;
    let n = mg.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let deadline = Instant::now() + Duration::from_secs_f64(max_seconds.max(0.0));
    let mut order: Vec<usize> = (0..n).collect();
    let grow = |w: &mut u128, order: &[usize]| {
        for &v in order {
            if !w.has(v) && mg.white_is_forceable(*w | u128::bit(v)) {
                *w |= u128::bit(v);
            }
        }
    };
    let mut best = 0u128;
    let mut current = 0u128;
    order.shuffle(&mut rng);
    grow(&mut current, &order);
    let mut rounds = 0;
    while Instant::now() < deadline {
        rounds += 1;
        if current.ones() > best.ones() {
            best = current;
        }
        if best.ones() as usize >= target_white {
            break;
        }
        let mut trial = current;
        let members: Vec<usize> = bits(trial).collect();
        let drop = rng.random_range(1..=3.min(members.len().max(1)));
        for &v in members.choose_multiple(&mut rng, drop) {
            trial &= !u128::bit(v);
        }
        order.shuffle(&mut rng);
        grow(&mut trial, &order);
        if trial.ones() >= current.ones() {
            current = trial;
        }
        if rounds % 5000 == 0 {
            // restart from scratch now and then
            current = 0;
            order.shuffle(&mut rng);
            grow(&mut current, &order);
        }
    }
    if current.ones() > best.ones() {
        best = current;
    }
    Ok(HeuristicResult {
        leader: mg.to_set(mg.full & !best),
        rounds,
        reached_target: best.ones() as usize >= target_white,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Caps;
    use crate::graphs::{build, FamilySpec};

    fn z(g: &Graph) -> usize {
        let r = zero_forcing_number_exact(g, &SearchOptions::default()).unwrap();
        assert!(r.exact);
        assert!(super::super::is_zero_forcing(g, r.certificate.as_ref().unwrap()));
        r.upper
    }

    /// Smallest leader size by trying every subset.
    fn z_brute(g: &Graph) -> usize {
        let n = g.v_count();
        (0u32..1 << n)
            .filter(|m| {
                super::super::is_zero_forcing(g, &VertexSet::from_ids(n, (0..n).filter(|i| m >> i & 1 == 1)))
            })
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn known_values() {
        for m in 1..8 {
            assert_eq!(z(&Graph::path(m)), 1);
        }
        assert_eq!(z(&Graph::cycle(4)), 2);
        assert_eq!(z(&Graph::complete(5)), 4);
        assert_eq!(z(&Graph::empty(3)), 3);
        let caps = Caps::default();
        assert_eq!(z(&build(&FamilySpec::johnson(4, 2, &[1]), &caps).unwrap()), 4);
        assert_eq!(z(&build(&FamilySpec::hamming(2, 2), &caps).unwrap()), 2);
        assert_eq!(z(&build(&FamilySpec::hamming(2, 3), &caps).unwrap()), 5);
    }

    #[test]
    fn matches_subset_brute_force() {
        let caps = Caps::default();
        for spec in [
            FamilySpec::johnson(5, 2, &[0]),
            FamilySpec::johnson(5, 2, &[1]),
            FamilySpec::hamming(3, 2),
            FamilySpec::grassmann(3, 1, 2, &[0]),
        ] {
            let g = build(&spec, &caps).unwrap();
            assert_eq!(z(&g), z_brute(&g), "{spec}");
        }
        let prism = crate::graphs::cartesian_product(&Graph::path(3), &Graph::cycle(4), &caps).unwrap();
        assert_eq!(z(&prism), z_brute(&prism));
    }

    #[test]
    fn certificate_independent_of_workers() {
        let g = build(&FamilySpec::johnson(5, 2, &[0]), &Caps::default()).unwrap();
        let runs: Vec<_> = [1, 2, 4]
            .iter()
            .map(|&workers| {
                zero_forcing_number_exact(&g, &SearchOptions { workers, ..Default::default() }).unwrap()
            })
            .collect();
        for r in &runs[1..] {
            assert_eq!(r.upper, runs[0].upper);
            assert_eq!(r.certificate, runs[0].certificate);
        }
        // lexicographically least maximum white set = least sorted id list
        let white = runs[0].certificate.as_ref().unwrap().complement();
        let e = enumerate_white_sets(&g, white.count()).unwrap();
        assert_eq!(e.first.unwrap(), white);
    }

    #[test]
    fn caps_give_bounds_only() {
        let g = Graph::cycle(12);
        let r = zero_forcing_number_exact(
            &g,
            &SearchOptions { vertex_cap: 10, upper_hint: Some(2), ..Default::default() },
        )
        .unwrap();
        assert_eq!((r.lower, r.upper, r.exact), (2, 2, true));
        assert!(r.cutoff.is_some());
        let r = zero_forcing_number_exact(&g, &SearchOptions { vertex_cap: 10, ..Default::default() }).unwrap();
        assert!(!r.exact && r.lower == 2 && r.upper == 12);
    }

    #[test]
    fn enumeration_counts() {
        let c4 = Graph::cycle(4);
        let e = enumerate_white_sets(&c4, 2).unwrap();
        assert_eq!(e.examined, 6);
        // adjacent white pairs are forceable, antipodal pairs are not
        assert_eq!(e.forceable, 4);
        assert_eq!(e.first.unwrap().to_vec(), vec![0, 1]);
    }

    #[test]
    fn heuristic_finds_small_optimum() {
        let g = build(&FamilySpec::hamming(2, 3), &Caps::default()).unwrap();
        let r = heuristic_white_search(&g, 4, 7, 5.0).unwrap();
        assert!(r.reached_target);
        assert_eq!(r.leader.count(), 5);
        assert!(super::super::is_zero_forcing(&g, &r.leader));
    }
}
