//! Exact differential chromatic number by exhaustive search.
//!
//! The decision procedure hands out labels `1, 2, ..., n` in increasing order.
//! Label `t` may go to vertex `v` only if every already-labeled neighbor of
//! `v` has label `≤ t - d`; unlabeled neighbors will get larger labels later,
//! so they are checked when they are placed. Pruning:
//!
//! * a vertex with an unlabeled neighbor needs `t + d ≤ n`;
//! * every unlabeled vertex has an earliest admissible label, and the
//!   remaining labels must be able to host all of them (a deadline count);
//! * twins (vertices with identical neighborhoods) are interchangeable, so
//!   they receive labels in increasing id order;
//! * a labeling and its complement `n + 1 - c` have the same value, so vertex
//!   0's twin class must start at a label `≤ (n + 1) / 2`.
//!
//! Candidates are tried in increasing vertex id, which makes the first
//! witness found the lexicographically first one under these rules.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::bounds::upper_bound_report;
use crate::graph::{Graph, Vertex};
use crate::labeling::Labeling;

pub const DEFAULT_MAX_N: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, over the oracle limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("target {d} outside 1..={n}")]
    TargetOutOfRange { d: usize, n: usize },
    #[error("timed out after {nodes} nodes; dc is in {lo}..={hi}")]
    Timeout { lo: usize, hi: usize, nodes: u64 },
    #[error("oracle needs at least one vertex")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleConfig {
    /// Refuse graphs with more vertices than this.
    pub max_n: usize,
    pub timeout: Option<Duration>,
    /// Worker threads for the top-level branches; 1 runs inline.
    pub threads: usize,
    /// Start the descent at the best class-specific bound instead of `⌊n/2⌋`.
    /// Turn off when the class bounds themselves are under test.
    pub class_bounds: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_n: DEFAULT_MAX_N, timeout: None, threads: 1, class_bounds: true }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub dc: usize,
    pub witness: Labeling,
    pub stats: SearchStats,
}

/// Is there a labeling of value at least `d`? Default configuration.
pub fn decision_dc_at_least(g: &Graph, d: usize) -> Result<Option<Labeling>, OracleError> {
    Oracle::default().decide(g, d).map(|(w, _)| w)
}

/// Exact DC with the default configuration.
pub fn exact_dc(g: &Graph) -> Result<ExactResult, OracleError> {
    Oracle::default().solve(g)
}

#[derive(Debug, Clone, Default)]
pub struct Oracle {
    pub config: OracleConfig,
}

impl Oracle {
    pub fn new(config: OracleConfig) -> Self {
        Oracle { config }
    }

    pub fn decide(&self, g: &Graph, d: usize) -> Result<(Option<Labeling>, SearchStats), OracleError> {
        let start = Instant::now();
        let deadline = self.config.timeout.map(|t| start + t);
        self.check_size(g)?;
        if d == 0 || d > g.n() {
            return Err(OracleError::TargetOutOfRange { d, n: g.n() });
        }
        let nodes = AtomicU64::new(0);
        let found = run_decision(g, d, self.config.threads, deadline, &nodes).map_err(|()| OracleError::Timeout {
            lo: 0,
            hi: g.n(),
            nodes: nodes.load(Ordering::Relaxed),
        })?;
        let stats = SearchStats { nodes: nodes.load(Ordering::Relaxed), elapsed: start.elapsed() };
        Ok((found.map(|labels| Labeling::new(labels).expect("search builds bijections")), stats))
    }

    pub fn solve(&self, g: &Graph) -> Result<ExactResult, OracleError> {
        let start = Instant::now();
        let deadline = self.config.timeout.map(|t| start + t);
        self.check_size(g)?;
        let n = g.n();
        let nodes = AtomicU64::new(0);
        let finish = |dc: usize, labels: Vec<usize>, nodes: &AtomicU64| ExactResult {
            dc,
            witness: Labeling::new(labels).expect("search builds bijections"),
            stats: SearchStats { nodes: nodes.load(Ordering::Relaxed), elapsed: start.elapsed() },
        };
        if g.edge_count() == 0 {
            return Ok(finish(n, (1..=n).collect(), &nodes));
        }

        let hi = if g.is_connected() {
            if self.config.class_bounds {
                upper_bound_report(g).map(|r| r.best).unwrap_or(n / 2)
            } else {
                n / 2
            }
        } else {
            n - 1
        };
        // any labeling has value ≥ 1 once edges exist
        let mut lo = 1;
        let mut lo_witness: Vec<usize> = (1..=n).collect();
        let mut hi = hi.max(1);
        let timeout = |lo, hi, nodes: &AtomicU64| OracleError::Timeout { lo, hi, nodes: nodes.load(Ordering::Relaxed) };

        let threads = self.config.threads;
        match run_decision(g, hi, threads, deadline, &nodes).map_err(|()| timeout(lo, hi, &nodes))? {
            Some(w) => return Ok(finish(hi, w, &nodes)),
            None => hi -= 1,
        }
        while lo < hi {
            let mid = lo + (hi - lo).div_ceil(2);
            match run_decision(g, mid, threads, deadline, &nodes).map_err(|()| timeout(lo, hi, &nodes))? {
                Some(w) => {
                    lo = mid;
                    lo_witness = w;
                }
                None => hi = mid - 1,
            }
        }
        if lo == 1 {
            // replace the trivial identity witness with the searched one
            if let Some(w) = run_decision(g, 1, threads, deadline, &nodes).map_err(|()| timeout(lo, hi, &nodes))? {
                lo_witness = w;
            }
        }
        Ok(finish(lo, lo_witness, &nodes))
    }

    fn check_size(&self, g: &Graph) -> Result<(), OracleError> {
        if g.n() == 0 {
            return Err(OracleError::Empty);
        }
        if g.n() > self.config.max_n {
            return Err(OracleError::TooLarge { n: g.n(), limit: self.config.max_n });
        }
        Ok(())
    }
}

/// `Err(())` on timeout.
fn run_decision(
    g: &Graph,
    d: usize,
    threads: usize,
    deadline: Option<Instant>,
    nodes: &AtomicU64,
) -> Result<Option<Vec<usize>>, ()> {
    if deadline.is_some_and(|t| Instant::now() >= t) {
        return Err(());
    }
    let base = Search::new(g, d);
    let roots = base.candidates();
    let stop = AtomicBool::new(false);
    // lowest root index known to have a witness
    let best = AtomicUsize::new(usize::MAX);

    let explore = |idx: usize, search: &mut Search| -> Option<Vec<usize>> {
        let v = roots[idx];
        search.place(v);
        let ctx = Ctx { deadline, stop: &stop, best: &best, branch: idx };
        let ok = search.feasible() && search.dfs(&ctx);
        nodes.fetch_add(search.nodes, Ordering::Relaxed);
        ok.then(|| search.labels.clone())
    };

    let mut results: Vec<Option<Vec<usize>>> = vec![None; roots.len()];
    if threads <= 1 || roots.len() <= 1 {
        for (idx, slot) in results.iter_mut().enumerate() {
            let mut search = base.clone();
            if let Some(w) = explore(idx, &mut search) {
                *slot = Some(w);
                break;
            }
            if stop.load(Ordering::Relaxed) {
                return Err(());
            }
        }
    } else {
        let next = AtomicUsize::new(0);
        let collected = std::sync::Mutex::new(Vec::new());
        std::thread::scope(|scope| {
            for _ in 0..threads.min(roots.len()) {
                scope.spawn(|| loop {
                    let idx = next.fetch_add(1, Ordering::Relaxed);
                    if idx >= roots.len() || best.load(Ordering::Relaxed) < idx || stop.load(Ordering::Relaxed) {
                        break;
                    }
                    let mut search = base.clone();
                    if let Some(w) = explore(idx, &mut search) {
                        best.fetch_min(idx, Ordering::Relaxed);
                        collected.lock().expect("no poisoned workers").push((idx, w));
                    }
                });
            }
        });
        for (idx, w) in collected.into_inner().expect("no poisoned workers") {
            results[idx] = Some(w);
        }
        if stop.load(Ordering::Relaxed) && results.iter().all(Option::is_none) {
            return Err(());
        }
    }
    if let Some(w) = results.into_iter().flatten().next() {
        return Ok(Some(w));
    }
    if stop.load(Ordering::Relaxed) {
        return Err(());
    }
    Ok(None)
}

struct Ctx<'a> {
    deadline: Option<Instant>,
    stop: &'a AtomicBool,
    best: &'a AtomicUsize,
    branch: usize,
}

impl Ctx<'_> {
    fn cancelled(&self, nodes: u64) -> bool {
        if self.best.load(Ordering::Relaxed) < self.branch {
            return true;
        }
        if nodes.is_multiple_of(1024) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.stop.store(true, Ordering::Relaxed);
                }
            }
        }
        self.stop.load(Ordering::Relaxed)
    }
}

#[derive(Clone)]
struct Search<'g> {
    g: &'g Graph,
    n: usize,
    d: usize,
    /// 0 = unlabeled
    labels: Vec<usize>,
    /// smallest label each vertex may still take
    earliest: Vec<usize>,
    unlabeled_neighbors: Vec<usize>,
    /// previous vertex in the same twin class
    twin_pred: Vec<Option<Vertex>>,
    /// first member of vertex 0's twin class must be labeled by this label
    anchor_deadline: usize,
    next: usize,
    nodes: u64,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, d: usize) -> Self {
        let n = g.n();
        let twin_pred = (0..n).map(|v| (0..v).rev().find(|&u| g.neighbors(u) == g.neighbors(v))).collect();
        Search {
            g,
            n,
            d,
            labels: vec![0; n],
            earliest: vec![1; n],
            unlabeled_neighbors: (0..n).map(|v| g.degree(v)).collect(),
            twin_pred,
            anchor_deadline: n.div_ceil(2),
            next: 1,
            nodes: 0,
        }
    }

    fn admissible(&self, v: Vertex) -> bool {
        let t = self.next;
        self.labels[v] == 0
            && self.earliest[v] <= t
            && self.twin_pred[v].is_none_or(|u| self.labels[u] != 0)
            && (self.unlabeled_neighbors[v] == 0 || t + self.d <= self.n)
    }

    fn candidates(&self) -> Vec<Vertex> {
        (0..self.n).filter(|&v| self.admissible(v)).collect()
    }

    fn place(&mut self, v: Vertex) {
        let t = self.next;
        self.labels[v] = t;
        for &u in self.g.neighbors(v) {
            self.unlabeled_neighbors[u] -= 1;
            if self.labels[u] == 0 {
                self.earliest[u] = self.earliest[u].max(t + self.d);
            }
        }
        self.next += 1;
        self.nodes += 1;
    }

    fn unplace(&mut self, v: Vertex, saved_earliest: &[(Vertex, usize)]) {
        self.next -= 1;
        self.labels[v] = 0;
        for &u in self.g.neighbors(v) {
            self.unlabeled_neighbors[u] += 1;
        }
        for &(u, e) in saved_earliest {
            self.earliest[u] = e;
        }
    }

    /// Cheap necessary conditions on the remaining labels `next..=n`.
    fn feasible(&self) -> bool {
        let t = self.next;
        if t > self.n {
            return true;
        }
        // complement symmetry anchored at vertex 0
        if self.labels[0] == 0 && t > self.anchor_deadline {
            return false;
        }
        // deadline count: unlabeled vertices whose earliest label is ≥ x must fit in x..=n
        let mut bucket = vec![0usize; self.n + 2];
        for v in 0..self.n {
            if self.labels[v] == 0 {
                let e = self.earliest[v].max(t);
                if e > self.n {
                    return false;
                }
                bucket[e] += 1;
            }
        }
        let mut suffix = 0;
        for x in (t..=self.n).rev() {
            suffix += bucket[x];
            if suffix > self.n - x + 1 {
                return false;
            }
        }
        true
    }

    fn dfs(&mut self, ctx: &Ctx<'_>) -> bool {
        if self.next > self.n {
            return true;
        }
        if ctx.cancelled(self.nodes) {
            return false;
        }
        for v in 0..self.n {
            if !self.admissible(v) {
                continue;
            }
            let saved: Vec<(Vertex, usize)> =
                self.g.neighbors(v).iter().filter(|&&u| self.labels[u] == 0).map(|&u| (u, self.earliest[u])).collect();
            self.place(v);
            if self.feasible() && self.dfs(ctx) {
                return true;
            }
            self.unplace(v, &saved);
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::labeling::differential_value;

    #[test]
    fn p2_at_one() {
        let w = decision_dc_at_least(&Graph::path(2), 1).unwrap().unwrap();
        assert_eq!(w.labels(), &[1, 2]);
    }

    #[test]
    fn claw_cannot_reach_two() {
        let claw = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(decision_dc_at_least(&claw, 2).unwrap(), None);
        assert_eq!(exact_dc(&claw).unwrap().dc, 1);
    }

    #[test]
    fn c4_cannot_reach_two() {
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(decision_dc_at_least(&c4, 2).unwrap(), None);
        assert_eq!(exact_dc(&c4).unwrap().dc, 1);
    }

    #[test]
    fn small_exact_values() {
        assert_eq!(exact_dc(&Graph::path(5)).unwrap().dc, 2);
        let (g, _) = generate::regular_caterpillar(3, 1).unwrap();
        assert_eq!(exact_dc(&g).unwrap().dc, 3);
        assert_eq!(exact_dc(&Graph::path(1)).unwrap().dc, 1);
        assert_eq!(exact_dc(&Graph::empty(3)).unwrap().dc, 3);
    }

    #[test]
    fn witness_achieves_dc() {
        for n in 2..=10 {
            let g = Graph::path(n);
            let r = exact_dc(&g).unwrap();
            assert_eq!(r.dc, n / 2);
            assert_eq!(differential_value(&g, r.witness.labels()).unwrap(), r.dc);
        }
    }

    #[test]
    fn forests_are_supported() {
        // two disjoint edges: labels 1,3 and 2,4 give value 2
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(exact_dc(&g).unwrap().dc, 2);
        let g = Graph::new(5, [(0, 1), (2, 3)]).unwrap();
        let r = exact_dc(&g).unwrap();
        assert_eq!(differential_value(&g, r.witness.labels()).unwrap(), r.dc);
        assert_eq!(r.dc, 3);
    }

    #[test]
    fn errors() {
        assert_eq!(decision_dc_at_least(&Graph::path(3), 0).unwrap_err(), OracleError::TargetOutOfRange { d: 0, n: 3 });
        assert_eq!(decision_dc_at_least(&Graph::path(3), 4).unwrap_err(), OracleError::TargetOutOfRange { d: 4, n: 3 });
        assert_eq!(exact_dc(&Graph::path(40)).unwrap_err(), OracleError::TooLarge { n: 40, limit: DEFAULT_MAX_N });
        assert_eq!(exact_dc(&Graph::empty(0)).unwrap_err(), OracleError::Empty);
    }

    #[test]
    fn timeout_reports_bracket() {
        let oracle = Oracle::new(OracleConfig {
            max_n: 40,
            timeout: Some(Duration::from_millis(0)),
            threads: 1,
            class_bounds: false,
        });
        let (g, _) = generate::caterpillar(&[3, 0, 2, 0, 1, 4, 0, 0, 2, 0, 3]).unwrap();
        match oracle.solve(&g) {
            Err(OracleError::Timeout { lo, hi, .. }) => assert!(lo >= 1 && lo <= hi),
            other => panic!("expected timeout, got {other:?}"),
        }
    }

    #[test]
    fn threads_agree_with_single_thread() {
        for legs in [vec![2, 0, 1, 3], vec![1, 1, 1, 1], vec![3, 0, 0, 2]] {
            let (g, _) = generate::caterpillar(&legs).unwrap();
            let single = exact_dc(&g).unwrap();
            let multi = Oracle::new(OracleConfig { threads: 4, ..OracleConfig::default() }).solve(&g).unwrap();
            assert_eq!(single.dc, multi.dc);
            assert_eq!(single.witness, multi.witness);
        }
    }

    #[test]
    fn class_bounds_do_not_change_dc() {
        for lengths in [vec![3, 3], vec![2, 2, 1], vec![1, 1, 1, 1]] {
            let (g, _) = generate::spider(&lengths).unwrap();
            let fast = exact_dc(&g).unwrap().dc;
            let plain =
                Oracle::new(OracleConfig { class_bounds: false, ..OracleConfig::default() }).solve(&g).unwrap().dc;
            assert_eq!(fast, plain);
        }
    }
}
