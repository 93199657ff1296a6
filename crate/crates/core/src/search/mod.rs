//! Exhaustive backtracking over vertex labelings.
//!
//! Labels are assigned left to right as dense element indices. A partial
//! assignment is abandoned when a vertex or edge class exceeds its ceiling
//! `⌈total/n⌉`, or when the classes still below the floor `⌊total/n⌋` need
//! more occurrences than the remaining vertices (edges) can supply.
//!
//! With symmetry reduction on, the first vertex is fixed to the identity
//! (a global shift preserves both partitions) and of each labeling and its
//! reversal only the one with the smaller second step survives at the leaf.

pub mod exp2;
pub mod oracle;
pub mod sweep;

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::GroupSpec;
use crate::labeling::{GraphKind, GraphLabeling};

pub use exp2::{verify_exp2_argument, Exp2Report};
pub use oracle::{count_labelings, DEFAULT_ORACLE_BOUND};
pub use sweep::{
    classify, presentations, sweep_conjecture, Classification, SweepOptions, SweepReport, SweepRow,
    SweepVerdict,
};

/// Largest group order the dense addition table is built for.
pub const MAX_SEARCH_ORDER: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("a path needs at least one vertex")]
    EmptyPath,
    #[error("a cycle needs at least three vertices, got {0}")]
    ShortCycle(usize),
    #[error("group order {0} exceeds the search limit of {MAX_SEARCH_ORDER}")]
    GroupTooLarge(usize),
    #[error("oracle would enumerate {space} labelings, above the bound {bound}")]
    OracleBoundExceeded { space: u128, bound: u64 },
    #[error("group rank must be at least 2 for the exponent-2 check, got {0}")]
    RankTooSmall(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOptions {
    /// Fix the first label to the identity and drop one of each
    /// reversal pair.
    pub symmetry_reduction: bool,
    /// Sequential lexicographic order, so the witness is reproducible.
    pub canonical_witness: bool,
    /// Count ceilings and the feasibility floor. Turning this off leaves
    /// only the leaf check and exists for soundness testing.
    pub pruning: bool,
    pub node_budget: Option<u64>,
    pub thread_hint: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            symmetry_reduction: true,
            canonical_witness: false,
            pruning: true,
            node_budget: None,
            thread_hint: None,
        }
    }
}

impl SearchOptions {
    pub fn canonical() -> Self {
        Self {
            canonical_witness: true,
            ..Self::default()
        }
    }

    pub fn with_budget(mut self, budget: Option<u64>) -> Self {
        self.node_budget = budget;
        self
    }

    pub fn with_threads(mut self, threads: Option<usize>) -> Self {
        self.thread_hint = threads;
        self
    }

    fn effective_threads(&self) -> usize {
        if self.canonical_witness {
            1
        } else {
            self.thread_hint.unwrap_or(1).max(1)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Found,
    Exhausted,
    BudgetExceeded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetryMode {
    None,
    ShiftAndReversal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub verdict: Verdict,
    pub witness: Option<GraphLabeling>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    pub symmetry_mode: SymmetryMode,
}

pub fn search_path(
    g: &GroupSpec,
    m: usize,
    opts: &SearchOptions,
) -> Result<SearchOutcome, SearchError> {
    if m == 0 {
        return Err(SearchError::EmptyPath);
    }
    run(g, GraphKind::Path, m, opts)
}

pub fn search_cycle(
    g: &GroupSpec,
    m: usize,
    opts: &SearchOptions,
) -> Result<SearchOutcome, SearchError> {
    if m < 3 {
        return Err(SearchError::ShortCycle(m));
    }
    run(g, GraphKind::Cycle, m, opts)
}

fn run(
    g: &GroupSpec,
    kind: GraphKind,
    m: usize,
    opts: &SearchOptions,
) -> Result<SearchOutcome, SearchError> {
    let n = g.order();
    if n > MAX_SEARCH_ORDER {
        return Err(SearchError::GroupTooLarge(n));
    }
    let started = clock::now();
    let problem = Problem::new(g, kind, m, opts);
    let shared = Shared {
        found: AtomicBool::new(false),
        out_of_budget: AtomicBool::new(false),
        nodes: AtomicU64::new(0),
        budget: opts.node_budget,
        witness: Mutex::new(None),
    };

    let threads = opts.effective_threads();
    if threads <= 1 {
        let mut worker = Worker::new(&problem, &shared);
        worker.dfs(0);
        worker.flush();
    } else {
        run_parallel(&problem, &shared, threads);
    }

    let witness = shared
        .witness
        .into_inner()
        .unwrap_or_else(|e| e.into_inner());
    let verdict = if witness.is_some() {
        Verdict::Found
    } else if shared.out_of_budget.load(Ordering::Relaxed) {
        Verdict::BudgetExceeded
    } else {
        Verdict::Exhausted
    };
    let witness = witness.map(|idx| {
        let idx: Vec<usize> = idx.iter().map(|&i| i as usize).collect();
        GraphLabeling::from_indices(g.clone(), kind, &idx)
            .expect("search produced indices inside the group")
    });
    debug_assert!(witness.as_ref().is_none_or(|w| w.is_cordial()));
    Ok(SearchOutcome {
        verdict,
        witness,
        nodes_explored: shared.nodes.load(Ordering::Relaxed),
        elapsed: clock::elapsed(started),
        symmetry_mode: if opts.symmetry_reduction {
            SymmetryMode::ShiftAndReversal
        } else {
            SymmetryMode::None
        },
    })
}

/// Splits the tree into prefixes and hands them to `threads` workers.
fn run_parallel(problem: &Problem, shared: &Shared, threads: usize) {
    let target = threads * 8;
    let mut prefixes: Vec<Vec<u32>> = vec![Vec::new()];
    let mut depth = 0;
    while depth < problem.len && prefixes.len() < target {
        let mut next = Vec::new();
        let mut probe = Worker::new(problem, shared);
        for prefix in &prefixes {
            probe.reset_to(prefix);
            for x in problem.candidates(depth) {
                if probe.place(depth, x) {
                    let mut p = prefix.clone();
                    p.push(x);
                    next.push(p);
                    probe.local_nodes += 1;
                    probe.unplace(depth, x);
                }
            }
        }
        probe.flush();
        prefixes = next;
        depth += 1;
        if prefixes.is_empty() {
            return;
        }
    }
    if depth == problem.len {
        let mut worker = Worker::new(problem, shared);
        for prefix in &prefixes {
            worker.reset_to(prefix);
            worker.leaf();
            if shared.found.load(Ordering::Relaxed) {
                break;
            }
        }
        worker.flush();
        return;
    }

    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| {
                let mut worker = Worker::new(problem, shared);
                loop {
                    if shared.stop() {
                        break;
                    }
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    let Some(prefix) = prefixes.get(i) else {
                        break;
                    };
                    worker.reset_to(prefix);
                    worker.dfs(prefix.len());
                }
                worker.flush();
            });
        }
    });
}

struct Shared {
    found: AtomicBool,
    out_of_budget: AtomicBool,
    nodes: AtomicU64,
    budget: Option<u64>,
    witness: Mutex<Option<Vec<u32>>>,
}

impl Shared {
    fn stop(&self) -> bool {
        self.found.load(Ordering::Relaxed) || self.out_of_budget.load(Ordering::Relaxed)
    }
}

struct Problem {
    n: usize,
    len: usize,
    cycle: bool,
    add: Vec<u32>,
    neg: Vec<u32>,
    edges_total: usize,
    vcap: u32,
    vfloor: u32,
    ecap: u32,
    efloor: u32,
    pruning: bool,
    symmetry: bool,
}

impl Problem {
    fn new(group: &GroupSpec, kind: GraphKind, len: usize, opts: &SearchOptions) -> Self {
        let n = group.order();
        let add = group.addition_table();
        let neg = (0..n)
            .map(|x| (0..n).find(|&y| add[x * n + y] == 0).unwrap() as u32)
            .collect();
        let cycle = kind == GraphKind::Cycle;
        let edges_total = if cycle { len } else { len - 1 };
        Self {
            n,
            len,
            cycle,
            add,
            neg,
            edges_total,
            vcap: len.div_ceil(n) as u32,
            vfloor: (len / n) as u32,
            ecap: edges_total.div_ceil(n) as u32,
            efloor: (edges_total / n) as u32,
            pruning: opts.pruning,
            symmetry: opts.symmetry_reduction,
        }
    }

    fn candidates(&self, pos: usize) -> std::ops::Range<u32> {
        if pos == 0 && self.symmetry {
            0..1
        } else {
            0..self.n as u32
        }
    }

    #[inline]
    fn sum(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.n + b as usize]
    }

    fn within_one(counts: &[u32]) -> bool {
        let max = counts.iter().max().copied().unwrap_or(0);
        let min = counts.iter().min().copied().unwrap_or(0);
        max - min <= 1
    }
}

const FLUSH_EVERY: u64 = 1 << 12;

struct Worker<'p> {
    p: &'p Problem,
    shared: &'p Shared,
    labels: Vec<u32>,
    vcount: Vec<u32>,
    ecount: Vec<u32>,
    vdef: usize,
    edef: usize,
    local_nodes: u64,
}

impl<'p> Worker<'p> {
    fn new(p: &'p Problem, shared: &'p Shared) -> Self {
        Self {
            p,
            shared,
            labels: Vec::with_capacity(p.len),
            vcount: vec![0; p.n],
            ecount: vec![0; p.n],
            vdef: p.n * p.vfloor as usize,
            edef: p.n * p.efloor as usize,
            local_nodes: 0,
        }
    }

    fn reset_to(&mut self, prefix: &[u32]) {
        while let Some(x) = self.labels.last().copied() {
            self.unplace(self.labels.len() - 1, x);
        }
        for (pos, &x) in prefix.iter().enumerate() {
            let ok = self.place_unchecked(pos, x);
            debug_assert!(ok || !self.p.pruning);
        }
    }

    fn flush(&mut self) {
        if self.local_nodes > 0 {
            self.shared
                .nodes
                .fetch_add(self.local_nodes, Ordering::Relaxed);
            self.local_nodes = 0;
        }
    }

    fn count_node(&mut self) -> bool {
        self.local_nodes += 1;
        if self.local_nodes >= FLUSH_EVERY {
            let total = self
                .shared
                .nodes
                .fetch_add(self.local_nodes, Ordering::Relaxed)
                + self.local_nodes;
            self.local_nodes = 0;
            if self.shared.budget.is_some_and(|b| total > b) {
                self.shared.out_of_budget.store(true, Ordering::Relaxed);
            }
            if self.shared.stop() {
                return false;
            }
        } else if let Some(b) = self.shared.budget {
            // Small budgets must trip before the first flush.
            if b < FLUSH_EVERY && self.shared.nodes.load(Ordering::Relaxed) + self.local_nodes > b {
                self.shared.out_of_budget.store(true, Ordering::Relaxed);
                return false;
            }
        }
        true
    }

    /// Places `x` at `pos`, applying pruning; returns false (with state
    /// untouched) if the placement is rejected.
    fn place(&mut self, pos: usize, x: u32) -> bool {
        if !self.place_unchecked(pos, x) {
            self.unplace(pos, x);
            return false;
        }
        true
    }

    /// Applies the placement and reports whether it passes pruning. The
    /// state is modified either way.
    fn place_unchecked(&mut self, pos: usize, x: u32) -> bool {
        let p = self.p;
        let xi = x as usize;
        if self.vcount[xi] < p.vfloor {
            self.vdef -= 1;
        }
        self.vcount[xi] += 1;
        let mut ok = !p.pruning || self.vcount[xi] <= p.vcap;
        if pos > 0 {
            let e = p.sum(self.labels[pos - 1], x) as usize;
            if self.ecount[e] < p.efloor {
                self.edef -= 1;
            }
            self.ecount[e] += 1;
            ok &= !p.pruning || self.ecount[e] <= p.ecap;
        }
        self.labels.push(x);
        if ok && p.pruning {
            let placed_vertices = pos + 1;
            let placed_edges = pos;
            ok = self.vdef <= p.len - placed_vertices && self.edef <= p.edges_total - placed_edges;
        }
        ok
    }

    fn unplace(&mut self, pos: usize, x: u32) {
        let p = self.p;
        let xi = x as usize;
        self.labels.pop();
        self.vcount[xi] -= 1;
        if self.vcount[xi] < p.vfloor {
            self.vdef += 1;
        }
        if pos > 0 {
            let e = p.sum(self.labels[pos - 1], x) as usize;
            self.ecount[e] -= 1;
            if self.ecount[e] < p.efloor {
                self.edef += 1;
            }
        }
    }

    fn dfs(&mut self, pos: usize) {
        if pos == self.p.len {
            self.leaf();
            return;
        }
        for x in self.p.candidates(pos) {
            if self.shared.stop() {
                return;
            }
            let ok = self.place_unchecked(pos, x);
            if ok {
                if !self.count_node() {
                    self.unplace(pos, x);
                    return;
                }
                self.dfs(pos + 1);
            }
            self.unplace(pos, x);
        }
    }

    fn leaf(&mut self) {
        let p = self.p;
        let m = p.len;
        if p.symmetry && !self.reversal_canonical() {
            return;
        }
        let wrap = p
            .cycle
            .then(|| p.sum(self.labels[m - 1], self.labels[0]) as usize);
        if let Some(e) = wrap {
            self.ecount[e] += 1;
        }
        let ok = Problem::within_one(&self.vcount) && Problem::within_one(&self.ecount);
        if let Some(e) = wrap {
            self.ecount[e] -= 1;
        }
        if ok {
            let mut slot = self
                .shared
                .witness
                .lock()
                .unwrap_or_else(|e| e.into_inner());
            if slot.is_none() {
                *slot = Some(self.labels.clone());
            }
            self.shared.found.store(true, Ordering::Relaxed);
        }
    }

    /// With the first label fixed at the identity, keep a labeling only if
    /// its second label does not exceed that of its shift-normalized
    /// reversal.
    fn reversal_canonical(&self) -> bool {
        let p = self.p;
        let m = p.len;
        if m < 2 {
            return true;
        }
        let second = self.labels[1];
        let mirrored = if p.cycle {
            self.labels[m - 1]
        } else {
            p.sum(self.labels[m - 2], p.neg[self.labels[m - 1] as usize])
        };
        second <= mirrored
    }
}

pub(crate) mod clock {
    use std::time::Duration;

    #[cfg(not(target_arch = "wasm32"))]
    pub type Instant = std::time::Instant;
    #[cfg(target_arch = "wasm32")]
    #[derive(Clone, Copy)]
    pub struct Instant;

    #[cfg(not(target_arch = "wasm32"))]
    pub fn now() -> Instant {
        std::time::Instant::now()
    }

    #[cfg(target_arch = "wasm32")]
    pub fn now() -> Instant {
        Instant
    }

    #[cfg(not(target_arch = "wasm32"))]
    pub fn elapsed(start: Instant) -> Duration {
        start.elapsed()
    }

    // No monotonic clock on wasm32-unknown-unknown without JS glue.
    #[cfg(target_arch = "wasm32")]
    pub fn elapsed(_start: Instant) -> Duration {
        Duration::ZERO
    }
}
