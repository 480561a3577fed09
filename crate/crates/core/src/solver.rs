//! Exhaustive search for the local antimagic chromatic number of small
//! spiders, plus a naive enumerator to cross-check it.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::pendant_lower_bound;
use crate::spider::{EdgeLabeling, SpiderGraph, SpiderSignature};
use crate::verify::verify;

/// `Sp(2^[n], 3^[m])` pairs the conjectured `d+1` law leaves out.
pub const CONJECTURE_EXCEPTIONS: [(usize, usize); 13] = [
    (4, 0),
    (5, 0),
    (6, 0),
    (0, 10),
    (1, 8),
    (1, 9),
    (2, 7),
    (2, 8),
    (3, 5),
    (3, 6),
    (4, 4),
    (4, 5),
    (5, 3),
];

/// Largest size the search handles (labels are kept in a 64-bit mask).
pub const MAX_EDGES: usize = 63;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Search nodes (label placements) allowed per decision; `None` is unlimited.
    pub node_budget: Option<u64>,
    /// Worker threads for the first branching level; 0 uses rayon's default
    /// and 1 searches sequentially.
    pub jobs: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: Some(200_000_000),
            jobs: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Yes(EdgeLabeling),
    No,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveStatus {
    Exact,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    pub chi_la: Option<usize>,
    pub witness: Option<EdgeLabeling>,
    /// Every count below this was ruled out by a completed search.
    pub proved_lower: usize,
    pub nodes_explored: u64,
}

enum Flow {
    Found,
    Exhausted,
    Abort,
}

struct Shared {
    nodes: AtomicU64,
    stop: AtomicBool,
    out_of_budget: AtomicBool,
    budget: u64,
}

impl Shared {
    fn new(budget: Option<u64>) -> Self {
        Shared {
            nodes: AtomicU64::new(0),
            stop: AtomicBool::new(false),
            out_of_budget: AtomicBool::new(false),
            budget: budget.unwrap_or(u64::MAX),
        }
    }
}

const FLUSH: u64 = 4096;

#[derive(Clone)]
struct Worker<'a> {
    shared: &'a Shared,
    lens: Vec<usize>,
    /// Leg `k` in search order has the same length as leg `k-1`.
    twin: Vec<bool>,
    q: u32,
    c: usize,
    /// Label `q` may only sit on a pendant edge.
    pendant_q: bool,
    legs: Vec<Vec<u32>>,
    used: u64,
    counts: Vec<u32>,
    present: Vec<u32>,
    local: u64,
    found: Option<Vec<Vec<u32>>>,
}

impl Worker<'_> {
    fn tick(&mut self) -> bool {
        self.local += 1;
        if self.local >= FLUSH {
            let total = self.shared.nodes.fetch_add(self.local, Ordering::Relaxed) + self.local;
            self.local = 0;
            if total > self.shared.budget {
                self.shared.out_of_budget.store(true, Ordering::Relaxed);
                self.shared.stop.store(true, Ordering::Relaxed);
            }
        }
        self.shared.stop.load(Ordering::Relaxed)
    }

    fn flush(&mut self) {
        self.shared.nodes.fetch_add(self.local, Ordering::Relaxed);
        self.local = 0;
    }

    fn add(&mut self, color: u32) -> bool {
        let slot = &mut self.counts[color as usize];
        *slot += 1;
        if *slot == 1 {
            self.present.push(color);
        }
        self.present.len() <= self.c
    }

    fn remove(&mut self, color: u32) {
        let slot = &mut self.counts[color as usize];
        *slot -= 1;
        if *slot == 0 {
            let last = self.present.pop();
            debug_assert_eq!(last, Some(color));
        }
    }

    fn last_color(&self, k: usize) -> u32 {
        let l = &self.legs[k];
        match l.len() {
            1 => l[0],
            n => l[n - 2] + l[n - 1],
        }
    }

    fn finish(&mut self) -> Flow {
        let core: u32 = self.legs.iter().map(|l| l[l.len() - 1]).sum();
        if (0..self.legs.len()).any(|k| self.last_color(k) == core) {
            return Flow::Exhausted;
        }
        let ok = self.add(core);
        self.remove(core);
        if ok {
            self.found = Some(self.legs.clone());
            Flow::Found
        } else {
            Flow::Exhausted
        }
    }

    /// Places `label` at position `p` of leg `k` and searches on.
    fn place(&mut self, k: usize, p: usize, label: u32) -> Flow {
        if self.used & (1 << label) != 0 {
            return Flow::Exhausted;
        }
        if self.pendant_q && label == self.q && p != 0 {
            return Flow::Exhausted;
        }
        if p == 0 && self.twin[k] && label <= self.legs[k - 1][0] {
            return Flow::Exhausted;
        }
        let color = if p == 0 {
            label
        } else {
            self.legs[k][p - 1] + label
        };
        if p >= 1 {
            let before = if p == 1 {
                self.legs[k][0]
            } else {
                self.legs[k][p - 2] + self.legs[k][p - 1]
            };
            if before == color {
                return Flow::Exhausted;
            }
        }
        let fits = self.add(color);
        let flow = if fits {
            self.used |= 1 << label;
            self.legs[k].push(label);
            let f = self.dfs(k, p + 1);
            self.legs[k].pop();
            self.used &= !(1 << label);
            f
        } else {
            Flow::Exhausted
        };
        self.remove(color);
        flow
    }

    fn dfs(&mut self, k: usize, p: usize) -> Flow {
        if k == self.lens.len() {
            return self.finish();
        }
        if p == self.lens[k] {
            return self.dfs(k + 1, 0);
        }
        if self.tick() {
            return Flow::Abort;
        }
        let base = if p == 0 { 0 } else { self.legs[k][p - 1] };
        // labels that repeat a color already in use come first
        let reuse: Vec<u32> = self
            .present
            .iter()
            .filter_map(|&c| c.checked_sub(base).filter(|&l| l >= 1 && l <= self.q))
            .collect();
        for label in reuse {
            match self.place(k, p, label) {
                Flow::Exhausted => {}
                f => return f,
            }
        }
        if self.present.len() == self.c {
            return Flow::Exhausted;
        }
        for label in (1..=self.q).rev() {
            if self
                .counts
                .get((base + label) as usize)
                .is_some_and(|&n| n > 0)
            {
                continue;
            }
            match self.place(k, p, label) {
                Flow::Exhausted => {}
                f => return f,
            }
        }
        Flow::Exhausted
    }
}

/// Is there a local antimagic labeling of `g` with at most `c` colors?
/// Returns the decision and the number of search nodes used.
pub fn exists_labeling_with_at_most(
    g: &SpiderGraph,
    c: usize,
    config: SearchConfig,
) -> (Decision, u64) {
    let q = g.num_edges();
    if q > MAX_EDGES {
        return (Decision::Unknown, 0);
    }
    let d = g.num_legs();
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(g.leg_len(i + 1)));
    let lens: Vec<usize> = order.iter().map(|&i| g.leg_len(i + 1)).collect();
    let twin = (0..d).map(|k| k > 0 && lens[k] == lens[k - 1]).collect();
    let shared = Shared::new(config.node_budget);
    let root = Worker {
        shared: &shared,
        lens,
        twin,
        q: q as u32,
        c,
        pendant_q: c <= g.num_pendants() + 1 && q > 1,
        legs: vec![Vec::new(); d],
        used: 0,
        counts: vec![0; d * q + 2 * q + 2],
        present: Vec::new(),
        local: 0,
        found: None,
    };
    let branch = |label: u32| -> Option<Vec<Vec<u32>>> {
        let mut w = root.clone();
        let found = matches!(w.place(0, 0, label), Flow::Found);
        w.flush();
        if found {
            shared.stop.store(true, Ordering::Relaxed);
        }
        w.found
    };
    let labels: Vec<u32> = (1..=q as u32).rev().collect();
    let found = match config.jobs {
        1 => labels.into_iter().find_map(branch),
        0 => labels.into_par_iter().find_map_first(branch),
        jobs => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map(|pool| pool.install(|| labels.clone().into_par_iter().find_map_first(branch)))
            .unwrap_or_else(|_| labels.into_iter().find_map(branch)),
    };
    let nodes = shared.nodes.load(Ordering::Relaxed);
    let decision = match found {
        Some(legs) => {
            let mut out = vec![Vec::new(); d];
            for (k, &i) in order.iter().enumerate() {
                out[i] = legs[k].clone();
            }
            let labeling = EdgeLabeling::from_legs(out);
            let report = verify(g, &labeling);
            assert!(
                report.passed() && report.color_count <= c,
                "solver produced a bad witness: {report:?}"
            );
            Decision::Yes(labeling)
        }
        None if shared.out_of_budget.load(Ordering::Relaxed) => Decision::Unknown,
        None => Decision::No,
    };
    (decision, nodes)
}

/// Smallest color count, searching upward from the pendant bound.
pub fn chi_la_exact(g: &SpiderGraph, config: SearchConfig) -> SolveOutcome {
    let mut nodes = 0;
    let start = pendant_lower_bound(g);
    for c in start..=g.num_vertices() {
        let (decision, n) = exists_labeling_with_at_most(g, c, config);
        nodes += n;
        match decision {
            Decision::Yes(w) => {
                let count = verify(g, &w).color_count;
                return SolveOutcome {
                    status: SolveStatus::Exact,
                    chi_la: Some(count),
                    witness: Some(w),
                    proved_lower: count,
                    nodes_explored: nodes,
                };
            }
            Decision::No => {}
            Decision::Unknown => {
                return SolveOutcome {
                    status: SolveStatus::Unknown,
                    chi_la: None,
                    witness: None,
                    proved_lower: c,
                    nodes_explored: nodes,
                };
            }
        }
    }
    SolveOutcome {
        status: SolveStatus::Unknown,
        chi_la: None,
        witness: None,
        proved_lower: start,
        nodes_explored: nodes,
    }
}

/// Minimum color count over all `q!` labelings, without pruning. `None` above
/// `q = 10`.
pub fn naive_chi_la(g: &SpiderGraph) -> Option<usize> {
    let q = g.num_edges();
    if q > 10 {
        return None;
    }
    let ends = g.edge_endpoint_indices();
    let nv = g.num_vertices();
    let mut labels: Vec<u32> = (1..=q as u32).collect();
    let mut best: Option<usize> = None;
    let mut sums = vec![0u32; nv];
    let mut eval = |labels: &[u32]| {
        sums.iter_mut().for_each(|s| *s = 0);
        for (&(a, b), &l) in ends.iter().zip(labels) {
            sums[a] += l;
            sums[b] += l;
        }
        if ends.iter().any(|&(a, b)| sums[a] == sums[b]) {
            return;
        }
        let mut distinct = sums.clone();
        distinct.sort_unstable();
        distinct.dedup();
        best = Some(best.map_or(distinct.len(), |b| b.min(distinct.len())));
    };
    // Heap's algorithm
    let mut c = vec![0usize; q];
    eval(&labels);
    let mut i = 1;
    while i < q {
        if c[i] < i {
            if i % 2 == 0 {
                labels.swap(0, i);
            } else {
                labels.swap(c[i], i);
            }
            eval(&labels);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

/// Canonical signatures with `d >= 3`, legs at least 2, `q <= max_q` and
/// `d(d+1) <= 2(2q-1)`.
pub fn conjecture_signatures(max_q: usize) -> Vec<SpiderSignature> {
    fn grow(legs: &mut Vec<usize>, left: usize, out: &mut Vec<Vec<usize>>) {
        if legs.len() >= 3 {
            out.push(legs.clone());
        }
        let from = legs.last().copied().unwrap_or(2);
        for y in from..=left {
            legs.push(y);
            grow(legs, left - y, out);
            legs.pop();
        }
    }
    let mut raw = Vec::new();
    grow(&mut Vec::new(), max_q, &mut raw);
    let mut sigs: Vec<SpiderSignature> = raw
        .into_iter()
        .filter(|l| {
            let (d, q) = (l.len(), l.iter().sum::<usize>());
            d * (d + 1) <= 2 * (2 * q - 1)
        })
        .map(|l| SpiderSignature::new(l).expect("legs are positive"))
        .collect();
    sigs.sort_by_key(|s| (s.size(), s.legs().to_vec()));
    sigs
}

pub fn is_listed_exception(sig: &SpiderSignature) -> bool {
    sig.two_three_counts()
        .is_some_and(|p| CONJECTURE_EXCEPTIONS.contains(&p))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanEntry {
    pub signature: SpiderSignature,
    pub legs: usize,
    pub chi_la: Option<usize>,
    pub listed_exception: bool,
    /// `χ_la != d+1` and the spider is not a listed exception.
    pub counterexample: bool,
    #[serde(skip)]
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub max_q: usize,
    pub entries: Vec<ScanEntry>,
}

impl ScanReport {
    pub fn counterexamples(&self) -> impl Iterator<Item = &ScanEntry> {
        self.entries.iter().filter(|e| e.counterexample)
    }

    pub fn unresolved(&self) -> impl Iterator<Item = &ScanEntry> {
        self.entries.iter().filter(|e| e.chi_la.is_none())
    }
}

/// Solves every spider the conjecture speaks about up to `max_q` edges.
pub fn conjecture_scan(max_q: usize, config: SearchConfig) -> ScanReport {
    let entries = conjecture_signatures(max_q)
        .into_iter()
        .map(|sig| {
            let g = SpiderGraph::new(sig.clone());
            let out = chi_la_exact(&g, config);
            let d = sig.num_legs();
            let listed = is_listed_exception(&sig);
            ScanEntry {
                counterexample: out.chi_la.is_some_and(|x| x != d + 1) && !listed,
                signature: sig,
                legs: d,
                chi_la: out.chi_la,
                listed_exception: listed,
                nodes_explored: out.nodes_explored,
            }
        })
        .collect();
    ScanReport { max_q, entries }
}
