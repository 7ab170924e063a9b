//! Exact engines: `f(n, H)` by branch-and-bound over edge-colorings of
//! `K_n`, and `ext(n, F)` by vertex-by-vertex generation of `F`-free graphs.
//!
//! Colouring search. Edges are coloured in canonical index order, so after
//! edge `C(m, 2) - 1` the colouring of `K_m` on vertices `0..m` is complete.
//! Colours are assigned in restricted-growth form. A copy of the target is
//! checked when its largest edge is coloured; the colour of that edge must
//! repeat a colour of the copy whenever the rest of the copy is rainbow.
//! Three bounds prune:
//! - colours used plus uncoloured edges must reach `k`;
//! - at every vertex boundary the colouring of `K_m` must be the
//!   lexicographically least among its images under `Sym(m)` (the least
//!   colouring of each isomorphism class survives, since every prefix of a
//!   least colouring is least);
//! - when `f(n - 1, H)` is known, deleting any vertex `v` loses exactly the
//!   colours of `S(v)`, so `|S(v)| >= k - f(n - 1, H)` for every `v`.

use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::coloring::{find_rainbow_copy, normalize, EdgeColoring};
use crate::constructions::best_known_certificate;
use crate::embeddings::{canonical_code, canonical_form, enumerate_copies, next_permutation, CanonicalCode};
use crate::error::{Error, Result};
use crate::graphs::{complete_edges, edge_endpoints, edge_index, ForbiddenFamily, SmallGraph, MAX_ORDER};

const MAX_EDGES: usize = complete_edges(crate::graphs::MAX_TARGET_ORDER);

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Wall-clock budget for one top-level call; `None` means unbounded.
    pub timeout: Option<Duration>,
    pub workers: usize,
    pub node_limit: Option<u64>,
    /// Edge depth at which the colouring search is split into parallel
    /// tasks; `None` picks the `K_5` (or `K_{n-1}`) boundary.
    pub split_depth: Option<usize>,
    /// Progress lines on standard error.
    pub verbose: bool,
    /// Prune with the per-vertex unique-colour bound derived from
    /// `f(n - 1, H)`. Only switched off to cross-check the bound.
    pub unique_color_bound: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            timeout: Some(Duration::from_secs(300)),
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            node_limit: None,
            split_depth: None,
            verbose: false,
            unique_color_bound: true,
        }
    }
}

impl SearchConfig {
    pub fn with_timeout(mut self, timeout: Duration) -> Self {
        self.timeout = Some(timeout);
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    fn deadline(&self, start: Instant) -> Option<Instant> {
        self.timeout.map(|t| start + t)
    }
}

/// Outcome of a decision query. `Unknown` means the budget ran out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Feasible(EdgeColoring),
    Infeasible,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Exact,
    LowerBoundOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Quantity {
    /// `f(n, H)`
    AntiRamsey,
    /// `rb(n, H) = f(n, H) + 1`
    Rainbow,
    /// `ext(n, F)`
    Turan,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Coloring(EdgeColoring),
    Graph(SmallGraph),
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub quantity: Quantity,
    pub value: u64,
    /// For `Rainbow` outcomes the witness colouring has `value - 1` colours.
    pub witness: Witness,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    pub status: Status,
}

impl SearchOutcome {
    pub fn is_exact(&self) -> bool {
        self.status == Status::Exact
    }

    pub fn coloring(&self) -> Option<&EdgeColoring> {
        match &self.witness {
            Witness::Coloring(c) => Some(c),
            Witness::Graph(_) => None,
        }
    }

    pub fn graph(&self) -> Option<&SmallGraph> {
        match &self.witness {
            Witness::Graph(g) => Some(g),
            Witness::Coloring(_) => None,
        }
    }
}

// ---------------------------------------------------------------------------
// colouring search
// ---------------------------------------------------------------------------

/// Precomputed tables for one `(n, target)` pair.
struct Problem {
    n: usize,
    edges: usize,
    ends: Vec<u16>,
    /// `watch[t]` holds the other edges of every copy whose largest edge is `t`.
    watch: Vec<Vec<u8>>,
    /// Edges per copy minus one.
    stride: usize,
    /// `boundary[t] = m` when edge `t` completes `K_m` with `3 <= m < n`.
    boundary: Vec<usize>,
    /// For each `m`, the non-identity permutations of `0..m` as edge maps:
    /// position `t` of the permuted colouring reads old edge `map[t]`.
    perm_maps: Vec<Vec<Vec<u8>>>,
    /// `remaining_degree[t][u]`: edges with index `>= t` at vertex `u`.
    remaining_degree: Vec<[u8; MAX_ORDER]>,
}

impl Problem {
    fn new(n: usize, target: &SmallGraph) -> Result<Problem> {
        let table = enumerate_copies(n, target)?;
        let edges = complete_edges(n);
        let stride = target.size().saturating_sub(1);
        let mut watch: Vec<Vec<u8>> = vec![Vec::new(); edges];
        for copy in table.copies() {
            let idx = copy.edge_indices();
            let (&last, rest) = idx.split_last().expect("copy has edges");
            watch[last].extend(rest.iter().map(|&e| e as u8));
        }
        let ends = (0..edges)
            .map(|t| {
                let (i, j) = edge_endpoints(t);
                (1u16 << i) | (1u16 << j)
            })
            .collect();
        let mut boundary = vec![0; edges];
        let mut perm_maps = vec![Vec::new(); n + 1];
        for m in 3..n {
            boundary[complete_edges(m) - 1] = m;
            let mut perm: Vec<usize> = (0..m).collect();
            let mut maps = Vec::new();
            while next_permutation(&mut perm) {
                // new label of old vertex v is perm[v]
                let mut inverse = vec![0; m];
                for (v, &p) in perm.iter().enumerate() {
                    inverse[p] = v;
                }
                let map: Vec<u8> = (0..complete_edges(m))
                    .map(|t| {
                        let (i, j) = edge_endpoints(t);
                        edge_index(inverse[i], inverse[j]) as u8
                    })
                    .collect();
                maps.push(map);
            }
            perm_maps[m] = maps;
        }
        let mut remaining_degree = vec![[0u8; MAX_ORDER]; edges + 1];
        for t in (0..edges).rev() {
            let mut row = remaining_degree[t + 1];
            let (i, j) = edge_endpoints(t);
            row[i] += 1;
            row[j] += 1;
            remaining_degree[t] = row;
        }
        Ok(Problem { n, edges, ends, watch, stride, boundary, perm_maps, remaining_degree })
    }
}

struct Shared {
    deadline: Option<Instant>,
    node_limit: Option<u64>,
    nodes: AtomicU64,
    timed_out: AtomicBool,
    /// Lowest task index that found a solution.
    best_task: AtomicUsize,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Flow {
    Found,
    Exhausted,
    Abort,
}

#[derive(Clone)]
struct State {
    colors: [u8; MAX_EDGES],
    common: [u16; MAX_EDGES],
    used: usize,
}

struct Worker<'a> {
    p: &'a Problem,
    shared: &'a Shared,
    s: State,
    k: usize,
    star_need: usize,
    task: usize,
    local_nodes: u64,
    /// When set, stop at this depth and record the prefix.
    split: Option<(usize, &'a mut Vec<State>)>,
}

impl Worker<'_> {
    fn should_stop(&mut self) -> bool {
        if self.shared.timed_out.load(Ordering::Relaxed) || self.shared.best_task.load(Ordering::Relaxed) < self.task {
            return true;
        }
        let total = self.shared.nodes.fetch_add(self.local_nodes, Ordering::Relaxed) + self.local_nodes;
        self.local_nodes = 0;
        let over_nodes = self.shared.node_limit.is_some_and(|l| total > l);
        let over_time = self.shared.deadline.is_some_and(|d| Instant::now() > d);
        if over_nodes || over_time {
            self.shared.timed_out.store(true, Ordering::Relaxed);
            return true;
        }
        false
    }

    fn lexmin_prefix(&self, m: usize) -> bool {
        let colors = &self.s.colors;
        let len = complete_edges(m);
        for map in &self.p.perm_maps[m] {
            let mut relabel = [u8::MAX; MAX_EDGES];
            let mut next = 0u8;
            for t in 0..len {
                let old = colors[map[t] as usize] as usize;
                if relabel[old] == u8::MAX {
                    relabel[old] = next;
                    next += 1;
                }
                let r = relabel[old];
                if r < colors[t] {
                    return false;
                }
                if r > colors[t] {
                    break;
                }
            }
        }
        true
    }

    fn star_bound_ok(&self, t: usize) -> bool {
        if self.star_need == 0 {
            return true;
        }
        let mut unique = [0usize; MAX_ORDER];
        for c in 0..self.s.used {
            let mut m = self.s.common[c];
            while m != 0 {
                unique[m.trailing_zeros() as usize] += 1;
                m &= m - 1;
            }
        }
        let rem = &self.p.remaining_degree[t];
        (0..self.p.n).all(|u| unique[u] + rem[u] as usize >= self.star_need)
    }

    fn dfs(&mut self, t: usize) -> Flow {
        let p = self.p;
        if let Some((depth, ref mut out)) = self.split {
            if t == depth {
                out.push(self.s.clone());
                return Flow::Exhausted;
            }
        }
        if t == p.edges {
            return if self.s.used >= self.k { Flow::Found } else { Flow::Exhausted };
        }
        self.local_nodes += 1;
        if self.local_nodes >= 1024 && self.should_stop() {
            return Flow::Abort;
        }
        let remaining = p.edges - t;
        if self.s.used + remaining < self.k || !self.star_bound_ok(t) {
            return Flow::Exhausted;
        }

        // colours the edge may take without completing a rainbow copy
        let mut allowed = u128::MAX;
        let mut fresh_ok = true;
        if p.stride > 0 {
            for others in p.watch[t].chunks_exact(p.stride) {
                let mut seen = 0u128;
                let mut repeat = false;
                for &e in others {
                    let bit = 1u128 << self.s.colors[e as usize];
                    if seen & bit != 0 {
                        repeat = true;
                        break;
                    }
                    seen |= bit;
                }
                if !repeat {
                    allowed &= seen;
                    fresh_ok = false;
                }
            }
        }
        if !fresh_ok && self.s.used + remaining - 1 < self.k {
            return Flow::Exhausted;
        }
        let ends = p.ends[t];
        let boundary = p.boundary[t];

        if fresh_ok {
            let c = self.s.used;
            self.s.colors[t] = c as u8;
            self.s.common[c] = ends;
            self.s.used += 1;
            let flow = if boundary == 0 || self.lexmin_prefix(boundary) { self.dfs(t + 1) } else { Flow::Exhausted };
            self.s.used -= 1;
            if flow != Flow::Exhausted {
                return flow;
            }
        }
        let mut options = allowed & ((1u128 << self.s.used) - 1);
        while options != 0 {
            let c = options.trailing_zeros() as usize;
            options &= options - 1;
            self.s.colors[t] = c as u8;
            let saved = self.s.common[c];
            self.s.common[c] &= ends;
            let flow = if boundary == 0 || self.lexmin_prefix(boundary) { self.dfs(t + 1) } else { Flow::Exhausted };
            self.s.common[c] = saved;
            if flow != Flow::Exhausted {
                return flow;
            }
        }
        Flow::Exhausted
    }
}

struct DecideRun {
    decision: Decision,
    nodes: u64,
}

fn default_split(n: usize) -> usize {
    complete_edges(n.saturating_sub(1).min(5))
}

/// Core decision: a colouring of `K_n` with at least `k` colours and no
/// rainbow target, with every vertex carrying at least `star_need` unique
/// colours.
fn decide_at_least(p: &Problem, k: usize, star_need: usize, cfg: &SearchConfig, deadline: Option<Instant>) -> DecideRun {
    let shared = Shared {
        deadline,
        node_limit: cfg.node_limit,
        nodes: AtomicU64::new(0),
        timed_out: AtomicBool::new(false),
        best_task: AtomicUsize::new(usize::MAX),
    };
    let empty = State { colors: [0; MAX_EDGES], common: [0; MAX_EDGES], used: 0 };
    let depth = cfg.split_depth.unwrap_or_else(|| default_split(p.n)).min(p.edges);

    let mut prefixes = Vec::new();
    let flow = {
        let mut w = Worker { p, shared: &shared, s: empty.clone(), k, star_need, task: 0, local_nodes: 0, split: Some((depth, &mut prefixes)) };
        let flow = w.dfs(0);
        shared.nodes.fetch_add(w.local_nodes, Ordering::Relaxed);
        flow
    };
    if flow == Flow::Abort {
        return DecideRun { decision: Decision::Unknown, nodes: shared.nodes.load(Ordering::Relaxed) };
    }
    if depth == p.edges {
        // the split pass reached full depth: prefixes are complete colourings
        let found = prefixes.into_iter().find(|s| s.used >= k);
        let decision = match found {
            Some(s) => Decision::Feasible(normalize(&s.colors[..p.edges], p.n).expect("length")),
            None => Decision::Infeasible,
        };
        return DecideRun { decision, nodes: shared.nodes.load(Ordering::Relaxed) };
    }

    let run_task = |(task, state): (usize, &State)| -> Option<(usize, Vec<u8>)> {
        if shared.best_task.load(Ordering::Relaxed) < task || shared.timed_out.load(Ordering::Relaxed) {
            return None;
        }
        let mut w = Worker { p, shared: &shared, s: state.clone(), k, star_need, task, local_nodes: 0, split: None };
        let flow = w.dfs(depth);
        shared.nodes.fetch_add(w.local_nodes, Ordering::Relaxed);
        if flow == Flow::Found {
            shared.best_task.fetch_min(task, Ordering::Relaxed);
            return Some((task, w.s.colors[..p.edges].to_vec()));
        }
        None
    };
    let workers = cfg.workers.max(1);
    let found: Vec<(usize, Vec<u8>)> = if workers == 1 {
        prefixes.iter().enumerate().filter_map(run_task).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(workers).build().expect("thread pool");
        pool.install(|| prefixes.par_iter().enumerate().filter_map(run_task).collect())
    };
    let nodes = shared.nodes.load(Ordering::Relaxed);
    if let Some((_, colors)) = found.into_iter().min_by_key(|(task, _)| *task) {
        return DecideRun { decision: Decision::Feasible(normalize(&colors, p.n).expect("length")), nodes };
    }
    let decision = if shared.timed_out.load(Ordering::Relaxed) { Decision::Unknown } else { Decision::Infeasible };
    DecideRun { decision, nodes }
}

fn check_target(n: usize, target: &SmallGraph) -> Result<()> {
    if target.order() > n {
        return Err(Error::TargetTooLarge { target: target.order(), host: n });
    }
    if target.isolated_count() > 0 {
        return Err(Error::IsolatedVertices);
    }
    Ok(())
}

/// A `k`-colouring of `K_n` with no rainbow `target`, or a proof that none
/// exists, or `Unknown` when the budget runs out.
pub fn decide_colorable(n: usize, target: &SmallGraph, k: usize, cfg: &SearchConfig) -> Result<Decision> {
    check_target(n, target)?;
    let edges = complete_edges(n);
    if k == 0 || k > edges {
        return Err(Error::ParameterOutOfRange { name: "colors".into(), detail: format!("need 1 <= k <= {edges}") });
    }
    if target.size() < 2 {
        return Ok(Decision::Infeasible);
    }
    let p = Problem::new(n, target)?;
    let start = Instant::now();
    let run = decide_at_least(&p, k, 0, cfg, cfg.deadline(start));
    Ok(match run.decision {
        Decision::Feasible(c) => Decision::Feasible(reduce_to(c, k)),
        other => other,
    })
}

/// Merges colour classes until exactly `k` remain; merging never creates a
/// rainbow copy.
fn reduce_to(mut c: EdgeColoring, k: usize) -> EdgeColoring {
    while c.color_count() > k {
        let last = (c.color_count() - 1) as u8;
        c = c.merge(0, last);
    }
    c
}

/// Result of computing `f(m, H)` for every `m` up to `n`.
#[derive(Clone, Debug)]
pub struct AntiRamseyChain {
    /// `(m, outcome)` for `m = p..=n`.
    pub levels: Vec<(usize, SearchOutcome)>,
}

/// `f(m, H)` for `m = |V(H)|..=n`, each level feeding the unique-colour bound
/// of the next.
pub fn f_chain(n: usize, target: &SmallGraph, cfg: &SearchConfig) -> Result<AntiRamseyChain> {
    check_target(n, target)?;
    let start = Instant::now();
    let deadline = cfg.deadline(start);
    let p_order = target.order();
    let mut levels = Vec::new();
    if target.size() < 2 {
        // every colouring has a rainbow single edge; by convention f = 1
        for m in p_order.max(2)..=n {
            let mono = normalize(&vec![0u8; complete_edges(m)], m)?;
            levels.push((m, SearchOutcome {
                quantity: Quantity::AntiRamsey,
                value: 1,
                witness: Witness::Coloring(mono),
                nodes_explored: 0,
                elapsed: start.elapsed(),
                status: Status::Exact,
            }));
        }
        return Ok(AntiRamseyChain { levels });
    }
    // K_{p-1} holds no copy, so all its edges may be distinct
    let mut previous: Option<usize> = Some(complete_edges(p_order - 1));
    for m in p_order..=n {
        let level_start = Instant::now();
        let problem = Problem::new(m, target)?;
        let edges = complete_edges(m);
        let mut nodes = 0u64;
        let (mut best, mut witness) = match best_known_certificate(m, target) {
            Some(cert) if cert.verify().is_ok() => (cert.coloring.color_count(), cert.coloring),
            _ => (1, normalize(&vec![0u8; edges], m)?),
        };
        let mut status = Status::Exact;
        loop {
            let k = best + 1;
            if k > edges {
                break;
            }
            let need = previous.filter(|_| cfg.unique_color_bound).map_or(0, |f_prev| k.saturating_sub(f_prev));
            if cfg.verbose {
                eprintln!("[rbn] n={m} trying k={k} (unique-colour bound {need})");
            }
            let run = decide_at_least(&problem, k, need, cfg, deadline);
            nodes += run.nodes;
            match run.decision {
                Decision::Feasible(c) => {
                    debug_assert!(c.color_count() >= k);
                    best = c.color_count();
                    witness = c;
                }
                Decision::Infeasible => break,
                Decision::Unknown => {
                    status = Status::LowerBoundOnly;
                    break;
                }
            }
        }
        if cfg.verbose {
            eprintln!("[rbn] n={m} f={best} ({status:?}, {nodes} nodes, {:.2?})", level_start.elapsed());
        }
        previous = (status == Status::Exact).then_some(best);
        levels.push((m, SearchOutcome {
            quantity: Quantity::AntiRamsey,
            value: best as u64,
            witness: Witness::Coloring(witness),
            nodes_explored: nodes,
            elapsed: level_start.elapsed(),
            status,
        }));
    }
    Ok(AntiRamseyChain { levels })
}

/// `f(n, H)`: the largest number of colours on `K_n` with no rainbow `H`.
pub fn f_exact(n: usize, target: &SmallGraph, cfg: &SearchConfig) -> Result<SearchOutcome> {
    let start = Instant::now();
    let chain = f_chain(n, target, cfg)?;
    let nodes: u64 = chain.levels.iter().map(|(_, o)| o.nodes_explored).sum();
    let (_, mut last) = chain.levels.into_iter().last().ok_or(Error::TargetTooLarge { target: target.order(), host: n })?;
    last.nodes_explored = nodes;
    last.elapsed = start.elapsed();
    Ok(last)
}

/// `rb(n, H) = f(n, H) + 1`.
pub fn rb_exact(n: usize, target: &SmallGraph, cfg: &SearchConfig) -> Result<SearchOutcome> {
    let mut out = f_exact(n, target, cfg)?;
    out.quantity = Quantity::Rainbow;
    out.value += 1;
    Ok(out)
}

/// Confirms a colouring has `colors` colours and no rainbow `target`.
pub fn witness_is_valid(c: &EdgeColoring, target: &SmallGraph, colors: usize) -> bool {
    if c.color_count() != colors {
        return false;
    }
    match enumerate_copies(c.n(), target) {
        Ok(table) => find_rainbow_copy(c, &table).is_none(),
        Err(_) => false,
    }
}

// ---------------------------------------------------------------------------
// Turán search
// ---------------------------------------------------------------------------

fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    for i in (0..k).rev() {
        if comb[i] < n - k + i {
            comb[i] += 1;
            for j in i + 1..k {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

enum Generated {
    Done(Vec<SmallGraph>, u64),
    TimedOut(u64),
}

/// All `family`-free graphs of order `n` with at least `threshold` edges, up
/// to isomorphism. Every such graph loses at most `floor(2e/n)` edges when a
/// minimum-degree vertex is deleted, so its parent clears the threshold of
/// the previous level, and the deleted vertex can be re-added as a vertex of
/// minimum degree.
fn generate(n: usize, threshold: usize, family: &ForbiddenFamily, deadline: Option<Instant>) -> Result<Generated> {
    // members that fit into n vertices, isolated vertices dropped, so every
    // intermediate level is checked against what the final graph must avoid
    let cores: Vec<SmallGraph> = family.members().iter().filter(|h| h.order() <= n).map(|h| h.without_isolated()).collect();
    let core_family = ForbiddenFamily::new(cores);
    let family = &core_family;
    let mut th = vec![0usize; n + 1];
    th[n] = threshold;
    for j in (2..=n).rev() {
        th[j - 1] = th[j] - 2 * th[j] / j;
    }
    let mut level: Vec<SmallGraph> = vec![SmallGraph::new(1)?].into_iter().filter(|g| family.is_free(g)).collect();
    let mut nodes = 0u64;
    if n == 1 {
        return Ok(Generated::Done(level.into_iter().filter(|g| g.size() >= threshold).collect(), 0));
    }
    for (j, &floor) in th.iter().enumerate().skip(2) {
        let v = j - 1;
        let mut next: HashMap<CanonicalCode, SmallGraph> = HashMap::new();
        for parent in &level {
            if deadline.is_some_and(|d| Instant::now() > d) {
                return Ok(Generated::TimedOut(nodes));
            }
            let e = parent.size();
            let base = parent.with_extra_vertices(1)?;
            let min_deg = (0..v).map(|u| parent.degree(u)).min().unwrap_or(0);
            let lo = floor.saturating_sub(e);
            let hi = (min_deg + 1).min(v);
            for d in lo..=hi {
                let mut comb: Vec<usize> = (0..d).collect();
                loop {
                    nodes += 1;
                    // new vertex must have minimum degree in the child
                    let nbrs = comb.iter().fold(0u16, |m, &u| m | 1 << u);
                    let fits = (0..v).all(|u| parent.degree(u) + (nbrs >> u & 1) as usize >= d);
                    if fits {
                        let mut child = base;
                        for &u in &comb {
                            child.add_edge(u, v)?;
                        }
                        if family.members().iter().all(|h| !crate::graphs::contains_subgraph_through(&child, h, v)) {
                            let code = canonical_code(&child);
                            next.entry(code).or_insert(child);
                        }
                    }
                    if d == 0 || !next_combination(&mut comb, v) {
                        break;
                    }
                }
            }
        }
        level = next.into_values().collect();
    }
    Ok(Generated::Done(level.into_iter().filter(|g| g.size() >= threshold).collect(), nodes))
}

/// `ext(n, F)`: the maximum number of edges of an `F`-free graph on `n`
/// vertices, with a witness in canonical form.
pub fn turan_exact(n: usize, family: &ForbiddenFamily, cfg: &SearchConfig) -> Result<SearchOutcome> {
    if n > MAX_ORDER || n == 0 {
        return Err(Error::ParameterOutOfRange { name: "turan".into(), detail: format!("need 1 <= n <= {MAX_ORDER}") });
    }
    let start = Instant::now();
    let deadline = cfg.deadline(start);
    let mut previous: Option<(u64, SmallGraph)> = None;
    let mut nodes = 0u64;
    for m in 1..=n {
        let cap = complete_edges(m) as u64;
        let upper = match (&previous, m) {
            (Some((ext_prev, _)), m) if m >= 3 => cap.min(*ext_prev * m as u64 / (m as u64 - 2)),
            _ => cap,
        };
        let mut found = None;
        let mut threshold = upper as usize;
        loop {
            match generate(m, threshold, family, deadline)? {
                Generated::Done(graphs, used) => {
                    nodes += used;
                    if let Some(best) = graphs
                        .iter()
                        .map(|g| (std::cmp::Reverse(g.size()), canonical_code(g)))
                        .min()
                    {
                        found = Some((best.0 .0 as u64, best.1.graph()));
                        break;
                    }
                }
                Generated::TimedOut(used) => {
                    nodes += used;
                    break;
                }
            }
            if threshold == 0 {
                break;
            }
            threshold -= 1;
        }
        match found {
            Some((value, graph)) => {
                if cfg.verbose {
                    eprintln!("[rbn] ext({m}) = {value}");
                }
                previous = Some((value, graph));
            }
            None => {
                // budget exhausted: report the best graph we can certify
                let fallback = previous
                    .as_ref()
                    .and_then(|(_, g)| g.with_extra_vertices(n - g.order()).ok())
                    .filter(|g| family.is_free(g))
                    .unwrap_or(SmallGraph::new(n)?);
                return Ok(SearchOutcome {
                    quantity: Quantity::Turan,
                    value: fallback.size() as u64,
                    witness: Witness::Graph(canonical_form(&fallback)),
                    nodes_explored: nodes,
                    elapsed: start.elapsed(),
                    status: Status::LowerBoundOnly,
                });
            }
        }
    }
    let (value, graph) = previous.expect("n >= 1");
    Ok(SearchOutcome {
        quantity: Quantity::Turan,
        value,
        witness: Witness::Graph(graph),
        nodes_explored: nodes,
        elapsed: start.elapsed(),
        status: Status::Exact,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{minus_edge_family, Target};

    fn g(name: &str) -> SmallGraph {
        name.parse::<Target>().unwrap().graph
    }

    fn cfg() -> SearchConfig {
        SearchConfig { timeout: Some(Duration::from_secs(120)), workers: 1, ..SearchConfig::default() }
    }

    fn family(names: &[&str]) -> ForbiddenFamily {
        ForbiddenFamily::new(names.iter().map(|n| g(n)))
    }

    #[test]
    fn decide_small_bull() {
        let bull = g("bull");
        match decide_colorable(5, &bull, 5, &cfg()).unwrap() {
            Decision::Feasible(c) => assert!(witness_is_valid(&c, &bull, 5)),
            other => panic!("expected a colouring, got {other:?}"),
        }
        assert_eq!(decide_colorable(5, &bull, 6, &cfg()).unwrap(), Decision::Infeasible);
        match decide_colorable(6, &bull, 1, &cfg()).unwrap() {
            Decision::Feasible(c) => assert_eq!(c.color_count(), 1),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn decide_rejects_bad_k() {
        assert!(decide_colorable(5, &g("bull"), 0, &cfg()).is_err());
        assert!(decide_colorable(5, &g("bull"), 11, &cfg()).is_err());
        assert!(decide_colorable(4, &g("bull"), 2, &cfg()).is_err());
    }

    #[test]
    fn exact_small_values() {
        assert_eq!(f_exact(5, &g("diamond"), &cfg()).unwrap().value, 6);
        assert_eq!(rb_exact(4, &g("diamond"), &cfg()).unwrap().value, 5);
        assert_eq!(f_exact(5, &g("K2,3"), &cfg()).unwrap().value, 7);
        assert_eq!(rb_exact(5, &g("bull"), &cfg()).unwrap().value, 6);
        for n in 2..6 {
            assert_eq!(rb_exact(n, &g("K2"), &cfg()).unwrap().value, 2);
        }
    }

    #[test]
    fn witnesses_are_valid() {
        for (n, name) in [(5, "diamond"), (5, "house"), (5, "C4"), (6, "C3")] {
            let h = g(name);
            let out = f_exact(n, &h, &cfg()).unwrap();
            assert!(out.is_exact());
            assert!(witness_is_valid(out.coloring().unwrap(), &h, out.value as usize), "{name} n={n}");
        }
    }

    #[test]
    fn timeout_is_unknown_not_infeasible() {
        let tight = SearchConfig { node_limit: Some(10), workers: 1, split_depth: Some(3), ..SearchConfig::default() };
        let p = Problem::new(6, &g("house")).unwrap();
        let run = decide_at_least(&p, 9, 0, &tight, None);
        assert_eq!(run.decision, Decision::Unknown);
        let out = f_exact(6, &g("house"), &tight).unwrap();
        assert_eq!(out.status, Status::LowerBoundOnly);
    }

    #[test]
    fn monotone_feasibility() {
        // feasible at k implies feasible at k - 1
        for (n, name) in [(5, "bull"), (5, "diamond"), (6, "C4")] {
            let h = g(name);
            let f = f_exact(n, &h, &cfg()).unwrap().value as usize;
            for k in 1..=f {
                assert!(matches!(decide_colorable(n, &h, k, &cfg()).unwrap(), Decision::Feasible(_)), "{name} {k}");
            }
            assert_eq!(decide_colorable(n, &h, f + 1, &cfg()).unwrap(), Decision::Infeasible);
        }
    }

    #[test]
    fn workers_do_not_change_results() {
        let h = g("diamond");
        let one = f_exact(6, &h, &cfg()).unwrap();
        let four = f_exact(6, &h, &cfg().with_workers(4)).unwrap();
        assert_eq!(one.value, four.value);
        assert_eq!(one.witness, four.witness);
    }

    #[test]
    fn turan_small_values() {
        let c3c4 = family(&["C3", "C4"]);
        let values: Vec<u64> = (4..=8).map(|n| turan_exact(n, &c3c4, &cfg()).unwrap().value).collect();
        assert_eq!(values, vec![3, 5, 6, 8, 10]);
        assert_eq!(turan_exact(6, &family(&["paw", "C4"]), &cfg()).unwrap().value, 6);
        // Mantel: ext(n, C3) = floor(n^2 / 4)
        for n in 2..=8 {
            assert_eq!(turan_exact(n, &family(&["C3"]), &cfg()).unwrap().value, (n * n / 4) as u64);
        }
    }

    #[test]
    fn turan_witness_is_free_and_tight() {
        let fam = minus_edge_family(&g("bull")).unwrap();
        let out = turan_exact(6, &fam, &cfg()).unwrap();
        let w = out.graph().unwrap();
        assert_eq!(w.size() as u64, out.value);
        assert!(fam.is_free(w));
    }

    #[test]
    fn turan_matches_brute_force_on_six_vertices() {
        // oracle: scan every labeled graph on six vertices
        for names in [&["C3", "C4"][..], &["paw", "C4"], &["bull"], &["K2,3"], &["P4"]] {
            let fam = family(names);
            let brute = (0u128..1 << 15)
                .map(|e| SmallGraph::from_edge_set(6, e).unwrap())
                .filter(|gr| fam.is_free(gr))
                .map(|gr| gr.size() as u64)
                .max()
                .unwrap();
            assert_eq!(turan_exact(6, &fam, &cfg()).unwrap().value, brute, "{names:?}");
        }
    }
}
