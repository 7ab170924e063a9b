//! Explicit lower-bound colourings. Each generator returns a [`Certificate`]
//! whose colouring has no rainbow copy of its target.
//!
//! Clique parts occupy consecutive vertex ranges from 0 in the order given.

use std::time::Duration;

use crate::coloring::{find_rainbow_copy, EdgeColoring};
use crate::embeddings::{enumerate_copies, is_isomorphic};
use crate::error::{Error, Result};
use crate::graphs::{complete_edges, edge_endpoints, resolve, ForbiddenFamily, GraphName, SmallGraph, Target};
use crate::search::{turan_exact, SearchConfig};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub n: usize,
    pub target: Target,
    pub coloring: EdgeColoring,
    pub claimed_colors: usize,
    pub construction_tag: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    ClaimMismatch { claimed: usize, actual: usize },
    /// A rainbow copy of the target, given by its vertex set and edges.
    RainbowCopy { vertices: Vec<usize>, edges: Vec<(usize, usize)> },
}

impl Certificate {
    pub fn new(target: Target, coloring: EdgeColoring, tag: impl Into<String>) -> Certificate {
        Certificate { n: coloring.n(), claimed_colors: coloring.color_count(), target, coloring, construction_tag: tag.into() }
    }

    /// Checks the claimed colour count, then scans every copy of the target.
    pub fn check(&self) -> Result<Verdict> {
        if self.claimed_colors != self.coloring.color_count() {
            return Ok(Verdict::ClaimMismatch { claimed: self.claimed_colors, actual: self.coloring.color_count() });
        }
        let table = enumerate_copies(self.n, &self.target.graph)?;
        Ok(match find_rainbow_copy(&self.coloring, &table) {
            None => Verdict::Valid,
            Some(copy) => Verdict::RainbowCopy {
                vertices: copy.vertex_list(),
                edges: copy.edge_indices().into_iter().map(edge_endpoints).collect(),
            },
        })
    }

    /// `Ok(())` for a valid certificate; the failing verdict is reported as
    /// a construction error.
    pub fn verify(&self) -> Result<()> {
        match self.check()? {
            Verdict::Valid => Ok(()),
            other => Err(Error::Construction(format!("certificate rejected: {other:?}"))),
        }
    }
}

fn named(name: GraphName) -> Target {
    Target::named(name).expect("catalog graph")
}

/// Rainbow-colours the edges of `g` and gives every other edge of `K_n`
/// one extra colour.
pub fn rainbow_graph_plus_one(g: &SmallGraph, target: Target, tag: impl Into<String>) -> Result<Certificate> {
    let n = g.order();
    let raw: Vec<usize> = (0..complete_edges(n))
        .map(|t| {
            let (i, j) = edge_endpoints(t);
            if g.has_edge(i, j) {
                t + 1
            } else {
                0
            }
        })
        .collect();
    let coloring = crate::coloring::normalize(&raw, n)?;
    Ok(Certificate::new(target, coloring, tag))
}

fn parts_tag(parts: &[usize]) -> String {
    let sizes: Vec<String> = parts.iter().map(usize::to_string).collect();
    format!("cliques={}", sizes.join(","))
}

/// Disjoint cliques of the given sizes, each rainbow with fresh colours, and
/// one shared colour on all other edges: `sum C(s, 2) + 1` colours.
pub fn disjoint_cliques_plus_one(n: usize, parts: &[usize], target: Target) -> Result<Certificate> {
    if parts.contains(&0) {
        return Err(Error::Construction("clique sizes must be positive".into()));
    }
    let total: usize = parts.iter().sum();
    if total > n {
        return Err(Error::Construction(format!("parts {parts:?} need {total} vertices but n = {n}")));
    }
    let mut g = SmallGraph::new(n)?;
    let mut start = 0;
    for &s in parts {
        for i in start..start + s {
            for j in i + 1..start + s {
                g.add_edge(i, j)?;
            }
        }
        start += s;
    }
    rainbow_graph_plus_one(&g, target, parts_tag(parts))
}

/// Vertex-disjoint cycles covering `K_n`: `floor(n/3) - r` triangles and
/// `r = n mod 3` four-cycles, all `n` cycle edges rainbow, one more colour
/// elsewhere. `n + 1` colours and no rainbow bull.
pub fn bull_cycle_partition(n: usize) -> Result<Certificate> {
    if n < 6 {
        return Err(Error::Construction(format!("cycle partition needs n >= 6, got {n}")));
    }
    let r = n % 3;
    let mut lengths = vec![3; n / 3 - r];
    lengths.extend(std::iter::repeat_n(4, r));
    let mut g = SmallGraph::new(n)?;
    let mut start = 0;
    for len in lengths {
        for i in 0..len {
            g.add_edge(start + i, start + (i + 1) % len)?;
        }
        start += len;
    }
    rainbow_graph_plus_one(&g, named(GraphName::Bull), "cycle-partition")
}

/// Blocks of `k - 1` vertices (the last one possibly smaller), each rainbow;
/// every edge from block `i` to a later block gets colour `i`. A cycle that
/// leaves a block crosses out of its lowest block twice, so no `C_k` (and no
/// `C_k^+`) is rainbow. Uses `rb(n, C_k) - 1` colours.
pub fn cycle_blocks(n: usize, k: usize, target: Target) -> Result<Certificate> {
    if k < 3 || n < k {
        return Err(Error::Construction(format!("cycle blocks need n >= k >= 3, got n = {n}, k = {k}")));
    }
    let block = |v: usize| v / (k - 1);
    let mut next = complete_edges(n);
    let mut inside = vec![usize::MAX; complete_edges(n)];
    for (t, slot) in inside.iter_mut().enumerate() {
        let (i, j) = edge_endpoints(t);
        if block(i) == block(j) {
            *slot = next;
            next += 1;
        }
    }
    let raw: Vec<usize> = (0..complete_edges(n))
        .map(|t| {
            let (i, j) = edge_endpoints(t);
            if block(i) == block(j) {
                inside[t]
            } else {
                block(i.min(j))
            }
        })
        .collect();
    let coloring = crate::coloring::normalize(&raw, n)?;
    Ok(Certificate::new(target, coloring, format!("cycle-blocks={k}")))
}

/// Hand colourings for `K_{2,3}`.
///
/// `n = 6`: rainbow `K_4` on `0..4` (6 colours), `c(4,5)`, `c(4,i)` and
/// `c(5,i)` for `i < 4` one colour each: 9 colours.
/// `n = 7`: rainbow `K_3` on `0..3` and rainbow `K_4` on `3..7`, `c(0,i)`
/// one colour and `c(1,i) = c(2,i)` another for `i` in the `K_4`: 11 colours.
pub fn k23_special(n: usize) -> Result<Certificate> {
    let coloring = match n {
        6 => EdgeColoring::from_fn(6, |i, j| match (i, j) {
            (i, j) if j < 4 => crate::graphs::edge_index(i, j),
            (4, 5) => 6,
            (_, 4) => 7,
            _ => 8,
        }),
        7 => EdgeColoring::from_fn(7, |i, j| match (i, j) {
            (i, j) if j < 3 || i >= 3 => crate::graphs::edge_index(i, j),
            (0, _) => 100,
            _ => 101,
        }),
        _ => return Err(Error::Construction(format!("k23-special exists for n = 6 and n = 7, not {n}"))),
    };
    Ok(Certificate::new(named(GraphName::CompleteBipartite(2, 3)), coloring, "k23-special"))
}

/// An extremal `family`-free graph on `n` vertices, rainbow, plus one
/// colour: `ext(n, family) + 1` colours.
pub fn extremal_plus_one(n: usize, family: &ForbiddenFamily, target: Target, cfg: &SearchConfig) -> Result<Certificate> {
    let outcome = turan_exact(n, family, cfg)?;
    if !outcome.is_exact() {
        return Err(Error::Timeout);
    }
    let g = outcome.graph().expect("Turán witness");
    rainbow_graph_plus_one(g, target, "extremal-plus-one")
}

/// The strongest built-in lower-bound colouring for `(n, target)`, if any.
pub fn best_known_certificate(n: usize, target: &SmallGraph) -> Option<Certificate> {
    let is = |name| resolve(name).is_ok_and(|g| is_isomorphic(&g, target));
    let cert = if is(GraphName::Bull) {
        match n {
            5 => disjoint_cliques_plus_one(5, &[3, 2], named(GraphName::Bull)).ok(),
            n if n >= 6 => bull_cycle_partition(n).ok(),
            _ => None,
        }
    } else if is(GraphName::CompleteBipartite(2, 3)) {
        let t = named(GraphName::CompleteBipartite(2, 3));
        match n {
            5 => disjoint_cliques_plus_one(5, &[4, 1], t).ok(),
            6 | 7 => k23_special(n).ok(),
            8 => disjoint_cliques_plus_one(8, &[4, 4], t).ok(),
            _ => None,
        }
    } else if is(GraphName::House) && (5..=8).contains(&n) {
        disjoint_cliques_plus_one(n, &[4, n - 4], named(GraphName::House)).ok()
    } else if is(GraphName::Diamond) && (4..=8).contains(&n) {
        let family = ForbiddenFamily::new([resolve(GraphName::Cycle(3)).ok()?, resolve(GraphName::Cycle(4)).ok()?]);
        let cfg = SearchConfig { timeout: Some(Duration::from_secs(10)), ..SearchConfig::default() };
        extremal_plus_one(n, &family, named(GraphName::Diamond), &cfg).ok()
    } else {
        let core = target.two_core();
        let k = core.count_ones() as usize;
        let unicyclic = crate::graphs::cyclomatic(target) == 1 && target.is_connected();
        // C_k or C_k^+
        if unicyclic && k >= 3 && (k == target.order() || (k + 1 == target.order() && n > k)) {
            cycle_blocks(n, k, Target::literal(*target)).ok()
        } else {
            None
        }
    }?;
    // the caller's labelling of the target is what gets checked
    let cert = Certificate { target: Target { label: cert.target.label.clone(), graph: *target }, ..cert };
    (n >= target.order()).then_some(cert)
}
