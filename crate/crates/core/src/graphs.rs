//! Small simple graphs: representation, the catalog of named graphs,
//! structural measures and the one-edge-deleted family `{H - e}`.
//!
//! Vertices are `0..order` with `order <= 16`. Edges of `K_n` are indexed by
//! `edge_index(i, j) = j * (j - 1) / 2 + i` for `i < j`; this order is frozen
//! because certificates store colors in it.

use std::fmt;
use std::str::FromStr;

use crate::embeddings::canonical_code;
use crate::error::{Error, Result};

/// Largest order a [`SmallGraph`] can hold (Turán hosts).
pub const MAX_ORDER: usize = 16;
/// Largest order accepted for target graphs and rainbow hosts.
pub const MAX_TARGET_ORDER: usize = 12;

/// Number of edges of `K_n`.
#[inline]
pub const fn complete_edges(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Canonical index of the edge `{i, j}`.
#[inline]
pub fn edge_index(i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// Inverse of [`edge_index`]: endpoints `(i, j)` with `i < j`.
pub fn edge_endpoints(t: usize) -> (usize, usize) {
    let mut j = 1;
    while complete_edges(j + 1) <= t {
        j += 1;
    }
    (t - complete_edges(j), j)
}

/// An undirected simple graph stored as per-vertex neighbour bitsets.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    order: u8,
    adj: [u16; MAX_ORDER],
}

impl SmallGraph {
    pub fn new(order: usize) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge { order, limit: MAX_ORDER });
        }
        Ok(SmallGraph { order: order as u8, adj: [0; MAX_ORDER] })
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SmallGraph::new(order)?;
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        let mut g = SmallGraph::new(n)?;
        let all = if n == 0 { 0 } else { (((1u32 << n) - 1) & 0xffff) as u16 };
        for v in 0..n {
            g.adj[v] = all & !(1 << v);
        }
        Ok(g)
    }

    /// Graph on `n` vertices whose edges are the set bits of `edges`
    /// (bit `t` is the edge with canonical index `t`).
    pub fn from_edge_set(n: usize, edges: u128) -> Result<Self> {
        let mut g = SmallGraph::new(n)?;
        let mut rest = edges;
        while rest != 0 {
            let t = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let (i, j) = edge_endpoints(t);
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order as usize
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj[..self.order()].iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        if a == b || a >= self.order() || b >= self.order() {
            return Err(Error::InvalidEdge(a, b));
        }
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
        Ok(())
    }

    pub fn remove_edge(&mut self, a: usize, b: usize) {
        if a < self.order() && b < self.order() {
            self.adj[a] &= !(1 << b);
            self.adj[b] &= !(1 << a);
        }
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.order() && self.adj[a] >> b & 1 == 1
    }

    /// Neighbour bitset of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u16 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges in canonical index order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for j in 1..self.order() {
            for i in 0..j {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Edge set as a bitset over canonical edge indices.
    pub fn edge_set(&self) -> u128 {
        self.edges().into_iter().fold(0u128, |acc, (i, j)| acc | 1u128 << edge_index(i, j))
    }

    pub fn complement(&self) -> SmallGraph {
        let mut g = *self;
        let n = self.order();
        let all = if n == 0 { 0 } else { (((1u32 << n) - 1) & 0xffff) as u16 };
        for v in 0..n {
            g.adj[v] = all & !self.adj[v] & !(1 << v);
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> SmallGraph {
        let mut g = SmallGraph { order: self.order, adj: [0; MAX_ORDER] };
        for (i, j) in self.edges() {
            g.adj[perm[i]] |= 1 << perm[j];
            g.adj[perm[j]] |= 1 << perm[i];
        }
        g
    }

    /// Adds `extra` isolated vertices.
    pub fn with_extra_vertices(&self, extra: usize) -> Result<SmallGraph> {
        let order = self.order() + extra;
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge { order, limit: MAX_ORDER });
        }
        let mut g = *self;
        g.order = order as u8;
        Ok(g)
    }

    pub fn isolated_count(&self) -> usize {
        (0..self.order()).filter(|&v| self.adj[v] == 0).count()
    }

    /// The same graph with isolated vertices removed and the rest relabeled
    /// in increasing order.
    pub fn without_isolated(&self) -> SmallGraph {
        let keep: Vec<usize> = (0..self.order()).filter(|&v| self.adj[v] != 0).collect();
        let mut pos = [usize::MAX; MAX_ORDER];
        for (k, &v) in keep.iter().enumerate() {
            pos[v] = k;
        }
        let mut g = SmallGraph { order: keep.len() as u8, adj: [0; MAX_ORDER] };
        for (i, j) in self.edges() {
            g.adj[pos[i]] |= 1 << pos[j];
            g.adj[pos[j]] |= 1 << pos[i];
        }
        g
    }

    /// Number of connected components (isolated vertices count).
    pub fn components(&self) -> usize {
        let n = self.order();
        let mut seen: u16 = 0;
        let mut count = 0;
        for start in 0..n {
            if seen >> start & 1 == 1 {
                continue;
            }
            count += 1;
            let mut frontier: u16 = 1 << start;
            seen |= frontier;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & !seen;
                seen |= fresh;
                frontier |= fresh;
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.order() > 0 && self.components() == 1
    }

    /// Vertices of the 2-core (repeatedly strip vertices of degree <= 1).
    pub fn two_core(&self) -> u16 {
        let n = self.order();
        let mut alive: u16 = if n == 0 { 0 } else { (((1u32 << n) - 1) & 0xffff) as u16 };
        loop {
            let strip = (0..n)
                .filter(|&v| alive >> v & 1 == 1 && (self.adj[v] & alive).count_ones() <= 1)
                .fold(0u16, |acc, v| acc | 1 << v);
            if strip == 0 {
                return alive;
            }
            alive &= !strip;
        }
    }

    /// Graph literal `p:i-j,i-j,...` with edges in canonical order.
    pub fn to_literal(&self) -> String {
        let edges: Vec<String> = self.edges().iter().map(|(i, j)| format!("{i}-{j}")).collect();
        format!("{}:{}", self.order(), edges.join(","))
    }

    /// Parses `p:i-j,...`; when `p <= 10` the compact form `p:ij,...` is
    /// accepted as well.
    pub fn parse_literal(s: &str) -> Result<SmallGraph> {
        let bad = |reason: &str| Error::GraphLiteral { literal: s.to_string(), reason: reason.to_string() };
        let (order, body) = s.split_once(':').ok_or_else(|| bad("missing `:`"))?;
        let order: usize = order.trim().parse().map_err(|_| bad("order is not a number"))?;
        let mut g = SmallGraph::new(order)?;
        for pair in body.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (a, b) = if let Some((a, b)) = pair.split_once('-') {
                (a.parse::<usize>().map_err(|_| bad("bad vertex"))?, b.parse::<usize>().map_err(|_| bad("bad vertex"))?)
            } else if order <= 10 && pair.len() == 2 && pair.bytes().all(|c| c.is_ascii_digit()) {
                let bytes = pair.as_bytes();
                ((bytes[0] - b'0') as usize, (bytes[1] - b'0') as usize)
            } else {
                return Err(bad("edge must be `i-j` (or `ij` when p <= 10)"));
            };
            g.add_edge(a, b).map_err(|_| bad("edge endpoint out of range or loop"))?;
        }
        Ok(g)
    }
}

impl fmt::Debug for SmallGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SmallGraph({})", self.to_literal())
    }
}

impl fmt::Display for SmallGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

/// Named graphs. Each resolves to a frozen labeling, see [`resolve`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphName {
    Bull,
    Diamond,
    House,
    /// `K_{s,t}`; covers `K_{2,3}` and `K_{2,4}`.
    CompleteBipartite(usize, usize),
    Cycle(usize),
    /// `C_k^+`: a `k`-cycle with one pendant edge.
    CyclePlus(usize),
    /// Path on `k` vertices.
    Path(usize),
    Complete(usize),
    /// `K_{1,k}`.
    Star(usize),
    /// `K_{1,3} + e` (the paw).
    StarPlusEdge,
    /// Triangle with a pendant path of two edges.
    Z2,
    /// Wheel on six vertices.
    Wheel5,
    /// Triangulated `C_5`.
    TriangulatedC5,
}

impl fmt::Display for GraphName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphName::Bull => f.write_str("bull"),
            GraphName::Diamond => f.write_str("diamond"),
            GraphName::House => f.write_str("house"),
            GraphName::CompleteBipartite(s, t) => write!(f, "K{s},{t}"),
            GraphName::Cycle(k) => write!(f, "C{k}"),
            GraphName::CyclePlus(k) => write!(f, "C{k}+"),
            GraphName::Path(k) => write!(f, "P{k}"),
            GraphName::Complete(k) => write!(f, "K{k}"),
            GraphName::Star(k) => write!(f, "K1,{k}"),
            GraphName::StarPlusEdge => f.write_str("K1,3+e"),
            GraphName::Z2 => f.write_str("Z2"),
            GraphName::Wheel5 => f.write_str("W5"),
            GraphName::TriangulatedC5 => f.write_str("TC5"),
        }
    }
}

impl FromStr for GraphName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let raw = s.trim();
        let key: String = raw
            .chars()
            .filter(|c| !matches!(c, '_' | '{' | '}' | ' '))
            .collect::<String>()
            .to_ascii_lowercase();
        let unknown = || Error::UnknownGraph(raw.to_string());
        let num = |t: &str| t.parse::<usize>().map_err(|_| unknown());
        let named = match key.as_str() {
            "bull" | "b" => Some(GraphName::Bull),
            "diamond" | "d" | "k4-e" => Some(GraphName::Diamond),
            "house" | "h" => Some(GraphName::House),
            "paw" | "k1,3+e" => Some(GraphName::StarPlusEdge),
            "z2" => Some(GraphName::Z2),
            "w5" | "wheel5" => Some(GraphName::Wheel5),
            "tc5" => Some(GraphName::TriangulatedC5),
            _ => None,
        };
        if let Some(name) = named {
            return Ok(name);
        }
        if let Some(rest) = key.strip_prefix('c') {
            return match rest.strip_suffix('+') {
                Some(k) => Ok(GraphName::CyclePlus(num(k)?)),
                None => Ok(GraphName::Cycle(num(rest)?)),
            };
        }
        if let Some(rest) = key.strip_prefix('p') {
            return Ok(GraphName::Path(num(rest)?));
        }
        if let Some(rest) = key.strip_prefix('k') {
            return match rest.split_once(',') {
                Some(("1", t)) => Ok(GraphName::Star(num(t)?)),
                Some((s, t)) => Ok(GraphName::CompleteBipartite(num(s)?, num(t)?)),
                None => Ok(GraphName::Complete(num(rest)?)),
            };
        }
        Err(unknown())
    }
}

/// Builds the named graph.
///
/// Frozen labelings:
/// - bull: triangle `0,1,2`, pendants `1-3` and `2-4`;
/// - diamond: `K_4` on `0..4` without the edge `2-3`;
/// - house: complement of the path `0-1-2-3-4`;
/// - `K_{s,t}`: parts `0..s` and `s..s+t`;
/// - `C_k`: edges `i-(i+1) mod k`; `C_k^+` adds the pendant `0-k`;
/// - `P_k`: edges `i-(i+1)`; `K_{1,k}`: centre `0`;
/// - `K_{1,3}+e`: centre `0`, leaves `1,2,3`, extra edge `1-2`;
/// - `Z_2`: triangle `0,1,2` and path `2-3-4`;
/// - `W_5`: rim `0..5`, hub `5`;
/// - `TC_5`: cycle `0..5` with chords `0-2`, `0-3`.
pub fn resolve(name: GraphName) -> Result<SmallGraph> {
    let out_of_range = |detail: &str| Error::ParameterOutOfRange { name: name.to_string(), detail: detail.to_string() };
    let cap = MAX_TARGET_ORDER;
    match name {
        GraphName::Bull => SmallGraph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]),
        GraphName::Diamond => SmallGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
        GraphName::House => Ok(resolve(GraphName::Path(5))?.complement()),
        GraphName::CompleteBipartite(s, t) => {
            if s == 0 || t == 0 || s + t > cap {
                return Err(out_of_range("need s, t >= 1 and s + t <= 12"));
            }
            let mut g = SmallGraph::new(s + t)?;
            for a in 0..s {
                for b in s..s + t {
                    g.add_edge(a, b)?;
                }
            }
            Ok(g)
        }
        GraphName::Cycle(k) => {
            if !(3..=cap).contains(&k) {
                return Err(out_of_range("need 3 <= k <= 12"));
            }
            let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
            SmallGraph::from_edges(k, &edges)
        }
        GraphName::CyclePlus(k) => {
            if !(3..cap).contains(&k) {
                return Err(out_of_range("need 3 <= k <= 11"));
            }
            let mut edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
            edges.push((0, k));
            SmallGraph::from_edges(k + 1, &edges)
        }
        GraphName::Path(k) => {
            if !(1..=cap).contains(&k) {
                return Err(out_of_range("need 1 <= k <= 12"));
            }
            let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
            SmallGraph::from_edges(k, &edges)
        }
        GraphName::Complete(k) => {
            if !(1..=cap).contains(&k) {
                return Err(out_of_range("need 1 <= k <= 12"));
            }
            SmallGraph::complete(k)
        }
        GraphName::Star(k) => {
            if !(1..cap).contains(&k) {
                return Err(out_of_range("need 1 <= k <= 11"));
            }
            let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
            SmallGraph::from_edges(k + 1, &edges)
        }
        GraphName::StarPlusEdge => SmallGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2)]),
        GraphName::Z2 => SmallGraph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)]),
        GraphName::Wheel5 => {
            let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
            edges.extend((0..5).map(|i| (i, 5)));
            SmallGraph::from_edges(6, &edges)
        }
        GraphName::TriangulatedC5 => {
            let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
            edges.extend([(0, 2), (0, 3)]);
            SmallGraph::from_edges(5, &edges)
        }
    }
}

/// A target graph together with the text it was given as.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Target {
    pub label: String,
    pub graph: SmallGraph,
}

impl Target {
    pub fn named(name: GraphName) -> Result<Self> {
        Ok(Target { label: name.to_string(), graph: resolve(name)? })
    }

    pub fn literal(graph: SmallGraph) -> Self {
        Target { label: graph.to_literal(), graph }
    }
}

impl FromStr for Target {
    type Err = Error;

    /// Accepts a catalog tag (`bull`, `C5`, `C5+`, `K2,3`, ...) or a graph literal.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.contains(':') {
            let graph = SmallGraph::parse_literal(s)?;
            if graph.order() > MAX_TARGET_ORDER {
                return Err(Error::OrderTooLarge { order: graph.order(), limit: MAX_TARGET_ORDER });
            }
            return Ok(Target::literal(graph));
        }
        Target::named(s.parse()?)
    }
}

/// Splits a comma separated list of graph names, keeping `K2,3` and
/// `K1,3+e` together.
pub fn split_graph_list(s: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for token in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let glue = token.chars().next().is_some_and(|c| c.is_ascii_digit())
            && out.last().is_some_and(|prev| {
                let p = prev.to_ascii_lowercase();
                p.starts_with('k') && !p.contains(',') && !p.contains(':')
            });
        match out.last_mut() {
            Some(prev) if glue => {
                prev.push(',');
                prev.push_str(token);
            }
            _ => out.push(token.to_string()),
        }
    }
    out
}

/// Cyclomatic number `|E| - |V| + c`, `c` the number of components.
pub fn cyclomatic(g: &SmallGraph) -> usize {
    g.size() + g.components() - g.order()
}

/// Nondecreasing degree list.
pub fn degree_sequence(g: &SmallGraph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    d.sort_unstable();
    d
}

/// A set of graphs pairwise non-isomorphic, sorted by
/// `(order, size, canonical code)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenFamily {
    members: Vec<SmallGraph>,
}

impl ForbiddenFamily {
    pub fn new(graphs: impl IntoIterator<Item = SmallGraph>) -> Self {
        let mut keyed: Vec<_> = graphs.into_iter().map(|g| ((g.order(), g.size(), canonical_code(&g)), g)).collect();
        keyed.sort_by_key(|a| a.0);
        keyed.dedup_by(|a, b| a.0 == b.0);
        ForbiddenFamily { members: keyed.into_iter().map(|(_, g)| g).collect() }
    }

    pub fn members(&self) -> &[SmallGraph] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Pairs `(a, b)` where member `a` is a subgraph of member `b`. Such a `b`
    /// is redundant for Turán purposes; reported, not rejected.
    pub fn redundancy_warnings(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, ga) in self.members.iter().enumerate() {
            for (b, gb) in self.members.iter().enumerate() {
                if a != b && contains_subgraph(gb, ga) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// True when `g` contains no member.
    pub fn is_free(&self, g: &SmallGraph) -> bool {
        self.members.iter().all(|h| !contains_subgraph(g, h))
    }
}

/// `{H - e : e in E(H)}` up to isomorphism. Isolated vertices created by the
/// deletion stay in the member graphs.
pub fn minus_edge_family(h: &SmallGraph) -> Result<ForbiddenFamily> {
    if h.size() == 0 {
        return Err(Error::Edgeless);
    }
    Ok(ForbiddenFamily::new(h.edges().into_iter().map(|(i, j)| {
        let mut g = *h;
        g.remove_edge(i, j);
        g
    })))
}

/// Backtracking monomorphism search from the non-isolated part of a pattern.
struct Matcher {
    /// Pattern vertices in matching order.
    order: Vec<usize>,
    /// For each position, the earlier positions adjacent to it.
    back: Vec<Vec<usize>>,
    degree: Vec<usize>,
}

impl Matcher {
    fn new(pattern: &SmallGraph, first: usize) -> Self {
        let n = pattern.order();
        let mut order = vec![first];
        let mut placed: u16 = 1 << first;
        while order.len() < n {
            let next = (0..n)
                .filter(|&v| placed >> v & 1 == 0)
                .max_by_key(|&v| ((pattern.neighbors(v) & placed).count_ones(), pattern.degree(v), std::cmp::Reverse(v)))
                .expect("unplaced vertex");
            order.push(next);
            placed |= 1 << next;
        }
        let back = (0..n)
            .map(|pos| (0..pos).filter(|&q| pattern.has_edge(order[pos], order[q])).collect())
            .collect();
        let degree = order.iter().map(|&v| pattern.degree(v)).collect();
        Matcher { order, back, degree }
    }

    fn extend(&self, host: &SmallGraph, image: &mut Vec<usize>, used: u16) -> bool {
        let pos = image.len();
        if pos == self.order.len() {
            return true;
        }
        let all = (((1u32 << host.order()) - 1) & 0xffff) as u16;
        let mut cand = all & !used;
        for &q in &self.back[pos] {
            cand &= host.neighbors(image[q]);
        }
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if host.degree(v) < self.degree[pos] {
                continue;
            }
            image.push(v);
            if self.extend(host, image, used | 1 << v) {
                return true;
            }
            image.pop();
        }
        false
    }
}

fn pattern_fits(g: &SmallGraph, h: &SmallGraph) -> Option<SmallGraph> {
    if g.order() < h.order() {
        return None;
    }
    let core = h.without_isolated();
    if core.size() > g.size() {
        return None;
    }
    Some(core)
}

/// Whether `g` has a (not necessarily induced) subgraph isomorphic to `h`.
/// Isolated vertices of `h` only require `g` to be large enough.
pub fn contains_subgraph(g: &SmallGraph, h: &SmallGraph) -> bool {
    let Some(core) = pattern_fits(g, h) else { return false };
    if core.order() == 0 {
        return true;
    }
    let first = (0..core.order()).max_by_key(|&v| (core.degree(v), std::cmp::Reverse(v))).unwrap();
    Matcher::new(&core, first).extend(g, &mut Vec::with_capacity(core.order()), 0)
}

/// Like [`contains_subgraph`] but only copies whose image uses vertex `v`.
pub fn contains_subgraph_through(g: &SmallGraph, h: &SmallGraph, v: usize) -> bool {
    let Some(core) = pattern_fits(g, h) else { return false };
    if core.order() == 0 {
        return true;
    }
    for first in 0..core.order() {
        if core.degree(first) > g.degree(v) {
            continue;
        }
        let m = Matcher::new(&core, first);
        let mut image = vec![v];
        if m.extend(g, &mut image, 1 << v) {
            return true;
        }
    }
    false
}
