//! Isomorphism utilities and the table of all copies of a target in `K_n`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graphs::{complete_edges, edge_index, SmallGraph, MAX_TARGET_ORDER};

/// Canonical form of a graph: its order plus the upper-triangle adjacency
/// bits (in canonical edge order, most significant bit first) of a
/// canonically relabeled copy. Equal codes iff isomorphic graphs.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    order: u8,
    bits: u128,
}

impl CanonicalCode {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    /// Byte form: the order followed by the 16 big-endian bit bytes.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(17);
        out.push(self.order);
        out.extend_from_slice(&self.bits.to_be_bytes());
        out
    }

    pub fn to_hex(&self) -> String {
        self.to_bytes().iter().map(|b| format!("{b:02x}")).collect()
    }

    /// The canonical representative.
    pub fn graph(&self) -> SmallGraph {
        let n = self.order();
        let mut g = SmallGraph::new(n).expect("order in range");
        for t in 0..complete_edges(n) {
            if self.bits >> (127 - t) & 1 == 1 {
                let (i, j) = crate::graphs::edge_endpoints(t);
                g.add_edge(i, j).expect("valid edge");
            }
        }
        g
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.to_hex())
    }
}

fn code_under(g: &SmallGraph, position: &[usize]) -> u128 {
    let mut bits = 0u128;
    for (i, j) in g.edges() {
        bits |= 1u128 << (127 - edge_index(position[i], position[j]));
    }
    bits
}

/// Splits every cell by the number of neighbours its vertices have in each
/// cell until the ordered partition is equitable. Label-invariant.
fn refine(g: &SmallGraph, cells: &mut Vec<Vec<usize>>) {
    loop {
        let masks: Vec<u16> = cells.iter().map(|c| c.iter().fold(0u16, |m, &v| m | 1 << v)).collect();
        let mut split_at = None;
        for (ci, cell) in cells.iter().enumerate() {
            if cell.len() < 2 {
                continue;
            }
            let sig = |v: usize| -> Vec<u32> { masks.iter().map(|m| (g.neighbors(v) & m).count_ones()).collect() };
            let first = sig(cell[0]);
            if cell[1..].iter().any(|&v| sig(v) != first) {
                let mut keyed: Vec<(Vec<u32>, usize)> = cell.iter().map(|&v| (sig(v), v)).collect();
                keyed.sort();
                let mut parts: Vec<Vec<usize>> = Vec::new();
                let mut last: Option<Vec<u32>> = None;
                for (s, v) in keyed {
                    if last.as_ref() != Some(&s) {
                        parts.push(Vec::new());
                        last = Some(s);
                    }
                    parts.last_mut().unwrap().push(v);
                }
                split_at = Some((ci, parts));
                break;
            }
        }
        match split_at {
            Some((ci, parts)) => {
                cells.splice(ci..=ci, parts);
            }
            None => return,
        }
    }
}

fn twins(g: &SmallGraph, u: usize, w: usize) -> bool {
    let strip = !((1u16 << u) | (1u16 << w));
    g.neighbors(u) & strip == g.neighbors(w) & strip
}

fn search_canonical(g: &SmallGraph, mut cells: Vec<Vec<usize>>, best: &mut Option<(u128, Vec<usize>)>) {
    refine(g, &mut cells);
    let Some(ci) = cells.iter().position(|c| c.len() > 1) else {
        let mut position = vec![0; g.order()];
        for (p, cell) in cells.iter().enumerate() {
            position[cell[0]] = p;
        }
        let code = code_under(g, &position);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, position));
        }
        return;
    };
    let cell = cells[ci].clone();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        // a twin of an already individualised vertex yields an isomorphic subtree
        if tried.iter().any(|&u| twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        let mut next = cells.clone();
        let rest: Vec<usize> = cell.iter().copied().filter(|&x| x != v).collect();
        next.splice(ci..=ci, [vec![v], rest]);
        search_canonical(g, next, best);
    }
}

/// Canonical relabeling: `position[v]` is the new label of `v`.
pub fn canonical_labeling(g: &SmallGraph) -> (CanonicalCode, Vec<usize>) {
    let n = g.order();
    if n == 0 {
        return (CanonicalCode { order: 0, bits: 0 }, Vec::new());
    }
    // start from the degree partition, cells in increasing degree
    let mut by_degree: Vec<(usize, usize)> = (0..n).map(|v| (g.degree(v), v)).collect();
    by_degree.sort();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut last = usize::MAX;
    for (d, v) in by_degree {
        if d != last {
            cells.push(Vec::new());
            last = d;
        }
        cells.last_mut().unwrap().push(v);
    }
    let mut best = None;
    search_canonical(g, cells, &mut best);
    let (bits, position) = best.expect("at least one leaf");
    (CanonicalCode { order: n as u8, bits }, position)
}

pub fn canonical_code(g: &SmallGraph) -> CanonicalCode {
    canonical_labeling(g).0
}

/// The canonically relabeled copy of `g`.
pub fn canonical_form(g: &SmallGraph) -> SmallGraph {
    let (_, position) = canonical_labeling(g);
    g.relabel(&position)
}

pub fn is_isomorphic(a: &SmallGraph, b: &SmallGraph) -> bool {
    a.order() == b.order() && a.size() == b.size() && canonical_code(a) == canonical_code(b)
}

/// `|Aut(G)|` by exhaustive search over adjacency-preserving permutations.
pub fn automorphism_count(g: &SmallGraph) -> u64 {
    fn go(g: &SmallGraph, image: &mut Vec<usize>, used: u16) -> u64 {
        let v = image.len();
        if v == g.order() {
            return 1;
        }
        let mut total = 0;
        for w in 0..g.order() {
            if used >> w & 1 == 1 || g.degree(w) != g.degree(v) {
                continue;
            }
            if (0..v).all(|u| g.has_edge(u, v) == g.has_edge(image[u], w)) {
                image.push(w);
                total += go(g, image, used | 1 << w);
                image.pop();
            }
        }
        total
    }
    go(g, &mut Vec::with_capacity(g.order()), 0)
}

/// One copy of the target inside `K_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EmbeddedCopy {
    /// Bitset over canonical edge indices of `K_n`.
    pub edges: u128,
    /// Bitset of the spanned vertices.
    pub vertices: u16,
}

impl EmbeddedCopy {
    pub fn edge_indices(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.edges.count_ones() as usize);
        let mut rest = self.edges;
        while rest != 0 {
            out.push(rest.trailing_zeros() as usize);
            rest &= rest - 1;
        }
        out
    }

    pub fn vertex_list(&self) -> Vec<usize> {
        (0..16).filter(|&v| self.vertices >> v & 1 == 1).collect()
    }
}

/// Every copy of `target` in `K_n`, sorted by edge bitset.
#[derive(Clone, Debug)]
pub struct EmbeddingTable {
    n: usize,
    target: SmallGraph,
    copies: Vec<EmbeddedCopy>,
}

impl EmbeddingTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn target(&self) -> &SmallGraph {
        &self.target
    }

    pub fn copies(&self) -> &[EmbeddedCopy] {
        &self.copies
    }

    pub fn len(&self) -> usize {
        self.copies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.copies.is_empty()
    }
}

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

/// All copies of `target` in `K_n`: the distinct edge sets `target` takes
/// on `{0..p}` under all `p!` relabelings, transported to every `p`-subset.
pub fn enumerate_copies(n: usize, target: &SmallGraph) -> Result<EmbeddingTable> {
    let p = target.order();
    if p > n {
        return Err(Error::TargetTooLarge { target: p, host: n });
    }
    if n > MAX_TARGET_ORDER {
        return Err(Error::OrderTooLarge { order: n, limit: MAX_TARGET_ORDER });
    }
    if target.isolated_count() > 0 {
        return Err(Error::IsolatedVertices);
    }
    // distinct labelings on 0..p as edge lists
    let mut local: Vec<Vec<(usize, usize)>> = Vec::new();
    {
        let mut seen = std::collections::HashSet::new();
        let mut perm: Vec<usize> = (0..p).collect();
        let edges = target.edges();
        loop {
            let mut mapped: Vec<(usize, usize)> =
                edges.iter().map(|&(i, j)| (perm[i].min(perm[j]), perm[i].max(perm[j]))).collect();
            mapped.sort_unstable();
            if seen.insert(mapped.clone()) {
                local.push(mapped);
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
    }
    let mut copies = Vec::new();
    if p == 0 {
        return Ok(EmbeddingTable { n, target: *target, copies });
    }
    let mut comb: Vec<usize> = (0..p).collect();
    loop {
        let vertices = comb.iter().fold(0u16, |m, &v| m | 1 << v);
        for edges in &local {
            let set = edges.iter().fold(0u128, |acc, &(i, j)| acc | 1u128 << edge_index(comb[i], comb[j]));
            copies.push(EmbeddedCopy { edges: set, vertices });
        }
        if !next_combination(&mut comb, n) {
            break;
        }
    }
    copies.sort_unstable();
    copies.dedup();
    Ok(EmbeddingTable { n, target: *target, copies })
}

/// Lexicographic successor; false when `perm` was the last permutation.
pub fn next_permutation(perm: &mut [usize]) -> bool {
    if perm.len() < 2 {
        return false;
    }
    let mut i = perm.len() - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = perm.len() - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::Target;

    fn g(name: &str) -> SmallGraph {
        name.parse::<Target>().unwrap().graph
    }

    /// Oracle: try every vertex bijection.
    fn brute_isomorphic(a: &SmallGraph, b: &SmallGraph) -> bool {
        if a.order() != b.order() || a.size() != b.size() {
            return false;
        }
        let mut perm: Vec<usize> = (0..a.order()).collect();
        loop {
            if a.relabel(&perm) == *b {
                return true;
            }
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    fn factorial(n: u64) -> u64 {
        (1..=n).product()
    }

    #[test]
    fn codes_are_relabeling_invariant() {
        let bull = g("bull");
        let code = canonical_code(&bull);
        let mut perm: Vec<usize> = (0..5).collect();
        loop {
            assert_eq!(canonical_code(&bull.relabel(&perm)), code);
            if !next_permutation(&mut perm) {
                break;
            }
        }
        assert_ne!(canonical_code(&g("C4")), canonical_code(&g("K1,3")));
        assert_ne!(canonical_code(&g("diamond")), canonical_code(&g("K1,3+e")));
        assert!(!brute_isomorphic(&g("diamond"), &g("K1,3+e").with_extra_vertices(0).unwrap()));
    }

    #[test]
    fn canonical_code_decodes_to_isomorphic_graph() {
        for name in ["bull", "house", "K2,3", "W5", "TC5", "C7+", "K5"] {
            let h = g(name);
            let code = canonical_code(&h);
            assert!(brute_isomorphic(&code.graph(), &h), "{name}");
            assert_eq!(canonical_form(&h), code.graph());
        }
    }

    #[test]
    fn codes_agree_with_brute_force_on_all_five_vertex_graphs() {
        // every graph on 5 labeled vertices, grouped by code vs brute iso
        let n = 5;
        let graphs: Vec<SmallGraph> =
            (0u128..1 << complete_edges(n)).map(|e| SmallGraph::from_edge_set(n, e).unwrap()).collect();
        let codes: Vec<CanonicalCode> = graphs.iter().map(canonical_code).collect();
        let mut classes: std::collections::HashMap<CanonicalCode, SmallGraph> = Default::default();
        for (gr, code) in graphs.iter().zip(&codes) {
            let rep = classes.entry(*code).or_insert(*gr);
            assert!(brute_isomorphic(rep, gr));
        }
        // 34 graphs on five vertices up to isomorphism
        assert_eq!(classes.len(), 34);
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphism_count(&g("bull")), 2);
        assert_eq!(automorphism_count(&g("K4")), 24);
        assert_eq!(automorphism_count(&g("C5")), 10);
        assert_eq!(automorphism_count(&g("K2,3")), 12);
        assert_eq!(automorphism_count(&g("house")), 2);
        assert_eq!(automorphism_count(&g("diamond")), 4);
    }

    #[test]
    fn copy_counts() {
        assert_eq!(enumerate_copies(5, &g("C3")).unwrap().len(), 10);
        assert_eq!(enumerate_copies(7, &g("bull")).unwrap().len(), 1260);
        assert_eq!(enumerate_copies(6, &g("K2,3")).unwrap().len(), 60);
        assert!(matches!(enumerate_copies(4, &g("bull")), Err(Error::TargetTooLarge { .. })));
        let with_isolated = SmallGraph::parse_literal("3:0-1").unwrap();
        assert_eq!(enumerate_copies(4, &with_isolated).unwrap_err(), Error::IsolatedVertices);
    }

    #[test]
    fn copy_count_formula_for_catalog() {
        for name in ["C3", "C4", "C5", "bull", "diamond", "house", "K2,3", "paw", "Z2", "C4+", "K4", "P4"] {
            let h = g(name);
            let p = h.order() as u64;
            let aut = automorphism_count(&h);
            for n in h.order()..=8 {
                let table = enumerate_copies(n, &h).unwrap();
                let expected = binom(n as u64, p) * factorial(p) / aut;
                assert_eq!(table.len() as u64, expected, "{name} in K_{n}");
            }
        }
    }

    #[test]
    fn copies_are_sorted_unique_and_isomorphic() {
        let h = g("house");
        let table = enumerate_copies(7, &h).unwrap();
        let code = canonical_code(&h);
        for w in table.copies().windows(2) {
            assert!(w[0] < w[1]);
        }
        for c in table.copies().iter().step_by(17) {
            assert_eq!(c.edges.count_ones() as usize, h.size());
            assert_eq!(c.vertices.count_ones() as usize, h.order());
            let sub = SmallGraph::from_edge_set(7, c.edges).unwrap().without_isolated();
            assert_eq!(canonical_code(&sub), code);
        }
    }

    #[test]
    fn complete_graph_canonicalizes_quickly() {
        let k12 = SmallGraph::complete(12).unwrap();
        assert_eq!(canonical_code(&k12).graph(), k12);
        let empty = SmallGraph::new(16).unwrap();
        assert_eq!(canonical_code(&empty).graph(), empty);
    }
}
