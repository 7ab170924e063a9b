//! Edge-colorings of `K_n`, colour classes, unique colours and rainbow
//! detection.
//!
//! Colour ids are `u8` and always in restricted-growth form: the first edge
//! has colour 0 and each later edge uses at most one more than the largest
//! id seen so far. Colour sets are `u128` bitsets (at most 66 colours).

use crate::embeddings::{EmbeddedCopy, EmbeddingTable};
use crate::error::{Error, Result};
use crate::graphs::{complete_edges, edge_endpoints, edge_index};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    n: usize,
    colors: Vec<u8>,
    color_count: usize,
}

/// Relabels colours by first occurrence.
pub fn normalize<T: Copy + Eq + std::hash::Hash>(raw: &[T], n: usize) -> Result<EdgeColoring> {
    let expected = complete_edges(n);
    if raw.len() != expected {
        return Err(Error::ColoringLength { n, expected, got: raw.len() });
    }
    let mut ids: std::collections::HashMap<T, u8> = Default::default();
    let mut colors = Vec::with_capacity(raw.len());
    for &c in raw {
        let next = ids.len() as u8;
        colors.push(*ids.entry(c).or_insert(next));
    }
    Ok(EdgeColoring { n, color_count: ids.len(), colors })
}

impl EdgeColoring {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn color_count(&self) -> usize {
        self.color_count
    }

    pub fn color(&self, i: usize, j: usize) -> u8 {
        self.colors[edge_index(i, j)]
    }

    /// Builds from a `K_n` colour function.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> usize) -> EdgeColoring {
        let raw: Vec<usize> = (0..complete_edges(n))
            .map(|t| {
                let (i, j) = edge_endpoints(t);
                f(i, j)
            })
            .collect();
        normalize(&raw, n).expect("length matches")
    }

    /// Merges colour `b` into colour `a` and renormalizes.
    pub fn merge(&self, a: u8, b: u8) -> EdgeColoring {
        let raw: Vec<u8> = self.colors.iter().map(|&c| if c == b { a } else { c }).collect();
        normalize(&raw, self.n).expect("same length")
    }

    /// Colour set used by the edges in `edges`.
    pub fn colors_on(&self, edges: u128) -> u128 {
        let mut set = 0u128;
        let mut rest = edges;
        while rest != 0 {
            let t = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            set |= 1u128 << self.colors[t];
        }
        set
    }

    /// True if the edges in `edges` have pairwise distinct colours.
    pub fn is_rainbow(&self, edges: u128) -> bool {
        let mut seen = 0u128;
        let mut rest = edges;
        while rest != 0 {
            let t = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let bit = 1u128 << self.colors[t];
            if seen & bit != 0 {
                return false;
            }
            seen |= bit;
        }
        true
    }
}

/// Colour classes `E_i`, unique colour sets `S(v)` and `C*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorClassView {
    /// `classes[i]` is `E_i` as an edge bitset.
    pub classes: Vec<u128>,
    /// `unique[v]` is `S(v)` as a colour bitset.
    pub unique: Vec<u128>,
    /// Union of all `S(v)`.
    pub c_star: u128,
}

/// `(c1, c2, c3)`: unique colours with one edge, unique colours with two or
/// more edges, and all remaining colours.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UniqueColorStats {
    pub c1: usize,
    pub c2: usize,
    pub c3: usize,
}

impl ColorClassView {
    pub fn stats(&self) -> UniqueColorStats {
        let mut c1 = 0;
        let mut c2 = 0;
        for (i, class) in self.classes.iter().enumerate() {
            if self.c_star >> i & 1 == 1 {
                if class.count_ones() == 1 {
                    c1 += 1;
                } else {
                    c2 += 1;
                }
            }
        }
        UniqueColorStats { c1, c2, c3: self.classes.len() - c1 - c2 }
    }

    /// Centre of the star formed by a unique colour (lowest candidate when
    /// the class is a single edge).
    pub fn star_center(&self, color: usize) -> Option<usize> {
        self.unique.iter().position(|s| s >> color & 1 == 1)
    }
}

pub fn color_classes(c: &EdgeColoring) -> ColorClassView {
    let mut classes = vec![0u128; c.color_count];
    for (t, &col) in c.colors.iter().enumerate() {
        classes[col as usize] |= 1u128 << t;
    }
    let mut unique = vec![0u128; c.n];
    for (i, class) in classes.iter().enumerate() {
        // vertices incident to every edge of the class
        let mut common = u16::MAX;
        let mut rest = *class;
        while rest != 0 {
            let t = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let (a, b) = edge_endpoints(t);
            common &= (1 << a) | (1 << b);
        }
        for (v, s) in unique.iter_mut().enumerate() {
            if common >> v & 1 == 1 {
                *s |= 1u128 << i;
            }
        }
    }
    let c_star = unique.iter().fold(0, |a, s| a | s);
    ColorClassView { classes, unique, c_star }
}

fn edges_within(vertices: u16, n: usize) -> u128 {
    let mut set = 0u128;
    for j in 1..n {
        if vertices >> j & 1 == 0 {
            continue;
        }
        for i in 0..j {
            if vertices >> i & 1 == 1 {
                set |= 1u128 << edge_index(i, j);
            }
        }
    }
    set
}

/// `Γ[F]`: colours appearing on the complete graph induced by `vertices`.
pub fn colors_within(c: &EdgeColoring, vertices: u16) -> u128 {
    c.colors_on(edges_within(vertices, c.n))
}

/// `S(w, F)` for `F` the complete graph on `vertices`: colours of `F`
/// all of whose `F`-edges touch `w`.
pub fn unique_colors_at(c: &EdgeColoring, vertices: u16, w: usize) -> Result<u128> {
    if w >= c.n || vertices >> w & 1 == 0 {
        return Err(Error::VertexNotInSet { vertex: w });
    }
    let mut present = 0u128;
    let mut away = 0u128;
    let mut rest = edges_within(vertices, c.n);
    while rest != 0 {
        let t = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let (a, b) = edge_endpoints(t);
        let bit = 1u128 << c.colors[t];
        present |= bit;
        if a != w && b != w {
            away |= bit;
        }
    }
    Ok(present & !away)
}

/// First copy (in table order) whose edges are rainbow.
pub fn find_rainbow_copy<'t>(c: &EdgeColoring, table: &'t EmbeddingTable) -> Option<&'t EmbeddedCopy> {
    if c.n != table.n() {
        return None;
    }
    table.copies().iter().find(|copy| c.is_rainbow(copy.edges))
}
