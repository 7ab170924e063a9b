//! Closed forms, bound evaluators, target classification and the embedded
//! table of published values.
//!
//! `reference_tables` is the only place numeric reference values live; tests and
//! the CLI read them from here.

use serde::Serialize;

use crate::embeddings::is_isomorphic;
use crate::error::{Error, Result};
use crate::graphs::{cyclomatic, resolve, GraphName, SmallGraph};

fn binom2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

/// `rb(n, C_k) = floor(n/(k-1)) C(k-1, 2) + C(r, 2) + ceil(n/(k-1))` with
/// `r = n mod (k-1)`.
pub fn rb_cycle(n: u64, k: u64) -> Result<u64> {
    if k < 3 || n < k {
        return Err(Error::ParameterOutOfRange { name: "rb_cycle".into(), detail: format!("need n >= k >= 3, got n = {n}, k = {k}") });
    }
    let q = n / (k - 1);
    let r = n % (k - 1);
    Ok(q * binom2(k - 1) + binom2(r) + n.div_ceil(k - 1))
}

/// Bounds on `rb(n, H)` for a unicyclic `H` on `p` vertices whose cycle has
/// length `k`: `rb(n, C_k) <= rb(n, H) <= (p-2) n - p (p-3) / 2`.
pub fn unicyclic_bounds(p: u64, k: u64, n: u64) -> Result<(u64, u64)> {
    if p < 5 {
        return Err(Error::Hypothesis(format!("need p >= 5, got {p}")));
    }
    if k < 3 || k > p - 2 {
        return Err(Error::Hypothesis(format!("need 3 <= k <= p - 2, got k = {k}, p = {p}")));
    }
    if n < p {
        return Err(Error::Hypothesis(format!("need n >= p, got n = {n}, p = {p}")));
    }
    let lower = rb_cycle(n, k)?;
    let upper = (p - 2) * n - p * (p - 3) / 2;
    Ok((lower, upper))
}

/// Bounds on `rb(n, H)` from Turán numbers:
/// `ext(n, H - e family) + 2 <= rb(n, H) <= ext(n, H) + 1`.
pub fn sandwich_bounds(ext_family: u64, ext_target: u64) -> Result<(u64, u64)> {
    let (lower, upper) = (ext_family + 2, ext_target + 1);
    if lower > upper {
        return Err(Error::InconsistentBounds { lower, upper });
    }
    Ok((lower, upper))
}

/// `ext(n, {C_3, C_4}) <= n sqrt(n - 1) / 2`, compared exactly as
/// `4 ext^2 <= n^2 (n - 1)`.
pub fn girth5_bound_holds(n: u64, ext: u64) -> bool {
    4 * ext * ext <= n * n * (n - 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassKind {
    /// `v(H) >= 2` and `p >= 4`: no upper bound linear in `n`.
    Superlinear,
    /// Unicyclic with cycle length `3 <= k <= p - 2`.
    UnicyclicBounded,
    CycleExact,
    CyclePlusPendantExact,
    OutOfScope,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub kind: ClassKind,
    pub order: usize,
    pub cyclomatic: usize,
    /// Length of the unique cycle for unicyclic targets.
    pub cycle_length: Option<usize>,
    pub notes: String,
}

impl Classification {
    /// `(lower, upper)` bounds on `rb(n, H)` where the classification gives
    /// any; `None` when `n` is outside the range of the statement.
    pub fn bounds(&self, n: u64) -> Option<(u64, u64)> {
        let p = self.order as u64;
        let k = self.cycle_length? as u64;
        match self.kind {
            ClassKind::CycleExact => rb_cycle(n, k).ok().map(|v| (v, v)),
            ClassKind::CyclePlusPendantExact => (n > k).then(|| rb_cycle(n, k).ok().map(|v| (v, v))).flatten(),
            ClassKind::UnicyclicBounded => unicyclic_bounds(p, k, n).ok(),
            ClassKind::Superlinear | ClassKind::OutOfScope => None,
        }
    }
}

pub fn classify(target: &SmallGraph) -> Classification {
    let g = target.without_isolated();
    let p = g.order();
    let v = cyclomatic(&g);
    let core = g.two_core().count_ones() as usize;
    let make = |kind, cycle_length, notes: &str| Classification { kind, order: p, cyclomatic: v, cycle_length, notes: notes.to_string() };
    if !g.is_connected() || g.size() == 0 {
        return make(ClassKind::OutOfScope, None, "disconnected or edgeless target");
    }
    if v == 0 {
        return make(ClassKind::OutOfScope, None, "tree: no cycle-based statement applies");
    }
    if v == 1 && core == p {
        return make(ClassKind::CycleExact, Some(p), "cycle: exact closed form");
    }
    if v == 1 && core == p - 1 {
        return make(ClassKind::CyclePlusPendantExact, Some(p - 1), "cycle plus pendant edge: equals the cycle value for n >= k + 1");
    }
    if v >= 2 && p >= 4 {
        return make(ClassKind::Superlinear, None, "two independent cycles: rb is not bounded by any linear function of n");
    }
    if v == 1 && p >= 5 && (3..=p - 2).contains(&core) {
        return make(ClassKind::UnicyclicBounded, Some(core), "unicyclic: bounded between the cycle value and (p-2)n - p(p-3)/2");
    }
    make(ClassKind::OutOfScope, (v == 1).then_some(core), "hypotheses of the classification statements not met")
}

/// Published reference values.
pub mod reference_tables {
    use super::*;

    /// `ext(n, {C_3, C_4})` for `n = 4..=16`.
    pub const EXT_C3_C4: [(u64, u64); 13] = [
        (4, 3),
        (5, 5),
        (6, 6),
        (7, 8),
        (8, 10),
        (9, 12),
        (10, 15),
        (11, 16),
        (12, 18),
        (13, 21),
        (14, 23),
        (15, 26),
        (16, 28),
    ];

    pub const RB_DIAMOND: [(u64, u64); 7] = [(4, 5), (5, 7), (6, 8), (7, 10), (8, 12), (9, 14), (10, 17)];
    pub const RB_HOUSE: [(u64, u64); 4] = [(5, 8), (6, 9), (7, 11), (8, 14)];
    pub const RB_K23: [(u64, u64); 4] = [(5, 8), (6, 10), (7, 12), (8, 14)];

    /// Values quoted for cycles.
    pub const RB_K5_C3: u64 = 5;
    pub const RB_K6_C5: u64 = 9;

    fn lookup(table: &[(u64, u64)], n: u64) -> Option<u64> {
        table.iter().find(|&&(m, _)| m == n).map(|&(_, v)| v)
    }

    pub fn ext_c3_c4(n: u64) -> Option<u64> {
        lookup(&EXT_C3_C4, n)
    }

    /// `rb(n, bull)`: 6 at `n = 5`, `n + 2` for `n >= 6`.
    pub fn rb_bull(n: u64) -> Option<u64> {
        match n {
            5 => Some(6),
            n if n >= 6 => Some(n + 2),
            _ => None,
        }
    }

    /// Published `rb(n, target)` for the bull, diamond, house and `K_{2,3}`,
    /// recognised up to isomorphism.
    pub fn rb(target: &SmallGraph, n: u64) -> Option<u64> {
        let is = |name| resolve(name).is_ok_and(|g| is_isomorphic(&g, target));
        if is(GraphName::Bull) {
            rb_bull(n)
        } else if is(GraphName::Diamond) {
            lookup(&RB_DIAMOND, n)
        } else if is(GraphName::House) {
            lookup(&RB_HOUSE, n)
        } else if is(GraphName::CompleteBipartite(2, 3)) {
            lookup(&RB_K23, n)
        } else {
            None
        }
    }
}
