//! Exact solvers, the parameterized decision procedure, and heuristics.
//!
//! The exhaustive oracles in [`brute`] answer every question exactly at
//! desk scale and back the test suite; [`fpt`] decides (cover-size,
//! cost)-budgeted instances by sunflower branching with [`sunflower`] and
//! orders candidate covers with the subset dynamic program in
//! [`held_karp`]; [`greedy`] supplies the classic most-coverage-first
//! heuristic. All tie-breaking is by smallest vertex id, so every solver is
//! deterministic.

pub mod brute;
pub mod fpt;
pub mod greedy;
pub mod held_karp;
pub mod sunflower;

pub use brute::{
    brute_force_mssc, brute_force_tau, decide_by_enumeration, for_each_normalized_optimum,
    for_each_optimum, min_cost_by_cover_size, tau_arrow, ExactResult,
};
pub use fpt::{fpt_decide, Decision, Instance};
pub use greedy::greedy_mssc;
pub use held_karp::{held_karp_order, min_cost_over_permutations, HELD_KARP_MAX};
pub use sunflower::{find_sunflower, sunflower_threshold, Sunflower};

use crate::hypergraph::{Hypergraph, VertexId};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("search budget exhausted after {explored} explored nodes")]
    BudgetExceeded { explored: u64 },
    #[error("the given vertex set does not cover edge {{{}}}", format_ids(.edge))]
    NotACover { edge: Vec<VertexId> },
    #[error("the subset dynamic program handles at most {max} vertices, got {size}")]
    CoverTooLarge { size: usize, max: usize },
    #[error("vertex {vertex} is not a vertex of the instance")]
    UnknownVertex { vertex: VertexId },
    #[error("a sunflower needs at least one petal")]
    ZeroPetals,
    #[error("cover budget k={k} exceeds the vertex count {vertex_count}")]
    CoverBudgetExceedsVertices { k: usize, vertex_count: usize },
}

fn format_ids(ids: &[VertexId]) -> String {
    ids.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

/// Node cap for the exhaustive searches; exceeding it is an explicit error,
/// never a silently wrong answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self { max_nodes: 100_000_000 }
    }
}

impl SearchBudget {
    pub fn new(max_nodes: u64) -> Self {
        Self { max_nodes }
    }
}

/// Edge-indexed bitset: bit `i` refers to edge `i` of the hypergraph the
/// mask was built against. Used as the solver hot-path representation —
/// coverage counting is AND + popcount over `u64` blocks.
pub(crate) type EdgeMask = Vec<u64>;

pub(crate) fn edge_mask_blocks(edge_count: usize) -> usize {
    edge_count.div_ceil(64)
}

/// Per-vertex incidence masks: `masks[v-1]` has bit `i` set iff edge `i`
/// contains `v`.
pub(crate) fn incidence_masks(h: &Hypergraph) -> Vec<EdgeMask> {
    let blocks = edge_mask_blocks(h.edge_count());
    let mut masks = vec![vec![0u64; blocks]; h.vertex_count()];
    for (i, edge) in h.edges().enumerate() {
        for &v in edge {
            masks[v as usize - 1][i / 64] |= 1 << (i % 64);
        }
    }
    masks
}

/// `popcount(a & b)`.
pub(crate) fn count_intersection(a: &[u64], b: &[u64]) -> u64 {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as u64).sum()
}

pub(crate) fn is_all_clear(mask: &[u64]) -> bool {
    mask.iter().all(|&b| b == 0)
}

/// A mask with the low `edge_count` bits set.
pub(crate) fn full_edge_mask(edge_count: usize) -> EdgeMask {
    let blocks = edge_mask_blocks(edge_count);
    let mut mask = vec![u64::MAX; blocks];
    if let Some(last) = mask.last_mut() {
        let used = edge_count - (blocks - 1) * 64;
        if used < 64 {
            *last = (1u64 << used) - 1;
        }
        if edge_count == 0 {
            *last = 0;
        }
    }
    mask
}
