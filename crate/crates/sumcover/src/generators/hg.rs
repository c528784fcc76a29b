//! The apex-subset hypergraph family derived from a simple graph.
//!
//! Given a base graph `G` on vertices `1..=n`, the instance keeps those `n`
//! base vertices and adds three apex vertices `n+1..=n+3`. For every
//! nonempty base subset `X` whose size is not 2, and for every pair subset
//! that is an edge of `G`, the instance contains the three edges
//! `X ∪ {apex_k}`. Pair subsets that are *not* edges of `G` are omitted, so
//! the structure of `G` is encoded purely in which 2-element blocks appear.
//!
//! The family is useful as a stress case because the cheapest set cover
//! (the three apexes) and the cheapest ordered cover (all base vertices
//! first) pull in opposite directions.

use super::{GeneratorError, SimpleGraph};
use crate::hypergraph::{Hypergraph, VertexId};
use crate::ordering::Ordering;

/// Largest supported base-graph vertex count; the edge list grows like
/// `3 · 2^n`, so this cap keeps instances within desk-scale memory.
pub const MAX_BASE_VERTICES: usize = 20;

/// Labels tying instance vertices back to their role.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HgLabels {
    /// The base vertices `1..=n`, mirroring the input graph's ids.
    pub base: Vec<VertexId>,
    /// The three apex vertices `n+1..=n+3`.
    pub apex: [VertexId; 3],
}

/// Number of distinct base subsets that form edge blocks: all nonempty
/// subsets, minus the pairs, plus the pairs that are graph edges. Each block
/// appears once per apex, so the instance has `3 *` this many edges.
pub fn block_count(graph: &SimpleGraph) -> u64 {
    let n = graph.vertex_count() as u64;
    (1u64 << n) - 1 - n * (n - 1) / 2 + graph.edge_count() as u64
}

/// Builds the apex-subset instance for the given base graph.
pub fn build(graph: &SimpleGraph) -> Result<(Hypergraph, HgLabels), GeneratorError> {
    let n = graph.vertex_count();
    if n == 0 {
        return Err(GeneratorError::InvalidParameter(
            "the base graph needs at least one vertex".into(),
        ));
    }
    if n > MAX_BASE_VERTICES {
        return Err(GeneratorError::TooLarge {
            what: "base-graph vertex count",
            value: n as u64,
            cap: MAX_BASE_VERTICES as u64,
        });
    }
    let apex = [n as VertexId + 1, n as VertexId + 2, n as VertexId + 3];
    let mut edges: Vec<Vec<VertexId>> = Vec::with_capacity(3 * block_count(graph) as usize);
    for mask in 1u32..(1u32 << n) {
        if mask.count_ones() == 2 {
            let u = mask.trailing_zeros() as VertexId + 1;
            let v = (31 - mask.leading_zeros()) as VertexId + 1;
            if !graph.has_edge(u, v) {
                continue;
            }
        }
        let subset: Vec<VertexId> =
            (0..n as u32).filter(|b| mask & (1 << b) != 0).map(|b| b as VertexId + 1).collect();
        for &a in &apex {
            let mut edge = subset.clone();
            edge.push(a);
            edges.push(edge);
        }
    }
    let hypergraph = Hypergraph::new(n + 3, edges)
        .expect("construction uses only in-range vertices and nonempty subsets");
    let labels = HgLabels { base: (1..=n as VertexId).collect(), apex };
    Ok((hypergraph, labels))
}

/// The ordering that plays the apexes first (ascending), then the base
/// vertices (ascending). Each apex covers its whole block family on first
/// touch, so the coverage profile is flat across the first three positions.
pub fn apex_first_ordering(labels: &HgLabels) -> Ordering {
    let mut seq: Vec<VertexId> = labels.apex.to_vec();
    seq.extend(labels.base.iter().copied());
    Ordering::new(seq).expect("labels hold distinct nonzero ids")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_three_instance_shape() {
        let g = SimpleGraph::path(3);
        let (h, labels) = build(&g).unwrap();
        // Blocks: 7 nonempty subsets - 3 pairs + 2 path edges = 6; times 3 apexes.
        assert_eq!(block_count(&g), 6);
        assert_eq!(h.vertex_count(), 6);
        assert_eq!(h.edge_count(), 18);
        assert_eq!(labels.apex, [4, 5, 6]);
        assert_eq!(labels.base, vec![1, 2, 3]);
        // Every edge contains exactly one apex.
        for edge in h.edges() {
            let apexes = edge.iter().filter(|v| labels.apex.contains(v)).count();
            assert_eq!(apexes, 1);
        }
        // The non-edge pair {1,3} appears in no block; the edge pair {1,2} does.
        assert!(!h.edges().any(|e| e == [1, 3, 4]));
        assert!(h.edges().any(|e| e == [1, 2, 4]));
    }

    #[test]
    fn apex_degrees_match_block_count() {
        let g = SimpleGraph::cycle(4).unwrap();
        let (h, labels) = build(&g).unwrap();
        let blocks = block_count(&g);
        // 15 nonempty subsets - 6 pairs + 4 cycle edges = 13.
        assert_eq!(blocks, 13);
        for &a in &labels.apex {
            assert_eq!(h.degree(a) as u64, blocks);
        }
    }

    #[test]
    fn apex_first_profile_is_flat() {
        let g = SimpleGraph::path(3);
        let (h, labels) = build(&g).unwrap();
        let profile = h.effective_coverage(&apex_first_ordering(&labels)).unwrap();
        assert_eq!(profile.coverages()[..3], [6, 6, 6]);
        assert!(profile.coverages()[3..].iter().all(|&c| c == 0));
        assert_eq!(profile.total_cost(), 36);
        assert_eq!(profile.cover_size(), 3);
    }

    #[test]
    fn oversized_base_graph_is_rejected() {
        let g = SimpleGraph::empty(21);
        assert!(matches!(build(&g), Err(GeneratorError::TooLarge { .. })));
    }
}
