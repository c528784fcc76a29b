//! Vertex orderings and the ordered-cover cost model.
//!
//! An [`Ordering`] lists distinct vertices; when an operation needs a full
//! permutation, a shorter ordering is read as extended by the unused vertices
//! in ascending id order. Positions are 1-based. An edge is covered at the
//! position of the first vertex in the ordering that belongs to it, and the
//! cost of an ordering is the sum of those positions over all edges.

use crate::hypergraph::{Hypergraph, VertexId};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrderingError {
    #[error("vertex id 0 is not valid")]
    ZeroVertexId,
    #[error("vertex {vertex} appears more than once")]
    RepeatedVertex { vertex: VertexId },
    #[error("ordering mentions vertex {vertex}, but the hypergraph has vertices 1..={vertex_count}")]
    UnknownVertex { vertex: VertexId, vertex_count: usize },
    #[error("the given prefix does not cover edge {{{}}}", format_edge(.edge))]
    IncompleteCover { edge: Vec<VertexId> },
    #[error("a full permutation is required: got {got} of {expected} vertices")]
    NotAPermutation { got: usize, expected: usize },
}

fn format_edge(edge: &[VertexId]) -> String {
    edge.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

/// A sequence of distinct vertices, possibly shorter than a full permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ordering {
    seq: Vec<VertexId>,
}

impl Ordering {
    pub fn new(seq: Vec<VertexId>) -> Result<Self, OrderingError> {
        let mut sorted = seq.clone();
        sorted.sort_unstable();
        for pair in sorted.windows(2) {
            if pair[0] == pair[1] {
                return Err(OrderingError::RepeatedVertex { vertex: pair[0] });
            }
        }
        if sorted.first() == Some(&0) {
            return Err(OrderingError::ZeroVertexId);
        }
        Ok(Self { seq })
    }

    pub fn empty() -> Self {
        Self { seq: Vec::new() }
    }

    pub fn sequence(&self) -> &[VertexId] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }
}

/// Effective coverage of an ordering: `coverages()[i-1]` counts the edges
/// first covered at position `i`, `total_cost()` is the position-weighted
/// sum of those counts, and `cover_size()` is the largest position that
/// covers anything (0 when there are no edges).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageProfile {
    coverages: Vec<u64>,
    total_cost: u64,
    cover_size: usize,
}

impl CoverageProfile {
    pub fn coverages(&self) -> &[u64] {
        &self.coverages
    }

    pub fn total_cost(&self) -> u64 {
        self.total_cost
    }

    pub fn cover_size(&self) -> usize {
        self.cover_size
    }
}

impl Hypergraph {
    /// The full permutation an ordering stands for: the given vertices
    /// followed by all unused vertices in ascending id order.
    pub fn extend_ordering(&self, ordering: &Ordering) -> Result<Vec<VertexId>, OrderingError> {
        let mut used = vec![false; self.vertex_count()];
        for &v in ordering.sequence() {
            if !self.is_vertex(v) {
                return Err(OrderingError::UnknownVertex {
                    vertex: v,
                    vertex_count: self.vertex_count(),
                });
            }
            used[v as usize - 1] = true;
        }
        let mut full = ordering.sequence().to_vec();
        full.extend(self.vertices().filter(|&v| !used[v as usize - 1]));
        Ok(full)
    }

    /// Position (1-based) of every vertex under the extended ordering.
    fn positions(&self, ordering: &Ordering) -> Result<Vec<usize>, OrderingError> {
        let full = self.extend_ordering(ordering)?;
        let mut pos = vec![0usize; self.vertex_count()];
        for (i, &v) in full.iter().enumerate() {
            pos[v as usize - 1] = i + 1;
        }
        Ok(pos)
    }

    /// Per-position counts of first-covered edges, with total cost and the
    /// cover end (the last position that covers any edge).
    pub fn effective_coverage(&self, ordering: &Ordering) -> Result<CoverageProfile, OrderingError> {
        let pos = self.positions(ordering)?;
        let mut coverages = vec![0u64; self.vertex_count()];
        let mut total_cost = 0u64;
        let mut cover_size = 0usize;
        for edge in self.edges() {
            let first = edge.iter().map(|&v| pos[v as usize - 1]).min().expect("edges are non-empty");
            coverages[first - 1] += 1;
            total_cost += first as u64;
            cover_size = cover_size.max(first);
        }
        Ok(CoverageProfile { coverages, total_cost, cover_size })
    }

    /// Total cost computed the direct way: each edge pays the position of its
    /// first vertex in the extended ordering. Always equals
    /// `effective_coverage(..).total_cost()`, which sums per-position counts
    /// instead; the two routes cross-check each other in tests.
    pub fn solution_cost(&self, ordering: &Ordering) -> Result<u64, OrderingError> {
        let pos = self.positions(ordering)?;
        let mut total = 0u64;
        for edge in self.edges() {
            total += edge.iter().map(|&v| pos[v as usize - 1]).min().expect("edges are non-empty") as u64;
        }
        Ok(total)
    }

    /// The cover an ordering commits to: its first `cover_size` vertices,
    /// in ordering order. The given sequence itself must already cover every
    /// edge (it may be a full permutation or a covering prefix); otherwise an
    /// `IncompleteCover` error names an uncovered edge.
    pub fn implied_cover(&self, ordering: &Ordering) -> Result<Vec<VertexId>, OrderingError> {
        for &v in ordering.sequence() {
            if !self.is_vertex(v) {
                return Err(OrderingError::UnknownVertex {
                    vertex: v,
                    vertex_count: self.vertex_count(),
                });
            }
        }
        let mut pos = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in ordering.sequence().iter().enumerate() {
            pos[v as usize - 1] = i + 1;
        }
        let mut cover_size = 0usize;
        for edge in self.edges() {
            let first = edge.iter().map(|&v| pos[v as usize - 1]).min().expect("edges are non-empty");
            if first == usize::MAX {
                return Err(OrderingError::IncompleteCover { edge: edge.to_vec() });
            }
            cover_size = cover_size.max(first);
        }
        Ok(ordering.sequence()[..cover_size].to_vec())
    }

    /// Removes dead positions from a full permutation: while some position
    /// within the cover covers no edge, its vertex moves to just after the
    /// cover end, preserving the relative order of everything else. The
    /// result covers every position `1..=cover_size`, and its cost never
    /// exceeds the input's.
    pub fn normalize(&self, ordering: &Ordering) -> Result<Ordering, OrderingError> {
        if ordering.len() != self.vertex_count() {
            return Err(OrderingError::NotAPermutation {
                got: ordering.len(),
                expected: self.vertex_count(),
            });
        }
        let mut seq = ordering.sequence().to_vec();
        loop {
            let current = Ordering { seq: seq.clone() };
            let profile = self.effective_coverage(&current)?;
            let dead = (0..profile.cover_size())
                .find(|&i| profile.coverages()[i] == 0);
            match dead {
                None => return Ok(current),
                Some(i) => {
                    let v = seq.remove(i);
                    // The removal shifts every later first-hit left by one,
                    // so the cover now ends one position earlier.
                    seq.insert(profile.cover_size() - 1, v);
                }
            }
        }
    }
}

/// Outcome of [`dominance_compare`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Dominance {
    /// The sequences are identical, so the weighted sums agree.
    Equal { weighted: u64 },
    /// `lhs > rhs`, where each side is the position-weighted sum of its
    /// sequence.
    StrictlyGreater { lhs: u64, rhs: u64 },
    /// The sequences are not both non-increasing, or no crossover index
    /// exists; no claim is made.
    PreconditionViolated,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DominanceError {
    #[error("sequences have different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("sequences have different sums ({left} vs {right})")]
    SumMismatch { left: u64, right: u64 },
}

/// Compares position-weighted sums of two equal-sum, non-increasing
/// sequences. When some index `t` splits them so that `s[i] <= earlier[i]`
/// for `i <= t` and `s[i] >= earlier[i]` after it (the later sequence defers
/// coverage), the weighted sum of `s` is at least that of `earlier`, with
/// equality exactly when the sequences coincide.
pub fn dominance_compare(s: &[u64], earlier: &[u64]) -> Result<Dominance, DominanceError> {
    if s.len() != earlier.len() {
        return Err(DominanceError::LengthMismatch { left: s.len(), right: earlier.len() });
    }
    let sum_s: u64 = s.iter().sum();
    let sum_e: u64 = earlier.iter().sum();
    if sum_s != sum_e {
        return Err(DominanceError::SumMismatch { left: sum_s, right: sum_e });
    }
    let non_increasing = |xs: &[u64]| xs.windows(2).all(|w| w[0] >= w[1]);
    if !non_increasing(s) || !non_increasing(earlier) {
        return Ok(Dominance::PreconditionViolated);
    }
    // Crossover: once s rises above `earlier`, it must stay at or above it.
    let mut crossed = false;
    for i in 0..s.len() {
        if crossed {
            if s[i] < earlier[i] {
                return Ok(Dominance::PreconditionViolated);
            }
        } else if s[i] > earlier[i] {
            crossed = true;
        }
    }
    let weight = |xs: &[u64]| xs.iter().enumerate().map(|(i, &x)| (i as u64 + 1) * x).sum::<u64>();
    let lhs = weight(s);
    let rhs = weight(earlier);
    if s == earlier {
        Ok(Dominance::Equal { weighted: lhs })
    } else {
        debug_assert!(lhs > rhs, "crossover precondition must force strict dominance");
        Ok(Dominance::StrictlyGreater { lhs, rhs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: usize, edges: &[&[VertexId]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| e.to_vec())).unwrap()
    }

    fn ord(seq: &[VertexId]) -> Ordering {
        Ordering::new(seq.to_vec()).unwrap()
    }

    fn triangle() -> Hypergraph {
        h(3, &[&[1, 2], &[1, 3], &[2, 3]])
    }

    #[test]
    fn ordering_rejects_repeats_and_zero() {
        assert_eq!(
            Ordering::new(vec![1, 2, 1]).unwrap_err(),
            OrderingError::RepeatedVertex { vertex: 1 }
        );
        assert_eq!(Ordering::new(vec![0]).unwrap_err(), OrderingError::ZeroVertexId);
    }

    #[test]
    fn triangle_identity_ordering() {
        let g = triangle();
        let profile = g.effective_coverage(&ord(&[1, 2, 3])).unwrap();
        assert_eq!(profile.coverages(), &[2, 1, 0]);
        assert_eq!(profile.total_cost(), 4);
        assert_eq!(profile.cover_size(), 2);
        assert_eq!(g.solution_cost(&ord(&[1, 2, 3])).unwrap(), 4);
        assert_eq!(g.implied_cover(&ord(&[1, 2, 3])).unwrap(), vec![1, 2]);
    }

    #[test]
    fn prefix_extends_by_ascending_unused() {
        let g = triangle();
        // Prefix <3> extends to <3,1,2>: vertex 3 covers {1,3} and {2,3},
        // vertex 1 covers {1,2}.
        let profile = g.effective_coverage(&ord(&[3])).unwrap();
        assert_eq!(profile.coverages(), &[2, 1, 0]);
        assert_eq!(profile.total_cost(), 4);
        assert_eq!(g.extend_ordering(&ord(&[3])).unwrap(), vec![3, 1, 2]);
    }

    #[test]
    fn unknown_vertex_is_an_error() {
        let g = triangle();
        assert_eq!(
            g.solution_cost(&ord(&[7])).unwrap_err(),
            OrderingError::UnknownVertex { vertex: 7, vertex_count: 3 }
        );
    }

    #[test]
    fn implied_cover_requires_covering_sequence() {
        let g = triangle();
        // The prefix <1> leaves {2,3} uncovered: that is an error, not an
        // implicit extension.
        assert_eq!(
            g.implied_cover(&ord(&[1])).unwrap_err(),
            OrderingError::IncompleteCover { edge: vec![2, 3] }
        );
        // A covering prefix needs no extension.
        assert_eq!(g.implied_cover(&ord(&[2, 3])).unwrap(), vec![2, 3]);
    }

    #[test]
    fn edgeless_cover_is_empty() {
        let g = Hypergraph::edgeless(3);
        assert_eq!(g.implied_cover(&Ordering::empty()).unwrap(), Vec::<VertexId>::new());
        let profile = g.effective_coverage(&Ordering::empty()).unwrap();
        assert_eq!(profile.cover_size(), 0);
        assert_eq!(profile.total_cost(), 0);
    }

    #[test]
    fn normalize_moves_dead_position_past_cover_end() {
        // Edges {1} and {3}: vertex 2 covers nothing at position 2, so it
        // moves past the cover; cost drops from 4 to 3.
        let g = h(3, &[&[1], &[3]]);
        let normalized = g.normalize(&ord(&[1, 2, 3])).unwrap();
        assert_eq!(normalized.sequence(), &[1, 3, 2]);
        assert_eq!(g.solution_cost(&normalized).unwrap(), 3);
    }

    #[test]
    fn normalize_keeps_clean_orderings() {
        let g = triangle();
        let normalized = g.normalize(&ord(&[3, 1, 2])).unwrap();
        assert_eq!(normalized.sequence(), &[3, 1, 2]);
    }

    #[test]
    fn normalize_requires_full_permutation() {
        let g = triangle();
        assert_eq!(
            g.normalize(&ord(&[1, 2])).unwrap_err(),
            OrderingError::NotAPermutation { got: 2, expected: 3 }
        );
    }

    #[test]
    fn dominance_examples() {
        assert_eq!(
            dominance_compare(&[1, 1, 1], &[2, 1, 0]).unwrap(),
            Dominance::StrictlyGreater { lhs: 6, rhs: 4 }
        );
        assert_eq!(
            dominance_compare(&[2, 2, 0], &[3, 1, 0]).unwrap(),
            Dominance::StrictlyGreater { lhs: 6, rhs: 5 }
        );
        assert_eq!(
            dominance_compare(&[2, 1], &[2, 1]).unwrap(),
            Dominance::Equal { weighted: 4 }
        );
    }

    #[test]
    fn dominance_rejects_mismatch() {
        assert!(matches!(
            dominance_compare(&[1, 1], &[1, 1, 1]),
            Err(DominanceError::LengthMismatch { .. })
        ));
        assert!(matches!(
            dominance_compare(&[2, 1, 0], &[1, 1, 0]),
            Err(DominanceError::SumMismatch { .. })
        ));
    }

    #[test]
    fn dominance_without_crossover_makes_no_claim() {
        // s dips below `earlier` again after rising above it.
        assert_eq!(
            dominance_compare(&[3, 1, 1, 1], &[2, 2, 1, 1]).unwrap(),
            Dominance::PreconditionViolated
        );
        // Not non-increasing.
        assert_eq!(
            dominance_compare(&[1, 2, 1], &[2, 1, 1]).unwrap(),
            Dominance::PreconditionViolated
        );
    }
}
