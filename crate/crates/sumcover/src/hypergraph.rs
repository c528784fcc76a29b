//! The core hypergraph type: a finite vertex set `1..=n` together with a
//! list of distinct, non-empty edges (subsets of the vertex set).
//!
//! Edges are stored sorted; duplicate edges passed to the constructor are
//! merged silently (callers that need to warn about duplicates compare the
//! input length against [`Hypergraph::edge_count`]). An empty edge is
//! rejected outright: no ordering can ever cover it, so the instance would
//! be uncoverable.

use std::collections::HashSet;
use thiserror::Error;

/// Vertex identifier. Vertices of a hypergraph on `n` vertices are exactly
/// the ids `1..=n`; `0` is never a valid vertex.
pub type VertexId = u32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HypergraphError {
    /// An input edge was empty. Empty edges are uncoverable, so the whole
    /// instance is rejected rather than silently dropped.
    #[error("edge #{index} is empty: an instance with an empty edge is uncoverable")]
    EmptyEdge { index: usize },
    /// An edge mentions a vertex outside `1..=vertex_count`.
    #[error("vertex {vertex} out of range 1..={vertex_count}")]
    VertexOutOfRange { vertex: VertexId, vertex_count: usize },
}

/// An immutable hypergraph. Construction validates all invariants:
/// every edge is non-empty, sorted, free of repeats, within `1..=n`,
/// and no two edges are equal as sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    vertex_count: usize,
    edges: Vec<Box<[VertexId]>>,
    degrees: Vec<usize>,
    rank: usize,
}

impl Hypergraph {
    /// Builds a hypergraph on vertices `1..=vertex_count` from the given
    /// edges. Vertex repeats inside an edge and duplicate edges across the
    /// list are merged; edge order is the first-occurrence order of the
    /// input, which stays stable across runs.
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = Vec<VertexId>>,
    ) -> Result<Self, HypergraphError> {
        let mut seen: HashSet<Box<[VertexId]>> = HashSet::new();
        let mut out: Vec<Box<[VertexId]>> = Vec::new();
        let mut degrees = vec![0usize; vertex_count];
        let mut rank = 0usize;
        for (index, mut edge) in edges.into_iter().enumerate() {
            edge.sort_unstable();
            edge.dedup();
            if edge.is_empty() {
                return Err(HypergraphError::EmptyEdge { index });
            }
            for &v in &edge {
                if v == 0 || v as usize > vertex_count {
                    return Err(HypergraphError::VertexOutOfRange { vertex: v, vertex_count });
                }
            }
            let boxed: Box<[VertexId]> = edge.into_boxed_slice();
            if seen.insert(boxed.clone()) {
                for &v in boxed.iter() {
                    degrees[v as usize - 1] += 1;
                }
                rank = rank.max(boxed.len());
                out.push(boxed);
            }
        }
        Ok(Self { vertex_count, edges: out, degrees, rank })
    }

    /// A hypergraph with vertices but no edges.
    pub fn edgeless(vertex_count: usize) -> Self {
        Self::new(vertex_count, std::iter::empty()).expect("no edges to validate")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Largest edge size; 0 for an edgeless hypergraph.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of edges containing `v`. Panics if `v` is not a vertex.
    pub fn degree(&self, v: VertexId) -> usize {
        assert!(self.is_vertex(v), "vertex {v} out of range");
        self.degrees[v as usize - 1]
    }

    pub fn is_vertex(&self, v: VertexId) -> bool {
        v >= 1 && v as usize <= self.vertex_count
    }

    /// All vertex ids, ascending.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        1..=self.vertex_count as VertexId
    }

    /// Edges in stored order, each sorted ascending.
    pub fn edges(&self) -> impl Iterator<Item = &[VertexId]> {
        self.edges.iter().map(|e| e.as_ref())
    }

    pub fn edge(&self, index: usize) -> &[VertexId] {
        &self.edges[index]
    }

    /// The hypergraph obtained by deleting a vertex set `S`: vertices outside
    /// `S` are renumbered densely (ascending order preserved) and every edge
    /// that intersects `S` is dropped entirely; the surviving edges are kept
    /// intact. Returns the new hypergraph together with the id translation.
    pub fn remove_vertices(
        &self,
        remove: &[VertexId],
    ) -> Result<(Hypergraph, IdMap), HypergraphError> {
        let mut removed = vec![false; self.vertex_count];
        for &v in remove {
            if !self.is_vertex(v) {
                return Err(HypergraphError::VertexOutOfRange {
                    vertex: v,
                    vertex_count: self.vertex_count,
                });
            }
            removed[v as usize - 1] = true;
        }
        let mut old_to_new = vec![None; self.vertex_count];
        let mut new_to_old = Vec::new();
        for old in 0..self.vertex_count {
            if !removed[old] {
                new_to_old.push(old as VertexId + 1);
                old_to_new[old] = Some(new_to_old.len() as VertexId);
            }
        }
        let surviving = self.edges.iter().filter_map(|e| {
            if e.iter().any(|&v| removed[v as usize - 1]) {
                None
            } else {
                Some(e.iter().map(|&v| old_to_new[v as usize - 1].unwrap()).collect())
            }
        });
        let sub = Hypergraph::new(new_to_old.len(), surviving)?;
        Ok((sub, IdMap { old_to_new, new_to_old }))
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// member. Isolated vertices form singleton components.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let mut incident: Vec<Vec<u32>> = vec![Vec::new(); self.vertex_count];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e.iter() {
                incident[v as usize - 1].push(i as u32);
            }
        }
        let mut comp = vec![usize::MAX; self.vertex_count];
        let mut components: Vec<Vec<VertexId>> = Vec::new();
        for start in 0..self.vertex_count {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut members = vec![start as VertexId + 1];
            comp[start] = id;
            let mut queue = vec![start];
            while let Some(u) = queue.pop() {
                for &ei in &incident[u] {
                    for &w in self.edges[ei as usize].iter() {
                        let wi = w as usize - 1;
                        if comp[wi] == usize::MAX {
                            comp[wi] = id;
                            members.push(w);
                            queue.push(wi);
                        }
                    }
                }
            }
            members.sort_unstable();
            components.push(members);
        }
        components
    }
}

/// Vertex id translation produced by [`Hypergraph::remove_vertices`].
#[derive(Debug, Clone)]
pub struct IdMap {
    old_to_new: Vec<Option<VertexId>>,
    new_to_old: Vec<VertexId>,
}

impl IdMap {
    /// New id of an original vertex, or `None` if it was removed.
    pub fn new_id(&self, old: VertexId) -> Option<VertexId> {
        self.old_to_new.get(old as usize - 1).copied().flatten()
    }

    /// Original id of a vertex of the reduced hypergraph.
    pub fn old_id(&self, new: VertexId) -> VertexId {
        self.new_to_old[new as usize - 1]
    }

    /// Number of surviving vertices.
    pub fn surviving(&self) -> usize {
        self.new_to_old.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: usize, edges: &[&[VertexId]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| e.to_vec())).unwrap()
    }

    #[test]
    fn construction_sorts_and_merges() {
        let g = Hypergraph::new(3, vec![vec![2, 1], vec![1, 2], vec![3, 3]]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.edge(0), &[1, 2]);
        assert_eq!(g.edge(1), &[3]);
        assert_eq!(g.rank(), 2);
        assert_eq!(g.degree(1), 1);
        assert_eq!(g.degree(3), 1);
    }

    #[test]
    fn empty_edge_rejected() {
        let err = Hypergraph::new(2, vec![vec![1], vec![]]).unwrap_err();
        assert_eq!(err, HypergraphError::EmptyEdge { index: 1 });
    }

    #[test]
    fn out_of_range_rejected() {
        let err = Hypergraph::new(2, vec![vec![1, 3]]).unwrap_err();
        assert_eq!(err, HypergraphError::VertexOutOfRange { vertex: 3, vertex_count: 2 });
        let err = Hypergraph::new(2, vec![vec![0]]).unwrap_err();
        assert_eq!(err, HypergraphError::VertexOutOfRange { vertex: 0, vertex_count: 2 });
    }

    #[test]
    fn remove_vertices_drops_touched_edges() {
        // Removing the middle of a path keeps both endpoints but no edges.
        let g = h(3, &[&[1, 2], &[2, 3]]);
        let (sub, map) = g.remove_vertices(&[2]).unwrap();
        assert_eq!(sub.vertex_count(), 2);
        assert_eq!(sub.edge_count(), 0);
        assert_eq!(map.new_id(1), Some(1));
        assert_eq!(map.new_id(2), None);
        assert_eq!(map.new_id(3), Some(2));
        assert_eq!(map.old_id(2), 3);
    }

    #[test]
    fn remove_vertices_keeps_untouched_edges_intact() {
        let g = h(4, &[&[1, 2], &[3, 4], &[2, 4]]);
        let (sub, map) = g.remove_vertices(&[1]).unwrap();
        assert_eq!(sub.vertex_count(), 3);
        let edges: Vec<_> = sub.edges().collect();
        assert_eq!(edges, vec![&[2, 3][..], &[1, 3][..]]);
        assert_eq!(map.new_id(3), Some(2));
    }

    #[test]
    fn remove_unknown_vertex_errors() {
        let g = h(2, &[&[1, 2]]);
        assert!(g.remove_vertices(&[5]).is_err());
    }

    #[test]
    fn components_include_isolated_singletons() {
        let g = h(5, &[&[1, 2], &[4, 5]]);
        let comps = g.connected_components();
        assert_eq!(comps, vec![vec![1, 2], vec![3], vec![4, 5]]);
    }
}
