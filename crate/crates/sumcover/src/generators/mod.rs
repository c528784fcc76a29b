//! Instance generators: simple graphs, seeded random hypergraphs, and the
//! structured benchmark families in [`hg`] and [`bq`].

pub mod bq;
pub mod hg;

use crate::hypergraph::{Hypergraph, VertexId};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub use bq::{BqClass, BqLayout, BqParams};
pub use hg::{apex_first_ordering, HgLabels};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("instance too large: {what} = {value} exceeds the cap of {cap}")]
    TooLarge { what: &'static str, value: u64, cap: u64 },
}

/// An undirected simple graph on vertices `1..=n`, stored as a sorted,
/// deduplicated list of endpoint pairs `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
}

impl SimpleGraph {
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self, GeneratorError> {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(GeneratorError::InvalidParameter(format!(
                    "edge {u}-{v} is a self-loop"
                )));
            }
            for w in [u, v] {
                if w == 0 || w as usize > vertex_count {
                    return Err(GeneratorError::InvalidParameter(format!(
                        "edge {u}-{v} mentions vertex {w}, but the graph has vertices 1..={vertex_count}"
                    )));
                }
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        normalized.dedup();
        Ok(Self { vertex_count, edges: normalized })
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n as VertexId).map(|i| (i, i + 1)).collect();
        Self { vertex_count: n, edges }
    }

    pub fn cycle(n: usize) -> Result<Self, GeneratorError> {
        if n < 3 {
            return Err(GeneratorError::InvalidParameter(format!(
                "a cycle needs at least 3 vertices, got {n}"
            )));
        }
        let mut edges: Vec<(VertexId, VertexId)> =
            (1..n as VertexId).map(|i| (i, i + 1)).collect();
        edges.push((1, n as VertexId));
        edges.sort_unstable();
        Ok(Self { vertex_count: n, edges })
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 1..=n as VertexId {
            for v in (u + 1)..=n as VertexId {
                edges.push((u, v));
            }
        }
        Self { vertex_count: n, edges }
    }

    pub fn empty(n: usize) -> Self {
        Self { vertex_count: n, edges: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).is_ok()
    }

    /// The same graph viewed as a rank-2 hypergraph.
    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph::new(self.vertex_count, self.edges.iter().map(|&(u, v)| vec![u, v]))
            .expect("simple-graph edges are always valid hypergraph edges")
    }
}

/// Binomial coefficient, saturating at `u64::MAX`.
pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Generates a hypergraph with exactly `edge_count` distinct edges of size
/// between 1 and `rank`, sampled uniformly per edge from a seeded generator.
/// The same parameters always produce the same instance.
pub fn random_hypergraph(
    vertex_count: usize,
    edge_count: usize,
    rank: usize,
    seed: u64,
) -> Result<Hypergraph, GeneratorError> {
    if vertex_count == 0 && edge_count > 0 {
        return Err(GeneratorError::InvalidParameter(
            "cannot place edges on an empty vertex set".into(),
        ));
    }
    if rank == 0 && edge_count > 0 {
        return Err(GeneratorError::InvalidParameter(
            "rank 0 admits no edges".into(),
        ));
    }
    let rank = rank.min(vertex_count);
    let possible: u64 = (1..=rank as u64)
        .map(|s| binomial(vertex_count as u64, s))
        .fold(0u64, u64::saturating_add);
    if (edge_count as u64) > possible {
        return Err(GeneratorError::InvalidParameter(format!(
            "requested {edge_count} distinct edges, but only {possible} exist \
             at {vertex_count} vertices and rank {rank}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = std::collections::HashSet::new();
    let mut edges: Vec<Vec<VertexId>> = Vec::with_capacity(edge_count);
    while edges.len() < edge_count {
        let size = rng.gen_range(1..=rank);
        let mut edge: Vec<VertexId> = sample(&mut rng, vertex_count, size)
            .into_iter()
            .map(|i| i as VertexId + 1)
            .collect();
        edge.sort_unstable();
        if seen.insert(edge.clone()) {
            edges.push(edge);
        }
    }
    Hypergraph::new(vertex_count, edges).map_err(|e| {
        GeneratorError::InvalidParameter(format!("internal generator defect: {e}"))
    })
}

/// Labels for the two-spider benchmark graph built by [`twin_spiders`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinSpiderLabels {
    /// The hub of each component.
    pub hubs: [VertexId; 2],
    /// The four spoke vertices of each component, adjacent to its hub.
    pub spokes: [[VertexId; 4]; 2],
}

/// Builds the fixed 30-vertex benchmark graph with two identical spider
/// components. Each component has a hub adjacent to four spokes and to two
/// private leaves, and every spoke carries two private leaves of its own, so
/// hubs have degree 6, spokes degree 3, and each component contributes 14
/// edges.
pub fn twin_spiders() -> (Hypergraph, TwinSpiderLabels) {
    let per_component = 15;
    let mut edges: Vec<Vec<VertexId>> = Vec::new();
    let mut hubs = [0; 2];
    let mut spokes = [[0; 4]; 2];
    for comp in 0..2u32 {
        let base = comp * per_component;
        let hub = base + 1;
        hubs[comp as usize] = hub;
        // Spokes 2..=5, hub leaves 6..=7, spoke leaves 8..=15.
        for s in 0..4u32 {
            let spoke = base + 2 + s;
            spokes[comp as usize][s as usize] = spoke;
            edges.push(vec![hub, spoke]);
            for leaf in 0..2u32 {
                edges.push(vec![spoke, base + 8 + 2 * s + leaf]);
            }
        }
        for leaf in 0..2u32 {
            edges.push(vec![hub, base + 6 + leaf]);
        }
    }
    let hypergraph = Hypergraph::new(2 * per_component as usize, edges)
        .expect("construction uses only in-range vertices");
    (hypergraph, TwinSpiderLabels { hubs, spokes })
}
