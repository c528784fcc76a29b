//! Constructive sunflower search.
//!
//! A *sunflower* with core `K` is a family of edges whose pairwise
//! intersections all equal `K` (so the petals minus the core are pairwise
//! disjoint). Any hypergraph of rank `r` with more than `r · r! · (k−1)^r`
//! edges contains a sunflower with `k` petals, and [`find_sunflower`]
//! always produces one above that threshold: it greedily collects a maximal
//! pairwise-disjoint edge family (a core-∅ sunflower if large enough), and
//! otherwise recurses on the link of the most frequent vertex — above the
//! threshold that vertex is frequent enough for the smaller instance to
//! stay above its own threshold. Below the threshold the same search runs
//! as a best effort and may return `None`.

use super::SolveError;
use crate::hypergraph::{Hypergraph, VertexId};
use std::collections::BTreeMap;

/// A sunflower: the `core` plus `petals` (full edges, each containing the
/// core). Pairwise intersections of petals equal the core exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sunflower {
    /// Common pairwise intersection, sorted ascending. May be empty.
    pub core: Vec<VertexId>,
    /// The edges forming the sunflower, each sorted ascending.
    pub petals: Vec<Vec<VertexId>>,
}

impl Sunflower {
    pub fn petal_count(&self) -> usize {
        self.petals.len()
    }

    /// Structural validity against a hypergraph: every petal is an edge of
    /// `h`, contains the core, and distinct petals intersect exactly in the
    /// core.
    pub fn is_valid_for(&self, h: &Hypergraph) -> bool {
        let edge_set: std::collections::HashSet<&[VertexId]> = h.edges().collect();
        for petal in &self.petals {
            if !edge_set.contains(petal.as_slice()) {
                return false;
            }
            if !is_subset(&self.core, petal) {
                return false;
            }
        }
        for (i, a) in self.petals.iter().enumerate() {
            for b in &self.petals[i + 1..] {
                if intersect(a, b) != self.core {
                    return false;
                }
            }
        }
        true
    }
}

fn is_subset(small: &[VertexId], big: &[VertexId]) -> bool {
    small.iter().all(|v| big.binary_search(v).is_ok())
}

fn intersect(a: &[VertexId], b: &[VertexId]) -> Vec<VertexId> {
    a.iter().filter(|v| b.binary_search(v).is_ok()).copied().collect()
}

/// The guarantee threshold: with strictly more edges than this, a sunflower
/// with `petals` petals must exist. Saturates instead of overflowing.
pub fn sunflower_threshold(rank: usize, petals: usize) -> u128 {
    if petals == 0 {
        return 0;
    }
    let mut value: u128 = rank as u128;
    for i in 1..=rank as u128 {
        value = value.saturating_mul(i);
    }
    for _ in 0..rank {
        value = value.saturating_mul(petals as u128 - 1);
    }
    value
}

/// Searches for a sunflower with at least `petals_wanted` petals. Above the
/// rank threshold (see [`sunflower_threshold`]) this always succeeds;
/// below it the search is best-effort. Deterministic: the disjoint family
/// is collected first-fit in stored edge order, and recursion picks the
/// most frequent vertex with ties to the smallest id.
pub fn find_sunflower(
    h: &Hypergraph,
    petals_wanted: usize,
) -> Result<Option<Sunflower>, SolveError> {
    if petals_wanted == 0 {
        return Err(SolveError::ZeroPetals);
    }
    let edges: Vec<Vec<VertexId>> = h.edges().map(|e| e.to_vec()).collect();
    Ok(search(edges, petals_wanted))
}

fn search(edges: Vec<Vec<VertexId>>, wanted: usize) -> Option<Sunflower> {
    // Greedy maximal pairwise-disjoint family, first-fit in stored order.
    let mut family: Vec<usize> = Vec::new();
    let mut used: std::collections::HashSet<VertexId> = std::collections::HashSet::new();
    for (i, edge) in edges.iter().enumerate() {
        if edge.iter().all(|v| !used.contains(v)) {
            family.push(i);
            used.extend(edge.iter().copied());
        }
    }
    if family.len() >= wanted {
        return Some(Sunflower {
            core: Vec::new(),
            petals: family.into_iter().map(|i| edges[i].clone()).collect(),
        });
    }
    // Too few disjoint edges: every edge meets the family's small vertex
    // union, so some vertex is frequent. Recurse on its link.
    let mut frequency: BTreeMap<VertexId, usize> = BTreeMap::new();
    for edge in &edges {
        for &v in edge {
            *frequency.entry(v).or_insert(0) += 1;
        }
    }
    // BTreeMap iteration is id-ascending; strict `>` keeps the smallest id on ties.
    let mut best: Option<(VertexId, usize)> = None;
    for (&v, &count) in &frequency {
        if best.is_none_or(|(_, c)| count > c) {
            best = Some((v, count));
        }
    }
    let (pivot, _) = best?;
    let link: Vec<Vec<VertexId>> = edges
        .iter()
        .filter(|e| e.binary_search(&pivot).is_ok())
        .map(|e| e.iter().copied().filter(|&v| v != pivot).collect())
        .collect();
    let sub = search(link, wanted)?;
    let mut core = sub.core;
    let insert_at = core.binary_search(&pivot).unwrap_err();
    core.insert(insert_at, pivot);
    let petals = sub
        .petals
        .into_iter()
        .map(|mut p| {
            let at = p.binary_search(&pivot).unwrap_err();
            p.insert(at, pivot);
            p
        })
        .collect();
    Some(Sunflower { core, petals })
}
