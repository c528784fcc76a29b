//! Fixed-parameter decision: is there an ordering whose implied cover has
//! at most `k` vertices and whose cost is at most `w`?
//!
//! The search keeps a partial cover `S`. While the residual hypergraph
//! `H − S` has more than `r · r! · (k−|S|)^r` edges (`r` the rank of the
//! input), it must contain a sunflower with `k−|S|+1` petals; any cover
//! within budget has to hit that sunflower's core (missing it would cost
//! one private vertex per petal — more than the remaining budget), so the
//! search branches on the ≤ r core vertices. Once the residual is small,
//! the non-isolated residual vertices form a kernel: every subset `T` of
//! the kernel with `|T| ≤ k−|S|` is tried, and each covering `S ∪ T` is
//! ordered optimally by the subset dynamic program. A branch accepts when
//! that minimum cost is ≤ `w`.

use super::held_karp::held_karp_order;
use super::sunflower::{find_sunflower, sunflower_threshold};
use super::SolveError;
use crate::hypergraph::{Hypergraph, VertexId};
use crate::ordering::Ordering;

/// A decision query: hypergraph plus cover-size budget `k` and cost
/// budget `w`.
#[derive(Debug, Clone)]
pub struct Instance {
    hypergraph: Hypergraph,
    k: usize,
    w: u64,
}

impl Instance {
    /// Builds a query, rejecting a cover budget larger than the vertex set.
    pub fn new(hypergraph: Hypergraph, k: usize, w: u64) -> Result<Self, SolveError> {
        if k > hypergraph.vertex_count() {
            return Err(SolveError::CoverBudgetExceedsVertices {
                k,
                vertex_count: hypergraph.vertex_count(),
            });
        }
        Ok(Self { hypergraph, k, w })
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.hypergraph
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn w(&self) -> u64 {
        self.w
    }
}

/// Outcome of [`fpt_decide`]. A `Yes` carries a witness ordering: its
/// implied cover has at most `k` vertices and its cost is at most `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Yes { witness: Ordering },
    No,
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes { .. })
    }
}

/// Decides whether some ordering covers everything with implied cover size
/// ≤ `k` and cost ≤ `w`. Always terminates with a decision for any budget
/// the subset DP can order (`k` ≤ [`super::HELD_KARP_MAX`]); beyond that
/// cap the search reports the DP budget error rather than falling back to
/// factorial enumeration.
pub fn fpt_decide(inst: &Instance) -> Result<Decision, SolveError> {
    let h = &inst.hypergraph;
    if h.edge_count() == 0 {
        // Nothing to cover: the empty prefix has cost 0 and cover size 0.
        return Ok(Decision::Yes { witness: Ordering::empty() });
    }
    if inst.w < h.edge_count() as u64 {
        // Every edge pays at least position 1, so cost ≥ |E| always.
        return Ok(Decision::No);
    }
    let mut partial = Vec::new();
    Ok(match branch(h, h.rank(), inst.k, inst.w, &mut partial)? {
        Some(witness) => Decision::Yes { witness },
        None => Decision::No,
    })
}

/// One node of the branching tree; `partial` is the sorted set S of
/// original vertex ids already committed to the cover.
fn branch(
    h: &Hypergraph,
    rank: usize,
    k: usize,
    w: u64,
    partial: &mut Vec<VertexId>,
) -> Result<Option<Ordering>, SolveError> {
    let (residual, ids) = h
        .remove_vertices(partial)
        .expect("partial cover contains only valid vertex ids");
    let slots = k - partial.len();
    if (residual.edge_count() as u128) > sunflower_threshold(rank, slots + 1) {
        if slots == 0 {
            return Ok(None);
        }
        let sunflower = find_sunflower(&residual, slots + 1)?
            .expect("edge count is above the sunflower guarantee threshold");
        if sunflower.core.is_empty() {
            // slots+1 pairwise disjoint edges need slots+1 distinct new
            // cover vertices: over budget on this branch.
            return Ok(None);
        }
        // Try core vertices by descending residual degree, ties to the
        // smallest original id.
        let mut order: Vec<(usize, VertexId)> = sunflower
            .core
            .iter()
            .map(|&v| (residual.degree(v), ids.old_id(v)))
            .collect();
        order.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
        for (_, vertex) in order {
            let at = partial
                .binary_search(&vertex)
                .expect_err("core vertices live in the residual, outside S");
            partial.insert(at, vertex);
            let found = branch(h, rank, k, w, partial)?;
            partial.remove(at);
            if found.is_some() {
                return Ok(found);
            }
        }
        return Ok(None);
    }
    // Kernel stage: residual is small. Isolated residual vertices are
    // dropped; subsets of the rest extend S, smallest subsets first,
    // lexicographic within a size.
    let kernel: Vec<VertexId> = residual
        .vertices()
        .filter(|&v| residual.degree(v) > 0)
        .map(|v| ids.old_id(v))
        .collect();
    let mut chosen = Vec::new();
    for size in 0..=slots.min(kernel.len()) {
        if let Some(witness) = try_subsets(h, &kernel, size, 0, partial, &mut chosen, w)? {
            return Ok(Some(witness));
        }
    }
    Ok(None)
}

/// Extends `chosen` to a subset of `kernel[from..]` of size `want`,
/// testing each completed S ∪ T.
fn try_subsets(
    h: &Hypergraph,
    kernel: &[VertexId],
    want: usize,
    from: usize,
    partial: &[VertexId],
    chosen: &mut Vec<VertexId>,
    w: u64,
) -> Result<Option<Ordering>, SolveError> {
    if chosen.len() == want {
        let mut cover: Vec<VertexId> = partial.iter().chain(chosen.iter()).copied().collect();
        cover.sort_unstable();
        if !is_cover(h, &cover) {
            return Ok(None);
        }
        let (ordering, cost) = held_karp_order(h, &cover)?;
        if cost > w {
            return Ok(None);
        }
        let prefix = h
            .implied_cover(&ordering)
            .expect("an ordering of a cover covers every edge");
        let witness = Ordering::new(prefix).expect("prefix of a valid ordering");
        return Ok(Some(witness));
    }
    let needed = want - chosen.len();
    if from + needed > kernel.len() {
        return Ok(None);
    }
    for i in from..=kernel.len() - needed {
        chosen.push(kernel[i]);
        let found = try_subsets(h, kernel, want, i + 1, partial, chosen, w)?;
        chosen.pop();
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

fn is_cover(h: &Hypergraph, sorted_cover: &[VertexId]) -> bool {
    h.edges()
        .all(|e| e.iter().any(|v| sorted_cover.binary_search(v).is_ok()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: usize, edges: &[&[VertexId]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| e.to_vec())).unwrap()
    }

    fn triangle() -> Hypergraph {
        h(3, &[&[1, 2], &[1, 3], &[2, 3]])
    }

    fn decide(g: &Hypergraph, k: usize, w: u64) -> Decision {
        fpt_decide(&Instance::new(g.clone(), k, w).unwrap()).unwrap()
    }

    #[test]
    fn triangle_budget_four_is_yes_with_witness() {
        match decide(&triangle(), 2, 4) {
            Decision::Yes { witness } => {
                assert_eq!(witness.sequence(), &[1, 2]);
                assert_eq!(triangle().solution_cost(&witness).unwrap(), 4);
            }
            Decision::No => panic!("expected yes"),
        }
    }

    #[test]
    fn triangle_single_vertex_budget_is_no() {
        assert_eq!(decide(&triangle(), 1, 100), Decision::No);
    }

    #[test]
    fn triangle_cost_three_is_no() {
        assert_eq!(decide(&triangle(), 2, 3), Decision::No);
    }

    #[test]
    fn cost_below_edge_count_is_an_instant_no() {
        assert_eq!(decide(&triangle(), 3, 2), Decision::No);
    }

    #[test]
    fn edgeless_accepts_with_empty_witness() {
        let g = Hypergraph::edgeless(5);
        match decide(&g, 0, 0) {
            Decision::Yes { witness } => assert!(witness.is_empty()),
            Decision::No => panic!("expected yes"),
        }
    }

    #[test]
    fn zero_cover_budget_with_edges_is_no() {
        assert_eq!(decide(&triangle(), 0, 10), Decision::No);
    }

    #[test]
    fn cover_budget_larger_than_vertex_set_is_rejected() {
        let err = Instance::new(triangle(), 4, 10).unwrap_err();
        assert_eq!(err, SolveError::CoverBudgetExceedsVertices { k: 4, vertex_count: 3 });
    }

    /// Three singleton edges exceed the rank-1 threshold for k = 2
    /// (1·1!·2¹ = 2), and the sunflower found is a disjoint family whose
    /// core is empty — an immediate rejection on that branch.
    #[test]
    fn disjoint_singletons_hit_the_empty_core_rejection() {
        let g = h(5, &[&[1], &[2], &[3]]);
        assert_eq!(decide(&g, 2, 100), Decision::No);
        assert!(decide(&g, 3, 100).is_yes());
    }

    /// A double star with 20 rank-2 edges exceeds the k = 2 threshold
    /// (2·2!·2² = 16), forcing the sunflower branching loop before the
    /// kernel stage. Unique minimum cover {1, 2}; best cost 10·1 + 10·2.
    #[test]
    fn double_star_exercises_the_branching_loop() {
        let mut edges: Vec<Vec<VertexId>> = Vec::new();
        for leaf in 3..=12u32 {
            edges.push(vec![1, leaf]);
        }
        for leaf in 3..=12u32 {
            edges.push(vec![2, leaf]);
        }
        let g = Hypergraph::new(12, edges).unwrap();
        assert_eq!(g.edge_count(), 20);
        match decide(&g, 2, 30) {
            Decision::Yes { witness } => {
                assert_eq!(g.solution_cost(&witness).unwrap(), 30);
                assert!(g.implied_cover(&witness).unwrap().len() <= 2);
            }
            Decision::No => panic!("expected yes at the exact optimum"),
        }
        assert_eq!(decide(&g, 2, 29), Decision::No);
    }

    /// The witness contract: implied cover within k, cost within w.
    #[test]
    fn witnesses_satisfy_both_budgets() {
        let g = h(6, &[&[1, 2, 3], &[3, 4], &[4, 5], &[5, 6], &[1, 6]]);
        for k in 0..=6usize {
            for w in [4u64, 5, 6, 7, 8, 20] {
                if let Decision::Yes { witness } =
                    fpt_decide(&Instance::new(g.clone(), k, w).unwrap()).unwrap()
                {
                    assert!(g.implied_cover(&witness).unwrap().len() <= k);
                    assert!(g.solution_cost(&witness).unwrap() <= w);
                }
            }
        }
    }
}
