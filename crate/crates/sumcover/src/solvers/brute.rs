//! Exhaustive oracles: minimum set cover, minimum ordering cost, and full
//! enumeration of optimal normalized orderings.
//!
//! The ordering searches walk prefixes depth-first, always in ascending
//! vertex-id order, with three prunings:
//!
//! * (a) *normalization*: a pick must cover at least one new edge;
//! * (b) *cost bound*: a prefix is cut when its cost plus an admissible
//!   completion bound cannot beat the incumbent — the bound charges the
//!   remaining edges to the earliest positions allowed by the coverage cap;
//! * (c) *monotonicity* (optional): a pick may not cover more than its
//!   predecessor did. Every optimal normalized ordering has a non-increasing
//!   coverage profile, so this cut preserves all optima; the claim itself is
//!   cross-checked in the test suite by diffing enumerations with (c) on
//!   and off.
//!
//! Every search charges explored prefixes against a [`SearchBudget`] and
//! reports [`SolveError::BudgetExceeded`] rather than ever returning an
//! unproven answer.

use super::{
    count_intersection, full_edge_mask, greedy_mssc, incidence_masks, is_all_clear, EdgeMask,
    SearchBudget, SolveError,
};
use crate::hypergraph::{Hypergraph, VertexId};
use crate::ordering::Ordering;

/// Everything the exhaustive ordering solver proves about an instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    /// Minimum ordering cost.
    pub phi: u64,
    /// Minimum set-cover size.
    pub tau: usize,
    /// Maximum cover size over all optimal normalized orderings.
    pub tau_arrow: usize,
    /// An optimal ordering prefix of length `tau_arrow`.
    pub witness_max_cover: Ordering,
    /// An optimal ordering prefix of the smallest cover size among optima.
    pub witness_min_cover: Ordering,
}

struct Search<'a> {
    h: &'a Hypergraph,
    incidence: Vec<EdgeMask>,
    max_nodes: u64,
    explored: u64,
}

/// Cheapest possible completion when `uncovered` edges remain, the prefix
/// ends at `pos`, and no later position may cover more than `cap` edges:
/// fill positions `pos+1, pos+2, …` at `cap` edges each.
fn completion_bound(uncovered: u64, pos: u64, cap: u64) -> u64 {
    if uncovered == 0 {
        return 0;
    }
    let cap = cap.min(uncovered).max(1);
    let full = uncovered / cap;
    let rest = uncovered % cap;
    // cap edges at each of positions pos+1 ..= pos+full, then the remainder.
    let mut bound = cap * (full * pos + full * (full + 1) / 2);
    if rest > 0 {
        bound += rest * (pos + full + 1);
    }
    bound
}

impl<'a> Search<'a> {
    fn new(h: &'a Hypergraph, budget: &SearchBudget) -> Self {
        Self { h, incidence: incidence_masks(h), max_nodes: budget.max_nodes, explored: 0 }
    }

    fn charge(&mut self) -> Result<(), SolveError> {
        self.explored += 1;
        if self.explored > self.max_nodes {
            Err(SolveError::BudgetExceeded { explored: self.explored })
        } else {
            Ok(())
        }
    }

    /// Unused vertices that cover at least one uncovered edge and at most
    /// `limit` of them, in ascending id order, with their coverage counts.
    fn candidates(
        &self,
        uncovered: &EdgeMask,
        in_prefix: &[bool],
        limit: u64,
    ) -> Vec<(usize, u64)> {
        (1..=self.h.vertex_count())
            .filter(|&v| !in_prefix[v - 1])
            .filter_map(|v| {
                let newly = count_intersection(uncovered, &self.incidence[v - 1]);
                (newly > 0 && newly <= limit).then_some((v, newly))
            })
            .collect()
    }

    /// Pass 1: minimum cost, seeded with the greedy incumbent.
    fn minimum_cost(&mut self, monotone: bool) -> Result<u64, SolveError> {
        if self.h.edge_count() == 0 {
            return Ok(0);
        }
        let mut incumbent = greedy_mssc(self.h).1;
        let mut uncovered = full_edge_mask(self.h.edge_count());
        let mut in_prefix = vec![false; self.h.vertex_count()];
        let count = self.h.edge_count() as u64;
        self.cost_dfs(&mut uncovered, count, 0, 0, u64::MAX, monotone, &mut in_prefix, &mut incumbent)?;
        Ok(incumbent)
    }

    #[allow(clippy::too_many_arguments)]
    fn cost_dfs(
        &mut self,
        uncovered: &mut EdgeMask,
        uncovered_count: u64,
        pos: u64,
        cost: u64,
        r_prev: u64,
        monotone: bool,
        in_prefix: &mut [bool],
        incumbent: &mut u64,
    ) -> Result<(), SolveError> {
        self.charge()?;
        if uncovered_count == 0 {
            if cost < *incumbent {
                *incumbent = cost;
            }
            return Ok(());
        }
        let candidates = self.candidates(uncovered, in_prefix, if monotone { r_prev } else { u64::MAX });
        // No future position can cover more than the best remaining vertex.
        let cap = candidates.iter().map(|&(_, newly)| newly).max().unwrap_or(0);
        if cap == 0 || cost + completion_bound(uncovered_count, pos, cap) >= *incumbent {
            return Ok(());
        }
        for (v, newly) in candidates {
            in_prefix[v - 1] = true;
            let removed: Vec<u64> =
                uncovered.iter().zip(&self.incidence[v - 1]).map(|(u, i)| u & i).collect();
            for (u, r) in uncovered.iter_mut().zip(&removed) {
                *u &= !r;
            }
            let result = self.cost_dfs(
                uncovered,
                uncovered_count - newly,
                pos + 1,
                cost + (pos + 1) * newly,
                newly,
                monotone,
                in_prefix,
                incumbent,
            );
            for (u, r) in uncovered.iter_mut().zip(&removed) {
                *u |= r;
            }
            in_prefix[v - 1] = false;
            result?;
        }
        Ok(())
    }

    /// Pass 2: visit every normalized covering prefix of cost exactly `phi`
    /// (all of them when `monotone` is off, the non-increasing ones when it
    /// is on). The callback returns `false` to stop early.
    fn enumerate_optima(
        &mut self,
        phi: u64,
        monotone: bool,
        f: &mut dyn FnMut(&[VertexId]) -> bool,
    ) -> Result<(), SolveError> {
        let mut uncovered = full_edge_mask(self.h.edge_count());
        let mut in_prefix = vec![false; self.h.vertex_count()];
        let mut prefix = Vec::new();
        let count = self.h.edge_count() as u64;
        self.enum_dfs(&mut uncovered, count, 0, phi, u64::MAX, monotone, &mut in_prefix, &mut prefix, f)?;
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn enum_dfs(
        &mut self,
        uncovered: &mut EdgeMask,
        uncovered_count: u64,
        cost: u64,
        phi: u64,
        r_prev: u64,
        monotone: bool,
        in_prefix: &mut [bool],
        prefix: &mut Vec<VertexId>,
        f: &mut dyn FnMut(&[VertexId]) -> bool,
    ) -> Result<bool, SolveError> {
        self.charge()?;
        if uncovered_count == 0 {
            debug_assert_eq!(cost, phi, "a covering leaf below the optimum would contradict phi");
            return Ok(f(prefix));
        }
        let pos = prefix.len() as u64;
        let candidates = self.candidates(uncovered, in_prefix, if monotone { r_prev } else { u64::MAX });
        let cap = candidates.iter().map(|&(_, newly)| newly).max().unwrap_or(0);
        if cap == 0 || cost + completion_bound(uncovered_count, pos, cap) > phi {
            return Ok(true);
        }
        for (v, newly) in candidates {
            in_prefix[v - 1] = true;
            prefix.push(v as VertexId);
            let removed: Vec<u64> =
                uncovered.iter().zip(&self.incidence[v - 1]).map(|(u, i)| u & i).collect();
            for (u, r) in uncovered.iter_mut().zip(&removed) {
                *u &= !r;
            }
            let keep_going = self.enum_dfs(
                uncovered,
                uncovered_count - newly,
                cost + (pos + 1) * newly,
                phi,
                newly,
                monotone,
                in_prefix,
                prefix,
                f,
            );
            for (u, r) in uncovered.iter_mut().zip(&removed) {
                *u |= r;
            }
            prefix.pop();
            in_prefix[v - 1] = false;
            if !keep_going? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Cheapest covering prefix for each exact cover size, with no cost
    /// pruning — the basis for budgeted decisions.
    fn best_by_cover_size(&mut self) -> Result<Vec<Option<u64>>, SolveError> {
        let n = self.h.vertex_count();
        let mut best: Vec<Option<u64>> = vec![None; n + 1];
        let mut uncovered = full_edge_mask(self.h.edge_count());
        let mut in_prefix = vec![false; n];
        let count = self.h.edge_count() as u64;
        self.size_dfs(&mut uncovered, count, 0, 0, u64::MAX, &mut in_prefix, &mut best)?;
        Ok(best)
    }

    #[allow(clippy::too_many_arguments)]
    fn size_dfs(
        &mut self,
        uncovered: &mut EdgeMask,
        uncovered_count: u64,
        pos: u64,
        cost: u64,
        r_prev: u64,
        in_prefix: &mut [bool],
        best: &mut [Option<u64>],
    ) -> Result<(), SolveError> {
        self.charge()?;
        if uncovered_count == 0 {
            let slot = &mut best[pos as usize];
            if slot.is_none_or(|old| cost < old) {
                *slot = Some(cost);
            }
            return Ok(());
        }
        for v in 1..=self.h.vertex_count() {
            if in_prefix[v - 1] {
                continue;
            }
            let newly = count_intersection(uncovered, &self.incidence[v - 1]);
            if newly == 0 || newly > r_prev {
                continue;
            }
            in_prefix[v - 1] = true;
            let removed: Vec<u64> =
                uncovered.iter().zip(&self.incidence[v - 1]).map(|(u, i)| u & i).collect();
            for (u, r) in uncovered.iter_mut().zip(&removed) {
                *u &= !r;
            }
            let result = self.size_dfs(
                uncovered,
                uncovered_count - newly,
                pos + 1,
                cost + (pos + 1) * newly,
                newly,
                in_prefix,
                best,
            );
            for (u, r) in uncovered.iter_mut().zip(&removed) {
                *u |= r;
            }
            in_prefix[v - 1] = false;
            result?;
        }
        Ok(())
    }
}

/// Minimum set-cover size with a witness cover, by branch and bound on a
/// smallest uncovered edge. The lower bound counts a greedily-built family
/// of pairwise disjoint uncovered edges, each of which needs its own cover
/// vertex. Deterministic: branches try edge vertices in ascending order and
/// the witness improves only strictly.
pub fn brute_force_tau(h: &Hypergraph) -> (usize, Vec<VertexId>) {
    let m = h.edge_count();
    if m == 0 {
        return (0, Vec::new());
    }
    let incidence = incidence_masks(h);
    let mut best: Vec<VertexId> = greedy_mssc(h).0.sequence().to_vec();
    let mut uncovered = full_edge_mask(m);
    let mut chosen: Vec<VertexId> = Vec::new();
    tau_dfs(h, &incidence, &mut uncovered, &mut chosen, &mut best);
    (best.len(), best)
}

fn disjoint_family_bound(h: &Hypergraph, uncovered: &EdgeMask) -> usize {
    let mut blocked = vec![false; h.vertex_count()];
    let mut family = 0;
    for i in 0..h.edge_count() {
        if uncovered[i / 64] & (1 << (i % 64)) == 0 {
            continue;
        }
        let edge = h.edge(i);
        if edge.iter().all(|&v| !blocked[v as usize - 1]) {
            family += 1;
            for &v in edge {
                blocked[v as usize - 1] = true;
            }
        }
    }
    family
}

fn tau_dfs(
    h: &Hypergraph,
    incidence: &[EdgeMask],
    uncovered: &mut EdgeMask,
    chosen: &mut Vec<VertexId>,
    best: &mut Vec<VertexId>,
) {
    if is_all_clear(uncovered) {
        if chosen.len() < best.len() {
            *best = chosen.clone();
        }
        return;
    }
    if chosen.len() + disjoint_family_bound(h, uncovered) >= best.len() {
        return;
    }
    // Branch on a smallest uncovered edge (ties: lowest index).
    let mut branch_edge = usize::MAX;
    for i in 0..h.edge_count() {
        if uncovered[i / 64] & (1 << (i % 64)) != 0
            && (branch_edge == usize::MAX || h.edge(i).len() < h.edge(branch_edge).len())
        {
            branch_edge = i;
        }
    }
    for &v in h.edge(branch_edge) {
        chosen.push(v);
        let removed: Vec<u64> =
            uncovered.iter().zip(&incidence[v as usize - 1]).map(|(u, i)| u & i).collect();
        for (u, r) in uncovered.iter_mut().zip(&removed) {
            *u &= !r;
        }
        tau_dfs(h, incidence, uncovered, chosen, best);
        for (u, r) in uncovered.iter_mut().zip(&removed) {
            *u |= r;
        }
        chosen.pop();
    }
}

/// Solves the instance exactly: minimum cost, minimum cover size, maximum
/// cover size over optimal normalized orderings, and witness orderings for
/// both extremes.
pub fn brute_force_mssc(h: &Hypergraph, budget: &SearchBudget) -> Result<ExactResult, SolveError> {
    let mut search = Search::new(h, budget);
    let phi = search.minimum_cost(true)?;
    let mut max_witness: Option<Vec<VertexId>> = None;
    let mut min_witness: Option<Vec<VertexId>> = None;
    search.enumerate_optima(phi, true, &mut |prefix| {
        if max_witness.as_ref().is_none_or(|w| prefix.len() > w.len()) {
            max_witness = Some(prefix.to_vec());
        }
        if min_witness.as_ref().is_none_or(|w| prefix.len() < w.len()) {
            min_witness = Some(prefix.to_vec());
        }
        true
    })?;
    let max_witness = max_witness.expect("an optimum always exists");
    let min_witness = min_witness.expect("an optimum always exists");
    let (tau, _) = brute_force_tau(h);
    Ok(ExactResult {
        phi,
        tau,
        tau_arrow: max_witness.len(),
        witness_max_cover: Ordering::new(max_witness).expect("search prefixes are valid"),
        witness_min_cover: Ordering::new(min_witness).expect("search prefixes are valid"),
    })
}

/// Calls `f` once per optimal normalized ordering prefix, in ascending-id
/// depth-first order; `f` returns `false` to stop early. Returns the
/// optimal cost. Uses the non-increasing cut (every normalized optimum is
/// non-increasing); [`for_each_normalized_optimum`] is the uncut reference.
pub fn for_each_optimum(
    h: &Hypergraph,
    budget: &SearchBudget,
    mut f: impl FnMut(&[VertexId]) -> bool,
) -> Result<u64, SolveError> {
    let mut search = Search::new(h, budget);
    let phi = search.minimum_cost(true)?;
    search.enumerate_optima(phi, true, &mut f)?;
    Ok(phi)
}

/// Reference enumerator: every normalized optimal prefix, found without
/// structural pruning. Slower; exists so tests can verify that the pruned
/// enumeration loses nothing.
pub fn for_each_normalized_optimum(
    h: &Hypergraph,
    budget: &SearchBudget,
    mut f: impl FnMut(&[VertexId]) -> bool,
) -> Result<u64, SolveError> {
    let mut search = Search::new(h, budget);
    let phi = search.minimum_cost(false)?;
    search.enumerate_optima(phi, false, &mut f)?;
    Ok(phi)
}

/// Maximum cover size over all optimal normalized orderings.
pub fn tau_arrow(h: &Hypergraph, budget: &SearchBudget) -> Result<usize, SolveError> {
    brute_force_mssc(h, budget).map(|r| r.tau_arrow)
}

/// For each cover size `L` (index `0..=|V|`), the minimum cost of a
/// normalized non-increasing covering prefix of length exactly `L`, or
/// `None` when no such prefix exists. Any ordered cover of size at most `k`
/// and cost at most `w` can be reshaped — coverage-sorted, then stripped of
/// dead positions — into one of this restricted class without raising
/// either quantity, so these values decide every (k, w) question.
pub fn min_cost_by_cover_size(
    h: &Hypergraph,
    budget: &SearchBudget,
) -> Result<Vec<Option<u64>>, SolveError> {
    Search::new(h, budget).best_by_cover_size()
}

/// Decision oracle: is there an ordered cover of size at most `k` with cost
/// at most `w`? Answered by exhaustive enumeration; the independent check
/// for the parameterized solver.
pub fn decide_by_enumeration(
    h: &Hypergraph,
    k: usize,
    w: u64,
    budget: &SearchBudget,
) -> Result<bool, SolveError> {
    let best = min_cost_by_cover_size(h, budget)?;
    let limit = k.min(h.vertex_count());
    Ok(best[..=limit].iter().any(|slot| slot.is_some_and(|cost| cost <= w)))
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

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    #[test]
    fn triangle_exact() {
        let result = brute_force_mssc(&triangle(), &budget()).unwrap();
        assert_eq!(result.phi, 4);
        assert_eq!(result.tau, 2);
        assert_eq!(result.tau_arrow, 2);
        assert_eq!(result.witness_max_cover.len(), 2);
        assert_eq!(result.witness_min_cover.len(), 2);
        let g = triangle();
        assert_eq!(g.solution_cost(&result.witness_max_cover).unwrap(), 4);
    }

    #[test]
    fn triangle_has_six_optima() {
        let mut count = 0;
        let phi = for_each_optimum(&triangle(), &budget(), |prefix| {
            assert_eq!(prefix.len(), 2);
            count += 1;
            true
        })
        .unwrap();
        assert_eq!(phi, 4);
        assert_eq!(count, 6);
        // The unpruned reference finds exactly the same set.
        let mut reference = 0;
        for_each_normalized_optimum(&triangle(), &budget(), |_| {
            reference += 1;
            true
        })
        .unwrap();
        assert_eq!(reference, 6);
    }

    #[test]
    fn path_four_optima() {
        // Path 1-2-3-4: cost 4 optima are exactly the four prefixes
        // <2,3>, <2,4>, <3,1>, <3,2>.
        let path = h(4, &[&[1, 2], &[2, 3], &[3, 4]]);
        let mut found = Vec::new();
        let phi = for_each_optimum(&path, &budget(), |prefix| {
            found.push(prefix.to_vec());
            true
        })
        .unwrap();
        assert_eq!(phi, 4);
        assert_eq!(found, vec![vec![2, 3], vec![2, 4], vec![3, 1], vec![3, 2]]);
        let result = brute_force_mssc(&path, &budget()).unwrap();
        assert_eq!((result.tau, result.tau_arrow), (2, 2));
    }

    #[test]
    fn star_center_dominates() {
        let star = h(6, &[&[1, 2], &[1, 3], &[1, 4], &[1, 5], &[1, 6]]);
        let result = brute_force_mssc(&star, &budget()).unwrap();
        assert_eq!(result.phi, 5);
        assert_eq!(result.tau, 1);
        assert_eq!(result.tau_arrow, 1);
        assert_eq!(result.witness_max_cover.sequence(), &[1]);
    }

    #[test]
    fn edgeless_instance() {
        let empty = Hypergraph::edgeless(4);
        let result = brute_force_mssc(&empty, &budget()).unwrap();
        assert_eq!(result.phi, 0);
        assert_eq!(result.tau, 0);
        assert_eq!(result.tau_arrow, 0);
        assert!(result.witness_max_cover.is_empty());
        assert_eq!(brute_force_tau(&empty), (0, vec![]));
    }

    #[test]
    fn tau_witnesses_are_covers() {
        let path = h(4, &[&[1, 2], &[2, 3], &[3, 4]]);
        let (tau, witness) = brute_force_tau(&path);
        assert_eq!(tau, 2);
        assert_eq!(witness.len(), 2);
        for edge in path.edges() {
            assert!(edge.iter().any(|v| witness.contains(v)));
        }
        assert_eq!(brute_force_tau(&triangle()).0, 2);
    }

    #[test]
    fn cover_size_table() {
        let best = min_cost_by_cover_size(&triangle(), &budget()).unwrap();
        assert_eq!(best, vec![None, None, Some(4), None]);
        let star = h(3, &[&[1, 2], &[1, 3]]);
        let best = min_cost_by_cover_size(&star, &budget()).unwrap();
        // Cover {1} costs 2; cover {2,3} costs 1+2=3.
        assert_eq!(best, vec![None, Some(2), Some(3), None]);
    }

    #[test]
    fn decisions_from_enumeration() {
        let g = triangle();
        assert!(decide_by_enumeration(&g, 2, 4, &budget()).unwrap());
        assert!(!decide_by_enumeration(&g, 2, 3, &budget()).unwrap());
        assert!(!decide_by_enumeration(&g, 1, 100, &budget()).unwrap());
        assert!(decide_by_enumeration(&g, 3, 4, &budget()).unwrap());
        let empty = Hypergraph::edgeless(2);
        assert!(decide_by_enumeration(&empty, 0, 0, &budget()).unwrap());
    }

    #[test]
    fn tiny_budget_is_an_error() {
        let err = brute_force_mssc(&triangle(), &SearchBudget::new(1)).unwrap_err();
        assert!(matches!(err, SolveError::BudgetExceeded { .. }));
    }

    #[test]
    fn completion_bound_shapes() {
        // 5 edges, cap 2, after position 3: 2@4 + 2@5 + 1@6 = 24.
        assert_eq!(completion_bound(5, 3, 2), 24);
        // Uncapped: everything at the next position.
        assert_eq!(completion_bound(5, 3, u64::MAX), 20);
        assert_eq!(completion_bound(0, 3, 2), 0);
    }
}
