//! Minimum-cost ordering of a fixed cover via a subset dynamic program.

use super::{count_intersection, edge_mask_blocks, EdgeMask, SolveError};
use crate::hypergraph::{Hypergraph, VertexId};
use crate::ordering::Ordering;

/// Largest cover the subset dynamic program accepts (`2^24` states).
pub const HELD_KARP_MAX: usize = 24;

/// Deduplicates, validates, and checks that `cover` hits every edge.
/// Returns the sorted members and their edge-incidence masks.
fn prepare_cover(
    h: &Hypergraph,
    cover: &[VertexId],
) -> Result<(Vec<VertexId>, Vec<EdgeMask>), SolveError> {
    let mut members: Vec<VertexId> = cover.to_vec();
    members.sort_unstable();
    members.dedup();
    for &v in &members {
        if !h.is_vertex(v) {
            return Err(SolveError::UnknownVertex { vertex: v });
        }
    }
    let blocks = edge_mask_blocks(h.edge_count());
    let mut masks = vec![vec![0u64; blocks]; members.len()];
    for (i, edge) in h.edges().enumerate() {
        let mut covered = false;
        for &v in edge {
            if let Ok(slot) = members.binary_search(&v) {
                masks[slot][i / 64] |= 1 << (i % 64);
                covered = true;
            }
        }
        if !covered {
            return Err(SolveError::NotACover { edge: edge.to_vec() });
        }
    }
    Ok((members, masks))
}

/// Finds a minimum-cost ordering of exactly the vertices in `cover`
/// (which must hit every edge), together with that cost.
///
/// Dynamic program over subsets `U` of the cover: the value of `U` is the
/// cheapest way to fill the first `|U|` positions with `U`, where adding
/// `v` to `U` pays `(|U|+1) ×` (edges first covered by `v` after `U`).
/// Ties go to the smallest-id extension, so the result is deterministic.
/// The cost equals the minimum of [`Hypergraph::solution_cost`] over all
/// `|cover|!` arrangements; tests check that equivalence exhaustively via
/// [`min_cost_over_permutations`].
pub fn held_karp_order(
    h: &Hypergraph,
    cover: &[VertexId],
) -> Result<(Ordering, u64), SolveError> {
    let (members, masks) = prepare_cover(h, cover)?;
    let size = members.len();
    if size > HELD_KARP_MAX {
        return Err(SolveError::CoverTooLarge { size, max: HELD_KARP_MAX });
    }
    let states = 1usize << size;
    let mut cost = vec![u64::MAX; states];
    let mut parent = vec![u8::MAX; states];
    cost[0] = 0;
    let blocks = edge_mask_blocks(h.edge_count());
    let mut covered = vec![0u64; blocks];
    for mask in 0..states {
        if cost[mask] == u64::MAX {
            continue;
        }
        covered.iter_mut().for_each(|b| *b = 0);
        for (slot, slot_mask) in masks.iter().enumerate() {
            if mask & (1 << slot) != 0 {
                for (c, m) in covered.iter_mut().zip(slot_mask) {
                    *c |= m;
                }
            }
        }
        let position = mask.count_ones() as u64 + 1;
        for (slot, slot_mask) in masks.iter().enumerate() {
            if mask & (1 << slot) != 0 {
                continue;
            }
            let total = count_intersection(slot_mask, slot_mask);
            let already = count_intersection(slot_mask, &covered);
            let newly = total - already;
            let candidate = cost[mask] + position * newly;
            let next = mask | (1 << slot);
            if candidate < cost[next] {
                cost[next] = candidate;
                parent[next] = slot as u8;
            }
        }
    }
    let mut seq = Vec::with_capacity(size);
    let mut mask = states - 1;
    while mask != 0 {
        let slot = parent[mask] as usize;
        seq.push(members[slot]);
        mask ^= 1 << slot;
    }
    seq.reverse();
    let total = cost[states - 1];
    Ok((Ordering::new(seq).expect("cover members are distinct valid ids"), total))
}

/// Reference implementation: tries every permutation of `cover` (in
/// lexicographic order, so ties resolve to the lexicographically smallest
/// arrangement) and keeps the cheapest. Only sensible for small covers;
/// sizes above 10 are rejected.
pub fn min_cost_over_permutations(
    h: &Hypergraph,
    cover: &[VertexId],
) -> Result<(Ordering, u64), SolveError> {
    const MAX: usize = 10;
    let (members, masks) = prepare_cover(h, cover)?;
    if members.len() > MAX {
        return Err(SolveError::CoverTooLarge { size: members.len(), max: MAX });
    }
    let blocks = edge_mask_blocks(h.edge_count());
    let mut best: Option<(Vec<VertexId>, u64)> = None;
    let mut current: Vec<usize> = Vec::new();
    let mut used = vec![false; members.len()];
    permute(&members, &masks, &mut current, &mut used, &mut vec![0u64; blocks], 0, &mut best);
    let (seq, cost) = best.expect("the empty permutation always evaluates");
    Ok((Ordering::new(seq).expect("cover members are distinct valid ids"), cost))
}

#[allow(clippy::too_many_arguments)]
fn permute(
    members: &[VertexId],
    masks: &[EdgeMask],
    current: &mut Vec<usize>,
    used: &mut [bool],
    covered: &mut Vec<u64>,
    cost_so_far: u64,
    best: &mut Option<(Vec<VertexId>, u64)>,
) {
    if current.len() == members.len() {
        if best.as_ref().is_none_or(|(_, c)| cost_so_far < *c) {
            *best = Some((current.iter().map(|&s| members[s]).collect(), cost_so_far));
        }
        return;
    }
    let position = current.len() as u64 + 1;
    for slot in 0..members.len() {
        if used[slot] {
            continue;
        }
        let total = count_intersection(&masks[slot], &masks[slot]);
        let already = count_intersection(&masks[slot], covered);
        let newly = total - already;
        let saved: Vec<u64> = covered.clone();
        for (c, m) in covered.iter_mut().zip(&masks[slot]) {
            *c |= m;
        }
        used[slot] = true;
        current.push(slot);
        permute(members, masks, current, used, covered, cost_so_far + position * newly, best);
        current.pop();
        used[slot] = false;
        covered.copy_from_slice(&saved);
    }
}
