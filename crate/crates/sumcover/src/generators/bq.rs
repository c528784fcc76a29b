//! The layered bipartite family with a large set-cover/ordered-cover gap.
//!
//! One copy with branching factor `n >= 2` and depth `q >= 0` is built
//! around a block size `N = n^q`:
//!
//! * class `L` holds `2N` vertices, class `R0` holds `2N` vertices, and
//!   `L` and `R0` are joined by a perfect matching (`L_j — R0_j`);
//! * for each level `i in 1..=q`, class `R_i` holds `N` vertices; `L` is
//!   split into `n^(q-i)` contiguous parts of size `2n^i` and `R_i` into
//!   parts of size `n^i`, and matching parts are joined completely.
//!
//! Every `L` vertex therefore has degree `1 + n + n² + … + n^q`, every `R0`
//! vertex degree 1, and every level-`i` vertex degree `2n^i`. The whole
//! instance is `p >= 1` disjoint copies of that structure.
//!
//! Vertex ids are dense and contiguous per class — `L` first, then `R0`,
//! then `R_1..R_q` — so cross-instance comparisons can be done by index
//! arithmetic instead of isomorphism search; [`BqLayout`] exposes the
//! arithmetic.

use super::GeneratorError;
use crate::hypergraph::{Hypergraph, VertexId};
use crate::ordering::Ordering;

/// Cap on the total vertex count across all copies.
pub const MAX_VERTICES: u64 = 1_000_000;

/// Parameters: branching factor `n >= 2`, depth `q >= 0`, copies `p >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BqParams {
    pub n: usize,
    pub q: usize,
    pub p: usize,
}

/// Role of a vertex inside its copy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BqClass {
    /// Matching-left vertex, index `1..=2N`.
    L { index: usize },
    /// Right-side vertex on `level 0..=q`; level 0 is the matching side
    /// (index `1..=2N`), higher levels hold `N` vertices each.
    R { level: usize, index: usize },
}

/// Id arithmetic for one parameter choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BqLayout {
    n: usize,
    q: usize,
    p: usize,
    /// `N = n^q`.
    block: usize,
}

impl BqLayout {
    pub fn new(params: BqParams) -> Result<Self, GeneratorError> {
        let BqParams { n, q, p } = params;
        if n < 2 {
            return Err(GeneratorError::InvalidParameter(format!(
                "branching factor must be at least 2, got {n}"
            )));
        }
        if p < 1 {
            return Err(GeneratorError::InvalidParameter(
                "at least one copy is required".into(),
            ));
        }
        let block = (n as u64)
            .checked_pow(q as u32)
            .filter(|&b| b <= MAX_VERTICES)
            .ok_or(GeneratorError::TooLarge {
                what: "block size",
                value: u64::MAX,
                cap: MAX_VERTICES,
            })?;
        let total = (p as u64)
            .checked_mul(q as u64 + 4)
            .and_then(|x| x.checked_mul(block))
            .ok_or(GeneratorError::TooLarge {
                what: "total vertex count",
                value: u64::MAX,
                cap: MAX_VERTICES,
            })?;
        if total > MAX_VERTICES {
            return Err(GeneratorError::TooLarge {
                what: "total vertex count",
                value: total,
                cap: MAX_VERTICES,
            });
        }
        Ok(Self { n, q, p, block: block as usize })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn copies(&self) -> usize {
        self.p
    }

    /// `N = n^q`.
    pub fn block_size(&self) -> usize {
        self.block
    }

    pub fn vertices_per_copy(&self) -> usize {
        (self.q + 4) * self.block
    }

    pub fn vertex_count(&self) -> usize {
        self.p * self.vertices_per_copy()
    }

    pub fn edges_per_copy(&self) -> u64 {
        // 2N * (1 + n + … + n^q)
        let powers: u64 = (0..=self.q as u32).map(|i| (self.n as u64).pow(i)).sum();
        2 * self.block as u64 * powers
    }

    pub fn edge_count(&self) -> u64 {
        self.p as u64 * self.edges_per_copy()
    }

    /// Matching-left vertex `index` (`1..=2N`) of the given copy (0-based).
    pub fn l_vertex(&self, copy: usize, index: usize) -> VertexId {
        assert!(copy < self.p && (1..=2 * self.block).contains(&index));
        (copy * self.vertices_per_copy() + index) as VertexId
    }

    /// Right-side vertex `index` on `level` of the given copy; level 0 has
    /// indices `1..=2N`, levels `1..=q` have `1..=N`.
    pub fn r_vertex(&self, copy: usize, level: usize, index: usize) -> VertexId {
        assert!(copy < self.p && level <= self.q);
        let offset = if level == 0 {
            assert!((1..=2 * self.block).contains(&index));
            2 * self.block
        } else {
            assert!((1..=self.block).contains(&index));
            4 * self.block + (level - 1) * self.block
        };
        (copy * self.vertices_per_copy() + offset + index) as VertexId
    }

    /// Copy and class of a vertex id.
    pub fn classify(&self, v: VertexId) -> Option<(usize, BqClass)> {
        let v = v as usize;
        if v == 0 || v > self.vertex_count() {
            return None;
        }
        let copy = (v - 1) / self.vertices_per_copy();
        let within = (v - 1) % self.vertices_per_copy() + 1;
        let class = if within <= 2 * self.block {
            BqClass::L { index: within }
        } else if within <= 4 * self.block {
            BqClass::R { level: 0, index: within - 2 * self.block }
        } else {
            let beyond = within - 4 * self.block - 1;
            BqClass::R { level: beyond / self.block + 1, index: beyond % self.block + 1 }
        };
        Some((copy, class))
    }

    /// Number of parts the level-`i` split uses (`n^(q-i)`, for `1 <= i <= q`).
    pub fn part_count(&self, level: usize) -> usize {
        assert!((1..=self.q).contains(&level));
        self.n.pow((self.q - level) as u32)
    }

    /// All matching-left vertices of a copy, ascending.
    pub fn l_class(&self, copy: usize) -> Vec<VertexId> {
        (1..=2 * self.block).map(|i| self.l_vertex(copy, i)).collect()
    }

    /// All right-side vertices of a copy on one level, ascending.
    pub fn r_class(&self, copy: usize, level: usize) -> Vec<VertexId> {
        let count = if level == 0 { 2 * self.block } else { self.block };
        (1..=count).map(|i| self.r_vertex(copy, level, i)).collect()
    }

    /// The deliberately cheap ordering: all top-level right vertices (copy
    /// by copy), then the next level down, …, then all of `L`. Every
    /// level-`i` pick is the first vertex on its `2n^i` incident edges, and
    /// every `L` pick closes its matching edge, so the cost has a closed
    /// form that analysis checks against measured cost.
    pub fn cheap_ordering(&self) -> Ordering {
        let mut seq = Vec::new();
        for level in (1..=self.q).rev() {
            for copy in 0..self.p {
                seq.extend(self.r_class(copy, level));
            }
        }
        for copy in 0..self.p {
            seq.extend(self.l_class(copy));
        }
        Ordering::new(seq).expect("layout ids are distinct and nonzero")
    }

    /// Maps vertex ids of a one-copy layout with depth `q-1` (`sub`) into
    /// this layout's `copy`, landing on its `j`-th depth-`(q-1)` sub-block
    /// (`0 <= j < n`). Removing the top-level right class of a copy leaves
    /// `n` disjoint pieces; piece `j` is edge-identical to the depth-`q-1`
    /// instance under the returned map (index = sub id - 1, value = id
    /// here).
    pub fn sub_copy_vertex_map(
        &self,
        copy: usize,
        j: usize,
        sub: &BqLayout,
    ) -> Result<Vec<VertexId>, GeneratorError> {
        if self.q == 0 || sub.q != self.q - 1 || sub.n != self.n || sub.p != 1 {
            return Err(GeneratorError::InvalidParameter(format!(
                "sub-layout must be one copy at depth {} with branching {}",
                self.q.saturating_sub(1),
                self.n
            )));
        }
        if j >= self.n || copy >= self.p {
            return Err(GeneratorError::InvalidParameter(format!(
                "sub-block {j} of copy {copy} does not exist"
            )));
        }
        let m = sub.block; // n^(q-1)
        let mut map = vec![0; sub.vertex_count()];
        for index in 1..=2 * m {
            map[sub.l_vertex(0, index) as usize - 1] = self.l_vertex(copy, j * 2 * m + index);
            map[sub.r_vertex(0, 0, index) as usize - 1] =
                self.r_vertex(copy, 0, j * 2 * m + index);
        }
        for level in 1..=sub.q {
            for index in 1..=m {
                map[sub.r_vertex(0, level, index) as usize - 1] =
                    self.r_vertex(copy, level, j * m + index);
            }
        }
        Ok(map)
    }
}

/// Builds the instance and its layout.
pub fn build(params: BqParams) -> Result<(Hypergraph, BqLayout), GeneratorError> {
    let layout = BqLayout::new(params)?;
    let mut edges: Vec<Vec<VertexId>> = Vec::with_capacity(layout.edge_count() as usize);
    for copy in 0..layout.copies() {
        // Perfect matching between L and R0.
        for index in 1..=2 * layout.block_size() {
            edges.push(vec![layout.l_vertex(copy, index), layout.r_vertex(copy, 0, index)]);
        }
        // Level i: part t of L (size 2n^i) joined completely to part t of R_i
        // (size n^i).
        for level in 1..=layout.q() {
            let l_part = 2 * layout.n().pow(level as u32);
            let r_part = layout.n().pow(level as u32);
            for part in 0..layout.part_count(level) {
                for r in 1..=r_part {
                    let rv = layout.r_vertex(copy, level, part * r_part + r);
                    for l in 1..=l_part {
                        edges.push(vec![layout.l_vertex(copy, part * l_part + l), rv]);
                    }
                }
            }
        }
    }
    let hypergraph = Hypergraph::new(layout.vertex_count(), edges)
        .expect("layout produces in-range, nonempty edges");
    debug_assert_eq!(hypergraph.edge_count() as u64, layout.edge_count());
    Ok((hypergraph, layout))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn depth_zero_is_a_double_matching() {
        let (h, layout) = build(BqParams { n: 2, q: 0, p: 1 }).unwrap();
        assert_eq!(h.vertex_count(), 4);
        assert_eq!(h.edge_count(), 2);
        assert_eq!(h.connected_components().len(), 2);
        assert_eq!(layout.block_size(), 1);
    }

    #[test]
    fn depth_one_shape_and_degrees() {
        let (h, layout) = build(BqParams { n: 2, q: 1, p: 1 }).unwrap();
        // N = 2: L and R0 have 4 vertices each, R1 has 2; edges 4 + 2*4 = 12.
        assert_eq!(h.vertex_count(), 10);
        assert_eq!(h.edge_count(), 12);
        assert_eq!(layout.edge_count(), 12);
        for v in layout.l_class(0) {
            assert_eq!(h.degree(v), 3); // 1 matching + n levels... 1 + n = 3
        }
        for v in layout.r_class(0, 0) {
            assert_eq!(h.degree(v), 1);
        }
        for v in layout.r_class(0, 1) {
            assert_eq!(h.degree(v), 4); // 2n^1
        }
        assert_eq!(h.connected_components().len(), 1);
    }

    #[test]
    fn copies_are_disjoint_translates() {
        let (h, layout) = build(BqParams { n: 2, q: 1, p: 3 }).unwrap();
        assert_eq!(h.vertex_count(), 30);
        assert_eq!(h.edge_count(), 36);
        assert_eq!(h.connected_components().len(), 3);
        let shift = layout.vertices_per_copy() as VertexId;
        let copy0: Vec<Vec<VertexId>> = h
            .edges()
            .filter(|e| e.iter().all(|&v| v <= shift))
            .map(|e| e.to_vec())
            .collect();
        for c in 1..3 {
            let lo = c * shift;
            let hi = (c + 1) * shift;
            let translated: Vec<Vec<VertexId>> = h
                .edges()
                .filter(|e| e.iter().all(|&v| v > lo && v <= hi))
                .map(|e| e.iter().map(|&v| v - lo).collect())
                .collect();
            assert_eq!(copy0, translated);
        }
    }

    #[test]
    fn classify_inverts_id_arithmetic() {
        let layout = BqLayout::new(BqParams { n: 3, q: 2, p: 2 }).unwrap();
        for copy in 0..2 {
            for index in [1, 5, 2 * layout.block_size()] {
                let v = layout.l_vertex(copy, index);
                assert_eq!(layout.classify(v), Some((copy, BqClass::L { index })));
            }
            for level in 0..=2 {
                let v = layout.r_vertex(copy, level, 1);
                assert_eq!(layout.classify(v), Some((copy, BqClass::R { level, index: 1 })));
            }
        }
        assert_eq!(layout.classify(0), None);
        assert_eq!(layout.classify(layout.vertex_count() as VertexId + 1), None);
    }

    #[test]
    fn cheap_ordering_covers_everything_level_by_level() {
        let (h, layout) = build(BqParams { n: 2, q: 2, p: 1 }).unwrap();
        let profile = h.effective_coverage(&layout.cheap_ordering()).unwrap();
        // First N picks (top level) cover 2n^2 = 8 each, next picks 2n = 4
        // each, then L covers 1 each.
        let n = layout.block_size(); // 4
        assert!(profile.coverages()[..n].iter().all(|&c| c == 8));
        assert!(profile.coverages()[n..2 * n].iter().all(|&c| c == 4));
        assert!(profile.coverages()[2 * n..4 * n].iter().all(|&c| c == 1));
        // 8*(1+2+3+4) + 4*(5+6+7+8) + (9+...+16) = 80 + 104 + 100.
        assert_eq!(profile.total_cost(), 284);
        assert_eq!(profile.cover_size(), 4 * n);
    }

    #[test]
    fn sub_blocks_match_smaller_depth() {
        let (big, layout) = build(BqParams { n: 3, q: 1, p: 1 }).unwrap();
        let (small, sub) = build(BqParams { n: 3, q: 0, p: 1 }).unwrap();
        // Edges of the big instance that avoid the top right class.
        let top: std::collections::HashSet<VertexId> =
            layout.r_class(0, 1).into_iter().collect();
        let mut residual: Vec<Vec<VertexId>> = big
            .edges()
            .filter(|e| e.iter().all(|v| !top.contains(v)))
            .map(|e| e.to_vec())
            .collect();
        residual.sort();
        let mut mapped: Vec<Vec<VertexId>> = Vec::new();
        for j in 0..3 {
            let map = layout.sub_copy_vertex_map(0, j, &sub).unwrap();
            for edge in small.edges() {
                let mut image: Vec<VertexId> =
                    edge.iter().map(|&v| map[v as usize - 1]).collect();
                image.sort_unstable();
                mapped.push(image);
            }
        }
        mapped.sort();
        assert_eq!(residual, mapped);
    }

    #[test]
    fn caps_and_parameter_checks() {
        assert!(matches!(
            BqLayout::new(BqParams { n: 1, q: 1, p: 1 }),
            Err(GeneratorError::InvalidParameter(_))
        ));
        assert!(matches!(
            BqLayout::new(BqParams { n: 2, q: 1, p: 0 }),
            Err(GeneratorError::InvalidParameter(_))
        ));
        assert!(matches!(
            BqLayout::new(BqParams { n: 10, q: 7, p: 1 }),
            Err(GeneratorError::TooLarge { .. })
        ));
    }
}
