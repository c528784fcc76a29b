//! Solvers, instance generators and verification tools for the minimum sum
//! set cover problem (and its graph special case, minimum sum vertex cover).
//!
//! An ordering of the vertices of a hypergraph covers each edge at the
//! position of the first vertex that hits it; the cost of the ordering is the
//! sum of those positions over all edges. This crate provides:
//!
//! * [`Hypergraph`] and [`Ordering`] with the full cost model
//!   (effective coverage, solution cost, implied covers, normalization),
//! * exact solvers (pruned exhaustive search over normalized orderings,
//!   branch-and-bound minimum cover, a subset-DP optimal ordering of a fixed
//!   cover, a sunflower-based parameterized decision procedure) and a greedy
//!   heuristic,
//! * generator families with known structure, used as solver test beds,
//! * bound checks and CSV gap reports comparing the minimum cover size `tau`
//!   with the largest cover used by any optimal solution (`tau_arrow`),
//! * plain-text instance and solution formats plus a self-test suite,
//!   all exposed through the `sumcover` command-line binary.
//!
//! All randomness is seeded explicitly; identical inputs produce identical
//! outputs, byte for byte.

pub mod analysis;
pub mod generators;
pub mod hypergraph;
pub mod io;
pub mod ordering;
pub mod selftest;
pub mod solvers;

pub use hypergraph::{Hypergraph, HypergraphError, IdMap, VertexId};
pub use ordering::{dominance_compare, CoverageProfile, Dominance, Ordering, OrderingError};
pub use solvers::{
    brute_force_mssc, brute_force_tau, find_sunflower, fpt_decide, greedy_mssc,
    held_karp_order, tau_arrow, Decision, ExactResult, Instance, SearchBudget, SolveError,
    Sunflower,
};
