//! Property tests: randomized instances against the invariants the
//! library promises, with the exact solvers as oracles for each other.

use proptest::prelude::*;

use sumcover::generators::random_hypergraph;
use sumcover::solvers::{
    brute_force_mssc, brute_force_tau, decide_by_enumeration, find_sunflower,
    for_each_normalized_optimum, fpt_decide, greedy_mssc, held_karp_order,
    min_cost_over_permutations, sunflower_threshold, Decision, Instance, SearchBudget,
};
use sumcover::{dominance_compare, Dominance, Hypergraph, Ordering, VertexId};

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Number of distinct nonempty edges of size at most `rank` on `n` vertices.
fn edge_pool(n: usize, rank: usize) -> u64 {
    (1..=rank.min(n)).map(|s| binomial(n as u64, s as u64)).sum()
}

/// A small random instance: the crate's own seeded generator driven by
/// proptest-chosen parameters, so failures shrink to readable quadruples.
fn arb_instance() -> impl Strategy<Value = Hypergraph> {
    (2usize..=7, 1u64..=12, 2usize..=3, 0u64..1_000_000).prop_map(|(n, m, rank, seed)| {
        let m = m.min(edge_pool(n, rank)) as usize;
        random_hypergraph(n, m, rank, seed).expect("edge count fits the pool")
    })
}

/// A full permutation of the instance's vertices.
fn arb_permutation(h: &Hypergraph) -> impl Strategy<Value = Ordering> {
    let ids: Vec<VertexId> = h.vertices().collect();
    Just(ids).prop_shuffle().prop_map(|seq| Ordering::new(seq).expect("a shuffle has no repeats"))
}

fn instance_and_permutation() -> impl Strategy<Value = (Hypergraph, Ordering)> {
    arb_instance().prop_flat_map(|h| {
        let perm = arb_permutation(&h);
        (Just(h), perm)
    })
}

/// A non-increasing sequence plus one "defer coverage" move: take `delta`
/// units from an earlier position and park them on a later one.
fn arb_deferral() -> impl Strategy<Value = (Vec<u64>, usize, usize, u64)> {
    (proptest::collection::vec(0u64..30, 3..9), 1u64..=3)
        .prop_flat_map(|(mut base, delta)| {
            base.sort_unstable_by(|a, b| b.cmp(a));
            let len = base.len();
            (Just(base), 0..len - 1, Just(delta)).prop_flat_map(move |(base, i, delta)| {
                let len = base.len();
                (Just(base), Just(i), i + 1..len, Just(delta))
            })
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The per-position coverage sum and the per-edge first-hit sum are two
    /// computations of the same cost.
    #[test]
    fn cost_two_routes_agree((h, perm) in instance_and_permutation()) {
        let profile = h.effective_coverage(&perm).expect("permutations evaluate");
        let direct = h.solution_cost(&perm).expect("permutations evaluate");
        prop_assert_eq!(profile.total_cost(), direct);
    }

    /// Deleting a vertex set keeps exactly the edges disjoint from it and
    /// renumbers the survivors densely, with a two-way id map.
    #[test]
    fn remove_vertices_postconditions(
        (h, perm) in instance_and_permutation(),
        keep in 0usize..7,
    ) {
        let removed: Vec<VertexId> = perm.sequence().iter().copied().skip(keep).collect();
        let (residual, ids) = h.remove_vertices(&removed).expect("ids are valid");
        prop_assert_eq!(residual.vertex_count(), h.vertex_count() - removed.len());
        for new in residual.vertices() {
            prop_assert_eq!(ids.new_id(ids.old_id(new)), Some(new));
        }
        for &old in &removed {
            prop_assert_eq!(ids.new_id(old), None);
        }
        let survivors: std::collections::BTreeSet<Vec<VertexId>> = residual
            .edges()
            .map(|edge| {
                let mut original: Vec<VertexId> = edge.iter().map(|&v| ids.old_id(v)).collect();
                original.sort_unstable();
                original
            })
            .collect();
        let expected: std::collections::BTreeSet<Vec<VertexId>> = h
            .edges()
            .filter(|edge| edge.iter().all(|v| !removed.contains(v)))
            .map(|edge| edge.to_vec())
            .collect();
        prop_assert_eq!(survivors, expected);
    }

    /// The implied cover of a permutation is its covering prefix.
    #[test]
    fn implied_cover_is_covering_prefix((h, perm) in instance_and_permutation()) {
        let cover = h.implied_cover(&perm).expect("permutations cover everything");
        let profile = h.effective_coverage(&perm).expect("permutations evaluate");
        prop_assert_eq!(cover.len(), profile.cover_size());
        prop_assert_eq!(&cover[..], &perm.sequence()[..cover.len()]);
        if h.edge_count() > 0 {
            let prefix = Ordering::new(cover).expect("prefix of a permutation");
            prop_assert!(h.solution_cost(&prefix).is_ok());
        }
    }

    /// Normalization never raises the cost and leaves no dead position
    /// inside the covering prefix.
    #[test]
    fn normalize_never_costs_more((h, perm) in instance_and_permutation()) {
        let normalized = h.normalize(&perm).expect("permutations normalize");
        let before = h.solution_cost(&perm).expect("permutations evaluate");
        let after = h.solution_cost(&normalized).expect("normalization keeps coverage");
        prop_assert!(after <= before);
        let profile = h.effective_coverage(&normalized).expect("permutations evaluate");
        let prefix = &profile.coverages()[..profile.cover_size()];
        prop_assert!(prefix.iter().all(|&c| c > 0));
    }

    /// Deferring coverage (moving mass from an earlier to a later position)
    /// raises the weighted sum by exactly `delta * (j - i)`.
    #[test]
    fn dominance_matches_direct_arithmetic((base, i, j, delta) in arb_deferral()) {
        let earlier = base.clone();
        let mut s = base;
        s[i] = s[i].saturating_sub(delta);
        let delta = earlier[i] - s[i]; // actual amount moved
        s[j] += delta;
        let still_non_increasing = s.windows(2).all(|w| w[0] >= w[1]);
        prop_assume!(still_non_increasing);
        let weight =
            |xs: &[u64]| xs.iter().zip(1u64..).map(|(&x, pos)| x * pos).sum::<u64>();
        match dominance_compare(&s, &earlier).expect("equal sums by construction") {
            Dominance::Equal { weighted } => {
                prop_assert_eq!(delta, 0);
                prop_assert_eq!(weighted, weight(&earlier));
            }
            Dominance::StrictlyGreater { lhs, rhs } => {
                prop_assert_eq!(lhs, weight(&s));
                prop_assert_eq!(rhs, weight(&earlier));
                prop_assert_eq!(lhs - rhs, delta * (j - i) as u64);
            }
            Dominance::PreconditionViolated => {
                prop_assert!(false, "a single deferral is a valid crossover");
            }
        }
    }

    /// Above the counting threshold a sunflower with the requested number
    /// of petals is guaranteed, and what is returned must validate.
    #[test]
    fn sunflower_found_above_threshold(
        rank in 2usize..=3,
        petals in 2usize..=3,
        extra in 0u64..5,
        seed in 0u64..1_000_000,
    ) {
        let n = if rank == 2 { 12 } else { 15 };
        let m = sunflower_threshold(rank, petals) as u64 + 1 + extra;
        prop_assume!(m <= edge_pool(n, rank));
        let h = random_hypergraph(n, m as usize, rank, seed).expect("pool checked");
        let sunflower = find_sunflower(&h, petals)
            .expect("petal request is positive")
            .expect("above the threshold a sunflower is guaranteed");
        prop_assert!(sunflower.petal_count() >= petals);
        prop_assert!(sunflower.is_valid_for(&h));
    }

    /// The subset DP and exhaustive permutation enumeration agree on the
    /// best cost of ordering a minimum cover, and the DP's ordering
    /// actually evaluates to the cost it reports.
    #[test]
    fn held_karp_matches_permutations(h in arb_instance()) {
        let (_, cover) = brute_force_tau(&h);
        prop_assume!(cover.len() <= 6);
        let (ordering, dp_cost) = held_karp_order(&h, &cover).expect("cover fits the DP");
        let (_, reference) = min_cost_over_permutations(&h, &cover).expect("cover is small");
        prop_assert_eq!(dp_cost, reference);
        prop_assert_eq!(h.solution_cost(&ordering).expect("DP orderings cover"), dp_cost);
    }

    /// The parameterized decision procedure and the enumeration oracle
    /// answer identically, and yes-witnesses respect both budgets.
    #[test]
    fn decision_matches_enumeration(
        h in arb_instance(),
        k in 0usize..=7,
        w in 0u64..=40,
    ) {
        let k = k.min(h.vertex_count());
        let budget = SearchBudget::default();
        let oracle = decide_by_enumeration(&h, k, w, &budget).expect("small instance");
        let instance = Instance::new(h.clone(), k, w).expect("k clamped to n");
        match fpt_decide(&instance).expect("within the DP cover cap") {
            Decision::Yes { witness } => {
                prop_assert!(oracle);
                prop_assert!(h.solution_cost(&witness).expect("witnesses cover") <= w);
                prop_assert!(h.implied_cover(&witness).expect("witnesses cover").len() <= k);
            }
            Decision::No => prop_assert!(!oracle),
        }
    }

    /// Greedy stays within a factor of four of the optimum.
    #[test]
    fn greedy_within_four(h in arb_instance()) {
        let budget = SearchBudget::default();
        let phi = brute_force_mssc(&h, &budget).expect("small instance").phi;
        let (_, greedy_cost) = greedy_mssc(&h);
        prop_assert!(greedy_cost <= 4 * phi, "greedy {greedy_cost} vs optimum {phi}");
    }

    /// Every normalized optimum has a non-increasing coverage profile whose
    /// first entry alone accounts for at least |E| / tau edges.
    #[test]
    fn optima_are_non_increasing_and_front_loaded(h in arb_instance()) {
        let budget = SearchBudget::default();
        let tau = brute_force_mssc(&h, &budget).expect("small instance").tau as u64;
        let mut ok = true;
        for_each_normalized_optimum(&h, &budget, |optimum| {
            let ordering = Ordering::new(optimum.to_vec()).expect("optima are valid");
            let profile = h.effective_coverage(&ordering).expect("optima cover");
            let coverages = profile.coverages();
            ok &= coverages.windows(2).all(|w| w[0] >= w[1]);
            ok &= h.edge_count() == 0 || coverages[0] * tau >= h.edge_count() as u64;
            ok
        })
        .expect("small instance");
        prop_assert!(ok);
    }
}
