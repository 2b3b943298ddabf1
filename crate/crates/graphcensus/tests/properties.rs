use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::{One, Zero};
use proptest::prelude::*;

use graphcensus::census::{count, CensusQuery, Family};
use graphcensus::graph::{automorphism_info, automorphisms, canonical_form, factorial, Graph};
use graphcensus::mset::{
    k_component_table, multiset_coefficient, multiset_transform, pair_multisets, PairTable, Seq,
};
use graphcensus::polya::{connected_table, edge_cycle_index, CycleIndex};
use graphcensus::{classify, CountTable, TagPattern, TagSet};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn arb_graph(max_v: usize, max_e: usize) -> impl Strategy<Value = Graph> {
    (1..=max_v, any::<bool>()).prop_flat_map(move |(v, directed)| {
        prop::collection::vec((0..v, 0..v), 0..=max_e)
            .prop_map(move |edges| Graph::from_edges(directed, v, edges).unwrap())
    })
}

fn arb_relabeled(max_v: usize, max_e: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_v, max_e).prop_flat_map(|g| {
        let v = g.vertex_count();
        (Just(g), Just((0..v).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn arb_connected_simple() -> impl Strategy<Value = Graph> {
    // a random spanning tree plus extra edges
    (2usize..=6).prop_flat_map(|v| {
        let parents: Vec<BoxedStrategy<usize>> = (1..v).map(|i| (0..i).boxed()).collect();
        (parents, prop::collection::vec((0..v, 0..v), 0..6)).prop_map(move |(parents, extra)| {
            let mut g = Graph::undirected(v);
            for (i, p) in parents.into_iter().enumerate() {
                g.set_multiplicity(i + 1, p, 1).unwrap();
            }
            for (a, b) in extra {
                if a != b {
                    g.set_multiplicity(a, b, 1).unwrap();
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 300, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn canonical_form_ignores_labels((g, perm) in arb_relabeled(6, 9)) {
        let h = g.permuted(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert_eq!(classify(&g), classify(&h));
        prop_assert_eq!(canonical_form(&g).to_graph(), canonical_form(&h).to_graph());
    }

    #[test]
    fn canonical_form_decides_isomorphism(
        (g, perm) in arb_relabeled(5, 6),
        extra in any::<bool>(),
        (a, b) in (0usize..5, 0usize..5),
        other in arb_graph(5, 6),
    ) {
        // a relabeled copy, the copy with one more edge, and an unrelated graph
        let v = g.vertex_count();
        let mut near = g.permuted(&perm).unwrap();
        if extra {
            near.add_edge(a % v, b % v).unwrap();
        }
        for h in [near, other] {
            let same_shape = g.is_directed() == h.is_directed() && v == h.vertex_count();
            let iso = same_shape && permutations(v).iter().any(|p| g.permuted(p).unwrap() == h);
            prop_assert_eq!(canonical_form(&g) == canonical_form(&h), iso);
        }
    }

    #[test]
    fn automorphism_group_by_brute_force(g in arb_graph(5, 7)) {
        let v = g.vertex_count();
        let fixing = permutations(v).iter().filter(|p| g.permuted(p).unwrap() == g).count() as u64;
        let info = automorphism_info(&g);
        prop_assert_eq!(info.aut_order, fixing);
        prop_assert_eq!(info.aut_order * info.orbit_weight, factorial(v));
        prop_assert_eq!(automorphisms(&g).len() as u64, fixing);
    }

    #[test]
    fn tag_set_matches_its_own_pattern(g in arb_graph(6, 8)) {
        let t = classify(&g);
        let p = t.to_pattern();
        prop_assert!(p.matches(&t));
        prop_assert!(!p.is_impossible());
        let back: TagPattern = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
        prop_assert!(TagSet::all_possible(g.is_directed()).contains(&t));
    }

    #[test]
    fn edge_cycle_index_is_an_average(g in arb_connected_simple()) {
        let z = edge_cycle_index(&g).unwrap();
        prop_assert!(z.coefficient_sum().is_one());
        prop_assert!(z.terms().keys().all(|c| c.degree() == g.edge_count()));
        prop_assert_eq!(z.order(), &BigUint::from(automorphism_info(&g).aut_order));
        let back: CycleIndex = z.to_string().parse().unwrap();
        prop_assert_eq!(back, z);
    }

    #[test]
    fn pair_multisets_are_additive(e in 0usize..8, v in 1usize..9, k in 1usize..5) {
        let all = pair_multisets(e, v, k);
        for m in &all {
            prop_assert_eq!((m.edges(), m.vertices(), m.len()), (e, v, k as u64));
            prop_assert!(m.parts.iter().all(|&((_, pv), f)| pv >= 1 && f >= 1));
        }
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), all.len());
        prop_assert_eq!(all.is_empty(), v < k);
    }
}

#[test]
fn multiset_coefficient_identity() {
    // C(n+m-1, m) = sum_j C(n, j) C(m-1, j-1)
    for nn in 0u64..=30 {
        for m in 1u64..=30 {
            let rhs: BigUint = (1..=m.min(nn))
                .map(|j| BigUint::from(binomial(nn, j)) * BigUint::from(binomial(m - 1, j - 1)))
                .sum();
            assert_eq!(multiset_coefficient(&nn.into(), m), rhs, "n={nn} m={m}");
        }
    }
}

#[test]
fn component_tables_edge_cases() {
    let base = connected_table(Family::simple(false), 8, 10).unwrap();
    assert_eq!(k_component_table(&base, 1, 8, 10).unwrap(), base);
    for k in 1..=4 {
        let t = k_component_table(&base, k, 8, 10).unwrap();
        for ((e, v), x) in t.cells() {
            if v < k {
                assert!(x.is_zero());
            }
            if e == 0 && v == k {
                assert!(x.is_one());
            }
        }
    }
}

#[test]
fn marginal_over_vertices_is_the_one_dimensional_transform() {
    let (max_e, max_k) = (8, 4);
    let max_v = max_e + max_k;
    let base = connected_table(Family::simple(false), max_e, max_v).unwrap();
    let by_edges: Vec<BigUint> = (0..=max_e)
        .map(|e| (1..=max_v).filter_map(|v| base.get(e, v)).sum())
        .collect();
    let one_d = multiset_transform(&Seq::with_zero_weight(by_edges), max_e, max_k);
    for k in 1..=max_k {
        let t = k_component_table(&base, k, max_e, max_v).unwrap();
        for e in 0..=max_e {
            let s: BigUint = (1..=max_v).filter_map(|v| t.get(e, v)).sum();
            assert_eq!(s, one_d.get(e, k), "E={e} k={k}");
        }
    }
}

#[test]
fn text_formats_round_trip() {
    let base = connected_table(Family::loopless(false), 6, 6).unwrap();
    let text = base.to_text();
    assert_eq!(PairTable::from_text(&text).unwrap().to_text(), text);

    let t = count(&CensusQuery::new("-dc.*-l".parse().unwrap(), false, 5, 5)).unwrap();
    let csv = t.to_csv();
    let via_fixture = CountTable::from_fixture(&t.to_fixture()).unwrap();
    assert_eq!(via_fixture.to_csv(), csv);
    let pattern = t.patterns()[0].clone();
    assert_eq!(CountTable::from_csv(&csv, pattern, false).unwrap().to_csv(), csv);
}

#[test]
fn output_does_not_depend_on_worker_count() {
    let q = CensusQuery::new("d.*-l".parse().unwrap(), true, 4, 4);
    let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let serial = one.install(|| count(&q).unwrap().to_csv());
    assert_eq!(count(&q).unwrap().to_csv(), serial);
}
