mod common;

use std::collections::BTreeSet;

use common::{adjacency, components, is_bipartite, is_cycle};
use cycle_ramsey::bounds::{coefficient_for, parse_rational, ratio, xi, Rational};
use cycle_ramsey::coloring::{ColoringFile, GraphFile};
use cycle_ramsey::graph::{apply_holes_and_deletions, pair_count, pair_from_index, pair_index, TwoColoring};
use cycle_ramsey::search::{parse_targets, ArrowInstance, InstanceFile, Target};
use cycle_ramsey::{EdgeColoring, Graph, HoleSpec, Parity, VertexSet};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), pair_count(n)).prop_map(move |bits| {
            let edges: Vec<(usize, usize)> = bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| pair_from_index(i)).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn coloring_strategy(max_n: usize) -> impl Strategy<Value = EdgeColoring> {
    (2..=max_n, 2u8..=3).prop_flat_map(|(n, k)| {
        (
            proptest::collection::vec(1..=k, pair_count(n)),
            proptest::collection::btree_set(0..n, 0..=n / 2),
            proptest::collection::vec((0..n, 0..n), 0..3),
        )
            .prop_map(move |(colors, hole, deleted)| {
                let holes = HoleSpec::new(vec![hole.into_iter().collect()]);
                let deleted: Vec<(usize, usize)> = deleted.into_iter().filter(|(u, v)| u != v && !holes.forbids(*u, *v)).collect();
                let mut c = EdgeColoring::new(n, k, holes.clone(), deleted.clone()).unwrap();
                for (i, &x) in colors.iter().enumerate() {
                    let (u, v) = pair_from_index(i);
                    if c.is_present(u, v) {
                        c.set(u, v, x).unwrap();
                    }
                }
                c
            })
    })
}

fn rational() -> impl Strategy<Value = Rational> {
    (1i64..=200, 1i64..=40).prop_map(|(p, q)| ratio(p, q))
}

fn parity() -> impl Strategy<Value = Parity> {
    prop_oneof![Just(Parity::Even), Just(Parity::Odd)]
}

proptest! {
    #[test]
    fn pair_index_round_trips(u in 0usize..512, v in 0usize..512) {
        prop_assume!(u != v);
        let idx = pair_index(u, v);
        prop_assert_eq!(pair_from_index(idx), (u.min(v), u.max(v)));
        prop_assert!(idx < pair_count(u.max(v) + 1));
    }

    #[test]
    fn vertex_set_behaves_like_a_set(a in proptest::collection::btree_set(0usize..512, 0..60), b in proptest::collection::btree_set(0usize..512, 0..60)) {
        let sa: VertexSet = a.iter().copied().collect();
        let sb: VertexSet = b.iter().copied().collect();
        prop_assert_eq!(sa.len(), a.len());
        prop_assert_eq!((sa | sb).to_vec(), a.union(&b).copied().collect::<Vec<_>>());
        prop_assert_eq!((sa & sb).to_vec(), a.intersection(&b).copied().collect::<Vec<_>>());
        prop_assert_eq!((sa - sb).to_vec(), a.difference(&b).copied().collect::<Vec<_>>());
        prop_assert_eq!(sa.is_subset(&sb), a.is_subset(&b));
        prop_assert_eq!(sa.intersects(&sb), !a.is_disjoint(&b));
        prop_assert_eq!(sa.first(), a.first().copied());
        prop_assert_eq!(sa.last(), a.last().copied());
        for &x in &a {
            prop_assert_eq!(sa.rank(x), a.range(..x).count());
        }
    }

    #[test]
    fn components_partition_the_vertices(g in graph_strategy(20)) {
        let n = g.vertex_count();
        let got: BTreeSet<Vec<usize>> = g.components().into_iter().map(|c| c.to_vec()).collect();
        let want: BTreeSet<Vec<usize>> = components(&adjacency(&g), &vec![true; n]).into_iter().collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn two_coloring_gives_evidence(g in graph_strategy(16)) {
        let all: Vec<usize> = (0..g.vertex_count()).collect();
        match g.two_coloring() {
            TwoColoring::Bipartite(x, y) => {
                prop_assert!(is_bipartite(&adjacency(&g), &all));
                prop_assert!(!x.intersects(&y));
                prop_assert_eq!(x | y, g.vertices());
                for (u, v) in g.edges() {
                    prop_assert!(x.contains(u) != x.contains(v));
                }
            }
            TwoColoring::OddCycle(c) => {
                prop_assert!(c.len() % 2 == 1);
                prop_assert!(is_cycle(&g, &c.vertices));
            }
        }
    }

    #[test]
    fn color_classes_partition_the_host(c in coloring_strategy(14)) {
        let host = c.host();
        let classes = c.color_classes();
        prop_assert_eq!(classes.iter().map(Graph::edge_count).sum::<usize>(), host.edge_count());
        for (i, class) in classes.iter().enumerate() {
            for (u, v) in class.edges() {
                prop_assert!(host.has_edge(u, v));
                prop_assert_eq!(c.color(u, v), Some(i as u8 + 1));
            }
        }
    }

    #[test]
    fn holes_apply_idempotently(g in graph_strategy(16), hole in proptest::collection::btree_set(0usize..16, 0..8), del in proptest::collection::vec((0usize..16, 0usize..16), 0..4)) {
        let n = g.vertex_count();
        let holes = HoleSpec::new(vec![hole.into_iter().filter(|&v| v < n).collect()]);
        let del: Vec<(usize, usize)> = del.into_iter().filter(|&(u, v)| u < n && v < n && u != v).collect();
        let once = apply_holes_and_deletions(&g, &holes, &del).unwrap();
        let twice = apply_holes_and_deletions(&once, &holes, &del).unwrap();
        prop_assert_eq!(&once, &twice);
        for (u, v) in once.edges() {
            prop_assert!(g.has_edge(u, v) && !holes.forbids(u, v) && !del.contains(&(u, v)) && !del.contains(&(v, u)));
        }
    }

    #[test]
    fn coloring_files_round_trip(c in coloring_strategy(12)) {
        let json = c.to_json();
        prop_assert_eq!(EdgeColoring::from_json(&json).unwrap(), c.clone());
        let file: ColoringFile = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(EdgeColoring::from_file(&file).unwrap(), c);
    }

    #[test]
    fn graph_files_round_trip(g in graph_strategy(20)) {
        let json = serde_json::to_string(&GraphFile::from_graph(&g)).unwrap();
        let back: GraphFile = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back.to_graph().unwrap(), g);
    }

    #[test]
    fn instance_files_round_trip(n in 3usize..10, lens in proptest::collection::vec(3usize..7, 2..=3), budget in 0usize..3) {
        let targets: Vec<Target> = lens.iter().map(|&length| Target::Cycle { length }).collect();
        let mut inst = ArrowInstance::complete(n, targets).unwrap();
        inst.holes = HoleSpec::new(vec![VertexSet::range(0, 2)]);
        inst.deleted_budget = budget;
        let json = serde_json::to_string(&inst.to_file(None)).unwrap();
        let file: InstanceFile = serde_json::from_str(&json).unwrap();
        let (back, initial) = ArrowInstance::from_file(&file).unwrap();
        prop_assert!(initial.is_none());
        prop_assert_eq!(back, inst);
    }

    #[test]
    fn target_lists_round_trip(spec in proptest::collection::vec((3usize..12, 0u8..3), 1..=3)) {
        let text: Vec<String> = spec.iter().enumerate().map(|(i, &(l, kind))| {
            let name = match kind { 0 => format!("C{l}"), 1 => format!("M{}", 2 * (l / 2)), _ => format!("MN{}", 2 * (l / 2)) };
            format!("{name}:{}", i + 1)
        }).collect();
        let parsed = parse_targets(&text.join(",")).unwrap();
        prop_assert_eq!(parsed.len(), spec.len());
        for (t, s) in parsed.iter().zip(&text) {
            prop_assert_eq!(&t.to_string(), s.split(':').next().unwrap());
            prop_assert_eq!(&t.to_string().parse::<Target>().unwrap(), t);
        }
    }

    #[test]
    fn rationals_print_and_parse_back(x in rational()) {
        prop_assert_eq!(parse_rational(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn coefficient_ignores_relabelling(a in [rational(), rational(), rational()], p in [parity(), parity(), parity()]) {
        let (c, _) = coefficient_for(&a, &p);
        prop_assert!(c >= *a.iter().max().unwrap());
        for perm in [[1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0]] {
            prop_assert_eq!(&coefficient_for(&perm.map(|i| a[i].clone()), &perm.map(|i| p[i])).0, &c);
        }
    }

    #[test]
    fn coefficient_symmetric_within_parity_class(a in [rational(), rational(), rational()]) {
        use Parity::{Even, Odd};
        let swap = |i: usize, j: usize| { let mut b = a.clone(); b.swap(i, j); b };
        // (even, even, odd): first two; (even, odd, odd): last two; all odd: any.
        prop_assert_eq!(coefficient_for(&a, &[Even, Even, Odd]).0, coefficient_for(&swap(0, 1), &[Even, Even, Odd]).0);
        prop_assert_eq!(coefficient_for(&a, &[Even, Odd, Odd]).0, coefficient_for(&swap(1, 2), &[Even, Odd, Odd]).0);
        prop_assert_eq!(coefficient_for(&a, &[Odd, Odd, Odd]).0, coefficient_for(&swap(0, 2), &[Odd, Odd, Odd]).0);
    }

    #[test]
    fn xi_dominates_its_first_term(a in rational(), b in rational(), nu in (0i64..=100, 1i64..=20).prop_map(|(p, q)| ratio(p, q))) {
        let h = ratio(1, 2);
        let inner = [&h * &a, &h * &b, nu.clone()].into_iter().max().unwrap();
        prop_assert!(xi(&a, &b, &nu) >= &h * &a + &h * &b + inner);
    }
}
