//! Property tests over small random graphs, each against a direct check.

use std::collections::BTreeSet;

use dindex_core::aut::{enumerate_automorphisms, is_distinguishing};
use dindex_core::construct::{find_pendant_gadget, layer_partition, multiset_tuple_pool};
use dindex_core::{EdgeLabeling, Graph, Method};
use proptest::prelude::*;

/// A graph on `1..=max_n` vertices with each pair present independently.
fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(bits)
                .filter_map(|(p, b)| b.then_some(p))
                .collect();
            Graph::new(n, &pairs).unwrap()
        })
    })
}

fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("connected", Graph::is_connected)
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #[test]
    fn handshake(g in graph(12)) {
        let stats = g.degree_stats();
        prop_assert_eq!(stats.degrees.iter().sum::<usize>(), 2 * g.m());
        prop_assert!(stats.degrees.iter().all(|&d| stats.min <= d && d <= stats.max));
    }

    #[test]
    fn verdict_matches_enumeration(
        (g, labels) in graph(7).prop_flat_map(|g| {
            let m = g.m();
            (Just(g), proptest::collection::vec(1u32..=3, m))
        })
    ) {
        let labeling = EdgeLabeling::new(&g, labels).unwrap();
        let cert = is_distinguishing(&g, &labeling, Method::ExactSearch).unwrap();
        let preserving = enumerate_automorphisms(&g, usize::MAX)
            .unwrap()
            .into_iter()
            .filter(|p| !p.is_identity() && labeling.is_preserved_by(&g, p))
            .count();
        prop_assert_eq!(cert.distinguishing, preserving == 0);
        prop_assert!(cert.verify(&g).is_ok());
    }

    #[test]
    fn layer_partition_invariants(g in connected_graph(10), root_pick in any::<usize>(), size in 1usize..5) {
        let root = root_pick % g.n();
        let layers = g.bfs_layers(root).unwrap();
        let gadget = find_pendant_gadget(&g, root);
        let part = layer_partition(&g, root, size, &gadget);
        let outer: BTreeSet<usize> = gadget.outer_vertices().collect();
        let spokes: BTreeSet<usize> = layers.layer(1).iter().copied().filter(|x| !outer.contains(x)).collect();

        let flat: Vec<usize> = part.blocks.iter().flatten().copied().collect();
        prop_assert_eq!(flat.len(), spokes.len());
        prop_assert_eq!(flat.iter().copied().collect::<BTreeSet<_>>(), spokes.clone());
        if let Some((last, full)) = part.blocks.split_last() {
            prop_assert!(full.iter().all(|b| b.len() == size));
            prop_assert!((1..=size).contains(&last.len()));
        }

        let reach = |x: usize| g.neighbors(x).iter().filter(|&&w| layers.depth(w) == Some(2)).count();
        prop_assert!(part.m1.iter().all(|&x| reach(x) == 0));
        prop_assert!(part.m2.iter().all(|&x| reach(x) > 0));
        prop_assert_eq!(part.m1.len() + part.m2.len(), spokes.len());
        for (block, split) in part.blocks.iter().zip(&part.m2_split) {
            let in_m2: BTreeSet<usize> = block.iter().copied().filter(|&x| reach(x) > 0).collect();
            let listed: Vec<usize> = split.iter().flat_map(|(_, xs)| xs.iter().copied()).collect();
            prop_assert_eq!(listed.len(), in_m2.len());
            prop_assert_eq!(listed.into_iter().collect::<BTreeSet<_>>(), in_m2);
            prop_assert!(split.iter().all(|(j, xs)| xs.iter().all(|&x| reach(x) == *j)));
        }

        for (i, classes) in part.classes.iter().enumerate().skip(2) {
            let members: Vec<usize> = classes.iter().flat_map(|c| c.members.iter().copied()).collect();
            prop_assert_eq!(members.len(), layers.layer(i).len());
            prop_assert_eq!(members.into_iter().collect::<BTreeSet<_>>(), layers.layer(i).iter().copied().collect::<BTreeSet<_>>());
            for c in classes {
                for &w in &c.members {
                    let parents: Vec<usize> = g.neighbors(w).iter().copied().filter(|&x| layers.depth(x) == Some(i - 1)).collect();
                    prop_assert_eq!(&parents, &c.parents);
                }
            }
        }
    }

    #[test]
    fn tuple_pools_are_distinct_and_minimal(j in 1usize..6, count in 1usize..200) {
        let pool = multiset_tuple_pool(j, count).unwrap();
        prop_assert_eq!(pool.tuples.len(), count);
        let mut seen = BTreeSet::new();
        for t in &pool.tuples {
            prop_assert_eq!(t.len(), j);
            prop_assert!(t.windows(2).all(|w| w[0] <= w[1]));
            prop_assert!(t.iter().all(|&l| (1..=pool.r as u32).contains(&l)));
            prop_assert!(seen.insert(t.clone()));
        }
        // Multisets of size j over r labels: C(j + r − 1, j).
        prop_assert!(binom(j + pool.r - 1, j) >= count);
        prop_assert!(pool.r == 1 || binom(j + pool.r - 2, j) < count);
    }
}
