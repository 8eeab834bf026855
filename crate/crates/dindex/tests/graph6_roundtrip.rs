use dindex::graph6::{parse_graph6, parse_graph6_with_limit, write_graph6};
use dindex_core::Graph;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(bits)
                .filter_map(|(p, b)| b.then_some(p))
                .collect();
            Graph::with_limit(n, &pairs, max_n).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph_survives_write_then_parse(g in graph(80)) {
        let text = write_graph6(&g);
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(parse_graph6_with_limit(&text, 80).unwrap(), g);
    }

    #[test]
    fn text_survives_parse_then_write(g in graph(20)) {
        let text = write_graph6(&g);
        prop_assert_eq!(write_graph6(&parse_graph6(&text).unwrap()), text);
    }

    #[test]
    fn garbage_never_panics(s in "[ -~]{0,20}") {
        let _ = parse_graph6(&s);
    }
}
