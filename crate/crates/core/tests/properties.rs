//! Property tests over random targets and colourings.

use proptest::prelude::*;

use rainbow::cli::{parse_certificate, serialize_certificate};
use rainbow::coloring::find_rainbow_copy;
use rainbow::constructions::Certificate;
use rainbow::embeddings::{canonical_code, enumerate_copies};
use rainbow::graphs::{complete_edges, contains_subgraph, minus_edge_family};
use rainbow::search::{witness_is_valid, Decision};
use rainbow::*;

fn cfg() -> SearchConfig {
    SearchConfig { workers: 1, ..SearchConfig::default() }
}

/// Connected graphs on 3..=5 vertices without isolated vertices.
fn small_target() -> impl Strategy<Value = SmallGraph> {
    (3usize..=5, proptest::collection::vec(any::<bool>(), 10)).prop_filter_map("connected", |(p, bits)| {
        let edges: Vec<(usize, usize)> = (0..complete_edges(p)).filter(|&t| bits[t]).map(rainbow::graphs::edge_endpoints).collect();
        let g = SmallGraph::from_edges(p, &edges).ok()?;
        (g.is_connected() && g.size() >= 2).then_some(g)
    })
}

fn coloring(n: usize) -> impl Strategy<Value = EdgeColoring> {
    proptest::collection::vec(0u8..12, complete_edges(n)).prop_map(move |raw| normalize(&raw, n).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn sandwich_holds(h in small_target(), extra in 0usize..=1) {
        let n = h.order() + extra;
        let out = f_exact(n, &h, &cfg()).unwrap();
        prop_assert!(out.is_exact());
        prop_assert!(witness_is_valid(out.coloring().unwrap(), &h, out.value as usize));
        let low = turan_exact(n, &minus_edge_family(&h).unwrap(), &cfg()).unwrap().value;
        let high = turan_exact(n, &ForbiddenFamily::new([h]), &cfg()).unwrap().value;
        prop_assert!(low < out.value && out.value <= high, "{} {} {}", low, out.value, high);
    }

    #[test]
    fn feasibility_is_monotone(h in small_target(), k in 1usize..=10) {
        let n = 5;
        prop_assume!(h.order() <= n);
        if let Decision::Feasible(c) = decide_colorable(n, &h, k, &cfg()).unwrap() {
            prop_assert!(witness_is_valid(&c, &h, k));
            if k > 1 {
                let merged = c.merge(0, 1);
                prop_assert!(witness_is_valid(&merged, &h, k - 1));
                prop_assert!(matches!(decide_colorable(n, &h, k - 1, &cfg()).unwrap(), Decision::Feasible(_)));
            }
        }
    }

    #[test]
    fn worker_count_is_invisible(h in small_target()) {
        let n = h.order() + 1;
        let one = f_exact(n, &h, &cfg()).unwrap();
        let four = f_exact(n, &h, &cfg().with_workers(4)).unwrap();
        prop_assert_eq!(one.value, four.value);
        prop_assert_eq!(one.witness, four.witness);
    }

    #[test]
    fn containment_reflexive_and_monotone(h in small_target(), extra in proptest::collection::vec((0usize..6, 0usize..6), 0..5)) {
        prop_assert!(contains_subgraph(&h, &h));
        let mut bigger = h.with_extra_vertices(1).unwrap();
        let m = bigger.order();
        for (a, b) in extra {
            let (a, b) = (a % m, b % m);
            if a != b {
                bigger.add_edge(a, b).unwrap();
            }
        }
        prop_assert!(contains_subgraph(&bigger, &h));
    }

    #[test]
    fn canonical_code_ignores_labels(h in small_target(), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..h.order()).collect();
        let mut s = seed;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(canonical_code(&h), canonical_code(&h.relabel(&perm)));
    }

    #[test]
    fn certificate_text_round_trips(c in coloring(6)) {
        let cert = Certificate::new("bull".parse().unwrap(), c, "random");
        let text = serialize_certificate(&cert);
        let back = parse_certificate(&text).unwrap();
        prop_assert_eq!(&back, &cert);
        prop_assert_eq!(serialize_certificate(&back), text);
    }

    #[test]
    fn verdict_agrees_with_scan(c in coloring(6), h in small_target()) {
        let cert = Certificate::new(Target::literal(h), c.clone(), "random");
        let rainbow = find_rainbow_copy(&c, &enumerate_copies(6, &h).unwrap()).is_some();
        prop_assert_eq!(cert.check().unwrap() != Verdict::Valid, rainbow);
    }
}
