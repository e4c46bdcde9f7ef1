mod common;

use common::{avoids, brute_arrows, brute_ramsey, colour_matrix, embedding_ok, has_copy};
use kconn_core::ramsey::{ramsey_number, RamseyValue};
use kconn_core::{arrows, find_mono_copy, validate_embedding, Colour, Graph, TwoColouring};
use proptest::prelude::*;

fn patterns() -> Vec<(&'static str, Graph)> {
    vec![
        ("K2", Graph::complete(2)),
        ("K3", Graph::complete(3)),
        ("P3", Graph::path(3)),
        ("P4", Graph::path(4)),
        ("K13", Graph::star(3)),
        ("C4", Graph::cycle(4)),
        ("2K2", Graph::from_edges(4, [(0, 1), (2, 3)])),
        ("K2+K1", Graph::from_edges(3, [(0, 1)])),
    ]
}

#[test]
fn arrows_agrees_with_enumeration() {
    let pats = patterns();
    for n in 0..=6 {
        for (rn, red) in &pats {
            for (bn, blue) in &pats {
                // The larger off-diagonal pairs cost the oracle the most; the
                // diagonal pairs are enough there.
                if n == 6 && rn != bn {
                    continue;
                }
                let got = arrows(n, red, blue).unwrap();
                assert_eq!(got.holds, brute_arrows(n, red, blue), "K_{n} -> ({rn}, {bn})");
                if let Some(w) = &got.witness {
                    assert!(avoids(w, red, blue), "bad witness for K_{n} -> ({rn}, {bn})");
                }
            }
        }
    }
}

#[test]
fn witness_is_least_avoiding_colouring() {
    // Lexicographically least red-bit string among avoiding colourings, found
    // by enumeration in the same order.
    let cases = [
        (Graph::path(4), Graph::star(3)),
        (Graph::complete(3), Graph::complete(3)),
        (Graph::cycle(4), Graph::cycle(4)),
        (Graph::star(3), Graph::star(3)),
    ];
    for (red, blue) in &cases {
        for n in 3..=5 {
            let w = arrows(n, red, blue).unwrap().witness;
            let first = common::all_colourings(n).find(|c| avoids(c, red, blue));
            assert_eq!(w, first, "n = {n}");
        }
    }
}

#[test]
fn small_ramsey_numbers_match_enumeration() {
    for (name, g) in [
        ("K2", Graph::complete(2)),
        ("P3", Graph::path(3)),
        ("P4", Graph::path(4)),
        ("K13", Graph::star(3)),
        ("C4", Graph::cycle(4)),
        ("2K2", Graph::from_edges(4, [(0, 1), (2, 3)])),
    ] {
        let want = brute_ramsey(&g, 6).expect("small value");
        let got = ramsey_number(&g, 8).unwrap();
        assert_eq!(got.value(), Some(want), "{name}");
        if let RamseyValue::Exact { witness: Some(w), .. } = got {
            assert_eq!(w.order(), want - 1);
            assert!(avoids(&w, &g, &g), "{name}");
        }
    }
}

#[test]
fn triangle_witness_is_two_pentagons() {
    let RamseyValue::Exact { value: 6, witness: Some(w) } = ramsey_number(&Graph::complete(3), 8).unwrap()
    else {
        panic!("r(K3) should be 6 with a witness");
    };
    let c5 = Graph::cycle(5);
    assert!(common::isomorphic(&w.red_subgraph(), &c5));
    assert!(common::isomorphic(&w.blue_subgraph(), &c5));
    assert!(common::isomorphic(&TwoColouring::pentagon().red_subgraph(), &c5));
}

fn arb_colouring(max_n: usize) -> impl Strategy<Value = TwoColouring> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)
            .prop_map(move |bits| TwoColouring::from_bits(n, &bits).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn mono_copy_search_matches_enumeration(c in arb_colouring(8), which in 0usize..8, red in any::<bool>()) {
        let (_, pattern) = &patterns()[which];
        let colour = if red { Colour::Red } else { Colour::Blue };
        let found = find_mono_copy(&c, pattern, colour);
        prop_assert_eq!(found.is_some(), has_copy(&colour_matrix(&c, colour), pattern));
        if let Some(e) = found {
            prop_assert!(embedding_ok(&e, &c));
            prop_assert_eq!(validate_embedding(&e, &c), Ok(true));
        }
    }
}
