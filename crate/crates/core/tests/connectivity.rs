mod common;

use common::{avoids, brute_kappa};
use kconn_core::connectivity::{is_k_connected, local_connectivity, vertex_connectivity};
use kconn_core::constructions::{
    build_family_member, construct_case1, construct_case2, select_t, BoundProxy, CaseChoice,
    ConstructionParams, Family,
};
use kconn_core::{arrows, Error, Graph, TwoColouring};
use proptest::prelude::*;

fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(prop::bool::weighted(0.6), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn kappa_matches_subset_enumeration(g in arb_graph(2, 9)) {
        let cert = vertex_connectivity(&g).unwrap();
        prop_assert_eq!(cert.kappa, brute_kappa(&g));
        prop_assert!(cert.kappa <= g.min_degree().unwrap());
        prop_assert!(cert.validate(&g));
        if let Some(cut) = &cert.cut {
            prop_assert_eq!(cut.len(), cert.kappa);
        }
        prop_assert!(is_k_connected(&g, cert.kappa));
        prop_assert!(!is_k_connected(&g, cert.kappa + 1));
    }

    #[test]
    fn local_connectivity_bounds_global(g in arb_graph(2, 8)) {
        let kappa = vertex_connectivity(&g).unwrap().kappa;
        for s in 0..g.order() {
            for t in s + 1..g.order() {
                if !g.has_edge(s, t) {
                    let (flow, cut) = local_connectivity(&g, s, t);
                    prop_assert!(flow >= kappa);
                    prop_assert_eq!(cut.len(), flow);
                    prop_assert!(!cut.contains(&s) && !cut.contains(&t));
                }
            }
        }
    }
}

#[test]
fn tiny_graphs_have_no_connectivity() {
    assert!(matches!(vertex_connectivity(&Graph::empty(1)), Err(Error::UndefinedConnectivity(1))));
    assert!(matches!(vertex_connectivity(&Graph::empty(0)), Err(Error::UndefinedConnectivity(0))));
    assert_eq!(vertex_connectivity(&Graph::complete(5)).unwrap().kappa, 4);
    assert_eq!(vertex_connectivity(&Graph::empty(3)).unwrap().kappa, 0);
}

#[test]
fn construction_grid() {
    for k in 2..=4 {
        for t in k + 1..=6 {
            for (family, first) in [(Family::Biclique, 2 * t), (Family::Clique, t)] {
                for n in first..=20 {
                    let p = ConstructionParams::new(n, t, k, family).unwrap();
                    let g = match family {
                        Family::Biclique => construct_case1(&p),
                        Family::Clique => construct_case2(&p),
                    }
                    .unwrap();
                    assert_eq!(g.order(), n);
                    let pendants = n - first;
                    let edges = match family {
                        Family::Biclique => t * t + k * pendants,
                        Family::Clique => t * (t - 1) / 2 + k * pendants,
                    };
                    assert_eq!(g.edge_count(), edges, "{family:?} n={n} t={t} k={k}");
                    let cert = vertex_connectivity(&g).unwrap();
                    if pendants > 0 {
                        assert_eq!(cert.kappa, k, "{family:?} n={n} t={t} k={k}");
                        assert_eq!(cert.cut.as_deref(), Some(&p.hub[..]));
                    } else {
                        assert!(cert.kappa >= k);
                    }
                }
            }
        }
    }
}

#[test]
fn wrong_family_is_rejected() {
    let p = ConstructionParams::new(8, 3, 2, Family::Clique).unwrap();
    assert!(matches!(construct_case1(&p), Err(Error::Param(_))));
    let p = ConstructionParams::new(8, 3, 2, Family::Biclique).unwrap();
    assert!(matches!(construct_case2(&p), Err(Error::Param(_))));
    for (n, t, k, fam) in [
        (5, 3, 2, Family::Biclique),
        (2, 3, 2, Family::Clique),
        (9, 3, 1, Family::Clique),
        (9, 2, 3, Family::Clique),
    ] {
        assert!(matches!(ConstructionParams::new(n, t, k, fam), Err(Error::Param(_))), "{n} {t} {k}");
    }
}

#[test]
fn members_contain_their_core_so_inherit_its_lower_bound() {
    // The pentagon colouring of K_5 has no monochromatic triangle, so no
    // monochromatic copy of anything containing K_3.
    let pentagon = TwoColouring::pentagon();
    for n in 4..=7 {
        let g = construct_case2(&ConstructionParams::new(n, 3, 2, Family::Clique).unwrap()).unwrap();
        assert!(avoids(&pentagon, &g, &g), "n = {n}");
        let res = arrows(5, &g, &g).unwrap();
        assert!(!res.holds, "n = {n}");
        assert!(avoids(&res.witness.unwrap(), &g, &g));
    }
    for n in 6..=7 {
        let g = construct_case1(&ConstructionParams::new(n, 3, 2, Family::Biclique).unwrap()).unwrap();
        assert!(!arrows(7, &g, &g).unwrap().holds, "n = {n}");
    }
}

#[test]
fn t_selection() {
    // 2^t > f^2.
    for (f, t) in [(1, 1), (2, 3), (3, 4), (8, 7), (16, 9), (100, 14), (1000, 20)] {
        assert_eq!(select_t(f, Family::Clique, BoundProxy::ExpLower).unwrap(), t, "f = {f}");
    }
    // r(K_3) = 6 > 5 and r(K_2) = 2 <= 5.
    assert_eq!(select_t(5, Family::Clique, BoundProxy::Exact { cap: 8 }).unwrap(), 3);
    assert_eq!(select_t(6, Family::Clique, BoundProxy::Exact { cap: 8 }).unwrap(), 4);
    // r(K_{2,2}) = 6.
    assert_eq!(select_t(5, Family::Biclique, BoundProxy::Exact { cap: 8 }).unwrap(), 2);
    assert!(matches!(select_t(9, Family::Clique, BoundProxy::Exact { cap: 8 }), Err(Error::Capacity { .. })));
    assert!(matches!(select_t(0, Family::Clique, BoundProxy::ExpLower), Err(Error::Param(_))));
}

#[test]
fn family_members() {
    let m = build_family_member(40, 2, 1000, BoundProxy::ExpLower, CaseChoice::Clique).unwrap();
    assert_eq!((m.params.t, m.proxy_t, m.graph.order()), (20, 20, 40));
    assert_eq!(vertex_connectivity(&m.graph).unwrap().kappa, 2);

    // 2^(64/8) = 256 >= 200 picks the biclique family.
    let m = build_family_member(64, 3, 200, BoundProxy::ExpLower, CaseChoice::Auto).unwrap();
    assert_eq!(m.params.family, Family::Biclique);
    let m = build_family_member(64, 3, 300, BoundProxy::ExpLower, CaseChoice::Auto).unwrap();
    assert_eq!(m.params.family, Family::Clique);

    // Proxy t too large for n.
    assert!(matches!(
        build_family_member(10, 2, 1000, BoundProxy::ExpLower, CaseChoice::Clique),
        Err(Error::Capacity { .. })
    ));
    assert!(matches!(
        build_family_member(10, 2, 5, BoundProxy::ExpLower, CaseChoice::Clique),
        Err(Error::Param(_))
    ));
}
