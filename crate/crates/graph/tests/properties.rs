//! Randomized checks of the metric and partial-cube machinery against naive
//! recomputations.

use coxbraid_graph::*;
use proptest::prelude::*;

/// Random connected graph: a random tree plus extra edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(any::<prop::sample::Index>(), n - 1),
                proptest::collection::vec((0..n, 0..n), 0..n),
            )
        })
        .prop_map(|(n, parents, extra)| {
            let mut g = Graph::new(n);
            for (i, p) in parents.iter().enumerate() {
                g.add_edge(i + 1, p.index(i + 1)).unwrap();
            }
            for (a, b) in extra {
                if a != b {
                    g.add_edge(a, b).unwrap();
                }
            }
            g
        })
}

/// Connected induced subgraph of Q4 grown from vertex 0.
fn cube_subgraph() -> impl Strategy<Value = Graph> {
    proptest::collection::vec((0usize..16, 0usize..4), 1..24).prop_map(|steps| {
        let mut set = vec![0usize];
        for (pick, bit) in steps {
            let from = set[pick % set.len()];
            let to = from ^ (1 << bit);
            if !set.contains(&to) {
                set.push(to);
            }
        }
        set.sort_unstable();
        Graph::hypercube(4).induced_subgraph(&set)
    })
}

fn tree(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<prop::sample::Index>(), n - 1)))
        .prop_map(|(n, parents)| {
            let mut g = Graph::new(n);
            for (i, p) in parents.iter().enumerate() {
                g.add_edge(i + 1, p.index(i + 1)).unwrap();
            }
            g
        })
}

/// θ by definition, with fresh BFS runs and no shared distance table.
fn theta_by_definition(g: &Graph, e: (usize, usize), f: (usize, usize)) -> bool {
    let (dx, dy) = (g.bfs(e.0), g.bfs(e.1));
    let near_x = |w: usize| dx[w] < dy[w];
    let near_y = |w: usize| dy[w] < dx[w];
    (near_x(f.0) && near_y(f.1)) || (near_y(f.0) && near_x(f.1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn theta_matches_definition(g in connected_graph(9)) {
        let m = Metric::new(&g).unwrap();
        let rel = ThetaRelation::compute(&m);
        let edges = rel.edges().to_vec();
        for (i, &e) in edges.iter().enumerate() {
            for (j, &f) in edges.iter().enumerate() {
                prop_assert_eq!(rel.related(i, j), theta_by_definition(&g, e, f));
            }
        }
    }

    #[test]
    fn characterizations_agree(g in connected_graph(9)) {
        let m = Metric::new(&g).unwrap();
        // a disagreement surfaces as an error
        let cert = is_partial_cube(&m).unwrap();
        prop_assert_eq!(cert.is_partial_cube, cert.bipartite && cert.semicubes_convex);
    }

    #[test]
    fn bipartite_iff_semicubes_partition(g in connected_graph(9)) {
        let m = Metric::new(&g).unwrap();
        let n = g.vertex_count();
        let all_cover = g.edges().iter().all(|&(u, v)| m.semicube(u, v).unwrap().covers(n));
        prop_assert_eq!(all_cover, g.is_bipartite());
    }

    #[test]
    fn semicube_one_step_law(g in cube_subgraph()) {
        let m = Metric::new(&g).unwrap();
        for (u, v) in g.edges() {
            let s = m.semicube(u, v).unwrap();
            for &x in &s.w_uv {
                prop_assert_eq!(m.d(x, v), m.d(x, u) + 1);
            }
        }
    }

    #[test]
    fn partial_cube_classes_are_semicube_pairs(g in cube_subgraph()) {
        let m = Metric::new(&g).unwrap();
        let cert = is_partial_cube(&m).unwrap();
        if cert.is_partial_cube {
            let p = theta_classes(&m);
            let halves: Vec<(Vec<usize>, Vec<usize>)> = p.edges.iter().map(|&(u, v)| {
                let s = m.semicube(u, v).unwrap();
                (s.w_uv, s.w_vu)
            }).collect();
            for i in 0..p.edges.len() {
                for j in 0..p.edges.len() {
                    let same = halves[i] == halves[j]
                        || (halves[i].0 == halves[j].1 && halves[i].1 == halves[j].0);
                    prop_assert_eq!(same, p.class_of[i] == p.class_of[j]);
                }
            }
            let emb = embed_hypercube(&m).unwrap();
            prop_assert_eq!(emb.dimension, p.class_count);
        }
    }

    #[test]
    fn f_classes_match_boundaries(g in cube_subgraph()) {
        let m = Metric::new(&g).unwrap();
        if is_partial_cube(&m).unwrap().is_partial_cube {
            for (u, v) in g.edges() {
                let s = m.semicube(u, v).unwrap();
                // F is a perfect matching between the boundaries
                prop_assert_eq!(s.f_uv.len(), s.u_uv.len());
                prop_assert_eq!(s.f_uv.len(), s.u_vu.len());
                for &(a, b) in &s.f_uv {
                    for &(c, d) in &s.f_uv {
                        prop_assert_eq!(g.has_edge(a, c), g.has_edge(b, d));
                    }
                }
            }
        }
    }

    #[test]
    fn median_implies_partial_cube(g in cube_subgraph()) {
        let m = Metric::new(&g).unwrap();
        if is_median_graph(&m, false).unwrap().is_median() {
            prop_assert!(is_partial_cube(&m).unwrap().is_partial_cube);
        }
    }

    #[test]
    fn trees_are_median(t in tree(10)) {
        let m = Metric::new(&t).unwrap();
        prop_assert!(is_median_graph(&m, false).unwrap().is_median());
        prop_assert_eq!(isometric_dimension(&m).unwrap(), t.edge_count());
    }

    #[test]
    fn box_product_of_trees(a in tree(5), b in tree(5)) {
        let p = box_product(&a, &b);
        let m = Metric::new(&p).unwrap();
        prop_assert!(is_median_graph(&m, false).unwrap().is_median());
        prop_assert_eq!(isometric_dimension(&m).unwrap(), a.edge_count() + b.edge_count());
    }

    #[test]
    fn expansion_keeps_median(t in tree(7), picks in proptest::collection::vec(0usize..7, 1..4)) {
        // the ball of radius 1 around a vertex of a tree is convex
        let centre = picks[0] % t.vertex_count();
        let mut u = vec![centre];
        u.extend_from_slice(t.neighbors(centre));
        let g = peripheral_expansion(&t, &u).unwrap();
        let m = Metric::new(&g).unwrap();
        prop_assert!(is_median_graph(&m, false).unwrap().is_median());
    }
}
