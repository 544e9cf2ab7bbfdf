//! Small named graphs with known structural facts.

use coxbraid_graph::*;
use petgraph::graph::UnGraph;

fn letters(edges: &[(char, char)]) -> Graph {
    let idx = |c: char| (c as u8 - b'a') as usize;
    let n = edges
        .iter()
        .map(|&(a, b)| idx(a).max(idx(b)) + 1)
        .max()
        .unwrap();
    Graph::from_edges(n, edges.iter().map(|&(a, b)| (idx(a), idx(b)))).unwrap()
}

fn shifted(edges: &[(usize, usize)], by: usize) -> Graph {
    let n = edges.iter().map(|&(a, b)| a.max(b) + 1 - by).max().unwrap();
    Graph::from_edges(n, edges.iter().map(|&(a, b)| (a - by, b - by))).unwrap()
}

fn pet(g: &Graph) -> UnGraph<(), ()> {
    let mut p = UnGraph::<(), ()>::new_undirected();
    let nodes: Vec<_> = (0..g.vertex_count()).map(|_| p.add_node(())).collect();
    for (u, v) in g.edges() {
        p.add_edge(nodes[u], nodes[v], ());
    }
    p
}

fn isomorphic(g: &Graph, h: &Graph) -> bool {
    petgraph::algo::is_isomorphic(&pet(g), &pet(h))
}

/// The 11-vertex grid-like graph used for semicubes and medians.
fn eleven() -> Graph {
    letters(&[
        ('a', 'b'),
        ('b', 'd'),
        ('c', 'd'),
        ('c', 'a'),
        ('b', 'e'),
        ('e', 'f'),
        ('f', 'd'),
        ('d', 'g'),
        ('g', 'h'),
        ('h', 'c'),
        ('i', 'j'),
        ('j', 'k'),
        ('i', 'a'),
        ('j', 'b'),
        ('k', 'e'),
    ])
}

fn v(c: char) -> usize {
    (c as u8 - b'a') as usize
}

#[test]
fn eleven_vertex_graph_has_five_theta_classes() {
    let g = eleven();
    let m = Metric::new(&g).unwrap();
    let p = theta_classes(&m);
    assert!(p.transitive);
    assert_eq!(p.class_count, 5);
    assert_eq!(isometric_dimension(&m).unwrap(), 5);

    let expected: [&[(char, char)]; 5] = [
        &[('a', 'b'), ('c', 'd'), ('g', 'h'), ('i', 'j')],
        &[('b', 'd'), ('c', 'a'), ('e', 'f')],
        &[('b', 'e'), ('f', 'd'), ('j', 'k')],
        &[('d', 'g'), ('h', 'c')],
        &[('i', 'a'), ('j', 'b'), ('k', 'e')],
    ];
    for class in expected {
        let ids: Vec<_> = class
            .iter()
            .map(|&(a, b)| p.class_of_edge(v(a), v(b)).unwrap())
            .collect();
        assert!(ids.windows(2).all(|w| w[0] == w[1]), "{class:?}");
        assert_eq!(p.class_edges(ids[0]).len(), class.len());
    }
    let e = embed_hypercube(&m).unwrap();
    assert_eq!(e.dimension, 5);
}

#[test]
fn eleven_vertex_semicube_split() {
    let g = eleven();
    let s = semicube(&g, v('a'), v('c')).unwrap();
    let names = |set: &[usize]| -> String { set.iter().map(|&x| (b'a' + x as u8) as char).collect() };
    assert_eq!(names(&s.w_uv), "abeijk");
    assert_eq!(names(&s.w_vu), "cdfgh");
    assert_eq!(names(&s.u_uv), "abe");
    assert_eq!(names(&s.u_vu), "cdf");
    assert_eq!(s.f_uv.len(), 3);
}

#[test]
fn eleven_vertex_graph_median_at_c() {
    let g = eleven();
    let m = Metric::new(&g).unwrap();
    assert_eq!(median_triple(&m, v('i'), v('h'), v('f')), vec![v('c')]);
    assert!(is_median_graph(&m, false).unwrap().is_median());
}

#[test]
fn hexagon_partial_cube_not_median() {
    let c6 = shifted(&[(1, 2), (1, 6), (2, 3), (3, 4), (4, 5), (5, 6)], 1);
    let m = Metric::new(&c6).unwrap();
    assert!(is_partial_cube(&m).unwrap().is_partial_cube);
    assert_eq!(isometric_dimension(&m).unwrap(), 3);
    // v = 1, w = 3, u = 5
    assert!(median_triple(&m, 0, 2, 4).is_empty());
    assert!(!is_median_graph(&m, false).unwrap().is_median());
}

#[test]
fn house_graph_theta_not_transitive() {
    // u = a, v = c; b1 = {a, c}, b2 = {b, e}, b3 = {b, d}
    let g = letters(&[
        ('a', 'b'),
        ('b', 'd'),
        ('c', 'd'),
        ('c', 'a'),
        ('b', 'e'),
        ('e', 'c'),
    ]);
    let m = Metric::new(&g).unwrap();
    let rel = ThetaRelation::compute(&m);
    let idx = |a: char, b: char| {
        let key = (v(a).min(v(b)), v(a).max(v(b)));
        rel.edges().iter().position(|&e| e == key).unwrap()
    };
    let (b1, b2, b3) = (idx('a', 'c'), idx('b', 'e'), idx('b', 'd'));
    assert!(rel.related(b1, b2));
    assert!(rel.related(b1, b3));
    assert!(!rel.related(b2, b3));

    let cert = is_partial_cube(&m).unwrap();
    assert!(cert.bipartite);
    assert!(!cert.theta_transitive);
    assert!(!cert.semicubes_convex);
    assert!(!cert.is_partial_cube);
    assert!(matches!(
        cert.witness,
        Some(PartialCubeWitness::ThetaNotTransitive { .. })
    ));
    assert!(!theta_classes(&m).transitive);
}

#[test]
fn cube_host_cycle_classes() {
    let host = shifted(
        &[
            (6, 7),
            (6, 8),
            (7, 9),
            (9, 8),
            (10, 11),
            (10, 12),
            (11, 13),
            (13, 12),
            (13, 9),
            (6, 10),
            (7, 11),
            (8, 12),
        ],
        6,
    );
    assert!(isomorphic(&host, &Graph::hypercube(3)));
    let m = Metric::new(&host).unwrap();
    let s = |c: &[usize]| c.iter().map(|x| x - 6).collect::<Vec<_>>();
    assert_eq!(classify_cycle(&m, &s(&[7, 9, 8, 6])).unwrap(), CycleClass::Convex);
    assert!(is_convex(&host, &s(&[7, 9, 8, 6])).unwrap());
    assert_eq!(
        classify_cycle(&m, &s(&[7, 9, 8, 12, 10, 11])).unwrap(),
        CycleClass::IsometricNotConvex
    );
    assert_eq!(
        classify_cycle(&m, &s(&[7, 9, 8, 12, 10, 6])).unwrap(),
        CycleClass::Neither
    );
}

#[test]
fn seven_vertex_partial_cube_dimension() {
    // θ-class counting gives 3 for the hexagon and 4 here
    let g = shifted(
        &[(1, 2), (1, 3), (1, 4), (3, 5), (5, 4), (5, 7), (6, 7), (6, 4)],
        1,
    );
    let m = Metric::new(&g).unwrap();
    assert_eq!(isometric_dimension(&m).unwrap(), 4);
    assert_eq!(isometric_dimension(&Metric::new(&Graph::cycle(6)).unwrap()).unwrap(), 3);
}

#[test]
fn peripheral_expansion_sequence() {
    let a = Graph::new(1);
    let b = peripheral_expansion(&a, &[0]).unwrap();
    assert_eq!(b, shifted(&[(1, 2)], 1));

    let c = peripheral_expansion(&b, &[0]).unwrap();
    let c_fig = shifted(&[(1, 2), (1, 3)], 1);
    assert_eq!(c, c_fig);

    let d = peripheral_expansion(&c_fig, &[0, 2]).unwrap();
    let d_fig = shifted(&[(1, 2), (1, 3), (1, 4), (3, 5), (4, 5)], 1);
    assert_eq!(d, d_fig);

    let e = peripheral_expansion(&d_fig, &[0, 1, 2]).unwrap();
    let e_fig = shifted(
        &[
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 6),
            (8, 3),
            (8, 6),
            (3, 5),
            (6, 7),
            (5, 4),
            (7, 2),
        ],
        1,
    );
    assert!(isomorphic(&e, &e_fig));

    let f = peripheral_expansion(&e_fig, &[0, 1, 2, 3, 4]).unwrap();
    let f_fig = Graph::from_edges(
        14,
        [
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 6),
            (8, 3),
            (8, 6),
            (3, 5),
            (6, 7),
            (5, 4),
            (7, 2),
            (1, 10),
            (10, 13),
            (10, 14),
            (14, 11),
            (13, 11),
            (13, 4),
            (4, 9),
            (9, 2),
            (5, 11),
            (14, 3),
        ]
        .iter()
        .map(|&(a, b)| (a - 1, b - 1)),
    )
    .unwrap();
    // vertex 12 is unused in this labelling
    let f_fig = f_fig.induced_subgraph(&[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13]);
    assert_eq!(f.vertex_count(), 13);
    assert!(isomorphic(&f, &f_fig));

    for g in [&a, &b, &c, &d, &e, &f] {
        let m = Metric::new(g).unwrap();
        assert!(is_median_graph(&m, false).unwrap().is_median());
    }
}

#[test]
fn cube_box_products() {
    for n in 1..=3 {
        for k in 1..=3 {
            let p = box_product(&Graph::hypercube(n), &Graph::hypercube(k));
            assert!(isomorphic(&p, &Graph::hypercube(n + k)), "Q{n} x Q{k}");
        }
    }
}
