use crate::error::GraphError;
use crate::graph::Graph;
use crate::metric::Metric;

/// Box (Cartesian) product; vertex `(a, b)` is numbered `a * |V(h)| + b`.
pub fn box_product(g: &Graph, h: &Graph) -> Graph {
    let (n1, n2) = (g.vertex_count(), h.vertex_count());
    let mut out = Graph::new(n1 * n2);
    for a in 0..n1 {
        for (b1, b2) in h.edges() {
            out.add_edge(a * n2 + b1, a * n2 + b2).expect("in range");
        }
    }
    for (a1, a2) in g.edges() {
        for b in 0..n2 {
            out.add_edge(a1 * n2 + b, a2 * n2 + b).expect("in range");
        }
    }
    out
}

/// Peripheral expansion along a convex set `u`: a copy of `g[u]` is added,
/// joined to `u` by a perfect matching. Copies are numbered from
/// `|V(g)|` upward in increasing order of their originals.
pub fn peripheral_expansion(g: &Graph, u: &[usize]) -> Result<Graph, GraphError> {
    let mut set: Vec<usize> = u.to_vec();
    set.sort_unstable();
    set.dedup();
    for &x in &set {
        g.check_vertex(x)?;
    }
    let m = Metric::new(g)?;
    if let Some((a, b, x)) = m.convexity_violation(&set) {
        return Err(GraphError::NotConvex { a, b, x });
    }
    let n = g.vertex_count();
    let mut out = g.clone();
    let mut copy = vec![usize::MAX; n];
    for &x in &set {
        copy[x] = out.add_vertex();
        out.add_edge(x, copy[x])?;
    }
    for &x in &set {
        for &y in g.neighbors(x) {
            if copy[y] != usize::MAX && x < y {
                out.add_edge(copy[x], copy[y])?;
            }
        }
    }
    debug_assert_eq!(out.vertex_count(), n + set.len());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theta::isometric_dimension;

    #[test]
    fn q1_squared_is_square() {
        let p = box_product(&Graph::path(2), &Graph::path(2));
        assert_eq!(p.vertex_count(), 4);
        assert_eq!(p.edge_count(), 4);
        assert!(p.edges().iter().all(|&(a, b)| (a ^ b).count_ones() == 1));
    }

    #[test]
    fn grid_dimension() {
        let grid = box_product(&Graph::path(2), &Graph::path(3));
        assert_eq!(grid.vertex_count(), 6);
        assert_eq!(grid.edge_count(), 7);
        let m = Metric::new(&grid).unwrap();
        assert_eq!(isometric_dimension(&m).unwrap(), 3);
    }

    #[test]
    fn expanding_a_vertex_gives_an_edge() {
        let g = peripheral_expansion(&Graph::new(1), &[0]).unwrap();
        assert_eq!(g, Graph::path(2));
    }

    #[test]
    fn non_convex_rejected() {
        let c6 = Graph::cycle(6);
        assert!(matches!(
            peripheral_expansion(&c6, &[0, 2]),
            Err(GraphError::NotConvex { .. })
        ));
    }
}
