use serde::Serialize;

use crate::error::GraphError;
use crate::metric::Metric;
use crate::theta::{is_partial_cube, theta_classes};

/// Isometric embedding into `Q_d`, one coordinate per θ-class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypercubeEmbedding {
    pub dimension: usize,
    pub coords: Vec<Vec<bool>>,
}

impl HypercubeEmbedding {
    pub fn hamming(&self, u: usize, v: usize) -> usize {
        self.coords[u]
            .iter()
            .zip(&self.coords[v])
            .filter(|(a, b)| a != b)
            .count()
    }

    pub fn coord_string(&self, u: usize) -> String {
        self.coords[u]
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect()
    }
}

/// Places vertex 0 at the origin; coordinate `k` of `x` is 1 exactly when
/// `x` is on the far side of class `k` from vertex 0. Every pair is then
/// checked against the BFS metric.
pub fn embed_hypercube(m: &Metric<'_>) -> Result<HypercubeEmbedding, GraphError> {
    let cert = is_partial_cube(m)?;
    if !cert.is_partial_cube {
        return Err(GraphError::NotPartialCube(format!("{:?}", cert.witness)));
    }
    let partition = theta_classes(m);
    let n = m.vertex_count();
    let mut coords = vec![vec![false; partition.class_count]; n];
    for k in 0..partition.class_count {
        let &(x, y) = partition
            .edges
            .iter()
            .zip(&partition.class_of)
            .find(|(_, &c)| c == k)
            .map(|(e, _)| e)
            .expect("every class has an edge");
        let base_near_x = m.d(0, x) < m.d(0, y);
        for (v, c) in coords.iter_mut().enumerate() {
            let near_x = m.d(v, x) < m.d(v, y);
            c[k] = near_x != base_near_x;
        }
    }
    let emb = HypercubeEmbedding {
        dimension: partition.class_count,
        coords,
    };
    for u in 0..n {
        for v in u + 1..n {
            let (hamming, distance) = (emb.hamming(u, v), m.d(u, v));
            if hamming != distance {
                return Err(GraphError::EmbeddingMismatch {
                    u,
                    v,
                    hamming,
                    distance,
                });
            }
        }
    }
    Ok(emb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn hexagon_embeds_in_q3() {
        let g = Graph::cycle(6);
        let m = Metric::new(&g).unwrap();
        let e = embed_hypercube(&m).unwrap();
        assert_eq!(e.dimension, 3);
        assert_eq!(e.coord_string(0), "000");
        assert_eq!(e.hamming(0, 3), 3);
    }

    #[test]
    fn cube_embeds_in_itself() {
        let g = Graph::hypercube(3);
        let m = Metric::new(&g).unwrap();
        let e = embed_hypercube(&m).unwrap();
        assert_eq!(e.dimension, 3);
        let mut seen: Vec<String> = (0..8).map(|v| e.coord_string(v)).collect();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 8);
    }

    #[test]
    fn odd_cycle_rejected() {
        let g = Graph::cycle(3);
        let m = Metric::new(&g).unwrap();
        assert!(matches!(
            embed_hypercube(&m),
            Err(GraphError::NotPartialCube(_))
        ));
    }
}
