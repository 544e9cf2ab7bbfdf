//! Shortest-path metric of a connected graph, with intervals, convexity and
//! semicubes computed from the all-pairs table.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::GraphError;
use crate::graph::{Graph, UNREACHED};

const PARALLEL_BFS_THRESHOLD: usize = 128;

/// All-pairs BFS distances of a connected graph.
#[derive(Clone, Debug)]
pub struct Metric<'g> {
    graph: &'g Graph,
    n: usize,
    dist: Vec<u32>,
}

/// The two halves of the vertex set cut by an edge `{u, v}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemicubePair {
    pub u: usize,
    pub v: usize,
    /// Vertices strictly closer to `u` than to `v`.
    pub w_uv: Vec<usize>,
    pub w_vu: Vec<usize>,
    /// Vertices of `w_uv` with a neighbour in `w_vu`.
    pub u_uv: Vec<usize>,
    pub u_vu: Vec<usize>,
    /// Edges `(a, b)` with `a` in `w_uv` and `b` in `w_vu`.
    pub f_uv: Vec<(usize, usize)>,
}

impl SemicubePair {
    pub fn covers(&self, n: usize) -> bool {
        self.w_uv.len() + self.w_vu.len() == n
    }
}

impl<'g> Metric<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self, GraphError> {
        let n = graph.vertex_count();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let rows: Vec<Vec<usize>> = if n >= PARALLEL_BFS_THRESHOLD {
            (0..n).into_par_iter().map(|s| graph.bfs(s)).collect()
        } else {
            (0..n).map(|s| graph.bfs(s)).collect()
        };
        let mut dist = Vec::with_capacity(n * n);
        for row in rows {
            for d in row {
                if d == UNREACHED {
                    return Err(GraphError::Disconnected);
                }
                dist.push(d as u32);
            }
        }
        Ok(Metric { graph, n, dist })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn d(&self, u: usize, v: usize) -> usize {
        self.dist[u * self.n + v] as usize
    }

    pub fn matrix(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| self.d(u, v)).collect())
            .collect()
    }

    pub fn diameter(&self) -> usize {
        self.dist.iter().copied().max().unwrap_or(0) as usize
    }

    /// Unordered pairs `u < v` realizing the diameter.
    pub fn diametral_pairs(&self) -> Vec<(usize, usize)> {
        let diam = self.diameter();
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.d(u, v) == diam {
                    out.push((u, v));
                }
            }
        }
        out
    }

    #[inline]
    pub fn on_geodesic(&self, u: usize, v: usize, x: usize) -> bool {
        self.d(u, x) + self.d(x, v) == self.d(u, v)
    }

    /// The interval `I(u, v)` in increasing vertex order.
    pub fn interval(&self, u: usize, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&x| self.on_geodesic(u, v, x)).collect()
    }

    /// A vertex outside `set` lying on a geodesic between two members.
    ///
    /// Only first steps of geodesics are inspected: if every first step from
    /// every member towards every other member stays inside, whole geodesics
    /// do by induction.
    pub fn convexity_violation(&self, set: &[usize]) -> Option<(usize, usize, usize)> {
        let mut inside = vec![false; self.n];
        for &x in set {
            inside[x] = true;
        }
        for &a in set {
            for &b in set {
                if a == b {
                    continue;
                }
                let dab = self.d(a, b);
                for &x in self.graph.neighbors(a) {
                    if !inside[x] && self.d(x, b) + 1 == dab {
                        return Some((a, b, x));
                    }
                }
            }
        }
        None
    }

    pub fn is_convex(&self, set: &[usize]) -> bool {
        self.convexity_violation(set).is_none()
    }

    /// Semicube split along the edge `{u, v}`.
    pub fn semicube(&self, u: usize, v: usize) -> Result<SemicubePair, GraphError> {
        if !self.graph.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let mut side = vec![0i8; self.n];
        let mut w_uv = Vec::new();
        let mut w_vu = Vec::new();
        for x in 0..self.n {
            let (du, dv) = (self.d(x, u), self.d(x, v));
            if du < dv {
                side[x] = 1;
                w_uv.push(x);
            } else if dv < du {
                side[x] = -1;
                w_vu.push(x);
            }
        }
        let mut f_uv = Vec::new();
        let mut on_u = vec![false; self.n];
        let mut on_v = vec![false; self.n];
        for &a in &w_uv {
            for &b in self.graph.neighbors(a) {
                if side[b] == -1 {
                    f_uv.push((a, b));
                    on_u[a] = true;
                    on_v[b] = true;
                }
            }
        }
        let u_uv = (0..self.n).filter(|&x| on_u[x]).collect();
        let u_vu = (0..self.n).filter(|&x| on_v[x]).collect();
        Ok(SemicubePair {
            u,
            v,
            w_uv,
            w_vu,
            u_uv,
            u_vu,
            f_uv,
        })
    }
}

fn connected_metric(g: &Graph) -> Result<Metric<'_>, GraphError> {
    Metric::new(g)
}

pub fn distance(g: &Graph, u: usize, v: usize) -> Result<usize, GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    Ok(g.bfs(u)[v])
}

pub fn all_pairs(g: &Graph) -> Result<Vec<Vec<usize>>, GraphError> {
    Ok(connected_metric(g)?.matrix())
}

pub fn diameter(g: &Graph) -> Result<usize, GraphError> {
    Ok(connected_metric(g)?.diameter())
}

pub fn interval(g: &Graph, u: usize, v: usize) -> Result<Vec<usize>, GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    Ok(connected_metric(g)?.interval(u, v))
}

pub fn is_convex(g: &Graph, set: &[usize]) -> Result<bool, GraphError> {
    for &x in set {
        g.check_vertex(x)?;
    }
    Ok(connected_metric(g)?.is_convex(set))
}

pub fn semicube(g: &Graph, u: usize, v: usize) -> Result<SemicubePair, GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    connected_metric(g)?.semicube(u, v)
}
