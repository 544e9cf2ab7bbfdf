use std::collections::VecDeque;

use crate::error::GraphError;

/// Marker distance for vertices a BFS did not reach.
pub const UNREACHED: usize = usize::MAX;

/// Simple undirected graph on `0..n` with sorted neighbour lists.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts `{u, v}`. Returns `false` when the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        let n = self.adj.len();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { vertex: x, count: n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.edge_count += 1;
                Ok(true)
            }
        }
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn check_vertex(&self, u: usize) -> Result<(), GraphError> {
        if u < self.adj.len() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: u,
                count: self.adj.len(),
            })
        }
    }

    /// BFS distances from `src`; unreachable vertices get [`UNREACHED`].
    pub fn bfs(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![UNREACHED; self.adj.len()];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == UNREACHED {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.adj.is_empty() || self.bfs(0).iter().all(|&d| d != UNREACHED)
    }

    /// Proper 2-colouring, or an edge whose endpoints got the same colour.
    pub fn two_coloring(&self) -> Result<Vec<bool>, (usize, usize)> {
        let n = self.adj.len();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &v in &self.adj[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return Err((u.min(v), u.max(v))),
                        Some(_) => {}
                    }
                }
            }
        }
        Ok(color.into_iter().map(|c| c.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_ok()
    }

    pub fn is_tree(&self) -> bool {
        !self.adj.is_empty() && self.edge_count + 1 == self.adj.len() && self.is_connected()
    }

    pub fn is_path(&self) -> bool {
        self.is_tree() && self.adj.iter().all(|nbrs| nbrs.len() <= 2)
    }

    /// Subgraph induced on `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![UNREACHED; self.adj.len()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != UNREACHED && i < j {
                    g.add_edge(i, j).expect("indices are in range");
                }
            }
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Graph {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0).expect("valid cycle");
        }
        g
    }

    /// The hypercube `Q_d`; vertex bits are coordinates.
    pub fn hypercube(d: usize) -> Graph {
        let n = 1usize << d;
        let mut g = Graph::new(n);
        for u in 0..n {
            for k in 0..d {
                let v = u ^ (1 << k);
                if u < v {
                    g.add_edge(u, v).expect("valid cube edge");
                }
            }
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicate_edges_collapse() {
        let mut g = Graph::new(3);
        assert!(g.add_edge(0, 1).unwrap());
        assert!(!g.add_edge(1, 0).unwrap());
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.neighbors(1), &[0]);
    }

    #[test]
    fn rejects_loops_and_range() {
        let mut g = Graph::new(2);
        assert_eq!(g.add_edge(1, 1), Err(GraphError::SelfLoop(1)));
        assert!(matches!(
            g.add_edge(0, 5),
            Err(GraphError::VertexOutOfRange { vertex: 5, .. })
        ));
    }

    #[test]
    fn coloring_finds_odd_cycle_edge() {
        assert!(Graph::cycle(6).is_bipartite());
        assert!(Graph::cycle(5).two_coloring().is_err());
    }

    #[test]
    fn trees_and_paths() {
        assert!(Graph::path(4).is_path());
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(star.is_tree());
        assert!(!star.is_path());
        assert!(!Graph::cycle(4).is_tree());
    }

    #[test]
    fn cube_counts() {
        let q3 = Graph::hypercube(3);
        assert_eq!(q3.vertex_count(), 8);
        assert_eq!(q3.edge_count(), 12);
    }

    #[test]
    fn induced_keeps_order() {
        let g = Graph::cycle(6);
        let h = g.induced_subgraph(&[2, 3, 4]);
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
    }
}
