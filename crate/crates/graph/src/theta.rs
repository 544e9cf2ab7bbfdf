//! The Djoković–Winkler relation and partial-cube recognition.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::GraphError;
use crate::metric::Metric;

/// Raw θ on the edges of a graph: `e θ f` when `f` joins the two semicubes
/// cut by `e`. Stored as one bit row per edge.
#[derive(Clone, Debug)]
pub struct ThetaRelation {
    edges: Vec<(usize, usize)>,
    words: usize,
    bits: Vec<u64>,
}

impl ThetaRelation {
    pub fn compute(m: &Metric<'_>) -> Self {
        let edges = m.graph().edges();
        let e = edges.len();
        let n = m.vertex_count();
        let words = e.div_ceil(64).max(1);
        let mut bits = vec![0u64; e * words];
        let mut side = vec![0i8; n];
        for (i, &(x, y)) in edges.iter().enumerate() {
            for (w, s) in side.iter_mut().enumerate() {
                *s = match m.d(w, x).cmp(&m.d(w, y)) {
                    std::cmp::Ordering::Less => 1,
                    std::cmp::Ordering::Greater => -1,
                    std::cmp::Ordering::Equal => 0,
                };
            }
            let row = &mut bits[i * words..(i + 1) * words];
            for (j, &(a, b)) in edges.iter().enumerate() {
                if side[a] != 0 && side[a] == -side[b] {
                    row[j / 64] |= 1 << (j % 64);
                }
            }
        }
        ThetaRelation { edges, words, bits }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn related(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn is_symmetric(&self) -> bool {
        let e = self.edges.len();
        (0..e).all(|i| (0..e).all(|j| self.related(i, j) == self.related(j, i)))
    }
}

/// Classes of the transitive closure of θ.
#[derive(Clone, Debug, Serialize)]
pub struct ThetaPartition {
    pub edges: Vec<(usize, usize)>,
    /// Class id per edge, numbered in order of first appearance.
    pub class_of: Vec<usize>,
    pub class_count: usize,
    /// Whether raw θ already equals its closure.
    pub transitive: bool,
    /// Edge indices `e θ f`, `f θ g` with `e` and `g` unrelated.
    pub intransitive_witness: Option<[usize; 3]>,
}

impl ThetaPartition {
    pub fn class_edges(&self, class: usize) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .zip(&self.class_of)
            .filter(|(_, &c)| c == class)
            .map(|(&e, _)| e)
            .collect()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn class_of_edge(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_index(u, v).map(|i| self.class_of[i])
    }
}

pub fn theta_classes(m: &Metric<'_>) -> ThetaPartition {
    partition_from(&ThetaRelation::compute(m))
}

pub fn partition_from(rel: &ThetaRelation) -> ThetaPartition {
    let e = rel.edges.len();
    let mut parent: Vec<usize> = (0..e).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for i in 0..e {
        for j in i + 1..e {
            if rel.related(i, j) || rel.related(j, i) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut class_of = vec![usize::MAX; e];
    let mut ids = vec![usize::MAX; e];
    let mut class_count = 0;
    for i in 0..e {
        let r = find(&mut parent, i);
        if ids[r] == usize::MAX {
            ids[r] = class_count;
            class_count += 1;
        }
        class_of[i] = ids[r];
    }

    let mut witness = None;
    'search: for i in 0..e {
        for j in i + 1..e {
            if class_of[i] == class_of[j] && !(rel.related(i, j) && rel.related(j, i)) {
                witness = Some(chain_witness(rel, i, j));
                break 'search;
            }
        }
    }
    ThetaPartition {
        edges: rel.edges.clone(),
        class_of,
        class_count,
        transitive: witness.is_none(),
        intransitive_witness: witness,
    }
}

/// Shortest θ-path from `from` to `to`; its first three edges form a
/// transitivity failure (or the pair itself when θ is asymmetric there).
fn chain_witness(rel: &ThetaRelation, from: usize, to: usize) -> [usize; 3] {
    let e = rel.edges.len();
    let mut prev = vec![usize::MAX; e];
    let mut seen = vec![false; e];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        for y in 0..e {
            if !seen[y] && (rel.related(x, y) || rel.related(y, x)) {
                seen[y] = true;
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut path = vec![to];
    while let Some(&last) = path.last() {
        if last == from {
            break;
        }
        path.push(prev[last]);
    }
    path.reverse();
    if path.len() >= 3 {
        [path[0], path[1], path[2]]
    } else {
        [from, to, from]
    }
}

/// The first failing condition found while recognizing a partial cube.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum PartialCubeWitness {
    /// Edge whose endpoints fall in the same colour class.
    NotBipartite { edge: (usize, usize) },
    ThetaNotTransitive {
        e: (usize, usize),
        f: (usize, usize),
        g: (usize, usize),
    },
    /// `outside` lies on a geodesic between `a` and `b`, both in the
    /// semicube of `edge` closer to `edge.0`.
    NonConvexSemicube {
        edge: (usize, usize),
        a: usize,
        b: usize,
        outside: usize,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct PartialCubeCertificate {
    pub is_partial_cube: bool,
    pub bipartite: bool,
    pub theta_transitive: bool,
    pub semicubes_convex: bool,
    pub witness: Option<PartialCubeWitness>,
}

/// Recognizes partial cubes by two independent characterizations (convex
/// semicubes; transitive θ), both over a bipartite base. Disagreement is an
/// error, since it can only come from a bug.
pub fn is_partial_cube(m: &Metric<'_>) -> Result<PartialCubeCertificate, GraphError> {
    let g = m.graph();
    let coloring = g.two_coloring();
    let bipartite = coloring.is_ok();

    let partition = theta_classes(m);
    let theta_transitive = partition.transitive;

    let mut convex_witness = None;
    'edges: for &(u, v) in &partition.edges {
        let s = m.semicube(u, v)?;
        for (side, anchor) in [(&s.w_uv, (u, v)), (&s.w_vu, (v, u))] {
            if let Some((a, b, x)) = m.convexity_violation(side) {
                convex_witness = Some(PartialCubeWitness::NonConvexSemicube {
                    edge: anchor,
                    a,
                    b,
                    outside: x,
                });
                break 'edges;
            }
        }
    }
    let semicubes_convex = convex_witness.is_none();

    let by_convexity = bipartite && semicubes_convex;
    let by_theta = bipartite && theta_transitive;
    if by_convexity != by_theta {
        return Err(GraphError::CharacterizationMismatch(format!(
            "convex semicubes: {semicubes_convex}, transitive theta: {theta_transitive}"
        )));
    }

    let witness = if let Err(edge) = coloring {
        Some(PartialCubeWitness::NotBipartite { edge })
    } else if let Some([e, f, h]) = partition.intransitive_witness {
        Some(PartialCubeWitness::ThetaNotTransitive {
            e: partition.edges[e],
            f: partition.edges[f],
            g: partition.edges[h],
        })
    } else {
        convex_witness
    };
    Ok(PartialCubeCertificate {
        is_partial_cube: by_theta,
        bipartite,
        theta_transitive,
        semicubes_convex,
        witness,
    })
}

pub fn isometric_dimension(m: &Metric<'_>) -> Result<usize, GraphError> {
    let cert = is_partial_cube(m)?;
    if !cert.is_partial_cube {
        return Err(GraphError::NotPartialCube(format!("{:?}", cert.witness)));
    }
    Ok(theta_classes(m).class_count)
}
