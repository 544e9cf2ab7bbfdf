use std::collections::HashSet;

use serde::Serialize;

use crate::error::GraphError;
use crate::graph::Graph;
use crate::metric::Metric;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CycleClass {
    Convex,
    IsometricNotConvex,
    Neither,
}

pub fn check_cycle(g: &Graph, cycle: &[usize]) -> Result<(), GraphError> {
    let len = cycle.len();
    if len < 3 {
        return Err(GraphError::NotACycle(format!("length {len} is below 3")));
    }
    let mut seen = HashSet::new();
    for &x in cycle {
        g.check_vertex(x)?;
        if !seen.insert(x) {
            return Err(GraphError::NotACycle(format!("vertex {x} repeats")));
        }
    }
    for i in 0..len {
        let (a, b) = (cycle[i], cycle[(i + 1) % len]);
        if !g.has_edge(a, b) {
            return Err(GraphError::NotACycle(format!("{a} and {b} are not adjacent")));
        }
    }
    Ok(())
}

pub fn is_isometric_cycle(m: &Metric<'_>, cycle: &[usize]) -> bool {
    let len = cycle.len();
    (0..len).all(|i| {
        (i + 1..len).all(|j| {
            let along = (j - i).min(len - (j - i));
            m.d(cycle[i], cycle[j]) == along
        })
    })
}

/// Convex cycles are required to be isometric as well.
pub fn classify_cycle(m: &Metric<'_>, cycle: &[usize]) -> Result<CycleClass, GraphError> {
    check_cycle(m.graph(), cycle)?;
    let isometric = is_isometric_cycle(m, cycle);
    Ok(match (isometric, isometric && m.is_convex(cycle)) {
        (true, true) => CycleClass::Convex,
        (true, false) => CycleClass::IsometricNotConvex,
        _ => CycleClass::Neither,
    })
}

/// Every 4-cycle `[a, b, c, d]` once, with `a` the least vertex and `b < d`.
pub fn four_cycles(g: &Graph) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..g.vertex_count() {
        let nbrs = g.neighbors(a);
        for (i, &b) in nbrs.iter().enumerate() {
            if b < a {
                continue;
            }
            for &d in &nbrs[i + 1..] {
                for &c in g.neighbors(b) {
                    if c > a && c != d && g.has_edge(c, d) {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct CycleSample {
    pub cycles: Vec<Vec<usize>>,
    /// Set when a cap cut the enumeration short.
    pub truncated: bool,
}

/// Even isometric cycles, found as unions of two internally disjoint
/// geodesics between antipodal vertices. Each cycle is reported once,
/// rotated to start at its least vertex.
pub fn isometric_cycles(m: &Metric<'_>, max_cycles: usize, max_geodesics: usize) -> CycleSample {
    let n = m.vertex_count();
    let mut seen = HashSet::new();
    let mut cycles = Vec::new();
    let mut truncated = false;
    'pairs: for u in 0..n {
        for v in u + 1..n {
            if m.d(u, v) < 2 {
                continue;
            }
            let (paths, cut) = geodesics(m, u, v, max_geodesics);
            truncated |= cut;
            for (i, p) in paths.iter().enumerate() {
                for q in &paths[i + 1..] {
                    let interior_p: HashSet<usize> = p[1..p.len() - 1].iter().copied().collect();
                    if q[1..q.len() - 1].iter().any(|x| interior_p.contains(x)) {
                        continue;
                    }
                    let mut cycle = p.clone();
                    cycle.extend(q[1..q.len() - 1].iter().rev());
                    if !is_isometric_cycle(m, &cycle) {
                        continue;
                    }
                    let canon = canonical_cycle(&cycle);
                    if seen.insert(canon.clone()) {
                        cycles.push(canon);
                        if cycles.len() >= max_cycles {
                            truncated = true;
                            break 'pairs;
                        }
                    }
                }
            }
        }
    }
    CycleSample { cycles, truncated }
}

/// All geodesics from `u` to `v`, at most `cap` of them.
pub fn geodesics(m: &Metric<'_>, u: usize, v: usize, cap: usize) -> (Vec<Vec<usize>>, bool) {
    let mut out = Vec::new();
    let mut path = vec![u];
    let mut truncated = false;
    extend_geodesic(m, v, &mut path, &mut out, cap, &mut truncated);
    (out, truncated)
}

fn extend_geodesic(
    m: &Metric<'_>,
    target: usize,
    path: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    cap: usize,
    truncated: &mut bool,
) {
    if out.len() >= cap {
        *truncated = true;
        return;
    }
    let last = *path.last().unwrap();
    if last == target {
        out.push(path.clone());
        return;
    }
    let remaining = m.d(last, target);
    for &x in m.graph().neighbors(last) {
        if m.d(x, target) + 1 == remaining {
            path.push(x);
            extend_geodesic(m, target, path, out, cap, truncated);
            path.pop();
        }
    }
}

fn canonical_cycle(cycle: &[usize]) -> Vec<usize> {
    let len = cycle.len();
    let start = (0..len).min_by_key(|&i| cycle[i]).unwrap();
    let forward: Vec<usize> = (0..len).map(|k| cycle[(start + k) % len]).collect();
    let backward: Vec<usize> = (0..len).map(|k| cycle[(start + len - k) % len]).collect();
    forward.min(backward)
}
