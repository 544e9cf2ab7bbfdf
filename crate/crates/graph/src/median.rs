use rayon::prelude::*;
use serde::Serialize;

use crate::error::GraphError;
use crate::metric::Metric;

/// Above this many vertices the exhaustive triple scan needs `force`.
pub const MEDIAN_VERTEX_CAP: usize = 2000;

/// `I(u,v) ∩ I(u,w) ∩ I(v,w)` in increasing order.
pub fn median_triple(m: &Metric<'_>, u: usize, v: usize, w: usize) -> Vec<usize> {
    (0..m.vertex_count())
        .filter(|&x| m.on_geodesic(u, v, x) && m.on_geodesic(u, w, x) && m.on_geodesic(v, w, x))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum MedianVerdict {
    Median,
    NotMedian {
        triple: (usize, usize, usize),
        medians: Vec<usize>,
    },
}

impl MedianVerdict {
    pub fn is_median(&self) -> bool {
        matches!(self, MedianVerdict::Median)
    }
}

/// Exhaustive check that every triple has exactly one median; reports the
/// lexicographically first failing triple.
pub fn is_median_graph(m: &Metric<'_>, force: bool) -> Result<MedianVerdict, GraphError> {
    let n = m.vertex_count();
    if n > MEDIAN_VERTEX_CAP && !force {
        return Err(GraphError::TooLarge {
            vertices: n,
            cap: MEDIAN_VERTEX_CAP,
        });
    }
    let first_bad = |u: usize| -> Option<(usize, usize, usize)> {
        for v in u..n {
            for w in v..n {
                let mut count = 0;
                for x in 0..n {
                    if m.on_geodesic(u, v, x) && m.on_geodesic(u, w, x) && m.on_geodesic(v, w, x)
                    {
                        count += 1;
                        if count > 1 {
                            break;
                        }
                    }
                }
                if count != 1 {
                    return Some((u, v, w));
                }
            }
        }
        None
    };
    let bad = if n >= 64 {
        (0..n).into_par_iter().find_map_first(first_bad)
    } else {
        (0..n).find_map(first_bad)
    };
    Ok(match bad {
        None => MedianVerdict::Median,
        Some((u, v, w)) => MedianVerdict::NotMedian {
            triple: (u, v, w),
            medians: median_triple(m, u, v, w),
        },
    })
}
