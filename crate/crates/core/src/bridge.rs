//! Checks tying braid graphs to their signatures: distance equals signature
//! difference, semicubes are sig-bar sets, cycle laws, intervals, medians by
//! majority, box-product factorization and the peripheral-expansion route.
//!
//! Every check returns a [`CheckReport`]. On systems with a bond-3 triangle
//! the checks refuse unless run in [`Mode::Explore`], where outcomes are
//! recorded as observations instead of verdicts.

use coxbraid_graph::{
    box_product, four_cycles, geodesics, is_median_graph, is_partial_cube, isometric_cycles,
    median_triple, theta_classes, embed_hypercube, Graph, MedianVerdict, Metric,
};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::braid::{braid_class, BraidClass, LabeledBraidGraph};
use crate::error::{Error, Result};
use crate::links::Signature;
use crate::system::CoxeterSystem;
use crate::word::Word;

/// Geodesics enumerated per vertex pair before giving up on completeness.
pub const GEODESIC_CAP: usize = 256;
/// Isometric cycles sampled per graph.
pub const CYCLE_CAP: usize = 500;
/// Triples checked by the majority rule per graph.
pub const MAJORITY_TRIPLES: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Mode {
    /// Refuse systems outside the triangle-free hypothesis.
    #[default]
    Enforce,
    /// Run anyway and report observations.
    Explore,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    ObservedPass,
    ObservedFail,
    PreconditionViolated,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub vertices: usize,
    pub edges: usize,
    pub dim: usize,
    pub diam: usize,
    #[serde(rename = "dimI")]
    pub dim_i: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    Pair { a: String, b: String, detail: String },
    Triple { a: String, b: String, c: String, detail: String },
    Edge { a: String, b: String, label: usize, detail: String },
    Cycle { words: Vec<String>, labels: Vec<usize>, detail: String },
    Set { words: Vec<String>, detail: String },
    Note { detail: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub system: String,
    pub word: String,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    pub stats: Stats,
}

impl CheckReport {
    /// Pass, observed pass, or a reported precondition violation.
    pub fn ok(&self) -> bool {
        !matches!(self.status, Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// A braid graph with its metric and per-vertex signatures.
pub struct BraidContext<'a> {
    pub system: &'a CoxeterSystem,
    pub graph: &'a LabeledBraidGraph,
    pub metric: Metric<'a>,
    pub sigs: Vec<Signature>,
    pub mode: Mode,
    stats: Stats,
}

pub fn check_hypotheses(sys: &CoxeterSystem, mode: Mode) -> Result<()> {
    if mode == Mode::Enforce && !sys.is_triangle_free() {
        return Err(Error::Hypothesis(format!(
            "system {} has three generators pairwise joined by bond 3; rerun with exploration enabled",
            sys.label()
        )));
    }
    Ok(())
}

impl<'a> BraidContext<'a> {
    pub fn new(system: &'a CoxeterSystem, graph: &'a LabeledBraidGraph, mode: Mode) -> Result<Self> {
        check_hypotheses(system, mode)?;
        let metric = Metric::new(graph.graph())?;
        let class = graph.class();
        let sigs = (0..class.len()).map(|i| class.signature_at(i)).collect();
        let dim_i = if is_partial_cube(&metric)?.is_partial_cube {
            Some(theta_classes(&metric).class_count)
        } else {
            None
        };
        let stats = Stats {
            vertices: class.len(),
            edges: graph.edges().len(),
            dim: class.dimension(),
            diam: metric.diameter(),
            dim_i,
        };
        Ok(BraidContext {
            system,
            graph,
            metric,
            sigs,
            mode,
            stats,
        })
    }

    pub fn class(&self) -> &BraidClass {
        self.graph.class()
    }

    pub fn stats(&self) -> &Stats {
        &self.stats
    }

    pub fn literal(&self, i: usize) -> String {
        self.graph.vertices()[i].literal(self.system)
    }

    fn report(&self, check: &str, failures: Vec<Witness>) -> CheckReport {
        let status = match (self.mode == Mode::Explore && !self.system.is_triangle_free(), failures.is_empty()) {
            (false, true) => Status::Pass,
            (false, false) => Status::Fail,
            (true, true) => Status::ObservedPass,
            (true, false) => Status::ObservedFail,
        };
        CheckReport {
            check: check.into(),
            system: self.system.label(),
            word: self.class().representative().literal(self.system),
            status,
            witnesses: failures,
            stats: self.stats.clone(),
        }
    }

    fn pair(&self, a: usize, b: usize, detail: String) -> Witness {
        Witness::Pair {
            a: self.literal(a),
            b: self.literal(b),
            detail,
        }
    }

    fn set(&self, members: &[usize], detail: String) -> Witness {
        Witness::Set {
            words: members.iter().map(|&i| self.literal(i)).collect(),
            detail,
        }
    }

    /// Connected and bipartite; every edge's endpoint signatures differ
    /// exactly at its label; signatures are injective; class shadows never
    /// overlap in two positions. On triangle-free systems each center also
    /// carries exactly two letters across the class, and entries of
    /// overlapping shadows differ.
    pub fn structure_check(&self) -> CheckReport {
        let mut bad = Vec::new();
        let g = self.graph.graph();
        if let Err((u, v)) = g.two_coloring() {
            bad.push(self.pair(u, v, "odd cycle through this edge".into()));
        }
        for &(i, j, label) in self.graph.edges() {
            let diff = self.sigs[i].differences(&self.sigs[j]).unwrap_or_default();
            if diff != [label] {
                bad.push(Witness::Edge {
                    a: self.literal(i),
                    b: self.literal(j),
                    label,
                    detail: format!("signatures differ at {diff:?}"),
                });
            }
        }
        let mut sorted: Vec<(&Signature, usize)> = self.sigs.iter().zip(0..).collect();
        sorted.sort();
        for w in sorted.windows(2) {
            if w[0].0 == w[1].0 {
                bad.push(self.pair(w[0].1, w[1].1, format!("both have signature {}", w[0].0)));
            }
        }
        let centers = self.class().shadow_centers();
        for c in centers.windows(2) {
            if c[1] - c[0] < 2 {
                bad.push(Witness::Note {
                    detail: format!("class shadows centered at {} and {} overlap in two positions", c[0], c[1]),
                });
            }
        }
        if self.system.is_triangle_free() {
            for (k, &c) in centers.iter().enumerate() {
                let support = self.class().local_support(c, c).unwrap_or_default();
                if support.len() != 2 {
                    bad.push(Witness::Note {
                        detail: format!("center {c} carries letters {support:?}"),
                    });
                }
                if k + 1 < centers.len() && centers[k + 1] - c == 2 {
                    for (i, s) in self.sigs.iter().enumerate() {
                        if s.get(k + 1) == s.get(k + 2) {
                            bad.push(Witness::Set {
                                words: vec![self.literal(i)],
                                detail: format!("entries {} and {} coincide", k + 1, k + 2),
                            });
                        }
                    }
                }
            }
        }
        self.report("structure", bad)
    }

    /// Graph distance equals the number of differing signature entries.
    pub fn distance_formula_check(&self) -> CheckReport {
        let mut bad = Vec::new();
        let n = self.sigs.len();
        for a in 0..n {
            for b in a + 1..n {
                let delta = delta(&self.sigs[a], &self.sigs[b]).expect("same class");
                let d = self.metric.d(a, b);
                if d != delta {
                    bad.push(self.pair(a, b, format!("distance {d}, delta {delta}")));
                }
            }
        }
        self.report("distance-formula", bad)
    }

    /// Every geodesic between every pair (up to [`GEODESIC_CAP`] per pair)
    /// uses distinct labels, and its label set is the set of ordinals where
    /// the endpoint signatures differ.
    pub fn geodesic_labels_check(&self) -> CheckReport {
        let mut bad = Vec::new();
        let n = self.sigs.len();
        let mut truncated = false;
        for a in 0..n {
            for b in a + 1..n {
                let expected = self.sigs[a].differences(&self.sigs[b]).expect("same class");
                let (paths, cut) = geodesics(&self.metric, a, b, GEODESIC_CAP);
                truncated |= cut;
                for p in paths {
                    let mut labels = self.path_labels(&p);
                    labels.sort_unstable();
                    if labels != expected {
                        bad.push(self.pair(a, b, format!("geodesic labels {labels:?}, expected {expected:?}")));
                        break;
                    }
                }
            }
        }
        let mut r = self.report("geodesic-labels", bad);
        if truncated {
            r.witnesses.push(Witness::Note {
                detail: format!("geodesic enumeration capped at {GEODESIC_CAP} per pair"),
            });
        }
        r
    }

    fn path_labels(&self, path: &[usize]) -> Vec<usize> {
        path.windows(2)
            .map(|e| self.graph.label(e[0], e[1]).expect("path follows edges"))
            .collect()
    }

    /// Semicubes of every edge are the sig-bar sets of its label, θ-classes
    /// are exactly the label classes, and all sig-bar sets are convex.
    pub fn semicube_sigbar_check(&self) -> CheckReport {
        let mut bad = Vec::new();
        let class = self.class();
        let partition = theta_classes(&self.metric);
        let mut label_of_class = vec![None; partition.class_count];
        for &(i, j, label) in self.graph.edges() {
            let s = self.metric.semicube(i, j).expect("edge");
            let near_i = class.sigbar(&class.members()[i], label).expect("ordinal");
            let near_j = class.sigbar(&class.members()[j], label).expect("ordinal");
            if s.w_uv != near_i || s.w_vu != near_j {
                bad.push(Witness::Edge {
                    a: self.literal(i),
                    b: self.literal(j),
                    label,
                    detail: "semicubes differ from sig-bar sets".into(),
                });
            }
            let k = partition.class_of_edge(i, j).expect("edge");
            match label_of_class[k] {
                None => label_of_class[k] = Some(label),
                Some(l) if l != label => bad.push(Witness::Edge {
                    a: self.literal(i),
                    b: self.literal(j),
                    label,
                    detail: format!("θ-class also holds label {l}"),
                }),
                Some(_) => {}
            }
        }
        let mut used: Vec<usize> = label_of_class.iter().flatten().copied().collect();
        used.sort_unstable();
        used.dedup();
        if used.len() != partition.class_count {
            bad.push(Witness::Note {
                detail: format!(
                    "{} θ-classes carry {} distinct labels",
                    partition.class_count,
                    used.len()
                ),
            });
        }
        for set in self.sigbar_sets() {
            if let Some((a, b, x)) = self.metric.convexity_violation(&set) {
                bad.push(Witness::Triple {
                    a: self.literal(a),
                    b: self.literal(b),
                    c: self.literal(x),
                    detail: "sig-bar set not convex: third word lies between the first two".into(),
                });
            }
        }
        self.report("semicube-sigbar", bad)
    }

    /// Distinct sig-bar sets: for each ordinal, one set per letter seen there.
    pub fn sigbar_sets(&self) -> Vec<Vec<usize>> {
        let class = self.class();
        let mut out = Vec::new();
        for (k, &c) in class.shadow_centers().iter().enumerate() {
            let _ = k;
            let mut letters: Vec<u8> = class.members().iter().map(|w| w.at(c)).collect();
            letters.sort_unstable();
            letters.dedup();
            for l in letters {
                out.push((0..class.len()).filter(|&i| class.members()[i].at(c) == l).collect());
            }
        }
        out
    }

    /// Partial cube whose isometric dimension is the class dimension, with an
    /// explicit embedding checked pair by pair.
    pub fn dim_i_check(&self) -> CheckReport {
        let mut bad = Vec::new();
        match is_partial_cube(&self.metric) {
            Err(e) => bad.push(Witness::Note { detail: e.to_string() }),
            Ok(cert) if !cert.is_partial_cube => bad.push(Witness::Note {
                detail: format!("not a partial cube: {:?}", cert.witness),
            }),
            Ok(_) => match embed_hypercube(&self.metric) {
                Err(e) => bad.push(Witness::Note { detail: e.to_string() }),
                Ok(emb) if emb.dimension != self.stats.dim => bad.push(Witness::Note {
                    detail: format!("isometric dimension {} but dimension {}", emb.dimension, self.stats.dim),
                }),
                Ok(_) => {}
            },
        }
        self.report("dimI-equals-dim", bad)
    }

    /// 4-cycles have equal opposite labels with disjoint shadows; vertices of
    /// degree at least 3 lie on a 4-cycle; trees are paths; sampled isometric
    /// cycles have equal labels on opposite edges; convex cycles have length 4.
    pub fn cycle_laws_check(&self) -> CheckReport {
        let mut bad = Vec::new();
        let g = self.graph.graph();
        let centers = self.class().shadow_centers();
        let squares = four_cycles(g);
        let mut on_square = vec![false; g.vertex_count()];
        for sq in &squares {
            let labels: Vec<usize> = (0..4)
                .map(|k| self.graph.label(sq[k], sq[(k + 1) % 4]).expect("cycle edge"))
                .collect();
            let disjoint = centers[labels[0] - 1].abs_diff(centers[labels[1] - 1]) >= 3;
            if labels[0] != labels[2] || labels[1] != labels[3] || !disjoint {
                bad.push(Witness::Cycle {
                    words: sq.iter().map(|&v| self.literal(v)).collect(),
                    labels,
                    detail: "4-cycle breaks the opposite-label or disjoint-shadow law".into(),
                });
            }
            for &v in sq {
                on_square[v] = true;
            }
        }
        for v in 0..g.vertex_count() {
            if g.degree(v) >= 3 && !on_square[v] {
                bad.push(Witness::Set {
                    words: vec![self.literal(v)],
                    detail: format!("degree {} but on no 4-cycle", g.degree(v)),
                });
            }
        }
        if g.is_tree() && !g.is_path() {
            bad.push(Witness::Note {
                detail: "braid graph is a tree but not a path".into(),
            });
        }
        let sample = isometric_cycles(&self.metric, CYCLE_CAP, 32);
        for cycle in &sample.cycles {
            let len = cycle.len();
            let labels: Vec<usize> = (0..len)
                .map(|k| self.graph.label(cycle[k], cycle[(k + 1) % len]).expect("cycle edge"))
                .collect();
            let opposite_ok = (0..len / 2).all(|k| labels[k] == labels[k + len / 2]);
            let convex = self.metric.is_convex(cycle);
            if !opposite_ok || (convex && len != 4) {
                bad.push(Witness::Cycle {
                    words: cycle.iter().map(|&v| self.literal(v)).collect(),
                    labels,
                    detail: if opposite_ok {
                        format!("convex cycle of length {len}")
                    } else {
                        "opposite edges of an isometric cycle carry different labels".into()
                    },
                });
            }
        }
        let mut r = self.report("cycle-laws", bad);
        if sample.truncated {
            r.witnesses.push(Witness::Note {
                detail: format!("isometric cycles sampled up to {CYCLE_CAP}"),
            });
        }
        r
    }

    /// `I(a, b)` equals the sig-bar set of the pair, for the given pair.
    pub fn interval_sigbar_pair(&self, a: usize, b: usize) -> Option<Witness> {
        let class = self.class();
        let m = class.members();
        let expected = class.sigbar_pair(self.system, &m[a], &m[b]).expect("members");
        let interval = self.metric.interval(a, b);
        (interval != expected).then(|| {
            self.pair(
                a,
                b,
                format!("interval has {} words, sig-bar set {}", interval.len(), expected.len()),
            )
        })
    }

    pub fn interval_sigbar_check(&self) -> CheckReport {
        let n = self.sigs.len();
        let mut bad = Vec::new();
        for a in 0..n {
            for b in a..n {
                bad.extend(self.interval_sigbar_pair(a, b));
            }
        }
        self.report("interval-sigbar", bad)
    }

    /// The member whose signature is the entry-wise majority.
    pub fn majority_median(&self, a: usize, b: usize, c: usize) -> Option<usize> {
        let maj = majority(&self.sigs[a], &self.sigs[b], &self.sigs[c]).ok()?;
        let hits: Vec<usize> = (0..self.sigs.len()).filter(|&i| self.sigs[i] == maj).collect();
        (hits.len() == 1).then(|| hits[0])
    }

    /// Majority median agrees with the interval-intersection median on all
    /// triples, or on [`MAJORITY_TRIPLES`] seeded samples when there are more.
    pub fn majority_median_check(&self, seed: u64) -> CheckReport {
        let n = self.sigs.len();
        let mut bad = Vec::new();
        for (a, b, c) in sample_triples(n, MAJORITY_TRIPLES, seed) {
            let graph_median = median_triple(&self.metric, a, b, c);
            let by_majority = self.majority_median(a, b, c);
            if graph_median.len() != 1 || by_majority != Some(graph_median[0]) {
                bad.push(Witness::Triple {
                    a: self.literal(a),
                    b: self.literal(b),
                    c: self.literal(c),
                    detail: format!(
                        "interval median {:?}, majority median {:?}",
                        graph_median.iter().map(|&x| self.literal(x)).collect::<Vec<_>>(),
                        by_majority.map(|x| self.literal(x))
                    ),
                });
            }
        }
        self.report("majority-median", bad)
    }

    /// Exhaustive median test plus the peripheral-contraction route through
    /// the link factors.
    pub fn median_graph_check(&self) -> Result<CheckReport> {
        let mut bad = Vec::new();
        match is_median_graph(&self.metric, false)? {
            MedianVerdict::Median => {}
            MedianVerdict::NotMedian { triple: (a, b, c), medians } => bad.push(Witness::Triple {
                a: self.literal(a),
                b: self.literal(b),
                c: self.literal(c),
                detail: format!("{} medians", medians.len()),
            }),
        }
        let class = self.class();
        if class.word_len() > 0 {
            let w = class.representative();
            match class.factorization(self.system, w) {
                Err(e) => bad.push(Witness::Note { detail: e.to_string() }),
                Ok(f) => {
                    for factor in &f.factors {
                        if let Err(detail) = contract_link(self.system, factor) {
                            bad.push(Witness::Note {
                                detail: format!("factor {}: {detail}", factor.literal(self.system)),
                            });
                        }
                    }
                }
            }
        }
        Ok(self.report("median-graph", bad))
    }

    /// Helly property for a family of vertex sets: pairwise intersecting sets
    /// share a common vertex. A family with a disjoint pair is reported as a
    /// precondition violation.
    pub fn helly_check(&self, family: &[Vec<usize>]) -> CheckReport {
        let n = self.sigs.len();
        let member = |s: &[usize]| {
            let mut m = vec![false; n];
            for &x in s {
                m[x] = true;
            }
            m
        };
        let masks: Vec<Vec<bool>> = family.iter().map(|s| member(s)).collect();
        for i in 0..family.len() {
            for j in i + 1..family.len() {
                if !(0..n).any(|x| masks[i][x] && masks[j][x]) {
                    let mut r = self.report("helly", Vec::new());
                    r.status = Status::PreconditionViolated;
                    r.witnesses.push(self.set(&family[i], format!("disjoint from set {j}")));
                    r.witnesses.push(self.set(&family[j], format!("disjoint from set {i}")));
                    return r;
                }
            }
        }
        let common = (0..n).any(|x| masks.iter().all(|m| m[x]));
        let bad = if common {
            Vec::new()
        } else {
            vec![Witness::Note {
                detail: format!("{} pairwise intersecting sets with empty intersection", family.len()),
            }]
        };
        self.report("helly", bad)
    }

    /// Geodesic from `a` to `b` read as the sequence of shadow ordinals of its
    /// moves, checked for distinct labels equal to the signature differences.
    pub fn minimal_sequence(&self, a: usize, b: usize) -> Result<MinimalBraidSequence> {
        let (paths, _) = geodesics(&self.metric, a, b, 1);
        let labels = self.path_labels(&paths[0]);
        let mut sorted = labels.clone();
        sorted.sort_unstable();
        let expected = self.sigs[a].differences(&self.sigs[b])?;
        if sorted != expected {
            return Err(Error::Invariant(format!(
                "geodesic from {} to {} uses {labels:?}, signatures differ at {expected:?}",
                self.literal(a),
                self.literal(b)
            )));
        }
        Ok(MinimalBraidSequence {
            source: self.graph.vertices()[a].clone(),
            target: self.graph.vertices()[b].clone(),
            ordinals: labels,
        })
    }
}

/// Ordinals of a shortest sequence of braid moves between two words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalBraidSequence {
    pub source: Word,
    pub target: Word,
    pub ordinals: Vec<usize>,
}

impl MinimalBraidSequence {
    /// Replays the moves on the source word, returning the end word.
    pub fn replay(&self, sys: &CoxeterSystem, class: &BraidClass) -> Result<Word> {
        let mut w = self.source.clone();
        for &j in &self.ordinals {
            class.check_ordinal(j)?;
            let c = class.shadow_centers()[j - 1];
            w = crate::moves::apply_move(sys, &w, crate::moves::MoveSite::braid(c - 1))?;
        }
        Ok(w)
    }
}

/// Number of entries where two signatures differ.
pub fn delta(a: &Signature, b: &Signature) -> Result<usize> {
    Ok(a.differences(b)?.len())
}

/// Entry-wise two-of-three vote: `a`'s entry if it matches `b` or `c`,
/// otherwise `b`'s.
pub fn majority(a: &Signature, b: &Signature, c: &Signature) -> Result<Signature> {
    if a.len() != b.len() {
        return Err(Error::SignatureLength(a.len(), b.len()));
    }
    if a.len() != c.len() {
        return Err(Error::SignatureLength(a.len(), c.len()));
    }
    let (a, b, c) = (a.entries(), b.entries(), c.entries());
    Ok(Signature::new(
        (0..a.len())
            .map(|i| if a[i] == b[i] || a[i] == c[i] { a[i] } else { b[i] })
            .collect(),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MedianResult {
    pub median: Word,
    pub majority: Signature,
}

/// Median of three braid-equivalent reduced words via the majority rule,
/// cross-checked against the interval intersection in the braid graph.
pub fn median_via_majority(sys: &CoxeterSystem, a: &Word, b: &Word, c: &Word, mode: Mode) -> Result<MedianResult> {
    check_hypotheses(sys, mode)?;
    let class = braid_class(sys, a)?;
    let ia = class.require_member(sys, a)?;
    let ib = class.require_member(sys, b)?;
    let ic = class.require_member(sys, c)?;
    let graph = LabeledBraidGraph::new(sys, class)?;
    let ctx = BraidContext::new(sys, &graph, mode)?;
    let maj = majority(&ctx.sigs[ia], &ctx.sigs[ib], &ctx.sigs[ic])?;
    let hits: Vec<usize> = (0..ctx.sigs.len()).filter(|&i| ctx.sigs[i] == maj).collect();
    if hits.len() != 1 {
        return Err(Error::Invariant(format!(
            "{} class members have the majority signature {maj}",
            hits.len()
        )));
    }
    let by_intervals = median_triple(&ctx.metric, ia, ib, ic);
    if by_intervals != hits {
        return Err(Error::Invariant(format!(
            "majority median {} but interval intersection {:?}",
            ctx.literal(hits[0]),
            by_intervals.iter().map(|&x| ctx.literal(x)).collect::<Vec<_>>()
        )));
    }
    Ok(MedianResult {
        median: graph.vertices()[hits[0]].clone(),
        majority: maj,
    })
}

/// `B(w)` against the box product of its factor braid graphs, through the
/// concatenation map. Labels of factor `k` are shifted by the dimensions of
/// the factors before it.
pub fn factorization_box_check(sys: &CoxeterSystem, w: &Word, mode: Mode) -> Result<CheckReport> {
    check_hypotheses(sys, mode)?;
    let class = braid_class(sys, w)?;
    let whole = LabeledBraidGraph::new(sys, class)?;
    let ctx = BraidContext::new(sys, &whole, mode)?;
    let mut bad = Vec::new();
    if w.is_empty() {
        return Ok(ctx.report("factorization-box", bad));
    }
    let fact = whole.class().factorization(sys, w)?;
    let parts: Vec<LabeledBraidGraph> = fact
        .factors
        .iter()
        .map(|f| LabeledBraidGraph::new(sys, BraidClass::of_reduced(sys, f)?))
        .collect::<Result<_>>()?;

    let mut product = Graph::new(1);
    for p in &parts {
        product = box_product(&product, p.graph());
    }
    let sizes: Vec<usize> = parts.iter().map(|p| p.vertices().len()).collect();
    let offsets: Vec<usize> = parts
        .iter()
        .scan(0, |acc, p| {
            let o = *acc;
            *acc += p.class().dimension();
            Some(o)
        })
        .collect();
    let digits = |mut x: usize| -> Vec<usize> {
        let mut d = vec![0; sizes.len()];
        for k in (0..sizes.len()).rev() {
            d[k] = x % sizes[k];
            x /= sizes[k];
        }
        d
    };

    let mut image = vec![usize::MAX; product.vertex_count()];
    let mut hit = vec![false; whole.vertices().len()];
    for (x, slot) in image.iter_mut().enumerate() {
        let d = digits(x);
        let pieces: Vec<&Word> = d.iter().zip(&parts).map(|(&i, p)| &p.vertices()[i]).collect();
        let cat = Word::concat(&pieces);
        match whole.class().index_of(&cat) {
            Some(i) if !hit[i] => {
                hit[i] = true;
                *slot = i;
            }
            _ => bad.push(Witness::Set {
                words: vec![cat.literal(sys)],
                detail: "concatenation missing from the class or hit twice".into(),
            }),
        }
    }
    if product.vertex_count() != whole.vertices().len() {
        bad.push(Witness::Note {
            detail: format!(
                "product has {} vertices, braid graph {}",
                product.vertex_count(),
                whole.vertices().len()
            ),
        });
    }
    if bad.is_empty() {
        for (x, y) in product.edges() {
            let (dx, dy) = (digits(x), digits(y));
            let k = (0..sizes.len()).find(|&k| dx[k] != dy[k]).expect("edge changes a coordinate");
            let expected = offsets[k] + parts[k].label(dx[k], dy[k]).expect("factor edge");
            if whole.label(image[x], image[y]) != Some(expected) {
                bad.push(Witness::Edge {
                    a: ctx.literal(image[x]),
                    b: ctx.literal(image[y]),
                    label: expected,
                    detail: format!("braid graph label {:?}", whole.label(image[x], image[y])),
                });
            }
        }
        if product.edge_count() != whole.edges().len() {
            bad.push(Witness::Note {
                detail: format!(
                    "product has {} edges, braid graph {}",
                    product.edge_count(),
                    whole.edges().len()
                ),
            });
        }
    }
    let mut r = ctx.report("factorization-box", bad);
    r.word = w.literal(sys);
    Ok(r)
}

fn has_shadow_at(sys: &CoxeterSystem, w: &Word, center: usize) -> bool {
    center >= 2 && center < w.len() && w.at(center - 1) == w.at(center + 1) && sys.is_bond3(w.at(center - 1), w.at(center))
}

/// Shrinks a link's braid graph to a single vertex by undoing peripheral
/// expansions. At dimension `r` a member with shadows at the two top
/// centers splits the class by its top signature entry; the far half must
/// be a matched copy of a convex part of the near half, and the near half
/// must be the braid graph of the word with its last two letters dropped.
/// Returns the number of contractions.
pub fn contract_link(sys: &CoxeterSystem, link: &Word) -> std::result::Result<usize, String> {
    let mut current = link.clone();
    let mut steps = 0;
    loop {
        let class = BraidClass::of_reduced(sys, &current).map_err(|e| e.to_string())?;
        if !class.is_link().map_err(|e| e.to_string())? {
            return Err(format!("{} is not a link", current.literal(sys)));
        }
        let r = class.dimension();
        if r == 0 {
            return Ok(steps);
        }
        let top = 2 * r;
        let sigma = class
            .members()
            .iter()
            .find(|x| has_shadow_at(sys, x, top) && (r == 1 || has_shadow_at(sys, x, top - 2)))
            .ok_or_else(|| format!("no member of [{}] shows shadows at {} and {top}", current.literal(sys), top - 2))?
            .clone();
        let tau = crate::moves::apply_move(sys, &sigma, crate::moves::MoveSite::braid(top - 1))
            .map_err(|e| e.to_string())?;
        let near = class.sigbar(&sigma, r).map_err(|e| e.to_string())?;
        let far = class.sigbar(&tau, r).map_err(|e| e.to_string())?;
        if near.len() + far.len() != class.len() || near.iter().any(|x| far.contains(x)) {
            return Err("top sig-bar sets do not partition the class".into());
        }
        let bg = LabeledBraidGraph::new(sys, class.clone()).map_err(|e| e.to_string())?;
        let g = bg.graph();
        let mut in_far = vec![false; class.len()];
        for &y in &far {
            in_far[y] = true;
        }
        // the far half must be matched to its boundary in the near half
        let mut partner = vec![usize::MAX; class.len()];
        for &y in &far {
            let across: Vec<usize> = g.neighbors(y).iter().copied().filter(|&x| !in_far[x]).collect();
            if across.len() != 1 {
                return Err(format!("{} has {} neighbours across the split", bg.vertices()[y].literal(sys), across.len()));
            }
            if partner[across[0]] != usize::MAX {
                return Err("split edges do not form a matching".into());
            }
            partner[across[0]] = y;
            partner[y] = across[0];
        }
        let boundary: Vec<usize> = near.iter().copied().filter(|&x| partner[x] != usize::MAX).collect();
        for &u in &boundary {
            for &v in &boundary {
                if g.has_edge(u, v) != g.has_edge(partner[u], partner[v]) {
                    return Err("matching is not an isomorphism of the two boundaries".into());
                }
            }
        }
        let near_graph = g.induced_subgraph(&near);
        let local: Vec<usize> = boundary
            .iter()
            .map(|u| near.binary_search(u).expect("boundary lies in near half"))
            .collect();
        let m = Metric::new(&near_graph).map_err(|e| e.to_string())?;
        if !m.is_convex(&local) {
            return Err("boundary is not convex in the near half".into());
        }

        let len = current.len();
        let hat = sigma.factor(1, len - 2).map_err(|e| e.to_string())?;
        let hat_class = BraidClass::of_reduced(sys, &hat).map_err(|e| e.to_string())?;
        if hat_class.len() != near.len() {
            return Err(format!("near half has {} words, [{}] has {}", near.len(), hat.literal(sys), hat_class.len()));
        }
        let tail = sigma.factor(len - 1, len).map_err(|e| e.to_string())?;
        let mut to_hat = Vec::with_capacity(near.len());
        for &x in &near {
            let w = &class.members()[x];
            if w.factor(len - 1, len).map_err(|e| e.to_string())? != tail {
                return Err(format!("{} does not end like {}", w.literal(sys), sigma.literal(sys)));
            }
            let h = w.factor(1, len - 2).map_err(|e| e.to_string())?;
            to_hat.push(hat_class.index_of(&h).ok_or_else(|| format!("{} is not in [{}]", h.literal(sys), hat.literal(sys)))?);
        }
        let hat_graph = LabeledBraidGraph::new(sys, hat_class).map_err(|e| e.to_string())?;
        for a in 0..near.len() {
            for b in a + 1..near.len() {
                if near_graph.has_edge(a, b) != hat_graph.graph().has_edge(to_hat[a], to_hat[b]) {
                    return Err("near half is not the braid graph of the shortened word".into());
                }
            }
        }
        current = hat;
        steps += 1;
    }
}

/// Up to `cap` distinct-vertex triples: all of them when few enough,
/// otherwise a seeded sample.
pub fn sample_triples(n: usize, cap: usize, seed: u64) -> Vec<(usize, usize, usize)> {
    let total = if n < 3 { 0 } else { n * (n - 1) * (n - 2) / 6 };
    let mut out = Vec::new();
    if total <= cap {
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    out.push((a, b, c));
                }
            }
        }
        if n >= 1 && out.is_empty() {
            // single vertex or edge: degenerate triples still have a median
            out.push((0, n - 1, n - 1));
        }
        return out;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..cap {
        let v = sample(&mut rng, n, 3).into_vec();
        let mut t = [v[0], v[1], v[2]];
        t.sort_unstable();
        out.push((t[0], t[1], t[2]));
    }
    out
}

/// Stable 64-bit hash of a word, for deriving seeds.
pub fn word_seed(w: &Word, salt: u64) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325 ^ salt;
    for &l in w.letters() {
        h ^= l as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

/// All checks of this module on one braid class.
pub fn property_suite(sys: &CoxeterSystem, class: BraidClass, mode: Mode, seed: u64) -> Result<Vec<CheckReport>> {
    let rep = class.representative().clone();
    let graph = LabeledBraidGraph::new(sys, class)?;
    let ctx = BraidContext::new(sys, &graph, mode)?;
    let mut out = vec![
        ctx.structure_check(),
        ctx.distance_formula_check(),
        ctx.geodesic_labels_check(),
        ctx.semicube_sigbar_check(),
        ctx.dim_i_check(),
        ctx.cycle_laws_check(),
        ctx.interval_sigbar_check(),
        ctx.majority_median_check(word_seed(&rep, seed)),
        ctx.median_graph_check()?,
    ];
    if !rep.is_empty() {
        out.push(factorization_box_check(sys, &rep, mode)?);
    }
    Ok(out)
}

pub fn verify_distance_formula(sys: &CoxeterSystem, g: &LabeledBraidGraph, mode: Mode) -> Result<CheckReport> {
    Ok(BraidContext::new(sys, g, mode)?.distance_formula_check())
}

pub fn semicube_sigbar_check(sys: &CoxeterSystem, g: &LabeledBraidGraph, mode: Mode) -> Result<CheckReport> {
    Ok(BraidContext::new(sys, g, mode)?.semicube_sigbar_check())
}

pub fn verify_dim_i_equals_dim(sys: &CoxeterSystem, w: &Word, mode: Mode) -> Result<CheckReport> {
    let g = crate::braid::braid_graph(sys, w)?;
    Ok(BraidContext::new(sys, &g, mode)?.dim_i_check())
}

pub fn cycle_laws_check(sys: &CoxeterSystem, g: &LabeledBraidGraph, mode: Mode) -> Result<CheckReport> {
    Ok(BraidContext::new(sys, g, mode)?.cycle_laws_check())
}

pub fn interval_sigbar_check(sys: &CoxeterSystem, g: &LabeledBraidGraph, a: &Word, b: &Word, mode: Mode) -> Result<CheckReport> {
    let ctx = BraidContext::new(sys, g, mode)?;
    let ia = g.class().require_member(sys, a)?;
    let ib = g.class().require_member(sys, b)?;
    let bad = ctx.interval_sigbar_pair(ia, ib).into_iter().collect();
    let mut r = ctx.report("interval-sigbar", bad);
    r.word = a.literal(sys);
    Ok(r)
}

pub fn minimal_sequence(sys: &CoxeterSystem, g: &LabeledBraidGraph, a: &Word, b: &Word, mode: Mode) -> Result<MinimalBraidSequence> {
    let ctx = BraidContext::new(sys, g, mode)?;
    let ia = g.class().require_member(sys, a)?;
    let ib = g.class().require_member(sys, b)?;
    ctx.minimal_sequence(ia, ib)
}

pub fn median_graph_check(sys: &CoxeterSystem, w: &Word, mode: Mode) -> Result<CheckReport> {
    let g = crate::braid::braid_graph(sys, w)?;
    BraidContext::new(sys, &g, mode)?.median_graph_check()
}

/// Helly check over sig-bar sets named by `(member, ordinal)` pairs.
pub fn helly_check(sys: &CoxeterSystem, g: &LabeledBraidGraph, family: &[(Word, usize)], mode: Mode) -> Result<CheckReport> {
    let ctx = BraidContext::new(sys, g, mode)?;
    let sets: Vec<Vec<usize>> = family
        .iter()
        .map(|(w, i)| {
            g.class().require_member(sys, w)?;
            g.class().sigbar(w, *i)
        })
        .collect::<Result<_>>()?;
    Ok(ctx.helly_check(&sets))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::braid_graph;
    use crate::system::Family;

    fn d4() -> CoxeterSystem {
        CoxeterSystem::named(Family::D, 4).unwrap()
    }

    fn w(s: &str, sys: &CoxeterSystem) -> Word {
        Word::parse(s, sys).unwrap()
    }

    #[test]
    fn delta_and_majority() {
        let a = Signature::new(vec![4, 1, 2, 4]);
        let b = Signature::new(vec![3, 1, 2, 3]);
        assert_eq!(delta(&a, &a).unwrap(), 0);
        assert_eq!(delta(&a, &b).unwrap(), 2);
        assert!(delta(&a, &Signature::new(vec![1])).is_err());
        assert_eq!(majority(&a, &a, &b).unwrap(), a);
        assert_eq!(majority(&b, &a, &a).unwrap(), a);
    }

    #[test]
    fn suite_on_lollipop() {
        let sys = d4();
        let class = braid_class(&sys, &w("4341232", &sys)).unwrap();
        for r in property_suite(&sys, class, Mode::Enforce, 7).unwrap() {
            assert_eq!(r.status, Status::Pass, "{}", r.to_json());
            assert_eq!(r.stats.dim_i, Some(3));
        }
    }

    #[test]
    fn suite_on_single_vertex() {
        let a1 = CoxeterSystem::named(Family::A, 1).unwrap();
        for word in ["1", "e"] {
            let class = braid_class(&a1, &w(word, &a1)).unwrap();
            for r in property_suite(&a1, class, Mode::Enforce, 7).unwrap() {
                assert_eq!(r.status, Status::Pass, "{}", r.to_json());
                assert_eq!(r.stats.dim_i, Some(0));
            }
        }
    }

    #[test]
    fn median_of_identical_words() {
        let sys = d4();
        let x = w("4341232", &sys);
        let m = median_via_majority(&sys, &x, &x, &x, Mode::Enforce).unwrap();
        assert_eq!(m.median, x);
        let y = w("3413123", &sys);
        assert_eq!(median_via_majority(&sys, &x, &x, &y, Mode::Enforce).unwrap().median, x);
    }

    #[test]
    fn median_refuses_other_elements() {
        let sys = d4();
        let err = median_via_majority(&sys, &w("4341232", &sys), &w("4341232", &sys), &w("343132343", &sys), Mode::Enforce);
        assert!(matches!(err, Err(Error::NotBraidEquivalent(_))));
    }

    #[test]
    fn triangle_systems_refuse() {
        let aff = CoxeterSystem::named(Family::AffineA, 2).unwrap();
        let g = braid_graph(&aff, &w("1213121", &aff)).unwrap();
        assert!(matches!(
            BraidContext::new(&aff, &g, Mode::Enforce),
            Err(Error::Hypothesis(_))
        ));
        let ctx = BraidContext::new(&aff, &g, Mode::Explore).unwrap();
        let r = ctx.median_graph_check().unwrap();
        assert!(matches!(r.status, Status::ObservedPass | Status::ObservedFail));
    }

    #[test]
    fn helly_precondition() {
        let sys = d4();
        let g = braid_graph(&sys, &w("343132343", &sys)).unwrap();
        let g1 = w("343132343", &sys);
        let g8 = w("434132434", &sys);
        // same ordinal, different letters: disjoint halves
        let r = helly_check(&sys, &g, &[(g1.clone(), 4), (g8.clone(), 4)], Mode::Enforce).unwrap();
        assert_eq!(r.status, Status::PreconditionViolated);
        let all: Vec<(Word, usize)> = (1..=4).map(|i| (g1.clone(), i)).collect();
        let r = helly_check(&sys, &g, &all, Mode::Enforce).unwrap();
        assert_eq!(r.status, Status::Pass);
    }

    #[test]
    fn contraction_counts_dimension() {
        let sys = d4();
        assert_eq!(contract_link(&sys, &w("4341232", &sys)), Ok(3));
        assert_eq!(contract_link(&sys, &w("343132343", &sys)), Ok(4));
        assert_eq!(contract_link(&sys, &w("1", &sys)), Ok(0));
    }

    #[test]
    fn triple_sampling() {
        assert_eq!(sample_triples(4, 100, 1).len(), 4);
        let s = sample_triples(40, 100, 1);
        assert_eq!(s.len(), 100);
        assert!(s.iter().all(|&(a, b, c)| a < b && b < c && c < 40));
        assert_eq!(s, sample_triples(40, 100, 1));
        assert_eq!(sample_triples(1, 100, 1), vec![(0, 0, 0)]);
    }
}
