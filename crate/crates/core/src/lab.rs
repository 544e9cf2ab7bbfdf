//! Instance generation and sweeps over braid classes.
//!
//! Instances are braid-class representatives (least member). Each sweep
//! first re-runs theorem-backed checks as a sanity layer; a failure there is
//! an implementation bug and is reported apart from conjecture
//! counterexamples.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use coxbraid_graph::{embed_hypercube, Metric};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid::{BraidClass, LabeledBraidGraph};
use crate::bridge::{check_hypotheses, property_suite, word_seed, BraidContext, Mode, Status};
use crate::error::{Error, Result};
use crate::moves::{closure_sorted, explore, tits_closure, MoveSet};
use crate::system::CoxeterSystem;
use crate::word::Word;

pub const SIGBAR_TRIPLE_CAP: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "kebab-case", rename_all_fields = "camelCase")]
pub enum Generation {
    /// Every braid class of reduced words of length at most `max_len`.
    Exhaustive { max_len: usize },
    /// `count` random reduced words of length `len`, grown letter by letter.
    Random { seed: u64, count: usize, len: usize },
    /// Exhaustive, keeping links only.
    LinksOnly { max_len: usize },
}

#[derive(Clone, Debug)]
pub struct InstanceSpec {
    pub system: CoxeterSystem,
    pub generation: Generation,
    pub min_dim: usize,
    pub link_only: bool,
}

impl InstanceSpec {
    pub fn exhaustive(system: CoxeterSystem, max_len: usize) -> Self {
        InstanceSpec {
            system,
            generation: Generation::Exhaustive { max_len },
            min_dim: 0,
            link_only: false,
        }
    }
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Seed for the `index`th item under a master seed.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    splitmix(master ^ splitmix(index))
}

/// Least member of each braid class inside one sorted set of reduced
/// expressions.
fn braid_representatives(sys: &CoxeterSystem, expressions: &[Word]) -> Result<Vec<Word>> {
    let mut done: HashSet<Word> = HashSet::new();
    let mut reps = Vec::new();
    for w in expressions {
        if done.contains(w) {
            continue;
        }
        let class = explore(sys, w, MoveSet::BRAID, |_| false)?;
        done.extend(class.words);
        reps.push(w.clone());
    }
    Ok(reps)
}

/// Braid-class representatives of all reduced words of length at most
/// `max_len`, by length then lexicographically.
///
/// Walks the group level by level: an element is held as its full set of
/// reduced expressions, its right descents are their last letters, and the
/// next level is reached by appending non-descents.
pub fn exhaustive_representatives(sys: &CoxeterSystem, max_len: usize) -> Result<Vec<Word>> {
    let budget = sys.rules().node_budget;
    let mut out = vec![Word::empty()];
    let mut level: Vec<Vec<Word>> = vec![vec![Word::empty()]];
    for _ in 1..=max_len {
        let mut seen: HashSet<Word> = HashSet::new();
        let mut next: Vec<Vec<Word>> = Vec::new();
        for expressions in &level {
            let descents: BTreeSet<u8> = expressions.iter().filter_map(|w| w.letters().last().copied()).collect();
            for s in 1..=sys.n() as u8 {
                if descents.contains(&s) {
                    continue;
                }
                let mut cand = expressions[0].clone();
                cand.push(s);
                if seen.contains(&cand) {
                    continue;
                }
                let members = tits_closure(sys, &cand)?;
                if seen.len() + members.len() > budget {
                    return Err(Error::Budget { budget });
                }
                seen.extend(members.iter().cloned());
                next.push(members);
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort();
        let mut reps = Vec::new();
        for expressions in &next {
            reps.extend(braid_representatives(sys, expressions)?);
        }
        reps.sort();
        out.extend(reps);
        level = next;
    }
    Ok(out)
}

/// Grows a reduced word of length `len` (or until no letter extends it),
/// choosing uniformly among letters that are not right descents.
pub fn random_reduced_word(sys: &CoxeterSystem, len: usize, rng: &mut impl Rng) -> Result<Word> {
    let mut w = Word::empty();
    while w.len() < len {
        let descents: BTreeSet<u8> = closure_sorted(sys, &w, MoveSet::ALL)?
            .iter()
            .filter_map(|x| x.letters().last().copied())
            .collect();
        let choices: Vec<u8> = (1..=sys.n() as u8).filter(|s| !descents.contains(s)).collect();
        if choices.is_empty() {
            break;
        }
        w.push(choices[rng.gen_range(0..choices.len())]);
    }
    Ok(w)
}

/// Instances of a spec, one representative per braid class, filtered.
pub fn generate_instances(spec: &InstanceSpec) -> Result<Vec<Word>> {
    let sys = &spec.system;
    let (candidates, link_only) = match spec.generation {
        Generation::Exhaustive { max_len } => (exhaustive_representatives(sys, max_len)?, spec.link_only),
        Generation::LinksOnly { max_len } => (exhaustive_representatives(sys, max_len)?, true),
        Generation::Random { seed, count, len } => {
            let words = (0..count as u64)
                .into_par_iter()
                .map(|i| {
                    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, i));
                    let w = random_reduced_word(sys, len, &mut rng)?;
                    Ok(BraidClass::of_reduced(sys, &w)?.representative().clone())
                })
                .collect::<Result<Vec<Word>>>()?;
            let unique: BTreeSet<Word> = words.into_iter().collect();
            let mut v: Vec<Word> = unique.into_iter().collect();
            v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
            (v, spec.link_only)
        }
    };
    if spec.min_dim == 0 && !link_only {
        return Ok(candidates);
    }
    let keep = candidates
        .into_par_iter()
        .map(|w| {
            if w.is_empty() {
                return Ok((!link_only && spec.min_dim == 0).then_some(w));
            }
            let class = BraidClass::of_reduced(sys, &w)?;
            let ok = class.dimension() >= spec.min_dim && (!link_only || class.is_link()?);
            Ok(ok.then_some(w))
        })
        .collect::<Result<Vec<Option<Word>>>>()?;
    Ok(keep.into_iter().flatten().collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckName {
    DiamEqDim,
    GeodeticNumberTwo,
    UniqueDiametricalPair,
    SigbarTriples,
    /// Every median-bridge check, as theorem verification.
    PropertySuite,
}

impl CheckName {
    pub const CONJECTURES: [CheckName; 4] = [
        CheckName::DiamEqDim,
        CheckName::GeodeticNumberTwo,
        CheckName::UniqueDiametricalPair,
        CheckName::SigbarTriples,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckName::DiamEqDim => "diam-eq-dim",
            CheckName::GeodeticNumberTwo => "geodetic-number-two",
            CheckName::UniqueDiametricalPair => "unique-diametrical-pair",
            CheckName::SigbarTriples => "sigbar-triples",
            CheckName::PropertySuite => "property-suite",
        }
    }

    pub fn parse(s: &str) -> Result<CheckName> {
        [
            CheckName::DiamEqDim,
            CheckName::GeodeticNumberTwo,
            CheckName::UniqueDiametricalPair,
            CheckName::SigbarTriples,
            CheckName::PropertySuite,
        ]
        .into_iter()
        .find(|c| c.name() == s)
        .ok_or_else(|| Error::Config(format!("unknown check {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Counterexample,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub check: CheckName,
    pub verdict: Verdict,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceResult {
    pub word: String,
    pub vertices: usize,
    pub edges: usize,
    pub dim: usize,
    pub diam: usize,
    pub link: bool,
    pub outcomes: Vec<CheckOutcome>,
}

/// A conjecture failure with what is needed to reproduce it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub system: String,
    pub word: String,
    pub check: CheckName,
    pub detail: String,
    pub witnesses: Vec<Vec<String>>,
}

/// A theorem-backed property that failed: an implementation bug.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub system: String,
    pub word: String,
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub holds: usize,
    pub counterexamples: usize,
    pub not_applicable: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Caps {
    pub sigbar_triples: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            sigbar_triples: SIGBAR_TRIPLE_CAP,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepReport {
    pub system: String,
    pub generation: Generation,
    pub checks: Vec<CheckName>,
    pub caps: Caps,
    pub explore: bool,
    pub instances: Vec<InstanceResult>,
    pub counts: BTreeMap<String, Tally>,
    pub counterexamples: Vec<Counterexample>,
    pub violations: Vec<Violation>,
}

impl SweepReport {
    /// 0 when clean, 2 with counterexamples, 3 with invariant violations.
    pub fn exit_code(&self) -> i32 {
        if !self.violations.is_empty() {
            3
        } else if !self.counterexamples.is_empty() {
            2
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One row per instance and check.
    pub fn rows(&self) -> Vec<SweepRow> {
        let mut rows = Vec::new();
        for inst in &self.instances {
            for o in &inst.outcomes {
                rows.push(SweepRow {
                    system: self.system.clone(),
                    word: inst.word.clone(),
                    vertices: inst.vertices,
                    edges: inst.edges,
                    dim: inst.dim,
                    diam: inst.diam,
                    link: inst.link,
                    check: o.check.name().into(),
                    verdict: o.verdict,
                    detail: o.detail.clone(),
                });
            }
        }
        rows
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepRow {
    pub system: String,
    pub word: String,
    pub vertices: usize,
    pub edges: usize,
    pub dim: usize,
    pub diam: usize,
    pub link: bool,
    pub check: String,
    pub verdict: Verdict,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub spec: InstanceSpec,
    pub checks: Vec<CheckName>,
    pub caps: Caps,
    pub mode: Mode,
    /// Master seed for sampling inside checks.
    pub seed: u64,
}

/// The on-disk sweep configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct SweepFile {
    pub system: String,
    pub mode: String,
    #[serde(rename = "L", alias = "maxLength")]
    pub max_len: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub count: usize,
    #[serde(default)]
    pub checks: Vec<String>,
    #[serde(default)]
    pub caps: Option<FileCaps>,
    #[serde(default)]
    pub min_dim: usize,
    #[serde(default)]
    pub link_only: bool,
    #[serde(default)]
    pub explore: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct FileCaps {
    #[serde(default)]
    pub sigbar_triples: Option<usize>,
    #[serde(default)]
    pub node_budget: Option<usize>,
}

impl SweepFile {
    pub fn from_json(text: &str) -> Result<SweepFile> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    /// Resolves the file into a runnable configuration. An empty check list
    /// means all conjecture checks.
    pub fn into_config(self) -> Result<SweepConfig> {
        let mut system = CoxeterSystem::resolve(&self.system)?;
        let caps = self.caps.clone().unwrap_or(FileCaps {
            sigbar_triples: None,
            node_budget: None,
        });
        if let Some(b) = caps.node_budget {
            system = system.with_budget(b);
        }
        let generation = match self.mode.as_str() {
            "exhaustive" => Generation::Exhaustive { max_len: self.max_len },
            "links" | "links-only" => Generation::LinksOnly { max_len: self.max_len },
            "random" => Generation::Random {
                seed: self.seed,
                count: self.count,
                len: self.max_len,
            },
            other => return Err(Error::Config(format!("unknown mode {other:?}"))),
        };
        let checks = if self.checks.is_empty() {
            CheckName::CONJECTURES.to_vec()
        } else {
            self.checks.iter().map(|c| CheckName::parse(c)).collect::<Result<_>>()?
        };
        Ok(SweepConfig {
            spec: InstanceSpec {
                system,
                generation,
                min_dim: self.min_dim,
                link_only: self.link_only,
            },
            checks,
            caps: Caps {
                sigbar_triples: caps.sigbar_triples.unwrap_or(SIGBAR_TRIPLE_CAP),
            },
            mode: if self.explore { Mode::Explore } else { Mode::Enforce },
            seed: self.seed,
        })
    }
}

struct Evaluated {
    result: InstanceResult,
    violations: Vec<Violation>,
}

fn outcome(check: CheckName, holds: bool, detail: String, witnesses: Vec<Vec<String>>) -> CheckOutcome {
    CheckOutcome {
        check,
        verdict: if holds { Verdict::Holds } else { Verdict::Counterexample },
        detail,
        witnesses: if holds { Vec::new() } else { witnesses },
    }
}

fn not_applicable(check: CheckName, detail: &str) -> CheckOutcome {
    CheckOutcome {
        check,
        verdict: Verdict::NotApplicable,
        detail: detail.into(),
        witnesses: Vec::new(),
    }
}

/// Pairs `{a, b}` whose interval is the whole vertex set.
pub fn covering_pairs(m: &Metric) -> Vec<(usize, usize)> {
    let n = m.vertex_count();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let dab = m.d(a, b);
            if (0..n).all(|x| m.d(a, x) + m.d(x, b) == dab) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Smallest `k` such that some `k`-set's geodetic closure is everything,
/// searching up to `max_k`.
pub fn geodetic_number(m: &Metric, max_k: usize) -> Option<usize> {
    let n = m.vertex_count();
    if n <= 1 {
        return Some(n);
    }
    if !covering_pairs(m).is_empty() {
        return Some(2);
    }
    fn covers(m: &Metric, set: &[usize]) -> bool {
        (0..m.vertex_count()).all(|x| {
            set.iter().enumerate().any(|(i, &a)| {
                set[i + 1..].iter().any(|&b| m.d(a, x) + m.d(x, b) == m.d(a, b))
            })
        })
    }
    fn search(m: &Metric, set: &mut Vec<usize>, from: usize, k: usize) -> bool {
        if set.len() == k {
            return covers(m, set);
        }
        for v in from..m.vertex_count() {
            set.push(v);
            if search(m, set, v + 1, k) {
                return true;
            }
            set.pop();
        }
        false
    }
    (3..=max_k.min(n)).find(|&k| search(m, &mut Vec::new(), 0, k))
}

fn evaluate(cfg: &SweepConfig, w: &Word) -> Result<Evaluated> {
    let sys = &cfg.spec.system;
    let class = BraidClass::of_reduced(sys, w)?;
    let link = !w.is_empty() && class.is_link()?;
    let graph = LabeledBraidGraph::new(sys, class.clone())?;
    let ctx = BraidContext::new(sys, &graph, cfg.mode)?;
    let literal = w.literal(sys);
    let observing = cfg.mode == Mode::Explore && !sys.is_triangle_free();
    let mut violations = Vec::new();

    let mut sanity = vec![ctx.distance_formula_check(), ctx.dim_i_check(), ctx.median_graph_check()?];
    if cfg.checks.contains(&CheckName::PropertySuite) {
        sanity = property_suite(sys, class.clone(), cfg.mode, cfg.seed)?;
    }
    for r in sanity {
        if r.status == Status::Fail && !observing {
            violations.push(Violation {
                system: sys.spec_text(),
                word: literal.clone(),
                check: r.check.clone(),
                detail: serde_json::to_string(&r.witnesses).expect("witnesses serialize"),
            });
        }
    }

    let stats = ctx.stats().clone();
    let m = &ctx.metric;
    let mut outcomes = Vec::new();
    for &check in &cfg.checks {
        let o = match check {
            CheckName::PropertySuite => continue,
            CheckName::DiamEqDim => outcome(
                check,
                stats.diam == stats.dim,
                format!("diam {} dim {}", stats.diam, stats.dim),
                vec![],
            ),
            CheckName::GeodeticNumberTwo => {
                if stats.vertices == 1 {
                    not_applicable(check, "single vertex: geodetic number 1")
                } else {
                    let pairs = covering_pairs(m);
                    let number = if pairs.is_empty() { geodetic_number(m, 4) } else { Some(2) };
                    let unique_ok = !link || pairs.len() == 1;
                    let pair_words: Vec<Vec<String>> =
                        pairs.iter().map(|&(a, b)| vec![ctx.literal(a), ctx.literal(b)]).collect();
                    outcome(
                        check,
                        number == Some(2) && unique_ok,
                        format!(
                            "geodetic number {}, {} covering pairs{}",
                            number.map_or(">4".to_string(), |k| k.to_string()),
                            pairs.len(),
                            if link { " (link)" } else { "" }
                        ),
                        pair_words,
                    )
                }
            }
            CheckName::UniqueDiametricalPair => {
                if !link || stats.dim == 0 {
                    not_applicable(check, "not a link of dimension at least one")
                } else {
                    let pairs = m.diametral_pairs();
                    outcome(
                        check,
                        pairs.len() == 1,
                        format!("{} diametrical pairs at distance {}", pairs.len(), stats.diam),
                        pairs.iter().map(|&(a, b)| vec![ctx.literal(a), ctx.literal(b)]).collect(),
                    )
                }
            }
            CheckName::SigbarTriples => {
                if stats.dim == 0 {
                    not_applicable(check, "dimension 0")
                } else {
                    sigbar_triples(&ctx, cfg.caps.sigbar_triples, word_seed(w, cfg.seed))
                }
            }
        };
        outcomes.push(o);
    }
    Ok(Evaluated {
        result: InstanceResult {
            word: literal,
            vertices: stats.vertices,
            edges: stats.edges,
            dim: stats.dim,
            diam: stats.diam,
            link,
            outcomes,
        },
        violations,
    })
}

fn sigbar_triples(ctx: &BraidContext, cap: usize, seed: u64) -> CheckOutcome {
    let check = CheckName::SigbarTriples;
    let mut sets = ctx.sigbar_sets();
    sets.sort();
    sets.dedup();
    let k = sets.len();
    let meets = |a: &[usize], b: &[usize]| a.iter().any(|x| b.binary_search(x).is_ok());
    let disjoint = |t: [usize; 3]| {
        !meets(&sets[t[0]], &sets[t[1]]) && !meets(&sets[t[0]], &sets[t[2]]) && !meets(&sets[t[1]], &sets[t[2]])
    };
    let total = if k < 3 { 0 } else { k * (k - 1) * (k - 2) / 6 };
    let mut triples = Vec::new();
    let sampled = total > cap;
    if sampled {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..cap {
            let v = sample(&mut rng, k, 3).into_vec();
            triples.push([v[0], v[1], v[2]]);
        }
    } else {
        for a in 0..k {
            for b in a + 1..k {
                for c in b + 1..k {
                    triples.push([a, b, c]);
                }
            }
        }
    }
    let bad = triples.iter().copied().find(|&t| disjoint(t));
    let detail = format!(
        "{} distinct sig-bar sets, {} triples{}",
        k,
        triples.len(),
        if sampled { format!(" sampled of {total}") } else { String::new() }
    );
    let witnesses = bad
        .map(|t| {
            t.iter()
                .map(|&i| sets[i].iter().map(|&v| ctx.literal(v)).collect::<Vec<_>>().join(" "))
                .collect()
        })
        .into_iter()
        .collect();
    outcome(check, bad.is_none(), detail, witnesses)
}

/// Runs the configured checks over every instance in parallel. The report
/// depends only on the configuration.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    check_hypotheses(&cfg.spec.system, cfg.mode)?;
    let instances = generate_instances(&cfg.spec)?;
    let evaluated = instances
        .par_iter()
        .map(|w| evaluate(cfg, w))
        .collect::<Vec<Result<Evaluated>>>();
    let sys = &cfg.spec.system;
    let mut report = SweepReport {
        system: sys.label(),
        generation: cfg.spec.generation,
        checks: cfg.checks.clone(),
        caps: cfg.caps,
        explore: cfg.mode == Mode::Explore,
        instances: Vec::with_capacity(evaluated.len()),
        counts: BTreeMap::new(),
        counterexamples: Vec::new(),
        violations: Vec::new(),
    };
    for e in evaluated {
        let e = e?;
        for o in &e.result.outcomes {
            let t = report.counts.entry(o.check.name().to_string()).or_default();
            match o.verdict {
                Verdict::Holds => t.holds += 1,
                Verdict::NotApplicable => t.not_applicable += 1,
                Verdict::Counterexample => {
                    t.counterexamples += 1;
                    report.counterexamples.push(Counterexample {
                        system: sys.spec_text(),
                        word: e.result.word.clone(),
                        check: o.check,
                        detail: o.detail.clone(),
                        witnesses: o.witnesses.clone(),
                    });
                }
            }
        }
        report.violations.extend(e.violations);
        report.instances.push(e.result);
    }
    Ok(report)
}

pub fn check_diam_eq_dim(spec: &InstanceSpec) -> Result<SweepReport> {
    run_sweep(&single(spec, CheckName::DiamEqDim))
}

pub fn check_geodetic_number_two(spec: &InstanceSpec) -> Result<SweepReport> {
    run_sweep(&single(spec, CheckName::GeodeticNumberTwo))
}

pub fn check_unique_diametrical_pair(spec: &InstanceSpec) -> Result<SweepReport> {
    run_sweep(&single(spec, CheckName::UniqueDiametricalPair))
}

pub fn check_sigbar_triples(spec: &InstanceSpec) -> Result<SweepReport> {
    run_sweep(&single(spec, CheckName::SigbarTriples))
}

fn single(spec: &InstanceSpec, check: CheckName) -> SweepConfig {
    SweepConfig {
        spec: spec.clone(),
        checks: vec![check],
        caps: Caps::default(),
        mode: Mode::Enforce,
        seed: 0,
    }
}

/// What a single commutation move does to a member of a link's class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CommutationRow {
    pub link: String,
    pub link_dim: usize,
    pub link_class_size: usize,
    pub member: String,
    pub position: usize,
    pub result: String,
    pub result_representative: String,
    pub result_is_link: bool,
    pub result_dim: usize,
    pub result_class_size: usize,
}

/// Raw data on commutation moves applied to links of dimension at least one.
pub fn export_commutation_data(spec: &InstanceSpec) -> Result<Vec<CommutationRow>> {
    let sys = &spec.system;
    let links = generate_instances(&InstanceSpec {
        system: sys.clone(),
        generation: spec.generation,
        min_dim: spec.min_dim.max(1),
        link_only: true,
    })?;
    let rows = links
        .par_iter()
        .map(|w| {
            let class = BraidClass::of_reduced(sys, w)?;
            let mut rows = Vec::new();
            for member in class.members() {
                let mut out: Vec<(Vec<u8>, usize)> = Vec::new();
                crate::moves::for_each_neighbor(sys, member.letters(), MoveSet::COMMUTATION, |v, site| {
                    out.push((v, site.position))
                });
                for (v, position) in out {
                    let v = Word::new(v);
                    let vc = BraidClass::of_reduced(sys, &v)?;
                    rows.push(CommutationRow {
                        link: w.literal(sys),
                        link_dim: class.dimension(),
                        link_class_size: class.len(),
                        member: member.literal(sys),
                        position,
                        result: v.literal(sys),
                        result_representative: vc.representative().literal(sys),
                        result_is_link: vc.is_link()?,
                        result_dim: vc.dimension(),
                        result_class_size: vc.len(),
                    });
                }
            }
            Ok(rows)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(rows.into_iter().flatten().collect())
}

/// A braid graph as a vertex subset of `{0,1}^dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingRow {
    pub word: String,
    pub dim: usize,
    pub link: bool,
    pub vertices: Vec<String>,
    pub coordinates: Vec<String>,
}

/// Raw hypercube-subset data for every instance.
pub fn export_embeddings(spec: &InstanceSpec) -> Result<Vec<EmbeddingRow>> {
    let sys = &spec.system;
    generate_instances(spec)?
        .par_iter()
        .map(|w| {
            let class = BraidClass::of_reduced(sys, w)?;
            let graph = LabeledBraidGraph::new(sys, class)?;
            let metric = Metric::new(graph.graph())?;
            let emb = embed_hypercube(&metric)?;
            Ok(EmbeddingRow {
                word: w.literal(sys),
                dim: graph.class().dimension(),
                link: !w.is_empty() && graph.class().is_link()?,
                vertices: graph.vertices().iter().map(|v| v.literal(sys)).collect(),
                coordinates: (0..emb.coords.len()).map(|v| emb.coord_string(v)).collect(),
            })
        })
        .collect()
}
