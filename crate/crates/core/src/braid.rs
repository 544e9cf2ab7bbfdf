//! Braid classes, commutation classes, reduced expressions and the graphs
//! they carry.

use std::collections::HashMap;

use coxbraid_graph::{EdgeEntry, EdgeLabel, Graph, GraphDocument};

use crate::error::{Error, Result};
use crate::links::{Shadow, Signature};
use crate::moves::{self, closure_sorted, for_each_neighbor, MoveKind, MoveSet};
use crate::system::CoxeterSystem;
use crate::word::Word;

/// A braid class `[α]`: sorted members plus the union of their shadow
/// centers.
#[derive(Clone, Debug)]
pub struct BraidClass {
    members: Vec<Word>,
    index: HashMap<Word, usize>,
    centers: Vec<usize>,
}

impl BraidClass {
    /// Builds the class of a word already known to be reduced.
    pub fn of_reduced(sys: &CoxeterSystem, w: &Word) -> Result<Self> {
        w.check(sys)?;
        Ok(Self::from_members(sys, closure_sorted(sys, w, MoveSet::BRAID)?))
    }

    /// `members` must be a full braid class in sorted order.
    pub(crate) fn from_members(sys: &CoxeterSystem, members: Vec<Word>) -> Self {
        let mut has = vec![false; members.first().map_or(0, Word::len) + 1];
        for m in &members {
            for start in moves::braid_starts(sys, m.letters()) {
                has[start + 2] = true;
            }
        }
        let centers = (1..has.len()).filter(|&c| has[c]).collect();
        let index = members.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        BraidClass {
            members,
            index,
            centers,
        }
    }

    pub fn members(&self) -> &[Word] {
        &self.members
    }

    /// The lexicographically least member.
    pub fn representative(&self) -> &Word {
        &self.members[0]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn word_len(&self) -> usize {
        self.members[0].len()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.index.contains_key(w)
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn require_member(&self, sys: &CoxeterSystem, w: &Word) -> Result<usize> {
        self.index_of(w).ok_or_else(|| {
            Error::NotBraidEquivalent(format!(
                "{} is not in the braid class of {}",
                w.literal(sys),
                self.representative().literal(sys)
            ))
        })
    }

    /// 1-based centers of the class shadows, increasing.
    pub fn shadow_centers(&self) -> &[usize] {
        &self.centers
    }

    pub fn shadows(&self) -> Vec<Shadow> {
        self.centers.iter().map(|&c| Shadow::at(c)).collect()
    }

    pub fn dimension(&self) -> usize {
        self.centers.len()
    }

    /// Ordinal (1-based) of the shadow centered at `center`.
    pub fn ordinal_of_center(&self, center: usize) -> Option<usize> {
        self.centers.binary_search(&center).ok().map(|i| i + 1)
    }

    pub fn signature(&self, w: &Word) -> Signature {
        Signature::new(self.centers.iter().map(|&c| w.at(c)).collect())
    }

    pub fn signature_at(&self, i: usize) -> Signature {
        self.signature(&self.members[i])
    }

    pub fn check_ordinal(&self, ordinal: usize) -> Result<()> {
        if ordinal == 0 || ordinal > self.dimension() {
            Err(Error::Ordinal {
                ordinal,
                dim: self.dimension(),
            })
        } else {
            Ok(())
        }
    }
}

/// The braid class of a reduced word.
pub fn braid_class(sys: &CoxeterSystem, w: &Word) -> Result<BraidClass> {
    moves::require_reduced(sys, w)?;
    BraidClass::of_reduced(sys, w)
}

pub fn commutation_class(sys: &CoxeterSystem, w: &Word) -> Result<Vec<Word>> {
    moves::require_reduced(sys, w)?;
    closure_sorted(sys, w, MoveSet::COMMUTATION)
}

/// All reduced expressions of the element a reduced word represents.
pub fn reduced_expressions(sys: &CoxeterSystem, w: &Word) -> Result<Vec<Word>> {
    moves::require_reduced(sys, w)?;
    closure_sorted(sys, w, MoveSet::ALL)
}

/// Braid graph: one vertex per class member, one edge per braid move,
/// labelled by the ordinal of the move's shadow.
#[derive(Clone, Debug)]
pub struct LabeledBraidGraph {
    class: BraidClass,
    edges: Vec<(usize, usize, usize)>,
    graph: Graph,
}

impl LabeledBraidGraph {
    pub fn new(sys: &CoxeterSystem, class: BraidClass) -> Result<Self> {
        let n = class.len();
        let mut edges = Vec::new();
        let mut graph = Graph::new(n);
        for (i, w) in class.members().iter().enumerate() {
            let mut err = None;
            for_each_neighbor(sys, w.letters(), MoveSet::BRAID, |v, site| {
                let Some(j) = class.index_of(&Word::new(v)) else {
                    err = Some(Error::Invariant("braid class is not closed under braid moves".into()));
                    return;
                };
                if i < j {
                    let ordinal = class
                        .ordinal_of_center(site.position + 1)
                        .expect("every move center is a class shadow center");
                    edges.push((i, j, ordinal));
                    graph.add_edge(i, j).expect("indices are in range");
                }
            });
            if let Some(e) = err {
                return Err(e);
            }
        }
        edges.sort_unstable();
        Ok(LabeledBraidGraph { class, edges, graph })
    }

    pub fn class(&self) -> &BraidClass {
        &self.class
    }

    pub fn vertices(&self) -> &[Word] {
        self.class.members()
    }

    /// `(i, j, ordinal)` with `i < j`, sorted.
    pub fn edges(&self) -> &[(usize, usize, usize)] {
        &self.edges
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn shadow_centers(&self) -> &[usize] {
        self.class.shadow_centers()
    }

    pub fn label(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges
            .binary_search_by(|&(a, b, _)| (a, b).cmp(&key))
            .ok()
            .map(|i| self.edges[i].2)
    }

    pub fn to_document(&self, sys: &CoxeterSystem) -> GraphDocument {
        GraphDocument {
            system: Some(sys.label()),
            vertices: self.vertices().iter().map(|w| w.literal(sys)).collect(),
            edges: self
                .edges
                .iter()
                .map(|&(i, j, l)| EdgeEntry::Labeled(i, j, EdgeLabel::Ordinal(l)))
                .collect(),
            shadow_centers: Some(self.shadow_centers().to_vec()),
        }
    }

    pub fn to_dot(&self, sys: &CoxeterSystem) -> String {
        let mut out = String::from("graph braid {\n");
        for (i, w) in self.vertices().iter().enumerate() {
            out.push_str(&format!("  {i} [label=\"{}\"];\n", w.literal(sys)));
        }
        for &(i, j, l) in &self.edges {
            out.push_str(&format!("  {i} -- {j} [label={l}];\n"));
        }
        out.push_str("}\n");
        out
    }
}

pub fn braid_graph(sys: &CoxeterSystem, w: &Word) -> Result<LabeledBraidGraph> {
    LabeledBraidGraph::new(sys, braid_class(sys, w)?)
}

/// Matsumoto graph: all reduced expressions, edges tagged by move kind.
#[derive(Clone, Debug)]
pub struct MatsumotoGraph {
    vertices: Vec<Word>,
    edges: Vec<(usize, usize, MoveKind)>,
    graph: Graph,
}

impl MatsumotoGraph {
    pub fn vertices(&self) -> &[Word] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize, MoveKind)] {
        &self.edges
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Components left after keeping only edges of `kind`, each as sorted
    /// vertex indices, ordered by least vertex.
    pub fn components_keeping(&self, kind: MoveKind) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let sub = Graph::from_edges(
            n,
            self.edges.iter().filter(|e| e.2 == kind).map(|&(i, j, _)| (i, j)),
        )
        .expect("indices are in range");
        let mut comp = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let d = sub.bfs(s);
            let members: Vec<usize> = (0..n).filter(|&v| d[v] != usize::MAX).collect();
            for &v in &members {
                comp[v] = out.len();
            }
            out.push(members);
        }
        out
    }

    /// Braid classes: components once commutation edges are deleted.
    pub fn braid_classes(&self) -> Vec<Vec<usize>> {
        self.components_keeping(MoveKind::Braid)
    }

    pub fn commutation_classes(&self) -> Vec<Vec<usize>> {
        self.components_keeping(MoveKind::Commutation)
    }

    pub fn to_document(&self, sys: &CoxeterSystem) -> GraphDocument {
        GraphDocument {
            system: Some(sys.label()),
            vertices: self.vertices.iter().map(|w| w.literal(sys)).collect(),
            edges: self
                .edges
                .iter()
                .map(|&(i, j, k)| EdgeEntry::Labeled(i, j, EdgeLabel::Kind(k.name().into())))
                .collect(),
            shadow_centers: None,
        }
    }

    pub fn to_dot(&self, sys: &CoxeterSystem) -> String {
        let mut out = String::from("graph matsumoto {\n");
        for (i, w) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  {i} [label=\"{}\"];\n", w.literal(sys)));
        }
        for &(i, j, k) in &self.edges {
            out.push_str(&format!("  {i} -- {j} [kind={}];\n", k.name()));
        }
        out.push_str("}\n");
        out
    }
}

pub fn matsumoto_graph(sys: &CoxeterSystem, w: &Word) -> Result<MatsumotoGraph> {
    let vertices = reduced_expressions(sys, w)?;
    let index: HashMap<&Word, usize> = vertices.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut edges = Vec::new();
    let mut graph = Graph::new(vertices.len());
    for (i, v) in vertices.iter().enumerate() {
        for_each_neighbor(sys, v.letters(), MoveSet::ALL, |x, site| {
            let j = index[&Word::new(x)];
            if i < j {
                edges.push((i, j, site.kind));
                graph.add_edge(i, j).expect("indices are in range");
            }
        });
    }
    edges.sort_unstable();
    Ok(MatsumotoGraph {
        vertices,
        edges,
        graph,
    })
}
