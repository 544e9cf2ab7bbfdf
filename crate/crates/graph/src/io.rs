//! Edge-list text and the JSON graph document shared with the braid layer.

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::Graph;

/// Reads `u v` pairs, one per line, 0-based. Blank lines and lines starting
/// with `#` are skipped. The vertex count is one more than the largest id.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    let mut n = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        let bad = |message: String| GraphError::Parse {
            line: i + 1,
            message,
        };
        if parts.len() != 2 {
            return Err(bad(format!("expected two vertex ids, found {:?}", line)));
        }
        let u: usize = parts[0]
            .parse()
            .map_err(|_| bad(format!("bad vertex id {:?}", parts[0])))?;
        let v: usize = parts[1]
            .parse()
            .map_err(|_| bad(format!("bad vertex id {:?}", parts[1])))?;
        if u == v {
            return Err(bad(format!("self-loop at {u}")));
        }
        n = n.max(u + 1).max(v + 1);
        edges.push((u, v));
    }
    Graph::from_edges(n, edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    g.edges().iter().map(|(u, v)| format!("{u} {v}\n")).collect()
}

/// Edge label in a JSON document: a shadow ordinal or a move kind.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EdgeLabel {
    Ordinal(usize),
    Kind(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EdgeEntry {
    Labeled(usize, usize, EdgeLabel),
    Plain(usize, usize),
}

impl EdgeEntry {
    pub fn endpoints(&self) -> (usize, usize) {
        match *self {
            EdgeEntry::Labeled(u, v, _) | EdgeEntry::Plain(u, v) => (u, v),
        }
    }
}

/// `{system, vertices, edges: [[i, j, label]], shadowCenters}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub system: Option<String>,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeEntry>,
    #[serde(
        rename = "shadowCenters",
        default,
        skip_serializing_if = "Option::is_none"
    )]
    pub shadow_centers: Option<Vec<usize>>,
}

impl GraphDocument {
    pub fn from_graph(g: &Graph) -> Self {
        GraphDocument {
            system: None,
            vertices: (0..g.vertex_count()).map(|v| v.to_string()).collect(),
            edges: g
                .edges()
                .into_iter()
                .map(|(u, v)| EdgeEntry::Plain(u, v))
                .collect(),
            shadow_centers: None,
        }
    }

    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        Graph::from_edges(
            self.vertices.len(),
            self.edges.iter().map(EdgeEntry::endpoints),
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_round_trip() {
        let g = parse_edge_list("# square\n0 1\n1 2\n\n2 3\n3 0\n").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(
            parse_edge_list("0 1\n1\n"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(parse_edge_list("0 x").is_err());
        assert!(parse_edge_list("2 2").is_err());
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"system":"D:4","vertices":["121","212"],"edges":[[0,1,1]],"shadowCenters":[2]}"#;
        let doc = GraphDocument::from_json(text).unwrap();
        assert_eq!(doc.edges, vec![EdgeEntry::Labeled(0, 1, EdgeLabel::Ordinal(1))]);
        let g = doc.to_graph().unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);
        let again = GraphDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(again, doc);
    }

    #[test]
    fn json_plain_and_kind_edges() {
        let text = r#"{"vertices":["a","b","c"],"edges":[[0,1],[1,2,"braid"]]}"#;
        let doc = GraphDocument::from_json(text).unwrap();
        assert_eq!(doc.edges[0], EdgeEntry::Plain(0, 1));
        assert_eq!(
            doc.edges[1],
            EdgeEntry::Labeled(1, 2, EdgeLabel::Kind("braid".into()))
        );
    }
}
