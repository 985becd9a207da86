//! Finite simple graphs without isolated vertices.
//!
//! Vertex labels are 1-based at every I/O boundary (JSON, CLI, `Display`)
//! so they line up with the `x_i` names used for monomials. Inside the crate
//! vertices are plain `usize` indices starting at 0; [`Graph::new`] is the one
//! constructor that takes 1-based labels.

mod family;
pub mod generate;
pub mod iso;
mod structure;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use family::{GraphFamilySpec, TEMPLATE_NAMES};
pub use structure::{CycleInfo, StructureReport};

/// Hard limit on the number of vertices a [`Graph`] may have.
pub const MAX_VERTICES: usize = 64;

/// Limit for the exhaustive entry points (independence number, enumeration).
pub const SEARCH_VERTEX_LIMIT: usize = 32;

/// An edge as a pair of 0-based vertex indices with `.0 < .1`.
pub type Edge = (usize, usize);

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph on `x1..xn` from 1-based label pairs.
    ///
    /// Rejects loops, repeated edges, out-of-range labels and isolated
    /// vertices. Error messages name the offending position in `edges`.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("graph must have at least one vertex".into()));
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let mut adj = vec![0u64; n];
        let mut list = Vec::with_capacity(edges.len());
        for (pos, &(a, b)) in edges.iter().enumerate() {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(Error::InvalidGraph(format!("edges[{pos}]: vertex {v} is outside 1..={n}")));
                }
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("edges[{pos}]: loop at vertex {a}")));
            }
            let (i, j) = if a < b { (a - 1, b - 1) } else { (b - 1, a - 1) };
            if adj[i] >> j & 1 == 1 {
                return Err(Error::InvalidGraph(format!("edges[{pos}]: duplicate edge {{{},{}}}", i + 1, j + 1)));
            }
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
            list.push((i, j));
        }
        if let Some(v) = adj.iter().position(|&m| m == 0) {
            return Err(Error::InvalidGraph(format!("vertex {} is isolated", v + 1)));
        }
        list.sort_unstable();
        Ok(Graph { n, edges: list, adj })
    }

    pub fn build(spec: &GraphFamilySpec) -> Result<Self> {
        spec.build()
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges in canonical (lexicographic) order, 0-based.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Neighbourhood of `v` as a bitmask.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let mask = self.adj[v];
        (0..self.n).filter(move |&u| mask >> u & 1 == 1)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a] >> b & 1 == 1
    }

    /// Index of edge `{a, b}` in [`Graph::edges`].
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let key = if a < b { (a, b) } else { (b, a) };
        self.edges.binary_search(&key).ok()
    }

    /// Edge list with 1-based labels.
    pub fn edges_one_based(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|&(a, b)| (a + 1, b + 1)).collect()
    }

    pub(crate) fn require_search_size(&self) -> Result<()> {
        if self.n > SEARCH_VERTEX_LIMIT {
            Err(Error::TooManyVertices { n: self.n, max: SEARCH_VERTEX_LIMIT })
        } else {
            Ok(())
        }
    }

    /// Parses the JSON graph format `{"n": 3, "edges": [[1,2],[2,3],[1,3]]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: GraphJson = serde_json::from_str(text)?;
        Graph::new(raw.n, &raw.edges.iter().map(|e| (e[0], e[1])).collect::<Vec<_>>())
    }

    pub fn to_json(&self) -> String {
        let raw = GraphJson { n: self.n, edges: self.edges.iter().map(|&(a, b)| [a + 1, b + 1]).collect() };
        serde_json::to_string(&raw).expect("graph serialization cannot fail")
    }

    /// Reads either the JSON format or the inline family syntax
    /// (`cycle:8`, `path:7`, `template:c5star`, ...).
    pub fn parse(input: &str) -> Result<Self> {
        let trimmed = input.trim_start();
        if trimmed.starts_with('{') {
            Graph::from_json(trimmed)
        } else {
            input.parse::<GraphFamilySpec>()?.build()
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, {})", self.n, self)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.edges.iter().map(|&(a, b)| format!("{}-{}", a + 1, b + 1)).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_duplicates_and_isolated() {
        let err = Graph::new(3, &[(1, 2), (2, 2)]).unwrap_err().to_string();
        assert!(err.contains("edges[1]") && err.contains("loop"), "{err}");
        let err = Graph::new(3, &[(1, 2), (2, 3), (3, 2)]).unwrap_err().to_string();
        assert!(err.contains("edges[2]") && err.contains("duplicate"), "{err}");
        let err = Graph::new(3, &[(1, 2)]).unwrap_err().to_string();
        assert!(err.contains("vertex 3 is isolated"), "{err}");
        let err = Graph::new(2, &[(1, 5)]).unwrap_err().to_string();
        assert!(err.contains("edges[0]"), "{err}");
    }

    #[test]
    fn edges_are_canonical() {
        let g = Graph::new(3, &[(3, 1), (2, 1), (3, 2)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(g.edge_index(2, 0), Some(1));
        assert_eq!(g.to_string(), "{1-2,1-3,2-3}");
    }

    #[test]
    fn json_round_trip() {
        let g = Graph::new(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        let back = Graph::from_json(&g.to_json()).unwrap();
        assert_eq!(g, back);
        assert!(Graph::from_json(r#"{"n":2,"edges":[[1,2]],"extra":1}"#).is_err());
    }
}
