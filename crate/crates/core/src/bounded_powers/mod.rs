//! Cap vectors, exponent vectors and the top bounded power `W(c, G)`.

mod engine;
mod oracle;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use engine::{delta, delta_with, edge_decompose, enumerate_generators, enumerate_generators_with};
pub use oracle::{brute_force_oracle, ORACLE_CAP_SUM_LIMIT};

/// Largest accepted cap entry.
pub const MAX_CAP: u32 = 1 << 15;

/// Work limits shared by the search entry points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Search states visited by one `delta` / enumeration call.
    pub nodes: u64,
    /// Cap vectors in one grid search.
    pub grid: u64,
    /// Multisets per degree when building fibers.
    pub multisets: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { nodes: 100_000_000, grid: 10_000_000, multisets: 10_000_000 }
    }
}

/// Positive per-vertex upper bounds on exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "CapsJson", into = "CapsJson")]
pub struct CapVector(Vec<u32>);

#[derive(Serialize, Deserialize)]
struct CapsJson {
    caps: Vec<u32>,
}

impl TryFrom<CapsJson> for CapVector {
    type Error = Error;
    fn try_from(raw: CapsJson) -> Result<Self> {
        CapVector::new(raw.caps)
    }
}

impl From<CapVector> for CapsJson {
    fn from(c: CapVector) -> Self {
        CapsJson { caps: c.0 }
    }
}

impl CapVector {
    pub fn new(caps: Vec<u32>) -> Result<Self> {
        if caps.is_empty() {
            return Err(Error::InvalidCaps("cap vector is empty".into()));
        }
        if let Some(pos) = caps.iter().position(|&c| c == 0 || c > MAX_CAP) {
            return Err(Error::InvalidCaps(format!(
                "entry {} is {}, caps must lie in 1..={MAX_CAP}",
                pos + 1,
                caps[pos]
            )));
        }
        Ok(CapVector(caps))
    }

    pub fn uniform(n: usize, value: u32) -> Result<Self> {
        CapVector::new(vec![value; n])
    }

    /// Parses `"2,1,2,1"` or `{"caps":[2,1,2,1]}`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t.starts_with('{') {
            return Ok(serde_json::from_str(t)?);
        }
        let caps = t
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("cap `{}` is not a positive integer", s.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        CapVector::new(caps)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u32 {
        self.0.iter().sum()
    }

    pub(crate) fn check_len(&self, g: &Graph) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::LengthMismatch { expected: g.n(), got: self.len() });
        }
        Ok(())
    }
}

impl fmt::Display for CapVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Clamps every cap to the sum of its neighbours' caps, repeating until
/// nothing changes. `W(c, G)` is unchanged by this.
pub fn normalize_caps(g: &Graph, caps: &CapVector) -> Result<CapVector> {
    caps.check_len(g)?;
    let mut c = caps.0.clone();
    loop {
        let mut changed = false;
        for v in 0..g.n() {
            let support: u32 = g.neighbors(v).map(|u| c[u]).sum();
            if c[v] > support {
                c[v] = support;
                changed = true;
            }
        }
        if !changed {
            return Ok(CapVector(c));
        }
    }
}

/// Exponent vector of a monomial `x1^a1 ... xn^an`. Ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        ExponentVector(exponents)
    }

    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    /// Monomial from 1-based variable indices with repetition:
    /// `[1, 1, 3]` is `x1^2 x3`.
    pub fn from_variables(n: usize, vars: &[usize]) -> Self {
        let mut a = vec![0; n];
        for &v in vars {
            a[v - 1] += 1;
        }
        ExponentVector(a)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn is_bounded_by(&self, caps: &CapVector) -> bool {
        self.0.len() == caps.len() && self.0.iter().zip(caps.as_slice()).all(|(a, c)| a <= c)
    }

    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `x_rho * self / x_xi`, or `None` if `x_xi` does not divide `self`.
    pub fn exchange(&self, xi: usize, rho: usize) -> Option<ExponentVector> {
        if self.0[xi] == 0 {
            return None;
        }
        let mut out = self.0.clone();
        out[xi] -= 1;
        out[rho] += 1;
        Some(ExponentVector(out))
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Renders as `x1*x2^2*x5`, with `1` for the zero vector.
    pub fn monomial(&self) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| if a == 1 { format!("x{}", i + 1) } else { format!("x{}^{a}", i + 1) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.monomial())
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

/// A multiset of edges; its product is a monomial of degree `2 * size`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeMultiset {
    counts: BTreeMap<(usize, usize), u32>,
}

impl EdgeMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    /// Edges given with 1-based labels, repeated for multiplicity.
    pub fn from_edges(g: &Graph, edges: &[(usize, usize)]) -> Result<Self> {
        let mut m = EdgeMultiset::new();
        for (pos, &(a, b)) in edges.iter().enumerate() {
            if a == 0 || b == 0 || !g.has_edge(a - 1, b - 1) {
                return Err(Error::InvalidGraph(format!("edges[{pos}]: {{{a},{b}}} is not an edge")));
            }
            m.insert((a - 1).min(b - 1), (a - 1).max(b - 1), 1);
        }
        Ok(m)
    }

    pub(crate) fn insert(&mut self, a: usize, b: usize, k: u32) {
        if k > 0 {
            *self.counts.entry((a.min(b), a.max(b))).or_default() += k;
        }
    }

    pub fn size(&self) -> u32 {
        self.counts.values().sum()
    }

    /// `(edge, multiplicity)` pairs, 0-based, in edge order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), u32)> + '_ {
        self.counts.iter().map(|(&e, &k)| (e, k))
    }

    pub fn product(&self, n: usize) -> ExponentVector {
        let mut a = vec![0; n];
        for (&(i, j), &k) in &self.counts {
            a[i] += k;
            a[j] += k;
        }
        ExponentVector(a)
    }
}

impl fmt::Display for EdgeMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (&(i, j), &k) in &self.counts {
            write!(f, "(x{}x{})", i + 1, j + 1)?;
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}

/// The minimal generators of the top bounded power, all of degree `2 * delta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    graph: Graph,
    caps: CapVector,
    delta: u32,
    members: BTreeSet<ExponentVector>,
}

impl GeneratorSet {
    pub(crate) fn from_parts(graph: Graph, caps: CapVector, delta: u32, members: BTreeSet<ExponentVector>) -> Self {
        GeneratorSet { graph, caps, delta, members }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn caps(&self) -> &CapVector {
        &self.caps
    }

    pub fn delta(&self) -> u32 {
        self.delta
    }

    pub fn members(&self) -> &BTreeSet<ExponentVector> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, m: &ExponentVector) -> bool {
        self.members.contains(m)
    }

    /// Members listed from the lexicographically largest down, i.e. in the
    /// usual lex order on monomials with `x1 > x2 > ...`. Toric indices
    /// `z1, z2, ...` follow this list.
    pub fn ordered(&self) -> Vec<ExponentVector> {
        self.members.iter().rev().cloned().collect()
    }
}

/// Membership in `W`. Vectors of the wrong length are simply not members.
pub fn member(w: &GeneratorSet, m: &ExponentVector) -> bool {
    m.len() == w.caps.len() && w.contains(m)
}
