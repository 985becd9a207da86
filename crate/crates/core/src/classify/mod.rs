//! Graph-level strong exchange verdicts for cycles, paths, trees, unicyclic
//! graphs and complete multipartite graphs with a matching removed, plus a
//! cross-check of each verdict against bounded search.

mod multipartite;
mod templates;
mod validate;

use std::fmt;

use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use multipartite::{classify_complete_multipartite_minus_matching, recognize_multipartite, MultipartiteShape};
pub use templates::{classify_tree, classify_unicyclic, legs};
pub use validate::{cross_validate, lift_fixture, CrossValidation, Evidence, LiftedFixture};

/// The clause that decided a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    Cycle,
    Path,
    /// `P_6`.
    TreePath6,
    /// A star with at most one pendant edge on each leaf.
    TreeStarWhisker,
    TreeExcluded,
    /// Cycle of length at least 8.
    UnicyclicLongCycle,
    /// Cycle of length 5, 6 or 7; decided by the independence number.
    UnicyclicIndependence,
    /// Cycle of length 4 matching template 1, 2 or 3.
    UnicyclicSquare(u8),
    UnicyclicSquareExcluded,
    /// Triangle matching template 1, 2 or 3.
    UnicyclicTriangle(u8),
    UnicyclicTriangleExcluded,
    Multipartite,
}

impl Rule {
    pub fn tag(self) -> String {
        match self {
            Rule::Cycle => "cycle".into(),
            Rule::Path => "path".into(),
            Rule::TreePath6 => "tree(i)".into(),
            Rule::TreeStarWhisker => "tree(ii)".into(),
            Rule::TreeExcluded => "tree:excluded".into(),
            Rule::UnicyclicLongCycle => "unicyclic(i)".into(),
            Rule::UnicyclicIndependence => "unicyclic(ii)".into(),
            Rule::UnicyclicSquare(k) => format!("unicyclic(iii)({k})"),
            Rule::UnicyclicSquareExcluded => "unicyclic(iii)".into(),
            Rule::UnicyclicTriangle(k) => format!("unicyclic(iv)({k})"),
            Rule::UnicyclicTriangleExcluded => "unicyclic(iv)".into(),
            Rule::Multipartite => "multipartite".into(),
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

impl Serialize for Rule {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.tag())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassificationVerdict {
    pub sep: bool,
    pub rule: Rule,
    pub detail: Value,
}

impl ClassificationVerdict {
    pub(crate) fn new(sep: bool, rule: Rule, detail: Value) -> Self {
        ClassificationVerdict { sep, rule, detail }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("verdict serializes")
    }
}

pub fn classify_cycle(n: usize) -> Result<ClassificationVerdict> {
    if n < 3 {
        return Err(Error::InvalidFamily(format!("cycle length must be >= 3, got {n}")));
    }
    Ok(ClassificationVerdict::new((3..=7).contains(&n), Rule::Cycle, json!({ "n": n })))
}

pub fn classify_path(n: usize) -> Result<ClassificationVerdict> {
    if n < 2 {
        return Err(Error::InvalidFamily(format!("path needs >= 2 vertices, got {n}")));
    }
    Ok(ClassificationVerdict::new(n <= 6, Rule::Path, json!({ "n": n })))
}

/// Picks the applicable classifier: trees, then unicyclic graphs, then
/// complete multipartite graphs minus a matching.
pub fn classify(g: &Graph) -> Result<ClassificationVerdict> {
    let probe = g.structure_probe();
    if probe.is_tree {
        return classify_tree(g);
    }
    if probe.is_unicyclic {
        return classify_unicyclic(g);
    }
    classify_complete_multipartite_minus_matching(g).ok_or(Error::NoClassifier)
}
