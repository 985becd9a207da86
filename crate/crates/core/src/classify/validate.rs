use serde_json::{json, Value};

use super::{classify, ClassificationVerdict};
use crate::bounded_powers::{enumerate_generators_with, CapVector, Limits};
use crate::error::Result;
use crate::exchange::{
    check_strong_exchange, normalized_grid, search_sep_counterexample, Counterexample, ExchangeReport,
};
use crate::exec::Execution;
use crate::fixtures::{self, FixtureKind};
use crate::graph::iso::all_induced_embeddings;
use crate::graph::Graph;

/// A refuting fixture found inside a larger graph and carried over to it.
#[derive(Clone, Debug, PartialEq)]
pub struct LiftedFixture {
    pub fixture: String,
    /// `embedding[i]` is the vertex of the host graph playing fixture vertex `i`.
    pub embedding: Vec<usize>,
    pub caps: CapVector,
    pub report: ExchangeReport,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Evidence {
    /// The whole grid was searched without finding a failing cap vector.
    NoCounterexample {
        cap_max: u32,
        grid_points: usize,
    },
    Grid(Counterexample),
    Fixture(LiftedFixture),
    /// Negative verdict, but neither the grid nor any fixture fails.
    Missing {
        cap_max: u32,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct CrossValidation {
    pub verdict: ClassificationVerdict,
    pub evidence: Evidence,
    pub consistent: bool,
}

impl CrossValidation {
    pub fn to_json(&self) -> Value {
        let evidence = match &self.evidence {
            Evidence::NoCounterexample { cap_max, grid_points } => {
                json!({ "kind": "grid-clean", "cap_max": cap_max, "grid_points": grid_points })
            }
            Evidence::Grid(c) => json!({ "kind": "grid", "caps": c.caps.as_slice(), "report": c.report.to_json() }),
            Evidence::Fixture(l) => json!({
                "kind": "fixture",
                "fixture": l.fixture,
                "embedding": l.embedding.iter().map(|v| v + 1).collect::<Vec<_>>(),
                "caps": l.caps.as_slice(),
                "report": l.report.to_json(),
            }),
            Evidence::Missing { cap_max } => json!({ "kind": "missing", "cap_max": cap_max }),
        };
        json!({ "verdict": self.verdict.to_json(), "consistent": self.consistent, "evidence": evidence })
    }
}

/// Order in which the vertices outside `keep` can be deleted one at a time,
/// each a leaf of what remains, paired with its neighbour at that moment.
fn leaf_peeling(g: &Graph, keep: u64) -> Option<Vec<(usize, usize)>> {
    let mut alive = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut order = Vec::new();
    while alive & !keep != 0 {
        let leaf = (0..g.n())
            .find(|&v| alive >> v & 1 == 1 && keep >> v & 1 == 0 && (g.neighbor_mask(v) & alive).count_ones() == 1)?;
        let anchor = (g.neighbor_mask(leaf) & alive).trailing_zeros() as usize;
        alive &= !(1 << leaf);
        order.push((leaf, anchor));
    }
    Some(order)
}

/// Embeds the fixture graph as an induced subgraph whose complement peels
/// off leaf by leaf, then grows the fixture caps back along the peeling: each
/// re-attached leaf gets cap 1 and its anchor's cap goes up by one. Returns
/// the first such lift whose `W` fails strong exchange.
pub fn lift_fixture(
    g: &Graph,
    name: &str,
    pattern: &Graph,
    caps: &CapVector,
    limits: &Limits,
) -> Result<Option<LiftedFixture>> {
    for embedding in all_induced_embeddings(pattern, g, 256) {
        let keep = embedding.iter().fold(0u64, |m, &v| m | 1 << v);
        let Some(order) = leaf_peeling(g, keep) else {
            continue;
        };
        let mut c = vec![0u32; g.n()];
        for (i, &v) in embedding.iter().enumerate() {
            c[v] = caps.as_slice()[i];
        }
        for &(leaf, anchor) in order.iter().rev() {
            c[leaf] = 1;
            c[anchor] += 1;
        }
        let lifted = CapVector::new(c)?;
        let w = enumerate_generators_with(g, &lifted, limits)?;
        let report = check_strong_exchange(w.members());
        if !report.passed() {
            return Ok(Some(LiftedFixture { fixture: name.to_string(), embedding, caps: lifted, report }));
        }
    }
    Ok(None)
}

fn lift_any_fixture(g: &Graph, limits: &Limits) -> Result<Option<LiftedFixture>> {
    for f in fixtures::registry() {
        if f.kind != FixtureKind::Refute {
            continue;
        }
        let pattern = Graph::parse(&f.graph)?;
        if pattern.n() > g.n() {
            continue;
        }
        let caps = CapVector::new(f.caps.clone())?;
        if let Some(l) = lift_fixture(g, &f.name, &pattern, &caps, limits)? {
            return Ok(Some(l));
        }
    }
    Ok(None)
}

/// Checks a verdict against bounded search: a positive verdict needs a clean
/// grid; a negative one needs a failing grid point or a lifted fixture.
pub fn cross_validate(g: &Graph, cap_max: u32, limits: &Limits, exec: Execution) -> Result<CrossValidation> {
    let verdict = classify(g)?;
    let found = search_sep_counterexample(g, cap_max, limits, exec)?;
    let (evidence, consistent) = match (verdict.sep, found) {
        (true, None) => {
            let grid_points = normalized_grid(g, cap_max, limits)?.len();
            (Evidence::NoCounterexample { cap_max, grid_points }, true)
        }
        (true, Some(c)) => (Evidence::Grid(c), false),
        (false, Some(c)) => (Evidence::Grid(c), true),
        (false, None) => match lift_any_fixture(g, limits)? {
            Some(l) => (Evidence::Fixture(l), true),
            None => (Evidence::Missing { cap_max }, false),
        },
    };
    Ok(CrossValidation { verdict, evidence, consistent })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn peeling() {
        let g = Graph::parse("template:c3pathpend").unwrap();
        // keep the triangle only
        let order = leaf_peeling(&g, 0b0000111).unwrap();
        assert_eq!(order.len(), 4);
        assert!(leaf_peeling(&g, 0b0000011).is_none());
    }

    #[test]
    fn fixture_lifts_into_longer_cycle_graph() {
        // C_8 with a pendant contains C_8 and peels the pendant
        let g = Graph::parse("cycle-pendant:8").unwrap();
        let pattern = Graph::parse("cycle:8").unwrap();
        let caps = CapVector::new(vec![2, 1, 2, 1, 1, 1, 2, 1]).unwrap();
        let lifted = lift_fixture(&g, "c8", &pattern, &caps, &Limits::default()).unwrap().unwrap();
        assert_eq!(lifted.caps.len(), 9);
        assert!(!lifted.report.passed());
    }

    #[test]
    fn consistent_small_cases() {
        let l = Limits::default();
        for spec in ["path:5", "cycle:5", "template:c4pendall"] {
            let g = Graph::parse(spec).unwrap();
            let cv = cross_validate(&g, 2, &l, Execution::default()).unwrap();
            assert!(cv.consistent, "{spec}");
            assert!(matches!(cv.evidence, Evidence::NoCounterexample { .. }));
        }
        let g = Graph::parse("template:c4twopath").unwrap();
        let cv = cross_validate(&g, 2, &l, Execution::default()).unwrap();
        assert!(cv.consistent);
        assert!(!cv.verdict.sep);
    }
}
