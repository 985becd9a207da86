use serde::Serialize;
use serde_json::{json, Value};

use super::{check_fiber_connectivity, FiberViolation};
use crate::bounded_powers::{enumerate_generators_with, CapVector, Limits};
use crate::error::{Error, Result};
use crate::exchange::normalized_grid;
use crate::exec::Execution;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstanceStatus {
    Clean,
    Violation(FiberViolation),
    /// A budget ran out on this instance; the scan goes on.
    BudgetExceeded(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceResult {
    pub graph: Graph,
    pub caps: CapVector,
    pub generators: usize,
    pub status: InstanceStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ScanReport {
    pub m_max: usize,
    pub graphs: usize,
    pub instances: Vec<InstanceResult>,
}

#[derive(Serialize)]
struct Counts {
    graphs: usize,
    instances: usize,
    clean: usize,
    violations: usize,
    budget_exceeded: usize,
}

impl ScanReport {
    pub fn clean(&self) -> usize {
        self.instances.iter().filter(|r| r.status == InstanceStatus::Clean).count()
    }

    pub fn violations(&self) -> impl Iterator<Item = &InstanceResult> {
        self.instances.iter().filter(|r| matches!(r.status, InstanceStatus::Violation(_)))
    }

    pub fn budget_exceeded(&self) -> usize {
        self.instances.iter().filter(|r| matches!(r.status, InstanceStatus::BudgetExceeded(_))).count()
    }

    pub fn is_clean(&self) -> bool {
        self.clean() == self.instances.len()
    }

    /// Summary counts plus every instance that was not clean.
    pub fn to_json(&self) -> Value {
        let counts = Counts {
            graphs: self.graphs,
            instances: self.instances.len(),
            clean: self.clean(),
            violations: self.violations().count(),
            budget_exceeded: self.budget_exceeded(),
        };
        let findings: Vec<Value> = self
            .instances
            .iter()
            .filter(|r| r.status != InstanceStatus::Clean)
            .map(|r| {
                let status = match &r.status {
                    InstanceStatus::Clean => json!("clean"),
                    InstanceStatus::Violation(v) => json!({
                        "violation": {
                            "degree": v.degree,
                            "product": v.product,
                            "a": v.a.iter().map(|k| k + 1).collect::<Vec<_>>(),
                            "b": v.b.iter().map(|k| k + 1).collect::<Vec<_>>(),
                        }
                    }),
                    InstanceStatus::BudgetExceeded(msg) => json!({ "budget_exceeded": msg }),
                };
                json!({
                    "graph": r.graph.edges_one_based(),
                    "caps": r.caps.as_slice(),
                    "generators": r.generators,
                    "status": status,
                })
            })
            .collect();
        json!({ "m_max": self.m_max, "counts": counts, "findings": findings })
    }
}

fn run_instance(g: &Graph, caps: &CapVector, m_max: usize, limits: &Limits) -> Result<InstanceResult> {
    let budget = |e: Error| match e {
        Error::BudgetExceeded { .. } => Ok(e.to_string()),
        other => Err(other),
    };
    let w = match enumerate_generators_with(g, caps, limits) {
        Ok(w) => w,
        Err(e) => {
            let msg = budget(e)?;
            let status = InstanceStatus::BudgetExceeded(msg);
            return Ok(InstanceResult { graph: g.clone(), caps: caps.clone(), generators: 0, status });
        }
    };
    let members = w.ordered();
    let status = match check_fiber_connectivity(&members, m_max, limits, Execution::Sequential) {
        Ok(r) => match r.violation {
            None => InstanceStatus::Clean,
            Some(v) => InstanceStatus::Violation(v),
        },
        Err(e) => InstanceStatus::BudgetExceeded(budget(e)?),
    };
    Ok(InstanceResult { graph: g.clone(), caps: caps.clone(), generators: members.len(), status })
}

/// Checks fiber connectivity through degree `m_max` for every graph of the
/// corpus and every normalized cap vector in `{1..cap_max}^n`. Instances run
/// in parallel; results keep corpus and grid order.
pub fn conjecture_scan(
    corpus: &[Graph],
    cap_max: u32,
    m_max: usize,
    limits: &Limits,
    exec: Execution,
) -> Result<ScanReport> {
    let mut work = Vec::new();
    for g in corpus {
        if !g.structure_probe().is_unicyclic {
            return Err(Error::NotUnicyclic);
        }
        for (_, norm) in normalized_grid(g, cap_max, limits)? {
            work.push((g, norm));
        }
    }
    let instances =
        exec.map(&work, |(g, caps)| run_instance(g, caps, m_max, limits)).into_iter().collect::<Result<Vec<_>>>()?;
    Ok(ScanReport { m_max, graphs: corpus.len(), instances })
}

/// Runs a single `(G, c)` instance; handy for reproducing a finding.
pub fn scan_instance(g: &Graph, caps: &CapVector, m_max: usize, limits: &Limits) -> Result<InstanceResult> {
    run_instance(g, caps, m_max, limits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_corpus() {
        let r = conjecture_scan(&[], 2, 3, &Limits::default(), Execution::default()).unwrap();
        assert!(r.instances.is_empty());
        assert!(r.is_clean());
        assert_eq!(r.to_json()["counts"]["instances"], 0);
    }

    #[test]
    fn final_example_instance() {
        let g = Graph::parse("template:c3pathpend").unwrap();
        let caps = CapVector::new(vec![1, 1, 1, 2, 1, 1, 1]).unwrap();
        let r = scan_instance(&g, &caps, 3, &Limits::default()).unwrap();
        assert_eq!(r.generators, 6);
        assert_eq!(r.status, InstanceStatus::Clean);
    }

    #[test]
    fn rejects_trees() {
        let g = Graph::parse("path:4").unwrap();
        assert!(matches!(
            conjecture_scan(&[g], 2, 2, &Limits::default(), Execution::default()),
            Err(Error::NotUnicyclic)
        ));
    }
}
