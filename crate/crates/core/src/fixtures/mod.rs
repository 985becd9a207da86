//! A registry of worked instances, embedded from `data/fixtures.toml`, and a
//! runner that re-derives each one from scratch.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::bounded_powers::{enumerate_generators_with, CapVector, EdgeMultiset, ExponentVector, Limits};
use crate::error::{Error, Result};
use crate::exchange::{check_strong_exchange, search_sep_counterexample};
use crate::exec::Execution;
use crate::graph::Graph;
use crate::toric::{check_fiber_connectivity, sym_exchange_binomials, SymExchangeBinomial};

const DATA: &str = include_str!("../../data/fixtures.toml");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FixtureKind {
    Refute,
    Holds,
    Final,
}

/// One registry entry. Vertices and edges are 1-based as in the data file.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fixture {
    pub name: String,
    pub kind: FixtureKind,
    pub graph: String,
    #[serde(default)]
    pub caps: Vec<u32>,
    pub delta: Option<u32>,
    #[serde(default)]
    pub w1: Vec<(usize, usize)>,
    #[serde(default)]
    pub w2: Vec<(usize, usize)>,
    pub xi: Option<usize>,
    pub rho: Option<usize>,
    pub divisor: Option<Vec<usize>>,
    pub missing: Option<Vec<usize>>,
    pub cap_max: Option<u32>,
    #[serde(default)]
    pub generators: Vec<Vec<usize>>,
    #[serde(default)]
    pub non_members: Vec<Vec<usize>>,
    #[serde(default)]
    pub binomials: Vec<String>,
    pub m_max: Option<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Registry {
    fixture: Vec<Fixture>,
}

pub fn registry() -> &'static [Fixture] {
    static REGISTRY: OnceLock<Vec<Fixture>> = OnceLock::new();
    REGISTRY.get_or_init(|| toml::from_str::<Registry>(DATA).expect("embedded fixture data parses").fixture)
}

pub fn find(name: &str) -> Result<&'static Fixture> {
    registry().iter().find(|f| f.name == name).ok_or_else(|| Error::UnknownFixture(name.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureOutcome {
    pub name: String,
    pub checks: Vec<Check>,
}

impl FixtureOutcome {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, label: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { label: label.to_string(), passed, detail: detail.into() });
    }
}

fn required<T: Copy>(value: Option<T>, name: &str, field: &str) -> Result<T> {
    value.ok_or_else(|| Error::Parse(format!("fixture {name}: missing field `{field}`")))
}

/// Recomputes everything a fixture claims and records one check per claim.
pub fn run(f: &Fixture, limits: &Limits, exec: Execution) -> Result<FixtureOutcome> {
    let g = Graph::parse(&f.graph)?;
    let mut out = FixtureOutcome { name: f.name.clone(), checks: Vec::new() };
    match f.kind {
        FixtureKind::Refute => run_refute(f, &g, limits, &mut out)?,
        FixtureKind::Holds => {
            let cap_max = required(f.cap_max, &f.name, "cap_max")?;
            let hit = search_sep_counterexample(&g, cap_max, limits, exec)?;
            let detail = match &hit {
                None => format!("no counterexample with caps up to {cap_max}"),
                Some(c) => format!("caps {} fail strong exchange", c.caps),
            };
            out.push("strong exchange on grid", hit.is_none(), detail);
        }
        FixtureKind::Final => run_final(f, &g, limits, exec, &mut out)?,
    }
    Ok(out)
}

fn run_refute(f: &Fixture, g: &Graph, limits: &Limits, out: &mut FixtureOutcome) -> Result<()> {
    let caps = CapVector::new(f.caps.clone())?;
    caps.check_len(g)?;
    let w = enumerate_generators_with(g, &caps, limits)?;
    let n = g.n();
    let expected = required(f.delta, &f.name, "delta")?;
    out.push("delta", w.delta() == expected, format!("computed {}, expected {expected}", w.delta()));

    let w1 = EdgeMultiset::from_edges(g, &f.w1)?;
    let w2 = EdgeMultiset::from_edges(g, &f.w2)?;
    let (u, v) = (w1.product(n), w2.product(n));
    out.push("w1 in W", w.contains(&u), format!("{w1} = {u}"));
    out.push("w2 in W", w.contains(&v), format!("{w2} = {v}"));

    let xi = required(f.xi, &f.name, "xi")? - 1;
    let rho = required(f.rho, &f.name, "rho")? - 1;
    let ordered = u.get(xi) > v.get(xi) && u.get(rho) < v.get(rho);
    out.push("exponent comparison", ordered, format!("x{} and x{}", xi + 1, rho + 1));
    let swapped = u.exchange(xi, rho);
    let outside = swapped.as_ref().is_some_and(|s| !w.contains(s));
    let shown = swapped.as_ref().map_or("undefined".to_string(), |s| s.to_string());
    out.push("exchange leaves W", outside, shown.clone());
    if let Some(d) = &f.divisor {
        let d = ExponentVector::from_variables(n, d);
        let ok = swapped.as_ref().is_some_and(|s| d.divides(s));
        out.push("obstruction divides exchange", ok, format!("{d} | {shown}"));
    }
    if let Some(m) = &f.missing {
        let m = ExponentVector::from_variables(n, m);
        out.push("exchange is the missing monomial", swapped.as_ref() == Some(&m), format!("{m}"));
    }

    let report = check_strong_exchange(w.members());
    let verified = report.witness.as_ref().is_some_and(|wit| {
        let rho = wit.rho.expect("strong witnesses name rho");
        let recomputed = wit.u.exchange(wit.xi, rho);
        w.contains(&wit.u)
            && w.contains(&wit.v)
            && wit.u.get(wit.xi) > wit.v.get(wit.xi)
            && wit.u.get(rho) < wit.v.get(rho)
            && recomputed == wit.missing
            && !w.contains(wit.missing.as_ref().unwrap())
    });
    let detail = match &report.witness {
        Some(wit) => format!("u = {}, v = {}, missing {}", wit.u, wit.v, wit.missing.as_ref().unwrap()),
        None => "strong exchange holds".to_string(),
    };
    out.push("checker finds a valid witness", verified, detail);
    Ok(())
}

fn run_final(f: &Fixture, g: &Graph, limits: &Limits, exec: Execution, out: &mut FixtureOutcome) -> Result<()> {
    let caps = CapVector::new(f.caps.clone())?;
    caps.check_len(g)?;
    let w = enumerate_generators_with(g, &caps, limits)?;
    let n = g.n();
    if let Some(expected) = f.delta {
        out.push("delta", w.delta() == expected, format!("computed {}, expected {expected}", w.delta()));
    }
    let expected: Vec<ExponentVector> = f.generators.iter().map(|m| ExponentVector::from_variables(n, m)).collect();
    let members = w.ordered();
    out.push("generators", members == expected, format!("{} generators", members.len()));
    for m in &f.non_members {
        let m = ExponentVector::from_variables(n, m);
        out.push("non-member", !w.contains(&m), m.to_string());
    }

    let want: BTreeSet<SymExchangeBinomial> = f
        .binomials
        .iter()
        .map(|b| SymExchangeBinomial::parse(b).ok_or_else(|| Error::Parse(format!("binomial `{b}`"))))
        .collect::<Result<_>>()?;
    let got: BTreeSet<SymExchangeBinomial> = sym_exchange_binomials(&members).into_iter().collect();
    let shown: Vec<String> = got.iter().map(|b| b.to_string()).collect();
    out.push("symmetric exchange binomials", got == want, shown.join(", "));

    if let Some(m_max) = f.m_max {
        let r = check_fiber_connectivity(&members, m_max, limits, exec)?;
        out.push("fibers connected", r.connected(), format!("degrees 2..={m_max}"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_loads_with_unique_names() {
        let names: BTreeSet<&str> = registry().iter().map(|f| f.name.as_str()).collect();
        assert_eq!(names.len(), registry().len());
        assert!(registry().iter().filter(|f| f.kind == FixtureKind::Refute).count() >= 20);
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(find("nope"), Err(Error::UnknownFixture(_))));
    }

    #[test]
    fn refute_fixtures_pass() {
        for f in registry().iter().filter(|f| f.kind == FixtureKind::Refute) {
            let o = run(f, &Limits::default(), Execution::default()).unwrap();
            assert!(o.passed(), "{}: {:?}", f.name, o.checks);
        }
    }

    #[test]
    fn holds_fixtures_pass() {
        for f in registry().iter().filter(|f| f.kind == FixtureKind::Holds) {
            let o = run(f, &Limits::default(), Execution::default()).unwrap();
            assert!(o.passed(), "{}: {:?}", f.name, o.checks);
        }
    }

    #[test]
    fn final_example() {
        let o = run(find("final-example").unwrap(), &Limits::default(), Execution::default()).unwrap();
        assert!(o.passed(), "{:?}", o.checks);
    }

    #[test]
    fn tampered_fixture_fails() {
        let mut f = find("c6pend").unwrap().clone();
        f.delta = Some(4);
        let o = run(&f, &Limits::default(), Execution::Sequential).unwrap();
        assert!(!o.passed());
        assert!(!o.checks[0].passed);
    }
}
