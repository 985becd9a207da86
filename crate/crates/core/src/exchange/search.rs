use std::collections::HashSet;

use super::{check_strong_exchange, ExchangeReport};
use crate::bounded_powers::{enumerate_generators_with, normalize_caps, CapVector, Limits};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::Graph;

/// A cap vector from the grid together with the failing report for its `W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub caps: CapVector,
    pub report: ExchangeReport,
}

/// Every `c` in `{1..cap_max}^n` in increasing lex order, keeping only the
/// first grid point for each normalized cap vector.
pub fn normalized_grid(g: &Graph, cap_max: u32, limits: &Limits) -> Result<Vec<(CapVector, CapVector)>> {
    if cap_max == 0 {
        return Err(Error::InvalidCaps("cap_max must be positive".into()));
    }
    let n = g.n();
    let size = (cap_max as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    if size > limits.grid {
        return Err(Error::BudgetExceeded {
            limit: limits.grid,
            context: format!("building a grid of {cap_max}^{n} cap vectors"),
        });
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut c = vec![1u32; n];
    loop {
        let caps = CapVector::new(c.clone())?;
        let norm = normalize_caps(g, &caps)?;
        if seen.insert(norm.clone()) {
            out.push((caps, norm));
        }
        // odometer with the last coordinate fastest
        let Some(i) = (0..n).rev().find(|&i| c[i] < cap_max) else {
            return Ok(out);
        };
        c[i] += 1;
        c[i + 1..].iter_mut().for_each(|x| *x = 1);
    }
}

/// The first grid cap vector whose `W` fails strong exchange.
pub fn search_sep_counterexample(
    g: &Graph,
    cap_max: u32,
    limits: &Limits,
    exec: Execution,
) -> Result<Option<Counterexample>> {
    g.require_search_size()?;
    let grid = normalized_grid(g, cap_max, limits)?;
    let hit = exec.find_map_first(&grid, |(caps, norm)| {
        let w = match enumerate_generators_with(g, norm, limits) {
            Ok(w) => w,
            Err(e) => return Some(Err(e)),
        };
        let report = check_strong_exchange(w.members());
        (!report.passed()).then(|| Ok(Counterexample { caps: caps.clone(), report }))
    });
    hit.transpose()
}
