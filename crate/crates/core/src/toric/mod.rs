//! Symmetric exchange binomials and degree-bounded generation of the toric
//! ideal of `W`, certified by connectivity of fibers under quadratic moves.
//!
//! Members are indexed in the order of [`GeneratorSet::ordered`]
//! (lexicographically largest first), so `z1` is the largest generator.
//!
//! [`GeneratorSet::ordered`]: crate::GeneratorSet::ordered

mod fiber;
mod scan;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::bounded_powers::ExponentVector;

pub use fiber::{check_fiber_connectivity, fibers, ConnectivityReport, DegreeStatus, Fiber, FiberViolation};
pub use scan::{conjecture_scan, scan_instance, InstanceResult, InstanceStatus, ScanReport};

/// `z_i z_j - z_i0 z_j0` with 0-based member indices, stored with `i <= j`,
/// `i0 <= j0` and `(i, j) < (i0, j0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SymExchangeBinomial {
    pub i: usize,
    pub j: usize,
    pub i0: usize,
    pub j0: usize,
}

impl SymExchangeBinomial {
    /// Canonical form of `z_a z_b - z_c z_d`; `None` when the two sides agree.
    pub fn canonical(a: usize, b: usize, c: usize, d: usize) -> Option<Self> {
        let left = (a.min(b), a.max(b));
        let right = (c.min(d), c.max(d));
        if left == right {
            return None;
        }
        let (lo, hi) = if left < right { (left, right) } else { (right, left) };
        Some(SymExchangeBinomial { i: lo.0, j: lo.1, i0: hi.0, j0: hi.1 })
    }

    /// Parses `"z4*z5 - z3*z6"` or `"z4z5-z3z6"` (1-based) into canonical form.
    pub fn parse(text: &str) -> Option<Self> {
        let idx: Vec<usize> = text
            .split(|ch: char| !ch.is_ascii_digit())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().ok().filter(|&k| k >= 1).map(|k| k - 1))
            .collect::<Option<_>>()?;
        if idx.len() != 4 || text.matches('z').count() != 4 {
            return None;
        }
        SymExchangeBinomial::canonical(idx[0], idx[1], idx[2], idx[3])
    }

    pub fn holds_on(&self, members: &[ExponentVector]) -> bool {
        members[self.i].add(&members[self.j]) == members[self.i0].add(&members[self.j0])
    }
}

impl fmt::Display for SymExchangeBinomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z{}*z{} - z{}*z{}", self.i + 1, self.j + 1, self.i0 + 1, self.j0 + 1)
    }
}

/// Every nontrivial binomial `z_i z_j - z_i0 z_j0` where
/// `w_i0 = x_rho w_i / x_xi` and `w_j0 = x_xi w_j / x_rho` are both members.
pub fn sym_exchange_binomials(members: &[ExponentVector]) -> Vec<SymExchangeBinomial> {
    let index: HashMap<&ExponentVector, usize> = members.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let mut out = BTreeSet::new();
    for (i, u) in members.iter().enumerate() {
        for (j, v) in members.iter().enumerate() {
            if i == j {
                continue;
            }
            for xi in (0..u.len()).filter(|&x| u.get(x) > v.get(x)) {
                for rho in (0..u.len()).filter(|&r| u.get(r) < v.get(r)) {
                    let i0 = index.get(&u.exchange(xi, rho).unwrap());
                    let j0 = index.get(&v.exchange(rho, xi).unwrap());
                    if let (Some(&i0), Some(&j0)) = (i0, j0) {
                        out.extend(SymExchangeBinomial::canonical(i, j, i0, j0));
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}
