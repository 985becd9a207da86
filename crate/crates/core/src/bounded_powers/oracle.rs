use std::collections::BTreeSet;

use super::{CapVector, ExponentVector, GeneratorSet};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest cap sum the oracle accepts.
pub const ORACLE_CAP_SUM_LIMIT: u32 = 24;

/// Computes `(delta, W)` without the search engine: level `q` holds every
/// product of `q` edges bounded by `c`, built by multiplying each vector of
/// level `q - 1` by each edge. `delta` is the last nonempty level and `W` is
/// that level. No normalization, pruning or memoization.
pub fn brute_force_oracle(g: &Graph, caps: &CapVector) -> Result<(u32, GeneratorSet)> {
    caps.check_len(g)?;
    let sum = caps.sum();
    if sum > ORACLE_CAP_SUM_LIMIT {
        return Err(Error::OracleBound { sum, max: ORACLE_CAP_SUM_LIMIT });
    }
    let c = caps.as_slice();
    let mut level = BTreeSet::from([vec![0u32; g.n()]]);
    let mut q = 0;
    loop {
        let mut next = BTreeSet::new();
        for m in &level {
            for &(a, b) in g.edges() {
                if m[a] < c[a] && m[b] < c[b] {
                    let mut grown = m.clone();
                    grown[a] += 1;
                    grown[b] += 1;
                    next.insert(grown);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        level = next;
        q += 1;
    }
    let members = level.into_iter().map(ExponentVector::new).collect();
    Ok((q, GeneratorSet::from_parts(g.clone(), caps.clone(), q, members)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_closed_forms() {
        let k2 = Graph::parse("complete:2").unwrap();
        let (d, w) = brute_force_oracle(&k2, &CapVector::new(vec![4, 6]).unwrap()).unwrap();
        assert_eq!(d, 4);
        assert_eq!(w.len(), 1);

        let c4 = Graph::parse("cycle:4").unwrap();
        let (d, w) = brute_force_oracle(&c4, &CapVector::uniform(4, 1).unwrap()).unwrap();
        assert_eq!(d, 2);
        assert_eq!(w.ordered(), vec![ExponentVector::new(vec![1, 1, 1, 1])]);
    }

    #[test]
    fn rejects_large_caps() {
        let k2 = Graph::parse("complete:2").unwrap();
        let err = brute_force_oracle(&k2, &CapVector::new(vec![20, 5]).unwrap()).unwrap_err();
        assert!(matches!(err, Error::OracleBound { sum: 25, max: 24 }));
    }
}
