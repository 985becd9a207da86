use std::collections::BTreeSet;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::bounded_powers::ExponentVector;
use crate::error::{Error, Result};

/// Largest ground set accepted.
pub const MAX_GROUND: usize = 6;

/// A normalized, monotone, submodular set function on `{0..k}`, stored by
/// subset bitmask.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubmodularFunction {
    k: usize,
    values: Vec<u32>,
}

impl SubmodularFunction {
    pub fn new(k: usize, values: Vec<u32>) -> Result<Self> {
        if k > MAX_GROUND {
            return Err(Error::InvalidSubmodular(format!("ground set of size {k} exceeds {MAX_GROUND}")));
        }
        if values.len() != 1 << k {
            return Err(Error::InvalidSubmodular(format!("expected {} values, got {}", 1 << k, values.len())));
        }
        if values[0] != 0 {
            return Err(Error::InvalidSubmodular("value on the empty set must be 0".into()));
        }
        for a in 0..values.len() {
            for i in 0..k {
                if values[a | 1 << i] < values[a] {
                    return Err(Error::InvalidSubmodular(format!("not monotone at subset {a:#b}")));
                }
            }
            for b in 0..values.len() {
                if values[a] + values[b] < values[a | b] + values[a & b] {
                    return Err(Error::InvalidSubmodular(format!("not submodular on subsets {a:#b} and {b:#b}")));
                }
            }
        }
        Ok(SubmodularFunction { k, values })
    }

    /// A random integer polymatroid rank function with singleton values up to
    /// `max_singleton`. Values are drawn subset by subset in order of size,
    /// each uniformly between the monotone lower bound and the local
    /// submodular upper bound; a draw with an empty range starts over.
    pub fn random<R: Rng>(k: usize, max_singleton: u32, rng: &mut R) -> Result<Self> {
        if k > MAX_GROUND {
            return Err(Error::InvalidSubmodular(format!("ground set of size {k} exceeds {MAX_GROUND}")));
        }
        let mut order: Vec<usize> = (1..1usize << k).collect();
        order.sort_by_key(|a| a.count_ones());
        'retry: loop {
            let mut values = vec![0u32; 1 << k];
            for &a in &order {
                let members: Vec<usize> = (0..k).filter(|&i| a >> i & 1 == 1).collect();
                if members.len() == 1 {
                    values[a] = rng.gen_range(0..=max_singleton);
                    continue;
                }
                let lo = members.iter().map(|&i| values[a & !(1 << i)]).max().unwrap();
                let mut hi = u32::MAX;
                for (p, &i) in members.iter().enumerate() {
                    for &j in &members[p + 1..] {
                        let (ai, aj) = (a & !(1 << i), a & !(1 << j));
                        hi = hi.min(values[ai] + values[aj] - values[ai & aj]);
                    }
                }
                if lo > hi {
                    continue 'retry;
                }
                values[a] = rng.gen_range(lo..=hi);
            }
            return SubmodularFunction::new(k, values);
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn value(&self, subset: usize) -> u32 {
        self.values[subset]
    }
}

/// Integer bases: `a >= 0` with `sum over A of a_i <= rho(A)` for every `A`
/// and `sum a_i = rho(ground set)`.
pub fn enumerate_polymatroid_base(rho: &SubmodularFunction) -> BTreeSet<ExponentVector> {
    let k = rho.k;
    let full = (1usize << k) - 1;
    let mut out = BTreeSet::new();
    let mut a = vec![0u32; k];
    fill(rho, 0, &mut a, full, &mut out);
    out
}

fn fill(rho: &SubmodularFunction, i: usize, a: &mut Vec<u32>, full: usize, out: &mut BTreeSet<ExponentVector>) {
    let fits = |a: &[u32], upto: usize| {
        (1..=full).filter(|s| s >> upto == 0).all(|s| {
            let load: u32 = (0..upto).filter(|&j| s >> j & 1 == 1).map(|j| a[j]).sum();
            load <= rho.value(s)
        })
    };
    if i == rho.k {
        if a.iter().sum::<u32>() == rho.value(full) {
            out.insert(ExponentVector::new(a.clone()));
        }
        return;
    }
    for x in 0..=rho.value(1 << i) {
        a[i] = x;
        if fits(a, i + 1) {
            fill(rho, i + 1, a, full, out);
        }
    }
    a[i] = 0;
}
