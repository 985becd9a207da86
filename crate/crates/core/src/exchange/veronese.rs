use std::collections::BTreeSet;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::bounded_powers::ExponentVector;

/// `W = w * V(d0, a')`: every `w + e` with `0 <= e <= a'` and `|e| = d0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VeroneseDecomposition {
    pub w: ExponentVector,
    pub d0: u32,
    pub a_prime: Vec<u32>,
    /// 0-based variables with `a'_i > 0`.
    pub support: Vec<usize>,
}

impl Serialize for VeroneseDecomposition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("VeroneseDecomposition", 4)?;
        st.serialize_field("w", &self.w)?;
        st.serialize_field("d0", &self.d0)?;
        st.serialize_field("a_prime", &self.a_prime)?;
        let support: Vec<usize> = self.support.iter().map(|i| i + 1).collect();
        st.serialize_field("support", &support)?;
        st.end()
    }
}

/// Number of `e` with `0 <= e_i <= bounds_i` and `|e| = total`.
fn count_bounded(bounds: &[u32], total: u32) -> u128 {
    let mut ways = vec![0u128; total as usize + 1];
    ways[0] = 1;
    for &b in bounds {
        let mut next = vec![0u128; ways.len()];
        for (s, &count) in ways.iter().enumerate() {
            if count == 0 {
                continue;
            }
            for add in 0..=b as usize {
                if s + add > total as usize {
                    break;
                }
                next[s + add] += count;
            }
        }
        ways = next;
    }
    ways[total as usize]
}

/// The only candidate is `w = min`, `a' = max - min` taken coordinatewise.
/// Every member is then of the form `w + e`, so the set is of Veronese type
/// exactly when it is as large as `V(d0, a')`.
pub fn detect_veronese(members: &BTreeSet<ExponentVector>) -> Option<VeroneseDecomposition> {
    let first = members.iter().next()?;
    let n = first.len();
    let degree = first.degree();
    if members.iter().any(|m| m.len() != n || m.degree() != degree) {
        return None;
    }
    let lo: Vec<u32> = (0..n).map(|i| members.iter().map(|m| m.get(i)).min().unwrap()).collect();
    let hi: Vec<u32> = (0..n).map(|i| members.iter().map(|m| m.get(i)).max().unwrap()).collect();
    let a_prime: Vec<u32> = hi.iter().zip(&lo).map(|(h, l)| h - l).collect();
    let d0 = degree - lo.iter().sum::<u32>();
    if count_bounded(&a_prime, d0) != members.len() as u128 {
        return None;
    }
    let support = (0..n).filter(|&i| a_prime[i] > 0).collect();
    Some(VeroneseDecomposition { w: ExponentVector::new(lo), d0, a_prime, support })
}
