use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::sym_exchange_binomials;
use crate::bounded_powers::{ExponentVector, Limits};
use crate::error::{Error, Result};
use crate::exec::Execution;

/// All `m`-multisets of member indices (sorted tuples) with one product.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fiber {
    pub degree: usize,
    pub product: ExponentVector,
    pub nodes: Vec<Vec<usize>>,
}

/// Two multisets of one fiber that no chain of quadratic moves connects.
/// Their difference is a kernel binomial outside the ideal generated by the
/// symmetric exchange binomials, in that degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberViolation {
    pub degree: usize,
    pub product: ExponentVector,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeStatus {
    pub degree: usize,
    pub fibers: usize,
    pub nontrivial: usize,
    pub connected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub degrees: Vec<DegreeStatus>,
    pub violation: Option<FiberViolation>,
}

impl ConnectivityReport {
    pub fn connected(&self) -> bool {
        self.violation.is_none()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let violation = self.violation.as_ref().map(|v| {
            let one = |t: &[usize]| t.iter().map(|k| k + 1).collect::<Vec<_>>();
            serde_json::json!({
                "degree": v.degree,
                "product": v.product,
                "a": one(&v.a),
                "b": one(&v.b),
            })
        });
        serde_json::json!({ "connected": self.connected(), "degrees": self.degrees, "violation": violation })
    }
}

fn multiset_count(s: usize, m: usize) -> u64 {
    // C(s + m - 1, m), saturating
    let mut c: u128 = 1;
    for k in 0..m as u128 {
        c = c * (s as u128 + k) / (k + 1);
        if c > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    c as u64
}

/// Groups every `m`-multiset of members by its product. Singleton fibers are
/// included. Fibers come out in increasing order of product.
pub fn fibers(members: &[ExponentVector], m: usize, limits: &Limits) -> Result<Vec<Fiber>> {
    let s = members.len();
    let count = multiset_count(s, m);
    if count > limits.multisets {
        return Err(Error::BudgetExceeded {
            limit: limits.multisets,
            context: format!("listing {count} multisets of degree {m} over {s} generators"),
        });
    }
    let mut groups: BTreeMap<ExponentVector, Vec<Vec<usize>>> = BTreeMap::new();
    if s == 0 || m == 0 {
        return Ok(Vec::new());
    }
    let mut t = vec![0usize; m];
    loop {
        let product = t.iter().skip(1).fold(members[t[0]].clone(), |acc, &k| acc.add(&members[k]));
        groups.entry(product).or_default().push(t.clone());
        // next nondecreasing tuple
        let Some(pos) = (0..m).rev().find(|&p| t[p] + 1 < s) else {
            break;
        };
        let next = t[pos] + 1;
        t[pos..].iter_mut().for_each(|x| *x = next);
    }
    Ok(groups.into_iter().map(|(product, nodes)| Fiber { degree: m, product, nodes }).collect())
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let up = parent[y];
        parent[y] = r;
        y = up;
    }
    r
}

/// First pair of nodes in different components, or `None` when connected.
fn disconnected_pair(fiber: &Fiber, moves: &HashMap<(usize, usize), Vec<(usize, usize)>>) -> Option<(usize, usize)> {
    let n = fiber.nodes.len();
    if n < 2 {
        return None;
    }
    let index: HashMap<&[usize], usize> = fiber.nodes.iter().enumerate().map(|(k, t)| (t.as_slice(), k)).collect();
    let mut parent: Vec<usize> = (0..n).collect();
    for (k, t) in fiber.nodes.iter().enumerate() {
        for a in 0..t.len() {
            for b in a + 1..t.len() {
                if b > a + 1 && t[b] == t[b - 1] {
                    continue;
                }
                let Some(targets) = moves.get(&(t[a], t[b])) else {
                    continue;
                };
                for &(c, d) in targets {
                    let mut u: Vec<usize> = t.clone();
                    u[a] = c;
                    u[b] = d;
                    u.sort_unstable();
                    let other = index[u.as_slice()];
                    let (x, y) = (find(&mut parent, k), find(&mut parent, other));
                    if x != y {
                        parent[x] = y;
                    }
                }
            }
        }
    }
    let root = find(&mut parent, 0);
    (1..n).find(|&k| find(&mut parent, k) != root).map(|k| (0, k))
}

/// Checks for each degree `2..=m_max` that every fiber is connected under
/// replacing a pair `z_i z_j` by `z_i0 z_j0` for a symmetric exchange
/// binomial, in either direction. Stops at the first disconnected fiber.
pub fn check_fiber_connectivity(
    members: &[ExponentVector],
    m_max: usize,
    limits: &Limits,
    exec: Execution,
) -> Result<ConnectivityReport> {
    let mut moves: HashMap<(usize, usize), Vec<(usize, usize)>> = HashMap::new();
    for b in sym_exchange_binomials(members) {
        moves.entry((b.i, b.j)).or_default().push((b.i0, b.j0));
        moves.entry((b.i0, b.j0)).or_default().push((b.i, b.j));
    }
    let mut degrees = Vec::new();
    for m in 2..=m_max {
        let fs = fibers(members, m, limits)?;
        let nontrivial: Vec<&Fiber> = fs.iter().filter(|f| f.nodes.len() > 1).collect();
        let bad = exec.find_map_first(&nontrivial, |f| disconnected_pair(f, &moves).map(|p| (*f, p)));
        degrees.push(DegreeStatus {
            degree: m,
            fibers: fs.len(),
            nontrivial: nontrivial.len(),
            connected: bad.is_none(),
        });
        if let Some((f, (a, b))) = bad {
            let violation =
                FiberViolation { degree: m, product: f.product.clone(), a: f.nodes[a].clone(), b: f.nodes[b].clone() };
            return Ok(ConnectivityReport { degrees, violation: Some(violation) });
        }
    }
    Ok(ConnectivityReport { degrees, violation: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    #[test]
    fn counts() {
        assert_eq!(multiset_count(6, 2), 21);
        assert_eq!(multiset_count(6, 3), 56);
        assert_eq!(multiset_count(1, 5), 1);
    }

    #[test]
    fn singleton_member() {
        let fs = fibers(&[ev(&[1, 1])], 2, &Limits::default()).unwrap();
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].nodes, vec![vec![0, 0]]);
        let r = check_fiber_connectivity(&[ev(&[1, 1])], 3, &Limits::default(), Execution::default()).unwrap();
        assert!(r.connected());
    }

    #[test]
    fn distinct_products_give_singletons() {
        let members = [ev(&[2, 0, 0]), ev(&[0, 2, 0]), ev(&[0, 0, 2])];
        let fs = fibers(&members, 2, &Limits::default()).unwrap();
        assert_eq!(fs.len(), 6);
        assert!(fs.iter().all(|f| f.nodes.len() == 1));
    }

    #[test]
    fn swap_moves_connect_squares() {
        // x1^2 * x2^2 = (x1 x2)^2 is a single exchange
        let members = [ev(&[2, 0]), ev(&[1, 1]), ev(&[0, 2])];
        let r = check_fiber_connectivity(&members, 3, &Limits::default(), Execution::Sequential).unwrap();
        assert!(r.connected());
        assert_eq!(r.degrees.len(), 2);
    }

    #[test]
    fn disconnected_without_moves() {
        // a * b = c^2 but no single-variable swap stays inside the set
        let members = [ev(&[2, 2, 0, 0]), ev(&[1, 1, 1, 1]), ev(&[0, 0, 2, 2])];
        assert!(super::super::sym_exchange_binomials(&members).is_empty());
        let r = check_fiber_connectivity(&members, 3, &Limits::default(), Execution::Parallel).unwrap();
        let v = r.violation.unwrap();
        assert_eq!(v.degree, 2);
        assert_eq!((v.a, v.b), (vec![0, 2], vec![1, 1]));
    }

    #[test]
    fn final_example_quadric_fiber() {
        let g = crate::Graph::parse("template:c3pathpend").unwrap();
        let caps = crate::CapVector::new(vec![1, 1, 1, 2, 1, 1, 1]).unwrap();
        let members = crate::enumerate_generators(&g, &caps).unwrap().ordered();
        let fs = fibers(&members, 2, &Limits::default()).unwrap();
        assert_eq!(fs.iter().map(|f| f.nodes.len()).sum::<usize>(), 21);
        let f = fs.iter().find(|f| f.nodes.contains(&vec![3, 4])).unwrap();
        assert!(f.nodes.contains(&vec![2, 5]));
        assert!(f.nodes.iter().all(|t| members[t[0]].add(&members[t[1]]) == f.product));
    }

    #[test]
    fn budget() {
        let members: Vec<ExponentVector> = (0..50).map(|k| ev(&[k, 50 - k])).collect();
        let tight = Limits { multisets: 100, ..Limits::default() };
        assert!(matches!(fibers(&members, 2, &tight), Err(Error::BudgetExceeded { limit: 100, .. })));
    }
}
