use serde::Serialize;
use serde_json::json;

use super::{ClassificationVerdict, Rule};
use crate::graph::Graph;

/// Parts and removed matching edges, 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultipartiteShape {
    pub parts: Vec<Vec<usize>>,
    pub matching: Vec<(usize, usize)>,
}

/// Writes `G = K_{n1..nm} - M` if possible, with `m >= 2`.
///
/// In the complement `H` every part is a clique and `M` adds at most one
/// further neighbour to each vertex. The first unassigned vertex `v` thus has
/// part `N_H[v]` minus at most one partner, and we branch on that partner.
pub fn recognize_multipartite(g: &Graph) -> Option<MultipartiteShape> {
    let n = g.n();
    if n > 64 {
        return None;
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let h: Vec<u64> = (0..n).map(|v| all & !g.neighbor_mask(v) & !(1 << v)).collect();
    let mut parts = Vec::new();
    if !assign(&h, 0, &mut parts) || parts.len() < 2 {
        return None;
    }
    let mut matching = Vec::new();
    let mut covered = 0u64;
    for part in &parts {
        for v in bits(*part) {
            let outside = h[v] & !part;
            if outside != 0 {
                let w = outside.trailing_zeros() as usize;
                if covered >> v & 1 == 0 {
                    matching.push((v.min(w), v.max(w)));
                    covered |= 1 << v | 1 << w;
                }
            }
        }
    }
    matching.sort_unstable();
    let mut parts: Vec<Vec<usize>> = parts.into_iter().map(|p| bits(p).collect()).collect();
    parts.sort();
    Some(MultipartiteShape { parts, matching })
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

fn assign(h: &[u64], assigned: u64, parts: &mut Vec<u64>) -> bool {
    let n = h.len();
    let Some(v) = (0..n).find(|&v| assigned >> v & 1 == 0) else {
        return true;
    };
    let closed = h[v] | 1 << v;
    let choices = std::iter::once(None).chain(bits(h[v]).map(Some));
    for partner in choices {
        let part = match partner {
            Some(p) => closed & !(1 << p),
            None => closed,
        };
        if part & assigned != 0 {
            continue;
        }
        let fits = bits(part).all(|u| {
            let inside = h[u] | 1 << u;
            inside & part == part && (h[u] & !part).count_ones() <= 1
        });
        if !fits {
            continue;
        }
        parts.push(part);
        if assign(h, assigned | part, parts) {
            return true;
        }
        parts.pop();
    }
    false
}

pub fn classify_complete_multipartite_minus_matching(g: &Graph) -> Option<ClassificationVerdict> {
    let shape = recognize_multipartite(g)?;
    let parts: Vec<Vec<usize>> = shape.parts.iter().map(|p| p.iter().map(|v| v + 1).collect()).collect();
    let matching: Vec<[usize; 2]> = shape.matching.iter().map(|&(a, b)| [a + 1, b + 1]).collect();
    let detail = json!({ "parts": parts, "matching": matching });
    Some(ClassificationVerdict::new(true, Rule::Multipartite, detail))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recognised() {
        let c4 = recognize_multipartite(&Graph::parse("cycle:4").unwrap()).unwrap();
        assert_eq!(c4.parts, vec![vec![0, 2], vec![1, 3]]);
        assert!(c4.matching.is_empty());

        // K_4 minus a perfect matching is C_4 again, also K_{1,1,1,1} - M
        let g = Graph::new(4, &[(1, 3), (1, 4), (2, 3), (2, 4)]).unwrap();
        assert!(recognize_multipartite(&g).is_some());

        let g = Graph::parse("multipartite:2,2,1/1-3").unwrap();
        // the complement is the path 2-1-3-4, split as {1,2},{3,4},{5} with
        // matching 1-3 or as {1,3},{2},{4},{5} with matching 1-2, 3-4
        let shape = recognize_multipartite(&g).unwrap();
        assert_eq!(shape.parts.len(), 2 + shape.matching.len());
        assert!(recognize_multipartite(&Graph::parse("complete:5").unwrap()).is_some());
    }

    #[test]
    fn rejected() {
        // P_6 misses four edges of K_{3,3}, too many for a matching
        assert!(recognize_multipartite(&Graph::parse("path:6").unwrap()).is_none());
        assert!(recognize_multipartite(&Graph::parse("cycle:7").unwrap()).is_none());
    }

    #[test]
    fn shape_rebuilds_graph() {
        // P_5 is K_{3,2} minus the matching {x1x4, x2x5}
        for spec in ["multipartite:3,2/1-4,2-5", "multipartite:1,2,3/1-2", "cycle:4", "path:4", "path:5"] {
            let g = Graph::parse(spec).unwrap();
            let s = recognize_multipartite(&g).unwrap();
            let part_of = |v: usize| s.parts.iter().position(|p| p.contains(&v)).unwrap();
            for a in 0..g.n() {
                for b in a + 1..g.n() {
                    let expect = part_of(a) != part_of(b) && !s.matching.contains(&(a, b));
                    assert_eq!(g.has_edge(a, b), expect, "{spec} {a} {b}");
                }
            }
        }
    }
}
