use serde_json::json;

use super::{ClassificationVerdict, Rule};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Trees: `P_6`, or a star whose leaves each carry at most one pendant edge.
/// The second shape is exactly a centre `c` with every vertex within
/// distance two and every neighbour of `c` of degree at most two.
pub fn classify_tree(g: &Graph) -> Result<ClassificationVerdict> {
    let probe = g.structure_probe();
    if !probe.is_tree {
        return Err(Error::NotATree);
    }
    let n = g.n();
    let is_path = probe.leaves.len() == 2 && probe.degrees.iter().all(|&d| d <= 2);
    if is_path && n == 6 {
        return Ok(ClassificationVerdict::new(true, Rule::TreePath6, json!({ "path": 6 })));
    }
    for c in 0..n {
        if g.neighbors(c).any(|u| g.degree(u) > 2) {
            continue;
        }
        let near = g.neighbors(c).fold(g.neighbor_mask(c) | 1 << c, |m, u| m | g.neighbor_mask(u));
        if near.count_ones() as usize == n {
            let whiskers = g.neighbors(c).filter(|&u| g.degree(u) == 2).count();
            let detail = json!({ "centre": c + 1, "leaves": g.degree(c), "whiskers": whiskers });
            return Ok(ClassificationVerdict::new(true, Rule::TreeStarWhisker, detail));
        }
    }
    let branch: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 3).map(|v| v + 1).collect();
    Ok(ClassificationVerdict::new(false, Rule::TreeExcluded, json!({ "branch_vertices": branch })))
}

/// Path lengths hanging from each cycle vertex.
pub type Legs = Vec<Vec<usize>>;

/// For a unicyclic graph: the cycle in cyclic order and, for each cycle
/// vertex, the lengths of the paths hanging from it (longest first). `None`
/// when some hanging tree is not a union of paths from its cycle vertex.
pub fn legs(g: &Graph) -> Result<(Vec<usize>, Option<Legs>)> {
    let cycle = g.structure_probe().cycle.ok_or(Error::NotUnicyclic)?.vertices;
    let on_cycle = cycle.iter().fold(0u64, |m, &v| m | 1 << v);
    let mut out = Vec::with_capacity(cycle.len());
    for &v in &cycle {
        let mut lens = Vec::new();
        for start in g.neighbors(v).filter(|&w| on_cycle >> w & 1 == 0) {
            let (mut prev, mut cur, mut len) = (v, start, 1);
            loop {
                if g.degree(cur) > 2 {
                    return Ok((cycle, None));
                }
                match g.neighbors(cur).find(|&w| w != prev) {
                    Some(next) => {
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    None => break,
                }
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        out.push(lens);
    }
    Ok((cycle, Some(out)))
}

pub fn classify_unicyclic(g: &Graph) -> Result<ClassificationVerdict> {
    let probe = g.structure_probe();
    if !probe.is_unicyclic {
        return Err(Error::NotUnicyclic);
    }
    let (cycle, legs) = legs(g)?;
    let len = cycle.len();
    if len >= 8 {
        return Ok(ClassificationVerdict::new(false, Rule::UnicyclicLongCycle, json!({ "cycle_length": len })));
    }
    if len >= 5 {
        let alpha = g.independence_number()?;
        let detail = json!({ "cycle_length": len, "independence_number": alpha });
        return Ok(ClassificationVerdict::new(alpha <= 3, Rule::UnicyclicIndependence, detail));
    }
    let cycle1: Vec<usize> = cycle.iter().map(|v| v + 1).collect();
    let detail = json!({ "cycle_length": len, "cycle": cycle1, "legs": legs });
    let matched = legs.as_deref().and_then(|l| if len == 4 { square(l) } else { triangle(l) });
    Ok(match (len, matched) {
        (4, Some(k)) => ClassificationVerdict::new(true, Rule::UnicyclicSquare(k), detail),
        (4, None) => ClassificationVerdict::new(false, Rule::UnicyclicSquareExcluded, detail),
        (_, Some(k)) => ClassificationVerdict::new(true, Rule::UnicyclicTriangle(k), detail),
        (_, None) => ClassificationVerdict::new(false, Rule::UnicyclicTriangleExcluded, detail),
    })
}

fn square(legs: &[Vec<usize>]) -> Option<u8> {
    if legs.iter().all(|l| l.is_empty() || l == &[1]) {
        return Some(1);
    }
    for i in 0..4 {
        let opposite = (i + 2) % 4;
        let rest_bare = (0..4).filter(|&j| j != i && j != opposite).all(|j| legs[j].is_empty());
        if legs[i] == [2] && legs[opposite] == [1] && rest_bare {
            return Some(2);
        }
    }
    let mut all: Vec<usize> = legs.concat();
    all.sort_unstable();
    (all == [2]).then_some(3)
}

fn triangle(legs: &[Vec<usize>]) -> Option<u8> {
    if legs.iter().all(|l| l.len() <= 1 && l.iter().all(|&x| x <= 2)) {
        return Some(1);
    }
    let bearing: Vec<&Vec<usize>> = legs.iter().filter(|l| !l.is_empty()).collect();
    if bearing.len() == 1 && bearing[0] == &[3] {
        return Some(2);
    }
    (bearing.len() == 1 && bearing[0].iter().all(|&x| x <= 2)).then_some(3)
}
