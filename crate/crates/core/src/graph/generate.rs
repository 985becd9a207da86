//! Exhaustive generation of unlabeled trees and unicyclic graphs.
//!
//! Graphs are grown one leaf at a time and deduplicated by a canonical code:
//! AHU codes rooted at the centre for trees, and the lexicographically least
//! rotation/reflection of the hanging-tree codes around the cycle for
//! unicyclic graphs. Every returned graph is relabelled from its code, so the
//! output does not depend on the generation path: unicyclic graphs carry the
//! cycle on `x1..xl` in order.

use std::collections::BTreeMap;

use super::Graph;

/// All trees on exactly `n >= 2` vertices, up to isomorphism.
pub fn trees(n: usize) -> Vec<Graph> {
    assert!(n >= 2, "trees need at least two vertices");
    let mut level: BTreeMap<String, Graph> = BTreeMap::new();
    let k2 = Graph::new(2, &[(1, 2)]).unwrap();
    level.insert(tree_code(&k2).0, k2);
    for _ in 2..n {
        level = grow(&level, tree_code);
    }
    level.into_values().collect()
}

/// All connected unicyclic graphs on exactly `n >= 3` vertices, up to isomorphism.
pub fn unicyclic(n: usize) -> Vec<Graph> {
    assert!(n >= 3, "unicyclic graphs need at least three vertices");
    let mut level: BTreeMap<String, Graph> = BTreeMap::new();
    for size in 3..=n {
        if size > 3 {
            level = grow(&level, unicyclic_code);
        }
        let cycle = Graph::parse(&format!("cycle:{size}")).unwrap();
        let (code, g) = unicyclic_code(&cycle);
        level.insert(code, g);
    }
    level.into_values().collect()
}

pub fn trees_up_to(max_n: usize) -> Vec<Graph> {
    (2..=max_n).flat_map(trees).collect()
}

pub fn unicyclic_up_to(max_n: usize) -> Vec<Graph> {
    (3..=max_n).flat_map(unicyclic).collect()
}

fn grow(level: &BTreeMap<String, Graph>, canon: impl Fn(&Graph) -> (String, Graph)) -> BTreeMap<String, Graph> {
    let mut next = BTreeMap::new();
    for g in level.values() {
        let n = g.n();
        let mut edges = g.edges_one_based();
        for v in 1..=n {
            edges.push((v, n + 1));
            let h = Graph::new(n + 1, &edges).unwrap();
            edges.pop();
            let (code, relabelled) = canon(&h);
            next.entry(code).or_insert(relabelled);
        }
    }
    next
}

/// AHU code of the tree hanging from `v`, never entering `parent` or any
/// vertex in `blocked`.
fn rooted_code(g: &Graph, v: usize, parent: usize, blocked: u64) -> String {
    let mut kids: Vec<String> = g
        .neighbors(v)
        .filter(|&w| w != parent && blocked >> w & 1 == 0)
        .map(|w| rooted_code(g, w, v, blocked))
        .collect();
    kids.sort_unstable();
    format!("({})", kids.concat())
}

/// Appends the vertices of the tree hanging from `v` in canonical BFS order.
fn push_hanging(g: &Graph, root: usize, blocked: u64, order: &mut Vec<usize>) {
    let mut frontier = vec![(root, usize::MAX)];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (v, parent) in frontier {
            let mut kids: Vec<(String, usize)> = g
                .neighbors(v)
                .filter(|&w| w != parent && blocked >> w & 1 == 0)
                .map(|w| (rooted_code(g, w, v, blocked), w))
                .collect();
            kids.sort();
            for (_, w) in kids {
                order.push(w);
                next.push((w, v));
            }
        }
        frontier = next;
    }
}

fn relabel(g: &Graph, order: &[usize]) -> Graph {
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i + 1;
    }
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(a, b)| (pos[a], pos[b])).collect();
    Graph::new(g.n(), &edges).unwrap()
}

fn centres(g: &Graph) -> Vec<usize> {
    let mut deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; g.n()];
    let mut remaining = g.n();
    let mut layer: Vec<usize> = (0..g.n()).filter(|&v| deg[v] <= 1).collect();
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            alive[v] = false;
            remaining -= 1;
            for w in g.neighbors(v) {
                if alive[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    (0..g.n()).filter(|&v| alive[v]).collect()
}

pub(crate) fn tree_code(g: &Graph) -> (String, Graph) {
    let (code, root) = centres(g).into_iter().map(|c| (rooted_code(g, c, usize::MAX, 0), c)).min().unwrap();
    let mut order = vec![root];
    push_hanging(g, root, 0, &mut order);
    (format!("T{code}"), relabel(g, &order))
}

pub(crate) fn unicyclic_code(g: &Graph) -> (String, Graph) {
    let cycle = g.structure_probe().cycle.expect("graph must be unicyclic").vertices;
    let len = cycle.len();
    let blocked = cycle.iter().fold(0u64, |m, &v| m | 1 << v);
    let hanging: Vec<String> = cycle.iter().map(|&v| rooted_code(g, v, usize::MAX, blocked)).collect();
    let mut best: Option<(Vec<&str>, Vec<usize>)> = None;
    for start in 0..len {
        for dir in [1, len - 1] {
            let idx: Vec<usize> = (0..len).map(|k| (start + k * dir) % len).collect();
            let seq: Vec<&str> = idx.iter().map(|&i| hanging[i].as_str()).collect();
            if best.as_ref().is_none_or(|(b, _)| seq < *b) {
                best = Some((seq, idx));
            }
        }
    }
    let (seq, idx) = best.unwrap();
    let code = format!("U{len}:{}", seq.join("|"));
    let mut order: Vec<usize> = idx.iter().map(|&i| cycle[i]).collect();
    for &i in &idx {
        push_hanging(g, cycle[i], blocked, &mut order);
    }
    (code, relabel(g, &order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::iso::is_isomorphic;

    #[test]
    fn known_counts() {
        // OEIS A000055 and A001429
        let t: Vec<usize> = (2..=9).map(|n| trees(n).len()).collect();
        assert_eq!(t, vec![1, 1, 2, 3, 6, 11, 23, 47]);
        let u: Vec<usize> = (3..=9).map(|n| unicyclic(n).len()).collect();
        assert_eq!(u, vec![1, 2, 5, 13, 33, 89, 240]);
    }

    #[test]
    fn pairwise_non_isomorphic() {
        for n in 3..=7 {
            let gs = unicyclic(n);
            for i in 0..gs.len() {
                assert!(gs[i].structure_probe().is_unicyclic);
                for j in i + 1..gs.len() {
                    assert!(!is_isomorphic(&gs[i], &gs[j]));
                }
            }
        }
    }

    #[test]
    fn cycle_sits_on_first_vertices() {
        for g in unicyclic(7) {
            let cyc = g.structure_probe().cycle.unwrap();
            let mut vs = cyc.vertices.clone();
            vs.sort_unstable();
            assert_eq!(vs, (0..cyc.len).collect::<Vec<_>>());
            for i in 0..cyc.len {
                assert!(g.has_edge(i, (i + 1) % cyc.len));
            }
        }
    }

    #[test]
    fn codes_ignore_labels() {
        let a = Graph::parse("template:c3pathpend").unwrap();
        let b = Graph::new(7, &[(7, 6), (7, 5), (6, 5), (7, 1), (1, 2), (2, 3), (6, 4)]).unwrap();
        assert_eq!(unicyclic_code(&a).0, unicyclic_code(&b).0);
    }
}
