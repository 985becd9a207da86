//! Brute-force induced-subgraph embedding for small graphs.
//!
//! Used for locating a known counterexample graph inside a larger one and as
//! the reference matcher when testing the structural template checks.

use super::Graph;

/// An injective map `pattern -> target` preserving both adjacency and
/// non-adjacency, as `map[pattern_vertex] = target_vertex`.
pub fn find_induced_embedding(pattern: &Graph, target: &Graph) -> Option<Vec<usize>> {
    all_induced_embeddings(pattern, target, 1).pop()
}

/// Up to `limit` distinct induced embeddings, in lexicographic order of the
/// image tuple.
pub fn all_induced_embeddings(pattern: &Graph, target: &Graph, limit: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if pattern.n() > target.n() || limit == 0 {
        return out;
    }
    // match high-degree pattern vertices first, each next vertex adjacent to
    // an earlier one when possible
    let order = search_order(pattern);
    let mut map = vec![usize::MAX; pattern.n()];
    let mut used = 0u64;
    extend(pattern, target, &order, 0, &mut map, &mut used, limit, &mut out);
    out
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da: Vec<usize> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    da == db && find_induced_embedding(a, b).is_some()
}

fn search_order(p: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(p.n());
    let mut placed = vec![false; p.n()];
    while order.len() < p.n() {
        let next = (0..p.n())
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let touching = order.iter().filter(|&&u| p.has_edge(u, v)).count();
                (touching, p.degree(v), usize::MAX - v)
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend(
    p: &Graph,
    t: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut u64,
    limit: usize,
    out: &mut Vec<Vec<usize>>,
) {
    if out.len() >= limit {
        return;
    }
    if depth == order.len() {
        out.push(map.to_vec());
        return;
    }
    let v = order[depth];
    for w in 0..t.n() {
        if *used >> w & 1 == 1 || t.degree(w) < p.degree(v) {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| p.has_edge(u, v) == t.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        *used |= 1 << w;
        extend(p, t, order, depth + 1, map, used, limit, out);
        *used &= !(1 << w);
        map[v] = usize::MAX;
        if out.len() >= limit {
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_inside_cycle() {
        let p4 = Graph::parse("path:4").unwrap();
        let c6 = Graph::parse("cycle:6").unwrap();
        let c4 = Graph::parse("cycle:4").unwrap();
        let m = find_induced_embedding(&p4, &c6).unwrap();
        for &(a, b) in p4.edges() {
            assert!(c6.has_edge(m[a], m[b]));
        }
        // every 4 vertices of C_4 induce the whole cycle, never a path
        assert!(find_induced_embedding(&p4, &c4).is_none());
    }

    #[test]
    fn isomorphism_respects_relabelling() {
        let a = Graph::new(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]).unwrap();
        let b = Graph::new(5, &[(1, 3), (3, 5), (5, 2), (2, 4), (4, 1)]).unwrap();
        assert!(is_isomorphic(&a, &b));
        let star = Graph::parse("star:4").unwrap();
        let p5 = Graph::parse("path:5").unwrap();
        assert!(!is_isomorphic(&star, &p5));
    }
}
