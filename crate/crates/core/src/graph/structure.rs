use std::collections::VecDeque;

use crate::error::{Error, Result};

use super::Graph;

/// The unique cycle of a unicyclic graph, vertices in cyclic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleInfo {
    pub len: usize,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub is_connected: bool,
    pub is_tree: bool,
    pub is_unicyclic: bool,
    pub cycle: Option<CycleInfo>,
    pub leaves: Vec<usize>,
    pub degrees: Vec<usize>,
    pub components: Vec<Vec<usize>>,
}

impl Graph {
    /// Size of a largest independent set. Exact branch and bound over bitmasks.
    pub fn independence_number(&self) -> Result<usize> {
        self.require_search_size()?;
        let all = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        Ok(max_independent(all, &self.adj) as usize)
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges.iter().all(|&(a, b)| self.adj[a] & self.adj[b] == 0)
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn structure_probe(&self) -> StructureReport {
        let components = self.components();
        let is_connected = components.len() == 1;
        let is_tree = is_connected && self.edges.len() + 1 == self.n;
        let is_unicyclic = is_connected && self.edges.len() == self.n;
        let cycle = if is_unicyclic { self.find_cycle() } else { None };
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let leaves = (0..self.n).filter(|&v| degrees[v] == 1).collect();
        StructureReport { is_connected, is_tree, is_unicyclic, cycle, leaves, degrees, components }
    }

    /// Cycle closed by the first DFS back edge found from vertex 0.
    fn find_cycle(&self) -> Option<CycleInfo> {
        fn dfs(g: &Graph, u: usize, parent: &mut [usize], on_path: &mut [bool]) -> Option<Vec<usize>> {
            on_path[u] = true;
            for w in g.neighbors(u) {
                if w == parent[u] {
                    continue;
                }
                if on_path[w] {
                    let mut vertices = vec![u];
                    let mut x = u;
                    while x != w {
                        x = parent[x];
                        vertices.push(x);
                    }
                    return Some(vertices);
                }
                if parent[w] == usize::MAX && w != 0 {
                    parent[w] = u;
                    if let Some(c) = dfs(g, w, parent, on_path) {
                        return Some(c);
                    }
                }
            }
            on_path[u] = false;
            None
        }
        let mut parent = vec![usize::MAX; self.n];
        let mut on_path = vec![false; self.n];
        let vertices = dfs(self, 0, &mut parent, &mut on_path)?;
        Some(CycleInfo { len: vertices.len(), vertices })
    }

    /// Induced subgraph on `V \ {v}`, relabelled in order. `v` is 0-based.
    /// Returns the new graph and, for each old vertex, its new index.
    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, Vec<Option<usize>>)> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange(v + 1));
        }
        if let Some(u) = self.neighbors(v).find(|&u| self.degree(u) == 1) {
            return Err(Error::IsolatedVertex { vertex: v + 1, isolated: u + 1 });
        }
        if self.n == 1 {
            return Err(Error::InvalidGraph("cannot delete the only vertex".into()));
        }
        let map: Vec<Option<usize>> = (0..self.n)
            .map(|u| match u.cmp(&v) {
                std::cmp::Ordering::Less => Some(u),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(u - 1),
            })
            .collect();
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (map[a].unwrap() + 1, map[b].unwrap() + 1))
            .collect();
        Ok((Graph::new(self.n - 1, &edges)?, map))
    }
}

fn max_independent(cands: u64, adj: &[u64]) -> u32 {
    if cands == 0 {
        return 0;
    }
    // vertices with at most one neighbour among the candidates are always safe to take
    let mut best_v = usize::MAX;
    let mut best_deg = 0;
    let mut rest = cands;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[v] & cands).count_ones();
        if d <= 1 {
            return 1 + max_independent(cands & !(1 << v) & !adj[v], adj);
        }
        if d > best_deg {
            best_deg = d;
            best_v = v;
        }
    }
    let bit = 1u64 << best_v;
    let without = max_independent(cands & !bit, adj);
    let with = 1 + max_independent(cands & !bit & !adj[best_v], adj);
    without.max(with)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphFamilySpec::*;

    #[test]
    fn independence_numbers() {
        assert_eq!(Cycle(5).build().unwrap().independence_number().unwrap(), 2);
        assert_eq!(Complete(2).build().unwrap().independence_number().unwrap(), 1);
        let ex = Template("triangle-example".into()).build().unwrap();
        assert_eq!(ex.independence_number().unwrap(), 3);
        assert_eq!(Cycle(8).build().unwrap().independence_number().unwrap(), 4);
    }

    #[test]
    fn triangles() {
        assert!(Cycle(4).build().unwrap().is_triangle_free());
        assert!(!Cycle(3).build().unwrap().is_triangle_free());
        assert!(!Template("triangle-example".into()).build().unwrap().is_triangle_free());
    }

    #[test]
    fn probe_shapes() {
        let p6 = Path(6).build().unwrap().structure_probe();
        assert!(p6.is_tree && !p6.is_unicyclic);
        assert_eq!(p6.leaves, vec![0, 5]);

        let c7p = CyclePendant(7).build().unwrap().structure_probe();
        assert!(c7p.is_unicyclic);
        let cyc = c7p.cycle.unwrap();
        assert_eq!(cyc.len, 7);
        let mut vs = cyc.vertices.clone();
        vs.sort_unstable();
        assert_eq!(vs, (0..7).collect::<Vec<_>>());

        let two = Graph::new(4, &[(1, 2), (3, 4)]).unwrap().structure_probe();
        assert!(!two.is_tree && !two.is_connected);
        assert_eq!(two.components.len(), 2);
    }

    #[test]
    fn cycle_vertices_are_in_cyclic_order() {
        for spec in ["template:c4twopath", "template:c5star", "template:c3path2", "cycle:9"] {
            let g = Graph::parse(spec).unwrap();
            let cyc = g.structure_probe().cycle.unwrap();
            for i in 0..cyc.len {
                assert!(g.has_edge(cyc.vertices[i], cyc.vertices[(i + 1) % cyc.len]), "{spec}");
            }
        }
    }

    #[test]
    fn delete_leaf_from_c3pathpend() {
        let g = Template("c3pathpend".into()).build().unwrap();
        let (h, map) = g.delete_vertex(6).unwrap();
        assert_eq!(map[6], None);
        // hand filter of {12,13,23,14,45,56,27} dropping edges at x7
        assert_eq!(h.edges_one_based(), vec![(1, 2), (1, 3), (1, 4), (2, 3), (4, 5), (5, 6)]);
    }

    #[test]
    fn delete_vertex_errors() {
        let p5 = Path(5).build().unwrap();
        let (p4, _) = p5.delete_vertex(4).unwrap();
        assert_eq!(p4, Path(4).build().unwrap());
        let p4 = Path(4).build().unwrap();
        assert!(matches!(p4.delete_vertex(1), Err(Error::IsolatedVertex { vertex: 2, isolated: 1 })));
        assert!(matches!(p4.delete_vertex(9), Err(Error::VertexOutOfRange(10))));
    }
}
