//! Seeded random `(G, c)` instances for property checks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::bounded_powers::CapVector;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InstanceShape {
    pub min_n: usize,
    pub max_n: usize,
    pub max_cap: u32,
    /// Caps are lowered at random until their sum is at most this.
    pub cap_sum: Option<u32>,
    pub edge_probability: f64,
}

impl Default for InstanceShape {
    fn default() -> Self {
        InstanceShape { min_n: 2, max_n: 8, max_cap: 3, cap_sum: None, edge_probability: 0.4 }
    }
}

/// A random graph without isolated vertices: each pair is an edge with the
/// given probability, then every isolated vertex is joined to a random other
/// vertex.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    assert!(n >= 2, "a graph without isolated vertices needs two vertices");
    let mut edges = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    for v in 1..=n {
        if !edges.iter().any(|&(a, b)| a == v || b == v) {
            let others: Vec<usize> = (1..=n).filter(|&u| u != v).collect();
            let u = *others.choose(rng).unwrap();
            edges.push((v.min(u), v.max(u)));
        }
    }
    Graph::new(n, &edges).expect("sampled graph is valid")
}

pub fn random_instance<R: Rng>(rng: &mut R, shape: &InstanceShape) -> (Graph, CapVector) {
    let n = rng.gen_range(shape.min_n.max(2)..=shape.max_n);
    let g = random_graph(rng, n, shape.edge_probability);
    let mut caps: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=shape.max_cap)).collect();
    if let Some(bound) = shape.cap_sum {
        let bound = bound.max(n as u32);
        while caps.iter().sum::<u32>() > bound {
            let reducible: Vec<usize> = (0..n).filter(|&i| caps[i] > 1).collect();
            caps[*reducible.choose(rng).unwrap()] -= 1;
        }
    }
    (g, CapVector::new(caps).expect("sampled caps are positive"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn instances_respect_shape() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let shape = InstanceShape { cap_sum: Some(12), ..InstanceShape::default() };
        for _ in 0..200 {
            let (g, c) = random_instance(&mut rng, &shape);
            assert!((2..=8).contains(&g.n()));
            assert_eq!(c.len(), g.n());
            assert!(c.sum() <= 12);
            assert!(c.as_slice().iter().all(|&x| (1..=3).contains(&x)));
        }
    }

    #[test]
    fn seeded_runs_repeat() {
        let a = random_instance(&mut ChaCha8Rng::seed_from_u64(9), &InstanceShape::default());
        let b = random_instance(&mut ChaCha8Rng::seed_from_u64(9), &InstanceShape::default());
        assert_eq!(a, b);
    }
}
