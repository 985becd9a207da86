//! The template classifiers against a naive matcher: every positive shape is
//! built explicitly, and a graph counts as positive when it is isomorphic to
//! one of them. Cycle lengths 5 to 7 use a brute-force independence number.

use edgepowers::classify::{classify, classify_cycle, classify_path, classify_tree, classify_unicyclic};
use edgepowers::graph::generate::{trees_up_to, unicyclic_up_to};
use edgepowers::graph::iso::is_isomorphic;
use edgepowers::Graph;

const MAX_N: usize = 9;

struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn cycle(len: usize) -> Self {
        let edges = (1..=len).map(|i| (i, i % len + 1)).collect();
        Builder { n: len, edges }
    }

    fn star(leaves: usize) -> Self {
        Builder { n: leaves + 1, edges: (2..=leaves + 1).map(|v| (1, v)).collect() }
    }

    fn path(len: usize) -> Self {
        Builder { n: len, edges: (1..len).map(|i| (i, i + 1)).collect() }
    }

    /// Hangs a path with `len` edges from vertex `at`.
    fn hang(mut self, at: usize, len: usize) -> Self {
        let mut prev = at;
        for _ in 0..len {
            self.n += 1;
            self.edges.push((prev, self.n));
            prev = self.n;
        }
        self
    }

    fn build(self) -> Option<Graph> {
        (self.n <= MAX_N).then(|| Graph::new(self.n, &self.edges).unwrap())
    }
}

fn positive_trees() -> Vec<Graph> {
    let mut out = vec![Builder::path(6).build().unwrap()];
    for leaves in 1..MAX_N {
        for whiskers in 0..=leaves {
            let b = (0..whiskers).fold(Builder::star(leaves), |b, k| b.hang(k + 2, 1));
            out.extend(b.build());
        }
    }
    out
}

fn positive_unicyclic() -> Vec<Graph> {
    let mut out = Vec::new();
    // C4 with at most one pendant per vertex
    for mask in 0..16usize {
        let b = (0..4).filter(|i| mask >> i & 1 == 1).fold(Builder::cycle(4), |b, i| b.hang(i + 1, 1));
        out.extend(b.build());
    }
    // C4 with a path of length two at x1 and a pendant at the opposite vertex
    out.extend(Builder::cycle(4).hang(1, 2).hang(3, 1).build());
    out.extend(Builder::cycle(4).hang(1, 2).build());
    // C3 with at most one path of length at most two per vertex
    for a in 0..=2 {
        for b in 0..=2 {
            for c in 0..=2 {
                out.extend(Builder::cycle(3).hang(1, a).hang(2, b).hang(3, c).build());
            }
        }
    }
    out.extend(Builder::cycle(3).hang(1, 3).build());
    // C3 with any number of paths of length one or two at x1
    for ones in 0..=MAX_N {
        for twos in 0..=MAX_N / 2 {
            let b = (0..ones).fold(Builder::cycle(3), |b, _| b.hang(1, 1));
            out.extend((0..twos).fold(b, |b, _| b.hang(1, 2)).build());
        }
    }
    out
}

fn brute_independence(g: &Graph) -> usize {
    (0u32..1 << g.n())
        .filter(|&s| g.edges().iter().all(|&(a, b)| s >> a & 1 == 0 || s >> b & 1 == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

fn cycle_length(g: &Graph) -> usize {
    // repeatedly strip leaves; what remains is the cycle
    let mut alive: Vec<bool> = vec![true; g.n()];
    loop {
        let leaf = (0..g.n()).find(|&v| alive[v] && g.neighbors(v).filter(|&u| alive[u]).count() == 1);
        match leaf {
            Some(v) => alive[v] = false,
            None => return alive.iter().filter(|&&a| a).count(),
        }
    }
}

#[test]
fn trees_match_naive_matcher() {
    let positives = positive_trees();
    let corpus = trees_up_to(MAX_N);
    assert_eq!(corpus.len(), 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47);
    let mut sep = 0;
    for g in &corpus {
        let expected = positives.iter().any(|p| is_isomorphic(p, g));
        let verdict = classify_tree(g).unwrap();
        assert_eq!(verdict.sep, expected, "{g:?} -> {}", verdict.to_json());
        assert_eq!(classify(g).unwrap().sep, expected);
        sep += usize::from(expected);
    }
    assert!(sep > 10);
}

#[test]
fn unicyclic_graphs_match_naive_matcher() {
    let positives = positive_unicyclic();
    let corpus = unicyclic_up_to(MAX_N);
    assert_eq!(corpus.len(), 1 + 2 + 5 + 13 + 33 + 89 + 240);
    for g in &corpus {
        let len = cycle_length(g);
        let expected = match len {
            3 | 4 => positives.iter().any(|p| is_isomorphic(p, g)),
            5..=7 => brute_independence(g) <= 3,
            _ => false,
        };
        let verdict = classify_unicyclic(g).unwrap();
        assert_eq!(verdict.sep, expected, "{g:?} -> {}", verdict.to_json());
    }
}

#[test]
fn named_families_agree_with_general_classifiers() {
    for n in 3..=12 {
        let g = Graph::parse(&format!("cycle:{n}")).unwrap();
        assert_eq!(classify_cycle(n).unwrap().sep, classify_unicyclic(&g).unwrap().sep, "C{n}");
    }
    for n in 2..=12 {
        let g = Graph::parse(&format!("path:{n}")).unwrap();
        assert_eq!(classify_path(n).unwrap().sep, classify_tree(&g).unwrap().sep, "P{n}");
    }
    assert!(classify_cycle(2).is_err());
    assert!(classify_path(1).is_err());
}

#[test]
fn rule_tags() {
    let tag = |spec: &str| classify(&Graph::parse(spec).unwrap()).unwrap().rule.tag();
    assert_eq!(tag("path:6"), "tree(i)");
    assert_eq!(tag("star-whisker:3,2"), "tree(ii)");
    assert_eq!(tag("template:c4pendall"), "unicyclic(iii)(1)");
    assert_eq!(tag("template:c4pathpendad"), "unicyclic(iii)(2)");
    assert_eq!(tag("template:c3path3"), "unicyclic(iv)(2)");
    assert_eq!(tag("template:c6pend"), "unicyclic(ii)");
    assert_eq!(tag("cycle:9"), "unicyclic(i)");
}
