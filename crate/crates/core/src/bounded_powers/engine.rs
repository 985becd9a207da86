//! Memoized depth-first search over edge multiplicities.
//!
//! `best(idx, r)` is the largest number of edges drawn from `edges[idx..]`
//! whose product fits under the residual caps `r`. Edges are visited in
//! lexicographic order and each gets a multiplicity, tried from high to low.
//! Only the residual on vertices that still touch an edge at or after `idx`
//! can matter, so the memo key drops the rest.

use std::collections::{BTreeSet, HashMap, HashSet};

use super::{normalize_caps, CapVector, EdgeMultiset, ExponentVector, GeneratorSet, Limits};
use crate::error::{Error, Result};
use crate::graph::Graph;

struct Engine<'a> {
    edges: &'a [(usize, usize)],
    live: Vec<u64>,
    memo: HashMap<(usize, Vec<u32>), u32>,
    nodes: u64,
    limit: u64,
}

impl<'a> Engine<'a> {
    fn new(g: &'a Graph, limit: u64) -> Self {
        let edges = g.edges();
        let mut live = vec![0u64; edges.len() + 1];
        for idx in (0..edges.len()).rev() {
            let (a, b) = edges[idx];
            live[idx] = live[idx + 1] | 1 << a | 1 << b;
        }
        Engine { edges, live, memo: HashMap::new(), nodes: 0, limit }
    }

    fn tick(&mut self, context: impl FnOnce() -> String) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::BudgetExceeded { limit: self.limit, context: context() });
        }
        Ok(())
    }

    fn key(&self, idx: usize, r: &[u32]) -> Vec<u32> {
        let live = self.live[idx];
        (0..r.len()).filter(|&v| live >> v & 1 == 1).map(|v| r[v]).collect()
    }

    fn live_sum(&self, idx: usize, r: &[u32]) -> u32 {
        let live = self.live[idx];
        (0..r.len()).filter(|&v| live >> v & 1 == 1).map(|v| r[v]).sum()
    }

    fn best(&mut self, idx: usize, r: &mut [u32]) -> Result<u32> {
        if idx == self.edges.len() {
            return Ok(0);
        }
        let key = self.key(idx, r);
        if let Some(&v) = self.memo.get(&(idx, key.clone())) {
            return Ok(v);
        }
        self.tick(|| format!("computing delta at edge {} of {}", idx + 1, self.edges.len()))?;
        let (a, b) = self.edges[idx];
        let top = r[a].min(r[b]);
        let mut found = 0;
        for k in (0..=top).rev() {
            r[a] -= k;
            r[b] -= k;
            let bound = k + self.live_sum(idx + 1, r) / 2;
            let got = if bound > found { Some(k + self.best(idx + 1, r)?) } else { None };
            r[a] += k;
            r[b] += k;
            if let Some(got) = got {
                found = found.max(got);
            }
            if found >= k + self.live_sum(idx + 1, r) / 2 {
                // no smaller multiplicity can beat this, since the remaining
                // residual only shrinks the bound further
                break;
            }
        }
        self.memo.insert((idx, key), found);
        Ok(found)
    }
}

fn prepare(g: &Graph, caps: &CapVector) -> Result<Vec<u32>> {
    g.require_search_size()?;
    caps.check_len(g)?;
    Ok(normalize_caps(g, caps)?.as_slice().to_vec())
}

/// The largest `q` such that some product of `q` edges divides `x^c`.
pub fn delta(g: &Graph, caps: &CapVector) -> Result<u32> {
    delta_with(g, caps, &Limits::default())
}

pub fn delta_with(g: &Graph, caps: &CapVector, limits: &Limits) -> Result<u32> {
    let mut r = prepare(g, caps)?;
    Engine::new(g, limits.nodes).best(0, &mut r)
}

/// `W(c, G)`: every distinct exponent vector of a product of `delta` edges
/// bounded by `c`.
pub fn enumerate_generators(g: &Graph, caps: &CapVector) -> Result<GeneratorSet> {
    enumerate_generators_with(g, caps, &Limits::default())
}

pub fn enumerate_generators_with(g: &Graph, caps: &CapVector, limits: &Limits) -> Result<GeneratorSet> {
    let c = prepare(g, caps)?;
    let mut engine = Engine::new(g, limits.nodes);
    let mut r = c.clone();
    let delta = engine.best(0, &mut r)?;
    let mut walk = Walk { c: &c, delta, seen: HashSet::new(), out: BTreeSet::new() };
    walk.visit(&mut engine, 0, 0, &mut r)?;
    Ok(GeneratorSet::from_parts(g.clone(), caps.clone(), delta, walk.out))
}

struct Walk<'c> {
    c: &'c [u32],
    delta: u32,
    seen: HashSet<(usize, Vec<u32>)>,
    out: BTreeSet<ExponentVector>,
}

impl Walk<'_> {
    /// Follows only branches that can still reach `delta` edges.
    fn visit(&mut self, e: &mut Engine<'_>, idx: usize, count: u32, r: &mut [u32]) -> Result<()> {
        if count == self.delta {
            self.out.insert(ExponentVector::new(self.c.iter().zip(r.iter()).map(|(c, r)| c - r).collect()));
            return Ok(());
        }
        if idx == e.edges.len() || !self.seen.insert((idx, r.to_vec())) {
            return Ok(());
        }
        let found = self.out.len();
        e.tick(|| format!("enumerating generators at edge {} of {}, {found} found so far", idx + 1, e.edges.len()))?;
        let (a, b) = e.edges[idx];
        for k in (0..=r[a].min(r[b])).rev() {
            r[a] -= k;
            r[b] -= k;
            let tight = count + k + e.best(idx + 1, r)? == self.delta;
            if tight {
                self.visit(e, idx + 1, count + k, r)?;
            }
            r[a] += k;
            r[b] += k;
        }
        Ok(())
    }
}

/// A multiset of `deg(m)/2` edges whose product is exactly `m`, choosing the
/// highest feasible multiplicity edge by edge in lexicographic edge order.
pub fn edge_decompose(g: &Graph, m: &ExponentVector) -> Result<Option<EdgeMultiset>> {
    g.require_search_size()?;
    if m.len() != g.n() {
        return Err(Error::LengthMismatch { expected: g.n(), got: m.len() });
    }
    let deg = m.degree();
    if deg % 2 == 1 {
        return Err(Error::OddDegree(deg));
    }
    let mut engine = Engine::new(g, Limits::default().nodes);
    let mut r = m.as_slice().to_vec();
    let mut need = deg / 2;
    if engine.best(0, &mut r)? != need {
        return Ok(None);
    }
    let mut out = EdgeMultiset::new();
    for idx in 0..g.edges().len() {
        if need == 0 {
            break;
        }
        let (a, b) = g.edges()[idx];
        for k in (0..=r[a].min(r[b])).rev() {
            r[a] -= k;
            r[b] -= k;
            if k + engine.best(idx + 1, &mut r)? == need {
                out.insert(a, b, k);
                need -= k;
                break;
            }
            r[a] += k;
            r[b] += k;
        }
    }
    Ok(Some(out))
}
