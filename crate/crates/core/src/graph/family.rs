use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::Graph;

/// Named graphs with a fixed vertex numbering, mostly small unicyclic graphs
/// given as a cycle `x1..xl` plus attached edges.
pub const TEMPLATE_NAMES: &[&str] = &[
    "triangle-example",
    "specialsub",
    "c7pend",
    "c6pend",
    "c5pendad",
    "c5pendnoad",
    "c5twopend",
    "c5path",
    "c5star",
    "c4twopend",
    "c4pendpath",
    "c4twopath",
    "c4star",
    "c4tpathlong",
    "c4pendall",
    "c4pathpendad",
    "c3threepend",
    "c3pathpend",
    "c3pathstar",
    "c3path4",
    "c3path3pend",
    "c3path2",
    "c3path3",
];

/// `(cycle length, extra vertices, extra edges)`; a cycle length of 0 means
/// the edge list is complete on its own.
type Template = (usize, usize, &'static [(usize, usize)]);

fn template(name: &str) -> Option<Template> {
    Some(match name {
        "triangle-example" => (0, 6, &[(1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (4, 6)]),
        "specialsub" => (0, 6, &[(1, 2), (2, 3), (2, 4), (4, 5), (5, 6)]),
        "c7pend" => (7, 1, &[(1, 8)]),
        "c6pend" => (6, 1, &[(1, 7)]),
        "c5pendad" => (5, 2, &[(1, 6), (5, 7)]),
        "c5pendnoad" => (5, 2, &[(1, 6), (4, 7)]),
        "c5twopend" => (5, 2, &[(1, 6), (1, 7)]),
        "c5path" => (5, 3, &[(1, 6), (6, 7), (7, 8)]),
        "c5star" => (5, 3, &[(1, 6), (6, 7), (6, 8)]),
        "c4twopend" => (4, 2, &[(1, 5), (1, 6)]),
        "c4pendpath" => (4, 3, &[(1, 5), (5, 6), (4, 7)]),
        "c4twopath" => (4, 4, &[(1, 5), (5, 6), (3, 7), (7, 8)]),
        "c4star" => (4, 3, &[(1, 5), (5, 6), (5, 7)]),
        "c4tpathlong" => (4, 3, &[(1, 5), (5, 6), (6, 7)]),
        "c4pendall" => (4, 4, &[(1, 5), (2, 6), (3, 7), (4, 8)]),
        "c4pathpendad" => (4, 3, &[(1, 5), (5, 6), (3, 7)]),
        "c3threepend" => (3, 3, &[(1, 4), (1, 5), (2, 6)]),
        "c3pathpend" => (3, 4, &[(1, 4), (4, 5), (5, 6), (2, 7)]),
        "c3pathstar" => (3, 4, &[(1, 4), (4, 5), (5, 6), (5, 7)]),
        "c3path4" => (3, 4, &[(1, 4), (4, 5), (5, 6), (6, 7)]),
        "c3path3pend" => (3, 4, &[(1, 4), (4, 5), (5, 6), (1, 7)]),
        "c3path2" => (3, 6, &[(1, 4), (4, 5), (2, 6), (6, 7), (3, 8), (8, 9)]),
        "c3path3" => (3, 3, &[(1, 4), (4, 5), (5, 6)]),
        _ => return None,
    })
}

/// A parametrised graph family. All labels are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphFamilySpec {
    /// `x1 - x2 - ... - xn - x1`.
    Cycle(usize),
    /// `x1 - x2 - ... - xn`.
    Path(usize),
    /// `Q_n`: leaves `x1..xn`, centre `x(n+1)`.
    Star(usize),
    /// Star with leaves `x1..xn`, whiskers `{x_i, x(n+i)}` for `i <= k`,
    /// centre `x(n+k+1)`.
    StarWhisker {
        leaves: usize,
        whiskers: usize,
    },
    Complete(usize),
    /// `K_{n1..nm} - M` with parts numbered consecutively.
    MultipartiteMinusMatching {
        parts: Vec<usize>,
        matching: Vec<(usize, usize)>,
    },
    /// `P_n` with two pendant edges at each end: `{x1,x(n+1)}, {x1,x(n+2)},
    /// {xn,x(n+3)}, {xn,x(n+4)}`.
    PathLeaf(usize),
    /// Triangle with `k` paths of length two at `x1`: `{x1,x(3+i)}` and
    /// `{x(3+i),x(3+k+i)}` for `1 <= i <= k`.
    TriangleFan(usize),
    /// `C_n` plus the pendant edge `{x1, x(n+1)}`.
    CyclePendant(usize),
    Template(String),
    Custom {
        n: usize,
        edges: Vec<(usize, usize)>,
    },
}

fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
    (1..=n).map(|i| (i, i % n + 1)).collect()
}

fn path_edges(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i, i + 1)).collect()
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidFamily(msg.into())
}

impl GraphFamilySpec {
    pub fn build(&self) -> Result<Graph> {
        use GraphFamilySpec::*;
        let (n, edges) = match self {
            Cycle(n) => {
                if *n < 3 {
                    return Err(invalid(format!("cycle length must be >= 3, got {n}")));
                }
                (*n, cycle_edges(*n))
            }
            Path(n) => {
                if *n < 2 {
                    return Err(invalid(format!("path needs >= 2 vertices, got {n}")));
                }
                (*n, path_edges(*n))
            }
            Star(n) => {
                if *n < 1 {
                    return Err(invalid("star needs at least one leaf"));
                }
                (n + 1, (1..=*n).map(|i| (i, n + 1)).collect())
            }
            StarWhisker { leaves, whiskers } => {
                if *leaves < 1 || whiskers > leaves {
                    return Err(invalid(format!(
                        "star-whisker needs 1 <= whiskers <= leaves, got {leaves},{whiskers}"
                    )));
                }
                let centre = leaves + whiskers + 1;
                let mut e: Vec<_> = (1..=*leaves).map(|i| (i, centre)).collect();
                e.extend((1..=*whiskers).map(|i| (i, leaves + i)));
                (centre, e)
            }
            Complete(n) => {
                if *n < 2 {
                    return Err(invalid("complete graph needs >= 2 vertices"));
                }
                let mut e = Vec::new();
                for i in 1..=*n {
                    for j in i + 1..=*n {
                        e.push((i, j));
                    }
                }
                (*n, e)
            }
            MultipartiteMinusMatching { parts, matching } => multipartite(parts, matching)?,
            PathLeaf(n) => {
                if *n < 2 {
                    return Err(invalid("pathleaf needs a path on >= 2 vertices"));
                }
                let mut e = path_edges(*n);
                e.extend([(1, n + 1), (1, n + 2), (*n, n + 3), (*n, n + 4)]);
                (n + 4, e)
            }
            TriangleFan(k) => {
                let mut e = cycle_edges(3);
                for i in 1..=*k {
                    e.push((1, 3 + i));
                    e.push((3 + i, 3 + k + i));
                }
                (3 + 2 * k, e)
            }
            CyclePendant(n) => {
                if *n < 3 {
                    return Err(invalid(format!("cycle length must be >= 3, got {n}")));
                }
                let mut e = cycle_edges(*n);
                e.push((1, n + 1));
                (n + 1, e)
            }
            Template(name) => {
                let (cycle, extra, attached) =
                    template(name).ok_or_else(|| invalid(format!("unknown template `{name}`")))?;
                let mut e = if cycle > 0 { cycle_edges(cycle) } else { Vec::new() };
                e.extend_from_slice(attached);
                (cycle + extra, e)
            }
            Custom { n, edges } => (*n, edges.clone()),
        };
        Graph::new(n, &edges)
    }
}

fn multipartite(parts: &[usize], matching: &[(usize, usize)]) -> Result<(usize, Vec<(usize, usize)>)> {
    if parts.len() < 2 || parts.contains(&0) {
        return Err(invalid("multipartite needs >= 2 parts, each of size >= 1"));
    }
    let mut part_of = Vec::new();
    for (p, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(p, size));
    }
    let n = part_of.len();
    let mut used = vec![false; n + 1];
    for &(a, b) in matching {
        if a == 0 || b == 0 || a > n || b > n || part_of[a - 1] == part_of[b - 1] {
            return Err(invalid(format!("{{{a},{b}}} is not an edge of the multipartite graph")));
        }
        if used[a] || used[b] {
            return Err(invalid(format!("{{{a},{b}}} overlaps another matching edge")));
        }
        used[a] = true;
        used[b] = true;
    }
    let mut e = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let removed = matching.iter().any(|&(a, b)| (a, b) == (i, j) || (b, a) == (i, j));
            if part_of[i - 1] != part_of[j - 1] && !removed {
                e.push((i, j));
            }
        }
    }
    Ok((n, e))
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',').map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad integer `{t}`")))).collect()
}

fn parse_pairs(s: &str) -> Result<Vec<(usize, usize)>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let (a, b) = t.split_once('-').ok_or_else(|| Error::Parse(format!("edge `{t}` is not of the form i-j")))?;
            let a = a.trim().parse().map_err(|_| Error::Parse(format!("bad vertex in `{t}`")))?;
            let b = b.trim().parse().map_err(|_| Error::Parse(format!("bad vertex in `{t}`")))?;
            Ok((a, b))
        })
        .collect()
}

fn single(args: &str) -> Result<usize> {
    args.trim().parse().map_err(|_| Error::Parse(format!("bad integer `{args}`")))
}

impl FromStr for GraphFamilySpec {
    type Err = Error;

    /// Inline syntax: `cycle:8`, `path:7`, `star:3`, `star-whisker:3,2`,
    /// `complete:4`, `multipartite:2,2/1-3`, `pathleaf:4`, `triangle-fan:2`,
    /// `cycle-pendant:7`, `template:c5star`, `custom:4:1-2,2-3,3-4`,
    /// `fixture:c5star`.
    fn from_str(s: &str) -> Result<Self> {
        let (kind, args) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("graph spec `{s}` must look like family:args")))?;
        use GraphFamilySpec::*;
        Ok(match kind {
            "cycle" => Cycle(single(args)?),
            "path" => Path(single(args)?),
            "star" => Star(single(args)?),
            "complete" => Complete(single(args)?),
            "pathleaf" => PathLeaf(single(args)?),
            "triangle-fan" => TriangleFan(single(args)?),
            "cycle-pendant" => CyclePendant(single(args)?),
            "star-whisker" => match parse_list(args)?.as_slice() {
                &[leaves, whiskers] => StarWhisker { leaves, whiskers },
                _ => return Err(Error::Parse("star-whisker takes two integers".into())),
            },
            "multipartite" => {
                let (parts, matching) = match args.split_once('/') {
                    Some((p, m)) => (parse_list(p)?, parse_pairs(m)?),
                    None => (parse_list(args)?, Vec::new()),
                };
                MultipartiteMinusMatching { parts, matching }
            }
            "template" => Template(args.trim().to_string()),
            "custom" => {
                let (n, edges) = args
                    .split_once(':')
                    .ok_or_else(|| Error::Parse("custom graphs look like custom:n:1-2,2-3".into()))?;
                Custom { n: single(n)?, edges: parse_pairs(edges)? }
            }
            "fixture" => {
                let fixture = crate::fixtures::find(args.trim())?;
                return fixture.graph.parse();
            }
            other => return Err(Error::Parse(format!("unknown graph family `{other}`"))),
        })
    }
}

impl fmt::Display for GraphFamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GraphFamilySpec::*;
        match self {
            Cycle(n) => write!(f, "cycle:{n}"),
            Path(n) => write!(f, "path:{n}"),
            Star(n) => write!(f, "star:{n}"),
            StarWhisker { leaves, whiskers } => write!(f, "star-whisker:{leaves},{whiskers}"),
            Complete(n) => write!(f, "complete:{n}"),
            MultipartiteMinusMatching { parts, matching } => {
                let p: Vec<_> = parts.iter().map(|x| x.to_string()).collect();
                write!(f, "multipartite:{}", p.join(","))?;
                if !matching.is_empty() {
                    let m: Vec<_> = matching.iter().map(|(a, b)| format!("{a}-{b}")).collect();
                    write!(f, "/{}", m.join(","))?;
                }
                Ok(())
            }
            PathLeaf(n) => write!(f, "pathleaf:{n}"),
            TriangleFan(k) => write!(f, "triangle-fan:{k}"),
            CyclePendant(n) => write!(f, "cycle-pendant:{n}"),
            Template(name) => write!(f, "template:{name}"),
            Custom { n, edges } => {
                let e: Vec<_> = edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
                write!(f, "custom:{n}:{}", e.join(","))
            }
        }
    }
}
