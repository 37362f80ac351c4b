//! Finite simple graphs on the vertex labels `1..=n`.
//!
//! Labels are 1-indexed at every boundary (constructors, graph files,
//! reports) and 0-indexed inside the engine: vertex label `i` lives at
//! index `i - 1`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Default vertex cap for the exhaustive Hamiltonicity check.
pub const DEFAULT_HAMILTON_CAP: usize = 16;

/// An undirected simple graph without loops, multi-edges or isolated
/// vertices. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// 0-based pairs `(u, v)` with `u < v`, sorted lexicographically.
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from 1-indexed edge labels.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n < 3 {
            return Err(Error::TooFewVertices(n));
        }
        let mut set = BTreeSet::new();
        for (i, j) in edges {
            for label in [i, j] {
                if label == 0 || label > n {
                    return Err(Error::LabelOutOfRange { label, n });
                }
            }
            if i == j {
                return Err(Error::Loop(i));
            }
            let (u, v) = if i < j { (i - 1, j - 1) } else { (j - 1, i - 1) };
            if !set.insert((u, v)) {
                return Err(Error::DuplicateEdge(u + 1, v + 1));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &set {
            adj[u].push(v);
            adj[v].push(u);
        }
        if let Some(v) = adj.iter().position(Vec::is_empty) {
            return Err(Error::IsolatedVertex(v + 1));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self {
            n,
            edges: set.into_iter().collect(),
            adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted 0-based index pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Edges as sorted 1-indexed label pairs.
    pub fn labeled_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&(u, v)| (u + 1, v + 1))
    }

    /// Neighbors of the 0-based vertex `v`, ascending.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &self.adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n
    }

    /// A proper 2-coloring if one exists (`false`/`true` per vertex).
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let cv = color[v].unwrap();
                for &u in &self.adj[v] {
                    match color[u] {
                        None => {
                            color[u] = Some(!cv);
                            stack.push(u);
                        }
                        Some(cu) if cu == cv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// The common degree, if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    /// Graph-file text: `n`, then one `i j` line per edge in sorted order.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (i, j) in self.labeled_edges() {
            out.push_str(&format!("{i} {j}\n"));
        }
        out
    }

    /// Applies a vertex permutation given on 0-based indices: vertex `v`
    /// becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: perm.len(),
            });
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(Error::Parameter("relabeling is not a permutation".into()));
            }
            seen[p] = true;
        }
        Graph::new(
            self.n,
            self.edges.iter().map(|&(u, v)| (perm[u] + 1, perm[v] + 1)),
        )
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph(n={}, edges=[", self.n)?;
        for (k, (i, j)) in self.labeled_edges().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{i}-{j}")?;
        }
        write!(f, "])")
    }
}

/// Splits text into `(line_number, tokens)` pairs, dropping `#` comments and
/// blank lines.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(k, line)| {
        let body = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((k + 1, tokens))
    })
}

fn parse_label(line: usize, token: &str) -> Result<usize> {
    token.parse::<usize>().map_err(|_| Error::Syntax {
        line,
        message: format!("expected a non-negative integer, found `{token}`"),
    })
}

fn parse_edge_line(line: usize, tokens: &[&str]) -> Result<(usize, usize)> {
    if tokens.len() != 2 {
        return Err(Error::Syntax {
            line,
            message: format!("expected `i j`, found {} tokens", tokens.len()),
        });
    }
    Ok((parse_label(line, tokens[0])?, parse_label(line, tokens[1])?))
}

/// Parses the text graph format: the first significant line holds `n`, each
/// further line one edge `i j`; `#` starts a comment.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = significant_lines(text);
    let (line, tokens) = lines.next().ok_or(Error::Syntax {
        line: 1,
        message: "missing vertex count".into(),
    })?;
    if tokens.len() != 1 {
        return Err(Error::Syntax {
            line,
            message: "first line must hold only the vertex count".into(),
        });
    }
    let n = parse_label(line, tokens[0])?;
    let edges = lines
        .map(|(line, tokens)| parse_edge_line(line, &tokens))
        .collect::<Result<Vec<_>>>()?;
    Graph::new(n, edges)
}

/// Parses a bare edge list (no vertex-count line), as used for the inner
/// bipartite graph of a Cameron–Walker construction.
pub fn parse_edge_list(text: &str) -> Result<Vec<(usize, usize)>> {
    significant_lines(text)
        .map(|(line, tokens)| parse_edge_line(line, &tokens))
        .collect()
}

/// Built-in graph families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Complete(usize),
    /// `K_{m,n}` on `{1..m} ⊔ {m+1..m+n}`.
    CompleteBipartite(usize, usize),
    Cycle(usize),
    Path(usize),
    Whiskered(Box<FamilySpec>),
    /// `H_s^r`; `h` holds 1-indexed edges on `{1..r} ⊔ {2r+1..2r+s}`.
    CameronWalker {
        h: Vec<(usize, usize)>,
        r: usize,
        s: usize,
    },
    Custom {
        label: String,
        graph: Graph,
    },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        build_family(self)
    }

    pub fn custom(label: impl Into<String>, graph: Graph) -> Self {
        FamilySpec::Custom {
            label: label.into(),
            graph,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::CompleteBipartite(m, n) => write!(f, "kmn:{m},{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Whiskered(inner) => write!(f, "whisker:({inner})"),
            FamilySpec::CameronWalker { h, r, s } => {
                write!(f, "cmcw:{r},{s},[")?;
                for (k, (i, j)) in h.iter().enumerate() {
                    if k > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{i}-{j}")?;
                }
                write!(f, "]")
            }
            FamilySpec::Custom { label, .. } => write!(f, "{label}"),
        }
    }
}

pub fn build_family(spec: &FamilySpec) -> Result<Graph> {
    match spec {
        FamilySpec::Complete(n) => complete(*n),
        FamilySpec::CompleteBipartite(m, n) => complete_bipartite(*m, *n),
        FamilySpec::Cycle(n) => cycle(*n),
        FamilySpec::Path(n) => path(*n),
        FamilySpec::Whiskered(inner) => Ok(whisker(&build_family(inner)?)),
        FamilySpec::CameronWalker { h, r, s } => cameron_walker(h, *r, *s),
        FamilySpec::Custom { graph, .. } => Ok(graph.clone()),
    }
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Parameter(format!("complete graph needs n >= 3, got {n}")));
    }
    Graph::new(n, (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))))
}

pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    if m == 0 || n == 0 || m + n < 3 {
        return Err(Error::Parameter(format!(
            "complete bipartite graph needs m, n >= 1 and m + n >= 3, got ({m}, {n})"
        )));
    }
    Graph::new(
        m + n,
        (1..=m).flat_map(|i| (m + 1..=m + n).map(move |j| (i, j))),
    )
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Parameter(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::new(n, (1..n).map(|i| (i, i + 1)).chain(std::iter::once((1, n))))
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Parameter(format!("path needs n >= 3, got {n}")));
    }
    Graph::new(n, (1..n).map(|i| (i, i + 1)))
}

/// `W(g)`: `g` plus the pendant edges `{i, n + i}`.
pub fn whisker(g: &Graph) -> Graph {
    let n = g.n();
    Graph::new(
        2 * n,
        g.labeled_edges().chain((1..=n).map(|i| (i, n + i))),
    )
    .expect("whiskering a valid graph yields a valid graph")
}

/// The Cohen–Macaulay Cameron–Walker graph `H_s^r` on `2r + 3s` vertices.
pub fn cameron_walker(h: &[(usize, usize)], r: usize, s: usize) -> Result<Graph> {
    if r == 0 || s == 0 {
        return Err(Error::Parameter(format!(
            "cameron-walker needs r, s >= 1, got ({r}, {s})"
        )));
    }
    let left = |x: usize| (1..=r).contains(&x);
    let right = |x: usize| (2 * r + 1..=2 * r + s).contains(&x);
    for &(i, j) in h {
        if !((left(i) && right(j)) || (left(j) && right(i))) {
            return Err(Error::Parameter(format!(
                "edge {{{i}, {j}}} does not join {{1..{r}}} to {{{}..{}}}",
                2 * r + 1,
                2 * r + s
            )));
        }
    }
    // connectivity over the r + s labels of H
    let labels: Vec<usize> = (1..=r).chain(2 * r + 1..=2 * r + s).collect();
    let mut seen = BTreeSet::from([labels[0]]);
    let mut stack = vec![labels[0]];
    while let Some(x) = stack.pop() {
        for &(i, j) in h {
            let other = if i == x {
                j
            } else if j == x {
                i
            } else {
                continue;
            };
            if seen.insert(other) {
                stack.push(other);
            }
        }
    }
    if seen.len() != labels.len() {
        return Err(Error::Parameter("the bipartite graph H is disconnected".into()));
    }
    let mut edges: Vec<(usize, usize)> = h.to_vec();
    edges.extend((1..=r).map(|i| (i, r + i)));
    for i in 1..=s {
        let (a, b, c) = (2 * r + i, 2 * r + s + i, 2 * r + 2 * s + i);
        edges.extend([(a, b), (b, c), (a, c)]);
    }
    Graph::new(2 * r + 3 * s, edges)
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i + 1, (i + 1) % 5 + 1));
    let spokes = (1..=5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (i + 6, (i + 2) % 5 + 6));
    Graph::new(10, outer.chain(spokes).chain(inner)).expect("petersen graph")
}

/// The `d`-dimensional hypercube graph.
pub fn hypercube(d: u32) -> Result<Graph> {
    if d < 2 {
        return Err(Error::Parameter(format!("hypercube needs d >= 2, got {d}")));
    }
    let n = 1usize << d;
    let edges = (0..n).flat_map(|v| {
        (0..d)
            .map(move |b| v ^ (1 << b))
            .filter(move |&u| u > v)
            .map(move |u| (v + 1, u + 1))
    });
    Graph::new(n, edges)
}

/// Size of a maximum matching, by branch and bound seeded with a greedy
/// matching. Exact; intended for graphs with at most 128 vertices.
pub fn matching_number(g: &Graph) -> usize {
    assert!(g.n() <= 128, "matching_number supports at most 128 vertices");
    let all: u128 = if g.n() == 128 { u128::MAX } else { (1u128 << g.n()) - 1 };
    let mut best = greedy_matching(g);
    matching_search(g, all, 0, &mut best);
    best
}

fn greedy_matching(g: &Graph) -> usize {
    let mut used = vec![false; g.n()];
    let mut size = 0;
    for &(u, v) in g.edges() {
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            size += 1;
        }
    }
    size
}

fn matching_search(g: &Graph, free: u128, size: usize, best: &mut usize) {
    let has_free_neighbor = |v: usize| g.neighbors(v).iter().any(|&u| free >> u & 1 == 1);
    let live: Vec<usize> = (0..g.n())
        .filter(|&v| free >> v & 1 == 1 && has_free_neighbor(v))
        .collect();
    if size + live.len() / 2 <= *best {
        return;
    }
    let Some(&v) = live.first() else {
        *best = (*best).max(size);
        return;
    };
    for &u in g.neighbors(v) {
        if free >> u & 1 == 1 {
            matching_search(g, free & !(1 << v) & !(1 << u), size + 1, best);
        }
    }
    matching_search(g, free & !(1 << v), size, best);
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    g.n().is_multiple_of(2) && matching_number(g) == g.n() / 2
}

pub fn is_hamiltonian(g: &Graph) -> Result<bool> {
    is_hamiltonian_with_cap(g, DEFAULT_HAMILTON_CAP)
}

/// Exhaustive spanning-cycle search, refused above `cap` vertices.
pub fn is_hamiltonian_with_cap(g: &Graph, cap: usize) -> Result<bool> {
    if g.n() > cap {
        return Err(Error::SizeCap {
            what: "hamiltonicity vertex count",
            requested: g.n() as u128,
            limit: cap as u128,
        });
    }
    fn extend(g: &Graph, last: usize, visited: u64, count: usize) -> bool {
        if count == g.n() {
            return g.has_edge(last, 0);
        }
        g.neighbors(last).iter().any(|&u| {
            visited >> u & 1 == 0 && extend(g, u, visited | 1 << u, count + 1)
        })
    }
    Ok(extend(g, 0, 1, 1))
}
