//! Simple undirected graphs over dense vertex ids.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(usize, usize),
}

/// An undirected edge with `lo < hi`.
pub type Edge = (usize, usize);

#[inline]
pub fn edge_key(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Simple undirected graph. Adjacency sets are kept symmetric and
/// irreflexive by every mutating method.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
    edge_count: usize,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); n],
            edge_count: 0,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_unchecked(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 0..n {
            g.insert_unchecked(i, (i + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 1..n {
            g.insert_unchecked(i - 1, i);
        }
        g
    }

    /// Wheel with hub `0` and rim `1..=rim`.
    pub fn wheel(rim: usize) -> Self {
        let mut g = Graph::new(rim + 1);
        for i in 0..rim {
            g.insert_unchecked(0, i + 1);
            g.insert_unchecked(i + 1, (i + 1) % rim + 1);
        }
        g
    }

    /// Star with leaves `0..leaves` and center `leaves`.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::new(leaves + 1);
        for i in 0..leaves {
            g.insert_unchecked(i, leaves);
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.insert_unchecked(u, v);
            }
        }
        g
    }

    /// Circulant graph on `n` vertices joining `i` to `i ± s` for each step `s`.
    pub fn circulant(n: usize, steps: &[usize]) -> Self {
        let mut g = Graph::new(n);
        for i in 0..n {
            for &s in steps {
                let j = (i + s) % n;
                if i != j && !g.has_edge(i, j) {
                    g.insert_unchecked(i, j);
                }
            }
        }
        g
    }

    fn insert_unchecked(&mut self, u: usize, v: usize) {
        if self.adj[u].insert(v) {
            self.adj[v].insert(u);
            self.edge_count += 1;
        }
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(BTreeSet::new());
        self.adj.len() - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.adj.len();
        if u >= n {
            return Err(GraphError::VertexOutOfRange(u));
        }
        if v >= n {
            return Err(GraphError::VertexOutOfRange(v));
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if self.adj[u].contains(&v) {
            let (a, b) = edge_key(u, v);
            return Err(GraphError::ParallelEdge(a, b));
        }
        self.insert_unchecked(u, v);
        Ok(())
    }

    /// Removes `uv`; returns whether it was present.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u < self.adj.len() && self.adj[u].remove(&v) {
            self.adj[v].remove(&u);
            self.edge_count -= 1;
            true
        } else {
            false
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|s| s.contains(&v))
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn neighbor_set(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edge_count
    }

    /// Edges in ascending `(lo, hi)` order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, s)| s.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).min().unwrap_or(0)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.adj.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced on `vertices`, relabelled densely in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.adj.len()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    g.insert_unchecked(i, j);
                }
            }
        }
        g
    }
}

/// Where a violation was found.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Location {
    Global,
    Vertex(usize),
    Edge(usize, usize),
    Face(usize),
    /// Two elements in conflict, e.g. an edge and one of its endpoints.
    Pair(Element, Element),
}

/// A vertex or an edge of a graph; the things a total coloring colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Vertex(usize),
    Edge(usize, usize),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Element::Vertex(v) => write!(f, "vertex {}", v + 1),
            Element::Edge(u, v) => write!(f, "edge {}-{}", u + 1, v + 1),
        }
    }
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Global => write!(f, "global"),
            Location::Vertex(v) => write!(f, "vertex {}", v + 1),
            Location::Edge(u, v) => write!(f, "edge {}-{}", u + 1, v + 1),
            Location::Face(i) => write!(f, "face #{i}"),
            Location::Pair(a, b) => write!(f, "{a} / {b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub rule: &'static str,
    pub location: Location,
    pub message: String,
}

/// Outcome of a validation pass. `is_ok()` holds exactly when no
/// violation was recorded.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, rule: &'static str, location: Location, message: impl Into<String>) {
        self.violations.push(Violation {
            rule,
            location,
            message: message.into(),
        });
    }

    pub fn has_rule(&self, rule: &str) -> bool {
        self.violations.iter().any(|v| v.rule == rule)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return writeln!(f, "ok");
        }
        writeln!(f, "{} violation(s)", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  [{}] {}: {}", v.rule, v.location, v.message)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_parallel_edges() {
        let mut g = Graph::new(3);
        assert_eq!(g.add_edge(1, 1), Err(GraphError::Loop(1)));
        g.add_edge(0, 1).unwrap();
        assert_eq!(g.add_edge(1, 0), Err(GraphError::ParallelEdge(0, 1)));
        assert_eq!(g.add_edge(0, 3), Err(GraphError::VertexOutOfRange(3)));
        assert_eq!(g.num_edges(), 1);
    }

    #[test]
    fn named_families() {
        assert_eq!(Graph::complete(6).num_edges(), 15);
        assert_eq!(Graph::wheel(4).degree(0), 4);
        assert_eq!(Graph::star(5).degree(5), 5);
        let c = Graph::circulant(30, &[1, 2, 3, 4, 5, 6, 7]);
        assert!((0..30).all(|v| c.degree(v) == 14));
        assert_eq!(Graph::cycle(5).edges().count(), 5);
    }

    #[test]
    fn components_and_removal() {
        let mut g = Graph::path(4);
        assert!(g.is_connected());
        assert!(g.remove_edge(2, 1));
        assert!(!g.remove_edge(2, 1));
        assert_eq!(g.components(), vec![vec![0, 1], vec![2, 3]]);
    }
}
