//! Total colorings: the data model, the verifier, an exact search oracle and
//! list edge coloring of even cycles.

mod cycle_lists;
mod oracle;

use std::collections::BTreeMap;

pub use cycle_lists::{color_even_cycle_from_lists, ListColoringError};
pub use oracle::{exact_total_chromatic_number, find_total_coloring, ChromaticOutcome};

use crate::graph::{edge_key, Edge, Element, Graph, Location, ValidationReport};

/// Colors are `1..=k`.
pub type Color = u32;

/// A partial or complete assignment of colors to vertices and edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalColoring {
    vertex: Vec<Option<Color>>,
    edge: BTreeMap<Edge, Color>,
    k: u32,
}

impl TotalColoring {
    pub fn new(n: usize, k: u32) -> Self {
        TotalColoring {
            vertex: vec![None; n],
            edge: BTreeMap::new(),
            k,
        }
    }

    pub fn palette(&self) -> u32 {
        self.k
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex.len()
    }

    #[inline]
    pub fn vertex(&self, v: usize) -> Option<Color> {
        self.vertex[v]
    }

    #[inline]
    pub fn edge(&self, u: usize, v: usize) -> Option<Color> {
        self.edge.get(&edge_key(u, v)).copied()
    }

    pub fn get(&self, e: Element) -> Option<Color> {
        match e {
            Element::Vertex(v) => self.vertex(v),
            Element::Edge(u, v) => self.edge(u, v),
        }
    }

    pub fn set_vertex(&mut self, v: usize, c: Color) {
        self.vertex[v] = Some(c);
    }

    pub fn set_edge(&mut self, u: usize, v: usize, c: Color) {
        self.edge.insert(edge_key(u, v), c);
    }

    pub fn set(&mut self, e: Element, c: Option<Color>) {
        match (e, c) {
            (Element::Vertex(v), c) => self.vertex[v] = c,
            (Element::Edge(u, v), Some(c)) => self.set_edge(u, v, c),
            (Element::Edge(u, v), None) => {
                self.clear_edge(u, v);
            }
        }
    }

    pub fn clear_vertex(&mut self, v: usize) -> Option<Color> {
        self.vertex[v].take()
    }

    pub fn clear_edge(&mut self, u: usize, v: usize) -> Option<Color> {
        self.edge.remove(&edge_key(u, v))
    }

    pub fn vertex_colors(&self) -> &[Option<Color>] {
        &self.vertex
    }

    pub fn edge_colors(&self) -> &BTreeMap<Edge, Color> {
        &self.edge
    }

    /// Applies `perm[c - 1]` to every assigned color.
    pub fn permuted(&self, perm: &[Color]) -> TotalColoring {
        TotalColoring {
            vertex: self
                .vertex
                .iter()
                .map(|c| c.map(|c| perm[c as usize - 1]))
                .collect(),
            edge: self
                .edge
                .iter()
                .map(|(&e, &c)| (e, perm[c as usize - 1]))
                .collect(),
            k: self.k,
        }
    }

    /// Marks in `mask` (indexed by color) every color on `v` or on an edge at `v`.
    pub fn mark_around(&self, g: &Graph, v: usize, mask: &mut [bool]) {
        if let Some(c) = self.vertex[v] {
            mask[c as usize] = true;
        }
        for u in g.neighbors(v) {
            if let Some(c) = self.edge(v, u) {
                mask[c as usize] = true;
            }
        }
    }

    /// Colors in `1..=k` not used by any element adjacent or incident to `e`
    /// in `g`.
    pub fn free_colors(&self, g: &Graph, e: Element) -> Vec<Color> {
        let mut mask = vec![false; self.k as usize + 1];
        match e {
            Element::Vertex(v) => {
                for u in g.neighbors(v) {
                    if let Some(c) = self.vertex[u] {
                        mask[c as usize] = true;
                    }
                    if let Some(c) = self.edge(v, u) {
                        mask[c as usize] = true;
                    }
                }
            }
            Element::Edge(u, v) => {
                for (a, b) in [(u, v), (v, u)] {
                    if let Some(c) = self.vertex[a] {
                        mask[c as usize] = true;
                    }
                    for x in g.neighbors(a) {
                        if x != b {
                            if let Some(c) = self.edge(a, x) {
                                mask[c as usize] = true;
                            }
                        }
                    }
                }
            }
        }
        (1..=self.k).filter(|&c| !mask[c as usize]).collect()
    }
}

fn check_range(rep: &mut ValidationReport, e: Element, c: Color, k: u32) {
    if c == 0 || c > k {
        let loc = match e {
            Element::Vertex(v) => Location::Vertex(v),
            Element::Edge(u, v) => Location::Edge(u, v),
        };
        rep.push("palette", loc, format!("color {c} outside 1..={k}"));
    }
}

/// Checks that `c` is a total coloring of `g` with colors in `1..=k`.
/// Every conflicting pair is reported.
pub fn verify_total_coloring(g: &Graph, c: &TotalColoring, k: u32) -> ValidationReport {
    let mut rep = ValidationReport::default();
    if c.num_vertices() != g.num_vertices() {
        rep.push(
            "shape",
            Location::Global,
            format!(
                "coloring covers {} vertices, graph has {}",
                c.num_vertices(),
                g.num_vertices()
            ),
        );
        return rep;
    }
    for &(u, v) in c.edge_colors().keys() {
        if !g.has_edge(u, v) {
            rep.push("extraneous", Location::Edge(u, v), "colored edge not in graph");
        }
    }
    let all: Vec<usize> = (0..g.num_vertices()).collect();
    check_around(g, c, k, &all, &mut rep);
    rep
}

/// Checks every constraint that involves `vertices` or an edge incident to
/// one of them. Used to re-verify a coloring after a local change.
pub fn verify_around(g: &Graph, c: &TotalColoring, k: u32, vertices: &[usize]) -> ValidationReport {
    let mut rep = ValidationReport::default();
    check_around(g, c, k, vertices, &mut rep);
    rep
}

fn check_around(g: &Graph, c: &TotalColoring, k: u32, vertices: &[usize], rep: &mut ValidationReport) {
    let mut edge_done = std::collections::BTreeSet::new();
    let mut pair_done = std::collections::BTreeSet::new();
    for &v in vertices {
        let cv = c.vertex(v);
        match cv {
            None => rep.push("uncolored", Location::Vertex(v), "vertex has no color"),
            Some(col) => check_range(rep, Element::Vertex(v), col, k),
        }
        let mut seen_edge: BTreeMap<Color, usize> = BTreeMap::new();
        for u in g.neighbors(v) {
            if let (Some(a), Some(b)) = (cv, c.vertex(u)) {
                if a == b && pair_done.insert(edge_key(v, u)) {
                    rep.push(
                        "vertex-vertex",
                        Location::Pair(Element::Vertex(v), Element::Vertex(u)),
                        format!("adjacent vertices share color {a}"),
                    );
                }
            }
            let e = edge_key(v, u);
            let ce = c.edge(v, u);
            let first = edge_done.insert(e);
            let Some(ce) = ce else {
                if first {
                    rep.push("uncolored", Location::Edge(e.0, e.1), "edge has no color");
                }
                continue;
            };
            if first {
                check_range(rep, Element::Edge(e.0, e.1), ce, k);
                for end in [e.0, e.1] {
                    if c.vertex(end) == Some(ce) {
                        rep.push(
                            "edge-vertex",
                            Location::Pair(Element::Edge(e.0, e.1), Element::Vertex(end)),
                            format!("edge shares color {ce} with its endpoint"),
                        );
                    }
                }
            }
            if let Some(&other) = seen_edge.get(&ce) {
                let f = edge_key(v, other);
                rep.push(
                    "edge-edge",
                    Location::Pair(Element::Edge(f.0, f.1), Element::Edge(e.0, e.1)),
                    format!("incident edges share color {ce}"),
                );
            } else {
                seen_edge.insert(ce, u);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle_coloring(e12: Color) -> TotalColoring {
        let mut c = TotalColoring::new(3, 3);
        for v in 0..3 {
            c.set_vertex(v, v as Color + 1);
        }
        c.set_edge(0, 1, e12);
        c.set_edge(1, 2, 1);
        c.set_edge(0, 2, 2);
        c
    }

    #[test]
    fn triangle_with_three_colors() {
        let g = Graph::cycle(3);
        assert!(verify_total_coloring(&g, &triangle_coloring(3), 3).is_ok());
        let rep = verify_total_coloring(&g, &triangle_coloring(1), 3);
        assert!(rep.has_rule("edge-vertex"));
        assert!(rep
            .violations
            .iter()
            .any(|v| v.location == Location::Pair(Element::Edge(0, 1), Element::Vertex(0))));
    }

    #[test]
    fn reports_missing_and_out_of_range() {
        let g = Graph::path(2);
        let mut c = TotalColoring::new(2, 3);
        c.set_vertex(0, 4);
        let rep = verify_total_coloring(&g, &c, 3);
        assert!(rep.has_rule("palette"));
        assert!(rep.has_rule("uncolored"));
        c.set_edge(0, 1, 2);
        c.set_vertex(0, 1);
        c.set_vertex(1, 1);
        assert!(verify_total_coloring(&g, &c, 3).has_rule("vertex-vertex"));
    }

    #[test]
    fn incident_edges_conflict() {
        let g = Graph::star(2);
        let mut c = TotalColoring::new(3, 4);
        c.set_vertex(0, 1);
        c.set_vertex(1, 1);
        c.set_vertex(2, 2);
        c.set_edge(0, 2, 3);
        c.set_edge(1, 2, 3);
        let rep = verify_total_coloring(&g, &c, 4);
        assert_eq!(rep.violations.len(), 1);
        assert!(rep.has_rule("edge-edge"));
    }

    #[test]
    fn free_colors_counts_neighbourhood() {
        let g = Graph::path(3);
        let mut c = TotalColoring::new(3, 5);
        c.set_vertex(0, 1);
        c.set_vertex(1, 2);
        c.set_edge(1, 2, 3);
        assert_eq!(c.free_colors(&g, Element::Edge(0, 1)), vec![4, 5]);
        assert_eq!(c.free_colors(&g, Element::Vertex(1)), vec![2, 4, 5]);
    }
}
