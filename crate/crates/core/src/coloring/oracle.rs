//! Exact total coloring by backtracking on the total graph.
//!
//! Elements are picked by saturation (most distinct colors around them
//! first, then most uncolored neighbors, then lowest index), and a fresh
//! color is only ever tried once per node since unused colors are
//! interchangeable.

use super::{Color, TotalColoring};
use crate::graph::{Element, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChromaticOutcome {
    Exact { k: u32, coloring: TotalColoring },
    ExceedsBudget { max_k: u32 },
}

impl ChromaticOutcome {
    pub fn value(&self) -> Option<u32> {
        match self {
            ChromaticOutcome::Exact { k, .. } => Some(*k),
            ChromaticOutcome::ExceedsBudget { .. } => None,
        }
    }
}

/// Smallest `k <= max_k` admitting a total `k`-coloring of `g`.
pub fn exact_total_chromatic_number(g: &Graph, max_k: u32) -> ChromaticOutcome {
    if g.num_vertices() == 0 {
        return ChromaticOutcome::Exact {
            k: 0,
            coloring: TotalColoring::new(0, 0),
        };
    }
    let lower = g.max_degree() as u32 + 1;
    for k in lower..=max_k {
        if let Some(coloring) = find_total_coloring(g, k) {
            return ChromaticOutcome::Exact { k, coloring };
        }
    }
    ChromaticOutcome::ExceedsBudget { max_k }
}

/// Any total `k`-coloring of `g`, or `None` if there is none.
pub fn find_total_coloring(g: &Graph, k: u32) -> Option<TotalColoring> {
    let mut s = Search::new(g, k);
    if !s.run(0, 0) {
        return None;
    }
    let mut c = TotalColoring::new(g.num_vertices(), k);
    for (i, &e) in s.elems.iter().enumerate() {
        c.set(e, Some(s.color[i]));
    }
    Some(c)
}

struct Search {
    k: u32,
    elems: Vec<Element>,
    conflicts: Vec<Vec<u32>>,
    color: Vec<Color>,
    /// `count[i * (k + 1) + c]`: colored conflict neighbors of `i` using `c`.
    count: Vec<u16>,
    sat: Vec<u32>,
    free_deg: Vec<u32>,
}

impl Search {
    fn new(g: &Graph, k: u32) -> Self {
        let n = g.num_vertices();
        let mut elems: Vec<Element> = (0..n).map(Element::Vertex).collect();
        let mut edge_id = std::collections::HashMap::new();
        for (u, v) in g.edges() {
            edge_id.insert((u, v), elems.len());
            elems.push(Element::Edge(u, v));
        }
        let eid = |a: usize, b: usize| edge_id[&crate::graph::edge_key(a, b)] as u32;
        let conflicts: Vec<Vec<u32>> = elems
            .iter()
            .map(|&e| match e {
                Element::Vertex(v) => g.neighbors(v).flat_map(|u| [u as u32, eid(v, u)]).collect(),
                Element::Edge(u, v) => {
                    let mut out = vec![u as u32, v as u32];
                    out.extend(g.neighbors(u).filter(|&x| x != v).map(|x| eid(u, x)));
                    out.extend(g.neighbors(v).filter(|&x| x != u).map(|x| eid(v, x)));
                    out
                }
            })
            .collect();
        let m = elems.len();
        let free_deg = conflicts.iter().map(|c| c.len() as u32).collect();
        Search {
            k,
            elems,
            conflicts,
            color: vec![0; m],
            count: vec![0; m * (k as usize + 1)],
            sat: vec![0; m],
            free_deg,
        }
    }

    #[inline]
    fn slot(&self, i: usize, c: Color) -> usize {
        i * (self.k as usize + 1) + c as usize
    }

    fn pick(&self) -> Option<usize> {
        let mut best: Option<(u32, u32, usize)> = None;
        for i in 0..self.elems.len() {
            if self.color[i] != 0 {
                continue;
            }
            let key = (self.sat[i], self.free_deg[i]);
            if best.is_none_or(|(s, f, _)| key > (s, f)) {
                best = Some((key.0, key.1, i));
            }
        }
        best.map(|b| b.2)
    }

    fn assign(&mut self, i: usize, c: Color) {
        self.color[i] = c;
        for j in 0..self.conflicts[i].len() {
            let t = self.conflicts[i][j] as usize;
            self.free_deg[t] -= 1;
            let s = self.slot(t, c);
            if self.count[s] == 0 {
                self.sat[t] += 1;
            }
            self.count[s] += 1;
        }
    }

    fn unassign(&mut self, i: usize) {
        let c = self.color[i];
        self.color[i] = 0;
        for j in 0..self.conflicts[i].len() {
            let t = self.conflicts[i][j] as usize;
            self.free_deg[t] += 1;
            let s = self.slot(t, c);
            self.count[s] -= 1;
            if self.count[s] == 0 {
                self.sat[t] -= 1;
            }
        }
    }

    fn run(&mut self, done: usize, max_used: u32) -> bool {
        if done == self.elems.len() {
            return true;
        }
        let i = self.pick().expect("an uncolored element remains");
        if self.sat[i] >= self.k {
            return false;
        }
        let top = (max_used + 1).min(self.k);
        for c in 1..=top {
            if self.count[self.slot(i, c)] != 0 {
                continue;
            }
            self.assign(i, c);
            if self.run(done + 1, max_used.max(c)) {
                return true;
            }
            self.unassign(i);
        }
        false
    }
}
