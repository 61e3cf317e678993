//! 1-planar drawings stored as rotation systems of the associated plane
//! graph, where every crossing has been replaced by a degree-4 "false"
//! vertex.
//!
//! Orientation convention: `rotation[v]` lists the neighbors of `v` in
//! clockwise order. Face traversal follows the dart `(u, v)` with
//! `(v, w)`, where `w` is the clockwise successor of `u` at `v`. With this
//! rule the face lying between two clockwise-consecutive neighbors
//! `v_i, v_{i+1}` of `v` is the one containing the dart `v -> v_{i+1}`.
//!
//! At a false vertex with rotation `(a, b, c, d)` the two crossing edges of
//! the underlying graph are `a-c` and `b-d`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{edge_key, Graph, Location, ValidationReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DrawingError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: vertex {id} declared twice")]
    DuplicateVertex { line: usize, id: usize },
    #[error("line {line}: second rotation for vertex {id}")]
    DuplicateRotation { line: usize, id: usize },
    #[error("vertex {0} has no rotation")]
    MissingRotation(usize),
    #[error("line {line}: reference to undeclared vertex {id}")]
    Dangling { line: usize, id: usize },
    #[error("vertex ids must be 1..={expected}; missing {missing}")]
    SparseIds { expected: usize, missing: usize },
    #[error("vertex {vertex}: neighbor {neighbor} listed twice")]
    RepeatedNeighbor { vertex: usize, neighbor: usize },
    #[error("vertex {0} lists itself")]
    Loop(usize),
    #[error("asymmetric rotation: {0} lists {1} but {1} does not list {0}")]
    Asymmetric(usize, usize),
    #[error("adjacent false vertices {0} and {1}")]
    AdjacentFalse(usize, usize),
    #[error("false vertex {0} has degree {1}, expected 4")]
    FalseDegree(usize, usize),
    #[error("not a drawing of a simple graph: {0}")]
    NotSimple(String),
    #[error("edge {0}-{1} is not an edge of the underlying graph")]
    UnknownEdge(usize, usize),
}

/// A rotation system of `G×` plus the false-vertex flags.
///
/// Ids are dense `0..n` in memory and `1..=n` in the text format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OnePlanarDrawing {
    rotation: Vec<Vec<usize>>,
    is_false: Vec<bool>,
}

/// A facial walk. `walk[i]` is entered through the edge from `walk[i-1]`
/// (cyclically); a cut vertex may appear more than once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub walk: Vec<usize>,
}

impl Face {
    pub fn degree(&self) -> usize {
        self.walk.len()
    }
}

/// Faces together with the dart-to-face lookup.
#[derive(Debug, Clone)]
pub struct FaceIndex {
    pub faces: Vec<Face>,
    /// `dart_face[v][i]` is the face containing the dart `v -> rotation[v][i]`.
    pub dart_face: Vec<Vec<usize>>,
}

impl FaceIndex {
    /// Face between the clockwise-consecutive neighbors at positions `i`
    /// and `i + 1` of `v`'s rotation.
    pub fn corner(&self, v: usize, i: usize) -> usize {
        let d = self.dart_face[v].len();
        self.dart_face[v][(i + 1) % d]
    }

    /// The faces around `v`, `corners(v)[i]` lying between neighbors `i`
    /// and `i + 1`.
    pub fn corners(&self, v: usize) -> Vec<usize> {
        (0..self.dart_face[v].len()).map(|i| self.corner(v, i)).collect()
    }
}

impl OnePlanarDrawing {
    /// Builds a drawing after structural checks (ids in range, no loops,
    /// no repeated neighbors, symmetric rotations). Semantic invariants are
    /// left to [`validate_drawing`].
    pub fn new(rotation: Vec<Vec<usize>>, is_false: Vec<bool>) -> Result<Self, DrawingError> {
        let n = rotation.len();
        if is_false.len() != n {
            return Err(DrawingError::SparseIds {
                expected: n,
                missing: is_false.len().min(n) + 1,
            });
        }
        for (v, rot) in rotation.iter().enumerate() {
            let mut seen = BTreeSet::new();
            for &u in rot {
                if u >= n {
                    return Err(DrawingError::Dangling { line: 0, id: u + 1 });
                }
                if u == v {
                    return Err(DrawingError::Loop(v + 1));
                }
                if !seen.insert(u) {
                    return Err(DrawingError::RepeatedNeighbor {
                        vertex: v + 1,
                        neighbor: u + 1,
                    });
                }
            }
        }
        for (v, rot) in rotation.iter().enumerate() {
            for &u in rot {
                if !rotation[u].contains(&v) {
                    return Err(DrawingError::Asymmetric(v + 1, u + 1));
                }
            }
        }
        Ok(OnePlanarDrawing { rotation, is_false })
    }

    /// A plane drawing (no crossings) of a graph with the given rotations.
    pub fn plane(rotation: Vec<Vec<usize>>) -> Result<Self, DrawingError> {
        let n = rotation.len();
        Self::new(rotation, vec![false; n])
    }

    pub fn num_vertices(&self) -> usize {
        self.rotation.len()
    }

    pub fn num_edges(&self) -> usize {
        self.rotation.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    #[inline]
    pub fn is_false(&self, v: usize) -> bool {
        self.is_false[v]
    }

    pub fn false_flags(&self) -> &[bool] {
        &self.is_false
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.rotation[u].len() <= self.rotation[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.rotation[a].contains(&b)
    }

    /// Position of `u` in the rotation at `v`.
    pub fn position(&self, v: usize, u: usize) -> Option<usize> {
        self.rotation[v].iter().position(|&x| x == u)
    }

    /// Clockwise successor of `u` in the rotation at `v`.
    pub fn next_around(&self, v: usize, u: usize) -> usize {
        let rot = &self.rotation[v];
        let i = self.position(v, u).expect("dart not in rotation");
        rot[(i + 1) % rot.len()]
    }

    pub fn true_vertices(&self) -> Vec<usize> {
        (0..self.num_vertices()).filter(|&v| !self.is_false[v]).collect()
    }

    pub fn false_vertices(&self) -> Vec<usize> {
        (0..self.num_vertices()).filter(|&v| self.is_false[v]).collect()
    }

    /// For a true endpoint `u` of a crossing at `w`, returns `(v, x, y)`:
    /// the other end of `u`'s edge and the two ends of the crossed edge, with
    /// `x` the clockwise successor of `u` at `w`.
    pub fn crossing_roles(&self, w: usize, u: usize) -> Option<(usize, usize, usize)> {
        let rot = &self.rotation[w];
        if !self.is_false[w] || rot.len() != 4 {
            return None;
        }
        let i = rot.iter().position(|&t| t == u)?;
        Some((rot[(i + 2) % 4], rot[(i + 1) % 4], rot[(i + 3) % 4]))
    }

    /// Face traversal. Every dart lies on exactly one returned face.
    pub fn face_index(&self) -> FaceIndex {
        let n = self.num_vertices();
        let mut dart_face: Vec<Vec<usize>> =
            self.rotation.iter().map(|r| vec![usize::MAX; r.len()]).collect();
        let mut faces = Vec::new();
        for v in 0..n {
            for i in 0..self.rotation[v].len() {
                if dart_face[v][i] != usize::MAX {
                    continue;
                }
                let id = faces.len();
                let mut walk = Vec::new();
                let (mut a, mut ai) = (v, i);
                loop {
                    dart_face[a][ai] = id;
                    walk.push(a);
                    let b = self.rotation[a][ai];
                    let pos_a = self.position(b, a).expect("symmetric rotation");
                    let bi = (pos_a + 1) % self.rotation[b].len();
                    a = b;
                    ai = bi;
                    if dart_face[a][ai] != usize::MAX {
                        break;
                    }
                }
                faces.push(Face { walk });
            }
        }
        FaceIndex { faces, dart_face }
    }

    pub fn faces(&self) -> Vec<Face> {
        self.face_index().faces
    }

    pub fn is_false_face(&self, f: &Face) -> bool {
        f.walk.iter().any(|&v| self.is_false[v])
    }

    /// Connected components of `G×`.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
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
                for &w in &self.rotation[u] {
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

    /// Map from drawing id to underlying-graph id (`None` for false vertices).
    pub fn graph_ids(&self) -> Vec<Option<usize>> {
        let mut next = 0;
        self.is_false
            .iter()
            .map(|&f| {
                if f {
                    None
                } else {
                    next += 1;
                    Some(next - 1)
                }
            })
            .collect()
    }

    /// Removes edges of the underlying graph (given in graph ids). A crossed
    /// edge disappears together with its crossing, which is smoothed back
    /// into the other edge. True vertices keep their relative order, so the
    /// graph-id correspondence is preserved.
    pub fn without_edges(&self, edges: &[(usize, usize)]) -> Result<Self, DrawingError> {
        let tv = self.true_vertices();
        let mut rot = self.rotation.clone();
        let mut dead = vec![false; self.num_vertices()];
        for &(gu, gv) in edges {
            let (a, b) = match (tv.get(gu), tv.get(gv)) {
                (Some(&a), Some(&b)) => (a, b),
                _ => return Err(DrawingError::UnknownEdge(gu + 1, gv + 1)),
            };
            if rot[a].contains(&b) {
                rot[a].retain(|&x| x != b);
                rot[b].retain(|&x| x != a);
                continue;
            }
            let w = rot[a].iter().copied().find(|&w| {
                !dead[w] && self.is_false[w] && rot[w].len() == 4 && {
                    let i = rot[w].iter().position(|&t| t == a).unwrap();
                    rot[w][(i + 2) % 4] == b
                }
            });
            let Some(w) = w else {
                return Err(DrawingError::UnknownEdge(gu + 1, gv + 1));
            };
            rot[a].retain(|&x| x != w);
            rot[b].retain(|&x| x != w);
            rot[w].retain(|&x| x != a && x != b);
            let (x, y) = (rot[w][0], rot[w][1]);
            for (p, q) in [(x, y), (y, x)] {
                let slot = rot[p].iter().position(|&t| t == w).unwrap();
                rot[p][slot] = q;
            }
            rot[w].clear();
            dead[w] = true;
        }
        let mut new_id = vec![usize::MAX; self.num_vertices()];
        let mut next = 0;
        for v in 0..self.num_vertices() {
            if !dead[v] {
                new_id[v] = next;
                next += 1;
            }
        }
        let mut rotation = Vec::with_capacity(next);
        let mut is_false = Vec::with_capacity(next);
        for v in 0..self.num_vertices() {
            if dead[v] {
                continue;
            }
            rotation.push(rot[v].iter().map(|&u| new_id[u]).collect());
            is_false.push(self.is_false[v]);
        }
        Self::new(rotation, is_false)
    }
}

/// Parses the line-oriented drawing format:
///
/// ```text
/// # comment
/// v 1
/// v 5 false
/// r 1: 2 5 4
/// ```
pub fn parse_drawing(text: &str) -> Result<OnePlanarDrawing, DrawingError> {
    let mut declared: Vec<(usize, bool, usize)> = Vec::new();
    let mut rotations: Vec<(usize, Vec<usize>, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        let syntax = |m: &str| DrawingError::Syntax {
            line,
            message: m.to_string(),
        };
        let parse_id = |tok: &str| -> Result<usize, DrawingError> {
            match tok.parse::<usize>() {
                Ok(0) | Err(_) => Err(syntax(&format!("bad vertex id `{tok}`"))),
                Ok(id) => Ok(id),
            }
        };
        if let Some(rest) = s.strip_prefix("v ") {
            let toks: Vec<&str> = rest.split_whitespace().collect();
            let flag = match toks.as_slice() {
                [_] => false,
                [_, "false"] => true,
                _ => return Err(syntax("expected `v <id> [false]`")),
            };
            let id = parse_id(toks[0])?;
            if declared.iter().any(|&(d, _, _)| d == id) {
                return Err(DrawingError::DuplicateVertex { line, id });
            }
            declared.push((id, flag, line));
        } else if let Some(rest) = s.strip_prefix("r ") {
            let (head, tail) = rest
                .split_once(':')
                .ok_or_else(|| syntax("expected `r <id>: <ids>`"))?;
            let id = parse_id(head.trim())?;
            if rotations.iter().any(|(d, _, _)| *d == id) {
                return Err(DrawingError::DuplicateRotation { line, id });
            }
            let nbrs = tail
                .split_whitespace()
                .map(parse_id)
                .collect::<Result<Vec<_>, _>>()?;
            rotations.push((id, nbrs, line));
        } else {
            return Err(syntax("expected a `v` or `r` line"));
        }
    }

    let n = declared.len();
    let mut is_false = vec![false; n];
    let mut present = vec![false; n];
    for &(id, flag, line) in &declared {
        if id > n {
            let missing = (1..=n).find(|&i| !declared.iter().any(|d| d.0 == i)).unwrap_or(n);
            let _ = line;
            return Err(DrawingError::SparseIds { expected: n, missing });
        }
        is_false[id - 1] = flag;
        present[id - 1] = true;
    }
    let mut rotation: Vec<Option<Vec<usize>>> = vec![None; n];
    for (id, nbrs, line) in rotations {
        if id > n || !present[id - 1] {
            return Err(DrawingError::Dangling { line, id });
        }
        if let Some(&bad) = nbrs.iter().find(|&&u| u > n) {
            return Err(DrawingError::Dangling { line, id: bad });
        }
        rotation[id - 1] = Some(nbrs.into_iter().map(|u| u - 1).collect());
    }
    let rotation = rotation
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or(DrawingError::MissingRotation(v + 1)))
        .collect::<Result<Vec<_>, _>>()?;
    let d = OnePlanarDrawing::new(rotation, is_false)?;
    for v in 0..n {
        if d.is_false(v) {
            if let Some(&u) = d.rotation(v).iter().find(|&&u| d.is_false(u)) {
                let (a, b) = edge_key(v, u);
                return Err(DrawingError::AdjacentFalse(a + 1, b + 1));
            }
        }
    }
    Ok(d)
}

/// Canonical text form: all `v` lines, then all `r` lines, ascending id.
pub fn serialize_drawing(d: &OnePlanarDrawing) -> String {
    let mut out = String::new();
    for v in 0..d.num_vertices() {
        if d.is_false(v) {
            let _ = writeln!(out, "v {} false", v + 1);
        } else {
            let _ = writeln!(out, "v {}", v + 1);
        }
    }
    for v in 0..d.num_vertices() {
        let _ = write!(out, "r {}:", v + 1);
        for &u in d.rotation(v) {
            let _ = write!(out, " {}", u + 1);
        }
        out.push('\n');
    }
    out
}

/// Checks every drawing invariant and reports all violations found.
pub fn validate_drawing(d: &OnePlanarDrawing) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = d.num_vertices();
    for v in 0..n {
        if !d.is_false(v) {
            continue;
        }
        if d.degree(v) != 4 {
            report.push(
                "false-degree",
                Location::Vertex(v),
                format!("false vertex degree {} ≠ 4", d.degree(v)),
            );
        }
        for &u in d.rotation(v) {
            if d.is_false(u) && v < u {
                report.push("adjacent-false", Location::Edge(v, u), "adjacent false vertices");
            }
        }
    }

    let fi = d.face_index();
    let mut face_count = vec![0usize; n];
    let mut comp_of = vec![0usize; n];
    let comps = d.components();
    for (c, comp) in comps.iter().enumerate() {
        for &v in comp {
            comp_of[v] = c;
        }
    }
    for f in &fi.faces {
        face_count[comp_of[f.walk[0]]] += 1;
    }
    for (c, comp) in comps.iter().enumerate() {
        let verts = comp.len() as i64;
        let edges = comp.iter().map(|&v| d.degree(v)).sum::<usize>() as i64 / 2;
        // an isolated vertex has no darts but bounds one face
        let faces = if edges == 0 { 1 } else { face_count[c] as i64 };
        let euler = verts - edges + faces;
        if euler != 2 {
            report.push(
                "genus",
                Location::Vertex(comp[0]),
                format!("genus ≠ 0: V - E + F = {verts} - {edges} + {faces} = {euler}"),
            );
        }
    }

    let mut seen = BTreeSet::new();
    for v in 0..n {
        if d.is_false(v) {
            continue;
        }
        for &u in d.rotation(v) {
            if !d.is_false(u) && v < u {
                seen.insert((v, u));
            }
        }
    }
    for w in 0..n {
        if !d.is_false(w) || d.degree(w) != 4 {
            continue;
        }
        let r = d.rotation(w);
        for (a, c) in [(r[0], r[2]), (r[1], r[3])] {
            if d.is_false(a) || d.is_false(c) {
                continue;
            }
            if !seen.insert(edge_key(a, c)) {
                report.push(
                    "simple",
                    Location::Vertex(w),
                    format!(
                        "smoothing crossing {} duplicates edge {}-{}",
                        w + 1,
                        a.min(c) + 1,
                        a.max(c) + 1
                    ),
                );
            }
        }
    }
    report
}

/// Smooths every false vertex into its two crossing edges. Graph vertex `i`
/// is the `i`-th true vertex of the drawing in ascending id order.
pub fn underlying_graph(d: &OnePlanarDrawing) -> Result<Graph, DrawingError> {
    let ids = d.graph_ids();
    let n = ids.iter().filter(|x| x.is_some()).count();
    let mut g = Graph::new(n);
    let add = |g: &mut Graph, a: usize, b: usize| -> Result<(), DrawingError> {
        let (ga, gb) = (ids[a].unwrap(), ids[b].unwrap());
        g.add_edge(ga, gb)
            .map_err(|_| DrawingError::NotSimple(format!("edge {}-{} would be doubled", a + 1, b + 1)))
    };
    for v in 0..d.num_vertices() {
        if d.is_false(v) {
            continue;
        }
        for &u in d.rotation(v) {
            if !d.is_false(u) && v < u {
                add(&mut g, v, u)?;
            }
        }
    }
    for w in 0..d.num_vertices() {
        if !d.is_false(w) {
            continue;
        }
        let r = d.rotation(w);
        if r.len() != 4 {
            return Err(DrawingError::FalseDegree(w + 1, r.len()));
        }
        if let Some(&u) = r.iter().find(|&&u| d.is_false(u)) {
            return Err(DrawingError::AdjacentFalse(w.min(u) + 1, w.max(u) + 1));
        }
        add(&mut g, r[0], r[2])?;
        add(&mut g, r[1], r[3])?;
    }
    Ok(g)
}
