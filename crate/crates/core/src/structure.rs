//! Reducible configurations in `G`, and local face/degree checks on `G×`.
//!
//! Each detector returns the lexicographically first witness it finds, so
//! runs are reproducible. Witnesses can be re-checked with
//! [`Configuration::holds`].

use std::collections::BTreeSet;
use std::fmt;

use crate::drawing::OnePlanarDrawing;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConfigurationKind {
    LightEdge,
    TriangularThreeVertex,
    DoubleTriangleFourVertex,
    AlternatingCycle,
}

impl fmt::Display for ConfigurationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConfigurationKind::LightEdge => "light-edge",
            ConfigurationKind::TriangularThreeVertex => "triangular-3-vertex",
            ConfigurationKind::DoubleTriangleFourVertex => "double-triangle-4-vertex",
            ConfigurationKind::AlternatingCycle => "alternating-cycle",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Configuration {
    /// `d(u) <= r/2` and `d(u) + d(v) <= r + 2`.
    LightEdge { u: usize, v: usize },
    /// `d(v) = 3` and `vab` is a triangle, `a < b`.
    TriangularThreeVertex { v: usize, a: usize, b: usize },
    /// `d(v) = 4` and the edge `vx` lies on the triangles `vxa` and `vxb`.
    DoubleTriangleFourVertex { v: usize, x: usize, a: usize, b: usize },
    /// `[y0, z0, y1, z1, ..]`: a cycle of `G` whose even positions are
    /// 3-vertices.
    AlternatingCycle { cycle: Vec<usize> },
}

impl Configuration {
    pub fn kind(&self) -> ConfigurationKind {
        match self {
            Configuration::LightEdge { .. } => ConfigurationKind::LightEdge,
            Configuration::TriangularThreeVertex { .. } => ConfigurationKind::TriangularThreeVertex,
            Configuration::DoubleTriangleFourVertex { .. } => ConfigurationKind::DoubleTriangleFourVertex,
            Configuration::AlternatingCycle { .. } => ConfigurationKind::AlternatingCycle,
        }
    }

    /// Re-checks the defining predicate. `r` only matters for light edges.
    pub fn holds(&self, g: &Graph, r: usize) -> bool {
        let n = g.num_vertices();
        let ok = |v: &usize| *v < n;
        match *self {
            Configuration::LightEdge { u, v } => ok(&u) && ok(&v) && g.has_edge(u, v) && is_light(g, u, v, r),
            Configuration::TriangularThreeVertex { v, a, b } => {
                [v, a, b].iter().all(ok)
                    && g.degree(v) == 3
                    && a < b
                    && g.has_edge(v, a)
                    && g.has_edge(v, b)
                    && g.has_edge(a, b)
            }
            Configuration::DoubleTriangleFourVertex { v, x, a, b } => {
                [v, x, a, b].iter().all(ok)
                    && g.degree(v) == 4
                    && a != b
                    && g.has_edge(v, x)
                    && [a, b]
                        .iter()
                        .all(|&t| t != v && t != x && g.has_edge(v, t) && g.has_edge(x, t))
            }
            Configuration::AlternatingCycle { ref cycle } => is_alternating_cycle(g, cycle),
        }
    }

    /// Vertices the witness touches.
    pub fn vertices(&self) -> Vec<usize> {
        match self {
            Configuration::LightEdge { u, v } => vec![*u, *v],
            Configuration::TriangularThreeVertex { v, a, b } => vec![*v, *a, *b],
            Configuration::DoubleTriangleFourVertex { v, x, a, b } => vec![*v, *x, *a, *b],
            Configuration::AlternatingCycle { cycle } => cycle.clone(),
        }
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = |v: &usize| v + 1;
        match self {
            Configuration::LightEdge { u, v } => write!(f, "light-edge {} {}", p(u), p(v)),
            Configuration::TriangularThreeVertex { v, a, b } => {
                write!(f, "triangular-3-vertex {} in {} {} {}", p(v), p(v), p(a), p(b))
            }
            Configuration::DoubleTriangleFourVertex { v, x, a, b } => write!(
                f,
                "double-triangle-4-vertex {} edge {} {} apexes {} {}",
                p(v),
                p(v),
                p(x),
                p(a),
                p(b)
            ),
            Configuration::AlternatingCycle { cycle } => {
                write!(f, "alternating-cycle")?;
                for v in cycle {
                    write!(f, " {}", p(v))?;
                }
                Ok(())
            }
        }
    }
}

fn is_light(g: &Graph, u: usize, v: usize, r: usize) -> bool {
    g.degree(u) <= r / 2 && g.degree(u) + g.degree(v) <= r + 2
}

fn is_alternating_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let m = cycle.len();
    let n = g.num_vertices();
    if m < 4 || m % 2 == 1 || cycle.iter().any(|&v| v >= n) {
        return false;
    }
    let distinct: BTreeSet<_> = cycle.iter().collect();
    distinct.len() == m
        && (0..m).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % m]))
        && cycle.iter().step_by(2).all(|&y| g.degree(y) == 3)
}

/// First edge `uv`, ordered by `(u, v)` with `u` the light end, such that
/// `d(u) <= r/2` and `d(u) + d(v) <= r + 2`.
pub fn find_light_edge(g: &Graph, r: usize) -> Option<Configuration> {
    (0..g.num_vertices())
        .filter(|&u| g.degree(u) <= r / 2)
        .find_map(|u| {
            g.neighbors(u)
                .find(|&v| is_light(g, u, v, r))
                .map(|v| Configuration::LightEdge { u, v })
        })
}

pub fn find_triangular_3_vertex(g: &Graph) -> Option<Configuration> {
    (0..g.num_vertices()).filter(|&v| g.degree(v) == 3).find_map(|v| {
        let ns: Vec<usize> = g.neighbors(v).collect();
        for i in 0..3 {
            for j in i + 1..3 {
                if g.has_edge(ns[i], ns[j]) {
                    return Some(Configuration::TriangularThreeVertex {
                        v,
                        a: ns[i],
                        b: ns[j],
                    });
                }
            }
        }
        None
    })
}

pub fn find_double_triangle_4_vertex(g: &Graph) -> Option<Configuration> {
    (0..g.num_vertices()).filter(|&v| g.degree(v) == 4).find_map(|v| {
        g.neighbors(v).find_map(|x| {
            let mut common = g.neighbor_set(v).intersection(g.neighbor_set(x)).copied();
            let a = common.next()?;
            let b = common.next()?;
            Some(Configuration::DoubleTriangleFourVertex { v, x, a, b })
        })
    })
}

/// A cycle alternating between 3-vertices and their neighbors.
///
/// When no two 3-vertices are adjacent the search space is a genuine
/// bipartite graph between the 3-vertices and their neighbors, and one DFS
/// finds a cycle in linear time. Otherwise a vertex may play either role and
/// the search falls back to backtracking over simple paths, which is
/// exponential in the worst case.
pub fn find_alternating_cycle(g: &Graph) -> Option<Configuration> {
    let n = g.num_vertices();
    let three: Vec<bool> = (0..n).map(|v| g.degree(v) == 3).collect();
    let mixed = (0..n).any(|v| three[v] && g.neighbors(v).any(|u| three[u]));
    let cycle = if mixed {
        backtracking_cycle(g, &three)
    } else {
        bipartite_cycle(g, &three)
    }?;
    Some(Configuration::AlternatingCycle {
        cycle: normalize_cycle(cycle, &three),
    })
}

/// Rotates so the cycle starts at its smallest 3-vertex, then orients it so
/// the smaller of that vertex's two cycle neighbors comes second.
fn normalize_cycle(mut c: Vec<usize>, three: &[bool]) -> Vec<usize> {
    let m = c.len();
    let start = (0..m).step_by(2).min_by_key(|&i| c[i]).expect("nonempty cycle");
    c.rotate_left(start);
    debug_assert!(three[c[0]]);
    if c[m - 1] < c[1] {
        c[1..].reverse();
    }
    c
}

fn bipartite_cycle(g: &Graph, three: &[bool]) -> Option<Vec<usize>> {
    // Edges of H: every edge of G with a 3-vertex end. With no two 3-vertices
    // adjacent each such edge has exactly one, so H is bipartite.
    let n = g.num_vertices();
    let in_h = |a: usize, b: usize| three[a] || three[b];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    for root in 0..n {
        if !three[root] || depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        // iterative DFS keeping an explicit neighbor cursor per frame
        let mut stack: Vec<(usize, Vec<usize>, usize)> = vec![(root, g.neighbors(root).collect(), 0)];
        while let Some((v, ns, cursor)) = stack.last_mut() {
            let v = *v;
            if *cursor == ns.len() {
                stack.pop();
                continue;
            }
            let u = ns[*cursor];
            *cursor += 1;
            if !in_h(v, u) || u == parent[v] {
                continue;
            }
            if depth[u] == usize::MAX {
                depth[u] = depth[v] + 1;
                parent[u] = v;
                stack.push((u, g.neighbors(u).collect(), 0));
            } else if depth[u] < depth[v] {
                // back edge closes the tree path u .. v
                let mut cyc = vec![v];
                let mut t = v;
                while t != u {
                    t = parent[t];
                    cyc.push(t);
                }
                let first3 = cyc.iter().position(|&t| three[t]).expect("H is bipartite");
                cyc.rotate_left(first3);
                return Some(cyc);
            }
        }
    }
    None
}

fn backtracking_cycle(g: &Graph, three: &[bool]) -> Option<Vec<usize>> {
    fn extend(g: &Graph, three: &[bool], path: &mut Vec<usize>, on_path: &mut [bool]) -> bool {
        let last = *path.last().expect("path starts at root");
        let root = path[0];
        let want_three = path.len().is_multiple_of(2);
        for u in g.neighbors(last) {
            if u == root && path.len() >= 4 && want_three {
                return true;
            }
            if on_path[u] || (want_three && !three[u]) || (want_three && u < root) {
                continue;
            }
            path.push(u);
            on_path[u] = true;
            if extend(g, three, path, on_path) {
                return true;
            }
            on_path[u] = false;
            path.pop();
        }
        false
    }
    let n = g.num_vertices();
    let mut on_path = vec![false; n];
    for root in (0..n).filter(|&v| three[v]) {
        let mut path = vec![root];
        on_path[root] = true;
        if extend(g, three, &mut path, &mut on_path) {
            return Some(path);
        }
        on_path[root] = false;
    }
    None
}

/// The local statements checked on a drawing. They are proved for minimal
/// counterexamples only, so on arbitrary drawings a failure is information,
/// not an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EmbeddingCheck {
    /// A 3-vertex on two false 3-faces sharing an edge `vv1` has both other
    /// corners false and lies on a 5+-face.
    ThreeVertexNearFalseTriangles,
    /// A 4-vertex lies on at most three 3-faces.
    FourVertexTriangles,
    /// A 5-vertex lies on two 4+-faces, or has three true neighbors, or one
    /// 4+-face and two true neighbors.
    FiveVertexNeighborhood,
    /// A 5-face has at most four 4⁻-vertices.
    FiveFaceSmallVertices,
}

impl EmbeddingCheck {
    pub const ALL: [EmbeddingCheck; 4] = [
        EmbeddingCheck::ThreeVertexNearFalseTriangles,
        EmbeddingCheck::FourVertexTriangles,
        EmbeddingCheck::FiveVertexNeighborhood,
        EmbeddingCheck::FiveFaceSmallVertices,
    ];
}

impl fmt::Display for EmbeddingCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EmbeddingCheck::ThreeVertexNearFalseTriangles => "3-vertex-false-triangles",
            EmbeddingCheck::FourVertexTriangles => "4-vertex-triangles",
            EmbeddingCheck::FiveVertexNeighborhood => "5-vertex-neighborhood",
            EmbeddingCheck::FiveFaceSmallVertices => "5-face-small-vertices",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Site {
    Vertex(usize),
    /// Index into `OnePlanarDrawing::faces()`.
    Face(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingInstance {
    pub check: EmbeddingCheck,
    pub site: Site,
    pub holds: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DiagnosticsReport {
    pub instances: Vec<EmbeddingInstance>,
}

impl DiagnosticsReport {
    pub fn of(&self, check: EmbeddingCheck) -> impl Iterator<Item = &EmbeddingInstance> {
        self.instances.iter().filter(move |i| i.check == check)
    }

    pub fn violations(&self) -> impl Iterator<Item = &EmbeddingInstance> {
        self.instances.iter().filter(|i| !i.holds)
    }
}

impl fmt::Display for DiagnosticsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in EmbeddingCheck::ALL {
            let total = self.of(check).count();
            let bad: Vec<_> = self.of(check).filter(|i| !i.holds).collect();
            writeln!(f, "{check}: {total} instances, {} violated", bad.len())?;
            for i in bad {
                match i.site {
                    Site::Vertex(v) => writeln!(f, "  vertex {}", v + 1)?,
                    Site::Face(x) => writeln!(f, "  face #{x}")?,
                }
            }
        }
        Ok(())
    }
}

/// Evaluates every [`EmbeddingCheck`] instance of a valid drawing. Vertex
/// ids are drawing ids.
pub fn check_embedding(d: &OnePlanarDrawing) -> DiagnosticsReport {
    let idx = d.face_index();
    let faces = &idx.faces;
    let mut out = DiagnosticsReport::default();
    for v in d.true_vertices() {
        let deg = d.degree(v);
        let rot = d.rotation(v);
        let corners = idx.corners(v);
        let size = |i: usize| faces[corners[i % deg]].degree();
        match deg {
            3 => {
                // corners i-1 and i meet along the edge v -> rot[i]
                let mut hyp = false;
                let mut good = true;
                for i in 0..3 {
                    let (f1, f2) = (corners[(i + 2) % 3], corners[i]);
                    let false_tri = |f: usize| faces[f].degree() == 3 && d.is_false_face(&faces[f]);
                    if false_tri(f1) && false_tri(f2) {
                        hyp = true;
                        let (a, b) = (rot[(i + 2) % 3], rot[(i + 1) % 3]);
                        let on_5 = (0..3).any(|j| size(j) >= 5);
                        good &= d.is_false(a) && d.is_false(b) && on_5;
                    }
                }
                if hyp {
                    out.instances.push(EmbeddingInstance {
                        check: EmbeddingCheck::ThreeVertexNearFalseTriangles,
                        site: Site::Vertex(v),
                        holds: good,
                    });
                }
            }
            4 => {
                let tri = (0..4).filter(|&i| size(i) == 3).count();
                out.instances.push(EmbeddingInstance {
                    check: EmbeddingCheck::FourVertexTriangles,
                    site: Site::Vertex(v),
                    holds: tri <= 3,
                });
            }
            5 => {
                let big = (0..5).filter(|&i| size(i) >= 4).count();
                let true_nbrs = rot.iter().filter(|&&u| !d.is_false(u)).count();
                out.instances.push(EmbeddingInstance {
                    check: EmbeddingCheck::FiveVertexNeighborhood,
                    site: Site::Vertex(v),
                    holds: big >= 2 || true_nbrs >= 3 || (big == 1 && true_nbrs >= 2),
                });
            }
            _ => {}
        }
    }
    for (i, f) in faces.iter().enumerate() {
        if f.degree() == 5 {
            let small = f.walk.iter().filter(|&&v| d.degree(v) <= 4).count();
            out.instances.push(EmbeddingInstance {
                check: EmbeddingCheck::FiveFaceSmallVertices,
                site: Site::Face(i),
                holds: small <= 4,
            });
        }
    }
    out
}
