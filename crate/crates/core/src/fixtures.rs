//! Small hand-built drawings used throughout the tests and the CLI docs.
//!
//! Most are built from straight-line coordinates with
//! [`from_straight_line`], which derives a clockwise rotation system by
//! sorting neighbors by angle. Coordinates are a construction aid only and
//! are not kept in the drawing.

use crate::drawing::{parse_drawing, OnePlanarDrawing};

/// Square `1-2-3-4` whose diagonals cross at the false vertex `5`.
pub const K4_CROSSING: &str = "\
# K4 drawn with one crossing
v 1
v 2
v 3
v 4
v 5 false
r 1: 2 5 4
r 2: 3 5 1
r 3: 4 5 2
r 4: 1 5 3
r 5: 1 2 3 4
";

pub const TRIANGLE: &str = "v 1\nv 2\nv 3\nr 1: 2 3\nr 2: 3 1\nr 3: 1 2\n";

pub fn k4_crossing() -> OnePlanarDrawing {
    parse_drawing(K4_CROSSING).expect("fixture parses")
}

/// Straight-line drawing with the given vertices marked false. Panics on
/// malformed input; fixtures are expected to be correct by construction.
pub fn from_straight_line(
    points: &[(f64, f64)],
    edges: &[(usize, usize)],
    false_vertices: &[usize],
) -> OnePlanarDrawing {
    let n = points.len();
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in edges {
        nbrs[u].push(v);
        nbrs[v].push(u);
    }
    let rotation = nbrs
        .into_iter()
        .enumerate()
        .map(|(v, mut ns)| {
            let (px, py) = points[v];
            let angle = |u: &usize| {
                let (qx, qy) = points[*u];
                (qy - py).atan2(qx - px)
            };
            // clockwise = decreasing angle
            ns.sort_by(|a, b| angle(b).total_cmp(&angle(a)));
            ns
        })
        .collect();
    let mut flags = vec![false; n];
    for &w in false_vertices {
        flags[w] = true;
    }
    OnePlanarDrawing::new(rotation, flags).expect("fixture is well-formed")
}

/// `n`-cycle embedded in the plane.
pub fn plane_cycle(n: usize) -> OnePlanarDrawing {
    let rotation = (0..n).map(|i| vec![(i + n - 1) % n, (i + 1) % n]).collect();
    OnePlanarDrawing::plane(rotation).expect("cycle is well-formed")
}

/// Plane `K4`: a triangle with a center vertex `0`.
pub fn plane_k4() -> OnePlanarDrawing {
    let pts = [(0.0, 0.0), (0.0, 2.0), (2.0, -1.0), (-2.0, -1.0)];
    let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)];
    from_straight_line(&pts, &edges, &[])
}

/// Plane wheel with hub `0` and a 4-cycle rim `1..=4`. The hub is a
/// 4-vertex on four 3-faces.
pub fn plane_wheel4() -> OnePlanarDrawing {
    let pts = [(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)];
    let edges = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1)];
    from_straight_line(&pts, &edges, &[])
}

/// A true 4-vertex (`0`) whose four neighbors are all false and whose four
/// faces are 4-faces on small vertices only. Returns the drawing and the
/// audited vertex.
pub fn true_four_vertex_on_four_quadrangles() -> (OnePlanarDrawing, usize) {
    let pts = [
        (0.0, 0.0),   // 0 center
        (1.0, 0.0),   // 1 crossing east
        (0.0, 1.0),   // 2 crossing north
        (-1.0, 0.0),  // 3 crossing west
        (0.0, -1.0),  // 4 crossing south
        (1.0, 1.0),   // 5 corner NE
        (-1.0, 1.0),  // 6 corner NW
        (-1.0, -1.0), // 7 corner SW
        (1.0, -1.0),  // 8 corner SE
        (2.0, 0.0),   // 9 far east
        (0.0, 2.0),   // 10 far north
        (-2.0, 0.0),  // 11 far west
        (0.0, -2.0),  // 12 far south
        (3.0, 0.0),   // 13..16 pendants keep the far ends off degree 3
        (0.0, 3.0),
        (-3.0, 0.0),
        (0.0, -3.0),
    ];
    let edges = [
        (0, 1),
        (1, 9),
        (5, 1),
        (1, 8),
        (0, 2),
        (2, 10),
        (5, 2),
        (2, 6),
        (0, 3),
        (3, 11),
        (6, 3),
        (3, 7),
        (0, 4),
        (4, 12),
        (7, 4),
        (4, 8),
        (9, 5),
        (5, 10),
        (10, 6),
        (6, 11),
        (11, 7),
        (7, 12),
        (12, 8),
        (8, 9),
        (9, 13),
        (10, 14),
        (11, 15),
        (12, 16),
    ];
    (from_straight_line(&pts, &edges, &[1, 2, 3, 4]), 0)
}

/// A false vertex on four 3-faces whose four crossing-edge endpoints all
/// have degree exactly 8. Returns the drawing and the false vertex.
pub fn false_vertex_on_four_triangles() -> (OnePlanarDrawing, usize) {
    let mut pts = vec![(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)];
    let ring = 16;
    for i in 0..ring {
        let t = (-45.0 + 22.5 * i as f64).to_radians();
        pts.push((3.0 * t.cos(), 3.0 * t.sin()));
    }
    let r = |i: usize| 5 + i % ring;
    let mut edges = vec![(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1)];
    for (k, corner) in [1usize, 2, 3, 4].into_iter().enumerate() {
        for j in 0..5 {
            edges.push((corner, r(4 * k + j)));
        }
    }
    for i in 0..ring {
        edges.push((r(i), r(i + 1)));
    }
    (from_straight_line(&pts, &edges, &[0]), 0)
}

/// A true 3-vertex (`0`) with one false neighbor, two non-small true
/// neighbors, one 3-face, one 4-face holding three small vertices and one
/// 4-face holding two. Returns the drawing and the audited vertex.
pub fn three_vertex_one_false_neighbor() -> (OnePlanarDrawing, usize) {
    let pts = [
        (0.0, 0.0),   // 0 v
        (0.0, -1.0),  // 1 crossing below v
        (-1.0, 1.0),  // 2 big neighbor
        (1.0, -1.0),  // 3 big neighbor
        (1.0, 1.0),   // 4 small corner of the 4-face between 2 and 3
        (-1.0, -1.0), // 5 small corner of the 4-face between 1 and 2
        (0.0, -2.0),  // 6 far end of v's crossed edge
        (-1.0, 2.0),  // 7..9 pendants on 2
        (-2.0, 2.0),
        (-2.0, 1.0),
        (2.0, -1.0), // 10, 11 pendants on 3
        (2.0, -2.0),
    ];
    let edges = [
        (0, 1),
        (1, 6),
        (1, 5),
        (1, 3),
        (0, 2),
        (0, 3),
        (2, 4),
        (4, 3),
        (2, 5),
        (3, 6),
        (5, 6),
        (2, 7),
        (2, 8),
        (2, 9),
        (3, 10),
        (3, 11),
    ];
    (from_straight_line(&pts, &edges, &[1]), 0)
}

/// The crossing gadget with five pendants on vertex `1`, raising its degree
/// in `G×` to 8. Returns the drawing, the degree-8 vertex and the crossing.
pub fn degree_eight_at_crossing() -> (OnePlanarDrawing, usize, usize) {
    let mut pts = vec![(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)];
    let mut edges = vec![(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1)];
    for j in 0..5 {
        pts.push((3.0, -2.0 + j as f64));
        edges.push((1, 5 + j));
    }
    (from_straight_line(&pts, &edges, &[0]), 1, 0)
}
