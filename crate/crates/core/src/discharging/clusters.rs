//! Clusters around a big vertex and the charge bounds built on them.
//!
//! The fan of faces around a true vertex `v` is cut at every true neighbor.
//! Each piece runs from one true neighbor to the next, passing `s` false
//! neighbors and `s + 1` faces. Faces strictly between two false neighbors
//! are never triangles (false vertices are not adjacent), so a piece is
//! described by `s` and whether its two end faces are 3-faces:
//!
//! | `s`  | end 3-faces | type | weight |
//! |------|-------------|------|--------|
//! | 0    | one (the only face) | 3 | 1 |
//! | 0    | none        | 5    | 1      |
//! | 1    | both        | 1    | 2      |
//! | ≥ 1  | exactly one | 2    | 2      |
//! | ≥ 2  | both        | 4    | 3      |
//! | ≥ 1  | none        | 5    | 1      |
//!
//! For types 2, 4 and 5 the cluster's `s` counts every false neighbor in it,
//! so the false neighbors of `v` number `n1 + m` with `m` the sum of those
//! counts. A piece of `s + 1` faces never weighs more than `s + 1`, which
//! gives `2n1 + 2n2 + n3 + 3n4 + n5 <= d`.

use thiserror::Error;

use super::{q, Q};
use crate::drawing::OnePlanarDrawing;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClusterType {
    T1 = 1,
    T2 = 2,
    T3 = 3,
    T4 = 4,
    T5 = 5,
}

impl ClusterType {
    pub fn index(self) -> usize {
        self as usize - 1
    }

    pub fn weight(self) -> usize {
        [2, 2, 1, 3, 1][self.index()]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cluster {
    pub kind: ClusterType,
    /// Rotation position at `v` of the true neighbor opening the cluster.
    pub start: usize,
    /// Face ids, clockwise.
    pub faces: Vec<usize>,
    pub false_neighbors: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClusterCounts {
    pub d: usize,
    /// `n[i]` clusters of type `i + 1`.
    pub n: [usize; 5],
}

impl ClusterCounts {
    pub fn new(d: usize, n: [usize; 5]) -> Self {
        ClusterCounts { d, n }
    }

    pub fn weight(&self) -> usize {
        let n = &self.n;
        2 * n[0] + 2 * n[1] + n[2] + 3 * n[3] + n[4]
    }

    /// False neighbors outside type-1 clusters; negative means infeasible.
    pub fn m(&self) -> i64 {
        let n = &self.n;
        self.d as i64 - (2 * n[0] + n[1] + n[2] + n[3] + n[4]) as i64
    }

    pub fn feasible(&self) -> bool {
        self.weight() <= self.d && self.m() >= 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterDecomposition {
    pub clusters: Vec<Cluster>,
    pub counts: ClusterCounts,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClusterError {
    #[error("vertex {} is false", .0 + 1)]
    FalseVertex(usize),
    #[error("vertex {} has degree {}, clusters need at least 8", .0 + 1, .1)]
    DegreeTooSmall(usize, usize),
    #[error("vertex {} has no true neighbor to cut its fan at", .0 + 1)]
    NoTrueNeighbor(usize),
    #[error("degree {0} is outside the supported band")]
    Degree(usize),
}

pub fn decompose_clusters(d: &OnePlanarDrawing, v: usize) -> Result<ClusterDecomposition, ClusterError> {
    if d.is_false(v) {
        return Err(ClusterError::FalseVertex(v));
    }
    let deg = d.degree(v);
    if deg < 8 {
        return Err(ClusterError::DegreeTooSmall(v, deg));
    }
    let idx = d.face_index();
    let rot = d.rotation(v);
    let cuts: Vec<usize> = (0..deg).filter(|&i| !d.is_false(rot[i])).collect();
    if cuts.is_empty() {
        return Err(ClusterError::NoTrueNeighbor(v));
    }
    let mut clusters = Vec::new();
    let mut n = [0; 5];
    for (j, &start) in cuts.iter().enumerate() {
        let next = cuts[(j + 1) % cuts.len()];
        let span = (next + deg - start - 1) % deg + 1;
        let faces: Vec<usize> = (0..span).map(|k| idx.corner(v, (start + k) % deg)).collect();
        let s = span - 1;
        let tri = |f: usize| idx.faces[f].degree() == 3;
        let ends = tri(faces[0]) as u8 + tri(faces[s]) as u8;
        let kind = match (s, ends) {
            (0, 0) => ClusterType::T5,
            (0, _) => ClusterType::T3,
            (1, 2) => ClusterType::T1,
            (_, 2) => ClusterType::T4,
            (_, 1) => ClusterType::T2,
            _ => ClusterType::T5,
        };
        n[kind.index()] += 1;
        clusters.push(Cluster {
            kind,
            start,
            faces,
            false_neighbors: s,
        });
    }
    Ok(ClusterDecomposition {
        clusters,
        counts: ClusterCounts::new(deg, n),
    })
}

/// Upper bound on the charge a `d`-vertex sends, given its cluster counts.
pub fn gamma(counts: &ClusterCounts) -> Result<Q, ClusterError> {
    let [n1, n2, n3, n4, n5] = counts.n.map(|x| Q::from(x as i64));
    let d = counts.d;
    Ok(match d {
        8 => n1 * q(1, 2) + n2 * q(1, 12) + n4 * q(1, 6),
        9 | 10 => n1 * q(3, 4) + n2 * q(1, 4) + n4 * q(1, 2),
        11 => n1 * q(11, 12) + n2 * q(7, 12) + n3 * q(1, 4) + n4 * q(5, 6) + n5 * q(1, 3),
        12.. => {
            let tail = n1 * q(7, 24) + n2 * q(1, 4) - n3 * q(1, 12) + n4 * q(1, 2);
            let pot = if d >= 13 { q(1, 2) } else { Q::from(0) };
            q(d as i64, 3) + tail + pot
        }
        _ => return Err(ClusterError::Degree(d)),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProgramSolution {
    pub q: Q,
    /// Lexicographically smallest maximizer.
    pub argmax: ClusterCounts,
}

fn feasible_tuples(d: usize) -> impl Iterator<Item = ClusterCounts> {
    let mut out = Vec::new();
    for n1 in 0..=d / 2 {
        for n2 in 0..=(d - 2 * n1) / 2 {
            let left = d - 2 * n1 - 2 * n2;
            for n3 in 0..=left {
                for n4 in 0..=(left - n3) / 3 {
                    for n5 in 0..=left - n3 - 3 * n4 {
                        out.push(ClusterCounts::new(d, [n1, n2, n3, n4, n5]));
                    }
                }
            }
        }
    }
    out.into_iter()
}

/// Maximizes `gamma` over all feasible counts for `8 <= d <= 12`.
///
/// With `side_conditions`, tuples of weight exactly 9 (for `d = 9`) must
/// have `n3 + n4 + n5 >= 1`, and tuples of weight exactly 11 (for `d = 11`)
/// must have `n2 + n3 + n4 + n5 >= 1`.
pub fn solve_cluster_program(d: usize, side_conditions: bool) -> Result<ProgramSolution, ClusterError> {
    if !(8..=12).contains(&d) {
        return Err(ClusterError::Degree(d));
    }
    let allowed = |c: &ClusterCounts| {
        let n = &c.n;
        match (side_conditions, d, c.weight()) {
            (true, 9, 9) => n[2] + n[3] + n[4] >= 1,
            (true, 11, 11) => n[1] + n[2] + n[3] + n[4] >= 1,
            _ => true,
        }
    };
    let mut best: Option<ProgramSolution> = None;
    for c in feasible_tuples(d).filter(allowed) {
        let g = gamma(&c)?;
        if best.as_ref().is_none_or(|b| g > b.q) {
            best = Some(ProgramSolution { q: g, argmax: c });
        }
    }
    Ok(best.expect("the zero tuple is feasible"))
}

/// `max (gamma_d - (d - 6))` over feasible counts, for `d >= 13`.
pub fn max_slack_above_twelve(d: usize) -> Result<Q, ClusterError> {
    if d < 13 {
        return Err(ClusterError::Degree(d));
    }
    let excess = Q::from(d as i64 - 6);
    let mut best = None;
    for c in feasible_tuples(d) {
        let s = gamma(&c)? - excess;
        if best.is_none_or(|b| s > b) {
            best = Some(s);
        }
    }
    Ok(best.expect("the zero tuple is feasible"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_examples() {
        assert_eq!(
            gamma(&ClusterCounts::new(8, [4, 0, 0, 0, 0])).unwrap(),
            Q::from(2)
        );
        assert_eq!(
            gamma(&ClusterCounts::new(11, [5, 0, 0, 0, 1])).unwrap(),
            q(59, 12)
        );
        assert_eq!(
            gamma(&ClusterCounts::new(13, [0, 0, 0, 0, 13])).unwrap(),
            q(29, 6)
        );
        assert!(gamma(&ClusterCounts::new(7, [0; 5])).is_err());
    }

    #[test]
    fn enumeration_is_exhaustive() {
        // count tuples with weight <= 8 independently
        let mut expect = 0;
        for a in 0..9usize {
            for b in 0..9 {
                for c in 0..9 {
                    for e in 0..9 {
                        for f in 0..9 {
                            if 2 * a + 2 * b + c + 3 * e + f <= 8 {
                                expect += 1;
                            }
                        }
                    }
                }
            }
        }
        assert_eq!(feasible_tuples(8).count(), expect);
        assert!(feasible_tuples(8).all(|c| c.feasible()));
    }

    #[test]
    fn out_of_band() {
        assert_eq!(solve_cluster_program(7, false), Err(ClusterError::Degree(7)));
        assert_eq!(solve_cluster_program(13, false), Err(ClusterError::Degree(13)));
    }
}
