//! Seeded random 1-planar drawings.
//!
//! 1. Grow a plane triangulation by dropping each new vertex into a random
//!    triangle.
//! 2. Mix it with random edge flips.
//! 3. Delete some edges whose two sides are both triangles, leaving
//!    pairwise disjoint quadrilaterals.
//! 4. Put a crossing (both diagonals meeting at a new false vertex) into a
//!    share of those quadrilaterals.
//!
//! Every step keeps the rotation system planar, so the result is 1-planar by
//! construction. The RNG is ChaCha8 seeded from the config, so output is the
//! same on every platform.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::drawing::OnePlanarDrawing;
use crate::graph::{edge_key, Edge};

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorConfig {
    /// Number of true vertices.
    pub n: usize,
    pub seed: u64,
    /// Share of the available quadrilaterals that receive a crossing.
    pub crossing_fraction: f64,
    /// Upper bound on every degree in `G×` (hence also in `G`).
    pub max_degree_cap: Option<usize>,
}

impl GeneratorConfig {
    pub fn new(n: usize, seed: u64, crossing_fraction: f64) -> Self {
        GeneratorConfig {
            n,
            seed,
            crossing_fraction,
            max_degree_cap: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeneratorError {
    #[error("need at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("degree cap {0} is below 6")]
    CapTooSmall(usize),
    #[error("crossing fraction {0} is outside [0, 1]")]
    BadFraction(f64),
    #[error("no triangle left with all corners below the degree cap")]
    CapUnreachable,
}

struct Builder {
    rot: Vec<Vec<usize>>,
    cap: usize,
}

impl Builder {
    fn pos(&self, v: usize, u: usize) -> usize {
        self.rot[v].iter().position(|&x| x == u).expect("dart exists")
    }

    fn insert_after(&mut self, v: usize, after: usize, new: usize) {
        let i = self.pos(v, after);
        self.rot[v].insert(i + 1, new);
    }

    fn remove(&mut self, v: usize, u: usize) {
        let i = self.pos(v, u);
        self.rot[v].remove(i);
    }

    fn deg(&self, v: usize) -> usize {
        self.rot[v].len()
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        self.rot[a].contains(&b)
    }

    fn next(&self, v: usize, u: usize) -> usize {
        let r = &self.rot[v];
        r[(self.pos(v, u) + 1) % r.len()]
    }

    fn prev(&self, v: usize, u: usize) -> usize {
        let r = &self.rot[v];
        r[(self.pos(v, u) + r.len() - 1) % r.len()]
    }

    /// Third corners of the two triangles on `ab`, if both sides are
    /// triangles: `(c, d)` with `c = next_a(b)` and `d = prev_a(b)`.
    fn wings(&self, a: usize, b: usize) -> Option<(usize, usize)> {
        let c = self.next(a, b);
        let d = self.prev(a, b);
        (self.next(b, a) == d && self.prev(b, a) == c).then_some((c, d))
    }
}

impl Builder {
    /// Faces of a triangulation as clockwise walks.
    fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for a in 0..self.rot.len() {
            for &x in &self.rot[a] {
                let c = self.next(x, a);
                if a < x && a < c {
                    out.push([a, x, c]);
                }
            }
        }
        out
    }

    fn flip(&mut self, a: usize, x: usize, c: usize, d: usize) {
        self.remove(a, x);
        self.remove(x, a);
        self.insert_after(c, a, d);
        self.insert_after(d, x, c);
    }
}

/// Flips an edge at a capped vertex towards two low-degree vertices so that
/// some triangle has all corners below the cap again.
fn relieve(b: &mut Builder, rng: &mut ChaCha8Rng) -> Result<(), GeneratorError> {
    let n = b.rot.len();
    let mut order: Vec<usize> = (0..n).filter(|&v| b.deg(v) >= b.cap).collect();
    order.shuffle(rng);
    for a in order {
        for i in 0..b.deg(a) {
            let x = b.rot[a][i];
            let Some((c, d)) = b.wings(a, x) else { continue };
            if c != d
                && !b.adjacent(c, d)
                && b.deg(x) >= 4
                && b.deg(x) < b.cap
                && b.deg(c) + 2 <= b.cap
                && b.deg(d) + 2 <= b.cap
            {
                b.flip(a, x, c, d);
                return Ok(());
            }
        }
    }
    Err(GeneratorError::CapUnreachable)
}

pub fn generate_random_1planar(cfg: &GeneratorConfig) -> Result<OnePlanarDrawing, GeneratorError> {
    let n = cfg.n;
    if n < 3 {
        return Err(GeneratorError::TooFewVertices(n));
    }
    if !(0.0..=1.0).contains(&cfg.crossing_fraction) {
        return Err(GeneratorError::BadFraction(cfg.crossing_fraction));
    }
    let cap = cfg.max_degree_cap.unwrap_or(usize::MAX);
    if cap < 6 {
        return Err(GeneratorError::CapTooSmall(cap));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut b = Builder {
        rot: vec![vec![1, 2], vec![2, 0], vec![0, 1]],
        cap,
    };

    // 1. stacked triangulation; faces kept as clockwise walks
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1]];
    for p in 3..n {
        let ok: Vec<usize> = (0..faces.len())
            .filter(|&i| faces[i].iter().all(|&v| b.deg(v) < b.cap))
            .collect();
        let fi = match ok.choose(&mut rng) {
            Some(&fi) => fi,
            None => {
                relieve(&mut b, &mut rng)?;
                faces = b.triangles();
                (0..faces.len())
                    .find(|&i| faces[i].iter().all(|&v| b.deg(v) < b.cap))
                    .expect("relief frees a triangle")
            }
        };
        let [x, y, z] = faces.swap_remove(fi);
        b.rot.push(vec![x, z, y]);
        b.insert_after(y, x, p);
        b.insert_after(z, y, p);
        b.insert_after(x, z, p);
        faces.extend([[x, y, p], [y, z, p], [z, x, p]]);
    }

    // 2. flips ab -> cd
    if n >= 4 {
        for _ in 0..10 * n {
            let a = rng.gen_range(0..n);
            let bb = *b.rot[a]
                .choose(&mut rng)
                .expect("triangulation has no isolated vertex");
            let Some((c, d)) = b.wings(a, bb) else { continue };
            if c == d
                || b.adjacent(c, d)
                || b.deg(a) < 4
                || b.deg(bb) < 4
                || b.deg(c) + 1 > b.cap
                || b.deg(d) + 1 > b.cap
            {
                continue;
            }
            b.flip(a, bb, c, d);
        }
    }

    // 3. carve quadrilaterals; a triangle is used by at most one deletion
    let mut edges: Vec<Edge> = (0..n)
        .flat_map(|a| b.rot[a].iter().filter(move |&&x| x > a).map(move |&x| (a, x)))
        .collect();
    edges.shuffle(&mut rng);
    let mut used: HashSet<[usize; 3]> = HashSet::new();
    let tri_key = |mut t: [usize; 3]| {
        t.sort_unstable();
        t
    };
    let mut quads: Vec<[usize; 4]> = Vec::new();
    for (a, x) in edges {
        if !rng.gen_bool(1.0 / 3.0) || b.deg(a) < 4 || b.deg(x) < 4 {
            continue;
        }
        let Some((c, d)) = b.wings(a, x) else { continue };
        if c == d {
            continue;
        }
        let (t1, t2) = (tri_key([a, x, c]), tri_key([a, x, d]));
        if used.contains(&t1) || used.contains(&t2) {
            continue;
        }
        used.insert(t1);
        used.insert(t2);
        b.remove(a, x);
        b.remove(x, a);
        // face walk: a -> c -> x -> d
        quads.push([a, c, x, d]);
    }

    // 4. crossings
    let mut g_edges: HashSet<Edge> = (0..n)
        .flat_map(|a| b.rot[a].iter().map(move |&x| edge_key(a, x)))
        .collect();
    quads.shuffle(&mut rng);
    let want = (cfg.crossing_fraction * quads.len() as f64).round() as usize;
    let mut is_false = vec![false; n];
    for q in quads.into_iter().take(want) {
        let [p0, p1, p2, p3] = q;
        if g_edges.contains(&edge_key(p0, p2))
            || g_edges.contains(&edge_key(p1, p3))
            || q.iter().any(|&v| b.deg(v) + 1 > b.cap)
        {
            continue;
        }
        let w = b.rot.len();
        for i in 0..4 {
            b.insert_after(q[i], q[(i + 3) % 4], w);
        }
        b.rot.push(vec![p3, p2, p1, p0]);
        is_false.push(true);
        g_edges.insert(edge_key(p0, p2));
        g_edges.insert(edge_key(p1, p3));
    }
    Ok(OnePlanarDrawing::new(b.rot, is_false).expect("generator keeps rotations consistent"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::{serialize_drawing, underlying_graph, validate_drawing};

    #[test]
    fn outputs_validate() {
        for seed in 0..20 {
            for n in [3, 4, 5, 12, 60] {
                let mut cfg = GeneratorConfig::new(n, seed, 1.0);
                if seed % 2 == 1 {
                    cfg.max_degree_cap = Some(7 + seed as usize % 4);
                }
                let d = generate_random_1planar(&cfg).unwrap();
                let rep = validate_drawing(&d);
                assert!(rep.is_ok(), "n={n} seed={seed}\n{rep}");
                let g = underlying_graph(&d).unwrap();
                assert!(g.is_connected());
                assert_eq!(g.num_vertices(), n);
                if let Some(c) = cfg.max_degree_cap {
                    assert!((0..d.num_vertices()).all(|v| d.degree(v) <= c));
                }
            }
        }
    }

    #[test]
    fn crossings_appear() {
        let d = generate_random_1planar(&GeneratorConfig::new(80, 3, 1.0)).unwrap();
        assert!(!d.false_vertices().is_empty());
        let d = generate_random_1planar(&GeneratorConfig::new(80, 3, 0.0)).unwrap();
        assert!(d.false_vertices().is_empty());
    }

    #[test]
    fn deterministic() {
        let cfg = GeneratorConfig::new(50, 11, 0.5);
        let a = serialize_drawing(&generate_random_1planar(&cfg).unwrap());
        let b = serialize_drawing(&generate_random_1planar(&cfg).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_bad_configs() {
        assert_eq!(
            generate_random_1planar(&GeneratorConfig::new(2, 0, 0.5)).unwrap_err(),
            GeneratorError::TooFewVertices(2)
        );
        let mut cfg = GeneratorConfig::new(10, 0, 0.5);
        cfg.max_degree_cap = Some(5);
        assert_eq!(
            generate_random_1planar(&cfg).unwrap_err(),
            GeneratorError::CapTooSmall(5)
        );
    }
}
