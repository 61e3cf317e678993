//! The coloring engine: peel off reducible configurations until the graph is
//! tiny, color that exactly, then put the configurations back one at a time.
//!
//! Each extension only recolors a bounded set of elements near the
//! configuration and is re-verified locally; the result is verified in full
//! before it is returned.

use std::fmt;

use thiserror::Error;

use crate::coloring::{
    color_even_cycle_from_lists, find_total_coloring, verify_around, verify_total_coloring,
    ListColoringError, TotalColoring,
};
use crate::discharging::{audit, AuditReport};
use crate::drawing::{underlying_graph, OnePlanarDrawing};
use crate::graph::{edge_key, Edge, Element, Graph};
use crate::structure::{
    find_alternating_cycle, find_double_triangle_4_vertex, find_light_edge, find_triangular_3_vertex,
    Configuration, ConfigurationKind,
};

/// Graphs whose non-isolated part has at most this many vertices plus edges
/// are colored directly.
pub const BASE_ELEMENTS: usize = 16;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EngineError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("no reducible configuration in a graph with {} edges", residual.num_edges())]
    NoConfigurationFound {
        residual: Graph,
        audit: Option<Box<AuditReport>>,
    },
    #[error("{kind} extension failed: {detail}")]
    ExtensionFailed { kind: ConfigurationKind, detail: String },
    #[error("edge {}-{} has only {size} available colors", .edge.0 + 1, .edge.1 + 1)]
    ListTooSmall { edge: Edge, size: usize },
    #[error("contract violated: {0}")]
    Contract(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub config: Configuration,
    pub removed: Vec<Edge>,
}

/// Reductions in the order they were made, in the caller's vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
}

impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            writeln!(f, "{}", s.config)?;
        }
        Ok(())
    }
}

/// Edges a configuration gives up.
pub fn removed_edges(cfg: &Configuration) -> Vec<Edge> {
    match cfg {
        Configuration::LightEdge { u, v } => vec![edge_key(*u, *v)],
        Configuration::TriangularThreeVertex { v, b, .. } => vec![edge_key(*v, *b)],
        Configuration::DoubleTriangleFourVertex { v, x, .. } => vec![edge_key(*v, *x)],
        Configuration::AlternatingCycle { cycle } => {
            let m = cycle.len();
            (0..m).map(|i| edge_key(cycle[i], cycle[(i + 1) % m])).collect()
        }
    }
}

pub fn detect(g: &Graph, r: usize) -> Option<Configuration> {
    find_light_edge(g, r)
        .or_else(|| find_triangular_3_vertex(g))
        .or_else(|| find_double_triangle_4_vertex(g))
        .or_else(|| find_alternating_cycle(g))
}

fn palette_check(partial: &TotalColoring, r: usize) -> Result<(), EngineError> {
    if partial.palette() as usize != r + 2 {
        return Err(EngineError::Contract(format!(
            "partial coloring uses {} colors, expected {}",
            partial.palette(),
            r + 2
        )));
    }
    Ok(())
}

/// Puts back a light edge `uv` (`u` the light end): uncolor `u`, color `uv`,
/// recolor `u`. Both steps have a free color by counting.
pub fn extend_light_edge(
    g: &Graph,
    partial: &TotalColoring,
    uv: Edge,
    r: usize,
) -> Result<TotalColoring, EngineError> {
    let (u, v) = uv;
    palette_check(partial, r)?;
    if !g.has_edge(u, v) || g.degree(u) > r / 2 || g.degree(u) + g.degree(v) > r + 2 {
        return Err(EngineError::Contract(format!(
            "{}-{} is not a light edge",
            u + 1,
            v + 1
        )));
    }
    let fail = |detail: &str| EngineError::ExtensionFailed {
        kind: ConfigurationKind::LightEdge,
        detail: detail.into(),
    };
    let mut c = partial.clone();
    c.clear_vertex(u);
    c.clear_edge(u, v);
    let e = *c
        .free_colors(g, Element::Edge(u, v))
        .first()
        .ok_or_else(|| fail("no color for the edge"))?;
    c.set_edge(u, v, e);
    let x = *c
        .free_colors(g, Element::Vertex(u))
        .first()
        .ok_or_else(|| fail("no color for the light end"))?;
    c.set_vertex(u, x);
    Ok(c)
}

/// Clears `elems` and searches all assignments to them, everything else
/// fixed.
fn recolor_exhaustively(g: &Graph, c: &mut TotalColoring, elems: &[Element]) -> bool {
    fn go(g: &Graph, c: &mut TotalColoring, elems: &[Element]) -> bool {
        let Some((&e, rest)) = elems.split_first() else {
            return true;
        };
        for col in c.free_colors(g, e) {
            c.set(e, Some(col));
            if go(g, c, rest) {
                return true;
            }
        }
        c.set(e, None);
        false
    }
    for &e in elems {
        c.set(e, None);
    }
    go(g, c, elems)
}

/// Puts back the removed edge of a triangular 3-vertex or a double-triangle
/// 4-vertex by searching over the elements the reducibility argument
/// touches: every edge at the center, the triangle edges opposite it, and
/// the center itself.
pub fn extend_local_config(
    g: &Graph,
    partial: &TotalColoring,
    cfg: &Configuration,
    r: usize,
) -> Result<TotalColoring, EngineError> {
    palette_check(partial, r)?;
    if !cfg.holds(g, r) {
        return Err(EngineError::Contract(format!("{cfg} does not hold in the graph")));
    }
    let (v, opposite) = match *cfg {
        Configuration::TriangularThreeVertex { v, a, b } => (v, vec![edge_key(a, b)]),
        Configuration::DoubleTriangleFourVertex { v, x, a, b } => (v, vec![edge_key(x, a), edge_key(x, b)]),
        _ => {
            return Err(EngineError::Contract(format!(
                "{} is not a local configuration",
                cfg.kind()
            )))
        }
    };
    let mut elems: Vec<Element> = g
        .neighbors(v)
        .map(|u| Element::Edge(v.min(u), v.max(u)))
        .collect();
    elems.extend(opposite.into_iter().map(|(a, b)| Element::Edge(a, b)));
    elems.push(Element::Vertex(v));
    let mut c = partial.clone();
    if recolor_exhaustively(g, &mut c, &elems) {
        Ok(c)
    } else {
        Err(EngineError::ExtensionFailed {
            kind: cfg.kind(),
            detail: format!("no assignment of {} local elements", elems.len()),
        })
    }
}

/// Puts back the edges of an alternating cycle: uncolor its 3-vertices,
/// list-color the cycle edges, then recolor the 3-vertices one by one.
pub fn extend_alternating_cycle(
    g: &Graph,
    partial: &TotalColoring,
    cfg: &Configuration,
    r: usize,
) -> Result<TotalColoring, EngineError> {
    palette_check(partial, r)?;
    let Configuration::AlternatingCycle { cycle } = cfg else {
        return Err(EngineError::Contract(format!(
            "{} is not an alternating cycle",
            cfg.kind()
        )));
    };
    if !cfg.holds(g, r) {
        return Err(EngineError::Contract(format!(
            "{cfg} is not an even alternating cycle"
        )));
    }
    let m = cycle.len();
    let mut c = partial.clone();
    for i in 0..m {
        c.clear_edge(cycle[i], cycle[(i + 1) % m]);
    }
    for &y in cycle.iter().step_by(2) {
        c.clear_vertex(y);
    }
    let lists: Vec<Vec<u32>> = (0..m)
        .map(|i| {
            let (a, b) = edge_key(cycle[i], cycle[(i + 1) % m]);
            c.free_colors(g, Element::Edge(a, b))
        })
        .collect();
    let colors = color_even_cycle_from_lists(&lists).map_err(|e| match e {
        ListColoringError::ListTooSmall { edge, size } => EngineError::ListTooSmall {
            edge: edge_key(cycle[edge], cycle[(edge + 1) % m]),
            size,
        },
        ListColoringError::OddCycle(_) => EngineError::Contract(e.to_string()),
    })?;
    for i in 0..m {
        c.set_edge(cycle[i], cycle[(i + 1) % m], colors[i]);
    }
    for &y in cycle.iter().step_by(2) {
        let Some(&col) = c.free_colors(g, Element::Vertex(y)).first() else {
            return Err(EngineError::ExtensionFailed {
                kind: ConfigurationKind::AlternatingCycle,
                detail: format!("no color left for vertex {}", y + 1),
            });
        };
        c.set_vertex(y, col);
    }
    Ok(c)
}

fn extend(
    g: &Graph,
    partial: &TotalColoring,
    cfg: &Configuration,
    r: usize,
) -> Result<TotalColoring, EngineError> {
    match cfg {
        Configuration::LightEdge { u, v } => extend_light_edge(g, partial, (*u, *v), r),
        Configuration::AlternatingCycle { .. } => extend_alternating_cycle(g, partial, cfg, r),
        _ => extend_local_config(g, partial, cfg, r),
    }
}

fn base_size(g: &Graph) -> usize {
    (0..g.num_vertices()).filter(|&v| g.degree(v) > 0).count() + g.num_edges()
}

/// Colors one connected graph. Trace and errors use `g`'s own ids.
fn color_connected(g: &Graph, r: usize) -> Result<(TotalColoring, Vec<ReductionStep>), EngineError> {
    let k = (r + 2) as u32;
    let mut work = g.clone();
    let mut steps = Vec::new();
    while base_size(&work) > BASE_ELEMENTS {
        let Some(config) = detect(&work, r) else {
            return Err(EngineError::NoConfigurationFound {
                residual: work,
                audit: None,
            });
        };
        let removed = removed_edges(&config);
        for &(a, b) in &removed {
            work.remove_edge(a, b);
        }
        steps.push(ReductionStep { config, removed });
    }
    let mut c = find_total_coloring(&work, k).ok_or_else(|| {
        EngineError::Contract(format!(
            "base graph with {} elements has no {k}-coloring",
            base_size(&work)
        ))
    })?;
    for step in steps.iter().rev() {
        for &(a, b) in &step.removed {
            work.add_edge(a, b).expect("edge was removed from this graph");
        }
        c = extend(&work, &c, &step.config, r)?;
        let mut near: Vec<usize> = step.config.vertices();
        for v in step.config.vertices() {
            near.extend(work.neighbors(v));
        }
        near.sort_unstable();
        near.dedup();
        let rep = verify_around(&work, &c, k, &near);
        if !rep.is_ok() {
            return Err(EngineError::ExtensionFailed {
                kind: step.config.kind(),
                detail: format!("local re-check failed:\n{rep}"),
            });
        }
    }
    Ok((c, steps))
}

fn relabel(cfg: &Configuration, map: &[usize]) -> Configuration {
    let m = |v: usize| map[v];
    match cfg {
        Configuration::LightEdge { u, v } => Configuration::LightEdge { u: m(*u), v: m(*v) },
        Configuration::TriangularThreeVertex { v, a, b } => {
            let (a, b) = (m(*a).min(m(*b)), m(*a).max(m(*b)));
            Configuration::TriangularThreeVertex { v: m(*v), a, b }
        }
        Configuration::DoubleTriangleFourVertex { v, x, a, b } => Configuration::DoubleTriangleFourVertex {
            v: m(*v),
            x: m(*x),
            a: m(*a),
            b: m(*b),
        },
        Configuration::AlternatingCycle { cycle } => Configuration::AlternatingCycle {
            cycle: cycle.iter().map(|&v| m(v)).collect(),
        },
    }
}

/// Total `(r + 2)`-coloring of a graph with maximum degree at most `r`,
/// `r >= 13`. Components are colored independently.
pub fn total_color(g: &Graph, r: usize) -> Result<(TotalColoring, ReductionTrace), EngineError> {
    if r < 13 {
        return Err(EngineError::InvalidInput(format!("r = {r} is below 13")));
    }
    if g.max_degree() > r {
        return Err(EngineError::InvalidInput(format!(
            "maximum degree {} exceeds r = {r}",
            g.max_degree()
        )));
    }
    let k = (r + 2) as u32;
    let mut out = TotalColoring::new(g.num_vertices(), k);
    let mut trace = ReductionTrace::default();
    for comp in g.components() {
        let h = g.induced(&comp);
        let (c, steps) = color_connected(&h, r).map_err(|e| match e {
            EngineError::NoConfigurationFound { residual, .. } => {
                let mut full = Graph::new(g.num_vertices());
                for (a, b) in residual.edges() {
                    full.add_edge(comp[a], comp[b])
                        .expect("relabeling keeps the graph simple");
                }
                EngineError::NoConfigurationFound {
                    residual: full,
                    audit: None,
                }
            }
            e => e,
        })?;
        for (i, &v) in comp.iter().enumerate() {
            if let Some(col) = c.vertex(i) {
                out.set_vertex(v, col);
            }
        }
        for (&(a, b), &col) in c.edge_colors() {
            out.set_edge(comp[a], comp[b], col);
        }
        trace.steps.extend(steps.into_iter().map(|s| {
            ReductionStep {
                config: relabel(&s.config, &comp),
                removed: s
                    .removed
                    .iter()
                    .map(|&(a, b)| edge_key(comp[a], comp[b]))
                    .collect(),
            }
        }));
    }
    let rep = verify_total_coloring(g, &out, k);
    if !rep.is_ok() {
        return Err(EngineError::Contract(format!(
            "final coloring does not verify:\n{rep}"
        )));
    }
    Ok((out, trace))
}

/// Result of coloring a drawing's underlying graph.
#[derive(Debug, Clone)]
pub struct DrawingColoring {
    pub graph: Graph,
    pub r: usize,
    pub coloring: TotalColoring,
    pub trace: ReductionTrace,
}

/// Colors the underlying graph of `d`, with `r` defaulting to
/// `max(13, Δ)`. When no configuration is found, the error carries a
/// discharging audit of the drawing restricted to the residual graph.
pub fn color_drawing(d: &OnePlanarDrawing, r: Option<usize>) -> Result<DrawingColoring, EngineError> {
    let graph = underlying_graph(d).map_err(|e| EngineError::InvalidInput(e.to_string()))?;
    let r = r.unwrap_or_else(|| graph.max_degree().max(13));
    match total_color(&graph, r) {
        Ok((coloring, trace)) => Ok(DrawingColoring {
            graph,
            r,
            coloring,
            trace,
        }),
        Err(EngineError::NoConfigurationFound { residual, .. }) => {
            let gone: Vec<Edge> = graph.edges().filter(|&(a, b)| !residual.has_edge(a, b)).collect();
            let audit = d
                .without_edges(&gone)
                .ok()
                .and_then(|sub| audit(&sub, r).ok())
                .map(Box::new);
            Err(EngineError::NoConfigurationFound { residual, audit })
        }
        Err(e) => Err(e),
    }
}
