use proptest::prelude::*;

use oneplanar_total::coloring::{find_total_coloring, verify_total_coloring, TotalColoring};
use oneplanar_total::drawing::underlying_graph;
use oneplanar_total::extend::{
    color_drawing, extend_alternating_cycle, extend_light_edge, extend_local_config, removed_edges,
    total_color, EngineError,
};
use oneplanar_total::fixtures;
use oneplanar_total::generate::{generate_random_1planar, GeneratorConfig};
use oneplanar_total::graph::Graph;
use oneplanar_total::structure::{find_alternating_cycle, Configuration, ConfigurationKind};

const R: usize = 13;
const K: u32 = R as u32 + 2;

fn colored(g: &Graph, r: usize) -> TotalColoring {
    let (c, _) = total_color(g, r).unwrap();
    assert!(verify_total_coloring(g, &c, r as u32 + 2).is_ok());
    c
}

/// Colors `g` minus the configuration's edges exactly, then extends.
fn remove_and_extend(g: &Graph, cfg: &Configuration) -> Result<TotalColoring, EngineError> {
    let mut rest = g.clone();
    for (a, b) in removed_edges(cfg) {
        rest.remove_edge(a, b);
    }
    let partial = find_total_coloring(&rest, K).unwrap();
    match cfg {
        Configuration::LightEdge { u, v } => extend_light_edge(g, &partial, (*u, *v), R),
        Configuration::AlternatingCycle { .. } => extend_alternating_cycle(g, &partial, cfg, R),
        _ => extend_local_config(g, &partial, cfg, R),
    }
}

#[test]
fn families() {
    for g in [
        Graph::complete(6),
        Graph::complete(7),
        Graph::cycle(10),
        Graph::complete_bipartite(3, 3),
        Graph::complete_bipartite(4, 9),
        Graph::wheel(13),
        Graph::star(13),
        Graph::path(30),
    ] {
        colored(&g, R);
    }
    colored(&Graph::star(20), 20);
}

#[test]
fn k33_cycle_extension() {
    let g = Graph::complete_bipartite(3, 3);
    let cfg = find_alternating_cycle(&g).unwrap();
    assert_eq!(cfg.kind(), ConfigurationKind::AlternatingCycle);
    let c = remove_and_extend(&g, &cfg).unwrap();
    assert!(verify_total_coloring(&g, &c, K).is_ok());
}

#[test]
fn theta_cycle_extension() {
    // two hubs joined by three paths of length two, hubs also adjacent to a pendant each
    let g = Graph::from_edges(
        7,
        &[(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1), (0, 5), (1, 6)],
    )
    .unwrap();
    let mut g = g;
    for y in [2, 3, 4] {
        let p = g.add_vertex();
        g.add_edge(y, p).unwrap();
    }
    let cfg = find_alternating_cycle(&g).unwrap();
    assert!(cfg.holds(&g, R));
    let c = remove_and_extend(&g, &cfg).unwrap();
    assert!(verify_total_coloring(&g, &c, K).is_ok());
}

#[test]
fn local_extensions() {
    let k4 = Graph::complete(4);
    let cfg = Configuration::TriangularThreeVertex { v: 0, a: 1, b: 2 };
    let c = remove_and_extend(&k4, &cfg).unwrap();
    assert!(verify_total_coloring(&k4, &c, K).is_ok());

    let w4 = Graph::wheel(4);
    let hub = (0..5).find(|&v| w4.degree(v) == 4).unwrap();
    let x = w4.neighbors(hub).next().unwrap();
    let apexes: Vec<usize> = w4
        .neighbors(hub)
        .filter(|&t| t != x && w4.has_edge(x, t))
        .collect();
    let cfg = Configuration::DoubleTriangleFourVertex {
        v: hub,
        x,
        a: apexes[0],
        b: apexes[1],
    };
    assert!(cfg.holds(&w4, R));
    let c = remove_and_extend(&w4, &cfg).unwrap();
    assert!(verify_total_coloring(&w4, &c, K).is_ok());
}

#[test]
fn light_edge_next_to_a_full_vertex() {
    // the heavy end already uses r edge colors; the light end must squeeze in
    let g = Graph::star(R);
    let cfg = Configuration::LightEdge { u: 0, v: R };
    assert!(cfg.holds(&g, R));
    let c = remove_and_extend(&g, &cfg).unwrap();
    assert!(verify_total_coloring(&g, &c, K).is_ok());
}

#[test]
fn contracts_are_checked() {
    let g = Graph::complete(4);
    let partial = find_total_coloring(&g, K).unwrap();
    let wrong_palette = find_total_coloring(&g, 5).unwrap();
    assert!(matches!(
        extend_light_edge(&g, &wrong_palette, (0, 1), R),
        Err(EngineError::Contract(_))
    ));
    let circ = Graph::circulant(20, &[1, 2, 3, 4, 5, 6, 7]);
    let big = find_total_coloring(&Graph::new(20), K).unwrap();
    assert!(matches!(
        extend_light_edge(&circ, &big, (0, 1), R),
        Err(EngineError::Contract(_))
    ));
    let bogus = Configuration::TriangularThreeVertex { v: 0, a: 2, b: 1 };
    assert!(matches!(
        extend_local_config(&g, &partial, &bogus, R),
        Err(EngineError::Contract(_))
    ));
    let not_cycle = Configuration::LightEdge { u: 0, v: 1 };
    assert!(matches!(
        extend_alternating_cycle(&g, &partial, &not_cycle, R),
        Err(EngineError::Contract(_))
    ));
}

#[test]
fn no_configuration_in_dense_regular_graph() {
    let g = Graph::circulant(20, &[1, 2, 3, 4, 5, 6, 7]);
    match total_color(&g, 14) {
        Err(EngineError::NoConfigurationFound { residual, audit }) => {
            assert_eq!(residual, g);
            assert!(audit.is_none());
        }
        other => panic!("expected no configuration, got {other:?}"),
    }
    assert!(matches!(total_color(&g, 13), Err(EngineError::InvalidInput(_))));
}

#[test]
fn drawings_from_fixtures() {
    for d in [
        fixtures::k4_crossing(),
        fixtures::plane_k4(),
        fixtures::plane_wheel4(),
        fixtures::true_four_vertex_on_four_quadrangles().0,
        fixtures::false_vertex_on_four_triangles().0,
    ] {
        let res = color_drawing(&d, None).unwrap();
        assert_eq!(res.graph, underlying_graph(&d).unwrap());
        assert!(verify_total_coloring(&res.graph, &res.coloring, res.r as u32 + 2).is_ok());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn generated_drawings_color(n in 3usize..200, seed in any::<u64>(), frac in 0.0f64..=1.0) {
        let d = generate_random_1planar(&GeneratorConfig::new(n, seed, frac)).unwrap();
        let res = color_drawing(&d, None).unwrap();
        prop_assert_eq!(res.r, res.graph.max_degree().max(13));
        prop_assert!(verify_total_coloring(&res.graph, &res.coloring, res.r as u32 + 2).is_ok());
        let removed: usize = res.trace.steps.iter().map(|s| s.removed.len()).sum();
        prop_assert!(removed <= res.graph.num_edges());
        for s in &res.trace.steps {
            prop_assert_eq!(&s.removed, &removed_edges(&s.config));
        }
    }
}
