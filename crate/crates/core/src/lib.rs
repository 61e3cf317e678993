//! Total colorings of 1-planar graphs.
//!
//! The crate has two halves. The coloring engine ([`extend::total_color`])
//! produces a total `(r + 2)`-coloring of a 1-planar graph with maximum
//! degree at most `r` (for `r >= 13`) by repeatedly deleting a reducible
//! configuration, coloring what is left and extending the coloring back.
//! The discharging auditor ([`discharging`]) replays the charge-counting
//! argument on concrete drawings: initial charges, the nine transfer rules,
//! cluster decomposition around big vertices, and the per-degree integer
//! programs bounding the charge a big vertex can send.
//!
//! Drawings are rotation systems of the associated plane graph, where each
//! crossing is a degree-4 "false" vertex ([`drawing::OnePlanarDrawing`]).

pub mod coloring;
pub mod discharging;
pub mod drawing;
pub mod extend;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod io;
pub mod structure;
