//! Command-line plumbing: spec parsing, single-ring analysis, grid
//! verification, export and the reproduction table.

mod analyze;
mod export;
mod grid;
mod parse;
mod table;

pub use analyze::{
    analyze, construct_certificate, formula_value, Analysis, AnalyzeOptions, GraphKind, Report, Status,
    DEFAULT_BUDGET_MS,
};
pub use export::{export_graph, write_csv, write_dot, write_json, ExportFormat};
pub use grid::{verify_grid, Bounds, Family, Row, RowStatus, Summary, DEFAULT_SOLVER_MAX_VERTICES};
pub use parse::{parse_ring_spec, parse_ring_spec_with_cap};
pub use table::write_table;
