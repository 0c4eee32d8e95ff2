//! From a triple to its level-set presentation, cutting group and charts.

mod chart;
mod classify;
mod cut;
mod presentation;
mod report;
mod triple;

pub use chart::{build_charts, build_charts_with, Chart, DomainIneq, SlotExpr};
pub use classify::{classify, ChartKind, Classification, GlobalKind};
pub use cut::{cut_and_present, CutResult};
pub use presentation::{
    build_presentation, cutting_certificate, in_cutting_group, in_identity_component, level_residuals, pi_matrix,
    LevelRow, Presentation,
};
pub use report::{emit_report, render_elem, render_level_row, ReportFormat};
pub use triple::Triple;
