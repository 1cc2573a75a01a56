//! CHSH evaluation with undefined slots, counterfactual definability,
//! snapping of frames onto the descriptor grid, and grid scans.

mod chsh;
mod frame;
mod scan;
mod snap;

pub use chsh::{
    bell_exact_configuration, chsh_evaluate, counterfactual_definability, evaluate_exact_frame,
    exact_quadruple, ChshResult, ChshValue, Correlation, CorrelationQuadruple, TSIRELSON_TOLERANCE,
};
pub use frame::{MeasurementFrame, PAIRS, PAIR_LABELS};
pub use scan::{
    chsh_scan, chsh_scan_grid, grid_denominator, limit_table_csv, singular_limit_table, LimitRow,
    ScanReport, DEFAULT_GRID,
};
pub use snap::{
    quadruple_from_frame, snap_count, sphere_realizable, sphere_realizable_scaled, Snap, SnappedFrame,
};
