//! The orthogonal representation `W_{n,k}`, trigonometric moment curves,
//! numeric realization checks and the vertex map `S -> v(S)`.

mod realization;
mod rep;
mod vertex_map;

pub use realization::{
    check_sign_action, cocircuit_point, sign_vector_of_point, verify_realization, RealizationReport,
    SignActionReport, DEFAULT_ZERO_TOL, MAX_TOPE_ENUMERATION,
};
pub use rep::{moment_vectors, representation, IdentityDeviations, MomentConfig, OrthogonalRep, RelationDeviations};
pub use vertex_map::{
    borsuk_adjacent, equivariance_deviations, max_edge_defect, min_vertex_norm, point_to_vertex, sweep, sweep_csv,
    sweep_row, v_of_set, vertex_sum, EquivarianceDeviations, SweepRow, SWEEP_CSV_HEADER,
};
