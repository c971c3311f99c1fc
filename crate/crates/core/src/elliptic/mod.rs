//! Rational points on the two Weierstrass curves, the birational maps to
//! their quartic models, and the pipelines turning multiples of a generator
//! into integer solutions.

mod curve;
mod pipeline;
mod quartic;

pub use curve::{Curve, RationalPoint};
pub use pipeline::{
    k4_solution_from_point, k5_solution_from_point, solutions_from_point, CandidateDiagnostic,
    CandidateOutcome, PipelineReport,
};
pub use quartic::{
    k4_point_to_uv, k4_uv_to_point, k5_point_to_uv, k5_uv_to_point, point_to_uv, uv_to_point,
    QuarticModel, QuarticParams,
};
