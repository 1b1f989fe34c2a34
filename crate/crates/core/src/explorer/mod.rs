//! Design-space exploration: aspect-ratio/bending-angle sweeps of the
//! evaluation function (optionally with physical stiffness attached), an
//! exhaustive cross-section search under a packaging constraint, and
//! deterministic CSV/SVG emission of the results.

mod emit;
mod search;
mod sweep;

pub use emit::{emit_csv, emit_svg, render_csv, render_svg};
pub use search::{
    find_best_section, SearchObjective, SectionChoice, SectionSearchOutcome, SectionSearchSpec,
};
pub use sweep::{run_sweep, SweepContext, SweepRow, SweepSpec, SweepTable};
