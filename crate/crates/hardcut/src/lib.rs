//! Expander-backed handlebodies that are expensive to cut in half.
//!
//! This crate builds a discrete model of a solid obtained by thickening a
//! 3-regular expander graph: every vertex becomes a ball of radius `1/n`,
//! every edge a glued hole disc. Any surface splitting the solid into two
//! parts of substantial volume must sever many holes, so the cheapest
//! balanced cut grows with the expansion constant. The crate generates and
//! certifies the expanders, assembles the geometry, searches for cheap
//! balanced cuts, and replays the case analysis behind the lower bound.
//!
//! ## Library tour by example
//!
//! One runnable example per capability, under `examples/`:
//!
//! - **`generate_expander`** - seeded 3-regular graph generation and the
//!   text format
//! - **`certify_expansion`** - exact vs spectral expansion certificates
//! - **`build_handlebody`** - assembling a model and its geometric constants
//! - **`search_min_cut`** - exact, sweep, and randomized balanced min cuts
//! - **`case_analysis`** - replaying the case split on a fractional cut
//! - **`verify_formulas`** - the closed-form identities and the constant
//!   chain checker
//! - **`scaling_experiment`** - cut cost versus scale as a CSV experiment
//!
//! ```bash
//! cargo run --release -p hardcut --example generate_expander
//! cargo run --release -p hardcut --example certify_expansion
//! cargo run --release -p hardcut --example build_handlebody
//! cargo run --release -p hardcut --example search_min_cut
//! cargo run --release -p hardcut --example case_analysis
//! cargo run --release -p hardcut --example verify_formulas
//! cargo run --release -p hardcut --example scaling_experiment
//! ```
//!
//! The same functionality is scripted by the thin `hardcut` binary with the
//! subcommands `generate`, `certify`, `mincut`, `scaling`, and `formulas`.

pub mod error;
pub mod geometry;
pub mod graph;
pub mod handlebody;
pub mod harness;
pub mod search;
mod spectral;

pub use error::{Error, Result};
pub use graph::{
    edge_boundary, exact_expansion, generate_regular, spectral_expansion_bound,
    ExpansionCertificate, Multigraph, VertexCut,
};
pub use handlebody::{
    build_model, classify_cells, theorem_lower_bound, CaseReport, CellClass, FractionalCut,
    GeometryParams, HandlebodyModel, TheoremCase,
};
pub use search::{
    exact_balanced_min_cut, local_search_refine, randomized_search, spectral_sweep_cut, CutResult,
    SearchMethod,
};

/// Largest round epsilon under the standing `eps < 1/100` assumption.
pub const DEFAULT_EPSILON: f64 = 0.009;
