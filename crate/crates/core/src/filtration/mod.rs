//! Filtered simplicial complexes and their constructions.

mod combinatorial;
mod complex;
mod geometric;
pub mod io;
pub mod miniball;
mod simplex;

pub use combinatorial::{clique_complex, nerve, Graph};
pub use complex::FilteredComplex;
pub(crate) use complex::level_at;
pub use geometric::{build_cech, build_vietoris_rips, PointCloud};
pub use io::{load_filtration, save_filtration};
pub use simplex::Simplex;

/// Dimension cap used when none is requested.
pub const DEFAULT_MAX_DIM: usize = 2;
