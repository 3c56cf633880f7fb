//! Exact simplicial homology and persistence.

mod barcode;
mod chain;
mod persistence;
mod snapshot;

pub(crate) use barcode::fmt_scale;
pub use barcode::{Barcode, PersistencePair};
pub use chain::{boundary_apply, ChainVector};
pub use persistence::compute_persistence;
pub use snapshot::{cophenetic_rank, cycle_snapshot, BoundaryQuotient, CycleSpaceSnapshot};
