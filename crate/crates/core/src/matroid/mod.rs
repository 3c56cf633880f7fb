//! Matroids given by rank functions, filtered matroids, and irreducible sets.

mod cophenetic;
mod cz;
mod dump;
mod filtered;
mod induced;
mod irreducible;
mod linear;
mod rank;
mod submodular;

pub use cophenetic::{cophenetic_matroid, generators_from_barcode, CopheneticMatroid, Generator};
pub use cz::{cz_rank, HomologyModule, IntervalModule, PersistenceModule};
pub use dump::{dump_matroid, format_cover, DUMP_TABLE_LIMIT};
pub use filtered::{
    check_functoriality, push_forward_set, AtLevel, FilteredMatroid, FunctorialityViolation,
    LevelOracle,
};
pub use induced::{induced_rank, is_morphism, InducedOracle};
pub use irreducible::{circuits, irreducible_cover, is_irreducible, CIRCUIT_SEARCH_LIMIT};
pub use linear::{coordinate_zeroing, linear_rank, CoordinateZeroingMatroid, LinearMatroid};
pub use rank::{CardinalityOracle, FnOracle, IrreducibleSet, RankOracle};
pub use submodular::{check_submodular, SubmodularReport, EXHAUSTIVE_LIMIT};
