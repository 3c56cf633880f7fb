//! Ramification forests: how irreducible sets split as the filtration grows.
//!
//! A node is an irreducible set together with the level where it appears.
//! It ramifies at the first later level where its image loses rank; its
//! children are an irreducible cover of that image. Rank-0 singletons never
//! ramify and end their branch.

mod build;
mod export;
mod seed;

pub use build::{
    build_forest, ramification_value, ForestBuilder, NodeId, RamificationForest,
    RamificationNode,
};
pub use export::{export_dot, export_json, export_newick, export_svg};
pub use seed::auto_seed;
