//! Built-in datasets: four vectors under coordinate zeroing, and three small
//! triangles inside a large one.

use crate::filtration::io::parse_filtration;
use crate::filtration::FilteredComplex;
use crate::homology::compute_persistence;
use crate::matroid::{CoordinateZeroingMatroid, Generator, IrreducibleSet};
use crate::scalar::Coefficient;

pub const TRIANGLES_FILTRATION: &str = include_str!("../data/triangles.filt");

pub const TRIANGLE_VERTEX_NAMES: [&str; 12] =
    ["A", "B", "C", "D", "E", "F", "G", "H", "I", "J", "K", "L"];

pub fn triangle_complex() -> FilteredComplex {
    parse_filtration(TRIANGLES_FILTRATION).expect("bundled filtration is valid")
}

/// Letters of the vertices touched by a chain, sorted: `"DEF"`.
pub fn vertex_label(complex: &FilteredComplex, generator: &Generator<impl Coefficient>) -> String {
    let mut v: Vec<usize> = generator
        .chain
        .coeffs()
        .indices()
        .flat_map(|i| complex.simplex(i).vertices().to_vec())
        .collect();
    v.sort_unstable();
    v.dedup();
    v.iter()
        .map(|&i| TRIANGLE_VERTEX_NAMES.get(i).map_or_else(|| i.to_string(), |s| s.to_string()))
        .collect()
}

/// The `H_1` bar representatives of the triangle example, labeled by their
/// vertices. Ids follow the barcode: DEF, GHI, JKL, then ABC.
pub fn triangle_generators<F: Coefficient>(complex: &FilteredComplex) -> Vec<Generator<F>> {
    compute_persistence::<F>(complex, 1)
        .in_dimension(1)
        .map(|p| {
            let mut g = Generator {
                label: String::new(),
                chain: p.representative.clone(),
                birth: p.birth,
            };
            g.label = vertex_label(complex, &g);
            g
        })
        .collect()
}

pub const S_EPSILON_VECTORS: [[i64; 4]; 4] = [[1, 1, 1, 1], [1, 1, 2, 2], [1, 2, 3, 3], [3, 5, 6, 6]];

pub fn s_epsilon_matroid<F: Coefficient>() -> CoordinateZeroingMatroid<F> {
    let vectors = S_EPSILON_VECTORS
        .iter()
        .map(|v| v.iter().map(|&x| F::from_i64(x)).collect())
        .collect();
    let labels = S_EPSILON_VECTORS
        .iter()
        .map(|v| v.iter().map(i64::to_string).collect())
        .collect();
    CoordinateZeroingMatroid::new(vectors)
        .expect("vectors share a dimension")
        .with_labels(labels)
}

/// All four vectors, irreducible at level 0.
pub fn s_epsilon_seed() -> (IrreducibleSet, usize) {
    (
        IrreducibleSet {
            elements: vec![0, 1, 2, 3],
            rank: 3,
        },
        0,
    )
}
