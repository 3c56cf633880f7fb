//! Persistent homology with cophenetic matroids.
//!
//! A filtered complex ([`filtration`]) yields barcodes and cycle
//! representatives ([`homology`]). Classes of cycles modulo boundaries form a
//! matroid at every scale ([`matroid`]); the way its irreducible sets split
//! as the scale grows is recorded in a ramification forest ([`forest`]), and
//! the scale at which two classes become dependent gives an ultrametric
//! ([`distance`]).
//!
//! Linear algebra is exact and generic over [`scalar::Coefficient`]; the
//! aliases below fix the field for the common cases.

pub mod demo;
pub mod distance;
pub mod error;
pub mod filtration;
pub mod forest;
pub mod homology;
pub mod linalg;
pub mod matroid;
pub mod scalar;

pub use error::{Error, Result};

pub type Rational = num_rational::BigRational;
pub type Gf2 = scalar::Gf<2>;
pub type Gf3 = scalar::Gf<3>;

pub type RationalChain = homology::ChainVector<Rational>;
pub type RationalBarcode = homology::Barcode<Rational>;
pub type RationalGenerator = matroid::Generator<Rational>;
pub type RationalCopheneticMatroid<'a> = matroid::CopheneticMatroid<'a, Rational>;
pub type Gf2Barcode = homology::Barcode<Gf2>;
