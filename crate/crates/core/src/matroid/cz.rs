//! The rank function `ρ(ε, η) = dim ψ_{ε,η}(M_ε)` of a persistence module.

use std::marker::PhantomData;

use crate::error::{Error, Result};
use crate::filtration::FilteredComplex;
use crate::homology::{cycle_snapshot, Barcode, BoundaryQuotient};
use crate::scalar::Coefficient;

/// A filtered vector space, queried through the ranks of its structure maps.
pub trait PersistenceModule {
    /// `dim ψ_{ε,η}(M_ε)` for `ε <= η`.
    fn image_rank(&self, from: f64, to: f64) -> Result<usize>;
}

/// Persistence module given by intervals `[birth, death)`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct IntervalModule {
    bars: Vec<(f64, Option<f64>)>,
}

impl IntervalModule {
    pub fn new(bars: Vec<(f64, Option<f64>)>) -> Self {
        IntervalModule { bars }
    }

    pub fn from_barcode<F: Coefficient>(barcode: &Barcode<F>, k: usize) -> Self {
        Self::new(barcode.in_dimension(k).map(|p| (p.birth, p.death)).collect())
    }
}

impl PersistenceModule for IntervalModule {
    fn image_rank(&self, from: f64, to: f64) -> Result<usize> {
        Ok(self
            .bars
            .iter()
            .filter(|(b, d)| *b <= from && d.is_none_or(|d| to < d))
            .count())
    }
}

/// `H_k` of a filtered complex, evaluated by elimination: the rank of a basis
/// of `Z_k^ε` modulo `B_k^η`.
pub struct HomologyModule<'a, F> {
    complex: &'a FilteredComplex,
    degree: usize,
    field: PhantomData<F>,
}

impl<'a, F: Coefficient> HomologyModule<'a, F> {
    pub fn new(complex: &'a FilteredComplex, degree: usize) -> Self {
        HomologyModule {
            complex,
            degree,
            field: PhantomData,
        }
    }
}

impl<F: Coefficient> PersistenceModule for HomologyModule<'_, F> {
    fn image_rank(&self, from: f64, to: f64) -> Result<usize> {
        let cycles = cycle_snapshot::<F>(self.complex, from, self.degree)?.cycles;
        let quotient = BoundaryQuotient::<F>::new(self.complex, to, self.degree)?;
        Ok(quotient.rank_of(&cycles))
    }
}

/// The Carlsson–Zomorodian rank `ρ(ε, η)`; requires `ε <= η`.
pub fn cz_rank<M: PersistenceModule + ?Sized>(module: &M, from: f64, to: f64) -> Result<usize> {
    if from.is_nan() || to.is_nan() || from > to {
        return Err(Error::ScaleOrder { from, to });
    }
    module.image_rank(from, to)
}
