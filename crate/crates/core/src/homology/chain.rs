use crate::error::{Error, Result};
use crate::filtration::FilteredComplex;
use crate::linalg::SparseVec;
use crate::scalar::Coefficient;

/// A k-chain: sparse coefficients indexed by canonical simplex position.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainVector<F> {
    degree: usize,
    coeffs: SparseVec<F>,
}

impl<F: Coefficient> ChainVector<F> {
    pub fn new(degree: usize, coeffs: SparseVec<F>) -> Self {
        ChainVector { degree, coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        ChainVector::new(degree, SparseVec::new())
    }

    pub fn simplex(degree: usize, index: usize) -> Self {
        ChainVector::new(degree, SparseVec::unit(index))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &SparseVec<F> {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> SparseVec<F> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn scaled(&self, factor: &F) -> Self {
        ChainVector::new(self.degree, self.coeffs.scaled(factor))
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree, other.degree);
        ChainVector::new(self.degree, self.coeffs.add(&other.coeffs))
    }

    /// Checks that every index is a simplex of dimension `degree` in `complex`.
    pub fn validate(&self, complex: &FilteredComplex) -> Result<()> {
        for index in self.coeffs.indices() {
            if index >= complex.len() {
                return Err(Error::UnknownSimplex {
                    index,
                    len: complex.len(),
                });
            }
            let found = complex.simplex(index).dimension();
            if found != self.degree {
                return Err(Error::WrongDegree {
                    index,
                    expected: self.degree,
                    found,
                });
            }
        }
        Ok(())
    }

    /// Latest birth among the simplices in the support.
    pub fn birth(&self, complex: &FilteredComplex) -> Option<f64> {
        self.coeffs.pivot().map(|i| complex.birth(i))
    }
}

/// Applies the simplicial boundary operator `sum_i (-1)^i face_i`.
///
/// Degree-0 chains map to the zero chain.
pub fn boundary_apply<F: Coefficient>(
    chain: &ChainVector<F>,
    complex: &FilteredComplex,
) -> Result<ChainVector<F>> {
    chain.validate(complex)?;
    if chain.degree() == 0 {
        return Ok(ChainVector::zero(0));
    }
    let mut out = SparseVec::new();
    for (index, coeff) in chain.coeffs().iter() {
        out.add_scaled(coeff, &complex.boundary(index));
    }
    Ok(ChainVector::new(chain.degree() - 1, out))
}
