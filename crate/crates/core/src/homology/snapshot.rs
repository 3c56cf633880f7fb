use crate::error::{Error, Result};
use crate::filtration::FilteredComplex;
use crate::homology::{boundary_apply, ChainVector};
use crate::linalg::{reduce_columns, EchelonBasis, SparseVec};
use crate::scalar::Coefficient;

/// Bases of the cycle and boundary spaces in degree `k` at one scale.
#[derive(Clone, Debug)]
pub struct CycleSpaceSnapshot<F> {
    /// The critical value the query resolved to; `None` below the first one.
    pub scale: Option<f64>,
    pub degree: usize,
    pub cycles: Vec<ChainVector<F>>,
    pub boundaries: Vec<ChainVector<F>>,
}

impl<F: Coefficient> CycleSpaceSnapshot<F> {
    pub fn dim_cycles(&self) -> usize {
        self.cycles.len()
    }

    pub fn dim_boundaries(&self) -> usize {
        self.boundaries.len()
    }

    pub fn betti(&self) -> usize {
        self.cycles.len() - self.boundaries.len()
    }
}

fn check_scale(scale: f64) -> Result<()> {
    if scale.is_nan() || scale < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "scale must be non-negative, got {scale}"
        )));
    }
    Ok(())
}

fn boundary_columns<F: Coefficient>(
    complex: &FilteredComplex,
    dim: usize,
    prefix: usize,
) -> Vec<(usize, SparseVec<F>)> {
    complex
        .indices_of_dim(dim, prefix)
        .map(|i| (i, complex.boundary(i)))
        .collect()
}

/// Cycle and boundary bases of the subcomplex present at `scale`, computed
/// from scratch by exact elimination.
pub fn cycle_snapshot<F: Coefficient>(
    complex: &FilteredComplex,
    scale: f64,
    k: usize,
) -> Result<CycleSpaceSnapshot<F>> {
    check_scale(scale)?;
    let level = complex.level_at(scale);
    let prefix = complex.prefix_len_at(scale);

    let cycles: Vec<ChainVector<F>> = if k == 0 {
        complex
            .indices_of_dim(0, prefix)
            .map(|i| ChainVector::simplex(0, i))
            .collect()
    } else {
        reduce_columns(boundary_columns::<F>(complex, k, prefix))
            .kernel()
            .map(|v| ChainVector::new(k, v.clone()))
            .collect()
    };
    let boundaries = reduce_columns(boundary_columns::<F>(complex, k + 1, prefix))
        .image()
        .map(|v| ChainVector::new(k, v.clone()))
        .collect();
    Ok(CycleSpaceSnapshot {
        scale: level.map(|l| complex.critical_values()[l]),
        degree: k,
        cycles,
        boundaries,
    })
}

/// The boundary space `B_k` at one scale, ready to reduce cycles modulo it.
#[derive(Clone, Debug)]
pub struct BoundaryQuotient<F> {
    degree: usize,
    scale: f64,
    prefix: usize,
    basis: EchelonBasis<F>,
}

impl<F: Coefficient> BoundaryQuotient<F> {
    pub fn new(complex: &FilteredComplex, scale: f64, k: usize) -> Result<Self> {
        check_scale(scale)?;
        let prefix = complex.prefix_len_at(scale);
        let mut basis = EchelonBasis::new();
        for b in reduce_columns(boundary_columns::<F>(complex, k + 1, prefix)).image() {
            basis.insert(b.clone());
        }
        Ok(BoundaryQuotient {
            degree: k,
            scale,
            prefix,
            basis,
        })
    }

    pub fn dim_boundaries(&self) -> usize {
        self.basis.rank()
    }

    /// Fails unless `chain` is a `k`-cycle supported on simplices present here.
    pub fn check_cycle(
        &self,
        complex: &FilteredComplex,
        element: usize,
        chain: &ChainVector<F>,
    ) -> Result<()> {
        if chain.degree() != self.degree {
            return Err(Error::NotACycle {
                element,
                scale: self.scale,
            });
        }
        if chain.coeffs().pivot().is_some_and(|p| p >= self.prefix) {
            return Err(Error::BornAfter {
                element,
                scale: self.scale,
            });
        }
        if !boundary_apply(chain, complex)?.is_zero() {
            return Err(Error::NotACycle {
                element,
                scale: self.scale,
            });
        }
        Ok(())
    }

    /// Canonical representative of the homology class of `chain`.
    pub fn normal_form(&self, chain: &ChainVector<F>) -> SparseVec<F> {
        self.basis.reduce_fully(chain.coeffs().clone())
    }

    /// `dim(Span(A) + B) - dim B` for unchecked chains.
    pub fn rank_of<'a>(&self, chains: impl IntoIterator<Item = &'a ChainVector<F>>) -> usize {
        let mut basis = self.basis.clone();
        chains
            .into_iter()
            .filter(|c| basis.insert(c.coeffs().clone()))
            .count()
    }
}

/// Rank of the classes of `cycles` in `H_k` at `scale`:
/// `dim(Span(A) + B_k) - dim B_k`.
pub fn cophenetic_rank<F: Coefficient>(
    cycles: &[ChainVector<F>],
    complex: &FilteredComplex,
    scale: f64,
    k: usize,
) -> Result<usize> {
    let quotient = BoundaryQuotient::new(complex, scale, k)?;
    for (i, c) in cycles.iter().enumerate() {
        quotient.check_cycle(complex, i, c)?;
    }
    Ok(quotient.rank_of(cycles))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filtration::io::parse_filtration;
    use num_rational::BigRational;

    type Q = BigRational;

    const CIRCLE: &str = "0;1\n1;1\n2;1\n0 1;1\n0 2;1\n1 2;1\n";

    #[test]
    fn circle_snapshot() {
        let c = parse_filtration(CIRCLE).unwrap();
        let s = cycle_snapshot::<Q>(&c, 1.0, 1).unwrap();
        assert_eq!((s.dim_cycles(), s.dim_boundaries()), (1, 0));
    }

    #[test]
    fn filled_triangle_snapshot() {
        let c = parse_filtration(&format!("{CIRCLE}0 1 2;2\n")).unwrap();
        let s = cycle_snapshot::<Q>(&c, 2.0, 1).unwrap();
        assert_eq!((s.dim_cycles(), s.dim_boundaries()), (1, 1));
        let early = cycle_snapshot::<Q>(&c, 1.5, 1).unwrap();
        assert_eq!(early.scale, Some(1.0));
        assert_eq!(early.betti(), 1);
    }

    #[test]
    fn degree_above_top_is_empty() {
        let c = parse_filtration(CIRCLE).unwrap();
        let s = cycle_snapshot::<Q>(&c, 5.0, 4).unwrap();
        assert_eq!((s.dim_cycles(), s.dim_boundaries()), (0, 0));
    }

    #[test]
    fn cophenetic_rank_basics() {
        let c = parse_filtration(&format!("{CIRCLE}0 1 2;2\n")).unwrap();
        let z = cycle_snapshot::<Q>(&c, 1.0, 1).unwrap().cycles[0].clone();
        assert_eq!(cophenetic_rank::<Q>(&[], &c, 1.0, 1).unwrap(), 0);
        let two_z = z.scaled(&Q::from_i64(2));
        assert_eq!(cophenetic_rank(&[z.clone(), two_z], &c, 1.0, 1).unwrap(), 1);
        assert_eq!(cophenetic_rank(std::slice::from_ref(&z), &c, 2.0, 1).unwrap(), 0);
    }

    #[test]
    fn cophenetic_rank_rejects_bad_input() {
        let c = parse_filtration(&format!("{CIRCLE}0 1 2;2\n")).unwrap();
        let edge = ChainVector::<Q>::simplex(1, 3);
        assert!(matches!(
            cophenetic_rank(&[edge], &c, 1.0, 1),
            Err(Error::NotACycle { element: 0, .. })
        ));
        let z = cycle_snapshot::<Q>(&c, 1.0, 1).unwrap().cycles[0].clone();
        assert!(matches!(
            cophenetic_rank(&[z], &c, 0.5, 1),
            Err(Error::BornAfter { .. })
        ));
    }
}
