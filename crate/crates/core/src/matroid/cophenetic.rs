//! The filtered matroid of homology classes: rank at `ε` is the cophenetic
//! rank `dim(Span(A) + B_k^ε) - dim B_k^ε`.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::filtration::FilteredComplex;
use crate::homology::{boundary_apply, Barcode, BoundaryQuotient, ChainVector};
use crate::linalg::{EchelonBasis, SparseVec};
use crate::matroid::FilteredMatroid;
use crate::scalar::Coefficient;

/// A cycle entering the matroid at `birth`.
#[derive(Clone, Debug, PartialEq)]
pub struct Generator<F> {
    pub label: String,
    pub chain: ChainVector<F>,
    pub birth: f64,
}

/// One generator per bar of degree `k`, labeled by its pair id.
pub fn generators_from_barcode<F: Coefficient>(barcode: &Barcode<F>, k: usize) -> Vec<Generator<F>> {
    barcode
        .in_dimension(k)
        .map(|p| Generator {
            label: p.id.to_string(),
            chain: p.representative.clone(),
            birth: p.birth,
        })
        .collect()
}

struct LevelData<F> {
    /// Normal form modulo `B_k` for every generator present at the level.
    forms: Vec<Option<SparseVec<F>>>,
}

/// Built by [`cophenetic_matroid`]. Element ids are positions in the
/// generator list, so equal chains stay distinct elements.
pub struct CopheneticMatroid<'a, F> {
    complex: &'a FilteredComplex,
    degree: usize,
    generators: Vec<Generator<F>>,
    birth_levels: Vec<usize>,
    levels: Vec<OnceLock<LevelData<F>>>,
}

/// Validates that every generator is a `k`-cycle present at its birth and
/// wraps them in a lazily evaluated filtered matroid.
pub fn cophenetic_matroid<F: Coefficient>(
    complex: &FilteredComplex,
    k: usize,
    generators: Vec<Generator<F>>,
) -> Result<CopheneticMatroid<'_, F>> {
    let mut birth_levels = Vec::with_capacity(generators.len());
    for (i, g) in generators.iter().enumerate() {
        g.chain.validate(complex)?;
        if g.chain.degree() != k || !boundary_apply(&g.chain, complex)?.is_zero() {
            return Err(Error::NotACycle {
                element: i,
                scale: g.birth,
            });
        }
        let level = complex
            .level_at(g.birth)
            .filter(|_| g.chain.birth(complex).is_none_or(|b| b <= g.birth))
            .ok_or(Error::BornAfter {
                element: i,
                scale: g.birth,
            })?;
        birth_levels.push(level);
    }
    let levels = complex.critical_values().iter().map(|_| OnceLock::new()).collect();
    Ok(CopheneticMatroid {
        complex,
        degree: k,
        generators,
        birth_levels,
        levels,
    })
}

impl<F: Coefficient> CopheneticMatroid<'_, F> {
    pub fn generators(&self) -> &[Generator<F>] {
        &self.generators
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn complex(&self) -> &FilteredComplex {
        self.complex
    }

    pub fn birth_level(&self, element: usize) -> usize {
        self.birth_levels[element]
    }

    fn data(&self, level: usize) -> &LevelData<F> {
        self.levels[level].get_or_init(|| {
            let scale = self.complex.critical_values()[level];
            let quotient = BoundaryQuotient::<F>::new(self.complex, scale, self.degree)
                .expect("critical values are finite and non-negative");
            let forms = self
                .generators
                .iter()
                .zip(&self.birth_levels)
                .map(|(g, &b)| (b <= level).then(|| quotient.normal_form(&g.chain)))
                .collect();
            LevelData { forms }
        })
    }

    /// Whether the class of `element` is zero at `level`.
    pub fn is_zero_class(&self, level: usize, element: usize) -> bool {
        self.rank_at(level, &[element]) == 0
    }
}

impl<F: Coefficient> FilteredMatroid for CopheneticMatroid<'_, F> {
    fn critical_values(&self) -> &[f64] {
        self.complex.critical_values()
    }

    fn ground_set(&self, level: usize) -> Vec<usize> {
        (0..self.generators.len())
            .filter(|&i| self.birth_levels[i] <= level)
            .collect()
    }

    fn rank_at(&self, level: usize, subset: &[usize]) -> usize {
        let data = self.data(level);
        let mut basis = EchelonBasis::new();
        subset
            .iter()
            .filter(|&&e| {
                let form = data.forms[e]
                    .as_ref()
                    .unwrap_or_else(|| panic!("generator {e} is not present at level {level}"));
                basis.insert(form.clone())
            })
            .count()
    }

    fn label(&self, element: usize) -> String {
        self.generators[element].label.clone()
    }

    fn description(&self) -> String {
        format!(
            "cophenetic matroid of {} H_{} generators over {}",
            self.generators.len(),
            self.degree,
            F::field_name()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filtration::io::parse_filtration;
    use crate::homology::{compute_persistence, cophenetic_rank};
    use num_rational::BigRational;

    type Q = BigRational;

    #[test]
    fn circle_has_constant_rank_one() {
        let c = parse_filtration("0;0\n1;0\n2;0\n0 1;1\n0 2;1\n1 2;2\n").unwrap();
        let bars = compute_persistence::<Q>(&c, 1);
        let m = cophenetic_matroid(&c, 1, generators_from_barcode(&bars, 1)).unwrap();
        assert_eq!(m.ground_set(0), Vec::<usize>::new());
        assert_eq!(m.ground_set(2), vec![0]);
        assert_eq!(m.rank_at(2, &[0]), 1);
    }

    #[test]
    fn agrees_with_direct_rank() {
        let c = parse_filtration("0;0\n1;0\n2;0\n0 1;1\n0 2;1\n1 2;1\n0 1 2;3\n").unwrap();
        let bars = compute_persistence::<Q>(&c, 1);
        let gens = generators_from_barcode(&bars, 1);
        let chains: Vec<_> = gens.iter().map(|g| g.chain.clone()).collect();
        let m = cophenetic_matroid(&c, 1, gens).unwrap();
        for (level, &eps) in c.critical_values().iter().enumerate().skip(1) {
            let direct = cophenetic_rank(&chains, &c, eps, 1).unwrap();
            assert_eq!(m.rank_at(level, &[0]), direct);
        }
        assert!(m.is_zero_class(2, 0));
    }

    #[test]
    fn empty_generator_list() {
        let c = parse_filtration("0;0\n").unwrap();
        let m = cophenetic_matroid::<Q>(&c, 1, Vec::new()).unwrap();
        assert_eq!(m.rank_at(0, &[]), 0);
    }

    #[test]
    fn rejects_non_cycles() {
        let c = parse_filtration("0;0\n1;0\n0 1;1\n").unwrap();
        let g = Generator {
            label: "e".into(),
            chain: ChainVector::<Q>::simplex(1, 2),
            birth: 1.0,
        };
        assert!(matches!(
            cophenetic_matroid(&c, 1, vec![g.clone()]),
            Err(Error::NotACycle { .. })
        ));
        let early = Generator { birth: 0.0, ..g };
        assert!(cophenetic_matroid(&c, 1, vec![early]).is_err());
    }
}
