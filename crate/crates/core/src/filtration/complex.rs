use std::cmp::Ordering;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::filtration::Simplex;
use crate::linalg::SparseVec;
use crate::scalar::Coefficient;

/// A filtered simplicial complex over the non-negative reals.
///
/// Simplices are kept in the canonical order `(birth, dimension, vertices)`.
/// Every downstream index (chain coefficients, boundary columns, persistence
/// pairs) refers to positions in this order. Births are compared only through
/// the deduplicated list of critical values.
#[derive(Clone, Debug)]
pub struct FilteredComplex {
    simplices: Vec<Simplex>,
    births: Vec<f64>,
    levels: Vec<usize>,
    critical_values: Vec<f64>,
    prefix: Vec<usize>,
    index: HashMap<Simplex, usize>,
}

fn canonical_cmp(a: &(Simplex, f64), b: &(Simplex, f64)) -> Ordering {
    a.1.total_cmp(&b.1)
        .then_with(|| a.0.dimension().cmp(&b.0.dimension()))
        .then_with(|| a.0.cmp(&b.0))
}

impl Default for FilteredComplex {
    fn default() -> Self {
        Self::empty()
    }
}

impl FilteredComplex {
    pub fn empty() -> Self {
        FilteredComplex {
            simplices: Vec::new(),
            births: Vec::new(),
            levels: Vec::new(),
            critical_values: Vec::new(),
            prefix: Vec::new(),
            index: HashMap::new(),
        }
    }

    /// Validates closure and monotonicity, then sorts into canonical order.
    pub fn new(entries: Vec<(Simplex, f64)>) -> Result<Self> {
        let mut births: HashMap<&Simplex, f64> = HashMap::with_capacity(entries.len());
        for (s, b) in &entries {
            if !b.is_finite() || *b < 0.0 {
                return Err(Error::InvalidBirth {
                    simplex: s.clone(),
                    birth: *b,
                });
            }
            if births.insert(s, *b).is_some() {
                return Err(Error::DuplicateSimplex(s.clone()));
            }
        }
        let mut sorted = entries.clone();
        sorted.sort_by(canonical_cmp);
        for (s, b) in &sorted {
            for face in s.faces() {
                match births.get(&face) {
                    None => {
                        return Err(Error::MissingFace {
                            simplex: s.clone(),
                            face,
                        })
                    }
                    Some(fb) if fb > b => {
                        return Err(Error::FaceBornLater {
                            simplex: s.clone(),
                            face,
                            birth: *b,
                            face_birth: *fb,
                        })
                    }
                    Some(_) => {}
                }
            }
        }
        Ok(Self::from_sorted(sorted))
    }

    fn from_sorted(sorted: Vec<(Simplex, f64)>) -> Self {
        let mut critical_values: Vec<f64> = Vec::new();
        let mut levels = Vec::with_capacity(sorted.len());
        let mut prefix = Vec::new();
        for (i, (_, b)) in sorted.iter().enumerate() {
            if critical_values.last() != Some(b) {
                if !critical_values.is_empty() {
                    prefix.push(i);
                }
                critical_values.push(*b);
            }
            levels.push(critical_values.len() - 1);
        }
        if !critical_values.is_empty() {
            prefix.push(sorted.len());
        }
        let index = sorted
            .iter()
            .enumerate()
            .map(|(i, (s, _))| (s.clone(), i))
            .collect();
        let (simplices, births) = sorted.into_iter().unzip();
        FilteredComplex {
            simplices,
            births,
            levels,
            critical_values,
            prefix,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn simplex(&self, i: usize) -> &Simplex {
        &self.simplices[i]
    }

    pub fn birth(&self, i: usize) -> f64 {
        self.births[i]
    }

    /// Index of the critical value at which simplex `i` is born.
    pub fn level(&self, i: usize) -> usize {
        self.levels[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Simplex, f64)> {
        self.simplices.iter().zip(self.births.iter().copied())
    }

    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// Top dimension, `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.simplices.iter().map(Simplex::dimension).max()
    }

    pub fn critical_values(&self) -> &[f64] {
        &self.critical_values
    }

    /// Largest critical value index whose value is `<= scale`.
    pub fn level_at(&self, scale: f64) -> Option<usize> {
        level_at(&self.critical_values, scale)
    }

    /// Number of simplices born at or before critical value `level`.
    pub fn prefix_len(&self, level: usize) -> usize {
        self.prefix[level]
    }

    /// Number of simplices present at `scale`.
    pub fn prefix_len_at(&self, scale: f64) -> usize {
        self.level_at(scale).map_or(0, |l| self.prefix[l])
    }

    /// Indices of `dim`-simplices among the first `prefix` simplices.
    pub fn indices_of_dim(&self, dim: usize, prefix: usize) -> impl Iterator<Item = usize> + '_ {
        (0..prefix.min(self.len())).filter(move |&i| self.simplices[i].dimension() == dim)
    }

    pub fn counts_by_dimension(&self) -> Vec<usize> {
        let mut counts = vec![0; self.dimension().map_or(0, |d| d + 1)];
        for s in &self.simplices {
            counts[s.dimension()] += 1;
        }
        counts
    }

    /// Boundary column of simplex `i` with the alternating sign convention.
    pub fn boundary<F: Coefficient>(&self, i: usize) -> SparseVec<F> {
        let s = &self.simplices[i];
        SparseVec::from_entries(s.faces().enumerate().map(|(k, face)| {
            let idx = self.index[&face];
            let sign = if k % 2 == 0 { F::one() } else { -F::one() };
            (idx, sign)
        }))
    }
}

pub(crate) fn level_at(values: &[f64], scale: f64) -> Option<usize> {
    let count = values.partition_point(|v| *v <= scale);
    count.checked_sub(1)
}
