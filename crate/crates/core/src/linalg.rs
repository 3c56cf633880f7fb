//! Exact sparse linear algebra: sparse vectors, echelon bases and column reduction.
//!
//! The pivot of a vector is its largest nonzero index ("low" in persistence
//! literature). All eliminations work by clearing pivots, so vectors indexed by
//! filtration order stay supported on simplices born no later than the pivot.

use std::collections::HashMap;

use crate::scalar::Coefficient;

/// A sparse vector stored as index-sorted `(index, value)` pairs without zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseVec<F> {
    entries: Vec<(usize, F)>,
}

impl<F: Coefficient> Default for SparseVec<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Coefficient> SparseVec<F> {
    pub fn new() -> Self {
        SparseVec {
            entries: Vec::new(),
        }
    }

    pub fn unit(index: usize) -> Self {
        SparseVec {
            entries: vec![(index, F::one())],
        }
    }

    /// Builds a vector from arbitrary entries, summing duplicates and dropping zeros.
    pub fn from_entries(entries: impl IntoIterator<Item = (usize, F)>) -> Self {
        let mut raw: Vec<(usize, F)> = entries.into_iter().collect();
        raw.sort_by_key(|(i, _)| *i);
        let mut merged: Vec<(usize, F)> = Vec::with_capacity(raw.len());
        for (i, v) in raw {
            match merged.last_mut() {
                Some((j, acc)) if *j == i => *acc = acc.clone() + v,
                _ => merged.push((i, v)),
            }
        }
        merged.retain(|(_, v)| !v.is_zero());
        SparseVec { entries: merged }
    }

    pub fn from_dense(values: &[F]) -> Self {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn pivot(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn get(&self, index: usize) -> Option<&F> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|pos| &self.entries[pos].1)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &F)> {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().map(|(i, _)| *i)
    }

    pub fn scaled(&self, factor: &F) -> Self {
        if factor.is_zero() {
            return Self::new();
        }
        SparseVec {
            entries: self
                .entries
                .iter()
                .map(|(i, v)| (*i, v.clone() * factor.clone()))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, factor: &F, other: &Self) {
        if factor.is_zero() || other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = std::mem::take(&mut self.entries).into_iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, _)), Some((j, _))) if i < j => out.push(a.next().unwrap()),
                (Some((i, _)), Some((j, _))) if i > j => {
                    let (j, v) = b.next().unwrap();
                    out.push((*j, factor.clone() * v.clone()));
                }
                (Some(_), Some(_)) => {
                    let (i, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    let sum = x + factor.clone() * y.clone();
                    if !sum.is_zero() {
                        out.push((i, sum));
                    }
                }
                (Some(_), None) => out.push(a.next().unwrap()),
                (None, Some(_)) => {
                    let (j, v) = b.next().unwrap();
                    out.push((*j, factor.clone() * v.clone()));
                }
                (None, None) => break,
            }
        }
        self.entries = out;
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&F::one(), other);
        out
    }
}

/// A set of linearly independent vectors with pairwise distinct pivots.
#[derive(Clone, Debug)]
pub struct EchelonBasis<F> {
    vectors: Vec<SparseVec<F>>,
    by_pivot: HashMap<usize, usize>,
}

impl<F: Coefficient> Default for EchelonBasis<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Coefficient> EchelonBasis<F> {
    pub fn new() -> Self {
        EchelonBasis {
            vectors: Vec::new(),
            by_pivot: HashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[SparseVec<F>] {
        &self.vectors
    }

    /// Eliminates the pivot of `v` until it is zero or its pivot is free.
    pub fn reduce(&self, mut v: SparseVec<F>) -> SparseVec<F> {
        while let Some(p) = v.pivot() {
            let Some(&slot) = self.by_pivot.get(&p) else {
                break;
            };
            let b = &self.vectors[slot];
            let factor = -(v.get(p).unwrap().clone() / b.get(p).unwrap().clone());
            v.add_scaled(&factor, b);
        }
        v
    }

    /// Eliminates every entry of `v` sitting on a pivot of the basis.
    ///
    /// The result is a canonical representative of `v` modulo the span.
    pub fn reduce_fully(&self, mut v: SparseVec<F>) -> SparseVec<F> {
        let mut bound = usize::MAX;
        loop {
            let next = v
                .iter()
                .map(|(i, _)| i)
                .filter(|i| *i < bound && self.by_pivot.contains_key(i))
                .last();
            let Some(p) = next else { break };
            let b = &self.vectors[self.by_pivot[&p]];
            let factor = -(v.get(p).unwrap().clone() / b.get(p).unwrap().clone());
            v.add_scaled(&factor, b);
            bound = p;
        }
        v
    }

    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    /// Adds `v` to the basis. Returns `false` when `v` was already in the span.
    pub fn insert(&mut self, v: SparseVec<F>) -> bool {
        let r = self.reduce(v);
        match r.pivot() {
            None => false,
            Some(p) => {
                self.by_pivot.insert(p, self.vectors.len());
                self.vectors.push(r);
                true
            }
        }
    }
}

/// Result of reducing a sequence of columns left to right.
#[derive(Clone, Debug)]
pub struct ColumnReduction<F> {
    /// Reduced columns; zero for columns in the span of earlier ones.
    pub reduced: Vec<SparseVec<F>>,
    /// For each column, the combination of input columns producing `reduced`,
    /// indexed by the caller-supplied column ids.
    pub combinations: Vec<SparseVec<F>>,
}

impl<F: Coefficient> ColumnReduction<F> {
    /// Column ids whose reduced column is zero, with their kernel combinations.
    pub fn kernel(&self) -> impl Iterator<Item = &SparseVec<F>> {
        self.reduced
            .iter()
            .zip(&self.combinations)
            .filter(|(r, _)| r.is_zero())
            .map(|(_, c)| c)
    }

    /// Nonzero reduced columns, which form a basis of the column span.
    pub fn image(&self) -> impl Iterator<Item = &SparseVec<F>> {
        self.reduced.iter().filter(|r| !r.is_zero())
    }
}

/// Standard left-to-right column reduction with combination tracking.
pub fn reduce_columns<F: Coefficient>(
    columns: impl IntoIterator<Item = (usize, SparseVec<F>)>,
) -> ColumnReduction<F> {
    let mut reduced: Vec<SparseVec<F>> = Vec::new();
    let mut combinations: Vec<SparseVec<F>> = Vec::new();
    let mut owner: HashMap<usize, usize> = HashMap::new();
    for (id, mut col) in columns {
        let mut comb = SparseVec::unit(id);
        while let Some(p) = col.pivot() {
            let Some(&k) = owner.get(&p) else { break };
            let factor =
                -(col.get(p).unwrap().clone() / reduced[k].get(p).unwrap().clone());
            col.add_scaled(&factor, &reduced[k]);
            comb.add_scaled(&factor, &combinations[k]);
        }
        if let Some(p) = col.pivot() {
            owner.insert(p, reduced.len());
        }
        reduced.push(col);
        combinations.push(comb);
    }
    ColumnReduction {
        reduced,
        combinations,
    }
}

/// Rank of a list of dense vectors by exact elimination.
pub fn rank_of_dense<F: Coefficient>(vectors: &[Vec<F>]) -> usize {
    let mut basis = EchelonBasis::new();
    for v in vectors {
        basis.insert(SparseVec::from_dense(v));
    }
    basis.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Gf;
    use num_rational::BigRational;

    fn q(v: i64) -> BigRational {
        BigRational::from_i64(v)
    }

    #[test]
    fn add_scaled_cancels() {
        let mut a = SparseVec::from_entries([(0, q(1)), (2, q(3))]);
        let b = SparseVec::from_entries([(2, q(1)), (5, q(1))]);
        a.add_scaled(&q(-3), &b);
        assert_eq!(a, SparseVec::from_entries([(0, q(1)), (5, q(-3))]));
    }

    #[test]
    fn from_entries_merges_duplicates() {
        let v = SparseVec::from_entries([(3, q(1)), (1, q(2)), (3, q(-1))]);
        assert_eq!(v, SparseVec::from_entries([(1, q(2))]));
        assert_eq!(v.pivot(), Some(1));
    }

    #[test]
    fn echelon_rank_and_membership() {
        let mut basis = EchelonBasis::<BigRational>::new();
        assert!(basis.insert(SparseVec::from_dense(&[q(1), q(1), q(0)])));
        assert!(basis.insert(SparseVec::from_dense(&[q(0), q(1), q(1)])));
        assert!(!basis.insert(SparseVec::from_dense(&[q(1), q(2), q(1)])));
        assert_eq!(basis.rank(), 2);
        assert!(basis.contains(&SparseVec::from_dense(&[q(2), q(0), q(-2)])));
    }

    #[test]
    fn full_reduction_is_canonical() {
        let mut basis = EchelonBasis::<BigRational>::new();
        basis.insert(SparseVec::from_dense(&[q(1), q(1), q(0)]));
        let a = basis.reduce_fully(SparseVec::from_dense(&[q(0), q(0), q(1)]));
        let b = basis.reduce_fully(SparseVec::from_dense(&[q(2), q(2), q(1)]));
        assert_eq!(a, b);
    }

    #[test]
    fn kernel_over_gf2() {
        type F = Gf<2>;
        let one = F::new(1);
        // Boundary columns of a triangle's edges over three vertices.
        let cols = vec![
            (0, SparseVec::from_entries([(0, one), (1, one)])),
            (1, SparseVec::from_entries([(0, one), (2, one)])),
            (2, SparseVec::from_entries([(1, one), (2, one)])),
        ];
        let red = reduce_columns(cols);
        assert_eq!(red.kernel().count(), 1);
        assert_eq!(red.image().count(), 2);
    }
}
