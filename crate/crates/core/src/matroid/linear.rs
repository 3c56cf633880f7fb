//! Linear matroids over exact fields and the coordinate-zeroing filtration.

use crate::error::{Error, Result};
use crate::linalg::rank_of_dense;
use crate::matroid::{FilteredMatroid, RankOracle};
use crate::scalar::Coefficient;

fn check_dims<F>(vectors: &[Vec<F>]) -> Result<()> {
    if let Some(first) = vectors.first() {
        if let Some((i, v)) = vectors.iter().enumerate().find(|(_, v)| v.len() != first.len()) {
            return Err(Error::DimensionMismatch {
                point: i,
                expected: first.len(),
                found: v.len(),
            });
        }
    }
    Ok(())
}

/// Dimension of the span of `vectors`, by exact elimination.
pub fn linear_rank<F: Coefficient>(vectors: &[Vec<F>]) -> Result<usize> {
    check_dims(vectors)?;
    Ok(rank_of_dense(vectors))
}

/// The matroid of a finite list of vectors.
#[derive(Clone, Debug)]
pub struct LinearMatroid<F> {
    vectors: Vec<Vec<F>>,
    labels: Option<Vec<String>>,
}

impl<F: Coefficient> LinearMatroid<F> {
    pub fn new(vectors: Vec<Vec<F>>) -> Result<Self> {
        check_dims(&vectors)?;
        Ok(LinearMatroid {
            vectors,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        self.labels = Some(labels);
        self
    }

    pub fn vectors(&self) -> &[Vec<F>] {
        &self.vectors
    }
}

impl<F: Coefficient> RankOracle for LinearMatroid<F> {
    fn ground_size(&self) -> usize {
        self.vectors.len()
    }

    fn rank(&self, subset: &[usize]) -> usize {
        let chosen: Vec<Vec<F>> = subset.iter().map(|&i| self.vectors[i].clone()).collect();
        rank_of_dense(&chosen)
    }

    fn label(&self, element: usize) -> String {
        self.labels
            .as_ref()
            .map_or_else(|| element.to_string(), |l| l[element].clone())
    }
}

/// The map `s_ε`: zero the first `i` coordinates when `i <= ε < i + 1`.
///
/// Identity for `ε < 1`; the zero vector once `ε >= n`.
pub fn coordinate_zeroing<F: Coefficient>(v: &[F], scale: f64) -> Vec<F> {
    let cut = if scale < 1.0 {
        0
    } else if scale >= v.len() as f64 {
        v.len()
    } else {
        scale.floor() as usize
    };
    v.iter()
        .enumerate()
        .map(|(i, x)| if i < cut { F::zero() } else { x.clone() })
        .collect()
}

/// Filtered matroid `r_ε(A) = dim s_ε(A)` on a fixed list of vectors in F^n.
///
/// Structure maps are identities on element ids; critical values are the
/// integers `0..=n`, the only scales where `s_ε` changes.
#[derive(Clone, Debug)]
pub struct CoordinateZeroingMatroid<F> {
    base: LinearMatroid<F>,
    critical: Vec<f64>,
}

impl<F: Coefficient> CoordinateZeroingMatroid<F> {
    pub fn new(vectors: Vec<Vec<F>>) -> Result<Self> {
        let base = LinearMatroid::new(vectors)?;
        let n = base.vectors.first().map_or(0, Vec::len);
        Ok(CoordinateZeroingMatroid {
            base,
            critical: (0..=n).map(|i| i as f64).collect(),
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        self.base = self.base.with_labels(labels);
        self
    }

    /// Rank of `s_ε(A)` at an arbitrary scale.
    pub fn rank_at_scale(&self, scale: f64, subset: &[usize]) -> usize {
        let images: Vec<Vec<F>> = subset
            .iter()
            .map(|&i| coordinate_zeroing(&self.base.vectors[i], scale))
            .collect();
        rank_of_dense(&images)
    }
}

impl<F: Coefficient> FilteredMatroid for CoordinateZeroingMatroid<F> {
    fn critical_values(&self) -> &[f64] {
        &self.critical
    }

    fn ground_set(&self, _level: usize) -> Vec<usize> {
        (0..self.base.ground_size()).collect()
    }

    fn rank_at(&self, level: usize, subset: &[usize]) -> usize {
        self.rank_at_scale(self.critical[level], subset)
    }

    fn label(&self, element: usize) -> String {
        self.base.label(element)
    }

    fn description(&self) -> String {
        format!(
            "coordinate-zeroing filtration of {} vectors in dimension {}",
            self.base.ground_size(),
            self.critical.len().saturating_sub(1)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn qv(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| Q::from_i64(x)).collect()
    }

    #[test]
    fn zeroing_examples() {
        assert_eq!(coordinate_zeroing(&qv(&[1, 2, 3]), 0.0), qv(&[1, 2, 3]));
        assert_eq!(coordinate_zeroing(&qv(&[1, 2, 3]), 0.99), qv(&[1, 2, 3]));
        assert_eq!(coordinate_zeroing(&qv(&[3, 5, 6, 6]), 1.0), qv(&[0, 5, 6, 6]));
        assert_eq!(coordinate_zeroing(&qv(&[3, 5, 6, 6]), 2.5), qv(&[0, 0, 6, 6]));
        assert_eq!(coordinate_zeroing(&qv(&[1, 2, 3]), 5.0), qv(&[0, 0, 0]));
        assert_eq!(coordinate_zeroing(&qv(&[1, 2, 3]), 3.0), qv(&[0, 0, 0]));
    }

    #[test]
    fn ranks_of_the_four_vectors() {
        let a = vec![qv(&[1, 1, 1, 1]), qv(&[1, 1, 2, 2]), qv(&[1, 2, 3, 3]), qv(&[3, 5, 6, 6])];
        assert_eq!(linear_rank(&a).unwrap(), 3);
        let s1: Vec<_> = a.iter().map(|v| coordinate_zeroing(v, 1.0)).collect();
        assert_eq!(s1[3], qv(&[0, 5, 6, 6]));
        assert_eq!(linear_rank(&s1).unwrap(), 2);
        assert_eq!(linear_rank::<Q>(&[]).unwrap(), 0);
    }

    #[test]
    fn mismatched_dimensions() {
        assert!(linear_rank(&[qv(&[1]), qv(&[1, 2])]).is_err());
    }
}
