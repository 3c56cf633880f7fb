//! Vietoris–Rips and Čech filtrations of Euclidean point clouds.

use num_traits::Float;

use crate::error::{Error, Result};
use crate::filtration::miniball::minimal_enclosing_ball;
use crate::filtration::{FilteredComplex, Simplex};

/// A finite point cloud in R^n with the Euclidean metric.
#[derive(Clone, Debug, PartialEq)]
pub struct PointCloud<T = f64> {
    points: Vec<Vec<T>>,
}

impl<T: Float> PointCloud<T> {
    pub fn new(points: Vec<Vec<T>>) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(Error::EmptyPointCloud);
        };
        let n = first.len();
        if n == 0 {
            return Err(Error::InvalidParameter(
                "points must have at least one coordinate".into(),
            ));
        }
        for (i, p) in points.iter().enumerate() {
            if p.len() != n {
                return Err(Error::DimensionMismatch {
                    point: i,
                    expected: n,
                    found: p.len(),
                });
            }
            if p.iter().any(|x| !x.is_finite()) {
                return Err(Error::NonFiniteCoordinate { point: i });
            }
        }
        Ok(PointCloud { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn ambient_dimension(&self) -> usize {
        self.points[0].len()
    }

    pub fn point(&self, i: usize) -> &[T] {
        &self.points[i]
    }

    pub fn distance(&self, i: usize, j: usize) -> T {
        self.points[i]
            .iter()
            .zip(&self.points[j])
            .fold(T::zero(), |acc, (a, b)| acc + (*a - *b) * (*a - *b))
            .sqrt()
    }

    fn distance_matrix(&self) -> Vec<Vec<f64>> {
        let n = self.len();
        let mut d = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let v = self.distance(i, j).to_f64().unwrap_or(f64::INFINITY);
                d[i][j] = v;
                d[j][i] = v;
            }
        }
        d
    }
}

fn check_params(max_scale: f64) -> Result<()> {
    if max_scale.is_nan() || max_scale <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "max scale must be positive, got {max_scale}"
        )));
    }
    Ok(())
}

/// Enumerates vertex sets of size <= max_dim + 1 whose pairs are all adjacent,
/// in lexicographic order of their sorted vertex lists.
pub(crate) fn enumerate_cliques(
    n: usize,
    adjacent: impl Fn(usize, usize) -> bool,
    max_dim: usize,
) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..n).rev().map(|v| vec![v]).collect();
    while let Some(clique) = stack.pop() {
        if clique.len() <= max_dim {
            let last = *clique.last().unwrap();
            for w in (last + 1..n).rev() {
                if clique.iter().all(|&u| adjacent(u, w)) {
                    let mut next = clique.clone();
                    next.push(w);
                    stack.push(next);
                }
            }
        }
        out.push(clique);
    }
    out
}

/// Vietoris–Rips filtration: a simplex is born at the largest pairwise
/// distance among its vertices.
pub fn build_vietoris_rips<T: Float>(
    cloud: &PointCloud<T>,
    max_dim: usize,
    max_scale: f64,
) -> Result<FilteredComplex> {
    check_params(max_scale)?;
    let d = cloud.distance_matrix();
    let cliques = enumerate_cliques(cloud.len(), |i, j| d[i][j] <= max_scale, max_dim);
    let entries = cliques
        .into_iter()
        .map(|vs| {
            let mut birth = 0.0f64;
            for (a, &i) in vs.iter().enumerate() {
                for &j in &vs[a + 1..] {
                    birth = birth.max(d[i][j]);
                }
            }
            Ok((Simplex::new(vs)?, birth))
        })
        .collect::<Result<Vec<_>>>()?;
    FilteredComplex::new(entries)
}

/// Čech filtration: a simplex is born at the radius of the minimal enclosing
/// ball of its vertices, i.e. when closed balls of that radius first share a
/// common point.
pub fn build_cech<T: Float>(
    cloud: &PointCloud<T>,
    max_dim: usize,
    max_scale: f64,
) -> Result<FilteredComplex> {
    check_params(max_scale)?;
    let d = cloud.distance_matrix();
    // Pairwise distance <= 2r is necessary for a common intersection.
    let cliques = enumerate_cliques(cloud.len(), |i, j| d[i][j] <= 2.0 * max_scale, max_dim);
    let mut births: std::collections::HashMap<Vec<usize>, f64> = Default::default();
    let mut entries = Vec::new();
    // Cliques come out with every face before its cofaces.
    let mut ordered = cliques;
    ordered.sort_by_key(|c| c.len());
    for vs in ordered {
        let birth = match vs.len() {
            1 => 0.0,
            2 => d[vs[0]][vs[1]] / 2.0,
            _ => {
                let pts: Vec<&[T]> = vs.iter().map(|&i| cloud.point(i)).collect();
                let r = minimal_enclosing_ball(&pts).radius.to_f64().unwrap_or(f64::INFINITY);
                // Keep the filtration monotone under rounding.
                (0..vs.len())
                    .map(|k| {
                        let mut face = vs.clone();
                        face.remove(k);
                        births.get(&face).copied().unwrap_or(f64::INFINITY)
                    })
                    .fold(r, f64::max)
            }
        };
        if birth <= max_scale {
            births.insert(vs.clone(), birth);
            entries.push((Simplex::new(vs)?, birth));
        }
    }
    FilteredComplex::new(entries)
}
