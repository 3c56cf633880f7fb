use std::collections::{HashMap, HashSet};

use crate::filtration::FilteredComplex;
use crate::homology::{Barcode, ChainVector, PersistencePair};
use crate::linalg::SparseVec;
use crate::scalar::Coefficient;

struct Reduced<F> {
    r: SparseVec<F>,
    v: SparseVec<F>,
}

fn reduce<F: Coefficient>(
    mut col: SparseVec<F>,
    mut comb: SparseVec<F>,
    owner: &HashMap<usize, usize>,
    columns: &HashMap<usize, Reduced<F>>,
) -> Reduced<F> {
    while let Some(low) = col.pivot() {
        let Some(j) = owner.get(&low) else { break };
        let other = &columns[j];
        let factor = -(col.get(low).unwrap().clone() / other.r.get(low).unwrap().clone());
        col.add_scaled(&factor, &other.r);
        comb.add_scaled(&factor, &other.v);
    }
    Reduced { r: col, v: comb }
}

/// Persistent homology in degrees `0..=max_dim` by filtration-ordered column
/// reduction with clearing, over the exact field `F`.
///
/// Each pair carries the cycle created by its birth simplex (the reduction
/// combination of that column) as representative. Pairs whose birth and death
/// fall on the same critical value are omitted.
pub fn compute_persistence<F: Coefficient>(
    complex: &FilteredComplex,
    max_dim: usize,
) -> Barcode<F> {
    let Some(top) = complex.dimension() else {
        return Barcode::new(Vec::new());
    };
    let max_dim = if max_dim > top {
        log::warn!("requested homology up to degree {max_dim}, complex has dimension {top}; computing up to {top}");
        top
    } else {
        max_dim
    };

    let n = complex.len();
    let mut by_dim: Vec<Vec<usize>> = vec![Vec::new(); top + 1];
    for i in 0..n {
        by_dim[complex.simplex(i).dimension()].push(i);
    }

    // low -> column owning it, per reduced column store.
    let mut owner: HashMap<usize, usize> = HashMap::new();
    let mut columns: HashMap<usize, Reduced<F>> = HashMap::new();
    let mut death_of: HashMap<usize, usize> = HashMap::new();
    let mut cleared: HashSet<usize> = HashSet::new();
    let mut representatives: HashMap<usize, SparseVec<F>> = HashMap::new();

    let highest = (max_dim + 1).min(top);
    for dim in (1..=highest).rev() {
        for &j in &by_dim[dim] {
            if cleared.contains(&j) {
                continue;
            }
            let red = reduce(complex.boundary(j), SparseVec::unit(j), &owner, &columns);
            match red.r.pivot() {
                Some(low) => {
                    owner.insert(low, j);
                    death_of.insert(low, j);
                    cleared.insert(low);
                }
                None => {
                    representatives.insert(j, red.v.clone());
                }
            }
            columns.insert(j, red);
        }
        // Cleared columns of this dimension still need their birth cycles.
        for &i in &by_dim[dim] {
            if cleared.contains(&i) && !representatives.contains_key(&i) {
                let red = reduce(complex.boundary(i), SparseVec::unit(i), &owner, &columns);
                debug_assert!(red.r.is_zero());
                representatives.insert(i, red.v);
            }
        }
    }

    let mut pairs = Vec::new();
    for dim in 0..=max_dim {
        for &i in &by_dim[dim] {
            let rep = if dim == 0 {
                SparseVec::unit(i)
            } else {
                match representatives.get(&i) {
                    Some(v) => v.clone(),
                    None => continue,
                }
            };
            let death = death_of.get(&i).copied();
            if let Some(j) = death {
                if complex.level(j) == complex.level(i) {
                    continue;
                }
            }
            pairs.push(PersistencePair {
                id: pairs.len(),
                dimension: dim,
                birth: complex.birth(i),
                death: death.map(|j| complex.birth(j)),
                birth_simplex: i,
                death_simplex: death,
                representative: ChainVector::new(dim, rep),
            });
        }
    }
    Barcode::new(pairs)
}
