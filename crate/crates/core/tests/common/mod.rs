//! Shared test helpers: random complexes and a dense elimination oracle
//! that shares no code with the library's sparse reduction.
#![allow(dead_code)]

use std::collections::BTreeMap;

use cophenet::filtration::{FilteredComplex, Simplex};
use cophenet::homology::ChainVector;
use cophenet::Rational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A random filtered complex on up to `max_vertices` vertices with at most
/// `max_simplices` simplices and integer births in `0..6`. Every face is
/// born no later than its cofaces.
pub fn random_complex(seed: u64, max_vertices: usize, max_simplices: usize, top_dim: usize) -> FilteredComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(3..=max_vertices);
    let mut candidates: Vec<Vec<usize>> = Vec::new();
    for size in 2..=(top_dim + 1).min(n) {
        let mut c: Vec<usize> = (0..size).collect();
        loop {
            candidates.push(c.clone());
            let mut i = size;
            let mut advanced = false;
            while i > 0 {
                i -= 1;
                if c[i] < n - size + i {
                    c[i] += 1;
                    for j in i + 1..size {
                        c[j] = c[j - 1] + 1;
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
        }
    }
    candidates.shuffle(&mut rng);
    let mut births: BTreeMap<Vec<usize>, f64> = (0..n).map(|v| (vec![v], 0.0)).collect();
    for cand in candidates {
        if births.contains_key(&cand) {
            continue;
        }
        let mut closure: Vec<Vec<usize>> = Vec::new();
        let size = cand.len();
        for mask in 1u32..(1 << size) {
            let face: Vec<usize> = (0..size).filter(|i| mask >> i & 1 == 1).map(|i| cand[i]).collect();
            if !births.contains_key(&face) {
                closure.push(face);
            }
        }
        if births.len() + closure.len() > max_simplices {
            continue;
        }
        closure.sort_by_key(Vec::len);
        for face in closure {
            let own = f64::from(rng.gen_range(0..6u8));
            let face_max = faces(&face)
                .filter_map(|f| births.get(&f).copied())
                .fold(0.0, f64::max);
            births.insert(face, own.max(face_max));
        }
    }
    let entries = births
        .into_iter()
        .map(|(v, b)| (Simplex::new(v).unwrap(), b))
        .collect();
    FilteredComplex::new(entries).unwrap()
}

fn faces(s: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    (0..s.len()).filter(move |_| s.len() > 1).map(move |i| {
        let mut f = s.to_vec();
        f.remove(i);
        f
    })
}

/// Rank of a dense rational matrix given as rows, by textbook elimination.
pub fn dense_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = rows[r][c].clone() / pivot.clone();
                for j in c..cols {
                    let delta = rows[rank][j].clone() * f.clone();
                    rows[r][j] = rows[r][j].clone() - delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Positions of the `k`-simplices present at `scale`, in canonical order.
pub fn simplices_at(complex: &FilteredComplex, scale: f64, k: usize) -> Vec<usize> {
    (0..complex.len())
        .filter(|&i| complex.birth(i) <= scale && complex.simplex(i).dimension() == k)
        .collect()
}

/// Column of the boundary of simplex `i` as a dense vector over all
/// simplices, signs `(-1)^j` for dropping vertex `j`.
pub fn dense_boundary(complex: &FilteredComplex, i: usize) -> Vec<Rational> {
    let mut col = vec![Rational::zero(); complex.len()];
    let v = complex.simplex(i).vertices();
    if v.len() < 2 {
        return col;
    }
    for j in 0..v.len() {
        let mut face = v.to_vec();
        face.remove(j);
        let idx = complex.index_of(&Simplex::new(face).unwrap()).unwrap();
        col[idx] = if j % 2 == 0 { Rational::one() } else { -Rational::one() };
    }
    col
}

/// `(dim Z_k, dim B_k)` at `scale` from dense elimination.
pub fn dense_cycles_boundaries(complex: &FilteredComplex, scale: f64, k: usize) -> (usize, usize) {
    let ks = simplices_at(complex, scale, k);
    let rank_dk = if k == 0 {
        0
    } else {
        dense_rank(ks.iter().map(|&i| dense_boundary(complex, i)).collect())
    };
    let up = simplices_at(complex, scale, k + 1);
    let rank_up = dense_rank(up.iter().map(|&i| dense_boundary(complex, i)).collect());
    (ks.len() - rank_dk, rank_up)
}

/// `dim(Span(A) + B_k) - dim B_k` at `scale`, densely.
pub fn dense_cophenetic_rank(
    complex: &FilteredComplex,
    chains: &[&ChainVector<Rational>],
    scale: f64,
    k: usize,
) -> usize {
    let bounds: Vec<Vec<Rational>> = simplices_at(complex, scale, k + 1)
        .iter()
        .map(|&i| dense_boundary(complex, i))
        .collect();
    let b = dense_rank(bounds.clone());
    let mut all = bounds;
    for c in chains {
        let mut row = vec![Rational::zero(); complex.len()];
        for (i, x) in c.coeffs().iter() {
            row[i] = x.clone();
        }
        all.push(row);
    }
    dense_rank(all) - b
}

pub fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}
