//! Irreducible sets (matroid circuits) and irreducible covers.
//!
//! An irreducible set is a minimal dependent set: `r(A) = |A| - 1` with all
//! proper subsets independent. Classical matroid theory calls these circuits.

use crate::error::{Error, Result};
use crate::matroid::{IrreducibleSet, RankOracle};

/// Upper bound on the number of candidate elements for circuit enumeration,
/// after loops and coloops have been set aside. The search is exponential.
pub const CIRCUIT_SEARCH_LIMIT: usize = 24;

/// Whether `set` is irreducible. Checking the subsets of size `|A| - 1` is
/// enough since rank is monotone.
pub fn is_irreducible<O: RankOracle + ?Sized>(oracle: &O, set: &[usize]) -> bool {
    if set.is_empty() {
        return false;
    }
    let expected = set.len() - 1;
    if oracle.rank(set) != expected {
        return false;
    }
    (0..set.len()).all(|skip| {
        let sub: Vec<usize> = set
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != skip)
            .map(|(_, e)| *e)
            .collect();
        oracle.rank(&sub) == expected
    })
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// All circuits contained in `within`, ordered by size and then
/// lexicographically by sorted element ids.
pub fn circuits<O: RankOracle + ?Sized>(oracle: &O, within: &[usize]) -> Result<Vec<Vec<usize>>> {
    let mut ground: Vec<usize> = within.to_vec();
    ground.sort_unstable();
    ground.dedup();

    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut candidates = Vec::new();
    for &e in &ground {
        if oracle.rank(&[e]) == 0 {
            found.push(vec![e]);
        } else {
            candidates.push(e);
        }
    }
    let full = oracle.rank(&candidates);
    let candidates: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&e| {
            let rest: Vec<usize> = candidates.iter().copied().filter(|&x| x != e).collect();
            oracle.rank(&rest) == full
        })
        .collect();
    let m = candidates.len();
    if m > CIRCUIT_SEARCH_LIMIT {
        return Err(Error::GroundSetTooLarge {
            size: m,
            limit: CIRCUIT_SEARCH_LIMIT,
        });
    }

    let mut masks: Vec<u64> = Vec::new();
    let max_size = (full + 1).min(m);
    for size in 2..=max_size {
        let mut comb: Vec<usize> = (0..size).collect();
        loop {
            let mask = comb.iter().fold(0u64, |acc, &i| acc | 1 << i);
            if masks.iter().all(|&c| c & mask != c) {
                let set: Vec<usize> = comb.iter().map(|&i| candidates[i]).collect();
                if oracle.rank(&set) < size {
                    masks.push(mask);
                    found.push(set);
                }
            }
            if !next_combination(&mut comb, m) {
                break;
            }
        }
    }
    Ok(found)
}

/// Writes a dependent set `X` as a union of irreducible sets.
///
/// Peels elements in ascending id order: for the first remaining element `x`,
/// take the largest irreducible subset of the remaining set containing `x`
/// (lexicographically first among equals), then drop `x` and continue until
/// every element of `X` is covered or the remaining set is itself
/// irreducible. The result is deterministic and no returned set contains
/// another.
pub fn irreducible_cover<O: RankOracle + ?Sized>(
    oracle: &O,
    set: &[usize],
) -> Result<Vec<IrreducibleSet>> {
    let mut x: Vec<usize> = set.to_vec();
    x.sort_unstable();
    x.dedup();
    if oracle.rank(&x) >= x.len() {
        return Err(Error::IndependentSet);
    }
    let all = circuits(oracle, &x)?;
    let subset_of = |c: &[usize], w: &[usize]| c.iter().all(|e| w.binary_search(e).is_ok());
    let best_with = |e: usize, w: &[usize]| -> Option<Vec<usize>> {
        let mut pool: Vec<&Vec<usize>> = all
            .iter()
            .filter(|c| c.binary_search(&e).is_ok() && subset_of(c, w))
            .collect();
        // Largest first, lexicographic among equal sizes.
        pool.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        pool.first().map(|c| (*c).clone())
    };

    let mut chosen: Vec<Vec<usize>> = Vec::new();
    let mut covered: Vec<bool> = vec![false; x.len()];
    let mut remaining = x.clone();
    let mark = |covered: &mut Vec<bool>, c: &[usize]| {
        for e in c {
            covered[x.binary_search(e).unwrap()] = true;
        }
    };
    while covered.iter().any(|c| !c) && !remaining.is_empty() {
        if all.contains(&remaining) {
            if !chosen.contains(&remaining) {
                chosen.push(remaining.clone());
            }
            break;
        }
        let e = remaining[0];
        let pick = best_with(e, &remaining).or_else(|| {
            let done = covered[x.binary_search(&e).unwrap()];
            if done {
                None
            } else {
                best_with(e, &x)
            }
        });
        match pick {
            Some(c) => {
                mark(&mut covered, &c);
                if !chosen.contains(&c) {
                    chosen.push(c);
                }
            }
            None if covered[x.binary_search(&e).unwrap()] => {}
            None => return Err(Error::NoIrreducibleContaining(e)),
        }
        remaining.remove(0);
    }
    if let Some(pos) = covered.iter().position(|c| !c) {
        if !chosen.iter().any(|c| c.contains(&x[pos])) {
            return Err(Error::NoIrreducibleContaining(x[pos]));
        }
    }
    Ok(chosen
        .into_iter()
        .map(|elements| IrreducibleSet {
            rank: elements.len() - 1,
            elements,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{FnOracle, LinearMatroid};
    use crate::scalar::Coefficient;
    use num_rational::BigRational;

    fn lin(vs: &[&[i64]]) -> LinearMatroid<BigRational> {
        LinearMatroid::new(
            vs.iter()
                .map(|v| v.iter().map(|&x| BigRational::from_i64(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn singleton_loop_is_irreducible() {
        let m = lin(&[&[0, 0], &[1, 0]]);
        assert!(is_irreducible(&m, &[0]));
        assert!(!is_irreducible(&m, &[1]));
        assert!(!is_irreducible(&m, &[]));
    }

    #[test]
    fn parallel_pair_covers_itself() {
        let m = lin(&[&[1, 2], &[1, 2]]);
        let cover = irreducible_cover(&m, &[0, 1]).unwrap();
        assert_eq!(cover, vec![IrreducibleSet { elements: vec![0, 1], rank: 1 }]);
    }

    #[test]
    fn independent_set_has_no_cover() {
        let m = lin(&[&[1, 0], &[0, 1]]);
        assert!(matches!(irreducible_cover(&m, &[0, 1]), Err(Error::IndependentSet)));
    }

    #[test]
    fn coloop_cannot_be_covered() {
        // Two parallel vectors plus an independent one.
        let m = lin(&[&[1, 0], &[1, 0], &[0, 1]]);
        assert!(matches!(
            irreducible_cover(&m, &[0, 1, 2]),
            Err(Error::NoIrreducibleContaining(2))
        ));
    }

    #[test]
    fn circuits_of_uniform_matroid() {
        // U(2,4): every 3-subset is a circuit.
        let u = FnOracle::new(4, |s: &[usize]| s.len().min(2));
        let cs = circuits(&u, &[0, 1, 2, 3]).unwrap();
        assert_eq!(cs, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]);
        let cover = irreducible_cover(&u, &[0, 1, 2, 3]).unwrap();
        let sets: Vec<_> = cover.into_iter().map(|c| c.elements).collect();
        assert_eq!(sets, vec![vec![0, 1, 2], vec![1, 2, 3]]);
    }

    #[test]
    fn loops_split_off_first() {
        // 0 is a loop, 1 and 2 parallel.
        let m = lin(&[&[0, 0], &[1, 1], &[2, 2]]);
        let sets: Vec<_> = irreducible_cover(&m, &[0, 1, 2])
            .unwrap()
            .into_iter()
            .map(|c| c.elements)
            .collect();
        assert_eq!(sets, vec![vec![0], vec![1, 2]]);
    }
}
