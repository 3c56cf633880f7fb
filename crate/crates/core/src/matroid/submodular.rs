use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matroid::RankOracle;

/// Ground sets up to this size are checked over every pair of subsets.
pub const EXHAUSTIVE_LIMIT: usize = 12;

const SAMPLED_PAIRS: usize = 20_000;
const SAMPLE_SEED: u64 = 0x5eed;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubmodularReport {
    Holds {
        pairs_checked: usize,
        exhaustive: bool,
    },
    EmptyNonZero {
        rank: usize,
    },
    ExceedsCardinality {
        set: Vec<usize>,
        rank: usize,
    },
    NotMonotone {
        smaller: Vec<usize>,
        larger: Vec<usize>,
    },
    Violation {
        a: Vec<usize>,
        b: Vec<usize>,
    },
}

impl SubmodularReport {
    pub fn holds(&self) -> bool {
        matches!(self, SubmodularReport::Holds { .. })
    }
}

fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// Checks `r(∅) = 0`, `r(A) <= |A|`, monotonicity and
/// `r(A ∪ B) + r(A ∩ B) <= r(A) + r(B)`.
///
/// Exhaustive up to [`EXHAUSTIVE_LIMIT`] elements, where subsets are ordered
/// by their bitmask and the first violating pair `(A, B)` with `A < B` is
/// reported. Larger ground sets are sampled with a fixed seed.
pub fn check_submodular<O: RankOracle + ?Sized>(oracle: &O) -> SubmodularReport {
    let n = oracle.ground_size();
    if n <= EXHAUSTIVE_LIMIT {
        exhaustive(oracle, n)
    } else {
        sampled(oracle, n, SAMPLED_PAIRS, SAMPLE_SEED)
    }
}

fn exhaustive<O: RankOracle + ?Sized>(oracle: &O, n: usize) -> SubmodularReport {
    let total = 1u64 << n;
    let ranks: Vec<usize> = (0..total).map(|m| oracle.rank(&members(m))).collect();
    if ranks[0] != 0 {
        return SubmodularReport::EmptyNonZero { rank: ranks[0] };
    }
    for m in 0..total {
        let r = ranks[m as usize];
        if r > m.count_ones() as usize {
            return SubmodularReport::ExceedsCardinality {
                set: members(m),
                rank: r,
            };
        }
        for e in 0..n {
            let bigger = m | 1 << e;
            if bigger != m && ranks[bigger as usize] < r {
                return SubmodularReport::NotMonotone {
                    smaller: members(m),
                    larger: members(bigger),
                };
            }
        }
    }
    let mut pairs = 0;
    for a in 0..total {
        for b in a + 1..total {
            pairs += 1;
            let lhs = ranks[(a | b) as usize] + ranks[(a & b) as usize];
            if lhs > ranks[a as usize] + ranks[b as usize] {
                return SubmodularReport::Violation {
                    a: members(a),
                    b: members(b),
                };
            }
        }
    }
    SubmodularReport::Holds {
        pairs_checked: pairs,
        exhaustive: true,
    }
}

fn sampled<O: RankOracle + ?Sized>(
    oracle: &O,
    n: usize,
    samples: usize,
    seed: u64,
) -> SubmodularReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let empty = oracle.rank(&[]);
    if empty != 0 {
        return SubmodularReport::EmptyNonZero { rank: empty };
    }
    let subset = |rng: &mut ChaCha8Rng| -> Vec<bool> { (0..n).map(|_| rng.gen_bool(0.5)).collect() };
    let list = |s: &[bool]| -> Vec<usize> { (0..n).filter(|&i| s[i]).collect() };
    for _ in 0..samples {
        let a = subset(&mut rng);
        let b = subset(&mut rng);
        let union: Vec<bool> = a.iter().zip(&b).map(|(x, y)| *x || *y).collect();
        let inter: Vec<bool> = a.iter().zip(&b).map(|(x, y)| *x && *y).collect();
        let (la, lb, lu, li) = (list(&a), list(&b), list(&union), list(&inter));
        let (ra, rb, ru, ri) = (
            oracle.rank(&la),
            oracle.rank(&lb),
            oracle.rank(&lu),
            oracle.rank(&li),
        );
        for (set, r) in [(&la, ra), (&lb, rb), (&lu, ru), (&li, ri)] {
            if r > set.len() {
                return SubmodularReport::ExceedsCardinality {
                    set: set.clone(),
                    rank: r,
                };
            }
        }
        if ri > ra || ra > ru {
            return SubmodularReport::NotMonotone {
                smaller: if ri > ra { li } else { la.clone() },
                larger: if ri > ra { la } else { lu },
            };
        }
        if ru + ri > ra + rb {
            return SubmodularReport::Violation { a: la, b: lb };
        }
    }
    SubmodularReport::Holds {
        pairs_checked: samples,
        exhaustive: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{CardinalityOracle, FnOracle, LinearMatroid};
    use num_rational::BigRational;
    use crate::scalar::Coefficient;

    #[test]
    fn cardinality_is_modular() {
        assert!(check_submodular(&CardinalityOracle(5)).holds());
    }

    #[test]
    fn generic_plane_vectors() {
        let q = |v: i64| BigRational::from_i64(v);
        let m = LinearMatroid::new(vec![vec![q(1), q(0)], vec![q(0), q(1)], vec![q(1), q(1)]]).unwrap();
        assert_eq!(
            check_submodular(&m),
            SubmodularReport::Holds {
                pairs_checked: 28,
                exhaustive: true
            }
        );
    }

    #[test]
    fn pair_threshold_is_not_a_matroid() {
        // r(A) = 1 iff |A| >= 2: singletons have rank 0 but pairs rank 1.
        let bad = FnOracle::new(3, |s: &[usize]| usize::from(s.len() >= 2));
        // First violating pair in mask order: A = {0} (mask 1), B = {1} (mask 2).
        assert_eq!(
            check_submodular(&bad),
            SubmodularReport::Violation {
                a: vec![0],
                b: vec![1]
            }
        );
    }

    #[test]
    fn distinct_failures() {
        let nonzero = FnOracle::new(2, |_: &[usize]| 1);
        assert_eq!(check_submodular(&nonzero), SubmodularReport::EmptyNonZero { rank: 1 });
        let too_big = FnOracle::new(2, |s: &[usize]| 2 * s.len());
        assert!(matches!(
            check_submodular(&too_big),
            SubmodularReport::ExceedsCardinality { .. }
        ));
        let decreasing = FnOracle::new(2, |s: &[usize]| usize::from(s.len() == 1));
        assert!(matches!(
            check_submodular(&decreasing),
            SubmodularReport::NotMonotone { .. }
        ));
    }

    #[test]
    fn large_ground_sets_are_sampled() {
        let report = check_submodular(&CardinalityOracle(20));
        assert_eq!(
            report,
            SubmodularReport::Holds {
                pairs_checked: SAMPLED_PAIRS,
                exhaustive: false
            }
        );
        // Supermodular: r(A) = max(0, |A| - 9).
        let bad = FnOracle::new(20, |s: &[usize]| s.len().saturating_sub(9));
        assert!(!check_submodular(&bad).holds());
    }
}
