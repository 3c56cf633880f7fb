use serde::{Deserialize, Serialize};

/// A matroid presented by its rank function on subsets of `0..ground_size()`.
///
/// Implementations must satisfy `r(∅) = 0`, monotonicity, `r(A) <= |A|` and
/// submodularity; [`check_submodular`](crate::matroid::check_submodular)
/// verifies all of these. Subsets are passed as slices of distinct element ids.
pub trait RankOracle {
    fn ground_size(&self) -> usize;

    fn rank(&self, subset: &[usize]) -> usize;

    fn label(&self, element: usize) -> String {
        element.to_string()
    }
}

impl<T: RankOracle + ?Sized> RankOracle for &T {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }
    fn rank(&self, subset: &[usize]) -> usize {
        (**self).rank(subset)
    }
    fn label(&self, element: usize) -> String {
        (**self).label(element)
    }
}

/// The free matroid: every set is independent.
#[derive(Clone, Copy, Debug)]
pub struct CardinalityOracle(pub usize);

impl RankOracle for CardinalityOracle {
    fn ground_size(&self) -> usize {
        self.0
    }
    fn rank(&self, subset: &[usize]) -> usize {
        subset.len()
    }
}

/// Wraps any function `&[usize] -> usize` as a rank oracle.
pub struct FnOracle<R> {
    size: usize,
    rank: R,
}

impl<R: Fn(&[usize]) -> usize> FnOracle<R> {
    pub fn new(size: usize, rank: R) -> Self {
        FnOracle { size, rank }
    }
}

impl<R: Fn(&[usize]) -> usize> RankOracle for FnOracle<R> {
    fn ground_size(&self) -> usize {
        self.size
    }
    fn rank(&self, subset: &[usize]) -> usize {
        (self.rank)(subset)
    }
}

/// A set of matroid elements that is irreducible (a circuit): `r(A) = |A| - 1`
/// and every proper subset is independent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IrreducibleSet {
    pub elements: Vec<usize>,
    pub rank: usize,
}

impl IrreducibleSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, element: usize) -> bool {
        self.elements.binary_search(&element).is_ok()
    }
}
