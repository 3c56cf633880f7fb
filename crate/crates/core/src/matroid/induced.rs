use crate::error::{Error, Result};
use crate::matroid::RankOracle;

/// Pulls a rank function back along `map: F -> E`: `r(A) = r_E(map(A))`.
pub struct InducedOracle<O> {
    map: Vec<usize>,
    base: O,
}

/// Rank oracle on `0..map.len()` induced by `map` into the ground set of `base`.
pub fn induced_rank<O: RankOracle>(map: Vec<usize>, base: O) -> Result<InducedOracle<O>> {
    if let Some(&bad) = map.iter().find(|&&e| e >= base.ground_size()) {
        return Err(Error::InvalidParameter(format!(
            "map target {bad} outside ground set of size {}",
            base.ground_size()
        )));
    }
    Ok(InducedOracle { map, base })
}

impl<O: RankOracle> InducedOracle<O> {
    pub fn image(&self, subset: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = subset.iter().map(|&e| self.map[e]).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

impl<O: RankOracle> RankOracle for InducedOracle<O> {
    fn ground_size(&self) -> usize {
        self.map.len()
    }

    fn rank(&self, subset: &[usize]) -> usize {
        self.base.rank(&self.image(subset))
    }

    fn label(&self, element: usize) -> String {
        self.base.label(self.map[element])
    }
}

/// Whether `map` is a matroid morphism: `r_target(map(A)) <= r_source(A)` for
/// every subset `A`. Exhaustive, so only for small ground sets.
pub fn is_morphism<S: RankOracle + ?Sized, T: RankOracle + ?Sized>(
    map: &[usize],
    source: &S,
    target: &T,
) -> bool {
    let n = source.ground_size();
    assert!(n < 24, "exhaustive morphism check needs a small ground set");
    (0u32..1 << n).all(|mask| {
        let subset: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let mut image: Vec<usize> = subset.iter().map(|&e| map[e]).collect();
        image.sort_unstable();
        image.dedup();
        target.rank(&image) <= source.rank(&subset)
    })
}
