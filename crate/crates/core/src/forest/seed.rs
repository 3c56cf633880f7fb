use crate::error::Result;
use crate::forest::{ForestBuilder, RamificationForest};
use crate::matroid::{circuits, AtLevel, FilteredMatroid, IrreducibleSet};

/// Finds forest roots level by level and builds the forest on the way.
///
/// At each level, an irreducible set of present elements is a candidate when
/// it is newly dependent (it contains an element born at this level, or it
/// was independent one level earlier) and no node already in the forest
/// born at or before this level contains it. Candidates are taken largest
/// first, lexicographic among equals, skipping those inside the union of
/// sets already taken at the same level.
pub fn auto_seed<M: FilteredMatroid + ?Sized>(
    fm: &M,
) -> Result<(Vec<(IrreducibleSet, usize)>, RamificationForest)> {
    let mut builder = ForestBuilder::new(fm);
    let mut seeds = Vec::new();
    let mut previous: Vec<usize> = Vec::new();
    for level in 0..fm.levels() {
        let ground = fm.ground_set(level);
        let oracle = AtLevel::new(fm, level);
        let mut candidates: Vec<Vec<usize>> = circuits(&oracle, &ground)?
            .into_iter()
            .filter(|c| {
                level == 0
                    || c.iter().any(|e| previous.binary_search(e).is_err())
                    || fm.rank_at(level - 1, c) == c.len()
            })
            .filter(|c| {
                !builder.forest().nodes().iter().any(|n| {
                    n.birth_level <= level && c.iter().all(|e| n.set.binary_search(e).is_ok())
                })
            })
            .collect();
        candidates.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        let mut taken: Vec<usize> = Vec::new();
        for c in candidates {
            if c.iter().all(|e| taken.contains(e)) {
                continue;
            }
            taken.extend(&c);
            let seed = IrreducibleSet {
                rank: c.len() - 1,
                elements: c,
            };
            builder.add_seed(&seed, level)?;
            seeds.push((seed, level));
        }
        previous = ground;
    }
    Ok((seeds, builder.finish()))
}
