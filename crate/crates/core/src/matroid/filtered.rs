use crate::filtration::level_at;
use crate::matroid::RankOracle;

/// A matroid-valued functor on the finitely many critical values of a filtration.
///
/// Level `l` stands for every scale in `[critical[l], critical[l + 1])`.
/// Elements are global ids; `ground_set(l)` lists those present at level `l`
/// and `push_forward` is the structure map between levels.
pub trait FilteredMatroid: Send + Sync {
    fn critical_values(&self) -> &[f64];

    fn ground_set(&self, level: usize) -> Vec<usize>;

    /// Rank at `level` of a subset of `ground_set(level)`.
    fn rank_at(&self, level: usize, subset: &[usize]) -> usize;

    /// Structure map `ψ` from level `from` to level `to >= from`.
    fn push_forward(&self, _from: usize, _to: usize, element: usize) -> usize {
        element
    }

    fn label(&self, element: usize) -> String {
        element.to_string()
    }

    fn description(&self) -> String;

    fn levels(&self) -> usize {
        self.critical_values().len()
    }

    fn scale(&self, level: usize) -> f64 {
        self.critical_values()[level]
    }

    /// Largest level whose critical value is `<= scale`.
    fn level_at(&self, scale: f64) -> Option<usize> {
        level_at(self.critical_values(), scale)
    }

    fn contains(&self, level: usize, element: usize) -> bool {
        self.ground_set(level).contains(&element)
    }
}

/// Image of a set under the structure map, sorted and deduplicated.
pub fn push_forward_set<M: FilteredMatroid + ?Sized>(
    fm: &M,
    from: usize,
    to: usize,
    set: &[usize],
) -> Vec<usize> {
    let mut out: Vec<usize> = set.iter().map(|&e| fm.push_forward(from, to, e)).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// The matroid at one level, re-indexed over positions of a fixed element list.
pub struct LevelOracle<'a, M: ?Sized> {
    fm: &'a M,
    level: usize,
    elements: Vec<usize>,
}

impl<'a, M: FilteredMatroid + ?Sized> LevelOracle<'a, M> {
    /// Restricts to `elements`, which must all be present at `level`.
    pub fn new(fm: &'a M, level: usize, elements: Vec<usize>) -> Self {
        LevelOracle {
            fm,
            level,
            elements,
        }
    }

    pub fn whole(fm: &'a M, level: usize) -> Self {
        let elements = fm.ground_set(level);
        Self::new(fm, level, elements)
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }
}

impl<M: FilteredMatroid + ?Sized> RankOracle for LevelOracle<'_, M> {
    fn ground_size(&self) -> usize {
        self.elements.len()
    }

    fn rank(&self, subset: &[usize]) -> usize {
        let ids: Vec<usize> = subset.iter().map(|&i| self.elements[i]).collect();
        self.fm.rank_at(self.level, &ids)
    }

    fn label(&self, element: usize) -> String {
        self.fm.label(self.elements[element])
    }
}

/// The matroid at one level, keeping global element ids. `ground_size` is one
/// past the largest id present, so ids absent at the level must not be queried.
pub struct AtLevel<'a, M: ?Sized> {
    fm: &'a M,
    level: usize,
}

impl<'a, M: FilteredMatroid + ?Sized> AtLevel<'a, M> {
    pub fn new(fm: &'a M, level: usize) -> Self {
        AtLevel { fm, level }
    }
}

impl<M: FilteredMatroid + ?Sized> RankOracle for AtLevel<'_, M> {
    fn ground_size(&self) -> usize {
        self.fm.ground_set(self.level).last().map_or(0, |e| e + 1)
    }

    fn rank(&self, subset: &[usize]) -> usize {
        self.fm.rank_at(self.level, subset)
    }

    fn label(&self, element: usize) -> String {
        self.fm.label(element)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum FunctorialityViolation {
    /// `ψ(from, to) ≠ ψ(mid, to) ∘ ψ(from, mid)` on `element`.
    Composition {
        from: usize,
        mid: usize,
        to: usize,
        element: usize,
    },
    /// An element is mapped outside the target ground set.
    MissingImage { from: usize, to: usize, element: usize },
    /// `r_to(ψ(A)) > r_from(A)`.
    RankIncrease { from: usize, to: usize, set: Vec<usize> },
}

/// Checks structure-map composition on every triple of levels, and rank
/// non-increase between consecutive levels on every subset of up to
/// `max_exhaustive` elements (singletons and pairs beyond that).
pub fn check_functoriality<M: FilteredMatroid + ?Sized>(
    fm: &M,
    max_exhaustive: usize,
) -> Result<(), FunctorialityViolation> {
    let levels = fm.levels();
    for from in 0..levels {
        let ground = fm.ground_set(from);
        for to in from..levels {
            let target = fm.ground_set(to);
            for &e in &ground {
                let image = fm.push_forward(from, to, e);
                if !target.contains(&image) {
                    return Err(FunctorialityViolation::MissingImage {
                        from,
                        to,
                        element: e,
                    });
                }
                for mid in from..=to {
                    let via = fm.push_forward(mid, to, fm.push_forward(from, mid, e));
                    if via != image {
                        return Err(FunctorialityViolation::Composition {
                            from,
                            mid,
                            to,
                            element: e,
                        });
                    }
                }
            }
        }
    }
    for from in 0..levels.saturating_sub(1) {
        let to = from + 1;
        let ground = fm.ground_set(from);
        let subsets: Vec<Vec<usize>> = if ground.len() <= max_exhaustive {
            (0u64..1 << ground.len())
                .map(|m| {
                    (0..ground.len())
                        .filter(|i| m >> i & 1 == 1)
                        .map(|i| ground[i])
                        .collect()
                })
                .collect()
        } else {
            let mut small: Vec<Vec<usize>> = ground.iter().map(|&e| vec![e]).collect();
            for (i, &a) in ground.iter().enumerate() {
                for &b in &ground[i + 1..] {
                    small.push(vec![a, b]);
                }
            }
            small
        };
        for set in subsets {
            let image = push_forward_set(fm, from, to, &set);
            if fm.rank_at(to, &image) > fm.rank_at(from, &set) {
                return Err(FunctorialityViolation::RankIncrease { from, to, set });
            }
        }
    }
    Ok(())
}
