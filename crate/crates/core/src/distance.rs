//! Cophenetic distance: how long after `ε` two classes stay apart.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::homology::fmt_scale;
use crate::matroid::FilteredMatroid;

/// When two nonzero classes count as merged at a level.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MergeRule {
    /// `c({α, β}) = c({α}) = c({β})`: the classes span the same line, or are
    /// both zero. An equivalence relation that only coarsens as the scale
    /// grows, hence an ultrametric.
    #[default]
    SameSpan,
    /// `c({α, β}) < 2`. Also fires as soon as one class alone dies, which
    /// can break the ultrametric inequality.
    RankDrop,
}

impl FromStr for MergeRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "same-span" => Ok(MergeRule::SameSpan),
            "rank-drop" => Ok(MergeRule::RankDrop),
            other => Err(Error::InvalidParameter(format!(
                "unknown merge rule {other:?}; expected same-span or rank-drop"
            ))),
        }
    }
}

fn merged<M: FilteredMatroid + ?Sized>(fm: &M, level: usize, a: usize, b: usize, rule: MergeRule) -> bool {
    let pair = fm.rank_at(level, &[a.min(b), a.max(b)]);
    match rule {
        MergeRule::RankDrop => pair < 2,
        MergeRule::SameSpan => pair == fm.rank_at(level, &[a]) && pair == fm.rank_at(level, &[b]),
    }
}

fn check_alive<M: FilteredMatroid + ?Sized>(fm: &M, level: usize, id: usize) -> Result<()> {
    let scale = fm.scale(level);
    if !fm.contains(level, id) {
        return Err(Error::UnknownGenerator { id, scale });
    }
    if fm.rank_at(level, &[id]) == 0 {
        return Err(Error::ZeroClass { id, scale });
    }
    Ok(())
}

/// `η - ε` for the first critical value `η >= ε` at which `a` and `b` merge,
/// or `None` if they never do. Structure maps are taken to be identities on
/// ids, as for cophenetic matroids.
pub fn cophenetic_distance<M: FilteredMatroid + ?Sized>(
    fm: &M,
    a: usize,
    b: usize,
    level: usize,
    rule: MergeRule,
) -> Result<Option<f64>> {
    check_alive(fm, level, a)?;
    check_alive(fm, level, b)?;
    if a == b {
        return Ok(Some(0.0));
    }
    Ok((level..fm.levels())
        .find(|&l| merged(fm, l, a, b, rule))
        .map(|l| fm.scale(l) - fm.scale(level)))
}

/// Symmetric matrix of cophenetic distances at one scale; `None` is `∞`.
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceMatrix {
    pub ids: Vec<usize>,
    pub labels: Vec<String>,
    pub scale: f64,
    pub rule: MergeRule,
    values: Vec<Vec<Option<f64>>>,
}

/// One step of single-linkage clustering.
#[derive(Clone, Debug, PartialEq)]
pub struct Merge {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub height: f64,
}

fn le(x: Option<f64>, y: Option<f64>) -> bool {
    match (x, y) {
        (_, None) => true,
        (None, Some(_)) => false,
        (Some(x), Some(y)) => x <= y,
    }
}

fn max(x: Option<f64>, y: Option<f64>) -> Option<f64> {
    if le(x, y) {
        y
    } else {
        x
    }
}

impl DistanceMatrix {
    /// All pairwise distances without the ultrametric check.
    pub fn compute<M: FilteredMatroid + ?Sized>(
        fm: &M,
        scale: f64,
        ids: &[usize],
        rule: MergeRule,
    ) -> Result<Self> {
        let level = fm.level_at(scale).ok_or_else(|| {
            Error::InvalidParameter(format!("scale {scale} is below the first critical value"))
        })?;
        for &id in ids {
            check_alive(fm, level, id)?;
        }
        let n = ids.len();
        let mut values = vec![vec![Some(0.0); n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let d = cophenetic_distance(fm, ids[i], ids[j], level, rule)?;
                values[i][j] = d;
                values[j][i] = d;
            }
        }
        Ok(DistanceMatrix {
            ids: ids.to_vec(),
            labels: ids.iter().map(|&i| fm.label(i)).collect(),
            scale: fm.scale(level),
            rule,
            values,
        })
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    /// Distance between rows `i` and `j`.
    pub fn get(&self, i: usize, j: usize) -> Option<f64> {
        self.values[i][j]
    }

    /// First triple of rows `(i, j, k)` with `d(i,j) > max(d(i,k), d(k,j))`.
    pub fn check_ultrametric(&self) -> std::result::Result<(), (usize, usize, usize)> {
        let n = self.len();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if !le(self.get(i, j), max(self.get(i, k), self.get(k, j))) {
                        return Err((i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// Single-linkage merges in order of height; pairs at `∞` never merge.
    pub fn single_linkage(&self) -> Vec<Merge> {
        let mut clusters: Vec<Vec<usize>> = (0..self.len()).map(|i| vec![i]).collect();
        let mut merges = Vec::new();
        loop {
            let mut best: Option<(f64, usize, usize)> = None;
            for a in 0..clusters.len() {
                for b in a + 1..clusters.len() {
                    let link = clusters[a]
                        .iter()
                        .flat_map(|&i| clusters[b].iter().filter_map(move |&j| self.get(i, j)))
                        .fold(f64::INFINITY, f64::min);
                    if link.is_finite() && best.is_none_or(|(h, _, _)| link < h) {
                        best = Some((link, a, b));
                    }
                }
            }
            let Some((height, a, b)) = best else {
                return merges;
            };
            let right = clusters.remove(b);
            let left = clusters[a].clone();
            clusters[a].extend(&right);
            clusters[a].sort_unstable();
            merges.push(Merge {
                left: left.iter().map(|&i| self.ids[i]).collect(),
                right: right.iter().map(|&i| self.ids[i]).collect(),
                height,
            });
        }
    }

    /// Header row of generator labels, one row per generator, `inf` for `∞`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("id");
        for l in &self.labels {
            let _ = write!(out, ",{l}");
        }
        out.push('\n');
        for (i, l) in self.labels.iter().enumerate() {
            out.push_str(l);
            for j in 0..self.len() {
                let _ = write!(out, ",{}", fmt_scale(self.get(i, j).unwrap_or(f64::INFINITY)));
            }
            out.push('\n');
        }
        out
    }
}

/// Distance matrix at `scale`, rejected with the offending triple if it is
/// not an ultrametric.
pub fn distance_matrix<M: FilteredMatroid + ?Sized>(
    fm: &M,
    scale: f64,
    ids: &[usize],
    rule: MergeRule,
) -> Result<DistanceMatrix> {
    let m = DistanceMatrix::compute(fm, scale, ids, rule)?;
    if let Err((i, j, k)) = m.check_ultrametric() {
        return Err(Error::UltrametricViolation {
            a: ids[i],
            b: ids[j],
            c: ids[k],
        });
    }
    Ok(m)
}

/// Generators that are nonzero classes at `level`.
pub fn alive_generators<M: FilteredMatroid + ?Sized>(fm: &M, level: usize) -> Vec<usize> {
    fm.ground_set(level)
        .into_iter()
        .filter(|&e| fm.rank_at(level, &[e]) > 0)
        .collect()
}
