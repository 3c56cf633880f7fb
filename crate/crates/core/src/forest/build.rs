use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::{
    circuits, irreducible_cover, is_irreducible, push_forward_set, AtLevel, FilteredMatroid,
    IrreducibleSet,
};

pub type NodeId = usize;

/// An irreducible set tracked from the level where it appears.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RamificationNode {
    /// Element ids at `birth_level`.
    pub set: Vec<usize>,
    pub birth_level: usize,
    pub birth: f64,
    /// Rank of `set` at birth, always `set.len() - 1`.
    pub rank: usize,
    pub ramification_level: Option<usize>,
    pub ramification: Option<f64>,
    pub children: Vec<NodeId>,
    /// Elements of the image at the ramification level that lie in no
    /// irreducible set (coloops of the image), so no child covers them.
    pub free: Vec<usize>,
}

impl RamificationNode {
    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }
}

/// A rooted forest of irreducible sets. Nodes live in an arena; a node
/// reached from several parents is stored once.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct RamificationForest {
    nodes: Vec<RamificationNode>,
    roots: Vec<NodeId>,
    labels: HashMap<usize, String>,
    critical_values: Vec<f64>,
    description: String,
}

impl RamificationForest {
    pub fn nodes(&self) -> &[RamificationNode] {
        &self.nodes
    }

    pub fn node(&self, id: NodeId) -> &RamificationNode {
        &self.nodes[id]
    }

    pub fn roots(&self) -> &[NodeId] {
        &self.roots
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn critical_values(&self) -> &[f64] {
        &self.critical_values
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn label(&self, element: usize) -> String {
        self.labels
            .get(&element)
            .cloned()
            .unwrap_or_else(|| element.to_string())
    }

    /// Element labels of a node, sorted.
    pub fn set_labels(&self, id: NodeId) -> Vec<String> {
        let mut l: Vec<String> = self.nodes[id].set.iter().map(|&e| self.label(e)).collect();
        l.sort();
        l
    }

    /// Children in display order: larger sets first, then by labels.
    pub fn ordered_children(&self, id: NodeId) -> Vec<NodeId> {
        let mut c = self.nodes[id].children.clone();
        c.sort_by(|&a, &b| {
            let (na, nb) = (&self.nodes[a], &self.nodes[b]);
            nb.set
                .len()
                .cmp(&na.set.len())
                .then_with(|| self.set_labels(a).cmp(&self.set_labels(b)))
        });
        c
    }

    /// Longest root-to-leaf path, counted in nodes.
    pub fn depth(&self, id: NodeId) -> usize {
        1 + self.nodes[id]
            .children
            .iter()
            .map(|&c| self.depth(c))
            .max()
            .unwrap_or(0)
    }

    pub fn find(&self, set: &[usize], birth_level: usize) -> Option<NodeId> {
        self.nodes
            .iter()
            .position(|n| n.set == set && n.birth_level == birth_level)
    }
}

/// First level after `level` at which the image of `set` has lower rank, or
/// `None` if the rank persists through the last critical value.
pub fn ramification_value<M: FilteredMatroid + ?Sized>(
    fm: &M,
    set: &[usize],
    level: usize,
) -> Result<Option<usize>> {
    if !is_irreducible(&AtLevel::new(fm, level), set) {
        return Err(Error::NotIrreducible {
            set: set.to_vec(),
            scale: fm.scale(level),
        });
    }
    let rank = set.len() - 1;
    Ok((level + 1..fm.levels())
        .find(|&to| fm.rank_at(to, &push_forward_set(fm, level, to, set)) < rank))
}

/// Grows a forest seed by seed, sharing nodes with equal sets and births.
pub struct ForestBuilder<'a, M: ?Sized> {
    fm: &'a M,
    forest: RamificationForest,
    index: HashMap<(Vec<usize>, usize), NodeId>,
}

impl<'a, M: FilteredMatroid + ?Sized> ForestBuilder<'a, M> {
    pub fn new(fm: &'a M) -> Self {
        ForestBuilder {
            fm,
            forest: RamificationForest {
                critical_values: fm.critical_values().to_vec(),
                description: fm.description(),
                ..Default::default()
            },
            index: HashMap::new(),
        }
    }

    pub fn forest(&self) -> &RamificationForest {
        &self.forest
    }

    /// Adds a root for `seed`, irreducible at `level`.
    pub fn add_seed(&mut self, seed: &IrreducibleSet, level: usize) -> Result<NodeId> {
        let mut set = seed.elements.clone();
        set.sort_unstable();
        let id = self.node(set, level)?;
        if !self.forest.roots.contains(&id) {
            self.forest.roots.push(id);
        }
        Ok(id)
    }

    fn node(&mut self, set: Vec<usize>, level: usize) -> Result<NodeId> {
        if let Some(&id) = self.index.get(&(set.clone(), level)) {
            return Ok(id);
        }
        let ramified = ramification_value(self.fm, &set, level)?;
        for &e in &set {
            self.forest.labels.entry(e).or_insert_with(|| self.fm.label(e));
        }
        let id = self.forest.nodes.len();
        self.forest.nodes.push(RamificationNode {
            rank: set.len() - 1,
            set: set.clone(),
            birth_level: level,
            birth: self.fm.scale(level),
            ramification_level: ramified,
            ramification: ramified.map(|l| self.fm.scale(l)),
            children: Vec::new(),
            free: Vec::new(),
        });
        self.index.insert((set.clone(), level), id);

        let Some(to) = ramified else {
            return Ok(id);
        };
        let image = push_forward_set(self.fm, level, to, &set);
        let oracle = AtLevel::new(self.fm, to);
        let in_circuits: Vec<usize> = {
            let mut e: Vec<usize> = circuits(&oracle, &image)?.into_iter().flatten().collect();
            e.sort_unstable();
            e.dedup();
            e
        };
        let free: Vec<usize> = image
            .iter()
            .copied()
            .filter(|e| in_circuits.binary_search(e).is_err())
            .collect();
        let cover = if in_circuits.is_empty() {
            Vec::new()
        } else {
            irreducible_cover(&oracle, &in_circuits)?
        };
        let mut children = Vec::with_capacity(cover.len());
        for c in cover {
            children.push(self.node(c.elements, to)?);
        }
        for &e in &free {
            self.forest.labels.entry(e).or_insert_with(|| self.fm.label(e));
        }
        let node = &mut self.forest.nodes[id];
        node.children = children;
        node.free = free;
        Ok(id)
    }

    pub fn finish(self) -> RamificationForest {
        self.forest
    }
}

/// Builds the forest rooted at `seeds`, each given with its birth level.
pub fn build_forest<M: FilteredMatroid + ?Sized>(
    fm: &M,
    seeds: &[(IrreducibleSet, usize)],
) -> Result<RamificationForest> {
    let mut builder = ForestBuilder::new(fm);
    for (seed, level) in seeds {
        builder.add_seed(seed, *level)?;
    }
    Ok(builder.finish())
}
