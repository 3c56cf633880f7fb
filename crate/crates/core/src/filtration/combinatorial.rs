//! Clique complexes of graphs and nerves of covers. All births are zero.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::filtration::geometric::enumerate_cliques;
use crate::filtration::{FilteredComplex, Simplex};

/// A simple undirected graph on vertices `0..vertex_count`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Self {
        Graph {
            vertex_count,
            edges,
        }
    }

    /// Reads `u v` edge lines and bare `v` vertex lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut vertex_count = 0;
        let mut edges = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let ids = line
                .split_whitespace()
                .map(str::parse::<usize>)
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::MalformedLine {
                    line: n + 1,
                    content: line.to_string(),
                    reason: e.to_string(),
                })?;
            match ids.as_slice() {
                [v] => vertex_count = vertex_count.max(v + 1),
                [u, v] => {
                    vertex_count = vertex_count.max(u.max(v) + 1);
                    edges.push((*u, *v));
                }
                _ => {
                    return Err(Error::MalformedLine {
                        line: n + 1,
                        content: line.to_string(),
                        reason: "expected one vertex or one edge".into(),
                    })
                }
            }
        }
        Ok(Graph {
            vertex_count,
            edges,
        })
    }
}

/// Clique complex up to dimension `max_dim`, everything born at 0.
pub fn clique_complex(graph: &Graph, max_dim: usize) -> Result<FilteredComplex> {
    let mut adjacency: HashSet<(usize, usize)> = HashSet::new();
    for &(u, v) in &graph.edges {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if u >= graph.vertex_count || v >= graph.vertex_count {
            return Err(Error::InvalidParameter(format!(
                "edge ({u}, {v}) references a vertex outside 0..{}",
                graph.vertex_count
            )));
        }
        adjacency.insert((u.min(v), u.max(v)));
    }
    let cliques = enumerate_cliques(
        graph.vertex_count,
        |i, j| adjacency.contains(&(i, j)),
        max_dim,
    );
    let entries = cliques
        .into_iter()
        .map(|vs| Ok((Simplex::new(vs)?, 0.0)))
        .collect::<Result<Vec<_>>>()?;
    FilteredComplex::new(entries)
}

/// Nerve of a finite cover: a simplex for every family of members with a
/// common element, up to dimension `max_dim`. Member `i` becomes vertex `i`.
pub fn nerve<T: Ord>(cover: &[BTreeSet<T>], max_dim: usize) -> Result<FilteredComplex> {
    if cover.is_empty() {
        return Err(Error::EmptyCover);
    }
    let mut entries = Vec::new();
    // Depth-first over increasing member lists, carrying the running intersection.
    let mut stack: Vec<(Vec<usize>, Vec<&T>)> = (0..cover.len())
        .rev()
        .map(|i| (vec![i], cover[i].iter().collect()))
        .collect();
    while let Some((members, common)) = stack.pop() {
        if members.len() > 1 && common.is_empty() {
            continue;
        }
        if members.len() <= max_dim {
            let last = *members.last().unwrap();
            for j in (last + 1..cover.len()).rev() {
                let next: Vec<&T> = common
                    .iter()
                    .copied()
                    .filter(|x| cover[j].contains(x))
                    .collect();
                if !next.is_empty() {
                    let mut m = members.clone();
                    m.push(j);
                    stack.push((m, next));
                }
            }
        }
        entries.push((Simplex::new(members)?, 0.0));
    }
    FilteredComplex::new(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(c: &FilteredComplex) -> Vec<usize> {
        c.counts_by_dimension()
    }

    #[test]
    fn triangle_and_path_graphs() {
        let k3 = clique_complex(&Graph::new(3, vec![(0, 1), (1, 2), (0, 2)]), 2).unwrap();
        assert_eq!(dims(&k3), vec![3, 3, 1]);
        let p3 = clique_complex(&Graph::new(3, vec![(0, 1), (1, 2)]), 2).unwrap();
        assert_eq!(dims(&p3), vec![3, 2]);
    }

    #[test]
    fn k4_minus_edge() {
        let g = Graph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
        let c = clique_complex(&g, 3).unwrap();
        assert_eq!(dims(&c), vec![4, 5, 2]);
    }

    #[test]
    fn self_loop_rejected() {
        let g = Graph::new(2, vec![(1, 1)]);
        assert!(matches!(clique_complex(&g, 2), Err(Error::SelfLoop(1))));
    }

    #[test]
    fn graph_parsing() {
        let g = Graph::parse("# a path\n0 1\n1 2\n5\n").unwrap();
        assert_eq!(g.vertex_count, 6);
        assert_eq!(g.edges, vec![(0, 1), (1, 2)]);
        assert!(Graph::parse("0 1 2\n").is_err());
    }

    #[test]
    fn nerve_cases() {
        let set = |v: &[u32]| v.iter().copied().collect::<BTreeSet<_>>();
        let hollow = nerve(&[set(&[1, 2]), set(&[2, 3]), set(&[3, 1])], 2).unwrap();
        assert_eq!(dims(&hollow), vec![3, 3]);
        let single = nerve(&[set(&[1])], 2).unwrap();
        assert_eq!(dims(&single), vec![1]);
        let disjoint = nerve(&[set(&[1]), set(&[2])], 2).unwrap();
        assert_eq!(dims(&disjoint), vec![2]);
        assert!(matches!(
            nerve::<u32>(&[], 2),
            Err(Error::EmptyCover)
        ));
    }
}
