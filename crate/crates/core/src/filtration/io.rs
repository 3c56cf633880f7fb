//! Text formats for filtrations, point clouds and covers.
//!
//! Filtration files hold one simplex per line, `v0 v1 ... vk;birth`, with
//! ascending vertex ids. Lines starting with `#` are comments. Every face must
//! appear on an earlier line than its cofaces.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::filtration::{FilteredComplex, PointCloud, Simplex};

fn malformed(line: usize, content: &str, reason: impl Into<String>) -> Error {
    Error::MalformedLine {
        line,
        content: content.to_string(),
        reason: reason.into(),
    }
}

pub fn parse_filtration(text: &str) -> Result<FilteredComplex> {
    let mut births: HashMap<Simplex, f64> = HashMap::new();
    let mut entries = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let lineno = n + 1;
        let (verts, birth) = line
            .split_once(';')
            .ok_or_else(|| malformed(lineno, line, "missing ';' separator"))?;
        let vertices = verts
            .split_whitespace()
            .map(str::parse::<usize>)
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| malformed(lineno, line, format!("bad vertex id: {e}")))?;
        let birth: f64 = birth
            .trim()
            .parse()
            .map_err(|e| malformed(lineno, line, format!("bad birth value: {e}")))?;
        let simplex = Simplex::new(vertices)
            .map_err(|_| malformed(lineno, line, "vertices must be non-empty and strictly ascending"))?;
        if !birth.is_finite() || birth < 0.0 {
            return Err(Error::InvalidBirth { simplex, birth });
        }
        for face in simplex.faces() {
            match births.get(&face) {
                None => {
                    return Err(Error::MissingFace {
                        simplex: simplex.clone(),
                        face,
                    })
                }
                Some(&fb) if fb > birth => {
                    return Err(Error::FaceBornLater {
                        simplex: simplex.clone(),
                        face,
                        birth,
                        face_birth: fb,
                    })
                }
                Some(_) => {}
            }
        }
        if births.insert(simplex.clone(), birth).is_some() {
            return Err(Error::DuplicateSimplex(simplex));
        }
        entries.push((simplex, birth));
    }
    FilteredComplex::new(entries)
}

pub fn load_filtration(path: impl AsRef<Path>) -> Result<FilteredComplex> {
    parse_filtration(&std::fs::read_to_string(path)?)
}

/// Canonical text form. `{:?}` keeps every float round-trippable.
pub fn format_filtration(complex: &FilteredComplex) -> String {
    let mut out = String::new();
    for (s, b) in complex.iter() {
        let verts: Vec<String> = s.vertices().iter().map(usize::to_string).collect();
        writeln!(out, "{};{:?}", verts.join(" "), b).unwrap();
    }
    out
}

pub fn save_filtration(complex: &FilteredComplex, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, format_filtration(complex))?;
    Ok(())
}

/// Point cloud CSV: one point per row, no header.
pub fn parse_points(text: &str) -> Result<PointCloud<f64>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut points = Vec::new();
    for (n, record) in reader.records().enumerate() {
        let record = record?;
        let row = record
            .iter()
            .map(str::parse::<f64>)
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| malformed(n + 1, &record.iter().collect::<Vec<_>>().join(","), e.to_string()))?;
        points.push(row);
    }
    PointCloud::new(points)
}

pub fn load_points(path: impl AsRef<Path>) -> Result<PointCloud<f64>> {
    parse_points(&std::fs::read_to_string(path)?)
}

/// Cover file: one member per line, elements separated by whitespace.
pub fn parse_cover(text: &str) -> Vec<BTreeSet<String>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split_whitespace().map(str::to_string).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_file() {
        let c = parse_filtration("0;0.0\n1;0.0\n0 1;1.0\n").unwrap();
        assert_eq!(c.counts_by_dimension(), vec![2, 1]);
    }

    #[test]
    fn edge_before_vertex_is_rejected() {
        let err = parse_filtration("0 1;1.0\n0;0.0\n1;0.0\n").unwrap_err();
        match err {
            Error::MissingFace { simplex, .. } => assert_eq!(simplex.vertices(), &[0, 1]),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn distinct_errors() {
        assert!(matches!(
            parse_filtration("0;0\n1;2\n0 1;1\n"),
            Err(Error::FaceBornLater { .. })
        ));
        assert!(matches!(
            parse_filtration("0 x;1\n"),
            Err(Error::MalformedLine { line: 1, .. })
        ));
        assert!(matches!(
            parse_filtration("1 0;1\n"),
            Err(Error::MalformedLine { .. })
        ));
        assert!(matches!(
            parse_filtration("0;1\n0;1\n"),
            Err(Error::DuplicateSimplex(_))
        ));
        assert!(matches!(parse_filtration("0\n"), Err(Error::MalformedLine { .. })));
    }

    #[test]
    fn comments_and_blank_lines() {
        let c = parse_filtration("# header\n\n0;0.5\n").unwrap();
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn points_csv() {
        let cloud = parse_points("0,0\n1, 2\n").unwrap();
        assert_eq!(cloud.len(), 2);
        assert_eq!(cloud.point(1), &[1.0, 2.0]);
        assert!(parse_points("").is_err());
        assert!(parse_points("1,a\n").is_err());
    }
}
