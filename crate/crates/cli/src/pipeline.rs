use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use cophenet::demo;
use cophenet::distance::{alive_generators, distance_matrix, DistanceMatrix, MergeRule};
use cophenet::filtration::io::{format_filtration, load_points, parse_cover, parse_filtration};
use cophenet::filtration::{
    build_cech, build_vietoris_rips, clique_complex, nerve, FilteredComplex, Graph,
    DEFAULT_MAX_DIM,
};
use cophenet::forest::{
    auto_seed, build_forest, export_dot, export_json, export_newick, export_svg,
    RamificationForest,
};
use cophenet::homology::{boundary_apply, compute_persistence, ChainVector};
use cophenet::matroid::{
    check_functoriality, check_submodular, cophenetic_matroid, generators_from_barcode,
    is_irreducible, AtLevel, FilteredMatroid, IrreducibleSet, LevelOracle, SubmodularReport,
};
use cophenet::scalar::{Coefficient, Gf};
use cophenet::Rational;

use crate::args::{ComplexKind, Demo, Field, InputKind, Settings};

pub fn emit(settings: &Settings, data: &str) -> Result<()> {
    match &settings.output {
        Some(path) => std::fs::write(path, data)
            .with_context(|| format!("cannot write {}", path.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(data.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn infer_kind(settings: &Settings, path: &Path) -> InputKind {
    if let Some(k) = settings.input_kind {
        return k;
    }
    match path.extension().and_then(|e| e.to_str()) {
        Some("csv") => return InputKind::CsvPoints,
        Some("filt") => return InputKind::Filtration,
        Some("graph" | "edges") => return InputKind::Graph,
        Some("cover") => return InputKind::Cover,
        _ => {}
    }
    match settings.complex {
        Some(ComplexKind::Rips | ComplexKind::Cech) => InputKind::CsvPoints,
        Some(ComplexKind::Clique) => InputKind::Graph,
        Some(ComplexKind::Nerve) => InputKind::Cover,
        None => InputKind::Filtration,
    }
}

fn kind_name(kind: InputKind) -> &'static str {
    match kind {
        InputKind::CsvPoints => "csv-points",
        InputKind::Filtration => "filtration",
        InputKind::Graph => "graph",
        InputKind::Cover => "cover",
    }
}

/// The filtered complex named by the settings.
pub fn load_complex(settings: &Settings) -> Result<FilteredComplex> {
    match (settings.demo, &settings.input) {
        (Some(_), Some(_)) => bail!("give either an input file or --demo, not both"),
        (Some(Demo::Triangles), None) => return Ok(demo::triangle_complex()),
        (Some(Demo::SEpsilon), None) => bail!(
            "the s-epsilon demo is a filtered matroid, not a complex; use it with forest, distmat or check"
        ),
        (None, None) => bail!("no input: pass a file or --demo triangles|s-epsilon"),
        (None, Some(_)) => {}
    }
    let path = settings.input.as_ref().expect("checked above");
    if !path.is_file() {
        bail!("cannot read {}: no such file", path.display());
    }
    let kind = infer_kind(settings, path);
    let max_dim = settings.max_dim.unwrap_or(DEFAULT_MAX_DIM);
    let complex_kind = match (settings.complex, kind) {
        (None, InputKind::CsvPoints) => Some(ComplexKind::Rips),
        (None, _) => None,
        (Some(c), k) => {
            let needed = match c {
                ComplexKind::Rips | ComplexKind::Cech => InputKind::CsvPoints,
                ComplexKind::Clique => InputKind::Graph,
                ComplexKind::Nerve => InputKind::Cover,
            };
            if needed != k {
                bail!(
                    "--{} needs {} input but {} is read as {}; pass --input-kind {} or choose another complex",
                    format!("{c:?}").to_lowercase(),
                    kind_name(needed),
                    path.display(),
                    kind_name(k),
                    kind_name(needed)
                );
            }
            Some(c)
        }
    };
    let read = || {
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
    };
    let complex = match (kind, complex_kind) {
        (InputKind::Filtration, _) => parse_filtration(&read()?)?,
        (InputKind::CsvPoints, Some(ComplexKind::Cech)) => {
            build_cech(&load_points(path)?, max_dim, settings.max_scale)?
        }
        (InputKind::CsvPoints, _) => {
            build_vietoris_rips(&load_points(path)?, max_dim, settings.max_scale)?
        }
        (InputKind::Graph, _) => clique_complex(&Graph::parse(&read()?)?, max_dim)?,
        (InputKind::Cover, _) => nerve(&parse_cover(&read()?), max_dim)?,
    };
    Ok(complex)
}

pub fn cmd_build(settings: &Settings) -> Result<()> {
    let complex = load_complex(settings)?;
    let counts = complex.counts_by_dimension();
    for (d, n) in counts.iter().enumerate() {
        eprintln!("dimension {d}: {n} simplices");
    }
    eprintln!("{} critical values", complex.critical_values().len());
    emit(settings, &format_filtration(&complex))
}

/// Runs `body` with the field chosen in the settings.
macro_rules! with_field {
    ($field:expr, $body:ident ( $($arg:expr),* )) => {
        match $field {
            Field::Rational => $body::<Rational>($($arg),*),
            Field::Gf(2) => $body::<Gf<2>>($($arg),*),
            Field::Gf(3) => $body::<Gf<3>>($($arg),*),
            Field::Gf(5) => $body::<Gf<5>>($($arg),*),
            Field::Gf(7) => $body::<Gf<7>>($($arg),*),
            Field::Gf(11) => $body::<Gf<11>>($($arg),*),
            Field::Gf(13) => $body::<Gf<13>>($($arg),*),
            Field::Gf(p) => unreachable!("gf({p}) rejected while parsing"),
        }
    };
}

pub fn cmd_persist(settings: &Settings) -> Result<()> {
    with_field!(settings.field, persist(settings))
}

fn persist<F: Coefficient>(settings: &Settings) -> Result<()> {
    let complex = load_complex(settings)?;
    let max_dim = settings
        .max_dim
        .unwrap_or_else(|| complex.dimension().unwrap_or(0));
    let barcode = compute_persistence::<F>(&complex, max_dim);
    let text = match settings.format.as_deref().unwrap_or("csv") {
        "csv" => barcode.to_csv(),
        "json" => barcode.to_json(&complex),
        "svg" => barcode.to_svg(),
        other => bail!("unknown barcode format {other:?}; expected csv, json or svg"),
    };
    emit(settings, &text)
}

/// Calls `body` with the filtered matroid the settings describe: the
/// coordinate-zeroing demo, or the cophenetic matroid of a complex.
fn with_matroid<F: Coefficient, R>(
    settings: &Settings,
    body: impl FnOnce(&dyn FilteredMatroid, Option<&FilteredComplex>) -> Result<R>,
) -> Result<R> {
    if settings.demo == Some(Demo::SEpsilon) {
        if settings.input.is_some() {
            bail!("give either an input file or --demo, not both");
        }
        let m = demo::s_epsilon_matroid::<F>();
        return body(&m, None);
    }
    let complex = load_complex(settings)?;
    let k = settings.degree;
    let generators = if settings.demo == Some(Demo::Triangles) && k == 1 {
        demo::triangle_generators::<F>(&complex)
    } else {
        generators_from_barcode(&compute_persistence::<F>(&complex, k), k)
    };
    log::info!("{} generators in degree {k}", generators.len());
    let m = cophenetic_matroid(&complex, k, generators)?;
    body(&m, Some(&complex))
}

/// Generators are named by their labels: bar ids, or vertex letters for the
/// triangle demo.
fn parse_ids(fm: &dyn FilteredMatroid, text: &str) -> Result<Vec<usize>> {
    let all = fm.levels().checked_sub(1).map(|l| fm.ground_set(l)).unwrap_or_default();
    text.split(',')
        .map(|s| {
            let s = s.trim();
            all.iter()
                .copied()
                .find(|&e| fm.label(e) == s)
                .with_context(|| format!("unknown generator {s:?}"))
        })
        .collect()
}

/// `a,b,c` or `a,b,c@3.5`. Without a scale, the first level where the set
/// is present and irreducible.
fn parse_seed(fm: &dyn FilteredMatroid, text: &str) -> Result<(IrreducibleSet, usize)> {
    let (ids, at) = match text.split_once('@') {
        Some((ids, at)) => (ids, Some(at.trim().parse::<f64>().context("bad seed scale")?)),
        None => (text, None),
    };
    let mut elements = parse_ids(fm, ids)?;
    elements.sort_unstable();
    elements.dedup();
    let fits = |level: usize| {
        let ground = fm.ground_set(level);
        elements.iter().all(|e| ground.contains(e))
            && is_irreducible(&AtLevel::new(fm, level), &elements)
    };
    let level = match at {
        Some(s) => {
            let l = fm
                .level_at(s)
                .with_context(|| format!("seed scale {s} is below the first critical value"))?;
            if !fits(l) {
                bail!("seed {text:?} is not an irreducible set at scale {}", fm.scale(l));
            }
            l
        }
        None => (0..fm.levels())
            .find(|&l| fits(l))
            .with_context(|| format!("seed {text:?} is never an irreducible set"))?,
    };
    let rank = elements.len() - 1;
    Ok((IrreducibleSet { elements, rank }, level))
}

fn forest_for(settings: &Settings, fm: &dyn FilteredMatroid) -> Result<RamificationForest> {
    if settings.seeds.is_empty() {
        let (seeds, forest) = auto_seed(fm)?;
        for (s, l) in &seeds {
            log::info!("seed {:?} at {}", s.elements, fm.scale(*l));
        }
        Ok(forest)
    } else {
        let seeds = settings
            .seeds
            .iter()
            .map(|s| parse_seed(fm, s))
            .collect::<Result<Vec<_>>>()?;
        Ok(build_forest(fm, &seeds)?)
    }
}

pub fn cmd_forest(settings: &Settings) -> Result<()> {
    with_field!(settings.field, forest(settings))
}

fn forest<F: Coefficient>(settings: &Settings) -> Result<()> {
    let format = settings.format.clone().unwrap_or_else(|| "newick".into());
    if !["newick", "dot", "svg", "json"].contains(&format.as_str()) {
        bail!("unknown forest format {format:?}; expected newick, dot, svg or json");
    }
    let forest = with_matroid::<F, _>(settings, |fm, _| forest_for(settings, fm))?;
    if forest.is_empty() {
        eprintln!("forest is empty");
    }
    let text = match format.as_str() {
        "newick" => export_newick(&forest),
        "dot" => export_dot(&forest),
        "svg" => export_svg(&forest),
        _ => serde_json::to_string_pretty(&export_json(&forest))? + "\n",
    };
    emit(settings, &text)
}

/// Level with the most nonzero classes; the earliest one on ties.
fn default_level(fm: &dyn FilteredMatroid) -> Option<usize> {
    (0..fm.levels())
        .map(|l| (alive_generators(fm, l).len(), l))
        .filter(|(n, _)| *n > 0)
        .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
        .map(|(_, l)| l)
}

pub fn cmd_distmat(settings: &Settings) -> Result<()> {
    with_field!(settings.field, distmat(settings))
}

fn distmat<F: Coefficient>(settings: &Settings) -> Result<()> {
    let matrix = with_matroid::<F, _>(settings, |fm, _| {
        let scale = match settings.at {
            Some(s) => s,
            None => match default_level(fm) {
                Some(l) => fm.scale(l),
                None => {
                    eprintln!("no nonzero classes at any scale");
                    return Ok(None);
                }
            },
        };
        let level = fm
            .level_at(scale)
            .with_context(|| format!("scale {scale} is below the first critical value"))?;
        let ids = match &settings.ids {
            Some(t) => parse_ids(fm, t)?,
            None => alive_generators(fm, level),
        };
        let m = match settings.rule {
            MergeRule::SameSpan => distance_matrix(fm, scale, &ids, settings.rule)?,
            MergeRule::RankDrop => {
                let m = DistanceMatrix::compute(fm, scale, &ids, settings.rule)?;
                if let Err((i, j, k)) = m.check_ultrametric() {
                    log::warn!(
                        "rank-drop distances are not ultrametric on ({}, {}, {})",
                        m.labels[i],
                        m.labels[j],
                        m.labels[k]
                    );
                }
                m
            }
        };
        Ok(Some(m))
    })?;
    match matrix {
        Some(m) => emit(settings, &m.to_csv()),
        None => emit(settings, ""),
    }
}

pub fn cmd_check(settings: &Settings) -> Result<bool> {
    with_field!(settings.field, check(settings))
}

fn check<F: Coefficient>(settings: &Settings) -> Result<bool> {
    with_matroid::<F, _>(settings, |fm, complex| {
        let mut ok = true;
        let mut report = String::new();
        if let Some(c) = complex {
            let bad = (0..c.len()).find(|&i| {
                let dim = c.simplex(i).dimension();
                dim > 0
                    && boundary_apply(&ChainVector::<F>::new(dim - 1, c.boundary(i)), c)
                        .map_or(true, |b| !b.is_zero())
            });
            match bad {
                None => report.push_str("boundary of boundary: ok\n"),
                Some(i) => {
                    ok = false;
                    report.push_str(&format!("boundary of boundary: FAIL at {}\n", c.simplex(i)));
                }
            }
        }
        for level in 0..fm.levels() {
            let scale = fm.scale(level);
            let oracle = LevelOracle::whole(fm, level);
            match check_submodular(&oracle) {
                SubmodularReport::Holds {
                    pairs_checked,
                    exhaustive,
                } => report.push_str(&format!(
                    "submodular at {scale}: ok ({pairs_checked} pairs, {})\n",
                    if exhaustive { "exhaustive" } else { "sampled" }
                )),
                other => {
                    ok = false;
                    report.push_str(&format!("submodular at {scale}: FAIL {other:?}\n"));
                }
            }
            let alive = alive_generators(fm, level);
            match distance_matrix(fm, scale, &alive, MergeRule::SameSpan) {
                Ok(_) => report.push_str(&format!(
                    "ultrametric at {scale}: ok ({} classes)\n",
                    alive.len()
                )),
                Err(e) => {
                    ok = false;
                    report.push_str(&format!("ultrametric at {scale}: FAIL {e}\n"));
                }
            }
        }
        match check_functoriality(fm, 10) {
            Ok(()) => report.push_str("functoriality: ok\n"),
            Err(v) => {
                ok = false;
                report.push_str(&format!("functoriality: FAIL {v:?}\n"));
            }
        }
        emit(settings, &report)?;
        Ok(ok)
    })
}
