use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::filtration::FilteredComplex;
use crate::homology::ChainVector;
use crate::scalar::Coefficient;

/// One bar: a homology class born at `birth` that dies at `death` (`None` = +inf).
#[derive(Clone, Debug, PartialEq)]
pub struct PersistencePair<F> {
    /// Position in the barcode; also the matroid element id of its generator.
    pub id: usize,
    pub dimension: usize,
    pub birth: f64,
    pub death: Option<f64>,
    pub birth_simplex: usize,
    pub death_simplex: Option<usize>,
    pub representative: ChainVector<F>,
}

impl<F> PersistencePair<F> {
    /// Whether the class is alive at `scale`: `birth <= scale < death`.
    pub fn is_alive_at(&self, scale: f64) -> bool {
        self.birth <= scale && self.death.is_none_or(|d| scale < d)
    }

    pub fn death_or_inf(&self) -> f64 {
        self.death.unwrap_or(f64::INFINITY)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Barcode<F> {
    pairs: Vec<PersistencePair<F>>,
}

pub(crate) fn fmt_scale(v: f64) -> String {
    if v.is_infinite() {
        "inf".to_string()
    } else {
        format!("{v}")
    }
}

impl<F: Coefficient> Barcode<F> {
    pub fn new(pairs: Vec<PersistencePair<F>>) -> Self {
        Barcode { pairs }
    }

    pub fn pairs(&self) -> &[PersistencePair<F>] {
        &self.pairs
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn in_dimension(&self, k: usize) -> impl Iterator<Item = &PersistencePair<F>> {
        self.pairs.iter().filter(move |p| p.dimension == k)
    }

    /// Number of bars of dimension `k` alive at `scale`.
    pub fn betti(&self, k: usize, scale: f64) -> usize {
        self.in_dimension(k).filter(|p| p.is_alive_at(scale)).count()
    }

    pub fn max_dimension(&self) -> Option<usize> {
        self.pairs.iter().map(|p| p.dimension).max()
    }

    /// `dim,birth,death` with `inf` for classes that never die.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("dim,birth,death\n");
        for p in &self.pairs {
            writeln!(
                out,
                "{},{},{}",
                p.dimension,
                fmt_scale(p.birth),
                fmt_scale(p.death_or_inf())
            )
            .unwrap();
        }
        out
    }

    /// JSON list of bars; representatives as `[simplex, numerator, denominator]` triples.
    pub fn to_json(&self, complex: &FilteredComplex) -> String {
        let bars: Vec<Value> = self
            .pairs
            .iter()
            .map(|p| {
                let rep: Vec<Value> = p
                    .representative
                    .coeffs()
                    .iter()
                    .map(|(i, c)| {
                        let (n, d) = c.numer_denom();
                        json!([complex.simplex(i).vertices(), n.to_string(), d.to_string()])
                    })
                    .collect();
                json!({
                    "id": p.id,
                    "dim": p.dimension,
                    "birth": p.birth,
                    "death": p.death.map_or(json!("inf"), |d| json!(d)),
                    "representative": rep,
                })
            })
            .collect();
        let mut s = serde_json::to_string_pretty(&json!({
            "field": F::field_name(),
            "bars": bars,
        }))
        .unwrap();
        s.push('\n');
        s
    }

    /// Static SVG: bars stacked per dimension against a horizontal scale axis.
    pub fn to_svg(&self) -> String {
        const WIDTH: f64 = 640.0;
        const MARGIN: f64 = 48.0;
        const ROW: f64 = 12.0;
        const GAP: f64 = 28.0;
        let finite_max = self
            .pairs
            .iter()
            .flat_map(|p| [Some(p.birth), p.death])
            .flatten()
            .fold(0.0f64, f64::max);
        let axis_max = if finite_max > 0.0 { finite_max * 1.1 } else { 1.0 };
        let x = |v: f64| MARGIN + (WIDTH - 2.0 * MARGIN) * (v.min(axis_max) / axis_max);

        let mut body = String::new();
        let mut y = MARGIN;
        let dims = self.max_dimension().map_or(0, |d| d + 1);
        for k in 0..dims {
            writeln!(
                body,
                r#"  <text x="8" y="{:.1}" font-size="12">H{k}</text>"#,
                y + ROW
            )
            .unwrap();
            for p in self.in_dimension(k) {
                y += ROW;
                let end = p.death.map_or(x(axis_max), x);
                writeln!(
                    body,
                    r#"  <line x1="{:.1}" y1="{y:.1}" x2="{end:.1}" y2="{y:.1}" stroke="black" stroke-width="3"/>"#,
                    x(p.birth)
                )
                .unwrap();
                if p.death.is_none() {
                    writeln!(
                        body,
                        r#"  <polygon points="{end:.1},{:.1} {:.1},{y:.1} {end:.1},{:.1}" fill="black"/>"#,
                        y - 4.0,
                        end + 6.0,
                        y + 4.0
                    )
                    .unwrap();
                }
            }
            y += GAP;
        }
        let height = y + MARGIN;
        let axis_y = height - MARGIN / 2.0;
        let mut out = format!(
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{height:.0}" viewBox="0 0 {WIDTH} {height:.0}">"#
        );
        out.push('\n');
        if self.pairs.is_empty() {
            out.push_str("  <!-- empty barcode -->\n");
        }
        out.push_str(&body);
        writeln!(
            out,
            r#"  <line x1="{MARGIN}" y1="{axis_y:.1}" x2="{:.1}" y2="{axis_y:.1}" stroke="gray"/>"#,
            WIDTH - MARGIN
        )
        .unwrap();
        for t in 0..=4 {
            let v = axis_max * t as f64 / 4.0;
            writeln!(
                out,
                r#"  <text x="{:.1}" y="{:.1}" font-size="10" text-anchor="middle">{}</text>"#,
                x(v),
                axis_y + 14.0,
                (v * 100.0).round() / 100.0
            )
            .unwrap();
        }
        out.push_str("</svg>\n");
        out
    }
}
