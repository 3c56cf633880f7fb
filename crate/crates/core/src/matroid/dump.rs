//! JSON dumps of small matroids, used by tests and the CLI `check` command.

use serde_json::{json, Value};

use crate::matroid::{IrreducibleSet, RankOracle};

/// Full rank tables are only written up to this many elements.
pub const DUMP_TABLE_LIMIT: usize = 12;

/// `{"ground": [...], "labels": [...], "ranks": {"0,2": 1, ...}}`; the rank
/// table is omitted above [`DUMP_TABLE_LIMIT`] elements.
pub fn dump_matroid<O: RankOracle + ?Sized>(oracle: &O) -> Value {
    let n = oracle.ground_size();
    let ground: Vec<usize> = (0..n).collect();
    let labels: Vec<String> = ground.iter().map(|&e| oracle.label(e)).collect();
    let mut out = json!({ "ground": ground, "labels": labels });
    if n <= DUMP_TABLE_LIMIT {
        let table: serde_json::Map<String, Value> = (0u32..1 << n)
            .map(|mask| {
                let s: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                let key = s.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
                (key, json!(oracle.rank(&s)))
            })
            .collect();
        out["ranks"] = Value::Object(table);
    }
    out
}

/// A cover as a sorted list of sorted id lists, e.g. `[[0,1],[1,2,3]]`.
pub fn format_cover(cover: &[IrreducibleSet]) -> String {
    let mut sets: Vec<Vec<usize>> = cover
        .iter()
        .map(|c| {
            let mut e = c.elements.clone();
            e.sort_unstable();
            e
        })
        .collect();
    sets.sort();
    serde_json::to_string(&sets).expect("integer lists serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::CardinalityOracle;

    #[test]
    fn small_table() {
        let d = dump_matroid(&CardinalityOracle(2));
        assert_eq!(d["ranks"][""], 0);
        assert_eq!(d["ranks"]["0,1"], 2);
        assert!(dump_matroid(&CardinalityOracle(13)).get("ranks").is_none());
    }

    #[test]
    fn cover_format() {
        let cover = vec![
            IrreducibleSet { elements: vec![2, 3], rank: 1 },
            IrreducibleSet { elements: vec![0, 1], rank: 1 },
        ];
        assert_eq!(format_cover(&cover), "[[0,1],[2,3]]");
    }
}
