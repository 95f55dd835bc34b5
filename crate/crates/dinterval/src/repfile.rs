//! JSON representation files.
//!
//! ```json
//! {"d": 2, "vertices": {"1": [["0", "1"], ["5/2", "7/2"]], "2": [["1", "2"]]}}
//! ```
//!
//! Coordinates are integers (JSON numbers or strings) or `"p/q"` strings.
//! The writer emits strings in lowest terms and vertices in ascending order.

use serde_json::{json, Map, Value};

use dinterval_core::interval::RepError;
use dinterval_core::{DIntervalRep, Interval, Rational, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepFileError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("{0}")]
    Shape(String),
    #[error("vertex {vertex}: {detail}")]
    Interval { vertex: String, detail: String },
    #[error(transparent)]
    Rep(#[from] RepError),
}

fn shape(msg: &str) -> RepFileError {
    RepFileError::Shape(msg.to_string())
}

pub fn parse_rep(text: &str) -> Result<DIntervalRep, RepFileError> {
    let value: Value = serde_json::from_str(text).map_err(|e| RepFileError::Json(e.to_string()))?;
    rep_from_value(&value)
}

fn coordinate(v: &Value) -> Result<Rational, String> {
    match v {
        Value::String(s) => s.parse().map_err(|e| format!("{e}")),
        Value::Number(n) => n
            .as_i64()
            .map(Rational::from)
            .ok_or_else(|| format!("non-integer number {n}; use a \"p/q\" string")),
        other => Err(format!(
            "coordinate must be a string or integer, got {other}"
        )),
    }
}

/// Accepts files whose vertices have more than `d` parts, so that
/// verification can report them.
pub fn rep_from_value(value: &Value) -> Result<DIntervalRep, RepFileError> {
    let obj = value
        .as_object()
        .ok_or_else(|| shape("top level must be an object"))?;
    let d = obj
        .get("d")
        .and_then(Value::as_u64)
        .ok_or_else(|| shape("missing or invalid \"d\""))?;
    let vertices = obj
        .get("vertices")
        .and_then(Value::as_object)
        .ok_or_else(|| shape("missing or invalid \"vertices\""))?;
    let mut rep = DIntervalRep::new(d as usize)?;
    for (key, parts) in vertices {
        let bad = |detail: String| RepFileError::Interval {
            vertex: key.clone(),
            detail,
        };
        let v: Vertex = key
            .parse()
            .map_err(|_| bad("vertex ids must be positive integers".into()))?;
        let parts = parts
            .as_array()
            .ok_or_else(|| bad("expected a list of intervals".into()))?;
        let mut ivs = Vec::with_capacity(parts.len());
        for p in parts {
            let pair = match p.as_array() {
                Some(pair) if pair.len() == 2 => pair,
                _ => return Err(bad(format!("interval must be a pair, got {p}"))),
            };
            let l = coordinate(&pair[0]).map_err(&bad)?;
            let r = coordinate(&pair[1]).map_err(&bad)?;
            if l > r {
                return Err(bad(format!("left endpoint {l} exceeds right endpoint {r}")));
            }
            ivs.push(Interval::new(l, r));
        }
        rep.insert_unchecked(v, ivs)?;
    }
    Ok(rep)
}

pub fn rep_to_value(rep: &DIntervalRep) -> Value {
    let mut vertices = Map::new();
    for (v, parts) in rep.parts() {
        let list: Vec<Value> = parts
            .iter()
            .map(|iv| json!([iv.l.to_string(), iv.r.to_string()]))
            .collect();
        vertices.insert(v.to_string(), Value::Array(list));
    }
    json!({ "d": rep.d(), "vertices": vertices })
}

/// One vertex per line, so that diffs of representation files stay readable.
pub fn write_rep(rep: &DIntervalRep) -> String {
    let mut out = format!("{{\"d\": {}, \"vertices\": {{", rep.d());
    for (k, (v, parts)) in rep.parts().iter().enumerate() {
        let list: Vec<String> = parts
            .iter()
            .map(|iv| format!("[\"{}\", \"{}\"]", iv.l, iv.r))
            .collect();
        out.push_str(if k == 0 { "\n" } else { ",\n" });
        out.push_str(&format!("  \"{}\": [{}]", v, list.join(", ")));
    }
    out.push_str(if rep.is_empty() { "}}\n" } else { "\n}}\n" });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use dinterval_core::generators::counterexample_interval_rep;

    #[test]
    fn reads_integers_and_fractions() {
        let rep = parse_rep(r#"{"d": 2, "vertices": {"3": [[0, "9/2"], ["-6/4", "7"]]}}"#).unwrap();
        assert_eq!(rep.d(), 2);
        let parts = rep.get(3).unwrap();
        assert_eq!(
            parts[0],
            Interval::new(Rational::zero(), Rational::new(9, 2))
        );
        assert_eq!(parts[1].l, Rational::new(-3, 2));
    }

    #[test]
    fn writer_sorts_ids_numerically_and_reduces() {
        let mut rep = DIntervalRep::new(1).unwrap();
        rep.insert(
            10,
            vec![Interval::new(Rational::new(2, 4), Rational::from(1))],
        )
        .unwrap();
        rep.insert(2, vec![Interval::ints(-3, 0)]).unwrap();
        let text = write_rep(&rep);
        assert_eq!(text, "{\"d\": 1, \"vertices\": {\n  \"2\": [[\"-3\", \"0\"]],\n  \"10\": [[\"1/2\", \"1\"]]\n}}\n");
        let compact = serde_json::to_string(&rep_to_value(&rep)).unwrap();
        assert_eq!(
            compact,
            r#"{"d":1,"vertices":{"2":[["-3","0"]],"10":[["1/2","1"]]}}"#
        );
    }

    #[test]
    fn round_trip() {
        let rep = counterexample_interval_rep();
        assert_eq!(parse_rep(&write_rep(&rep)).unwrap(), rep);
        assert_eq!(rep_from_value(&rep_to_value(&rep)).unwrap(), rep);
        let empty = DIntervalRep::new(3).unwrap();
        assert_eq!(parse_rep(&write_rep(&empty)).unwrap(), empty);
    }

    #[test]
    fn rejects_bad_input() {
        for bad in [
            "[1]",
            r#"{"vertices": {}}"#,
            r#"{"d": 0, "vertices": {}}"#,
            r#"{"d": 1}"#,
            r#"{"d": 1, "vertices": {"x": [["0", "1"]]}}"#,
            r#"{"d": 1, "vertices": {"0": [["0", "1"]]}}"#,
            r#"{"d": 1, "vertices": {"1": []}}"#,
            r#"{"d": 1, "vertices": {"1": [["2", "1"]]}}"#,
            r#"{"d": 1, "vertices": {"1": [["0", "1/0"]]}}"#,
            r#"{"d": 1, "vertices": {"1": [[0.5, 1]]}}"#,
            r#"{"d": 1, "vertices": {"1": [["0"]]}}"#,
            "{",
        ] {
            assert!(parse_rep(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn too_many_parts_still_loads() {
        let rep = parse_rep(r#"{"d": 1, "vertices": {"1": [["0", "1"], ["2", "3"]]}}"#).unwrap();
        assert_eq!(rep.get(1).unwrap().len(), 2);
    }
}
