//! wasm-bindgen entry points for the static page in `www/`. Every function
//! takes plain strings and returns a JSON string; failures come back as
//! `{"error": ...}` rather than exceptions.

use cordial_core::constructors::{construct_cycle, construct_path, odd_cycle, ConstructOutcome};
use cordial_core::format::{format_element, format_labels, parse_kind, parse_labels};
use cordial_core::search::SearchOptions;
use cordial_core::{GraphKind, GraphLabeling, GroupSpec};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Keeps a browser tab responsive when construction falls back to search.
const DEMO_NODE_BUDGET: u64 = 2_000_000;

fn error(msg: impl std::fmt::Display) -> String {
    json!({ "error": msg.to_string() }).to_string()
}

fn group(s: &str) -> Result<GroupSpec, String> {
    s.trim()
        .parse::<GroupSpec>()
        .map_err(|e| format!("group, column {}: {}", e.column, e.message))
}

fn kind(s: &str) -> Result<GraphKind, String> {
    parse_kind(s.trim()).ok_or_else(|| format!("unknown kind {s:?}"))
}

fn labeling_json(l: &GraphLabeling) -> Value {
    let g = l.group();
    let r = l.check_cordial();
    let names = |v: &[cordial_core::GroupElement]| -> Vec<String> {
        v.iter().map(|a| format_element(g, a)).collect()
    };
    json!({
        "group": g.to_string(),
        "kind": l.kind(),
        "labels": names(l.labels()),
        "edges": names(&l.induced_edge_labels()),
        "elements": names(&g.enumerate()),
        "vertex_counts": r.vertex_partition.counts,
        "edge_counts": r.edge_partition.counts,
        "vertex_ok": r.vertex_ok,
        "edge_ok": r.edge_ok,
        "cordial": r.cordial,
        "text": format_labels(g, l.labels()),
    })
}

/// Checks a `-`-joined label line.
#[wasm_bindgen]
pub fn check(group_spec: &str, kind_name: &str, labels: &str) -> String {
    let run = || -> Result<Value, String> {
        let g = group(group_spec)?;
        let l = parse_labels(&g, kind(kind_name)?, labels)
            .map_err(|e| format!("labels, column {}: {}", e.column, e.message))?;
        Ok(labeling_json(&l))
    };
    run().map_or_else(error, |v| v.to_string())
}

/// Builds a cordial path or cycle and returns it with its construction trace.
#[wasm_bindgen]
pub fn construct(group_spec: &str, kind_name: &str, length: usize) -> String {
    let run = || -> Result<Value, String> {
        let g = group(group_spec)?;
        let opts = SearchOptions::default().with_budget(Some(DEMO_NODE_BUDGET));
        let outcome = match kind(kind_name)? {
            GraphKind::Path => construct_path(&g, length, &opts),
            GraphKind::Cycle => construct_cycle(&g, length, &opts),
        }
        .map_err(|e| e.to_string())?;
        Ok(match outcome {
            ConstructOutcome::Built(c) => {
                let mut v = labeling_json(&c.labeling);
                v["status"] = json!("built");
                v["trace"] = json!(c.trace.steps);
                v
            }
            ConstructOutcome::Impossible { reason } => {
                json!({ "status": "impossible", "note": reason })
            }
            ConstructOutcome::Inconclusive { nodes } => json!({
                "status": "inconclusive",
                "note": format!("search gave up after {nodes} nodes"),
            }),
        })
    };
    run().map_or_else(error, |v| v.to_string())
}

/// Cordial cycle of odd order `|g|`, with every intermediate cycle of the
/// factor-by-factor build.
#[wasm_bindgen]
pub fn odd_cycle_stages(group_spec: &str) -> String {
    let run = || -> Result<Value, String> {
        let g = group(group_spec)?;
        let mut stages = Vec::new();
        for r in 1..=g.rank() {
            let prefix = GroupSpec::new(&g.factors()[..r]).map_err(|e| e.to_string())?;
            let c = odd_cycle(&prefix).map_err(|e| e.to_string())?;
            stages.push(labeling_json(&c.labeling));
        }
        Ok(json!({ "stages": stages }))
    };
    run().map_or_else(error, |v| v.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn check_reports_counts() {
        let v = parse(&check("2x4", "path", "00-12-10-01-02-03-11-13"));
        assert_eq!(v["cordial"], true);
        assert_eq!(v["edges"].as_array().unwrap().len(), 7);
        let v = parse(&check("2x2", "path", "00-01-10-11"));
        assert_eq!(v["cordial"], false);
        assert!(parse(&check("3", "path", "0-X"))["error"].is_string());
    }

    #[test]
    fn construct_statuses() {
        assert_eq!(
            parse(&construct("2x4", "path", 16))["text"],
            "10-00-01-11-12-12-03-03-10-00-01-11-02-02-13-13"
        );
        assert_eq!(
            parse(&construct("2x2x2", "path", 9))["status"],
            "impossible"
        );
        assert!(parse(&construct("2", "cycle", 2))["error"].is_string());
    }

    #[test]
    fn odd_stages() {
        let v = parse(&odd_cycle_stages("3x3"));
        let stages = v["stages"].as_array().unwrap();
        assert_eq!(stages.len(), 2);
        assert_eq!(stages[1]["text"], "00-12-01-10-22-11-20-02-21");
        assert!(parse(&odd_cycle_stages("2x3"))["error"].is_string());
    }
}
