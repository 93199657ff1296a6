//! Text and JSON rendering. Both modes print the same records.

use std::cell::RefCell;
use std::fmt::Write as _;
use std::io::{self, Write as _};

use cordial_core::constructors::ConstructOutcome;
use cordial_core::format::{format_element, format_labeling, format_labels};
use cordial_core::search::{Exp2Report, SearchOutcome, SweepReport};
use cordial_core::{CordialityReport, GraphKind, GraphLabeling, GroupSpec};
use serde::Serialize;
use serde_json::{json, Value};

/// Collects stdout so it is written once; a closed pipe is not an error.
pub struct Output {
    json: bool,
    buf: RefCell<String>,
}

macro_rules! out {
    ($o:expr, $($arg:tt)*) => {
        writeln!($o.buf.borrow_mut(), $($arg)*).expect("writing to a String")
    };
}

fn labels_json(l: &GraphLabeling) -> Value {
    json!(format_labels(l.group(), l.labels()))
}

/// Counts keyed by element, in element-index order.
fn counts_json(g: &GroupSpec, counts: &[usize]) -> Value {
    let map: serde_json::Map<String, Value> = g
        .enumerate()
        .iter()
        .zip(counts)
        .map(|(a, &c)| (format_element(g, a), json!(c)))
        .collect();
    Value::Object(map)
}

impl Output {
    pub fn new(json: bool) -> Self {
        Self {
            json,
            buf: RefCell::new(String::new()),
        }
    }

    pub fn flush(&self) {
        let mut stdout = io::stdout().lock();
        match stdout
            .write_all(self.buf.borrow().as_bytes())
            .and_then(|_| stdout.flush())
        {
            Err(e) if e.kind() != io::ErrorKind::BrokenPipe => eprintln!("error: {e}"),
            _ => {}
        }
    }

    fn emit(&self, v: &impl Serialize) {
        out!(
            self,
            "{}",
            serde_json::to_string_pretty(v).expect("serializable")
        );
    }

    pub fn error(&self, msg: &str) {
        if self.json {
            self.emit(&json!({ "error": msg }));
        } else {
            eprintln!("error: {msg}");
        }
    }

    pub fn check(&self, l: &GraphLabeling, r: &CordialityReport) {
        let g = l.group();
        if self.json {
            self.emit(&json!({
                "group": g.to_string(),
                "kind": l.kind(),
                "length": l.len(),
                "labels": labels_json(l),
                "cordial": r.cordial,
                "vertex_ok": r.vertex_ok,
                "edge_ok": r.edge_ok,
                "vertex_counts": counts_json(g, &r.vertex_partition.counts),
                "edge_counts": counts_json(g, &r.edge_partition.counts),
                "vertex_partition": r.vertex_partition.partition,
                "edge_partition": r.edge_partition.partition,
            }));
            return;
        }
        let verdict = if r.cordial { "cordial" } else { "not cordial" };
        out!(
            self,
            "{} on {} vertices over {g}: {verdict}",
            l.kind(),
            l.len()
        );
        out!(
            self,
            "  vertex partition {:?}{}",
            r.vertex_partition.partition,
            mark(r.vertex_ok)
        );
        out!(
            self,
            "  edge partition   {:?}{}",
            r.edge_partition.partition,
            mark(r.edge_ok)
        );
    }

    pub fn construct(&self, g: &GroupSpec, kind: GraphKind, m: usize, o: &ConstructOutcome) {
        let (status, labeling, trace, note) = match o {
            ConstructOutcome::Built(c) => {
                ("built", Some(&c.labeling), Some(&c.trace), String::new())
            }
            ConstructOutcome::Impossible { reason } => ("impossible", None, None, reason.clone()),
            ConstructOutcome::Inconclusive { nodes } => (
                "inconclusive",
                None,
                None,
                format!("search hit the node budget after {nodes} nodes"),
            ),
        };
        if self.json {
            self.emit(&json!({
                "group": g.to_string(),
                "kind": kind,
                "length": m,
                "status": status,
                "labels": labeling.map(labels_json),
                "trace": trace.map(|t| &t.steps),
                "note": note,
            }));
            return;
        }
        match (labeling, trace) {
            (Some(l), Some(t)) => {
                for line in t.to_string().lines() {
                    out!(self, "# {line}");
                }
                self.buf.borrow_mut().push_str(&format_labeling(l));
            }
            _ => out!(
                self,
                "{} {kind} of length {m} over {g}: {note}",
                status.to_uppercase()
            ),
        }
    }

    pub fn search(&self, g: &GroupSpec, kind: GraphKind, m: usize, o: &SearchOutcome) {
        if self.json {
            self.emit(&json!({
                "group": g.to_string(),
                "kind": kind,
                "length": m,
                "verdict": o.verdict,
                "witness": o.witness.as_ref().map(labels_json),
                "nodes": o.nodes_explored,
                "seconds": o.elapsed.as_secs_f64(),
                "symmetry": o.symmetry_mode,
            }));
            return;
        }
        out!(
            self,
            "# {kind} of length {m} over {g}: {:?}, {} nodes, {:.3}s",
            o.verdict,
            o.nodes_explored,
            o.elapsed.as_secs_f64()
        );
        if let Some(w) = &o.witness {
            self.buf.borrow_mut().push_str(&format_labeling(w));
        }
    }

    pub fn count(&self, g: &GroupSpec, kind: GraphKind, m: usize, count: u64) {
        if self.json {
            self.emit(
                &json!({ "group": g.to_string(), "kind": kind, "length": m, "count": count }),
            );
        } else {
            out!(self, "{count}");
        }
    }

    pub fn sweep(&self, r: &SweepReport) {
        if self.json {
            self.emit(&r.rows);
            return;
        }
        out!(
            self,
            "{:<10} {:>5}  {:<15} {:<9} {:>8} {:>12} {:>9}  note",
            "group",
            "order",
            "class",
            "verdict",
            "max_path",
            "nodes",
            "seconds"
        );
        for row in &r.rows {
            let class = serde_json::to_value(row.classification).expect("serializable");
            let verdict = serde_json::to_value(row.verdict).expect("serializable");
            out!(
                self,
                "{:<10} {:>5}  {:<15} {:<9} {:>8} {:>12} {:>9.3}  {}",
                row.group,
                row.order,
                class.as_str().unwrap_or_default(),
                verdict.as_str().unwrap_or_default(),
                row.max_path_verified,
                row.nodes,
                row.seconds,
                row.note
            );
        }
    }

    pub fn exp2(&self, r: &Exp2Report) {
        if self.json {
            self.emit(r);
            return;
        }
        let how = if r.exhaustive { "all" } else { "random" };
        out!(
            self,
            "(Z_2)^{}: {} {how} permutations checked",
            r.rank,
            r.permutations_checked
        );
        out!(
            self,
            "  non-identity elements sum to identity: {}",
            r.nonidentity_sum_is_identity
        );
        out!(
            self,
            "  edge sum != leaf sum: {} permutations",
            r.leaf_sum_mismatches
        );
        out!(
            self,
            "  edge labels exactly the non-identity elements: {} permutations",
            r.contradictions
        );
        out!(
            self,
            "  argument {}",
            if r.holds { "holds" } else { "FAILS" }
        );
    }
}

fn mark(ok: bool) -> &'static str {
    if ok {
        ""
    } else {
        "  <- not almost rectangular"
    }
}
