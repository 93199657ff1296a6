//! Reference labelings shipped in `data/labelings.txt`.

use std::sync::OnceLock;

use crate::format::parse_records;
use crate::group::GroupSpec;
use crate::labeling::{GraphKind, GraphLabeling};

use super::ConstructError;

const TABLE_SOURCE: &str = include_str!("../../data/labelings.txt");

#[derive(Debug, Clone)]
pub struct TableEntry {
    pub name: String,
    pub labeling: GraphLabeling,
}

/// Every table entry, parsed and verified on first use.
///
/// # Panics
///
/// If the data file fails to parse or any entry is not cordial.
pub fn table() -> &'static [TableEntry] {
    static TABLE: OnceLock<Vec<TableEntry>> = OnceLock::new();
    TABLE.get_or_init(|| {
        load(TABLE_SOURCE).unwrap_or_else(|e| panic!("labeling table is corrupt: {e}"))
    })
}

pub(crate) fn load(source: &str) -> Result<Vec<TableEntry>, String> {
    let records = parse_records(source).map_err(|e| e.to_string())?;
    let mut out: Vec<TableEntry> = Vec::with_capacity(records.len());
    for rec in records {
        let name = rec.name.ok_or("table record without a name")?;
        if out.iter().any(|e| e.name == name) {
            return Err(format!("duplicate table entry {name:?}"));
        }
        if !rec.labeling.is_cordial() {
            return Err(format!("table entry {name:?} is not cordial"));
        }
        out.push(TableEntry {
            name,
            labeling: rec.labeling,
        });
    }
    Ok(out)
}

pub fn hardcoded_labeling(name: &str) -> Result<GraphLabeling, ConstructError> {
    table()
        .iter()
        .find(|e| e.name == name)
        .map(|e| e.labeling.clone())
        .ok_or_else(|| ConstructError::UnknownName(name.to_string()))
}

pub fn table_names() -> Vec<&'static str> {
    table().iter().map(|e| e.name.as_str()).collect()
}

/// A table labeling of `P_n` or `C_n` (n = |g|) for exactly this
/// presentation.
pub(crate) fn base_entry(g: &GroupSpec) -> Option<&'static TableEntry> {
    let n = g.order();
    let fits = |e: &&TableEntry| e.labeling.group() == g && e.labeling.len() == n;
    table()
        .iter()
        .filter(fits)
        .find(|e| e.labeling.kind() == GraphKind::Path)
        .or_else(|| {
            table()
                .iter()
                .filter(fits)
                .find(|e| e.labeling.kind() == GraphKind::Cycle)
        })
}
