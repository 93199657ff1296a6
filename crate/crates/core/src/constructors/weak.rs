//! Every path except `P_8` and `P_9` over `M = Z_2 x Z_2 x Z_2`.
//!
//! Write `m = 16h + j`. For `j` outside `{8, 9}`, a cordial `P_j` comes from
//! the table or by extending a shorter table entry one vertex at a time;
//! then `h` copies of the table `P_16` are glued on. For `j` in `{8, 9}` and
//! `m > 9`, start from the table `P_24` (or its one-vertex extension) and
//! glue `(m - 24) / 16` copies.

use crate::group::GroupSpec;
use crate::labeling::GraphLabeling;

use super::{
    extend_by_one, glue, hardcoded_labeling, ConstructError, Constructed, ConstructionTrace, Rule,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeakPath {
    Built(Constructed),
    Impossible,
}

fn m_group() -> GroupSpec {
    GroupSpec::elementary_two(3).expect("2x2x2 is valid")
}

fn extend_to(
    mut l: GraphLabeling,
    target: usize,
    trace: &mut ConstructionTrace,
) -> Result<GraphLabeling, ConstructError> {
    let from = l.len();
    while l.len() < target {
        l = extend_by_one(&l)?;
    }
    if target > from {
        trace.push(Rule::Extend, format!("P_{from} -> P_{target}"));
    }
    Ok(l)
}

fn from_table(name: &str, trace: &mut ConstructionTrace) -> Result<GraphLabeling, ConstructError> {
    trace.push(Rule::Table, name);
    hardcoded_labeling(name)
}

/// Residue base for `m mod 16 = j`, `j ∉ {8, 9}`, `1 <= j <= 15`.
fn small_base(j: usize, trace: &mut ConstructionTrace) -> Result<GraphLabeling, ConstructError> {
    match j {
        1..=5 => {
            let g = m_group();
            let p1 = GraphLabeling::path(g.clone(), vec![g.identity()])?;
            trace.push(Rule::Table, "P_1 labeled 000");
            extend_to(p1, j, trace)
        }
        6 => from_table("m-p6", trace),
        7 => from_table("m-p7", trace),
        10 => from_table("m-p10", trace),
        11..=13 => {
            let p10 = from_table("m-p10", trace)?;
            extend_to(p10, j, trace)
        }
        14 => from_table("m-p14", trace),
        15 => from_table("m-p15", trace),
        _ => unreachable!("residue {j} has no small base"),
    }
}

pub fn m_weak_path(m: usize) -> Result<WeakPath, ConstructError> {
    if m == 0 {
        return Err(crate::error::CordialError::EmptyPath.into());
    }
    if m == 8 || m == 9 {
        return Ok(WeakPath::Impossible);
    }
    let mut trace = ConstructionTrace::default();
    let (mut cur, copies) = match m % 16 {
        0 => (from_table("m-p16", &mut trace)?, m / 16 - 1),
        j @ (8 | 9) => {
            let p24 = from_table("m-p24", &mut trace)?;
            (extend_to(p24, 16 + j, &mut trace)?, (m - 16 - j) / 16)
        }
        j => (small_base(j, &mut trace)?, m / 16),
    };
    if copies > 0 {
        let p16 = hardcoded_labeling("m-p16")?;
        for _ in 0..copies {
            cur = glue(&cur, &p16)?;
        }
        trace.push(Rule::Glue, format!("{copies} x P_16 -> P_{m}"));
    }
    debug_assert_eq!(cur.len(), m);
    Ok(WeakPath::Built(Constructed {
        labeling: cur,
        trace,
    }))
}
