//! Two-row cordial `P_{2n}` over `Z_2 x Z_k`, `k` even.
//!
//! Draw the path as a zigzag between a top and a bottom row of `2k` vertices
//! each. Second coordinates run `0..k, 0..k` along both rows; first
//! coordinates alternate starting at 1 on top and 0 below. That auxiliary
//! labeling uses every element twice but only hits edge labels with odd
//! coordinate sum. Swapping the first coordinates of the last `k/2` top
//! vertices with those of bottom vertices `k/2..k` repairs the edges.

use crate::group::GroupSpec;
use crate::labeling::GraphLabeling;

use super::{verified, ConstructError, Rule};

fn check_k(k: usize) -> Result<GroupSpec, ConstructError> {
    if k < 2 || k % 2 == 1 {
        return Err(ConstructError::Precondition(format!(
            "two-row construction needs an even k >= 2, got {k}; for odd k, Z_2 x Z_{k} is cyclic and the cyclic constructions apply"
        )));
    }
    Ok(GroupSpec::new(&[2, k])?)
}

/// One row of `(first, second)` coordinate pairs.
type Row = Vec<(usize, usize)>;

/// `(top, bottom)` rows.
fn rows(k: usize) -> (Row, Row) {
    let top = (0..2 * k).map(|j| ((j + 1) % 2, j % k)).collect();
    let bottom = (0..2 * k).map(|j| (j % 2, j % k)).collect();
    (top, bottom)
}

fn zigzag(
    g: GroupSpec,
    top: &[(usize, usize)],
    bottom: &[(usize, usize)],
) -> Result<GraphLabeling, ConstructError> {
    let labels = top
        .iter()
        .zip(bottom)
        .flat_map(|(&t, &b)| [t, b])
        .map(|(i, j)| g.element_exact(&[i, j]))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GraphLabeling::path(g, labels)?)
}

/// The pre-swap labeling. Not cordial; exposed for inspection.
pub fn double_path_auxiliary(k: usize) -> Result<GraphLabeling, ConstructError> {
    let g = check_k(k)?;
    let (top, bottom) = rows(k);
    zigzag(g, &top, &bottom)
}

/// Cordial `P_{4k}` over `Z_2 x Z_k`, `k` even, read along the zigzag
/// top-0, bottom-0, top-1, bottom-1, ...
pub fn double_path(k: usize) -> Result<GraphLabeling, ConstructError> {
    let g = check_k(k)?;
    let (mut top, mut bottom) = rows(k);
    let m = k / 2;
    for t in 0..m {
        let (a, b) = (2 * k - m + t, m + t);
        std::mem::swap(&mut top[a].0, &mut bottom[b].0);
    }
    verified(zigzag(g, &top, &bottom)?, Rule::DoublePath)
}
