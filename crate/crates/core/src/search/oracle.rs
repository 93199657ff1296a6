//! Brute-force counting of cordial labelings.
//!
//! Walks all `n^m` label sequences with an odometer and tests each one from
//! scratch. No pruning and no symmetry reduction, so it can serve as the
//! reference the backtracking search is checked against.

use crate::group::GroupSpec;
use crate::labeling::GraphKind;

use super::SearchError;

pub const DEFAULT_ORACLE_BOUND: u64 = 100_000_000;

/// Exact number of cordial labelings of the path or cycle on `m` vertices.
pub fn count_labelings(
    g: &GroupSpec,
    kind: GraphKind,
    m: usize,
    bound: u64,
) -> Result<u64, SearchError> {
    match kind {
        GraphKind::Path if m == 0 => return Err(SearchError::EmptyPath),
        GraphKind::Cycle if m < 3 => return Err(SearchError::ShortCycle(m)),
        _ => {}
    }
    let n = g.order();
    let space = (n as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    if space > bound as u128 {
        return Err(SearchError::OracleBoundExceeded { space, bound });
    }
    let add = g.addition_table();
    let mut labels = vec![0usize; m];
    let mut vcount = vec![0u32; n];
    let mut ecount = vec![0u32; n];
    let mut total = 0u64;
    loop {
        vcount.fill(0);
        ecount.fill(0);
        for &x in &labels {
            vcount[x] += 1;
        }
        for w in labels.windows(2) {
            ecount[add[w[0] * n + w[1]] as usize] += 1;
        }
        if kind == GraphKind::Cycle {
            ecount[add[labels[m - 1] * n + labels[0]] as usize] += 1;
        }
        if spread(&vcount) <= 1 && spread(&ecount) <= 1 {
            total += 1;
        }
        // odometer, last position fastest
        let mut i = m;
        loop {
            if i == 0 {
                return Ok(total);
            }
            i -= 1;
            labels[i] += 1;
            if labels[i] < n {
                break;
            }
            labels[i] = 0;
        }
    }
}

fn spread(counts: &[u32]) -> u32 {
    counts.iter().max().unwrap() - counts.iter().min().unwrap()
}
