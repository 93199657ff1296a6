//! Property check of the parity argument against cordial paths over
//! `(Z_2)^r`.
//!
//! A cordial `P_{2^r}` would use each element once as a vertex label and
//! each non-identity element once as an edge label. Three facts rule it out:
//! the non-identity elements sum to the identity; along any path the edge
//! labels sum to the two leaf labels (every interior label is counted twice
//! and `2x = 0`); so a path whose edges were exactly the non-identity
//! elements would need equal leaves. The check below measures all three on
//! permutations of the group placed along `P_{2^r}`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::group::GroupSpec;

use super::SearchError;

/// Groups up to this order are checked over every permutation.
pub const EXHAUSTIVE_ORDER_LIMIT: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exp2Report {
    pub rank: usize,
    pub exhaustive: bool,
    pub permutations_checked: u64,
    /// Sum of all non-identity elements is the identity.
    pub nonidentity_sum_is_identity: bool,
    /// Permutations where the edge-label sum differed from the leaf sum.
    pub leaf_sum_mismatches: u64,
    /// Permutations whose edge labels were exactly the non-identity
    /// elements. Each would force equal leaves on distinct labels.
    pub contradictions: u64,
    pub holds: bool,
}

pub fn verify_exp2_argument(
    rank: usize,
    trials: u64,
    seed: u64,
) -> Result<Exp2Report, SearchError> {
    if rank < 2 {
        return Err(SearchError::RankTooSmall(rank));
    }
    let g = GroupSpec::elementary_two(rank).map_err(|_| SearchError::GroupTooLarge(usize::MAX))?;
    let n = g.order();
    if n > super::MAX_SEARCH_ORDER {
        return Err(SearchError::GroupTooLarge(n));
    }
    let add = g.addition_table();
    let sum = |a: usize, b: usize| add[a * n + b] as usize;

    let nonidentity_sum_is_identity = (1..n).fold(0, &sum) == 0;

    let mut stats = Tally::default();
    let mut perm: Vec<usize> = (0..n).collect();
    let exhaustive = n <= EXHAUSTIVE_ORDER_LIMIT;
    if exhaustive {
        loop {
            stats.observe(&perm, n, &sum);
            if !next_permutation(&mut perm) {
                break;
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..trials {
            perm.shuffle(&mut rng);
            stats.observe(&perm, n, &sum);
        }
    }

    Ok(Exp2Report {
        rank,
        exhaustive,
        permutations_checked: stats.checked,
        nonidentity_sum_is_identity,
        leaf_sum_mismatches: stats.mismatches,
        contradictions: stats.contradictions,
        holds: nonidentity_sum_is_identity && stats.mismatches == 0 && stats.contradictions == 0,
    })
}

#[derive(Default)]
struct Tally {
    checked: u64,
    mismatches: u64,
    contradictions: u64,
    seen: Vec<bool>,
}

impl Tally {
    fn observe(&mut self, perm: &[usize], n: usize, sum: &impl Fn(usize, usize) -> usize) {
        self.checked += 1;
        self.seen.clear();
        self.seen.resize(n, false);
        let mut edge_sum = 0;
        let mut distinct_nonidentity = true;
        for w in perm.windows(2) {
            let e = sum(w[0], w[1]);
            edge_sum = sum(edge_sum, e);
            if e == 0 || self.seen[e] {
                distinct_nonidentity = false;
            }
            self.seen[e] = true;
        }
        let leaves = sum(perm[0], perm[perm.len() - 1]);
        if edge_sum != leaves {
            self.mismatches += 1;
        }
        if distinct_nonidentity {
            // edges sum to the identity, hence so do the leaves, hence
            // the leaves coincide
            self.contradictions += 1;
        }
    }
}

/// Lexicographic successor; false once the last permutation is reached.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank2_exhaustive() {
        let r = verify_exp2_argument(2, 0, 0).unwrap();
        assert!(r.exhaustive);
        assert_eq!(r.permutations_checked, 24);
        assert!(r.holds);
    }

    #[test]
    fn rank5_identity_sum() {
        let r = verify_exp2_argument(5, 10, 1).unwrap();
        assert!(r.nonidentity_sum_is_identity);
        assert!(r.holds);
    }

    #[test]
    fn rank1_rejected() {
        assert_eq!(
            verify_exp2_argument(1, 10, 0),
            Err(SearchError::RankTooSmall(1))
        );
    }

    #[test]
    fn permutation_count() {
        let mut v = vec![0, 1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut v) {
            count += 1;
        }
        assert_eq!(count, 24);
    }
}
