//! Finite abelian groups presented as products of cyclic groups.
//!
//! A [`GroupSpec`] keeps the factorization it was given: `2x3` and `6` are
//! isomorphic but distinct presentations, because several constructions
//! (cycle puffing, the two-row path) depend on the chosen coordinates.
//! Elements are residue vectors; the mixed-radix index (last factor varying
//! fastest) gives a dense bijection with `0..order`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{CordialError, ParseError};

/// A finite abelian group `Z_{d_1} x ... x Z_{d_r}` with every `d_i >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct GroupSpec {
    factors: Vec<usize>,
    order: usize,
}

/// An element of a [`GroupSpec`], stored as one residue per cyclic factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement {
    residues: Vec<usize>,
}

impl GroupElement {
    pub fn residues(&self) -> &[usize] {
        &self.residues
    }
}

impl GroupSpec {
    /// Validates the factor list and computes the order.
    pub fn new(factors: &[usize]) -> Result<Self, CordialError> {
        if factors.is_empty() {
            return Err(CordialError::EmptyGroup);
        }
        let mut order: usize = 1;
        for &d in factors {
            if d < 2 {
                return Err(CordialError::TrivialFactor(d as u64));
            }
            order = order.checked_mul(d).ok_or(CordialError::OrderOverflow)?;
        }
        Ok(Self {
            factors: factors.to_vec(),
            order,
        })
    }

    /// The cyclic group `Z_n`.
    pub fn cyclic(n: usize) -> Result<Self, CordialError> {
        Self::new(&[n])
    }

    /// `(Z_2)^rank`.
    pub fn elementary_two(rank: usize) -> Result<Self, CordialError> {
        Self::new(&vec![2; rank])
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn is_cyclic_presentation(&self) -> bool {
        self.factors.len() == 1
    }

    /// True when the factors are pairwise coprime, so the group is cyclic
    /// whatever its presentation.
    pub fn is_cyclic_group(&self) -> bool {
        fn gcd(a: usize, b: usize) -> usize {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        let f = &self.factors;
        (0..f.len()).all(|i| (i + 1..f.len()).all(|j| gcd(f[i], f[j]) == 1))
    }

    /// Image of `i` in `Z_n` under `i -> (i mod d_1, ..., i mod d_r)`; an
    /// isomorphism when [`is_cyclic_group`](Self::is_cyclic_group) holds.
    pub fn crt_image(&self, i: usize) -> GroupElement {
        GroupElement {
            residues: self.factors.iter().map(|&d| i % d).collect(),
        }
    }

    /// True for a product of at least two copies of `Z_2`.
    pub fn is_nontrivial_elementary_two(&self) -> bool {
        self.factors.len() >= 2 && self.factors.iter().all(|&d| d == 2)
    }

    /// True iff some element has order greater than two, i.e. some factor
    /// exceeds 2. `Z_2` itself returns false.
    pub fn has_element_of_order_gt2(&self) -> bool {
        self.factors.iter().any(|&d| d > 2)
    }

    /// `A x Z_k` with the new factor appended last.
    pub fn with_factor(&self, k: usize) -> Result<Self, CordialError> {
        let mut factors = self.factors.clone();
        factors.push(k);
        Self::new(&factors)
    }

    /// Builds an element, reducing each residue modulo its factor.
    pub fn element(&self, residues: &[i64]) -> Result<GroupElement, CordialError> {
        self.check_len(residues.len())?;
        let residues = residues
            .iter()
            .zip(&self.factors)
            .map(|(&r, &d)| r.rem_euclid(d as i64) as usize)
            .collect();
        Ok(GroupElement { residues })
    }

    /// Builds an element from already-reduced residues, rejecting anything
    /// out of range.
    pub fn element_exact(&self, residues: &[usize]) -> Result<GroupElement, CordialError> {
        self.check_len(residues.len())?;
        for (&r, &d) in residues.iter().zip(&self.factors) {
            if r >= d {
                return Err(CordialError::ResidueOutOfRange {
                    residue: r as u64,
                    factor: d as u64,
                });
            }
        }
        Ok(GroupElement {
            residues: residues.to_vec(),
        })
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            residues: vec![0; self.factors.len()],
        }
    }

    fn check_len(&self, got: usize) -> Result<(), CordialError> {
        if got != self.factors.len() {
            return Err(CordialError::DimensionMismatch {
                expected: self.factors.len(),
                got,
            });
        }
        Ok(())
    }

    /// Checks that `a` is an element of this group.
    pub fn check_member(&self, a: &GroupElement) -> Result<(), CordialError> {
        self.check_len(a.residues.len())?;
        for (&r, &d) in a.residues.iter().zip(&self.factors) {
            if r >= d {
                return Err(CordialError::ResidueOutOfRange {
                    residue: r as u64,
                    factor: d as u64,
                });
            }
        }
        Ok(())
    }

    pub fn contains(&self, a: &GroupElement) -> bool {
        self.check_member(a).is_ok()
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement, CordialError> {
        self.check_member(a)?;
        self.check_member(b)?;
        Ok(self.add_unchecked(a, b))
    }

    pub(crate) fn add_unchecked(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let residues = a
            .residues
            .iter()
            .zip(&b.residues)
            .zip(&self.factors)
            .map(|((&x, &y), &d)| (x + y) % d)
            .collect();
        GroupElement { residues }
    }

    pub fn negate(&self, a: &GroupElement) -> Result<GroupElement, CordialError> {
        self.check_member(a)?;
        Ok(self.negate_unchecked(a))
    }

    pub(crate) fn negate_unchecked(&self, a: &GroupElement) -> GroupElement {
        let residues = a
            .residues
            .iter()
            .zip(&self.factors)
            .map(|(&x, &d)| (d - x) % d)
            .collect();
        GroupElement { residues }
    }

    /// `a - b`.
    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement, CordialError> {
        self.check_member(a)?;
        self.check_member(b)?;
        Ok(self.add_unchecked(a, &self.negate_unchecked(b)))
    }

    /// Least positive `t` with `t * a = 0`: the lcm of the component orders.
    pub fn element_order(&self, a: &GroupElement) -> Result<usize, CordialError> {
        self.check_member(a)?;
        Ok(a.residues
            .iter()
            .zip(&self.factors)
            .map(|(&r, &d)| d / gcd(r, d))
            .fold(1, lcm))
    }

    /// All elements in mixed-radix order; position 0 is the identity.
    pub fn enumerate(&self) -> Vec<GroupElement> {
        (0..self.order)
            .map(|i| self.element_at_unchecked(i))
            .collect()
    }

    pub fn index_of(&self, a: &GroupElement) -> Result<usize, CordialError> {
        self.check_member(a)?;
        Ok(self.index_of_unchecked(a))
    }

    pub(crate) fn index_of_unchecked(&self, a: &GroupElement) -> usize {
        a.residues
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&r, &d)| acc * d + r)
    }

    pub fn element_at(&self, index: usize) -> Result<GroupElement, CordialError> {
        if index >= self.order {
            return Err(CordialError::IndexOutOfRange {
                index,
                order: self.order,
            });
        }
        Ok(self.element_at_unchecked(index))
    }

    pub(crate) fn element_at_unchecked(&self, mut index: usize) -> GroupElement {
        let mut residues = vec![0; self.factors.len()];
        for (slot, &d) in residues.iter_mut().zip(&self.factors).rev() {
            *slot = index % d;
            index /= d;
        }
        GroupElement { residues }
    }

    /// Dense addition table over element indices, row-major.
    pub fn addition_table(&self) -> Vec<u32> {
        let n = self.order;
        let elems = self.enumerate();
        let mut table = vec![0u32; n * n];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate().skip(i) {
                let s = self.index_of_unchecked(&self.add_unchecked(a, b)) as u32;
                table[i * n + j] = s;
                table[j * n + i] = s;
            }
        }
        table
    }

    /// Compact element notation (`12` for `(1,2)`) is unambiguous only when
    /// every residue is a single digit.
    pub fn compact_notation_allowed(&self) -> bool {
        self.factors.iter().all(|&d| d <= 10)
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

impl TryFrom<Vec<usize>> for GroupSpec {
    type Error = CordialError;

    fn try_from(factors: Vec<usize>) -> Result<Self, Self::Error> {
        Self::new(&factors)
    }
}

impl From<GroupSpec> for Vec<usize> {
    fn from(g: GroupSpec) -> Self {
        g.factors
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for GroupSpec {
    type Err = ParseError;

    /// Parses `"2x4"`-style specs. Whitespace is rejected.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() {
            return Err(ParseError::new(1, 1, "empty group spec"));
        }
        let mut factors = Vec::new();
        let mut column = 1;
        for part in s.split('x') {
            if part.is_empty() {
                return Err(ParseError::new(1, column, "empty factor in group spec"));
            }
            if let Some((pos, c)) = part.char_indices().find(|(_, c)| !c.is_ascii_digit()) {
                return Err(ParseError::new(
                    1,
                    column + pos,
                    format!("unexpected character {c:?} in group spec"),
                ));
            }
            let d: usize = part
                .parse()
                .map_err(|_| ParseError::new(1, column, "factor does not fit in an integer"))?;
            if d < 2 {
                return Err(ParseError::new(
                    1,
                    column,
                    format!("factor {d} is invalid; factors must be at least 2"),
                ));
            }
            factors.push(d);
            column += part.len() + 1;
        }
        GroupSpec::new(&factors).map_err(|e| ParseError::new(1, 1, e.to_string()))
    }
}
