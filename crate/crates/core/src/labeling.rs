//! Vertex labelings of paths and cycles, their induced edge labels, and the
//! cordiality verdict.
//!
//! A partition is *almost rectangular* here in the strict sense: over all
//! `n` group elements (zeros included) the label counts differ pairwise by
//! at most one. [`is_almost_rectangular_loose`] keeps the weaker
//! `λ_i ∈ {λ_1, λ_1 - 1, 0}` reading around for experiments; it never feeds
//! a verdict.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::CordialError;
use crate::group::{GroupElement, GroupSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    Path,
    Cycle,
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphKind::Path => "path",
            GraphKind::Cycle => "cycle",
        })
    }
}

/// A path or cycle with one group label per vertex, in traversal order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphLabeling {
    group: GroupSpec,
    kind: GraphKind,
    labels: Vec<GroupElement>,
}

impl GraphLabeling {
    pub fn new(
        group: GroupSpec,
        kind: GraphKind,
        labels: Vec<GroupElement>,
    ) -> Result<Self, CordialError> {
        match kind {
            GraphKind::Path if labels.is_empty() => return Err(CordialError::EmptyPath),
            GraphKind::Cycle if labels.len() < 3 => {
                return Err(CordialError::ShortCycle(labels.len()))
            }
            _ => {}
        }
        for a in &labels {
            group.check_member(a)?;
        }
        Ok(Self {
            group,
            kind,
            labels,
        })
    }

    pub fn path(group: GroupSpec, labels: Vec<GroupElement>) -> Result<Self, CordialError> {
        Self::new(group, GraphKind::Path, labels)
    }

    pub fn cycle(group: GroupSpec, labels: Vec<GroupElement>) -> Result<Self, CordialError> {
        Self::new(group, GraphKind::Cycle, labels)
    }

    /// Builds a labeling from dense element indices.
    pub fn from_indices(
        group: GroupSpec,
        kind: GraphKind,
        indices: &[usize],
    ) -> Result<Self, CordialError> {
        let labels = indices
            .iter()
            .map(|&i| group.element_at(i))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(group, kind, labels)
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn labels(&self) -> &[GroupElement] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn is_path(&self) -> bool {
        self.kind == GraphKind::Path
    }

    pub fn into_labels(self) -> Vec<GroupElement> {
        self.labels
    }

    pub fn indices(&self) -> Vec<usize> {
        self.labels
            .iter()
            .map(|a| self.group.index_of_unchecked(a))
            .collect()
    }

    /// Sums of adjacent labels; cycles include the wrap-around edge last.
    pub fn induced_edge_labels(&self) -> Vec<GroupElement> {
        let g = &self.group;
        let mut edges: Vec<GroupElement> = self
            .labels
            .windows(2)
            .map(|w| g.add_unchecked(&w[0], &w[1]))
            .collect();
        if self.kind == GraphKind::Cycle {
            let last = &self.labels[self.labels.len() - 1];
            edges.push(g.add_unchecked(last, &self.labels[0]));
        }
        edges
    }

    pub fn check_cordial(&self) -> CordialityReport {
        check_cordial(self)
    }

    pub fn is_cordial(&self) -> bool {
        self.check_cordial().cordial
    }

    /// Adds `a` to every vertex label.
    pub fn shift(&self, a: &GroupElement) -> Result<Self, CordialError> {
        self.group.check_member(a)?;
        Ok(self.shift_unchecked(a))
    }

    pub(crate) fn shift_unchecked(&self, a: &GroupElement) -> Self {
        let labels = self
            .labels
            .iter()
            .map(|x| self.group.add_unchecked(x, a))
            .collect();
        Self {
            group: self.group.clone(),
            kind: self.kind,
            labels,
        }
    }

    pub fn reverse(&self) -> Self {
        let mut labels = self.labels.clone();
        labels.reverse();
        Self {
            group: self.group.clone(),
            kind: self.kind,
            labels,
        }
    }

    /// Keeps the first `t` vertices of a path.
    pub fn truncate(&self, t: usize) -> Result<Self, CordialError> {
        if self.kind != GraphKind::Path {
            return Err(CordialError::NotAPath);
        }
        if t == 0 || t > self.labels.len() {
            return Err(CordialError::TruncateOutOfRange {
                t,
                len: self.labels.len(),
            });
        }
        Ok(Self {
            group: self.group.clone(),
            kind: GraphKind::Path,
            labels: self.labels[..t].to_vec(),
        })
    }

    /// Deletes edge `edge` of a cycle (the edge leaving vertex `edge`) and
    /// returns the resulting path, which starts at the vertex after it.
    /// Deleting the wrap edge (`len - 1`) keeps the label order.
    pub fn open_cycle(&self, edge: usize) -> Result<Self, CordialError> {
        if self.kind != GraphKind::Cycle {
            return Err(CordialError::NotACycle);
        }
        let m = self.labels.len();
        if edge >= m {
            return Err(CordialError::IndexOutOfRange {
                index: edge,
                order: m,
            });
        }
        let start = (edge + 1) % m;
        let labels = (0..m)
            .map(|i| self.labels[(start + i) % m].clone())
            .collect();
        Ok(Self {
            group: self.group.clone(),
            kind: GraphKind::Path,
            labels,
        })
    }

    /// Number of edges: `len - 1` for paths, `len` for cycles.
    pub fn edge_count(&self) -> usize {
        match self.kind {
            GraphKind::Path => self.labels.len() - 1,
            GraphKind::Cycle => self.labels.len(),
        }
    }
}

/// Label multiplicities over every element of the group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountPartition {
    /// `counts[i]` is the multiplicity of the element with index `i`.
    pub counts: Vec<usize>,
    /// All `n` counts, zeros included, sorted decreasingly.
    pub partition: Vec<usize>,
}

impl CountPartition {
    pub fn from_counts(counts: Vec<usize>) -> Self {
        let mut partition = counts.clone();
        partition.sort_unstable_by(|a, b| b.cmp(a));
        Self { counts, partition }
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn count_of(&self, g: &GroupSpec, a: &GroupElement) -> Result<usize, CordialError> {
        Ok(self.counts[g.index_of(a)?])
    }
}

pub fn count_partition(
    elems: &[GroupElement],
    g: &GroupSpec,
) -> Result<CountPartition, CordialError> {
    let mut counts = vec![0; g.order()];
    for a in elems {
        counts[g.index_of(a)?] += 1;
    }
    Ok(CountPartition::from_counts(counts))
}

/// Strict test: max part minus min part (zeros included) is at most 1.
pub fn is_almost_rectangular(p: &CountPartition) -> bool {
    match (p.partition.first(), p.partition.last()) {
        (Some(&max), Some(&min)) => max - min <= 1,
        _ => true,
    }
}

/// Literal `λ_i ∈ {λ_1, λ_1 - 1, 0}` test. Accepts `(2,2,0,0)`; not used
/// for verdicts.
pub fn is_almost_rectangular_loose(p: &CountPartition) -> bool {
    let Some(&top) = p.partition.first() else {
        return true;
    };
    p.partition
        .iter()
        .all(|&x| x == top || x + 1 == top || x == 0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CordialityReport {
    pub vertex_partition: CountPartition,
    pub edge_partition: CountPartition,
    pub vertex_ok: bool,
    pub edge_ok: bool,
    pub cordial: bool,
}

pub fn check_cordial(l: &GraphLabeling) -> CordialityReport {
    let g = l.group();
    let mut vcounts = vec![0; g.order()];
    for a in l.labels() {
        vcounts[g.index_of_unchecked(a)] += 1;
    }
    let mut ecounts = vec![0; g.order()];
    for e in l.induced_edge_labels() {
        ecounts[g.index_of_unchecked(&e)] += 1;
    }
    let vertex_partition = CountPartition::from_counts(vcounts);
    let edge_partition = CountPartition::from_counts(ecounts);
    let vertex_ok = is_almost_rectangular(&vertex_partition);
    let edge_ok = is_almost_rectangular(&edge_partition);
    CordialityReport {
        vertex_partition,
        edge_partition,
        vertex_ok,
        edge_ok,
        cordial: vertex_ok && edge_ok,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lab(group: &str, kind: GraphKind, labels: &str) -> GraphLabeling {
        crate::format::parse_labels(&group.parse().unwrap(), kind, labels).unwrap()
    }

    fn render(g: &GroupSpec, elems: &[GroupElement]) -> String {
        crate::format::format_labels(g, elems)
    }

    #[test]
    fn edge_labels_of_m_p6() {
        let l = lab("2x2x2", GraphKind::Path, "100-000-001-010-111-101");
        assert_eq!(
            render(l.group(), &l.induced_edge_labels()),
            "100-001-011-101-010"
        );
    }

    #[test]
    fn edge_labels_of_c3() {
        let l = lab("3", GraphKind::Cycle, "0-1-2");
        assert_eq!(render(l.group(), &l.induced_edge_labels()), "1-0-2");
    }

    #[test]
    fn single_vertex_has_no_edges() {
        let l = lab("3", GraphKind::Path, "1");
        assert!(l.induced_edge_labels().is_empty());
        assert!(l.is_cordial());
    }

    #[test]
    fn count_partition_examples() {
        let l = lab("2x2x2", GraphKind::Path, "100-000-001-010-111-101");
        let p = count_partition(l.labels(), l.group()).unwrap();
        assert_eq!(p.partition, vec![1, 1, 1, 1, 1, 1, 0, 0]);

        let z3: GroupSpec = "3".parse().unwrap();
        assert_eq!(count_partition(&[], &z3).unwrap().partition, vec![0, 0, 0]);

        let z2: GroupSpec = "2".parse().unwrap();
        let elems = vec![
            z2.element(&[0]).unwrap(),
            z2.element(&[0]).unwrap(),
            z2.element(&[1]).unwrap(),
        ];
        assert_eq!(count_partition(&elems, &z2).unwrap().partition, vec![2, 1]);
    }

    #[test]
    fn almost_rectangular_examples() {
        let p = |v: Vec<usize>| CountPartition::from_counts(v);
        assert!(is_almost_rectangular(&p(vec![1, 1, 1, 0])));
        assert!(!is_almost_rectangular(&p(vec![3, 1])));
        assert!(!is_almost_rectangular(&p(vec![2, 2, 0, 0])));
        assert!(is_almost_rectangular_loose(&p(vec![2, 2, 0, 0])));
        assert!(!is_almost_rectangular_loose(&p(vec![3, 1])));
    }

    #[test]
    fn check_cordial_examples() {
        assert!(lab("3", GraphKind::Cycle, "0-1-2").is_cordial());
        assert!(lab("2x4", GraphKind::Path, "00-12-10-01-02-03-11-13").is_cordial());
        let r = lab("2x2", GraphKind::Path, "00-01-10-11").check_cordial();
        assert!(r.vertex_ok);
        assert!(!r.edge_ok);
        assert!(!r.cordial);
        assert_eq!(r.edge_partition.partition, vec![2, 1, 0, 0]);
    }

    #[test]
    fn loose_reading_would_certify_p4() {
        // a,a,b,b over Z2xZ2: vertex (2,2,0,0), edges (1,1,1,0)
        let l = lab("2x2", GraphKind::Path, "00-00-01-01");
        let r = l.check_cordial();
        assert!(is_almost_rectangular_loose(&r.vertex_partition));
        assert!(!r.cordial);
    }

    #[test]
    fn shift_examples() {
        let c3 = lab("3", GraphKind::Cycle, "0-1-2");
        let one = c3.group().element(&[1]).unwrap();
        let s = c3.shift(&one).unwrap();
        assert_eq!(render(s.group(), s.labels()), "1-2-0");
        assert!(s.is_cordial());
        assert_eq!(c3.shift(&c3.group().identity()).unwrap(), c3);

        let p6 = lab("2x2x2", GraphKind::Path, "100-000-001-010-111-101");
        let s = p6.shift(&p6.group().element(&[1, 1, 1]).unwrap()).unwrap();
        assert_eq!(render(s.group(), s.labels()), "011-111-110-101-000-010");
        assert_eq!(s.is_cordial(), p6.is_cordial());
    }

    #[test]
    fn shift_rejects_foreign_element() {
        let c3 = lab("3", GraphKind::Cycle, "0-1-2");
        let foreign = GroupSpec::new(&[2, 2]).unwrap().identity();
        assert!(c3.shift(&foreign).is_err());
    }

    #[test]
    fn reverse_examples() {
        let p = lab("3", GraphKind::Path, "0-1-2");
        let r = p.reverse();
        assert_eq!(render(r.group(), r.labels()), "2-1-0");
        let mut e1 = p.induced_edge_labels();
        let mut e2 = r.induced_edge_labels();
        e1.sort();
        e2.sort();
        assert_eq!(e1, e2);
        assert_eq!(r.reverse(), p);

        let a = lab("2x4", GraphKind::Path, "00-12-10-01-02-03-11-13");
        assert!(a.reverse().is_cordial());
    }

    #[test]
    fn truncate_examples() {
        let a = lab("2x4", GraphKind::Path, "00-12-10-01-02-03-11-13");
        assert_eq!(a.truncate(8).unwrap(), a);
        assert!(a.truncate(5).unwrap().is_cordial());
        assert!(matches!(
            a.truncate(0),
            Err(CordialError::TruncateOutOfRange { .. })
        ));
        assert!(a.truncate(9).is_err());
        let c3 = lab("3", GraphKind::Cycle, "0-1-2");
        assert_eq!(c3.truncate(2), Err(CordialError::NotAPath));
    }

    #[test]
    fn construction_validates_shape() {
        let z3: GroupSpec = "3".parse().unwrap();
        assert_eq!(
            GraphLabeling::path(z3.clone(), vec![]),
            Err(CordialError::EmptyPath)
        );
        assert_eq!(
            GraphLabeling::cycle(z3.clone(), vec![z3.identity(), z3.identity()]),
            Err(CordialError::ShortCycle(2))
        );
    }

    #[test]
    fn open_cycle_rotates() {
        let c9 = lab("3x3", GraphKind::Cycle, "00-12-01-10-22-11-20-02-21");
        let p = c9.open_cycle(8).unwrap();
        assert_eq!(p.labels(), c9.labels());
        assert!(p.is_cordial());
        let p = c9.open_cycle(0).unwrap();
        assert_eq!(p.labels()[0], c9.labels()[1]);
        assert!(p.is_cordial());
    }
}
