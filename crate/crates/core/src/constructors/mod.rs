//! Deterministic constructions of cordial labelings.
//!
//! Every constructor re-checks its output with
//! [`check_cordial`](crate::labeling::check_cordial) before returning it, so
//! a bug surfaces as [`ConstructError::Unverified`] rather than as a wrong
//! labeling.

mod double;
mod odd;
mod table;
mod weak;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::CordialError;
use crate::group::{GroupElement, GroupSpec};
use crate::labeling::{GraphKind, GraphLabeling};
use crate::search::{search_cycle, search_path, SearchError, SearchOptions, Verdict};

pub use double::{double_path, double_path_auxiliary};
pub use odd::{natural_cycle, odd_cycle, odd_path_pipeline, puff_cycle, subdivide_cycle};
pub use table::{hardcoded_labeling, table, table_names, TableEntry};
pub use weak::{m_weak_path, WeakPath};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error(transparent)]
    Labeling(#[from] CordialError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("input labeling is not cordial: {0}")]
    NotCordial(&'static str),
    #[error("{rule} produced a labeling that failed verification")]
    Unverified { rule: Rule },
    #[error("no extension of the path keeps it cordial")]
    NoExtension,
    #[error(
        "no cordial labeling of P_{length} over {group} exists (exhaustive search, {nodes} nodes)"
    )]
    NotFound {
        group: String,
        length: usize,
        nodes: u64,
    },
    #[error("search for P_{length} over {group} hit the node budget after {nodes} nodes")]
    Inconclusive {
        group: String,
        length: usize,
        nodes: u64,
    },
    #[error("no table entry named {0:?}")]
    UnknownName(String),
}

/// Which construction step produced a labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    Table,
    NaturalCycle,
    Puff,
    OpenCycle,
    Truncate,
    Extend,
    Glue,
    DoublePath,
    Crt,
    Search,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Rule::Table => "table",
            Rule::NaturalCycle => "natural-cycle",
            Rule::Puff => "puff",
            Rule::OpenCycle => "open-cycle",
            Rule::Truncate => "truncate",
            Rule::Extend => "extend",
            Rule::Glue => "glue",
            Rule::DoublePath => "double-path",
            Rule::Crt => "crt",
            Rule::Search => "search",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub rule: Rule,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionTrace {
    pub steps: Vec<TraceStep>,
    /// Nodes spent in backtracking search along the way.
    pub search_nodes: u64,
}

impl ConstructionTrace {
    pub fn push(&mut self, rule: Rule, detail: impl Into<String>) {
        self.steps.push(TraceStep {
            rule,
            detail: detail.into(),
        });
    }

    fn single(rule: Rule, detail: impl Into<String>) -> Self {
        let mut t = Self::default();
        t.push(rule, detail);
        t
    }
}

impl fmt::Display for ConstructionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            writeln!(f, "{:>3}. {}: {}", i + 1, s.rule, s.detail)?;
        }
        Ok(())
    }
}

/// A verified labeling and the steps that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constructed {
    pub labeling: GraphLabeling,
    pub trace: ConstructionTrace,
}

pub(crate) fn verified(l: GraphLabeling, rule: Rule) -> Result<GraphLabeling, ConstructError> {
    if l.is_cordial() {
        Ok(l)
    } else {
        Err(ConstructError::Unverified { rule })
    }
}

fn require_cordial_path(l: &GraphLabeling, what: &'static str) -> Result<(), ConstructError> {
    if !l.is_path() {
        return Err(CordialError::NotAPath.into());
    }
    if !l.is_cordial() {
        return Err(ConstructError::NotCordial(what));
    }
    Ok(())
}

/// Labels that can be appended at the right end of a cordial path while
/// keeping it cordial, in element-index order.
pub fn extension_candidates(l: &GraphLabeling) -> Result<Vec<GroupElement>, ConstructError> {
    require_cordial_path(l, "path to extend")?;
    let g = l.group();
    let mut labels = l.labels().to_vec();
    let mut out = Vec::new();
    for x in g.enumerate() {
        labels.push(x);
        let p = GraphLabeling::path(g.clone(), labels.clone())?;
        let x = labels.pop().expect("just pushed");
        if p.is_cordial() {
            out.push(x);
        }
    }
    Ok(out)
}

/// Appends one vertex to a cordial `P_{nk+f}` with `f <= n/2`, choosing the
/// least valid label by element index.
pub fn extend_by_one(l: &GraphLabeling) -> Result<GraphLabeling, ConstructError> {
    require_cordial_path(l, "path to extend")?;
    let n = l.group().order();
    let f = l.len() % n;
    if 2 * f > n {
        return Err(ConstructError::Precondition(format!(
            "length {} leaves remainder {f} > n/2 for n = {n}",
            l.len()
        )));
    }
    let x = extension_candidates(l)?
        .into_iter()
        .next()
        .ok_or(ConstructError::NoExtension)?;
    let mut labels = l.labels().to_vec();
    labels.push(x);
    verified(
        GraphLabeling::path(l.group().clone(), labels)?,
        Rule::Extend,
    )
}

/// The unique edge label occurring `m - 1` times in a cordial `P_{mn}`.
pub fn deficient_edge_label(l: &GraphLabeling) -> Result<GroupElement, ConstructError> {
    let g = l.group();
    let n = g.order();
    if !l.is_path() || !l.len().is_multiple_of(n) {
        return Err(ConstructError::Precondition(format!(
            "deficient label needs a path of length divisible by {n}"
        )));
    }
    let m = l.len() / n;
    let report = l.check_cordial();
    let counts = &report.edge_partition.counts;
    let low: Vec<usize> = (0..n).filter(|&i| counts[i] + 1 == m).collect();
    let rest_ok = (0..n).all(|i| counts[i] == m || counts[i] + 1 == m);
    match (low.as_slice(), rest_ok) {
        ([i], true) => Ok(g.element_at(*i)?),
        _ => Err(ConstructError::Precondition(
            "no unique deficient edge label".into(),
        )),
    }
}

/// Joins a cordial `P_k` to a cordial `P_{mn}` through one new edge.
///
/// `lmn` is shifted so its left end is the identity, `lk` so its left end is
/// the deficient edge label `a` of the shifted `lmn`; the result is
/// `reverse(lk) ++ lmn`, whose new edge is labeled `a`.
pub fn glue(lk: &GraphLabeling, lmn: &GraphLabeling) -> Result<GraphLabeling, ConstructError> {
    require_cordial_path(lk, "short path")?;
    require_cordial_path(lmn, "long path")?;
    let g = lmn.group();
    if lk.group() != g {
        return Err(CordialError::GroupMismatch(lk.group().to_string(), g.to_string()).into());
    }
    let n = g.order();
    if !lmn.len().is_multiple_of(n) {
        return Err(ConstructError::Precondition(format!(
            "long path has length {}, not a multiple of {n}",
            lmn.len()
        )));
    }
    let m = lmn.len() / n;
    let vcounts = lmn.check_cordial().vertex_partition.counts;
    if vcounts.iter().any(|&c| c != m) {
        return Err(ConstructError::Precondition(format!(
            "long path does not use every element exactly {m} times"
        )));
    }

    let lmn = lmn.shift_unchecked(&g.negate_unchecked(&lmn.labels()[0]));
    let a = deficient_edge_label(&lmn)?;
    let lk = lk.shift_unchecked(&g.sub(&a, &lk.labels()[0])?);

    let mut labels = lk.reverse().into_labels();
    labels.extend(lmn.into_labels());
    verified(GraphLabeling::path(g.clone(), labels)?, Rule::Glue)
}

/// A cordial `P_n`, `n = |g|`, or the reason none was produced.
///
/// Tries, in order: the reference table (paths, then cycles with one edge
/// deleted), the odd-order cycle pipeline, transport from `Z_n` when the
/// factors are pairwise coprime, and backtracking search.
pub fn base_path(g: &GroupSpec, opts: &SearchOptions) -> Result<Constructed, ConstructError> {
    let n = g.order();
    if let Some(entry) = table::base_entry(g) {
        let mut trace = ConstructionTrace::single(Rule::Table, format!("{} ({})", entry.name, g));
        let labeling = match entry.labeling.kind() {
            GraphKind::Path => entry.labeling.clone(),
            GraphKind::Cycle => {
                trace.push(Rule::OpenCycle, format!("delete wrap edge of C_{n}"));
                verified(entry.labeling.open_cycle(n - 1)?, Rule::OpenCycle)?
            }
        };
        return Ok(Constructed { labeling, trace });
    }
    if n % 2 == 1 {
        let cycle = odd_cycle(g)?;
        let mut trace = cycle.trace;
        trace.push(Rule::OpenCycle, format!("delete wrap edge of C_{n}"));
        let labeling = verified(cycle.labeling.open_cycle(n - 1)?, Rule::OpenCycle)?;
        return Ok(Constructed { labeling, trace });
    }
    if g.rank() > 1 && g.is_cyclic_group() {
        let cyclic = GroupSpec::cyclic(n)?;
        let Constructed {
            labeling,
            mut trace,
        } = base_path(&cyclic, opts)?;
        trace.push(Rule::Crt, format!("{cyclic} -> {g}"));
        let labels = labeling
            .indices()
            .into_iter()
            .map(|i| g.crt_image(i))
            .collect();
        let labeling = verified(GraphLabeling::path(g.clone(), labels)?, Rule::Crt)?;
        return Ok(Constructed { labeling, trace });
    }
    search_base(g, n, GraphKind::Path, opts)
}

fn search_base(
    g: &GroupSpec,
    m: usize,
    kind: GraphKind,
    opts: &SearchOptions,
) -> Result<Constructed, ConstructError> {
    let out = match kind {
        GraphKind::Path => search_path(g, m, opts)?,
        GraphKind::Cycle => search_cycle(g, m, opts)?,
    };
    match out.verdict {
        Verdict::Found => {
            let labeling = verified(out.witness.expect("found implies witness"), Rule::Search)?;
            let mut trace = ConstructionTrace::single(
                Rule::Search,
                format!(
                    "{kind} of length {m} over {g}, {} nodes",
                    out.nodes_explored
                ),
            );
            trace.search_nodes = out.nodes_explored;
            Ok(Constructed { labeling, trace })
        }
        Verdict::Exhausted => Err(ConstructError::NotFound {
            group: g.to_string(),
            length: m,
            nodes: out.nodes_explored,
        }),
        Verdict::BudgetExceeded => Err(ConstructError::Inconclusive {
            group: g.to_string(),
            length: m,
            nodes: out.nodes_explored,
        }),
    }
}

/// Cordial `P_m` from a cordial `P_n` base: truncate the base to
/// `P_{m mod n}` and glue on `⌊m/n⌋` copies of the base.
pub fn path_from_base(base: &Constructed, m: usize) -> Result<Constructed, ConstructError> {
    let b = &base.labeling;
    let n = b.group().order();
    if !b.is_path() || b.len() != n {
        return Err(ConstructError::Precondition(format!(
            "base must be a path on {n} vertices"
        )));
    }
    if m == 0 {
        return Err(CordialError::EmptyPath.into());
    }
    let mut trace = base.trace.clone();
    let (h, k) = (m / n, m % n);
    if h == 0 {
        trace.push(Rule::Truncate, format!("P_{n} -> P_{k}"));
        let labeling = verified(b.truncate(k)?, Rule::Truncate)?;
        return Ok(Constructed { labeling, trace });
    }
    let (mut cur, copies) = if k == 0 {
        (b.clone(), h - 1)
    } else {
        trace.push(Rule::Truncate, format!("P_{n} -> P_{k}"));
        (verified(b.truncate(k)?, Rule::Truncate)?, h)
    };
    for _ in 0..copies {
        cur = glue(&cur, b)?;
    }
    if copies > 0 {
        trace.push(
            Rule::Glue,
            format!(
                "{copies} cop{} of P_{n} -> P_{m}",
                if copies == 1 { "y" } else { "ies" }
            ),
        );
    }
    Ok(Constructed {
        labeling: cur,
        trace,
    })
}

pub fn path_for_length(
    g: &GroupSpec,
    m: usize,
    opts: &SearchOptions,
) -> Result<Constructed, ConstructError> {
    let base = base_path(g, opts)?;
    path_from_base(&base, m)
}

/// Result of a construct request.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructOutcome {
    Built(Constructed),
    /// No cordial labeling exists; the reason names the argument.
    Impossible {
        reason: String,
    },
    /// Search ran out of budget before deciding.
    Inconclusive {
        nodes: u64,
    },
}

/// Builds a cordial `P_m` over `g` by whichever route applies.
pub fn construct_path(
    g: &GroupSpec,
    m: usize,
    opts: &SearchOptions,
) -> Result<ConstructOutcome, ConstructError> {
    if m == 0 {
        return Err(CordialError::EmptyPath.into());
    }
    let n = g.order();
    if g.is_nontrivial_elementary_two() && (m == n || m == n + 1) {
        return Ok(ConstructOutcome::Impossible {
            reason: "no cordial P_n or P_(n+1) over an exponent-2 group; \
                 the edge labels of a path sum to the sum of its two leaves"
                .to_string(),
        });
    }
    if g.factors() == [2, 2, 2] {
        return Ok(match m_weak_path(m)? {
            WeakPath::Built(c) => ConstructOutcome::Built(c),
            WeakPath::Impossible => ConstructOutcome::Impossible {
                reason: format!("P_{m} over 2x2x2 is not cordial"),
            },
        });
    }
    if let [2, k] = *g.factors() {
        if k % 2 == 0 && m == 2 * n {
            let labeling = double_path(k)?;
            let trace =
                ConstructionTrace::single(Rule::DoublePath, format!("two-row path, k = {k}"));
            return Ok(ConstructOutcome::Built(Constructed { labeling, trace }));
        }
    }
    match base_path(g, opts) {
        Ok(base) => return Ok(ConstructOutcome::Built(path_from_base(&base, m)?)),
        Err(ConstructError::NotFound { .. } | ConstructError::Inconclusive { .. }) => {}
        Err(e) => return Err(e),
    }
    // No cordial P_n: search this length directly.
    outcome_of(search_base(g, m, GraphKind::Path, opts))
}

/// Builds a cordial `C_m` over `g`: the odd-order construction when
/// `m = |g|` is odd, search otherwise.
pub fn construct_cycle(
    g: &GroupSpec,
    m: usize,
    opts: &SearchOptions,
) -> Result<ConstructOutcome, ConstructError> {
    if m < 3 {
        return Err(CordialError::ShortCycle(m).into());
    }
    if m == g.order() && m % 2 == 1 {
        return Ok(ConstructOutcome::Built(odd_cycle(g)?));
    }
    outcome_of(search_base(g, m, GraphKind::Cycle, opts))
}

fn outcome_of(r: Result<Constructed, ConstructError>) -> Result<ConstructOutcome, ConstructError> {
    match r {
        Ok(c) => Ok(ConstructOutcome::Built(c)),
        Err(ConstructError::NotFound { group, length, nodes }) => Ok(ConstructOutcome::Impossible {
            reason: format!("exhaustive search over {group} found no cordial labeling of length {length} ({nodes} nodes)"),
        }),
        Err(ConstructError::Inconclusive { nodes, .. }) => Ok(ConstructOutcome::Inconclusive { nodes }),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::{format_labels, parse_labels};

    fn g(s: &str) -> GroupSpec {
        s.parse().unwrap()
    }

    fn path(group: &str, labels: &str) -> GraphLabeling {
        parse_labels(&g(group), GraphKind::Path, labels).unwrap()
    }

    #[test]
    fn extend_m_p6() {
        // remainder 6 > 8/2, so extension is not guaranteed
        let p6 = hardcoded_labeling("m-p6").unwrap();
        assert!(matches!(
            extend_by_one(&p6),
            Err(ConstructError::Precondition(_))
        ));
        let cands = extension_candidates(&p6).unwrap();
        let want = g("2x2x2").element(&[0, 1, 1]).unwrap();
        assert!(cands.contains(&want));
        let p7 = hardcoded_labeling("m-p7").unwrap();
        assert_eq!(&p7.labels()[..6], p6.labels());
    }

    #[test]
    fn extend_full_path_has_unique_choice() {
        let a = hardcoded_labeling("small-a").unwrap();
        assert_eq!(extension_candidates(&a).unwrap().len(), 1);
        let c = hardcoded_labeling("small-e").unwrap();
        assert_eq!(extension_candidates(&c).unwrap().len(), 1);
    }

    #[test]
    fn extend_single_vertex() {
        let p1 = path("3", "0");
        let p2 = extend_by_one(&p1).unwrap();
        assert!(p2.is_cordial());
        assert_eq!(format_labels(p2.group(), p2.labels()), "0-1");
    }

    #[test]
    fn extend_rejects_bad_input() {
        assert!(matches!(
            extend_by_one(&path("2x2", "00-01-10-11")),
            Err(ConstructError::NotCordial(_))
        ));
        // Z_5, length 3 leaves f = 3 > 5/2
        assert!(matches!(
            extend_by_one(&path("5", "0-1-2")),
            Err(ConstructError::Precondition(_))
        ));
    }

    #[test]
    fn glue_m_p6_to_m_p16() {
        let p6 = hardcoded_labeling("m-p6").unwrap();
        let p16 = hardcoded_labeling("m-p16").unwrap();
        let p22 = glue(&p6, &p16).unwrap();
        assert_eq!(p22.len(), 22);
        assert!(p22.is_cordial());

        // each part count grows by exactly m = 2
        let before = p6.check_cordial();
        let after = p22.check_cordial();
        let plus = |v: &[usize]| v.iter().map(|x| x + 2).collect::<Vec<_>>();
        assert_eq!(
            after.vertex_partition.partition,
            plus(&before.vertex_partition.partition)
        );
        assert_eq!(
            after.edge_partition.partition,
            plus(&before.edge_partition.partition)
        );
    }

    #[test]
    fn glue_z3_paths() {
        let c3 = hardcoded_labeling("c3").unwrap();
        let p3 = c3.open_cycle(2).unwrap();
        let p6 = glue(&p3, &p3).unwrap();
        assert!(p6.is_cordial());
        assert_eq!(p6.len(), 6);
    }

    #[test]
    fn glue_preconditions() {
        let p3 = path("3", "0-1-2");
        assert!(matches!(
            glue(&p3, &path("3", "0-1")),
            Err(ConstructError::Precondition(_))
        ));
        let other = path("5", "0-1-2-3-4");
        assert!(glue(&p3, &other).is_err());
        assert!(glue(
            &path("2x2", "00-01-10-11"),
            &hardcoded_labeling("m-p16").unwrap()
        )
        .is_err());
    }

    #[test]
    fn deficient_label_of_reference_p16() {
        let p16 = hardcoded_labeling("p16-2x4").unwrap();
        let a = deficient_edge_label(&p16).unwrap();
        assert_eq!(a.residues(), &[0, 3]);
    }

    #[test]
    fn base_path_examples() {
        let opts = SearchOptions::default();
        let a = base_path(&g("2x4"), &opts).unwrap();
        assert_eq!(
            format_labels(a.labeling.group(), a.labeling.labels()),
            "00-12-10-01-02-03-11-13"
        );
        let b = base_path(&g("3x3"), &opts).unwrap();
        assert_eq!(
            b.labeling.labels(),
            hardcoded_labeling("c9-3x3").unwrap().labels()
        );
        assert!(matches!(
            base_path(&g("2x2"), &opts),
            Err(ConstructError::NotFound { length: 4, .. })
        ));
        assert!(!base_path(&g("6"), &opts).unwrap().trace.steps.is_empty());
        let c = base_path(&g("2x11"), &opts).unwrap();
        assert_eq!(c.trace.steps.last().unwrap().rule, Rule::Crt);
        assert!(c.labeling.is_cordial());
    }

    #[test]
    fn path_for_length_examples() {
        let opts = SearchOptions::default();
        let p7 = path_for_length(&g("3"), 7, &opts).unwrap();
        assert_eq!(p7.labeling.len(), 7);
        assert!(p7.labeling.is_cordial());

        let base = base_path(&g("2x4"), &opts).unwrap();
        assert_eq!(
            path_for_length(&g("2x4"), 8, &opts).unwrap().labeling,
            base.labeling
        );

        let p25 = path_for_length(&g("2x6"), 25, &opts).unwrap();
        assert_eq!(p25.labeling.len(), 25);
        assert!(p25.labeling.is_cordial());
    }

    #[test]
    fn construct_dispatch() {
        let opts = SearchOptions::default();
        match construct_path(&g("2x2x2"), 8, &opts).unwrap() {
            ConstructOutcome::Impossible { .. } => {}
            other => panic!("expected impossible, got {other:?}"),
        }
        match construct_path(&g("2x4"), 16, &opts).unwrap() {
            ConstructOutcome::Built(c) => {
                assert_eq!(c.labeling, hardcoded_labeling("p16-2x4").unwrap());
            }
            other => panic!("{other:?}"),
        }
        match construct_path(&g("2x2"), 6, &opts).unwrap() {
            ConstructOutcome::Built(c) => assert!(c.labeling.is_cordial()),
            other => panic!("{other:?}"),
        }
        match construct_path(&g("2x2"), 5, &opts).unwrap() {
            ConstructOutcome::Impossible { .. } => {}
            other => panic!("{other:?}"),
        }
        match construct_cycle(&g("3x5"), 15, &opts).unwrap() {
            ConstructOutcome::Built(c) => assert!(c.labeling.is_cordial()),
            other => panic!("{other:?}"),
        }
    }
}
