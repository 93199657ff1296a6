//! Odd-order groups: cordial `C_n` by puffing, then `P_n` by deleting an
//! edge.

use crate::error::CordialError;
use crate::group::GroupSpec;
use crate::labeling::{GraphKind, GraphLabeling};

use super::{path_from_base, verified, ConstructError, Constructed, ConstructionTrace, Rule};

/// `0, 1, ..., n-1` around `C_n` over `Z_n`, `n` odd. The edges are
/// `2i + 1` for `i < n - 1` and `n - 1` for the wrap edge; as 2 is a unit
/// mod `n` they cover every residue once.
pub fn natural_cycle(g: &GroupSpec) -> Result<GraphLabeling, ConstructError> {
    let n = g.order();
    if !g.is_cyclic_presentation() || n.is_multiple_of(2) || n < 3 {
        return Err(ConstructError::Precondition(format!(
            "natural cycle needs an odd cyclic group, got {g}"
        )));
    }
    let labels = (0..n as i64)
        .map(|i| g.element(&[i]))
        .collect::<Result<_, _>>()?;
    verified(GraphLabeling::cycle(g.clone(), labels)?, Rule::NaturalCycle)
}

fn check_puff_input(c: &GraphLabeling, k: usize) -> Result<(), ConstructError> {
    if c.kind() != GraphKind::Cycle {
        return Err(CordialError::NotACycle.into());
    }
    if k < 3 || k.is_multiple_of(2) {
        return Err(ConstructError::Precondition(format!(
            "puffing needs an odd k >= 3, got {k}"
        )));
    }
    if c.len() != c.group().order() {
        return Err(ConstructError::Precondition(format!(
            "cycle length {} differs from group order {}",
            c.len(),
            c.group().order()
        )));
    }
    if !c.is_cordial() {
        return Err(ConstructError::NotCordial("cycle to puff"));
    }
    Ok(())
}

/// Subdivides every edge `x -> y` of `C_n` into `k` edges with labels
/// alternating `ℓ(x), ℓ(y)`. The result is a cordial `C_{kn}` over the
/// original group whose edge labels are those of `C_n`, each repeated `k`
/// times in a row.
pub fn subdivide_cycle(c: &GraphLabeling, k: usize) -> Result<GraphLabeling, ConstructError> {
    check_puff_input(c, k)?;
    let labels = c.labels();
    let n = labels.len();
    let mut out = Vec::with_capacity(n * k);
    for j in 0..n {
        let (x, y) = (&labels[j], &labels[(j + 1) % n]);
        for t in 0..k {
            out.push(if t % 2 == 0 { x.clone() } else { y.clone() });
        }
    }
    Ok(GraphLabeling::cycle(c.group().clone(), out)?)
}

/// Lifts a cordial `C_n` over `A` (`n = |A|`) to a cordial `C_{kn}` over
/// `A x Z_k`, `k` odd.
///
/// Along each directed edge `x -> y`, the vertices `q_0 = x, q_1, ...,
/// q_{k-1}` get `q_{2i} = (ℓ(x), i)` and `q_{2i+1} = (ℓ(y), i + (k+1)/2)`.
/// Second coordinates of consecutive edges then run through `Z_k` in order,
/// starting at `(k+1)/2`, and `q_k = y` lands back on `(ℓ(y), 0)`.
pub fn puff_cycle(c: &GraphLabeling, k: usize) -> Result<GraphLabeling, ConstructError> {
    check_puff_input(c, k)?;
    let a = c.group();
    let lifted = a.with_factor(k)?;
    let labels = c.labels();
    let n = labels.len();
    let half = k.div_ceil(2);
    let lift = |base: &crate::group::GroupElement, s: usize| {
        let mut r: Vec<i64> = base.residues().iter().map(|&v| v as i64).collect();
        r.push((s % k) as i64);
        lifted.element(&r)
    };
    let mut out = Vec::with_capacity(n * k);
    for j in 0..n {
        let (x, y) = (&labels[j], &labels[(j + 1) % n]);
        for t in 0..k {
            let i = t / 2;
            out.push(if t % 2 == 0 {
                lift(x, i)?
            } else {
                lift(y, i + half)?
            });
        }
    }
    verified(GraphLabeling::cycle(lifted, out)?, Rule::Puff)
}

/// Cordial `C_n` for odd `n = |g|`: the natural labeling for a single
/// factor, otherwise peel the last factor `Z_k`, recurse, and puff.
pub fn odd_cycle(g: &GroupSpec) -> Result<Constructed, ConstructError> {
    let n = g.order();
    if n.is_multiple_of(2) {
        return Err(ConstructError::Precondition(format!(
            "odd cycle construction needs odd order, {g} has order {n}"
        )));
    }
    if g.is_cyclic_presentation() {
        let labeling = natural_cycle(g)?;
        let trace =
            ConstructionTrace::single(Rule::NaturalCycle, format!("0..{} around C_{n}", n - 1));
        return Ok(Constructed { labeling, trace });
    }
    let (&k, rest) = g.factors().split_last().expect("non-empty factors");
    let inner = GroupSpec::new(rest)?;
    let Constructed {
        labeling,
        mut trace,
    } = odd_cycle(&inner)?;
    trace.push(
        Rule::Puff,
        format!("C_{} over {inner} -> C_{n} over {g}", inner.order()),
    );
    Ok(Constructed {
        labeling: puff_cycle(&labeling, k)?,
        trace,
    })
}

/// Cordial `P_m` over an odd-order group: odd cycle, delete the wrap edge,
/// then truncate and glue.
pub fn odd_path_pipeline(g: &GroupSpec, m: usize) -> Result<Constructed, ConstructError> {
    let n = g.order();
    let Constructed {
        labeling,
        mut trace,
    } = odd_cycle(g)?;
    trace.push(Rule::OpenCycle, format!("delete wrap edge of C_{n}"));
    let base = Constructed {
        labeling: verified(labeling.open_cycle(n - 1)?, Rule::OpenCycle)?,
        trace,
    };
    path_from_base(&base, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::hardcoded_labeling;
    use crate::format::format_labels;

    fn g(s: &str) -> GroupSpec {
        s.parse().unwrap()
    }

    #[test]
    fn natural_z5_edges() {
        let c = natural_cycle(&g("5")).unwrap();
        assert_eq!(
            format_labels(c.group(), &c.induced_edge_labels()),
            "1-3-0-2-4"
        );
    }

    #[test]
    fn puff_lifts_c3_to_reference_c9() {
        let c3 = hardcoded_labeling("c3").unwrap();
        let c9 = puff_cycle(&c3, 3).unwrap();
        assert_eq!(c9, hardcoded_labeling("c9-3x3").unwrap());
        assert!(format_labels(c9.group(), c9.labels()).starts_with("00-12-01-10"));
    }

    #[test]
    fn subdivision_invariants() {
        let c3 = hardcoded_labeling("c3").unwrap();
        for k in [3, 5, 7] {
            let sub = subdivide_cycle(&c3, k).unwrap();
            let counts = sub.check_cordial().vertex_partition.counts;
            assert!(counts.iter().all(|&c| c == k));
            let edges = sub.induced_edge_labels();
            let orig = c3.induced_edge_labels();
            for (i, e) in edges.iter().enumerate() {
                assert_eq!(e, &orig[i / k]);
            }
        }
    }

    #[test]
    fn puff_each_element_once() {
        for (grp, k) in [("3", 3), ("5", 3), ("3", 5), ("3x3", 3)] {
            let c = odd_cycle(&g(grp)).unwrap().labeling;
            let p = puff_cycle(&c, k).unwrap();
            let r = p.check_cordial();
            assert!(
                r.vertex_partition.counts.iter().all(|&x| x == 1),
                "{grp} k={k}"
            );
            assert!(
                r.edge_partition.counts.iter().all(|&x| x == 1),
                "{grp} k={k}"
            );
        }
    }

    #[test]
    fn puff_rejects_bad_input() {
        let c3 = hardcoded_labeling("c3").unwrap();
        assert!(matches!(
            puff_cycle(&c3, 4),
            Err(ConstructError::Precondition(_))
        ));
        assert!(matches!(
            puff_cycle(&c3, 1),
            Err(ConstructError::Precondition(_))
        ));
        let c5 = GraphLabeling::cycle(
            g("3"),
            (0..5).map(|i| g("3").element(&[i]).unwrap()).collect(),
        )
        .unwrap();
        assert!(matches!(
            puff_cycle(&c5, 3),
            Err(ConstructError::Precondition(_))
        ));
        let flat = GraphLabeling::cycle(g("3"), vec![g("3").identity(); 3]).unwrap();
        assert!(matches!(
            puff_cycle(&flat, 3),
            Err(ConstructError::NotCordial(_))
        ));
    }

    #[test]
    fn odd_cycle_examples() {
        assert_eq!(
            odd_cycle(&g("3")).unwrap().labeling,
            hardcoded_labeling("c3").unwrap()
        );
        assert_eq!(
            odd_cycle(&g("3x3")).unwrap().labeling,
            hardcoded_labeling("c9-3x3").unwrap()
        );
        assert!(odd_cycle(&g("2x3")).is_err());
    }

    #[test]
    fn odd_pipeline_examples() {
        for (grp, m) in [("9", 9), ("3x3x3", 27), ("15", 40), ("3x5", 40)] {
            let c = odd_path_pipeline(&g(grp), m).unwrap();
            assert_eq!(c.labeling.len(), m);
            assert!(c.labeling.is_cordial(), "{grp} m={m}");
        }
    }
}
