//! Graphicality, threshold sequences, and exhaustive realization
//! enumeration.
//!
//! Realizations are generated row by row over vertices sorted by decreasing
//! degree. When vertex `i` picks its later neighbors, the candidates are
//! grouped into classes of vertices that are indistinguishable so far (same
//! target degree, same adjacency to the processed prefix); only the number
//! taken from each class matters, and the first members are used. Every
//! branch is checked with Erdős–Gallai on the residual sequence, so the
//! search never enters a dead end. Labeled outputs are then deduplicated by
//! canonical code.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::canon::{canonical_labeling, CanonicalCode};
use crate::error::{Error, Result};
use crate::graph::{SmallGraph, MAX_VERTICES};
use crate::graph6::to_graph6;
use crate::induced::first_induced_member;
use crate::partition::{up_neighbors, Partition};

/// Erdős–Gallai on a nonincreasing list that may contain zeros.
pub fn is_graphic_terms(terms: &[u32]) -> bool {
    let n = terms.len();
    let total: u64 = terms.iter().map(|&t| t as u64).sum();
    if !total.is_multiple_of(2) {
        return false;
    }
    if terms.iter().any(|&t| t as usize >= n.max(1) && t > 0) {
        return false;
    }
    let mut prefix = 0u64;
    for k in 1..=n {
        prefix += terms[k - 1] as u64;
        let kk = k as u64;
        let tail: u64 = terms[k..].iter().map(|&t| (t as u64).min(kk)).sum();
        if prefix > kk * (kk - 1) + tail {
            return false;
        }
    }
    true
}

/// True iff `d` is the degree sequence of a simple graph.
pub fn is_graphic(d: &Partition) -> bool {
    is_graphic_terms(d.terms())
}

/// A graphic sequence that no other graphic sequence strictly majorizes.
/// Graphic partitions are downward closed, so it suffices that every
/// single-box up-move leaves the graphic partitions.
pub fn is_threshold(d: &Partition) -> Result<bool> {
    require_graphic(d)?;
    Ok(up_neighbors(d).iter().all(|q| !is_graphic(q)))
}

pub(crate) fn require_graphic(d: &Partition) -> Result<()> {
    if is_graphic(d) {
        Ok(())
    } else {
        Err(Error::domain(format!("{d} is not graphic")))
    }
}

/// Size and work caps for realization enumeration. Hitting either cap is
/// reported as [`Error::Resource`], never as a silently short answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_vertices: usize,
    /// Search-tree nodes visited before giving up.
    pub max_steps: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_vertices: 12,
            max_steps: 50_000_000,
        }
    }
}

impl Limits {
    /// Caps used by poset-wide searches, which need sequences as long as
    /// their sum.
    pub fn wide() -> Self {
        Limits {
            max_vertices: MAX_VERTICES,
            max_steps: 200_000_000,
        }
    }
}

/// All unlabeled realizations of a sequence, canonical forms sorted by
/// canonical code.
#[derive(Debug, Clone)]
pub struct RealizationSet {
    pub sequence: Partition,
    pub graphs: Vec<SmallGraph>,
    pub codes: Vec<CanonicalCode>,
    /// False only when a caller-supplied count limit cut enumeration short.
    pub complete: bool,
}

#[derive(Serialize)]
struct RealizationSetJson<'a> {
    sequence: &'a Partition,
    count: usize,
    complete: bool,
    graphs: Vec<String>,
}

impl RealizationSet {
    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn graph6_lines(&self) -> Vec<String> {
        self.graphs.iter().map(to_graph6).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(RealizationSetJson {
            sequence: &self.sequence,
            count: self.len(),
            complete: self.complete,
            graphs: self.graph6_lines(),
        })
        .expect("plain data serializes")
    }
}

struct Generator<'a, F> {
    degrees: &'a [u32],
    residual: [u32; MAX_VERTICES],
    graph: SmallGraph,
    steps: u64,
    limits: Limits,
    visit: F,
}

impl<F: FnMut(&SmallGraph) -> ControlFlow<()>> Generator<'_, F> {
    fn run(&mut self, i: usize) -> Result<ControlFlow<()>> {
        self.steps += 1;
        if self.steps > self.limits.max_steps {
            return Err(Error::resource(format!(
                "realization search exceeded {} steps",
                self.limits.max_steps
            )));
        }
        let n = self.degrees.len();
        if i == n {
            return Ok((self.visit)(&self.graph));
        }
        let need = self.residual[i] as usize;
        if need == 0 {
            return self.run(i + 1);
        }
        let mut classes: Vec<((u32, u32), Vec<usize>)> = Vec::new();
        for j in i + 1..n {
            if self.residual[j] == 0 {
                continue;
            }
            let key = (self.degrees[j], self.graph.row(j));
            match classes.iter_mut().find(|(k, _)| *k == key) {
                Some((_, members)) => members.push(j),
                None => classes.push((key, vec![j])),
            }
        }
        let available: usize = classes.iter().map(|(_, m)| m.len()).sum();
        if available < need {
            return Ok(ControlFlow::Continue(()));
        }
        let mut counts = vec![0usize; classes.len()];
        self.choose(i, &classes, 0, need, &mut counts)
    }

    fn choose(
        &mut self,
        i: usize,
        classes: &[((u32, u32), Vec<usize>)],
        k: usize,
        left: usize,
        counts: &mut [usize],
    ) -> Result<ControlFlow<()>> {
        if left == 0 {
            let chosen: Vec<usize> = classes
                .iter()
                .zip(counts.iter())
                .flat_map(|((_, m), &c)| m[..c].iter().copied())
                .collect();
            for &j in &chosen {
                self.graph.add_edge(i, j);
                self.residual[j] -= 1;
            }
            let saved = self.residual[i];
            self.residual[i] = 0;
            let mut rest: Vec<u32> = self.residual[i + 1..self.degrees.len()].to_vec();
            rest.sort_unstable_by(|a, b| b.cmp(a));
            let flow = if is_graphic_terms(&rest) {
                self.run(i + 1)
            } else {
                Ok(ControlFlow::Continue(()))
            };
            self.residual[i] = saved;
            for &j in &chosen {
                self.graph.remove_edge(i, j);
                self.residual[j] += 1;
            }
            return flow;
        }
        if k == classes.len() {
            return Ok(ControlFlow::Continue(()));
        }
        let remaining_after: usize = classes[k + 1..].iter().map(|(_, m)| m.len()).sum();
        let size = classes[k].1.len();
        let lo = left.saturating_sub(remaining_after);
        let hi = size.min(left);
        // Larger picks from earlier classes first; the order only affects
        // which labeled representative is produced first.
        for c in (lo..=hi).rev() {
            counts[k] = c;
            if let ControlFlow::Break(()) = self.choose(i, classes, k + 1, left - c, counts)? {
                counts[k] = 0;
                return Ok(ControlFlow::Break(()));
            }
        }
        counts[k] = 0;
        Ok(ControlFlow::Continue(()))
    }
}

/// Visits labeled realizations of `d` covering every isomorphism class at
/// least once. Vertex `v` of each visited graph has degree `d.terms()[v]`.
/// Returns `Break` if the visitor stopped the walk.
pub fn for_each_labeled_realization<F>(d: &Partition, limits: Limits, visit: F) -> Result<ControlFlow<()>>
where
    F: FnMut(&SmallGraph) -> ControlFlow<()>,
{
    require_graphic(d)?;
    let n = d.len();
    if n > limits.max_vertices {
        return Err(Error::resource(format!(
            "{d} has {n} terms, above the {}-vertex enumeration cap",
            limits.max_vertices
        )));
    }
    let mut residual = [0u32; MAX_VERTICES];
    residual[..n].copy_from_slice(d.terms());
    let mut gen = Generator {
        degrees: d.terms(),
        residual,
        graph: SmallGraph::empty(n)?,
        steps: 0,
        limits,
        visit,
    };
    gen.run(0)
}

/// All unlabeled realizations of `d` with the default limits.
pub fn realizations(d: &Partition, limit: Option<usize>) -> Result<RealizationSet> {
    realizations_with(d, limit, Limits::default())
}

pub fn realizations_with(d: &Partition, limit: Option<usize>, limits: Limits) -> Result<RealizationSet> {
    let mut found: BTreeMap<CanonicalCode, SmallGraph> = BTreeMap::new();
    let mut truncated = false;
    let _ = for_each_labeled_realization(d, limits, |g| {
        let order = canonical_labeling(g);
        let code = CanonicalCode::of_order(g, &order);
        if !found.contains_key(&code) {
            if limit.is_some_and(|l| found.len() >= l) {
                truncated = true;
                return ControlFlow::Break(());
            }
            found.insert(code, g.relabel(&order));
        }
        ControlFlow::Continue(())
    })?;
    let (codes, graphs) = found.into_iter().unzip();
    Ok(RealizationSet {
        sequence: d.clone(),
        graphs,
        codes,
        complete: !truncated,
    })
}

/// A realization of `d` inducing some member, with that member's index.
/// Stops at the first labeled witness.
pub fn potential_witness(d: &Partition, members: &[SmallGraph], limits: Limits) -> Result<Option<(SmallGraph, usize)>> {
    let mut witness = None;
    let _ = for_each_labeled_realization(d, limits, |g| match first_induced_member(g, members) {
        Some(idx) => {
            witness = Some((*g, idx));
            ControlFlow::Break(())
        }
        None => ControlFlow::Continue(()),
    })?;
    Ok(witness)
}

/// Some realization of `d` induces a member of `members`.
pub fn potentially_f(d: &Partition, members: &[SmallGraph]) -> Result<bool> {
    Ok(potential_witness(d, members, Limits::default())?.is_some())
}

/// Every realization of `d` is free of all members.
pub fn forcibly_f_free(d: &Partition, members: &[SmallGraph]) -> Result<bool> {
    potentially_f(d, members).map(|p| !p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::expr::build_named;
    use crate::partition::{down_neighbors, parse_partition, partitions_of};

    fn p(s: &str) -> Partition {
        parse_partition(s).unwrap()
    }

    fn g(s: &str) -> SmallGraph {
        build_named(s).unwrap()
    }

    #[test]
    fn graphic_examples() {
        assert!(is_graphic(&p("22222")));
        assert!(!is_graphic(&p("31")));
        assert!(!is_graphic(&p("22")));
        assert!(!is_graphic(&p("3")));
        assert!(is_graphic(&p("11")));
        assert!(is_graphic(&p("333311")));
        assert!(!is_graphic(&p("4411")));
        assert!(is_graphic_terms(&[0, 0]));
        assert!(is_graphic_terms(&[]));
    }

    #[test]
    fn threshold_examples() {
        assert!(is_threshold(&p("43221")).unwrap());
        assert!(!is_threshold(&p("2222")).unwrap());
        assert!(is_threshold(&p("11")).unwrap());
        assert!(matches!(is_threshold(&p("31")), Err(Error::Domain(_))));
    }

    #[test]
    fn unique_realizations() {
        let r = realizations(&p("2^5"), None).unwrap();
        assert_eq!(r.len(), 1);
        assert!(is_isomorphic(&r.graphs[0], &g("C5")));
        let r = realizations(&p("5^6 2"), None).unwrap();
        assert_eq!(r.len(), 1);
        let sub_k6 = SmallGraph::complete(6).unwrap().subdivide_edge(0, 1).unwrap();
        assert!(is_isomorphic(&r.graphs[0], &sub_k6));
        let r = realizations(&p("222"), None).unwrap();
        assert_eq!(r.len(), 1);
        assert!(is_isomorphic(&r.graphs[0], &g("K3")));
    }

    #[test]
    fn two_realizations_of_32221() {
        let r = realizations(&p("32221"), None).unwrap();
        assert_eq!(r.len(), 2);
        for h in &r.graphs {
            assert_eq!(h.degree_sequence().strip(), p("32221"));
            assert_eq!(h.isolated_count(), 0);
        }
    }

    #[test]
    fn limit_truncates() {
        let r = realizations(&p("32221"), Some(1)).unwrap();
        assert_eq!(r.len(), 1);
        assert!(!r.complete);
        assert!(realizations(&p("32221"), Some(2)).unwrap().complete);
    }

    #[test]
    fn caps_are_errors() {
        assert!(matches!(realizations(&p("1^14"), None), Err(Error::Resource(_))));
        assert!(realizations_with(&p("1^14"), None, Limits::wide()).unwrap().len() == 1);
        let tight = Limits {
            max_vertices: 12,
            max_steps: 3,
        };
        assert!(matches!(
            realizations_with(&p("3^4 2^2"), None, tight),
            Err(Error::Resource(_))
        ));
        assert!(matches!(realizations(&p("31"), None), Err(Error::Domain(_))));
    }

    #[test]
    fn forcibly_examples() {
        let set = [g("2K2"), g("C4")];
        assert!(forcibly_f_free(&p("22222"), &set).unwrap());
        assert!(!forcibly_f_free(&p("32221"), &[g("C4")]).unwrap());
        assert!(forcibly_f_free(&p("11"), &[g("K3")]).unwrap());
        assert!(matches!(forcibly_f_free(&p("4"), &set), Err(Error::Domain(_))));
    }

    #[test]
    fn downward_closure_up_to_16() {
        for total in (2..=16).step_by(2) {
            for d in partitions_of(total).into_iter().filter(is_graphic) {
                for q in down_neighbors(&d) {
                    assert!(is_graphic(&q), "{d} -> {q}");
                }
            }
        }
    }

    #[test]
    fn threshold_sequences_have_unique_realizations() {
        for total in (2..=16).step_by(2) {
            for d in partitions_of(total).into_iter().filter(is_graphic) {
                if is_threshold(&d).unwrap() {
                    let r = realizations_with(&d, None, Limits::wide()).unwrap();
                    assert_eq!(r.len(), 1, "{d}");
                }
            }
        }
    }
}
