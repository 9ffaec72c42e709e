//! Checks of the explicit constructions used to refute families of sets.
//!
//! Each construction names a pair `d ≻ e`, a graph that some realization of
//! `d` induces, and the complete list of realizations of `e`. Verification
//! rebuilds every graph from its description, enumerates the realizations
//! of `e` exhaustively, and compares the two lists up to isomorphism.
//! Mismatches are reported as failed checks, never as errors.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::canon::canonical_code;
use crate::error::{Error, Result};
use crate::expr::describe;
use crate::graph::SmallGraph;
use crate::graph6::to_graph6;
use crate::graphic::{realizations_with, Limits};
use crate::induced::contains_induced;
use crate::partition::{strictly_majorizes, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaId {
    /// `3 2^{3a+2b-3} 1 ≻ 2^{3a+2b-1}`: unions of cycles avoid `aK2 + bK1`.
    CycleUnion,
    /// `(b+2a) 2^{2a} 1^b ≻ (b+2a-1) 2^{2a+1} 1^{b-1}`: a cone over
    /// `aK2 + bK1` against its two subdivided relatives.
    SubdividedCone,
    /// `(2a) 2^{2a} ≻ (2a-1) 3 2^{2a-1}`: a cone over `aK2` against three
    /// near-cone families.
    MatchingCone,
    /// `6 5^4 4 2 ≻ 5^6 2`: a cone over a `P4`-inducing graph against `K6`
    /// with one edge subdivided.
    SubdividedK6,
    /// A cone over `P3 + pK2 + qK1` against near-cone families.
    PathCone,
}

impl LemmaId {
    pub const ALL: [LemmaId; 5] = [
        LemmaId::CycleUnion,
        LemmaId::SubdividedCone,
        LemmaId::MatchingCone,
        LemmaId::SubdividedK6,
        LemmaId::PathCone,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            LemmaId::CycleUnion => "cycle-union",
            LemmaId::SubdividedCone => "subdivided-cone",
            LemmaId::MatchingCone => "matching-cone",
            LemmaId::SubdividedK6 => "subdivided-k6",
            LemmaId::PathCone => "path-cone",
        }
    }

    /// Parameter names and their defaults.
    pub fn parameters(&self) -> &'static [(&'static str, u32)] {
        match self {
            LemmaId::CycleUnion => &[("a", 1), ("b", 1)],
            LemmaId::SubdividedCone => &[("a", 1), ("b", 2)],
            LemmaId::MatchingCone => &[("a", 2)],
            LemmaId::SubdividedK6 => &[],
            LemmaId::PathCone => &[("p", 1), ("q", 0)],
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LemmaId::ALL.into_iter().find(|l| l.as_str() == s).ok_or_else(|| {
            let known: Vec<&str> = LemmaId::ALL.iter().map(LemmaId::as_str).collect();
            Error::parse(format!(
                "unknown construction {s:?}; expected one of {}",
                known.join(", ")
            ))
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaReport {
    pub lemma: LemmaId,
    pub params: BTreeMap<String, u32>,
    pub d: Partition,
    pub e: Partition,
    /// graph6 of every realization of `e`, in canonical order.
    pub e_realizations: Vec<String>,
    pub checks: Vec<LemmaCheck>,
    pub passed: bool,
}

struct Builder {
    checks: Vec<LemmaCheck>,
    limits: Limits,
}

impl Builder {
    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(LemmaCheck {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    fn majorizes(&mut self, d: &Partition, e: &Partition) {
        self.check(
            "d strictly majorizes e",
            strictly_majorizes(d, e),
            format!("{d} vs {e}"),
        );
    }

    /// `g` realizes `d` and induces `target`.
    fn realizes_inducing(&mut self, label: &str, g: &SmallGraph, d: &Partition, target: &SmallGraph) {
        let seq = g.degree_sequence();
        self.check(
            format!("{label} realizes {d}"),
            seq.zeros == 0 && seq.positive == *d,
            format!("{label} has degree sequence {seq}"),
        );
        self.check(
            format!("{label} induces {}", describe(target)),
            contains_induced(g, target),
            to_graph6(g),
        );
    }

    /// The realizations of `seq` are exactly `expected` up to isomorphism.
    fn realizations_are(&mut self, seq: &Partition, expected: &[(&str, SmallGraph)]) -> Result<Vec<SmallGraph>> {
        let found = realizations_with(seq, None, self.limits)?;
        let want: BTreeSet<_> = expected.iter().map(|(_, g)| canonical_code(g)).collect();
        let got: BTreeSet<_> = found.codes.iter().copied().collect();
        let names: Vec<&str> = expected.iter().map(|(n, _)| *n).collect();
        self.check(
            format!("realizations of {seq} are exactly {{{}}}", names.join(", ")),
            want == got && want.len() == expected.len(),
            format!(
                "found {}: [{}]",
                found.len(),
                found.graphs.iter().map(describe).collect::<Vec<_>>().join("; ")
            ),
        );
        Ok(found.graphs)
    }

    fn all_free_of(&mut self, seq: &Partition, graphs: &[SmallGraph], target: &SmallGraph) {
        let bad: Vec<String> = graphs
            .iter()
            .filter(|g| contains_induced(g, target))
            .map(describe)
            .collect();
        self.check(
            format!("every realization of {seq} is {}-free", describe(target)),
            bad.is_empty(),
            if bad.is_empty() {
                format!("{} realizations checked", graphs.len())
            } else {
                format!("induced in: {}", bad.join("; "))
            },
        );
    }
}

fn k(n: usize) -> SmallGraph {
    SmallGraph::complete(n).expect("small")
}

fn e_k(n: usize) -> SmallGraph {
    SmallGraph::empty(n).expect("small")
}

/// `aK2 + bK1`.
fn matching_plus(a: usize, b: usize) -> Result<SmallGraph> {
    k(2).copies(a)?.disjoint_union(&e_k(b))
}

fn seq(blocks: &[(u32, usize)]) -> Result<Partition> {
    let kept: Vec<(u32, usize)> = blocks.iter().copied().filter(|&(v, m)| v > 0 && m > 0).collect();
    Partition::from_blocks(&kept)
}

fn param(lemma: LemmaId, given: &BTreeMap<String, u32>, name: &str) -> u32 {
    given.get(name).copied().unwrap_or_else(|| {
        lemma
            .parameters()
            .iter()
            .find(|(n, _)| *n == name)
            .map(|&(_, v)| v)
            .expect("known parameter")
    })
}

pub fn verify_lemma_constructions(lemma: LemmaId, params: &BTreeMap<String, u32>) -> Result<LemmaReport> {
    for (name, &value) in params {
        if !lemma.parameters().iter().any(|(n, _)| n == name) {
            return Err(Error::domain(format!("{lemma} takes no parameter {name:?}")));
        }
        if value > 4 {
            return Err(Error::domain(format!("parameter {name}={value} exceeds 4")));
        }
    }
    let resolved: BTreeMap<String, u32> = lemma
        .parameters()
        .iter()
        .map(|&(n, _)| (n.to_string(), param(lemma, params, n)))
        .collect();
    let get = |n: &str| resolved[n] as usize;
    let mut b = Builder {
        checks: Vec::new(),
        limits: Limits::wide(),
    };
    let (d, e, e_graphs) = match lemma {
        LemmaId::CycleUnion => cycle_union(&mut b, get("a"), get("b"))?,
        LemmaId::SubdividedCone => subdivided_cone(&mut b, get("a"), get("b"))?,
        LemmaId::MatchingCone => matching_cone(&mut b, get("a"))?,
        LemmaId::SubdividedK6 => subdivided_k6(&mut b)?,
        LemmaId::PathCone => path_cone(&mut b, get("p"), get("q"))?,
    };
    let passed = b.checks.iter().all(|c| c.passed);
    Ok(LemmaReport {
        lemma,
        params: resolved,
        d,
        e,
        e_realizations: e_graphs.iter().map(to_graph6).collect(),
        checks: b.checks,
        passed,
    })
}

type Outcome = (Partition, Partition, Vec<SmallGraph>);

fn cycle_union(b: &mut Builder, a: usize, bb: usize) -> Result<Outcome> {
    if (a == 0 && bb < 3) || (a == 1 && bb < 1) {
        return Err(Error::domain(
            "cycle-union needs b >= 3 when a = 0 and b >= 1 when a = 1",
        ));
    }
    let n = 3 * a + 2 * bb - 1;
    let d = seq(&[(3, 1), (2, n - 2), (1, 1)])?;
    let e = seq(&[(2, n)])?;
    b.majorizes(&d, &e);
    let target = matching_plus(a, bb)?;
    // A path with one chord near its start.
    let mut g = SmallGraph::path(if a == 0 { 2 * bb - 1 } else { n })?;
    if a == 0 {
        g.add_edge(0, 2 * bb - 3);
    } else {
        g.add_edge(0, 2);
    }
    b.realizes_inducing("path with a chord", &g, &d, &target);
    let found = realizations_with(&e, None, b.limits)?;
    let all_cycles = found.graphs.iter().all(|h| h.is_regular_of(2));
    b.check(
        format!("every realization of {e} is a union of cycles"),
        all_cycles,
        format!("{} realizations", found.len()),
    );
    b.all_free_of(&e, &found.graphs, &target);
    Ok((d, e, found.graphs))
}

fn subdivided_cone(b: &mut Builder, a: usize, bb: usize) -> Result<Outcome> {
    if bb == 0 || (a == 0 && bb < 3) {
        return Err(Error::domain("subdivided-cone needs b >= 1, and b >= 3 when a = 0"));
    }
    let top = (bb + 2 * a) as u32;
    let d = seq(&[(top, 1), (2, 2 * a), (1, bb)])?;
    let e = seq(&[(top - 1, 1), (2, 2 * a + 1), (1, bb - 1)])?;
    b.majorizes(&d, &e);
    let target = matching_plus(a, bb)?;
    let cone = target.cone()?;
    b.realizations_are(&d, &[("cone", cone)])?;
    b.realizes_inducing("cone", &cone, &d, &target);
    // Apex is vertex 0; matching edges are (1,2), (3,4), ...; the isolated
    // vertices of the base follow.
    let base = matching_plus(a, bb - 1)?.cone()?;
    let mut expected = Vec::new();
    if bb >= 2 {
        let pendant = 1 + 2 * a;
        expected.push(("pendant edge subdivided", base.subdivide_edge(0, pendant)?));
    }
    if a >= 1 {
        expected.push(("triangle edge subdivided", base.subdivide_edge(1, 2)?));
    }
    let graphs = b.realizations_are(&e, &expected)?;
    b.check(
        format!("{e} has at most two realizations"),
        graphs.len() <= 2,
        format!("{}", graphs.len()),
    );
    b.all_free_of(&e, &graphs, &target);
    Ok((d, e, graphs))
}

fn matching_cone(b: &mut Builder, a: usize) -> Result<Outcome> {
    if a < 2 {
        return Err(Error::domain("matching-cone needs a >= 2"));
    }
    let d = seq(&[(2 * a as u32, 1), (2, 2 * a)])?;
    let e = seq(&[(2 * a as u32 - 1, 1), (3, 1), (2, 2 * a - 1)])?;
    b.majorizes(&d, &e);
    let target = k(2).copies(a)?;
    let cone = target.cone()?;
    b.realizations_are(&d, &[("cone", cone)])?;
    b.realizes_inducing("cone", &cone, &d, &target);
    let p4 = SmallGraph::path(4)?;
    let star = SmallGraph::complete_bipartite(1, 3)?;
    let p3 = SmallGraph::path(3)?;
    // The apex misses one vertex: an inner path vertex, the star center, or
    // the center of one of two paths.
    let mut expected = vec![
        ("R1", p4.disjoint_union(&k(2).copies(a - 2)?)?.add_apex_except(&[1])?),
        ("R2", star.disjoint_union(&k(2).copies(a - 2)?)?.add_apex_except(&[0])?),
    ];
    if a >= 3 {
        let two_paths = p3.copies(2)?.disjoint_union(&k(2).copies(a - 3)?)?;
        expected.push(("R3", two_paths.add_apex_except(&[1])?));
    }
    let graphs = b.realizations_are(&e, &expected)?;
    b.all_free_of(&e, &graphs, &target);
    Ok((d, e, graphs))
}

fn subdivided_k6(b: &mut Builder) -> Result<Outcome> {
    let d = seq(&[(6, 1), (5, 4), (4, 1), (2, 1)])?;
    let e = seq(&[(5, 6), (2, 1)])?;
    b.majorizes(&d, &e);
    let p4 = SmallGraph::path(4)?;
    let inner = seq(&[(4, 4), (3, 1), (1, 1)])?;
    let inner_graphs = realizations_with(&inner, None, b.limits)?.graphs;
    b.check(
        format!("{inner} has a unique realization"),
        inner_graphs.len() == 1,
        format!("{}", inner_graphs.len()),
    );
    if let Some(h) = inner_graphs.first() {
        b.check(
            format!("the realization of {inner} induces P4"),
            contains_induced(h, &p4),
            to_graph6(h),
        );
        b.realizes_inducing("its cone", &h.cone()?, &d, &p4);
    }
    let sub_k6 = k(6).subdivide_edge(0, 1)?;
    let graphs = b.realizations_are(&e, &[("K6 with a subdivided edge", sub_k6)])?;
    b.all_free_of(&e, &graphs, &p4);
    Ok((d, e, graphs))
}

fn path_cone(b: &mut Builder, p: usize, q: usize) -> Result<Outcome> {
    let p3 = SmallGraph::path(3)?;
    let target = p3.disjoint_union(&matching_plus(p, q)?)?;
    let cone = target.cone()?;
    let d = cone.degree_sequence().strip();
    let top = (2 * p + q + 3) as u32;
    b.check(
        "d matches its closed form",
        d == seq(&[(top, 1), (3, 1), (2, 2 * p + 2), (1, q)])?,
        format!("{d}"),
    );
    b.realizes_inducing("cone", &cone, &d, &target);
    if p == 0 && q == 0 {
        let e = seq(&[(2, 5)])?;
        b.majorizes(&d, &e);
        let graphs = b.realizations_are(&e, &[("C5", SmallGraph::cycle(5)?)])?;
        b.all_free_of(&e, &graphs, &cone);
        return Ok((d, e, graphs));
    }
    if q >= 1 {
        let e = seq(&[(top, 1), (2, 2 * p + 4), (1, q - 1)])?;
        b.majorizes(&d, &e);
        let expected = matching_plus(p + 2, q - 1)?.cone()?;
        let graphs = b.realizations_are(&e, &[("cone", expected)])?;
        b.all_free_of(&e, &graphs, &target);
        return Ok((d, e, graphs));
    }
    let e = seq(&[(2 * p as u32 + 2, 1), (4, 1), (2, 2 * p + 2)])?;
    b.majorizes(&d, &e);
    let rest = |n: usize| k(2).copies(n);
    let star4 = SmallGraph::complete_bipartite(1, 4)?;
    // Path 0-1-2 with two pendants (3, 4) at vertex 0.
    let fork = SmallGraph::from_edges(5, &[(0, 1), (1, 2), (0, 3), (0, 4)])?;
    let star3 = SmallGraph::complete_bipartite(1, 3)?;
    let mut expected = vec![
        ("F1", star4.disjoint_union(&rest(p - 1)?)?.add_apex_except(&[0])?),
        ("F2", fork.disjoint_union(&rest(p - 1)?)?.add_apex_except(&[1])?),
    ];
    if p >= 2 {
        // Star on 0..4, path 4-5-6 with center 5.
        let base = star3.disjoint_union(&p3)?.disjoint_union(&rest(p - 2)?)?;
        expected.push(("F3", base.add_apex_except(&[5])?));
    }
    let graphs = b.realizations_are(&e, &expected)?;
    b.all_free_of(&e, &graphs, &target);
    Ok((d, e, graphs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(l: LemmaId, params: &[(&str, u32)]) -> LemmaReport {
        let map = params.iter().map(|&(k, v)| (k.to_string(), v)).collect();
        verify_lemma_constructions(l, &map).unwrap()
    }

    fn assert_passes(r: &LemmaReport) {
        assert!(
            r.passed,
            "{:#?}",
            r.checks.iter().filter(|c| !c.passed).collect::<Vec<_>>()
        );
    }

    #[test]
    fn matching_cone_for_two_is_house_and_k23() {
        let r = run(LemmaId::MatchingCone, &[("a", 2)]);
        assert_passes(&r);
        assert_eq!(r.e.to_string(), "3^2 2^3");
        let house = SmallGraph::path(5).unwrap().complement();
        let k23 = SmallGraph::complete_bipartite(2, 3).unwrap();
        let want: BTreeSet<_> = [canonical_code(&house), canonical_code(&k23)].into();
        let got: BTreeSet<_> = r
            .e_realizations
            .iter()
            .map(|s| canonical_code(&crate::graph6::from_graph6(s).unwrap()))
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn cycle_union_small_case() {
        let r = run(LemmaId::CycleUnion, &[("a", 1), ("b", 1)]);
        assert_passes(&r);
        assert_eq!((r.d.to_string(), r.e.to_string()), ("3 2^2 1".into(), "2^4".into()));
    }

    #[test]
    fn every_construction_with_defaults() {
        for l in LemmaId::ALL {
            assert_passes(&run(l, &[]));
        }
        assert_passes(&run(LemmaId::PathCone, &[("p", 0), ("q", 0)]));
        assert_passes(&run(LemmaId::PathCone, &[("p", 1), ("q", 2)]));
    }

    #[test]
    fn bad_parameters() {
        let m = |v: &[(&str, u32)]| v.iter().map(|&(k, x)| (k.to_string(), x)).collect::<BTreeMap<_, _>>();
        assert!(verify_lemma_constructions(LemmaId::MatchingCone, &m(&[("a", 1)])).is_err());
        assert!(verify_lemma_constructions(LemmaId::MatchingCone, &m(&[("a", 5)])).is_err());
        assert!(verify_lemma_constructions(LemmaId::MatchingCone, &m(&[("z", 2)])).is_err());
        assert!(verify_lemma_constructions(LemmaId::CycleUnion, &m(&[("a", 0), ("b", 2)])).is_err());
        assert!("nope".parse::<LemmaId>().is_err());
        assert_eq!("path-cone".parse::<LemmaId>().unwrap(), LemmaId::PathCone);
    }
}
