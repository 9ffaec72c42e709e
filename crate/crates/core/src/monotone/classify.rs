//! Exhaustive classification of small forbidden sets.

use std::collections::HashMap;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::canon::canonical_code;
use crate::catalog::graphs_up_to;
use crate::error::{Error, Result};
use crate::graph6::to_graph6;
use crate::monotone::forbidden::{ForbiddenSet, SetKey};
use crate::monotone::screen::screen_necessary_conditions;
use crate::monotone::search::{CounterexamplePair, SearchEngine};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Every F-free graph is threshold; a genuine certificate.
    Proven,
    /// A counterexample pair exists; `pair.sum()` is the smallest sum with one.
    Refuted(CounterexamplePair),
    /// Passed the search up to this sum without refutation.
    Survived(u32),
}

impl Verdict {
    pub fn tag(&self) -> &'static str {
        match self {
            Verdict::Proven => "PROVEN",
            Verdict::Refuted(_) => "REFUTED",
            Verdict::Survived(_) => "SURVIVED",
        }
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, Verdict::Refuted(_))
    }

    pub fn pair(&self) -> Option<&CounterexamplePair> {
        match self {
            Verdict::Refuted(p) => Some(p),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budget {
    pub max_sum: u32,
    pub order_cap: usize,
}

#[derive(Debug, Clone)]
pub struct CandidateReport {
    pub candidate: ForbiddenSet,
    /// The reduced set when the candidate has a member induced in another.
    pub equivalent_to: Option<ForbiddenSet>,
    pub verdict: Verdict,
    pub necessary_conditions_hold: bool,
    pub budget: Budget,
}

#[derive(Serialize)]
struct ReportJson {
    candidate: String,
    members: Vec<String>,
    equivalent_to: Option<String>,
    verdict: &'static str,
    certificate: Option<CounterexamplePair>,
    refuting_sum: Option<u32>,
    necessary_conditions_hold: bool,
    budget: Budget,
}

impl CandidateReport {
    pub fn to_json(&self) -> serde_json::Value {
        let pair = self.verdict.pair();
        serde_json::to_value(ReportJson {
            candidate: self.candidate.label(),
            members: self.candidate.members().iter().map(to_graph6).collect(),
            equivalent_to: self.equivalent_to.as_ref().map(ForbiddenSet::label),
            verdict: self.verdict.tag(),
            certificate: pair.cloned(),
            refuting_sum: pair.map(CounterexamplePair::sum),
            necessary_conditions_hold: self.necessary_conditions_hold,
            budget: self.budget,
        })
        .expect("plain data serializes")
    }

    pub fn is_refuted(&self) -> bool {
        self.verdict.is_refuted()
    }
}

/// Verdict for one set: the threshold certificate if it applies, otherwise
/// the first counterexample with sum at most `max_sum`.
pub fn evaluate(engine: &SearchEngine, set: &ForbiddenSet, max_sum: u32) -> Result<Verdict> {
    if screen_necessary_conditions(set).threshold_sufficiency {
        return Ok(Verdict::Proven);
    }
    Ok(match engine.search(set, max_sum)? {
        Some(pair) => Verdict::Refuted(pair),
        None => Verdict::Survived(max_sum),
    })
}

/// All sets of `size` distinct unlabeled graphs on at most `order_cap`
/// vertices, sorted by member order, each with a verdict. Sets with a
/// member induced in another share the verdict of their reduced form.
pub fn classify_sets(
    engine: &SearchEngine,
    order_cap: usize,
    size: usize,
    max_sum: u32,
) -> Result<Vec<CandidateReport>> {
    if !(1..=3).contains(&size) {
        return Err(Error::domain(format!("set size must be 1, 2 or 3, got {size}")));
    }
    if order_cap == 0 {
        return Err(Error::domain("order_cap must be positive"));
    }
    if order_cap > 5 {
        return Err(Error::resource(format!("order_cap {order_cap} exceeds 5")));
    }
    engine.prepare(max_sum)?;
    let graphs = graphs_up_to(order_cap)?;
    let candidates: Vec<ForbiddenSet> = graphs
        .iter()
        .copied()
        .combinations(size)
        .map(ForbiddenSet::new)
        .collect();
    let reduced: Vec<ForbiddenSet> = candidates.par_iter().map(ForbiddenSet::reduced).collect();
    let mut unique: Vec<(SetKey, &ForbiddenSet)> = reduced.iter().map(|r| (r.key(), r)).collect();
    unique.sort_by(|a, b| a.0.cmp(&b.0));
    unique.dedup_by(|a, b| a.0 == b.0);
    let verdicts: HashMap<SetKey, Verdict> = unique
        .par_iter()
        .map(|(key, set)| Ok((key.clone(), evaluate(engine, set, max_sum)?)))
        .collect::<Result<_>>()?;
    let budget = Budget { max_sum, order_cap };
    Ok(candidates
        .into_iter()
        .zip(reduced)
        .map(|(candidate, red)| {
            let verdict = reindex(&verdicts[&red.key()], &red, &candidate);
            let necessary_conditions_hold = screen_necessary_conditions(&candidate).necessary_conditions_hold();
            let equivalent_to = (red.len() < candidate.len()).then_some(red);
            CandidateReport {
                candidate,
                equivalent_to,
                verdict,
                necessary_conditions_hold,
                budget,
            }
        })
        .collect())
}

// Witness member indices refer to the set that was searched; point them at
// the same graph in the original candidate.
fn reindex(verdict: &Verdict, from: &ForbiddenSet, to: &ForbiddenSet) -> Verdict {
    match verdict {
        Verdict::Refuted(pair) => {
            let code = canonical_code(&from.members()[pair.witness_member]);
            let idx = to
                .members()
                .iter()
                .position(|g| canonical_code(g) == code)
                .expect("reduced members come from the candidate");
            Verdict::Refuted(CounterexamplePair {
                witness_member: idx,
                ..pair.clone()
            })
        }
        v => v.clone(),
    }
}

/// Evidence on whether complements of unrefuted sets stay unrefuted, for
/// sets where the transfer theorem does not apply because some member has
/// a dominating vertex. Reported only; never asserted.
#[derive(Debug, Clone, Serialize)]
pub struct ComplementEvidence {
    pub candidate: String,
    pub complement: String,
    pub candidate_verdict: &'static str,
    pub complement_verdict: &'static str,
    pub complement_refuting_sum: Option<u32>,
}

pub fn complement_experiment(
    engine: &SearchEngine,
    reports: &[CandidateReport],
    max_sum: u32,
) -> Result<Vec<ComplementEvidence>> {
    reports
        .par_iter()
        .filter(|r| r.equivalent_to.is_none() && !r.is_refuted() && r.candidate.has_dominating_member())
        .map(|r| {
            let co = r.candidate.complement_set().set;
            let v = evaluate(engine, &co, max_sum)?;
            Ok(ComplementEvidence {
                candidate: r.candidate.label(),
                complement: co.label(),
                candidate_verdict: r.verdict.tag(),
                complement_verdict: v.tag(),
                complement_refuting_sum: v.pair().map(CounterexamplePair::sum),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singletons_up_to_three_vertices() {
        let engine = SearchEngine::default();
        let reports = classify_sets(&engine, 3, 1, 12).unwrap();
        assert_eq!(reports.len(), 7);
        let unrefuted: Vec<String> = reports
            .iter()
            .filter(|r| !r.is_refuted())
            .map(|r| r.candidate.label())
            .collect();
        assert_eq!(unrefuted, vec!["{K1}", "{2K1}", "{K2}"]);
    }

    #[test]
    fn reduced_forms_share_verdicts() {
        let engine = SearchEngine::default();
        let reports = classify_sets(&engine, 2, 2, 8).unwrap();
        // {K1, 2K1}, {K1, K2}, {2K1, K2}
        assert_eq!(reports.len(), 3);
        assert_eq!(reports[0].equivalent_to.as_ref().unwrap().label(), "{K1}");
        assert!(reports.iter().all(|r| r.verdict == Verdict::Proven));
    }

    #[test]
    fn argument_checks() {
        let engine = SearchEngine::default();
        assert!(matches!(classify_sets(&engine, 4, 4, 8), Err(Error::Domain(_))));
        assert!(matches!(classify_sets(&engine, 6, 3, 8), Err(Error::Resource(_))));
    }
}
