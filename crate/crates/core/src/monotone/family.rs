//! The two infinite families of dominance monotone sets: all graphs of a
//! given order, and all graphs with a given number of edges (and no
//! isolated vertices).
//!
//! Containment is induced throughout, and under it the edge family is not
//! monotone from t = 3 on: a cycle `C_{t+1}` has no induced subgraph with
//! exactly t edges. Reports state this as a failed check, not an error.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::catalog::graphs_of_order;
use crate::error::{Error, Result};
use crate::graphic::{realizations_with, Limits};
use crate::monotone::forbidden::ForbiddenSet;
use crate::monotone::search::{CounterexamplePair, SearchEngine};
use crate::partition::partitions_of;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyVariant {
    /// Every graph on exactly `t` vertices.
    Order,
    /// Every graph with exactly `t` edges and no isolated vertex.
    Edges,
}

impl FromStr for FamilyVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "order" => Ok(FamilyVariant::Order),
            "edges" => Ok(FamilyVariant::Edges),
            _ => Err(Error::parse(format!(
                "family variant must be order or edges, got {s:?}"
            ))),
        }
    }
}

impl fmt::Display for FamilyVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyVariant::Order => "order",
            FamilyVariant::Edges => "edges",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    pub t: usize,
    pub variant: FamilyVariant,
    pub max_sum: u32,
    pub members: usize,
    pub sequences_checked: usize,
    /// Sequences where forcibly-free disagrees with the length/sum rule.
    pub shortcut_mismatches: Vec<String>,
    pub counterexample: Option<CounterexamplePair>,
    pub passed: bool,
}

/// Materializes the family's forbidden set.
pub fn family_set(t: usize, variant: FamilyVariant) -> Result<ForbiddenSet> {
    if t == 0 {
        return Err(Error::domain("t must be positive"));
    }
    if t > 4 {
        return Err(Error::resource(format!(
            "family size grows too fast beyond t = 4, got {t}"
        )));
    }
    let members = match variant {
        FamilyVariant::Order => graphs_of_order(t)?,
        FamilyVariant::Edges => {
            let mut out = Vec::new();
            for d in partitions_of(2 * t as u32) {
                if crate::graphic::is_graphic(&d) {
                    out.extend(realizations_with(&d, None, Limits::wide())?.graphs);
                }
            }
            out
        }
    };
    Ok(ForbiddenSet::new(members).with_name(format!(
        "all graphs with {t} {}",
        match variant {
            FamilyVariant::Order => "vertices",
            FamilyVariant::Edges => "edges",
        }
    )))
}

/// Confirms that no counterexample exists up to `max_sum` and that the
/// forcibly-free sequences are exactly those with fewer than `t` terms
/// (order variant) or sum below `2t` (edges variant).
pub fn verify_infinite_family(
    engine: &SearchEngine,
    t: usize,
    variant: FamilyVariant,
    max_sum: u32,
) -> Result<FamilyReport> {
    let set = family_set(t, variant)?;
    let counterexample = engine.search(&set, max_sum)?;
    let mut mismatches = Vec::new();
    let mut checked = 0;
    for total in (2..=max_sum).step_by(2) {
        let layer = engine.layer(total)?;
        let flags = engine.forcibly_free_flags(&set, total)?;
        for (d, free) in layer.order.nodes.iter().zip(flags) {
            checked += 1;
            let expected = match variant {
                FamilyVariant::Order => d.len() < t,
                FamilyVariant::Edges => (d.sum() as usize) < 2 * t,
            };
            if free != expected {
                mismatches.push(format!("{d}: forcibly free = {free}"));
            }
        }
    }
    let passed = counterexample.is_none() && mismatches.is_empty();
    Ok(FamilyReport {
        t,
        variant,
        max_sum,
        members: set.len(),
        sequences_checked: checked,
        shortcut_mismatches: mismatches,
        counterexample,
        passed,
    })
}

/// Member counts by order, for reporting.
pub fn member_orders(set: &ForbiddenSet) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    for g in set.members() {
        *out.entry(g.order()).or_insert(0) += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        assert_eq!(family_set(3, FamilyVariant::Order).unwrap().len(), 4);
        let edges: Vec<usize> = (1..=4)
            .map(|t| family_set(t, FamilyVariant::Edges).unwrap().len())
            .collect();
        assert_eq!(edges, vec![1, 2, 5, 11]);
        assert!(family_set(0, FamilyVariant::Order).is_err());
        assert!(family_set(5, FamilyVariant::Edges).is_err());
    }

    #[test]
    fn order_three_up_to_twelve() {
        let engine = SearchEngine::default();
        let r = verify_infinite_family(&engine, 3, FamilyVariant::Order, 12).unwrap();
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn one_edge_forbids_everything() {
        let engine = SearchEngine::default();
        let r = verify_infinite_family(&engine, 1, FamilyVariant::Edges, 8).unwrap();
        assert!(r.passed);
        for total in (2..=8).step_by(2) {
            let set = family_set(1, FamilyVariant::Edges).unwrap();
            assert!(engine.forcibly_free_flags(&set, total).unwrap().iter().all(|f| !f));
        }
    }
}
