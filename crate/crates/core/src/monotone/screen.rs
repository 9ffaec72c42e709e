//! Structural screening of a forbidden set, without any poset search.
//!
//! Three necessary conditions for dominance monotonicity are checked, along
//! with one sufficient condition: if each of 2K2, C4 and P4 induces some
//! member, every F-free graph is a threshold graph, so forcibly F-free
//! sequences are threshold sequences and nothing else can majorize them.

use serde::Serialize;

use crate::expr::{build_named, describe};
use crate::induced::contains_induced;
use crate::monotone::forbidden::ForbiddenSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComplementStatus {
    /// No member has a dominating vertex, so monotonicity transfers to the
    /// complement set.
    Applies,
    NotApplicableDominatingVertex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScreeningReport {
    pub has_delta_le1_min_edge_graph: bool,
    pub complement_set_status: ComplementStatus,
    pub has_dominating_or_near_regular: bool,
    pub threshold_sufficiency: bool,
    pub verdicts: Vec<String>,
}

impl ScreeningReport {
    /// Both necessary conditions hold.
    pub fn necessary_conditions_hold(&self) -> bool {
        self.has_delta_le1_min_edge_graph && self.has_dominating_or_near_regular
    }
}

pub fn screen_necessary_conditions(set: &ForbiddenSet) -> ScreeningReport {
    let members = set.members();
    let mut verdicts = Vec::new();

    let min_edges = members.iter().map(|g| g.edge_count()).min().unwrap_or(0);
    let sparse = members
        .iter()
        .find(|g| g.edge_count() == min_edges && g.max_degree() <= 1);
    let delta_ok = sparse.is_some();
    verdicts.push(match sparse {
        Some(g) => format!("min-edge member {} has max degree <= 1", describe(g)),
        None => format!(
            "every member with {min_edges} edges has max degree >= 2: the pair (its degree sequence, 1^{}) refutes the set",
            2 * min_edges
        ),
    });

    let dominating = members.iter().find(|g| g.has_dominating_vertex());
    let status = if dominating.is_some() {
        ComplementStatus::NotApplicableDominatingVertex
    } else {
        ComplementStatus::Applies
    };
    verdicts.push(match dominating {
        Some(g) => format!(
            "{} has a dominating vertex; monotonicity need not transfer to complements",
            describe(g)
        ),
        None => "no member has a dominating vertex; monotonicity transfers to the complement set".into(),
    });

    let near_regular = members
        .iter()
        .find(|g| g.order() >= 2 && g.is_regular_of(g.order() - 2));
    let dom_or_reg = dominating.or(near_regular);
    verdicts.push(match dom_or_reg {
        Some(g) if g.has_dominating_vertex() => format!("{} has a dominating vertex", describe(g)),
        Some(g) => format!("{} is regular of degree order-2", describe(g)),
        None => "no member has a dominating vertex or is regular of degree order-2".into(),
    });

    let threshold_obstructions = ["2*K2", "C4", "P4"].map(|s| build_named(s).expect("fixed name"));
    let sufficiency = !members.is_empty()
        && threshold_obstructions
            .iter()
            .all(|h| members.iter().any(|f| contains_induced(h, f)));
    verdicts.push(if sufficiency {
        "each of 2K2, C4, P4 induces a member: F-free graphs are threshold, so the set is dominance monotone".into()
    } else {
        let missing: Vec<String> = threshold_obstructions
            .iter()
            .filter(|h| !members.iter().any(|f| contains_induced(h, f)))
            .map(describe)
            .collect();
        format!("no member is induced in {}", missing.join(", "))
    });

    ScreeningReport {
        has_delta_le1_min_edge_graph: delta_ok,
        complement_set_status: status,
        has_dominating_or_near_regular: dom_or_reg.is_some(),
        threshold_sufficiency: sufficiency,
        verdicts,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn screen(s: &str) -> ScreeningReport {
        screen_necessary_conditions(&ForbiddenSet::parse(s).unwrap())
    }

    #[test]
    fn named_triple_passes_necessary_conditions() {
        let r = screen("2*K2, P4, diamond");
        assert!(r.has_delta_le1_min_edge_graph);
        assert!(r.has_dominating_or_near_regular);
        assert!(!r.threshold_sufficiency);
        assert_eq!(r.complement_set_status, ComplementStatus::NotApplicableDominatingVertex);
    }

    #[test]
    fn triangle_fails_sparsity() {
        let r = screen("K3");
        assert!(!r.has_delta_le1_min_edge_graph);
        assert!(!r.necessary_conditions_hold());
    }

    #[test]
    fn single_vertex_passes_everything() {
        let r = screen("K1");
        assert!(r.has_delta_le1_min_edge_graph);
        assert!(r.has_dominating_or_near_regular);
        assert!(r.threshold_sufficiency);
    }

    #[test]
    fn near_regular_and_complement_status() {
        let r = screen("2K1");
        assert!(r.has_dominating_or_near_regular);
        assert_eq!(r.complement_set_status, ComplementStatus::Applies);
        let r = screen("C4, 2*K2");
        assert!(r.has_dominating_or_near_regular);
        assert!(!r.threshold_sufficiency);
        assert!(screen("2*K2, P3").threshold_sufficiency);
        assert!(!screen("C5").has_dominating_or_near_regular);
    }
}
