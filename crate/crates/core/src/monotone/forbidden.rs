use std::fmt;

use crate::canon::{canonical_code, CanonicalCode};
use crate::error::Result;
use crate::expr::{describe, parse_graph_list};
use crate::graph::SmallGraph;
use crate::induced::contains_induced;

/// Order-independent identity of a forbidden set: sorted member codes.
pub type SetKey = Vec<CanonicalCode>;

/// A finite set of forbidden induced subgraphs, deduplicated up to
/// isomorphism. Members keep their first-seen order, which is the order
/// `member_index` values refer to.
#[derive(Clone, PartialEq, Eq)]
pub struct ForbiddenSet {
    members: Vec<SmallGraph>,
    codes: Vec<CanonicalCode>,
    pub name: Option<String>,
}

/// Member-wise complement, with whether the no-dominating-vertex hypothesis
/// of the complement-transfer theorem holds for the original set.
#[derive(Debug, Clone)]
pub struct ComplementSet {
    pub set: ForbiddenSet,
    pub hypothesis_holds: bool,
}

impl ForbiddenSet {
    pub fn new(members: impl IntoIterator<Item = SmallGraph>) -> Self {
        let mut out = ForbiddenSet {
            members: Vec::new(),
            codes: Vec::new(),
            name: None,
        };
        for g in members {
            let code = canonical_code(&g);
            if !out.codes.contains(&code) {
                out.codes.push(code);
                out.members.push(g);
            }
        }
        out
    }

    /// Parses a comma-separated list of graph expressions.
    pub fn parse(spec: &str) -> Result<Self> {
        Ok(ForbiddenSet::new(parse_graph_list(spec)?))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn members(&self) -> &[SmallGraph] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn key(&self) -> SetKey {
        let mut k = self.codes.clone();
        k.sort();
        k
    }

    /// No member is an induced subgraph of another.
    pub fn is_reduced(&self) -> bool {
        self.reduced().len() == self.len()
    }

    /// The members minimal under induced containment. Being free of the
    /// reduced set is the same as being free of the whole set.
    pub fn reduced(&self) -> ForbiddenSet {
        let keep = self.members.iter().enumerate().filter(|&(i, g)| {
            !self
                .members
                .iter()
                .enumerate()
                .any(|(j, h)| j != i && h.order() <= g.order() && contains_induced(g, h))
        });
        ForbiddenSet::new(keep.map(|(_, g)| *g))
    }

    pub fn has_dominating_member(&self) -> bool {
        self.members.iter().any(SmallGraph::has_dominating_vertex)
    }

    pub fn complement_set(&self) -> ComplementSet {
        ComplementSet {
            set: ForbiddenSet::new(self.members.iter().map(SmallGraph::complement)),
            hypothesis_holds: !self.has_dominating_member(),
        }
    }

    /// Display form such as `{2K2, P4, diamond}`.
    pub fn label(&self) -> String {
        if let Some(n) = &self.name {
            return n.clone();
        }
        let names: Vec<String> = self.members.iter().map(describe).collect();
        format!("{{{}}}", names.join(", "))
    }

    /// The same set with members in canonical (order, edges, code) order.
    pub fn sorted(&self) -> ForbiddenSet {
        let mut pairs: Vec<(SmallGraph, CanonicalCode)> =
            self.members.iter().copied().zip(self.codes.iter().copied()).collect();
        pairs.sort_by_key(|(g, c)| (g.order(), g.edge_count(), *c));
        ForbiddenSet {
            members: pairs.iter().map(|p| p.0).collect(),
            codes: pairs.iter().map(|p| p.1).collect(),
            name: self.name.clone(),
        }
    }
}

impl fmt::Display for ForbiddenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl fmt::Debug for ForbiddenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ForbiddenSet({})", self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    fn set(s: &str) -> ForbiddenSet {
        ForbiddenSet::parse(s).unwrap()
    }

    #[test]
    fn dedupes_isomorphic_members() {
        let f = set("P3, K1 v 2K1, C4");
        assert_eq!(f.len(), 2);
        assert_eq!(f.key(), set("C4, P3").key());
    }

    #[test]
    fn complements() {
        let c = set("2*K2, P4, diamond").complement_set();
        assert!(!c.hypothesis_holds);
        assert_eq!(c.set.key(), set("C4, P4, K2 + 2K1").key());
        let c = set("C5").complement_set();
        assert!(c.hypothesis_holds);
        assert!(is_isomorphic(&c.set.members()[0], &build("C5")));
        assert_eq!(set("2K1").complement_set().set.key(), set("K2").key());
    }

    fn build(s: &str) -> SmallGraph {
        crate::expr::build_named(s).unwrap()
    }

    #[test]
    fn reduction() {
        assert!(set("2*K2, P4, diamond").is_reduced());
        let f = set("K1, C4");
        assert!(!f.is_reduced());
        assert_eq!(f.reduced().key(), set("K1").key());
        assert_eq!(set("P3, P4, K3").reduced().key(), set("P3, K3").key());
    }

    #[test]
    fn labels() {
        assert_eq!(set("2*K2, P4, diamond").label(), "{2K2, P4, diamond}");
        assert_eq!(set("C4").with_name("square").label(), "square");
    }
}
