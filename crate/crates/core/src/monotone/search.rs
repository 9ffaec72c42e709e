//! Counterexample pairs and the poset-wide search for them.
//!
//! A pair `(d, e)` with `d ≻ e`, `e` forcibly F-free and `d` not, shows
//! that F is not dominance monotone. The search walks sums `2, 4, …` and,
//! within each dominance order, tests every comparable pair through the
//! reachability sets of the cover DAG.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use parking_lot::{Mutex, RwLock};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::catalog;
use crate::error::{Error, Result};
use crate::graph::SmallGraph;
use crate::graph6::{from_graph6, to_graph6};
use crate::graphic::{potential_witness, realizations_with, require_graphic, Limits};
use crate::induced::first_induced_member;
use crate::monotone::forbidden::{ForbiddenSet, SetKey};
use crate::order::{build_dominance_order_capped, DominanceOrder, DEFAULT_SUM_CAP};
use crate::partition::{strictly_majorizes, Partition};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterexamplePair {
    pub d: Partition,
    pub e: Partition,
    /// A realization of `d` inducing `members[witness_member]`.
    pub witness_graph: SmallGraph,
    pub witness_member: usize,
}

#[derive(Serialize, Deserialize)]
struct PairJson {
    d: Partition,
    e: Partition,
    witness_graph6: String,
    member_index: usize,
}

impl Serialize for CounterexamplePair {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PairJson {
            d: self.d.clone(),
            e: self.e.clone(),
            witness_graph6: to_graph6(&self.witness_graph),
            member_index: self.witness_member,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CounterexamplePair {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let raw = PairJson::deserialize(de)?;
        Ok(CounterexamplePair {
            d: raw.d,
            e: raw.e,
            witness_graph: from_graph6(&raw.witness_graph6).map_err(serde::de::Error::custom)?,
            witness_member: raw.member_index,
        })
    }
}

impl CounterexamplePair {
    pub fn sum(&self) -> u32 {
        self.d.sum()
    }

    /// Re-checks every defining property from scratch.
    pub fn validate(&self, set: &ForbiddenSet) -> Result<bool> {
        let limits = Limits::wide();
        let member = set.members().get(self.witness_member);
        Ok(strictly_majorizes(&self.d, &self.e)
            && potential_witness(&self.e, set.members(), limits)?.is_none()
            && self.witness_graph.degree_sequence().strip() == self.d
            && self.witness_graph.isolated_count() == 0
            && member.is_some_and(|f| crate::induced::contains_induced(&self.witness_graph, f)))
    }
}

/// Tests one candidate pair. The witness is the first realization of `d`,
/// in canonical order, that induces a member, and the first such member.
pub fn is_counterexample_pair(d: &Partition, e: &Partition, set: &ForbiddenSet) -> Result<Option<CounterexamplePair>> {
    if d.sum() != e.sum() {
        return Err(Error::domain(format!("{d} and {e} have different sums")));
    }
    require_graphic(d)?;
    require_graphic(e)?;
    let limits = Limits::wide();
    if !strictly_majorizes(d, e) || potential_witness(e, set.members(), limits)?.is_some() {
        return Ok(None);
    }
    let reals = realizations_with(d, None, limits)?;
    Ok(witness_in(d, e, &reals.graphs, set))
}

fn witness_in(d: &Partition, e: &Partition, graphs: &[SmallGraph], set: &ForbiddenSet) -> Option<CounterexamplePair> {
    graphs.iter().find_map(|g| {
        first_induced_member(g, set.members()).map(|idx| CounterexamplePair {
            d: d.clone(),
            e: e.clone(),
            witness_graph: *g,
            witness_member: idx,
        })
    })
}

/// One dominance order with every node's realizations and the union of
/// their catalog profiles.
pub struct Layer {
    pub order: DominanceOrder,
    pub realizations: Vec<Vec<SmallGraph>>,
    pub profiles: Vec<u64>,
}

impl Layer {
    fn build(total: u32, cap: u32, limits: Limits) -> Result<Layer> {
        let order = build_dominance_order_capped(total, true, cap)?;
        let cat = catalog();
        let per_node: Vec<(Vec<SmallGraph>, u64)> = order
            .nodes
            .par_iter()
            .map(|d| {
                let graphs = realizations_with(d, None, limits)?.graphs;
                let profile = graphs.iter().fold(0u64, |acc, g| acc | cat.profile(g));
                Ok((graphs, profile))
            })
            .collect::<Result<_>>()?;
        let (realizations, profiles) = per_node.into_iter().unzip();
        Ok(Layer {
            order,
            realizations,
            profiles,
        })
    }

    pub fn realization_count(&self) -> usize {
        self.realizations.iter().map(Vec::len).sum()
    }
}

/// Shared state for repeated searches: dominance orders with their
/// realizations are built once per sum, and forcibly-free answers for sets
/// outside the profile catalog are memoized per (sequence, set).
pub struct SearchEngine {
    limits: Limits,
    sum_cap: u32,
    layers: Mutex<BTreeMap<u32, Arc<Layer>>>,
    memo: RwLock<HashMap<(Partition, SetKey), bool>>,
}

impl Default for SearchEngine {
    fn default() -> Self {
        SearchEngine::new(Limits::wide(), DEFAULT_SUM_CAP)
    }
}

impl SearchEngine {
    pub fn new(limits: Limits, sum_cap: u32) -> Self {
        SearchEngine {
            limits,
            sum_cap,
            layers: Mutex::new(BTreeMap::new()),
            memo: RwLock::new(HashMap::new()),
        }
    }

    fn check_max_sum(&self, max_sum: u32) -> Result<()> {
        if !max_sum.is_multiple_of(2) {
            return Err(Error::domain(format!("max_sum must be even, got {max_sum}")));
        }
        if max_sum > self.sum_cap {
            return Err(Error::resource(format!(
                "max_sum {max_sum} exceeds the cap {}",
                self.sum_cap
            )));
        }
        Ok(())
    }

    pub fn layer(&self, total: u32) -> Result<Arc<Layer>> {
        if let Some(l) = self.layers.lock().get(&total) {
            return Ok(l.clone());
        }
        let built = Arc::new(Layer::build(total, self.sum_cap, self.limits)?);
        Ok(self.layers.lock().entry(total).or_insert(built).clone())
    }

    /// Builds every layer up to `max_sum` ahead of parallel work.
    pub fn prepare(&self, max_sum: u32) -> Result<()> {
        self.check_max_sum(max_sum)?;
        for total in (2..=max_sum).step_by(2) {
            self.layer(total)?;
        }
        Ok(())
    }

    /// `flags[i]` is true iff node `i` of the layer is forcibly F-free.
    pub fn forcibly_free_flags(&self, set: &ForbiddenSet, total: u32) -> Result<Vec<bool>> {
        let layer = self.layer(total)?;
        if let Some(mask) = catalog().mask_of(set.members()) {
            return Ok(layer.profiles.iter().map(|p| p & mask == 0).collect());
        }
        let key = set.key();
        Ok(layer
            .order
            .nodes
            .par_iter()
            .zip(&layer.realizations)
            .map(|(d, graphs)| {
                let memo_key = (d.clone(), key.clone());
                if let Some(&free) = self.memo.read().get(&memo_key) {
                    return free;
                }
                let free = graphs.iter().all(|g| first_induced_member(g, set.members()).is_none());
                self.memo.write().insert(memo_key, free);
                free
            })
            .collect())
    }

    /// The first counterexample with sum in `2..=max_sum`, in this order:
    /// smaller sums first; within a sum, lexicographically smaller `e`
    /// first; for a fixed `e`, lexicographically smaller `d` first.
    pub fn search(&self, set: &ForbiddenSet, max_sum: u32) -> Result<Option<CounterexamplePair>> {
        self.check_max_sum(max_sum)?;
        for total in (2..=max_sum).step_by(2) {
            if let Some(pair) = self.search_layer(set, total)? {
                return Ok(Some(pair));
            }
        }
        Ok(None)
    }

    pub fn search_layer(&self, set: &ForbiddenSet, total: u32) -> Result<Option<CounterexamplePair>> {
        let layer = self.layer(total)?;
        let free = self.forcibly_free_flags(set, total)?;
        // Node indices run in lexicographically decreasing order.
        for e in (0..free.len()).rev() {
            if !free[e] {
                continue;
            }
            let ancestors: Vec<usize> = layer.order.strict_ancestors(e).iter().collect();
            if let Some(&d) = ancestors.iter().rev().find(|&&d| !free[d]) {
                let pair = witness_in(
                    &layer.order.nodes[d],
                    &layer.order.nodes[e],
                    &layer.realizations[d],
                    set,
                )
                .expect("a node that is not forcibly free has a witness");
                return Ok(Some(pair));
            }
        }
        Ok(None)
    }
}

/// One-off search with a fresh engine.
pub fn search_counterexample(set: &ForbiddenSet, max_sum: u32) -> Result<Option<CounterexamplePair>> {
    SearchEngine::default().search(set, max_sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::parse_partition;

    fn p(s: &str) -> Partition {
        parse_partition(s).unwrap()
    }

    fn set(s: &str) -> ForbiddenSet {
        ForbiddenSet::parse(s).unwrap()
    }

    #[test]
    fn direct_pair_checks() {
        let f = set("2*K2, C4");
        let pair = is_counterexample_pair(&p("32221"), &p("2^5"), &f).unwrap().unwrap();
        assert!(pair.validate(&f).unwrap());
        assert!(is_counterexample_pair(&p("211"), &p("1111"), &set("P3, 2*K2"))
            .unwrap()
            .is_none());
        assert!(is_counterexample_pair(&p("2^5"), &p("2^5"), &f).unwrap().is_none());
        assert!(matches!(
            is_counterexample_pair(&p("32221"), &p("2^4"), &f),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            is_counterexample_pair(&p("31"), &p("22"), &f),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn finds_known_pairs() {
        let engine = SearchEngine::default();
        let pair = engine.search(&set("2*K2, C4"), 10).unwrap().unwrap();
        assert_eq!((pair.d.clone(), pair.e.clone()), (p("32221"), p("2^5")));
        assert!(pair.validate(&set("2*K2, C4")).unwrap());
        let pair = engine.search(&set("K2 + K1, K3 + K1"), 8).unwrap().unwrap();
        assert_eq!((pair.d, pair.e), (p("3221"), p("2222")));
        let pair = engine.search(&set("P3, K3"), 8).unwrap().unwrap();
        assert_eq!((pair.d, pair.e), (p("211"), p("1111")));
        assert!(engine.search(&set("K1"), 12).unwrap().is_none());
    }

    #[test]
    fn non_catalog_sets_use_the_memo() {
        let engine = SearchEngine::default();
        let f = set("C6, 2*K2");
        let a = engine.search(&f, 12).unwrap();
        let b = engine.search(&f, 12).unwrap();
        assert_eq!(a, b);
        assert!(!engine.memo.read().is_empty());
    }

    #[test]
    fn budget_errors() {
        let engine = SearchEngine::default();
        assert!(matches!(engine.search(&set("K2"), 7), Err(Error::Domain(_))));
        assert!(matches!(engine.search(&set("K2"), 40), Err(Error::Resource(_))));
    }

    #[test]
    fn json_round_trip() {
        let pair = search_counterexample(&set("2*K2, C4"), 10).unwrap().unwrap();
        let v = serde_json::to_value(&pair).unwrap();
        assert_eq!(v["d"], "3 2^3 1");
        assert_eq!(v["e"], "2^5");
        let back: CounterexamplePair = serde_json::from_value(v).unwrap();
        assert_eq!(back, pair);
    }
}
