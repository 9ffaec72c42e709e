//! Dominance monotonicity of forbidden-induced-subgraph sets.

pub mod classify;
pub mod family;
pub mod forbidden;
pub mod lemmas;
pub mod screen;
pub mod search;

pub use classify::{
    classify_sets, complement_experiment, evaluate, Budget, CandidateReport, ComplementEvidence, Verdict,
};
pub use family::{family_set, verify_infinite_family, FamilyReport, FamilyVariant};
pub use forbidden::{ComplementSet, ForbiddenSet, SetKey};
pub use lemmas::{verify_lemma_constructions, LemmaCheck, LemmaId, LemmaReport};
pub use screen::{screen_necessary_conditions, ComplementStatus, ScreeningReport};
pub use search::{is_counterexample_pair, search_counterexample, CounterexamplePair, Layer, SearchEngine};
