//! Frozen expectations. Sets are written in the graph-expression grammar.
//!
//! The refuting sums and histograms were produced by the search and agree
//! with the brute-force oracle (labeled realizations, prefix-sum
//! majorization) up to sum 16 for singletons and pairs and sum 14 for
//! triples on four vertices.

pub const MONOTONE_SINGLETONS: [&str; 3] = ["K1", "2K1", "K2"];

/// Pairs that are monotone without containing a monotone singleton.
pub const MONOTONE_PAIRS: [&str; 3] = ["K2 + K1, P3", "K2 + K1, C4", "P3, 2K2"];

pub const NAMED_TRIPLES: [&str; 4] = ["2K2, P4, diamond", "K2 + 2K1, P4, C4", "2K2, P4, C4", "2K2, C4, C5"];

/// Smallest sum carrying a counterexample pair, per singleton on at most
/// four vertices; `None` for the three monotone ones.
pub const SINGLETON_REFUTING_SUMS: [(&str, Option<u32>); 18] = [
    ("K1", None),
    ("2K1", None),
    ("K2", None),
    ("3K1", Some(6)),
    ("K2 + K1", Some(8)),
    ("P3", Some(4)),
    ("K3", Some(6)),
    ("4K1", Some(8)),
    ("K2 + 2K1", Some(8)),
    ("P3 + K1", Some(6)),
    ("K3 + K1", Some(8)),
    ("P4", Some(6)),
    ("C4", Some(8)),
    ("2K2", Some(10)),
    ("K1 v 3K1", Some(6)),
    ("K1 v (K2 + K1)", Some(8)),
    ("diamond", Some(10)),
    ("K4", Some(12)),
];

/// Smallest `max_sum` refuting every non-monotone singleton (from `K4`).
pub const SINGLETON_MIN_MAX_SUM: u32 = 12;

/// Candidate count per minimal refuting sum over all 153 pairs.
pub const PAIR_HISTOGRAM: [(u32, usize); 6] = [(4, 12), (6, 45), (8, 33), (10, 9), (12, 1), (14, 2)];

/// Smallest `max_sum` refuting every non-monotone pair; the last two to
/// fall are `{K2 + 2K1, P4}` and `{P4, 2K2}`, both by `4 3^2 2^2 ≻ 3^4 2`.
pub const PAIR_MIN_MAX_SUM: u32 = 14;

/// Reduced triples on at most four vertices that neither fall nor carry
/// the threshold certificate.
pub const TRIPLE_SURVIVORS_ORDER4: [&str; 2] = ["K2 + 2K1, P4, C4", "2K2, P4, diamond"];

/// Smallest `max_sum` refuting every other triple on four vertices.
pub const TRIPLE_MIN_MAX_SUM: u32 = 14;

pub const TRIPLE_SURVIVORS_ORDER5: [&str; 3] = ["K2 + 2K1, P4, C4", "2K2, P4, diamond", "2K2, C4, C5"];

/// Smallest `max_sum` refuting every other triple on five vertices. The
/// last to fall is `{P4, 2K2, 2K1 v (K2 + K1)}` by `5 4^4 3 ≻ 4^6`.
pub const ORDER5_TRIPLE_MIN_MAX_SUM: u32 = 24;

pub const ORDER5_TRIPLE_HISTOGRAM: [(u32, usize); 10] = [
    (4, 1035),
    (6, 5184),
    (8, 7775),
    (10, 3433),
    (12, 652),
    (14, 192),
    (16, 6),
    (18, 1),
    (22, 2),
    (24, 1),
];
