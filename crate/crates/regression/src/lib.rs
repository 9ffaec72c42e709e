//! Fixed regression fixture for the dominance-monotone classification.
//!
//! Twelve numbered criteria plus one supplementary sweep. Every comparison
//! is exact; the only tolerance is a wall-clock ceiling per criterion,
//! pinned in [`CRITERIA`]. Expected values that come from running the
//! search itself live in [`expected`] and are cross-checked against the
//! brute-force oracle wherever the oracle is fast enough.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use domorder::monotone::{
    classify_sets, evaluate, verify_infinite_family, verify_lemma_constructions, CandidateReport, FamilyVariant,
    ForbiddenSet, LemmaId, SearchEngine, SetKey, Verdict,
};
use domorder::{
    build_named, down_neighbors, majorizes, parse_partition, partitions_of, realizations, Partition, Result, SmallGraph,
};
use domorder_oracle as oracle;
use serde::Serialize;

pub mod expected;

/// Identifier, title and wall-clock ceiling of each criterion.
pub const CRITERIA: [(u8, &str, Duration); 12] = [
    (1, "majorization fixture", Duration::from_millis(1)),
    (2, "box-move equivalence up to sum 16", Duration::from_secs(30)),
    (
        3,
        "realizations match the brute-force oracle up to sum 10",
        Duration::from_secs(120),
    ),
    (4, "unique-realization fixtures", Duration::from_secs(1)),
    (5, "counterexample reproduction", Duration::from_secs(10)),
    (6, "singleton classification", Duration::from_secs(300)),
    (7, "pair classification", Duration::from_secs(1800)),
    (8, "named triples survive to sum 14", Duration::from_secs(1800)),
    (9, "construction catalogs", Duration::from_secs(60)),
    (10, "order and edge families", Duration::from_secs(120)),
    (
        11,
        "split-graph obstructions survive to sum 14",
        Duration::from_secs(600),
    ),
    (12, "complement consistency", Duration::from_secs(600)),
];

/// Criteria that cannot pass as stated. Criterion 10 asks that every graph
/// family "all graphs with exactly t edges" be monotone with forcibly-free
/// sequences exactly those of sum below 2t. That reading counts ordinary
/// subgraphs; with induced containment it is false: `K3` has no induced
/// subgraph with two edges, `C4` none with three, `C5` none with four. So
/// `2^3` is forcibly free for t = 2, and `(3 2^2 1, 2^4)`, `(3 2^3 1, 2^5)`
/// are counterexample pairs for t = 3, 4. The order half passes.
pub const KNOWN_UNATTAINABLE: [u8; 1] = [10];

/// Ceiling for the supplementary order-5 triple sweep.
pub const SWEEP_CEILING: Duration = Duration::from_secs(1800);

#[derive(Debug, Clone, Serialize)]
pub struct Outcome {
    pub id: String,
    pub title: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
    pub ceiling_ms: u128,
}

impl Outcome {
    pub fn line(&self) -> String {
        format!(
            "[{}] {:>2} {} ({} ms / {} ms): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed_ms,
            self.ceiling_ms,
            self.detail
        )
    }
}

/// Collects individual checks; the first few failures make the detail.
#[derive(Default)]
struct Checks {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Checks {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn finish(self) -> (bool, String) {
        if self.failures.is_empty() {
            (true, self.notes.join("; "))
        } else {
            let n = self.failures.len();
            let mut shown: Vec<String> = self.failures.into_iter().take(5).collect();
            if n > 5 {
                shown.push(format!("... {} more", n - 5));
            }
            (false, shown.join("; "))
        }
    }
}

fn timed(id: String, title: &str, ceiling: Duration, body: impl FnOnce() -> Result<Checks>) -> Outcome {
    let start = Instant::now();
    let result = body();
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match result {
        Ok(c) => c.finish(),
        Err(e) => (false, format!("error: {e}")),
    };
    if elapsed > ceiling {
        passed = false;
        detail = format!("exceeded ceiling; {detail}");
    }
    Outcome {
        id,
        title: title.to_string(),
        passed,
        detail,
        elapsed_ms: elapsed.as_millis(),
        ceiling_ms: ceiling.as_millis(),
    }
}

/// Runs one numbered criterion.
pub fn run_criterion(engine: &SearchEngine, id: u8) -> Option<Outcome> {
    let &(_, title, ceiling) = CRITERIA.iter().find(|c| c.0 == id)?;
    let body = || -> Result<Checks> {
        match id {
            1 => majorization_fixture(),
            2 => box_move_equivalence(),
            3 => realizations_vs_oracle(),
            4 => unique_realizations(),
            5 => counterexample_reproduction(engine),
            6 => singletons(engine),
            7 => pairs(engine),
            8 => named_triples(engine),
            9 => construction_catalogs(),
            10 => families(engine),
            11 => split_obstructions(engine),
            12 => complement_consistency(engine),
            _ => unreachable!("id comes from CRITERIA"),
        }
    };
    Some(timed(id.to_string(), title, ceiling, body))
}

/// All twelve criteria in order.
pub fn run_all(engine: &SearchEngine) -> Vec<Outcome> {
    CRITERIA
        .iter()
        .map(|c| run_criterion(engine, c.0).expect("listed"))
        .collect()
}

/// The optional negative-side sweep over triples of graphs on at most five
/// vertices. Reported alongside the criteria.
pub fn run_sweep(engine: &SearchEngine) -> Outcome {
    timed("S".into(), "order-5 triple sweep to sum 24", SWEEP_CEILING, || {
        order5_sweep(engine)
    })
}

fn p(s: &str) -> Partition {
    parse_partition(s).expect("fixture partition")
}

fn set(s: &str) -> ForbiddenSet {
    ForbiddenSet::parse(s).expect("fixture set")
}

fn keys(labels: &[&str]) -> BTreeSet<SetKey> {
    labels.iter().map(|l| set(l).key()).collect()
}

fn rows(g: &SmallGraph) -> Vec<u32> {
    g.rows().to_vec()
}

fn majorization_fixture() -> Result<Checks> {
    let mut c = Checks::default();
    let (d, e) = (p("3221"), p("2222"));
    c.expect(majorizes(&d, &e), || "3221 does not majorize 2222".into());
    c.expect(down_neighbors(&d).contains(&e), || {
        "2222 is not a down-neighbor of 3221".into()
    });
    c.note("3221 majorizes 2222 by one box move");
    Ok(c)
}

fn box_move_equivalence() -> Result<Checks> {
    let mut c = Checks::default();
    let mut pairs = 0usize;
    for total in 1..=16 {
        let parts = partitions_of(total);
        for d in &parts {
            let reach = oracle::reachable_by_box_moves(d.terms());
            for e in &parts {
                pairs += 1;
                let by_prefix = majorizes(d, e);
                let by_moves = reach.contains(e.terms());
                c.expect(by_prefix == by_moves, || {
                    format!("{d} vs {e}: prefix {by_prefix}, moves {by_moves}")
                });
            }
        }
    }
    c.note(format!("{pairs} ordered pairs"));
    Ok(c)
}

fn realizations_vs_oracle() -> Result<Checks> {
    let mut c = Checks::default();
    let mut sequences = 0;
    let mut graphs = 0;
    for total in (2..=10).step_by(2) {
        for d in partitions_of(total) {
            let want = if oracle::havel_hakimi(d.terms()) {
                oracle::unlabeled_realizations(d.terms())
            } else {
                Vec::new()
            };
            let got: Vec<Vec<u32>> = match realizations(&d, None) {
                Ok(r) => r.graphs.iter().map(rows).collect(),
                Err(_) => Vec::new(),
            };
            sequences += 1;
            graphs += got.len();
            c.expect(got.len() == want.len(), || {
                format!("{d}: {} realizations, oracle {}", got.len(), want.len())
            });
            for w in &want {
                let hits = got.iter().filter(|g| oracle::isomorphic(g, w)).count();
                c.expect(hits == 1, || format!("{d}: oracle class matched {hits} times"));
            }
        }
    }
    c.note(format!("{sequences} partitions, {graphs} realizations"));
    Ok(c)
}

fn unique_realizations() -> Result<Checks> {
    let mut c = Checks::default();
    let mut k6 = SmallGraph::complete(6)?;
    k6 = k6.subdivide_edge(0, 1)?;
    // Complement of a claw with one edge subdivided: 0 is adjacent to
    // 1, 2, 3, 4 and 4 continues to 5.
    let spider = SmallGraph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (4, 5)])?.complement();
    let fixtures = [
        ("2^5", SmallGraph::cycle(5)?, "C5"),
        ("5^6 2", k6, "K6 with one edge subdivided"),
        ("4^4 3 1", spider, "complement of a subdivided claw"),
    ];
    for (seq, shape, name) in &fixtures {
        let found = realizations(&p(seq), None)?;
        let ok = found.len() == 1 && oracle::isomorphic(&rows(&found.graphs[0]), &rows(shape));
        c.expect(ok, || {
            format!("{seq}: {} realizations, expected only {name}", found.len())
        });
    }
    let p4 = build_named("P4")?;
    let inner = realizations(&p("4^4 3 1"), None)?;
    let induces = inner
        .graphs
        .first()
        .is_some_and(|g| oracle::contains_induced(&rows(g), &rows(&p4)));
    c.expect(induces, || "the realization of 4^4 3 1 does not induce P4".into());
    c.note("2^5, 5^6 2 and 4^4 3 1 each have the expected single realization");
    Ok(c)
}

fn counterexample_reproduction(engine: &SearchEngine) -> Result<Checks> {
    let mut c = Checks::default();
    for (text, max_sum, d, e) in [("2*K2, C4", 10, "32221", "2^5"), ("P3, K3", 8, "211", "1111")] {
        let f = set(text);
        match engine.search(&f, max_sum)? {
            Some(pair) => {
                c.expect(pair.d == p(d) && pair.e == p(e), || {
                    format!("{{{text}}}: found ({}, {}), expected ({d}, {e})", pair.d, pair.e)
                });
                c.expect(pair.validate(&f)?, || {
                    format!("{{{text}}}: certificate does not validate")
                });
                c.note(format!("{{{text}}} -> ({}, {})", pair.d, pair.e));
            }
            None => c.expect(false, || format!("{{{text}}}: no counterexample up to {max_sum}")),
        }
    }
    Ok(c)
}

fn reports_ok(c: &mut Checks, reports: &[CandidateReport]) -> Result<()> {
    for r in reports {
        if let Some(pair) = r.verdict.pair() {
            c.expect(pair.validate(&r.candidate)?, || {
                format!("{}: invalid certificate", r.candidate)
            });
        }
    }
    Ok(())
}

fn histogram(reports: &[CandidateReport]) -> BTreeMap<u32, usize> {
    let mut h = BTreeMap::new();
    for r in reports {
        if let Some(pair) = r.verdict.pair() {
            *h.entry(pair.sum()).or_insert(0) += 1;
        }
    }
    h
}

fn oracle_agrees(c: &mut Checks, reports: &[CandidateReport], max_sum: u32) {
    for r in reports.iter().filter(|r| r.equivalent_to.is_none()) {
        let patterns: Vec<Vec<u32>> = r.candidate.members().iter().map(rows).collect();
        let want = oracle::first_refuting_total(&patterns, max_sum);
        let got = r.verdict.pair().map(|p| p.sum());
        c.expect(want == got, || {
            format!("{}: refuting sum {got:?}, oracle {want:?}", r.candidate)
        });
    }
}

fn unrefuted(reports: &[CandidateReport]) -> BTreeSet<SetKey> {
    reports
        .iter()
        .filter(|r| !r.is_refuted())
        .map(|r| r.candidate.key())
        .collect()
}

fn singletons(engine: &SearchEngine) -> Result<Checks> {
    let mut c = Checks::default();
    let reports = classify_sets(engine, 4, 1, 16)?;
    reports_ok(&mut c, &reports)?;
    c.expect(unrefuted(&reports) == keys(&expected::MONOTONE_SINGLETONS), || {
        "unrefuted singletons differ from {K1}, {2K1}, {K2}".into()
    });
    for r in reports.iter().filter(|r| !r.is_refuted()) {
        c.expect(r.verdict == Verdict::Proven, || {
            format!("{} not certified", r.candidate)
        });
    }
    let sums: BTreeMap<SetKey, Option<u32>> = expected::SINGLETON_REFUTING_SUMS
        .iter()
        .map(|&(l, s)| (set(l).key(), s))
        .collect();
    c.expect(sums.len() == reports.len(), || {
        "fixture covers a different candidate list".into()
    });
    for r in &reports {
        let got = r.verdict.pair().map(|p| p.sum());
        let want = sums.get(&r.candidate.key()).copied().flatten();
        c.expect(got == want, || {
            format!("{}: refuting sum {got:?}, fixture {want:?}", r.candidate)
        });
    }
    oracle_agrees(&mut c, &reports, 16);
    let worst = histogram(&reports).keys().max().copied();
    c.expect(worst == Some(expected::SINGLETON_MIN_MAX_SUM), || {
        format!("last refutation at {worst:?}")
    });
    c.note(format!(
        "{} candidates, 3 certified, every other refuted by sum {}",
        reports.len(),
        expected::SINGLETON_MIN_MAX_SUM
    ));
    Ok(c)
}

fn contains_monotone_singleton(f: &ForbiddenSet) -> bool {
    let singles = keys(&expected::MONOTONE_SINGLETONS);
    f.members()
        .iter()
        .any(|g| singles.contains(&ForbiddenSet::new([*g]).key()))
}

fn pairs(engine: &SearchEngine) -> Result<Checks> {
    let mut c = Checks::default();
    let reports = classify_sets(engine, 4, 2, 16)?;
    reports_ok(&mut c, &reports)?;
    let extra = keys(&expected::MONOTONE_PAIRS);
    let want: BTreeSet<SetKey> = reports
        .iter()
        .filter(|r| contains_monotone_singleton(&r.candidate) || extra.contains(&r.candidate.key()))
        .map(|r| r.candidate.key())
        .collect();
    let got = unrefuted(&reports);
    for r in &reports {
        let k = r.candidate.key();
        c.expect(got.contains(&k) == want.contains(&k), || {
            format!(
                "{}: {} but expected {}",
                r.candidate,
                r.verdict.tag(),
                if want.contains(&k) { "unrefuted" } else { "refuted" }
            )
        });
    }
    for r in reports.iter().filter(|r| !r.is_refuted()) {
        c.expect(r.verdict == Verdict::Proven, || {
            format!("{} only survived", r.candidate)
        });
    }
    let hist = histogram(&reports);
    let want_hist: BTreeMap<u32, usize> = expected::PAIR_HISTOGRAM.into_iter().collect();
    c.expect(hist == want_hist, || format!("refuting-sum histogram {hist:?}"));
    oracle_agrees(&mut c, &reports, 16);
    c.note(format!(
        "{} candidates, {} unrefuted, every other refuted by sum {}",
        reports.len(),
        got.len(),
        expected::PAIR_MIN_MAX_SUM
    ));
    Ok(c)
}

fn named_triples(engine: &SearchEngine) -> Result<Checks> {
    let mut c = Checks::default();
    for text in expected::NAMED_TRIPLES {
        let found = engine.search(&set(text), 14)?;
        c.expect(found.is_none(), || {
            format!(
                "{{{text}}} refuted by {:?}",
                found.map(|p| (p.d.to_string(), p.e.to_string()))
            )
        });
    }
    // Negative side on four vertices: everything else falls by the pinned sum.
    let reports = classify_sets(engine, 4, 3, expected::TRIPLE_MIN_MAX_SUM)?;
    reports_ok(&mut c, &reports)?;
    let survivors: BTreeSet<SetKey> = reports
        .iter()
        .filter(|r| r.equivalent_to.is_none() && matches!(r.verdict, Verdict::Survived(_)))
        .map(|r| r.candidate.key())
        .collect();
    c.expect(survivors == keys(&expected::TRIPLE_SURVIVORS_ORDER4), || {
        format!("{} uncertified reduced survivors on four vertices", survivors.len())
    });
    oracle_agrees(&mut c, &reports, expected::TRIPLE_MIN_MAX_SUM);
    c.note(format!(
        "4 named triples survive; on four vertices all other uncertified triples fall by sum {}",
        expected::TRIPLE_MIN_MAX_SUM
    ));
    Ok(c)
}

fn construction_catalogs() -> Result<Checks> {
    let mut c = Checks::default();
    let mut runs: Vec<(LemmaId, Vec<(&str, u32)>)> = Vec::new();
    for a in 1..=3 {
        for b in 1..=3 {
            runs.push((LemmaId::SubdividedCone, vec![("a", a), ("b", b)]));
        }
    }
    for a in 2..=4 {
        runs.push((LemmaId::MatchingCone, vec![("a", a)]));
    }
    for pp in 1..=3 {
        runs.push((LemmaId::PathCone, vec![("p", pp), ("q", 0)]));
    }
    runs.push((LemmaId::SubdividedK6, vec![]));
    runs.push((LemmaId::CycleUnion, vec![("a", 1), ("b", 1)]));
    for (lemma, params) in &runs {
        let map: BTreeMap<String, u32> = params.iter().map(|&(k, v)| (k.to_string(), v)).collect();
        let report = verify_lemma_constructions(*lemma, &map)?;
        for check in report.checks.iter().filter(|ch| !ch.passed) {
            c.expect(false, || {
                format!("{lemma} {params:?}: {} ({})", check.name, check.detail)
            });
        }
    }
    c.note(format!("{} parameterized constructions", runs.len()));
    Ok(c)
}

fn families(engine: &SearchEngine) -> Result<Checks> {
    let mut c = Checks::default();
    let mut checked = 0;
    for t in 2..=4 {
        for variant in [FamilyVariant::Order, FamilyVariant::Edges] {
            let r = verify_infinite_family(engine, t, variant, 12)?;
            checked += r.sequences_checked;
            c.expect(r.passed, || {
                let pair = r
                    .counterexample
                    .as_ref()
                    .map(|p| format!("({}, {})", p.d, p.e))
                    .unwrap_or_else(|| "none".into());
                format!(
                    "t={t} {variant}: shortcut fails at [{}]; counterexample {pair}",
                    r.shortcut_mismatches.join(", ")
                )
            });
        }
    }
    c.note(format!("6 families, {checked} sequence checks"));
    Ok(c)
}

fn split_obstructions(engine: &SearchEngine) -> Result<Checks> {
    let mut c = Checks::default();
    let found = engine.search(&set("2*K2, C4, C5"), 14)?;
    c.expect(found.is_none(), || "{2K2, C4, C5} refuted".into());
    c.note("no counterexample pair up to sum 14");
    Ok(c)
}

fn complement_consistency(engine: &SearchEngine) -> Result<Checks> {
    let mut c = Checks::default();
    let mut tested = BTreeSet::new();
    for size in 1..=2 {
        for r in classify_sets(engine, 4, size, 16)? {
            if !r.is_refuted() || r.candidate.has_dominating_member() || !tested.insert(r.candidate.key()) {
                continue;
            }
            let co = r.candidate.complement_set().set;
            let v = evaluate(engine, &co, 16)?;
            c.expect(v.is_refuted(), || {
                format!("{} refuted but complement {} is {}", r.candidate, co, v.tag())
            });
        }
    }
    c.note(format!(
        "{} refuted candidates without a dominating member; complements all refuted",
        tested.len()
    ));
    Ok(c)
}

fn order5_sweep(engine: &SearchEngine) -> Result<Checks> {
    let mut c = Checks::default();
    let reports = classify_sets(engine, 5, 3, expected::ORDER5_TRIPLE_MIN_MAX_SUM)?;
    reports_ok(&mut c, &reports)?;
    let survivors: BTreeSet<SetKey> = reports
        .iter()
        .filter(|r| r.equivalent_to.is_none() && matches!(r.verdict, Verdict::Survived(_)))
        .map(|r| r.candidate.key())
        .collect();
    c.expect(survivors == keys(&expected::TRIPLE_SURVIVORS_ORDER5), || {
        format!("{} uncertified reduced survivors", survivors.len())
    });
    let hist = histogram(&reports);
    let want: BTreeMap<u32, usize> = expected::ORDER5_TRIPLE_HISTOGRAM.into_iter().collect();
    c.expect(hist == want, || format!("refuting-sum histogram {hist:?}"));
    c.note(format!(
        "{} candidates; 3 uncertified survivors; last refutation at sum {}",
        reports.len(),
        expected::ORDER5_TRIPLE_MIN_MAX_SUM
    ));
    Ok(c)
}
