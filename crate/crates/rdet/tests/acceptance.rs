//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rdet_core::rank::execution_order_rank;
use rdet_core::source::HunkText;
use rdet_core::textual::{
    KeywordList, Query, RegionDocument, Scorer, SynonymTable, TermIndex, ZoneToken, ZoneWeights,
};
use rdet_core::trace::{coverage_diff, hunk_window, snapshot_at};
use rdet_core::{
    localize, ChangeRegion, CoverageSnapshot, HunkId, LineRange, LocalizeOptions, RankingMode,
    TextualInput,
};

use common::*;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eo_oracle_equivalence() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0xe0);
    let mut positioned = 0usize;
    for case in 0..1000 {
        let n = rng.gen_range(0..=10_000);
        let hunks = rng.gen_range(1..=200u64);
        let trace = random_trace(&mut rng, n, hunks, 1);
        let candidates: BTreeSet<HunkId> = (1..=hunks)
            .filter(|_| rng.gen_bool(0.5))
            .map(HunkId)
            .collect();
        let k = match rng.gen_range(0..4) {
            0 => None,
            1 => Some(rng.gen_range(1..=20)),
            _ => Some(rng.gen_range(1..=n.max(1) * 3 / 2)),
        };
        let regions: Vec<ChangeRegion> = candidates
            .iter()
            .map(|&id| ChangeRegion {
                hunk_id: id,
                file: "m.py".into(),
                lines: LineRange::single(id.0 as u32).unwrap(),
                executed: true,
            })
            .collect();
        let window = hunk_window(&trace, "m0", k).map_err(|e| e.to_string())?;
        let order = execution_order_rank(&window, &regions);
        let expected = eo_oracle(trace.events(), "m0", k, &candidates);
        check(order.len() == expected.len(), || {
            format!("case {case}: {} entries, oracle {}", order.len(), expected.len())
        })?;
        for (id, want) in &expected {
            let got = order.entry(*id).ok_or(format!("case {case}: hunk {id} unranked"))?;
            check(
                got.eo_position == want.position
                    && got.trace_distance == want.trace_distance
                    && got.last_seq == want.last_seq,
                || format!("case {case}: hunk {id} got {got:?}, oracle {want:?}"),
            )?;
        }
        positioned += expected.len();
    }
    Ok(format!("1000 traces, {positioned} positions"))
}

fn coverage_diff_properties() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0xc0);
    let empty = CoverageSnapshot {
        label: String::new(),
        covered: BTreeSet::new(),
    };
    for case in 0..500 {
        let n = rng.gen_range(0..=1500);
        let trace = random_trace(&mut rng, n, 20, 3);
        let (a, b) = (rng.gen_range(0..3), rng.gen_range(0..3));
        let (la, lb) = (format!("m{a}"), format!("m{b}"));
        let bug = snapshot_at(&trace, &la).map_err(|e| e.to_string())?;
        let base = snapshot_at(&trace, &lb).map_err(|e| e.to_string())?;
        let expected = difference_oracle(
            &covered_before(trace.events(), Some(&la)),
            &covered_before(trace.events(), Some(&lb)),
        );
        check(coverage_diff(&bug, &base) == expected, || {
            format!("case {case}: diff({la},{lb}) differs from membership oracle")
        })?;
        check(coverage_diff(&bug, &bug).is_empty(), || format!("case {case}: diff(S,S) not empty"))?;
        check(coverage_diff(&bug, &empty) == bug.covered, || format!("case {case}: diff(S,empty) != S"))?;

        // Later markers see a superset, and the difference restores it.
        let snaps: Vec<_> = (0..3)
            .map(|i| snapshot_at(&trace, &format!("m{i}")).unwrap())
            .collect();
        for w in snaps.windows(2) {
            check(w[0].covered.is_subset(&w[1].covered), || format!("case {case}: snapshots not cumulative"))?;
            let mut restored = coverage_diff(&w[1], &w[0]);
            restored.extend(w[0].covered.iter().cloned());
            check(restored == w[1].covered, || format!("case {case}: diff plus earlier != later"))?;
        }
    }
    Ok("500 pairs".into())
}

fn eo_diff_options() -> LocalizeOptions {
    LocalizeOptions {
        baseline_marker: Some("baseline".into()),
        mode: Some(RankingMode::EoDiff),
        ..LocalizeOptions::default()
    }
}

fn planted_benchmark() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0xb0);
    let mut hits = 0;
    let mut ranks = Vec::new();
    for case in 0..100 {
        let s = planted_session(&mut rng, SessionShape::default());
        let loc = localize(&s.diff, &s.trace, &s.methods, None, &eo_diff_options())
            .map_err(|e| e.to_string())?;
        let executed: BTreeSet<HunkId> = loc.results.iter().map(|r| r.region.hunk_id).collect();
        check(s.diff.len() >= 500 && executed.len() >= 150 && s.noise_events <= 50, || {
            format!(
                "case {case}: {} hunks, {} executed, {} noise events",
                s.diff.len(),
                executed.len(),
                s.noise_events
            )
        })?;
        let rank = loc
            .results
            .iter()
            .filter(|r| r.region.hunk_id == s.planted)
            .map(|r| r.final_rank)
            .min()
            .ok_or(format!("case {case}: planted hunk not executed"))?;
        ranks.push(rank);
        if rank <= 10 {
            hits += 1;
        }
    }
    ranks.sort_unstable();
    let summary = format!("{hits}/100 sessions at rank <= 10, median rank {}", ranks[50]);
    if hits >= 90 {
        Ok(summary)
    } else {
        Err(summary)
    }
}

fn flip_fixture() -> Outcome {
    let fx = load_fixture("flip");
    for (mode, key) in [(RankingMode::Eo, "eo"), (RankingMode::EoDiff, "eo_diff")] {
        check(fixture_ranking(&fx, mode) == expected_ranking(&fx.manifest, key), || {
            format!("{key} ranking differs from manifest")
        })?;
    }
    let planted = fx.manifest["planted"]["hunk_id"].as_u64().unwrap();
    let row = |key: &str| {
        expected_ranking(&fx.manifest, key)
            .into_iter()
            .find(|r| r["hunk_id"].as_u64() == Some(planted))
            .unwrap()
    };
    let eo = row("eo")["eo_position"].as_u64().unwrap();
    let eo_diff = row("eo_diff")["rank"].as_u64().unwrap();
    check(eo >= 10 && eo_diff == 1, || format!("eo_position {eo}, EO+D rank {eo_diff}"))?;
    Ok(format!("eo_position {eo} -> EO+D rank {eo_diff}"))
}

fn post_dump_immunity() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0xd0);
    let keywords = KeywordList::python();
    let shape = SessionShape {
        files: 10,
        ..SessionShape::default()
    };
    for case in 0..50 {
        let s = planted_session(&mut rng, shape);
        let later = append_noise(&mut rng, &s.trace, &s.diff, 10_000);
        let text = HunkText::new(&s.diff);
        let textual = TextualInput {
            query: "compute value",
            source: &text,
            keywords: &keywords,
            synonyms: None,
            weights: ZoneWeights::default(),
        };
        let window = Some(rng.gen_range(1..2000));
        for mode in [RankingMode::Eo, RankingMode::EoDiff] {
            let opts = LocalizeOptions {
                mode: Some(mode),
                window,
                ..eo_diff_options()
            };
            let before = localize(&s.diff, &s.trace, &s.methods, Some(&textual), &opts)
                .map_err(|e| e.to_string())?;
            let after = localize(&s.diff, &later, &s.methods, Some(&textual), &opts)
                .map_err(|e| e.to_string())?;
            check(before.results == after.results, || {
                format!("case {case}: {mode} results changed after appending events")
            })?;
        }
    }
    Ok("50 sessions x 10000 appended events".into())
}

fn parser_corpus() -> Outcome {
    let n = check_corpus()?;
    check(n >= 20, || format!("only {n} corpus cases"))?;
    Ok(format!("{n} file pairs"))
}

fn scores(docs: &[RegionDocument], query: &Query, weights: ZoneWeights, synonyms: &SynonymTable) -> Vec<f64> {
    let index = TermIndex::build(docs);
    let scorer = Scorer {
        index: &index,
        weights,
        synonyms: Some(synonyms),
    };
    docs.iter().map(|d| scorer.score(query, d)).collect()
}

fn textual_equivalence() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x70);
    let raw: Vec<Vec<(String, rdet_core::textual::Zone)>> = (0..20)
        .map(|_| {
            (0..rng.gen_range(3..60))
                .map(|_| (random_word(&mut rng).to_string(), ZONES[rng.gen_range(0..5)]))
                .collect()
        })
        .collect();
    let docs: Vec<RegionDocument> = raw
        .iter()
        .enumerate()
        .map(|(i, d)| RegionDocument {
            region: ChangeRegion {
                hunk_id: HunkId(i as u64 + 1),
                file: format!("f{i}.py"),
                lines: LineRange::single(1).unwrap(),
                executed: true,
            },
            tokens: d
                .iter()
                .map(|(t, z)| ZoneToken {
                    text: t.clone(),
                    zone: *z,
                })
                .collect(),
        })
        .collect();
    let pairs = vec![
        ("socket".to_string(), "stream".to_string(), 0.6),
        ("cache".to_string(), "buffer".to_string(), 0.4),
        ("user".to_string(), "session".to_string(), 0.3),
    ];
    let table = SynonymTable::new(pairs.clone()).map_err(|e| e.to_string())?;
    let weights = ZoneWeights::default();

    let mut queries = 0;
    for _ in 0..25 {
        let terms: Vec<String> = (0..rng.gen_range(1..5))
            .map(|_| random_word(&mut rng).to_string())
            .collect();
        let query = Query::from_terms(&terms);
        let naive = naive_scores(&raw, &terms, &weights, &pairs);
        let actual = scores(&docs, &query, weights, &table);
        check(same_ordering(&naive, &actual) && same_ordering(&actual, &naive), || {
            format!("query {terms:?}: ordering differs from naive scorer")
        })?;
        queries += 1;
    }

    let terms = vec!["connection".to_string(), "parser".to_string(), "socket".to_string()];
    let query = Query::from_terms(&terms);
    let base = scores(&docs, &query, weights, &table);
    for i in 0..100 {
        let factor = rng.gen_range(0.01..100.0);
        let scaled = scores(&docs, &query, weights.scaled(factor), &table);
        check(same_ordering(&base, &scaled) && same_ordering(&scaled, &base), || {
            format!("scaling {i} by {factor}: ordering changed")
        })?;
    }
    Ok(format!("20 documents, {queries} queries, 100 scalings"))
}

fn analyze_json(name: &str) -> Result<Vec<u8>, String> {
    let fx = load_fixture(name);
    let m = &fx.manifest;
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_rdet"));
    cmd.arg("analyze")
        .arg("--diff")
        .arg(fx.dir.join("change.diff"))
        .arg("--trace")
        .arg(fx.dir.join("trace.jsonl"))
        .arg("--method-map")
        .arg(fx.dir.join("methods.json"))
        .arg("--src-root")
        .arg(fx.dir.join("src"))
        .args(["--strip-prefix", m["strip_prefix"].as_str().unwrap()])
        .args(["--bug-marker", m["bug_marker"].as_str().unwrap()])
        .args(["--format", "json"])
        .env_remove("RDET_WEIGHTS");
    if let Some(b) = m["baseline_marker"].as_str() {
        cmd.args(["--baseline-marker", b]);
    }
    if let Some(q) = m["query"].as_str() {
        cmd.args(["--query", q]);
    }
    let out = cmd.output().map_err(|e| e.to_string())?;
    check(out.status.success(), || {
        format!("{name}: exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr))
    })?;
    Ok(out.stdout)
}

fn determinism() -> Outcome {
    for name in SESSIONS {
        let first = analyze_json(name)?;
        let second = analyze_json(name)?;
        check(!first.is_empty() && first == second, || format!("{name}: reports differ"))?;
        serde_json::from_slice::<serde_json::Value>(&first).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(format!("{} fixtures", SESSIONS.len()))
}

struct Criterion {
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() {
    let criteria = [
        Criterion { name: "eo-oracle-equivalence", limit: Some(Duration::from_secs(5)), run: eo_oracle_equivalence },
        Criterion { name: "coverage-diff-properties", limit: Some(Duration::from_secs(2)), run: coverage_diff_properties },
        Criterion { name: "planted-fault-benchmark", limit: Some(Duration::from_secs(30)), run: planted_benchmark },
        Criterion { name: "eo-to-eo-diff-flip-fixture", limit: None, run: flip_fixture },
        Criterion { name: "post-dump-immunity", limit: None, run: post_dump_immunity },
        Criterion { name: "diff-parser-corpus", limit: None, run: parser_corpus },
        Criterion { name: "textual-scorer-equivalence", limit: None, run: textual_equivalence },
        Criterion { name: "determinism", limit: None, run: determinism },
    ];

    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.limit) {
            (Ok(detail), Some(limit)) if elapsed > limit => {
                Err(format!("{detail}; took longer than {limit:?}"))
            }
            (o, _) => o,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!("{tag} {:<28} {:>8.2}s  {detail}", c.name, elapsed.as_secs_f64());
        if outcome.is_err() {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
