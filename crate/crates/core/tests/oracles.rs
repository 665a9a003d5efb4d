mod common;

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rdet_core::rank::{execution_order_rank, executed_filter};
use rdet_core::textual::{RegionDocument, Scorer, TermIndex, ZoneToken, ZoneWeights, Query, SynonymTable};
use rdet_core::trace::{coverage_diff, hunk_window, snapshot_at};
use rdet_core::{localize, ChangeRegion, HunkId, LineRange, LocalizeOptions, RankingMode};

use common::*;

fn regions_for(ids: &BTreeSet<HunkId>) -> Vec<ChangeRegion> {
    ids.iter()
        .map(|&id| ChangeRegion {
            hunk_id: id,
            file: "x.py".into(),
            lines: LineRange::single(id.0 as u32).unwrap(),
            executed: true,
        })
        .collect()
}

#[test]
fn execution_order_matches_backward_scan() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..150 {
        let n = rng.gen_range(0..800);
        let hunks = rng.gen_range(1..60);
        let trace = random_trace(&mut rng, n, hunks, 3);
        let marker = format!("m{}", rng.gen_range(0..3));
        let candidates: BTreeSet<HunkId> =
            (1..=hunks).filter(|_| rng.gen_bool(0.6)).map(HunkId).collect();
        let k = if rng.gen_bool(0.3) { None } else { Some(rng.gen_range(1..400)) };

        let window = hunk_window(&trace, &marker, k).unwrap();
        let order = execution_order_rank(&window, &regions_for(&candidates));
        let expected = eo_oracle(trace.events(), &marker, k, &candidates);
        assert_eq!(order.len(), expected.len());
        for (id, want) in &expected {
            let got = order.entry(*id).unwrap();
            assert_eq!(got.eo_position, want.position);
            assert_eq!(got.trace_distance, want.trace_distance);
            assert_eq!(got.last_seq, want.last_seq);
        }
    }
}

#[test]
fn coverage_diff_matches_membership() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..100 {
        let n = rng.gen_range(0..600);
        let trace = random_trace(&mut rng, n, 10, 2);
        let bug = snapshot_at(&trace, "m1").unwrap();
        let base = snapshot_at(&trace, "m0").unwrap();
        let expected = difference_oracle(
            &covered_before(trace.events(), Some("m1")),
            &covered_before(trace.events(), Some("m0")),
        );
        assert_eq!(coverage_diff(&bug, &base), expected);
    }
}

#[test]
fn textual_scores_match_naive_definition() {
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..20 {
        let docs: Vec<Vec<(String, rdet_core::textual::Zone)>> = (0..12)
            .map(|_| {
                (0..rng.gen_range(0..30))
                    .map(|_| (random_word(&mut rng).to_string(), ZONES[rng.gen_range(0..5)]))
                    .collect()
            })
            .collect();
        let query: Vec<String> = (0..rng.gen_range(1..4)).map(|_| random_word(&mut rng).to_string()).collect();
        let synonyms = vec![("socket".to_string(), "stream".to_string(), 0.5)];
        let weights = ZoneWeights::default();

        let region_docs: Vec<RegionDocument> = docs
            .iter()
            .enumerate()
            .map(|(i, d)| RegionDocument {
                region: ChangeRegion {
                    hunk_id: HunkId(i as u64 + 1),
                    file: "x.py".into(),
                    lines: LineRange::single(1).unwrap(),
                    executed: true,
                },
                tokens: d.iter().map(|(t, z)| ZoneToken { text: t.clone(), zone: *z }).collect(),
            })
            .collect();
        let index = TermIndex::build(&region_docs);
        let table = SynonymTable::new(synonyms.clone()).unwrap();
        let scorer = Scorer { index: &index, weights, synonyms: Some(&table) };
        let q = Query::from_terms(&query);
        let expected = naive_scores(&docs, &query, &weights, &synonyms);
        for (doc, want) in region_docs.iter().zip(&expected) {
            let got = scorer.score(&q, doc);
            assert!((got - want).abs() <= 1e-9 * want.abs().max(1.0), "{got} vs {want}");
        }
    }
}

#[test]
fn planted_sessions_are_well_formed() {
    let mut rng = StdRng::seed_from_u64(5);
    let session = planted_session(&mut rng, SessionShape::default());
    assert!(session.diff.len() >= 500);
    assert!(session.noise_events <= 50);
    let bug = snapshot_at(&session.trace, "bug").unwrap();
    let executed: BTreeSet<HunkId> = executed_filter(&session.diff, &bug).iter().map(|r| r.hunk_id).collect();
    assert!(executed.len() >= 150, "{} executed hunks", executed.len());
    assert!(executed.contains(&session.planted));

    let opts = LocalizeOptions {
        baseline_marker: Some("baseline".into()),
        mode: Some(RankingMode::EoDiff),
        ..LocalizeOptions::default()
    };
    let loc = localize(&session.diff, &session.trace, &session.methods, None, &opts).unwrap();
    let planted = loc.results.iter().find(|r| r.region.hunk_id == session.planted).unwrap();
    assert!(planted.diff_flag);
}
