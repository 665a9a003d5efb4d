use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rdet_core::trace::snapshot_at;
use rdet_core::read_trace;

struct Truth {
    events: usize,
    blocks: usize,
    hunks: usize,
    markers: BTreeMap<String, u64>,
    covered_before: BTreeMap<String, usize>,
}

/// Writes `n` events straight as text, keeping its own tally.
fn generate(n: usize, seed: u64) -> (String, Truth) {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = String::with_capacity(n * 48);
    let mut truth = Truth {
        events: n,
        blocks: 0,
        hunks: 0,
        markers: BTreeMap::new(),
        covered_before: BTreeMap::new(),
    };
    let marker_at: HashSet<usize> = (0..6).map(|_| rng.gen_range(0..n)).collect();
    let mut covered: HashSet<(u32, u32)> = HashSet::new();
    let mut seq = rng.gen_range(1..100u64);
    for i in 0..n {
        seq += rng.gen_range(1..4);
        let th = rng.gen_range(1..5);
        if marker_at.contains(&i) {
            let label = format!("dump-{}", truth.markers.len());
            writeln!(out, r#"{{"seq":{seq},"th":"T{th}","t":"m","label":"{label}"}}"#).unwrap();
            truth.covered_before.insert(label.clone(), covered.len());
            truth.markers.insert(label, seq);
        } else if rng.gen_bool(0.2) {
            let id = rng.gen_range(1..=300);
            writeln!(out, r#"{{"seq":{seq},"th":"T{th}","t":"h","id":{id}}}"#).unwrap();
            truth.hunks += 1;
        } else {
            let f = rng.gen_range(0..50u32);
            let l = rng.gen_range(1..=500u32);
            writeln!(out, r#"{{"seq":{seq},"th":"T{th}","t":"b","f":"pkg/mod_{f}.py","l":{l}}}"#)
                .unwrap();
            covered.insert((f, l));
            truth.blocks += 1;
        }
    }
    (out, truth)
}

#[test]
fn million_event_stream() {
    let (text, truth) = generate(1_000_000, 7);
    let trace = read_trace(text.as_bytes()).unwrap();

    assert_eq!(trace.len(), truth.events);
    assert_eq!(
        trace.counts(),
        (truth.blocks, truth.hunks, truth.markers.len())
    );
    let markers: BTreeMap<String, u64> = trace
        .markers()
        .into_iter()
        .map(|(l, s)| (l.to_string(), s))
        .collect();
    assert_eq!(markers, truth.markers);
    for (label, expected) in &truth.covered_before {
        assert_eq!(snapshot_at(&trace, label).unwrap().covered.len(), *expected, "{label}");
    }
}
