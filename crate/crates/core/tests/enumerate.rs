use drg_core::enumerate::{enumerate, enumerate_exhaustive, enumerate_with_progress, SearchSpec};
use drg_core::{Assumption, RuleId, RuleSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn pruning_is_sound_on_small_specs() {
    let specs = [
        SearchSpec::new(3, 8),
        SearchSpec::new(2, 10),
        SearchSpec::new(1, 6),
        SearchSpec::new(4, 8).with_filter("3*c2 > k").unwrap(),
        SearchSpec::new(3, 8)
            .with_filter("c2 >= 2, b1 - a2 != 3")
            .unwrap()
            .with_k_min(2),
        SearchSpec::new(3, 8).with_assumption(Assumption::ContainsQuadrangle),
        SearchSpec::new(3, 8).with_rules(RuleSet::all().without(RuleId::R0)),
    ];
    for spec in specs {
        let pruned = enumerate(&spec).unwrap();
        let brute = enumerate_exhaustive(&spec).unwrap();
        assert_eq!(pruned.survivors, brute.survivors, "{spec:?}");
        assert!(pruned.nodes <= brute.nodes);
    }
}

#[test]
fn identical_specs_give_identical_results() {
    for spec in [
        SearchSpec::new(4, 16).with_filter("3*c2 > k").unwrap(),
        SearchSpec::new(3, 10).with_k_min(2),
    ] {
        assert_eq!(enumerate(&spec).unwrap(), enumerate(&spec).unwrap());
    }
}

#[test]
fn more_rules_never_add_survivors() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..6 {
        let mut small = RuleSet::empty();
        for &id in RuleId::ALL {
            if rng.gen_bool(0.5) {
                small = small.with(id);
            }
        }
        let mut large = small;
        for &id in RuleId::ALL {
            if rng.gen_bool(0.5) {
                large = large.with(id);
            }
        }
        let base = SearchSpec::new(3, 7).with_k_min(2);
        let few = enumerate(&base.clone().with_rules(small)).unwrap();
        let many = enumerate(&base.with_rules(large)).unwrap();
        for s in &many.survivors {
            assert!(few.survivors.iter().any(|t| t.array == s.array), "{} appeared", s.array);
        }
    }
}

#[test]
fn survivors_are_sorted_and_named() {
    let r = enumerate(&SearchSpec::new(3, 6)).unwrap();
    assert!(r.survivors.windows(2).all(|w| w[0].array < w[1].array));
    let cube = r
        .survivors
        .iter()
        .find(|s| s.array.to_string() == "{3,2,1;1,2,3}")
        .unwrap();
    assert_eq!(cube.exception.as_deref(), Some("3-cube"));
    assert!(r.survivors.iter().any(|s| s.exception.as_deref() == Some("crown-5")));
}

#[test]
fn progress_fires_every_million_nodes() {
    let mut ticks = Vec::new();
    let spec = SearchSpec::new(8, 16).with_filter("4*c2 > k").unwrap();
    let r = enumerate_with_progress(&spec, &mut |p| ticks.push(p.nodes)).unwrap();
    assert_eq!(ticks.len() as u64, r.nodes / 1_000_000);
    assert!(ticks.iter().enumerate().all(|(i, &n)| n == (i as u64 + 1) * 1_000_000));
}
