use qcircuit_core::algos::{build_bell, build_shor15, run_shor15_pipeline};
use qcircuit_core::sim::{exact_distribution, run_shots};

#[test]
fn bell_exact_and_sampled() {
    let d = exact_distribution(&build_bell()).unwrap();
    assert_eq!(d.keys().collect::<Vec<_>>(), ["00", "11"]);
    assert!((d.get("00") - 0.5).abs() <= 1e-12);
    let counts = run_shots(&build_bell(), 1000, 0).unwrap();
    assert!(counts.keys().all(|k| k == "00" || k == "11"));
}

#[test]
fn shor15_exact_support() {
    let d = exact_distribution(&build_shor15()).unwrap();
    let keys: Vec<_> = d.keys().collect();
    assert_eq!(keys, ["00000000", "01000000", "10000000", "11000000"]);
    for (k, p) in d.iter() {
        assert!((p - 0.25).abs() <= 1e-9, "{k}: {p}");
    }
}

#[test]
fn shor15_sampled_support() {
    let counts = run_shots(&build_shor15(), 1000, 1).unwrap();
    for (k, n) in counts.iter() {
        assert!(
            ["00000000", "01000000", "10000000", "11000000"].contains(&k),
            "unexpected key {k}"
        );
        assert!((200..=300).contains(&n), "{k}: {n}");
    }
}

#[test]
fn pipeline_is_reproducible() {
    let a = run_shor15_pipeline(1000, 17).unwrap();
    let b = run_shor15_pipeline(1000, 17).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.factors.iter().copied().collect::<Vec<_>>(), [3, 5, 15]);
}

#[test]
fn pipeline_with_only_zero_outcome_finds_nothing() {
    let seed = (0..)
        .find(|&s| run_shots(&build_shor15(), 1, s).unwrap().get("00000000") == 1)
        .unwrap();
    let report = run_shor15_pipeline(1, seed).unwrap();
    assert!(report.measured_values.is_empty());
    assert!(report.factors.is_empty());
    assert!(report.bases.iter().all(|b| !b.found_period()));
}
