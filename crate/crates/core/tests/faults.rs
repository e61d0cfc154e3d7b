use cox_core::verify::{all_passed, run, CheckReport, Fault, RunConfig, Suite};

fn sweep(suite: Suite, fault: Option<&str>) -> Vec<CheckReport> {
    let mut cfg = RunConfig::new(8, 8, 6, 42);
    cfg.suites = vec![suite];
    cfg.jobs = 2;
    cfg.todd_samples = 5;
    cfg.fault = fault.map(|f| f.parse::<Fault>().unwrap());
    run(&cfg)
}

const FAULTS: [(Suite, &str); 12] = [
    (Suite::Expsum, "E8.A=21"),
    (Suite::Multiset, "E8.A=21"),
    (Suite::Gamma, "E8.gamma=901"),
    (Suite::HRelation, "E8.d=5"),
    (Suite::Beta, "E8.beta=11"),
    (Suite::Symmetry, "E8.m2=8"),
    (Suite::ToddSymm, "todd.lambda3=1/7"),
    (Suite::Kostant, "E8.d=5"),
    (Suite::TTransform, "t.a3=4"),
    (Suite::Specializations, "A3.B=4"),
    (Suite::Gamma34, "E8.gamma=901"),
    (Suite::Methods, "E8.m2=8"),
];

#[test]
fn every_suite_passes_clean() {
    for suite in Suite::ALL {
        let reports = sweep(suite, None);
        assert!(!reports.is_empty(), "{suite}");
        for r in &reports {
            assert!(r.passed, "{r}");
        }
    }
}

#[test]
fn every_suite_fails_under_a_single_fault() {
    for (suite, fault) in FAULTS {
        let reports = sweep(suite, Some(fault));
        let failed: Vec<_> = reports.iter().filter(|r| !r.passed).collect();
        assert!(!failed.is_empty(), "{suite} did not notice {fault}");
        for r in failed {
            assert!(r.witness.is_some());
        }
    }
}

#[test]
fn gamma_fault_names_the_type_and_value() {
    let reports = sweep(Suite::Gamma, Some("E8.gamma=901"));
    let bad: Vec<_> = reports.iter().filter(|r| !r.passed).collect();
    assert_eq!(bad.len(), 1);
    assert!(bad[0].subject.starts_with("E8"));
    assert!(bad[0].witness.as_ref().unwrap().contains("901"));
}

#[test]
fn output_is_independent_of_worker_count() {
    let mut cfg = RunConfig::new(6, 8, 6, 7);
    cfg.todd_samples = 4;
    cfg.jobs = 1;
    let one = run(&cfg);
    cfg.jobs = 4;
    assert_eq!(one, run(&cfg));
    assert!(all_passed(&one));
}
