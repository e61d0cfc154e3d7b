//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::Command;
use std::time::Instant;

use cox_core::arith::{int, rat};
use cox_core::catalog::{applicable_profiles, catalog, exponents, parameters};
use cox_core::powersum::{
    exponent_power_sum, height_power_sum, heightsum_closed, heightsum_closed_with, powersum_closed,
    powersum_closed_with, powersum_direct, todd_power_sums,
};
use cox_core::verify::{
    check_beta_formula, check_expsum, check_faulhaber, check_gamma_formula, check_gamma_specializations,
    check_h_relation, check_s4_non_universality, check_t_integrality, check_t_table, check_todd_odd_independence,
    check_todd_symmetry, run, CheckReport, Fault, RunConfig, Suite,
};
use cox_core::{CoxeterType, Profile, Rational};
use serde_json::Value;

type Outcome = Result<String, String>;

fn first_failure(reports: &[CheckReport]) -> Option<String> {
    reports.iter().find(|r| !r.passed).map(ToString::to_string)
}

fn ty(s: &str) -> CoxeterType {
    s.parse().unwrap()
}

fn main_theorem() -> Outcome {
    let start = Instant::now();
    let types = catalog(12, 30);
    let mut count = 0;
    for &t in &types {
        let ps = parameters(t, Profile::default_for(t)).unwrap();
        let direct: Vec<Rational> = (0..=12).map(|n| powersum_direct(t, n).value).collect();
        for p in 1..=3 {
            let todd = todd_power_sums(&ps, 12, p);
            for n in 0..=12 {
                if todd[n] != direct[n] {
                    return Err(format!("{t} n={n} p={p}: todd {} != direct {}", todd[n], direct[n]));
                }
                count += 1;
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if secs > 30.0 {
        return Err(format!("{count} equalities hold but took {secs:.1}s"));
    }
    Ok(format!("{} types, {count} equalities, {secs:.2}s single-threaded", types.len()))
}

fn cyclotomic() -> Outcome {
    let mut reports = Vec::new();
    for t in catalog(12, 30) {
        for p in applicable_profiles(t) {
            reports.push(check_expsum(t, p).unwrap());
        }
    }
    for must in ["D4 [standard]", "I2(7) [redefined]", "I2(7) [standard]"] {
        if !reports.iter().any(|r| r.subject == must) {
            return Err(format!("{must} not covered"));
        }
    }
    match first_failure(&reports) {
        Some(f) => Err(f),
        None => Ok(format!("{} (type, profile) pairs", reports.len())),
    }
}

/// The fourteen table rows with their printed constants:
/// type, r, h, gamma, d, nu, A, B, alpha, beta.
fn table_rows() -> Vec<(&'static str, [Rational; 9])> {
    let i = int;
    vec![
        ("A1", [i(1), i(2), i(4), i(1), i(1), i(1), i(1), i(1), i(1)]),
        ("A6", [i(6), i(7), i(49), i(1), i(6), i(6), i(6), i(1), i(6)]),
        ("C5", [i(5), i(10), i(108), i(2), i(3), i(10), i(5), i(2), i(5)]),
        ("D6", [i(6), i(10), i(100), i(2), i(2), i(6), i(8), i(2), i(4)]),
        ("E6", [i(6), i(12), i(144), i(3), i(0), i(8), i(9), i(3), i(4)]),
        ("E7", [i(7), i(18), i(324), i(4), i(0), i(12), i(14), i(4), i(6)]),
        ("E8", [i(8), i(30), i(900), i(6), i(0), i(20), i(24), i(6), i(10)]),
        ("F4", [i(4), i(12), i(162), i(4), i(0), i(8), i(12), i(4), i(6)]),
        ("G2", [i(2), i(6), i(48), i(3), i(0), i(8), i(3), i(4), i(3)]),
        ("H2", [i(2), i(5), i(31), i(2), i(1), i(6), i(2), i(3), i(2)]),
        ("H3", [i(3), i(10), i(124), i(4), i(0), i(12), i(6), i(4), i(6)]),
        ("H4", [i(4), i(30), i(1116), i(10), i(0), i(20), i(36), i(10), i(18)]),
        ("I2(9)", [i(2), i(9), i(123), i(4), i(1), i(14), rat(9, 2), i(7), rat(9, 2)]),
        ("I2(10)", [i(2), i(10), i(156), i(5), i(0), i(16), i(5), i(8), i(5)]),
    ]
}

fn json_rational(v: &Value) -> Option<Rational> {
    match v {
        Value::Number(n) => Some(int(n.as_i64()?)),
        Value::String(s) => cox_core::arith::parse_rational(s).ok(),
        _ => None,
    }
}

fn table_reproduction() -> Outcome {
    let keys = ["r", "h", "gamma", "d", "nu", "A", "B", "alpha", "beta"];
    let rows = table_rows();
    for (name, expected) in &rows {
        let out = Command::new(env!("CARGO_BIN_EXE_cox"))
            .args(["info", name, "--profile", "standard", "--format", "json"])
            .output()
            .map_err(|e| e.to_string())?;
        if !out.status.success() {
            return Err(format!("cox info {name} exited with {}", out.status));
        }
        let doc: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
        for (key, want) in keys.iter().zip(expected) {
            let got = json_rational(&doc[key]);
            if got.as_ref() != Some(want) {
                return Err(format!("cox info {name}: {key} = {} but the table says {want}", doc[key]));
            }
        }
    }
    let mut relations = 0;
    for t in catalog(12, 30) {
        for r in [check_gamma_formula(t), check_beta_formula(t)] {
            relations += r.checks;
            if !r.passed {
                return Err(r.to_string());
            }
        }
        for p in applicable_profiles(t) {
            let r = check_h_relation(t, p).unwrap();
            relations += r.checks;
            if !r.passed {
                return Err(r.to_string());
            }
        }
    }
    Ok(format!("{} rows via cox info, {relations} relation instances", rows.len()))
}

fn closed_forms() -> Outcome {
    let types = catalog(12, 30);
    for &t in &types {
        let ps = parameters(t, Profile::default_for(t)).unwrap();
        let e = exponents(t);
        for n in 0..=5 {
            let (closed, direct) = (powersum_closed_with(&ps, n).unwrap(), exponent_power_sum(&e, n));
            if closed != direct {
                return Err(format!("{t} S{n}: closed {closed} != direct {direct}"));
            }
        }
        for n in 0..=4 {
            let direct = height_power_sum(&e, n).map_err(|e| e.to_string())?;
            let closed = heightsum_closed_with(&ps, n).unwrap();
            if closed != direct {
                return Err(format!("{t} H{n}: closed {closed} != direct {direct}"));
            }
        }
    }
    let spots = [
        (powersum_closed(ty("E8"), 2).unwrap().value, 2360),
        (powersum_closed(ty("E8"), 3).unwrap().value, 52200),
        (powersum_closed(ty("A2"), 4).unwrap().value, 17),
        (powersum_closed(ty("A2"), 5).unwrap().value, 33),
        (heightsum_closed(ty("A2"), 1).unwrap().value, 4),
        (heightsum_closed(ty("A2"), 2).unwrap().value, 6),
        (heightsum_closed(ty("A2"), 3).unwrap().value, 10),
        (heightsum_closed(ty("A2"), 4).unwrap().value, 18),
    ];
    for (i, (got, want)) in spots.iter().enumerate() {
        if got != &int(*want) {
            return Err(format!("spot value {i}: {got} != {want}"));
        }
    }
    Ok(format!("{} types, S0..S5 and H0..H4, {} spot values", types.len(), spots.len()))
}

fn todd_pit() -> Outcome {
    let mut reports = Vec::new();
    for total in 0..=8 {
        for a in 0..=total {
            reports.push(check_todd_symmetry(a, total - a, 50, 42));
        }
    }
    reports.push(check_todd_odd_independence(&[3, 5, 7], 50, 42));
    match first_failure(&reports) {
        Some(f) => Err(f),
        None => Ok(format!("{} (a,b) pairs at 50 samples, odd n in {{3,5,7}}", reports.len() - 1)),
    }
}

fn t_transformation() -> Outcome {
    let reports = [check_t_table(20), check_t_integrality(5, 30)];
    match first_failure(&reports) {
        Some(f) => Err(f),
        None => Ok("3 table rows to order 20, T^k for k <= 5 to order 30".into()),
    }
}

fn specializations() -> Outcome {
    let mut reports = Vec::new();
    for r in 1..=10 {
        reports.push(check_gamma_specializations(CoxeterType::new(cox_core::Family::A, r).unwrap(), 10).unwrap());
        if r >= 2 {
            reports.push(check_gamma_specializations(CoxeterType::new(cox_core::Family::C, r).unwrap(), 10).unwrap());
        }
    }
    reports.push(check_faulhaber(8, 20));
    match first_failure(&reports) {
        Some(f) => Err(f),
        None => Ok(format!("{} A/C reports for r <= 10 (C from r = 2), n <= 10; Faulhaber n <= 8, r <= 20", reports.len() - 1)),
    }
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

fn negative_controls() -> Outcome {
    let s4 = check_s4_non_universality(10);
    if !s4.passed {
        return Err(s4.to_string());
    }
    for (suite, fault) in FAULTS {
        let mut cfg = RunConfig::new(8, 10, 8, 42);
        cfg.suites = vec![suite];
        let clean = run(&cfg);
        if let Some(f) = first_failure(&clean) {
            return Err(format!("{suite} fails without a fault: {f}"));
        }
        cfg.fault = Some(fault.parse::<Fault>().map_err(|e| e.to_string())?);
        let broken = run(&cfg);
        match broken.iter().find(|r| !r.passed) {
            Some(r) if r.witness.is_some() => {}
            Some(_) => return Err(format!("{suite} failed under {fault} without a witness")),
            None => return Err(format!("{suite} did not detect {fault}")),
        }
    }
    let out = Command::new(env!("CARGO_BIN_EXE_cox"))
        .args(["verify", "--suite", "gamma", "--inject-fault", "E8.gamma=901", "--quiet"])
        .output()
        .map_err(|e| e.to_string())?;
    if out.status.code() != Some(1) || !String::from_utf8_lossy(&out.stdout).contains("witness") {
        return Err(format!("cox verify with a fault exited {:?}", out.status.code()));
    }
    Ok(format!("S4(A9)/9 != S4(D6)/6; {} suites each fail under one fault", FAULTS.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("main theorem sweep", main_theorem),
        ("cyclotomic identity", cyclotomic),
        ("table reproduction", table_reproduction),
        ("closed-form sweep", closed_forms),
        ("Todd symmetry PIT", todd_pit),
        ("T-transformation", t_transformation),
        ("specializations", specializations),
        ("negative controls", negative_controls),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS criterion {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
