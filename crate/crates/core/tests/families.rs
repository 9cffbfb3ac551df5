//! Family builders: structural invariants, closed forms and documented edge cases.

use regpow::constructions::{interpolate, verify, verify_against, Prediction};
use regpow::{parse_spec, serialize_spec, Degree, Engine, Error, Evaluator, FamilySpec, FunctionKind};

fn all_families() -> Vec<FamilySpec> {
    vec![
        FamilySpec::OneDim { d: 2, c: vec![3, 1] },
        FamilySpec::Dim1 { d: 2, c: vec![5, 2, 1] },
        FamilySpec::Dim1b { d: 1, c: vec![2, 4, 1] },
        FamilySpec::Ubiquity3 { d: 3, e: vec![9, 5, 2, 2] },
        FamilySpec::Ehl { r: 3 },
        FamilySpec::Cycle { t: 2 },
        FamilySpec::M2Reg,
        FamilySpec::M2Sdeg,
    ]
}

#[test]
fn builders_round_trip_through_spec_files() {
    for spec in all_families() {
        let x = spec.build().unwrap();
        let text = serialize_spec(&x);
        assert_eq!(parse_spec(&text).unwrap(), x, "{spec}");
        assert_eq!(serialize_spec(&parse_spec(&text).unwrap()), text);
    }
}

#[test]
fn one_dim_presentation() {
    let x = FamilySpec::OneDim { d: 2, c: vec![3, 1] }.build().unwrap();
    assert_eq!(serialize_spec(&x), "ring x y\nquot x^3 x*y^2\nideal y^2\n");
    assert_eq!(x.dim_quotient(), 0);
    // Trailing repeats do not change the instance.
    assert_eq!(FamilySpec::OneDim { d: 2, c: vec![3, 1, 1, 1] }.build().unwrap(), x);
}

#[test]
fn dim1_has_one_dimensional_quotient() {
    for c in [vec![3], vec![3, 1], vec![2, 4], vec![5, 2, 1], vec![1, 3, 2]] {
        for d in 1..=2 {
            for spec in [FamilySpec::Dim1 { d, c: c.clone() }, FamilySpec::Dim1b { d, c: c.clone() }] {
                assert_eq!(spec.build().unwrap().dim_quotient(), 1, "{spec}");
            }
        }
    }
}

#[test]
fn dim1_closed_forms() {
    let engine = Engine::new();
    for c in [vec![3, 1], vec![5, 2, 1], vec![2, 4, 1], vec![1, 3, 2]] {
        for d in 1..=2 {
            let spec = FamilySpec::Dim1 { d, c: c.clone() };
            assert!(verify(&spec, FunctionKind::RegDiff, 1, 5, &engine).unwrap().passed(), "{spec}");
            let spec = FamilySpec::Dim1b { d, c: c.clone() };
            assert!(verify(&spec, FunctionKind::RegQuotient, 1, 5, &engine).unwrap().passed(), "{spec}");
        }
    }
}

#[test]
fn dim1b_sdeg_needs_c0_above_one() {
    // With c₀ = 1, x1 ∈ Q makes I saturated, so sdeg I = −∞ rather than d + c₀ − 1.
    let engine = Engine::new();
    let spec = FamilySpec::Dim1b { d: 1, c: vec![1, 3, 2] };
    let report = verify(&spec, FunctionKind::Sdeg, 1, 4, &engine).unwrap();
    assert_eq!(report.first_failure(), Some(1));
    let x = spec.build().unwrap();
    assert_eq!(Evaluator::new(&x, &engine).value(FunctionKind::Sdeg, 1).unwrap(), Degree::NegInfinity);
    let spec = FamilySpec::Dim1b { d: 1, c: vec![2, 3, 2] };
    assert!(verify(&spec, FunctionKind::Sdeg, 1, 4, &engine).unwrap().passed());
}

#[test]
fn ubiquity3_interpolation() {
    assert_eq!(interpolate(3, &[9, 5, 2, 2]), [11, 11, 10, 9, 7, 6, 5, 4, 3, 2]);
    let engine = Engine::new();
    for (d, e) in [(3, vec![9, 5, 2, 2]), (2, vec![6, 4, 1]), (1, vec![3, 2, 1, 0])] {
        let spec = FamilySpec::Ubiquity3 { d, e: e.clone() };
        let x = spec.build().unwrap();
        let report = Evaluator::new(&x, &engine).report(FunctionKind::RegPower, 1, e.len() as u32 + 2, 3).unwrap();
        let got: Vec<i64> = report.defects().into_iter().map(Option::unwrap).collect();
        let want: Vec<i64> = (0..got.len()).map(|k| e[k.min(e.len() - 1)] as i64).collect();
        assert_eq!(got, want, "{spec}");
    }
}

#[test]
fn ehl_and_cycle_values() {
    let engine = Engine::new();
    for r in 1..=3 {
        assert!(verify(&FamilySpec::Ehl { r }, FunctionKind::Sdeg, 1, 4, &engine).unwrap().passed());
    }
    let x = FamilySpec::Cycle { t: 2 }.build().unwrap();
    let report = Evaluator::new(&x, &engine).report(FunctionKind::Sdeg, 1, 3, 3).unwrap();
    let defects: Vec<Option<i64>> = report.defects();
    assert_eq!(defects, [Some(0), Some(-2), Some(0)]);
}

#[test]
fn invalid_parameters() {
    let bad = [
        FamilySpec::OneDim { d: 0, c: vec![2] },
        FamilySpec::OneDim { d: 1, c: vec![1, 2] },
        FamilySpec::Dim1 { d: 1, c: vec![] },
        FamilySpec::Dim1b { d: 1, c: vec![2, 0] },
        FamilySpec::Ubiquity3 { d: 3, e: vec![5, 4] },
        FamilySpec::Ehl { r: 0 },
        FamilySpec::Cycle { t: 0 },
    ];
    for spec in bad {
        assert!(matches!(spec.build(), Err(Error::Input(_))), "{spec}");
    }
}

#[test]
fn closed_form_coverage() {
    assert!(matches!(FamilySpec::Cycle { t: 2 }.predict(FunctionKind::Sdeg), Err(Error::NoClosedForm { .. })));
    assert!(FamilySpec::M2Reg.predicted_functions().is_empty());
    assert_eq!(
        FamilySpec::OneDim { d: 1, c: vec![2] }.predicted_functions(),
        [FunctionKind::RegPower, FunctionKind::RegQuotient, FunctionKind::RegDiff]
    );
}

#[test]
fn corrupted_predictor_is_caught() {
    let engine = Engine::new();
    let spec = FamilySpec::Ubiquity3 { d: 3, e: vec![9, 5, 2, 2] };
    let good = spec.predict(FunctionKind::RegPower).unwrap();
    let off_late = Prediction::custom(FunctionKind::RegPower, move |n| if n == 4 { good.eval(n) - 1 } else { good.eval(n) });
    let report = verify_against(&spec, &off_late, 1, 6, &engine).unwrap();
    assert_eq!(report.first_failure(), Some(4));
    assert!(!report.passed());
}
