//! Engine values against closed forms, for every family that has one, and a negative control.

use regpow::constructions::{verify, verify_against, Prediction};
use regpow::{Engine, FamilySpec, FunctionKind};

pub fn run_example() -> anyhow::Result<()> {
    let engine = Engine::new();
    let families = [
        FamilySpec::OneDim { d: 2, c: vec![3, 1] },
        FamilySpec::OneDim { d: 1, c: vec![6, 3, 2, 2] },
        FamilySpec::Dim1 { d: 2, c: vec![2, 4, 1] },
        FamilySpec::Dim1b { d: 1, c: vec![3, 2, 4] },
        FamilySpec::Ubiquity3 { d: 3, e: vec![9, 5, 2] },
        FamilySpec::Ehl { r: 2 },
    ];
    for spec in &families {
        for f in spec.predicted_functions() {
            let report = verify(spec, f, 1, 5, &engine)?;
            println!("{spec} {f}: {}", if report.passed() { "pass" } else { "FAIL" });
            assert!(report.passed(), "{report}");
        }
    }

    let spec = &families[0];
    let good = spec.predict(FunctionKind::RegDiff)?;
    let corrupted = Prediction::custom(FunctionKind::RegDiff, move |n| good.eval(n) + 1);
    let report = verify_against(spec, &corrupted, 1, 5, &engine)?;
    print!("corrupted predictor:\n{report}");
    assert_eq!(report.first_failure(), Some(1));
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
