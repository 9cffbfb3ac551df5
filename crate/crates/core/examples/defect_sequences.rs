//! Defect sequences and window diagnostics.

use regpow::{Engine, Evaluator, FamilySpec, FunctionKind};

pub fn run_example() -> anyhow::Result<()> {
    let engine = Engine::new();

    // Artinian R/I: c_n is weakly decreasing and a_n − a_(n+1) ≤ d.
    let spec = FamilySpec::OneDim { d: 2, c: vec![7, 4, 3, 1] };
    let x = spec.build()?;
    let eval = Evaluator::new(&x, &engine);
    for f in [FunctionKind::RegDiff, FunctionKind::RegQuotient, FunctionKind::RegPower] {
        let r = eval.report(f, 1, 7, 3)?;
        println!(
            "{spec} {f}: defects {:?} stable suffix {} decreasing {:?} bounded drops {:?}",
            r.defects().into_iter().flatten().collect::<Vec<_>>(),
            r.stable_suffix_length,
            r.weakly_decreasing,
            r.drops_bounded_by_slope
        );
    }

    // Prescribed reg Iⁿ − dn.
    let spec = FamilySpec::Ubiquity3 { d: 3, e: vec![9, 5, 2, 2] };
    let x = spec.build()?;
    let r = Evaluator::new(&x, &engine).report(FunctionKind::RegPower, 1, 6, 3)?;
    let e: Vec<i64> = r.defects().into_iter().flatten().collect();
    println!("{spec}: e_n = {e:?}, window-stable: {}", r.stabilized_in_window);
    assert_eq!(e, [9, 5, 2, 2, 2, 2]);
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
