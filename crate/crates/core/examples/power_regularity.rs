//! `reg Iⁿ`, `reg R/Iⁿ` and `reg Iⁿ⁻¹/Iⁿ` for `R = ℚ[x,y,u,v]/(x⁷,x⁴y³,x³y⁴,y⁷,xu⁶,yu⁶,u⁶v)`,
//! `I = (xyv, u³)`.

use regpow::{Engine, Evaluator, FamilySpec, FunctionKind, Subquotient};

fn show(values: &[regpow::Degree]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
}

pub fn run_example() -> anyhow::Result<()> {
    let x = FamilySpec::M2Reg.build()?;
    let engine = Engine::new();
    let eval = Evaluator::new(&x, &engine);

    let power = eval.values(FunctionKind::RegPower, 1, 5)?;
    let quotient = eval.values(FunctionKind::RegQuotient, 1, 5)?;
    let diff = eval.values(FunctionKind::RegDiff, 1, 5)?;
    println!("reg I^n     = ({})", show(&power));
    println!("reg R/I^n   = ({})", show(&quotient));
    println!("reg I^n-1/I^n = ({})", show(&diff));
    println!("reg R       = {}", eval.ring_regularity());

    // The ideal P^n + Q of the polynomial ring, as opposed to the module I^n over R.
    let lifted: Vec<_> = (1..=5)
        .map(|n| Ok(engine.regularity(&Subquotient::cyclic(x.power_sums(n)?[n as usize].clone())) + 1))
        .collect::<anyhow::Result<_>>()?;
    println!("reg (P^n + Q) in S = ({})", show(&lifted));

    let report = eval.report(FunctionKind::RegPower, 1, 5, 3)?;
    let e: Vec<i64> = report.defects().into_iter().flatten().collect();
    let drops: Vec<i64> = report.defect_drops.iter().flatten().copied().collect();
    println!("e_n = {e:?}, e_n - e_(n+1) = {drops:?}");
    assert!(drops.windows(2).any(|w| w[0] < w[1]), "differences are not weakly decreasing");
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
