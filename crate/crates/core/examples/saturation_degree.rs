//! `sdeg Iⁿ` on the three saturation examples: a fluctuating one, a linear one
//! (`3n + r − 1`) and a cycle edge ideal with negative defects.

use regpow::{Degree, Engine, Evaluator, FamilySpec, FunctionKind};

fn sdeg(spec: &FamilySpec, to: u32) -> anyhow::Result<Vec<Degree>> {
    let x = spec.build()?;
    let engine = Engine::new();
    Ok(Evaluator::new(&x, &engine).values(FunctionKind::Sdeg, 1, to)?)
}

pub fn run_example() -> anyhow::Result<()> {
    let m2 = sdeg(&FamilySpec::M2Sdeg, 5)?;
    println!("m2_sdeg: {m2:?}");

    for r in [2, 3] {
        let values = sdeg(&FamilySpec::Ehl { r }, 4)?;
        println!("ehl(r={r}): {values:?}");
        for (k, v) in values.iter().enumerate() {
            assert_eq!(*v, Degree::Finite(3 * (k as i64 + 1) + r as i64 - 1));
        }
    }

    let t = 2;
    let spec = FamilySpec::Cycle { t };
    let x = spec.build()?;
    let engine = Engine::new();
    let report = Evaluator::new(&x, &engine).report(FunctionKind::Sdeg, 1, t as u32 + 1, 3)?;
    for row in &report.rows {
        println!("cycle(t={t}) n={} sdeg={} b_n={:?}", row.n, row.value, row.defect);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
