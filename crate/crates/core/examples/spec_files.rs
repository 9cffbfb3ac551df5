//! Spec-file round trips, CSV/JSON tables and the on-disk Betti cache.

use regpow::resolution::BettiCache;
use regpow::{parse_spec, serialize_spec, Engine, Evaluator, FamilySpec, FunctionKind, ResultTable};

pub fn run_example() -> anyhow::Result<()> {
    let x = parse_spec("ring x y\nquot x^3 x*y^2\nideal y^2\n")?;
    assert_eq!(x, FamilySpec::OneDim { d: 2, c: vec![3, 1] }.build()?);

    let text = serialize_spec(&FamilySpec::M2Reg.build()?);
    print!("{text}");
    assert_eq!(serialize_spec(&parse_spec(&text)?), text);

    if let Err(e) = parse_spec("ring x y\nideal z\n") {
        println!("{e}");
    }

    let x = parse_spec(&text)?;
    let plain = Engine::new();
    let report = Evaluator::new(&x, &plain).report(FunctionKind::RegPower, 1, 3, 3)?;
    let table = ResultTable::from(&report);
    print!("{}{}", table.to_csv(), table.to_json());

    let dir = tempfile::tempdir()?;
    let path = dir.path().join("betti.json");
    let cached = Engine::with_cache(BettiCache::open(&path)?);
    let again = ResultTable::from(&Evaluator::new(&x, &cached).report(FunctionKind::RegPower, 1, 3, 3)?);
    cached.cache().unwrap().persist()?;
    assert_eq!(again, table);
    println!("cache holds {} tables", BettiCache::open(&path)?.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
