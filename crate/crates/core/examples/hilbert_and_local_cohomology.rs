//! Hilbert functions, top degrees and `H⁰_m` of monomial subquotients.

use regpow::{Degree, MonomialIdeal, RingSpec, Subquotient};

pub fn run_example() -> anyhow::Result<()> {
    let ring = RingSpec::new(["x", "y"])?;
    let parse = |gens: &[&str]| -> anyhow::Result<MonomialIdeal> {
        let ms = gens.iter().map(|g| ring.parse_monomial(g).unwrap());
        Ok(MonomialIdeal::minimalize(&ring, ms)?)
    };

    let ci = Subquotient::cyclic(parse(&["x^2", "y^2"])?);
    let h: Vec<u64> = (0..4).map(|a| ci.hilbert(a)).collect();
    println!("H(S/(x^2, y^2), 0..4) = {h:?}, top degree {}", ci.top_degree()?);
    assert_eq!(h, [1, 2, 1, 0]);

    // P/P² for the one_dim family with d = 2, c = (3, 1).
    let q = parse(&["x^3", "x*y^2"])?;
    let m = Subquotient::new(parse(&["y^2"])?.sum(&q)?, parse(&["y^4"])?.sum(&q)?)?;
    for a in 0..6 {
        let basis: Vec<String> = m.basis(a).iter().map(|u| ring.format_monomial(u)).collect();
        println!("degree {a}: {basis:?}");
    }
    assert!(m.is_artinian());
    assert_eq!(m.top_degree()?, Degree::Finite(3));

    let h0 = Subquotient::cyclic(parse(&["x^2", "x*y"])?).h0();
    println!("H0 of S/(x^2, x*y) = {}/{}, top degree {}", h0.top(), h0.bottom(), h0.top_degree()?);
    assert_eq!(h0.top_degree()?, Degree::Finite(1));

    let saturated = Subquotient::cyclic(parse(&["x"])?);
    assert_eq!(saturated.a0(), Degree::NegInfinity);
    println!("a(H0(S/(x))) = {}", saturated.a0());
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
