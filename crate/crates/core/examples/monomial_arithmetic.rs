//! Minimal generators, sums, products, intersections, colons and saturation.

use regpow::{MonomialIdeal, RingSpec};

fn ideal(ring: &std::sync::Arc<RingSpec>, gens: &[&str]) -> anyhow::Result<MonomialIdeal> {
    let monomials = gens
        .iter()
        .map(|g| ring.parse_monomial(g).map_err(|e| anyhow::anyhow!(e.message)))
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(MonomialIdeal::minimalize(ring, monomials)?)
}

pub fn run_example() -> anyhow::Result<()> {
    let ring = RingSpec::new(["x", "y"])?;
    let m = MonomialIdeal::maximal(&ring);

    let i = ideal(&ring, &["x^2", "x^2*y", "y^3"])?;
    println!("minimalize(x^2, x^2*y, y^3) = {i}");
    assert_eq!(i, ideal(&ring, &["x^2", "y^3"])?);

    println!("m^2 = {}", m.power(2));
    assert_eq!(m.power(2).gens().len(), 3);

    let q = ideal(&ring, &["x^3"])?.sum(&ideal(&ring, &["x*y^2"])?)?;
    println!("(x^3) + (x*y^2) = {q}");

    let meet = ideal(&ring, &["x^2", "x*y"])?.intersect(&ideal(&ring, &["y^2"])?)?;
    println!("(x^2, x*y) ∩ (y^2) = {meet}");
    assert_eq!(meet, ideal(&ring, &["x*y^2"])?);

    let x = ring.var(0);
    let colon = ideal(&ring, &["x^2", "x*y"])?.colon(&x)?;
    println!("(x^2, x*y) : x = {colon}");
    assert_eq!(colon, m);

    let sat = ideal(&ring, &["x^2", "x*y"])?.saturate_maximal();
    println!("saturation of (x^2, x*y) = {sat}");
    assert_eq!(sat, ideal(&ring, &["x"])?);

    let j = ideal(&ring, &["x^2", "y^2"])?;
    println!("dim S/{j} = {}, dim S/(x) = {}", j.krull_dim_quotient(), ideal(&ring, &["x"])?.krull_dim_quotient());
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
