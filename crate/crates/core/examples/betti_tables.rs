//! Graded Betti tables by Koszul homology, and regularity read off from them.

use regpow::resolution::KoszulPiece;
use regpow::{betti, betti_table, regularity, Degree, FamilySpec, ModuleKind, MonomialIdeal, RingSpec, Subquotient};

pub fn run_example() -> anyhow::Result<()> {
    let ring = RingSpec::new(["x", "y"])?;

    let koszul = Subquotient::cyclic(MonomialIdeal::maximal(&ring));
    println!("S/(x, y):\n{}", betti_table(&koszul));

    let square = Subquotient::cyclic(MonomialIdeal::maximal(&ring).power(2));
    let table = betti_table(&square);
    println!("S/(x, y)^2:\n{table}");
    assert_eq!((table.get(1, 2), table.get(2, 3)), (3, 2));
    assert_eq!(regularity(&square), Degree::Finite(1));

    // The single-bidegree route agrees with the table.
    for (i, j, b) in table.iter() {
        assert_eq!(betti(&square, i, j), b);
    }
    let piece = KoszulPiece::new(&square, 1, 2);
    println!("(K_1 ⊗ M)_2 has dimension {}, boundary rank {}", piece.dim(), piece.boundary.rank());

    // reg I for the first golden example: a module of dimension one.
    let x = FamilySpec::M2Reg.build()?;
    let power = x.module(ModuleKind::Power, 1)?;
    let table = betti_table(&power);
    println!("I = (xyv, u^3) in R:\n{table}reg = {}", table.regularity());
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
