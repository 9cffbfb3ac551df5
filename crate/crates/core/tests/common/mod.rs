//! Shared helpers: monomial enumeration, a brute-force membership oracle and the seeded
//! random corpus of presented ideals.

#![allow(dead_code)]

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use regpow::{Monomial, MonomialIdeal, PresentedIdeal, RingSpec};

pub fn ring(nvars: usize) -> Arc<RingSpec> {
    let names: Vec<String> = (0..nvars).map(|i| format!("x{i}")).collect();
    RingSpec::new(names).unwrap()
}

/// All monomials in `nvars` variables of total degree at most `max_degree`.
pub fn monomials_up_to(nvars: usize, max_degree: u32) -> Vec<Monomial> {
    fn go(k: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if k == exps.len() {
            out.push(Monomial::new(exps.clone()));
            return;
        }
        for a in 0..=left {
            exps[k] = a;
            go(k + 1, left - a, exps, out);
        }
        exps[k] = 0;
    }
    let mut out = Vec::new();
    go(0, max_degree, &mut vec![0; nvars], &mut out);
    out
}

/// Membership by definition: some generator divides `u`.
pub fn oracle_contains(gens: &[Monomial], u: &Monomial) -> bool {
    gens.iter().any(|g| g.divides(u))
}

pub fn random_monomial(rng: &mut impl Rng, nvars: usize, degree: u32) -> Monomial {
    let mut exps = vec![0u32; nvars];
    for _ in 0..degree {
        exps[rng.gen_range(0..nvars)] += 1;
    }
    Monomial::new(exps)
}

pub fn random_ideal(rng: &mut impl Rng, ring: &Arc<RingSpec>, count: usize, degrees: std::ops::RangeInclusive<u32>) -> MonomialIdeal {
    let gens: Vec<Monomial> = (0..count)
        .map(|_| {
            let degree = rng.gen_range(degrees.clone());
            random_monomial(rng, ring.num_vars(), degree)
        })
        .collect();
    MonomialIdeal::minimalize(ring, gens).unwrap()
}

/// An equigenerated `I = (P + Q)/Q` with `Iⁿ ≠ 0` for `n ≤ max_power`, or `None` when the random
/// draw does not qualify.
pub fn random_presented(rng: &mut impl Rng, max_power: u32) -> Option<PresentedIdeal> {
    let nvars = rng.gen_range(2..=4);
    let s = ring(nvars);
    let d = rng.gen_range(1..=4);
    let mut q = Vec::new();
    if rng.gen_bool(0.6) {
        // Pure powers make R Artinian.
        for i in 0..nvars {
            q.push(s.var(i).pow(rng.gen_range(d + 1..=d + 3)));
        }
    }
    for _ in 0..rng.gen_range(0..=2) {
        let degree = rng.gen_range(2..=d + 3);
        q.push(random_monomial(rng, nvars, degree));
    }
    let q = MonomialIdeal::minimalize(&s, q).unwrap();
    let count = rng.gen_range(1..=3);
    let p = random_ideal(rng, &s, count, d..=d);
    let x = PresentedIdeal::new(q, p).ok()?;
    if !x.is_equigenerated() {
        return None;
    }
    // Errors when some power vanishes in R.
    x.power_sums(max_power).ok()?;
    Some(x)
}

pub fn corpus(seed: u64, size: usize, max_power: u32) -> Vec<PresentedIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(size);
    while out.len() < size {
        if let Some(x) = random_presented(&mut rng, max_power) {
            out.push(x);
        }
    }
    out
}
