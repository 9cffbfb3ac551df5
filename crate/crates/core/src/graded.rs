//! Monomial subquotient modules `A/B` and their graded pieces.

use std::sync::Arc;

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, RingSpec};

/// The graded `S`-module `A/B` for monomial ideals `B ⊆ A`. Its degree-`a` piece has the
/// monomials of degree `a` in `A` but not in `B` as a basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subquotient {
    top: MonomialIdeal,
    bottom: MonomialIdeal,
}

/// Calls `visit` on every monomial of total degree `degree` whose exponents are bounded by
/// `upper` (when given) and that `pruned` does not reject. `pruned` sees partial exponent
/// vectors (unassigned variables are zero); it must be monotone: once a partial vector is
/// rejected, so is every completion of it.
pub(crate) fn for_each_monomial(
    nvars: usize,
    degree: u64,
    upper: Option<&[u32]>,
    pruned: &dyn Fn(&[u32]) -> bool,
    visit: &mut dyn FnMut(&[u32]),
) {
    fn go(
        k: usize,
        remaining: u64,
        exps: &mut Vec<u32>,
        upper: Option<&[u32]>,
        pruned: &dyn Fn(&[u32]) -> bool,
        visit: &mut dyn FnMut(&[u32]),
    ) {
        let n = exps.len();
        let cap = upper.map_or(u64::MAX, |u| u[k] as u64);
        if k + 1 == n {
            if remaining <= cap {
                exps[k] = remaining as u32;
                if !pruned(exps) {
                    visit(exps);
                }
                exps[k] = 0;
            }
            return;
        }
        for e in (0..=remaining.min(cap)).rev() {
            exps[k] = e as u32;
            if e > 0 && pruned(exps) {
                continue;
            }
            go(k + 1, remaining - e, exps, upper, pruned, visit);
        }
        exps[k] = 0;
    }
    let mut exps = vec![0u32; nvars];
    go(0, degree, &mut exps, upper, pruned, visit);
}

impl Subquotient {
    pub fn new(top: MonomialIdeal, bottom: MonomialIdeal) -> Result<Self> {
        if top.ring() != bottom.ring() {
            return Err(Error::Structural("subquotient ideals belong to different rings".into()));
        }
        if !top.contains_ideal(&bottom) {
            return Err(Error::Structural(format!("{bottom} is not contained in {top}")));
        }
        Ok(Subquotient { top, bottom })
    }

    /// The cyclic module `S/B`.
    pub fn cyclic(bottom: MonomialIdeal) -> Self {
        Subquotient { top: MonomialIdeal::unit(bottom.ring()), bottom }
    }

    pub fn zero(ring: &Arc<RingSpec>) -> Self {
        Subquotient { top: MonomialIdeal::zero(ring), bottom: MonomialIdeal::zero(ring) }
    }

    pub fn top(&self) -> &MonomialIdeal {
        &self.top
    }

    pub fn bottom(&self) -> &MonomialIdeal {
        &self.bottom
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        self.top.ring()
    }

    pub fn is_zero(&self) -> bool {
        self.bottom.contains_ideal(&self.top)
    }

    /// Standard monomials of degree `a`, in descending lexicographic order.
    pub fn basis(&self, a: i64) -> Vec<Monomial> {
        let mut out = Vec::new();
        self.for_each_basis(a, None, &mut |e| out.push(Monomial::new(e.to_vec())));
        out
    }

    /// Number of standard monomials of degree `a` (zero for negative `a`).
    pub fn hilbert(&self, a: i64) -> u64 {
        let mut count = 0;
        self.for_each_basis(a, None, &mut |_| count += 1);
        count
    }

    pub(crate) fn for_each_basis(
        &self,
        a: i64,
        upper: Option<&[u32]>,
        visit: &mut dyn FnMut(&[u32]),
    ) {
        if a < 0 || self.top.is_zero() {
            return;
        }
        let bottom = &self.bottom;
        let top = &self.top;
        let top_is_unit = top.is_unit();
        for_each_monomial(
            self.ring().num_vars(),
            a as u64,
            upper,
            &|e| bottom.contains_exponents(e),
            &mut |e| {
                if top_is_unit || top.contains_exponents(e) {
                    visit(e)
                }
            },
        );
    }

    /// `B : A`, the annihilator of the module.
    pub fn annihilator(&self) -> MonomialIdeal {
        if self.top.is_zero() {
            return MonomialIdeal::unit(self.ring());
        }
        self.bottom.colon_ideal(&self.top).expect("top is nonzero and in the same ring")
    }

    /// Krull dimension of the module, `dim S/(B : A)`; −1 for the zero module.
    pub fn dim(&self) -> i64 {
        self.annihilator().krull_dim_quotient()
    }

    /// Finite length; the zero module counts as Artinian.
    ///
    /// Equivalent to `dim ≤ 0`, tested as `A ⊆ B : x_i^∞` for every variable, which avoids
    /// forming the annihilator.
    pub fn is_artinian(&self) -> bool {
        (0..self.ring().num_vars()).all(|i| {
            let stripped = self.bottom.gens().iter().map(|g| {
                let mut e = g.exponents().to_vec();
                e[i] = 0;
                Monomial::new(e)
            });
            MonomialIdeal::minimalize(self.ring(), stripped)
                .expect("same ring")
                .contains_ideal(&self.top)
        })
    }

    /// The a-invariant: the largest degree with a nonzero piece, `-∞` for the zero module.
    ///
    /// Scanning stops at the first empty degree at or above the generator degrees of `A`:
    /// past that point every monomial of `A` factors through an empty degree, so no gap can
    /// be followed by a nonzero piece.
    pub fn top_degree(&self) -> Result<Degree> {
        if !self.is_artinian() {
            return Err(Error::Domain("top degree of a module that is not Artinian".into()));
        }
        let Some(gen_deg) = self.top.max_gen_degree() else {
            return Ok(Degree::NegInfinity);
        };
        let mut top = Degree::NegInfinity;
        let mut a = 0i64;
        loop {
            let h = self.hilbert(a);
            if h > 0 {
                top = Degree::Finite(a);
            } else if a as u64 >= gen_deg {
                return Ok(top);
            }
            a += 1;
        }
    }

    /// `H⁰_m(A/B) = (A ∩ B̃)/B`, with `B̃` the saturation of `B` by the maximal ideal.
    pub fn h0(&self) -> Subquotient {
        let sat = self.bottom.saturate_maximal();
        let top = self.top.intersect(&sat).expect("same ring");
        Subquotient { top, bottom: self.bottom.clone() }
    }

    /// `a(H⁰_m(M))`.
    pub fn a0(&self) -> Degree {
        self.h0().top_degree().expect("H0 is Artinian")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(ring: &Arc<RingSpec>, gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::minimalize(ring, gens.iter().map(|g| ring.parse_monomial(g).unwrap()))
            .unwrap()
    }

    /// Counts standard monomials by listing every monomial of degree `a`.
    fn brute_hilbert(m: &Subquotient, a: i64) -> u64 {
        let r = m.ring().num_vars();
        let mut count = 0;
        for_each_monomial(r, a as u64, None, &|_| false, &mut |e| {
            if m.top().contains_exponents(e) && !m.bottom().contains_exponents(e) {
                count += 1;
            }
        });
        count
    }

    #[test]
    fn hilbert_of_complete_intersection() {
        let r = RingSpec::new(["x", "y"]).unwrap();
        let m = Subquotient::cyclic(ideal(&r, &["x^2", "y^2"]));
        let h: Vec<u64> = (0..4).map(|a| m.hilbert(a)).collect();
        assert_eq!(h, vec![1, 2, 1, 0]);
        assert_eq!(m.hilbert(-1), 0);
        assert_eq!(m.top_degree().unwrap(), Degree::Finite(2));
        assert!(m.is_artinian());
    }

    #[test]
    fn zero_module() {
        let r = RingSpec::new(["x", "y"]).unwrap();
        let a = ideal(&r, &["x", "y^3"]);
        let z = Subquotient::new(a.clone(), a).unwrap();
        assert!(z.is_zero());
        assert!((0..6).all(|d| z.hilbert(d) == 0));
        assert_eq!(z.top_degree().unwrap(), Degree::NegInfinity);
        assert_eq!(Subquotient::zero(&r).top_degree().unwrap(), Degree::NegInfinity);
    }

    #[test]
    fn one_dim_diff_module() {
        let r = RingSpec::new(["x", "y"]).unwrap();
        let q = ideal(&r, &["x^3", "x*y^2"]);
        let a = ideal(&r, &["y^2"]).sum(&q).unwrap();
        let b = ideal(&r, &["y^4"]).sum(&q).unwrap();
        let m = Subquotient::new(a, b).unwrap();
        assert!(m.is_artinian());
        for d in 0..8 {
            assert_eq!(m.hilbert(d), brute_hilbert(&m, d));
            assert_eq!(m.basis(d).len() as u64, m.hilbert(d));
        }
        // Basis in degree 3 is {y^3}: x*y^2 and x^3 lie in Q.
        assert_eq!(m.basis(3), vec![Monomial::new(vec![0, 3])]);
        // P/P² with d = 2, c = (3, 1): d·2 + c_1 − 2 = 3.
        assert_eq!(m.top_degree().unwrap(), Degree::Finite(3));
    }

    #[test]
    fn non_artinian_is_rejected() {
        let r = RingSpec::new(["x", "y"]).unwrap();
        let m = Subquotient::cyclic(ideal(&r, &["x"]));
        assert!(!m.is_artinian());
        assert!(matches!(m.top_degree(), Err(Error::Domain(_))));
    }

    #[test]
    fn artinian_agrees_with_dimension() {
        let r = RingSpec::new(["x", "y", "z"]).unwrap();
        let cases = [
            (vec!["1"], vec!["x^2", "y^2", "z"]),
            (vec!["1"], vec!["x^2", "y*z"]),
            (vec!["x", "y*z"], vec!["x^3", "x*y", "x*z", "y^2*z", "y*z^2"]),
            (vec!["x"], vec!["x^2", "x*y"]),
            (vec!["x*y"], vec!["x*y"]),
        ];
        for (a, b) in cases {
            let m = Subquotient::new(ideal(&r, &a), ideal(&r, &b)).unwrap();
            assert_eq!(m.is_artinian(), m.dim() <= 0, "{a:?} / {b:?}");
        }
    }

    #[test]
    fn containment_is_checked() {
        let r = RingSpec::new(["x", "y"]).unwrap();
        assert!(Subquotient::new(ideal(&r, &["x^2"]), ideal(&r, &["x"])).is_err());
    }

    #[test]
    fn local_cohomology_zero() {
        let r = RingSpec::new(["x", "y"]).unwrap();
        let m = Subquotient::cyclic(ideal(&r, &["x^2", "x*y"]));
        let h = m.h0();
        assert_eq!(h.top(), &ideal(&r, &["x"]));
        assert_eq!(h.top_degree().unwrap(), Degree::Finite(1));

        assert!(Subquotient::cyclic(ideal(&r, &["x"])).h0().is_zero());

        let j = ideal(&r, &["x^3", "x*y", "y^2"]);
        let h = Subquotient::cyclic(j.clone()).h0();
        assert!(h.top().is_unit());
        assert_eq!(h.top_degree().unwrap(), Subquotient::cyclic(j).top_degree().unwrap());
    }
}
