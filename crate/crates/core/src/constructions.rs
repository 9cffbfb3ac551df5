//! Explicit families of presented ideals with closed forms for their functions.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::functions::{Evaluator, FunctionKind, PresentedIdeal};
use crate::monomial::{Monomial, MonomialIdeal, RingSpec};
use crate::resolution::Engine;

/// A family instance. Lists `c` are indexed from 0, lists `e` from 1 (`e[0]` is `e_1`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    /// `S = k[x,y]`, `Q = (x^{c_0}, x^{c_1}y^d, …, x^{c_m}y^{dm})`, `I = (y^d)`.
    OneDim { d: u32, c: Vec<u32> },
    /// Over `k[x₁,x₂,y₁,…,y_m]` with `I = (y)^d`; `dim R/I = 1`.
    Dim1 { d: u32, c: Vec<u32> },
    /// [`FamilySpec::Dim1`] with `x₁x₂` added to `Q`.
    Dim1b { d: u32, c: Vec<u32> },
    /// `I = J^d` for a linear `J` from [`FamilySpec::OneDim`] whose `reg Iⁿ − dn` is `e_n`.
    Ubiquity3 { d: u32, e: Vec<u32> },
    /// `S = k[x₀,…,x_r]`, `I = x₀·(x₀², …, x_r², x₀⋯x_r)`.
    Ehl { r: usize },
    /// `Q = x₀·(x₀,…,x_{2t+1})`, `I` the edge ideal of the cycle on `x₁,…,x_{2t+1}`.
    Cycle { t: usize },
    /// `Q = (x⁷,x⁴y³,x³y⁴,y⁷,xu⁶,yu⁶,u⁶v)`, `I = (xyv,u³)`.
    M2Reg,
    /// `Q = (x⁶,x³y³,y⁶,xu⁵,yu⁵,u⁵v)`, `I = (xyv⁴,u⁶)`.
    M2Sdeg,
}

/// Drops trailing repeats, so that the last two entries differ.
pub fn canonicalize(seq: &[u32]) -> Vec<u32> {
    let mut out = seq.to_vec();
    while out.len() >= 2 && out[out.len() - 1] == out[out.len() - 2] {
        out.pop();
    }
    out
}

/// `c_k`, constant past the end of the list.
fn at(c: &[u32], k: usize) -> i64 {
    c[k.min(c.len() - 1)] as i64
}

/// `e*_0, e*_1, …, e*_{dm}` with `e*_{dn} = e_n`, rising by one per step inside each block of
/// length `d`. Entry 0 repeats `e*_1`, giving `c_0 = e*_1 + 1`.
pub fn interpolate(d: u32, e: &[u32]) -> Vec<u32> {
    let e = canonicalize(e);
    let d = d as usize;
    let mut star = vec![0u32; d * e.len() + 1];
    for (n, &en) in e.iter().enumerate() {
        for j in 0..d {
            star[(n + 1) * d - j] = en + j as u32;
        }
    }
    star[0] = star[1];
    star
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::OneDim { .. } => "one_dim",
            FamilySpec::Dim1 { .. } => "dim1",
            FamilySpec::Dim1b { .. } => "dim1b",
            FamilySpec::Ubiquity3 { .. } => "ubiquity3",
            FamilySpec::Ehl { .. } => "ehl",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::M2Reg => "m2_reg",
            FamilySpec::M2Sdeg => "m2_sdeg",
        }
    }

    /// Checks parameter constraints, naming the first one violated.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Input(format!("{}: {msg}", self.name())));
        match self {
            FamilySpec::OneDim { d, c } | FamilySpec::Dim1 { d, c } | FamilySpec::Dim1b { d, c } => {
                if *d == 0 {
                    return fail("d must be at least 1".into());
                }
                if c.is_empty() || c.contains(&0) {
                    return fail("c must be a nonempty list of positive integers".into());
                }
                if matches!(self, FamilySpec::OneDim { .. }) && c.windows(2).any(|w| w[0] < w[1]) {
                    return fail("c must be weakly decreasing".into());
                }
            }
            FamilySpec::Ubiquity3 { d, e } => {
                if *d == 0 {
                    return fail("d must be at least 1".into());
                }
                if e.is_empty() {
                    return fail("e must be nonempty".into());
                }
                let e = canonicalize(e);
                if let Some(w) = e.windows(2).find(|w| w[0] < w[1] + d) {
                    return fail(format!("e_n − e_(n+1) ≥ d fails at {} → {}", w[0], w[1]));
                }
            }
            FamilySpec::Ehl { r } => {
                if *r == 0 {
                    return fail("r must be at least 1".into());
                }
            }
            FamilySpec::Cycle { t } => {
                if *t == 0 {
                    return fail("t must be at least 1".into());
                }
            }
            FamilySpec::M2Reg | FamilySpec::M2Sdeg => {}
        }
        Ok(())
    }

    /// `c` after canonicalization; the `m` of the family is its length minus one.
    pub fn canonical_c(&self) -> Option<Vec<u32>> {
        match self {
            FamilySpec::OneDim { c, .. } | FamilySpec::Dim1 { c, .. } | FamilySpec::Dim1b { c, .. } => {
                Some(canonicalize(c))
            }
            FamilySpec::Ubiquity3 { d, e } => Some(interpolate(*d, e)),
            _ => None,
        }
    }

    pub fn build(&self) -> Result<PresentedIdeal> {
        self.validate()?;
        match self {
            FamilySpec::OneDim { d, c } => staircase(*d, *d, &canonicalize(c)),
            FamilySpec::Dim1 { d, c } => dim1(*d, &canonicalize(c), false),
            FamilySpec::Dim1b { d, c } => dim1(*d, &canonicalize(c), true),
            FamilySpec::Ubiquity3 { d, e } => {
                // The linear J = (y) over this c, raised to the d-th power.
                let c: Vec<u32> = interpolate(*d, e).iter().map(|&s| s + 1).collect();
                staircase(1, *d, &canonicalize(&c))
            }
            FamilySpec::Ehl { r } => ehl(*r),
            FamilySpec::Cycle { t } => cycle(*t),
            FamilySpec::M2Reg => text_ideal(
                &["x", "y", "u", "v"],
                &["x^7", "x^4*y^3", "x^3*y^4", "y^7", "x*u^6", "y*u^6", "u^6*v"],
                &["x*y*v", "u^3"],
            ),
            FamilySpec::M2Sdeg => text_ideal(
                &["x", "y", "u", "v"],
                &["x^6", "x^3*y^3", "y^6", "x*u^5", "y*u^5", "u^5*v"],
                &["x*y*v^4", "u^6"],
            ),
        }
    }

    /// The closed form of `f` on this family, if one is known.
    pub fn predict(&self, f: FunctionKind) -> Result<Prediction> {
        self.validate()?;
        let none = || Err(Error::NoClosedForm { family: self.name().into(), function: f.name().into() });
        let eval: Arc<dyn Fn(u32) -> i64 + Send + Sync> = match (self, f) {
            (FamilySpec::OneDim { d, c }, FunctionKind::RegDiff)
            | (FamilySpec::Dim1 { d, c }, FunctionKind::RegDiff) => {
                let (d, c) = (*d as i64, canonicalize(c));
                Arc::new(move |n| d * n as i64 + at(&c, n as usize - 1) - 2)
            }
            (FamilySpec::OneDim { d, c }, FunctionKind::RegQuotient)
            | (FamilySpec::Dim1b { d, c }, FunctionKind::RegQuotient) => {
                let (d, c) = (*d as i64, canonicalize(c));
                Arc::new(move |n| two_branch(d, &c, n))
            }
            (FamilySpec::Dim1b { d, c }, FunctionKind::Sdeg) => {
                let (d, c) = (*d as i64, canonicalize(c));
                Arc::new(move |n| two_branch(d, &c, n) + 1)
            }
            (FamilySpec::OneDim { d, c }, FunctionKind::RegPower) => {
                let (d, c) = (*d as i64, canonicalize(c));
                Arc::new(move |n| power_branch(d, &c, n))
            }
            (FamilySpec::Ubiquity3 { d, e }, FunctionKind::RegPower) => {
                let (d, e) = (*d as i64, canonicalize(e));
                Arc::new(move |n| d * n as i64 + at(&e, n as usize - 1))
            }
            (FamilySpec::Ehl { r }, FunctionKind::Sdeg) => {
                let r = *r as i64;
                Arc::new(move |n| 3 * n as i64 + r - 1)
            }
            _ => return none(),
        };
        Ok(Prediction { function: f, eval: Arc::new(move |n| Degree::Finite(eval(n))) })
    }

    /// Functions [`FamilySpec::predict`] supports here.
    pub fn predicted_functions(&self) -> Vec<FunctionKind> {
        FunctionKind::ALL.into_iter().filter(|&f| self.predict(f).is_ok()).collect()
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        match self {
            FamilySpec::OneDim { d, c } | FamilySpec::Dim1 { d, c } | FamilySpec::Dim1b { d, c } => {
                write!(f, "{}(d={d}, c=[{}])", self.name(), list(c))
            }
            FamilySpec::Ubiquity3 { d, e } => write!(f, "ubiquity3(d={d}, e=[{}])", list(e)),
            FamilySpec::Ehl { r } => write!(f, "ehl(r={r})"),
            FamilySpec::Cycle { t } => write!(f, "cycle(t={t})"),
            FamilySpec::M2Reg | FamilySpec::M2Sdeg => f.write_str(self.name()),
        }
    }
}

/// `max{d(i+1)+c_i−2 : i < n}` for `n ≤ m`, otherwise also against `dn+c_m−2`.
fn two_branch(d: i64, c: &[u32], n: u32) -> i64 {
    let m = c.len() - 1;
    let n = n as usize;
    let head = (0..n.min(m)).map(|i| d * (i as i64 + 1) + c[i] as i64 - 2);
    if n <= m {
        head.max().expect("n ≥ 1")
    } else {
        head.chain([d * n as i64 + c[m] as i64 - 2]).max().unwrap()
    }
}

/// `max{d(i+1)+c_i−2 : n ≤ i < m}` for `n < m`, `dn + c_m − 1` for `n ≥ m`.
fn power_branch(d: i64, c: &[u32], n: u32) -> i64 {
    let m = c.len() - 1;
    let n = n as usize;
    if n < m {
        (n..m).map(|i| d * (i as i64 + 1) + c[i] as i64 - 2).max().unwrap()
    } else {
        d * n as i64 + c[m] as i64 - 1
    }
}

fn text_ideal(vars: &[&str], q: &[&str], p: &[&str]) -> Result<PresentedIdeal> {
    let ring = RingSpec::new(vars.iter().copied())?;
    let parse = |gens: &[&str]| -> Result<MonomialIdeal> {
        let monomials = gens
            .iter()
            .map(|g| ring.parse_monomial(g).map_err(|e| Error::Structural(e.message)))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::minimalize(&ring, monomials)
    };
    PresentedIdeal::new(parse(q)?, parse(p)?)
}

/// `Q = (x^{c_i} y^{step·i})` and `I = (y^d)` in `k[x,y]`.
fn staircase(step: u32, d: u32, c: &[u32]) -> Result<PresentedIdeal> {
    let ring = RingSpec::new(["x", "y"])?;
    let gens = c.iter().enumerate().map(|(i, &ci)| Monomial::new(vec![ci, step * i as u32]));
    let q = MonomialIdeal::minimalize(&ring, gens)?;
    let p = MonomialIdeal::principal(&ring, Monomial::new(vec![0, d]))?;
    PresentedIdeal::new(q, p)
}

/// Constant `c` is built with one `y` variable, as `c = [c₀, c₀]`.
fn dim1(d: u32, c: &[u32], with_x1x2: bool) -> Result<PresentedIdeal> {
    let c: Vec<u32> = if c.len() == 1 { vec![c[0], c[0]] } else { c.to_vec() };
    let m = c.len() - 1;
    let mut names = vec!["x1".to_string(), "x2".to_string()];
    names.extend((1..=m).map(|i| format!("y{i}")));
    let ring = RingSpec::new(names)?;
    let nv = ring.num_vars();
    let mono = |exps: &[(usize, u32)]| {
        let mut e = vec![0u32; nv];
        for &(k, v) in exps {
            e[k] += v;
        }
        Monomial::new(e)
    };
    let y = |i: usize| i + 1;
    let p = MonomialIdeal::minimalize(&ring, (2..nv).map(|k| ring.var(k)))?.power(d);
    let mut gens = vec![mono(&[(0, c[0])])];
    if with_x1x2 {
        gens.push(mono(&[(0, 1), (1, 1)]));
    }
    gens.extend(p.gens().iter().map(|g| g.mul(&ring.var(0))));
    for (i, &ci) in c.iter().enumerate().take(m).skip(1) {
        let yi = mono(&[(y(i), d * i as u32)]);
        gens.push(mono(&[(1, ci)]).mul(&yi));
        gens.extend(p.gens().iter().map(|g| g.mul(&yi)));
    }
    gens.push(mono(&[(1, c[m]), (y(m), d * m as u32)]));
    PresentedIdeal::new(MonomialIdeal::minimalize(&ring, gens)?, p)
}

fn ehl(r: usize) -> Result<PresentedIdeal> {
    let ring = RingSpec::new((0..=r).map(|i| format!("x{i}")))?;
    let nv = r + 1;
    let mut gens: Vec<Monomial> = (0..nv).map(|i| ring.var(i).pow(2)).collect();
    gens.push(Monomial::new(vec![1; nv]));
    let x0q = gens.iter().map(|g| g.mul(&ring.var(0)));
    let p = MonomialIdeal::minimalize(&ring, x0q)?;
    PresentedIdeal::new(MonomialIdeal::zero(&ring), p)
}

fn cycle(t: usize) -> Result<PresentedIdeal> {
    let k = 2 * t + 1;
    let ring = RingSpec::new((0..=k).map(|i| format!("x{i}")))?;
    let q = MonomialIdeal::maximal(&ring).product(&MonomialIdeal::principal(&ring, ring.var(0))?)?;
    let edges = (1..=k).map(|i| ring.var(i).mul(&ring.var(i % k + 1)));
    PresentedIdeal::new(q, MonomialIdeal::minimalize(&ring, edges)?)
}

/// A closed-form evaluator `n ↦ f(n)` for `n ≥ 1`.
#[derive(Clone)]
pub struct Prediction {
    pub function: FunctionKind,
    eval: Arc<dyn Fn(u32) -> Degree + Send + Sync>,
}

impl Prediction {
    /// Wraps an arbitrary evaluator, e.g. to test the verifier itself.
    pub fn custom(function: FunctionKind, eval: impl Fn(u32) -> Degree + Send + Sync + 'static) -> Self {
        Prediction { function, eval: Arc::new(eval) }
    }

    pub fn eval(&self, n: u32) -> Degree {
        (self.eval)(n)
    }
}

impl fmt::Debug for Prediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Prediction").field("function", &self.function).finish_non_exhaustive()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRow {
    pub n: u32,
    pub engine: Degree,
    pub predicted: Degree,
    pub pass: bool,
}

/// Engine values against a prediction; rows stop at the first mismatch.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub family: String,
    pub function: FunctionKind,
    pub rows: Vec<VerifyRow>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn first_failure(&self) -> Option<u32> {
        self.rows.iter().find(|r| !r.pass).map(|r| r.n)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let mark = if r.pass { "ok" } else { "MISMATCH" };
            writeln!(
                f,
                "{} {} n={} engine={} predicted={} {mark}",
                self.family, self.function, r.n, r.engine, r.predicted
            )?;
        }
        Ok(())
    }
}

/// Compares the engine with [`FamilySpec::predict`] over `from..=to`.
pub fn verify(spec: &FamilySpec, f: FunctionKind, from: u32, to: u32, engine: &Engine) -> Result<VerifyReport> {
    verify_against(spec, &spec.predict(f)?, from, to, engine)
}

pub fn verify_against(
    spec: &FamilySpec,
    prediction: &Prediction,
    from: u32,
    to: u32,
    engine: &Engine,
) -> Result<VerifyReport> {
    let x = spec.build()?;
    let values = Evaluator::new(&x, engine).values(prediction.function, from, to)?;
    let mut rows = Vec::new();
    for (k, engine) in values.into_iter().enumerate() {
        let n = from + k as u32;
        let predicted = prediction.eval(n);
        let pass = engine == predicted;
        rows.push(VerifyRow { n, engine, predicted, pass });
        if !pass {
            break;
        }
    }
    Ok(VerifyReport { family: spec.to_string(), function: prediction.function, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin(v: &[i64]) -> Vec<Degree> {
        v.iter().map(|&x| Degree::Finite(x)).collect()
    }

    #[test]
    fn canonical_lists() {
        assert_eq!(canonicalize(&[3, 1, 1, 1]), vec![3, 1]);
        assert_eq!(canonicalize(&[2, 2]), vec![2]);
        assert_eq!(canonicalize(&[5]), vec![5]);
    }

    #[test]
    fn interpolation_of_defects() {
        let star = interpolate(3, &[9, 5, 2, 2]);
        assert_eq!(star, vec![11, 11, 10, 9, 7, 6, 5, 4, 3, 2]);
        let c: Vec<u32> = star.iter().map(|s| s + 1).collect();
        assert_eq!(c, vec![12, 12, 11, 10, 8, 7, 6, 5, 4, 3]);
    }

    #[test]
    fn one_dim_generators() {
        let x = FamilySpec::OneDim { d: 2, c: vec![3, 1] }.build().unwrap();
        assert_eq!(x.q().format_gens(), vec!["x^3", "x*y^2"]);
        assert_eq!(x.p().format_gens(), vec!["y^2"]);
    }

    #[test]
    fn ehl_and_cycle_generators() {
        let x = FamilySpec::Ehl { r: 2 }.build().unwrap();
        assert!(x.q().is_zero());
        assert_eq!(x.p().format_gens(), vec!["x0^3", "x0*x1^2", "x0*x2^2", "x0^2*x1*x2"]);
        assert_eq!(x.slope(), None);

        let x = FamilySpec::Cycle { t: 1 }.build().unwrap();
        assert_eq!(x.q().format_gens(), vec!["x0^2", "x0*x1", "x0*x2", "x0*x3"]);
        assert_eq!(x.p().format_gens(), vec!["x1*x2", "x1*x3", "x2*x3"]);
    }

    #[test]
    fn dim1_generators() {
        let x = FamilySpec::Dim1 { d: 1, c: vec![2, 3, 1] }.build().unwrap();
        assert_eq!(x.ring().variables(), ["x1", "x2", "y1", "y2"]);
        let mut gens = x.q().format_gens();
        gens.sort();
        let mut want = vec!["x1^2", "x1*y1", "x1*y2", "x2^3*y1", "y1^2", "y1*y2", "x2*y2^2"];
        want.sort();
        assert_eq!(gens, want);
        assert_eq!(x.dim_quotient(), 1);
        let b = FamilySpec::Dim1b { d: 1, c: vec![2, 3, 1] }.build().unwrap();
        assert!(b.q().format_gens().contains(&"x1*x2".to_string()));
    }

    #[test]
    fn predictions() {
        let spec = FamilySpec::OneDim { d: 2, c: vec![3, 1] };
        let p = spec.predict(FunctionKind::RegDiff).unwrap();
        assert_eq!((1..=3).map(|n| p.eval(n)).collect::<Vec<_>>(), fin(&[3, 3, 5]));
        let p = spec.predict(FunctionKind::RegPower).unwrap();
        assert_eq!((1..=3).map(|n| p.eval(n)).collect::<Vec<_>>(), fin(&[2, 4, 6]));
        let p = FamilySpec::Ehl { r: 3 }.predict(FunctionKind::Sdeg).unwrap();
        assert_eq!((1..=3).map(|n| p.eval(n)).collect::<Vec<_>>(), fin(&[5, 8, 11]));
        assert!(matches!(
            FamilySpec::Cycle { t: 2 }.predict(FunctionKind::Sdeg),
            Err(Error::NoClosedForm { .. })
        ));
        assert!(matches!(spec.predict(FunctionKind::GenDegree), Err(Error::NoClosedForm { .. })));
    }

    #[test]
    fn invalid_parameters() {
        for spec in [
            FamilySpec::OneDim { d: 2, c: vec![1, 3] },
            FamilySpec::OneDim { d: 0, c: vec![1] },
            FamilySpec::Dim1 { d: 1, c: vec![] },
            FamilySpec::Ubiquity3 { d: 3, e: vec![9, 7, 2] },
            FamilySpec::Cycle { t: 0 },
        ] {
            assert!(matches!(spec.build(), Err(Error::Input(_))), "{spec}");
        }
    }

    #[test]
    fn verify_and_negative_control() {
        let engine = Engine::new();
        let spec = FamilySpec::OneDim { d: 2, c: vec![3, 1] };
        let report = verify(&spec, FunctionKind::RegDiff, 1, 6, &engine).unwrap();
        assert!(report.passed());
        assert_eq!(report.rows.len(), 6);

        let good = spec.predict(FunctionKind::RegDiff).unwrap();
        let corrupted = Prediction::custom(FunctionKind::RegDiff, move |n| good.eval(n) + 1);
        let report = verify_against(&spec, &corrupted, 1, 6, &engine).unwrap();
        assert_eq!(report.first_failure(), Some(1));
        assert_eq!(report.rows.len(), 1);
    }
}
