//! The functions `reg Iⁿ`, `reg R/Iⁿ`, `reg Iⁿ⁻¹/Iⁿ`, `sdeg Iⁿ` and `d(Iⁿ)` of a monomial ideal
//! `I = (P+Q)/Q` in `R = S/Q`, with their defect sequences.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::graded::Subquotient;
use crate::monomial::{Monomial, MonomialIdeal, RingSpec};
use crate::resolution::Engine;

use std::sync::Arc;

/// Window length used when none is given.
pub const DEFAULT_WINDOW: usize = 3;

/// A monomial ideal of `R = S/Q`, presented by its lift `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedIdeal {
    q: MonomialIdeal,
    p: MonomialIdeal,
    lifted: MonomialIdeal,
}

impl PresentedIdeal {
    /// Fails with [`Error::Hypothesis`] when `I` is zero or the unit ideal.
    pub fn new(q: MonomialIdeal, p: MonomialIdeal) -> Result<Self> {
        let lifted = p.sum(&q)?;
        if q.contains_ideal(&lifted) {
            return Err(Error::Hypothesis(format!("I = 0: {p} lies in the defining ideal {q}")));
        }
        if lifted.is_unit() {
            return Err(Error::Hypothesis("I is the unit ideal".into()));
        }
        Ok(PresentedIdeal { q, p, lifted })
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        self.q.ring()
    }

    /// The defining ideal `Q`.
    pub fn q(&self) -> &MonomialIdeal {
        &self.q
    }

    pub fn p(&self) -> &MonomialIdeal {
        &self.p
    }

    /// `P + Q`.
    pub fn lifted(&self) -> &MonomialIdeal {
        &self.lifted
    }

    /// Minimal generators of `P + Q` outside `Q`: the minimal generators of `I`.
    pub fn generators(&self) -> Vec<&Monomial> {
        self.lifted.gens().iter().filter(|g| !self.q.contains(g)).collect()
    }

    /// `d`, the largest degree of a minimal generator of `I`.
    pub fn gen_degree(&self) -> u64 {
        self.generators().iter().map(|g| g.degree()).max().expect("I is nonzero")
    }

    pub fn is_equigenerated(&self) -> bool {
        let d = self.gen_degree();
        self.generators().iter().all(|g| g.degree() == d)
    }

    /// The slope used for defects: `Some(d)` exactly when `I` is equigenerated.
    pub fn slope(&self) -> Option<u64> {
        self.is_equigenerated().then(|| self.gen_degree())
    }

    /// `dim R/I = dim S/(P+Q)`.
    pub fn dim_quotient(&self) -> i64 {
        self.lifted.krull_dim_quotient()
    }

    /// `dim R = dim S/Q`.
    pub fn dim_ring(&self) -> i64 {
        self.q.krull_dim_quotient()
    }

    /// `ht I > 0`: `I` avoids every minimal prime of `Q`.
    pub fn height_positive(&self) -> bool {
        self.q
            .minimal_primes()
            .iter()
            .all(|&prime| self.lifted.gens().iter().any(|g| g.support() & prime == 0))
    }

    /// `[P⁰+Q, P¹+Q, …, P^to+Q]` with `P⁰ = (1)`, each step as `(Pⁿ⁻¹+Q)·P + Q`.
    /// Fails with [`Error::Hypothesis`] once some `Pⁿ ⊆ Q`.
    pub fn power_sums(&self, to: u32) -> Result<Vec<MonomialIdeal>> {
        let mut out = vec![MonomialIdeal::unit(self.ring())];
        for n in 1..=to {
            let next = out[n as usize - 1].product(&self.p)?.sum(&self.q)?;
            if self.q.contains_ideal(&next) {
                return Err(Error::Hypothesis(format!("I^{n} = 0 in R")));
            }
            out.push(next);
        }
        Ok(out)
    }

    /// The S-module standing for `Iⁿ`, `R/Iⁿ` or `Iⁿ⁻¹/Iⁿ`.
    pub fn module(&self, kind: ModuleKind, n: u32) -> Result<Subquotient> {
        if n == 0 {
            return Err(Error::Input("power must be at least 1".into()));
        }
        let sums = self.power_sums(n)?;
        Ok(module_from_sums(self, kind, n, &sums))
    }
}

fn module_from_sums(x: &PresentedIdeal, kind: ModuleKind, n: u32, sums: &[MonomialIdeal]) -> Subquotient {
    let n = n as usize;
    let build = |top: &MonomialIdeal, bottom: &MonomialIdeal| {
        Subquotient::new(top.clone(), bottom.clone()).expect("powers form a chain over Q")
    };
    match kind {
        ModuleKind::Power => build(&sums[n], &x.q),
        ModuleKind::Quotient => Subquotient::cyclic(sums[n].clone()),
        ModuleKind::Diff => build(&sums[n - 1], &sums[n]),
    }
}

/// `(Pⁿ+Q)/Q`, `S/(Pⁿ+Q)` or `(Pⁿ⁻¹+Q)/(Pⁿ+Q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleKind {
    Power,
    Quotient,
    Diff,
}

impl FromStr for ModuleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "power" => Ok(ModuleKind::Power),
            "quotient" => Ok(ModuleKind::Quotient),
            "diff" => Ok(ModuleKind::Diff),
            _ => Err(Error::Input(format!("unknown module kind {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FunctionKind {
    /// `reg Iⁿ`
    RegPower,
    /// `reg R/Iⁿ`
    RegQuotient,
    /// `reg Iⁿ⁻¹/Iⁿ`
    RegDiff,
    /// `sdeg Iⁿ`
    Sdeg,
    /// `d(Iⁿ)`
    GenDegree,
}

impl FunctionKind {
    pub const ALL: [FunctionKind; 5] = [
        FunctionKind::RegPower,
        FunctionKind::RegQuotient,
        FunctionKind::RegDiff,
        FunctionKind::Sdeg,
        FunctionKind::GenDegree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FunctionKind::RegPower => "reg_power",
            FunctionKind::RegQuotient => "reg_quotient",
            FunctionKind::RegDiff => "reg_diff",
            FunctionKind::Sdeg => "sdeg",
            FunctionKind::GenDegree => "gen_degree",
        }
    }

    /// Short name used on the command line.
    pub fn cli_name(self) -> &'static str {
        match self {
            FunctionKind::RegPower => "reg",
            FunctionKind::RegQuotient => "regquot",
            FunctionKind::RegDiff => "regdiff",
            FunctionKind::Sdeg => "sdeg",
            FunctionKind::GenDegree => "gendeg",
        }
    }

    /// `k` in the defect `v_n − dn + k`.
    pub fn defect_offset(self) -> i64 {
        match self {
            FunctionKind::RegQuotient | FunctionKind::RegDiff => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for FunctionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FunctionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FunctionKind::ALL
            .into_iter()
            .find(|k| k.name() == s || k.cli_name() == s)
            .ok_or_else(|| Error::Input(format!("unknown function {s:?}")))
    }
}

/// Evaluates the functions of one ideal through a shared [`Engine`].
pub struct Evaluator<'a> {
    ideal: &'a PresentedIdeal,
    engine: &'a Engine,
}

impl<'a> Evaluator<'a> {
    pub fn new(ideal: &'a PresentedIdeal, engine: &'a Engine) -> Self {
        Evaluator { ideal, engine }
    }

    pub fn value(&self, f: FunctionKind, n: u32) -> Result<Degree> {
        Ok(self.values(f, n, n)?[0])
    }

    /// Values at `n = from..=to`, evaluated in parallel.
    pub fn values(&self, f: FunctionKind, from: u32, to: u32) -> Result<Vec<Degree>> {
        if from == 0 || from > to {
            return Err(Error::Input(format!("empty or invalid range {from}..{to}")));
        }
        let sums = self.ideal.power_sums(to)?;
        Ok((from..=to)
            .into_par_iter()
            .map(|n| self.evaluate(f, n, &sums))
            .collect())
    }

    fn evaluate(&self, f: FunctionKind, n: u32, sums: &[MonomialIdeal]) -> Degree {
        let x = self.ideal;
        let reg = |kind| self.engine.regularity(&module_from_sums(x, kind, n, sums));
        match f {
            FunctionKind::RegPower => reg(ModuleKind::Power),
            FunctionKind::RegQuotient => reg(ModuleKind::Quotient),
            FunctionKind::RegDiff => reg(ModuleKind::Diff),
            FunctionKind::Sdeg => saturation_degree(&sums[n as usize]),
            FunctionKind::GenDegree => sums[n as usize]
                .gens()
                .iter()
                .filter(|g| !x.q.contains(g))
                .map(|g| Degree::Finite(g.degree() as i64))
                .max()
                .unwrap_or(Degree::NegInfinity),
        }
    }

    /// `reg R = reg S/Q`.
    pub fn ring_regularity(&self) -> Degree {
        self.engine.regularity(&Subquotient::cyclic(self.ideal.q.clone()))
    }

    pub fn report(&self, f: FunctionKind, from: u32, to: u32, window: usize) -> Result<DefectReport> {
        let values = self.values(f, from, to)?;
        Ok(DefectReport::new(f, from, self.ideal, values, window))
    }
}

/// `sdeg J = a(J̃/J) + 1`, `-∞` when `J` is saturated.
pub fn saturation_degree(j: &MonomialIdeal) -> Degree {
    let sat = j.saturate_maximal();
    if sat == *j {
        return Degree::NegInfinity;
    }
    let h0 = Subquotient::new(sat, j.clone()).expect("J ⊆ J̃");
    h0.top_degree().expect("J̃/J is Artinian") + 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub n: u32,
    pub value: Degree,
    pub defect: Option<i64>,
}

/// Values of one function over a window of powers, with defects and window diagnostics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectReport {
    pub function: FunctionKind,
    pub n_from: u32,
    pub n_to: u32,
    /// `d`, present exactly when `I` is equigenerated.
    pub slope: Option<u64>,
    pub rows: Vec<ReportRow>,
    /// Length of the longest suffix whose consecutive differences all equal the slope.
    pub stable_suffix_length: usize,
    pub window: usize,
    pub stabilized_in_window: bool,
    /// `defect_n − defect_{n+1}` where both are defined.
    pub defect_drops: Vec<Option<i64>>,
    /// For `reg_diff` with `dim R/I = 0`: whether `c_n` is weakly decreasing.
    pub weakly_decreasing: Option<bool>,
    /// For `reg_quotient` with `dim R/I = 0`: whether `a_n − a_{n+1} ≤ d` throughout.
    pub drops_bounded_by_slope: Option<bool>,
}

impl DefectReport {
    pub fn new(
        function: FunctionKind,
        n_from: u32,
        ideal: &PresentedIdeal,
        values: Vec<Degree>,
        window: usize,
    ) -> Self {
        let slope = ideal.slope();
        let rows: Vec<ReportRow> = values
            .iter()
            .enumerate()
            .map(|(k, &value)| {
                let n = n_from + k as u32;
                let defect = match (slope, value) {
                    (Some(d), Degree::Finite(v)) => Some(v - d as i64 * n as i64 + function.defect_offset()),
                    _ => None,
                };
                ReportRow { n, value, defect }
            })
            .collect();
        let defect_drops: Vec<Option<i64>> = rows
            .windows(2)
            .map(|w| Some(w[0].defect? - w[1].defect?))
            .collect();
        let stable = stable_suffix_length(&values, slope.map(|d| d as i64));
        let artinian = ideal.dim_quotient() == 0;
        let weakly_decreasing = (artinian && function == FunctionKind::RegDiff && slope.is_some())
            .then(|| defect_drops.iter().all(|d| d.is_none_or(|d| d >= 0)));
        let drops_bounded_by_slope = match slope {
            Some(d) if artinian && function == FunctionKind::RegQuotient => {
                Some(defect_drops.iter().all(|x| x.is_none_or(|x| x <= d as i64)))
            }
            _ => None,
        };
        DefectReport {
            function,
            n_from,
            n_to: n_from + values.len() as u32 - 1,
            slope,
            rows,
            stable_suffix_length: stable,
            window,
            stabilized_in_window: stable >= window,
            defect_drops,
            weakly_decreasing,
            drops_bounded_by_slope,
        }
    }

    pub fn values(&self) -> Vec<Degree> {
        self.rows.iter().map(|r| r.value).collect()
    }

    pub fn defects(&self) -> Vec<Option<i64>> {
        self.rows.iter().map(|r| r.defect).collect()
    }
}

/// Longest suffix of finite values whose consecutive differences equal `step`. Without a step,
/// the difference of the last two values is used. A trailing `-∞` gives 0.
pub fn stable_suffix_length(values: &[Degree], step: Option<i64>) -> usize {
    let n = values.len();
    let Some(Degree::Finite(_)) = values.last() else {
        return 0;
    };
    let step = step.or_else(|| match values {
        [.., Degree::Finite(a), Degree::Finite(b)] => Some(b - a),
        _ => None,
    });
    let Some(step) = step else {
        return 1;
    };
    let mut len = 1;
    while len < n {
        match (values[n - len - 1], values[n - len]) {
            (Degree::Finite(a), Degree::Finite(b)) if b - a == step => len += 1,
            _ => break,
        }
    }
    len
}
