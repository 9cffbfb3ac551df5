//! Monomials and monomial ideals of a standard graded polynomial ring `k[x₁,…,x_r]`.
//!
//! A [`MonomialIdeal`] always stores its unique minimal generating set, sorted by degree and
//! then by descending exponent vector, so structural equality is ideal equality.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Maximum number of variables; supports are stored as `u64` bitmasks.
pub const MAX_VARIABLES: usize = 64;

/// The ambient polynomial ring: an ordered list of variables, each of degree one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    variables: Vec<String>,
}

/// Position and reason of a malformed monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    /// Byte offset into the parsed text.
    pub offset: usize,
    pub message: String,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingSpec {
    pub fn new<I, S>(variables: I) -> Result<Arc<RingSpec>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let variables: Vec<String> = variables.into_iter().map(Into::into).collect();
        if variables.is_empty() {
            return Err(Error::Input("a ring needs at least one variable".into()));
        }
        if variables.len() > MAX_VARIABLES {
            return Err(Error::Input(format!("at most {MAX_VARIABLES} variables are supported")));
        }
        for (i, v) in variables.iter().enumerate() {
            if !valid_name(v) {
                return Err(Error::Input(format!("invalid variable name {v:?}")));
            }
            if variables[..i].contains(v) {
                return Err(Error::Input(format!("duplicate variable {v}")));
            }
        }
        Ok(Arc::new(RingSpec { variables }))
    }

    pub fn num_vars(&self) -> usize {
        self.variables.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    pub fn one(&self) -> Monomial {
        Monomial::one(self.num_vars())
    }

    pub fn var(&self, i: usize) -> Monomial {
        Monomial::var(self.num_vars(), i)
    }

    /// Parses `1` or a `*`-separated product of `var` / `var^k` factors (`k ≥ 1`, no repeats).
    pub fn parse_monomial(&self, text: &str) -> Result<Monomial, SyntaxError> {
        let err = |offset: usize, message: String| SyntaxError { offset, message };
        if text == "1" {
            return Ok(self.one());
        }
        let mut exps = vec![0u32; self.num_vars()];
        let mut offset = 0;
        for factor in text.split('*') {
            if factor.is_empty() {
                return Err(err(offset, "empty factor".into()));
            }
            let (name, power) = match factor.split_once('^') {
                Some((name, k)) => {
                    let k_offset = offset + name.len() + 1;
                    if k.is_empty() || !k.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(err(k_offset, format!("malformed exponent {k:?}")));
                    }
                    let k: u32 = k
                        .parse()
                        .map_err(|_| err(k_offset, format!("exponent {k} out of range")))?;
                    if k == 0 {
                        return Err(err(k_offset, "exponent must be at least 1".into()));
                    }
                    (name, k)
                }
                None => (factor, 1),
            };
            let idx = match self.index_of(name) {
                Some(i) => i,
                None if valid_name(name) => {
                    return Err(err(offset, format!("unknown variable {name}")))
                }
                None => return Err(err(offset, format!("malformed factor {factor:?}"))),
            };
            if exps[idx] != 0 {
                return Err(err(offset, format!("variable {name} repeated")));
            }
            exps[idx] = power;
            offset += factor.len() + 1;
        }
        Ok(Monomial::new(exps))
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".into();
        }
        m.exponents()
            .iter()
            .zip(&self.variables)
            .filter(|(e, _)| **e > 0)
            .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// An exponent vector. The ring is implicit; its length is the number of variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u32]>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps: exps.into_boxed_slice() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::new(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Self::new(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// Panics on exponent overflow.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a.checked_add(b).expect("monomial exponent overflow"))
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial::new(
            self.exps.iter().map(|&e| e.checked_mul(k).expect("monomial exponent overflow")).collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, u32::max)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, u32::min)
    }

    /// `self / gcd(self, u)`.
    pub fn strip(&self, u: &Monomial) -> Monomial {
        self.zip_with(u, u32::saturating_sub)
    }

    /// `self / u`, if `u` divides `self`.
    pub fn checked_div(&self, u: &Monomial) -> Option<Monomial> {
        u.divides(self).then(|| self.strip(u))
    }

    /// Bitmask of the variables occurring in the monomial.
    pub fn support(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |acc, (i, _)| acc | (1 << i))
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial::new(self.exps.iter().zip(other.exps.iter()).map(|(&a, &b)| f(a, b)).collect())
    }
}

/// Degree first, then descending exponent vector, so `x³ < x·y²` in `k[x,y]` sorts `x³` first.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A monomial ideal, stored by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Arc<RingSpec>,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// The ideal generated by `gens`, reduced to its minimal generating set.
    pub fn minimalize<I>(ring: &Arc<RingSpec>, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        if let Some(bad) = gens.iter().find(|g| g.num_vars() != ring.num_vars()) {
            return Err(Error::Structural(format!(
                "monomial with {} exponents in a ring with {} variables",
                bad.num_vars(),
                ring.num_vars()
            )));
        }
        Ok(Self::reduce(ring.clone(), gens))
    }

    fn reduce(ring: Arc<RingSpec>, mut gens: Vec<Monomial>) -> Self {
        gens.sort_unstable();
        gens.dedup();
        let mut kept: Vec<Monomial> = Vec::new();
        for g in gens {
            // Any proper divisor has strictly smaller degree and therefore is already kept.
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        MonomialIdeal { ring, gens: kept }
    }

    pub fn zero(ring: &Arc<RingSpec>) -> Self {
        MonomialIdeal { ring: ring.clone(), gens: Vec::new() }
    }

    pub fn unit(ring: &Arc<RingSpec>) -> Self {
        MonomialIdeal { ring: ring.clone(), gens: vec![ring.one()] }
    }

    /// The graded maximal ideal `(x₁,…,x_r)`.
    pub fn maximal(ring: &Arc<RingSpec>) -> Self {
        Self::reduce(ring.clone(), (0..ring.num_vars()).map(|i| ring.var(i)).collect())
    }

    pub fn principal(ring: &Arc<RingSpec>, m: Monomial) -> Result<Self> {
        Self::minimalize(ring, [m])
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(Monomial::is_one)
    }

    fn same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::Structural("ideals belong to different rings".into()))
        }
    }

    fn check_monomial(&self, u: &Monomial) -> Result<()> {
        if u.num_vars() == self.ring.num_vars() {
            Ok(())
        } else {
            Err(Error::Structural("monomial does not belong to the ring".into()))
        }
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<Self> {
        self.same_ring(other)?;
        Ok(Self::reduce(self.ring.clone(), self.gens.iter().chain(&other.gens).cloned().collect()))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<Self> {
        self.same_ring(other)?;
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.mul(b)))
            .collect();
        Ok(Self::reduce(self.ring.clone(), gens))
    }

    /// `Iⁿ` by repeated multiplication, minimalizing after every step. `I⁰` is the unit ideal.
    pub fn power(&self, n: u32) -> Self {
        let mut acc = Self::unit(&self.ring);
        for _ in 0..n {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<Self> {
        self.same_ring(other)?;
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)))
            .collect();
        Ok(Self::reduce(self.ring.clone(), gens))
    }

    /// `I : u`, generated by `g / gcd(g, u)`.
    pub fn colon(&self, u: &Monomial) -> Result<Self> {
        self.check_monomial(u)?;
        Ok(Self::reduce(self.ring.clone(), self.gens.iter().map(|g| g.strip(u)).collect()))
    }

    /// `I : J`, the intersection of `I : u` over the generators `u` of `J`.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<Self> {
        self.same_ring(other)?;
        let mut gens = other.gens.iter();
        let first = gens
            .next()
            .ok_or_else(|| Error::Domain("colon by the zero ideal".into()))?;
        let mut acc = self.colon(first)?;
        for u in gens {
            // I ⊆ I : J, so the intersection cannot shrink further.
            if acc == *self {
                break;
            }
            acc = acc.intersect(&self.colon(u)?)?;
        }
        Ok(acc)
    }

    /// `∪ₜ I : Jᵗ`, as the fixpoint of repeated colon by `J`.
    pub fn saturate(&self, other: &MonomialIdeal) -> Result<Self> {
        let mut current = self.clone();
        loop {
            let next = current.colon_ideal(other)?;
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    /// Saturation with respect to the graded maximal ideal.
    pub fn saturate_maximal(&self) -> Self {
        self.saturate(&Self::maximal(&self.ring)).expect("maximal ideal is nonzero")
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        self.contains_exponents(u.exponents())
    }

    pub(crate) fn contains_exponents(&self, exps: &[u32]) -> bool {
        self.gens
            .iter()
            .any(|g| g.exps.iter().zip(exps).all(|(a, b)| a <= b))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Generator supports with redundant supersets dropped.
    fn minimal_supports(&self) -> Vec<u64> {
        let mut supports: Vec<u64> = self.gens.iter().map(Monomial::support).collect();
        supports.sort_unstable_by_key(|s| (s.count_ones(), *s));
        supports.dedup();
        let mut kept: Vec<u64> = Vec::new();
        for s in supports {
            if !kept.iter().any(|k| k & s == *k) {
                kept.push(s);
            }
        }
        kept
    }

    /// Minimal primes `(x_i : i ∈ T)`, as variable bitmasks `T`: the minimal sets of
    /// variables meeting every generator's support. Empty for the unit ideal.
    pub fn minimal_primes(&self) -> Vec<u64> {
        fn branch(supports: &[u64], chosen: u64, out: &mut Vec<u64>) {
            match supports.iter().find(|&&s| s & chosen == 0) {
                None => out.push(chosen),
                Some(&s) => {
                    let mut rest = s;
                    while rest != 0 {
                        let bit = rest & rest.wrapping_neg();
                        rest &= rest - 1;
                        branch(supports, chosen | bit, out);
                    }
                }
            }
        }
        let supports = self.minimal_supports();
        if supports.contains(&0) {
            return Vec::new();
        }
        let mut covers = Vec::new();
        branch(&supports, 0, &mut covers);
        covers.sort_unstable_by_key(|s| (s.count_ones(), *s));
        covers.dedup();
        let mut minimal: Vec<u64> = Vec::new();
        for c in covers {
            if !minimal.iter().any(|m| m & c == *m) {
                minimal.push(c);
            }
        }
        minimal.sort_unstable();
        minimal
    }

    /// `dim S/I`: the largest number of variables that contain no generator's support.
    /// The zero ring (unit ideal) has dimension −1.
    pub fn krull_dim_quotient(&self) -> i64 {
        let r = self.ring.num_vars() as i64;
        self.minimal_primes()
            .iter()
            .map(|p| r - p.count_ones() as i64)
            .max()
            .unwrap_or(-1)
    }

    /// `d(I)`, the largest degree of a minimal generator; `None` for the zero ideal.
    pub fn max_gen_degree(&self) -> Option<u64> {
        self.gens.iter().map(Monomial::degree).max()
    }

    pub fn lcm(&self) -> Monomial {
        self.gens.iter().fold(self.ring.one(), |acc, g| acc.lcm(g))
    }

    pub fn lcm_degree(&self) -> u64 {
        self.lcm().degree()
    }

    pub fn format_gens(&self) -> Vec<String> {
        self.gens.iter().map(|g| self.ring.format_monomial(g)).collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.format_gens().join(", "))
    }
}
