//! Graded Betti numbers and Castelnuovo–Mumford regularity of monomial subquotients.
//!
//! `β_{i,j}(M) = dim_ℚ H_i(K(x₁,…,x_r) ⊗ M)_j`, the homology of the Koszul complex of the
//! variables tensored with `M = A/B`. For a monomial module the Koszul complex splits by
//! multidegree `α ∈ ℕʳ`: the piece `(K_i ⊗ M)_α` has basis `e_F ⊗ x^{α−F}` over the sets
//! `F` of `i` variables with `x^{α−F} ∈ A \ B`. Only multidegrees below the lcm of all
//! generators of `A` and `B` can carry homology (above it, the valid sets form a cone), so
//! [`betti_table`] runs over that box.
//!
//! [`betti`] computes a single `β_{i,j}` from the full bidegree pieces ([`KoszulPiece`]),
//! independently of the multidegree splitting.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::graded::Subquotient;
use crate::linalg::SparseMatrix;
use crate::monomial::Monomial;

/// Largest multidegree box the engine will enumerate.
const MAX_BOX: u128 = 1 << 32;

/// Nonzero graded Betti numbers `β_{i,j}`, keyed by `(i, j)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i64), u64>,
    search_bound: i64,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: i64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, i64, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The internal-degree cutoff `j ≤ search_bound` the table was computed under.
    pub fn search_bound(&self) -> i64 {
        self.search_bound
    }

    /// `Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.range((i, i64::MIN)..=(i, i64::MAX)).map(|(_, b)| b).sum()
    }

    /// `max{j − i : β_{i,j} ≠ 0}`, `-∞` for the empty table.
    pub fn regularity(&self) -> Degree {
        self.entries
            .keys()
            .map(|&(i, j)| Degree::Finite(j - i as i64))
            .max()
            .unwrap_or(Degree::NegInfinity)
    }

    /// Largest `i` with a nonzero entry.
    pub fn length(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }
}

/// Macaulay2-style layout: columns are homological degrees, rows are `j − i`.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(len) = self.length() else {
            return writeln!(f, "total: 0");
        };
        let rows: Vec<i64> = {
            let mut r: Vec<i64> = self.entries.keys().map(|&(i, j)| j - i as i64).collect();
            r.sort_unstable();
            r.dedup();
            r
        };
        let cell = |v: u64| if v == 0 { ".".to_string() } else { v.to_string() };
        let mut lines: Vec<Vec<String>> = Vec::new();
        lines.push(std::iter::once(String::new()).chain((0..=len).map(|i| i.to_string())).collect());
        lines.push(
            std::iter::once("total:".to_string())
                .chain((0..=len).map(|i| self.total(i).to_string()))
                .collect(),
        );
        for &row in &rows {
            lines.push(
                std::iter::once(format!("{row}:"))
                    .chain((0..=len).map(|i| cell(self.get(i, row + i as i64))))
                    .collect(),
            );
        }
        let ncols = len + 2;
        let widths: Vec<usize> =
            (0..ncols).map(|c| lines.iter().map(|l| l[c].len()).max().unwrap_or(0)).collect();
        for line in lines {
            let text: Vec<String> = line
                .iter()
                .zip(&widths)
                .map(|(s, w)| format!("{s:>w$}", w = *w))
                .collect();
            writeln!(f, "{}", text.join(" ").trim_end())?;
        }
        Ok(())
    }
}

/// `max(lcm_degree(gens A ∪ gens B), 1) + r`.
pub fn search_bound(m: &Subquotient) -> i64 {
    let lcm = m.top().lcm().lcm(&m.bottom().lcm());
    lcm.degree().max(1) as i64 + m.ring().num_vars() as i64
}

/// Koszul boundary rank data for one multidegree: the valid sets `F` grouped by size.
fn multidegree_betti(valid: &[Vec<u64>], out: &mut Vec<u64>) {
    let r = valid.len() - 1;
    let mut ranks = vec![0usize; r + 2];
    for i in 1..=r {
        if valid[i].is_empty() || valid[i - 1].is_empty() {
            continue;
        }
        let rows: HashMap<u64, usize> =
            valid[i - 1].iter().enumerate().map(|(k, &f)| (f, k)).collect();
        let mut d = SparseMatrix::new(valid[i - 1].len(), valid[i].len());
        for (col, &f) in valid[i].iter().enumerate() {
            let mut rest = f;
            let mut pos = 0;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest &= rest - 1;
                if let Some(&row) = rows.get(&(f & !bit)) {
                    d.add_entry(row, col, if pos % 2 == 0 { 1 } else { -1 });
                }
                pos += 1;
            }
        }
        ranks[i] = d.rank();
    }
    out.clear();
    out.extend((0..=r).map(|i| (valid[i].len() - ranks[i] - ranks[i + 1]) as u64));
}

type Accumulator = BTreeMap<(usize, i64), u64>;

/// The complete Betti table of `m`, over `0 ≤ i ≤ r` and `j ≤ search_bound(m)`.
pub fn betti_table(m: &Subquotient) -> BettiTable {
    let bound = search_bound(m);
    if m.is_zero() {
        return BettiTable { entries: BTreeMap::new(), search_bound: bound };
    }
    let r = m.ring().num_vars();
    let lcm = m.top().lcm().lcm(&m.bottom().lcm());
    let upper: Vec<usize> = lcm.exponents().iter().map(|&e| e as usize).collect();

    let mut strides = Vec::with_capacity(r);
    let mut size: u128 = 1;
    for &u in &upper {
        strides.push(size as usize);
        size *= u as u128 + 1;
    }
    assert!(size <= MAX_BOX, "multidegree box of {size} points is too large");
    let size = size as usize;

    let in_top = membership(m.top().gens(), &upper, &strides, size);
    let in_bottom = membership(m.bottom().gens(), &upper, &strides, size);
    let standard = |idx: usize| in_top[idx] && !in_bottom[idx];

    let entries = (0..size)
        .into_par_iter()
        .fold(
            || (Accumulator::new(), vec![Vec::new(); r + 1], Vec::new()),
            |(mut acc, mut valid, mut betti), idx| {
                if !in_top[idx] {
                    return (acc, valid, betti);
                }
                let alpha = decode(idx, &upper);
                let support = alpha
                    .iter()
                    .enumerate()
                    .filter(|(_, &a)| a > 0)
                    .fold(0u64, |s, (k, _)| s | (1 << k));
                valid.iter_mut().for_each(Vec::clear);
                let mut any = false;
                let mut sub = support;
                loop {
                    let offset: usize = (0..r).filter(|k| sub >> k & 1 == 1).map(|k| strides[k]).sum();
                    if standard(idx - offset) {
                        valid[sub.count_ones() as usize].push(sub);
                        any = true;
                    }
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & support;
                }
                if !any {
                    return (acc, valid, betti);
                }
                valid.iter_mut().for_each(|v| v.sort_unstable());
                multidegree_betti(&valid, &mut betti);
                let degree: i64 = alpha.iter().map(|&a| a as i64).sum();
                for (i, &b) in betti.iter().enumerate() {
                    if b > 0 {
                        *acc.entry((i, degree)).or_default() += b;
                    }
                }
                (acc, valid, betti)
            },
        )
        .map(|(acc, _, _)| acc)
        .reduce(Accumulator::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });
    BettiTable { entries, search_bound: bound }
}

fn decode(mut idx: usize, upper: &[usize]) -> Vec<usize> {
    upper
        .iter()
        .map(|&u| {
            let a = idx % (u + 1);
            idx /= u + 1;
            a
        })
        .collect()
}

/// Ideal membership for every point of the box, by propagating generator marks upward.
fn membership(gens: &[Monomial], upper: &[usize], strides: &[usize], size: usize) -> Vec<bool> {
    let mut inside = vec![false; size];
    for g in gens {
        let idx: usize = g.exponents().iter().zip(strides).map(|(&e, &s)| e as usize * s).sum();
        inside[idx] = true;
    }
    let mut alpha = vec![0usize; upper.len()];
    for idx in 0..size {
        if !inside[idx] {
            inside[idx] = (0..upper.len()).any(|k| alpha[k] > 0 && inside[idx - strides[k]]);
        }
        for (k, a) in alpha.iter_mut().enumerate() {
            if *a < upper[k] {
                *a += 1;
                break;
            }
            *a = 0;
        }
    }
    inside
}

/// The bidegree `(i, j)` piece `(K_i ⊗ M)_j` with its boundary into `(K_{i−1} ⊗ M)_j`.
#[derive(Clone, Debug)]
pub struct KoszulPiece {
    pub i: usize,
    pub j: i64,
    /// Pairs `(F, m)`: a variable set of size `i` as a bitmask and a standard monomial of degree
    /// `j − i`. Sorted by `F`, then by the module basis order.
    pub basis: Vec<(u64, Monomial)>,
    /// Rows index the basis of the `(i − 1, j)` piece.
    pub boundary: SparseMatrix,
}

fn koszul_basis(m: &Subquotient, i: usize, j: i64) -> Vec<(u64, Monomial)> {
    let r = m.ring().num_vars();
    if i > r {
        return Vec::new();
    }
    let monomials = m.basis(j - i as i64);
    if monomials.is_empty() {
        return Vec::new();
    }
    let mut sets: Vec<u64> = (0u64..1 << r).filter(|f| f.count_ones() as usize == i).collect();
    sets.sort_unstable();
    sets.into_iter()
        .flat_map(|f| monomials.iter().map(move |mono| (f, mono.clone())))
        .collect()
}

impl KoszulPiece {
    pub fn new(m: &Subquotient, i: usize, j: i64) -> Self {
        let basis = koszul_basis(m, i, j);
        let target = if i == 0 { Vec::new() } else { koszul_basis(m, i - 1, j) };
        let rows: HashMap<(u64, &Monomial), usize> =
            target.iter().enumerate().map(|(k, (f, mono))| ((*f, mono), k)).collect();
        let r = m.ring().num_vars();
        let mut boundary = SparseMatrix::new(target.len(), basis.len());
        for (col, (f, mono)) in basis.iter().enumerate() {
            let mut pos = 0;
            for k in 0..r {
                if f >> k & 1 == 0 {
                    continue;
                }
                let image = mono.mul(&m.ring().var(k));
                if !m.bottom().contains(&image) {
                    let row = rows[&(f & !(1 << k), &image)];
                    boundary.add_entry(row, col, if pos % 2 == 0 { 1 } else { -1 });
                }
                pos += 1;
            }
        }
        KoszulPiece { i, j, basis, boundary }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// `β_{i,j}(M) = dim ker ∂_{i,j} − rank ∂_{i+1,j}`, from the full bidegree pieces.
pub fn betti(m: &Subquotient, i: usize, j: i64) -> u64 {
    let piece = KoszulPiece::new(m, i, j);
    let kernel = piece.dim() - piece.boundary.rank();
    let image = KoszulPiece::new(m, i + 1, j).boundary.rank();
    (kernel - image) as u64
}

/// Castelnuovo–Mumford regularity, uncached. See [`Engine::regularity`].
pub fn regularity(m: &Subquotient) -> Degree {
    Engine::new().regularity(m)
}

/// Regularity computations with an optional Betti table cache.
#[derive(Debug, Default)]
pub struct Engine {
    cache: Option<BettiCache>,
}

impl Engine {
    pub fn new() -> Self {
        Engine { cache: None }
    }

    pub fn with_cache(cache: BettiCache) -> Self {
        Engine { cache: Some(cache) }
    }

    pub fn cache(&self) -> Option<&BettiCache> {
        self.cache.as_ref()
    }

    pub fn betti_table(&self, m: &Subquotient) -> BettiTable {
        let Some(cache) = &self.cache else {
            return betti_table(m);
        };
        if let Some(table) = cache.get(m) {
            return table;
        }
        let table = betti_table(m);
        cache.insert(m, &table);
        table
    }

    /// `-∞` for the zero module; the top degree for Artinian modules; otherwise
    /// `max{j − i : β_{i,j} ≠ 0}`.
    pub fn regularity(&self, m: &Subquotient) -> Degree {
        if m.is_zero() {
            return Degree::NegInfinity;
        }
        if m.is_artinian() {
            return m.top_degree().expect("module is Artinian");
        }
        self.betti_table(m).regularity()
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct CachedTable {
    search_bound: i64,
    entries: Vec<(usize, i64, u64)>,
}

#[derive(Debug, Default, Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    tables: BTreeMap<String, CachedTable>,
}

/// Betti tables keyed by a SHA-256 of the canonical text of `(ring, A, B)`, optionally backed
/// by a JSON file.
#[derive(Debug, Default)]
pub struct BettiCache {
    path: Option<PathBuf>,
    tables: Mutex<BTreeMap<String, BettiTable>>,
}

impl BettiCache {
    pub fn in_memory() -> Self {
        BettiCache::default()
    }

    /// Loads `path` if it exists; [`BettiCache::persist`] writes back to it.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut tables = BTreeMap::new();
        if path.exists() {
            let text = std::fs::read_to_string(&path)?;
            if !text.trim().is_empty() {
                let file: CacheFile = serde_json::from_str(&text)
                    .map_err(|e| Error::Io(format!("corrupt cache {}: {e}", path.display())))?;
                for (key, t) in file.tables {
                    let entries = t.entries.into_iter().map(|(i, j, b)| ((i, j), b)).collect();
                    tables.insert(key, BettiTable { entries, search_bound: t.search_bound });
                }
            }
        }
        Ok(BettiCache { path: Some(path), tables: Mutex::new(tables) })
    }

    pub fn key(m: &Subquotient) -> String {
        let ring = m.ring();
        let text = format!(
            "ring {}\ntop {}\nbottom {}\n",
            ring.variables().join(" "),
            m.top().format_gens().join(" "),
            m.bottom().format_gens().join(" ")
        );
        hex::encode(Sha256::digest(text.as_bytes()))
    }

    pub fn get(&self, m: &Subquotient) -> Option<BettiTable> {
        self.tables.lock().unwrap().get(&Self::key(m)).cloned()
    }

    pub fn insert(&self, m: &Subquotient, table: &BettiTable) {
        self.tables.lock().unwrap().insert(Self::key(m), table.clone());
    }

    pub fn len(&self) -> usize {
        self.tables.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Writes the cache to its backing file; a no-op for in-memory caches.
    pub fn persist(&self) -> Result<()> {
        let Some(path) = &self.path else {
            return Ok(());
        };
        let tables = self.tables.lock().unwrap();
        let file = CacheFile {
            version: 1,
            tables: tables
                .iter()
                .map(|(k, t)| {
                    let cached = CachedTable { search_bound: t.search_bound, entries: t.iter().collect() };
                    (k.clone(), cached)
                })
                .collect(),
        };
        let tmp = path.with_extension("tmp");
        std::fs::write(&tmp, serde_json::to_string(&file)?)?;
        std::fs::rename(&tmp, path)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::monomial::{MonomialIdeal, RingSpec};

    fn ideal(ring: &Arc<RingSpec>, gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::minimalize(ring, gens.iter().map(|g| ring.parse_monomial(g).unwrap()))
            .unwrap()
    }

    fn table(t: &BettiTable) -> Vec<(usize, i64, u64)> {
        t.iter().collect()
    }

    #[test]
    fn koszul_resolution_of_regular_sequence() {
        let r = RingSpec::new(["x", "y"]).unwrap();
        let m = Subquotient::cyclic(MonomialIdeal::maximal(&r));
        assert_eq!(table(&betti_table(&m)), vec![(0, 0, 1), (1, 1, 2), (2, 2, 1)]);
        assert_eq!(betti(&m, 0, 0), 1);
        assert_eq!(betti(&m, 1, 1), 2);
        assert_eq!(betti(&m, 2, 2), 1);
        assert_eq!(betti(&m, 1, 2), 0);
    }

    #[test]
    fn square_of_maximal_ideal() {
        // S/(x,y)² has the Eagon–Northcott resolution S ← S(−2)³ ← S(−3)².
        let r = RingSpec::new(["x", "y"]).unwrap();
        let m = Subquotient::cyclic(MonomialIdeal::maximal(&r).power(2));
        assert_eq!(table(&betti_table(&m)), vec![(0, 0, 1), (1, 2, 3), (2, 3, 2)]);
        assert_eq!(betti(&m, 1, 2), 3);
        assert_eq!(betti(&m, 2, 3), 2);
        assert_eq!(betti_table(&m).regularity(), Degree::Finite(1));
        assert_eq!(regularity(&m), Degree::Finite(1));
    }

    #[test]
    fn zero_module_has_empty_table() {
        let r = RingSpec::new(["x", "y"]).unwrap();
        let a = ideal(&r, &["x^2", "y"]);
        let m = Subquotient::new(a.clone(), a).unwrap();
        assert!(betti_table(&m).is_empty());
        assert_eq!(regularity(&m), Degree::NegInfinity);
        assert_eq!(betti(&m, 0, 2), 0);
    }

    #[test]
    fn complete_intersection_regularity() {
        let r = RingSpec::new(["x", "y"]).unwrap();
        let m = Subquotient::cyclic(ideal(&r, &["x^3", "y^2"]));
        assert_eq!(regularity(&m), Degree::Finite(3));
        assert_eq!(betti_table(&m).regularity(), Degree::Finite(3));
    }

    #[test]
    fn non_artinian_cyclic_module() {
        // S/(x²,xy): β = (1; 2 in degree 2; 1 in degree 3), reg 1.
        let r = RingSpec::new(["x", "y"]).unwrap();
        let m = Subquotient::cyclic(ideal(&r, &["x^2", "x*y"]));
        assert_eq!(table(&betti_table(&m)), vec![(0, 0, 1), (1, 2, 2), (2, 3, 1)]);
        assert_eq!(regularity(&m), Degree::Finite(1));
    }

    #[test]
    fn generators_appear_in_degree_zero_column() {
        let r = RingSpec::new(["x", "y", "z"]).unwrap();
        let a = ideal(&r, &["x", "y^2"]);
        let b = ideal(&r, &["x^2", "x*y", "y^3", "x*z^2"]);
        let m = Subquotient::new(a, b).unwrap();
        let t = betti_table(&m);
        assert_eq!(t.get(0, 1), 1);
        assert_eq!(t.get(0, 2), 1);
        assert_eq!(t.total(0), 2);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let r = RingSpec::new(["x", "y", "z"]).unwrap();
        let m = Subquotient::new(
            ideal(&r, &["x", "y*z"]),
            ideal(&r, &["x^3", "x*y^2", "y^2*z^2", "x*z^3"]),
        )
        .unwrap();
        for j in 0..8 {
            for i in 2..=3 {
                let upper = KoszulPiece::new(&m, i, j);
                let lower = KoszulPiece::new(&m, i - 1, j);
                assert!(lower.boundary.compose(&upper.boundary).is_zero(), "i={i} j={j}");
            }
        }
    }

    #[test]
    fn display_layout() {
        let r = RingSpec::new(["x", "y"]).unwrap();
        let m = Subquotient::cyclic(MonomialIdeal::maximal(&r));
        let text = betti_table(&m).to_string();
        assert_eq!(text, "       0 1 2\ntotal: 1 2 1\n    0: 1 2 1\n");
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("betti.json");
        let r = RingSpec::new(["x", "y"]).unwrap();
        let m = Subquotient::cyclic(ideal(&r, &["x^2", "x*y"]));
        {
            let engine = Engine::with_cache(BettiCache::open(&path).unwrap());
            assert_eq!(engine.regularity(&m), Degree::Finite(1));
            engine.cache().unwrap().persist().unwrap();
        }
        let cache = BettiCache::open(&path).unwrap();
        assert_eq!(cache.len(), 1);
        assert_eq!(cache.get(&m).unwrap(), betti_table(&m));
    }
}
