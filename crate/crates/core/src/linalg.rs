//! Exact rank of sparse integer matrices.
//!
//! Columns are reduced fraction-free against pivots keyed by their leading row, dividing each
//! intermediate column by the gcd of its entries. Arithmetic runs in checked `i64` and is
//! redone in `BigInt` if any intermediate value overflows, so the rank is always the exact rank
//! over ℚ.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

/// Column-major sparse matrix with integer entries.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    cols: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn new(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, cols: vec![Vec::new(); ncols] }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    /// Adds `value` to entry `(row, col)`.
    pub fn add_entry(&mut self, row: usize, col: usize, value: i64) {
        assert!(row < self.nrows && col < self.cols.len(), "entry out of bounds");
        let column = &mut self.cols[col];
        match column.binary_search_by_key(&row, |&(r, _)| r) {
            Ok(pos) => {
                column[pos].1 += value;
                if column[pos].1 == 0 {
                    column.remove(pos);
                }
            }
            Err(pos) if value != 0 => column.insert(pos, (row, value)),
            Err(_) => {}
        }
    }

    pub fn column(&self, col: usize) -> &[(usize, i64)] {
        &self.cols[col]
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    /// `self · rhs`.
    pub fn compose(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols(), rhs.nrows, "dimension mismatch");
        let mut out = SparseMatrix::new(self.nrows, rhs.ncols());
        for (j, col) in rhs.cols.iter().enumerate() {
            for &(k, b) in col {
                for &(i, a) in &self.cols[k] {
                    out.add_entry(i, j, a * b);
                }
            }
        }
        out
    }

    /// Rank over ℚ.
    pub fn rank(&self) -> usize {
        let columns = self.elimination_order();
        let small: Vec<Vec<(usize, i64)>> = columns.iter().map(|&c| self.cols[c].clone()).collect();
        if let Some(rank) = reduce(small) {
            return rank;
        }
        let big = columns
            .iter()
            .map(|&c| self.cols[c].iter().map(|&(r, v)| (r, BigInt::from(v))).collect())
            .collect();
        reduce(big).expect("arbitrary precision cannot overflow")
    }

    /// Sparsest columns first (least fill), ties broken by column index.
    fn elimination_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.cols.len()).filter(|&c| !self.cols[c].is_empty()).collect();
        order.sort_by_key(|&c| (self.cols[c].len(), c));
        order
    }
}

trait Coefficient: Clone + Integer + Signed {
    /// `a·x − b·y`, or `None` on overflow.
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
}

impl Coefficient for i64 {
    fn cross(a: &i64, x: &i64, b: &i64, y: &i64) -> Option<i64> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
}

impl Coefficient for BigInt {
    fn cross(a: &BigInt, x: &BigInt, b: &BigInt, y: &BigInt) -> Option<BigInt> {
        Some(a * x - b * y)
    }
}

type SparseVec<T> = Vec<(usize, T)>;

/// Rank of the span of `columns`; `None` if `T` overflowed.
fn reduce<T: Coefficient>(columns: Vec<SparseVec<T>>) -> Option<usize> {
    let mut pivots: HashMap<usize, SparseVec<T>> = HashMap::new();
    for mut v in columns {
        while let Some((lead, _)) = v.first() {
            let Some(pivot) = pivots.get(lead) else {
                pivots.insert(*lead, v);
                break;
            };
            v = eliminate(&v, pivot)?;
        }
    }
    Some(pivots.len())
}

/// `p₀·v − v₀·p`, where both vectors share their leading row; the result is divided by the
/// gcd of its entries.
fn eliminate<T: Coefficient>(v: &SparseVec<T>, p: &SparseVec<T>) -> Option<SparseVec<T>> {
    let pv = &p[0].1;
    let vv = &v[0].1;
    let zero = T::zero();
    let mut out: SparseVec<T> = Vec::with_capacity(v.len() + p.len());
    let (mut i, mut j) = (1, 1);
    while i < v.len() || j < p.len() {
        let vr = v.get(i).map_or(usize::MAX, |e| e.0);
        let pr = p.get(j).map_or(usize::MAX, |e| e.0);
        let (row, x, y) = if vr < pr {
            i += 1;
            (vr, &v[i - 1].1, &zero)
        } else if pr < vr {
            j += 1;
            (pr, &zero, &p[j - 1].1)
        } else {
            i += 1;
            j += 1;
            (vr, &v[i - 1].1, &p[j - 1].1)
        };
        let entry = T::cross(pv, x, vv, y)?;
        if !entry.is_zero() {
            out.push((row, entry));
        }
    }
    let g = out.iter().fold(T::zero(), |g, (_, x)| g.gcd(x));
    if !g.is_zero() && g.abs() != T::one() {
        for (_, x) in &mut out {
            *x = x.div_floor(&g);
        }
    }
    Some(out)
}
