//! Exact rational vectors, matrices, and subspaces.
//!
//! Everything here is over arbitrary-precision rationals; there is no
//! rounding anywhere. Subspaces are kept as reduced-row-echelon bases, which
//! makes the basis of a given span canonical: two equal spans produce
//! identical basis matrices.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number, always in canonical form
/// (reduced, positive denominator).
pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rat_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Rational `num/den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),
}

/// Dense vector of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QVector {
    entries: Vec<Rational>,
}

impl QVector {
    pub fn zeros(dim: usize) -> Self {
        QVector { entries: vec![Rational::zero(); dim] }
    }

    pub fn from_entries(entries: Vec<Rational>) -> Self {
        QVector { entries }
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        QVector { entries: entries.iter().map(|&v| rat_int(v)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.entries[i]
    }

    pub fn set(&mut self, i: usize, v: Rational) {
        self.entries[i] = v;
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Index of the first nonzero entry, if any.
    pub fn leading_index(&self) -> Option<usize> {
        self.entries.iter().position(|e| !e.is_zero())
    }

    /// Sum of all coordinates.
    pub fn coordinate_sum(&self) -> Rational {
        let mut acc = Rational::zero();
        for e in &self.entries {
            acc += e;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> QVector {
        QVector { entries: self.entries.iter().map(|e| e * c).collect() }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &QVector, c: &Rational) {
        assert_eq!(self.dim(), other.dim());
        if c.is_zero() {
            return;
        }
        for (a, b) in self.entries.iter_mut().zip(other.entries.iter()) {
            if !b.is_zero() {
                *a += b * c;
            }
        }
    }

    pub fn add(&self, other: &QVector) -> QVector {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn sub(&self, other: &QVector) -> QVector {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    pub fn dot(&self, other: &QVector) -> Rational {
        assert_eq!(self.dim(), other.dim());
        let mut acc = Rational::zero();
        for (a, b) in self.entries.iter().zip(other.entries.iter()) {
            if !a.is_zero() && !b.is_zero() {
                acc += a * b;
            }
        }
        acc
    }
}

impl std::ops::Index<usize> for QVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.entries[i]
    }
}

/// Subspace of Q^n stored as a reduced-row-echelon basis: rows nonzero,
/// pivot columns strictly increasing, pivot entries 1, pivot columns zero
/// in every other row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSubspace {
    ambient: usize,
    rows: Vec<QVector>,
    pivots: Vec<usize>,
}

impl QSubspace {
    pub fn new(ambient: usize) -> Self {
        QSubspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[QVector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_dim(&self, v: &QVector) -> Result<(), LinalgError> {
        if v.dim() != self.ambient {
            return Err(LinalgError::DimensionMismatch { expected: self.ambient, got: v.dim() });
        }
        Ok(())
    }

    /// Reduce `v` against the current basis (in place).
    fn reduce(&self, v: &mut QVector) {
        for (row, &p) in self.rows.iter().zip(self.pivots.iter()) {
            let c = v[p].clone();
            if !c.is_zero() {
                v.add_scaled(row, &(-c));
            }
        }
    }

    /// Insert `v` into the span. Returns whether the dimension grew.
    pub fn insert(&mut self, v: QVector) -> Result<bool, LinalgError> {
        self.check_dim(&v)?;
        let mut v = v;
        self.reduce(&mut v);
        let pivot = match v.leading_index() {
            Some(p) => p,
            None => return Ok(false),
        };
        // Normalize the pivot entry to 1, then clear that column above.
        let inv = Rational::one() / v[pivot].clone();
        let v = v.scale(&inv);
        for (row, _) in self.rows.iter_mut().zip(self.pivots.iter()) {
            let c = row[pivot].clone();
            if !c.is_zero() {
                row.add_scaled(&v, &(-c));
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.rows.insert(at, v);
        self.pivots.insert(at, pivot);
        Ok(true)
    }

    pub fn contains(&self, v: &QVector) -> Result<bool, LinalgError> {
        self.check_dim(v)?;
        let mut v = v.clone();
        self.reduce(&mut v);
        Ok(v.is_zero())
    }

    /// Smallest subspace containing both operands.
    pub fn sum(&self, other: &QSubspace) -> Result<QSubspace, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        let mut out = self.clone();
        for row in &other.rows {
            out.insert(row.clone())?;
        }
        Ok(out)
    }

    /// Whether every basis vector of `self` lies in `other`.
    pub fn is_subspace_of(&self, other: &QSubspace) -> Result<bool, LinalgError> {
        for row in &self.rows {
            if !other.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Dense rational matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        for row in &rows {
            if row.len() != c {
                return Err(LinalgError::ShapeMismatch("ragged rows".into()));
            }
        }
        Ok(QMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, other: &QMatrix) -> Result<QMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::ShapeMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j).clone() + a * b;
                        out.set(i, j, cur);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &QVector) -> Result<QVector, LinalgError> {
        if self.cols != v.dim() {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, got: v.dim() });
        }
        let mut out = QVector::zeros(self.rows);
        for i in 0..self.rows {
            let mut acc = Rational::zero();
            for j in 0..self.cols {
                let a = self.get(i, j);
                if !a.is_zero() {
                    acc += a * v.get(j);
                }
            }
            out.set(i, acc);
        }
        Ok(out)
    }

    pub fn pow(&self, e: usize) -> Result<QMatrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::ShapeMismatch("pow of non-square matrix".into()));
        }
        let mut acc = QMatrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn trace(&self) -> Rational {
        let n = self.rows.min(self.cols);
        let mut acc = Rational::zero();
        for i in 0..n {
            acc += self.get(i, i);
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    pub fn add(&self, other: &QMatrix) -> Result<QMatrix, LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::ShapeMismatch("add of unequal shapes".into()));
        }
        let data = self.data.iter().zip(other.data.iter()).map(|(a, b)| a + b).collect();
        Ok(QMatrix { rows: self.rows, cols: self.cols, data })
    }
}

/// `trace(a * b)` in O(rows * cols) without forming the product.
pub fn trace_of_product(a: &QMatrix, b: &QMatrix) -> Result<Rational, LinalgError> {
    if a.ncols() != b.nrows() || a.nrows() != b.ncols() {
        return Err(LinalgError::ShapeMismatch("trace_of_product shapes".into()));
    }
    let mut acc = Rational::zero();
    for i in 0..a.nrows() {
        for j in 0..a.ncols() {
            let x = a.get(i, j);
            if !x.is_zero() {
                acc += x * b.get(j, i);
            }
        }
    }
    Ok(acc)
}

/// Signed magnitude helper used by tests and displays.
pub fn rat_abs(v: &Rational) -> Rational {
    v.abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rational_canonical_form() {
        let v = rat(6, -4);
        assert_eq!(v, rat(-3, 2));
        assert!(v.denom().to_i64().unwrap() > 0);
        assert_eq!(rat(0, 7), rat_int(0));
        assert_eq!(*rat(0, 7).denom(), BigInt::from(1));
    }

    #[test]
    fn rational_print_parse_round_trip() {
        for v in [rat(3, 7), rat(-22, 5), rat_int(0), rat_int(41), rat(1, 999983)] {
            let s = v.to_string();
            let back: Rational = s.parse().unwrap();
            assert_eq!(back, v, "round trip failed for {s}");
        }
    }

    #[test]
    fn insert_zero_vector_does_not_grow() {
        let mut sub = QSubspace::new(4);
        assert!(!sub.insert(QVector::zeros(4)).unwrap());
        assert_eq!(sub.dim(), 0);
    }

    #[test]
    fn insert_into_empty_gives_dim_one() {
        let mut sub = QSubspace::new(3);
        assert!(sub.insert(QVector::from_ints(&[0, 2, 4])).unwrap());
        assert_eq!(sub.dim(), 1);
        // Canonical form scales the leading entry to 1.
        assert_eq!(*sub.basis()[0].get(1), rat_int(1));
        assert_eq!(*sub.basis()[0].get(2), rat_int(2));
    }

    #[test]
    fn insert_vector_already_in_span() {
        let mut sub = QSubspace::new(3);
        sub.insert(QVector::from_ints(&[1, 1, 0])).unwrap();
        sub.insert(QVector::from_ints(&[0, 1, 1])).unwrap();
        assert!(!sub.insert(QVector::from_ints(&[2, 3, 1])).unwrap());
        assert_eq!(sub.dim(), 2);
    }

    #[test]
    fn contains_zero_and_sum_idempotent() {
        let mut a = QSubspace::new(4);
        a.insert(QVector::from_ints(&[1, 2, 3, 4])).unwrap();
        a.insert(QVector::from_ints(&[0, 0, 1, 1])).unwrap();
        assert!(a.contains(&QVector::zeros(4)).unwrap());
        let aa = a.sum(&a).unwrap();
        assert_eq!(aa, a);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let mut a = QSubspace::new(4);
        assert_eq!(
            a.insert(QVector::zeros(3)).unwrap_err(),
            LinalgError::DimensionMismatch { expected: 4, got: 3 }
        );
    }

    /// Independent Gaussian elimination used as an oracle; deliberately does
    /// not go through QSubspace.
    fn oracle_rank(rows: &[Vec<i64>]) -> usize {
        let mut m: Vec<Vec<Rational>> =
            rows.iter().map(|r| r.iter().map(|&v| rat_int(v)).collect()).collect();
        let nrows = m.len();
        let ncols = if nrows == 0 { 0 } else { m[0].len() };
        let mut rank = 0;
        for col in 0..ncols {
            let piv = (rank..nrows).find(|&r| !m[r][col].is_zero());
            let piv = match piv {
                Some(p) => p,
                None => continue,
            };
            m.swap(rank, piv);
            for r in 0..nrows {
                if r != rank && !m[r][col].is_zero() {
                    let f = m[r][col].clone() / m[rank][col].clone();
                    for c in col..ncols {
                        let delta = f.clone() * m[rank][c].clone();
                        m[r][c] -= delta;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// dim(A∩B) via the kernel of [A^T | B^T]: a kernel element encodes a
    /// linear combination of A-rows equal to a combination of B-rows.
    fn oracle_intersection_dim(a_rows: &[Vec<i64>], b_rows: &[Vec<i64>], ambient: usize) -> usize {
        // Intersection dim = rank(A) + rank(B) - rank(A stacked with B),
        // computed entirely with the oracle elimination.
        let ra = oracle_rank(a_rows);
        let rb = oracle_rank(b_rows);
        let mut stacked: Vec<Vec<i64>> = a_rows.to_vec();
        stacked.extend_from_slice(b_rows);
        if stacked.is_empty() {
            stacked.push(vec![0; ambient]);
        }
        let rab = oracle_rank(&stacked);
        ra + rb - rab
    }

    #[test]
    fn sum_dimension_formula_against_kernel_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let ambient = rng.gen_range(2..6);
            let na = rng.gen_range(1..4);
            let nb = rng.gen_range(1..4);
            let sample = |rng: &mut ChaCha8Rng, k: usize| -> Vec<Vec<i64>> {
                (0..k).map(|_| (0..ambient).map(|_| rng.gen_range(-2..3)).collect()).collect()
            };
            let a_rows = sample(&mut rng, na);
            let b_rows = sample(&mut rng, nb);

            let mut a = QSubspace::new(ambient);
            for r in &a_rows {
                a.insert(QVector::from_ints(r)).unwrap();
            }
            let mut b = QSubspace::new(ambient);
            for r in &b_rows {
                b.insert(QVector::from_ints(r)).unwrap();
            }
            let s = a.sum(&b).unwrap();
            let inter = oracle_intersection_dim(&a_rows, &b_rows, ambient);
            assert_eq!(s.dim(), a.dim() + b.dim() - inter);
        }
    }

    #[test]
    fn matrix_mul_and_trace() {
        let a = QMatrix::from_rows(vec![
            vec![rat_int(1), rat_int(2)],
            vec![rat_int(3), rat_int(4)],
        ])
        .unwrap();
        let b = QMatrix::from_rows(vec![
            vec![rat_int(0), rat_int(1)],
            vec![rat_int(1), rat_int(0)],
        ])
        .unwrap();
        let ab = a.mul(&b).unwrap();
        assert_eq!(*ab.get(0, 0), rat_int(2));
        assert_eq!(*ab.get(0, 1), rat_int(1));
        assert_eq!(trace_of_product(&a, &b).unwrap(), ab.trace());
        assert_eq!(a.pow(0).unwrap(), QMatrix::identity(2));
    }

    proptest! {
        /// Two equal spans produce identical RREF bases regardless of the
        /// insertion order.
        #[test]
        fn rref_canonical_under_permutation(
            rows in proptest::collection::vec(
                proptest::collection::vec(-3i64..4, 4), 1..5),
            seed in 0u64..1000,
        ) {
            let mut a = QSubspace::new(4);
            for r in &rows {
                a.insert(QVector::from_ints(r)).unwrap();
            }
            let mut shuffled = rows.clone();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for i in (1..shuffled.len()).rev() {
                let j = rng.gen_range(0..=i);
                shuffled.swap(i, j);
            }
            let mut b = QSubspace::new(4);
            for r in &shuffled {
                b.insert(QVector::from_ints(r)).unwrap();
            }
            prop_assert_eq!(a, b);
        }

        #[test]
        fn insert_then_contains(
            rows in proptest::collection::vec(
                proptest::collection::vec(-3i64..4, 3), 1..4),
        ) {
            let mut sub = QSubspace::new(3);
            for r in &rows {
                sub.insert(QVector::from_ints(r)).unwrap();
            }
            for r in &rows {
                prop_assert!(sub.contains(&QVector::from_ints(r)).unwrap());
            }
        }
    }
}
